//! Univariate polynomials with number-field coefficients, plus Trager's
//! norm-based factorization (used to decide whether characteristic
//! polynomials split over the working field).

use super::{norm_poly, Field, FieldElem};
use crate::error::{Error, Result};
use crate::exactpoly::{factor_rational, is_squarefree, QPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial over a number field, coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KPoly {
    field: Field,
    coeffs: Vec<FieldElem>,
}

impl KPoly {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        KPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Self {
        KPoly::new(field, vec![])
    }

    pub fn one(field: &Field) -> Self {
        KPoly::new(field, vec![FieldElem::one(field)])
    }

    pub fn x(field: &Field) -> Self {
        KPoly::new(field, vec![FieldElem::zero(field), FieldElem::one(field)])
    }

    /// Lifts a rational polynomial into K[y].
    pub fn from_qpoly(field: &Field, f: &QPoly) -> Self {
        KPoly::new(
            field,
            f.coeffs()
                .iter()
                .map(|c| FieldElem::from_rational(field, c.clone()))
                .collect(),
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElem {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| FieldElem::zero(&self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    /// When every coefficient is rational, the underlying QPoly.
    pub fn as_qpoly(&self) -> Option<QPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.as_rational()?);
        }
        Some(QPoly::new(out))
    }

    pub fn monic(&self) -> Result<KPoly> {
        match self.leading() {
            None => Ok(self.clone()),
            Some(lc) => {
                let inv = lc.inv()?;
                Ok(KPoly::new(
                    &self.field,
                    self.coeffs.iter().map(|c| c * &inv).collect(),
                ))
            }
        }
    }

    pub fn derivative(&self) -> KPoly {
        if self.coeffs.len() <= 1 {
            return KPoly::zero(&self.field);
        }
        KPoly::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| {
                    let k = FieldElem::from_rational(
                        &self.field,
                        BigRational::from_integer(BigInt::from(i as i64)),
                    );
                    c * &k
                })
                .collect(),
        )
    }

    pub fn divrem(&self, g: &KPoly) -> Result<(KPoly, KPoly)> {
        let dg = g.degree().ok_or(Error::ZeroPolynomialDivision)?;
        let lc_inv = g.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() < dg + 1 {
            return Ok((KPoly::zero(&self.field), self.clone()));
        }
        let mut quo = vec![FieldElem::zero(&self.field); rem.len() - dg];
        for i in (dg..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lc_inv;
            for (j, gc) in g.coeffs.iter().enumerate() {
                let t = gc * &q;
                rem[i - dg + j] = &rem[i - dg + j] - &t;
            }
            quo[i - dg] = q;
        }
        Ok((KPoly::new(&self.field, quo), KPoly::new(&self.field, rem)))
    }

    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let mut acc = FieldElem::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Substitutes `y -> y + c`.
    pub fn shift_arg(&self, c: &FieldElem) -> KPoly {
        let lin = KPoly::new(
            &self.field,
            vec![c.clone(), FieldElem::one(&self.field)],
        );
        let mut acc = KPoly::zero(&self.field);
        for coeff in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &KPoly::new(&self.field, vec![coeff.clone()]);
        }
        acc
    }
}

impl Add for &KPoly {
    type Output = KPoly;
    fn add(self, rhs: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        KPoly::new(&self.field, out)
    }
}

impl Sub for &KPoly {
    type Output = KPoly;
    fn sub(self, rhs: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) - &rhs.coeff(i));
        }
        KPoly::new(&self.field, out)
    }
}

impl Neg for &KPoly {
    type Output = KPoly;
    fn neg(self) -> KPoly {
        KPoly::new(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &KPoly {
    type Output = KPoly;
    fn mul(self, rhs: &KPoly) -> KPoly {
        if self.is_zero() || rhs.is_zero() {
            return KPoly::zero(&self.field);
        }
        let mut out = vec![FieldElem::zero(&self.field); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        KPoly::new(&self.field, out)
    }
}

impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({})", c),
                1 => format!("({})*y", c),
                _ => format!("({})*y^{}", c, i),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Monic gcd over K[y] via the Euclidean algorithm.
pub fn kpoly_gcd(a: &KPoly, b: &KPoly) -> Result<KPoly> {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = a.divrem(&b)?.1;
        a = b;
        b = r;
    }
    a.monic()
}

pub fn kpoly_squarefree_part(f: &KPoly) -> Result<KPoly> {
    let g = kpoly_gcd(f, &f.derivative())?;
    let (q, r) = f.divrem(&g)?;
    debug_assert!(r.is_zero());
    q.monic()
}

/// Trager factorization of a monic squarefree polynomial over K: shift the
/// argument by integer multiples of the generator until the norm polynomial
/// is squarefree, factor the norm over Q, and pull the factors back by gcd.
pub fn factor_squarefree_over_field(q: &KPoly) -> Result<Vec<KPoly>> {
    let field = q.field().clone();
    if q.degree() == Some(1) {
        return Ok(vec![q.clone()]);
    }
    let theta = FieldElem::generator(&field);
    for shift in shift_candidates() {
        let s = FieldElem::from_rational(&field, BigRational::from_integer(BigInt::from(shift)));
        let sh = &s * &theta;
        let q_shifted = q.shift_arg(&(-&sh)); // q(y - s*theta)
        let norm = norm_poly(&field, &q_shifted)?;
        if !is_squarefree(&norm) {
            continue;
        }
        let fact = factor_rational(&norm)?;
        let mut out = Vec::new();
        for (g, mult) in &fact.factors {
            debug_assert_eq!(*mult, 1);
            let g_lifted = KPoly::from_qpoly(&field, g).shift_arg(&sh); // g(y + s*theta)
            let factor = kpoly_gcd(q, &g_lifted)?;
            if factor.degree().unwrap_or(0) >= 1 {
                out.push(factor);
            }
        }
        let total: usize = out.iter().map(|g| g.degree().unwrap()).sum();
        debug_assert_eq!(total, q.degree().unwrap());
        return Ok(out);
    }
    Err(Error::Precondition(
        "no squarefree norm found while factoring over the field",
    ))
}

fn shift_candidates() -> impl Iterator<Item = i64> {
    (0..100).map(|k: i64| {
        if k % 2 == 0 {
            k / 2
        } else {
            -(k / 2) - 1
        }
    })
}

/// Full factorization over K of a nonzero polynomial: monic irreducible
/// factors with multiplicities (the leading coefficient is dropped).
pub fn factor_over_field(f: &KPoly) -> Result<Vec<(KPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::Precondition("factor of zero polynomial"));
    }
    let monic = f.monic()?;
    if monic.degree() == Some(0) {
        return Ok(vec![]);
    }
    let radical = kpoly_squarefree_part(&monic)?;
    let irreducibles = factor_squarefree_over_field(&radical)?;
    let mut out = Vec::new();
    for g in irreducibles {
        let mut mult = 0u32;
        let mut rest = monic.clone();
        loop {
            let (quo, rem) = rest.divrem(&g)?;
            if rem.is_zero() {
                mult += 1;
                rest = quo;
            } else {
                break;
            }
        }
        debug_assert!(mult >= 1);
        out.push((g, mult));
    }
    Ok(out)
}

/// If `f` splits into linear factors over K, its roots with multiplicity.
pub fn roots_over_field(f: &KPoly) -> Result<Option<Vec<(FieldElem, u32)>>> {
    let factors = factor_over_field(f)?;
    let mut roots = Vec::new();
    for (g, mult) in factors {
        if g.degree() != Some(1) {
            return Ok(None);
        }
        roots.push((-&g.coeff(0), mult));
    }
    Ok(Some(roots))
}
