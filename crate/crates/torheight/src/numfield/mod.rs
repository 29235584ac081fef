//! Number fields Q(theta) = Q[x]/(f) with exact element arithmetic,
//! embeddings, minimal polynomials and root-of-unity recognition.
//!
//! A field carries a `monogenic` promise meaning Z[theta] is the maximal
//! order; the height kernels rely on it for finite-place computations. All
//! shipped constructors with the promise set are cyclotomic fields (or Q
//! itself), where the promise is a standard fact.
//!
//! Elements of different fields never interoperate; mixed-field operations
//! panic in the arithmetic operators and are rejected with `FieldMismatch`
//! by the checked entry points.

pub mod kpoly;
mod ratmat;

pub use kpoly::KPoly;

use crate::error::{Error, Result};
use crate::exactpoly::{
    complex_roots, cyclotomic, eval_poly_ball, factor_rational, poly_is_cyclotomic, QPoly, RootBox,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

/// A number field Q[x]/(f) for a monic irreducible integer polynomial f.
#[derive(Debug)]
pub struct NumberField {
    defining: QPoly,
    degree: usize,
    monogenic: bool,
    // theta^(d+k) reduced to degree < d, for k = 0 .. d-2; integral since
    // the defining polynomial is monic with integer coefficients.
    high_powers: Vec<Vec<BigInt>>,
    // for Q(zeta_m): the full group of roots of unity mu_N (N = m for even
    // m, 2m for odd m), as coefficient vectors of zeta_N^j
    unit_root_table: Option<Vec<Vec<BigRational>>>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.defining == other.defining
    }
}
impl Eq for NumberField {}

pub type Field = Arc<NumberField>;

impl NumberField {
    /// Creates the field, verifying that `f` is monic with integer
    /// coefficients and irreducible over Q.
    pub fn new(f: QPoly, monogenic: bool) -> Result<Field> {
        let d = f.degree().ok_or(Error::BadDefiningPolynomial)?;
        if d == 0 || !f.is_monic() || !f.has_integer_coeffs() {
            return Err(Error::BadDefiningPolynomial);
        }
        if d > 1 {
            let fact = factor_rational(&f)?;
            if fact.factors.len() != 1 || fact.factors[0].1 != 1 {
                return Err(Error::ReducibleDefiningPolynomial);
            }
        }
        let mut high_powers = Vec::with_capacity(d.saturating_sub(1));
        // theta^d = -(c_0 + ... + c_{d-1} theta^{d-1})
        let mut cur: Vec<BigInt> = (0..d).map(|i| (-f.coeff(i)).to_integer()).collect();
        for _ in 0..d.saturating_sub(1) {
            high_powers.push(cur.clone());
            // multiply by theta
            let top = cur[d - 1].clone();
            let mut next = vec![BigInt::zero(); d];
            for i in (1..d).rev() {
                next[i] = cur[i - 1].clone();
            }
            for i in 0..d {
                next[i] = &next[i] - &top * (f.coeff(i)).to_integer();
            }
            cur = next;
        }
        Ok(Arc::new(NumberField {
            defining: f,
            degree: d,
            monogenic,
            high_powers,
            unit_root_table: None,
        }))
    }

    /// The rational field, presented as Q[x]/(x - 1).
    pub fn rationals() -> Field {
        NumberField::new(QPoly::from_i64(&[-1, 1]), true).unwrap()
    }

    /// The m-th cyclotomic field Q(zeta_m); monogenic by the standard fact.
    /// The roots of unity of the field (mu_m for even m, mu_2m for odd m)
    /// are tabulated so order detection is a lookup.
    pub fn cyclotomic_field(m: u64) -> Field {
        let base = NumberField::new(cyclotomic(m), true).unwrap();
        let n = if m % 2 == 0 { m } else { 2 * m };
        let zeta_n = if m % 2 == 0 {
            FieldElem::generator(&base)
        } else {
            // zeta_2m = -zeta_m^((m+1)/2) for odd m
            -&FieldElem::generator(&base).pow((m + 1) / 2)
        };
        let mut table = Vec::with_capacity(n as usize);
        let mut cur = FieldElem::one(&base);
        for _ in 0..n {
            table.push(cur.coeffs.clone());
            cur = &cur * &zeta_n;
        }
        debug_assert!(cur.is_one());
        let inner = NumberField {
            defining: base.defining.clone(),
            degree: base.degree,
            monogenic: true,
            high_powers: base.high_powers.clone(),
            unit_root_table: Some(table),
        };
        Arc::new(inner)
    }

    pub fn defining_poly(&self) -> &QPoly {
        &self.defining
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_monogenic(&self) -> bool {
        self.monogenic
    }

    pub fn is_rationals(&self) -> bool {
        self.degree == 1
    }

    /// Reduces a coefficient vector of length <= 2d-1 modulo the defining
    /// polynomial.
    fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree;
        while v.len() > d {
            let k = v.len() - 1 - d;
            if k >= self.high_powers.len() {
                // inputs beyond degree 2d-2 (parsed strings, substitutions)
                // fall back to long division
                let r = QPoly::new(v).rem(&self.defining).unwrap();
                v = r.coeffs().to_vec();
                break;
            }
            let top = v.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let table = &self.high_powers[k];
            for i in 0..d {
                if !table[i].is_zero() {
                    v[i] = &v[i] + &top * BigRational::from_integer(table[i].clone());
                }
            }
        }
        v.resize(d, BigRational::zero());
        v
    }

    /// One complex box per embedding theta -> C.
    pub fn embeddings(&self, eps: f64) -> Result<Vec<RootBox>> {
        complex_roots(&self.defining, eps)
    }
}

/// An element of a number field, stored as the reduced representative of
/// degree < d in the generator.
#[derive(Clone, Debug)]
pub struct FieldElem {
    field: Field,
    coeffs: Vec<BigRational>,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElem {}

impl FieldElem {
    pub fn from_coeffs(field: &Field, coeffs: Vec<BigRational>) -> FieldElem {
        let coeffs = field.reduce(coeffs);
        FieldElem {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> FieldElem {
        FieldElem::from_coeffs(field, vec![])
    }

    pub fn one(field: &Field) -> FieldElem {
        FieldElem::from_rational(field, BigRational::one())
    }

    pub fn from_rational(field: &Field, c: BigRational) -> FieldElem {
        FieldElem::from_coeffs(field, vec![c])
    }

    pub fn from_i64(field: &Field, c: i64) -> FieldElem {
        FieldElem::from_rational(field, BigRational::from_integer(BigInt::from(c)))
    }

    /// The generator theta of the field.
    pub fn generator(field: &Field) -> FieldElem {
        FieldElem::from_coeffs(field, vec![BigRational::zero(), BigRational::one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Returns the value as a rational when the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn same_field(&self, other: &FieldElem) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn assert_same_field(&self, other: &FieldElem) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "field mismatch in element arithmetic"
        );
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the defining polynomial.
    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let rep = QPoly::new(self.coeffs.clone());
        let (g, s, _) = qpoly_bezout(&rep, &self.field.defining);
        debug_assert!(g.is_one());
        Ok(FieldElem::from_coeffs(
            &self.field,
            s.coeffs().to_vec(),
        ))
    }

    pub fn pow(&self, e: u64) -> FieldElem {
        let mut acc = FieldElem::one(&self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents invert (error on zero).
    pub fn pow_i64(&self, e: i64) -> Result<FieldElem> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// The matrix of multiplication by this element in the power basis,
    /// column j holding the coefficients of `self * theta^j`.
    pub fn mult_matrix(&self) -> Vec<Vec<BigRational>> {
        let d = self.field.degree;
        let mut cols = Vec::with_capacity(d);
        let mut cur = self.clone();
        cols.push(cur.coeffs.clone());
        let theta = FieldElem::generator(&self.field);
        for _ in 1..d {
            cur = &cur * &theta;
            cols.push(cur.coeffs.clone());
        }
        // transpose columns into row-major rows
        (0..d)
            .map(|i| (0..d).map(|j| cols[j][i].clone()).collect())
            .collect()
    }

    /// Monic irreducible rational polynomial with this element as a root,
    /// selected from the factors of the characteristic polynomial of the
    /// multiplication matrix by exact evaluation.
    pub fn min_poly_over_q(&self) -> QPoly {
        if let Some(c) = self.as_rational() {
            return QPoly::new(vec![-c, BigRational::one()]);
        }
        let m = self.mult_matrix();
        let chi = ratmat::charpoly(&m);
        let fact = factor_rational(&chi).expect("characteristic polynomial is nonzero");
        for (g, _) in &fact.factors {
            if self.eval_qpoly(g).is_zero() {
                return g.clone();
            }
        }
        unreachable!("some factor of the characteristic polynomial annihilates the element")
    }

    /// Evaluates a rational polynomial at this element.
    pub fn eval_qpoly(&self, f: &QPoly) -> FieldElem {
        let mut acc = FieldElem::zero(&self.field);
        for c in f.coeffs().iter().rev() {
            acc = &(&acc * self) + &FieldElem::from_rational(&self.field, c.clone());
        }
        acc
    }

    /// Exact order as a root of unity, if any. The decision is exact: a root
    /// of unity in a degree-d field has order m with phi(m) dividing d and
    /// m <= 2 d^2, so `a^L = 1` for L the lcm of all such candidates; the
    /// order is then extracted by exact divisor descent. Elements whose
    /// powers grow large are settled through the minimal polynomial instead
    /// (it must equal some cyclotomic Phi_m).
    pub fn is_root_of_unity(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        if let Some(table) = &self.field.unit_root_table {
            let n = table.len() as u64;
            return table
                .iter()
                .position(|coeffs| *coeffs == self.coeffs)
                .map(|j| n / n.gcd(&(j as u64)));
        }
        let d = self.field.degree() as u64;
        let mut l = 1u64;
        for m in 1..=(2 * d * d) {
            let p = crate::exactpoly::euler_phi(m);
            if d % p == 0 {
                l = l.lcm(&m);
            }
        }
        match self.pow_bounded(l, 64 * (d as usize + 8)) {
            Some(p) if p.is_one() => {
                let mut order = l;
                let mut rest = l;
                let mut prime = 2u64;
                while prime * prime <= rest {
                    while rest % prime == 0 {
                        rest /= prime;
                        if order % prime == 0 && self.pow(order / prime).is_one() {
                            order /= prime;
                        }
                    }
                    prime += 1;
                }
                if rest > 1 && order % rest == 0 && self.pow(order / rest).is_one() {
                    order /= rest;
                }
                Some(order)
            }
            Some(_) => None,
            None => {
                // coefficient growth: decide through the minimal polynomial
                let mp = self.min_poly_over_q();
                let m = poly_is_cyclotomic(&mp)?;
                assert!(self.pow(m).is_one(), "cyclotomic minimal polynomial implies order m");
                Some(m)
            }
        }
    }

    /// Power with an abort once coefficients exceed a bit budget.
    fn pow_bounded(&self, e: u64, max_bits: usize) -> Option<FieldElem> {
        let mut acc = FieldElem::one(&self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
            if e > 0 {
                let bits = base
                    .coeffs
                    .iter()
                    .map(|c| c.numer().bits().max(c.denom().bits()) as usize)
                    .max()
                    .unwrap_or(0);
                if bits > max_bits {
                    return None;
                }
            }
        }
        Some(acc)
    }

    /// Evaluates this element under an embedding given by a box for theta.
    pub fn embed(&self, theta_box: &RootBox) -> RootBox {
        eval_poly_ball(&self.coeffs, theta_box)
    }

    /// Total ordering on the coefficient vectors; used only for canonical
    /// dedup/sort orders of same-field elements.
    pub fn coeff_cmp(&self, other: &FieldElem) -> Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.assert_same_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        FieldElem {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self.assert_same_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        FieldElem {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.assert_same_field(rhs);
        let d = self.field.degree;
        // integer kernel over a common denominator: one normalization per
        // output coefficient instead of one per intermediate product
        let int_a = self.coeffs.iter().all(|c| c.denom().is_one());
        let int_b = rhs.coeffs.iter().all(|c| c.denom().is_one());
        let (da, na): (BigInt, Vec<BigInt>) = if int_a {
            (BigInt::one(), self.coeffs.iter().map(|c| c.numer().clone()).collect())
        } else {
            let mut da = BigInt::one();
            for c in &self.coeffs {
                da = da.lcm(c.denom());
            }
            let na = self
                .coeffs
                .iter()
                .map(|c| c.numer() * (&da / c.denom()))
                .collect();
            (da, na)
        };
        let (db, nb): (BigInt, Vec<BigInt>) = if int_b {
            (BigInt::one(), rhs.coeffs.iter().map(|c| c.numer().clone()).collect())
        } else {
            let mut db = BigInt::one();
            for c in &rhs.coeffs {
                db = db.lcm(c.denom());
            }
            let nb = rhs
                .coeffs
                .iter()
                .map(|c| c.numer() * (&db / c.denom()))
                .collect();
            (db, nb)
        };
        let mut conv = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in na.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in nb.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        while conv.len() > d {
            let top = conv.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = conv.len() - d;
            let table = &self.field.high_powers[k];
            for i in 0..d {
                if !table[i].is_zero() {
                    conv[i] += &top * &table[i];
                }
            }
        }
        let den = da * db;
        let coeffs = if den.is_one() {
            conv.into_iter().map(BigRational::from_integer).collect()
        } else {
            conv.into_iter()
                .map(|n| BigRational::new(n, den.clone()))
                .collect()
        };
        FieldElem {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl Div for &FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: &FieldElem) -> FieldElem {
        self * &rhs.inv().expect("division by zero field element")
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 || !abs.is_one() {
                write!(f, "{}", abs)?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            if i == 1 {
                write!(f, "a")?;
            } else if i > 1 {
                write!(f, "a^{}", i)?;
            }
        }
        Ok(())
    }
}

/// Parses an element string in the generator symbol `a`, e.g. "a^2 - 1/2"
/// or "2*a + 3".
pub fn parse_elem(field: &Field, input: &str) -> Result<FieldElem> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Precondition("empty element string"));
    }
    let bytes = s.as_bytes();
    let mut pos = 0usize;
    let mut acc = FieldElem::zero(field);
    let parse_err = Error::Precondition("malformed element string");

    while pos < bytes.len() {
        let mut sign = BigRational::one();
        while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        }
        if pos >= bytes.len() {
            return Err(parse_err);
        }
        // optional rational literal
        let mut coef = BigRational::one();
        let mut saw_number = false;
        if bytes[pos].is_ascii_digit() {
            saw_number = true;
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let numer: BigInt = s[start..pos].parse().map_err(|_| parse_err.clone())?;
            let mut denom = BigInt::one();
            if pos < bytes.len() && bytes[pos] == b'/' {
                pos += 1;
                let dstart = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if dstart == pos {
                    return Err(parse_err);
                }
                denom = s[dstart..pos].parse().map_err(|_| parse_err.clone())?;
                if denom.is_zero() {
                    return Err(Error::DivisionByZero);
                }
            }
            coef = BigRational::new(numer, denom);
        }
        // optional '*' then generator power
        let mut power = 0usize;
        if pos < bytes.len() && bytes[pos] == b'*' {
            pos += 1;
            if pos >= bytes.len() || bytes[pos] != b'a' {
                return Err(parse_err);
            }
        }
        if pos < bytes.len() && bytes[pos] == b'a' {
            pos += 1;
            power = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let pstart = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pstart == pos {
                    return Err(parse_err);
                }
                power = s[pstart..pos].parse().map_err(|_| parse_err.clone())?;
            }
        } else if !saw_number {
            return Err(parse_err);
        }
        let mut term = vec![BigRational::zero(); power + 1];
        term[power] = sign * coef;
        acc = &acc + &FieldElem::from_coeffs(field, term);
    }
    Ok(acc)
}

/// Extended Euclid over Q[x]: returns monic `g = gcd(a, b)` and `s, t` with
/// `s a + t b = g`.
pub fn qpoly_bezout(a: &QPoly, b: &QPoly) -> (QPoly, QPoly, QPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
    let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1).unwrap();
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if r0.is_zero() {
        return (QPoly::zero(), s0, t0);
    }
    let lc = r0.leading().unwrap().clone();
    let inv = lc.recip();
    (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
}

/// Norm polynomial: the determinant of chi under the regular representation
/// of K, equal to `Res_x(f(x), chi_x(y))` for the monic defining polynomial.
/// Roots of the result are the unions over all embeddings of the roots of
/// chi. Computed exactly by interpolation at rational sample points.
pub fn norm_poly(field: &Field, chi: &KPoly) -> Result<QPoly> {
    if chi.is_zero() {
        return Err(Error::Precondition("norm_poly of zero polynomial"));
    }
    let d = field.degree();
    let t = chi.degree().unwrap();
    let target_deg = d * t;
    // Regular representation of each coefficient.
    let mats: Vec<Vec<Vec<BigRational>>> =
        chi.coeffs().iter().map(|c| c.mult_matrix()).collect();
    let mut xs = Vec::with_capacity(target_deg + 1);
    let mut ys = Vec::with_capacity(target_deg + 1);
    let mut point = 0i64;
    while xs.len() < target_deg + 1 {
        let x = BigRational::from_integer(BigInt::from(point));
        // A(x) = sum_j M_j x^j
        let mut a = vec![vec![BigRational::zero(); d]; d];
        let mut xp = BigRational::one();
        for mj in &mats {
            for i in 0..d {
                for k in 0..d {
                    a[i][k] = &a[i][k] + &(&mj[i][k] * &xp);
                }
            }
            xp = &xp * &x;
        }
        ys.push(ratmat::det(a));
        xs.push(x);
        point = if point > 0 { -point } else { -point + 1 };
    }
    Ok(interpolate(&xs, &ys))
}

/// Newton divided-difference interpolation, exact over Q.
fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> QPoly {
    let n = xs.len();
    let mut table: Vec<BigRational> = ys.to_vec();
    let mut coeffs = vec![table[0].clone()];
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = &xs[i] - &xs[i - level];
            table[i] = (&table[i] - &table[i - 1]) / dx;
        }
        coeffs.push(table[level].clone());
    }
    // assemble sum coeffs[k] * prod_{i<k} (x - xs[i])
    let mut acc = QPoly::zero();
    let mut basis = QPoly::one();
    for (k, c) in coeffs.iter().enumerate() {
        acc = &acc + &basis.scale(c);
        if k + 1 < n {
            let lin = QPoly::new(vec![-xs[k].clone(), BigRational::one()]);
            basis = &basis * &lin;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_create_validates() {
        assert!(NumberField::new(QPoly::from_i64(&[-1, 1]), true).is_ok());
        assert!(NumberField::new(cyclotomic(5), true).is_ok());
        assert_eq!(
            NumberField::new(QPoly::from_i64(&[-1, 0, 1]), false).unwrap_err(),
            Error::ReducibleDefiningPolynomial
        );
        assert_eq!(
            NumberField::new(QPoly::from_i64(&[2, 0, 2]), false).unwrap_err(),
            Error::BadDefiningPolynomial
        );
    }

    #[test]
    fn cyclotomic_arithmetic() {
        let k4 = NumberField::cyclotomic_field(4);
        let i = FieldElem::generator(&k4);
        assert_eq!(&i * &i, FieldElem::from_i64(&k4, -1));

        let k5 = NumberField::cyclotomic_field(5);
        let z = FieldElem::generator(&k5);
        assert_eq!(z.inv().unwrap(), z.pow(4));

        let sqrt2 = NumberField::new(QPoly::from_i64(&[-2, 0, 1]), false).unwrap();
        let t = FieldElem::generator(&sqrt2);
        let one = FieldElem::one(&sqrt2);
        assert_eq!(
            &(&one + &t) * &(&one - &t),
            FieldElem::from_i64(&sqrt2, -1)
        );
    }

    #[test]
    fn inverse_of_zero_rejected() {
        let k = NumberField::cyclotomic_field(3);
        assert_eq!(FieldElem::zero(&k).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_mismatch_detected() {
        let a = FieldElem::one(&NumberField::cyclotomic_field(3));
        let b = FieldElem::one(&NumberField::cyclotomic_field(4));
        assert_eq!(a.same_field(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn min_poly_examples() {
        let k5 = NumberField::cyclotomic_field(5);
        let threehalves = FieldElem::from_rational(
            &k5,
            BigRational::new(BigInt::from(3), BigInt::from(2)),
        );
        assert_eq!(
            threehalves.min_poly_over_q(),
            QPoly::new(vec![
                BigRational::new(BigInt::from(-3), BigInt::from(2)),
                BigRational::one()
            ])
        );
        let z = FieldElem::generator(&k5);
        assert_eq!(z.min_poly_over_q(), cyclotomic(5));
        // zeta_5 + zeta_5^-1 has minimal polynomial x^2 + x - 1; checked by
        // exact substitution.
        let c = &z + &z.inv().unwrap();
        let mp = c.min_poly_over_q();
        assert_eq!(mp, QPoly::from_i64(&[-1, 1, 1]));
        assert!(c.eval_qpoly(&mp).is_zero());
    }

    #[test]
    fn embeddings_examples() {
        let q = NumberField::rationals();
        let e = q.embeddings(1e-12).unwrap();
        assert_eq!(e.len(), 1);
        assert!((e[0].re - 1.0).abs() <= e[0].radius + 1e-14);

        let k4 = NumberField::cyclotomic_field(4);
        let e = k4.embeddings(1e-12).unwrap();
        assert_eq!(e.len(), 2);
        assert!(e.iter().any(|b| (b.im - 1.0).abs() < 1e-10));
        assert!(e.iter().any(|b| (b.im + 1.0).abs() < 1e-10));

        let sqrt2 = NumberField::new(QPoly::from_i64(&[-2, 0, 1]), false).unwrap();
        let e = sqrt2.embeddings(1e-12).unwrap();
        let s = 2f64.sqrt();
        assert!(e.iter().any(|b| (b.re - s).abs() < 1e-10));
        assert!(e.iter().any(|b| (b.re + s).abs() < 1e-10));
    }

    #[test]
    fn embedding_values_are_roots_of_min_poly() {
        let k5 = NumberField::cyclotomic_field(5);
        let z = FieldElem::generator(&k5);
        let a = &(&z + &z) + &FieldElem::from_i64(&k5, 1); // 2 zeta + 1
        let mp = a.min_poly_over_q();
        for emb in k5.embeddings(1e-13).unwrap() {
            let val = a.embed(&emb);
            let img = eval_poly_ball(mp.coeffs(), &val);
            assert!(img.center_abs() <= img.radius + 1e-8);
        }
    }

    #[test]
    fn root_of_unity_detection() {
        let k5 = NumberField::cyclotomic_field(5);
        assert_eq!(FieldElem::one(&k5).is_root_of_unity(), Some(1));
        let z = FieldElem::generator(&k5);
        assert_eq!(z.pow(2).is_root_of_unity(), Some(5));
        let q = NumberField::rationals();
        let half = FieldElem::from_rational(&q, BigRational::new(1.into(), 2.into()));
        assert_eq!(half.is_root_of_unity(), None);
        assert_eq!(FieldElem::from_i64(&q, -1).is_root_of_unity(), Some(2));
        assert_eq!(FieldElem::zero(&q).is_root_of_unity(), None);
    }

    #[test]
    fn root_of_unity_orders_exhaustive_to_60() {
        for m in [1u64, 2, 3, 4, 5, 6, 8, 10, 12, 15, 30, 60] {
            let k = NumberField::cyclotomic_field(m);
            let z = FieldElem::generator(&k);
            for k_exp in 1..=m {
                let elem = z.pow(k_exp);
                let ord = elem.is_root_of_unity().unwrap();
                assert!(elem.pow(ord).is_one());
                for smaller in 1..ord {
                    assert!(!elem.pow(smaller).is_one(), "m={} k={} ord={}", m, k_exp, ord);
                }
            }
        }
    }

    #[test]
    fn norm_poly_examples() {
        let q = NumberField::rationals();
        let chi = KPoly::new(
            &q,
            vec![FieldElem::from_i64(&q, -2), FieldElem::one(&q)],
        );
        assert_eq!(norm_poly(&q, &chi).unwrap(), QPoly::from_i64(&[-2, 1]));

        let k4 = NumberField::cyclotomic_field(4);
        let chi = KPoly::new(
            &k4,
            vec![-&FieldElem::generator(&k4), FieldElem::one(&k4)],
        );
        assert_eq!(norm_poly(&k4, &chi).unwrap(), QPoly::from_i64(&[1, 0, 1]));

        let sqrt2 = NumberField::new(QPoly::from_i64(&[-2, 0, 1]), false).unwrap();
        let chi = KPoly::new(
            &sqrt2,
            vec![
                -&FieldElem::generator(&sqrt2),
                FieldElem::zero(&sqrt2),
                FieldElem::one(&sqrt2),
            ],
        );
        assert_eq!(
            norm_poly(&sqrt2, &chi).unwrap(),
            QPoly::from_i64(&[-2, 0, 0, 0, 1])
        );
    }

    #[test]
    fn norm_poly_multiplicative() {
        let k = NumberField::cyclotomic_field(3);
        let z = FieldElem::generator(&k);
        let a = KPoly::new(&k, vec![z.clone(), FieldElem::one(&k)]);
        let b = KPoly::new(&k, vec![&z + &z, FieldElem::from_i64(&k, 3)]);
        let na = norm_poly(&k, &a).unwrap();
        let nb = norm_poly(&k, &b).unwrap();
        let nab = norm_poly(&k, &(&a * &b)).unwrap();
        assert_eq!(nab, &na * &nb);
        assert_eq!(na.degree().unwrap(), a.degree().unwrap() * k.degree());
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let k5 = NumberField::cyclotomic_field(5);
        for s in ["a^2 - 1/2", "1", "-a", "2*a^3 + a - 7/3", "0", "a"] {
            let e = parse_elem(&k5, s).unwrap();
            let back = parse_elem(&k5, &e.to_string()).unwrap();
            assert_eq!(e, back, "roundtrip of {:?}", s);
        }
        assert!(parse_elem(&k5, "b + 1").is_err());
        assert!(parse_elem(&k5, "1//2").is_err());
        // powers at or above the degree reduce
        let z = FieldElem::generator(&k5);
        assert_eq!(parse_elem(&k5, "a^5").unwrap(), z.pow(5));
    }

    #[test]
    fn field_axioms_on_samples() {
        let k = NumberField::cyclotomic_field(5);
        let mk = |v: &[i64]| {
            FieldElem::from_coeffs(
                &k,
                v.iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
                    .collect(),
            )
        };
        let samples = [
            mk(&[1, 2, 0, -1]),
            mk(&[0, 1, 1, 1]),
            mk(&[-3, 0, 2, 5]),
            mk(&[7, -2, 0, 0]),
        ];
        for a in &samples {
            for b in &samples {
                for c in &samples {
                    assert_eq!(&(a * b) * c, a * &(b * c));
                    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                }
                assert_eq!(a * b, b * a);
            }
            if !a.is_zero() {
                assert!((a * &a.inv().unwrap()).is_one());
            }
        }
    }
}
