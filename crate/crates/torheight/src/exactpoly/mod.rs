//! Arbitrary-precision rational arithmetic and univariate polynomial algebra
//! over Q: exact ring operations, gcd, squarefree parts, factorization into
//! rational irreducibles, resultants, cyclotomic polynomials and certified
//! complex root isolation.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so the whole module is safe to use from multiple threads.

mod factor;
mod roots;

pub use factor::{factor_rational, QFactorization};
pub use roots::{complex_roots, eval_poly_ball, rational_to_f64, RootBox};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Integer-coefficient univariate polynomial, lowest degree first.
///
/// The leading coefficient is nonzero unless the polynomial is zero (empty
/// coefficient vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// gcd of all coefficients, always nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and normalizes the leading coefficient to be
    /// positive. Returns the removed (signed) content.
    pub fn primitive_part(&self) -> (BigInt, IntPoly) {
        if self.is_zero() {
            return (BigInt::zero(), IntPoly::zero());
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        let prim = IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect());
        (c, prim)
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

}

/// Univariate polynomial over Q, coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    /// The monomial `c x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        QPoly::new(coeffs)
    }

    /// The variable `x`.
    pub fn x() -> Self {
        QPoly::monomial(BigRational::one(), 1)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        QPoly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Exact Euclidean division: `self = q*g + r` with `deg r < deg g`.
    pub fn divrem(&self, g: &QPoly) -> Result<(QPoly, QPoly)> {
        let dg = g.degree().ok_or(Error::ZeroPolynomialDivision)?;
        let lc_inv = g.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() < dg + 1 {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quo = vec![BigRational::zero(); rem.len() - dg];
        for i in (dg..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lc_inv;
            for (j, gc) in g.coeffs.iter().enumerate() {
                let idx = i - dg + j;
                let t = gc * &q;
                rem[idx] = &rem[idx] - t;
            }
            quo[i - dg] = q;
        }
        Ok((QPoly::new(quo), QPoly::new(rem)))
    }

    pub fn rem(&self, g: &QPoly) -> Result<QPoly> {
        Ok(self.divrem(g)?.1)
    }

    /// Tests exact divisibility.
    pub fn divides(&self, other: &QPoly) -> bool {
        match other.divrem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Clears denominators and the integer content: `self = content * prim`
    /// with `prim` primitive over Z and positive leading coefficient.
    pub fn primitive_integer_model(&self) -> (BigRational, IntPoly) {
        if self.is_zero() {
            return (BigRational::zero(), IntPoly::zero());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let (content, prim) = IntPoly::new(ints).primitive_part();
        (BigRational::new(content, den), prim)
    }

    /// `x^k * self` with the common power of `x` removed; returns `(k, rest)`.
    pub fn split_power_of_x(&self) -> (usize, QPoly) {
        if self.is_zero() {
            return (0, QPoly::zero());
        }
        let k = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        (k, QPoly::new(self.coeffs[k..].to_vec()))
    }

    pub fn pow(&self, mut e: u32) -> QPoly {
        let mut base = self.clone();
        let mut acc = QPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Substitutes `x -> c*x` (used to pass to a monic integer model and back).
    pub fn compose_scale_arg(&self, c: &BigRational) -> QPoly {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut p = BigRational::one();
        for a in &self.coeffs {
            out.push(a * &p);
            p = &p * c;
        }
        QPoly::new(out)
    }
}

impl fmt::Display for QPoly {
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
                write!(f, "x")?;
            } else if i > 1 {
                write!(f, "x^{}", i)?;
            }
        }
        Ok(())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            out.push(a + b);
        }
        QPoly::new(out)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            out.push(a - b);
        }
        QPoly::new(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + a * b;
            }
        }
        QPoly::new(out)
    }
}

/// Pseudo-remainder of primitive integer polynomials, used by the primitive
/// PRS below to avoid rational coefficient blowup.
fn int_prem(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let df = f.degree().unwrap();
    let dg = g.degree().unwrap();
    if df < dg {
        return f.clone();
    }
    let lc_g = g.leading().unwrap().clone();
    let mut rem = f.coeffs.clone();
    for i in (dg..=df).rev() {
        let head = rem[i].clone();
        if head.is_zero() {
            continue;
        }
        // rem <- lc(g) * rem - head * x^(i-dg) * g; stays integral, and the
        // extra lc(g) powers wash out in the primitive part.
        for c in rem.iter_mut() {
            *c = &*c * &lc_g;
        }
        for (j, gc) in g.coeffs.iter().enumerate() {
            rem[i - dg + j] -= gc * &head;
        }
        debug_assert!(rem[i].is_zero());
    }
    IntPoly::new(rem)
}

/// Monic gcd over Q via the primitive polynomial remainder sequence.
pub fn poly_gcd(f: &QPoly, g: &QPoly) -> QPoly {
    if f.is_zero() && g.is_zero() {
        return QPoly::zero();
    }
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    let (_, mut a) = f.primitive_integer_model();
    let (_, mut b) = g.primitive_integer_model();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.degree() == Some(0) {
            return QPoly::one();
        }
        let r = int_prem(&a, &b);
        a = b;
        b = r.primitive_part().1;
    }
    a.to_qpoly().monic()
}

/// `f / gcd(f, f')`, made monic: the product of the distinct irreducible
/// factors of `f`.
pub fn squarefree_part(f: &QPoly) -> Result<QPoly> {
    if f.is_zero() {
        return Err(Error::Precondition("squarefree_part of zero polynomial"));
    }
    if f.degree() == Some(0) {
        return Ok(QPoly::one());
    }
    let g = poly_gcd(f, &f.derivative());
    let (q, r) = f.divrem(&g)?;
    debug_assert!(r.is_zero());
    Ok(q.monic())
}

pub fn is_squarefree(f: &QPoly) -> bool {
    match f.degree() {
        None => false,
        Some(0) => true,
        Some(_) => poly_gcd(f, &f.derivative()).degree() == Some(0),
    }
}

/// Resultant with the convention `res(f, g) = lc(f)^deg(g) * prod g(alpha_i)`
/// over the roots of `f`, i.e. the Sylvester determinant.
pub fn resultant(f: &QPoly, g: &QPoly) -> Result<BigRational> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::Precondition("resultant of zero polynomial"));
    }
    fn go(f: &QPoly, g: &QPoly) -> BigRational {
        let df = f.degree().unwrap();
        match g.degree().unwrap() {
            0 => {
                let c = g.leading().unwrap();
                let mut acc = BigRational::one();
                for _ in 0..df {
                    acc = acc * c;
                }
                acc
            }
            dg => {
                let r = f.divrem(g).unwrap().1;
                if r.is_zero() {
                    return BigRational::zero();
                }
                let dr = r.degree().unwrap();
                let sign = if (df * dg) % 2 == 1 {
                    -BigRational::one()
                } else {
                    BigRational::one()
                };
                let mut lc_pow = BigRational::one();
                let lc = g.leading().unwrap();
                for _ in 0..(df - dr) {
                    lc_pow = lc_pow * lc;
                }
                sign * lc_pow * go(g, &r)
            }
        }
    }
    if f.degree().unwrap() >= g.degree().unwrap() {
        Ok(go(f, g))
    } else {
        let sign = if (f.degree().unwrap() * g.degree().unwrap()) % 2 == 1 {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        Ok(sign * go(g, f))
    }
}

/// Euler's totient.
pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            phi = phi / p * (p - 1);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi = phi / n * (n - 1);
    }
    phi
}

/// The m-th cyclotomic polynomial, computed by exact division of `x^m - 1`
/// by the cyclotomic polynomials of the proper divisors of `m`.
pub fn cyclotomic(m: u64) -> QPoly {
    assert!(m >= 1);
    let mut table: Vec<(u64, QPoly)> = Vec::new();
    for d in 1..=m {
        if m % d != 0 {
            continue;
        }
        let mut num = vec![BigRational::zero(); d as usize + 1];
        num[0] = -BigRational::one();
        num[d as usize] = BigRational::one();
        let mut phi_d = QPoly::new(num);
        for (e, phi_e) in &table {
            if d % e == 0 {
                let (q, r) = phi_d.divrem(phi_e).unwrap();
                debug_assert!(r.is_zero());
                phi_d = q;
            }
        }
        table.push((d, phi_d));
    }
    table.pop().unwrap().1
}

/// Recognizes `f = Phi_m` and returns `m`. The candidates are bounded by
/// `phi(m) >= sqrt(m/2)`, so `m <= 2 deg^2`, and filtered by `phi(m) = deg`.
pub fn poly_is_cyclotomic(f: &QPoly) -> Option<u64> {
    let d = f.degree()? as u64;
    if d == 0 || !f.is_monic() || !f.has_integer_coeffs() {
        return None;
    }
    for m in 1..=(2 * d * d) {
        if euler_phi(m) == d && *f == cyclotomic(m) {
            return Some(m);
        }
    }
    None
}
