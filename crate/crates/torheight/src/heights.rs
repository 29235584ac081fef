//! Weil heights of algebraic numbers, projective heights over a fixed number
//! field, and the canonical heights on GL_t.
//!
//! Heights are transcendental numbers; exactness lives in the error bound.
//! A `HeightValue` carries a nonnegative double plus an explicit absolute
//! error, and is flagged `exact_zero` only when the vanishing is certified
//! symbolically (roots of unity, coordinates equal up to a unit), never
//! numerically.
//!
//! Place normalization: `n_v = [K_v : Q_v]` with absolute values extending
//! the standard ones on Q, so the product formula holds and heights are
//! invariant under scaling of projective coordinates. Finite places are
//! never enumerated individually: under the monogenic promise the whole
//! finite part collapses into a lattice index computed by Hermite normal
//! form.

use crate::error::{Error, Result};
use crate::exactpoly::{factor_rational, is_squarefree, poly_is_cyclotomic, complex_roots, QPoly};
use crate::lattice;
use crate::matgroup::{char_poly, eigen_minpolys, EigenvalueData, MatrixK};
use crate::numfield::{kpoly::roots_over_field, Field, FieldElem};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Default root-isolation tolerance; reported heights aim at an absolute
/// error of at most 1e-9.
pub const DEFAULT_EPS: f64 = 1e-12;

/// A nonnegative real with an explicit absolute-error bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeightValue {
    pub value: f64,
    pub abs_error: f64,
    pub exact_zero: bool,
}

impl HeightValue {
    pub fn exact_zero() -> HeightValue {
        HeightValue {
            value: 0.0,
            abs_error: 0.0,
            exact_zero: true,
        }
    }

    pub fn new(value: f64, abs_error: f64) -> HeightValue {
        HeightValue {
            value: value.max(0.0),
            abs_error,
            exact_zero: false,
        }
    }

    pub fn add(&self, other: &HeightValue) -> HeightValue {
        if self.exact_zero && other.exact_zero {
            return HeightValue::exact_zero();
        }
        HeightValue {
            value: self.value + other.value,
            abs_error: self.abs_error + other.abs_error,
            exact_zero: false,
        }
    }

    /// Multiplies by a nonnegative constant; exact zeros stay exact.
    pub fn scale(&self, k: f64) -> HeightValue {
        if self.exact_zero {
            return HeightValue::exact_zero();
        }
        HeightValue {
            value: self.value * k,
            abs_error: self.abs_error * k,
            exact_zero: false,
        }
    }

    /// Whether the enclosing interval contains 0.
    pub fn could_be_zero(&self) -> bool {
        self.exact_zero || self.value <= self.abs_error
    }
}

/// Natural log of a positive big integer, safe for very large inputs.
fn big_ln(x: &BigInt) -> f64 {
    debug_assert!(x.is_positive());
    let bits = x.bits();
    if bits <= 900 {
        x.to_f64().unwrap().ln()
    } else {
        let shift = bits - 512;
        ((x >> shift).to_f64().unwrap()).ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Mahler measure `log|lc| + sum log+ |root|` of the primitive integer model,
/// with the error bound aggregated from the root boxes. Contributions of
/// roots certified inside the closed unit disk are exactly zero.
pub fn mahler_measure(f: &QPoly, eps: f64) -> Result<HeightValue> {
    if f.is_zero() {
        return Err(Error::Precondition("mahler_measure of zero polynomial"));
    }
    if f.degree() == Some(0) {
        let (_, fz) = f.primitive_integer_model();
        let lc = fz.leading().unwrap().abs();
        return Ok(HeightValue::new(big_ln(&lc), 1e-14 * big_ln(&lc).abs() + 1e-300));
    }
    if is_squarefree(f) {
        return mahler_squarefree(f, eps);
    }
    // Mahler measure is multiplicative over the factorization.
    let fact = factor_rational(f)?;
    let (_, fz) = f.primitive_integer_model();
    let lc = fz.leading().unwrap().abs();
    let mut acc = HeightValue::new(big_ln(&lc), 1e-14 * big_ln(&lc).abs() + 1e-300);
    for (p, mult) in &fact.factors {
        let m = mahler_squarefree(p, eps)?;
        for _ in 0..*mult {
            acc = acc.add(&m);
        }
    }
    Ok(acc)
}

fn mahler_squarefree(f: &QPoly, eps: f64) -> Result<HeightValue> {
    let (_, fz) = f.primitive_integer_model();
    let lc = fz.leading().unwrap().abs();
    let mut value = big_ln(&lc);
    let mut err = 1e-14 * value.abs() + 1e-300;
    // the certified radii may not reach a very tight eps; relaxing the
    // acceptance threshold keeps the error bound honest via the box radii
    let boxes = complex_roots(&fz.to_qpoly(), eps)
        .or_else(|_| complex_roots(&fz.to_qpoly(), eps * 1e2))
        .or_else(|_| complex_roots(&fz.to_qpoly(), eps * 1e4))?;
    for b in boxes {
        let (lo, hi) = b.abs_bounds();
        if hi <= 1.0 {
            continue; // log+ contribution certified zero
        }
        let lo = lo.max(1.0);
        value += (lo.ln() + hi.ln()) / 2.0;
        err += (hi.ln() - lo.ln()) / 2.0 + 1e-15;
    }
    Ok(HeightValue::new(value, err))
}

/// Absolute Weil height of an algebraic number given as a field element.
/// Exactly zero (error 0) for 0 and for roots of unity, decided exactly.
pub fn weil_height_number(alpha: &FieldElem) -> Result<HeightValue> {
    weil_height_number_eps(alpha, DEFAULT_EPS)
}

pub fn weil_height_number_eps(alpha: &FieldElem, eps: f64) -> Result<HeightValue> {
    if alpha.is_zero() {
        return Ok(HeightValue::exact_zero());
    }
    if alpha.is_root_of_unity().is_some() {
        return Ok(HeightValue::exact_zero());
    }
    let mp = alpha.min_poly_over_q();
    let deg = mp.degree().unwrap();
    Ok(mahler_measure(&mp, eps)?.scale(1.0 / deg as f64))
}

/// Weil height of an algebraic number presented by its minimal polynomial.
pub fn weil_height_from_minpoly(f: &QPoly) -> Result<HeightValue> {
    let deg = f.degree().ok_or(Error::Precondition("zero polynomial"))?;
    if deg == 0 {
        return Err(Error::Precondition("constant polynomial presents no number"));
    }
    let fact = factor_rational(f)?;
    if fact.factors.len() != 1 || fact.factors[0].1 != 1 {
        return Err(Error::Precondition(
            "polynomial presenting an algebraic number must be irreducible",
        ));
    }
    let mp = &fact.factors[0].0;
    if *mp == QPoly::x() || poly_is_cyclotomic(mp).is_some() {
        return Ok(HeightValue::exact_zero());
    }
    Ok(mahler_measure(mp, DEFAULT_EPS)?.scale(1.0 / deg as f64))
}

/// Projective height of `[mu_0 : ... : mu_n]` over a monogenic field, per
/// the place-wise log-max formula. The archimedean part sums over all
/// embeddings; the finite part is the lattice index of the Z-module
/// generated by `mu_i theta^j` inside Z^d, via Hermite normal form.
pub fn projective_height(field: &Field, mu: &[FieldElem]) -> Result<HeightValue> {
    projective_height_eps(field, mu, DEFAULT_EPS)
}

pub fn projective_height_eps(field: &Field, mu: &[FieldElem], eps: f64) -> Result<HeightValue> {
    if mu.is_empty() || mu.iter().all(|m| m.is_zero()) {
        return Err(Error::AllCoordinatesZero);
    }
    for m in mu {
        if m.field() != field {
            return Err(Error::FieldMismatch);
        }
    }
    if !field.is_monogenic() {
        return Err(Error::NotMonogenic);
    }

    // Symbolic exact-zero certificate: all nonzero coordinates agree up to
    // roots of unity.
    let first = mu.iter().find(|m| !m.is_zero()).unwrap();
    let first_inv = first.inv()?;
    if mu
        .iter()
        .filter(|m| !m.is_zero())
        .all(|m| (m * &first_inv).is_root_of_unity().is_some())
    {
        return Ok(HeightValue::exact_zero());
    }

    // Canonical primitive integral scaling: unique up to sign, which makes
    // the computed height invariant under rational rescaling bit-for-bit.
    let d = field.degree();
    let mut den = BigInt::from(1);
    for m in mu {
        for c in m.coeffs() {
            den = den.lcm(c.denom());
        }
    }
    let mut gcd = BigInt::zero();
    let scaled: Vec<Vec<BigInt>> = mu
        .iter()
        .map(|m| {
            m.coeffs()
                .iter()
                .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
                .collect::<Vec<_>>()
        })
        .collect();
    for v in &scaled {
        for c in v {
            gcd = gcd.gcd(c);
        }
    }
    let nu: Vec<FieldElem> = scaled
        .iter()
        .map(|v| {
            FieldElem::from_coeffs(
                field,
                v.iter()
                    .map(|c| BigRational::from_integer(c / &gcd))
                    .collect(),
            )
        })
        .collect();

    // Finite part: index of the module spanned by nu_i theta^j in Z^d.
    let theta = FieldElem::generator(field);
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for v in &nu {
        let mut cur = v.clone();
        for j in 0..d {
            cols.push(
                cur.coeffs()
                    .iter()
                    .map(|c| {
                        debug_assert!(c.is_integer());
                        c.to_integer()
                    })
                    .collect(),
            );
            if j + 1 < d {
                cur = &cur * &theta;
            }
        }
    }
    let mat: lattice::IMat = (0..d)
        .map(|i| cols.iter().map(|col| col[i].clone()).collect())
        .collect();
    let index = lattice::lattice_index(&mat).ok_or(Error::Precondition(
        "coordinate module has deficient rank",
    ))?;
    let fin = big_ln(&index);
    let fin_err = 1e-14 * fin.abs() + 1e-300;

    // Archimedean part, with refinement retries when a box is too fat to
    // bound the log-max away from zero.
    let mut eps_try = eps;
    for _ in 0..3 {
        match archimedean_logmax_sum(field, &nu, eps_try) {
            Some((arch, arch_err)) => {
                let value = (arch - fin) / d as f64;
                let err = (arch_err + fin_err) / d as f64;
                return Ok(HeightValue::new(value, err));
            }
            None => eps_try *= 1e2,
        }
    }
    Err(Error::RootIsolation(
        "could not bound archimedean log-max away from zero".into(),
    ))
}

fn archimedean_logmax_sum(field: &Field, nu: &[FieldElem], eps: f64) -> Option<(f64, f64)> {
    let embeddings = field.embeddings(eps).ok()?;
    let mut total = 0.0f64;
    let mut err = 0.0f64;
    for emb in &embeddings {
        let mut lo_max = 0.0f64;
        let mut hi_max = 0.0f64;
        for v in nu {
            if v.is_zero() {
                continue;
            }
            let (lo, hi) = v.embed(emb).abs_bounds();
            lo_max = lo_max.max(lo);
            hi_max = hi_max.max(hi);
        }
        if lo_max <= 0.0 {
            return None;
        }
        total += (lo_max.ln() + hi_max.ln()) / 2.0;
        err += (hi_max.ln() - lo_max.ln()) / 2.0 + 1e-15;
    }
    Some((total, err))
}

/// Height attached to the divisor at infinity of the equivariant
/// compactification of the torus by (P^1)^t: twice the sum of coordinate
/// Weil heights. Exactly zero iff every coordinate is a root of unity.
pub fn torus_dinfty_height(lambda: &[FieldElem]) -> Result<HeightValue> {
    if lambda.iter().any(|l| l.is_zero()) {
        return Err(Error::ZeroCoordinate);
    }
    let mut acc = HeightValue::exact_zero();
    for l in lambda {
        acc = acc.add(&weil_height_number(l)?);
    }
    Ok(acc.scale(2.0))
}

pub fn factorial(t: usize) -> f64 {
    (1..=t).map(|k| k as f64).product()
}

/// Sum of the torus height over the Weyl orbit; for GL_t the Weyl group is
/// the symmetric group permuting coordinates, and since the summand is
/// permutation invariant the sum equals t! times the torus height.
pub fn weyl_invariant_height(lambda: &[FieldElem]) -> Result<HeightValue> {
    let t = lambda.len();
    Ok(torus_dinfty_height(lambda)?.scale(factorial(t)))
}

/// Canonical conjugation-invariant height on GL_t:
/// `2 t! sum_i h(lambda_i)` over the eigenvalue multiset, computed from the
/// factored norm polynomial of the characteristic polynomial. Each rational
/// conjugacy class of eigenvalues contributes its Mahler measure, and the
/// total is divided by `[K:Q]` because the norm polynomial repeats each
/// eigenvalue once per embedding. Exactly zero iff g is unipotent-torsion.
pub fn canonical_height_glt(g: &MatrixK) -> Result<HeightValue> {
    canonical_height_glt_eps(g, DEFAULT_EPS)
}

pub fn canonical_height_glt_eps(g: &MatrixK, eps: f64) -> Result<HeightValue> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let data = eigen_minpolys(g)?;
    canonical_height_from_eigen_data(&data, eps)
}

pub fn canonical_height_from_eigen_data(data: &EigenvalueData, eps: f64) -> Result<HeightValue> {
    let t = data.size;
    let d = data.ext_degree;
    let mut sum = HeightValue::exact_zero();
    for (p, mult) in &data.factors {
        if poly_is_cyclotomic(p).is_some() {
            continue; // contributes exactly zero
        }
        let m = mahler_measure(p, eps)?;
        sum = sum.add(&m.scale(*mult as f64));
    }
    Ok(sum.scale(2.0 * factorial(t) / d as f64))
}

/// Result of the eigenvalue ("Breuillard") height: exact when the
/// characteristic polynomial splits over the working field, otherwise the
/// two-sided bounds implied by the sandwich inequality.
#[derive(Clone, Debug, PartialEq)]
pub enum BreuillardHeight {
    Exact(HeightValue),
    Bounds {
        lower: HeightValue,
        upper: HeightValue,
    },
}

/// Projective height of the eigenvalue tuple `[1 : lambda_1 : ... : lambda_t]`.
///
/// An optional splitting field may be supplied for matrices with rational
/// entries; entries in a proper extension are never re-embedded (no
/// compositum construction).
pub fn breuillard_height(g: &MatrixK, splitting: Option<&Field>) -> Result<BreuillardHeight> {
    breuillard_height_eps(g, splitting, DEFAULT_EPS)
}

pub fn breuillard_height_eps(
    g: &MatrixK,
    splitting: Option<&Field>,
    eps: f64,
) -> Result<BreuillardHeight> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let work = match splitting {
        None => g.clone(),
        Some(k2) => {
            if g.field() == k2 {
                g.clone()
            } else if g.field().is_rationals() {
                let entries = g
                    .entries()
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|e| FieldElem::from_rational(k2, e.as_rational().unwrap()))
                            .collect()
                    })
                    .collect();
                MatrixK::new(k2, entries)?
            } else {
                return Err(Error::SplittingFieldUnsupported);
            }
        }
    };
    let chi = char_poly(&work);
    match roots_over_field(&chi)? {
        Some(roots) => {
            let field = work.field().clone();
            let mut coords = vec![FieldElem::one(&field)];
            for (root, mult) in roots {
                for _ in 0..mult {
                    coords.push(root.clone());
                }
            }
            Ok(BreuillardHeight::Exact(projective_height_eps(
                &field, &coords, eps,
            )?))
        }
        None => {
            let t = g.size() as f64;
            let hg = canonical_height_glt_eps(g, eps)?;
            Ok(BreuillardHeight::Bounds {
                lower: hg.scale(1.0 / (2.0 * factorial(g.size()) * t)),
                upper: hg.scale(1.0 / t),
            })
        }
    }
}

/// Evaluation of the sandwich inequality
/// `hG / (2 t!) <= t hB <= hG`, all three quantities reported.
#[derive(Clone, Debug, PartialEq)]
pub struct SandwichReport {
    pub lower: HeightValue,
    pub middle: HeightValue,
    pub upper: HeightValue,
    pub holds: bool,
}

/// Requires the eigenvalue height to be exactly computable (characteristic
/// polynomial splits over the working field).
pub fn check_sandwich(g: &MatrixK) -> Result<SandwichReport> {
    check_sandwich_eps(g, DEFAULT_EPS)
}

pub fn check_sandwich_eps(g: &MatrixK, eps: f64) -> Result<SandwichReport> {
    let hb = match breuillard_height_eps(g, None, eps)? {
        BreuillardHeight::Exact(h) => h,
        BreuillardHeight::Bounds { .. } => return Err(Error::DoesNotSplit),
    };
    let hg = canonical_height_glt_eps(g, eps)?;
    let t = g.size() as f64;
    let lower = hg.scale(1.0 / (2.0 * factorial(g.size())));
    let middle = hb.scale(t);
    let upper = hg;
    let holds = lower.value - lower.abs_error <= middle.value + middle.abs_error
        && middle.value - middle.abs_error <= upper.value + upper.abs_error;
    Ok(SandwichReport {
        lower,
        middle,
        upper,
        holds,
    })
}
