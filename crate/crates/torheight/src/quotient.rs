//! The conjugation quotient of GL_t by characteristic-polynomial invariants:
//! fiber classification over SL_2 trace values, the intersection calculus of
//! the diagonal special curves in GL_2, and torsion-coset intersection in
//! tori via exact integer linear algebra.
//!
//! Torsion points of the torus are represented additively in (Q/Z)^t
//! (exponent coordinates), which turns coset intersections into congruence
//! systems solved by Smith normal form.

use crate::error::{Error, Result};
use crate::lattice::{self, IMat};
use crate::matgroup::{char_poly, is_unipotent_torsion, jordan_chevalley, MatrixK};
use crate::numfield::{Field, FieldElem, NumberField};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Conjugation-quotient coordinates of an invertible matrix: the non-leading
/// coefficients `c_1 .. c_t` of the characteristic polynomial
/// `y^t + c_1 y^(t-1) + ... + c_t`. Two elements lie in the same fiber of
/// the quotient exactly when these agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberInvariant {
    pub coefficients: Vec<FieldElem>,
}

impl FiberInvariant {
    pub fn trace(&self) -> FieldElem {
        -&self.coefficients[0]
    }

    pub fn det(&self) -> FieldElem {
        let c_t = self.coefficients.last().unwrap();
        if self.coefficients.len() % 2 == 1 {
            -c_t
        } else {
            c_t.clone()
        }
    }
}

pub fn pi_invariants(g: &MatrixK) -> Result<FiberInvariant> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let chi = char_poly(g);
    let t = g.size();
    let coefficients = (0..t).map(|k| chi.coeff(t - 1 - k)).collect();
    Ok(FiberInvariant { coefficients })
}

pub fn same_fiber(g: &MatrixK, h: &MatrixK) -> Result<bool> {
    if g.field() != h.field() {
        return Err(Error::FieldMismatch);
    }
    if g.size() != h.size() {
        return Err(Error::SizeMismatch);
    }
    Ok(pi_invariants(g)? == pi_invariants(h)?)
}

/// The semisimple part: representative of the unique closed conjugacy class
/// in the fiber of g.
pub fn closed_class_representative(g: &MatrixK) -> Result<MatrixK> {
    Ok(jordan_chevalley(g)?.semisimple_part)
}

/// Classification of the SL_2 trace fiber over tau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sl2FiberClass {
    /// tau = zeta + zeta^-1 for a root of unity zeta != +-1: the fiber is a
    /// single semisimple torsion class, so torsion is dense in it.
    TorsionDense,
    /// tau = +-2: the only torsion points in the fiber are the central
    /// elements +-1; the rest of the fiber is a non-semisimple class.
    CentralUnipotentFiber,
    /// No torsion in the fiber at all.
    NoTorsion,
}

/// Decides the class of `tr^{-1}(tau)` exactly via the root-of-unity test on
/// the eigen-factors of the companion matrix of `x^2 - tau x + 1`.
pub fn sl2_fiber_classify(tau: &FieldElem) -> Result<Sl2FiberClass> {
    let field = tau.field().clone();
    let two = FieldElem::from_i64(&field, 2);
    if *tau == two || *tau == -&two {
        return Ok(Sl2FiberClass::CentralUnipotentFiber);
    }
    let companion = MatrixK::new(
        &field,
        vec![
            vec![FieldElem::zero(&field), FieldElem::from_i64(&field, -1)],
            vec![FieldElem::one(&field), tau.clone()],
        ],
    )?;
    match is_unipotent_torsion(&companion)? {
        Some(_) => Ok(Sl2FiberClass::TorsionDense),
        None => Ok(Sl2FiberClass::NoTorsion),
    }
}

/// Quotient coordinates of the special-curve point `A_{k,lambda} =
/// diag(lambda^k, lambda)`: the pair `(lambda^k + lambda, lambda^(k+1))`.
pub fn special_curve_point(k: u32, lam: &FieldElem) -> Result<(FieldElem, FieldElem)> {
    if lam.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let pk = lam.pow(k as u64);
    Ok((&pk + lam, &pk * lam))
}

/// The intersection of the conjugation closures of two special curves in
/// GL_2: the root-of-unity orders cutting it out and the full exact point
/// set in the quotient.
#[derive(Clone, Debug)]
pub struct CurveIntersection {
    /// The two conditions `lambda^orders[0] = 1` or `lambda^orders[1] = 1`,
    /// with orders `[k1 k2 - 1, |k1 - k2|]`.
    pub orders: [u64; 2],
    /// L = lcm of the orders; the points live in Q(zeta_L).
    pub cyclotomic_order: u64,
    pub field: Field,
    /// Deduplicated `(trace, det)` pairs, sorted canonically.
    pub points: Vec<(FieldElem, FieldElem)>,
}

pub fn intersect_special_curves(k1: u32, k2: u32) -> Result<CurveIntersection> {
    if k1 < 2 || k2 < 2 || k1 == k2 {
        return Err(Error::Precondition(
            "special curves need distinct parameters k >= 2",
        ));
    }
    let a = (k1 as u64) * (k2 as u64) - 1;
    let b = (k1 as i64 - k2 as i64).unsigned_abs();
    let l = a.lcm(&b);
    let field = NumberField::cyclotomic_field(l);
    let zeta = FieldElem::generator(&field);
    let mut points: Vec<(FieldElem, FieldElem)> = Vec::new();
    let mut lambdas: Vec<u64> = Vec::new();
    for j in 0..a {
        lambdas.push(j * (l / a));
    }
    for j in 0..b {
        lambdas.push(j * (l / b));
    }
    lambdas.sort_unstable();
    lambdas.dedup();
    for e in lambdas {
        let lam = zeta.pow(e);
        points.push(special_curve_point(k1, &lam)?);
    }
    points.sort_by(|x, y| {
        x.0.coeff_cmp(&y.0).then_with(|| x.1.coeff_cmp(&y.1))
    });
    points.dedup();
    Ok(CurveIntersection {
        orders: [a, b],
        cyclotomic_order: l,
        field,
        points,
    })
}

/// Torsion density of the quotient fiber over a special-curve point with a
/// root-of-unity parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntersectionFiberClass {
    /// The fiber is a single semisimple torsion conjugacy class.
    TorsionDenseFiber,
    /// `lambda^k = lambda`: the fiber degenerates to a central torsion point
    /// plus a non-semisimple class, so its torsion points are not dense.
    SparseTorsionFiber,
}

pub fn classify_intersection_fiber(
    k: u32,
    lam: &FieldElem,
) -> Result<IntersectionFiberClass> {
    if lam.is_root_of_unity().is_none() {
        return Err(Error::NotRootOfUnity);
    }
    if lam.pow(k as u64 - 1).is_one() {
        Ok(IntersectionFiberClass::SparseTorsionFiber)
    } else {
        Ok(IntersectionFiberClass::TorsionDenseFiber)
    }
}

/// Saturated cocharacter lattice of a subtorus of G_m^t, columns a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtorusLattice {
    ambient_rank: usize,
    /// t x r integer matrix, columns independent and the lattice saturated.
    basis: IMat,
}

impl SubtorusLattice {
    pub fn new(ambient_rank: usize, basis: IMat) -> Result<SubtorusLattice> {
        if basis.len() != ambient_rank {
            return Err(Error::RankMismatch);
        }
        let r = if basis.is_empty() { 0 } else { basis[0].len() };
        for row in &basis {
            if row.len() != r {
                return Err(Error::SizeMismatch);
            }
        }
        if r > 0 {
            let divisors = lattice::elementary_divisors(&basis);
            if divisors.len() != r {
                return Err(Error::Precondition("lattice basis columns are dependent"));
            }
            if divisors.iter().any(|d| !d.is_one()) {
                return Err(Error::Precondition("lattice is not saturated"));
            }
        }
        Ok(SubtorusLattice {
            ambient_rank,
            basis,
        })
    }

    pub fn full(ambient_rank: usize) -> SubtorusLattice {
        SubtorusLattice {
            ambient_rank,
            basis: lattice::identity(ambient_rank),
        }
    }

    pub fn trivial(ambient_rank: usize) -> SubtorusLattice {
        SubtorusLattice {
            ambient_rank,
            basis: vec![vec![]; ambient_rank],
        }
    }

    pub fn from_i64(ambient_rank: usize, cols: &[&[i64]]) -> Result<SubtorusLattice> {
        let basis = (0..ambient_rank)
            .map(|i| cols.iter().map(|c| BigInt::from(c[i])).collect())
            .collect();
        SubtorusLattice::new(ambient_rank, basis)
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        if self.basis.is_empty() {
            0
        } else {
            self.basis[0].len()
        }
    }

    pub fn basis(&self) -> &IMat {
        &self.basis
    }

    /// Rational membership x in L tensor Q, i.e. the column span over Q.
    pub fn spans_rationally(&self, v: &[BigRational]) -> bool {
        // solve basis * x = v over Q by elimination
        let t = self.ambient_rank;
        let r = self.rank();
        let mut m: Vec<Vec<BigRational>> = (0..t)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..r)
                    .map(|j| BigRational::from_integer(self.basis[i][j].clone()))
                    .collect();
                row.push(v[i].clone());
                row
            })
            .collect();
        let mut row = 0usize;
        for col in 0..r {
            let p = (row..t).find(|&i| !m[i][col].is_zero());
            let p = match p {
                None => continue,
                Some(p) => p,
            };
            m.swap(row, p);
            let inv = m[row][col].clone().recip();
            for c in col..=r {
                m[row][c] = &m[row][c] * &inv;
            }
            for i in 0..t {
                if i != row && !m[i][col].is_zero() {
                    let f = m[i][col].clone();
                    for c in col..=r {
                        let s = &m[row][c] * &f;
                        m[i][c] = &m[i][c] - &s;
                    }
                }
            }
            row += 1;
        }
        (row..t).all(|i| m[i][r].is_zero())
    }
}

/// A torsion translate of a subtorus, in exponent coordinates: the
/// root-of-unity tuple `zeta_j = exp(2 pi i q_j)` is stored as the residues
/// `q_j` in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionCoset {
    pub lattice: SubtorusLattice,
    pub translate: Vec<BigRational>,
}

fn frac(q: &BigRational) -> BigRational {
    let f = q - q.floor();
    debug_assert!(!f.is_negative() && f < BigRational::one());
    f
}

impl TorsionCoset {
    pub fn new(lattice: SubtorusLattice, translate: Vec<BigRational>) -> Result<TorsionCoset> {
        if translate.len() != lattice.ambient_rank() {
            return Err(Error::RankMismatch);
        }
        Ok(TorsionCoset {
            lattice,
            translate: translate.iter().map(frac).collect(),
        })
    }

    pub fn ambient_rank(&self) -> usize {
        self.lattice.ambient_rank()
    }

    /// Exact membership of a torsion point (exponent coordinates) in the
    /// coset: `x - h` in `L tensor Q + Z^t`.
    pub fn contains(&self, point: &[BigRational]) -> bool {
        if point.len() != self.ambient_rank() {
            return false;
        }
        let t = self.ambient_rank();
        let (u, s, _) = lattice::smith_normal_form(self.lattice.basis());
        let rank = (0..self.lattice.rank().min(t))
            .take_while(|&i| !s[i][i].is_zero())
            .count();
        let delta: Vec<BigRational> = (0..t)
            .map(|i| &point[i] - &self.translate[i])
            .collect();
        let y = rational_mat_vec(&u, &delta);
        y.iter().skip(rank).all(|q| q.is_integer())
    }

    /// Canonical representative of the translate modulo `L tensor Q + Z^t`,
    /// so equal cosets get equal encodings.
    pub fn canonicalize(&self) -> TorsionCoset {
        let t = self.ambient_rank();
        let (u, s, _) = lattice::smith_normal_form(self.lattice.basis());
        let rank = (0..self.lattice.rank().min(t))
            .take_while(|&i| !s[i][i].is_zero())
            .count();
        let mut y = rational_mat_vec(&u, &self.translate);
        for item in y.iter_mut().take(rank) {
            *item = BigRational::zero();
        }
        for item in y.iter_mut().skip(rank) {
            *item = frac(item);
        }
        // invert u exactly (unimodular)
        let u_inv = invert_unimodular(&u);
        let h = rational_mat_vec(&u_inv, &y);
        TorsionCoset {
            lattice: self.lattice.clone(),
            translate: h.iter().map(frac).collect(),
        }
    }
}

fn rational_mat_vec(a: &IMat, v: &[BigRational]) -> Vec<BigRational> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .map(|(x, y)| BigRational::from_integer(x.clone()) * y)
                .sum()
        })
        .collect()
}

fn invert_unimodular(a: &IMat) -> IMat {
    let n = a.len();
    // Gauss-Jordan over Q; entries of the inverse are integers since
    // |det| = 1, but rational arithmetic keeps this simple.
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero()).unwrap();
        m.swap(col, p);
        inv.swap(col, p);
        let pinv = m[col][col].clone().recip();
        for c in 0..n {
            m[col][c] = &m[col][c] * &pinv;
            inv[col][c] = &inv[col][c] * &pinv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..n {
                    let s = &m[col][c] * &f;
                    m[r][c] = &m[r][c] - &s;
                    let s = &inv[col][c] * &f;
                    inv[r][c] = &inv[r][c] - &s;
                }
            }
        }
    }
    inv.iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    debug_assert!(x.is_integer());
                    x.to_integer()
                })
                .collect()
        })
        .collect()
}

/// The saturated lattice with the same rational span as the given integer
/// generators (columns): the cocharacter lattice of the subtorus they
/// generate.
pub fn saturate(ambient_rank: usize, generators: &IMat) -> Result<SubtorusLattice> {
    if generators.len() != ambient_rank {
        return Err(Error::RankMismatch);
    }
    let cols = if generators.is_empty() {
        0
    } else {
        generators[0].len()
    };
    if cols == 0 {
        return SubtorusLattice::new(ambient_rank, vec![vec![]; ambient_rank]);
    }
    let (u, s, _) = lattice::smith_normal_form(generators);
    let rank = (0..cols.min(ambient_rank))
        .take_while(|&i| !s[i][i].is_zero())
        .count();
    let u_inv = invert_unimodular(&u);
    let basis: IMat = (0..ambient_rank)
        .map(|i| (0..rank).map(|j| u_inv[i][j].clone()).collect())
        .collect();
    SubtorusLattice::new(ambient_rank, basis)
}

/// Intersects two torsion cosets of subtori of G_m^t. Empty when the cosets
/// do not meet; otherwise a torsion coset on the exact lattice intersection,
/// with a translate found by solving the exponent congruence system
/// `h1 + L1 x = h2 + L2 y (mod 1)` via Smith normal form.
pub fn intersect_torsion_cosets(
    c1: &TorsionCoset,
    c2: &TorsionCoset,
) -> Result<Option<TorsionCoset>> {
    let t = c1.ambient_rank();
    if c2.ambient_rank() != t {
        return Err(Error::RankMismatch);
    }
    let r1 = c1.lattice.rank();
    let r2 = c2.lattice.rank();
    // A = [L1 | -L2]
    let a: IMat = (0..t)
        .map(|i| {
            let mut row: Vec<BigInt> = Vec::with_capacity(r1 + r2);
            for j in 0..r1 {
                row.push(c1.lattice.basis()[i][j].clone());
            }
            for j in 0..r2 {
                row.push(-c2.lattice.basis()[i][j].clone());
            }
            row
        })
        .collect();
    let delta: Vec<BigRational> = (0..t)
        .map(|i| &c2.translate[i] - &c1.translate[i])
        .collect();
    let (u, s, v) = lattice::smith_normal_form(&a);
    let rank = (0..(r1 + r2).min(t))
        .take_while(|&i| !s[i][i].is_zero())
        .count();
    let y = rational_mat_vec(&u, &delta);
    if y.iter().skip(rank).any(|q| !q.is_integer()) {
        return Ok(None);
    }
    // one solution z' of S z' = y (mod 1), then z = V z'
    let mut zp = vec![BigRational::zero(); r1 + r2];
    for i in 0..rank {
        zp[i] = &y[i] / BigRational::from_integer(s[i][i].clone());
    }
    let z = rational_mat_vec(&v, &zp);
    // translate h3 = h1 + L1 * x with x the first r1 coordinates of z
    let mut h3 = c1.translate.clone();
    for i in 0..t {
        for j in 0..r1 {
            h3[i] = &h3[i]
                + BigRational::from_integer(c1.lattice.basis()[i][j].clone()) * &z[j];
        }
    }

    // lattice intersection via the integer kernel of A
    let kernel = lattice::kernel_basis(&a);
    let mut inter_cols: IMat = vec![Vec::new(); t];
    for k in &kernel {
        for i in 0..t {
            let mut s = BigInt::zero();
            for j in 0..r1 {
                s += &c1.lattice.basis()[i][j] * &k[j];
            }
            inter_cols[i].push(s);
        }
    }
    let reduced = lattice::hnf_columns(&inter_cols);
    let lat = SubtorusLattice::new(t, reduced)?;
    let coset = TorsionCoset::new(lat, h3)?.canonicalize();
    debug_assert!(c1.contains(&coset.translate));
    debug_assert!(c2.contains(&coset.translate));
    Ok(Some(coset))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::NumberField;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn pi_invariants_examples() {
        let f = NumberField::rationals();
        let id = MatrixK::identity(&f, 2);
        let inv = pi_invariants(&id).unwrap();
        assert_eq!(inv.trace(), FieldElem::from_i64(&f, 2));
        assert_eq!(inv.det(), FieldElem::one(&f));

        let rot = MatrixK::from_i64(&f, &[&[0, -1], &[1, 0]]);
        let inv = pi_invariants(&rot).unwrap();
        assert_eq!(inv.trace(), FieldElem::zero(&f));
        assert_eq!(inv.det(), FieldElem::one(&f));

        // diag(zeta_7^3, zeta_7): trace zeta^3 + zeta, det zeta^4
        let k7 = NumberField::cyclotomic_field(7);
        let z = FieldElem::generator(&k7);
        let g = MatrixK::diagonal(&k7, &[z.pow(3), z.clone()]).unwrap();
        let inv = pi_invariants(&g).unwrap();
        assert_eq!(inv.trace(), &z.pow(3) + &z);
        assert_eq!(inv.det(), z.pow(4));

        let sing = MatrixK::from_i64(&f, &[&[0, 0], &[0, 1]]);
        assert_eq!(pi_invariants(&sing).unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn same_fiber_and_representative() {
        let f = NumberField::rationals();
        let g = MatrixK::from_i64(&f, &[&[2, 1], &[0, 2]]);
        let h = MatrixK::from_i64(&f, &[&[2, 0], &[0, 2]]);
        assert!(same_fiber(&g, &h).unwrap());
        let rep = closed_class_representative(&g).unwrap();
        assert_eq!(rep, h);
        assert!(same_fiber(&g, &rep).unwrap());
        assert!(crate::matgroup::is_semisimple(&rep));

        let d12 = MatrixK::from_i64(&f, &[&[1, 0], &[0, 2]]);
        let d21 = MatrixK::from_i64(&f, &[&[2, 0], &[0, 1]]);
        assert!(same_fiber(&d12, &d21).unwrap());
        assert!(!same_fiber(&MatrixK::identity(&f, 2), &d12).unwrap());
    }

    #[test]
    fn same_fiber_is_equivalence_on_conjugates() {
        let f = NumberField::rationals();
        let g = MatrixK::from_i64(&f, &[&[3, 1], &[2, 5]]);
        for p in [
            MatrixK::from_i64(&f, &[&[1, 1], &[0, 1]]),
            MatrixK::from_i64(&f, &[&[2, 3], &[1, 2]]),
        ] {
            let c = g.conjugate_by(&p).unwrap();
            assert!(same_fiber(&g, &c).unwrap());
            assert!(same_fiber(&c, &g).unwrap());
        }
        assert!(same_fiber(&g, &g).unwrap());
    }

    #[test]
    fn sl2_fibers() {
        let f = NumberField::rationals();
        // tau = -1 = zeta_3 + zeta_3^-1
        assert_eq!(
            sl2_fiber_classify(&FieldElem::from_i64(&f, -1)).unwrap(),
            Sl2FiberClass::TorsionDense
        );
        assert_eq!(
            sl2_fiber_classify(&FieldElem::from_i64(&f, 2)).unwrap(),
            Sl2FiberClass::CentralUnipotentFiber
        );
        assert_eq!(
            sl2_fiber_classify(&FieldElem::from_i64(&f, -2)).unwrap(),
            Sl2FiberClass::CentralUnipotentFiber
        );
        assert_eq!(
            sl2_fiber_classify(&FieldElem::from_i64(&f, 3)).unwrap(),
            Sl2FiberClass::NoTorsion
        );
        assert_eq!(
            sl2_fiber_classify(&FieldElem::from_rational(&f, q(5, 2))).unwrap(),
            Sl2FiberClass::NoTorsion
        );
        // zeta_m + zeta_m^-1 for a few m
        for m in [3u64, 5, 8, 12, 30] {
            let k = NumberField::cyclotomic_field(m);
            let z = FieldElem::generator(&k);
            let tau = &z + &z.inv().unwrap();
            assert_eq!(
                sl2_fiber_classify(&tau).unwrap(),
                Sl2FiberClass::TorsionDense,
                "m = {}",
                m
            );
        }
    }

    #[test]
    fn special_curve_points() {
        let f = NumberField::rationals();
        let one = FieldElem::one(&f);
        assert_eq!(
            special_curve_point(2, &one).unwrap(),
            (FieldElem::from_i64(&f, 2), FieldElem::one(&f))
        );
        let k14 = NumberField::cyclotomic_field(14);
        let z = FieldElem::generator(&k14);
        let (tr, det) = special_curve_point(3, &z).unwrap();
        assert_eq!(tr, &z.pow(3) + &z);
        assert_eq!(det, z.pow(4));
        let m1 = FieldElem::from_i64(&f, -1);
        assert_eq!(
            special_curve_point(5, &m1).unwrap(),
            (FieldElem::from_i64(&f, -2), FieldElem::one(&f))
        );
        assert_eq!(
            special_curve_point(3, &FieldElem::zero(&f)).unwrap_err(),
            Error::ZeroParameter
        );
    }

    #[test]
    fn intersect_3_5() {
        let ci = intersect_special_curves(3, 5).unwrap();
        assert_eq!(ci.orders, [14, 2]);
        // brute-force oracle below (in the acceptance suite) pins the count
        assert_eq!(ci.points.len(), 14);
        // deterministic: rerun gives identical output
        let ci2 = intersect_special_curves(3, 5).unwrap();
        assert_eq!(ci.points, ci2.points);
    }

    #[test]
    fn intersect_2_3() {
        let ci = intersect_special_curves(2, 3).unwrap();
        assert_eq!(ci.orders, [5, 1]);
        assert_eq!(ci.points.len(), 5);
    }

    #[test]
    fn fiber_classification_cases() {
        let k14 = NumberField::cyclotomic_field(14);
        let z = FieldElem::generator(&k14);
        let one = FieldElem::one(&k14);
        assert_eq!(
            classify_intersection_fiber(3, &one).unwrap(),
            IntersectionFiberClass::SparseTorsionFiber
        );
        assert_eq!(
            classify_intersection_fiber(3, &z.pow(7)).unwrap(), // -1
            IntersectionFiberClass::SparseTorsionFiber
        );
        assert_eq!(
            classify_intersection_fiber(3, &z.pow(2)).unwrap(), // zeta_7
            IntersectionFiberClass::TorsionDenseFiber
        );
        let f = NumberField::rationals();
        assert_eq!(
            classify_intersection_fiber(3, &FieldElem::from_i64(&f, 2)).unwrap_err(),
            Error::NotRootOfUnity
        );
    }

    #[test]
    fn coset_intersection_full_lattices() {
        let full = SubtorusLattice::full(2);
        let c1 = TorsionCoset::new(full.clone(), vec![q(1, 3), q(1, 2)]).unwrap();
        let c2 = TorsionCoset::new(full.clone(), vec![q(1, 7), q(0, 1)]).unwrap();
        let out = intersect_torsion_cosets(&c1, &c2).unwrap().unwrap();
        assert_eq!(out.lattice.rank(), 2);
        assert!(out.translate.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn coset_intersection_transverse_lines() {
        let s1 = SubtorusLattice::from_i64(2, &[&[1, 0]]).unwrap();
        let s2 = SubtorusLattice::from_i64(2, &[&[0, 1]]).unwrap();
        let c1 = TorsionCoset::new(s1, vec![q(0, 1), q(1, 3)]).unwrap();
        let c2 = TorsionCoset::new(s2, vec![q(1, 4), q(0, 1)]).unwrap();
        let out = intersect_torsion_cosets(&c1, &c2).unwrap().unwrap();
        assert_eq!(out.lattice.rank(), 0);
        assert_eq!(out.translate, vec![q(1, 4), q(1, 3)]);
    }

    #[test]
    fn coset_intersection_empty() {
        let diag = SubtorusLattice::from_i64(2, &[&[1, 1]]).unwrap();
        let c1 = TorsionCoset::new(diag.clone(), vec![q(0, 1), q(0, 1)]).unwrap();
        let c2 = TorsionCoset::new(diag.clone(), vec![q(1, 2), q(0, 1)]).unwrap();
        assert_eq!(intersect_torsion_cosets(&c1, &c2).unwrap(), None);
        // exhaustive small-denominator oracle: no common torsion point with
        // denominator dividing 4
        for num_x in 0..4 {
            for num_y in 0..4 {
                let p = vec![q(num_x, 4), q(num_y, 4)];
                assert!(!(c1.contains(&p) && c2.contains(&p)));
            }
        }
    }

    #[test]
    fn coset_membership_and_canonicalization() {
        let diag = SubtorusLattice::from_i64(2, &[&[1, 1]]).unwrap();
        let c = TorsionCoset::new(diag, vec![q(1, 2), q(0, 1)]).unwrap();
        assert!(c.contains(&[q(1, 2), q(0, 1)]));
        assert!(c.contains(&[q(5, 6), q(1, 3)])); // shift by (1/3, 1/3)
        assert!(!c.contains(&[q(0, 1), q(1, 4)]));
        let canon1 = c.canonicalize();
        let shifted = TorsionCoset::new(c.lattice.clone(), vec![q(3, 4), q(1, 4)]).unwrap();
        let canon2 = shifted.canonicalize();
        assert_eq!(canon1, canon2);
    }

    #[test]
    fn saturation_is_enforced() {
        // span{(2,0)} is not saturated in Z^2
        assert!(SubtorusLattice::from_i64(2, &[&[2, 0]]).is_err());
        assert!(SubtorusLattice::from_i64(2, &[&[1, 1]]).is_ok());
        // dependent columns rejected
        assert!(SubtorusLattice::from_i64(2, &[&[1, 0], &[1, 0]]).is_err());
    }
}
