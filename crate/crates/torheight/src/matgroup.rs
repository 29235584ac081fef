//! Exact matrix algebra over a number field: characteristic and minimal
//! polynomials, the multiplicative Jordan-Chevalley decomposition, and the
//! torsion / unipotent-torsion classifiers.

use crate::error::{Error, Result};
use crate::exactpoly::{factor_rational, poly_is_cyclotomic, QPoly};
use crate::numfield::{norm_poly, Field, FieldElem, KPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Square matrix over a number field; the ambient group element of GL_t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixK {
    field: Field,
    size: usize,
    entries: Vec<Vec<FieldElem>>,
}

impl MatrixK {
    pub fn new(field: &Field, entries: Vec<Vec<FieldElem>>) -> Result<MatrixK> {
        let t = entries.len();
        if t == 0 {
            return Err(Error::Precondition("empty matrix"));
        }
        for row in &entries {
            if row.len() != t {
                return Err(Error::SizeMismatch);
            }
            for e in row {
                if e.field() != field {
                    return Err(Error::FieldMismatch);
                }
            }
        }
        Ok(MatrixK {
            field: field.clone(),
            size: t,
            entries,
        })
    }

    pub fn identity(field: &Field, t: usize) -> MatrixK {
        let entries = (0..t)
            .map(|i| {
                (0..t)
                    .map(|j| {
                        if i == j {
                            FieldElem::one(field)
                        } else {
                            FieldElem::zero(field)
                        }
                    })
                    .collect()
            })
            .collect();
        MatrixK {
            field: field.clone(),
            size: t,
            entries,
        }
    }

    pub fn diagonal(field: &Field, diag: &[FieldElem]) -> Result<MatrixK> {
        let t = diag.len();
        let mut m = MatrixK::identity(field, t);
        for (i, d) in diag.iter().enumerate() {
            if d.field() != field {
                return Err(Error::FieldMismatch);
            }
            m.entries[i][i] = d.clone();
        }
        Ok(m)
    }

    pub fn from_i64(field: &Field, rows: &[&[i64]]) -> MatrixK {
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|&x| FieldElem::from_i64(field, x)).collect())
            .collect();
        MatrixK::new(field, entries).unwrap()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entries(&self) -> &Vec<Vec<FieldElem>> {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElem {
        &self.entries[i][j]
    }

    pub fn is_identity(&self) -> bool {
        *self == MatrixK::identity(&self.field, self.size)
    }

    pub fn trace(&self) -> FieldElem {
        let mut tr = FieldElem::zero(&self.field);
        for i in 0..self.size {
            tr = &tr + &self.entries[i][i];
        }
        tr
    }

    pub fn scale(&self, c: &FieldElem) -> MatrixK {
        MatrixK {
            field: self.field.clone(),
            size: self.size,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|e| e * c).collect())
                .collect(),
        }
    }

    pub fn det(&self) -> FieldElem {
        let t = self.size;
        let mut m = self.entries.clone();
        let mut result = FieldElem::one(&self.field);
        for col in 0..t {
            let pivot = (col..t).find(|&r| !m[r][col].is_zero());
            let pivot = match pivot {
                None => return FieldElem::zero(&self.field),
                Some(p) => p,
            };
            if pivot != col {
                m.swap(pivot, col);
                result = -&result;
            }
            let pv = m[col][col].clone();
            result = &result * &pv;
            let inv = pv.inv().unwrap();
            for r in (col + 1)..t {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &inv;
                for c in col..t {
                    let sub = &m[col][c] * &factor;
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        result
    }

    pub fn inverse(&self) -> Result<MatrixK> {
        let t = self.size;
        let mut m = self.entries.clone();
        let mut inv = MatrixK::identity(&self.field, t).entries;
        for col in 0..t {
            let pivot = (col..t)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            m.swap(pivot, col);
            inv.swap(pivot, col);
            let pv_inv = m[col][col].inv().map_err(|_| Error::SingularMatrix)?;
            for c in 0..t {
                m[col][c] = &m[col][c] * &pv_inv;
                inv[col][c] = &inv[col][c] * &pv_inv;
            }
            for r in 0..t {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].clone();
                for c in 0..t {
                    let s = &m[col][c] * &factor;
                    m[r][c] = &m[r][c] - &s;
                    let s = &inv[col][c] * &factor;
                    inv[r][c] = &inv[r][c] - &s;
                }
            }
        }
        MatrixK::new(&self.field, inv)
    }

    pub fn pow(&self, e: u64) -> MatrixK {
        let mut acc = MatrixK::identity(&self.field, self.size);
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

    /// `p g p^-1`.
    pub fn conjugate_by(&self, p: &MatrixK) -> Result<MatrixK> {
        if p.field != self.field || p.size != self.size {
            return Err(Error::SizeMismatch);
        }
        Ok(&(p * self) * &p.inverse()?)
    }

    /// Evaluates a polynomial over the field at this matrix.
    pub fn eval_kpoly(&self, f: &KPoly) -> MatrixK {
        let mut acc = MatrixK::identity(&self.field, self.size).scale(&FieldElem::zero(&self.field));
        for c in f.coeffs().iter().rev() {
            acc = &(&acc * self) + &MatrixK::identity(&self.field, self.size).scale(c);
        }
        acc
    }
}

impl Add for &MatrixK {
    type Output = MatrixK;
    fn add(self, rhs: &MatrixK) -> MatrixK {
        assert_eq!(self.size, rhs.size);
        MatrixK {
            field: self.field.clone(),
            size: self.size,
            entries: (0..self.size)
                .map(|i| {
                    (0..self.size)
                        .map(|j| &self.entries[i][j] + &rhs.entries[i][j])
                        .collect()
                })
                .collect(),
        }
    }
}

impl Sub for &MatrixK {
    type Output = MatrixK;
    fn sub(self, rhs: &MatrixK) -> MatrixK {
        assert_eq!(self.size, rhs.size);
        MatrixK {
            field: self.field.clone(),
            size: self.size,
            entries: (0..self.size)
                .map(|i| {
                    (0..self.size)
                        .map(|j| &self.entries[i][j] - &rhs.entries[i][j])
                        .collect()
                })
                .collect(),
        }
    }
}

impl Neg for &MatrixK {
    type Output = MatrixK;
    fn neg(self) -> MatrixK {
        MatrixK {
            field: self.field.clone(),
            size: self.size,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|e| -e).collect())
                .collect(),
        }
    }
}

impl Mul for &MatrixK {
    type Output = MatrixK;
    fn mul(self, rhs: &MatrixK) -> MatrixK {
        assert_eq!(self.size, rhs.size);
        let t = self.size;
        let mut out = vec![vec![FieldElem::zero(&self.field); t]; t];
        for i in 0..t {
            for k in 0..t {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..t {
                    if rhs.entries[k][j].is_zero() {
                        continue;
                    }
                    let p = &self.entries[i][k] * &rhs.entries[k][j];
                    out[i][j] = &out[i][j] + &p;
                }
            }
        }
        MatrixK {
            field: self.field.clone(),
            size: t,
            entries: out,
        }
    }
}

impl fmt::Display for MatrixK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Monic characteristic polynomial of degree t, by Faddeev-LeVerrier
/// (valid in characteristic zero).
pub fn char_poly(g: &MatrixK) -> KPoly {
    let field = g.field().clone();
    let t = g.size();
    let mut coeffs = vec![FieldElem::zero(&field); t + 1];
    coeffs[t] = FieldElem::one(&field);
    let mut m = g.clone();
    for k in 1..=t {
        let tr = m.trace();
        let ck = &tr
            * &FieldElem::from_rational(
                &field,
                BigRational::new(BigInt::from(-1), BigInt::from(k as i64)),
            );
        coeffs[t - k] = ck.clone();
        if k == t {
            break;
        }
        let shifted = &m + &MatrixK::identity(&field, t).scale(&ck);
        m = g * &shifted;
    }
    KPoly::new(&field, coeffs)
}

/// Least-degree monic annihilating polynomial, by Krylov iteration on the
/// standard basis vectors.
pub fn min_poly_matrix(g: &MatrixK) -> KPoly {
    let field = g.field().clone();
    let t = g.size();
    let mut acc = KPoly::one(&field);
    for j in 0..t {
        let mut v = vec![FieldElem::zero(&field); t];
        v[j] = FieldElem::one(&field);
        let p = krylov_annihilator(g, &v);
        // acc = lcm(acc, p)
        let gcd = crate::numfield::kpoly::kpoly_gcd(&acc, &p).unwrap();
        let (q, _) = p.divrem(&gcd).unwrap();
        acc = &acc * &q;
        if acc.degree() == Some(t) {
            break;
        }
    }
    acc.monic().unwrap()
}

fn apply(g: &MatrixK, v: &[FieldElem]) -> Vec<FieldElem> {
    let t = g.size();
    (0..t)
        .map(|i| {
            let mut s = FieldElem::zero(g.field());
            for (k, vk) in v.iter().enumerate() {
                if !vk.is_zero() && !g.entries()[i][k].is_zero() {
                    s = &s + &(&g.entries()[i][k] * vk);
                }
            }
            s
        })
        .collect()
}

/// Minimal monic polynomial with p(g) v = 0, found at the first linear
/// dependence of the Krylov vectors v, gv, g^2 v, ...
fn krylov_annihilator(g: &MatrixK, v: &[FieldElem]) -> KPoly {
    let field = g.field().clone();
    let t = g.size();
    let mut krylov: Vec<Vec<FieldElem>> = vec![v.to_vec()];
    loop {
        let last = krylov.last().unwrap();
        let next = apply(g, last);
        // solve sum_i x_i krylov[i] = next over the field
        if let Some(x) = solve_in_span(&field, t, &krylov, &next) {
            // g^k v = sum x_i g^i v, so p = y^k - sum x_i y^i
            let k = krylov.len();
            let mut coeffs = vec![FieldElem::zero(&field); k + 1];
            coeffs[k] = FieldElem::one(&field);
            for (i, xi) in x.into_iter().enumerate() {
                coeffs[i] = -&xi;
            }
            return KPoly::new(&field, coeffs);
        }
        krylov.push(next);
    }
}

fn solve_in_span(
    field: &Field,
    dim: usize,
    basis: &[Vec<FieldElem>],
    target: &[FieldElem],
) -> Option<Vec<FieldElem>> {
    let n = basis.len();
    // augmented Gaussian elimination over the field
    let mut rows: Vec<Vec<FieldElem>> = (0..dim)
        .map(|i| {
            let mut row: Vec<FieldElem> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..n {
        let pr = (r..dim).find(|&i| !rows[i][c].is_zero());
        let pr = match pr {
            None => continue,
            Some(p) => p,
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inv().unwrap();
        for cc in c..=n {
            rows[r][cc] = &rows[r][cc] * &inv;
        }
        for i in 0..dim {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for cc in c..=n {
                    let s = &rows[r][cc] * &f;
                    rows[i][cc] = &rows[i][cc] - &s;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    // consistent iff no row with zero basis part and nonzero target
    for i in r..dim {
        if !rows[i][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![FieldElem::zero(field); n];
    for (row, col) in pivots {
        x[col] = rows[row][n].clone();
    }
    Some(x)
}

/// `(g - 1)^t = 0`.
pub fn is_unipotent(g: &MatrixK) -> bool {
    let n = &(g - &MatrixK::identity(g.field(), g.size()));
    let zero = MatrixK::identity(g.field(), g.size()).scale(&FieldElem::zero(g.field()));
    n.pow(g.size() as u64) == zero
}

/// Squarefree minimal polynomial.
pub fn is_semisimple(g: &MatrixK) -> bool {
    let m = min_poly_matrix(g);
    crate::numfield::kpoly::kpoly_gcd(&m, &m.derivative())
        .map(|d| d.degree() == Some(0))
        .unwrap_or(false)
}

/// The multiplicative Jordan decomposition `g = g_u g_s = g_s g_u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanPair {
    pub semisimple_part: MatrixK,
    pub unipotent_part: MatrixK,
}

/// Newton iteration on the squarefree part q of the characteristic
/// polynomial, started at g and run for ceil(log2 t) + 1 steps; the exact
/// verification q(g_s) = 0 afterwards is a hard internal error if it fails.
pub fn jordan_chevalley(g: &MatrixK) -> Result<JordanPair> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let chi = char_poly(g);
    let q = crate::numfield::kpoly::kpoly_squarefree_part(&chi)?;
    let dq = q.derivative();
    let t = g.size();
    let iterations = (t as f64).log2().ceil() as usize + 1;
    let mut s = g.clone();
    for _ in 0..iterations {
        let qs = s.eval_kpoly(&q);
        let dqs = s.eval_kpoly(&dq);
        let dq_inv = dqs
            .inverse()
            .expect("derivative of the radical is invertible along the Newton orbit");
        s = &s - &(&qs * &dq_inv);
    }
    let zero = MatrixK::identity(g.field(), t).scale(&FieldElem::zero(g.field()));
    assert!(
        s.eval_kpoly(&q) == zero,
        "Newton iteration failed to reach the semisimple part exactly"
    );
    let s_inv = s.inverse().map_err(|_| Error::SingularMatrix)?;
    let u = g * &s_inv;
    debug_assert_eq!(&u * &s, &s * &u);
    debug_assert!(is_unipotent(&u));
    Ok(JordanPair {
        semisimple_part: s,
        unipotent_part: u,
    })
}

/// The Q-factorization of the norm polynomial of the characteristic
/// polynomial: the eigenvalue conjugate classes of g with multiplicities.
/// Total degree is always `t * [K:Q]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenvalueData {
    pub factors: Vec<(QPoly, u32)>,
    pub ext_degree: usize,
    pub size: usize,
}

impl EigenvalueData {
    pub fn total_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(p, m)| p.degree().unwrap() * (*m as usize))
            .sum()
    }

    /// When every irreducible factor is cyclotomic, the lcm of the orders.
    pub fn cyclotomic_orders_lcm(&self) -> Option<u64> {
        let mut n: u64 = 1;
        for (p, _) in &self.factors {
            let m = poly_is_cyclotomic(p)?;
            n = n.lcm(&m);
        }
        Some(n)
    }
}

pub fn eigen_minpolys(g: &MatrixK) -> Result<EigenvalueData> {
    let chi = char_poly(g);
    let norm = norm_poly(g.field(), &chi)?;
    let fact = factor_rational(&norm)?;
    debug_assert!(fact.content.is_one());
    let data = EigenvalueData {
        factors: fact.factors,
        ext_degree: g.field().degree(),
        size: g.size(),
    };
    debug_assert_eq!(data.total_degree(), g.size() * g.field().degree());
    Ok(data)
}

/// Exact torsion order: requires semisimplicity and cyclotomic eigen-factors,
/// then n = lcm of the orders, confirmed by the exact power computation.
pub fn is_torsion(g: &MatrixK) -> Result<Option<u64>> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    if !is_semisimple(g) {
        return Ok(None);
    }
    let data = eigen_minpolys(g)?;
    match data.cyclotomic_orders_lcm() {
        None => Ok(None),
        Some(n) => {
            assert!(
                g.pow(n).is_identity(),
                "semisimple with cyclotomic eigenvalues must have order n"
            );
            Ok(Some(n))
        }
    }
}

/// Least n with `g^n` unipotent: the lcm of the eigenvalue orders when every
/// eigen-factor is cyclotomic, confirmed by an exact unipotency check.
pub fn is_unipotent_torsion(g: &MatrixK) -> Result<Option<u64>> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let data = eigen_minpolys(g)?;
    match data.cyclotomic_orders_lcm() {
        None => Ok(None),
        Some(n) => {
            assert!(
                is_unipotent(&g.pow(n)),
                "cyclotomic eigenvalues must make g^n unipotent"
            );
            Ok(Some(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::cyclotomic;
    use crate::numfield::NumberField;

    #[test]
    fn char_poly_examples() {
        let q = NumberField::rationals();
        let id = MatrixK::identity(&q, 2);
        assert_eq!(
            char_poly(&id).as_qpoly().unwrap(),
            QPoly::from_i64(&[1, -2, 1])
        );
        let rot = MatrixK::from_i64(&q, &[&[0, -1], &[1, 0]]);
        assert_eq!(char_poly(&rot).as_qpoly().unwrap(), QPoly::from_i64(&[1, 0, 1]));

        let k3 = NumberField::cyclotomic_field(3);
        let z = FieldElem::generator(&k3);
        let g = MatrixK::diagonal(&k3, &[z.clone(), z.pow(2)]).unwrap();
        assert_eq!(char_poly(&g).as_qpoly().unwrap(), cyclotomic(3));
    }

    #[test]
    fn char_poly_conjugation_invariant() {
        let q = NumberField::rationals();
        let g = MatrixK::from_i64(&q, &[&[2, 1, 0], &[0, 3, 5], &[1, 1, -1]]);
        let p = MatrixK::from_i64(&q, &[&[1, 2, 0], &[0, 1, 0], &[3, 0, 1]]);
        let conj = g.conjugate_by(&p).unwrap();
        assert_eq!(char_poly(&conj), char_poly(&g));
    }

    #[test]
    fn min_poly_examples() {
        let q = NumberField::rationals();
        let id = MatrixK::identity(&q, 3);
        assert_eq!(min_poly_matrix(&id).as_qpoly().unwrap(), QPoly::from_i64(&[-1, 1]));
        let shear = MatrixK::from_i64(&q, &[&[1, 1], &[0, 1]]);
        assert_eq!(
            min_poly_matrix(&shear).as_qpoly().unwrap(),
            QPoly::from_i64(&[1, -2, 1])
        );
        let d = MatrixK::from_i64(&q, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(
            min_poly_matrix(&d).as_qpoly().unwrap(),
            QPoly::from_i64(&[6, -5, 1])
        );
    }

    #[test]
    fn unipotent_and_semisimple_flags() {
        let q = NumberField::rationals();
        assert!(is_unipotent(&MatrixK::from_i64(&q, &[&[1, 5], &[0, 1]])));
        assert!(is_semisimple(&MatrixK::from_i64(&q, &[&[2, 0], &[0, 3]])));
        let bad = MatrixK::from_i64(&q, &[&[2, 1], &[0, 2]]);
        assert!(!is_unipotent(&bad));
        assert!(!is_semisimple(&bad));
    }

    #[test]
    fn jordan_2x2_over_q() {
        let q = NumberField::rationals();
        let g = MatrixK::from_i64(&q, &[&[2, 1], &[0, 2]]);
        let jp = jordan_chevalley(&g).unwrap();
        assert_eq!(
            jp.semisimple_part,
            MatrixK::from_i64(&q, &[&[2, 0], &[0, 2]])
        );
        let half = FieldElem::from_rational(&q, BigRational::new(1.into(), 2.into()));
        let expected_u = MatrixK::new(
            &q,
            vec![
                vec![FieldElem::one(&q), half],
                vec![FieldElem::zero(&q), FieldElem::one(&q)],
            ],
        )
        .unwrap();
        assert_eq!(jp.unipotent_part, expected_u);
        assert_eq!(&jp.unipotent_part * &jp.semisimple_part, g);
    }

    #[test]
    fn jordan_over_cyclotomic() {
        let k4 = NumberField::cyclotomic_field(4);
        let i = FieldElem::generator(&k4);
        let g = MatrixK::new(
            &k4,
            vec![
                vec![i.clone(), FieldElem::one(&k4)],
                vec![FieldElem::zero(&k4), i.clone()],
            ],
        )
        .unwrap();
        let jp = jordan_chevalley(&g).unwrap();
        assert_eq!(
            jp.semisimple_part,
            MatrixK::diagonal(&k4, &[i.clone(), i.clone()]).unwrap()
        );
        let i_inv = i.inv().unwrap();
        assert_eq!(jp.unipotent_part.entry(0, 1), &i_inv);
        assert_eq!(&jp.semisimple_part * &jp.unipotent_part, g);
        assert_eq!(char_poly(&jp.semisimple_part), char_poly(&g));
    }

    #[test]
    fn jordan_semisimple_input() {
        let q = NumberField::rationals();
        let g = MatrixK::from_i64(&q, &[&[0, -1], &[1, 0]]);
        let jp = jordan_chevalley(&g).unwrap();
        assert_eq!(jp.semisimple_part, g);
        assert!(jp.unipotent_part.is_identity());
    }

    #[test]
    fn jordan_rejects_singular() {
        let q = NumberField::rationals();
        let g = MatrixK::from_i64(&q, &[&[1, 0], &[0, 0]]);
        assert_eq!(jordan_chevalley(&g).unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn eigen_minpolys_examples() {
        let q = NumberField::rationals();
        let d = MatrixK::from_i64(&q, &[&[2, 0], &[0, 3]]);
        let data = eigen_minpolys(&d).unwrap();
        assert_eq!(
            data.factors,
            vec![(QPoly::from_i64(&[-3, 1]), 1), (QPoly::from_i64(&[-2, 1]), 1)]
        );
        let rot = MatrixK::from_i64(&q, &[&[0, -1], &[1, 0]]);
        assert_eq!(
            eigen_minpolys(&rot).unwrap().factors,
            vec![(QPoly::from_i64(&[1, 0, 1]), 1)]
        );
        // diag(zeta_3, 2) over Q(zeta_3): norm poly = Phi_3 * (x-2)^2
        let k3 = NumberField::cyclotomic_field(3);
        let g = MatrixK::diagonal(
            &k3,
            &[FieldElem::generator(&k3), FieldElem::from_i64(&k3, 2)],
        )
        .unwrap();
        let data = eigen_minpolys(&g).unwrap();
        assert_eq!(data.total_degree(), 4);
        assert!(data.factors.contains(&(cyclotomic(3), 1)));
        assert!(data.factors.contains(&(QPoly::from_i64(&[-2, 1]), 2)));
    }

    #[test]
    fn torsion_classification() {
        let q = NumberField::rationals();
        let rot = MatrixK::from_i64(&q, &[&[0, -1], &[1, 0]]);
        assert_eq!(is_torsion(&rot).unwrap(), Some(4));
        // brute-force oracle: powers reach the identity exactly at 4
        let mut p = rot.clone();
        let mut order = 1;
        while !p.is_identity() {
            p = &p * &rot;
            order += 1;
        }
        assert_eq!(order, 4);

        let shear = MatrixK::from_i64(&q, &[&[1, 1], &[0, 1]]);
        assert_eq!(is_torsion(&shear).unwrap(), None);
        assert_eq!(is_unipotent_torsion(&shear).unwrap(), Some(1));

        let k6 = NumberField::cyclotomic_field(6);
        let z = FieldElem::generator(&k6);
        let d = MatrixK::diagonal(&k6, &[z.clone(), z.pow(5)]).unwrap();
        assert_eq!(is_torsion(&d).unwrap(), Some(6));

        // [[zeta_3, 1], [0, zeta_3]]: cube is unipotent, checked exactly
        let k3 = NumberField::cyclotomic_field(3);
        let z3 = FieldElem::generator(&k3);
        let g = MatrixK::new(
            &k3,
            vec![
                vec![z3.clone(), FieldElem::one(&k3)],
                vec![FieldElem::zero(&k3), z3.clone()],
            ],
        )
        .unwrap();
        assert_eq!(is_torsion(&g).unwrap(), None);
        assert_eq!(is_unipotent_torsion(&g).unwrap(), Some(3));
        assert!(is_unipotent(&g.pow(3)));

        let half = FieldElem::from_rational(&q, BigRational::new(1.into(), 2.into()));
        let d = MatrixK::diagonal(&q, &[FieldElem::from_i64(&q, 2), half]).unwrap();
        assert_eq!(is_unipotent_torsion(&d).unwrap(), None);

        let singular = MatrixK::from_i64(&q, &[&[0, 0], &[0, 1]]);
        assert_eq!(is_torsion(&singular).unwrap_err(), Error::SingularMatrix);
    }

    #[test]
    fn jordan_uniqueness_grid_search() {
        // Both parts of a valid decomposition commute with g, so candidates
        // live in the commutant; searching the polynomial family
        // c0 + c1 g (+ c2 g^2) over a small rational grid must find the
        // returned pair and no second valid one.
        let q = NumberField::rationals();
        let k12 = NumberField::cyclotomic_field(12);
        let grid: Vec<BigRational> = [
            (-2i64, 1i64),
            (-1, 1),
            (-1, 2),
            (0, 1),
            (1, 2),
            (1, 1),
            (2, 1),
        ]
        .iter()
        .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
        .collect();

        let z = FieldElem::generator(&k12);
        let cases = vec![
            MatrixK::from_i64(&q, &[&[2, 1], &[0, 2]]),
            MatrixK::from_i64(&q, &[&[3, 1], &[1, 3]]),
            MatrixK::from_i64(&q, &[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]),
            MatrixK::new(
                &k12,
                vec![
                    vec![z.pow(3), FieldElem::one(&k12)],
                    vec![FieldElem::zero(&k12), z.pow(3)],
                ],
            )
            .unwrap(),
        ];
        for g in cases {
            let t = g.size();
            let jp = jordan_chevalley(&g).unwrap();
            let id = MatrixK::identity(g.field(), t);
            let g2 = &g * &g;
            // coefficient candidates: the rational grid, times zeta^3 as
            // well in the cyclotomic case (the semisimple part of the
            // zeta^3 shear is zeta^3 times the identity)
            let mut coeffs: Vec<FieldElem> = grid
                .iter()
                .map(|c| FieldElem::from_rational(g.field(), c.clone()))
                .collect();
            if g.field().degree() > 1 {
                let zeta3 = FieldElem::generator(g.field()).pow(3);
                let twisted: Vec<FieldElem> =
                    coeffs.iter().map(|c| c * &zeta3).collect();
                coeffs.extend(twisted);
            }
            let mut found = Vec::new();
            let mut scan = |s: MatrixK| {
                if s.det().is_zero() {
                    return;
                }
                let u = &g * &s.inverse().unwrap();
                if is_semisimple(&s) && is_unipotent(&u) {
                    found.push((s, u));
                }
            };
            for c0 in &coeffs {
                for c1 in &coeffs {
                    let base = &id.scale(c0) + &g.scale(c1);
                    if t == 2 {
                        scan(base);
                    } else {
                        for c2 in &coeffs {
                            scan(&base + &g2.scale(c2));
                        }
                    }
                }
            }
            assert!(
                found.iter().any(|(s, u)| *s == jp.semisimple_part && *u == jp.unipotent_part),
                "grid search must rediscover the returned pair"
            );
            for (s, u) in &found {
                assert_eq!(s, &jp.semisimple_part, "second semisimple part found");
                assert_eq!(u, &jp.unipotent_part);
            }
        }
    }

    #[test]
    fn torsion_implies_unipotent_torsion_with_dividing_order() {
        let q = NumberField::rationals();
        let k12 = NumberField::cyclotomic_field(12);
        let z = FieldElem::generator(&k12);
        let cases = vec![
            MatrixK::from_i64(&q, &[&[0, -1], &[1, 0]]),
            MatrixK::from_i64(&q, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]),
            MatrixK::diagonal(&k12, &[z.pow(2), z.pow(3)]).unwrap(),
            MatrixK::identity(&q, 3),
        ];
        for g in cases {
            let n = is_torsion(&g).unwrap().expect("torsion input");
            let m = is_unipotent_torsion(&g).unwrap().expect("then unipotent-torsion");
            assert!(n % m == 0, "order {} vs unipotent order {}", n, m);
        }
    }

    #[test]
    fn torsion_order_minimality() {
        let k12 = NumberField::cyclotomic_field(12);
        let z = FieldElem::generator(&k12);
        let g = MatrixK::diagonal(&k12, &[z.pow(4), z.pow(6)]).unwrap(); // orders 3 and 2
        let n = is_torsion(&g).unwrap().unwrap();
        assert_eq!(n, 6);
        for k in 1..n {
            if n % k == 0 {
                assert!(!g.pow(k).is_identity());
            }
        }
    }
}
