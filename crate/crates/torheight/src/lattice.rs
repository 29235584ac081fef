//! Exact integer linear algebra: Hermite and Smith normal forms, integer
//! kernels and lattice indices. Backs the finite part of projective heights
//! (ideal norms as lattice indices) and torsion-coset intersection in tori.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IMat = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &IMat, b: &IMat) -> IMat {
    let (m, k) = (a.len(), b.len());
    let n = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![BigInt::zero(); n]; m];
    for i in 0..m {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] = &out[i][j] + &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

pub fn mat_vec(a: &IMat, v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn from_i64(rows: &[&[i64]]) -> IMat {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Column-style Hermite reduction. Returns the echelon columns spanning the
/// same column lattice, pivots descending the rows.
pub fn hnf_columns(a: &IMat) -> IMat {
    let rows = a.len();
    if rows == 0 {
        return vec![];
    }
    let cols = a[0].len();
    // work on columns: transpose into col-major for convenience
    let mut m: Vec<Vec<BigInt>> = (0..cols).map(|j| (0..rows).map(|i| a[i][j].clone()).collect()).collect();
    let mut pivot_col = 0usize;
    for row in 0..rows {
        if pivot_col >= m.len() {
            break;
        }
        // clear row `row` across columns >= pivot_col down to a single gcd entry
        loop {
            let mut nonzero: Vec<usize> = (pivot_col..m.len())
                .filter(|&j| !m[j][row].is_zero())
                .collect();
            if nonzero.is_empty() {
                break;
            }
            if nonzero.len() == 1 {
                let j = nonzero[0];
                m.swap(pivot_col, j);
                break;
            }
            // combine the two columns with smallest nonzero entries
            nonzero.sort_by_key(|&j| m[j][row].abs());
            let (ja, jb) = (nonzero[0], nonzero[1]);
            let q = (&m[jb][row]).div_floor(&m[ja][row]);
            for i in 0..rows {
                let s = &m[ja][i] * &q;
                m[jb][i] = &m[jb][i] - s;
            }
        }
        if !m[pivot_col][row].is_zero() {
            if m[pivot_col][row].is_negative() {
                for i in 0..rows {
                    m[pivot_col][i] = -m[pivot_col][i].clone();
                }
            }
            pivot_col += 1;
        }
    }
    m.truncate(pivot_col);
    // back to row-major, columns of the result
    (0..rows)
        .map(|i| (0..pivot_col).map(|j| m[j][i].clone()).collect())
        .collect()
}

/// Index `[Z^d : L]` of the lattice spanned by the columns of `a` (must have
/// full row rank d); `None` when the rank is deficient.
pub fn lattice_index(a: &IMat) -> Option<BigInt> {
    let d = a.len();
    let h = hnf_columns(a);
    if h.is_empty() || h[0].len() < d {
        return None;
    }
    // echelon columns: pivot of column j sits at some row; for full rank the
    // form is square-triangular and the index is the product of pivots.
    let mut idx = BigInt::one();
    for j in 0..d {
        let pivot = (0..d).find(|&i| !h[i][j].is_zero())?;
        let _ = pivot;
        idx *= h[j][j].abs();
    }
    if idx.is_zero() {
        None
    } else {
        Some(idx)
    }
}

/// Smith normal form with transforms: returns (u, s, v) with `u a v = s`,
/// u and v unimodular and s diagonal with the divisibility chain.
pub fn smith_normal_form(a: &IMat) -> (IMat, IMat, IMat) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut s = a.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);

    fn swap_rows(s: &mut IMat, u: &mut IMat, i: usize, j: usize) {
        s.swap(i, j);
        u.swap(i, j);
    }
    fn swap_cols(s: &mut IMat, v: &mut IMat, i: usize, j: usize) {
        for row in s.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
    }
    fn add_row(s: &mut IMat, u: &mut IMat, src: usize, dst: usize, q: &BigInt) {
        // row dst -= q * row src
        let cols = s[0].len();
        for c in 0..cols {
            let t = &s[src][c] * q;
            s[dst][c] = &s[dst][c] - t;
        }
        let un = u[0].len();
        for c in 0..un {
            let t = &u[src][c] * q;
            u[dst][c] = &u[dst][c] - t;
        }
    }
    fn add_col(s: &mut IMat, v: &mut IMat, src: usize, dst: usize, q: &BigInt) {
        for row in s.iter_mut() {
            let t = &row[src] * q;
            row[dst] = &row[dst] - t;
        }
        for row in v.iter_mut() {
            let t = &row[src] * q;
            row[dst] = &row[dst] - t;
        }
    }

    let n = rows.min(cols);
    let mut k = 0usize;
    while k < n {
        // find smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if !s[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| s[i][j].abs() < s[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let (bi, bj) = match best {
            None => break,
            Some(p) => p,
        };
        swap_rows(&mut s, &mut u, k, bi);
        swap_cols(&mut s, &mut v, k, bj);
        // eliminate row and column k
        let mut dirty = false;
        for i in (k + 1)..rows {
            if !s[i][k].is_zero() {
                let q = (&s[i][k]).div_floor(&s[k][k]);
                add_row(&mut s, &mut u, k, i, &q);
                if !s[i][k].is_zero() {
                    dirty = true;
                }
            }
        }
        for j in (k + 1)..cols {
            if !s[k][j].is_zero() {
                let q = (&s[k][j]).div_floor(&s[k][k]);
                add_col(&mut s, &mut v, k, j, &q);
                if !s[k][j].is_zero() {
                    dirty = true;
                }
            }
        }
        if dirty {
            continue;
        }
        // enforce the divisibility chain within the remaining block
        let mut fixed = true;
        'scan: for i in (k + 1)..rows {
            for j in (k + 1)..cols {
                if !(&s[i][j]).is_multiple_of(&s[k][k]) {
                    // add row i to row k so the elimination revisits it
                    let minus_one = -BigInt::one();
                    add_row(&mut s, &mut u, i, k, &minus_one);
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if !fixed {
            continue;
        }
        if s[k][k].is_negative() {
            for j in 0..cols {
                s[k][j] = -s[k][j].clone();
            }
            for j in 0..u[0].len() {
                u[k][j] = -u[k][j].clone();
            }
        }
        k += 1;
    }
    (u, s, v)
}

/// Integer determinant by fraction-free Bareiss elimination.
pub fn det_i(a: &IMat) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match ((k + 1)..n).find(|&r| !m[r][k].is_zero()) {
                None => return BigInt::zero(),
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Rank and elementary divisors (the nonzero diagonal of the SNF).
pub fn elementary_divisors(a: &IMat) -> Vec<BigInt> {
    let (_, s, _) = smith_normal_form(a);
    let n = s.len().min(if s.is_empty() { 0 } else { s[0].len() });
    (0..n)
        .map(|i| s[i][i].clone())
        .filter(|d| !d.is_zero())
        .collect()
}

/// Basis of the integer kernel `{x : a x = 0}`, as columns.
pub fn kernel_basis(a: &IMat) -> Vec<Vec<BigInt>> {
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    let (_, s, v) = smith_normal_form(a);
    let rank = elementary_divisors_of(&s);
    (rank..cols)
        .map(|j| (0..cols).map(|i| v[i][j].clone()).collect())
        .collect()
}

fn elementary_divisors_of(s: &IMat) -> usize {
    let n = s.len().min(if s.is_empty() { 0 } else { s[0].len() });
    (0..n).take_while(|&i| !s[i][i].is_zero()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_of_simple_lattices() {
        // columns (2,0),(0,3): index 6
        let a = from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(lattice_index(&a), Some(BigInt::from(6)));
        // columns (2),(4) in Z^1: gcd 2
        let a = from_i64(&[&[2, 4]]);
        assert_eq!(lattice_index(&a), Some(BigInt::from(2)));
        // rank deficient
        let a = from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(lattice_index(&a), None);
    }

    #[test]
    fn index_matches_determinant_for_square_generators() {
        // full-rank square generating sets: index = |det|
        for rows in [
            vec![vec![3i64, 1], vec![0, 2]],
            vec![vec![2, 5], vec![7, 1]],
            vec![vec![1, 0], vec![0, 1]],
        ] {
            let a: IMat = rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            assert_eq!(lattice_index(&a), Some(det_i(&a).abs()));
        }
    }

    #[test]
    fn snf_transforms_are_consistent() {
        let a = from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let (u, s, v) = smith_normal_form(&a);
        assert_eq!(mat_mul(&mat_mul(&u, &a), &v), s);
        // classic example: divisors 2, 2, 156... verify chain divisibility
        let divs = elementary_divisors(&a);
        for w in divs.windows(2) {
            assert!((&w[1]).is_multiple_of(&w[0]), "{:?}", divs);
        }
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = from_i64(&[&[1, -1], &[1, -1]]);
        let ker = kernel_basis(&a);
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        assert_eq!(v[0], v[1]);
        assert!(!v[0].is_zero());
    }

    #[test]
    fn unimodularity_of_transforms() {
        let a = from_i64(&[&[4, 6, 1], &[2, 0, 8]]);
        let (u, s, v) = smith_normal_form(&a);
        assert_eq!(mat_mul(&mat_mul(&u, &a), &v), s);
        assert_eq!(det_i(&u).abs(), BigInt::one());
        assert_eq!(det_i(&v).abs(), BigInt::one());
    }
}
