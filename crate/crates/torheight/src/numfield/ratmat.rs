//! Small dense rational matrices: determinant and characteristic polynomial,
//! shared by the regular-representation routines.

use crate::exactpoly::QPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Determinant by Gaussian elimination with exact rational arithmetic.
pub fn det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut result = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let pivot = match pivot {
            None => return BigRational::zero(),
            Some(p) => p,
        };
        if pivot != col {
            a.swap(pivot, col);
            result = -result;
        }
        let pv = a[col][col].clone();
        result = result * &pv;
        let inv = pv.recip();
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..n {
                let sub = &a[col][c] * &factor;
                a[r][c] = &a[r][c] - sub;
            }
        }
    }
    result
}

/// Characteristic polynomial of a rational matrix by Faddeev-LeVerrier,
/// exact in characteristic zero. Returns the monic polynomial of degree n.
pub fn charpoly(a: &[Vec<BigRational>]) -> QPoly {
    let n = a.len();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    // m = A, c_k = -tr(m)/k, m = A (m + c_k I)
    let mut m = a.to_vec();
    for k in 1..=n {
        let tr: BigRational = (0..n).map(|i| m[i][i].clone()).sum();
        let ck = -tr / BigRational::from_integer(BigInt::from(k as i64));
        coeffs[n - k] = ck.clone();
        if k == n {
            break;
        }
        for i in 0..n {
            m[i][i] = &m[i][i] + &ck;
        }
        m = mat_mul(a, &m);
    }
    QPoly::new(coeffs)
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn det_and_charpoly() {
        let a = vec![vec![q(2), q(1)], vec![q(0), q(3)]];
        assert_eq!(det(a.clone()), q(6));
        // char poly of [[2,1],[0,3]] is (x-2)(x-3) = x^2 - 5x + 6
        assert_eq!(charpoly(&a), QPoly::from_i64(&[6, -5, 1]));
        let rot = vec![vec![q(0), q(-1)], vec![q(1), q(0)]];
        assert_eq!(charpoly(&rot), QPoly::from_i64(&[1, 0, 1]));
    }
}
