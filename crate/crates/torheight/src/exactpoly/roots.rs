//! Certified complex root isolation for squarefree rational polynomials.
//!
//! Seeds come from the eigenvalues of the companion matrix, are polished by
//! Newton iteration (with an Aberth-Ehrlich sweep as a collision fallback)
//! and certified a posteriori: with `w = f(z)/f'(z)` the disk around `z` of
//! radius `deg(f) * |w|` contains a true root, and pairwise disjoint disks
//! therefore isolate one root each. Floating-point evaluation error enters
//! the radii through a running Horner bound, so the returned boxes are
//! honest enclosures.

use super::QPoly;
use crate::error::{Error, Result};
use nalgebra::{Complex, DMatrix};
use num_rational::BigRational;
use num_traits::ToPrimitive;

const F64_EPS: f64 = f64::EPSILON;

/// A complex disk certified to contain exactly one root of the isolated
/// polynomial. Also used as a crude ball-arithmetic value when evaluating
/// field elements under archimedean embeddings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootBox {
    pub re: f64,
    pub im: f64,
    pub radius: f64,
}

impl RootBox {
    pub fn new(re: f64, im: f64, radius: f64) -> Self {
        RootBox { re, im, radius }
    }

    pub fn exact(re: f64, im: f64) -> Self {
        RootBox { re, im, radius: 0.0 }
    }

    pub fn center_abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Lower and upper bounds on the modulus of the enclosed value.
    pub fn abs_bounds(&self) -> (f64, f64) {
        let c = self.center_abs();
        ((c - self.radius).max(0.0), c + self.radius)
    }

    pub fn add(&self, other: &RootBox) -> RootBox {
        let re = self.re + other.re;
        let im = self.im + other.im;
        let r = self.radius + other.radius;
        RootBox::new(re, im, inflate(r, re.hypot(im)))
    }

    pub fn mul(&self, other: &RootBox) -> RootBox {
        let re = self.re * other.re - self.im * other.im;
        let im = self.re * other.im + self.im * other.re;
        let r = self.center_abs() * other.radius
            + other.center_abs() * self.radius
            + self.radius * other.radius;
        RootBox::new(re, im, inflate(r, re.hypot(im)))
    }

    pub fn from_rational(c: &BigRational) -> RootBox {
        let v = rational_to_f64(c);
        RootBox::new(v, 0.0, v.abs() * 1e-14 + f64::MIN_POSITIVE)
    }
}

fn inflate(radius: f64, center_abs: f64) -> f64 {
    radius * (1.0 + 8.0 * F64_EPS) + center_abs * 4.0 * F64_EPS + f64::MIN_POSITIVE
}

/// Conversion that stays finite even for very large numerators/denominators.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift = (nb.max(db) - 512).max(0) as u64;
    let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Evaluates a polynomial with rational coefficients on a complex ball.
pub fn eval_poly_ball(coeffs: &[BigRational], z: &RootBox) -> RootBox {
    let mut acc = RootBox::exact(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).add(&RootBox::from_rational(c));
    }
    acc
}

/// Horner evaluation of `f` and `f'` at `z` together with an upper bound on
/// the accumulated floating-point error of the `f` value.
fn eval_with_error(coeffs: &[f64], z: Complex<f64>) -> (Complex<f64>, Complex<f64>, f64) {
    let mut v = Complex::new(0.0, 0.0);
    let mut dv = Complex::new(0.0, 0.0);
    let mut emag = 0.0f64;
    let zn = z.norm();
    for &c in coeffs.iter().rev() {
        dv = dv * z + v;
        v = v * z + Complex::new(c, 0.0);
        emag = emag * zn + c.abs();
    }
    let n = coeffs.len() as f64;
    (v, dv, 8.0 * n * F64_EPS * emag + f64::MIN_POSITIVE)
}

/// One box per root of the squarefree polynomial `f`, radii at most `eps`,
/// pairwise disjoint.
pub fn complex_roots(f: &QPoly, eps: f64) -> Result<Vec<RootBox>> {
    let n = f.degree().ok_or(Error::Precondition("complex_roots of zero polynomial"))?;
    if n == 0 {
        return Err(Error::Precondition("complex_roots of a constant"));
    }
    if !(eps > 0.0) {
        return Err(Error::Precondition("complex_roots needs eps > 0"));
    }
    if !super::is_squarefree(f) {
        return Err(Error::NonSquarefree);
    }
    let monic = f.monic();
    let coeffs: Vec<f64> = monic.coeffs().iter().map(rational_to_f64).collect();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::RootIsolation(
            "coefficients overflow double precision".into(),
        ));
    }

    // Companion-matrix eigenvalue seeds. The Schur iteration is run with a
    // bounded iteration count: on some unit-circle spectra (cyclotomic
    // companions are cyclic-permutation-like) it does not converge, and the
    // perturbed-circle fallback seeds are then refined by the Aberth sweeps
    // below.
    let comp = DMatrix::<f64>::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -coeffs[i]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let mut zs: Vec<Complex<f64>> =
        match nalgebra::linalg::Schur::try_new(comp, 1e-12, 100 * n.max(10)) {
            Some(schur) => schur.complex_eigenvalues().iter().cloned().collect(),
            None => {
                let bound = 1.0
                    + coeffs
                        .iter()
                        .take(n)
                        .fold(0.0f64, |m, c| m.max(c.abs()));
                (0..n)
                    .map(|k| {
                        let angle =
                            2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.3941;
                        Complex::new(bound * angle.cos(), bound * angle.sin())
                    })
                    .collect()
            }
        };

    for round in 0..60 {
        // Newton polish.
        for z in zs.iter_mut() {
            for _ in 0..64 {
                let (v, dv, _) = eval_with_error(&coeffs, *z);
                if dv.norm() == 0.0 {
                    break;
                }
                let step = v / dv;
                *z -= step;
                if step.norm() <= 1e-16 * (1.0 + z.norm()) {
                    break;
                }
            }
        }
        match certify(&coeffs, &zs, n, eps) {
            Some(mut boxes) => {
                boxes.sort_by(|a, b| {
                    (a.re, a.im)
                        .partial_cmp(&(b.re, b.im))
                        .unwrap_or(std::cmp::Ordering::Equal)
                });
                return Ok(boxes);
            }
            None => {
                // Collisions or fat radii: one Aberth-Ehrlich sweep repels
                // duplicated approximations, then try again.
                let old = zs.clone();
                for (i, z) in zs.iter_mut().enumerate() {
                    let (v, dv, _) = eval_with_error(&coeffs, *z);
                    if dv.norm() == 0.0 {
                        *z += Complex::new(1e-6 * (1.0 + round as f64), 1e-6);
                        continue;
                    }
                    let w = v / dv;
                    let mut s = Complex::new(0.0, 0.0);
                    for (j, zj) in old.iter().enumerate() {
                        if i != j {
                            let d = *z - *zj;
                            if d.norm() > 1e-300 {
                                s += Complex::new(1.0, 0.0) / d;
                            } else {
                                *z += Complex::new(1e-8 * (i as f64 + 1.0), 1e-8);
                            }
                        }
                    }
                    let denom = Complex::new(1.0, 0.0) - w * s;
                    if denom.norm() > 1e-300 {
                        *z -= w / denom;
                    }
                }
            }
        }
    }
    Err(Error::RootIsolation(format!(
        "failed to certify disjoint boxes for degree {} at eps {:e}",
        n, eps
    )))
}

fn certify(coeffs: &[f64], zs: &[Complex<f64>], n: usize, eps: f64) -> Option<Vec<RootBox>> {
    let mut boxes = Vec::with_capacity(n);
    for z in zs {
        let (v, dv, verr) = eval_with_error(coeffs, *z);
        let denom = dv.norm() - verr;
        if denom <= 0.0 {
            return None;
        }
        let r = (n as f64) * (v.norm() + verr) / denom;
        let r = inflate(r, z.norm());
        if !(r <= eps) {
            return None;
        }
        boxes.push(RootBox::new(z.re, z.im, r));
    }
    for i in 0..boxes.len() {
        for j in (i + 1)..boxes.len() {
            let d = (boxes[i].re - boxes[j].re).hypot(boxes[i].im - boxes[j].im);
            if d <= boxes[i].radius + boxes[j].radius {
                return None;
            }
        }
    }
    Some(boxes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::cyclotomic;

    #[test]
    fn roots_of_x2_plus_1() {
        let boxes = complex_roots(&QPoly::from_i64(&[1, 0, 1]), 1e-12).unwrap();
        assert_eq!(boxes.len(), 2);
        // Sorted by (re, im): -i then +i up to box radii.
        assert!((boxes[0].re).abs() <= 1e-12 && (boxes[0].im + 1.0).abs() <= 1e-12);
        assert!((boxes[1].re).abs() <= 1e-12 && (boxes[1].im - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn roots_of_golden_ratio_poly() {
        // x^2 - x - 1 has roots (1 +- sqrt 5) / 2
        let boxes = complex_roots(&QPoly::from_i64(&[-1, -1, 1]), 1e-12).unwrap();
        let lo = (1.0 - 5f64.sqrt()) / 2.0;
        let hi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((boxes[0].re - lo).abs() <= boxes[0].radius + 1e-13);
        assert!((boxes[1].re - hi).abs() <= boxes[1].radius + 1e-13);
    }

    #[test]
    fn roots_of_phi5_on_unit_circle() {
        let boxes = complex_roots(&cyclotomic(5), 1e-12).unwrap();
        assert_eq!(boxes.len(), 4);
        for b in &boxes {
            assert!((b.center_abs() - 1.0).abs() < 1e-10);
            assert!(b.radius <= 1e-12);
        }
        // Conjugate symmetry up to tolerance.
        for b in &boxes {
            assert!(boxes
                .iter()
                .any(|c| (c.re - b.re).abs() < 1e-10 && (c.im + b.im).abs() < 1e-10));
        }
    }

    #[test]
    fn root_sum_matches_trace() {
        // sum of roots = -c_{d-1}/c_d within aggregated radii
        for f in [
            QPoly::from_i64(&[3, -7, 1, 2, 5]),
            QPoly::from_i64(&[-1, 0, 0, 1]),
            cyclotomic(12),
        ] {
            let boxes = complex_roots(&f, 1e-10).unwrap();
            let d = f.degree().unwrap();
            assert_eq!(boxes.len(), d);
            let sum_re: f64 = boxes.iter().map(|b| b.re).sum();
            let sum_im: f64 = boxes.iter().map(|b| b.im).sum();
            let expect = -rational_to_f64(&(f.coeff(d - 1) / f.leading().unwrap().clone()));
            let slack: f64 = boxes.iter().map(|b| b.radius).sum::<f64>() + 1e-9;
            assert!((sum_re - expect).abs() <= slack);
            assert!(sum_im.abs() <= slack);
        }
    }

    #[test]
    fn non_squarefree_rejected() {
        let f = QPoly::from_i64(&[1, 2, 1]); // (x+1)^2
        assert_eq!(complex_roots(&f, 1e-12), Err(Error::NonSquarefree));
    }
}
