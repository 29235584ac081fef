//! Property tests for the exact kernels.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use torheight::exactpoly::{factor_rational, poly_gcd, resultant, QPoly};
use torheight::numfield::{FieldElem, NumberField};
use torheight::quotient::{saturate, TorsionCoset};

fn small_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-9i64..=9, 1..=7).prop_map(|v| QPoly::from_i64(&v))
}

fn nonzero_poly() -> impl Strategy<Value = QPoly> {
    small_poly().prop_filter("nonzero", |f| !f.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_distributivity(f in small_poly(), g in small_poly(), h in small_poly()) {
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
    }

    #[test]
    fn division_reconstructs(f in small_poly(), g in nonzero_poly()) {
        let (q, r) = f.divrem(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f.clone());
        if let (Some(dr), Some(dg)) = (r.degree(), g.degree()) {
            prop_assert!(dr < dg);
        }
    }

    #[test]
    fn gcd_divides_and_detects_common_factors(
        f in nonzero_poly(),
        g in nonzero_poly(),
        h in nonzero_poly(),
    ) {
        let fh = &f * &h;
        let gh = &g * &h;
        let d = poly_gcd(&fh, &gh);
        prop_assert!(d.divides(&fh));
        prop_assert!(d.divides(&gh));
        if h.degree().unwrap() >= 1 {
            prop_assert!(d.degree().unwrap() >= h.degree().unwrap());
            let r = resultant(&fh, &gh).unwrap();
            prop_assert!(r == BigRational::from_integer(BigInt::from(0)));
        }
    }

    #[test]
    fn factorization_round_trips(f in nonzero_poly(), g in nonzero_poly()) {
        let prod = &f * &g;
        if prod.degree().unwrap_or(0) >= 1 {
            let fact = factor_rational(&prod).unwrap();
            prop_assert_eq!(fact.product(), prod);
            for (p, _) in &fact.factors {
                prop_assert!(p.is_monic());
            }
        }
    }

    #[test]
    fn field_inverse_cancels(coeffs in prop::collection::vec((-9i64..=9, 1u32..=3), 4)) {
        let k = NumberField::cyclotomic_field(5);
        let elem = FieldElem::from_coeffs(
            &k,
            coeffs
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        );
        if !elem.is_zero() {
            let inv = elem.inv().unwrap();
            prop_assert!((&elem * &inv).is_one());
        }
    }

    #[test]
    fn coset_canonical_form_is_shift_invariant(
        cols in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 0..=2),
        translate in prop::collection::vec((0i64..=11, 1i64..=12), 3),
        shift in prop::collection::vec(-2i64..=2, 0..=2),
    ) {
        let t = 3usize;
        let gens: Vec<Vec<BigInt>> = (0..t)
            .map(|i| cols.iter().map(|c| BigInt::from(c[i])).collect())
            .collect();
        let lat = saturate(t, &gens).unwrap();
        let h: Vec<BigRational> = translate
            .iter()
            .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect();
        let c = TorsionCoset::new(lat.clone(), h.clone()).unwrap();
        // shift the translate by a rational combination of lattice columns
        let mut h2 = h.clone();
        for (j, s) in shift.iter().take(lat.rank()).enumerate() {
            for i in 0..t {
                h2[i] = &h2[i]
                    + BigRational::new(BigInt::from(*s), BigInt::from(3))
                        * BigRational::from_integer(lat.basis()[i][j].clone());
            }
        }
        let c2 = TorsionCoset::new(lat, h2).unwrap();
        prop_assert_eq!(c.canonicalize(), c2.canonicalize());
        prop_assert!(c.contains(&c2.canonicalize().translate));
    }
}
