//! The sandwich inequality hG/(2 t!) <= t hB <= hG between the canonical
//! height and the eigenvalue-tuple height.
//!
//! Run with `cargo run --example sandwich`.

use num_bigint::BigInt;
use num_rational::BigRational;
use torheight::heights::{breuillard_height, check_sandwich, BreuillardHeight};
use torheight::matgroup::MatrixK;
use torheight::numfield::{FieldElem, NumberField};

fn main() {
    let q = NumberField::rationals();
    let k5 = NumberField::cyclotomic_field(5);
    let z = FieldElem::generator(&k5);
    let half = FieldElem::from_rational(&q, BigRational::new(BigInt::from(1), BigInt::from(2)));

    let cases: Vec<(&str, MatrixK)> = vec![
        ("diag(2, 1)", MatrixK::from_i64(&q, &[&[2, 0], &[0, 1]])),
        (
            "diag(2, 1/2)",
            MatrixK::diagonal(&q, &[FieldElem::from_i64(&q, 2), half]).unwrap(),
        ),
        (
            "diag(zeta_5, zeta_5^2)",
            MatrixK::diagonal(&k5, &[z.clone(), z.pow(2)]).unwrap(),
        ),
        ("triangular [[2,1],[0,3]]", MatrixK::from_i64(&q, &[&[2, 1], &[0, 3]])),
    ];

    println!("hG/(2 t!) <= t hB <= hG:\n");
    for (name, g) in &cases {
        let rep = check_sandwich(g).unwrap();
        println!(
            "  {:24} {:.9} <= {:.9} <= {:.9}   holds: {}",
            name, rep.lower.value, rep.middle.value, rep.upper.value, rep.holds
        );
    }

    println!("\nwhen the characteristic polynomial does not split, hB is bounded:");
    let rot = MatrixK::from_i64(&q, &[&[0, -1], &[1, 0]]);
    match breuillard_height(&rot, None).unwrap() {
        BreuillardHeight::Bounds { lower, upper } => {
            println!(
                "  rotation over Q: {:.9} <= hB <= {:.9}",
                lower.value, upper.value
            );
        }
        BreuillardHeight::Exact(_) => unreachable!(),
    }
    let k4 = NumberField::cyclotomic_field(4);
    match breuillard_height(&rot, Some(&k4)).unwrap() {
        BreuillardHeight::Exact(h) => {
            println!(
                "  same matrix with splitting field Q(zeta_4): hB = {} (exact zero: {})",
                h.value, h.exact_zero
            );
        }
        BreuillardHeight::Bounds { .. } => unreachable!(),
    }
}
