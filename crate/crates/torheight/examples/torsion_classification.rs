//! Exact torsion and unipotent-torsion classification of matrices.
//!
//! Run with `cargo run --example torsion_classification`.

use num_bigint::BigInt;
use num_rational::BigRational;
use torheight::matgroup::{eigen_minpolys, is_torsion, is_unipotent_torsion, MatrixK};
use torheight::numfield::{FieldElem, NumberField};

fn main() {
    let q = NumberField::rationals();
    let k6 = NumberField::cyclotomic_field(6);
    let z = FieldElem::generator(&k6);
    let half = FieldElem::from_rational(&q, BigRational::new(BigInt::from(1), BigInt::from(2)));

    let cases: Vec<(&str, MatrixK)> = vec![
        ("rotation [[0,-1],[1,0]]", MatrixK::from_i64(&q, &[&[0, -1], &[1, 0]])),
        ("shear [[1,1],[0,1]]", MatrixK::from_i64(&q, &[&[1, 1], &[0, 1]])),
        (
            "diag(zeta_6, zeta_6^5)",
            MatrixK::diagonal(&k6, &[z.clone(), z.pow(5)]).unwrap(),
        ),
        (
            "zeta_3 shear [[z^2,1],[0,z^2]]",
            MatrixK::new(
                &k6,
                vec![
                    vec![z.pow(2), FieldElem::one(&k6)],
                    vec![FieldElem::zero(&k6), z.pow(2)],
                ],
            )
            .unwrap(),
        ),
        (
            "diag(2, 1/2)",
            MatrixK::diagonal(&q, &[FieldElem::from_i64(&q, 2), half]).unwrap(),
        ),
        (
            "3x3 permutation",
            MatrixK::from_i64(&q, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]),
        ),
    ];

    for (name, g) in &cases {
        let tor = is_torsion(g).unwrap();
        let utor = is_unipotent_torsion(g).unwrap();
        let data = eigen_minpolys(g).unwrap();
        let factors: Vec<String> = data
            .factors
            .iter()
            .map(|(p, m)| format!("({})^{}", p, m))
            .collect();
        println!("{}:", name);
        println!("  eigen factors: {}", factors.join(" "));
        println!(
            "  torsion: {:12}  unipotent-torsion: {}",
            match tor {
                Some(n) => format!("order {}", n),
                None => "no".into(),
            },
            match utor {
                Some(n) => format!("g^{} unipotent", n),
                None => "no".into(),
            }
        );
    }
}
