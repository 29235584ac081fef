//! The canonical conjugation-invariant height on GL_t and its vanishing
//! locus: exactly the unipotent-torsion elements.
//!
//! Run with `cargo run --example canonical_height`.

use num_bigint::BigInt;
use num_rational::BigRational;
use torheight::heights::canonical_height_glt;
use torheight::matgroup::{is_unipotent_torsion, MatrixK};
use torheight::numfield::{FieldElem, NumberField};

fn main() {
    let q = NumberField::rationals();
    let k3 = NumberField::cyclotomic_field(3);
    let z = FieldElem::generator(&k3);
    let half = FieldElem::from_rational(&q, BigRational::new(BigInt::from(1), BigInt::from(2)));

    let cases: Vec<(&str, MatrixK)> = vec![
        ("identity", MatrixK::identity(&q, 2)),
        ("shear [[1,1],[0,1]]", MatrixK::from_i64(&q, &[&[1, 1], &[0, 1]])),
        ("rotation [[0,-1],[1,0]]", MatrixK::from_i64(&q, &[&[0, -1], &[1, 0]])),
        (
            "diag(zeta_3, 2)",
            MatrixK::diagonal(&k3, &[z.clone(), FieldElem::from_i64(&k3, 2)]).unwrap(),
        ),
        (
            "diag(2, 1/2)",
            MatrixK::diagonal(&q, &[FieldElem::from_i64(&q, 2), half]).unwrap(),
        ),
        (
            "zeta_3 shear [[z,1],[0,z]]",
            MatrixK::new(
                &k3,
                vec![
                    vec![z.clone(), FieldElem::one(&k3)],
                    vec![FieldElem::zero(&k3), z.clone()],
                ],
            )
            .unwrap(),
        ),
    ];

    println!("canonical height hG(g) = 2 t! sum_i h(lambda_i):\n");
    for (name, g) in &cases {
        let h = canonical_height_glt(g).unwrap();
        let utor = is_unipotent_torsion(g).unwrap();
        println!(
            "  {:28} hG = {:.12}{}  unipotent-torsion: {}",
            name,
            h.value,
            if h.exact_zero { " (exact 0)" } else { "          " },
            match utor {
                Some(n) => format!("yes, g^{} unipotent", n),
                None => "no".into(),
            }
        );
    }

    println!("\nconjugation invariance (same characteristic polynomial):");
    let g = MatrixK::from_i64(&q, &[&[2, 1], &[0, 3]]);
    let p = MatrixK::from_i64(&q, &[&[1, 4], &[1, 5]]);
    let h1 = canonical_height_glt(&g).unwrap();
    let h2 = canonical_height_glt(&g.conjugate_by(&p).unwrap()).unwrap();
    println!("  hG(g) = {:.15}", h1.value);
    println!("  hG(p g p^-1) = {:.15}", h2.value);
}
