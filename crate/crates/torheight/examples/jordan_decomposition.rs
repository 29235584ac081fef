//! Multiplicative Jordan-Chevalley decomposition g = g_u g_s with exactly
//! commuting semisimple and unipotent parts.
//!
//! Run with `cargo run --example jordan_decomposition`.

use torheight::matgroup::{char_poly, jordan_chevalley, MatrixK};
use torheight::numfield::{FieldElem, NumberField};
use torheight::quotient::{closed_class_representative, same_fiber};

fn main() {
    let q = NumberField::rationals();
    let k4 = NumberField::cyclotomic_field(4);
    let i = FieldElem::generator(&k4);

    let cases: Vec<(&str, MatrixK)> = vec![
        ("[[2,1],[0,2]]", MatrixK::from_i64(&q, &[&[2, 1], &[0, 2]])),
        ("[[3,1],[1,3]]", MatrixK::from_i64(&q, &[&[3, 1], &[1, 3]])),
        (
            "[[i,1],[0,i]] over Q(i)",
            MatrixK::new(
                &k4,
                vec![
                    vec![i.clone(), FieldElem::one(&k4)],
                    vec![FieldElem::zero(&k4), i.clone()],
                ],
            )
            .unwrap(),
        ),
        (
            "[[1,2,3],[0,1,4],[0,0,2]]",
            MatrixK::from_i64(&q, &[&[1, 2, 3], &[0, 1, 4], &[0, 0, 2]]),
        ),
    ];

    for (name, g) in &cases {
        let jp = jordan_chevalley(g).unwrap();
        println!("g = {}:", name);
        println!("  semisimple part {}", jp.semisimple_part);
        println!("  unipotent part {}", jp.unipotent_part);
        assert_eq!(&(&jp.unipotent_part * &jp.semisimple_part), g);
        assert_eq!(char_poly(&jp.semisimple_part), char_poly(g));
        println!("  product and characteristic polynomial verified exactly\n");
    }

    // the semisimple part represents the unique closed conjugacy class of
    // the quotient fiber
    let g = MatrixK::from_i64(&q, &[&[2, 1], &[0, 2]]);
    let rep = closed_class_representative(&g).unwrap();
    println!(
        "closed class in the fiber of [[2,1],[0,2]]: {} (same fiber: {})",
        rep,
        same_fiber(&g, &rep).unwrap()
    );
}
