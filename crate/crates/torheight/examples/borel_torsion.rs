//! Torsion in the Borel group of GL_3: the strata classifier against the
//! brute-force power oracle.
//!
//! Run with `cargo run --example borel_torsion`.

use torheight::borel::{
    borel_is_torsion_bruteforce, borel_is_torsion_strata, borel_mul, borel_pow, BorelElement,
    in_t0_closure_variety,
};
use torheight::numfield::{FieldElem, NumberField};

fn main() {
    let k3 = NumberField::cyclotomic_field(3);
    let z = FieldElem::generator(&k3);
    let one = FieldElem::one(&k3);
    let zero = FieldElem::zero(&k3);

    // stratum 1 (lambda != mu = eps): torsion demands c = 0
    let torsion = BorelElement::new(
        FieldElem::from_i64(&k3, 2),
        FieldElem::from_i64(&k3, -1),
        zero.clone(),
        z.clone(),
        one.clone(),
        one.clone(),
    )
    .unwrap();
    let not_torsion = BorelElement::new(
        FieldElem::from_i64(&k3, 2),
        FieldElem::from_i64(&k3, -1),
        one.clone(),
        z.clone(),
        one.clone(),
        one.clone(),
    )
    .unwrap();
    println!("diagonal (zeta_3, 1, 1), a = 2, b = -1:");
    println!(
        "  c = 0: strata {:?}, brute force {:?}",
        borel_is_torsion_strata(&torsion),
        borel_is_torsion_bruteforce(&torsion, 12)
    );
    println!(
        "  c = 1: strata {:?}, brute force {:?}",
        borel_is_torsion_strata(&not_torsion),
        borel_is_torsion_bruteforce(&not_torsion, 12)
    );

    // the geometric sum: a-coordinate of ((1,0,0), diag(zeta_3,1,1))^n
    let p = BorelElement::new(
        one.clone(),
        zero.clone(),
        zero.clone(),
        z.clone(),
        one.clone(),
        one.clone(),
    )
    .unwrap();
    println!("\npowers of ((a,b,c) = (1,0,0), diag = (zeta_3, 1, 1)):");
    for n in 1..=3 {
        let pn = borel_pow(&p, n);
        println!("  n = {}: a = {}", n, pn.a);
    }

    // torsion points do not form a subgroup: two torsion elements whose
    // product leaves the closure variety (1 - lambda mu^-1) b = a c
    let q = NumberField::rationals();
    let e1 = BorelElement::new(
        FieldElem::one(&q),
        FieldElem::zero(&q),
        FieldElem::zero(&q),
        FieldElem::one(&q),
        FieldElem::one(&q),
        FieldElem::one(&q),
    )
    .unwrap();
    let e2 = BorelElement::new(
        FieldElem::zero(&q),
        FieldElem::zero(&q),
        FieldElem::one(&q),
        FieldElem::one(&q),
        FieldElem::one(&q),
        FieldElem::one(&q),
    )
    .unwrap();
    let prod = borel_mul(&e1, &e2).unwrap();
    println!(
        "\nclosure-variety membership: factors {} / {}, product {}",
        in_t0_closure_variety(&e1),
        in_t0_closure_variety(&e2),
        in_t0_closure_variety(&prod)
    );
    println!(
        "product coordinates: a = {}, b = {}, c = {}",
        prod.a, prod.b, prod.c
    );
}
