//! Number field arithmetic: exact element operations, minimal polynomials,
//! embeddings, norm polynomials and root-of-unity orders.
//!
//! Run with `cargo run --example number_fields`.

use torheight::exactpoly::QPoly;
use torheight::numfield::{norm_poly, parse_elem, FieldElem, KPoly, NumberField};

fn main() {
    let k5 = NumberField::cyclotomic_field(5);
    let z = FieldElem::generator(&k5);

    println!("Q(zeta_5), defining polynomial {}:", k5.defining_poly());
    let a = parse_elem(&k5, "a^2 - 1/2").unwrap();
    let b = parse_elem(&k5, "2*a + 1").unwrap();
    println!("  ({}) * ({}) = {}", a, b, &a * &b);
    println!("  ({})^-1 = {}", b, b.inv().unwrap());
    let c = &z + &z.inv().unwrap();
    println!(
        "  zeta + zeta^-1 = {} with minimal polynomial {}",
        c,
        c.min_poly_over_q()
    );

    println!("\nroot-of-unity orders in Q(zeta_5):");
    for e in [1u64, 2, 5] {
        println!("  ord(zeta^{}) = {:?}", e, z.pow(e).is_root_of_unity());
    }
    println!("  ord(1/2) = {:?}", parse_elem(&k5, "1/2").unwrap().is_root_of_unity());

    println!("\nembeddings of Q(sqrt 2):");
    let sqrt2 = NumberField::new(QPoly::from_i64(&[-2, 0, 1]), false).unwrap();
    for emb in sqrt2.embeddings(1e-13).unwrap() {
        println!("  theta -> {:+.12} (radius {:.1e})", emb.re, emb.radius);
    }

    println!("\nnorm polynomial of y^2 - theta over Q(sqrt 2):");
    let chi = KPoly::new(
        &sqrt2,
        vec![
            -&FieldElem::generator(&sqrt2),
            FieldElem::zero(&sqrt2),
            FieldElem::one(&sqrt2),
        ],
    );
    println!("  N(chi) = {}", norm_poly(&sqrt2, &chi).unwrap());
}
