//! Weil heights of algebraic numbers and projective heights of tuples.
//!
//! Run with `cargo run --example weil_heights`.

use num_bigint::BigInt;
use num_rational::BigRational;
use torheight::exactpoly::QPoly;
use torheight::heights::{
    mahler_measure, projective_height, weil_height_from_minpoly, weil_height_number,
};
use torheight::numfield::{FieldElem, NumberField};

fn main() {
    let q = NumberField::rationals();

    println!("Mahler measures:");
    for (name, f) in [
        ("x - 1", QPoly::from_i64(&[-1, 1])),
        ("x - 2", QPoly::from_i64(&[-2, 1])),
        ("x^2 - x - 1", QPoly::from_i64(&[-1, -1, 1])),
        ("Lehmer's polynomial", QPoly::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])),
    ] {
        let m = mahler_measure(&f, 1e-12).unwrap();
        println!("  m({name}) = {:.12} (+- {:.1e})", m.value, m.abs_error);
    }

    println!("\nWeil heights:");
    let half = FieldElem::from_rational(&q, BigRational::new(BigInt::from(1), BigInt::from(2)));
    let h = weil_height_number(&half).unwrap();
    println!("  h(1/2) = {:.12} = log 2", h.value);
    let h = weil_height_from_minpoly(&QPoly::from_i64(&[-2, 0, 1])).unwrap();
    println!("  h(sqrt 2) = {:.12} = (log 2)/2", h.value);
    let k7 = NumberField::cyclotomic_field(7);
    let h = weil_height_number(&FieldElem::generator(&k7)).unwrap();
    println!("  h(zeta_7) = {} (exact zero: {})", h.value, h.exact_zero);

    println!("\nProjective heights over Q:");
    for coords in [[1i64, 1], [2, 4], [3, 7]] {
        let mu: Vec<FieldElem> = coords.iter().map(|&c| FieldElem::from_i64(&q, c)).collect();
        let h = projective_height(&q, &mu).unwrap();
        println!(
            "  h([{}:{}]) = {:.12}{}",
            coords[0],
            coords[1],
            h.value,
            if h.exact_zero { " (exact zero)" } else { "" }
        );
    }

    println!("\nProjective height over Q(zeta_4): h([1 : 1+i])");
    let k4 = NumberField::cyclotomic_field(4);
    let one = FieldElem::one(&k4);
    let v = &one + &FieldElem::generator(&k4);
    let h = projective_height(&k4, &[one, v]).unwrap();
    println!("  = {:.12} = (log 2)/2", h.value);
}
