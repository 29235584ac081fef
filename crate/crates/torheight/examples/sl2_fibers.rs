//! SL_2 trace fibers: the torsion points of SL_2 are the central elements
//! plus the fibers tr^{-1}(zeta + zeta^{-1}) over roots of unity zeta != +-1.
//!
//! Run with `cargo run --example sl2_fibers`.

use num_bigint::BigInt;
use num_rational::BigRational;
use torheight::exactpoly::QPoly;
use torheight::numfield::{FieldElem, NumberField};
use torheight::quotient::sl2_fiber_classify;

fn main() {
    let q = NumberField::rationals();

    println!("rational trace values:");
    for tau in [-2i64, -1, 0, 1, 2, 3] {
        let class = sl2_fiber_classify(&FieldElem::from_i64(&q, tau)).unwrap();
        println!("  tr = {:2}  ->  {:?}", tau, class);
    }
    let half5 = FieldElem::from_rational(&q, BigRational::new(BigInt::from(5), BigInt::from(2)));
    println!("  tr = 5/2 ->  {:?}", sl2_fiber_classify(&half5).unwrap());

    println!("\ntraces zeta_m + zeta_m^-1 (torsion-dense fibers):");
    for m in [5u64, 7, 8, 12, 30] {
        let k = NumberField::cyclotomic_field(m);
        let z = FieldElem::generator(&k);
        let tau = &z + &z.inv().unwrap();
        println!(
            "  m = {:2}: tau has minimal polynomial {}  ->  {:?}",
            m,
            tau.min_poly_over_q(),
            sl2_fiber_classify(&tau).unwrap()
        );
    }

    println!("\nsqrt(2) presented by x^2 - 2 equals zeta_8 + zeta_8^-1:");
    let sqrt2 = NumberField::new(QPoly::from_i64(&[-2, 0, 1]), false).unwrap();
    let tau = FieldElem::generator(&sqrt2);
    println!("  tr = sqrt 2 ->  {:?}", sl2_fiber_classify(&tau).unwrap());
}
