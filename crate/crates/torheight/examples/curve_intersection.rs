//! Intersection of the conjugation closures of the special curves
//! S_k = { diag(lambda^k, lambda) } in GL_2: cut out by root-of-unity
//! conditions, with fibers classified by torsion density.
//!
//! Run with `cargo run --example curve_intersection`.

use torheight::quotient::{
    classify_intersection_fiber, intersect_special_curves, special_curve_point,
};

fn main() {
    for (k1, k2) in [(3u32, 5u32), (2, 3), (2, 5)] {
        let ci = intersect_special_curves(k1, k2).unwrap();
        println!(
            "S_{} cap S_{}: lambda^{} = 1 or lambda^{} = 1, {} points in Q(zeta_{})",
            k1,
            k2,
            ci.orders[0],
            ci.orders[1],
            ci.points.len(),
            ci.cyclotomic_order
        );
    }

    println!("\nthe (3, 5) intersection in detail:");
    let ci = intersect_special_curves(3, 5).unwrap();
    let zeta = torheight::numfield::FieldElem::generator(&ci.field);
    for j in 0..ci.cyclotomic_order {
        let lam = zeta.pow(j);
        let (tr, det) = special_curve_point(3, &lam).unwrap();
        let class = classify_intersection_fiber(3, &lam).unwrap();
        println!(
            "  lambda = zeta_14^{:2}: (tr, det) = ({}, {})  fiber: {:?}",
            j, tr, det, class
        );
    }
}
