//! Intersecting torsion translates of subtori of G_m^t in exponent
//! coordinates: pure integer linear algebra via Smith normal form.
//!
//! Run with `cargo run --example torsion_cosets`.

use num_bigint::BigInt;
use num_rational::BigRational;
use torheight::quotient::{intersect_torsion_cosets, SubtorusLattice, TorsionCoset};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn show(c: &TorsionCoset) -> String {
    let cols: Vec<String> = (0..c.lattice.rank())
        .map(|j| {
            let col: Vec<String> = (0..c.ambient_rank())
                .map(|i| c.lattice.basis()[i][j].to_string())
                .collect();
            format!("({})", col.join(","))
        })
        .collect();
    let tr: Vec<String> = c.translate.iter().map(|x| x.to_string()).collect();
    format!("span{{{}}} + ({})", cols.join(","), tr.join(","))
}

fn main() {
    // two coordinate lines in G_m^2 with torsion translates meet in a point
    let s1 = SubtorusLattice::from_i64(2, &[&[1, 0]]).unwrap();
    let s2 = SubtorusLattice::from_i64(2, &[&[0, 1]]).unwrap();
    let c1 = TorsionCoset::new(s1, vec![q(0, 1), q(1, 3)]).unwrap();
    let c2 = TorsionCoset::new(s2, vec![q(1, 4), q(0, 1)]).unwrap();
    println!("c1 = {}", show(&c1));
    println!("c2 = {}", show(&c2));
    match intersect_torsion_cosets(&c1, &c2).unwrap() {
        Some(out) => println!("c1 cap c2 = {}\n", show(&out)),
        None => println!("empty\n"),
    }

    // parallel translates of the diagonal torus are disjoint
    let diag = SubtorusLattice::from_i64(2, &[&[1, 1]]).unwrap();
    let c1 = TorsionCoset::new(diag.clone(), vec![q(0, 1), q(0, 1)]).unwrap();
    let c2 = TorsionCoset::new(diag.clone(), vec![q(1, 2), q(0, 1)]).unwrap();
    println!("c1 = {}", show(&c1));
    println!("c2 = {}", show(&c2));
    println!(
        "c1 cap c2 = {:?}\n",
        intersect_torsion_cosets(&c1, &c2).unwrap().map(|c| show(&c))
    );

    // a rank-2 and a rank-1 subtorus of G_m^3
    let plane = SubtorusLattice::from_i64(3, &[&[1, 0, 1], &[0, 1, -1]]).unwrap();
    let line = SubtorusLattice::from_i64(3, &[&[1, 1, 1]]).unwrap();
    let c1 = TorsionCoset::new(plane, vec![q(1, 6), q(0, 1), q(0, 1)]).unwrap();
    let c2 = TorsionCoset::new(line, vec![q(0, 1), q(1, 2), q(1, 3)]).unwrap();
    println!("c1 = {}", show(&c1));
    println!("c2 = {}", show(&c2));
    match intersect_torsion_cosets(&c1, &c2).unwrap() {
        Some(out) => {
            println!("c1 cap c2 = {}", show(&out));
            println!(
                "membership re-checked exactly: {} / {}",
                c1.contains(&out.translate),
                c2.contains(&out.translate)
            );
        }
        None => println!("empty"),
    }
}
