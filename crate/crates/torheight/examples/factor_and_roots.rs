//! Exact rational factorization and certified complex root isolation.
//!
//! Run with `cargo run --example factor_and_roots`.

use torheight::exactpoly::{complex_roots, cyclotomic, factor_rational, QPoly};

fn main() {
    println!("factorization over Q:");
    let examples = [
        QPoly::from_i64(&[-1, 0, 0, 0, 1]),            // x^4 - 1
        QPoly::from_i64(&[2, -3, -2, 3, 0, 0, 1]),     // mixed factors
        &cyclotomic(12) * &cyclotomic(12),             // a square
        &QPoly::from_i64(&[6]) * &QPoly::from_i64(&[-1, 1]).pow(3),
    ];
    for f in &examples {
        let fact = factor_rational(f).unwrap();
        let parts: Vec<String> = fact
            .factors
            .iter()
            .map(|(p, m)| {
                if *m == 1 {
                    format!("({})", p)
                } else {
                    format!("({})^{}", p, m)
                }
            })
            .collect();
        println!("  {} = {} * {}", f, fact.content, parts.join(" "));
        assert_eq!(fact.product(), *f);
    }

    println!("\ncyclotomic polynomials stay irreducible (spot checks):");
    for m in [12u64, 35, 105] {
        let phi = cyclotomic(m);
        let fact = factor_rational(&phi).unwrap();
        println!(
            "  Phi_{} has degree {} and {} factor(s)",
            m,
            phi.degree().unwrap(),
            fact.factors.len()
        );
    }

    println!("\ncertified root boxes of x^2 - x - 1:");
    for b in complex_roots(&QPoly::from_i64(&[-1, -1, 1]), 1e-12).unwrap() {
        println!("  {:.15} + {:.15} i  (radius {:.2e})", b.re, b.im, b.radius);
    }
    println!("\ncertified root boxes of Phi_5 (all on the unit circle):");
    for b in complex_roots(&cyclotomic(5), 1e-12).unwrap() {
        println!(
            "  {:+.12} {:+.12} i   |root| in [{:.12}, {:.12}]",
            b.re,
            b.im,
            b.abs_bounds().0,
            b.abs_bounds().1
        );
    }
}
