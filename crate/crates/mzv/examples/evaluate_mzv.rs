//! High-precision numeric evaluation of multiple zeta values and numeric
//! confirmation of the sum formula and its weighted refinement.
//!
//! Run with: `cargo run --release --example evaluate_mzv`

use mzv::numerics::{check_sum_formula, check_weighted_sum_formula, mzv};
use mzv::words::Composition;

fn main() {
    for s in ["z(2)", "z(3)", "z(2,1)", "z(3,1)", "z(2,1,1)"] {
        let c: Composition = s.parse().unwrap();
        let v = mzv(&c, 1e-12).unwrap();
        println!("{c} = {}  (err <= {:.1e})", v.decimal(12), v.err());
    }

    // the classic duality instance: zeta(2,1) = zeta(3)
    let a = mzv(&"z(2,1)".parse().unwrap(), 1e-12).unwrap();
    let b = mzv(&"z(3)".parse().unwrap(), 1e-12).unwrap();
    assert!((a.to_f64() - b.to_f64()).abs() < 1e-11);
    println!("|zeta(2,1) - zeta(3)| < 1e-11");

    // sum formula: all admissible depth-k weight-n values sum to zeta(n)
    let c = check_sum_formula(3, 7, 1e-9).unwrap();
    println!(
        "sum formula k=3 n=7: residual {:.2e} within {:.2e}: {}",
        c.residual, c.bound, c.pass
    );
    assert!(c.pass);

    // weighted refinement: power-of-two weights reproduce n * zeta(n)
    let c = check_weighted_sum_formula(3, 8, 1e-9).unwrap();
    println!(
        "weighted sum formula k=3 n=8: residual {:.2e} within {:.2e}: {}",
        c.residual, c.bound, c.pass
    );
    assert!(c.pass);
}
