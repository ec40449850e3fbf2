//! Verify the homogeneous-sum product formulas symbolically over a small
//! grid and print one report per cell.
//!
//! Run with: `cargo run --example sum_formulas`

use mzv::identities::{verify, IdentityId};

fn main() {
    let ids = [
        IdentityId::Thm31,
        IdentityId::Thm32,
        IdentityId::Thm25,
        IdentityId::Thm26,
    ];
    for id in ids {
        for k in 2..=3u32 {
            for n in k + 1..=8 {
                let r = verify(id, k, n).unwrap();
                println!(
                    "{id} k={k} n={n}: {}",
                    if r.verified() { "verified" } else { "FAILED" }
                );
                assert!(r.verified(), "discrepancy {}", r.discrepancy);
            }
        }
    }

    // a failing comparison is diagnosable: the report carries the exact
    // difference of the two sides
    let r = verify(IdentityId::Thm31, 2, 5).unwrap();
    println!("discrepancy at (2,5): {}", r.discrepancy);
}
