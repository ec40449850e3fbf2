//! Extended double shuffle elements: shuffle-minus-stuffle differences that
//! vanish on multiple zeta values, and the cancellation that keeps the r = 1
//! family inside the admissible span.
//!
//! Run with: `cargo run --example eds_elements`

use mzv::identities::eds_element;
use mzv::numerics::mzv;
use mzv::words::{compositions_of, Composition};

fn main() {
    let z2: Composition = "z(2)".parse().unwrap();
    println!("r=2, w=z(2): {}", eds_element(2, &z2).unwrap());
    println!("r=1, w=z(2): {}", eds_element(1, &z2).unwrap());

    // for r = 1 the words starting with exponent 1 cancel between the two
    // products, so the element stays admissible
    for n in 2..=7u32 {
        for k in 1..n {
            for w in compositions_of(n, k, true).unwrap() {
                let e = eds_element(1, &w).unwrap();
                assert!(e.filter_terms(|t| !t.is_admissible()).is_zero());
            }
        }
    }
    println!("r=1 elements admissible up to weight 7");

    // and the elements really do vanish numerically
    let e = eds_element(1, &z2).unwrap();
    let mut total = 0.0;
    for (w, c) in e.iter() {
        let c: f64 = c.to_string().parse().unwrap();
        total += c * mzv(w, 1e-10).unwrap().to_f64();
    }
    println!("numeric value of the r=1, w=z(2) element: {total:.2e}");
    assert!(total.abs() < 1e-9);
}
