//! Expand quasi-shuffle (stuffle) products of composition words.
//!
//! Run with: `cargo run --example stuffle_product`

use mzv::oracle::stuffle_brute_force;
use mzv::stuffle::stuffle;
use mzv::words::Composition;

fn main() {
    let pairs = [("z(2)", "z(3)"), ("z(2,1)", "z(2)"), ("z(1)", "z(1,1)")];
    for (a, b) in pairs {
        let u: Composition = a.parse().unwrap();
        let v: Composition = b.parse().unwrap();
        let p = stuffle(&u, &v);
        println!("{u} * {v} = {p}");
        // the recursive expansion and the exhaustive interleaving-with-merges
        // enumeration must agree term by term
        assert_eq!(p, stuffle_brute_force(&u, &v));
    }

    // the product is graded: every term of a weight-a times weight-b product
    // has weight a + b
    let u: Composition = "z(3,1)".parse().unwrap();
    let v: Composition = "z(2,2)".parse().unwrap();
    for (w, c) in stuffle(&u, &v).iter() {
        println!("  weight {} depth {}: {c}*{w}", w.weight(), w.depth());
        assert_eq!(w.weight(), u.weight() + v.weight());
    }
}
