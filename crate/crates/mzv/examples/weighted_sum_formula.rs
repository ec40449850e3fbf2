//! The power-of-two weight function behind the weighted sum formula, its two
//! closed forms, and the exact symbolic regrouping identity they rest on.
//!
//! Run with: `cargo run --example weighted_sum_formula`

use mzv::identities::{calc_c, main_theorem_weight, wsf_reduction};
use mzv::words::{compositions_of, Composition};

fn main() {
    // C satisfies C(t1+1, rest) = 2 C(t1, rest) and C(1, rest) = C(rest) + 1
    for prefix in [vec![], vec![1], vec![2], vec![1, 1], vec![2, 1]] {
        println!("C{prefix:?} = {}", calc_c(&prefix).unwrap());
    }

    // the per-word weight in its expanded form equals the difference of two
    // C values; at depth 2 it collapses to 2^i - 1
    for n in 4..=7u32 {
        for s in compositions_of(n, 3, true).unwrap() {
            let w = main_theorem_weight(&s).unwrap();
            let p = s.parts();
            let diff = calc_c(&p[..2]).unwrap() - calc_c(&p[1..2]).unwrap();
            assert_eq!(w, diff);
            println!("weight({s}) = {w}");
        }
    }
    let s: Composition = "z(5,2)".parse().unwrap();
    println!("depth-2 check: weight({s}) = {}", main_theorem_weight(&s).unwrap());

    // the regrouping identity: summed shuffle-minus-stuffle differences equal
    // an explicit C-coefficient combination
    for (k, n) in [(2, 5), (3, 7), (4, 8)] {
        let r = wsf_reduction(k, n).unwrap();
        assert!(r.verified(), "{}", r.discrepancy);
        println!("regrouping identity k={k} n={n}: verified");
    }
}
