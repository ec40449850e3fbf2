//! Shuffle products on binary words, and the same product transported to
//! composition words through the x0^{s-1} x1 encoding.
//!
//! Run with: `cargo run --example shuffle_product`

use mzv::shuffle::{shuffle_words, transported_shuffle_words};
use mzv::words::{composition_to_word, BinaryWord, Composition};

fn main() {
    // plain word shuffle: x = x0, y = x1
    let u: BinaryWord = "xy".parse().unwrap();
    let v: BinaryWord = "xxy".parse().unwrap();
    println!("{u} sh {v} = {}", shuffle_words(&u, &v));

    // every composition ending in a positive part maps to a word ending in y
    let z21: Composition = "z(2,1)".parse().unwrap();
    println!("{z21} <-> {}", composition_to_word(&z21));

    // the transported product: encode, shuffle, decode
    let z2: Composition = "z(2)".parse().unwrap();
    let p = transported_shuffle_words(&z2, &z2);
    println!("{z2} sh {z2} = {p}");
    assert_eq!(p.to_string(), "2*z(2,2) + 4*z(3,1)");

    // depth is additive under shuffling, unlike under the stuffle where
    // adjacent exponents may merge
    for (w, _) in transported_shuffle_words(&z21, &z2).iter() {
        assert_eq!(w.depth(), z21.depth() + z2.depth());
    }
    println!("{z21} sh {z2} = {}", transported_shuffle_words(&z21, &z2));
}
