//! The two weight-1 Rota-Baxter-type operators on composition words and the
//! four mixed laws they satisfy against the transported shuffle.
//!
//! P raises the first exponent by one; Q prepends a new exponent 1.
//!
//! Run with: `cargo run --example rota_baxter`

use mzv::identities::{verify, IdentityId};
use mzv::lincomb::LinComb;
use mzv::shuffle::{op_p, op_q};
use mzv::words::Composition;

fn main() {
    let w = LinComb::monomial("z(2,1)".parse::<Composition>().unwrap());
    println!("P(z(2,1)) = {}", op_p(&w).unwrap());
    println!("Q(z(2,1)) = {}", op_q(&w));

    // Q is defined on the empty word too; P is not
    let unit = LinComb::monomial(Composition::unit());
    println!("Q(1) = {}", op_q(&unit));
    assert!(op_p(&unit).is_err());

    // exhaustive check of all four mixed P/Q laws at each total weight
    for n in 1..=7u32 {
        let r = verify(IdentityId::RotaBaxter, 0, n).unwrap();
        assert!(r.verified(), "weight {n}: {}", r.discrepancy);
        println!("P/Q laws at total weight {n}: verified");
    }
}
