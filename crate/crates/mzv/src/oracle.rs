//! Brute-force enumeration oracles for both products.
//!
//! These deliberately share no code with the recursive implementations in
//! [`stuffle`](crate::stuffle) and [`shuffle`](crate::shuffle): the
//! quasi-shuffle oracle walks every take-left/take-right/merge path, and the
//! shuffle oracle enumerates position subsets. They back the golden files,
//! the oracle-equivalence tests, and the CLI `--oracle` mode.

use crate::lincomb::LinComb;
use crate::words::{composition_to_word, word_to_composition, BinaryWord, Composition, Letter};

/// Quasi-shuffle of two composition words by exhaustive path enumeration:
/// every order-preserving interleaving with optional adjacent merges
/// contributes one term.
pub fn stuffle_brute_force(u: &Composition, v: &Composition) -> LinComb<Composition> {
    let mut out = LinComb::zero();
    let mut prefix = Vec::new();
    walk(u.parts(), v.parts(), &mut prefix, &mut out);
    out
}

fn walk(u: &[u32], v: &[u32], prefix: &mut Vec<u32>, out: &mut LinComb<Composition>) {
    match (u.first(), v.first()) {
        (None, None) => {
            out.add_term(
                Composition::new(prefix.clone()).expect("parts stay positive"),
                1.into(),
            );
        }
        (Some(&a), None) => {
            prefix.push(a);
            walk(&u[1..], v, prefix, out);
            prefix.pop();
        }
        (None, Some(&b)) => {
            prefix.push(b);
            walk(u, &v[1..], prefix, out);
            prefix.pop();
        }
        (Some(&a), Some(&b)) => {
            prefix.push(a);
            walk(&u[1..], v, prefix, out);
            prefix.pop();
            prefix.push(b);
            walk(u, &v[1..], prefix, out);
            prefix.pop();
            prefix.push(a + b);
            walk(&u[1..], &v[1..], prefix, out);
            prefix.pop();
        }
    }
}

/// Shuffle of two binary words by enumerating all C(|u|+|v|, |u|) choices of
/// the positions the letters of `u` occupy in the result.
pub fn shuffle_brute_force(u: &BinaryWord, v: &BinaryWord) -> LinComb<BinaryWord> {
    let p = u.len();
    let q = v.len();
    let total = p + q;
    let mut out = LinComb::zero();
    let mut positions: Vec<usize> = (0..p).collect();
    loop {
        let mut letters = vec![Letter::X0; total];
        let mut taken = vec![false; total];
        for (i, &pos) in positions.iter().enumerate() {
            letters[pos] = u.letters()[i];
            taken[pos] = true;
        }
        let mut vi = 0;
        for (slot, t) in taken.iter().enumerate() {
            if !t {
                letters[slot] = v.letters()[vi];
                vi += 1;
            }
        }
        out.add_term(BinaryWord::new(letters), 1.into());
        // next p-subset of 0..total in lexicographic order
        if p == 0 {
            break;
        }
        let mut i = p;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if positions[i] < total - (p - i) {
                positions[i] += 1;
                for j in i + 1..p {
                    positions[j] = positions[j - 1] + 1;
                }
                break;
            }
        }
    }
    out
}

/// Transported shuffle on compositions computed entirely through the
/// brute-force word shuffle.
pub fn transported_shuffle_brute_force(
    u: &Composition,
    v: &Composition,
) -> LinComb<Composition> {
    shuffle_brute_force(&composition_to_word(u), &composition_to_word(v))
        .try_map_words(word_to_composition)
        .expect("shuffles of H1 words stay in H1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn z(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn stuffle_oracle_basic() {
        let p = stuffle_brute_force(&z(&[2]), &z(&[3]));
        assert_eq!(p.to_string(), "1*z(2,3) + 1*z(3,2) + 1*z(5)");
    }

    #[test]
    fn shuffle_oracle_counts() {
        let u: BinaryWord = "xy".parse().unwrap();
        let p = shuffle_brute_force(&u, &u);
        assert_eq!(p.to_string(), "4*xxyy + 2*xyxy");
        assert_eq!(p.coeff_sum(), BigInt::from(6)); // C(4,2)
    }

    #[test]
    fn transported_oracle_euler_case() {
        let p = transported_shuffle_brute_force(&z(&[2]), &z(&[2]));
        assert_eq!(p.to_string(), "2*z(2,2) + 4*z(3,1)");
    }
}
