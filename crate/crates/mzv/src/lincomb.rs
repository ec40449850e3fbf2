//! Formal integer-coefficient linear combinations of words.
//!
//! `LinComb<W>` is the carrier of every product and identity in the crate: an
//! element of the free Z-module on the word type `W`, kept in canonical form
//! (no stored zero coefficients, terms ordered by word).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::words::{Composition, WordError};

/// A formal Z-linear combination of words of type `W`.
///
/// Coefficients are arbitrary-precision from the start; the weights appearing
/// in the sum formulas reach 2^{n-1} and exactness must never be in doubt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinComb<W: Ord> {
    terms: BTreeMap<W, BigInt>,
}

impl<W: Ord> Default for LinComb<W> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<W: Ord + Clone> LinComb<W> {
    /// The zero combination.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single word `w` with coefficient 1.
    pub fn monomial(w: W) -> Self {
        Self::term(w, BigInt::from(1))
    }

    /// The single term `c * w` (zero coefficient gives the zero combination).
    pub fn term(w: W, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        LinComb { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `w`, zero if absent.
    pub fn coeff(&self, w: &W) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in word order.
    pub fn iter(&self) -> impl Iterator<Item = (&W, &BigInt)> {
        self.terms.iter()
    }

    /// Sum of all coefficients (the "mass"; counts shuffles/quasi-shuffles).
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Add `c * w` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, w: W, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    /// Every coefficient multiplied by `m`.
    pub fn scale(&self, m: &BigInt) -> Self {
        if m.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * m))
                .collect(),
        }
    }

    /// Keep only terms whose word satisfies the predicate.
    pub fn filter_terms<F: Fn(&W) -> bool>(&self, pred: F) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| pred(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Push the combination along a word map; coefficients of colliding
    /// images are summed.
    pub fn map_words<W2: Ord + Clone, F: Fn(&W) -> W2>(&self, f: F) -> LinComb<W2> {
        let mut out = LinComb::zero();
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Fallible variant of [`map_words`](Self::map_words).
    pub fn try_map_words<W2: Ord + Clone, E, F: Fn(&W) -> Result<W2, E>>(
        &self,
        f: F,
    ) -> Result<LinComb<W2>, E> {
        let mut out = LinComb::zero();
        for (w, c) in &self.terms {
            out.add_term(f(w)?, c.clone());
        }
        Ok(out)
    }
}

impl<W: Ord + Clone> FromIterator<(W, BigInt)> for LinComb<W> {
    fn from_iter<I: IntoIterator<Item = (W, BigInt)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (w, c) in iter {
            out.add_term(w, c);
        }
        out
    }
}

impl<W: Ord + fmt::Display> fmt::Display for LinComb<W> {
    /// Canonical text form, e.g. `3*z(2,1) + -1*z(3)`; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{w}")?;
        }
        Ok(())
    }
}

impl FromStr for LinComb<Composition> {
    type Err = WordError;

    /// Parse the canonical text form produced by `Display`.
    fn from_str(s: &str) -> Result<Self, WordError> {
        let s = s.trim();
        if s == "0" {
            return Ok(LinComb::zero());
        }
        let mut out = LinComb::zero();
        for piece in s.split(" + ") {
            let (coeff, word) = piece.split_once('*').ok_or(WordError::Parse {
                pos: 0,
                msg: format!("expected coeff*word, got {piece:?}"),
            })?;
            let c: BigInt = coeff.trim().parse().map_err(|_| WordError::Parse {
                pos: 0,
                msg: format!("bad coefficient {coeff:?}"),
            })?;
            out.add_term(word.trim().parse::<Composition>()?, c);
        }
        Ok(out)
    }
}

/// JSON shape for one term of a `LinComb<Composition>`: the composition as an
/// integer list and the coefficient as a decimal string (arbitrary size).
#[derive(Debug, Serialize, Deserialize)]
pub struct TermRecord {
    pub word: Vec<u32>,
    pub coeff: String,
}

impl LinComb<Composition> {
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.iter()
            .map(|(w, c)| TermRecord {
                word: w.parts().to_vec(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<Self, WordError> {
        let mut out = LinComb::zero();
        for r in records {
            let c: BigInt = r.coeff.parse().map_err(|_| WordError::Parse {
                pos: 0,
                msg: format!("bad coefficient {:?}", r.coeff),
            })?;
            out.add_term(Composition::new(r.word.clone())?, c);
        }
        Ok(out)
    }
}

impl Serialize for LinComb<Composition> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_records().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LinComb<Composition> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        LinComb::from_records(&records).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn add_cancels_zeros() {
        let a = LinComb::monomial(z(&[2])).add(&LinComb::monomial(z(&[3])));
        let b = LinComb::term(z(&[3]), BigInt::from(-1));
        assert_eq!(a.add(&b), LinComb::monomial(z(&[2])));
        assert_eq!(LinComb::zero().add(&a), a);
        let two = LinComb::term(z(&[2, 1]), BigInt::from(2));
        let three = LinComb::term(z(&[2, 1]), BigInt::from(3));
        assert_eq!(two.add(&three), LinComb::term(z(&[2, 1]), BigInt::from(5)));
    }

    #[test]
    fn scale_by_zero() {
        let a = LinComb::monomial(z(&[2]));
        assert!(a.scale(&BigInt::zero()).is_zero());
        assert!(LinComb::<Composition>::zero().scale(&BigInt::from(7)).is_zero());
        let s = LinComb::monomial(z(&[2]))
            .add(&LinComb::monomial(z(&[3])))
            .scale(&BigInt::from(2));
        assert_eq!(s.coeff(&z(&[2])), BigInt::from(2));
        assert_eq!(s.coeff(&z(&[3])), BigInt::from(2));
    }

    #[test]
    fn filter_terms_examples() {
        let a = LinComb::monomial(z(&[1, 2])).add(&LinComb::monomial(z(&[2, 1])));
        let f = a.filter_terms(|w| w.parts()[0] >= 2);
        assert_eq!(f, LinComb::monomial(z(&[2, 1])));
        assert_eq!(a.filter_terms(|_| true), a);
        assert!(a.filter_terms(|_| false).is_zero());
    }

    #[test]
    fn map_words_transport() {
        use crate::words::composition_to_word;
        let a = LinComb::monomial(z(&[2, 1]));
        let w = a.map_words(composition_to_word);
        assert_eq!(w.to_string(), "1*xyy");
        assert!(LinComb::<Composition>::zero()
            .map_words(composition_to_word)
            .is_zero());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let a: LinComb<Composition> = [
            (z(&[2, 1]), BigInt::from(3)),
            (z(&[3]), BigInt::from(-1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(a.to_string(), "3*z(2,1) + -1*z(3)");
        let back: LinComb<Composition> = a.to_string().parse().unwrap();
        assert_eq!(back, a);
        assert_eq!("0".parse::<LinComb<Composition>>().unwrap(), LinComb::zero());
    }

    #[test]
    fn json_round_trip() {
        let a: LinComb<Composition> = [
            (z(&[2, 1]), BigInt::from(3)),
            (z(&[3]), BigInt::from(-1)),
        ]
        .into_iter()
        .collect();
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(j, r#"[{"word":[2,1],"coeff":"3"},{"word":[3],"coeff":"-1"}]"#);
        let back: LinComb<Composition> = serde_json::from_str(&j).unwrap();
        assert_eq!(back, a);
    }
}
