//! Composition words `z_{s1,...,sk}`, binary words over `{x0, x1}`, and the
//! bijection `z_{s1,...,sk} <-> x0^{s1-1} x1 ... x0^{sk-1} x1` between them.
//!
//! The empty composition and the empty binary word both stand for the unit 1
//! of their algebras; every operation treats them uniformly.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

/// Default ceiling on the weight the enumerators will touch. Term counts grow
/// like 2^n, so past this we refuse instead of silently grinding.
pub const DEFAULT_MAX_WEIGHT: u32 = 24;

static MAX_WEIGHT: OnceLock<u32> = OnceLock::new();

/// Weight ceiling for enumeration, overridable via `MZV_MAX_WEIGHT`.
pub fn max_weight() -> u32 {
    *MAX_WEIGHT.get_or_init(|| {
        std::env::var("MZV_MAX_WEIGHT")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_WEIGHT)
    })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    /// A composition part was zero (or otherwise not a positive integer).
    #[error("composition parts must be positive, got {0}")]
    NonPositivePart(i64),
    /// The word does not end in x1, so it indexes no z-monomial.
    #[error("binary word does not lie in H1 (must be empty or end in x1)")]
    NotInH1,
    /// An enumeration request exceeded the configured weight ceiling.
    #[error("weight {requested} exceeds the configured maximum {max} (set MZV_MAX_WEIGHT to raise)")]
    WeightLimit { requested: u32, max: u32 },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// One letter of the two-letter alphabet generating the shuffle algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X0,
    X1,
}

impl Letter {
    /// Swap x0 and x1. Used by the Hölder convolution split.
    pub fn dual(self) -> Letter {
        match self {
            Letter::X0 => Letter::X1,
            Letter::X1 => Letter::X0,
        }
    }
}

/// A finite sequence of positive integers `(s1,...,sk)`; the index of a
/// z-monomial and of an MZV. The empty composition is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Build a composition, rejecting zero parts.
    pub fn new(parts: Vec<u32>) -> Result<Self, WordError> {
        if let Some(&p) = parts.iter().find(|&&p| p == 0) {
            return Err(WordError::NonPositivePart(p as i64));
        }
        Ok(Composition { parts })
    }

    /// The empty composition, i.e. the unit 1.
    pub fn unit() -> Self {
        Composition::default()
    }

    /// Single-part composition `z_s`.
    pub fn single(s: u32) -> Self {
        debug_assert!(s >= 1);
        Composition { parts: vec![s] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `s1 + ... + sk`.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts `k`.
    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    /// Nonempty with `s1 >= 2`; exactly the compositions indexing convergent
    /// MZVs (the H0 condition).
    pub fn is_admissible(&self) -> bool {
        self.parts.first().is_some_and(|&s| s >= 2)
    }

    /// Prepend one part, `z_r * self` as a word.
    pub fn prepended(&self, r: u32) -> Composition {
        debug_assert!(r >= 1);
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(r);
        parts.extend_from_slice(&self.parts);
        Composition { parts }
    }

    /// Composition with the first part removed. Unit stays unit.
    pub fn tail(&self) -> Composition {
        Composition {
            parts: self.parts.get(1..).unwrap_or(&[]).to_vec(),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = WordError;

    /// Strict parse of `z(2,1,3)` or bare `2,1,3`. `z()` is the unit.
    fn from_str(s: &str) -> Result<Self, WordError> {
        let inner = if let Some(rest) = s.strip_prefix("z(") {
            rest.strip_suffix(')').ok_or(WordError::Parse {
                pos: s.len(),
                msg: "missing closing ')'".into(),
            })?
        } else {
            s
        };
        if inner.is_empty() {
            return Ok(Composition::unit());
        }
        let mut parts = Vec::new();
        let mut pos = 0usize;
        for piece in inner.split(',') {
            let t = piece.trim();
            let v: i64 = t.parse().map_err(|_| WordError::Parse {
                pos,
                msg: format!("expected a positive integer, got {t:?}"),
            })?;
            if v < 1 {
                return Err(WordError::NonPositivePart(v));
            }
            parts.push(v as u32);
            pos += piece.len() + 1;
        }
        Ok(Composition { parts })
    }
}

/// A word over `{x0, x1}`; element of the free monoid M(x0, x1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BinaryWord {
    letters: Vec<Letter>,
}

impl BinaryWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BinaryWord { letters }
    }

    pub fn unit() -> Self {
        BinaryWord::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Membership in H1: empty or ending in x1.
    pub fn in_h1(&self) -> bool {
        self.letters.last().is_none_or(|&l| l == Letter::X1)
    }

    /// Membership in H0: empty or (starting x0 and ending x1).
    pub fn in_h0(&self) -> bool {
        self.is_empty()
            || (self.letters.first() == Some(&Letter::X0)
                && self.letters.last() == Some(&Letter::X1))
    }

    pub fn prepended(&self, l: Letter) -> BinaryWord {
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.push(l);
        letters.extend_from_slice(&self.letters);
        BinaryWord { letters }
    }
}

impl fmt::Display for BinaryWord {
    /// Textual form over `{x, y}` with x = x0 and y = x1, so z(2,1) = "xyy".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            match l {
                Letter::X0 => write!(f, "x")?,
                Letter::X1 => write!(f, "y")?,
            }
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        let mut letters = Vec::with_capacity(s.len());
        for (pos, c) in s.chars().enumerate() {
            match c {
                'x' => letters.push(Letter::X0),
                'y' => letters.push(Letter::X1),
                other => {
                    return Err(WordError::Parse {
                        pos,
                        msg: format!("expected 'x' or 'y', got {other:?}"),
                    })
                }
            }
        }
        Ok(BinaryWord { letters })
    }
}

/// `z_{s1,...,sk} -> x0^{s1-1} x1 ... x0^{sk-1} x1`. Always lands in H1.
pub fn composition_to_word(c: &Composition) -> BinaryWord {
    let mut letters = Vec::with_capacity(c.weight() as usize);
    for &s in c.parts() {
        for _ in 0..s - 1 {
            letters.push(Letter::X0);
        }
        letters.push(Letter::X1);
    }
    BinaryWord { letters }
}

/// Inverse direction of the bijection; defined exactly on H1.
pub fn word_to_composition(w: &BinaryWord) -> Result<Composition, WordError> {
    if !w.in_h1() {
        return Err(WordError::NotInH1);
    }
    let mut parts = Vec::new();
    let mut run = 0u32;
    for &l in w.letters() {
        match l {
            Letter::X0 => run += 1,
            Letter::X1 => {
                parts.push(run + 1);
                run = 0;
            }
        }
    }
    Ok(Composition { parts })
}

/// All compositions of `n` into exactly `k` positive parts, in lexicographic
/// order, optionally restricted to admissible ones (`s1 >= 2`).
pub fn compositions_of(
    n: u32,
    k: u32,
    admissible_only: bool,
) -> Result<Vec<Composition>, WordError> {
    compositions_of_with(n, k, admissible_only, |_| true)
}

/// As [`compositions_of`], with an extra filter applied to each composition.
pub fn compositions_of_with<F>(
    n: u32,
    k: u32,
    admissible_only: bool,
    extra: F,
) -> Result<Vec<Composition>, WordError>
where
    F: Fn(&Composition) -> bool,
{
    let max = max_weight();
    if n > max {
        return Err(WordError::WeightLimit { requested: n, max });
    }
    let mut out = Vec::new();
    if k == 0 || n == 0 {
        return Ok(out);
    }
    let mut parts = vec![0u32; k as usize];
    rec_compose(n, 0, &mut parts, admissible_only, &extra, &mut out);
    Ok(out)
}

fn rec_compose<F>(
    remaining: u32,
    idx: usize,
    parts: &mut [u32],
    admissible_only: bool,
    extra: &F,
    out: &mut Vec<Composition>,
) where
    F: Fn(&Composition) -> bool,
{
    let k = parts.len();
    if idx == k - 1 {
        let lo = if admissible_only && idx == 0 { 2 } else { 1 };
        if remaining >= lo {
            parts[idx] = remaining;
            let c = Composition {
                parts: parts.to_vec(),
            };
            if extra(&c) {
                out.push(c);
            }
        }
        return;
    }
    let slots_after = (k - 1 - idx) as u32;
    let lo = if admissible_only && idx == 0 { 2 } else { 1 };
    if remaining < lo + slots_after {
        return;
    }
    for v in lo..=remaining - slots_after {
        parts[idx] = v;
        rec_compose(remaining - v, idx + 1, parts, admissible_only, extra, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn bijection_examples() {
        // z(2,1) <-> x0 x1 x1
        let w = composition_to_word(&comp(&[2, 1]));
        assert_eq!(w.to_string(), "xyy");
        assert_eq!(word_to_composition(&w).unwrap(), comp(&[2, 1]));
        // z(3,2) <-> x0 x0 x1 x0 x1
        assert_eq!(composition_to_word(&comp(&[3, 2])).to_string(), "xxyxy");
        // unit maps to unit
        assert!(composition_to_word(&Composition::unit()).is_empty());
        assert_eq!(
            word_to_composition(&BinaryWord::unit()).unwrap(),
            Composition::unit()
        );
    }

    #[test]
    fn word_not_in_h1_rejected() {
        let w: BinaryWord = "yx".parse().unwrap();
        assert_eq!(word_to_composition(&w), Err(WordError::NotInH1));
    }

    #[test]
    fn weight_depth() {
        assert_eq!(comp(&[2, 1]).weight(), 3);
        assert_eq!(comp(&[2, 1]).depth(), 2);
        assert_eq!(Composition::unit().weight(), 0);
        assert_eq!(Composition::unit().depth(), 0);
        assert_eq!(comp(&[4, 1, 1]).weight(), 6);
        assert_eq!(comp(&[4, 1, 1]).depth(), 3);
    }

    #[test]
    fn admissibility() {
        assert!(comp(&[2, 1]).is_admissible());
        assert!(!comp(&[1, 2]).is_admissible());
        assert!(!Composition::unit().is_admissible());
    }

    #[test]
    fn enumeration_lexicographic() {
        let all: Vec<String> = compositions_of(4, 2, false)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(all, vec!["z(1,3)", "z(2,2)", "z(3,1)"]);
        let adm: Vec<String> = compositions_of(4, 2, true)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(adm, vec!["z(2,2)", "z(3,1)"]);
        assert!(compositions_of(3, 4, false).unwrap().is_empty());
    }

    #[test]
    fn enumeration_counts_binomial() {
        // |compositions of n into k parts| = C(n-1, k-1)
        fn binom(n: u32, k: u32) -> u64 {
            if k > n {
                return 0;
            }
            let mut r = 1u64;
            for i in 0..k as u64 {
                r = r * (n as u64 - i) / (i + 1);
            }
            r
        }
        for n in 1..=10 {
            for k in 1..=n {
                assert_eq!(
                    compositions_of(n, k, false).unwrap().len() as u64,
                    binom(n - 1, k - 1),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn weight_ceiling_refuses() {
        let err = compositions_of(1000, 2, false).unwrap_err();
        assert!(matches!(err, WordError::WeightLimit { .. }));
    }

    #[test]
    fn parse_compositions() {
        assert_eq!("z(2,1,3)".parse::<Composition>().unwrap(), comp(&[2, 1, 3]));
        assert_eq!("2,1,3".parse::<Composition>().unwrap(), comp(&[2, 1, 3]));
        assert_eq!("z()".parse::<Composition>().unwrap(), Composition::unit());
        assert!("z(0)".parse::<Composition>().is_err());
        assert!("z(2,-1)".parse::<Composition>().is_err());
        assert!("z(2,a)".parse::<Composition>().is_err());
        assert!("z(2,1".parse::<Composition>().is_err());
    }

    #[test]
    fn parse_words() {
        let w: BinaryWord = "xyy".parse().unwrap();
        assert_eq!(word_to_composition(&w).unwrap(), comp(&[2, 1]));
        assert!("xzy".parse::<BinaryWord>().is_err());
    }

    #[test]
    fn admissible_iff_h0() {
        for n in 1..=8 {
            for k in 1..=n {
                for c in compositions_of(n, k, false).unwrap() {
                    assert_eq!(c.is_admissible(), composition_to_word(&c).in_h0());
                }
            }
        }
    }
}
