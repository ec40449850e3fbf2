//! The shuffle product on binary words,
//!
//! ```text
//! (a u) ш (b v) = a (u ш b v) + b (a u ш v),   a, b in {x0, x1}
//! ```
//!
//! its transport to composition words along the `z <-> x` bijection, the
//! first-exponent-raising operator P and the `z1`-prepending operator Q with
//! their mixed Rota–Baxter laws, Euler's decomposition formula for
//! `z_r ш~ z_s`, and the builders for both sides of the shuffle sum formulas.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::identities::calc_c;
use crate::lincomb::LinComb;
use crate::words::{
    composition_to_word, compositions_of, word_to_composition, BinaryWord, Composition,
};
use crate::DomainError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OperatorError {
    /// P raises the first exponent and is only defined on nonempty words.
    #[error("P applied to a combination whose support contains the empty word")]
    POnUnit,
}

static CACHE: LazyLock<Mutex<HashMap<(BinaryWord, BinaryWord), LinComb<BinaryWord>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Shuffle product of two binary words. Memoized; same cache contract as the
/// stuffle product.
pub fn shuffle_words(u: &BinaryWord, v: &BinaryWord) -> LinComb<BinaryWord> {
    if u.is_empty() {
        return LinComb::monomial(v.clone());
    }
    if v.is_empty() {
        return LinComb::monomial(u.clone());
    }
    let key = if u <= v {
        (u.clone(), v.clone())
    } else {
        (v.clone(), u.clone())
    };
    if let Some(hit) = CACHE.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let a = u.letters()[0];
    let b = v.letters()[0];
    let ut = BinaryWord::new(u.letters()[1..].to_vec());
    let vt = BinaryWord::new(v.letters()[1..].to_vec());
    let mut out = shuffle_words(&ut, v).map_words(|w| w.prepended(a));
    out.add_assign(&shuffle_words(u, &vt).map_words(|w| w.prepended(b)));
    CACHE.lock().unwrap().insert(key, out.clone());
    out
}

/// The product `w1 ш~ w2` on composition words: map through the bijection,
/// shuffle the binary words, map back. Shuffling words ending in x1 yields
/// words ending in x1, so the result always lies back in H1.
pub fn transported_shuffle(
    a: &LinComb<Composition>,
    b: &LinComb<Composition>,
) -> LinComb<Composition> {
    let mut out = LinComb::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            out.add_assign(&transported_shuffle_words(u, v).scale(&(cu * cv)));
        }
    }
    out
}

/// Single-word case of [`transported_shuffle`].
pub fn transported_shuffle_words(u: &Composition, v: &Composition) -> LinComb<Composition> {
    shuffle_words(&composition_to_word(u), &composition_to_word(v))
        .try_map_words(word_to_composition)
        .expect("shuffles of H1 words stay in H1")
}

/// P: raise the first exponent, `z_{s1,...} -> z_{s1+1,...}`, term by term.
/// Transport of prepending x0; injective on words, so coefficient-preserving.
pub fn op_p(a: &LinComb<Composition>) -> Result<LinComb<Composition>, OperatorError> {
    a.try_map_words(|w| {
        let mut parts = w.parts().to_vec();
        match parts.first_mut() {
            None => return Err(OperatorError::POnUnit),
            Some(s1) => *s1 += 1,
        }
        Ok(Composition::new(parts).expect("parts stay positive"))
    })
}

/// Q: prepend `z_1`, with `Q(1) = z_1`. Transport of prepending x1.
pub fn op_q(a: &LinComb<Composition>) -> LinComb<Composition> {
    a.map_words(|w| w.prepended(1))
}

fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..b {
        r = r * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    r
}

/// Euler's decomposition formula in closed form:
/// `z_r ш~ z_s = sum_{t1+t2=r+s} (C(t1-1, r-1) + C(t1-1, s-1)) z_{t1,t2}`.
pub fn euler_decomposition(r: u32, s: u32) -> Result<LinComb<Composition>, DomainError> {
    if r < 1 || s < 1 {
        return Err(DomainError(format!("need r, s >= 1, got r={r} s={s}")));
    }
    let n = r + s;
    let mut out = LinComb::zero();
    for t1 in 1..n {
        let t2 = n - t1;
        let c = binom(t1 as i64 - 1, r as i64 - 1) + binom(t1 as i64 - 1, s as i64 - 1);
        out.add_term(
            Composition::new(vec![t1, t2]).expect("parts positive"),
            c,
        );
    }
    Ok(out)
}

fn check_params(k: u32, n: u32, require_s1_ge2: bool) -> Result<(), DomainError> {
    if k < 2 {
        return Err(DomainError(format!("k must be >= 2, got {k}")));
    }
    let n_min = if require_s1_ge2 { k + 1 } else { k };
    if n < n_min {
        return Err(DomainError(format!("n must be >= {n_min} for k={k}, got {n}")));
    }
    Ok(())
}

fn z1_check(k: u32, n: u32) -> Result<(), DomainError> {
    if k < 2 {
        return Err(DomainError(format!("k must be >= 2, got {k}")));
    }
    if n < k {
        return Err(DomainError(format!("n must be >= k={k}, got {n}")));
    }
    Ok(())
}

/// RHS of `z1 ш~ sum_{s1>=2} z_{s1,...,s_{k-1}}` over compositions of `n-1`:
/// depth-`k` terms split by `t1 = 1, t2 >= 2` (coefficient 1), `t1 >= 2,
/// tk = 1` (coefficient k) and `t1, tk >= 2` (coefficient k-1). Zero when
/// `n = k`, matching the LHS.
pub fn z1_shuffle_rhs_admissible(k: u32, n: u32) -> Result<LinComb<Composition>, DomainError> {
    z1_check(k, n)?;
    let mut out = LinComb::zero();
    for t in compositions_of(n, k, false).map_err(|e| DomainError(e.to_string()))? {
        let p = t.parts();
        let (t1, t2, tk) = (p[0], p[1], p[k as usize - 1]);
        if t1 == 1 && t2 >= 2 {
            out.add_term(t, BigInt::one());
        } else if t1 >= 2 && tk == 1 {
            out.add_term(t, BigInt::from(k));
        } else if t1 >= 2 && tk >= 2 {
            out.add_term(t, BigInt::from(k - 1));
        }
    }
    Ok(out)
}

/// RHS of `z1 ш~ sum z_{s1,...,s_{k-1}}` over all compositions of `n-1`:
/// coefficient k on depth-`k` terms with `tk = 1`, k-1 on those with
/// `tk >= 2`.
pub fn z1_shuffle_rhs_all(k: u32, n: u32) -> Result<LinComb<Composition>, DomainError> {
    z1_check(k, n)?;
    let mut out = LinComb::zero();
    for t in compositions_of(n, k, false).map_err(|e| DomainError(e.to_string()))? {
        let tk = *t.parts().last().expect("depth k >= 2");
        let c = if tk == 1 { k } else { k - 1 };
        out.add_term(t, BigInt::from(c));
    }
    Ok(out)
}

/// LHS of the shuffle sum formulas: `sum z_r ш~ z_{s1,...,s_{k-1}}` over
/// `r >= 1` and compositions of `n - r` (with `s1 >= 2` when flagged),
/// computed entirely through binary-word shuffles.
pub fn shuffle_sum_lhs(
    k: u32,
    n: u32,
    require_s1_ge2: bool,
) -> Result<LinComb<Composition>, DomainError> {
    check_params(k, n, require_s1_ge2)?;
    sum_lhs_with(k, n, require_s1_ge2, transported_shuffle_words)
}

pub(crate) fn sum_lhs_with<P>(
    k: u32,
    n: u32,
    require_s1_ge2: bool,
    product: P,
) -> Result<LinComb<Composition>, DomainError>
where
    P: Fn(&Composition, &Composition) -> LinComb<Composition>,
{
    let mut out = LinComb::zero();
    for r in 1..n {
        let zr = Composition::single(r);
        for s in compositions_of(n - r, k - 1, require_s1_ge2)
            .map_err(|e| DomainError(e.to_string()))?
        {
            out.add_assign(&product(&zr, &s));
        }
    }
    Ok(out)
}

/// RHS of the unrestricted shuffle sum formula:
/// `sum C(t1,...,t_{k-1}) z_{t1,...,tk}` over compositions of `n` into `k`.
pub fn shuffle_sum_rhs_thm25(k: u32, n: u32) -> Result<LinComb<Composition>, DomainError> {
    check_params(k, n, false)?;
    let mut out = LinComb::zero();
    for t in compositions_of(n, k, false).map_err(|e| DomainError(e.to_string()))? {
        let c = calc_c(&t.parts()[..k as usize - 1])?;
        out.add_term(t, c);
    }
    Ok(out)
}

/// RHS of the `s1 >= 2` shuffle sum formula:
/// `sum [C(t1,...,t_{k-1}) - C(t2,...,t_{k-1})] z_t  -  sum_{t2=1} z_t`.
pub fn shuffle_sum_rhs_thm26(k: u32, n: u32) -> Result<LinComb<Composition>, DomainError> {
    check_params(k, n, true)?;
    let mut out = LinComb::zero();
    for t in compositions_of(n, k, false).map_err(|e| DomainError(e.to_string()))? {
        let p = t.parts();
        let mut c = calc_c(&p[..k as usize - 1])? - calc_c(&p[1..k as usize - 1])?;
        if p[1] == 1 {
            c -= 1;
        }
        out.add_term(t, c);
    }
    Ok(out)
}
