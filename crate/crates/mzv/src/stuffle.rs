//! The quasi-shuffle (harmonic/stuffle) product on composition words,
//!
//! ```text
//! (z_r u) * (z_s v) = z_r (u * z_s v) + z_s (z_r u * v) + z_{r+s} (u * v)
//! ```
//!
//! with `1 * u = u * 1 = u`, plus the sum-formula builders on both sides of
//! the homogeneous stuffle identities.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;

use crate::lincomb::LinComb;
use crate::words::{compositions_of, Composition};
use crate::DomainError;

// The naive recursion re-derives shared subproblems exponentially; the memo
// table keeps the full n <= 12 verification grid in the seconds range.
// Get-or-insert is atomic under the mutex; a race recomputes, never tears.
static CACHE: LazyLock<Mutex<HashMap<(Composition, Composition), LinComb<Composition>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Quasi-shuffle product of two composition words.
pub fn stuffle(u: &Composition, v: &Composition) -> LinComb<Composition> {
    if u.is_empty() {
        return LinComb::monomial(v.clone());
    }
    if v.is_empty() {
        return LinComb::monomial(u.clone());
    }
    // The product is commutative; normalize the key order.
    let key = if u <= v {
        (u.clone(), v.clone())
    } else {
        (v.clone(), u.clone())
    };
    if let Some(hit) = CACHE.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let r = u.parts()[0];
    let s = v.parts()[0];
    let ut = u.tail();
    let vt = v.tail();
    let mut out = stuffle(&ut, v).map_words(|w| w.prepended(r));
    out.add_assign(&stuffle(u, &vt).map_words(|w| w.prepended(s)));
    out.add_assign(&stuffle(&ut, &vt).map_words(|w| w.prepended(r + s)));
    CACHE.lock().unwrap().insert(key, out.clone());
    out
}

/// Bilinear extension of [`stuffle`] to linear combinations.
pub fn stuffle_lincomb(a: &LinComb<Composition>, b: &LinComb<Composition>) -> LinComb<Composition> {
    let mut out = LinComb::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            out.add_assign(&stuffle(u, v).scale(&(cu * cv)));
        }
    }
    out
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

/// Left-hand side of the stuffle sum formulas: the sum of `z_r * z_{s1,...,s_{k-1}}`
/// over `r >= 1` and compositions `(s1,...,s_{k-1})` of `n - r`, with `s1 >= 2`
/// when `require_s1_ge2` is set.
pub fn stuffle_sum_lhs(
    k: u32,
    n: u32,
    require_s1_ge2: bool,
) -> Result<LinComb<Composition>, DomainError> {
    check_params(k, n, require_s1_ge2)?;
    sum_lhs_with(k, n, require_s1_ge2, stuffle)
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

/// Right-hand side of the unrestricted stuffle sum formula:
/// `k * sum z_{t1,...,tk}  +  (n-k+1) * sum z_{u1,...,u_{k-1}}`
/// over all compositions of `n` of the stated depths.
pub fn stuffle_sum_rhs_thm31(k: u32, n: u32) -> Result<LinComb<Composition>, DomainError> {
    check_params(k, n, false)?;
    let enumerate = |depth: u32| -> Result<Vec<Composition>, DomainError> {
        compositions_of(n, depth, false).map_err(|e| DomainError(e.to_string()))
    };
    let mut out = LinComb::zero();
    let kk = BigInt::from(k);
    for t in enumerate(k)? {
        out.add_term(t, kk.clone());
    }
    let c2 = BigInt::from(n - k + 1);
    for u in enumerate(k - 1)? {
        out.add_term(u, c2.clone());
    }
    Ok(out)
}

/// Right-hand side of the `s1 >= 2` stuffle sum formula: the four-sum
/// expression splitting depth-`k` compositions by the `t1 = 1, t2 >= 2` /
/// `t1 >= 2, t2 = 1` / `t1, t2 >= 2` pattern plus `(n-k)` times the
/// admissible depth-`(k-1)` sum.
pub fn stuffle_sum_rhs_thm32(k: u32, n: u32) -> Result<LinComb<Composition>, DomainError> {
    check_params(k, n, true)?;
    let mut out = LinComb::zero();
    let depth_k = compositions_of(n, k, false).map_err(|e| DomainError(e.to_string()))?;
    let kk = BigInt::from(k);
    let km1 = BigInt::from(k - 1);
    for t in depth_k {
        let p = t.parts();
        let (t1, t2) = (p[0], p[1]);
        if t1 == 1 && t2 >= 2 {
            out.add_term(t, BigInt::from(1));
        } else if t1 >= 2 && t2 == 1 {
            out.add_term(t, km1.clone());
        } else if t1 >= 2 && t2 >= 2 {
            out.add_term(t, kk.clone());
        }
        // t1 = t2 = 1 terms do not appear.
    }
    let c = BigInt::from(n - k);
    for u in compositions_of(n, k - 1, true).map_err(|e| DomainError(e.to_string()))? {
        out.add_term(u, c.clone());
    }
    Ok(out)
}
