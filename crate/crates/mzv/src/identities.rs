//! The power-of-two coefficient function C, both closed forms of the weighted
//! sum formula, extended double shuffle elements, and exact verification of
//! every symbolic identity in the crate.
//!
//! Verification never returns a bare boolean: an [`IdentityReport`] carries
//! the exact discrepancy combination so a failure is diagnosable on its own.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::lincomb::LinComb;
use crate::oracle;
use crate::shuffle::{
    self, euler_decomposition, op_p, op_q, shuffle_sum_rhs_thm25, shuffle_sum_rhs_thm26,
    transported_shuffle_words, z1_shuffle_rhs_admissible, z1_shuffle_rhs_all,
};
use crate::stuffle::{self, stuffle, stuffle_sum_rhs_thm31, stuffle_sum_rhs_thm32};
use crate::words::{compositions_of, Composition};
use crate::DomainError;

/// The coefficient `C(t1,...,t_{k-1}) = (sum_{j=1}^{k-1} 2^{t1+...+tj-j}) +
/// 2^{t1+...+t_{k-1}-(k-1)}`, with `C(()) = 1`.
///
/// Takes the length-(k-1) prefix explicitly: the weighted sum formula applies
/// C to both `(t1,...,t_{k-1})` and `(t2,...,t_{k-1})` of one composition.
pub fn calc_c(prefix: &[u32]) -> Result<BigInt, DomainError> {
    if prefix.iter().any(|&t| t == 0) {
        return Err(DomainError("C requires positive entries".into()));
    }
    if prefix.is_empty() {
        return Ok(BigInt::one());
    }
    let mut total = BigInt::ZERO;
    let mut partial = 0u64;
    for (j, &t) in prefix.iter().enumerate() {
        partial += t as u64;
        total += BigInt::one() << (partial - (j as u64 + 1));
    }
    // the last exponent appears twice
    total += BigInt::one() << (partial - prefix.len() as u64);
    Ok(total)
}

/// The bracketed weight of the weighted sum formula in its first form:
/// `2^{s1-1} + (2^{s1-1}-1)((sum_{i=2}^{k-1} 2^{S_i-s1-(i-1)}) +
/// 2^{S_{k-1}-s1-(k-2)})` with `S_i = s1+...+si`.
///
/// Equals `C(s1,...,s_{k-1}) - C(s2,...,s_{k-1})`; the tests require exact
/// agreement of the two forms.
pub fn main_theorem_weight(s: &Composition) -> Result<BigInt, DomainError> {
    if !s.is_admissible() || s.depth() < 2 {
        return Err(DomainError(format!(
            "weighted sum formula needs an admissible composition of depth >= 2, got {s}"
        )));
    }
    let p = s.parts();
    let k = p.len();
    let s1 = p[0] as u64;
    let mut partial: u64 = s1;
    let mut inner = BigInt::ZERO;
    for (i, &si) in p.iter().enumerate().take(k - 1).skip(1) {
        // i is the 0-based index; the running sum S_{i+1} covers s1..s_{i+1}
        partial += si as u64;
        inner += BigInt::one() << (partial - s1 - i as u64);
    }
    // final term 2^{S_{k-1} - s1 - (k-2)}; for k = 2 this is 2^0
    inner += BigInt::one() << (partial - s1 - (k as u64 - 2));
    let lead = BigInt::one() << (s1 - 1);
    Ok(&lead + (lead.clone() - BigInt::one()) * inner)
}

/// The extended double shuffle element `z_r ш~ w - z_r * w` for admissible
/// `w`. For `r >= 2` every support word is admissible; for `r = 1` the
/// non-admissible words cancel exactly, which is what makes the element
/// evaluable on MZVs.
pub fn eds_element(r: u32, w: &Composition) -> Result<LinComb<Composition>, DomainError> {
    if r < 1 {
        return Err(DomainError("need r >= 1".into()));
    }
    if !w.is_admissible() {
        return Err(DomainError(format!("w must be admissible, got {w}")));
    }
    let zr = Composition::single(r);
    Ok(transported_shuffle_words(&zr, w).sub(&stuffle(&zr, w)))
}

/// Identifier of one verifiable identity family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IdentityId {
    /// Unrestricted stuffle sum formula.
    Thm31,
    /// Stuffle sum formula with `s1 >= 2`.
    Thm32,
    /// Unrestricted shuffle sum formula (C-coefficient RHS).
    Thm25,
    /// Shuffle sum formula with `s1 >= 2`.
    Thm26,
    /// `z1 ш~` the admissible homogeneous sum.
    Lem42a,
    /// `z1 ш~` the full homogeneous sum.
    Lem42b,
    /// The four mixed P/Q Rota–Baxter laws, exhaustive at total weight n.
    RotaBaxter,
    /// Euler's decomposition closed form vs. the word-shuffle route.
    EulerDecomp,
    /// Divergent-word cancellation in `z1 ш~ w - z1 * w`.
    EDSClosure,
    /// The regrouping identity behind the weighted sum formula.
    WSFReduction,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::Thm31,
        IdentityId::Thm32,
        IdentityId::Thm25,
        IdentityId::Thm26,
        IdentityId::Lem42a,
        IdentityId::Lem42b,
        IdentityId::RotaBaxter,
        IdentityId::EulerDecomp,
        IdentityId::EDSClosure,
        IdentityId::WSFReduction,
    ];

    /// Whether the (k, n) grid cell for this identity uses the depth
    /// parameter k. Weight-indexed families (Rota–Baxter, Euler
    /// decomposition, EDS closure) are parameterized by n alone.
    pub fn uses_k(self) -> bool {
        !matches!(
            self,
            IdentityId::RotaBaxter | IdentityId::EulerDecomp | IdentityId::EDSClosure
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for IdentityId {
    type Err = DomainError;

    fn from_str(s: &str) -> Result<Self, DomainError> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| DomainError(format!("unknown identity {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyStatus {
    Verified,
    Failed,
}

/// Outcome of one identity check. `status` is `Verified` exactly when
/// `discrepancy` is the zero combination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub k: u32,
    pub n: u32,
    pub status: VerifyStatus,
    pub discrepancy: LinComb<Composition>,
}

impl IdentityReport {
    fn new(identity: IdentityId, k: u32, n: u32, discrepancy: LinComb<Composition>) -> Self {
        let status = if discrepancy.is_zero() {
            VerifyStatus::Verified
        } else {
            VerifyStatus::Failed
        };
        IdentityReport {
            identity,
            k,
            n,
            status,
            discrepancy,
        }
    }

    pub fn verified(&self) -> bool {
        self.status == VerifyStatus::Verified
    }
}

/// Which product implementation the verifier routes LHS computations
/// through. `BruteForce` swaps in the enumeration oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    #[default]
    Recursive,
    BruteForce,
}

impl Engine {
    fn stuffle(self) -> fn(&Composition, &Composition) -> LinComb<Composition> {
        match self {
            Engine::Recursive => |u, v| stuffle(u, v),
            Engine::BruteForce => |u, v| oracle::stuffle_brute_force(u, v),
        }
    }

    fn shuffle(self) -> fn(&Composition, &Composition) -> LinComb<Composition> {
        match self {
            Engine::Recursive => |u, v| transported_shuffle_words(u, v),
            Engine::BruteForce => |u, v| oracle::transported_shuffle_brute_force(u, v),
        }
    }
}

/// Exact check of the regrouping identity from the proof of the weighted sum
/// formula:
/// `sum_{r, s1>=2} (z_r ш~ z_s - z_r * z_s)
///  = sum_{t1>=2} [C(t1..t_{k-1}) - C(t2..t_{k-1}) - k] z_t
///    - (n-k) sum_{u1>=2} z_u`.
pub fn wsf_reduction(k: u32, n: u32) -> Result<IdentityReport, DomainError> {
    wsf_reduction_with(k, n, Engine::Recursive)
}

pub fn wsf_reduction_with(k: u32, n: u32, engine: Engine) -> Result<IdentityReport, DomainError> {
    if k < 2 || n < k + 1 {
        return Err(DomainError(format!(
            "wsf_reduction needs k >= 2 and n >= k+1, got k={k} n={n}"
        )));
    }
    let lhs = shuffle::sum_lhs_with(k, n, true, engine.shuffle())?
        .sub(&stuffle::sum_lhs_with(k, n, true, engine.stuffle())?);
    let mut rhs = LinComb::zero();
    let kk = BigInt::from(k);
    for t in compositions_of(n, k, true).map_err(|e| DomainError(e.to_string()))? {
        let p = t.parts();
        let c = calc_c(&p[..k as usize - 1])? - calc_c(&p[1..k as usize - 1])? - &kk;
        rhs.add_term(t, c);
    }
    let c = -BigInt::from(n - k);
    for u in compositions_of(n, k - 1, true).map_err(|e| DomainError(e.to_string()))? {
        rhs.add_term(u, c.clone());
    }
    Ok(IdentityReport::new(
        IdentityId::WSFReduction,
        k,
        n,
        lhs.sub(&rhs),
    ))
}

/// Verify one identity at one grid cell, reporting the exact discrepancy.
/// For weight-indexed identities (`uses_k()` false) the `k` argument is
/// ignored and echoed back as 0.
pub fn verify(id: IdentityId, k: u32, n: u32) -> Result<IdentityReport, DomainError> {
    verify_with_engine(id, k, n, Engine::Recursive)
}

pub fn verify_with_engine(
    id: IdentityId,
    k: u32,
    n: u32,
    engine: Engine,
) -> Result<IdentityReport, DomainError> {
    let report = |k, n, d| IdentityReport::new(id, k, n, d);
    match id {
        IdentityId::Thm31 => {
            check_kn(k, n, false)?;
            let lhs = stuffle::sum_lhs_with(k, n, false, engine.stuffle())?;
            Ok(report(k, n, lhs.sub(&stuffle_sum_rhs_thm31(k, n)?)))
        }
        IdentityId::Thm32 => {
            check_kn(k, n, true)?;
            let lhs = stuffle::sum_lhs_with(k, n, true, engine.stuffle())?;
            Ok(report(k, n, lhs.sub(&stuffle_sum_rhs_thm32(k, n)?)))
        }
        IdentityId::Thm25 => {
            check_kn(k, n, false)?;
            let lhs = shuffle::sum_lhs_with(k, n, false, engine.shuffle())?;
            Ok(report(k, n, lhs.sub(&shuffle_sum_rhs_thm25(k, n)?)))
        }
        IdentityId::Thm26 => {
            check_kn(k, n, true)?;
            let lhs = shuffle::sum_lhs_with(k, n, true, engine.shuffle())?;
            Ok(report(k, n, lhs.sub(&shuffle_sum_rhs_thm26(k, n)?)))
        }
        IdentityId::Lem42a => {
            check_kn(k, n, false)?;
            let z1 = Composition::single(1);
            let mut lhs = LinComb::zero();
            for s in
                compositions_of(n - 1, k - 1, true).map_err(|e| DomainError(e.to_string()))?
            {
                lhs.add_assign(&engine.shuffle()(&z1, &s));
            }
            Ok(report(k, n, lhs.sub(&z1_shuffle_rhs_admissible(k, n)?)))
        }
        IdentityId::Lem42b => {
            check_kn(k, n, false)?;
            let z1 = Composition::single(1);
            let mut lhs = LinComb::zero();
            for s in
                compositions_of(n - 1, k - 1, false).map_err(|e| DomainError(e.to_string()))?
            {
                lhs.add_assign(&engine.shuffle()(&z1, &s));
            }
            Ok(report(k, n, lhs.sub(&z1_shuffle_rhs_all(k, n)?)))
        }
        IdentityId::RotaBaxter => Ok(report(0, n, rota_baxter_discrepancy(n, engine)?)),
        IdentityId::EulerDecomp => {
            if n < 2 {
                return Err(DomainError("Euler decomposition needs n >= 2".into()));
            }
            for r in 1..n {
                let s = n - r;
                let d = euler_decomposition(r, s)?.sub(&engine.shuffle()(
                    &Composition::single(r),
                    &Composition::single(s),
                ));
                if !d.is_zero() {
                    return Ok(report(0, n, d));
                }
            }
            Ok(report(0, n, LinComb::zero()))
        }
        IdentityId::EDSClosure => {
            if n < 2 {
                return Err(DomainError("EDS closure needs n >= 2".into()));
            }
            for k in 1..=n - 1 {
                for w in compositions_of(n, k, true).map_err(|e| DomainError(e.to_string()))? {
                    let bad = eds_element(1, &w)?.filter_terms(|t| !t.is_admissible());
                    if !bad.is_zero() {
                        return Ok(report(0, n, bad));
                    }
                }
            }
            Ok(report(0, n, LinComb::zero()))
        }
        IdentityId::WSFReduction => wsf_reduction_with(k, n, engine),
    }
}

fn check_kn(k: u32, n: u32, strict: bool) -> Result<(), DomainError> {
    if k < 2 {
        return Err(DomainError(format!("k must be >= 2, got {k}")));
    }
    let n_min = if strict { k + 1 } else { k };
    if n < n_min {
        return Err(DomainError(format!("n must be >= {n_min} for k={k}, got {n}")));
    }
    Ok(())
}

/// All four Rota–Baxter laws over every pair of compositions with
/// `weight(u) + weight(v) = n` (P laws restricted to nonempty words);
/// returns the first nonzero discrepancy in enumeration order.
fn rota_baxter_discrepancy(n: u32, engine: Engine) -> Result<LinComb<Composition>, DomainError> {
    if n < 1 {
        return Err(DomainError("Rota-Baxter check needs n >= 1".into()));
    }
    let prod = engine.shuffle();
    let sh = |a: &LinComb<Composition>, b: &LinComb<Composition>| -> LinComb<Composition> {
        let mut out = LinComb::zero();
        for (u, cu) in a.iter() {
            for (v, cv) in b.iter() {
                out.add_assign(&prod(u, v).scale(&(cu * cv)));
            }
        }
        out
    };
    let words_of = |weight: u32| -> Result<Vec<Composition>, DomainError> {
        let mut out = Vec::new();
        if weight == 0 {
            out.push(Composition::unit());
            return Ok(out);
        }
        for depth in 1..=weight {
            out.extend(compositions_of(weight, depth, false).map_err(|e| DomainError(e.to_string()))?);
        }
        Ok(out)
    };
    for wu in 0..=n {
        let us = words_of(wu)?;
        let vs = words_of(n - wu)?;
        for u in &us {
            for v in &vs {
                let lu = LinComb::monomial(u.clone());
                let lv = LinComb::monomial(v.clone());
                let pu = op_p(&lu).ok();
                let pv = op_p(&lv).ok();
                let qu = op_q(&lu);
                let qv = op_q(&lv);
                // P(u) ш~ P(v) = P(u ш~ P(v)) + P(P(u) ш~ v)
                if let (Some(pu), Some(pv)) = (&pu, &pv) {
                    let d = sh(pu, pv)
                        .sub(&op_p(&sh(&lu, pv)).expect("nonzero support"))
                        .sub(&op_p(&sh(pu, &lv)).expect("nonzero support"));
                    if !d.is_zero() {
                        return Ok(d);
                    }
                }
                // Q(u) ш~ Q(v) = Q(u ш~ Q(v)) + Q(Q(u) ш~ v)
                let d = sh(&qu, &qv)
                    .sub(&op_q(&sh(&lu, &qv)))
                    .sub(&op_q(&sh(&qu, &lv)));
                if !d.is_zero() {
                    return Ok(d);
                }
                // P(u) ш~ Q(v) = Q(P(u) ш~ v) + P(u ш~ Q(v))
                if let Some(pu) = &pu {
                    let d = sh(pu, &qv)
                        .sub(&op_q(&sh(pu, &lv)))
                        .sub(&op_p(&sh(&lu, &qv)).expect("nonzero support"));
                    if !d.is_zero() {
                        return Ok(d);
                    }
                }
                // Q(u) ш~ P(v) = Q(u ш~ P(v)) + P(Q(u) ш~ v)
                if let Some(pv) = &pv {
                    let d = sh(&qu, pv)
                        .sub(&op_q(&sh(&lu, pv)))
                        .sub(&op_p(&sh(&qu, &lv)).expect("nonzero support"));
                    if !d.is_zero() {
                        return Ok(d);
                    }
                }
            }
        }
    }
    Ok(LinComb::zero())
}
