//! High-precision numerical evaluation of ζ(s1,...,sk) and numeric checks of
//! the sum formulas.
//!
//! Direct truncation of the defining nested series is hopeless for
//! compositions with trailing 1s (the tail decays like a log power over N),
//! so the evaluator uses the Hölder convolution at 1/2: the iterated-integral
//! word of ζ is split at every position, each split contributing a product of
//! two multiple polylogarithms Li(1/2) whose nested series gain a factor 1/2
//! per outer index. Values are carried in dyadic fixed point on big integers
//! with explicit truncation and rounding bounds; depth-1 ζ(n) goes through
//! exactly the same path as every other composition.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use thiserror::Error;

use crate::identities::main_theorem_weight;
use crate::words::{composition_to_word, compositions_of, word_to_composition, Composition};
use crate::DomainError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    /// The nested series diverges when s1 = 1 (or the composition is empty).
    #[error("composition {0} is not admissible; the series diverges")]
    NotAdmissible(String),
    /// The work budget ran out before the requested tolerance was met.
    #[error("tolerance {tol} unreachable within the work budget")]
    ToleranceUnreachable { tol: f64 },
    #[error(transparent)]
    Domain(#[from] DomainError),
}

/// Hard ceiling on series terms per polylogarithm evaluation.
const WORK_BUDGET: usize = 40_000;

/// Guard bits past the tolerance; 64 bits is a little over 19 decimal
/// guard digits.
const GUARD_BITS: u32 = 64;

// ---------------------------------------------------------------------------
// Dyadic fixed-point scalar: value = mant / 2^prec.

#[derive(Debug, Clone, PartialEq, Eq)]
struct Fx {
    mant: BigInt,
    prec: u32,
}

impl Fx {
    fn zero(prec: u32) -> Fx {
        Fx {
            mant: BigInt::zero(),
            prec,
        }
    }

    fn one(prec: u32) -> Fx {
        Fx {
            mant: BigInt::one() << prec,
            prec,
        }
    }

    /// `1 / n^c`, floor-rounded to the working precision.
    fn inv_pow(n: u64, c: u32, prec: u32) -> Fx {
        Fx {
            mant: (BigInt::one() << prec) / BigInt::from(n).pow(c),
            prec,
        }
    }

    fn add_assign(&mut self, other: &Fx) {
        debug_assert_eq!(self.prec, other.prec);
        self.mant += &other.mant;
    }

    fn sub(&self, other: &Fx) -> Fx {
        debug_assert_eq!(self.prec, other.prec);
        Fx {
            mant: &self.mant - &other.mant,
            prec: self.prec,
        }
    }

    fn mul(&self, other: &Fx) -> Fx {
        debug_assert_eq!(self.prec, other.prec);
        Fx {
            mant: (&self.mant * &other.mant) >> self.prec,
            prec: self.prec,
        }
    }

    fn mul_int(&self, w: &BigInt) -> Fx {
        Fx {
            mant: &self.mant * w,
            prec: self.prec,
        }
    }

    /// Multiply by 2^-k.
    fn shr(&self, k: u32) -> Fx {
        Fx {
            mant: &self.mant >> k,
            prec: self.prec,
        }
    }

    fn abs(&self) -> Fx {
        Fx {
            mant: self.mant.abs(),
            prec: self.prec,
        }
    }

    fn to_f64(&self) -> f64 {
        self.mant.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(self.prec as i32))
    }

    /// Decimal rendering with `digits` places after the point (truncated
    /// toward zero).
    fn to_decimal(&self, digits: u32) -> String {
        let neg = self.mant.is_negative();
        let scaled: BigInt = (self.mant.abs() * BigInt::from(10u32).pow(digits)) >> self.prec;
        let s = scaled.to_string();
        let d = digits as usize;
        let (int_part, frac_part) = if s.len() > d {
            (s[..s.len() - d].to_string(), s[s.len() - d..].to_string())
        } else {
            ("0".to_string(), format!("{s:0>d$}"))
        };
        format!("{}{int_part}.{frac_part}", if neg { "-" } else { "" })
    }
}

// ---------------------------------------------------------------------------

/// An arbitrary-precision value paired with an absolute-error bound covering
/// both series truncation and fixed-point rounding.
#[derive(Debug, Clone)]
pub struct NumericValue {
    value: Fx,
    err: f64,
}

impl NumericValue {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn err(&self) -> f64 {
        self.err
    }

    pub fn decimal(&self, digits: u32) -> String {
        self.value.to_decimal(digits)
    }
}

/// Outcome of one numeric identity check.
#[derive(Debug, Clone, Copy)]
pub struct NumericCheck {
    pub pass: bool,
    /// |LHS - RHS| as evaluated.
    pub residual: f64,
    /// Error budget the residual was compared against (propagated error
    /// bounds plus the requested tolerance).
    pub bound: f64,
}

static MZV_CACHE: LazyLock<Mutex<HashMap<(Composition, i32), NumericValue>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

fn tol_bucket(tol: f64) -> i32 {
    tol.log10().floor() as i32
}

fn prec_for(bucket: i32) -> u32 {
    // bits to represent 10^bucket, plus guard
    ((-bucket).max(1) as u32) * 4 + GUARD_BITS
}

/// Evaluate ζ(s1,...,sk) to within `tol`.
///
/// Tolerances are bucketed by decade so repeated queries share cache entries;
/// the effective tolerance is the decade at or below `tol`.
pub fn mzv(s: &Composition, tol: f64) -> Result<NumericValue, NumericError> {
    if !s.is_admissible() {
        return Err(NumericError::NotAdmissible(s.to_string()));
    }
    if !(tol > 0.0) {
        return Err(NumericError::Domain(DomainError(
            "tolerance must be positive".into(),
        )));
    }
    let bucket = tol_bucket(tol);
    let key = (s.clone(), bucket);
    if let Some(hit) = MZV_CACHE.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let eff_tol = 10f64.powi(bucket);
    let value = mzv_uncached(s, eff_tol, prec_for(bucket))?;
    MZV_CACHE.lock().unwrap().insert(key, value.clone());
    Ok(value)
}

fn mzv_uncached(s: &Composition, tol: f64, prec: u32) -> Result<NumericValue, NumericError> {
    let w = composition_to_word(s);
    let n = w.len();
    // Hölder split: left factor is the reversed, x0<->x1 dualized prefix.
    let mut splits: Vec<(Composition, Composition)> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let left_word = crate::words::BinaryWord::new(
            w.letters()[..j].iter().rev().map(|l| l.dual()).collect(),
        );
        let right_word = crate::words::BinaryWord::new(w.letters()[j..].to_vec());
        let left = word_to_composition(&left_word).expect("dual of reversed admissible prefix is in H1");
        let right = word_to_composition(&right_word).expect("suffix of H0 word is in H1");
        splits.push((left, right));
    }

    let mut li_target = tol / (16.0 * (n as f64 + 1.0));
    for _round in 0..4 {
        let mut total = Fx::zero(prec);
        let mut err = 0.0f64;
        for (left, right) in &splits {
            let (lv, le) = li_half(left.parts(), li_target, prec)?;
            let (rv, re) = li_half(right.parts(), li_target, prec)?;
            total.add_assign(&lv.mul(&rv));
            let (lm, rm) = (lv.to_f64().abs(), rv.to_f64().abs());
            err += lm * re + rm * le + le * re + 2f64.powi(-(prec as i32)) * 4.0;
        }
        if err <= tol {
            return Ok(NumericValue { value: total, err });
        }
        li_target *= 0.25 * tol / err;
    }
    Err(NumericError::ToleranceUnreachable { tol })
}

/// Multiple polylogarithm Li_{c1,...,cm}(1/2) =
/// sum_{n1 > ... > nm >= 1} 2^{-n1} / (n1^{c1} ... nm^{cm}),
/// truncated with a geometric tail bound. Returns (value, error bound).
fn li_half(c: &[u32], target: f64, prec: u32) -> Result<(Fx, f64), NumericError> {
    let m = c.len();
    if m == 0 {
        return Ok((Fx::one(prec), 0.0));
    }
    let d = m - 1; // number of inner summation levels
    let mut g: Vec<Fx> = vec![Fx::zero(prec); d];
    let mut sum = Fx::zero(prec);
    let min_n = (4 * m).max(12);
    for n in 1..=WORK_BUDGET {
        // term uses the inner sums at n-1, i.e. before this step's update
        let mut t = Fx::inv_pow(n as u64, c[0], prec);
        if d > 0 {
            t = t.mul(&g[0]);
        }
        sum.add_assign(&t.shr(n as u32));
        // advance G_i(n-1) -> G_i(n), outermost first so each level still
        // sees its inner neighbor at n-1
        for j in 0..d {
            let inv = Fx::inv_pow(n as u64, c[j + 1], prec);
            let upd = if j + 1 < d {
                inv.mul(&g[j + 1])
            } else {
                inv
            };
            g[j].add_assign(&upd);
        }
        if n >= min_n {
            let tail = tail_bound(n, m);
            if tail < target {
                let rounding = (n * (d + 2)) as f64 * 2f64.powi(-(prec as i32)) * 64.0;
                return Ok((sum, tail + rounding));
            }
        }
    }
    Err(NumericError::ToleranceUnreachable { tol: target })
}

/// Upper bound on sum_{n > N} 2^-n H_n^{m-1}: the terms are dominated by a
/// geometric with ratio rho = exp((m-1)/N)/2 once N >= 4m, so the tail is at
/// most the next majorant term over (1 - rho), padded by 2x.
fn tail_bound(n: usize, m: usize) -> f64 {
    let nf = n as f64;
    let rho = 0.5 * ((m as f64 - 1.0) / nf).exp();
    if rho >= 0.8 {
        return f64::INFINITY;
    }
    let next = 2f64.powi(-(n as i32 + 1)) * (1.0 + (nf + 1.0).ln()).powi(m as i32 - 1);
    2.0 * next / (1.0 - rho)
}

fn combined<'a, I>(terms: I, rhs_weight: u32, n: u32, tol: f64) -> Result<NumericCheck, NumericError>
where
    I: IntoIterator<Item = (&'a Composition, BigInt)>,
{
    let bucket = tol_bucket(tol);
    let prec = prec_for(bucket);
    let mut acc = Fx::zero(prec);
    let mut err = 0.0f64;
    for (s, w) in terms {
        let v = mzv(s, tol)?;
        acc.add_assign(&v.value.mul_int(&w));
        err += v.err * w.to_f64().unwrap_or(f64::NAN).abs();
    }
    let rhs = mzv(&Composition::single(n), tol)?;
    err += rhs.err * rhs_weight as f64;
    let residual = acc
        .sub(&rhs.value.mul_int(&BigInt::from(rhs_weight)))
        .abs()
        .to_f64();
    let bound = err + tol;
    Ok(NumericCheck {
        pass: residual <= bound,
        residual,
        bound,
    })
}

/// Classic sum formula: sum of ζ over admissible compositions of `n` into
/// `k` parts equals ζ(n).
pub fn check_sum_formula(k: u32, n: u32, tol: f64) -> Result<NumericCheck, NumericError> {
    if k < 1 || n < k + 1 {
        return Err(NumericError::Domain(DomainError(format!(
            "sum formula needs k >= 1 and n >= k+1, got k={k} n={n}"
        ))));
    }
    let comps = compositions_of(n, k, true).map_err(|e| DomainError(e.to_string()))?;
    combined(comps.iter().map(|s| (s, BigInt::one())), 1, n, tol)
}

/// Weighted Euler sum formula: sum_{i=2}^{n-1} 2^i ζ(i, n-i) = (n+1) ζ(n).
///
/// The depth-2 sum is empty below n = 3, so n = 2 is rejected rather than
/// silently asserting 0 = 3ζ(2).
pub fn check_weighted_euler(n: u32, tol: f64) -> Result<NumericCheck, NumericError> {
    if n < 3 {
        return Err(NumericError::Domain(DomainError(format!(
            "weighted Euler sum formula needs n >= 3, got {n}"
        ))));
    }
    let comps = compositions_of(n, 2, true).map_err(|e| DomainError(e.to_string()))?;
    combined(
        comps
            .iter()
            .map(|s| (s, BigInt::one() << s.parts()[0])),
        n + 1,
        n,
        tol,
    )
}

/// Weighted sum formula: sum of the 2-power weights times ζ over admissible
/// compositions of `n` into `k` parts equals n ζ(n).
pub fn check_weighted_sum_formula(k: u32, n: u32, tol: f64) -> Result<NumericCheck, NumericError> {
    if k < 2 || n < k + 1 {
        return Err(NumericError::Domain(DomainError(format!(
            "weighted sum formula needs k >= 2 and n >= k+1, got k={k} n={n}"
        ))));
    }
    let comps = compositions_of(n, k, true).map_err(|e| DomainError(e.to_string()))?;
    let weighted: Result<Vec<(&Composition, BigInt)>, NumericError> = comps
        .iter()
        .map(|s| Ok((s, main_theorem_weight(s)?)))
        .collect();
    combined(weighted?, n, n, tol)
}
