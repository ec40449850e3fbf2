//! The acceptance gate: one numbered criterion per block, one printed
//! pass/fail line each (visible with `--nocapture`), all run inside a single
//! test so the total-runtime budget can be enforced at the end.

use std::time::Instant;

use mzv::identities::{
    calc_c, eds_element, main_theorem_weight, verify, wsf_reduction, IdentityId,
};
use mzv::numerics::{
    check_sum_formula, check_weighted_euler, check_weighted_sum_formula, mzv,
};
use mzv::oracle::{stuffle_brute_force, transported_shuffle_brute_force};
use mzv::shuffle::{euler_decomposition, transported_shuffle_words};
use mzv::stuffle::stuffle;
use mzv::words::{compositions_of, Composition};

fn all_words_of_weight(w: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    for d in 1..=w {
        out.extend(compositions_of(w, d, false).unwrap());
    }
    out
}

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn criterion(&mut self, n: u32, label: &str, run: impl FnOnce() -> Result<(), String>) {
        let start = Instant::now();
        match run() {
            Ok(()) => println!(
                "criterion {n:2} PASS ({:.2}s) {label}",
                start.elapsed().as_secs_f64()
            ),
            Err(msg) => {
                println!("criterion {n:2} FAIL {label}: {msg}");
                self.failures.push(format!("criterion {n}: {msg}"));
            }
        }
    }
}

#[test]
fn acceptance() {
    let suite_start = Instant::now();
    let mut gate = Gate { failures: Vec::new() };

    gate.criterion(1, "stuffle sum formula, unrestricted, k<=5 n<=12", || {
        let start = Instant::now();
        for k in 2..=5u32 {
            for n in k..=12 {
                let r = verify(IdentityId::Thm31, k, n).map_err(|e| e.to_string())?;
                if !r.verified() {
                    return Err(format!("k={k} n={n}: {}", r.discrepancy));
                }
            }
        }
        let elapsed = start.elapsed().as_secs_f64();
        if elapsed >= 10.0 {
            return Err(format!("runtime budget exceeded: {elapsed:.1}s"));
        }
        Ok(())
    });

    gate.criterion(2, "stuffle sum formula, s1>=2, k<=5 n<=12", || {
        for k in 2..=5u32 {
            for n in k + 1..=12 {
                let r = verify(IdentityId::Thm32, k, n).map_err(|e| e.to_string())?;
                if !r.verified() {
                    return Err(format!("k={k} n={n}: {}", r.discrepancy));
                }
            }
        }
        Ok(())
    });

    gate.criterion(3, "shuffle sum formulas via binary-word route", || {
        for k in 2..=5u32 {
            for n in k..=12 {
                let r = verify(IdentityId::Thm25, k, n).map_err(|e| e.to_string())?;
                if !r.verified() {
                    return Err(format!("unrestricted k={k} n={n}: {}", r.discrepancy));
                }
                if n > k {
                    let r = verify(IdentityId::Thm26, k, n).map_err(|e| e.to_string())?;
                    if !r.verified() {
                        return Err(format!("restricted k={k} n={n}: {}", r.discrepancy));
                    }
                }
            }
        }
        Ok(())
    });

    gate.criterion(4, "z1-shuffle lemma, both variants, k<=5 n<=12", || {
        for k in 2..=5u32 {
            for n in k..=12 {
                for id in [IdentityId::Lem42a, IdentityId::Lem42b] {
                    let r = verify(id, k, n).map_err(|e| e.to_string())?;
                    if !r.verified() {
                        return Err(format!("{id} k={k} n={n}: {}", r.discrepancy));
                    }
                }
            }
        }
        // the admissible variant degenerates to 0 = 0 at n = k: the only
        // depth-(k-1) weight-(n-1) admissible sum is empty on both sides
        let r = verify(IdentityId::Lem42a, 3, 3).map_err(|e| e.to_string())?;
        if !r.verified() {
            return Err("n = k edge case not zero on both sides".into());
        }
        Ok(())
    });

    gate.criterion(5, "P/Q Rota-Baxter laws, exhaustive to weight 8", || {
        for n in 1..=8u32 {
            let r = verify(IdentityId::RotaBaxter, 0, n).map_err(|e| e.to_string())?;
            if !r.verified() {
                return Err(format!("weight {n}: {}", r.discrepancy));
            }
        }
        Ok(())
    });

    gate.criterion(6, "Euler decomposition vs brute force, r+s<=10", || {
        for n in 2..=10u32 {
            for r in 1..n {
                let s = n - r;
                let closed = euler_decomposition(r, s).map_err(|e| e.to_string())?;
                let brute = transported_shuffle_brute_force(
                    &Composition::single(r),
                    &Composition::single(s),
                );
                if closed != brute {
                    return Err(format!("r={r} s={s}: {}", closed.sub(&brute)));
                }
            }
        }
        Ok(())
    });

    gate.criterion(7, "weighted-sum regrouping + weight-form agreement", || {
        for k in 2..=5u32 {
            for n in k + 1..=12 {
                let r = wsf_reduction(k, n).map_err(|e| e.to_string())?;
                if !r.verified() {
                    return Err(format!("regrouping k={k} n={n}: {}", r.discrepancy));
                }
            }
        }
        for n in 3..=12u32 {
            for k in 2..n {
                for s in compositions_of(n, k, true).map_err(|e| e.to_string())? {
                    let w = main_theorem_weight(&s).map_err(|e| e.to_string())?;
                    let p = s.parts();
                    let diff = calc_c(&p[..k as usize - 1]).map_err(|e| e.to_string())?
                        - calc_c(&p[1..k as usize - 1]).map_err(|e| e.to_string())?;
                    if w != diff {
                        return Err(format!("{s}: {w} != {diff}"));
                    }
                }
            }
        }
        Ok(())
    });

    gate.criterion(8, "divergent-word cancellation, exhaustive to weight 8", || {
        for n in 2..=8u32 {
            for k in 1..n {
                for w in compositions_of(n, k, true).map_err(|e| e.to_string())? {
                    let bad = eds_element(1, &w)
                        .map_err(|e| e.to_string())?
                        .filter_terms(|t| !t.is_admissible());
                    if !bad.is_zero() {
                        return Err(format!("w={w}: {bad}"));
                    }
                }
            }
        }
        Ok(())
    });

    gate.criterion(9, "recursive products vs oracles, total weight <= 8", || {
        for wu in 1..=7u32 {
            for wv in 1..=8 - wu {
                for u in all_words_of_weight(wu) {
                    for v in all_words_of_weight(wv) {
                        if stuffle(&u, &v) != stuffle_brute_force(&u, &v) {
                            return Err(format!("stuffle {u} * {v}"));
                        }
                        if transported_shuffle_words(&u, &v)
                            != transported_shuffle_brute_force(&u, &v)
                        {
                            return Err(format!("shuffle {u} * {v}"));
                        }
                    }
                }
            }
        }
        Ok(())
    });

    gate.criterion(10, "numeric sum formulas at 1e-6", || {
        for n in 3..=8u32 {
            for k in 2..n {
                let c = check_weighted_sum_formula(k, n, 1e-6).map_err(|e| e.to_string())?;
                if !c.pass || c.residual >= 1e-6 {
                    return Err(format!("weighted k={k} n={n}: residual {:.2e}", c.residual));
                }
                let c = check_sum_formula(k, n, 1e-6).map_err(|e| e.to_string())?;
                if !c.pass || c.residual >= 1e-6 {
                    return Err(format!("classic k={k} n={n}: residual {:.2e}", c.residual));
                }
            }
        }
        for n in 3..=10u32 {
            let c = check_weighted_euler(n, 1e-6).map_err(|e| e.to_string())?;
            if !c.pass || c.residual >= 1e-6 {
                return Err(format!("depth-2 weighted n={n}: residual {:.2e}", c.residual));
            }
        }
        let a = mzv(&"z(2,1)".parse().unwrap(), 1e-11).map_err(|e| e.to_string())?;
        let b = mzv(&"z(3)".parse().unwrap(), 1e-11).map_err(|e| e.to_string())?;
        let d = (a.to_f64() - b.to_f64()).abs();
        if d >= 1e-10 {
            return Err(format!("|zeta(2,1) - zeta(3)| = {d:.2e}"));
        }
        Ok(())
    });

    gate.criterion(11, "evaluator sanity vs direct summation; refinement", || {
        // direct summation of 1/n^2 with an Euler-Maclaurin tail:
        // sum_{n>N} 1/n^2 = 1/N - 1/(2N^2) + 1/(6N^3) - 1/(30N^5) + O(N^-7)
        let n = 20_000u64;
        let mut direct: f64 = (1..=n).rev().map(|i| 1.0 / (i as f64 * i as f64)).sum();
        let nf = n as f64;
        direct += 1.0 / nf - 1.0 / (2.0 * nf * nf) + 1.0 / (6.0 * nf * nf * nf)
            - 1.0 / (30.0 * nf.powi(5));
        let z2 = mzv(&"z(2)".parse().unwrap(), 1e-12).map_err(|e| e.to_string())?;
        let d = (z2.to_f64() - direct).abs();
        if d >= 1e-10 {
            return Err(format!("zeta(2) off by {d:.2e}"));
        }
        // refining the tolerance moves the value by at most the coarser
        // reported error
        for s in ["z(2)", "z(3)", "z(2,1,1)"] {
            let c: Composition = s.parse().unwrap();
            let tols = [1e-6, 1e-8, 1e-10, 1e-12];
            for pair in tols.windows(2) {
                let coarse = mzv(&c, pair[0]).map_err(|e| e.to_string())?;
                let fine = mzv(&c, pair[1]).map_err(|e| e.to_string())?;
                let shift = (coarse.to_f64() - fine.to_f64()).abs();
                if shift > coarse.err() + fine.err() {
                    return Err(format!(
                        "{c} at {:.0e}->{:.0e}: shift {shift:.2e} > err {:.2e}",
                        pair[0],
                        pair[1],
                        coarse.err()
                    ));
                }
            }
        }
        Ok(())
    });

    let total = suite_start.elapsed().as_secs_f64();
    gate.criterion(12, "total runtime under 5 minutes", || {
        if total < 300.0 {
            Ok(())
        } else {
            Err(format!("criteria 1-11 took {total:.0}s"))
        }
    });

    assert!(gate.failures.is_empty(), "{:#?}", gate.failures);
}
