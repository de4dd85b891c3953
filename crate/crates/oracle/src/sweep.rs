//! Cartesian sweep comparing every closed form of `tspread` with its
//! brute-force twin.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use tspread::betti::{betti_table, is_extremal};
use tspread::borel::{borel_closure_degree, min_bshad_set, min_bshad_single};
use tspread::enumeration::{card_a, card_m, enumerate_a, enumerate_m, rank_in_a, successor_in_a};
use tspread::{Ambient, TIdeal, TMonomial, TMonomialSet};

use crate::{
    all_spread, closure_masks, from_mask, max_of, oracle_betti_table, oracle_is_extremal, oracle_minimal_generators,
    shadow_masks, Mask,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Quick,
    Full,
}

impl Suite {
    pub fn bounds(self) -> SweepBounds {
        match self {
            Suite::Quick => SweepBounds { max_n: 11, max_t: 4, max_degree: 6, ideals_per_ambient: 30 },
            Suite::Full => SweepBounds { max_n: 14, max_t: 4, max_degree: 7, ideals_per_ambient: 60 },
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "quick" => Ok(Suite::Quick),
            "full" => Ok(Suite::Full),
            other => Err(format!("unknown suite {other:?}, expected quick or full")),
        }
    }
}

/// Sweep over every `n <= max_n`, `1 <= t <= max_t` and degree `<= max_degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBounds {
    pub max_n: usize,
    pub max_t: usize,
    pub max_degree: usize,
    /// Ideals built from Borel generators for the corner comparison.
    pub ideals_per_ambient: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckStats {
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, Default)]
pub struct SweepOutcome {
    pub checks: BTreeMap<&'static str, CheckStats>,
    /// The first few mismatches, for diagnosis.
    pub mismatches: Vec<String>,
    pub elapsed: Duration,
}

const MISMATCH_LOG: usize = 25;

impl SweepOutcome {
    fn record(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let entry = self.checks.entry(name).or_default();
        if ok {
            entry.passed += 1;
        } else {
            entry.failed += 1;
            if self.mismatches.len() < MISMATCH_LOG {
                self.mismatches.push(format!("{name}: {}", detail()));
            }
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.values().all(|c| c.failed == 0)
    }

    pub fn total(&self) -> CheckStats {
        let mut total = CheckStats::default();
        for c in self.checks.values() {
            total.passed += c.passed;
            total.failed += c.failed;
        }
        total
    }
}

impl fmt::Display for SweepOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.keys().map(|k| k.len()).max().unwrap_or(0);
        for (name, c) in &self.checks {
            let status = if c.failed == 0 { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {name:<width$}  {} passed, {} failed", c.passed, c.failed)?;
        }
        let total = self.total();
        writeln!(
            f,
            "total: {} passed, {} failed in {:.1}s",
            total.passed,
            total.failed,
            self.elapsed.as_secs_f64()
        )?;
        for m in &self.mismatches {
            writeln!(f, "mismatch: {m}")?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite) -> SweepOutcome {
    run_sweep(&suite.bounds())
}

pub fn run_sweep(bounds: &SweepBounds) -> SweepOutcome {
    let start = Instant::now();
    let mut out = SweepOutcome::default();
    for t in 1..=bounds.max_t {
        for n in 1..=bounds.max_n {
            sweep_ambient(n, t, bounds, &mut out);
        }
    }
    out.elapsed = start.elapsed();
    out
}

fn fmt_list(v: &[TMonomial]) -> String {
    let parts: Vec<String> = v.iter().map(|u| format!("[{u}]")).collect();
    parts.join(" ")
}

#[allow(clippy::needless_range_loop)]
fn sweep_ambient(n: usize, t: usize, bounds: &SweepBounds, out: &mut SweepOutcome) {
    let amb = Ambient::new(n, t).expect("n, t >= 1");
    let top_degree = bounds.max_degree;

    // M_{n,d,t}
    let mut by_degree: Vec<Vec<Mask>> = vec![Vec::new(); top_degree + 1];
    for d in 1..=top_degree {
        let brute = all_spread(n, d, t);
        let count = card_m(n, d, t).ok();
        out.record("card_M", count == Some(brute.len() as u128), || {
            format!("n={n} d={d} t={t}: {count:?} vs {}", brute.len())
        });
        let fast: Vec<TMonomial> = enumerate_m(n, d, t).collect();
        let expected: Vec<TMonomial> = brute.iter().map(|&m| from_mask(m)).collect();
        out.record("enumerate_M", fast == expected, || format!("n={n} d={d} t={t}"));
        by_degree[d] = brute;
    }

    // A^t(k,l), ranks, successors, minima of Borel shadows
    for l1 in 1..=top_degree {
        for k1 in 0..n {
            let top = k1 + t * (l1 - 1) + 1;
            if top > n {
                break;
            }
            let brute: Vec<Mask> = by_degree[l1].iter().copied().filter(|&m| max_of(m) == top).collect();
            let expected: Vec<TMonomial> = brute.iter().map(|&m| from_mask(m)).collect();
            let count = card_a(k1, l1).ok();
            out.record("card_A", count == Some(expected.len() as u128), || {
                format!("k={k1} l={l1} t={t}: {count:?} vs {}", expected.len())
            });
            let fast: Vec<TMonomial> = enumerate_a(k1, l1, &amb).map(|it| it.collect()).unwrap_or_default();
            out.record("enumerate_A", fast == expected, || format!("k={k1} l={l1} n={n} t={t}"));

            for (p, u) in expected.iter().enumerate() {
                let r = rank_in_a(u, k1, l1, &amb).ok();
                out.record("rank_in_A", r == Some(p as u128 + 1), || {
                    format!("[{u}] in A^{t}({k1},{l1}): {r:?} vs {}", p + 1)
                });
                let s = successor_in_a(u, k1, l1, &amb).ok().flatten();
                out.record("successor_in_A", s.as_ref() == expected.get(p + 1), || {
                    format!("[{u}] in A^{t}({k1},{l1}), n={n}")
                });
            }
            check_min_bshad(n, t, k1, l1, &brute, &amb, top_degree, out);
        }
    }

    // closures of single generators and of consecutive pairs
    for d in 1..=top_degree {
        let all = &by_degree[d];
        for (p, &u) in all.iter().enumerate() {
            let mut gens = vec![u];
            if p % 3 == 0 {
                if let Some(&next) = all.get(p + 5) {
                    gens.push(next);
                }
            }
            let oracle: Vec<TMonomial> = closure_masks(&gens, n, t).into_iter().map(from_mask).collect();
            let set = TMonomialSet::new(amb, d, gens.iter().map(|&m| from_mask(m))).expect("t-spread input");
            let fast = borel_closure_degree(&set).to_vec();
            out.record("borel_closure_degree", fast == oracle, || {
                let g: Vec<TMonomial> = gens.iter().map(|&m| from_mask(m)).collect();
                format!("n={n} t={t} gens {}", fmt_list(&g))
            });
        }
    }

    check_corners(n, t, &by_degree, bounds, &amb, out);
}

/// The Borel shadow tower of a set of one degree, level by level, each
/// level sorted slex-descending.
fn tower(set: &[Mask], n: usize, t: usize, top_degree: usize) -> Vec<Vec<Mask>> {
    let d = set.first().map_or(0, |m| m.count_ones() as usize);
    let mut levels = Vec::new();
    let mut current = closure_masks(set, n, t);
    for _ in d..top_degree {
        current = shadow_masks(&current, n, t);
        let mut sorted = current.clone();
        crate::sort_slex_descending(&mut sorted);
        levels.push(sorted);
    }
    levels
}

/// Slex-smallest element of a slex-descending list with max at most `bound`.
fn last_with_max_at_most(level: &[Mask], bound: usize) -> Option<Mask> {
    level.iter().rev().copied().find(|&m| max_of(m) <= bound)
}

#[allow(clippy::too_many_arguments)]
fn check_min_bshad(
    n: usize,
    t: usize,
    k1: usize,
    l1: usize,
    a1: &[Mask],
    amb: &Ambient,
    top_degree: usize,
    out: &mut SweepOutcome,
) {
    if l1 >= top_degree || k1 == 0 {
        return;
    }
    let targets: Vec<(usize, usize)> = (l1 + 1..=top_degree)
        .flat_map(|l2| (0..k1).map(move |k2| (k2, l2)))
        .filter(|&(k2, l2)| k2 + t * (l2 - 1) < n)
        .collect();
    if targets.is_empty() {
        return;
    }
    let compare = |levels: &[Vec<Mask>], fast: &dyn Fn(usize, usize) -> Option<TMonomial>| {
        targets
            .iter()
            .map(|&(k2, l2)| {
                let oracle = last_with_max_at_most(&levels[l2 - l1 - 1], k2 + t * (l2 - 1) + 1).map(from_mask);
                (k2, l2, fast(k2, l2), oracle)
            })
            .collect::<Vec<_>>()
    };

    for &u in a1 {
        let levels = tower(&[u], n, t, top_degree);
        let mono = from_mask(u);
        for (k2, l2, fast, oracle) in compare(&levels, &|k2, l2| min_bshad_single(&mono, k2, l2, amb).ok()) {
            out.record("min_bshad_single", fast == oracle, || {
                format!("[{mono}] t={t} n={n} to ({k2},{l2}): {fast:?} vs {oracle:?}")
            });
        }
    }

    // a few subsets: top runs, the bottom pair and a strided sample
    let mut subsets: Vec<Vec<Mask>> = [2usize, 3, 5]
        .iter()
        .filter(|&&s| s <= a1.len())
        .map(|&s| a1[..s].to_vec())
        .collect();
    if a1.len() >= 2 {
        subsets.push(a1[a1.len() - 2..].to_vec());
    }
    if a1.len() >= 7 {
        subsets.push(a1.iter().copied().step_by(3).collect());
    }
    for subset in subsets {
        let levels = tower(&subset, n, t, top_degree);
        let set = TMonomialSet::new(*amb, l1, subset.iter().map(|&m| from_mask(m))).expect("t-spread input");
        for (k2, l2, fast, oracle) in compare(&levels, &|k2, l2| min_bshad_set(&set, k2, l2).ok()) {
            out.record("min_bshad_set", fast == oracle, || {
                format!("{} t={t} n={n} to ({k2},{l2}): {fast:?} vs {oracle:?}", fmt_list(&set.to_vec()))
            });
        }
    }
}

/// Deterministic generator choices: ideal `i` takes `1 + i % 4` monomials,
/// each from a degree and position stepped by fixed strides.
fn borel_generator_choice(i: usize, by_degree: &[Vec<Mask>]) -> Vec<Mask> {
    let degrees: Vec<usize> = (1..by_degree.len()).filter(|&d| !by_degree[d].is_empty()).collect();
    if degrees.is_empty() {
        return Vec::new();
    }
    let count = 1 + i % 4;
    (0..count)
        .map(|j| {
            let d = degrees[(i * 5 + j * 3) % degrees.len()];
            let pool = &by_degree[d];
            pool[(i * 7919 + j * 104_729) % pool.len()]
        })
        .collect()
}

fn check_corners(
    n: usize,
    t: usize,
    by_degree: &[Vec<Mask>],
    bounds: &SweepBounds,
    amb: &Ambient,
    out: &mut SweepOutcome,
) {
    for i in 0..bounds.ideals_per_ambient {
        let gens = borel_generator_choice(i, by_degree);
        if gens.is_empty() {
            return;
        }
        let monos: Vec<TMonomial> = gens.iter().map(|&m| from_mask(m)).collect();
        let Ok(ideal) = TIdeal::from_borel_generators(*amb, monos.iter().cloned()) else {
            out.record("minimal_generators", false, || format!("n={n} t={t}: construction failed"));
            continue;
        };
        let oracle_gens = oracle_minimal_generators(&monos, n, t);
        let fast_gens: Vec<TMonomial> = ideal.all_generators().cloned().collect();
        out.record("minimal_generators", fast_gens == oracle_gens, || {
            format!("n={n} t={t} borel gens {}", fmt_list(&monos))
        });

        let oracle_table = oracle_betti_table(&oracle_gens, t);
        let fast_table = betti_table(&ideal).map(|tb| tb.entries().clone()).ok();
        out.record("betti_table", fast_table.as_ref() == Some(&oracle_table), || {
            format!("n={n} t={t} borel gens {}", fmt_list(&monos))
        });

        for l in 1..=bounds.max_degree {
            for k in 0..n {
                let fast = is_extremal(&ideal, k, l);
                let oracle = oracle_is_extremal(&oracle_table, k, l);
                out.record("is_extremal", fast == oracle, || {
                    format!("n={n} t={t} ({k},{l}) borel gens {}: {fast} vs {oracle}", fmt_list(&monos))
                });
            }
        }
    }
}
