//! Exhaustive realizability for specs with one or two corners.
//!
//! An ideal generated in degrees `l1 < l2` with corners exactly
//! `(k1,l1), (k2,l2)` and values `(a1, a2)` is described by
//!
//! * the set `Z1 = G(I)_{l1} ∩ A^t(k1,l1)`, of size `a1`, which must be
//!   closed under the Borel moves that keep the last index;
//! * the remaining degree-`l1` generators, whose maxima are smaller; adding
//!   them only enlarges shadows, so they can be dropped;
//! * the degree-`l2` generators with max `k2 + t(l2-1) + 1`: any `a2`
//!   elements of `A^t(k2,l2)` outside `S = Shad^{l2-l1}(B_t{Z1})`. When the
//!   complement has at least `a2` elements, its `a2` slex-largest ones are
//!   closed modulo `S`, so such a choice exists iff `|A2 \ S| >= a2`.
//!
//! Since the shadow of a union is the union of the shadows, `S ∩ A2` is the
//! union of per-element contributions, one bit vector per `z` in `A1`.

use std::collections::BTreeMap;

use tspread::solver::CornerSpec;
use tspread::TMonomial;

use crate::{
    all_spread, closure_masks, from_mask, max_of, moves, oracle_betti_table, oracle_corners,
    oracle_minimal_generators, shadow_masks, Mask,
};

fn elements_of_a(k: usize, l: usize, n: usize, t: usize) -> Vec<Mask> {
    let top = k + t * (l - 1) + 1;
    all_spread(n, l, t).into_iter().filter(|&m| max_of(m) == top).collect()
}

/// Per size `s`, the largest `|A2 \ S|` over admissible `Z1` of size `s`
/// (index 0 unused), together with one maximizing `Z1`.
pub struct TwoCornerTable {
    pub best: Vec<Option<(usize, Vec<Mask>)>>,
    pub a2_len: usize,
}

/// Exhausts every admissible `Z1` for the corners `(k1,l1), (k2,l2)`.
pub fn two_corner_table(n: usize, t: usize, (k1, l1): (usize, usize), (k2, l2): (usize, usize)) -> TwoCornerTable {
    let a1 = elements_of_a(k1, l1, n, t);
    let a2 = elements_of_a(k2, l2, n, t);
    let index2: BTreeMap<Mask, usize> = a2.iter().enumerate().map(|(p, &m)| (m, p)).collect();
    let words = a2.len().div_ceil(64).max(1);

    // contribution of each z to S ∩ A2
    let contrib: Vec<Vec<u64>> = a1
        .iter()
        .map(|&z| {
            let mut level = closure_masks(&[z], n, t);
            for _ in l1..l2 {
                level = shadow_masks(&level, n, t);
            }
            let mut bv = vec![0u64; words];
            for m in level {
                if let Some(&p) = index2.get(&m) {
                    bv[p / 64] |= 1 << (p % 64);
                }
            }
            bv
        })
        .collect();

    // parents of z inside A1: moves that keep the last index
    let index1: BTreeMap<Mask, usize> = a1.iter().enumerate().map(|(p, &m)| (m, p)).collect();
    let parents: Vec<Vec<usize>> = a1
        .iter()
        .map(|&z| moves(z, t).filter_map(|v| index1.get(&v).copied()).collect())
        .collect();

    let mut best: Vec<Option<(usize, Vec<Mask>)>> = vec![None; a1.len() + 1];
    let mut chosen = vec![false; a1.len()];
    let mut acc = vec![0u64; words];
    search(0, &a1, &parents, &contrib, &mut chosen, &mut acc, a2.len(), &mut best);
    TwoCornerTable { best, a2_len: a2.len() }
}

#[allow(clippy::too_many_arguments)]
fn search(
    pos: usize,
    a1: &[Mask],
    parents: &[Vec<usize>],
    contrib: &[Vec<u64>],
    chosen: &mut Vec<bool>,
    acc: &mut Vec<u64>,
    a2_len: usize,
    best: &mut Vec<Option<(usize, Vec<Mask>)>>,
) {
    if pos == a1.len() {
        let size = chosen.iter().filter(|&&c| c).count();
        if size == 0 {
            return;
        }
        let covered: usize = acc.iter().map(|w| w.count_ones() as usize).sum();
        let room = a2_len - covered;
        if best[size].as_ref().is_none_or(|(r, _)| room > *r) {
            let z: Vec<Mask> = (0..a1.len()).filter(|&p| chosen[p]).map(|p| a1[p]).collect();
            best[size] = Some((room, z));
        }
        return;
    }
    // exclude
    search(pos + 1, a1, parents, contrib, chosen, acc, a2_len, best);
    // include, if every parent is in (parents come earlier in slex order)
    if parents[pos].iter().all(|&q| chosen[q]) {
        let saved = acc.clone();
        for (w, c) in acc.iter_mut().zip(&contrib[pos]) {
            *w |= c;
        }
        chosen[pos] = true;
        search(pos + 1, a1, parents, contrib, chosen, acc, a2_len, best);
        chosen[pos] = false;
        *acc = saved;
    }
}

/// Whether some t-spread strongly stable ideal generated in the spec's
/// degrees has exactly the spec's corners and values. Only one or two
/// corners are supported.
pub fn brute_force_realizable(spec: &CornerSpec) -> bool {
    let (n, t) = (spec.n, spec.t);
    match spec.corners.as_slice() {
        [c] => c.a >= 1 && c.a as usize <= elements_of_a(c.k, c.l, n, t).len(),
        [c1, c2] => {
            let table = two_corner_table(n, t, (c1.k, c1.l), (c2.k, c2.l));
            let a1 = c1.a as usize;
            c2.a >= 1 && a1 < table.best.len() && table.best[a1].as_ref().is_some_and(|(room, _)| c2.a as usize <= *room)
        }
        _ => panic!("brute force covers one or two corners"),
    }
}

/// The ideal behind a two-corner witness: `B_t{Z1}` plus the `a2` slex-largest
/// elements of `A2 \ S`, as Borel generators.
pub fn witness_generators(
    n: usize,
    t: usize,
    z1: &[Mask],
    (k2, l2): (usize, usize),
    a2: usize,
) -> Vec<TMonomial> {
    let l1 = z1.first().map_or(0, |m| m.count_ones() as usize);
    let mut level = closure_masks(z1, n, t);
    for _ in l1..l2 {
        level = shadow_masks(&level, n, t);
    }
    let covered: std::collections::BTreeSet<Mask> = level.into_iter().collect();
    let free = elements_of_a(k2, l2, n, t).into_iter().filter(|m| !covered.contains(m)).take(a2);
    z1.iter().copied().chain(free).map(from_mask).collect()
}

/// Corners and values of the ideal with the given Borel generators, read
/// off the full Betti table.
pub fn corners_by_definition(borel_gens: &[TMonomial], n: usize, t: usize) -> Vec<((usize, usize), u128)> {
    let gens = oracle_minimal_generators(borel_gens, n, t);
    oracle_corners(&oracle_betti_table(&gens, t))
}




/// Tallies of the micro-scale comparison between the solver and the
/// exhaustive search.
#[derive(Debug, Clone, Default)]
pub struct CrossCheckOutcome {
    pub specs: u64,
    pub feasible: u64,
    pub infeasible: u64,
    /// Feasible specs whose constructed ideal has exactly the spec's corners.
    pub round_trips: u64,
    /// Infeasible specs confirmed unrealizable by exhaustion.
    pub confirmed_infeasible: u64,
    /// Exhaustive witnesses whose corners were re-read from the Betti table.
    pub witnesses_checked: u64,
    pub failures: Vec<String>,
}

impl CrossCheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.round_trips == self.feasible && self.confirmed_infeasible == self.infeasible
    }
}

fn check_spec(spec: &CornerSpec, realizable: bool, out: &mut CrossCheckOutcome) {
    use tspread::betti::corner_sequence;
    use tspread::solver::{solve, Verdict};

    out.specs += 1;
    let report = match solve(spec) {
        Ok(r) => r,
        Err(e) => {
            out.failures.push(format!("{spec:?}: solver error {e}"));
            return;
        }
    };
    match report.verdict {
        Verdict::Feasible => {
            out.feasible += 1;
            let ideal = report.ideal.as_ref().expect("feasible reports carry an ideal");
            let corners = corner_sequence(ideal);
            let expected: Vec<(usize, usize)> = spec.corners.iter().map(|c| (c.k, c.l)).collect();
            let values: Vec<u128> = spec.corners.iter().map(|c| c.a).collect();
            if corners.corners == expected && corners.values == values {
                out.round_trips += 1;
            } else {
                out.failures.push(format!("{spec:?}: construction has corners {corners:?}"));
            }
            if !realizable {
                out.failures.push(format!("{spec:?}: solver feasible, exhaustion found nothing"));
            }
        }
        Verdict::Infeasible => {
            out.infeasible += 1;
            if realizable {
                out.failures.push(format!("{spec:?}: solver infeasible, exhaustion found a realization"));
            } else {
                out.confirmed_infeasible += 1;
            }
        }
        Verdict::Invalid => {}
    }
}

/// Every valid spec with one or two corners for `t` and `n` in `ns`, with
/// values ranging one past the size of each `A^t(k,l)`.
pub fn cross_validate(ns: std::ops::RangeInclusive<usize>, t: usize) -> CrossCheckOutcome {
    use tspread::solver::validate_spec;

    let mut out = CrossCheckOutcome::default();
    for n in ns {
        let corners: Vec<(usize, usize)> = (1..n)
            .flat_map(|l| (1..n).map(move |k| (k, l)))
            .filter(|&(k, l)| k + t * (l - 1) < n)
            .collect();
        for &(k, l) in &corners {
            let probe = CornerSpec::new(n, t, [(k, l, 1)]);
            if !validate_spec(&probe).is_empty() {
                continue;
            }
            let size = elements_of_a(k, l, n, t).len();
            for a in 1..=size as u128 + 1 {
                let spec = CornerSpec::new(n, t, [(k, l, a)]);
                check_spec(&spec, brute_force_realizable(&spec), &mut out);
            }
        }
        for &(k1, l1) in &corners {
            for &(k2, l2) in &corners {
                let probe = CornerSpec::new(n, t, [(k1, l1, 1), (k2, l2, 1)]);
                if !validate_spec(&probe).is_empty() {
                    continue;
                }
                let table = two_corner_table(n, t, (k1, l1), (k2, l2));
                for a1 in 1..table.best.len() + 1 {
                    let room = table.best.get(a1).and_then(|b| b.as_ref()).map(|(r, _)| *r);
                    if let Some((r, z1)) = table.best.get(a1).and_then(|b| b.clone()) {
                        if r > 0 {
                            let gens = witness_generators(n, t, &z1, (k2, l2), r);
                            let expected = vec![((k1, l1), a1 as u128), ((k2, l2), r as u128)];
                            if corners_by_definition(&gens, n, t) == expected {
                                out.witnesses_checked += 1;
                            } else {
                                out.failures.push(format!("witness for n={n} {:?} a1={a1} fails", (k1, l1, k2, l2)));
                            }
                        }
                    }
                    for a2 in 1..=table.a2_len as u128 + 1 {
                        let spec = CornerSpec::new(n, t, [(k1, l1, a1 as u128), (k2, l2, a2)]);
                        let realizable = room.is_some_and(|r| a2 as usize <= r);
                        check_spec(&spec, realizable, &mut out);
                    }
                }
            }
        }
    }
    out
}
