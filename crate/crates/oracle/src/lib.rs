//! Brute-force twins of the closed forms in `tspread`.
//!
//! Nothing here uses ranks, decompositions, closed-form minima or the Betti
//! formula's shortcuts: sets are enumerated from all subsets of `[1, n]`,
//! closures are saturated by repeated full passes, shadows are found by
//! divisibility, and corners are read off the whole Betti table. Monomials
//! are bitmasks internally (bit `i-1` stands for `x_i`), which keeps the
//! representation disjoint from the library's.

pub mod realize;
pub mod sweep;

use std::collections::BTreeMap;

use tspread::TMonomial;

/// Largest supported number of variables.
pub const MAX_N: usize = 26;

/// A monomial as a bitmask, bit `i-1` standing for `x_i`.
pub type Mask = u32;

pub(crate) fn to_mask(u: &TMonomial) -> Mask {
    u.indices().iter().fold(0, |m, &i| m | 1 << (i - 1))
}

pub(crate) fn from_mask(m: Mask) -> TMonomial {
    TMonomial::new(bits(m).collect()).expect("a bitmask is a strictly increasing support")
}

/// Indices of the set bits, 1-based and increasing.
pub(crate) fn bits(m: Mask) -> impl Iterator<Item = usize> {
    (0..32).filter(move |b| m >> b & 1 == 1).map(|b| b + 1)
}

pub(crate) fn spread_ok(m: Mask, t: usize) -> bool {
    let mut prev: Option<usize> = None;
    for i in bits(m) {
        if prev.is_some_and(|p| i - p < t) {
            return false;
        }
        prev = Some(i);
    }
    true
}

pub(crate) fn max_of(m: Mask) -> usize {
    (32 - m.leading_zeros()) as usize
}

/// `a >_slex b`: the first differing index belongs to `a`.
pub(crate) fn slex_greater(a: Mask, b: Mask) -> bool {
    let x = a ^ b;
    x != 0 && a & x & x.wrapping_neg() != 0
}

pub(crate) fn sort_slex_descending(v: &mut [Mask]) {
    v.sort_by(|&a, &b| {
        if a == b {
            std::cmp::Ordering::Equal
        } else if slex_greater(a, b) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
}

/// Dense membership table over all subsets of `[1, n]`.
#[derive(Clone)]
pub(crate) struct MaskSet {
    words: Vec<u64>,
}

impl MaskSet {
    pub(crate) fn new(n: usize) -> Self {
        assert!(n <= MAX_N, "oracle supports n <= {MAX_N}");
        MaskSet { words: vec![0; (1usize << n).div_ceil(64)] }
    }

    pub(crate) fn insert(&mut self, m: Mask) -> bool {
        let (w, b) = (m as usize / 64, m as usize % 64);
        let fresh = self.words[w] >> b & 1 == 0;
        self.words[w] |= 1 << b;
        fresh
    }
}

pub(crate) fn all_spread(n: usize, d: usize, t: usize) -> Vec<Mask> {
    assert!(n <= MAX_N, "oracle supports n <= {MAX_N}");
    let mut out: Vec<Mask> = (0..1u32 << n)
        .filter(|m| m.count_ones() as usize == d && spread_ok(*m, t))
        .collect();
    sort_slex_descending(&mut out);
    out
}

/// `M_{n,d,t}`, slex-descending.
pub fn oracle_enumerate_m(n: usize, d: usize, t: usize) -> Vec<TMonomial> {
    all_spread(n, d, t).into_iter().map(from_mask).collect()
}

/// `A^t(k,l)` inside `n` variables, slex-descending.
pub fn oracle_enumerate_a(k: usize, l: usize, n: usize, t: usize) -> Vec<TMonomial> {
    let top = k + t * (l - 1) + 1;
    if top > n {
        return Vec::new();
    }
    all_spread(top, l, t).into_iter().filter(|&m| max_of(m) == top).map(from_mask).collect()
}

/// 1-based position of `u` in `A^t(k,l)`.
pub fn oracle_rank(u: &TMonomial, k: usize, l: usize, n: usize, t: usize) -> Option<u128> {
    oracle_enumerate_a(k, l, n, t).iter().position(|v| v == u).map(|p| p as u128 + 1)
}

/// The next element of `A^t(k,l)` below `u`.
pub fn oracle_successor(u: &TMonomial, k: usize, l: usize, n: usize, t: usize) -> Option<TMonomial> {
    let all = oracle_enumerate_a(k, l, n, t);
    let p = all.iter().position(|v| v == u)?;
    all.get(p + 1).cloned()
}

/// All `x_i (u/x_j)` with `i < j`, `i` outside `u`, that stay t-spread.
pub(crate) fn moves(m: Mask, t: usize) -> impl Iterator<Item = Mask> {
    bits(m).flat_map(move |j| {
        (1..j).filter_map(move |i| {
            if m >> (i - 1) & 1 == 1 {
                return None;
            }
            let v = (m & !(1 << (j - 1))) | 1 << (i - 1);
            spread_ok(v, t).then_some(v)
        })
    })
}

/// Closure under decreasing moves by repeated full passes.
pub(crate) fn closure_masks(gens: &[Mask], n: usize, t: usize) -> Vec<Mask> {
    let mut seen = MaskSet::new(n);
    let mut all: Vec<Mask> = Vec::new();
    for &g in gens {
        if seen.insert(g) {
            all.push(g);
        }
    }
    loop {
        let before = all.len();
        for p in 0..before {
            for v in moves(all[p], t).collect::<Vec<_>>() {
                if seen.insert(v) {
                    all.push(v);
                }
            }
        }
        if all.len() == before {
            break;
        }
    }
    sort_slex_descending(&mut all);
    all
}

/// `B_t{gens}`, slex-descending.
pub fn oracle_closure(gens: &[TMonomial], n: usize, t: usize) -> Vec<TMonomial> {
    let masks: Vec<Mask> = gens.iter().map(to_mask).collect();
    closure_masks(&masks, n, t).into_iter().map(from_mask).collect()
}

/// `{x_i w : w in L, x_i w t-spread}` for a set of one degree, unsorted.
pub(crate) fn shadow_masks(set: &[Mask], n: usize, t: usize) -> Vec<Mask> {
    let mut seen = MaskSet::new(n);
    let mut out = Vec::new();
    for &w in set {
        for i in 0..n {
            let v = w | 1 << i;
            if v != w && spread_ok(v, t) && seen.insert(v) {
                out.push(v);
            }
        }
    }
    out
}

pub fn oracle_shadow(set: &[TMonomial], n: usize, t: usize) -> Vec<TMonomial> {
    let masks: Vec<Mask> = set.iter().map(to_mask).collect();
    let mut out = shadow_masks(&masks, n, t);
    sort_slex_descending(&mut out);
    out.into_iter().map(from_mask).collect()
}

/// The Borel shadow of `set` at `(k2, l2)`: closure, iterated shadow and the
/// max filter, each by brute force.
pub fn oracle_bshad(set: &[TMonomial], k2: usize, l2: usize, n: usize, t: usize) -> Vec<TMonomial> {
    let masks: Vec<Mask> = set.iter().map(to_mask).collect();
    let mut current = closure_masks(&masks, n, t);
    let d = set.first().map_or(l2, TMonomial::degree);
    for _ in d..l2 {
        current = shadow_masks(&current, n, t);
    }
    let bound = k2 + t * (l2 - 1) + 1;
    current.retain(|&m| max_of(m) <= bound);
    sort_slex_descending(&mut current);
    current.into_iter().map(from_mask).collect()
}

pub fn oracle_min_bshad(set: &[TMonomial], k2: usize, l2: usize, n: usize, t: usize) -> Option<TMonomial> {
    oracle_bshad(set, k2, l2, n, t).pop()
}

/// Minimal generators of the ideal generated by the t-spread closures of
/// `borel_gens`: closure elements with no proper divisor among closure
/// elements.
pub fn oracle_minimal_generators(borel_gens: &[TMonomial], n: usize, t: usize) -> Vec<TMonomial> {
    let masks: Vec<Mask> = borel_gens.iter().map(to_mask).collect();
    let mut by_degree: BTreeMap<u32, Vec<Mask>> = BTreeMap::new();
    for m in masks {
        by_degree.entry(m.count_ones()).or_default().push(m);
    }
    let closed: Vec<Mask> = by_degree.values().flat_map(|g| closure_masks(g, n, t)).collect();
    let mut out: Vec<Mask> = closed
        .iter()
        .copied()
        .filter(|&u| !closed.iter().any(|&c| c != u && c & u == c))
        .collect();
    out.sort_by(|&a, &b| {
        a.count_ones().cmp(&b.count_ones()).then_with(|| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if slex_greater(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        })
    });
    out.into_iter().map(from_mask).collect()
}

fn pascal(rows: usize) -> Vec<Vec<u128>> {
    let mut tri: Vec<Vec<u128>> = vec![vec![1]];
    for r in 1..=rows {
        let prev = &tri[r - 1];
        let mut row = vec![1u128; r + 1];
        for c in 1..r {
            row[c] = prev[c - 1] + prev[c];
        }
        tri.push(row);
    }
    tri
}

/// Nonzero `beta_{k,k+l}` keyed by `(k, l)`, summing Pascal-triangle entries
/// over the given minimal generators.
pub fn oracle_betti_table(min_gens: &[TMonomial], t: usize) -> BTreeMap<(usize, usize), u128> {
    let top = min_gens.iter().map(TMonomial::max_index).max().unwrap_or(0);
    let tri = pascal(top);
    let mut table = BTreeMap::new();
    for u in min_gens {
        let l = u.degree();
        let row = &tri[u.max_index() - t * (l - 1) - 1];
        for (k, &v) in row.iter().enumerate() {
            *table.entry((k, l)).or_insert(0) += v;
        }
    }
    table.retain(|_, v| *v > 0);
    table
}

/// Corner test straight from the definition: `beta_{k,k+l} != 0` and every
/// entry weakly south-east of it vanishes.
pub fn oracle_is_extremal(table: &BTreeMap<(usize, usize), u128>, k: usize, l: usize) -> bool {
    table.contains_key(&(k, l))
        && table
            .iter()
            .all(|(&(i, j), &v)| v == 0 || (i, j) == (k, l) || i < k || j < l)
}

/// All corners of a Betti table with their values, `l` ascending.
pub fn oracle_corners(table: &BTreeMap<(usize, usize), u128>) -> Vec<((usize, usize), u128)> {
    let mut out: Vec<((usize, usize), u128)> = table
        .iter()
        .filter(|(&(k, l), _)| oracle_is_extremal(table, k, l))
        .map(|(&c, &v)| (c, v))
        .collect();
    out.sort_by_key(|&((_, l), _)| l);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[usize]) -> TMonomial {
        TMonomial::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_listings() {
        assert_eq!(oracle_enumerate_m(9, 2, 3).len(), 21);
        assert!(oracle_enumerate_m(4, 3, 2).is_empty());
        assert_eq!(oracle_enumerate_m(5, 2, 3), vec![m(&[1, 4]), m(&[1, 5]), m(&[2, 5])]);
    }

    #[test]
    fn rank_of_the_running_example() {
        assert_eq!(oracle_rank(&m(&[4, 9, 13, 16]), 6, 4, 16, 3), Some(73));
        assert_eq!(oracle_successor(&m(&[1, 4, 7, 16]), 6, 4, 16, 3), Some(m(&[1, 4, 8, 16])));
    }

    #[test]
    fn minimum_of_a_single_shadow() {
        assert_eq!(oracle_min_bshad(&[m(&[6, 10, 16])], 6, 4, 19, 4), Some(m(&[6, 10, 15, 19])));
        assert_eq!(oracle_min_bshad(&[m(&[9, 14, 19])], 6, 4, 19, 4), Some(m(&[7, 11, 15, 19])));
    }

    #[test]
    fn slex_on_masks() {
        assert!(slex_greater(to_mask(&m(&[1, 9])), to_mask(&m(&[2, 4]))));
        assert!(slex_greater(to_mask(&m(&[2, 4])), to_mask(&m(&[2, 5]))));
        assert!(!slex_greater(to_mask(&m(&[2, 5])), to_mask(&m(&[2, 5]))));
    }

    #[test]
    fn closure_of_a_top_element() {
        assert_eq!(oracle_closure(&[m(&[1, 4])], 10, 3), vec![m(&[1, 4])]);
        assert_eq!(oracle_closure(&[m(&[2, 4])], 6, 2), vec![m(&[1, 3]), m(&[1, 4]), m(&[2, 4])]);
    }

    #[test]
    fn worked_example_corners_by_definition() {
        let borel: Vec<TMonomial> = [
            &[1, 10][..],
            &[2, 10],
            &[3, 6, 9, 15],
            &[3, 6, 10, 13, 17],
            &[3, 6, 10, 14, 17],
            &[3, 6, 11, 14, 17],
            &[3, 7, 10, 13, 16, 19, 22],
            &[4, 7, 10, 13, 16, 19, 22],
        ]
        .iter()
        .map(|v| m(v))
        .collect();
        let gens = oracle_minimal_generators(&borel, 25, 3);
        assert_eq!(gens.len(), 23);
        let table = oracle_betti_table(&gens, 3);
        let cells = (0..=6).flat_map(|k| (2..=7).map(move |l| (k, l)));
        let corners: Vec<(usize, usize)> = cells.filter(|&(k, l)| oracle_is_extremal(&table, k, l)).collect();
        assert_eq!(corners.len(), 4);
        assert_eq!(
            oracle_corners(&table),
            vec![((6, 2), 2), ((5, 4), 1), ((4, 5), 3), ((3, 7), 2)]
        );
    }
}
