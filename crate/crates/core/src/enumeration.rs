//! The sets `M_{n,d,t}` and `A^t(k,l)` in slex order, their successors,
//! segments and ranks.
//!
//! `A^t(k,l)` is the set of t-spread monomials of degree `l` whose maximal
//! index is exactly `k + t(l-1) + 1`. Its cardinality `binom(k+l-1, l-1)` does
//! not depend on `t` or `n`, and splitting it by the minimal index gives the
//! binomial decomposition that drives [`rank_terms`].

use crate::binom::{binomial, binomial_i, checked_sum};
use crate::monomial::{Ambient, TMonomial};
use crate::{Error, Result};

/// `|M_{n,d,t}| = binom(n - (d-1)(t-1), d)`.
pub fn card_m(n: usize, d: usize, t: usize) -> Result<u128> {
    if d == 0 {
        return Ok(1);
    }
    let top = n as i128 - (d as i128 - 1) * (t as i128 - 1);
    binomial_i(top, d as i128)
}

/// `|A^t(k,l)| = binom(k+l-1, l-1)`.
pub fn card_a(k: usize, l: usize) -> Result<u128> {
    if l == 0 {
        return Err(Error::DegreeTooSmall { min: 1, found: 0 });
    }
    binomial((k + l - 1) as u128, (l - 1) as u128)
}

/// Streams t-spread index sequences in slex-descending order by lexicographic
/// successor, optionally appending a fixed last index.
#[derive(Debug, Clone)]
pub struct SpreadIter {
    n: usize,
    t: usize,
    current: Option<Vec<usize>>,
    tail: Option<usize>,
}

impl SpreadIter {
    fn new(n: usize, d: usize, t: usize, tail: Option<usize>) -> Self {
        let first: Vec<usize> = (0..d).map(|j| 1 + j * t).collect();
        let fits = first.last().is_none_or(|&l| l <= n);
        SpreadIter { n, t, current: fits.then_some(first), tail }
    }

    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else { return };
        let d = cur.len();
        let pivot = (0..d).rev().find(|&j| cur[j] + 1 + self.t * (d - 1 - j) <= self.n);
        match pivot {
            Some(j) => {
                cur[j] += 1;
                for l in j + 1..d {
                    cur[l] = cur[l - 1] + self.t;
                }
            }
            None => self.current = None,
        }
    }
}

impl Iterator for SpreadIter {
    type Item = TMonomial;

    fn next(&mut self) -> Option<TMonomial> {
        let mut out = self.current.clone()?;
        self.advance();
        out.extend(self.tail);
        Some(TMonomial::from_sorted(out))
    }
}

/// All of `M_{n,d,t}`, slex-descending.
pub fn enumerate_m(n: usize, d: usize, t: usize) -> SpreadIter {
    SpreadIter::new(n, d, t, None)
}

/// All of `A^t(k,l)`, slex-descending.
pub fn enumerate_a(k: usize, l: usize, amb: &Ambient) -> Result<SpreadIter> {
    let max = amb.check_corner(k, l)?;
    let t = amb.t();
    if l == 1 {
        return Ok(SpreadIter::new(0, 0, t, Some(max)));
    }
    Ok(SpreadIter::new(max - t, l - 1, t, Some(max)))
}

/// `max A^t(k,l) = x_1 x_{1+t} ... x_{1+t(l-2)} x_{k+t(l-1)+1}`.
pub fn max_a(k: usize, l: usize, amb: &Ambient) -> Result<TMonomial> {
    let max = amb.check_corner(k, l)?;
    let mut v: Vec<usize> = (0..l - 1).map(|j| 1 + j * amb.t()).collect();
    v.push(max);
    Ok(TMonomial::from_sorted(v))
}

/// `min A^t(k,l) = x_{k+1} x_{k+t+1} ... x_{k+t(l-1)+1}`.
pub fn min_a(k: usize, l: usize, amb: &Ambient) -> Result<TMonomial> {
    amb.check_corner(k, l)?;
    Ok(TMonomial::from_sorted((0..l).map(|j| k + 1 + j * amb.t()).collect()))
}

/// Fails unless `u` belongs to `A^t(k,l)`.
pub fn check_in_a(u: &TMonomial, k: usize, l: usize, amb: &Ambient) -> Result<()> {
    let max = amb.check_corner(k, l)?;
    let member = u.degree() == l && u.max_index() == max && u.has_spread(amb.t());
    if !member {
        return Err(Error::NotInA { monomial: u.indices().to_vec(), k, l, t: amb.t() });
    }
    Ok(())
}

/// The slex-greatest element of `A^t(k,l)` strictly below `u`, or `None` when
/// `u` has no gap (it is then the minimum).
pub fn successor_in_a(u: &TMonomial, k: usize, l: usize, amb: &Ambient) -> Result<Option<TMonomial>> {
    check_in_a(u, k, l, amb)?;
    let gaps = u.gap_profile(amb.t())?;
    let Some(p) = gaps.last_position() else {
        return Ok(None);
    };
    let idx = u.indices();
    let t = amb.t();
    let bumped = idx[p - 1] + 1;
    let mut v: Vec<usize> = idx[..p - 1].to_vec();
    v.extend((0..l - p).map(|q| bumped + q * t));
    v.push(idx[l - 1]);
    Ok(Some(TMonomial::from_sorted(v)))
}

/// One binomial coefficient `binom(top, bottom)` contributing to a rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinomialTerm {
    pub top: u128,
    pub bottom: u128,
}

impl BinomialTerm {
    pub fn value(&self) -> Result<u128> {
        binomial(self.top, self.bottom)
    }
}

/// The binomial coefficients whose sum is `|[max A^t(k,l), u]|`.
///
/// The descent walks the nested decompositions
/// `binom(a, b) = sum_j binom(a - j, b - 1)`: at the top level the first
/// `min(u) - 1` terms count the monomials with a smaller minimal index, and
/// at every gap of `u / x_{max(u)}` of width `w` the first `w` terms of the
/// current decomposition count the monomials that agree with `u` so far and
/// then jump below it. The final `binom(0, 0)` counts `u` itself. The number
/// of terms is `min(u) + sum of gap widths of u / x_{max(u)}`.
pub fn rank_terms(u: &TMonomial, k: usize, l: usize, amb: &Ambient) -> Result<Vec<BinomialTerm>> {
    check_in_a(u, k, l, amb)?;
    let mut terms = Vec::new();
    if l >= 2 {
        let head = u.without_last();
        let gaps = head.gap_profile(amb.t())?;
        let mut top = (k + l - 1) as u128;
        let mut bottom = (l - 1) as u128;
        for level in 0..l - 1 {
            let width = if level == 0 {
                u.min_index() - 1
            } else {
                gaps.width(level).unwrap_or(0)
            } as u128;
            terms.extend((1..=width).map(|j| BinomialTerm { top: top - j, bottom: bottom - 1 }));
            top -= width + 1;
            bottom -= 1;
        }
    }
    terms.push(BinomialTerm { top: 0, bottom: 0 });
    Ok(terms)
}

/// `|{w in A^t(k,l) : w >=_slex u}|`, the 1-based slex position of `u`.
pub fn rank_in_a(u: &TMonomial, k: usize, l: usize, amb: &Ambient) -> Result<u128> {
    let terms = rank_terms(u, k, l, amb)?;
    checked_sum(terms.iter().map(|b| b.value()).collect::<Result<Vec<_>>>()?)
}

/// Inverse of [`rank_in_a`], walking the same decomposition greedily.
pub(crate) fn unrank_in_a(rank: u128, k: usize, l: usize, amb: &Ambient) -> Result<TMonomial> {
    let max = amb.check_corner(k, l)?;
    let available = card_a(k, l)?;
    if rank == 0 || rank > available {
        return Err(Error::SegmentSize { requested: rank, available });
    }
    let t = amb.t();
    let mut remaining = rank;
    let mut top = (k + l - 1) as u128;
    let mut bottom = (l - 1) as u128;
    let mut out: Vec<usize> = Vec::with_capacity(l);
    for level in 0..l.saturating_sub(1) {
        let mut j: u128 = 1;
        loop {
            let block = binomial(top - j, bottom - 1)?;
            if remaining <= block {
                break;
            }
            remaining -= block;
            j += 1;
        }
        let next = if level == 0 { j as usize } else { out[level - 1] + t + j as usize - 1 };
        out.push(next);
        top -= j;
        bottom -= 1;
    }
    out.push(max);
    Ok(TMonomial::from_sorted(out))
}

/// `b_i = |{u in A^t(k,l) : min(u) = i}| = binom(k+l-1-i, l-2)` for `i = 1..=k+1`.
pub fn decompose_by_min(k: usize, l: usize) -> Result<Vec<(usize, u128)>> {
    if l < 2 {
        return Err(Error::DegreeTooSmall { min: 2, found: l });
    }
    (1..=k + 1)
        .map(|i| Ok((i, binomial((k + l - 1 - i) as u128, (l - 2) as u128)?)))
        .collect()
}

/// A slex segment `[first, last]` of `A^t(k,l)`, `first >=_slex last`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlexSegment {
    amb: Ambient,
    k: usize,
    l: usize,
    first: TMonomial,
    last: TMonomial,
}

impl SlexSegment {
    pub fn new(k: usize, l: usize, amb: Ambient, first: TMonomial, last: TMonomial) -> Result<Self> {
        check_in_a(&first, k, l, &amb)?;
        check_in_a(&last, k, l, &amb)?;
        if first.slex_cmp(&last)?.is_lt() {
            return Err(Error::SegmentOrder {
                first: first.indices().to_vec(),
                last: last.indices().to_vec(),
            });
        }
        Ok(SlexSegment { amb, k, l, first, last })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn ambient(&self) -> &Ambient {
        &self.amb
    }

    /// The slex-greatest element.
    pub fn first(&self) -> &TMonomial {
        &self.first
    }

    /// The slex-smallest element.
    pub fn last(&self) -> &TMonomial {
        &self.last
    }

    /// `|[first, last]|`.
    pub fn card(&self) -> Result<u128> {
        let hi = rank_in_a(&self.first, self.k, self.l, &self.amb)?;
        let lo = rank_in_a(&self.last, self.k, self.l, &self.amb)?;
        Ok(lo - hi + 1)
    }

    /// `|[first, last)|`.
    pub fn left_card(&self) -> Result<u128> {
        Ok(self.card()? - 1)
    }

    /// Elements from `first` down to `last`.
    pub fn elements(&self) -> Vec<TMonomial> {
        let mut out = vec![self.first.clone()];
        while out.last() != Some(&self.last) {
            let next = successor_in_a(out.last().unwrap(), self.k, self.l, &self.amb)
                .expect("segment endpoints were validated")
                .expect("last is reached before the minimum");
            out.push(next);
        }
        out
    }
}

/// The segment of the `a` slex-smallest elements of `A^t(k,l)`; it ends at
/// `min A^t(k,l)`.
pub fn take_smallest_segment(k: usize, l: usize, amb: &Ambient, a: u128) -> Result<SlexSegment> {
    segment_ending_at(&min_a(k, l, amb)?, a, k, l, amb)
}

/// The segment of `a` elements of `A^t(k,l)` whose slex-smallest element is
/// `last`. It exists iff `a <= rank_in_a(last)`.
pub fn segment_ending_at(last: &TMonomial, a: u128, k: usize, l: usize, amb: &Ambient) -> Result<SlexSegment> {
    let room = rank_in_a(last, k, l, amb)?;
    if a == 0 || a > room {
        return Err(Error::SegmentSize { requested: a, available: room });
    }
    let first = unrank_in_a(room - a + 1, k, l, amb)?;
    SlexSegment::new(k, l, *amb, first, last.clone())
}
