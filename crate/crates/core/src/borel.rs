//! t-shadows, Borel closures and Borel t-shadows.

use std::collections::BTreeSet;

use crate::monomial::{Ambient, TMonomial};
use crate::{Error, Result};

/// A set of t-spread monomials of one degree, kept slex-descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TMonomialSet {
    amb: Ambient,
    degree: usize,
    elements: BTreeSet<TMonomial>,
}

impl TMonomialSet {
    pub fn new<I>(amb: Ambient, degree: usize, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = TMonomial>,
    {
        let mut set = BTreeSet::new();
        for u in elements {
            if u.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: u.degree() });
            }
            u.check_tspread(&amb)?;
            set.insert(u);
        }
        Ok(TMonomialSet { amb, degree, elements: set })
    }

    pub fn empty(amb: Ambient, degree: usize) -> Self {
        TMonomialSet { amb, degree, elements: BTreeSet::new() }
    }

    pub(crate) fn from_set(amb: Ambient, degree: usize, elements: BTreeSet<TMonomial>) -> Self {
        TMonomialSet { amb, degree, elements }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.amb
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, u: &TMonomial) -> bool {
        self.elements.contains(u)
    }

    /// Slex-descending.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &TMonomial> + '_ {
        self.elements.iter()
    }

    /// The slex-greatest element.
    pub fn max(&self) -> Option<&TMonomial> {
        self.elements.first()
    }

    /// The slex-smallest element.
    pub fn min(&self) -> Option<&TMonomial> {
        self.elements.last()
    }

    pub fn to_vec(&self) -> Vec<TMonomial> {
        self.elements.iter().cloned().collect()
    }

    pub(crate) fn as_set(&self) -> &BTreeSet<TMonomial> {
        &self.elements
    }

    fn check_compatible(&self, other: &TMonomialSet) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    pub fn union(&self, other: &TMonomialSet) -> Result<TMonomialSet> {
        self.check_compatible(other)?;
        let elements = self.elements.union(&other.elements).cloned().collect();
        Ok(TMonomialSet::from_set(self.amb, self.degree, elements))
    }

    pub fn difference(&self, other: &TMonomialSet) -> Result<TMonomialSet> {
        self.check_compatible(other)?;
        let elements = self.elements.difference(&other.elements).cloned().collect();
        Ok(TMonomialSet::from_set(self.amb, self.degree, elements))
    }

    /// Elements with `max(u) <= bound`.
    pub fn with_max_at_most(&self, bound: usize) -> TMonomialSet {
        let elements = self.elements.iter().filter(|u| u.max_index() <= bound).cloned().collect();
        TMonomialSet::from_set(self.amb, self.degree, elements)
    }

    /// Elements with `max(u) == bound`.
    pub fn with_max_equal(&self, bound: usize) -> TMonomialSet {
        let elements = self.elements.iter().filter(|u| u.max_index() == bound).cloned().collect();
        TMonomialSet::from_set(self.amb, self.degree, elements)
    }
}

impl<'a> IntoIterator for &'a TMonomialSet {
    type Item = &'a TMonomial;
    type IntoIter = std::collections::btree_set::Iter<'a, TMonomial>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// `x_i w` for every `i` keeping `w` t-spread.
fn spread_multiples(w: &TMonomial, amb: &Ambient) -> Vec<TMonomial> {
    let (n, t) = (amb.n(), amb.t());
    let idx = w.indices();
    let mut slots: Vec<(usize, usize, usize)> = Vec::new(); // (insert position, lo, hi)
    match (idx.first(), idx.last()) {
        (None, _) | (_, None) => slots.push((0, 1, n)),
        (Some(&first), Some(&last)) => {
            if first > t {
                slots.push((0, 1, first - t));
            }
            for p in 0..idx.len() - 1 {
                if idx[p + 1] >= idx[p] + 2 * t {
                    slots.push((p + 1, idx[p] + t, idx[p + 1] - t));
                }
            }
            if last + t <= n {
                slots.push((idx.len(), last + t, n));
            }
        }
    }
    let mut out = Vec::new();
    for (pos, lo, hi) in slots {
        for i in lo..=hi {
            let mut v = Vec::with_capacity(idx.len() + 1);
            v.extend_from_slice(&idx[..pos]);
            v.push(i);
            v.extend_from_slice(&idx[pos..]);
            out.push(TMonomial::from_sorted(v));
        }
    }
    out
}

/// `Shad_t(L) = {x_i w : w in L, x_i w t-spread}`.
pub fn shadow(set: &TMonomialSet) -> TMonomialSet {
    let amb = *set.ambient();
    let elements = set.iter().flat_map(|w| spread_multiples(w, &amb)).collect();
    TMonomialSet::from_set(amb, set.degree() + 1, elements)
}

/// `Shad_t^s(L)`; `s = 0` is the identity.
pub fn shadow_power(set: &TMonomialSet, s: usize) -> TMonomialSet {
    let mut current = set.clone();
    for _ in 0..s {
        current = shadow(&current);
    }
    current
}

/// Every t-spread `x_i (u/x_j)` with `i < j`.
fn decreasing_moves<'a>(u: &'a TMonomial, amb: &'a Ambient) -> impl Iterator<Item = TMonomial> + 'a {
    u.indices().iter().flat_map(move |&j| {
        (1..j)
            .filter(move |&i| !u.contains(i))
            .filter_map(move |i| u.borel_move(i, j, amb).ok().flatten())
    })
}

/// `B_t{gens}`: the smallest t-spread strongly stable set of the same degree
/// containing `gens`, saturated with a worklist.
pub fn borel_closure_degree(gens: &TMonomialSet) -> TMonomialSet {
    let amb = *gens.ambient();
    let mut closed: BTreeSet<TMonomial> = gens.as_set().clone();
    let mut work: Vec<TMonomial> = closed.iter().cloned().collect();
    while let Some(u) = work.pop() {
        for v in decreasing_moves(&u, &amb) {
            if !closed.contains(&v) {
                closed.insert(v.clone());
                work.push(v);
            }
        }
    }
    TMonomialSet::from_set(amb, gens.degree(), closed)
}

/// Closed under every admissible decreasing move.
pub fn is_strongly_stable(set: &TMonomialSet) -> bool {
    let amb = *set.ambient();
    set.iter().all(|u| decreasing_moves(u, &amb).all(|v| set.contains(&v)))
}

/// Checks that every element of `T` has max at most `k1 + t(l1-1) + 1`, where
/// `k1` comes from the largest max in `T`, that `k1 > k2`, `l1 < l2`, and
/// that `(k2,l2)` fits. A set already closed under Borel moves passes as long
/// as its top elements do.
fn check_shadow_parameters(set: &TMonomialSet, k2: usize, l2: usize) -> Result<()> {
    let amb = set.ambient();
    amb.check_corner(k2, l2)?;
    let l1 = set.degree();
    if l1 == 0 || l1 >= l2 {
        return Err(Error::ShadowParameters(format!("need 1 <= l1 < l2, got l1 = {l1}, l2 = {l2}")));
    }
    let Some(max) = set.iter().map(TMonomial::max_index).max() else { return Ok(()) };
    let k1 = max - amb.t() * (l1 - 1) - 1;
    if k1 <= k2 {
        return Err(Error::ShadowParameters(format!("need k1 > k2, got k1 = {k1}, k2 = {k2}")));
    }
    Ok(())
}

/// The Borel t-shadow of an arbitrary set of degree `l1 < l2`:
/// `{v in Shad_t^{l2-l1}(B_t{L}) : max(v) <= k2 + t(l2-1) + 1}`.
pub fn borel_shadow(set: &TMonomialSet, k2: usize, l2: usize) -> Result<TMonomialSet> {
    let bound = set.ambient().check_corner(k2, l2)?;
    if set.degree() > l2 {
        return Err(Error::ShadowParameters(format!(
            "set degree {} exceeds target degree {l2}",
            set.degree()
        )));
    }
    let closed = borel_closure_degree(set);
    Ok(shadow_power(&closed, l2 - set.degree()).with_max_at_most(bound))
}

/// `BShad_t(T)_{(k2,l2)}` for `T ⊆ A^t(k1,l1)`, `k1 > k2`, `l1 < l2`.
pub fn bshad(set: &TMonomialSet, k2: usize, l2: usize) -> Result<TMonomialSet> {
    check_shadow_parameters(set, k2, l2)?;
    borel_shadow(set, k2, l2)
}

/// Whether `w` lies in the Borel t-shadow of `set` at `(k2, l2)`, decided
/// without materializing the shadow: `w` must respect the max bound and have
/// a t-spread divisor of degree `deg(set)` inside `B_t{set}`.
pub fn borel_shadow_contains(set: &TMonomialSet, w: &TMonomial, k2: usize, l2: usize) -> Result<bool> {
    let bound = set.ambient().check_corner(k2, l2)?;
    if w.degree() != l2 {
        return Err(Error::DegreeMismatch { expected: l2, found: w.degree() });
    }
    if w.max_index() > bound || !w.has_spread(set.ambient().t()) {
        return Ok(false);
    }
    let closed = borel_closure_degree(set);
    Ok(sub_supports(w.indices(), set.degree()).any(|d| closed.contains(&d)))
}

/// All sub-supports of the given size, as monomials.
fn sub_supports(indices: &[usize], size: usize) -> impl Iterator<Item = TMonomial> + '_ {
    let len = indices.len();
    let mut mask: Option<Vec<usize>> = (size <= len).then(|| (0..size).collect());
    std::iter::from_fn(move || {
        let cur = mask.as_mut()?;
        let out = TMonomial::from_sorted(cur.iter().map(|&p| indices[p]).collect());
        match (0..size).rev().find(|&p| cur[p] < len - size + p) {
            Some(p) => {
                cur[p] += 1;
                for q in p + 1..size {
                    cur[q] = cur[q - 1] + 1;
                }
            }
            None => mask = None,
        }
        Some(out)
    })
}

/// `min BShad_t(u)_{(k2,l2)}` in closed form.
///
/// With `c_q = k2 + t(q-1) + 1`, the minimum keeps the longest prefix
/// `x_{i_1} ... x_{i_q}` of `u` with `i_q <= c_q` and completes it with
/// `x_{c_{q+1}} ... x_{c_{l2}}`. Written with the shift `m = l1 - 2 - q`, the
/// prefix is found at the least `m >= -1` with
/// `k2 + t(l1-1) + 1 - i_{l1-2-m} >= (m+2)t`; the empty prefix is always
/// admissible.
pub fn min_bshad_single(u: &TMonomial, k2: usize, l2: usize, amb: &Ambient) -> Result<TMonomial> {
    u.check_tspread(amb)?;
    let single = TMonomialSet::from_set(*amb, u.degree(), BTreeSet::from([u.clone()]));
    check_shadow_parameters(&single, k2, l2)?;
    Ok(min_bshad_unchecked(u, k2, l2, amb))
}

fn min_bshad_unchecked(u: &TMonomial, k2: usize, l2: usize, amb: &Ambient) -> TMonomial {
    let t = amb.t() as i64;
    let l1 = u.degree() as i64;
    let idx = u.indices();
    let threshold = k2 as i64 + t * (l1 - 1) + 1;
    let m = (-1..=l1 - 3)
        .find(|&m| {
            let q = (l1 - 2 - m) as usize;
            threshold - idx[q - 1] as i64 >= (m + 2) * t
        })
        .unwrap_or(l1 - 2);
    let keep = (l1 - 2 - m) as usize;
    let mut v: Vec<usize> = idx[..keep].to_vec();
    v.extend((keep + 1..=l2).map(|nu| k2 + amb.t() * (nu - 1) + 1));
    TMonomial::from_sorted(v)
}

/// `min BShad_t(T)_{(k2,l2)}`. For `T ⊆ A^t(k1,l1)` this is the minimum for
/// the slex-smallest element of `T`.
pub fn min_bshad_set(set: &TMonomialSet, k2: usize, l2: usize) -> Result<TMonomial> {
    check_shadow_parameters(set, k2, l2)?;
    let amb = set.ambient();
    let mut best: Option<TMonomial> = None;
    for u in set {
        let v = min_bshad_unchecked(u, k2, l2, amb);
        if best.as_ref().is_none_or(|b| v.slex_cmp(b).is_ok_and(|o| o.is_lt())) {
            best = Some(v);
        }
    }
    best.ok_or(Error::EmptySet)
}
