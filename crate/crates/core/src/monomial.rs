//! t-spread monomials and the squarefree lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The polynomial ring `K[x_1, ..., x_n]` together with the spread parameter `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ambient {
    n: usize,
    t: usize,
}

impl Ambient {
    pub fn new(n: usize, t: usize) -> Result<Self> {
        if n == 0 || t == 0 {
            return Err(Error::InvalidAmbient { n, t });
        }
        Ok(Ambient { n, t })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// The maximal index `k + t(l-1) + 1` shared by every element of `A^t(k,l)`.
    pub fn corner_max(&self, k: usize, l: usize) -> usize {
        debug_assert!(l >= 1);
        k + self.t * (l - 1) + 1
    }

    /// Fails unless `A^t(k,l)` fits in the ambient ring.
    pub fn check_corner(&self, k: usize, l: usize) -> Result<usize> {
        if l == 0 {
            return Err(Error::DegreeTooSmall { min: 1, found: 0 });
        }
        let max = self.corner_max(k, l);
        if max > self.n {
            return Err(Error::CornerOutOfRange { k, l, max, n: self.n });
        }
        Ok(max)
    }
}

/// A squarefree monomial `x_{i_1} ... x_{i_d}`, stored as its support
/// `i_1 < ... < i_d`. The empty support is the monomial `1`.
///
/// The derived `Ord` compares supports lexicographically. On monomials of
/// equal degree that is exactly the *reverse* of the slex order, so a
/// `BTreeSet<TMonomial>` of one degree iterates slex-descending. Use
/// [`TMonomial::slex_cmp`] for the order itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct TMonomial(Vec<usize>);

impl TMonomial {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        let increasing = indices.windows(2).all(|w| w[0] < w[1]);
        if !increasing || indices.first() == Some(&0) {
            return Err(Error::NotIncreasing(indices));
        }
        Ok(TMonomial(indices))
    }

    pub(crate) fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(indices.first() != Some(&0));
        TMonomial(indices)
    }

    /// The unit monomial `1`.
    pub fn one() -> Self {
        TMonomial(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `max(u)`, with `max(1) = 0`.
    pub fn max_index(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    /// `min(u)`, with `min(1) = 0`.
    pub fn min_index(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Consecutive differences are all at least `t`.
    pub fn has_spread(&self, t: usize) -> bool {
        self.0.windows(2).all(|w| w[1] - w[0] >= t)
    }

    /// Fails if some index exceeds `n`.
    pub fn check_bounds(&self, amb: &Ambient) -> Result<()> {
        match self.0.last() {
            Some(&max) if max > amb.n() => Err(Error::IndexOutOfRange { index: max, n: amb.n() }),
            _ => Ok(()),
        }
    }

    pub fn is_tspread(&self, amb: &Ambient) -> Result<bool> {
        self.check_bounds(amb)?;
        Ok(self.has_spread(amb.t()))
    }

    /// Validates bounds and spread in one go.
    pub fn check_tspread(&self, amb: &Ambient) -> Result<()> {
        if self.is_tspread(amb)? {
            Ok(())
        } else {
            Err(Error::NotSpread { monomial: self.0.clone(), t: amb.t() })
        }
    }

    /// Compares in the squarefree lexicographic order: `Greater` means
    /// `self >_slex other`, i.e. at the first differing position `self`
    /// carries the smaller index.
    pub fn slex_cmp(&self, other: &TMonomial) -> Result<Ordering> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(other.0.cmp(&self.0))
    }

    /// Positions `j` (1-based) with `i_{j+1} - i_j > t`, each with its width
    /// `i_{j+1} - i_j - t`.
    pub fn gap_profile(&self, t: usize) -> Result<GapProfile> {
        if self.degree() == 0 {
            return Err(Error::DegreeTooSmall { min: 1, found: 0 });
        }
        if !self.has_spread(t) {
            return Err(Error::NotSpread { monomial: self.0.clone(), t });
        }
        let widths = self
            .0
            .windows(2)
            .enumerate()
            .filter_map(|(j, w)| {
                let width = w[1] - w[0] - t;
                (width > 0).then_some((j + 1, width))
            })
            .collect();
        Ok(GapProfile { widths })
    }

    /// `x_i (u / x_j)` when it is t-spread, `None` when it is not.
    pub fn borel_move(&self, i: usize, j: usize, amb: &Ambient) -> Result<Option<TMonomial>> {
        self.check_bounds(amb)?;
        let invalid = |reason| Error::InvalidMove { monomial: self.0.clone(), i, j, reason };
        if i == 0 || i >= j {
            return Err(invalid("need 1 <= i < j"));
        }
        let pos = self.0.binary_search(&j).map_err(|_| invalid("x_j does not divide u"))?;
        if self.contains(i) {
            return Err(invalid("x_i already divides u"));
        }
        let mut v = self.0.clone();
        v.remove(pos);
        let at = v.partition_point(|&x| x < i);
        v.insert(at, i);
        let v = TMonomial(v);
        Ok(v.has_spread(amb.t()).then_some(v))
    }

    /// `u / x_{max(u)}`.
    pub fn without_last(&self) -> TMonomial {
        let mut v = self.0.clone();
        v.pop();
        TMonomial(v)
    }

    /// Macaulay2-style rendering, e.g. `x_4*x_9*x_13`.
    pub fn to_m2(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0.iter().map(|i| format!("x_{i}")).collect::<Vec<_>>().join("*")
    }
}

impl TryFrom<Vec<usize>> for TMonomial {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        TMonomial::new(v)
    }
}

impl From<TMonomial> for Vec<usize> {
    fn from(m: TMonomial) -> Vec<usize> {
        m.0
    }
}

/// Comma-separated index list, `4,9,13,16`.
impl fmt::Display for TMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseMonomialError(pub String);

impl fmt::Display for ParseMonomialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse monomial: {}", self.0)
    }
}

impl std::error::Error for ParseMonomialError {}

/// Accepts both `4,9,13,16` and `[4,9,13,16]`.
impl FromStr for TMonomial {
    type Err = ParseMonomialError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .unwrap_or(s)
            .trim();
        let indices = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| ParseMonomialError(format!("{s:?}: {e}")))?
        };
        TMonomial::new(indices).map_err(|e| ParseMonomialError(e.to_string()))
    }
}

/// The gaps of a t-spread monomial: position `j` maps to the width
/// `i_{j+1} - i_j - t > 0`. Positions absent from the map are tight.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GapProfile {
    widths: BTreeMap<usize, usize>,
}

impl GapProfile {
    pub fn is_empty(&self) -> bool {
        self.widths.is_empty()
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.widths.keys().copied()
    }

    pub fn width(&self, j: usize) -> Option<usize> {
        self.widths.get(&j).copied()
    }

    pub fn total_width(&self) -> usize {
        self.widths.values().sum()
    }

    /// `max Gap_t(u)`.
    pub fn last_position(&self) -> Option<usize> {
        self.widths.keys().next_back().copied()
    }

    pub fn as_map(&self) -> &BTreeMap<usize, usize> {
        &self.widths
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(v: &[usize]) -> TMonomial {
        TMonomial::new(v.to_vec()).unwrap()
    }

    #[test]
    fn spread_predicate() {
        let amb = Ambient::new(15, 2).unwrap();
        assert!(m(&[2, 4, 6, 13, 15]).is_tspread(&amb).unwrap());
        assert!(m(&[1]).is_tspread(&Ambient::new(3, 7).unwrap()).unwrap());
        assert!(!m(&[1, 2]).is_tspread(&Ambient::new(5, 3).unwrap()).unwrap());
        assert!(matches!(
            m(&[1, 16]).is_tspread(&amb),
            Err(Error::IndexOutOfRange { index: 16, n: 15 })
        ));
    }

    #[test]
    fn construction_rejects_unsorted() {
        assert!(TMonomial::new(vec![3, 3]).is_err());
        assert!(TMonomial::new(vec![4, 2]).is_err());
        assert!(TMonomial::new(vec![0, 2]).is_err());
        assert_eq!(TMonomial::one().max_index(), 0);
        assert_eq!(TMonomial::one().min_index(), 0);
    }

    #[test]
    fn slex_examples() {
        assert_eq!(m(&[1, 9]).slex_cmp(&m(&[2, 9])).unwrap(), Ordering::Greater);
        assert_eq!(m(&[2, 9]).slex_cmp(&m(&[2, 9])).unwrap(), Ordering::Equal);
        assert_eq!(
            m(&[2, 6, 11, 14, 17]).slex_cmp(&m(&[2, 7, 10, 13, 17])).unwrap(),
            Ordering::Greater
        );
        assert!(matches!(m(&[1]).slex_cmp(&m(&[1, 3])), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn gap_examples() {
        let g = m(&[2, 4, 6, 13, 15]).gap_profile(2).unwrap();
        assert_eq!(g.as_map(), &BTreeMap::from([(3, 5)]));
        let g = m(&[4, 9, 13]).gap_profile(3).unwrap();
        assert_eq!(g.as_map(), &BTreeMap::from([(1, 2), (2, 1)]));
        assert_eq!(g.last_position(), Some(2));
        assert!(m(&[5, 8, 11, 14]).gap_profile(3).unwrap().is_empty());
        assert!(m(&[1, 2]).gap_profile(3).is_err());
        assert!(TMonomial::one().gap_profile(3).is_err());
    }

    #[test]
    fn borel_move_examples() {
        let amb = Ambient::new(15, 2).unwrap();
        let u = m(&[2, 4, 6, 13, 15]);
        assert_eq!(u.borel_move(12, 13, &amb).unwrap(), Some(m(&[2, 4, 6, 12, 15])));
        assert_eq!(u.borel_move(8, 13, &amb).unwrap(), Some(m(&[2, 4, 6, 8, 15])));
        assert_eq!(u.borel_move(7, 13, &amb).unwrap(), None);
        // the five admissible replacements of x_13 are exactly x_8..x_12
        let admissible: Vec<usize> = (1..13)
            .filter(|&i| !u.contains(i))
            .filter(|&i| u.borel_move(i, 13, &amb).unwrap().is_some())
            .collect();
        assert_eq!(admissible, vec![8, 9, 10, 11, 12]);
        assert!(u.borel_move(13, 13, &amb).is_err());
        assert!(u.borel_move(3, 5, &amb).is_err());
        assert!(u.borel_move(2, 4, &amb).is_err());

        // the replacement may land before earlier indices
        let amb = Ambient::new(10, 2).unwrap();
        assert_eq!(m(&[5, 10]).borel_move(1, 10, &amb).unwrap(), Some(m(&[1, 5])));

        let amb = Ambient::new(10, 3).unwrap();
        let u = m(&[1, 4]);
        for i in 2..4 {
            assert_eq!(u.borel_move(i, 4, &amb).unwrap(), None);
        }
    }

    #[test]
    fn text_and_json_forms() {
        let u: TMonomial = "4,9,13,16".parse().unwrap();
        assert_eq!(u, m(&[4, 9, 13, 16]));
        let v: TMonomial = "[4, 9,13,16]".parse().unwrap();
        assert_eq!(u, v);
        assert_eq!(u.to_string(), "4,9,13,16");
        assert_eq!(u.to_m2(), "x_4*x_9*x_13*x_16");
        assert_eq!(serde_json::to_string(&u).unwrap(), "[4,9,13,16]");
        let w: TMonomial = serde_json::from_str("[4,9,13,16]").unwrap();
        assert_eq!(w, u);
        assert!(serde_json::from_str::<TMonomial>("[4,4]").is_err());
        assert!("4,x".parse::<TMonomial>().is_err());
    }

    fn spread_monomial(n: usize, t: usize) -> impl Strategy<Value = TMonomial> {
        proptest::collection::btree_set(1..=n, 0..6)
            .prop_map(move |s| {
                let mut out: Vec<usize> = Vec::new();
                for i in s {
                    if out.last().is_none_or(|&l| i >= l + t) {
                        out.push(i);
                    }
                }
                TMonomial::new(out).unwrap()
            })
    }

    proptest! {
        #[test]
        fn widths_reconstruct_span(u in spread_monomial(30, 3)) {
            prop_assume!(u.degree() >= 1);
            let g = u.gap_profile(3).unwrap();
            let d = u.degree();
            prop_assert_eq!(u.max_index() - u.min_index(), (d - 1) * 3 + g.total_width());
            prop_assert_eq!(g.is_empty(), u.indices().windows(2).all(|w| w[1] - w[0] == 3));
        }

        #[test]
        fn moves_go_up_in_slex(u in spread_monomial(20, 2)) {
            let amb = Ambient::new(20, 2).unwrap();
            for &j in u.indices() {
                for i in (1..j).filter(|&i| !u.contains(i)) {
                    if let Some(v) = u.borel_move(i, j, &amb).unwrap() {
                        prop_assert!(v.has_spread(2));
                        prop_assert_eq!(v.degree(), u.degree());
                        prop_assert_eq!(v.slex_cmp(&u).unwrap(), Ordering::Greater);
                    }
                }
            }
        }

        #[test]
        fn slex_is_antisymmetric(
            (a, b) in (1usize..5).prop_flat_map(|d| {
                let pick = move || proptest::sample::subsequence((1..=12).collect::<Vec<_>>(), d)
                    .prop_map(|v| TMonomial::new(v).unwrap());
                (pick(), pick())
            })
        ) {
            prop_assert_eq!(a.slex_cmp(&b).unwrap(), b.slex_cmp(&a).unwrap().reverse());
        }
    }
}
