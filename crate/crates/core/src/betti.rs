//! Graded Betti numbers, Betti tables and corners of t-spread strongly
//! stable ideals.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binom::binomial;
use crate::borel::{borel_closure_degree, is_strongly_stable, shadow, TMonomialSet};
use crate::monomial::{Ambient, TMonomial};
use crate::{Error, Result};

/// A t-spread strongly stable ideal, stored through its minimal generators
/// grouped by degree. Degrees without generators are absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TIdeal {
    amb: Ambient,
    gens: BTreeMap<usize, TMonomialSet>,
}

impl TIdeal {
    /// The ideal generated by `gens`, which must generate a t-spread strongly
    /// stable ideal. Redundant generators are dropped.
    pub fn from_generators<I>(amb: Ambient, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = TMonomial>,
    {
        let components = components_of(amb, group_by_degree(amb, gens)?)?;
        Self::minimalize(amb, components)
    }

    /// The smallest t-spread strongly stable ideal containing `gens`.
    pub fn from_borel_generators<I>(amb: Ambient, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = TMonomial>,
    {
        let closed = group_by_degree(amb, gens)?
            .into_iter()
            .map(|(d, set)| (d, borel_closure_degree(&set)))
            .collect();
        Self::minimalize(amb, components_of(amb, closed)?)
    }

    /// Minimal generators from the degree components `[I_j]_t` of an ideal:
    /// `G(I)_j = [I_j]_t \ Shad_t([I_{j-1}]_t)`.
    ///
    /// The components must sit in consecutive degrees, each must be t-spread
    /// strongly stable, and each must contain the shadow of the previous one.
    pub fn minimalize(amb: Ambient, components: BTreeMap<usize, TMonomialSet>) -> Result<Self> {
        let mut gens = BTreeMap::new();
        let mut previous: Option<&TMonomialSet> = None;
        for (&d, comp) in &components {
            if comp.degree() != d {
                return Err(Error::DegreeMismatch { expected: d, found: comp.degree() });
            }
            if !is_strongly_stable(comp) {
                return Err(Error::NotStronglyStable { degree: d });
            }
            let fresh = match previous {
                None => comp.clone(),
                Some(prev) => {
                    if prev.degree() + 1 != d {
                        return Err(Error::DegreeJump { from: prev.degree(), to: d });
                    }
                    let below = shadow(prev);
                    if below.iter().any(|u| !comp.contains(u)) {
                        return Err(Error::NotAnIdealComponent { degree: d, below: prev.degree() });
                    }
                    comp.difference(&below)?
                }
            };
            if !fresh.is_empty() {
                gens.insert(d, fresh);
            }
            previous = Some(comp);
        }
        Ok(TIdeal { amb, gens })
    }

    pub fn ambient(&self) -> &Ambient {
        &self.amb
    }

    /// Minimal generators by degree.
    pub fn generators(&self) -> &BTreeMap<usize, TMonomialSet> {
        &self.gens
    }

    pub fn generators_in_degree(&self, l: usize) -> Option<&TMonomialSet> {
        self.gens.get(&l)
    }

    /// All minimal generators, by increasing degree and slex-descending within a degree.
    pub fn all_generators(&self) -> impl Iterator<Item = &TMonomial> + '_ {
        self.gens.values().flat_map(|s| s.iter())
    }

    pub fn num_generators(&self) -> usize {
        self.gens.values().map(TMonomialSet::len).sum()
    }

    pub fn initial_degree(&self) -> Option<usize> {
        self.gens.keys().next().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether some minimal generator divides `u`.
    pub fn contains(&self, u: &TMonomial) -> bool {
        self.all_generators()
            .any(|g| g.degree() <= u.degree() && g.indices().iter().all(|&i| u.contains(i)))
    }

    /// The components `[I_j]_t` from the initial degree up to `top`.
    pub fn components(&self, top: usize) -> BTreeMap<usize, TMonomialSet> {
        let mut out = BTreeMap::new();
        let Some(start) = self.initial_degree() else { return out };
        let mut current = TMonomialSet::empty(self.amb, start);
        for d in start..=top {
            if d > start {
                current = shadow(&current);
            }
            if let Some(g) = self.gens.get(&d) {
                current = current.union(g).expect("degrees agree");
            }
            out.insert(d, current.clone());
        }
        out
    }

    /// `max{max(u) : u in G(I)_l}`.
    fn top_max(&self, l: usize) -> Option<usize> {
        self.gens.get(&l).and_then(|g| g.iter().map(TMonomial::max_index).max())
    }
}

fn group_by_degree<I>(amb: Ambient, gens: I) -> Result<BTreeMap<usize, TMonomialSet>>
where
    I: IntoIterator<Item = TMonomial>,
{
    let mut by_degree: BTreeMap<usize, Vec<TMonomial>> = BTreeMap::new();
    for u in gens {
        by_degree.entry(u.degree()).or_default().push(u);
    }
    by_degree
        .into_iter()
        .map(|(d, v)| Ok((d, TMonomialSet::new(amb, d, v)?)))
        .collect()
}

/// Components in every degree from the lowest generator degree to the highest.
fn components_of(amb: Ambient, gens: BTreeMap<usize, TMonomialSet>) -> Result<BTreeMap<usize, TMonomialSet>> {
    let mut out = BTreeMap::new();
    let (Some(&lo), Some(&hi)) = (gens.keys().next(), gens.keys().next_back()) else {
        return Ok(out);
    };
    let mut current = TMonomialSet::empty(amb, lo);
    for d in lo..=hi {
        if d > lo {
            current = shadow(&current);
        }
        if let Some(g) = gens.get(&d) {
            current = current.union(g)?;
        }
        out.insert(d, current.clone());
    }
    Ok(out)
}

/// `beta_{k,k+l}(I) = sum over u in G(I)_l of C(max(u) - t(l-1) - 1, k)`.
pub fn graded_betti(ideal: &TIdeal, k: usize, l: usize) -> Result<u128> {
    let Some(g) = ideal.gens.get(&l) else { return Ok(0) };
    let t = ideal.amb.t();
    let mut total: u128 = 0;
    for u in g {
        let top = (u.max_index() - t * (l - 1) - 1) as u128;
        total = total.checked_add(binomial(top, k as u128)?).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// Nonzero graded Betti numbers, keyed by `(k, l)` for `beta_{k,k+l}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u128>,
}

impl BettiTable {
    pub fn get(&self, k: usize, l: usize) -> u128 {
        self.entries.get(&(k, l)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), u128> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rows from the lowest to the highest degree carrying an entry.
    pub fn degrees(&self) -> std::ops::RangeInclusive<usize> {
        let lo = self.entries.keys().map(|&(_, l)| l).min().unwrap_or(1);
        let hi = self.entries.keys().map(|&(_, l)| l).max().unwrap_or(0);
        lo..=hi
    }

    /// The largest homological index with a nonzero entry.
    pub fn max_k(&self) -> Option<usize> {
        self.entries.keys().map(|&(k, _)| k).max()
    }

    /// Column sums `sum_l beta_{k,k+l}`.
    pub fn totals(&self) -> Vec<u128> {
        let Some(width) = self.max_k().map(|m| m + 1) else { return Vec::new() };
        let mut out = vec![0u128; width];
        for (&(k, _), &v) in &self.entries {
            out[k] += v;
        }
        out
    }

    /// The JSON form: `{"rows": {"2": [13, 42, ...]}, "total": [...]}` where
    /// every row runs over columns `0..=max_k`.
    pub fn to_json(&self) -> serde_json::Value {
        let width = self.max_k().map_or(0, |m| m + 1);
        let rows: serde_json::Map<String, serde_json::Value> = self
            .degrees()
            .map(|l| {
                let row: Vec<u128> = (0..width).map(|k| self.get(k, l)).collect();
                (l.to_string(), serde_json::json!(row))
            })
            .collect();
        serde_json::json!({ "rows": rows, "total": self.totals() })
    }
}

/// Text layout: a header of homological indices, a `Tot:` row, then one row
/// per degree with `-` for zeros; columns are right-aligned.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.max_k().map_or(0, |m| m + 1);
        let mut rows: Vec<(String, Vec<String>)> = Vec::new();
        rows.push((String::new(), (0..width).map(|k| k.to_string()).collect()));
        rows.push(("Tot:".into(), self.totals().iter().map(u128::to_string).collect()));
        for l in self.degrees() {
            let cells = (0..width)
                .map(|k| match self.get(k, l) {
                    0 => "-".to_string(),
                    v => v.to_string(),
                })
                .collect();
            rows.push((format!("{l}:"), cells));
        }
        let label_w = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let col_w: Vec<usize> = (0..width)
            .map(|k| rows.iter().map(|(_, c)| c[k].len()).max().unwrap_or(1))
            .collect();
        for (label, cells) in &rows {
            let mut line = format!("{label:>label_w$}");
            for (cell, w) in cells.iter().zip(&col_w) {
                line.push_str(&format!(" {cell:>w$}"));
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

pub fn betti_table(ideal: &TIdeal) -> Result<BettiTable> {
    let mut entries = BTreeMap::new();
    for &l in ideal.gens.keys() {
        let top = ideal.top_max(l).expect("degree has generators") - ideal.amb.t() * (l - 1) - 1;
        for k in 0..=top {
            let v = graded_betti(ideal, k, l)?;
            if v > 0 {
                entries.insert((k, l), v);
            }
        }
    }
    Ok(BettiTable { entries })
}

/// The characterization of corners through maximal indices of generators:
/// `k + t(l-1) + 1` is the largest max in `G(I)_l`, and every generator of a
/// higher degree `j` has max below `k + t(j-1) + 1`.
pub fn is_extremal(ideal: &TIdeal, k: usize, l: usize) -> bool {
    let t = ideal.amb.t();
    if ideal.top_max(l) != Some(k + t * (l - 1) + 1) {
        return false;
    }
    ideal
        .gens
        .range(l + 1..)
        .all(|(&j, g)| g.iter().all(|u| u.max_index() < k + t * (j - 1) + 1))
}

/// `|{u in G(I)_l : max(u) = k + t(l-1) + 1}|` at a corner.
pub fn extremal_value(ideal: &TIdeal, k: usize, l: usize) -> Result<u128> {
    if !is_extremal(ideal, k, l) {
        return Err(Error::NotExtremal { k, l });
    }
    let bound = k + ideal.amb.t() * (l - 1) + 1;
    Ok(ideal.gens[&l].iter().filter(|u| u.max_index() == bound).count() as u128)
}

/// Corners `(k_i, l_i)` with `k` decreasing and `l` increasing, and their values.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CornerData {
    pub corners: Vec<(usize, usize)>,
    pub values: Vec<u128>,
}

impl CornerData {
    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }
}

pub fn corner_sequence(ideal: &TIdeal) -> CornerData {
    let t = ideal.amb.t();
    let mut data = CornerData::default();
    for &l in ideal.gens.keys() {
        let k = ideal.top_max(l).expect("degree has generators") - t * (l - 1) - 1;
        if let Ok(v) = extremal_value(ideal, k, l) {
            data.corners.push((k, l));
            data.values.push(v);
        }
    }
    data
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[usize]) -> TMonomial {
        TMonomial::new(v.to_vec()).unwrap()
    }

    fn worked_example() -> TIdeal {
        let amb = Ambient::new(25, 3).unwrap();
        let borel: [&[usize]; 8] = [
            &[1, 10],
            &[2, 10],
            &[3, 6, 9, 15],
            &[3, 6, 10, 13, 17],
            &[3, 6, 10, 14, 17],
            &[3, 6, 11, 14, 17],
            &[3, 7, 10, 13, 16, 19, 22],
            &[4, 7, 10, 13, 16, 19, 22],
        ];
        TIdeal::from_borel_generators(amb, borel.iter().map(|v| m(v))).unwrap()
    }

    #[test]
    fn worked_example_generators() {
        let ideal = worked_example();
        assert_eq!(ideal.num_generators(), 23);
        let sizes: Vec<(usize, usize)> = ideal.generators().iter().map(|(&d, g)| (d, g.len())).collect();
        assert_eq!(sizes, vec![(2, 13), (4, 4), (5, 4), (7, 2)]);
        let g5 = ideal.generators_in_degree(5).unwrap();
        assert!(g5.contains(&m(&[3, 6, 10, 13, 16])));
        assert!(!g5.contains(&m(&[3, 6, 9, 12, 15])));
    }

    #[test]
    fn worked_example_table() {
        let table = betti_table(&worked_example()).unwrap();
        assert_eq!(table.totals(), vec![23, 77, 117, 100, 51, 15, 2]);
        let row = |l: usize| (0..7).map(|k| table.get(k, l)).collect::<Vec<_>>();
        assert_eq!(row(2), vec![13, 42, 70, 70, 42, 14, 2]);
        assert_eq!(row(3), vec![0; 7]);
        assert_eq!(row(4), vec![4, 14, 20, 15, 6, 1, 0]);
        assert_eq!(row(5), vec![4, 15, 21, 13, 3, 0, 0]);
        assert_eq!(row(6), vec![0; 7]);
        assert_eq!(row(7), vec![2, 6, 6, 2, 0, 0, 0]);
        let text = table.to_string();
        assert!(text.starts_with("      0  1   2   3  4  5 6\nTot: 23 77 117 100 51 15 2\n"));
        assert!(text.contains("\n  3:  -  -   -   -  -  - -\n"));
        assert_eq!(table.to_json()["rows"]["7"], serde_json::json!([2, 6, 6, 2, 0, 0, 0]));
    }

    #[test]
    fn worked_example_corners() {
        let ideal = worked_example();
        assert!(is_extremal(&ideal, 6, 2));
        assert!(!is_extremal(&ideal, 6, 3));
        assert!(is_extremal(&ideal, 3, 7));
        assert_eq!(extremal_value(&ideal, 3, 7).unwrap(), 2);
        assert_eq!(extremal_value(&ideal, 4, 5).unwrap(), 3);
        assert_eq!(extremal_value(&ideal, 5, 4).unwrap(), 1);
        assert_eq!(graded_betti(&ideal, 6, 2).unwrap(), 2);
        assert!(extremal_value(&ideal, 5, 2).is_err());
        let c = corner_sequence(&ideal);
        assert_eq!(c.corners, vec![(6, 2), (5, 4), (4, 5), (3, 7)]);
        assert_eq!(c.values, vec![2, 1, 3, 2]);
    }

    #[test]
    fn principal_ideal_of_a_variable() {
        for t in 1..4 {
            let amb = Ambient::new(6, t).unwrap();
            let ideal = TIdeal::from_generators(amb, [m(&[1])]).unwrap();
            let table = betti_table(&ideal).unwrap();
            assert_eq!(table.entries().len(), 1);
            assert_eq!(table.get(0, 1), 1);
            let c = corner_sequence(&ideal);
            assert_eq!(c.corners, vec![(0, 1)]);
        }
    }

    #[test]
    fn equigenerated_ideal_has_one_corner() {
        let amb = Ambient::new(12, 2).unwrap();
        let ideal = TIdeal::from_borel_generators(amb, [m(&[2, 5, 9])]).unwrap();
        let c = corner_sequence(&ideal);
        assert_eq!(c.corners, vec![(4, 3)]);
        let g = ideal.generators_in_degree(3).unwrap();
        assert_eq!(c.values, vec![g.iter().filter(|u| u.max_index() == 9).count() as u128]);
    }

    #[test]
    fn generator_validation() {
        let amb = Ambient::new(8, 2).unwrap();
        assert!(matches!(
            TIdeal::from_generators(amb, [m(&[2, 8])]),
            Err(Error::NotStronglyStable { degree: 2 })
        ));
        // redundant generators are dropped
        let ideal = TIdeal::from_generators(amb, [m(&[1]), m(&[1, 3]), m(&[2])]).unwrap();
        assert_eq!(ideal.all_generators().cloned().collect::<Vec<_>>(), vec![m(&[1]), m(&[2])]);
        assert!(ideal.contains(&m(&[2, 5])));
        assert!(!ideal.contains(&m(&[3, 5])));
    }

    #[test]
    fn minimalize_checks() {
        let amb = Ambient::new(8, 2).unwrap();
        let c2 = borel_closure_degree(&TMonomialSet::new(amb, 2, [m(&[1, 3])]).unwrap());
        let c4 = TMonomialSet::new(amb, 4, [m(&[1, 3, 5, 7])]).unwrap();
        let jump = BTreeMap::from([(2, c2.clone()), (4, c4)]);
        assert!(matches!(TIdeal::minimalize(amb, jump), Err(Error::DegreeJump { .. })));
        let too_small = BTreeMap::from([(2, c2.clone()), (3, TMonomialSet::empty(amb, 3))]);
        assert!(matches!(TIdeal::minimalize(amb, too_small), Err(Error::NotAnIdealComponent { .. })));
        let single = BTreeMap::from([(2, c2.clone())]);
        assert_eq!(TIdeal::minimalize(amb, single).unwrap().generators()[&2], c2);
    }

    #[test]
    fn components_rebuild_minimal_generators() {
        let ideal = worked_example();
        let comps = ideal.components(7);
        assert_eq!(comps.keys().copied().collect::<Vec<_>>(), (2..=7).collect::<Vec<_>>());
        assert!(comps.values().all(is_strongly_stable));
        assert_eq!(TIdeal::minimalize(*ideal.ambient(), comps).unwrap(), ideal);
    }
}
