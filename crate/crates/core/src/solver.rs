//! Realizability of prescribed corners and corner values by t-spread
//! strongly stable ideals, with an explicit construction when they are.
//!
//! The decision runs in two passes. The chain pass walks the corners from
//! the last to the first, computing for each corner the slex-least monomial
//! `v_i` that leaves room above it and the number `n_i` of elements of
//! `A^t(k_i,l_i)` at or above `v_i`. The construction pass walks forward,
//! building the degree components of the ideal and checking the refined
//! bound `a_i <= n_i - p_i`, where `p_i` counts the elements of
//! `A^t(k_i,l_i)` already swallowed by the Borel shadow of what was built.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::betti::TIdeal;
use crate::borel::{borel_closure_degree, borel_shadow_contains, min_bshad_single, shadow, TMonomialSet};
use crate::enumeration::{card_a, max_a, min_a, rank_in_a, unrank_in_a, SlexSegment};
use crate::monomial::{Ambient, TMonomial};
use crate::{Error, Result};

/// One prescribed corner `(k, l)` with value `a = beta_{k,k+l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corner {
    pub k: usize,
    pub l: usize,
    pub a: u128,
}

/// A candidate corner sequence with corner values in a fixed ambient ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerSpec {
    pub n: usize,
    pub t: usize,
    pub corners: Vec<Corner>,
}

impl CornerSpec {
    pub fn new(n: usize, t: usize, corners: impl IntoIterator<Item = (usize, usize, u128)>) -> Self {
        let corners = corners.into_iter().map(|(k, l, a)| Corner { k, l, a }).collect();
        CornerSpec { n, t, corners }
    }

    pub fn ambient(&self) -> Result<Ambient> {
        Ambient::new(self.n, self.t)
    }
}

/// `n = d + k t` with `1 <= d <= t`.
pub fn decompose_n(n: usize, t: usize) -> Result<(usize, usize)> {
    if t == 0 || n <= t {
        return Err(Error::NoDecomposition { n, t });
    }
    let d = (n - 1) % t + 1;
    Ok((d, (n - d) / t))
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// Largest admissible initial degree: `k + floor((d-2)/t) + 1`.
fn max_initial_degree(d: usize, k: usize, t: usize) -> i64 {
    k as i64 + floor_div(d as i64 - 2, t as i64) + 1
}

/// Largest admissible last degree.
fn max_last_degree(d: usize, k: usize, t: usize, l1: usize) -> i64 {
    let offset = if l1 == 2 { 3 } else { 2 };
    k as i64 + floor_div(d as i64 - offset, t as i64) + 1
}

/// Upper bound on the number of corners of a t-spread strongly stable ideal
/// of initial degree `l1` in `n` variables.
pub fn max_corners(n: usize, t: usize, l1: usize) -> Result<usize> {
    let (d, k) = decompose_n(n, t)?;
    let top = max_initial_degree(d, k, t);
    if l1 < 2 || l1 as i64 > top {
        return Err(Error::InitialDegree { l1, max: top });
    }
    let (k, d, t) = (k as i64, d as i64, t as i64);
    let bound = if l1 == 2 {
        k + floor_div(d - 3, t)
    } else {
        k + floor_div(d - 2, t) - (l1 as i64 - 2)
    };
    Ok(bound.max(0) as usize)
}

/// A structural hypothesis a spec fails. Corner indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    EmptySpec,
    ZeroValue { corner: usize },
    AmbientTooSmall { n: usize, t: usize },
    KTooSmall { k: usize },
    InitialDegreeTooSmall { l1: usize },
    InitialDegreeTooLarge { l1: usize, max: i64 },
    TooManyCorners { r: usize, max: usize },
    FirstKTooLarge { k1: usize, max: i64 },
    LastKZero,
    KNotDecreasing { corner: usize },
    LNotIncreasing { corner: usize },
    CornerOutOfRange { corner: usize, max_index: usize, n: usize },
    LastDegreeTooLarge { l: usize, max: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptySpec => write!(f, "no corners given"),
            Violation::ZeroValue { corner } => write!(f, "corner {corner} has value 0"),
            Violation::AmbientTooSmall { n, t } => write!(f, "need n > t >= 1, got n = {n}, t = {t}"),
            Violation::KTooSmall { k } => write!(f, "n = d + kt needs k >= 3, got k = {k}"),
            Violation::InitialDegreeTooSmall { l1 } => write!(f, "initial degree {l1} is below 2"),
            Violation::InitialDegreeTooLarge { l1, max } => {
                write!(f, "initial degree {l1} exceeds {max}")
            }
            Violation::TooManyCorners { r, max } => write!(f, "{r} corners exceed the maximum {max}"),
            Violation::FirstKTooLarge { k1, max } => write!(f, "k_1 = {k1} exceeds n - t - 1 = {max}"),
            Violation::LastKZero => write!(f, "k_r must be at least 1"),
            Violation::KNotDecreasing { corner } => {
                write!(f, "k is not strictly decreasing at corner {corner}")
            }
            Violation::LNotIncreasing { corner } => {
                write!(f, "l is not strictly increasing at corner {corner}")
            }
            Violation::CornerOutOfRange { corner, max_index, n } => {
                write!(f, "corner {corner} needs max index {max_index} > n = {n}")
            }
            Violation::LastDegreeTooLarge { l, max } => write!(f, "last degree {l} exceeds {max}"),
        }
    }
}

pub fn validate_spec(spec: &CornerSpec) -> Vec<Violation> {
    let mut out = Vec::new();
    let (n, t) = (spec.n, spec.t);
    let cs = &spec.corners;
    if cs.is_empty() {
        out.push(Violation::EmptySpec);
    }
    for (i, c) in cs.iter().enumerate() {
        if c.a == 0 {
            out.push(Violation::ZeroValue { corner: i + 1 });
        }
    }
    for i in 1..cs.len() {
        if cs[i].k >= cs[i - 1].k {
            out.push(Violation::KNotDecreasing { corner: i + 1 });
        }
        if cs[i].l <= cs[i - 1].l {
            out.push(Violation::LNotIncreasing { corner: i + 1 });
        }
    }
    for (i, c) in cs.iter().enumerate() {
        let max_index = c.k + t * c.l.saturating_sub(1) + 1;
        if max_index > n {
            out.push(Violation::CornerOutOfRange { corner: i + 1, max_index, n });
        }
    }
    if let Some(last) = cs.last() {
        if last.k == 0 {
            out.push(Violation::LastKZero);
        }
    }
    let Ok((d, k)) = decompose_n(n, t) else {
        out.push(Violation::AmbientTooSmall { n, t });
        return out;
    };
    if k < 3 {
        out.push(Violation::KTooSmall { k });
    }
    let (Some(first), Some(last)) = (cs.first(), cs.last()) else { return out };
    let k1_max = n as i64 - t as i64 - 1;
    if first.k as i64 > k1_max {
        out.push(Violation::FirstKTooLarge { k1: first.k, max: k1_max });
    }
    let l1 = first.l;
    if l1 < 2 {
        out.push(Violation::InitialDegreeTooSmall { l1 });
        return out;
    }
    let l1_max = max_initial_degree(d, k, t);
    if l1 as i64 > l1_max {
        out.push(Violation::InitialDegreeTooLarge { l1, max: l1_max });
        return out;
    }
    let r_max = max_corners(n, t, l1).expect("initial degree was checked");
    if cs.len() > r_max {
        out.push(Violation::TooManyCorners { r: cs.len(), max: r_max });
    }
    let l_max = max_last_degree(d, k, t, l1);
    if last.l as i64 > l_max {
        out.push(Violation::LastDegreeTooLarge { l: last.l, max: l_max });
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Feasible,
    Infeasible,
    Invalid,
}

/// Which pass detected infeasibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    /// `a_i > n_i`, or no `v_i` exists.
    Chain,
    /// `a_i > n_i - p_i`.
    Construction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// 1-based corner index.
    pub corner: usize,
    pub k: usize,
    pub l: usize,
    pub a: u128,
    /// The largest value the corner could have taken.
    pub bound: u128,
    pub stage: Stage,
}

/// Everything computed for one corner.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CornerAudit {
    pub k: usize,
    pub l: usize,
    pub a: u128,
    pub v: Option<TMonomial>,
    /// The slex-greatest element of `A_i = [w_i, v_i]`.
    pub w: Option<TMonomial>,
    pub n: Option<u128>,
    pub u_first: Option<TMonomial>,
    pub p: Option<u128>,
    /// `n_i - p_i`.
    pub bound: Option<u128>,
}

impl CornerAudit {
    fn new(c: &Corner) -> Self {
        CornerAudit { k: c.k, l: c.l, a: c.a, v: None, w: None, n: None, u_first: None, p: None, bound: None }
    }

    /// `A_i = [w_i, v_i]`, once both ends are known.
    pub fn segment(&self, amb: &Ambient) -> Option<SlexSegment> {
        let (w, v) = (self.w.clone()?, self.v.clone()?);
        SlexSegment::new(self.k, self.l, *amb, w, v).ok()
    }
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub spec: CornerSpec,
    pub verdict: Verdict,
    pub violations: Vec<Violation>,
    pub corners: Vec<CornerAudit>,
    pub failure: Option<Failure>,
    pub ideal: Option<TIdeal>,
    pub notes: Vec<String>,
}

impl SolveReport {
    fn invalid(spec: &CornerSpec, violations: Vec<Violation>) -> Self {
        SolveReport {
            spec: spec.clone(),
            verdict: Verdict::Invalid,
            violations,
            corners: spec.corners.iter().map(CornerAudit::new).collect(),
            failure: None,
            ideal: None,
            notes: Vec::new(),
        }
    }

    pub fn n_values(&self) -> Vec<Option<u128>> {
        self.corners.iter().map(|c| c.n).collect()
    }

    pub fn p_values(&self) -> Vec<Option<u128>> {
        self.corners.iter().map(|c| c.p).collect()
    }
}

/// `v_i`: the slex-least `u` in `A^t(k,l)` whose Borel shadow at `next`
/// misses `w`.
fn find_v(k: usize, l: usize, amb: &Ambient, w: &TMonomial, next: (usize, usize)) -> Result<Option<TMonomial>> {
    let total = card_a(k, l)?;
    for rank in (1..=total).rev() {
        let u = unrank_in_a(rank, k, l, amb)?;
        let lowest = min_bshad_single(&u, next.0, next.1, amb)?;
        if w.slex_cmp(&lowest)?.is_lt() {
            return Ok(Some(u));
        }
        let single = TMonomialSet::new(*amb, l, [u.clone()])?;
        if !borel_shadow_contains(&single, w, next.0, next.1)? {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

fn fail(report: &mut SolveReport, i: usize, bound: u128, stage: Stage) {
    let c = report.spec.corners[i];
    report.verdict = Verdict::Infeasible;
    report.failure = Some(Failure { corner: i + 1, k: c.k, l: c.l, a: c.a, bound, stage });
}

fn start_report(spec: &CornerSpec) -> Option<SolveReport> {
    let violations = validate_spec(spec);
    if !violations.is_empty() {
        return None;
    }
    let mut notes = Vec::new();
    if spec.t == 1 {
        notes.push("bounds per t≥2 theorem".to_string());
    }
    Some(SolveReport {
        spec: spec.clone(),
        verdict: Verdict::Feasible,
        violations,
        corners: spec.corners.iter().map(CornerAudit::new).collect(),
        failure: None,
        ideal: None,
        notes,
    })
}

/// The chain pass: `v_i`, `w_i`, `n_i` from the last corner to the first,
/// stopping at the first corner with `a_i > n_i`.
pub fn feasibility_chain(spec: &CornerSpec) -> Result<SolveReport> {
    let Some(mut report) = start_report(spec) else {
        return Ok(SolveReport::invalid(spec, validate_spec(spec)));
    };
    run_chain(&mut report)?;
    Ok(report)
}

fn run_chain(report: &mut SolveReport) -> Result<()> {
    let amb = report.spec.ambient()?;
    let cs = report.spec.corners.clone();
    let r = cs.len();
    for i in (0..r).rev() {
        let c = cs[i];
        let v = if i + 1 == r {
            Some(min_a(c.k, c.l, &amb)?)
        } else {
            let next = &report.corners[i + 1];
            let w_next = next.w.as_ref().expect("later corner passed the chain");
            find_v(c.k, c.l, &amb, w_next, (next.k, next.l))?
        };
        let Some(v) = v else {
            report.corners[i].n = Some(0);
            fail(report, i, 0, Stage::Chain);
            return Ok(());
        };
        let n_i = rank_in_a(&v, c.k, c.l, &amb)?;
        let audit = &mut report.corners[i];
        audit.n = Some(n_i);
        audit.v = Some(v.clone());
        if c.a > n_i {
            fail(report, i, n_i, Stage::Chain);
            return Ok(());
        }
        report.corners[i].w = Some(unrank_in_a(n_i - c.a + 1, c.k, c.l, &amb)?);
    }
    Ok(())
}

/// The greatest element of `A^t(k,l)` strictly slex-below `bound`, as a rank.
/// Returns `card + 1` when nothing lies below.
fn first_rank_below(bound: &TMonomial, k: usize, l: usize, amb: &Ambient) -> Result<u128> {
    let total = card_a(k, l)?;
    let (mut lo, mut hi) = (1u128, total + 1);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if unrank_in_a(mid, k, l, amb)?.slex_cmp(bound)?.is_lt() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

/// Chain pass followed by the construction pass; the report carries the
/// realizing ideal when the spec is feasible.
pub fn construct_ideal(spec: &CornerSpec) -> Result<SolveReport> {
    let Some(mut report) = start_report(spec) else {
        return Ok(SolveReport::invalid(spec, validate_spec(spec)));
    };
    run_chain(&mut report)?;
    if report.verdict != Verdict::Feasible {
        return Ok(report);
    }
    let amb = spec.ambient()?;
    let mut components: BTreeMap<usize, TMonomialSet> = BTreeMap::new();
    for (i, c) in spec.corners.iter().enumerate() {
        let total = card_a(c.k, c.l)?;
        let (first_rank, below) = match components.last_key_value() {
            None => (1, TMonomialSet::empty(amb, c.l)),
            Some((&top, comp)) => {
                let mut current = comp.clone();
                for d in top + 1..c.l {
                    current = shadow(&current);
                    components.insert(d, current.clone());
                }
                let below = shadow(&current);
                let bshad = below.with_max_at_most(amb.corner_max(c.k, c.l));
                let first_rank = match bshad.min() {
                    None => 1,
                    Some(lowest) => first_rank_below(lowest, c.k, c.l, &amb)?,
                };
                (first_rank, below)
            }
        };
        let p = first_rank - 1;
        let n_i = report.corners[i].n.expect("chain passed");
        let bound = n_i.saturating_sub(p);
        let audit = &mut report.corners[i];
        audit.p = Some(p);
        audit.bound = Some(bound);
        if first_rank <= total {
            audit.u_first = Some(unrank_in_a(first_rank, c.k, c.l, &amb)?);
        }
        if c.a > bound {
            fail(&mut report, i, bound, Stage::Construction);
            return Ok(report);
        }
        let top = if i == 0 { max_a(c.k, c.l, &amb)? } else { report.corners[i].u_first.clone().expect("room exists") };
        let seg = SlexSegment::new(c.k, c.l, amb, top, unrank_in_a(p + c.a, c.k, c.l, &amb)?)?;
        let fresh = TMonomialSet::new(amb, c.l, seg.elements())?;
        components.insert(c.l, below.union(&borel_closure_degree(&fresh))?);
    }
    report.ideal = Some(TIdeal::minimalize(amb, components)?);
    Ok(report)
}

/// Alias for [`construct_ideal`].
pub fn solve(spec: &CornerSpec) -> Result<SolveReport> {
    construct_ideal(spec)
}
