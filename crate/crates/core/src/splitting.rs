//! Splitting a transversal at a critical point, and the counting laws and
//! Catalan recursions that follow from it.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::diagram::{CriticalPoint, GridPoint, YoungDiagram};
use crate::error::{Error, Result};
use crate::formulas::catalan;
use crate::pattern::Pattern;
use crate::search::{self, Constraint};
use crate::transversal::Transversal;

/// The two halves of a transversal split at a critical point `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitResult {
    /// On the lower piece `Y^R`; the dots above `P` become its top rows.
    pub left: Transversal,
    /// On the upper piece `_QY`; the dots above `P` become its leftmost columns.
    pub right: Transversal,
    /// Pattern of the dots in the rectangle above-left of `P`.
    pub alpha_pattern: Pattern,
}

pub fn zeta(t: &Transversal, point: GridPoint) -> Result<SplitResult> {
    let y = t.diagram();
    let cp = y.critical_point_at(point)?;
    let (width, below) = (cp.point.x, cp.point.y);
    let word = t.word();

    let alpha_rows: Vec<usize> = word[..width].iter().copied().filter(|&r| r > below).collect();
    let alpha_pattern = Pattern::standardize(&alpha_rows);

    let mut ranks = alpha_pattern.word().iter();
    let left_word = word[..width]
        .iter()
        .map(|&r| if r <= below { r } else { below + ranks.next().expect("one rank per dot") })
        .collect();
    let right_word = alpha_rows.iter().chain(&word[width..]).map(|&r| r - below).collect();

    Ok(SplitResult {
        left: Transversal::new_unchecked(y.lower_piece(&cp), left_word),
        right: Transversal::new_unchecked(y.upper_piece(&cp), right_word),
        alpha_pattern,
    })
}

/// Glues two halves back together; the inverse of [`zeta`].
pub fn unzeta(y: &YoungDiagram, point: GridPoint, left: &Transversal, right: &Transversal) -> Result<Transversal> {
    let cp = y.critical_point_at(point)?;
    let (width, below, i) = (cp.point.x, cp.point.y, cp.index);
    if *left.diagram() != y.lower_piece(&cp) || *right.diagram() != y.upper_piece(&cp) {
        return Err(Error::Precondition("halves live on the wrong pieces".into()));
    }
    let top = left.top_pattern(i);
    let side = right.left_pattern(i);
    if top != side {
        return Err(Error::InvalidGlue { left: top.word().to_vec(), right: side.word().to_vec() });
    }
    let mut alpha_rows = right.word()[..i].iter().map(|&r| r + below);
    let word = left
        .word()
        .iter()
        .map(|&r| if r <= below { r } else { alpha_rows.next().expect("patterns agree") })
        .chain(right.word()[i..].iter().map(|&r| r + below))
        .collect();
    debug_assert_eq!(left.size(), width);
    Transversal::new(y.clone(), word)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplittingLaw {
    /// `|S_Y| = |S_{Y^R}| · |S_{_QY}|` at a 0- or 1-critical point.
    Product,
    /// The two-term sum over the top-two / left-two patterns at a
    /// 2-critical point.
    TwoTerm,
    /// The sum over all `τ ∈ S_i` at an `i`-critical point, `i ≥ 3`.
    Generalized,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub diagram: YoungDiagram,
    pub point: GridPoint,
    pub index: usize,
    pub pattern: Pattern,
    pub law: SplittingLaw,
    #[serde(serialize_with = "crate::report::decimal")]
    pub lhs: BigUint,
    #[serde(serialize_with = "crate::report::decimal")]
    pub rhs: BigUint,
    pub holds: bool,
}

/// Avoiders of `sigma` grouped by a boundary pattern.
fn boundary_tally(y: &YoungDiagram, sigma: &Pattern, key: impl Fn(&[usize]) -> Pattern) -> BTreeMap<Pattern, u64> {
    let mut tally = BTreeMap::new();
    search::for_each_avoider(y, std::slice::from_ref(sigma), |w| {
        *tally.entry(key(w)).or_insert(0) += 1;
    });
    tally
}

/// Checks the splitting law at `point` against a direct count.
pub fn verify_splitting_law(y: &YoungDiagram, point: GridPoint, sigma: &Pattern) -> Result<LawCheck> {
    let cp = y.critical_point_at(point)?;
    let i = cp.index;
    let lower = y.lower_piece(&cp);
    let upper = y.upper_piece(&cp);
    let lower_size = lower.size();
    let tops = boundary_tally(&lower, sigma, |w| {
        Pattern::standardize(&w.iter().copied().filter(|&r| r + i > lower_size).collect::<Vec<_>>())
    });
    let lefts = boundary_tally(&upper, sigma, |w| Pattern::standardize(&w[..i]));
    let rhs: u64 = tops.iter().map(|(tau, a)| a * lefts.get(tau).copied().unwrap_or(0)).sum();
    let lhs = search::count_avoiders(y, sigma);
    let rhs = BigUint::from(rhs);
    let law = match i {
        0 | 1 => SplittingLaw::Product,
        2 => SplittingLaw::TwoTerm,
        _ => SplittingLaw::Generalized,
    };
    Ok(LawCheck { diagram: y.clone(), point, index: i, pattern: sigma.clone(), law, holds: lhs == rhs, lhs, rhs })
}

/// `|S_Y(σ)|` together with `|S_{↘Y}(σ)|`, the avoiders whose two leftmost
/// dots decrease.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecursiveCounts {
    #[serde(serialize_with = "crate::report::decimal")]
    pub total: BigUint,
    #[serde(serialize_with = "crate::report::decimal")]
    pub left_down: BigUint,
}

impl RecursiveCounts {
    pub fn left_up(&self) -> BigUint {
        &self.total - &self.left_down
    }
}

/// Evaluates the Catalan recursions for (312) and (321), which agree on
/// every diagram without critical points of index 3 or more. Results are
/// memoized by diagram.
#[derive(Debug, Default)]
pub struct CatalanRecursion {
    memo: HashMap<YoungDiagram, RecursiveCounts>,
}

impl CatalanRecursion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn counts(&mut self, y: &YoungDiagram) -> Result<RecursiveCounts> {
        y.ensure_proper()?;
        if y.is_empty() {
            return Err(Error::Precondition("recursion needs a nonempty diagram".into()));
        }
        if let Some(i) = y.max_critical_index().filter(|&i| i >= 3) {
            return Err(Error::Precondition(format!("{y:?} has a {i}-critical point")));
        }
        self.eval(y)
    }

    fn eval(&mut self, y: &YoungDiagram) -> Result<RecursiveCounts> {
        if let Some(hit) = self.memo.get(y) {
            return Ok(hit.clone());
        }
        let result = match y.critical_points().first() {
            None => {
                let m = y.size() as u64;
                let left_down = if m >= 2 { catalan(m - 1) } else { BigUint::zero() };
                RecursiveCounts { total: catalan(m), left_down }
            }
            Some(cp) => self.split(y, cp)?,
        };
        self.memo.insert(y.clone(), result.clone());
        Ok(result)
    }

    fn split(&mut self, y: &YoungDiagram, cp: &CriticalPoint) -> Result<RecursiveCounts> {
        let upper = self.eval(&y.upper_piece(cp))?;
        let k = cp.rows_below() as u64;
        match cp.index {
            0 | 1 => {
                let lower = self.eval(&y.lower_piece(cp))?;
                Ok(RecursiveCounts { total: &lower.total * &upper.total, left_down: &lower.left_down * &upper.total })
            }
            2 => {
                let down = &upper.left_down;
                let up = upper.left_up();
                let (c0, c1, c2) = (catalan(k), catalan(k + 1), catalan(k + 2));
                Ok(RecursiveCounts { total: &c1 * down + (&c2 - &c1) * &up, left_down: &c0 * down + (&c1 - &c0) * &up })
            }
            i => Err(Error::Precondition(format!("{i}-critical point at {:?}", cp.point))),
        }
    }
}

/// `|S_Y(σ)|` for `σ ∈ {(312), (321)}` via the Catalan recursions.
pub fn recursive_count(y: &YoungDiagram, sigma: &Pattern) -> Result<BigUint> {
    let word = sigma.word();
    if word != [3, 1, 2] && word != [3, 2, 1] {
        return Err(Error::Precondition(format!("recursion covers (312) and (321), not {sigma:?}")));
    }
    Ok(CatalanRecursion::new().counts(y)?.total)
}

/// The five counts on the square `M_{k+2}` that feed the recursions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareCaseCounts {
    /// Top two dots decreasing: `c_{k+1}`.
    #[serde(serialize_with = "crate::report::decimal")]
    pub top_down: BigUint,
    /// Top two dots increasing: `c_{k+2} - c_{k+1}`.
    #[serde(serialize_with = "crate::report::decimal")]
    pub top_up: BigUint,
    /// Left two decreasing, top two increasing, the pairs disjoint.
    #[serde(serialize_with = "crate::report::decimal")]
    pub disjoint_top_up: BigUint,
    /// Left two decreasing, top two decreasing, the pairs disjoint.
    #[serde(serialize_with = "crate::report::decimal")]
    pub disjoint_top_down: BigUint,
    /// Left two decreasing, top two increasing, sharing the first column.
    #[serde(serialize_with = "crate::report::decimal")]
    pub shared_corner: BigUint,
}

pub fn square_case_counts(k: usize) -> SquareCaseCounts {
    let k64 = k as u64;
    let (c0, c1, c2) = (catalan(k64), catalan(k64 + 1), catalan(k64 + 2));
    SquareCaseCounts {
        top_down: c1.clone(),
        top_up: &c2 - &c1,
        disjoint_top_up: &c1 - &c0 - BigUint::from(k64),
        disjoint_top_down: &c0 - 1u32,
        shared_corner: BigUint::from(k64),
    }
}

/// Constrained count helper: avoiders of `sigma` on `y` under `constraint`.
pub fn constrained(y: &YoungDiagram, sigma: &Pattern, constraint: &Constraint) -> Result<BigUint> {
    search::count_avoiders_constrained(y, std::slice::from_ref(sigma), constraint)
}
