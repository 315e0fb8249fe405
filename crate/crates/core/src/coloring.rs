//! White/blue colorings, saturation, and the block-pattern splitting formula.
//!
//! A cell is white when some landing occurrence of `γ` among the dots lies
//! strictly below and to the right of it. The white cells of a transversal
//! carry its `α`-part, which is what lets `|S_Y(α|γ)|` be assembled from
//! avoider counts of smaller diagrams.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{Cell, YoungDiagram};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::search;
use crate::transversal::{occurrences, PartialTransversal, Transversal};

#[derive(Clone, PartialEq, Eq)]
pub struct ColoredBoard {
    diagram: YoungDiagram,
    dots: PartialTransversal,
    gamma: Pattern,
    /// `white[r-1][c-1]`, only meaningful inside the diagram.
    white: Vec<Vec<bool>>,
}

/// The pareto front of `(highest row, leftmost column)` over landing
/// occurrences; a cell is white iff it is above and left of one of them.
fn white_corners(y: &YoungDiagram, dots: &[Cell], gamma: &Pattern) -> Vec<(usize, usize)> {
    if gamma.is_empty() {
        return vec![(0, usize::MAX)];
    }
    let mut corners: Vec<(usize, usize)> = occurrences(y, dots, gamma)
        .iter()
        .map(|occ| {
            let top = occ.iter().map(|d| d.row).max().unwrap_or(0);
            let left = occ.iter().map(|d| d.col).min().unwrap_or(usize::MAX);
            (top, left)
        })
        .collect();
    corners.sort_unstable();
    corners.dedup();
    corners
}

impl ColoredBoard {
    pub fn diagram(&self) -> &YoungDiagram {
        &self.diagram
    }

    pub fn dots(&self) -> &PartialTransversal {
        &self.dots
    }

    pub fn gamma(&self) -> &Pattern {
        &self.gamma
    }

    pub fn is_white(&self, cell: Cell) -> bool {
        self.diagram.contains(cell) && self.white[cell.row - 1][cell.col - 1]
    }

    pub fn white_cells(&self) -> Vec<Cell> {
        self.diagram.cells().filter(|&c| self.is_white(c)).collect()
    }

    pub fn blue_cells(&self) -> Vec<Cell> {
        self.diagram.cells().filter(|&c| !self.is_white(c)).collect()
    }
}

/// Top row first; `.` white, `#` blue, `o`/`*` a dot on a white/blue cell.
impl fmt::Display for ColoredBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in (1..=self.diagram.n_rows()).rev() {
            for c in 1..=self.diagram.row_len(r) {
                let cell = Cell::new(r, c);
                let dot = self.dots.dots().contains(&cell);
                let ch = match (self.is_white(cell), dot) {
                    (true, false) => '.',
                    (false, false) => '#',
                    (true, true) => 'o',
                    (false, true) => '*',
                };
                write!(f, "{ch}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ColoredBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredBoard({:?}, {:?}, {:?})\n{self}", self.diagram, self.dots, self.gamma)
    }
}

pub fn color_board(y: &YoungDiagram, dots: &PartialTransversal, gamma: &Pattern) -> Result<ColoredBoard> {
    if let Some(d) = dots.dots().iter().find(|d| !y.contains(**d)) {
        return Err(Error::CellOutside { row: d.row, col: d.col });
    }
    let corners = white_corners(y, dots.dots(), gamma);
    let white = (1..=y.n_rows())
        .map(|r| {
            (1..=y.n_cols())
                .map(|c| y.contains(Cell::new(r, c)) && corners.iter().any(|&(top, left)| r > top && c < left))
                .collect()
        })
        .collect();
    Ok(ColoredBoard { diagram: y.clone(), dots: dots.clone(), gamma: gamma.clone(), white })
}

/// A transversal cut into its white part, carried by `white`, and its blue
/// remainder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteSplit {
    /// The induced white diagram `W`.
    pub white: YoungDiagram,
    /// The transversal restricted to `W`, in `W`'s own coordinates.
    pub restricted: Transversal,
    /// Dots on blue cells, in the original coordinates.
    pub blue: PartialTransversal,
    /// Original rows and columns occupied by `W`, in order.
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub parent: YoungDiagram,
}

impl WhiteSplit {
    /// Replaces the white part by another transversal of `W`.
    pub fn glue(&self, replacement: &Transversal) -> Result<Transversal> {
        if replacement.diagram() != &self.white {
            return Err(Error::InvalidDiagram(format!(
                "replacement lives on {:?}, expected {:?}",
                replacement.diagram(),
                self.white
            )));
        }
        let n = self.rows.len() + self.blue.len();
        let mut word = vec![0; n];
        for d in replacement.dots() {
            word[self.cols[d.col - 1] - 1] = self.rows[d.row - 1];
        }
        for d in self.blue.dots() {
            word[d.col - 1] = d.row;
        }
        Transversal::new(self.parent.clone(), word)
    }
}

/// Colors `y` by the dots of `t`, then recolors blue every white row and
/// column whose dot is blue. The remaining white cells form `W`.
pub fn induced_white(t: &Transversal, gamma: &Pattern) -> WhiteSplit {
    let y = t.diagram();
    let board = color_board(y, &PartialTransversal::from(t), gamma).expect("dots of a transversal lie inside");
    let (white_dots, blue_dots): (Vec<Cell>, Vec<Cell>) = t.dots().into_iter().partition(|&d| board.is_white(d));
    let mut rows: Vec<usize> = white_dots.iter().map(|d| d.row).collect();
    let mut cols: Vec<usize> = white_dots.iter().map(|d| d.col).collect();
    rows.sort_unstable();
    cols.sort_unstable();
    let lengths: Vec<usize> =
        rows.iter().map(|&r| cols.iter().filter(|&&c| board.is_white(Cell::new(r, c))).count()).collect();
    let white = YoungDiagram::from_bottom_lengths(lengths).expect("white cells are closed up and left");
    let word = cols.iter().map(|&c| rows.iter().position(|&r| r == t.row_of(c)).expect("white dot row") + 1).collect();
    WhiteSplit {
        restricted: Transversal::new_unchecked(white.clone(), word),
        white,
        blue: PartialTransversal::new(blue_dots).expect("dots of a transversal"),
        rows,
        cols,
        parent: y.clone(),
    }
}

/// The white diagram left after reducing `board` along `dots`, provided the
/// dots all sit on blue cells and every surviving row and column keeps a
/// white cell.
pub fn saturated_white(board: &YoungDiagram, dots: &PartialTransversal, gamma: &Pattern) -> Option<YoungDiagram> {
    let colored = color_board(board, dots, gamma).ok()?;
    if dots.dots().iter().any(|&d| colored.is_white(d)) {
        return None;
    }
    let rows: Vec<usize> = (1..=board.n_rows()).filter(|r| dots.dots().iter().all(|d| d.row != *r)).collect();
    let cols: Vec<usize> = (1..=board.n_cols()).filter(|c| dots.dots().iter().all(|d| d.col != *c)).collect();
    let lengths: Vec<usize> =
        rows.iter().map(|&r| cols.iter().filter(|&&c| colored.is_white(Cell::new(r, c))).count()).collect();
    let aligned =
        lengths.iter().all(|&l| l > 0) && cols.iter().all(|&c| rows.iter().any(|&r| colored.is_white(Cell::new(r, c))));
    if !aligned {
        return None;
    }
    YoungDiagram::from_bottom_lengths(lengths).ok()
}

/// Whether `dots` saturates `w` inside `board` with respect to `gamma`.
pub fn saturates(dots: &PartialTransversal, w: &YoungDiagram, board: &YoungDiagram, gamma: &Pattern) -> bool {
    w.size() + dots.len() == board.size() && saturated_white(board, dots, gamma).as_ref() == Some(w)
}

/// Visits every partial transversal of `board` with exactly `k` dots, or of
/// every size when `k` is `None`.
fn for_each_partial<F: FnMut(&[Cell])>(board: &YoungDiagram, k: Option<usize>, visit: &mut F) {
    fn go<F: FnMut(&[Cell])>(
        board: &YoungDiagram,
        col: usize,
        k: Option<usize>,
        used: &mut Vec<bool>,
        dots: &mut Vec<Cell>,
        visit: &mut F,
    ) {
        let n = board.n_cols();
        if let Some(k) = k {
            if dots.len() > k || dots.len() + (n + 1 - col) < k {
                return;
            }
        }
        if col > n {
            visit(dots);
            return;
        }
        go(board, col + 1, k, used, dots, visit);
        for r in 1..=board.n_rows() {
            if !used[r] && board.contains(Cell::new(r, col)) {
                used[r] = true;
                dots.push(Cell::new(r, col));
                go(board, col + 1, k, used, dots, visit);
                dots.pop();
                used[r] = false;
            }
        }
    }
    go(board, 1, k, &mut vec![false; board.n_rows() + 1], &mut Vec::new(), visit);
}

/// The partial transversals of `board` that saturate `w`.
pub fn saturating_sets(board: &YoungDiagram, w: &YoungDiagram, gamma: &Pattern) -> Vec<PartialTransversal> {
    let Some(k) = board.size().checked_sub(w.size()) else { return Vec::new() };
    let mut out = Vec::new();
    for_each_partial(board, Some(k), &mut |dots| {
        let pt = PartialTransversal::new(dots.to_vec()).expect("one dot per line");
        if saturates(&pt, w, board, gamma) {
            out.push(pt);
        }
    });
    out
}

pub fn count_saturating(board: &YoungDiagram, w: &YoungDiagram, gamma: &Pattern) -> BigUint {
    BigUint::from(saturating_sets(board, w, gamma).len())
}

/// How many partial transversals saturate each white diagram, over all
/// white diagrams at once.
pub fn saturation_census(board: &YoungDiagram, gamma: &Pattern) -> BTreeMap<YoungDiagram, u64> {
    let mut tally = BTreeMap::new();
    for_each_partial(board, None, &mut |dots| {
        let pt = PartialTransversal::new(dots.to_vec()).expect("one dot per line");
        if let Some(w) = saturated_white(board, &pt, gamma) {
            *tally.entry(w).or_insert(0) += 1;
        }
    });
    tally
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub white: YoungDiagram,
    /// `|S_W(α)|`.
    #[serde(serialize_with = "crate::report::decimal")]
    pub avoiders: BigUint,
    /// Number of saturating partial transversals.
    #[serde(serialize_with = "crate::report::decimal")]
    pub saturating: BigUint,
    #[serde(serialize_with = "crate::report::decimal")]
    pub product: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplittingAudit {
    pub diagram: YoungDiagram,
    pub alpha: Pattern,
    pub gamma: Pattern,
    /// Nonzero contributions, in census order.
    pub rows: Vec<AuditRow>,
    #[serde(serialize_with = "crate::report::decimal")]
    pub total: BigUint,
}

pub fn splitting_formula_audit(y: &YoungDiagram, alpha: &Pattern, gamma: &Pattern) -> SplittingAudit {
    let census: Vec<(YoungDiagram, u64)> = saturation_census(y, gamma).into_iter().collect();
    let rows: Vec<AuditRow> = census
        .par_iter()
        .map(|(w, sat)| {
            let avoiders = search::count_avoiders(w, alpha);
            let saturating = BigUint::from(*sat);
            AuditRow { white: w.clone(), product: &avoiders * &saturating, avoiders, saturating }
        })
        .filter(|row| row.product > BigUint::ZERO)
        .collect();
    let total = rows.iter().map(|r| &r.product).sum();
    SplittingAudit { diagram: y.clone(), alpha: alpha.clone(), gamma: gamma.clone(), rows, total }
}

/// `Σ_W |S_W(α)| · #{T' saturating W}`, which equals `|S_Y(α|γ)|`.
pub fn splitting_formula_count(y: &YoungDiagram, alpha: &Pattern, gamma: &Pattern) -> BigUint {
    splitting_formula_audit(y, alpha, gamma).total
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferenceRow {
    pub white: YoungDiagram,
    #[serde(serialize_with = "crate::report::decimal")]
    pub lower: BigUint,
    #[serde(serialize_with = "crate::report::decimal")]
    pub upper: BigUint,
    #[serde(serialize_with = "crate::report::decimal")]
    pub saturating: BigUint,
}

/// The white diagrams on which `|S_W(upper)|` and `|S_W(lower)|` differ,
/// with their saturation multiplicities. Summing
/// `(upper - lower) · saturating` gives `|S_Y(upper|γ)| - |S_Y(lower|γ)|`.
pub fn difference_audit(y: &YoungDiagram, lower: &Pattern, upper: &Pattern, gamma: &Pattern) -> Vec<DifferenceRow> {
    saturation_census(y, gamma)
        .into_par_iter()
        .filter_map(|(w, sat)| {
            let lo = search::count_avoiders(&w, lower);
            let hi = search::count_avoiders(&w, upper);
            (lo != hi).then(|| DifferenceRow { white: w, lower: lo, upper: hi, saturating: BigUint::from(sat) })
        })
        .collect()
}

/// Two copies of `tau` in the bottom-right `(2k+1)`-square of `M_n`, one
/// southwest and one northeast, separated by an empty row and column. The
/// result saturates `Y_{n-2k}` with respect to `tau`.
pub fn construct_saturating_pair(n: usize, tau: &Pattern) -> Result<PartialTransversal> {
    let k = tau.len();
    if k == 0 || n < 2 * k + 2 {
        return Err(Error::Precondition(format!("need n >= 2k + 2 with k = {k} >= 1, got n = {n}")));
    }
    let first_col = n - 2 * k;
    let mut dots = Vec::with_capacity(2 * k);
    for (i, &v) in tau.word().iter().enumerate() {
        dots.push(Cell::new(v, first_col + i));
        dots.push(Cell::new(k + 1 + v, n - k + 1 + i));
    }
    PartialTransversal::new(dots)
}
