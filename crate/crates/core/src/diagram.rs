//! Young diagrams in bottom-left coordinates.
//!
//! A diagram is written `Y(a_1, ..., a_n)` with `a_1` the length of the top
//! row. Internally rows are numbered from the bottom (row 1 is the shortest)
//! and columns from the left, both starting at 1.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell of a diagram, 1-based, row 1 at the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// A lattice corner; `(0, 0)` is the bottom-left corner of the diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridPoint {
    pub x: usize,
    pub y: usize,
}

/// A border corner where the outline turns from going up to going right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CriticalPoint {
    pub point: GridPoint,
    /// The diagonal `d_i` the point lies on.
    pub index: usize,
}

impl CriticalPoint {
    /// Number of rows of the diagram strictly below the point.
    pub fn rows_below(&self) -> usize {
        self.point.y
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Up,
    Right,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct YoungDiagram {
    /// Row lengths from the bottom row up; weakly increasing, all positive.
    lengths: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    rows: Vec<usize>,
}

impl TryFrom<DiagramRepr> for YoungDiagram {
    type Error = Error;
    fn try_from(repr: DiagramRepr) -> Result<Self> {
        YoungDiagram::new(&repr.rows)
    }
}

impl From<YoungDiagram> for DiagramRepr {
    fn from(y: YoungDiagram) -> Self {
        DiagramRepr { rows: y.rows_top_first() }
    }
}

impl YoungDiagram {
    /// Builds `Y(a_1, ..., a_n)` from row lengths listed top row first.
    pub fn new(rows_top_first: &[usize]) -> Result<Self> {
        if rows_top_first.is_empty() {
            return Err(Error::InvalidDiagram("no rows".into()));
        }
        if rows_top_first.contains(&0) {
            return Err(Error::InvalidDiagram("row lengths must be positive".into()));
        }
        if rows_top_first.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram("row lengths must be weakly decreasing from the top".into()));
        }
        Ok(YoungDiagram { lengths: rows_top_first.iter().rev().copied().collect() })
    }

    /// Builds a diagram from row lengths listed bottom row first. Empty rows at
    /// the bottom are dropped, since they carry no cells.
    pub fn from_bottom_lengths(lengths: Vec<usize>) -> Result<Self> {
        if lengths.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidDiagram(format!("bottom-up row lengths {lengths:?} must be weakly increasing")));
        }
        let lengths = lengths.into_iter().filter(|&l| l > 0).collect();
        Ok(YoungDiagram { lengths })
    }

    /// The diagram with no cells; only produced by reductions.
    pub fn empty() -> Self {
        YoungDiagram { lengths: Vec::new() }
    }

    /// The square `M_n`.
    pub fn square(n: usize) -> Self {
        YoungDiagram { lengths: vec![n; n] }
    }

    /// `Y_n`: the square with its bottom-right cell removed.
    pub fn corner_deleted(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange(format!("corner-deleted square needs n >= 2, got {n}")));
        }
        let mut lengths = vec![n; n];
        lengths[0] = n - 1;
        Ok(YoungDiagram { lengths })
    }

    /// The staircase `St^i_n`, whose border zigzags between `d_{i-1}` and `d_i`.
    /// For `i >= n` this is the square `M_n`.
    pub fn staircase(i: usize, n: usize) -> Result<Self> {
        if i < 1 || n < 1 {
            return Err(Error::OutOfRange(format!("staircase St^{i}_{n} needs i, n >= 1")));
        }
        Ok(YoungDiagram { lengths: (1..=n).map(|r| (r + i - 1).min(n)).collect() })
    }

    pub fn rows_top_first(&self) -> Vec<usize> {
        self.lengths.iter().rev().copied().collect()
    }

    /// Row lengths from the bottom up.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Length of row `row` (1-based from the bottom); 0 outside the diagram.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.lengths.get(row - 1).copied().unwrap_or(0)
    }

    pub fn n_rows(&self) -> usize {
        self.lengths.len()
    }

    pub fn n_cols(&self) -> usize {
        self.lengths.last().copied().unwrap_or(0)
    }

    /// Side length; meaningful for proper diagrams.
    pub fn size(&self) -> usize {
        self.n_rows()
    }

    pub fn n_cells(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.lengths.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |col| Cell::new(i + 1, col)))
    }

    /// Square bounding box and containment of the staircase `Y(n, n-1, ..., 1)`.
    /// The empty diagram counts as proper.
    pub fn is_proper(&self) -> bool {
        self.n_rows() == self.n_cols() && self.lengths.iter().enumerate().all(|(i, &l)| l > i)
    }

    pub fn ensure_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::NotProper(self.to_string()))
        }
    }

    pub fn is_square(&self) -> bool {
        self.is_proper() && self.lengths.iter().all(|&l| l == self.n_rows())
    }

    /// The lower-right outline from `(0, 0)` to `(n_cols, n_rows)`.
    pub fn border(&self) -> Vec<Step> {
        let mut steps = Vec::new();
        let mut x = 0;
        for &len in &self.lengths {
            steps.extend(std::iter::repeat_n(Step::Right, len - x));
            steps.push(Step::Up);
            x = len;
        }
        steps
    }

    /// Cells `(r, r)` of the main diagonal `d(Y)`.
    pub fn diagonal(&self) -> Vec<Cell> {
        (1..=self.n_rows()).map(|r| Cell::new(r, r)).collect()
    }

    /// Index `i` of the diagonal `d_i` through a grid point (which must lie on
    /// or below `d_0`).
    pub fn diagonal_index(point: GridPoint) -> Option<usize> {
        point.x.checked_sub(point.y)
    }

    /// Critical points from the bottom up.
    pub fn critical_points(&self) -> Vec<CriticalPoint> {
        self.lengths
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1] > w[0])
            .filter_map(|(i, w)| {
                let point = GridPoint { x: w[0], y: i + 1 };
                Self::diagonal_index(point).map(|index| CriticalPoint { point, index })
            })
            .collect()
    }

    pub fn critical_point_at(&self, point: GridPoint) -> Result<CriticalPoint> {
        self.critical_points()
            .into_iter()
            .find(|cp| cp.point == point)
            .ok_or(Error::NotCritical { x: point.x, y: point.y })
    }

    pub fn max_critical_index(&self) -> Option<usize> {
        self.critical_points().iter().map(|cp| cp.index).max()
    }

    /// `Y^R`: everything left of and below the diagonal point above `P`.
    pub fn lower_piece(&self, cp: &CriticalPoint) -> YoungDiagram {
        let top = cp.point.x;
        YoungDiagram { lengths: self.lengths[..top].iter().map(|&l| l.min(top)).collect() }
    }

    /// `_QY`: everything right of and above the diagonal point left of `P`.
    pub fn upper_piece(&self, cp: &CriticalPoint) -> YoungDiagram {
        let below = cp.point.y;
        YoungDiagram { lengths: self.lengths[below..].iter().map(|&l| l - below).collect() }
    }

    /// Deletes every row and column meeting `cells` and renormalizes.
    pub fn reduce(&self, cells: &[Cell]) -> Result<YoungDiagram> {
        Ok(self.reduce_with_maps(cells)?.diagram)
    }

    pub fn reduce_with_maps(&self, cells: &[Cell]) -> Result<Reduction> {
        if let Some(c) = cells.iter().find(|c| !self.contains(**c)) {
            return Err(Error::CellOutside { row: c.row, col: c.col });
        }
        let rows: Vec<usize> = (1..=self.n_rows()).filter(|r| cells.iter().all(|c| c.row != *r)).collect();
        let cols: Vec<usize> = (1..=self.n_cols()).filter(|k| cells.iter().all(|c| c.col != *k)).collect();
        Ok(self.restrict(rows, cols))
    }

    /// The subgrid on the given (sorted) rows and columns.
    pub fn restrict(&self, rows: Vec<usize>, cols: Vec<usize>) -> Reduction {
        let lengths: Vec<usize> =
            rows.iter().map(|&r| cols.iter().take_while(|&&c| c <= self.row_len(r)).count()).collect();
        let aligned = lengths.first().is_none_or(|&l| l > 0) && lengths.last().copied().unwrap_or(0) == cols.len();
        let diagram =
            YoungDiagram::from_bottom_lengths(lengths).expect("restriction of a Young diagram is a Young diagram");
        Reduction { diagram, rows, cols, aligned }
    }

    pub fn subboard(&self, anchor: Anchor, kind: SubboardKind) -> Subboard {
        let n = self.n_rows().max(self.n_cols());
        let (rows, cols) = match anchor {
            Anchor::Point(p) => match kind.quadrant {
                Quadrant::AboveLeft => ((p.y + 1, n), (1, p.x)),
                Quadrant::AboveRight => ((p.y + 1, n), (p.x + 1, n)),
                Quadrant::BelowLeft => ((1, p.y), (1, p.x)),
                Quadrant::BelowRight => ((1, p.y), (p.x + 1, n)),
            },
            Anchor::Cell(c) => {
                let e = usize::from(kind.exclusive);
                match kind.quadrant {
                    Quadrant::AboveLeft => ((c.row + e, n), (1, c.col - e)),
                    Quadrant::AboveRight => ((c.row + e, n), (c.col + e, n)),
                    Quadrant::BelowLeft => ((1, c.row - e), (1, c.col - e)),
                    Quadrant::BelowRight => ((1, c.row - e), (c.col + e, n)),
                }
            }
        };
        Subboard { parent: self.clone(), rows, cols }
    }

    /// Every proper diagram of size `n`, in descending lexicographic order of
    /// the top-first row lengths.
    pub fn proper_diagrams(n: usize) -> Vec<YoungDiagram> {
        fn go(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            let i = prefix.len();
            if i == n {
                out.push(YoungDiagram::new(prefix).expect("generated rows are valid"));
                return;
            }
            let hi = prefix.last().copied().unwrap_or(n);
            let lo = if i == 0 { n } else { n - i };
            for a in (lo..=hi).rev() {
                prefix.push(a);
                go(n, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n >= 1 {
            go(n, &mut Vec::with_capacity(n), &mut out);
        }
        out
    }

    /// All proper diagrams of sizes `1..=max_size`.
    pub fn proper_diagrams_up_to(max_size: usize) -> Vec<YoungDiagram> {
        (1..=max_size).flat_map(Self::proper_diagrams).collect()
    }
}

/// The outcome of deleting rows and columns: the new diagram together with the
/// original indices of the surviving rows and columns, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub diagram: YoungDiagram,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    /// False when some surviving row or column has no cells left.
    pub aligned: bool,
}

impl Reduction {
    /// Maps a cell of the reduced diagram back to the original.
    pub fn lift(&self, cell: Cell) -> Cell {
        Cell::new(self.rows[cell.row - 1], self.cols[cell.col - 1])
    }

    /// Maps an original cell into the reduced diagram, if it survived.
    pub fn project(&self, cell: Cell) -> Option<Cell> {
        let r = self.rows.iter().position(|&r| r == cell.row)?;
        let c = self.cols.iter().position(|&c| c == cell.col)?;
        Some(Cell::new(r + 1, c + 1))
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows_top_first().iter().map(|a| a.to_string()).collect();
        write!(f, "{}", rows.join(","))
    }
}

impl fmt::Debug for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y({self})")
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix("Y(").and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        let rows = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::InvalidDiagram(format!("bad row length `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        YoungDiagram::new(&rows)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    Cell(Cell),
    Point(GridPoint),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quadrant {
    AboveLeft,
    AboveRight,
    BelowLeft,
    BelowRight,
}

/// Which side of the anchor a subboard lies on. Written the way the anchor
/// sits around `Y`: `Y_c` is above-left of `c`, `^cY` below-right, `Y^c`
/// below-left, `_cY` above-right. A bar (`cbar` or a combining macron)
/// excludes the anchor's own row and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubboardKind {
    pub quadrant: Quadrant,
    pub exclusive: bool,
}

impl SubboardKind {
    pub const fn new(quadrant: Quadrant, exclusive: bool) -> Self {
        SubboardKind { quadrant, exclusive }
    }
}

impl FromStr for SubboardKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownSubboard(s.to_string());
        let anchor = |t: &str| -> Option<bool> {
            let (sym, exclusive) = if let Some(base) = t.strip_suffix("bar") {
                (base, true)
            } else if let Some(base) = t.strip_suffix('\u{0304}') {
                (base, true)
            } else {
                (t, false)
            };
            matches!(sym, "c" | "P" | "Q" | "R").then_some(exclusive)
        };
        let (quadrant, rest) = if let Some(t) = s.strip_prefix("Y_") {
            (Quadrant::AboveLeft, t)
        } else if let Some(t) = s.strip_prefix("Y^") {
            (Quadrant::BelowLeft, t)
        } else if let Some(t) = s.strip_prefix('^').and_then(|t| t.strip_suffix('Y')) {
            (Quadrant::BelowRight, t)
        } else if let Some(t) = s.strip_prefix('_').and_then(|t| t.strip_suffix('Y')) {
            (Quadrant::AboveRight, t)
        } else {
            return Err(unknown());
        };
        let exclusive = anchor(rest).ok_or_else(unknown)?;
        Ok(SubboardKind { quadrant, exclusive })
    }
}

/// A rectangular window of a parent diagram; its cells are the parent's
/// cells inside the window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subboard {
    pub parent: YoungDiagram,
    /// Inclusive row range; empty when `lo > hi`.
    pub rows: (usize, usize),
    pub cols: (usize, usize),
}

impl Subboard {
    pub fn contains(&self, cell: Cell) -> bool {
        (self.rows.0..=self.rows.1).contains(&cell.row)
            && (self.cols.0..=self.cols.1).contains(&cell.col)
            && self.parent.contains(cell)
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.parent.cells().filter(|c| self.contains(*c)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.cells().is_empty()
    }

    /// True when the cells fill their bounding box.
    pub fn is_rectangle(&self) -> bool {
        let cells = self.cells();
        let Some(first) = cells.first() else { return true };
        let (mut r0, mut r1, mut c0, mut c1) = (first.row, first.row, first.col, first.col);
        for c in &cells {
            r0 = r0.min(c.row);
            r1 = r1.max(c.row);
            c0 = c0.min(c.col);
            c1 = c1.max(c.col);
        }
        cells.len() == (r1 - r0 + 1) * (c1 - c0 + 1)
    }

    /// The cells as a diagram in their own coordinates.
    pub fn to_diagram(&self) -> YoungDiagram {
        let lengths = (self.rows.0..=self.rows.1)
            .map(|r| {
                let hi = self.parent.row_len(r).min(self.cols.1);
                (hi + 1).saturating_sub(self.cols.0)
            })
            .collect();
        YoungDiagram::from_bottom_lengths(lengths).expect("quadrants of Young diagrams are Young")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn properness() {
        assert!(y("5,5,4,4,3").is_proper());
        assert!(y("2,2").is_proper());
        assert!(!y("3,1,1").is_proper());
        assert!(!y("3,3").is_proper());
    }

    #[test]
    fn named_diagrams() {
        assert_eq!(YoungDiagram::corner_deleted(4).unwrap(), y("4,4,4,3"));
        assert_eq!(YoungDiagram::staircase(3, 4).unwrap(), y("4,4,4,3"));
        assert_eq!(YoungDiagram::staircase(5, 5).unwrap(), YoungDiagram::square(5));
        assert_eq!(YoungDiagram::staircase(3, 2).unwrap(), YoungDiagram::square(2));
        assert_eq!(YoungDiagram::staircase(1, 4).unwrap(), y("4,3,2,1"));
        assert!(YoungDiagram::staircase(0, 3).is_err());
        assert_eq!(YoungDiagram::staircase(4, 3).unwrap(), YoungDiagram::square(3));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(y(" 5, 5,5 ,5,4").to_string(), "5,5,5,5,4");
        assert!("".parse::<YoungDiagram>().is_err());
        assert!("3,0".parse::<YoungDiagram>().is_err());
        assert!("2,3".parse::<YoungDiagram>().is_err());
        let json = serde_json::to_string(&y("3,3,2")).unwrap();
        assert_eq!(json, r#"{"rows":[3,3,2]}"#);
        assert_eq!(serde_json::from_str::<YoungDiagram>(&json).unwrap(), y("3,3,2"));
        assert!(serde_json::from_str::<YoungDiagram>(r#"{"rows":[1,2]}"#).is_err());
    }

    #[test]
    fn critical_points_of_named_diagrams() {
        assert!(YoungDiagram::square(6).critical_points().is_empty());
        for m in 2..8 {
            let cps = YoungDiagram::corner_deleted(m).unwrap().critical_points();
            assert_eq!(cps.len(), 1);
            assert_eq!(cps[0].index, m - 2);
        }
        let st = YoungDiagram::staircase(3, 10).unwrap();
        assert_eq!(st.critical_points()[0].index, 2);
        assert!(st.critical_points().iter().all(|cp| cp.index == 2));
    }

    #[test]
    fn border_shape() {
        for yd in YoungDiagram::proper_diagrams_up_to(6) {
            let b = yd.border();
            let n = yd.size();
            assert_eq!(b.iter().filter(|s| **s == Step::Up).count(), n);
            assert_eq!(b.iter().filter(|s| **s == Step::Right).count(), n);
        }
    }

    #[test]
    fn zero_critical_points_touch_the_diagonal() {
        for yd in YoungDiagram::proper_diagrams_up_to(6) {
            for cp in yd.critical_points() {
                assert_eq!(cp.index == 0, cp.point.x == cp.point.y);
            }
        }
    }

    #[test]
    fn reductions() {
        let m = YoungDiagram::square(5);
        assert_eq!(m.reduce(&[Cell::new(1, 5)]).unwrap(), YoungDiagram::square(4));
        let y5 = YoungDiagram::corner_deleted(5).unwrap();
        assert_eq!(y5.reduce(&[Cell::new(1, 3)]).unwrap(), YoungDiagram::square(4));
        assert_eq!(y5.reduce(&[]).unwrap(), y5);
        assert!(y5.reduce(&[Cell::new(1, 5)]).is_err());
        let r = y5.reduce_with_maps(&[Cell::new(2, 2)]).unwrap();
        assert_eq!(r.rows, vec![1, 3, 4, 5]);
        assert_eq!(r.lift(Cell::new(2, 2)), Cell::new(3, 3));
        assert_eq!(r.project(Cell::new(3, 3)), Some(Cell::new(2, 2)));
    }

    #[test]
    fn subboards_around_critical_points() {
        for yd in YoungDiagram::proper_diagrams_up_to(7) {
            for cp in yd.critical_points() {
                let p = Anchor::Point(cp.point);
                let above_left = yd.subboard(p, "Y_P".parse().unwrap());
                assert!(above_left.is_rectangle());
                assert!(yd.subboard(p, "^PY".parse().unwrap()).is_empty());
                assert!(yd.lower_piece(&cp).is_proper());
                assert!(yd.upper_piece(&cp).is_proper());
                let q = GridPoint { x: cp.point.y, y: cp.point.y };
                let r = GridPoint { x: cp.point.x, y: cp.point.x };
                let qy = yd.subboard(Anchor::Point(q), "_QY".parse().unwrap()).to_diagram();
                let yr = yd.subboard(Anchor::Point(r), "Y^R".parse().unwrap()).to_diagram();
                assert_eq!(qy, yd.upper_piece(&cp));
                assert_eq!(yr, yd.lower_piece(&cp));
            }
        }
    }

    #[test]
    fn subboard_kinds() {
        let k: SubboardKind = "^cbarY".parse().unwrap();
        assert_eq!(k, SubboardKind::new(Quadrant::BelowRight, true));
        let k: SubboardKind = "Y_c".parse().unwrap();
        assert_eq!(k, SubboardKind::new(Quadrant::AboveLeft, false));
        assert!("Yc".parse::<SubboardKind>().is_err());
        assert!("_zY".parse::<SubboardKind>().is_err());
        let m = YoungDiagram::square(4);
        let below_right = m.subboard(Anchor::Cell(Cell::new(3, 2)), "^cbarY".parse().unwrap());
        assert_eq!(below_right.cells().len(), 2 * 2);
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(YoungDiagram::proper_diagrams(1), vec![YoungDiagram::square(1)]);
        assert_eq!(YoungDiagram::proper_diagrams(2), vec![y("2,2"), y("2,1")]);
        let five = YoungDiagram::proper_diagrams(5);
        assert!(five.contains(&y("5,5,5,5,4")));
        assert!(five.contains(&YoungDiagram::staircase(3, 5).unwrap()));
        assert_eq!(five.len(), 42);
    }
}
