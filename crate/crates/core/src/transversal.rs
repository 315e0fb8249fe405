//! Full and partial transversals, pattern containment with the landing
//! condition, and the domination-based subsequences.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{Cell, YoungDiagram};
use crate::error::{Error, Result};
use crate::pattern::{self, Pattern};

/// One dot in every row and column of a proper diagram.
///
/// Stored as the one-line word read left to right: entry `c - 1` is the row
/// of the dot in column `c`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Transversal {
    diagram: YoungDiagram,
    word: Vec<usize>,
}

impl Transversal {
    pub fn new(diagram: YoungDiagram, word: Vec<usize>) -> Result<Self> {
        diagram.ensure_proper()?;
        let n = diagram.size();
        if word.len() != n {
            return Err(Error::InvalidTransversal(format!("word has {} entries, diagram has size {n}", word.len())));
        }
        let mut seen = vec![false; n + 1];
        for (i, &row) in word.iter().enumerate() {
            if row == 0 || row > n || seen[row] {
                return Err(Error::InvalidTransversal(format!("{word:?} is not a permutation")));
            }
            seen[row] = true;
            if !diagram.contains(Cell::new(row, i + 1)) {
                return Err(Error::CellOutside { row, col: i + 1 });
            }
        }
        Ok(Transversal { diagram, word })
    }

    /// Parses a one-line word (`"51324"` or `"7 6 9 2 10 1 4 5 3 8"`).
    pub fn parse(diagram: YoungDiagram, s: &str) -> Result<Self> {
        let word = pattern::parse_word(s).map_err(|e| Error::InvalidTransversal(e.to_string()))?;
        Transversal::new(diagram, word)
    }

    pub fn from_dots(diagram: YoungDiagram, dots: &[Cell]) -> Result<Self> {
        let n = diagram.size();
        let mut word = vec![0; n];
        for d in dots {
            if d.col == 0 || d.col > n || word[d.col - 1] != 0 {
                return Err(Error::InvalidTransversal(format!("bad dot set {dots:?}")));
            }
            word[d.col - 1] = d.row;
        }
        Transversal::new(diagram, word)
    }

    pub(crate) fn new_unchecked(diagram: YoungDiagram, word: Vec<usize>) -> Self {
        debug_assert!(Transversal::new(diagram.clone(), word.clone()).is_ok());
        Transversal { diagram, word }
    }

    pub fn diagram(&self) -> &YoungDiagram {
        &self.diagram
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn row_of(&self, col: usize) -> usize {
        self.word[col - 1]
    }

    pub fn col_of(&self, row: usize) -> usize {
        self.word.iter().position(|&r| r == row).expect("every row has a dot") + 1
    }

    /// Dots ordered by column.
    pub fn dots(&self) -> Vec<Cell> {
        self.word.iter().enumerate().map(|(i, &r)| Cell::new(r, i + 1)).collect()
    }

    pub fn inversions(&self) -> usize {
        pattern::inversions(&self.word)
    }

    pub fn contains(&self, tau: &Pattern) -> bool {
        find_occurrence(&self.diagram, &self.dots(), tau).is_some()
    }

    pub fn avoids(&self, tau: &Pattern) -> bool {
        !self.contains(tau)
    }

    pub fn avoids_all(&self, taus: &[Pattern]) -> bool {
        taus.iter().all(|t| self.avoids(t))
    }

    /// Every landing occurrence of `tau`, as sorted column lists.
    pub fn occurrences(&self, tau: &Pattern) -> Vec<Vec<usize>> {
        occurrences(&self.diagram, &self.dots(), tau)
            .into_iter()
            .map(|occ| occ.iter().map(|c| c.col).collect())
            .collect()
    }

    /// Pattern formed by the `i` highest dots, read left to right.
    pub fn top_pattern(&self, i: usize) -> Pattern {
        let n = self.size();
        let rows: Vec<usize> = self.word.iter().copied().filter(|&r| r + i > n).collect();
        Pattern::standardize(&rows)
    }

    /// Pattern formed by the `i` leftmost dots.
    pub fn left_pattern(&self, i: usize) -> Pattern {
        Pattern::standardize(&self.word[..i])
    }

    /// `T¹`: the left-to-right maxima.
    pub fn first_subsequence(&self) -> Vec<Cell> {
        first_subsequence(&self.dots())
    }

    /// `T²`: dots outside `T¹` whose upper-left dots all lie in `T¹`.
    pub fn second_subsequence(&self) -> Vec<Cell> {
        second_subsequence(&self.dots())
    }

    /// Dots that nothing (12)-dominates.
    pub fn primary_subsequence(&self) -> Vec<Cell> {
        primary_subsequence(&self.diagram, &self.dots())
    }

    /// Dots (12)-dominated by primary dots only.
    pub fn secondary_subsequence(&self) -> Vec<Cell> {
        secondary_subsequence(&self.diagram, &self.dots())
    }
}

impl fmt::Display for Transversal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        pattern::write_word(f, &self.word)
    }
}

impl fmt::Debug for Transversal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self}) on {:?}", self.diagram)
    }
}

/// Dots with at most one per row and column, not necessarily inside a
/// diagram. Kept sorted by column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct PartialTransversal {
    dots: Vec<Cell>,
}

impl PartialTransversal {
    pub fn new(mut dots: Vec<Cell>) -> Result<Self> {
        dots.sort_by_key(|d| d.col);
        for (i, a) in dots.iter().enumerate() {
            if dots[i + 1..].iter().any(|b| b.row == a.row || b.col == a.col) {
                return Err(Error::InvalidTransversal(format!("two dots share a line in {dots:?}")));
            }
        }
        Ok(PartialTransversal { dots })
    }

    pub fn dots(&self) -> &[Cell] {
        &self.dots
    }

    pub fn len(&self) -> usize {
        self.dots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dots.is_empty()
    }

    /// Row pattern of the dots read left to right.
    pub fn pattern(&self) -> Pattern {
        Pattern::standardize(&self.dots.iter().map(|d| d.row).collect::<Vec<_>>())
    }
}

impl From<&Transversal> for PartialTransversal {
    fn from(t: &Transversal) -> Self {
        PartialTransversal { dots: t.dots() }
    }
}

/// Whether the column of the rightmost dot meets the row of the lowest dot
/// inside the diagram.
pub fn lands(diagram: &YoungDiagram, dots: &[Cell]) -> bool {
    let (Some(low), Some(right)) = (dots.iter().map(|d| d.row).min(), dots.iter().map(|d| d.col).max()) else {
        return true;
    };
    diagram.contains(Cell::new(low, right))
}

fn search_occurrences(
    diagram: &YoungDiagram,
    dots: &[Cell],
    tau: &[usize],
    chosen: &mut Vec<Cell>,
    start: usize,
    out: &mut Vec<Vec<Cell>>,
    first_only: bool,
) {
    let pos = chosen.len();
    if pos == tau.len() {
        if lands(diagram, chosen) {
            out.push(chosen.clone());
        }
        return;
    }
    for i in start..dots.len() {
        if dots.len() - i < tau.len() - pos {
            break;
        }
        let d = dots[i];
        let consistent = chosen.iter().enumerate().all(|(q, c)| (tau[q] < tau[pos]) == (c.row < d.row));
        if consistent {
            chosen.push(d);
            search_occurrences(diagram, dots, tau, chosen, i + 1, out, first_only);
            chosen.pop();
            if first_only && !out.is_empty() {
                return;
            }
        }
    }
}

/// All landing occurrences of `tau` among `dots` (which must be sorted by
/// column).
pub fn occurrences(diagram: &YoungDiagram, dots: &[Cell], tau: &Pattern) -> Vec<Vec<Cell>> {
    let mut out = Vec::new();
    search_occurrences(diagram, dots, tau.word(), &mut Vec::new(), 0, &mut out, false);
    out
}

pub fn find_occurrence(diagram: &YoungDiagram, dots: &[Cell], tau: &Pattern) -> Option<Vec<Cell>> {
    let mut out = Vec::new();
    search_occurrences(diagram, dots, tau.word(), &mut Vec::new(), 0, &mut out, true);
    out.pop()
}

/// `a` (21)-dominates `b`: `a` sits up and to the left of `b`.
fn dominates_21(a: Cell, b: Cell) -> bool {
    a.col < b.col && a.row > b.row
}

/// `a` (12)-dominates `b`: `b a` is increasing and lands.
pub fn dominates_12(diagram: &YoungDiagram, a: Cell, b: Cell) -> bool {
    b.col < a.col && b.row < a.row && diagram.contains(Cell::new(b.row, a.col))
}

pub fn first_subsequence(dots: &[Cell]) -> Vec<Cell> {
    dots.iter().copied().filter(|&d| !dots.iter().any(|&a| dominates_21(a, d))).collect()
}

pub fn second_subsequence(dots: &[Cell]) -> Vec<Cell> {
    let first = first_subsequence(dots);
    dots.iter()
        .copied()
        .filter(|d| !first.contains(d))
        .filter(|&d| dots.iter().filter(|&&a| dominates_21(a, d)).all(|a| first.contains(a)))
        .collect()
}

pub fn primary_subsequence(diagram: &YoungDiagram, dots: &[Cell]) -> Vec<Cell> {
    dots.iter().copied().filter(|&d| !dots.iter().any(|&a| dominates_12(diagram, a, d))).collect()
}

pub fn secondary_subsequence(diagram: &YoungDiagram, dots: &[Cell]) -> Vec<Cell> {
    let primary = primary_subsequence(diagram, dots);
    dots.iter()
        .copied()
        .filter(|d| !primary.contains(d))
        .filter(|&d| dots.iter().filter(|&&a| dominates_12(diagram, a, d)).all(|a| primary.contains(a)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(y: &str, w: &str) -> Transversal {
        Transversal::parse(y.parse().unwrap(), w).unwrap()
    }

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn landing_example() {
        let tr = t("5,5,4,4,3", "51324");
        assert!(tr.contains(&p("312")));
        assert!(tr.contains(&p("321")));
        assert!(!tr.contains(&p("213")));
        assert!(tr.contains(&p("1")));
        assert!(tr.contains(&Pattern::empty()));
        // (324) is a 213 shape but does not land
        assert!(tr.occurrences(&p("213")).is_empty());
    }

    #[test]
    fn invalid_transversals() {
        let y: YoungDiagram = "5,5,4,4,3".parse().unwrap();
        assert!(Transversal::parse(y.clone(), "23451").is_err());
        assert!(Transversal::parse(y.clone(), "5132").is_err());
        assert!(Transversal::parse(y, "51334").is_err());
        assert!(Transversal::parse("3,1,1".parse().unwrap(), "123").is_err());
    }

    #[test]
    fn subsequences_of_example() {
        let tr = t("5,5,4,4,3", "51324");
        assert_eq!(tr.first_subsequence(), vec![Cell::new(5, 1)]);
        let rows: Vec<usize> = tr.second_subsequence().iter().map(|c| c.row).collect();
        assert_eq!(rows, vec![1, 3, 4]);
        let id = t("4,4,4,4", "1234");
        assert_eq!(id.first_subsequence().len(), 4);
        assert!(id.second_subsequence().is_empty());
    }

    #[test]
    fn boundary_patterns() {
        let tr = t("5,5,5,5,5", "31524");
        assert_eq!(tr.top_pattern(2), p("21"));
        assert_eq!(tr.left_pattern(2), p("21"));
        assert_eq!(tr.top_pattern(3), p("132"));
    }

    #[test]
    fn partial_transversal_rejects_clashes() {
        assert!(PartialTransversal::new(vec![Cell::new(1, 1), Cell::new(1, 2)]).is_err());
        let pt = PartialTransversal::new(vec![Cell::new(3, 5), Cell::new(1, 2)]).unwrap();
        assert_eq!(pt.pattern(), p("12"));
    }
}
