use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::diagram::{Cell, YoungDiagram};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::search;
use crate::transversal::{lands, Transversal};

/// A rearrangement of one landing three-dot occurrence inside its own frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MoveKind {
    #[serde(rename = "213->123")]
    From213To123,
    #[serde(rename = "123->213")]
    From123To213,
    #[serde(rename = "312->321")]
    From312To321,
    #[serde(rename = "321->312")]
    From321To312,
}

impl MoveKind {
    pub fn source(self) -> Pattern {
        let w = match self {
            MoveKind::From213To123 => [2, 1, 3],
            MoveKind::From123To213 => [1, 2, 3],
            MoveKind::From312To321 => [3, 1, 2],
            MoveKind::From321To312 => [3, 2, 1],
        };
        Pattern::new(w.to_vec()).expect("fixed permutation")
    }

    pub fn target(self) -> Pattern {
        self.inverse().source()
    }

    pub fn inverse(self) -> MoveKind {
        match self {
            MoveKind::From213To123 => MoveKind::From123To213,
            MoveKind::From123To213 => MoveKind::From213To123,
            MoveKind::From312To321 => MoveKind::From321To312,
            MoveKind::From321To312 => MoveKind::From312To321,
        }
    }

    /// Positions within the occurrence whose rows trade places.
    fn swapped(self) -> (usize, usize) {
        match self {
            MoveKind::From213To123 | MoveKind::From123To213 => (0, 1),
            MoveKind::From312To321 | MoveKind::From321To312 => (1, 2),
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.source(), self.target())
    }
}

impl FromStr for MoveKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.replace(' ', "").as_str() {
            "213->123" => Ok(MoveKind::From213To123),
            "123->213" => Ok(MoveKind::From123To213),
            "312->321" => Ok(MoveKind::From312To321),
            "321->312" => Ok(MoveKind::From321To312),
            _ => Err(Error::InvalidPattern(format!("unknown move `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Move {
    pub kind: MoveKind,
    /// Columns of the occurrence, left to right.
    pub columns: [usize; 3],
}

pub fn apply_move(t: &Transversal, kind: MoveKind, columns: &[usize]) -> Result<Transversal> {
    let bad = || Error::BadOccurrence(columns.to_vec());
    let &[a, b, c] = columns else { return Err(bad()) };
    if !(1 <= a && a < b && b < c && c <= t.size()) {
        return Err(bad());
    }
    let rows = [t.row_of(a), t.row_of(b), t.row_of(c)];
    let dots: Vec<Cell> = columns.iter().zip(rows).map(|(&col, row)| Cell::new(row, col)).collect();
    if Pattern::standardize(&rows) != kind.source() || !lands(t.diagram(), &dots) {
        return Err(bad());
    }
    let (i, j) = kind.swapped();
    let mut word = t.word().to_vec();
    word.swap(columns[i] - 1, columns[j] - 1);
    Transversal::new(t.diagram().clone(), word)
}

/// Occurrences ordered by their lowest row, then by their columns.
fn canonical_occurrence(t: &Transversal, pattern: &Pattern) -> Option<Vec<usize>> {
    t.occurrences(pattern).into_iter().min_by_key(|occ| (occ.iter().map(|&c| t.row_of(c)).min(), occ.clone()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveRun {
    pub result: Transversal,
    pub moves: Vec<Move>,
}

/// Applies moves of one kind, always on the canonical occurrence, until the
/// source pattern is gone. Each move changes the inversion count by one in a
/// fixed direction, so at most `n(n-1)/2` moves happen.
pub fn normalize_by_moves(t: &Transversal, kind: MoveKind) -> MoveRun {
    let source = kind.source();
    let mut current = t.clone();
    let mut moves = Vec::new();
    while let Some(occ) = canonical_occurrence(&current, &source) {
        current = apply_move(&current, kind, &occ).expect("canonical occurrence is valid");
        moves.push(Move { kind, columns: [occ[0], occ[1], occ[2]] });
    }
    MoveRun { result: current, moves }
}

fn endpoints_memo(
    t: &Transversal,
    kind: MoveKind,
    source: &Pattern,
    memo: &mut HashMap<Vec<usize>, BTreeSet<Vec<usize>>>,
) -> BTreeSet<Vec<usize>> {
    if let Some(hit) = memo.get(t.word()) {
        return hit.clone();
    }
    let occs = t.occurrences(source);
    let out: BTreeSet<Vec<usize>> = if occs.is_empty() {
        BTreeSet::from([t.word().to_vec()])
    } else {
        let mut acc = BTreeSet::new();
        for occ in occs {
            let next = apply_move(t, kind, &occ).expect("listed occurrence is valid");
            acc.extend(endpoints_memo(&next, kind, source, memo));
        }
        acc
    };
    memo.insert(t.word().to_vec(), out.clone());
    out
}

/// Every transversal reachable from `t` by a maximal sequence of moves.
pub fn move_endpoints(t: &Transversal, kind: MoveKind) -> BTreeSet<Vec<usize>> {
    endpoints_memo(t, kind, &kind.source(), &mut HashMap::new())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfluenceReport {
    pub kind: MoveKind,
    pub max_size: usize,
    pub diagrams: usize,
    pub transversals: usize,
    /// Starting points with more than one endpoint.
    pub divergent: Vec<(YoungDiagram, Vec<usize>, Vec<Vec<usize>>)>,
}

impl ConfluenceReport {
    pub fn confluent(&self) -> bool {
        self.divergent.is_empty()
    }
}

/// Explores all move orders from every transversal of every proper diagram
/// up to `max_size` and records any start with two distinct endpoints.
pub fn confluence_report(max_size: usize, kind: MoveKind) -> ConfluenceReport {
    let source = kind.source();
    let mut report = ConfluenceReport { kind, max_size, diagrams: 0, transversals: 0, divergent: Vec::new() };
    for y in YoungDiagram::proper_diagrams_up_to(max_size) {
        report.diagrams += 1;
        let mut memo = HashMap::new();
        for t in search::all_transversals(&y) {
            report.transversals += 1;
            let ends = endpoints_memo(&t, kind, &source, &mut memo);
            if ends.len() > 1 {
                report.divergent.push((y.clone(), t.word().to_vec(), ends.into_iter().collect()));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(y: &YoungDiagram, w: &str) -> Transversal {
        Transversal::parse(y.clone(), w).unwrap()
    }

    #[test]
    fn swap_and_back() {
        let m = YoungDiagram::square(3);
        let moved = apply_move(&t(&m, "213"), MoveKind::From213To123, &[1, 2, 3]).unwrap();
        assert_eq!(moved.word(), &[1, 2, 3]);
        let back = apply_move(&moved, MoveKind::From123To213, &[1, 2, 3]).unwrap();
        assert_eq!(back.word(), &[2, 1, 3]);
        assert!(moved.inversions() < back.inversions());
    }

    #[test]
    fn rejects_non_landing() {
        let y = YoungDiagram::corner_deleted(3).unwrap();
        let err = apply_move(&t(&y, "213"), MoveKind::From213To123, &[1, 2, 3]);
        assert!(err.is_err(), "213 in Y(3,3,2) needs cell (1,3)");
        assert!(apply_move(&t(&YoungDiagram::square(3), "132"), MoveKind::From213To123, &[1, 2, 3]).is_err());
    }

    #[test]
    fn both_preimages_reachable() {
        let y5 = YoungDiagram::corner_deleted(5).unwrap();
        let ends = move_endpoints(&t(&y5, "31524"), MoveKind::From312To321);
        assert!(ends.contains(&vec![3, 1, 5, 4, 2]));
        assert!(ends.contains(&vec![3, 2, 5, 1, 4]));
        let run = normalize_by_moves(&t(&y5, "31524"), MoveKind::From312To321);
        assert!(run.result.avoids(&"312".parse().unwrap()));
        assert!(run.moves.len() <= 10);
    }

    #[test]
    fn avoiders_are_fixed() {
        let m = YoungDiagram::square(4);
        let run = normalize_by_moves(&t(&m, "1234"), MoveKind::From213To123);
        assert!(run.moves.is_empty());
    }
}
