//! Pruned depth-first enumeration of pattern-avoiding transversals.
//!
//! Columns are filled left to right. A new dot can only complete an
//! occurrence in which it is the rightmost dot, and such an occurrence lands
//! exactly when the row of its lowest dot reaches the current column, so each
//! placement checks only those occurrences. A Hall-type test on the remaining
//! rows cuts branches that cannot be completed.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::diagram::YoungDiagram;
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::transversal::Transversal;

/// Restrictions on the `i` highest and/or `i` leftmost dots.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Constraint {
    /// Required pattern of the top dots, read left to right.
    pub top: Option<Pattern>,
    /// Required pattern of the leftmost dots.
    pub left: Option<Pattern>,
}

impl Constraint {
    pub fn none() -> Self {
        Constraint::default()
    }

    pub fn top(p: Pattern) -> Self {
        Constraint { top: Some(p), left: None }
    }

    pub fn left(p: Pattern) -> Self {
        Constraint { top: None, left: Some(p) }
    }

    pub fn and(self, other: Constraint) -> Self {
        Constraint { top: self.top.or(other.top), left: self.left.or(other.left) }
    }

    /// Top two dots increasing (`S^↗`).
    pub fn top_up() -> Self {
        Constraint::top(Pattern::identity(2))
    }

    pub fn top_down() -> Self {
        Constraint::top(Pattern::reversed_identity(2))
    }

    /// Two leftmost dots increasing (`S_↗`).
    pub fn left_up() -> Self {
        Constraint::left(Pattern::identity(2))
    }

    pub fn left_down() -> Self {
        Constraint::left(Pattern::reversed_identity(2))
    }

    fn needed(&self) -> usize {
        let t = self.top.as_ref().map_or(0, Pattern::len);
        let l = self.left.as_ref().map_or(0, Pattern::len);
        t.max(l)
    }

    fn accepts(&self, word: &[usize]) -> bool {
        let n = word.len();
        if let Some(top) = &self.top {
            let k = top.len();
            let rows: Vec<usize> = word.iter().copied().filter(|&r| r + k > n).collect();
            if Pattern::standardize(&rows) != *top {
                return false;
            }
        }
        if let Some(left) = &self.left {
            if Pattern::standardize(&word[..left.len()]) != *left {
                return false;
            }
        }
        true
    }
}

struct Search<'a> {
    n: usize,
    /// `len[r]` is the length of row `r`; `len[0]` is unused.
    len: Vec<usize>,
    /// `lowest[x]`: the lowest row reaching column `x`.
    lowest: Vec<usize>,
    patterns: &'a [Vec<usize>],
    word: Vec<usize>,
    used: u64,
}

impl<'a> Search<'a> {
    fn new(y: &YoungDiagram, patterns: &'a [Vec<usize>]) -> Self {
        let n = y.size();
        assert!(n < 64, "search supports diagrams below size 64");
        assert!(patterns.iter().all(|p| p.len() <= 16), "patterns longer than 16 are not supported");
        let mut len = vec![0];
        len.extend_from_slice(y.lengths());
        let lowest = (0..=n + 1).map(|x| (1..=n).find(|&r| len[r] >= x).unwrap_or(n + 1)).collect();
        Search { n, len, lowest, patterns, word: Vec::with_capacity(n), used: 0 }
    }

    /// Can the columns after the current prefix still be filled?
    fn feasible(&self) -> bool {
        let placed = self.word.len();
        let free = !self.used & (((1u64 << self.n) - 1) << 1);
        (placed + 1..=self.n).all(|x| {
            let mask = !((1u64 << self.lowest[x]) - 1);
            (free & mask).count_ones() as usize > self.n - x
        })
    }

    /// Does the last placed dot finish an occurrence of `pat` as its
    /// rightmost dot?
    fn completes(&self, pat: &[usize]) -> bool {
        let k = pat.len();
        let x = self.word.len();
        if k > x {
            return false;
        }
        if k <= 1 {
            return true;
        }
        let mut chosen = [0usize; 16];
        chosen[k - 1] = self.word[x - 1];
        self.extend(pat, k - 1, x - 1, x, &mut chosen)
    }

    fn extend(&self, pat: &[usize], pos: usize, bound: usize, x: usize, chosen: &mut [usize; 16]) -> bool {
        if pos == 0 {
            return true;
        }
        let p = pos - 1;
        for c in (p..bound).rev() {
            let row = self.word[c];
            if pat[p] == 1 && self.len[row] < x {
                continue;
            }
            let ok = (pos..pat.len()).all(|q| (pat[p] < pat[q]) == (row < chosen[q]));
            if ok {
                chosen[p] = row;
                if self.extend(pat, p, c, x, chosen) {
                    return true;
                }
            }
        }
        false
    }

    fn run<F: FnMut(&[usize])>(&mut self, visit: &mut F) {
        let x = self.word.len() + 1;
        if x > self.n {
            visit(&self.word);
            return;
        }
        for row in self.lowest[x]..=self.n {
            if self.used & (1 << row) != 0 {
                continue;
            }
            self.word.push(row);
            self.used |= 1 << row;
            if self.feasible() && !self.patterns.iter().any(|p| self.completes(p)) {
                self.run(visit);
            }
            self.used &= !(1 << row);
            self.word.pop();
        }
    }
}

fn words(patterns: &[Pattern]) -> Vec<Vec<usize>> {
    patterns.iter().map(|p| p.word().to_vec()).collect()
}

/// Calls `visit` with the word of every transversal of `y` avoiding all
/// `patterns`, in lexicographic order. Non-proper diagrams have none.
pub fn for_each_avoider<F: FnMut(&[usize])>(y: &YoungDiagram, patterns: &[Pattern], mut visit: F) {
    if !y.is_proper() || patterns.iter().any(Pattern::is_empty) {
        return;
    }
    let pats = words(patterns);
    Search::new(y, &pats).run(&mut visit);
}

pub fn count_avoiders(y: &YoungDiagram, tau: &Pattern) -> BigUint {
    count_avoiders_all(y, std::slice::from_ref(tau))
}

/// Transversals avoiding every pattern in `patterns` simultaneously.
pub fn count_avoiders_all(y: &YoungDiagram, patterns: &[Pattern]) -> BigUint {
    BigUint::from(count_u64(y, patterns))
}

pub(crate) fn count_u64(y: &YoungDiagram, patterns: &[Pattern]) -> u64 {
    let mut count = 0u64;
    for_each_avoider(y, patterns, |_| count += 1);
    count
}

/// Same count, with the search tree split by the first column's dot and the
/// subtrees counted on the rayon pool.
pub fn count_avoiders_parallel(y: &YoungDiagram, patterns: &[Pattern]) -> BigUint {
    if !y.is_proper() || y.is_empty() || patterns.iter().any(Pattern::is_empty) {
        return count_avoiders_all(y, patterns);
    }
    let pats = words(patterns);
    let n = y.size();
    let total: u64 = (1..=n)
        .into_par_iter()
        .map(|row| {
            let mut s = Search::new(y, &pats);
            if row < s.lowest[1] {
                return 0;
            }
            s.word.push(row);
            s.used |= 1 << row;
            if !s.feasible() || s.patterns.iter().any(|p| s.completes(p)) {
                return 0;
            }
            let mut count = 0u64;
            s.run(&mut |_| count += 1);
            count
        })
        .sum();
    BigUint::from(total)
}

pub fn enumerate_avoiders(y: &YoungDiagram, patterns: &[Pattern]) -> Vec<Transversal> {
    let mut out = Vec::new();
    for_each_avoider(y, patterns, |w| out.push(Transversal::new_unchecked(y.clone(), w.to_vec())));
    out
}

/// Every transversal of `y`.
pub fn all_transversals(y: &YoungDiagram) -> Vec<Transversal> {
    enumerate_avoiders(y, &[])
}

pub fn count_avoiders_constrained(y: &YoungDiagram, patterns: &[Pattern], constraint: &Constraint) -> Result<BigUint> {
    let needed = constraint.needed();
    if needed > y.size() {
        return Err(Error::ConstraintTooLarge { needed, actual: y.size() });
    }
    let mut count = 0u64;
    for_each_avoider(y, patterns, |w| {
        if constraint.accepts(w) {
            count += 1;
        }
    });
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn distinguishing_diagram() {
        let d = y("5,5,5,5,4");
        assert_eq!(count_avoiders(&d, &p("213")), n(37));
        assert_eq!(count_avoiders(&d, &p("123")), n(41));
        assert_eq!(count_avoiders(&d, &p("312")), n(42));
        assert_eq!(count_avoiders_all(&d, &[p("312"), p("321")]), n(21));
    }

    #[test]
    fn corner_deleted_four() {
        let d = y("4,4,4,3");
        assert_eq!(count_avoiders(&d, &p("213")), n(12));
        assert_eq!(count_avoiders(&d, &p("123")), n(13));
        assert_eq!(count_avoiders(&d, &p("312")), n(13));
    }

    #[test]
    fn trivial_counts() {
        assert_eq!(count_avoiders(&YoungDiagram::square(1), &p("12")), n(1));
        assert_eq!(count_avoiders(&YoungDiagram::square(3), &p("123")), n(5));
        assert_eq!(count_avoiders(&y("3,1,1"), &p("12")), n(0));
        assert_eq!(count_avoiders(&YoungDiagram::empty(), &p("12")), n(1));
        assert_eq!(count_avoiders(&YoungDiagram::square(3), &Pattern::empty()), n(0));
        assert_eq!(all_transversals(&y("2,1")).len(), 1);
    }

    #[test]
    fn enumeration_is_sorted_and_consistent() {
        let d = y("5,5,5,5,4");
        let all = enumerate_avoiders(&d, &[p("312"), p("321")]);
        assert_eq!(all.len(), 21);
        assert!(all.windows(2).all(|w| w[0].word() < w[1].word()));
        assert!(all.iter().all(|t| t.avoids(&p("312")) && t.avoids(&p("321"))));
    }

    #[test]
    fn parallel_matches_sequential() {
        for d in YoungDiagram::proper_diagrams(6) {
            for tau in Pattern::all(3) {
                assert_eq!(count_avoiders_parallel(&d, std::slice::from_ref(&tau)), count_avoiders(&d, &tau));
            }
        }
    }

    #[test]
    fn constrained_counts() {
        let m2 = YoungDiagram::square(2);
        assert_eq!(count_avoiders_constrained(&m2, &[p("312")], &Constraint::top_down()).unwrap(), n(1));
        let err = count_avoiders_constrained(&YoungDiagram::square(1), &[], &Constraint::top_up());
        assert!(matches!(err, Err(Error::ConstraintTooLarge { .. })));
        let both = Constraint::top_up().and(Constraint::left_down());
        let m4 = YoungDiagram::square(4);
        let direct = enumerate_avoiders(&m4, &[p("321")])
            .iter()
            .filter(|t| t.top_pattern(2) == p("12") && t.left_pattern(2) == p("21"))
            .count() as u64;
        assert_eq!(count_avoiders_constrained(&m4, &[p("321")], &both).unwrap(), n(direct));
    }
}
