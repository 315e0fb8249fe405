//! A deliberately naive oracle: every permutation, every subset of columns.

#![allow(dead_code)]

use itertools::Itertools;

/// Row lengths from the bottom up.
pub fn lengths(rows_top_first: &[usize]) -> Vec<usize> {
    rows_top_first.iter().rev().copied().collect()
}

/// Words `w` (column `c` holds row `w[c-1]`) whose dots all lie inside.
pub fn transversals(lengths: &[usize]) -> Vec<Vec<usize>> {
    let n = lengths.len();
    (1..=n).permutations(n).filter(|w| w.iter().enumerate().all(|(i, &r)| i < lengths[r - 1])).collect()
}

fn standardize(values: &[usize]) -> Vec<usize> {
    values.iter().map(|v| values.iter().filter(|u| u <= &v).count()).collect()
}

/// Some `k` columns carry the pattern and the cell in the lowest dot's row
/// and the rightmost dot's column is inside the diagram.
pub fn contains(lengths: &[usize], word: &[usize], tau: &[usize]) -> bool {
    if tau.is_empty() {
        return true;
    }
    (0..word.len()).combinations(tau.len()).any(|cols| {
        let rows: Vec<usize> = cols.iter().map(|&c| word[c]).collect();
        let lowest = *rows.iter().min().unwrap();
        let rightmost = cols[cols.len() - 1] + 1;
        standardize(&rows) == tau && rightmost <= lengths[lowest - 1]
    })
}

pub fn count(lengths: &[usize], taus: &[&[usize]]) -> u64 {
    transversals(lengths).iter().filter(|w| taus.iter().all(|t| !contains(lengths, w, t))).count() as u64
}

/// Every proper diagram of size `n` as top-first rows: the staircase below
/// the anti-diagonal must be covered.
pub fn proper(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let i = prefix.len();
        let hi = prefix.last().copied().unwrap_or(n);
        for a in n - i..=hi {
            prefix.push(a);
            go(n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

pub fn catalan(n: u64) -> u64 {
    (0..n).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}
