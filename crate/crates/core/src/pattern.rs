use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=k` in one-line notation. The empty pattern is
/// allowed and is contained in everything.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Pattern(Vec<usize>);

impl Pattern {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let k = word.len();
        let mut seen = vec![false; k + 1];
        for &v in &word {
            if v == 0 || v > k || seen[v] {
                return Err(Error::InvalidPattern(format!("{word:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Pattern(word))
    }

    /// The relative order of an arbitrary sequence of distinct values.
    pub fn standardize(values: &[usize]) -> Self {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by_key(|&i| values[i]);
        let mut word = vec![0; values.len()];
        for (rank, i) in order.into_iter().enumerate() {
            word[i] = rank + 1;
        }
        Pattern(word)
    }

    pub fn empty() -> Self {
        Pattern(Vec::new())
    }

    pub fn identity(k: usize) -> Self {
        Pattern((1..=k).collect())
    }

    pub fn reversed_identity(k: usize) -> Self {
        Pattern((1..=k).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    /// `(α|γ)`: α shifted above γ, followed by γ.
    pub fn block(alpha: &Pattern, gamma: &Pattern) -> Pattern {
        let k = gamma.len();
        Pattern(alpha.0.iter().map(|v| v + k).chain(gamma.0.iter().copied()).collect())
    }

    /// All permutations of length `k` in lexicographic order.
    pub fn all(k: usize) -> Vec<Pattern> {
        let mut out = Vec::new();
        let mut word: Vec<usize> = (1..=k).collect();
        loop {
            out.push(Pattern(word.clone()));
            let Some(i) = (1..k).rev().find(|&i| word[i - 1] < word[i]) else { break };
            let j = (i..k).rev().find(|&j| word[j] > word[i - 1]).expect("successor exists");
            word.swap(i - 1, j);
            word[i..].reverse();
        }
        out
    }

    pub fn inversions(&self) -> usize {
        inversions(&self.0)
    }

    /// Parses a comma-separated list of patterns.
    pub fn parse_set(s: &str) -> Result<Vec<Pattern>> {
        s.split(',').map(str::parse).collect()
    }
}

pub(crate) fn inversions(word: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                count += 1;
            }
        }
    }
    count
}

/// Parses a one-line word: space separated (`"7 6 10 1"`) or compact
/// (`"51324"`, single digits only).
pub(crate) fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let bad = |t: &str| Error::InvalidPattern(format!("cannot parse `{t}`"));
    if s.contains(char::is_whitespace) {
        s.split_whitespace().map(|t| t.parse().map_err(|_| bad(t))).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad(s))).collect()
    }
}

impl TryFrom<Vec<usize>> for Pattern {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self> {
        Pattern::new(word)
    }
}

impl From<Pattern> for Vec<usize> {
    fn from(p: Pattern) -> Self {
        p.0
    }
}

/// Accepts one-line words and block notation such as `213|1` or `4|132`,
/// where each block is standardized before composing.
impl FromStr for Pattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Pattern::empty());
        }
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        if s.contains('|') {
            let blocks = s.split('|').map(|b| Ok(Pattern::standardize(&parse_word(b)?))).collect::<Result<Vec<_>>>()?;
            let mut iter = blocks.into_iter().rev();
            let last = iter.next().unwrap_or_default();
            return Ok(iter.fold(last, |acc, b| Pattern::block(&b, &acc)));
        }
        Pattern::new(parse_word(s)?)
    }
}

impl Default for Pattern {
    fn default() -> Self {
        Pattern::empty()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.0)
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

pub(crate) fn write_word(f: &mut fmt::Formatter<'_>, word: &[usize]) -> fmt::Result {
    let compact = word.iter().all(|&v| v < 10);
    let parts: Vec<String> = word.iter().map(|v| v.to_string()).collect();
    write!(f, "{}", parts.join(if compact { "" } else { " " }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn block_composition() {
        assert_eq!(Pattern::block(&p("213"), &p("1")), p("3241"));
        assert_eq!(p("213|1"), p("3241"));
        assert_eq!(p("4|132"), p("4132"));
        assert_eq!(Pattern::block(&p("312"), &Pattern::empty()), p("312"));
    }

    #[test]
    fn parsing() {
        assert_eq!(p("5 1 3 2 4"), p("51324"));
        assert!("112".parse::<Pattern>().is_err());
        assert!("1a".parse::<Pattern>().is_err());
        assert_eq!(Pattern::parse_set("312,321").unwrap(), vec![p("312"), p("321")]);
        assert_eq!(p("10 9 8 7 6 5 4 3 2 1").to_string(), "10 9 8 7 6 5 4 3 2 1");
    }

    #[test]
    fn all_permutations() {
        let s3 = Pattern::all(3);
        assert_eq!(s3.len(), 6);
        assert_eq!(s3[0], p("123"));
        assert_eq!(s3[5], p("321"));
        assert_eq!(Pattern::all(0), vec![Pattern::empty()]);
        assert_eq!(Pattern::standardize(&[7, 3, 9]), p("213"));
    }
}
