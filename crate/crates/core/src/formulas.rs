//! Closed forms and recurrences for the named diagram families, and growth
//! rate estimates along those families.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::diagram::YoungDiagram;
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::report::Provenance;
use crate::search;

/// `(1 + √5) / 2`.
pub const GOLDEN_RATIO: f64 = 1.618_033_988_749_895;

/// `(3 + √5) / 2`, the square of [`GOLDEN_RATIO`].
pub const GOLDEN_RATIO_SQUARED: f64 = 2.618_033_988_749_895;

pub fn catalan(n: u64) -> BigUint {
    // c_{k+1} = c_k · 2(2k+1) / (k+2), exact at every step
    let mut c = BigUint::one();
    for k in 0..n {
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    c
}

/// `f_n` with `f_0 = 0`, `f_1 = f_2 = 1`.
pub fn fibonacci(n: u64) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// The three shape-Wilf classes of `S_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ShapeClass {
    /// (213) and (132).
    Low,
    /// (123), (231) and (321).
    Middle,
    /// (312).
    High,
}

impl ShapeClass {
    pub fn of(sigma: &Pattern) -> Result<Self> {
        match sigma.word() {
            [2, 1, 3] | [1, 3, 2] => Ok(ShapeClass::Low),
            [1, 2, 3] | [2, 3, 1] | [3, 2, 1] => Ok(ShapeClass::Middle),
            [3, 1, 2] => Ok(ShapeClass::High),
            _ => Err(Error::InvalidPattern(format!("{sigma:?} is not in S_3"))),
        }
    }
}

/// `|S_{Y_n}(σ)|` for `σ ∈ S_3`, `n ≥ 2`.
pub fn closed_form_yn(sigma: &Pattern, n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("Y_n needs n >= 2, got {n}")));
    }
    Ok(match ShapeClass::of(sigma)? {
        ShapeClass::Low => catalan(n) - catalan(n - 2),
        ShapeClass::Middle => catalan(n) - 1u32,
        ShapeClass::High => catalan(n) * 2u32 - catalan(n - 1) * 3u32,
    })
}

/// `|S_{St³_n}(σ)|` for `σ ∈ S_3`.
pub fn closed_form_st3(sigma: &Pattern, n: u64) -> Result<BigUint> {
    match ShapeClass::of(sigma)? {
        ShapeClass::Low => {
            if n < 2 {
                return Err(Error::OutOfRange(format!("this branch needs n >= 2, got {n}")));
            }
            // 2^{n-3} (n + 2), written to stay integral at n = 2
            Ok((BigUint::one() << (n - 2)) * (n + 2) / 2u32)
        }
        _ => {
            if n < 1 {
                return Err(Error::OutOfRange("n must be positive".into()));
            }
            Ok(fibonacci(2 * n - 1))
        }
    }
}

/// `a_n = 2 a_{n-1} + 2^{n-3}` from `a_2 = 2`.
pub fn st3_low_recurrence(n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("recurrence starts at n = 2, got {n}")));
    }
    let mut a = BigUint::from(2u32);
    for m in 3..=n {
        a = a * 2u32 + (BigUint::one() << (m - 3));
    }
    Ok(a)
}

/// `b_n = 3 b_{n-1} - b_{n-2}` from `b_1 = 1`, `b_2 = 2`.
pub fn st3_middle_recurrence(n: u64) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::OutOfRange("recurrence starts at n = 1".into()));
    }
    let (mut prev, mut cur) = (BigUint::one(), BigUint::from(2u32));
    if n == 1 {
        return Ok(prev);
    }
    for _ in 3..=n {
        let next = &cur * 3u32 - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// The two correction terms comparing (312)-avoiders on `M_n` and `Y_n`,
/// where `b` is the bottom-right cell of `M_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct YnDifference {
    /// (312)-avoiders of `M_n` with a dot on `b`: `c_{n-1}`.
    #[serde(serialize_with = "crate::report::decimal")]
    pub dotted_b: BigUint,
    /// (312)-avoiders of `Y_n` whose only (312) on `M_n` lands on `b`:
    /// `c_n - 2 c_{n-1}`.
    #[serde(serialize_with = "crate::report::decimal")]
    pub landing_on_b: BigUint,
}

pub fn yn_312_set_difference(n: u64) -> Result<YnDifference> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("needs n >= 2, got {n}")));
    }
    Ok(YnDifference { dotted_b: catalan(n - 1), landing_on_b: catalan(n) - catalan(n - 1) * 2u32 })
}

/// `Σ c_i c_j c_k` over `i + j + k = n - 2` with `j ≥ 1`.
pub fn triple_catalan_sum(n: u64) -> BigUint {
    let Some(m) = n.checked_sub(2) else { return BigUint::zero() };
    let mut total = BigUint::zero();
    for j in 1..=m {
        for i in 0..=m - j {
            total += catalan(i) * catalan(j) * catalan(m - i - j);
        }
    }
    total
}

/// `|S_{Y_n}(312)| - |S_{Y_n}(321)| = (n-5)(2n-2)! / ((n+1)!(n-1)!) + 1`.
pub fn yn_312_minus_321(n: u64) -> Result<num_bigint::BigInt> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("needs n >= 2, got {n}")));
    }
    use num_bigint::BigInt;
    let numerator = BigInt::from(n as i64 - 5) * BigInt::from(factorial(2 * n - 2));
    Ok(numerator / BigInt::from(factorial(n + 1) * factorial(n - 1)) + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// The squares `M_n`.
    Squares,
    /// The staircases `St³_n`.
    St3,
    /// The corner-deleted squares `Y_n`.
    Yn,
}

impl Family {
    pub fn diagram(self, n: usize) -> Result<YoungDiagram> {
        match self {
            Family::Squares => Ok(YoungDiagram::square(n)),
            Family::St3 => YoungDiagram::staircase(3, n),
            Family::Yn => YoungDiagram::corner_deleted(n),
        }
    }

    pub fn first_index(self) -> u64 {
        match self {
            Family::Yn => 2,
            _ => 1,
        }
    }

    /// An exact count from a formula, when one is known.
    pub fn closed_form(self, tau: &Pattern, n: u64) -> Option<(BigUint, Provenance)> {
        ShapeClass::of(tau).ok()?;
        match self {
            Family::Squares => Some((catalan(n), Provenance::ClosedForm)),
            Family::Yn => closed_form_yn(tau, n).ok().map(|c| (c, Provenance::ClosedForm)),
            Family::St3 => match ShapeClass::of(tau).ok()? {
                ShapeClass::Low => st3_low_recurrence(n).ok().map(|c| (c, Provenance::Recursion)),
                _ => st3_middle_recurrence(n).ok().map(|c| (c, Provenance::Recursion)),
            },
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "squares" | "square" | "m" => Ok(Family::Squares),
            "st3" | "staircase" => Ok(Family::St3),
            "yn" | "corner" => Ok(Family::Yn),
            _ => Err(Error::OutOfRange(format!("unknown family `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitTerm {
    pub n: u64,
    #[serde(serialize_with = "crate::report::decimal")]
    pub count: BigUint,
    pub source: Provenance,
    /// `count^{1/n}`.
    pub root: f64,
    /// `count_n / count_{n-1}`.
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitEstimate {
    pub family: Family,
    pub pattern: Pattern,
    pub terms: Vec<LimitTerm>,
}

/// Largest size counted by enumeration when no formula applies.
pub const ENUMERATION_CAP: u64 = 11;

fn ratio(a: &BigUint, b: &BigUint) -> Option<f64> {
    if b.is_zero() {
        return None;
    }
    // scale both down so the quotient survives conversion
    let shift = a.bits().max(b.bits()).saturating_sub(1000);
    Some((a >> shift).to_f64()? / (b >> shift).to_f64()?)
}

fn nth_root(a: &BigUint, n: u64) -> f64 {
    let bits = a.bits();
    let shift = bits.saturating_sub(60);
    let mantissa = (a >> shift).to_f64().unwrap_or(0.0);
    ((mantissa.ln() + shift as f64 * std::f64::consts::LN_2) / n as f64).exp()
}

/// Counts along a family, by formula where available, otherwise by
/// enumeration up to [`ENUMERATION_CAP`].
pub fn sw_limit_estimate(family: Family, tau: &Pattern, n_max: u64) -> Result<LimitEstimate> {
    let mut terms: Vec<LimitTerm> = Vec::new();
    for n in family.first_index()..=n_max {
        let (count, source) = match family.closed_form(tau, n) {
            Some(hit) => hit,
            None if n <= ENUMERATION_CAP => (
                search::count_avoiders_parallel(&family.diagram(n as usize)?, std::slice::from_ref(tau)),
                Provenance::Enumeration,
            ),
            None => {
                return Err(Error::OutOfRange(format!(
                    "no formula for {tau:?} and n = {n} exceeds the enumeration cap {ENUMERATION_CAP}"
                )))
            }
        };
        let ratio = terms.last().and_then(|prev| ratio(&count, &prev.count));
        terms.push(LimitTerm { n, root: nth_root(&count, n), ratio, count, source });
    }
    Ok(LimitEstimate { family, pattern: tau.clone(), terms })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u64,
    pub pattern: Pattern,
    #[serde(serialize_with = "crate::report::decimal")]
    pub count: BigUint,
    pub source: Provenance,
}

/// `|S_n(π)|` for each `n` and pattern, with the ordering of each row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub rows: Vec<TableRow>,
    /// One line per `n`, e.g. `512 < 513 = 513`, following the pattern order.
    pub orderings: Vec<(u64, String)>,
}

pub fn wilf_table(ns: impl IntoIterator<Item = u64>, patterns: &[Pattern]) -> Result<CountTable> {
    let mut rows = Vec::new();
    let mut orderings = Vec::new();
    for n in ns {
        let mut counts = Vec::new();
        for tau in patterns {
            let (count, source) = if n <= ENUMERATION_CAP {
                (
                    search::count_avoiders_parallel(&YoungDiagram::square(n as usize), std::slice::from_ref(tau)),
                    Provenance::Enumeration,
                )
            } else {
                Family::Squares
                    .closed_form(tau, n)
                    .ok_or_else(|| Error::OutOfRange(format!("n = {n} exceeds the enumeration cap for {tau:?}")))?
            };
            counts.push(count.clone());
            rows.push(TableRow { n, pattern: tau.clone(), count, source });
        }
        let mut line = String::new();
        for (i, c) in counts.iter().enumerate() {
            if i > 0 {
                let rel = match counts[i - 1].cmp(c) {
                    std::cmp::Ordering::Less => "<",
                    std::cmp::Ordering::Equal => "=",
                    std::cmp::Ordering::Greater => ">",
                };
                line.push_str(&format!(" {rel} "));
            }
            line.push_str(&c.to_string());
        }
        orderings.push((n, line));
    }
    Ok(CountTable { rows, orderings })
}
