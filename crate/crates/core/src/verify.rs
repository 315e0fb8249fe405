//! Exhaustive verification suites. Each returns a [`SuiteReport`]. Work is
//! spread over diagrams with rayon and gathered back in diagram order, so a
//! report does not depend on the thread count.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::bijections::{
    apply_move, build_dominance_graph, confluence_report, decompose_213_at, phi_fibers, psi, psi_inverse,
    strictness_witness_213, strictness_witness_312, MoveKind,
};
use crate::coloring::{
    construct_saturating_pair, count_saturating, difference_audit, induced_white, saturates, saturation_census,
    splitting_formula_count,
};
use crate::diagram::{Cell, YoungDiagram};
use crate::formulas::{
    catalan, closed_form_st3, closed_form_yn, fibonacci, st3_middle_recurrence, sw_limit_estimate, triple_catalan_sum,
    yn_312_minus_321, yn_312_set_difference, Family, GOLDEN_RATIO_SQUARED,
};
use crate::pattern::Pattern;
use crate::report::{Check, Provenance, SuiteReport};
use crate::search::{self, all_transversals, count_avoiders, enumerate_avoiders, Constraint};
use crate::splitting::{constrained, recursive_count, unzeta, verify_splitting_law, zeta};
use crate::transversal::{first_subsequence, second_subsequence, Transversal};

use Provenance::{ClosedForm, Enumeration, Recursion};

fn pat(s: &str) -> Pattern {
    s.parse().expect("fixed pattern")
}

/// Runs `f` on every diagram in parallel and records the checks in order.
fn sweep<F>(suite: &str, diagrams: &[YoungDiagram], f: F) -> SuiteReport
where
    F: Fn(&YoungDiagram) -> Vec<Check> + Sync,
{
    let batches: Vec<Vec<Check>> = diagrams.par_iter().map(&f).collect();
    let mut report = SuiteReport::new(suite);
    batches.into_iter().flatten().for_each(|c| report.record(c));
    report.note(format!("{suite}: {} diagrams", diagrams.len()));
    report
}

fn max_index(y: &YoungDiagram) -> Option<usize> {
    y.max_critical_index()
}

/// `|S_Y(213)| ≤ |S_Y(123)| ≤ |S_Y(312)|`, plus the shape-Wilf classes
/// `(213) ~ (132)` and `(123) ~ (231) ~ (321)`.
pub fn main_theorem(max_size: usize) -> SuiteReport {
    let diagrams = YoungDiagram::proper_diagrams_up_to(max_size);
    sweep("main-theorem", &diagrams, |y| {
        let c = |s: &str| count_avoiders(y, &pat(s));
        let (low, mid, high) = (c("213"), c("123"), c("312"));
        vec![
            Check::holds("|S(213)| <= |S(123)|", low <= mid, format!("{low} > {mid}"), Enumeration)
                .on(y)
                .with_pattern("213,123"),
            Check::holds("|S(123)| <= |S(312)|", mid <= high, format!("{mid} > {high}"), Enumeration)
                .on(y)
                .with_pattern("123,312"),
            Check::equal("(132) ~ (213)", &low, c("132"), Enumeration).on(y).with_pattern("132"),
            Check::equal("(231) ~ (123)", &mid, c("231"), Enumeration).on(y).with_pattern("231"),
            Check::equal("(321) ~ (123)", &mid, c("321"), Enumeration).on(y).with_pattern("321"),
        ]
    })
}

/// Strictness of each inequality against the critical indices of `Y`.
pub fn theorem2(max_size: usize) -> SuiteReport {
    let diagrams = YoungDiagram::proper_diagrams_up_to(max_size);
    let mut report = sweep("theorem2", &diagrams, |y| {
        let c = |s: &str| count_avoiders(y, &pat(s));
        let (low, mid, high) = (c("213"), c("123"), c("312"));
        let deep = max_index(y).unwrap_or(0);
        vec![
            Check::equal("213 < 123 iff some index >= 2", deep >= 2, low < mid, Enumeration)
                .on(y)
                .with_pattern(format!("{low} vs {mid}")),
            Check::equal("123 < 312 iff some index >= 3", deep >= 3, mid < high, Enumeration)
                .on(y)
                .with_pattern(format!("{mid} vs {high}")),
        ]
    });
    let strict = diagrams.iter().filter(|y| max_index(y).is_some_and(|i| i >= 2)).count();
    report.note(format!("{strict} diagrams with a critical point of index >= 2"));
    report
}

/// The Catalan recursions against enumeration, and the equal (312)/(321)
/// counts under each left-two constraint, on diagrams whose critical points
/// all have index at most 2.
pub fn recursions(max_size: usize) -> SuiteReport {
    let eligible: Vec<YoungDiagram> = YoungDiagram::proper_diagrams_up_to(max_size)
        .into_iter()
        .filter(|y| max_index(y).is_none_or(|i| i <= 2))
        .collect();
    sweep("recursions", &eligible, |y| {
        let mut checks = Vec::new();
        for s in ["312", "321"] {
            let sigma = pat(s);
            let rec = recursive_count(y, &sigma).map_or_else(|e| e.to_string(), |c| c.to_string());
            checks.push(Check::equal("recursion", count_avoiders(y, &sigma), rec, Recursion).on(y).with_pattern(s));
        }
        if y.size() >= 2 {
            for (label, constraint) in [("left-down", Constraint::left_down()), ("left-up", Constraint::left_up())] {
                let a = constrained(y, &pat("312"), &constraint).expect("two columns");
                let b = constrained(y, &pat("321"), &constraint).expect("two columns");
                checks.push(
                    Check::equal(format!("{label} (312) = (321)"), a, b, Enumeration).on(y).with_pattern("312,321"),
                );
            }
        }
        checks
    })
}

/// `φ: S_Y(312) → S_Y(321)` is onto, with a fiber of size two or more
/// exactly when `Y` has a critical point of index at least 3.
pub fn phi_suite(max_size: usize) -> SuiteReport {
    let diagrams = YoungDiagram::proper_diagrams_up_to(max_size);
    let mut report = sweep("phi", &diagrams, |y| {
        let s = phi_fibers(y).expect("proper").summary();
        let deep = max_index(y).is_some_and(|i| i >= 3);
        vec![
            Check::equal("phi onto", s.codomain, s.image, Enumeration).on(y).with_pattern("312->321"),
            Check::equal("domain is S_Y(312)", count_avoiders(y, &pat("312")), s.domain, Enumeration).on(y),
            Check::equal("a fiber of size > 1 iff some index >= 3", deep, !s.multiple.is_empty(), Enumeration).on(y),
        ]
    });
    if max_size >= 5 {
        let y5 = YoungDiagram::corner_deleted(5).expect("n >= 2");
        let s = phi_fibers(&y5).expect("proper").summary();
        report.record(
            Check::equal("fibers of Y_5", "[([3, 1, 5, 2, 4], 2)]", format!("{:?}", s.multiple), Enumeration).on(&y5),
        );
    }
    report
}

/// `ψ: S_Y(213) → S_Y(123)` is injective, replayable by its move script and
/// undone by `psi_inverse`; the strictness witnesses lie outside the image.
pub fn psi_suite(max_size: usize) -> SuiteReport {
    let diagrams = YoungDiagram::proper_diagrams_up_to(max_size);
    sweep("psi", &diagrams, |y| {
        let domain = enumerate_avoiders(y, &[pat("213")]);
        let codomain = count_avoiders(y, &pat("123"));
        let mut images = BTreeSet::new();
        let mut bad: Option<String> = None;
        for t in &domain {
            let verdict = psi(t).map_err(|e| e.to_string()).and_then(|out| {
                if out.image.contains(&pat("123")) {
                    return Err(format!("psi({t}) = {} contains (123)", out.image));
                }
                if out.replay(t).ok().as_ref() != Some(&out.image) {
                    return Err(format!("script of {t} does not replay"));
                }
                if psi_inverse(&out.image).ok().flatten().as_ref() != Some(t) {
                    return Err(format!("psi_inverse(psi({t})) != {t}"));
                }
                Ok(out.image)
            });
            match verdict {
                Ok(image) => {
                    images.insert(image);
                }
                Err(e) => {
                    bad.get_or_insert(e);
                }
            }
        }
        let mut checks = vec![
            Check::holds("psi round trip", bad.is_none(), bad.unwrap_or_default(), Enumeration)
                .on(y)
                .with_pattern("213->123"),
            Check::equal("psi injective", domain.len(), images.len(), Enumeration).on(y),
            Check::holds(
                "image fits in S_Y(123)",
                BigUint::from(images.len()) <= codomain,
                format!("{} > {codomain}", images.len()),
                Enumeration,
            )
            .on(y),
        ];
        if let Ok(t) = strictness_witness_213(y) {
            let outside = t.avoids(&pat("123")) && psi_inverse(&t).ok().flatten().is_none();
            checks.push(Check::holds("213 witness outside the image", outside, t.to_string(), Enumeration).on(y));
        }
        if let Ok((a, b)) = strictness_witness_312(y) {
            let ok = a != b && a.avoids(&pat("312")) && b.avoids(&pat("312"));
            checks.push(Check::holds("312 witness pair", ok, format!("{a} / {b}"), Enumeration).on(y));
        }
        checks
    })
}

/// Runs every (213)→(123) move order. Divergence would refute an open
/// conjecture, so it is reported as a note rather than a failure.
pub fn confluence_suite(max_size: usize) -> SuiteReport {
    let mut report = SuiteReport::new("confluence");
    for kind in [MoveKind::From213To123, MoveKind::From123To213] {
        let r = confluence_report(max_size, kind);
        report.note(format!(
            "{kind}: {} start points over {} diagrams up to size {max_size}, {} with several endpoints",
            r.transversals,
            r.diagrams,
            r.divergent.len()
        ));
    }
    report
}

pub fn bijections(max_size: usize) -> SuiteReport {
    let mut report = SuiteReport::new("bijections");
    report.merge(phi_suite(max_size));
    report.merge(psi_suite(max_size));
    report.merge(confluence_suite(max_size.min(6)));
    report
}

/// `ζ_P` round trips, respects every pattern of length 3, and the counting
/// law at each critical point matches enumeration.
pub fn zeta_suite(max_size: usize) -> SuiteReport {
    let diagrams = YoungDiagram::proper_diagrams_up_to(max_size);
    let patterns = Pattern::all(3);
    sweep("zeta", &diagrams, |y| {
        let mut checks = Vec::new();
        let transversals = all_transversals(y);
        for cp in y.critical_points() {
            let mut bad: Option<String> = None;
            for t in &transversals {
                let split = zeta(t, cp.point).expect("critical point");
                if unzeta(y, cp.point, &split.left, &split.right).ok().as_ref() != Some(t) {
                    bad.get_or_insert(format!("round trip of {t}"));
                }
                if y.size() <= 6 {
                    for sigma in &patterns {
                        if t.avoids(sigma) != (split.left.avoids(sigma) && split.right.avoids(sigma)) {
                            bad.get_or_insert(format!("{t} and {sigma}"));
                        }
                    }
                }
            }
            let at = format!("P=({}, {})", cp.point.x, cp.point.y);
            checks
                .push(Check::holds(format!("zeta at {at}"), bad.is_none(), bad.unwrap_or_default(), Enumeration).on(y));
            for sigma in &patterns {
                let law = verify_splitting_law(y, cp.point, sigma).expect("critical point");
                checks.push(
                    Check::equal(format!("{:?} law at {at}", law.law), law.lhs, law.rhs, Enumeration)
                        .on(y)
                        .with_pattern(sigma),
                );
            }
        }
        checks
    })
}

/// The splitting formula against direct counts of `(α|γ)`, the exchange
/// property behind it, and the monotone consequence for (213) and (123).
pub fn splitting_formula_suite(max_size: usize) -> SuiteReport {
    let diagrams = YoungDiagram::proper_diagrams_up_to(max_size);
    let alphas: Vec<Pattern> = Pattern::all(3).into_iter().chain(Pattern::all(2)).collect();
    let gammas = [pat("1"), pat("12"), pat("21")];
    sweep("splitting-formula", &diagrams, |y| {
        let mut checks = Vec::new();
        for gamma in &gammas {
            let census = saturation_census(y, gamma);
            for alpha in &alphas {
                let via_formula: BigUint =
                    census.iter().map(|(w, sat)| count_avoiders(w, alpha) * BigUint::from(*sat)).sum();
                let block = Pattern::block(alpha, gamma);
                checks.push(
                    Check::equal("splitting formula", count_avoiders(y, &block), via_formula, Enumeration)
                        .on(y)
                        .with_pattern(&block),
                );
            }
        }
        let (alpha, gamma) = (pat("213"), pat("1"));
        let block = Pattern::block(&alpha, &gamma);
        let mut bad: Option<String> = None;
        for t in enumerate_avoiders(y, std::slice::from_ref(&block)) {
            let split = induced_white(&t, &gamma);
            for other in enumerate_avoiders(&split.white, std::slice::from_ref(&alpha)) {
                let glued = split.glue(&other).expect("same white diagram");
                if induced_white(&glued, &gamma).white != split.white || glued.contains(&block) {
                    bad.get_or_insert(format!("{t} with {other}"));
                }
            }
        }
        checks.push(Check::holds("exchange on W", bad.is_none(), bad.unwrap_or_default(), Enumeration).on(y));
        let (low, high) = (count_avoiders(y, &pat("3241")), count_avoiders(y, &pat("2341")));
        checks.push(
            Check::holds("(213|1) <= (123|1)", low <= high, format!("{low} > {high}"), Enumeration)
                .on(y)
                .with_pattern("3241,2341"),
        );
        checks
    })
}

/// The worked splitting example on `M_7` with `γ = (1)`.
pub fn seven_square_example() -> SuiteReport {
    let mut report = SuiteReport::new("m7-example");
    let m7 = YoungDiagram::square(7);
    let one = pat("1");
    for a in ["213", "123", "312"] {
        let alpha = pat(a);
        let block = Pattern::block(&alpha, &one);
        report.record(
            Check::equal(
                "splitting formula",
                count_avoiders(&m7, &block),
                splitting_formula_count(&m7, &alpha, &one),
                Enumeration,
            )
            .on(&m7)
            .with_pattern(&block),
        );
    }
    let rows = difference_audit(&m7, &pat("213"), &pat("123"), &one);
    let total: BigUint = rows.iter().map(|r| (&r.upper - &r.lower) * &r.saturating).sum();
    report.record(Check::equal("difference (123|1) - (213|1)", 21u32, &total, Enumeration).on(&m7));
    let direct = count_avoiders(&m7, &pat("2341")) - count_avoiders(&m7, &pat("3241"));
    report.record(Check::equal("difference by enumeration", direct, &total, Enumeration).on(&m7));
    let mut terms: Vec<String> =
        rows.iter().map(|r| format!("{}:({}-{})x{}", r.white, r.upper, r.lower, r.saturating)).collect();
    terms.sort();
    report.record(
        Check::equal(
            "difference terms",
            "4,4,4,3:(13-12)x9 | 5,5,5,4,4:(37-33)x1 | 5,5,5,5,3:(37-33)x1 | 5,5,5,5,4:(41-37)x1",
            terms.join(" | "),
            Enumeration,
        )
        .on(&m7),
    );
    let y = YoungDiagram::new(&[5, 5, 5, 4, 4]).expect("valid rows");
    report.record(
        Check::equal("|S(213)|", 33u32, count_avoiders(&y, &pat("213")), Enumeration).on(&y).with_pattern("213"),
    );
    report.record(
        Check::equal("|S(123)|", 37u32, count_avoiders(&y, &pat("123")), Enumeration).on(&y).with_pattern("123"),
    );
    report
}

pub fn splitting(max_size: usize) -> SuiteReport {
    let mut report = SuiteReport::new("splitting");
    report.merge(zeta_suite(max_size));
    report.merge(splitting_formula_suite(max_size.min(6)));
    if max_size >= 7 {
        report.merge(seven_square_example());
    }
    report
}

/// Closed forms and recurrences against enumeration and each other.
pub fn closed_forms(max_n: usize) -> SuiteReport {
    let mut report = SuiteReport::new("closed-forms");
    let patterns = Pattern::all(3);
    for n in 1..=max_n {
        let st3 = YoungDiagram::staircase(3, n).expect("n >= 1");
        for sigma in &patterns {
            if let Ok(formula) = closed_form_st3(sigma, n as u64) {
                report.record(
                    Check::equal("St3 closed form", count_avoiders(&st3, sigma), formula, ClosedForm)
                        .on(&st3)
                        .with_pattern(sigma),
                );
            }
        }
        if n >= 2 {
            let yn = YoungDiagram::corner_deleted(n).expect("n >= 2");
            for sigma in &patterns {
                let formula = closed_form_yn(sigma, n as u64).expect("n >= 2");
                report.record(
                    Check::equal("Y_n closed form", count_avoiders(&yn, sigma), formula, ClosedForm)
                        .on(&yn)
                        .with_pattern(sigma),
                );
            }
            // M_n and Y_n differ by the corner cell b = (1, n)
            let diff = yn_312_set_difference(n as u64).expect("n >= 2");
            let square = enumerate_avoiders(&YoungDiagram::square(n), &[pat("312")]);
            let dotted = square.iter().filter(|t| t.row_of(n) == 1).count();
            report
                .record(Check::equal("M_n (312) with a dot on the corner", &diff.dotted_b, dotted, ClosedForm).on(&yn));
            let landing = count_avoiders(&yn, &pat("312")) + BigUint::from(dotted) - BigUint::from(square.len());
            report.record(
                Check::equal("Y_n (312) landing only on the corner", diff.landing_on_b, landing, ClosedForm).on(&yn),
            );
        }
    }
    for n in 1..=40u64 {
        let rec = st3_middle_recurrence(n).expect("n >= 1");
        report.record(Check::equal(format!("St3 (123) recurrence n={n}"), fibonacci(2 * n - 1), rec, Recursion));
    }
    for n in 2..=12u64 {
        let lhs = catalan(n) - BigUint::from(2u32) * catalan(n - 1);
        report.record(Check::equal(format!("triple Catalan sum n={n}"), lhs, triple_catalan_sum(n), ClosedForm));
    }
    for n in 2..=30u64 {
        let (c, d) = (num_bigint::BigInt::from(catalan(n)), num_bigint::BigInt::from(catalan(n - 1)));
        let expected = &c - 3 * &d + 1;
        let actual = yn_312_minus_321(n).expect("n >= 2");
        report.record(Check::equal(format!("Y_n (312)-(321) n={n}"), expected, actual, ClosedForm));
    }
    let limit = sw_limit_estimate(Family::St3, &pat("321"), 20).expect("formula available");
    let last = limit.terms.last().and_then(|t| t.ratio).unwrap_or(f64::NAN);
    report.record(Check::holds(
        "St3 (321) ratio at n=20",
        (last - GOLDEN_RATIO_SQUARED).abs() < 1e-6,
        format!("{last}"),
        Recursion,
    ));
    report
}

/// The saturating pair construction and the multiplicities in `M_7`.
pub fn saturation() -> SuiteReport {
    let mut report = SuiteReport::new("saturation");
    for k in 1..=3 {
        for tau in Pattern::all(k) {
            for n in 2 * k + 2..=12 {
                let pair = construct_saturating_pair(n, &tau).expect("n >= 2k + 2");
                let w = YoungDiagram::corner_deleted(n - 2 * k).expect("n - 2k >= 2");
                let ok = saturates(&pair, &w, &YoungDiagram::square(n), &tau);
                report.record(
                    Check::holds(
                        format!("pair saturates Y_{}", n - 2 * k),
                        ok,
                        format!("{:?}", pair.dots()),
                        Enumeration,
                    )
                    .on(format!("M_{n}"))
                    .with_pattern(&tau),
                );
            }
        }
    }
    let m7 = YoungDiagram::square(7);
    let one = pat("1");
    for (rows, expected) in [(vec![5, 5, 5, 5, 4], 1u32), (vec![5, 5, 5, 4, 4], 1), (vec![4, 4, 4, 3], 9)] {
        let w = YoungDiagram::new(&rows).expect("valid rows");
        report.record(
            Check::equal("saturating sets in M_7", expected, count_saturating(&m7, &w, &one), Enumeration).on(&w),
        );
    }
    report
}

fn first_failure<T>(items: impl IntoIterator<Item = T>, test: impl Fn(&T) -> Option<String>) -> Option<String> {
    items.into_iter().find_map(|t| test(&t))
}

fn decompositions(t: &Transversal) -> Vec<usize> {
    (1..=t.diagram().row_len(1)).filter(|&j| decompose_213_at(t, j).is_some_and(|d| !d.is_trivial())).collect()
}

/// Structural facts checked on every transversal: rectangle fill, diagonal
/// cells, `T = T¹ ⊔ T²` for (321)-avoiders, the dominance forest for
/// (312)-avoiders, and the effect of single moves.
pub fn structure(max_size: usize) -> SuiteReport {
    let diagrams = YoungDiagram::proper_diagrams_up_to(max_size);
    sweep("structure", &diagrams, |y| {
        let transversals = all_transversals(y);
        let points = y.critical_points();
        let rect = first_failure(&transversals, |t| {
            points.iter().find_map(|cp| {
                let inside = t.dots().iter().filter(|d| d.col <= cp.point.x && d.row > cp.point.y).count();
                (inside != cp.index).then(|| format!("{t}: {inside} dots above-left of P, index {}", cp.index))
            })
        });
        let diag = first_failure(&transversals, |t| {
            let first = first_subsequence(&t.dots());
            let above = first.iter().all(|d| d.row >= d.col);
            let hit = (1..=y.size()).all(|r| first.iter().any(|d| d.row >= r && d.col <= r));
            (!(above && hit)).then(|| t.to_string())
        });
        let split_321 = first_failure(search::enumerate_avoiders(y, &[pat("321")]), |t| {
            let dots = t.dots();
            let mut both: Vec<Cell> = first_subsequence(&dots).into_iter().chain(second_subsequence(&dots)).collect();
            both.sort_by_key(|c| c.col);
            (both != dots).then(|| t.to_string())
        });
        let forest = first_failure(search::enumerate_avoiders(y, &[pat("312")]), |t| {
            let g = build_dominance_graph(t).ok()?;
            let ok = g.trees_are_trees()
                && g.trees_avoid_12()
                && g.components_are_consecutive()
                && g.components_are_increasing()
                && g.covers(t);
            (!ok).then(|| t.to_string())
        });
        let moves = first_failure(&transversals, |t| {
            let before = decompositions(t);
            for kind in [MoveKind::From213To123, MoveKind::From123To213, MoveKind::From312To321, MoveKind::From321To312]
            {
                for occ in t.occurrences(&kind.source()) {
                    let Ok(next) = apply_move(t, kind, &occ) else { continue };
                    let down = matches!(kind, MoveKind::From213To123 | MoveKind::From321To312);
                    let monotone =
                        if down { next.inversions() < t.inversions() } else { next.inversions() > t.inversions() };
                    if !monotone {
                        return Some(format!("{kind} at {occ:?} on {t}"));
                    }
                    if matches!(kind, MoveKind::From213To123 | MoveKind::From123To213)
                        && decompositions(&next) != before
                    {
                        return Some(format!("{kind} at {occ:?} on {t} changes the decompositions"));
                    }
                }
            }
            None
        });
        [
            ("rectangle fill", rect),
            ("diagonal cells", diag),
            ("T = T1 + T2 on S_Y(321)", split_321),
            ("dominance forest on S_Y(312)", forest),
            ("moves monotone, decompositions kept", moves),
        ]
        .into_iter()
        .map(|(label, bad)| Check::holds(label, bad.is_none(), bad.unwrap_or_default(), Enumeration).on(y))
        .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for report in [main_theorem(5), theorem2(5), recursions(5), bijections(4), splitting(4), structure(4)] {
            assert!(report.passed(), "{report:?}");
            assert!(report.checked > 0);
        }
    }

    #[test]
    fn failures_name_both_sides() {
        let mut r = SuiteReport::new("x");
        r.record(Check::equal("c", 1, 2, Enumeration).on("2,1"));
        assert_eq!(r.failures[0].expected, "1");
        assert_eq!(r.failures[0].diagram.as_deref(), Some("2,1"));
    }
}
