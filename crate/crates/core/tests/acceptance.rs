//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use shapewilf::bijections::{phi_fibers, MoveKind};
use shapewilf::coloring::{
    construct_saturating_pair, count_saturating, difference_audit, saturates, splitting_formula_count,
};
use shapewilf::formulas::{
    closed_form_st3, closed_form_yn, fibonacci, st3_middle_recurrence, sw_limit_estimate, Family, GOLDEN_RATIO_SQUARED,
};
use shapewilf::report::SuiteReport;
use shapewilf::verify;
use shapewilf::{count_avoiders, Pattern, YoungDiagram};

fn pat(s: &str) -> Pattern {
    s.parse().unwrap()
}

fn n(v: u64) -> BigUint {
    BigUint::from(v)
}

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_report(r: SuiteReport) -> Self {
        let detail = match r.failures.first() {
            None => format!("{} checks", r.checked),
            Some(f) => format!(
                "{} of {} failed; first: {} on {} ({}): expected {}, got {}",
                r.failed,
                r.checked,
                f.label,
                f.diagram.as_deref().unwrap_or("-"),
                f.pattern.as_deref().unwrap_or("-"),
                f.expected,
                f.actual
            ),
        };
        Outcome { passed: r.passed(), detail }
    }

    fn all(parts: Vec<(&str, bool)>) -> Self {
        let failed: Vec<&str> = parts.iter().filter(|(_, ok)| !ok).map(|(l, _)| *l).collect();
        Outcome {
            passed: failed.is_empty(),
            detail: if failed.is_empty() { format!("{} checks", parts.len()) } else { failed.join("; ") },
        }
    }
}

fn distinguishing() -> Outcome {
    let y = YoungDiagram::new(&[5, 5, 5, 5, 4]).unwrap();
    let start = Instant::now();
    let got: Vec<BigUint> = ["213", "123", "312"].iter().map(|s| count_avoiders(&y, &pat(s))).collect();
    let fast = start.elapsed() < Duration::from_secs(1);
    Outcome::all(vec![("counts 37/41/42", got == [n(37), n(41), n(42)]), ("under 1 s", fast)])
}

fn four_pattern_counts() -> Outcome {
    let c = |k: usize, s: &str| count_avoiders(&YoungDiagram::square(k), &pat(s));
    Outcome::all(vec![
        ("S_6(3241) = 512", c(6, "3241") == n(512)),
        ("S_6(2341) = 513", c(6, "2341") == n(513)),
        ("S_6(4231) = 513", c(6, "4231") == n(513)),
        ("S_7(3241) = 2740", c(7, "3241") == n(2740)),
        ("S_7(2341) = 2761", c(7, "2341") == n(2761)),
        ("S_7(4231) = 2762", c(7, "4231") == n(2762)),
    ])
}

fn splitting_audit() -> Outcome {
    let m7 = YoungDiagram::square(7);
    let one = pat("1");
    let mut parts: Vec<(String, bool)> = ["213", "123", "312"]
        .iter()
        .map(|a| {
            let alpha = pat(a);
            let direct = count_avoiders(&m7, &Pattern::block(&alpha, &one));
            (format!("formula for ({a}|1)"), splitting_formula_count(&m7, &alpha, &one) == direct)
        })
        .collect();
    let rows = difference_audit(&m7, &pat("213"), &pat("123"), &one);
    let total: BigUint = rows.iter().map(|r| (&r.upper - &r.lower) * &r.saturating).sum();
    parts.push(("difference 21".into(), total == n(21)));
    let small = |v: &BigUint| u64::try_from(v).unwrap();
    let mut sorted: Vec<(u64, u64, u64)> =
        rows.iter().map(|r| (small(&r.upper), small(&r.lower), small(&r.saturating))).collect();
    sorted.sort();
    parts.push((
        "terms (13-12)x9, (37-33)x1 twice, (41-37)x1".into(),
        sorted == [(13, 12, 9), (37, 33, 1), (37, 33, 1), (41, 37, 1)],
    ));
    let y = YoungDiagram::new(&[5, 5, 5, 4, 4]).unwrap();
    parts.push((
        "Y(5,5,5,4,4): 33 and 37".into(),
        count_avoiders(&y, &pat("213")) == n(33) && count_avoiders(&y, &pat("123")) == n(37),
    ));
    let parts = parts.iter().map(|(l, ok)| (l.as_str(), *ok)).collect();
    Outcome::all(parts)
}

fn closed_forms() -> Outcome {
    let mut parts = Vec::new();
    for sigma in Pattern::all(3) {
        for k in 1..=9usize {
            if k >= 2 {
                let yn = YoungDiagram::corner_deleted(k).unwrap();
                parts.push(closed_form_yn(&sigma, k as u64).unwrap() == count_avoiders(&yn, &sigma));
            }
            if let Ok(formula) = closed_form_st3(&sigma, k as u64) {
                parts.push(formula == count_avoiders(&YoungDiagram::staircase(3, k).unwrap(), &sigma));
            }
        }
    }
    let ok = parts.iter().all(|&b| b);
    Outcome { passed: ok, detail: format!("{} formula/enumeration pairs", parts.len()) }
}

fn fibonacci_limit() -> Outcome {
    let enumerated = (1..=9u64)
        .all(|k| count_avoiders(&YoungDiagram::staircase(3, k as usize).unwrap(), &pat("123")) == fibonacci(2 * k - 1));
    let recursed = (1..=40u64).all(|k| st3_middle_recurrence(k).unwrap() == fibonacci(2 * k - 1));
    let est = sw_limit_estimate(Family::St3, &pat("321"), 20).unwrap();
    let ratio = est.terms.last().unwrap().ratio.unwrap();
    Outcome::all(vec![
        ("enumeration n <= 9", enumerated),
        ("recursion n <= 40", recursed),
        ("ratio at n = 20 within 1e-6", (ratio - GOLDEN_RATIO_SQUARED).abs() < 1e-6),
    ])
}

fn bijection_suites() -> Outcome {
    let mut report = verify::phi_suite(7);
    report.merge(verify::psi_suite(6));
    let y5 = YoungDiagram::corner_deleted(5).unwrap();
    let s = phi_fibers(&y5).unwrap().summary();
    let y5_ok = s.multiple == [(vec![3, 1, 5, 2, 4], 2)];
    let mut out = Outcome::from_report(report);
    if !y5_ok {
        out.passed = false;
        out.detail = format!("Y_5 fibers {:?}; {}", s.multiple, out.detail);
    }
    out
}

fn saturation() -> Outcome {
    let mut ok = true;
    for k in 1..=3 {
        for tau in Pattern::all(k) {
            for size in 2 * k + 2..=12 {
                let pair = construct_saturating_pair(size, &tau).unwrap();
                let w = YoungDiagram::corner_deleted(size - 2 * k).unwrap();
                ok &= saturates(&pair, &w, &YoungDiagram::square(size), &tau);
            }
        }
    }
    let m7 = YoungDiagram::square(7);
    let mult: Vec<BigUint> = [vec![5, 5, 5, 5, 4], vec![5, 5, 5, 4, 4], vec![4, 4, 4, 3]]
        .iter()
        .map(|rows| count_saturating(&m7, &YoungDiagram::new(rows).unwrap(), &pat("1")))
        .collect();
    Outcome::all(vec![
        ("pairs saturate for k <= 3, n <= 12", ok),
        ("M_7 multiplicities 1/1/9", mult == [n(1), n(1), n(9)]),
    ])
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("1 distinguishing diagram Y(5,5,5,5,4)", Box::new(distinguishing)),
        ("2 four-pattern counts on M_6, M_7", Box::new(four_pattern_counts)),
        ("3 main theorem sweep, size <= 8", Box::new(|| Outcome::from_report(verify::main_theorem(8)))),
        ("4 strictness iff critical index, size <= 8", Box::new(|| Outcome::from_report(verify::theorem2(8)))),
        ("5 splitting formula audit on M_7", Box::new(splitting_audit)),
        ("6 closed forms for Y_n and St3_n, n <= 9", Box::new(closed_forms)),
        ("7 Catalan recursions, size <= 8", Box::new(|| Outcome::from_report(verify::recursions(8)))),
        ("8 phi (size <= 7) and psi (size <= 6)", Box::new(bijection_suites)),
        ("9 saturation", Box::new(saturation)),
        ("10 Fibonacci counts and St3 limit", Box::new(fibonacci_limit)),
        ("11 structural properties, size <= 6", Box::new(|| Outcome::from_report(verify::structure(6)))),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let out = run();
        let secs = start.elapsed().as_secs_f64();
        println!("{} {name} [{secs:.1}s] {}", if out.passed { "PASS" } else { "FAIL" }, out.detail);
        failed += usize::from(!out.passed);
    }
    let confluence = shapewilf::bijections::confluence_report(6, MoveKind::From213To123);
    println!(
        "note (213)->(123) moves up to size 6: {} start points, {} with several endpoints",
        confluence.transversals,
        confluence.divergent.len()
    );
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
