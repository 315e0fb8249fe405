mod common;

use num_bigint::BigUint;
use shapewilf::search::count_avoiders_constrained;
use shapewilf::{count_avoiders, count_avoiders_all, enumerate_avoiders, Constraint, Pattern, YoungDiagram};

fn diagram(rows: &[usize]) -> YoungDiagram {
    YoungDiagram::new(rows).unwrap()
}

fn pat(s: &str) -> Pattern {
    s.parse().unwrap()
}

#[test]
fn proper_diagrams_match_the_oracle() {
    for n in 1..=7 {
        let ours: Vec<Vec<usize>> = YoungDiagram::proper_diagrams(n).iter().map(|y| y.rows_top_first()).collect();
        let mut theirs = common::proper(n);
        theirs.sort();
        theirs.reverse();
        assert_eq!(ours, theirs);
        assert_eq!(ours.len() as u64, common::catalan(n as u64));
    }
}

#[test]
fn pruned_search_matches_naive_filter() {
    let mut patterns = Pattern::all(3);
    patterns.extend(["3241", "2341", "4231", "1", "12", "21"].map(pat));
    for n in 1..=6 {
        for rows in common::proper(n) {
            let y = diagram(&rows);
            let lengths = common::lengths(&rows);
            for tau in &patterns {
                let expected = common::count(&lengths, &[tau.word()]);
                assert_eq!(count_avoiders(&y, tau), BigUint::from(expected), "{y} {tau}");
            }
        }
    }
}

#[test]
fn joint_avoidance_matches_naive_filter() {
    for rows in common::proper(5) {
        let lengths = common::lengths(&rows);
        let expected = common::count(&lengths, &[&[3, 1, 2], &[3, 2, 1]]);
        let got = count_avoiders_all(&diagram(&rows), &[pat("312"), pat("321")]);
        assert_eq!(got, BigUint::from(expected));
    }
    let y = diagram(&[5, 5, 5, 5, 4]);
    assert_eq!(enumerate_avoiders(&y, &[pat("312"), pat("321")]).len(), 21);
}

#[test]
fn distinguishing_diagram_and_corner_deleted_four() {
    let y = diagram(&[5, 5, 5, 5, 4]);
    let counts: Vec<BigUint> = ["213", "123", "312"].map(|s| count_avoiders(&y, &pat(s))).into();
    assert_eq!(counts, [37u32, 41, 42].map(BigUint::from));
    let y4 = diagram(&[4, 4, 4, 3]);
    assert_eq!(count_avoiders(&y4, &pat("213")), BigUint::from(12u32));
    assert_eq!(count_avoiders(&y4, &pat("123")), BigUint::from(13u32));
}

#[test]
fn squares_give_catalan_numbers() {
    for n in 1..=10 {
        let m = YoungDiagram::square(n);
        for tau in Pattern::all(3) {
            assert_eq!(count_avoiders(&m, &tau), BigUint::from(common::catalan(n as u64)), "M_{n} {tau}");
        }
    }
}

#[test]
fn length_four_squares() {
    let m6 = YoungDiagram::square(6);
    assert_eq!(count_avoiders(&m6, &pat("213|1")), BigUint::from(512u32));
    assert_eq!(count_avoiders(&m6, &pat("2341")), BigUint::from(513u32));
    assert_eq!(count_avoiders(&m6, &pat("4231")), BigUint::from(513u32));
}

#[test]
fn left_constraints_partition_avoiders() {
    for y in YoungDiagram::proper_diagrams_up_to(6).into_iter().filter(|y| y.size() >= 2) {
        for tau in Pattern::all(3) {
            let t = std::slice::from_ref(&tau);
            let up = count_avoiders_constrained(&y, t, &Constraint::left_up()).unwrap();
            let down = count_avoiders_constrained(&y, t, &Constraint::left_down()).unwrap();
            assert_eq!(up + down, count_avoiders(&y, &tau));
            let up = count_avoiders_constrained(&y, t, &Constraint::top_up()).unwrap();
            let down = count_avoiders_constrained(&y, t, &Constraint::top_down()).unwrap();
            assert_eq!(up + down, count_avoiders(&y, &tau));
        }
    }
    let one = YoungDiagram::square(1);
    assert!(count_avoiders_constrained(&one, &[pat("12")], &Constraint::left_up()).is_err());
}

#[test]
fn enumeration_is_lexicographic() {
    let y = diagram(&[5, 5, 5, 5, 4]);
    let words: Vec<Vec<usize>> = enumerate_avoiders(&y, &[pat("213")]).iter().map(|t| t.word().to_vec()).collect();
    let lengths = common::lengths(&[5, 5, 5, 5, 4]);
    let oracle: Vec<Vec<usize>> =
        common::transversals(&lengths).into_iter().filter(|w| !common::contains(&lengths, w, &[2, 1, 3])).collect();
    assert_eq!(words, oracle);
}
