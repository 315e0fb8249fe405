mod common;

use proptest::prelude::*;
use shapewilf::bijections::{apply_move, psi, psi_inverse, MoveKind};
use shapewilf::splitting::{unzeta, zeta};
use shapewilf::transversal::{first_subsequence, second_subsequence};
use shapewilf::{Pattern, Transversal, YoungDiagram};

/// A proper diagram: the top row is full and row `i` from the top has at
/// least `n - i` cells.
fn diagram(max: usize) -> impl Strategy<Value = YoungDiagram> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(0.0f64..1.0, n).prop_map(move |u| {
            let mut rows = vec![n];
            for i in 1..n {
                let (lo, hi) = (n - i, rows[i - 1]);
                rows.push(lo + ((hi - lo + 1) as f64 * u[i]) as usize % (hi - lo + 1));
            }
            YoungDiagram::new(&rows).unwrap()
        })
    })
}

/// A diagram with one of its transversals, filling rows bottom-up: row `r`
/// has `L(r) - (r - 1)` free cells left, which is positive for proper shapes.
fn transversal(max: usize) -> impl Strategy<Value = Transversal> {
    (diagram(max), proptest::collection::vec(any::<usize>(), max)).prop_map(|(y, picks)| {
        let n = y.size();
        let mut word = vec![0; n];
        for r in 1..=n {
            let free: Vec<usize> = (1..=y.row_len(r)).filter(|&c| word[c - 1] == 0).collect();
            word[free[picks[r - 1] % free.len()] - 1] = r;
        }
        Transversal::new(y, word).unwrap()
    })
}

fn pattern(max_len: usize) -> impl Strategy<Value = Pattern> {
    (1..=max_len)
        .prop_flat_map(|k| Just((1..=k).collect::<Vec<usize>>()).prop_shuffle().prop_map(|w| Pattern::new(w).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn text_round_trip(t in transversal(9)) {
        let back = Transversal::parse(t.diagram().clone(), &t.to_string()).unwrap();
        prop_assert_eq!(&back, &t);
        let y: YoungDiagram = t.diagram().to_string().parse().unwrap();
        prop_assert_eq!(&y, t.diagram());
    }

    #[test]
    fn containment_matches_oracle(t in transversal(7), tau in pattern(4)) {
        let lengths = common::lengths(&t.diagram().rows_top_first());
        prop_assert_eq!(t.contains(&tau), common::contains(&lengths, t.word(), tau.word()));
    }

    #[test]
    fn zeta_round_trips(t in transversal(9)) {
        for cp in t.diagram().critical_points() {
            let split = zeta(&t, cp.point).unwrap();
            prop_assert_eq!(split.left.size() + split.right.size(), t.size() + cp.index);
            let back = unzeta(t.diagram(), cp.point, &split.left, &split.right).unwrap();
            prop_assert_eq!(&back, &t);
        }
    }

    #[test]
    fn rectangle_above_a_critical_point_holds_its_index(t in transversal(9)) {
        for cp in t.diagram().critical_points() {
            let inside = t.dots().iter().filter(|d| d.col <= cp.point.x && d.row > cp.point.y).count();
            prop_assert_eq!(inside, cp.index);
        }
    }

    #[test]
    fn first_subsequence_is_left_to_right_maxima(t in transversal(9)) {
        let dots = t.dots();
        let mut best = 0;
        let maxima: Vec<_> = dots.iter().copied().filter(|d| { let hit = d.row > best; best = best.max(d.row); hit }).collect();
        prop_assert_eq!(first_subsequence(&dots), maxima);
        let second = second_subsequence(&dots);
        prop_assert!(second.windows(2).all(|w| w[0].row < w[1].row));
    }

    #[test]
    fn moves_are_undone_by_their_inverse(t in transversal(8), which in 0usize..4) {
        let kind = [MoveKind::From213To123, MoveKind::From123To213, MoveKind::From312To321, MoveKind::From321To312][which];
        if let Some(occ) = t.occurrences(&kind.source()).first() {
            let moved = apply_move(&t, kind, occ).unwrap();
            prop_assert!(moved.contains(&kind.target()));
            let back = apply_move(&moved, kind.inverse(), occ).unwrap();
            prop_assert_eq!(&back, &t);
        }
    }

    #[test]
    fn psi_inverts_on_avoiders(t in transversal(8)) {
        let sigma: Pattern = "213".parse().unwrap();
        prop_assume!(t.avoids(&sigma));
        let out = psi(&t).unwrap();
        prop_assert!(out.image.avoids(&"123".parse().unwrap()));
        prop_assert_eq!(out.replay(&t).unwrap(), out.image.clone());
        prop_assert_eq!(psi_inverse(&out.image).unwrap(), Some(t));
    }

    #[test]
    fn block_notation(a in pattern(3), g in pattern(3)) {
        let block = Pattern::block(&a, &g);
        let parsed: Pattern = format!("{a}|{g}").parse().unwrap();
        prop_assert_eq!(&parsed, &block);
        let k = g.len();
        prop_assert!(block.word()[..a.len()].iter().all(|&v| v > k));
    }
}
