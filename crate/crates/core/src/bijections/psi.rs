use serde::Serialize;

use crate::diagram::{Cell, YoungDiagram};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::transversal::{dominates_12, primary_subsequence, secondary_subsequence, Transversal};

use super::decomposition::{decompose_213, decompose_213_at};
use super::moves::{apply_move, Move, MoveKind};
use super::{lift, restrict};

/// `ψ(T)` together with the (123)→(213) moves that turn `T` into it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsiImage {
    pub image: Transversal,
    pub script: Vec<Move>,
}

impl PsiImage {
    /// Applies the script to `start` move by move.
    pub fn replay(&self, start: &Transversal) -> Result<Transversal> {
        self.script.iter().try_fold(start.clone(), |t, mv| apply_move(&t, mv.kind, &mv.columns))
    }
}

fn p213() -> Pattern {
    Pattern::new(vec![2, 1, 3]).expect("fixed permutation")
}

fn p123() -> Pattern {
    Pattern::identity(3)
}

pub fn psi(t: &Transversal) -> Result<PsiImage> {
    if t.contains(&p213()) {
        return Err(Error::Precondition(format!("{t:?} contains (213)")));
    }
    psi_rec(t)
}

fn relabel(script: Vec<Move>, col: impl Fn(usize) -> usize) -> impl Iterator<Item = Move> {
    script.into_iter().map(move |mv| Move { kind: mv.kind, columns: mv.columns.map(&col) })
}

/// The reduction of `y` along its bottom-left cell.
fn without_corner(y: &YoungDiagram) -> crate::diagram::Reduction {
    let n = y.size();
    y.restrict((2..=n).collect(), (2..=n).collect())
}

fn psi_rec(t: &Transversal) -> Result<PsiImage> {
    let y = t.diagram();
    let n = t.size();
    if n <= 1 {
        return Ok(PsiImage { image: t.clone(), script: Vec::new() });
    }
    let bottom_col = t.col_of(1);
    if let Some(d) = decompose_213_at(t, bottom_col).filter(|d| !d.is_trivial()) {
        let a = psi_rec(&d.a)?;
        let b = psi_rec(&d.b)?;
        let image = d.assemble(&a.image, &b.image)?;
        let mut script: Vec<Move> = relabel(a.script, |c| d.lift_a_col(c)).collect();
        script.extend(relabel(b.script, |c| d.lift_b_col(c)));
        return Ok(PsiImage { image, script });
    }
    if bottom_col != 1 {
        return Err(Error::Precondition(format!("{t:?} respects no decomposition at its bottom dot")));
    }
    let red = without_corner(y);
    let inner = psi_rec(&restrict(t, &red)?)?;
    let mut dots = lift(&inner.image, &red);
    dots.push(Cell::new(1, 1));
    let mut current = Transversal::from_dots(y.clone(), &dots)?;
    let mut script: Vec<Move> = relabel(inner.script, |c| red.cols[c - 1]).collect();

    // η: walk the bottom dot rightwards past each secondary dot of the
    // rectangle above the bottom row.
    let width = y.row_len(1);
    let rect: Vec<Cell> = current.dots().into_iter().filter(|d| d.col > 1 && d.col <= width).collect();
    let primary = primary_subsequence(y, &rect);
    let mut at = 1;
    for beta in secondary_subsequence(y, &rect) {
        let alpha =
            primary.iter().find(|&&a| dominates_12(y, a, beta)).expect("a secondary dot is dominated by a primary one");
        let columns = [at, beta.col, alpha.col];
        current = apply_move(&current, MoveKind::From123To213, &columns)?;
        script.push(Move { kind: MoveKind::From123To213, columns });
        at = beta.col;
    }
    Ok(PsiImage { image: current, script })
}

/// The unique `T ∈ S_Y(213)` with `ψ(T) = t2`, or `None` if there is none.
pub fn psi_inverse(t2: &Transversal) -> Result<Option<Transversal>> {
    if t2.contains(&p123()) {
        return Err(Error::Precondition(format!("{t2:?} contains (123)")));
    }
    Ok(inverse_rec(t2))
}

fn inverse_rec(t2: &Transversal) -> Option<Transversal> {
    let y = t2.diagram();
    let n = t2.size();
    if n <= 1 {
        return Some(t2.clone());
    }
    let candidate = if let Some(d) = decompose_213(t2) {
        let a = inverse_rec(&d.a)?;
        let b = inverse_rec(&d.b)?;
        d.assemble(&a, &b).ok()?
    } else {
        // Undo η: inside the rectangle, the secondary dots and the bottom dot
        // shift one place to the right, putting the bottom dot first.
        let width = y.row_len(1);
        let rect: Vec<Cell> = t2.dots().into_iter().filter(|d| d.col <= width).collect();
        let secondary = secondary_subsequence(y, &rect);
        if secondary.last().map(|d| d.row) != Some(1) || secondary[0].col != 1 {
            return None;
        }
        let mut word = t2.word().to_vec();
        word[0] = 1;
        for w in secondary.windows(2) {
            word[w[1].col - 1] = w[0].row;
        }
        let t1 = Transversal::new(y.clone(), word).ok()?;
        let red = without_corner(y);
        let inner = inverse_rec(&restrict(&t1, &red).ok()?)?;
        let mut dots = lift(&inner, &red);
        dots.push(Cell::new(1, 1));
        Transversal::from_dots(y.clone(), &dots).ok()?
    };
    let image = psi(&candidate).ok()?.image;
    (image == *t2).then_some(candidate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::enumerate_avoiders;

    #[test]
    fn single_cell_is_fixed() {
        let t = Transversal::parse(YoungDiagram::square(1), "1").unwrap();
        assert_eq!(psi(&t).unwrap().image, t);
    }

    #[test]
    fn eta_reverses_the_block() {
        // T₁ = (1,4,3,2,5) on M_5 restricts to (1432) on the block of ℏ and
        // the secondary dots; η turns that block into J_4.
        let m5 = YoungDiagram::square(5);
        let pre = psi_inverse(&Transversal::parse(m5.clone(), "43215").unwrap()).unwrap().unwrap();
        let out = psi(&pre).unwrap();
        assert_eq!(out.image.word(), &[4, 3, 2, 1, 5]);
        assert_eq!(out.replay(&pre).unwrap(), out.image);
        let eta: Vec<[usize; 3]> = out.script.iter().rev().take(3).map(|m| m.columns).collect();
        assert_eq!(eta, [[3, 4, 5], [2, 3, 5], [1, 2, 5]]);
    }

    #[test]
    fn corner_deleted_four() {
        let y4 = YoungDiagram::corner_deleted(4).unwrap();
        let domain = enumerate_avoiders(&y4, &[p213()]);
        assert_eq!(domain.len(), 12);
        let mut images: Vec<Transversal> = domain.iter().map(|t| psi(t).unwrap().image).collect();
        assert!(images.iter().all(|t| t.avoids(&p123())));
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 12);
        for t in &domain {
            assert_eq!(psi_inverse(&psi(t).unwrap().image).unwrap().as_ref(), Some(t));
        }
        let missing: Vec<Transversal> =
            enumerate_avoiders(&y4, &[p123()]).into_iter().filter(|t| psi_inverse(t).unwrap().is_none()).collect();
        assert_eq!(missing.len(), 1);
        assert_eq!(missing[0].word(), &[3, 1, 2, 4]);
    }
}
