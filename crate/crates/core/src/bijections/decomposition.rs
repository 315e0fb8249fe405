use crate::diagram::{Cell, Reduction, YoungDiagram};
use crate::error::Result;
use crate::transversal::Transversal;

use super::{lift, restrict};

/// Side of the square block `𝒜` cut out by the 45° ray from the bottom-left
/// corner of the bottom cell in column `col`: the first height `m` at which
/// the ray meets the border, i.e. `L(m) = col - 1 + m`.
pub fn a_block_size(y: &YoungDiagram, col: usize) -> Option<usize> {
    if col == 0 || col > y.row_len(1) {
        return None;
    }
    (1..=y.n_rows()).find(|&m| y.row_len(m) == col - 1 + m)
}

/// `T = T|_𝒜 ⊗ T|_𝓑` for the bottom cell in column `col`. `𝒜` occupies rows
/// `1..=m` and columns `col..col+m`; `𝓑` is the rest, with `𝓑𝓛` the columns
/// left of `𝒜` and `𝓑𝓡` the columns right of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition213 {
    pub cell: Cell,
    pub a: Transversal,
    pub b: Transversal,
    /// Number of `𝓑𝓛` columns.
    pub left_cols: usize,
    /// The bottom dot sits in the bottom-left corner of `𝒜`.
    pub minimal: bool,
    a_map: Reduction,
    b_map: Reduction,
    parent: YoungDiagram,
}

impl Decomposition213 {
    pub fn is_trivial(&self) -> bool {
        self.b.size() == 0
    }

    pub fn a_diagram(&self) -> &YoungDiagram {
        self.a.diagram()
    }

    pub fn b_diagram(&self) -> &YoungDiagram {
        self.b.diagram()
    }

    /// Puts transversals of `𝒜` and `𝓑` back into the parent diagram.
    pub fn assemble(&self, a: &Transversal, b: &Transversal) -> Result<Transversal> {
        let mut dots = lift(a, &self.a_map);
        dots.extend(lift(b, &self.b_map));
        Transversal::from_dots(self.parent().clone(), &dots)
    }

    pub fn parent(&self) -> &YoungDiagram {
        &self.parent
    }

    /// Maps a column of `𝒜` or `𝓑` back to the parent.
    pub fn lift_a_col(&self, col: usize) -> usize {
        self.a_map.cols[col - 1]
    }

    pub fn lift_b_col(&self, col: usize) -> usize {
        self.b_map.cols[col - 1]
    }
}

/// The decomposition induced by the bottom cell in column `col`, if `t`
/// respects it.
pub fn decompose_213_at(t: &Transversal, col: usize) -> Option<Decomposition213> {
    let y = t.diagram();
    let m = a_block_size(y, col)?;
    let a_cols = col..col + m;
    if !(1..=m).all(|r| a_cols.contains(&t.col_of(r))) {
        return None;
    }
    let n = y.size();
    let a_map = y.restrict((1..=m).collect(), a_cols.clone().collect());
    let b_map = y.restrict((m + 1..=n).collect(), (1..col).chain(col + m..=n).collect());
    let a = restrict(t, &a_map).ok()?;
    let b = restrict(t, &b_map).ok()?;
    Some(Decomposition213 {
        cell: Cell::new(1, col),
        a,
        b,
        left_cols: col - 1,
        minimal: t.col_of(1) == col,
        a_map,
        b_map,
        parent: y.clone(),
    })
}

/// The minimal non-trivial decomposition respected by `t`, or `None` when
/// `t` is (213)-indecomposable.
pub fn decompose_213(t: &Transversal) -> Option<Decomposition213> {
    if t.size() == 0 {
        return None;
    }
    (1..=t.col_of(1)).rev().find_map(|col| decompose_213_at(t, col)).filter(|d| !d.is_trivial())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked() -> Transversal {
        let y = YoungDiagram::new(&[10, 10, 10, 9, 9, 8, 8, 7, 6, 5]).unwrap();
        Transversal::parse(y, "8 10 6 1 5 2 3 4 7 9").unwrap()
    }

    #[test]
    fn minimal_and_wider_decompositions() {
        let t = worked();
        let d = decompose_213(&t).unwrap();
        assert!(d.minimal);
        assert_eq!(d.a.word(), &[1, 5, 2, 3, 4]);
        assert_eq!(d.b.word(), &[3, 5, 1, 2, 4]);
        assert_eq!(d.assemble(&d.a, &d.b).unwrap(), t);
        let wide = decompose_213_at(&t, 3).unwrap();
        assert!(!wide.minimal);
        assert_eq!(wide.a.word(), &[6, 1, 5, 2, 3, 4, 7]);
        assert_eq!(wide.b.word(), &[1, 3, 2]);
    }

    #[test]
    fn identity_on_square_is_indecomposable() {
        let t = Transversal::parse(YoungDiagram::square(4), "1234").unwrap();
        assert!(decompose_213(&t).is_none());
    }

    #[test]
    fn rightmost_bottom_cell_gives_single_cell() {
        let y: YoungDiagram = "3,3,2".parse().unwrap();
        assert_eq!(a_block_size(&y, 2), Some(1));
        let t = Transversal::parse(y, "312").unwrap();
        let d = decompose_213(&t).unwrap();
        assert_eq!(d.a.size(), 1);
        assert_eq!(d.b.word(), &[2, 1]);
    }
}
