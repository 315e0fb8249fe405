//! The structural maps between avoider classes: the dominance forest and the
//! surjection `φ: S_Y(312) → S_Y(321)`, pattern moves, the (213)-decomposition,
//! the injection `ψ: S_Y(213) → S_Y(123)`, and explicit strictness witnesses.

mod decomposition;
mod graph;
mod moves;
mod psi;
mod witness;

pub use decomposition::{a_block_size, decompose_213, decompose_213_at, Decomposition213};
pub use graph::{build_dominance_graph, phi, phi_fibers, DominanceGraph, FiberSummary, PhiFibers, Tree};
pub use moves::{
    apply_move, confluence_report, move_endpoints, normalize_by_moves, ConfluenceReport, Move, MoveKind, MoveRun,
};
pub use psi::{psi, psi_inverse, PsiImage};
pub use witness::{strictness_witness_213, strictness_witness_312, witness_block};

use crate::diagram::{Cell, Reduction, YoungDiagram};
use crate::error::{Error, Result};
use crate::transversal::Transversal;

/// The dots of `t` inside the kept rows and columns of `red`, in the
/// reduced coordinates.
pub(crate) fn restrict(t: &Transversal, red: &Reduction) -> Result<Transversal> {
    let word = red
        .cols
        .iter()
        .map(|&c| {
            let row = t.row_of(c);
            red.rows
                .iter()
                .position(|&r| r == row)
                .map(|i| i + 1)
                .ok_or_else(|| Error::InvalidTransversal(format!("column {c} leaves the kept rows")))
        })
        .collect::<Result<Vec<_>>>()?;
    Transversal::new(red.diagram.clone(), word)
}

/// Dots of a reduced transversal in the parent's coordinates.
pub(crate) fn lift(t: &Transversal, red: &Reduction) -> Vec<Cell> {
    t.dots().into_iter().map(|d| red.lift(d)).collect()
}

/// The diagonal transversal of a proper diagram.
pub(crate) fn identity(y: &YoungDiagram) -> Transversal {
    Transversal::new_unchecked(y.clone(), (1..=y.size()).collect())
}
