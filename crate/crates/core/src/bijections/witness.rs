use serde::Serialize;

use crate::diagram::{Cell, CriticalPoint, YoungDiagram};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::search::enumerate_avoiders;
use crate::transversal::Transversal;

use super::graph::phi;
use super::lift;
use super::psi::psi_inverse;

/// The square-minus-corner block `Y(P)` sitting on a critical point `P` of
/// index at least 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessBlock {
    pub point: CriticalPoint,
    /// Rows and columns `offset + 1 ..= offset + size`.
    pub offset: usize,
    pub size: usize,
}

/// The bottom-most critical point of index at least 3, with its block.
pub fn witness_block(y: &YoungDiagram) -> Option<WitnessBlock> {
    let point = y.critical_points().into_iter().find(|cp| cp.index >= 3)?;
    Some(WitnessBlock { point, offset: point.point.y - 1, size: point.index + 2 })
}

/// Two distinct (312)-avoiders with the same `φ`-image. They agree with the
/// diagonal outside `Y(P)` and differ inside it.
pub fn strictness_witness_312(y: &YoungDiagram) -> Result<(Transversal, Transversal)> {
    y.ensure_proper()?;
    let block = witness_block(y).ok_or_else(|| Error::Precondition("no critical point of index at least 3".into()))?;
    let k = block.size;
    // (3, 4, …, k-2) followed by the four-dot tails.
    let head: Vec<usize> = (3..=k - 2).collect();
    let tails = [[1, k, k - 1, 2], [2, k, 1, k - 1]];
    let [first, second] = tails.map(|tail| {
        let inner: Vec<usize> = head.iter().copied().chain(tail).collect();
        let mut word: Vec<usize> = (1..=y.size()).collect();
        for (i, r) in inner.into_iter().enumerate() {
            word[block.offset + i] = block.offset + r;
        }
        Transversal::new(y.clone(), word)
    });
    let (first, second) = (first?, second?);
    let sigma = Pattern::new(vec![3, 1, 2])?;
    debug_assert!(first.avoids(&sigma) && second.avoids(&sigma));
    debug_assert_eq!(phi(&first)?, phi(&second)?);
    Ok((first, second))
}

/// A (123)-avoider outside the image of `ψ`: a (213) frame on the corners
/// around the bottom-left, filled by the only (12)-avoider of what remains.
pub fn strictness_witness_213(y: &YoungDiagram) -> Result<Transversal> {
    y.ensure_proper()?;
    let n = y.size();
    let points = y.critical_points();
    if n < 4 || points.iter().any(|cp| cp.index <= 1) || !points.iter().any(|cp| cp.index >= 2) {
        return Err(Error::Precondition(
            "needs size at least 4, a critical point of index at least 2 and none of index 0 or 1".into(),
        ));
    }
    let frame = [Cell::new(n - 1, 1), Cell::new(1, 2), Cell::new(n, n)];
    let red = y.reduce_with_maps(&frame)?;
    let fills = enumerate_avoiders(&red.diagram, &[Pattern::identity(2)]);
    let [fill] = fills.as_slice() else {
        return Err(Error::Precondition(format!("{} (12)-avoiders of the remainder", fills.len())));
    };
    let mut dots = lift(fill, &red);
    dots.extend(frame);
    let t = Transversal::from_dots(y.clone(), &dots)?;
    match psi_inverse(&t)? {
        None => Ok(t),
        Some(pre) => Err(Error::Precondition(format!("{t:?} is the image of {pre:?}"))),
    }
}
