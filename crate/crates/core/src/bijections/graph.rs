use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram::{Cell, YoungDiagram};
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::search;
use crate::transversal::{dominates_12, first_subsequence, second_subsequence, Transversal};

use super::{identity, lift};

/// `G_β`: the dots weakly below and right of `β`, with an edge from each dot
/// to every dot it covers in the (21)-order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tree {
    pub root: Cell,
    pub vertices: Vec<Cell>,
    pub edges: Vec<(Cell, Cell)>,
}

impl Tree {
    fn new(root: Cell, dots: &[Cell]) -> Self {
        let vertices: Vec<Cell> = dots.iter().copied().filter(|d| d.row <= root.row && d.col >= root.col).collect();
        let edges = cover_edges(&vertices);
        Tree { root, vertices, edges }
    }

    /// Connected with one edge fewer than vertices, ignoring orientation.
    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.vertices.len() && connected_parts(&self.vertices, &self.edges).len() == 1
    }
}

/// `δ₁ → δ₂` when `δ₁δ₂` decreases with nothing in between.
fn cover_edges(vertices: &[Cell]) -> Vec<(Cell, Cell)> {
    let above_left = |a: &Cell, b: &Cell| a.col < b.col && a.row > b.row;
    let mut edges = Vec::new();
    for a in vertices {
        for b in vertices.iter().filter(|b| above_left(a, b)) {
            if !vertices.iter().any(|c| above_left(a, c) && above_left(c, b)) {
                edges.push((*a, *b));
            }
        }
    }
    edges
}

/// Vertex sets of the undirected connected components, each sorted by column.
fn connected_parts(vertices: &[Cell], edges: &[(Cell, Cell)]) -> Vec<Vec<Cell>> {
    let index = |c: &Cell| vertices.iter().position(|v| v == c).expect("edge endpoint is a vertex");
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, index(a)), find(&mut parent, index(b)));
        parent[ra] = rb;
    }
    let mut groups: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
    for (i, v) in vertices.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(*v);
    }
    let mut parts: Vec<Vec<Cell>> = groups.into_values().collect();
    for p in &mut parts {
        p.sort_by_key(|c| c.col);
    }
    parts.sort_by_key(|p| p[0].col);
    parts
}

/// The forest `G = ∪ G_β` over `β ∈ T²` for a (312)-avoider.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominanceGraph {
    pub diagram: YoungDiagram,
    pub first: Vec<Cell>,
    /// `T²`, increasing.
    pub second: Vec<Cell>,
    pub trees: Vec<Tree>,
    /// Connected components of `G`, ordered by their leftmost dot.
    pub components: Vec<Vec<Cell>>,
}

pub fn build_dominance_graph(t: &Transversal) -> Result<DominanceGraph> {
    let sigma = Pattern::new(vec![3, 1, 2])?;
    if t.contains(&sigma) {
        return Err(Error::Precondition(format!("{t:?} contains (312)")));
    }
    let dots = t.dots();
    let first = first_subsequence(&dots);
    let second = second_subsequence(&dots);
    let trees: Vec<Tree> = second.iter().map(|&b| Tree::new(b, &dots)).collect();
    let mut vertices: Vec<Cell> = trees.iter().flat_map(|tr| tr.vertices.iter().copied()).collect();
    vertices.sort_by_key(|c| c.col);
    vertices.dedup();
    let mut edges: Vec<(Cell, Cell)> = trees.iter().flat_map(|tr| tr.edges.iter().copied()).collect();
    edges.sort_by_key(|(a, b)| (a.col, b.col));
    edges.dedup();
    let components = connected_parts(&vertices, &edges);
    Ok(DominanceGraph { diagram: t.diagram().clone(), first, second, trees, components })
}

impl DominanceGraph {
    pub fn vertices(&self) -> Vec<Cell> {
        let mut v: Vec<Cell> = self.components.iter().flatten().copied().collect();
        v.sort_by_key(|c| c.col);
        v
    }

    pub fn trees_are_trees(&self) -> bool {
        self.trees.iter().all(Tree::is_tree)
    }

    /// No tree contains a landing (12).
    pub fn trees_avoid_12(&self) -> bool {
        self.trees
            .iter()
            .all(|tr| tr.vertices.iter().all(|&a| tr.vertices.iter().all(|&b| !dominates_12(&self.diagram, a, b))))
    }

    /// Every component is the union of a run of consecutive trees.
    pub fn components_are_consecutive(&self) -> bool {
        let owner = |tree: &Tree| self.components.iter().position(|c| c.contains(&tree.root));
        let owners: Vec<Option<usize>> = self.trees.iter().map(owner).collect();
        owners.iter().all(Option::is_some)
            && owners.windows(2).all(|w| w[0] <= w[1])
            && self.trees.iter().zip(&owners).all(|(tr, o)| {
                let comp = &self.components[o.expect("checked")];
                tr.vertices.iter().all(|v| comp.contains(v))
            })
    }

    /// Each component lies entirely below and left of the next, so the
    /// subdiagrams they induce climb diagonally.
    pub fn components_are_increasing(&self) -> bool {
        self.components.windows(2).all(|w| {
            let (max_row, max_col) = (w[0].iter().map(|c| c.row).max(), w[0].iter().map(|c| c.col).max());
            let (min_row, min_col) = (w[1].iter().map(|c| c.row).min(), w[1].iter().map(|c| c.col).min());
            max_row < min_row && max_col < min_col
        })
    }

    /// `T = T¹ ⊔ |G|`.
    pub fn covers(&self, t: &Transversal) -> bool {
        let mut all: Vec<Cell> = self.first.iter().copied().chain(self.vertices()).collect();
        all.sort_by_key(|c| c.col);
        all == t.dots()
    }
}

/// Keeps `T¹` and replaces everything else by the diagonal of the reduced
/// diagram.
pub fn phi(t: &Transversal) -> Result<Transversal> {
    let sigma = Pattern::new(vec![3, 1, 2])?;
    if t.contains(&sigma) {
        return Err(Error::Precondition(format!("{t:?} contains (312)")));
    }
    let first = t.first_subsequence();
    let red = t.diagram().reduce_with_maps(&first)?;
    let mut dots = lift(&identity(&red.diagram), &red);
    dots.extend(first);
    Transversal::from_dots(t.diagram().clone(), &dots)
}

/// `S_Y(312)` grouped by `φ`-image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiFibers {
    pub diagram: YoungDiagram,
    /// Image, then its preimages in lexicographic order.
    pub fibers: BTreeMap<Transversal, Vec<Transversal>>,
    /// `|S_Y(321)|`.
    pub codomain: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberSummary {
    pub diagram: YoungDiagram,
    pub domain: usize,
    pub image: usize,
    pub codomain: usize,
    /// Images with more than one preimage, with the fiber size.
    pub multiple: Vec<(Vec<usize>, usize)>,
}

impl FiberSummary {
    pub fn surjective(&self) -> bool {
        self.image == self.codomain
    }
}

impl PhiFibers {
    pub fn summary(&self) -> FiberSummary {
        FiberSummary {
            diagram: self.diagram.clone(),
            domain: self.fibers.values().map(Vec::len).sum(),
            image: self.fibers.len(),
            codomain: self.codomain,
            multiple: self
                .fibers
                .iter()
                .filter(|(_, pre)| pre.len() > 1)
                .map(|(img, pre)| (img.word().to_vec(), pre.len()))
                .collect(),
        }
    }
}

pub fn phi_fibers(y: &YoungDiagram) -> Result<PhiFibers> {
    y.ensure_proper()?;
    let p312 = Pattern::new(vec![3, 1, 2])?;
    let p321 = Pattern::new(vec![3, 2, 1])?;
    let mut fibers: BTreeMap<Transversal, Vec<Transversal>> = BTreeMap::new();
    for t in search::enumerate_avoiders(y, &[p312]) {
        fibers.entry(phi(&t)?).or_default().push(t);
    }
    let codomain = search::count_u64(y, &[p321]) as usize;
    Ok(PhiFibers { diagram: y.clone(), fibers, codomain })
}
