use super::cayley::cayley_digraph;
use super::ConstructionError;
use crate::graph::Graph;
use crate::perm::{named_group, GroupTable, NamedGroup, Permutation};

/// A Frucht graph together with its vertex layout. Group elements are the
/// vertices `0..|Γ|`; each labelled arc is replaced by a gadget occupying a
/// contiguous block of later vertices.
#[derive(Debug, Clone)]
pub struct FruchtGraph {
    pub graph: Graph,
    pub group: GroupTable,
    pub gens: Vec<usize>,
    pub scale: usize,
    /// `(tail, head, label)` in layout order.
    pub arcs: Vec<(usize, usize, usize)>,
    /// First vertex of each arc's gadget.
    pub gadget_start: Vec<usize>,
}

impl FruchtGraph {
    pub fn group_nodes(&self) -> std::ops::Range<usize> {
        0..self.group.order()
    }

    /// The automorphism `h ↦ h·x` on group nodes, carried to the gadgets.
    pub fn translation(&self, x: usize) -> Permutation {
        let m = self.group.order();
        let k = self.gens.len();
        let mut img: Vec<usize> = (0..self.graph.n()).collect();
        for (h, slot) in img.iter_mut().enumerate().take(m) {
            *slot = self.group.mul(h, x);
        }
        for (a, &(h, _, j)) in self.arcs.iter().enumerate() {
            let b = self.group.mul(h, x) * k + j;
            let len = gadget_len(self.scale, j);
            for i in 0..len {
                img[self.gadget_start[a] + i] = self.gadget_start[b] + i;
            }
        }
        Permutation::from_images(img).expect("translation is a bijection")
    }
}

/// Tail lengths for the 0-based label `j`: the tail at the arc's first
/// inner vertex, then the one at its second.
fn tails(scale: usize, j: usize) -> (usize, usize) {
    let j1 = j + 1;
    (scale + 2 * j1 - 1, scale + 2 * j1)
}

fn gadget_len(scale: usize, j: usize) -> usize {
    let (a, b) = tails(scale, j);
    2 + a + b
}

/// Replaces every arc `h₁ → h₂` with label `j` of the Cayley digraph by a
/// path `h₁ – x – y – h₂` with pendant paths of lengths `scale + 2j − 1` at
/// `x` and `scale + 2j` at `y` (labels counted from 1).
pub fn frucht(t: &GroupTable, gens: &[usize], scale: usize) -> Result<FruchtGraph, ConstructionError> {
    if scale == 0 {
        return Err(ConstructionError::InvalidParameter { what: "gadget scale", value: 0 });
    }
    if let Some(&g) = gens.iter().find(|&&g| g == t.identity()) {
        return Err(ConstructionError::InvalidGenerator(g));
    }
    let mut dedup = gens.to_vec();
    dedup.sort_unstable();
    dedup.dedup();
    if dedup.len() != gens.len() {
        return Err(ConstructionError::InvalidGenerator(gens[0]));
    }
    let cay = cayley_digraph(t, gens)?;
    let m = t.order();
    let total = m + cay.arcs.iter().map(|&(_, _, j)| gadget_len(scale, j)).sum::<usize>();
    let mut edges = Vec::with_capacity(total);
    let mut gadget_start = Vec::with_capacity(cay.arcs.len());
    let mut next = m;
    for &(h1, h2, j) in &cay.arcs {
        let (x, y) = (next, next + 1);
        gadget_start.push(next);
        next += 2;
        edges.extend([(h1, x), (x, y), (y, h2)]);
        let (lx, ly) = tails(scale, j);
        for (anchor, len) in [(x, lx), (y, ly)] {
            let mut prev = anchor;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
    }
    debug_assert_eq!(next, total);
    Ok(FruchtGraph {
        graph: Graph::new(total, edges)?,
        group: t.clone(),
        gens: gens.to_vec(),
        scale,
        arcs: cay.arcs,
        gadget_start,
    })
}

pub fn frucht_graph(t: &GroupTable, gens: &[usize], scale: usize) -> Result<Graph, ConstructionError> {
    Ok(frucht(t, gens, scale)?.graph)
}

/// Frucht graphs of `Z_n` with the generator `1`, one per scale `t ≥ 1`.
pub fn frucht_family_zn(n: usize, t: usize) -> Result<Graph, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::InvalidParameter { what: "cycle order", value: n });
    }
    frucht_graph(&named_group(NamedGroup::Cyclic, n)?, &[1], t)
}
