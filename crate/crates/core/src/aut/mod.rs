//! Automorphism groups, canonical forms and isomorphism testing by
//! partition refinement with individualization and backtracking.

mod partition;

use std::cmp::Ordering;

pub use partition::{equitable_refinement, is_equitable, OrderedPartition};
use partition::Refiner;

use crate::graph::{graph6_encode, Graph};
use crate::perm::{PermGroup, Permutation};

/// One node on the leftmost root-to-leaf path.
struct PathNode {
    part: OrderedPartition,
    target: usize,
    chosen: usize,
}

struct AutSearch<'a> {
    g: &'a Graph,
    refiner: Refiner,
    /// `traces[l]` is the refinement trace at depth `l` of the first path
    traces: Vec<u64>,
    targets: Vec<usize>,
    leaf0: Vec<usize>,
}

impl AutSearch<'_> {
    fn leaf_automorphism(&self, lab: &[usize]) -> Option<Permutation> {
        let n = self.g.n();
        let mut img = vec![0; n];
        for i in 0..n {
            img[self.leaf0[i]] = lab[i];
        }
        for v in 0..n {
            for u in self.g.neighbors(v) {
                if u > v && !self.g.has_edge(img[v], img[u]) {
                    return None;
                }
            }
        }
        Some(Permutation::from_images(img).expect("leaf labelings are bijections"))
    }

    /// Looks in the subtree below `part` with `w` individualized for a leaf
    /// equivalent to the first leaf.
    fn search(&mut self, part: &OrderedPartition, w: usize, depth: usize) -> Option<Permutation> {
        let mut p = part.clone();
        let s = p.individualize(w);
        let t = self.refiner.refine(&mut p, &[s]);
        if self.traces.get(depth + 1) != Some(&t) {
            return None;
        }
        if p.is_discrete() {
            return self.leaf_automorphism(p.lab());
        }
        let c = p.target_cell()?;
        if self.targets.get(depth + 1) != Some(&c) {
            return None;
        }
        let cell = p.cell_vertices(c).to_vec();
        for u in cell {
            if let Some(aut) = self.search(&p, u, depth + 1) {
                return Some(aut);
            }
        }
        None
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn absorb(&mut self, p: &Permutation) {
        for v in 0..self.0.len() {
            let (a, b) = (self.find(v), self.find(p.apply(v)));
            if a != b {
                self.0[a.max(b)] = a.min(b);
            }
        }
    }
}

/// Generators of the automorphism group of `g` preserving the vertex
/// coloring `colors`.
pub fn automorphism_generators_colored(g: &Graph, colors: &[usize]) -> Vec<Permutation> {
    assert_eq!(colors.len(), g.n(), "one color per vertex");
    let n = g.n();
    let mut refiner = Refiner::new(g);
    let mut p = OrderedPartition::from_colors(colors);
    let mut traces = vec![refiner.refine_all(&mut p)];
    let mut path: Vec<PathNode> = Vec::new();
    while let Some(c) = p.target_cell() {
        let chosen = *p.cell_vertices(c).iter().min().expect("cells are nonempty");
        path.push(PathNode { part: p.clone(), target: c, chosen });
        let s = p.individualize(chosen);
        traces.push(refiner.refine(&mut p, &[s]));
    }
    let mut search = AutSearch {
        g,
        refiner,
        traces,
        targets: path.iter().map(|node| node.target).collect(),
        leaf0: p.lab().to_vec(),
    };
    let mut gens: Vec<Permutation> = Vec::new();
    let mut uf = UnionFind((0..n).collect());
    // Every generator found below depth `d` fixes the first `d` path
    // choices, so orbits of all generators found so far are orbits of the
    // stabilizer of the path prefix.
    for (depth, node) in path.iter().enumerate().rev() {
        let mut cell = node.part.cell_vertices(node.target).to_vec();
        cell.sort_unstable();
        let mut failed: Vec<usize> = Vec::new();
        for w in cell {
            if w == node.chosen {
                continue;
            }
            let rw = uf.find(w);
            if rw == uf.find(node.chosen) || failed.iter().any(|&f| uf.find(f) == rw) {
                continue;
            }
            match search.search(&node.part, w, depth) {
                Some(aut) => {
                    uf.absorb(&aut);
                    gens.push(aut);
                }
                None => failed.push(w),
            }
        }
    }
    gens
}

pub fn automorphism_generators(g: &Graph) -> Vec<Permutation> {
    automorphism_generators_colored(g, &vec![0; g.n()])
}

/// The full automorphism group of `g`.
pub fn automorphism_group(g: &Graph) -> PermGroup {
    PermGroup::from_generators(g.n(), &automorphism_generators(g)).expect("generators have degree n")
}

pub fn automorphism_group_colored(g: &Graph, colors: &[usize]) -> PermGroup {
    PermGroup::from_generators(g.n(), &automorphism_generators_colored(g, colors))
        .expect("generators have degree n")
}

pub fn is_automorphism(g: &Graph, p: &Permutation) -> bool {
    p.degree() == g.n() && g.edges().iter().all(|&(u, v)| g.has_edge(p.apply(u), p.apply(v)))
}

struct Best {
    traces: Vec<u64>,
    code: Vec<u8>,
    pos: Vec<usize>,
}

struct CanonSearch<'a> {
    g: &'a Graph,
    refiner: Refiner,
    best: Option<Best>,
}

impl CanonSearch<'_> {
    fn visit(&mut self, p: OrderedPartition, traces: &mut Vec<u64>, mut ahead: bool, group: &PermGroup) {
        let depth = traces.len() - 1;
        if let (Some(best), false) = (&self.best, ahead) {
            match best.traces.get(depth) {
                None => ahead = true,
                Some(b) => match traces[depth].cmp(b) {
                    Ordering::Less => return,
                    Ordering::Greater => ahead = true,
                    Ordering::Equal => {}
                },
            }
        }
        let Some(c) = p.target_cell() else {
            self.leaf(&p, traces, ahead);
            return;
        };
        let mut cell = p.cell_vertices(c).to_vec();
        cell.sort_unstable();
        let orbit = group.orbit_ids();
        let mut seen: Vec<usize> = Vec::new();
        for w in cell {
            if seen.contains(&orbit[w]) {
                continue;
            }
            seen.push(orbit[w]);
            let mut q = p.clone();
            let s = q.individualize(w);
            traces.push(self.refiner.refine(&mut q, &[s]));
            let sub = if group.is_trivial() {
                group.clone()
            } else {
                group.point_stabilizer(w).expect("w is a vertex")
            };
            self.visit(q, traces, ahead, &sub);
            traces.pop();
            // a subtree entered ahead always replaces the best leaf, so later
            // siblings compare against it
            ahead = false;
        }
    }

    fn leaf(&mut self, p: &OrderedPartition, traces: &[u64], ahead: bool) {
        let pos = p.pos().to_vec();
        let code = graph6_encode(&self.g.relabel(&pos));
        let replace = match &self.best {
            None => true,
            Some(_) if ahead => true,
            Some(b) => match traces.len().cmp(&b.traces.len()) {
                Ordering::Less => false,
                Ordering::Greater => true,
                Ordering::Equal => code > b.code,
            },
        };
        if replace {
            self.best = Some(Best {
                traces: traces.to_vec(),
                code,
                pos,
            });
        }
    }
}

/// A canonical labeling: `labeling[v]` is the new name of vertex `v`, and
/// relabeled copies of isomorphic graphs are identical.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    canonical(g).1
}

fn canonical(g: &Graph) -> (Vec<u8>, Vec<usize>) {
    let group = automorphism_group(g);
    let mut search = CanonSearch {
        g,
        refiner: Refiner::new(g),
        best: None,
    };
    let mut p = OrderedPartition::unit(g.n());
    let mut traces = vec![search.refiner.refine_all(&mut p)];
    search.visit(p, &mut traces, false, &group);
    let best = search.best.expect("the search tree has a leaf");
    (best.code, best.pos)
}

/// Certificate equal for two graphs exactly when they are isomorphic: the
/// graph6 encoding of the canonically relabeled graph.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    canonical(g).0
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}
