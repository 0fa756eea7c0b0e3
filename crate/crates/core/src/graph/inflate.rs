//! Graph inflation and the sequence-labelled graphs `G_k`.

use super::{Graph, GraphError};

/// The inflation of `g`: one vertex per incident (vertex, edge) pair, two
/// pairs adjacent when they share the vertex or share the edge.
///
/// Vertex order is by `(v, e)` with edges in lexicographic order.
pub fn inflate(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(2 * edges.len());
    for (ei, &(a, b)) in edges.iter().enumerate() {
        pairs.push((a, ei));
        pairs.push((b, ei));
    }
    pairs.sort_unstable();
    let mut out = Graph::empty(pairs.len());
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (v1, e1) = pairs[i];
            let (v2, e2) = pairs[j];
            // Distinct incident pairs share at most one coordinate, so the
            // result stays simple.
            debug_assert!(!(v1 == v2 && e1 == e2));
            if v1 == v2 || e1 == e2 {
                out.set_edge(i, j);
            }
        }
    }
    out
}

pub fn inflate_k(g: &Graph, k: usize) -> Graph {
    let mut cur = g.clone();
    for _ in 0..k {
        cur = inflate(&cur);
    }
    cur
}

/// A label `(x1, …, x_{k+1})` over `{1..n}` with `x1` distinct from every
/// later entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SequenceVertex(pub Vec<usize>);

impl SequenceVertex {
    pub fn is_valid(&self, n: usize) -> bool {
        match self.0.split_first() {
            None => false,
            Some((&first, rest)) => {
                (1..=n).contains(&first)
                    && rest.iter().all(|&x| (1..=n).contains(&x) && x != first)
            }
        }
    }

    /// Distinct symbols occurring in the label.
    pub fn symbols(&self) -> Vec<usize> {
        let mut s = self.0.clone();
        s.sort_unstable();
        s.dedup();
        s
    }
}

/// `G_k` over the alphabet `{1..n}` with its vertex labels.
#[derive(Debug, Clone)]
pub struct SequenceGraph {
    pub graph: Graph,
    pub labels: Vec<SequenceVertex>,
    pub alphabet: usize,
}

impl SequenceGraph {
    pub fn index_of(&self, label: &SequenceVertex) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    /// The vertex permutation induced by a permutation `sigma` of the
    /// alphabet, given 0-based (`sigma[x - 1] + 1` is the image of `x`).
    pub fn induced_permutation(&self, sigma: &[usize]) -> Vec<usize> {
        self.labels
            .iter()
            .map(|l| {
                let img = SequenceVertex(l.0.iter().map(|&x| sigma[x - 1] + 1).collect());
                self.index_of(&img).expect("alphabet permutations preserve validity")
            })
            .collect()
    }
}

fn sequences_adjacent(u: &[usize], v: &[usize]) -> bool {
    let Some(i) = (0..u.len()).find(|&i| u[i] != v[i]) else {
        return false;
    };
    (i + 1..u.len()).all(|j| u[j] == v[i] && v[j] == u[i])
}

/// Builds `G_k`: vertices are all valid length-`k+1` sequences in
/// lexicographic order; `u ~ v` iff at the first index `i` where they differ,
/// every later entry of `u` equals `v_i` and every later entry of `v` equals
/// `u_i`.
pub fn sequence_graph(n: usize, k: usize) -> Result<SequenceGraph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameter { what: "sequence alphabet size", value: n });
    }
    let mut labels = Vec::new();
    let mut cur = vec![1usize; k + 1];
    loop {
        let label = SequenceVertex(cur.clone());
        if label.is_valid(n) {
            labels.push(label);
        }
        // odometer over {1..n}^{k+1}, last position fastest
        let mut pos = k + 1;
        loop {
            if pos == 0 {
                let mut graph = Graph::empty(labels.len());
                for a in 0..labels.len() {
                    for b in a + 1..labels.len() {
                        if sequences_adjacent(&labels[a].0, &labels[b].0) {
                            graph.set_edge(a, b);
                        }
                    }
                }
                return Ok(SequenceGraph { graph, labels, alphabet: n });
            }
            pos -= 1;
            if cur[pos] < n {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 1;
        }
    }
}
