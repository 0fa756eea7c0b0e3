//! Finite simple undirected graphs with bit-packed adjacency rows, plus the
//! constructors used throughout the crate.
//!
//! Vertices are always the dense range `0..n`. A [`Graph`] is immutable once
//! built; every constructor returns a fresh value.

mod gadget;
mod graph6;
mod inflate;

use std::fmt;

pub use gadget::{attach_gadget, gadget_a, gadget_y, RootedGadget};
pub use graph6::{graph6_decode, graph6_encode};
pub use inflate::{inflate, inflate_k, sequence_graph, SequenceGraph, SequenceVertex};

/// Errors raised while building or decoding graphs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("invalid parameter {value} for {what}")]
    InvalidParameter { what: &'static str, value: usize },
    #[error("malformed graph6 input: {0}")]
    Graph6(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs are merged; the
    /// symmetric closure is implied.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency row of `v` as packed 64-bit words.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `map[v]`. `map` must be a bijection on `0..n`.
    pub fn relabel(&self, map: &[usize]) -> Graph {
        assert_eq!(map.len(), self.n, "relabel map has wrong length");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(map[u], map[v]);
        }
        g
    }

    /// The graph with vertex `v` deleted; later vertices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let shift = |w: usize| if w > v { w - 1 } else { w };
        Graph::new(
            self.n - 1,
            self.edges()
                .into_iter()
                .filter(|&(a, b)| a != v && b != v)
                .map(|(a, b)| (shift(a), shift(b))),
        )
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Number of independent cycles, `|E| - |V| + components`.
    pub fn cyclomatic_number(&self) -> usize {
        self.edge_count() + self.components().len() - self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.edge_count() == self.n - 1
    }

    /// Graphviz rendering; layout is left to the consumer.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Named graph families accepted by [`standard`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Complete,
    Cycle,
    Path,
    Empty,
    /// The Kneser graph K(5,2); the size argument is ignored.
    Petersen,
}

pub fn standard(kind: StandardKind, n: usize) -> Result<Graph, GraphError> {
    let invalid = |what| Err(GraphError::InvalidParameter { what, value: n });
    match kind {
        StandardKind::Complete => {
            if n < 1 {
                return invalid("complete graph size");
            }
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        StandardKind::Cycle => {
            if n < 3 {
                return invalid("cycle length");
            }
            Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        StandardKind::Path => {
            if n < 1 {
                return invalid("path size");
            }
            Graph::new(n, (1..n).map(|v| (v - 1, v)))
        }
        StandardKind::Empty => {
            if n < 1 {
                return invalid("empty graph size");
            }
            Ok(Graph::empty(n))
        }
        StandardKind::Petersen => Ok(petersen()),
    }
}

/// Shorthand constructors for the families above; they panic only on sizes
/// the corresponding `standard` call would reject.
pub fn complete(n: usize) -> Graph {
    standard(StandardKind::Complete, n).expect("complete graph needs n >= 1")
}

pub fn cycle(n: usize) -> Graph {
    standard(StandardKind::Cycle, n).expect("cycle needs n >= 3")
}

pub fn path(n: usize) -> Graph {
    standard(StandardKind::Path, n).expect("path needs n >= 1")
}

/// The 2-subsets of `{0..5}` in lexicographic order, as used for the
/// Petersen vertex labels.
pub fn petersen_labels() -> Vec<(usize, usize)> {
    (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect()
}

fn petersen() -> Graph {
    let labels = petersen_labels();
    let mut g = Graph::empty(labels.len());
    for (i, &(a, b)) in labels.iter().enumerate() {
        for (j, &(c, d)) in labels.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                g.set_edge(i, j);
            }
        }
    }
    g
}

/// Vertices of `b` are shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut g = Graph::empty(a.n + b.n);
    for (u, v) in a.edges() {
        g.set_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.set_edge(u + a.n, v + a.n);
    }
    g
}
