//! Rigid rooted gadgets that can be glued onto vertices to destroy
//! symmetries without introducing new ones.

use super::{Graph, GraphError};

/// A rigid graph with a designated attachment vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGadget {
    pub graph: Graph,
    pub attach: usize,
}

/// Tree on `k + 3` vertices: the path `p0 p1 … pk` with the extra path
/// `p1 q1 q2`. The branches at `p1` have lengths 1, 2 and `k - 1`, which are
/// pairwise distinct once `k >= 4`. Attachment vertex is `p0`.
///
/// Vertex ids: `p_i = i`, `q1 = k + 1`, `q2 = k + 2`.
pub fn gadget_y(k: usize) -> Result<RootedGadget, GraphError> {
    if k < 4 {
        return Err(GraphError::InvalidParameter { what: "Y gadget size", value: k });
    }
    let mut edges: Vec<(usize, usize)> = (1..=k).map(|i| (i - 1, i)).collect();
    edges.push((1, k + 1));
    edges.push((k + 1, k + 2));
    Ok(RootedGadget {
        graph: Graph::new(k + 3, edges)?,
        attach: 0,
    })
}

/// Unicyclic graph on `k + 4` vertices: triangle `c1 c2 c3`, a pendant `s`
/// on `c2`, and the path `c1 r1 … rk` whose far end `rk` is the attachment
/// vertex. Requires `k >= 2`: at `k = 1` the pendant and `r1` are both leaves
/// and swapping `c1`/`c2` is an automorphism.
///
/// Vertex ids: `c1 = 0`, `c2 = 1`, `c3 = 2`, `s = 3`, `r_i = 3 + i`.
pub fn gadget_a(k: usize) -> Result<RootedGadget, GraphError> {
    if k < 2 {
        return Err(GraphError::InvalidParameter { what: "A gadget size", value: k });
    }
    let mut edges = vec![(0, 1), (1, 2), (0, 2), (1, 3), (0, 4)];
    edges.extend((2..=k).map(|i| (3 + i - 1, 3 + i)));
    Ok(RootedGadget {
        graph: Graph::new(k + 4, edges)?,
        attach: 3 + k,
    })
}

/// Glues one fresh copy of `gadget` onto every target, identifying the
/// gadget's attachment vertex with the target. Copies are appended in the
/// order of the (deduplicated, sorted) targets.
pub fn attach_gadget(g: &Graph, targets: &[usize], gadget: &RootedGadget) -> Result<Graph, GraphError> {
    let mut targets = targets.to_vec();
    targets.sort_unstable();
    targets.dedup();
    if let Some(&t) = targets.iter().find(|&&t| t >= g.n()) {
        return Err(GraphError::VertexOutOfRange { vertex: t, n: g.n() });
    }
    let extra = gadget.graph.n() - 1;
    let mut edges = g.edges();
    for (copy, &t) in targets.iter().enumerate() {
        let base = g.n() + copy * extra;
        let map = |v: usize| match v.cmp(&gadget.attach) {
            std::cmp::Ordering::Equal => t,
            std::cmp::Ordering::Less => base + v,
            std::cmp::Ordering::Greater => base + v - 1,
        };
        edges.extend(gadget.graph.edges().into_iter().map(|(u, v)| (map(u), map(v))));
    }
    Graph::new(g.n() + targets.len() * extra, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn y_shapes() {
        let y4 = gadget_y(4).unwrap();
        assert_eq!((y4.graph.n(), y4.graph.edge_count()), (7, 6));
        assert!(y4.graph.is_tree());
        let y5 = gadget_y(5).unwrap();
        assert_eq!(y5.graph.n(), 8);
        assert!(y5.graph.is_tree());
        assert!(gadget_y(3).is_err());
    }

    #[test]
    fn a_shapes() {
        let a2 = gadget_a(2).unwrap();
        assert_eq!((a2.graph.n(), a2.graph.edge_count()), (6, 6));
        assert_eq!(a2.graph.cyclomatic_number(), 1);
        let a10 = gadget_a(10).unwrap();
        assert_eq!(a10.graph.n(), 14);
        assert_eq!(a10.graph.degree(a10.attach), 1);
        assert!(gadget_a(1).is_err());
    }

    #[test]
    fn attaching_counts() {
        let y4 = gadget_y(4).unwrap();
        let g = attach_gadget(&complete(2), &[0, 1], &y4).unwrap();
        assert_eq!(g.n(), 14);
        let a2 = gadget_a(2).unwrap();
        let h = attach_gadget(&cycle(3), &[0], &a2).unwrap();
        assert_eq!(h.n(), 3 + 5);
        assert_eq!(h.cyclomatic_number(), 2);
        assert!(h.is_connected());
        assert!(attach_gadget(&cycle(3), &[3], &a2).is_err());
    }
}
