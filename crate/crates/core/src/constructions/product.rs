use super::ConstructionError;
use crate::graph::{attach_gadget, disjoint_union, gadget_y, Graph};

/// `G₁ ∪ G₂'`, where `G₂'` has a rigid tree hung from every vertex of `G₂`.
#[derive(Debug, Clone)]
pub struct ProductUnion {
    pub graph: Graph,
    /// Vertices `0..first` come from `G₁`.
    pub first: usize,
    pub gadget_size: usize,
}

/// Builds the union whose automorphism group is `Aut(G₁) × Aut(G₂)`. The
/// gadget parameter defaults to `|G₁| + |G₂|` (at least 4), which keeps
/// every component of `G₂'` apart from every component of `G₁`.
pub fn gadget_product_union(g1: &Graph, g2: &Graph, k: Option<usize>) -> Result<ProductUnion, ConstructionError> {
    let k = k.unwrap_or(g1.n() + g2.n()).max(4);
    let y = gadget_y(k)?;
    let all: Vec<usize> = (0..g2.n()).collect();
    let g2p = attach_gadget(g2, &all, &y)?;
    Ok(ProductUnion {
        graph: disjoint_union(g1, &g2p),
        first: g1.n(),
        gadget_size: k,
    })
}
