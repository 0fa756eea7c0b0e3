use super::frucht::frucht_graph;
use super::ConstructionError;
use crate::aut::automorphism_group;
use crate::fixing::fixing_number_in;
use crate::graph::{disjoint_union, Graph};
use crate::perm::{abelian_decomposition, direct_product, is_isomorphic_groups, named_group, product_index, GroupTable, NamedGroup, DEFAULT_TABLE_CAP};

/// A graph with automorphism group a given abelian group and a chosen
/// fixing number, with the pieces it was assembled from.
#[derive(Debug, Clone)]
pub struct AbelianAchiever {
    pub graph: Graph,
    /// Orders of the cyclic prime-power factors, in decomposition order.
    pub factors: Vec<usize>,
    /// Vertex counts of the components, the last one carrying the product
    /// of the remaining factors.
    pub component_sizes: Vec<usize>,
    pub fix: usize,
}

/// Product of cyclic groups of the given orders with its unit-vector
/// generators.
fn cyclic_product(orders: &[usize]) -> Result<(GroupTable, Vec<usize>), ConstructionError> {
    let mut t = named_group(NamedGroup::Cyclic, orders[0])?;
    let mut gens = vec![1];
    for &m in &orders[1..] {
        gens = gens.iter().map(|&g| product_index(g, 0, m)).collect();
        gens.push(product_index(0, 1, m));
        t = direct_product(&t, &named_group(NamedGroup::Cyclic, m)?)?;
    }
    Ok((t, gens))
}

/// Builds a graph `G` with `Aut(G) ≅ t` and fixing number `i`, for
/// `1 ≤ i ≤ k` where `k` is the number of elementary divisors of `t`.
///
/// With factors `Γ₁ … Γ_k`, the graph is the disjoint union of Frucht
/// graphs of `Γ₁, …, Γ_{i−1}` and of `Γ_i × … × Γ_k`, each component at its
/// own gadget scale so no two are isomorphic. The result is checked before
/// it is returned.
pub fn abelian_achiever(t: &GroupTable, i: usize) -> Result<AbelianAchiever, ConstructionError> {
    let factors: Vec<usize> = abelian_decomposition(t)
        .map_err(|_| ConstructionError::NotAbelian)?
        .iter()
        .map(|f| f.order)
        .collect();
    let k = factors.len();
    if i == 0 || i > k {
        return Err(ConstructionError::FixOutOfRange { i, k });
    }
    let mut components = Vec::with_capacity(i);
    for (j, &q) in factors[..i - 1].iter().enumerate() {
        components.push(frucht_graph(&named_group(NamedGroup::Cyclic, q)?, &[1], j + 1)?);
    }
    let (rest, gens) = cyclic_product(&factors[i - 1..])?;
    components.push(frucht_graph(&rest, &gens, i)?);

    let component_sizes = components.iter().map(Graph::n).collect();
    let graph = components
        .iter()
        .skip(1)
        .fold(components[0].clone(), |acc, c| disjoint_union(&acc, c));

    let aut = automorphism_group(&graph);
    let expected: u128 = components.iter().map(|c| automorphism_group(c).order()).product();
    if aut.order() != expected || aut.order() != t.order() as u128 {
        return Err(ConstructionError::VerificationFailed(format!(
            "automorphism group has order {}, expected {}",
            aut.order(),
            t.order()
        )));
    }
    let (at, _) = aut.to_table(DEFAULT_TABLE_CAP)?;
    if !is_isomorphic_groups(&at, t) {
        return Err(ConstructionError::VerificationFailed("automorphism group has the wrong isomorphism type".into()));
    }
    let fix = fixing_number_in(&aut).0;
    if fix != i {
        return Err(ConstructionError::VerificationFailed(format!("fixing number {fix}, expected {i}")));
    }
    Ok(AbelianAchiever {
        graph,
        factors,
        component_sizes,
        fix,
    })
}
