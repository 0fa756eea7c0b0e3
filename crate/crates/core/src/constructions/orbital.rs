use std::collections::BTreeMap;

use super::coset::CosetAction;
use super::ConstructionError;
use crate::aut::{automorphism_group, canonical_form};
use crate::graph::{graph6_decode, Graph};
use crate::perm::{is_isomorphic_groups, GroupTable, Permutation, DEFAULT_TABLE_CAP};

/// A group given by its table acting on `0..degree`, one permutation per
/// element.
#[derive(Debug, Clone)]
pub struct GroupAction {
    pub table: GroupTable,
    pub perms: Vec<Permutation>,
}

impl GroupAction {
    pub fn degree(&self) -> usize {
        self.perms.first().map_or(0, Permutation::degree)
    }

    pub fn is_faithful(&self) -> bool {
        self.perms.iter().filter(|p| p.is_identity()).count() == 1
    }

    /// The disjoint union of actions of one group on separate point sets.
    pub fn combine(actions: &[GroupAction]) -> Result<GroupAction, ConstructionError> {
        let first = actions.first().ok_or(ConstructionError::GroupMismatch)?;
        if actions.iter().any(|a| a.table != first.table) {
            return Err(ConstructionError::GroupMismatch);
        }
        let total: usize = actions.iter().map(GroupAction::degree).sum();
        let perms = (0..first.table.order())
            .map(|x| {
                let mut img = Vec::with_capacity(total);
                let mut offset = 0;
                for a in actions {
                    img.extend(a.perms[x].images().iter().map(|&p| p + offset));
                    offset += a.degree();
                }
                Permutation::from_images(img).expect("blocks are permuted separately")
            })
            .collect();
        Ok(GroupAction {
            table: first.table.clone(),
            perms,
        })
    }
}

impl From<&CosetAction> for GroupAction {
    fn from(a: &CosetAction) -> GroupAction {
        GroupAction {
            table: a.table.clone(),
            perms: a.element_perms.clone(),
        }
    }
}

/// Orbits of the action on unordered pairs `{u, v}`, each sorted with
/// `u < v`, ordered by their smallest pair.
pub fn edge_orbitals(action: &GroupAction) -> Vec<Vec<(usize, usize)>> {
    let n = action.degree();
    let mut orbit_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut out: Vec<Vec<(usize, usize)>> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if orbit_of.contains_key(&(u, v)) {
                continue;
            }
            let mut orb: Vec<(usize, usize)> = action
                .perms
                .iter()
                .map(|p| {
                    let (a, b) = (p.apply(u), p.apply(v));
                    (a.min(b), a.max(b))
                })
                .collect();
            orb.sort_unstable();
            orb.dedup();
            for &e in &orb {
                orbit_of.insert(e, out.len());
            }
            out.push(orb);
        }
    }
    out
}

/// Result of an orbital search.
#[derive(Debug, Clone)]
pub struct OrbitalSearch {
    pub orbital_count: usize,
    pub candidates: usize,
    /// Pairwise non-isomorphic graphs with the target automorphism group,
    /// sorted by canonical certificate.
    pub graphs: Vec<Graph>,
}

/// Tries every union of edge orbitals of the combined action and keeps the
/// graphs whose automorphism group is isomorphic to `target`.
pub fn orbital_graph_search(
    actions: &[GroupAction],
    target: &GroupTable,
    max_orbital_subsets: usize,
) -> Result<OrbitalSearch, ConstructionError> {
    if target.order() == 1 {
        return Err(ConstructionError::TrivialTarget);
    }
    let action = GroupAction::combine(actions)?;
    if !action.is_faithful() {
        return Err(ConstructionError::Unfaithful);
    }
    let orbitals = edge_orbitals(&action);
    let needed = 1u128.checked_shl(orbitals.len() as u32).unwrap_or(u128::MAX);
    if needed > max_orbital_subsets as u128 {
        return Err(ConstructionError::BudgetExhausted {
            needed,
            budget: max_orbital_subsets,
        });
    }
    let n = action.degree();
    let mut found: BTreeMap<Vec<u8>, ()> = BTreeMap::new();
    for mask in 0..needed as u64 {
        let edges = orbitals
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .flat_map(|(_, o)| o.iter().copied());
        let g = Graph::new(n, edges)?;
        let aut = automorphism_group(&g);
        if aut.order() != target.order() as u128 {
            continue;
        }
        let (t, _) = aut.to_table(DEFAULT_TABLE_CAP)?;
        if is_isomorphic_groups(&t, target) {
            found.insert(canonical_form(&g), ());
        }
    }
    Ok(OrbitalSearch {
        orbital_count: orbitals.len(),
        candidates: needed as usize,
        graphs: found.keys().map(|c| graph6_decode(c).expect("certificates decode")).collect(),
    })
}
