//! Fixing sets, fixing numbers and the greedy fixing procedure.

mod enumerate;

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::aut::{automorphism_group, canonical_form};
use crate::catalog::identify_group;
use crate::graph::Graph;
use crate::perm::{group_length, prime_factor_count, GroupError, GroupTable, PermGroup, DEFAULT_TABLE_CAP};

pub use enumerate::{enumerate_graphs, group_fixing_numbers_observed, MAX_ENUMERATION_N};

/// Default cap on `|Aut(G)|` for element-by-element enumeration.
pub const DEFAULT_ELEMENT_CAP: usize = 10_000;
/// Default cap on distinct states explored by [`greedy_all_sizes`].
pub const DEFAULT_NODE_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FixError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("the given vertices do not form a fixing set")]
    NotAFixingSet,
    #[error("automorphism group of order {order} exceeds enumeration cap {cap}")]
    AutTooLarge { order: u128, cap: usize },
    #[error("search explored more than {cap} states")]
    NodeCap { cap: usize },
    #[error("graphs on {n} vertices exceed the enumeration cap {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn check_vertices(g: &Graph, s: &[usize]) -> Result<(), FixError> {
    match s.iter().find(|&&v| v >= g.n()) {
        Some(&vertex) => Err(FixError::VertexOutOfRange { vertex, n: g.n() }),
        None => Ok(()),
    }
}

/// Whether only the identity automorphism fixes every vertex of `s`.
pub fn is_fixing_set(g: &Graph, s: &[usize]) -> Result<bool, FixError> {
    check_vertices(g, s)?;
    Ok(is_fixing_set_in(&automorphism_group(g), s)?)
}

pub fn is_fixing_set_in(aut: &PermGroup, s: &[usize]) -> Result<bool, GroupError> {
    Ok(aut.pointwise_stabilizer(s)?.is_trivial())
}

/// Whether distinct automorphisms always differ somewhere on `s`, checked by
/// listing the group and comparing restrictions.
pub fn is_determining_set(g: &Graph, s: &[usize]) -> Result<bool, FixError> {
    check_vertices(g, s)?;
    let aut = automorphism_group(g);
    let elems = list_elements(&aut, DEFAULT_ELEMENT_CAP)?;
    Ok(is_determining_set_in(&elems, s))
}

pub fn is_determining_set_in(elems: &[crate::perm::Permutation], s: &[usize]) -> bool {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    elems.iter().all(|p| seen.insert(s.iter().map(|&v| p.apply(v)).collect()))
}

fn list_elements(aut: &PermGroup, cap: usize) -> Result<Vec<crate::perm::Permutation>, FixError> {
    aut.elements(cap).map_err(|e| match e {
        GroupError::OrderAboveCap { order, cap } => FixError::AutTooLarge { order, cap },
        e => FixError::Group(e),
    })
}

/// The fixing number with a witness of that size.
pub fn fixing_number(g: &Graph) -> (usize, Vec<usize>) {
    fixing_number_in(&automorphism_group(g))
}

/// Fixing number of a permutation group: the smallest set of points whose
/// pointwise stabilizer is trivial.
///
/// Sizes are tried in increasing order. At every level only one point per
/// orbit of the current stabilizer is tried (some image of any fixing set
/// under the stabilizer passes through the representative), and a branch
/// is cut once the stabilizer is larger than its largest orbit raised to
/// the remaining budget.
pub fn fixing_number_in(aut: &PermGroup) -> (usize, Vec<usize>) {
    let mut chosen = Vec::new();
    for size in 0..=aut.degree() {
        if fix_search(aut, size, &mut chosen) {
            chosen.sort_unstable();
            return (size, chosen);
        }
    }
    unreachable!("fixing every point gives a fixing set")
}

fn fix_search(h: &PermGroup, budget: usize, chosen: &mut Vec<usize>) -> bool {
    if h.is_trivial() {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let mut orbits: Vec<Vec<usize>> = h.orbits().into_iter().filter(|o| o.len() > 1).collect();
    let largest = orbits.iter().map(Vec::len).max().unwrap_or(1) as u128;
    if largest.checked_pow(budget as u32).is_some_and(|cap| h.order() > cap) {
        return false;
    }
    orbits.sort_by_key(|o| std::cmp::Reverse(o.len()));
    for o in orbits {
        let v = o[0];
        let sub = h.point_stabilizer(v).expect("v is a point of the group");
        chosen.push(v);
        if fix_search(&sub, budget - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    LowestId,
    HighestId,
}

/// Repeatedly fixes a vertex whose orbit under the current stabilizer is as
/// large as possible, until the stabilizer is trivial.
pub fn greedy_fix(g: &Graph, tie_break: TieBreak) -> Vec<usize> {
    greedy_fix_in(&automorphism_group(g), tie_break)
}

pub fn greedy_fix_in(aut: &PermGroup, tie_break: TieBreak) -> Vec<usize> {
    let mut h = aut.clone();
    let mut out = Vec::new();
    while !h.is_trivial() {
        let orbits = h.orbits();
        let best = orbits.iter().map(Vec::len).max().expect("nonempty domain");
        let candidates = orbits.iter().filter(|o| o.len() == best).flatten().copied();
        let v = match tie_break {
            TieBreak::LowestId => candidates.min(),
            TieBreak::HighestId => candidates.max(),
        }
        .expect("a largest orbit exists");
        out.push(v);
        h = h.point_stabilizer(v).expect("v is a point of the group");
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GreedyMode {
    /// One vertex per orbit of maximal size; choices in one orbit lead to
    /// conjugate states.
    #[default]
    Collapse,
    /// Every vertex of maximal orbit size.
    Strict,
}

/// Sizes of all fixing sets the greedy procedure can end with, over every
/// choice it may make.
pub fn greedy_all_sizes(g: &Graph, mode: GreedyMode, node_cap: usize) -> Result<BTreeSet<usize>, FixError> {
    greedy_all_sizes_in(&automorphism_group(g), mode, node_cap)
}

pub fn greedy_all_sizes_in(aut: &PermGroup, mode: GreedyMode, node_cap: usize) -> Result<BTreeSet<usize>, FixError> {
    let mut memo: HashMap<Vec<usize>, BTreeSet<usize>> = HashMap::new();
    greedy_branch(aut, &mut Vec::new(), mode, node_cap, &mut memo)
}

fn greedy_branch(
    h: &PermGroup,
    fixed: &mut Vec<usize>,
    mode: GreedyMode,
    node_cap: usize,
    memo: &mut HashMap<Vec<usize>, BTreeSet<usize>>,
) -> Result<BTreeSet<usize>, FixError> {
    if h.is_trivial() {
        return Ok(BTreeSet::from([fixed.len()]));
    }
    let mut key = fixed.clone();
    key.sort_unstable();
    if let Some(r) = memo.get(&key) {
        return Ok(r.clone());
    }
    if memo.len() >= node_cap {
        return Err(FixError::NodeCap { cap: node_cap });
    }
    let orbits = h.orbits();
    let best = orbits.iter().map(Vec::len).max().expect("nonempty domain");
    let choices: Vec<usize> = match mode {
        GreedyMode::Collapse => orbits.iter().filter(|o| o.len() == best).map(|o| o[0]).collect(),
        GreedyMode::Strict => orbits.iter().filter(|o| o.len() == best).flatten().copied().collect(),
    };
    let mut out = BTreeSet::new();
    for v in choices {
        let sub = h.point_stabilizer(v).expect("v is a point of the group");
        fixed.push(v);
        let r = greedy_branch(&sub, fixed, mode, node_cap, memo);
        fixed.pop();
        out.extend(r?);
    }
    memo.insert(key, out.clone());
    Ok(out)
}

/// Whether the orbit sizes along the list, each taken in the stabilizer of
/// the earlier vertices, multiply to `|Aut(G)|`.
pub fn verify_orbit_product(g: &Graph, ordered: &[usize]) -> Result<bool, FixError> {
    check_vertices(g, ordered)?;
    verify_orbit_product_in(&automorphism_group(g), ordered)
}

pub fn verify_orbit_product_in(aut: &PermGroup, ordered: &[usize]) -> Result<bool, FixError> {
    let mut h = aut.clone();
    let mut product: u128 = 1;
    for &v in ordered {
        product *= h.orbit(v)?.len() as u128;
        h = h.point_stabilizer(v)?;
    }
    if !h.is_trivial() {
        return Err(FixError::NotAFixingSet);
    }
    Ok(product == aut.order())
}

/// min(l(Γ), Ω(|Γ|)).
pub fn fix_upper_bound(t: &GroupTable) -> Result<usize, GroupError> {
    let l = group_length(t)?;
    Ok(l.min(prime_factor_count(t.order() as u64) as usize))
}

/// Summary of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixReport {
    /// Canonical certificate in graph6.
    pub graph6: String,
    pub aut_order: u128,
    pub group: Option<String>,
    pub fix: usize,
    pub witness: Vec<usize>,
    pub greedy_sizes: Vec<usize>,
}

impl FixReport {
    pub fn new(g: &Graph) -> Result<FixReport, FixError> {
        let aut = automorphism_group(g);
        let (fix, witness) = fixing_number_in(&aut);
        let greedy_sizes = greedy_all_sizes_in(&aut, GreedyMode::Collapse, DEFAULT_NODE_CAP)?
            .into_iter()
            .collect();
        let group = if aut.order() <= 120 {
            let (t, _) = aut.to_table(DEFAULT_TABLE_CAP)?;
            identify_group(&t)
        } else {
            None
        };
        Ok(FixReport {
            graph6: String::from_utf8(canonical_form(g)).expect("graph6 is ASCII"),
            aut_order: aut.order(),
            group,
            fix,
            witness,
            greedy_sizes,
        })
    }
}
