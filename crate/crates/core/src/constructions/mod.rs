//! Graphs with prescribed automorphism groups.

mod abelian;
mod cayley;
mod coset;
mod frucht;
mod orbital;
mod product;

pub use abelian::{abelian_achiever, AbelianAchiever};
pub use cayley::{cayley_digraph, LabeledCayleyDigraph};
pub use coset::{coset_action, CosetAction};
pub use frucht::{frucht, frucht_family_zn, frucht_graph, FruchtGraph};
pub use orbital::{edge_orbitals, orbital_graph_search, GroupAction, OrbitalSearch};
pub use product::{gadget_product_union, ProductUnion};

use crate::graph::GraphError;
use crate::perm::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("the given elements do not generate the group")]
    NotGenerating,
    #[error("element {0} cannot be used as a generator")]
    InvalidGenerator(usize),
    #[error("invalid {what}: {value}")]
    InvalidParameter { what: &'static str, value: usize },
    #[error("group is not abelian")]
    NotAbelian,
    #[error("target fixing number {i} outside 1..={k}")]
    FixOutOfRange { i: usize, k: usize },
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("combined action is not faithful")]
    Unfaithful,
    #[error("target group is trivial")]
    TrivialTarget,
    #[error("actions disagree on the acting group")]
    GroupMismatch,
    #[error("{needed} candidate graphs exceed the budget of {budget}")]
    BudgetExhausted { needed: u128, budget: usize },
    #[error("constructed graph failed verification: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
