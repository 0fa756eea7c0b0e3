//! Permutations, permutation groups and abstract finite groups.

mod abelian;
mod bounds;
mod chain;
mod permutation;
mod table;

pub use abelian::{abelian_decomposition, elementary_divisors, CyclicFactor};
pub use bounds::{
    factorial_prime_count, group_length, group_length_capped, has_pk_cycle, prime_factor_count,
    sn_fix_upper_bound, sn_length_formula, DEFAULT_LATTICE_CAP,
};
pub use chain::PermGroup;
pub use permutation::Permutation;
pub use table::{
    direct_product, direct_product_capped, find_isomorphism, is_isomorphic_groups, named_group,
    named_group_capped, product_index, symmetric_elements, GroupTable, NamedGroup, DEFAULT_TABLE_CAP,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("image list is not a bijection")]
    NotAPermutation,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("cannot parse permutation {0:?}")]
    Parse(String),
    #[error("group order {order} exceeds cap {cap}")]
    OrderAboveCap { order: u128, cap: usize },
    #[error("group is not abelian")]
    NotAbelian,
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("invalid {what}: {value}")]
    InvalidParameter { what: &'static str, value: usize },
    #[error("element has order {order}, expected {expected}")]
    WrongOrder { order: u64, expected: u64 },
}
