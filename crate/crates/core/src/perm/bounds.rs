//! Length of subgroup chains and the numeric bounds derived from it.

use super::abelian::prime_factors;
use super::{GroupError, GroupTable, Permutation};

/// Default order cap for subgroup-lattice work.
pub const DEFAULT_LATTICE_CAP: usize = 120;

/// Ω(m): prime factors of `m` counted with multiplicity.
pub fn prime_factor_count(m: u64) -> u32 {
    prime_factors(m).iter().map(|&(_, e)| e).sum()
}

/// Ω(n!).
pub fn factorial_prime_count(n: u64) -> u32 {
    (2..=n).map(prime_factor_count).sum()
}

/// Length of the longest chain `e < Γ₁ < … < Γ`, capped at
/// [`DEFAULT_LATTICE_CAP`].
pub fn group_length(t: &GroupTable) -> Result<usize, GroupError> {
    group_length_capped(t, DEFAULT_LATTICE_CAP)
}

pub fn group_length_capped(t: &GroupTable, cap: usize) -> Result<usize, GroupError> {
    let lat = t.subgroup_lattice(cap)?;
    // subgroups are sorted by size, so every join points forward
    let mut best = vec![0usize; lat.subgroups.len()];
    for &(a, b) in &lat.joins {
        debug_assert!(a < b);
        best[b] = best[b].max(best[a] + 1);
    }
    Ok(*best.last().expect("the trivial subgroup is always present"))
}

/// ⌈3n/2⌉ − b(n) − 1, with b(n) the binary digit sum of `n`.
pub fn sn_length_formula(n: u64) -> u64 {
    (3 * n).div_ceil(2) - u64::from(n.count_ones()) - 1
}

/// Upper bound on the largest fixing number of a graph with automorphism
/// group Sₙ: an element of prime-power order `p^a ≤ n` (a single cycle)
/// leaves at most Ω(n!/p^a) + 1, and neither the chain length nor Ω(n!)
/// can be exceeded.
pub fn sn_fix_upper_bound(n: u64) -> Result<u64, GroupError> {
    if n < 2 {
        return Err(GroupError::InvalidParameter { what: "symmetric degree", value: n as usize });
    }
    let omega = u64::from(factorial_prime_count(n));
    let mut best = omega.min(sn_length_formula(n));
    for p in 2..=n {
        if prime_factors(p).len() != 1 || prime_factors(p)[0].1 != 1 {
            continue;
        }
        let mut a = 1;
        let mut q = p;
        while q <= n {
            best = best.min(omega - a + 1);
            a += 1;
            q *= p;
        }
    }
    Ok(best)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && prime_factors(p) == [(p, 1)]
}

/// For `g` of order exactly `p^k`, a cycle of `g` of that length.
pub fn has_pk_cycle(p: u64, k: u32, g: &Permutation) -> Result<Vec<usize>, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::InvalidParameter { what: "prime", value: p as usize });
    }
    if k == 0 {
        return Err(GroupError::InvalidParameter { what: "prime exponent", value: 0 });
    }
    let want = p.checked_pow(k).ok_or(GroupError::InvalidParameter { what: "prime exponent", value: k as usize })?;
    let order = g.order();
    if order != want {
        return Err(GroupError::WrongOrder { order, expected: want });
    }
    // the order is the lcm of cycle lengths, all of which divide p^k, so one
    // of them equals p^k
    Ok(g.cycles()
        .into_iter()
        .find(|c| c.len() as u64 == want)
        .expect("an element of order p^k has a p^k-cycle"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{direct_product, named_group, NamedGroup};

    #[test]
    fn omega_examples() {
        assert_eq!(prime_factor_count(12), 3);
        assert_eq!(prime_factor_count(1), 0);
        assert_eq!(prime_factor_count(120), 5);
        assert_eq!(factorial_prime_count(5), 5);
    }

    #[test]
    fn length_examples() {
        let trivial = named_group(NamedGroup::Cyclic, 1).unwrap();
        assert_eq!(group_length(&trivial).unwrap(), 0);
        assert_eq!(group_length(&named_group(NamedGroup::Cyclic, 12).unwrap()).unwrap(), 3);
        assert_eq!(group_length(&named_group(NamedGroup::Symmetric, 4).unwrap()).unwrap(), 4);
        assert_eq!(group_length(&named_group(NamedGroup::Alternating, 4).unwrap()).unwrap(), 3);
        assert_eq!(group_length(&named_group(NamedGroup::Dihedral, 6).unwrap()).unwrap(), 3);
        let s4 = named_group(NamedGroup::Symmetric, 4).unwrap();
        let s4xz2 = direct_product(&s4, &named_group(NamedGroup::Cyclic, 2).unwrap()).unwrap();
        assert!(matches!(group_length_capped(&s4xz2, 24), Err(GroupError::OrderAboveCap { .. })));
    }

    #[test]
    fn symmetric_length_matches_formula() {
        for n in 2..=4 {
            let s = named_group(NamedGroup::Symmetric, n).unwrap();
            assert_eq!(group_length(&s).unwrap() as u64, sn_length_formula(n as u64));
        }
    }

    #[test]
    fn length_of_p_groups_is_exponent() {
        // a group of order p^k has chains through every intermediate order
        for (t, k) in [
            (named_group(NamedGroup::Cyclic, 8).unwrap(), 3),
            (named_group(NamedGroup::Dihedral, 4).unwrap(), 3),
            (named_group(NamedGroup::Cyclic, 27).unwrap(), 3),
        ] {
            assert_eq!(group_length(&t).unwrap(), k);
        }
    }

    #[test]
    fn formula_values() {
        assert_eq!(sn_length_formula(3), 2);
        assert_eq!(sn_length_formula(9), 11);
        assert_eq!(sn_length_formula(10), 12);
    }

    #[test]
    fn sn_upper_bounds() {
        let got: Vec<u64> = (2..=10).map(|n| sn_fix_upper_bound(n).unwrap()).collect();
        assert_eq!(got, vec![1, 2, 3, 4, 6, 7, 9, 11, 12]);
        assert!(sn_fix_upper_bound(1).is_err());
    }

    #[test]
    fn pk_cycles() {
        let g = Permutation::parse("(0 1 2 3)", 6).unwrap();
        assert_eq!(has_pk_cycle(2, 2, &g).unwrap(), vec![0, 1, 2, 3]);
        let g = Permutation::parse("(0 1)(2 3 4 5)", 6).unwrap();
        assert_eq!(has_pk_cycle(2, 2, &g).unwrap(), vec![2, 3, 4, 5]);
        let g = Permutation::parse("(0 1 2 3 4 5)", 6).unwrap();
        assert!(matches!(has_pk_cycle(2, 1, &g), Err(GroupError::WrongOrder { .. })));
        assert!(has_pk_cycle(4, 1, &g).is_err());
    }
}
