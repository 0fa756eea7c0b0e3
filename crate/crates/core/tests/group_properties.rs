use std::collections::{BTreeSet, HashSet};

use graphfix::catalog::catalog;
use graphfix::perm::{
    direct_product, elementary_divisors, find_isomorphism, has_pk_cycle, is_isomorphic_groups, named_group,
    symmetric_elements, GroupError, GroupTable, NamedGroup, PermGroup, Permutation,
};
use proptest::prelude::*;

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn arb_gens() -> impl Strategy<Value = (usize, Vec<Permutation>)> {
    (2usize..=7).prop_flat_map(|n| (Just(n), proptest::collection::vec(arb_perm(n), 1..=3)))
}

/// Closure under multiplication by generators, breadth first.
fn closure(n: usize, gens: &[Permutation]) -> HashSet<Permutation> {
    let mut seen = HashSet::from([Permutation::identity(n)]);
    let mut frontier = vec![Permutation::identity(n)];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = p.then(g);
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen
}

fn cyclic(n: usize) -> GroupTable {
    named_group(NamedGroup::Cyclic, n).unwrap()
}

proptest! {
    #[test]
    fn chain_order_matches_closure((n, gens) in arb_gens()) {
        let g = PermGroup::from_generators(n, &gens).unwrap();
        let all = closure(n, &gens);
        prop_assert_eq!(g.order(), all.len() as u128);
        for p in all.iter().take(50) {
            prop_assert!(g.contains(p));
        }
    }

    #[test]
    fn orbit_stabilizer((n, gens) in arb_gens(), v in 0usize..7) {
        let g = PermGroup::from_generators(n, &gens).unwrap();
        let v = v % n;
        let orbit = g.orbit(v).unwrap();
        let stab = g.point_stabilizer(v).unwrap();
        prop_assert_eq!(orbit.len() as u128 * stab.order(), g.order());
        let all = closure(n, &gens);
        let images: BTreeSet<usize> = all.iter().map(|p| p.apply(v)).collect();
        prop_assert_eq!(images, orbit.into_iter().collect::<BTreeSet<_>>());
        prop_assert_eq!(stab.order(), all.iter().filter(|p| p.apply(v) == v).count() as u128);
    }

    #[test]
    fn non_members_are_rejected((n, gens) in arb_gens(), q in arb_perm(7)) {
        if q.degree() == n {
            let g = PermGroup::from_generators(n, &gens).unwrap();
            prop_assert_eq!(g.contains(&q), closure(n, &gens).contains(&q));
        }
    }
}

#[test]
fn a4_has_one_klein_four_group_and_s4_has_four() {
    let v4 = direct_product(&cyclic(2), &cyclic(2)).unwrap();
    let count = |t: &GroupTable| {
        t.subgroups(120)
            .unwrap()
            .iter()
            .filter(|s| s.len() == 4 && is_isomorphic_groups(&t.subgroup_table(s).unwrap(), &v4))
            .count()
    };
    assert_eq!(count(&symmetric_elements(NamedGroup::Alternating, 4).1), 1);
    assert_eq!(count(&symmetric_elements(NamedGroup::Symmetric, 4).1), 4);
}

#[test]
fn isomorphisms_are_bijective_homomorphisms() {
    let all = catalog();
    for a in &all {
        for b in all.iter().filter(|b| b.order() == a.order()) {
            let Some(f) = find_isomorphism(&a.table, &b.table) else {
                assert!(!is_isomorphic_groups(&b.table, &a.table), "{} {}", a.key, b.key);
                continue;
            };
            assert!(is_isomorphic_groups(&b.table, &a.table));
            let image: BTreeSet<usize> = f.iter().copied().collect();
            assert_eq!(image.len(), a.order());
            for x in 0..a.order() {
                for y in 0..a.order() {
                    assert_eq!(f[a.table.mul(x, y)], b.table.mul(f[x], f[y]));
                }
            }
        }
    }
}

/// Element-order counts determine a finite abelian group, so rebuilding the
/// product from the divisors must reproduce them.
#[test]
fn elementary_divisors_rebuild_the_group() {
    for (a, b) in [(2, 2), (2, 4), (4, 6), (3, 6), (6, 10), (12, 1), (8, 9)] {
        let t = direct_product(&cyclic(a), &cyclic(b)).unwrap();
        let d = elementary_divisors(&t).unwrap();
        assert!(d.iter().all(|&q| q > 1));
        let rebuilt = d.iter().fold(cyclic(1), |acc, &q| direct_product(&acc, &cyclic(q as usize)).unwrap());
        assert_eq!(rebuilt.order_profile(), t.order_profile(), "Z{a} x Z{b}");
    }
    assert_eq!(elementary_divisors(&cyclic(12)).unwrap(), vec![3, 4]);
    assert!(elementary_divisors(&named_group(NamedGroup::Dihedral, 3).unwrap()).is_err());
}

#[test]
fn prime_power_elements_have_full_cycles() {
    let (elems, _) = symmetric_elements(NamedGroup::Symmetric, 6);
    for e in &elems {
        let o = e.order();
        for (p, k) in [(2u64, 1u32), (2, 2), (3, 1), (5, 1)] {
            if o == p.pow(k) {
                assert_eq!(has_pk_cycle(p, k, e).unwrap().len() as u64, o);
            }
        }
    }
    let c6 = Permutation::parse("(0 1 2 3 4 5)", 6).unwrap();
    assert!(matches!(has_pk_cycle(2, 1, &c6), Err(GroupError::WrongOrder { .. })));
    assert!(has_pk_cycle(4, 1, &c6).is_err());
}
