use graphfix::aut::{are_isomorphic, automorphism_group, is_automorphism};
use graphfix::catalog::catalog;
use graphfix::constructions::{frucht, frucht_family_zn};
use graphfix::fixing::{fixing_number_in, is_fixing_set_in};
use graphfix::perm::{is_isomorphic_groups, DEFAULT_TABLE_CAP};

#[test]
fn every_small_catalog_group_is_realized() {
    for e in catalog().into_iter().filter(|e| e.order() <= 24) {
        let f = frucht(&e.table, &e.gens, 1).unwrap();
        let aut = automorphism_group(&f.graph);
        assert_eq!(aut.order(), e.order() as u128, "{}", e.key);
        let (t, _) = aut.to_table(DEFAULT_TABLE_CAP).unwrap();
        assert!(is_isomorphic_groups(&t, &e.table), "{}", e.key);
        assert_eq!(fixing_number_in(&aut).0, 1, "{}", e.key);
        for v in f.group_nodes() {
            assert!(is_fixing_set_in(&aut, &[v]).unwrap(), "{} node {v}", e.key);
        }
    }
}

#[test]
fn translations_are_automorphisms_and_act_regularly() {
    for e in catalog().into_iter().filter(|e| e.order() <= 12) {
        let f = frucht(&e.table, &e.gens, 2).unwrap();
        for x in 0..e.order() {
            let p = f.translation(x);
            assert!(is_automorphism(&f.graph, &p), "{} x={x}", e.key);
            // the identity node goes to x, so distinct x give distinct maps
            assert_eq!(p.apply(e.table.identity()), x);
        }
    }
}

#[test]
fn scale_gives_pairwise_distinct_graphs() {
    let gs: Vec<_> = (1..=4).map(|t| frucht_family_zn(5, t).unwrap()).collect();
    for (i, a) in gs.iter().enumerate() {
        assert_eq!(automorphism_group(a).order(), 5);
        for b in &gs[i + 1..] {
            assert!(!are_isomorphic(a, b));
        }
    }
}
