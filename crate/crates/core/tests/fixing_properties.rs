use graphfix::aut::automorphism_group;
use graphfix::fixing::{
    enumerate_graphs, fix_upper_bound, fixing_number, fixing_number_in, greedy_all_sizes, greedy_fix,
    is_determining_set, is_fixing_set, verify_orbit_product, GreedyMode, TieBreak, DEFAULT_NODE_CAP,
};
use graphfix::constructions::gadget_product_union;
use graphfix::graph::{sequence_graph, Graph};
use graphfix::perm::DEFAULT_TABLE_CAP;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Every permutation of `0..n` in lexicographic order.
fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Automorphisms by trying every vertex permutation.
fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let edges = g.edges();
    all_perms(g.n())
        .into_iter()
        .filter(|p| edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v])))
        .collect()
}

fn brute_fix(g: &Graph) -> usize {
    let auts = brute_automorphisms(g);
    let n = g.n();
    (0..1u32 << n)
        .filter(|&m| auts.iter().filter(|p| (0..n).all(|v| m >> v & 1 == 0 || p[v] == v)).count() == 1)
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

#[test]
fn fixing_and_determining_sets_coincide_on_small_graphs() {
    for n in 1..=5 {
        for g in enumerate_graphs(n).unwrap() {
            for m in 0..1u32 << n {
                let s: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
                assert_eq!(is_fixing_set(&g, &s).unwrap(), is_determining_set(&g, &s).unwrap());
            }
        }
    }
}

#[test]
fn only_complete_and_empty_graphs_need_n_minus_one() {
    for n in 2..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let m = g.edge_count();
            let extreme = m == 0 || m == n * (n - 1) / 2;
            assert_eq!(fixing_number(&g).0 == n - 1, extreme, "{g:?}");
        }
    }
}

#[test]
fn greedy_never_beats_fix_on_small_graphs() {
    for n in 1..=7 {
        for g in enumerate_graphs(n).unwrap() {
            let fix = fixing_number(&g).0;
            let sizes = greedy_all_sizes(&g, GreedyMode::Collapse, DEFAULT_NODE_CAP).unwrap();
            assert!(sizes.iter().all(|&s| s >= fix));
        }
    }
}

#[test]
fn fix_respects_the_group_bound() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let aut = automorphism_group(&g);
            if aut.order() > 120 {
                continue;
            }
            let (t, _) = aut.to_table(DEFAULT_TABLE_CAP).unwrap();
            assert!(fixing_number_in(&aut).0 <= fix_upper_bound(&t).unwrap());
        }
    }
}

/// An alphabet permutation fixes a set of labelled vertices exactly when it
/// fixes every letter used in their labels.
#[test]
fn sequence_graph_stabilizers_are_letter_stabilizers() {
    for n in [4usize, 5] {
        for k in 1..=2 {
            let s = sequence_graph(n, k).unwrap();
            let m = s.labels.len();
            let sigmas: Vec<(Vec<usize>, Vec<usize>)> = all_perms(n)
                .into_iter()
                .map(|p| {
                    let ind = s.induced_permutation(&p);
                    (p, ind)
                })
                .collect();
            for a in 0..m {
                for b in a..m {
                    let mut letters = s.labels[a].symbols();
                    letters.extend(s.labels[b].symbols());
                    for (p, ind) in &sigmas {
                        let fixes_vertices = ind[a] == a && ind[b] == b;
                        let fixes_letters = letters.iter().all(|&x| p[x - 1] == x - 1);
                        assert_eq!(fixes_vertices, fixes_letters, "n={n} k={k}");
                    }
                }
            }
        }
    }
}

#[test]
fn gadget_union_multiplies_groups_and_adds_fix() {
    let small: Vec<Graph> = (1..=4).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
    for g1 in small.iter().step_by(2) {
        for g2 in small.iter().skip(1).step_by(3) {
            let u = gadget_product_union(g1, g2, None).unwrap();
            let (a1, a2) = (automorphism_group(g1), automorphism_group(g2));
            assert_eq!(automorphism_group(&u.graph).order(), a1.order() * a2.order());
            assert_eq!(fixing_number(&u.graph).0, fixing_number(g1).0 + fixing_number(g2).0);
        }
    }
}

proptest! {
    #[test]
    fn fix_matches_brute_force(g in arb_graph(7)) {
        prop_assert_eq!(fixing_number(&g).0, brute_fix(&g));
    }

    #[test]
    fn witnesses_fix_and_multiply_out(g in arb_graph(9)) {
        let (fix, w) = fixing_number(&g);
        prop_assert_eq!(w.len(), fix);
        prop_assert!(is_fixing_set(&g, &w).unwrap());
        prop_assert!(verify_orbit_product(&g, &w).unwrap());
    }

    #[test]
    fn greedy_sets_fix(g in arb_graph(9)) {
        let fix = fixing_number(&g).0;
        for tie in [TieBreak::LowestId, TieBreak::HighestId] {
            let s = greedy_fix(&g, tie);
            prop_assert!(is_fixing_set(&g, &s).unwrap());
            prop_assert!(s.len() >= fix);
        }
    }

    #[test]
    fn supersets_of_fixing_sets_fix(g in arb_graph(8), extra in 0usize..8) {
        let (_, mut w) = fixing_number(&g);
        let v = extra % g.n();
        if !w.contains(&v) {
            w.push(v);
        }
        prop_assert!(is_fixing_set(&g, &w).unwrap());
    }
}
