//! End-to-end acceptance run. Prints one line per criterion and exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use graphfix::aut::{are_isomorphic, automorphism_group};
use graphfix::catalog::{catalog, lookup};
use graphfix::constructions::{abelian_achiever, frucht};
use graphfix::fixing::{
    enumerate_graphs, fix_upper_bound, fixing_number, fixing_number_in, is_determining_set, is_fixing_set,
    verify_orbit_product_in,
};
use graphfix::graph::{complete, cycle, disjoint_union, inflate_k, path, sequence_graph, standard, Graph, StandardKind};
use graphfix::perm::{
    direct_product, is_isomorphic_groups, named_group, sn_fix_upper_bound, sn_length_formula, symmetric_elements,
    GroupTable, NamedGroup, DEFAULT_TABLE_CAP,
};
use graphfix_cli::{cmd_greedy_experiment, cmd_sn_table, frucht_suite, GreedyOptions, Pool, REFERENCE_SN_LOWER};

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn table_of(g: &Graph) -> GroupTable {
    automorphism_group(g).to_table(DEFAULT_TABLE_CAP).expect("small group").0
}

fn dihedral(n: usize) -> GroupTable {
    named_group(NamedGroup::Dihedral, n).unwrap()
}

fn symmetric(n: usize) -> GroupTable {
    symmetric_elements(NamedGroup::Symmetric, n).1
}

fn graph_is(g: &Graph, order: u128, group: &GroupTable, fix: usize, label: &str) -> Result<(), String> {
    let aut = automorphism_group(g);
    let (f, _) = fixing_number_in(&aut);
    ensure(aut.order() == order, format!("{label}: |Aut| = {}", aut.order()))?;
    ensure(is_isomorphic_groups(&table_of(g), group), format!("{label}: wrong group"))?;
    ensure(f == fix, format!("{label}: fix = {f}"))
}

fn c1() -> Verdict {
    graph_is(&cycle(6), 12, &dihedral(6), 2, "C6")?;
    graph_is(&disjoint_union(&cycle(3), &path(2)), 12, &dihedral(6), 3, "C3+P2")?;
    Ok("C6 and C3+P2 have group D6 with fix 2 and 3".into())
}

fn c2() -> Verdict {
    let p = standard(StandardKind::Petersen, 0).unwrap();
    graph_is(&p, 120, &symmetric(5), 3, "Petersen")?;
    let pv = automorphism_group(&p.remove_vertex(0).unwrap()).order();
    ensure(pv == 12, format!("|Aut(P - v)| = {pv}"))?;
    Ok("Petersen: |Aut| = 120, S5, fix 3; |Aut(P - v)| = 12".into())
}

fn c3() -> Verdict {
    for n in [4usize, 5] {
        let fact: u128 = (1..=n as u128).product();
        for k in 0..=2 {
            let want = (n - 1).div_ceil(k + 1);
            graph_is(&inflate_k(&complete(n), k), fact, &symmetric(n), want, &format!("Inf^{k}(K{n})"))?;
        }
    }
    Ok("Inf^k(K_n), n in {4,5}, k <= 2: S_n and ceil((n-1)/(k+1))".into())
}

fn c4() -> Verdict {
    for n in [4usize, 5] {
        for k in 0..=2 {
            let s = sequence_graph(n, k).map_err(|e| e.to_string())?;
            ensure(are_isomorphic(&s.graph, &inflate_k(&complete(n), k)), format!("G_{k} over {n}"))?;
        }
    }
    for n in 3..=6 {
        for k in 1..=2 {
            ensure(are_isomorphic(&inflate_k(&cycle(n), k), &cycle(n << k)), format!("Inf^{k}(C{n})"))?;
        }
    }
    Ok("G_k ~ Inf^k(K_n) and Inf^k(C_n) ~ C_(2^k n)".into())
}

fn c5() -> Verdict {
    let mut graphs = 0;
    for n in 1..=6 {
        ensure(fixing_number(&complete(n)).0 == n - 1, format!("K{n}"))?;
        ensure(fixing_number(&Graph::empty(n)).0 == n - 1, format!("E{n}"))?;
        for g in enumerate_graphs(n).unwrap() {
            let m = g.edge_count();
            let extreme = m == 0 || m == n * (n - 1) / 2;
            ensure((fixing_number(&g).0 == n - 1) == extreme, format!("unexpected fix on n = {n}"))?;
            graphs += 1;
        }
    }
    Ok(format!("fix = n - 1 exactly for complete and empty graphs ({graphs} graphs)"))
}

fn c6() -> Verdict {
    let mut subsets = 0usize;
    for n in 1..=5 {
        for g in enumerate_graphs(n).unwrap() {
            for mask in 0..1u32 << n {
                let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let a = is_fixing_set(&g, &s).unwrap();
                let b = is_determining_set(&g, &s).unwrap();
                ensure(a == b, format!("mismatch on {s:?}"))?;
                subsets += 1;
            }
        }
    }
    Ok(format!("fixing and determining agree on {subsets} subsets"))
}

const FRUCHT_REQUIRED: [&str; 17] = [
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z2xZ2", "Z2xZ4", "D3", "D4", "D5", "D6", "A4", "S3", "S4",
];

fn c7() -> Verdict {
    let suite = frucht_suite(24, Pool::default()).map_err(|e| e.to_string())?;
    for name in FRUCHT_REQUIRED {
        let c = suite
            .iter()
            .find(|c| c.key.split(':').next() == Some(name))
            .ok_or(format!("{name} missing"))?;
        ensure(c.aut_isomorphic && c.fix == 1 && c.singleton_fixing, c.key.to_string())?;
    }
    Ok(format!("{} Frucht graphs: Aut ~ group, fix 1, singleton fixing sets", suite.len()))
}

fn c8() -> Verdict {
    for (key, k) in [("Z2xZ2", 2), ("Z2xZ4", 2), ("Z2xZ2xZ3", 3), ("Z12", 2)] {
        let e = lookup(key).unwrap();
        for i in 1..=k {
            let a = abelian_achiever(&e.table, i).map_err(|x| format!("{key} i={i}: {x}"))?;
            ensure(is_isomorphic_groups(&table_of(&a.graph), &e.table), format!("{key} i={i}: group"))?;
            let (f, _) = fixing_number(&a.graph);
            ensure(f == i, format!("{key} i={i}: fix {f}"))?;
        }
        ensure(abelian_achiever(&e.table, k + 1).is_err(), format!("{key}: i = k+1 accepted"))?;
    }
    Ok("abelian achievers realize every i in 1..=k".into())
}

fn c9() -> Verdict {
    let sizes: Vec<u64> = (2..=10).map(|n| sn_fix_upper_bound(n).unwrap()).collect();
    ensure(sizes == [1, 2, 3, 4, 6, 7, 9, 11, 12], format!("upper sizes {sizes:?}"))?;
    ensure(sn_length_formula(10) == 12, "l(S10) formula")?;
    let rep = cmd_sn_table(2, 5, Pool::default()).map_err(|e| e.to_string())?;
    for (row, (n, want)) in rep.records.iter().zip(REFERENCE_SN_LOWER) {
        let got: Vec<usize> = serde_json::from_value(row["lower"].clone()).unwrap();
        ensure(got == want, format!("S{n} lower {got:?}"))?;
    }
    ensure(rep.all_pass(), "sn-table checks")?;
    Ok(format!("upper sizes {sizes:?}; lower rows n <= 5 match"))
}

fn c10() -> Verdict {
    let mut checked = 0;
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let aut = automorphism_group(&g);
            if aut.order() > 120 {
                continue;
            }
            let t = aut.to_table(DEFAULT_TABLE_CAP).unwrap().0;
            let bound = fix_upper_bound(&t).unwrap();
            let f = fixing_number_in(&aut).0;
            ensure(f <= bound, format!("fix {f} > bound {bound}"))?;
            checked += 1;
        }
    }
    Ok(format!("fix <= min(l, Omega) on {checked} graphs"))
}

fn c11() -> Verdict {
    let a4 = symmetric_elements(NamedGroup::Alternating, 4).1;
    let z2 = named_group(NamedGroup::Cyclic, 2).unwrap();
    let v4 = direct_product(&z2, &z2).unwrap();
    let count = a4
        .subgroups(120)
        .unwrap()
        .iter()
        .filter(|s| s.len() == 4 && is_isomorphic_groups(&a4.subgroup_table(s).unwrap(), &v4))
        .count();
    ensure(count == 1, format!("{count} copies"))?;
    Ok("A4 has one subgroup ~ Z2 x Z2".into())
}

fn c12() -> Verdict {
    let a = cmd_greedy_experiment(GreedyOptions::new(7), Pool::default()).map_err(|e| e.to_string())?;
    let b = cmd_greedy_experiment(GreedyOptions::new(7), Pool::new(Some(1))).map_err(|e| e.to_string())?;
    ensure(a.to_json() == b.to_json(), "reports differ between runs")?;
    ensure(a.records.len() == 1252, format!("{} records", a.records.len()))?;
    for r in &a.records {
        ensure(r["singleton"].is_boolean() && r["min_equals_fix"].is_boolean(), "record fields")?;
    }
    Ok(format!(
        "greedy experiment n <= 7 deterministic; all singleton: {}, all min = fix: {}",
        a.summary["all_singleton"], a.summary["all_min_equals_fix"]
    ))
}

fn c13() -> Verdict {
    let mut graphs = vec![
        ("C6".to_string(), cycle(6)),
        ("Petersen".to_string(), standard(StandardKind::Petersen, 0).unwrap()),
        ("K5".to_string(), complete(5)),
    ];
    for e in catalog().into_iter().filter(|e| e.order() <= 24) {
        graphs.push((e.key.clone(), frucht(&e.table, &e.gens, 1).unwrap().graph));
    }
    for (name, g) in &graphs {
        let aut = automorphism_group(g);
        let (_, w) = fixing_number_in(&aut);
        ensure(verify_orbit_product_in(&aut, &w).unwrap(), name.to_string())?;
    }
    Ok(format!("orbit products match |Aut| on {} graphs", graphs.len()))
}

fn main() -> ExitCode {
    let criteria: [(fn() -> Verdict, Duration); 13] = [
        (c1, Duration::from_secs(1)),
        (c2, Duration::from_secs(5)),
        (c3, Duration::from_secs(120)),
        (c4, Duration::from_secs(30)),
        (c5, Duration::from_secs(60)),
        (c6, Duration::from_secs(60)),
        (c7, Duration::from_secs(180)),
        (c8, Duration::from_secs(180)),
        (c9, Duration::from_secs(120)),
        (c10, Duration::from_secs(300)),
        (c11, Duration::from_secs(1)),
        (c12, Duration::from_secs(600)),
        (c13, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (i, (f, budget)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let verdict = f();
        let dt = t0.elapsed();
        let verdict = match verdict {
            Ok(msg) if dt > *budget => Err(format!("{msg}; took {dt:.2?}, budget {budget:?}")),
            v => v,
        };
        match verdict {
            Ok(msg) => println!("criterion {:>2}: PASS  {msg} ({dt:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {msg} ({dt:.2?})", i + 1);
            }
        }
    }
    println!("{} of 13 criteria passed", 13 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
