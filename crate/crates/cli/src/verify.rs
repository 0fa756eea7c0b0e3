use std::collections::BTreeSet;
use std::time::Instant;

use anyhow::{Context, Result};
use graphfix::aut::are_isomorphic;
use graphfix::catalog::{identify_group, lookup};
use graphfix::constructions::{
    abelian_achiever, coset_action, frucht_family_zn, frucht_graph, gadget_product_union, orbital_graph_search,
    GroupAction,
};
use graphfix::fixing::{
    enumerate_graphs, fix_upper_bound, is_determining_set_in, is_fixing_set_in, verify_orbit_product_in,
};
use graphfix::graph::{
    complete, cycle, disjoint_union, inflate_k, path, sequence_graph, standard, Graph, StandardKind,
};
use graphfix::perm::{
    elementary_divisors, group_length, has_pk_cycle, is_isomorphic_groups, named_group, prime_factor_count,
    sn_length_formula, symmetric_elements, GroupTable, NamedGroup, DEFAULT_LATTICE_CAP,
};

use crate::common::{aut_table, ceil_div, fix_of_graph, frucht_suite, Pool};
use crate::experiments::cmd_sn_table;
use crate::report::ExperimentReport;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub jobs: Option<usize>,
    /// Largest vertex count for the exhaustive checks over all graphs.
    pub max_n: usize,
    /// Subset budget for the orbital search over actions of `A4`.
    pub orbital_budget: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            jobs: None,
            max_n: 6,
            orbital_budget: 1 << 14,
        }
    }
}

/// Runs `f` and records its verdict; an error counts as a failed check.
fn run(rep: &mut ExperimentReport, name: &str, claim: &str, f: impl FnOnce() -> Result<(bool, String)>) {
    match f() {
        Ok((pass, detail)) => rep.check(name, claim, pass, detail),
        Err(e) => rep.check(name, claim, false, format!("error: {e:#}")),
    }
}

fn describe(g: &Graph) -> Result<(u128, Option<String>, usize, GroupTable)> {
    let (aut, fix, _) = fix_of_graph(g);
    let t = aut_table(&aut)?;
    Ok((aut.order(), identify_group(&t), fix, t))
}

fn graph_check(
    rep: &mut ExperimentReport,
    name: &str,
    claim: &str,
    g: &Graph,
    order: u128,
    group: &str,
    fix: Option<usize>,
) {
    run(rep, name, claim, || {
        let (o, id, f, _) = describe(g)?;
        let pass = o == order && id.as_deref() == Some(group) && fix.is_none_or(|x| x == f);
        Ok((pass, format!("aut={o}, group={}, fix={f}", id.as_deref().unwrap_or("?"))))
    });
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Recomputes every numeric claim the library is built around and reports
/// one check per claim.
pub fn cmd_verify_paper(opts: VerifyOptions) -> Result<ExperimentReport> {
    let t0 = Instant::now();
    let pool = Pool::new(opts.jobs);
    let mut rep = ExperimentReport::new("verify")
        .param("max_n", opts.max_n)
        .param("orbital_budget", opts.orbital_budget);
    small_graphs(&mut rep);
    inflations(&mut rep, pool);
    exhaustive(&mut rep, opts.max_n, pool)?;
    frucht_and_abelian(&mut rep, pool)?;
    groups(&mut rep, opts.orbital_budget);
    let table = cmd_sn_table(2, 10, pool)?;
    rep.checks.extend(table.checks);
    let rep = ExperimentReport { runtime: t0.elapsed(), ..rep };
    Ok(rep)
}

fn small_graphs(rep: &mut ExperimentReport) {
    let c6 = cycle(6);
    graph_check(
        rep,
        "C6: aut=12, group=D6, fix=2",
        "the 6-cycle has automorphism group D6 and fixing number 2",
        &c6,
        12,
        "D6",
        Some(2),
    );
    let c3p2 = disjoint_union(&cycle(3), &path(2));
    graph_check(
        rep,
        "C3+P2: aut=12, group=D6, fix=3",
        "a triangle plus a disjoint edge has automorphism group D6 and fixing number 3",
        &c3p2,
        12,
        "D6",
        Some(3),
    );
    run(rep, "D6: {1,2,3} realized, upper bound 3", "fix(D6) = {1,2,3}", || {
        let d6 = lookup("D6").context("catalog")?;
        let f = frucht_graph(&d6.table, &d6.gens, 1)?;
        let mut seen = BTreeSet::new();
        for g in [&f, &c6, &c3p2] {
            let (_, id, fix, _) = describe(g)?;
            if id.as_deref() == Some("D6") {
                seen.insert(fix);
            }
        }
        let upper = fix_upper_bound(&d6.table)?;
        Ok((seen == BTreeSet::from([1, 2, 3]) && upper == 3, format!("realized {seen:?}, upper bound {upper}")))
    });
    let petersen = standard(StandardKind::Petersen, 0).expect("petersen");
    graph_check(
        rep,
        "petersen: fix=3",
        "the Petersen graph has fixing number 3",
        &petersen,
        120,
        "S5",
        Some(3),
    );
    graph_check(
        rep,
        "petersen-v: aut=12, group=D6",
        "deleting a vertex of the Petersen graph leaves the automorphisms of the 6-cycle",
        &petersen.remove_vertex(0).expect("vertex 0"),
        12,
        "D6",
        None,
    );
    for (name, g) in [("C6", c6.clone()), ("petersen", petersen.clone()), ("K5", complete(5))] {
        run(
            rep,
            &format!("orbit product: {name}"),
            "|Aut(G)| is the product of the orbit sizes along a minimum fixing sequence",
            || {
                let (aut, _, witness) = fix_of_graph(&g);
                Ok((verify_orbit_product_in(&aut, &witness)?, format!("witness {witness:?}, |Aut| = {}", aut.order())))
            },
        );
    }
    for n in 1..=6 {
        for (kind, g) in [("K", complete(n)), ("E", Graph::empty(n))] {
            run(
                rep,
                &format!("{kind}{n}: fix={}", n - 1),
                "complete and empty graphs on n vertices have fixing number n - 1",
                || {
                    let (_, fix, _) = fix_of_graph(&g);
                    Ok((fix == n - 1, format!("fix={fix}")))
                },
            );
        }
    }
}

fn inflations(rep: &mut ExperimentReport, pool: Pool) {
    let mut grid = Vec::new();
    for n in [4usize, 5] {
        for k in 0..=2 {
            grid.push((n, k));
        }
    }
    let results = pool.map(&grid, |&(n, k)| -> Result<(u128, Option<String>, usize)> {
        let (o, id, f, _) = describe(&inflate_k(&complete(n), k))?;
        Ok((o, id, f))
    });
    for (&(n, k), res) in grid.iter().zip(results) {
        let want = ceil_div(n - 1, k + 1);
        let group = format!("S{n}");
        run(
            rep,
            &format!("inf_k{n}_k{k}: fix={want}"),
            "Inf^k(K_n) has automorphism group S_n and fixing number ceil((n-1)/(k+1))",
            || {
                let (o, id, f) = res?;
                let pass = o == factorial(n) && f == want && (n > 5 || id.as_deref() == Some(group.as_str()));
                Ok((pass, format!("aut={o}, group={}, fix={f}", id.as_deref().unwrap_or("?"))))
            },
        );
    }
    let mut seq = Vec::new();
    for n in 2..=5 {
        for k in 0..=2 {
            seq.push((n, k));
        }
    }
    let verdicts = pool.map(&seq, |&(n, k)| -> Result<bool> {
        let s = sequence_graph(n, k)?;
        Ok(are_isomorphic(&s.graph, &inflate_k(&complete(n), k)))
    });
    for (&(n, k), v) in seq.iter().zip(verdicts) {
        run(
            rep,
            &format!("seq_g{n}_{k} ~ inf^{k}(K{n})"),
            "the sequence-labelled graph G_k over n letters is isomorphic to Inf^k(K_n)",
            || Ok((v?, String::new())),
        );
    }
    for n in 3..=6 {
        for k in 1..=2 {
            let m = n << k;
            run(
                rep,
                &format!("inf^{k}(C{n}) ~ C{m}"),
                "Inf^k(C_n) is the cycle of length 2^k n",
                || Ok((are_isomorphic(&inflate_k(&cycle(n), k), &cycle(m)), String::new())),
            );
        }
    }
}

fn exhaustive(rep: &mut ExperimentReport, max_n: usize, pool: Pool) -> Result<()> {
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        graphs.extend(enumerate_graphs(n)?);
    }
    // per graph: (fixing/determining mismatches, fix, n, complete or empty,
    // bound verdict)
    let rows = pool.map(&graphs, |g| -> Result<(usize, usize, bool, Option<bool>)> {
        let n = g.n();
        let (aut, fix, _) = fix_of_graph(g);
        let mut mismatches = 0;
        if n <= 5 {
            let elems = aut.elements(200)?;
            for mask in 0..1u32 << n {
                let s: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                if is_fixing_set_in(&aut, &s)? != is_determining_set_in(&elems, &s) {
                    mismatches += 1;
                }
            }
        }
        let trivial = g.edge_count() == 0 || g.edge_count() == n * (n - 1) / 2;
        let bound = if aut.order() <= DEFAULT_LATTICE_CAP as u128 {
            let t = aut_table(&aut)?;
            let l = group_length(&t)?;
            let omega = prime_factor_count(aut.order() as u64) as usize;
            Some(fix <= l.min(omega))
        } else {
            None
        };
        Ok((mismatches, fix, trivial, bound))
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    let upto5 = graphs.iter().filter(|g| g.n() <= 5.min(max_n)).count();
    let mismatches: usize = rows.iter().map(|r| r.0).sum();
    rep.check(
        format!("fixing = determining, n<={}", 5.min(max_n)),
        "a vertex set is a fixing set exactly when it is a determining set",
        mismatches == 0,
        format!("{upto5} graphs, {mismatches} mismatching subsets"),
    );
    let wrong: Vec<usize> = graphs
        .iter()
        .zip(&rows)
        .filter(|(g, r)| (r.1 + 1 == g.n()) != r.2)
        .map(|(g, _)| g.n())
        .collect();
    rep.check(
        format!("fix=n-1 iff complete or empty, n<={max_n}"),
        "only complete and empty graphs have fixing number n - 1",
        wrong.is_empty(),
        format!("{} graphs, {} exceptions", graphs.len(), wrong.len()),
    );
    let checked = rows.iter().filter(|r| r.3.is_some()).count();
    let violations = rows.iter().filter(|r| r.3 == Some(false)).count();
    rep.check(
        format!("fix <= min(l, Omega), n<={max_n}"),
        "fix(G) is at most the length and the prime-factor count of Aut(G)",
        violations == 0,
        format!("{checked} graphs with |Aut| <= {DEFAULT_LATTICE_CAP}, {violations} violations"),
    );
    Ok(())
}

fn frucht_and_abelian(rep: &mut ExperimentReport, pool: Pool) -> Result<()> {
    for c in frucht_suite(24, pool)? {
        rep.check(
            format!("frucht {}: aut~group, fix=1", c.key),
            "a Frucht graph has the prescribed automorphism group, and each group-element vertex alone is a fixing set",
            c.aut_isomorphic && c.fix == 1 && c.singleton_fixing,
            format!("{} vertices, fix={}, singletons fix: {}", c.vertices, c.fix, c.singleton_fixing),
        );
        rep.check(
            format!("orbit product: frucht {}", c.key),
            "|Aut(G)| is the product of the orbit sizes along a minimum fixing sequence",
            c.orbit_product,
            String::new(),
        );
    }
    run(
        rep,
        "frucht family Z5, t=1..3: fix=1, pairwise distinct",
        "there are infinitely many graphs with automorphism group Z5 and fixing number 1",
        || {
            let gs: Vec<Graph> = (1..=3).map(|t| frucht_family_zn(5, t)).collect::<Result<_, _>>()?;
            let mut ok = true;
            for g in &gs {
                let (o, id, f, _) = describe(g)?;
                ok &= o == 5 && id.as_deref() == Some("Z5") && f == 1;
            }
            ok &= !are_isomorphic(&gs[0], &gs[1]) && !are_isomorphic(&gs[1], &gs[2]);
            Ok((ok, format!("vertices {:?}", gs.iter().map(Graph::n).collect::<Vec<_>>())))
        },
    );
    let cases = [("Z2xZ2", 2usize), ("Z2xZ4", 2), ("Z2xZ2xZ3", 3), ("Z12", 2)];
    for (key, k) in cases {
        let e = lookup(key).context("catalog")?;
        for i in 1..=k {
            run(
                rep,
                &format!("abelian {key} i={i}: aut~group, fix={i}"),
                "an abelian group with k elementary divisors has fixing set {1..k}",
                || {
                    let a = abelian_achiever(&e.table, i)?;
                    let (aut, fix, _) = fix_of_graph(&a.graph);
                    let iso = is_isomorphic_groups(&aut_table(&aut)?, &e.table);
                    Ok((iso && fix == i, format!("{} vertices, fix={fix}", a.graph.n())))
                },
            );
        }
        run(
            rep,
            &format!("abelian {key}: {k} elementary divisors"),
            "the number of elementary divisors bounds the fixing numbers of an abelian group",
            || {
                let d = elementary_divisors(&e.table)?;
                Ok((d.len() == k && abelian_achiever(&e.table, k + 1).is_err(), format!("{d:?}")))
            },
        );
    }
    run(
        rep,
        "Z9: fix set {1}",
        "a cyclic group of prime-power order has fixing set {1}",
        || {
            let z9 = named_group(NamedGroup::Cyclic, 9)?;
            let one = abelian_achiever(&z9, 1)?;
            Ok((one.fix == 1 && abelian_achiever(&z9, 2).is_err(), String::new()))
        },
    );
    run(
        rep,
        "union Frucht(Z2) + Frucht(Z3): aut~Z6, fix=2",
        "a disjoint union with gadgets hung on the second graph has the product group and the summed fixing number",
        || {
            let z2 = lookup("Z2").context("catalog")?;
            let z3 = lookup("Z3").context("catalog")?;
            let g1 = frucht_graph(&z2.table, &z2.gens, 1)?;
            let g2 = frucht_graph(&z3.table, &z3.gens, 1)?;
            let u = gadget_product_union(&g1, &g2, None)?;
            let (o, id, f, _) = describe(&u.graph)?;
            Ok((o == 6 && id.as_deref() == Some("Z6") && f == 2, format!("{} vertices, fix={f}", u.graph.n())))
        },
    );
    run(
        rep,
        "union C6 + Frucht(Z2): aut~D6xZ2, fix=3",
        "a disjoint union with gadgets hung on the second graph has the product group and the summed fixing number",
        || {
            let z2 = lookup("Z2").context("catalog")?;
            let g2 = frucht_graph(&z2.table, &z2.gens, 1)?;
            let u = gadget_product_union(&cycle(6), &g2, None)?;
            let (aut, fix, _) = fix_of_graph(&u.graph);
            let want = graphfix::perm::direct_product(&named_group(NamedGroup::Dihedral, 6)?, &z2.table)?;
            let iso = is_isomorphic_groups(&aut_table(&aut)?, &want);
            Ok((iso && fix == 3, format!("{} vertices, fix={fix}", u.graph.n())))
        },
    );
    Ok(())
}

fn groups(rep: &mut ExperimentReport, orbital_budget: usize) {
    let (_, a4) = symmetric_elements(NamedGroup::Alternating, 4);
    run(
        rep,
        "A4: one subgroup ~ Z2xZ2",
        "A4 contains exactly one subgroup isomorphic to Z2 x Z2",
        || {
            let v4 = named_group(NamedGroup::Cyclic, 2)?;
            let v4 = graphfix::perm::direct_product(&v4, &v4)?;
            let subs = a4.subgroups(DEFAULT_LATTICE_CAP)?;
            let count = subs
                .iter()
                .filter(|s| s.len() == 4)
                .filter(|s| a4.subgroup_table(s).is_ok_and(|t| is_isomorphic_groups(&t, &v4)))
                .count();
            Ok((count == 1, format!("{count} copies among {} subgroups", subs.len())))
        },
    );
    run(
        rep,
        "A4: upper bound 3",
        "fix(A4) lies in {1,2,3} by the length bound",
        || {
            let u = fix_upper_bound(&a4)?;
            Ok((u == 3, format!("{u}")))
        },
    );
    run(
        rep,
        "A4 orbital graph: aut~A4, fix=2",
        "some graph has automorphism group A4 and fixing number 2",
        || {
            let subs = a4.subgroups(DEFAULT_LATTICE_CAP)?;
            let of_order = |m: usize| subs.iter().find(|s| s.len() == m).cloned().context("subgroup order");
            let z2 = of_order(2)?;
            let z3 = of_order(3)?;
            let actions: Vec<GroupAction> = [&z2, &z2, &z3]
                .iter()
                .map(|h| coset_action(&a4, h).map(|c| GroupAction::from(&c)))
                .collect::<Result<_, _>>()?;
            let found = orbital_graph_search(&actions, &a4, orbital_budget)?;
            let mut fixes = BTreeSet::new();
            for g in &found.graphs {
                fixes.insert(fix_of_graph(g).1);
            }
            Ok((
                fixes.contains(&2),
                format!(
                    "{} orbitals, {} graphs with group A4, fixing numbers {fixes:?}",
                    found.orbital_count,
                    found.graphs.len()
                ),
            ))
        },
    );
    for n in 2..=5 {
        run(
            rep,
            &format!("l(S{n}) = {}", sn_length_formula(n as u64)),
            "the length of S_n is ceil(3n/2) - b(n) - 1, b(n) the number of ones in binary",
            || {
                let l = group_length(&symmetric_elements(NamedGroup::Symmetric, n).1)?;
                Ok((l as u64 == sn_length_formula(n as u64), format!("l = {l}")))
            },
        );
    }
    run(
        rep,
        "p^k-cycle: elements of S6 of prime-power order",
        "a permutation of order p^k has a cycle of length p^k",
        || {
            let (elems, _) = symmetric_elements(NamedGroup::Symmetric, 6);
            let mut checked = 0;
            for e in &elems {
                let o = e.order();
                if let Some(&[(p, k)]) = prime_power(o).as_deref() {
                    let c = has_pk_cycle(p, k, e)?;
                    if c.len() as u64 != o {
                        return Ok((false, format!("{e}")));
                    }
                    checked += 1;
                }
            }
            Ok((true, format!("{checked} elements")))
        },
    );
}

/// `Some([(p, k)])` when `m = p^k` with `k >= 1`.
fn prime_power(m: u64) -> Option<Vec<(u64, u32)>> {
    if m < 2 {
        return None;
    }
    let p = (2..=m).find(|d| m.is_multiple_of(*d))?;
    let mut k = 0;
    let mut r = m;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1).then(|| vec![(p, k)])
}
