use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use graphfix::catalog::{lookup, CatalogEntry};
use graphfix::constructions::{abelian_achiever, frucht, gadget_product_union};
use graphfix::fixing::{
    enumerate_graphs, fix_upper_bound, greedy_all_sizes_in, GreedyMode, DEFAULT_NODE_CAP, MAX_ENUMERATION_N,
};
use graphfix::graph::{complete, graph6_encode, inflate, inflate_k, standard, Graph, StandardKind};
use graphfix::perm::{
    direct_product, elementary_divisors, is_isomorphic_groups, product_index, sn_fix_upper_bound, symmetric_elements,
    GroupTable, NamedGroup, PermGroup,
};
use serde::Serialize;
use serde_json::json;

use crate::common::{aut_table, ceil_div, fix_of_graph, Pool};
use crate::report::ExperimentReport;

/// Lower-bound rows of the published table of known members of
/// `fix(S_n)`, for `n = 2..=10`.
pub const REFERENCE_SN_LOWER: [(usize, &[usize]); 9] = [
    (2, &[1]),
    (3, &[1, 2]),
    (4, &[1, 2, 3]),
    (5, &[1, 2, 3, 4]),
    (6, &[1, 2, 3, 5]),
    (7, &[1, 2, 3, 6]),
    (8, &[1, 2, 3, 4, 7]),
    (9, &[1, 2, 3, 4, 8]),
    (10, &[1, 2, 3, 5, 9]),
];

/// Sizes of the published upper-bound rows `{1..u}` for `n = 2..=10`.
pub const REFERENCE_SN_UPPER_SIZES: [u64; 9] = [1, 2, 3, 4, 6, 7, 9, 11, 12];

/// Groups above this order are not given a Frucht graph here; the vertex
/// count grows quickly with the number of arcs.
const FRUCHT_MAX_ORDER: usize = 60;

fn cert(g: &Graph) -> String {
    String::from_utf8(graph6_encode(g)).expect("graph6 is ASCII")
}

fn finish(mut r: ExperimentReport, t0: Instant) -> ExperimentReport {
    r.runtime = t0.elapsed();
    r
}

/// Whether `aut` is isomorphic to `t`, checked on the order first.
fn aut_matches(aut: &PermGroup, t: &GroupTable) -> Result<bool> {
    if aut.order() != t.order() as u128 {
        return Ok(false);
    }
    Ok(is_isomorphic_groups(&aut_table(aut)?, t))
}

struct Enumerated {
    graph: Graph,
    aut: PermGroup,
    fix: usize,
}

fn enumerate_with_fix(max_n: usize, pool: Pool) -> Result<Vec<Enumerated>> {
    if max_n > MAX_ENUMERATION_N {
        bail!("max_n = {max_n} exceeds the enumeration cap {MAX_ENUMERATION_N}");
    }
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        graphs.extend(enumerate_graphs(n)?);
    }
    Ok(pool
        .map(&graphs, |g| {
            let (aut, fix, _) = fix_of_graph(g);
            (aut, fix)
        })
        .into_iter()
        .zip(graphs)
        .map(|((aut, fix), graph)| Enumerated { graph, aut, fix })
        .collect())
}

#[derive(Debug, Clone, Copy)]
pub struct GreedyOptions {
    pub max_n: usize,
    /// Graphs up to this size also get the strict-mode branch audit.
    pub strict_max_n: usize,
    pub node_cap: usize,
}

impl GreedyOptions {
    pub fn new(max_n: usize) -> GreedyOptions {
        GreedyOptions {
            max_n,
            strict_max_n: 6,
            node_cap: DEFAULT_NODE_CAP,
        }
    }
}

#[derive(Serialize)]
struct GreedyRecord {
    graph6: String,
    n: usize,
    edges: usize,
    aut_order: u128,
    fix: usize,
    greedy_sizes: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    strict_sizes: Option<Vec<usize>>,
    singleton: bool,
    min_equals_fix: bool,
}

/// Runs every branch of the greedy fixing procedure on every graph with at
/// most `max_n` vertices and compares the sizes reached against `fix`.
pub fn cmd_greedy_experiment(opts: GreedyOptions, pool: Pool) -> Result<ExperimentReport> {
    let t0 = Instant::now();
    if opts.max_n > MAX_ENUMERATION_N {
        bail!("max_n = {} exceeds the enumeration cap {MAX_ENUMERATION_N}", opts.max_n);
    }
    let mut graphs = Vec::new();
    for n in 1..=opts.max_n {
        graphs.extend(enumerate_graphs(n)?);
    }
    let results = pool.map(&graphs, |g| -> Result<GreedyRecord> {
        let (aut, fix, _) = fix_of_graph(g);
        let sizes: Vec<usize> = greedy_all_sizes_in(&aut, GreedyMode::Collapse, opts.node_cap)?.into_iter().collect();
        let strict_sizes = if g.n() <= opts.strict_max_n {
            Some(greedy_all_sizes_in(&aut, GreedyMode::Strict, opts.node_cap)?.into_iter().collect())
        } else {
            None
        };
        Ok(GreedyRecord {
            graph6: cert(g),
            n: g.n(),
            edges: g.edge_count(),
            aut_order: aut.order(),
            fix,
            singleton: sizes.len() == 1,
            min_equals_fix: sizes.first() == Some(&fix),
            greedy_sizes: sizes,
            strict_sizes,
        })
    });
    let mut records = results.into_iter().collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| a.graph6.cmp(&b.graph6));

    let mut profile: BTreeMap<String, usize> = BTreeMap::new();
    let mut per_n: BTreeMap<usize, usize> = BTreeMap::new();
    let mut differing = Vec::new();
    let mut strict_differing = Vec::new();
    for r in &records {
        let (lo, hi) = (r.greedy_sizes[0], *r.greedy_sizes.last().expect("nonempty"));
        *profile.entry(format!("fix={} min={lo} max={hi}", r.fix)).or_default() += 1;
        *per_n.entry(r.n).or_default() += 1;
        if !(r.singleton && r.min_equals_fix) {
            differing.push(r.graph6.clone());
        }
        if let Some(s) = &r.strict_sizes {
            if s.as_slice() != [r.fix] {
                strict_differing.push(r.graph6.clone());
            }
        }
    }
    let mut rep = ExperimentReport::new("greedy")
        .param("max_n", opts.max_n)
        .param("strict_max_n", opts.strict_max_n)
        .param("node_cap", opts.node_cap);
    rep.set("graphs", records.len());
    rep.set("graphs_per_n", &per_n);
    rep.set("by_fix_min_max", &profile);
    rep.set("all_singleton", records.iter().all(|r| r.singleton));
    rep.set("all_min_equals_fix", records.iter().all(|r| r.min_equals_fix));
    rep.set("greedy_differs_from_fix", &differing);
    rep.set("strict_differs_from_fix", &strict_differing);
    for r in records {
        rep.record(r);
    }
    Ok(finish(rep, t0))
}

#[derive(Serialize)]
struct SnMember {
    value: usize,
    source: String,
    /// `None` when the member is taken from its formula without building
    /// the graph.
    verified: Option<bool>,
}

fn symmetric_table(n: usize) -> GroupTable {
    symmetric_elements(NamedGroup::Symmetric, n).1
}

/// Builds `g` and confirms `Aut(g) ≅ t` and `fix(g) = want`.
fn verify_realization(g: &Graph, t: &GroupTable, want: usize) -> Result<bool> {
    let (aut, fix, _) = fix_of_graph(g);
    Ok(fix == want && aut_matches(&aut, t)?)
}

fn sn_lower_members(n: usize) -> Result<Vec<SnMember>> {
    let mut out = Vec::new();
    let small = n <= 5;
    let table = if small { Some(symmetric_table(n)) } else { None };
    // fix 1 from a Frucht graph
    if n <= 4 {
        let key = match n {
            2 => "Z2",
            3 => "S3",
            _ => "S4",
        };
        let e = lookup(key).expect("catalog key");
        let f = frucht(&e.table, &e.gens, 1)?;
        out.push(SnMember {
            value: 1,
            source: format!("frucht({key})"),
            verified: Some(verify_realization(&f.graph, table.as_ref().expect("n <= 5"), 1)?),
        });
    } else {
        out.push(SnMember {
            value: 1,
            source: "frucht".to_string(),
            verified: None,
        });
    }
    for k in 0..=n.saturating_sub(2) {
        let value = ceil_div(n - 1, k + 1);
        // Inf(K3) is C6, whose group is larger than S3
        if n == 3 && k > 0 {
            continue;
        }
        if let Some(t) = &table {
            let g = inflate_k(&complete(n), k);
            out.push(SnMember {
                value,
                source: format!("inflation(K{n}, k={k})"),
                verified: Some(verify_realization(&g, t, value)?),
            });
        } else {
            out.push(SnMember {
                value,
                source: format!("inflation(K{n}, k={k})"),
                verified: None,
            });
        }
    }
    if n == 5 {
        let p = standard(StandardKind::Petersen, 0)?;
        out.push(SnMember {
            value: 3,
            source: "petersen".to_string(),
            verified: Some(verify_realization(&p, table.as_ref().expect("n = 5"), 3)?),
        });
    }
    Ok(out)
}

/// Known members and the upper bound of `fix(S_n)` for each `n` in range,
/// compared against the published table.
pub fn cmd_sn_table(n_min: usize, n_max: usize, pool: Pool) -> Result<ExperimentReport> {
    let t0 = Instant::now();
    if !(2 <= n_min && n_min <= n_max && n_max <= 10) {
        bail!("need 2 <= n_min <= n_max <= 10, got {n_min}..{n_max}");
    }
    let ns: Vec<usize> = (n_min..=n_max).collect();
    let rows = pool.map(&ns, |&n| sn_lower_members(n));
    let mut rep = ExperimentReport::new("sn-table").param("n_min", n_min).param("n_max", n_max);
    for (&n, members) in ns.iter().zip(rows) {
        let members = members?;
        let upper = sn_fix_upper_bound(n as u64)?;
        let lower: BTreeSet<usize> = members
            .iter()
            .filter(|m| m.verified != Some(false))
            .map(|m| m.value)
            .collect();
        let reference: BTreeSet<usize> = REFERENCE_SN_LOWER[n - 2].1.iter().copied().collect();
        let ref_upper = REFERENCE_SN_UPPER_SIZES[n - 2];
        let failed = members.iter().any(|m| m.verified == Some(false));
        let lower_ok = !failed && if n <= 5 { lower == reference } else { lower.is_superset(&reference) };
        rep.check(
            format!("S{n} upper: {{1..{ref_upper}}}"),
            "the upper bound on fix(S_n) is the least of the length formula, the prime count of n! and the prime-power refinement",
            upper == ref_upper,
            format!("computed {{1..{upper}}}"),
        );
        rep.check(
            format!("S{n} lower: {reference:?}"),
            "known members of fix(S_n) come from a Frucht graph, inflations of K_n and, for n = 5, the Petersen graph",
            lower_ok,
            format!("computed {lower:?}"),
        );
        rep.record(json!({
            "n": n,
            "lower": lower,
            "members": members,
            "upper": upper,
            "reference_lower": reference,
            "reference_upper": ref_upper,
        }));
    }
    Ok(finish(rep, t0))
}

#[derive(Serialize, Clone)]
struct Realization {
    fix: usize,
    source: String,
    vertices: usize,
    graph6: String,
}

fn klein_four_count(t: &GroupTable) -> Result<usize> {
    Ok(t.subgroups(graphfix::perm::DEFAULT_LATTICE_CAP)?
        .iter()
        .filter(|s| s.len() == 4 && s.iter().all(|&x| t.element_order(x) <= 2))
        .count())
}

/// Graphs with automorphism group `t`, one per fixing number found:
/// the smallest enumerated graph, a Frucht graph and abelian achievers.
fn realizations(
    t: &GroupTable,
    gens: Option<&[usize]>,
    enumerated: &[Enumerated],
) -> Result<BTreeMap<usize, (Realization, Graph)>> {
    let mut out: BTreeMap<usize, (Realization, Graph)> = BTreeMap::new();
    let mut offer = |fix: usize, source: String, g: Graph| {
        let better = out.get(&fix).is_none_or(|(r, _)| g.n() < r.vertices);
        if better {
            let r = Realization {
                fix,
                source,
                vertices: g.n(),
                graph6: cert(&g),
            };
            out.insert(fix, (r, g));
        }
    };
    for e in enumerated {
        if aut_matches(&e.aut, t)? {
            offer(e.fix, "enumeration".to_string(), e.graph.clone());
        }
    }
    if t.order() > 1 && t.order() <= FRUCHT_MAX_ORDER {
        let owned;
        let gens = match gens {
            Some(g) => g,
            None => {
                owned = t.greedy_generators();
                &owned
            }
        };
        let f = frucht(t, gens, 1)?;
        if verify_realization(&f.graph, t, 1)? {
            offer(1, "frucht".to_string(), f.graph);
        }
    }
    if t.is_abelian() && t.order() > 1 {
        let k = elementary_divisors(t)?.len();
        for i in 1..=k {
            let a = abelian_achiever(t, i)?;
            offer(a.fix, format!("abelian achiever i={i}"), a.graph);
        }
    }
    Ok(out)
}

fn is_interval_from_one(s: &BTreeSet<usize>) -> bool {
    s.iter().copied().eq(1..=s.len())
}

/// Collects what is known about `fix(Γ)` for a catalog group.
pub fn cmd_group_fixset(key: &str, max_n: usize, pool: Pool) -> Result<ExperimentReport> {
    let t0 = Instant::now();
    let entry = lookup(key).with_context(|| format!("unknown group key {key:?}"))?;
    let enumerated = enumerate_with_fix(max_n, pool)?;
    let found = realizations(&entry.table, Some(&entry.gens), &enumerated)?;
    let observed: BTreeSet<usize> = enumerated
        .iter()
        .filter(|e| aut_matches(&e.aut, &entry.table).unwrap_or(false))
        .map(|e| e.fix)
        .collect();
    let constructive: BTreeSet<usize> = found
        .values()
        .filter(|(r, _)| r.source != "enumeration")
        .map(|(r, _)| r.fix)
        .collect();
    let known: BTreeSet<usize> = found.keys().copied().collect();
    let upper = fix_upper_bound(&entry.table)?;

    let mut rep = ExperimentReport::new("group-fixset").param("group", &entry.key).param("max_n", max_n);
    rep.set("order", entry.order());
    rep.set("observed", &observed);
    rep.set("constructive", &constructive);
    rep.set("known", &known);
    rep.set("upper_bound", upper);
    rep.set("within_upper_bound", known.iter().all(|&f| f <= upper));
    rep.set("interval_form", is_interval_from_one(&known));
    rep.set("gap_evidence", !known.is_empty() && !is_interval_from_one(&known));
    rep.set("consistent_with_1_to_upper", known.iter().all(|&f| (1..=upper).contains(&f)));
    rep.set("klein_four_subgroups", klein_four_count(&entry.table)?);
    for (r, _) in found.values() {
        rep.record(r);
    }
    Ok(finish(rep, t0))
}

#[derive(Debug, Clone)]
pub struct ProductOptions {
    pub first: String,
    pub second: String,
    pub max_n: usize,
    /// Gadget size for the union; `None` uses the default.
    pub gadget_k: Option<usize>,
    pub max_order: usize,
}

impl ProductOptions {
    pub fn new(first: &str, second: &str, max_n: usize) -> ProductOptions {
        ProductOptions {
            first: first.to_string(),
            second: second.to_string(),
            max_n,
            gadget_k: None,
            max_order: 120,
        }
    }
}

fn product_gens(a: &CatalogEntry, b: &CatalogEntry) -> Vec<usize> {
    let m = b.order();
    let mut gens: Vec<usize> = a.gens.iter().map(|&g| product_index(g, 0, m)).collect();
    gens.extend(b.gens.iter().map(|&h| product_index(0, h, m)));
    gens
}

/// Compares `fix(Γ₁) + fix(Γ₂)` with the known members of `fix(Γ₁ × Γ₂)`.
pub fn cmd_product_experiment(opts: &ProductOptions, pool: Pool) -> Result<ExperimentReport> {
    let t0 = Instant::now();
    let a = lookup(&opts.first).with_context(|| format!("unknown group key {:?}", opts.first))?;
    let b = lookup(&opts.second).with_context(|| format!("unknown group key {:?}", opts.second))?;
    if a.order() * b.order() > opts.max_order {
        bail!(
            "|{} x {}| = {} exceeds the order cap {}",
            a.name,
            b.name,
            a.order() * b.order(),
            opts.max_order
        );
    }
    let prod = direct_product(&a.table, &b.table)?;
    let enumerated = enumerate_with_fix(opts.max_n, pool)?;
    let ra = realizations(&a.table, Some(&a.gens), &enumerated)?;
    let rb = realizations(&b.table, Some(&b.gens), &enumerated)?;
    let pgens = product_gens(&a, &b);
    let rp = realizations(&prod, Some(&pgens), &enumerated)?;

    let pairs: Vec<(&Graph, &Graph, usize, usize)> = ra
        .values()
        .flat_map(|(x, gx)| rb.values().map(move |(y, gy)| (gx, gy, x.fix, y.fix)))
        .collect();
    let unions = pool.map(&pairs, |&(g1, g2, fa, fb)| -> Result<serde_json::Value> {
        // hang the gadgets on the smaller graph
        let (small, big) = if g2.n() <= g1.n() { (g2, g1) } else { (g1, g2) };
        let u = gadget_product_union(big, small, opts.gadget_k)?;
        let (aut, fix, _) = fix_of_graph(&u.graph);
        let iso = aut_matches(&aut, &prod)?;
        Ok(json!({
            "fix_first": fa,
            "fix_second": fb,
            "sum": fa + fb,
            "vertices": u.graph.n(),
            "gadget_size": u.gadget_size,
            "aut_isomorphic": iso,
            "fix": fix,
            "realized": iso && fix == fa + fb,
        }))
    });
    let unions = unions.into_iter().collect::<Result<Vec<_>>>()?;

    let fa: BTreeSet<usize> = ra.keys().copied().collect();
    let fb: BTreeSet<usize> = rb.keys().copied().collect();
    let sum_set: BTreeSet<usize> = fa.iter().flat_map(|x| fb.iter().map(move |y| x + y)).collect();
    let realized_sums: BTreeSet<usize> = unions
        .iter()
        .filter(|u| u["realized"] == true)
        .map(|u| u["sum"].as_u64().expect("integer") as usize)
        .collect();
    let mut product_known: BTreeSet<usize> = rp.keys().copied().collect();
    product_known.extend(&realized_sums);
    let without_one: BTreeSet<usize> = product_known.iter().copied().filter(|&f| f != 1).collect();

    let mut rep = ExperimentReport::new("product")
        .param("first", &a.key)
        .param("second", &b.key)
        .param("max_n", opts.max_n)
        .param("gadget_k", opts.gadget_k);
    rep.set("fix_first_known", &fa);
    rep.set("fix_second_known", &fb);
    rep.set("sum_set", &sum_set);
    rep.set("sum_set_realized", &realized_sums);
    rep.set("product_known", &product_known);
    rep.set("product_known_without_1", &without_one);
    rep.set("sum_set_equals_product_without_1", sum_set == without_one);
    rep.set("product_members_outside_sum_set", without_one.difference(&sum_set).collect::<Vec<_>>());
    rep.set(
        "product_realizations",
        rp.values().map(|(r, _)| r.clone()).collect::<Vec<_>>(),
    );
    for u in unions {
        rep.record(u);
    }
    Ok(finish(rep, t0))
}


/// Compares `fix(Inf^k(G))` with `⌈fix(G)/(k+1)⌉` for `k = 0..=k_max`.
pub fn cmd_inflation_question(g: &Graph, k_max: usize, max_vertices: usize, pool: Pool) -> Result<ExperimentReport> {
    let t0 = Instant::now();
    let mut chain = vec![g.clone()];
    for k in 1..=k_max {
        let prev = &chain[k - 1];
        let next_n = 2 * prev.edge_count();
        if next_n > max_vertices {
            bail!("Inf^{k} would have {next_n} vertices, above the cap {max_vertices}");
        }
        chain.push(inflate(prev));
    }
    let fixes = pool.map(&chain, |h| fix_of_graph(h).1);
    let base = fixes[0];
    let mut rep = ExperimentReport::new("inflation")
        .param("graph6", cert(g))
        .param("k_max", k_max)
        .param("max_vertices", max_vertices);
    let mut all_equal = true;
    let mut unequal = Vec::new();
    for (k, (h, &fix)) in chain.iter().zip(&fixes).enumerate() {
        let formula = ceil_div(base, k + 1);
        all_equal &= fix == formula;
        if fix != formula {
            unequal.push(k);
        }
        rep.record(json!({
            "k": k,
            "vertices": h.n(),
            "edges": h.edge_count(),
            "fix": fix,
            "formula": formula,
            "equal": fix == formula,
        }));
    }
    rep.set("fix", base);
    rep.set("equality_at_every_k", all_equal);
    rep.set("unequal_k", unequal);
    Ok(finish(rep, t0))
}
