use anyhow::{Context, Result};
use graphfix::aut::automorphism_group;
use graphfix::catalog::catalog;
use graphfix::constructions::frucht;
use graphfix::fixing::{fixing_number_in, is_fixing_set_in, verify_orbit_product_in};
use graphfix::graph::Graph;
use graphfix::perm::{is_isomorphic_groups, GroupTable, PermGroup, DEFAULT_TABLE_CAP};
use rayon::prelude::*;
use serde::Serialize;

/// Worker pool for sharding independent per-graph work. Results keep the
/// input order, so output does not depend on the number of workers.
#[derive(Debug, Clone, Copy, Default)]
pub struct Pool {
    /// `None` uses one worker per core.
    pub jobs: Option<usize>,
}

impl Pool {
    pub fn new(jobs: Option<usize>) -> Pool {
        Pool { jobs }
    }

    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs.unwrap_or(0))
            .build()
            .expect("thread pool");
        pool.install(|| items.par_iter().map(f).collect())
    }
}

/// Automorphism group, fixing number and a minimum fixing set.
pub fn fix_of_graph(g: &Graph) -> (PermGroup, usize, Vec<usize>) {
    let aut = automorphism_group(g);
    let (fix, witness) = fixing_number_in(&aut);
    (aut, fix, witness)
}

pub(crate) fn aut_table(aut: &PermGroup) -> Result<GroupTable> {
    Ok(aut.to_table(DEFAULT_TABLE_CAP).context("automorphism group too large to tabulate")?.0)
}

pub(crate) fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Outcome of building and checking the Frucht graph of one catalog group.
#[derive(Debug, Clone, Serialize)]
pub struct FruchtCheck {
    pub key: String,
    pub order: usize,
    pub vertices: usize,
    pub aut_isomorphic: bool,
    pub fix: usize,
    /// Every group-element vertex alone is a fixing set.
    pub singleton_fixing: bool,
    /// The orbit-size product along the computed witness equals `|Aut|`.
    pub orbit_product: bool,
}

impl FruchtCheck {
    pub fn pass(&self) -> bool {
        self.aut_isomorphic && self.fix == 1 && self.singleton_fixing && self.orbit_product
    }
}

/// Frucht graphs (scale 1) of every catalog group of order at most
/// `max_order`.
pub fn frucht_suite(max_order: usize, pool: Pool) -> Result<Vec<FruchtCheck>> {
    let entries: Vec<_> = catalog().into_iter().filter(|e| e.order() <= max_order).collect();
    pool.map(&entries, |e| -> Result<FruchtCheck> {
        let f = frucht(&e.table, &e.gens, 1).with_context(|| format!("Frucht graph of {}", e.key))?;
        let (aut, fix, witness) = fix_of_graph(&f.graph);
        let aut_isomorphic = aut.order() == e.order() as u128 && is_isomorphic_groups(&aut_table(&aut)?, &e.table);
        let singleton_fixing = f.group_nodes().all(|v| is_fixing_set_in(&aut, &[v]).unwrap_or(false));
        Ok(FruchtCheck {
            key: e.key.clone(),
            order: e.order(),
            vertices: f.graph.n(),
            aut_isomorphic,
            fix,
            singleton_fixing,
            orbit_product: verify_orbit_product_in(&aut, &witness)?,
        })
    })
    .into_iter()
    .collect()
}
