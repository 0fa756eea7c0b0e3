use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use graphfix::aut::automorphism_group;
use graphfix::catalog::{identify_group, lookup};
use graphfix::constructions::{abelian_achiever, cayley_digraph, frucht};
use graphfix::fixing::{greedy_all_sizes_in, greedy_fix_in, FixReport, GreedyMode, TieBreak, DEFAULT_NODE_CAP};
use graphfix::graph::{attach_gadget, gadget_a, gadget_y, graph6_encode, inflate_k, sequence_graph, Graph};
use graphfix::perm::DEFAULT_TABLE_CAP;
use graphfix_cli::{
    cmd_greedy_experiment, cmd_group_fixset, cmd_inflation_question, cmd_product_experiment, cmd_sn_table,
    cmd_verify_paper, read_graphs, ExperimentReport, GreedyOptions, Pool, ProductOptions, VerifyOptions,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "graphfix", version, about = "Fixing numbers of graphs and groups")]
struct Cli {
    /// Emit the report as JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute every built-in numeric claim; exits 1 if any fails.
    VerifyPaper {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 1 << 14)]
        orbital_budget: usize,
    },
    /// Fixing number, a minimum fixing set and greedy sizes.
    Fix(GraphArgs),
    /// Automorphism group: order, generators and orbits.
    Aut(GraphArgs),
    /// Greedy fixing set.
    Greedy {
        graph: String,
        #[arg(long, value_enum, default_value_t = Tie::Lowest)]
        tie: Tie,
        /// Also list the sizes reached over every tie-break choice.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Mode::Collapse)]
        mode: Mode,
    },
    /// Build a graph and print it as graph6.
    #[command(subcommand)]
    Construct(Construct),
    /// Experiments.
    #[command(subcommand)]
    Experiment(Experiment),
}

#[derive(Args)]
struct GraphArgs {
    /// graph6 strings, or `-` to read one per line from stdin.
    #[arg(required = true)]
    graphs: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tie {
    Lowest,
    Highest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Collapse,
    Strict,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    Y,
    A,
}

#[derive(Subcommand)]
enum Construct {
    /// Frucht graph of a catalog group.
    Frucht {
        group: String,
        #[arg(long, default_value_t = 1)]
        scale: usize,
        /// Print DOT instead of graph6.
        #[arg(long)]
        dot: bool,
    },
    /// Labelled Cayley digraph of a catalog group, as arcs.
    Cayley { group: String },
    /// k-fold inflation of a graph.
    Inflate {
        graph: String,
        #[arg(short, long, default_value_t = 1)]
        k: usize,
    },
    /// Sequence-labelled graph G_k over an alphabet of size n.
    Gk { n: usize, k: usize },
    /// A rigid gadget, optionally attached to every vertex of a graph.
    Gadget {
        #[arg(value_enum)]
        kind: GadgetKind,
        k: usize,
        #[arg(long)]
        attach_to: Option<String>,
    },
    /// Graph with a given abelian automorphism group and fixing number.
    Abelian { group: String, fix: usize },
}

#[derive(Subcommand)]
enum Experiment {
    /// Greedy branches against fix over all graphs up to a size.
    Greedy {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        strict_max_n: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        node_cap: usize,
    },
    /// Upper and lower bounds on fix(S_n).
    SnTable {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// What is known about fix of one catalog group.
    GroupFixset {
        group: String,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Sums of fixing numbers against the direct product.
    Product {
        first: String,
        second: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long)]
        gadget_k: Option<usize>,
        #[arg(long, default_value_t = 120)]
        max_order: usize,
    },
    /// fix of repeated inflations against ceil(fix/(k+1)).
    Inflation {
        graph: String,
        #[arg(long, default_value_t = 2)]
        k_max: usize,
        #[arg(long, default_value_t = 5000)]
        max_vertices: usize,
    },
}

fn g6(g: &Graph) -> String {
    String::from_utf8(graph6_encode(g)).expect("graph6 is ASCII")
}

fn one_graph(s: &str) -> Result<Graph> {
    let mut gs = read_graphs(&[s.to_string()], io::stdin().lock())?;
    match gs.len() {
        1 => Ok(gs.remove(0)),
        n => bail!("expected one graph, got {n}"),
    }
}

fn construct_report(g: &Graph, name: &str) -> ExperimentReport {
    let mut r = ExperimentReport::new(name);
    r.record(json!({ "graph6": g6(g), "vertices": g.n(), "edges": g.edge_count() }));
    r
}

fn construct(c: Construct) -> Result<(ExperimentReport, Option<String>)> {
    Ok(match c {
        Construct::Frucht { group, scale, dot } => {
            let e = lookup(&group).with_context(|| format!("unknown group key {group:?}"))?;
            let f = frucht(&e.table, &e.gens, scale)?;
            let text = if dot { f.graph.to_dot() } else { g6(&f.graph) };
            (construct_report(&f.graph, "frucht").param("group", &e.key).param("scale", scale), Some(text))
        }
        Construct::Cayley { group } => {
            let e = lookup(&group).with_context(|| format!("unknown group key {group:?}"))?;
            let c = cayley_digraph(&e.table, &e.gens)?;
            let mut r = ExperimentReport::new("cayley").param("group", &e.key);
            for &(h, sh, j) in &c.arcs {
                r.record(json!({ "tail": h, "head": sh, "label": j }));
            }
            (r, None)
        }
        Construct::Inflate { graph, k } => {
            let g = inflate_k(&one_graph(&graph)?, k);
            (construct_report(&g, "inflate").param("k", k), Some(g6(&g)))
        }
        Construct::Gk { n, k } => {
            let s = sequence_graph(n, k)?;
            (construct_report(&s.graph, "gk").param("n", n).param("k", k), Some(g6(&s.graph)))
        }
        Construct::Gadget { kind, k, attach_to } => {
            let gadget = match kind {
                GadgetKind::Y => gadget_y(k)?,
                GadgetKind::A => gadget_a(k)?,
            };
            let g = match attach_to {
                Some(s) => {
                    let base = one_graph(&s)?;
                    let all: Vec<usize> = (0..base.n()).collect();
                    attach_gadget(&base, &all, &gadget)?
                }
                None => gadget.graph.clone(),
            };
            (construct_report(&g, "gadget").param("k", k).param("attach", gadget.attach), Some(g6(&g)))
        }
        Construct::Abelian { group, fix } => {
            let e = lookup(&group).with_context(|| format!("unknown group key {group:?}"))?;
            let a = abelian_achiever(&e.table, fix)?;
            let mut r = construct_report(&a.graph, "abelian").param("group", &e.key).param("fix", fix);
            r.set("factors", &a.factors);
            r.set("component_sizes", &a.component_sizes);
            (r, None)
        }
    })
}

fn fix_cmd(graphs: Vec<Graph>, pool: Pool) -> Result<ExperimentReport> {
    let reports = pool.map(&graphs, FixReport::new);
    let mut r = ExperimentReport::new("fix");
    for rep in reports {
        r.record(rep?);
    }
    Ok(r)
}

fn aut_cmd(graphs: Vec<Graph>) -> Result<ExperimentReport> {
    let mut r = ExperimentReport::new("aut");
    for g in graphs {
        let aut = automorphism_group(&g);
        let group = if aut.order() <= 120 {
            identify_group(&aut.to_table(DEFAULT_TABLE_CAP)?.0)
        } else {
            None
        };
        r.record(json!({
            "graph6": g6(&g),
            "order": aut.order().to_string(),
            "group": group,
            "generators": aut.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "orbits": aut.orbits(),
        }));
    }
    Ok(r)
}

fn greedy_cmd(graph: &str, tie: Tie, all: bool, mode: Mode) -> Result<ExperimentReport> {
    let g = one_graph(graph)?;
    let aut = automorphism_group(&g);
    let tie = match tie {
        Tie::Lowest => TieBreak::LowestId,
        Tie::Highest => TieBreak::HighestId,
    };
    let set = greedy_fix_in(&aut, tie);
    let mut r = ExperimentReport::new("greedy").param("graph6", g6(&g));
    r.set("fixing_set", &set);
    r.set("size", set.len());
    if all {
        let mode = match mode {
            Mode::Collapse => GreedyMode::Collapse,
            Mode::Strict => GreedyMode::Strict,
        };
        r.set("all_sizes", greedy_all_sizes_in(&aut, mode, DEFAULT_NODE_CAP)?);
    }
    Ok(r)
}

fn run(cli: Cli) -> Result<(ExperimentReport, Option<String>)> {
    let pool = Pool::new(cli.jobs);
    let t0 = Instant::now();
    let (mut rep, text) = match cli.command {
        Command::VerifyPaper { max_n, orbital_budget } => (
            cmd_verify_paper(VerifyOptions {
                jobs: cli.jobs,
                max_n,
                orbital_budget,
            })?,
            None,
        ),
        Command::Fix(a) => (fix_cmd(read_graphs(&a.graphs, io::stdin().lock())?, pool)?, None),
        Command::Aut(a) => (aut_cmd(read_graphs(&a.graphs, io::stdin().lock())?)?, None),
        Command::Greedy { graph, tie, all, mode } => (greedy_cmd(&graph, tie, all, mode)?, None),
        Command::Construct(c) => construct(c)?,
        Command::Experiment(e) => (
            match e {
                Experiment::Greedy {
                    max_n,
                    strict_max_n,
                    node_cap,
                } => cmd_greedy_experiment(
                    GreedyOptions {
                        max_n,
                        strict_max_n,
                        node_cap,
                    },
                    pool,
                )?,
                Experiment::SnTable { n_min, n_max } => cmd_sn_table(n_min, n_max, pool)?,
                Experiment::GroupFixset { group, max_n } => cmd_group_fixset(&group, max_n, pool)?,
                Experiment::Product {
                    first,
                    second,
                    max_n,
                    gadget_k,
                    max_order,
                } => {
                    let opts = ProductOptions {
                        gadget_k,
                        max_order,
                        ..ProductOptions::new(&first, &second, max_n)
                    };
                    cmd_product_experiment(&opts, pool)?
                }
                Experiment::Inflation {
                    graph,
                    k_max,
                    max_vertices,
                } => cmd_inflation_question(&one_graph(&graph)?, k_max, max_vertices, pool)?,
            },
            None,
        ),
    };
    if rep.runtime.is_zero() {
        rep.runtime = t0.elapsed();
    }
    Ok((rep, text))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok((rep, text)) => {
            let out = if json {
                rep.to_json()
            } else if let Some(t) = text {
                t
            } else {
                rep.to_text()
            };
            let mut stdout = io::stdout().lock();
            let _ = writeln!(stdout, "{}", out.trim_end());
            if rep.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
