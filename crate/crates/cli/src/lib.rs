//! Verification suite, experiments and report plumbing behind the
//! `graphfix` binary.

mod common;
mod experiments;
mod input;
mod report;
mod verify;

pub use common::{fix_of_graph, frucht_suite, FruchtCheck, Pool};
pub use experiments::{
    cmd_greedy_experiment, cmd_group_fixset, cmd_inflation_question, cmd_product_experiment, cmd_sn_table,
    GreedyOptions, ProductOptions, REFERENCE_SN_LOWER, REFERENCE_SN_UPPER_SIZES,
};
pub use input::{parse_graph, read_graphs};
pub use report::{Check, ExperimentReport};
pub use verify::{cmd_verify_paper, VerifyOptions};
