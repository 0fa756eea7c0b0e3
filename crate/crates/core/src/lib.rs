//! Fixing sets and fixing numbers of finite graphs, together with the group
//! machinery and graph constructions needed to study them.

pub mod aut;
pub mod catalog;
pub mod constructions;
pub mod fixing;
pub mod graph;
pub mod perm;
