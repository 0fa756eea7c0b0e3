use std::collections::{BTreeSet, HashSet};

use super::{fixing_number_in, FixError};
use crate::aut::{automorphism_group, canonical_form};
use crate::graph::{graph6_decode, Graph};
use crate::perm::{is_isomorphic_groups, GroupTable, DEFAULT_TABLE_CAP};

pub const MAX_ENUMERATION_N: usize = 8;

/// One graph per isomorphism class on `n` vertices, ordered by canonical
/// certificate. Each is returned in its canonical labeling.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, FixError> {
    if n > MAX_ENUMERATION_N {
        return Err(FixError::TooManyVertices { n, cap: MAX_ENUMERATION_N });
    }
    let mut level: Vec<Vec<u8>> = vec![canonical_form(&Graph::empty(0))];
    for m in 1..=n {
        // every graph on m vertices arises from one on m-1 by adding a
        // vertex with some neighbourhood
        let mut next: HashSet<Vec<u8>> = HashSet::new();
        for code in &level {
            let base = graph6_decode(code).expect("certificates decode");
            let edges = base.edges();
            for mask in 0..1u64 << (m - 1) {
                let mut all = edges.clone();
                all.extend((0..m - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, m - 1)));
                let g = Graph::new(m, all).expect("edges in range");
                next.insert(canonical_form(&g));
            }
        }
        let mut sorted: Vec<Vec<u8>> = next.into_iter().collect();
        sorted.sort();
        level = sorted;
    }
    Ok(level.iter().map(|c| graph6_decode(c).expect("certificates decode")).collect())
}

/// Fixing numbers of the enumerated graphs on at most `max_n` vertices whose
/// automorphism group is isomorphic to `t`. This only ever sees small
/// graphs, so it is a subset of the true set of fixing numbers.
pub fn group_fixing_numbers_observed(t: &GroupTable, max_n: usize) -> Result<BTreeSet<usize>, FixError> {
    let mut out = BTreeSet::new();
    for n in 1..=max_n {
        for g in enumerate_graphs(n)? {
            let aut = automorphism_group(&g);
            if aut.order() != t.order() as u128 {
                continue;
            }
            let (table, _) = aut.to_table(DEFAULT_TABLE_CAP)?;
            if is_isomorphic_groups(&table, t) {
                out.insert(fixing_number_in(&aut).0);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{named_group, NamedGroup};

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        assert!(enumerate_graphs(9).is_err());
    }

    #[test]
    fn eight_rigid_graphs_on_six_vertices() {
        let rigid = enumerate_graphs(6)
            .unwrap()
            .iter()
            .filter(|g| automorphism_group(g).is_trivial())
            .count();
        assert_eq!(rigid, 8);
        let none_smaller = (1..6).all(|n| {
            enumerate_graphs(n).unwrap().iter().all(|g| n == 1 || !automorphism_group(g).is_trivial())
        });
        assert!(none_smaller);
    }

    #[test]
    fn observed_fixing_numbers() {
        let d6 = named_group(NamedGroup::Dihedral, 6).unwrap();
        let obs = group_fixing_numbers_observed(&d6, 6).unwrap();
        assert!(obs.contains(&2) && obs.contains(&3));
        let z2 = named_group(NamedGroup::Cyclic, 2).unwrap();
        assert_eq!(group_fixing_numbers_observed(&z2, 4).unwrap(), BTreeSet::from([1]));
        let one = named_group(NamedGroup::Cyclic, 1).unwrap();
        assert_eq!(group_fixing_numbers_observed(&one, 3).unwrap(), BTreeSet::from([0]));
    }
}
