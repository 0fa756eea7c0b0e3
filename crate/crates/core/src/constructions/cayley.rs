use super::ConstructionError;
use crate::perm::GroupTable;

/// Directed Cayley graph on the elements of a group: an arc `h → s·h`
/// labelled `j` for the `j`-th generator `s`.
#[derive(Debug, Clone)]
pub struct LabeledCayleyDigraph {
    pub group: GroupTable,
    pub gens: Vec<usize>,
    /// `(tail, head, label)` sorted by tail, then label.
    pub arcs: Vec<(usize, usize, usize)>,
}

impl LabeledCayleyDigraph {
    pub fn node_count(&self) -> usize {
        self.group.order()
    }

    /// Head of the arc leaving `h` with label `j`.
    pub fn out_neighbor(&self, h: usize, j: usize) -> usize {
        self.group.mul(self.gens[j], h)
    }

    /// Whether the node map `f` sends every arc to an arc with the same
    /// label.
    pub fn preserves_arcs(&self, f: &[usize]) -> bool {
        self.arcs.iter().all(|&(a, b, j)| self.out_neighbor(f[a], j) == f[b])
    }
}

pub fn cayley_digraph(t: &GroupTable, gens: &[usize]) -> Result<LabeledCayleyDigraph, ConstructionError> {
    if let Some(&g) = gens.iter().find(|&&g| g >= t.order()) {
        return Err(ConstructionError::InvalidGenerator(g));
    }
    if !t.generates(gens) {
        return Err(ConstructionError::NotGenerating);
    }
    let mut arcs = Vec::with_capacity(t.order() * gens.len());
    for h in 0..t.order() {
        for (j, &s) in gens.iter().enumerate() {
            arcs.push((h, t.mul(s, h), j));
        }
    }
    Ok(LabeledCayleyDigraph {
        group: t.clone(),
        gens: gens.to_vec(),
        arcs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{named_group, NamedGroup};

    #[test]
    fn cyclic_is_a_directed_cycle() {
        let c = cayley_digraph(&named_group(NamedGroup::Cyclic, 5).unwrap(), &[1]).unwrap();
        assert_eq!(c.arcs, (0..5).map(|h| (h, (h + 1) % 5, 0)).collect::<Vec<_>>());
    }

    #[test]
    fn labelled_degrees_are_one() {
        let t = named_group(NamedGroup::Dihedral, 3).unwrap();
        let c = cayley_digraph(&t, &[1, 3]).unwrap();
        assert_eq!((c.node_count(), c.arcs.len()), (6, 12));
        for j in 0..2 {
            for h in 0..6 {
                assert_eq!(c.arcs.iter().filter(|a| a.0 == h && a.2 == j).count(), 1);
                assert_eq!(c.arcs.iter().filter(|a| a.1 == h && a.2 == j).count(), 1);
            }
        }
    }

    #[test]
    fn non_generating_set_rejected() {
        let s3 = named_group(NamedGroup::Symmetric, 3).unwrap();
        let transposition = (0..6).find(|&x| s3.element_order(x) == 2).unwrap();
        assert_eq!(cayley_digraph(&s3, &[transposition]).unwrap_err(), ConstructionError::NotGenerating);
    }

    #[test]
    fn right_translations_preserve_arcs_left_do_not() {
        let t = named_group(NamedGroup::Dihedral, 3).unwrap();
        let c = cayley_digraph(&t, &[1, 3]).unwrap();
        for x in 0..6 {
            let right: Vec<usize> = (0..6).map(|h| t.mul(h, x)).collect();
            assert!(c.preserves_arcs(&right));
        }
        // with arcs h -> s·h, left translation by a non-central element
        // breaks some arc
        let r = 1;
        let left: Vec<usize> = (0..6).map(|h| t.mul(r, h)).collect();
        assert!(!c.preserves_arcs(&left));
    }
}
