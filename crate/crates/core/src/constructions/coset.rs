use super::ConstructionError;
use crate::perm::{GroupTable, PermGroup, Permutation};

/// A group acting on the left cosets of a subgroup by `x · gH = (xg)H`.
#[derive(Debug, Clone)]
pub struct CosetAction {
    pub table: GroupTable,
    pub subgroup: Vec<usize>,
    /// Left cosets, each sorted, ordered by smallest element.
    pub cosets: Vec<Vec<usize>>,
    /// The permutation of cosets induced by each group element.
    pub element_perms: Vec<Permutation>,
    /// Elements acting trivially.
    pub kernel: Vec<usize>,
}

impl CosetAction {
    pub fn degree(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel.len() == 1
    }

    /// The image of the action as a permutation group.
    pub fn image(&self) -> PermGroup {
        PermGroup::from_generators(self.degree(), &self.element_perms).expect("perms share the degree")
    }
}

pub fn coset_action(t: &GroupTable, subgroup: &[usize]) -> Result<CosetAction, ConstructionError> {
    let mut h = subgroup.to_vec();
    h.sort_unstable();
    h.dedup();
    if h.iter().any(|&x| x >= t.order()) || !t.is_subgroup(&h) {
        return Err(ConstructionError::NotASubgroup);
    }
    let mut coset_of = vec![usize::MAX; t.order()];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for g in 0..t.order() {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let mut c: Vec<usize> = h.iter().map(|&x| t.mul(g, x)).collect();
        c.sort_unstable();
        for &y in &c {
            coset_of[y] = cosets.len();
        }
        cosets.push(c);
    }
    let element_perms: Vec<Permutation> = (0..t.order())
        .map(|x| {
            let img = cosets.iter().map(|c| coset_of[t.mul(x, c[0])]).collect();
            Permutation::from_images(img).expect("cosets are permuted")
        })
        .collect();
    let kernel = (0..t.order()).filter(|&x| element_perms[x].is_identity()).collect();
    Ok(CosetAction {
        table: t.clone(),
        subgroup: h,
        cosets,
        element_perms,
        kernel,
    })
}
