//! Abstract finite groups given by multiplication tables.

use std::collections::{BTreeSet, HashMap, HashSet};

use super::{GroupError, Permutation, PermGroup};

/// Default ceiling on group orders for anything that materialises a table.
pub const DEFAULT_TABLE_CAP: usize = 5040;

/// A finite group on element indices `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    identity: usize,
    inv: Vec<usize>,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupTable(order={})", self.order)
    }
}

impl GroupTable {
    /// Builds a table from a row-major product array, `mul[a * m + b] = a·b`,
    /// checking the group axioms.
    pub fn from_mul(order: usize, mul: Vec<usize>) -> Result<GroupTable, GroupError> {
        if order == 0 || mul.len() != order * order || mul.iter().any(|&x| x >= order) {
            return Err(GroupError::NotAGroup("table has the wrong shape".into()));
        }
        let t = Self::build(order, mul.into_iter().map(|x| x as u32).collect())
            .ok_or_else(|| GroupError::NotAGroup("no two-sided identity".into()))?;
        t.validate()?;
        Ok(t)
    }

    fn build(order: usize, mul: Vec<u32>) -> Option<GroupTable> {
        let identity = (0..order).find(|&e| {
            (0..order).all(|x| mul[e * order + x] as usize == x && mul[x * order + e] as usize == x)
        })?;
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            inv[a] = (0..order).find(|&b| mul[a * order + b] as usize == identity)?;
        }
        Some(GroupTable { order, mul, identity, inv })
    }

    pub(crate) fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> GroupTable {
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                mul.push(f(a, b) as u32);
            }
        }
        Self::build(order, mul).expect("constructed tables are groups")
    }

    /// Table over the given distinct permutations, products as composition
    /// (`a·b = a ∘ b`). The set must be closed.
    pub fn from_permutations(elems: &[Permutation]) -> Result<GroupTable, GroupError> {
        let index: HashMap<&Permutation, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        if index.len() != elems.len() || elems.is_empty() {
            return Err(GroupError::NotAGroup("duplicate or missing elements".into()));
        }
        let m = elems.len();
        let mut mul = Vec::with_capacity(m * m);
        for a in elems {
            for b in elems {
                let c = a.compose(b);
                let &ci = index
                    .get(&c)
                    .ok_or_else(|| GroupError::NotAGroup("element set not closed".into()))?;
                mul.push(ci as u32);
            }
        }
        Self::build(m, mul).ok_or_else(|| GroupError::NotAGroup("no identity".into()))
    }

    /// Checks identity, inverse and associativity laws exhaustively.
    pub fn validate(&self) -> Result<(), GroupError> {
        let m = self.order;
        for a in 0..m {
            if self.mul(a, self.inv[a]) != self.identity || self.mul(self.inv[a], a) != self.identity {
                return Err(GroupError::NotAGroup(format!("element {a} has no two-sided inverse")));
            }
            for b in 0..m {
                let ab = self.mul(a, b);
                for c in 0..m {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::NotAGroup(format!("({a}{b}){c} != {a}({b}{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// Sorted histogram `(order, count)` of element orders.
    pub fn order_profile(&self) -> Vec<(usize, usize)> {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for a in 0..self.order {
            *counts.entry(self.element_order(a)).or_default() += 1;
        }
        let mut v: Vec<_> = counts.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut elems = vec![self.identity];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            i += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    elems.push(y);
                }
            }
        }
        elems.sort_unstable();
        elems
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.generated_subgroup(gens).len() == self.order
    }

    /// True when `set` is non-empty and closed under products (finite, so
    /// this makes it a subgroup).
    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        if set.is_empty() || set.iter().any(|&x| x >= self.order) {
            return false;
        }
        let members: HashSet<usize> = set.iter().copied().collect();
        members.iter().all(|&a| members.iter().all(|&b| members.contains(&self.mul(a, b))))
    }

    /// Re-indexes the subgroup `set` (sorted ascending) as a table of its own.
    pub fn subgroup_table(&self, set: &[usize]) -> Result<GroupTable, GroupError> {
        if !self.is_subgroup(set) {
            return Err(GroupError::NotASubgroup);
        }
        let mut set = set.to_vec();
        set.sort_unstable();
        set.dedup();
        let pos: HashMap<usize, usize> = set.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        Ok(GroupTable::from_fn(set.len(), |a, b| pos[&self.mul(set[a], set[b])]))
    }

    /// A short generating set: repeatedly adds the element of largest order
    /// outside the current subgroup (ties by index).
    pub fn greedy_generators(&self) -> Vec<usize> {
        let orders: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        let mut by_order: Vec<usize> = (0..self.order).collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(orders[a]), a));
        let mut gens = Vec::new();
        let mut sub = vec![self.identity];
        while sub.len() < self.order {
            let g = *by_order.iter().find(|a| sub.binary_search(a).is_err()).unwrap();
            gens.push(g);
            sub = self.generated_subgroup(&gens);
        }
        gens
    }

    /// Every subgroup (as a sorted element list), ordered by size then
    /// lexicographically. Fails above `cap`.
    pub fn subgroups(&self, cap: usize) -> Result<Vec<Vec<usize>>, GroupError> {
        Ok(self.subgroup_lattice(cap)?.subgroups)
    }

    pub(crate) fn subgroup_lattice(&self, cap: usize) -> Result<SubgroupLattice, GroupError> {
        if self.order > cap {
            return Err(GroupError::OrderAboveCap { order: self.order as u128, cap });
        }
        let trivial = vec![self.identity];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut found: Vec<(Vec<usize>, Vec<usize>)> = vec![(trivial.clone(), Vec::new())];
        index.insert(trivial, 0);
        let mut raw_edges: Vec<(usize, usize)> = Vec::new();
        let mut i = 0;
        while i < found.len() {
            let (elems, gens) = found[i].clone();
            let mut member = vec![false; self.order];
            for &x in &elems {
                member[x] = true;
            }
            for g in 0..self.order {
                if member[g] {
                    continue;
                }
                let mut ng = gens.clone();
                ng.push(g);
                let k = self.generated_subgroup(&ng);
                // ⟨H, g·h⟩ = ⟨H, g⟩ for h ∈ H, so the coset gH is done
                for &h in &elems {
                    member[self.mul(g, h)] = true;
                }
                let j = match index.get(&k) {
                    Some(&j) => j,
                    None => {
                        let j = found.len();
                        index.insert(k.clone(), j);
                        found.push((k, ng));
                        j
                    }
                };
                raw_edges.push((i, j));
            }
            i += 1;
        }
        let mut order: Vec<usize> = (0..found.len()).collect();
        order.sort_by(|&a, &b| found[a].0.len().cmp(&found[b].0.len()).then_with(|| found[a].0.cmp(&found[b].0)));
        let mut rank = vec![0; found.len()];
        for (r, &o) in order.iter().enumerate() {
            rank[o] = r;
        }
        let subgroups: Vec<Vec<usize>> = order.iter().map(|&o| found[o].0.clone()).collect();
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (a, b) in raw_edges {
            edges.insert((rank[a], rank[b]));
        }
        Ok(SubgroupLattice {
            subgroups,
            joins: edges.into_iter().collect(),
        })
    }
}

/// Subgroups sorted by size, plus the relation `H → ⟨H, g⟩` for `g ∉ H`.
/// Every cover relation of the lattice appears among the joins.
pub(crate) struct SubgroupLattice {
    pub subgroups: Vec<Vec<usize>>,
    pub joins: Vec<(usize, usize)>,
}

/// The named families available through [`named_group`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGroup {
    Cyclic,
    /// Order `2n`: symmetries of the `n`-gon.
    Dihedral,
    Symmetric,
    Alternating,
}

/// Standard presentations:
/// * cyclic: element `i` is the `i`-th power of the generator `1`;
/// * dihedral: element `i + n·e` is `r^i f^e`, so `r = 1` and `f = n`;
/// * symmetric / alternating: permutations of `0..n` in lexicographic order
///   of image arrays, products as composition.
pub fn named_group(kind: NamedGroup, n: usize) -> Result<GroupTable, GroupError> {
    named_group_capped(kind, n, DEFAULT_TABLE_CAP)
}

pub fn named_group_capped(kind: NamedGroup, n: usize, cap: usize) -> Result<GroupTable, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter { what: "group parameter", value: 0 });
    }
    let order: u128 = match kind {
        NamedGroup::Cyclic => n as u128,
        NamedGroup::Dihedral => 2 * n as u128,
        NamedGroup::Symmetric => (1..=n as u128).product(),
        NamedGroup::Alternating => ((1..=n as u128).product::<u128>() / 2).max(1),
    };
    if order > cap as u128 {
        return Err(GroupError::OrderAboveCap { order, cap });
    }
    Ok(match kind {
        NamedGroup::Cyclic => GroupTable::from_fn(n, |a, b| (a + b) % n),
        NamedGroup::Dihedral => GroupTable::from_fn(2 * n, |x, y| {
            let (a, e) = (x % n, x / n);
            let (b, f) = (y % n, y / n);
            // r^a f^e · r^b f^f = r^(a ± b) f^(e+f)
            let rot = if e == 0 { (a + b) % n } else { (a + n - b) % n };
            rot + n * ((e + f) % 2)
        }),
        NamedGroup::Symmetric | NamedGroup::Alternating => symmetric_elements(kind, n).1,
    })
}

/// Elements of `S_n` or `A_n` together with their table.
pub fn symmetric_elements(kind: NamedGroup, n: usize) -> (Vec<Permutation>, GroupTable) {
    let gens = permutation_generators(kind, n);
    let g = PermGroup::from_generators(n, &gens).expect("generators share the degree");
    let (t, elems) = g.to_table(usize::MAX).expect("no cap");
    (elems, t)
}

fn permutation_generators(kind: NamedGroup, n: usize) -> Vec<Permutation> {
    let cyc = |pts: Vec<usize>| Permutation::from_cycles(n, &[pts]).unwrap();
    match kind {
        NamedGroup::Symmetric if n >= 2 => vec![cyc((0..n).collect()), cyc(vec![0, 1])],
        NamedGroup::Alternating if n >= 3 => (0..n - 2).map(|i| cyc(vec![i, i + 1, i + 2])).collect(),
        _ => Vec::new(),
    }
}

/// `(a, b) ↦ a·|b| + b`.
pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Result<GroupTable, GroupError> {
    direct_product_capped(a, b, DEFAULT_TABLE_CAP)
}

pub fn direct_product_capped(a: &GroupTable, b: &GroupTable, cap: usize) -> Result<GroupTable, GroupError> {
    let (m, k) = (a.order(), b.order());
    if m * k > cap {
        return Err(GroupError::OrderAboveCap { order: (m * k) as u128, cap });
    }
    Ok(GroupTable::from_fn(m * k, |x, y| a.mul(x / k, y / k) * k + b.mul(x % k, y % k)))
}

/// Index of `(i, j)` in `direct_product(a, b)` where `b` has order `b_order`.
pub fn product_index(i: usize, j: usize, b_order: usize) -> usize {
    i * b_order + j
}

/// True iff the groups are isomorphic. Backtracks over images of a greedy
/// generating set of `a`, restricted to elements of `b` with matching
/// order.
pub fn is_isomorphic_groups(a: &GroupTable, b: &GroupTable) -> bool {
    find_isomorphism(a, b).is_some()
}

/// An isomorphism as a map `a`-index → `b`-index, if one exists.
pub fn find_isomorphism(a: &GroupTable, b: &GroupTable) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.is_abelian() != b.is_abelian() {
        return None;
    }
    if a.order_profile() != b.order_profile() || a.center().len() != b.center().len() {
        return None;
    }
    let gens = a.greedy_generators();
    let b_orders: Vec<usize> = (0..b.order()).map(|x| b.element_order(x)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let og = a.element_order(g);
            (0..b.order()).filter(|&x| b_orders[x] == og).collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    backtrack_iso(a, b, &gens, &candidates, &mut images)
}

fn backtrack_iso(
    a: &GroupTable,
    b: &GroupTable,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if images.len() == gens.len() {
        return extend_homomorphism(a, b, gens, images);
    }
    let depth = images.len();
    for &c in &candidates[depth] {
        if images.contains(&c) {
            continue;
        }
        images.push(c);
        // the partial assignment must already extend on the subgroup it
        // generates
        let ok = extend_homomorphism_partial(a, b, &gens[..=depth], images);
        if ok {
            if let Some(map) = backtrack_iso(a, b, gens, candidates, images) {
                return Some(map);
            }
        }
        images.pop();
    }
    None
}

/// Extends `gens[i] ↦ images[i]` along right multiplication by generators.
/// Returns the map on `⟨gens⟩` when it is a well-defined injective
/// homomorphism there.
fn extend_on_subgroup(a: &GroupTable, b: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; a.order()];
    let mut used = vec![false; b.order()];
    map[a.identity()] = b.identity();
    used[b.identity()] = true;
    let mut queue = vec![a.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (g, &img) in gens.iter().zip(images) {
            let y = a.mul(x, *g);
            let fy = b.mul(map[x], img);
            if map[y] == usize::MAX {
                if used[fy] {
                    return None;
                }
                used[fy] = true;
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

fn extend_homomorphism_partial(a: &GroupTable, b: &GroupTable, gens: &[usize], images: &[usize]) -> bool {
    extend_on_subgroup(a, b, gens, images).is_some()
}

fn extend_homomorphism(a: &GroupTable, b: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let map = extend_on_subgroup(a, b, gens, images)?;
    if map.contains(&usize::MAX) {
        return None;
    }
    Some(map)
}
