//! Named groups with fixed generating sets, addressable by string key such
//! as `"Z5:1"`, `"D3:r,f"` or `"A4:std"`.

use crate::perm::{
    direct_product, is_isomorphic_groups, named_group, product_index, symmetric_elements, GroupTable, NamedGroup,
    Permutation,
};

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    /// Registry key, `name:generators`.
    pub key: String,
    pub name: String,
    pub table: GroupTable,
    /// Generating set as element indices of `table`.
    pub gens: Vec<usize>,
}

impl CatalogEntry {
    pub fn order(&self) -> usize {
        self.table.order()
    }
}

fn entry(name: &str, gen_label: &str, table: GroupTable, gens: Vec<usize>) -> CatalogEntry {
    debug_assert!(table.generates(&gens), "{name}");
    CatalogEntry {
        key: format!("{name}:{gen_label}"),
        name: name.to_string(),
        table,
        gens,
    }
}

fn cyclic(n: usize) -> CatalogEntry {
    let t = named_group(NamedGroup::Cyclic, n).expect("small order");
    entry(&format!("Z{n}"), "1", t, if n == 1 { vec![] } else { vec![1] })
}

/// Product of cyclic groups with the unit-vector generators.
fn cyclic_product(orders: &[usize]) -> CatalogEntry {
    let mut t = named_group(NamedGroup::Cyclic, orders[0]).expect("small order");
    let mut gens = vec![1];
    for &m in &orders[1..] {
        let z = named_group(NamedGroup::Cyclic, m).expect("small order");
        gens = gens.iter().map(|&g| product_index(g, 0, m)).collect();
        gens.push(product_index(0, 1, m));
        t = direct_product(&t, &z).expect("small order");
    }
    let name = orders.iter().map(|m| format!("Z{m}")).collect::<Vec<_>>().join("x");
    entry(&name, "std", t, gens)
}

fn dihedral(n: usize) -> CatalogEntry {
    let t = named_group(NamedGroup::Dihedral, n).expect("small order");
    entry(&format!("D{n}"), "r,f", t, vec![1, n])
}

fn permutation_group(kind: NamedGroup, name: &str, n: usize, gens: &[&str]) -> CatalogEntry {
    let (elems, t) = symmetric_elements(kind, n);
    let idx = gens
        .iter()
        .map(|s| {
            let p = Permutation::parse(s, n).expect("valid cycle notation");
            elems.iter().position(|e| *e == p).expect("generator lies in the group")
        })
        .collect();
    entry(name, "std", t, idx)
}

/// Every registry entry, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = (2..=9).map(cyclic).collect();
    out.push(cyclic(12));
    out.push(cyclic_product(&[2, 2]));
    out.push(cyclic_product(&[2, 4]));
    out.push(cyclic_product(&[2, 2, 3]));
    out.extend((3..=6).map(dihedral));
    out.push(permutation_group(NamedGroup::Symmetric, "S3", 3, &["(0 1 2)", "(0 1)"]));
    out.push(permutation_group(NamedGroup::Alternating, "A4", 4, &["(0 1 2)", "(0 1)(2 3)"]));
    out.push(permutation_group(NamedGroup::Symmetric, "S4", 4, &["(0 1 2 3)", "(0 1)"]));
    out.push(permutation_group(NamedGroup::Symmetric, "S5", 5, &["(0 1 2 3 4)", "(0 1)"]));
    out
}

/// Looks up a full key (`"D3:r,f"`) or a bare group name (`"D3"`).
pub fn lookup(key: &str) -> Option<CatalogEntry> {
    let key = key.trim();
    catalog()
        .into_iter()
        .find(|e| e.key == key || (!key.contains(':') && e.name.eq_ignore_ascii_case(key)))
}

/// Name of a catalog group isomorphic to `t`, if any. The trivial group is
/// reported as `"1"`.
pub fn identify_group(t: &GroupTable) -> Option<String> {
    if t.order() == 1 {
        return Some("1".to_string());
    }
    identify_in(&catalog(), t)
}

pub fn identify_in(entries: &[CatalogEntry], t: &GroupTable) -> Option<String> {
    entries
        .iter()
        .find(|e| e.order() == t.order() && is_isomorphic_groups(&e.table, t))
        .map(|e| e.name.clone())
}
