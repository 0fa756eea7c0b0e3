//! Primary decomposition of finite abelian groups.

use super::{GroupError, GroupTable};

/// A cyclic direct factor of prime-power order, named by a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicFactor {
    pub prime: u64,
    pub order: usize,
    pub generator: usize,
}

pub(crate) fn prime_factors(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn is_power_of(mut x: usize, p: usize) -> bool {
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

/// Decomposes an abelian group into cyclic factors of prime-power order
/// whose internal direct product is the whole group. Factors are listed by
/// prime ascending, then order descending.
///
/// Within each Sylow subgroup the factor orders are read off from the
/// counts of elements killed by `p^i`; generators are then peeled off
/// largest order first, backtracking if a choice cannot be completed.
pub fn abelian_decomposition(t: &GroupTable) -> Result<Vec<CyclicFactor>, GroupError> {
    if !t.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    let orders: Vec<usize> = (0..t.order()).map(|a| t.element_order(a)).collect();
    let mut out = Vec::new();
    for (p, _) in prime_factors(t.order() as u64) {
        let p_us = p as usize;
        let sylow: Vec<usize> = (0..t.order()).filter(|&a| is_power_of(orders[a], p_us)).collect();
        let invariants = sylow_invariants(&orders, &sylow, p_us);
        let mut chosen = Vec::new();
        if !peel(t, &orders, &sylow, &invariants, &mut chosen) {
            return Err(GroupError::NotAGroup("abelian decomposition failed".into()));
        }
        out.extend(invariants.iter().zip(&chosen).map(|(&order, &generator)| CyclicFactor {
            prime: p,
            order,
            generator,
        }));
    }
    Ok(out)
}

/// Cyclic factor orders of an abelian p-group, descending, from the sizes of
/// `{x : x^{p^i} = e}`.
fn sylow_invariants(orders: &[usize], sylow: &[usize], p: usize) -> Vec<usize> {
    let mut exps = Vec::new(); // exps[i-1] = log_p #{x : ord(x) | p^i}
    let mut pi = p;
    loop {
        let count = sylow.iter().filter(|&&a| pi.is_multiple_of(orders[a])).count();
        let mut e = 0;
        let mut c = count;
        while c > 1 {
            c /= p;
            e += 1;
        }
        exps.push(e);
        if count == sylow.len() {
            break;
        }
        pi *= p;
    }
    // number of factors of order >= p^i is exps[i-1] - exps[i-2]
    let mut at_least: Vec<usize> = Vec::new();
    for i in 0..exps.len() {
        let prev = if i == 0 { 0 } else { exps[i - 1] };
        at_least.push(exps[i] - prev);
    }
    let mut inv = Vec::new();
    for i in (0..at_least.len()).rev() {
        let next = at_least.get(i + 1).copied().unwrap_or(0);
        for _ in 0..at_least[i] - next {
            inv.push(p.pow(i as u32 + 1));
        }
    }
    inv
}

fn peel(t: &GroupTable, orders: &[usize], sylow: &[usize], invariants: &[usize], chosen: &mut Vec<usize>) -> bool {
    let depth = chosen.len();
    if depth == invariants.len() {
        return true;
    }
    let current = t.generated_subgroup(chosen);
    let want = invariants[depth];
    for &g in sylow {
        if orders[g] != want {
            continue;
        }
        let cyc = t.generated_subgroup(&[g]);
        if cyc.iter().any(|&x| x != t.identity() && current.binary_search(&x).is_ok()) {
            continue;
        }
        chosen.push(g);
        if peel(t, orders, sylow, invariants, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// The elementary divisors, sorted ascending.
pub fn elementary_divisors(t: &GroupTable) -> Result<Vec<u64>, GroupError> {
    let mut v: Vec<u64> = abelian_decomposition(t)?.iter().map(|f| f.order as u64).collect();
    v.sort_unstable();
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{direct_product, named_group, NamedGroup, Permutation, PermGroup};

    fn z(n: usize) -> GroupTable {
        named_group(NamedGroup::Cyclic, n).unwrap()
    }

    /// Independent oracle: the divisor multiset determines, for every prime
    /// power q, how many elements have order dividing q. Compare those
    /// counts directly against the group rather than against the peeling.
    fn counts_match(t: &GroupTable, divisors: &[u64]) -> bool {
        for (p, e) in prime_factors(t.order() as u64) {
            for i in 1..=e {
                let q = p.pow(i);
                let predicted: u64 = divisors
                    .iter()
                    .filter(|&&d| d % p == 0)
                    .map(|&d| d.min(q))
                    .product();
                let actual = (0..t.order())
                    .filter(|&a| {
                        let o = t.element_order(a) as u64;
                        q % o == 0
                    })
                    .count() as u64;
                if predicted != actual {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(elementary_divisors(&z(12)).unwrap(), vec![3, 4]);
        let v4 = direct_product(&z(2), &z(2)).unwrap();
        assert_eq!(elementary_divisors(&v4).unwrap(), vec![2, 2]);
        let z2z4 = direct_product(&z(2), &z(4)).unwrap();
        assert_eq!(elementary_divisors(&z2z4).unwrap(), vec![2, 4]);
        let s3 = named_group(NamedGroup::Symmetric, 3).unwrap();
        assert_eq!(elementary_divisors(&s3), Err(GroupError::NotAbelian));
    }

    #[test]
    fn decomposition_is_internal_direct_product() {
        let groups = [
            direct_product(&z(4), &z(6)).unwrap(),
            direct_product(&direct_product(&z(2), &z(2)).unwrap(), &z(3)).unwrap(),
            direct_product(&z(8), &z(2)).unwrap(),
            direct_product(&z(4), &z(4)).unwrap(),
            direct_product(&direct_product(&z(2), &z(4)).unwrap(), &z(8)).unwrap(),
            z(1),
            z(30),
        ];
        for t in &groups {
            let fs = abelian_decomposition(t).unwrap();
            let prod: usize = fs.iter().map(|f| f.order).product();
            assert_eq!(prod, t.order());
            let gens: Vec<usize> = fs.iter().map(|f| f.generator).collect();
            assert!(t.generates(&gens));
            for f in &fs {
                assert_eq!(t.element_order(f.generator), f.order);
            }
            let divs: Vec<u64> = fs.iter().map(|f| f.order as u64).collect();
            assert!(counts_match(t, &divs), "{t:?}");
        }
    }

    #[test]
    fn brute_force_agreement_up_to_64() {
        // every abelian group of order <= 64 built from cyclic factors of
        // prime-power order
        let factors = [2usize, 3, 4, 5, 7, 8, 9, 16];
        let mut seen = 0;
        for &a in &factors {
            for &b in &factors {
                for &c in &[1usize, 2, 4] {
                    if a * b * c > 64 {
                        continue;
                    }
                    let t = direct_product(&direct_product(&z(a), &z(b)).unwrap(), &z(c)).unwrap();
                    let divs = elementary_divisors(&t).unwrap();
                    assert!(counts_match(&t, &divs));
                    let prod: u64 = divs.iter().product();
                    assert_eq!(prod as usize, t.order());
                    seen += 1;
                }
            }
        }
        assert!(seen > 20);
    }

    #[test]
    fn perm_group_divisors_independent_of_generators() {
        // Z2 x Z4 on 6 points, from two different generating sets
        let a = Permutation::parse("(0 1)", 6).unwrap();
        let b = Permutation::parse("(2 3 4 5)", 6).unwrap();
        let g1 = PermGroup::from_generators(6, &[a.clone(), b.clone()]).unwrap();
        let g2 = PermGroup::from_generators(6, &[a.then(&b), b.pow(2), a.clone()]).unwrap();
        assert_eq!(g1.elementary_divisors().unwrap(), vec![2, 4]);
        assert_eq!(g2.elementary_divisors().unwrap(), vec![2, 4]);
    }
}
