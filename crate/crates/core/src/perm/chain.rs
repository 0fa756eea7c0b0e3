//! Permutation groups represented by a deterministic Schreier–Sims
//! stabilizer chain.

use std::collections::HashSet;

use super::{GroupError, GroupTable, Permutation};

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    orbit: Vec<usize>,
    /// `trans[p] = (u, u⁻¹)` with `u(base) = p`, for `p` in the orbit.
    trans: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Level {
        let mut trans = vec![None; degree];
        let id = Permutation::identity(degree);
        trans[base] = Some((id.clone(), id));
        Level {
            base,
            orbit: vec![base],
            trans,
        }
    }

    /// Closes the orbit under `gens`, never replacing an existing
    /// transversal element.
    fn extend_orbit<'a>(&mut self, gens: impl Iterator<Item = &'a Permutation> + Clone) {
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for s in gens.clone() {
                let q = s.apply(p);
                if self.trans[q].is_none() {
                    let u = self.trans[p].as_ref().unwrap().0.then(s);
                    let uinv = u.inverse();
                    self.trans[q] = Some((u, uinv));
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }
}

/// A permutation group on `0..degree` with a stabilizer chain. Immutable
/// once built.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    /// Strong generators with the chain level they were added at; a
    /// generator added at level `j` fixes the first `j` base points.
    strong: Vec<(Permutation, usize)>,
    levels: Vec<Level>,
}

fn sift(levels: &[Level], start: usize, mut g: Permutation) -> (Permutation, usize) {
    for (i, level) in levels.iter().enumerate().skip(start) {
        match &level.trans[g.apply(level.base)] {
            None => return (g, i),
            Some((_, uinv)) => g = g.then(uinv),
        }
    }
    (g, levels.len())
}

impl PermGroup {
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: Vec::new(),
            strong: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// Builds the group generated by `gens`; every generator must have
    /// degree `degree`.
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<PermGroup, GroupError> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(Self::build(degree, gens, &[]))
    }

    /// Like [`from_generators`](Self::from_generators) with the degree taken
    /// from the first generator. An empty list yields the trivial group of
    /// degree 0.
    pub fn group_from_generators(gens: &[Permutation]) -> Result<PermGroup, GroupError> {
        let degree = gens.first().map_or(0, |g| g.degree());
        Self::from_generators(degree, gens)
    }

    fn build(degree: usize, gens: &[Permutation], prefix: &[usize]) -> PermGroup {
        let mut levels: Vec<Level> = prefix.iter().map(|&b| Level::new(b, degree)).collect();
        let mut checked: Vec<HashSet<(usize, usize)>> = vec![HashSet::new(); levels.len()];
        let mut strong: Vec<(Permutation, usize)> = Vec::new();

        let add = |levels: &mut Vec<Level>,
                   checked: &mut Vec<HashSet<(usize, usize)>>,
                   strong: &mut Vec<(Permutation, usize)>,
                   res: Permutation,
                   j: usize| {
            if j == levels.len() {
                let b = res.first_moved().expect("residue is not the identity");
                levels.push(Level::new(b, degree));
                checked.push(HashSet::new());
            }
            strong.push((res, j));
        };

        for g in gens {
            let (res, j) = sift(&levels, 0, g.clone());
            if !res.is_identity() {
                add(&mut levels, &mut checked, &mut strong, res, j);
            }
        }

        loop {
            let mut pending = None;
            'scan: for i in (0..levels.len()).rev() {
                levels[i].extend_orbit(strong.iter().filter(|(_, l)| *l >= i).map(|(s, _)| s));
                for oi in 0..levels[i].orbit.len() {
                    let p = levels[i].orbit[oi];
                    for (sid, (s, lvl)) in strong.iter().enumerate() {
                        if *lvl < i || !checked[i].insert((p, sid)) {
                            continue;
                        }
                        let u = &levels[i].trans[p].as_ref().unwrap().0;
                        let uq_inv = &levels[i].trans[s.apply(p)].as_ref().unwrap().1;
                        let h = u.then(s).then(uq_inv);
                        if h.is_identity() {
                            continue;
                        }
                        let (res, j) = sift(&levels, i + 1, h);
                        if !res.is_identity() {
                            pending = Some((res, j));
                            break 'scan;
                        }
                    }
                }
            }
            match pending {
                Some((res, j)) => add(&mut levels, &mut checked, &mut strong, res, j),
                None => break,
            }
        }

        PermGroup {
            degree,
            generators: gens.iter().filter(|g| !g.is_identity()).cloned().collect(),
            strong,
            levels,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> impl Iterator<Item = &Permutation> {
        self.strong.iter().map(|(s, _)| s)
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Orbit lengths of the chain, one per base point.
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && sift(&self.levels, 0, p.clone()).0.is_identity()
    }

    fn check_point(&self, v: usize) -> Result<(), GroupError> {
        if v < self.degree {
            Ok(())
        } else {
            Err(GroupError::PointOutOfRange {
                point: v,
                degree: self.degree,
            })
        }
    }

    /// Orbit of `v`, sorted.
    pub fn orbit(&self, v: usize) -> Result<Vec<usize>, GroupError> {
        self.check_point(v)?;
        let mut seen = vec![false; self.degree];
        seen[v] = true;
        let mut orb = vec![v];
        let mut i = 0;
        while i < orb.len() {
            let p = orb[i];
            i += 1;
            for s in &self.generators {
                let q = s.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orb.push(q);
                }
            }
        }
        orb.sort_unstable();
        Ok(orb)
    }

    /// `orbit_ids()[v]` is the smallest point in the orbit of `v`.
    pub fn orbit_ids(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.degree).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for s in &self.generators {
            for v in 0..self.degree {
                let a = find(&mut parent, v);
                let b = find(&mut parent, s.apply(v));
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi] = lo;
                }
            }
        }
        (0..self.degree).map(|v| find(&mut parent, v)).collect()
    }

    /// The orbit partition, each orbit sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let ids = self.orbit_ids();
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.degree];
        for (v, &r) in ids.iter().enumerate() {
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(v);
        }
        out
    }

    pub fn point_stabilizer(&self, v: usize) -> Result<PermGroup, GroupError> {
        self.pointwise_stabilizer(&[v])
    }

    /// The subgroup fixing every point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup, GroupError> {
        let mut prefix: Vec<usize> = Vec::with_capacity(points.len());
        for &p in points {
            self.check_point(p)?;
            if !prefix.contains(&p) {
                prefix.push(p);
            }
        }
        if self.generators.is_empty() {
            return Ok(PermGroup::trivial(self.degree));
        }
        let k = prefix.len();
        let chain = if self.base().starts_with(&prefix) {
            self.clone()
        } else {
            let gens: Vec<Permutation> = self.strong_generators().cloned().collect();
            Self::build(self.degree, &gens, &prefix)
        };
        let strong: Vec<(Permutation, usize)> = chain
            .strong
            .iter()
            .filter(|(_, l)| *l >= k)
            .map(|(s, l)| (s.clone(), l - k))
            .collect();
        let levels = if chain.levels.len() > k {
            chain.levels[k..].to_vec()
        } else {
            Vec::new()
        };
        Ok(PermGroup {
            degree: self.degree,
            generators: strong.iter().map(|(s, _)| s.clone()).collect(),
            strong,
            levels,
        }
        .compact())
    }

    /// Removes levels whose orbit is a single point. No strong generator
    /// lives at such a level, since generators added at level `j` move the
    /// `j`-th base point.
    fn compact(mut self) -> PermGroup {
        let trivial: Vec<usize> = (0..self.levels.len())
            .filter(|&i| self.levels[i].orbit.len() == 1)
            .collect();
        if trivial.is_empty() {
            return self;
        }
        for (_, l) in &mut self.strong {
            debug_assert!(!trivial.contains(l));
            *l -= trivial.iter().filter(|&&r| r < *l).count();
        }
        let mut i = 0;
        self.levels.retain(|_| {
            i += 1;
            !trivial.contains(&(i - 1))
        });
        self
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.then(b) == b.then(a))
        })
    }

    /// Every element, in lexicographic order of image arrays (identity
    /// first). Fails when the order exceeds `cap`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>, GroupError> {
        let order = self.order();
        if order > cap as u128 {
            return Err(GroupError::OrderAboveCap { order, cap });
        }
        let mut elems = vec![Permutation::identity(self.degree)];
        // g = u_{m-1} then … then u_0, built from the deepest level up
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for e in &elems {
                for &p in &level.orbit {
                    next.push(e.then(&level.trans[p].as_ref().unwrap().0));
                }
            }
            elems = next;
        }
        elems.sort();
        Ok(elems)
    }

    /// Multiplication table over [`elements`](Self::elements), in the same
    /// order. Products are function composition.
    pub fn to_table(&self, cap: usize) -> Result<(GroupTable, Vec<Permutation>), GroupError> {
        let elems = self.elements(cap)?;
        let table = GroupTable::from_permutations(&elems)?;
        Ok((table, elems))
    }

    pub fn elementary_divisors(&self) -> Result<Vec<u64>, GroupError> {
        if !self.is_abelian() {
            return Err(GroupError::NotAbelian);
        }
        let (t, _) = self.to_table(super::DEFAULT_TABLE_CAP)?;
        super::elementary_divisors(&t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    /// Explicit closure of the generators, for cross-checking the chain.
    fn brute_closure(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
        let mut set = HashSet::new();
        let id = Permutation::identity(degree);
        set.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.then(g);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    fn d6() -> PermGroup {
        PermGroup::from_generators(6, &[p("(0 1 2 3 4 5)", 6), p("(1 5)(2 4)", 6)]).unwrap()
    }

    #[test]
    fn basic_orders() {
        assert_eq!(d6().order(), 12);
        assert_eq!(brute_closure(6, d6().generators()).len(), 12);
        assert_eq!(PermGroup::from_generators(4, &[]).unwrap().order(), 1);
        assert_eq!(PermGroup::from_generators(5, &[p("(0 1 2 3 4)", 5)]).unwrap().order(), 5);
        assert!(matches!(
            PermGroup::from_generators(5, &[p("(0 1)", 4)]),
            Err(GroupError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn orbits_and_stabilizers() {
        let g = d6();
        assert_eq!(g.orbit(0).unwrap(), (0..6).collect::<Vec<_>>());
        let t = PermGroup::trivial(4);
        assert_eq!(t.orbit(2).unwrap(), vec![2]);
        assert!(g.orbit(6).is_err());
        let s0 = g.point_stabilizer(0).unwrap();
        assert_eq!(s0.order(), 2);
        assert!(s0.contains(&p("(1 5)(2 4)", 6)));
        let all = g.pointwise_stabilizer(&[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(all.order(), 1);
        assert!(g.point_stabilizer(9).is_err());
    }

    #[test]
    fn membership() {
        let g = d6();
        assert!(g.contains(&p("(0 5 4 3 2 1)", 6)));
        assert!(g.contains(&p("(0 3)(1 4)(2 5)", 6)));
        assert!(!g.contains(&p("(0 1)", 6)));
    }

    #[test]
    fn symmetric_groups() {
        for n in 2..=7usize {
            let gens = [p(&format!("({})", (0..n).map(|i| i.to_string()).collect::<Vec<_>>().join(" ")), n), p("(0 1)", n)];
            let g = PermGroup::from_generators(n, &gens).unwrap();
            assert_eq!(g.order(), (1..=n as u128).product::<u128>());
            for k in 0..n {
                let st = g.pointwise_stabilizer(&(0..k).collect::<Vec<_>>()).unwrap();
                let expect: u128 = (1..=(n - k) as u128).product();
                assert_eq!(st.order(), expect, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn elements_and_table() {
        let (t, elems) = d6().to_table(100).unwrap();
        assert_eq!(t.order(), 12);
        assert!(elems[0].is_identity());
        assert_eq!(t.identity(), 0);
        assert!(d6().to_table(10).is_err());
    }

    #[test]
    fn chain_matches_closure_on_assorted_groups() {
        let cases: Vec<(usize, Vec<&str>)> = vec![
            (6, vec!["(0 1)(2 3)", "(0 2)(1 3)", "(4 5)"]),
            (7, vec!["(0 1 2)(3 4)", "(4 5 6)"]),
            (8, vec!["(0 1 2 3)(4 5 6 7)", "(0 4)(1 7)(2 6)(3 5)"]),
            (5, vec!["(0 1 2)", "(1 2 3)", "(2 3 4)"]),
            (9, vec!["(0 1 2)(3 4 5)(6 7 8)", "(0 3 6)(1 4 7)(2 5 8)"]),
        ];
        for (n, gens) in cases {
            let gens: Vec<Permutation> = gens.into_iter().map(|s| p(s, n)).collect();
            let g = PermGroup::from_generators(n, &gens).unwrap();
            let closure = brute_closure(n, &gens);
            assert_eq!(g.order(), closure.len() as u128);
            for x in &closure {
                assert!(g.contains(x));
            }
            let elems: HashSet<Permutation> = g.elements(10_000).unwrap().into_iter().collect();
            assert_eq!(elems, closure);
        }
    }

    #[test]
    fn orbit_stabilizer_on_every_point() {
        let gens = [p("(0 1 2 3 4 5 6 7 8)", 10), p("(1 8)(2 7)(3 6)(4 5)", 10), p("(0 9)", 10)];
        let g = PermGroup::from_generators(10, &gens).unwrap();
        for v in 0..10 {
            let orb = g.orbit(v).unwrap().len() as u128;
            let st = g.point_stabilizer(v).unwrap().order();
            assert_eq!(g.order(), orb * st);
        }
    }
}
