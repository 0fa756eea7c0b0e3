use std::fmt;

use super::GroupError;

/// A bijection on `0..degree`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation { img: (0..degree).collect() }
    }

    pub fn from_images(img: Vec<usize>) -> Result<Permutation, GroupError> {
        let mut seen = vec![false; img.len()];
        for &x in &img {
            if x >= img.len() || std::mem::replace(&mut seen[x], true) {
                return Err(GroupError::NotAPermutation);
            }
        }
        Ok(Permutation { img })
    }

    /// Builds a permutation from disjoint cycles; points not mentioned are
    /// fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation, GroupError> {
        let mut img: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                if x >= degree {
                    return Err(GroupError::PointOutOfRange { point: x, degree });
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(GroupError::NotAPermutation);
                }
                img[x] = c[(i + 1) % c.len()];
            }
        }
        Ok(Permutation { img })
    }

    /// Parses disjoint-cycle notation such as `"(0 1 2)(3 4)"`; `"()"` is the
    /// identity. Commas are accepted as separators.
    pub fn parse(s: &str, degree: usize) -> Result<Permutation, GroupError> {
        let bad = || GroupError::Parse(s.to_string());
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let cycle: Vec<usize> = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.img[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    /// `self` followed by `other`: `v ↦ other(self(v))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            img: self.img.iter().map(|&x| other.img[x]).collect(),
        }
    }

    /// Function composition `self ∘ other`: `v ↦ self(other(v))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        other.then(self)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { img: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.img.iter().enumerate().find(|&(i, &x)| i != x).map(|(i, _)| i)
    }

    /// Non-trivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.img.len()];
        let mut out = Vec::new();
        for s in 0..self.img.len() {
            if seen[s] || self.img[s] == s {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.img[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.img[x];
            }
            out.push(c);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
