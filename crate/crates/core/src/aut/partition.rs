use std::collections::VecDeque;

use crate::graph::Graph;

/// An ordered partition of `0..n`, stored as a vertex array cut into
/// contiguous cells. A cell is named by the position of its first entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    lab: Vec<usize>,
    pos: Vec<usize>,
    /// vertex -> start of its cell
    start: Vec<usize>,
    /// cell start -> one past its last position (other entries are stale)
    end: Vec<usize>,
    cells: usize,
}

impl OrderedPartition {
    /// The partition with a single cell.
    pub fn unit(n: usize) -> OrderedPartition {
        OrderedPartition::from_colors(&vec![0; n])
    }

    /// One cell per distinct color, cells ordered by color value.
    pub fn from_colors(colors: &[usize]) -> OrderedPartition {
        let n = colors.len();
        let mut lab: Vec<usize> = (0..n).collect();
        lab.sort_by_key(|&v| (colors[v], v));
        let mut p = OrderedPartition {
            pos: vec![0; n],
            start: vec![0; n],
            end: vec![0; n],
            lab,
            cells: 0,
        };
        let mut i = 0;
        while i < n {
            let mut j = i + 1;
            while j < n && colors[p.lab[j]] == colors[p.lab[i]] {
                j += 1;
            }
            for k in i..j {
                p.start[p.lab[k]] = i;
            }
            p.end[i] = j;
            p.cells += 1;
            i = j;
        }
        for (k, &v) in p.lab.iter().enumerate() {
            p.pos[v] = k;
        }
        p
    }

    pub fn len(&self) -> usize {
        self.lab.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lab.is_empty()
    }

    pub fn num_cells(&self) -> usize {
        self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// The cells in order; vertices within a cell in storage order.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.cell_starts().map(|s| self.lab[s..self.end[s]].to_vec()).collect()
    }

    /// Index of the cell holding `v` in the order of [`cells`](Self::cells).
    pub fn cell_index(&self, v: usize) -> usize {
        self.cell_starts().take_while(|&s| s < self.start[v]).count()
    }

    fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0;
        std::iter::from_fn(move || {
            if s >= self.lab.len() {
                return None;
            }
            let cur = s;
            s = self.end[cur];
            Some(cur)
        })
    }

    pub(crate) fn lab(&self) -> &[usize] {
        &self.lab
    }

    pub(crate) fn pos(&self) -> &[usize] {
        &self.pos
    }

    pub(crate) fn cell_vertices(&self, start: usize) -> &[usize] {
        &self.lab[start..self.end[start]]
    }

    /// First cell of smallest size above one.
    pub(crate) fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for s in self.cell_starts() {
            let size = self.end[s] - s;
            if size > 1 && best.is_none_or(|(_, b)| size < b) {
                best = Some((s, size));
            }
        }
        best.map(|(s, _)| s)
    }

    /// Splits `v` off the front of its cell; returns the new singleton cell.
    pub(crate) fn individualize(&mut self, v: usize) -> usize {
        let s = self.start[v];
        let e = self.end[s];
        debug_assert!(e - s > 1);
        let other = self.lab[s];
        let pv = self.pos[v];
        self.lab.swap(s, pv);
        self.pos[other] = pv;
        self.pos[v] = s;
        self.end[s] = s + 1;
        self.end[s + 1] = e;
        for k in s + 1..e {
            self.start[self.lab[k]] = s + 1;
        }
        self.cells += 1;
        s
    }
}

#[inline]
pub(crate) fn mix(h: u64, x: u64) -> u64 {
    (h.rotate_left(7) ^ x).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Equitable refinement driver; owns scratch space sized to one graph.
pub(crate) struct Refiner {
    nbrs: Vec<Vec<u32>>,
    count: Vec<u32>,
    in_queue: Vec<bool>,
    touched: Vec<usize>,
    scratch: Vec<(u32, usize)>,
}

impl Refiner {
    pub(crate) fn new(g: &Graph) -> Refiner {
        let n = g.n();
        Refiner {
            nbrs: (0..n).map(|v| g.neighbors(v).map(|u| u as u32).collect()).collect(),
            count: vec![0; n],
            in_queue: vec![false; n],
            touched: Vec::new(),
            scratch: Vec::new(),
        }
    }

    /// Refines `p` to the coarsest equitable partition finer than it,
    /// starting from the given splitter cells. Returns a hash of the
    /// splitting history that does not depend on vertex names.
    pub(crate) fn refine(&mut self, p: &mut OrderedPartition, splitters: &[usize]) -> u64 {
        let mut trace: u64 = 0x5151;
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in splitters {
            if !self.in_queue[s] {
                self.in_queue[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(ws) = queue.pop_front() {
            self.in_queue[ws] = false;
            if p.is_discrete() {
                continue;
            }
            let we = p.end[ws];
            for i in ws..we {
                for &u in &self.nbrs[p.lab[i]] {
                    let u = u as usize;
                    if self.count[u] == 0 {
                        self.touched.push(u);
                    }
                    self.count[u] += 1;
                }
            }
            let mut cells: Vec<usize> = self.touched.iter().map(|&u| p.start[u]).collect();
            cells.sort_unstable();
            cells.dedup();
            trace = mix(trace, ((ws as u64) << 32) | self.touched.len() as u64);
            for cs in cells {
                let ce = p.end[cs];
                if ce - cs == 1 {
                    continue;
                }
                self.scratch.clear();
                self.scratch.extend(p.lab[cs..ce].iter().map(|&v| (self.count[v], v)));
                let first = self.scratch[0].0;
                if self.scratch.iter().all(|&(c, _)| c == first) {
                    continue;
                }
                self.scratch.sort_unstable();
                let was_queued = self.in_queue[cs];
                let mut frags: Vec<(usize, usize)> = Vec::new();
                let mut i = 0;
                while i < self.scratch.len() {
                    let mut j = i + 1;
                    while j < self.scratch.len() && self.scratch[j].0 == self.scratch[i].0 {
                        j += 1;
                    }
                    let (fs, fe) = (cs + i, cs + j);
                    for (k, &(_, v)) in self.scratch[i..j].iter().enumerate() {
                        p.lab[fs + k] = v;
                        p.pos[v] = fs + k;
                        p.start[v] = fs;
                    }
                    p.end[fs] = fe;
                    trace = mix(trace, ((fs as u64) << 40) ^ ((self.scratch[i].0 as u64) << 20) ^ (j - i) as u64);
                    frags.push((fs, fe));
                    i = j;
                }
                p.cells += frags.len() - 1;
                let skip = if was_queued {
                    Some(cs)
                } else {
                    let mut big = frags[0];
                    for &f in &frags {
                        if f.1 - f.0 > big.1 - big.0 {
                            big = f;
                        }
                    }
                    Some(big.0)
                };
                for &(fs, _) in &frags {
                    if Some(fs) != skip && !self.in_queue[fs] {
                        self.in_queue[fs] = true;
                        queue.push_back(fs);
                    }
                }
            }
            for &u in &self.touched {
                self.count[u] = 0;
            }
            self.touched.clear();
        }
        mix(trace, p.cells as u64)
    }

    pub(crate) fn refine_all(&mut self, p: &mut OrderedPartition) -> u64 {
        let starts: Vec<usize> = p.cell_starts().collect();
        self.refine(p, &starts)
    }
}

/// The coarsest equitable partition finer than `p`.
pub fn equitable_refinement(g: &Graph, p: &OrderedPartition) -> OrderedPartition {
    let mut q = p.clone();
    Refiner::new(g).refine_all(&mut q);
    q
}

/// Whether every vertex of a cell has the same number of neighbours in
/// each cell.
pub fn is_equitable(g: &Graph, p: &OrderedPartition) -> bool {
    let cells = p.cells();
    cells.iter().all(|c| {
        cells.iter().all(|d| {
            let count = |v: usize| d.iter().filter(|&&u| g.has_edge(v, u)).count();
            let k = count(c[0]);
            c.iter().all(|&v| count(v) == k)
        })
    })
}
