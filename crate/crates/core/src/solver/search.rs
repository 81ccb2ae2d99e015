//! Depth-first ball-cover search.
//!
//! A graph burns in `k` rounds iff its vertices can be covered by closed balls
//! of radii `k-1, k-2, ..., 0`, one ball per radius, with arbitrary centers:
//! when a center is already burning at its turn, lighting any other unburned
//! vertex only burns more. So the search places balls without the spacing
//! constraint and [`repair`] turns the centers into a spaced sequence.
//!
//! Each node picks the uncovered vertex with the fewest uncovered vertices
//! around it and branches on which ball covers it. Candidate centers whose
//! uncovered gain is contained in another candidate's are skipped, a gain-sum
//! bound cuts hopeless nodes, and failed `(covered, used radii)` states are
//! memoized.

use rustc_hash::FxHashSet;

use crate::graph::{DistanceMatrix, Vertex};

/// Memo entries kept per pass before the table stops growing.
const MEMO_CAP: usize = 1 << 22;

pub(crate) enum Pass {
    /// Center per radius (`centers[rho]`), `None` for radii left unused.
    Found(Vec<Option<Vertex>>),
    Refuted,
    OutOfBudget,
}

pub(crate) struct BallCover<'a> {
    dm: &'a DistanceMatrix,
    n: usize,
    words: usize,
    k: usize,
    /// `balls[(x * k + rho) * words ..]` is the bitset of `N_rho[x]`.
    balls: Vec<u64>,
    full: Vec<u64>,
    pub nodes: u64,
    budget: u64,
    memo: FxHashSet<Box<[u64]>>,
    centers: Vec<Option<Vertex>>,
    // per-depth scratch: covered bitsets and gain counts
    stack: Vec<Vec<u64>>,
    gains: Vec<u32>,
}

impl<'a> BallCover<'a> {
    pub fn new(dm: &'a DistanceMatrix, k: usize, nodes_used: u64, budget: u64) -> Self {
        let n = dm.order();
        let words = n.div_ceil(64).max(1);
        let mut balls = vec![0u64; n * k * words];
        for x in 0..n {
            let row = dm.row(x);
            for (v, &d) in row.iter().enumerate() {
                if d == DistanceMatrix::UNREACHABLE {
                    continue;
                }
                for rho in (d as usize)..k {
                    balls[(x * k + rho) * words + v / 64] |= 1 << (v % 64);
                }
            }
        }
        let mut full = vec![0u64; words];
        for v in 0..n {
            full[v / 64] |= 1 << (v % 64);
        }
        BallCover {
            dm,
            n,
            words,
            k,
            balls,
            full,
            nodes: nodes_used,
            budget,
            memo: FxHashSet::default(),
            centers: vec![None; k],
            stack: vec![vec![0; words]; k + 2],
            gains: vec![0; n * k],
        }
    }

    #[inline]
    fn ball(&self, x: Vertex, rho: usize) -> &[u64] {
        let at = (x * self.k + rho) * self.words;
        &self.balls[at..at + self.words]
    }

    pub fn run(mut self) -> (Pass, u64) {
        let start = vec![0u64; self.words];
        let outcome = match self.dfs(&start, 0, 0) {
            Some(true) => Pass::Found(self.centers.clone()),
            Some(false) => Pass::Refuted,
            None => Pass::OutOfBudget,
        };
        (outcome, self.nodes)
    }

    /// `None` when the node budget runs out.
    fn dfs(&mut self, covered: &[u64], used: u64, depth: usize) -> Option<bool> {
        let words = self.words;
        let uncovered_count: u32 = covered
            .iter()
            .zip(&self.full)
            .map(|(c, f)| (f & !c).count_ones())
            .sum();
        if uncovered_count == 0 {
            return Some(true);
        }
        if used.count_ones() as usize == self.k {
            return Some(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }

        let mut key: Option<Box<[u64]>> = None;
        if depth > 0 {
            let mut kv = Vec::with_capacity(words + 1);
            kv.extend_from_slice(covered);
            kv.push(used);
            let kv = kv.into_boxed_slice();
            if self.memo.contains(&kv) {
                return Some(false);
            }
            key = Some(kv);
        }

        // gains[x * k + rho] = |N_rho[x] \ covered| for every free radius
        let free: Vec<usize> = (0..self.k)
            .rev()
            .filter(|&r| used & (1 << r) == 0)
            .collect();
        let mut bound = 0u32;
        for &rho in &free {
            let mut best = 0;
            for x in 0..self.n {
                let c: u32 = self
                    .ball(x, rho)
                    .iter()
                    .zip(covered)
                    .map(|(b, c)| (b & !c).count_ones())
                    .sum();
                self.gains[x * self.k + rho] = c;
                best = best.max(c);
            }
            bound += best;
        }
        if bound < uncovered_count {
            self.remember(key);
            return Some(false);
        }

        // Branch vertex: uncovered, with the fewest uncovered vertices nearby.
        let mut pick = usize::MAX;
        let mut pick_score = u32::MAX;
        for v in 0..self.n {
            if covered[v / 64] >> (v % 64) & 1 == 1 {
                continue;
            }
            let s: u32 = free.iter().map(|&r| self.gains[v * self.k + r]).sum();
            if s < pick_score {
                pick_score = s;
                pick = v;
            }
        }
        let v = pick;

        // gains are clobbered by the recursion, so rank every branch up front
        let branches: Vec<(usize, Vec<Vertex>)> = free
            .iter()
            .map(|&rho| (rho, self.candidates(v, rho, covered)))
            .collect();
        let mut next = std::mem::take(&mut self.stack[depth + 1]);
        let mut found = Some(false);
        'radii: for (rho, cands) in branches {
            for x in cands {
                let ball = self.ball(x, rho);
                for w in 0..words {
                    next[w] = covered[w] | ball[w];
                }
                self.centers[rho] = Some(x);
                match self.dfs(&next, used | (1 << rho), depth + 1) {
                    Some(true) => {
                        found = Some(true);
                        break 'radii;
                    }
                    Some(false) => {}
                    None => {
                        found = None;
                        break 'radii;
                    }
                }
                self.centers[rho] = None;
            }
        }
        self.stack[depth + 1] = next;
        if found == Some(false) {
            self.remember(key);
        }
        found
    }

    fn remember(&mut self, key: Option<Box<[u64]>>) {
        if let Some(k) = key {
            if self.memo.len() < MEMO_CAP {
                self.memo.insert(k);
            }
        }
    }

    /// Centers within `rho` of `v` whose uncovered gain is not strictly
    /// contained in another's (equal gains keep the smallest id), largest gain first.
    fn candidates(&self, v: Vertex, rho: usize, covered: &[u64]) -> Vec<Vertex> {
        let row = self.dm.row(v);
        let mut cands: Vec<(Vertex, Vec<u64>)> = (0..self.n)
            .filter(|&x| row[x] != DistanceMatrix::UNREACHABLE && row[x] as usize <= rho)
            .map(|x| {
                let gain = self
                    .ball(x, rho)
                    .iter()
                    .zip(covered)
                    .map(|(b, c)| b & !c)
                    .collect();
                (x, gain)
            })
            .collect();
        let subset = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & !y == 0);
        let keep: Vec<bool> = (0..cands.len())
            .map(|i| {
                !(0..cands.len()).any(|j| {
                    j != i
                        && subset(&cands[i].1, &cands[j].1)
                        && (!subset(&cands[j].1, &cands[i].1) || j < i)
                })
            })
            .collect();
        let mut out: Vec<(u32, Vertex)> = cands
            .drain(..)
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|((x, _), _)| (self.gains[x * self.k + rho], x))
            .collect();
        out.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        out.into_iter().map(|(_, x)| x).collect()
    }
}

/// Turns ball centers (indexed by radius) into a burning sequence of length at
/// most `k` by simulating the process: at round `j` the ball of radius `k - j`
/// is lit at its center if that vertex is still unburned, otherwise at the
/// smallest unburned vertex.
pub(crate) fn repair(dm: &DistanceMatrix, k: usize, centers: &[Option<Vertex>]) -> Vec<Vertex> {
    let n = dm.order();
    // earliest round each vertex catches fire, given the sources so far
    let mut lit = vec![usize::MAX; n];
    let mut seq = Vec::with_capacity(k);
    for round in 1..=k {
        let unburned = |v: Vertex| lit[v] >= round;
        let choice = centers[k - round]
            .filter(|&c| unburned(c))
            .or_else(|| (0..n).find(|&v| unburned(v)));
        let Some(x) = choice else { break };
        seq.push(x);
        for (v, &d) in dm.row(x).iter().enumerate() {
            if d != DistanceMatrix::UNREACHABLE {
                lit[v] = lit[v].min(round + d as usize);
            }
        }
    }
    seq
}

impl BallCover<'_> {
    /// One greedy descent: cover the most constrained vertex with the largest
    /// free ball at its best-gain center, never backtracking.
    pub fn greedy(mut self) -> Option<Vec<Option<Vertex>>> {
        let mut covered = vec![0u64; self.words];
        let mut used = 0u64;
        loop {
            let uncovered: u32 = covered
                .iter()
                .zip(&self.full)
                .map(|(c, f)| (f & !c).count_ones())
                .sum();
            if uncovered == 0 {
                return Some(self.centers);
            }
            let rho = (0..self.k).rev().find(|&r| used & (1 << r) == 0)?;
            for x in 0..self.n {
                for r in 0..self.k {
                    self.gains[x * self.k + r] = self
                        .ball(x, r)
                        .iter()
                        .zip(&covered)
                        .map(|(b, c)| (b & !c).count_ones())
                        .sum();
                }
            }
            let v = (0..self.n)
                .filter(|&v| covered[v / 64] >> (v % 64) & 1 == 0)
                .min_by_key(|&v| self.gains[v * self.k + rho])?;
            let x = self.candidates(v, rho, &covered)[0];
            let ball = self.ball(x, rho).to_vec();
            for (c, b) in covered.iter_mut().zip(ball) {
                *c |= b;
            }
            used |= 1 << rho;
            self.centers[rho] = Some(x);
        }
    }
}
