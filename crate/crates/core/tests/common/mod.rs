//! Test-only oracles that share no code with the solver.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

/// Plain adjacency lists, built independently of `burnkit::Graph`.
pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

pub fn distances_from(adj: &[Vec<usize>], s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Burning number by simulating the process itself: each round the fire
/// spreads to neighbours, then one unburned vertex may be lit. Breadth-first
/// over the set of reachable burned sets, so the first round in which the
/// full set appears is optimal. Only for `n <= 20`.
pub fn brute_force_burning_number(n: usize, edges: &[(usize, usize)]) -> usize {
    assert!((1..=20).contains(&n));
    let adj = adjacency(n, edges);
    let nbr: Vec<u32> = adj
        .iter()
        .map(|ws| ws.iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let full: u32 = (1 << n) - 1;
    let spread = |s: u32| {
        (0..n)
            .filter(|&v| s & (1 << v) != 0)
            .fold(s, |acc, v| acc | nbr[v])
    };
    let mut frontier: HashSet<u32> = HashSet::from([0]);
    for round in 1.. {
        let mut next = HashSet::new();
        for &s in &frontier {
            let s = spread(s);
            if s == full {
                return round;
            }
            for v in (0..n).filter(|&v| s & (1 << v) == 0) {
                let t = s | 1 << v;
                if t == full {
                    return round;
                }
                next.insert(t);
            }
        }
        frontier = next;
    }
    unreachable!()
}

/// Edge list of a spec's graph, read back through the text format so the
/// oracle never touches the library's adjacency.
pub fn edges_of(g: &burnkit::Graph) -> (usize, Vec<(usize, usize)>) {
    let text = g.to_text();
    let mut lines = text.lines();
    let n: usize = lines
        .next()
        .unwrap()
        .split_whitespace()
        .next()
        .unwrap()
        .parse()
        .unwrap();
    let edges = lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace().map(|x| x.parse::<usize>().unwrap());
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    (n, edges)
}
