use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, Vertex};
use crate::result::BurningSequence;

use super::verify::verify_sequence;

/// One rooted tree of a partition: its root, its vertices (sorted) and the
/// tree edges as `(child, parent)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreePart {
    pub root: Vertex,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
    pub height: usize,
}

/// Parts listed in sequence order; part `i` (0-based) has height at most `k - 1 - i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootedTreePartition {
    pub parts: Vec<TreePart>,
}

/// Splits the vertex set into the trees burned by each source.
///
/// Each vertex goes to the source whose fire reaches it first (round
/// `i + d(x_i, v)`); on a tie the later source wins, which keeps every root
/// inside its own part. Each part is then spanned by a BFS tree from its root.
pub fn extract_partition(g: &Graph, seq: &BurningSequence) -> Result<RootedTreePartition> {
    if !verify_sequence(g, seq)? {
        return Err(Error::InvalidSequence(
            "not a burning sequence of this graph".into(),
        ));
    }
    let src = seq.sources();
    let k = src.len();
    let dm = DistanceMatrix::new(g);

    let owner: Vec<usize> = (0..g.order())
        .map(|v| {
            (0..k)
                .filter(|&i| dm.get(src[i], v) != DistanceMatrix::UNREACHABLE)
                .min_by_key(|&i| (i + dm.get(src[i], v) as usize, std::cmp::Reverse(i)))
                .expect("covered vertex has a reachable source")
        })
        .collect();

    let mut parts = Vec::with_capacity(k);
    let mut depth = vec![usize::MAX; g.order()];
    for (i, &root) in src.iter().enumerate() {
        let mut vertices = vec![root];
        let mut edges = Vec::new();
        let mut height = 0;
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if owner[w] == i && depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    height = height.max(depth[w]);
                    vertices.push(w);
                    edges.push((w, u));
                    queue.push_back(w);
                }
            }
        }
        vertices.sort_unstable();
        parts.push(TreePart {
            root,
            vertices,
            edges,
            height,
        });
    }
    Ok(RootedTreePartition { parts })
}

/// Checks that `p` is a rooted tree partition witnessing a `k`-round burning:
/// the parts cover every vertex once, each part is a tree of graph edges
/// spanning its vertices with height at most `k - 1 - i`, and roots of parts
/// `i` and `j` are at distance at least `|i - j|`.
pub fn check_partition(g: &Graph, p: &RootedTreePartition) -> std::result::Result<(), String> {
    let k = p.parts.len();
    let mut seen = vec![false; g.order()];
    for (i, part) in p.parts.iter().enumerate() {
        for &v in &part.vertices {
            if v >= g.order() || std::mem::replace(&mut seen[v], true) {
                return Err(format!("vertex {v} repeated or out of range"));
            }
        }
        if part.vertices.binary_search(&part.root).is_err() {
            return Err(format!("part {i} misses its root"));
        }
        if part.edges.len() + 1 != part.vertices.len() {
            return Err(format!("part {i} is not a tree"));
        }
        // every non-root vertex has exactly one parent edge leading back to the root
        let mut level = vec![None; g.order()];
        level[part.root] = Some(0usize);
        let mut pending: Vec<_> = part.edges.clone();
        while !pending.is_empty() {
            let before = pending.len();
            pending.retain(|&(c, par)| match level[par] {
                Some(l) if g.has_edge(c, par) && level[c].is_none() => {
                    level[c] = Some(l + 1);
                    false
                }
                _ => true,
            });
            if pending.len() == before {
                return Err(format!("part {i} has edges not hanging off its root"));
            }
        }
        for &v in &part.vertices {
            match level[v] {
                Some(l) if l <= k - 1 - i => {}
                Some(l) => {
                    return Err(format!("part {i}: vertex {v} at depth {l} > {}", k - 1 - i))
                }
                None => return Err(format!("part {i}: vertex {v} not spanned")),
            }
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(format!("vertex {v} in no part"));
    }
    let dm = DistanceMatrix::new(g);
    for i in 0..k {
        for j in i + 1..k {
            let d = dm.get(p.parts[i].root, p.parts[j].root);
            if d != DistanceMatrix::UNREACHABLE && (d as usize) < j - i {
                return Err(format!("roots {i} and {j} at distance {d}"));
            }
        }
    }
    Ok(())
}
