//! Simple undirected graphs, hop distances and the edge-list text format.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    InvalidVertex { vertex: Vertex, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Undirected simple graph on vertices `0..order`, stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); order],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeats and bad ids.
    pub fn from_edges(order: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(())
            }
        }
    }

    /// Copy of the graph with edge `u-v` removed. Returns `None` if the edge is absent.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Option<Graph> {
        if !self.has_edge(u, v) {
            return None;
        }
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        g.edge_count -= 1;
        Some(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && v < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Connected components as vertex lists, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Hop distances from `source`.
    pub fn bfs_distances(&self, source: Vertex) -> Result<DistanceTable, GraphError> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(DistanceTable { source, dist })
    }

    /// `N_radius[center]`: every vertex within `radius` hops, sorted ascending.
    pub fn closed_ball(&self, center: Vertex, radius: usize) -> Result<Vec<Vertex>, GraphError> {
        let table = self.bfs_distances(center)?;
        Ok((0..self.order())
            .filter(|&v| table.get(v).is_some_and(|d| d <= radius))
            .collect())
    }

    /// Serializes to the edge-list text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.order(), self.size());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses `n m` followed by `m` lines of `u v`. Blank lines and `#` comments are skipped.
impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let parse_pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
            let mut it = l.split_whitespace();
            let mut next = || -> Result<usize, GraphError> {
                let tok = it.next().ok_or_else(|| GraphError::Parse {
                    line,
                    msg: "expected two integers".into(),
                })?;
                tok.parse().map_err(|_| GraphError::Parse {
                    line,
                    msg: format!("not a nonnegative integer: {tok:?}"),
                })
            };
            let pair = (next()?, next()?);
            if it.next().is_some() {
                return Err(GraphError::Parse {
                    line,
                    msg: "trailing tokens".into(),
                });
            }
            Ok(pair)
        };

        let (line, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            msg: "missing header".into(),
        })?;
        let (n, m) = parse_pair(line, header)?;
        let mut g = Graph::empty(n);
        let mut read = 0;
        for (line, l) in lines {
            if read == m {
                return Err(GraphError::Parse {
                    line,
                    msg: format!("more than the declared {m} edges"),
                });
            }
            let (u, v) = parse_pair(line, l)?;
            g.add_edge(u, v).map_err(|e| GraphError::Parse {
                line,
                msg: e.to_string(),
            })?;
            read += 1;
        }
        if read != m {
            return Err(GraphError::Parse {
                line: text.lines().count(),
                msg: format!("declared {m} edges, found {read}"),
            });
        }
        Ok(g)
    }
}

/// Hop distances from a single source; `None` marks unreachable vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    pub source: Vertex,
    pub dist: Vec<Option<usize>>,
}

impl DistanceTable {
    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.dist[v]
    }

    /// Largest finite distance.
    pub fn eccentricity(&self) -> usize {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// All-pairs hop distances, row-major, with `u32::MAX` for unreachable pairs.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut d = vec![Self::UNREACHABLE; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &w in g.neighbors(u) {
                    if row[w] == Self::UNREACHABLE {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Largest finite distance between any pair.
    pub fn diameter(&self) -> u32 {
        self.d
            .iter()
            .copied()
            .filter(|&x| x != Self::UNREACHABLE)
            .max()
            .unwrap_or(0)
    }
}
