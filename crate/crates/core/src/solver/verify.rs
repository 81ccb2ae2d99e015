use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::result::BurningSequence;

/// Why a sequence fails to burn the graph. Indices are 0-based positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Sources `i < j` are closer than `j - i`.
    TooClose { i: usize, j: usize, distance: usize },
    /// Vertices outside every source's ball after the last round.
    Uncovered(Vec<Vertex>),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooClose { i, j, distance } => write!(
                f,
                "sources at positions {i} and {j} are {distance} apart; they need at least {}",
                j - i
            ),
            Violation::Uncovered(vs) => {
                let vs: Vec<_> = vs.iter().map(|v| v.to_string()).collect();
                write!(f, "vertices {{{}}} never burn", vs.join(","))
            }
        }
    }
}

/// Checks both burning conditions and reports the first failure.
///
/// Pairs in different components are never too close. Repeated or out-of-range
/// vertices are an input error rather than a failed check.
pub fn check_sequence(g: &Graph, seq: &BurningSequence) -> Result<Option<Violation>> {
    let src = seq.sources();
    if src.is_empty() {
        return Err(Error::InvalidSequence("empty sequence".into()));
    }
    let mut seen = vec![false; g.order()];
    for &x in src {
        g.check_vertex(x)?;
        if std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidSequence(format!("vertex {x} repeated")));
        }
    }

    let k = src.len();
    let tables: Vec<_> = src
        .iter()
        .map(|&x| g.bfs_distances(x))
        .collect::<std::result::Result<_, _>>()?;

    for (i, ti) in tables.iter().enumerate() {
        for (j, &xj) in src.iter().enumerate().skip(i + 1) {
            if let Some(d) = ti.get(xj) {
                if d < j - i {
                    return Ok(Some(Violation::TooClose { i, j, distance: d }));
                }
            }
        }
    }

    // source at position i (0-based) reaches radius k - 1 - i
    let uncovered: Vec<_> = (0..g.order())
        .filter(|&v| {
            !tables
                .iter()
                .enumerate()
                .any(|(i, t)| t.get(v).is_some_and(|d| d < k - i))
        })
        .collect();
    if uncovered.is_empty() {
        Ok(None)
    } else {
        Ok(Some(Violation::Uncovered(uncovered)))
    }
}

/// True iff `seq` is a burning sequence of `g`.
pub fn verify_sequence(g: &Graph, seq: &BurningSequence) -> Result<bool> {
    check_sequence(g, seq).map(|v| v.is_none())
}
