//! Constant-time burning numbers for paths, cycles and linear forests with at
//! most three components, plus generic bounds.

use crate::arith::{ceil_sqrt, is_perfect_square};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Literal sets used by the three-path exception families.
pub mod catalog {
    pub const D1: [(usize, usize); 1] = [(2, 2)];
    pub const D2: [(usize, usize); 1] = [(3, 2)];
    pub const D3: [(usize, usize); 4] = [(1, 1), (3, 3), (4, 2), (5, 5)];
    pub const D4: [(usize, usize); 12] = [
        (2, 1),
        (4, 1),
        (4, 3),
        (4, 4),
        (6, 1),
        (6, 4),
        (6, 5),
        (6, 6),
        (7, 7),
        (8, 4),
        (8, 6),
        (10, 4),
    ];

    /// The extra member of the third family.
    pub const J3_EXTRA: (usize, usize, usize) = (11, 11, 2);

    pub const J5: [(usize, usize, usize); 23] = [
        (13, 11, 1),
        (11, 11, 3),
        (22, 13, 1),
        (19, 13, 4),
        (17, 13, 6),
        (15, 13, 8),
        (13, 13, 10),
        (17, 15, 4),
        (15, 15, 6),
        (30, 15, 4),
        (28, 15, 6),
        (26, 15, 8),
        (19, 15, 15),
        (28, 17, 4),
        (26, 17, 6),
        (17, 17, 15),
        (26, 19, 4),
        (43, 17, 4),
        (41, 17, 6),
        (30, 17, 17),
        (41, 19, 4),
        (30, 30, 4),
        (58, 19, 4),
    ];
}

use catalog::*;

fn positive(parts: &[usize]) -> Result<()> {
    if parts.contains(&0) {
        Err(Error::param(format!(
            "path orders must be positive: {parts:?}"
        )))
    } else {
        Ok(())
    }
}

fn root_ceil(n: usize) -> usize {
    ceil_sqrt(n as u64) as usize
}

pub fn b_path(n: usize) -> Result<usize> {
    positive(&[n])?;
    Ok(root_ceil(n))
}

pub fn b_cycle(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::param(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(root_ceil(n))
}

/// Whether `(a1, a2)`, with `a1 >= a2`, is `(t^2 - 2, 2)` for some `t >= 2`.
pub fn in_two_path_exceptions(a1: usize, a2: usize) -> bool {
    a2 == 2 && a1 >= 2 && is_perfect_square(a1 as u64 + 2)
}

/// Burning number of `P_a1 + P_a2`; argument order does not matter.
pub fn b_two_paths(a1: usize, a2: usize) -> Result<usize> {
    positive(&[a1, a2])?;
    let (a1, a2) = (a1.max(a2), a1.min(a2));
    let base = root_ceil(a1 + a2);
    Ok(if in_two_path_exceptions(a1, a2) {
        base + 1
    } else {
        base
    })
}

/// Which of the five three-path exception families contain a triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreePathMembership {
    pub j1: bool,
    pub j2: bool,
    pub j3: bool,
    pub j4: bool,
    pub j5: bool,
}

impl ThreePathMembership {
    pub fn any(&self) -> bool {
        self.j1 || self.j2 || self.j3 || self.j4 || self.j5
    }
}

fn sort3(a: usize, b: usize, c: usize) -> (usize, usize, usize) {
    let mut v = [a, b, c];
    v.sort_unstable_by(|x, y| y.cmp(x));
    (v[0], v[1], v[2])
}

/// Exception-family membership of a triple; normalized descending first.
pub fn three_path_membership(a1: usize, a2: usize, a3: usize) -> ThreePathMembership {
    let (a1, a2, a3) = sort3(a1, a2, a3);
    let tail = (a2, a3);
    let sum = (a1 + a2 + a3) as u64;
    let in_d = |sets: &[&[(usize, usize)]]| sets.iter().any(|s| s.contains(&tail));
    let square_at = |offset: u64| is_perfect_square(sum + offset);
    ThreePathMembership {
        j1: in_d(&[&D1]) && square_at(3),
        j2: in_d(&[&D1, &D2]) && square_at(2),
        j3: (in_d(&[&D1, &D2, &D3]) && square_at(1)) || (a1, a2, a3) == J3_EXTRA,
        j4: (a3 == 2 || in_d(&[&D1, &D2, &D3, &D4])) && square_at(0),
        j5: J5.contains(&(a1, a2, a3)),
    }
}

/// Burning number of `P_a1 + P_a2 + P_a3`; argument order does not matter.
pub fn b_three_paths(a1: usize, a2: usize, a3: usize) -> Result<usize> {
    positive(&[a1, a2, a3])?;
    let base = root_ceil(a1 + a2 + a3);
    Ok(if three_path_membership(a1, a2, a3).any() {
        base + 1
    } else {
        base
    })
}

/// Degree criterion: `Some(1)` for a single vertex, `Some(2)` exactly when
/// `n >= 2` and `n - 2 <= max degree`, otherwise `None`.
pub fn b2_by_degree(g: &Graph) -> Option<usize> {
    let n = g.order();
    match n {
        0 => None,
        1 => Some(1),
        _ if g.max_degree() + 2 >= n => Some(2),
        _ => None,
    }
}

/// `(ceil(sqrt(n + (t^2 + 4t)/4) - t/2), ceil(sqrt(n)))` for a t-unicyclic
/// graph of order `n`, in integer arithmetic.
///
/// The lower bound is the least `L` with `(2L + t)^2 >= 4n + t^2 + 4t`.
pub fn t_unicyclic_bounds(n: usize, t: usize) -> Result<(usize, usize)> {
    if n < 3 + t {
        return Err(Error::param(format!(
            "a {t}-unicyclic graph has at least {} vertices, got n = {n}",
            3 + t
        )));
    }
    let (n64, t64) = (n as u64, t as u64);
    let s = ceil_sqrt(4 * n64 + t64 * t64 + 4 * t64);
    let lower = (s - t64).div_ceil(2) as usize;
    Ok((lower, root_ceil(n)))
}

/// Upper bound `ceil(sqrt(n))` for a generalized star with the given arm lengths.
pub fn b_generalized_star_upper(arms: &[usize]) -> Result<usize> {
    if arms.len() < 3 {
        return Err(Error::param("generalized star needs at least 3 arms"));
    }
    positive(arms)?;
    Ok(root_ceil(1 + arms.iter().sum::<usize>()))
}
