//! Constant-time burning numbers of unicyclic graphs with one or two arms.
//!
//! Writing `n = q^2 + r` with `1 <= r <= 2q + 1`, every such graph burns in
//! `q` or `q + 1` rounds. Which one is decided by a handful of range
//! conditions on the cycle length and arm lengths plus a catalog of exception
//! triples, some parametric in `q` and some literal.

use crate::closed_forms::{b2_by_degree, t_unicyclic_bounds};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::recognize::{qr_decompose, QrDecomposition};
use crate::result::{BurnResult, Method};
use crate::solver::burning_number_exact;

/// `sq * q^2 + lin * q + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lin {
    sq: i64,
    lin: i64,
    c: i64,
}

impl Lin {
    pub fn at(self, q: i64) -> i64 {
        self.sq * q * q + self.lin * q + self.c
    }
}

/// `q^2 + c`
const fn s(c: i64) -> Lin {
    Lin { sq: 1, lin: 0, c }
}
/// `q^2 - q + c`
const fn sq_q(c: i64) -> Lin {
    Lin { sq: 1, lin: -1, c }
}
/// `m * q + c`
const fn l(m: i64, c: i64) -> Lin {
    Lin { sq: 0, lin: m, c }
}

pub type Triple = (usize, usize, usize);
type Param = (Lin, Lin, Lin);

/// Exception catalogs. Triples are `(g, a1, a2)`; pairs are `(g, a)`.
pub mod catalog {
    use super::*;

    pub const A: [(Lin, Lin); 2] = [(l(2, 1), sq_q(-2)), (s(-2), l(1, 1))];

    pub const B: [Param; 2] = [(l(2, -2), sq_q(-2), l(1, 1)), (l(2, -1), sq_q(-2), l(1, 1))];

    /// The last coordinate of each member is `r - q + 1`, supplied at lookup.
    pub const C1: [(Lin, Lin); 2] = [(l(2, 1), sq_q(-2)), (s(-2), l(1, 1))];

    pub const C2: [Param; 3] = [
        (s(-7), l(1, 2), l(1, 1)),
        (l(2, 1), sq_q(-6), l(1, 1)),
        (l(2, 1), sq_q(-7), l(1, 2)),
    ];

    pub const C3: [Param; 14] = [
        (s(-3), l(1, 0), l(1, 0)),
        (s(-5), l(1, 1), l(1, 1)),
        (s(-6), l(1, 2), l(1, 1)),
        (s(-7), l(1, 2), l(1, 2)),
        (s(-7), l(1, 3), l(1, 1)),
        (s(-11), l(1, 4), l(1, 4)),
        (l(2, 4), sq_q(-11), l(1, 4)),
        (l(2, 1), sq_q(-5), l(1, 1)),
        (l(2, 1), sq_q(-6), l(1, 2)),
        (l(2, 1), sq_q(-7), l(1, 3)),
        (l(2, 2), sq_q(-6), l(1, 1)),
        (l(2, 2), sq_q(-7), l(1, 2)),
        (l(2, 3), sq_q(-7), l(1, 1)),
        (l(2, 0), sq_q(-3), l(1, 0)),
    ];
    pub const C3_LITERAL: [Triple; 2] = [(22, 16, 7), (13, 16, 16)];

    pub const B1: [Param; 15] = [
        (s(-2), l(1, 0), l(1, 0)),
        (s(-6), l(1, 2), l(1, 2)),
        (s(-10), l(1, 4), l(1, 4)),
        (s(-3), l(1, 1), l(1, 0)),
        (s(-5), l(1, 3), l(1, 0)),
        (s(-7), l(1, 3), l(1, 2)),
        (s(-8), l(1, 3), l(1, 3)),
        (s(-7), l(1, 5), l(1, 0)),
        (s(-10), l(1, 5), l(1, 3)),
        (s(-11), l(1, 5), l(1, 4)),
        (s(-12), l(1, 5), l(1, 5)),
        (s(-14), l(1, 6), l(1, 6)),
        (s(-12), l(1, 7), l(1, 3)),
        (s(-14), l(1, 7), l(1, 5)),
        (s(-14), l(1, 9), l(1, 3)),
    ];

    pub const B2: [Param; 15] = [
        (l(2, 0), sq_q(-2), l(1, 0)),
        (l(2, 2), sq_q(-6), l(1, 2)),
        (l(2, 4), sq_q(-10), l(1, 4)),
        (l(2, 1), sq_q(-3), l(1, 0)),
        (l(2, 3), sq_q(-5), l(1, 0)),
        (l(2, 3), sq_q(-7), l(1, 2)),
        (l(2, 3), sq_q(-8), l(1, 3)),
        (l(2, 5), sq_q(-7), l(1, 0)),
        (l(2, 5), sq_q(-10), l(1, 3)),
        (l(2, 5), sq_q(-11), l(1, 4)),
        (l(2, 5), sq_q(-12), l(1, 5)),
        (l(2, 6), sq_q(-14), l(1, 6)),
        (l(2, 7), sq_q(-12), l(1, 3)),
        (l(2, 7), sq_q(-14), l(1, 5)),
        (l(2, 9), sq_q(-14), l(1, 3)),
    ];

    pub const B3: [Param; 9] = [
        (l(2, 0), sq_q(-3), l(1, 1)),
        (l(2, 0), sq_q(-5), l(1, 3)),
        (l(2, 2), sq_q(-7), l(1, 3)),
        (l(2, 0), sq_q(-7), l(1, 5)),
        (l(2, 3), sq_q(-10), l(1, 5)),
        (l(2, 4), sq_q(-11), l(1, 5)),
        (l(2, 3), sq_q(-12), l(1, 7)),
        (l(2, 5), sq_q(-14), l(1, 7)),
        (l(2, 3), sq_q(-14), l(1, 9)),
    ];

    pub const B4: [Triple; 23] = [
        (24, 16, 6),
        (22, 16, 8),
        (35, 19, 7),
        (32, 19, 10),
        (30, 19, 12),
        (28, 19, 14),
        (26, 19, 16),
        (30, 21, 10),
        (28, 21, 12),
        (45, 22, 11),
        (43, 22, 13),
        (41, 22, 15),
        (34, 22, 22),
        (43, 24, 11),
        (41, 24, 13),
        (32, 24, 22),
        (41, 26, 11),
        (60, 25, 12),
        (58, 25, 14),
        (47, 25, 25),
        (58, 27, 12),
        (47, 38, 12),
        (77, 28, 13),
    ];

    pub const B5: [Triple; 23] = [
        (22, 18, 6),
        (22, 16, 8),
        (26, 28, 7),
        (26, 25, 10),
        (26, 23, 12),
        (26, 21, 14),
        (26, 19, 16),
        (28, 23, 10),
        (28, 21, 12),
        (30, 37, 11),
        (30, 35, 13),
        (30, 33, 15),
        (30, 26, 22),
        (32, 35, 11),
        (32, 33, 13),
        (32, 24, 22),
        (34, 33, 11),
        (34, 51, 12),
        (34, 49, 14),
        (34, 38, 25),
        (36, 49, 12),
        (47, 38, 12),
        (38, 67, 13),
    ];

    pub const B6: [Triple; 23] = [
        (12, 18, 16),
        (14, 16, 16),
        (14, 28, 19),
        (17, 25, 19),
        (19, 23, 19),
        (21, 21, 19),
        (23, 19, 19),
        (17, 23, 21),
        (19, 21, 21),
        (19, 37, 22),
        (21, 35, 22),
        (23, 33, 22),
        (30, 26, 22),
        (19, 35, 24),
        (21, 33, 24),
        (30, 24, 24),
        (19, 33, 26),
        (21, 51, 25),
        (23, 49, 25),
        (34, 38, 25),
        (21, 49, 27),
        (21, 38, 38),
        (23, 67, 28),
    ];
}

use catalog::*;

fn pos(x: i64) -> Option<usize> {
    (x >= 1).then_some(x as usize)
}

fn eval(set: &[Param], q: i64) -> impl Iterator<Item = Triple> + '_ {
    set.iter().filter_map(move |(g, a1, a2)| {
        let (g, x, y) = (pos(g.at(q))?, pos(a1.at(q))?, pos(a2.at(q))?);
        // arms are interchangeable; small q can put the longer arm second
        Some((g, x.max(y), x.min(y)))
    })
}

/// Exception pairs `(g, a)` for one-arm graphs at the given `q`.
pub fn set_a(q: u64) -> Vec<(usize, usize)> {
    let q = q as i64;
    A.iter()
        .filter_map(|(g, a)| Some((pos(g.at(q))?, pos(a.at(q))?)))
        .collect()
}

pub fn set_b(q: u64) -> Vec<Triple> {
    eval(&B, q as i64).collect()
}

pub fn set_c1(q: u64, r: u64) -> Vec<Triple> {
    let (q, r) = (q as i64, r as i64);
    let Some(last) = pos(r - q + 1) else {
        return Vec::new();
    };
    C1.iter()
        .filter_map(|(g, a)| {
            let (g, a) = (pos(g.at(q))?, pos(a.at(q))?);
            Some((g, a.max(last), a.min(last)))
        })
        .collect()
}

pub fn set_c2(q: u64) -> Vec<Triple> {
    eval(&C2, q as i64).collect()
}

pub fn set_c3(q: u64) -> Vec<Triple> {
    eval(&C3, q as i64).chain(C3_LITERAL).collect()
}

/// Which exception sets hold a normalized two-arm triple.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ExceptionHits {
    pub b: bool,
    pub c: [bool; 6],
}

impl ExceptionHits {
    pub fn any_c(&self) -> bool {
        self.c.iter().any(|&x| x)
    }
}

pub fn t2_exceptions(g: usize, a1: usize, a2: usize) -> Result<ExceptionHits> {
    let (a1, a2) = (a1.max(a2), a1.min(a2));
    let QrDecomposition { n, q, r } = qr_decompose((g + a1 + a2) as u64)?;
    let t = (g, a1, a2);
    let qi = q as i64;
    let on_chain = n == q * q + 2 * q - 2 && a2 as u64 == q + 1;
    let (gq, a1i) = (g as i64 - qi, a1 as i64);
    let has = |set: &[Param]| eval(set, qi).any(|x| x == t);
    Ok(ExceptionHits {
        b: set_b(q).contains(&t),
        c: [
            set_c1(q, r).contains(&t),
            set_c2(q).contains(&t),
            set_c3(q).contains(&t),
            (on_chain && gq >= a1i) || has(&B1) || B4.contains(&t),
            (on_chain && a1i >= gq && gq >= a2 as i64) || has(&B2) || B5.contains(&t),
            (on_chain && gq == a2 as i64) || has(&B3) || B6.contains(&t),
        ],
    })
}

/// Which table rows fire for an instance. A well-formed table fires exactly one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowMatch {
    pub qr: QrDecomposition,
    /// A row assigning value `q`.
    pub q_row: bool,
    /// A row assigning value `q + 1`.
    pub q_plus_one_row: bool,
}

impl RowMatch {
    pub fn value(&self) -> Option<usize> {
        let q = self.qr.q as usize;
        if self.q_plus_one_row {
            Some(q + 1)
        } else if self.q_row {
            Some(q)
        } else {
            None
        }
    }
}

fn check_t1(g: usize, a: usize) -> Result<()> {
    if g < 3 || a < 1 {
        return Err(Error::param(format!(
            "need g >= 3 and a >= 1, got g={g} a={a}"
        )));
    }
    Ok(())
}

fn check_t2(g: usize, a1: usize, a2: usize) -> Result<()> {
    if g < 3 || a1.min(a2) < 1 {
        return Err(Error::param(format!(
            "need g >= 3 and arms >= 1, got g={g} arms={a1},{a2}"
        )));
    }
    Ok(())
}

/// One-arm table rows; `None` below order 6, where the degree criterion applies.
pub fn t1_rows(g: usize, a: usize) -> Result<Option<RowMatch>> {
    check_t1(g, a)?;
    let n = g + a;
    if n <= 5 {
        return Ok(None);
    }
    let qr = qr_decompose(n as u64)?;
    let (q, r, g64) = (qr.q, qr.r, g as u64);
    let in_a = set_a(q).contains(&(g, a));
    Ok(Some(RowMatch {
        qr,
        q_plus_one_row: (q <= r && r <= 2 * q + 1) || g64 > q * q || g64 <= 2 * r || in_a,
        q_row: (1..q).contains(&r) && 2 * r < g64 && g64 <= q * q && !in_a,
    }))
}

/// Two-arm table rows; `None` below order 7, where the degree criterion applies.
pub fn t2_rows(g: usize, a1: usize, a2: usize) -> Result<Option<RowMatch>> {
    check_t2(g, a1, a2)?;
    let (a1, a2) = (a1.max(a2), a1.min(a2));
    let n = g + a1 + a2;
    if n <= 6 {
        return Ok(None);
    }
    let qr = qr_decompose(n as u64)?;
    let hits = t2_exceptions(g, a1, a2)?;
    let (q, r) = (qr.q as i64, qr.r as i64);
    let (g, a1, a2) = (g as i64, a1 as i64, a2 as i64);
    let half = g / 2;
    let wide = 2 * q <= g && g <= q * q;
    let q_plus_one_row = r >= 2 * q - 1
        || (3 <= g && g <= r)
        || g > q * q
        || a1 >= q * q - half
        || (wide && a2 <= r - q)
        || hits.b
        || hits.any_c();
    let narrow = r < g && g < 2 * q;
    let q_row = (1 <= r && r <= 2 * q - 2)
        && ((narrow && a1 < q * q - half && !hits.b) || (wide && a2 > r - q && !hits.any_c()));
    Ok(Some(RowMatch {
        qr,
        q_row,
        q_plus_one_row,
    }))
}

fn table_result(
    value: Option<usize>,
    method: Method,
    n: usize,
    t: usize,
    spec: impl FnOnce() -> Result<FamilySpec>,
) -> Result<BurnResult> {
    let (lower, upper) = t_unicyclic_bounds(n, t)?;
    match value {
        Some(v) => Ok(BurnResult::formula(v, method, lower, upper)),
        None => {
            let mut r = burning_number_exact(&spec()?.build(), None)?;
            r.method = Method::FallbackExact;
            r.table_gap = true;
            Ok(r)
        }
    }
}

/// Burning number of the cycle `C_g` with one pendant path of `a` vertices.
pub fn b_unicyclic_t1(g: usize, a: usize) -> Result<BurnResult> {
    let spec = || FamilySpec::uni(g, &[a]);
    match t1_rows(g, a)? {
        Some(rows) => table_result(rows.value(), Method::TableT1, g + a, 1, spec),
        None => {
            let v = b2_by_degree(&spec()?.build());
            table_result(v, Method::DegreeB2, g + a, 1, spec)
        }
    }
}

/// Burning number of `C_g` with pendant paths of `a1` and `a2` vertices on one
/// cycle vertex; arm order does not matter.
pub fn b_unicyclic_t2(g: usize, a1: usize, a2: usize) -> Result<BurnResult> {
    let spec = || FamilySpec::uni(g, &[a1, a2]);
    match t2_rows(g, a1, a2)? {
        Some(rows) => table_result(rows.value(), Method::TableT2, g + a1 + a2, 2, spec),
        None => {
            let v = b2_by_degree(&spec()?.build());
            table_result(v, Method::DegreeB2, g + a1 + a2, 2, spec)
        }
    }
}
