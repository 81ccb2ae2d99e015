//! Graph constructors for the supported families and exhaustive parameter sweeps.
//!
//! Text grammar, accepted wherever a family is given on the command line:
//!
//! ```text
//! path:n | cycle:g | forest:a1,a2,... | star:l1,l2,... | uni:g;a1,a2,...
//! ```
//!
//! Vertex numbering is fixed so certificates are comparable between runs:
//! paths and forests are numbered left to right, part after part; a star has
//! its center at 0 followed by each arm in distance order; `uni:g;...` puts
//! the cycle on `0..g` (the attachment vertex is `g - 1`) and then each arm
//! in distance order from the cycle.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognize::FamilyDescriptor;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Forest(Vec<usize>),
    Star(Vec<usize>),
    Uni { g: usize, arms: Vec<usize> },
}

impl FamilySpec {
    pub fn path(n: usize) -> Result<Self> {
        Self::validated(FamilySpec::Path(n))
    }

    pub fn cycle(g: usize) -> Result<Self> {
        Self::validated(FamilySpec::Cycle(g))
    }

    pub fn forest(parts: &[usize]) -> Result<Self> {
        Self::validated(FamilySpec::Forest(parts.to_vec()))
    }

    pub fn star(arms: &[usize]) -> Result<Self> {
        Self::validated(FamilySpec::Star(arms.to_vec()))
    }

    pub fn uni(g: usize, arms: &[usize]) -> Result<Self> {
        Self::validated(FamilySpec::Uni {
            g,
            arms: arms.to_vec(),
        })
    }

    /// Checks parameter ranges and sorts arm/part lists descending.
    fn validated(mut self) -> Result<Self> {
        let text = self.to_string();
        let bad = |msg: &str| {
            Err(Error::Spec {
                spec: text.clone(),
                msg: msg.to_string(),
            })
        };
        match &mut self {
            FamilySpec::Path(n) if *n < 1 => return bad("path needs n >= 1"),
            FamilySpec::Cycle(g) if *g < 3 => return bad("cycle needs g >= 3"),
            FamilySpec::Forest(parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    return bad("forest parts must be >= 1");
                }
                parts.sort_unstable_by(|a, b| b.cmp(a));
            }
            FamilySpec::Star(arms) => {
                if arms.len() < 3 {
                    return bad("star needs at least 3 arms");
                }
                if arms.contains(&0) {
                    return bad("star arms must be >= 1");
                }
                arms.sort_unstable_by(|a, b| b.cmp(a));
            }
            FamilySpec::Uni { g, arms } => {
                if *g < 3 {
                    return bad("cycle length g must be >= 3");
                }
                if arms.is_empty() || arms.contains(&0) {
                    return bad("need at least one arm, each >= 1");
                }
                arms.sort_unstable_by(|a, b| b.cmp(a));
            }
            _ => {}
        }
        Ok(self)
    }

    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) => *n,
            FamilySpec::Forest(p) => p.iter().sum(),
            FamilySpec::Star(a) => 1 + a.iter().sum::<usize>(),
            FamilySpec::Uni { g, arms } => g + arms.iter().sum::<usize>(),
        }
    }

    /// The descriptor [`crate::recognize_family`] should report for the built graph.
    pub fn descriptor(&self) -> FamilyDescriptor {
        match self {
            FamilySpec::Path(n) => FamilyDescriptor::Path { n: *n },
            FamilySpec::Cycle(g) => FamilyDescriptor::Cycle { g: *g },
            FamilySpec::Forest(p) if p.len() == 1 => FamilyDescriptor::Path { n: p[0] },
            FamilySpec::Forest(p) => FamilyDescriptor::LinearForest { parts: p.clone() },
            FamilySpec::Star(a) => FamilyDescriptor::GeneralizedStar { arms: a.clone() },
            FamilySpec::Uni { g, arms } => FamilyDescriptor::TUnicyclic {
                g: *g,
                arms: arms.clone(),
            },
        }
    }

    pub fn build(&self) -> Graph {
        let mut b = Builder::new(self.order());
        match self {
            FamilySpec::Path(n) => {
                b.chain(None, *n);
            }
            FamilySpec::Cycle(g) => {
                let first = b.next;
                let last = b.chain(None, *g);
                b.edge(last, first);
            }
            FamilySpec::Forest(parts) => {
                for &p in parts {
                    b.chain(None, p);
                }
            }
            FamilySpec::Star(arms) => {
                let center = b.chain(None, 1);
                for &a in arms {
                    b.chain(Some(center), a);
                }
            }
            FamilySpec::Uni { g, arms } => {
                let hub = b.chain(None, *g);
                b.edge(hub, 0);
                for &a in arms {
                    b.chain(Some(hub), a);
                }
            }
        }
        b.graph
    }
}

struct Builder {
    graph: Graph,
    next: usize,
}

impl Builder {
    fn new(order: usize) -> Self {
        Builder {
            graph: Graph::empty(order),
            next: 0,
        }
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.graph
            .add_edge(u, v)
            .expect("family builder emits simple graphs");
    }

    /// Appends a path of `len` fresh vertices, optionally joined to `anchor`.
    /// Returns the last vertex added.
    fn chain(&mut self, anchor: Option<usize>, len: usize) -> usize {
        let mut prev = anchor;
        for _ in 0..len {
            let v = self.next;
            self.next += 1;
            if let Some(p) = prev {
                self.edge(p, v);
            }
            prev = Some(v);
        }
        prev.expect("chain length >= 1")
    }
}

fn list(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(g) => write!(f, "cycle:{g}"),
            FamilySpec::Forest(p) => write!(f, "forest:{}", list(p)),
            FamilySpec::Star(a) => write!(f, "star:{}", list(a)),
            FamilySpec::Uni { g, arms } => write!(f, "uni:{g};{}", list(arms)),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: &str| Error::Spec {
            spec: s.to_string(),
            msg: msg.to_string(),
        };
        let int = |tok: &str| -> Result<usize> {
            tok.trim()
                .parse()
                .map_err(|_| err(&format!("not a nonnegative integer: {tok:?}")))
        };
        let ints = |body: &str| -> Result<Vec<usize>> { body.split(',').map(int).collect() };

        let (kind, body) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| err("expected kind:params"))?;
        match kind.trim() {
            "path" => FamilySpec::path(int(body)?),
            "cycle" => FamilySpec::cycle(int(body)?),
            "forest" => FamilySpec::forest(&ints(body)?),
            "star" => FamilySpec::star(&ints(body)?),
            "uni" => {
                let (g, arms) = body
                    .split_once(';')
                    .ok_or_else(|| err("expected uni:g;a1,a2,..."))?;
                FamilySpec::uni(int(g)?, &ints(arms)?)
            }
            other => Err(err(&format!("unknown family {other:?}"))),
        }
    }
}

/// Parameter families that can be swept exhaustively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepClass {
    Path,
    Cycle,
    Forest2,
    Forest3,
    Uni1,
    Uni2,
}

impl SweepClass {
    pub const ALL: [SweepClass; 6] = [
        SweepClass::Path,
        SweepClass::Cycle,
        SweepClass::Forest2,
        SweepClass::Forest3,
        SweepClass::Uni1,
        SweepClass::Uni2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SweepClass::Path => "path",
            SweepClass::Cycle => "cycle",
            SweepClass::Forest2 => "forest2",
            SweepClass::Forest3 => "forest3",
            SweepClass::Uni1 => "uni1",
            SweepClass::Uni2 => "uni2",
        }
    }

    /// Order of the smallest instance in the class.
    pub fn min_order(self) -> usize {
        match self {
            SweepClass::Path => 1,
            SweepClass::Cycle => 3,
            SweepClass::Forest2 => 2,
            SweepClass::Forest3 => 3,
            SweepClass::Uni1 => 4,
            SweepClass::Uni2 => 5,
        }
    }
}

impl fmt::Display for SweepClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SweepClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::param(format!("unknown sweep class {s:?}")))
    }
}

/// Every canonical instance of `class` with order at most `max_n`, sorted
/// lexicographically by `(n, g, a1, a2, ...)`.
pub fn enumerate_sweep(class: SweepClass, max_n: usize) -> Result<Vec<FamilySpec>> {
    if max_n < class.min_order() {
        return Err(Error::param(format!(
            "{class} sweeps need max_n >= {}, got {max_n}",
            class.min_order()
        )));
    }
    let mut out = Vec::new();
    for n in class.min_order()..=max_n {
        match class {
            SweepClass::Path => out.push(FamilySpec::Path(n)),
            SweepClass::Cycle => out.push(FamilySpec::Cycle(n)),
            SweepClass::Forest2 => {
                for a1 in n.div_ceil(2)..n {
                    out.push(FamilySpec::Forest(vec![a1, n - a1]));
                }
            }
            SweepClass::Forest3 => {
                for a1 in n.div_ceil(3)..=n - 2 {
                    for a2 in (n - a1).div_ceil(2)..=a1.min(n - a1 - 1) {
                        out.push(FamilySpec::Forest(vec![a1, a2, n - a1 - a2]));
                    }
                }
            }
            SweepClass::Uni1 => {
                for g in 3..n {
                    out.push(FamilySpec::Uni {
                        g,
                        arms: vec![n - g],
                    });
                }
            }
            SweepClass::Uni2 => {
                for g in 3..=n - 2 {
                    let rest = n - g;
                    for a1 in rest.div_ceil(2)..rest {
                        out.push(FamilySpec::Uni {
                            g,
                            arms: vec![a1, rest - a1],
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}
