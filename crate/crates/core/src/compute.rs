//! One entry point that picks a closed form when the graph's family has one
//! and falls back to the exact solver otherwise.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::ceil_sqrt;
use crate::closed_forms::{b2_by_degree, b_cycle, b_path, b_three_paths, b_two_paths};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognize::{qr_decompose, recognize_family, FamilyDescriptor, QrDecomposition};
use crate::result::{BurnResult, Method};
use crate::solver::burning_number_exact;
use crate::unicyclic::{b_unicyclic_t1, b_unicyclic_t2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Closed form or table when one applies, exact search otherwise.
    #[default]
    Auto,
    Exact,
    /// Closed form or table only; an error for other families.
    Formula,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "exact" => Ok(Strategy::Exact),
            "formula" => Ok(Strategy::Formula),
            _ => Err(Error::param(format!(
                "unknown method {s:?}; expected auto, exact or formula"
            ))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Auto => "auto",
            Strategy::Exact => "exact",
            Strategy::Formula => "formula",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Computation {
    pub family: FamilyDescriptor,
    /// Absent for the single-vertex graph.
    pub qr: Option<QrDecomposition>,
    pub result: BurnResult,
}

/// The closed-form or table value for `g`, if its family has one.
///
/// Table lookups that match no row fall back to the exact solver and are
/// flagged with [`BurnResult::table_gap`].
pub fn formula_value(g: &Graph, family: &FamilyDescriptor) -> Result<Option<BurnResult>> {
    let n = g.order();
    let root = ceil_sqrt(n as u64) as usize;
    let exact_form = |value, method| Some(BurnResult::formula(value, method, value, value));
    let result = match family {
        FamilyDescriptor::Path { n } => exact_form(b_path(*n)?, Method::FormulaPath),
        FamilyDescriptor::Cycle { g } => exact_form(b_cycle(*g)?, Method::FormulaCycle),
        FamilyDescriptor::LinearForest { parts } => match parts[..] {
            [a1, a2] => {
                let v = b_two_paths(a1, a2)?;
                Some(BurnResult::formula(
                    v,
                    Method::FormulaForest2,
                    root,
                    root + 1,
                ))
            }
            [a1, a2, a3] => {
                let v = b_three_paths(a1, a2, a3)?;
                Some(BurnResult::formula(
                    v,
                    Method::FormulaForest3,
                    root,
                    root + 1,
                ))
            }
            _ => None,
        },
        FamilyDescriptor::TUnicyclic { g, arms } => match arms[..] {
            [a] => Some(b_unicyclic_t1(*g, a)?),
            [a1, a2] => Some(b_unicyclic_t2(*g, a1, a2)?),
            _ => None,
        },
        FamilyDescriptor::GeneralizedStar { .. } | FamilyDescriptor::Other => {
            b2_by_degree(g).map(|v| BurnResult::formula(v, Method::DegreeB2, v, v))
        }
    };
    Ok(result)
}

/// Burning number of `g` by the requested strategy.
pub fn compute(g: &Graph, strategy: Strategy, budget: Option<u64>) -> Result<Computation> {
    if g.order() == 0 {
        return Err(Error::param("graph has no vertices"));
    }
    let family = recognize_family(g);
    let qr = qr_decompose(g.order() as u64).ok();
    let result = match strategy {
        Strategy::Exact => burning_number_exact(g, budget)?,
        Strategy::Formula => formula_value(g, &family)?.ok_or_else(|| {
            Error::param(format!(
                "no closed form for {} graphs of this shape",
                family.name()
            ))
        })?,
        Strategy::Auto => match formula_value(g, &family)? {
            Some(r) => r,
            None => burning_number_exact(g, budget)?,
        },
    };
    Ok(Computation { family, qr, result })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    fn run(spec: &str, strategy: Strategy) -> Result<Computation> {
        compute(&spec.parse::<FamilySpec>().unwrap().build(), strategy, None)
    }

    #[test]
    fn auto_picks_formulas() {
        let c = run("cycle:5", Strategy::Auto).unwrap();
        assert_eq!((c.result.value, c.result.method), (3, Method::FormulaCycle));
        let c = run("uni:7;4", Strategy::Auto).unwrap();
        assert_eq!((c.result.value, c.result.method), (4, Method::TableT1));
        assert_eq!(c.qr.map(|qr| (qr.q, qr.r)), Some((3, 2)));
        let c = run("forest:7,2", Strategy::Auto).unwrap();
        assert_eq!(
            (c.result.value, c.result.method),
            (4, Method::FormulaForest2)
        );
        let c = run("star:1,1,1,1", Strategy::Auto).unwrap();
        assert_eq!((c.result.value, c.result.method), (2, Method::DegreeB2));
    }

    #[test]
    fn auto_falls_back_to_exact() {
        let c = run("star:8,1,1", Strategy::Auto).unwrap();
        assert_eq!((c.result.value, c.result.method), (4, Method::Exact));
        let c = run("forest:2,2,2,2", Strategy::Auto).unwrap();
        assert_eq!(c.result.method, Method::Exact);
        assert!(run("star:8,1,1", Strategy::Formula).is_err());
    }

    #[test]
    fn exact_on_request() {
        let c = run("forest:3,2,1", Strategy::Exact).unwrap();
        assert_eq!((c.result.value, c.result.method), (3, Method::Exact));
        assert!(c.result.certificate.is_some());
    }

    #[test]
    fn single_vertex_has_no_qr() {
        let c = compute(&Graph::empty(1), Strategy::Auto, None).unwrap();
        assert_eq!(c.qr, None);
        assert_eq!(c.result.value, 1);
        assert!(compute(&Graph::empty(0), Strategy::Auto, None).is_err());
    }

    #[test]
    fn strategy_parsing() {
        for s in [Strategy::Auto, Strategy::Exact, Strategy::Formula] {
            assert_eq!(s.to_string().parse::<Strategy>().unwrap(), s);
        }
        assert!("fast".parse::<Strategy>().is_err());
    }
}
