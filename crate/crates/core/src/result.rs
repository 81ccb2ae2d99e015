use std::fmt;

use serde::Serialize;

use crate::graph::Vertex;

/// How a burning number was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    FormulaPath,
    FormulaCycle,
    FormulaForest2,
    FormulaForest3,
    TableT1,
    TableT2,
    DegreeB2,
    /// A table lookup matched no row and the exact solver answered instead.
    FallbackExact,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::FormulaPath => "formula-path",
            Method::FormulaCycle => "formula-cycle",
            Method::FormulaForest2 => "formula-forest2",
            Method::FormulaForest3 => "formula-forest3",
            Method::TableT1 => "table-t1",
            Method::TableT2 => "table-t2",
            Method::DegreeB2 => "degree-b2",
            Method::FallbackExact => "fallback-exact",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An ordered list of fire sources `(x_1, ..., x_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BurningSequence(pub Vec<Vertex>);

impl BurningSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sources(&self) -> &[Vertex] {
        &self.0
    }
}

impl fmt::Display for BurningSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<_> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BurnResult {
    pub value: usize,
    pub method: Method,
    pub certificate: Option<BurningSequence>,
    pub lower_bound: usize,
    pub upper_bound: usize,
    /// Set when the search exhausted every sequence of length `value - 1`.
    pub refuted_below: bool,
    /// Search nodes expanded; zero for closed forms.
    pub nodes: u64,
    /// Table lookups that matched no row.
    pub table_gap: bool,
}

impl BurnResult {
    pub(crate) fn formula(value: usize, method: Method, lower: usize, upper: usize) -> Self {
        BurnResult {
            value,
            method,
            certificate: None,
            lower_bound: lower,
            upper_bound: upper,
            refuted_below: false,
            nodes: 0,
            table_gap: false,
        }
    }
}
