//! Exhaustive comparison of closed forms and tables against the exact solver.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::compute::formula_value;
use crate::error::{Error, Result};
use crate::families::{enumerate_sweep, FamilySpec, SweepClass};
use crate::recognize::{qr_decompose, recognize_family};
use crate::result::Method;
use crate::solver::burning_number_exact;

/// One accepted discrepancy between a table and the exact solver.
///
/// Text form: `t g a1 [a2] table_value exact_value note`, where `t` is the
/// number of arms and the note runs to the end of the line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub g: usize,
    /// Descending.
    pub arms: Vec<usize>,
    pub table_value: usize,
    pub exact_value: usize,
    pub note: String,
}

impl Erratum {
    pub fn spec(&self) -> FamilySpec {
        FamilySpec::Uni {
            g: self.g,
            arms: self.arms.clone(),
        }
    }
}

impl FromStr for Erratum {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let bad = |msg: &str| Error::param(format!("erratum {line:?}: {msg}"));
        let mut words = line.split_whitespace();
        let mut number = |what: &str| -> Result<usize> {
            words
                .next()
                .ok_or_else(|| bad(&format!("missing {what}")))?
                .parse()
                .map_err(|_| bad(&format!("{what} is not a number")))
        };
        let t = number("t")?;
        if !(1..=2).contains(&t) {
            return Err(bad("t must be 1 or 2"));
        }
        let g = number("g")?;
        let mut arms = (0..t)
            .map(|_| number("arm length"))
            .collect::<Result<Vec<_>>>()?;
        let table_value = number("table value")?;
        let exact_value = number("exact value")?;
        let note = words.collect::<Vec<_>>().join(" ");
        arms.sort_unstable_by(|a, b| b.cmp(a));
        // validates ranges
        FamilySpec::uni(g, &arms)?;
        Ok(Erratum {
            g,
            arms,
            table_value,
            exact_value,
            note,
        })
    }
}

/// Parses an errata file; blank lines and `#` comments are skipped.
pub fn parse_errata(text: &str) -> Result<Vec<Erratum>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub spec: String,
    pub n: usize,
    pub q: Option<u64>,
    pub r: Option<u64>,
    /// Closed-form or table value.
    pub formula: usize,
    /// `None` when the solver ran out of budget.
    pub exact: Option<usize>,
    pub method: Method,
    pub agree: bool,
    /// The disagreement is listed in the errata.
    pub listed: bool,
    pub table_gap: bool,
}

impl SweepRow {
    pub fn inconclusive(&self) -> bool {
        self.exact.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub class: String,
    pub max_n: usize,
    pub instances: usize,
    pub mismatches: usize,
    /// Mismatches absent from the errata.
    pub unexplained: usize,
    pub inconclusive: usize,
    pub table_gaps: usize,
    /// Errata entries that matched no mismatching row.
    pub unused_errata: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
    /// Wall-clock time; excluded from serialized reports so they stay reproducible.
    #[serde(skip)]
    pub runtime: Duration,
}

#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    /// Per-instance search budget; see [`burning_number_exact`].
    pub budget: Option<u64>,
    pub errata: Vec<Erratum>,
}

fn run_instance(spec: &FamilySpec, budget: Option<u64>, errata: &[Erratum]) -> Result<SweepRow> {
    let g = spec.build();
    let family = recognize_family(&g);
    let formula = formula_value(&g, &family)?
        .ok_or_else(|| Error::param(format!("{spec} has no closed form")))?;
    let exact = match burning_number_exact(&g, budget) {
        Ok(r) => Some(r.value),
        Err(Error::Inconclusive { .. }) => None,
        Err(e) => return Err(e),
    };
    let qr = qr_decompose(g.order() as u64).ok();
    let agree = exact.is_none_or(|e| e == formula.value);
    let listed = !agree
        && errata.iter().any(|e| {
            e.spec() == *spec && e.table_value == formula.value && Some(e.exact_value) == exact
        });
    Ok(SweepRow {
        spec: spec.to_string(),
        n: g.order(),
        q: qr.map(|x| x.q),
        r: qr.map(|x| x.r),
        formula: formula.value,
        exact,
        method: formula.method,
        agree,
        listed,
        table_gap: formula.table_gap,
    })
}

/// Compares every instance of `class` up to order `max_n`. Rows come back in
/// enumeration order whatever the thread count.
pub fn run_sweep(class: SweepClass, max_n: usize, opts: &SweepOptions) -> Result<SweepReport> {
    let start = Instant::now();
    let specs = enumerate_sweep(class, max_n)?;
    let work = || -> Result<Vec<SweepRow>> {
        specs
            .par_iter()
            .map(|s| run_instance(s, opts.budget, &opts.errata))
            .collect()
    };
    let rows = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::param(format!("cannot start {j} workers: {e}")))?
            .install(work)?,
        None => work()?,
    };
    let mismatched: Vec<_> = rows.iter().filter(|r| !r.agree).collect();
    let unused_errata = opts
        .errata
        .iter()
        .filter(|e| {
            let spec = e.spec().to_string();
            !mismatched.iter().any(|r| r.listed && r.spec == spec)
        })
        .count();
    let summary = SweepSummary {
        class: class.to_string(),
        max_n,
        instances: rows.len(),
        mismatches: mismatched.len(),
        unexplained: mismatched.iter().filter(|r| !r.listed).count(),
        inconclusive: rows.iter().filter(|r| r.inconclusive()).count(),
        table_gaps: rows.iter().filter(|r| r.table_gap).count(),
        unused_errata,
    };
    Ok(SweepReport {
        rows,
        summary,
        runtime: start.elapsed(),
    })
}

impl SweepReport {
    /// Tab-separated rows with a header, followed by `#`-prefixed summary lines.
    pub fn to_tsv(&self) -> String {
        let mut out =
            String::from("spec\tn\tq\tr\tformula\texact\tmethod\tagree\tlisted\ttable_gap\n");
        let opt = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
        for r in &self.rows {
            let exact = r
                .exact
                .map_or("inconclusive".to_string(), |v| v.to_string());
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.spec,
                r.n,
                opt(r.q),
                opt(r.r),
                r.formula,
                exact,
                r.method,
                r.agree,
                r.listed,
                r.table_gap
            );
        }
        let s = &self.summary;
        let _ = writeln!(out, "# class {} max_n {}", s.class, s.max_n);
        let _ = writeln!(
            out,
            "# instances {} mismatches {} unexplained {} inconclusive {} table_gaps {} unused_errata {}",
            s.instances, s.mismatches, s.unexplained, s.inconclusive, s.table_gaps, s.unused_errata
        );
        out
    }
}
