//! Structured verdicts and their JSON, CSV and LaTeX renderings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactalg::{Coeff, LaurentPoly};
use crate::stringy::{
    log_discrepancies, stringy_affine_closed, stringy_euler, stringy_hodge, HodgeTable,
    StringyInput, Variety,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, details: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            details: details.into(),
        }
    }
}

/// A computed invariant (if any) together with the checks run against it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub title: String,
    pub polynomial: Option<LaurentPoly>,
    pub hodge: Option<HodgeTable>,
    pub euler: Option<Coeff>,
    pub non_negative: Option<bool>,
    pub checks: Vec<Check>,
}

impl InvariantReport {
    pub fn from_checks(title: impl Into<String>, checks: Vec<Check>) -> Self {
        Self {
            title: title.into(),
            polynomial: None,
            hodge: None,
            euler: None,
            non_negative: None,
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn merge(&mut self, other: InvariantReport) {
        self.checks.extend(other.checks);
    }
}

fn eq_check(name: &str, got: &LaurentPoly, want: &LaurentPoly) -> Check {
    Check::new(name, got == want, format!("got {got}, expected {want}"))
}

/// Closed form, subset sum, Hodge table and Euler number of one input, with
/// cross-checks between them.
pub fn compute_report(input: &StringyInput) -> Result<InvariantReport> {
    let (r, k) = (input.r(), input.k());
    let closed = input.closed_form();
    let sum = input.subset_sum()?;
    let hodge = stringy_hodge(&closed)?;
    let euler = stringy_euler(&closed);
    let dim = input.dimension() as i64;

    let mut checks = vec![
        eq_check("subset sum equals closed form", &sum, &closed),
        Check::new(
            "degree equals dimension",
            closed.degree() == Some(dim),
            format!("degree {:?}, dimension {dim}", closed.degree()),
        ),
        Check::new(
            "leading coefficient is 1",
            closed
                .leading_coeff()
                .is_some_and(|c| *c == crate::exactalg::int(1)),
            format!("{:?}", closed.leading_coeff().map(ToString::to_string)),
        ),
        Check::new(
            "euler number",
            euler == Coeff::from_integer(input.expected_euler()),
            format!("got {euler}, expected {}", input.expected_euler()),
        ),
    ];
    if input.variety() == Variety::Projective {
        let kr = (k * r) as i64;
        let lhs = &closed.shift(kr) * &LaurentPoly::q_pow_minus_one(1);
        let rhs = &LaurentPoly::q_pow_minus_one(kr) * &stringy_affine_closed(r, k)?;
        checks.push(eq_check("projective and affine forms related", &lhs, &rhs));
    }
    Ok(InvariantReport {
        title: format!("E_st for r={r} k={k} {}", input.variety()),
        non_negative: Some(hodge.is_nonnegative()),
        polynomial: Some(closed),
        hodge: Some(hodge),
        euler: Some(euler),
        checks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub r: u32,
    pub k: u32,
    pub variety: Variety,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exponent: i64,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeEntry {
    pub p: u32,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub divisor: u32,
    pub value: u32,
}

/// Serializable form of [`compute_report`]. Coefficients are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OutputRecord {
    pub input: InputEcho,
    pub dimension: u64,
    pub stringy_e: Vec<Term>,
    pub hodge_diagonal: Vec<HodgeEntry>,
    pub hodge_off_diagonal_zero: bool,
    pub euler_number: String,
    pub non_negative: bool,
    pub discrepancies: Vec<Discrepancy>,
    pub checks: Vec<Check>,
}

impl OutputRecord {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn degree(&self) -> Option<i64> {
        self.stringy_e.last().map(|t| t.exponent)
    }

    /// The E-function rebuilt from `stringy_e`.
    pub fn polynomial(&self) -> Option<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        for t in &self.stringy_e {
            p.add_term(t.exponent, t.coefficient.parse::<BigInt>().ok()?.into());
        }
        Some(p)
    }
}

/// Nonzero terms in ascending exponent order.
pub fn terms_of(p: &LaurentPoly) -> Vec<Term> {
    p.terms()
        .map(|(exponent, c)| Term {
            exponent,
            coefficient: c.to_string(),
        })
        .collect()
}

pub fn compute_record(input: &StringyInput) -> Result<OutputRecord> {
    let report = compute_report(input)?;
    let poly = report
        .polynomial
        .expect("compute_report sets the polynomial");
    let hodge = report.hodge.expect("compute_report sets the hodge table");
    let discrepancies = if input.k() == 0 {
        Vec::new()
    } else {
        log_discrepancies(input.r(), input.k())?
            .into_iter()
            .map(|(divisor, value)| Discrepancy { divisor, value })
            .collect()
    };
    Ok(OutputRecord {
        input: InputEcho {
            r: input.r(),
            k: input.k(),
            variety: input.variety(),
        },
        dimension: input.dimension(),
        stringy_e: terms_of(&poly),
        hodge_diagonal: hodge
            .diag
            .iter()
            .map(|(&p, v)| HodgeEntry {
                p,
                value: v.to_string(),
            })
            .collect(),
        hodge_off_diagonal_zero: hodge.off_diagonal_zero,
        euler_number: report.euler.expect("set").to_string(),
        non_negative: report.non_negative.unwrap_or(false),
        discrepancies,
        checks: report.checks,
    })
}

/// Records for every `1 ≤ k < r ≤ rmax`, in `(r, k)` order.
pub fn table_records(rmax: u32, variety: Variety) -> Result<Vec<OutputRecord>> {
    let grid: Vec<(u32, u32)> = (2..=rmax)
        .flat_map(|r| (1..r).map(move |k| (r, k)))
        .collect();
    let one =
        |&(r, k): &(u32, u32)| StringyInput::new(r, k, variety).and_then(|i| compute_record(&i));
    #[cfg(feature = "parallel")]
    let rows = {
        use rayon::prelude::*;
        grid.par_iter().map(one).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows = grid.iter().map(one).collect();
    rows
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Csv,
    Latex,
}

impl std::str::FromStr for TableFormat {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "latex" => Ok(Self::Latex),
            other => Err(crate::Error::InvalidInput(format!(
                "unknown format {other:?}"
            ))),
        }
    }
}

pub const CSV_HEADER: &str = "r,k,variety,dim,degree,euler,nonneg,coefficients";

pub fn render_json(records: &[OutputRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}

pub fn render_csv(records: &[OutputRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for rec in records {
        let coeffs: Vec<String> = rec
            .stringy_e
            .iter()
            .map(|t| format!("{}:{}", t.exponent, t.coefficient))
            .collect();
        let degree = rec.degree().map(|d| d.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            rec.input.r,
            rec.input.k,
            rec.input.variety,
            rec.dimension,
            degree,
            rec.euler_number,
            rec.non_negative,
            coeffs.join(";")
        );
    }
    out
}

pub fn render_latex(records: &[OutputRecord]) -> String {
    let mut out = String::from(
        "\\begin{tabular}{rrlrl}\n$r$ & $k$ & $E_{\\mathrm{st}}$ & $e_{\\mathrm{st}}$ & $\\ge 0$ \\\\\n\\hline\n",
    );
    for rec in records {
        let poly = rec.polynomial().unwrap_or_default();
        let _ = writeln!(
            out,
            "{} & {} & ${}$ & {} & {} \\\\",
            rec.input.r,
            rec.input.k,
            poly.to_latex_uv(),
            rec.euler_number,
            if rec.non_negative { "yes" } else { "no" }
        );
    }
    out.push_str("\\end{tabular}\n");
    out
}

pub fn render(records: &[OutputRecord], format: TableFormat) -> String {
    match format {
        TableFormat::Json => render_json(records),
        TableFormat::Csv => render_csv(records),
        TableFormat::Latex => render_latex(records),
    }
}
