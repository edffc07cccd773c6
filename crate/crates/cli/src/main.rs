use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use detstringy::oracle::{candidate_count, PrimeField, DEFAULT_BUDGET};
use detstringy::report::{
    self, compute_record, terms_of, InvariantReport, OutputRecord, TableFormat,
};
use detstringy::stringy::{zeta_closed_expansion, zeta_direct_series, StringyInput, Variety};
use detstringy::verify::{run_suite, Suite, VerifyOptions};
use detstringy::Error;

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "detstringy",
    version,
    about = "Stringy E-functions of determinantal varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VarietyArg {
    Affine,
    Projective,
}

impl From<VarietyArg> for Variety {
    fn from(v: VarietyArg) -> Self {
        match v {
            VarietyArg::Affine => Variety::Affine,
            VarietyArg::Projective => Variety::Projective,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Oracle,
    Orbits,
    Zeta,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Orbits => Suite::Orbits,
            SuiteArg::Zeta => Suite::Zeta,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// E_st, Hodge numbers, Euler number and discrepancies for one (r, k).
    Compute {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "affine")]
        variety: VarietyArg,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Run verification suites and print a pass/fail matrix.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4)]
        rmax: u32,
        /// Prime for point counts.
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// Zeta series order; truncation cap for orbit sums.
        #[arg(long, default_value_t = 6)]
        order: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Table of E_st over all 1 <= k < r <= rmax.
    Table {
        #[arg(long, default_value_t = 4)]
        rmax: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableArg,
        #[arg(long, value_enum, default_value = "affine")]
        variety: VarietyArg,
    },
    /// Coefficients of the motivic zeta function of det on r x r matrices.
    Zeta {
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 4)]
        order: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Check class polynomials against point counts over F_p.
    Oracle {
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, default_value_t = 3)]
        rmax: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
}

fn exit_for(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(match err {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::MismatchFound { .. } => EXIT_FAILED,
        _ => EXIT_USAGE,
    })
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED)
    }
}

fn print_record(out: &mut String, rec: &OutputRecord) {
    let poly = rec.polynomial().unwrap_or_default();
    let _ = writeln!(
        out,
        "E_st({} D^{}, r = {}) = {poly}",
        rec.input.variety, rec.input.k, rec.input.r
    );
    let _ = writeln!(
        out,
        "dimension {}  euler {}  non-negative {}",
        rec.dimension,
        rec.euler_number,
        if rec.non_negative { "yes" } else { "no" }
    );
    let hodge: Vec<String> = rec
        .hodge_diagonal
        .iter()
        .map(|h| format!("{}:{}", h.p, h.value))
        .collect();
    let _ = writeln!(out, "h^(p,p)  {}", hodge.join(" "));
    if !rec.discrepancies.is_empty() {
        let a: Vec<String> = rec
            .discrepancies
            .iter()
            .map(|d| format!("a_{} = {}", d.divisor, d.value))
            .collect();
        let _ = writeln!(out, "log discrepancies  {}", a.join(", "));
    }
    for c in &rec.checks {
        let _ = writeln!(
            out,
            "{}  {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name
        );
    }
}

fn print_report(out: &mut String, report: &InvariantReport, format: OutFormat) {
    match format {
        OutFormat::Json => {
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&report.checks).expect("checks serialize")
            );
        }
        OutFormat::Text => {
            let _ = writeln!(out, "{}", report.title);
            for c in &report.checks {
                let _ = writeln!(
                    out,
                    "{}  {}  ({})",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.details
                );
            }
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            let _ = writeln!(out, "{} checks, {failed} failed", report.checks.len());
        }
    }
}

fn run(cli: Cli, out: &mut String) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Compute {
            r,
            k,
            variety,
            format,
        } => {
            let rec = compute_record(&StringyInput::new(r, k, variety.into())?)?;
            match format {
                OutFormat::Json => {
                    let _ = writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&rec).expect("record serializes")
                    );
                }
                OutFormat::Text => print_record(out, &rec),
            }
            Ok(status(rec.all_passed()))
        }
        Command::Verify {
            suite,
            rmax,
            p,
            order,
            budget,
            format,
        } => {
            let suite = Suite::from(suite);
            if matches!(suite, Suite::Oracle | Suite::All) {
                PrimeField::new(p)?;
                eprintln!(
                    "largest census: {} candidates",
                    candidate_count(p, rmax * rmax)
                );
            }
            let opts = VerifyOptions {
                rmax,
                p,
                order,
                budget,
            };
            let report = run_suite(suite, &opts)?;
            print_report(out, &report, format);
            Ok(status(report.all_passed()))
        }
        Command::Table {
            rmax,
            format,
            variety,
        } => {
            let rows = report::table_records(rmax, variety.into())?;
            let format = match format {
                TableArg::Json => TableFormat::Json,
                TableArg::Csv => TableFormat::Csv,
                TableArg::Latex => TableFormat::Latex,
            };
            let _ = write!(out, "{}", report::render(&rows, format));
            if format == TableFormat::Json {
                let _ = writeln!(out);
            }
            Ok(status(rows.iter().all(OutputRecord::all_passed)))
        }
        Command::Zeta { r, order, format } => {
            if r == 0 {
                return Err(Error::InvalidInput(
                    "matrix size r must be at least 1".into(),
                ));
            }
            let closed = zeta_closed_expansion(r, order);
            let direct = zeta_direct_series(r, order);
            let agree = closed == direct;
            match format {
                OutFormat::Json => {
                    let coeffs: Vec<_> = closed
                        .coefficients
                        .iter()
                        .map(|(n, c)| serde_json::json!({ "n": n, "terms": terms_of(c) }))
                        .collect();
                    let doc = serde_json::json!({ "r": r, "order": order, "coefficients": coeffs, "routesAgree": agree });
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
                }
                OutFormat::Text => {
                    for (n, c) in &closed.coefficients {
                        let _ = writeln!(out, "T^{n}: {c}");
                    }
                    let _ = writeln!(
                        out,
                        "{}  closed expansion matches orbit sum",
                        if agree { "PASS" } else { "FAIL" }
                    );
                }
            }
            Ok(status(agree))
        }
        Command::Oracle {
            p,
            rmax,
            budget,
            format,
        } => {
            PrimeField::new(p)?;
            eprintln!(
                "largest census: {} candidates",
                candidate_count(p, rmax * rmax)
            );
            let report = run_suite(
                Suite::Oracle,
                &VerifyOptions {
                    rmax,
                    p,
                    order: 0,
                    budget,
                },
            )?;
            print_report(out, &report, format);
            Ok(status(report.all_passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = run(cli, &mut out).unwrap_or_else(|e| exit_for(&e));
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    code
}
