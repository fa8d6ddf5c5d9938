//! Command-line front end.
//!
//! Every command produces a [`Report`]: parameters, one row per degree (or
//! per basis element for `coproduct`), and an overall verdict. Exit status
//! is 0 when the verdict passes, 1 when it fails, 2 on bad arguments.

mod cache;
mod report;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{CommandFactory, Parser, ValueEnum};

pub use cache::{Cache, CacheKey, CACHE_ENV, CACHE_VERSION};
pub use report::{Cell, Report, Row, Verdict};

use crate::coalgebra;
use crate::error::{Error, Result};
use crate::f2sum::F2Sum;
use crate::morava_basis;
use crate::qn_action::{HomologyReport, MoravaParams, QnOperator};
use crate::reconcile;
use crate::symfun;
use crate::BMonomial;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Q_n-homology of H_*(BO(q)) (or M_q with --exact) per degree
    Homology,
    /// The b/c basis of K(n)_*(BO(q)) (or MO(q) with --exact) per degree
    Basis,
    /// Coproduct mod v_n of every basis element, with the coalgebra laws
    Coproduct,
    /// Dimensions of the symmetric function quotient per weight
    Symquotient,
    /// Three-way count comparison in even degrees
    Reconcile,
    /// Reconciliation for BO(q) and MO(q) plus odd-degree vanishing
    VerifyAll,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Homology => "homology",
            Command::Basis => "basis",
            Command::Coproduct => "coproduct",
            Command::Symquotient => "symquotient",
            Command::Reconcile => "reconcile",
            Command::VerifyAll => "verify-all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "morava-bo", version)]
#[command(about = "Morava K-theory of BO(q) and MO(q) at p = 2, computed exactly over F_2")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,

    /// Height of the Morava K-theory K(n)
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=MoravaParams::MAX_N as i64))]
    pub n: u32,

    /// Rank q of BO(q)
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub q: u64,

    /// Largest homological degree reported
    #[arg(long, default_value_t = 16)]
    pub max_degree: u32,

    /// Restrict to the summand MO(q) (monomials of length exactly q)
    #[arg(long)]
    pub exact: bool,

    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Row cache directory (defaults to $MORAVA_BO_CACHE when set)
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,

    /// Write the report here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn params(&self) -> Result<MoravaParams> {
        MoravaParams::new(self.n)
    }

    pub fn validate(&self) -> Result<()> {
        self.params()?;
        if self.q == 0 {
            return Err(Error::InvalidParams("q must be at least 1".into()));
        }
        Ok(())
    }

    fn cache(&self) -> Option<Cache> {
        self.cache_dir
            .clone()
            .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
            .map(Cache::new)
    }
}

struct RowSource<'a> {
    cache: Option<Cache>,
    config: &'a RunConfig,
}

impl RowSource<'_> {
    /// Rows for one degree, from the cache when a readable entry exists.
    fn rows(&self, degree: u32, compute: impl FnOnce() -> Vec<Row>) -> Vec<Row> {
        let key = CacheKey::new(
            self.config.command.name(),
            self.config.n,
            self.config.q as usize,
            degree,
            self.config.exact,
        );
        if let Some(cache) = &self.cache {
            if let Some(rows) = cache.lookup(&key).and_then(|b| decode_rows(&b)) {
                return rows;
            }
        }
        let rows = compute();
        if let Some(cache) = &self.cache {
            // a failed write only costs a recomputation next time
            let _ = cache.store(&key, &encode_rows(&rows));
        }
        rows
    }
}

fn encode_rows(rows: &[Row]) -> Vec<u8> {
    let v = serde_json::Value::Array(rows.iter().map(Row::to_json).collect());
    serde_json::to_vec(&v).expect("rows serialize")
}

fn decode_rows(bytes: &[u8]) -> Option<Vec<Row>> {
    let v: serde_json::Value = serde_json::from_slice(bytes).ok()?;
    v.as_array()?
        .iter()
        .map(|r| Row::from_json(r).ok())
        .collect()
}

fn sum_string(s: &F2Sum<BMonomial>) -> String {
    s.iter().map(ToString::to_string).collect::<Vec<_>>().join("+")
}

fn homology_row(h: &HomologyReport) -> Row {
    Row::new()
        .with("degree", h.degree)
        .with("kernel_dim", h.kernel_dim)
        .with("image_dim", h.image_dim)
        .with("homology_dim", h.homology_dim)
        .with(
            "representatives",
            h.representatives.iter().map(sum_string).collect::<Vec<_>>(),
        )
}

fn verdict_of(rows: &[Row]) -> Verdict {
    Verdict::from_bool(
        rows.iter()
            .all(|r| r.get("verdict") != Some(&Cell::Str("fail".into()))),
    )
}

fn pass_fail(ok: bool) -> &'static str {
    Verdict::from_bool(ok).as_str()
}

/// Computes the report for a validated configuration.
pub fn build_report(config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let params = config.params()?;
    let q = config.q as usize;
    let exact = config.exact;
    let max = config.max_degree;
    let src = RowSource {
        cache: config.cache(),
        config,
    };
    let op = QnOperator::milnor(params);
    let even = || (2..=max).step_by(2);

    let rows: Vec<Row> = match config.command {
        Command::Homology => (1..=max)
            .flat_map(|d| {
                src.rows(d, || {
                    let h = op.homology(q, d, exact);
                    let ok = d % 2 == 0 || h.homology_dim == 0;
                    vec![homology_row(&h).with("verdict", pass_fail(ok))]
                })
            })
            .collect(),
        Command::Basis => even()
            .flat_map(|d| {
                src.rows(d, || {
                    let basis = morava_basis::enumerate_basis(params, q, d, exact);
                    let ok = basis.iter().all(|m| {
                        m.validate(params).is_ok()
                            && m.degree() == d
                            && if exact { m.width() == q } else { (1..=q).contains(&m.width()) }
                    });
                    vec![Row::new()
                        .with("degree", d)
                        .with("count", basis.len())
                        .with("elements", basis.iter().map(ToString::to_string).collect::<Vec<_>>())
                        .with("verdict", pass_fail(ok))]
                })
            })
            .collect(),
        Command::Coproduct => even()
            .flat_map(|d| {
                src.rows(d, || {
                    morava_basis::enumerate_basis(params, q, d, exact)
                        .iter()
                        .map(|m| {
                            let psi = coalgebra::coproduct(params, m).expect("basis elements are valid");
                            let broken = coalgebra::check_element(params, m).expect("valid");
                            Row::new()
                                .with("degree", d)
                                .with("element", m.to_string())
                                .with("terms", psi.iter().map(ToString::to_string).collect::<Vec<_>>())
                                .with(
                                    "broken_laws",
                                    broken.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                                )
                                .with("verdict", pass_fail(broken.is_empty()))
                        })
                        .collect()
                })
            })
            .collect(),
        Command::Symquotient => (0..=max / 2)
            .flat_map(|w| {
                src.rows(2 * w, || {
                    let r = symfun::quotient_report(params, q, w);
                    let canon = symfun::enumerate_canonical(params, q, w);
                    vec![Row::new()
                        .with("degree", 2 * w)
                        .with("weight", w)
                        .with("slice_dim", r.slice_dim)
                        .with("ideal_rank", r.ideal_rank)
                        .with("quotient_dim", r.quotient_dim)
                        .with("canonical_count", canon.len())
                        .with("canonical", canon.iter().map(ToString::to_string).collect::<Vec<_>>())
                        .with("verdict", pass_fail(r.quotient_dim == canon.len()))]
                })
            })
            .collect(),
        Command::Reconcile => even()
            .flat_map(|d| {
                src.rows(d, || {
                    let r = reconcile::reconcile_row(&op, q, d);
                    vec![Row::new()
                        .with("degree", d)
                        .with("qn_homology_dim", r.qn_homology_dim)
                        .with("theorem12_count", r.theorem12_count)
                        .with("canonical_count", r.canonical_count)
                        .with("verdict", pass_fail(r.passed()))]
                })
            })
            .collect(),
        Command::VerifyAll => (1..=max)
            .flat_map(|d| src.rows(d, || vec![verify_row(&op, q, d)]))
            .collect(),
    };

    Ok(Report {
        command: config.command.name().to_owned(),
        n: config.n,
        q,
        max_degree: max,
        exact,
        verdict: verdict_of(&rows),
        rows,
    })
}

fn verify_row(op: &QnOperator, q: usize, d: u32) -> Row {
    let params = op.params();
    let mo_h = op.homology(q, d, true).homology_dim;
    let mo_b = morava_basis::enumerate_basis(params, q, d, true).len();
    let bo_h = op.homology(q, d, false).homology_dim;
    let bo_b = morava_basis::enumerate_basis(params, q, d, false).len();
    let (canonical, ok) = if d.is_multiple_of(2) {
        let c = reconcile::reduced_quotient_dim(params, q, d / 2);
        (Some(c), mo_h == mo_b && bo_h == bo_b && bo_b == c)
    } else {
        (None, mo_h == 0 && bo_h == 0)
    };
    Row::new()
        .with("degree", d)
        .with("mo_homology_dim", mo_h)
        .with("mo_basis_count", mo_b)
        .with("bo_homology_dim", bo_h)
        .with("bo_basis_count", bo_b)
        .with("canonical_count", canonical)
        .with("verdict", pass_fail(ok))
}

/// Renders a report in the configured format.
pub fn render(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Table => Ok(report.to_table()),
        Format::Json => Ok(report.to_json()),
        Format::Csv => report.to_csv(),
    }
}

/// Runs a parsed configuration, writing the report to `--out` or `stdout`.
pub fn run(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let report = match build_report(config) {
        Ok(r) => r,
        Err(e @ Error::InvalidParams(_)) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_FAIL;
        }
    };
    let text = match render(&report, config.format) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_FAIL;
        }
    };
    let written = match &config.out {
        Some(path) => fs::write(path, text.as_bytes()),
        None => stdout.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write report: {e}");
        return EXIT_FAIL;
    }
    match report.verdict {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
    }
}

/// Parses `args` (program name first) and runs. Usage errors print to
/// `stderr` and return [`EXIT_USAGE`]; `--help` and `--version` return 0.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let mut rendered = e.render().to_string();
            if e.use_stderr() && !rendered.contains("Usage:") {
                rendered.push('\n');
                rendered.push_str(&RunConfig::command().render_usage().to_string());
                rendered.push('\n');
            }
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            code
        }
    }
}

/// Entry point used by the binary.
pub fn main() -> u8 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    main_with_args(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
