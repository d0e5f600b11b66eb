//! Command-line front end. [`run`] parses arguments and returns the rendered
//! output together with the exit status, so the binary is a thin wrapper.
//!
//! Exit status: 0 on success, 1 when a verification window fails, 2 on
//! invalid input.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::birman_menasco;
use crate::braid3::{self, BraidInvariants, BraidWord};
use crate::counts::{self, Census, CountsRow, TraceCounts};
use crate::error::{Error, Result};
use crate::quadforms::{self, QForm};

pub const SCHEMA: &str = "bqf-braid/1";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "bqf-braid", version, about = "Quadratic forms of discriminant t^2 - 4 and closed 3-braids")]
pub struct CliConfig {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of form classes of discriminant t^2 - 4
    #[command(allow_negative_numbers = true)]
    H { t: i64 },
    /// Every reduced form of discriminant t^2 - 4
    #[command(allow_negative_numbers = true)]
    Forms { t: i64 },
    /// Form classes of discriminant t^2 - 4 with their matrices and exponent residues
    #[command(allow_negative_numbers = true)]
    Classes { t: i64 },
    /// Exponent sum, trace, SL2(Z) image, Alexander and Jones polynomials of a braid word
    Invariants {
        /// Braid word, e.g. "1 2 -1" or "1^-1 2^3"
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Prepend (s1 s2 s1)^k
        #[arg(long, default_value_t = 0)]
        delta_power: i64,
    },
    /// |X_{t,n}|, M_{t,n} and p_{t,n} for one cell
    #[command(allow_negative_numbers = true)]
    Counts { t: i64, n: i64 },
    /// Exceptional-fiber counts M'_{t,n}, M_{t,n} and witness braids
    #[command(allow_negative_numbers = true)]
    M { t: i64, n: i64 },
    /// Lower bound for |X_{t,n}| from all braid words up to a length
    #[command(allow_negative_numbers = true)]
    Census {
        t: i64,
        n: i64,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Check h(t) = sum of p + M over a 12-wide exponent window for a range of t
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(long)]
        tmin: i64,
        #[arg(long)]
        tmax: i64,
        /// Window start; defaults to -|t - 3| - 24 per trace
        #[arg(long)]
        n: Option<i64>,
    },
}

/// Rendered output and exit status of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: 0 }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome::ok(rendered)
            } else {
                Outcome { stdout: String::new(), stderr: rendered, code }
            };
        }
    };
    match execute(&config) {
        Ok(outcome) => outcome,
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 },
    }
}

fn execute(config: &CliConfig) -> Result<Outcome> {
    let fmt = config.format;
    match &config.command {
        Command::H { t } => cmd_h(*t, fmt),
        Command::Forms { t } => cmd_forms(*t, fmt),
        Command::Classes { t } => cmd_classes(*t, fmt),
        Command::Invariants { word, delta_power } => cmd_invariants(word, *delta_power, fmt),
        Command::Counts { t, n } => cmd_counts(*t, *n, fmt),
        Command::M { t, n } => cmd_m(*t, *n, fmt),
        Command::Census { t, n, max_len } => cmd_census(*t, *n, *max_len, fmt),
        Command::Verify { tmin, tmax, n } => cmd_verify(*tmin, *tmax, *n, fmt),
    }
}

/// Serializes `payload` as a JSON object carrying the schema tag. Keys come
/// out sorted, so parsing and re-serializing reproduces the same bytes.
pub fn json_envelope<T: Serialize>(payload: &T) -> Result<String> {
    let mut value = serde_json::to_value(payload).map_err(|e| Error::InvalidParameters(e.to_string()))?;
    match &mut value {
        Value::Object(map) => {
            map.insert("schema".into(), Value::from(SCHEMA));
        }
        _ => return Err(Error::InvalidParameters("JSON payload must be an object".into())),
    }
    let mut s = serde_json::to_string_pretty(&value).expect("Value serializes");
    s.push('\n');
    Ok(s)
}

fn csv_table<S: Serialize>(rows: &[S]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::InvalidParameters(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidParameters(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn cmd_h(t: i64, fmt: Format) -> Result<Outcome> {
    let h = quadforms::class_number_h(t)?;
    #[derive(Serialize)]
    struct Row {
        t: i64,
        h: u64,
    }
    let row = Row { t, h };
    Ok(Outcome::ok(match fmt {
        Format::Text => format!("{h}\n"),
        Format::Csv => csv_table(&[row])?,
        Format::Json => json_envelope(&row)?,
    }))
}

pub fn cmd_forms(t: i64, fmt: Format) -> Result<Outcome> {
    let classes = quadforms::enumerate_classes(t)?;
    let discriminant = quadforms::trace_discriminant(t)?;
    let mut forms: Vec<QForm> = classes
        .iter()
        .flat_map(|c| c.cycle.clone().unwrap_or_else(|| vec![c.key.repr]))
        .collect();
    forms.sort();
    #[derive(Serialize)]
    struct Payload {
        t: i64,
        discriminant: i64,
        forms: Vec<QForm>,
    }
    Ok(Outcome::ok(match fmt {
        Format::Text => forms.iter().map(|f| format!("{f}\n")).collect(),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                a: i64,
                b: i64,
                c: i64,
            }
            csv_table(&forms.iter().map(|f| Row { a: f.a, b: f.b, c: f.c }).collect::<Vec<_>>())?
        }
        Format::Json => json_envelope(&Payload { t, discriminant, forms })?,
    }))
}

pub fn cmd_classes(t: i64, fmt: Format) -> Result<Outcome> {
    let classes = counts::y_classes(t)?;
    Ok(Outcome::ok(match fmt {
        Format::Text => {
            let mut s = String::new();
            for c in &classes {
                let cycle = c.class.cycle.as_ref().map_or(String::new(), |cy| format!("  cycle length {}", cy.len()));
                writeln!(s, "{}  residue {:>2}  matrix {}{}", c.class.key.repr, c.residue, c.matrix, cycle).unwrap();
            }
            s
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                a: i64,
                b: i64,
                c: i64,
                discriminant: i64,
                residue: u8,
                cycle_length: Option<usize>,
            }
            let rows: Vec<Row> = classes
                .iter()
                .map(|c| Row {
                    a: c.class.key.repr.a,
                    b: c.class.key.repr.b,
                    c: c.class.key.repr.c,
                    discriminant: c.class.key.discriminant,
                    residue: c.residue,
                    cycle_length: c.class.cycle.as_ref().map(Vec::len),
                })
                .collect();
            csv_table(&rows)?
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Payload<'a> {
                t: i64,
                h: usize,
                classes: &'a [counts::ClassWithExponent],
            }
            json_envelope(&Payload { t, h: classes.len(), classes: &classes })?
        }
    }))
}

pub fn cmd_invariants(word: &str, delta_power: i64, fmt: Format) -> Result<Outcome> {
    let parsed = braid3::parse_braid(word)?;
    let full: BraidWord = braid3::garside_power(delta_power)?.concat(&parsed);
    let inv = BraidInvariants::compute(&full)?;
    Ok(Outcome::ok(match fmt {
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "word: {}", inv.word).unwrap();
            writeln!(s, "exponent_sum: {}", inv.exponent_sum).unwrap();
            writeln!(s, "trace: {}", inv.trace).unwrap();
            writeln!(s, "phi: {}", inv.phi).unwrap();
            writeln!(s, "burau_trace: {}", inv.burau_trace).unwrap();
            writeln!(s, "alexander: {}", inv.alexander).unwrap();
            writeln!(s, "jones: {}", inv.jones).unwrap();
            writeln!(s, "special_value: {}", inv.special_value).unwrap();
            s
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                word: String,
                exponent_sum: i64,
                trace: i64,
                phi: String,
                burau_trace: String,
                alexander: String,
                jones: String,
                special_value: String,
            }
            csv_table(&[Row {
                word: inv.word.to_string(),
                exponent_sum: inv.exponent_sum,
                trace: inv.trace,
                phi: inv.phi.to_string(),
                burau_trace: inv.burau_trace.to_string(),
                alexander: inv.alexander.to_string(),
                jones: inv.jones.to_string(),
                special_value: inv.special_value.to_string(),
            }])?
        }
        Format::Json => json_envelope(&inv)?,
    }))
}

pub fn cmd_counts(t: i64, n: i64, fmt: Format) -> Result<Outcome> {
    let row = counts::counts_row(t, n)?;
    Ok(Outcome::ok(match fmt {
        Format::Text => format!("t={} n={} x={} m={} p={}\n", row.t, row.n, row.x_count, row.m, row.p),
        Format::Csv => csv_table(&[row])?,
        Format::Json => json_envelope(&row)?,
    }))
}

pub fn cmd_m(t: i64, n: i64, fmt: Format) -> Result<Outcome> {
    let report = birman_menasco::m_report(t, n)?;
    Ok(Outcome::ok(match fmt {
        Format::Text => {
            let mut s = format!("t={} n={} m_prime={} m={}\n", t, n, report.m_prime, report.m);
            for w in &report.witnesses {
                let words: Vec<String> = w.words.iter().map(|x| format!("\"{x}\"")).collect();
                writeln!(s, "  {:?}: {}", w.family, words.join(", ")).unwrap();
            }
            s
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                t: i64,
                n: i64,
                m_prime: u64,
                m: u64,
            }
            csv_table(&[Row { t, n, m_prime: report.m_prime, m: report.m }])?
        }
        Format::Json => json_envelope(&report)?,
    }))
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub t: i64,
    pub n: i64,
    pub max_len: usize,
    pub census: u64,
    pub x_count: u64,
    pub gap: u64,
}

pub fn cmd_census(t: i64, n: i64, max_len: usize, fmt: Format) -> Result<Outcome> {
    let x_count = counts::x_count(t, n)?;
    let census = Census::run(max_len, t.abs(), (n, n))?.count(t, n);
    let row = CensusRow { t, n, max_len, census, x_count, gap: x_count.saturating_sub(census) };
    Ok(Outcome::ok(match fmt {
        Format::Text => format!(
            "t={} n={} max_len={} census={} x_count={} gap={}\n",
            row.t, row.n, row.max_len, row.census, row.x_count, row.gap
        ),
        Format::Csv => csv_table(&[row])?,
        Format::Json => json_envelope(&row)?,
    }))
}

/// One line of the `verify` table: window totals for one trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub t: i64,
    pub n: i64,
    pub x_count: Option<u64>,
    pub m: Option<u64>,
    pub p: Option<i64>,
    pub h_lhs: Option<u64>,
    pub window_rhs: Option<i64>,
    pub pass: Option<bool>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyTable {
    pub tmin: i64,
    pub tmax: i64,
    pub all_pass: bool,
    pub rows: Vec<VerifyRow>,
    pub cells: Vec<CountsRow>,
}

/// Runs [`counts::verify_main`] for every `t` in the range, in parallel,
/// returning rows sorted by `t`.
pub fn verify_range(tmin: i64, tmax: i64, n: Option<i64>) -> Result<VerifyTable> {
    if tmin > tmax {
        return Err(Error::InvalidParameters(format!("empty range: tmin {tmin} > tmax {tmax}")));
    }
    let results: Vec<(VerifyRow, Vec<CountsRow>)> = (tmin..=tmax)
        .into_par_iter()
        .map(|t| {
            let n = n.unwrap_or_else(|| counts::default_window_start(t));
            if t == 2 || t == -2 {
                return Ok((
                    VerifyRow {
                        t,
                        n,
                        x_count: None,
                        m: None,
                        p: None,
                        h_lhs: None,
                        window_rhs: None,
                        pass: None,
                        note: Some("skipped: t = ±2 excluded".into()),
                    },
                    vec![],
                ));
            }
            let tc = TraceCounts::new(t)?;
            let report = counts::main_report(&tc, quadforms::class_number_h(t)?, n);
            let note = (!report.nonnegative).then(|| "negative p in window".to_string());
            Ok((
                VerifyRow {
                    t,
                    n,
                    x_count: Some(report.x_total()),
                    m: Some(report.m_total()),
                    p: Some(report.p_total()),
                    h_lhs: Some(report.h_lhs),
                    window_rhs: Some(report.window_rhs),
                    pass: Some(report.pass),
                    note,
                },
                report.rows,
            ))
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::with_capacity(results.len());
    let mut cells = Vec::new();
    for (row, c) in results {
        rows.push(row);
        cells.extend(c);
    }
    let all_pass = rows.iter().all(|r| r.pass != Some(false));
    Ok(VerifyTable { tmin, tmax, all_pass, rows, cells })
}

pub fn cmd_verify(tmin: i64, tmax: i64, n: Option<i64>, fmt: Format) -> Result<Outcome> {
    let table = verify_range(tmin, tmax, n)?;
    let stdout = match fmt {
        Format::Text => {
            let mut s = format!(
                "{:>6} {:>6} {:>8} {:>6} {:>6} {:>6} {:>10}  pass\n",
                "t", "n", "x_count", "m", "p", "h_lhs", "window_rhs"
            );
            let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            for r in &table.rows {
                let status = match (r.pass, &r.note) {
                    (Some(true), _) => "ok".to_string(),
                    (Some(false), note) => format!("FAIL{}", note.as_ref().map_or(String::new(), |n| format!(" ({n})"))),
                    (None, note) => note.clone().unwrap_or_default(),
                };
                writeln!(
                    s,
                    "{:>6} {:>6} {:>8} {:>6} {:>6} {:>6} {:>10}  {}",
                    r.t,
                    r.n,
                    opt(r.x_count.map(|v| v.to_string())),
                    opt(r.m.map(|v| v.to_string())),
                    opt(r.p.map(|v| v.to_string())),
                    opt(r.h_lhs.map(|v| v.to_string())),
                    opt(r.window_rhs.map(|v| v.to_string())),
                    status
                )
                .unwrap();
            }
            s
        }
        Format::Csv => csv_table(&table.rows)?,
        Format::Json => json_envelope(&table)?,
    };
    Ok(Outcome { stdout, stderr: String::new(), code: if table.all_pass { 0 } else { 1 } })
}
