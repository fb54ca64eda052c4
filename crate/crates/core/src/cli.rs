//! Command-line front end: `compute`, `verify` and `table`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomring::{euler_class, flag_ring, gysin_circle_ut_with_class, gysin_sphere_ut, RingElement};
use crate::knotcomplex::{
    build_torus_complex, torus_homology_by_summands_with_class, torus_homology_with_class, EulerCharacteristic,
    LabeledBigradedGroup,
};
use crate::moy::sln_polynomial;
use crate::repspace::{compare_with_class, components, ComponentKind, VerificationReport};
use crate::zlinalg::{AbGroup, IntMatrix};

pub const N_LIMITS: RangeInclusive<usize> = 2..=8;
pub const M_LIMITS: RangeInclusive<i64> = -8..=8;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "sln-torus", version, about = "Integral sl(N) homology of the torus links T(2,m)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homology and representation-space cohomology over a grid of (N, m)
    Compute(GridArgs),
    /// Run the consistency checks over a grid of (N, m)
    Verify {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// The five named links T(2,1)..T(2,5) for one N
    Table {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct GridArgs {
    /// N or an inclusive range A..B
    #[arg(long, default_value = "2..5", allow_hyphen_values = true)]
    n: String,
    /// m or an inclusive range A..B
    #[arg(long, default_value = "1..5", allow_hyphen_values = true)]
    m: String,
    /// Print the full (h, q) table of each homology group
    #[arg(long)]
    bigrading: bool,
    /// Include the differentials of the reduced complex
    #[arg(long)]
    dump_matrices: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

/// Deliberate bugs for checking that `verify` notices them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Use `a + b` in place of the Euler class `a - b`.
    EulerSign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n_range: RangeInclusive<usize>,
    pub m_range: RangeInclusive<i64>,
    pub output_format: Format,
    pub emit_bigrading: bool,
    pub dump_matrices: bool,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn grid(&self) -> Vec<(usize, i64)> {
        self.n_range.clone().flat_map(|n| self.m_range.clone().map(move |m| (n, m))).collect()
    }
}

/// Parses `A..B` or a single integer.
pub fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("not an integer: {t:?}"));
    match s.split_once("..") {
        Some((a, b)) => Ok((parse(a)?, parse(b.trim_start_matches('='))?)),
        None => {
            let v = parse(s)?;
            Ok((v, v))
        }
    }
}

fn build_config(grid: &GridArgs) -> Result<RunConfig, String> {
    let (n0, n1) = parse_range(&grid.n)?;
    let (m0, m1) = parse_range(&grid.m)?;
    if n0 > n1 || m0 > m1 {
        return Err("empty range".into());
    }
    let (lo, hi) = (*N_LIMITS.start() as i64, *N_LIMITS.end() as i64);
    if n0 < lo || n1 > hi {
        return Err(format!("N must lie in {lo}..{hi}"));
    }
    if m0 < *M_LIMITS.start() || m1 > *M_LIMITS.end() {
        return Err(format!("m must lie in {}..{}", M_LIMITS.start(), M_LIMITS.end()));
    }
    Ok(RunConfig {
        n_range: n0 as usize..=n1 as usize,
        m_range: m0..=m1,
        output_format: grid.output.format,
        emit_bigrading: grid.bigrading,
        dump_matrices: grid.dump_matrices,
        output_path: grid.output.out.clone(),
    })
}

/// One grid point of `compute`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeRecord {
    pub n: usize,
    pub m: i64,
    /// Plain-text total, e.g. `Z^7 + Z/3`.
    pub total: String,
    pub kr_total: AbGroup,
    pub rep_total: AbGroup,
    pub rep_components: Vec<ComponentKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bigraded: Option<LabeledBigradedGroup>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub differentials: Option<Vec<IntMatrix>>,
}

pub fn compute_record(n: usize, m: i64, bigrading: bool, matrices: bool) -> crate::Result<ComputeRecord> {
    let e = euler_class(n)?;
    let kr = torus_homology_with_class(n, m, &e)?;
    let report = compare_with_class(n, m, &e)?;
    let differentials = if matrices && m >= 1 {
        let c = build_torus_complex(n, m)?;
        Some((c.start()..c.end()).map(|h| c.differential(h)).collect())
    } else {
        None
    };
    Ok(ComputeRecord {
        n,
        m,
        total: report.kr_total.to_ascii(),
        kr_total: report.kr_total,
        rep_total: report.rep_total,
        rep_components: components(n, m)?.iter().map(|c| c.kind).collect(),
        bigraded: bigrading.then(|| kr.labeled(n, m)),
        differentials,
    })
}

fn component_names(kinds: &[ComponentKind]) -> String {
    kinds
        .iter()
        .map(|k| match k {
            ComponentKind::Cp => "CP",
            ComponentKind::Ut => "UT",
            ComponentKind::Flag => "F",
            ComponentKind::CpProduct => "CPxCP",
        })
        .collect::<Vec<_>>()
        .join(" u ")
}

fn render_compute(records: &[ComputeRecord], format: Format) -> String {
    if format == Format::Json {
        return serde_json::to_string_pretty(records).expect("serializable") + "\n";
    }
    let mut s = String::new();
    writeln!(s, "{:>2} {:>3}  {:<22} {:<22} components", "N", "m", "KR_N(T(2,m))", "H*(R_N)").unwrap();
    for r in records {
        let rep = r.rep_total.to_ascii();
        let comps = component_names(&r.rep_components);
        writeln!(s, "{:>2} {:>3}  {:<22} {:<22} {}", r.n, r.m, r.total, rep, comps).unwrap();
        if let Some(b) = &r.bigraded {
            for e in &b.groups {
                let g = AbGroup::new(e.free, &e.torsion);
                writeln!(s, "         h={:<3} q={:<4} {}", e.h, e.q, g).unwrap();
            }
        }
        if let Some(ds) = &r.differentials {
            for (k, d) in ds.iter().enumerate() {
                let h = -r.m + k as i64;
                writeln!(s, "         d[{h}] {}", serde_json::to_string(d).unwrap()).unwrap();
            }
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub n: usize,
    pub m: i64,
    pub check: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub results: Vec<CheckResult>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

fn fault_class(n: usize, fault: Option<Fault>) -> crate::Result<RingElement> {
    match fault {
        None => euler_class(n),
        Some(Fault::EulerSign) => {
            let f = flag_ring(n)?;
            Ok(f.generator(0).add(&f.generator(1)))
        }
    }
}

/// The four checks at one grid point: pipelines, compare, euler-vs-skein,
/// gysin.
pub fn verify_point(n: usize, m: i64, fault: Option<Fault>) -> crate::Result<Vec<CheckResult>> {
    let class = fault_class(n, fault)?;
    let check = |name: &str, passed: bool, detail: String| CheckResult {
        n,
        m,
        check: name.to_string(),
        passed,
        detail: if passed { String::new() } else { detail },
    };
    let a = torus_homology_with_class(n, m, &class)?;
    let b = torus_homology_by_summands_with_class(n, m, &class)?;
    let report: VerificationReport = compare_with_class(n, m, &class)?;
    let chi = a.euler_characteristic();
    let skein = sln_polynomial(n, m)?;
    let circle = gysin_circle_ut_with_class(n, &class)?;
    let sphere = gysin_sphere_ut(n)?;
    Ok(vec![
        check("pipelines", a == b, format!("complex total {} vs summands total {}", a.total(), b.total())),
        check("compare", report.isomorphic, format!("KR {} vs rep space {}", report.kr_total, report.rep_total)),
        check("euler-vs-skein", chi == skein, format!("chi = {chi}, skein = {skein}")),
        check(
            "gysin",
            circle == sphere,
            format!("circle bundle {} vs sphere bundle {}", circle.total(), sphere.total()),
        ),
    ])
}

pub fn verify_grid(config: &RunConfig, fault: Option<Fault>) -> crate::Result<VerifySummary> {
    let per_point: Vec<Vec<CheckResult>> =
        config.grid().par_iter().map(|&(n, m)| verify_point(n, m, fault)).collect::<crate::Result<_>>()?;
    let results: Vec<CheckResult> = per_point.into_iter().flatten().collect();
    let passed = results.iter().filter(|r| r.passed).count();
    Ok(VerifySummary { total: results.len(), passed, failed: results.len() - passed, results })
}

fn render_verify(summary: &VerifySummary, format: Format) -> String {
    if format == Format::Json {
        return serde_json::to_string_pretty(summary).expect("serializable") + "\n";
    }
    let mut s = String::new();
    for r in summary.results.iter().filter(|r| !r.passed) {
        writeln!(s, "FAIL N={} m={} {}: {}", r.n, r.m, r.check, r.detail).unwrap();
    }
    writeln!(s, "{} checks: {} passed, {} failed", summary.total, summary.passed, summary.failed).unwrap();
    s
}

/// Rows of the five named links, with the symbolic group each should have.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub m: i64,
    pub name: String,
    pub rep_space: String,
    pub symbolic: String,
    pub expected: AbGroup,
    pub computed: AbGroup,
}

const NAMED: [(i64, &str, &str, &str); 5] = [
    (1, "unknot", "CP^{N-1}", "Z^N"),
    (2, "Hopf link", "CP^{N-1} u F(1,1;N)", "Z^{N^2}"),
    (3, "trefoil", "CP^{N-1} u UT", "Z^{3N-2} + Z/N"),
    (4, "Solomon's knot", "CP^{N-1} u UT u F(1,1;N)", "Z^{N^2+2N-2} + Z/N"),
    (5, "cinquefoil", "CP^{N-1} u UT u UT", "Z^{5N-4} + (Z/N)^2"),
];

fn symbolic_value(n: usize, m: i64) -> AbGroup {
    let t = n as i64;
    match m {
        1 => AbGroup::free(n),
        2 => AbGroup::free(n * n),
        3 => AbGroup::new(3 * n - 2, &[t]),
        4 => AbGroup::new(n * n + 2 * n - 2, &[t]),
        5 => AbGroup::new(5 * n - 4, &[t, t]),
        _ => unreachable!("named rows stop at m = 5"),
    }
}

pub fn table_rows(n: usize) -> crate::Result<Vec<TableRow>> {
    NAMED
        .iter()
        .map(|&(m, name, rep, sym)| {
            Ok(TableRow {
                m,
                name: name.to_string(),
                rep_space: rep.to_string(),
                symbolic: sym.to_string(),
                expected: symbolic_value(n, m),
                computed: torus_homology_with_class(n, m, &euler_class(n)?)?.total(),
            })
        })
        .collect()
}

fn render_table(n: usize, rows: &[TableRow], format: Format) -> String {
    if format == Format::Json {
        return serde_json::to_string_pretty(rows).expect("serializable") + "\n";
    }
    let mut s = String::new();
    writeln!(s, "N = {n}").unwrap();
    for r in rows {
        let mark = if r.expected == r.computed { "ok" } else { "MISMATCH" };
        writeln!(s, "T(2,{}) {:<15} {:<26} {:<20} {:<18} {}", r.m, r.name, r.rep_space, r.symbolic, r.computed, mark)
            .unwrap();
    }
    s
}

fn emit(text: &str, path: &Option<PathBuf>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let res = match path {
        Some(p) => std::fs::write(p, text),
        None => out.write_all(text.as_bytes()),
    };
    match res {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: cannot write output: {e}");
            EXIT_FAILURE
        }
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let usage = |err: &mut dyn Write, msg: String| {
        let _ = writeln!(err, "error: {msg}");
        EXIT_USAGE
    };
    let internal = |err: &mut dyn Write, e: crate::Error| {
        let _ = writeln!(err, "error: {e}");
        EXIT_FAILURE
    };

    match cli.command {
        Command::Compute(grid) => {
            let config = match build_config(&grid) {
                Ok(c) => c,
                Err(msg) => return usage(err, msg),
            };
            let records: crate::Result<Vec<ComputeRecord>> = config
                .grid()
                .par_iter()
                .map(|&(n, m)| compute_record(n, m, config.emit_bigrading, config.dump_matrices))
                .collect();
            match records {
                Ok(r) => emit(&render_compute(&r, config.output_format), &config.output_path, out, err),
                Err(e) => internal(err, e),
            }
        }
        Command::Verify { grid, inject_fault } => {
            let config = match build_config(&grid) {
                Ok(c) => c,
                Err(msg) => return usage(err, msg),
            };
            match verify_grid(&config, inject_fault) {
                Ok(summary) => {
                    let code = emit(&render_verify(&summary, config.output_format), &config.output_path, out, err);
                    if summary.all_passed() {
                        code
                    } else {
                        EXIT_FAILURE
                    }
                }
                Err(e) => internal(err, e),
            }
        }
        Command::Table { n, output } => {
            if !N_LIMITS.contains(&n) {
                return usage(err, format!("N must lie in {}..{}", N_LIMITS.start(), N_LIMITS.end()));
            }
            match table_rows(n) {
                Ok(rows) => {
                    let code = emit(&render_table(n, &rows, output.format), &output.out, out, err);
                    if rows.iter().all(|r| r.expected == r.computed) {
                        code
                    } else {
                        EXIT_FAILURE
                    }
                }
                Err(e) => internal(err, e),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sln-torus").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..5"), Ok((2, 5)));
        assert_eq!(parse_range("-3"), Ok((-3, -3)));
        assert_eq!(parse_range("-8..-1"), Ok((-8, -1)));
        assert_eq!(parse_range("1..=4"), Ok((1, 4)));
        assert!(parse_range("x..2").is_err());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["compute", "--n", "1..3"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["compute", "--m", "0..9"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["compute", "--n", "5..2"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["table", "--n", "9"]).0, EXIT_USAGE);
    }

    #[test]
    fn compute_json_total() {
        let (code, out, _) = run_capture(&["compute", "--n", "3", "--m", "3", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let recs: Vec<ComputeRecord> = serde_json::from_str(&out).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].total, "Z^7 + Z/3");
    }

    #[test]
    fn smallest_verify() {
        let config = build_config(&GridArgs {
            n: "2".into(),
            m: "1".into(),
            bigrading: false,
            dump_matrices: false,
            output: OutputArgs { format: Format::Table, out: None },
        })
        .unwrap();
        let s = verify_grid(&config, None).unwrap();
        assert_eq!(s.total, 4);
        assert!(s.all_passed());
    }

    #[test]
    fn table_names_and_values() {
        let rows = table_rows(2).unwrap();
        assert_eq!(rows[2].computed.to_ascii(), "Z^4 + Z/2");
        assert_eq!(table_rows(5).unwrap()[1].computed, AbGroup::free(25));
        let r4 = table_rows(4).unwrap();
        assert_eq!(r4[4].computed.to_ascii(), "Z^16 + (Z/4)^2");
        assert!(r4.iter().all(|r| r.expected == r.computed));
    }
}
