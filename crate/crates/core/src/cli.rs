//! The `parafermion` command line.
//!
//! Every subcommand prints canonical JSON by default and TSV with
//! `--format tsv`. Exit codes: 0 on success (or a failed identity without
//! `--strict`), 1 on a failed identity under `--strict`, 2 on usage or
//! computation errors.
//!
//! Variables are ordered x_1..x_n (even) then x_{n+1}..x_{n+m} (odd).
//! Exponents in output are doubled, so `[1, 0]` means x_1^{1/2}.

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::kostant::{
    branching_character, branching_dimensions, cohomology_via_partitions, cohomology_via_w1, verify_parafermion_identity,
    verify_paraboson_identity, verify_parastat_identity, verify_weyl_character, BosonDenominator, CohomologyTable,
    IdentityKind, Source, VerificationReport,
};
use crate::partitions::Partition;
use crate::polyring::MultiPoly;
use crate::schur::{hook_schur_with, schur_with, Algorithm, SchurContext};
use crate::weyl::{phi_sigma, subsets, w1_element, RootSystemB, DEFAULT_ALTERNANT_LIMIT};

/// Largest n or m accepted without `--force`.
pub const DEFAULT_RANK_LIMIT: usize = 8;
/// Environment variable holding the default degree bound.
pub const DEGREE_ENV: &str = "PARAFERMION_DEGREE";
pub const DEFAULT_DEGREE: u32 = 10;

#[derive(Debug, Parser)]
#[command(
    name = "parafermion",
    version,
    about = "Exact Schur-function computations for parafermionic Fock spaces",
    after_help = "Variables x_1..x_n are even, x_{n+1}..x_{n+m} odd. Exponents are printed doubled.\n\
                  Exit codes: 0 ok, 1 identity failed under --strict, 2 usage or computation error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Schur polynomial s_λ (or hook-Schur hs_λ when --m > 0).
    Schur(SchurArgs),
    /// Hook-Schur polynomial hs_λ(x | y) in n even and m odd variables.
    HookSchur(SchurArgs),
    /// Kostant's cross-section W¹ of signed permutations.
    W1(RankArgs),
    /// Weyl group utilities.
    Weyl {
        #[command(subcommand)]
        command: WeylCommand,
    },
    /// Cohomology H^k(n, V(p)) as gl_n highest weights.
    Cohomology(CohomologyArgs),
    /// Σ_{λ ⊆ (pⁿ)} s_λ, the restriction of V(p) to gl_n.
    Branch(BranchArgs),
    /// Σ dim_gl(λ) over λ ⊆ (pⁿ) against the so(2n+1) Weyl dimension.
    Dims(BranchArgs),
    /// Check one of the character identities, optionally over a sweep.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
enum WeylCommand {
    /// Same as the top-level `w1`.
    W1(RankArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    /// Jacobi–Trudi determinant
    Jt,
    /// Bialternant quotient
    Alt,
    /// Semistandard (super-)tableaux
    Tab,
    /// Berele–Regev expansion (hook-Schur only)
    Br,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Jt => Algorithm::JacobiTrudi,
            AlgorithmArg::Alt => Algorithm::Bialternant,
            AlgorithmArg::Tab => Algorithm::Tableaux,
            AlgorithmArg::Br => Algorithm::BereleRegev,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdentityArg {
    Parafermion,
    Paraboson,
    Parastat,
    WeylCharacter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    W1,
    Partitions,
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Lift the size limits on n and m.
    #[arg(long)]
    force: bool,
}

#[derive(Debug, Args)]
struct SchurArgs {
    /// Comma-separated parts, e.g. 2,1.
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long, value_enum)]
    algorithm: Option<AlgorithmArg>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct RankArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct CohomologyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    p: usize,
    #[arg(long, value_enum, default_value = "w1")]
    route: RouteArg,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct BranchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    identity: IdentityArg,
    /// n, or an inclusive range a..b with --sweep.
    #[arg(long)]
    n: Span,
    #[arg(long, default_value = "0")]
    m: Span,
    #[arg(long, default_value = "0")]
    p: Span,
    /// Degree bound for truncated checks (default from PARAFERMION_DEGREE, else 10).
    #[arg(long)]
    degree: Option<u32>,
    /// Accept ranges and emit one report per combination.
    #[arg(long)]
    sweep: bool,
    /// Exit 1 if any report fails.
    #[arg(long)]
    strict: bool,
    /// Paraboson: use Π_{i≤j}(1 − x_i x_j) in place of Π_{i<j}.
    #[arg(long)]
    alt_denominator: bool,
    /// Record wall-clock milliseconds (output is then not reproducible).
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    common: Common,
}

/// An inclusive range `a..b` or a single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Span {
    lo: usize,
    hi: usize,
}

impl Span {
    fn is_single(&self) -> bool {
        self.lo == self.hi
    }

    fn values(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("not a non-negative integer: {t:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Span { lo, hi })
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s)
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Compute(e.to_string())
    }
}

fn check_rank(what: &str, value: usize, limit: usize, force: bool) -> Result<(), Failure> {
    if value > limit && !force {
        return Err(Failure::Usage(format!("{what} = {value} exceeds the limit {limit}; pass --force to override")));
    }
    Ok(())
}

fn require_positive(what: &str, value: usize) -> Result<(), Failure> {
    if value == 0 {
        return Err(Failure::Usage(format!("{what} must be at least 1")));
    }
    Ok(())
}

/// Runs the CLI on `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((text, code)) => match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                2
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            2
        }
        Err(Failure::Compute(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<(String, i32), Failure> {
    match command {
        Command::Schur(a) => polynomial_command(a, false).map(|s| (s, 0)),
        Command::HookSchur(a) => polynomial_command(a, true).map(|s| (s, 0)),
        Command::W1(a) | Command::Weyl { command: WeylCommand::W1(a) } => w1_command(a).map(|s| (s, 0)),
        Command::Cohomology(a) => cohomology_command(a).map(|s| (s, 0)),
        Command::Branch(a) => branch_command(a).map(|s| (s, 0)),
        Command::Dims(a) => dims_command(a).map(|s| (s, 0)),
        Command::Verify(a) => verify_command(a),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn polynomial_output(poly: &MultiPoly, format: Format) -> String {
    match format {
        Format::Json => to_json(&json!({ "nvars": poly.nvars(), "terms": poly })),
        Format::Tsv => {
            let mut s = String::from("exp\tcoef\n");
            for (e, c) in poly.terms() {
                s.push_str(&format!("{}\t{}\n", join(e.doubled()), c));
            }
            s
        }
    }
}

fn polynomial_command(a: SchurArgs, hook: bool) -> Result<String, Failure> {
    check_rank("n", a.n, DEFAULT_RANK_LIMIT, a.common.force)?;
    check_rank("m", a.m, DEFAULT_RANK_LIMIT, a.common.force)?;
    let poly = if hook || a.m > 0 {
        let ctx = SchurContext::hook(a.n, a.m);
        let alg = a.algorithm.map(Algorithm::from).unwrap_or(Algorithm::BereleRegev);
        hook_schur_with(&a.lambda, &ctx, alg)?
    } else {
        if a.algorithm == Some(AlgorithmArg::Alt) {
            check_rank("n", a.n, DEFAULT_ALTERNANT_LIMIT, a.common.force)?;
        }
        let ctx = SchurContext::new(a.n);
        let alg = a.algorithm.map(Algorithm::from).unwrap_or(Algorithm::JacobiTrudi);
        schur_with(&a.lambda, &ctx, alg)?
    };
    Ok(polynomial_output(&poly, a.common.format))
}

#[derive(Serialize)]
struct W1Row {
    subset: Vec<usize>,
    word: Vec<usize>,
    signs: Vec<i8>,
    phi: usize,
    mu: Partition,
}

fn w1_command(a: RankArgs) -> Result<String, Failure> {
    require_positive("n", a.n)?;
    check_rank("n", a.n, DEFAULT_RANK_LIMIT, a.common.force)?;
    let roots = RootSystemB::new(a.n);
    let mut rows = Vec::new();
    for subset in subsets(a.n) {
        let sigma = w1_element(&subset, a.n)?;
        let mu = crate::kostant::diagram_of_subset(&subset, a.n);
        rows.push(W1Row { phi: phi_sigma(&sigma, &roots).len(), word: sigma.word(), signs: sigma.signs().to_vec(), subset, mu });
    }
    Ok(match a.common.format {
        Format::Json => to_json(&json!({ "n": a.n, "elements": rows })),
        Format::Tsv => {
            let mut s = String::from("subset\tword\tsigns\tphi\tmu\n");
            for r in &rows {
                s.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", join(&r.subset), join(&r.word), join(&r.signs), r.phi, join(r.mu.parts())));
            }
            s
        }
    })
}

fn cohomology_output(t: &CohomologyTable, format: Format) -> String {
    match format {
        Format::Json => to_json(t),
        Format::Tsv => {
            let mut s = String::from("k\tdiagram\tbase\tweight\tsource\n");
            for e in &t.entries {
                let source = match &e.source {
                    Source::Subset(i) => format!("subset:{}", join(i)),
                    Source::SelfConjugate(mu) => format!("self_conjugate:{}", join(mu.parts())),
                };
                s.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\n",
                    e.degree,
                    join(e.diagram.parts()),
                    join(e.base.parts()),
                    join(e.weight.doubled()),
                    source
                ));
            }
            s
        }
    }
}

fn cohomology_command(a: CohomologyArgs) -> Result<String, Failure> {
    require_positive("n", a.n)?;
    check_rank("n", a.n, DEFAULT_RANK_LIMIT, a.common.force)?;
    let table = match a.route {
        RouteArg::W1 => cohomology_via_w1(a.n, a.p)?,
        RouteArg::Partitions => cohomology_via_partitions(a.n, a.p)?,
    };
    Ok(cohomology_output(&table, a.common.format))
}

fn branch_command(a: BranchArgs) -> Result<String, Failure> {
    require_positive("n", a.n)?;
    check_rank("n", a.n, DEFAULT_RANK_LIMIT, a.common.force)?;
    Ok(polynomial_output(&branching_character(a.n, a.p)?, a.common.format))
}

fn dims_command(a: BranchArgs) -> Result<String, Failure> {
    require_positive("n", a.n)?;
    check_rank("n", a.n, DEFAULT_RANK_LIMIT, a.common.force)?;
    let (gl, so) = branching_dimensions(a.n, a.p)?;
    Ok(match a.common.format {
        Format::Json => to_json(&json!({
            "n": a.n, "p": a.p, "gl_sum": gl.to_string(), "so": so.to_string(), "equal": gl == so
        })),
        Format::Tsv => format!("n\tp\tgl_sum\tso\tequal\n{}\t{}\t{}\t{}\t{}\n", a.n, a.p, gl, so, gl == so),
    })
}

fn default_degree() -> Result<u32, Failure> {
    match std::env::var(DEGREE_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{DEGREE_ENV}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_DEGREE),
    }
}

fn verify_cell(a: &VerifyArgs, n: usize, m: usize, p: usize, degree: u32) -> Result<VerificationReport, Failure> {
    let force = a.common.force;
    let report = match a.identity {
        IdentityArg::Parafermion => {
            require_positive("n", n)?;
            check_rank("n", n, DEFAULT_RANK_LIMIT, force)?;
            verify_parafermion_identity(n, p)?
        }
        IdentityArg::Paraboson => {
            require_positive("n", n)?;
            check_rank("n", n, DEFAULT_RANK_LIMIT, force)?;
            let den = if a.alt_denominator { BosonDenominator::SymmetricSquare } else { BosonDenominator::Printed };
            verify_paraboson_identity(n, p, degree, den)?
        }
        IdentityArg::Parastat => {
            check_rank("n", n, DEFAULT_RANK_LIMIT, force)?;
            check_rank("m", m, DEFAULT_RANK_LIMIT, force)?;
            if n + m == 0 {
                return Err(Failure::Usage("parastat needs n + m ≥ 1".into()));
            }
            verify_parastat_identity(n, m, p, degree)?
        }
        IdentityArg::WeylCharacter => {
            require_positive("n", n)?;
            check_rank("n", n, DEFAULT_ALTERNANT_LIMIT, force)?;
            let limit = if force { usize::MAX } else { DEFAULT_ALTERNANT_LIMIT };
            verify_weyl_character(n, p, limit)?
        }
    };
    Ok(report)
}

const REPORT_COLUMNS: &str =
    "identity\tn\tm\tp\tdegree\tstatus\tconjecture\tdenominator\tdiscrepancy_degree\tdiscrepancy_monomial\tdiscrepancy_lhs\tdiscrepancy_rhs\tmillis";

fn report_line(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => to_json(r),
        Format::Tsv => {
            let opt = |v: Option<String>| v.unwrap_or_default();
            let value = serde_json::to_value(r).expect("serializable");
            let field = |k: &str| match &value[k] {
                Value::Null => String::new(),
                Value::String(s) => s.clone(),
                v => v.to_string(),
            };
            let d = r.first_discrepancy.as_ref();
            format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                IdentityKind::name(r.identity),
                r.n,
                r.m,
                r.p,
                opt(r.degree.map(|x| x.to_string())),
                field("status"),
                r.conjecture,
                field("denominator"),
                opt(d.map(|d| d.degree.to_string())),
                opt(d.map(|d| join(&d.monomial))),
                opt(d.map(|d| d.lhs.clone())),
                opt(d.map(|d| d.rhs.clone())),
                opt(r.millis.map(|x| x.to_string())),
            )
        }
    }
}

fn verify_command(a: VerifyArgs) -> Result<(String, i32), Failure> {
    if !a.sweep && !(a.n.is_single() && a.m.is_single() && a.p.is_single()) {
        return Err(Failure::Usage("ranges need --sweep".into()));
    }
    let degree = match a.degree {
        Some(d) => d,
        None => default_degree()?,
    };
    let cells: Vec<(usize, usize, usize)> = a
        .n
        .values()
        .flat_map(|n| a.m.values().flat_map(move |m| a.p.values().map(move |p| (n, m, p))))
        .collect();
    let reports: Vec<Result<VerificationReport, Failure>> =
        cells.par_iter().map(|&(n, m, p)| verify_cell(&a, n, m, p, degree)).collect();

    let format = a.common.format;
    let mut text = String::new();
    if format == Format::Tsv {
        text.push_str(REPORT_COLUMNS);
        text.push('\n');
    }
    let mut failed = false;
    for r in reports {
        let mut r = r?;
        if !a.timing {
            r.millis = None;
        }
        failed |= !r.passed();
        text.push_str(&report_line(&r, format));
    }
    Ok((text, if failed && a.strict { 1 } else { 0 }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("parafermion").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn span_parsing() {
        assert_eq!("3".parse::<Span>().unwrap(), Span { lo: 3, hi: 3 });
        assert_eq!("1..3".parse::<Span>().unwrap(), Span { lo: 1, hi: 3 });
        assert_eq!("1..=3".parse::<Span>().unwrap(), Span { lo: 1, hi: 3 });
        assert!("3..1".parse::<Span>().is_err());
        assert!("x".parse::<Span>().is_err());
    }

    #[test]
    fn parafermion_pass() {
        let (code, out, _) = run_args(&["verify", "--identity", "parafermion", "--n", "2", "--p", "1"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["status"], "pass");
        assert_eq!(v["millis"], Value::Null);
    }

    #[test]
    fn limit_exceeded() {
        let (code, out, err) = run_args(&["verify", "--identity", "parastat", "--n", "9999", "--m", "1", "--p", "1"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("--force"));
    }

    #[test]
    fn unknown_flag_is_usage_error() {
        let (code, _, err) = run_args(&["cohomology", "--n", "2", "--bogus"]);
        assert_eq!(code, 2);
        assert!(err.contains("Usage"));
    }

    #[test]
    fn range_without_sweep() {
        let (code, _, _) = run_args(&["verify", "--identity", "parafermion", "--n", "1..2"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn strict_turns_failure_into_exit_one() {
        let args = ["verify", "--identity", "paraboson", "--n", "1", "--p", "1", "--degree", "4", "--alt-denominator"];
        assert_eq!(run_args(&args).0, 0);
        let mut strict = args.to_vec();
        strict.push("--strict");
        assert_eq!(run_args(&strict).0, 1);
    }
}
