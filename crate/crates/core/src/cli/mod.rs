//! The `hermcodes` command line.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or
//! constraint error, 3 budget exceeded, 4 reconstruction left the secret
//! undetermined.

pub mod output;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis;
use crate::codes::{self, CodeError, LinearCode, DEFAULT_BUDGET};
use crate::constructions::{
    self, AQCParams, Candidate, Construction, ConstructionError, Objective, Origin, SearchConstraints,
};
use crate::curve::{self, CurveError};
use crate::semigroup::{self, SemigroupError};
use crate::sharing::{self, DealerSpec, Randomness, Reconstruction, ShareBundle, SharingError};
use crate::verify::{self, Status, Suite};

pub use output::{Format, Metadata, OutputDocument, OutputError};

#[derive(Debug, Parser)]
#[command(name = "hermcodes", version, about = "Nested code pairs from the Hermitian curve")]
pub struct Cli {
    /// Output format for tables.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Work budget for brute-force searches.
    #[arg(long, global = true, env = "HERMCODES_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// H*(Q) with its σ and μ values, one grid each.
    Semigroup { q: u32 },
    /// Dimension bound, exact dimension and inclusion threshold per designed distance.
    Params { q: u32 },
    /// Nested pairs with their asymmetric quantum code parameters.
    Pairs(PairsArgs),
    /// Smallest reconstruction number per secret length for a privacy requirement.
    SssCurve {
        q: u32,
        /// Required privacy number.
        #[arg(long, default_value_t = 0)]
        t: u32,
    },
    /// Run invariant suites against brute-force oracles.
    Verify {
        q: u32,
        /// Suites to run; all when omitted.
        #[arg(long, value_enum)]
        suite: Vec<Suite>,
    },
    /// Write a generator matrix in the code text format.
    Code(CodeArgs),
    /// Build a sharing scheme file from a pair.
    Scheme {
        q: u32,
        /// improved:δ1,δ2 | lower:i,j | upper:i,j
        #[arg(long)]
        pair: PairSpec,
        /// seeded:N or os
        #[arg(long, default_value = "seeded:0")]
        randomness: Randomness,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Deal shares of a secret.
    Deal {
        #[arg(long)]
        scheme: PathBuf,
        /// Comma-separated field element indices.
        #[arg(long, conflicts_with = "secret_file")]
        secret: Option<String>,
        #[arg(long)]
        secret_file: Option<PathBuf>,
        /// Overrides the scheme's randomness with a seeded generator.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Recover a secret from a share file.
    Reconstruct {
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long)]
        shares: PathBuf,
    },
    /// Exact privacy and reconstruction numbers of a scheme.
    Audit {
        #[arg(long)]
        scheme: PathBuf,
    },
    /// Compare with generalized Reed-Solomon codes [[m1·m2, ℓ, d/(d−c)]].
    CompareGrs {
        q: u32,
        /// m1,m2,k,c tuples separated by ';'. Defaults to a built-in list for q = 3.
        #[arg(long)]
        params: Option<String>,
    },
    /// Compare with codes from Cartesian product point sets.
    CompareCartesian {
        q: u32,
        /// Entries `footprint:s,m,δ1,δ2` or `explicit:s,m,ℓ[,swap]` separated by ';'.
        /// Defaults to a built-in list for q = 3.
        #[arg(long)]
        params: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct PairsArgs {
    pub q: u32,
    #[arg(long, value_enum, default_value_t = Family::All)]
    pub family: Family,
    /// Report only the best pair for this objective.
    #[arg(long, value_enum)]
    pub objective: Option<ObjectiveArg>,
    #[arg(long, default_value_t = 0)]
    pub min_dx: u32,
    #[arg(long, default_value_t = 0)]
    pub min_dz: u32,
    #[arg(long = "min-l", default_value_t = 0)]
    pub min_l: u32,
    /// Also list small-codimension pairs with their distances exchanged.
    #[arg(long)]
    pub both_orientations: bool,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    pub q: u32,
    #[arg(long, value_enum)]
    pub kind: CodeKind,
    /// λ for one-point codes, δ otherwise.
    #[arg(long)]
    pub value: i64,
    /// Also compute the minimum distance by exhaustive search.
    #[arg(long)]
    pub distance: bool,
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CodeKind {
    Onepoint,
    Improved,
    ImprovedDualPerp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Improved,
    Lower,
    Upper,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    Dz,
    Ell,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Objective {
        match o {
            ObjectiveArg::Dz => Objective::MaximizeDz,
            ObjectiveArg::Ell => Objective::MaximizeEll,
        }
    }
}

/// A pair named on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairSpec(pub Origin);

impl FromStr for PairSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (family, rest) = s.split_once(':').ok_or_else(|| format!("expected family:a,b, got {s:?}"))?;
        let (a, b) = rest.split_once(',').ok_or_else(|| format!("expected two values in {rest:?}"))?;
        let a: u32 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
        let b: u32 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
        Ok(PairSpec(match family {
            "improved" => Origin::Improved { delta1: a, delta2: b },
            "lower" => Origin::Lower { i: a, j: b },
            "upper" => Origin::Upper { i: a, j: b },
            other => return Err(format!("unknown family {other:?}")),
        }))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Sharing(#[from] SharingError),
    #[error(transparent)]
    Output(#[from] OutputError),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{failed} verification check(s) failed")]
    VerificationFailed { failed: usize },
    #[error("secret not determined; free coordinates {0:?}")]
    Undetermined(Vec<usize>),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed { .. } => 1,
            CliError::Code(CodeError::BudgetExceeded { .. }) | CliError::Sharing(SharingError::BudgetExceeded { .. }) => 3,
            CliError::Undetermined(_) => 4,
            _ => 2,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn write_or_print(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

/// Entry point used by the binary.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match execute(&cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hermcodes: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Runs a parsed command, writing documents to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let emit = |doc: OutputDocument, out: &mut dyn Write| -> Result<(), CliError> {
        write_or_print(None, &doc.render(cli.format)?, out)
    };
    match &cli.command {
        Command::Semigroup { q } => emit(cmd_semigroup(*q)?, out),
        Command::Params { q } => emit(cmd_params(*q)?, out),
        Command::Pairs(args) => emit(cmd_pairs(args)?, out),
        Command::SssCurve { q, t } => emit(cmd_sss_curve(*q, *t)?, out),
        Command::Verify { q, suite } => {
            let (doc, failed) = cmd_verify(*q, suite, cli.budget)?;
            emit(doc, out)?;
            if failed > 0 {
                return Err(CliError::VerificationFailed { failed });
            }
            Ok(())
        }
        Command::Code(args) => cmd_code(args, cli.budget, out),
        Command::Scheme { q, pair, randomness, out: path } => {
            let spec = cmd_scheme(*q, *pair, *randomness)?;
            write_or_print(path.as_deref(), &spec.to_text(), out)
        }
        Command::Deal { scheme, secret, secret_file, seed, out: path } => {
            let spec = DealerSpec::from_text(&read(scheme)?)?;
            let secret = match (secret, secret_file) {
                (Some(s), _) => s.clone(),
                (None, Some(f)) => read(f)?,
                (None, None) => return Err(CliError::Usage("one of --secret or --secret-file is required".into())),
            };
            let bundle = cmd_deal(&spec, &secret, *seed)?;
            write_or_print(path.as_deref(), &bundle.to_text(), out)
        }
        Command::Reconstruct { scheme, shares } => {
            let spec = DealerSpec::from_text(&read(scheme)?)?;
            let bundle = ShareBundle::from_text(&read(shares)?)?;
            match sharing::reconstruct(&spec, &bundle)? {
                Reconstruction::Determined { secret } => {
                    let line = secret.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
                    write_or_print(None, &format!("{line}\n"), out)
                }
                Reconstruction::Undetermined { free } => Err(CliError::Undetermined(free)),
            }
        }
        Command::Audit { scheme } => {
            let spec = DealerSpec::from_text(&read(scheme)?)?;
            emit(cmd_audit(&spec, cli.budget)?, out)
        }
        Command::CompareGrs { q, params } => emit(cmd_compare_grs(*q, params.as_deref())?, out),
        Command::CompareCartesian { q, params } => emit(cmd_compare_cartesian(*q, params.as_deref())?, out),
    }
}

pub fn cmd_semigroup(q: u32) -> Result<OutputDocument, CliError> {
    let h = semigroup::h_star(q)?;
    let width = q * q;
    let mut cols = vec!["grid".to_string(), "j".to_string()];
    cols.extend((0..width).map(|i| i.to_string()));
    let mut doc = OutputDocument::new("semigroup", Some(q), &[]);
    doc.columns = cols;
    for grid in ["lambda", "sigma", "mu"] {
        for j in (0..q).rev() {
            let mut row = vec![grid.to_string(), j.to_string()];
            for i in 0..width {
                let l = semigroup::compose(q, i, j) as i64;
                let e = h.element(l)?;
                let v = match grid {
                    "lambda" => e.lambda,
                    "sigma" => e.sigma,
                    _ => e.mu,
                };
                row.push(v.to_string());
            }
            doc.push(row);
        }
    }
    Ok(doc)
}

pub fn cmd_params(q: u32) -> Result<OutputDocument, CliError> {
    let h = semigroup::h_star(q)?;
    let mut doc = OutputDocument::new(
        "params",
        Some(q),
        &["delta", "dim_exact", "dim_bound", "dim_rule", "delta2_max", "inclusion_rule"],
    );
    for d in h.achievable_distances() {
        let dim = analysis::dim_bound(q, d).map_err(ConstructionError::from)?;
        let (m, rule) = if d >= 2 {
            let r = analysis::delta2_max(q, d).map_err(ConstructionError::from)?;
            (r.delta2_max_formula.to_string(), format!("{:?} {}", r.rule, r.case))
        } else {
            (String::new(), String::new())
        };
        doc.push(vec![
            d.to_string(),
            dim.exact.to_string(),
            dim.bound.to_string(),
            dim.rule.label().to_string(),
            m,
            rule,
        ]);
    }
    Ok(doc)
}

const PAIR_COLUMNS: [&str; 11] =
    ["params", "n", "ell", "d_z", "d_x", "alphabet", "origin", "interchanged", "t", "r", "objective"];

fn pair_row(q: u32, c: &Candidate, objective: &str) -> Vec<String> {
    let n = q.pow(3);
    let p = AQCParams {
        n,
        ell: c.ell,
        d_z: c.d_z,
        d_x: c.d_x,
        alphabet: q * q,
        ell_at_least: false,
        impure: None,
        provenance: constructions::ParamProvenance {
            n: codes::Provenance::Formula,
            ell: codes::Provenance::Formula,
            d_z: codes::Provenance::Formula,
            d_x: codes::Provenance::Formula,
        },
    };
    vec![
        p.to_string(),
        n.to_string(),
        c.ell.to_string(),
        c.d_z.to_string(),
        c.d_x.to_string(),
        (q * q).to_string(),
        c.origin.to_string(),
        c.interchanged.to_string(),
        (c.d_x - 1).to_string(),
        (n + 1 - c.d_z).to_string(),
        objective.to_string(),
    ]
}

fn in_family(family: Family, o: &Origin) -> bool {
    matches!(
        (family, o),
        (Family::All, _)
            | (Family::Improved, Origin::Improved { .. })
            | (Family::Lower, Origin::Lower { .. })
            | (Family::Upper, Origin::Upper { .. })
    )
}

pub fn cmd_pairs(args: &PairsArgs) -> Result<OutputDocument, CliError> {
    let q = args.q;
    let all = constructions::all_candidates(q)?;
    let cands: Vec<Candidate> = all.into_iter().filter(|c| in_family(args.family, &c.origin)).collect();
    let mut doc = OutputDocument::new("pairs", Some(q), &PAIR_COLUMNS);
    let constraints = SearchConstraints { min_ell: args.min_l, min_dz: args.min_dz, min_dx: args.min_dx };
    if let Some(obj) = args.objective {
        let hit = constructions::best_pair_in(&cands, q, obj.into(), constraints)?;
        let name = match obj {
            ObjectiveArg::Dz => "max d_z",
            ObjectiveArg::Ell => "max ell",
        };
        doc.push(pair_row(q, &hit.candidate, name));
        return Ok(doc);
    }
    let mut rows: Vec<&Candidate> = cands
        .iter()
        .filter(|c| args.both_orientations || !c.interchanged)
        .filter(|c| c.ell >= args.min_l && c.d_z >= args.min_dz && c.d_x >= args.min_dx)
        .collect();
    if rows.is_empty() {
        return Err(ConstructionError::NoFeasiblePair.into());
    }
    rows.sort_by_key(|c| (c.ell, c.d_z, c.d_x, c.origin, c.interchanged));
    for c in rows {
        doc.push(pair_row(q, c, ""));
    }
    Ok(doc)
}

pub fn cmd_sss_curve(q: u32, t: u32) -> Result<OutputDocument, CliError> {
    semigroup::check_q(q)?;
    let n = q.pow(3);
    if t >= n {
        return Err(CliError::Usage(format!("t must be below n = {n}")));
    }
    let mut doc = OutputDocument::new(
        "sss-curve",
        Some(q),
        &["ell", "r", "t", "source", "baseline_r", "baseline_t", "baseline_source", "gap_bound", "r_lower_bound"],
    );
    let opt = |v: Option<u32>| v.map(|v| v.to_string()).unwrap_or_default();
    for p in constructions::sss_curve(q, t)? {
        doc.push(vec![
            p.ell.to_string(),
            opt(p.r),
            opt(p.t),
            p.source.clone().unwrap_or_default(),
            opt(p.baseline_r),
            opt(p.baseline_t),
            p.baseline_source.clone().unwrap_or_default(),
            p.gap_bound.to_string(),
            p.r_lower_bound.to_string(),
        ]);
    }
    Ok(doc)
}

/// The report document and the number of failed checks.
pub fn cmd_verify(q: u32, suites: &[Suite], budget: u64) -> Result<(OutputDocument, usize), CliError> {
    let suites = if suites.is_empty() { &Suite::ALL[..] } else { suites };
    let report = verify::run(q, suites, budget).map_err(|e| match e {
        verify::VerifyError::Semigroup(e) => CliError::Semigroup(e),
        verify::VerifyError::Curve(e) => CliError::Curve(e),
    })?;
    let mut doc = OutputDocument::new("verify", Some(q), &["suite", "check", "status", "detail"]);
    for c in &report.checks {
        doc.push(vec![c.suite.to_string(), c.name.clone(), c.status.to_string(), c.detail.clone()]);
    }
    eprintln!(
        "{} passed, {} failed, {} skipped",
        report.passed(),
        report.failed(),
        report.checks.iter().filter(|c| c.status == Status::Skipped).count()
    );
    Ok((doc, report.failed()))
}

fn cmd_code(args: &CodeArgs, budget: u64, out: &mut dyn Write) -> Result<(), CliError> {
    let ctx = curve::curve_create(args.q)?;
    let delta = || u32::try_from(args.value).map_err(|_| CliError::Usage(format!("δ = {} is negative", args.value)));
    let code: LinearCode = match args.kind {
        CodeKind::Onepoint => codes::onepoint_code(&ctx, args.value),
        CodeKind::Improved => codes::improved_primary(&ctx, delta()?)?,
        CodeKind::ImprovedDualPerp => codes::improved_dual_perp(&ctx, delta()?)?,
    };
    write_or_print(args.out.as_deref(), &code.to_text(), out)?;
    if args.distance {
        let rep = codes::min_distance(&code, codes::DistanceOptions::with_budget(budget))?;
        eprintln!("minimum distance {} ({} visits)", rep.distance, rep.visits);
    }
    Ok(())
}

pub fn build_pair(q: u32, spec: PairSpec) -> Result<Construction, CliError> {
    let ctx = curve::curve_create(q)?;
    Ok(match spec.0 {
        Origin::Improved { delta1, delta2 } => constructions::improved_pair(&ctx, delta1, delta2)?,
        Origin::Lower { i, j } => constructions::small_codim_pair_lower(&ctx, i, j)?,
        Origin::Upper { i, j } => constructions::small_codim_pair_upper(&ctx, i, j)?,
    })
}

pub fn cmd_scheme(q: u32, pair: PairSpec, randomness: Randomness) -> Result<DealerSpec, CliError> {
    Ok(DealerSpec::from_pair(&build_pair(q, pair)?.pair, randomness))
}

pub fn parse_secret(text: &str) -> Result<Vec<u16>, CliError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u16>().map_err(|e| CliError::Usage(format!("secret value {s:?}: {e}"))))
        .collect()
}

pub fn cmd_deal(spec: &DealerSpec, secret: &str, seed: Option<u64>) -> Result<ShareBundle, CliError> {
    let secret = parse_secret(secret)?;
    let mut spec = spec.clone();
    if let Some(s) = seed {
        spec.randomness = Randomness::Seeded(s);
    }
    Ok(sharing::deal(&spec, &secret)?)
}

pub fn cmd_audit(spec: &DealerSpec, budget: u64) -> Result<OutputDocument, CliError> {
    let a = sharing::audit(spec, budget)?;
    let mut doc = OutputDocument::new("audit", None, &["scheme", "n", "ell", "t", "r", "leaking_set", "undetermined_set", "subsets"]);
    let set = |s: &Option<Vec<usize>>| {
        s.as_ref().map(|v| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")).unwrap_or_default()
    };
    doc.push(vec![
        spec.scheme_id().to_string(),
        a.n.to_string(),
        a.ell.to_string(),
        a.privacy_number.to_string(),
        a.reconstruction_number.to_string(),
        set(&a.leaking_set),
        set(&a.undetermined_set),
        a.subsets_checked.to_string(),
    ]);
    Ok(doc)
}

/// Default (m1, m2, k, c) inputs for `compare-grs` at q = 3.
pub const GRS_DEFAULTS_Q3: [(u32, u32, u32, u32); 32] = [
    (2, 13, 2, 10),
    (2, 13, 3, 8),
    (2, 13, 4, 6),
    (2, 13, 5, 4),
    (2, 13, 6, 2),
    (3, 9, 3, 4),
    (3, 9, 4, 2),
    (2, 13, 3, 9),
    (2, 13, 4, 7),
    (2, 13, 5, 5),
    (2, 13, 6, 3),
    (2, 13, 7, 1),
    (2, 13, 4, 8),
    (2, 13, 5, 6),
    (2, 13, 6, 4),
    (2, 13, 7, 2),
    (2, 13, 5, 7),
    (2, 13, 6, 5),
    (2, 13, 7, 3),
    (2, 13, 8, 1),
    (2, 13, 6, 6),
    (2, 13, 7, 4),
    (2, 13, 8, 2),
    (2, 13, 7, 5),
    (2, 13, 8, 3),
    (2, 13, 9, 1),
    (2, 13, 8, 4),
    (2, 13, 9, 2),
    (2, 13, 9, 3),
    (2, 13, 10, 1),
    (2, 13, 10, 2),
    (2, 13, 11, 1),
];

/// An input to `compare-cartesian`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartesianInput {
    /// Footprint-bound codes of length `s^m` with distances `δ1/δ2`.
    Footprint { s: u32, m: u32, delta1: u32, delta2: u32 },
    /// Codes of length `s²` with explicit distances.
    Explicit { s: u32, m: u32, ell: u32, interchange: bool },
}

impl FromStr for CartesianInput {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, rest) = s.trim().split_once(':').ok_or_else(|| format!("expected kind:values, got {s:?}"))?;
        let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
        let num = |i: usize| -> Result<u32, String> {
            parts.get(i).ok_or_else(|| format!("missing value {} in {rest:?}", i + 1))?.parse().map_err(|e| format!("{e}"))
        };
        match kind.trim() {
            "footprint" if parts.len() == 4 => {
                Ok(CartesianInput::Footprint { s: num(0)?, m: num(1)?, delta1: num(2)?, delta2: num(3)? })
            }
            "explicit" if parts.len() == 3 || (parts.len() == 4 && parts[3] == "swap") => Ok(CartesianInput::Explicit {
                s: num(0)?,
                m: num(1)?,
                ell: num(2)?,
                interchange: parts.len() == 4,
            }),
            _ => Err(format!("cannot parse {s:?}")),
        }
    }
}

/// Default inputs for `compare-cartesian` at q = 3.
pub const CARTESIAN_DEFAULTS_Q3: [CartesianInput; 19] = {
    use CartesianInput::{Explicit as E, Footprint as F};
    [
        E { s: 5, m: 2, ell: 1, interchange: false },
        E { s: 5, m: 4, ell: 1, interchange: false },
        E { s: 5, m: 1, ell: 2, interchange: false },
        E { s: 5, m: 3, ell: 2, interchange: false },
        E { s: 5, m: 2, ell: 3, interchange: false },
        E { s: 5, m: 4, ell: 3, interchange: false },
        E { s: 5, m: 3, ell: 4, interchange: false },
        F { s: 5, m: 2, delta1: 7, delta2: 1 },
        E { s: 5, m: 4, ell: 5, interchange: false },
        F { s: 5, m: 2, delta1: 6, delta2: 1 },
        F { s: 5, m: 2, delta1: 4, delta2: 2 },
        F { s: 5, m: 2, delta1: 3, delta2: 3 },
        F { s: 5, m: 2, delta1: 5, delta2: 1 },
        F { s: 5, m: 2, delta1: 3, delta2: 2 },
        F { s: 5, m: 2, delta1: 4, delta2: 1 },
        F { s: 5, m: 2, delta1: 2, delta2: 2 },
        F { s: 5, m: 2, delta1: 3, delta2: 1 },
        F { s: 5, m: 2, delta1: 2, delta2: 1 },
        F { s: 5, m: 2, delta1: 1, delta2: 1 },
    ]
};

const COMPARE_COLUMNS: [&str; 6] = ["input", "reference", "max_dz", "max_dz_origin", "max_ell", "max_ell_origin"];

/// The reference code and our best pairs matching it: `d_z` maximized with
/// `ℓ` and `d_x` kept, and `ℓ` maximized with both distances kept.
pub fn compare_row(q: u32, cands: &[Candidate], input: String, reference: &AQCParams) -> Result<Vec<String>, CliError> {
    let (ell, d_z, d_x) = (reference.ell, reference.d_z, reference.d_x);
    let by_dz = constructions::best_pair_in(
        cands,
        q,
        Objective::MaximizeDz,
        SearchConstraints { min_ell: ell, min_dz: 0, min_dx: d_x },
    )?;
    let by_ell = constructions::best_pair_in(
        cands,
        q,
        Objective::MaximizeEll,
        SearchConstraints { min_ell: 0, min_dz: d_z, min_dx: d_x },
    )?;
    let label = |c: &Candidate| c.label();
    Ok(vec![
        input,
        reference.to_string(),
        by_dz.params.to_string(),
        label(&by_dz.candidate),
        by_ell.params.to_string(),
        label(&by_ell.candidate),
    ])
}

fn parse_list<T: FromStr<Err = String>>(text: &str) -> Result<Vec<T>, CliError> {
    text.split(';').filter(|s| !s.trim().is_empty()).map(|s| s.parse().map_err(CliError::Usage)).collect()
}

struct GrsInput(u32, u32, u32, u32);

impl FromStr for GrsInput {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let v: Vec<u32> = s.split(',').map(|p| p.trim().parse().map_err(|e| format!("{p:?}: {e}"))).collect::<Result<_, _>>()?;
        match v[..] {
            [a, b, c, d] => Ok(GrsInput(a, b, c, d)),
            _ => Err(format!("expected m1,m2,k,c, got {s:?}")),
        }
    }
}

fn defaults_required(q: u32) -> Result<(), CliError> {
    if q == 3 {
        Ok(())
    } else {
        Err(CliError::Usage("--params is required for q other than 3".into()))
    }
}

pub fn cmd_compare_grs(q: u32, params: Option<&str>) -> Result<OutputDocument, CliError> {
    let inputs: Vec<(u32, u32, u32, u32)> = match params {
        Some(p) => parse_list::<GrsInput>(p)?.into_iter().map(|g| (g.0, g.1, g.2, g.3)).collect(),
        None => {
            defaults_required(q)?;
            GRS_DEFAULTS_Q3.to_vec()
        }
    };
    let n = q.pow(3);
    let cands = constructions::all_candidates(q)?;
    let mut doc = OutputDocument::new("compare-grs", Some(q), &COMPARE_COLUMNS);
    for (m1, m2, k, c) in inputs {
        let reference = constructions::pad_to_length(&constructions::grs_subfield_params(q, m1, m2, k, c)?, n)?;
        doc.push(compare_row(q, &cands, format!("({m1},{m2},{k},{c})"), &reference)?);
    }
    Ok(doc)
}

pub fn cartesian_reference(q: u32, input: CartesianInput) -> Result<AQCParams, CliError> {
    Ok(match input {
        CartesianInput::Footprint { s, m, delta1, delta2 } => {
            constructions::cartesian_params_footprint(q, s, m, delta1, delta2)?
        }
        CartesianInput::Explicit { s, m, ell, interchange } => {
            constructions::cartesian_params_explicit(q, s, m, ell, interchange)?
        }
    })
}

pub fn cmd_compare_cartesian(q: u32, params: Option<&str>) -> Result<OutputDocument, CliError> {
    let inputs: Vec<CartesianInput> = match params {
        Some(p) => parse_list(p)?,
        None => {
            defaults_required(q)?;
            CARTESIAN_DEFAULTS_Q3.to_vec()
        }
    };
    let n = q.pow(3);
    let cands = constructions::all_candidates(q)?;
    let mut doc = OutputDocument::new("compare-cartesian", Some(q), &COMPARE_COLUMNS);
    for input in inputs {
        let reference = constructions::pad_to_length(&cartesian_reference(q, input)?, n)?;
        let label = match input {
            CartesianInput::Footprint { s, m, delta1, delta2 } => format!("footprint:{s},{m},{delta1},{delta2}"),
            CartesianInput::Explicit { s, m, ell, interchange } => {
                format!("explicit:{s},{m},{ell}{}", if interchange { ",swap" } else { "" })
            }
        };
        // the footprint ℓ is only a lower bound; compare against its value
        let mut exact = reference;
        exact.ell_at_least = false;
        let mut row = compare_row(q, &cands, label, &exact)?;
        row[1] = reference.to_string();
        doc.push(row);
    }
    Ok(doc)
}
