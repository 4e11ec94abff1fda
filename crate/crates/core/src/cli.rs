//! Command-line front end. Exit codes: 0 when the property holds or the
//! command succeeded, 1 when the property fails, 2 for usage and input
//! errors, 3 when an enumeration cap is exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{check_cap, Algebra, DEFAULT_CAP};
use crate::constructions::{self as cons, BlockShape};
use crate::error::Error;
use crate::io::{self, ModuleFile, ParseError};
use crate::linalg::{Matrix, Residue};
use crate::slip::{self, SlipOptions};
use crate::suite;
use crate::zpd::{self, ZpdOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Environment variable that overrides the default enumeration cap.
pub const CAP_ENV: &str = "SLIPLAB_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "sliplab",
    version,
    about = "Exact SLIP and zero-product tests for finite-dimensional algebras over GF(p)"
)]
pub struct Cli {
    /// Largest p^dim that may be enumerated [default: 1048576, or $SLIPLAB_CAP]
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: Option<u64>,
    /// Enumerate every point even when the answer is already determined
    #[arg(long, global = true)]
    pub no_early_stop: bool,
    /// Emit a single JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the output to FILE instead of stdout
    #[arg(short = 'o', long = "output", global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether every LIP map is a left multiplier
    CheckSlip { algebra: PathBuf },
    /// Decide whether the algebra is zero product determined
    CheckZpd { algebra: PathBuf },
    /// Print a basis of the LIP maps
    LipBasis { algebra: PathBuf },
    /// Print a LIP map that is not a left multiplier, if there is one
    Witness { algebra: PathBuf },
    /// List idempotents by exhaustive search
    Idempotents {
        algebra: PathBuf,
        /// Only left semicentral ones
        #[arg(long)]
        semicentral: bool,
    },
    /// Split a LIP map along a left semicentral idempotent
    Decompose {
        algebra: PathBuf,
        map: PathBuf,
        /// Position in the list printed by `idempotents --semicentral`
        idem_index: usize,
    },
    /// Build an algebra file
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        /// Also write the canonical triangulating idempotents to FILE
        #[arg(long, global = true, value_name = "FILE")]
        idems: Option<PathBuf>,
    },
    /// Build a bimodule file; needs -o, algebra files are written beside it
    ConstructBimodule {
        #[command(subcommand)]
        kind: BimoduleKind,
    },
    /// Check a list of left triangulating idempotents
    VerifyTriangulating { algebra: PathBuf, idems: PathBuf },
    /// Reproduce the table of checked claims
    PaperSuite,
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    /// GF(p)
    Field { p: u64 },
    /// GF(p)[x]/(x^2)
    U { p: u64 },
    /// n x n matrices over an algebra
    Matn { algebra: PathBuf, n: usize },
    /// Upper triangular n x n matrices over an algebra
    Tn { algebra: PathBuf, n: usize },
    /// Block upper triangular matrices, block sizes separated by commas
    Block {
        algebra: PathBuf,
        #[arg(value_delimiter = ',', required = true)]
        kbar: Vec<usize>,
    },
    /// Tri(A, M, B) from a bimodule file
    Tri { bimodule: PathBuf },
    /// Direct product
    Product { a: PathBuf, b: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum BimoduleKind {
    /// A as an (A, A)-bimodule
    Regular { algebra: PathBuf },
    /// A as an (A, GF(p))-bimodule
    ScalarRight { algebra: PathBuf },
    /// B as a (GF(p), B)-bimodule
    ScalarLeft { algebra: PathBuf },
    /// A as an (A x A, A)-bimodule with (a, b) x = a x
    E3 { algebra: PathBuf },
    /// A as an (A x B, A)-bimodule with (a, b) x = a x
    Mixed { a: PathBuf, b: PathBuf },
    /// r x s matrices as an (M_r(A), M_s(A))-bimodule
    Matrix { algebra: PathBuf, r: usize, s: usize },
    /// The zero (A, B)-bimodule
    Zero { a: PathBuf, b: PathBuf },
}

/// Effective settings for one run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub cap: u64,
    pub early_stop: bool,
    pub json: bool,
}

impl RunConfig {
    fn slip(&self) -> SlipOptions {
        SlipOptions { cap: self.cap, early_stop: self.early_stop, projective: true }
    }
    fn zpd(&self) -> ZpdOptions {
        ZpdOptions { cap: self.cap, early_stop: self.early_stop }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Parse(ParseError),
    Core(Error),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn is_cap(e: &Error) -> bool {
    matches!(e, Error::EnumerationCapExceeded { .. } | Error::LatticeCapExceeded { .. })
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Core(e) if is_cap(e) => EXIT_CAP,
            CliError::Parse(p) if p.core_error().is_some_and(is_cap) => EXIT_CAP,
            _ => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// What a command produced: the text to emit and the exit code.
struct Outcome {
    body: String,
    code: i32,
}

fn rows_of(m: &Matrix) -> Vec<Vec<Residue>> {
    m.row_vectors().map(<[Residue]>::to_vec).collect()
}

fn render<T: Serialize>(cfg: &RunConfig, value: &T, text: impl FnOnce() -> String) -> String {
    if cfg.json {
        let mut s = serde_json::to_string_pretty(value).expect("report serializes");
        s.push('\n');
        s
    } else {
        text()
    }
}

fn load(path: &Path) -> CliResult<Algebra> {
    Ok(io::read_algebra(path)?)
}

fn shown(path: &Path) -> String {
    path.display().to_string()
}

#[derive(Serialize)]
struct SlipOut {
    algebra: String,
    field: u32,
    dim: usize,
    multiplier_dim: usize,
    lip_dim: usize,
    is_slip: bool,
    points_processed: u64,
    early_stop: bool,
    witness: Option<Vec<Vec<Residue>>>,
}

fn cmd_check_slip(cfg: &RunConfig, path: &Path) -> CliResult<Outcome> {
    let a = load(path)?;
    let r = slip::is_slip(&a, cfg.slip())?;
    let out = SlipOut {
        algebra: shown(path),
        field: a.field().modulus(),
        dim: a.dim(),
        multiplier_dim: r.multiplier_dim,
        lip_dim: r.lip_dim,
        is_slip: r.is_slip,
        points_processed: r.points_processed,
        early_stop: r.early_stop,
        witness: r.witness.as_ref().map(|w| rows_of(w.matrix())),
    };
    let body = render(cfg, &out, || {
        let mut s = format!(
            "algebra: {}\nfield: {}\ndim: {}\nmultiplier_dim: {}\nlip_dim: {}\nis_slip: {}\npoints_processed: {}\nearly_stop: {}\n",
            out.algebra, out.field, out.dim, out.multiplier_dim, out.lip_dim, out.is_slip, out.points_processed, out.early_stop
        );
        if let Some(w) = &r.witness {
            s += "witness:\n";
            s += &io::serialize_map(w);
        }
        s
    });
    Ok(Outcome { body, code: if r.is_slip { EXIT_OK } else { EXIT_FAILS } })
}

#[derive(Serialize)]
struct ZpdOut {
    algebra: String,
    field: u32,
    dim: usize,
    span_dim: usize,
    kernel_dim: usize,
    is_zpd: bool,
    points_processed: u64,
}

fn cmd_check_zpd(cfg: &RunConfig, path: &Path) -> CliResult<Outcome> {
    let a = load(path)?;
    let r = zpd::is_zpd(&a, cfg.zpd())?;
    let out = ZpdOut {
        algebra: shown(path),
        field: a.field().modulus(),
        dim: a.dim(),
        span_dim: r.span_dim,
        kernel_dim: r.kernel_dim,
        is_zpd: r.is_zpd,
        points_processed: r.points_processed,
    };
    let body = render(cfg, &out, || {
        format!(
            "algebra: {}\nfield: {}\ndim: {}\nspan_dim: {}\nkernel_dim: {}\nis_zpd: {}\npoints_processed: {}\n",
            out.algebra, out.field, out.dim, out.span_dim, out.kernel_dim, out.is_zpd, out.points_processed
        )
    });
    Ok(Outcome { body, code: if r.is_zpd { EXIT_OK } else { EXIT_FAILS } })
}

#[derive(Serialize)]
struct LipBasisOut {
    algebra: String,
    field: u32,
    dim: usize,
    multiplier_dim: usize,
    lip_dim: usize,
    basis: Vec<Vec<Vec<Residue>>>,
}

fn cmd_lip_basis(cfg: &RunConfig, path: &Path) -> CliResult<Outcome> {
    let a = load(path)?;
    // no early stop here would change nothing: the space is exact either way
    let run = slip::lip_space(&a, cfg.slip())?;
    let basis = run.space.basis();
    let out = LipBasisOut {
        algebra: shown(path),
        field: a.field().modulus(),
        dim: a.dim(),
        multiplier_dim: slip::left_multiplier_space(&a).dim(),
        lip_dim: run.space.dim(),
        basis: basis.iter().map(|m| rows_of(m.matrix())).collect(),
    };
    let body = render(cfg, &out, || {
        let mut s = format!("# lip_dim {} multiplier_dim {}\n", out.lip_dim, out.multiplier_dim);
        for (k, m) in basis.iter().enumerate() {
            s += &format!("# map {k}\n{}", io::serialize_map(m));
        }
        s
    });
    Ok(Outcome { body, code: EXIT_OK })
}

#[derive(Serialize)]
struct WitnessOut {
    algebra: String,
    is_slip: bool,
    witness: Option<Vec<Vec<Residue>>>,
}

fn cmd_witness(cfg: &RunConfig, path: &Path) -> CliResult<Outcome> {
    let a = load(path)?;
    let r = slip::is_slip(&a, cfg.slip())?;
    let out = WitnessOut {
        algebra: shown(path),
        is_slip: r.is_slip,
        witness: r.witness.as_ref().map(|w| rows_of(w.matrix())),
    };
    let body = render(cfg, &out, || match &r.witness {
        Some(w) => io::serialize_map(w),
        None => "# no witness: every LIP map is a left multiplier\n".to_string(),
    });
    Ok(Outcome { body, code: if r.is_slip { EXIT_OK } else { EXIT_FAILS } })
}

#[derive(Serialize)]
struct IdempotentsOut {
    algebra: String,
    semicentral: bool,
    count: usize,
    idempotents: Vec<Vec<Residue>>,
}

fn listed_idempotents(cfg: &RunConfig, a: &Algebra, semicentral: bool) -> CliResult<Vec<Vec<Residue>>> {
    check_cap(a.field(), a.dim(), cfg.cap)?;
    let rep = a.idempotents(cfg.cap);
    Ok(if semicentral { rep.left_semicentral } else { rep.idempotents })
}

fn cmd_idempotents(cfg: &RunConfig, path: &Path, semicentral: bool) -> CliResult<Outcome> {
    let a = load(path)?;
    let list = listed_idempotents(cfg, &a, semicentral)?;
    let out = IdempotentsOut { algebra: shown(path), semicentral, count: list.len(), idempotents: list };
    let body = render(cfg, &out, || io::serialize_elements(&out.idempotents));
    Ok(Outcome { body, code: EXIT_OK })
}

#[derive(Serialize)]
struct DecomposeOut {
    algebra: String,
    idempotent: Vec<Residue>,
    dims: [usize; 3],
    alpha: Vec<Vec<Residue>>,
    tau: Vec<Vec<Residue>>,
    beta1: Vec<Vec<Residue>>,
    beta2: Vec<Vec<Residue>>,
    tau_compatible: bool,
    alpha_lip: bool,
    beta2_lip: bool,
    beta1_local: bool,
    passed: bool,
}

fn cmd_decompose(cfg: &RunConfig, path: &Path, map: &Path, index: usize) -> CliResult<Outcome> {
    let t = load(path)?;
    let psi = io::read_map(map, t.field())?;
    if psi.domain_dim() != t.dim() || psi.codomain_dim() != t.dim() {
        return Err(CliError::Usage(format!("map must be {0} x {0}", t.dim())));
    }
    let list = listed_idempotents(cfg, &t, true)?;
    let e = list.get(index).ok_or_else(|| {
        CliError::Usage(format!("idempotent index {index} out of range: {} left semicentral idempotents", list.len()))
    })?;
    let dec = slip::decompose_lip_triangular(&t, e, &psi, cfg.slip());
    let d = match dec {
        Err(e @ Error::BlockStructureViolated { .. }) => {
            return Ok(Outcome { body: format!("block structure violated: {e}\n"), code: EXIT_FAILS });
        }
        other => other?,
    };
    let split = t.peirce_split(e)?;
    let (ka, km, kb) = split.dims();
    let out = DecomposeOut {
        algebra: shown(path),
        idempotent: e.clone(),
        dims: [ka, km, kb],
        alpha: rows_of(d.alpha.matrix()),
        tau: rows_of(d.tau.matrix()),
        beta1: rows_of(d.beta1.matrix()),
        beta2: rows_of(d.beta2.matrix()),
        tau_compatible: d.tau_compatible,
        alpha_lip: d.alpha_lip,
        beta2_lip: d.beta2_lip,
        beta1_local: d.beta1_local,
        passed: d.all_passed(),
    };
    let body = render(cfg, &out, || {
        let mut s = format!("idempotent: {}\ndims: {} {} {}\n", join(e), ka, km, kb);
        for (name, m) in [("alpha", &d.alpha), ("tau", &d.tau), ("beta1", &d.beta1), ("beta2", &d.beta2)] {
            s += &format!("{name}:\n{}", io::serialize_map(m));
        }
        s += &format!(
            "tau_compatible: {}\nalpha_lip: {}\nbeta2_lip: {}\nbeta1_local: {}\npassed: {}\n",
            out.tau_compatible, out.alpha_lip, out.beta2_lip, out.beta1_local, out.passed
        );
        s
    });
    Ok(Outcome { body, code: if out.passed { EXIT_OK } else { EXIT_FAILS } })
}

fn join(v: &[Residue]) -> String {
    v.iter().map(Residue::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct WrittenOut {
    path: String,
    field: u32,
    dim: usize,
}

/// Writes `contents` to `-o` (with a short report on stdout) or, without
/// `-o`, returns it as the command output.
fn emit_artifact(
    cfg: &RunConfig,
    output: Option<&Path>,
    contents: String,
    field: u32,
    dim: usize,
) -> CliResult<Outcome> {
    match output {
        None => Ok(Outcome { body: contents, code: EXIT_OK }),
        Some(p) => {
            write_file(p, &contents)?;
            let out = WrittenOut { path: shown(p), field, dim };
            let body = render(cfg, &out, || format!("wrote {} (field {}, dim {})\n", out.path, out.field, out.dim));
            Ok(Outcome { body, code: EXIT_OK })
        }
    }
}

fn write_file(p: &Path, contents: &str) -> CliResult<()> {
    std::fs::write(p, contents).map_err(|e| CliError::Parse(ParseError::Io { path: p.to_path_buf(), source: e }))
}

fn cmd_construct(
    cfg: &RunConfig,
    kind: &ConstructKind,
    idems: Option<&Path>,
    output: Option<&Path>,
) -> CliResult<Outcome> {
    let complement_pair = |a: &Algebra, e: Vec<Residue>| vec![e.clone(), a.complement(&e)];
    let (alg, tri_idems) = match kind {
        ConstructKind::Field { p } => {
            let a = cons::scalar_field(*p)?;
            let one = a.unit().to_vec();
            (a, vec![one])
        }
        ConstructKind::U { p } => {
            let a = cons::u_dual_numbers(*p)?;
            let one = a.unit().to_vec();
            (a, vec![one])
        }
        ConstructKind::Matn { algebra, n } => {
            if *n == 0 {
                return Err(CliError::Usage("n must be at least 1".into()));
            }
            cons::block_upper(&load(algebra)?, &BlockShape::new(vec![*n])?)?
        }
        ConstructKind::Tn { algebra, n } => {
            if *n == 0 {
                return Err(CliError::Usage("n must be at least 1".into()));
            }
            cons::block_upper(&load(algebra)?, &BlockShape::new(vec![1; *n])?)?
        }
        ConstructKind::Block { algebra, kbar } => {
            let shape =
                BlockShape::new(kbar.clone()).map_err(|_| CliError::Usage("block sizes must be positive".into()))?;
            cons::block_upper(&load(algebra)?, &shape)?
        }
        ConstructKind::Tri { bimodule } => match io::read_module(bimodule)? {
            ModuleFile::Bi(m) => {
                let (t, e) = cons::triangular(m.left(), &m, m.right())?;
                let pair = complement_pair(&t, e);
                (t, pair)
            }
            ModuleFile::Right(_) => return Err(CliError::Usage("tri needs a bimodule file (with `left`)".into())),
        },
        ConstructKind::Product { a, b } => {
            let (a, b) = (load(a)?, load(b)?);
            let p = cons::direct_product(&a, &b)?;
            let mut e = a.unit().to_vec();
            e.extend(std::iter::repeat_n(0, b.dim()));
            let pair = complement_pair(&p, e);
            (p, pair)
        }
    };
    if let Some(path) = idems {
        write_file(path, &io::serialize_elements(&tri_idems))?;
    }
    emit_artifact(cfg, output, io::serialize_algebra(&alg), alg.field().modulus(), alg.dim())
}

fn cmd_construct_bimodule(cfg: &RunConfig, kind: &BimoduleKind, output: Option<&Path>) -> CliResult<Outcome> {
    let output = output.ok_or_else(|| CliError::Usage("construct-bimodule needs -o FILE".into()))?;
    let m = match kind {
        BimoduleKind::Regular { algebra } => cons::regular_bimodule(&load(algebra)?)?,
        BimoduleKind::ScalarRight { algebra } => cons::scalar_right_bimodule(&load(algebra)?)?,
        BimoduleKind::ScalarLeft { algebra } => cons::scalar_left_bimodule(&load(algebra)?)?,
        BimoduleKind::E3 { algebra } => cons::e3_bimodule(&load(algebra)?)?,
        BimoduleKind::Mixed { a, b } => cons::mixed_bimodule(&load(a)?, &load(b)?)?,
        BimoduleKind::Matrix { algebra, r, s } => {
            if *r == 0 || *s == 0 {
                return Err(CliError::Usage("r and s must be at least 1".into()));
            }
            cons::matrix_bimodule(&load(algebra)?, *r, *s)?
        }
        BimoduleKind::Zero { a, b } => cons::zero_bimodule(&load(a)?, &load(b)?)?,
    };
    let stem = output.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "bimodule".into());
    let dir = output.parent().map(Path::to_path_buf).unwrap_or_default();
    let (left_name, over_name) = (format!("{stem}.left.alg"), format!("{stem}.over.alg"));
    write_file(&dir.join(&left_name), &io::serialize_algebra(m.left()))?;
    write_file(&dir.join(&over_name), &io::serialize_algebra(m.right()))?;
    write_file(output, &io::serialize_bimodule(&m, &left_name, &over_name))?;
    let out = WrittenOut { path: shown(output), field: m.left().field().modulus(), dim: m.dim() };
    let body = render(cfg, &out, || format!("wrote {} (field {}, dim {})\n", out.path, out.field, out.dim));
    Ok(Outcome { body, code: EXIT_OK })
}

#[derive(Serialize)]
struct TriangulatingOut {
    algebra: String,
    count: usize,
    triangulating: bool,
    failure: Option<String>,
}

fn cmd_verify_triangulating(cfg: &RunConfig, path: &Path, idems: &Path) -> CliResult<Outcome> {
    let a = load(path)?;
    let list = io::read_elements(idems, a.field(), a.dim())?;
    let failure = match cons::verify_triangulating(&a, &list) {
        Ok(()) => None,
        Err(Error::NotTriangulating(msg)) => Some(msg),
        Err(e) => return Err(e.into()),
    };
    let out = TriangulatingOut { algebra: shown(path), count: list.len(), triangulating: failure.is_none(), failure };
    let body = render(cfg, &out, || match &out.failure {
        None => format!("triangulating: true\ncount: {}\n", out.count),
        Some(f) => format!("triangulating: false\ncount: {}\nfailed: {f}\n", out.count),
    });
    Ok(Outcome { body, code: if out.triangulating { EXIT_OK } else { EXIT_FAILS } })
}

fn cmd_paper_suite(cfg: &RunConfig, err: &mut dyn Write) -> CliResult<Outcome> {
    let (report, times) = suite::run_suite(cfg.slip())?;
    for (row, t) in report.criteria.iter().zip(&times) {
        let _ = writeln!(err, "criterion {:2}: {:.3} s", row.id, t.as_secs_f64());
    }
    let body = render(cfg, &report, || report.to_text());
    Ok(Outcome { body, code: if report.passed { EXIT_OK } else { EXIT_FAILS } })
}

/// Resolves the cap from the flag, then `SLIPLAB_CAP`, then the default.
pub fn resolve_cap(flag: Option<u64>, env: Option<&str>) -> Result<u64, String> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match env {
        None => Ok(DEFAULT_CAP),
        Some(s) => match s.trim().parse::<u64>() {
            Ok(c) if c >= 1 => Ok(c),
            _ => Err(format!("{CAP_ENV} must be a positive integer, found `{s}`")),
        },
    }
}

/// Runs a parsed command line; the report goes to `out` (or `-o`),
/// diagnostics and timing to `err`. Returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let env = std::env::var(CAP_ENV).ok();
    let cap = match resolve_cap(cli.cap, env.as_deref()) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let cfg = RunConfig { cap, early_stop: !cli.no_early_stop, json: cli.json };
    let start = Instant::now();
    let output = cli.output.as_deref();
    // construct commands treat -o as the artifact path
    let artifact = matches!(cli.command, Command::Construct { .. } | Command::ConstructBimodule { .. });
    let result = match &cli.command {
        Command::CheckSlip { algebra } => cmd_check_slip(&cfg, algebra),
        Command::CheckZpd { algebra } => cmd_check_zpd(&cfg, algebra),
        Command::LipBasis { algebra } => cmd_lip_basis(&cfg, algebra),
        Command::Witness { algebra } => cmd_witness(&cfg, algebra),
        Command::Idempotents { algebra, semicentral } => cmd_idempotents(&cfg, algebra, *semicentral),
        Command::Decompose { algebra, map, idem_index } => cmd_decompose(&cfg, algebra, map, *idem_index),
        Command::Construct { kind, idems } => cmd_construct(&cfg, kind, idems.as_deref(), output),
        Command::ConstructBimodule { kind } => cmd_construct_bimodule(&cfg, kind, output),
        Command::VerifyTriangulating { algebra, idems } => cmd_verify_triangulating(&cfg, algebra, idems),
        Command::PaperSuite => cmd_paper_suite(&cfg, err),
    };
    let _ = writeln!(err, "elapsed: {:.3} s", start.elapsed().as_secs_f64());
    match result {
        Ok(o) => {
            let written = match output {
                Some(p) if !artifact => std::fs::write(p, &o.body),
                _ => out.write_all(o.body.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_resolution() {
        assert_eq!(resolve_cap(Some(5), Some("7")), Ok(5));
        assert_eq!(resolve_cap(None, Some("7")), Ok(7));
        assert_eq!(resolve_cap(None, None), Ok(DEFAULT_CAP));
        assert!(resolve_cap(None, Some("0")).is_err());
        assert!(resolve_cap(None, Some("lots")).is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn error_codes() {
        let cap = CliError::Core(Error::EnumerationCapExceeded { p: 2, dim: 30, cap: 10 });
        assert_eq!(cap.code(), EXIT_CAP);
        assert_eq!(CliError::Core(Error::NotLip).code(), EXIT_USAGE);
        assert_eq!(CliError::Usage("x".into()).code(), EXIT_USAGE);
    }
}
