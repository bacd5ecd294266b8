use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use hopfgal::config::{Config, OutputFormat};
use hopfgal::fdalg::{form_rank, Violation};
use hopfgal::galois::{
    equivariance_paths, frobenius_form, twisted_product, CocycleJson, Eq3Convention, GroupSplittingJson, HopfSource,
};
use hopfgal::json::{scalar_in, AlgebraJson, ScalarRepr};
use hopfgal::reslie::{
    chi_convention, fiber_algebra_capped, fiber_coaction_with, find_one_dim_rep, winding_iso, FiberPoint, LieJson,
    RestrictedLie,
};
use hopfgal::speclab::{
    all_points, analyze_point, borel_algebra, reports_to_csv, scan, sl2_algebra, ScanContext, MAX_POINTS,
};
use hopfgal::{Error, Field};

#[derive(Parser)]
#[command(name = "hopfgal", version, about = "Exact computations with finite-dimensional Hopf algebras and their Galois objects")]
struct Cli {
    /// JSON configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Convention for the twisted product (overrides the configuration).
    #[arg(long, global = true)]
    eq3_convention: Option<Convention>,
    /// Output format for scan reports (overrides the configuration).
    #[arg(long, global = true)]
    format: Option<Format>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, ValueEnum)]
enum Convention {
    Paper,
    Standard,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, ValueEnum)]
enum Builtin {
    Sl2,
    Borel,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the Hopf algebra axioms of a JSON description (`-` reads stdin).
    VerifyHopf { file: Option<PathBuf> },
    /// Check antisymmetry, Jacobi and restrictedness of a restricted Lie algebra.
    VerifyLie { file: Option<PathBuf> },
    /// Build the reduced enveloping algebra at a point and report its structure.
    Fiber {
        #[arg(long)]
        lie: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Field of the coordinates, `p` or `p^k` (defaults to the prime field).
        #[arg(long)]
        field: Option<String>,
        /// Read the coordinates as `χ` values and use `λ_i = χ_i^p`.
        #[arg(long)]
        chi: bool,
    },
    /// Analyze many points at once.
    Scan {
        #[arg(long)]
        lie: Option<PathBuf>,
        #[arg(long)]
        field: Option<String>,
        /// JSON array of points; every point of the field is scanned otherwise.
        #[arg(long)]
        points: Option<PathBuf>,
        /// Analyze only this many points, chosen with the configured seed.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Build the twisted product of a cocycle.
    Twist {
        #[arg(long)]
        hopf: Option<PathBuf>,
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(long)]
        ring: Option<PathBuf>,
    },
    /// Check the cocycle conditions.
    CocycleCheck { file: Option<PathBuf> },
    /// Check equivariance of a group splitting.
    EquivariantCheck {
        #[arg(long)]
        splitting: PathBuf,
    },
    /// Frobenius form of a fiber built from the integral of `u(L)`.
    Frobenius {
        #[arg(long)]
        lie: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        chi: bool,
    },
    /// Winding isomorphism from a fiber to `u(L)` via a one-dimensional representation.
    Winding {
        #[arg(long)]
        lie: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        chi: bool,
    },
    /// Print a built-in restricted Lie algebra.
    Builtin {
        kind: Builtin,
        #[arg(long)]
        p: u32,
    },
}

/// Exit status 1 (a mathematical check failed) or 2 (bad input).
enum Failure {
    Check(String),
    Input(String),
}

type Out = Result<(), Failure>;

fn classify(op: &str, e: Error) -> Failure {
    use Error::*;
    let msg = format!("{op}: {e}");
    match e {
        NotConvInvertible
        | IntegralNotFound(_)
        | InvariantsNotCentralScalars(_)
        | CocycleInvalid(_)
        | NotAlgebraMap(_)
        | ValuesNotInvariant(_)
        | PremiseFailed(_)
        | ValueNotInvariant(_)
        | NoOneDimRep
        | NotScalar(_)
        | RelationCheckFailed(_)
        | PredictionFailed(_) => Failure::Check(msg),
        DimCapExceeded { dim, cap } => Failure::Input(format!(
            "{msg}; raise dim_cap in the configuration to at least {dim} to build it (current cap {cap})"
        )),
        _ => Failure::Input(msg),
    }
}

fn read_source(op: &str, path: Option<&Path>) -> Result<String, Failure> {
    let mut s = String::new();
    match path {
        None => std::io::stdin().read_to_string(&mut s).map(|_| ()),
        Some(p) if p == Path::new("-") => std::io::stdin().read_to_string(&mut s).map(|_| ()),
        Some(p) => std::fs::read_to_string(p).map(|t| s = t),
    }
    .map_err(|e| Failure::Input(format!("{op}: cannot read {}: {e}", path.map(|p| p.display().to_string()).unwrap_or("stdin".into()))))?;
    Ok(s)
}

fn parse_json<T: serde::de::DeserializeOwned>(op: &str, what: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Input(format!("{op}: {what}: {e}")))
}

fn emit<T: Serialize>(v: &T) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn load_lie(op: &str, path: Option<&Path>) -> Result<RestrictedLie, Failure> {
    let text = read_source(op, path)?;
    let j: LieJson = parse_json(op, "restricted Lie algebra", &text)?;
    j.build().map_err(|e| classify(op, e))
}

fn parse_field(op: &str, spec: Option<&str>, lie: &RestrictedLie) -> Result<Field, Failure> {
    let Some(s) = spec else { return Ok(lie.field().clone()) };
    let bad = || Failure::Input(format!("{op}: field {s:?} is not of the form p or p^k"));
    let (p, k) = match s.split_once('^') {
        Some((p, k)) => (p.trim().parse().map_err(|_| bad())?, k.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 1),
    };
    if p != lie.p() {
        return Err(Failure::Input(format!("{op}: field {s} has characteristic {p}, the Lie algebra has {}", lie.p())));
    }
    Field::new(p, k).map_err(|e| classify(op, e))
}

/// Coordinates `a,b,c`; each an integer or `c0:c1:…` (low degree first).
fn parse_coordinate(op: &str, field: &Field, s: &str) -> Result<hopfgal::Fe, Failure> {
    let bad = || Failure::Input(format!("{op}: coordinate {s:?} is neither an integer nor c0:c1:…"));
    let repr = if s.contains(':') {
        ScalarRepr::Coeffs(s.split(':').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?)
    } else {
        ScalarRepr::Int(s.trim().parse().map_err(|_| bad())?)
    };
    scalar_in(field, &repr).map_err(|e| classify(op, e))
}

fn parse_point(op: &str, field: &Field, lie: &RestrictedLie, text: &str, chi: bool) -> Result<FiberPoint, Failure> {
    let coords = text.split(',').map(|s| parse_coordinate(op, field, s)).collect::<Result<Vec<_>, _>>()?;
    if coords.len() != lie.dim() {
        return Err(Failure::Input(format!("{op}: --lambda has {} coordinates, expected {}", coords.len(), lie.dim())));
    }
    Ok(if chi { chi_convention(field, &coords) } else { FiberPoint::new(field, coords) })
}

fn violations_report(op: &str, v: &[Violation], extra: Value) -> Out {
    let mut out = json!({ "operation": op, "ok": v.is_empty(), "violations": v });
    if let (Value::Object(o), Value::Object(e)) = (&mut out, extra) {
        o.extend(e);
    }
    emit(&out);
    if v.is_empty() {
        Ok(())
    } else {
        let first = &v[0];
        Err(Failure::Check(format!("{op}: {} violation(s), first: {} at {:?}", v.len(), first.axiom, first.indices)))
    }
}

fn run(cli: Cli) -> Out {
    let mut cfg = match &cli.config {
        Some(p) => {
            let text = read_source("config", Some(p))?;
            Config::from_json(&text).map_err(|e| classify("config", e))?
        }
        None => Config::default(),
    };
    cfg = cfg.with_env().map_err(|e| classify("config", e))?;
    if let Some(c) = cli.eq3_convention {
        cfg.eq3_convention = match c {
            Convention::Paper => Eq3Convention::Paper,
            Convention::Standard => Eq3Convention::Standard,
        };
    }
    if let Some(f) = cli.format {
        cfg.output = match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        };
    }
    match cli.cmd {
        Cmd::VerifyHopf { file } => {
            let op = "verify-hopf";
            let text = read_source(op, file.as_deref())?;
            let src: HopfSource = parse_json(op, "Hopf algebra", &text)?;
            let h = src.build().map_err(|e| classify(op, e))?;
            violations_report(op, &h.verify(), json!({ "dim": h.dim() }))
        }
        Cmd::VerifyLie { file } => {
            let op = "verify-lie";
            let lie = load_lie(op, file.as_deref())?;
            violations_report(op, &lie.verify(), json!({ "dim": lie.dim(), "p": lie.p() }))
        }
        Cmd::Fiber { lie, lambda, field, chi } => {
            let op = "fiber";
            let lie = load_lie(op, lie.as_deref())?;
            let field = parse_field(op, field.as_deref(), &lie)?;
            let point = parse_point(op, &field, &lie, &lambda, chi)?;
            let ctx = ScanContext::new(&lie, &field, cfg.scan_options()).map_err(|e| classify(op, e))?;
            let report = analyze_point(&ctx, &point).map_err(|e| classify(op, e))?;
            emit(&report);
            Ok(())
        }
        Cmd::Scan { lie, field, points, sample } => {
            let op = "scan";
            let lie = load_lie(op, lie.as_deref())?;
            let field = parse_field(op, field.as_deref(), &lie)?;
            let mut pts = match points {
                Some(path) => {
                    let text = read_source(op, Some(&path))?;
                    let raw: Vec<Vec<ScalarRepr>> = parse_json(op, "points", &text)?;
                    if raw.len() > MAX_POINTS {
                        return Err(classify(op, Error::TooManyPoints(raw.len())));
                    }
                    raw.iter()
                        .enumerate()
                        .map(|(i, p)| {
                            hopfgal::json::vec_in(&field, p, lie.dim(), &format!("point {i}"))
                                .map(|c| FiberPoint::new(&field, c))
                                .map_err(|e| classify(op, e))
                        })
                        .collect::<Result<Vec<_>, _>>()?
                }
                None => all_points(&field, lie.dim()).map_err(|e| classify(op, e))?,
            };
            if let Some(n) = sample {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                pts.shuffle(&mut rng);
                pts.truncate(n);
            }
            let res = scan(&lie, &field, Some(pts), cfg.scan_options()).map_err(|e| classify(op, e))?;
            match cfg.output {
                OutputFormat::Json => emit(&res),
                OutputFormat::Csv => {
                    let _ = write!(std::io::stdout().lock(), "{}", reports_to_csv(&res.reports).map_err(|e| classify(op, e))?);
                    eprintln!("scan: center dimensions {:?}, constant: {}", res.center_summary.counts, res.center_summary.constant);
                }
            }
            Ok(())
        }
        Cmd::Twist { hopf, cocycle, ring } => {
            let op = "twist";
            let text = read_source(op, Some(&cocycle))?;
            let mut v: Value = parse_json(op, "cocycle", &text)?;
            let Value::Object(obj) = &mut v else {
                return Err(Failure::Input(format!("{op}: cocycle file is not a JSON object")));
            };
            if let Some(h) = hopf {
                obj.insert("hopf".into(), parse_json(op, "Hopf algebra", &read_source(op, Some(&h))?)?);
            }
            if let Some(r) = ring {
                obj.insert("target".into(), parse_json(op, "ring", &read_source(op, Some(&r))?)?);
            }
            let cj: CocycleJson = serde_json::from_value(v).map_err(|e| Failure::Input(format!("{op}: cocycle: {e}")))?;
            let sigma = cj.build().map_err(|e| classify(op, e))?;
            let alg = twisted_product(&sigma, cfg.eq3_convention).map_err(|e| classify(op, e))?;
            emit(&AlgebraJson::from_algebra(&alg));
            Ok(())
        }
        Cmd::CocycleCheck { file } => {
            let op = "cocycle-check";
            let text = read_source(op, file.as_deref())?;
            let cj: CocycleJson = parse_json(op, "cocycle", &text)?;
            let sigma = cj.build().map_err(|e| classify(op, e))?;
            violations_report(op, &sigma.verify(), json!({}))
        }
        Cmd::EquivariantCheck { splitting } => {
            let op = "equivariant-check";
            let text = read_source(op, Some(&splitting))?;
            let sj: GroupSplittingJson = parse_json(op, "splitting", &text)?;
            let (_, s) = sj.build().map_err(|e| classify(op, e))?;
            let (direct, via) = equivariance_paths(&s).map_err(|e| classify(op, e))?;
            emit(&json!({ "operation": op, "direct": direct, "via_cocycle": via, "equivariant": direct && via }));
            if direct != via {
                Err(Failure::Check(format!("{op}: direct check gives {direct}, cocycle criterion gives {via}")))
            } else if !direct {
                Err(Failure::Check(format!("{op}: splitting is not equivariant")))
            } else {
                Ok(())
            }
        }
        Cmd::Frobenius { lie, lambda, field, chi } => {
            let op = "frobenius";
            let lie = load_lie(op, lie.as_deref())?;
            let field = parse_field(op, field.as_deref(), &lie)?;
            let point = parse_point(op, &field, &lie, &lambda, chi)?;
            let ctx = ScanContext::new(&lie, &field, cfg.scan_options()).map_err(|e| classify(op, e))?;
            let fib = fiber_algebra_capped(&lie, &point, cfg.dim_cap).map_err(|e| classify(op, e))?;
            let ca = fiber_coaction_with(&fib, &ctx.u).map_err(|e| classify(op, e))?;
            let form = frobenius_form(&ca, &ctx.integral).map_err(|e| classify(op, e))?;
            let (rank, symmetric) = form_rank(&form);
            emit(&json!({ "operation": op, "dim": fib.dim(), "rank": rank, "symmetric": symmetric, "nondegenerate": rank == fib.dim() }));
            if rank == fib.dim() {
                Ok(())
            } else {
                Err(Failure::Check(format!("{op}: form has rank {rank} < {}", fib.dim())))
            }
        }
        Cmd::Winding { lie, lambda, field, chi } => {
            let op = "winding";
            let lie = load_lie(op, lie.as_deref())?;
            let field = parse_field(op, field.as_deref(), &lie)?;
            let point = parse_point(op, &field, &lie, &lambda, chi)?;
            let fib = fiber_algebra_capped(&lie, &point, cfg.dim_cap).map_err(|e| classify(op, e))?;
            let rep = find_one_dim_rep(&lie, &point).map_err(|e| classify(op, e))?;
            let (w, _, _) = winding_iso(&fib, &rep).map_err(|e| classify(op, e))?;
            let f = &rep.field;
            let rows: Vec<Vec<Vec<u32>>> = (0..w.rows).map(|i| w.row(i).iter().map(|&c| f.coeffs(c)).collect()).collect();
            emit(&json!({
                "operation": op,
                "field": f.spec(),
                "representation": rep.values.iter().map(|&c| f.coeffs(c)).collect::<Vec<_>>(),
                "isomorphism": true,
                "map": rows,
            }));
            Ok(())
        }
        Cmd::Builtin { kind, p } => {
            let op = "builtin";
            let lie = match kind {
                Builtin::Sl2 => sl2_algebra(p),
                Builtin::Borel => borel_algebra(p),
            }
            .map_err(|e| classify(op, e))?;
            emit(&LieJson::from_lie(&lie));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(m)) => {
            eprintln!("{m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("{m}");
            ExitCode::from(2)
        }
    }
}
