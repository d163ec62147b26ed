//! The `defekt` command line: reads JSON documents, runs one core operation,
//! prints deterministic JSON.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on malformed input.

pub mod input;
pub mod output;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use defekt_core::diagrams::{evaluate_closed, hom_dim_with, state_space_dim_with, SignSeq, DEFAULT_SIZE_BOUND};
use defekt_core::frobenius::{beta_map, embedding_obstruction, eval_surface, FrobeniusAlgebra};
use defekt_core::onevar::{analyze, cross_check};
use defekt_core::openclosed::{check_knowledgeable, eval_oc_closed, state_space_circle};
use defekt_core::universal::{build_pair_algebra, minimize, Theory};
use defekt_core::Field;
use serde_json::{json, Value};

use input::{Ctx, InputError};

#[derive(Parser, Debug)]
#[command(name = "defekt", version, about = "Exact computations for one-dimensional theories with defects")]
struct Cli {
    /// Reinterpret every number in the input over another field: `rational` or `prime:p`.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Write the JSON result to a file instead of stdout.
    #[arg(short = 'o', long = "out", global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal state space A(+) of the interval series.
    Minimize { theory: PathBuf },
    /// Invariant triple and dimensions of A(+-), U and K.
    Invariants { theory: PathBuf },
    /// The symmetric Frobenius algebra K, as an algebra document.
    FrobeniusExtract { theory: PathBuf },
    /// Value of a closed diagram.
    EvalDiagram { theory: PathBuf, diagram: PathBuf },
    /// dim A(eps), or dim Hom(from, eps) when --from is given.
    Statespace {
        theory: PathBuf,
        /// Sign sequence such as `+-+`; empty for the empty sequence.
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
        /// Source sign sequence of the hom space.
        #[arg(long, allow_hyphen_values = true)]
        from: Option<String>,
        /// Largest total number of boundary points accepted.
        #[arg(long, default_value_t = DEFAULT_SIZE_BOUND)]
        bound: usize,
    },
    /// One-letter theories given by generating functions `NUM;DEN`.
    #[command(subcommand)]
    Onevar(OneVar),
    /// Symmetric Frobenius algebras.
    #[command(subcommand)]
    Frob(Frob),
    /// Thin surfaces with decorated side boundary.
    #[command(subcommand)]
    Surface(Surface),
    /// Open-closed theories.
    #[command(subcommand)]
    Oc(Oc),
}

#[derive(Subcommand, Debug)]
enum OneVar {
    /// Characteristic polynomials, trace series and dimensions.
    Analyze {
        /// Interval series `Z_I` as `NUM;DEN`, ascending comma-separated coefficients.
        #[arg(long, allow_hyphen_values = true)]
        zi: String,
        /// Circle series `Z_c` in the same format.
        #[arg(long, allow_hyphen_values = true)]
        zc: String,
    },
    /// Compare against the general construction on the same theory.
    Crosscheck {
        /// Interval series `Z_I` as `NUM;DEN`, ascending comma-separated coefficients.
        #[arg(long, allow_hyphen_values = true)]
        zi: String,
        /// Circle series `Z_c` in the same format.
        #[arg(long, allow_hyphen_values = true)]
        zc: String,
        /// Largest power of the letter whose K-trace is compared.
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Frob {
    /// Associativity, unit, symmetry and nondegeneracy.
    Check { algebra: PathBuf },
    /// The map B/[B,B] -> Z(B) induced by the window map.
    Beta { algebra: PathBuf },
    /// Semisimplicity and the embedding obstruction (rational algebras only).
    Embed { algebra: PathBuf },
}

#[derive(Subcommand, Debug)]
enum Surface {
    /// Value of a surface with at least one side boundary per component.
    Eval { algebra: PathBuf, surface: PathBuf },
}

#[derive(Subcommand, Debug)]
enum Oc {
    /// Knowledgeable-pair axioms.
    Check { pair: PathBuf },
    /// Value of a surface whose closed components use the closed series.
    Eval { theory: PathBuf, surface: PathBuf },
    /// dim A(0,1) from a bounded Gram matrix.
    CircleDim {
        theory: PathBuf,
        /// Largest genus among the spanning surfaces.
        #[arg(long, default_value_t = 6)]
        gmax: usize,
        /// Largest number of side circles among the spanning surfaces.
        #[arg(long, default_value_t = 6)]
        smax: usize,
    },
}

enum Failure {
    Input(InputError),
    Domain(defekt_core::Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Failure {
        Failure::Input(e)
    }
}

impl From<defekt_core::Error> for Failure {
    fn from(e: defekt_core::Error) -> Failure {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<Value, Failure>;

/// Exit code and text for stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub code: i32,
    pub stdout: String,
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Run with `args[0]` as the program name.
pub fn run<I, S>(args: I) -> RunResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return RunResult { code, stdout: e.to_string() };
        }
    };
    let outcome = input_field(&cli).and_then(|f| dispatch(&cli.command, &Ctx::new(f)));
    let (code, value) = match outcome {
        Ok(v) => (0, v),
        Err(Failure::Input(e)) => {
            (2, json!({"error": {"kind": "MalformedInput", "path": e.path, "message": e.message}}))
        }
        Err(Failure::Domain(e)) => (1, json!({"error": {"kind": e.kind(), "message": e.to_string()}})),
    };
    let text = render(&value);
    if code == 0 {
        if let Some(path) = &cli.out {
            return match std::fs::write(path, &text) {
                Ok(()) => RunResult { code: 0, stdout: String::new() },
                Err(e) => RunResult {
                    code: 2,
                    stdout: render(
                        &json!({"error": {"kind": "Io", "path": path.display().to_string(), "message": e.to_string()}}),
                    ),
                },
            };
        }
    }
    RunResult { code, stdout: text }
}

fn input_field(cli: &Cli) -> std::result::Result<Option<Field>, Failure> {
    cli.field.as_deref().map(input::parse_field_spec).transpose().map_err(Failure::Input)
}

fn read_json(path: &Path) -> std::result::Result<Value, Failure> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| InputError { path: name.clone(), message: e.to_string() })?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Input(InputError { path: name, message: format!("invalid JSON: {e}") }))
}

fn load_theory(ctx: &Ctx, path: &Path) -> std::result::Result<Theory, Failure> {
    Ok(input::theory(ctx, &read_json(path)?)??)
}

fn load_algebra(ctx: &Ctx, path: &Path) -> std::result::Result<FrobeniusAlgebra, Failure> {
    Ok(input::frobenius(ctx, &read_json(path)?, "$")?)
}

fn signs(s: &str, name: &str) -> std::result::Result<SignSeq, Failure> {
    SignSeq::parse(s).map_err(|e| Failure::Input(InputError { path: name.into(), message: e.to_string() }))
}

fn dispatch(cmd: &Command, ctx: &Ctx) -> Outcome {
    match cmd {
        Command::Minimize { theory } => {
            let t = load_theory(ctx, theory)?;
            let s = minimize(t.interval());
            let alpha = t.alphabet();
            let action: serde_json::Map<String, Value> =
                alpha.names().iter().zip(s.action()).map(|(n, m)| (n.clone(), output::matrix(m))).collect();
            Ok(json!({
                "dim": s.dim(),
                "wordBasis": s.word_basis().iter().map(|w| alpha.format(w)).collect::<Vec<_>>(),
                "cyclic": output::vector(s.cyclic()),
                "cotrace": output::vector(s.cotrace()),
                "action": action,
                "pairing": output::matrix(&s.pairing_matrix()?),
            }))
        }
        Command::Invariants { theory } => {
            let t = load_theory(ctx, theory)?;
            let pa = build_pair_algebra(&t)?;
            let alpha = t.alphabet();
            let idem = pa.idempotent_report();
            Ok(json!({
                "triple": [pa.k(), pa.u_prime_dim(), pa.k_dim()],
                "dimA": pa.k(),
                "dimApm": pa.dim(),
                "dimI": pa.i_dim(),
                "dimK": pa.k_dim(),
                "dimU": pa.u_dim(),
                "dimUPrime": pa.u_prime_dim(),
                "dimApmByEvaluation": pa.dim_by_evaluation(),
                "dimUByEvaluation": pa.u_dim_by_evaluation(),
                "circularIsTrace": t.circular_is_trace(),
                "tqft": pa.k_dim() == 0,
                "wordBasis": pa.state_space().word_basis().iter().map(|w| alpha.format(w)).collect::<Vec<_>>(),
                "kWords": pa.k_words().iter().map(|w| alpha.format(w)).collect::<Vec<_>>(),
                "idempotents": {
                    "pass": idem.pass(),
                    "allIdempotent": idem.all_idempotent,
                    "orthogonal": idem.orthogonal,
                    "sumsToUnit": idem.sums_to_unit,
                },
            }))
        }
        Command::FrobeniusExtract { theory } => {
            let t = load_theory(ctx, theory)?;
            Ok(output::frobenius(&build_pair_algebra(&t)?.frobenius_of_k()))
        }
        Command::EvalDiagram { theory, diagram } => {
            let t = load_theory(ctx, theory)?;
            let d = input::diagram(&read_json(diagram)?, t.alphabet())??;
            Ok(json!({"value": output::scalar(&evaluate_closed(&t, &d)?)}))
        }
        Command::Statespace { theory, eps, from, bound } => {
            let t = load_theory(ctx, theory)?;
            let e = signs(eps, "--eps")?;
            match from {
                Some(f) => {
                    let f = signs(f, "--from")?;
                    Ok(json!({"from": f.to_string(), "to": e.to_string(), "dim": hom_dim_with(&t, &f, &e, *bound)?}))
                }
                None => Ok(json!({"eps": e.to_string(), "dim": state_space_dim_with(&t, &e, *bound)?})),
            }
        }
        Command::Onevar(OneVar::Analyze { zi, zc }) => {
            let zi = input::parse_rational1_arg(ctx, zi, "--zi")?;
            let zc = input::parse_rational1_arg(ctx, zc, "--zc")?;
            let a = analyze(&zi, &zc)?;
            Ok(json!({
                "zInterval": output::rational1(&a.z_interval),
                "zCircular": output::rational1(&a.z_circular),
                "gInterval": output::polynomial(&a.g_interval),
                "gCircular": output::polynomial(&a.g_circular),
                "gAlpha": output::polynomial(&a.g_alpha),
                "zTrace": output::rational1(&a.z_trace),
                "zCircMinusTrace": output::rational1(&a.z_circ_minus_trace),
                "gCircInterval": output::polynomial(&a.g_circ_interval),
                "dims": {"dimA": a.dims.0, "dimU": a.dims.1, "dimK": a.dims.2},
            }))
        }
        Command::Onevar(OneVar::Crosscheck { zi, zc, depth }) => {
            let zi = input::parse_rational1_arg(ctx, zi, "--zi")?;
            let zc = input::parse_rational1_arg(ctx, zc, "--zc")?;
            let r = cross_check(&zi, &zc, *depth);
            let dims = |d: Option<(usize, usize, usize)>| d.map(|(a, u, k)| json!([a, u, k]));
            Ok(json!({
                "pass": r.pass,
                "onevarDims": dims(r.onevar_dims),
                "universalDims": dims(r.universal_dims),
                "failures": r.failures,
                "counterexample": r.counterexample.map(|w| defekt_core::series::Alphabet::standard(1).format(&w)),
            }))
        }
        Command::Frob(Frob::Check { algebra }) => {
            let b = load_algebra(ctx, algebra)?;
            let r = b.verify();
            Ok(json!({"pass": r.all_pass(), "checks": output::checks(r.checks())}))
        }
        Command::Frob(Frob::Beta { algebra }) => {
            let b = load_algebra(ctx, algebra)?;
            let m = beta_map(&b)?;
            Ok(json!({
                "zero": m.is_zero(),
                "factorizes": m.factorizes(),
                "windowKillsCommutators": m.window_kills_commutators,
                "windowIsCentral": m.window_is_central,
                "centerBasis": m.center_basis.iter().map(|v| output::vector(v)).collect::<Vec<_>>(),
                "quotientBasis": m.quotient_basis.iter().map(|v| output::vector(v)).collect::<Vec<_>>(),
                "matrix": output::matrix(&m.matrix),
            }))
        }
        Command::Frob(Frob::Embed { algebra }) => {
            let b = load_algebra(ctx, algebra)?;
            let r = embedding_obstruction(&b)?;
            Ok(json!({
                "semisimple": r.semisimple,
                "embeddingPossible": r.embedding_possible,
                "radicalBasis": r.radical_basis.iter().map(|v| output::vector(v)).collect::<Vec<_>>(),
                "witness": r.witness.as_deref().map(output::vector),
                "witnessNilpotency": r.witness_nilpotency,
                "traceOfUnit": output::scalar(&r.trace_of_unit),
                "traceOfUnitIsNatural": r.trace_of_unit_is_natural,
            }))
        }
        Command::Surface(Surface::Eval { algebra, surface }) => {
            let b = load_algebra(ctx, algebra)?;
            let s = input::surface(&b, &read_json(surface)?)?;
            Ok(json!({"value": output::scalar(&eval_surface(&b, &s)?)}))
        }
        Command::Oc(Oc::Check { pair }) => {
            let p = input::knowledgeable_pair(ctx, &read_json(pair)?)?;
            let r = check_knowledgeable(&p);
            Ok(json!({"pass": r.all_pass(), "checks": output::checks(r.checks.iter().map(|(n, c)| (*n, c)))}))
        }
        Command::Oc(Oc::Eval { theory, surface }) => {
            let t = input::oc_theory(ctx, &read_json(theory)?)??;
            let s = input::surface(t.open_algebra(), &read_json(surface)?)?;
            Ok(json!({"value": output::scalar(&eval_oc_closed(&t, &s)?)}))
        }
        Command::Oc(Oc::CircleDim { theory, gmax, smax }) => {
            let t = input::oc_theory(ctx, &read_json(theory)?)??;
            let r = state_space_circle(&t, *gmax, *smax)?;
            Ok(json!({
                "dim": r.dim,
                "stabilized": r.stabilized,
                "index": r.index.iter().map(|(g, s)| json!([g, s])).collect::<Vec<_>>(),
                "gram": output::matrix(&r.gram),
            }))
        }
    }
}
