//! Command-line adapter over `hilbfun`. Every subcommand parses its
//! arguments, calls one library operation and wraps the result in a
//! [`CommandResult`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use hilbfun::decomposition::{self, Decomposition, HVector};
use hilbfun::engine::{self, GradedIdealModel, Polynomial, DEFAULT_PRIME};
use hilbfun::extremal::{self, RelateInput};
use hilbfun::lex;
use hilbfun::macaulay;
use hilbfun::prover::{self, ProofTrace};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

mod pretty;

pub const DEFAULT_SEED: u64 = 19;

#[derive(Debug, Parser)]
#[command(name = "hilbfun", version, about = "Hilbert function toolkit with JSON output")]
pub struct Cli {
    /// Print human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Seed for every randomized choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Prime characteristic for the ideal engine.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    pub prime: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Binomial expansion of R in degree D.
    Expand { r: u64, d: usize },
    /// Growth bounds.
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Check Macaulay's condition on a comma-separated sequence.
    Osequence { h: HArg },
    /// Enumerate Gorenstein decompositions, or validate one with --b and --l.
    Decompose {
        h: HArg,
        #[arg(long)]
        b: Option<HArg>,
        #[arg(long)]
        l: Option<HArg>,
    },
    /// Forced socle from maximal growth or injectivity.
    #[command(subcommand)]
    Socle(SocleCmd),
    /// Extremal Hilbert function tools.
    #[command(subcommand)]
    Extremal(ExtremalCmd),
    /// Evaluate the extremality conditions at degree D on literal rows.
    Relate {
        d: usize,
        #[arg(long)]
        h: HArg,
        #[arg(long)]
        b: HArg,
        #[arg(long)]
        l: HArg,
        #[arg(long)]
        j_h: Option<HArg>,
        #[arg(long)]
        j_b: Option<HArg>,
    },
    /// Lexsegment ideals and their Betti tables.
    #[command(subcommand)]
    Lex(LexCmd),
    /// Prime-field ideal engine.
    #[command(subcommand)]
    Engine(EngineCmd),
    /// Build and replay the elimination trace of (1,19,17,19,1), or replay a saved one.
    #[command(name = "prove-19")]
    Prove19 {
        /// Replay a trace file instead of building one.
        #[arg(long)]
        verify: Option<PathBuf>,
    },
    /// Classify (1,A,B,A,1) against the bundled fact base.
    Classify { a: u64, b: u64 },
}

#[derive(Debug, Subcommand)]
pub enum BoundCmd {
    Macaulay { h: u64, d: usize },
    Green { h: u64, d: usize },
}

#[derive(Debug, Subcommand)]
pub enum SocleCmd {
    Zanello { h: HArg, d: usize },
    Injectivity { h: HArg, l: HArg, d: usize },
}

#[derive(Debug, Subcommand)]
pub enum ExtremalCmd {
    Recognize { h: u64, d: usize },
    Hilbpoly {
        h: u64,
        d: usize,
        /// Number of degrees past D to evaluate.
        #[arg(long, default_value_t = 4)]
        steps: usize,
    },
    Backward { h: u64, d: usize },
    Sequential { h: u64, d: usize, s: usize },
}

#[derive(Debug, Subcommand)]
pub enum LexCmd {
    Ideal {
        h: HArg,
        nvars: usize,
        #[arg(long)]
        truncate: Option<usize>,
    },
    Betti {
        h: HArg,
        nvars: usize,
        #[arg(long)]
        truncate: Option<usize>,
    },
    Cancel {
        h: HArg,
        nvars: usize,
        i: usize,
        j: usize,
        #[arg(long)]
        truncate: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    #[arg(long)]
    pub nvars: usize,
    #[arg(long)]
    pub cap: usize,
    /// Generators as a JSON list of polynomials, each a list of {"coef", "exp"} terms.
    #[arg(long)]
    pub gens: Option<String>,
    /// Degrees of seeded random forms in all variables, comma-separated.
    #[arg(long)]
    pub random: Option<HArg>,
}

#[derive(Debug, Subcommand)]
pub enum EngineCmd {
    Build(IdealArgs),
    Profile(IdealArgs),
    Saturate {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    Gotzmann {
        h: u64,
        d: usize,
        #[arg(default_value_t = 4)]
        horizon: usize,
    },
    Apolar {
        #[arg(long)]
        nvars: usize,
        /// The form as a JSON list of {"coef", "exp"} terms.
        #[arg(long)]
        form: String,
    },
}

/// A comma-separated list of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HArg(pub Vec<u64>);

impl std::str::FromStr for HArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']')
            .split(',')
            .map(|x| x.trim().parse::<u64>().map_err(|e| format!("{x:?}: {e}")))
            .collect::<Result<_, _>>()
            .map(HArg)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Macaulay(#[from] macaulay::MacaulayError),
    #[error(transparent)]
    Decomposition(#[from] decomposition::DecompositionError),
    #[error(transparent)]
    Extremal(#[from] extremal::ExtremalError),
    #[error(transparent)]
    Lex(#[from] lex::LexError),
    #[error(transparent)]
    Engine(#[from] engine::EngineError),
    #[error(transparent)]
    Prover(#[from] prover::ProverError),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("reading {path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Macaulay(_) => "macaulay",
            CliError::Decomposition(_) => "decomposition",
            CliError::Extremal(_) => "extremal",
            CliError::Lex(_) => "lex",
            CliError::Engine(_) => "engine",
            CliError::Prover(_) => "prover",
            CliError::Input(_) => "input",
            CliError::Io { .. } => "io",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub payload: Value,
    pub citations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
}

/// What a process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

const MACAULAY: &str = "Macaulay's growth theorem";
const GREEN: &str = "Green's hyperplane restriction theorem";
const GOTZMANN: &str = "Gotzmann persistence";
const EK: &str = "Eliahou-Kervaire resolution of stable ideals";
const CANCELLATION: &str = "consecutive cancellation of lex Betti numbers";
const DECOMPOSITION: &str = "additivity of h = b(-1) + l along a linear form";
const MAX_GROWTH_SOCLE: &str = "socle from maximal growth";
const INJECTIVITY_SOCLE: &str = "socle from injectivity of a linear form";
const EXTREMAL: &str = "hypersurface recognition from an extremal expansion";
const APOLARITY: &str = "Macaulay inverse systems and catalecticant ranks";

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn result(command: &str, payload: Value, citations: &[&str]) -> CommandResult {
    CommandResult {
        command: command.to_string(),
        payload,
        citations: citations.iter().map(|s| s.to_string()).collect(),
        seed: None,
        prime: None,
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, s: &str) -> Result<T, CliError> {
    serde_json::from_str(s).map_err(|e| CliError::Input(format!("{what}: {e}")))
}

fn build_model(a: &IdealArgs, seed: u64, prime: u64) -> Result<GradedIdealModel, CliError> {
    let gens: Vec<Polynomial> = match (&a.gens, &a.random) {
        (Some(g), None) => parse_json("--gens", g)?,
        (None, Some(degrees)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let vars: Vec<usize> = (0..a.nvars).collect();
            degrees
                .0
                .iter()
                .map(|&d| Polynomial::random_form(a.nvars, d as usize, &vars, prime, &mut rng))
                .collect()
        }
        _ => return Err(CliError::Input("give exactly one of --gens and --random".into())),
    };
    Ok(engine::build_ideal(&gens, a.nvars, prime, a.cap)?)
}

fn lex_quotient(h: &[u64], nvars: usize, truncate: Option<usize>) -> Result<lex::MonomialIdeal, CliError> {
    let ideal = lex::lex_ideal(h, nvars)?;
    Ok(match truncate {
        Some(d) => lex::truncate_ideal(&ideal, d),
        None => ideal,
    })
}

/// Runs an already parsed command.
pub fn execute(cli: &Cli) -> Result<CommandResult, CliError> {
    let (seed, prime) = (cli.seed, cli.prime);
    let randomized = |mut r: CommandResult| {
        r.seed = Some(seed);
        r.prime = Some(prime);
        r
    };
    Ok(match &cli.command {
        Command::Expand { r, d } => result("expand", to_value(&macaulay::expand(*r, *d)?), &[MACAULAY]),
        Command::Bound(BoundCmd::Macaulay { h, d }) => result(
            "bound macaulay",
            json!({ "h": h, "d": d, "bound": macaulay::macaulay_bound(*h, *d)? }),
            &[MACAULAY],
        ),
        Command::Bound(BoundCmd::Green { h, d }) => result(
            "bound green",
            json!({ "h": h, "d": d, "bound": macaulay::green_bound(*h, *d)? }),
            &[GREEN],
        ),
        Command::Osequence { h } => result("osequence", to_value(&macaulay::is_o_sequence(&h.0)?), &[MACAULAY]),
        Command::Decompose { h, b, l } => {
            let hv = HVector::new(h.0.clone())?;
            match (b, l) {
                (None, None) => result(
                    "decompose",
                    to_value(&decomposition::enumerate_gorenstein_decompositions(&hv)?),
                    &[DECOMPOSITION, MACAULAY, GREEN],
                ),
                (Some(b), Some(l)) => {
                    let dec = Decomposition {
                        h: hv,
                        b: b.0.clone(),
                        l: l.0.clone(),
                    };
                    result(
                        "decompose",
                        to_value(&decomposition::validate_decomposition(&dec, true)?),
                        &[DECOMPOSITION, MACAULAY, GREEN],
                    )
                }
                _ => return Err(CliError::Input("--b and --l go together".into())),
            }
        }
        Command::Socle(SocleCmd::Zanello { h, d }) => result(
            "socle zanello",
            to_value(&decomposition::zanello_socle(&h.0, *d)?),
            &[MAX_GROWTH_SOCLE],
        ),
        Command::Socle(SocleCmd::Injectivity { h, l, d }) => result(
            "socle injectivity",
            to_value(&decomposition::injectivity_socle(&h.0, &l.0, *d)?),
            &[INJECTIVITY_SOCLE],
        ),
        Command::Extremal(ExtremalCmd::Recognize { h, d }) => result(
            "extremal recognize",
            to_value(&extremal::recognize_hypersurface_form(*h, *d)?),
            &[EXTREMAL],
        ),
        Command::Extremal(ExtremalCmd::Hilbpoly { h, d, steps }) => {
            let p = extremal::hilbert_polynomial(&macaulay::expand(*h, *d)?)?;
            let values = (0..=*steps).map(|t| p.eval(t)).collect::<Result<Vec<_>, _>>()?;
            result(
                "extremal hilbpoly",
                json!({ "polynomial": to_value(&p), "from_degree": d, "values": values }),
                &[GOTZMANN, MACAULAY],
            )
        }
        Command::Extremal(ExtremalCmd::Backward { h, d }) => result(
            "extremal backward",
            to_value(&extremal::backward_hf_recursion(*h, *d)?),
            &[GREEN, EXTREMAL],
        ),
        Command::Extremal(ExtremalCmd::Sequential { h, d, s }) => result(
            "extremal sequential",
            json!({ "targets": extremal::sequential_green_targets(*h, *d, *s)? }),
            &[GREEN],
        ),
        Command::Relate { d, h, b, l, j_h, j_b } => {
            let input = RelateInput {
                h: h.0.clone(),
                b: b.0.clone(),
                l: l.0.clone(),
                j_h: j_h.as_ref().map(|r| r.0.clone()),
                j_b: j_b.as_ref().map(|r| r.0.clone()),
                scheme: None,
            };
            result("relate", to_value(&extremal::relate_report(&input, *d)?), &[GREEN, MACAULAY])
        }
        Command::Lex(LexCmd::Ideal { h, nvars, truncate }) => {
            let ideal = lex_quotient(&h.0, *nvars, *truncate)?;
            result("lex ideal", to_value(&ideal), &[MACAULAY])
        }
        Command::Lex(LexCmd::Betti { h, nvars, truncate }) => {
            let ideal = lex_quotient(&h.0, *nvars, *truncate)?;
            result("lex betti", to_value(&lex::ek_betti(&ideal)?), &[EK])
        }
        Command::Lex(LexCmd::Cancel { h, nvars, i, j, truncate }) => {
            let ideal = lex_quotient(&h.0, *nvars, *truncate)?;
            let table = lex::ek_betti(&ideal)?;
            result(
                "lex cancel",
                json!({
                    "i": i,
                    "j": j,
                    "beta": table.get(*i, *j),
                    "lower_bound": lex::cancellation_socle_lower_bound(&table, *i, *j),
                }),
                &[EK, CANCELLATION],
            )
        }
        Command::Engine(EngineCmd::Build(a)) => {
            let m = build_model(a, seed, prime)?;
            randomized(result(
                "engine build",
                json!({ "hf": m.hilbert_function(), "cap": m.cap() }),
                &[],
            ))
        }
        Command::Engine(EngineCmd::Profile(a)) => {
            let m = build_model(a, seed, prime)?;
            randomized(result(
                "engine profile",
                to_value(&engine::restriction_profile(&m, seed)?),
                &[DECOMPOSITION],
            ))
        }
        Command::Engine(EngineCmd::Saturate { ideal, trials }) => {
            let m = build_model(ideal, seed, prime)?;
            randomized(result(
                "engine saturate",
                json!({ "saturated_from": engine::saturation_index(&m, *trials, seed)?, "trials": trials }),
                &[],
            ))
        }
        Command::Engine(EngineCmd::Gotzmann { h, d, horizon }) => result(
            "engine gotzmann",
            json!({ "h": h, "d": d, "values": engine::gotzmann_predict(*h, *d, *horizon)? }),
            &[GOTZMANN],
        ),
        Command::Engine(EngineCmd::Apolar { nvars, form }) => {
            let f: Polynomial = parse_json("--form", form)?;
            result(
                "engine apolar",
                json!({ "hf": engine::apolar_hf(&f, *nvars, prime)? }),
                &[APOLARITY],
            )
        }
        Command::Prove19 { verify } => {
            let trace = match verify {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                        path: path.display().to_string(),
                        message: e.to_string(),
                    })?;
                    prover::replay_json(&text)?;
                    parse_json::<ProofTrace>("trace", &text)?
                }
                None => prover::prove_not_gorenstein_19()?,
            };
            let report = prover::replay(&trace)?;
            let citations: Vec<String> = trace
                .steps
                .iter()
                .filter(|s| s.status == prover::Status::CitedAxiom)
                .flat_map(|s| s.citation.split(';').map(|c| c.trim().to_string()))
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            CommandResult {
                command: "prove-19".into(),
                payload: json!({ "conclusion": report.conclusion, "report": report, "trace": trace }),
                citations,
                seed: None,
                prime: None,
            }
        }
        Command::Classify { a, b } => {
            let c = prover::classify_socle4(*a, *b)?;
            let mut citations: Vec<String> = c.provenance.iter().filter_map(|p| p.citation.clone()).collect();
            citations.dedup();
            CommandResult {
                command: "classify".into(),
                payload: to_value(&c),
                citations,
                seed: None,
                prime: None,
            }
        }
    })
}

/// Parses `args` (program name first), runs the command and renders output.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(r) => {
            let stdout = if cli.pretty {
                pretty::render(&r)
            } else {
                serde_json::to_string(&r).expect("results serialize") + "\n"
            };
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(e) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: e.to_json().to_string() + "\n",
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequences_parse_with_or_without_brackets() {
        assert_eq!("1,19,17,19,1".parse::<HArg>().unwrap(), HArg(vec![1, 19, 17, 19, 1]));
        assert_eq!("(1, 3, 1)".parse::<HArg>().unwrap(), HArg(vec![1, 3, 1]));
        assert!("1,x".parse::<HArg>().is_err());
    }

    #[test]
    fn errors_carry_a_kind() {
        let e = CliError::Input("bad".into());
        assert_eq!(e.to_json()["error"]["kind"], "input");
    }
}
