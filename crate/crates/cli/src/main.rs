//! `hyperc`: JSON front end for hyperc-core.
//!
//! Every command prints one JSON document on stdout. Exit status is 0 on
//! success, 1 on a domain error and 2 on malformed input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use hyperc_core::corpus::exhaustive_grid;
use hyperc_core::duality::{predual_from_limit, weak_star_limit};
use hyperc_core::hyperplane::{
    classify, min_projection, minimizing_projection, minimizing_threshold, projection_apply,
    HyperplaneClass,
};
use hyperc_core::isometry::{embed_c_into_wf, iso_c0, project_wf_to_c};
use hyperc_core::oracles::numeric::NumericConfig;
use hyperc_core::oracles::verify::{verify, VerifyConfig};
use hyperc_core::ordinal::{make_mu, quotient_apply, COmegaNFunc};
use hyperc_core::rational;
use hyperc_core::strategy::Registry;
use hyperc_core::{ConvergentSeq, Error, L1Functional, L1Vector};

#[derive(Parser)]
#[command(
    name = "hyperc",
    version,
    about = "Hyperplanes of the space of convergent sequences"
)]
struct Cli {
    /// Rescale functionals to unit l1 norm instead of rejecting them.
    #[arg(long, global = true)]
    normalize: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Which of the four classes W_f falls into.
    Classify {
        #[arg(long)]
        f: PathBuf,
    },
    /// Projection constant of W_f.
    Pconst {
        #[arg(long)]
        f: PathBuf,
        /// Registered constant strategy (see `methods`).
        #[arg(long, default_value = "closed_form")]
        method: String,
        /// Free coordinates for the numeric strategy.
        #[arg(long, default_value_t = 32)]
        trunc: usize,
    },
    /// Norm of the projection P_z.
    Pnorm {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        z: PathBuf,
        /// Registered norm strategy (see `methods`).
        #[arg(long, default_value = "formula")]
        method: String,
        /// Sign-pattern depth for `extreme_points`.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// A projection of least norm: norm one if possible, else z^N.
    Minproj {
        #[arg(long)]
        f: PathBuf,
        #[arg(long = "N")]
        n: Option<usize>,
    },
    /// P_z(x) = x - f(x) z.
    Apply {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        z: PathBuf,
        #[arg(long)]
        x: PathBuf,
    },
    /// The isometry c -> W_f (or W_f = c0), or its inverse.
    Isometry {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        inverse: bool,
    },
    /// Weak*-limit of the l1 basis in W_f*.
    DualLimit {
        #[arg(long)]
        f: PathBuf,
    },
    /// Hyperplane whose dual has the given weak*-limit.
    Predual {
        #[arg(long)]
        ehat: PathBuf,
    },
    /// The measure mu_i on [0, w*n].
    Mu {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        i: usize,
    },
    /// (mu_1(g), ..., mu_m(g)) and its limit.
    Quotient {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Cross-check every closed form against the oracles.
    Verify {
        #[arg(long)]
        f: PathBuf,
        #[arg(long, default_value_t = 32)]
        trunc: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        depth: Option<usize>,
        /// Include wall-clock time per check (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// All normalized f with denominators <= D and support <= S.
    Corpus {
        #[arg(long = "max-den")]
        max_den: u32,
        #[arg(long = "max-support")]
        max_support: usize,
    },
    /// Names of the registered strategies.
    Methods,
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Error> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())
    } else {
        fs::read_to_string(path)
    }
    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_functional(path: &Path, normalize: bool) -> Result<L1Functional, Error> {
    let v: L1Vector = read_json(path)?;
    if normalize {
        v.normalize()
    } else {
        L1Functional::new(v)
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("core types serialize")
}

fn run(cli: Cli) -> Result<Value, Error> {
    let norm = cli.normalize;
    let out = match cli.command {
        Command::Classify { f } => {
            let f = read_functional(&f, norm)?;
            json!({ "class": classify(&f) })
        }
        Command::Pconst { f, method, trunc } => {
            let f = read_functional(&f, norm)?;
            let registry = Registry::configured(
                NumericConfig {
                    truncation: trunc,
                    ..NumericConfig::default()
                },
                None,
            );
            let strategy = registry
                .constant(&method)
                .ok_or_else(|| unknown_method(&method, registry.constant_names()))?;
            json!({
                "projection_constant": strategy.constant(&f),
                "class": classify(&f),
            })
        }
        Command::Pnorm {
            f,
            z,
            method,
            depth,
        } => {
            let f = read_functional(&f, norm)?;
            let z: ConvergentSeq = read_json(&z)?;
            let registry = Registry::configured(NumericConfig::default(), depth);
            let strategy = registry
                .norm(&method)
                .ok_or_else(|| unknown_method(&method, registry.norm_names()))?;
            let v = strategy.norm(&f, &z)?;
            json!({ "norm": rational::QStr(v.value), "exact": v.exact })
        }
        Command::Minproj { f, n } => {
            let f = read_functional(&f, norm)?;
            match n {
                Some(n) => {
                    let spec = minimizing_projection(&f, n)?;
                    json!({ "kind": "minimizing", "N": n, "z": spec.z, "norm": rational::QStr(spec.norm) })
                }
                None => match min_projection(&f) {
                    Ok(m) => {
                        let mut v = json!({ "kind": "norm_one" });
                        merge(&mut v, to_value(&m));
                        v
                    }
                    Err(Error::NotOneComplemented) => {
                        // z^N attains the constant once N reaches the support.
                        let n = f.support_len().max(minimizing_threshold(&f)?);
                        let spec = minimizing_projection(&f, n)?;
                        json!({ "kind": "minimizing", "N": n, "z": spec.z, "norm": rational::QStr(spec.norm) })
                    }
                    Err(e) => return Err(e),
                },
            }
        }
        Command::Apply { f, z, x } => {
            let f = read_functional(&f, norm)?;
            let z: ConvergentSeq = read_json(&z)?;
            let x: ConvergentSeq = read_json(&x)?;
            to_value(&projection_apply(&f, &z, &x)?)
        }
        Command::Isometry { f, x, inverse } => {
            let f = read_functional(&f, norm)?;
            let x: ConvergentSeq = read_json(&x)?;
            let y = if classify(&f) == HyperplaneClass::IsoC0 {
                iso_c0(&f, &x)?
            } else if inverse {
                project_wf_to_c(&f, &x)?
            } else {
                embed_c_into_wf(&f, &x)?
            };
            to_value(&y)
        }
        Command::DualLimit { f } => {
            let f = read_functional(&f, norm)?;
            to_value(&weak_star_limit(&f)?)
        }
        Command::Predual { ehat } => {
            let ehat: L1Vector = read_json(&ehat)?;
            to_value(&predual_from_limit(&ehat)?)
        }
        Command::Mu { f, i } => {
            let f = read_functional(&f, norm)?;
            let mu = make_mu(&f, i)?;
            let mut v = to_value(&mu);
            merge(
                &mut v,
                json!({ "total_variation": rational::QStr(mu.total_variation()) }),
            );
            v
        }
        Command::Quotient { f, g, m } => {
            let f = read_functional(&f, norm)?;
            let g: COmegaNFunc = read_json(&g)?;
            to_value(&quotient_apply(&f, &g, m)?)
        }
        Command::Verify {
            f,
            trunc,
            tol,
            depth,
            timings,
        } => {
            let f = read_functional(&f, norm)?;
            let numeric = NumericConfig {
                truncation: trunc,
                ..NumericConfig::default()
            };
            let config = VerifyConfig {
                numeric,
                tolerance: tol,
                depth,
                timings,
                ..VerifyConfig::default()
            };
            to_value(&verify(&f, &Registry::configured(numeric, depth), &config))
        }
        Command::Corpus {
            max_den,
            max_support,
        } => to_value(&exhaustive_grid(max_den, max_support)),
        Command::Methods => {
            let r = Registry::builtin();
            json!({ "norm": r.norm_names(), "constant": r.constant_names() })
        }
    };
    Ok(out)
}

fn unknown_method(name: &str, known: Vec<&'static str>) -> Error {
    Error::Parse(format!(
        "unknown method {name:?}; known: {}",
        known.join(", ")
    ))
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!("{}", json!({ "error": e.code(), "detail": e.to_string() }));
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
    }
}
