use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tautilt_core::modrep::{hom_dim, tau};
use tautilt_core::oracle::{brute_force_sttilt, OracleConfig};
use tautilt_core::tautilt::{bongartz_completion, is_classical_tilting, is_tau_rigid_pair, minimal_completion, module_json, mutate};
use tautilt_core::{
    enumerate_sttilt, BoundQuiverAlgebra, Error, FieldChoice, HasseGraph, Limits, QuiverSpec, Rational, Representation, TauRigidPair, TauTiltingPair,
};

type Alg = BoundQuiverAlgebra<Rational>;

#[derive(Parser, Debug)]
#[command(name = "tau-tilt", version, about = "Support tau-tilting computations over bound quiver algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Test whether a module (plus optional shifted projectives) is a tau-rigid pair.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        module: PathBuf,
        /// Vertex labels of the projective part.
        #[arg(long, value_delimiter = ',')]
        projective: Vec<String>,
    },
    /// Auslander-Reiten translate of a module.
    Tau {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        module: PathBuf,
    },
    /// Hasse quiver of support tau-tilting pairs.
    Enumerate {
        #[command(flatten)]
        common: Common,
    },
    /// Mutate a support tau-tilting pair at one summand.
    Mutate {
        #[command(flatten)]
        common: Common,
        /// Pair as JSON, inline or as a file path.
        #[arg(long)]
        pair: String,
        /// Summand index, starting at 1.
        #[arg(long)]
        index: usize,
    },
    /// Largest support tau-tilting pair containing a tau-rigid pair.
    Bongartz {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        input: RigidInput,
    },
    /// Smallest support tau-tilting pair containing a tau-rigid pair.
    Cocompletion {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        input: RigidInput,
    },
    /// g-matrices of all support tau-tilting pairs.
    Gvectors {
        #[command(flatten)]
        common: Common,
    },
    /// Brute-force enumeration over a small prime field.
    Oracle {
        #[command(flatten)]
        common: Common,
        /// Componentwise dimension bound, e.g. `2,2`.
        #[arg(long, value_delimiter = ',')]
        bound: Vec<usize>,
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Classical tilting test for a module, or the list of tilting modules.
    Tilting {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        module: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct Common {
    #[arg(long)]
    pub algebra: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1_000_000)]
    pub max_nodes: usize,
    #[arg(long)]
    pub max_depth: Option<usize>,
}

#[derive(Args, Debug)]
pub struct RigidInput {
    /// Pair as JSON, inline or as a file path.
    #[arg(long, conflicts_with_all = ["module", "projective"])]
    pair: Option<String>,
    #[arg(long)]
    module: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    projective: Vec<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

type Out = Result<String, CliError>;

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_spec(common: &Common) -> Result<QuiverSpec, CliError> {
    let text = read(&common.algebra)?;
    QuiverSpec::parse(&text).map_err(|e| usage(format!("{}: {e}", common.algebra.display())))
}

fn load_algebra(common: &Common) -> Result<Alg, CliError> {
    let spec = load_spec(common)?;
    if spec.field != FieldChoice::Rationals {
        return Err(CliError::Domain(format!("{}; only `oracle` accepts algebras over prime fields", Error::NeedsCharacteristicZero)));
    }
    Alg::new(spec).map_err(usage)
}

fn load_module(alg: &Alg, path: &Path) -> Result<Representation<Rational>, CliError> {
    Representation::parse(alg, &read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn vertices(alg: &Alg, labels: &[String]) -> Result<Vec<usize>, CliError> {
    labels.iter().map(|l| alg.spec().vertex_index(l).map_err(usage)).collect()
}

fn load_json(arg: &str) -> Result<Value, CliError> {
    let path = Path::new(arg);
    let text = if path.is_file() { read(path)? } else { arg.to_string() };
    serde_json::from_str(&text).map_err(|e| usage(format!("pair JSON: {e}")))
}

fn load_pair(alg: &Alg, arg: &str, seed: u64) -> Result<TauRigidPair<Rational>, CliError> {
    TauRigidPair::from_json(alg, &load_json(arg)?, seed).map_err(|e| match e {
        Error::Syntax(_) | Error::Dimension(_) | Error::UnknownArrow(_) | Error::RelationViolated(_) => usage(format!("pair JSON: {e}")),
        e => e.into(),
    })
}

fn limits(common: &Common) -> Limits {
    Limits { max_nodes: common.max_nodes, max_depth: common.max_depth }
}

fn dims(v: &[usize]) -> String {
    format!("[{}]", v.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

fn matrix(g: &[Vec<i64>]) -> String {
    let rows: Vec<String> = g.iter().map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))).collect();
    format!("[{}]", rows.join(","))
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_dot(format: Format) -> Result<(), CliError> {
    if format == Format::Dot {
        return Err(usage("`--format dot` is only available for enumerate"));
    }
    Ok(())
}

fn pair_table(alg: &Alg, pair: &TauRigidPair<Rational>) -> String {
    format!("pair: {}\ng-matrix: {}\n", pair.label(alg), matrix(&pair.g_matrix()))
}

fn graph_table(alg: &Alg, g: &HasseGraph<Rational>) -> String {
    let mut out = format!("complete: {}\nnodes: {}\nedges: {}\n", g.complete, g.nodes.len(), g.edges.len());
    for (id, node) in g.nodes.iter().enumerate() {
        let _ = writeln!(out, "{id}\t{}\t{}", matrix(&node.g_matrix()), node.label(alg));
    }
    for e in &g.edges {
        let _ = writeln!(out, "{} -> {}\t(index {})", e.src, e.dst, e.index + 1);
    }
    out
}

pub fn run(cli: &Cli) -> Out {
    match &cli.command {
        Command::Check { common, module, projective } => {
            no_dot(common.format)?;
            let alg = load_algebra(common)?;
            let m = load_module(&alg, module)?;
            let p = vertices(&alg, projective)?;
            let rigid = is_tau_rigid_pair(&alg, &m, &p);
            let tm = tau(&alg, &m);
            let hom = hom_dim(&alg, &m, &tm);
            Ok(match common.format {
                Format::Json => json_text(&json!({ "tau_rigid": rigid, "tau_dim_vector": tm.dims(), "hom_m_tau_m": hom })),
                _ => format!("tau-rigid: {rigid}\ndim tau M: {}\ndim Hom(M, tau M): {hom}\n", dims(tm.dims())),
            })
        }
        Command::Tau { common, module } => {
            no_dot(common.format)?;
            let alg = load_algebra(common)?;
            let tm = tau(&alg, &load_module(&alg, module)?);
            Ok(match common.format {
                Format::Json => json_text(&module_json(&alg, &tm)),
                _ => tm.to_text(&alg),
            })
        }
        Command::Enumerate { common } => {
            let alg = load_algebra(common)?;
            let g = enumerate_sttilt(&alg, limits(common), common.seed)?;
            Ok(match common.format {
                Format::Json => json_text(&g.to_json(&alg)),
                Format::Dot => g.to_dot(),
                Format::Table => graph_table(&alg, &g),
            })
        }
        Command::Mutate { common, pair, index } => {
            no_dot(common.format)?;
            let alg = load_algebra(common)?;
            let t = TauTiltingPair::new(&alg, load_pair(&alg, pair, common.seed)?)?;
            let i = index.checked_sub(1).ok_or_else(|| usage("--index starts at 1"))?;
            let (u, dir) = mutate(&alg, &t, i, common.seed)?;
            Ok(match common.format {
                Format::Json => json_text(&json!({ "direction": dir.to_string(), "pair": u.to_json(&alg) })),
                _ => format!("{}direction: {dir}\n", pair_table(&alg, &u)),
            })
        }
        Command::Bongartz { common, input } | Command::Cocompletion { common, input } => {
            no_dot(common.format)?;
            let alg = load_algebra(common)?;
            let pair = match (&input.pair, &input.module) {
                (Some(p), _) => load_pair(&alg, p, common.seed)?,
                (None, Some(m)) => {
                    let m = load_module(&alg, m)?;
                    TauRigidPair::from_modules(&alg, &m, &vertices(&alg, &input.projective)?, common.seed)?
                }
                (None, None) if input.projective.is_empty() => TauRigidPair::empty(),
                (None, None) => TauRigidPair::from_modules(&alg, &Representation::zero(&alg), &vertices(&alg, &input.projective)?, common.seed)?,
            };
            let done = if matches!(cli.command, Command::Bongartz { .. }) {
                bongartz_completion(&alg, &pair, common.seed)?
            } else {
                minimal_completion(&alg, &pair, common.seed)?
            };
            Ok(match common.format {
                Format::Json => json_text(&done.to_json(&alg)),
                _ => pair_table(&alg, &done),
            })
        }
        Command::Gvectors { common } => {
            no_dot(common.format)?;
            let alg = load_algebra(common)?;
            let g = enumerate_sttilt(&alg, limits(common), common.seed)?;
            let mats: Vec<Vec<Vec<i64>>> = g.nodes.iter().map(|t| t.g_matrix()).collect();
            Ok(match common.format {
                Format::Json => json_text(&json!({ "g_matrices": mats, "complete": g.complete })),
                _ => {
                    let mut out = format!("complete: {}\n", g.complete);
                    for (id, m) in mats.iter().enumerate() {
                        let _ = writeln!(out, "{id}\t{}", matrix(m));
                    }
                    out
                }
            })
        }
        Command::Oracle { common, bound, prime } => {
            no_dot(common.format)?;
            let spec = load_spec(common)?;
            let mut cfg = OracleConfig::for_spec(&spec).map_err(usage)?;
            if let FieldChoice::PrimeField(p) = spec.field {
                cfg.prime = p;
            }
            if let Some(p) = prime {
                cfg.prime = *p;
            }
            if !bound.is_empty() {
                if bound.len() != spec.vertices.len() {
                    return Err(usage(format!("--bound needs {} entries", spec.vertices.len())));
                }
                cfg.dim_bound = bound.clone();
            }
            let res = brute_force_sttilt(&spec, &cfg)?;
            Ok(match common.format {
                Format::Json => json_text(&res.to_json(&spec)),
                _ => {
                    let mut out = format!(
                        "prime: {}\nbound: {}\nindecomposables: {}\ntau-rigid: {}\nnodes: {}\nedges: {}\n",
                        res.prime,
                        dims(&cfg.dim_bound),
                        res.indecomposables.len(),
                        res.tau_rigid.iter().filter(|&&r| r).count(),
                        res.pairs.len(),
                        res.edges.len()
                    );
                    for (id, p) in res.pairs.iter().enumerate() {
                        let _ = writeln!(out, "{id}\t{}", matrix(&p.g_matrix));
                    }
                    out
                }
            })
        }
        Command::Tilting { common, module } => {
            no_dot(common.format)?;
            let alg = load_algebra(common)?;
            if let Some(path) = module {
                let m = load_module(&alg, path)?;
                let tilting = is_classical_tilting(&alg, &m, common.seed)?;
                return Ok(match common.format {
                    Format::Json => json_text(&json!({ "classical_tilting": tilting })),
                    _ => format!("classical tilting: {tilting}\n"),
                });
            }
            let g = enumerate_sttilt(&alg, limits(common), common.seed)?;
            let mut found = Vec::new();
            for (id, t) in g.nodes.iter().enumerate() {
                if t.projective_part().is_empty() && is_classical_tilting(&alg, &t.module(&alg), common.seed)? {
                    found.push(id);
                }
            }
            Ok(match common.format {
                Format::Json => json_text(&json!({
                    "complete": g.complete,
                    "tilting": found.iter().map(|&id| json!({ "id": id, "pair": g.nodes[id].to_json(&alg) })).collect::<Vec<_>>(),
                })),
                _ => {
                    let mut out = format!("complete: {}\ntilting modules: {}\n", g.complete, found.len());
                    for &id in &found {
                        let _ = writeln!(out, "{id}\t{}", g.nodes[id].label(&alg));
                    }
                    out
                }
            })
        }
    }
}
