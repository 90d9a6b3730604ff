use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use polyval::harness::{self, CheckReport, Variance};
use polyval::io::parse_polytope;
use polyval::linear::{format_rat, int, parse_rat, rat};
use polyval::valuations::Domain;
use polyval::{Error, Params2D, Polytope, Rat, Valuation, Zeta};

#[derive(Parser)]
#[command(name = "polyval", version, about = "Exact vector valuations on rational polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Vertices, facet table, volume and moment of a polytope file.
    Info { file: String },
    /// Evaluate one valuation on a polytope file.
    Compute {
        valuation: Kind,
        #[arg(long)]
        file: String,
        /// ζ(1) as an integer or p/q string.
        #[arg(long, allow_hyphen_values = true)]
        zeta: Option<String>,
        /// Composite parameter, `name=value`; repeatable.
        #[arg(long = "param", value_name = "K=V", allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Run a verification suite, `all`, or `negative-controls`.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Fv,
    Mv,
    Ve,
    Vo,
    Thm12,
    Thm13,
    Thm14,
}

/// Failures split by exit code: 2 for bad input, 1 for everything else.
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::EmptyPointSet => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn rat_json(r: &Rat) -> Value {
    Value::String(format_rat(r))
}

fn load(file: &str) -> Result<Polytope, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{file}: {e}")))?;
    Ok(parse_polytope(&text)?)
}

fn info(file: &str) -> Result<Value, Failure> {
    let p = load(file)?;
    let facets: Vec<Value> = match p.facets() {
        Ok(fs) => fs
            .iter()
            .map(|f| {
                json!({
                    "normal": f.normal.to_strings(),
                    "support": rat_json(&f.support),
                    "cone_volume": rat_json(&p.cone_volume(f)),
                    "vector_area": p.vector_area(f).to_strings(),
                })
            })
            .collect(),
        Err(_) => Vec::new(),
    };
    let vertices: Vec<Vec<String>> = p.vertices().iter().map(|v| v.to_strings()).collect();
    Ok(json!({
        "dim": p.ambient_dim(),
        "aff_dim": p.affine_dim(),
        "vertices": vertices,
        "facets": facets,
        "volume": rat_json(&p.volume()),
        "moment": p.moment().to_strings(),
    }))
}

fn parse_value(name: &str, raw: &str) -> Result<Rat, Failure> {
    parse_rat(raw).map_err(|e| Failure::Usage(format!("{name}: {e}")))
}

fn compute(kind: Kind, file: &str, zeta: Option<&str>, raw_params: &[String]) -> Result<Value, Failure> {
    let allowed: &[&str] = match kind {
        Kind::Fv | Kind::Mv | Kind::Ve | Kind::Vo => &[],
        Kind::Thm12 => &["c1", "c2"],
        Kind::Thm13 => &["zeta1", "zeta2"],
        Kind::Thm14 => &["c1", "c2", "c1_tilde", "c2_tilde", "zeta1", "zeta2"],
    };
    let mut params = Map::new();
    let mut values = std::collections::BTreeMap::new();
    for raw in raw_params {
        let (k, v) = raw
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("parameter {raw:?} is not of the form name=value")))?;
        if !allowed.contains(&k) {
            return Err(Failure::Usage(format!("unknown parameter {k:?}; expected one of {allowed:?}")));
        }
        values.insert(k.to_string(), parse_value(k, v)?);
    }
    let zeta_value = match zeta {
        Some(z) => parse_value("zeta", z)?,
        None => int(1),
    };
    let get = |k: &str| values.get(k).cloned().unwrap_or_else(|| int(0));
    let uses_zeta = matches!(kind, Kind::Fv | Kind::Vo | Kind::Thm12);
    if uses_zeta {
        params.insert("zeta".into(), rat_json(&zeta_value));
    } else if zeta.is_some() {
        return Err(Failure::Usage("--zeta does not apply to this valuation; use --param".into()));
    }
    for k in allowed {
        params.insert((*k).into(), rat_json(&get(k)));
    }

    let p = load(file)?;
    let z = Zeta::new(zeta_value);
    let valuation = match kind {
        Kind::Fv => Valuation::FacetVector(z),
        Kind::Mv => Valuation::Moment,
        Kind::Ve => Valuation::EdgeVector,
        Kind::Vo => Valuation::Vo(z),
        Kind::Thm12 => Valuation::OriginComposite2D { zeta: z, c1: get("c1"), c2: get("c2") },
        Kind::Thm13 => Valuation::GeneralComposite { zeta1: Zeta::new(get("zeta1")), zeta2: Zeta::new(get("zeta2")) },
        Kind::Thm14 => Valuation::GeneralComposite2D(Params2D {
            c1: get("c1"),
            c2: get("c2"),
            c1_tilde: get("c1_tilde"),
            c2_tilde: get("c2_tilde"),
            zeta1: Zeta::new(get("zeta1")),
            zeta2: Zeta::new(get("zeta2")),
        }),
    };
    if valuation.domain() == Domain::ContainsOrigin && !p.contains_origin() {
        return Err(Error::OriginNotContained.into());
    }
    let value = valuation.eval(&p)?;
    Ok(json!({
        "valuation": valuation.name(),
        "params": Value::Object(params),
        "value": value.to_strings(),
    }))
}

const SUITES: &[&str] = &[
    "valuation",
    "contravariance",
    "simplicity",
    "minkowski",
    "hfv",
    "cocontra",
    "extk",
    "extn",
    "theorems",
];

fn suite(name: &str, seed: u64, cases: usize, n: usize) -> Vec<CheckReport> {
    let fv = Valuation::FacetVector(Zeta::identity());
    let lambdas = [rat(1, 3), rat(1, 2), rat(2, 3)];
    match name {
        "valuation" => {
            let mut zs = vec![
                fv,
                Valuation::Moment,
                Valuation::GeneralComposite { zeta1: Zeta::identity(), zeta2: Zeta::new(int(-2)) },
            ];
            if n == 2 {
                zs.push(Valuation::OriginComposite2D { zeta: Zeta::identity(), c1: int(1), c2: int(1) });
                zs.push(Valuation::GeneralComposite2D(Params2D {
                    c1: int(1),
                    c2: int(-1),
                    c1_tilde: int(2),
                    c2_tilde: int(1),
                    zeta1: Zeta::identity(),
                    zeta2: Zeta::new(int(3)),
                }));
            }
            zs.iter().map(|z| harness::check_valuation_cut(z, n, seed, cases)).collect()
        }
        "contravariance" => vec![harness::check_contravariance(&fv, n, seed, cases)],
        "simplicity" => {
            let zetas = [Zeta::identity(), Zeta::new(rat(-2, 3))];
            vec![harness::check_simplicity(n, seed, cases, &zetas)]
        }
        "minkowski" => vec![harness::check_minkowski(n, seed, cases)],
        "hfv" => vec![harness::check_hfv(seed, cases)],
        "cocontra" => vec![harness::check_cocontra(seed, cases)],
        "extk" => vec![harness::check_extk(&fv, n.max(3), &lambdas)],
        "extn" => vec![harness::check_extn(&fv, n, &lambdas, &[int(1), int(2)])],
        "theorems" => vec![harness::check_theorem_formulas(seed, cases)],
        _ => unreachable!("validated by caller"),
    }
}

fn verify(name: &str, seed: u64, cases: usize, n: usize) -> Result<(Value, bool), Failure> {
    if !(2..=4).contains(&n) {
        return Err(Failure::Usage(format!("--dim must be 2, 3 or 4, got {n}")));
    }
    let reports: Vec<CheckReport> = match name {
        "all" => SUITES.iter().flat_map(|s| suite(s, seed, cases, n)).collect(),
        "negative-controls" => {
            let mut r = harness::negative_controls(seed, cases);
            let mut mv = harness::check_variance_on(
                &Valuation::Moment,
                Variance::Contravariant,
                Domain::All,
                n,
                seed,
                cases,
            );
            mv.expected_fail = true;
            r.push(mv);
            r
        }
        s if SUITES.contains(&s) => suite(s, seed, cases, n),
        other => {
            return Err(Failure::Usage(format!(
                "unknown suite {other:?}; expected all, negative-controls or one of {SUITES:?}"
            )))
        }
    };
    for r in &reports {
        eprintln!(
            "{} {}: {} cases, {} failures{}",
            if r.passed() { "ok  " } else { "FAIL" },
            r.suite,
            r.cases,
            r.failures,
            if r.expected_fail { " (expected)" } else { "" }
        );
    }
    let ok = reports.iter().all(CheckReport::passed);
    let value = serde_json::to_value(&reports).map_err(|e| Failure::Runtime(e.to_string()))?;
    Ok((value, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Info { file } => info(file).map(|v| (v, true)),
        Command::Compute { valuation, file, zeta, params } => {
            compute(*valuation, file, zeta.as_deref(), params).map(|v| (v, true))
        }
        Command::Verify { suite, seed, cases, dim } => verify(suite, *seed, *cases, *dim),
    };
    match result {
        Ok((value, ok)) => {
            println!("{}", serde_json::to_string_pretty(&value).expect("serialisable"));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
