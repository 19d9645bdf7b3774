//! `projcross`: exact crossing counts for a two-parameter family of
//! projective-plane drawings of `K_n`, closed-form verification, density
//! minimization, random geodesic baselines, and SVG figures.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use projcross_core::density::elkies_density_bounds;
use projcross_core::rational::{
    parse_rational, rational_from_ints, to_decimal_string, to_fraction_string,
};
use projcross_core::render::RenderConfig;
use projcross_core::{
    build_auxiliary, count_crossings, estimate_expected_crossings, estimate_pair_probability,
    f_eval, minimize_f, minimize_lattice, pcr_exact, project, responsibility,
    responsibility_symmetric, type_count, Color, Constants, CrossingType, Model, Params, Rational,
    VertexClass, VertexId,
};

#[derive(Parser)]
#[command(name = "projcross", version, about, arg_required_else_help = true)]
struct Cli {
    /// Cap the rayon worker count; results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write the machine-readable output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Suppress the human-readable summary on stderr.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct ParamArgs {
    /// Size parameter: the drawing has n = 8k + 2 vertices.
    #[arg(long)]
    k: u32,

    /// Integer level a = alpha * k, in [0, 2k].
    #[arg(long, conflicts_with = "alpha")]
    a: Option<u32>,

    /// Integer level b = beta * k, in [0, 2k].
    #[arg(long, conflicts_with = "beta")]
    b: Option<u32>,

    /// Rational alpha in [0, 2] (e.g. "11/10"); alpha * k must be integral.
    #[arg(long)]
    alpha: Option<String>,

    /// Rational beta in [0, 2]; beta * k must be integral.
    #[arg(long)]
    beta: Option<String>,
}

impl ParamArgs {
    fn resolve(&self) -> Result<Params, String> {
        if self.k < 1 {
            return Err("k must be at least 1".into());
        }
        let level = |lvl: Option<u32>, rat: &Option<String>, name: &str| -> Result<Rational, String> {
            match (lvl, rat) {
                (Some(x), None) => Ok(Rational::new(BigInt::from(x), BigInt::from(self.k))),
                (None, Some(s)) => parse_rational(s).map_err(|e| format!("--{name}: {e}")),
                (None, None) => Err(format!("provide --{} or --{name}", name.chars().next().unwrap())),
                (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
            }
        };
        let alpha = level(self.a, &self.alpha, "alpha")?;
        let beta = level(self.b, &self.beta, "beta")?;
        Params::from_rationals(self.k, &alpha, &beta).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count crossings with the segment engine and report the nine types.
    Count(ParamArgs),

    /// Dump the drawing itself: vertices, edges and colours.
    Drawing {
        #[command(flatten)]
        params: ParamArgs,
        /// Emit the identified K_n adjacency instead of the plane drawing.
        #[arg(long)]
        identified: bool,
    },

    /// Evaluate the closed-form counts and the exact projective total.
    Exact(ParamArgs),

    /// Compare engine and closed forms type by type; exit 1 on any mismatch.
    Verify {
        #[command(flatten)]
        params: SweepOrParams,
    },

    /// Evaluate the crossing density f(alpha, beta) exactly.
    #[command(name = "f-eval")]
    FEval {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
    },

    /// Minimize f over [0,2]^2, or the exact totals over the level lattice.
    Minimize {
        /// Grid spacing for the continuous search (rational, e.g. "1/10").
        #[arg(long, default_value = "1/10", conflicts_with = "lattice")]
        grid_step: String,
        /// Box-refinement rounds after the grid scan.
        #[arg(long, default_value_t = 30, conflicts_with = "lattice")]
        refine_rounds: u32,
        /// Instead: exhaustive search over (a, b) in [0, 2k]^2 for this k.
        #[arg(long)]
        lattice: Option<u32>,
    },

    /// Monte Carlo estimates for the random geodesic models.
    Montecarlo {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Estimate expected crossings of whole drawings of K_n instead of
        /// the pair probability.
        #[arg(long)]
        n: Option<u32>,
        /// Number of drawings for the whole-drawing estimate.
        #[arg(long, requires = "n")]
        drawings: Option<u64>,
    },

    /// Per-class (or per-vertex) responsibility report.
    Responsibility {
        #[command(flatten)]
        params: ParamArgs,
        /// Compute every vertex by the quadratic loop instead of using the
        /// rotational symmetry.
        #[arg(long)]
        full: bool,
    },

    /// Render the auxiliary drawing as SVG.
    Render {
        #[command(flatten)]
        params: ParamArgs,
        /// Draw the identification polygon.
        #[arg(long)]
        polygon: bool,
        /// Comma-separated colour filter (green,red,brown,blue,black).
        #[arg(long)]
        filter_color: Option<String>,
        /// Only edges incident with this vertex (e.g. v0, w3, u12).
        #[arg(long)]
        filter_vertex: Option<String>,
        /// Print engine counts as a legend.
        #[arg(long)]
        legend: bool,
    },

    /// One-shot check of the strict chain f(11/10,1) < 0.0126 < 1/(8 pi^2).
    Theorem1,
}

#[derive(Args)]
struct SweepOrParams {
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, requires = "k")]
    a: Option<u32>,
    #[arg(long, requires = "k")]
    b: Option<u32>,
    /// Verify every (a, b) level for every k up to this bound.
    #[arg(long, conflicts_with_all = ["k", "a", "b"])]
    sweep_max_k: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Sphere,
    Projective,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::Sphere => Model::Sphere,
            ModelArg::Projective => Model::Projective,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .is_err()
        {
            eprintln!("warning: thread pool already initialized");
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, payload: String) -> Result<(), String> {
    match &cli.out {
        Some(path) => std::fs::write(path, payload).map_err(|e| format!("writing output: {e}")),
        None => {
            println!("{}", payload.trim_end_matches('\n'));
            Ok(())
        }
    }
}

fn note(cli: &Cli, text: &str) {
    if !cli.quiet {
        eprintln!("{text}");
    }
}

fn json_out(cli: &Cli, value: serde_json::Value) -> Result<(), String> {
    emit(cli, serde_json::to_string_pretty(&value).expect("valid json"))
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Count(args) => {
            let p = args.resolve()?;
            let breakdown = count_crossings(&build_auxiliary(p));
            note(
                cli,
                &format!(
                    "n = {}: {} crossings in the plane model, {} after identification",
                    p.n(),
                    breakdown.total_auxiliary(),
                    breakdown.total_projective()
                ),
            );
            match cli.format {
                Format::Json => json_out(cli, breakdown.to_json())?,
                Format::Csv => emit(cli, breakdown.to_csv())?,
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Exact(args) => {
            let p = args.resolve()?;
            let total = pcr_exact(&p);
            match cli.format {
                Format::Json => {
                    let mut types = serde_json::Map::new();
                    for t in CrossingType::ALL {
                        types.insert(t.name().into(), json!(type_count(t, &p).to_string()));
                    }
                    json_out(
                        cli,
                        json!({
                            "schema": "projcross-exact/1",
                            "params": projcross_core::drawing::params_json(&p),
                            "counts": types,
                            "total_projective": total.to_string(),
                        }),
                    )?;
                }
                Format::Csv => {
                    let mut out = String::from("type,count\n");
                    for t in CrossingType::ALL {
                        out.push_str(&format!("{},{}\n", t.name(), type_count(t, &p)));
                    }
                    out.push_str(&format!("total_projective,{total}\n"));
                    emit(cli, out)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Drawing { params, identified } => {
            let p = params.resolve()?;
            let aux = build_auxiliary(p);
            let value = if *identified {
                project(&aux).map_err(|e| e.to_string())?.to_json()
            } else {
                aux.to_json()
            };
            json_out(cli, value)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { params } => verify_cmd(cli, params),

        Command::FEval { alpha, beta } => {
            let a = parse_rational(alpha).map_err(|e| format!("--alpha: {e}"))?;
            let b = parse_rational(beta).map_err(|e| format!("--beta: {e}"))?;
            let v = f_eval(&a, &b).map_err(|e| e.to_string())?;
            note(cli, &format!("f({alpha}, {beta}) = {}", to_fraction_string(&v)));
            match cli.format {
                Format::Json => json_out(
                    cli,
                    json!({
                        "schema": "projcross-feval/1",
                        "alpha": to_fraction_string(&a),
                        "beta": to_fraction_string(&b),
                        "value": to_fraction_string(&v),
                        "decimal": to_decimal_string(&v, 12),
                        "decimal_precision": 12,
                    }),
                )?,
                Format::Csv => emit(
                    cli,
                    format!(
                        "alpha,beta,value,decimal\n{},{},{},{}\n",
                        to_fraction_string(&a),
                        to_fraction_string(&b),
                        to_fraction_string(&v),
                        to_decimal_string(&v, 12)
                    ),
                )?,
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Minimize {
            grid_step,
            refine_rounds,
            lattice,
        } => {
            let result = match lattice {
                Some(k) => {
                    if *k < 1 {
                        return Err("--lattice requires k >= 1".into());
                    }
                    minimize_lattice(*k)
                }
                None => {
                    let step = parse_rational(grid_step).map_err(|e| format!("--grid-step: {e}"))?;
                    if step <= rational_from_ints(0, 1) {
                        return Err("--grid-step must be positive".into());
                    }
                    minimize_f(&step, *refine_rounds)
                }
            };
            note(
                cli,
                &format!(
                    "min {} at (alpha, beta) = ({}, {}) after {} evaluations",
                    to_decimal_string(&result.min_value, 10),
                    to_fraction_string(&result.argmin.0),
                    to_fraction_string(&result.argmin.1),
                    result.evaluations
                ),
            );
            let mut value = result.to_json();
            if let serde_json::Value::Object(map) = &mut value {
                map.insert(
                    "config".into(),
                    json!({
                        "grid_step": grid_step,
                        "refine_rounds": refine_rounds,
                        "lattice_k": lattice,
                    }),
                );
            }
            match cli.format {
                Format::Json => json_out(cli, value)?,
                Format::Csv => emit(
                    cli,
                    format!(
                        "method,alpha,beta,min_value,min_value_decimal,evaluations\n{},{},{},{},{},{}\n",
                        result.method.name(),
                        to_fraction_string(&result.argmin.0),
                        to_fraction_string(&result.argmin.1),
                        to_fraction_string(&result.min_value),
                        to_decimal_string(&result.min_value, 12),
                        result.evaluations
                    ),
                )?,
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Montecarlo {
            model,
            samples,
            seed,
            n,
            drawings,
        } => {
            let model: Model = (*model).into();
            let estimate = match n {
                Some(n) => {
                    let drawings = drawings.ok_or("--n requires --drawings")?;
                    estimate_expected_crossings(model, *n, drawings, *seed)
                }
                None => estimate_pair_probability(model, *samples, *seed),
            }
            .map_err(|e| e.to_string())?;
            note(
                cli,
                &format!(
                    "{}: mean {} (target {:?}, std error {}, {} resamples)",
                    estimate.model,
                    estimate.mean,
                    estimate.target,
                    estimate.std_error,
                    estimate.resamples
                ),
            );
            match cli.format {
                Format::Json => json_out(cli, estimate.to_json())?,
                Format::Csv => emit(cli, estimate.to_csv())?,
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Responsibility { params, full } => {
            let p = params.resolve()?;
            let aux = build_auxiliary(p);
            let report = if *full {
                responsibility(&aux)
            } else {
                responsibility_symmetric(&aux)
            };
            match cli.format {
                Format::Json => json_out(cli, report.to_json())?,
                Format::Csv => emit(cli, report.to_csv())?,
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Render {
            params,
            polygon,
            filter_color,
            filter_vertex,
            legend,
        } => {
            let p = params.resolve()?;
            let aux = build_auxiliary(p);
            let mut cfg = RenderConfig {
                polygon: *polygon,
                ..RenderConfig::default()
            };
            if let Some(colors) = filter_color {
                let mut set = BTreeSet::new();
                for name in colors.split(',') {
                    set.insert(parse_color(name.trim())?);
                }
                cfg.colors = Some(set);
            }
            if let Some(vertex) = filter_vertex {
                cfg.incident_to = Some(parse_vertex(vertex, &p)?);
            }
            if *legend {
                cfg.legend = Some(count_crossings(&aux));
            }
            let svg = projcross_core::render::render_auxiliary(&aux, &cfg);
            emit(cli, svg)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Theorem1 => theorem1_cmd(cli),
    }
}

fn parse_color(name: &str) -> Result<Color, String> {
    Color::ALL
        .into_iter()
        .find(|c| c.name() == name)
        .ok_or_else(|| format!("unknown colour {name:?}"))
}

fn parse_vertex(s: &str, p: &Params) -> Result<VertexId, String> {
    let (class, rest) = match s.chars().next() {
        Some('u') => (VertexClass::U, &s[1..]),
        Some('v') => (VertexClass::V, &s[1..]),
        Some('w') => (VertexClass::W, &s[1..]),
        _ => return Err(format!("vertex {s:?} must look like u0, v3 or w12")),
    };
    let index: u32 = rest
        .parse()
        .map_err(|_| format!("vertex {s:?} has a bad index"))?;
    if index >= p.m() {
        return Err(format!("vertex index {index} out of range [0, {})", p.m()));
    }
    Ok(VertexId { class, index })
}

fn verify_cmd(cli: &Cli, scope: &SweepOrParams) -> Result<ExitCode, String> {
    let sets: Vec<Params> = match (scope.k, scope.sweep_max_k) {
        (Some(k), None) => {
            let a = scope.a.ok_or("provide --a (and --b), or --sweep-max-k")?;
            let b = scope.b.ok_or("provide --b")?;
            vec![Params::new(k, a, b).map_err(|e| e.to_string())?]
        }
        (None, Some(kmax)) => (1..=kmax)
            .flat_map(|k| {
                (0..=2 * k).flat_map(move |a| {
                    (0..=2 * k).map(move |b| Params::new(k, a, b).expect("lattice is admissible"))
                })
            })
            .collect(),
        _ => return Err("provide either --k --a --b or --sweep-max-k".into()),
    };

    let mut rows = Vec::new();
    let mut mismatches = 0usize;
    for p in &sets {
        let breakdown = count_crossings(&build_auxiliary(*p));
        // completeness of the identified graph rides along
        project(&build_auxiliary(*p)).map_err(|e| e.to_string())?;
        for t in CrossingType::ALL {
            let engine = BigInt::from(breakdown.count(t));
            let formula = type_count(t, p);
            let ok = engine == formula;
            if !ok {
                mismatches += 1;
            }
            if sets.len() == 1 || !ok {
                rows.push(json!({
                    "k": p.k(), "a": p.level_a(), "b": p.level_b(),
                    "type": t.name(),
                    "engine": engine.to_string(),
                    "formula": formula.to_string(),
                    "match": ok,
                }));
            }
        }
        let engine_total = BigInt::from(breakdown.total_projective());
        let formula_total = pcr_exact(p);
        if engine_total != formula_total {
            mismatches += 1;
            rows.push(json!({
                "k": p.k(), "a": p.level_a(), "b": p.level_b(),
                "type": "total_projective",
                "engine": engine_total.to_string(),
                "formula": formula_total.to_string(),
                "match": false,
            }));
        }
    }

    note(
        cli,
        &format!(
            "verified {} parameter set(s): {}",
            sets.len(),
            if mismatches == 0 {
                "all types match".to_string()
            } else {
                format!("{mismatches} mismatches")
            }
        ),
    );
    match cli.format {
        Format::Json => json_out(
            cli,
            json!({
                "schema": "projcross-verify/1",
                "parameter_sets": sets.len(),
                "mismatches": mismatches,
                "rows": rows,
            }),
        )?,
        Format::Csv => {
            let mut out = String::from("k,a,b,type,engine,formula,match\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r["k"], r["a"], r["b"],
                    r["type"].as_str().unwrap(),
                    r["engine"].as_str().unwrap(),
                    r["formula"].as_str().unwrap(),
                    r["match"]
                ));
            }
            emit(cli, out)?;
        }
    }
    Ok(if mismatches == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn theorem1_cmd(cli: &Cli) -> Result<ExitCode, String> {
    let alpha = rational_from_ints(11, 10);
    let one = rational_from_ints(1, 1);
    let witness = f_eval(&alpha, &one).expect("(11/10, 1) is in the domain");
    let threshold = rational_from_ints(63, 5000);
    let (elkies_lo, elkies_hi) = elkies_density_bounds();
    let constants = Constants::new();

    let first = witness < threshold;
    let second = threshold < elkies_lo;
    let pass = first && second && constants.ordering_holds();

    let lines = [
        format!(
            "f(11/10, 1)      = {} = {}",
            to_fraction_string(&witness),
            to_decimal_string(&witness, 10)
        ),
        format!("threshold        = 63/5000 = {}", to_decimal_string(&threshold, 10)),
        format!(
            "1/(8 pi^2)      in [{}, {}]",
            to_decimal_string(&elkies_lo, 12),
            to_decimal_string(&elkies_hi, 12)
        ),
        format!(
            "chain f(11/10,1) < 0.0126 < 1/(8 pi^2): {}",
            if pass { "PASS" } else { "FAIL" }
        ),
    ];
    note(cli, &lines.join("\n"));

    match cli.format {
        Format::Json => json_out(
            cli,
            json!({
                "schema": "projcross-theorem1/1",
                "witness_value": to_fraction_string(&witness),
                "witness_decimal": to_decimal_string(&witness, 12),
                "threshold": "63/5000",
                "elkies_lower": to_decimal_string(&elkies_lo, 14),
                "elkies_upper": to_decimal_string(&elkies_hi, 14),
                "witness_below_threshold": first,
                "threshold_below_elkies": second,
                "pass": pass,
            }),
        )?,
        Format::Csv => emit(
            cli,
            format!(
                "witness,threshold,elkies_lower,pass\n{},63/5000,{},{}\n",
                to_fraction_string(&witness),
                to_decimal_string(&elkies_lo, 14),
                pass
            ),
        )?,
    }
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
