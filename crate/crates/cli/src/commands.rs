use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use spheremap::deformations::{in_hol, is_trivial_deformation, solve_hol};
use spheremap::degeneracy::{
    classify_map, default_max_order, degeneracy_witness, generic_rank, jet_degeneracy, kernel_at_point,
    stratify_with_seed, x_classify_from, x_fiber, WITNESS_SEED,
};
use spheremap::maps::SphereMap;
use spheremap::polys::{BiPoly, Point, PolyVector, TermJson};
use spheremap::reflection::build_reflection;

use crate::catalog::{self, MapOptions};
use crate::report::*;
use crate::{render, CliError};

#[derive(Debug, Parser)]
#[command(name = "spheremap", version, about = "Exact analysis of rational sphere maps")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock timings (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct MapArg {
    /// Catalog key such as `H(2,3)` or `quartic`, or a JSON map file.
    pub map: String,
    /// Cosine parameter for `pencil`.
    #[arg(long, allow_hyphen_values = true)]
    pub cos: Option<String>,
    /// Sine parameter for `pencil`.
    #[arg(long, allow_hyphen_values = true)]
    pub sin: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that the map sends the sphere to the sphere.
    Validate(MapArg),
    /// Print the reflection matrix `V_H` (and `V` for rational maps).
    ReflectionMatrix(MapArg),
    /// Decide holomorphic degeneracy and the generic degeneracy.
    Classify(MapArg),
    /// Degeneracy at sphere points, by the reflection matrix and by jets.
    Degeneracy {
        #[command(flatten)]
        map: MapArg,
        /// Point as real and imaginary parts `x1,y1,x2,y2,...`; repeatable.
        /// Defaults to the generic witness point.
        #[arg(long = "point", allow_hyphen_values = true)]
        points: Vec<String>,
        /// Highest jet order to try; defaults to `2(d + m)`.
        #[arg(long)]
        max_order: Option<usize>,
    },
    /// Rank-drop strata of the reflection matrix.
    Stratify {
        #[command(flatten)]
        map: MapArg,
        #[arg(long, default_value_t = WITNESS_SEED)]
        seed: u64,
    },
    /// Fiber of the X-variety over a point.
    Xfiber {
        #[command(flatten)]
        map: MapArg,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Infinitesimal deformations and rigidity.
    Hol {
        #[command(flatten)]
        map: MapArg,
        /// JSON file with a vector `X'` to test for membership and triviality.
        #[arg(long)]
        check: Option<PathBuf>,
        /// Omit the basis from the report.
        #[arg(long)]
        no_basis: bool,
    },
    /// validate, reflection-matrix, classify, stratify and hol in one report.
    Analyze {
        #[command(flatten)]
        map: MapArg,
        #[arg(long, default_value_t = WITNESS_SEED)]
        seed: u64,
    },
    /// List the catalog; with `--run`, analyze every entry.
    Catalog {
        #[arg(long)]
        run: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::ReflectionMatrix(_) => "reflection-matrix",
            Command::Classify(_) => "classify",
            Command::Degeneracy { .. } => "degeneracy",
            Command::Stratify { .. } => "stratify",
            Command::Xfiber { .. } => "xfiber",
            Command::Hol { .. } => "hol",
            Command::Analyze { .. } => "analyze",
            Command::Catalog { .. } => "catalog",
        }
    }

    fn map_arg(&self) -> Option<&MapArg> {
        match self {
            Command::Validate(m) | Command::ReflectionMatrix(m) | Command::Classify(m) => Some(m),
            Command::Degeneracy { map, .. }
            | Command::Stratify { map, .. }
            | Command::Xfiber { map, .. }
            | Command::Hol { map, .. }
            | Command::Analyze { map, .. } => Some(map),
            Command::Catalog { .. } => None,
        }
    }
}

/// Exit code and printed output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Timer {
    enabled: bool,
    start: Instant,
    stages: Vec<(String, u128)>,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Self {
            enabled,
            start: Instant::now(),
            stages: Vec::new(),
        }
    }

    fn lap(&mut self, stage: &str) {
        if self.enabled {
            self.stages.push((stage.into(), self.start.elapsed().as_millis()));
            self.start = Instant::now();
        }
    }

    fn finish(self) -> Option<Vec<(String, u128)>> {
        self.enabled.then_some(self.stages)
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let threads =
        match std::env::var("SPHEREMAP_THREADS") {
            Ok(s) => s.trim().parse::<usize>().ok().filter(|&t| t > 0).ok_or_else(|| {
                CliError::Malformed(format!("SPHEREMAP_THREADS must be a positive integer, got {s:?}"))
            })?,
            Err(_) => 1,
        };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Internal(e.to_string()))
}

fn parse_point(s: &str, h: &SphereMap) -> Result<Point, CliError> {
    let p = Point::parse(s)?;
    if p.n() != h.n() {
        return Err(CliError::Malformed(format!(
            "point {p} has {} coordinates, the map has {}",
            p.n(),
            h.n()
        )));
    }
    if !p.on_sphere() {
        return Err(CliError::Malformed(format!("point {p} is not on the unit sphere")));
    }
    Ok(p)
}

/// One component of a vector file: an expression or a list of terms.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ComponentJson {
    Expr(String),
    Terms(Vec<TermJson>),
}

fn load_vector(path: &PathBuf, h: &SphereMap) -> Result<PolyVector, CliError> {
    let bad = |e: String| CliError::Malformed(format!("{}: {e}", path.display()));
    let text = std::fs::read_to_string(path).map_err(|e| bad(e.to_string()))?;
    let comps: Vec<ComponentJson> = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
    if comps.len() != h.m() {
        return Err(bad(format!("expected {} components, got {}", h.m(), comps.len())));
    }
    let entries = comps
        .iter()
        .map(|c| match c {
            ComponentJson::Expr(s) => BiPoly::parse(h.n(), s),
            ComponentJson::Terms(t) => BiPoly::from_json_terms(h.n(), t),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let v = PolyVector::new(entries);
    if !v.is_holomorphic() {
        return Err(bad("the vector must be holomorphic".into()));
    }
    Ok(v)
}

/// The full pipeline for one map, after validation.
pub fn analyze(h: &SphereMap, seed: u64, with_entries: bool) -> Result<Analysis, CliError> {
    let validation: Validation = h.validation_report().into();
    let r = build_reflection(h)?;
    let c = classify_map(h)?;
    let witness = if c.holomorphically_nondegenerate {
        None
    } else {
        degeneracy_witness(&r)?
    };
    let s = stratify_with_seed(&r, seed)?;
    let x = x_classify_from(&s);
    let b = solve_hol(h)?;
    let mut a = Analysis {
        validation,
        reflection: Reflection::new(&r, with_entries),
        classification: ClassificationOut::new(&c, witness.as_ref()),
        stratification: Stratification::new(&s, &x, seed, with_entries),
        deformations: Deformations::new(&b, false),
        rigid: b.rigid(),
        consistency: Vec::new(),
    };
    a.consistency = a.check(&MapSummary::from(h));
    Ok(a)
}

struct Report {
    value: serde_json::Value,
    code: i32,
}

fn envelope<T: Serialize>(command: &str, map: Option<&SphereMap>, result: T, timer: Timer) -> serde_json::Value {
    serde_json::to_value(Envelope {
        schema: SCHEMA,
        command: command.into(),
        map: map.map(MapSummary::from),
        result,
        timing_ms: timer.finish(),
    })
    .expect("reports serialize")
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let name = cli.command.name();
    let mut timer = Timer::new(cli.timing);
    if let Command::Catalog { run } = &cli.command {
        return catalog_command(*run, timer);
    }
    let arg = cli.command.map_arg().expect("map commands carry a map");
    let opts = MapOptions {
        cos: arg.cos.clone(),
        sin: arg.sin.clone(),
    };
    let h = catalog::resolve(&arg.map, &opts)?;
    let validation: Validation = h.validation_report().into();
    timer.lap("validate");
    if !validation.valid {
        return Ok(Report {
            value: envelope(name, Some(&h), validation, timer),
            code: 2,
        });
    }
    let mut code = 0;
    let value = match &cli.command {
        Command::Validate(_) => envelope(name, Some(&h), validation, timer),
        Command::ReflectionMatrix(_) => {
            let r = build_reflection(&h)?;
            timer.lap("reflection");
            envelope(name, Some(&h), Reflection::new(&r, true), timer)
        }
        Command::Classify(_) => {
            let c = classify_map(&h)?;
            let witness = if c.holomorphically_nondegenerate {
                None
            } else {
                degeneracy_witness(&build_reflection(&h)?)?
            };
            timer.lap("classify");
            envelope(name, Some(&h), ClassificationOut::new(&c, witness.as_ref()), timer)
        }
        Command::Degeneracy { points, max_order, .. } => {
            let r = build_reflection(&h)?;
            let points = if points.is_empty() {
                vec![generic_rank(&r)?.witness]
            } else {
                points
                    .iter()
                    .map(|s| parse_point(s, &h))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let max_order = max_order.unwrap_or_else(|| default_max_order(&h));
            let pool = thread_pool()?;
            let reports = pool.install(|| {
                points
                    .par_iter()
                    .map(|p| -> Result<PointDegeneracy, CliError> {
                        let k = kernel_at_point(&r, p)?;
                        let j = jet_degeneracy(&h, p, max_order)?;
                        Ok(PointDegeneracy::new(p, &k, &j, max_order))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })?;
            timer.lap("degeneracy");
            if reports.iter().any(|d| d.inconclusive) {
                code = 3;
            } else if reports.iter().any(|d| !d.methods_agree) {
                code = 4;
            }
            envelope(name, Some(&h), reports, timer)
        }
        Command::Stratify { seed, .. } => {
            let r = build_reflection(&h)?;
            let s = stratify_with_seed(&r, *seed)?;
            let x = x_classify_from(&s);
            timer.lap("stratify");
            if !s.certified {
                code = 3;
            }
            envelope(name, Some(&h), Stratification::new(&s, &x, *seed, true), timer)
        }
        Command::Xfiber { point, .. } => {
            let p = parse_point(point, &h)?;
            let f = x_fiber(&build_reflection(&h)?, &p)?;
            timer.lap("xfiber");
            envelope(name, Some(&h), Fiber::from(&f), timer)
        }
        Command::Hol { check: Some(path), .. } => {
            let x = load_vector(path, &h)?;
            let member = in_hol(&h, &x);
            let trivial = if member {
                Some(is_trivial_deformation(&h, &x)?)
            } else {
                None
            };
            timer.lap("check");
            let m = Membership {
                vector: (&x).into(),
                in_hol: member,
                trivial,
            };
            envelope(name, Some(&h), m, timer)
        }
        Command::Hol { no_basis, .. } => {
            let b = solve_hol(&h)?;
            timer.lap("hol");
            envelope(name, Some(&h), Deformations::new(&b, !no_basis), timer)
        }
        Command::Analyze { seed, .. } => {
            let a = analyze(&h, *seed, false)?;
            timer.lap("analyze");
            if !a.consistency.is_empty() {
                code = 4;
            }
            envelope(name, Some(&h), a, timer)
        }
        Command::Catalog { .. } => unreachable!("handled above"),
    };
    Ok(Report { value, code })
}

fn catalog_row(e: &catalog::CatalogEntry, run: bool) -> CatalogRow {
    let mut row = CatalogRow {
        key: e.key.clone(),
        description: e.description.clone(),
        origin: e.origin.clone(),
        valid: false,
        holomorphically_nondegenerate: None,
        hol: None,
        rigid: None,
        consistency: None,
    };
    let Ok(h) = catalog::build(&e.key, &MapOptions::default()) else {
        return row;
    };
    row.valid = h.validate();
    if run && row.valid {
        match analyze(&h, WITNESS_SEED, false) {
            Ok(a) => {
                row.holomorphically_nondegenerate = Some(a.classification.holomorphically_nondegenerate);
                row.hol = Some(a.deformations.dimension.clone());
                row.rigid = Some(a.rigid);
                row.consistency = Some(a.consistency);
            }
            Err(err) => row.consistency = Some(vec![err.to_string()]),
        }
    }
    row
}

fn catalog_command(run: bool, mut timer: Timer) -> Result<Report, CliError> {
    let entries = catalog::entries();
    let pool = thread_pool()?;
    let rows: Vec<CatalogRow> = pool.install(|| entries.par_iter().map(|e| catalog_row(e, run)).collect());
    timer.lap("catalog");
    let code = if rows.iter().any(|r| !r.valid) {
        2
    } else if rows
        .iter()
        .any(|r| r.consistency.as_ref().is_some_and(|c| !c.is_empty()))
    {
        4
    } else {
        0
    };
    Ok(Report {
        value: envelope("catalog", None, rows, timer),
        code,
    })
}

fn format(value: &serde_json::Value, json: bool) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(value).expect("json");
        s.push('\n');
        s
    } else {
        render::text(value)
    }
}

/// Runs one invocation given the full argument list (program name first).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(r) => Outcome {
            code: r.code,
            stdout: format(&r.value, cli.json),
            stderr: String::new(),
        },
        Err(e) => {
            let stdout = if cli.json {
                format(
                    &serde_json::json!({
                        "schema": SCHEMA,
                        "command": cli.command.name(),
                        "error": e.to_string(),
                        "exit_code": e.exit_code(),
                    }),
                    true,
                )
            } else {
                String::new()
            };
            Outcome {
                code: e.exit_code(),
                stdout,
                stderr: format!("error: {e}\n"),
            }
        }
    }
}
