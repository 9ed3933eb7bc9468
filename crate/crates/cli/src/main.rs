//! `lgw`: command-line front end for lgw-core.
//!
//! Results go to stdout (or `--output`) as JSON. Failures print
//! `{"error": code, "detail": message}` on stderr and exit with 1
//! (computation) or 2 (usage or invalid input).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use lgw_core::acceptance::{self, AcceptanceConfig};
use lgw_core::degeneration::{degeneration_sum, line_conic_invariant};
use lgw_core::rational::{self, Rational};
use lgw_core::scattering::{complete, nodal_cubic_invariants, ScatteringDiagram};
use lgw_core::svg;
use lgw_core::toricgeo::{
    chow_verify_blowup_plane, fan_from_self_intersections, line_conic_toric_model,
    nodal_cubic_toric_model, specialization_checks, Fan,
};
use lgw_core::tropical::{
    self, count_f2, count_p2_toric, enumerate, Conditions, CountResult, DegreeData, End, Leaf,
    SearchBounds,
};
use lgw_core::Error;

#[derive(Parser)]
#[command(
    name = "lgw",
    version,
    about = "Log Gromov-Witten invariants of Looijenga pairs from the plane"
)]
struct Cli {
    /// Seed for generic point conditions (default: $LGW_SEED, else built in).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Complete a scattering diagram to a given order.
    Scatter {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Compute invariants N_d.
    #[command(subcommand)]
    Invariants(Invariants),
    /// Tropical curve counts.
    #[command(subcommand)]
    Tropical(Tropical),
    /// Operations on fans of smooth complete toric surfaces.
    #[command(subcommand)]
    Fan(FanCmd),
    /// Chow group checks for the blown-up plane.
    #[command(subcommand)]
    Chow(Chow),
    /// Run the acceptance suite.
    Acceptance {
        #[arg(long, default_value_t = 8)]
        order: u32,
    },
}

#[derive(Subcommand)]
enum Invariants {
    /// Plane with toric boundary.
    ToricP2 {
        #[arg(long)]
        degree: i64,
    },
    /// Plane with a line and a conic.
    LineConic {
        #[arg(long)]
        max_degree: i64,
        /// Count on F2 by tropical enumeration instead of the closed form.
        #[arg(long)]
        use_tropical: bool,
    },
    /// Plane with a nodal cubic.
    NodalCubic {
        #[arg(long)]
        max_degree: u32,
    },
}

#[derive(Subcommand)]
enum Tropical {
    Count {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Args)]
struct FanIo {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Subcommand)]
enum FanCmd {
    /// Self-intersection numbers of the boundary divisors.
    Selfint {
        #[command(flatten)]
        io: FanIo,
    },
    /// Rebuild a fan from self-intersection numbers, e.g. `0,-2,0,2`.
    FromSelfint {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        seq: Vec<i64>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    Blowup {
        #[command(flatten)]
        io: FanIo,
        #[arg(long)]
        corner: usize,
    },
    Blowdown {
        #[command(flatten)]
        io: FanIo,
        #[arg(long)]
        ray: usize,
    },
    /// Apply a matrix `a,b,c,d` = (a b; c d) of determinant 1.
    Sl2 {
        #[command(flatten)]
        io: FanIo,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
        matrix: Vec<i64>,
    },
    /// The toric model pipelines, stage by stage.
    Model {
        #[arg(value_parser = ["line-conic", "nodal-cubic"])]
        pair: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Chow {
    Verify,
}

/// Exit status and JSON error object.
#[derive(Debug)]
struct Failure {
    status: u8,
    code: &'static str,
    detail: String,
}

impl Failure {
    fn usage(detail: impl Into<String>) -> Self {
        Failure {
            status: 2,
            code: "usage",
            detail: detail.into(),
        }
    }

    fn input(detail: impl Into<String>) -> Self {
        Failure {
            status: 2,
            code: "invalid-input",
            detail: detail.into(),
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Failure {
            status: 2,
            code: "io",
            detail: format!("{}: {e}", path.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            status: 1,
            code: e.code(),
            detail: e.to_string(),
        }
    }
}

macro_rules! core_err {
    ($t:ty) => {
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Error::from(e).into()
            }
        }
    };
}
core_err!(lgw_core::scattering::ScatterError);
core_err!(lgw_core::tropical::TropicalError);
core_err!(lgw_core::degeneration::PartitionError);
core_err!(lgw_core::toricgeo::ToricError);
core_err!(lgw_core::series::SeriesError);

type Outcome = Result<Value, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return report(Failure::usage(e.to_string().trim().to_string())),
    };
    match run(cli) {
        Ok((value, status)) => {
            // a closed pipe downstream is not an error worth reporting
            let _ = writeln!(
                std::io::stdout().lock(),
                "{}",
                serde_json::to_string_pretty(&value).expect("json")
            );
            ExitCode::from(status)
        }
        Err(f) => report(f),
    }
}

fn report(f: Failure) -> ExitCode {
    eprintln!("{}", json!({"error": f.code, "detail": f.detail}));
    ExitCode::from(f.status)
}

fn seed(cli_seed: Option<u64>) -> Result<u64, Failure> {
    if let Some(s) = cli_seed {
        return Ok(s);
    }
    match std::env::var("LGW_SEED") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("LGW_SEED={v:?} is not an unsigned integer"))),
        Err(_) => Ok(tropical::DEFAULT_SEED),
    }
}

/// The JSON value to print and the exit status (1 when a check failed).
fn run(cli: Cli) -> Result<(Value, u8), Failure> {
    let seed = seed(cli.seed)?;
    let ok = |v: Value| Ok((v, 0));
    match cli.command {
        Command::Scatter {
            input,
            order,
            output,
            svg,
        } => {
            let v = scatter(&input, order, output.as_deref(), svg.as_deref())?;
            ok(v)
        }
        Command::Invariants(inv) => ok(invariants(inv, seed)?),
        Command::Tropical(Tropical::Count { config, svg }) => {
            ok(tropical_count(&config, svg.as_deref(), seed)?)
        }
        Command::Fan(cmd) => ok(fan(cmd)?),
        Command::Chow(Chow::Verify) => {
            let checks: Vec<_> = chow_verify_blowup_plane()
                .into_iter()
                .chain(specialization_checks())
                .collect();
            let all = checks.iter().all(|c| c.pass);
            Ok((
                json!({"pass": all, "checks": checks}),
                if all { 0 } else { 1 },
            ))
        }
        Command::Acceptance { order } => {
            if order == 0 {
                return Err(Failure::usage("--order must be at least 1"));
            }
            let report = acceptance::run(&AcceptanceConfig { order, seed });
            let all = report.iter().all(|c| c.pass);
            Ok((
                json!({"pass": all, "criteria": report}),
                if all { 0 } else { 1 },
            ))
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure {
        status: 1,
        ..Failure::io(path, e)
    })
}

fn scatter(input: &Path, order: u32, output: Option<&Path>, svg_path: Option<&Path>) -> Outcome {
    if order == 0 {
        return Err(Failure::usage("--order must be at least 1"));
    }
    let diagram: ScatteringDiagram = serde_json::from_str(&read(input)?)
        .map_err(|e| Failure::input(format!("{}: {e}", input.display())))?;
    let completed = complete(&diagram, order)?;
    let value = serde_json::to_value(&completed).expect("json");
    if let Some(p) = svg_path {
        write(p, &svg::diagram_svg(&completed))?;
    }
    match output {
        Some(p) => {
            write(
                p,
                &(serde_json::to_string_pretty(&value).expect("json") + "\n"),
            )?;
            Ok(json!({"output": p.display().to_string(), "walls": completed.walls().len()}))
        }
        None => Ok(value),
    }
}

fn entry(d: i64, n: &Rational) -> Value {
    json!({"d": d, "N": rational::to_decimal(n)})
}

fn invariants(inv: Invariants, seed: u64) -> Outcome {
    match inv {
        Invariants::ToricP2 { degree } => {
            if degree < 1 {
                return Err(Failure::usage("--degree must be at least 1"));
            }
            let r = count_p2_toric(degree, seed)?;
            Ok(entry(degree, &r.total))
        }
        Invariants::LineConic {
            max_degree,
            use_tropical,
        } => {
            if max_degree < 1 {
                return Err(Failure::usage("--max-degree must be at least 1"));
            }
            let mut out = Vec::new();
            for d in 1..=max_degree {
                let n = if use_tropical {
                    degeneration_sum(d, |m| {
                        count_f2(d as u32, m, seed)
                            .map(|r| r.total)
                            .map_err(Error::from)
                    })?
                } else {
                    line_conic_invariant(d)?
                };
                out.push(entry(d, &n));
            }
            Ok(Value::Array(out))
        }
        Invariants::NodalCubic { max_degree } => {
            if max_degree < 1 {
                return Err(Failure::usage("--max-degree must be at least 1"));
            }
            let ns = nodal_cubic_invariants(max_degree)?;
            Ok(Value::Array(
                ns.iter()
                    .enumerate()
                    .map(|(i, n)| entry(i as i64 + 1, n))
                    .collect(),
            ))
        }
    }
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct LeafJson {
    dir: [i64; 2],
    w: i64,
    #[serde(default)]
    fixed: bool,
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct TropicalConfig {
    leaves: Vec<LeafJson>,
    points: usize,
    /// Explicit point coordinates as `["p/q", "p/q"]`.
    #[serde(default)]
    coords: Option<Vec<[String; 2]>>,
    /// One entry per leaf: a point on the prescribed line, or null.
    #[serde(default)]
    anchors: Option<Vec<Option<[String; 2]>>>,
}

fn parse_point(p: &[String; 2]) -> Result<tropical::Point, Failure> {
    let c = |s: &str| rational::parse(s).map_err(|e| Failure::input(e.to_string()));
    Ok([c(&p[0])?, c(&p[1])?])
}

fn tropical_count(config: &Path, svg_path: Option<&Path>, seed: u64) -> Outcome {
    let cfg: TropicalConfig = serde_json::from_str(&read(config)?)
        .map_err(|e| Failure::input(format!("{}: {e}", config.display())))?;
    let leaves = cfg
        .leaves
        .iter()
        .map(|l| {
            if l.fixed {
                Leaf::fixed(l.dir, l.w)
            } else {
                Leaf::free(l.dir, l.w)
            }
        })
        .collect();
    let deg = DegreeData::new(leaves, cfg.points).map_err(|e| Failure::input(e.to_string()))?;
    let result = match (&cfg.coords, &cfg.anchors) {
        (None, None) => tropical::enumerate_generic(&deg, seed, &SearchBounds::default())?,
        _ => {
            let generic = Conditions::generic(&deg, seed);
            let points = match &cfg.coords {
                Some(c) => c.iter().map(parse_point).collect::<Result<_, _>>()?,
                None => generic.points,
            };
            let anchors = match &cfg.anchors {
                Some(a) => a
                    .iter()
                    .map(|p| p.as_ref().map(parse_point).transpose())
                    .collect::<Result<_, _>>()?,
                None => generic.anchors,
            };
            let cond = Conditions { points, anchors };
            let curves = enumerate(&deg, &cond, &SearchBounds::default()).map_err(|e| match e {
                tropical::TropicalError::ConditionCount { .. } => Failure::input(e.to_string()),
                other => other.into(),
            })?;
            tropical::count_result(curves, cond)
        }
    };
    if let Some(p) = svg_path {
        let curves: Vec<_> = result.curves.iter().map(|(c, _)| c.clone()).collect();
        write(p, &svg::curves_svg(&curves, &result.conditions))?;
    }
    Ok(count_json(&result))
}

fn point_json(p: &tropical::Point) -> Value {
    json!([rational::to_decimal(&p[0]), rational::to_decimal(&p[1])])
}

fn count_json(r: &CountResult) -> Value {
    let curves: Vec<Value> = r
        .curves
        .iter()
        .map(|(c, m)| {
            let edges: Vec<Value> = c
                .curve_type
                .edges
                .iter()
                .map(|e| {
                    let to = match e.to {
                        End::Vertex(v) => json!({"vertex": v}),
                        End::Leaf(l) => json!({"leaf": l}),
                    };
                    json!({"from": e.from, "to": to, "dir": e.direction, "w": e.weight})
                })
                .collect();
            json!({
                "multiplicity": rational::to_decimal(m),
                "vertices": c.positions.iter().map(point_json).collect::<Vec<_>>(),
                "edges": edges,
                "point_edges": c.curve_type.point_marks,
            })
        })
        .collect();
    json!({
        "total": rational::to_decimal(&r.total),
        "count": r.curves.len(),
        "points": r.conditions.points.iter().map(point_json).collect::<Vec<_>>(),
        "anchors": r.conditions.anchors.iter().map(|a| a.as_ref().map(point_json)).collect::<Vec<_>>(),
        "curves": curves,
    })
}

fn load_fan(path: &Path) -> Result<Fan, Failure> {
    let raw: Fan = serde_json::from_str(&read(path)?)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    raw.validated().map_err(|e| Failure::input(e.to_string()))
}

fn fan_out(f: &Fan, svg_path: Option<&Path>) -> Outcome {
    if let Some(p) = svg_path {
        write(p, &svg::fan_svg(f))?;
    }
    let mut v = serde_json::to_value(f).expect("json");
    v["selfint"] = json!(f.self_intersections());
    Ok(v)
}

fn fan(cmd: FanCmd) -> Outcome {
    match cmd {
        FanCmd::Selfint { io } => {
            let f = load_fan(&io.input)?;
            if let Some(p) = &io.svg {
                write(p, &svg::fan_svg(&f))?;
            }
            Ok(json!(f.self_intersections()))
        }
        FanCmd::FromSelfint { seq, svg } => {
            fan_out(&fan_from_self_intersections(&seq)?, svg.as_deref())
        }
        FanCmd::Blowup { io, corner } => fan_out(
            &load_fan(&io.input)?.blow_up(corner, None)?,
            io.svg.as_deref(),
        ),
        FanCmd::Blowdown { io, ray } => {
            fan_out(&load_fan(&io.input)?.blow_down(ray)?, io.svg.as_deref())
        }
        FanCmd::Sl2 { io, matrix } => {
            let [a, b, c, d] = matrix[..] else {
                return Err(Failure::usage(format!(
                    "--matrix needs 4 entries, got {}",
                    matrix.len()
                )));
            };
            fan_out(
                &load_fan(&io.input)?.apply_sl2(&[[a, b], [c, d]])?,
                io.svg.as_deref(),
            )
        }
        FanCmd::Model { pair, svg } => {
            let stages = if pair == "line-conic" {
                line_conic_toric_model()?
            } else {
                nodal_cubic_toric_model()?
            };
            if let Some(p) = svg {
                write(&p, &svg::fan_svg(&stages.last().expect("stages").1))?;
            }
            let out: Vec<Value> = stages
                .iter()
                .map(|(name, f)| {
                    let mut v = fan_out(f, None).expect("no svg");
                    v["stage"] = json!(name);
                    v
                })
                .collect();
            Ok(Value::Array(out))
        }
    }
}
