//! Command-line interface: JSON in, JSON out, exact rationals everywhere.
//!
//! Exit codes: 0 on success, 1 when a solver ran fine but found no
//! transversal (or a search exhausted its budget), 2 on input or
//! validation errors (with a machine-readable error object on stdout).

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use santalo::cremona::{cremona_combination, from_cremona, to_cremona, CremonaLine, Weighting};
use santalo::dual_flats::{
    hyperplane_meets_box, hyperplane_transversal, hyperplane_transversal_global,
    star_transversal, AscendingHyperplane, StarBox, StarFlat,
};
use santalo::geometry::{reflect_box, BoxRd, RectLine, SignClass, VecD};
use santalo::oracles::stabs_all;
use santalo::pluecker::{
    check_lg_relations, check_pluecker_relations, classify_indeterminacy, cremona_transform,
    line_to_pluecker, projective_eq, Chart, PlueckerPoint,
};
use santalo::rat::Rat;
use santalo::span::{
    build_span_matrix, frame_hull_membership_meeting, meeting_cone, rank_at_point,
    scroll_membership,
};
use santalo::transversal::{
    grunbaum_search, helly_check, santalo_transversal, verify_grunbaum, HellyMode,
    SubsetStrategy, TransversalCertificate,
};

const SCHEMA: &str = "tk/1";

#[derive(Parser)]
#[command(
    name = "santalo",
    about = "Exact line transversals to axis-parallel boxes via Cremona coordinates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// Input JSON file; `-` or omitted reads stdin.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Round-trips a line between rectilinear, Cremona and Plücker
    /// coordinates, verifying the chart identities.
    Convert(InputArg),
    /// Searches all sign classes for a line transversal to a box family.
    Transversal {
        #[command(flatten)]
        input: InputArg,
        /// Skip the oracle re-verification of emitted certificates.
        #[arg(long)]
        no_verify: bool,
    },
    /// Searches for an ascending hyperplane transversal.
    Hyperplane {
        #[command(flatten)]
        input: InputArg,
        /// Fixed sign class, e.g. `++-`; all classes when omitted.
        #[arg(long)]
        sign: Option<String>,
        #[arg(long)]
        no_verify: bool,
    },
    /// Batch `*`-transversality of ascending (d-2)-flats to `*`-boxes.
    Star(InputArg),
    /// Verifies the Helly property of a box family.
    Helly {
        #[command(flatten)]
        input: InputArg,
        /// ascending | sign | global | hyperplane | hyperplane-global
        #[arg(long, default_value = "global")]
        mode: String,
        /// Sign class for the sign / hyperplane modes, e.g. `+-`.
        #[arg(long)]
        sign: Option<String>,
        /// auto | exhaustive
        #[arg(long, default_value = "auto")]
        strategy: String,
        /// Worker threads for subset enumeration.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Samples lines of the Cremona-convex hull of the input lines and
    /// emits plot-ready polylines.
    Hull {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 9)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Parameter steps per emitted polyline.
        #[arg(long, default_value_t = 7)]
        points: usize,
        /// Additionally render decimal approximations (non-authoritative).
        #[arg(long)]
        float: bool,
    },
    /// Builds the span matrix of a line family and evaluates query points.
    Span(InputArg),
    /// The quadric cone and frame-convex hull of two meeting lines in R^3.
    Cone(InputArg),
    /// Randomized search for a six-square Helly-sharpness instance.
    GrunbaumSearch {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum number of exact score evaluations.
        #[arg(long, default_value_t = 200_000)]
        budget: u64,
    },
}

fn read_input(arg: &InputArg) -> Result<String, String> {
    if arg.input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(&arg.input)
            .map_err(|e| format!("reading {}: {e}", arg.input))
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, String> {
    serde_json::from_str(text).map_err(|e| format!("invalid input JSON: {e}"))
}

fn parse_sign(text: &str) -> Result<SignClass, String> {
    let signs: Vec<i8> = text
        .chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            other => Err(format!("invalid sign character {other:?}")),
        })
        .collect::<Result<_, _>>()?;
    SignClass::new(&signs).map_err(|e| e.to_string())
}

fn sign_string(sign: &SignClass) -> String {
    sign.signs()
        .iter()
        .map(|&s| if s == 1 { '+' } else { '-' })
        .collect()
}

fn family_dim(boxes: &[BoxRd]) -> Result<usize, String> {
    let dim = boxes.first().map(BoxRd::dim).ok_or("empty box family")?;
    if boxes.iter().any(|b| b.dim() != dim) {
        return Err("boxes have mixed dimensions".into());
    }
    Ok(dim)
}

fn emit(value: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&value).unwrap());
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            emit(json!({ "schema": SCHEMA, "error": { "message": message } }));
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Convert(input) => convert(&input),
        Command::Transversal { input, no_verify } => transversal(&input, no_verify),
        Command::Hyperplane {
            input,
            sign,
            no_verify,
        } => hyperplane(&input, sign.as_deref(), no_verify),
        Command::Star(input) => star(&input),
        Command::Helly {
            input,
            mode,
            sign,
            strategy,
            jobs,
        } => helly(&input, &mode, sign.as_deref(), &strategy, jobs),
        Command::Hull {
            input,
            samples,
            seed,
            points,
            float,
        } => hull(&input, samples, seed, points, float),
        Command::Span(input) => span(&input),
        Command::Cone(input) => cone(&input),
        Command::GrunbaumSearch { seed, budget } => grunbaum(seed, budget),
    }
}

#[derive(Deserialize)]
struct ConvertInput {
    line: Option<RectLine>,
    cremona: Option<CremonaLine>,
    pluecker: Option<PlueckerPoint>,
}

fn convert(input: &InputArg) -> Result<ExitCode, String> {
    let spec: ConvertInput = parse(&read_input(input)?)?;
    let line = match (&spec.line, &spec.cremona, &spec.pluecker) {
        (Some(line), None, None) => Some(line.clone()),
        (None, Some(c), None) => Some(from_cremona(c)),
        (None, None, Some(_)) => None,
        _ => return Err("provide exactly one of line / cremona / pluecker".into()),
    };

    let mut out = json!({ "schema": SCHEMA, "command": "convert" });
    let obj = out.as_object_mut().unwrap();
    if let Some(line) = line {
        let p = line_to_pluecker(&line).map_err(|e| e.to_string())?;
        let relations_ok = check_pluecker_relations(&p).map_err(|e| e.to_string())?;
        let cremona = to_cremona(&line).ok();
        let q = cremona_transform(&p).ok();
        let mut round_trip_ok = relations_ok;
        if let Some(c) = &cremona {
            let back = line_to_pluecker(&from_cremona(c)).map_err(|e| e.to_string())?;
            round_trip_ok &= projective_eq(&back, &p);
        }
        if let Some(q) = &q {
            round_trip_ok &= check_lg_relations(q).map_err(|e| e.to_string())?;
            let back = cremona_transform(q).map_err(|e| e.to_string())?;
            round_trip_ok &= projective_eq(&back, &p);
        }
        obj.insert("rect".into(), serde_json::to_value(&line).unwrap());
        obj.insert("cremona".into(), serde_json::to_value(&cremona).unwrap());
        obj.insert("pluecker_p".into(), serde_json::to_value(&p).unwrap());
        obj.insert("pluecker_q".into(), serde_json::to_value(&q).unwrap());
        obj.insert("round_trip_ok".into(), json!(round_trip_ok));
    } else {
        let p = spec.pluecker.unwrap();
        let summary = match p.chart() {
            Chart::P => {
                let ok = check_pluecker_relations(&p).map_err(|e| e.to_string())?;
                json!({
                    "pluecker_relations_ok": ok,
                    "indeterminacy": classify_indeterminacy(&p),
                    "image": cremona_transform(&p).ok(),
                })
            }
            Chart::Q => {
                let ok = check_lg_relations(&p).map_err(|e| e.to_string())?;
                json!({
                    "lg_relations_ok": ok,
                    "image": cremona_transform(&p).ok(),
                })
            }
        };
        obj.insert("pluecker".into(), serde_json::to_value(&p).unwrap());
        obj.insert("analysis".into(), summary);
    }
    emit(out);
    Ok(ExitCode::SUCCESS)
}

#[derive(Deserialize)]
struct BoxesInput {
    boxes: Vec<BoxRd>,
    dim: Option<usize>,
}

fn transversal(input: &InputArg, no_verify: bool) -> Result<ExitCode, String> {
    let spec: BoxesInput = parse(&read_input(input)?)?;
    let dim = match spec.dim {
        Some(d) => d,
        None => family_dim(&spec.boxes)?,
    };
    let cert = santalo_transversal(dim, &spec.boxes).map_err(|e| e.to_string())?;
    let verified = if no_verify {
        None
    } else {
        Some(match &cert {
            TransversalCertificate::Feasible { line, .. } => stabs_all(line, &spec.boxes),
            TransversalCertificate::Infeasible { .. } => true,
        })
    };
    let feasible = cert.is_feasible();
    emit(json!({
        "schema": SCHEMA,
        "command": "transversal",
        "dim": dim,
        "certificate": cert,
        "verified": verified,
    }));
    Ok(if feasible {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn hyperplane(
    input: &InputArg,
    sign: Option<&str>,
    no_verify: bool,
) -> Result<ExitCode, String> {
    let spec: BoxesInput = parse(&read_input(input)?)?;
    let dim = match spec.dim {
        Some(d) => d,
        None => family_dim(&spec.boxes)?,
    };
    let found: Option<(SignClass, AscendingHyperplane)> = match sign {
        Some(text) => {
            let eps = parse_sign(text)?;
            hyperplane_transversal(dim, &spec.boxes, &eps)
                .map_err(|e| e.to_string())?
                .map(|h| (eps, h))
        }
        None => hyperplane_transversal_global(dim, &spec.boxes).map_err(|e| e.to_string())?,
    };
    let verified = match (&found, no_verify) {
        (_, true) => None,
        (Some((eps, h)), false) => {
            let mut ok = true;
            for b in &spec.boxes {
                let rb = reflect_box(b, eps).map_err(|e| e.to_string())?;
                ok &= hyperplane_meets_box(h, &rb).map_err(|e| e.to_string())?;
            }
            Some(ok)
        }
        (None, false) => Some(true),
    };
    let result = match &found {
        Some((eps, h)) => json!({
            "status": "feasible",
            "sign": sign_string(eps),
            "hyperplane": h,
        }),
        None => json!({ "status": "infeasible" }),
    };
    emit(json!({
        "schema": SCHEMA,
        "command": "hyperplane",
        "dim": dim,
        "result": result,
        "verified": verified,
    }));
    Ok(if found.is_some() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Deserialize)]
struct StarInput {
    flats: Vec<StarFlat>,
    starboxes: Vec<StarBox>,
}

fn star(input: &InputArg) -> Result<ExitCode, String> {
    let spec: StarInput = parse(&read_input(input)?)?;
    let mut results = Vec::new();
    for flat in &spec.flats {
        let mut row = Vec::new();
        for sbox in &spec.starboxes {
            row.push(star_transversal(flat, sbox).map_err(|e| e.to_string())?);
        }
        results.push(row);
    }
    emit(json!({
        "schema": SCHEMA,
        "command": "star",
        "results": results,
    }));
    Ok(ExitCode::SUCCESS)
}

fn helly(
    input: &InputArg,
    mode: &str,
    sign: Option<&str>,
    strategy: &str,
    jobs: Option<usize>,
) -> Result<ExitCode, String> {
    let spec: BoxesInput = parse(&read_input(input)?)?;
    let dim = match spec.dim {
        Some(d) => d,
        None => family_dim(&spec.boxes)?,
    };
    let sign_class = match sign {
        Some(text) => Some(parse_sign(text)?),
        None => None,
    };
    let mode = match mode {
        "ascending" => HellyMode::Ascending,
        "sign" => HellyMode::Sign {
            sign: sign_class.clone().ok_or("mode `sign` needs --sign")?,
        },
        "global" => HellyMode::Global,
        "hyperplane" => HellyMode::Hyperplane {
            sign: sign_class.clone().unwrap_or_else(|| SignClass::all_plus(dim)),
        },
        "hyperplane-global" => HellyMode::HyperplaneGlobal,
        other => return Err(format!("unknown helly mode {other:?}")),
    };
    let strategy = match strategy {
        "auto" => SubsetStrategy::Auto,
        "exhaustive" => SubsetStrategy::Exhaustive,
        other => return Err(format!("unknown strategy {other:?}")),
    };
    let report = if let Some(jobs) = jobs {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| e.to_string())?;
        pool.install(|| helly_check(dim, &spec.boxes, mode, strategy))
            .map_err(|e| e.to_string())?
    } else {
        helly_check(dim, &spec.boxes, mode, strategy).map_err(|e| e.to_string())?
    };
    emit(json!({
        "schema": SCHEMA,
        "command": "helly",
        "dim": dim,
        "report": report,
    }));
    Ok(ExitCode::SUCCESS)
}

#[derive(Deserialize)]
struct HullInput {
    lines: Vec<RectLine>,
}

#[derive(Serialize)]
struct HullSample {
    weights: Vec<Rat>,
    line: RectLine,
    points: Vec<VecD>,
    #[serde(skip_serializing_if = "Option::is_none")]
    points_float: Option<Vec<Vec<f64>>>,
}

fn hull(
    input: &InputArg,
    samples: usize,
    seed: u64,
    points: usize,
    float: bool,
) -> Result<ExitCode, String> {
    let spec: HullInput = parse(&read_input(input)?)?;
    if spec.lines.len() < 2 {
        return Err("hull sampling needs at least two lines".into());
    }
    let gens: Vec<CremonaLine> = spec
        .lines
        .iter()
        .map(|l| to_cremona(l).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;

    let mut rng = santalo::sampling::rng(seed);
    let n = gens.len();
    let mut out = Vec::new();
    for k in 0..samples.max(2) {
        let weights: Vec<Rat> = if n == 2 {
            // Evenly spaced on the segment.
            let t = Rat::new(k as i64, (samples.max(2) - 1) as i64);
            vec![&Rat::one() - &t, t]
        } else {
            // Random rational simplex point.
            let raw: Vec<Rat> = (0..n)
                .map(|_| santalo::sampling::random_positive_rat(&mut rng, 8, 4))
                .collect();
            let total: Rat = raw.iter().sum();
            raw.into_iter().map(|w| w / &total).collect()
        };
        let combo =
            cremona_combination(&gens, &weights, Weighting::Convex).map_err(|e| e.to_string())?;
        let line = from_cremona(&combo);
        let steps = points.max(2);
        let pts: Vec<VecD> = (0..steps)
            .map(|i| {
                let t = &Rat::from_int(i as i64) * &Rat::new(2, 1)
                    - Rat::from_int(steps as i64 - 1);
                line.at(&t)
            })
            .collect();
        let points_float = float.then(|| {
            pts.iter()
                .map(|p| p.iter().map(Rat::to_f64).collect())
                .collect()
        });
        out.push(HullSample {
            weights,
            line,
            points: pts,
            points_float,
        });
    }
    emit(json!({
        "schema": SCHEMA,
        "command": "hull",
        "samples": out,
        "float_is_authoritative": false,
    }));
    Ok(ExitCode::SUCCESS)
}

#[derive(Deserialize)]
struct SpanInput {
    lines: Vec<RectLine>,
    #[serde(default)]
    points: Vec<VecD>,
}

fn span(input: &InputArg) -> Result<ExitCode, String> {
    let spec: SpanInput = parse(&read_input(input)?)?;
    let matrix = build_span_matrix(&spec.lines).map_err(|e| e.to_string())?;
    let mut evaluations = Vec::new();
    for point in &spec.points {
        let rank = rank_at_point(&matrix, point, &Rat::one()).map_err(|e| e.to_string())?;
        let on_scroll = if matrix.num_lines() < matrix.dim() {
            Some(scroll_membership(&matrix, point).map_err(|e| e.to_string())?)
        } else {
            None
        };
        evaluations.push(json!({
            "point": point,
            "rank": rank,
            "on_scroll": on_scroll,
        }));
    }
    emit(json!({
        "schema": SCHEMA,
        "command": "span",
        "matrix": matrix,
        "points": evaluations,
    }));
    Ok(ExitCode::SUCCESS)
}

#[derive(Deserialize)]
struct ConeInput {
    lines: Vec<RectLine>,
    #[serde(default)]
    queries: Vec<RectLine>,
}

fn cone(input: &InputArg) -> Result<ExitCode, String> {
    let spec: ConeInput = parse(&read_input(input)?)?;
    if spec.lines.len() != 2 {
        return Err("cone needs exactly two lines".into());
    }
    let cone = meeting_cone(&spec.lines[0], &spec.lines[1]).map_err(|e| e.to_string())?;
    let mut queries = Vec::new();
    for q in &spec.queries {
        let on_quadric = q.passes_through(&cone.apex)
            && cone.quadric_value(q.dir()).is_zero();
        let in_frame_hull = frame_hull_membership_meeting(&cone, q)
            .map(Some)
            .unwrap_or(None);
        queries.push(json!({
            "line": q,
            "on_quadric": on_quadric,
            "in_frame_hull": in_frame_hull,
        }));
    }
    emit(json!({
        "schema": SCHEMA,
        "command": "cone",
        "cone": cone,
        "queries": queries,
    }));
    Ok(ExitCode::SUCCESS)
}

fn grunbaum(seed: u64, budget: u64) -> Result<ExitCode, String> {
    let found = grunbaum_search(seed, budget).map_err(|e| e.to_string())?;
    let verified = match &found {
        Some(instance) => Some(verify_grunbaum(instance).map_err(|e| e.to_string())?),
        None => None,
    };
    let code = if found.is_some() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    };
    emit(json!({
        "schema": SCHEMA,
        "command": "grunbaum-search",
        "seed": seed,
        "budget": budget,
        "instance": found,
        "verified": verified,
    }));
    Ok(code)
}
