use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use altwrithe_core::flips::harness::{self, HarnessConfig, HarnessReport};
use altwrithe_core::rational::{self, RationalLink};
use altwrithe_core::{
    collisions, compare, corpus, parse_corpus, parse_native, parse_pd, profile, seifert_graph,
    smooth, to_dot, validate, Error, InvariantProfile, OrientedDiagram, PhiMode,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_PARTIAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "altwrithe",
    version,
    about = "Writhe-like invariants of reduced alternating link diagrams"
)]
struct Cli {
    /// Diagram notation of input files.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pd)]
    format: Format,
    /// Equivalence used for lock vectors.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Rotation)]
    phi_mode: Mode,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pd,
    Native,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Rotation,
    RotationReversal,
}

impl From<Mode> for PhiMode {
    fn from(m: Mode) -> PhiMode {
        match m {
            Mode::Rotation => PhiMode::Rotation,
            Mode::RotationReversal => PhiMode::RotationReversal,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    /// JSON.
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariant profile of a diagram (`-` reads standard input).
    Compute { input: PathBuf },
    /// Compare the profiles of two diagrams field by field.
    Compare { first: PathBuf, second: PathBuf },
    /// Profile every entry of a `name<TAB>pd` corpus and report the pairs
    /// no field tells apart.
    Corpus {
        #[arg(required_unless_present = "bundled")]
        path: Option<PathBuf>,
        /// Use the built-in table of alternating knots through 9 crossings.
        #[arg(long, conflicts_with = "path")]
        bundled: bool,
    },
    /// Print the weighted Seifert graph in DOT.
    Graph { input: PathBuf },
    /// Continued fraction, 4-plat and strong invertibility of `L(p/q)`.
    Rational {
        #[arg(long, value_parser = parse_fraction)]
        fraction: (u64, u64),
        /// Also print the PD code of the 4-plat.
        #[arg(long)]
        pd: bool,
        /// Also print the profiles of both orientations (two components only).
        #[arg(long)]
        profiles: bool,
    },
    /// Random Whitney-flip walks checking that the graph profile never changes.
    Fliptest(FlipArgs),
}

#[derive(Args)]
struct FlipArgs {
    #[arg(long, default_value_t = 4)]
    min_vertices: usize,
    #[arg(long, default_value_t = 20)]
    max_vertices: usize,
    /// Weights are drawn from ±[1, max-weight].
    #[arg(long, default_value_t = 9)]
    max_weight: i64,
    #[arg(long, default_value_t = 50)]
    steps: usize,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, env = "ALTWRITHE_SEED", default_value_t = 0)]
    seed: u64,
}

fn parse_fraction(s: &str) -> Result<(u64, u64), String> {
    let (p, q) = s
        .split_once('/')
        .ok_or_else(|| format!("expected p/q, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(p)?, num(q)?))
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. }
        | Error::ArcUsage(_)
        | Error::Incidence(_)
        | Error::Native(_)
        | Error::Corpus { .. }
        | Error::Fraction { .. }
        | Error::ContinuedFraction(_) => EXIT_PARSE,
        Error::Invalid(_)
        | Error::Disconnected
        | Error::SelfLoop { .. }
        | Error::SignConflict(..)
        | Error::MixedBlock => EXIT_INVALID,
        _ => EXIT_FAILURE,
    }
}

fn with_context(e: Error, what: &str) -> Failure {
    let code = exit_code(&e);
    let mut message = format!("{what}: {e}");
    if let Error::Invalid(report) = &e {
        message.push('\n');
        message.push_str(&report_text(report));
    }
    Failure::new(code, message)
}

fn report_text(r: &altwrithe_core::ValidationReport) -> String {
    format!(
        "connected: {}\nalternating: {}\nreduced: {}\ncrossings: {}\ncomponents: {}",
        r.connected, r.alternating, r.reduced, r.crossing_count, r.component_count
    )
}

fn read_text(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load(cli: &Cli, path: &Path) -> Result<OrientedDiagram, Failure> {
    let text = read_text(path)?;
    let what = path.display().to_string();
    let d = match cli.format {
        Format::Pd => parse_pd(&text),
        Format::Native => parse_native(&text),
    }
    .map_err(|e| with_context(e, &what))?;
    let report = validate(&d);
    if !report.is_valid() {
        if cli.output == Output::Structured {
            print_json(&json!({ "input": what, "validation": report }));
        }
        return Err(with_context(Error::Invalid(Box::new(report)), &what));
    }
    Ok(d)
}

fn load_profile(cli: &Cli, path: &Path) -> Result<InvariantProfile, Failure> {
    let d = load(cli, path)?;
    profile(&d).map_err(|e| with_context(e, &path.display().to_string()))
}

fn print_json(v: &impl Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("serializable output")
    );
}

fn cmd_compute(cli: &Cli, input: &Path) -> Result<u8, Failure> {
    let mode = cli.phi_mode.into();
    let p = load_profile(cli, input)?;
    match cli.output {
        Output::Text => print!("{}", p.to_text(mode)),
        Output::Structured => print_json(&p.to_json_value(mode)),
    }
    Ok(0)
}

fn cmd_compare(cli: &Cli, first: &Path, second: &Path) -> Result<u8, Failure> {
    let a = load_profile(cli, first)?;
    let b = load_profile(cli, second)?;
    let fields = compare(&a, &b, cli.phi_mode.into());
    let distinguished = fields.iter().any(|f| !f.equal);
    match cli.output {
        Output::Text => {
            for f in &fields {
                let verdict = if f.equal { "equal" } else { "different" };
                println!("{}: {verdict}", f.field);
            }
            println!(
                "{}",
                if distinguished {
                    "DISTINGUISHED"
                } else {
                    "NOT DISTINGUISHED"
                }
            );
        }
        Output::Structured => print_json(&json!({
            "fields": fields,
            "distinguished": distinguished,
        })),
    }
    Ok(0)
}

#[derive(Serialize)]
struct Skipped {
    name: String,
    line: usize,
    error: String,
}

fn cmd_corpus(cli: &Cli, path: Option<&Path>) -> Result<u8, Failure> {
    let entries = match path {
        Some(p) => {
            parse_corpus(&read_text(p)?).map_err(|e| with_context(e, &p.display().to_string()))?
        }
        None => corpus::bundled(),
    };
    let results: Vec<_> = entries
        .par_iter()
        .map(|e| (e, parse_pd(&e.pd).and_then(|d| profile(&d))))
        .collect();
    let mut profiles = Vec::new();
    let mut skipped = Vec::new();
    for (e, r) in results {
        match r {
            Ok(p) => profiles.push((e.name.clone(), p)),
            Err(err) => skipped.push(Skipped {
                name: e.name.clone(),
                line: e.line,
                error: err.to_string(),
            }),
        }
    }
    profiles.sort_by(|a, b| a.0.cmp(&b.0));
    skipped.sort_by(|a, b| a.name.cmp(&b.name));
    let pairs = collisions(&profiles, cli.phi_mode.into());
    match cli.output {
        Output::Text => {
            println!("entries: {}", entries.len());
            println!("profiled: {}", profiles.len());
            for s in &skipped {
                println!("skipped {} (line {}): {}", s.name, s.line, s.error);
            }
            println!("collisions: {}", pairs.len());
            for (a, b) in &pairs {
                println!("NOT DISTINGUISHED {a} {b}");
            }
        }
        Output::Structured => print_json(&json!({
            "entries": entries.len(),
            "profiled": profiles.len(),
            "skipped": skipped,
            "collisions": pairs,
        })),
    }
    Ok(if !skipped.is_empty() {
        EXIT_PARTIAL
    } else if !pairs.is_empty() {
        EXIT_FAILURE
    } else {
        0
    })
}

fn cmd_graph(cli: &Cli, input: &Path) -> Result<u8, Failure> {
    let d = load(cli, input)?;
    let what = input.display().to_string();
    let s = smooth(&d).map_err(|e| with_context(e, &what))?;
    let g = seifert_graph(&s, &d).map_err(|e| with_context(e, &what))?;
    print!("{}", to_dot(&g));
    Ok(0)
}

fn cmd_rational(cli: &Cli, (p, q): (u64, u64), pd: bool, profiles: bool) -> Result<u8, Failure> {
    let mode = cli.phi_mode.into();
    let what = format!("{p}/{q}");
    let r = RationalLink::new(p, q).map_err(|e| with_context(e, &what))?;
    let invertible = match rational::is_strongly_invertible(p, q) {
        Ok(b) => Ok(b),
        Err(e @ Error::NotTwoComponent { .. }) => Err(e.to_string()),
        Err(e) => return Err(with_context(e, &what)),
    };
    let variants = if profiles && r.components() == 2 {
        let (l1, l2) = rational::orientation_variants(&r).map_err(|e| with_context(e, &what))?;
        let p1 = profile(&l1).map_err(|e| with_context(e, "L1"))?;
        let p2 = profile(&l2).map_err(|e| with_context(e, "L2"))?;
        Some((p1, p2))
    } else {
        None
    };
    let code = altwrithe_core::emit_pd(&r.diagram);
    match cli.output {
        Output::Text => {
            let cf: Vec<String> = r.cf.iter().map(|a| a.to_string()).collect();
            println!("fraction: {p}/{q}");
            println!("continued fraction: [{}]", cf.join(","));
            println!("components: {}", r.components());
            match &invertible {
                Ok(b) => println!("strongly invertible: {b}"),
                Err(msg) => println!("strongly invertible: error: {msg}"),
            }
            if pd {
                println!("pd: {code}");
            }
            if let Some((p1, p2)) = &variants {
                println!("-- L1");
                print!("{}", p1.to_text(mode));
                println!("-- L2");
                print!("{}", p2.to_text(mode));
                let same = altwrithe_core::profiles_equal(p1, p2, mode);
                println!("L1 and L2 profiles equal: {same}");
            }
        }
        Output::Structured => {
            let mut doc = json!({
                "p": p,
                "q": q,
                "continued_fraction": r.cf,
                "components": r.components(),
            });
            match &invertible {
                Ok(b) => doc["strongly_invertible"] = json!(b),
                Err(msg) => doc["error"] = json!(msg),
            }
            if pd {
                doc["pd"] = json!(code);
            }
            if let Some((p1, p2)) = &variants {
                doc["L1"] = serde_json::to_value(p1.to_json_value(mode)).expect("json");
                doc["L2"] = serde_json::to_value(p2.to_json_value(mode)).expect("json");
            }
            print_json(&doc);
        }
    }
    Ok(0)
}

fn cmd_fliptest(cli: &Cli, a: &FlipArgs) -> Result<u8, Failure> {
    if a.min_vertices < 2 || a.min_vertices > a.max_vertices || a.max_weight < 2 {
        return Err(Failure::new(
            EXIT_PARSE,
            "need 2 <= min-vertices <= max-vertices and max-weight >= 2",
        ));
    }
    let config = HarnessConfig {
        min_vertices: a.min_vertices,
        max_vertices: a.max_vertices,
        max_weight: a.max_weight,
        steps: a.steps,
        trials: a.trials,
        seed: a.seed,
    };
    let trials = (0..config.trials)
        .into_par_iter()
        .map(|i| harness::run_trial(&config, i))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| with_context(e, "fliptest"))?;
    let report = HarnessReport::from_trials(trials);
    match cli.output {
        Output::Text => {
            println!("seed: {}", config.seed);
            println!("trials: {}", report.trials);
            println!("flips applied: {}", report.applied);
            println!("steps without a flip site: {}", report.skipped);
            println!("violations: {}", report.violations.len());
            for v in &report.violations {
                println!(
                    "trial {} step {} {}: {}",
                    v.trial,
                    v.step,
                    v.flip,
                    v.fields.join(",")
                );
            }
        }
        Output::Structured => print_json(&json!({ "config": config, "report": report })),
    }
    Ok(if report.violations.is_empty() {
        0
    } else {
        EXIT_FAILURE
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute { input } => cmd_compute(&cli, input),
        Command::Compare { first, second } => cmd_compare(&cli, first, second),
        Command::Corpus { path, .. } => cmd_corpus(&cli, path.as_deref()),
        Command::Graph { input } => cmd_graph(&cli, input),
        Command::Rational {
            fraction,
            pd,
            profiles,
        } => cmd_rational(&cli, *fraction, *pd, *profiles),
        Command::Fliptest(a) => cmd_fliptest(&cli, a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("altwrithe: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
