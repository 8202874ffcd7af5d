//! Command-line driver. Reports are flat `key: value` lines on stdout;
//! diagnostics go to stderr. Exit codes: 0 success, 1 validation,
//! verification or theory failure, 2 usage error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::domain::{branching_degree, check_perspective_labelling, configurations, DEFAULT_MAX_CONFIGS};
use crate::error::Error;
use crate::gen::{fixture, generate, GenKind, GenParams};
use crate::graph::{chromatic_exact, degree, greedy_color, ortho_graph, DEFAULT_EXACT_LIMIT};
use crate::io::{
    export_dot_domain, export_dot_graph, maximal_concurrent_pairs, read_es, read_labels, serialize_es, serialize_labels,
};
use crate::label::{check_simple, label_with, verify_labelling, Labelling, Strategy};
use crate::model::EventStructure;
use crate::theory::{verify_random, verify_structure, Limits};

/// Environment variable overriding the default vertex limit of the exact solver.
pub const EXACT_LIMIT_VAR: &str = "ESLAB_EXACT_LIMIT";

#[derive(Debug, Parser)]
#[command(name = "eslab", version, about = "Event structures, orthogonality graphs and nice labellings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ExactArgs {
    /// Largest number of colors the exact solver may try.
    #[arg(long, value_name = "N")]
    exact_cap: Option<usize>,
    /// Largest structure handed to the exact solver.
    #[arg(long, value_name = "N")]
    max_events_exact: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a structure.
    Validate { file: PathBuf },
    /// Degree, width, height, labelling number and relation counts.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        exact: ExactArgs,
    },
    /// Compute a nice labelling.
    Label {
        file: PathBuf,
        #[arg(long, value_parser = parse_strategy)]
        strategy: Strategy,
        #[arg(short, long, value_name = "OUT")]
        output: Option<PathBuf>,
        #[command(flatten)]
        exact: ExactArgs,
    },
    /// Verify a labelling file.
    Check {
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        labels: PathBuf,
    },
    /// Enumerate the configuration domain.
    Domain {
        file: PathBuf,
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        labels: Option<PathBuf>,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_CONFIGS)]
        max_configs: usize,
    },
    /// Summarize the orthogonality graph.
    Graph {
        file: PathBuf,
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
    },
    /// Generate a structure: `gen {random|forest|simple} --events N --seed S` or `gen fixture NAME`.
    Gen {
        kind: String,
        name: Option<String>,
        #[arg(long, value_name = "N")]
        events: Option<usize>,
        #[arg(long, value_name = "S")]
        seed: Option<u64>,
        #[arg(long, value_name = "K", default_value_t = 3)]
        degree_cap: usize,
        #[arg(long, value_name = "P")]
        conflict_density: Option<f64>,
        #[arg(short, long, value_name = "OUT")]
        output: Option<PathBuf>,
    },
    /// Run the lemma suite on a file or on generated structures.
    VerifyTheory {
        file: Option<PathBuf>,
        #[arg(long)]
        random: bool,
        #[arg(long, value_name = "K")]
        count: Option<usize>,
        #[arg(long, value_name = "N")]
        events: Option<usize>,
        #[arg(long, value_name = "S")]
        seed: Option<u64>,
    },
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    let strategy: Strategy = s.parse()?;
    if Strategy::ALL.contains(&strategy) {
        Ok(strategy)
    } else {
        Err(format!("strategy {s} is not available here"))
    }
}

enum Failure {
    Usage(String),
    Io(PathBuf, std::io::Error),
    Lib(Error),
    /// Already reported; exit 1.
    Reported,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

struct Ctx<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn kv(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.out, "{key}: {value}");
    }

    fn note(&mut self, msg: impl std::fmt::Display) {
        let _ = writeln!(self.err, "{msg}");
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
            return code;
        }
    };
    let mut ctx = Ctx { out, err };
    match dispatch(cli.command, &mut ctx) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            ctx.note(format!("usage error: {msg}"));
            ctx.note("run `eslab --help` for usage");
            2
        }
        Err(Failure::Io(path, e)) => {
            ctx.note(format!("error: IoError: {}: {e}", path.display()));
            1
        }
        Err(Failure::Lib(e)) => {
            let text = e.to_string();
            if text.starts_with(e.kind()) {
                ctx.note(format!("error: {text}"));
            } else {
                ctx.note(format!("error: {}: {text}", e.kind()));
            }
            1
        }
        Err(Failure::Reported) => 1,
    }
}

fn read_file(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn write_file(path: &Path, text: &str) -> Outcome {
    std::fs::write(path, text).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load(path: &Path) -> std::result::Result<EventStructure, Failure> {
    Ok(read_es(&read_file(path)?)?)
}

fn exact_limits(args: &ExactArgs, n: usize) -> std::result::Result<(usize, usize), Failure> {
    let limit = match args.max_events_exact {
        Some(l) => l,
        None => match std::env::var(EXACT_LIMIT_VAR) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("{EXACT_LIMIT_VAR} must be a non-negative integer, got {v:?}")))?,
            Err(_) => DEFAULT_EXACT_LIMIT,
        },
    };
    Ok((args.exact_cap.unwrap_or(n), limit))
}

fn dispatch(cmd: Command, ctx: &mut Ctx<'_>) -> Outcome {
    match cmd {
        Command::Validate { file } => validate(&file, ctx),
        Command::Analyze { file, exact } => analyze(&file, &exact, ctx),
        Command::Label { file, strategy, output, exact } => label(&file, strategy, output.as_deref(), &exact, ctx),
        Command::Check { file, labels } => check(&file, &labels, ctx),
        Command::Domain { file, dot, labels, max_configs } => {
            domain(&file, dot.as_deref(), labels.as_deref(), max_configs, ctx)
        }
        Command::Graph { file, dot } => graph(&file, dot.as_deref(), ctx),
        Command::Gen { kind, name, events, seed, degree_cap, conflict_density, output } => {
            gen(&kind, name, events, seed, degree_cap, conflict_density, output.as_deref(), ctx)
        }
        Command::VerifyTheory { file, random, count, events, seed } => {
            verify_theory(file.as_deref(), random, count, events, seed, ctx)
        }
    }
}

fn validate(file: &Path, ctx: &mut Ctx<'_>) -> Outcome {
    let es = load(file)?;
    ctx.kv("valid", true);
    ctx.kv("events", es.len());
    ctx.kv("covers", es.covers().len());
    ctx.kv("minimal_conflicts", es.minimal_conflicts().len());
    Ok(())
}

fn analyze(file: &Path, exact: &ExactArgs, ctx: &mut Ctx<'_>) -> Outcome {
    let es = load(file)?;
    let n = es.len();
    let pairs = |f: &dyn Fn(usize, usize) -> bool| -> usize {
        es.events().map(|x| es.events().filter(|&y| y > x && f(x, y)).count()).sum()
    };
    ctx.kv("events", n);
    ctx.kv("covers", es.covers().len());
    ctx.kv("order_pairs", pairs(&|x, y| es.comparable(x, y)));
    ctx.kv("conflict_pairs", pairs(&|x, y| es.in_conflict(x, y)));
    ctx.kv("minimal_conflicts", es.minimal_conflicts().len());
    ctx.kv("concurrent_pairs", pairs(&|x, y| es.concurrent(x, y)));
    ctx.kv("orthogonal_pairs", es.orthogonal_pairs().len());
    let deg = degree(&es);
    ctx.kv("degree", deg);
    ctx.kv("width", es.width());
    ctx.kv("height", es.height());
    ctx.kv("forest", es.is_forest());
    ctx.kv("simple", check_simple(&es).is_ok());

    let (cap, limit) = exact_limits(exact, n)?;
    let g = ortho_graph(&es);
    match chromatic_exact(&g.graph, cap, limit) {
        Ok((chi, _)) => {
            ctx.kv("chromatic_number", chi);
            ctx.kv("chromatic_status", "exact");
        }
        Err(e @ (Error::SizeLimitExceeded { .. } | Error::ExceedsCap { .. })) => {
            let order: Vec<usize> = es.events().collect();
            let upper = greedy_color(&g.graph, &order)?.num_colors;
            ctx.kv("chromatic_lower_bound", deg);
            ctx.kv("chromatic_upper_bound", upper);
            ctx.kv("chromatic_status", "bounds");
            ctx.note(format!("note: exact solver skipped: {e}"));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn label(file: &Path, strategy: Strategy, output: Option<&Path>, exact: &ExactArgs, ctx: &mut Ctx<'_>) -> Outcome {
    let es = load(file)?;
    let (cap, limit) = exact_limits(exact, es.len())?;
    let lab = label_with(&es, strategy, cap, limit)?;
    ctx.kv("strategy", strategy);
    ctx.kv("events", es.len());
    ctx.kv("alphabet_size", lab.alphabet_size);
    ctx.kv("letters_used", lab.letters_used());
    match output {
        Some(path) => {
            write_file(path, &serialize_labels(&lab))?;
            ctx.kv("output", path.display());
        }
        None => {
            for (id, letter) in &lab.assignment {
                ctx.kv(&format!("label.{id}"), letter);
            }
        }
    }
    Ok(())
}

fn report_clashes(ctx: &mut Ctx<'_>, es: &EventStructure, lab: &Labelling) -> std::result::Result<usize, Failure> {
    let clashes = verify_labelling(es, lab)?;
    for (a, b) in &clashes {
        ctx.note(format!("clash: {a} and {b} are orthogonal and share letter {}", lab.letter(a.as_str()).unwrap_or(0)));
    }
    Ok(clashes.len())
}

fn check(file: &Path, labels: &Path, ctx: &mut Ctx<'_>) -> Outcome {
    let es = load(file)?;
    let lab = read_labels(&es, &read_file(labels)?)?;
    let clashes = report_clashes(ctx, &es, &lab)?;
    ctx.kv("events", es.len());
    ctx.kv("alphabet_size", lab.alphabet_size);
    ctx.kv("letters_used", lab.letters_used());
    ctx.kv("clashes", clashes);
    ctx.kv("nice", clashes == 0);
    if clashes == 0 {
        Ok(())
    } else {
        Err(Failure::Reported)
    }
}

fn domain(file: &Path, dot: Option<&Path>, labels: Option<&Path>, max_configs: usize, ctx: &mut Ctx<'_>) -> Outcome {
    let es = load(file)?;
    let lab = labels.map(|p| read_file(p).and_then(|t| Ok(read_labels(&es, &t)?))).transpose()?;
    let d = configurations(&es, max_configs)?;
    ctx.kv("configurations", d.len());
    ctx.kv("hasse_edges", d.hasse.len());
    ctx.kv("maximal_configurations", (0..d.len()).filter(|&i| d.upper_covers(i).next().is_none()).count());
    ctx.kv("branching_degree", branching_degree(&d));
    let mut failed = false;
    if let Some(lab) = &lab {
        let clashes = report_clashes(ctx, &es, lab)?;
        let violations = check_perspective_labelling(&d, &es, lab)?;
        for v in violations.iter().take(20) {
            ctx.note(format!("perspective: {v:?}"));
        }
        ctx.kv("labelling_nice", clashes == 0);
        ctx.kv("perspective_violations", violations.len());
        failed = clashes > 0 || !violations.is_empty();
    }
    if let Some(path) = dot {
        write_file(path, &export_dot_domain(&d, &es, lab.as_ref())?)?;
        ctx.kv("dot", path.display());
    }
    if failed {
        Err(Failure::Reported)
    } else {
        Ok(())
    }
}

fn graph(file: &Path, dot: Option<&Path>, ctx: &mut Ctx<'_>) -> Outcome {
    let es = load(file)?;
    let g = ortho_graph(&es);
    ctx.kv("vertices", g.len());
    ctx.kv("edges", g.graph.edge_count());
    ctx.kv("minimal_conflict_edges", es.minimal_conflicts().len());
    ctx.kv("concurrent_edges", g.graph.edge_count() - es.minimal_conflicts().len());
    ctx.kv("maximal_concurrent_pairs", maximal_concurrent_pairs(&es).len());
    ctx.kv("degree", degree(&es));
    if let Some(path) = dot {
        write_file(path, &export_dot_graph(&es))?;
        ctx.kv("dot", path.display());
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn gen(
    kind: &str,
    name: Option<String>,
    events: Option<usize>,
    seed: Option<u64>,
    degree_cap: usize,
    density: Option<f64>,
    output: Option<&Path>,
    ctx: &mut Ctx<'_>,
) -> Outcome {
    let es = if kind == "fixture" {
        let name = name.ok_or_else(|| Failure::Usage("gen fixture needs a NAME".into()))?;
        fixture(&name)?
    } else {
        let kind: GenKind = kind.parse().map_err(Failure::Usage)?;
        if name.is_some() {
            return Err(Failure::Usage(format!("gen {kind} takes no NAME")));
        }
        let events = events.ok_or_else(|| Failure::Usage("--events is required".into()))?;
        let seed = seed.ok_or_else(|| Failure::Usage("--seed is required".into()))?;
        let mut p = GenParams::new(kind, events, seed).with_degree_cap(degree_cap);
        if let Some(d) = density {
            p = p.with_conflict_density(d);
        }
        generate(&p)?
    };
    let text = serialize_es(&es);
    match output {
        Some(path) => {
            write_file(path, &text)?;
            ctx.kv("events", es.len());
            ctx.kv("degree", degree(&es));
            ctx.kv("output", path.display());
        }
        None => {
            let _ = ctx.out.write_all(text.as_bytes());
        }
    }
    Ok(())
}

fn need<T>(v: Option<T>, flag: &str) -> std::result::Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--random needs {flag}")))
}

fn verify_theory(
    file: Option<&Path>,
    random: bool,
    count: Option<usize>,
    events: Option<usize>,
    seed: Option<u64>,
    ctx: &mut Ctx<'_>,
) -> Outcome {
    let limits = Limits::default();
    let report = match (file, random) {
        (Some(path), false) => {
            if count.is_some() || events.is_some() || seed.is_some() {
                return Err(Failure::Usage("--count, --events and --seed need --random".into()));
            }
            verify_structure(&load(path)?, &limits)
        }
        (None, true) => {
            let (count, events, seed) = (need(count, "--count")?, need(events, "--events")?, need(seed, "--seed")?);
            verify_random(count, events, seed, &limits)?
        }
        _ => return Err(Failure::Usage("give either FILE or --random".into())),
    };
    for line in report.lines() {
        let _ = writeln!(ctx.out, "{line}");
    }
    let failed = report.lemmas.iter().filter(|l| !l.ok()).count();
    ctx.kv("lemmas_failed", failed);
    ctx.kv("result", if failed == 0 { "ok" } else { "fail" });
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Reported)
    }
}
