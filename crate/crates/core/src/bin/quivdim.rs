use clap::{Args, Parser, Subcommand, ValueEnum};
use quivdim::compare::oracle_compare;
use quivdim::criteria::{
    critical_template, crown_test, find_critical_subcategories, CriticalTemplate, Strategy,
    TemplateKind,
};
use quivdim::dsl::{parse_algebra, to_spec_text, DiagnosticKind};
use quivdim::homology::{coresolve_simple, resolve_simple};
use quivdim::presentation::{IncidenceQuotient, Validity};
use quivdim::random::{random_algebra, RandomModel};
use quivdim::report::{build_report, render_report, Format, ReportOptions};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

// Writes to stdout, ignoring a closed pipe.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout().lock(), $($arg)*);
    }};
}

const EXIT_USAGE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_DISAGREE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

/// Global dimension, minimal resolutions and critical subcategories of
/// quotients of incidence algebras.
#[derive(Parser, Debug)]
#[command(name = "quivdim", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest vertex count for which subset scans run without --force.
    #[arg(long, global = true, default_value_t = 14)]
    max_subset_size: usize,
    /// Run subset scans on inputs larger than --max-subset-size.
    #[arg(long, global = true)]
    force: bool,
    /// Include wall-clock timings in reports (makes output nondeterministic).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse an algebra file and report whether the hypotheses are certified.
    Validate { file: PathBuf },
    /// Global dimension and the pd/id of every simple.
    Gldim { file: PathBuf },
    /// Minimal projective resolution (or injective coresolution) of a simple.
    Resolve {
        file: PathBuf,
        /// Vertex label of the simple module.
        #[arg(long)]
        simple: String,
        #[arg(long)]
        coresolution: bool,
    },
    /// List the critical full subcategories.
    Critical {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
        strategy: StrategyArg,
    },
    /// Full report including the critical-subcategory verdict.
    Criterion { file: PathBuf },
    /// Crown test for a plain incidence algebra.
    Iz { file: PathBuf },
    /// The catalogue of critical algebras.
    Templates(TemplatesArgs),
    /// Print a seeded random instance in the text format.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
        #[arg(long, default_value_t = 0.3)]
        zero_rate: f64,
    },
    /// Compare every combinatorial prediction with the homology engine.
    Compare { file: PathBuf },
}

#[derive(Args, Debug)]
struct TemplatesArgs {
    /// List catalogue entries up to 10 vertices.
    #[arg(long, conflicts_with = "emit")]
    list: bool,
    /// Print one template in the text format, e.g. `--emit A 1`.
    #[arg(long, num_args = 2, value_names = ["KIND", "PARAM"])]
    emit: Option<Vec<String>>,
    /// With --emit, print the opposite algebra.
    #[arg(long, requires = "emit")]
    opposite: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Exhaustive,
    Guided,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Exhaustive => Strategy::Exhaustive,
            StrategyArg::Guided => Strategy::ResolutionGuided,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn load(path: &PathBuf) -> Result<IncidenceQuotient, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_algebra(&text).map_err(|d| {
        let code = match d.kind {
            DiagnosticKind::Invalid(_) => EXIT_INVALID,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: format!("{}:{d}", path.display()),
        }
    })
}

fn emit_json<T: Serialize>(value: &T) -> Outcome {
    let s = serde_json::to_string_pretty(value).map_err(|e| Failure {
        code: EXIT_INTERNAL,
        message: e.to_string(),
    })?;
    outln!("{s}");
    Ok(0)
}

fn guard_size(cli: &Cli, q: &IncidenceQuotient) -> Result<(), Failure> {
    let n = q.algebra().vertex_count();
    if n > cli.max_subset_size && !cli.force {
        return Err(Failure::usage(format!(
            "{n} vertices exceeds --max-subset-size {}; pass --force to scan anyway",
            cli.max_subset_size
        )));
    }
    Ok(())
}

fn status_line(q: &IncidenceQuotient) -> &'static str {
    if q.is_certified() {
        "status: certified"
    } else {
        "status: uncertified"
    }
}

#[derive(Serialize)]
struct ValidateJson {
    algebra: String,
    certified: bool,
    vertices: Vec<String>,
    arrows: Vec<(String, String)>,
    zeros: Vec<(String, String)>,
    uncertified_pairs: Vec<(String, String)>,
    convex_crown: Vec<String>,
}

fn validate(cli: &Cli, q: &IncidenceQuotient) -> Outcome {
    let h = q.hasse();
    let pair = |&(s, t): &(usize, usize)| (h.label(s).to_string(), h.label(t).to_string());
    let (offending, crown): (Vec<(String, String)>, Vec<String>) = match q.validity() {
        Validity::Certified => (Vec::new(), Vec::new()),
        Validity::Uncertified { zero_pairs, crown } => (
            zero_pairs.iter().map(pair).collect(),
            crown
                .iter()
                .flatten()
                .map(|&v| h.label(v).to_string())
                .collect(),
        ),
    };
    if cli.json {
        return emit_json(&ValidateJson {
            algebra: q.name().to_string(),
            certified: q.is_certified(),
            vertices: h.labels().to_vec(),
            arrows: h.arrows().iter().map(pair).collect(),
            zeros: q.zeros().iter().map(pair).collect(),
            uncertified_pairs: offending,
            convex_crown: crown,
        });
    }
    outln!("{}", status_line(q));
    outln!("algebra: {}", q.name());
    outln!(
        "vertices: {}, arrows: {}, zero pairs: {}",
        h.vertex_count(),
        h.arrows().len(),
        q.zeros().len()
    );
    for (s, t) in offending {
        outln!("  zero pair {s} ~> {t} lies on an irreducible contour");
    }
    if !crown.is_empty() {
        outln!("  convex crown {{{}}}", crown.join(","));
    }
    Ok(0)
}

#[derive(Serialize)]
struct ResolveJson {
    algebra: String,
    certified: bool,
    vertex: String,
    kind: &'static str,
    terms: Vec<Vec<String>>,
    length: usize,
    display: String,
}

fn resolve(cli: &Cli, q: &IncidenceQuotient, simple: &str, coresolution: bool) -> Outcome {
    let a = q.algebra();
    let x = a
        .index_of(simple)
        .ok_or_else(|| Failure::usage(format!("unknown vertex {simple}")))?;
    let module = format!("S{simple}");
    let (terms, display, kind) = if coresolution {
        let co = coresolve_simple(a, x);
        (co.terms.clone(), co.display_line(a, &module), "injective")
    } else {
        let res = resolve_simple(a, x);
        (
            res.terms.clone(),
            res.display_line(a, &module),
            "projective",
        )
    };
    if cli.json {
        return emit_json(&ResolveJson {
            algebra: q.name().to_string(),
            certified: q.is_certified(),
            vertex: simple.to_string(),
            kind,
            length: terms.len() - 1,
            terms: terms
                .iter()
                .map(|t| t.iter().map(|&v| a.label(v).to_string()).collect())
                .collect(),
            display,
        });
    }
    outln!("{}", status_line(q));
    outln!("{display}");
    Ok(0)
}

#[derive(Serialize)]
struct CriticalJson {
    subset: Vec<String>,
    template: Option<String>,
    params: Vec<usize>,
    opposite: bool,
    source: String,
    sink: String,
    resolution: String,
}

fn critical(cli: &Cli, q: &IncidenceQuotient, strategy: Strategy) -> Outcome {
    guard_size(cli, q)?;
    let a = q.algebra();
    let found = find_critical_subcategories(a, strategy);
    if cli.json {
        let rows: Vec<CriticalJson> = found
            .iter()
            .map(|r| CriticalJson {
                subset: r.labels(a),
                template: r
                    .template
                    .map(|t| format!("{}_{}", t.kind.letter(), t.param)),
                params: r.template.map(|t| vec![t.param]).unwrap_or_default(),
                opposite: r.template.is_some_and(|t| t.opposite),
                source: a.label(r.source).to_string(),
                sink: a.label(r.sink).to_string(),
                resolution: r.resolution.clone(),
            })
            .collect();
        return emit_json(&rows);
    }
    outln!("{}", status_line(q));
    if found.is_empty() {
        outln!("no critical subcategory");
    }
    for r in &found {
        let name = r
            .template
            .map_or_else(|| "unclassified".to_string(), |t| t.to_string());
        outln!(
            "critical subcategory: {{{}}} ≅ {name}",
            r.labels(a).join(",")
        );
        outln!("  {}", r.resolution);
    }
    Ok(0)
}

#[derive(Serialize)]
struct IzJson {
    algebra: String,
    crown_test: bool,
    gldim: usize,
}

fn iz(cli: &Cli, q: &IncidenceQuotient) -> Outcome {
    if !q.zeros().is_empty() {
        return Err(Failure::invalid(
            "the crown test needs an algebra without zero relations",
        ));
    }
    let pass = crown_test(q.order());
    let gl = quivdim::homology::gl_dim(q.algebra());
    if cli.json {
        return emit_json(&IzJson {
            algebra: q.name().to_string(),
            crown_test: pass,
            gldim: gl,
        });
    }
    outln!("{}", status_line(q));
    outln!(
        "crown test: {}",
        if pass {
            "pass (gl.dim <= 2)"
        } else {
            "fail (gl.dim >= 3)"
        }
    );
    outln!("gl.dim = {gl}");
    Ok(0)
}

fn templates(cli: &Cli, args: &TemplatesArgs) -> Outcome {
    if let Some(emit) = &args.emit {
        let kind = TemplateKind::parse(&emit[0])
            .ok_or_else(|| Failure::usage(format!("unknown template kind {}", emit[0])))?;
        let param: usize = emit[1]
            .parse()
            .map_err(|_| Failure::usage(format!("invalid parameter {}", emit[1])))?;
        let mut t = CriticalTemplate::new(kind, param);
        if args.opposite {
            t = t.op();
        }
        let q = critical_template(t).map_err(|e| Failure::usage(e.to_string()))?;
        if cli.json {
            return emit_json(
                &serde_json::json!({ "template": t.to_string(), "text": to_spec_text(&q) }),
            );
        }
        out!("{}", to_spec_text(&q));
        return Ok(0);
    }
    let mut entries = Vec::new();
    for size in 4..=10 {
        for t in CriticalTemplate::of_size(size) {
            entries.push((t.to_string(), size));
        }
    }
    if cli.json {
        let rows: Vec<_> = entries
            .iter()
            .map(|(name, size)| serde_json::json!({ "template": name, "vertices": size }))
            .collect();
        return emit_json(&rows);
    }
    for (name, size) in entries {
        outln!("{name}: {size} vertices");
    }
    Ok(0)
}

fn random(cli: &Cli, seed: u64, n: usize, density: f64, zero_rate: f64) -> Outcome {
    if !(density > 0.0 && density <= 1.0) || !(0.0..=1.0).contains(&zero_rate) {
        return Err(Failure::usage(
            "density must lie in (0, 1] and zero rate in [0, 1]",
        ));
    }
    let model = RandomModel {
        seed,
        n,
        edge_density: density,
        zero_rate,
    };
    let q = random_algebra(&model).map_err(|e| Failure::usage(e.to_string()))?;
    let text = to_spec_text(&q);
    if cli.json {
        return emit_json(
            &serde_json::json!({ "model": model, "certified": q.is_certified(), "text": text }),
        );
    }
    if !q.is_certified() {
        outln!("# uncertified");
    }
    out!("{text}");
    Ok(0)
}

fn run(cli: &Cli) -> Outcome {
    let report_opts = |criterion: bool| ReportOptions {
        criterion,
        strategy: Strategy::Exhaustive,
        resolutions: false,
        timings: cli.timings,
    };
    let format = if cli.json { Format::Json } else { Format::Text };
    match &cli.command {
        Command::Validate { file } => validate(cli, &load(file)?),
        Command::Gldim { file } => {
            let q = load(file)?;
            out!(
                "{}",
                render_report(&build_report(&q, &report_opts(false)), format)
            );
            Ok(0)
        }
        Command::Resolve {
            file,
            simple,
            coresolution,
        } => resolve(cli, &load(file)?, simple, *coresolution),
        Command::Critical { file, strategy } => critical(cli, &load(file)?, (*strategy).into()),
        Command::Criterion { file } => {
            let q = load(file)?;
            guard_size(cli, &q)?;
            let opts = ReportOptions {
                resolutions: true,
                ..report_opts(true)
            };
            out!("{}", render_report(&build_report(&q, &opts), format));
            Ok(0)
        }
        Command::Iz { file } => iz(cli, &load(file)?),
        Command::Templates(args) => templates(cli, args),
        Command::Random {
            seed,
            n,
            density,
            zero_rate,
        } => random(cli, *seed, *n, *density, *zero_rate),
        Command::Compare { file } => {
            let q = load(file)?;
            guard_size(cli, &q)?;
            let r = oracle_compare(&q);
            if cli.json {
                emit_json(&r)?;
            } else {
                out!("{}", r.render_text());
            }
            Ok(if r.failed() { EXIT_DISAGREE } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
