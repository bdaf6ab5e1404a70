use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ixcode::approx::{gap_parameters, unidirected_lower_bound, ClassConstants, GapParameters};
use ixcode::bounds::{bounds_report, ReferenceCurves};
use ixcode::classify::classify;
use ixcode::codec::{build_fractional_code, verify_code, IndexCode, Trials};
use ixcode::ramsey::{class_ramsey, confirm_class_ramsey, verify_class_ramsey, GraphClass, RamseyConfirmation, RamseyValue, RamseyVerdict};
use ixcode::report::{class_witnesses, fold_rates, guarantee_report, CodeReport, GuaranteeReport, Report, REFERENCE_NOTE};
use ixcode::{Error, Exec, Limits, SideInfoGraph};

mod output;

#[derive(Parser)]
#[command(name = "ixcode", version, about = "Broadcast-rate bounds, class checks and clique-cover codes for index coding instances")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Vertex limit for exact computations
    #[arg(long, global = true, default_value_t = 20)]
    exact_limit: usize,
    /// Random message vectors per verification when exhaustive testing is too large
    #[arg(long, global = true, default_value_t = 100)]
    trials: u64,
    /// Seed for every random choice
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Write the structured report to this path
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
}

impl Common {
    fn limits(&self) -> Limits {
        Limits::default().with_exact_vertices(self.exact_limit)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Lower and upper bounds on the broadcast rate with witnesses
    Bounds {
        instance: PathBuf,
        /// Also report b-fold clique cover rates for b = 1..=B
        #[arg(long, default_value_t = 1, value_name = "B")]
        b_max: usize,
    },
    /// Planarity, line-graph and orientation checks with witnesses
    Classify {
        instance: PathBuf,
        /// Assert that Un(G) is a fuzzy circular interval graph
        #[arg(long)]
        fuzzy: bool,
    },
    /// Ramsey number of a graph class
    Ramsey {
        /// planar, line, fuzzy or general-upper
        class: String,
        i: u64,
        j: u64,
        /// Check every class member on this many vertices
        #[arg(long, value_name = "M")]
        verify_order: Option<usize>,
        /// Check the value and the order just below it
        #[arg(long)]
        confirm: bool,
    },
    /// Approximation gap and the guarantees that apply to an instance
    Gap(GapArgs),
    /// Build a clique-cover index code
    Code {
        instance: PathBuf,
        /// Split each message into b parts
        #[arg(long, default_value_t = 1)]
        b: usize,
        /// Run every receiver's decoder on encoded message vectors
        #[arg(long)]
        verify: bool,
        /// Write the code here instead of standard output
        #[arg(long, short, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Check a code file against an instance
    Verify { instance: PathBuf, code: PathBuf },
    /// Acyclic vertex set of a unidirected instance by pivoting
    ExtractAcyclic { instance: PathBuf },
}

#[derive(Args)]
struct GapArgs {
    instance: Option<PathBuf>,
    /// Vertex count when no instance is given
    #[arg(long)]
    n: Option<usize>,
    /// planar, line, fuzzy or general
    #[arg(long)]
    class: Option<String>,
    /// Exponent of i in R(i, j) <= c i^a j^b
    #[arg(long)]
    a: Option<f64>,
    /// Exponent of j in R(i, j) <= c i^a j^b
    #[arg(long)]
    b: Option<f64>,
    /// Constant in R(i, j) <= c i^a j^b
    #[arg(long)]
    c: Option<f64>,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::LimitExceeded { .. } => 3,
            Error::Invariant(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl Failure {
    fn input(message: String) -> Self {
        Failure { code: 2, message }
    }
}

struct Outcome {
    text: String,
    json: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String, json: String) -> Self {
        Outcome { text, json, code: 0 }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_instance(path: &Path) -> Result<SideInfoGraph, Failure> {
    let text = read_text(path)?;
    SideInfoGraph::parse(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn cmd_bounds(c: &Common, path: &Path, b_max: usize) -> CmdResult {
    if b_max == 0 {
        return Err(Error::InvalidArgument("--b-max must be at least 1".into()).into());
    }
    let g = read_instance(path)?;
    let limits = c.limits();
    let mut report = Report::new(&g, c.seed, &limits);
    let bounds = bounds_report(&g, &limits)?;
    let rates = if b_max > 1 { fold_rates(&g, b_max, &limits)? } else { Vec::new() };
    let mut text = output::header(&report);
    text += &output::bounds(&bounds);
    text += &output::fold_rates(&rates, b_max);
    report.bounds = Some(bounds);
    report.fold_rates = rates;
    Ok(Outcome::ok(text, report.to_json()))
}

fn cmd_classify(c: &Common, path: &Path, fuzzy: bool) -> CmdResult {
    let g = read_instance(path)?;
    let limits = c.limits();
    let mut report = Report::new(&g, c.seed, &limits);
    let label = classify(&g, fuzzy, &limits)?;
    let witnesses = class_witnesses(&g, &limits)?;
    let mut text = output::header(&report);
    text += &output::classification(&label, &witnesses);
    report.class = Some(label);
    report.class_witnesses = Some(witnesses);
    Ok(Outcome::ok(text, report.to_json()))
}

#[derive(Serialize)]
struct RamseyDoc {
    tool: &'static str,
    version: &'static str,
    seed: u64,
    value: RamseyValue,
    verification: Option<RamseyVerdict>,
    confirmation: Option<RamseyConfirmation>,
}

fn cmd_ramsey(c: &Common, class: &str, i: u64, j: u64, order: Option<usize>, confirm: bool) -> CmdResult {
    let class: GraphClass = class.parse()?;
    let limits = c.limits();
    let value = class_ramsey(class, i, j)?;
    let mut text = format!("ixcode {}, seed {}\n", env!("CARGO_PKG_VERSION"), c.seed);
    text += &output::ramsey_value(&value);
    let verification = match order {
        Some(m) => Some(verify_class_ramsey(class, i, j, m, &limits, Exec::default())?),
        None => None,
    };
    if let Some(v) = &verification {
        text += &output::ramsey_verdict(v);
    }
    let confirmation = if confirm {
        Some(confirm_class_ramsey(class, i, j, &limits, Exec::default())?)
    } else {
        None
    };
    if let Some(conf) = &confirmation {
        text += &output::ramsey_confirmation(conf);
    }
    let doc = RamseyDoc {
        tool: "ixcode",
        version: env!("CARGO_PKG_VERSION"),
        seed: c.seed,
        value,
        verification,
        confirmation,
    };
    Ok(Outcome::ok(text, to_json(&doc)))
}

#[derive(Serialize)]
struct GapDoc {
    tool: &'static str,
    version: &'static str,
    seed: u64,
    class: Option<GraphClass>,
    parameters: GapParameters,
    reference: ReferenceCurves,
    reference_note: &'static str,
}

fn gap_constants(args: &GapArgs, class: Option<GraphClass>, synthetic: bool) -> Result<ClassConstants, Failure> {
    if args.a.is_some() || args.b.is_some() || args.c.is_some() {
        let d = ClassConstants::BILINEAR;
        return Ok(ClassConstants::new(args.a.unwrap_or(d.a), args.b.unwrap_or(d.b), args.c.unwrap_or(d.c))?);
    }
    if synthetic && class == Some(GraphClass::General) {
        return Err(Error::InvalidArgument("general graphs have no bilinear Ramsey bound; pass --a, --b and --c".into()).into());
    }
    Ok(ClassConstants::BILINEAR)
}

fn cmd_gap(c: &Common, args: &GapArgs) -> CmdResult {
    let class = args.class.as_deref().map(str::parse::<GraphClass>).transpose()?;
    match (&args.instance, args.n) {
        (Some(_), Some(_)) => Err(Error::InvalidArgument("give an instance or --n, not both".into()).into()),
        (None, None) => Err(Error::InvalidArgument("gap needs an instance or --n".into()).into()),
        (None, Some(n)) => {
            let constants = gap_constants(args, class, true)?;
            let parameters = gap_parameters(n, constants)?;
            let reference = ReferenceCurves::at(n);
            let mut text = format!("ixcode {}, seed {}\n", env!("CARGO_PKG_VERSION"), c.seed);
            text += &output::gap_parameters(&parameters);
            text += &output::synthetic_class_note(class);
            text += &output::reference(&reference);
            let doc = GapDoc {
                tool: "ixcode",
                version: env!("CARGO_PKG_VERSION"),
                seed: c.seed,
                class,
                parameters,
                reference,
                reference_note: REFERENCE_NOTE,
            };
            Ok(Outcome::ok(text, to_json(&doc)))
        }
        (Some(path), None) => {
            let constants = gap_constants(args, class, false)?;
            let g = read_instance(path)?;
            let limits = c.limits();
            let mut report = Report::new(&g, c.seed, &limits);
            let mut label = classify(&g, class == Some(GraphClass::Fuzzy), &limits)?;
            match class {
                Some(GraphClass::Planar) if !label.planar => {
                    label.notes.push("asserted planar, but Un(G) is not planar".into())
                }
                Some(GraphClass::Line) if label.line_graph == Some(false) => {
                    label.notes.push("asserted line graph, but Un(G) is not a line graph".into())
                }
                _ => {}
            }
            let guarantees = guarantee_report(&g, &label, constants, &limits)?;
            let mut text = output::header(&report);
            text += &output::gap_parameters(&gap_parameters(g.n(), constants)?);
            text += &output::guarantees(&label, &guarantees);
            if guarantees.is_empty() {
                let bounds = bounds_report(&g, &limits)?;
                text += "no guarantee applies; generic bounds:\n";
                text += &output::bounds(&bounds);
                report.bounds = Some(bounds);
            }
            if let Some(r) = &guarantees.reference {
                text += &output::reference(r);
            }
            report.class = Some(label);
            report.guarantees = Some(guarantees);
            Ok(Outcome::ok(text, report.to_json()))
        }
    }
}

fn verdict_outcome(text: String, report: &Report) -> Outcome {
    let passed = report.code.as_ref().and_then(|c| c.verdict.as_ref()).is_none_or(|v| v.passed);
    Outcome {
        text,
        json: report.to_json(),
        code: if passed { 0 } else { 1 },
    }
}

fn cmd_code(c: &Common, path: &Path, b: usize, verify: bool, out: Option<&Path>) -> CmdResult {
    if b == 0 {
        return Err(Error::InvalidArgument("--b must be at least 1".into()).into());
    }
    let g = read_instance(path)?;
    let limits = c.limits();
    let mut report = Report::new(&g, c.seed, &limits);
    let code = build_fractional_code(&g, b, &limits)?;
    let mut text = output::header(&report);
    text += &output::code_summary(&code);
    match out {
        Some(p) => {
            fs::write(p, code.to_text()).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
            text += &format!("code written to {}\n", p.display());
        }
        None => text += &code.to_text(),
    }
    let verdict = verify.then(|| verify_code(&g, &code, Trials::Auto(c.trials), c.seed, Exec::default()));
    if let Some(v) = &verdict {
        text += &output::verdict(v);
    }
    report.code = Some(CodeReport { code, verdict });
    Ok(verdict_outcome(text, &report))
}

fn cmd_verify(c: &Common, instance: &Path, code_path: &Path) -> CmdResult {
    let g = read_instance(instance)?;
    let code = IndexCode::parse(&read_text(code_path)?, g.n()).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", code_path.display(), f.message);
        f
    })?;
    let limits = c.limits();
    let mut report = Report::new(&g, c.seed, &limits);
    let verdict = verify_code(&g, &code, Trials::Auto(c.trials), c.seed, Exec::default());
    let mut text = output::header(&report);
    text += &output::code_summary(&code);
    text += &output::verdict(&verdict);
    report.code = Some(CodeReport {
        code,
        verdict: Some(verdict),
    });
    Ok(verdict_outcome(text, &report))
}

fn cmd_extract(c: &Common, path: &Path) -> CmdResult {
    let g = read_instance(path)?;
    let limits = c.limits();
    let mut report = Report::new(&g, c.seed, &limits);
    let bound = unidirected_lower_bound(&g)?;
    let mut text = output::header(&report);
    text += &output::unidirected(&bound);
    report.guarantees = Some(GuaranteeReport {
        unidirected_log_bound: Some(bound),
        reference: Some(ReferenceCurves::at(g.n())),
        reference_note: REFERENCE_NOTE,
        ..GuaranteeReport::default()
    });
    Ok(Outcome::ok(text, report.to_json()))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("document serializes")
}

fn run(cli: &Cli) -> CmdResult {
    let c = &cli.common;
    match &cli.command {
        Command::Bounds { instance, b_max } => cmd_bounds(c, instance, *b_max),
        Command::Classify { instance, fuzzy } => cmd_classify(c, instance, *fuzzy),
        Command::Ramsey {
            class,
            i,
            j,
            verify_order,
            confirm,
        } => cmd_ramsey(c, class, *i, *j, *verify_order, *confirm),
        Command::Gap(args) => cmd_gap(c, args),
        Command::Code { instance, b, verify, out } => cmd_code(c, instance, *b, *verify, out.as_deref()),
        Command::Verify { instance, code } => cmd_verify(c, instance, code),
        Command::ExtractAcyclic { instance } => cmd_extract(c, instance),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if let Some(path) = &cli.common.json {
                let mut json = outcome.json;
                json.push('\n');
                if let Err(e) = fs::write(path, json) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
