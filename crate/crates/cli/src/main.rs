//! `gjl`: parse, evaluate, check and transform Gödel justification and
//! modal logic artifacts.
//!
//! Exit status: 0 accept, 1 reject or counterexample, 2 usage or parse
//! error, 3 undecided by the theoremhood oracle.

use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gjl_core::algebra::TruthValue;
use gjl_core::calculus::{
    check_proof, internalize, lift, parse_constant_spec, parse_proof, project_proof, AnyProof,
    ConstantSpec, JCalculus, JLogic, JProof, LiftError, Lifted, ProjectError,
};
use gjl_core::gen::Generator;
use gjl_core::models::{
    check_cs_respect, check_model_class, eval_with, parse_model, parse_oracle, CrispDirection,
    Model, ModelClass, ModelError, Semantics, TheoremhoodOracle,
};
use gjl_core::realization::{
    decidable_universe, demo_crisp_recovery, demo_theorem_gap, demo_z_failure_no_factivity,
    demo_z_failure_with_factivity, recheck, recheck_gap, DemoError, DemoOptions, Demonstration,
    GapReport,
};
use gjl_core::syntax::{
    check_realization, forgetful_projection, parse_jformula, parse_mformula, parse_term, realize,
    Formula, JFormula, JustTerm, MFormula,
};

#[derive(Parser)]
#[command(
    name = "gjl",
    version,
    about = "Gödel justification logics and Gödel modal logics"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and pretty-print a formula or term.
    Parse(ParseArgs),
    /// Evaluate a justification formula in a model.
    Eval(EvalArgs),
    /// Evaluate under the pre-model semantics.
    EvalStar(EvalArgs),
    /// Check a model against a class and a constant specification.
    CheckModel(CheckModelArgs),
    /// Check a justification or modal proof.
    CheckProof(ProofArg),
    /// Lift a proof from hypotheses to a proof of `t:phi`.
    Lift(LiftArgs),
    /// Internalize a hypothesis-free proof.
    Internalize(ProofArg),
    /// Forgetful projection of a justification formula.
    Project(FormulaArgs),
    /// Map a justification proof to a modal proof.
    ProjectProof(ProofArg),
    /// Is a justification formula a realization of a modal formula?
    CheckRealization(RealizationArgs),
    /// Run a demonstration, or re-check a saved one.
    Demo(DemoArgs),
    /// Enumerate realizations of a modal formula over small terms.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct FormulaArgs {
    /// Formula text.
    #[arg(long, conflicts_with = "formula_file")]
    formula: Option<String>,
    /// File holding the formula.
    #[arg(long)]
    formula_file: Option<PathBuf>,
}

#[derive(Args)]
struct ParseArgs {
    #[command(flatten)]
    input: FormulaArgs,
    /// Parse a justification term instead of a formula.
    #[arg(long)]
    term: Option<String>,
}

#[derive(Args)]
struct OracleArg {
    /// Oracle certificate list (.orc) for x-rooted models.
    #[arg(long)]
    oracle: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    /// Model file (.gm).
    #[arg(long)]
    model: PathBuf,
    #[command(flatten)]
    input: FormulaArgs,
    #[command(flatten)]
    oracle: OracleArg,
}

#[derive(Args)]
struct SamplingArgs {
    #[arg(long, default_value_t = DemoOptions::default().seed)]
    seed: u64,
    #[arg(long, default_value_t = DemoOptions::default().universe_size)]
    universe_size: usize,
}

#[derive(Args)]
struct CheckModelArgs {
    #[arg(long)]
    model: PathBuf,
    /// Model class, e.g. GM45; defaults to the class of `--logic`.
    #[arg(long)]
    class: Option<String>,
    /// Justification logic whose constant specification is checked.
    #[arg(long)]
    logic: Option<String>,
    /// Finite constant specification (.cs); total when omitted.
    #[arg(long)]
    cs: Option<PathBuf>,
    #[command(flatten)]
    oracle: OracleArg,
    #[command(flatten)]
    sampling: SamplingArgs,
}

#[derive(Args)]
struct ProofArg {
    /// Proof file (.gjp or .gmp).
    #[arg(long, conflicts_with = "path")]
    proof: Option<PathBuf>,
    #[arg(value_name = "PROOF")]
    path: Option<PathBuf>,
}

#[derive(Args)]
struct LiftArgs {
    #[command(flatten)]
    proof: ProofArg,
    /// One term per hypothesis, in order.
    #[arg(long = "term")]
    terms: Vec<String>,
}

#[derive(Args)]
struct RealizationArgs {
    /// Candidate justification formula.
    #[arg(long)]
    formula: String,
    /// Modal formula.
    #[arg(long)]
    modal: String,
    /// Require variables on negative occurrences.
    #[arg(long)]
    normal: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoName {
    ZFailure,
    ZFailureFactive,
    CrispToOne,
    CrispToZero,
    Gap,
}

#[derive(Args)]
struct DemoArgs {
    #[arg(value_enum, required_unless_present = "recheck")]
    name: Option<DemoName>,
    #[arg(long, default_value = "1/2")]
    x: String,
    #[arg(long, default_value = "x1")]
    t: String,
    #[arg(long, default_value = "x2")]
    s: String,
    #[arg(long, default_value = "p1")]
    target: String,
    /// Justification logic for `gap`.
    #[arg(long, default_value = "GJ")]
    logic: String,
    /// Write the structured record here.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Re-check a structured record instead of running a demonstration.
    #[arg(long)]
    recheck: Option<PathBuf>,
    #[arg(long, default_value_t = DemoOptions::default().cs_chains)]
    cs_chains: usize,
    #[command(flatten)]
    sampling: SamplingArgs,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Modal formula to realize.
    #[arg(long)]
    formula: String,
    /// Maximum term depth.
    #[arg(long, default_value_t = 0)]
    depth: usize,
    #[arg(long, default_value_t = 2)]
    vars: u32,
    #[arg(long, default_value_t = 1)]
    consts: u32,
    #[arg(long)]
    normal: bool,
    /// Evaluate each candidate in this model.
    #[arg(long)]
    model: Option<PathBuf>,
    #[arg(long)]
    star: bool,
    #[arg(long, default_value_t = 200)]
    limit: usize,
    #[command(flatten)]
    oracle: OracleArg,
}

enum Failure {
    Usage(String),
    Undecided(String),
}

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn model_failure(e: ModelError) -> Failure {
    match e {
        ModelError::Undecided { .. } => Failure::Undecided(e.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

fn demo_failure(e: DemoError) -> Failure {
    match e {
        DemoError::Model(m) => model_failure(m),
        other => Failure::Usage(other.to_string()),
    }
}

/// What a command found: printed output and whether it accepts.
struct Report {
    text: String,
    structured: Value,
    accept: bool,
}

impl Report {
    fn ok(text: impl Into<String>, structured: Value) -> Self {
        Report {
            text: text.into(),
            structured,
            accept: true,
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn formula_text(args: &FormulaArgs) -> Result<String, Failure> {
    match (&args.formula, &args.formula_file) {
        (Some(f), _) => Ok(f.clone()),
        (None, Some(p)) => Ok(read(p)?.trim().to_string()),
        (None, None) => Err(Failure::Usage("give --formula or --formula-file".into())),
    }
}

fn load_oracle(arg: &OracleArg) -> Result<Option<Arc<TheoremhoodOracle>>, Failure> {
    let Some(path) = &arg.oracle else {
        return Ok(None);
    };
    let oracle = parse_oracle(&read(path)?, path.parent())?;
    Ok(Some(Arc::new(oracle)))
}

fn load_model(path: &Path, oracle: &OracleArg) -> Result<Model, Failure> {
    Ok(parse_model(&read(path)?, load_oracle(oracle)?)?)
}

fn load_proof(arg: &ProofArg) -> Result<AnyProof, Failure> {
    let path = arg
        .proof
        .as_ref()
        .or(arg.path.as_ref())
        .ok_or_else(|| Failure::Usage("give a proof file".into()))?;
    Ok(parse_proof(&read(path)?, path.parent())?)
}

fn justification_proof(arg: &ProofArg) -> Result<JProof, Failure> {
    match load_proof(arg)? {
        AnyProof::Justification(p) => Ok(p),
        AnyProof::Modal(_) => Err(Failure::Usage("expected a justification proof".into())),
    }
}

fn cmd_parse(args: &ParseArgs) -> Result<Report, Failure> {
    if let Some(t) = &args.term {
        let t = parse_term(t)?;
        return Ok(Report::ok(
            t.to_string(),
            json!({"kind": "term", "text": t.to_string(), "depth": t.depth()}),
        ));
    }
    let text = formula_text(&args.input)?;
    let (kind, printed, size, depth) = match parse_jformula(&text) {
        Ok(f) => ("justification", f.to_string(), f.size(), f.depth()),
        Err(je) => match parse_mformula(&text) {
            Ok(f) => ("modal", f.to_string(), f.size(), f.depth()),
            Err(_) => return Err(je.into()),
        },
    };
    Ok(Report::ok(
        format!("{printed}\n{kind} formula, size {size}, depth {depth}"),
        json!({"kind": kind, "text": printed, "size": size, "depth": depth}),
    ))
}

fn cmd_eval(args: &EvalArgs, semantics: Semantics) -> Result<Report, Failure> {
    let model = load_model(&args.model, &args.oracle)?;
    let phi = parse_jformula(&formula_text(&args.input)?)?;
    let v = eval_with(&model, &phi, semantics).map_err(model_failure)?;
    Ok(Report::ok(
        v.to_string(),
        json!({"formula": phi.to_string(), "value": v.to_string()}),
    ))
}

fn logic_for_class(class: ModelClass) -> JLogic {
    match class {
        ModelClass::GM => JLogic::GJ,
        ModelClass::GMT => JLogic::GJT,
        ModelClass::GM4 => JLogic::GJ4,
        ModelClass::GMLP => JLogic::GLP,
        ModelClass::GM45 => JLogic::GJ45,
        ModelClass::GMT45 => JLogic::GJT45,
    }
}

fn cmd_check_model(args: &CheckModelArgs) -> Result<Report, Failure> {
    let model = load_model(&args.model, &args.oracle)?;
    let logic: Option<JLogic> = args.logic.as_deref().map(str::parse).transpose()?;
    let class: ModelClass = match (&args.class, logic) {
        (Some(c), _) => c.parse()?,
        (None, Some(l)) => ModelClass::for_logic(l),
        (None, None) => return Err(Failure::Usage("give --class or --logic".into())),
    };
    let logic = logic.unwrap_or_else(|| logic_for_class(class));
    let cs = match &args.cs {
        Some(p) => {
            let cs = parse_constant_spec(&read(p)?)?;
            cs.validate(logic)?;
            ConstantSpec::Finite(cs)
        }
        None => ConstantSpec::Total,
    };
    let calc = JCalculus::new(logic, cs);
    let exact = model.evidence.is_exactly_checkable();
    let (cv, pairs) = if exact {
        (
            check_model_class(&model, class, None).map_err(model_failure)?,
            0,
        )
    } else {
        let (u, v) = decidable_universe(
            &model,
            class,
            logic,
            &[],
            args.sampling.seed,
            args.sampling.universe_size,
        )
        .map_err(demo_failure)?;
        (v, u.len())
    };
    let sample: Vec<JFormula> = match (&calc.cs, exact) {
        (_, true) => vec![],
        (ConstantSpec::Finite(cs), false) => cs.members().iter().cloned().collect(),
        (ConstantSpec::Total, false) => {
            let mut g = Generator::new(args.sampling.seed);
            (0..20).map(|_| g.cs_chain(logic, 3)).collect()
        }
    };
    let csv = check_cs_respect(&model, &calc, &sample).map_err(model_failure)?;
    let accept = cv.is_accept() && csv.is_accept();
    Ok(Report {
        text: format!("class {class}: {cv}\nconstant specification of {calc}: {csv}"),
        structured: json!({
            "class": class, "class_verdict": cv, "calculus": calc.to_string(),
            "cs_verdict": csv, "sampled_pairs": pairs, "accept": accept,
        }),
        accept,
    })
}

fn cmd_check_proof(arg: &ProofArg) -> Result<Report, Failure> {
    let proof = load_proof(arg)?;
    let (checked, hyps, system) = match &proof {
        AnyProof::Justification(p) => (
            check_proof(p).map(|c| (c.conclusion.to_string(), c.is_theorem())),
            p.hypotheses.len(),
            p.system.to_string(),
        ),
        AnyProof::Modal(p) => (
            check_proof(p).map(|c| (c.conclusion.to_string(), c.is_theorem())),
            p.hypotheses.len(),
            p.system.to_string(),
        ),
    };
    Ok(match checked {
        Ok((conclusion, theorem)) => Report::ok(
            format!(
                "accept: {system} proves `{conclusion}`{}",
                if theorem {
                    String::new()
                } else {
                    format!(" from {hyps} hypotheses")
                }
            ),
            json!({"accept": true, "calculus": system, "conclusion": conclusion, "theorem": theorem}),
        ),
        Err(d) => Report {
            text: format!("reject: {d}"),
            structured: json!({"accept": false, "line": d.line, "defect": d.kind.to_string()}),
            accept: false,
        },
    })
}

fn lifted_report(l: Result<Lifted, LiftError>) -> Result<Report, Failure> {
    match l {
        Ok(l) => Ok(Report::ok(
            format!("# term: {}\n{}", l.term, l.proof)
                .trim_end()
                .to_string(),
            json!({"term": l.term.to_string(), "proof": l.proof.to_string()}),
        )),
        Err(LiftError::Invalid(d)) => Ok(Report {
            text: format!("reject: {d}"),
            structured: json!({"accept": false, "line": d.line, "defect": d.kind.to_string()}),
            accept: false,
        }),
        Err(e) => Err(e.into()),
    }
}

fn cmd_lift(args: &LiftArgs) -> Result<Report, Failure> {
    let proof = justification_proof(&args.proof)?;
    let terms: Vec<JustTerm> = args
        .terms
        .iter()
        .map(|t| parse_term(t))
        .collect::<Result<_, _>>()?;
    lifted_report(lift(&proof, &terms))
}

fn cmd_internalize(arg: &ProofArg) -> Result<Report, Failure> {
    lifted_report(internalize(&justification_proof(arg)?))
}

fn cmd_project(args: &FormulaArgs) -> Result<Report, Failure> {
    let phi = parse_jformula(&formula_text(args)?)?;
    let m = forgetful_projection(&phi);
    Ok(Report::ok(
        m.to_string(),
        json!({"formula": phi.to_string(), "projection": m.to_string()}),
    ))
}

fn cmd_project_proof(arg: &ProofArg) -> Result<Report, Failure> {
    let proof = justification_proof(arg)?;
    match project_proof(&proof) {
        Ok(m) => Ok(Report::ok(
            m.to_string().trim_end().to_string(),
            json!({"proof": m.to_string()}),
        )),
        Err(ProjectError::Invalid(d)) => Ok(Report {
            text: format!("reject: {d}"),
            structured: json!({"accept": false, "line": d.line, "defect": d.kind.to_string()}),
            accept: false,
        }),
        Err(e) => Err(e.into()),
    }
}

fn cmd_check_realization(args: &RealizationArgs) -> Result<Report, Failure> {
    let phi = parse_jformula(&args.formula)?;
    let psi = parse_mformula(&args.modal)?;
    let v = check_realization(&phi, &psi, args.normal);
    Ok(Report {
        text: v.to_string(),
        structured: json!({"accept": v.is_accept(), "verdict": v}),
        accept: v.is_accept(),
    })
}

fn demo_report(d: &Demonstration) -> Report {
    Report {
        text: d.to_text().trim_end().to_string(),
        structured: serde_json::to_value(d).expect("demonstrations serialize"),
        // Counterexamples and recoveries are both successful outcomes.
        accept: true,
    }
}

fn cmd_demo(args: &DemoArgs) -> Result<Report, Failure> {
    if let Some(path) = &args.recheck {
        let text = read(path)?;
        let value: Value = serde_json::from_str(&text)?;
        let (what, result) = if value.get("modal_proof").is_some() {
            let r: GapReport = serde_json::from_value(value)?;
            ("gap report", recheck_gap(&r))
        } else {
            let d: Demonstration = serde_json::from_value(value)?;
            ("demonstration", recheck(&d))
        };
        return Ok(match result {
            Ok(n) => Report::ok(
                format!("accept: {what} re-checked ({n} checks)"),
                json!({"accept": true, "checks": n}),
            ),
            Err(e) => Report {
                text: format!("reject: {e}"),
                structured: json!({"accept": false, "error": e}),
                accept: false,
            },
        });
    }
    let opts = DemoOptions {
        seed: args.sampling.seed,
        universe_size: args.sampling.universe_size,
        cs_chains: args.cs_chains,
    };
    let x: TruthValue = args.x.parse()?;
    let t = parse_term(&args.t)?;
    let s = parse_term(&args.s)?;
    let target = parse_jformula(&args.target)?;
    let (report, record) = match args.name.expect("clap enforces a name") {
        DemoName::ZFailure => {
            let d = demo_z_failure_no_factivity(x, &t, &s, &target, &opts).map_err(demo_failure)?;
            (demo_report(&d), serde_json::to_string_pretty(&d)?)
        }
        DemoName::ZFailureFactive => {
            let d =
                demo_z_failure_with_factivity(x, &t, &s, &target, &opts).map_err(demo_failure)?;
            (demo_report(&d), serde_json::to_string_pretty(&d)?)
        }
        DemoName::CrispToOne | DemoName::CrispToZero => {
            let dir = if matches!(args.name, Some(DemoName::CrispToOne)) {
                CrispDirection::ToOne
            } else {
                CrispDirection::ToZero
            };
            let d = demo_crisp_recovery(dir, &opts).map_err(demo_failure)?;
            (demo_report(&d), serde_json::to_string_pretty(&d)?)
        }
        DemoName::Gap => {
            let logic: JLogic = args.logic.parse()?;
            let r = demo_theorem_gap(logic, &opts).map_err(demo_failure)?;
            let report = Report::ok(
                r.to_text().trim_end().to_string(),
                serde_json::to_value(&r)?,
            );
            (report, serde_json::to_string_pretty(&r)?)
        }
    };
    if let Some(out) = &args.output {
        fs::write(out, record + "\n")
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", out.display())))?;
    }
    Ok(report)
}

/// Terms of depth at most `depth` over `x1..x{vars}` and `c1..c{consts}`.
fn small_terms(depth: usize, vars: u32, consts: u32) -> Vec<JustTerm> {
    let mut level: Vec<JustTerm> = (1..=vars)
        .map(JustTerm::var)
        .chain((1..=consts).map(JustTerm::constant))
        .collect();
    let mut all = level.clone();
    for _ in 0..depth {
        let mut next = Vec::new();
        for a in &all {
            next.push(JustTerm::bang(a.clone()));
            next.push(JustTerm::query(a.clone()));
            for b in &all {
                next.push(JustTerm::sum(a.clone(), b.clone()));
                next.push(JustTerm::app(a.clone(), b.clone()));
            }
        }
        level = next;
        all.extend(level.iter().cloned());
        all.sort();
        all.dedup();
    }
    all
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<Report, Failure> {
    let psi: MFormula = parse_mformula(&args.formula)?;
    let boxes = psi.box_count();
    let terms = small_terms(args.depth, args.vars, args.consts);
    let model = args
        .model
        .as_ref()
        .map(|p| load_model(p, &args.oracle))
        .transpose()?;
    let semantics = if args.star {
        Semantics::Star
    } else {
        Semantics::Standard
    };
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut index = vec![0usize; boxes];
    'outer: loop {
        if rows.len() >= args.limit {
            break;
        }
        let chosen: Vec<JustTerm> = index.iter().map(|&i| terms[i].clone()).collect();
        let phi = realize(&psi, &chosen);
        let verdict = check_realization(&phi, &psi, args.normal);
        if verdict.is_accept() {
            let value = match &model {
                Some(m) => Some(eval_with(m, &phi, semantics).map_err(model_failure)?),
                None => None,
            };
            let shown = value
                .as_ref()
                .map(|v| format!(" ; {v}"))
                .unwrap_or_default();
            lines.push(format!("{phi}{shown}"));
            rows.push(json!({"formula": phi.to_string(), "value": value.map(|v| v.to_string())}));
        }
        for k in (0..boxes).rev() {
            index[k] += 1;
            if index[k] < terms.len() {
                continue 'outer;
            }
            index[k] = 0;
        }
        break;
    }
    Ok(Report::ok(
        lines.join("\n"),
        json!({"modal": psi.to_string(), "candidates": rows}),
    ))
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Parse(a) => cmd_parse(a),
        Command::Eval(a) => cmd_eval(a, Semantics::Standard),
        Command::EvalStar(a) => cmd_eval(a, Semantics::Star),
        Command::CheckModel(a) => cmd_check_model(a),
        Command::CheckProof(a) => cmd_check_proof(a),
        Command::Lift(a) => cmd_lift(a),
        Command::Internalize(a) => cmd_internalize(a),
        Command::Project(a) => cmd_project(a),
        Command::ProjectProof(a) => cmd_project_proof(a),
        Command::CheckRealization(a) => cmd_check_realization(a),
        Command::Demo(a) => cmd_demo(a),
        Command::Enumerate(a) => cmd_enumerate(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(r) => {
            let body = match cli.format {
                OutputFormat::Text => r.text,
                OutputFormat::Structured => {
                    serde_json::to_string_pretty(&r.structured).expect("values serialize")
                }
            };
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::from(if r.accept { 0 } else { 1 })
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Undecided(m)) => {
            eprintln!("undecided: {m}");
            ExitCode::from(3)
        }
    }
}
