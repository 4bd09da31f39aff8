use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hlrsk::checks::{identity_suite, kernel_sweep, table_check, Check, IdentityLimits};
use hlrsk::oracle::{OracleError, Specialization, DEFAULT_BASIS_CAP};
use hlrsk::particle_systems::{
    coupled_q_run, coupled_tasep_check, q_speed_targets, q_speeds, tasep_speeds, ParticleError, QState, TasepState,
};
use hlrsk::rng::stream_rng;
use hlrsk::rsk_sampler::{exact_distribution, poisson_count, run_with, LetterOrder, SamplerConfig, SamplerError};
use hlrsk::scalar::{format_rational, parse_rational};
use hlrsk::stats::{lln_experiment, StatsError};
use hlrsk::worked::{check, four_level_example, mixed_example};
use hlrsk::{rat, Rational, Scalar};
use num_rational::BigRational;
use serde_json::{json, Value};

const VERSION: &str = env!("CARGO_PKG_VERSION");
const MAX_SAMPLE_STEPS: u64 = 10_000_000;
const MAX_TOTAL_STEPS: u64 = 10_000_000_000;

/// Hall-Littlewood RSK sampling, exact verification and particle-system experiments.
///
/// Output schemas:
///   sample  JSON lines: a header object {kind:"header", version, command, spec, rescale_factor, ...},
///           one {kind:"step", step, letter, top_shape} per insertion, then {kind:"final", state}.
///           With --mode exact, the header is followed by {kind:"table", table}.
///   verify  lines "PASS|FAIL <check>: <detail>" followed by the exact table when --n is given,
///           or one JSON object {header, checks, table} with --format json.
///   lln     JSON {header, report}; --format csv writes "# <header>" and rows run_id,n,i,lambda_i_over_n,lambda_prime_i_over_n.
///   tasep   JSON {header, speeds, targets, max_deviation, coupling_violations?};
///   qpush   --format csv writes the trajectory of run 0 as step,x_1,...,x_k.
///
/// Exit codes: 0 pass, 1 assertion failed, 2 bad input, 3 resource cap exceeded.
#[derive(Parser, Debug)]
#[command(name = "hlrsk", version, verbatim_doc_comment)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the sampler and print the trajectory of the top shape.
    Sample(SampleArgs),
    /// Exact checks: sampler tables against the oracle, worked examples, identities.
    Verify(VerifyArgs),
    /// Law of large numbers experiment for row and column frequencies.
    Lln(LlnArgs),
    /// Discrete-time TASEP speeds, with the sampler coupling when --t is given.
    Tasep(ParticleArgs),
    /// t-pushing dynamics speeds and the joint push coupling.
    Qpush(ParticleArgs),
}

#[derive(Args, Debug, Clone)]
struct SpecArgs {
    /// Usual parameters, comma separated ("1/2,0.25").
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    alpha: Vec<String>,
    /// Dual parameters, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    beta: Vec<String>,
    /// Plancherel parameter.
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    /// Hall-Littlewood parameter t in [0,1).
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// Macdonald q; only the oracle accepts q != 0.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, value_enum, default_value_t = OrderArg::UsualFirst)]
    order: OrderArg,
    #[arg(long, value_enum, default_value_t = ModeArg::Float)]
    mode: ModeArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output format; json by default (verify prints PASS/FAIL lines unless json is asked for).
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SampleArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Number of insertions.
    #[arg(long, conflicts_with = "tau")]
    n: Option<u32>,
    /// Poissonized run: the number of insertions is Poisson(tau).
    #[arg(long)]
    tau: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Compare exact sampler tables with the oracle for all sizes up to n.
    #[arg(long)]
    n: Option<u32>,
    /// Reproduce the two hand-checked single-insertion examples.
    #[arg(long)]
    worked_examples: bool,
    /// Run the oracle identity suite.
    #[arg(long)]
    identities: bool,
    /// Degree for --identities.
    #[arg(long, default_value_t = 6)]
    degree: u32,
    /// Also run the exhaustive kernel sweep up to this size.
    #[arg(long)]
    kernel_sweep: Option<u32>,
}

#[derive(Args, Debug)]
struct LlnArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 100)]
    runs: u32,
    /// Exit 1 unless every row and column deviation is at most this.
    #[arg(long)]
    assert_tolerance: Option<f64>,
}

#[derive(Args, Debug)]
struct ParticleArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 1)]
    runs: u32,
    /// Exit 1 unless every speed is within this distance of its target.
    #[arg(long)]
    assert_tolerance: Option<f64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    UsualFirst,
    DualFirst,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug)]
enum CliError {
    Failed(String),
    BadInput(String),
    Cap(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::BadInput(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::CapExceeded { .. } | OracleError::DegreeExceeded { .. } => CliError::Cap(e.to_string()),
            _ => CliError::BadInput(e.to_string()),
        }
    }
}

impl From<SamplerError> for CliError {
    fn from(e: SamplerError) -> Self {
        match e {
            SamplerError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            SamplerError::Oracle(o) => o.into(),
            _ => CliError::BadInput(e.to_string()),
        }
    }
}

impl From<StatsError> for CliError {
    fn from(e: StatsError) -> Self {
        match e {
            StatsError::Sampler(s) => s.into(),
            _ => CliError::BadInput(e.to_string()),
        }
    }
}

impl From<ParticleError> for CliError {
    fn from(e: ParticleError) -> Self {
        match e {
            ParticleError::Sampler(s) => s.into(),
            _ => CliError::BadInput(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::BadInput(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn parse_value(s: &str, mode: ModeArg, what: &str) -> CliResult<Rational> {
    if let Some(r) = parse_rational(s) {
        return Ok(r);
    }
    if mode == ModeArg::Float {
        if let Some(r) = s.trim().parse::<f64>().ok().filter(|x| x.is_finite()).and_then(BigRational::from_float) {
            return Ok(r);
        }
    }
    Err(CliError::BadInput(format!(
        "{what}: cannot read {s:?} as a {}",
        if mode == ModeArg::Exact { "rational" } else { "number" }
    )))
}

struct Resolved {
    spec: Specialization,
    factor: Rational,
    order: LetterOrder,
}

impl SpecArgs {
    fn values(&self, list: &[String], what: &str) -> CliResult<Vec<Rational>> {
        list.iter().filter(|s| !s.trim().is_empty()).map(|s| parse_value(s, self.mode, what)).collect()
    }

    fn scalar(&self, v: &Option<String>, what: &str) -> CliResult<Option<Rational>> {
        v.as_deref().map(|s| parse_value(s, self.mode, what)).transpose()
    }

    fn order(&self) -> LetterOrder {
        match self.order {
            OrderArg::UsualFirst => LetterOrder::UsualFirst,
            OrderArg::DualFirst => LetterOrder::DualFirst,
        }
    }

    fn t_value(&self) -> CliResult<Rational> {
        self.scalar(&self.t, "--t")?.ok_or_else(|| CliError::BadInput("--t is required".into()))
    }

    fn has_spec(&self) -> bool {
        !self.alpha.is_empty() || !self.beta.is_empty() || self.gamma.is_some()
    }

    /// Validates and normalizes to p1 = 1 at q = 0.
    fn resolve(&self) -> CliResult<Resolved> {
        if let Some(q) = self.scalar(&self.q, "--q")? {
            if !num_traits::Zero::is_zero(&q) {
                return Err(CliError::BadInput("this command needs q = 0".into()));
            }
        }
        let mut alphas = self.values(&self.alpha, "--alpha")?;
        let mut betas = self.values(&self.beta, "--beta")?;
        alphas.sort_by(|a, b| b.cmp(a));
        betas.sort_by(|a, b| b.cmp(a));
        let gamma = self.scalar(&self.gamma, "--gamma")?.unwrap_or_else(|| rat(0, 1));
        let spec = Specialization::hl(alphas, betas, gamma, self.t_value()?)?;
        if num_traits::Zero::is_zero(&spec.p1()) {
            return Err(CliError::BadInput("the specialization is trivial".into()));
        }
        let (spec, factor) = spec.normalized();
        Ok(Resolved { spec, factor, order: self.order() })
    }

    fn writer(&self) -> CliResult<Box<dyn Write>> {
        Ok(match &self.out {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

fn order_name(o: LetterOrder) -> &'static str {
    match o {
        LetterOrder::UsualFirst => "usual-first",
        LetterOrder::DualFirst => "dual-first",
    }
}

fn header(command: &str, r: &Resolved, seed: u64, extra: Value) -> Value {
    let mut h = json!({
        "kind": "header",
        "version": VERSION,
        "command": command,
        "spec": r.spec.to_json(),
        "rescale_factor": format_rational(&r.factor),
        "order": order_name(r.order),
        "seed": seed,
    });
    if let (Some(m), Value::Object(e)) = (h.as_object_mut(), extra) {
        m.extend(e);
    }
    h
}

fn cmd_sample(a: &SampleArgs) -> CliResult<()> {
    let r = a.spec.resolve()?;
    let config = SamplerConfig::new(r.spec.clone(), r.order, a.spec.seed)?;
    let mut out = a.spec.writer()?;
    let tau = a.spec.scalar(&a.tau, "--tau")?;
    if a.spec.mode == ModeArg::Exact {
        let n = a.n.ok_or_else(|| CliError::BadInput("--mode exact needs --n".into()))?;
        let table = exact_distribution(&config, n)?;
        writeln!(out, "{}", header("sample", &r, a.spec.seed, json!({"mode": "exact", "n": n})))?;
        writeln!(out, "{}", json!({"kind": "table", "table": table.to_json()}))?;
        out.flush()?;
        return Ok(());
    }
    let mut rng = stream_rng(a.spec.seed, 0);
    let (n, extra) = match (a.n, tau) {
        (Some(n), None) => (n, json!({"mode": "float", "n": n})),
        (None, Some(tau)) => {
            let n = poisson_count(tau.to_f64(), &mut rng)?;
            (n, json!({"mode": "float", "tau": format_rational(&tau), "n": n}))
        }
        _ => return Err(CliError::BadInput("give exactly one of --n and --tau".into())),
    };
    if n as u64 > MAX_SAMPLE_STEPS {
        return Err(CliError::Cap(format!("n = {n} exceeds the cap {MAX_SAMPLE_STEPS}")));
    }
    let csv = a.spec.format == Some(FormatArg::Csv);
    let head = header("sample", &r, a.spec.seed, extra);
    if csv {
        writeln!(out, "# {head}")?;
        writeln!(out, "step,letter,top_shape")?;
    } else {
        writeln!(out, "{head}")?;
    }
    let mut io_err = None;
    let state = run_with(&config, n, &mut rng, |k, letter, s| {
        if io_err.is_some() {
            return;
        }
        let shape = s.top_shape();
        let line = if csv {
            let parts: Vec<String> = shape.parts().iter().map(u32::to_string).collect();
            writeln!(out, "{k},{},{}", letter.label(), parts.join(" "))
        } else {
            writeln!(out, "{}", json!({"kind": "step", "step": k, "letter": letter.label(), "top_shape": shape}))
        };
        io_err = line.err();
    })?;
    if let Some(e) = io_err {
        return Err(e.into());
    }
    if csv {
        writeln!(out, "# {}", json!({"kind": "final", "state": state.to_json()}))?;
    } else {
        writeln!(out, "{}", json!({"kind": "final", "state": state.to_json()}))?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_verify(a: &VerifyArgs) -> CliResult<()> {
    let mut checks: Vec<Check> = Vec::new();
    let mut table = Value::Null;
    let mut head = json!({"kind": "header", "version": VERSION, "command": "verify"});
    let ts: Vec<Rational> = match a.spec.scalar(&a.spec.t, "--t")? {
        Some(t) => vec![t],
        None => vec![rat(1, 2), rat(1, 3)],
    };
    if a.worked_examples {
        for ex in [four_level_example(), mixed_example()] {
            for t in &ts {
                let ok = check(&ex, t)?;
                checks.push(Check { name: format!("{} t={}", ex.name, format_rational(t)), passed: ok, detail: String::new() });
            }
        }
    }
    if a.identities {
        if a.degree + 1 > DEFAULT_BASIS_CAP {
            return Err(CliError::Cap(format!("degree {} exceeds the cap {}", a.degree, DEFAULT_BASIS_CAP - 1)));
        }
        let limits = IdentityLimits { skew_cauchy: a.degree.min(5), ..IdentityLimits::uniform(a.degree) };
        for t in &ts {
            for mut c in identity_suite(t, limits) {
                c.name = format!("{} t={}", c.name, format_rational(t));
                checks.push(c);
            }
        }
    }
    if let Some(size) = a.kernel_sweep {
        if size > 10 {
            return Err(CliError::Cap(format!("kernel sweep size {size} exceeds the cap 10")));
        }
        checks.push(kernel_sweep(size, 2, &ts));
    }
    if let Some(n) = a.n {
        let r = a.spec.resolve()?;
        let config = SamplerConfig::new(r.spec.clone(), r.order, a.spec.seed)?;
        let got = exact_distribution(&config, n)?;
        if n + 1 > DEFAULT_BASIS_CAP {
            return Err(CliError::Cap(format!("n = {n} exceeds the oracle cap")));
        }
        checks.push(table_check(&config, n, None));
        table = got.to_json();
        head = header("verify", &r, a.spec.seed, json!({"n": n}));
    } else if a.spec.has_spec() {
        return Err(CliError::BadInput("a specialization needs --n".into()));
    }
    if checks.is_empty() {
        return Err(CliError::BadInput("nothing to verify: give --n, --worked-examples, --identities or --kernel-sweep".into()));
    }
    if a.spec.format == Some(FormatArg::Csv) {
        return Err(CliError::BadInput("verify writes text or json".into()));
    }
    let mut out = a.spec.writer()?;
    if a.spec.format == Some(FormatArg::Json) {
        writeln!(out, "{}", json!({"header": head, "checks": checks, "table": table}))?;
    } else {
        for c in &checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{verdict} {}: {}", c.name, c.detail)?;
        }
        if !table.is_null() {
            writeln!(out, "{table}")?;
        }
    }
    out.flush()?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    if failed > 0 {
        return Err(CliError::Failed(format!("{failed} check(s) failed")));
    }
    Ok(())
}

fn cmd_lln(a: &LlnArgs) -> CliResult<()> {
    if a.n as u64 * a.runs as u64 > MAX_TOTAL_STEPS {
        return Err(CliError::Cap(format!("n*runs exceeds the cap {MAX_TOTAL_STEPS}")));
    }
    let r = a.spec.resolve()?;
    let config = SamplerConfig::new(r.spec.clone(), r.order, a.spec.seed)?;
    let output = lln_experiment(&config, a.n, a.runs, a.spec.seed)?;
    let head = header("lln", &r, a.spec.seed, json!({"n": a.n, "runs": a.runs}));
    let mut out = a.spec.writer()?;
    match a.spec.format.unwrap_or(FormatArg::Json) {
        FormatArg::Json => writeln!(out, "{}", json!({"header": head, "report": output.report}))?,
        FormatArg::Csv => write!(out, "# {head}\n{}", output.csv)?,
    }
    out.flush()?;
    if let Some(tol) = a.assert_tolerance {
        let dev = output.report.max_deviation;
        if dev.is_nan() || dev > tol {
            return Err(CliError::Failed(format!("max deviation {dev} exceeds {tol}")));
        }
    }
    Ok(())
}

fn to_f64s(v: &[Rational]) -> Vec<f64> {
    v.iter().map(Scalar::to_f64).collect()
}

/// Shared by tasep and qpush: speeds, targets, optional coupling count, trajectory.
struct ParticleRun {
    speeds: Vec<f64>,
    targets: Vec<f64>,
    violations: Option<u32>,
    trajectory: Vec<Vec<i64>>,
}

fn emit_particles(a: &ParticleArgs, command: &str, head: Value, run: ParticleRun) -> CliResult<()> {
    let dev = run.speeds.iter().zip(&run.targets).map(|(s, t)| (s - t).abs()).fold(0.0, f64::max);
    let mut out = a.spec.writer()?;
    match a.spec.format.unwrap_or(FormatArg::Json) {
        FormatArg::Json => {
            let mut body = json!({"header": head, "speeds": run.speeds, "targets": run.targets, "max_deviation": dev});
            if let Some(v) = run.violations {
                body["coupling_violations"] = json!(v);
            }
            writeln!(out, "{body}")?;
        }
        FormatArg::Csv => {
            writeln!(out, "# {head}")?;
            let k = run.targets.len();
            let cols: Vec<String> = (1..=k).map(|i| format!("x_{i}")).collect();
            writeln!(out, "step,{}", cols.join(","))?;
            for (step, pos) in run.trajectory.iter().enumerate() {
                let p: Vec<String> = pos.iter().map(i64::to_string).collect();
                writeln!(out, "{step},{}", p.join(","))?;
            }
        }
    }
    out.flush()?;
    if run.violations.is_some_and(|v| v > 0) {
        return Err(CliError::Failed(format!("{command}: coupling violated")));
    }
    if let Some(tol) = a.assert_tolerance {
        if dev.is_nan() || dev > tol {
            return Err(CliError::Failed(format!("max speed deviation {dev} exceeds {tol}")));
        }
    }
    Ok(())
}

fn particle_spec(a: &ParticleArgs, t: Rational) -> CliResult<Resolved> {
    let spec =
        Specialization::hl(a.spec.values(&a.spec.alpha, "--alpha")?, a.spec.values(&a.spec.beta, "--beta")?, rat(0, 1), t)?;
    if num_traits::Zero::is_zero(&spec.p1()) {
        return Err(CliError::BadInput("the specialization is trivial".into()));
    }
    let (spec, factor) = spec.normalized();
    Ok(Resolved { spec, factor, order: LetterOrder::UsualFirst })
}

fn check_particle_caps(a: &ParticleArgs) -> CliResult<()> {
    if a.n as u64 * a.runs.max(1) as u64 > MAX_TOTAL_STEPS || a.n as u64 > MAX_SAMPLE_STEPS {
        return Err(CliError::Cap("n*runs exceeds the cap".into()));
    }
    if a.runs == 0 {
        return Err(CliError::BadInput("--runs must be positive".into()));
    }
    Ok(())
}

fn cmd_tasep(a: &ParticleArgs) -> CliResult<()> {
    check_particle_caps(a)?;
    if !a.spec.beta.is_empty() || a.spec.gamma.is_some() {
        return Err(CliError::BadInput("tasep takes --alpha only".into()));
    }
    let t = a.spec.scalar(&a.spec.t, "--t")?;
    let r = particle_spec(a, t.clone().unwrap_or_else(|| rat(0, 1)))?;
    let alphas = to_f64s(&r.spec.alphas);
    let speeds = tasep_speeds(&alphas, a.n, a.runs, a.spec.seed)?;
    let violations = match &t {
        Some(t) => Some(coupled_tasep_check(&alphas, t.to_f64(), a.n, &mut stream_rng(a.spec.seed, u64::MAX))?.violations),
        None => None,
    };
    let mut trajectory = Vec::new();
    if a.spec.format == Some(FormatArg::Csv) {
        let mut rng = stream_rng(a.spec.seed, 0);
        let mut s = TasepState::new(alphas.clone())?;
        trajectory.push(s.positions.clone());
        for _ in 0..a.n {
            s.step(&mut rng);
            trajectory.push(s.positions.clone());
        }
    }
    let mut head = header("tasep", &r, a.spec.seed, json!({"n": a.n, "runs": a.runs}));
    if t.is_none() {
        head["spec"]["t"] = Value::Null;
    }
    emit_particles(a, "tasep", head, ParticleRun { speeds, targets: alphas, violations, trajectory })
}

fn cmd_qpush(a: &ParticleArgs) -> CliResult<()> {
    check_particle_caps(a)?;
    if !a.spec.alpha.is_empty() || a.spec.gamma.is_some() {
        return Err(CliError::BadInput("qpush takes --beta only".into()));
    }
    let t = a.spec.t_value()?;
    let r = particle_spec(a, t.clone())?;
    let betas = to_f64s(&r.spec.betas);
    let tf = t.to_f64();
    let speeds = q_speeds(&betas, tf, a.n, a.runs, a.spec.seed)?;
    let violations = coupled_q_run(&betas, tf, a.n, &mut stream_rng(a.spec.seed, u64::MAX))?.violations;
    let mut trajectory = Vec::new();
    if a.spec.format == Some(FormatArg::Csv) {
        let mut rng = stream_rng(a.spec.seed, 0);
        let mut s = QState::new(betas.clone(), tf)?;
        trajectory.push(s.positions.clone());
        for _ in 0..a.n {
            s.step(&mut rng);
            trajectory.push(s.positions.clone());
        }
    }
    let head = header("qpush", &r, a.spec.seed, json!({"n": a.n, "runs": a.runs}));
    let targets = q_speed_targets(&betas, tf);
    emit_particles(a, "qpush", head, ParticleRun { speeds, targets, violations: Some(violations), trajectory })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Sample(a) => cmd_sample(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Lln(a) => cmd_lln(a),
        Command::Tasep(a) => cmd_tasep(a),
        Command::Qpush(a) => cmd_qpush(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = match &e {
                CliError::Failed(m) | CliError::BadInput(m) | CliError::Cap(m) => m,
            };
            eprintln!("hlrsk: {msg}");
            ExitCode::from(e.code())
        }
    }
}
