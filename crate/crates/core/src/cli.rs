//! Command-line front end: configuration parsing, experiment dispatch and
//! CSV/JSON output.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{rate_check_many, linspace, QSchedule, WeightedSpaceParams};
use crate::basis::{verify_conditions, ConditionReport};
use crate::error::Error;
use crate::functions::TestFunction;
use crate::moments::{moment_reports, MomentReport};
use crate::operators::{apply_baskakov_stancu, KantorovichEvaluator, OperatorParams};
use crate::qcalc::QParam;

pub const MAX_TERMS_ENV: &str = "QOPERATOR_MAX_TERMS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Approximate,
    Moments,
    VerifyConditions,
    Converge,
    BoundCheck,
}

impl Command {
    pub fn as_str(&self) -> &'static str {
        match self {
            Command::Approximate => "approximate",
            Command::Moments => "moments",
            Command::VerifyConditions => "verify-conditions",
            Command::Converge => "converge",
            Command::BoundCheck => "bound-check",
        }
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Command::value_variants()
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown command '{s}'"))
    }
}

impl fmt::Display for QSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSchedule::Fixed(q) => write!(f, "fixed:{q}"),
            QSchedule::OneMinusInvN => f.write_str("one-minus-inv-n"),
            QSchedule::NOverNPlus1 => f.write_str("n-over-n-plus-1"),
        }
    }
}

impl FromStr for QSchedule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "one-minus-inv-n" => Ok(QSchedule::OneMinusInvN),
            "n-over-n-plus-1" => Ok(QSchedule::NOverNPlus1),
            _ => {
                let q = s
                    .strip_prefix("fixed:")
                    .ok_or_else(|| format!("unknown q_schedule '{s}'"))?;
                q.trim()
                    .parse()
                    .map(QSchedule::Fixed)
                    .map_err(|_| format!("q_schedule: bad q '{q}'"))
            }
        }
    }
}

/// A validated experiment description.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub command: Command,
    pub function: TestFunction,
    pub n_list: Vec<u32>,
    pub q_schedule: QSchedule,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: u32,
    pub b: f64,
    pub x_max: f64,
    pub x_steps: usize,
    pub h_steps: usize,
    pub b_steps: usize,
    pub pointwise_steps: usize,
    pub series_tol: f64,
    pub max_terms: usize,
    pub k_max: u32,
    pub condition_tol: f64,
    pub moment_tol: f64,
    pub out: PathBuf,
    /// Reserved for randomized grids; unused by the current commands.
    pub seed: u64,
    /// Run bound checks on functions outside the bound hypotheses and
    /// report, without asserting, the outcome.
    pub exploratory: bool,
}

impl ExperimentConfig {
    fn defaults(command: Command) -> Self {
        let sp = WeightedSpaceParams::default();
        Self {
            command,
            function: TestFunction::from_str("e1").expect("built-in"),
            n_list: vec![10],
            q_schedule: QSchedule::Fixed(0.5),
            alpha: 0.0,
            beta: 0.0,
            gamma: sp.gamma,
            b: sp.b,
            x_max: sp.x_max,
            x_steps: sp.x_steps,
            h_steps: sp.h_steps,
            b_steps: sp.b_steps,
            pointwise_steps: sp.pointwise_steps,
            series_tol: crate::qcalc::DEFAULT_SERIES_TOL,
            max_terms: 100_000,
            k_max: 5,
            condition_tol: 1e-10,
            moment_tol: 1e-8,
            out: PathBuf::from("qoperator.csv"),
            seed: 0,
            exploratory: false,
        }
    }

    pub fn space(&self) -> WeightedSpaceParams {
        WeightedSpaceParams {
            gamma: self.gamma,
            x_max: self.x_max,
            x_steps: self.x_steps,
            h_steps: self.h_steps,
            b: self.b,
            b_steps: self.b_steps,
            pointwise_steps: self.pointwise_steps,
        }
    }

    pub fn schedule(&self) -> Vec<(u32, f64)> {
        self.q_schedule.pairs(&self.n_list)
    }

    pub fn echo(&self) -> Value {
        json!({
            "command": self.command.as_str(),
            "function": self.function.to_string(),
            "n_list": self.n_list,
            "q_schedule": self.q_schedule.to_string(),
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "b": self.b,
            "x_max": self.x_max,
            "x_steps": self.x_steps,
            "h_steps": self.h_steps,
            "b_steps": self.b_steps,
            "pointwise_steps": self.pointwise_steps,
            "series_tol": self.series_tol,
            "max_terms": self.max_terms,
            "k_max": self.k_max,
            "condition_tol": self.condition_tol,
            "moment_tol": self.moment_tol,
            "out": self.out.display().to_string(),
            "seed": self.seed,
            "exploratory": self.exploratory,
        })
    }

    fn template(&self, n: u32, q: f64) -> crate::Result<OperatorParams> {
        let qp = QParam::with_tolerances(q, self.series_tol, self.max_terms)?;
        OperatorParams::q_baskakov(n, qp, self.alpha, self.beta)?
            .with_x_max(self.x_max)
            .map(|p| p.with_tail_gamma(self.gamma))
    }
}

/// Every problem found in a configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError {
    pub problems: Vec<String>,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.problems.join("; "))
    }
}

impl std::error::Error for ConfigError {}

/// A configuration value before typing: from JSON or from `key=value` text.
#[derive(Debug, Clone)]
enum Raw {
    Json(Value),
    Text(String),
}

impl Raw {
    fn text(&self) -> Option<String> {
        match self {
            Raw::Text(s) => Some(s.trim().to_string()),
            Raw::Json(Value::String(s)) => Some(s.clone()),
            Raw::Json(Value::Number(n)) => Some(n.to_string()),
            Raw::Json(Value::Bool(b)) => Some(b.to_string()),
            Raw::Json(_) => None,
        }
    }
}

fn parse_source(source: &str) -> Result<BTreeMap<String, Raw>, ConfigError> {
    let one = |msg: String| ConfigError { problems: vec![msg] };
    if source.trim_start().starts_with('{') {
        let v: Value = serde_json::from_str(source)
            .map_err(|e| one(format!("JSON parse error at line {}, column {}: {e}", e.line(), e.column())))?;
        let Value::Object(map) = v else {
            return Err(one("config must be a JSON object".into()));
        };
        return Ok(map.into_iter().map(|(k, v)| (k, Raw::Json(v))).collect());
    }
    let mut map = BTreeMap::new();
    let mut problems = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match line.split_once('=') {
            Some((k, v)) => {
                let k = k.trim().to_string();
                if map.insert(k.clone(), Raw::Text(v.trim().to_string())).is_some() {
                    problems.push(format!("line {}: duplicate key '{k}'", i + 1));
                }
            }
            None => problems.push(format!("line {}: expected key=value, got '{line}'", i + 1)),
        }
    }
    if problems.is_empty() {
        Ok(map)
    } else {
        Err(ConfigError { problems })
    }
}

/// `"a,b,c"` or `"a..b"` (doubling from `a` while `<= b`).
pub fn parse_n_list(s: &str) -> Result<Vec<u32>, String> {
    let bad = |t: &str| format!("n_list: bad entry '{t}'");
    if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a.trim().parse().map_err(|_| bad(a))?;
        let b: u32 = b.trim().parse().map_err(|_| bad(b))?;
        if a == 0 {
            return Err("n_list: n must be positive".into());
        }
        let mut out = Vec::new();
        let mut n = a;
        while n <= b {
            out.push(n);
            n = n.checked_mul(2).ok_or("n_list: range overflows")?;
        }
        return Ok(out);
    }
    s.split(',').map(|t| t.trim().parse::<u32>().map_err(|_| bad(t))).collect()
}

struct Fields {
    map: BTreeMap<String, Raw>,
    problems: Vec<String>,
}

impl Fields {
    fn take<T, P>(&mut self, key: &str, slot: &mut T, parse: P)
    where
        P: FnOnce(&Raw) -> Result<T, String>,
    {
        if let Some(raw) = self.map.remove(key) {
            match parse(&raw) {
                Ok(v) => *slot = v,
                Err(e) => self.problems.push(e),
            }
        }
    }

    fn take_parsed<T: FromStr>(&mut self, key: &str, slot: &mut T) {
        self.take(key, slot, |raw| {
            let s = raw.text().ok_or_else(|| format!("{key}: expected a scalar"))?;
            s.parse().map_err(|_| format!("{key}: cannot parse '{s}'"))
        });
    }
}

/// Parses a JSON or `key=value` configuration; the format is chosen by the
/// first non-space byte. Returns every problem found, not just the first.
pub fn parse_config(source: &str) -> Result<ExperimentConfig, ConfigError> {
    parse_config_with(source, &[])
}

/// As [`parse_config`], with `key=value` overrides applied before validation.
pub fn parse_config_with(source: &str, overrides: &[(String, String)]) -> Result<ExperimentConfig, ConfigError> {
    let mut map = parse_source(source)?;
    for (k, v) in overrides {
        map.insert(k.clone(), Raw::Text(v.clone()));
    }
    let mut fields = Fields { map, problems: Vec::new() };

    let mut command = None;
    fields.take("command", &mut command, |raw| {
        let s = raw.text().ok_or("command: expected a string")?;
        s.parse().map(Some)
    });
    let Some(command) = command else {
        let mut problems = vec!["missing command".to_string()];
        problems.append(&mut fields.problems);
        return Err(ConfigError { problems });
    };
    let mut c = ExperimentConfig::defaults(command);

    fields.take("function", &mut c.function, |raw| {
        let s = raw.text().ok_or("function: expected a string")?;
        s.parse().map_err(|e: Error| format!("function: {e}"))
    });
    fields.take("n_list", &mut c.n_list, |raw| match raw {
        Raw::Json(Value::Array(items)) => items
            .iter()
            .map(|v| {
                v.as_u64()
                    .and_then(|n| u32::try_from(n).ok())
                    .ok_or_else(|| format!("n_list: bad entry {v}"))
            })
            .collect(),
        other => parse_n_list(&other.text().ok_or("n_list: expected a list")?),
    });
    fields.take("q_schedule", &mut c.q_schedule, |raw| {
        raw.text().ok_or("q_schedule: expected a string".to_string())?.parse()
    });
    fields.take_parsed("alpha", &mut c.alpha);
    fields.take_parsed("beta", &mut c.beta);
    fields.take_parsed("gamma", &mut c.gamma);
    fields.take_parsed("b", &mut c.b);
    fields.take_parsed("x_max", &mut c.x_max);
    fields.take_parsed("x_steps", &mut c.x_steps);
    fields.take_parsed("h_steps", &mut c.h_steps);
    fields.take_parsed("b_steps", &mut c.b_steps);
    fields.take_parsed("pointwise_steps", &mut c.pointwise_steps);
    fields.take_parsed("series_tol", &mut c.series_tol);
    fields.take_parsed("max_terms", &mut c.max_terms);
    fields.take_parsed("k_max", &mut c.k_max);
    fields.take_parsed("condition_tol", &mut c.condition_tol);
    fields.take_parsed("moment_tol", &mut c.moment_tol);
    fields.take_parsed("out", &mut c.out);
    fields.take_parsed("seed", &mut c.seed);
    fields.take_parsed("exploratory", &mut c.exploratory);

    let Fields { map, mut problems } = fields;
    problems.extend(map.keys().map(|k| format!("unknown field '{k}'")));
    problems.extend(validate(&c));
    if problems.is_empty() {
        Ok(c)
    } else {
        Err(ConfigError { problems })
    }
}

fn validate(c: &ExperimentConfig) -> Vec<String> {
    let mut p = Vec::new();
    if !(c.alpha >= 0.0) {
        p.push("alpha must be >= 0".into());
    }
    if c.alpha > c.beta {
        p.push("alpha exceeds beta".into());
    }
    if c.n_list.is_empty() {
        p.push("n_list must not be empty".into());
    }
    if c.n_list.contains(&0) {
        p.push("n_list: n must be positive".into());
    }
    if c.n_list.windows(2).any(|w| w[0] >= w[1]) {
        p.push("n_list must be sorted ascending".into());
    }
    if c.schedule().iter().any(|&(_, q)| !(q > 0.0 && q <= 1.0)) {
        p.push("q out of (0,1]".into());
    }
    if !(c.x_max > 0.0 && c.x_max.is_finite()) {
        p.push("x_max must be positive".into());
    }
    if !(c.b > 0.0 && c.b <= c.x_max) {
        p.push("b must lie in (0, x_max]".into());
    }
    for (name, v) in [("x_steps", c.x_steps), ("h_steps", c.h_steps), ("b_steps", c.b_steps), ("pointwise_steps", c.pointwise_steps)] {
        if v == 0 {
            p.push(format!("{name} must be positive"));
        }
    }
    if !(c.series_tol > 0.0) {
        p.push("series_tol must be positive".into());
    }
    if c.max_terms == 0 {
        p.push("max_terms must be positive".into());
    }
    if c.k_max == 0 {
        p.push("k_max must be at least 1".into());
    }
    if c.command == Command::BoundCheck && !c.exploratory && !c.function.is_non_decreasing() {
        p.push(format!(
            "function {} is not known to be non-decreasing; bound-check needs exploratory=true",
            c.function
        ));
    }
    p
}

/// Failures of a run that are not assertion outcomes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration: {0}")]
    Config(#[from] ConfigError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("writing CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("{context}: {source}")]
    Compute { context: String, source: Error },
}

fn compute<T>(context: impl FnOnce() -> String, r: crate::Result<T>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Compute { context: context(), source })
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub rows: usize,
    /// Assertion failures (bound violated, condition failed, residual too large).
    pub failures: Vec<String>,
    pub csv_path: PathBuf,
    pub meta_path: PathBuf,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.failures.is_empty() {
            0
        } else {
            2
        }
    }
}

/// One row of the `approximate` command.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ApproximationRow {
    pub n: u32,
    pub q: f64,
    pub x: f64,
    pub exact: f64,
    pub kantorovich: f64,
    pub point: f64,
    pub kantorovich_error: f64,
    pub point_error: f64,
    pub terms_used: usize,
    pub weight_sum: f64,
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => match n.as_f64() {
            Some(f) if n.is_f64() => format!("{f:?}"),
            _ => n.to_string(),
        },
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(";"),
        Value::Object(_) => v.to_string(),
    }
}

/// Writes rows as CSV with a header of the row type's field names. Floats
/// use the shortest representation that round-trips; sequences are `;`-joined.
pub fn write_csv<T: Serialize>(path: &Path, rows: &[T]) -> Result<(), CliError> {
    let file = fs::File::create(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    let mut w = csv::Writer::from_writer(file);
    for (i, row) in rows.iter().enumerate() {
        let Value::Object(obj) = serde_json::to_value(row).expect("rows serialize to objects") else {
            panic!("CSV rows must be structs");
        };
        if i == 0 {
            w.write_record(obj.keys())?;
        }
        w.write_record(obj.values().map(cell))?;
    }
    w.flush().map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    Ok(())
}

fn meta_path(out: &Path) -> PathBuf {
    out.with_extension("meta.json")
}

fn x_grid(c: &ExperimentConfig) -> Vec<f64> {
    linspace(c.b, c.b_steps)
}

fn run_approximate(c: &ExperimentConfig) -> Result<Vec<ApproximationRow>, CliError> {
    let f = |t: f64| c.function.eval(t);
    let mut rows = Vec::new();
    for (n, q) in c.schedule() {
        let p = compute(|| format!("n = {n}"), c.template(n, q))?;
        let mut ev = KantorovichEvaluator::new(&f, p.clone());
        for x in x_grid(c) {
            let ctx = || format!("approximate, n = {n}, x = {x}");
            let (k, diag) = compute(ctx, ev.evaluate(x))?;
            let (l, _) = compute(ctx, apply_baskakov_stancu(&f, x, &p))?;
            let exact = f(x);
            rows.push(ApproximationRow {
                n,
                q,
                x,
                exact,
                kantorovich: k,
                point: l,
                kantorovich_error: (k - exact).abs(),
                point_error: (l - exact).abs(),
                terms_used: diag.terms_used,
                weight_sum: diag.weight_sum,
            });
        }
    }
    Ok(rows)
}

fn run_moments(c: &ExperimentConfig, failures: &mut Vec<String>) -> Result<Vec<MomentReport>, CliError> {
    let mut rows = Vec::new();
    for (n, q) in c.schedule() {
        let p = compute(|| format!("n = {n}"), c.template(n, q))?;
        let reports = compute(|| format!("moments, n = {n}"), moment_reports(&x_grid(c), &p))?;
        for r in &reports {
            if !(r.max_rel_residual < c.moment_tol) {
                failures.push(format!(
                    "moments: n = {n}, x = {}: residual {:.3e} >= {:.3e}",
                    r.x, r.max_rel_residual, c.moment_tol
                ));
            }
        }
        rows.extend(reports);
    }
    Ok(rows)
}

fn run_conditions(c: &ExperimentConfig, failures: &mut Vec<String>) -> Result<Vec<ConditionReport>, CliError> {
    let mut rows = Vec::new();
    for (n, q) in c.schedule() {
        let p = compute(|| format!("n = {n}"), c.template(n, q))?;
        let report = compute(
            || format!("verify-conditions, n = {n}"),
            verify_conditions(p.family(), &[n], &x_grid(c), c.k_max, p.qp(), c.condition_tol),
        )?;
        if !report.passed {
            failures.push(format!("conditions failed for n = {n}, q = {q}"));
        }
        rows.push(report);
    }
    Ok(rows)
}

fn run_rates(c: &ExperimentConfig, failures: &mut Vec<String>) -> Result<Vec<crate::analysis::RateRow>, CliError> {
    let (n0, q0) = c.schedule()[0];
    let template = compute(|| format!("n = {n0}"), c.template(n0, q0))?;
    let f = |t: f64| c.function.eval(t);
    let mut tables = compute(
        || c.command.as_str().to_string(),
        rate_check_many(&[&f], &c.schedule(), &template, &c.space()),
    )?;
    let table = tables.remove(0);
    let asserted = !c.exploratory && c.function.is_non_decreasing();
    if asserted {
        for r in &table.rows {
            if !r.bound_ok {
                failures.push(format!("n = {}: weighted error {:.3e} exceeds {:.3e}", r.n, r.weighted_error, r.bound_rhs));
            }
            if !r.pointwise_ok {
                failures.push(format!("n = {}: pointwise bound violated", r.n));
            }
        }
    }
    Ok(table.rows)
}

/// Runs one experiment, writing the CSV and its metadata file.
pub fn run(c: &ExperimentConfig) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let mut failures = Vec::new();
    let rows = match c.command {
        Command::Approximate => {
            let rows = run_approximate(c)?;
            write_csv(&c.out, &rows)?;
            rows.len()
        }
        Command::Moments => {
            let rows = run_moments(c, &mut failures)?;
            write_csv(&c.out, &rows)?;
            rows.len()
        }
        Command::VerifyConditions => {
            let rows = run_conditions(c, &mut failures)?;
            write_csv(&c.out, &rows)?;
            rows.len()
        }
        Command::Converge | Command::BoundCheck => {
            let rows = run_rates(c, &mut failures)?;
            write_csv(&c.out, &rows)?;
            rows.len()
        }
    };
    let meta = meta_path(&c.out);
    let doc = json!({
        "tool": env!("CARGO_PKG_NAME"),
        "version": env!("CARGO_PKG_VERSION"),
        "config": c.echo(),
        "rows": rows,
        "assertion_failures": failures,
        "wall_time_seconds": started.elapsed().as_secs_f64(),
    });
    let text = serde_json::to_string_pretty(&doc).expect("metadata serializes");
    fs::write(&meta, text + "\n").map_err(|source| CliError::Io { path: meta.clone(), source })?;
    Ok(Outcome { rows, failures, csv_path: c.out.clone(), meta_path: meta })
}

#[derive(Debug, Parser)]
#[command(name = "qoperator", version, about = "q-Baskakov-Kantorovich operator experiments")]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// JSON or key=value configuration file
    #[arg(long)]
    config: Option<PathBuf>,
    /// Orders: "10", "8,16,32" or "8..512"
    #[arg(long)]
    n: Option<String>,
    /// Fixed q for every order
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long)]
    function: Option<String>,
    #[arg(long)]
    out: Option<String>,
}

fn load(args: &Args) -> Result<ExperimentConfig, CliError> {
    let source = match &args.config {
        Some(path) => fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?,
        None => String::new(),
    };
    let mut overrides = vec![("command".to_string(), args.command.as_str().to_string())];
    if let Ok(v) = std::env::var(MAX_TERMS_ENV) {
        overrides.push(("max_terms".into(), v));
    }
    let flags = [
        ("n_list", &args.n),
        ("alpha", &args.alpha),
        ("beta", &args.beta),
        ("gamma", &args.gamma),
        ("function", &args.function),
        ("out", &args.out),
    ];
    for (key, value) in flags {
        if let Some(v) = value {
            overrides.push((key.to_string(), v.clone()));
        }
    }
    if let Some(q) = &args.q {
        overrides.push(("q_schedule".into(), format!("fixed:{q}")));
    }
    Ok(parse_config_with(&source, &overrides)?)
}

/// Entry point: 0 on success, 2 on assertion failures, 1 on errors.
pub fn main_entry<I, T>(argv: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = load(&args).and_then(|c| run(&c));
    match outcome {
        Ok(o) => {
            for f in &o.failures {
                eprintln!("assertion failed: {f}");
            }
            println!("wrote {} rows to {}", o.rows, o.csv_path.display());
            ExitCode::from(o.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
