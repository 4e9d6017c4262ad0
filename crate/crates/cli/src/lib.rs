//! `upq`: command-line access to the triple and `U(p,q)`-Higgs invariants.
//!
//! Every subcommand produces a [`Report`]. By default it is printed as a two
//! column table; `--json` prints it as JSON with stable field names. Rationals
//! are `"num/den"` strings, so no floating point value is ever emitted.

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use upq_core::census::{coprime_partition, enumerate_region, tau_quotient_facts};
use upq_core::classify::{classify, SpaceVerdict};
use upq_core::higgs::{
    coprime_smooth, expected_dim, minima_triple_type, mw_relations, rigidity, toledo, vanishing_pattern,
};
use upq_core::morse::{dim_h1_weight, morse_index, uk_profile, HodgeChain, IntList};
use upq_core::triple::{
    alpha_range, alpha_slope, chi, dim_stable_moduli, dual, fibration_dims, thresholds, witness_check, Upper,
};
use upq_core::walls::{
    chambers, default_cutoff, enumerate_walls, flip_dims, integer_genericity, is_critical, Interval,
};
use upq_core::{Error, Genus, HiggsType, Rational, SubtripleWitness, TripleType};

/// Exit code for malformed input.
pub const EXIT_USAGE: u8 = 2;
/// Exit code for well-formed input that violates a precondition.
pub const EXIT_DOMAIN: u8 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    /// Output path to the citation tags it rests on.
    pub citations: BTreeMap<String, Vec<String>>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "upq", version, about = "Exact invariants of holomorphic triples and U(p,q)-Higgs bundles")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Slopes, alpha range, thresholds, dimensions and witness checks for a triple type.
    Triple(TripleCmd),
    /// Critical values of alpha in an interval.
    Walls(WallsCmd),
    /// Chamber decomposition of the alpha range and where 2g-2 falls.
    Chambers(ChambersCmd),
    /// Toledo invariant, Milnor-Wood relations and the minima triple type.
    Higgs(HiggsArgs),
    /// Decomposition and dimension at maximal Toledo invariant for p != q.
    Rigidity(HiggsArgs),
    /// Weight decomposition and Morse index of a Hodge chain.
    Morse(MorseCmd),
    /// Connected-component census of R[a,b] over the fundamental region.
    Census(CensusCmd),
    /// Connectedness and smoothness verdicts for M(a,b), R_Gamma(a,b) and R[a,b].
    Classify(HiggsArgs),
}

#[derive(Args, Debug)]
struct TripleArgs {
    #[arg(long, allow_hyphen_values = true)]
    n1: i64,
    #[arg(long, allow_hyphen_values = true)]
    n2: i64,
    #[arg(long, allow_hyphen_values = true)]
    d1: i64,
    #[arg(long, allow_hyphen_values = true)]
    d2: i64,
}

#[derive(Args, Debug)]
struct TripleCmd {
    #[command(flatten)]
    t: TripleArgs,
    #[arg(long, allow_hyphen_values = true)]
    g: Option<i64>,
    /// Stability parameter, NUM or NUM/DEN.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    /// Subtriple type n1',n2',d1',d2' to test at --alpha. Repeatable.
    #[arg(long, allow_hyphen_values = true)]
    witness: Vec<SubtripleWitness>,
    /// Require strict inequality in witness checks.
    #[arg(long)]
    strict: bool,
    /// Subtriple type n1',n2',d1',d2' of a wall split; needs --g.
    #[arg(long, allow_hyphen_values = true)]
    split: Option<SubtripleWitness>,
}

#[derive(Args, Debug)]
struct WallsCmd {
    #[command(flatten)]
    t: TripleArgs,
    /// Search interval; defaults to the alpha range.
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true)]
    interval: Option<Vec<Rational>>,
    /// Treat the interval as closed.
    #[arg(long)]
    include_endpoints: bool,
    /// Used for the default cutoff when n1 = n2 and no interval is given.
    #[arg(long, allow_hyphen_values = true)]
    g: Option<i64>,
    /// Also report whether this alpha is critical.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<Rational>,
}

#[derive(Args, Debug)]
struct ChambersCmd {
    #[command(flatten)]
    t: TripleArgs,
    #[arg(long, allow_hyphen_values = true)]
    g: i64,
    /// Upper end used when n1 = n2.
    #[arg(long, allow_hyphen_values = true)]
    cutoff: Option<Rational>,
}

#[derive(Args, Debug)]
struct HiggsArgs {
    #[arg(long, allow_hyphen_values = true)]
    p: i64,
    #[arg(long, allow_hyphen_values = true)]
    q: i64,
    #[arg(long, allow_hyphen_values = true)]
    a: i64,
    #[arg(long, allow_hyphen_values = true)]
    b: i64,
    #[arg(long, allow_hyphen_values = true)]
    g: i64,
}

#[derive(Args, Debug)]
struct MorseCmd {
    /// Comma separated ranks of the chain.
    #[arg(long, allow_hyphen_values = true)]
    ranks: IntList,
    /// Comma separated degrees of the chain.
    #[arg(long, allow_hyphen_values = true)]
    degrees: IntList,
    #[arg(long, allow_hyphen_values = true)]
    g: i64,
    /// Report only the weight-2k piece of H^1.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
}

#[derive(Args, Debug)]
struct CensusCmd {
    #[arg(long, allow_hyphen_values = true)]
    p: i64,
    #[arg(long, allow_hyphen_values = true)]
    q: i64,
    #[arg(long, allow_hyphen_values = true)]
    g: i64,
}

/// Why a command failed.
#[derive(Debug)]
enum Failure {
    /// Malformed input; the message names the flag.
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match &e {
            Error::InvalidInput { what, reason } => {
                Failure::Usage(format!("invalid value for {}: {reason}", flag_for(what)))
            }
            Error::Parse { what, reason } => Failure::Usage(format!("invalid value for {}: {reason}", flag_for(what))),
            Error::ParseRational(_) => Failure::Usage(e.to_string()),
            Error::Domain(_) | Error::NeedsDual(_) | Error::TooLarge { .. } => Failure::Domain(e.to_string()),
        }
    }
}

fn flag_for(what: &str) -> String {
    match what {
        "genus" => "--g".into(),
        "chain" => "--ranks/--degrees".into(),
        "chain rank" => "--ranks".into(),
        "chain degree" => "--degrees".into(),
        "integer list" => "--ranks/--degrees".into(),
        "witness" | "n1'" | "n2'" => "--witness/--split".into(),
        w => format!("--{w}"),
    }
}

type CmdResult = Result<Report, Failure>;

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Output { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let result = match &cli.command {
        Command::Triple(c) => triple_cmd(c),
        Command::Walls(c) => walls_cmd(c),
        Command::Chambers(c) => chambers_cmd(c),
        Command::Higgs(c) => higgs_cmd(c),
        Command::Rigidity(c) => rigidity_cmd(c),
        Command::Morse(c) => morse_cmd(c),
        Command::Census(c) => census_cmd(c),
        Command::Classify(c) => classify_cmd(c),
    };
    match result {
        Ok(report) => {
            let stdout = if cli.json { render_json(&report) } else { render_table(&report) };
            Output { code: 0, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(m)) => Output { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Domain(m)) => Output { code: EXIT_DOMAIN, stdout: String::new(), stderr: format!("error: {m}\n") },
    }
}

pub fn render_json(r: &Report) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report values are plain JSON");
    s.push('\n');
    s
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library records serialize to JSON")
}

fn report(command: &str, inputs: Value, outputs: Map<String, Value>) -> Report {
    Report {
        command: command.into(),
        inputs,
        outputs: Value::Object(outputs),
        citations: BTreeMap::new(),
        warnings: vec![],
    }
}

fn genus(g: i64) -> Result<Genus, Failure> {
    Ok(Genus::new(g)?)
}

impl TripleArgs {
    fn build(&self) -> Result<TripleType, Failure> {
        Ok(TripleType::new(self.n1, self.n2, self.d1, self.d2)?)
    }
    fn echo(&self) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("n1".into(), json!(self.n1));
        m.insert("n2".into(), json!(self.n2));
        m.insert("d1".into(), json!(self.d1));
        m.insert("d2".into(), json!(self.d2));
        m
    }
}

impl HiggsArgs {
    fn build(&self) -> Result<HiggsType, Failure> {
        Ok(HiggsType::new(self.p, self.q, self.a, self.b, genus(self.g)?)?)
    }
    fn echo(&self) -> Value {
        json!({ "p": self.p, "q": self.q, "a": self.a, "b": self.b, "g": self.g })
    }
}

fn triple_cmd(c: &TripleCmd) -> CmdResult {
    let t = c.t.build()?;
    let g = c.g.map(genus).transpose()?;
    if !c.witness.is_empty() && c.alpha.is_none() {
        return Err(Failure::Usage("--witness requires --alpha".into()));
    }
    if c.split.is_some() && g.is_none() {
        return Err(Failure::Usage("--split requires --g".into()));
    }

    let mut inputs = c.t.echo();
    inputs.insert("g".into(), json!(c.g));
    inputs.insert("alpha".into(), to_value(&c.alpha));
    inputs.insert("witness".into(), to_value(&c.witness));
    inputs.insert("strict".into(), json!(c.strict));
    inputs.insert("split".into(), to_value(&c.split));

    let mut out = Map::new();
    let mut warnings = vec![];
    out.insert("type".into(), to_value(&t));
    out.insert("mu1".into(), to_value(&t.mu1()));
    out.insert("mu2".into(), to_value(&t.mu2()));
    out.insert("alpha_range".into(), to_value(&alpha_range(&t)));
    out.insert("dual".into(), to_value(&dual(&t)));
    match thresholds(&t) {
        Ok(th) => {
            out.insert("thresholds".into(), to_value(&th));
        }
        Err(e) => warnings.push(format!("thresholds not computed: {e}")),
    }
    if let Some(alpha) = &c.alpha {
        out.insert("alpha_slope".into(), to_value(&alpha_slope(&t, alpha)));
        out.insert("critical".into(), to_value(&is_critical(&t, alpha)));
        if let Some(m) = alpha.to_i64().filter(|_| alpha.is_integer()) {
            out.insert("genericity".into(), to_value(&integer_genericity(&t, m)));
        }
        if !c.witness.is_empty() {
            out.insert("witness_check".into(), to_value(&witness_check(&t, &c.witness, alpha, c.strict)));
        }
    }
    if let Some(g) = g {
        let w = t.as_witness();
        out.insert("chi_tt".into(), json!(chi(&w, &w, g)));
        out.insert("moduli_dim".into(), json!(dim_stable_moduli(&t, g)));
        let f = fibration_dims(&t, g);
        if f.printed_fiber_n != f.large_alpha_fiber_n {
            warnings.push(format!(
                "large-alpha fiber dimension: Riemann-Roch gives {}, the printed closed form gives {}",
                f.large_alpha_fiber_n, f.printed_fiber_n
            ));
        }
        if !f.hypotheses_hold {
            warnings.push("large-alpha fibration hypotheses do not hold for this type".into());
        }
        out.insert("fibration".into(), to_value(&f));
        if let Some(sub) = &c.split {
            let fd = flip_dims(&t, sub, g)?;
            if fd.degenerate_factor {
                warnings.push("split has a factor of rank 0 and nonzero degree; S~ counts are formal".into());
            }
            out.insert("flip".into(), to_value(&fd));
        }
    }
    let mut r = report("triple", Value::Object(inputs), out);
    r.warnings = warnings;
    Ok(r)
}

fn walls_cmd(c: &WallsCmd) -> CmdResult {
    let t = c.t.build()?;
    let range = alpha_range(&t);
    let mut warnings = vec![];
    let interval = match (&c.interval, &range.hi) {
        (Some(v), _) => {
            let (lo, hi) = (v[0].clone(), v[1].clone());
            if c.include_endpoints {
                Interval::closed(lo, hi)
            } else {
                Interval::open(lo, hi)
            }
        }
        (None, Upper::Finite(hi)) => {
            if range.lo >= *hi {
                warnings.push(format!("alpha range [{}, {hi}] has empty interior", range.lo));
            }
            Interval::new(range.lo.clone(), hi.clone().max(range.lo.clone()), c.include_endpoints, c.include_endpoints)
        }
        (None, Upper::Infinite) => {
            let g =
                c.g.ok_or_else(|| Failure::Usage("n1 = n2 needs --interval or --g for the default cutoff".into()))?;
            let hi = default_cutoff(&t, genus(g)?);
            Interval::new(range.lo.clone(), hi, c.include_endpoints, true)
        }
    };
    let walls = enumerate_walls(&t, &interval)?;

    let mut inputs = c.t.echo();
    inputs.insert("interval".into(), to_value(&c.interval));
    inputs.insert("include_endpoints".into(), json!(c.include_endpoints));
    inputs.insert("g".into(), json!(c.g));
    inputs.insert("alpha".into(), to_value(&c.alpha));

    let mut out = Map::new();
    out.insert("interval".into(), to_value(&interval));
    out.insert("count".into(), json!(walls.len()));
    out.insert("walls".into(), to_value(&walls));
    if let Some(alpha) = &c.alpha {
        out.insert("critical".into(), to_value(&is_critical(&t, alpha)));
    }
    let mut r = report("walls", Value::Object(inputs), out);
    r.warnings = warnings;
    Ok(r)
}

fn chambers_cmd(c: &ChambersCmd) -> CmdResult {
    let t = c.t.build()?;
    let g = genus(c.g)?;
    let rep = chambers(&t, g, c.cutoff.clone())?;
    let mut warnings = vec![];
    if rep.degenerate_range {
        warnings.push("alpha range has empty interior; no chambers".into());
    }
    let mut inputs = c.t.echo();
    inputs.insert("g".into(), json!(c.g));
    inputs.insert("cutoff".into(), to_value(&c.cutoff));
    let mut out = Map::new();
    out.insert("chambers".into(), to_value(&rep));
    let mut r = report("chambers", Value::Object(inputs), out);
    r.warnings = warnings;
    Ok(r)
}

fn higgs_cmd(c: &HiggsArgs) -> CmdResult {
    let h = c.build()?;
    let tol = toledo(&h);
    let mut out = Map::new();
    out.insert("toledo".into(), to_value(&tol));
    out.insert("vanishing_pattern".into(), json!(vanishing_pattern(&h).tag()));
    out.insert("minima".into(), to_value(&minima_triple_type(&h)));
    out.insert("mw_relations".into(), to_value(&mw_relations(&h)));
    out.insert("expected_dim".into(), json!(expected_dim(&h)));
    out.insert("coprime_smooth".into(), json!(coprime_smooth(&h)));
    let mut r = report("higgs", c.echo(), out);
    r.citations.insert("toledo.within_bound".into(), vec!["milnor-wood-bound".into()]);
    if !tol.within_bound {
        r.warnings.push(format!("|tau| = {} exceeds tau_M = {}: M(a,b) is empty", tol.tau.abs(), tol.tau_m));
    }
    Ok(r)
}

fn rigidity_cmd(c: &HiggsArgs) -> CmdResult {
    let h = c.build()?;
    let rig = rigidity(&h);
    let mut out = Map::new();
    out.insert("toledo".into(), to_value(&toledo(&h)));
    out.insert("expected_dim".into(), json!(expected_dim(&h)));
    let applies = rig.applies;
    let warnings = rig.warnings.clone();
    out.insert("rigidity".into(), to_value(&rig));
    let mut r = report("rigidity", c.echo(), out);
    if applies {
        r.citations.insert("rigidity".into(), vec!["maximal-toledo-rigidity".into()]);
    } else {
        r.warnings.push("rigidity applies only for p != q at |tau| = tau_M".into());
    }
    r.warnings.extend(warnings);
    Ok(r)
}

fn morse_cmd(c: &MorseCmd) -> CmdResult {
    let chain = HodgeChain::new(c.ranks.0.clone(), c.degrees.0.clone())?;
    let g = genus(c.g)?;
    let m = chain.len() as i64;
    let profiles: Vec<_> = (-(m - 1)..m).map(|k| uk_profile(&chain, k)).collect();
    let weights: Vec<i64> = match c.k {
        Some(k) => vec![k],
        None => (0..m).collect(),
    };
    let mut h1 = Vec::new();
    for k in weights {
        h1.push(json!({ "k": k, "dim": dim_h1_weight(&chain, k, g)? }));
    }
    let idx = morse_index(&chain, g);
    let mut out = Map::new();
    out.insert("chain".into(), to_value(&chain));
    out.insert("u_k".into(), to_value(&profiles));
    out.insert("h1_weights".into(), Value::Array(h1));
    out.insert("morse_index".into(), to_value(&idx));
    let inputs = json!({ "ranks": c.ranks.0, "degrees": c.degrees.0, "g": c.g, "k": c.k });
    let mut r = report("morse", inputs, out);
    r.warnings.extend(idx.advisory);
    Ok(r)
}

fn census_cmd(c: &CensusCmd) -> CmdResult {
    let g = genus(c.g)?;
    let region = enumerate_region(c.p, c.q, g)?;
    let mut out = Map::new();
    out.insert("count".into(), to_value(&region.count));
    out.insert("region".into(), to_value(&region));
    out.insert("tau_quotient".into(), to_value(&tau_quotient_facts(c.p, c.q)?));
    out.insert("partition".into(), to_value(&coprime_partition(c.p, c.q, g)?));
    let mut r = report("census", json!({ "p": c.p, "q": c.q, "g": c.g }), out);
    r.citations.insert("region".into(), vec!["milnor-wood-bound".into(), "projective-quotient-fibration".into()]);
    Ok(r)
}

fn classify_cmd(c: &HiggsArgs) -> CmdResult {
    let h = c.build()?;
    let v = classify(&h);
    let mut r = report("classify", c.echo(), Map::new());
    let spaces: [(&str, &SpaceVerdict); 3] =
        [("higgs", &v.higgs), ("r_gamma", &v.r_gamma), ("r_projective", &v.r_projective)];
    for (prefix, s) in spaces {
        for (field, tags) in &s.citations {
            r.citations.insert(format!("{prefix}.{field}"), tags.iter().map(|t| t.to_string()).collect());
        }
    }
    if let Some(rd) = &v.rigidity_data {
        r.warnings.extend(rd.warnings.iter().cloned());
    }
    r.outputs = json!({ "verdict": to_value(&v) });
    Ok(r)
}

/// Two column rendering of a report: dotted paths on the left.
pub fn render_table(r: &Report) -> String {
    let mut rows: Vec<(String, String)> = vec![("command".into(), r.command.clone())];
    flatten("inputs", &r.inputs, &mut rows);
    flatten("outputs", &r.outputs, &mut rows);
    for (k, v) in &r.citations {
        rows.push((format!("citations.{k}"), v.join(", ")));
    }
    for (i, w) in r.warnings.iter().enumerate() {
        rows.push((format!("warning[{i}]"), w.clone()));
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// Small flat records, such as class pairs, as a single `{k: v, ...}` cell.
fn compact(v: &Value) -> Option<String> {
    let m = v.as_object().filter(|m| !m.is_empty() && m.len() <= 4)?;
    let cells: Option<Vec<String>> = m.iter().map(|(k, x)| scalar(x).map(|s| format!("{k}: {s}"))).collect();
    Some(format!("{{{}}}", cells?.join(", ")))
}

fn flatten(path: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            if m.is_empty() {
                rows.push((path.into(), "{}".into()));
            }
            for (k, x) in m {
                flatten(&format!("{path}.{k}"), x, rows);
            }
        }
        Value::Array(a) => {
            // short lists of scalars stay on one line
            let scalars: Option<Vec<String>> = a.iter().map(scalar).collect();
            match scalars {
                Some(s) => rows.push((path.into(), format!("[{}]", s.join(", ")))),
                None => {
                    for (i, x) in a.iter().enumerate() {
                        match compact(x) {
                            Some(line) => rows.push((format!("{path}[{i}]"), line)),
                            None => flatten(&format!("{path}[{i}]"), x, rows),
                        }
                    }
                }
            }
        }
        other => rows.push((path.into(), scalar(other).unwrap_or_default())),
    }
}
