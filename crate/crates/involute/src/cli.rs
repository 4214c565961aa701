//! The `involute` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a law or condition fails
//! (with a witness), 2 for usage errors and malformed input.

use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use involute_core::gns::{check_condition_a, check_condition_b, ip2state, state2ip, GnsError};
use involute_core::lawlab::{self, LawlabError};
use involute_core::multiset::{self, Multiset};
use involute_core::report::{Checker, Report};
use involute_core::staralg::{check_lemma52, check_star_laws, StarAlgebra};
use involute_core::words::{
    cyclic_group_table, parse_word, symmetric_group_table, InvolutiveMonoid, IntAdd, Mode, MultiplicativeMonoid,
    SignedWord, TableMonoid,
};
use involute_core::scalars::{Gf9, Gf9Field};
use involute_core::rng_from_seed;
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::json::{self, FormatError, JsonScalar, Key};
use crate::with_scalars;

#[derive(Debug, Parser)]
#[command(name = "involute", version, about = "Exact involutive algebra: law checks, signed words, star-algebras and the state/inner-product correspondence")]
pub struct Cli {
    /// Seed for every sampled check.
    #[arg(long, global = true, env = "INVOLUTE_SEED", default_value_t = 0)]
    seed: u64,
    /// Samples per sampled law.
    #[arg(long, global = true, default_value_t = 1000)]
    budget: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run law suites (all of them by default).
    Laws {
        /// Suite names, repeated or comma separated.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        /// Only the named instance.
        #[arg(long)]
        instance: Option<String>,
        /// List suites and instances instead of running them.
        #[arg(long)]
        list: bool,
    },
    /// Signed words: `a * ~b`, `~(a * b)`, `1`.
    Word {
        #[command(subcommand)]
        action: WordAction,
    },
    /// Star-algebras given as JSON.
    Alg {
        #[command(subcommand)]
        action: AlgAction,
    },
    /// Hermitian functionals and sesquilinear forms.
    Gns {
        #[command(subcommand)]
        action: GnsAction,
    },
    /// The multiset monad. Multisets are JSON, inline or in a file.
    Mset {
        /// bool, rat, gauss or gf9; defaults to the input's own tag.
        #[arg(long, global = true)]
        scalars: Option<String>,
        #[command(subcommand)]
        action: MsetAction,
    },
}

#[derive(Debug, Subcommand)]
enum WordAction {
    /// Parse and print in normal form.
    Normalize {
        expr: String,
        #[arg(long, default_value = "reversing", value_parser = parse_mode)]
        mode: Mode,
    },
    /// Apply the involution.
    Involve {
        expr: String,
        #[arg(long, default_value = "reversing", value_parser = parse_mode)]
        mode: Mode,
    },
    /// Evaluate in a target monoid.
    Eval {
        expr: String,
        #[arg(long, default_value = "reversing", value_parser = parse_mode)]
        mode: Mode,
        /// int-add, z2, s3 or gf9-mul.
        #[arg(long)]
        target: String,
        /// Symbol values, e.g. `a=2,b=5`.
        #[arg(long, default_value = "")]
        map: String,
    },
}

#[derive(Debug, Subcommand)]
enum AlgAction {
    /// `x·y`.
    Mul {
        algebra: String,
        /// A basis name, a coordinate array or an object of coefficients.
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// `x⁻`.
    Involve {
        algebra: String,
        #[arg(long)]
        x: String,
    },
    /// Check the algebra laws.
    Check { algebra: String },
}

#[derive(Debug, Subcommand)]
enum GnsAction {
    /// Gram of `⟨a|b⟩ = f(a⁻·b)` for a hermitian functional.
    Gram { algebra: String, input: String },
    /// The functional `f(a) = ⟨u|a⟩` of a form satisfying both conditions.
    State { algebra: String, input: String },
    /// Report on condition (a) for a form.
    Checka { algebra: String, input: String },
    /// Report on condition (b) for a form.
    Checkb { algebra: String, input: String },
    /// Both round trips from a functional or a form.
    Roundtrip { algebra: String, input: String },
}

#[derive(Debug, Subcommand)]
enum MsetAction {
    /// Conjugate every coefficient.
    Nu { input: String },
    /// The singleton `1·key`.
    Eta { key: String },
    /// Rename keys, e.g. `--map x=z,y=z`.
    Map {
        input: String,
        #[arg(long)]
        map: String,
    },
    /// Flatten a multiset of multisets.
    Mu { input: String },
    /// `φ ⊗ ψ` with pair keys.
    Dst { left: String, right: String },
}

fn parse_mode(text: &str) -> Result<Mode, String> {
    Mode::parse(text).ok_or_else(|| format!("unknown mode {text:?}; expected reversing or non-reversing"))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Violation(String),
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Usage(e.0)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("output: {e}"))
    }
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

type CliResult = Result<i32, CliError>;

struct Ctx<'a> {
    seed: u64,
    budget: usize,
    format: Format,
    out: &'a mut dyn Write,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut ctx = Ctx { seed: cli.seed, budget: cli.budget, format: cli.format, out };
    match dispatch(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn dispatch(command: Command, ctx: &mut Ctx) -> CliResult {
    match command {
        Command::Laws { suite, instance, list } => laws(&suite, instance.as_deref(), list, ctx),
        Command::Word { action } => word(action, ctx),
        Command::Alg { action } => alg(action, ctx),
        Command::Gns { action } => gns(action, ctx),
        Command::Mset { scalars, action } => mset(scalars.as_deref(), action, ctx),
    }
}

/// Inline JSON when the argument starts with `{` or `[`, otherwise a path.
fn load(arg: &str) -> Result<Value, CliError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(json::parse_text(arg, "inline JSON")?);
    }
    let text = std::fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("{arg}: {e}")))?;
    Ok(json::parse_text(&text, arg)?)
}

fn stem(arg: &str) -> String {
    Path::new(arg).file_stem().and_then(|s| s.to_str()).unwrap_or("algebra").to_string()
}

fn emit_json(ctx: &mut Ctx, v: &Value) -> Result<(), CliError> {
    let text = match ctx.format {
        Format::Json => serde_json::to_string(v),
        Format::Text => serde_json::to_string_pretty(v),
    }
    .expect("serialisable");
    writeln!(ctx.out, "{text}")?;
    Ok(())
}

/// Writes a report and returns 0 if it passed, 1 otherwise.
fn emit_report(ctx: &mut Ctx, report: &Report) -> CliResult {
    for e in report.entries() {
        match ctx.format {
            Format::Json => writeln!(ctx.out, "{}", json::report_line(e))?,
            Format::Text => {
                let verdict = if e.verdict.is_pass() { "PASS" } else { "FAIL" };
                write!(ctx.out, "{verdict} {} {} {} ({} cases)", e.suite, e.instance, e.law, e.checked)?;
                match &e.witness {
                    Some(w) if !e.verdict.is_pass() => writeln!(ctx.out, ": {w}")?,
                    _ => writeln!(ctx.out)?,
                }
            }
        }
    }
    if ctx.format == Format::Text {
        let failed = report.failures().count();
        writeln!(ctx.out, "{} laws, {failed} failed", report.len())?;
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn laws(suites: &[String], instance: Option<&str>, list: bool, ctx: &mut Ctx) -> CliResult {
    let names: Vec<&str> = suites.iter().map(String::as_str).collect();
    if list {
        if let Some(bad) = names.iter().find(|n| !lawlab::SUITES.contains(n)) {
            return Err(CliError::Usage(LawlabError::UnknownSuite((*bad).into()).to_string()));
        }
        for e in lawlab::registry() {
            if names.is_empty() || names.contains(&e.suite) {
                writeln!(ctx.out, "{} {}", e.suite, e.instance)?;
            }
        }
        return Ok(0);
    }
    let report =
        lawlab::run(&names, instance, ctx.seed, ctx.budget).map_err(|e| CliError::Usage(e.to_string()))?;
    emit_report(ctx, &report)
}

fn word(action: WordAction, ctx: &mut Ctx) -> CliResult {
    let parse = |expr: &str, mode: Mode| {
        parse_word(expr, None, mode).map_err(|e| CliError::Usage(format!("at byte {}: {}", e.pos, e.message)))
    };
    match action {
        WordAction::Normalize { expr, mode } => emit_word(ctx, &parse(&expr, mode)?),
        WordAction::Involve { expr, mode } => emit_word(ctx, &parse(&expr, mode)?.involve(mode)),
        WordAction::Eval { expr, mode, target, map } => {
            let w = parse(&expr, mode)?;
            let pairs = parse_assignments(&map)?;
            let value = match target.as_str() {
                "int-add" => {
                    let v = evaluate(&w, &IntAdd, mode, &pairs, |t| t.parse::<BigInt>().ok())?;
                    match i64::try_from(&v) {
                        Ok(small) if ctx.format == Format::Json => json!(small),
                        _ => Value::String(v.to_string()),
                    }
                }
                "z2" | "s3" => {
                    let table = if target == "z2" { cyclic_group_table(2) } else { symmetric_group_table(3) };
                    let order = table.len();
                    let m = TableMonoid::from_group_table(table);
                    let v = evaluate(&w, &m, mode, &pairs, |t| t.parse::<usize>().ok().filter(|&g| g < order))?;
                    json!(v)
                }
                "gf9-mul" => {
                    let v = evaluate(&w, &MultiplicativeMonoid(Gf9Field), mode, &pairs, parse_gf9)?;
                    match ctx.format {
                        Format::Json => Gf9Field.to_json(&v),
                        Format::Text => Value::String(v.to_string()),
                    }
                }
                other => {
                    return Err(CliError::Usage(format!("unknown target {other:?}; expected int-add, z2, s3 or gf9-mul")))
                }
            };
            match (&value, ctx.format) {
                (Value::String(s), Format::Text) => writeln!(ctx.out, "{s}")?,
                _ => writeln!(ctx.out, "{value}")?,
            }
            Ok(0)
        }
    }
}

fn emit_word(ctx: &mut Ctx, w: &SignedWord) -> CliResult {
    match ctx.format {
        Format::Text => writeln!(ctx.out, "{w}")?,
        Format::Json => writeln!(ctx.out, "{}", json::word_json(w))?,
    }
    Ok(0)
}

fn parse_assignments(text: &str) -> Result<Vec<(String, String)>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| match p.split_once('=') {
            Some((k, v)) if !k.trim().is_empty() => Ok((k.trim().to_string(), v.trim().to_string())),
            _ => Err(CliError::Usage(format!("expected key=value, found {p:?}"))),
        })
        .collect()
}

fn evaluate<M: InvolutiveMonoid>(
    w: &SignedWord,
    target: &M,
    mode: Mode,
    pairs: &[(String, String)],
    parse: impl Fn(&str) -> Option<M::Elem>,
) -> Result<M::Elem, CliError> {
    let mut values = Vec::new();
    for (k, v) in pairs {
        let x = parse(v).ok_or_else(|| CliError::Usage(format!("bad value {v:?} for {k}")))?;
        values.push((k.clone(), x));
    }
    if let Some((k, _)) = values.iter().find(|(k, _)| w.alphabet().index_of(k).is_none()) {
        return Err(CliError::Usage(format!("symbol {k:?} does not occur in the word")));
    }
    w.extend(|sym| values.iter().find(|(k, _)| k == sym).map(|(_, v)| v.clone()), target, mode)
        .map_err(|e| CliError::Usage(e.to_string()))
}

/// `a`, `bi`, `a+bi`, `i`, `a+i` with digits 0 to 2.
fn parse_gf9(text: &str) -> Option<Gf9> {
    let digit = |t: &str| -> Option<i64> {
        match t {
            "" => Some(1),
            "0" | "1" | "2" => t.parse().ok(),
            _ => None,
        }
    };
    let (re, im) = match text.split_once('+') {
        Some((r, i)) => (r, Some(i)),
        None if text.ends_with('i') => ("0", Some(text)),
        None => (text, None),
    };
    let re = match re {
        "" => return None,
        r => digit(r)?,
    };
    let im = match im {
        None => 0,
        Some(i) => digit(i.strip_suffix('i')?)?,
    };
    Some(Gf9::new(re, im))
}

fn load_algebra<S: JsonScalar>(s: &S, v: &Value, arg: &str) -> Result<StarAlgebra<S>, CliError> {
    Ok(json::algebra(s, v, &stem(arg))?)
}

/// A basis name, a coordinate array, or an object of coefficients by name.
fn element<S: JsonScalar>(alg: &StarAlgebra<S>, text: &str) -> Result<Vec<S::Elem>, CliError> {
    let s = alg.scalars();
    let names = alg.module().basis();
    if let Some(i) = alg.module().index_of(text) {
        return Ok(alg.basis_vector(i));
    }
    let t = text.trim_start();
    if !t.starts_with('{') && !t.starts_with('[') && !Path::new(text).is_file() {
        return Err(CliError::Usage(format!("unknown basis element {text:?}; expected one of {names:?}")));
    }
    let v = load(text)?;
    match &v {
        Value::Array(_) => Ok(json::vector(s, &v, alg.dim(), "element")?),
        Value::Object(o) => {
            let mut coords = vec![s.zero(); alg.dim()];
            for (k, c) in o {
                let i = alg.module().index_of(k).ok_or_else(|| CliError::Usage(format!("unknown basis element {k:?}")))?;
                coords[i] = s.add(&coords[i], &s.from_json(c)?);
            }
            Ok(coords)
        }
        _ => Err(CliError::Usage(format!("expected one of {names:?}, an array or an object"))),
    }
}

fn show_coeff(text: String) -> String {
    let bare = text.strip_prefix('-').unwrap_or(&text);
    if bare.contains(['+', '-', '/']) { format!("({text})") } else { text }
}

fn emit_element<S: JsonScalar>(ctx: &mut Ctx, alg: &StarAlgebra<S>, x: &[S::Elem]) -> CliResult {
    let s = alg.scalars();
    let names = alg.module().basis();
    let terms: Vec<(&String, &S::Elem)> = names.iter().zip(x).filter(|(_, c)| !s.is_zero(c)).collect();
    match ctx.format {
        Format::Json => {
            let obj: Map<String, Value> = terms.iter().map(|(n, c)| ((*n).clone(), s.to_json(c))).collect();
            writeln!(ctx.out, "{}", Value::Object(obj))?;
        }
        Format::Text => {
            let parts: Vec<String> = terms
                .iter()
                .map(|(n, c)| if **c == s.one() { (*n).clone() } else { format!("{}*{n}", show_coeff(c.to_string())) })
                .collect();
            writeln!(ctx.out, "{}", if parts.is_empty() { "0".to_string() } else { parts.join(" + ") })?;
        }
    }
    Ok(0)
}

fn alg(action: AlgAction, ctx: &mut Ctx) -> CliResult {
    let path = match &action {
        AlgAction::Mul { algebra, .. } | AlgAction::Involve { algebra, .. } | AlgAction::Check { algebra } => {
            algebra.clone()
        }
    };
    let v = load(&path)?;
    let tag = json::algebra_scalars(&v)?;
    with_scalars!(tag.as_str(), s => alg_with(&s, &v, &path, action, ctx))
}

fn alg_with<S: JsonScalar>(s: &S, v: &Value, path: &str, action: AlgAction, ctx: &mut Ctx) -> CliResult {
    let a = load_algebra(s, v, path)?;
    match action {
        AlgAction::Mul { x, y, .. } => {
            let (x, y) = (element(&a, &x)?, element(&a, &y)?);
            emit_element(ctx, &a, &a.mul(&x, &y))
        }
        AlgAction::Involve { x, .. } => {
            let x = element(&a, &x)?;
            emit_element(ctx, &a, &a.involve(&x))
        }
        AlgAction::Check { .. } => {
            let mut rng = rng_from_seed(ctx.seed);
            let mut report = check_star_laws(&a, true, ctx.budget, &mut rng);
            if a.mode() == Mode::NonReversing {
                report.extend(check_lemma52(&a).map_err(|e| CliError::Usage(e.to_string()))?.into_report());
            }
            emit_report(ctx, &report)
        }
    }
}

fn gns_error(e: GnsError) -> CliError {
    match e {
        GnsError::NotHermitian { .. } | GnsError::ConditionA { .. } | GnsError::ConditionB { .. } => {
            CliError::Violation(e.to_string())
        }
        _ => CliError::Usage(e.to_string()),
    }
}

fn gns(action: GnsAction, ctx: &mut Ctx) -> CliResult {
    let (path, input) = match &action {
        GnsAction::Gram { algebra, input }
        | GnsAction::State { algebra, input }
        | GnsAction::Checka { algebra, input }
        | GnsAction::Checkb { algebra, input }
        | GnsAction::Roundtrip { algebra, input } => (algebra.clone(), input.clone()),
    };
    let (v, inp) = (load(&path)?, load(&input)?);
    let tag = json::algebra_scalars(&v)?;
    with_scalars!(tag.as_str(), s => gns_with(&s, &v, &path, &inp, action, ctx))
}

fn gns_with<S: JsonScalar>(s: &S, v: &Value, path: &str, input: &Value, action: GnsAction, ctx: &mut Ctx) -> CliResult {
    let alg = load_algebra(s, v, path)?;
    let mut rng = rng_from_seed(ctx.seed);
    let laws = check_star_laws(&alg, true, ctx.budget, &mut rng);
    if let Some(f) = laws.failures().next() {
        return Err(CliError::Violation(format!(
            "{} is not an involutive algebra: {} fails at {}",
            alg.name(),
            f.law,
            f.witness.clone().unwrap_or_default()
        )));
    }
    let alg = Arc::new(alg);
    match action {
        GnsAction::Gram { .. } => {
            let f = json::functional(&alg, input)?;
            let p = state2ip(&f).map_err(gns_error)?;
            emit_json(ctx, &json::form_json(&p))?;
            Ok(0)
        }
        GnsAction::State { .. } => {
            let p = json::form(&alg, input)?;
            let f = ip2state(&p).map_err(gns_error)?;
            emit_json(ctx, &json::functional_json(&f))?;
            Ok(0)
        }
        GnsAction::Checka { .. } => {
            let p = json::form(&alg, input)?;
            emit_report(ctx, &check_condition_a(&p))
        }
        GnsAction::Checkb { .. } => {
            let p = json::form(&alg, input)?;
            emit_report(ctx, &check_condition_b(&p))
        }
        GnsAction::Roundtrip { .. } => {
            let mut c = Checker::new("gns", alg.name());
            if input.get("values").is_some() {
                let f = json::functional(&alg, input)?;
                let p = state2ip(&f).map_err(gns_error)?;
                let back = ip2state(&p).map_err(gns_error)?;
                c.check("functional_roundtrip", back.values() == f.values(), || {
                    format!("{} became {}", json::functional_json(&f), json::functional_json(&back))
                });
                let again = state2ip(&back).map_err(gns_error)?;
                c.check("form_roundtrip", again.gram() == p.gram(), || {
                    format!("{} became {}", json::form_json(&p), json::form_json(&again))
                });
            } else {
                let p = json::form(&alg, input)?;
                let f = ip2state(&p).map_err(gns_error)?;
                let back = state2ip(&f).map_err(gns_error)?;
                c.check("form_roundtrip", back.gram() == p.gram(), || {
                    format!("{} became {}", json::form_json(&p), json::form_json(&back))
                });
                let again = ip2state(&back).map_err(gns_error)?;
                c.check("functional_roundtrip", again.values() == f.values(), || {
                    format!("{} became {}", json::functional_json(&f), json::functional_json(&again))
                });
            }
            emit_report(ctx, &c.finish())
        }
    }
}

fn mset(scalars: Option<&str>, action: MsetAction, ctx: &mut Ctx) -> CliResult {
    let inputs: Vec<Value> = match &action {
        MsetAction::Nu { input } | MsetAction::Map { input, .. } | MsetAction::Mu { input } => vec![load(input)?],
        MsetAction::Dst { left, right } => vec![load(left)?, load(right)?],
        MsetAction::Eta { .. } => Vec::new(),
    };
    let mut tags: Vec<&str> = inputs.iter().filter_map(json::multiset_scalars).collect();
    tags.extend(scalars);
    tags.dedup();
    let tag = match tags.as_slice() {
        [] => return Err(CliError::Usage("no scalars given; pass --scalars or use the {\"scalars\", \"entries\"} form".into())),
        [t] => t.to_string(),
        _ => return Err(CliError::Usage(format!("scalar instances disagree: {}", tags.join(" vs ")))),
    };
    with_scalars!(tag.as_str(), s => mset_with(&s, &inputs, action, ctx))
}

fn name_key(v: &Value) -> json::Result<Key> {
    Key::from_json(v)
}

fn emit_multiset<S: JsonScalar>(ctx: &mut Ctx, s: &S, m: &Multiset<Key, S::Elem>) -> CliResult {
    match ctx.format {
        Format::Json => writeln!(ctx.out, "{}", json::multiset_json(s, m, &Key::to_json))?,
        Format::Text => {
            let parts: Vec<String> = m
                .iter()
                .map(|(k, c)| if *c == s.one() { k.to_string() } else { format!("{}*{k}", show_coeff(c.to_string())) })
                .collect();
            writeln!(ctx.out, "{}", if parts.is_empty() { "0".to_string() } else { parts.join(" + ") })?;
        }
    }
    Ok(0)
}

fn mset_with<S: JsonScalar>(s: &S, inputs: &[Value], action: MsetAction, ctx: &mut Ctx) -> CliResult {
    let level1 = |v: &Value| json::multiset(s, v, &name_key);
    let result = match action {
        MsetAction::Nu { .. } => multiset::nu(s, &level1(&inputs[0])?),
        MsetAction::Eta { key } => multiset::eta(s, Key::Name(key)),
        MsetAction::Map { map, .. } => {
            let pairs = parse_assignments(&map)?;
            let rename = |k: &Key| match k {
                Key::Name(n) => pairs.iter().find(|(from, _)| from == n).map_or_else(|| k.clone(), |(_, to)| Key::Name(to.clone())),
                Key::Tuple(_) => k.clone(),
            };
            multiset::map(s, rename, &level1(&inputs[0])?)
        }
        MsetAction::Mu { .. } => {
            let inner = |v: &Value| json::multiset(s, v, &name_key);
            let outer = json::multiset(s, &inputs[0], &inner)?;
            multiset::mu(s, &outer)
        }
        MsetAction::Dst { .. } => {
            let d = multiset::dst(s, &level1(&inputs[0])?, &level1(&inputs[1])?);
            multiset::map(s, |(a, b): &(Key, Key)| Key::Tuple(vec![a.clone(), b.clone()]), &d)
        }
    };
    emit_multiset(ctx, s, &result)
}
