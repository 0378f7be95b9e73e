//! The `alglen` command line.
//!
//! Exit codes: 0 success, 1 refuted identity / false claim / set that does
//! not generate, 2 input error, 3 evaluation budget exceeded.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Algebra, Fingerprint};
use crate::classify::{length_upper_bound, BoundEvidence, ClassifyConfig, Verdict};
use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::families::{Family, FamilySpec};
use crate::filtration::{filtrate, oracle_filtrate, GenSet, ORACLE_WORD_LIMIT};
use crate::identities::{builtin, check_r_ended, check_suite, IdentitySuite, IdentityVerdict, MultilinearIdentity};
use crate::search::{search_length, SearchConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "alglen", version, about = "Lengths of finite-dimensional algebras")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Maximum number of basis-tuple evaluations per identity check.
    #[arg(long, global = true, env = "ALGLEN_BUDGET")]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Show dimension, unit and the nonzero products.
    Info { file: PathBuf },
    /// Check a polynomial identity or the r-ended property.
    Check(CheckArgs),
    /// Length, characteristic sequence and irreducible basis of a set.
    Length(LengthArgs),
    /// Sliding/mixing classification and the best length bound.
    Classify(ClassifyArgs),
    /// Search generating sets for a lower bound on the length.
    Search(SearchArgs),
    /// Write a named example algebra as JSON.
    Example(ExampleArgs),
    /// Compare the filtration against brute-force word enumeration.
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("what").required(true).args(["identity", "identity_file", "r_ended"])))]
struct CheckArgs {
    file: PathBuf,
    /// One of: associative, commutative, anticommutative, lie, leibniz,
    /// novikov, zinbiel, vinberg, valya.
    #[arg(long)]
    identity: Option<String>,
    #[arg(long)]
    identity_file: Option<PathBuf>,
    #[arg(long, value_name = "R")]
    r_ended: Option<usize>,
}

#[derive(Args, Debug)]
struct LengthArgs {
    file: PathBuf,
    /// `1,0; 0,1`, `@basis` or `@e1,e3`.
    #[arg(long)]
    set: String,
    /// Exit with 1 unless the length equals this value.
    #[arg(long)]
    claim: Option<usize>,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 0)]
    random_triples: usize,
    #[arg(long, default_value_t = crate::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args, Debug)]
struct SearchArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 2)]
    max_subset: usize,
    #[arg(long, default_value_t = 0)]
    random: usize,
    /// Random set sizes, `a..b` or `a`.
    #[arg(long, default_value = "1..2", value_parser = parse_size_range)]
    set_size: (usize, usize),
    #[arg(long, default_value_t = crate::DEFAULT_SEED)]
    seed: u64,
    /// File of generating-set specs: a JSON list of strings, or one per line.
    #[arg(long)]
    candidates: Option<PathBuf>,
    /// Derive an upper bound so the result can be declared exact.
    #[arg(long)]
    with_bounds: bool,
}

#[derive(Args, Debug)]
struct ExampleArgs {
    family: String,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// `rational` or a prime modulus.
    #[arg(long, default_value = "rational")]
    field: String,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    file: PathBuf,
    #[arg(long)]
    set: String,
    #[arg(long)]
    kmax: usize,
}

fn parse_size_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid size {t:?}"));
    match s.split_once("..") {
        Some((a, b)) => Ok((parse(a)?, parse(b.trim_start_matches('='))?)),
        None => {
            let n = parse(s)?;
            Ok((n, n))
        }
    }
}

/// What a subcommand produced.
struct Outcome {
    status: i32,
    algebra: Option<Fingerprint>,
    result: Value,
    text: String,
}

#[derive(Serialize)]
struct Report<'a> {
    command: &'a [String],
    #[serde(skip_serializing_if = "Option::is_none")]
    algebra: Option<&'a Fingerprint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<&'a Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    exit_status: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::NotGenerating { .. } => EXIT_REFUTED,
        _ => EXIT_INPUT,
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return EXIT_OK;
                }
                _ => EXIT_INPUT,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let budget = cli.budget.unwrap_or(crate::identities::DEFAULT_BUDGET);
    let outcome = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli.command, budget, cli.json)),
            Err(e) => Err(Error::InvalidParameter(format!("thread pool: {e}"))),
        },
        None => dispatch(&cli.command, budget, cli.json),
    };
    match outcome {
        Ok(o) => {
            if cli.json {
                let report = Report {
                    command: &echo,
                    algebra: o.algebra.as_ref(),
                    result: Some(&o.result),
                    error: None,
                    exit_status: o.status,
                };
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report).expect("reports serialize")
                );
            } else {
                let _ = write!(out, "{}", o.text);
            }
            o.status
        }
        Err(e) => {
            let status = exit_code(&e);
            if cli.json {
                let report = Report {
                    command: &echo,
                    algebra: None,
                    result: None,
                    error: Some(e.to_string()),
                    exit_status: status,
                };
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report).expect("reports serialize")
                );
            }
            let _ = writeln!(err, "error: {e}");
            status
        }
    }
}

fn load(path: &Path) -> Result<Algebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    Algebra::from_json(&text)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn dispatch(command: &Command, budget: u64, json: bool) -> Result<Outcome> {
    match command {
        Command::Info { file } => info(&load(file)?),
        Command::Check(a) => check(a, budget),
        Command::Length(a) => length(a),
        Command::Classify(a) => classify_cmd(a, budget),
        Command::Search(a) => search(a, budget),
        Command::Example(a) => example(a, json),
        Command::Oracle(a) => oracle(a),
    }
}

fn header(algebra: &Algebra) -> String {
    let f = algebra.fingerprint();
    let unit = match &f.unit {
        Some(u) => format!("unital, 1 = {u}"),
        None => "non-unital".into(),
    };
    format!("algebra {} over {}, dim {}, {}\n", f.name, f.field, f.dim, unit)
}

fn combination(algebra: &Algebra, terms: &[(usize, crate::exactla::Scalar)]) -> String {
    let mut s = String::new();
    for (k, c) in terms {
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, text),
        };
        s.push_str(match (s.is_empty(), neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        if mag != "1" {
            s.push_str(&mag);
            s.push(' ');
        }
        s.push_str(&algebra.basis_names()[*k]);
    }
    s
}

fn info(algebra: &Algebra) -> Result<Outcome> {
    let mut text = header(algebra);
    let names = algebra.basis_names();
    writeln!(text, "basis: {}", names.join(", ")).unwrap();
    writeln!(text, "nonzero products:").unwrap();
    let d = algebra.dim();
    for i in 0..d {
        for j in 0..d {
            let p = algebra.product(i, j);
            if !p.is_empty() {
                writeln!(text, "  {}*{} = {}", names[i], names[j], combination(algebra, p)).unwrap();
            }
        }
    }
    let file = algebra.to_file();
    Ok(Outcome {
        status: EXIT_OK,
        algebra: Some(algebra.fingerprint()),
        result: json!({ "basis": file.basis, "products": file.products }),
        text,
    })
}

fn verdict_text(algebra: &Algebra, verdict: &IdentityVerdict) -> String {
    match verdict {
        IdentityVerdict::Holds => "holds on every basis tuple\n".into(),
        IdentityVerdict::Counterexample {
            identity,
            tuple,
            defect,
        } => {
            let names: Vec<&str> = tuple.iter().map(|&i| algebra.basis_names()[i].as_str()).collect();
            let args = if identity == "alternating" {
                format!("x = {}", names.join(" + "))
            } else {
                format!("({})", names.join(", "))
            };
            format!("counterexample to {identity} at {args}: defect {defect}\n")
        }
    }
}

fn check(a: &CheckArgs, budget: u64) -> Result<Outcome> {
    let algebra = load(&a.file)?;
    let (label, verdict) = if let Some(name) = &a.identity {
        (name.clone(), check_suite(&algebra, &builtin(name)?, budget)?)
    } else if let Some(path) = &a.identity_file {
        let id = MultilinearIdentity::from_json(&std::fs::read_to_string(path)?)?;
        (
            id.name().to_string(),
            check_suite(&algebra, &IdentitySuite::single(id), budget)?,
        )
    } else {
        let r = a.r_ended.expect("clap requires one option");
        (format!("{r}-ended"), check_r_ended(&algebra, r, budget)?)
    };
    let status = if verdict.holds() { EXIT_OK } else { EXIT_REFUTED };
    let text = format!("{}{label}: {}", header(&algebra), verdict_text(&algebra, &verdict));
    Ok(Outcome {
        status,
        algebra: Some(algebra.fingerprint()),
        result: json!({ "check": label, "outcome": to_value(&verdict) }),
        text,
    })
}

fn generator_legend(set: &GenSet) -> Vec<String> {
    (0..set.len())
        .map(|i| match set.label(i) {
            Some(l) => format!("x{} = {l}", i + 1),
            None => format!("x{} = {}", i + 1, set.vectors()[i]),
        })
        .collect()
}

fn length(a: &LengthArgs) -> Result<Outcome> {
    let algebra = load(&a.file)?;
    let set = GenSet::parse(&algebra, &a.set)?;
    let trace = filtrate(&algebra, &set)?;
    let seq = trace.sequence();
    let mut text = header(&algebra);
    writeln!(text, "set: {}", set.describe()).unwrap();
    writeln!(text, "generators: {}", generator_legend(&set).join(", ")).unwrap();
    let dims: Vec<String> = trace.dims().iter().map(ToString::to_string).collect();
    writeln!(
        text,
        "dim L_k for k = 0..{}: {}",
        trace.levels.len() - 1,
        dims.join(" ")
    )
    .unwrap();
    if trace.generating {
        writeln!(text, "length: {}", trace.length.unwrap()).unwrap();
        writeln!(text, "characteristic sequence: {seq}").unwrap();
    } else {
        writeln!(
            text,
            "not generating: spans a subspace of dim {} < {}",
            trace.final_dim(),
            algebra.dim()
        )
        .unwrap();
    }
    writeln!(text, "irreducible words:").unwrap();
    for w in &trace.witnesses {
        writeln!(text, "  [{}] {} = {}", w.length, w.render(), w.vector).unwrap();
    }
    let claim = a.claim.map(|c| (c, trace.length == Some(c)));
    if let Some((c, ok)) = claim {
        writeln!(text, "claim length = {c}: {}", if ok { "confirmed" } else { "false" }).unwrap();
    }
    let witnesses: Vec<Value> = trace
        .witnesses
        .iter()
        .map(|w| json!({ "word": w.render(), "length": w.length, "vector": to_value(&w.vector) }))
        .collect();
    let mut result = json!({
        "set": set.describe(),
        "generators": generator_legend(&set),
        "generating": trace.generating,
        "length": trace.length,
        "dims": trace.dims(),
        "stabilized_at": trace.stabilized_at,
    });
    let obj = result.as_object_mut().unwrap();
    if trace.generating {
        obj.insert("characteristic_sequence".into(), to_value(&seq));
    } else {
        obj.insert("partial_sequence".into(), to_value(&seq));
    }
    obj.insert("witnesses".into(), Value::Array(witnesses));
    if let Some((c, ok)) = claim {
        obj.insert("claim".into(), json!({ "length": c, "holds": ok }));
    }
    let status = if !trace.generating || claim.is_some_and(|(_, ok)| !ok) {
        EXIT_REFUTED
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        status,
        algebra: Some(algebra.fingerprint()),
        result,
        text,
    })
}

fn verdict_line(algebra: &Algebra, label: &str, v: &Verdict) -> String {
    match v {
        Verdict::Certified { certificates } => {
            let eqs: Vec<String> = certificates.iter().map(|c| c.equation()).collect();
            format!("{label}: certified ({})\n", eqs.join("; "))
        }
        Verdict::Refuted { refutation: r } => {
            let at = match r.basis_triple {
                Some(t) => {
                    let n = |i: usize| algebra.basis_names()[i - 1].as_str();
                    format!("({}, {}, {})", n(t[0]), n(t[1]), n(t[2]))
                }
                None => format!("({}, {}, {})", r.triple[0], r.triple[1], r.triple[2]),
            };
            format!(
                "{label}: refuted: {} = {} at {at} is not in the span of {} (dim {})\n",
                r.target.spell(),
                r.target_value,
                r.set,
                r.span_dim
            )
        }
        Verdict::Undetermined => format!("{label}: undetermined\n"),
    }
}

fn classify_cmd(a: &ClassifyArgs, budget: u64) -> Result<Outcome> {
    let algebra = load(&a.file)?;
    let cfg = ClassifyConfig {
        random_triples: a.random_triples,
        seed: a.seed,
    };
    let evidence = BoundEvidence::gather(&algebra, &cfg, budget)?;
    let report = evidence.classification.clone().expect("gathered");
    let bound = length_upper_bound(&algebra, &evidence);
    let mut text = header(&algebra);
    text.push_str(&verdict_line(&algebra, "mixing", &report.mixing));
    text.push_str(&verdict_line(
        &algebra,
        "sliding, z(xy) in <Q_r>",
        &report.sliding_item1,
    ));
    text.push_str(&verdict_line(
        &algebra,
        "sliding, (xy)z in <Q_l>",
        &report.sliding_item2,
    ));
    writeln!(
        text,
        "is mixing: {}; is sliding: {}",
        report.is_mixing, report.is_sliding
    )
    .unwrap();
    match &bound {
        Some(b) => writeln!(text, "length <= {} ({})", b.value, b.justification).unwrap(),
        None => writeln!(text, "no upper bound on the length").unwrap(),
    }
    let flag = |v: Option<bool>| v.map_or(Value::Null, Value::Bool);
    Ok(Outcome {
        status: EXIT_OK,
        algebra: Some(algebra.fingerprint()),
        result: json!({
            "classification": to_value(&report),
            "lie": flag(evidence.lie),
            "associative": flag(evidence.associative),
            "r_ended": evidence.r_ended,
            "bound": to_value(&bound),
        }),
        text,
    })
}

fn read_candidates(algebra: &Algebra, path: &Path) -> Result<Vec<GenSet>> {
    GenSet::parse_list(algebra, &std::fs::read_to_string(path)?)
}

fn search(a: &SearchArgs, budget: u64) -> Result<Outcome> {
    let algebra = load(&a.file)?;
    let candidates = match &a.candidates {
        Some(p) => read_candidates(&algebra, p)?,
        None => Vec::new(),
    };
    let cfg = SearchConfig {
        max_subset: a.max_subset,
        random: a.random,
        set_size: a.set_size.0..=a.set_size.1,
        seed: a.seed,
        candidates,
    };
    let bound = if a.with_bounds {
        let evidence = BoundEvidence::gather(&algebra, &ClassifyConfig::default(), budget)?;
        length_upper_bound(&algebra, &evidence)
    } else {
        None
    };
    let result = search_length(&algebra, &cfg, bound.as_ref())?;
    let mut text = header(&algebra);
    let generating = result.attempts.iter().filter(|t| t.generating).count();
    writeln!(text, "tried {} sets, {} generating", result.attempts.len(), generating).unwrap();
    match (&result.best, &result.witness) {
        (Some(b), Some(w)) => writeln!(text, "longest: {b} via {}", w.describe()).unwrap(),
        _ => writeln!(text, "no generating set found").unwrap(),
    }
    if let Some(b) = &result.bound {
        writeln!(text, "upper bound: {} ({})", b.value, b.justification).unwrap();
    }
    if result.exact {
        writeln!(text, "exact: length of the algebra = {}", result.best.unwrap()).unwrap();
    }
    Ok(Outcome {
        status: EXIT_OK,
        algebra: Some(algebra.fingerprint()),
        result: to_value(&result),
        text,
    })
}

fn example(a: &ExampleArgs, json: bool) -> Result<Outcome> {
    let family: Family = a.family.parse()?;
    let field: Field = a.field.parse()?;
    let mut spec = FamilySpec::new(family).field(field);
    spec.d = a.d;
    spec.r = a.r;
    let algebra = spec.build()?;
    let body = algebra.to_json();
    let text = match &a.output {
        Some(path) => {
            std::fs::write(path, format!("{body}\n"))?;
            format!("wrote {} to {}\n", algebra.name(), path.display())
        }
        None if json => String::new(),
        None => format!("{body}\n"),
    };
    Ok(Outcome {
        status: EXIT_OK,
        algebra: Some(algebra.fingerprint()),
        result: to_value(&algebra.to_file()),
        text,
    })
}

fn oracle(a: &OracleArgs) -> Result<Outcome> {
    let algebra = load(&a.file)?;
    let set = GenSet::parse(&algebra, &a.set)?;
    let brute = oracle_filtrate(&algebra, &set, a.kmax, ORACLE_WORD_LIMIT)?;
    let trace = filtrate(&algebra, &set)?;
    let fast: Vec<usize> = (0..=a.kmax).map(|k| trace.dim_at(k)).collect();
    let agree = fast == brute;
    let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let text = format!(
        "{}filtration: {}\nenumeration: {}\n{}\n",
        header(&algebra),
        join(&fast),
        join(&brute),
        if agree { "agree" } else { "MISMATCH" }
    );
    Ok(Outcome {
        status: if agree { EXIT_OK } else { EXIT_REFUTED },
        algebra: Some(algebra.fingerprint()),
        result: json!({ "set": set.describe(), "kmax": a.kmax, "filtration": fast, "enumeration": brute, "agree": agree }),
        text,
    })
}
