//! `smoothmod` command line: verification suites, fairness certificates and
//! stable hom tables.
//!
//! Exit codes: 0 success, 1 an invariant failed, 2 input error, 3 precondition or
//! precision error.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use smoothmod::catalog::{field_name, load_group_file, rep_catalog, subgroup_name, Catalog};
use smoothmod::exact::{loop_omega, relative_projectivity_test, stable_hom, suspension_t, Flavor, Side};
use smoothmod::fairness::sl2::{
    bruteforce_precondition, sl2_depth_bruteforce, sl2_depth_intersect, sl2_fair_refine, DepthTriple,
};
use smoothmod::fairness::fairness_witness_search;
use smoothmod::group::catalog as groups;
use smoothmod::rep::RepJson;
use smoothmod::report::{SCHEMA, TOOL, VERSION};
use smoothmod::{suites, Elem, Error, Exec, FieldDescriptor, FiniteField, GroupRef, Rep, Subgroup};

#[derive(Parser)]
#[command(name = "smoothmod", version, about = "Finite-level checks for smooth mod-p representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite over the group/field catalog.
    Verify(VerifyArgs),
    /// Fairness witnesses (finite groups) and SL2 depth certificates.
    #[command(subcommand)]
    Fairness(FairnessCommand),
    /// Stable hom dimensions and T/Omega for representations of one group.
    Stable(StableArgs),
    /// Catalog utilities.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    /// Catalog JSON; the built-in catalog when omitted.
    #[arg(long)]
    catalog: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Evaluate cases one at a time.
    #[arg(long)]
    sequential: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct GroupArgs {
    /// Group JSON file ({order, table, labels?}).
    #[arg(long, conflicts_with = "builtin")]
    group: Option<PathBuf>,
    /// Built-in group name: Cn, CnxCm, Dn, S3, Q8, A4.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Subcommand)]
enum FairnessCommand {
    /// Search g with K ∩ gH'g⁻¹ = K ∩ gHg⁻¹.
    Finite {
        #[command(flatten)]
        group: GroupArgs,
        /// Generators of K (element indices, comma separated; empty or `e` for {e}).
        #[arg(long, value_parser = parse_indices, default_value = "")]
        k: Indices,
        #[arg(long, value_parser = parse_indices, default_value = "")]
        h: Indices,
        #[arg(long = "h-prime", value_parser = parse_indices, default_value = "")]
        h_prime: Indices,
        #[command(flatten)]
        output: Output,
    },
    /// Certificate for refining K_n against K_m in SL2(Q_p), optionally checked
    /// against exhaustive enumeration modulo p^N.
    Sl2 {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long = "oracle-N")]
        oracle_n: Option<u32>,
        /// Check only this a (all a within precision otherwise).
        #[arg(long, requires = "oracle_n")]
        a: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct StableArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Field as F<q>, e.g. F4.
    #[arg(long)]
    field: String,
    /// Generators of U (element indices, comma separated; empty for {e}).
    #[arg(long, value_parser = parse_indices, default_value = "")]
    u: Indices,
    /// Extra representation files (RepJson); named by file stem.
    #[arg(long)]
    rep: Vec<PathBuf>,
    /// Pairs NAME:NAME; every ordered pair of objects when omitted.
    #[arg(long)]
    pair: Vec<String>,
    #[command(flatten)]
    output: Output,
}

#[derive(Clone, Debug)]
struct Indices(Vec<u32>);

fn parse_indices(s: &str) -> Result<Indices, String> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Indices(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("{t:?} is not an element index")))
        .collect::<Result<_, _>>()
        .map(Indices)
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Print the built-in catalog as JSON.
    Export {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_precondition() { 3 } else { 2 }, message: e.to_string() }
    }
}

fn input(msg: impl Into<String>) -> Failure {
    Failure { code: 2, message: msg.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Verify(a) => verify(a),
        Command::Fairness(FairnessCommand::Finite { group, k, h, h_prime, output }) => {
            finite(&group, &k.0, &h.0, &h_prime.0, &output)
        }
        Command::Fairness(FairnessCommand::Sl2 { p, m, n, oracle_n, a, output }) => sl2(p, m, n, oracle_n, a, &output),
        Command::Stable(a) => stable(a),
        Command::Catalog(CatalogCommand::Export { out }) => {
            let text = pretty(&serde_json::to_value(Catalog::standard_json()).expect("catalog serializes"));
            emit(&text, out.as_ref())?;
            Ok(0)
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(input(format!("stdout: {e}"))),
                _ => Ok(()),
            }
        }
    }
}

fn header(kind: &str) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("tool".into(), json!(TOOL));
    m.insert("version".into(), json!(VERSION));
    m.insert("kind".into(), json!(kind));
    m
}

fn verify(a: VerifyArgs) -> Result<u8, Failure> {
    if !suites::SUITES.contains(&a.suite.as_str()) {
        return Err(input(format!("unknown suite {:?}; expected one of {}", a.suite, suites::SUITES.join(", "))));
    }
    let catalog = match &a.catalog {
        Some(path) => Catalog::load(path).map_err(|e| input(format!("malformed catalog: {e}")))?,
        None => Catalog::standard(),
    };
    let exec = if a.sequential { Exec::Sequential } else { Exec::Parallel };
    let report = suites::run(&a.suite, &catalog, a.seed, exec)?;
    let text = match a.output.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    emit(&text, a.output.out.as_ref())?;
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn load_group(g: &GroupArgs) -> Result<GroupRef, Failure> {
    match (&g.group, &g.builtin) {
        (Some(path), _) => Ok(load_group_file(path)?),
        (None, Some(name)) => groups::by_name(name).ok_or_else(|| input(format!("unknown builtin group {name:?}"))),
        (None, None) => Err(input("one of --group or --builtin is required")),
    }
}

fn subgroup(g: &GroupRef, gens: &[u32]) -> Result<Subgroup, Failure> {
    let elems = gens.iter().map(|&i| g.elem(i)).collect::<Result<Vec<Elem>, _>>()?;
    Ok(Subgroup::generate(g, &elems))
}

fn finite(ga: &GroupArgs, k: &[u32], h: &[u32], hp: &[u32], out: &Output) -> Result<u8, Failure> {
    let g = load_group(ga)?;
    let (k, h, hp) = (subgroup(&g, k)?, subgroup(&g, h)?, subgroup(&g, hp)?);
    let r = fairness_witness_search(&k, &h, &hp)?;
    let j = r.to_json();
    let text = match out.format {
        Format::Json => {
            let mut m = header("fairness-finite");
            m.insert("result".into(), serde_json::to_value(&j).expect("witness serializes"));
            pretty(&Value::Object(m))
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "K = {:?}  H = {:?}  H' = {:?}", j.k, j.h, j.h_prime);
            match (&j.g, &j.g_label) {
                (Some(g), Some(l)) => {
                    let _ = writeln!(s, "witness-found g = {g} ({l})");
                }
                _ => {
                    let _ = writeln!(s, "exhausted: K ∩ gH'g⁻¹ is strictly smaller for every g");
                }
            }
            s
        }
    };
    emit(&text, out.out.as_ref())?;
    Ok(0)
}

fn triple(t: DepthTriple) -> Value {
    json!([t.upper, t.torus, t.lower])
}

fn sl2(p: u32, m: u32, n: u32, oracle_n: Option<u32>, a: Option<u32>, out: &Output) -> Result<u8, Failure> {
    if !smoothmod::field::is_prime(p) {
        return Err(Error::NotPrime(p).into());
    }
    let mut cert = sl2_fair_refine(m, n)?;
    cert.p = Some(p);
    let mut doc = header("fairness-sl2");
    doc.insert("certificate".into(), serde_json::to_value(&cert).expect("certificate serializes"));
    let mut all_agree = true;
    let mut rows: Vec<Value> = Vec::new();
    if let Some(big_n) = oracle_n {
        let a_values: Vec<u32> = match a {
            Some(a) => {
                bruteforce_precondition(big_n, m, n, a)?;
                vec![a]
            }
            None => (0..=big_n).filter(|&a| bruteforce_precondition(big_n, m, n, a).is_ok()).collect(),
        };
        if a_values.is_empty() {
            bruteforce_precondition(big_n, m, n, 0)?;
        }
        for a in a_values {
            for (label, depth) in [("n", n), ("n_prime", cert.n_prime)] {
                if bruteforce_precondition(big_n, m, depth, a).is_err() {
                    continue;
                }
                let formula = sl2_depth_intersect(m, depth, a)?;
                let brute = sl2_depth_bruteforce(p, big_n, m, depth, a)?;
                let agree = formula == brute;
                all_agree &= agree;
                rows.push(json!({
                    "depth": label, "n": depth, "a": a,
                    "formula": triple(formula), "bruteforce": triple(brute), "agree": agree,
                }));
            }
        }
        doc.insert("oracle".into(), json!({ "N": big_n, "runs": rows, "pass": all_agree }));
    }
    let text = match out.format {
        Format::Json => pretty(&Value::Object(doc)),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "p = {p}  m = {}  n = {}  n' = {}", cert.m, cert.n, cert.n_prime);
            for c in &cert.components {
                let _ = writeln!(
                    s,
                    "{:<6} {} vs {}  strict for all a: {}",
                    c.name, c.lhs_expr, c.rhs_expr, c.strict_for_all_a
                );
            }
            let _ = writeln!(s, "strict component: {}", cert.strict_component);
            for r in &rows {
                let _ = writeln!(
                    s,
                    "oracle {}={} a={} formula {} bruteforce {} {}",
                    r["depth"].as_str().unwrap_or(""),
                    r["n"],
                    r["a"],
                    r["formula"],
                    r["bruteforce"],
                    if r["agree"] == json!(true) { "agree" } else { "DISAGREE" }
                );
            }
            s
        }
    };
    emit(&text, out.out.as_ref())?;
    Ok(if all_agree { 0 } else { 1 })
}

fn parse_field(s: &str) -> Result<FiniteField, Failure> {
    let q: u32 = s
        .trim_start_matches(['F', 'f'])
        .parse()
        .map_err(|_| input(format!("field {s:?}: expected F<q>")))?;
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).ok_or_else(|| input(format!("field {s:?}: order must be at least 2")))?;
    let mut k = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    if r != 1 {
        return Err(input(format!("field {s:?}: {q} is not a prime power")));
    }
    Ok(FiniteField::from_descriptor(&FieldDescriptor { p, k, modulus: None })?)
}

fn stable(a: StableArgs) -> Result<u8, Failure> {
    let g = load_group(&a.group)?;
    let field = parse_field(&a.field)?;
    let whole = Subgroup::whole(&g);
    let u = subgroup(&g, &a.u.0)?;
    let mut objects: Vec<(String, Rep)> =
        rep_catalog(&whole, &field, 4).into_iter().map(|r| (r.name, r.rep)).collect();
    for path in &a.rep {
        let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
        let j: RepJson = serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))?;
        let rep = Rep::from_json(&j, &g)?;
        if rep.field() != &field || rep.domain() != &whole {
            return Err(input(format!("{}: representation is not of G over {}", path.display(), a.field)));
        }
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        objects.push((name, rep));
    }
    let find = |name: &str| {
        objects
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, r)| r.clone())
            .ok_or_else(|| input(format!("unknown object {name:?}")))
    };
    let pairs: Vec<(String, String)> = if a.pair.is_empty() {
        objects.iter().flat_map(|(x, _)| objects.iter().map(move |(y, _)| (x.clone(), y.clone()))).collect()
    } else {
        a.pair
            .iter()
            .map(|s| {
                s.split_once(':')
                    .map(|(x, y)| (x.to_string(), y.to_string()))
                    .ok_or_else(|| input(format!("pair {s:?}: expected NAME:NAME")))
            })
            .collect::<Result<_, _>>()?
    };

    let mut hom_rows = Vec::new();
    for (x, y) in &pairs {
        let (v1, v2) = (find(x)?, find(y)?);
        let inj = stable_hom(&v1, &v2, &u, Flavor::Injective)?;
        let proj = stable_hom(&v1, &v2, &u, Flavor::Projective)?;
        hom_rows.push(json!({
            "v1": x, "v2": y,
            "total_dim": inj.total_dim,
            "stable_dim_injective": inj.stable_dim,
            "stable_dim_projective": proj.stable_dim,
        }));
    }
    let mut all_ok = true;
    let mut object_rows = Vec::new();
    for (name, x) in &objects {
        let (t, _) = suspension_t(x, &u)?;
        let (om, _) = loop_omega(x, &u)?;
        let (proj, _) = relative_projectivity_test(x, &u, Side::Projective)?;
        let (inj, _) = relative_projectivity_test(x, &u, Side::Injective)?;
        all_ok &= proj == inj;
        object_rows.push(json!({
            "name": name, "dim": x.dim(), "t_dim": t.dim(), "omega_dim": om.dim(),
            "projective": proj, "injective": inj, "frobenius_check": proj == inj,
        }));
    }
    for r in &hom_rows {
        all_ok &= r["stable_dim_injective"] == r["stable_dim_projective"];
    }

    let text = match a.output.format {
        Format::Json => {
            let mut doc = header("stable");
            doc.insert("field".into(), json!(field_name(&field)));
            doc.insert("group_order".into(), json!(g.order()));
            doc.insert("u".into(), json!(u.member_indices()));
            doc.insert("stable_hom".into(), Value::Array(hom_rows));
            doc.insert("objects".into(), Value::Array(object_rows));
            pretty(&Value::Object(doc))
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "G of order {} over {}, U = {}", g.order(), field_name(&field), subgroup_name(&u));
            let w = objects.iter().map(|(n, _)| n.len()).max().unwrap_or(4).max(4);
            let _ = writeln!(s, "{:<w$}  {:<w$}  hom  stable(inj)  stable(proj)", "v1", "v2");
            for r in &hom_rows {
                let _ = writeln!(
                    s,
                    "{:<w$}  {:<w$}  {:>3}  {:>11}  {:>12}",
                    r["v1"].as_str().unwrap_or(""),
                    r["v2"].as_str().unwrap_or(""),
                    r["total_dim"].to_string(),
                    r["stable_dim_injective"].to_string(),
                    r["stable_dim_projective"].to_string()
                );
            }
            let _ = writeln!(s);
            let _ = writeln!(s, "{:<w$}  dim    T  Omega  projective  injective  frobenius", "object");
            for r in &object_rows {
                let _ = writeln!(
                    s,
                    "{:<w$}  {:>3}  {:>3}  {:>5}  {:>10}  {:>9}  {}",
                    r["name"].as_str().unwrap_or(""),
                    r["dim"].to_string(),
                    r["t_dim"].to_string(),
                    r["omega_dim"].to_string(),
                    r["projective"].to_string(),
                    r["injective"].to_string(),
                    if r["frobenius_check"] == json!(true) { "ok" } else { "MISMATCH" }
                );
            }
            s
        }
    };
    emit(&text, a.output.out.as_ref())?;
    Ok(if all_ok { 0 } else { 1 })
}
