use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gfperm::construct::{Built, Construction};
use gfperm::field::{parse_field, Modulus};
use gfperm::opoly::{Family, FAMILIES};
use gfperm::poly::{interpolate, FieldMap, TermPoly};
use gfperm::suites::{self, Row, SuiteConfig, SUITES};
use gfperm::verify::{hyperoval_check, is_opolynomial, is_permutation, Caps, VerifyReport};
use gfperm::FieldCtx;
use serde_json::{json, Value};

const FORMATS: &str = "\
Spec strings:
  field         p^n, p^n/mod=<encoding>, with :2 / :3 tower steps (2^3, 2^5:2, 3^2/mod=10, 2^2:3)
  polynomial    exp:coeff terms joined by commas; exponents may be fractions (3:1, 6:1,4:1,2:1, 5/6:1,1/6:1)
  family        translation:h=H, segre:a=A, glynni, glynnii:a=A, cherowitzo:a=A, payne:a=A,
                subiaco:a=A, adelaide:b=B,sign=+|-
  construction  F:f=<map>, G:f=<map>, F1|F2|F3:f1=<map>,f2=<map>[,beta=root|gen],
                D:h=H,a=A, tower:f=<map>,depth=D[,scheme=F1|F3|G],
                T71|T72:a=,b=,u=,t=   T73|T74:a=,b=,c=,u=,t=
                where <map> is a family id or a polynomial over the base field
Elements are integer encodings: base-p digits of the polynomial-basis coordinates.

Exit codes: 0 verdict true or suite clean, 1 verdict false or mismatch, 2 usage or precondition error.";

#[derive(Parser)]
#[command(name = "gfperm", version, about = "Permutation polynomials and o-polynomials over finite fields", after_help = FORMATS)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Output format; sweeps default to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = suites::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_parser = positive)]
    cap_pp: Option<u64>,
    #[arg(long, global = true, value_parser = positive)]
    cap_opoly: Option<u64>,
    #[arg(long, global = true, value_parser = positive)]
    cap_hyper: Option<u64>,
    #[arg(long, global = true, value_parser = positive)]
    cap_interp: Option<u64>,
    /// Largest extension a construction is verified on.
    #[arg(long, global = true, value_parser = positive)]
    cap_construct: Option<u64>,
    /// Write the main output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Report wall times (output is then no longer reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

fn positive(s: &str) -> std::result::Result<u64, String> {
    match s.parse::<u64>() {
        Ok(0) => Err("caps must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Describe a field: order, modulus, generator, tower links.
    Field {
        spec: Option<String>,
        #[arg(long = "field")]
        field: Option<String>,
    },
    /// Run a brute-force oracle on a polynomial.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        #[arg(long)]
        field: String,
        #[arg(long)]
        poly: String,
    },
    /// O-polynomial families.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Build a construction and optionally verify it.
    Construct {
        #[arg(long)]
        field: String,
        #[arg(long)]
        spec: String,
        #[arg(long)]
        verify: bool,
        /// Overrides the depth of a tower construction.
        #[arg(long)]
        depth: Option<u32>,
    },
    /// Run a named suite; one CSV row per case.
    Sweep { suite: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Pp,
    Opoly,
    Hyperoval,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Family tags and parameter schemas.
    List,
    /// Polynomial of one family member, e.g. `gen segre a=1 m=5` or `gen segre:a=1 --field 2^5`.
    Gen {
        #[arg(required = true)]
        words: Vec<String>,
        #[arg(long)]
        field: Option<String>,
    },
    /// Validity and transform closure of every member, e.g. `check-all m=3 m=5`.
    CheckAll {
        words: Vec<String>,
        #[arg(long = "m")]
        m: Vec<u32>,
    },
}

/// A finished command: what to print and the exit code.
struct Outcome {
    text: String,
    code: u8,
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
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    if let Some(n) = cli.opts.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("setting up the worker pool")?;
    }
    let out = match &cli.cmd {
        Cmd::Field { spec, field } => {
            let s = spec
                .as_ref()
                .or(field.as_ref())
                .ok_or_else(|| anyhow!("field needs a spec"))?;
            cmd_field(s, &cli.opts)?
        }
        Cmd::Verify { kind, field, poly } => cmd_verify(*kind, field, poly, &cli.opts)?,
        Cmd::Catalog { action } => match action {
            CatalogAction::List => cmd_list(&cli.opts)?,
            CatalogAction::Gen { words, field } => cmd_gen(words, field.as_deref(), &cli.opts)?,
            CatalogAction::CheckAll { words, m } => cmd_check_all(words, m, &cli.opts)?,
        },
        Cmd::Construct {
            field,
            spec,
            verify,
            depth,
        } => cmd_construct(field, spec, *verify, *depth, &cli.opts)?,
        Cmd::Sweep { suite } => cmd_sweep(suite, &cli.opts)?,
    };
    match &cli.opts.out {
        Some(path) => File::create(path)
            .and_then(|mut f| f.write_all(out.text.as_bytes()))
            .with_context(|| format!("writing {path}"))?,
        None => io::stdout().write_all(out.text.as_bytes())?,
    }
    Ok(out.code)
}

fn caps(o: &Opts) -> Caps {
    let d = Caps::default();
    Caps {
        pp: o.cap_pp.unwrap_or(d.pp),
        opoly: o.cap_opoly.unwrap_or(d.opoly),
        hyper: o.cap_hyper.unwrap_or(d.hyper),
        interp: o.cap_interp.unwrap_or(d.interp),
        construct: o.cap_construct.unwrap_or(d.construct),
    }
}

fn field(s: &str) -> Result<FieldCtx> {
    parse_field(s).with_context(|| format!("field {s:?}"))
}

/// Renders one flat JSON object in the chosen format.
fn record(obj: Value, format: Format) -> Result<String> {
    let map = obj.as_object().expect("records are objects");
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&obj)? + "\n",
        Format::Text => map.iter().map(|(k, v)| format!("{k}: {}\n", plain(v))).collect(),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(map.keys())?;
            w.write_record(map.values().map(plain))?;
            String::from_utf8(w.into_inner()?)?
        }
    })
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn poly_text(coeffs: &[String]) -> String {
    let mut terms = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c == "0" {
            continue;
        }
        let x = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        terms.push(match (c.as_str(), x.is_empty()) {
            (c, true) => c.to_string(),
            ("1", false) => x,
            (c, false) => format!("{c}*{x}"),
        });
    }
    terms.join(" + ")
}

fn cmd_field(spec: &str, o: &Opts) -> Result<Outcome> {
    let k = field(spec)?;
    let modulus = match k.modulus() {
        Modulus::OverPrime(c) => poly_text(&c.iter().map(u64::to_string).collect::<Vec<_>>()),
        Modulus::OverBase(c) => poly_text(&c.iter().map(|e| e.0.to_string()).collect::<Vec<_>>()),
    };
    let mut links = Vec::new();
    let mut cur = Some(&k);
    while let Some(f) = cur {
        links.push(f.spec());
        cur = f.base();
    }
    links.reverse();
    let obj = json!({
        "spec": k.spec(),
        "p": k.p(),
        "order": k.q(),
        "modulus": modulus,
        "modulus_encoding": k.modulus_encoding(),
        "generator": k.generator().0,
        "tower": links,
    });
    Ok(Outcome {
        text: record(obj, o.format.unwrap_or(Format::Json))?,
        code: 0,
    })
}

fn report_outcome(mut obj: Value, report: &VerifyReport, o: &Opts) -> Result<Outcome> {
    let rep = report.to_json(o.timings);
    for (k, v) in rep.as_object().expect("object") {
        obj[k] = v.clone();
    }
    Ok(Outcome {
        text: record(obj, o.format.unwrap_or(Format::Json))?,
        code: if report.verdict { 0 } else { 1 },
    })
}

fn cmd_verify(kind: VerifyKind, f: &str, poly: &str, o: &Opts) -> Result<Outcome> {
    let k = field(f)?;
    let p = TermPoly::parse(&k, poly).with_context(|| format!("polynomial {poly:?}"))?;
    let caps = caps(o);
    let (name, report) = match kind {
        VerifyKind::Pp => ("pp", is_permutation(&p, &caps)?),
        VerifyKind::Opoly => ("opoly", is_opolynomial(&p, &caps)?),
        VerifyKind::Hyperoval => ("hyperoval", hyperoval_check(&p, &caps)?),
    };
    report_outcome(
        json!({ "check": name, "field": k.spec(), "poly": p.to_string() }),
        &report,
        o,
    )
}

fn cmd_list(o: &Opts) -> Result<Outcome> {
    let format = o.format.unwrap_or(Format::Text);
    let text = match format {
        Format::Json => {
            let v: Vec<Value> = FAMILIES
                .iter()
                .map(|(t, s)| json!({ "family": t, "parameters": s }))
                .collect();
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["family", "parameters"])?;
            for (t, s) in FAMILIES {
                w.write_record([t, s])?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Text => FAMILIES.iter().map(|(t, s)| format!("{t:<12} {s}\n")).collect(),
    };
    Ok(Outcome { text, code: 0 })
}

/// `segre a=1 m=5` or `segre:a=1` plus a field.
fn cmd_gen(words: &[String], f: Option<&str>, o: &Opts) -> Result<Outcome> {
    let mut id = String::new();
    let mut params = Vec::new();
    let mut m = None;
    for w in words {
        if let Some(v) = w.strip_prefix("m=") {
            m = Some(v.parse::<u32>().with_context(|| format!("bad m {v:?}"))?);
        } else if id.is_empty() {
            id = w.clone();
        } else {
            params.push(w.as_str());
        }
    }
    if !params.is_empty() {
        id = format!("{id}:{}", params.join(","));
    }
    let family: Family = id.parse().with_context(|| format!("family {id:?}"))?;
    let k = match (f, m) {
        (Some(s), _) => field(s)?,
        (None, Some(m)) => FieldCtx::new(2, m)?,
        (None, None) => bail!("gen needs m=<degree> or --field"),
    };
    let inst = family.instantiate(&k)?;
    let poly = match inst.as_poly() {
        Some(p) => p.clone(),
        None => interpolate(&inst.to_fn(), caps(o).interp)?,
    };
    let text = match o.format.unwrap_or(Format::Text) {
        Format::Text => format!("{poly}\n"),
        f => record(
            json!({ "family": family.to_string(), "field": k.spec(), "poly": poly.to_string() }),
            f,
        )?,
    };
    Ok(Outcome { text, code: 0 })
}

fn cmd_check_all(words: &[String], ms: &[u32], o: &Opts) -> Result<Outcome> {
    let mut degrees: Vec<u32> = ms.to_vec();
    for w in words {
        let v = w
            .strip_prefix("m=")
            .ok_or_else(|| anyhow!("expected m=<degree>, got {w:?}"))?;
        degrees.push(v.parse().with_context(|| format!("bad m {v:?}"))?);
    }
    if degrees.is_empty() {
        degrees = vec![3, 5];
    }
    let cfg = suite_config(o);
    // (m, family) -> (instances, checks, failures)
    let mut table: BTreeMap<(u32, String), (usize, usize, usize)> = BTreeMap::new();
    for &m in &degrees {
        for r in suites::catalog_check(m, &cfg)? {
            let tag = r.params.split([':', ';']).next().unwrap_or("").to_string();
            let e = table.entry((m, tag)).or_default();
            if !r.params.contains(';') {
                e.0 += 1;
            }
            e.1 += 1;
            e.2 += usize::from(r.mismatch);
        }
    }
    let failures: usize = table.values().map(|v| v.2).sum();
    let rows: Vec<Value> = table
        .iter()
        .map(|((m, fam), (n, c, f))| {
            json!({ "family": fam, "m": m, "instances": n, "checks": c, "failures": f,
                    "result": if *f == 0 { "pass" } else { "fail" } })
        })
        .collect();
    let text = match o.format.unwrap_or(Format::Text) {
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["family", "m", "instances", "checks", "failures", "result"])?;
            for r in &rows {
                let o = r.as_object().expect("object");
                w.write_record(["family", "m", "instances", "checks", "failures", "result"].map(|k| plain(&o[k])))?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Text => {
            let mut s = format!(
                "{:<12} {:>2} {:>9} {:>7} {:>8}  result\n",
                "family", "m", "instances", "checks", "failures"
            );
            for ((m, fam), (n, c, f)) in &table {
                let res = if *f == 0 { "pass" } else { "fail" };
                s += &format!("{fam:<12} {m:>2} {n:>9} {c:>7} {f:>8}  {res}\n");
            }
            s
        }
    };
    Ok(Outcome {
        text,
        code: u8::from(failures > 0),
    })
}

fn cmd_construct(f: &str, spec: &str, verify: bool, depth: Option<u32>, o: &Opts) -> Result<Outcome> {
    let k = field(f)?;
    let mut c: Construction = spec.parse().with_context(|| format!("construction {spec:?}"))?;
    if let Some(d) = depth {
        match &mut c {
            Construction::Tower { depth, .. } => *depth = d,
            _ => bail!("--depth applies only to tower constructions"),
        }
    }
    let caps = caps(o);
    let Built { map, predicted } = c.build(&k, &caps)?;
    let ext = map.field().clone();
    let mut obj = json!({
        "construction": c.to_string(),
        "field": ext.spec(),
        "predicted": predicted,
    });
    if !verify {
        return Ok(Outcome {
            text: record(obj, o.format.unwrap_or(Format::Json))?,
            code: 0,
        });
    }
    if ext.q() > caps.construct {
        obj["verdict"] = json!("unverified");
        obj["mismatch"] = Value::Null;
        return Ok(Outcome {
            text: record(obj, o.format.unwrap_or(Format::Json))?,
            code: 0,
        });
    }
    let report = is_permutation(&map, &caps)?;
    obj["mismatch"] = json!(predicted.is_some_and(|p| p != report.verdict));
    report_outcome(obj, &report, o)
}

fn suite_config(o: &Opts) -> SuiteConfig {
    SuiteConfig {
        seed: o.seed,
        caps: caps(o),
        timings: o.timings,
    }
}

fn cmd_sweep(name: &str, o: &Opts) -> Result<Outcome> {
    if !SUITES.contains(&name) {
        bail!("unknown suite {name:?}; known suites:\n  {}", SUITES.join("\n  "));
    }
    let rows = suites::run_suite(name, &suite_config(o))?;
    let bad = suites::mismatches(&rows);
    eprintln!("{name}: {} cases, {bad} mismatches", rows.len());
    for r in rows.iter().filter(|r| r.mismatch).take(5) {
        eprintln!("  mismatch {} {} {}", r.case_id, r.field, r.params);
    }
    let text = match o.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut buf = Vec::new();
            suites::write_csv(&rows, &mut buf)?;
            String::from_utf8(buf)?
        }
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
        Format::Text => rows.iter().map(row_text).collect(),
    };
    Ok(Outcome {
        text,
        code: u8::from(bad > 0),
    })
}

fn row_text(r: &Row) -> String {
    let p = r.predicted.map_or("-".to_string(), |p| p.to_string());
    let flag = if r.mismatch { "  MISMATCH" } else { "" };
    format!(
        "{} {} {} predicted={p} verified={}{flag}\n",
        r.case_id, r.field, r.params, r.verified
    )
}
