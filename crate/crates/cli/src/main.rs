use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use minsep_core::dichotomy::{classify, survey_all_families, Verdict};
use minsep_core::generators::{
    c5_blowup, grid, line_theta, line_theta_certificates, line_wall, line_wall_certificates, theta,
    theta_certificates, wall, wall_certificates,
};
use minsep_core::io::{parse_graph, write_graph_with_comments};
use minsep_core::lab::suite::{certify_family, run_suite, Suite, SuiteConfig};
use minsep_core::patterns::GraphFamily;
use minsep_core::separators::{
    minimal_ab_separators, minimal_ab_separators_brute, minimal_separators_brute, SeparatorStream,
};
use minsep_core::{catalog, Error, Graph, VertexSet};

mod params;

use params::{expand, Params};

const EX_USAGE: u8 = 64;
const EX_DATAERR: u8 = 65;
const EX_NOINPUT: u8 = 66;
const EX_SOFTWARE: u8 = 70;
/// `enumerate --limit` stopped before the full family was listed.
const EX_TRUNCATED: u8 = 3;

#[derive(Parser)]
#[command(name = "minsep", version, about = "Minimal separators, extremal families and the tameness classifier")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Theta,
    LineTheta,
    Wall,
    LineWall,
    Grid,
    C5blowup,
    Named,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumMethod {
    Brute,
    Delay,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GrowthMode {
    Exact,
    Certify,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Ops,
    Bounds,
    Structure,
    Certificates,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph in the text format.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated parameters, e.g. `3,3` for theta or `C5` for named.
        #[arg(long, default_value = "")]
        params: String,
        /// Also emit the separator family behind the lower bound, as comments,
        /// after verifying each member.
        #[arg(long)]
        certify: bool,
        #[arg(long)]
        output: Option<String>,
    },
    /// List or count minimal separators of a graph file (`-` reads stdin).
    Enumerate {
        #[arg(long)]
        input: String,
        /// Restrict to minimal a,b-separators (1-indexed, non-adjacent).
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        pair: Option<Vec<usize>>,
        #[arg(long)]
        count_only: bool,
        /// Stop after N separators; exit code 3 signals truncation.
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value = "delay")]
        method: EnumMethod,
    },
    /// Classify the class of F-free graphs; exit 0 Tame, 1 NotTame, 2 Open.
    Classify {
        /// Comma-separated catalog names, e.g. "4P1,C4".
        #[arg(long, allow_hyphen_values = true)]
        family: String,
    },
    /// Classify every antichain of graphs on at most four vertices.
    Survey {
        /// Write one row per family (`-` for stdout).
        #[arg(long)]
        csv: Option<String>,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Number of random instances per randomized check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        json: bool,
    },
    /// Separator counts along a parameter range, as CSV.
    Growth {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated parameters; each may be a range `a..b` or `a..b:step` (inclusive).
        #[arg(long)]
        params: String,
        #[arg(long, value_enum, default_value = "certify")]
        mode: GrowthMode,
        /// Largest graph exact mode will enumerate.
        #[arg(long, default_value_t = 60)]
        max_vertices: usize,
        /// Write 0 in the elapsed_ms column so output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn new(code: u8, msg: impl Into<String>) -> Self {
        Failure { code, msg: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EX_DATAERR,
            Error::Consistency(_) => EX_SOFTWARE,
            _ => EX_USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EX_NOINPUT, e.to_string())
    }
}

type Outcome = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EX_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((out, code)) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { family, params, certify, output } => gen(family, &params, certify, output.as_deref()),
        Command::Enumerate { input, pair, count_only, limit, method } => {
            enumerate(&input, pair.as_deref(), count_only, limit, method)
        }
        Command::Classify { family } => classify_cmd(&family),
        Command::Survey { csv } => survey(csv.as_deref()),
        Command::Verify { suite, max_n, samples, json } => verify(suite, max_n, samples, cli.seed, json),
        Command::Growth { family, params, mode, max_vertices, no_timing } => {
            growth(family, &params, mode, max_vertices, no_timing)
        }
    }
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Theta => "theta",
        Family::LineTheta => "line-theta",
        Family::Wall => "wall",
        Family::LineWall => "line-wall",
        Family::Grid => "grid",
        Family::C5blowup => "c5blowup",
        Family::Named => "named",
    }
}

/// A generated graph and, where the family has one, its certificate family.
struct Built {
    graph: Graph,
    certificates: Option<Vec<VertexSet>>,
}

fn arity(p: &Params, want: usize, usage: &str) -> Result<(), Failure> {
    if p.len() != want {
        return Err(Failure::new(EX_USAGE, format!("expected parameters {usage}, got {} value(s)", p.len())));
    }
    Ok(())
}

fn build(family: Family, p: &Params, with_certificates: bool) -> Result<Built, Failure> {
    let certs = |f: &dyn Fn() -> minsep_core::Result<Vec<VertexSet>>| -> Result<Option<Vec<VertexSet>>, Failure> {
        if with_certificates {
            Ok(Some(f()?))
        } else {
            Ok(None)
        }
    };
    let built = match family {
        Family::Theta => {
            arity(p, 2, "k,l")?;
            let (k, l) = (p.int(0)?, p.int(1)?);
            Built { graph: theta(k, l)?, certificates: certs(&|| theta_certificates(k, l))? }
        }
        Family::LineTheta => {
            arity(p, 2, "k,l")?;
            let (k, l) = (p.int(0)?, p.int(1)?);
            Built { graph: line_theta(k, l)?, certificates: certs(&|| line_theta_certificates(k, l))? }
        }
        Family::Wall => {
            arity(p, 1, "h")?;
            let w = wall(p.int(0)?)?;
            let certificates = certs(&|| wall_certificates(&w))?;
            Built { graph: w.graph, certificates }
        }
        Family::LineWall => {
            arity(p, 1, "h")?;
            let lw = line_wall(p.int(0)?)?;
            let certificates = certs(&|| line_wall_certificates(&lw))?;
            Built { graph: lw.graph, certificates }
        }
        Family::Grid => {
            arity(p, 2, "r,s")?;
            Built { graph: grid(p.int(0)?, p.int(1)?)?.graph, certificates: None }
        }
        Family::C5blowup => {
            arity(p, 6, "m1,m2,m3,m4,m5,t")?;
            let m = [p.int(0)?, p.int(1)?, p.int(2)?, p.int(3)?, p.int(4)?];
            Built { graph: c5_blowup(m, p.int(5)?)?, certificates: None }
        }
        Family::Named => {
            arity(p, 1, "name")?;
            Built { graph: catalog::named(p.text(0))?, certificates: None }
        }
    };
    if with_certificates && built.certificates.is_none() {
        return Err(Failure::new(
            EX_USAGE,
            format!("family {} has no certificate construction", family_name(family)),
        ));
    }
    Ok(built)
}

fn members_line(s: &VertexSet) -> String {
    s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn gen(family: Family, params: &str, certify: bool, output: Option<&str>) -> Outcome {
    let p = Params::parse(params)?;
    let built = build(family, &p, certify)?;
    let mut comments = vec![format!("{} {}", family_name(family), params.trim())];
    if let Some(certs) = &built.certificates {
        certify_family(&built.graph, certs, certs.len()).map_err(|e| Failure::new(EX_SOFTWARE, e))?;
        comments.push(format!("certified {} minimal separators", certs.len()));
        comments.extend(certs.iter().map(|s| format!("s {}", members_line(s))));
    }
    let text = write_graph_with_comments(&built.graph, &comments);
    match output {
        Some(path) => {
            fs::write(path, text)?;
            Ok((String::new(), 0))
        }
        None => Ok((text, 0)),
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::new(EX_NOINPUT, format!("{path}: {e}")))
    }
}

fn enumerate(input: &str, pair: Option<&[usize]>, count_only: bool, limit: Option<usize>, method: EnumMethod) -> Outcome {
    let g = parse_graph(&read_input(input)?)?;
    let mut found: Vec<VertexSet> = match (pair, method) {
        (Some(ab), _) => {
            let (a, b) = (ab[0], ab[1]);
            if a == 0 || b == 0 || a > g.n() || b > g.n() {
                return Err(Failure::new(EX_USAGE, format!("pair vertices must lie in 1..={}", g.n())));
            }
            let report = match method {
                EnumMethod::Brute => minimal_ab_separators_brute(&g, a - 1, b - 1)?,
                EnumMethod::Delay => minimal_ab_separators(&g, a - 1, b - 1)?,
            };
            report.separators().to_vec()
        }
        (None, EnumMethod::Brute) => minimal_separators_brute(&g)?.separators().to_vec(),
        (None, EnumMethod::Delay) => match limit {
            Some(n) => SeparatorStream::new(&g).take(n + 1).collect(),
            None => SeparatorStream::new(&g).collect(),
        },
    };
    let truncated = limit.is_some_and(|n| found.len() > n);
    if let Some(n) = limit {
        found.truncate(n);
    }
    found.sort();
    let mut out = String::new();
    if count_only {
        let _ = writeln!(out, "{}", found.len());
    } else {
        for s in &found {
            let _ = writeln!(out, "{}", members_line(s));
        }
    }
    Ok((out, if truncated { EX_TRUNCATED } else { 0 }))
}

fn classify_cmd(family: &str) -> Outcome {
    let f = GraphFamily::parse(family)?;
    let c = classify(&f)?;
    let code = match c.verdict {
        Verdict::Tame => 0,
        Verdict::NotTame => 1,
        Verdict::Open => 2,
    };
    Ok((format!("{c}\n"), code))
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn survey(csv: Option<&str>) -> Outcome {
    let r = survey_all_families();
    let mut out = String::new();
    let _ = writeln!(out, "families  {}", r.total);
    let _ = writeln!(out, "Tame      {}", r.tame);
    let _ = writeln!(out, "NotTame   {}", r.not_tame);
    let _ = writeln!(out, "Open      {}", r.open);
    for f in &r.open_families {
        let _ = writeln!(out, "  open: {f}");
    }
    let _ = writeln!(out, "consistent {}", if r.is_consistent() { "yes" } else { "no" });
    for v in &r.violations {
        let _ = writeln!(out, "  violation: {v}");
    }
    if let Some(path) = csv {
        let mut table = String::from("family,verdict,witness,rule\n");
        for row in &r.rows {
            let _ = writeln!(
                table,
                "{},{},{},{}",
                csv_field(&row.family),
                row.verdict,
                csv_field(&row.witness),
                row.rule
            );
        }
        if path == "-" {
            eprint!("{out}");
            out = table;
        } else {
            fs::write(path, table)?;
        }
    }
    Ok((out, if r.is_consistent() { 0 } else { EX_SOFTWARE }))
}

fn verify(suite: SuiteArg, max_n: usize, samples: usize, seed: u64, json: bool) -> Outcome {
    let suite = match suite {
        SuiteArg::All => Suite::All,
        SuiteArg::Ops => Suite::Ops,
        SuiteArg::Bounds => Suite::Bounds,
        SuiteArg::Structure => Suite::Structure,
        SuiteArg::Certificates => Suite::Certificates,
    };
    let cfg = SuiteConfig { max_n, seed, random_samples: samples, ..SuiteConfig::default() };
    let rows = run_suite(suite, &cfg)?;
    let failed = rows.iter().filter(|r| !r.passed()).count();
    let out = if json {
        let mut s = serde_json::to_string_pretty(&rows).map_err(|e| Failure::new(EX_SOFTWARE, e.to_string()))?;
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "{:<13} {:<25} {:<6} {:>10}", "suite", "check", "status", "applied");
        for r in &rows {
            let status = if r.passed() { "pass" } else { "FAIL" };
            let _ = writeln!(s, "{:<13} {:<25} {:<6} {:>10}", r.suite, r.check_id, status, r.applications);
            if let Some(c) = &r.counterexample {
                let _ = writeln!(s, "    counterexample: {c}");
            }
        }
        let _ = writeln!(s, "{} checks, {} failed", rows.len(), failed);
        s
    };
    Ok((out, if failed == 0 { 0 } else { EX_SOFTWARE }))
}

fn param_names(family: Family) -> &'static [&'static str] {
    match family {
        Family::Theta | Family::LineTheta => &["k", "l"],
        Family::Wall | Family::LineWall => &["h"],
        Family::Grid => &["r", "s"],
        Family::C5blowup => &["m1", "m2", "m3", "m4", "m5", "t"],
        Family::Named => &["name"],
    }
}

fn growth(family: Family, params: &str, mode: GrowthMode, max_vertices: usize, no_timing: bool) -> Outcome {
    let mut out = String::from("family,params,n,count,is_lower_bound,elapsed_ms\n");
    for p in expand(params)? {
        let start = Instant::now();
        let built = build(family, &p, mode == GrowthMode::Certify)?;
        let n = built.graph.n();
        let (count, lower) = match (mode, &built.certificates) {
            (GrowthMode::Certify, Some(certs)) => {
                certify_family(&built.graph, certs, certs.len()).map_err(|e| Failure::new(EX_SOFTWARE, e))?;
                (certs.len(), true)
            }
            _ => {
                if n > max_vertices {
                    return Err(Failure::new(
                        EX_USAGE,
                        format!(
                            "{} with {n} vertices exceeds the exact-mode ceiling {max_vertices}; use --mode certify",
                            family_name(family)
                        ),
                    ));
                }
                (SeparatorStream::new(&built.graph).count(), false)
            }
        };
        let elapsed = if no_timing { 0 } else { start.elapsed().as_millis() };
        let labels: Vec<String> =
            param_names(family).iter().zip(p.values()).map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "{},{},{n},{count},{lower},{elapsed}", family_name(family), labels.join(";"));
    }
    Ok((out, 0))
}
