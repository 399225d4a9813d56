//! Command-line interface: `construct`, `verify`, `colourings` and `demo`.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails or
//! is indeterminate, 2 on usage, parse or I/O errors.

pub mod demo;
pub mod format;
pub mod report;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::assembly::{build_cocktail, build_cocktail_with, build_k4cs, cocktail_params};
use crate::constructions::exclusively_alt;
use crate::error::Error;
use crate::host::{Decomposition, Vertex};
use crate::seeds::{cocktail_seed, figure2_fixture, k9_seed};
use crate::verify::{self, Colouring, SolveLimits, DEFAULT_NODE_LIMIT};

pub use demo::{run_demo, DemoOutput, DemoSummary};
pub use format::{parse_decomposition, write_decomposition};
pub use report::{run_check, Check, CheckRecord, Report};

pub const NODE_LIMIT_ENV: &str = "QUADCYCLE_NODE_LIMIT";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "quadcycle",
    version,
    about = "Build and certify uniquely 2-colourable 4-cycle decompositions"
)]
pub struct Cli {
    /// Search node limit for the colouring enumerator.
    #[arg(long, global = true, env = NODE_LIMIT_ENV, default_value_t = DEFAULT_NODE_LIMIT)]
    pub node_limit: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a decomposition and write it in the text format.
    Construct(ConstructArgs),
    /// Run checks against a decomposition file.
    Verify(VerifyArgs),
    /// List the proper 2-colourings of a decomposition file.
    Colourings(ColouringsArgs),
    /// Build and certify every reference instance.
    Demo(DemoArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// 4-cycle system of order n = 1 mod 8, n >= 49.
    K4cs,
    /// Cocktail party graph of even order n >= 50.
    Cocktail,
    /// Complete multipartite graph with parts of size 4*ell.
    ExclusivelyAlt,
    /// Anchored seed; t = 0 gives the K9 seed.
    Seed,
    /// The K(2,2,2) fixture.
    Figure2,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub kind: Kind,
    /// Order of the host graph.
    #[arg(long, short = 'n')]
    pub order: Option<usize>,
    /// Number of petals for `cocktail`.
    #[arg(long)]
    pub h: Option<usize>,
    /// Hub pairs for `cocktail` and `seed`.
    #[arg(long)]
    pub t: Option<usize>,
    /// Comma-separated ell per part for `exclusively-alt`.
    #[arg(long, value_delimiter = ',')]
    pub ells: Option<Vec<usize>>,
    /// Number of parts with ell = 2 for `exclusively-alt`.
    #[arg(long)]
    pub parts: Option<usize>,
    /// Output file; standard output when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Decomposition file, or `-` for standard input.
    pub file: PathBuf,
    #[arg(long)]
    pub exact_cover: bool,
    /// Pin vertex 0 and require exactly one completion.
    #[arg(long)]
    pub unique: bool,
    /// Anchor sets as `P1:P2`, each a comma-separated vertex list.
    #[arg(long, value_name = "P1:P2")]
    pub anchor: Option<String>,
    /// A colouring as a 0/1 string in vertex order; checked for validity.
    #[arg(long)]
    pub colouring: Option<String>,
    /// With `--colouring`: alternates inside every part.
    #[arg(long, requires = "colouring")]
    pub alt: bool,
    /// With `--colouring`: alternates across part boundaries too.
    #[arg(long, requires = "colouring")]
    pub super_alt: bool,
    /// With `--colouring`: some part alternates.
    #[arg(long, requires = "colouring")]
    pub partially_alt: bool,
    #[arg(long)]
    pub exclusively_alt: bool,
    #[arg(long)]
    pub exclusively_partially_alt: bool,
    /// Print the report as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ColouringsArgs {
    /// Decomposition file, or `-` for standard input.
    pub file: PathBuf,
    /// Fix a vertex colour, as `VERTEX=COLOUR`.
    #[arg(long = "pin", value_name = "V=C")]
    pub pins: Vec<String>,
    /// Stop after this many colourings.
    #[arg(long)]
    pub limit: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    /// Directory for decomposition files and the report.
    #[arg(long, short, default_value = "quadcycle-demo")]
    pub out: PathBuf,
    /// Print the summary as JSON.
    #[arg(long)]
    pub json: bool,
}

/// A usage-level failure, reported with exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = std::result::Result<i32, UsageError>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let res = match &cli.command {
        Command::Construct(a) => construct(a, out),
        Command::Verify(a) => verify_cmd(a, cli.node_limit, out),
        Command::Colourings(a) => colourings(a, cli.node_limit, out),
        Command::Demo(a) => demo_cmd(a, cli.node_limit, out),
    };
    match res {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn build(a: &ConstructArgs) -> std::result::Result<Decomposition, UsageError> {
    let need_order = || {
        a.order
            .ok_or_else(|| usage("--order is required for this kind"))
    };
    let d = match a.kind {
        Kind::K4cs => build_k4cs(need_order()?)?,
        Kind::Cocktail => match (a.order, a.h, a.t) {
            (Some(n), None, None) => build_cocktail(n)?,
            (order, Some(h), Some(t)) => {
                if let Some(n) = order {
                    if n != 8 * h + 2 * t {
                        return Err(usage(format!(
                            "--order {n} does not equal 8h + 2t = {}",
                            8 * h + 2 * t
                        )));
                    }
                    cocktail_params(n)?;
                }
                build_cocktail_with(h, t)?
            }
            _ => return Err(usage("cocktail needs --order, or both --h and --t")),
        },
        Kind::ExclusivelyAlt => {
            let ells = match (&a.ells, a.parts) {
                (Some(e), None) => e.clone(),
                (None, Some(h)) => vec![2; h],
                _ => {
                    return Err(usage(
                        "exclusively-alt needs exactly one of --ells or --parts",
                    ))
                }
            };
            exclusively_alt(&ells)?
        }
        Kind::Seed => match a.t.ok_or_else(|| usage("seed needs --t"))? {
            0 => k9_seed().decomposition(),
            t => cocktail_seed(t)?.decomposition(),
        },
        Kind::Figure2 => figure2_fixture(),
    };
    Ok(d)
}

fn construct(a: &ConstructArgs, out: &mut dyn Write) -> CmdResult {
    let text = write_decomposition(&build(a)?);
    match &a.output {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_PASS)
}

fn load(path: &Path) -> std::result::Result<Decomposition, UsageError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?
    };
    Ok(parse_decomposition(&text)?)
}

fn parse_vertex_list(s: &str) -> std::result::Result<Vec<Vertex>, UsageError> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse()
                .map_err(|_| usage(format!("`{x}` is not a vertex id")))
        })
        .collect()
}

fn verify_cmd(a: &VerifyArgs, node_limit: u64, out: &mut dyn Write) -> CmdResult {
    let d = load(&a.file)?;
    let colouring = match &a.colouring {
        Some(s) => {
            let c = Colouring::parse(s)?;
            if c.len() != d.vertex_count() {
                return Err(usage(format!(
                    "colouring has {} entries for {} vertices",
                    c.len(),
                    d.vertex_count()
                )));
            }
            Some(c)
        }
        None => None,
    };
    let mut checks = Vec::new();
    if a.exact_cover {
        checks.push(Check::ExactCover);
    }
    if let Some(c) = &colouring {
        checks.push(Check::ValidColouring(c.clone()));
        if a.alt {
            checks.push(Check::Alt(c.clone()));
        }
        if a.super_alt {
            checks.push(Check::SuperAlt(c.clone()));
        }
        if a.partially_alt {
            checks.push(Check::PartiallyAlt(c.clone()));
        }
    }
    if let Some(spec) = &a.anchor {
        let (p1, p2) = spec
            .split_once(':')
            .ok_or_else(|| usage("--anchor expects P1:P2"))?;
        let (p1, p2) = (parse_vertex_list(p1)?, parse_vertex_list(p2)?);
        if let Some(&v) = p1.iter().chain(&p2).find(|&&v| v >= d.vertex_count()) {
            return Err(usage(format!("anchor vertex {v} is out of range")));
        }
        checks.push(Check::Anchored { p1, p2 });
    }
    if a.unique {
        checks.push(Check::Unique);
    }
    if a.exclusively_alt {
        checks.push(Check::ExclusivelyAlt);
    }
    if a.exclusively_partially_alt {
        checks.push(Check::ExclusivelyPartiallyAlt);
    }
    if checks.is_empty() {
        checks.push(Check::ExactCover);
    }
    let mut report = Report::for_decomposition(a.file.display().to_string(), &d);
    for c in &checks {
        report.push(run_check(&d, c, node_limit));
    }
    if a.json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        out.write_all(report.to_text().as_bytes())?;
    }
    Ok(report.exit_code())
}

fn parse_pin(s: &str) -> std::result::Result<(Vertex, u8), UsageError> {
    let bad = || usage(format!("pin `{s}` must look like VERTEX=0 or VERTEX=1"));
    let (v, c) = s.split_once('=').ok_or_else(bad)?;
    let v = v.trim().parse().map_err(|_| bad())?;
    match c.trim() {
        "0" => Ok((v, 0)),
        "1" => Ok((v, 1)),
        _ => Err(bad()),
    }
}

fn colourings(a: &ColouringsArgs, node_limit: u64, out: &mut dyn Write) -> CmdResult {
    let d = load(&a.file)?;
    let pins = a
        .pins
        .iter()
        .map(|p| parse_pin(p))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let limits = SolveLimits {
        node_limit,
        model_limit: a.limit,
        probing: false,
    };
    let outcome = verify::enumerate_2colourings(&d, &pins, limits)?;
    for m in &outcome.models {
        writeln!(out, "{m}")?;
    }
    writeln!(
        out,
        "total {} complete {}",
        outcome.models.len(),
        outcome.complete
    )?;
    Ok(if outcome.complete {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}

fn demo_cmd(a: &DemoArgs, node_limit: u64, out: &mut dyn Write) -> CmdResult {
    let output = run_demo(node_limit)?;
    std::fs::create_dir_all(&a.out)?;
    for (name, text) in &output.files {
        std::fs::write(a.out.join(name), text)?;
    }
    let json = output.summary.to_json();
    std::fs::write(a.out.join("report.json"), format!("{json}\n"))?;
    if a.json {
        writeln!(out, "{json}")?;
    } else {
        for r in &output.summary.reports {
            out.write_all(r.to_text().as_bytes())?;
        }
        let verdict = if output.summary.is_ok() {
            "all checks passed"
        } else {
            "some checks FAILED"
        };
        writeln!(out, "{verdict}; files written to {}", a.out.display())?;
    }
    Ok(if output.summary.is_ok() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}
