//! Command-line frontend for the hallrook engine.
//!
//! Exit codes: 0 success (and every check verified), 1 a counterexample was
//! found, 2 usage or validation error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::json;

use hallrook::chromatic::{chromatic_qsym, llt_poly};
use hallrook::dyck::enumerate_dyck;
use hallrook::rook::{r_polys, weighted_placements, FcRule};
use hallrook::symfunc::oracle::hl_direct_oracle;
use hallrook::verify::{sweep, tally, Identity, Status, SweepConfig};
use hallrook::{Basis, DyckPath, Partition, SymFunc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hallrook",
    version,
    about = "Chromatic and LLT expansions of Dyck paths via q-rook placements"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand X_γ or LLT_γ in a chosen basis.
    Expand(ExpandArgs),
    /// List rook placements with free-cell counts and r_{γ,μ}(q).
    Rook(RookArgs),
    /// List all Dyck paths of size n.
    ListDyck(ListDyckArgs),
    /// Run identity checks over all Dyck paths up to a size.
    Verify(VerifyArgs),
    /// Independent evaluation oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args, Debug)]
struct ExpandArgs {
    /// Heights m_1,…,m_n, e.g. 2,2,4,4,5
    #[arg(long, value_parser = parse_heights)]
    heights: DyckPath,
    #[arg(long, value_enum, default_value = "X")]
    what: What,
    #[arg(long, value_enum, default_value = "P")]
    basis: BasisArg,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum What {
    #[value(name = "X")]
    X,
    #[value(name = "LLT")]
    Llt,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    #[value(name = "m")]
    M,
    #[value(name = "s")]
    S,
    #[value(name = "P")]
    P,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::M => Basis::Monomial,
            BasisArg::S => Basis::Schur,
            BasisArg::P => Basis::HlP,
        }
    }
}

#[derive(Args, Debug)]
struct RookArgs {
    #[arg(long, value_parser = parse_heights)]
    heights: DyckPath,
    /// Restrict to placements of this type, e.g. 3,2
    #[arg(long = "type", value_parser = parse_partition)]
    type_: Option<Partition>,
    /// Print every placement, not only the polynomials.
    #[arg(long)]
    list: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ListDyckArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// main, modular, mult, llt, principal, xm or all
    #[arg(long, value_parser = parse_identity_set)]
    identity: IdentitySet,
    #[arg(long)]
    n_max: usize,
    /// Worker threads; output does not depend on it.
    #[arg(long)]
    jobs: Option<usize>,
    /// Emit one JSON report per line.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Debug)]
struct IdentitySet(Vec<Identity>);

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Evaluate P_μ(x; q) by symmetrization at exact rational points.
    Hl(OracleHlArgs),
}

#[derive(Args, Debug)]
struct OracleHlArgs {
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    /// Distinct rationals, e.g. 1,2,1/3
    #[arg(long, value_parser = parse_rational, value_delimiter = ',', required = true)]
    xs: Vec<BigRational>,
    #[arg(long, value_parser = parse_rational)]
    q: BigRational,
}

fn parse_heights(s: &str) -> Result<DyckPath, String> {
    s.parse().map_err(|e: hallrook::Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: hallrook::Error| e.to_string())
}

fn parse_identity_set(s: &str) -> Result<IdentitySet, String> {
    if s == "all" {
        return Ok(IdentitySet(Identity::ALL.to_vec()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<Identity>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()
        .map(IdentitySet)
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a rational number"))
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

fn execute(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Expand(a) => expand(a, out),
        Command::Rook(a) => rook(a, out),
        Command::ListDyck(a) => list_dyck(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Oracle(OracleCommand::Hl(a)) => oracle_hl(a, out),
    }
}

/// Rows `label: value` with labels right-aligned.
fn write_table(out: &mut dyn Write, rows: &[(String, String)]) -> std::io::Result<()> {
    let width = rows
        .iter()
        .map(|(l, _)| l.chars().count())
        .max()
        .unwrap_or(0);
    for (label, value) in rows {
        writeln!(out, "{label:>width$}: {value}")?;
    }
    Ok(())
}

fn expand(a: ExpandArgs, out: &mut dyn Write) -> CmdResult {
    let f = match a.what {
        What::X => chromatic_qsym(&a.heights),
        What::Llt => llt_poly(&a.heights),
    };
    let f: SymFunc = f.to_basis(a.basis.into());
    if a.json {
        writeln!(out, "{}", serde_json::to_string(&f)?)?;
    } else {
        let rows: Vec<_> = f
            .terms()
            .map(|(p, c)| (p.to_string(), c.to_string()))
            .collect();
        writeln!(out, "# {} basis={}", a.heights, f.basis().symbol())?;
        write_table(out, &rows)?;
    }
    Ok(EXIT_OK)
}

fn rook(a: RookArgs, out: &mut dyn Write) -> CmdResult {
    let gamma = &a.heights;
    if let Some(t) = &a.type_ {
        if t.size() != gamma.n() {
            return Err(format!("--type {t} is not a partition of {}", gamma.n()).into());
        }
    }
    let keep = |p: &Partition| a.type_.as_ref().is_none_or(|t| t == p);
    let placements: Vec<_> = weighted_placements(gamma, FcRule::Gated)
        .into_iter()
        .filter(|w| keep(&w.type_partition))
        .collect();
    let polys: Vec<_> = r_polys(gamma)
        .into_iter()
        .filter(|(mu, r)| keep(mu) && (a.type_.is_some() || !r.is_zero()))
        .collect();
    if a.json {
        let mut doc = json!({
            "heights": gamma.heights(),
            "r_poly": polys
                .iter()
                .map(|(mu, r)| json!({"type": mu, "poly": r}))
                .collect::<Vec<_>>(),
        });
        if a.list {
            doc["placements"] = serde_json::to_value(&placements)?;
        }
        writeln!(out, "{doc}")?;
        return Ok(EXIT_OK);
    }
    if a.list {
        for w in &placements {
            writeln!(
                out,
                "{}  type={}  fc={}",
                serde_json::to_string(&w.rooks)?,
                w.type_partition,
                w.fc
            )?;
        }
    }
    let rows: Vec<_> = polys
        .iter()
        .map(|(mu, r)| (format!("r{mu}"), r.to_string()))
        .collect();
    write_table(out, &rows)?;
    Ok(EXIT_OK)
}

fn list_dyck(a: ListDyckArgs, out: &mut dyn Write) -> CmdResult {
    for g in enumerate_dyck(a.n) {
        if a.json {
            writeln!(out, "{}", json!({"heights": g.heights(), "area": g.area()}))?;
        } else {
            writeln!(out, "{}  area={}", g.to_text(), g.area())?;
        }
    }
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let mut cfg = SweepConfig::new(a.n_max, a.identity.0);
    cfg.jobs = a.jobs;
    let reports = sweep(&cfg);
    for r in &reports {
        if a.json {
            writeln!(out, "{}", serde_json::to_string(r)?)?;
        } else {
            writeln!(out, "{r}")?;
        }
    }
    let counts = tally(&reports);
    if !a.json {
        for (id, (ok, bad)) in &counts {
            writeln!(out, "# {id}: {ok} verified, {bad} counterexamples")?;
        }
    }
    let failed = reports.iter().any(|r| r.status == Status::Counterexample);
    Ok(if failed { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
}

fn oracle_hl(a: OracleHlArgs, out: &mut dyn Write) -> CmdResult {
    let v = hl_direct_oracle(&a.mu, &a.xs, &a.q)?;
    writeln!(out, "{v}")?;
    Ok(EXIT_OK)
}
