use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use charvar::golden::{Table, GENERA};
use charvar::invariants::{self, Kind};
use charvar::output::{self, Format};
use charvar::verify::{run_suite, Suite};
use charvar::{Error, Group, Side};

const DEFAULT_MAX_GENUS: u32 = 16;

#[derive(Parser)]
#[command(
    name = "charvar",
    version,
    about = "Exact invariants of rank-two character varieties and Higgs moduli spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one invariant.
    Compute(ComputeArgs),
    /// Run verification suites over a range of genera.
    Verify(VerifyArgs),
    /// Print low-genus tables.
    Table(TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantArg {
    Ie,
    Ip,
    P,
    #[value(name = "e-t")]
    ET,
    #[value(name = "ie-var")]
    IeVar,
    #[value(name = "ip-var")]
    IpVar,
    Euler,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Sl2,
    Pgl2,
    Gl2,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Betti,
    Dolbeault,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Palindromy,
    Purity,
    Tables,
    Identities,
    Expansion,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormatArg {
    Text,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichArg {
    #[value(name = "ie-sl2")]
    IeSl2,
    #[value(name = "ip-sl2")]
    IpSl2,
    #[value(name = "ip-minus-p")]
    IpMinusP,
    Euler,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_enum)]
    invariant: InvariantArg,
    #[arg(long, value_enum)]
    group: GroupArg,
    /// Required for ie, e-t and ie-var.
    #[arg(long, value_enum)]
    side: Option<SideArg>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    genus: u32,
    /// Keep only terms of total degree at most D.
    #[arg(long, value_name = "D")]
    truncate: Option<i64>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
    genus_min: u32,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(2..))]
    genus_max: u32,
}

#[derive(Args)]
struct TableArgs {
    /// Reproduce the printed low-genus rows.
    #[arg(long, conflicts_with = "genus_range")]
    paper: bool,
    #[arg(long, value_enum)]
    which: WhichArg,
    /// Inclusive range such as 2..6.
    #[arg(long, value_parser = parse_range)]
    genus_range: Option<RangeInclusive<u32>>,
    #[arg(long, value_enum, default_value = "text")]
    format: TableFormatArg,
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (a, b) = s.split_once("..").ok_or("expected a range like 2..6")?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u32 = a
        .trim()
        .parse()
        .map_err(|_| format!("bad lower bound {a:?}"))?;
    let b: u32 = b
        .trim()
        .parse()
        .map_err(|_| format!("bad upper bound {b:?}"))?;
    if a < 2 || a > b {
        return Err(format!("need 2 <= start <= end, got {a}..{b}"));
    }
    Ok(a..=b)
}

/// Failure of a subcommand together with its exit status.
enum Failure {
    Usage(String),
    Unsupported(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsupportedCombination(_)
            | Error::UnsupportedGroup(_)
            | Error::UnsupportedKind(_) => Failure::Unsupported(e.to_string()),
            Error::MissingSide(_) | Error::InvalidGenus { .. } | Error::Parse(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Failed(e.to_string()),
        }
    }
}

/// Writes one line to stdout. A closed pipe ends the process quietly.
fn emit(line: impl std::fmt::Display) {
    use std::io::Write;
    if let Err(e) = writeln!(std::io::stdout().lock(), "{line}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

fn max_genus() -> Result<u32, Failure> {
    match std::env::var("CHARVAR_MAX_GENUS") {
        Err(_) => Ok(DEFAULT_MAX_GENUS),
        Ok(s) => s.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "CHARVAR_MAX_GENUS must be a non-negative integer, got {s:?}"
            ))
        }),
    }
}

fn check_cap(genera: &RangeInclusive<u32>) -> Result<(), Failure> {
    let cap = max_genus()?;
    if *genera.end() > cap {
        return Err(Failure::Usage(format!(
            "genus {} exceeds CHARVAR_MAX_GENUS = {cap}",
            genera.end()
        )));
    }
    Ok(())
}

fn kind(a: InvariantArg) -> Kind {
    match a {
        InvariantArg::Ie => Kind::IE,
        InvariantArg::Ip => Kind::IP,
        InvariantArg::P => Kind::P,
        InvariantArg::ET => Kind::ET,
        InvariantArg::IeVar => Kind::IEVar,
        InvariantArg::IpVar => Kind::IPVar,
        InvariantArg::Euler => Kind::Euler,
    }
}

fn group(a: GroupArg) -> Group {
    match a {
        GroupArg::Sl2 => Group::SL2,
        GroupArg::Pgl2 => Group::PGL2,
        GroupArg::Gl2 => Group::GL2,
    }
}

fn side(a: SideArg) -> Side {
    match a {
        SideArg::Betti => Side::Betti,
        SideArg::Dolbeault => Side::Dolbeault,
    }
}

fn format(a: FormatArg) -> Format {
    match a {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
        FormatArg::Latex => Format::Latex,
    }
}

fn compute(args: &ComputeArgs) -> Result<(), Failure> {
    let mut r = invariants::compute(
        kind(args.invariant),
        group(args.group),
        args.side.map(side),
        args.genus,
    )?;
    if let Some(d) = args.truncate {
        r.poly = r.poly.truncate(d);
    }
    let text = output::render(&r, format(args.format));
    emit(text.trim_end_matches('\n'));
    Ok(())
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    if args.genus_min > args.genus_max {
        return Err(Failure::Usage(format!(
            "--genus-min {} exceeds --genus-max {}",
            args.genus_min, args.genus_max
        )));
    }
    let genera = args.genus_min..=args.genus_max;
    check_cap(&genera)?;
    let suites: Vec<Suite> = match args.suite {
        SuiteArg::Palindromy => vec![Suite::Palindromy],
        SuiteArg::Purity => vec![Suite::Purity],
        SuiteArg::Tables => vec![Suite::Tables],
        SuiteArg::Identities => vec![Suite::Identities],
        SuiteArg::Expansion => vec![Suite::Expansion],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let (mut total, mut failed) = (0, 0);
    for suite in suites {
        for check in run_suite(suite, genera.clone()) {
            emit(&check);
            total += 1;
            failed += usize::from(!check.passed());
        }
    }
    emit(format!("{total} checks, {failed} failed"));
    if failed > 0 {
        return Err(Failure::Failed(format!(
            "{failed} of {total} checks failed"
        )));
    }
    Ok(())
}

fn table_kind(w: WhichArg) -> Option<Table> {
    match w {
        WhichArg::IeSl2 => Some(Table::IeSl2),
        WhichArg::IpSl2 => Some(Table::IpSl2),
        WhichArg::IpMinusP => Some(Table::IpMinusP),
        WhichArg::Euler => None,
    }
}

fn table_row(which: WhichArg, g: u32, truncated: bool, latex: bool) -> Result<String, Failure> {
    let poly = match which {
        WhichArg::IeSl2 => invariants::ie_betti(Group::SL2, g)?.poly,
        WhichArg::IpSl2 => invariants::ip(Group::SL2, g)?.poly,
        WhichArg::IpMinusP => {
            invariants::ip(Group::SL2, g)?.poly - invariants::p_ordinary_sl2(g)?.poly
        }
        WhichArg::Euler => {
            let sl2 = invariants::euler_char(Group::SL2, g)?;
            let pgl2 = invariants::euler_char(Group::PGL2, g)?;
            return Ok(if latex {
                format!("{g} & {sl2} & {pgl2} \\\\")
            } else {
                format!("g={g}: sl2 {sl2}, pgl2 {pgl2}")
            });
        }
    };
    let cut = truncated
        .then(|| table_kind(which).and_then(|t| t.printed_through(g)))
        .flatten();
    let poly = cut.map_or(poly.clone(), |d| poly.truncate(d));
    Ok(match (latex, cut.is_some()) {
        (false, false) => format!("g={g}: {poly}"),
        (false, true) => format!("g={g}: {poly} + ..."),
        (true, false) => format!("g={g}: & \\quad {}\\\\", output::to_latex(&poly)),
        (true, true) => format!("g={g}: & \\quad {} + \\cdots\\\\", output::to_latex(&poly)),
    })
}

fn table(args: &TableArgs) -> Result<(), Failure> {
    let genera = match (&args.genus_range, args.paper) {
        (Some(r), false) => r.clone(),
        (None, true) if args.which != WhichArg::Euler => GENERA,
        (None, true) => {
            return Err(Failure::Usage(
                "there is no printed euler table; use --genus-range".into(),
            ))
        }
        _ => {
            return Err(Failure::Usage(
                "table needs --paper or --genus-range".into(),
            ))
        }
    };
    check_cap(&genera)?;
    let latex = matches!(args.format, TableFormatArg::Latex);
    let rows = charvar::sweep::map_genera(genera, |g| table_row(args.which, g, args.paper, latex));
    let euler = args.which == WhichArg::Euler;
    if latex {
        emit(if euler {
            "\\begin{tabular}{rrr}\ng & sl2 & pgl2 \\\\"
        } else {
            "\\begin{align*}"
        });
    }
    for row in rows {
        emit(row?);
    }
    if latex {
        emit(if euler {
            "\\end{tabular}"
        } else {
            "\\end{align*}"
        });
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Verify(a) => verify(a),
        Command::Table(a) => table(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Unsupported(m)) => {
            eprintln!("unsupported: {m}");
            ExitCode::from(3)
        }
    }
}
