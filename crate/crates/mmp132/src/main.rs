use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use mmp132::cache::{OracleSource, TableCache};
use mmp132::json::{int_string, poly_strings, RouteTableJson, RouteTableRowJson, SeriesJson};
use mmp132::oeis::{check_claims, validate_id, Client};
use mmp132::shared::SharedGfEngine;
use mmp132::suites::{self, CheckStatus, Suite, SuiteConfig};
use mmp132::{Error, CACHE_DIR_ENV};
use mmp132_core::catalog::known_misprints;
use mmp132_core::{GfKey, PatternSpec, Permutation, XPoly, DEFAULT_ENUMERATION_CAP, DEFAULT_ORDER};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;

/// Distribution polynomials of quadrant marked mesh patterns over
/// 132-avoiding permutations.
#[derive(Debug, Parser)]
#[command(name = "mmp132", version)]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Truncation order of the series route.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    order: usize,

    /// Directory for cached oracle tables and OEIS downloads.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,

    /// Never touch the network; OEIS data comes from cache or fixtures.
    #[arg(long, global = true)]
    offline: bool,

    /// Largest n for which S_n(132) is enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Oracle,
    Gf,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of positions of a permutation matching a pattern.
    Count {
        /// One-line notation: "471569283", or comma separated for n >= 10.
        perm: String,
        /// "a,b,c,d"; each entry a natural number or "e" for an empty quadrant.
        pattern: String,
    },
    /// Rows Q_0(x), ..., Q_n(x).
    Table {
        /// "a,b,c,d", as for count.
        pattern: String,
        /// Last row printed.
        n: usize,
        /// Defaults to "both" for shapes with a generating function, else "oracle".
        #[arg(value_enum)]
        route: Option<RouteArg>,
    },
    /// The generating function Q(t, x) as a truncated series.
    Gf {
        /// "a,b,c,d" with all entries natural and at most two of them nonzero.
        pattern: String,
        /// Defaults to --order.
        #[arg(value_name = "ORDER")]
        up_to: Option<usize>,
        /// Print Q_n(0), n = 0..=order.
        #[arg(long)]
        x0: bool,
    },
    /// Run a verification suite.
    Verify {
        /// oracle-gf, closed-forms, catalog, identities, oeis or all.
        suite: String,
        /// Check against enumeration up to n = 10 instead of 8.
        #[arg(long)]
        deep: bool,
    },
    /// Fetch an OEIS sequence, or compare every registered claim.
    Oeis {
        /// An A-number; without one, every registered claim is checked.
        id: Option<String>,
    },
}

/// Failure carrying its exit code.
struct Fail {
    code: u8,
    message: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        use mmp132_core::Error as Core;
        let code = match &e {
            Error::Core(Core::UnsupportedPattern { .. }) | Error::Core(Core::NotCovered(_)) => {
                EXIT_UNSUPPORTED
            }
            Error::Core(Core::InvalidPattern(_))
            | Error::Core(Core::InvalidPermutation(_))
            | Error::Core(Core::DuplicateEntry(_))
            | Error::Core(Core::CapExceeded { .. })
            | Error::Core(Core::OrderExceeded { .. })
            | Error::BadInteger(_)
            | Error::BadOeisId(_)
            | Error::UnknownSuite(_) => EXIT_USAGE,
            _ => EXIT_MISMATCH,
        };
        Fail {
            code,
            message: e.to_string(),
        }
    }
}

impl From<mmp132_core::Error> for Fail {
    fn from(e: mmp132_core::Error) -> Self {
        Error::from(e).into()
    }
}

impl From<serde_json::Error> for Fail {
    fn from(e: serde_json::Error) -> Self {
        Error::from(e).into()
    }
}

type Outcome = Result<bool, Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_MISMATCH),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Count { perm, pattern } => count(cli, perm, pattern),
        Command::Table { pattern, n, route } => table(cli, pattern, *n, *route),
        Command::Gf { pattern, up_to, x0 } => gf(cli, pattern, up_to.unwrap_or(cli.order), *x0),
        Command::Verify { suite, deep } => verify(cli, suite, *deep),
        Command::Oeis { id } => oeis(cli, id.as_deref()),
    }
}

fn parse_pattern(s: &str) -> Result<PatternSpec, Fail> {
    Ok(s.parse::<PatternSpec>()?)
}

fn parse_perm(s: &str) -> Result<Permutation, Fail> {
    let bad = || Fail::from(mmp132_core::Error::InvalidPermutation(s.to_string()));
    let values: Vec<u32> = if s.contains([',', ' ']) {
        s.split([',', ' '])
            .filter(|p| !p.is_empty())
            .map(|p| p.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?
    } else {
        s.chars()
            .map(|c| c.to_digit(10).ok_or_else(bad))
            .collect::<Result<_, _>>()?
    };
    Ok(Permutation::new(values)?)
}

fn cache(cli: &Cli) -> Option<TableCache> {
    cli.cache_dir.as_ref().map(TableCache::new)
}

fn count(cli: &Cli, perm: &str, pattern: &str) -> Outcome {
    let p = parse_pattern(pattern)?;
    let sigma = parse_perm(perm)?;
    let c = sigma.mmp_count(&p);
    match cli.format.unwrap_or(Format::Text) {
        Format::Json => println!("{}", serde_json::to_string(&c.to_string())?),
        Format::Csv | Format::Text => println!("{c}"),
    }
    Ok(true)
}

fn table(cli: &Cli, pattern: &str, n_max: usize, route: Option<RouteArg>) -> Outcome {
    let p = parse_pattern(pattern)?;
    let supported = GfKey::for_pattern(&p);
    let route = match (route, &supported) {
        (Some(r), _) => r,
        (None, Ok(_)) => RouteArg::Both,
        (None, Err(_)) => RouteArg::Oracle,
    };
    if route != RouteArg::Oracle {
        supported?;
    }

    let oracle = match route {
        RouteArg::Gf => None,
        _ => Some(OracleSource::new(cache(cli), cli.cap).table(&p, n_max)?),
    };
    let series = match route {
        RouteArg::Oracle => None,
        _ => Some(SharedGfEngine::new(n_max).series(&p)?),
    };
    let rows: Vec<(usize, XPoly, Option<bool>)> = (0..=n_max)
        .map(|n| {
            let o = oracle
                .as_ref()
                .map(|t| t.row(n).expect("row present").clone());
            let g = series.as_ref().map(|s| s.coeffs()[n].clone());
            match (o, g) {
                (Some(o), Some(g)) => {
                    let agree = o == g;
                    (n, o, Some(agree))
                }
                (Some(r), None) | (None, Some(r)) => (n, r, None),
                (None, None) => unreachable!("at least one route runs"),
            }
        })
        .collect();

    for t in known_misprints() {
        if (t.pattern == p || t.pattern == p.inverse_symmetric()) && t.n <= n_max {
            let row = &rows[t.n].1;
            eprintln!(
                "note: the printed coefficient of x^{} t^{} for ({}) is {}; the computed value is {}",
                t.r,
                t.n,
                t.pattern,
                t.printed,
                row.coeff(t.r)
            );
        }
    }

    let route_name = match route {
        RouteArg::Oracle => "oracle",
        RouteArg::Gf => "gf",
        RouteArg::Both => "both",
    };
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => {
            let json = RouteTableJson {
                pattern: p.to_string(),
                route: route_name.to_string(),
                rows: rows
                    .iter()
                    .map(|(n, r, agree)| RouteTableRowJson {
                        n: *n,
                        coeffs: poly_strings(r),
                        agree: *agree,
                    })
                    .collect(),
            };
            println!("{}", serde_json::to_string(&json)?);
        }
        Format::Csv => {
            let width = rows
                .iter()
                .map(|(_, r, _)| r.coeffs().len())
                .max()
                .unwrap_or(1)
                .max(1);
            let mut header = vec!["n".to_string()];
            header.extend((0..width).map(|i| format!("c{i}")));
            if route == RouteArg::Both {
                header.push("agree".into());
            }
            println!("{}", header.join(","));
            for (n, r, agree) in &rows {
                let mut cells = vec![n.to_string()];
                cells.extend((0..width).map(|i| int_string(&r.coeff(i))));
                if let Some(a) = agree {
                    cells.push(a.to_string());
                }
                println!("{}", cells.join(","));
            }
        }
        Format::Text => {
            for (n, r, agree) in &rows {
                match agree {
                    Some(a) => println!("{n}: {r}  agree={a}"),
                    None => println!("{n}: {r}"),
                }
            }
        }
    }
    Ok(rows.iter().all(|(_, _, a)| a.unwrap_or(true)))
}

fn gf(cli: &Cli, pattern: &str, order: usize, x0: bool) -> Outcome {
    let p = parse_pattern(pattern)?;
    let series = SharedGfEngine::new(order).series(&p)?;
    let format = cli
        .format
        .unwrap_or(if x0 { Format::Text } else { Format::Json });
    if x0 {
        let terms: Vec<BigInt> = series.coeffs().iter().map(|r| r.coeff(0)).collect();
        match format {
            Format::Json => {
                let strings: Vec<String> = terms.iter().map(int_string).collect();
                println!("{}", serde_json::to_string(&strings)?);
            }
            Format::Csv => {
                println!("n,value");
                for (n, v) in terms.iter().enumerate() {
                    println!("{n},{v}");
                }
            }
            Format::Text => {
                let strings: Vec<String> = terms.iter().map(int_string).collect();
                println!("{}", strings.join(","));
            }
        }
        return Ok(true);
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string(&SeriesJson::from(&series))?),
        Format::Csv => {
            let width = series
                .coeffs()
                .iter()
                .map(|r| r.coeffs().len())
                .max()
                .unwrap_or(1)
                .max(1);
            let header: Vec<String> = std::iter::once("n".to_string())
                .chain((0..width).map(|i| format!("c{i}")))
                .collect();
            println!("{}", header.join(","));
            for (n, r) in series.coeffs().iter().enumerate() {
                let cells: Vec<String> = std::iter::once(n.to_string())
                    .chain((0..width).map(|i| int_string(&r.coeff(i))))
                    .collect();
                println!("{}", cells.join(","));
            }
        }
        Format::Text => println!("{series}"),
    }
    Ok(true)
}

fn verify(cli: &Cli, suite: &str, deep: bool) -> Outcome {
    let suite: Suite = suite.parse()?;
    let base = if deep {
        SuiteConfig::deep()
    } else {
        SuiteConfig::default()
    };
    let config = SuiteConfig {
        order: cli.order,
        cap: cli.cap,
        cache: cache(cli),
        offline: cli.offline,
        ..base
    };
    let lines = suites::run(suite, &config)?;
    match cli.format.unwrap_or(Format::Text) {
        Format::Json => println!("{}", serde_json::to_string(&lines)?),
        Format::Csv => {
            println!("suite,status,subject,detail");
            for l in &lines {
                println!(
                    "{},{},{},{}",
                    l.suite,
                    l.status.as_str(),
                    csv_field(&l.subject),
                    csv_field(&l.detail)
                );
            }
        }
        Format::Text => {
            for l in &lines {
                println!("{l}");
            }
            let count = |s| lines.iter().filter(|l| l.status == s).count();
            println!(
                "{} checks: {} passed, {} failed, {} errata",
                lines.len(),
                count(CheckStatus::Pass),
                count(CheckStatus::Fail),
                count(CheckStatus::Erratum)
            );
        }
    }
    Ok(suites::all_passed(&lines))
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn oeis(cli: &Cli, id: Option<&str>) -> Outcome {
    let client = Client::new(cli.cache_dir.clone(), cli.offline);
    let format = cli.format.unwrap_or(Format::Text);
    let Some(id) = id else {
        let engine = SharedGfEngine::new(cli.order);
        let mut ok = true;
        for (claim, result) in check_claims(&client, &engine) {
            match result {
                Ok(r) => {
                    ok &= r.report.is_match;
                    let status = if r.report.is_match {
                        "match"
                    } else {
                        "mismatch"
                    };
                    println!(
                        "{} ({}): {status}, overlap {}, shift {}, source {}",
                        claim.id,
                        claim.pattern,
                        r.report.overlap,
                        r.report.shift,
                        r.source.as_str()
                    );
                }
                Err(e) => {
                    ok = false;
                    println!("{} ({}): {e}", claim.id, claim.pattern);
                }
            }
        }
        return Ok(ok);
    };
    validate_id(id)?;
    let seq = client.fetch(id)?;
    let terms: Vec<String> = seq.terms.iter().map(int_string).collect();
    match format {
        Format::Json => {
            let json = mmp132::json::OeisFixtureJson {
                id: seq.id.clone(),
                offset: seq.offset,
                terms,
            };
            println!("{}", serde_json::to_string(&json)?);
        }
        Format::Csv => {
            println!("n,value");
            for (i, t) in terms.iter().enumerate() {
                println!("{},{t}", seq.offset + i as i64);
            }
        }
        Format::Text => {
            println!(
                "{} (offset {}, source {})",
                seq.id,
                seq.offset,
                seq.source.as_str()
            );
            println!("{}", terms.join(","));
        }
    }
    Ok(true)
}
