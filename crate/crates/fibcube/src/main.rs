use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fibcube::cache::{Cache, CACHE_ENV};
use fibcube::export::{self, GraphFormat};
use fibcube::grid::{run_grid, GridSpec, DEFAULT_BUDGET};
use fibcube::report::Format;
use fibcube::{claims, register, table, Error, Result};
use fibcube_core::{
    build_graph, decode, encode, find_isomorphism, CubeParams, Family, Word, DEFAULT_ISO_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "fibcube",
    version,
    about = "Generate and verify Fibonacci (p,r)-cubes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the graph of one cube.
    Gen {
        #[command(flatten)]
        cube: CubeArgs,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print tables of the numeration sequence or of cube invariants.
    #[command(subcommand)]
    Table(TableCommand),
    /// Check registered claims against brute force over a grid.
    Verify(VerifyArgs),
    /// Print the O-word with the given code.
    Encode { p: u32, r: u32, n: u32, value: u64 },
    /// Print the code of an O-word.
    Decode { p: u32, r: u32, word: Word },
    /// Decide whether two cubes are isomorphic.
    Iso {
        /// Two cubes, each given as `FAMILY P R N`.
        #[arg(num_args = 8, required = true, value_names = ["FAMILY", "P", "R", "N", "FAMILY", "P", "R", "N"])]
        cubes: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// List registered claims and known discrepancies.
    Claims,
}

#[derive(Args)]
struct CubeArgs {
    family: Family,
    p: u32,
    r: u32,
    n: u32,
}

impl CubeArgs {
    fn params(&self) -> Result<CubeParams> {
        Ok(CubeParams::new(self.family, self.p, self.r, self.n)?)
    }
}

#[derive(Subcommand)]
enum TableCommand {
    /// phi(0..=i_max) for one (p, r).
    Phi {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 12)]
        i_max: u32,
    },
    /// Order, size, radius, diameter, center size, degrees for a range of n.
    Invariants {
        family: Family,
        p: u32,
        r: u32,
        #[arg(long, value_parser = parse_range, default_value = "1..10")]
        n: RangeInclusive<u32>,
        /// Also compute vertex connectivity.
        #[arg(long)]
        connectivity: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Every registered claim (the default when no claim is named).
    #[arg(long, conflicts_with_all = ["claim", "claims"])]
    all: bool,
    #[arg(long)]
    claim: Option<String>,
    /// Comma-separated claim ids.
    #[arg(long, value_delimiter = ',')]
    claims: Vec<String>,
    #[arg(long, value_delimiter = ',')]
    families: Option<Vec<Family>>,
    /// `lo..hi` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range)]
    p: Option<RangeInclusive<u32>>,
    #[arg(long, value_parser = parse_range)]
    r: Option<RangeInclusive<u32>>,
    #[arg(long, value_parser = parse_range)]
    n: Option<RangeInclusive<u32>>,
    /// Skip cubes with more vertices than this.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Cache file.
    #[arg(long, env = CACHE_ENV)]
    cache: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Add connectivity and I-radius probes.
    #[arg(long)]
    probes: bool,
    /// Check only grid points, not the claims' own fixture points.
    #[arg(long)]
    no_fixtures: bool,
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((lo, hi)) => {
            let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
            if lo > hi {
                return Err(format!("empty range {s}"));
            }
            Ok(lo..=hi)
        }
        None => num(s).map(|v| v..=v),
    }
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::io(path, e)),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Error::io("<stdout>", e)),
    }
}

fn verify(args: VerifyArgs) -> Result<bool> {
    let mut spec = GridSpec {
        budget: args.budget,
        fixtures: !args.no_fixtures,
        probes: args.probes,
        ..GridSpec::default()
    };
    if let Some(f) = args.families {
        spec.families = f;
    }
    spec.p = args.p.unwrap_or(spec.p);
    spec.r = args.r.unwrap_or(spec.r);
    spec.n = args.n.unwrap_or(spec.n);
    let ids: Vec<&str> = args
        .claim
        .iter()
        .chain(&args.claims)
        .map(String::as_str)
        .collect();
    if !ids.is_empty() {
        spec = spec.with_claims(&ids)?;
    }
    let cache = match &args.cache {
        Some(path) => Cache::open(path)?,
        None => Cache::in_memory(),
    };
    let report = run_grid(&spec, &cache)?;
    cache.flush()?;
    write_out(args.out.as_ref(), &report.render(args.format))?;
    Ok(report.passed())
}

fn cube_from(words: &[String]) -> Result<CubeParams> {
    let bad = |what: &str| Error::Usage(format!("invalid {what} in {words:?}"));
    let family: Family = words[0].parse()?;
    let num = |i: usize, what| words[i].parse::<u32>().map_err(|_| bad(what));
    Ok(CubeParams::new(
        family,
        num(1, "p")?,
        num(2, "r")?,
        num(3, "n")?,
    )?)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen {
            cube,
            format,
            out,
            budget,
        } => {
            let g = build_graph(&cube.params()?, budget)?;
            write_out(out.as_ref(), &export::render(&g, format))?;
        }
        Command::Table(TableCommand::Phi { p, r, i_max }) => {
            write_out(None, &table::render_phi(p, r, i_max)?)?;
        }
        Command::Table(TableCommand::Invariants {
            family,
            p,
            r,
            n,
            connectivity,
            json,
            budget,
        }) => {
            let rows = table::invariant_rows(family, p, r, n, budget, connectivity)?;
            let text = if json {
                serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n"
            } else {
                table::render_invariants(&rows)
            };
            write_out(None, &text)?;
        }
        Command::Verify(args) => {
            if !verify(args)? {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Encode { p, r, n, value } => {
            let w = encode(&CubeParams::o(p, r, n)?, value)?;
            println!("{w}");
        }
        Command::Decode { p, r, word } => {
            println!(
                "{}",
                decode(&CubeParams::o(p, r, word.len() as u32)?, &word)?
            );
        }
        Command::Iso { cubes, budget } => {
            let (a, b) = (cube_from(&cubes[..4])?, cube_from(&cubes[4..])?);
            let (ga, gb) = (build_graph(&a, budget)?, build_graph(&b, budget)?);
            match find_isomorphism(&ga, &gb, DEFAULT_ISO_BUDGET)? {
                Some(map) => {
                    println!("isomorphic");
                    for (v, &u) in map.iter().enumerate() {
                        println!("{} {}", ga.word(v), gb.word(u));
                    }
                }
                None => println!("not isomorphic"),
            }
        }
        Command::Claims => {
            for c in claims::registry() {
                println!("{:<24} {}", c.id, c.summary);
            }
            println!("\nknown discrepancies:");
            for d in register::KNOWN_DISCREPANCIES {
                println!("{:<28} {:<22} {}", d.id, d.claim_id, d.note);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fibcube: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition() {
        Cli::command().debug_assert();
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..5"), Ok(2..=5));
        assert_eq!(parse_range("2..=5"), Ok(2..=5));
        assert_eq!(parse_range("7"), Ok(7..=7));
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("x").is_err());
    }
}
