use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use multibraid::classifier::{self, classify_deleted_a3};
use multibraid::model::{ClassificationResult, Multiplicity, TwoValuedPattern, Verdict};
use multibraid::oracle::{DegreeDims, LocalGeneration, Oracle, OracleConfig};
use multibraid::resolution::{self, BettiTable, EulerCheck};
use multibraid::survey;

#[derive(Parser)]
#[command(
    name = "multibraid",
    version,
    about = "Freeness of multiplicities on the A3 braid arrangement"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one multiplicity (a,b,c,d,e,f on edges 01,02,03,12,13,23).
    Classify {
        #[arg(long)]
        m: Multiplicity,
        /// Cross-check with the syzygy oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
        /// Oracle degree bound (default: sum of the two largest entries plus one).
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Classify every multiplicity in {1..max}^6 and write CSV.
    Sweep {
        #[arg(long)]
        max: u32,
        /// Also run the oracle on {1..oracle-max}^6.
        #[arg(long, default_value_t = 0)]
        oracle_max: u32,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Free/non-free grid of a two-valued pattern over (r, s).
    Grid {
        /// single-edge, adjacent-pair, star-triangle, path, matching, or a word like srrrrr.
        #[arg(long, default_value = "star-triangle")]
        pattern: String,
        #[arg(long, default_value_t = 12)]
        max: u32,
        #[arg(long)]
        rmax: Option<u32>,
        #[arg(long)]
        smax: Option<u32>,
        #[arg(long, default_value_t = 0)]
        oracle_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Free resolution of J(0123) for a free ANN multiplicity.
    Resolve {
        #[arg(long)]
        m: Multiplicity,
        #[arg(long)]
        json: bool,
        /// Last degree of the Hilbert-function check (default 2*max(m)+4).
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Deleted A3 with multiplicities a,b,c,d,e on edges 01,02,03,12,13.
    Deleted {
        #[arg(long, value_delimiter = ',')]
        m: Vec<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Run only the syzygy oracle and print per-degree dimensions.
    Oracle {
        #[arg(long)]
        m: Multiplicity,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Csv,
    Svg,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("MULTIBRAID_THREADS") {
        let n: usize = v
            .parse()
            .with_context(|| format!("MULTIBRAID_THREADS must be a positive integer, got {v:?}"))?;
        if n == 0 {
            bail!("MULTIBRAID_THREADS must be a positive integer, got 0");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    Ok(())
}

fn oracle_with(max_degree: Option<u32>) -> Oracle {
    Oracle::new(OracleConfig {
        max_degree,
        extra_degrees: 0,
    })
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Classify {
            m,
            oracle,
            json,
            max_degree,
        } => cmd_classify(m, oracle, json, max_degree),
        Command::Sweep {
            max,
            oracle_max,
            max_degree,
            out,
        } => {
            if max == 0 {
                bail!("--max must be >= 1");
            }
            let rows = survey::sweep(max, oracle_max, &oracle_with(max_degree));
            emit(out.as_ref(), &survey::sweep_csv(&rows))?;
            let disagreements = rows.iter().filter(|r| r.agree() == Some(false)).count();
            if disagreements > 0 {
                eprintln!("{disagreements} disagreements between classifier and oracle");
            }
            Ok(())
        }
        Command::Grid {
            pattern,
            max,
            rmax,
            smax,
            oracle_max,
            format,
            out,
        } => {
            let pattern = TwoValuedPattern::by_name(&pattern)
                .or_else(|| TwoValuedPattern::from_word(&pattern))
                .with_context(|| format!("unknown pattern {pattern:?}"))?;
            let (rmax, smax) = (rmax.unwrap_or(max), smax.unwrap_or(max));
            if rmax == 0 || smax == 0 {
                bail!("grid bounds must be >= 1");
            }
            let g = survey::grid(&pattern, rmax, smax, oracle_max, &Oracle::default());
            let text = match format {
                Format::Ascii => g.to_ascii(),
                Format::Csv => g.to_csv(),
                Format::Svg => g.to_svg(),
                Format::Json => serde_json::to_string_pretty(&g)? + "\n",
            };
            emit(out.as_ref(), &text)
        }
        Command::Resolve {
            m,
            json,
            max_degree,
        } => cmd_resolve(m, json, max_degree),
        Command::Deleted { m, json } => {
            let [a, b, c, d, e] = <[u32; 5]>::try_from(m.as_slice())
                .map_err(|_| anyhow::anyhow!("expected 5 multiplicities"))?;
            let free = classify_deleted_a3(a, b, c, d, e)?;
            let verdict = if free {
                Verdict::Free
            } else {
                Verdict::NonFree
            };
            if json {
                println!(
                    "{}",
                    serde_json::json!({ "m": [a, b, c, d, e], "verdict": verdict })
                );
            } else {
                println!("{verdict}");
            }
            Ok(())
        }
        Command::Oracle {
            m,
            max_degree,
            json,
        } => {
            let m = m.validated()?;
            let oracle = oracle_with(max_degree);
            let bound = oracle.degree_bound(&m);
            let dims: Vec<DegreeDims> = (0..=bound).map(|d| oracle.degree_dims(&m, d)).collect();
            let result = oracle.is_locally_generated(&m, None);
            if json {
                #[derive(Serialize)]
                struct Report<'a> {
                    m: Multiplicity,
                    result: &'a LocalGeneration,
                    degrees: &'a [DegreeDims],
                }
                let r = Report {
                    m,
                    result: &result,
                    degrees: &dims,
                };
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                println!(
                    "{:>3} {:>8} {:>8} {:>8} {:>4}",
                    "d", "ambient", "global", "local", "gap"
                );
                for d in &dims {
                    println!(
                        "{:>3} {:>8} {:>8} {:>8} {:>4}",
                        d.degree,
                        d.ambient,
                        d.global,
                        d.local,
                        d.gap()
                    );
                }
                match result.gap {
                    None => println!("FREE (locally generated through degree {bound})"),
                    Some(g) => println!(
                        "NON-FREE (gap of dimension {} at degree {})",
                        g.dimension, g.degree
                    ),
                }
            }
            Ok(())
        }
    }
}

fn cmd_classify(
    m: Multiplicity,
    with_oracle: bool,
    json: bool,
    max_degree: Option<u32>,
) -> Result<()> {
    let result = classifier::classify(&m)?;
    let oracle = with_oracle.then(|| oracle_with(max_degree).is_locally_generated(&m, None));
    let oracle_verdict = oracle.map(|o| {
        if o.locally_generated {
            Verdict::Free
        } else {
            Verdict::NonFree
        }
    });
    let agree = oracle_verdict.map(|v| v == result.verdict());
    if json {
        #[derive(Serialize)]
        struct Report<'a> {
            m: Multiplicity,
            result: &'a ClassificationResult,
            #[serde(skip_serializing_if = "Option::is_none")]
            oracle: Option<LocalGeneration>,
            #[serde(skip_serializing_if = "Option::is_none")]
            agree: Option<bool>,
        }
        let r = Report {
            m,
            result: &result,
            oracle,
            agree,
        };
        println!("{}", serde_json::to_string_pretty(&r)?);
        return Ok(());
    }
    let mut line = match &result {
        ClassificationResult::Free { witness, exponents } => {
            let mut s = format!("FREE, witness: {witness}");
            if let Some([a, b, c, d]) = exponents {
                s.push_str(&format!(", exponents ({a},{b},{c},{d})"));
            }
            s
        }
        ClassificationResult::NonFree { certificate } => format!("NON-FREE ({certificate})"),
    };
    if let Some(o) = oracle {
        match o.gap {
            Some(g) => line.push_str(&format!(
                "; oracle gap at degree {} (dimension {})",
                g.degree, g.dimension
            )),
            None => line.push_str(&format!(
                "; oracle: locally generated through degree {}",
                o.max_degree
            )),
        }
        line.push_str(if agree == Some(true) {
            "; AGREE"
        } else {
            "; DISAGREE"
        });
    }
    println!("{line}");
    Ok(())
}

fn cmd_resolve(m: Multiplicity, json: bool, max_degree: Option<u32>) -> Result<()> {
    let table = resolution::betti_table(&m)?;
    let dmax = max_degree.unwrap_or(2 * m.values().iter().max().copied().unwrap_or(0) + 4);
    let check = resolution::euler_hf_check(&m, &table, dmax);
    if json {
        #[derive(Serialize)]
        struct Report<'a> {
            m: Multiplicity,
            table: &'a BettiTable,
            euler_check: EulerCheck,
        }
        let r = Report {
            m,
            table: &table,
            euler_check: check,
        };
        println!("{}", serde_json::to_string_pretty(&r)?);
        return Ok(());
    }
    println!("{table}");
    println!("{}", table.betti_diagram());
    match check.first_failure {
        None => println!("Hilbert function check through degree {dmax}: PASS"),
        Some(d) => println!("Hilbert function check: FAIL at degree {d}"),
    }
    Ok(())
}
