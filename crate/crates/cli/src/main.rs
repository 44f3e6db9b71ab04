//! groupds: generate Cayley tables, build linear-space constant-lookup
//! multiplication structures, query and verify them, benchmark space usage,
//! and audit the simple-group order tables.
//!
//! Exit codes: 0 pass, 1 usage, 2 data error, 3 verification failure.

use clap::{Parser, Subcommand};
use group_ds::{build, cayley::CayleyGroup, gen, plan, series, wire, Error};
use groupds_cli::bench;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(name = "groupds", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a Cayley table file
    Gen {
        #[command(subcommand)]
        recipe: GenCmd,
    },
    /// Build a multiplication structure from a Cayley table
    Build {
        table: PathBuf,
        /// Output structure file
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value_t = build::DEFAULT_B1)]
        b1: f64,
        #[arg(long, default_value_t = build::DEFAULT_B2)]
        b2: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write a JSON debug dump of the layer structure
        #[arg(long)]
        dump_json: Option<PathBuf>,
    },
    /// Multiply two elements (1-based ids) through a built structure
    Query { gds: PathBuf, a: u64, b: u64 },
    /// Check the group axioms of a table; with --gds also check the
    /// structure against the table
    Verify {
        table: PathBuf,
        #[arg(long)]
        gds: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the composition series (chain orders and factor orders) as JSON
    Series {
        table: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Build, run the oracle, and emit a space/lookup report
    Bench {
        table: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Audit the simple-group order tables with exact integer arithmetic
    AuditCfsg {
        #[arg(long, default_value_t = 12)]
        max_m: u32,
        #[arg(long, default_value_t = 32)]
        max_q: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Z_m
    Cyclic { m: usize, #[arg(short, long)] output: Option<PathBuf> },
    /// Dihedral group of order 2m
    Dihedral { m: usize, #[arg(short, long)] output: Option<PathBuf> },
    /// S_m
    Symmetric { m: usize, #[arg(short, long)] output: Option<PathBuf> },
    /// A_m
    Alternating { m: usize, #[arg(short, long)] output: Option<PathBuf> },
    /// Closure of generators in disjoint-cycle notation, one per line
    PermGens { file: PathBuf, #[arg(short, long)] output: Option<PathBuf> },
    /// Direct product of two table files, (a,b) -> (a-1)*n2 + b
    Product { a: PathBuf, b: PathBuf, #[arg(short, long)] output: Option<PathBuf> },
}

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_DATA: i32 = 2;
const EXIT_VERIFY: i32 = 3;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_DATA
        }
    };
    std::process::exit(code);
}

fn load_table(path: &Path) -> group_ds::Result<CayleyGroup> {
    let text = std::fs::read_to_string(path)?;
    CayleyGroup::parse(&text)
}

fn emit(text: &str, output: Option<&Path>) -> std::io::Result<()> {
    match output {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn execute(cli: Cli) -> group_ds::Result<i32> {
    match cli.cmd {
        Cmd::Gen { recipe } => {
            let (g, output) = match recipe {
                GenCmd::Cyclic { m, output } => (gen::cyclic(m)?, output),
                GenCmd::Dihedral { m, output } => (gen::dihedral(m)?, output),
                GenCmd::Symmetric { m, output } => (gen::symmetric(m)?, output),
                GenCmd::Alternating { m, output } => (gen::alternating(m)?, output),
                GenCmd::PermGens { file, output } => {
                    let text = std::fs::read_to_string(&file)?;
                    (gen::from_perm_gens_text(&text)?, output)
                }
                GenCmd::Product { a, b, output } => {
                    let ga = load_table(&a)?;
                    let gb = load_table(&b)?;
                    (gen::direct_product(&ga, &gb)?, output)
                }
            };
            emit(&g.to_table_string(), output.as_deref())?;
            Ok(EXIT_OK)
        }
        Cmd::Build {
            table,
            output,
            b1,
            b2,
            seed,
            dump_json,
        } => {
            let g = load_table(&table)?;
            let p = plan(&g, b1, b2, seed)?;
            let (ds, report) = build(&g, &p)?;
            std::fs::write(&output, wire::serialize(&ds))?;
            if let Some(dump) = dump_json {
                let text = serde_json::to_string_pretty(&report).expect("report serializes");
                std::fs::write(dump, text)?;
            }
            println!(
                "{}",
                serde_json::to_string(&report).expect("report serializes")
            );
            Ok(EXIT_OK)
        }
        Cmd::Query { gds, a, b } => {
            let bytes = std::fs::read(&gds)?;
            let ds = wire::deserialize(&bytes)?;
            println!("{}", ds.multiply(a, b)?);
            Ok(EXIT_OK)
        }
        Cmd::Verify { table, gds, seed } => {
            let text = std::fs::read_to_string(&table)?;
            let g = match CayleyGroup::parse(&text) {
                Ok(g) => g,
                Err(e @ Error::Axiom(_)) => {
                    eprintln!("verification failed: {e}");
                    return Ok(EXIT_VERIFY);
                }
                Err(e) => return Err(e),
            };
            println!("table ok: order {}", g.order());
            if let Some(gds_path) = gds {
                let bytes = std::fs::read(&gds_path)?;
                let ds = match wire::deserialize(&bytes) {
                    Ok(ds) => ds,
                    Err(e @ (Error::Corrupt(_) | Error::Version(_))) => {
                        eprintln!("verification failed: {e}");
                        return Ok(EXIT_VERIFY);
                    }
                    Err(e) => return Err(e),
                };
                if ds.group_order() != g.order() {
                    eprintln!(
                        "verification failed: structure order {} != table order {}",
                        ds.group_order(),
                        g.order()
                    );
                    return Ok(EXIT_VERIFY);
                }
                let (oracle, _) = bench::oracle_check(&g, &ds, seed);
                if oracle.mismatches > 0 {
                    eprintln!(
                        "verification failed: {} mismatches, first witnesses {:?}",
                        oracle.mismatches, oracle.witnesses
                    );
                    return Ok(EXIT_VERIFY);
                }
                println!("structure ok: {} {} products agree", oracle.pairs, oracle.mode);
            }
            Ok(EXIT_OK)
        }
        Cmd::Series { table, seed } => {
            let g = load_table(&table)?;
            let s = match seed {
                Some(seed) => series::composition_series_seeded(&g, seed),
                None => series::composition_series(&g),
            };
            let orders: Vec<usize> = s.chain.iter().map(|c| c.order()).collect();
            let doc = serde_json::json!({
                "orders": orders,
                "factor_orders": s.factor_orders,
                "solvable": build::is_solvable(&s),
            });
            println!("{doc}");
            Ok(EXIT_OK)
        }
        Cmd::Bench { table, json, seed } => {
            let g = load_table(&table)?;
            let (_, report) = bench::run_bench(&g, seed)?;
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            match json {
                Some(p) => std::fs::write(p, &text)?,
                None => println!("{text}"),
            }
            Ok(if report.pass { EXIT_OK } else { EXIT_VERIFY })
        }
        Cmd::AuditCfsg { max_m, max_q, json } => {
            let rows = cfsg_audit::sweep(max_m, max_q);
            let failures = rows.iter().filter(|r| !r.pass).count();
            if let Some(p) = json {
                let text = serde_json::to_string_pretty(&rows).expect("rows serialize");
                std::fs::write(p, text)?;
            }
            for row in rows.iter().filter(|r| !r.pass) {
                eprintln!("FAIL {} checks {:?}", row.family, row.checks);
            }
            println!(
                "audited {} rows (m <= {max_m}, q <= {max_q}): {} failures",
                rows.len(),
                failures
            );
            Ok(if failures == 0 { EXIT_OK } else { EXIT_VERIFY })
        }
    }
}
