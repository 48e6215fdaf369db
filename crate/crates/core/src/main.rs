use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use soclekit::dedekind::{decompose_hamiltonian, is_dedekind};
use soclekit::expr::{build_from_expr, parse_group_expr_with};
use soclekit::group::{GroupTable, Limits};
use soclekit::invariants::abelian_invariants;
use soclekit::io::{group_to_json, load_group, save_group};
use soclekit::lattice::{all_subgroups_capped, is_essential_fast};
use soclekit::socle::{
    delta_fast, delta_from_lattice, prime_socle, socle_from_lattice, socle_hamiltonian_fast,
};
use soclekit::verify::{cmd_sweep, cmd_verify, SweepOptions, VerifyOptions, VerifyReport};
use soclekit::{Error, Subgroup};

/// Socles, prime socles and essential subgroups of finite groups.
///
/// GROUP arguments are either a path to a JSON Cayley table or an
/// expression such as "Q8 x E2^2 x Z9".
#[derive(Parser, Debug)]
#[command(name = "soclekit", version)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Order cap for building groups (default 1024, or SOCLEKIT_MAX_ORDER).
    #[arg(long, global = true)]
    max_order: Option<usize>,
    /// Largest group whose subgroup lattice may be enumerated.
    #[arg(long, global = true, default_value_t = soclekit::group::DEFAULT_LATTICE_CAP)]
    lattice_cap: usize,
    /// Skip every computation that enumerates the subgroup lattice.
    #[arg(long, global = true)]
    fast_only: bool,
    /// Seed for the random direct-sum pairs of `sweep`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a group from an expression and print or save its table.
    Build {
        expr: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Order, commutativity and Dedekind classification.
    Info { group: String },
    /// Socle by lattice search (or by decomposition with --fast-only).
    Socle { group: String },
    /// δ(G) by definition and via the prime socle.
    Delta { group: String },
    /// Proper essential subgroups, or test one given subgroup.
    Essential {
        group: String,
        /// Comma-separated member indices of a subgroup to test.
        #[arg(long, value_delimiter = ',')]
        subgroup: Option<Vec<usize>>,
    },
    /// Minimal normal subgroups.
    MinimalNormal { group: String },
    /// Q8 x B x D decomposition of a Hamiltonian group.
    Decompose { group: String },
    /// Elementary divisors of an abelian group.
    Invariants { group: String },
    /// Run every applicable check on one group.
    Verify { group: String },
    /// Run the checks over the whole corpus up to an order bound.
    Sweep {
        #[arg(default_value_t = 24)]
        max_order: usize,
        /// Number of random direct-sum pairs.
        #[arg(long, default_value_t = 20)]
        pairs: usize,
    },
}

enum Failure {
    Checks,
    Usage(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn limits(cli: &Cli) -> Limits {
    let mut limits = Limits::from_env();
    if let Some(cap) = cli.max_order {
        limits.order_cap = cap;
    }
    limits.lattice_cap = cli.lattice_cap;
    limits
}

fn load(spec: &str, limits: &Limits) -> Result<GroupTable, Error> {
    if spec.ends_with(".json") || Path::new(spec).is_file() {
        let g = load_group(spec)?;
        if g.order() > limits.order_cap {
            return Err(Error::OrderCap {
                order: g.order() as u128,
                cap: limits.order_cap,
            });
        }
        Ok(g)
    } else {
        build_from_expr(&parse_group_expr_with(spec, limits)?, limits)
    }
}

fn show(g: &GroupTable, s: &Subgroup) -> String {
    let labels: Vec<&str> = s.iter().map(|x| g.label(x)).collect();
    format!("{{{}}} (order {})", labels.join(", "), s.order())
}

/// Writes a line to stdout; a closed pipe (e.g. `| head`) is not an error.
fn put(line: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

fn emit(cli: &Cli, value: &Value, text: impl FnOnce() -> String) {
    if cli.json {
        put(&serde_json::to_string(value).expect("json value"));
    } else {
        put(&text());
    }
}

fn need_lattice(cli: &Cli, what: &str) -> Result<(), Failure> {
    if cli.fast_only {
        return Err(Failure::Usage(Error::InvalidParameter(format!(
            "{what} needs the subgroup lattice and cannot run with --fast-only"
        ))));
    }
    Ok(())
}

fn print_report(cli: &Cli, r: &VerifyReport) {
    emit(cli, &json!(r), || {
        let mut lines = vec![format!(
            "{} (order {}): {}",
            r.group,
            r.order,
            if r.pass { "PASS" } else { "FAIL" }
        )];
        for c in &r.checks {
            lines.push(format!(
                "  [{}] {}  {}",
                if c.pass { "pass" } else { "FAIL" },
                c.name,
                c.witness
            ));
        }
        lines.join("\n")
    });
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let limits = limits(cli);
    match &cli.command {
        Command::Build { expr, out } => {
            let g = build_from_expr(&parse_group_expr_with(expr, &limits)?, &limits)?;
            match out {
                Some(path) => {
                    save_group(&g, path)?;
                    emit(cli, &json!({"path": path, "order": g.order()}), || {
                        format!("wrote {} (order {})", path.display(), g.order())
                    });
                }
                None => put(&group_to_json(&g)),
            }
        }
        Command::Info { group } => {
            let g = load(group, &limits)?;
            let abelian = g.is_abelian();
            let dedekind = is_dedekind(&g);
            let mut histogram = BTreeMap::new();
            for o in g.element_orders() {
                *histogram.entry(o).or_insert(0usize) += 1;
            }
            let invariants = abelian_invariants(&g).ok();
            let value = json!({
                "group": group,
                "order": g.order(),
                "abelian": abelian,
                "dedekind": dedekind,
                "hamiltonian": dedekind && !abelian,
                "element_orders": histogram,
                "invariants": invariants,
            });
            emit(cli, &value, || {
                let inv = invariants.map_or("-".to_string(), |i| i.to_string());
                format!(
                    "order {}\nabelian {abelian}\ndedekind {dedekind}\nhamiltonian {}\nelement orders {histogram:?}\ninvariants {inv}",
                    g.order(),
                    dedekind && !abelian
                )
            });
        }
        Command::Socle { group } => {
            let g = load(group, &limits)?;
            let report = if cli.fast_only {
                socle_hamiltonian_fast(&g)?
            } else {
                socle_from_lattice(&all_subgroups_capped(&g, limits.lattice_cap)?)
            };
            emit(cli, &json!(report.to_json()), || {
                let inv = report
                    .invariants
                    .as_ref()
                    .map_or("-".to_string(), ToString::to_string);
                let mut lines = vec![
                    format!("socle {}", show(&g, &report.socle)),
                    format!("invariants {inv}"),
                ];
                lines.extend(
                    report
                        .minimal_normals
                        .iter()
                        .map(|m| format!("minimal normal {}", show(&g, m))),
                );
                lines.join("\n")
            });
        }
        Command::Delta { group } => {
            let g = load(group, &limits)?;
            let fast = delta_fast(&g);
            let p = prime_socle(&g);
            let definitional = if cli.fast_only {
                None
            } else {
                Some(delta_from_lattice(&all_subgroups_capped(
                    &g,
                    limits.lattice_cap,
                )?))
            };
            let value = json!({
                "definitional": definitional.as_ref().map(Subgroup::to_indices),
                "fast": fast.to_indices(),
                "prime_socle": p.to_indices(),
                "order": fast.order(),
            });
            emit(cli, &value, || {
                let mut lines = vec![
                    format!("delta (fast) {}", show(&g, &fast)),
                    format!("prime socle {}", show(&g, &p)),
                ];
                if let Some(d) = &definitional {
                    lines.push(format!("delta (definitional) {}", show(&g, d)));
                }
                lines.join("\n")
            });
        }
        Command::Essential { group, subgroup } => {
            let g = load(group, &limits)?;
            match subgroup {
                Some(members) => {
                    let s = Subgroup::from_indices(&g, members)?;
                    let definitional = if cli.fast_only {
                        None
                    } else {
                        Some(all_subgroups_capped(&g, limits.lattice_cap)?.is_essential(&s))
                    };
                    let fast = is_essential_fast(&g, &s);
                    let value = json!({"subgroup": s.to_indices(), "definitional": definitional, "fast": fast});
                    emit(cli, &value, || {
                        format!(
                            "{}: fast {fast}, definitional {definitional:?}",
                            show(&g, &s)
                        )
                    });
                }
                None => {
                    need_lattice(cli, "listing essential subgroups")?;
                    let lattice = all_subgroups_capped(&g, limits.lattice_cap)?;
                    let list = lattice.proper_essentials();
                    let value = json!({"proper_essentials": list.iter().map(Subgroup::to_indices).collect::<Vec<_>>()});
                    emit(cli, &value, || {
                        if list.is_empty() {
                            "no proper essential subgroups".to_string()
                        } else {
                            list.iter()
                                .map(|s| show(&g, s))
                                .collect::<Vec<_>>()
                                .join("\n")
                        }
                    });
                }
            }
        }
        Command::MinimalNormal { group } => {
            need_lattice(cli, "minimal-normal")?;
            let g = load(group, &limits)?;
            let mins = all_subgroups_capped(&g, limits.lattice_cap)?.minimal_normals();
            let value = json!(mins.iter().map(Subgroup::to_indices).collect::<Vec<_>>());
            emit(cli, &value, || {
                mins.iter()
                    .map(|s| show(&g, s))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Command::Decompose { group } => {
            let g = load(group, &limits)?;
            let dec = decompose_hamiltonian(&g)?;
            let j = dec.to_json(&g);
            emit(cli, &json!(j), || {
                format!(
                    "q8 {}\nb  {} (rank {})\nd  {} invariants {}",
                    show(&g, &dec.q8),
                    show(&g, &dec.b),
                    j.b_rank,
                    show(&g, &dec.d),
                    j.d_invariants
                )
            });
        }
        Command::Invariants { group } => {
            let g = load(group, &limits)?;
            let inv = abelian_invariants(&g)?;
            emit(cli, &json!(inv), || inv.to_string());
        }
        Command::Verify { group } => {
            let g = load(group, &limits)?;
            let opts = VerifyOptions {
                fast_only: cli.fast_only,
                limits,
            };
            let report = cmd_verify(group, &g, &opts)?;
            print_report(cli, &report);
            if !report.pass {
                return Err(Failure::Checks);
            }
        }
        Command::Sweep { max_order, pairs } => {
            let opts = SweepOptions {
                max_order: *max_order,
                seed: cli.seed,
                pairs: *pairs,
                verify: VerifyOptions {
                    fast_only: cli.fast_only,
                    limits,
                },
            };
            let result = cmd_sweep(&opts)?;
            emit(cli, &json!(result), || {
                let mut lines = vec![format!("{:<40} {:>6}  {}", "group", "order", "status")];
                for r in &result.reports {
                    let failed: Vec<&str> = r
                        .checks
                        .iter()
                        .filter(|c| !c.pass)
                        .map(|c| c.name.as_str())
                        .collect();
                    let status = if r.pass {
                        "pass".to_string()
                    } else {
                        format!("FAIL {}", failed.join(","))
                    };
                    lines.push(format!("{:<40} {:>6}  {status}", r.group, r.order));
                }
                let s = &result.summary;
                lines.push(format!(
                    "{} groups, {} pairs: {} passed, {} failed",
                    s.groups, s.pairs, s.passed, s.failed
                ));
                lines.join("\n")
            });
            if !result.pass() {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            if cli.json {
                put(&serde_json::to_string(&e.to_object()).expect("error object"));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
    }
}
