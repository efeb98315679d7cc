use std::io::Read;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use slf_core::format::{emit, parse, FactorizationFile};
use slf_core::homology::{
    adjunction_genus, blowup_pullback, classify_components, count_double_covers, solve_branch_class, BranchSolution,
    ComponentShape,
};
use slf_core::hurwitz::{equivalent, fiber_sum, normal_form_family, Equivalence, Family, DEFAULT_NODE_BUDGET};
use slf_core::invariants::{noether_check, p2_cover_invariants, rh_branch_genus, slf_invariants};
use slf_core::lifts::{validate_with_bundle, ValidationReport};

#[derive(Parser)]
#[command(name = "slf", version, about = "Monodromy factorizations of hyperelliptic Lefschetz fibrations")]
struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the twists multiply to the identity mapping class.
    Validate { file: String },
    /// Branch class and characteristic numbers of the total space.
    Invariants {
        file: String,
        /// Bundle parity, overriding the file's `bundle` line.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        n: Option<u8>,
    },
    /// Branch class, its genus and the shape of its components.
    Classify {
        file: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        n: Option<u8>,
    },
    /// Print a standard factorization (for `elliptic`, `--k` is the number of singular fibres).
    Generate {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        k: u32,
    },
    /// Fibre sum of two factorizations.
    Sum { file1: String, file2: String },
    /// Bounded search for a Hurwitz equivalence.
    Hurwitz {
        file1: String,
        file2: String,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: usize,
    },
    /// Invariants of a double plane branched along a curve of degree 2d.
    P2cover {
        #[arg(long)]
        d: i64,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: slf_core::Error| e.to_string())
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn load(path: &str) -> Result<FactorizationFile> {
    parse(&read_input(path)?).with_context(|| format!("parsing {path}"))
}

/// Prints `rows` as an aligned key/value table or `value` as JSON.
fn report<T: Serialize>(format: OutputFormat, value: &T, rows: &[(&str, String)]) -> Result<()> {
    match format {
        OutputFormat::Json => println!("{}", serde_json::to_string_pretty(value)?),
        OutputFormat::Text => {
            let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
            for (k, v) in rows {
                println!("{k:<width$}  {v}");
            }
        }
    }
    Ok(())
}

fn solve(file: &FactorizationFile, hint: Option<u8>) -> Result<(ValidationReport, BranchSolution)> {
    let f = &file.factorization;
    let bundle = hint.or(file.bundle);
    let v = validate_with_bundle(f, bundle)?;
    let s = solve_branch_class(f.genus(), (f.mu() - f.t()) as i64, &f.h_list(), bundle)?;
    Ok((v, s))
}

#[derive(Serialize)]
struct ClassifyReport {
    genus: u32,
    n: i64,
    k: i64,
    mu_virt: i64,
    branch_class: String,
    branch_genus: i64,
    riemann_hurwitz_genus: i64,
    components: ComponentShape,
    blown_up_points: usize,
    strict_transform_square: i64,
    double_covers: u64,
}

#[derive(Serialize)]
struct P2Report {
    d: i64,
    c1_sq: i64,
    e: i64,
    chi: i64,
    noether: bool,
}

#[derive(Serialize)]
struct HurwitzReport {
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    moves: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<slf_core::hurwitz::Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    explored: Option<usize>,
}

fn run(cli: Cli) -> Result<()> {
    let fmt = cli.format;
    match cli.command {
        Command::Validate { file } => {
            let file = load(&file)?;
            let r = validate_with_bundle(&file.factorization, file.bundle)?;
            report(
                fmt,
                &r,
                &[
                    ("mu", r.mu.to_string()),
                    ("t", r.t.to_string()),
                    ("h_list", format!("{:?}", r.h_list)),
                    ("total_is_identity_in_mcg", r.total_is_identity_in_mcg.to_string()),
                    ("exponent_sum", r.exponent_sum.to_string()),
                    ("central_element", r.central_element.to_string()),
                ],
            )
        }
        Command::Invariants { file, n } => {
            let file = load(&file)?;
            let (_, s) = solve(&file, n)?;
            let f = &file.factorization;
            let r = slf_invariants(f.genus(), s.n, s.k, &f.h_list())?;
            let mut rows = vec![
                ("g", r.g.to_string()),
                ("n", r.n.to_string()),
                ("k", r.k.to_string()),
                ("h_list", format!("{:?}", r.h_list)),
                ("mu", r.mu.to_string()),
                ("t", r.t().to_string()),
                ("e", r.e.to_string()),
                ("c1^2", r.c1_sq.to_string()),
                ("tau", r.tau.to_string()),
                ("chi", r.chi.to_string()),
                ("noether", r.noether.to_string()),
            ];
            if let Some(q) = r.mu_over_t() {
                rows.push(("mu/t", format!("{q:.3}")));
            }
            if let Some(h) = &r.minimal_hint {
                rows.push(("minimal_hint", h.clone()));
            }
            if let Some(note) = &r.note {
                rows.push(("note", note.clone()));
            }
            report(fmt, &r, &rows)
        }
        Command::Classify { file, n } => {
            let file = load(&file)?;
            let (_, s) = solve(&file, n)?;
            let f = &file.factorization;
            let class = s.class(f.genus());
            let pb = blowup_pullback(class, &f.h_list());
            let r = ClassifyReport {
                genus: f.genus(),
                n: s.n,
                k: s.k,
                mu_virt: s.mu_virt,
                branch_class: class.to_string(),
                branch_genus: adjunction_genus(class)?,
                riemann_hurwitz_genus: rh_branch_genus(f.genus(), s.mu_virt)?,
                components: classify_components(&[class]),
                blown_up_points: f.t(),
                strict_transform_square: pb.strict.square(),
                double_covers: count_double_covers(1),
            };
            report(
                fmt,
                &r,
                &[
                    ("n", r.n.to_string()),
                    ("k", r.k.to_string()),
                    ("mu_virt", r.mu_virt.to_string()),
                    ("branch_class", r.branch_class.clone()),
                    ("branch_genus", r.branch_genus.to_string()),
                    ("riemann_hurwitz_genus", r.riemann_hurwitz_genus.to_string()),
                    ("components", format!("{:?}", r.components)),
                    ("blown_up_points", r.blown_up_points.to_string()),
                    ("strict_transform_square", r.strict_transform_square.to_string()),
                    ("double_covers", r.double_covers.to_string()),
                ],
            )
        }
        Command::Generate { family, k } => {
            print!("{}", emit(&normal_form_family(family, k)?, None));
            Ok(())
        }
        Command::Sum { file1, file2 } => {
            if file1 == "-" && file2 == "-" {
                bail!("at most one input may be standard input");
            }
            let (a, b) = (load(&file1)?, load(&file2)?);
            let bundle = if a.bundle == b.bundle { a.bundle } else { None };
            print!("{}", emit(&fiber_sum(&a.factorization, &b.factorization)?, bundle));
            Ok(())
        }
        Command::Hurwitz { file1, file2, budget } => {
            if file1 == "-" && file2 == "-" {
                bail!("at most one input may be standard input");
            }
            let (a, b) = (load(&file1)?, load(&file2)?);
            let (r, rows) = match equivalent(&a.factorization, &b.factorization, budget)? {
                Equivalence::Equivalent(m) => {
                    let shown = if m.is_empty() { "(empty)".to_string() } else { m.to_string() };
                    let r = HurwitzReport {
                        verdict: "equivalent",
                        moves: Some(m.0.iter().map(|x| x.to_string()).collect()),
                        witness: None,
                        explored: None,
                    };
                    (r, vec![("verdict", "equivalent".to_string()), ("moves", shown)])
                }
                Equivalence::NotEquivalent(w) => {
                    let rows = vec![
                        ("verdict", "not equivalent".to_string()),
                        ("invariant", w.invariant.clone()),
                        ("left", w.left.clone()),
                        ("right", w.right.clone()),
                    ];
                    (HurwitzReport { verdict: "not_equivalent", moves: None, witness: Some(w), explored: None }, rows)
                }
                Equivalence::Inconclusive { explored } => (
                    HurwitzReport { verdict: "inconclusive", moves: None, witness: None, explored: Some(explored) },
                    vec![("verdict", "inconclusive".to_string()), ("explored", explored.to_string())],
                ),
            };
            report(fmt, &r, &rows)
        }
        Command::P2cover { d } => {
            let (c1_sq, e, chi) = p2_cover_invariants(d)?;
            let r = P2Report { d, c1_sq, e, chi, noether: noether_check(c1_sq, chi) };
            report(
                fmt,
                &r,
                &[
                    ("d", d.to_string()),
                    ("c1^2", c1_sq.to_string()),
                    ("e", e.to_string()),
                    ("chi", chi.to_string()),
                    ("noether", r.noether.to_string()),
                ],
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
