//! Command-line front end: construct, analyze, classify covers, quotient,
//! census and the acceptance table.
//!
//! Exit codes: 0 success, 1 failed check or runtime error, 2 usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use pentacover::acceptance::run_suite;
use pentacover::constructions::{family, FamilyId, FamilyParams, NamedGraph};
use pentacover::symmetry::{analyze, analyze_family, basic_quotient_chain, census_2p2, SymmetryReport, TranslationHint};
use pentacover::voltage::{classify, CoverClass, Strategy};
use pentacover::{Error, Graph};

#[derive(Parser)]
#[command(name = "pentacover", version, about = "Pentavalent symmetric graphs of order 2p^n")]
struct Cli {
    /// Aligned plain text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member and write its edge list.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Automorphism group, s-arc transitivity and basicness of a graph.
    Analyze {
        /// Edge-list file to read.
        #[arg(long = "in", conflicts_with = "family")]
        input: Option<PathBuf>,
        #[command(flatten)]
        family: OptionalFamilyArgs,
    },
    /// Classify arc-transitive Z_p^n-covers of the five-edge dipole.
    ClassifyCovers {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Both)]
        strategy: StrategyArg,
    },
    /// Chain of normal quotients down to a basic graph.
    Quotient {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Known pentavalent symmetric graphs of order 2p^2.
    Census {
        #[arg(long)]
        p: u64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::Acceptance)]
        suite: Suite,
        /// Include the large instances.
        #[arg(long)]
        deep: bool,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// Family id such as `CGD(p^4)`, or an instance such as `CGD(2^4)`.
    #[arg(long)]
    family: String,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args)]
struct OptionalFamilyArgs {
    #[arg(long)]
    family: Option<String>,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    p: Option<u64>,
    /// Element of order 5 modulo p (or p^2).
    #[arg(long)]
    ell: Option<u64>,
    /// Square root of 5 modulo p.
    #[arg(long)]
    lambda: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Brute,
    Analytic,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Acceptance,
}

/// How a command ended.
enum Failure {
    Usage(String),
    Check(String),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::UnsupportedParameter(_)
            | Error::NoOrder5Element(_)
            | Error::NoSquareRootOf5(_) => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other),
        }
    }
}

fn build_family(name: &str, params: &ParamArgs) -> Result<NamedGraph, Failure> {
    let (id, p) = match FamilyId::parse_instance(name) {
        Ok((id, Some(p))) => {
            if params.p.is_some_and(|q| q != p) {
                return Err(Failure::Usage(format!("--p {} conflicts with instance {name}", params.p.unwrap())));
            }
            (id, Some(p))
        }
        Ok((id, None)) => (id, params.p),
        Err(e) => return Err(e.into()),
    };
    if id.takes_prime() && p.is_none() {
        return Err(Failure::Usage(format!("family {id} needs --p")));
    }
    let fp = FamilyParams {
        ell: params.ell,
        lambda: params.lambda,
    };
    Ok(family(id, p, fp)?)
}

fn emit<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn report_text(r: &SymmetryReport) -> String {
    let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
    let rows = [
        ("family", opt(r.family.clone())),
        ("vertices", r.vertices.to_string()),
        ("aut_order", r.aut_order.to_string()),
        ("girth", opt(r.girth.map(|g| g.to_string()))),
        ("s", opt(r.s.map(|s| s.to_string()))),
        ("stabilizer_order", opt(r.stabilizer_order.map(|s| s.to_string()))),
        ("catalog", if r.catalog.is_empty() { "-".into() } else { r.catalog.join(", ") }),
        ("basic", opt(r.basic.map(|b| b.to_string()))),
        (
            "witness",
            opt(r.witness.as_ref().map(|w| format!("order {}, {} orbits", w.order, w.orbits))),
        ),
        ("quotient", opt(r.quotient.clone())),
    ];
    rows.iter()
        .map(|(k, v)| format!("{k:<17} {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn classes_text(classes: &[CoverClass]) -> String {
    if classes.is_empty() {
        return "no arc-transitive covers".into();
    }
    classes
        .iter()
        .map(|c| {
            let fam = c.matched_family.map_or_else(|| "-".into(), |f| f.to_string());
            format!("{:<60} lifting group {:<4} {fam}", c.representative.to_string(), c.lifting_group_order)
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Construct { family: f, out } => {
            let ng = build_family(&f.family, &f.params)?;
            let text = ng.graph.to_edge_list();
            match out {
                Some(path) => {
                    fs::write(&path, &text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                    Ok(if cli.pretty {
                        format!("wrote {} ({} vertices) to {}", ng.name(), ng.graph.vertex_count(), path.display())
                    } else {
                        emit(&json!({"family": ng.name(), "vertices": ng.graph.vertex_count(), "out": path}))
                    })
                }
                None => Ok(text.trim_end().to_string()),
            }
        }
        Command::Analyze { input, family: f } => {
            let report = match (input, f.family) {
                (Some(path), _) => {
                    let text = fs::read_to_string(&path)
                        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
                    let g = Graph::from_edge_list(&text)?;
                    analyze(&g, None, None)?
                }
                (None, Some(name)) => analyze_family(&build_family(&name, &f.params)?)?,
                (None, None) => return Err(Failure::Usage("analyze needs --in FILE or --family ID".into())),
            };
            Ok(if cli.pretty { report_text(&report) } else { emit(&report) })
        }
        Command::ClassifyCovers { p, n, strategy } => {
            let classes = match strategy {
                StrategyArg::Brute => classify(p, n, Strategy::Brute)?,
                StrategyArg::Analytic => classify(p, n, Strategy::Analytic)?,
                StrategyArg::Both => {
                    let brute = classify(p, n, Strategy::Brute)?;
                    let analytic = classify(p, n, Strategy::Analytic)?;
                    if brute != analytic {
                        return Err(Failure::Check(format!(
                            "strategies disagree: brute force found {}, analytic found {}",
                            brute.len(),
                            analytic.len()
                        )));
                    }
                    brute
                }
            };
            Ok(if cli.pretty { classes_text(&classes) } else { emit(&classes) })
        }
        Command::Quotient { family: f } => {
            let ng = build_family(&f.family, &f.params)?;
            let hint = TranslationHint::for_family(&ng);
            let chain = basic_quotient_chain(&ng.graph, hint.as_ref())?;
            let steps: Vec<_> = chain
                .iter()
                .map(|s| {
                    json!({
                        "normal_order": s.normal_order,
                        "vertices": s.quotient.vertex_count(),
                        "recognized": s.recognized.map(|r| r.to_string()),
                    })
                })
                .collect();
            let doc = json!({"family": ng.name(), "vertices": ng.graph.vertex_count(), "steps": steps});
            Ok(if cli.pretty {
                let mut lines = vec![format!("{} ({} vertices)", ng.name(), ng.graph.vertex_count())];
                if chain.is_empty() {
                    lines.push("  basic".into());
                }
                for s in &chain {
                    let rec = s.recognized.map_or_else(|| "-".into(), |r| r.to_string());
                    lines.push(format!(
                        "  / N of order {:<6} -> {:<5} vertices  {rec}",
                        s.normal_order,
                        s.quotient.vertex_count()
                    ));
                }
                lines.join("\n")
            } else {
                emit(&doc)
            })
        }
        Command::Census { p } => {
            let report = census_2p2(p)?;
            Ok(if cli.pretty {
                let mut lines = vec![format!("p = {p}: {} graph(s)", report.count)];
                for e in &report.graphs {
                    lines.push(format!("  {:<12} {:<6} vertices  |Aut| = {:<8} s = {}", e.family, e.vertices, e.aut_order, e.s));
                }
                lines.join("\n")
            } else {
                emit(&report)
            })
        }
        Command::Verify { suite: Suite::Acceptance, deep } => {
            let results = run_suite(deep);
            let text = results.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            if results.iter().all(|r| r.passed) {
                Ok(text)
            } else {
                Err(Failure::Check(text))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(text)) => {
            println!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("{}", json!({"error": e.to_string(), "kind": "runtime"}));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("{}", json!({"error": msg, "kind": "usage"}));
            ExitCode::from(2)
        }
    }
}
