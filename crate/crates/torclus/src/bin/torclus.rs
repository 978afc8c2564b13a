//! Command-line front end: Cartan tables, expression arithmetic, seed
//! mutation, exchange graphs, character printing, and the golden-corpus
//! verifier.

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use std::sync::Arc;
use torclus::cartan::{CartanData, DynkinType};
use torclus::cluster::{exchange_graph, DEFAULT_MAX_NODES};
use torclus::groth::{self, CheckReport, HeightFunction};
use torclus::params::QuotientContext;
use torclus::parse::parse_element;
use torclus::report::RunReport;
use torclus::seedfile::SeedFile;
use torclus::torus::Backend;

#[derive(Parser)]
#[command(name = "torclus", about = "Exact toroidal cluster algebra toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QuotientFlag {
    None,
    Standard,
}

#[derive(Subcommand)]
enum Command {
    /// Print the inverse quantized Cartan table C~_{ij}(m) for m = 1..max-m.
    Cartan {
        #[arg(long = "type")]
        ty: String,
        #[arg(long = "max-m", default_value_t = 12)]
        max_m: i64,
    },
    /// Print the commutation exponent N_a(i,p;j,s).
    Nexp {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        i: usize,
        #[arg(allow_negative_numbers = true)]
        p: i64,
        j: usize,
        #[arg(allow_negative_numbers = true)]
        s: i64,
    },
    /// Star-multiply two expressions over a Cartan backend.
    Star {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, value_enum, default_value = "none")]
        quotient: QuotientFlag,
        expr_a: String,
        expr_b: String,
    },
    /// Mutate a seed file in one direction (1-based) and print the new file.
    Mutate {
        seedfile: String,
        #[arg(short = 'k', long = "direction")]
        k: usize,
    },
    /// Enumerate the exchange graph of a seed file; DOT plus a summary line.
    Graph {
        seedfile: String,
        #[arg(long)]
        max: Option<usize>,
    },
    /// Run a golden-corpus verification by id.
    Verify {
        id: String,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportFormat,
    },
    /// Print the truncated C1 classes for a type.
    Characters {
        #[arg(long = "type")]
        ty: String,
    },
}

fn parse_type(s: &str) -> Result<DynkinType, String> {
    DynkinType::parse(s).map_err(|e| e.to_string())
}

fn cartan_backend(ty: DynkinType, q: QuotientFlag) -> Arc<Backend> {
    let ctx = match q {
        QuotientFlag::None => QuotientContext::None,
        QuotientFlag::Standard => QuotientContext::Standard,
    };
    Backend::cartan(CartanData::new(ty), ctx)
}

fn verify_report(id: &str) -> Option<CheckReport> {
    let filtered = |report: CheckReport, keep: fn(&str) -> bool| {
        let mut out = CheckReport::default();
        for (name, ok) in report.checks {
            if keep(&name) {
                out.checks.push((name, ok));
            }
        }
        out
    };
    let c1 = |ty: DynkinType| {
        let data = CartanData::new(ty);
        let xi = HeightFunction::bipartite(&data, 0);
        groth::c1::verify_c1_theorem(ty, &xi)
    };
    let report = match id {
        "a1-two-param-serre" => groth::serre::serre_corpus(),
        "sl3-cq-products" => filtered(groth::sl3::sl3_cq_corpus(), |n| {
            !(n.starts_with("rebuild") || n.starts_with("simple shape"))
        }),
        "sl3-cq-simples" => filtered(groth::sl3::sl3_cq_corpus(), |n| {
            n.starts_with("rebuild") || n.starts_with("simple shape")
        }),
        "sl2-tsystem" => groth::sl2::sl2_corpus(),
        "a2-c1ob-graph" => groth::sl3::c1_ob_corpus(),
        "c1-seed-A2" => c1(DynkinType::A(2)),
        "c1-seed-A3" => c1(DynkinType::A(3)),
        "c1-seed-D4" => c1(DynkinType::D(4)),
        "ay-commutation-A2" => groth::ay_check(DynkinType::A(2), -2..3),
        "ay-commutation-A3" => groth::ay_check(DynkinType::A(3), -2..3),
        "powers-kl" => {
            let seed = torclus::cluster::example_seed();
            let mut report = CheckReport::default();
            for m in 1..=4 {
                report.push(
                    &format!("power product m={}", m),
                    groth::serre::power_product_check(&seed, m),
                );
            }
            report
        }
        "b2-qflat" => groth::b2::b2_corpus(),
        _ => return None,
    };
    Some(report)
}

fn max_nodes(flag: Option<usize>) -> usize {
    if let Some(v) = flag {
        return v;
    }
    std::env::var("TORCLUS_MAX_NODES")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_NODES)
}

fn run() -> Result<(), (u8, String)> {
    let usage = |msg: String| (2u8, msg);
    let failure = |msg: String| (1u8, msg);
    let cli = Cli::parse();
    match cli.command {
        Command::Cartan { ty, max_m } => {
            let ty = parse_type(&ty).map_err(usage)?;
            let data = CartanData::new(ty);
            for i in 1..=data.n {
                for j in 1..=data.n {
                    let row: Vec<String> =
                        (1..=max_m).map(|m| data.ctilde(i, j, m).to_string()).collect();
                    println!("C~[{},{}]: {}", i, j, row.join(","));
                }
            }
        }
        Command::Nexp { ty, a, i, p, j, s } => {
            let ty = parse_type(&ty).map_err(usage)?;
            let data = CartanData::new(ty);
            if i < 1 || i > data.n || j < 1 || j > data.n {
                return Err(usage("node index out of range".into()));
            }
            println!("{}", data.n_exponent(a, i, p, j, s));
        }
        Command::Star {
            ty,
            quotient,
            expr_a,
            expr_b,
        } => {
            let ty = parse_type(&ty).map_err(usage)?;
            let backend = cartan_backend(ty, quotient);
            let a = parse_element(&backend, &expr_a).map_err(|e| usage(e.to_string()))?;
            let b = parse_element(&backend, &expr_b).map_err(|e| usage(e.to_string()))?;
            println!("{}", a.star(&b));
        }
        Command::Mutate { seedfile, k } => {
            let text = std::fs::read_to_string(&seedfile).map_err(|e| usage(e.to_string()))?;
            let file = SeedFile::from_json(&text).map_err(|e| usage(e.to_string()))?;
            let seed = file.build_seed().map_err(|e| usage(e.to_string()))?;
            if k < 1 || k > seed.m {
                return Err(usage(format!("direction {} is not exchangeable", k)));
            }
            let mutated = seed.mutate(k - 1).map_err(|e| failure(e.to_string()))?;
            println!("{}", SeedFile::from_seed(&mutated, &file).to_json());
        }
        Command::Graph { seedfile, max } => {
            let text = std::fs::read_to_string(&seedfile).map_err(|e| usage(e.to_string()))?;
            let file = SeedFile::from_json(&text).map_err(|e| usage(e.to_string()))?;
            let seed = file.build_seed().map_err(|e| usage(e.to_string()))?;
            let graph =
                exchange_graph(&seed, max_nodes(max)).map_err(|e| failure(e.to_string()))?;
            print!("{}", graph.to_dot());
            println!("{}", graph.summary());
        }
        Command::Verify { id, report } => {
            let checks = verify_report(&id).ok_or_else(|| usage(format!("unknown verify id {:?}", id)))?;
            let run = RunReport::from_checks(&id, checks);
            match report {
                ReportFormat::Text => print!("{}", run.to_text()),
                ReportFormat::Json => println!("{}", run.to_json()),
            }
            if !run.all_ok() {
                return Err((1, format!("{}: {} assertion(s) failed", id, run.failed)));
            }
        }
        Command::Characters { ty } => {
            let ty = parse_type(&ty).map_err(usage)?;
            if !ty.is_simply_laced() {
                for (label, class) in groth::b2::truncated_table() {
                    println!("{} = {}", label, class);
                }
                return Ok(());
            }
            let data = CartanData::new(ty);
            let xi = HeightFunction::bipartite(&data, 0);
            let backend = groth::c1::projected_backend(&data);
            for i in 1..=data.n {
                let top = groth::c1::truncated_class_c1(&backend, &xi, groth::c1::C1Label::Top(i))
                    .map_err(|e| failure(e.to_string()))?;
                let kr = groth::c1::truncated_class_c1(&backend, &xi, groth::c1::C1Label::Kr(i))
                    .map_err(|e| failure(e.to_string()))?;
                let bottom =
                    groth::c1::truncated_class_c1(&backend, &xi, groth::c1::C1Label::Bottom(i))
                        .map_err(|e| failure(e.to_string()))?;
                println!("L(Y[{i},{}]) = {}", xi.value(i) + 2, top);
                println!("L(Y[{i},{}] Y[{i},{}]) = {}", xi.value(i), xi.value(i) + 2, kr);
                println!("L(Y[{i},{}]) = {}", xi.value(i), bottom);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(code)
        }
    }
}
