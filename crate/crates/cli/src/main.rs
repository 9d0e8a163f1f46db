use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kac_crystal::base::{hook_bijection, Rank};
use kac_crystal::embedding::Embedding;
use kac_crystal::kac::KacElementJson;
use kac_crystal::tableau::TableauJson;
use kac_crystal::verify::{self, Check, Options};
use kac_crystal::{Error, KacCrystal, Tableau, Weight};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_NOT_IN_IMAGE: u8 = 4;

#[derive(Parser)]
#[command(name = "kac-crystal", version, about = "Crystals of q-deformed Kac modules over U_q(gl(m|n))")]
struct Cli {
    /// Worker threads; KAC_CRYSTAL_THREADS takes precedence when set.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the crystal graph of K(λ).
    Crystal {
        #[arg(long, value_parser = parse_rank)]
        rank: Rank,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 200_000)]
        cap: usize,
    },
    /// Run the structural checks on one instance or on the default sweep.
    Verify {
        /// Sweep specification; only `default` is defined.
        #[arg(long, conflicts_with_all = ["rank", "lambda"])]
        sweep: Option<String>,
        #[arg(long, value_parser = parse_rank, requires = "lambda")]
        rank: Option<Rank>,
        #[arg(long, allow_hyphen_values = true, requires = "rank")]
        lambda: Option<String>,
        /// Comma-separated subset of axioms,connected,character,rho,shift,compat,readings.
        #[arg(long)]
        checks: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 200_000)]
        cap: usize,
        /// Shuffles the order in which sweep instances are run. Results are
        /// always reported in the canonical order.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Apply ξ_λ to a tableau, or its inverse to a Kac element.
    Embed {
        #[arg(long, value_parser = parse_rank)]
        rank: Option<Rank>,
        /// Optional; must agree with the weight implied by the tableau shape.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        inverse: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

fn parse_rank(s: &str) -> Result<Rank, String> {
    let (m, n) = s
        .split_once(',')
        .ok_or_else(|| format!("expected m,n, got {s:?}"))?;
    let m = m.trim().parse::<usize>().map_err(|e| format!("m: {e}"))?;
    let n = n.trim().parse::<usize>().map_err(|e| format!("n: {e}"))?;
    Rank::new(m, n).map_err(|e| e.to_string())
}

/// An error together with the exit code it maps to.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeCapExceeded { .. } => EXIT_CAP,
            Error::NotInImage(_) => EXIT_NOT_IN_IMAGE,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure(EXIT_USAGE, format!("json: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = std::env::var("KAC_CRYSTAL_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .or(cli.threads);
    if let Some(n) = threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: {e}");
        }
    }
    let result = match cli.command {
        Command::Crystal {
            rank,
            lambda,
            format,
            out,
            cap,
        } => cmd_crystal(rank, &lambda, format, out.as_deref(), cap),
        Command::Verify {
            sweep,
            rank,
            lambda,
            checks,
            out,
            cap,
            seed,
            corrupt,
        } => cmd_verify(sweep, rank.zip(lambda), checks, out.as_deref(), cap, seed, corrupt),
        Command::Embed {
            rank,
            lambda,
            input,
            inverse,
        } => cmd_embed(rank, lambda, input.as_deref(), inverse),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn parse_lambda(rank: Rank, s: &str) -> Result<Weight, Failure> {
    let lambda = Weight::parse_for(rank, s)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()).into());
    }
    Ok(lambda)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.write_all(b"\n")?;
        }
    }
    Ok(())
}

fn cmd_crystal(rank: Rank, lambda: &str, format: Format, out: Option<&Path>, cap: usize) -> Result<u8, Failure> {
    let lambda = parse_lambda(rank, lambda)?;
    let kac = KacCrystal::new(rank, &lambda)?;
    let g = match kac.generate_graph(cap) {
        Ok(g) => g,
        Err(Error::SizeCapExceeded { cardinality, cap }) => {
            println!("cardinality={cardinality}");
            return Err(Failure(EXIT_CAP, format!("{cardinality} vertices exceed the cap of {cap}")));
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(path) = out {
        let text = match format {
            Format::Json => serde_json::to_string(&kac.graph_json(&g))?,
            Format::Dot => g.to_dot(),
        };
        fs::write(path, text)?;
    }
    println!("vertices={} edges={}", g.len(), g.edge_count());
    Ok(0)
}

fn cmd_verify(
    sweep: Option<String>,
    instance: Option<(Rank, String)>,
    checks: Option<String>,
    out: Option<&Path>,
    cap: usize,
    seed: Option<u64>,
    corrupt: bool,
) -> Result<u8, Failure> {
    let opts = Options {
        checks: match checks {
            Some(s) => Check::parse_list(&s)?,
            None => Check::ALL.to_vec(),
        },
        cap,
        corrupt,
        ..Options::default()
    };
    if let Some((rank, lambda)) = instance {
        let lambda = parse_lambda(rank, &lambda)?;
        let (report, _) = verify::run_instance(rank, &lambda, &opts)?;
        emit(out, &serde_json::to_string_pretty(&report)?)?;
        return Ok(if report.pass() { 0 } else { EXIT_FAIL });
    }
    match sweep.as_deref() {
        None | Some("default") => {}
        Some(other) => return Err(Failure(EXIT_USAGE, format!("unknown sweep {other:?}"))),
    }
    let instances = verify::sweep_instances(&verify::SWEEP_RANKS, -2, 4)?;
    let mut order: Vec<usize> = (0..instances.len()).collect();
    if let Some(seed) = seed {
        order.shuffle(&mut StdRng::seed_from_u64(seed));
    }
    let shuffled: Vec<_> = order.iter().map(|&i| instances[i].clone()).collect();
    let mut report = verify::run_instances(&shuffled, &opts)?;
    report.sort_canonical(&instances);
    let failures = report.failures().len();
    emit(out, &serde_json::to_string_pretty(&report)?)?;
    eprintln!(
        "instances={} skipped={} fake_sources={} failures={}",
        report.reports.len(),
        report.skipped.len(),
        report.fake_sources.len(),
        failures
    );
    Ok(if report.pass() { 0 } else { EXIT_FAIL })
}

fn read_input(input: Option<&Path>) -> Result<String, Failure> {
    Ok(match input {
        Some(path) => fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    })
}

fn cmd_embed(rank: Option<Rank>, lambda: Option<String>, input: Option<&Path>, inverse: bool) -> Result<u8, Failure> {
    let text = read_input(input)?;
    if inverse {
        let j: KacElementJson = serde_json::from_str(&text)?;
        let rank = match rank {
            Some(r) => r,
            None => Rank::new(j.rank[0], j.rank[1])?,
        };
        let lam = parse_lambda(rank, lambda.as_deref().unwrap_or(&j.lambda))?;
        if lam.to_string() != Weight::parse(&j.lambda)?.to_string() {
            return Err(Failure(EXIT_USAGE, format!("--lambda {lam} disagrees with the element's {}", j.lambda)));
        }
        let emb = Embedding::new(rank, &lam)?;
        let b = emb.target().element_from_json(&j)?;
        return match emb.pi_bar(&b) {
            Some(t) => {
                println!("{}", serde_json::to_string(&t.to_json())?);
                Ok(0)
            }
            None => {
                println!("null");
                Ok(EXIT_NOT_IN_IMAGE)
            }
        };
    }
    let rank = rank.ok_or_else(|| Failure(EXIT_USAGE, "--rank is required".into()))?;
    let j: TableauJson = serde_json::from_str(&text)?;
    let t = Tableau::from_json(&j)?;
    if !t.shape().is_straight() || !t.validate(rank)? {
        return Err(Failure(EXIT_USAGE, "expected a semistandard tableau of straight shape".into()));
    }
    let lam = hook_bijection(rank, t.shape().outer())?;
    if let Some(s) = lambda {
        if parse_lambda(rank, &s)? != lam {
            return Err(Failure(EXIT_USAGE, format!("the tableau shape implies lambda = {lam}")));
        }
    }
    let emb = Embedding::new(rank, &lam)?;
    let b = emb.xi(&t)?;
    println!("{}", serde_json::to_string(&emb.target().element_json(&b))?);
    Ok(0)
}
