//! Command-line surface: abscissa solving, radii, lifts, lattices, oracles,
//! and sweep output for plotting.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use bohr_abscissa::error::Error;
use bohr_abscissa::lift::{lattice_for_degree, lift, rogosinski_halfplane_bound, DirichletPolynomial};
use bohr_abscissa::oracle::{direct_sum_oracle, read_fixture, write_fixture, OracleReport};
use bohr_abscissa::output::{format_float, OutputRecord};
use bohr_abscissa::primes::PrimeTable;
use bohr_abscissa::solver::{rogosinski_radius_with, solve_abscissa, R2Reading};
use bohr_abscissa::verify;
use bohr_abscissa::zeta::{almost_prime_zeta, bohr_sum, prime_zeta, TruncationPolicy};

#[derive(Parser)]
#[command(name = "bohr", version, about = "Bohr and Rogosinski abscissas for ordinary Dirichlet series")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Printed digits after the decimal point.
    #[arg(long, global = true, default_value_t = 10)]
    precision: usize,

    /// Sieve limit for oracle summations.
    #[arg(long = "prime-limit", global = true, default_value_t = 1_000_000)]
    prime_limit: u64,

    /// Solver / residual tolerance.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,

    /// Print bare values only.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PaperTarget {
    /// F(σ) = 1/2, root near 1.7267.
    Bohr,
    /// F(σ) = 1, root near 1.2061.
    Mixed,
}

#[derive(Subcommand)]
enum Command {
    /// Solve F(σ) = target by certified bisection.
    Abscissa {
        #[arg(long, conflicts_with = "paper")]
        target: Option<f64>,
        #[arg(long, value_enum)]
        paper: Option<PaperTarget>,
    },
    /// Rogosinski radius r_l.
    RogosinskiRadius {
        #[arg(long)]
        l: u32,
        /// Use the monotone reading √(3/8) for r₂ instead of the stated √3/8.
        #[arg(long)]
        alternate_r2: bool,
    },
    /// Prime zeta function P(s).
    PrimeZeta {
        #[arg(long)]
        s: f64,
    },
    /// Almost-prime zeta sum S_k(s).
    AlmostPrimeZeta {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        s: f64,
    },
    /// F(σ) at a point, or a CSV sweep over a σ range.
    BohrSum {
        #[arg(long, conflicts_with = "sweep")]
        sigma: Option<f64>,
        /// Range lo:hi:step; emits CSV `sigma,value,error`.
        #[arg(long)]
        sweep: Option<String>,
    },
    /// Lift a Dirichlet polynomial file to its monomial expansion.
    Lift {
        #[arg(long)]
        input: PathBuf,
    },
    /// Exponent lattice of degree k with verified integer weights.
    Lattice {
        #[arg(long)]
        k: u64,
    },
    /// Certified Rogosinski half-plane abscissa bound for degree k.
    RogosinskiBound {
        #[arg(long)]
        k: u64,
    },
    /// Brute-force validators.
    Oracle {
        #[command(subcommand)]
        op: OracleCommand,
    },
    /// Run the acceptance suite and print a pass/fail table.
    Verify,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Σ_{n ≤ N, Ω(n)=k} n^{-s} by literal enumeration.
    DirectSum {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        s: f64,
        #[arg(long = "N")]
        n: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn emit(record: &OutputRecord, cli: &Cli) {
    if cli.quiet {
        match &record.value {
            serde_json::Value::Number(n) => {
                println!("{}", format_float(n.as_f64().unwrap_or(f64::NAN), cli.precision));
            }
            other => println!("{other}"),
        }
        return;
    }
    match cli.format {
        Format::Text => println!("{}", record.to_text(cli.precision)),
        Format::Json => println!("{}", record.to_json()),
        Format::Csv => print!("{}", record.to_csv(cli.precision)),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let policy = TruncationPolicy::default();
    match &cli.command {
        Command::Abscissa { target, paper } => {
            let (target, citation) = match (target, paper) {
                (Some(t), None) => (*t, "Eq. (3.3)"),
                (None, Some(PaperTarget::Bohr)) => (0.5, "Thm 3.1"),
                (None, Some(PaperTarget::Mixed)) => (1.0, "Thm 3.3"),
                _ => {
                    eprintln!("error: provide exactly one of --target or --paper");
                    return Ok(ExitCode::from(1));
                }
            };
            let r = solve_abscissa(target, &policy, cli.tol)?;
            let record = OutputRecord::new("abscissa")
                .param("target", target)
                .param("tol", cli.tol)
                .value(json!({
                    "root": r.root,
                    "bracket": [r.bracket.0, r.bracket.1],
                    "residual": {"value": r.residual.value(), "error": r.residual.error()},
                    "iterations": r.iterations,
                }))
                .error_bound(0.5 * (r.bracket.1 - r.bracket.0))
                .cite(citation);
            if cli.quiet {
                println!("{}", format_float(r.root, cli.precision));
            } else {
                emit(&record, &cli);
            }
        }
        Command::RogosinskiRadius { l, alternate_r2 } => {
            let reading = if *alternate_r2 { R2Reading::Alternate } else { R2Reading::Literal };
            let r = rogosinski_radius_with(*l, cli.tol.min(1e-12), reading)?;
            let mut record = OutputRecord::new("rogosinski-radius")
                .param("l", *l)
                .value(r)
                .cite("Thm 1.4");
            if *l >= 3 {
                record = record.error_bound(cli.tol.min(1e-12));
            }
            emit(&record, &cli);
        }
        Command::PrimeZeta { s } => {
            let p = prime_zeta(*s, &policy)?;
            let record =
                OutputRecord::new("prime-zeta").param("s", *s).value(p.value()).error_bound(p.error());
            emit(&record, &cli);
        }
        Command::AlmostPrimeZeta { k, s } => {
            let v = almost_prime_zeta(*k, *s, &policy)?;
            let record = OutputRecord::new("almost-prime-zeta")
                .param("k", *k)
                .param("s", *s)
                .value(v.value())
                .error_bound(v.error())
                .cite("Eq. (3.3)");
            emit(&record, &cli);
        }
        Command::BohrSum { sigma, sweep } => match (sigma, sweep) {
            (Some(sigma), None) => {
                let f = bohr_sum(*sigma, &policy)?;
                let record = OutputRecord::new("bohr-sum")
                    .param("sigma", *sigma)
                    .value(f.value())
                    .error_bound(f.error())
                    .cite("Eq. (3.3)");
                emit(&record, &cli);
            }
            (None, Some(range)) => {
                let (lo, hi, step) = parse_range(range)?;
                println!("sigma,value,error");
                let mut sigma = lo;
                while sigma <= hi + 1e-15 {
                    let f = bohr_sum(sigma, &policy)?;
                    println!(
                        "{},{},{}",
                        format_float(sigma, cli.precision),
                        format_float(f.value(), cli.precision),
                        format!("{:.3e}", f.error())
                    );
                    sigma += step;
                }
            }
            _ => {
                eprintln!("error: provide exactly one of --sigma or --sweep");
                return Ok(ExitCode::from(1));
            }
        },
        Command::Lift { input } => {
            let text = std::fs::read_to_string(input)?;
            let poly = DirichletPolynomial::parse(&text)?;
            let table = PrimeTable::build(poly.degree().max(2))?;
            let expansion = lift(&poly, &table)?;
            let terms: Vec<serde_json::Value> = expansion
                .terms()
                .iter()
                .map(|(c, e)| json!({"re": c.re, "im": c.im, "exponents": e}))
                .collect();
            let record = OutputRecord::new("lift")
                .param("input", input.display().to_string())
                .param("degree", poly.degree())
                .value(json!({"basis": expansion.prime_basis(), "terms": terms}))
                .cite("Eq. (2.1)");
            emit(&record, &cli);
        }
        Command::Lattice { k } => {
            let table = PrimeTable::build((*k).max(2))?;
            let spec = lattice_for_degree(*k, &table)?;
            let record = OutputRecord::new("lattice")
                .param("k", *k)
                .value(json!({
                    "basis": spec.prime_basis(),
                    "weights": spec.integer_weights(),
                    "bound": spec.integer_bound(),
                    "points": spec.points(),
                }))
                .cite("Eq. (2.3)")
                .cite("Eq. (2.4)");
            emit(&record, &cli);
        }
        Command::RogosinskiBound { k } => {
            let table = PrimeTable::build((*k).max(2))?;
            let bound = rogosinski_halfplane_bound(*k, &table, cli.tol.min(1e-12))?;
            let record = OutputRecord::new("rogosinski-bound")
                .param("k", *k)
                .value(bound)
                .cite("Thm 1.4")
                .cite("Thm 2.3");
            emit(&record, &cli);
        }
        Command::Oracle { op } => match op {
            OracleCommand::DirectSum { k, s, n } => {
                let report = cached_direct_sum(*k, *s, *n, cli.prime_limit)?;
                let record = OutputRecord::new("oracle direct-sum")
                    .param("k", *k)
                    .param("s", *s)
                    .param("N", *n)
                    .value(json!({
                        "value": report.value,
                        "tail_bound": report.tail_bound,
                        "terms_used": report.terms_used,
                    }))
                    .error_bound(report.tail_bound);
                emit(&record, &cli);
            }
        },
        Command::Verify => {
            let results = verify::run_all(&policy)?;
            let all_passed = results.iter().all(|r| r.passed);
            match cli.format {
                Format::Json => {
                    for r in &results {
                        let record = OutputRecord::new("verify")
                            .param("criterion", r.id)
                            .param("name", r.name)
                            .value(json!({"passed": r.passed, "detail": r.detail}));
                        println!("{}", record.to_json());
                    }
                    for (name, value, anchor) in verify::cited_constants() {
                        let record = OutputRecord::new("verify")
                            .param("name", name)
                            .value(value)
                            .cited()
                            .cite(anchor);
                        println!("{}", record.to_json());
                    }
                }
                _ => {
                    if !cli.quiet {
                        for r in &results {
                            println!(
                                "[{}] {} {:<22} {}",
                                if r.passed { "PASS" } else { "FAIL" },
                                r.id,
                                r.name,
                                r.detail
                            );
                        }
                        for (name, value, anchor) in verify::cited_constants() {
                            println!("[....] - {name:<22} {value:.10}  [cited: {anchor}]");
                        }
                    }
                    println!(
                        "overall: {} ({}/{} criteria)",
                        if all_passed { "PASS" } else { "FAIL" },
                        results.iter().filter(|r| r.passed).count(),
                        results.len()
                    );
                }
            }
            if !all_passed {
                return Ok(ExitCode::from(3));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_range(text: &str) -> Result<(f64, f64, f64), Error> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("expected lo:hi:step, got {text:?}")));
    }
    let lo: f64 = parts[0].parse().map_err(|e| Error::Parse(format!("bad lo: {e}")))?;
    let hi: f64 = parts[1].parse().map_err(|e| Error::Parse(format!("bad hi: {e}")))?;
    let step: f64 = parts[2].parse().map_err(|e| Error::Parse(format!("bad step: {e}")))?;
    if !(step > 0.0) || hi < lo {
        return Err(Error::Parse(format!("need lo <= hi and step > 0, got {text:?}")));
    }
    Ok((lo, hi, step))
}

/// Direct-sum oracle with optional fixture caching via `BOHR_FIXTURE_DIR`.
fn cached_direct_sum(k: u32, s: f64, n: u64, prime_limit: u64) -> Result<OracleReport, Error> {
    let fixture_path = std::env::var_os("BOHR_FIXTURE_DIR")
        .map(|dir| PathBuf::from(dir).join("oracle.txt"));

    if let Some(path) = &fixture_path {
        if path.exists() {
            let cached = read_fixture(path)?;
            if let Some(hit) = cached.iter().find(|r| r.k == k && r.s == s && r.limit == n) {
                return Ok(hit.clone());
            }
        }
    }

    let table = PrimeTable::build(prime_limit.max(n).max(2))?;
    let report = direct_sum_oracle(k, s, n, &table)?;

    if let Some(path) = &fixture_path {
        let mut records = if path.exists() { read_fixture(path)? } else { Vec::new() };
        records.push(report.clone());
        write_fixture(path, &records)?;
    }
    Ok(report)
}
