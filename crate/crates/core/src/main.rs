use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rank1::catalog::{self, Lemma};
use rank1::einstein;
use rank1::lie::{build_algebra, decompose, Family, LieAlgebraQ};
use rank1::report::Report;
use rank1::{albert, Error};

#[derive(Parser)]
#[command(
    name = "rank1",
    version,
    about = "Exact verification for rank-one real simple Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and print its dimension and form signatures.
    Construct {
        #[arg(long, value_parser = parse_family)]
        algebra: Family,
    },
    /// Run lemma checks and report.
    Verify {
        #[arg(long, value_parser = parse_family)]
        algebra: Family,
        /// A lemma id, or `all`.
        #[arg(long, default_value = "all", value_parser = parse_lemmas)]
        lemma: LemmaSel,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write structure data as JSON.
    Export {
        #[arg(long, value_parser = parse_family)]
        algebra: Family,
        #[arg(long, value_enum, default_value_t = Export::Structure)]
        what: Export,
        /// Output file; stdout when absent.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone)]
struct LemmaSel(Vec<Lemma>);

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Export {
    /// Basis labels and structure constants; for f4 also the 26-dimensional representation.
    Structure,
    /// Root spaces, `H` and `B(H,H)`.
    Decomposition,
    /// Null basepoint, stabilizer and block signatures of the flat model.
    Isotropy,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_lemmas(s: &str) -> Result<LemmaSel, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(LemmaSel(Lemma::ALL.to_vec()));
    }
    s.parse::<Lemma>()
        .map(|l| LemmaSel(vec![l]))
        .map_err(|e| e.to_string())
}

fn configure_threads() {
    let Some(n) = std::env::var("RANK1_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    else {
        return;
    };
    // Fails only if a pool already exists, which cannot happen this early.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
}

fn construct(family: Family) -> Result<bool, Error> {
    let g = build_algebra(family)?;
    let killing = g.killing().signature();
    let b_theta = g.b_theta_form()?.signature();
    let checks = [
        ("antisymmetric", g.is_antisymmetric()),
        ("Jacobi", g.jacobi_holds()),
        ("theta involution", g.theta_is_involution()),
        ("theta automorphism", g.theta_is_automorphism()),
        ("Killing nondegenerate", killing.is_nondegenerate()),
        ("B_theta positive definite", b_theta.is_positive_definite()),
    ];
    println!("algebra: {family}");
    println!("dim: {}", g.dim());
    println!(
        "Killing signature: ({},{})",
        killing.n_plus, killing.n_minus
    );
    println!("dim k: {}, dim p: {}", g.k_part().dim(), g.p_part().dim());
    println!(
        "B_theta positive definite: {}",
        b_theta.is_positive_definite()
    );
    let mut ok = true;
    for (name, holds) in checks {
        if !holds {
            println!("FAILED {name}");
            ok = false;
        }
    }
    Ok(ok)
}

fn verify(
    family: Family,
    lemmas: &[Lemma],
    seed: u64,
    trials: usize,
    format: Format,
) -> Result<bool, Error> {
    let reports = catalog::run_many(family, lemmas, seed, trials)?;
    let ok = reports.iter().all(Report::passed);
    match format {
        Format::Text => {
            for r in &reports {
                println!("{r}");
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            println!("{family}: {} lemmas, {failed} failed", reports.len());
        }
        Format::Json => {
            let doc = json!({
                "schema": 1,
                "algebra": family.to_string(),
                "seed": seed,
                "trials": trials,
                "passed": ok,
                "reports": reports,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("reports serialize")
            );
        }
    }
    Ok(ok)
}

fn structure_json(g: &LieAlgebraQ) -> serde_json::Value {
    let n = g.dim();
    let constants: Vec<Vec<Vec<String>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut row = vec!["0/1".to_string(); n];
                    for (k, v) in g.bracket_basis(i, j) {
                        row[*k] = v.to_string();
                    }
                    row
                })
                .collect()
        })
        .collect();
    json!({
        "schema": 1,
        "algebra": g.name(),
        "basis_labels": g.labels(),
        "structure_constants": constants,
    })
}

fn export(family: Family, what: Export) -> Result<serde_json::Value, Error> {
    if let (Family::F4, Export::Structure) = (family, what) {
        let der = albert::derivation_algebra()?;
        return Ok(albert::export_json(der, &albert::restrict_to_j0(der)));
    }
    let g = build_algebra(family)?;
    Ok(match what {
        Export::Structure => structure_json(&g),
        Export::Decomposition => {
            let rd = decompose(family, &g)?;
            json!({"schema": 1, "algebra": family.to_string(), "dims": rd.dims(), "decomposition": rd})
        }
        Export::Isotropy => {
            let rd = decompose(family, &g)?;
            let e = einstein::build_embedding(family, &g)?;
            let iso = einstein::null_isotropy(&e, &rd)?;
            json!({"schema": 1, "algebra": family.to_string(), "isotropy": iso})
        }
    })
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Construct { algebra } => construct(algebra),
        Command::Verify {
            algebra,
            lemma,
            seed,
            trials,
            format,
        } => verify(algebra, &lemma.0, seed, trials, format),
        Command::Export {
            algebra,
            what,
            output,
        } => {
            let text =
                serde_json::to_string_pretty(&export(algebra, what)?).expect("export serializes");
            let Some(path) = output else {
                println!("{text}");
                return Ok(true);
            };
            if let Err(e) = fs::write(&path, text + "\n") {
                eprintln!("error: {}: {e}", path.display());
                return Ok(false);
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ Error::Parse(_)) | Err(e @ Error::UnsupportedParameters(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
