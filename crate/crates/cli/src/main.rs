use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use jacklr::args::parse_partition;
use jacklr::cache::JackCache;
use jacklr::checks::{run_suite, Context, Settings, Suite};
use jacklr::CliError;
use jacklr_partitions::Partition;
use jacklr_symfunc::JackTable;

#[derive(Parser)]
#[command(name = "jacklr", version, about = "Jack Littlewood-Richardson coefficients and their hook calculus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Engine {
    /// Largest degree of Jack polynomial to compute.
    #[arg(long, default_value_t = jacklr_symfunc::DEFAULT_DEGREE_CAP)]
    degree_cap: u32,
    /// Jack cache directory (default: $JACKLR_CACHE_DIR; no cache if unset).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct Triple {
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    #[arg(long, value_parser = parse_partition)]
    nu: Partition,
    #[arg(long, value_parser = parse_partition)]
    lam: Partition,
}

#[derive(Subcommand)]
enum Command {
    /// J_λ in the monomial basis.
    Jack {
        #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
        lam: Partition,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        engine: Engine,
    },
    /// The Jack LR coefficient g_{μν}^λ.
    Lr {
        #[command(flatten)]
        triple: Triple,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        engine: Engine,
    },
    /// The Stanley coefficient g_{μν;λ} = g_{μν}^λ·j_λ.
    Stanley {
        #[command(flatten)]
        triple: Triple,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        engine: Engine,
    },
    /// Run a verification suite and write a JSON report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        max_weight: u32,
        /// Random samples per randomized check.
        #[arg(long, default_value_t = 200)]
        samples: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value = "report.json")]
        out: PathBuf,
        #[command(flatten)]
        engine: Engine,
    },
}

fn table(engine: &Engine) -> (Arc<JackTable>, Option<JackCache>) {
    let jacks = Arc::new(JackTable::new(engine.degree_cap));
    let mut cache = JackCache::resolve(engine.cache_dir.as_deref());
    if let Some(c) = cache.as_mut() {
        c.preload(&jacks);
        for w in c.warnings() {
            eprintln!("warning: {w}");
        }
    }
    (jacks, cache)
}

fn save(jacks: &JackTable, cache: Option<JackCache>) {
    if let Some(c) = cache {
        if let Err(e) = c.store(jacks) {
            eprintln!("warning: could not write the Jack cache to {}: {e}", c.dir().display());
        }
    }
}

fn emit(json: bool, fields: &[(&str, String)], value: String) -> Result<(), CliError> {
    if json {
        let mut map = serde_json::Map::new();
        for (k, v) in fields {
            map.insert(k.to_string(), v.clone().into());
        }
        map.insert("value".to_string(), value.into());
        println!("{}", serde_json::to_string_pretty(&map)?);
    } else {
        println!("{value}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Jack { lam, json, engine } => {
            let (jacks, cache) = table(&engine);
            let j = jacks.jack(&lam)?;
            let text = if lam.weight() == 0 { j.coeff_poly(&lam).to_string() } else { j.to_string() };
            save(&jacks, cache);
            emit(json, &[("lam", lam.to_string())], text)?;
        }
        Command::Lr { triple: t, json, engine } => {
            let (jacks, cache) = table(&engine);
            let g = jacks.lr_coefficient(&t.mu, &t.nu, &t.lam)?;
            save(&jacks, cache);
            emit(json, &[("mu", t.mu.to_string()), ("nu", t.nu.to_string()), ("lam", t.lam.to_string())], g.to_string())?;
        }
        Command::Stanley { triple: t, json, engine } => {
            let (jacks, cache) = table(&engine);
            let g = jacks.stanley_coefficient(&t.mu, &t.nu, &t.lam)?;
            save(&jacks, cache);
            emit(json, &[("mu", t.mu.to_string()), ("nu", t.nu.to_string()), ("lam", t.lam.to_string())], g.to_string())?;
        }
        Command::Verify { suite, max_weight, samples, seed, jobs, out, engine } => {
            let (jacks, cache) = table(&engine);
            let settings = Settings {
                degree_cap: engine.degree_cap,
                max_weight,
                samples,
                seed,
                jobs: jobs.unwrap_or(Settings::default().jobs),
            };
            let ctx = Context::with_table(settings, jacks.clone());
            let report = run_suite(suite, &ctx);
            save(&jacks, cache);
            std::fs::write(&out, report.to_json()? + "\n")?;
            for c in &report.checks {
                println!("{c}");
            }
            let failed = report.failures().count();
            println!("{} checks, {failed} failed; report written to {}", report.checks.len(), out.display());
            return Ok(failed == 0);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
