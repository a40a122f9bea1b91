//! `fbeta`: batch verification of deformed half quantum algebras and their
//! doubles from instance configurations.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use fbeta::catalog;
use fbeta::datum::{AlgebraInstance, InstanceConfig, Weight};
use fbeta::double::{specialized_presentation, verify_double, verify_g_cocycle, verify_skew_hopf, Double};
use fbeta::form::{default_height_bound, Form};
use fbeta::freealg::{r_left, r_right, serre_element};
use fbeta::report::Report;
use fbeta::twist::{reference_instance, verify_twist_iso};

/// Every flag can also be set through the environment variable named in
/// its help text; flags on the command line win.
#[derive(Parser, Debug)]
#[command(
    name = "fbeta",
    version,
    about = "Verify deformed half quantum algebras and their doubles"
)]
struct Cli {
    /// Instance configuration file, or the name of a built-in instance.
    #[arg(long, env = "FBETA_INSTANCE", global = true)]
    instance: Option<String>,
    /// Largest weight height examined [default: 6 up to rank 2, 4 above].
    #[arg(long, env = "FBETA_HEIGHT", global = true, value_parser = clap::value_parser!(i64).range(1..))]
    height: Option<i64>,
    /// Largest generator word length examined by `pairing` and `double`.
    #[arg(long, env = "FBETA_LENGTH", global = true, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    length: u64,
    /// Directory for cached Gram blocks.
    #[arg(long, env = "FBETA_CACHE", global = true)]
    cache: Option<PathBuf>,
    #[arg(long, env = "FBETA_FORMAT", global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads [default: all cores].
    #[arg(long, env = "FBETA_JOBS", global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Also write the report to this file.
    #[arg(long, env = "FBETA_OUTPUT", global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Aligned table with a summary line.
    Text,
    /// One `CHECK <id> PASS|FAIL <detail>` line per check.
    Lines,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the constraints on the form tables.
    Validate,
    /// Compare graded dimensions with the undeformed reference.
    Dims,
    /// Certify that every Serre element lies in the radical.
    Serre,
    /// Check the twist isomorphism to the undeformed algebra.
    Twist,
    /// Check the skew-Hopf pairing axioms and the quadratic refinement.
    Pairing,
    /// Check the double: cross relations, straightening and Hopf axioms.
    Double,
    /// Instantiate the preset's relation tables and its generator map.
    PresetRelations,
    /// List the built-in instances.
    List,
}

fn load_instance(spec: &str) -> anyhow::Result<AlgebraInstance> {
    let path = Path::new(spec);
    let config = if path.exists() {
        InstanceConfig::from_file(path).with_context(|| format!("reading {spec}"))?
    } else if catalog::source(spec).is_some() {
        catalog::config(spec)?
    } else {
        bail!("{spec} is neither a file nor a built-in instance (see `fbeta list`)");
    };
    config.build().with_context(|| format!("building {spec}"))
}

fn form<'a>(cli: &Cli, inst: &'a AlgebraInstance, height: i64) -> Form<'a> {
    let f = Form::new(inst).with_height_bound(height);
    match &cli.cache {
        Some(dir) => f.with_cache_dir(dir),
        None => f,
    }
}

fn dims(cli: &Cli, inst: &AlgebraInstance, height: i64) -> anyhow::Result<Report> {
    let reference = reference_instance(&inst.datum);
    let (f, rf) = (form(cli, inst, height), form(cli, &reference, height));
    let mut rep = Report::new();
    for h in 1..=height {
        for nu in Weight::of_height(inst.rank(), h) {
            let (d, r) = (f.graded_dim(&nu)?, rf.graded_dim(&nu)?);
            rep.push(format!("dims.{nu}"), d == r, format!("dim {d}, reference {r}"));
        }
    }
    Ok(rep)
}

fn serre(cli: &Cli, inst: &AlgebraInstance, height: i64) -> anyhow::Result<Report> {
    let f = form(cli, inst, height);
    let n = inst.rank();
    let mut rep = Report::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let label = inst.pair_label(i, j);
            let cert = f.serre_in_radical(i, j)?;
            let bad = cert.pairings.iter().filter(|(_, p)| !p.is_zero()).count();
            rep.push(
                format!("serre.radical{label}"),
                cert.holds(),
                format!(
                    "weight {}: {bad} of {} pairings nonzero",
                    cert.weight,
                    cert.pairings.len()
                ),
            );
            let d = serre_element(i, j, inst)?;
            let bad: Vec<usize> = (0..n)
                .filter(|&l| !(r_left(l, &d, inst).is_zero() && r_right(l, &d, inst).is_zero()))
                .collect();
            rep.push(
                format!("serre.derivations{label}"),
                bad.is_empty(),
                if bad.is_empty() {
                    "every left and right derivation vanishes".to_string()
                } else {
                    format!("nonzero derivations at indices {bad:?}")
                },
            );
        }
    }
    Ok(rep)
}

fn double<'a>(cli: &Cli, inst: &'a AlgebraInstance, height: i64) -> anyhow::Result<Double<'a>> {
    let d = Double::new(inst)?.with_height_bound(height);
    Ok(match &cli.cache {
        Some(dir) => d.with_cache_dir(dir),
        None => d,
    })
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    let Some(spec) = &cli.instance else {
        bail!("--instance is required (a file or a built-in name; see `fbeta list`)");
    };
    let inst = load_instance(spec)?;
    let height = cli.height.unwrap_or_else(|| default_height_bound(inst.rank()));
    let length = cli.length as usize;
    Ok(match cli.command {
        Command::Validate => inst.validate(),
        Command::Dims => dims(cli, &inst, height)?,
        Command::Serre => serre(cli, &inst, height)?,
        Command::Twist => verify_twist_iso(&inst, height)?,
        Command::Pairing => {
            let mut rep = verify_skew_hopf(&inst, length)?;
            rep.extend(verify_g_cocycle(&inst, height)?);
            rep
        }
        Command::Double => verify_double(&double(cli, &inst, height)?, length)?,
        Command::PresetRelations => {
            let out = specialized_presentation(&double(cli, &inst, height)?)?;
            if cli.format == Format::Text {
                for line in &out.rendered {
                    println!("{line}");
                }
                println!();
            }
            out.report
        }
        Command::List => unreachable!("handled before loading an instance"),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::List = cli.command {
        for name in catalog::names() {
            println!("{name}");
        }
        return ExitCode::SUCCESS;
    }
    if let Some(k) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k as usize)
            .build_global()
            .expect("the pool is configured once");
    }
    let rep = match run(&cli) {
        Ok(rep) => rep,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Text => rep.render_text(),
        Format::Lines => rep.render_lines(),
    };
    print!("{text}");
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if rep.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
