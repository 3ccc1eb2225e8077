use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use fsing_cli::{run_report, JobSpec, Primes};

#[derive(Parser)]
#[command(name = "fsing", version, about = "Frobenius computations in positive characteristic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Groebner basis of the ideal generated by --gens.
    Gb(Opts),
    /// Ideal membership of --f in (--gens).
    Member(Opts),
    /// Colon ideal (--gens) : (--by).
    Colon(Opts),
    /// Bracket power I^[p^e].
    BracketPower(Opts),
    /// Fedder's F-purity criterion.
    Fedder(Opts),
    /// Frobenius structures (I^[q] : I) modulo I^[q].
    EStructures(Opts),
    /// Whether --tau / I is stable under all Frobenius structures.
    RfSubmodule(Opts),
    /// p^e-linear maps v -> A v^[q].
    Semilinear {
        #[command(subcommand)]
        action: SemilinearCmd,
    },
    /// Local cohomology of a graded hypersurface.
    Lc {
        #[command(subcommand)]
        action: LcCmd,
    },
    /// Run a command for every prime in --primes and print CSV.
    Sweep {
        #[command(subcommand)]
        inner: SweepCmd,
    },
    /// Run a TOML job file.
    Run {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum SemilinearCmd {
    Iterate(Opts),
    BaseChange(Opts),
    Fixed(Opts),
    FixedBasis(Opts),
    Stable(Opts),
    Counterexample(Opts),
}

#[derive(Subcommand)]
enum LcCmd {
    Basis(Opts),
    Frobenius(Opts),
    Verdict(Opts),
    Socle(Opts),
    DualCheck(Opts),
}

#[derive(Subcommand)]
enum SweepCmd {
    Gb(Opts),
    Member(Opts),
    Colon(Opts),
    BracketPower(Opts),
    Fedder(Opts),
    EStructures(Opts),
    RfSubmodule(Opts),
    Lc {
        #[command(subcommand)]
        action: LcCmd,
    },
}

#[derive(Args, Clone, Default)]
struct Opts {
    #[arg(long)]
    p: Option<u64>,
    /// Comma-separated list, e.g. 3,5,7, or a range 3..20.
    #[arg(long)]
    primes: Option<String>,
    /// Comma-separated variable names; defaults to the identifiers used.
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<u64>>,
    /// Comma-separated generators.
    #[arg(long)]
    gens: Option<String>,
    #[arg(long)]
    f: Option<String>,
    #[arg(long)]
    by: Option<String>,
    #[arg(long)]
    tau: Option<String>,
    /// grevlex (default), lex or grlex.
    #[arg(long)]
    order: Option<String>,
    #[arg(long)]
    e: Option<u32>,
    #[arg(long)]
    q: Option<u64>,
    /// Coefficient field F_{p^m}.
    #[arg(long = "field-degree", short = 'm')]
    field_degree: Option<usize>,
    /// Matrix such as "[0,1;1,x]".
    #[arg(long = "A")]
    a: Option<String>,
    /// Change of basis matrix.
    #[arg(long = "C")]
    c: Option<String>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long = "max-ext")]
    max_ext: Option<usize>,
    #[arg(long = "t-max")]
    t_max: Option<u32>,
    #[arg(long = "deg-max")]
    deg_max: Option<u64>,
    /// Search the Artin-Schreier control equation instead.
    #[arg(long)]
    control: bool,
    /// A Cech class such as "z^3 / x^2*y".
    #[arg(long)]
    class: Option<String>,
    #[arg(long = "max-basis-size")]
    max_basis_size: Option<usize>,
    #[arg(long = "max-reduction-steps")]
    max_reduction_steps: Option<u64>,
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
}

impl Opts {
    fn into_job(self, command: &str) -> Result<(JobSpec, bool)> {
        let list = |s: Option<String>| s.map(|s| vec![s]);
        let job = JobSpec {
            command: command.to_string(),
            p: self.p,
            primes: self.primes.as_deref().map(Primes::parse).transpose()?,
            variables: self.vars,
            weights: self.weights,
            generators: list(self.gens),
            f: self.f,
            by: list(self.by),
            tau: list(self.tau),
            order: self.order,
            e: self.e,
            q: self.q,
            field_degree: self.field_degree,
            matrix: self.a,
            change: self.c,
            r: self.r,
            max_ext: self.max_ext,
            t_max: self.t_max,
            deg_max: self.deg_max,
            control: self.control.then_some(true),
            class: self.class,
            max_basis_size: self.max_basis_size,
            max_reduction_steps: self.max_reduction_steps,
        };
        Ok((job, self.json))
    }
}

fn lc_job(action: LcCmd, prefix: &str) -> Result<(JobSpec, bool)> {
    match action {
        LcCmd::Basis(o) => o.into_job(&format!("{prefix}lc basis")),
        LcCmd::Frobenius(o) => o.into_job(&format!("{prefix}lc frobenius")),
        LcCmd::Verdict(o) => o.into_job(&format!("{prefix}lc verdict")),
        LcCmd::Socle(o) => o.into_job(&format!("{prefix}lc socle")),
        LcCmd::DualCheck(o) => o.into_job(&format!("{prefix}lc dual-check")),
    }
}

fn job_of(command: Command) -> Result<(JobSpec, bool)> {
    match command {
        Command::Gb(o) => o.into_job("gb"),
        Command::Member(o) => o.into_job("member"),
        Command::Colon(o) => o.into_job("colon"),
        Command::BracketPower(o) => o.into_job("bracket-power"),
        Command::Fedder(o) => o.into_job("fedder"),
        Command::EStructures(o) => o.into_job("e-structures"),
        Command::RfSubmodule(o) => o.into_job("rf-submodule"),
        Command::Semilinear { action } => match action {
            SemilinearCmd::Iterate(o) => o.into_job("semilinear iterate"),
            SemilinearCmd::BaseChange(o) => o.into_job("semilinear base-change"),
            SemilinearCmd::Fixed(o) => o.into_job("semilinear fixed"),
            SemilinearCmd::FixedBasis(o) => o.into_job("semilinear fixed-basis"),
            SemilinearCmd::Stable(o) => o.into_job("semilinear stable"),
            SemilinearCmd::Counterexample(o) => o.into_job("semilinear counterexample"),
        },
        Command::Lc { action } => lc_job(action, ""),
        Command::Sweep { inner } => match inner {
            SweepCmd::Gb(o) => o.into_job("sweep gb"),
            SweepCmd::Member(o) => o.into_job("sweep member"),
            SweepCmd::Colon(o) => o.into_job("sweep colon"),
            SweepCmd::BracketPower(o) => o.into_job("sweep bracket-power"),
            SweepCmd::Fedder(o) => o.into_job("sweep fedder"),
            SweepCmd::EStructures(o) => o.into_job("sweep e-structures"),
            SweepCmd::RfSubmodule(o) => o.into_job("sweep rf-submodule"),
            SweepCmd::Lc { action } => lc_job(action, "sweep "),
        },
        Command::Run { file, json } => {
            let src = std::fs::read_to_string(&file).with_context(|| format!("cannot read {}", file.display()))?;
            Ok((JobSpec::from_toml(&src)?, json))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = job_of(cli.command).and_then(|(job, json)| {
        let (report, text) = run_report(&job)?;
        if json {
            println!("{}", report.to_json());
        } else {
            println!("{text}");
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
