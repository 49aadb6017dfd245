//! `cubring`: homology and cup products of 3D binary pictures.

mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cubical_ring::atmodel::ATModel;
use cubical_ring::{
    analyze_picture, complement_picture, parse_picture, verify_analysis, Analysis, Error, Picture3D,
};
use report::Report;

const EXIT_PARSE: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "cubring", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers and cell counts.
    Betti(Common),
    /// The cup-product table on H¹ × H¹ → H² and its rank.
    CupTable {
        #[command(flatten)]
        common: Common,
        /// Also draw every representative cycle as voxels.
        #[arg(long)]
        cycles: bool,
    },
    /// Representative cycles of every generator, drawn as voxels.
    Cycles(Common),
    /// Check every identity of every stage; exit 3 on the first failure.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Drop one φ entry of the final model before checking.
        #[arg(long, hide = true)]
        corrupt_phi: bool,
    },
}

#[derive(Args)]
struct Common {
    /// Picture file, or `-` for standard input.
    input: PathBuf,
    /// Analyse the background of the picture inside its padded box.
    #[arg(long)]
    complement: bool,
    /// Padding added on every side of the box with --complement.
    #[arg(long, default_value_t = 1)]
    padding: usize,
    /// Print a JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Cross-check against Gaussian elimination and the triangulated complex.
    #[arg(long)]
    oracle: bool,
    /// Report the time spent in each stage.
    #[arg(long)]
    timing: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::Disconnected(_) | Error::Usage(_) => EXIT_PRECONDITION,
            Error::Integrity(_) | Error::UnknownCell(_) => EXIT_VERIFY,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn read_picture(common: &Common) -> Result<Picture3D, Failure> {
    let mut bytes = Vec::new();
    let read = if common.input.as_os_str() == "-" {
        std::io::stdin().read_to_end(&mut bytes).map(|_| ())
    } else {
        std::fs::read(&common.input).map(|b| bytes = b)
    };
    read.map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("cannot read {}: {e}", common.input.display()),
    })?;
    let p = parse_picture(&bytes)?;
    Ok(if common.complement {
        complement_picture(&p, common.padding)
    } else {
        p
    })
}

/// The final model with the φ entry of its smallest nonzero cell removed.
fn corrupt_phi(a: &mut Analysis) -> Result<(), Failure> {
    let m = a.model();
    let mut phi = m.phi_map().clone();
    let Some(cell) = phi.iter().find(|(_, v)| !v.is_zero()).map(|(c, _)| c) else {
        return Ok(());
    };
    phi.remove(cell);
    let broken = ATModel::from_parts(
        a.k(),
        m.all_generators(),
        m.f_map().clone(),
        m.g_map().clone(),
        phi,
    )?;
    a.extension.model = broken;
    Ok(())
}

fn run(cli: Cli) -> Result<String, Failure> {
    let (common, cup, cycles, verify, corrupt) = match &cli.command {
        Command::Betti(c) => (c, false, false, false, false),
        Command::CupTable { common, cycles } => (common, true, *cycles, false, false),
        Command::Cycles(c) => (c, false, true, false, false),
        Command::Verify {
            common,
            corrupt_phi,
        } => (common, false, false, true, *corrupt_phi),
    };
    let picture = read_picture(common)?;
    let mut analysis = analyze_picture(&picture)?;
    if corrupt {
        corrupt_phi(&mut analysis)?;
    }
    let mut report = Report::new(
        common.input.display().to_string(),
        common.complement.then_some(common.padding),
        picture.dims(),
        &analysis,
    );
    if cup {
        report.with_cup(&analysis.cup);
    }
    if cycles {
        report.with_cycles(&analysis.cycles(&picture)?);
    }
    if verify || common.oracle {
        report.with_checks(&verify_analysis(&analysis, true));
    }
    if common.timing {
        report.with_timings(&analysis);
    }
    let out = if common.json {
        report.to_json()
    } else {
        report.to_text()
    };
    if let Some(f) = report.first_failure() {
        print!("{out}");
        return Err(Failure {
            code: EXIT_VERIFY,
            message: format!(
                "verification failed: {}: {}",
                f.name,
                f.failure.as_deref().unwrap_or("")
            ),
        });
    }
    Ok(out)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("cubring: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
