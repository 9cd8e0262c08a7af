mod commands;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use isohorn::Error;

#[derive(Parser, Debug)]
#[command(name = "isohorn", version, about = "Exact Schubert calculus and eigencone checks for types A, B and C")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "ISOHORN_SEED", default_value_t = 1)]
    pub seed: u64,
    /// Prime below 2^32 used by the finite-field checks.
    #[arg(long, global = true, env = "ISOHORN_PRIME", default_value_t = isohorn::field::DEFAULT_PRIME)]
    pub prime: u64,
    /// Also write the result document to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeArg {
    B,
    C,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Point,
    Nonvanishing,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Littlewood-Richardson coefficient c^nu_{lambda,mu}.
    Lrcoef {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Product of cell classes in Gr(m, ambient).
    GrProduct {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        ambient: usize,
        #[arg(long)]
        indices: String,
    },
    /// Product of cell classes in IG(r, 2n).
    IgProduct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        indices: String,
    },
    /// Product of cell classes in OG(r, 2n+1).
    OgProduct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        indices: String,
    },
    /// Nonvanishing of the deformed product on IG(r, 2n).
    Deformed {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        indices: String,
    },
    /// Deformed-product criterion and its three conditions on IG(r, 2n).
    HornC {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        indices: String,
    },
    /// The orthogonal criterion on OG(r, 2n+1).
    HornB {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        indices: String,
    },
    /// Type C representatives equal 2^(n - mu) times the type B ones.
    Grain {
        #[arg(long)]
        n: usize,
    },
    /// Hom-space dimension for sequences in an r x 2n box on generic symplectic flags.
    HomDim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: String,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Expected Hom-space dimension versus the Horn inequalities.
    KeyCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: String,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Dimension of intersections of translated cells under flags preserving a form.
    Properness {
        /// none, symplectic, symmetric or even-orthogonal.
        #[arg(long)]
        form: isohorn::flag::FormKind,
        #[arg(long)]
        ambient: usize,
        /// One tuple of cells; omit to scan every tuple of `--s` cells of `--m`-planes.
        #[arg(long)]
        indices: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 3)]
        s: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
    /// Dimension of the invariants in a tensor product.
    InvariantDim {
        #[arg(long)]
        group: String,
        #[arg(long)]
        weights: String,
    },
    /// Restriction of SL invariants to Sp or SO.
    ClefCheck {
        #[arg(long)]
        group: String,
        #[arg(long)]
        weights: String,
    },
    /// SL(r) invariants of box partitions against Sp(2n) invariants of their flips.
    WalkCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: String,
    },
    /// Saturation scan over dominant triples with bounded coordinates.
    SaturationScan {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 2)]
        bound: usize,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
    /// Inequalities of the eigencone.
    EigenconeGen {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 3)]
        s: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Point)]
        mode: ModeArg,
    },
    /// Membership of a tuple of dominant Cartan elements in the eigencone.
    EigenconeMember {
        #[arg(long)]
        group: String,
        /// Rational coordinates, e.g. "(2,1) (1,1) (1,0)".
        #[arg(long)]
        h: String,
    },
    /// Isotropic versus SU eigencone membership on sample points.
    CompareCones {
        #[arg(long = "type", value_enum, ignore_case = true)]
        ty: TypeArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        s: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// The acceptance suite.
    VerifyAll {
        /// Run a single criterion.
        #[arg(long)]
        only: Option<usize>,
        #[arg(long, default_value_t = 20)]
        properness_trials: usize,
        #[arg(long, default_value_t = 100)]
        key_samples: usize,
        #[arg(long, default_value_t = 1000)]
        cone_samples: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Lrcoef { .. } => "lrcoef",
            Command::GrProduct { .. } => "gr-product",
            Command::IgProduct { .. } => "ig-product",
            Command::OgProduct { .. } => "og-product",
            Command::Deformed { .. } => "deformed",
            Command::HornC { .. } => "horn-c",
            Command::HornB { .. } => "horn-b",
            Command::Grain { .. } => "grain",
            Command::HomDim { .. } => "hom-dim",
            Command::KeyCheck { .. } => "key-check",
            Command::Properness { .. } => "properness",
            Command::InvariantDim { .. } => "invariant-dim",
            Command::ClefCheck { .. } => "clef-check",
            Command::WalkCheck { .. } => "walk-check",
            Command::SaturationScan { .. } => "saturation-scan",
            Command::EigenconeGen { .. } => "eigencone-gen",
            Command::EigenconeMember { .. } => "eigencone-member",
            Command::CompareCones { .. } => "compare-cones",
            Command::VerifyAll { .. } => "verify-all",
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidIndex(_) => "invalid-index",
        Error::InvalidPartition(_) => "invalid-partition",
        Error::InvalidWeight(_) => "invalid-weight",
        Error::Parse(_) => "parse",
        Error::Mismatch(_) => "mismatch",
        Error::Precondition(_) => "precondition",
        Error::Cap(_) => "cap",
        Error::Inconsistency(_) => "inconsistency",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cli.command.name();
    let (text, code) = match commands::run(&cli) {
        Ok(doc) => (doc.render(), doc.exit_code()),
        Err(e) => {
            eprintln!("isohorn {name}: {e}");
            let code = if matches!(e, Error::Inconsistency(_)) { 1 } else { 2 };
            (output::error_doc(name, error_kind(&e), &e.to_string()), code)
        }
    };
    if let Some(path) = &cli.common.out {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("isohorn: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
