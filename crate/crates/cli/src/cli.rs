use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use normed_forms_core::{BigInt, Form};

#[derive(Parser, Debug)]
#[command(name = "normed-forms", version)]
#[command(about = "Integer normed pairings on binary quadratic forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Discriminant, definiteness, content and reduction of a form
    FormInfo(FormArgs),
    /// Decide which pairing types a form admits
    Classify(ClassifyArgs),
    /// Sample the (-,-) curve of a form as CSV
    Curve(CurveArgs),
    /// Check a pairing (A1|A2) against a form
    Verify(VerifyArgs),
    /// Classify every reduced primitive form in a discriminant range
    Catalog(CatalogArgs),
    /// Probe the semigroup property on a sample box
    Probe(ProbeArgs),
    /// Embed a form as a lattice in Q(tau) and report its stabilities
    Lattice(LatticeArgs),
}

#[derive(Args, Debug, Clone)]
pub struct FormArgs {
    #[arg(allow_negative_numbers = true)]
    pub m: BigInt,
    #[arg(allow_negative_numbers = true)]
    pub k: BigInt,
    #[arg(allow_negative_numbers = true)]
    pub n: BigInt,
}

impl FormArgs {
    pub fn form(&self) -> Form {
        Form { m: self.m.clone(), k: self.k.clone(), n: self.n.clone() }
    }
}

#[derive(Args, Debug, Clone)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub form: FormArgs,
    /// Coordinate bound for searches on indefinite forms
    #[arg(long = "box", default_value = "100")]
    pub box_bound: BigInt,
    /// Exit with code 3 if any verdict is only a bounded search
    #[arg(long)]
    pub strict: bool,
    /// Include wall-clock time in the record
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug, Clone)]
pub struct CurveArgs {
    #[command(flatten)]
    pub form: FormArgs,
    /// Number of rows
    #[arg(long, default_value = "200")]
    pub samples: usize,
    /// Defaults to 0 (definite) or -2 (indefinite)
    #[arg(long, allow_negative_numbers = true)]
    pub theta_min: Option<f64>,
    /// Exclusive; defaults to 2 pi (definite) or 2 (indefinite)
    #[arg(long, allow_negative_numbers = true)]
    pub theta_max: Option<f64>,
    /// Emit the minus branch instead of the plus branch
    #[arg(long)]
    pub minus: bool,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// A1 and A2 row by row, then m k n
    #[arg(
        required = true,
        num_args = 11,
        allow_negative_numbers = true,
        value_names = ["A1_11", "A1_12", "A1_21", "A1_22", "A2_11", "A2_12", "A2_21", "A2_22", "M", "K", "N"]
    )]
    pub values: Vec<BigInt>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogFormat {
    Jsonl,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct CatalogArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub dmin: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub dmax: i64,
    #[arg(long, value_enum, default_value = "jsonl")]
    pub format: CatalogFormat,
    /// Write here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Search bound for indefinite forms; required for positive discriminants
    #[arg(long = "box")]
    pub box_bound: Option<BigInt>,
    /// Sample box for the semigroup probe
    #[arg(long, default_value = "3")]
    pub sample_bound: BigInt,
}

#[derive(Args, Debug, Clone)]
pub struct ProbeArgs {
    #[command(flatten)]
    pub form: FormArgs,
    #[arg(long, default_value = "3")]
    pub sample_bound: BigInt,
    /// Search bound for representations by indefinite forms
    #[arg(long = "box", default_value = "100")]
    pub box_bound: BigInt,
}

#[derive(Args, Debug, Clone)]
pub struct LatticeArgs {
    #[command(flatten)]
    pub form: FormArgs,
    /// Height bound of the embedding search
    #[arg(long, default_value = "6")]
    pub height: BigInt,
}
