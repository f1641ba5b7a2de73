use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "monideal", version, about = "Exact monomial-ideal calculus from the command line")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Emit versioned JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for parallel stages.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,

    /// Ring variables, e.g. "x,y,z" or "ring x,y,z". Inferred from the input
    /// in order of first appearance when omitted.
    #[arg(long, global = true)]
    pub ring: Option<String>,

    /// The ideal to operate on, e.g. "(x^3, x*y^2, y^3*z)".
    #[arg(long, global = true)]
    pub ideal: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct IdealArg {
    /// The ideal; overrides --ideal.
    #[arg(id = "ideal_arg", value_name = "IDEAL")]
    pub ideal: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a session such as "ring x,y; I = (x,y); I^2".
    Parse {
        text: String,
    },
    /// Symbolic power I^(n).
    Symbolic {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, short)]
        n: u32,
        /// Use the expansion over disjoint variable blocks.
        #[arg(long)]
        blockwise: bool,
    },
    /// Ordinary power I^n.
    Power {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, short)]
        n: u32,
    },
    /// Membership of a monomial in I, I^n or I^(n).
    Contains {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long)]
        monomial: String,
        /// Test membership in the ordinary power I^n.
        #[arg(long, conflicts_with = "symbolic")]
        power: Option<u32>,
        /// Test membership in the symbolic power I^(n).
        #[arg(long)]
        symbolic: Option<u32>,
    },
    /// Primary (default) or irreducible decomposition.
    Decompose {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long)]
        irreducible: bool,
    },
    /// Associated primes.
    Assprimes {
        #[command(flatten)]
        input: IdealArg,
        /// Only the maximal ones.
        #[arg(long)]
        maximal: bool,
    },
    /// Decide I^(m) ⊆ I^r with a certificate.
    Check {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
    },
    /// Scan the containment grid for a resurgence lower bound.
    Scan {
        #[command(flatten)]
        input: IdealArg,
        #[arg(long, default_value_t = 6)]
        max_m: u32,
        #[arg(long, default_value_t = 6)]
        max_r: u32,
        /// Compute every cell instead of inferring by monotonicity.
        #[arg(long)]
        no_shortcuts: bool,
    },
    /// Upper bound for the resurgence of a sum from bounds a, b of the summands.
    Bounds {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Combine local witnesses "IDEAL:m:r:WITNESS" on disjoint blocks.
    CertifyProduct {
        #[arg(long = "part", required = true)]
        parts: Vec<String>,
    },
    /// Construct an ideal family.
    Family {
        #[command(subcommand)]
        kind: Family,
    },
    /// Run the full reproduction suite.
    VerifyPaper,
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// (x^(2d+1), x^(2d-1)*y^2, y^(2d+1)*z)
    #[command(name = "F", alias = "f")]
    F {
        #[arg(long)]
        d: u32,
    },
    /// Star configuration I_{m,d}.
    Star {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: u32,
    },
    /// Sum of three disjoint copies of I_{m,2m-1}.
    Pm {
        #[arg(long)]
        m: u32,
    },
    /// k disjoint copies of --ideal.
    Iterated {
        #[arg(long)]
        k: u32,
    },
}
