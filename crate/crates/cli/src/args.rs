use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::format::Format;

#[derive(Parser, Debug)]
#[command(
    name = "fusionlab",
    version,
    about = "q-supernomials, fusion and Demazure characters, and their statistics"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct LArg {
    /// Admission vector, e.g. `0,4`.
    #[arg(
        long = "L",
        value_delimiter = ',',
        required = true,
        allow_negative_numbers = true
    )]
    pub l: Vec<i64>,
}

#[derive(Args, Debug, Clone)]
pub struct WordArg {
    /// Dominant weight `m,n` of `m Lambda_0 + n Lambda_1`.
    #[arg(long, value_parser = parse_pair)]
    pub weight: (i64, i64),
    /// Reduced word, e.g. `s1s0^2` or `s0(s1s0)^2`.
    #[arg(
        long,
        conflicts_with = "word_letters",
        required_unless_present = "word_letters"
    )]
    pub word: Option<String>,
    /// Reduced word as letter indices, e.g. `1,0,1,0`.
    #[arg(long, value_delimiter = ',')]
    pub word_letters: Option<Vec<u8>>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Supernomial coefficient at doubled weight `a2`, or the whole generating function.
    Supernomial {
        #[command(flatten)]
        l: LArg,
        #[arg(long, allow_negative_numbers = true)]
        a2: Option<i64>,
    },
    /// The string `T~(L, a)`, or all of them.
    Ttilde {
        #[command(flatten)]
        l: LArg,
        #[arg(long, allow_negative_numbers = true)]
        a: Option<i64>,
    },
    /// Graded character of the fusion module.
    FusionChar {
        #[command(flatten)]
        l: LArg,
    },
    /// Fusion character at `z = 1`.
    BasicSpec {
        #[command(flatten)]
        l: LArg,
    },
    /// Central string function(s) and their normalizations.
    CentralString {
        #[command(flatten)]
        l: LArg,
    },
    /// Demazure character relative to the highest weight.
    Demazure {
        #[command(flatten)]
        word: WordArg,
    },
    /// Exhaustive identity checks.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Exact moments and closed forms.
    Stats {
        #[command(subcommand)]
        stat: StatsCommand,
    },
    /// Kolmogorov distance to the normal law along a family.
    CltScan(ScanArgs),
    /// Local Gaussian deviation along a family.
    LcltScan(ScanArgs),
    /// Kostka polynomial `K_{eta, mu}(q)`.
    Kostka {
        #[arg(long, value_delimiter = ',', required = true)]
        eta: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<usize>,
    },
    /// Generalized supernomial `S_{xi, mu}(q)`.
    SupernomialGeneral {
        #[arg(long, value_delimiter = ',', required = true)]
        xi: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<usize>,
        /// Report `S*` instead.
        #[arg(long)]
        star: bool,
    },
    /// Strings of the type-A fusion of symmetric powers `mu`.
    #[command(name = "typeA-char")]
    TypeAChar {
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<usize>,
        #[arg(long)]
        rank: usize,
    },
    /// Mixture of Kostka components reproducing `S*_{xi, mu}`.
    MixtureAnsatz {
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        xi: Vec<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Demazure characters against transformed fusion characters.
    Prop {
        #[arg(long, default_value_t = 3)]
        max_level: i64,
        #[arg(long = "max-N", default_value_t = 3)]
        max_n: i64,
    },
    /// Unrestricted and restricted mixture reconstructions.
    Mixture {
        #[command(flatten)]
        l: LArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum StatsCommand {
    /// Closed-form moments next to the exact degree mean.
    ClosedForms {
        #[command(flatten)]
        l: LArg,
    },
    /// Inversions of random words of length `N` over `m + 1` letters.
    Galois {
        #[arg(long)]
        m: i64,
        #[arg(long = "N")]
        n: i64,
    },
    /// Mean degree of a Demazure character, three ways.
    Demazure {
        #[command(flatten)]
        word: WordArg,
    },
    /// `E(X_N) / d_N` for `w = (s1 s0)^N` and its limit.
    Concentration {
        #[arg(long, value_parser = parse_pair)]
        weight: (i64, i64),
        #[arg(long = "N")]
        n: i64,
    },
    /// Limiting covariances for admission vectors growing like `N a`.
    Asymptotic {
        /// Growth rates, e.g. `0,1` or `1/2,1`.
        #[arg(long, value_delimiter = ',', required = true)]
        slope: Vec<String>,
    },
    /// Law of the mixing vector `J`, optionally given `S_L = a`.
    Mixing {
        #[command(flatten)]
        l: LArg,
        #[arg(long)]
        a: Option<i64>,
    },
    /// Conditional letter counts of `N` words of length `m` given `S_L = a`.
    Occupancy {
        #[command(flatten)]
        l: LArg,
        #[arg(long)]
        a: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Basic,
    CentralString,
    Galois,
    Demazure,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Admission vector in `N`, e.g. `0:N`. The galois family reads only its length.
    #[arg(long, default_value = "0:N")]
    pub shape: String,
    #[arg(long = "N", value_delimiter = ',', required = true)]
    pub n: Vec<i64>,
    /// Weight for the demazure family.
    #[arg(long, value_parser = parse_pair, required_if_eq("family", "demazure"))]
    pub weight: Option<(i64, i64)>,
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => Ok((
            a.parse().map_err(|_| format!("'{a}' is not an integer"))?,
            b.parse().map_err(|_| format!("'{b}' is not an integer"))?,
        )),
        _ => Err(format!("expected two comma-separated integers, got '{s}'")),
    }
}
