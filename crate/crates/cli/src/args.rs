use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "boolrsk", version, about = "Boolean permutations, canonical reduced words and RSK second rows")]
pub struct Cli {
    /// Print a JSON envelope instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Ambient degree; pads permutations with fixed points and sizes words.
    #[arg(long, global = true, value_name = "N")]
    pub degree: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Insertion and recording tableaux.
    Rsk {
        #[arg(required = true, num_args = 1.., value_name = "PERM")]
        perm: Vec<String>,
    },
    /// Canonical reduced word of a boolean permutation.
    Canonical {
        #[arg(required = true, num_args = 1.., value_name = "PERM")]
        input: Vec<String>,
        /// Read the input as a reduced word rather than a permutation.
        #[arg(long)]
        from_word: bool,
    },
    /// Run statistic and an optimal run word.
    Run {
        #[arg(required = true, num_args = 1.., value_name = "PERM")]
        perm: Vec<String>,
    },
    /// Iterate rho down to the identity.
    Rho {
        #[arg(required = true, num_args = 1.., value_name = "PERM")]
        perm: Vec<String>,
    },
    /// Sort with the fewest Ulam moves.
    Ulam {
        #[arg(required = true, num_args = 1.., value_name = "PERM")]
        perm: Vec<String>,
    },
    /// Heap of a boolean permutation.
    Heap {
        #[arg(required = true, num_args = 1.., value_name = "PERM")]
        perm: Vec<String>,
    },
    /// Every reduced word, split into runs.
    Words {
        #[arg(required = true, num_args = 1.., value_name = "PERM")]
        perm: Vec<String>,
    },
    /// Uncrowded sets and tableaux.
    Uncrowded {
        #[command(subcommand)]
        what: UncrowdedCommand,
    },
    /// Count uncrowded tableaux for a range of sizes, e.g. `1..10`.
    Count { range: String },
    /// The bijection between odd-run binary words and uncrowded tableaux.
    Bij {
        #[command(subcommand)]
        direction: BijCommand,
    },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Debug, Subcommand)]
pub enum UncrowdedCommand {
    /// Check a set such as `{4,6,7,8}`.
    Set { set: String },
    /// Check a tableau: a file, `-` for stdin, or rows separated by `/`.
    Tableau { tableau: String },
    /// A canonical word whose runs start exactly at the given letters.
    Realize { set: String },
}

#[derive(Debug, Subcommand)]
pub enum BijCommand {
    /// Binary word to tableau.
    F { word: String },
    /// Tableau to binary word: a file, `-` for stdin, or rows separated by `/`.
    G { tableau: String },
}
