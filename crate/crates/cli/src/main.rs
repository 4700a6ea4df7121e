use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use valring_cli::{cmd_decompose, cmd_extend, cmd_selftest, selftest};

#[derive(Parser)]
#[command(name = "valring", about = "Extensions of valuation rings from scenario files")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Points of k' ⊗_k F with their flags.
    Decompose { file: PathBuf },
    /// Build W and print the GROUP/RESIDUE/SPEC/FLAGS/PROVENANCE report.
    Extend {
        file: PathBuf,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        point: Option<usize>,
        #[arg(long)]
        truncate: Option<u32>,
    },
    /// Golden corpus and seeded property suites.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Alternative expected values (`name = value` lines).
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Print the embedded corpus and exit.
        #[arg(long)]
        print_corpus: bool,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let out = match cli.command {
        Command::Decompose { file } => cmd_decompose(&file),
        Command::Extend { file, verify, point, truncate } => cmd_extend(&file, verify, point, truncate),
        Command::Selftest { print_corpus: true, .. } => {
            print!("{}", selftest::CORPUS);
            return;
        }
        Command::Selftest { seed, corpus, .. } => cmd_selftest(seed, corpus.as_deref()),
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
