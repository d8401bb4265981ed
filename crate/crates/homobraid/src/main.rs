use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use homobraid::braid::parse_word;
use homobraid::chord::ChordConfig;
use homobraid::report::{
    analysis_report, arborescent_report, chords_report, surface_report, word_tree_report, Format,
    Report,
};

#[derive(Parser)]
#[command(name = "homobraid", version, about = "Primeness of homogeneous braid closures")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Seed echoed into reports for reproducible randomized workflows.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide primeness of the closure of a braid word.
    Analyze {
        #[arg(long)]
        strands: Option<usize>,
        /// Braid word, e.g. "3^5 1^-3 2^3 4^-3".
        word: Vec<String>,
    },
    /// Build the tree of open books of a word or a plane-tree file.
    Tree {
        /// Read a signed plane tree like (+(-)(+)) from this file instead of
        /// a braid word.
        #[arg(long)]
        arborescent: Option<PathBuf>,
        /// Attach a primeness certificate or the reason none exists.
        #[arg(long)]
        certify: bool,
        #[arg(long)]
        strands: Option<usize>,
        word: Vec<String>,
    },
    /// Find right/left witnesses between two chord sets from a config file.
    Chords { file: PathBuf },
    /// Invariants of the Seifert surface of a braid word.
    Surface {
        #[arg(long)]
        strands: Option<usize>,
        word: Vec<String>,
    },
}

fn color_enabled() -> bool {
    match std::env::var("HOMOBRAID_COLOR") {
        Ok(v) => !matches!(v.as_str(), "" | "0" | "false" | "off"),
        Err(_) => false,
    }
}

fn emit(report: &Report, format: FormatArg, seed: Option<u64>) {
    let mut report = report.clone();
    if let Some(seed) = seed {
        report.push("seed", seed);
    }
    let format = match format {
        FormatArg::Text => Format::Text,
        FormatArg::Structured => Format::Structured,
    };
    print!("{}", report.render(format, color_enabled()));
}

fn fail(err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Analyze { strands, word } => {
            let word = match parse_word(&word.join(" "), strands) {
                Ok(w) => w,
                Err(e) => return fail(e),
            };
            let (report, code) = analysis_report(&word);
            emit(&report, cli.format, cli.seed);
            ExitCode::from(code)
        }
        Cmd::Tree {
            arborescent,
            certify,
            strands,
            word,
        } => {
            let report = match arborescent {
                Some(path) => {
                    let text = match std::fs::read_to_string(&path) {
                        Ok(t) => t,
                        Err(e) => return fail(format!("{}: {e}", path.display())),
                    };
                    arborescent_report(&text, certify)
                }
                None => match parse_word(&word.join(" "), strands) {
                    Ok(w) => word_tree_report(&w, certify),
                    Err(e) => return fail(e),
                },
            };
            match report {
                Ok(r) => {
                    emit(&r, cli.format, cli.seed);
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Cmd::Chords { file } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => return fail(format!("{}: {e}", file.display())),
            };
            match ChordConfig::parse(&text) {
                Ok(cfg) => {
                    emit(&chords_report(&cfg), cli.format, cli.seed);
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Cmd::Surface { strands, word } => match parse_word(&word.join(" "), strands) {
            Ok(w) => {
                emit(&surface_report(&w), cli.format, cli.seed);
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        },
    }
}
