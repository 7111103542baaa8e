//! `gausslink`: planarity, genus and group computations for Gauss paragraphs.
//!
//! Exit status is 0 on success, 1 on a domain error (an unrealizable
//! presentation, a splittable paragraph where one curve is needed, a
//! disagreement between the planarity tests) and 2 on unreadable input.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gausslink::InputKind;

use commands::{Options, Output};
use input::{Parsed, RandomSpec};

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Domain(String),
}

#[derive(Parser)]
#[command(name = "gausslink", version, about = "Virtual link planarity, genus and Wirtinger groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Inline text, a file path, or `-` for stdin (the default).
    input: Option<String>,
    /// Input format; detected from the text when absent.
    #[arg(long, value_parser = parse_kind)]
    kind: Option<InputKind>,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    #[arg(long, short)]
    verbose: bool,
    /// Ignore the input and generate a random one of this size
    /// (crossings for paragraphs, generators for presentations).
    #[arg(long, value_name = "N")]
    random: Option<usize>,
    /// Word count of a random paragraph.
    #[arg(long, default_value_t = 1)]
    words: usize,
    /// Seed for `--random`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the input and print it normalized.
    Parse(Common),
    /// Carter surface of each component: genus, Euler characteristic, faces.
    Genus {
        #[command(flatten)]
        common: Common,
        /// List the face cycles.
        #[arg(long)]
        faces: bool,
    },
    /// Decide planarity by genus and by the code criterion and compare.
    Planar {
        #[command(flatten)]
        common: Common,
        /// Also check every merge order (components of at most 4 words).
        #[arg(long)]
        all_merges: bool,
    },
    /// The Gauss code associated to a connected paragraph.
    ToCode(Common),
    /// The alpha and beta tables of a code or connected paragraph.
    Invariants(Common),
    /// The Wirtinger presentation of a paragraph.
    Group(Common),
    /// Conjugacy graph of a presentation: components, Euler characteristics,
    /// realizability.
    Graph(Common),
    /// A Gauss paragraph realizing a presentation.
    Realize(Common),
    /// Cyclic and simple forms of a presentation, with the rewriting trace.
    Reduce(Common),
    /// Number of homomorphisms into a finite group.
    Homcount {
        #[command(flatten)]
        common: Common,
        /// Built-in group: S1..S5, Z1..Z12.
        #[arg(long, default_value = "S3")]
        group: Option<String>,
        /// JSON multiplication table; overrides --group.
        #[arg(long, value_name = "FILE")]
        table: Option<String>,
    },
}

fn parse_kind(s: &str) -> Result<InputKind, String> {
    s.parse()
}

enum Wants {
    Paragraph,
    Presentation,
    Any,
}

fn load(common: &Common, wants: Wants) -> Result<Parsed, CliError> {
    if let Some(size) = common.random {
        let spec = RandomSpec { size, words: common.words.max(1), seed: common.seed };
        return Ok(match wants {
            Wants::Presentation => Parsed::Presentation(spec.presentation()),
            Wants::Paragraph | Wants::Any => {
                let paragraph = spec.paragraph();
                let labels = (1..=paragraph.crossing_count() as u64).collect();
                Parsed::Paragraph { paragraph, labels }
            }
        });
    }
    let text = input::read_source(common.input.as_deref())?;
    input::parse(&text, common.kind)
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let opts = |c: &Common| Options { verbose: c.verbose, faces: false, all_merges: false };
    match cli.command {
        Command::Parse(c) => commands::parse(load(&c, Wants::Any)?, &opts(&c)),
        Command::Genus { common, faces } => {
            let o = Options { faces, ..opts(&common) };
            commands::genus(load(&common, Wants::Paragraph)?, &o)
        }
        Command::Planar { common, all_merges } => {
            let o = Options { all_merges, ..opts(&common) };
            commands::planar(load(&common, Wants::Any)?, &o)
        }
        Command::ToCode(c) => commands::to_code(load(&c, Wants::Paragraph)?, &opts(&c)),
        Command::Invariants(c) => commands::invariants(load(&c, Wants::Any)?, &opts(&c)),
        Command::Group(c) => commands::group(load(&c, Wants::Paragraph)?, &opts(&c)),
        Command::Graph(c) => commands::graph(load(&c, Wants::Presentation)?, &opts(&c)),
        Command::Realize(c) => commands::realize_cmd(load(&c, Wants::Presentation)?, &opts(&c)),
        Command::Reduce(c) => commands::reduce(load(&c, Wants::Presentation)?, &opts(&c)),
        Command::Homcount { common, group, table } => {
            let h = commands::load_group(group.as_deref(), table.as_deref())?;
            commands::homcount(load(&common, Wants::Presentation)?, &h, &opts(&common))
        }
    }
}

fn json_flag(cli: &Cli) -> bool {
    match &cli.command {
        Command::Parse(c)
        | Command::ToCode(c)
        | Command::Invariants(c)
        | Command::Group(c)
        | Command::Graph(c)
        | Command::Realize(c)
        | Command::Reduce(c) => c.json,
        Command::Genus { common, .. } | Command::Planar { common, .. } | Command::Homcount { common, .. } => {
            common.json
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = json_flag(&cli);
    match run(cli) {
        Ok(out) => {
            if as_json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize"));
            } else {
                println!("{}", out.text);
            }
            match out.failure {
                Some(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
