use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lgcalc::cps::translate_type;
use lgcalc::semantics::{denote, sentence_judgement};
use lgcalc::text::{
    parse_derivation, parse_formula, parse_judgement, parse_lexicon, parse_model, render_derivation, render_proof_tree,
    TreeStyle,
};
use lgcalc::{cut, enumerate, Derivation, SearchOptions};

#[derive(Parser)]
#[command(name = "lg", version, about = "Lambek-Grishin calculus toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate cut-free derivations of a judgement such as `np * (np => s) |- s`.
    Prove {
        judgement: String,
        /// Print every derivation.
        #[arg(long, conflicts_with = "max")]
        all: bool,
        /// Print at most N derivations.
        #[arg(long, value_name = "N")]
        max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Sexp)]
        format: Format,
    },
    /// Check a derivation file and print its conclusion.
    Check { file: PathBuf },
    /// Cut two derivations together and print the cut-free result.
    Cut { f: PathBuf, g: PathBuf },
    /// Print the semantic type of a formula.
    TranslateType { formula: String },
    /// Evaluate every reading of a sentence in a model.
    Denote {
        #[arg(long)]
        lexicon: PathBuf,
        #[arg(long)]
        model: PathBuf,
        #[arg(long, default_value = "s")]
        goal: String,
        /// Append each derivation to its line.
        #[arg(long)]
        show_proof: bool,
        #[arg(required = true)]
        words: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Sexp,
    Ascii,
    Latex,
}

/// Exit code 2 with a message on stderr.
struct Invalid(String);

impl<E: Display> From<E> for Invalid {
    fn from(e: E) -> Invalid {
        Invalid(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Invalid> {
    std::fs::read_to_string(path).map_err(|e| Invalid(format!("{}: {e}", path.display())))
}

fn read_derivation(path: &Path) -> Result<Derivation, Invalid> {
    parse_derivation(&read(path)?).map_err(|e| Invalid(format!("{}: {e}", path.display())))
}

fn render(d: &Derivation, format: Format) -> Result<String, Invalid> {
    Ok(match format {
        Format::Sexp => render_derivation(d) + "\n",
        Format::Ascii => render_proof_tree(d, TreeStyle::Ascii)?,
        Format::Latex => render_proof_tree(d, TreeStyle::Latex)?,
    })
}

fn run(command: Command) -> Result<ExitCode, Invalid> {
    match command {
        Command::Prove {
            judgement,
            all,
            max,
            format,
        } => {
            let j = parse_judgement(&judgement)?;
            let max_proofs = if all { None } else { Some(max.unwrap_or(1)) };
            let proofs = enumerate(
                &j,
                SearchOptions {
                    max_proofs,
                    max_depth: None,
                },
            );
            let blocks = proofs
                .iter()
                .map(|d| render(d, format))
                .collect::<Result<Vec<_>, _>>()?;
            let sep = if matches!(format, Format::Sexp) { "" } else { "\n" };
            print!("{}", blocks.join(sep));
            if proofs.is_empty() {
                eprintln!("no proof of {j}");
                return Ok(ExitCode::from(1));
            }
        }
        Command::Check { file } => {
            let d = read_derivation(&file)?;
            println!("{}", d.infer()?);
        }
        Command::Cut { f, g } => {
            let d = cut(&read_derivation(&f)?, &read_derivation(&g)?)?;
            println!("{}", render_derivation(&d));
        }
        Command::TranslateType { formula } => {
            println!("{}", translate_type(&parse_formula(&formula)?));
        }
        Command::Denote {
            lexicon,
            model,
            goal,
            show_proof,
            words,
        } => {
            let lex = parse_lexicon(&read(&lexicon)?).map_err(|e| Invalid(format!("{}: {e}", lexicon.display())))?;
            let m = parse_model(&read(&model)?).map_err(|e| Invalid(format!("{}: {e}", model.display())))?;
            lex.check(&m.signature())?;
            let words: Vec<&str> = words.iter().map(String::as_str).collect();
            let j = sentence_judgement(&lex, &words, &parse_formula(&goal)?)?;
            for (i, d) in enumerate(&j, SearchOptions::exhaustive()).iter().enumerate() {
                let value = denote(d, &lex, &words, &m)?;
                if show_proof {
                    println!("{i}\t{value}\t{}", render_derivation(d));
                } else {
                    println!("{i}\t{value}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
