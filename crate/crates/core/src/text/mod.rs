//! Textual formats: formulas and judgements, derivation s-expressions, proof
//! trees, semantic terms, model files and lexicon files.

mod cursor;
mod files;
mod formula;
mod sexp;
mod term;
mod tree;

use thiserror::Error;

pub use files::{parse_lexicon, parse_model, FileError};
pub use formula::{parse_formula, parse_judgement};
pub use sexp::{parse_derivation, render_derivation, DerivationParseError};
pub use term::{parse_term, render_term};
pub use tree::{render_proof_tree, TreeStyle};

/// A syntax error at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("at offset {offset}: expected {expected}")]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
}
