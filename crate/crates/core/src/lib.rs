//! Lambek-Grishin calculus: derivations, cut elimination, proof search and a
//! continuation-passing semantics over finite models.

pub mod context;
pub mod cps;
pub mod cut;
pub mod derivation;
pub mod fixtures;
pub mod formula;
pub mod origin;
pub mod search;
pub mod semantics;
pub mod text;
pub mod typecheck;

pub use context::{Dir, FormulaContext, JudgementContext, Polarity};
pub use cut::{cut, cut_with_stats, CutError, CutStats};
pub use derivation::{ax_general, Derivation, RuleTag, SchemaMismatch};
pub use formula::{Atom, Connective, Formula, Judgement, MainConnective, Notation, Side};
pub use origin::{find_origin, OriginError, OriginView, RebuildSpine, SpineFrame};
pub use search::{enumerate, SearchOptions};
