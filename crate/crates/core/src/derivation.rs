//! Derivation trees of the base system and the rule-schema checker.
//!
//! Every rule other than `ax` is described by a [`Schema`]: a list of premise
//! patterns and a conclusion pattern over the metavariables `A`..`D`. The same
//! table drives forward checking ([`Derivation::infer`]), backward rule
//! application in proof search, and position tracking in origin views.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::context::Dir;
use crate::formula::{Atom, Connective, Formula, Judgement, Side};

/// The nineteen rules of the base system.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum RuleTag {
    /// `ax`
    Ax,
    /// `r⇒⊗`
    RImpRProd,
    /// `r⊗⇒`
    RProdImpR,
    /// `r⇐⊗`
    RImpLProd,
    /// `r⊗⇐`
    RProdImpL,
    /// `m⊗`
    MProd,
    /// `m⇒`
    MImpR,
    /// `m⇐`
    MImpL,
    /// `r⇛⊕`
    RDiffRSum,
    /// `r⊕⇛`
    RSumDiffR,
    /// `r⊕⇚`
    RSumDiffL,
    /// `r⇚⊕`
    RDiffLSum,
    /// `m⊕`
    MSum,
    /// `m⇛`
    MDiffR,
    /// `m⇚`
    MDiffL,
    /// `d⇛⇐`
    DDiffRImpL,
    /// `d⇛⇒`
    DDiffRImpR,
    /// `d⇚⇒`
    DDiffLImpR,
    /// `d⇚⇐`
    DDiffLImpL,
}

impl RuleTag {
    /// All rules, in the order proof search tries them.
    pub const ALL: [RuleTag; 19] = [
        RuleTag::Ax,
        RuleTag::RImpRProd,
        RuleTag::RProdImpR,
        RuleTag::RImpLProd,
        RuleTag::RProdImpL,
        RuleTag::MProd,
        RuleTag::MImpR,
        RuleTag::MImpL,
        RuleTag::RDiffRSum,
        RuleTag::RSumDiffR,
        RuleTag::RSumDiffL,
        RuleTag::RDiffLSum,
        RuleTag::MSum,
        RuleTag::MDiffR,
        RuleTag::MDiffL,
        RuleTag::DDiffRImpL,
        RuleTag::DDiffRImpR,
        RuleTag::DDiffLImpR,
        RuleTag::DDiffLImpL,
    ];

    pub fn arity(self) -> usize {
        match self {
            RuleTag::Ax => 0,
            RuleTag::MProd | RuleTag::MImpR | RuleTag::MImpL | RuleTag::MSum | RuleTag::MDiffR | RuleTag::MDiffL => 2,
            _ => 1,
        }
    }

    /// The monotonicity rule introducing `conn` on both sides.
    pub fn monotonicity(conn: Connective) -> RuleTag {
        match conn {
            Connective::Prod => RuleTag::MProd,
            Connective::ImpR => RuleTag::MImpR,
            Connective::ImpL => RuleTag::MImpL,
            Connective::Sum => RuleTag::MSum,
            Connective::DiffL => RuleTag::MDiffL,
            Connective::DiffR => RuleTag::MDiffR,
        }
    }

    /// Name with the original connective glyphs, e.g. `r⇒⊗`.
    pub fn unicode_name(self) -> &'static str {
        match self {
            RuleTag::Ax => "ax",
            RuleTag::RImpRProd => "r⇒⊗",
            RuleTag::RProdImpR => "r⊗⇒",
            RuleTag::RImpLProd => "r⇐⊗",
            RuleTag::RProdImpL => "r⊗⇐",
            RuleTag::MProd => "m⊗",
            RuleTag::MImpR => "m⇒",
            RuleTag::MImpL => "m⇐",
            RuleTag::RDiffRSum => "r⇛⊕",
            RuleTag::RSumDiffR => "r⊕⇛",
            RuleTag::RSumDiffL => "r⊕⇚",
            RuleTag::RDiffLSum => "r⇚⊕",
            RuleTag::MSum => "m⊕",
            RuleTag::MDiffR => "m⇛",
            RuleTag::MDiffL => "m⇚",
            RuleTag::DDiffRImpL => "d⇛⇐",
            RuleTag::DDiffRImpR => "d⇛⇒",
            RuleTag::DDiffLImpR => "d⇚⇒",
            RuleTag::DDiffLImpL => "d⇚⇐",
        }
    }

    /// Name with every connective glyph replaced by its ASCII alias, e.g. `r=>*`.
    pub fn ascii_name(self) -> &'static str {
        match self {
            RuleTag::Ax => "ax",
            RuleTag::RImpRProd => "r=>*",
            RuleTag::RProdImpR => "r*=>",
            RuleTag::RImpLProd => "r<=*",
            RuleTag::RProdImpL => "r*<=",
            RuleTag::MProd => "m*",
            RuleTag::MImpR => "m=>",
            RuleTag::MImpL => "m<=",
            RuleTag::RDiffRSum => "r>-+",
            RuleTag::RSumDiffR => "r+>-",
            RuleTag::RSumDiffL => "r+-<",
            RuleTag::RDiffLSum => "r-<+",
            RuleTag::MSum => "m+",
            RuleTag::MDiffR => "m>-",
            RuleTag::MDiffL => "m-<",
            RuleTag::DDiffRImpL => "d>-<=",
            RuleTag::DDiffRImpR => "d>-=>",
            RuleTag::DDiffLImpR => "d-<=>",
            RuleTag::DDiffLImpL => "d-<<=",
        }
    }

    /// Looks a rule up by its ASCII or Unicode name.
    pub fn from_name(name: &str) -> Option<RuleTag> {
        RuleTag::ALL
            .into_iter()
            .find(|t| t.ascii_name() == name || t.unicode_name() == name)
    }

    pub(crate) fn schema(self) -> Option<&'static Schema> {
        use RuleTag::*;
        Some(match self {
            Ax => return None,
            RImpRProd => &R_IMPR_PROD,
            RProdImpR => &R_PROD_IMPR,
            RImpLProd => &R_IMPL_PROD,
            RProdImpL => &R_PROD_IMPL,
            MProd => &M_PROD,
            MImpR => &M_IMPR,
            MImpL => &M_IMPL,
            RDiffRSum => &R_DIFFR_SUM,
            RSumDiffR => &R_SUM_DIFFR,
            RSumDiffL => &R_SUM_DIFFL,
            RDiffLSum => &R_DIFFL_SUM,
            MSum => &M_SUM,
            MDiffR => &M_DIFFR,
            MDiffL => &M_DIFFL,
            DDiffRImpL => &D_DIFFR_IMPL,
            DDiffRImpR => &D_DIFFR_IMPR,
            DDiffLImpR => &D_DIFFL_IMPR,
            DDiffLImpL => &D_DIFFL_IMPL,
        })
    }
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.unicode_name())
    }
}

/// Formula pattern over metavariables `A`..`D` (indices 0..4).
#[derive(Debug)]
pub(crate) enum Pat {
    Var(usize),
    Op(Connective, &'static Pat, &'static Pat),
}

pub(crate) struct Schema {
    pub premises: &'static [(Pat, Pat)],
    pub conclusion: (Pat, Pat),
}

const A: Pat = Pat::Var(0);
const B: Pat = Pat::Var(1);
const C: Pat = Pat::Var(2);
const D: Pat = Pat::Var(3);

use Connective::{DiffL, DiffR, ImpL, ImpR, Prod, Sum};

// residuation and monotonicity for (⇐, ⊗, ⇒)
static R_IMPR_PROD: Schema = Schema {
    premises: &[(B, Pat::Op(ImpR, &A, &C))],
    conclusion: (Pat::Op(Prod, &A, &B), C),
};
static R_PROD_IMPR: Schema = Schema {
    premises: &[(Pat::Op(Prod, &A, &B), C)],
    conclusion: (B, Pat::Op(ImpR, &A, &C)),
};
static R_IMPL_PROD: Schema = Schema {
    premises: &[(A, Pat::Op(ImpL, &C, &B))],
    conclusion: (Pat::Op(Prod, &A, &B), C),
};
static R_PROD_IMPL: Schema = Schema {
    premises: &[(Pat::Op(Prod, &A, &B), C)],
    conclusion: (A, Pat::Op(ImpL, &C, &B)),
};
static M_PROD: Schema = Schema {
    premises: &[(A, B), (C, D)],
    conclusion: (Pat::Op(Prod, &A, &C), Pat::Op(Prod, &B, &D)),
};
static M_IMPR: Schema = Schema {
    premises: &[(A, B), (C, D)],
    conclusion: (Pat::Op(ImpR, &B, &C), Pat::Op(ImpR, &A, &D)),
};
static M_IMPL: Schema = Schema {
    premises: &[(A, B), (C, D)],
    conclusion: (Pat::Op(ImpL, &A, &D), Pat::Op(ImpL, &B, &C)),
};

// residuation and monotonicity for (⇚, ⊕, ⇛)
static R_DIFFR_SUM: Schema = Schema {
    premises: &[(Pat::Op(DiffR, &B, &C), A)],
    conclusion: (C, Pat::Op(Sum, &B, &A)),
};
static R_SUM_DIFFR: Schema = Schema {
    premises: &[(C, Pat::Op(Sum, &B, &A))],
    conclusion: (Pat::Op(DiffR, &B, &C), A),
};
static R_SUM_DIFFL: Schema = Schema {
    premises: &[(C, Pat::Op(Sum, &B, &A))],
    conclusion: (Pat::Op(DiffL, &C, &A), B),
};
static R_DIFFL_SUM: Schema = Schema {
    premises: &[(Pat::Op(DiffL, &C, &A), B)],
    conclusion: (C, Pat::Op(Sum, &B, &A)),
};
static M_SUM: Schema = Schema {
    premises: &[(A, B), (C, D)],
    conclusion: (Pat::Op(Sum, &A, &C), Pat::Op(Sum, &B, &D)),
};
static M_DIFFR: Schema = Schema {
    premises: &[(C, D), (A, B)],
    conclusion: (Pat::Op(DiffR, &D, &A), Pat::Op(DiffR, &C, &B)),
};
static M_DIFFL: Schema = Schema {
    premises: &[(A, B), (C, D)],
    conclusion: (Pat::Op(DiffL, &A, &D), Pat::Op(DiffL, &B, &C)),
};

// grishin distributives
static D_DIFFR_IMPL: Schema = Schema {
    premises: &[(Pat::Op(Prod, &A, &B), Pat::Op(Sum, &C, &D))],
    conclusion: (Pat::Op(DiffR, &C, &A), Pat::Op(ImpL, &D, &B)),
};
static D_DIFFR_IMPR: Schema = Schema {
    premises: &[(Pat::Op(Prod, &A, &B), Pat::Op(Sum, &C, &D))],
    conclusion: (Pat::Op(DiffR, &C, &B), Pat::Op(ImpR, &A, &D)),
};
static D_DIFFL_IMPR: Schema = Schema {
    premises: &[(Pat::Op(Prod, &A, &B), Pat::Op(Sum, &C, &D))],
    conclusion: (Pat::Op(DiffL, &B, &D), Pat::Op(ImpR, &A, &C)),
};
static D_DIFFL_IMPL: Schema = Schema {
    premises: &[(Pat::Op(Prod, &A, &B), Pat::Op(Sum, &C, &D))],
    conclusion: (Pat::Op(DiffL, &A, &D), Pat::Op(ImpL, &C, &B)),
};

type Bindings = [Option<Formula>; 4];

impl Pat {
    fn matches(&self, f: &Formula, binds: &mut Bindings) -> bool {
        match self {
            Pat::Var(v) => match &binds[*v] {
                Some(bound) => bound == f,
                None => {
                    binds[*v] = Some(f.clone());
                    true
                }
            },
            Pat::Op(c, l, r) => match f {
                Formula::Bin(fc, fl, fr) if fc == c => l.matches(fl, binds) && r.matches(fr, binds),
                _ => false,
            },
        }
    }

    fn build(&self, binds: &Bindings) -> Formula {
        match self {
            Pat::Var(v) => binds[*v].clone().expect("schema metavariable bound"),
            Pat::Op(c, l, r) => Formula::bin(*c, l.build(binds), r.build(binds)),
        }
    }

    fn path_to(&self, var: usize, path: &mut Vec<Dir>) -> bool {
        match self {
            Pat::Var(v) => *v == var,
            Pat::Op(_, l, r) => {
                path.push(Dir::Left);
                if l.path_to(var, path) {
                    return true;
                }
                path.pop();
                path.push(Dir::Right);
                if r.path_to(var, path) {
                    return true;
                }
                path.pop();
                false
            }
        }
    }
}

/// Where a position of a rule's conclusion lands when the pattern is walked.
pub(crate) enum PatHit {
    /// The position is a connective node created by the rule itself.
    Node,
    /// The position lies inside metavariable `var`; `consumed` directions were
    /// used to reach it.
    Var { var: usize, consumed: usize },
}

impl Schema {
    /// Matches `j` against the conclusion and instantiates the premises.
    pub(crate) fn backward(&self, j: &Judgement) -> Option<Vec<Judgement>> {
        let mut binds: Bindings = Default::default();
        let (cl, cr) = &self.conclusion;
        if !(cl.matches(&j.lhs, &mut binds) && cr.matches(&j.rhs, &mut binds)) {
            return None;
        }
        Some(
            self.premises
                .iter()
                .map(|(pl, pr)| Judgement::new(pl.build(&binds), pr.build(&binds)))
                .collect(),
        )
    }

    /// Matches the premises and instantiates the conclusion.
    pub(crate) fn forward(&self, premises: &[&Judgement]) -> Option<Judgement> {
        if premises.len() != self.premises.len() {
            return None;
        }
        let mut binds: Bindings = Default::default();
        for ((pl, pr), j) in self.premises.iter().zip(premises) {
            if !(pl.matches(&j.lhs, &mut binds) && pr.matches(&j.rhs, &mut binds)) {
                return None;
            }
        }
        let (cl, cr) = &self.conclusion;
        Some(Judgement::new(cl.build(&binds), cr.build(&binds)))
    }

    /// Follows `dirs` from the top of the conclusion's `side`.
    pub(crate) fn walk_conclusion(&self, side: Side, dirs: &[Dir]) -> PatHit {
        let mut pat = match side {
            Side::Antecedent => &self.conclusion.0,
            Side::Succedent => &self.conclusion.1,
        };
        for (i, dir) in dirs.iter().enumerate() {
            match pat {
                Pat::Var(v) => return PatHit::Var { var: *v, consumed: i },
                Pat::Op(_, l, r) => {
                    pat = match dir {
                        Dir::Left => l,
                        Dir::Right => r,
                    }
                }
            }
        }
        match pat {
            Pat::Var(v) => PatHit::Var {
                var: *v,
                consumed: dirs.len(),
            },
            Pat::Op(..) => PatHit::Node,
        }
    }

    /// The premise, side and path at which metavariable `var` occurs.
    pub(crate) fn premise_position(&self, var: usize) -> (usize, Side, Vec<Dir>) {
        for (i, (pl, pr)) in self.premises.iter().enumerate() {
            for (side, pat) in [(Side::Antecedent, pl), (Side::Succedent, pr)] {
                let mut path = Vec::new();
                if pat.path_to(var, &mut path) {
                    return (i, side, path);
                }
            }
        }
        unreachable!("every conclusion metavariable occurs in a premise")
    }
}

/// Instantiates the premises of `tag` whose conclusion is `j`, if `j` has the
/// right shape.
pub fn backward(tag: RuleTag, j: &Judgement) -> Option<Vec<Judgement>> {
    match tag.schema() {
        Some(schema) => schema.backward(j),
        None => match (&j.lhs, &j.rhs) {
            (Formula::El(a), Formula::El(b)) if a == b => Some(Vec::new()),
            _ => None,
        },
    }
}

/// Applies `tag` forward to premise judgements.
pub fn forward(tag: RuleTag, premises: &[&Judgement]) -> Option<Judgement> {
    tag.schema()?.forward(premises)
}

/// A proof tree. Judgements are not stored; they are recomputed by
/// [`Derivation::infer`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Derivation {
    Ax(Atom),
    Unary(RuleTag, Arc<Derivation>),
    Binary(RuleTag, Arc<Derivation>, Arc<Derivation>),
}

/// A rule application whose premises do not fit the rule's schema.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("schema mismatch at {path:?}: {tag} cannot be applied to [{}]", fmt_judgements(.premises))]
pub struct SchemaMismatch {
    /// Premise indices from the root to the offending node.
    pub path: Vec<usize>,
    pub tag: RuleTag,
    pub premises: Vec<Judgement>,
}

fn fmt_judgements(js: &[Judgement]) -> String {
    js.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(", ")
}

impl Derivation {
    pub fn ax(name: &str) -> Derivation {
        Derivation::Ax(Atom::new(name))
    }

    pub fn unary(tag: RuleTag, d: Derivation) -> Derivation {
        debug_assert_eq!(tag.arity(), 1, "{tag} is not unary");
        Derivation::Unary(tag, Arc::new(d))
    }

    pub fn binary(tag: RuleTag, l: Derivation, r: Derivation) -> Derivation {
        debug_assert_eq!(tag.arity(), 2, "{tag} is not binary");
        Derivation::Binary(tag, Arc::new(l), Arc::new(r))
    }

    pub fn tag(&self) -> RuleTag {
        match self {
            Derivation::Ax(_) => RuleTag::Ax,
            Derivation::Unary(t, _) | Derivation::Binary(t, _, _) => *t,
        }
    }

    pub fn premises(&self) -> Vec<&Derivation> {
        match self {
            Derivation::Ax(_) => vec![],
            Derivation::Unary(_, d) => vec![d],
            Derivation::Binary(_, l, r) => vec![l, r],
        }
    }

    /// Computes the conclusion bottom-up, checking every rule application.
    pub fn infer(&self) -> Result<Judgement, SchemaMismatch> {
        self.infer_at().map_err(|mut e| {
            e.path.reverse();
            e
        })
    }

    fn infer_at(&self) -> Result<Judgement, SchemaMismatch> {
        let (tag, children) = match self {
            Derivation::Ax(a) => {
                let f = Formula::El(a.clone());
                return Ok(Judgement::new(f.clone(), f));
            }
            Derivation::Unary(t, d) => (*t, vec![d.as_ref()]),
            Derivation::Binary(t, l, r) => (*t, vec![l.as_ref(), r.as_ref()]),
        };
        let mut premises = Vec::with_capacity(children.len());
        for (i, child) in children.into_iter().enumerate() {
            premises.push(child.infer_at().map_err(|mut e| {
                e.path.push(i);
                e
            })?);
        }
        let refs: Vec<&Judgement> = premises.iter().collect();
        forward(tag, &refs).ok_or(SchemaMismatch {
            path: Vec::new(),
            tag,
            premises,
        })
    }

    /// Number of rule applications, axioms included.
    pub fn size(&self) -> usize {
        match self {
            Derivation::Ax(_) => 1,
            Derivation::Unary(_, d) => 1 + d.size(),
            Derivation::Binary(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn height(&self) -> usize {
        match self {
            Derivation::Ax(_) => 1,
            Derivation::Unary(_, d) => 1 + d.height(),
            Derivation::Binary(_, l, r) => 1 + l.height().max(r.height()),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Derivation::Ax(_) => 1,
            Derivation::Unary(_, d) => d.leaf_count(),
            Derivation::Binary(_, l, r) => l.leaf_count() + r.leaf_count(),
        }
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render_derivation(self))
    }
}

/// The identity derivation `A ⊢ A` for an arbitrary formula, built by
/// structural recursion: atoms use `ax`, every connective its monotonicity rule.
pub fn ax_general(a: &Formula) -> Derivation {
    match a {
        Formula::El(atom) => Derivation::Ax(atom.clone()),
        Formula::Bin(c, l, r) => {
            let (l, r) = (ax_general(l), ax_general(r));
            Derivation::binary(RuleTag::monotonicity(*c), l, r)
        }
    }
}

/// `A ⊗ (A ⇒ B) ⊢ B`
pub fn appl_imp_r(a: &Formula, b: &Formula) -> Derivation {
    Derivation::unary(
        RuleTag::RImpRProd,
        Derivation::binary(RuleTag::MImpR, ax_general(a), ax_general(b)),
    )
}

/// `(B ⇐ A) ⊗ A ⊢ B`
pub fn appl_imp_l(a: &Formula, b: &Formula) -> Derivation {
    Derivation::unary(
        RuleTag::RImpLProd,
        Derivation::binary(RuleTag::MImpL, ax_general(b), ax_general(a)),
    )
}

/// `B ⊢ A ⊕ (A ⇛ B)`
pub fn appl_diff_r(a: &Formula, b: &Formula) -> Derivation {
    Derivation::unary(
        RuleTag::RDiffRSum,
        Derivation::binary(RuleTag::MDiffR, ax_general(a), ax_general(b)),
    )
}

/// `B ⊢ (B ⇚ A) ⊕ A`
pub fn appl_diff_l(a: &Formula, b: &Formula) -> Derivation {
    Derivation::unary(
        RuleTag::RDiffLSum,
        Derivation::binary(RuleTag::MDiffL, ax_general(b), ax_general(a)),
    )
}
