//! Well-polarised one-hole formula and judgement contexts.
//!
//! A context of polarity `+` brings its hole to the top of the antecedent once
//! it is fully taken apart by residuation; a context of polarity `-` brings it
//! to the top of the succedent.

use std::fmt;

use thiserror::Error;

use crate::derivation::{backward, RuleTag};
use crate::formula::{Connective, Formula, Judgement, Side};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Polarity {
    /// Antecedent-bound.
    Pos,
    /// Succedent-bound.
    Neg,
}

impl Polarity {
    /// The polarity of a judgement side's top position.
    pub fn of_side(side: Side) -> Polarity {
        match side {
            Side::Antecedent => Polarity::Pos,
            Side::Succedent => Polarity::Neg,
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::Pos => "+",
            Polarity::Neg => "-",
        })
    }
}

/// Which argument of a binary connective a path step descends into.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Dir {
    Left,
    Right,
}

/// Polarity table for context constructors: a context whose outer polarity is
/// the first component, placed under `conn` in argument `dir`, yields a
/// context of the second polarity.
pub fn constructor_polarities(conn: Connective, dir: Dir) -> (Polarity, Polarity) {
    use Connective::*;
    use Polarity::{Neg, Pos};
    match (conn, dir) {
        (Prod, Dir::Right) => (Pos, Pos),
        (ImpR, Dir::Right) => (Neg, Neg),
        (ImpL, Dir::Right) => (Pos, Neg),
        (Prod, Dir::Left) => (Pos, Pos),
        (ImpR, Dir::Left) => (Pos, Neg),
        (ImpL, Dir::Left) => (Neg, Neg),
        (Sum, Dir::Right) => (Neg, Neg),
        (DiffL, Dir::Right) => (Neg, Pos),
        (DiffR, Dir::Right) => (Pos, Pos),
        (Sum, Dir::Left) => (Neg, Neg),
        (DiffL, Dir::Left) => (Pos, Pos),
        (DiffR, Dir::Left) => (Neg, Pos),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ContextError {
    #[error(
        "{conn:?} context with hole on the {dir:?} needs an inner context of outer polarity {expected}, got {found}"
    )]
    Polarity {
        conn: Connective,
        dir: Dir,
        expected: Polarity,
        found: Polarity,
    },
    #[error("judgement context on the {side:?} needs outer polarity {expected}, got {found}")]
    Side {
        side: Side,
        expected: Polarity,
        found: Polarity,
    },
    #[error("path leaves the formula at an atom")]
    PathOutOfFormula,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Shape {
    Hole,
    HoleRight {
        conn: Connective,
        left: Formula,
        inner: Box<FormulaContext>,
    },
    HoleLeft {
        conn: Connective,
        inner: Box<FormulaContext>,
        right: Formula,
    },
}

/// A formula with exactly one hole, in a well-polarised position.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FormulaContext {
    hole: Polarity,
    outer: Polarity,
    shape: Shape,
}

impl FormulaContext {
    /// The empty context `[]`, with hole and outer polarity `p`.
    pub fn hole(p: Polarity) -> FormulaContext {
        FormulaContext {
            hole: p,
            outer: p,
            shape: Shape::Hole,
        }
    }

    /// `left conn inner`, the hole in the right argument.
    pub fn hole_right(conn: Connective, left: Formula, inner: FormulaContext) -> Result<FormulaContext, ContextError> {
        let outer = check(conn, Dir::Right, &inner)?;
        Ok(FormulaContext {
            hole: inner.hole,
            outer,
            shape: Shape::HoleRight {
                conn,
                left,
                inner: Box::new(inner),
            },
        })
    }

    /// `inner conn right`, the hole in the left argument.
    pub fn hole_left(conn: Connective, inner: FormulaContext, right: Formula) -> Result<FormulaContext, ContextError> {
        let outer = check(conn, Dir::Left, &inner)?;
        Ok(FormulaContext {
            hole: inner.hole,
            outer,
            shape: Shape::HoleLeft {
                conn,
                inner: Box::new(inner),
                right,
            },
        })
    }

    pub fn hole_polarity(&self) -> Polarity {
        self.hole
    }

    pub fn outer_polarity(&self) -> Polarity {
        self.outer
    }

    pub fn is_hole(&self) -> bool {
        matches!(self.shape, Shape::Hole)
    }

    /// Fills the hole with `a`.
    pub fn plug(&self, a: &Formula) -> Formula {
        match &self.shape {
            Shape::Hole => a.clone(),
            Shape::HoleRight { conn, left, inner } => Formula::bin(*conn, left.clone(), inner.plug(a)),
            Shape::HoleLeft { conn, inner, right } => Formula::bin(*conn, inner.plug(a), right.clone()),
        }
    }

    /// Number of formula nodes in the context, the hole excluded.
    pub fn skeleton_size(&self) -> usize {
        match &self.shape {
            Shape::Hole => 0,
            Shape::HoleRight { left, inner, .. } => 1 + left.size() + inner.skeleton_size(),
            Shape::HoleLeft { inner, right, .. } => 1 + right.size() + inner.skeleton_size(),
        }
    }

    /// Directions from the root of the context to its hole.
    pub fn path(&self) -> Vec<Dir> {
        let mut out = Vec::new();
        let mut cur = self;
        loop {
            match &cur.shape {
                Shape::Hole => return out,
                Shape::HoleRight { inner, .. } => {
                    out.push(Dir::Right);
                    cur = inner;
                }
                Shape::HoleLeft { inner, .. } => {
                    out.push(Dir::Left);
                    cur = inner;
                }
            }
        }
    }

    /// Plugs `inner` into the hole of `self`. The hole polarity of `self` must
    /// equal the outer polarity of `inner`.
    pub fn compose(&self, inner: &FormulaContext) -> Result<FormulaContext, ContextError> {
        match &self.shape {
            Shape::Hole => {
                if inner.outer != self.hole {
                    return Err(ContextError::Side {
                        side: Side::Antecedent,
                        expected: self.hole,
                        found: inner.outer,
                    });
                }
                Ok(inner.clone())
            }
            Shape::HoleRight {
                conn,
                left,
                inner: mine,
            } => FormulaContext::hole_right(*conn, left.clone(), mine.compose(inner)?),
            Shape::HoleLeft {
                conn,
                inner: mine,
                right,
            } => FormulaContext::hole_left(*conn, mine.compose(inner)?, right.clone()),
        }
    }

    /// Builds the context that cuts out the subformula of `f` at `path`, whose
    /// outermost position has polarity `outer`.
    pub fn from_path(f: &Formula, outer: Polarity, path: &[Dir]) -> Result<FormulaContext, ContextError> {
        match path.split_first() {
            None => Ok(FormulaContext::hole(outer)),
            Some((dir, rest)) => {
                let (conn, l, r) = f.as_bin().ok_or(ContextError::PathOutOfFormula)?;
                let (inner_outer, this_outer) = constructor_polarities(conn, *dir);
                if this_outer != outer {
                    return Err(ContextError::Polarity {
                        conn,
                        dir: *dir,
                        expected: this_outer,
                        found: outer,
                    });
                }
                match dir {
                    Dir::Left => {
                        let inner = FormulaContext::from_path(l, inner_outer, rest)?;
                        FormulaContext::hole_left(conn, inner, r.clone())
                    }
                    Dir::Right => {
                        let inner = FormulaContext::from_path(r, inner_outer, rest)?;
                        FormulaContext::hole_right(conn, l.clone(), inner)
                    }
                }
            }
        }
    }
}

fn check(conn: Connective, dir: Dir, inner: &FormulaContext) -> Result<Polarity, ContextError> {
    let (expected, outer) = constructor_polarities(conn, dir);
    if inner.outer != expected {
        return Err(ContextError::Polarity {
            conn,
            dir,
            expected,
            found: inner.outer,
        });
    }
    Ok(outer)
}

/// A judgement with one hole in either its antecedent or its succedent.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum JudgementContext {
    AntecedentHole { ctx: FormulaContext, succedent: Formula },
    SuccedentHole { antecedent: Formula, ctx: FormulaContext },
}

impl JudgementContext {
    pub fn antecedent(ctx: FormulaContext, succedent: Formula) -> Result<JudgementContext, ContextError> {
        if ctx.outer != Polarity::Pos {
            return Err(ContextError::Side {
                side: Side::Antecedent,
                expected: Polarity::Pos,
                found: ctx.outer,
            });
        }
        Ok(JudgementContext::AntecedentHole { ctx, succedent })
    }

    pub fn succedent(antecedent: Formula, ctx: FormulaContext) -> Result<JudgementContext, ContextError> {
        if ctx.outer != Polarity::Neg {
            return Err(ContextError::Side {
                side: Side::Succedent,
                expected: Polarity::Neg,
                found: ctx.outer,
            });
        }
        Ok(JudgementContext::SuccedentHole { antecedent, ctx })
    }

    /// `[] ⊢ succedent`
    pub fn top_antecedent(succedent: Formula) -> JudgementContext {
        JudgementContext::AntecedentHole {
            ctx: FormulaContext::hole(Polarity::Pos),
            succedent,
        }
    }

    /// `antecedent ⊢ []`
    pub fn top_succedent(antecedent: Formula) -> JudgementContext {
        JudgementContext::SuccedentHole {
            antecedent,
            ctx: FormulaContext::hole(Polarity::Neg),
        }
    }

    pub fn hole_polarity(&self) -> Polarity {
        self.ctx().hole
    }

    pub fn ctx(&self) -> &FormulaContext {
        match self {
            JudgementContext::AntecedentHole { ctx, .. } | JudgementContext::SuccedentHole { ctx, .. } => ctx,
        }
    }

    pub fn side(&self) -> Side {
        match self {
            JudgementContext::AntecedentHole { .. } => Side::Antecedent,
            JudgementContext::SuccedentHole { .. } => Side::Succedent,
        }
    }

    /// True when the hole is the whole antecedent or the whole succedent.
    pub fn is_top(&self) -> bool {
        self.ctx().is_hole()
    }

    pub fn plug(&self, a: &Formula) -> Judgement {
        match self {
            JudgementContext::AntecedentHole { ctx, succedent } => Judgement::new(ctx.plug(a), succedent.clone()),
            JudgementContext::SuccedentHole { antecedent, ctx } => Judgement::new(antecedent.clone(), ctx.plug(a)),
        }
    }

    /// Cuts the subformula at `(side, path)` out of `j`.
    pub fn from_path(j: &Judgement, side: Side, path: &[Dir]) -> Result<JudgementContext, ContextError> {
        let ctx = FormulaContext::from_path(j.side(side), Polarity::of_side(side), path)?;
        Ok(match side {
            Side::Antecedent => JudgementContext::AntecedentHole {
                ctx,
                succedent: j.rhs.clone(),
            },
            Side::Succedent => JudgementContext::SuccedentHole {
                antecedent: j.lhs.clone(),
                ctx,
            },
        })
    }

    /// Peels the context away one residuation step at a time with `a` in the
    /// hole. Returns the rules used (read upwards, i.e. each judgement is a
    /// premise of the rule concluding the previous one) and the judgements
    /// visited; the last judgement has `a` as its whole antecedent (polarity
    /// `+`) or whole succedent (polarity `-`).
    pub fn display(&self, a: &Formula) -> Vec<(RuleTag, Judgement)> {
        let mut steps = Vec::new();
        let mut cur = self.clone();
        while !cur.is_top() {
            let j = cur.plug(a);
            let (tag, next) = cur.unfold_once();
            let premises = backward(tag, &j).expect("context step matches its residuation rule");
            debug_assert_eq!(premises.len(), 1);
            debug_assert_eq!(next.plug(a), premises[0]);
            steps.push((tag, premises[0].clone()));
            cur = next;
        }
        steps
    }

    /// One residuation step bringing the outermost context node across the
    /// turnstile.
    fn unfold_once(&self) -> (RuleTag, JudgementContext) {
        use Connective::*;
        match self {
            JudgementContext::AntecedentHole { ctx, succedent: x } => match &ctx.shape {
                Shape::Hole => unreachable!("top context has nothing to unfold"),
                Shape::HoleRight { conn, left: y, inner } => {
                    let inner = (**inner).clone();
                    match conn {
                        // y ⊗ [] ⊢ x   ~>  [] ⊢ y ⇒ x
                        Prod => (RuleTag::RImpRProd, ante(inner, Formula::imp_r(y.clone(), x.clone()))),
                        // y ⇚ [] ⊢ x   ~>  y ⊢ x ⊕ []
                        DiffL => (
                            RuleTag::RSumDiffL,
                            JudgementContext::SuccedentHole {
                                antecedent: y.clone(),
                                ctx: wrap_right(Sum, x.clone(), inner),
                            },
                        ),
                        // y ⇛ [] ⊢ x   ~>  [] ⊢ y ⊕ x
                        DiffR => (RuleTag::RSumDiffR, ante(inner, Formula::sum(y.clone(), x.clone()))),
                        _ => unreachable!("well-polarised antecedent context"),
                    }
                }
                Shape::HoleLeft { conn, inner, right: y } => {
                    let inner = (**inner).clone();
                    match conn {
                        // [] ⊗ y ⊢ x   ~>  [] ⊢ x ⇐ y
                        Prod => (RuleTag::RImpLProd, ante(inner, Formula::imp_l(x.clone(), y.clone()))),
                        // [] ⇚ y ⊢ x   ~>  [] ⊢ x ⊕ y
                        DiffL => (RuleTag::RSumDiffL, ante(inner, Formula::sum(x.clone(), y.clone()))),
                        // [] ⇛ y ⊢ x   ~>  y ⊢ [] ⊕ x
                        DiffR => (
                            RuleTag::RSumDiffR,
                            JudgementContext::SuccedentHole {
                                antecedent: y.clone(),
                                ctx: wrap_left(Sum, inner, x.clone()),
                            },
                        ),
                        _ => unreachable!("well-polarised antecedent context"),
                    }
                }
            },
            JudgementContext::SuccedentHole { antecedent: x, ctx } => match &ctx.shape {
                Shape::Hole => unreachable!("top context has nothing to unfold"),
                Shape::HoleRight { conn, left: y, inner } => {
                    let inner = (**inner).clone();
                    match conn {
                        // x ⊢ y ⇒ []   ~>  y ⊗ x ⊢ []
                        ImpR => (
                            RuleTag::RProdImpR,
                            JudgementContext::SuccedentHole {
                                antecedent: Formula::prod(y.clone(), x.clone()),
                                ctx: inner,
                            },
                        ),
                        // x ⊢ y ⇐ []   ~>  x ⊗ [] ⊢ y
                        ImpL => (
                            RuleTag::RProdImpL,
                            JudgementContext::AntecedentHole {
                                ctx: wrap_right(Prod, x.clone(), inner),
                                succedent: y.clone(),
                            },
                        ),
                        // x ⊢ y ⊕ []   ~>  y ⇛ x ⊢ []
                        Sum => (
                            RuleTag::RDiffRSum,
                            JudgementContext::SuccedentHole {
                                antecedent: Formula::diff_r(y.clone(), x.clone()),
                                ctx: inner,
                            },
                        ),
                        _ => unreachable!("well-polarised succedent context"),
                    }
                }
                Shape::HoleLeft { conn, inner, right: y } => {
                    let inner = (**inner).clone();
                    match conn {
                        // x ⊢ [] ⇒ y   ~>  [] ⊗ x ⊢ y
                        ImpR => (
                            RuleTag::RProdImpR,
                            JudgementContext::AntecedentHole {
                                ctx: wrap_left(Prod, inner, x.clone()),
                                succedent: y.clone(),
                            },
                        ),
                        // x ⊢ [] ⇐ y   ~>  x ⊗ y ⊢ []
                        ImpL => (
                            RuleTag::RProdImpL,
                            JudgementContext::SuccedentHole {
                                antecedent: Formula::prod(x.clone(), y.clone()),
                                ctx: inner,
                            },
                        ),
                        // x ⊢ [] ⊕ y   ~>  x ⇚ y ⊢ []
                        Sum => (
                            RuleTag::RDiffLSum,
                            JudgementContext::SuccedentHole {
                                antecedent: Formula::diff_l(x.clone(), y.clone()),
                                ctx: inner,
                            },
                        ),
                        _ => unreachable!("well-polarised succedent context"),
                    }
                }
            },
        }
    }
}

fn ante(ctx: FormulaContext, succedent: Formula) -> JudgementContext {
    JudgementContext::AntecedentHole { ctx, succedent }
}

fn wrap_left(conn: Connective, inner: FormulaContext, right: Formula) -> FormulaContext {
    FormulaContext::hole_left(conn, inner, right).expect("polarity preserved by residuation")
}

fn wrap_right(conn: Connective, left: Formula, inner: FormulaContext) -> FormulaContext {
    FormulaContext::hole_right(conn, left, inner).expect("polarity preserved by residuation")
}
