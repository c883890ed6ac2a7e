//! Origin views: locating the rule that introduced a connective occurrence.
//!
//! Given a derivation `f` of `J[B]` for a well-polarised judgement context `J`,
//! [`find_origin`] walks `f` from the root, following the position of the hole
//! through each rule's schema, until it reaches the monotonicity rule (or axiom)
//! that created `B`. The rules passed on the way form a [`RebuildSpine`].

use thiserror::Error;

use crate::context::{ContextError, Dir, JudgementContext, Polarity};
use crate::derivation::{backward, forward, Derivation, PatHit, RuleTag, SchemaMismatch};
use crate::formula::{Formula, Judgement, MainConnective, Side};

/// One rule application with a single open premise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SpineFrame {
    UnaryFrame(RuleTag),
    /// The open premise is the left one.
    BinaryLeftFrame(RuleTag, Derivation),
    /// The open premise is the right one.
    BinaryRightFrame(RuleTag, Derivation),
}

impl SpineFrame {
    pub fn tag(&self) -> RuleTag {
        match self {
            SpineFrame::UnaryFrame(t) | SpineFrame::BinaryLeftFrame(t, _) | SpineFrame::BinaryRightFrame(t, _) => *t,
        }
    }

    fn wrap(&self, d: Derivation) -> Derivation {
        match self {
            SpineFrame::UnaryFrame(t) => Derivation::unary(*t, d),
            SpineFrame::BinaryLeftFrame(t, r) => Derivation::binary(*t, d, r.clone()),
            SpineFrame::BinaryRightFrame(t, l) => Derivation::binary(*t, l.clone(), d),
        }
    }
}

/// A derivation with one open leaf, as a list of frames from the open leaf
/// downwards.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RebuildSpine {
    pub frames: Vec<SpineFrame>,
}

impl RebuildSpine {
    pub fn empty() -> RebuildSpine {
        RebuildSpine::default()
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    /// Plugs `d` into the open leaf. No checking is done.
    pub fn apply(&self, d: Derivation) -> Derivation {
        self.frames.iter().fold(d, |acc, frame| frame.wrap(acc))
    }

    /// Plugs `d` into the open leaf and checks the result.
    pub fn apply_checked(&self, d: Derivation) -> Result<Derivation, SchemaMismatch> {
        let out = self.apply(d);
        out.infer()?;
        Ok(out)
    }

    /// The conclusion the spine produces when its open premise is `premise`.
    pub fn conclusion(&self, premise: &Judgement) -> Result<Judgement, SchemaMismatch> {
        let mut j = premise.clone();
        for (i, frame) in self.frames.iter().enumerate() {
            let tag = frame.tag();
            let (fixed, open_left) = match frame {
                SpineFrame::UnaryFrame(_) => (None, true),
                SpineFrame::BinaryLeftFrame(_, r) => (Some(r), true),
                SpineFrame::BinaryRightFrame(_, l) => (Some(l), false),
            };
            let mismatch = |premises: Vec<Judgement>| SchemaMismatch {
                path: vec![0; self.frames.len() - 1 - i],
                tag,
                premises,
            };
            let next = match fixed {
                None => forward(tag, &[&j]).ok_or_else(|| mismatch(vec![j.clone()]))?,
                Some(other) => {
                    let oj = other.infer()?;
                    let ps = if open_left { [&j, &oj] } else { [&oj, &j] };
                    forward(tag, &ps).ok_or_else(|| mismatch(ps.iter().map(|p| (*p).clone()).collect()))?
                }
            };
            j = next;
        }
        Ok(j)
    }
}

/// A derivation split into the rule introducing the hole formula, that rule's
/// premises, and the spine leading back down to the root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OriginView {
    pub introducer: RuleTag,
    pub premises: Vec<Derivation>,
    pub spine: RebuildSpine,
    /// Conclusion of the introducing rule.
    pub local: Judgement,
    /// Side of `local` on which the hole formula sits.
    pub side: Side,
}

impl OriginView {
    pub fn introduced(&self) -> Derivation {
        match self.premises.as_slice() {
            [] => match &self.local.lhs {
                Formula::El(a) => Derivation::Ax(a.clone()),
                _ => unreachable!("axiom introduces an atom"),
            },
            [l, r] => Derivation::binary(self.introducer, l.clone(), r.clone()),
            _ => unreachable!("introducers are nullary or binary"),
        }
    }

    /// Rebuilds the analysed derivation.
    pub fn rebuild(&self) -> Derivation {
        self.spine.apply(self.introduced())
    }

    /// Conclusions of the introducer's premises.
    pub fn premise_judgements(&self) -> Vec<Judgement> {
        backward(self.introducer, &self.local).expect("introducer matches its conclusion")
    }

    /// `local` with the hole formula replaced by `g`.
    pub fn local_with(&self, g: &Formula) -> Judgement {
        match self.side {
            Side::Antecedent => Judgement::new(g.clone(), self.local.rhs.clone()),
            Side::Succedent => Judgement::new(self.local.lhs.clone(), g.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OriginError {
    #[error("a {conn:?} occurrence must sit in a context of polarity {expected}, got {found}")]
    Polarity {
        conn: MainConnective,
        expected: Polarity,
        found: Polarity,
    },
    #[error("derivation does not conclude the plugged judgement at {path:?}")]
    JudgementMismatch { path: Vec<usize> },
    #[error("no introducing rule for the hole formula; stopped at {tag} at {path:?}")]
    NoIntroducer { path: Vec<usize>, tag: RuleTag },
    #[error(transparent)]
    Context(#[from] ContextError),
}

/// The polarity a hole formula with main connective `conn` must have.
pub fn required_polarity(conn: MainConnective) -> Polarity {
    use crate::formula::Connective::*;
    match conn {
        MainConnective::Bin(Prod | DiffL | DiffR) => Polarity::Neg,
        MainConnective::El | MainConnective::Bin(ImpR | ImpL | Sum) => Polarity::Pos,
    }
}

fn introducer_for(conn: MainConnective) -> RuleTag {
    match conn {
        MainConnective::El => RuleTag::Ax,
        MainConnective::Bin(c) => RuleTag::monotonicity(c),
    }
}

/// Finds where `hole` was introduced in `f`, which must derive
/// `jctx.plug(hole)`.
pub fn find_origin(jctx: &JudgementContext, hole: &Formula, f: &Derivation) -> Result<OriginView, OriginError> {
    let conn = hole.main_connective();
    let expected = required_polarity(conn);
    if jctx.hole_polarity() != expected {
        return Err(OriginError::Polarity {
            conn,
            expected,
            found: jctx.hole_polarity(),
        });
    }
    let introducer = introducer_for(conn);

    let mut j = jctx.plug(hole);
    let mut side = jctx.side();
    let mut dirs: Vec<Dir> = jctx.ctx().path();
    let mut cur = f;
    let mut frames = Vec::new();
    let mut path = Vec::new();

    let view = loop {
        let tag = cur.tag();
        let premises_j = backward(tag, &j).ok_or_else(|| OriginError::JudgementMismatch { path: path.clone() })?;
        let schema = match tag.schema() {
            None => {
                if !dirs.is_empty() || introducer != RuleTag::Ax {
                    return Err(OriginError::NoIntroducer { path, tag });
                }
                break OriginView {
                    introducer,
                    premises: Vec::new(),
                    spine: RebuildSpine::empty(),
                    local: j,
                    side,
                };
            }
            Some(s) => s,
        };
        match schema.walk_conclusion(side, &dirs) {
            PatHit::Node => {
                if tag != introducer || !dirs.is_empty() {
                    return Err(OriginError::NoIntroducer { path, tag });
                }
                break OriginView {
                    introducer,
                    premises: cur.premises().into_iter().cloned().collect(),
                    spine: RebuildSpine::empty(),
                    local: j,
                    side,
                };
            }
            PatHit::Var { var, consumed } => {
                let (idx, pside, mut ppath) = schema.premise_position(var);
                ppath.extend_from_slice(&dirs[consumed..]);
                let children = cur.premises();
                frames.push(match (children.len(), idx) {
                    (1, _) => SpineFrame::UnaryFrame(tag),
                    (_, 0) => SpineFrame::BinaryLeftFrame(tag, children[1].clone()),
                    _ => SpineFrame::BinaryRightFrame(tag, children[0].clone()),
                });
                j = premises_j[idx].clone();
                JudgementContext::from_path(&j, pside, &ppath)?;
                side = pside;
                dirs = ppath;
                cur = children[idx];
                path.push(idx);
            }
        }
    };

    frames.reverse();
    let view = OriginView {
        spine: RebuildSpine { frames },
        ..view
    };
    debug_assert_eq!(&view.rebuild(), f, "origin view must rebuild the input");
    Ok(view)
}
