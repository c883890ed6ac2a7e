//! Admissible cut.
//!
//! [`cut`] turns derivations of `A ⊢ B` and `B ⊢ C` into one of `A ⊢ C`. It
//! dispatches on the main connective of `B`, locates the rule introducing `B`
//! with [`find_origin`] and rebuilds around it, recursing only on the immediate
//! subformulas of `B`. The call stack therefore grows at most `depth(B) + 1`
//! frames deep, plus the spines, which are folded iteratively.

use thiserror::Error;

use crate::context::JudgementContext;
use crate::derivation::{forward, Derivation, RuleTag, SchemaMismatch};
use crate::formula::{Connective, Formula, Judgement};
use crate::origin::{find_origin, OriginError, OriginView};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("cut formula mismatch: left derivation concludes {left}, right derivation starts from {right}")]
    CutFormulaMismatch { left: Formula, right: Formula },
    #[error(transparent)]
    Schema(#[from] SchemaMismatch),
    #[error("origin lookup failed: {0}")]
    Origin(#[from] OriginError),
}

/// Instrumentation collected by [`cut_with_stats`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CutStats {
    /// Number of cut invocations, the outermost included.
    pub calls: usize,
    /// Deepest nesting of cut invocations; the outermost call has depth 1.
    pub max_depth: usize,
}

pub fn cut(f: &Derivation, g: &Derivation) -> Result<Derivation, CutError> {
    cut_with_stats(f, g).map(|(d, _)| d)
}

pub fn cut_with_stats(f: &Derivation, g: &Derivation) -> Result<(Derivation, CutStats), CutError> {
    let fj = f.infer()?;
    let gj = g.infer()?;
    if fj.rhs != gj.lhs {
        return Err(CutError::CutFormulaMismatch {
            left: fj.rhs,
            right: gj.lhs,
        });
    }
    let mut stats = CutStats::default();
    let out = Cutter { stats: &mut stats }.run(Proof { d: f.clone(), j: fj }, Proof { d: g.clone(), j: gj }, 1)?;
    debug_assert!(out.d.infer().as_ref() == Ok(&out.j));
    Ok((out.d, stats))
}

/// A derivation paired with its conclusion.
#[derive(Clone)]
struct Proof {
    d: Derivation,
    j: Judgement,
}

impl Proof {
    fn rule(self, tag: RuleTag) -> Proof {
        let j = forward(tag, &[&self.j]).unwrap_or_else(|| panic!("{tag} does not apply to {}", self.j));
        Proof {
            d: Derivation::unary(tag, self.d),
            j,
        }
    }
}

struct Cutter<'a> {
    stats: &'a mut CutStats,
}

impl Cutter<'_> {
    fn run(&mut self, f: Proof, g: Proof, depth: usize) -> Result<Proof, CutError> {
        self.stats.calls += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let b = f.j.rhs.clone();
        let (a, c) = (f.j.lhs.clone(), g.j.rhs.clone());
        let target = Judgement::new(a.clone(), c.clone());
        let next = depth + 1;

        let conn = match b.as_bin() {
            None => {
                let v = find_origin(&JudgementContext::top_antecedent(c), &b, &g.d)?;
                return Ok(Proof {
                    d: v.spine.apply(f.d),
                    j: target,
                });
            }
            Some((conn, _, _)) => conn,
        };

        match conn {
            Connective::Prod | Connective::DiffL | Connective::DiffR => {
                let v = find_origin(&JudgementContext::top_succedent(a), &b, &f.d)?;
                let (h1, h2) = premises(&v);
                let core = match conn {
                    // r⇐⊗ (cut h₁ (r⊗⇐ (r⇒⊗ (cut h₂ (r⊗⇒ g)))))
                    Connective::Prod => {
                        let inner = self.run(h2, g.rule(RuleTag::RProdImpR), next)?;
                        let inner = inner.rule(RuleTag::RImpRProd).rule(RuleTag::RProdImpL);
                        self.run(h1, inner, next)?.rule(RuleTag::RImpLProd)
                    }
                    // r⊕⇚ (r⇛⊕ (cut (r⊕⇛ (cut h₁ (r⇚⊕ g))) h₂))
                    Connective::DiffL => {
                        let inner = self.run(h1, g.rule(RuleTag::RDiffLSum), next)?;
                        let inner = inner.rule(RuleTag::RSumDiffR);
                        self.run(inner, h2, next)?
                            .rule(RuleTag::RDiffRSum)
                            .rule(RuleTag::RSumDiffL)
                    }
                    // r⊕⇛ (r⇚⊕ (cut (r⊕⇚ (cut h₂ (r⇛⊕ g))) h₁))
                    _ => {
                        let inner = self.run(h2, g.rule(RuleTag::RDiffRSum), next)?;
                        let inner = inner.rule(RuleTag::RSumDiffL);
                        self.run(inner, h1, next)?
                            .rule(RuleTag::RDiffLSum)
                            .rule(RuleTag::RSumDiffR)
                    }
                };
                Ok(rebuild(&v, core, target))
            }
            Connective::ImpR | Connective::ImpL | Connective::Sum => {
                let v = find_origin(&JudgementContext::top_antecedent(c), &b, &g.d)?;
                let (h1, h2) = premises(&v);
                let core = match conn {
                    // r⊗⇒ (r⇐⊗ (cut h₁ (r⊗⇐ (cut (r⇒⊗ f) h₂))))
                    Connective::ImpR => {
                        let inner = self.run(f.rule(RuleTag::RImpRProd), h2, next)?;
                        let inner = inner.rule(RuleTag::RProdImpL);
                        self.run(h1, inner, next)?
                            .rule(RuleTag::RImpLProd)
                            .rule(RuleTag::RProdImpR)
                    }
                    // r⊗⇐ (r⇒⊗ (cut h₂ (r⊗⇒ (cut (r⇐⊗ f) h₁))))
                    Connective::ImpL => {
                        let inner = self.run(f.rule(RuleTag::RImpLProd), h1, next)?;
                        let inner = inner.rule(RuleTag::RProdImpR);
                        self.run(h2, inner, next)?
                            .rule(RuleTag::RImpRProd)
                            .rule(RuleTag::RProdImpL)
                    }
                    // r⇚⊕ (cut (r⊕⇚ (r⇛⊕ (cut (r⊕⇛ f) h₂))) h₁)
                    _ => {
                        let inner = self.run(f.rule(RuleTag::RSumDiffR), h2, next)?;
                        let inner = inner.rule(RuleTag::RDiffRSum).rule(RuleTag::RSumDiffL);
                        self.run(inner, h1, next)?.rule(RuleTag::RDiffLSum)
                    }
                };
                Ok(rebuild(&v, core, target))
            }
        }
    }
}

fn premises(v: &OriginView) -> (Proof, Proof) {
    let js = v.premise_judgements();
    let [h1, h2] = [0, 1].map(|i| Proof {
        d: v.premises[i].clone(),
        j: js[i].clone(),
    });
    (h1, h2)
}

fn rebuild(v: &OriginView, core: Proof, target: Judgement) -> Proof {
    debug_assert_eq!(v.spine.conclusion(&core.j).as_ref(), Ok(&target));
    Proof {
        d: v.spine.apply(core.d),
        j: target,
    }
}
