//! Backward enumeration of loop-free cut-free derivations.
//!
//! Rules are tried depth-first in [`RuleTag::ALL`] order. A branch is abandoned
//! when a premise repeats a judgement already on the path from the root.
//! Premises of monotonicity rules are strictly smaller than every judgement
//! below them, so they can never close a loop; their results depend only on
//! the judgement and the remaining depth and are cached.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use crate::derivation::{backward, Derivation, RuleTag};
use crate::formula::Judgement;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Stop after this many derivations.
    pub max_proofs: Option<usize>,
    /// Longest allowed branch, counted in rule applications (axioms included).
    pub max_depth: Option<usize>,
}

impl SearchOptions {
    pub fn exhaustive() -> SearchOptions {
        SearchOptions::default()
    }

    pub fn first(n: usize) -> SearchOptions {
        SearchOptions {
            max_proofs: Some(n),
            max_depth: None,
        }
    }
}

/// All loop-free derivations of `j`, in depth-first order.
pub fn enumerate(j: &Judgement, opts: SearchOptions) -> Vec<Derivation> {
    let limit = opts.max_proofs.unwrap_or(usize::MAX);
    if limit == 0 {
        return Vec::new();
    }
    let mut s = Searcher {
        limit,
        cache: HashMap::new(),
        path: Vec::new(),
    };
    let found = s.fresh(j, opts.max_depth);
    let mut seen = HashSet::new();
    found.iter().filter(|d| seen.insert(*d)).take(limit).cloned().collect()
}

/// True when `j` has at least one loop-free derivation.
pub fn provable(j: &Judgement) -> bool {
    !enumerate(j, SearchOptions::first(1)).is_empty()
}

struct Searcher {
    limit: usize,
    cache: HashMap<(Judgement, Option<usize>), Rc<Vec<Derivation>>>,
    path: Vec<Judgement>,
}

impl Searcher {
    /// Proves `j` on an empty path.
    fn fresh(&mut self, j: &Judgement, budget: Option<usize>) -> Rc<Vec<Derivation>> {
        let key = (j.clone(), budget);
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let saved = std::mem::take(&mut self.path);
        let out = Rc::new(self.prove(j, budget));
        self.path = saved;
        self.cache.insert(key, out.clone());
        out
    }

    fn prove(&mut self, j: &Judgement, budget: Option<usize>) -> Vec<Derivation> {
        if budget == Some(0) {
            return Vec::new();
        }
        let below = budget.map(|b| b - 1);
        self.path.push(j.clone());
        let mut out = Vec::new();
        for tag in RuleTag::ALL {
            if out.len() >= self.limit {
                break;
            }
            let Some(premises) = backward(tag, j) else { continue };
            match premises.as_slice() {
                [] => match &j.lhs {
                    crate::formula::Formula::El(a) => out.push(Derivation::Ax(a.clone())),
                    _ => unreachable!("ax concludes atoms"),
                },
                [p] => {
                    if self.path.contains(p) {
                        continue;
                    }
                    for d in self.prove(p, below) {
                        out.push(Derivation::unary(tag, d));
                        if out.len() >= self.limit {
                            break;
                        }
                    }
                }
                [l, r] => {
                    let ls = self.fresh(l, below);
                    if ls.is_empty() {
                        continue;
                    }
                    let rs = self.fresh(r, below);
                    'outer: for dl in ls.iter() {
                        for dr in rs.iter() {
                            out.push(Derivation::binary(tag, dl.clone(), dr.clone()));
                            if out.len() >= self.limit {
                                break 'outer;
                            }
                        }
                    }
                }
                _ => unreachable!("rules have at most two premises"),
            }
        }
        self.path.pop();
        out
    }
}
