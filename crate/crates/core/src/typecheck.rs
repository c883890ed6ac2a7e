//! Simply-typed checking of [`SemTerm`]s.
//!
//! Terms carry no annotations, so checking is inference by unification against
//! the expected type. A [`Signature`] says what atoms, the answer type and the
//! constants mean: [`Signature::abstract_answers`] keeps everything opaque,
//! [`Signature::model`] interprets them over a finite model.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::cps::{Name, SemTerm, SemType};
use crate::formula::{Atom, Formula};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Ty {
    Entity,
    Bool,
    /// The abstract answer type `R`.
    Answer,
    /// An uninterpreted atom denotation.
    Atom(Atom),
    Prod(Box<Ty>, Box<Ty>),
    Arrow(Box<Ty>, Box<Ty>),
    /// Unification variable; never appears in checked results.
    Var(usize),
}

impl Ty {
    pub fn prod(l: Ty, r: Ty) -> Ty {
        Ty::Prod(Box::new(l), Box::new(r))
    }

    pub fn arrow(l: Ty, r: Ty) -> Ty {
        Ty::Arrow(Box::new(l), Box::new(r))
    }
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ty::Entity => f.write_str("Entity"),
            Ty::Bool => f.write_str("Bool"),
            Ty::Answer => f.write_str("R"),
            Ty::Atom(a) => write!(f, "{a}"),
            Ty::Prod(l, r) => write!(f, "({l} × {r})"),
            Ty::Arrow(l, r) => write!(f, "({l} → {r})"),
            Ty::Var(i) => write!(f, "?{i}"),
        }
    }
}

/// Interpretation of atoms, the answer type and constants.
#[derive(Clone, Debug)]
pub struct Signature {
    pub atoms: BTreeMap<Atom, Ty>,
    /// When set, atoms missing from `atoms` stay uninterpreted.
    pub open_atoms: bool,
    pub answer: Ty,
    pub constants: BTreeMap<String, Ty>,
}

impl Signature {
    /// Atoms and the answer type are opaque; no constants.
    pub fn abstract_answers() -> Signature {
        Signature {
            atoms: BTreeMap::new(),
            open_atoms: true,
            answer: Ty::Answer,
            constants: BTreeMap::new(),
        }
    }

    /// `np` as entities, `n` as predicates, `s` and answers as truth values,
    /// with the logical constants and the given predicate and relation names.
    pub fn model<'a>(preds: impl IntoIterator<Item = &'a str>, rels: impl IntoIterator<Item = &'a str>) -> Signature {
        let pred = Ty::arrow(Ty::Entity, Ty::Bool);
        let mut constants = BTreeMap::new();
        let quant = Ty::arrow(pred.clone(), Ty::Bool);
        let conn = Ty::arrow(Ty::Bool, Ty::arrow(Ty::Bool, Ty::Bool));
        constants.insert("forall".to_string(), quant.clone());
        constants.insert("exists".to_string(), quant);
        constants.insert("and".to_string(), conn.clone());
        constants.insert("implies".to_string(), conn);
        for p in preds {
            constants.insert(p.to_string(), pred.clone());
        }
        for r in rels {
            constants.insert(r.to_string(), Ty::arrow(Ty::Entity, pred.clone()));
        }
        let atoms = [("np", Ty::Entity), ("n", pred), ("s", Ty::Bool)]
            .into_iter()
            .map(|(a, t)| (Atom::new(a), t))
            .collect();
        Signature {
            atoms,
            open_atoms: false,
            answer: Ty::Bool,
            constants,
        }
    }

    /// Interprets a semantic type; `None` if an atom has no interpretation.
    pub fn interpret(&self, t: &SemType) -> Option<Ty> {
        Some(match t {
            SemType::AtomDen(a) => match self.atoms.get(a) {
                Some(ty) => ty.clone(),
                None if self.open_atoms => Ty::Atom(a.clone()),
                None => return None,
            },
            SemType::Pair(l, r) => Ty::prod(self.interpret(l)?, self.interpret(r)?),
            SemType::Neg(t) => Ty::arrow(self.interpret(t)?, self.answer.clone()),
        })
    }

    /// The type `R(d)` must have for `d : A ⊢ B`: `⌈A⌉ → ¬¬⌈B⌉`.
    pub fn right_type(&self, a: &Formula, b: &Formula) -> Option<Ty> {
        use crate::cps::translate_type;
        let nnb = SemType::neg(SemType::neg(translate_type(b)));
        Some(Ty::arrow(self.interpret(&translate_type(a))?, self.interpret(&nnb)?))
    }

    /// The type `L(d)` must have for `d : A ⊢ B`: `¬⌈B⌉ → ¬⌈A⌉`.
    pub fn left_type(&self, a: &Formula, b: &Formula) -> Option<Ty> {
        use crate::cps::translate_type;
        let nb = SemType::neg(translate_type(b));
        let na = SemType::neg(translate_type(a));
        Some(Ty::arrow(self.interpret(&nb)?, self.interpret(&na)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("unbound variable {name} at {path:?}")]
    UnboundVariable { name: String, path: Vec<usize> },
    #[error("unknown constant {name} at {path:?}")]
    UnknownConstant { name: String, path: Vec<usize> },
    #[error("type mismatch at {path:?}: expected {expected}, found {found}")]
    Mismatch {
        path: Vec<usize>,
        expected: String,
        found: String,
    },
}

impl TypeError {
    /// Child indices from the root to the ill-typed subterm.
    pub fn path(&self) -> &[usize] {
        match self {
            TypeError::UnboundVariable { path, .. }
            | TypeError::UnknownConstant { path, .. }
            | TypeError::Mismatch { path, .. } => path,
        }
    }
}

/// Checks a closed term against `expected`.
pub fn type_check(t: &SemTerm, expected: &Ty, sig: &Signature) -> Result<(), TypeError> {
    let mut u = Unifier::default();
    let mut path = Vec::new();
    let found = u.infer(t, &mut Vec::new(), sig, &mut path)?;
    u.unify(&found, expected).map_err(|_| TypeError::Mismatch {
        path: Vec::new(),
        expected: expected.to_string(),
        found: u.resolve(&found).to_string(),
    })
}

#[derive(Default)]
struct Unifier {
    next: usize,
    subst: HashMap<usize, Ty>,
}

type Scope = Vec<(Name, Ty)>;

impl Unifier {
    fn fresh(&mut self) -> Ty {
        self.next += 1;
        Ty::Var(self.next - 1)
    }

    fn walk(&self, t: &Ty) -> Ty {
        let mut t = t.clone();
        while let Ty::Var(i) = t {
            match self.subst.get(&i) {
                Some(s) => t = s.clone(),
                None => break,
            }
        }
        t
    }

    fn resolve(&self, t: &Ty) -> Ty {
        match self.walk(t) {
            Ty::Prod(l, r) => Ty::prod(self.resolve(&l), self.resolve(&r)),
            Ty::Arrow(l, r) => Ty::arrow(self.resolve(&l), self.resolve(&r)),
            other => other,
        }
    }

    fn occurs(&self, i: usize, t: &Ty) -> bool {
        match self.walk(t) {
            Ty::Var(j) => i == j,
            Ty::Prod(l, r) | Ty::Arrow(l, r) => self.occurs(i, &l) || self.occurs(i, &r),
            _ => false,
        }
    }

    fn unify(&mut self, a: &Ty, b: &Ty) -> Result<(), ()> {
        let (a, b) = (self.walk(a), self.walk(b));
        match (&a, &b) {
            (Ty::Var(i), Ty::Var(j)) if i == j => Ok(()),
            (Ty::Var(i), t) | (t, Ty::Var(i)) => {
                if self.occurs(*i, t) {
                    return Err(());
                }
                self.subst.insert(*i, t.clone());
                Ok(())
            }
            (Ty::Prod(a1, a2), Ty::Prod(b1, b2)) | (Ty::Arrow(a1, a2), Ty::Arrow(b1, b2)) => {
                self.unify(a1, b1)?;
                self.unify(a2, b2)
            }
            _ if a == b => Ok(()),
            _ => Err(()),
        }
    }

    fn expect(&mut self, found: &Ty, expected: &Ty, path: &[usize]) -> Result<(), TypeError> {
        self.unify(found, expected).map_err(|_| TypeError::Mismatch {
            path: path.to_vec(),
            expected: self.resolve(expected).to_string(),
            found: self.resolve(found).to_string(),
        })
    }

    fn infer(
        &mut self,
        t: &SemTerm,
        scope: &mut Scope,
        sig: &Signature,
        path: &mut Vec<usize>,
    ) -> Result<Ty, TypeError> {
        match t {
            SemTerm::Var(x) => scope
                .iter()
                .rev()
                .find(|(n, _)| n == x)
                .map(|(_, ty)| ty.clone())
                .ok_or_else(|| TypeError::UnboundVariable {
                    name: x.to_string(),
                    path: path.clone(),
                }),
            SemTerm::Const(c) => sig
                .constants
                .get(&**c)
                .cloned()
                .ok_or_else(|| TypeError::UnknownConstant {
                    name: c.to_string(),
                    path: path.clone(),
                }),
            SemTerm::Lam(x, body) => {
                let a = self.fresh();
                scope.push((x.clone(), a.clone()));
                path.push(0);
                let b = self.infer(body, scope, sig, path);
                path.pop();
                scope.pop();
                Ok(Ty::arrow(a, b?))
            }
            SemTerm::PairLam(x, y, body) => {
                let (a, b) = (self.fresh(), self.fresh());
                scope.push((x.clone(), a.clone()));
                scope.push((y.clone(), b.clone()));
                path.push(0);
                let r = self.infer(body, scope, sig, path);
                path.pop();
                scope.truncate(scope.len() - 2);
                Ok(Ty::arrow(Ty::prod(a, b), r?))
            }
            SemTerm::App(f, a) => {
                path.push(0);
                let ft = self.infer(f, scope, sig, path)?;
                path.pop();
                path.push(1);
                let at = self.infer(a, scope, sig, path)?;
                path.pop();
                let res = self.fresh();
                // Report the argument when the function type is already known.
                match self.walk(&ft) {
                    Ty::Arrow(dom, _) => {
                        path.push(1);
                        self.expect(&at, &dom, path)?;
                        path.pop();
                        self.expect(&ft, &Ty::arrow(at, res.clone()), path)?;
                    }
                    _ => {
                        path.push(0);
                        self.expect(&ft, &Ty::arrow(at, res.clone()), path)?;
                        path.pop();
                    }
                }
                Ok(res)
            }
            SemTerm::MkPair(l, r) => {
                path.push(0);
                let lt = self.infer(l, scope, sig, path)?;
                path.pop();
                path.push(1);
                let rt = self.infer(r, scope, sig, path)?;
                path.pop();
                Ok(Ty::prod(lt, rt))
            }
        }
    }
}
