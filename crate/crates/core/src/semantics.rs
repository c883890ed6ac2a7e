//! Evaluation of semantic terms over finite models.
//!
//! Every type that appears under a model signature is finite, so each type has
//! a canonical enumeration of its values ([`points`]) and every value an index
//! into it ([`index_of`]). Function values given as tables store their results
//! in that order, and equality of values of a type is equality of indices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::cps::{translate_r, Name, SemTerm};
use crate::derivation::{Derivation, SchemaMismatch};
use crate::formula::{Formula, Judgement};
use crate::typecheck::{type_check, Signature, Ty, TypeError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("a model needs at least one entity")]
    NoEntities,
    #[error("entity {0} listed twice")]
    DuplicateEntity(String),
    #[error("{name} mentions unknown entity {entity}")]
    UnknownEntity { name: String, entity: String },
    #[error("name {0} is reserved or already used")]
    NameClash(String),
}

/// A finite first-order model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    entities: Vec<Name>,
    preds: BTreeMap<String, BTreeSet<Name>>,
    rels: BTreeMap<String, BTreeSet<(Name, Name)>>,
}

const RESERVED: [&str; 4] = ["forall", "exists", "and", "implies"];

impl Model {
    pub fn new(entities: &[&str]) -> Result<Model, ModelError> {
        if entities.is_empty() {
            return Err(ModelError::NoEntities);
        }
        let mut list: Vec<Name> = Vec::new();
        for e in entities {
            if list.iter().any(|x| &**x == *e) {
                return Err(ModelError::DuplicateEntity(e.to_string()));
            }
            list.push(Arc::from(*e));
        }
        Ok(Model {
            entities: list,
            preds: BTreeMap::new(),
            rels: BTreeMap::new(),
        })
    }

    fn entity(&self, owner: &str, e: &str) -> Result<Name, ModelError> {
        self.entities
            .iter()
            .find(|x| &***x == e)
            .cloned()
            .ok_or_else(|| ModelError::UnknownEntity {
                name: owner.to_string(),
                entity: e.to_string(),
            })
    }

    fn claim(&self, name: &str) -> Result<(), ModelError> {
        if RESERVED.contains(&name) || self.preds.contains_key(name) || self.rels.contains_key(name) {
            return Err(ModelError::NameClash(name.to_string()));
        }
        Ok(())
    }

    pub fn add_pred(&mut self, name: &str, members: &[&str]) -> Result<(), ModelError> {
        self.claim(name)?;
        let set = members
            .iter()
            .map(|e| self.entity(name, e))
            .collect::<Result<BTreeSet<_>, _>>()?;
        self.preds.insert(name.to_string(), set);
        Ok(())
    }

    pub fn add_rel(&mut self, name: &str, pairs: &[(&str, &str)]) -> Result<(), ModelError> {
        self.claim(name)?;
        let set = pairs
            .iter()
            .map(|(a, b)| Ok((self.entity(name, a)?, self.entity(name, b)?)))
            .collect::<Result<BTreeSet<_>, ModelError>>()?;
        self.rels.insert(name.to_string(), set);
        Ok(())
    }

    pub fn with_pred(mut self, name: &str, members: &[&str]) -> Result<Model, ModelError> {
        self.add_pred(name, members)?;
        Ok(self)
    }

    pub fn with_rel(mut self, name: &str, pairs: &[(&str, &str)]) -> Result<Model, ModelError> {
        self.add_rel(name, pairs)?;
        Ok(self)
    }

    pub fn entities(&self) -> &[Name] {
        &self.entities
    }

    pub fn preds(&self) -> &BTreeMap<String, BTreeSet<Name>> {
        &self.preds
    }

    pub fn rels(&self) -> &BTreeMap<String, BTreeSet<(Name, Name)>> {
        &self.rels
    }

    pub fn holds(&self, pred: &str, e: &str) -> bool {
        self.preds.get(pred).is_some_and(|s| s.iter().any(|x| &**x == e))
    }

    pub fn related(&self, rel: &str, a: &str, b: &str) -> bool {
        self.rels
            .get(rel)
            .is_some_and(|s| s.iter().any(|(x, y)| &**x == a && &**y == b))
    }

    /// The signature interpreting this model's names.
    pub fn signature(&self) -> Signature {
        Signature::model(
            self.preds.keys().map(String::as_str),
            self.rels.keys().map(String::as_str),
        )
    }

    fn entity_index(&self, e: &str) -> Option<usize> {
        self.entities.iter().position(|x| &**x == e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    Forall,
    Exists,
    And,
    Implies,
}

#[derive(Clone)]
pub enum Func {
    Closure {
        params: Params,
        body: Arc<SemTerm>,
        env: Env,
    },
    /// Results listed in the canonical order of the domain's points.
    Table {
        dom: Arc<Ty>,
        values: Arc<Vec<SemValue>>,
    },
    Builtin(Builtin, Vec<SemValue>),
    Pred(Name),
    Rel(Name, Vec<SemValue>),
}

#[derive(Clone)]
pub enum Params {
    One(Name),
    Two(Name, Name),
}

#[derive(Clone)]
pub enum SemValue {
    Truth(bool),
    Ent(Name),
    Pair(Arc<SemValue>, Arc<SemValue>),
    Func(Func),
}

impl SemValue {
    pub fn pair(l: SemValue, r: SemValue) -> SemValue {
        SemValue::Pair(Arc::new(l), Arc::new(r))
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            SemValue::Truth(b) => Some(*b),
            _ => None,
        }
    }
}

impl fmt::Debug for SemValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemValue::Truth(b) => write!(f, "{b}"),
            SemValue::Ent(e) => write!(f, "{e}"),
            SemValue::Pair(l, r) => write!(f, "({l:?}, {r:?})"),
            SemValue::Func(Func::Table { values, .. }) => write!(f, "table{values:?}"),
            SemValue::Func(_) => f.write_str("<function>"),
        }
    }
}

/// Persistent variable environment.
#[derive(Clone, Default)]
pub struct Env(Option<Arc<EnvNode>>);

struct EnvNode {
    name: Name,
    value: SemValue,
    next: Env,
}

impl Env {
    pub fn empty() -> Env {
        Env(None)
    }

    pub fn bind(&self, name: &str, value: SemValue) -> Env {
        self.bind_name(Arc::from(name), value)
    }

    fn bind_name(&self, name: Name, value: SemValue) -> Env {
        Env(Some(Arc::new(EnvNode {
            name,
            value,
            next: self.clone(),
        })))
    }

    fn lookup(&self, name: &str) -> Option<&SemValue> {
        let mut cur = &self.0;
        while let Some(node) = cur {
            if &*node.name == name {
                return Some(&node.value);
            }
            cur = &node.next.0;
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("unknown constant {0}")]
    UnknownConstant(String),
    #[error("evaluation stuck: {0}")]
    Stuck(String),
    #[error("type {0} has no finite enumeration in this model")]
    NotFinite(String),
    #[error("type {0} has too many values to enumerate")]
    TooLarge(String),
}

fn stuck(what: &str, v: &SemValue) -> EvalError {
    EvalError::Stuck(format!("expected {what}, got {v:?}"))
}

pub fn eval(t: &SemTerm, env: &Env, m: &Model) -> Result<SemValue, EvalError> {
    match t {
        SemTerm::Var(x) => env
            .lookup(x)
            .cloned()
            .ok_or_else(|| EvalError::UnboundVariable(x.to_string())),
        SemTerm::Const(c) => constant(c, m),
        SemTerm::Lam(x, body) => Ok(SemValue::Func(Func::Closure {
            params: Params::One(x.clone()),
            body: body.clone(),
            env: env.clone(),
        })),
        SemTerm::PairLam(x, y, body) => Ok(SemValue::Func(Func::Closure {
            params: Params::Two(x.clone(), y.clone()),
            body: body.clone(),
            env: env.clone(),
        })),
        SemTerm::App(f, a) => {
            let fv = eval(f, env, m)?;
            let av = eval(a, env, m)?;
            apply(&fv, av, m)
        }
        SemTerm::MkPair(l, r) => Ok(SemValue::pair(eval(l, env, m)?, eval(r, env, m)?)),
    }
}

fn constant(c: &str, m: &Model) -> Result<SemValue, EvalError> {
    let b = match c {
        "forall" => Builtin::Forall,
        "exists" => Builtin::Exists,
        "and" => Builtin::And,
        "implies" => Builtin::Implies,
        _ if m.preds.contains_key(c) => return Ok(SemValue::Func(Func::Pred(Arc::from(c)))),
        _ if m.rels.contains_key(c) => return Ok(SemValue::Func(Func::Rel(Arc::from(c), Vec::new()))),
        _ => return Err(EvalError::UnknownConstant(c.to_string())),
    };
    Ok(SemValue::Func(Func::Builtin(b, Vec::new())))
}

fn truth(v: &SemValue) -> Result<bool, EvalError> {
    v.as_bool().ok_or_else(|| stuck("a truth value", v))
}

fn entity(v: &SemValue) -> Result<&str, EvalError> {
    match v {
        SemValue::Ent(e) => Ok(e),
        _ => Err(stuck("an entity", v)),
    }
}

pub fn apply(f: &SemValue, arg: SemValue, m: &Model) -> Result<SemValue, EvalError> {
    let SemValue::Func(func) = f else {
        return Err(stuck("a function", f));
    };
    match func {
        Func::Closure { params, body, env } => {
            let env = match params {
                Params::One(x) => env.bind_name(x.clone(), arg),
                Params::Two(x, y) => match arg {
                    SemValue::Pair(l, r) => env
                        .bind_name(x.clone(), (*l).clone())
                        .bind_name(y.clone(), (*r).clone()),
                    other => return Err(stuck("a pair", &other)),
                },
            };
            eval(body, &env, m)
        }
        Func::Table { dom, values } => {
            let i = index_of(&arg, dom, m)?;
            Ok(values[i].clone())
        }
        Func::Pred(p) => {
            let e = entity(&arg)?;
            Ok(SemValue::Truth(m.holds(p, e)))
        }
        Func::Rel(r, args) => {
            if args.is_empty() {
                entity(&arg)?;
                return Ok(SemValue::Func(Func::Rel(r.clone(), vec![arg])));
            }
            let a = entity(&args[0])?;
            let b = entity(&arg)?;
            Ok(SemValue::Truth(m.related(r, a, b)))
        }
        Func::Builtin(b, args) => match b {
            Builtin::Forall | Builtin::Exists => {
                let mut results = m
                    .entities
                    .iter()
                    .map(|e| apply(&arg, SemValue::Ent(e.clone()), m).and_then(|v| truth(&v)));
                let out = if *b == Builtin::Forall {
                    results.try_fold(true, |acc, r| r.map(|x| acc && x))?
                } else {
                    results.try_fold(false, |acc, r| r.map(|x| acc || x))?
                };
                Ok(SemValue::Truth(out))
            }
            Builtin::And | Builtin::Implies => {
                if args.is_empty() {
                    truth(&arg)?;
                    return Ok(SemValue::Func(Func::Builtin(*b, vec![arg])));
                }
                let (p, q) = (truth(&args[0])?, truth(&arg)?);
                Ok(SemValue::Truth(if *b == Builtin::And { p && q } else { !p || q }))
            }
        },
    }
}

/// Number of values of `ty`, if finite and representable.
pub fn count_points(ty: &Ty, m: &Model) -> Option<usize> {
    match ty {
        Ty::Entity => Some(m.entities.len()),
        Ty::Bool => Some(2),
        Ty::Prod(l, r) => count_points(l, m)?.checked_mul(count_points(r, m)?),
        Ty::Arrow(l, r) => {
            let dom = u32::try_from(count_points(l, m)?).ok()?;
            count_points(r, m)?.checked_pow(dom)
        }
        Ty::Answer | Ty::Atom(_) | Ty::Var(_) => None,
    }
}

/// Upper bound on how many values [`points`] is willing to produce.
pub const MAX_POINTS: usize = 1 << 20;

/// All values of `ty` in canonical order.
pub fn points(ty: &Ty, m: &Model) -> Result<Vec<SemValue>, EvalError> {
    let n = count_points(ty, m).ok_or_else(|| size_error(ty))?;
    if n > MAX_POINTS {
        return Err(EvalError::TooLarge(ty.to_string()));
    }
    Ok(match ty {
        Ty::Entity => m.entities.iter().map(|e| SemValue::Ent(e.clone())).collect(),
        Ty::Bool => vec![SemValue::Truth(false), SemValue::Truth(true)],
        Ty::Prod(l, r) => {
            let (ls, rs) = (points(l, m)?, points(r, m)?);
            ls.iter()
                .flat_map(|a| rs.iter().map(move |b| SemValue::pair(a.clone(), b.clone())))
                .collect()
        }
        Ty::Arrow(l, r) => {
            let dom_n = count_points(l, m).unwrap_or(0);
            let cod = points(r, m)?;
            let dom = Arc::new((**l).clone());
            (0..n)
                .map(|mut code| {
                    // Digit i (base |cod|) is the result on the i-th domain point.
                    let values = (0..dom_n)
                        .map(|_| {
                            let v = cod[code % cod.len()].clone();
                            code /= cod.len();
                            v
                        })
                        .collect();
                    SemValue::Func(Func::Table {
                        dom: dom.clone(),
                        values: Arc::new(values),
                    })
                })
                .collect()
        }
        Ty::Answer | Ty::Atom(_) | Ty::Var(_) => unreachable!("count_points rejects these"),
    })
}

fn size_error(ty: &Ty) -> EvalError {
    fn finite(ty: &Ty) -> bool {
        match ty {
            Ty::Entity | Ty::Bool => true,
            Ty::Prod(l, r) | Ty::Arrow(l, r) => finite(l) && finite(r),
            _ => false,
        }
    }
    if finite(ty) {
        EvalError::TooLarge(ty.to_string())
    } else {
        EvalError::NotFinite(ty.to_string())
    }
}

/// Position of `v` in `points(ty)`.
pub fn index_of(v: &SemValue, ty: &Ty, m: &Model) -> Result<usize, EvalError> {
    match ty {
        Ty::Entity => m.entity_index(entity(v)?).ok_or_else(|| stuck("a model entity", v)),
        Ty::Bool => Ok(truth(v)? as usize),
        Ty::Prod(l, r) => match v {
            SemValue::Pair(a, b) => {
                let rn = count_points(r, m).ok_or_else(|| size_error(r))?;
                Ok(index_of(a, l, m)? * rn + index_of(b, r, m)?)
            }
            _ => Err(stuck("a pair", v)),
        },
        Ty::Arrow(l, r) => {
            if let SemValue::Func(Func::Table { values, .. }) = v {
                if let Some(cn) = count_points(r, m) {
                    // Tables built by `points` are in canonical order already.
                    let mut code = 0usize;
                    for x in values.iter().rev() {
                        code = code * cn + index_of(x, r, m)?;
                    }
                    return Ok(code);
                }
            }
            let cn = count_points(r, m).ok_or_else(|| size_error(r))?;
            let dom = points(l, m)?;
            let mut code = 0usize;
            for x in dom.iter().rev() {
                let y = apply(v, x.clone(), m)?;
                code = code
                    .checked_mul(cn)
                    .and_then(|c| c.checked_add(index_of(&y, r, m).ok()?))
                    .ok_or_else(|| EvalError::TooLarge(ty.to_string()))?;
            }
            Ok(code)
        }
        Ty::Answer | Ty::Atom(_) | Ty::Var(_) => Err(EvalError::NotFinite(ty.to_string())),
    }
}

/// Extensional equality at type `ty`.
pub fn ext_eq(a: &SemValue, b: &SemValue, ty: &Ty, m: &Model) -> Result<bool, EvalError> {
    match ty {
        Ty::Arrow(l, r) => {
            for x in points(l, m)? {
                let (fa, fb) = (apply(a, x.clone(), m)?, apply(b, x, m)?);
                if !ext_eq(&fa, &fb, r, m)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Ty::Prod(l, r) => match (a, b) {
            (SemValue::Pair(a1, a2), SemValue::Pair(b1, b2)) => Ok(ext_eq(a1, b1, l, m)? && ext_eq(a2, b2, r, m)?),
            _ => Err(stuck("pairs", a)),
        },
        _ => Ok(index_of(a, ty, m)? == index_of(b, ty, m)?),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexEntry {
    pub formula: Formula,
    pub term: SemTerm,
}

/// Words with their syntactic types and semantic terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Lexicon {
    pub entries: BTreeMap<String, LexEntry>,
}

impl Lexicon {
    pub fn new() -> Lexicon {
        Lexicon::default()
    }

    pub fn insert(&mut self, word: &str, formula: Formula, term: SemTerm) {
        self.entries.insert(word.to_string(), LexEntry { formula, term });
    }

    pub fn get(&self, word: &str) -> Option<&LexEntry> {
        self.entries.get(word)
    }

    /// Type-checks every entry against its translated type.
    pub fn check(&self, sig: &Signature) -> Result<(), DenoteError> {
        for (word, e) in &self.entries {
            let ty = sig
                .interpret(&crate::cps::translate_type(&e.formula))
                .ok_or_else(|| DenoteError::UninterpretedAtom(e.formula.to_string()))?;
            type_check(&e.term, &ty, sig).map_err(|source| DenoteError::IllTypedEntry {
                word: word.clone(),
                source,
            })?;
        }
        Ok(())
    }

    fn lookup(&self, word: &str) -> Result<&LexEntry, DenoteError> {
        self.get(word)
            .ok_or_else(|| DenoteError::WordNotInLexicon(word.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DenoteError {
    #[error("word {0:?} is not in the lexicon")]
    WordNotInLexicon(String),
    #[error("empty sentence")]
    EmptySentence,
    #[error("derivation concludes {found}, expected antecedent {expected}")]
    JudgementMismatch { expected: Formula, found: Judgement },
    #[error("no model interpretation for {0}")]
    UninterpretedAtom(String),
    #[error("lexical entry {word:?} is ill-typed: {source}")]
    IllTypedEntry { word: String, source: TypeError },
    #[error(transparent)]
    Schema(#[from] SchemaMismatch),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("the sentence does not denote a truth value")]
    NotATruthValue,
}

fn nest<T: Clone>(items: &[T], pair: impl Fn(T, T) -> T + Copy) -> T {
    match items {
        [x] => x.clone(),
        [x, rest @ ..] => pair(x.clone(), nest(rest, pair)),
        [] => unreachable!("nonempty"),
    }
}

/// `w₁ ⊗ (w₂ ⊗ (… ⊗ wₙ)) ⊢ goal`
pub fn sentence_judgement(lex: &Lexicon, words: &[&str], goal: &Formula) -> Result<Judgement, DenoteError> {
    if words.is_empty() {
        return Err(DenoteError::EmptySentence);
    }
    let types = words
        .iter()
        .map(|w| lex.lookup(w).map(|e| e.formula.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Judgement::new(nest(&types, Formula::prod), goal.clone()))
}

/// `R(d) (w₁, (w₂, …)) (λv. v)` evaluated in `m`.
pub fn denote(d: &Derivation, lex: &Lexicon, words: &[&str], m: &Model) -> Result<bool, DenoteError> {
    let j = d.infer()?;
    let expected = sentence_judgement(lex, words, &j.rhs)?;
    if expected != j {
        return Err(DenoteError::JudgementMismatch {
            expected: expected.lhs,
            found: j,
        });
    }
    let terms = words
        .iter()
        .map(|w| lex.lookup(w).map(|e| e.term.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let input = nest(&terms, SemTerm::pair);
    let id = SemTerm::lam("v", SemTerm::var("v"));
    let t = SemTerm::app2(translate_r(d), input, id);
    eval(&t, &Env::empty(), m)?.as_bool().ok_or(DenoteError::NotATruthValue)
}
