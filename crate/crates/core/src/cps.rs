//! Call-by-value CPS translation of formulas and derivations.
//!
//! Formulas translate to [`SemType`]s over an abstract answer type, written
//! `¬ τ` for `τ → R`. A derivation `d` of `A ⊢ B` gives two closed terms,
//! `R(d) : ⌈A⌉ → ¬¬⌈B⌉` and `L(d) : ¬⌈B⌉ → ¬⌈A⌉`, sharing one body per rule:
//! `R(d) = λx.λk.body` and `L(d) = λk.λx.body`.

use std::fmt;
use std::sync::Arc;

use crate::derivation::{Derivation, RuleTag};
use crate::formula::{Atom, Formula};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SemType {
    AtomDen(Atom),
    Pair(Box<SemType>, Box<SemType>),
    Neg(Box<SemType>),
}

impl SemType {
    pub fn pair(l: SemType, r: SemType) -> SemType {
        SemType::Pair(Box::new(l), Box::new(r))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: SemType) -> SemType {
        SemType::Neg(Box::new(t))
    }
}

impl fmt::Display for SemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemType::AtomDen(a) => write!(f, "{a}"),
            SemType::Pair(l, r) => write!(f, "({l} × {r})"),
            SemType::Neg(t) => write!(f, "¬ {t}"),
        }
    }
}

pub fn translate_type(a: &Formula) -> SemType {
    use crate::formula::Connective::*;
    match a {
        Formula::El(x) => SemType::AtomDen(x.clone()),
        Formula::Bin(c, l, r) => {
            let (l, r) = (translate_type(l), translate_type(r));
            match c {
                Prod => SemType::pair(l, r),
                ImpR => SemType::neg(SemType::pair(l, SemType::neg(r))),
                ImpL => SemType::neg(SemType::pair(SemType::neg(l), r)),
                Sum => SemType::neg(SemType::pair(SemType::neg(l), SemType::neg(r))),
                DiffL => SemType::pair(l, SemType::neg(r)),
                DiffR => SemType::pair(SemType::neg(l), r),
            }
        }
    }
}

pub type Name = Arc<str>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SemTerm {
    Var(Name),
    Lam(Name, Arc<SemTerm>),
    /// `λ(x, y). body`
    PairLam(Name, Name, Arc<SemTerm>),
    App(Arc<SemTerm>, Arc<SemTerm>),
    MkPair(Arc<SemTerm>, Arc<SemTerm>),
    Const(Name),
}

impl SemTerm {
    pub fn var(x: &str) -> SemTerm {
        SemTerm::Var(Arc::from(x))
    }

    pub fn konst(x: &str) -> SemTerm {
        SemTerm::Const(Arc::from(x))
    }

    pub fn lam(x: &str, body: SemTerm) -> SemTerm {
        SemTerm::Lam(Arc::from(x), Arc::new(body))
    }

    pub fn pair_lam(x: &str, y: &str, body: SemTerm) -> SemTerm {
        SemTerm::PairLam(Arc::from(x), Arc::from(y), Arc::new(body))
    }

    pub fn app(f: SemTerm, a: SemTerm) -> SemTerm {
        SemTerm::App(Arc::new(f), Arc::new(a))
    }

    pub fn app2(f: SemTerm, a: SemTerm, b: SemTerm) -> SemTerm {
        SemTerm::app(SemTerm::app(f, a), b)
    }

    pub fn pair(l: SemTerm, r: SemTerm) -> SemTerm {
        SemTerm::MkPair(Arc::new(l), Arc::new(r))
    }

    /// Immediate subterms, in the order used for error paths.
    pub fn children(&self) -> Vec<&SemTerm> {
        match self {
            SemTerm::Var(_) | SemTerm::Const(_) => vec![],
            SemTerm::Lam(_, b) | SemTerm::PairLam(_, _, b) => vec![b],
            SemTerm::App(f, a) => vec![f, a],
            SemTerm::MkPair(l, r) => vec![l, r],
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(SemTerm::size).sum::<usize>()
    }

    pub fn contains_const(&self) -> bool {
        matches!(self, SemTerm::Const(_)) || self.children().into_iter().any(SemTerm::contains_const)
    }

    /// Free variables, each listed once, in order of first occurrence.
    pub fn free_vars(&self) -> Vec<Name> {
        fn go(t: &SemTerm, bound: &mut Vec<Name>, out: &mut Vec<Name>) {
            match t {
                SemTerm::Var(x) => {
                    if !bound.contains(x) && !out.contains(x) {
                        out.push(x.clone());
                    }
                }
                SemTerm::Const(_) => {}
                SemTerm::Lam(x, b) => {
                    bound.push(x.clone());
                    go(b, bound, out);
                    bound.pop();
                }
                SemTerm::PairLam(x, y, b) => {
                    bound.push(x.clone());
                    bound.push(y.clone());
                    go(b, bound, out);
                    bound.truncate(bound.len() - 2);
                }
                SemTerm::App(l, r) | SemTerm::MkPair(l, r) => {
                    go(l, bound, out);
                    go(r, bound, out);
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }
}

/// Binder of the value argument in a clause.
enum Binder {
    One(&'static str),
    Two(&'static str, &'static str),
}

fn bind(binder: &Binder, body: SemTerm) -> SemTerm {
    match binder {
        Binder::One(x) => SemTerm::lam(x, body),
        Binder::Two(x, y) => SemTerm::pair_lam(x, y, body),
    }
}

/// `R(d) : ⌈A⌉ → ¬¬⌈B⌉` for `d : A ⊢ B`.
pub fn translate_r(d: &Derivation) -> SemTerm {
    let (binder, body) = clause(d);
    bind(&binder, SemTerm::lam("k", body))
}

/// `L(d) : ¬⌈B⌉ → ¬⌈A⌉` for `d : A ⊢ B`.
pub fn translate_l(d: &Derivation) -> SemTerm {
    let (binder, body) = clause(d);
    SemTerm::lam("k", bind(&binder, body))
}

fn v(x: &str) -> SemTerm {
    SemTerm::var(x)
}

/// `R(d) x k`
fn run_r(d: &Derivation, x: SemTerm, k: SemTerm) -> SemTerm {
    SemTerm::app2(translate_r(d), x, k)
}

/// `L(d) k x`
fn run_l(d: &Derivation, k: SemTerm, x: SemTerm) -> SemTerm {
    SemTerm::app2(translate_l(d), k, x)
}

/// `L(d) k`, a continuation for the antecedent of `d`.
fn cont(d: &Derivation, k: SemTerm) -> SemTerm {
    SemTerm::app(translate_l(d), k)
}

/// `λh. h (x, y)`
fn give(x: SemTerm, y: SemTerm) -> SemTerm {
    SemTerm::lam("h", SemTerm::app(v("h"), SemTerm::pair(x, y)))
}

/// The value binder and body of the clause for the last rule of `d`, with the
/// continuation bound to `k`.
fn clause(d: &Derivation) -> (Binder, SemTerm) {
    use Binder::{One, Two};
    use RuleTag::*;
    let ps = d.premises();
    let p = |i: usize| ps[i];
    let pr = |x: &str, y: &str| SemTerm::pair(v(x), v(y));
    match d.tag() {
        Ax => (One("x"), SemTerm::app(v("k"), v("x"))),
        // (a, b) ↦ R(d) b (λh. h (a, k))
        RImpRProd => (Two("a", "b"), run_r(p(0), v("b"), give(v("a"), v("k")))),
        // b ↦ k (λ(a, c). R(d) (a, b) c)
        RProdImpR => (
            One("b"),
            SemTerm::app(v("k"), SemTerm::pair_lam("a", "c", run_r(p(0), pr("a", "b"), v("c")))),
        ),
        // (a, b) ↦ R(d) a (λh. h (k, b))
        RImpLProd => (Two("a", "b"), run_r(p(0), v("a"), give(v("k"), v("b")))),
        // a ↦ k (λ(c, b). R(d) (a, b) c)
        RProdImpL => (
            One("a"),
            SemTerm::app(v("k"), SemTerm::pair_lam("c", "b", run_r(p(0), pr("a", "b"), v("c")))),
        ),
        // (a, c) ↦ R(d₁) a (λb. R(d₂) c (λd. k (b, d)))
        MProd => (
            Two("a", "c"),
            run_r(
                p(0),
                v("a"),
                SemTerm::lam(
                    "b",
                    run_r(p(1), v("c"), SemTerm::lam("d", SemTerm::app(v("k"), pr("b", "d")))),
                ),
            ),
        ),
        // h ↦ k (λ(a, kd). R(d₁) a (λb. h (b, L(d₂) kd)))
        MImpR => (
            One("h"),
            SemTerm::app(
                v("k"),
                SemTerm::pair_lam(
                    "a",
                    "kd",
                    run_r(
                        p(0),
                        v("a"),
                        SemTerm::lam("b", SemTerm::app(v("h"), SemTerm::pair(v("b"), cont(p(1), v("kd"))))),
                    ),
                ),
            ),
        ),
        // h ↦ k (λ(kb, c). R(d₂) c (λd. h (L(d₁) kb, d)))
        MImpL => (
            One("h"),
            SemTerm::app(
                v("k"),
                SemTerm::pair_lam(
                    "kb",
                    "c",
                    run_r(
                        p(1),
                        v("c"),
                        SemTerm::lam("d", SemTerm::app(v("h"), SemTerm::pair(cont(p(0), v("kb")), v("d")))),
                    ),
                ),
            ),
        ),
        // c ↦ k (λ(kb, ka). L(d) ka (kb, c))
        RDiffRSum => (
            One("c"),
            SemTerm::app(
                v("k"),
                SemTerm::pair_lam("kb", "ka", run_l(p(0), v("ka"), pr("kb", "c"))),
            ),
        ),
        // (kb, c) ↦ L(d) (λh. h (kb, k)) c
        RSumDiffR => (Two("kb", "c"), run_l(p(0), give(v("kb"), v("k")), v("c"))),
        // (c, ka) ↦ L(d) (λh. h (k, ka)) c
        RSumDiffL => (Two("c", "ka"), run_l(p(0), give(v("k"), v("ka")), v("c"))),
        // c ↦ k (λ(kb, ka). L(d) kb (c, ka))
        RDiffLSum => (
            One("c"),
            SemTerm::app(
                v("k"),
                SemTerm::pair_lam("kb", "ka", run_l(p(0), v("kb"), pr("c", "ka"))),
            ),
        ),
        // h ↦ k (λ(kb, kd). h (L(d₁) kb, L(d₂) kd))
        MSum => (
            One("h"),
            SemTerm::app(
                v("k"),
                SemTerm::pair_lam(
                    "kb",
                    "kd",
                    SemTerm::app(v("h"), SemTerm::pair(cont(p(0), v("kb")), cont(p(1), v("kd")))),
                ),
            ),
        ),
        // (kd, a) ↦ R(d₂) a (λb. k (L(d₁) kd, b))
        MDiffR => (
            Two("kd", "a"),
            run_r(
                p(1),
                v("a"),
                SemTerm::lam("b", SemTerm::app(v("k"), SemTerm::pair(cont(p(0), v("kd")), v("b")))),
            ),
        ),
        // (a, kd) ↦ R(d₁) a (λb. k (b, L(d₂) kd))
        MDiffL => (
            Two("a", "kd"),
            run_r(
                p(0),
                v("a"),
                SemTerm::lam("b", SemTerm::app(v("k"), SemTerm::pair(v("b"), cont(p(1), v("kd"))))),
            ),
        ),
        // (kc, a) ↦ k (λ(kd, b). R(d) (a, b) (λh. h (kc, kd)))
        DDiffRImpL => (Two("kc", "a"), grishin(p(0), "kd", "b")),
        // (kc, b) ↦ k (λ(a, kd). R(d) (a, b) (λh. h (kc, kd)))
        DDiffRImpR => (Two("kc", "b"), grishin(p(0), "a", "kd")),
        // (b, kd) ↦ k (λ(a, kc). R(d) (a, b) (λh. h (kc, kd)))
        DDiffLImpR => (Two("b", "kd"), grishin(p(0), "a", "kc")),
        // (a, kd) ↦ k (λ(kc, b). R(d) (a, b) (λh. h (kc, kd)))
        DDiffLImpL => (Two("a", "kd"), grishin(p(0), "kc", "b")),
    }
}

fn grishin(d: &Derivation, x: &str, y: &str) -> SemTerm {
    SemTerm::app(
        v("k"),
        SemTerm::pair_lam(x, y, run_r(d, SemTerm::pair(v("a"), v("b")), give(v("kc"), v("kd")))),
    )
}

impl fmt::Display for SemTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render_term(self))
    }
}
