#![allow(dead_code)]

use lgcalc::cps::SemTerm;
use lgcalc::{Connective, Derivation, Formula, RuleTag};
use proptest::prelude::*;

pub const ATOMS: [&str; 4] = ["np", "s", "n", "a'"];

pub fn connective() -> impl Strategy<Value = Connective> {
    prop::sample::select(Connective::ALL.to_vec())
}

pub fn atom() -> impl Strategy<Value = Formula> {
    prop::sample::select(ATOMS.to_vec()).prop_map(Formula::el)
}

/// Formulas of depth at most `depth`.
pub fn formula(depth: u32) -> impl Strategy<Value = Formula> {
    atom().prop_recursive(depth, 64, 2, |inner| {
        (connective(), inner.clone(), inner).prop_map(|(c, l, r)| Formula::bin(c, l, r))
    })
}

/// Trees of rule applications with correct arities, not necessarily
/// schema-valid.
pub fn raw_derivation() -> impl Strategy<Value = Derivation> {
    let unary: Vec<RuleTag> = RuleTag::ALL.into_iter().filter(|t| t.arity() == 1).collect();
    let binary: Vec<RuleTag> = RuleTag::ALL.into_iter().filter(|t| t.arity() == 2).collect();
    let leaf = prop::sample::select(ATOMS.to_vec()).prop_map(Derivation::ax);
    leaf.prop_recursive(6, 48, 2, move |inner| {
        prop_oneof![
            (prop::sample::select(unary.clone()), inner.clone()).prop_map(|(t, d)| Derivation::unary(t, d)),
            (prop::sample::select(binary.clone()), inner.clone(), inner)
                .prop_map(|(t, l, r)| Derivation::binary(t, l, r)),
        ]
    })
}

const NAMES: [&str; 4] = ["x", "y", "k", "f"];

fn closed_term_in(scope: Vec<&'static str>, depth: u32) -> BoxedStrategy<SemTerm> {
    let mut leaves: Vec<SemTerm> = ["c", "person", "loves"].into_iter().map(SemTerm::konst).collect();
    leaves.extend(scope.iter().map(|x| SemTerm::var(x)));
    let leaf = prop::sample::select(leaves).boxed();
    if depth == 0 {
        return leaf;
    }
    let sub = closed_term_in(scope.clone(), depth - 1);
    let scope2 = scope.clone();
    let lam = prop::sample::select(NAMES.to_vec())
        .prop_flat_map(move |x| {
            let mut s = scope2.clone();
            s.push(x);
            closed_term_in(s, depth - 1).prop_map(move |b| SemTerm::lam(x, b))
        })
        .boxed();
    let pair_lam = (
        prop::sample::select(NAMES.to_vec()),
        prop::sample::select(NAMES.to_vec()),
    )
        .prop_filter("distinct binders", |(x, y)| x != y)
        .prop_flat_map(move |(x, y)| {
            let mut s = scope.clone();
            s.extend([x, y]);
            closed_term_in(s, depth - 1).prop_map(move |b| SemTerm::pair_lam(x, y, b))
        })
        .boxed();
    prop_oneof![
        2 => leaf,
        1 => lam,
        1 => pair_lam,
        2 => (sub.clone(), sub.clone()).prop_map(|(f, a)| SemTerm::app(f, a)),
        1 => (sub.clone(), sub).prop_map(|(l, r)| SemTerm::pair(l, r)),
    ]
    .boxed()
}

/// Closed terms whose constants never clash with bound variable names.
pub fn closed_term() -> BoxedStrategy<SemTerm> {
    closed_term_in(Vec::new(), 4)
}

use lgcalc::{enumerate, Dir, Judgement, SearchOptions, Side};

/// Atoms and one-connective formulas over `np` and `s`.
pub fn shallow_formulas() -> Vec<Formula> {
    let base = [Formula::el("np"), Formula::el("s")];
    let mut out = base.to_vec();
    for c in Connective::ALL {
        for l in &base {
            for r in &base {
                out.push(Formula::bin(c, l.clone(), r.clone()));
            }
        }
    }
    out
}

/// Up to three derivations of each provable judgement over
/// [`shallow_formulas`], plus identities and applications built from them.
pub fn small_corpus() -> Vec<(Judgement, Derivation)> {
    use lgcalc::derivation::{appl_diff_l, appl_diff_r, appl_imp_l, appl_imp_r};
    let pool = shallow_formulas();
    let mut out = Vec::new();
    for a in &pool {
        for b in &pool {
            for d in [appl_imp_r(a, b), appl_imp_l(a, b), appl_diff_r(a, b), appl_diff_l(a, b)] {
                out.push((d.infer().expect("application"), d));
            }
        }
    }
    for l in &pool {
        for r in &pool {
            let j = Judgement::new(l.clone(), r.clone());
            for d in enumerate(&j, SearchOptions::first(3)) {
                out.push((j.clone(), d));
            }
        }
    }
    out
}

/// Every subformula position of `f` as a path from the root.
pub fn positions(f: &Formula) -> Vec<Vec<Dir>> {
    let mut out = vec![Vec::new()];
    if let Some((_, l, r)) = f.as_bin() {
        out.extend(positions(l).into_iter().map(|mut p| {
            p.insert(0, Dir::Left);
            p
        }));
        out.extend(positions(r).into_iter().map(|mut p| {
            p.insert(0, Dir::Right);
            p
        }));
    }
    out
}

pub fn judgement_positions(j: &Judgement) -> Vec<(Side, Vec<Dir>)> {
    let mut out: Vec<(Side, Vec<Dir>)> = positions(&j.lhs).into_iter().map(|p| (Side::Antecedent, p)).collect();
    out.extend(positions(&j.rhs).into_iter().map(|p| (Side::Succedent, p)));
    out
}

pub fn subformula<'a>(f: &'a Formula, path: &[Dir]) -> &'a Formula {
    path.iter().fold(f, |g, d| {
        let (_, l, r) = g.as_bin().expect("path stays inside the formula");
        match d {
            Dir::Left => l,
            Dir::Right => r,
        }
    })
}
