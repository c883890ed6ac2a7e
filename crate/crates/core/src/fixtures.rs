//! The quantifier-scope example: lexical types, the two scope witnesses and
//! the accompanying lexicon and model.

use crate::cps::SemTerm;
use crate::derivation::{ax_general, Derivation, RuleTag};
use crate::formula::{Formula, Judgement};
use crate::semantics::{Lexicon, Model};

pub fn np() -> Formula {
    Formula::el("np")
}

pub fn n() -> Formula {
    Formula::el("n")
}

pub fn s() -> Formula {
    Formula::el("s")
}

/// `(np ⇐ n) ⊗ n`, the type of a quantified noun phrase.
pub fn quantifier() -> Formula {
    Formula::prod(Formula::imp_l(np(), n()), n())
}

/// `(np ⇒ s) ⇐ np`, the type of a transitive verb.
pub fn transitive_verb() -> Formula {
    Formula::imp_l(Formula::imp_r(np(), s()), np())
}

/// `Q ⊗ (TV ⊗ Q) ⊢ s` for "someone loves everyone".
pub fn sentence_judgement() -> Judgement {
    Judgement::new(
        Formula::prod(quantifier(), Formula::prod(transitive_verb(), quantifier())),
        s(),
    )
}

fn r(tag: RuleTag, d: Derivation) -> Derivation {
    Derivation::unary(tag, d)
}

fn m(tag: RuleTag, l: Derivation, rr: Derivation) -> Derivation {
    Derivation::binary(tag, l, rr)
}

/// `(np ⇐ n) ⊗ n ⊢ np`
fn lower() -> Derivation {
    r(RuleTag::RImpLProd, ax_general(&Formula::imp_l(np(), n())))
}

/// Object wide scope: everyone takes scope over someone.
pub fn sent0() -> Derivation {
    use RuleTag::*;
    r(
        RImpRProd,
        r(RImpLProd, m(MImpL, m(MImpR, lower(), Derivation::ax("s")), lower())),
    )
}

/// Subject wide scope: someone takes scope over everyone.
pub fn sent1() -> Derivation {
    use RuleTag::*;
    let tv = m(MImpL, ax_general(&Formula::imp_r(np(), s())), lower());
    r(
        RImpLProd,
        r(
            RImpLProd,
            m(MImpL, r(RProdImpL, r(RImpRProd, r(RImpLProd, tv))), Derivation::ax("n")),
        ),
    )
}

fn quantifier_term(quant: &str, conn: &str) -> SemTerm {
    let (v, c) = (SemTerm::var, SemTerm::konst);
    let body = SemTerm::app2(c(conn), SemTerm::app(v("f"), v("x")), SemTerm::app(v("g"), v("x")));
    SemTerm::pair(
        SemTerm::pair_lam("g", "f", SemTerm::app(c(quant), SemTerm::lam("x", body))),
        c("person"),
    )
}

/// `someone`, `everyone` and `loves`.
pub fn lexicon() -> Lexicon {
    let v = SemTerm::var;
    let mut lex = Lexicon::new();
    lex.insert("someone", quantifier(), quantifier_term("exists", "and"));
    lex.insert("everyone", quantifier(), quantifier_term("forall", "implies"));
    let loves = SemTerm::pair_lam(
        "k",
        "y",
        SemTerm::app(
            v("k"),
            SemTerm::pair_lam(
                "x",
                "k2",
                SemTerm::app(v("k2"), SemTerm::app2(SemTerm::konst("loves"), v("x"), v("y"))),
            ),
        ),
    );
    lex.insert("loves", transitive_verb(), loves);
    lex
}

pub const SENTENCE: [&str; 3] = ["someone", "loves", "everyone"];

/// Two people, each loving only themselves.
pub fn diagonal_model() -> Model {
    Model::new(&["e1", "e2"])
        .and_then(|m| m.with_pred("person", &["e1", "e2"]))
        .and_then(|m| m.with_rel("loves", &[("e1", "e1"), ("e2", "e2")]))
        .expect("well-formed model")
}
