//! Seeded corpus of small derivations and composable cut pairs.

use lgcalc::cps::{translate_type, SemType};
use lgcalc::semantics::{count_points, Model};
use lgcalc::{enumerate, Connective, Derivation, Formula, Judgement, SearchOptions};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const ATOMS: [&str; 3] = ["np", "s", "n"];

const PAIRS_PER_CUT_FORMULA: usize = 40;
const SMALL_PAIRS_PER_CUT_FORMULA: usize = 8;

pub struct Pair {
    pub f: Derivation,
    pub g: Derivation,
    pub cut_formula: Formula,
}

pub struct Corpus {
    pub derivations: Vec<(Judgement, Derivation)>,
    pub pairs: Vec<Pair>,
    /// Pairs whose outer types have at most `POINT_BUDGET` points over the
    /// two-entity model.
    pub small_pairs: Vec<Pair>,
}

pub const POINT_BUDGET: usize = 1 << 12;

pub fn two_entities() -> Model {
    Model::new(&["e1", "e2"]).expect("two entities")
}

/// Number of `(x, k)` points for a derivation of `a ⊢ c`: values of `⌈a⌉`
/// times continuations of `⌈c⌉`.
pub fn point_count(a: &Formula, c: &Formula, m: &Model) -> Option<usize> {
    let sig = m.signature();
    let ta = sig.interpret(&translate_type(a))?;
    let tk = sig.interpret(&SemType::neg(translate_type(c)))?;
    count_points(&ta, m)?.checked_mul(count_points(&tk, m)?)
}

/// Formulas of depth at most one over `atoms`.
pub fn shallow_formulas(atoms: &[&str]) -> Vec<Formula> {
    let base: Vec<Formula> = atoms.iter().map(|a| Formula::el(a)).collect();
    let mut out = base.clone();
    for c in Connective::ALL {
        for l in &base {
            for r in &base {
                out.push(Formula::bin(c, l.clone(), r.clone()));
            }
        }
    }
    out
}

/// Formulas of depth at most two over `atoms`.
pub fn formulas_to_depth_two(atoms: &[&str]) -> Vec<Formula> {
    let inner = shallow_formulas(atoms);
    let mut out = inner.clone();
    for c in Connective::ALL {
        for l in &inner {
            for r in &inner {
                if l.depth() == 1 || r.depth() == 1 {
                    out.push(Formula::bin(c, l.clone(), r.clone()));
                }
            }
        }
    }
    out
}

/// Cut formulas: two atoms plus, per connective, two depth-one and a
/// depth-two instance.
pub fn cut_formulas() -> Vec<Formula> {
    let (np, s) = (Formula::el("np"), Formula::el("s"));
    let mut out = vec![np.clone(), s.clone()];
    for c in Connective::ALL {
        out.push(Formula::bin(c, np.clone(), s.clone()));
        out.push(Formula::bin(c, s.clone(), np.clone()));
        out.push(Formula::bin(
            c,
            Formula::bin(Connective::ImpL, np.clone(), s.clone()),
            s.clone(),
        ));
    }
    out
}

pub fn build(seed: u64, per_judgement: usize) -> Corpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = two_entities();
    let pool = formulas_to_depth_two(&ATOMS[..2]);
    let opts = SearchOptions::first(per_judgement);
    let mut derivations = Vec::new();
    let mut pairs = Vec::new();
    let mut small_pairs = Vec::new();
    for b in cut_formulas() {
        let mut lefts = Vec::new();
        let mut rights = Vec::new();
        for x in pool.iter().chain(std::iter::once(&b)) {
            let jl = Judgement::new(x.clone(), b.clone());
            for d in enumerate(&jl, opts) {
                lefts.push(d.clone());
                derivations.push((jl.clone(), d));
            }
            let jr = Judgement::new(b.clone(), x.clone());
            for d in enumerate(&jr, opts) {
                rights.push(d.clone());
                derivations.push((jr.clone(), d));
            }
        }
        let mut all: Vec<(usize, usize)> = (0..lefts.len())
            .flat_map(|i| (0..rights.len()).map(move |j| (i, j)))
            .collect();
        all.shuffle(&mut rng);
        let pair = |(i, j): (usize, usize)| Pair {
            f: lefts[i].clone(),
            g: rights[j].clone(),
            cut_formula: b.clone(),
        };
        pairs.extend(all.iter().take(PAIRS_PER_CUT_FORMULA).copied().map(pair));
        let small = all.iter().copied().filter(|&(i, j)| {
            let a = &lefts[i].infer().expect("enumerated").lhs;
            let c = &rights[j].infer().expect("enumerated").rhs;
            point_count(a, c, &m).is_some_and(|n| n <= POINT_BUDGET)
        });
        small_pairs.extend(small.take(SMALL_PAIRS_PER_CUT_FORMULA).map(pair));
    }
    Corpus {
        derivations,
        pairs,
        small_pairs,
    }
}
