//! Acceptance suite. Prints one line per criterion and fails if any does.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use common::corpus::{self, Corpus, Pair};
use lgcalc::cps::{translate_l, translate_r, translate_type, SemTerm, SemType};
use lgcalc::derivation::{appl_diff_l, appl_diff_r, appl_imp_l, appl_imp_r};
use lgcalc::fixtures::{self, sent0, sent1};
use lgcalc::origin::required_polarity;
use lgcalc::semantics::{apply, count_points, denote, eval, points, Env, Model};
use lgcalc::text::{parse_derivation, parse_formula, parse_judgement, render_derivation};
use lgcalc::typecheck::{type_check, Signature};
use lgcalc::{
    ax_general, cut, cut_with_stats, enumerate, find_origin, Connective, Derivation, Formula, Judgement,
    JudgementContext, MainConnective, Notation, RuleTag, SearchOptions, Side,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 7;
const PROOFS_PER_JUDGEMENT: usize = 3;

const SENTENCE: &str = "((np <= n) * n) * (((np => s) <= np) * ((np <= n) * n)) |- s";
const EXPECTED_PROOFS: usize = 7;
const SEARCH_LIMIT: Duration = Duration::from_secs(60);

const RANDOM_MODELS: usize = 60;
const MAX_ENTITIES: usize = 4;
const READINGS_LIMIT: Duration = Duration::from_secs(10);

const MIN_CUT_PAIRS: usize = 200;
const CUT_LIMIT: Duration = Duration::from_secs(30);

const REPLACEMENTS: usize = 20;
const POINT_BUDGET: usize = corpus::POINT_BUDGET;
const SEMANTIC_CUT_PAIRS: usize = 25;

const IDENTITY_SAMPLES: usize = 100;
const IDENTITY_DEPTH: u32 = 6;
const ROUND_TRIPS: usize = 500;

type Outcome = Result<String, String>;

fn main() {
    let corpus = corpus::build(SEED, PROOFS_PER_JUDGEMENT);
    let battery = model_battery();
    let criteria: [(&str, &dyn Fn() -> Outcome); 9] = [
        ("seven proofs", &seven_proofs),
        ("two readings", &|| two_readings(&battery)),
        ("reading classification", &|| reading_classification(&battery)),
        ("cut admissibility", &|| cut_admissibility(&corpus)),
        ("origin reconstruction", &|| origin_reconstruction(&corpus)),
        ("CPS typing and duality", &|| cps_typing_and_duality(&corpus)),
        ("cut preserves meaning", &|| cut_preserves_meaning(&corpus)),
        ("identities and applications", &identities_and_applications),
        ("format round trips", &format_round_trips),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail} [{took:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {detail} [{took:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lg(args: &[&str]) -> Result<std::process::Output, String> {
    Command::new(env!("CARGO_BIN_EXE_lg"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .map_err(|e| format!("cannot run lg: {e}"))
}

// 1

fn seven_proofs() -> Outcome {
    let start = Instant::now();
    let out = lg(&["prove", SENTENCE, "--all"])?;
    let took = start.elapsed();
    ensure(out.status.success(), || format!("prove exited with {}", out.status))?;
    let stdout = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let proofs = stdout
        .lines()
        .map(parse_derivation)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let j = parse_judgement(SENTENCE).map_err(|e| e.to_string())?;
    ensure(proofs.len() == EXPECTED_PROOFS, || {
        format!(
            "exhaustive loop-free search found {} proofs, expected {EXPECTED_PROOFS}",
            proofs.len()
        )
    })?;
    for (i, d) in proofs.iter().enumerate() {
        ensure(d.infer().as_ref() == Ok(&j), || {
            format!("proof {i} does not conclude the sentence")
        })?;
        ensure(!proofs[..i].contains(d), || format!("proof {i} repeats an earlier one"))?;
    }
    ensure(proofs.contains(&sent0()), || "SENT0 missing".into())?;
    ensure(proofs.contains(&sent1()), || "SENT1 missing".into())?;
    ensure(took < SEARCH_LIMIT, || format!("search took {took:.2?}"))?;
    Ok(format!(
        "{} distinct proofs including SENT0 and SENT1 in {took:.2?}",
        proofs.len()
    ))
}

// 2, 3

fn random_model(rng: &mut ChaCha8Rng) -> Model {
    let n = rng.gen_range(1..=MAX_ENTITIES);
    let names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let people: Vec<&str> = refs.iter().copied().filter(|_| rng.gen_bool(0.7)).collect();
    let mut loves = Vec::new();
    for a in &refs {
        for b in &refs {
            if rng.gen_bool(0.5) {
                loves.push((*a, *b));
            }
        }
    }
    Model::new(&refs)
        .and_then(|m| m.with_pred("person", &people))
        .and_then(|m| m.with_rel("loves", &loves))
        .expect("well-formed random model")
}

/// The two-entity diagonal model followed by seeded random models.
fn model_battery() -> Vec<Model> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    std::iter::once(fixtures::diagonal_model())
        .chain((0..RANDOM_MODELS).map(|_| random_model(&mut rng)))
        .collect()
}

/// Every person is loved by some person.
fn inverse_scope(m: &Model) -> bool {
    let es = m.entities();
    es.iter()
        .all(|y| !m.holds("person", y) || es.iter().any(|x| m.holds("person", x) && m.related("loves", x, y)))
}

/// Some person loves every person.
fn surface_scope(m: &Model) -> bool {
    let es = m.entities();
    es.iter()
        .any(|x| m.holds("person", x) && es.iter().all(|y| !m.holds("person", y) || m.related("loves", x, y)))
}

fn denotations(d: &Derivation, battery: &[Model]) -> Result<Vec<bool>, String> {
    let lex = fixtures::lexicon();
    battery
        .iter()
        .map(|m| denote(d, &lex, &fixtures::SENTENCE, m).map_err(|e| e.to_string()))
        .collect()
}

fn two_readings(battery: &[Model]) -> Outcome {
    let start = Instant::now();
    let lex = fixtures::lexicon();
    let m2 = &battery[0];
    let d0 = denote(&sent0(), &lex, &fixtures::SENTENCE, m2).map_err(|e| e.to_string())?;
    let d1 = denote(&sent1(), &lex, &fixtures::SENTENCE, m2).map_err(|e| e.to_string())?;
    ensure(d0 && !d1, || {
        format!("on M2 SENT0 = {d0}, SENT1 = {d1}; expected true, false")
    })?;
    let (v0, v1) = (denotations(&sent0(), battery)?, denotations(&sent1(), battery)?);
    for (i, m) in battery.iter().enumerate() {
        ensure(v0[i] == inverse_scope(m), || {
            format!("SENT0 disagrees with its reading on model {i}: {m:?}")
        })?;
        ensure(v1[i] == surface_scope(m), || {
            format!("SENT1 disagrees with its reading on model {i}: {m:?}")
        })?;
    }
    let took = start.elapsed();
    ensure(took < READINGS_LIMIT, || format!("took {took:.2?}"))?;
    Ok(format!(
        "M2 gives true/false; exact agreement on {} random models",
        battery.len() - 1
    ))
}

fn reading_classification(battery: &[Model]) -> Outcome {
    let inverse: Vec<bool> = battery.iter().map(inverse_scope).collect();
    let surface: Vec<bool> = battery.iter().map(surface_scope).collect();
    ensure(inverse != surface, || {
        "the battery cannot tell the readings apart".into()
    })?;
    let proofs = enumerate(&fixtures::sentence_judgement(), SearchOptions::exhaustive());
    let mut classes = [0, 0];
    for (i, d) in proofs.iter().enumerate() {
        let v = denotations(d, battery)?;
        match (v == inverse, v == surface) {
            (true, false) => classes[0] += 1,
            (false, true) => classes[1] += 1,
            _ => return Err(format!("proof {i} matches neither reading: {}", render_derivation(d))),
        }
    }
    Ok(format!(
        "{} proofs give the inverse-scope reading, {} the surface-scope reading",
        classes[0], classes[1]
    ))
}

// 4

fn cut_admissibility(corpus: &Corpus) -> Outcome {
    let start = Instant::now();
    ensure(corpus.pairs.len() >= MIN_CUT_PAIRS, || {
        format!("only {} pairs", corpus.pairs.len())
    })?;
    let mut seen: Vec<MainConnective> = Vec::new();
    let mut deepest = 0;
    for Pair { f, g, cut_formula } in &corpus.pairs {
        ensure(cut_formula.depth() <= 3, || {
            format!("cut formula {cut_formula} too deep")
        })?;
        let (fj, gj) = (
            f.infer().map_err(|e| e.to_string())?,
            g.infer().map_err(|e| e.to_string())?,
        );
        let (d, stats) = cut_with_stats(f, g).map_err(|e| format!("{f:?} ; {g:?}: {e}"))?;
        ensure(
            d.infer().ok() == Some(Judgement::new(fj.lhs.clone(), gj.rhs.clone())),
            || format!("cut of {f:?} ; {g:?} concludes the wrong judgement"),
        )?;
        let bound = 2 * cut_formula.size();
        ensure(stats.max_depth <= bound, || {
            format!("recursion depth {} > {bound} for {f:?} ; {g:?}", stats.max_depth)
        })?;
        deepest = deepest.max(stats.max_depth);
        if !seen.contains(&cut_formula.main_connective()) {
            seen.push(cut_formula.main_connective());
        }
    }
    ensure(seen.len() == 7, || {
        format!("only {} main connectives covered", seen.len())
    })?;
    let took = start.elapsed();
    ensure(took < CUT_LIMIT, || format!("took {took:.2?}"))?;
    Ok(format!(
        "{} pairs over 7 main connectives, deepest recursion {deepest}",
        corpus.pairs.len()
    ))
}

// 5

fn random_formula(rng: &mut ChaCha8Rng, depth: u32) -> Formula {
    const ATOMS: [&str; 4] = ["np", "s", "n", "pp"];
    if depth == 0 || rng.gen_bool(0.3) {
        return Formula::el(ATOMS.choose(rng).expect("atoms"));
    }
    let c = *Connective::ALL.choose(rng).expect("connectives");
    let l = random_formula(rng, depth - 1);
    let r = random_formula(rng, depth - 1);
    Formula::bin(c, l, r)
}

fn origin_reconstruction(corpus: &Corpus) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let replacements: Vec<Formula> = (0..REPLACEMENTS).map(|_| random_formula(&mut rng, 3)).collect();
    let mut views = 0;
    for (j, d) in &corpus.derivations {
        for side in [Side::Antecedent, Side::Succedent] {
            let hole = j.side(side);
            if hole.as_bin().is_none() {
                continue;
            }
            let jctx = JudgementContext::from_path(j, side, &[]).map_err(|e| e.to_string())?;
            if jctx.hole_polarity() != required_polarity(hole.main_connective()) {
                continue;
            }
            let v = find_origin(&jctx, hole, d).map_err(|e| format!("{d:?}: {e}"))?;
            let rebuilt = v.spine.apply_checked(v.introduced()).map_err(|e| e.to_string())?;
            ensure(&rebuilt == d, || format!("{d:?} rebuilds as {rebuilt:?}"))?;
            for g in &replacements {
                let concl = v
                    .spine
                    .conclusion(&v.local_with(g))
                    .map_err(|e| format!("{d:?} with {g}: {e}"))?;
                ensure(concl == jctx.plug(g), || format!("{d:?} with {g} concludes {concl}"))?;
            }
            views += 1;
        }
    }
    ensure(views > 0, || "no compound main formulas in the corpus".into())?;
    Ok(format!(
        "{views} views rebuild exactly; each generic for {REPLACEMENTS} replacements"
    ))
}

// 6

struct Points {
    inputs: Vec<lgcalc::semantics::SemValue>,
    continuations: Vec<lgcalc::semantics::SemValue>,
}

/// Inputs of `⌈a⌉` and continuations of `¬⌈c⌉`, if there are few enough pairs.
fn small_points(a: &Formula, c: &Formula, m: &Model) -> Option<Points> {
    let sig = m.signature();
    let ta = sig.interpret(&translate_type(a))?;
    let tk = sig.interpret(&SemType::neg(translate_type(c)))?;
    let n = count_points(&ta, m)?.checked_mul(count_points(&tk, m)?)?;
    (n <= POINT_BUDGET).then(|| Points {
        inputs: points(&ta, m).expect("finite"),
        continuations: points(&tk, m).expect("finite"),
    })
}

fn run_cps(
    t: &lgcalc::semantics::SemValue,
    first: &lgcalc::semantics::SemValue,
    second: &lgcalc::semantics::SemValue,
    m: &Model,
) -> Result<bool, String> {
    let v = apply(t, first.clone(), m)
        .and_then(|f| apply(&f, second.clone(), m))
        .map_err(|e| e.to_string())?;
    v.as_bool().ok_or_else(|| "not a truth value".to_string())
}

fn cps_typing_and_duality(corpus: &Corpus) -> Outcome {
    let sig = Signature::abstract_answers();
    let m = corpus::two_entities();
    let mut dual = 0;
    for (j, d) in &corpus.derivations {
        let (r, l) = (translate_r(d), translate_l(d));
        let rt = sig.right_type(&j.lhs, &j.rhs).ok_or("no right type")?;
        let lt = sig.left_type(&j.lhs, &j.rhs).ok_or("no left type")?;
        type_check(&r, &rt, &sig).map_err(|e| format!("R({d:?}): {e}"))?;
        type_check(&l, &lt, &sig).map_err(|e| format!("L({d:?}): {e}"))?;
        let Some(pts) = small_points(&j.lhs, &j.rhs, &m) else {
            continue;
        };
        let rv = eval(&r, &Env::empty(), &m).map_err(|e| e.to_string())?;
        let lv = eval(&l, &Env::empty(), &m).map_err(|e| e.to_string())?;
        for x in &pts.inputs {
            for k in &pts.continuations {
                ensure(run_cps(&rv, x, k, &m)? == run_cps(&lv, k, x, &m)?, || {
                    format!("duality fails for {d:?}")
                })?;
            }
        }
        dual += 1;
    }
    Ok(format!(
        "{} derivations type-check both ways; duality on all {dual} with at most {POINT_BUDGET} points",
        corpus.derivations.len()
    ))
}

// 7

fn composition(f: &Derivation, g: &Derivation) -> SemTerm {
    let v = SemTerm::var;
    SemTerm::lam(
        "x",
        SemTerm::lam(
            "k",
            SemTerm::app2(
                translate_r(f),
                v("x"),
                SemTerm::lam("y", SemTerm::app2(translate_r(g), v("y"), v("k"))),
            ),
        ),
    )
}

fn preserves_meaning(p: &Pair, m: &Model) -> Result<bool, String> {
    let a = p.f.infer().map_err(|e| e.to_string())?.lhs;
    let c = p.g.infer().map_err(|e| e.to_string())?.rhs;
    let pts = small_points(&a, &c, m).ok_or("pair exceeds the point budget")?;
    let d = cut(&p.f, &p.g).map_err(|e| e.to_string())?;
    let lhs = eval(&translate_r(&d), &Env::empty(), m).map_err(|e| e.to_string())?;
    let rhs = eval(&composition(&p.f, &p.g), &Env::empty(), m).map_err(|e| e.to_string())?;
    for x in &pts.inputs {
        for k in &pts.continuations {
            if run_cps(&lhs, x, k, m)? != run_cps(&rhs, x, k, m)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn cut_preserves_meaning(corpus: &Corpus) -> Outcome {
    let m = corpus::two_entities();
    ensure(corpus.small_pairs.len() >= SEMANTIC_CUT_PAIRS, || {
        format!("only {} small pairs", corpus.small_pairs.len())
    })?;
    let mut failures = Vec::new();
    for p in &corpus.small_pairs {
        if !preserves_meaning(p, &m)? {
            failures.push(p);
        }
    }
    if let Some(p) = failures.iter().min_by_key(|p| p.f.size() + p.g.size()) {
        return Err(format!(
            "{} of {} pairs differ; smallest: f = {}, g = {}, cut formula {}",
            failures.len(),
            corpus.small_pairs.len(),
            render_derivation(&p.f),
            render_derivation(&p.g),
            p.cut_formula
        ));
    }
    Ok(format!(
        "{} pairs agree extensionally with continuation composition",
        corpus.small_pairs.len()
    ))
}

// 8

fn identities_and_applications() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..IDENTITY_SAMPLES {
        let a = random_formula(&mut rng, IDENTITY_DEPTH);
        let j = ax_general(&a).infer().map_err(|e| e.to_string())?;
        ensure(j == Judgement::new(a.clone(), a.clone()), || {
            format!("identity on {a} concludes {j}")
        })?;
    }
    let (a, b) = (Formula::el("np"), Formula::el("s"));
    let cases = [
        (appl_imp_r(&a, &b), "np * (np => s) |- s", RuleTag::RImpRProd),
        (appl_imp_l(&a, &b), "(s <= np) * np |- s", RuleTag::RImpLProd),
        (appl_diff_r(&a, &b), "s |- np + (np >- s)", RuleTag::RDiffRSum),
        (appl_diff_l(&a, &b), "s |- (s -< np) + np", RuleTag::RDiffLSum),
    ];
    for (d, expected, tag) in cases {
        let expected = parse_judgement(expected).map_err(|e| e.to_string())?;
        ensure(d.infer().ok() == Some(expected.clone()), || {
            format!("{d:?} does not conclude {expected}")
        })?;
        ensure(d.tag() == tag, || format!("{d:?} should end in {}", tag.unicode_name()))?;
    }
    Ok(format!(
        "{IDENTITY_SAMPLES} identities up to depth {IDENTITY_DEPTH}; four applications"
    ))
}

// 9

fn random_derivation(rng: &mut ChaCha8Rng, depth: u32) -> Derivation {
    if depth == 0 || rng.gen_bool(0.25) {
        return Derivation::ax(["np", "s", "n"].choose(rng).expect("atoms"));
    }
    let tag = *RuleTag::ALL[1..].choose(rng).expect("rules");
    match tag.arity() {
        1 => Derivation::unary(tag, random_derivation(rng, depth - 1)),
        _ => {
            let l = random_derivation(rng, depth - 1);
            Derivation::binary(tag, l, random_derivation(rng, depth - 1))
        }
    }
}

fn format_round_trips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..ROUND_TRIPS {
        let f = random_formula(&mut rng, 5);
        for notation in [Notation::Ascii, Notation::Unicode] {
            let text = f.render(notation);
            ensure(parse_formula(&text).ok() == Some(f.clone()), || {
                format!("formula {text} does not round-trip")
            })?;
        }
        let d = random_derivation(&mut rng, 6);
        let text = render_derivation(&d);
        ensure(parse_derivation(&text).ok() == Some(d), || {
            format!("derivation {text} does not round-trip")
        })?;
    }
    let runs: [&[&str]; 2] = [
        &["prove", SENTENCE, "--all"],
        &[
            "denote",
            "--lexicon",
            "data/someone.lex",
            "--model",
            "data/m2.model",
            "--show-proof",
            "someone",
            "loves",
            "everyone",
        ],
    ];
    for args in runs {
        let (a, b) = (lg(args)?, lg(args)?);
        ensure(a.status.success(), || {
            format!("lg {} failed: {}", args[0], String::from_utf8_lossy(&a.stderr))
        })?;
        ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || {
            format!("lg {} output differs between runs", args[0])
        })?;
    }
    Ok(format!(
        "{ROUND_TRIPS} formulas and derivations round-trip; prove and denote are byte-deterministic"
    ))
}
