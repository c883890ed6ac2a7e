use lgcalc::fixtures::{sent0, sent1, sentence_judgement};
use lgcalc::{enumerate, Formula, Judgement, SearchOptions};

#[test]
fn sentence_has_seven_proofs() {
    let all = enumerate(&sentence_judgement(), SearchOptions::exhaustive());
    assert_eq!(all.len(), 7);
    assert!(all.contains(&sent0()));
    assert!(all.contains(&sent1()));
    for (i, d) in all.iter().enumerate() {
        assert_eq!(d.infer().unwrap(), sentence_judgement());
        assert!(!all[..i].contains(d));
    }
}

#[test]
fn enumeration_is_deterministic() {
    let j = sentence_judgement();
    assert_eq!(
        enumerate(&j, SearchOptions::exhaustive()),
        enumerate(&j, SearchOptions::exhaustive())
    );
}

#[test]
fn bounds_give_prefixes() {
    let j = sentence_judgement();
    let all = enumerate(&j, SearchOptions::exhaustive());
    for n in 0..=8 {
        let some = enumerate(&j, SearchOptions::first(n));
        assert_eq!(some.as_slice(), &all[..n.min(all.len())]);
    }
    let deepest = all.iter().map(|d| d.height()).max().unwrap();
    let capped = SearchOptions {
        max_proofs: None,
        max_depth: Some(deepest - 1),
    };
    assert!(enumerate(&j, capped).len() < all.len());
    let enough = SearchOptions {
        max_proofs: None,
        max_depth: Some(deepest),
    };
    assert_eq!(enumerate(&j, enough), all);
}

#[test]
fn non_theorems() {
    let (np, s) = (Formula::el("np"), Formula::el("s"));
    // Associativity and commutativity are not derivable.
    let assoc = Judgement::new(
        Formula::prod(Formula::prod(np.clone(), s.clone()), np.clone()),
        Formula::prod(np.clone(), Formula::prod(s.clone(), np.clone())),
    );
    let comm = Judgement::new(
        Formula::prod(np.clone(), s.clone()),
        Formula::prod(s.clone(), np.clone()),
    );
    assert!(enumerate(&assoc, SearchOptions::exhaustive()).is_empty());
    assert!(enumerate(&comm, SearchOptions::exhaustive()).is_empty());
}
