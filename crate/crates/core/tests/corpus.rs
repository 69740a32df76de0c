use std::collections::BTreeSet;

use mcomp_core::generate::{corpus_instance, CorpusParams};
use mcomp_core::oracle::DEFAULT_BUDGET;
use mcomp_core::verify::check_instance;

#[test]
fn corpus_reaches_every_case_and_agrees_with_oracle() {
    let params = CorpusParams { seed: 11, ..Default::default() };
    let mut cases = BTreeSet::new();
    for i in 0..1500 {
        let (d, ps) = corpus_instance(&params, i).unwrap();
        let c = check_instance(&d, ps, DEFAULT_BUDGET).unwrap();
        assert!(c.passed(), "instance {i} ({}): {}", c.verdict.case, c.mismatch.unwrap());
        let tag = c.verdict.case.to_string();
        cases.insert(tag.split('(').next().unwrap().to_string());
    }
    let expected = [
        "all-trivial",
        "kappa1",
        "kappa2-bipartite-tail",
        "kappa2-else",
        "kappa3-dag",
        "kappa3-else",
        "kappa3-single",
        "kappa4-both",
        "kappa4-else",
        "kappa4-v1",
        "kappa4-v2",
        "last-kappa1",
        "last-kappa2",
        "last-kappa3",
        "last-kappa4",
    ];
    let missing: Vec<_> = expected.iter().filter(|c| !cases.contains(**c)).collect();
    assert!(missing.is_empty(), "never produced: {missing:?}");
}

#[test]
fn other_seeds_and_sizes_agree() {
    for (seed, max_n, min_k, max_k) in [(1, 6, 2, 2), (2, 9, 3, 3), (3, 12, 4, 5), (4, 16, 2, 5)] {
        let params = CorpusParams { seed, max_n, min_k, max_k };
        for i in 0..150 {
            let (d, ps) = corpus_instance(&params, i).unwrap();
            let c = check_instance(&d, ps, DEFAULT_BUDGET).unwrap();
            assert!(c.passed(), "seed {seed} instance {i}: {}", c.mismatch.unwrap());
        }
    }
}
