//! The pruned exhaustive searcher against a brute-force filter over all 2^{pN}
//! families, compared after canonicalization.

use std::collections::BTreeSet;

use pcs_core::sds::canonicalize;
use pcs_core::search::{exhaustive_pcs, SearchConfig, SearchStatus};
use pcs_core::SdsFamily;

type Class = (Vec<Vec<usize>>, u64);

/// Every (p, N) with p·N ≤ 16.
fn cells() -> Vec<(usize, usize)> {
    (1..=16usize).flat_map(|n| (1..=16 / n).map(move |p| (p, n))).collect()
}

fn brute_force(p: usize, n: usize) -> BTreeSet<Class> {
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << (p * n) {
        let rows: Vec<Vec<i64>> = (0..p)
            .map(|i| {
                (0..n)
                    .map(|j| if mask >> (i * n + j) & 1 == 1 { -1 } else { 1 })
                    .collect()
            })
            .collect();
        let complementary = (1..n).all(|m| {
            rows.iter()
                .map(|a| (0..n).map(|j| a[j] * a[(j + m) % n]).sum::<i64>())
                .sum::<i64>()
                == 0
        });
        if !complementary {
            continue;
        }
        let sets: Vec<Vec<usize>> = rows.iter().map(|a| (0..n).filter(|&j| a[j] == -1).collect()).collect();
        // Ordered pairs at difference 1; every nonzero difference agrees.
        let lambda = if n == 1 {
            0
        } else {
            sets.iter()
                .map(|x| x.iter().filter(|&&a| x.contains(&((a + 1) % n))).count() as u64)
                .sum()
        };
        let f = SdsFamily::from_sets(n, sets, lambda).unwrap();
        let c = canonicalize(&f);
        out.insert((c.sets(), c.lambda()));
    }
    out
}

fn pruned(p: usize, n: usize, prune: bool) -> BTreeSet<Class> {
    let cfg = SearchConfig::exhaustive().with_prune(prune);
    let out = exhaustive_pcs(p, n, &cfg).unwrap();
    assert_ne!(out.status, SearchStatus::BudgetExhausted, "({p},{n})");
    out.witnesses()
        .map(|f| {
            let c = canonicalize(f);
            assert_eq!(&c, f, "witness not canonical at ({p},{n})");
            (c.sets(), c.lambda())
        })
        .collect()
}

#[test]
fn searcher_matches_brute_force() {
    let mut classes = 0;
    for (p, n) in cells() {
        let want = brute_force(p, n);
        classes += want.len();
        assert_eq!(pruned(p, n, true), want, "({p},{n})");
    }
    eprintln!("{classes} classes");
    for (p, n) in [(1, 4), (2, 2), (2, 8), (4, 4)] {
        assert!(!brute_force(p, n).is_empty(), "({p},{n})");
    }
    assert!(brute_force(1, 8).is_empty());
}

#[test]
fn pruning_does_not_change_the_answer() {
    for (p, n) in cells().into_iter().filter(|&(p, n)| p * n <= 12) {
        assert_eq!(pruned(p, n, false), pruned(p, n, true), "({p},{n})");
    }
}
