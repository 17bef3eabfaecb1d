//! Strategies and checks shared by the property suite and the acceptance run.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::OnceLock;

use pcs_core::catalog::Catalog;
use pcs_core::construct::union_families;
use pcs_core::sds::{canonicalize, units};
use pcs_core::seqcore::{nacf, pacf, pacf_direct, pacf_from_nacf};
use pcs_core::{BinarySequence, ResidueSubset, SdsFamily, SequenceFamily};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestCaseResult, TestRunner};

pub const CASES: u32 = 10_000;

pub fn config() -> Config {
    Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    }
}

/// Lengths straddle the 64-bit word boundary of the packed kernel.
pub fn sequence() -> impl Strategy<Value = BinarySequence> {
    prop::collection::vec(any::<bool>(), 1..=130)
        .prop_map(|bits| BinarySequence::new(bits.into_iter().map(|b| if b { -1 } else { 1 }).collect()).unwrap())
}

pub fn subset_with_shift() -> impl Strategy<Value = (ResidueSubset, usize)> {
    prop::collection::vec(any::<bool>(), 1..=100).prop_flat_map(|bits| {
        let n = bits.len();
        let x = ResidueSubset::new(n, (0..n).filter(|&i| bits[i]).collect()).unwrap();
        (Just(x), 0..n)
    })
}

pub fn family() -> impl Strategy<Value = SdsFamily> {
    (1usize..=40, 1usize..=4).prop_flat_map(|(n, p)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), n), p).prop_map(move |rows| {
            let sets = rows.iter().map(|r| (0..n).filter(|&i| r[i]).collect()).collect();
            SdsFamily::from_sets(n, sets, 0).unwrap()
        })
    })
}

/// Family plus per-subset translations and a unit index.
pub fn family_with_action() -> impl Strategy<Value = (SdsFamily, Vec<usize>, usize)> {
    family().prop_flat_map(|f| {
        let n = f.modulus();
        let p = f.p();
        (Just(f), prop::collection::vec(0..n, p), any::<prop::sample::Index>()).prop_map(|(f, t, u)| {
            let us = units(f.modulus());
            (f, t, us[u.index(us.len())])
        })
    })
}

/// Known periodic complementary families keyed by length.
pub fn pcs_pool() -> &'static BTreeMap<usize, Vec<SequenceFamily>> {
    static POOL: OnceLock<BTreeMap<usize, Vec<SequenceFamily>>> = OnceLock::new();
    POOL.get_or_init(|| {
        let c = Catalog::load_embedded().unwrap();
        let mut pool: BTreeMap<usize, Vec<SequenceFamily>> = BTreeMap::new();
        for e in c.entries() {
            if let Some(w) = &e.witness {
                if e.n <= 64 {
                    pool.entry(e.n).or_default().push(w.sequences().unwrap());
                }
            }
        }
        pool.retain(|_, v| v.len() >= 2);
        pool
    })
}

/// Member-wise negation, reversal and cyclic shift keep a family periodic complementary.
fn disguise(f: &SequenceFamily, seed: u64) -> SequenceFamily {
    let mut s = seed;
    let members = f
        .members()
        .iter()
        .map(|a| {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let mut b = a.cyclic_shift((s >> 33) as usize % a.len()).unwrap();
            if s & 1 == 1 {
                b = b.negate();
            }
            if s & 2 == 2 {
                b = b.reverse();
            }
            b
        })
        .collect();
    SequenceFamily::new(members).unwrap()
}

pub fn pcs_pair() -> impl Strategy<Value = (SequenceFamily, SequenceFamily)> {
    let lengths: Vec<usize> = pcs_pool().keys().copied().collect();
    prop::sample::select(lengths).prop_flat_map(|n| {
        let fams = &pcs_pool()[&n];
        (
            prop::sample::select(fams.clone()),
            prop::sample::select(fams.clone()),
            any::<u64>(),
            any::<u64>(),
        )
            .prop_map(|(f, g, s, t)| (disguise(&f, s), disguise(&g, t)))
    })
}

macro_rules! check {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(TestCaseError::fail(format!($($fmt)*)));
        }
    };
}

pub fn pacf_symmetric(a: &BinarySequence) -> TestCaseResult {
    let r = pacf(a);
    let n = a.len();
    for m in 0..n {
        check!(r.at(m) == r.at((n - m) % n), "N={n} m={m}");
    }
    Ok(())
}

pub fn packed_matches_direct(a: &BinarySequence) -> TestCaseResult {
    check!(pacf(a) == pacf_direct(a), "N={}", a.len());
    Ok(())
}

pub fn pacf_folds_nacf(a: &BinarySequence) -> TestCaseResult {
    check!(pacf(a) == pacf_from_nacf(&nacf(a)), "N={}", a.len());
    Ok(())
}

pub fn bridge_identity(a: &BinarySequence) -> TestCaseResult {
    let n = a.len();
    let x = ResidueSubset::new(n, a.minus_positions()).unwrap();
    let k = x.len() as i64;
    let r = pacf(a);
    for m in 0..n {
        let nu = x.nu(m).unwrap() as i64;
        check!(r.at(m) == n as i64 - 4 * (k - nu), "N={n} m={m}");
    }
    Ok(())
}

pub fn pacf_total(a: &BinarySequence) -> TestCaseResult {
    let r = pacf(a);
    let total: i64 = (0..a.len()).map(|m| r.at(m)).sum();
    check!(total == a.sum() * a.sum(), "N={}", a.len());
    Ok(())
}

pub fn nu_symmetric((x, m): &(ResidueSubset, usize)) -> TestCaseResult {
    let n = x.modulus();
    check!(x.nu(*m).unwrap() == x.nu((n - m) % n).unwrap(), "N={n} m={m}");
    Ok(())
}

pub fn nu_total((x, _): &(ResidueSubset, usize)) -> TestCaseResult {
    let n = x.modulus();
    let k = x.len();
    let total: usize = (1..n).map(|m| x.nu(m).unwrap()).sum();
    check!(total == k * k.saturating_sub(1), "N={n} k={k}");
    Ok(())
}

pub fn canonical_idempotent((f, t, u): &(SdsFamily, Vec<usize>, usize)) -> TestCaseResult {
    let c = canonicalize(f);
    check!(canonicalize(&c) == c, "{:?}", f.sets());
    let moved: Vec<ResidueSubset> = f
        .subsets()
        .iter()
        .zip(t)
        .map(|(x, &s)| x.translate(s).scale(*u))
        .rev()
        .collect();
    let g = SdsFamily::new(f.modulus(), moved, f.lambda()).unwrap();
    check!(canonicalize(&g) == c, "{:?} under t={t:?} u={u}", f.sets());
    Ok(())
}

pub fn union_additive((f, g): &(SequenceFamily, SequenceFamily)) -> TestCaseResult {
    let u = union_families(f, g).map_err(|e| TestCaseError::fail(e.to_string()))?;
    check!(u.size() == f.size() + g.size(), "size");
    check!(u.pacf_sum() == f.pacf_sum().add(&g.pacf_sum()), "N={}", f.length());
    Ok(())
}

/// Runs one suite for the acceptance report.
pub fn run<S: Strategy>(strategy: S, test: impl Fn(&S::Value) -> TestCaseResult) -> Result<u32, String>
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(config());
    runner.run(&strategy, |v| test(&v)).map_err(|e| e.to_string())?;
    Ok(CASES)
}
