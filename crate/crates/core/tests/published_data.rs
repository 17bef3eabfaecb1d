//! The published families, their parameter identities, the SDS↔PCS
//! correspondence and the Golay doubling chain.

use std::time::{Duration, Instant};

use pcs_core::catalog::{embedded_golay_pairs, load_published_assets, Witness};
use pcs_core::construct::{doubling_chain, GolayPair};
use pcs_core::sds::{difference_profile, pcs_to_sds, sds_to_pcs, verify_sds};
use pcs_core::seqcore::is_acs;
use pcs_core::{ParameterSet, SdsFamily};

pub const PRINTED: [&str; 10] = [
    "(36;15,15,15;18)",
    "(40;19,18,15;22)",
    "(44;20,20,17;24)",
    "(48;24,24,18;30)",
    "(44;21,20,19,18,17;40)",
    "(48;23,21,21,20,19;44)",
    "(38;18,17,16,16,16,14;40)",
    "(42;19,18,18,18,17,17;44)",
    "(42;19,18,18,18,17,17;44)",
    "(46;21,21,21,21,21,16;52)",
];

fn families() -> Vec<SdsFamily> {
    load_published_assets()
        .unwrap()
        .into_iter()
        .map(|e| match e.witness {
            Some(Witness::Sds(f)) => f,
            other => panic!("({}, {}) has witness {other:?}", e.p, e.n),
        })
        .collect()
}

#[test]
fn published_families_verify_exactly() {
    let start = Instant::now();
    let fams = families();
    let mut got: Vec<String> = Vec::new();
    for f in &fams {
        let r = verify_sds(f);
        assert!(r.holds, "{}", f.parameter_set());
        assert!(difference_profile(f).iter().all(|&v| v == f.lambda()));
        got.push(f.parameter_set().to_string());
    }
    let mut want: Vec<String> = PRINTED.iter().map(|s| s.to_string()).collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
    assert!(start.elapsed() < Duration::from_secs(1), "{:?}", start.elapsed());
}

#[test]
fn the_two_order_42_families_are_not_equivalent() {
    let fams: Vec<SdsFamily> = families().into_iter().filter(|f| f.modulus() == 42).collect();
    assert_eq!(fams.len(), 2);
    assert!(!pcs_core::sds::equivalent(&fams[0], &fams[1]));
}

#[test]
fn printed_parameters_satisfy_identities() {
    for s in PRINTED {
        let ps: ParameterSet = s.parse().unwrap();
        let (n, p, lambda) = (ps.n as i64, ps.p() as i64, ps.lambda as i64);
        let k: Vec<i64> = ps.k.iter().map(|&k| k as i64).collect();
        let ksum: i64 = k.iter().sum();
        assert_eq!(4 * (ksum - lambda), p * n, "{s}");
        assert_eq!(p * n, k.iter().map(|k| (n - 2 * k).pow(2)).sum::<i64>(), "{s}");
        assert_eq!(lambda * (n - 1), k.iter().map(|k| k * (k - 1)).sum::<i64>(), "{s}");
        assert!(ps.satisfies_linear() && ps.satisfies_quadratic() && ps.satisfies_counting().unwrap());
    }
}

#[test]
fn published_families_map_to_pcs_and_back() {
    for f in families() {
        let seqs = sds_to_pcs(&f).unwrap();
        let (p, n) = (f.p() as i64, f.modulus());
        let mut delta = vec![0i64; n];
        delta[0] = p * n as i64;
        let sum = seqs.pacf_sum();
        assert_eq!((0..n).map(|m| sum.at(m)).collect::<Vec<_>>(), delta);
        assert_eq!(pcs_to_sds(&seqs).unwrap(), f);
    }
}

#[test]
fn golay_chain_reaches_the_small_golay_numbers() {
    let ten = embedded_golay_pairs()
        .unwrap()
        .into_iter()
        .find(|g| g.len() == 10)
        .expect("length-10 pair shipped");
    let mut lengths: Vec<usize> = doubling_chain(&GolayPair::length_two(), 50)
        .into_iter()
        .chain(doubling_chain(&ten, 50))
        .map(|g| {
            assert!(is_acs(&g.family()).holds, "length {}", g.len());
            g.len()
        })
        .collect();
    lengths.sort();
    lengths.dedup();
    for n in [4, 8, 16, 32, 20, 40] {
        assert!(lengths.contains(&n), "{n} missing from {lengths:?}");
    }
    let shipped = embedded_golay_pairs().unwrap();
    let g26 = shipped.iter().find(|g| g.len() == 26).expect("length-26 pair shipped");
    assert!(is_acs(&g26.family()).holds);
}
