use pcs_core::catalog::{
    build_table, classified, load_published_assets, Catalog, Mark, Provenance, Status, Witness, TABLE_NMAX, TABLE_PMAX,
};
use pcs_core::seqcore::is_pcs;

const GOLDEN: &str = include_str!("data/existence_grid.txt");

#[test]
fn table_matches_golden() {
    let t = build_table(12, 50).unwrap();
    let got = t.render_text();
    for (g, w) in got.lines().zip(GOLDEN.lines()) {
        assert_eq!(g, w);
    }
    assert_eq!(got, GOLDEN);
}

#[test]
fn rows_divisible_by_four_exist_everywhere() {
    let t = build_table(12, 50).unwrap();
    for p in [4, 8, 12] {
        for n in 1..=50 {
            let c = t.cell(p, n).unwrap();
            assert_eq!(c.mark, Mark::AllRow);
            assert_eq!(c.status.exists(), Some(true), "({p},{n})");
        }
    }
}

#[test]
fn classified_rows_agree_with_table() {
    let t = build_table(12, 50).unwrap();
    for p in [1, 2, 3, 5, 6] {
        for n in 1..=50 {
            let nonblank = t.mark(p, n) != Some(Mark::Blank);
            assert_eq!(Some(nonblank), classified(p, n), "({p},{n})");
        }
    }
}

#[test]
fn odd_lengths_blank_outside_four_rows() {
    let t = build_table(12, 50).unwrap();
    for p in (1..=12).filter(|p| p % 4 != 0) {
        for n in (3..=49).step_by(2) {
            assert_eq!(t.mark(p, n), Some(Mark::Blank));
            assert_eq!(t.cell(p, n).unwrap().provenance, Some(Provenance::OrderCondition));
        }
    }
}

#[test]
fn row_five_nonblank_at_multiples_of_four() {
    let t = build_table(12, 50).unwrap();
    for n in 1..=50 {
        assert_eq!(t.mark(5, n) != Some(Mark::Blank), n == 1 || n % 4 == 0, "N={n}");
    }
}

#[test]
fn every_witness_reverifies() {
    let c = Catalog::load_embedded().unwrap();
    let mut witnessed = 0;
    for e in c.entries() {
        if let Some(w) = &e.witness {
            let f = w.sequences().unwrap();
            assert_eq!((f.size(), f.length()), (e.p, e.n));
            assert!(is_pcs(&f).holds, "({}, {})", e.p, e.n);
            witnessed += 1;
        }
        if e.status == Status::ExistsWitness {
            assert!(e.witness.is_some());
        }
        if e.status == Status::NotExistsExhausted {
            assert!(matches!(e.provenance, Provenance::SearchRun { .. }));
        }
    }
    assert!(witnessed > 100);
}

#[test]
fn published_families_are_witnesses() {
    let c = Catalog::load_embedded().unwrap();
    for e in load_published_assets().unwrap() {
        let got = c.get(e.p, e.n).unwrap();
        assert_eq!(got.status, Status::ExistsWitness);
        assert!(matches!(got.witness, Some(Witness::Sds(_))), "({}, {})", e.p, e.n);
    }
}

#[test]
fn out_of_range_table_refused() {
    let c = Catalog::load_embedded().unwrap();
    assert!(c.table(TABLE_PMAX + 1, 10).is_err());
    assert!(c.table(5, TABLE_NMAX + 1).is_err());
    assert!(c.table(0, 10).is_err());
}

#[test]
fn structured_grid_round_trips() {
    let t = build_table(6, 20).unwrap();
    let back: pcs_core::catalog::ExistenceTable = serde_json::from_str(&t.render_json()).unwrap();
    assert_eq!(back, t);
}

#[test]
fn catalog_directory_matches_embedded() {
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../assets");
    let a = Catalog::load_dir(&root).unwrap();
    let b = Catalog::load_embedded().unwrap();
    assert_eq!(a.cells(), b.cells());
}
