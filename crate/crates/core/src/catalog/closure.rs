use std::collections::BTreeMap;

use super::entry::{CatalogEntry, Provenance, Status, Witness};
use crate::construct::union_families;
use crate::error::Result;

pub type Cells = BTreeMap<(usize, usize), CatalogEntry>;

/// Merges all facts per cell. The result does not depend on input order.
pub fn merge_all(entries: impl IntoIterator<Item = CatalogEntry>) -> Result<Cells> {
    let mut cells = Cells::new();
    for e in entries {
        let key = e.cell();
        let merged = match cells.remove(&key) {
            Some(old) => old.merge(e)?,
            None => e,
        };
        cells.insert(key, merged);
    }
    Ok(cells)
}

fn exists(cells: &Cells, p: usize, n: usize) -> bool {
    cells.get(&(p, n)).and_then(|e| e.status.exists()) == Some(true)
}

/// The ways to write `p = q + (p - q)` with 1 ≤ q ≤ p - q and both parts
/// existing at length `n`.
pub fn decompositions(cells: &Cells, p: usize, n: usize) -> Vec<(usize, usize)> {
    (1..=p / 2)
        .filter(|&q| exists(cells, q, n) && exists(cells, p - q, n))
        .map(|q| (q, p - q))
        .collect()
}

fn compose(cells: &Cells, p: usize, n: usize) -> Result<Option<CatalogEntry>> {
    let parts = decompositions(cells, p, n);
    let Some(&(q0, r0)) = parts.first() else {
        return Ok(None);
    };
    for &(q, r) in &parts {
        let (a, b) = (&cells[&(q, n)], &cells[&(r, n)]);
        if let (Some(wa), Some(wb)) = (&a.witness, &b.witness) {
            let fam = union_families(&wa.sequences()?, &wb.sequences()?)?;
            return Ok(Some(CatalogEntry::with_witness(
                p,
                n,
                Witness::Sequences(fam),
                Provenance::Composition { parts: vec![q, r] },
            )));
        }
    }
    Ok(Some(CatalogEntry::new(
        p,
        n,
        Status::ExistsCited,
        Provenance::Composition { parts: vec![q0, r0] },
    )))
}

/// Closes the facts under exists(q, N) ∧ exists(r, N) ⇒ exists(q + r, N)
/// for every p up to the largest p mentioned. Composed witnesses are unions
/// of the part witnesses. A derived existence that meets a nonexistence fact
/// is an error.
pub fn existence_closure(entries: impl IntoIterator<Item = CatalogEntry>) -> Result<Vec<CatalogEntry>> {
    let mut cells = merge_all(entries)?;
    let pmax = cells.keys().map(|k| k.0).max().unwrap_or(0);
    let mut lengths: Vec<usize> = cells.keys().map(|k| k.1).collect();
    lengths.sort_unstable();
    lengths.dedup();
    // Parts are strictly smaller than p, so one ascending pass per length
    // reaches the fixpoint.
    for &n in &lengths {
        for p in 2..=pmax {
            if let Some(derived) = compose(&cells, p, n)? {
                let merged = match cells.remove(&(p, n)) {
                    Some(old) => old.merge(derived)?,
                    None => derived,
                };
                cells.insert((p, n), merged);
            }
        }
    }
    Ok(cells.into_values().collect())
}
