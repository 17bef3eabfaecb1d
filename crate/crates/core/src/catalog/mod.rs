//! Verified assets, existence facts, their closure under composition, and
//! the existence table for p ≤ 12, N ≤ 50.

pub mod assets;
pub mod closure;
pub mod entry;
pub mod facts;
pub mod table;

use std::fs;
use std::path::Path;

pub use assets::{
    dir_assets, embedded_assets, embedded_base_sequences, embedded_golay_pairs, load_published_assets, Asset, AssetKind,
};
pub use closure::{decompositions, existence_closure, merge_all, Cells};
pub use entry::{CatalogEntry, Provenance, Status, Witness};
pub use facts::{base_facts, classified, parse_facts, render_facts, TABLE_NMAX, TABLE_PMAX};
pub use table::{build_table, ExistenceTable, Mark, TableCell};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Catalog {
    assets: Vec<Asset>,
    cells: Cells,
}

impl Catalog {
    fn assemble(assets: Vec<Asset>, facts_txt: &str) -> Result<Self> {
        let mut entries = base_facts()?;
        for a in &assets {
            entries.push(a.entry()?);
        }
        entries.extend(parse_facts(facts_txt)?);
        let cells = merge_all(existence_closure(entries)?)?;
        Ok(Self { assets, cells })
    }

    /// The catalog built into the library.
    pub fn load_embedded() -> Result<Self> {
        Self::assemble(embedded_assets()?, assets::EMBEDDED_FACTS)
    }

    /// A catalog directory: `CHECKSUMS`, `facts.txt`, `sds/`, `seq/`.
    pub fn load_dir(root: &Path) -> Result<Self> {
        let assets = assets::dir_assets(root)?;
        let facts_path = root.join("facts.txt");
        let facts = if facts_path.exists() {
            fs::read_to_string(facts_path)?
        } else {
            String::new()
        };
        Self::assemble(assets, &facts)
    }

    pub fn assets(&self) -> &[Asset] {
        &self.assets
    }

    pub fn get(&self, p: usize, n: usize) -> Option<&CatalogEntry> {
        self.cells.get(&(p, n))
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.cells.values()
    }

    pub fn cells(&self) -> &Cells {
        &self.cells
    }

    pub fn table(&self, pmax: usize, nmax: usize) -> Result<ExistenceTable> {
        if pmax > TABLE_PMAX || nmax > TABLE_NMAX {
            return Err(Error::OutOfRange {
                what: if pmax > TABLE_PMAX { "table p" } else { "table N" },
                value: if pmax > TABLE_PMAX { pmax } else { nmax },
                min: 1,
                max: if pmax > TABLE_PMAX { TABLE_PMAX } else { TABLE_NMAX },
            });
        }
        ExistenceTable::from_cells(&self.cells, pmax, nmax)
    }
}
