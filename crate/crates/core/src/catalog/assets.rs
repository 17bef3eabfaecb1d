//! Asset files: SDS listings and sequence witnesses, checked against
//! `CHECKSUMS` and fully re-verified every time they are loaded.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use super::entry::{CatalogEntry, Provenance, Witness};
use crate::construct::{verify_base, BaseSequenceQuad, GolayPair};
use crate::error::{Error, Result};
use crate::sds::{pcs_to_sds, sds_to_pcs, verify_sds, SdsFamily, SdsRecord};
use crate::seqcore::{is_pcs, SequenceFamily, SequenceFile};

macro_rules! embed {
    ($($path:literal),* $(,)?) => {
        &[$(($path, include_str!(concat!("../../../../assets/", $path)))),*]
    };
}

/// Every shipped asset, keyed by its path under the asset directory.
pub static EMBEDDED: &[(&str, &str)] = embed![
    "sds/p2-n34.sds",
    "sds/p3-n12.sds",
    "sds/p3-n16.sds",
    "sds/p3-n24.sds",
    "sds/p3-n28.sds",
    "sds/p3-n32.sds",
    "sds/p3-n36.sds",
    "sds/p3-n40.sds",
    "sds/p3-n44.sds",
    "sds/p3-n48.sds",
    "sds/p3-n8.sds",
    "sds/p5-n12.sds",
    "sds/p5-n20.sds",
    "sds/p5-n24.sds",
    "sds/p5-n28.sds",
    "sds/p5-n36.sds",
    "sds/p5-n44.sds",
    "sds/p5-n48.sds",
    "sds/p6-n14.sds",
    "sds/p6-n18.sds",
    "sds/p6-n22.sds",
    "sds/p6-n30.sds",
    "sds/p6-n38.sds",
    "sds/p6-n42a.sds",
    "sds/p6-n42b.sds",
    "sds/p6-n46.sds",
    "seq/base-10-9.seq",
    "seq/base-11-10.seq",
    "seq/base-12-11.seq",
    "seq/base-2-1.seq",
    "seq/base-3-2.seq",
    "seq/base-4-3.seq",
    "seq/base-5-4.seq",
    "seq/base-6-5.seq",
    "seq/base-7-6.seq",
    "seq/base-8-7.seq",
    "seq/base-9-8.seq",
    "seq/golay-10.seq",
    "seq/golay-26.seq",
    "seq/pcs6-6.seq",
];

pub static EMBEDDED_CHECKSUMS: &str = include_str!("../../../../assets/CHECKSUMS");
pub static EMBEDDED_FACTS: &str = include_str!("../../../../assets/facts.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AssetKind {
    Sds(SdsFamily),
    Golay(GolayPair),
    Base(BaseSequenceQuad),
    Pcs(SequenceFamily),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Asset {
    pub path: String,
    pub name: Option<String>,
    pub source: Option<String>,
    pub kind: AssetKind,
}

/// `source=` value of the transcribed literature listings.
pub const PUBLISHED_SOURCE: &str = "published listing";

impl Asset {
    /// The (p, N) cell this asset witnesses. Base sequences BS(m, n) give
    /// four sequences of length m + n.
    pub fn cell(&self) -> (usize, usize) {
        match &self.kind {
            AssetKind::Sds(f) => (f.p(), f.modulus()),
            AssetKind::Golay(g) => (2, g.len()),
            AssetKind::Base(q) => (4, q.m() + q.n()),
            AssetKind::Pcs(f) => (f.size(), f.length()),
        }
    }

    pub fn entry(&self) -> Result<CatalogEntry> {
        let (p, n) = self.cell();
        let witness = match &self.kind {
            AssetKind::Sds(f) => Witness::Sds(f.clone()),
            AssetKind::Golay(g) => Witness::Sequences(g.family()),
            AssetKind::Base(q) => Witness::Sequences(crate::construct::base_to_acs4(q)?),
            AssetKind::Pcs(f) => Witness::Sequences(f.clone()),
        };
        Ok(CatalogEntry::with_witness(
            p,
            n,
            witness,
            Provenance::Asset {
                path: self.path.clone(),
            },
        ))
    }
}

fn asset_err(path: &str, reason: impl Into<String>) -> Error {
    Error::Asset {
        name: path.to_string(),
        reason: reason.into(),
    }
}

fn wrap(path: &str, e: Error) -> Error {
    match e {
        Error::Asset { .. } => e,
        other => asset_err(path, other.to_string()),
    }
}

fn check_sds(path: &str, f: SdsFamily) -> Result<SdsFamily> {
    let report = verify_sds(&f);
    if !report.holds {
        let detail = match report.first_mismatch {
            Some(m) => format!(
                "difference {m} occurs {} times, expected {}",
                report.profile[m - 1],
                f.lambda()
            ),
            None => "profile is not constant".into(),
        };
        return Err(asset_err(path, format!("not an SDS: {detail}")));
    }
    let seqs = sds_to_pcs(&f).map_err(|e| wrap(path, e))?;
    if let Some(off) = is_pcs(&seqs).first_offender() {
        return Err(asset_err(
            path,
            format!(
                "converted family fails at shift {} (residual {})",
                off.shift, off.residual
            ),
        ));
    }
    if f.modulus() > 1 {
        let back = pcs_to_sds(&seqs).map_err(|e| wrap(path, e))?;
        if back != f {
            return Err(asset_err(path, "SDS -> PCS -> SDS round trip differs"));
        }
    }
    Ok(f)
}

/// Parses and verifies one asset. `path` is relative to the asset root and
/// decides the format (`.sds` or `.seq`).
pub fn parse_asset(path: &str, text: &str) -> Result<Asset> {
    if path.ends_with(".sds") {
        let rec = SdsRecord::parse(text).map_err(|e| wrap(path, e))?;
        let f = check_sds(path, rec.family().map_err(|e| wrap(path, e))?)?;
        return Ok(Asset {
            path: path.to_string(),
            name: rec.name,
            source: rec.source,
            kind: AssetKind::Sds(f),
        });
    }
    if !path.ends_with(".seq") {
        return Err(asset_err(path, "unknown asset extension"));
    }
    let file = SequenceFile::parse(text).map_err(|e| wrap(path, e))?;
    let name = file.attrs.get("name").cloned();
    let source = file.attrs.get("source").cloned();
    let kind = match file.role() {
        Some("golay") => {
            let fam = file.family().map_err(|e| wrap(path, e))?;
            AssetKind::Golay(GolayPair::from_family(&fam).map_err(|e| wrap(path, e))?)
        }
        Some("base") => {
            let q = BaseSequenceQuad::from_file(&file).map_err(|e| wrap(path, e))?;
            let rep = verify_base(&q);
            if !rep.holds {
                return Err(asset_err(path, "base sequence NACF sum is not a delta"));
            }
            AssetKind::Base(q)
        }
        Some("pcs") => {
            let fam = file.family().map_err(|e| wrap(path, e))?;
            if let Some(off) = is_pcs(&fam).first_offender() {
                return Err(asset_err(
                    path,
                    format!("not a PCS: shift {} residual {}", off.shift, off.residual),
                ));
            }
            AssetKind::Pcs(fam)
        }
        Some(other) => return Err(asset_err(path, format!("unknown role {other:?}"))),
        None => return Err(asset_err(path, "missing role= header")),
    };
    Ok(Asset {
        path: path.to_string(),
        name,
        source,
        kind,
    })
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Parses `CHECKSUMS`: `<sha256 hex>  <path>` per line.
pub fn parse_checksums(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(sum), Some(path), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::parse(i + 1, "expected '<sha256> <path>'"));
        };
        if sum.len() != 64 || !sum.bytes().all(|b| b.is_ascii_hexdigit()) {
            return Err(Error::parse(i + 1, format!("bad digest for {path}")));
        }
        if out.insert(path.to_string(), sum.to_ascii_lowercase()).is_some() {
            return Err(Error::parse(i + 1, format!("duplicate entry for {path}")));
        }
    }
    Ok(out)
}

/// Verifies checksums and contents of a set of `(path, text)` pairs. Every
/// file must be listed and every listed file must be present.
pub fn load_assets<'a>(files: impl IntoIterator<Item = (&'a str, &'a str)>, checksums: &str) -> Result<Vec<Asset>> {
    let sums = parse_checksums(checksums)?;
    let mut seen = BTreeMap::new();
    for (path, text) in files {
        let Some(want) = sums.get(path) else {
            return Err(asset_err(path, "not listed in CHECKSUMS"));
        };
        let got = sha256_hex(text.as_bytes());
        if &got != want {
            return Err(asset_err(path, format!("checksum mismatch: have {got}, listed {want}")));
        }
        seen.insert(path.to_string(), parse_asset(path, text)?);
    }
    if let Some(missing) = sums.keys().find(|k| !seen.contains_key(*k)) {
        return Err(asset_err(missing, "listed in CHECKSUMS but missing"));
    }
    Ok(seen.into_values().collect())
}

pub fn embedded_assets() -> Result<Vec<Asset>> {
    load_assets(EMBEDDED.iter().copied(), EMBEDDED_CHECKSUMS)
}

/// Reads `sds/*.sds` and `seq/*.seq` under `root`, plus `root/CHECKSUMS`.
pub fn dir_assets(root: &Path) -> Result<Vec<Asset>> {
    let checksums = fs::read_to_string(root.join("CHECKSUMS"))?;
    let mut files = Vec::new();
    for (sub, ext) in [("sds", "sds"), ("seq", "seq")] {
        let dir = root.join(sub);
        if !dir.is_dir() {
            continue;
        }
        for ent in fs::read_dir(&dir)? {
            let p = ent?.path();
            if p.extension().and_then(|e| e.to_str()) == Some(ext) {
                let name = p.file_name().and_then(|n| n.to_str()).unwrap_or_default().to_string();
                files.push((format!("{sub}/{name}"), fs::read_to_string(&p)?));
            }
        }
    }
    files.sort();
    load_assets(files.iter().map(|(a, b)| (a.as_str(), b.as_str())), &checksums)
}

/// The shipped base sequences BS(n+1, n).
pub fn embedded_base_sequences() -> Result<Vec<BaseSequenceQuad>> {
    Ok(embedded_assets()?
        .into_iter()
        .filter_map(|a| match a.kind {
            AssetKind::Base(q) => Some(q),
            _ => None,
        })
        .collect())
}

pub fn embedded_golay_pairs() -> Result<Vec<GolayPair>> {
    Ok(embedded_assets()?
        .into_iter()
        .filter_map(|a| match a.kind {
            AssetKind::Golay(g) => Some(g),
            _ => None,
        })
        .collect())
}

/// The ten published SDS families, each verified, converted to sequences
/// and re-checked as a PCS.
pub fn load_published_assets() -> Result<Vec<CatalogEntry>> {
    embedded_assets()?
        .iter()
        .filter(|a| a.source.as_deref() == Some(PUBLISHED_SOURCE) && matches!(a.kind, AssetKind::Sds(_)))
        .map(Asset::entry)
        .collect()
}
