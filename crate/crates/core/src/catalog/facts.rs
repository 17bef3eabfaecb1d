//! Built-in existence facts and the `facts.txt` format.

use std::str::FromStr;

use super::assets::embedded_golay_pairs;
use super::entry::{CatalogEntry, Provenance, Status, Witness};
use crate::construct::{acs4_catalog, doubling_chain, Acs4Entry, GolayPair};
use crate::error::{Error, Result};
use crate::seqcore::{BinarySequence, SequenceFamily};

pub const TABLE_PMAX: usize = 12;
pub const TABLE_NMAX: usize = 50;

pub const PCS1_LENGTHS: &[usize] = &[1, 4];
pub const PCS2_LENGTHS: &[usize] = &[1, 2, 4, 8, 10, 16, 20, 26, 32, 34, 40, 50];
pub const PCS3_LENGTHS: &[usize] = &[1, 4, 8, 12, 16, 24, 28, 32, 36, 40, 44, 48];

/// Known existence for p ∈ {1, 2, 3, 5, 6}; `None` for other p.
pub fn classified(p: usize, n: usize) -> Option<bool> {
    match p {
        1 => Some(PCS1_LENGTHS.contains(&n)),
        2 => Some(PCS2_LENGTHS.contains(&n)),
        3 => Some(PCS3_LENGTHS.contains(&n)),
        5 => Some(n == 1 || n.is_multiple_of(4)),
        6 => Some(n == 1 || n.is_multiple_of(2)),
        _ => None,
    }
}

fn cited(tag: &str) -> Provenance {
    Provenance::Cited { tag: tag.to_string() }
}

fn construction(detail: impl Into<String>) -> Provenance {
    Provenance::Construction { detail: detail.into() }
}

fn classification_tag(p: usize, n: usize) -> String {
    match (p, n) {
        (2, 18) | (2, 36) => "pcs2-n18-n36-nonexistence".into(),
        (2, 34) => "pcs2-n34-examples".into(),
        (2, 50) => "pcs2-n50-periodic-pair".into(),
        (3, 20) => "pcs3-n20-nonexistence".into(),
        _ => format!("pcs{p}-classification"),
    }
}

fn all_plus_family(p: usize, n: usize) -> SequenceFamily {
    let s = BinarySequence::all_plus(n).expect("n >= 1");
    SequenceFamily::new(vec![s; p]).expect("equal lengths")
}

fn golay_entries(out: &mut Vec<CatalogEntry>) -> Result<()> {
    let g1 = GolayPair::trivial();
    out.push(CatalogEntry::with_witness(
        2,
        1,
        Witness::Sequences(g1.family()),
        construction("golay length 1"),
    ));
    let mut seeds = vec![GolayPair::length_two()];
    seeds.extend(embedded_golay_pairs()?);
    for seed in &seeds {
        for g in doubling_chain(seed, TABLE_NMAX) {
            let detail = if g.len() == seed.len() {
                format!("golay seed of length {}", g.len())
            } else {
                format!("golay doubling from length {}", seed.len())
            };
            out.push(CatalogEntry::with_witness(
                2,
                g.len(),
                Witness::Sequences(g.family()),
                construction(detail),
            ));
        }
    }
    Ok(())
}

/// Existence facts for p ≤ 12 and N ≤ 50: the classifications for
/// p ∈ {1, 2, 3, 5, 6}, the parity condition, length 1, the ACS₄ row, and
/// the Golay pairs reachable by doubling. Witnesses are attached where they
/// can be built here.
pub fn base_facts() -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for p in 1..=TABLE_PMAX {
        out.push(CatalogEntry::with_witness(
            p,
            1,
            Witness::Sequences(all_plus_family(p, 1)),
            construction("length 1"),
        ));
        for n in 2..=TABLE_NMAX {
            if (p * n) % 4 != 0 {
                out.push(CatalogEntry::new(
                    p,
                    n,
                    Status::NotExistsCited,
                    Provenance::OrderCondition,
                ));
                continue;
            }
            match classified(p, n) {
                Some(true) => out.push(CatalogEntry::new(
                    p,
                    n,
                    Status::ExistsCited,
                    cited(&classification_tag(p, n)),
                )),
                Some(false) => out.push(CatalogEntry::new(
                    p,
                    n,
                    Status::NotExistsCited,
                    cited(&classification_tag(p, n)),
                )),
                None => {}
            }
        }
    }
    out.push(CatalogEntry::with_witness(
        1,
        4,
        Witness::Sequences(SequenceFamily::new(vec!["+++-".parse()?])?),
        construction("perfect sequence +++-"),
    ));
    golay_entries(&mut out)?;
    for n in 1..=TABLE_NMAX {
        out.push(match acs4_catalog(n)? {
            Acs4Entry::Witness { family, derivation } => {
                CatalogEntry::with_witness(4, n, Witness::Sequences(family), construction(derivation.join("; ")))
            }
            Acs4Entry::Cited { .. } => CatalogEntry::new(4, n, Status::ExistsCited, cited("acs4-base-sequences")),
        });
    }
    Ok(out)
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "order-condition" {
            return Ok(Provenance::OrderCondition);
        }
        let Some((kind, rest)) = s.split_once(':') else {
            return Err(Error::parse(1, format!("bad provenance {s:?}")));
        };
        if rest.is_empty() {
            return Err(Error::parse(1, format!("empty provenance value in {s:?}")));
        }
        Ok(match kind {
            "asset" => Provenance::Asset { path: rest.into() },
            "cited" => Provenance::Cited { tag: rest.into() },
            "construction" => Provenance::Construction { detail: rest.into() },
            "search" => Provenance::SearchRun { id: rest.into() },
            "composition" => Provenance::Composition {
                parts: rest
                    .split('+')
                    .map(|x| x.parse().map_err(|_| Error::parse(1, format!("bad part {x:?}"))))
                    .collect::<Result<_>>()?,
            },
            other => return Err(Error::parse(1, format!("unknown provenance kind {other:?}"))),
        })
    }
}

/// Parses `facts.txt`: `p N status provenance` per line, `#` comments.
///
/// Witness statuses are refused here (witnesses live in asset files) and
/// `not-exists-exhausted` must name a search run.
pub fn parse_facts(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [p, n, status, prov] = toks[..] else {
            return Err(Error::parse(line_no, "expected 'p N status provenance'"));
        };
        let num = |t: &str| {
            t.parse::<usize>()
                .ok()
                .filter(|&v| v >= 1)
                .ok_or_else(|| Error::parse(line_no, format!("bad number {t:?}")))
        };
        let relabel = |e: Error| match e {
            Error::Parse { msg, .. } => Error::parse(line_no, msg),
            other => other,
        };
        let (p, n) = (num(p)?, num(n)?);
        let status: Status = status.parse().map_err(relabel)?;
        let prov: Provenance = prov.parse().map_err(relabel)?;
        if status == Status::ExistsWitness {
            return Err(Error::parse(line_no, "witnessed facts must come from asset files"));
        }
        if status == Status::NotExistsExhausted && !matches!(prov, Provenance::SearchRun { .. }) {
            return Err(Error::parse(
                line_no,
                "exhausted facts need a search:<run id> provenance",
            ));
        }
        out.push(CatalogEntry::new(p, n, status, prov));
    }
    Ok(out)
}

pub fn render_facts(entries: &[CatalogEntry]) -> String {
    entries
        .iter()
        .map(|e| format!("{} {} {} {}\n", e.p, e.n, e.status, e.provenance))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqcore::is_pcs;

    fn find(facts: &[CatalogEntry], p: usize, n: usize) -> Vec<&CatalogEntry> {
        facts.iter().filter(|e| e.p == p && e.n == n).collect()
    }

    #[test]
    fn examples() {
        let facts = base_facts().unwrap();
        assert!(find(&facts, 1, 4).iter().any(|e| e.status == Status::ExistsWitness));
        assert!(find(&facts, 3, 20).iter().all(|e| e.status == Status::NotExistsCited));
        assert!(!find(&facts, 3, 20).is_empty());
        let c = find(&facts, 2, 34);
        assert!(c.iter().all(|e| e.status == Status::ExistsCited) && !c.is_empty());
        for e in find(&facts, 2, 18).into_iter().chain(find(&facts, 2, 36)) {
            assert_eq!(e.status, Status::NotExistsCited);
        }
    }

    #[test]
    fn witnesses_are_pcs() {
        for e in base_facts().unwrap() {
            if let Some(w) = &e.witness {
                let f = w.sequences().unwrap();
                assert_eq!((f.size(), f.length()), (e.p, e.n));
                assert!(is_pcs(&f).holds, "({}, {})", e.p, e.n);
            }
        }
    }

    #[test]
    fn facts_file_round_trip() {
        let text = "# header\n1 8 not-exists-exhausted search:0011223344556677\n2 34 exists-cited cited:x\n";
        let f = parse_facts(text).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(parse_facts(&render_facts(&f)).unwrap(), f);
        assert!(parse_facts("1 8 not-exists-exhausted cited:x\n").is_err());
        assert!(parse_facts("1 8 exists-witness cited:x\n").is_err());
        assert!(matches!(parse_facts("\n1 8 open\n"), Err(Error::Parse { line: 2, .. })));
    }
}
