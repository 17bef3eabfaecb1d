use std::fs;
use std::path::Path;

use pcs_core::sds::SdsRecord;
use pcs_core::seqcore::SequenceFile;
use pcs_core::{Error, Result};

pub enum Artifact {
    Sds(SdsRecord),
    Sequences(SequenceFile),
}

/// Decides the file kind from its first non-comment line: `{` for JSON SDS,
/// `N=`/`name=`/`source=` for text SDS, a `+`/`-` row for sequences.
pub fn detect(text: &str) -> Result<Artifact> {
    let first = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .find(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let Some((line, first)) = first else {
        return Err(Error::Parse {
            line: 1,
            msg: "file has no content".into(),
        });
    };
    if first.starts_with('{') {
        return Ok(Artifact::Sds(SdsRecord::parse_json(text)?));
    }
    if ["N=", "name=", "source="].iter().any(|k| first.starts_with(k)) {
        return Ok(Artifact::Sds(SdsRecord::parse_text(text)?));
    }
    if first.chars().all(|c| c == '+' || c == '-') {
        return Ok(Artifact::Sequences(SequenceFile::parse(text)?));
    }
    Err(Error::Parse {
        line,
        msg: "unrecognized file: expected an SDS listing or +/- sequence rows".into(),
    })
}

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}
