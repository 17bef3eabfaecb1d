//! Text encoding of sequences: one `+`/`-` string per line, optionally
//! preceded by `#` comment lines. Comment lines may carry `key=value`
//! attributes (for example `# role=golay`).

use std::collections::BTreeMap;

use super::{BinarySequence, SequenceFamily};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SequenceFile {
    pub comments: Vec<String>,
    pub attrs: BTreeMap<String, String>,
    pub rows: Vec<BinarySequence>,
}

impl SequenceFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut file = SequenceFile::default();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim_end_matches('\r');
            if let Some(comment) = line.strip_prefix('#') {
                if !file.rows.is_empty() {
                    return Err(Error::parse(line_no, "comment after sequence data"));
                }
                let comment = comment.trim();
                for tok in comment.split_whitespace() {
                    if let Some((k, v)) = tok.split_once('=') {
                        file.attrs.insert(k.to_string(), v.to_string());
                    }
                }
                file.comments.push(comment.to_string());
                continue;
            }
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line.parse::<BinarySequence>().map_err(|e| match e {
                Error::Parse { msg, .. } => Error::parse(line_no, msg),
                other => Error::parse(line_no, other.to_string()),
            })?;
            file.rows.push(row);
        }
        if file.rows.is_empty() {
            return Err(Error::parse(text.lines().count().max(1), "no sequence rows"));
        }
        Ok(file)
    }

    pub fn role(&self) -> Option<&str> {
        self.attrs.get("role").map(String::as_str)
    }

    pub fn attr_usize(&self, key: &str) -> Result<Option<usize>> {
        self.attrs
            .get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Error::parse(1, format!("attribute {key}={v} is not an integer")))
            })
            .transpose()
    }

    /// Interprets all rows as one equal-length family.
    pub fn family(&self) -> Result<SequenceFamily> {
        SequenceFamily::new(self.rows.clone())
    }

    pub fn from_family(family: &SequenceFamily) -> Self {
        Self {
            rows: family.members().to_vec(),
            ..Self::default()
        }
    }

    pub fn with_comment(mut self, comment: impl Into<String>) -> Self {
        let comment = comment.into();
        for tok in comment.split_whitespace() {
            if let Some((k, v)) = tok.split_once('=') {
                self.attrs.insert(k.to_string(), v.to_string());
            }
        }
        self.comments.push(comment);
        self
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        for r in &self.rows {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }
}

/// Renders a family without header lines.
pub fn render_family(family: &SequenceFamily) -> String {
    SequenceFile::from_family(family).render()
}

/// Parses a family file (equal-length rows).
pub fn parse_family(text: &str) -> Result<SequenceFamily> {
    SequenceFile::parse(text)?.family()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_header_and_rows() {
        let f = SequenceFile::parse("# role=golay source=doubling\n++\n+-\n").unwrap();
        assert_eq!(f.role(), Some("golay"));
        assert_eq!(f.rows.len(), 2);
        assert_eq!(f.render(), "# role=golay source=doubling\n++\n+-\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            SequenceFile::parse("++\n+*\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(SequenceFile::parse("# only a comment\n").is_err());
        assert!(SequenceFile::parse("++\n# late\n").is_err());
        assert!(parse_family("++\n+\n").is_err());
    }
}
