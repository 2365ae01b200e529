//! Design files: a plain text form and a JSON form.
//!
//! Text:
//!
//! ```text
//! TTS v=4
//! 0 1 2
//! 0 1 3
//! 0 2 3
//! 1 2 3
//! # cycle: 0 1 3 2
//! ```
//!
//! JSON: `{"v": 4, "blocks": [[0,1,2], ...], "hamilton_2big": [...], "trace": {...}}`
//! with the last two keys optional.

use std::fmt::Write as _;

use graytts::spectrum::ConstructionTrace;
use graytts::{HamiltonCertificate, TripleSystem};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Txt,
    Json,
}

/// The parsed contents of a design file, before any validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignFile {
    pub v: u32,
    pub blocks: Vec<[u32; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hamilton_2big: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<serde_json::Value>,
}

impl DesignFile {
    /// Canonical form: blocks sorted, certificate re-indexed to match.
    pub fn canonical(ts: &TripleSystem, cert: Option<&HamiltonCertificate>, trace: Option<&ConstructionTrace>) -> DesignFile {
        let mut idx: Vec<usize> = (0..ts.block_count()).collect();
        idx.sort_by_key(|&i| ts.blocks()[i]);
        let mut new_index = vec![0; idx.len()];
        for (pos, &old) in idx.iter().enumerate() {
            new_index[old] = pos;
        }
        DesignFile {
            v: ts.order(),
            blocks: idx.iter().map(|&i| ts.blocks()[i].points()).collect(),
            hamilton_2big: cert.map(|c| c.remap(&new_index).order().to_vec()),
            trace: trace.map(|t| serde_json::to_value(t).expect("traces serialize")),
        }
    }

    pub fn design(&self) -> graytts::Result<TripleSystem> {
        TripleSystem::from_arrays(self.v, &self.blocks)
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string(self).expect("design files serialize");
                s.push('\n');
                s
            }
            Format::Txt => {
                let mut s = format!("TTS v={}\n", self.v);
                for b in &self.blocks {
                    let _ = writeln!(s, "{} {} {}", b[0], b[1], b[2]);
                }
                if let Some(c) = &self.hamilton_2big {
                    let list: Vec<String> = c.iter().map(|i| i.to_string()).collect();
                    let _ = writeln!(s, "# cycle: {}", list.join(" "));
                }
                s
            }
        }
    }

    /// Reads either form; JSON is recognised by a leading `{`.
    pub fn parse(text: &str) -> Result<DesignFile, String> {
        if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| format!("invalid JSON design: {e}"))
        } else {
            parse_txt(text)
        }
    }
}

fn parse_txt(text: &str) -> Result<DesignFile, String> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or("empty file")?;
    let v = header
        .trim()
        .strip_prefix("TTS v=")
        .and_then(|n| n.trim().parse().ok())
        .ok_or_else(|| format!("line 1: expected `TTS v=<order>`, got `{header}`"))?;
    let mut file = DesignFile { v, blocks: Vec::new(), hamilton_2big: None, trace: None };
    for (n, line) in lines {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(list) = rest.trim().strip_prefix("cycle:") {
                let cycle = list
                    .split_whitespace()
                    .map(|w| w.parse().map_err(|_| format!("line {}: bad index `{w}`", n + 1)))
                    .collect::<Result<Vec<usize>, String>>()?;
                file.hamilton_2big = Some(cycle);
            }
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|w| w.parse().map_err(|_| format!("line {}: bad point `{w}`", n + 1)))
            .collect::<Result<Vec<u32>, String>>()?;
        let block: [u32; 3] = nums.try_into().map_err(|_| format!("line {}: a block needs three points", n + 1))?;
        file.blocks.push(block);
    }
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;
    use graytts::base::BaseLibrary;

    #[test]
    fn both_forms_round_trip() {
        for v in BaseLibrary::ORDERS {
            let (ts, cert) = BaseLibrary::get(v).unwrap();
            let file = DesignFile::canonical(&ts, Some(&cert), None);
            for format in [Format::Txt, Format::Json] {
                let text = file.emit(format);
                let back = DesignFile::parse(&text).unwrap();
                assert_eq!(back, file);
                assert_eq!(back.emit(format), text);
            }
            let design = file.design().unwrap();
            let back_cert = HamiltonCertificate::new(file.hamilton_2big.clone().unwrap());
            assert!(graytts::verify_certificate(&design, &back_cert).unwrap());
        }
    }

    #[test]
    fn malformed_text_is_reported() {
        assert!(DesignFile::parse("").is_err());
        assert!(DesignFile::parse("TTS v=x\n").is_err());
        assert!(DesignFile::parse("TTS v=4\n0 1\n").is_err());
        assert!(DesignFile::parse("TTS v=4\n0 1 2\n# cycle: 0 a\n").is_err());
        assert!(DesignFile::parse("{\"v\": 4}").is_err());
    }
}
