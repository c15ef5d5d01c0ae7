//! Portrait documents: a small TOML file naming the Fatou and Julia sets.
//!
//! ```toml
//! degree = 3
//! fatou = [["1/4", "7/12"], ["3/4", "1/12"]]
//! julia = []
//! ```
//!
//! `degree` and `gamma` are optional. A `[render]` table may set `radius`
//! and `labels`.

use std::fmt::Write as _;

use critport_core::{Angle, CriticalPortrait, Error as CoreError};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("{0}")]
    Syntax(String),
    #[error("{field}: {source}")]
    Angle {
        field: String,
        #[source]
        source: CoreError,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    degree: Option<u32>,
    #[serde(default)]
    fatou: Vec<Vec<String>>,
    #[serde(default)]
    julia: Vec<Vec<String>>,
    gamma: Option<Vec<String>>,
    render: Option<RawRender>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRender {
    radius: Option<u32>,
    labels: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    pub radius: Option<u32>,
    pub labels: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PortraitDocument {
    pub degree: Option<u32>,
    pub fatou: Vec<Vec<Angle>>,
    pub julia: Vec<Vec<Angle>>,
    pub gamma: Option<Vec<Angle>>,
    pub render: RenderOptions,
}

fn parse_list(field: &str, raw: &[String]) -> Result<Vec<Angle>, DocumentError> {
    raw.iter()
        .enumerate()
        .map(|(i, s)| {
            s.trim().parse::<Angle>().map_err(|source| DocumentError::Angle {
                field: format!("{field}[{i}]"),
                source,
            })
        })
        .collect()
}

fn parse_family(field: &str, raw: &[Vec<String>]) -> Result<Vec<Vec<Angle>>, DocumentError> {
    raw.iter()
        .enumerate()
        .map(|(i, set)| parse_list(&format!("{field}[{i}]"), set))
        .collect()
}

impl PortraitDocument {
    pub fn parse(text: &str) -> Result<PortraitDocument, DocumentError> {
        let raw: RawDocument =
            toml::from_str(text).map_err(|e| DocumentError::Syntax(e.to_string().trim_end().to_string()))?;
        let render = raw
            .render
            .map(|r| RenderOptions {
                radius: r.radius,
                labels: r.labels,
            })
            .unwrap_or_default();
        Ok(PortraitDocument {
            degree: raw.degree,
            fatou: parse_family("fatou", &raw.fatou)?,
            julia: parse_family("julia", &raw.julia)?,
            gamma: raw.gamma.as_deref().map(|g| parse_list("gamma", g)).transpose()?,
            render,
        })
    }

    /// Canonical text: fixed key order, one line per key, sets kept in the
    /// order given.
    pub fn serialize(&self) -> String {
        fn list(angles: &[Angle]) -> String {
            let inner: Vec<String> = angles.iter().map(|a| format!("\"{a}\"")).collect();
            format!("[{}]", inner.join(", "))
        }
        fn family(sets: &[Vec<Angle>]) -> String {
            let inner: Vec<String> = sets.iter().map(|s| list(s)).collect();
            format!("[{}]", inner.join(", "))
        }
        let mut out = String::new();
        if let Some(d) = self.degree {
            let _ = writeln!(out, "degree = {d}");
        }
        let _ = writeln!(out, "fatou = {}", family(&self.fatou));
        let _ = writeln!(out, "julia = {}", family(&self.julia));
        if let Some(g) = &self.gamma {
            let _ = writeln!(out, "gamma = {}", list(g));
        }
        if self.render != RenderOptions::default() {
            let _ = writeln!(out, "\n[render]");
            if let Some(r) = self.render.radius {
                let _ = writeln!(out, "radius = {r}");
            }
            if let Some(l) = self.render.labels {
                let _ = writeln!(out, "labels = {l}");
            }
        }
        out
    }

    /// Validates the sets and the declared degree.
    pub fn portrait(&self) -> Result<CriticalPortrait, CoreError> {
        let portrait = CriticalPortrait::new(self.fatou.clone(), self.julia.clone())?;
        match self.degree {
            Some(declared) if declared != portrait.degree() => Err(CoreError::DegreeMismatch {
                declared,
                computed: portrait.degree(),
            }),
            _ => Ok(portrait),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const LEVY: &str = "degree = 3\nfatou = [[\"1/4\", \"7/12\"], [\"3/4\", \"1/12\"]]\njulia = []\n";

    #[test]
    fn canonical_text_round_trips() {
        let doc = PortraitDocument::parse(LEVY).unwrap();
        assert_eq!(doc.serialize(), LEVY);
        assert_eq!(doc.portrait().unwrap().degree(), 3);
    }

    #[test]
    fn render_table_round_trips() {
        let text = "fatou = [[\"0\", \"1/2\"]]\njulia = []\ngamma = []\n\n[render]\nradius = 120\nlabels = false\n";
        let doc = PortraitDocument::parse(text).unwrap();
        assert_eq!(doc.render.radius, Some(120));
        assert_eq!(doc.serialize(), text);
    }

    #[test]
    fn bad_angles_name_their_field() {
        let err = PortraitDocument::parse("fatou = [[\"1/4\", \"2/4\"]]\n").unwrap_err();
        assert!(err.to_string().starts_with("fatou[0][1]: invalid angle"), "{err}");
    }

    #[test]
    fn syntax_errors_carry_a_line() {
        let err = PortraitDocument::parse("fatou = [[\"1/4\"\n").unwrap_err();
        assert!(matches!(err, DocumentError::Syntax(_)));
        assert!(err.to_string().contains("line"), "{err}");
    }

    #[test]
    fn degree_mismatch() {
        let doc = PortraitDocument::parse("degree = 4\nfatou = [[\"0\", \"1/2\"]]\n").unwrap();
        assert_eq!(
            doc.portrait(),
            Err(CoreError::DegreeMismatch {
                declared: 4,
                computed: 2
            })
        );
    }
}
