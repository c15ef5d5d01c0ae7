//! The subcommands, as functions from parsed inputs to report text.

use std::fmt::Write as _;

use critport_core::angle::format_set;
use critport_core::portrait::{parse_family, verify_prop_1_2};
use critport_core::twist::solve_cycle_twists;
use critport_core::web::{check_levy, pullback_arcs, Web, WebMap};
use critport_core::{AddressSystem, Angle, Error as CoreError, MarkedPartition, Rational};
use thiserror::Error;

use crate::document::{DocumentError, PortraitDocument};
use crate::svg::{render, RenderSpec};

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("{0}")]
    Document(#[from] DocumentError),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(#[from] CoreError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CommandError {
    /// 1 for inputs that parse but fail validation, 2 for everything that
    /// could not be read or parsed.
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Invalid(_) => 1,
            _ => 2,
        }
    }
}

/// A report, plus whether it describes a failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub failed: bool,
}

impl Report {
    fn ok(text: String) -> Report {
        Report { text, failed: false }
    }
}

/// Where Γ comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaChoice {
    /// The document's `gamma` if present, otherwise generated.
    Auto,
    None,
    Given(Vec<Angle>),
}

/// Angles separated by commas or whitespace, optionally inside braces.
pub fn parse_angle_list(text: &str) -> Result<Vec<Angle>, CommandError> {
    text.trim()
        .trim_start_matches('{')
        .trim_end_matches('}')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Angle>().map_err(|e| CommandError::Parse(e.to_string())))
        .collect()
}

struct Prepared {
    sys: AddressSystem,
    gamma: Vec<Angle>,
}

fn prepare(doc: &PortraitDocument, choice: &GammaChoice) -> Result<Prepared, CommandError> {
    let sys = AddressSystem::new(doc.portrait()?);
    let gamma = match choice {
        GammaChoice::Auto => match &doc.gamma {
            Some(g) => g.clone(),
            None => sys.gen_special_arguments(),
        },
        GammaChoice::None => Vec::new(),
        GammaChoice::Given(g) => g.clone(),
    };
    sys.check_special_arguments(&gamma)?;
    Ok(Prepared { sys, gamma })
}

pub fn validate(doc: &PortraitDocument, choice: &GammaChoice) -> Result<Report, CommandError> {
    let p = prepare(doc, choice)?;
    let jstar = p.sys.build_jstar(&p.gamma)?;
    let fstar = p.sys.build_fstar(&p.gamma)?;
    if let Some(w) = verify_prop_1_2(&jstar, &fstar) {
        return Err(w.into_error().into());
    }
    Ok(Report::ok(format!(
        "degree={}; unlinked PASS; c2 PASS; prop1.2 PASS\n",
        p.sys.degree()
    )))
}

pub fn classes(doc: &PortraitDocument, choice: &GammaChoice) -> Result<Report, CommandError> {
    let p = prepare(doc, choice)?;
    let fstar = p.sys.build_fstar(&p.gamma)?;
    let jstar = p.sys.build_jstar(&p.gamma)?;
    Ok(Report::ok(format!(
        "Γ = {}\nF* = {fstar}\nJ* = {jstar}\n",
        format_set(&p.gamma)
    )))
}

pub fn web(doc: &PortraitDocument, choice: &GammaChoice) -> Result<Report, CommandError> {
    let p = prepare(doc, choice)?;
    let web = Web::new(p.sys.build_fstar(&p.gamma)?, p.sys.build_jstar(&p.gamma)?)?;
    let map = WebMap::new(&web, &p.sys)?;
    Ok(Report::ok(format!("{}{}", web.to_text(), map.to_text(&web))))
}

/// Checks `partition` (set-of-sets text), or J* when none is given.
pub fn levy(
    doc: &PortraitDocument,
    choice: &GammaChoice,
    partition: Option<&str>,
) -> Result<Report, CommandError> {
    let p = prepare(doc, choice)?;
    let candidate = match partition {
        Some(text) => MarkedPartition::julia(parse_family(text).map_err(|e| CommandError::Parse(e.to_string()))?)?,
        None => p.sys.build_jstar(&p.gamma)?,
    };
    let report = check_levy(&p.sys, &candidate, &p.gamma)?;
    Ok(Report {
        text: report.to_string(),
        failed: !report.is_empty(),
    })
}

pub fn twist(degrees: &str, differences: &str) -> Result<Report, CommandError> {
    let degrees: Vec<u32> = degrees
        .split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|e| CommandError::Parse(format!("degree {s:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    let differences: Vec<Rational> = differences
        .split(',')
        .map(|s| s.trim().parse::<Rational>().map_err(|e| CommandError::Parse(format!("difference {s:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    let system = solve_cycle_twists(&degrees, &differences)?;
    let mut text = String::new();
    for (i, x) in system.solution.iter().enumerate() {
        let _ = writeln!(text, "x_{i} = {x}");
    }
    let _ = writeln!(text, "D = {}", system.total_degree);
    Ok(Report::ok(text))
}

pub fn pullback(doc: &PortraitDocument, theta: &str, n: u32) -> Result<Report, CommandError> {
    let theta: Angle = theta.parse().map_err(|e: CoreError| CommandError::Parse(e.to_string()))?;
    let sys = AddressSystem::new(doc.portrait()?);
    Ok(Report::ok(pullback_arcs(&sys, theta, n).to_string()))
}

pub fn svg(doc: &PortraitDocument, choice: &GammaChoice, spec: &RenderSpec) -> Result<Report, CommandError> {
    let p = prepare(doc, choice)?;
    let jstar = p.sys.build_jstar(&p.gamma)?;
    Ok(Report::ok(render(&p.sys, &jstar, &p.gamma, spec)))
}

#[cfg(test)]
mod tests {
    use super::*;

    const LEVY: &str = "fatou = [[\"1/4\", \"7/12\"], [\"3/4\", \"1/12\"]]\njulia = []\n";

    fn doc(text: &str) -> PortraitDocument {
        PortraitDocument::parse(text).unwrap()
    }

    #[test]
    fn validate_reports() {
        assert_eq!(
            validate(&doc(LEVY), &GammaChoice::Auto).unwrap().text,
            "degree=3; unlinked PASS; c2 PASS; prop1.2 PASS\n"
        );
        let err = validate(&doc("fatou = [[\"0\", \"1/2\"]]\njulia = [[\"1/4\", \"3/4\"]]\n"), &GammaChoice::Auto)
            .unwrap_err();
        assert_eq!(err.to_string(), "linked sets: {0,1/2} vs {1/4,3/4}");
        assert_eq!(err.exit_code(), 1);
        let err = validate(&doc("fatou = []\njulia = []\n"), &GammaChoice::Auto).unwrap_err();
        assert_eq!(err.to_string(), "degree < 2");
    }

    #[test]
    fn classes_report() {
        let text = classes(&doc(LEVY), &GammaChoice::Auto).unwrap().text;
        assert_eq!(
            text,
            "Γ = {13/36,31/36}\nF* = {{1/4,13/36,7/12},{3/4,31/36,1/12}}\nJ* = {{0},{1/12},{1/4,3/4},{13/36},{7/12},{31/36}}\n"
        );
        let cube = doc("fatou = [[\"0\", \"1/3\", \"2/3\"]]\n");
        assert!(classes(&cube, &GammaChoice::None).unwrap().text.contains("J* = {{0},{1/3},{2/3}}\n"));
    }

    #[test]
    fn given_gamma_is_still_checked() {
        let err = classes(&doc(LEVY), &GammaChoice::Given(vec![Angle::new(1, 3).unwrap()])).unwrap_err();
        assert!(matches!(err, CommandError::Invalid(CoreError::GammaNotInvariant { .. })));
    }

    #[test]
    fn levy_reports() {
        let split = "{{0},{1/12},{1/4},{3/4},{13/36},{7/12},{31/36}}";
        let report = levy(&doc(LEVY), &GammaChoice::Auto, Some(split)).unwrap();
        assert_eq!(report.text, "LEVY WITNESS: (1/4, 3/4)\n");
        assert!(report.failed);
        assert!(!levy(&doc(LEVY), &GammaChoice::Auto, None).unwrap().failed);
    }

    #[test]
    fn twist_report() {
        assert_eq!(twist("3", "1").unwrap().text, "x_0 = 3/2\nD = 3\n");
        assert_eq!(twist("2,2", "1/2, 1/2").unwrap().text, "x_0 = 1\nx_1 = 1\nD = 4\n");
        assert_eq!(twist("3", "x").unwrap_err().exit_code(), 2);
        assert_eq!(twist("2,2", "1").unwrap_err().exit_code(), 1);
    }

    #[test]
    fn pullback_report() {
        let text = pullback(&doc(LEVY), "1/4", 4).unwrap().text;
        assert!(text.contains("total length = 1/81\n"), "{text}");
    }

    #[test]
    fn angle_lists() {
        let v = parse_angle_list("{13/36, 31/36}\n").unwrap();
        assert_eq!(v.len(), 2);
        assert!(parse_angle_list("").unwrap().is_empty());
    }
}
