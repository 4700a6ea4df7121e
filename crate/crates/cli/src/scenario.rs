//! Line-oriented scenario files.
//!
//! ```text
//! # comment
//! [base]
//! base: F2
//! gens: a: transcendental
//!
//! [valuation]
//! gens: r: algebraic y^2 + a
//! vars: x
//! order: lex
//!
//! [extension]
//! kprime-gens: s: algebraic y^2 + a
//!
//! [options]
//! truncation-N: 1
//! point-index: 0
//! seed: 0
//! ```

use std::collections::BTreeMap;
use std::fmt;

use valring::extension::ExtensionScenario;
use valring::{Error, Field, MonomialValuation};

/// Parsed scenario, independent of line positions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScenarioFile {
    pub base: String,
    /// Steps of `k` over the prime field, each `name: kind`.
    pub base_gens: Vec<String>,
    /// Steps of the residue field `F` over `k`.
    pub field_gens: Vec<String>,
    pub vars: Vec<String>,
    pub order: Option<String>,
    /// Steps of `k'` over `k`.
    pub kprime_gens: Vec<String>,
    pub truncation: Option<u32>,
    pub point_index: Option<usize>,
    pub seed: Option<u64>,
}

/// A problem tied to a line of the file (0 when no line applies).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioError {
    pub line: usize,
    pub error: Error,
}

impl fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.error)
        } else {
            write!(f, "line {}: {}", self.line, self.error)
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> ScenarioError {
    ScenarioError { line, error: Error::Parse(msg.into()) }
}

const SECTIONS: [(&str, &[&str]); 4] = [
    ("base", &["base", "gens"]),
    ("valuation", &["gens", "vars", "order"]),
    ("extension", &["kprime-gens"]),
    ("options", &["truncation-N", "point-index", "seed"]),
];

/// Line of every key, as `section.key`.
pub type LineMap = BTreeMap<String, usize>;

fn split_steps(text: &str) -> Vec<String> {
    text.split(';').map(|s| s.split_whitespace().collect::<Vec<_>>().join(" ")).filter(|s| !s.is_empty()).collect()
}

fn split_vars(text: &str) -> Vec<String> {
    text.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<ScenarioFile, ScenarioError> {
        Self::parse_with_lines(text).map(|(s, _)| s)
    }

    pub fn parse_with_lines(text: &str) -> Result<(ScenarioFile, LineMap), ScenarioError> {
        let mut out = ScenarioFile::default();
        let mut lines = LineMap::new();
        let mut section: Option<&'static str> = None;
        for (i, raw) in text.lines().enumerate() {
            let n = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                let Some((s, _)) = SECTIONS.iter().find(|(s, _)| *s == name.trim()) else {
                    return Err(parse_err(n, format!("unknown section `[{name}]`")));
                };
                section = Some(s);
                continue;
            }
            let Some(sec) = section else {
                return Err(parse_err(n, "key outside of a section"));
            };
            let Some((key, value)) = line.split_once(':') else {
                return Err(parse_err(n, format!("expected `key: value`, found `{line}`")));
            };
            let (key, value) = (key.trim(), value.trim());
            let allowed = SECTIONS.iter().find(|(s, _)| *s == sec).unwrap().1;
            if !allowed.contains(&key) {
                return Err(parse_err(n, format!("unknown key `{key}` in section [{sec}]")));
            }
            let full = format!("{sec}.{key}");
            if lines.insert(full.clone(), n).is_some() {
                return Err(parse_err(n, format!("duplicate key `{key}` in section [{sec}]")));
            }
            let number = |what: &str| -> Result<u64, ScenarioError> {
                value.parse::<u64>().map_err(|_| parse_err(n, format!("{what} must be a non-negative integer, found `{value}`")))
            };
            match full.as_str() {
                "base.base" => out.base = value.to_string(),
                "base.gens" => out.base_gens = split_steps(value),
                "valuation.gens" => out.field_gens = split_steps(value),
                "valuation.vars" => out.vars = split_vars(value),
                "valuation.order" => {
                    if value != "lex" {
                        return Err(parse_err(n, format!("unsupported order `{value}`; only lex")));
                    }
                    out.order = Some(value.to_string());
                }
                "extension.kprime-gens" => out.kprime_gens = split_steps(value),
                "options.truncation-N" => {
                    out.truncation = Some(u32::try_from(number("truncation-N")?).map_err(|_| parse_err(n, "truncation-N too large"))?)
                }
                "options.point-index" => out.point_index = Some(number("point-index")? as usize),
                "options.seed" => out.seed = Some(number("seed")?),
                _ => unreachable!(),
            }
        }
        if out.base.is_empty() {
            return Err(parse_err(0, "missing `base` in section [base]"));
        }
        Ok((out, lines))
    }

    /// Canonical text; `parse(print(s)) == s`.
    pub fn print(&self) -> String {
        let mut s = String::new();
        s.push_str("[base]\n");
        s.push_str(&format!("base: {}\n", self.base));
        if !self.base_gens.is_empty() {
            s.push_str(&format!("gens: {}\n", self.base_gens.join("; ")));
        }
        if !self.field_gens.is_empty() || !self.vars.is_empty() || self.order.is_some() {
            s.push_str("\n[valuation]\n");
            if !self.field_gens.is_empty() {
                s.push_str(&format!("gens: {}\n", self.field_gens.join("; ")));
            }
            if !self.vars.is_empty() {
                s.push_str(&format!("vars: {}\n", self.vars.join(", ")));
            }
            if let Some(o) = &self.order {
                s.push_str(&format!("order: {o}\n"));
            }
        }
        if !self.kprime_gens.is_empty() {
            s.push_str("\n[extension]\n");
            s.push_str(&format!("kprime-gens: {}\n", self.kprime_gens.join("; ")));
        }
        if self.truncation.is_some() || self.point_index.is_some() || self.seed.is_some() {
            s.push_str("\n[options]\n");
            if let Some(n) = self.truncation {
                s.push_str(&format!("truncation-N: {n}\n"));
            }
            if let Some(i) = self.point_index {
                s.push_str(&format!("point-index: {i}\n"));
            }
            if let Some(x) = self.seed {
                s.push_str(&format!("seed: {x}\n"));
            }
        }
        s
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }

    pub fn has_valuation(&self) -> bool {
        !self.vars.is_empty()
    }
}

/// The three towers `k ⊂ F` and `k ⊂ k'` of a scenario.
#[derive(Clone, Debug)]
pub struct Towers {
    pub k: Field,
    pub f: Field,
    pub kprime: Field,
}

fn extend(field: &Field, steps: &[String], line: usize) -> Result<Field, ScenarioError> {
    let mut cur = field.clone();
    for step in steps {
        cur = Field::parse_step(&cur, &format!("gen {step}")).map_err(|error| ScenarioError { line, error })?;
    }
    Ok(cur)
}

impl ScenarioFile {
    pub fn towers(&self, lines: &LineMap) -> Result<Towers, ScenarioError> {
        let at = |key: &str| lines.get(key).copied().unwrap_or(0);
        let prime = valring::field::parse::parse_base(&self.base).map_err(|error| ScenarioError { line: at("base.base"), error })?;
        let k = extend(&prime, &self.base_gens, at("base.gens"))?;
        let f = extend(&k, &self.field_gens, at("valuation.gens"))?;
        let kprime = extend(&k, &self.kprime_gens, at("extension.kprime-gens"))?;
        Ok(Towers { k, f, kprime })
    }

    /// The extension scenario; command-line overrides replace the file's
    /// options.
    pub fn extension(&self, lines: &LineMap, point: Option<usize>, truncation: Option<u32>) -> Result<ExtensionScenario, ScenarioError> {
        let t = self.towers(lines)?;
        let line = lines.get("valuation.vars").copied().unwrap_or(0);
        if self.vars.is_empty() {
            return Err(parse_err(line, "an extension scenario needs `vars` in section [valuation]"));
        }
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        let val = MonomialValuation::new(&t.f, &vars).map_err(|error| ScenarioError { line, error })?;
        let scn = ExtensionScenario::new(&t.k, &val, &t.kprime)
            .map_err(|error| ScenarioError { line: lines.get("extension.kprime-gens").copied().unwrap_or(0), error })?;
        Ok(scn.with_point(point.or(self.point_index).unwrap_or(0)).with_truncation(truncation.or(self.truncation)))
    }
}
