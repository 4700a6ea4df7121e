//! Scenario-file driver: parsing, reports and the self-test corpus.

pub mod report;
pub mod scenario;
pub mod selftest;

use std::path::Path;

use valring::Error;

pub use scenario::{ScenarioError, ScenarioFile};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const PARSE: i32 = 1;
    pub const CAPABILITY: i32 = 2;
    pub const PRECONDITION: i32 = 3;
    pub const SELFTEST: i32 = 4;
}

/// What a command printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: exit::OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Outcome {
        Outcome { code, stdout: String::new(), stderr }
    }
}

/// Exit code of an engine error: invalid input counts as a parse failure.
pub fn code_of(e: &Error) -> i32 {
    match e {
        Error::Capability(_) => exit::CAPABILITY,
        Error::Precondition(_) => exit::PRECONDITION,
        Error::Parse(_) | Error::Domain(_) | Error::Structural(_) => exit::PARSE,
    }
}

fn from_scenario_error(e: ScenarioError) -> Outcome {
    Outcome::fail(code_of(&e.error), format!("error: {e}\n"))
}

fn load(path: &Path) -> Result<(ScenarioFile, scenario::LineMap), Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::fail(exit::PARSE, format!("error: cannot read {}: {e}\n", path.display())))?;
    ScenarioFile::parse_with_lines(&text).map_err(from_scenario_error)
}

pub fn cmd_decompose(path: &Path) -> Outcome {
    let (file, lines) = match load(path) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let towers = match file.towers(&lines) {
        Ok(t) => t,
        Err(e) => return from_scenario_error(e),
    };
    match report::decompose_report(&towers) {
        Ok(s) => Outcome::ok(s),
        Err(e) => Outcome::fail(code_of(&e), format!("error: {e}\n")),
    }
}

pub fn cmd_extend(path: &Path, verify: bool, point: Option<usize>, truncation: Option<u32>) -> Outcome {
    let (file, lines) = match load(path) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let scn = match file.extension(&lines, point, truncation) {
        Ok(s) => s,
        Err(e) => return from_scenario_error(e),
    };
    match report::extend_report(&scn, verify, file.seed()) {
        Ok(s) => Outcome::ok(s),
        Err(e) => Outcome::fail(code_of(&e), format!("error: {e}\n")),
    }
}

pub fn cmd_selftest(seed: u64, corpus: Option<&Path>) -> Outcome {
    let text = match corpus {
        None => selftest::CORPUS.to_string(),
        Some(p) => match std::fs::read_to_string(p) {
            Ok(t) => t,
            Err(e) => return Outcome::fail(exit::PARSE, format!("error: cannot read {}: {e}\n", p.display())),
        },
    };
    let (report, ok) = selftest::selftest(seed, &text);
    if ok {
        Outcome::ok(report)
    } else {
        Outcome { code: exit::SELFTEST, stdout: report, stderr: String::new() }
    }
}
