//! Seeded randomized verification of the algebraic identities.
//!
//! Every instance is a pure function of (seed, suite, index). Instances run
//! in parallel and the report is assembled in index order, so output is
//! byte-identical across runs.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub mod gen;
mod suites;

use gen::Gen;
use suites::{SuiteDef, SUITES};

/// Bounds for random instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub name: &'static str,
    pub dim: usize,
    pub rank: usize,
    pub coef_degree: usize,
    pub terms: usize,
}

impl Profile {
    pub const SMALL: Profile = Profile { name: "small", dim: 3, rank: 2, coef_degree: 1, terms: 3 };
    pub const DEFAULT: Profile = Profile { name: "default", dim: 4, rank: 2, coef_degree: 2, terms: 4 };
    pub const LARGE: Profile = Profile { name: "large", dim: 5, rank: 3, coef_degree: 2, terms: 5 };

    pub fn by_name(name: &str) -> Option<Profile> {
        [Self::SMALL, Self::DEFAULT, Self::LARGE].into_iter().find(|p| p.name == name)
    }
}

/// Suite names accepted by [`run_verify`], `all` last.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).chain(["all"]).collect()
}

/// Collects the outcome of each identity checked on one instance.
#[derive(Default)]
pub struct Checks {
    outcomes: Vec<(&'static str, Option<String>)>,
}

impl Checks {
    pub fn check(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.outcomes.push((name, (!ok).then(detail)));
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: usize,
    pub passed: bool,
    pub identities: Vec<IdentityReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub profile: Profile,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

type Outcomes = Vec<(&'static str, Option<String>)>;

fn run_instance(def: &SuiteDef, seed: u64, profile: Profile, index: usize) -> Outcomes {
    let mut gen = Gen::new(seed, def.name, index, profile);
    let mut checks = Checks::default();
    if let Err(e) = (def.run)(&mut gen, &mut checks) {
        checks.outcomes.push(("evaluation", Some(e.to_string())));
    }
    checks.outcomes
}

fn assemble(def: &SuiteDef, per_instance: &[Outcomes]) -> SuiteReport {
    let mut identities: Vec<IdentityReport> = vec![];
    for (index, outcomes) in per_instance.iter().enumerate() {
        for (name, failure) in outcomes {
            let pos = match identities.iter().position(|r| r.name == *name) {
                Some(p) => p,
                None => {
                    identities.push(IdentityReport { name: name.to_string(), checked: 0, failed: 0, counterexample: None });
                    identities.len() - 1
                }
            };
            let r = &mut identities[pos];
            r.checked += 1;
            if let Some(detail) = failure {
                r.failed += 1;
                if r.counterexample.is_none() {
                    r.counterexample = Some(format!("instance {index}\n{detail}"));
                }
            }
        }
    }
    let passed = identities.iter().all(IdentityReport::passed);
    SuiteReport { suite: def.name.to_string(), instances: per_instance.len(), passed, identities }
}

/// Runs one suite, or every suite for `all`.
pub fn run_verify(suite: &str, seed: u64, profile: Profile) -> Result<Report> {
    let defs: Vec<&SuiteDef> = match suite {
        "all" => SUITES.iter().collect(),
        name => vec![SUITES.iter().find(|s| s.name == name).ok_or_else(|| Error::UnknownSuite(name.into()))?],
    };
    let jobs: Vec<(usize, usize)> =
        defs.iter().enumerate().flat_map(|(k, d)| (0..d.instances).map(move |i| (k, i))).collect();
    let results: Vec<Outcomes> =
        jobs.par_iter().map(|&(k, i)| run_instance(defs[k], seed, profile, i)).collect();
    let mut suites = vec![];
    let mut offset = 0;
    for def in &defs {
        suites.push(assemble(def, &results[offset..offset + def.instances]));
        offset += def.instances;
    }
    let passed = suites.iter().all(|s| s.passed);
    Ok(Report { seed, profile, passed, suites })
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let p = &self.profile;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "seed {} profile {} (m = {}, rank <= {}, coefficient degree <= {}, terms <= {})",
            self.seed, p.name, p.dim, p.rank, p.coef_degree, p.terms
        );
        for s in &self.suites {
            let _ = writeln!(out, "suite {} ({} instances): {}", s.suite, s.instances, verdict(s.passed));
            for r in &s.identities {
                let _ = writeln!(out, "  {} {} ({}/{} passed)", verdict(r.passed()), r.name, r.checked - r.failed, r.checked);
                if let Some(cx) = &r.counterexample {
                    for line in cx.lines() {
                        let _ = writeln!(out, "      {line}");
                    }
                }
            }
        }
        let _ = writeln!(out, "result: {}", verdict(self.passed));
        out
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
