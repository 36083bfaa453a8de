//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Tolerances are exact equality; time bounds are wall clock.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ctot::parse::parse_form;
use ctot::render::render_form;
use ctot::verify::gen::Gen;
use ctot::verify::{run_verify, Profile, Report};

const SEED: u64 = 42;

/// Required identities of one suite and the minimum number of instances.
struct Requirement {
    suite: &'static str,
    min_instances: usize,
    identities: &'static [&'static str],
}

struct Criterion {
    id: usize,
    name: &'static str,
    profile: Profile,
    time_bound: Option<Duration>,
    requirements: &'static [Requirement],
}

const CONNECTION_PAIRS: Profile = Profile { name: "connection-pairs", dim: 5, rank: 2, coef_degree: 2, terms: 4 };

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        name: "cap-laws",
        profile: Profile::DEFAULT,
        time_bound: Some(Duration::from_secs(30)),
        requirements: &[Requirement {
            suite: "cap-laws",
            min_instances: 200,
            identities: &[
                "associativity",
                "commutator-is-d(alpha^beta)",
                "inverse",
                "half-round-trip",
                "curvature-of-sum",
                "curvature-of-difference",
            ],
        }],
    },
    Criterion {
        id: 2,
        name: "omega-plus",
        profile: Profile::DEFAULT,
        time_bound: None,
        requirements: &[Requirement {
            suite: "omega-plus",
            min_instances: 100,
            identities: &[
                "sqrt-squares-back",
                "modulus-split-recombines",
                "real-curvature-constructed",
                "real-curvature-iff-closed-imaginary-part",
                "modulus-one-constructed",
                "modulus-one-iff-closed-real-part",
            ],
        }],
    },
    Criterion {
        id: 3,
        name: "chern-weil",
        profile: Profile::DEFAULT,
        time_bound: None,
        requirements: &[Requirement {
            suite: "chern-weil",
            min_instances: 100,
            identities: &[
                "ctot-closed",
                "ch-closed",
                "ctot-gauge-invariant",
                "ch-gauge-invariant",
                "chern-component-gauge-invariant",
                "ctot-is-exp-phi-ch",
            ],
        }],
    },
    Criterion {
        id: 4,
        name: "transgression-additive",
        profile: Profile::DEFAULT,
        time_bound: None,
        requirements: &[Requirement {
            suite: "transgression-additive",
            min_instances: 50,
            identities: &[
                "transgression-formula",
                "path-independence",
                "chasles",
                "direct-sum-ch",
                "product-transgression-first-form",
                "product-transgression-second-form",
            ],
        }],
    },
    Criterion {
        id: 5,
        name: "transgression-multiplicative",
        profile: Profile::DEFAULT,
        time_bound: None,
        requirements: &[Requirement {
            suite: "transgression-multiplicative",
            min_instances: 50,
            identities: &[
                "transgression-formula",
                "cocycle",
                "reversal",
                "inverse-polynomial",
                "direct-sum",
                "conjugation",
            ],
        }],
    },
    Criterion {
        id: 6,
        name: "additive-vs-multiplicative transgressions",
        profile: CONNECTION_PAIRS,
        time_bound: Some(Duration::from_secs(120)),
        requirements: &[Requirement {
            suite: "maitresse",
            min_instances: 50,
            identities: &[
                "multiplicative-is-psi-f-of-additive",
                "psi-g-inverts-psi-f",
                "f-series-sends-sum-to-cap-sum",
                "g-series-sends-cap-sum-to-sum",
            ],
        }],
    },
    Criterion {
        id: 7,
        name: "k-theory",
        profile: Profile::DEFAULT,
        time_bound: None,
        requirements: &[
            Requirement {
                suite: "ktheory-mult",
                min_instances: 100,
                identities: &["isomorphism-invariance", "iota-well-defined", "iota-injective"],
            },
            Requirement { suite: "ktheory-add", min_instances: 100, identities: &["isomorphism-invariance"] },
            Requirement {
                suite: "borel",
                min_instances: 50,
                identities: &["special-imaginary", "metric-independent", "morphism", "conjugate-difference"],
            },
            Requirement { suite: "legacy", min_instances: 50, identities: &["chern-form"] },
        ],
    },
    Criterion {
        id: 8,
        name: "psi-f diagrams",
        profile: Profile::DEFAULT,
        time_bound: None,
        requirements: &[Requirement {
            suite: "virginia",
            min_instances: 50,
            identities: &["a-square", "suspension-square", "rank-square", "chern-square"],
        }],
    },
    Criterion {
        id: 9,
        name: "character models",
        profile: Profile::DEFAULT,
        time_bound: None,
        requirements: &[
            Requirement {
                suite: "angelique-model",
                min_instances: 50,
                identities: &["curvature-is-star-ctot", "iota-goes-to-cap-neg", "special-imaginary-part-is-half-borel"],
            },
            Requirement { suite: "karen-model", min_instances: 50, identities: &["log-of-cup-is-ch-hat", "log-inverts-psi-f"] },
        ],
    },
];

fn check_requirement(req: &Requirement, report: &Report) -> Result<(), String> {
    let suite = report.suites.iter().find(|s| s.suite == req.suite).ok_or(format!("suite {} missing", req.suite))?;
    if suite.instances < req.min_instances {
        return Err(format!("{}: {} instances < {}", req.suite, suite.instances, req.min_instances));
    }
    for name in req.identities {
        let r = suite
            .identities
            .iter()
            .find(|r| r.name == *name)
            .ok_or(format!("{}: identity {name} not checked", req.suite))?;
        if r.checked < req.min_instances {
            return Err(format!("{}: {name} checked {} times", req.suite, r.checked));
        }
    }
    if let Some(r) = suite.identities.iter().find(|r| !r.passed()) {
        return Err(format!(
            "{}: {} failed {}/{}\n{}",
            req.suite,
            r.name,
            r.failed,
            r.checked,
            r.counterexample.as_deref().unwrap_or("")
        ));
    }
    Ok(())
}

fn run_criterion(c: &Criterion) -> Result<String, String> {
    let start = Instant::now();
    for req in c.requirements {
        let report = run_verify(req.suite, SEED, c.profile).map_err(|e| e.to_string())?;
        check_requirement(req, &report)?;
    }
    let elapsed = start.elapsed();
    if let Some(bound) = c.time_bound {
        if elapsed > bound {
            return Err(format!("took {elapsed:.1?}, bound {bound:?}"));
        }
    }
    Ok(format!("{elapsed:.1?}"))
}

fn round_trips(count: usize) -> Result<(), String> {
    for i in 0..count {
        let mut g = Gen::new(SEED, "round-trip", i, Profile::LARGE);
        let deg = g.below(g.dim() + 1);
        let f = g.form(deg);
        let text = render_form(&f);
        let back = parse_form(&text, f.dim()).map_err(|e| format!("form {i}: `{text}`: {e}"))?;
        if back != f {
            return Err(format!("form {i}: `{text}` parsed to `{}`", render_form(&back)));
        }
    }
    Ok(())
}

fn verify_all(format: &str) -> Result<(Vec<u8>, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_ctot"))
        .args(["--output", format, "verify", "--suite", "all", "--profile", "small", "--seed", "7"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if out.status.code() != Some(0) {
        return Err(format!("exit status {:?}", out.status.code()));
    }
    Ok((out.stdout, elapsed))
}

fn tooling() -> Result<String, String> {
    round_trips(500)?;
    let (text, elapsed) = verify_all("text")?;
    if elapsed > Duration::from_secs(60) {
        return Err(format!("verify --suite all took {elapsed:.1?}, bound 60s"));
    }
    if verify_all("text")?.0 != text {
        return Err("text reports differ between runs".into());
    }
    if verify_all("json")?.0 != verify_all("json")?.0 {
        return Err("json reports differ between runs".into());
    }
    Ok(format!("500 round trips, verify all in {elapsed:.1?}"))
}

fn main() -> ExitCode {
    let mut ok = true;
    let mut line = |id: usize, name: &str, r: Result<String, String>| match r {
        Ok(info) => println!("PASS {id:>2} {name} ({info})"),
        Err(why) => {
            ok = false;
            println!("FAIL {id:>2} {name}: {why}");
        }
    };
    for c in CRITERIA {
        line(c.id, c.name, run_criterion(c));
    }
    line(10, "tooling", tooling());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
