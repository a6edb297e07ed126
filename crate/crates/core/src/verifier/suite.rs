use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::checks::{Analysis, VerifyOptions};
use super::report::{Theorem, TheoremReport};

/// A group of related reports that is selected as a unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Cheeger,
    Thm12,
    Thm13,
    Cor14,
    Lemma23,
    ProofFacts,
    Remarks,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Cheeger,
        Check::Thm12,
        Check::Thm13,
        Check::Cor14,
        Check::Lemma23,
        Check::ProofFacts,
        Check::Remarks,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Cheeger => "cheeger",
            Check::Thm12 => "thm12",
            Check::Thm13 => "thm13",
            Check::Cor14 => "cor14",
            Check::Lemma23 => "lemma23",
            Check::ProofFacts => "proof_facts",
            Check::Remarks => "remarks",
        }
    }

    /// Parses `all` or a comma-separated list of check names.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        if s.trim() == "all" {
            return Ok(Check::ALL.to_vec());
        }
        s.split(',').map(str::parse).collect()
    }

    fn run(self, a: &Analysis<'_>) -> Result<Vec<TheoremReport>> {
        match self {
            Check::Cheeger => a.cheeger(),
            Check::Thm12 => a.thm12(),
            Check::Thm13 => a.thm13(),
            Check::Cor14 => a.cor14(),
            Check::Lemma23 => a.lemma23(),
            Check::ProofFacts => a.proof_facts(),
            Check::Remarks => a.remarks(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        let s = s.trim();
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::BadParameter(format!("unknown check {s:?}")))
    }
}

/// Which reports a suite run retains. Summary counts and the strictness
/// audit always cover every report.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Keep {
    #[default]
    All,
    Failures,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub verify: VerifyOptions,
    pub keep: Keep,
    /// Check graphs concurrently on the current rayon pool.
    pub parallel: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { verify: VerifyOptions::default(), keep: Keep::All, parallel: true }
    }
}

/// A check whose preconditions were not met on a graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Skip {
    pub graph_id: String,
    pub check: Check,
    pub reason: String,
}

/// An inequality that holds only with equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Equality {
    pub graph_id: String,
    pub theorem: Theorem,
    pub d: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub reports: usize,
    pub holds: usize,
    pub strict_holds: usize,
    pub failures: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SuiteReport {
    pub summary: Summary,
    /// Non-strict equality cases among the audited theorems, in input order.
    pub equalities: Vec<Equality>,
    pub reports: Vec<TheoremReport>,
    pub skipped: Vec<Skip>,
}

impl SuiteReport {
    pub fn all_hold(&self) -> bool {
        self.summary.failures == 0
    }

    fn absorb(&mut self, other: SuiteReport) {
        let (a, b) = (&mut self.summary, other.summary);
        a.graphs += b.graphs;
        a.reports += b.reports;
        a.holds += b.holds;
        a.strict_holds += b.strict_holds;
        a.failures += b.failures;
        a.skipped += b.skipped;
        self.equalities.extend(other.equalities);
        self.reports.extend(other.reports);
        self.skipped.extend(other.skipped);
    }
}

fn check_graph(id: &str, g: &Graph, checks: &[Check], opts: &SuiteOptions) -> SuiteReport {
    let analysis = Analysis::new(id, g, opts.verify);
    let mut out = SuiteReport::default();
    out.summary.graphs = 1;
    for &check in checks {
        match check.run(&analysis) {
            Ok(reports) => {
                for r in reports {
                    let s = &mut out.summary;
                    s.reports += 1;
                    s.holds += r.holds as usize;
                    s.strict_holds += r.strict_holds as usize;
                    s.failures += !r.holds as usize;
                    if r.holds && !r.strict_holds && r.theorem.audited() {
                        out.equalities.push(Equality { graph_id: id.to_string(), theorem: r.theorem, d: r.d });
                    }
                    if opts.keep == Keep::All || !r.holds {
                        out.reports.push(r);
                    }
                }
            }
            Err(e) => {
                out.summary.skipped += 1;
                if opts.keep == Keep::All {
                    out.skipped.push(Skip { graph_id: id.to_string(), check, reason: e.to_string() });
                }
            }
        }
    }
    out
}

/// Runs `checks` on every graph. Output order follows input order
/// regardless of parallelism.
pub fn run_suite<S: AsRef<str> + Sync>(graphs: &[(S, Graph)], checks: &[Check], opts: &SuiteOptions) -> SuiteReport {
    let per_graph: Vec<SuiteReport> = if opts.parallel {
        graphs.par_iter().map(|(id, g)| check_graph(id.as_ref(), g, checks, opts)).collect()
    } else {
        graphs.iter().map(|(id, g)| check_graph(id.as_ref(), g, checks, opts)).collect()
    };
    let mut out = SuiteReport::default();
    for r in per_graph {
        out.absorb(r);
    }
    out
}
