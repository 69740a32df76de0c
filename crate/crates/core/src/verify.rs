//! Checking structural verdicts against the brute-force oracle.

use std::fmt;

use crate::error::Result;
use crate::graph::Digraph;
use crate::oracle::{detect_period, SequenceReport};
use crate::structure::{analyze_with, PartiteStructure};
use crate::theory::{classify_with_budget, Verdict};

/// How a verdict disagrees with the observed sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    Period { predicted: usize, observed: usize },
    /// The graphs differ for `m ≡ residue (mod period)`.
    Graph { residue: usize },
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Period { predicted, observed } => {
                write!(f, "predicted period {predicted}, observed {observed}")
            }
            Mismatch::Graph { residue } => write!(f, "graphs differ for residue {residue}"),
        }
    }
}

/// Compares `verdict` with `report`; on agreement records the preperiod as
/// the stabilization bound.
pub fn certify(verdict: &mut Verdict, report: &SequenceReport) -> std::result::Result<(), Mismatch> {
    if verdict.period != report.period {
        return Err(Mismatch::Period {
            predicted: verdict.period,
            observed: report.period,
        });
    }
    for residue in 0..verdict.period {
        if verdict.graphs[residue] != *report.graph_for_residue(residue) {
            return Err(Mismatch::Graph { residue });
        }
    }
    verdict.stabilization_bound = Some(report.preperiod);
    Ok(())
}

/// Result of running both sides on one instance.
#[derive(Clone, Debug)]
pub struct Check {
    pub verdict: Verdict,
    pub report: SequenceReport,
    pub mismatch: Option<Mismatch>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Classifies `d` and runs the oracle with the same step budget.
pub fn check_instance(d: &Digraph, ps: PartiteStructure, budget: usize) -> Result<Check> {
    let analysis = analyze_with(d, ps)?;
    let mut verdict = classify_with_budget(d, &analysis, budget)?;
    let report = detect_period(d, budget)?;
    let mismatch = certify(&mut verdict, &report).err();
    Ok(Check { verdict, report, mismatch })
}
