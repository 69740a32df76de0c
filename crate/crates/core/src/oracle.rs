//! Ground truth for `C^m(D)` by Boolean matrix arithmetic, with detection of
//! the eventual period of the graph sequence. Nothing here knows about
//! partite sets or strong components.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Digraph, UndirectedGraph};
use crate::matrix::{competition_matrix, BoolMatrix, PowerSteps};

/// Default step budget for period detection.
pub const DEFAULT_BUDGET: usize = 10_000;

/// Largest digraph `walk_count_reference` accepts.
pub const REFERENCE_MAX_N: usize = 12;
/// Largest walk length `walk_count_reference` accepts.
pub const REFERENCE_MAX_M: usize = 64;

/// The m-step competition graph: `u ~ v` iff `u != v` and they share an
/// m-step prey.
pub fn m_step_competition_graph(d: &Digraph, m: usize) -> Result<UndirectedGraph> {
    let c = competition_matrix(d.adjacency(), m)?;
    Ok(UndirectedGraph::from_adjacency(c).expect("competition matrices are symmetric and loopless"))
}

/// Eventual behaviour of `C^m(D)`: for `m >= preperiod`,
/// `C^m(D) = cycle_graphs[(m - preperiod) % period]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceReport {
    /// Least `N_0 >= 1` from which the sequence is periodic.
    pub preperiod: usize,
    /// Minimal period.
    pub period: usize,
    pub cycle_graphs: Vec<UndirectedGraph>,
}

impl SequenceReport {
    /// `C^m(D)` for `m >= preperiod`.
    pub fn graph_at(&self, m: usize) -> Option<&UndirectedGraph> {
        (m >= self.preperiod).then(|| &self.cycle_graphs[(m - self.preperiod) % self.period])
    }

    /// Graph for every `m` congruent to `residue` modulo the period, for
    /// large `m`.
    pub fn graph_for_residue(&self, residue: usize) -> &UndirectedGraph {
        let p = self.period;
        let offset = (residue % p + p - self.preperiod % p) % p;
        &self.cycle_graphs[offset]
    }
}

/// Iterates `P_m = A^m` until a state repeats, then reads off the minimal
/// period and preperiod of the induced competition-graph sequence.
///
/// `max_steps` bounds the number of powers inspected; running out yields
/// [`Error::BudgetExhausted`] rather than a guess.
pub fn detect_period(d: &Digraph, max_steps: usize) -> Result<SequenceReport> {
    if max_steps == 0 {
        return Err(Error::InvalidArgument("step budget must be positive".into()));
    }
    let a = d.adjacency();
    let mut steps = PowerSteps::new(a);
    let mut seen: HashMap<BoolMatrix, usize> = HashMap::new();
    // comps[m - 1] = A*_m
    let mut comps: Vec<BoolMatrix> = Vec::new();
    let (cycle_start, p_period) = loop {
        let m = steps.m();
        if let Some(&first) = seen.get(steps.power()) {
            break (first, m - first);
        }
        if m > max_steps {
            return Err(Error::BudgetExhausted { steps: max_steps });
        }
        seen.insert(steps.power().clone(), m);
        comps.push(steps.competition());
        steps.advance();
    };

    // competition matrix at step x >= 1, folding indices past the first
    // revisit back into the power cycle
    let at = |x: usize| -> &BoolMatrix {
        let idx = if x >= cycle_start {
            cycle_start + (x - cycle_start) % p_period
        } else {
            x
        };
        &comps[idx - 1]
    };

    let period = (1..=p_period)
        .filter(|dv| p_period % dv == 0)
        .find(|&dv| (cycle_start..cycle_start + p_period).all(|x| at(x) == at(x + dv)))
        .expect("the power period itself always works");

    let mut preperiod = cycle_start;
    while preperiod > 1 && at(preperiod - 1) == at(preperiod - 1 + period) {
        preperiod -= 1;
    }

    let cycle_graphs = (preperiod..preperiod + period)
        .map(|x| UndirectedGraph::from_adjacency(at(x).clone()).expect("competition matrix"))
        .collect();
    Ok(SequenceReport {
        preperiod,
        period,
        cycle_graphs,
    })
}

/// Whether `u` and `v` have a common m-step prey, by explicit propagation of
/// exactly-m-step reachable sets. Reference implementation for tests.
pub fn walk_count_reference(d: &Digraph, m: usize, u: usize, v: usize) -> Result<bool> {
    let n = d.n();
    if n > REFERENCE_MAX_N || m > REFERENCE_MAX_M {
        return Err(Error::InvalidArgument(format!(
            "reference walk counting is limited to n <= {REFERENCE_MAX_N}, m <= {REFERENCE_MAX_M}"
        )));
    }
    if m == 0 {
        return Err(Error::ZeroStep);
    }
    if u >= n || v >= n {
        return Err(Error::InvalidArgument(format!("vertex out of range for {n} vertices")));
    }
    let step = |from: &[bool]| -> Vec<bool> {
        (0..n)
            .map(|w| (0..n).any(|x| from[x] && d.has_arc(x, w)))
            .collect()
    };
    let mut ru: Vec<bool> = (0..n).map(|x| x == u).collect();
    let mut rv: Vec<bool> = (0..n).map(|x| x == v).collect();
    for _ in 0..m {
        ru = step(&ru);
        rv = step(&rv);
    }
    Ok((0..n).any(|w| ru[w] && rv[w]))
}
