//! Binding unknown cliques of a template against a concrete graph.

use crate::bitset::VertexSet;
use crate::graph::UndirectedGraph;
use crate::theory::template::{instantiate_template, GraphTemplate};

/// Partially bound template: `known[i]` fixes clique `i`; cliques left as
/// `None` are to be carved out of `pool`.
#[derive(Clone, Debug)]
pub struct MatchProblem {
    pub join_pairs: Vec<(usize, usize)>,
    pub known: Vec<Option<VertexSet>>,
    pub pool: VertexSet,
}

/// Partitions `pool` among the unknown cliques so that the instantiated
/// template equals `g` exactly, or returns `None`.
///
/// Vertices of one clique have identical closed neighbourhoods in any
/// instantiation, so the pool is first split into closed-neighbourhood
/// classes and whole classes are assigned to distinct unknown cliques.
/// Candidates are tried with lower clique indices first.
pub fn match_template(g: &UndirectedGraph, problem: &MatchProblem) -> Option<GraphTemplate> {
    let n = g.n();
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut reps: Vec<VertexSet> = Vec::new();
    for v in &problem.pool {
        let nb = g.closed_neighborhood(v);
        match reps.iter().position(|r| *r == nb) {
            Some(i) => classes[i].insert(v),
            None => {
                reps.push(nb);
                classes.push(VertexSet::from_indices(n, [v]));
            }
        }
    }
    let unknown: Vec<usize> = (0..problem.known.len())
        .filter(|&i| problem.known[i].is_none())
        .collect();
    if classes.len() > unknown.len() {
        return None;
    }

    let mut assignment: Vec<Option<usize>> = vec![None; classes.len()];
    let mut used = vec![false; unknown.len()];
    search(g, problem, &classes, &unknown, 0, &mut assignment, &mut used)
}

fn search(
    g: &UndirectedGraph,
    problem: &MatchProblem,
    classes: &[VertexSet],
    unknown: &[usize],
    next: usize,
    assignment: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
) -> Option<GraphTemplate> {
    if next == classes.len() {
        let mut cliques = problem.known.clone();
        for (class, slot) in classes.iter().zip(assignment.iter()) {
            cliques[unknown[slot.expect("assigned")]] = Some(class.clone());
        }
        let t = GraphTemplate::new(cliques, problem.join_pairs.clone());
        return (instantiate_template(&t, g.n()).ok()? == *g).then_some(t);
    }
    for slot in 0..unknown.len() {
        if used[slot] {
            continue;
        }
        used[slot] = true;
        assignment[next] = Some(slot);
        if let Some(t) = search(g, problem, classes, unknown, next + 1, assignment, used) {
            return Some(t);
        }
        used[slot] = false;
        assignment[next] = None;
    }
    None
}
