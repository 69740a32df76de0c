//! Clique-block graph templates.
//!
//! A template is a list of cliques `K^(1), K^(2), ...` (each possibly absent)
//! and a set of joined clique pairs. It realizes the block matrix whose
//! diagonal blocks are `J^(i)` and whose off-diagonal block `(i, j)` is `J`
//! exactly when `{i, j}` is joined.

use std::fmt;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

/// The named block patterns. Pairs below are 1-based clique labels as they
/// appear in the block matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    G1,
    G2,
    G3,
    G4,
    G5,
    /// `G_{1,i}`, `i` in 1..=3.
    G1i(u8),
    /// `G_{2,i}`, `i` in 1..=3.
    G2i(u8),
}

const G1_PAIRS: &[(usize, usize)] = &[(1, 2), (1, 3)];

const G2_PAIRS: &[(usize, usize)] = &[
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7),
    (2, 4), (2, 5),
    (3, 6), (3, 7),
];

const G3_PAIRS: &[(usize, usize)] = &[
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7),
    (2, 3), (2, 4), (2, 5), (2, 6),
    (3, 4), (3, 5), (3, 7),
    (4, 6), (4, 7),
];

impl Shape {
    pub fn clique_count(self) -> usize {
        match self {
            Shape::G1 => 3,
            _ => 7,
        }
    }

    /// Joined pairs, 1-based.
    pub fn pairs(self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = match self {
            Shape::G1 => G1_PAIRS.to_vec(),
            Shape::G2 => G2_PAIRS.to_vec(),
            Shape::G3 => G3_PAIRS.to_vec(),
            Shape::G4 => [G2_PAIRS, &[(4, 5)]].concat(),
            Shape::G5 => [G2_PAIRS, &[(6, 7)]].concat(),
            Shape::G1i(1) => [G3_PAIRS, &[(2, 7), (3, 6), (6, 7)]].concat(),
            Shape::G1i(2) => [G3_PAIRS, &[(3, 6), (4, 5), (5, 6)]].concat(),
            Shape::G1i(3) => [G3_PAIRS, &[(2, 7), (4, 5), (5, 7)]].concat(),
            // E(G_{2,1}) = E(G_{1,1}) ∪ E(K5 ∨ (K4 ∪ K7)), and so on
            Shape::G2i(1) => [Shape::G1i(1).pairs().as_slice(), &[(4, 5), (5, 7)]].concat(),
            Shape::G2i(2) => [Shape::G1i(2).pairs().as_slice(), &[(2, 7), (6, 7)]].concat(),
            Shape::G2i(3) => [Shape::G1i(3).pairs().as_slice(), &[(3, 6), (5, 6)]].concat(),
            Shape::G1i(i) | Shape::G2i(i) => panic!("template index {i} is not in 1..=3"),
        };
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::G1 => f.write_str("G1"),
            Shape::G2 => f.write_str("G2"),
            Shape::G3 => f.write_str("G3"),
            Shape::G4 => f.write_str("G4"),
            Shape::G5 => f.write_str("G5"),
            Shape::G1i(i) => write!(f, "G1,{i}"),
            Shape::G2i(i) => write!(f, "G2,{i}"),
        }
    }
}

/// Concrete cliques for a block pattern. Clique and pair indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphTemplate {
    pub cliques: Vec<Option<VertexSet>>,
    pub join_pairs: Vec<(usize, usize)>,
}

impl GraphTemplate {
    /// A template with `count` cliques and the given 0-based joined pairs.
    pub fn new(cliques: Vec<Option<VertexSet>>, join_pairs: Vec<(usize, usize)>) -> Self {
        GraphTemplate { cliques, join_pairs }
    }

    /// Binds the cliques of a named shape; `cliques[i]` is `K^(i+1)`.
    pub fn from_shape(shape: Shape, cliques: Vec<Option<VertexSet>>) -> Result<Self> {
        if cliques.len() != shape.clique_count() {
            return Err(Error::InvalidArgument(format!(
                "{shape} has {} cliques, got {}",
                shape.clique_count(),
                cliques.len()
            )));
        }
        let join_pairs = shape.pairs().into_iter().map(|(a, b)| (a - 1, b - 1)).collect();
        Ok(GraphTemplate { cliques, join_pairs })
    }

    pub fn joined(&self, i: usize, j: usize) -> bool {
        self.join_pairs.contains(&(i, j)) || self.join_pairs.contains(&(j, i))
    }
}

/// The graph a template realizes on `0..n`: every clique complete, every
/// joined pair completely connected, all other vertices isolated.
pub fn instantiate_template(t: &GraphTemplate, n: usize) -> Result<UndirectedGraph> {
    let mut covered = VertexSet::new(n);
    let cliques: Vec<VertexSet> = t
        .cliques
        .iter()
        .map(|c| c.clone().unwrap_or_else(|| VertexSet::new(n)))
        .collect();
    for c in &cliques {
        if c.len() != n {
            return Err(Error::DimensionMismatch { left: n, right: c.len() });
        }
        if let Some(v) = covered.intersection(c).first() {
            return Err(Error::Overlap(v));
        }
        covered.union_with(c);
    }
    let mut g = UndirectedGraph::new(n);
    for c in &cliques {
        g.connect_all(c, c);
    }
    for &(i, j) in &t.join_pairs {
        let (a, b) = match (cliques.get(i), cliques.get(j)) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "join pair ({i}, {j}) refers to a missing clique"
                )))
            }
        };
        g.connect_all(a, b);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn singletons(n: usize) -> Vec<Option<VertexSet>> {
        (0..n).map(|i| Some(VertexSet::from_indices(n, [i]))).collect()
    }

    #[test]
    fn g1_on_singletons_is_a_path() {
        // K1 = {a}, K2 = {b}, K3 = {c}: b - a - c
        let t = GraphTemplate::from_shape(Shape::G1, singletons(3)).unwrap();
        let g = instantiate_template(&t, 3).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn g4_and_g5_differ_in_one_pair() {
        let g4 = instantiate_template(&GraphTemplate::from_shape(Shape::G4, singletons(7)).unwrap(), 7).unwrap();
        let g5 = instantiate_template(&GraphTemplate::from_shape(Shape::G5, singletons(7)).unwrap(), 7).unwrap();
        assert!(g4.has_edge(3, 4) && !g4.has_edge(5, 6));
        assert!(g5.has_edge(5, 6) && !g5.has_edge(3, 4));
        assert_eq!(g4.edge_count(), g5.edge_count());
    }

    #[test]
    fn empty_template_is_edgeless() {
        let g = instantiate_template(&GraphTemplate::new(vec![], vec![]), 5).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn absent_cliques_are_skipped() {
        let mut c = singletons(3);
        c[0] = None;
        let g = instantiate_template(&GraphTemplate::from_shape(Shape::G1, c).unwrap(), 3).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn overlapping_cliques_rejected() {
        let c = vec![
            Some(VertexSet::from_indices(3, [0, 1])),
            Some(VertexSet::from_indices(3, [1])),
            None,
        ];
        let t = GraphTemplate::from_shape(Shape::G1, c).unwrap();
        assert_eq!(instantiate_template(&t, 3), Err(Error::Overlap(1)));
    }

    #[test]
    fn kappa3_families_miss_the_expected_pairs() {
        let all: Vec<(usize, usize)> = (1..=7).flat_map(|a| ((a + 1)..=7).map(move |b| (a, b))).collect();
        let missing = |s: Shape| -> Vec<(usize, usize)> {
            let p = s.pairs();
            all.iter().copied().filter(|x| !p.contains(x)).collect()
        };
        assert_eq!(missing(Shape::G3), vec![(2, 7), (3, 6), (4, 5), (5, 6), (5, 7), (6, 7)]);
        assert_eq!(missing(Shape::G1i(1)), vec![(4, 5), (5, 6), (5, 7)]);
        assert_eq!(missing(Shape::G1i(2)), vec![(2, 7), (5, 7), (6, 7)]);
        assert_eq!(missing(Shape::G1i(3)), vec![(3, 6), (5, 6), (6, 7)]);
        assert_eq!(missing(Shape::G2i(1)), vec![(5, 6)]);
        assert_eq!(missing(Shape::G2i(2)), vec![(5, 7)]);
        assert_eq!(missing(Shape::G2i(3)), vec![(6, 7)]);
    }
}
