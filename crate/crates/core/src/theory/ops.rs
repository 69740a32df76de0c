//! Union and join of vertex-disjoint graphs living inside a common vertex
//! universe `0..n`.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

/// A graph whose vertex set is `support`, embedded in `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubGraph {
    support: VertexSet,
    graph: UndirectedGraph,
}

impl SubGraph {
    /// The graph with no vertices.
    pub fn empty(n: usize) -> Self {
        SubGraph {
            support: VertexSet::new(n),
            graph: UndirectedGraph::new(n),
        }
    }

    pub fn support(&self) -> &VertexSet {
        &self.support
    }

    pub fn graph(&self) -> &UndirectedGraph {
        &self.graph
    }

    /// The graph on all of `0..n`; vertices outside the support are isolated.
    pub fn into_graph(self) -> UndirectedGraph {
        self.graph
    }
}

/// `K[Z]`.
pub fn complete_on(z: &VertexSet) -> SubGraph {
    let mut graph = UndirectedGraph::new(z.len());
    graph.connect_all(z, z);
    SubGraph {
        support: z.clone(),
        graph,
    }
}

/// `I[Z]`.
pub fn empty_on(z: &VertexSet) -> SubGraph {
    SubGraph {
        support: z.clone(),
        graph: UndirectedGraph::new(z.len()),
    }
}

fn check_disjoint(g1: &SubGraph, g2: &SubGraph) -> Result<()> {
    if g1.support.len() != g2.support.len() {
        return Err(Error::DimensionMismatch {
            left: g1.support.len(),
            right: g2.support.len(),
        });
    }
    match g1.support.intersection(&g2.support).first() {
        Some(v) => Err(Error::Overlap(v)),
        None => Ok(()),
    }
}

fn merged(g1: &SubGraph, g2: &SubGraph) -> SubGraph {
    let mut graph = g1.graph.clone();
    for (u, v) in g2.graph.edges() {
        graph.add_edge(u, v);
    }
    SubGraph {
        support: g1.support.union(&g2.support),
        graph,
    }
}

/// `G_1 ∪ G_2`.
pub fn graph_union(g1: &SubGraph, g2: &SubGraph) -> Result<SubGraph> {
    check_disjoint(g1, g2)?;
    Ok(merged(g1, g2))
}

/// `G_1 ∨ G_2`: the union plus every edge between the two vertex sets.
pub fn graph_join(g1: &SubGraph, g2: &SubGraph) -> Result<SubGraph> {
    check_disjoint(g1, g2)?;
    let mut out = merged(g1, g2);
    out.graph.connect_all(&g1.support, &g2.support);
    Ok(out)
}
