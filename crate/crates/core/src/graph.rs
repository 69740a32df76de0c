//! Digraphs and simple undirected graphs over vertices `0..n`.

use crate::bitset::{BitSet, VertexSet};
use crate::error::{Error, Result};
use crate::matrix::BoolMatrix;

/// A loopless digraph stored as out-neighbour bitset rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    adj: BoolMatrix,
}

impl Digraph {
    /// The arcless digraph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Digraph {
            adj: BoolMatrix::zeros(n),
        }
    }

    pub fn from_arcs<I: IntoIterator<Item = (usize, usize)>>(n: usize, arcs: I) -> Result<Self> {
        let mut d = Digraph::new(n);
        for (u, v) in arcs {
            d.try_add_arc(u, v)?;
        }
        Ok(d)
    }

    /// Wraps an adjacency matrix, rejecting diagonal entries.
    pub fn from_adjacency(adj: BoolMatrix) -> Result<Self> {
        if let Some(i) = (0..adj.n()).find(|&i| adj.get(i, i)) {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {i}")));
        }
        Ok(Digraph { adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.n()
    }

    pub fn try_add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::InvalidArgument(format!(
                "arc ({u},{v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        self.adj.set(u, v, true);
        Ok(())
    }

    /// Panics on self-loops or out-of-range endpoints.
    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.try_add_arc(u, v).expect("invalid arc");
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    #[inline]
    pub fn out_neighbors(&self, u: usize) -> &BitSet {
        self.adj.row(u)
    }

    pub fn adjacency(&self) -> &BoolMatrix {
        &self.adj
    }

    pub fn arc_count(&self) -> usize {
        self.adj.rows().iter().map(BitSet::count).sum()
    }

    /// Arcs in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj.row(u).iter().map(move |v| (u, v)))
    }

    pub fn reverse(&self) -> Digraph {
        Digraph {
            adj: self.adj.transpose(),
        }
    }

    /// The subdigraph induced by `keep`, with vertices renumbered in
    /// increasing order. Returns the map from new to old indices.
    pub fn induced(&self, keep: &VertexSet) -> (Digraph, Vec<usize>) {
        let old: Vec<usize> = keep.to_vec();
        let mut new_of = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut d = Digraph::new(old.len());
        for (i, &u) in old.iter().enumerate() {
            for v in self.adj.row(u).intersection(keep).iter() {
                d.adj.set(i, new_of[v], true);
            }
        }
        (d, old)
    }

    /// Keeps only arcs with both ends in `keep`, preserving vertex numbering.
    pub fn restricted(&self, keep: &VertexSet) -> Digraph {
        let mut d = Digraph::new(self.n());
        for u in keep {
            for v in self.adj.row(u).intersection(keep).iter() {
                d.adj.set(u, v, true);
            }
        }
        d
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Digraph({}) ", self.n())?;
        f.debug_list().entries(self.arcs()).finish()
    }
}

/// A simple undirected graph: symmetric adjacency, empty diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    adj: BoolMatrix,
}

impl UndirectedGraph {
    pub fn new(n: usize) -> Self {
        UndirectedGraph {
            adj: BoolMatrix::zeros(n),
        }
    }

    pub fn from_adjacency(adj: BoolMatrix) -> Result<Self> {
        if (0..adj.n()).any(|i| adj.get(i, i)) {
            return Err(Error::InvalidArgument("adjacency has a nonzero diagonal".into()));
        }
        if !adj.is_symmetric() {
            return Err(Error::InvalidArgument("adjacency is not symmetric".into()));
        }
        Ok(UndirectedGraph { adj })
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = UndirectedGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.n()
    }

    /// Adds `uv`; a loop `u == v` is ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj.set(u, v, true);
            self.adj.set(v, u, true);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn neighbors(&self, u: usize) -> &BitSet {
        self.adj.row(u)
    }

    pub fn closed_neighborhood(&self, u: usize) -> BitSet {
        let mut s = self.adj.row(u).clone();
        s.insert(u);
        s
    }

    pub fn adjacency(&self) -> &BoolMatrix {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj.row(u).iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// Vertices with no incident edge.
    pub fn isolated(&self) -> VertexSet {
        VertexSet::from_indices(self.n(), (0..self.n()).filter(|&v| self.adj.row(v).is_empty()))
    }

    /// Joins every vertex of `a` to every vertex of `b` (self-pairs skipped).
    pub(crate) fn connect_all(&mut self, a: &VertexSet, b: &VertexSet) {
        for u in a {
            for v in b {
                self.add_edge(u, v);
            }
        }
    }
}

impl std::fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "UndirectedGraph({}) ", self.n())?;
        f.debug_list().entries(self.edges()).finish()
    }
}
