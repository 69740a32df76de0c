use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Digraph;

/// The partite sets `(V_1, ..., V_k)` of a multipartite tournament, in label
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartiteStructure {
    n: usize,
    parts: Vec<VertexSet>,
    part_of: Vec<usize>,
}

impl PartiteStructure {
    /// Checks that `parts` is a partition of `0..n` into at least two
    /// nonempty sets.
    pub fn new(n: usize, parts: Vec<VertexSet>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "a multipartite tournament needs at least two partite sets, got {}",
                parts.len()
            )));
        }
        let mut part_of = vec![usize::MAX; n];
        for (i, p) in parts.iter().enumerate() {
            if p.len() != n {
                return Err(Error::DimensionMismatch { left: n, right: p.len() });
            }
            if p.is_empty() {
                return Err(Error::InvalidArgument(format!("partite set {i} is empty")));
            }
            for v in p {
                if part_of[v] != usize::MAX {
                    return Err(Error::Overlap(v));
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidArgument(format!("vertex {v} is in no partite set")));
        }
        Ok(PartiteStructure { n, parts, part_of })
    }

    pub fn from_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut parts = Vec::with_capacity(lists.len());
        for l in lists {
            if let Some(&v) = l.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidArgument(format!("vertex {v} out of range")));
            }
            parts.push(VertexSet::from_indices(n, l.iter().copied()));
        }
        Self::new(n, parts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &VertexSet {
        &self.parts[i]
    }

    /// Index of the partite set containing `v`.
    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(VertexSet::to_vec).collect()
    }

    /// Reorders parts so that new part `i` is old part `order[i]`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.k()];
        for &o in order {
            if o >= self.k() || std::mem::replace(&mut seen[o], true) {
                return Err(Error::InvalidArgument(format!("{order:?} is not a permutation")));
            }
        }
        if order.len() != self.k() {
            return Err(Error::InvalidArgument(format!("{order:?} is not a permutation")));
        }
        Self::new(self.n, order.iter().map(|&o| self.parts[o].clone()).collect())
    }

    /// Verifies that `d` orients the complete multipartite graph on these
    /// parts: no arcs inside a part, exactly one arc across.
    pub fn validate(&self, d: &Digraph) -> Result<()> {
        if d.n() != self.n {
            return Err(Error::DimensionMismatch { left: d.n(), right: self.n });
        }
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                let (uv, vu) = (d.has_arc(u, v), d.has_arc(v, u));
                let same = self.part_of[u] == self.part_of[v];
                let reason = match (same, uv, vu) {
                    (_, true, true) => "have arcs in both directions",
                    (true, true, _) | (true, _, true) => "are joined by an arc inside one partite set",
                    (false, false, false) => "lie in different partite sets but have no arc",
                    _ => continue,
                };
                return Err(Error::NotMultipartiteTournament { u, v, reason: reason.into() });
            }
        }
        Ok(())
    }
}

/// Recovers the partite sets of a multipartite tournament.
///
/// Parts are the connected components of the "no arc either way" relation,
/// ordered by their smallest vertex; the result is then validated.
pub fn infer_partite_sets(d: &Digraph) -> Result<PartiteStructure> {
    let n = d.n();
    // mutual arcs are reported before anything else
    for (u, v) in d.arcs() {
        if u < v && d.has_arc(v, u) {
            return Err(Error::NotMultipartiteTournament {
                u,
                v,
                reason: "have arcs in both directions".into(),
            });
        }
    }
    let adj = d.adjacency();
    let mut comp = vec![usize::MAX; n];
    let mut parts = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = parts.len();
        let mut members = VertexSet::new(n);
        let mut stack = vec![start];
        comp[start] = id;
        while let Some(u) = stack.pop() {
            members.insert(u);
            for (v, c) in comp.iter_mut().enumerate() {
                if v != u && *c == usize::MAX && !adj.get(u, v) && !adj.get(v, u) {
                    *c = id;
                    stack.push(v);
                }
            }
        }
        parts.push(members);
    }
    if parts.len() < 2 {
        return Err(Error::InvalidArgument(
            "digraph has fewer than two partite sets".into(),
        ));
    }
    let ps = PartiteStructure::new(n, parts)?;
    ps.validate(d)?;
    Ok(ps)
}

/// `x` is partite-related to `y` iff one partite set contains both.
pub fn partite_related(x: &VertexSet, y: &VertexSet, ps: &PartiteStructure) -> bool {
    let both = x.union(y);
    ps.parts().iter().any(|p| both.is_subset(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::BoolMatrix;

    fn figure1() -> Digraph {
        Digraph::from_adjacency(BoolMatrix::from_strs(&[
            "011101", "000011", "000011", "000000", "100100", "000100",
        ]))
        .unwrap()
    }

    #[test]
    fn figure1_parts() {
        let ps = infer_partite_sets(&figure1()).unwrap();
        assert_eq!(ps.to_lists(), vec![vec![0], vec![1, 2, 3], vec![4, 5]]);
    }

    #[test]
    fn single_arc_gives_two_parts() {
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(infer_partite_sets(&d).unwrap().to_lists(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn mutual_arcs_are_witnessed() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 0), (1, 2), (0, 2)]).unwrap();
        match infer_partite_sets(&d).unwrap_err() {
            Error::NotMultipartiteTournament { u, v, .. } => assert_eq!((u, v), (0, 1)),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn arc_inside_inferred_part_is_rejected() {
        // 0 and 2 are non-adjacent, 2 and 1 non-adjacent, but 0 -> 1.
        let d = Digraph::from_arcs(4, [(0, 1), (0, 3), (1, 3), (2, 3)]).unwrap();
        assert!(matches!(
            infer_partite_sets(&d),
            Err(Error::NotMultipartiteTournament { u: 0, v: 1, .. })
        ));
    }

    #[test]
    fn edgeless_is_not_multipartite() {
        assert!(infer_partite_sets(&Digraph::new(3)).is_err());
        assert!(infer_partite_sets(&Digraph::new(1)).is_err());
    }

    #[test]
    fn partite_related_semantics() {
        let ps = PartiteStructure::from_lists(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let s = |v: &[usize]| VertexSet::from_indices(4, v.iter().copied());
        assert!(partite_related(&s(&[0]), &s(&[1]), &ps));
        assert!(!partite_related(&s(&[0]), &s(&[2]), &ps));
        assert!(partite_related(&s(&[]), &s(&[2, 3]), &ps));
        assert!(!partite_related(&s(&[]), &s(&[1, 2]), &ps));
    }

    #[test]
    fn structure_rejects_bad_partitions() {
        assert!(PartiteStructure::from_lists(3, &[vec![0, 1, 2]]).is_err());
        assert!(PartiteStructure::from_lists(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(PartiteStructure::from_lists(3, &[vec![0], vec![1]]).is_err());
        assert!(PartiteStructure::from_lists(3, &[vec![0], vec![1, 2], vec![]]).is_err());
    }
}
