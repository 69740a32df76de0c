use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::structure::partite::PartiteStructure;

/// Index of imprimitivity of a strong component together with its sets of
/// imprimitivity `U_1, ..., U_kappa`, cyclically ordered so that every arc
/// goes from `U_i` to `U_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImprimitivityProfile {
    pub kappa: usize,
    pub classes: Vec<VertexSet>,
}

impl ImprimitivityProfile {
    /// `U_{i}` with 0-based, cyclic `i`.
    pub fn class(&self, i: usize) -> &VertexSet {
        &self.classes[i % self.kappa]
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn reach(d: &Digraph, comp: &VertexSet, root: usize) -> VertexSet {
    let mut seen = VertexSet::new(d.n());
    seen.insert(root);
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        for v in d.out_neighbors(u).intersection(comp).iter() {
            if !seen.contains(v) {
                seen.insert(v);
                stack.push(v);
            }
        }
    }
    seen
}

/// Computes kappa as the gcd of `level(u) + 1 - level(v)` over arcs `(u, v)`
/// inside `comp`, with BFS levels from the smallest vertex of `comp`.
///
/// `U_1` is the class of the smallest vertex.
pub fn index_of_imprimitivity(d: &Digraph, comp: &VertexSet) -> Result<ImprimitivityProfile> {
    if comp.count() < 2 {
        return Err(Error::NotStrong);
    }
    let root = comp.first().expect("nonempty");
    if reach(d, comp, root) != *comp || reach(&d.reverse(), comp, root) != *comp {
        return Err(Error::NotStrong);
    }

    let n = d.n();
    let mut level = vec![usize::MAX; n];
    level[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for v in d.out_neighbors(u).intersection(comp).iter() {
            if level[v] == usize::MAX {
                level[v] = level[u] + 1;
                queue.push_back(v);
            }
        }
    }

    let mut kappa = 0usize;
    for u in comp {
        for v in d.out_neighbors(u).intersection(comp).iter() {
            kappa = gcd(kappa, (level[u] + 1).abs_diff(level[v]));
        }
    }
    // a strong component on >= 2 vertices has a cycle, and a back arc on it
    // contributes a positive term
    debug_assert!(kappa >= 1);

    let mut classes = vec![VertexSet::new(n); kappa];
    for v in comp {
        classes[level[v] % kappa].insert(v);
    }
    Ok(ImprimitivityProfile { kappa, classes })
}

/// Relabels the partite sets so that the sets of imprimitivity of the last
/// nontrivial component sit in the low labels:
/// `V_i ∩ V(Q_t) = U_i` for kappa 2 or 3, and `V_i ∩ V(Q_t) = U_i ∪ U_{i+2}`
/// for kappa 4. Parts not meeting `Q_t` keep their relative order after.
pub fn align_partite_labels(
    ps: &PartiteStructure,
    profile: &ImprimitivityProfile,
    t_comp: &VertexSet,
) -> Result<PartiteStructure> {
    let wanted: Vec<VertexSet> = match profile.kappa {
        2 | 3 => profile.classes.clone(),
        4 => vec![
            profile.classes[0].union(&profile.classes[2]),
            profile.classes[1].union(&profile.classes[3]),
        ],
        k => {
            return Err(Error::InvalidArgument(format!(
                "label alignment needs an imprimitive component with kappa in 2..=4, got {k}"
            )))
        }
    };
    let mut order = Vec::with_capacity(ps.k());
    for w in &wanted {
        let rep = w.first().ok_or_else(|| Error::Inconsistent("empty imprimitivity class".into()))?;
        let p = ps.part_of(rep);
        if ps.part(p).intersection(t_comp) != *w || order.contains(&p) {
            return Err(Error::Inconsistent(format!(
                "sets of imprimitivity {:?} do not line up with the partite sets",
                profile.classes
            )));
        }
        order.push(p);
    }
    let used = order.clone();
    order.extend((0..ps.k()).filter(|p| !used.contains(p)));
    ps.reordered(&order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::BoolMatrix;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, v.iter().copied())
    }

    #[test]
    fn d1_first_component() {
        let d = Digraph::from_adjacency(BoolMatrix::from_strs(&[
            "001011", "001011", "000000", "110010", "001000", "001100",
        ]))
        .unwrap();
        let p = index_of_imprimitivity(&d, &set(6, &[0, 1, 3, 5])).unwrap();
        assert_eq!(p.kappa, 3);
        assert_eq!(p.classes, vec![set(6, &[0, 1]), set(6, &[5]), set(6, &[3])]);
    }

    #[test]
    fn directed_triangle() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let p = index_of_imprimitivity(&d, &set(3, &[0, 1, 2])).unwrap();
        assert_eq!(p.kappa, 3);
        assert!(p.classes.iter().all(|c| c.count() == 1));
    }

    #[test]
    fn four_cycle_bipartite() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = index_of_imprimitivity(&d, &set(4, &[0, 1, 2, 3])).unwrap();
        assert_eq!(p.kappa, 4);
        let ps = PartiteStructure::from_lists(4, &[vec![1, 3], vec![0, 2]]).unwrap();
        let aligned = align_partite_labels(&ps, &p, &set(4, &[0, 1, 2, 3])).unwrap();
        assert_eq!(aligned.to_lists(), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn trivial_or_weak_component_rejected() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(index_of_imprimitivity(&d, &set(3, &[0])), Err(Error::NotStrong));
        assert_eq!(index_of_imprimitivity(&d, &set(3, &[0, 1, 2])), Err(Error::NotStrong));
    }

    #[test]
    fn alignment_rejects_mismatched_classes() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let p = index_of_imprimitivity(&d, &set(3, &[0, 1, 2])).unwrap();
        let bogus = PartiteStructure::from_lists(3, &[vec![0, 1], vec![2]]).unwrap();
        assert!(matches!(
            align_partite_labels(&bogus, &p, &set(3, &[0, 1, 2])),
            Err(Error::Inconsistent(_))
        ));
    }
}
