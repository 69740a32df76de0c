use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::bitset::VertexSet;
use crate::graph::Digraph;

/// Strong components `Q_1, ..., Q_s` ordered so that no arc goes from a later
/// component to an earlier one.
///
/// Indices here are 0-based: `components()[0]` is `Q_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongDecomposition {
    components: Vec<VertexSet>,
    comp_of: Vec<usize>,
    last_nontrivial: Option<usize>,
}

impl StrongDecomposition {
    pub fn components(&self) -> &[VertexSet] {
        &self.components
    }

    /// `s`, the number of strong components.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, i: usize) -> &VertexSet {
        &self.components[i]
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.comp_of[v]
    }

    /// 0-based index of the last nontrivial component, if any.
    pub fn last_nontrivial(&self) -> Option<usize> {
        self.last_nontrivial
    }

    /// Vertices of components with indices in `range` (0-based, half open).
    pub fn span(&self, range: std::ops::Range<usize>) -> VertexSet {
        let n = self.comp_of.len();
        let mut s = VertexSet::new(n);
        for c in &self.components[range] {
            s.union_with(c);
        }
        s
    }
}

/// Tarjan's algorithm, iterative. Components come out in reverse topological
/// order of the condensation.
fn tarjan(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.n();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0usize;
    let succ: Vec<Vec<usize>> = (0..n).map(|u| d.out_neighbors(u).to_vec()).collect();

    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        // (vertex, position in its successor list)
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&w) = succ[v].get(*pos) {
                *pos += 1;
                if index[w] == usize::MAX {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comps.push(comp);
            }
        }
    }
    comps
}

/// Strong components in condensation order. Among components whose
/// predecessors are all placed, the one with the smallest vertex goes first.
pub fn ordered_strong_components(d: &Digraph) -> StrongDecomposition {
    let n = d.n();
    let raw = tarjan(d);
    let mut comp_of = vec![0usize; n];
    for (c, members) in raw.iter().enumerate() {
        for &v in members {
            comp_of[v] = c;
        }
    }
    let nc = raw.len();
    let mut indeg = vec![0usize; nc];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); nc];
    let mut seen = vec![VertexSet::new(nc); nc];
    for (u, v) in d.arcs() {
        let (cu, cv) = (comp_of[u], comp_of[v]);
        if cu != cv && !seen[cu].contains(cv) {
            seen[cu].insert(cv);
            succ[cu].push(cv);
            indeg[cv] += 1;
        }
    }
    let min_vertex: Vec<usize> = raw.iter().map(|c| *c.iter().min().expect("nonempty")).collect();
    let mut ready: BinaryHeap<Reverse<(usize, usize)>> = (0..nc)
        .filter(|&c| indeg[c] == 0)
        .map(|c| Reverse((min_vertex[c], c)))
        .collect();
    let mut order = Vec::with_capacity(nc);
    while let Some(Reverse((_, c))) = ready.pop() {
        order.push(c);
        for &w in &succ[c] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(Reverse((min_vertex[w], w)));
            }
        }
    }
    debug_assert_eq!(order.len(), nc);

    let mut position = vec![0usize; nc];
    for (i, &c) in order.iter().enumerate() {
        position[c] = i;
    }
    let components: Vec<VertexSet> = order
        .iter()
        .map(|&c| VertexSet::from_indices(n, raw[c].iter().copied()))
        .collect();
    let comp_of: Vec<usize> = comp_of.iter().map(|&c| position[c]).collect();
    let last_nontrivial = components.iter().rposition(|c| c.count() >= 2);
    StrongDecomposition {
        components,
        comp_of,
        last_nontrivial,
    }
}
