#![allow(dead_code)]

use mcomp_core::structure::{partite_related, Analysis};
use mcomp_core::{BoolMatrix, Digraph, VertexSet};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const A1: [&str; 6] = ["001011", "001011", "000000", "110010", "001000", "001100"];
pub const A2: [&str; 6] = ["000011", "000011", "000000", "111010", "001000", "001100"];
pub const FIGURE1: [&str; 6] = ["011101", "000011", "000011", "000000", "100100", "000100"];

/// Displayed `A(C^m(D_1)) + I` for m ≡ 2, 0, 1 (mod 3), diagonal included.
pub const A1_PERIODIC: [[&str; 6]; 3] = [
    ["110100", "110100", "000000", "110101", "000000", "000101"],
    ["110001", "110001", "000000", "000101", "000000", "110101"],
    ["110101", "110101", "000000", "110100", "000000", "110001"],
];
pub const A2_LIMIT: [&str; 6] = ["110101", "110101", "000000", "110101", "000000", "110101"];

pub fn digraph(rows: &[&str]) -> Digraph {
    Digraph::from_adjacency(BoolMatrix::from_strs(rows)).unwrap()
}

/// Matrix as printed with `+ I`, diagonal cleared.
pub fn loopless(rows: &[&str]) -> BoolMatrix {
    let mut m = BoolMatrix::from_strs(rows);
    m.zero_diagonal();
    m
}

/// Arbitrary loopless digraph, each arc present with probability 1/2.
pub fn random_digraph(n: usize, rng: &mut ChaCha8Rng) -> Digraph {
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.next_u32() & 1 == 1 {
                d.add_arc(u, v);
            }
        }
    }
    d
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// gcd of the lengths of all directed cycles inside `within`, by enumerating
/// simple cycles from their smallest vertex. 0 when there is no cycle.
pub fn cycle_length_gcd(d: &Digraph, within: &VertexSet) -> usize {
    fn walk(d: &Digraph, within: &VertexSet, start: usize, at: usize, depth: usize, on_path: &mut Vec<bool>, g: &mut usize) {
        for w in d.out_neighbors(at) {
            if !within.contains(w) || w < start {
                continue;
            }
            if w == start {
                *g = gcd(*g, depth);
            } else if !on_path[w] {
                on_path[w] = true;
                walk(d, within, start, w, depth + 1, on_path, g);
                on_path[w] = false;
            }
        }
    }
    let mut g = 0;
    let mut on_path = vec![false; d.n()];
    for s in within {
        on_path[s] = true;
        walk(d, within, s, s, 1, &mut on_path, &mut g);
        on_path[s] = false;
    }
    g
}

/// Which of the divergence conditions hold, re-derived from the analysis
/// output alone.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Conditions {
    pub tail_nonempty: bool,
    pub single_part: bool,
    pub split: bool,
    pub kappa4_single: bool,
}

impl Conditions {
    pub fn held(&self) -> usize {
        [self.single_part, self.split, self.kappa4_single]
            .iter()
            .filter(|&&b| b)
            .count()
    }

    pub fn predicts_divergence(&self) -> bool {
        self.tail_nonempty && self.held() == 1
    }
}

pub fn divergence_conditions(a: &Analysis) -> Conditions {
    let (Some(t), Some(profile)) = (a.t(), a.profile.as_ref()) else {
        return Conditions::default();
    };
    let s = a.decomposition.len();
    if t + 1 >= s {
        return Conditions::default();
    }
    let ps = &a.partite;
    let u = |j: usize| &profile.classes[j % profile.kappa];
    let tail = a.decomposition.span(t + 1..s);
    let mut c = Conditions {
        tail_nonempty: true,
        ..Default::default()
    };
    if profile.kappa == 3 {
        c.single_part = (0..3).any(|j| partite_related(&tail, u(j), ps));
        for alpha in t + 1..s - 1 {
            let first = a.decomposition.span(t + 1..alpha + 1);
            let second = a.decomposition.span(alpha + 1..s);
            if (0..3).any(|j| partite_related(&first, u(j), ps) && partite_related(&second, u(j + 1), ps)) {
                c.split = true;
            }
        }
    }
    if profile.kappa == 4 {
        c.kappa4_single = (0..2).any(|j| partite_related(&tail, u(j), ps));
    }
    c
}
