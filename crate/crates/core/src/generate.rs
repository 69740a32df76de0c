//! Seeded generation of multipartite tournaments.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`. Orientation of a cross pair `u < v` consumes one
//! `next_u32()`: bit 0 set means `u -> v`, clear means `v -> u`. Pairs are
//! visited in lexicographic order.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::structure::PartiteStructure;

fn coin(rng: &mut ChaCha8Rng) -> bool {
    rng.next_u32() & 1 == 1
}

/// Uniform integer in `0..bound` (`bound >= 1`), by rejection.
fn below(rng: &mut ChaCha8Rng, bound: usize) -> usize {
    let bound = bound as u64;
    let zone = u64::MAX - u64::MAX % bound;
    loop {
        let x = rng.next_u64();
        if x < zone {
            return (x % bound) as usize;
        }
    }
}

fn contiguous_parts(part_sizes: &[usize]) -> Result<(usize, Vec<VertexSet>)> {
    let n: usize = part_sizes.iter().sum();
    let mut parts = Vec::with_capacity(part_sizes.len());
    let mut next = 0;
    for &size in part_sizes {
        if size == 0 {
            return Err(Error::InvalidArgument("partite sets must be nonempty".into()));
        }
        parts.push(VertexSet::from_indices(n, next..next + size));
        next += size;
    }
    Ok((n, parts))
}

/// A random orientation of the complete multipartite graph with the given
/// part sizes. Part `i` occupies a contiguous block of vertex indices.
pub fn random_multipartite_tournament(
    k: usize,
    part_sizes: &[usize],
    seed: u64,
) -> Result<(Digraph, PartiteStructure)> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("need at least two partite sets, got {k}")));
    }
    if part_sizes.len() != k {
        return Err(Error::InvalidArgument(format!(
            "{k} partite sets but {} sizes",
            part_sizes.len()
        )));
    }
    let (n, parts) = contiguous_parts(part_sizes)?;
    let ps = PartiteStructure::new(n, parts)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if ps.part_of(u) != ps.part_of(v) {
                if coin(&mut rng) {
                    d.add_arc(u, v);
                } else {
                    d.add_arc(v, u);
                }
            }
        }
    }
    Ok((d, ps))
}

/// How the vertices of the middle layer are oriented among themselves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Core {
    Random,
    /// Random orientation between parts 0 and 1 only.
    Bipartite,
    /// Parts 0 -> 1 -> 2 -> 0 on the core layer.
    Cyclic3,
    /// Parts 0 and 1 split by a hidden bit into `U_1..U_4`, arcs
    /// `U_i -> U_{i+1}`.
    Cyclic4,
}

/// A multipartite tournament built from layers: arcs between different
/// layers point from the lower to the higher layer, arcs inside a layer are
/// random except on a planted core layer. Trailing layers are singletons or
/// pairs, so they become trivial strong components after the core.
///
/// Vertex labels are shuffled at the end and parts are listed by smallest
/// vertex.
pub fn random_layered_tournament(k: usize, n: usize, rng: &mut ChaCha8Rng) -> Result<(Digraph, PartiteStructure)> {
    if k < 2 || n < k {
        return Err(Error::InvalidArgument(format!("cannot build {k} nonempty parts on {n} vertices")));
    }
    let mut core = match below(rng, 5) {
        0 => Core::Random,
        1 => Core::Bipartite,
        2 | 3 if k >= 3 => Core::Cyclic3,
        _ => Core::Cyclic4,
    };
    let core_parts = |core: Core| match core {
        Core::Random => k,
        Core::Bipartite | Core::Cyclic4 => 2,
        Core::Cyclic3 => 3,
    };
    let min_core = |core: Core| match core {
        Core::Cyclic4 => 4,
        other => core_parts(other),
    };
    if n < min_core(core) + k - core_parts(core) {
        core = Core::Random;
    }
    let (core_parts, min_core) = (core_parts(core), min_core(core));

    // parts outside the core need a vertex off the core layer
    let head_count = below(rng, n / 3 + 1);
    let tail_count = 1 + below(rng, (n - 1).min(4));
    let core_count = n
        .saturating_sub(head_count + tail_count)
        .clamp(min_core, n - (k - core_parts));
    let tail_count = tail_count.min(n - core_count);
    let head_count = n - core_count - tail_count;

    // part and layer of each vertex before shuffling
    let mut part = vec![0usize; n];
    let mut layer = vec![0usize; n];
    let mut hidden = vec![false; n];
    let mut v = 0;
    let head_layers = 1 + below(rng, 2);
    for _ in 0..head_count {
        part[v] = below(rng, k);
        layer[v] = below(rng, head_layers);
        v += 1;
    }
    for i in 0..core_count {
        // the first vertices hit every part, and every class of a planted
        // 4-cycle, before the rest is randomized
        if i < min_core {
            part[v] = i % core_parts;
            hidden[v] = i >= 2;
        } else {
            part[v] = below(rng, core_parts);
            hidden[v] = coin(rng);
        }
        layer[v] = head_layers;
        v += 1;
    }
    let core_layer = head_layers;
    let mut next_layer = core_layer + 1;
    let favour_core = coin(rng);
    for _ in 0..tail_count {
        part[v] = if favour_core { below(rng, core_parts) } else { below(rng, k) };
        // occasionally share a layer with the previous tail vertex
        if next_layer > core_layer + 1 && below(rng, 4) == 0 {
            layer[v] = next_layer - 1;
        } else {
            layer[v] = next_layer;
            next_layer += 1;
        }
        v += 1;
    }
    // every part must be used; recolour a vertex off a planted core whose
    // part has others, scanning from the tail
    for p in 0..k {
        if part.contains(&p) {
            continue;
        }
        let counts = |part: &[usize], q: usize| part.iter().filter(|&&x| x == q).count();
        let candidate = (0..n).rev().find(|&x| {
            let movable = layer[x] != core_layer || core == Core::Random;
            movable && counts(&part, part[x]) > 1
        });
        match candidate {
            Some(x) => part[x] = p,
            None => return Err(Error::InvalidArgument("could not place every partite set".into())),
        }
    }

    let mut d = Digraph::new(n);
    for a in 0..n {
        for b in (a + 1)..n {
            if part[a] == part[b] {
                continue;
            }
            let forward = if layer[a] != layer[b] {
                layer[a] < layer[b]
            } else if layer[a] == core_layer && core == Core::Cyclic3 {
                (part[a] + 1) % 3 == part[b]
            } else if layer[a] == core_layer && core == Core::Cyclic4 {
                let class = |x: usize| part[x] + if hidden[x] { 2 } else { 0 };
                (class(a) + 1) % 4 == class(b)
            } else {
                coin(rng)
            };
            if forward {
                d.add_arc(a, b);
            } else {
                d.add_arc(b, a);
            }
        }
    }
    Ok(shuffle(&d, &part, k, rng))
}

fn shuffle(d: &Digraph, part: &[usize], k: usize, rng: &mut ChaCha8Rng) -> (Digraph, PartiteStructure) {
    let n = d.n();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, below(rng, i + 1));
    }
    let mut out = Digraph::new(n);
    for (u, v) in d.arcs() {
        out.add_arc(perm[u], perm[v]);
    }
    let mut parts: Vec<VertexSet> = (0..k)
        .map(|p| VertexSet::from_indices(n, (0..n).filter(|&x| part[x] == p).map(|x| perm[x])))
        .collect();
    parts.sort_by_key(|s| s.first());
    let ps = PartiteStructure::new(n, parts).expect("every part is nonempty");
    (out, ps)
}

/// Parameters of a verification corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusParams {
    pub seed: u64,
    pub max_n: usize,
    pub min_k: usize,
    pub max_k: usize,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            seed: 0,
            max_n: 12,
            min_k: 2,
            max_k: 5,
        }
    }
}

/// Instance `index` of the corpus. Each index uses its own ChaCha stream, so
/// instances can be generated independently and in any order.
///
/// Every fourth instance is a uniform random multipartite tournament; the
/// others are layered.
pub fn corpus_instance(params: &CorpusParams, index: u64) -> Result<(Digraph, PartiteStructure)> {
    if params.min_k < 2 || params.min_k > params.max_k || params.max_n < params.min_k {
        return Err(Error::InvalidArgument(format!("bad corpus parameters {params:?}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(index);
    let k = params.min_k + below(&mut rng, params.max_k - params.min_k + 1);
    let k = k.min(params.max_n);
    let n = k + below(&mut rng, params.max_n - k + 1);
    if index.is_multiple_of(4) {
        let mut sizes = vec![1usize; k];
        for _ in k..n {
            sizes[below(&mut rng, k)] += 1;
        }
        random_multipartite_tournament(k, &sizes, rng.next_u64())
    } else {
        random_layered_tournament(k, n, &mut rng)
    }
}
