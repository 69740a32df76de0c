use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::structure::components::StrongDecomposition;
use crate::structure::partite::PartiteStructure;

/// Head completing index `r` and the sets `A_1`, `A_2`.
///
/// `r` counts leading components, so the head `D_{1~r}` is
/// `components[0..r]`; `r == 0` means there is no such component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeadData {
    pub r: usize,
    pub a1: VertexSet,
    pub a2: VertexSet,
}

/// Largest `r < t` such that `Q_r` has a partite set related to no partite
/// set of `Q_t`, or 0. `A_1`/`A_2` are `V_1`/`V_2` intersected with the
/// components strictly after the head, up to and including `Q_t`.
///
/// The labels of `ps` must already be aligned with `Q_t`.
pub fn head_completing_index(ps: &PartiteStructure, dec: &StrongDecomposition) -> Result<HeadData> {
    let t = dec
        .last_nontrivial()
        .ok_or_else(|| Error::InvalidArgument("digraph has no nontrivial strong component".into()))?;
    let q_t = dec.component(t);
    // a partite set V_i ∩ Q_j is related to some partite set of Q_t exactly
    // when V_i meets Q_t
    let meets_t: Vec<bool> = ps.parts().iter().map(|p| p.intersects(q_t)).collect();
    let r = (0..t)
        .rev()
        .find(|&j| dec.component(j).iter().any(|v| !meets_t[ps.part_of(v)]))
        .map_or(0, |j| j + 1);
    let tail_of_head = dec.span(r..t + 1);
    Ok(HeadData {
        r,
        a1: ps.part(0).intersection(&tail_of_head),
        a2: ps.part(1).intersection(&tail_of_head),
    })
}
