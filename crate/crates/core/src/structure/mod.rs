//! Structural quantities of a multipartite tournament: partite sets, ordered
//! strong components, the last nontrivial component and its sets of
//! imprimitivity, and the head completing index.

mod components;
mod head;
mod imprimitivity;
mod partite;

pub use components::{ordered_strong_components, StrongDecomposition};
pub use head::{head_completing_index, HeadData};
pub use imprimitivity::{align_partite_labels, index_of_imprimitivity, ImprimitivityProfile};
pub use partite::{infer_partite_sets, partite_related, PartiteStructure};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Everything the classifier reads, computed from one digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    /// Partite sets, relabelled to line up with `Q_t` when it is imprimitive.
    pub partite: PartiteStructure,
    pub decomposition: StrongDecomposition,
    /// Profile of `Q_t`; absent when every component is trivial.
    pub profile: Option<ImprimitivityProfile>,
    pub head: Option<HeadData>,
}

impl Analysis {
    pub fn n(&self) -> usize {
        self.partite.n()
    }

    /// `s`.
    pub fn s(&self) -> usize {
        self.decomposition.len()
    }

    /// 0-based index of `Q_t`.
    pub fn t(&self) -> Option<usize> {
        self.decomposition.last_nontrivial()
    }

    pub fn kappa(&self) -> Option<usize> {
        self.profile.as_ref().map(|p| p.kappa)
    }

    /// `V(D_{t+1~s})`; empty when there is no nontrivial component or `t = s`.
    pub fn tail(&self) -> VertexSet {
        match self.t() {
            Some(t) => self.decomposition.span(t + 1..self.s()),
            None => VertexSet::new(self.n()),
        }
    }

    /// `V(D_{1~t})`.
    pub fn through_t(&self) -> VertexSet {
        match self.t() {
            Some(t) => self.decomposition.span(0..t + 1),
            None => VertexSet::new(self.n()),
        }
    }
}

/// Infers the partite sets of `d` and runs the full structural analysis.
pub fn analyze(d: &Digraph) -> Result<Analysis> {
    let ps = infer_partite_sets(d)?;
    analyze_with(d, ps)
}

/// Runs the structural analysis against given partite sets.
pub fn analyze_with(d: &Digraph, ps: PartiteStructure) -> Result<Analysis> {
    ps.validate(d)?;
    let decomposition = ordered_strong_components(d);
    let Some(t) = decomposition.last_nontrivial() else {
        return Ok(Analysis {
            partite: ps,
            decomposition,
            profile: None,
            head: None,
        });
    };
    let q_t = decomposition.component(t).clone();
    let profile = index_of_imprimitivity(d, &q_t)?;
    let partite = match profile.kappa {
        1 => ps,
        2..=4 => align_partite_labels(&ps, &profile, &q_t)?,
        k => {
            return Err(Error::Inconsistent(format!(
                "strong multipartite component with index of imprimitivity {k}"
            )))
        }
    };
    let head = head_completing_index(&partite, &decomposition)?;
    Ok(Analysis {
        partite,
        decomposition,
        profile: Some(profile),
        head: Some(head),
    })
}
