use std::fmt;

use crate::graph::UndirectedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Converges,
    Diverges,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Converges => "CONVERGES",
            Kind::Diverges => "DIVERGES",
        })
    }
}

/// Which branch of the classification produced a verdict. `alpha` and `j`
/// use the 1-based component and label numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    /// No nontrivial strong component.
    AllTrivial,
    /// The last strong component is nontrivial.
    Last { kappa: usize },
    /// `t < s`, `Q_t` primitive.
    Kappa1,
    /// `t < s`, kappa 2, tail inside `V_1 ∪ V_2`.
    Kappa2BipartiteTail,
    Kappa2Else,
    /// `t < s`, kappa 4, tail meets both `V_1` and `V_2` and nothing else.
    Kappa4Both,
    Kappa4InV1,
    Kappa4InV2,
    Kappa4Else,
    /// `t < s`, kappa 3, tail inside `V_j`.
    Kappa3Single { j: usize },
    /// `t < s`, kappa 3, tail split after `Q_alpha` into parts related to
    /// `U_j` and `U_{j+1}`.
    Kappa3Dag { alpha: usize, j: usize },
    Kappa3Else,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::AllTrivial => f.write_str("all-trivial"),
            CaseTag::Last { kappa } => write!(f, "last-kappa{kappa}"),
            CaseTag::Kappa1 => f.write_str("kappa1"),
            CaseTag::Kappa2BipartiteTail => f.write_str("kappa2-bipartite-tail"),
            CaseTag::Kappa2Else => f.write_str("kappa2-else"),
            CaseTag::Kappa4Both => f.write_str("kappa4-both"),
            CaseTag::Kappa4InV1 => f.write_str("kappa4-v1"),
            CaseTag::Kappa4InV2 => f.write_str("kappa4-v2"),
            CaseTag::Kappa4Else => f.write_str("kappa4-else"),
            CaseTag::Kappa3Single { j } => write!(f, "kappa3-single(j={j})"),
            CaseTag::Kappa3Dag { alpha, j } => write!(f, "kappa3-dag(alpha={alpha},j={j})"),
            CaseTag::Kappa3Else => f.write_str("kappa3-else"),
        }
    }
}

/// Predicted eventual behaviour of `C^m(D)`.
///
/// `graphs[r]` is the graph for all large `m` with `m % period == r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: Kind,
    pub period: usize,
    pub graphs: Vec<UndirectedGraph>,
    pub case: CaseTag,
    /// Entry point of the observed cycle, once certified against the oracle.
    pub stabilization_bound: Option<usize>,
}

impl Verdict {
    pub(crate) fn converges(case: CaseTag, limit: UndirectedGraph) -> Self {
        Verdict {
            kind: Kind::Converges,
            period: 1,
            graphs: vec![limit],
            case,
            stabilization_bound: None,
        }
    }

    pub(crate) fn diverges(case: CaseTag, graphs: Vec<UndirectedGraph>) -> Self {
        Verdict {
            kind: Kind::Diverges,
            period: graphs.len(),
            graphs,
            case,
            stabilization_bound: None,
        }
    }

    /// The predicted `C^m(D)` for large `m`.
    pub fn graph_for(&self, m: usize) -> &UndirectedGraph {
        &self.graphs[m % self.period]
    }

    pub fn limit(&self) -> Option<&UndirectedGraph> {
        (self.kind == Kind::Converges).then(|| &self.graphs[0])
    }
}
