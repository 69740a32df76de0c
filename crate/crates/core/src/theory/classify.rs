//! Case dispatch from the structural analysis to the eventual graphs of
//! `C^m(D)`.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Digraph, UndirectedGraph};
use crate::oracle::{detect_period, DEFAULT_BUDGET};
use crate::structure::{Analysis, HeadData, ImprimitivityProfile};
use crate::theory::matching::{match_template, MatchProblem};
use crate::theory::ops::{complete_on, graph_join, graph_union};
use crate::theory::template::{instantiate_template, GraphTemplate, Shape};
use crate::theory::verdict::{CaseTag, Verdict};

/// Classifies `{C^m(D)}` from the structure of `d`.
///
/// Convergence, period and residue indexing come from the structure alone.
/// For kappa 3 the head cliques `K^(1..4)` are bound by matching the stable
/// graph of `D_{1~t}` against `G_3`, which runs the oracle on that
/// subdigraph with the default budget.
pub fn classify(d: &Digraph, analysis: &Analysis) -> Result<Verdict> {
    classify_with_budget(d, analysis, DEFAULT_BUDGET)
}

pub fn classify_with_budget(d: &Digraph, analysis: &Analysis, budget: usize) -> Result<Verdict> {
    let n = d.n();
    if analysis.n() != n {
        return Err(Error::DimensionMismatch { left: n, right: analysis.n() });
    }
    let Some(t) = analysis.t() else {
        return Ok(Verdict::converges(CaseTag::AllTrivial, UndirectedGraph::new(n)));
    };
    let (Some(profile), Some(head)) = (&analysis.profile, &analysis.head) else {
        return Err(Error::Inconsistent("nontrivial component without profile".into()));
    };
    let ctx = Context {
        d,
        analysis,
        profile,
        head,
        t,
        budget,
    };
    if t + 1 == analysis.s() {
        ctx.last_nontrivial_is_last()
    } else {
        ctx.with_tail()
    }
}

struct Context<'a> {
    d: &'a Digraph,
    analysis: &'a Analysis,
    profile: &'a ImprimitivityProfile,
    head: &'a HeadData,
    t: usize,
    budget: usize,
}

impl Context<'_> {
    fn n(&self) -> usize {
        self.d.n()
    }

    fn part(&self, i: usize) -> &VertexSet {
        self.analysis.partite.part(i)
    }

    /// `V(D_{1~r})`.
    fn head_span(&self) -> VertexSet {
        self.analysis.decomposition.span(0..self.head.r)
    }

    fn q_t(&self) -> &VertexSet {
        self.analysis.decomposition.component(self.t)
    }

    fn u(&self, i: usize) -> VertexSet {
        self.profile.class(i - 1).clone()
    }

    /// `K[D_{1~t}] ∪ I[tail]`.
    fn complete_through_t(&self) -> UndirectedGraph {
        complete_on(&self.analysis.through_t()).into_graph()
    }

    /// `K[D_{1~r}] ∨ (K[A_1] ∪ K[A_2])`, tail isolated.
    fn head_join_halves(&self) -> Result<UndirectedGraph> {
        let halves = graph_union(&complete_on(&self.head.a1), &complete_on(&self.head.a2))?;
        Ok(graph_join(&complete_on(&self.head_span()), &halves)?.into_graph())
    }

    fn bind(&self, shape: Shape, cliques: Vec<VertexSet>) -> Result<UndirectedGraph> {
        let t = GraphTemplate::from_shape(shape, cliques.into_iter().map(Some).collect())?;
        instantiate_template(&t, self.n())
    }

    /// Cliques of `G_2`, `G_4` and `G_5` for kappa 4.
    fn kappa4_cliques(&self) -> Vec<VertexSet> {
        let q_t = self.q_t();
        vec![
            self.head_span(),
            self.head.a1.difference(q_t),
            self.head.a2.difference(q_t),
            self.u(1),
            self.u(3),
            self.u(2),
            self.u(4),
        ]
    }

    /// Cliques of `G_3` for the head `D_{1~t}`: `K^(5..7)` are `U_1..U_3`,
    /// `K^(1..4)` are matched inside `V(D_{1~t-1})` against the stable graph
    /// of `D_{1~t}`.
    fn kappa3_cliques(&self) -> Result<Vec<VertexSet>> {
        let through = self.analysis.through_t();
        let head_digraph = self.d.restricted(&through);
        let report = detect_period(&head_digraph, self.budget)?;
        if report.period != 1 {
            return Err(Error::Inconsistent(format!(
                "head D_(1~t) has period {} instead of converging",
                report.period
            )));
        }
        let stable = &report.cycle_graphs[0];
        let mut known = vec![None; 4];
        known.extend((1..=3).map(|i| Some(self.u(i))));
        let problem = MatchProblem {
            join_pairs: Shape::G3.pairs().into_iter().map(|(a, b)| (a - 1, b - 1)).collect(),
            known,
            pool: self.analysis.decomposition.span(0..self.t),
        };
        let bound = match_template(stable, &problem).ok_or_else(|| {
            Error::Inconsistent("stable head graph does not match the G3 pattern".into())
        })?;
        Ok(bound
            .cliques
            .into_iter()
            .map(|c| c.unwrap_or_else(|| VertexSet::new(self.n())))
            .collect())
    }

    fn last_nontrivial_is_last(&self) -> Result<Verdict> {
        let kappa = self.profile.kappa;
        let case = CaseTag::Last { kappa };
        let limit = match kappa {
            1 => complete_on(&VertexSet::full(self.n())).into_graph(),
            2 => self.bind(
                Shape::G1,
                vec![self.head_span(), self.head.a1.clone(), self.head.a2.clone()],
            )?,
            3 => self.bind(Shape::G3, self.kappa3_cliques()?)?,
            4 => self.bind(Shape::G2, self.kappa4_cliques())?,
            k => return Err(Error::Inconsistent(format!("index of imprimitivity {k}"))),
        };
        Ok(Verdict::converges(case, limit))
    }

    fn with_tail(&self) -> Result<Verdict> {
        let tail = self.analysis.tail();
        match self.profile.kappa {
            1 => Ok(Verdict::converges(CaseTag::Kappa1, self.complete_through_t())),
            2 => {
                if tail.is_subset(&self.part(0).union(self.part(1))) {
                    Ok(Verdict::converges(CaseTag::Kappa2BipartiteTail, self.head_join_halves()?))
                } else {
                    Ok(Verdict::converges(CaseTag::Kappa2Else, self.complete_through_t()))
                }
            }
            4 => self.kappa4_with_tail(&tail),
            3 => self.kappa3_with_tail(&tail),
            k => Err(Error::Inconsistent(format!("index of imprimitivity {k}"))),
        }
    }

    fn kappa4_with_tail(&self, tail: &VertexSet) -> Result<Verdict> {
        let (v1, v2) = (self.part(0), self.part(1));
        if !tail.is_subset(&v1.union(v2)) {
            return Ok(Verdict::converges(CaseTag::Kappa4Else, self.complete_through_t()));
        }
        if tail.intersects(v1) && tail.intersects(v2) {
            return Ok(Verdict::converges(CaseTag::Kappa4Both, self.head_join_halves()?));
        }
        let g4 = self.bind(Shape::G4, self.kappa4_cliques())?;
        let g5 = self.bind(Shape::G5, self.kappa4_cliques())?;
        // graphs[0] is even m
        if tail.is_subset(v1) {
            Ok(Verdict::diverges(CaseTag::Kappa4InV1, vec![g4, g5]))
        } else {
            Ok(Verdict::diverges(CaseTag::Kappa4InV2, vec![g5, g4]))
        }
    }

    /// `(alpha, j)` such that the tail splits after `Q_alpha` into a part
    /// related to `U_j` and a part related to `U_{j+1}` (1-based).
    fn split_property(&self) -> Option<(usize, usize)> {
        let dec = &self.analysis.decomposition;
        let s = dec.len();
        for alpha in self.t + 1..s - 1 {
            let first = dec.span(self.t + 1..alpha + 1);
            let second = dec.span(alpha + 1..s);
            for j in 0..3 {
                if first.is_subset(self.part(j)) && second.is_subset(self.part((j + 1) % 3)) {
                    return Some((alpha + 1, j + 1));
                }
            }
        }
        None
    }

    fn kappa3_with_tail(&self, tail: &VertexSet) -> Result<Verdict> {
        let single = (0..3).find(|&j| tail.is_subset(self.part(j))).map(|j| j + 1);
        let (case, j, family): (CaseTag, usize, fn(u8) -> Shape) = if let Some(j) = single {
            (CaseTag::Kappa3Single { j }, j, Shape::G1i)
        } else if let Some((alpha, j)) = self.split_property() {
            (CaseTag::Kappa3Dag { alpha, j }, j, Shape::G2i)
        } else {
            return Ok(Verdict::converges(CaseTag::Kappa3Else, self.complete_through_t()));
        };
        let cliques = self.kappa3_cliques()?;
        let graphs = (0..3)
            .map(|residue| {
                // i ≡ m - j + 1 (mod 3), i in 1..=3
                let i = match (residue + 4 - j) % 3 {
                    0 => 3,
                    i => i,
                };
                self.bind(family(i as u8), cliques.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Verdict::diverges(case, graphs))
    }
}
