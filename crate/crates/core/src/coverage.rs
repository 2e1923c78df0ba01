//! 2-approximate H-Weak-Coverage: find an `(H, 2k)`-separation `(C, S)` with
//! `Z ⊆ C ∪ S`, or show that no `(H, k)`-separation weakly covers `Z`.

use alloc::collections::BTreeMap;

use crate::class::{ClassOracle, CountingOracle, DeletionAnswer};
use crate::error::{Error, Result};
use crate::flow::{min_vertex_separator, FlowResult};
use crate::graph::{Graph, VertexSet};

/// A pair `(C, S)` with `C ∩ S = ∅`, `G[C]` in the class, `N(C) ⊆ S` and
/// `|S| ≤ bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSeparation {
    pub component: VertexSet,
    pub separator: VertexSet,
    pub bound: usize,
}

impl HSeparation {
    /// Checks all defining properties against `g`.
    pub fn holds(&self, g: &Graph, class: &dyn ClassOracle) -> bool {
        let (c, s) = (&self.component, &self.separator);
        if c.check_within(g.n()).is_err() || s.check_within(g.n()).is_err() {
            return false;
        }
        let Ok(nbhd) = g.neighborhood(c) else { return false };
        let Ok((sub, _)) = g.induced_subgraph(c) else { return false };
        c.is_disjoint(s) && s.len() <= self.bound && nbhd.is_subset(s) && class.is_member(&sub)
    }

    pub fn weakly_covers(&self, z: &VertexSet) -> bool {
        z.is_subset(&self.component.union(&self.separator))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverageAnswer {
    Covered(HSeparation),
    /// No `(H, k)`-separation weakly covers `Z`.
    NoCoverage,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageRun {
    pub answer: CoverageAnswer,
    /// Flow computations performed.
    pub iterations: usize,
    pub improvements: usize,
    pub oracle_calls: usize,
    pub oracle_budgets: BTreeMap<usize, usize>,
}

pub fn weak_coverage(g: &Graph, z: &VertexSet, k: usize, class: &dyn ClassOracle) -> Result<CoverageAnswer> {
    Ok(weak_coverage_run(g, z, k, class)?.answer)
}

/// Weak coverage with counters. Keeps a deletion set `X` (initially `V`) and
/// alternates between a `(Z, X)` cut of order at most `2k` and shrinking `X`
/// through the `2k + 1` path endpoints.
pub fn weak_coverage_run(g: &Graph, z: &VertexSet, k: usize, class: &dyn ClassOracle) -> Result<CoverageRun> {
    if z.is_empty() {
        return Err(Error::EmptyTerminals);
    }
    z.check_within(g.n())?;
    let oracle = CountingOracle::new(class);
    let mut x = g.vertex_set();
    let mut iterations = 0;
    let mut improvements = 0;

    let answer = loop {
        iterations += 1;
        let flow = if x.is_empty() {
            None
        } else {
            Some(min_vertex_separator(g, z, &x, 2 * k)?)
        };
        match flow {
            None => break covered(g, z, VertexSet::new(), k),
            Some(FlowResult::SmallCut(sep)) => break covered(g, z, sep.separator(), k),
            Some(FlowResult::ManyPaths(paths)) => {
                let x_prime = paths.ends();
                let kept = x.difference(&x_prime);
                let (rest, map) = g.remove_vertices(&kept)?;
                match oracle.min_deletion(&rest, 2 * k) {
                    DeletionAnswer::Found(y) => {
                        debug_assert!(y.len() < x_prime.len());
                        x = kept.union(&map.to_host(&y));
                        improvements += 1;
                    }
                    DeletionAnswer::ExceedsBudget => break CoverageAnswer::NoCoverage,
                }
            }
        }
    };

    Ok(CoverageRun {
        answer,
        iterations,
        improvements,
        oracle_calls: oracle.calls(),
        oracle_budgets: oracle.budgets(),
    })
}

/// `C` is everything reachable from `Z \ S` in `G - S`.
fn covered(g: &Graph, z: &VertexSet, separator: VertexSet, k: usize) -> CoverageAnswer {
    let component = g.reachable(&z.difference(&separator), &separator);
    CoverageAnswer::Covered(HSeparation { component, separator, bound: 2 * k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::Bipartite;

    #[test]
    fn bipartite_graph_single_vertex() {
        let g = Graph::cycle(6);
        let z = VertexSet::from([2]);
        match weak_coverage(&g, &z, 1, &Bipartite).unwrap() {
            CoverageAnswer::Covered(sep) => {
                assert!(sep.holds(&g, &Bipartite));
                assert!(sep.weakly_covers(&z));
                assert!(sep.separator.len() <= 2);
            }
            CoverageAnswer::NoCoverage => panic!("C6 is bipartite"),
        }
    }

    #[test]
    fn clique_cannot_be_covered() {
        let g = Graph::complete(5);
        let run = weak_coverage_run(&g, &g.vertex_set(), 1, &Bipartite).unwrap();
        assert_eq!(run.answer, CoverageAnswer::NoCoverage);
        assert!(run.oracle_budgets.keys().all(|&b| b == 2));
        assert!(run.improvements <= g.n());
    }

    #[test]
    fn empty_z_rejected() {
        let g = Graph::path(3);
        assert_eq!(weak_coverage(&g, &VertexSet::new(), 1, &Bipartite), Err(Error::EmptyTerminals));
    }

    #[test]
    fn small_z_swallowed_by_cut() {
        // |Z| ≤ 2k: the first cut is Z itself against X = V.
        let g = Graph::complete(5);
        let z = VertexSet::from([0, 1]);
        match weak_coverage(&g, &z, 1, &Bipartite).unwrap() {
            CoverageAnswer::Covered(sep) => {
                assert_eq!(sep.separator, z);
                assert!(sep.component.is_empty());
                assert!(sep.holds(&g, &Bipartite));
            }
            other => panic!("{other:?}"),
        }
    }
}
