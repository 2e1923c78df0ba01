//! 5-approximate tree H-decompositions.
//!
//! [`decompose`] keeps an H-deletion set `X` of the whole graph (initially all
//! of `V`) and recursively splits vertex sets `W` whose boundary lies in a small
//! set `S`. Each step pads `S` to `3k + 4` vertices and runs
//! [`four_outcome_subroutine`], which either
//!
//! 1. splits the padded set in a balanced way with a separator of order at most
//!    `k + 1`,
//! 2. separates `2k + 3` of its vertices from `X` with at most `2k + 2` vertices,
//!    splitting off a base component,
//! 3. shrinks `X` through a single deletion-oracle call, or
//! 4. proves that the H-treewidth exceeds `k`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::class::{ClassOracle, CountingOracle, DeletionAnswer};
use crate::decomposition::TreeHDecomposition;
use crate::error::{Error, Result};
use crate::flow::{min_vertex_separator, FlowResult};
use crate::graph::{Graph, Separation, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubroutineOutcome {
    /// `S = side_a ∪ side_b`, both of size at most `2k + 2`, `side_a ⊆ A`,
    /// `side_b ⊆ B`, order at most `k + 1`.
    BalancedSplit { side_a: VertexSet, side_b: VertexSet, separation: Separation },
    /// `anchor ⊆ S` of size `2k + 3` inside `A`, the deletion set inside `B`,
    /// order at most `2k + 2`.
    BaseSplit { anchor: VertexSet, separation: Separation },
    /// A strictly smaller H-deletion set.
    ImprovedDeletionSet(VertexSet),
    /// The H-treewidth of the graph exceeds `k`.
    RejectWidth,
}

impl SubroutineOutcome {
    pub fn tag(&self) -> &'static str {
        match self {
            SubroutineOutcome::BalancedSplit { .. } => "balanced-split",
            SubroutineOutcome::BaseSplit { .. } => "base-split",
            SubroutineOutcome::ImprovedDeletionSet(_) => "improved-deletion-set",
            SubroutineOutcome::RejectWidth => "reject-width",
        }
    }

    /// Phase of the subroutine that produced this outcome.
    pub fn phase(&self) -> u8 {
        match self {
            SubroutineOutcome::BalancedSplit { .. } => 1,
            SubroutineOutcome::BaseSplit { .. } => 2,
            SubroutineOutcome::ImprovedDeletionSet(_) | SubroutineOutcome::RejectWidth => 3,
        }
    }
}

/// Replaces `x_prime ⊆ x` by a smaller set if the oracle finds one.
///
/// Returns `(x \ x_prime) ∪ Y` when the oracle reports a minimum deletion set
/// `Y` of `G - (x \ x_prime)` with `|Y| < |x_prime|`.
pub fn improve_deletion_set(
    g: &Graph,
    x: &VertexSet,
    x_prime: &VertexSet,
    class: &dyn ClassOracle,
    budget: usize,
) -> Result<Option<VertexSet>> {
    if x_prime.is_empty() {
        return Ok(None);
    }
    let kept = x.difference(x_prime);
    let (rest, map) = g.remove_vertices(&kept)?;
    match class.min_deletion(&rest, budget) {
        DeletionAnswer::Found(y) if y.len() < x_prime.len() => Ok(Some(kept.union(&map.to_host(&y)))),
        _ => Ok(None),
    }
}

/// Characteristic vectors of length `len`, in lexicographic order with the
/// first position most significant.
fn characteristic_vectors(len: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << len).map(move |code| (0..len).map(|i| code >> (len - 1 - i) & 1 == 1).collect())
}

/// `size`-subsets of `items` in lexicographic order.
fn combinations(items: &[usize], size: usize) -> Vec<VertexSet> {
    fn go(items: &[usize], size: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if cur.len() == size {
            out.push(cur.iter().copied().collect());
            return;
        }
        for i in from..items.len() {
            if items.len() - i < size - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, size, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, size, 0, &mut Vec::with_capacity(size), &mut out);
    out
}

/// One round of the win/win step on a set `s` of exactly `3k + 4` vertices.
///
/// Phases run in order and the first feasible candidate wins: balanced
/// partitions of `s`, then `(2k+3)`-subsets that can be cut off from `x`, then
/// deletion-set improvement using the path families from phase 2.
pub fn four_outcome_subroutine(
    g: &Graph,
    k: usize,
    x: &VertexSet,
    s: &VertexSet,
    class: &dyn ClassOracle,
) -> Result<SubroutineOutcome> {
    if s.len() != 3 * k + 4 {
        return Err(Error::SetSize { expected: 3 * k + 4, actual: s.len() });
    }
    s.check_within(g.n())?;
    x.check_within(g.n())?;
    let members = s.to_vec();

    for in_a in characteristic_vectors(members.len()) {
        let side_a: VertexSet = members.iter().zip(&in_a).filter(|(_, &a)| a).map(|(&v, _)| v).collect();
        let side_b = s.difference(&side_a);
        if side_a.len() > 2 * k + 2 || side_b.len() > 2 * k + 2 {
            continue;
        }
        if let FlowResult::SmallCut(separation) = min_vertex_separator(g, &side_a, &side_b, k + 1)? {
            return Ok(SubroutineOutcome::BalancedSplit { side_a, side_b, separation });
        }
    }

    let anchors = combinations(&members, 2 * k + 3);
    if x.is_empty() {
        // Nothing to separate from: the whole graph is one base side.
        let separation = Separation::new(g.vertex_set(), VertexSet::new());
        return Ok(SubroutineOutcome::BaseSplit { anchor: anchors[0].clone(), separation });
    }
    let mut endpoints = Vec::with_capacity(anchors.len());
    for anchor in anchors {
        match min_vertex_separator(g, &anchor, x, 2 * k + 2)? {
            FlowResult::SmallCut(separation) => {
                return Ok(SubroutineOutcome::BaseSplit { anchor, separation });
            }
            FlowResult::ManyPaths(paths) => endpoints.push(paths.ends()),
        }
    }

    for x_prime in endpoints {
        if let Some(better) = improve_deletion_set(g, x, &x_prime, class, 2 * k + 2)? {
            return Ok(SubroutineOutcome::ImprovedDeletionSet(better));
        }
    }
    Ok(SubroutineOutcome::RejectWidth)
}

/// Result of [`decompose`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Decomposed(TreeHDecomposition),
    /// The H-treewidth of the input exceeds `k`.
    WidthExceeded,
}

impl Outcome {
    pub fn decomposition(&self) -> Option<&TreeHDecomposition> {
        match self {
            Outcome::Decomposed(d) => Some(d),
            Outcome::WidthExceeded => None,
        }
    }
}

/// One record per subroutine invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRecord {
    pub subproblem_size: usize,
    pub phase: u8,
    pub outcome: &'static str,
    pub deletion_set_size: usize,
    /// Oracle calls made by this invocation.
    pub oracle_calls: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecomposeStats {
    pub subroutine_calls: usize,
    pub subproblems: usize,
    pub improvements: usize,
    pub oracle_calls: usize,
    /// Budget passed to the oracle -> number of calls.
    pub oracle_budgets: BTreeMap<usize, usize>,
    pub largest_oracle_input: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposeRun {
    pub outcome: Outcome,
    pub stats: DecomposeStats,
    pub trace: Vec<TraceRecord>,
    /// The H-deletion set held when the run ended.
    pub deletion_set: VertexSet,
}

/// State of a single decomposition run: the shared deletion set and counters.
pub struct Decomposer<'a> {
    g: &'a Graph,
    k: usize,
    oracle: CountingOracle<'a>,
    deletion_set: VertexSet,
    stats: DecomposeStats,
    trace: Option<Vec<TraceRecord>>,
}

impl<'a> Decomposer<'a> {
    pub fn new(g: &'a Graph, k: usize, class: &'a dyn ClassOracle) -> Self {
        Self {
            g,
            k,
            oracle: CountingOracle::new(class),
            deletion_set: g.vertex_set(),
            stats: DecomposeStats::default(),
            trace: None,
        }
    }

    /// Record a [`TraceRecord`] for every subroutine invocation.
    pub fn with_trace(mut self) -> Self {
        self.trace = Some(Vec::new());
        self
    }

    pub fn deletion_set(&self) -> &VertexSet {
        &self.deletion_set
    }

    /// Solves the top-level subproblem `(S, W) = (∅, V)`.
    pub fn run(mut self) -> Result<DecomposeRun> {
        let all = self.g.vertex_set();
        let outcome = match self.decompose_subproblem(&VertexSet::new(), &all)? {
            Some(d) => Outcome::Decomposed(d),
            None => Outcome::WidthExceeded,
        };
        self.stats.oracle_calls = self.oracle.calls();
        self.stats.oracle_budgets = self.oracle.budgets();
        self.stats.largest_oracle_input = self.oracle.largest_input();
        Ok(DecomposeRun {
            outcome,
            stats: self.stats,
            trace: self.trace.unwrap_or_default(),
            deletion_set: self.deletion_set,
        })
    }

    /// Decomposes `G[w]` with `s` in the root bag and outside the base set.
    /// `None` means the H-treewidth exceeds `k`.
    ///
    /// Requires `s ⊆ w`, `∂(w) ⊆ s` and `|s| ≤ 3k + 3`; violations are reported
    /// as [`Error::Internal`].
    pub fn decompose_subproblem(&mut self, s: &VertexSet, w: &VertexSet) -> Result<Option<TreeHDecomposition>> {
        let k = self.k;
        self.check_subproblem(s, w)?;
        self.stats.subproblems += 1;
        if w.len() <= 5 * k + 6 {
            return Ok(Some(TreeHDecomposition::single(w.clone())));
        }
        let padded: VertexSet = s
            .iter()
            .chain(w.difference(s).iter().take(3 * k + 4 - s.len()))
            .collect();

        loop {
            let calls_before = self.oracle.calls();
            let outcome = four_outcome_subroutine(self.g, k, &self.deletion_set, &padded, &self.oracle)?;
            self.stats.subroutine_calls += 1;
            if let Some(trace) = &mut self.trace {
                trace.push(TraceRecord {
                    subproblem_size: w.len(),
                    phase: outcome.phase(),
                    outcome: outcome.tag(),
                    deletion_set_size: self.deletion_set.len(),
                    oracle_calls: self.oracle.calls() - calls_before,
                });
            }

            let decomposition = match outcome {
                SubroutineOutcome::BalancedSplit { side_a, side_b, separation } => {
                    let (a_w, b_w) = (separation.a.intersection(w), separation.b.intersection(w));
                    let middle = a_w.intersection(&b_w);
                    let Some(da) = self.decompose_subproblem(&side_a.union(&middle), &a_w)? else {
                        return Ok(None);
                    };
                    let Some(db) = self.decompose_subproblem(&side_b.union(&middle), &b_w)? else {
                        return Ok(None);
                    };
                    TreeHDecomposition::merge(&da, &db, padded.union(&middle))
                }
                SubroutineOutcome::BaseSplit { separation, .. } => {
                    let (a_w, b_w) = (separation.a.intersection(w), separation.b.intersection(w));
                    let middle = a_w.intersection(&b_w);
                    let root_a = padded.intersection(&a_w).union(&middle);
                    let da = TreeHDecomposition::with_leaf(root_a.clone(), a_w.clone(), a_w.difference(&root_a));
                    let Some(db) = self.decompose_subproblem(&padded.difference(&a_w).union(&middle), &b_w)? else {
                        return Ok(None);
                    };
                    TreeHDecomposition::merge(&da, &db, padded.union(&middle))
                }
                SubroutineOutcome::ImprovedDeletionSet(better) => {
                    if better.len() >= self.deletion_set.len() {
                        return Err(Error::Internal(format!(
                            "deletion set did not shrink: {} -> {}",
                            self.deletion_set.len(),
                            better.len()
                        )));
                    }
                    self.deletion_set = better;
                    self.stats.improvements += 1;
                    continue;
                }
                SubroutineOutcome::RejectWidth => return Ok(None),
            };
            self.check_result(s, &decomposition)?;
            return Ok(Some(decomposition));
        }
    }

    fn check_subproblem(&self, s: &VertexSet, w: &VertexSet) -> Result<()> {
        w.check_within(self.g.n())?;
        if !s.is_subset(w) {
            return Err(Error::Internal(format!("boundary set {s:?} not inside {w:?}")));
        }
        if s.len() > 3 * self.k + 3 {
            return Err(Error::Internal(format!("boundary set of size {} exceeds 3k+3", s.len())));
        }
        if !self.g.boundary(w).is_subset(s) {
            return Err(Error::Internal(format!("boundary of {w:?} escapes {s:?}")));
        }
        Ok(())
    }

    fn check_result(&self, s: &VertexSet, d: &TreeHDecomposition) -> Result<()> {
        let k = self.k;
        if !s.is_subset(d.root_bag()) || !s.is_disjoint(&d.base_set) {
            return Err(Error::Internal(format!("root bag lost part of {s:?}")));
        }
        if d.max_bag_size() > 5 * k + 6 {
            return Err(Error::Internal(format!("bag of size {} exceeds 5k+6", d.max_bag_size())));
        }
        Ok(())
    }
}

/// Computes a tree H-decomposition of width at most `5k + 5`, or concludes
/// that the H-treewidth of `g` exceeds `k`.
///
/// Errors only on internal invariant violations.
pub fn decompose(g: &Graph, k: usize, class: &dyn ClassOracle) -> Result<Outcome> {
    Ok(Decomposer::new(g, k, class).run()?.outcome)
}
