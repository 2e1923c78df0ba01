//! Hereditary, union-closed graph classes given as a membership test plus an
//! exact, budgeted minimum-deletion solver.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::{Cell, RefCell};

use crate::error::{Error, Result};
use crate::flow::{min_vertex_separator, FlowResult};
use crate::graph::{Graph, VertexSet};

/// Names accepted by [`preset`].
pub const PRESET_NAMES: [&str; 4] = ["bipartite", "edgeless", "triangle-free", "cluster"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeletionAnswer {
    /// A minimum-size deletion set, no larger than the budget.
    Found(VertexSet),
    ExceedsBudget,
}

impl DeletionAnswer {
    pub fn found(&self) -> Option<&VertexSet> {
        match self {
            DeletionAnswer::Found(x) => Some(x),
            DeletionAnswer::ExceedsBudget => None,
        }
    }
}

/// A hereditary, union-closed graph class.
///
/// `min_deletion` must return a minimum-size deletion set whenever one of size
/// at most `budget` exists, and `ExceedsBudget` otherwise.
pub trait ClassOracle {
    fn name(&self) -> &str;
    fn is_member(&self, g: &Graph) -> bool;
    fn min_deletion(&self, g: &Graph, budget: usize) -> DeletionAnswer;
}

impl<T: ClassOracle + ?Sized> ClassOracle for &T {
    fn name(&self) -> &str {
        (**self).name()
    }
    fn is_member(&self, g: &Graph) -> bool {
        (**self).is_member(g)
    }
    fn min_deletion(&self, g: &Graph, budget: usize) -> DeletionAnswer {
        (**self).min_deletion(g, budget)
    }
}

impl<T: ClassOracle + ?Sized> ClassOracle for Box<T> {
    fn name(&self) -> &str {
        (**self).name()
    }
    fn is_member(&self, g: &Graph) -> bool {
        (**self).is_member(g)
    }
    fn min_deletion(&self, g: &Graph, budget: usize) -> DeletionAnswer {
        (**self).min_deletion(g, budget)
    }
}

/// Looks up one of the built-in classes by name.
pub fn preset(name: &str) -> Option<Box<dyn ClassOracle>> {
    let family = match name {
        "bipartite" => return Some(Box::new(Bipartite)),
        "edgeless" => Graph::complete(2),
        "triangle-free" => Graph::complete(3),
        "cluster" => Graph::path(3),
        _ => return None,
    };
    let class = ForbiddenInducedSubgraphs::new(name, vec![family]).expect("preset families are valid");
    Some(Box::new(class))
}

/// Wraps an oracle and records every `min_deletion` call.
pub struct CountingOracle<'a> {
    inner: &'a dyn ClassOracle,
    calls: Cell<usize>,
    budgets: RefCell<BTreeMap<usize, usize>>,
    largest_input: Cell<usize>,
}

impl<'a> CountingOracle<'a> {
    pub fn new(inner: &'a dyn ClassOracle) -> Self {
        Self {
            inner,
            calls: Cell::new(0),
            budgets: RefCell::new(BTreeMap::new()),
            largest_input: Cell::new(0),
        }
    }

    pub fn calls(&self) -> usize {
        self.calls.get()
    }

    /// Budget value -> number of calls made with it.
    pub fn budgets(&self) -> BTreeMap<usize, usize> {
        self.budgets.borrow().clone()
    }

    /// Largest vertex count passed to `min_deletion`.
    pub fn largest_input(&self) -> usize {
        self.largest_input.get()
    }
}

impl ClassOracle for CountingOracle<'_> {
    fn name(&self) -> &str {
        self.inner.name()
    }

    fn is_member(&self, g: &Graph) -> bool {
        self.inner.is_member(g)
    }

    fn min_deletion(&self, g: &Graph, budget: usize) -> DeletionAnswer {
        self.calls.set(self.calls.get() + 1);
        *self.budgets.borrow_mut().entry(budget).or_default() += 1;
        self.largest_input.set(self.largest_input.get().max(g.n()));
        self.inner.min_deletion(g, budget)
    }
}

// ---------------------------------------------------------------------------
// Bipartite graphs / odd cycle transversal
// ---------------------------------------------------------------------------

/// Graphs without odd cycles.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bipartite;

impl ClassOracle for Bipartite {
    fn name(&self) -> &str {
        "bipartite"
    }

    fn is_member(&self, g: &Graph) -> bool {
        two_coloring(g).is_some()
    }

    fn min_deletion(&self, g: &Graph, budget: usize) -> DeletionAnswer {
        bipartite_min_deletion(g, budget)
    }
}

/// A proper 2-coloring, each component colored by BFS from its smallest vertex
/// with color `false`.
pub fn two_coloring(g: &Graph) -> Option<Vec<bool>> {
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    let mut stack = Vec::new();
    for root in g.vertices() {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        stack.push(root);
        while let Some(v) = stack.pop() {
            let c = color[v].expect("colored before push");
            for &u in g.neighbors(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!c);
                        stack.push(u);
                    }
                    Some(cu) if cu == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
}

pub fn bipartite_membership(g: &Graph) -> bool {
    two_coloring(g).is_some()
}

/// Minimum odd cycle transversal of size at most `budget`, by iterative
/// compression run for each candidate size in increasing order.
pub fn bipartite_min_deletion(g: &Graph, budget: usize) -> DeletionAnswer {
    for size in 0..=budget.min(g.n()) {
        if let Some(x) = oct_at_most(g, size) {
            return DeletionAnswer::Found(x);
        }
    }
    DeletionAnswer::ExceedsBudget
}

/// Iterative compression. Vertices are added in decreasing id order, which
/// makes small ids the preferred deletions among equal-size solutions.
fn oct_at_most(g: &Graph, size: usize) -> Option<VertexSet> {
    let mut present = VertexSet::new();
    let mut solution = VertexSet::new();
    for v in g.vertices().rev() {
        present.insert(v);
        solution.insert(v);
        if solution.len() > size {
            let (sub, map) = g.induced_subgraph(&present).expect("ids in range");
            let local = map.to_local(&solution);
            solution = map.to_host(&compress_oct(&sub, &local, size)?);
        }
    }
    Some(solution)
}

/// Given an odd cycle transversal `solution` of `g` with `|solution| = size + 1`,
/// finds one of size at most `size`, or proves none exists.
///
/// Each vertex of the old solution is either deleted or kept on one of the two
/// sides. Fixing the sides of the kept vertices forces colors on their
/// neighbors in `g - solution`; relative to a fixed coloring of that bipartite
/// graph, forced vertices either must flip or must keep their color, and the
/// remaining deletions are a minimum vertex cut between those two groups.
fn compress_oct(g: &Graph, solution: &VertexSet, size: usize) -> Option<VertexSet> {
    let old: Vec<usize> = solution.to_vec();
    let (rest, rest_map) = g.remove_vertices(solution).expect("ids in range");
    let base_color = two_coloring(&rest).expect("solution is a transversal");

    let assignments = 3usize.pow(old.len() as u32);
    for code in 0..assignments {
        // 0 = delete, 1 = side false, 2 = side true; first vertex most significant.
        let mut side: Vec<Option<bool>> = Vec::with_capacity(old.len());
        let mut rem = code;
        let mut digits = vec![0; old.len()];
        for d in digits.iter_mut().rev() {
            *d = rem % 3;
            rem /= 3;
        }
        let mut deleted = VertexSet::new();
        for (&v, &d) in old.iter().zip(&digits) {
            match d {
                0 => {
                    deleted.insert(v);
                    side.push(None);
                }
                1 => side.push(Some(false)),
                _ => side.push(Some(true)),
            }
        }
        if deleted.len() > size {
            continue;
        }
        let kept_conflict = old.iter().enumerate().any(|(i, &v)| {
            side[i].is_some()
                && old.iter().enumerate().skip(i + 1).any(|(j, &u)| side[j] == side[i] && g.has_edge(u, v))
        });
        if kept_conflict {
            continue;
        }

        let mut must_flip = VertexSet::new();
        let mut must_keep = VertexSet::new();
        for (i, &w) in old.iter().enumerate() {
            let Some(s) = side[i] else { continue };
            for &u in g.neighbors(w) {
                let Some(lu) = rest_map.local(u) else { continue };
                // u must take the color opposite to w.
                if base_color[lu] == s {
                    must_flip.insert(lu);
                } else {
                    must_keep.insert(lu);
                }
            }
        }
        let remaining = size - deleted.len();
        let cut = if must_flip.is_empty() || must_keep.is_empty() {
            VertexSet::new()
        } else {
            match min_vertex_separator(&rest, &must_flip, &must_keep, remaining).expect("valid terminals") {
                FlowResult::SmallCut(sep) => sep.separator(),
                FlowResult::ManyPaths(_) => continue,
            }
        };
        return Some(deleted.union(&rest_map.to_host(&cut)));
    }
    None
}

// ---------------------------------------------------------------------------
// Finite families of forbidden induced subgraphs
// ---------------------------------------------------------------------------

/// Largest forbidden graph accepted; pattern tables have `2^(c(c-1)/2)` entries.
pub const MAX_OBSTRUCTION_ORDER: usize = 6;

#[derive(Clone, Debug)]
struct Pattern {
    order: usize,
    min_degree: usize,
    edges: usize,
    /// Indexed by the pair-bitmask of an ordered vertex tuple.
    labelings: Vec<bool>,
}

impl Pattern {
    fn new(h: &Graph) -> Self {
        let c = h.n();
        let mut labelings = vec![false; 1 << (c * c.saturating_sub(1) / 2)];
        let mut perm: Vec<usize> = (0..c).collect();
        loop {
            let code = pair_code(c, |i, j| h.has_edge(perm[i], perm[j]));
            labelings[code] = true;
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Self {
            order: c,
            min_degree: h.vertices().map(|v| h.degree(v)).min().unwrap_or(0),
            edges: h.m(),
            labelings,
        }
    }
}

/// Bitmask over pairs `i < j` of `0..c`, pair order `(0,1),(0,2),..,(1,2),..`.
fn pair_code(c: usize, adjacent: impl Fn(usize, usize) -> bool) -> usize {
    let mut code = 0;
    let mut bit = 0;
    for i in 0..c {
        for j in i + 1..c {
            if adjacent(i, j) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Graphs containing none of a finite family of connected graphs as an induced
/// subgraph.
#[derive(Clone, Debug)]
pub struct ForbiddenInducedSubgraphs {
    name: String,
    family: Vec<Graph>,
    patterns: Vec<Pattern>,
}

impl ForbiddenInducedSubgraphs {
    /// Every forbidden graph must be connected (so the class is union-closed)
    /// and have between 1 and [`MAX_OBSTRUCTION_ORDER`] vertices.
    pub fn new(name: impl Into<String>, family: Vec<Graph>) -> Result<Self> {
        for (i, h) in family.iter().enumerate() {
            if h.n() == 0 {
                return Err(Error::BadObstruction(i, "empty graph"));
            }
            if h.n() > MAX_OBSTRUCTION_ORDER {
                return Err(Error::BadObstruction(i, "more than 6 vertices"));
            }
            if !h.is_connected() {
                return Err(Error::BadObstruction(i, "disconnected, class would not be union-closed"));
            }
        }
        let patterns = family.iter().map(Pattern::new).collect();
        Ok(Self { name: name.into(), family, patterns })
    }

    pub fn family(&self) -> &[Graph] {
        &self.family
    }

    /// Lexicographically smallest vertex set of `g - deleted` inducing a member
    /// of the family, as a sorted list.
    pub fn find_obstruction(&self, g: &Graph, deleted: &VertexSet) -> Option<Vec<usize>> {
        let alive: Vec<bool> = deleted.mask(g.n()).into_iter().map(|d| !d).collect();
        self.patterns
            .iter()
            .filter_map(|p| first_occurrence(g, &alive, p))
            .min()
    }

    fn branch(&self, g: &Graph, deleted: &mut VertexSet, budget: usize) -> bool {
        let Some(obstruction) = self.find_obstruction(g, deleted) else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        for v in obstruction {
            deleted.insert(v);
            if self.branch(g, deleted, budget - 1) {
                return true;
            }
            deleted.remove(v);
        }
        false
    }
}

fn first_occurrence(g: &Graph, alive: &[bool], pattern: &Pattern) -> Option<Vec<usize>> {
    let candidates: Vec<usize> = g
        .vertices()
        .filter(|&v| alive[v] && g.degree(v) >= pattern.min_degree)
        .collect();
    let mut chosen = Vec::with_capacity(pattern.order);
    extend_choice(g, &candidates, 0, &mut chosen, 0, pattern).then_some(chosen)
}

fn extend_choice(
    g: &Graph,
    candidates: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    edges: usize,
    pattern: &Pattern,
) -> bool {
    if chosen.len() == pattern.order {
        let code = pair_code(pattern.order, |i, j| g.has_edge(chosen[i], chosen[j]));
        return pattern.labelings[code];
    }
    let needed = pattern.order - chosen.len();
    for idx in from..candidates.len() {
        if candidates.len() - idx < needed {
            break;
        }
        let v = candidates[idx];
        let added = chosen.iter().filter(|&&u| g.has_edge(u, v)).count();
        if edges + added > pattern.edges {
            continue;
        }
        chosen.push(v);
        if extend_choice(g, candidates, idx + 1, chosen, edges + added, pattern) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn forbidden_family_membership(g: &Graph, class: &ForbiddenInducedSubgraphs) -> bool {
    class.find_obstruction(g, &VertexSet::new()).is_none()
}

/// Bounded search tree: any obstruction must lose one of its at most `c`
/// vertices. Sizes are tried in increasing order so the first hit is minimum.
pub fn forbidden_family_min_deletion(
    g: &Graph,
    class: &ForbiddenInducedSubgraphs,
    budget: usize,
) -> DeletionAnswer {
    for size in 0..=budget.min(g.n()) {
        let mut deleted = VertexSet::new();
        if class.branch(g, &mut deleted, size) {
            return DeletionAnswer::Found(deleted);
        }
    }
    DeletionAnswer::ExceedsBudget
}

impl ClassOracle for ForbiddenInducedSubgraphs {
    fn name(&self) -> &str {
        &self.name
    }

    fn is_member(&self, g: &Graph) -> bool {
        forbidden_family_membership(g, self)
    }

    fn min_deletion(&self, g: &Graph, budget: usize) -> DeletionAnswer {
        forbidden_family_min_deletion(g, self, budget)
    }
}
