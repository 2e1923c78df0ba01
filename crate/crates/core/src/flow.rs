//! Vertex-capacitated Ford-Fulkerson.
//!
//! Every vertex `v` is split into an arc `v_in -> v_out` of capacity one; graph
//! edges and terminal arcs have unbounded capacity. Augmenting paths are found by
//! breadth-first search over arcs stored in increasing id order, so the cut and
//! the path family returned for a given input never change between runs.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Separation, VertexSet};

const UNBOUNDED: u32 = u32::MAX;

/// Pairwise vertex-disjoint `(X, Y)`-paths as vertex sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamily {
    pub paths: Vec<Vec<usize>>,
}

impl PathFamily {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// First vertex of every path (the `X` ends).
    pub fn starts(&self) -> VertexSet {
        self.paths.iter().map(|p| p[0]).collect()
    }

    /// Last vertex of every path (the `Y` ends).
    pub fn ends(&self) -> VertexSet {
        self.paths.iter().map(|p| p[p.len() - 1]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlowResult {
    /// `λ(X, Y) ≤ k`: a minimum-order separation with `X ⊆ A`, `Y ⊆ B`.
    SmallCut(Separation),
    /// `λ(X, Y) > k`: exactly `k + 1` disjoint paths.
    ManyPaths(PathFamily),
}

/// Decides `λ_G(x, y) ≤ k` using at most `k + 1` augmentation rounds.
pub fn min_vertex_separator(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    k: usize,
) -> Result<FlowResult> {
    let mut net = FlowNetwork::new(g, x, y)?;
    while net.value() <= k {
        if !net.augment() {
            return Ok(FlowResult::SmallCut(net.min_cut()));
        }
    }
    Ok(FlowResult::ManyPaths(net.paths()))
}

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    residual: u32,
    capacity: u32,
}

/// Residual network of the vertex-split flow problem.
#[derive(Clone, Debug)]
pub struct FlowNetwork<'g> {
    g: &'g Graph,
    x: VertexSet,
    y: VertexSet,
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    /// Vertices of `x ∩ y` not yet routed as trivial paths.
    pending_shared: VecDeque<usize>,
    value: usize,
    rounds: usize,
}

impl<'g> FlowNetwork<'g> {
    pub fn new(g: &'g Graph, x: &VertexSet, y: &VertexSet) -> Result<Self> {
        if x.is_empty() || y.is_empty() {
            return Err(Error::EmptyTerminals);
        }
        x.check_within(g.n())?;
        y.check_within(g.n())?;
        let n = g.n();
        let mut net = Self {
            g,
            x: x.clone(),
            y: y.clone(),
            arcs: Vec::with_capacity(4 * (n + g.m()) + 2 * (x.len() + y.len())),
            out: vec![Vec::new(); 2 * n + 2],
            pending_shared: x.intersection(y).into_iter().collect(),
            value: 0,
            rounds: 0,
        };
        for v in g.vertices() {
            net.add_arc(in_node(v), out_node(v), 1);
        }
        for v in g.vertices() {
            for &u in g.neighbors(v) {
                net.add_arc(out_node(v), in_node(u), UNBOUNDED);
            }
        }
        let (source, sink) = (net.source(), net.sink());
        for v in x {
            net.add_arc(source, in_node(v), UNBOUNDED);
        }
        for v in y {
            net.add_arc(out_node(v), sink, UNBOUNDED);
        }
        Ok(net)
    }

    fn source(&self) -> usize {
        2 * self.g.n()
    }

    fn sink(&self) -> usize {
        2 * self.g.n() + 1
    }

    fn add_arc(&mut self, from: usize, to: usize, capacity: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, residual: capacity, capacity });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, residual: 0, capacity: 0 });
    }

    fn push(&mut self, arc: usize) {
        if self.arcs[arc].residual != UNBOUNDED {
            self.arcs[arc].residual -= 1;
        }
        let rev = arc ^ 1;
        if self.arcs[rev].residual != UNBOUNDED {
            self.arcs[rev].residual += 1;
        }
    }

    /// Current flow value.
    pub fn value(&self) -> usize {
        self.value
    }

    /// Augmentation rounds performed so far, successful or not.
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// One augmentation round. Returns `false` when the flow is maximum.
    pub fn augment(&mut self) -> bool {
        self.rounds += 1;
        if let Some(v) = self.pending_shared.pop_front() {
            let (source, sink) = (self.source(), self.sink());
            let route = [
                self.arc_between(source, in_node(v)),
                self.arc_between(in_node(v), out_node(v)),
                self.arc_between(out_node(v), sink),
            ];
            for arc in route {
                self.push(arc);
            }
            self.value += 1;
            return true;
        }
        let parent_arc = self.search();
        if parent_arc[self.sink()] == usize::MAX {
            return false;
        }
        let mut node = self.sink();
        while node != self.source() {
            let arc = parent_arc[node];
            self.push(arc);
            node = self.arcs[arc ^ 1].to;
        }
        self.value += 1;
        true
    }

    fn arc_between(&self, from: usize, to: usize) -> usize {
        self.out[from]
            .iter()
            .copied()
            .find(|&a| a % 2 == 0 && self.arcs[a].to == to)
            .expect("network arc exists")
    }

    /// Breadth-first search in the residual network; returns the arc used to
    /// enter each node (`usize::MAX` when unreached).
    fn search(&self) -> Vec<usize> {
        let nodes = self.out.len();
        let mut parent_arc = vec![usize::MAX; nodes];
        let mut seen = vec![false; nodes];
        let mut queue = VecDeque::new();
        seen[self.source()] = true;
        queue.push_back(self.source());
        while let Some(node) = queue.pop_front() {
            for &arc in &self.out[node] {
                let Arc { to, residual, .. } = self.arcs[arc];
                if residual > 0 && !seen[to] {
                    seen[to] = true;
                    parent_arc[to] = arc;
                    if to == self.sink() {
                        return parent_arc;
                    }
                    queue.push_back(to);
                }
            }
        }
        parent_arc
    }

    fn reachable_nodes(&self) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        let mut queue = VecDeque::from([self.source()]);
        seen[self.source()] = true;
        while let Some(node) = queue.pop_front() {
            for &arc in &self.out[node] {
                let Arc { to, residual, .. } = self.arcs[arc];
                if residual > 0 && !seen[to] {
                    seen[to] = true;
                    queue.push_back(to);
                }
            }
        }
        seen
    }

    /// Separation read off residual reachability: `A` holds vertices whose
    /// in-copy is reachable, `B` those whose out-copy is not. `A ∩ B` is exactly
    /// the set of saturated vertex arcs crossing the cut. Meaningful only once
    /// [`augment`](Self::augment) has returned `false`.
    pub fn min_cut(&self) -> Separation {
        let reach = self.reachable_nodes();
        let a = self.g.vertices().filter(|&v| reach[in_node(v)]).collect();
        let b = self.g.vertices().filter(|&v| !reach[out_node(v)]).collect();
        Separation::new(a, b)
    }

    /// Decomposes the current flow into vertex-disjoint paths, one per unit.
    ///
    /// Each path is trimmed to run from its last `X` vertex to the first `Y`
    /// vertex after it, so inner vertices avoid `X ∪ Y`.
    pub fn paths(&self) -> PathFamily {
        let source = self.source();
        let sink = self.sink();
        let mut paths = Vec::with_capacity(self.value);
        for &first in &self.out[source] {
            if first % 2 == 1 || self.flow_on(first) == 0 {
                continue;
            }
            let mut walk = Vec::new();
            let mut node = self.arcs[first].to;
            while node != sink {
                if node.is_multiple_of(2) {
                    walk.push(node / 2);
                }
                node = self.out[node]
                    .iter()
                    .copied()
                    .find(|&a| a % 2 == 0 && self.flow_on(a) > 0)
                    .map(|a| self.arcs[a].to)
                    .expect("flow is conserved");
            }
            let end = walk.iter().position(|&v| self.y.contains(v)).expect("path reaches Y");
            walk.truncate(end + 1);
            let start = walk.iter().rposition(|&v| self.x.contains(v)).expect("path leaves X");
            walk.drain(..start);
            paths.push(walk);
        }
        PathFamily { paths }
    }

    fn flow_on(&self, arc: usize) -> u32 {
        let a = &self.arcs[arc];
        if a.capacity == UNBOUNDED {
            // Flow on an unbounded arc shows up on its reverse.
            self.arcs[arc ^ 1].residual
        } else {
            a.capacity - a.residual
        }
    }
}

fn in_node(v: usize) -> usize {
    2 * v
}

fn out_node(v: usize) -> usize {
    2 * v + 1
}
