//! Simple undirected graphs over dense vertex ids `0..n`, vertex sets, and
//! separations.

use alloc::collections::{btree_set, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A set of vertex ids. Iteration is always in increasing id order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(BTreeSet::new())
    }

    /// `{0, 1, ..., n - 1}`.
    pub fn range(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &Self) -> Self {
        Self(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Characteristic vector of length `n`. Ids `>= n` are ignored.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter().take_while(|&v| v < n) {
            mask[v] = true;
        }
        mask
    }

    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.last() {
            Some(v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(ids: [usize; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = btree_set::IntoIter<usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = core::iter::Copied<btree_set::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// A pair `(A, B)` with `A ∪ B = V` and no edge between `A \ B` and `B \ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Separation {
    pub fn new(a: VertexSet, b: VertexSet) -> Self {
        Self { a, b }
    }

    /// `A ∩ B`.
    pub fn separator(&self) -> VertexSet {
        self.a.intersection(&self.b)
    }

    pub fn order(&self) -> usize {
        self.separator().len()
    }
}

/// Id translation between a host graph and one of its induced subgraphs.
///
/// Local ids are assigned in increasing order of host ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    host_of_local: Vec<usize>,
}

impl Relabeling {
    pub fn host(&self, local: usize) -> usize {
        self.host_of_local[local]
    }

    pub fn local(&self, host: usize) -> Option<usize> {
        self.host_of_local.binary_search(&host).ok()
    }

    pub fn to_host(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|v| self.host_of_local[v]).collect()
    }

    pub fn to_local(&self, set: &VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.local(v)).collect()
    }

    pub fn hosts(&self) -> &[usize] {
        &self.host_of_local
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and out-of-range ids.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self { adj, m })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        Self { adj, m: n * n.saturating_sub(1) / 2 }
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are simple")
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Self::new(a + b, edges).expect("biclique edges are simple")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&u| u + shift).collect()));
        Graph { adj, m: self.m + other.m }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> core::ops::Range<usize> {
        0..self.n()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::range(self.n())
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// `G[s]` together with the id translation.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Relabeling)> {
        s.check_within(self.n())?;
        let relabel = Relabeling { host_of_local: s.to_vec() };
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in relabel.host_of_local.iter().enumerate() {
            local[v] = i;
        }
        let mut m = 0;
        let adj = relabel
            .host_of_local
            .iter()
            .map(|&v| {
                let list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&u| (local[u] != usize::MAX).then_some(local[u]))
                    .collect();
                m += list.len();
                list
            })
            .collect();
        Ok((Graph { adj, m: m / 2 }, relabel))
    }

    /// `G - x`.
    pub fn remove_vertices(&self, x: &VertexSet) -> Result<(Graph, Relabeling)> {
        x.check_within(self.n())?;
        self.induced_subgraph(&self.vertex_set().difference(x))
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&vec![true; self.n()])
    }

    /// Connected components of `G[s]`, in host ids, ordered by smallest member.
    pub fn components_of(&self, s: &VertexSet) -> Vec<VertexSet> {
        self.components_within(&s.mask(self.n()))
    }

    fn components_within(&self, allowed: &[bool]) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for v in self.vertices() {
            if allowed[v] && !seen[v] {
                out.push(self.search(core::iter::once(v), allowed, &mut seen));
            }
        }
        out
    }

    /// Vertices reachable from `sources` in `G - blocked`. Blocked sources are skipped.
    pub fn reachable(&self, sources: &VertexSet, blocked: &VertexSet) -> VertexSet {
        let allowed: Vec<bool> = blocked.mask(self.n()).into_iter().map(|b| !b).collect();
        let mut seen = vec![false; self.n()];
        let starts = sources.iter().filter(|&v| v < self.n() && allowed[v]);
        self.search(starts, &allowed, &mut seen)
    }

    fn search(
        &self,
        starts: impl Iterator<Item = usize>,
        allowed: &[bool],
        seen: &mut [bool],
    ) -> VertexSet {
        let mut queue = VecDeque::new();
        let mut found = VertexSet::new();
        for s in starts {
            if !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            found.insert(v);
            for &u in &self.adj[v] {
                if allowed[u] && !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        found
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Open neighborhood `N(s) = N[s] \ s`.
    pub fn neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        s.check_within(self.n())?;
        Ok(s.iter()
            .flat_map(|v| self.adj[v].iter().copied())
            .filter(|&u| !s.contains(u))
            .collect())
    }

    /// Vertices of `w` with a neighbor outside `w`.
    pub fn boundary(&self, w: &VertexSet) -> VertexSet {
        w.iter()
            .filter(|&v| v < self.n() && self.adj[v].iter().any(|&u| !w.contains(u)))
            .collect()
    }

    pub fn is_separation(&self, sep: &Separation) -> bool {
        let n = self.n();
        if sep.a.check_within(n).is_err() || sep.b.check_within(n).is_err() {
            return false;
        }
        if sep.a.len() + sep.b.len() - sep.order() != n {
            return false;
        }
        let only_a = sep.a.difference(&sep.b);
        let closed = only_a.iter().all(|v| self.adj[v].iter().all(|&u| sep.a.contains(u)));
        closed
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
