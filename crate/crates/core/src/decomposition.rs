//! Tree H-decompositions: a rooted tree of bags plus a base set `L` whose
//! vertices live in exactly one leaf bag each.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use crate::class::ClassOracle;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub parent: Option<usize>,
    pub bag: VertexSet,
}

/// Node ids are indices into [`nodes`](Self::nodes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeHDecomposition {
    pub nodes: Vec<TreeNode>,
    pub root: usize,
    pub base_set: VertexSet,
}

impl TreeHDecomposition {
    /// One node holding `bag`, with an empty base set.
    pub fn single(bag: VertexSet) -> Self {
        Self {
            nodes: vec![TreeNode { parent: None, bag }],
            root: 0,
            base_set: VertexSet::new(),
        }
    }

    /// Root `root_bag` with one child `leaf_bag`; `base_set` should lie in the
    /// leaf only.
    pub fn with_leaf(root_bag: VertexSet, leaf_bag: VertexSet, base_set: VertexSet) -> Self {
        Self {
            nodes: vec![
                TreeNode { parent: None, bag: root_bag },
                TreeNode { parent: Some(0), bag: leaf_bag },
            ],
            root: 0,
            base_set,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn bag(&self, t: usize) -> &VertexSet {
        &self.nodes[t].bag
    }

    pub fn root_bag(&self) -> &VertexSet {
        &self.nodes[self.root].bag
    }

    pub fn children(&self, t: usize) -> impl Iterator<Item = usize> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .filter(move |(_, node)| node.parent == Some(t))
            .map(|(i, _)| i)
    }

    pub fn is_leaf(&self, t: usize) -> bool {
        self.children(t).next().is_none()
    }

    /// `max(0, max_t |bag(t) \ L| - 1)`.
    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }

    /// `max_t |bag(t) \ L|`. Base vertices are not counted: a leaf bag holds a
    /// whole base component, whose size is unbounded.
    pub fn max_bag_size(&self) -> usize {
        self.nodes
            .iter()
            .map(|node| node.bag.difference(&self.base_set).len())
            .max()
            .unwrap_or(0)
    }

    /// Puts a fresh root with bag `root_bag` above `a` and `b`.
    ///
    /// The result's root is node 0, followed by the nodes of `a` and then those of
    /// `b`, in their original order. Whether the result is a valid decomposition is
    /// up to the caller.
    pub fn merge(a: &Self, b: &Self, root_bag: VertexSet) -> Self {
        let mut nodes = Vec::with_capacity(a.len() + b.len() + 1);
        nodes.push(TreeNode { parent: None, bag: root_bag });
        for (part, offset) in [(a, 1), (b, 1 + a.len())] {
            nodes.extend(part.nodes.iter().enumerate().map(|(i, node)| TreeNode {
                parent: if i == part.root {
                    Some(0)
                } else {
                    node.parent.map(|p| p + offset)
                },
                bag: node.bag.clone(),
            }));
        }
        Self {
            nodes,
            root: 0,
            base_set: a.base_set.union(&b.base_set),
        }
    }
}

/// Why the tree itself is not a rooted tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeDefect {
    NoNodes,
    RootOutOfRange,
    RootHasParent,
    ParentOutOfRange,
    MissingParent,
    NotReachableFromRoot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MalformedTree { node: usize, defect: TreeDefect },
    BagVertexOutOfRange { node: usize, vertex: usize },
    BaseVertexOutOfRange { vertex: usize },
    /// Condition 1: the vertex appears in no bag.
    VertexMissing { vertex: usize },
    /// Condition 1: the nodes holding the vertex are not connected.
    VertexTraceDisconnected { vertex: usize },
    /// Condition 2.
    EdgeUncovered { u: usize, v: usize },
    /// Condition 3: a base vertex in several bags.
    BaseVertexInManyBags { vertex: usize, nodes: Vec<usize> },
    /// Condition 3: a base vertex in an inner node.
    BaseVertexNotInLeaf { vertex: usize, node: usize },
    /// Condition 4: `G[bag ∩ L]` is not in the class.
    BaseNotInClass { node: usize },
}

impl Violation {
    /// Which of the four decomposition conditions this violates, if any
    /// (structural problems return `None`).
    pub fn condition(&self) -> Option<u8> {
        match self {
            Violation::VertexMissing { .. } | Violation::VertexTraceDisconnected { .. } => Some(1),
            Violation::EdgeUncovered { .. } => Some(2),
            Violation::BaseVertexInManyBags { .. } | Violation::BaseVertexNotInLeaf { .. } => Some(3),
            Violation::BaseNotInClass { .. } => Some(4),
            _ => None,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MalformedTree { node, defect } => write!(f, "node {node}: malformed tree ({defect:?})"),
            Violation::BagVertexOutOfRange { node, vertex } => write!(f, "node {node}: bag vertex {vertex} out of range"),
            Violation::BaseVertexOutOfRange { vertex } => write!(f, "base vertex {vertex} out of range"),
            Violation::VertexMissing { vertex } => write!(f, "vertex {vertex} is in no bag"),
            Violation::VertexTraceDisconnected { vertex } => write!(f, "nodes holding vertex {vertex} are not connected"),
            Violation::EdgeUncovered { u, v } => write!(f, "edge {u}-{v} is in no bag"),
            Violation::BaseVertexInManyBags { vertex, nodes } => {
                write!(f, "base vertex {vertex} is in several bags {nodes:?}")
            }
            Violation::BaseVertexNotInLeaf { vertex, node } => {
                write!(f, "base vertex {vertex} is in inner node {node}")
            }
            Violation::BaseNotInClass { node } => write!(f, "node {node}: base vertices do not induce a class member"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn conditions(&self) -> Vec<u8> {
        let mut c: Vec<u8> = self.violations.iter().filter_map(Violation::condition).collect();
        c.sort_unstable();
        c.dedup();
        c
    }
}

/// Checks `d` against `g` and the class. An empty report means `d` is a valid
/// tree H-decomposition.
pub fn validate(g: &Graph, d: &TreeHDecomposition, class: &dyn ClassOracle) -> ValidationReport {
    let mut violations = Vec::new();
    let n = g.n();
    let order = match tree_order(d) {
        Ok(order) => order,
        Err(v) => return ValidationReport { violations: vec![v] },
    };

    for (t, node) in d.nodes.iter().enumerate() {
        violations.extend(
            node.bag
                .iter()
                .filter(|&v| v >= n)
                .map(|vertex| Violation::BagVertexOutOfRange { node: t, vertex }),
        );
    }
    violations.extend(
        d.base_set
            .iter()
            .filter(|&v| v >= n)
            .map(|vertex| Violation::BaseVertexOutOfRange { vertex }),
    );

    // Nodes holding each vertex.
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (t, node) in d.nodes.iter().enumerate() {
        for v in node.bag.iter().filter(|&v| v < n) {
            holders[v].push(t);
        }
    }

    // Condition 1. A set of nodes is connected iff exactly one of them has its
    // parent outside the set.
    for v in g.vertices() {
        let nodes = &holders[v];
        if nodes.is_empty() {
            violations.push(Violation::VertexMissing { vertex: v });
            continue;
        }
        let tops = nodes
            .iter()
            .filter(|&&t| match d.nodes[t].parent {
                None => true,
                Some(p) => !d.nodes[p].bag.contains(v),
            })
            .count();
        if tops != 1 {
            violations.push(Violation::VertexTraceDisconnected { vertex: v });
        }
    }

    // Condition 2.
    for (u, v) in g.edges() {
        if !holders[u].iter().any(|&t| d.nodes[t].bag.contains(v)) {
            violations.push(Violation::EdgeUncovered { u, v });
        }
    }

    // Condition 3.
    let mut has_child = vec![false; d.len()];
    for &t in &order {
        if let Some(p) = d.nodes[t].parent {
            has_child[p] = true;
        }
    }
    for v in d.base_set.iter().filter(|&v| v < n) {
        let nodes = &holders[v];
        if nodes.len() > 1 {
            violations.push(Violation::BaseVertexInManyBags { vertex: v, nodes: nodes.clone() });
        }
        for &t in nodes {
            if has_child[t] {
                violations.push(Violation::BaseVertexNotInLeaf { vertex: v, node: t });
            }
        }
    }

    // Condition 4.
    for (t, node) in d.nodes.iter().enumerate() {
        let base = node.bag.intersection(&d.base_set);
        if base.is_empty() || base.last().is_some_and(|v| v >= n) {
            continue;
        }
        let (sub, _) = g.induced_subgraph(&base).expect("checked range");
        if !class.is_member(&sub) {
            violations.push(Violation::BaseNotInClass { node: t });
        }
    }

    ValidationReport { violations }
}

/// Nodes in breadth-first order from the root, or the first structural defect.
fn tree_order(d: &TreeHDecomposition) -> Result<Vec<usize>, Violation> {
    let malformed = |node, defect| Violation::MalformedTree { node, defect };
    if d.nodes.is_empty() {
        return Err(malformed(0, TreeDefect::NoNodes));
    }
    if d.root >= d.len() {
        return Err(malformed(d.root, TreeDefect::RootOutOfRange));
    }
    let mut children = vec![Vec::new(); d.len()];
    for (t, node) in d.nodes.iter().enumerate() {
        match node.parent {
            None if t == d.root => {}
            None => return Err(malformed(t, TreeDefect::MissingParent)),
            Some(_) if t == d.root => return Err(malformed(t, TreeDefect::RootHasParent)),
            Some(p) if p >= d.len() => return Err(malformed(t, TreeDefect::ParentOutOfRange)),
            Some(p) => children[p].push(t),
        }
    }
    let mut order = vec![d.root];
    let mut i = 0;
    while i < order.len() {
        order.extend(children[order[i]].iter().copied());
        i += 1;
    }
    if order.len() != d.len() {
        let mut seen = vec![false; d.len()];
        for &t in &order {
            seen[t] = true;
        }
        let lost = seen.iter().position(|s| !s).expect("some node unreached");
        return Err(malformed(lost, TreeDefect::NotReachableFromRoot));
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::{preset, Bipartite};

    fn set<const N: usize>(ids: [usize; N]) -> VertexSet {
        VertexSet::from(ids)
    }

    #[test]
    fn width_examples() {
        assert_eq!(TreeHDecomposition::single(set([0, 1])).width(), 1);
        assert_eq!(TreeHDecomposition::single(VertexSet::new()).width(), 0);
        let d = TreeHDecomposition::with_leaf(set([2]), set([0, 1, 2]), set([0, 1]));
        assert_eq!(d.width(), 0);
        assert!(validate(&Graph::complete(3), &d, &Bipartite).is_valid());
    }

    #[test]
    fn trivial_decomposition_is_valid() {
        let g = Graph::complete(5);
        let d = TreeHDecomposition::single(g.vertex_set());
        assert!(validate(&g, &d, &Bipartite).is_valid());
        assert_eq!(d.width(), 4);
    }

    #[test]
    fn missing_edge_cover_is_reported() {
        let g = Graph::path(3);
        let d = TreeHDecomposition::with_leaf(set([1]), set([1, 2]), VertexSet::new());
        let mut d2 = d.clone();
        d2.nodes[0].bag = set([0, 1]);
        assert!(validate(&g, &d2, &Bipartite).is_valid());
        // Drop the bag covering 0-1.
        let mut bad = d2.clone();
        bad.nodes[0].bag = set([1]);
        let report = validate(&g, &bad, &Bipartite);
        assert!(report.violations.contains(&Violation::EdgeUncovered { u: 0, v: 1 }));
        assert!(report.violations.contains(&Violation::VertexMissing { vertex: 0 }));
    }

    #[test]
    fn base_vertex_in_two_bags() {
        let g = Graph::path(2);
        let d = TreeHDecomposition::with_leaf(set([0, 1]), set([0, 1]), set([1]));
        let report = validate(&g, &d, &Bipartite);
        assert_eq!(report.conditions(), [3]);
        assert!(report
            .violations
            .contains(&Violation::BaseVertexInManyBags { vertex: 1, nodes: vec![0, 1] }));
        assert!(report
            .violations
            .contains(&Violation::BaseVertexNotInLeaf { vertex: 1, node: 0 }));
    }

    #[test]
    fn disconnected_trace() {
        let g = Graph::empty(2);
        let mut d = TreeHDecomposition::merge(
            &TreeHDecomposition::single(set([0])),
            &TreeHDecomposition::single(set([0, 1])),
            VertexSet::new(),
        );
        let report = validate(&g, &d, &Bipartite);
        assert_eq!(report.violations, [Violation::VertexTraceDisconnected { vertex: 0 }]);
        d.nodes[0].bag = set([0]);
        assert!(validate(&g, &d, &Bipartite).is_valid());
    }

    #[test]
    fn base_not_in_class() {
        let g = Graph::complete(3);
        let d = TreeHDecomposition::with_leaf(VertexSet::new(), g.vertex_set(), g.vertex_set());
        let report = validate(&g, &d, &Bipartite);
        assert_eq!(report.violations, [Violation::BaseNotInClass { node: 1 }]);
        let tf = preset("cluster").unwrap();
        assert!(validate(&g, &d, &*tf).is_valid());
    }

    #[test]
    fn malformed_trees() {
        let g = Graph::empty(1);
        let mut d = TreeHDecomposition::single(set([0]));
        d.root = 3;
        assert_eq!(
            validate(&g, &d, &Bipartite).violations,
            [Violation::MalformedTree { node: 3, defect: TreeDefect::RootOutOfRange }]
        );
        let mut cyc = TreeHDecomposition::with_leaf(set([0]), set([0]), VertexSet::new());
        cyc.nodes.push(TreeNode { parent: Some(3), bag: VertexSet::new() });
        cyc.nodes.push(TreeNode { parent: Some(2), bag: VertexSet::new() });
        assert_eq!(
            validate(&g, &cyc, &Bipartite).violations,
            [Violation::MalformedTree { node: 2, defect: TreeDefect::NotReachableFromRoot }]
        );
    }

    #[test]
    fn merge_structure() {
        let a = TreeHDecomposition::single(set([5]));
        let b = TreeHDecomposition::single(set([7]));
        let m = TreeHDecomposition::merge(&a, &b, VertexSet::new());
        assert_eq!(m.len(), 3);
        assert_eq!(m.root, 0);
        assert!(m.root_bag().is_empty());
        assert_eq!(m.children(0).collect::<Vec<_>>(), [1, 2]);

        let mut la = a.clone();
        la.base_set = set([5]);
        let mut lb = b.clone();
        lb.base_set = set([7]);
        let m = TreeHDecomposition::merge(&la, &lb, VertexSet::new());
        assert_eq!(m.base_set, set([5, 7]));

        let deep = TreeHDecomposition::with_leaf(set([1]), set([1, 2]), VertexSet::new());
        let m2 = TreeHDecomposition::merge(&deep, &m, set([1]));
        assert_eq!(m2.len(), deep.len() + m.len() + 1);
        assert_eq!(m2.nodes[2].parent, Some(1));
        assert_eq!(m2.nodes[4].parent, Some(3));
        assert_eq!(m2.nodes[5].parent, Some(3));
    }
}
