#![allow(dead_code)]

use std::collections::BTreeSet;

use htw_core::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Number of graphs on `n` vertices up to isomorphism, `n = 0..=7`.
pub const GRAPH_COUNTS: [usize; 8] = [1, 1, 2, 4, 11, 34, 156, 1044];
/// Number of connected graphs on `n` vertices up to isomorphism, `n = 1..=7`.
pub const CONNECTED_COUNTS: [usize; 8] = [0, 1, 1, 2, 6, 21, 112, 853];

fn bit(n: usize, u: usize, v: usize) -> u64 {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    // Row-major upper triangle index.
    let idx = u * n - u * (u + 1) / 2 + (v - u - 1);
    1 << idx
}

fn to_graph(n: usize, adj: &[Vec<bool>]) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| adj[u][v]);
    Graph::new(n, edges).unwrap()
}

/// Canonical code: largest adjacency code over relabelings that list vertices
/// by nonincreasing degree.
fn canonical(n: usize, adj: &[Vec<bool>]) -> u64 {
    let degree: Vec<usize> = (0..n).map(|v| adj[v].iter().filter(|&&b| b).count()).collect();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(degree[v]));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in by_degree {
        match cells.last_mut() {
            Some(cell) if degree[cell[0]] == degree[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = 0;
    let mut order = Vec::with_capacity(n);
    permute_cells(&cells, 0, &mut order, &mut |order| {
        let mut code = 0;
        for i in 0..n {
            for j in i + 1..n {
                if adj[order[i]][order[j]] {
                    code |= bit(n, i, j);
                }
            }
        }
        best = best.max(code);
    });
    best
}

fn permute_cells(cells: &[Vec<usize>], at: usize, order: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if at == cells.len() {
        visit(order);
        return;
    }
    let mut cell = cells[at].clone();
    cell.sort_unstable();
    loop {
        let len = order.len();
        order.extend_from_slice(&cell);
        permute_cells(cells, at + 1, order, visit);
        order.truncate(len);
        if !next_permutation(&mut cell) {
            break;
        }
    }
}

pub fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn decode(n: usize, code: u64) -> Vec<Vec<bool>> {
    (0..n).map(|u| (0..n).map(|v| u != v && code & bit(n, u, v) != 0).collect()).collect()
}

/// One representative per isomorphism class, for every order `0..=max_n`.
/// Every graph on `n` vertices arises from one on `n - 1` by adding a vertex.
pub fn all_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = vec![Graph::empty(0)];
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for n in 1..=max_n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = decode(n - 1, code);
            for nbrs in 0u32..1 << (n - 1) {
                let mut adj = vec![vec![false; n]; n];
                for u in 0..n - 1 {
                    for v in 0..n - 1 {
                        adj[u][v] = base[u][v];
                    }
                    if nbrs >> u & 1 == 1 {
                        adj[u][n - 1] = true;
                        adj[n - 1][u] = true;
                    }
                }
                next.insert(canonical(n, &adj));
            }
        }
        out.extend(next.iter().map(|&c| to_graph(n, &decode(n, c))));
        level = next;
    }
    out
}

pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    all_graphs(max_n).into_iter().filter(|g| g.n() > 0 && g.is_connected()).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let kept: Vec<_> = edges.into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, kept).unwrap()
}

/// Each vertex independently with probability `p`; never empty when `n > 0`.
pub fn random_subset(rng: &mut impl Rng, n: usize, p: f64) -> VertexSet {
    let mut s: VertexSet = (0..n).filter(|_| rng.gen_bool(p)).collect();
    if s.is_empty() && n > 0 {
        s.insert(rng.gen_range(0..n));
    }
    s
}

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

/// Smallest `S` meeting every `(x, y)`-path, by subset enumeration.
pub fn brute_force_separator_size(g: &Graph, x: &VertexSet, y: &VertexSet) -> usize {
    let mut sizes: Vec<VertexSet> = subsets(g.n()).collect();
    sizes.sort_by_key(|s| s.len());
    sizes
        .into_iter()
        .find(|s| {
            let reach = g.reachable(&x.difference(s), s);
            reach.is_disjoint(y)
        })
        .map(|s| s.len())
        .unwrap()
}

/// Checks that `paths` are pairwise vertex-disjoint `(x, y)`-paths of `g`.
pub fn is_disjoint_path_family(g: &Graph, x: &VertexSet, y: &VertexSet, paths: &[Vec<usize>]) -> bool {
    let mut used = BTreeSet::new();
    paths.iter().all(|p| {
        !p.is_empty()
            && x.contains(p[0])
            && y.contains(p[p.len() - 1])
            && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && p.iter().all(|&v| used.insert(v))
    })
}

pub mod strategy {
    use htw_core::{Graph, VertexSet};
    use proptest::prelude::*;

    pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(graph_on)
    }

    pub fn graph_with_subset(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
        graph(max_n).prop_flat_map(|g| {
            let n = g.n();
            proptest::collection::vec(any::<bool>(), n)
                .prop_map(move |bits| (g.clone(), (0..n).filter(|&v| bits[v]).collect()))
        })
    }

    /// A graph with two nonempty terminal sets.
    pub fn graph_with_terminals(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
        (1..=max_n).prop_flat_map(|n| {
            (graph_on(n), proptest::collection::vec(0..n, 1..=n), proptest::collection::vec(0..n, 1..=n))
                .prop_map(|(g, x, y)| (g, x.into_iter().collect(), y.into_iter().collect()))
        })
    }

    pub fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits)
                .filter_map(|(e, keep)| keep.then_some(e));
            Graph::new(n, edges).unwrap()
        })
    }
}

/// Relabels `g` by a uniformly random permutation.
pub fn shuffle_labels(rng: &mut impl Rng, g: &Graph) -> Graph {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = g.vertices().collect();
    perm.shuffle(rng);
    Graph::new(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

/// Random partial `k`-tree on `n ≥ k + 1` vertices: treewidth at most `k`.
pub fn random_partial_ktree(rng: &mut impl Rng, n: usize, k: usize, keep: f64) -> Graph {
    let mut edges = BTreeSet::new();
    let mut cliques: Vec<Vec<usize>> = vec![(0..=k).collect()];
    for u in 0..=k {
        for v in u + 1..=k {
            edges.insert((u, v));
        }
    }
    for v in k + 1..n {
        let clique = cliques[rng.gen_range(0..cliques.len())].clone();
        let skip = rng.gen_range(0..clique.len());
        let mut next: Vec<usize> = clique.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &u)| u).collect();
        for &u in &next {
            edges.insert((u, v));
        }
        next.push(v);
        cliques.push(next);
    }
    let kept: Vec<_> = edges.into_iter().filter(|_| rng.gen_bool(keep)).collect();
    shuffle_labels(rng, &Graph::new(n, kept).unwrap())
}

/// A random tree skeleton on `t` vertices with one `blob` hung off each
/// skeleton vertex or edge. Every blob sees at most two adjacent skeleton
/// vertices, so with blobs in the class the H-treewidth is at most one.
pub fn blobs_on_tree(rng: &mut impl Rng, t: usize, blobs: &[Graph]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..t).map(|v| (rng.gen_range(0..v), v)).collect();
    let tree_edges = edges.clone();
    let mut n = t;
    for blob in blobs {
        let attach: Vec<usize> = if t > 1 && rng.gen_bool(0.5) {
            let (u, v) = tree_edges[rng.gen_range(0..tree_edges.len())];
            vec![u, v]
        } else {
            vec![rng.gen_range(0..t)]
        };
        for (a, b) in blob.edges() {
            edges.push((n + a, n + b));
        }
        for b in 0..blob.n() {
            for &s in &attach {
                if rng.gen_bool(0.5) {
                    edges.push((s, n + b));
                }
            }
        }
        n += blob.n();
    }
    shuffle_labels(rng, &Graph::new(n, edges).unwrap())
}
