//! Brute-force ground truth for tiny graphs. Size limits are hard; larger
//! inputs are refused with [`Error::TooLarge`].

use alloc::vec;
use alloc::vec::Vec;

use crate::class::ClassOracle;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_TREEWIDTH_ORDER: usize = 10;
pub const MAX_HTW_ORDER: usize = 8;
pub const MAX_DELETION_ORDER: usize = 12;
pub const MAX_COVERAGE_ORDER: usize = 7;

fn ensure_order(g: &Graph, max: usize) -> Result<()> {
    if g.n() > max {
        Err(Error::TooLarge { n: g.n(), max })
    } else {
        Ok(())
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &u| acc | 1 << u))
        .collect()
}

fn set_of_mask(mask: u32) -> VertexSet {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Treewidth: minimum over elimination orders of the largest number of
/// not-yet-eliminated neighbors (after fill-in) at elimination time.
///
/// Dynamic program over the set of eliminated vertices. When the set `E` has
/// been eliminated, the fill-in neighbors of `v ∉ E` are the vertices outside
/// `E ∪ {v}` reachable from `v` through `E`.
pub fn exact_treewidth(g: &Graph) -> Result<usize> {
    ensure_order(g, MAX_TREEWIDTH_ORDER)?;
    let n = g.n();
    let adj = adjacency_masks(g);
    let full = (1u32 << n) - 1;
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for eliminated in 0..=full {
        let current = best[eliminated as usize];
        if current == usize::MAX {
            continue;
        }
        for v in 0..n {
            if eliminated >> v & 1 == 1 {
                continue;
            }
            let degree = fill_degree(&adj, eliminated, v).count_ones() as usize;
            let next = (eliminated | 1 << v) as usize;
            best[next] = best[next].min(current.max(degree));
        }
    }
    Ok(best[full as usize])
}

/// Vertices outside `eliminated ∪ {v}` reachable from `v` via `eliminated`.
fn fill_degree(adj: &[u32], eliminated: u32, v: usize) -> u32 {
    let mut inside = 1u32 << v;
    let mut frontier = adj[v] & eliminated;
    while frontier != 0 {
        inside |= frontier;
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[u];
        }
        frontier = next & eliminated & !inside;
    }
    let mut reach = 0;
    let mut m = inside;
    while m != 0 {
        let u = m.trailing_zeros() as usize;
        m &= m - 1;
        reach |= adj[u];
    }
    reach & !eliminated & !(1 << v)
}

/// The torso of `g` with respect to base set `base`: `g - base` with the
/// neighborhood of every component of `g[base]` turned into a clique.
pub fn torso(g: &Graph, base: &VertexSet) -> Result<Graph> {
    base.check_within(g.n())?;
    let rest = g.vertex_set().difference(base);
    let (core, map) = g.induced_subgraph(&rest)?;
    let mut edges: Vec<(usize, usize)> = core.edges().collect();
    for comp in g.components_of(base) {
        let attach = map.to_local(&g.neighborhood(&comp)?).to_vec();
        for (i, &a) in attach.iter().enumerate() {
            for &b in &attach[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(core.n(), edges)
}

/// H-treewidth through the torso characterization: the minimum, over base sets
/// `L` whose components all induce members of the class, of the treewidth of
/// the torso of `L`.
pub fn exact_htw(g: &Graph, class: &dyn ClassOracle) -> Result<usize> {
    ensure_order(g, MAX_HTW_ORDER)?;
    let n = g.n();
    let mut best = usize::MAX;
    for mask in 0u32..1 << n {
        let base = set_of_mask(mask);
        let admissible = g.components_of(&base).iter().all(|c| {
            let (sub, _) = g.induced_subgraph(c).expect("in range");
            class.is_member(&sub)
        });
        if !admissible {
            continue;
        }
        best = best.min(exact_treewidth(&torso(g, &base)?)?);
        if best == 0 {
            break;
        }
    }
    Ok(best)
}

/// Size of a smallest vertex set whose removal leaves a member of the class.
pub fn exact_min_deletion(g: &Graph, class: &dyn ClassOracle) -> Result<usize> {
    ensure_order(g, MAX_DELETION_ORDER)?;
    let n = g.n();
    let mut by_size: Vec<u32> = (0u32..1 << n).collect();
    by_size.sort_by_key(|m| (m.count_ones(), *m));
    for mask in by_size {
        let (rest, _) = g.remove_vertices(&set_of_mask(mask))?;
        if class.is_member(&rest) {
            return Ok(mask.count_ones() as usize);
        }
    }
    unreachable!("deleting every vertex leaves the empty graph, which every hereditary class contains")
}

/// Whether some `(H, k)`-separation `(C, S)` has `z ⊆ C ∪ S`.
///
/// Enumerates every `S` with `|S| ≤ k` and every union `C` of components of
/// `G - S` (any such `C` has `N(C) ⊆ S`).
pub fn exists_weak_coverage(g: &Graph, z: &VertexSet, k: usize, class: &dyn ClassOracle) -> Result<bool> {
    ensure_order(g, MAX_COVERAGE_ORDER)?;
    z.check_within(g.n())?;
    let n = g.n();
    for s_mask in 0u32..1 << n {
        if s_mask.count_ones() as usize > k {
            continue;
        }
        let s = set_of_mask(s_mask);
        let comps = g.components_of(&g.vertex_set().difference(&s));
        for pick in 0u32..1 << comps.len() {
            let c: VertexSet = comps
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .flat_map(|(_, comp)| comp.iter())
                .collect();
            if !z.is_subset(&c.union(&s)) {
                continue;
            }
            let (sub, _) = g.induced_subgraph(&c)?;
            if class.is_member(&sub) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
