//! Small-graph corpora for oracle testing: every graph up to isomorphism on
//! a few vertices, and seeded random graphs.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Largest order supported by [`nonisomorphic_graphs`].
pub const MAX_ENUMERATED_ORDER: usize = 8;

/// Adjacency bitmaps of a graph on at most 8 vertices.
type Adj = Vec<u8>;

/// Bit code of the upper triangle under the vertex order `order`.
fn code(adj: &Adj, order: &[usize]) -> u32 {
    let mut c = 0u32;
    let mut bit = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if adj[order[i]] >> order[j] & 1 == 1 {
                c |= 1 << bit;
            }
            bit += 1;
        }
    }
    c
}

/// Invariant key: vertices are grouped by degree, and the minimum code over
/// orders that keep the groups in increasing-degree order is taken.
fn canonical(adj: &Adj) -> (Vec<u32>, u32) {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| deg[v]);
    let degrees: Vec<u32> = order.iter().map(|&v| deg[v]).collect();
    let mut cells: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || degrees[i] != degrees[start] {
            cells.push((start, i));
            start = i;
        }
    }
    let mut best = u32::MAX;
    permute_cells(adj, &mut order, &cells, 0, &mut best);
    (degrees, best)
}

fn permute_cells(adj: &Adj, order: &mut Vec<usize>, cells: &[(usize, usize)], cell: usize, best: &mut u32) {
    if cell == cells.len() {
        *best = (*best).min(code(adj, order));
        return;
    }
    let (lo, hi) = cells[cell];
    arrange(adj, order, cells, cell, lo, hi, best);
}

/// Every arrangement of `order[lo..hi]`, recursing into the next cell for each.
fn arrange(
    adj: &Adj,
    order: &mut Vec<usize>,
    cells: &[(usize, usize)],
    cell: usize,
    lo: usize,
    hi: usize,
    best: &mut u32,
) {
    if hi - lo <= 1 {
        permute_cells(adj, order, cells, cell + 1, best);
        return;
    }
    for i in lo..hi {
        order.swap(lo, i);
        arrange(adj, order, cells, cell, lo + 1, hi, best);
        order.swap(lo, i);
    }
}

fn to_graph(adj: &Adj) -> Graph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("simple by construction")
}

/// One representative of every isomorphism class of graphs on `n` vertices.
/// Built by adding a vertex to each class on `n - 1` vertices in every
/// possible way and keeping one graph per canonical key.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUMERATED_ORDER, "enumeration supports up to {MAX_ENUMERATED_ORDER} vertices");
    let mut layer: Vec<Adj> = vec![Vec::new()];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for adj in &layer {
            for nb in 0u32..1 << (k - 1) {
                let mut grown = adj.clone();
                grown.push(nb as u8);
                for (v, a) in grown.iter_mut().enumerate().take(k - 1) {
                    if nb >> v & 1 == 1 {
                        *a |= 1 << (k - 1);
                    }
                }
                if seen.insert(canonical(&grown)) {
                    next.push(grown);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(to_graph).collect()
}

/// Connected classes on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    nonisomorphic_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// `G(n, p)` from a seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("simple by construction")
}
