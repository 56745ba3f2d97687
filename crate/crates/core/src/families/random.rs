//! Random instances meeting every hypothesis of the existence theorem:
//! `K_{1,r}`-free, `r`-edge-connected, `r`-regular, with terminals that no
//! vertex sees twice.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{bad, verified, Claim, FamilyError, FamilyInstance};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::verify::{check_regular, edge_connectivity, find_induced_star, TerminalMode};

const ATTEMPTS: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// `C_n(1..r/2)`, plus the diameters when `r` is odd.
    Circulant,
    /// `C_n(1..c)` plus random perfect matchings up to degree `r`.
    CirculantPlusMatchings,
    /// Line graph of a random `(r/2 + 1)`-regular graph; `r` even only.
    LineGraph,
}

fn circulant_edges(n: usize, offsets: &[usize]) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for &d in offsets {
        let starts = if 2 * d == n { n / 2 } else { n };
        edges.extend((0..starts).map(|i| (i, (i + d) % n)));
    }
    edges
}

/// A perfect matching on `0..n` avoiding `existing`, or `None` after a few
/// tries.
fn random_matching(
    n: usize,
    existing: &[(Vertex, Vertex)],
    rng: &mut ChaCha8Rng,
) -> Option<Vec<(Vertex, Vertex)>> {
    let taken = |u: Vertex, v: Vertex| existing.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
    let mut order: Vec<Vertex> = (0..n).collect();
    for _ in 0..100 {
        order.shuffle(rng);
        let pairs: Vec<_> = order.chunks(2).map(|c| (c[0], c[1])).collect();
        if pairs.iter().all(|&(u, v)| !taken(u, v)) {
            return Some(pairs);
        }
    }
    None
}

/// Configuration-model `d`-regular simple graph on `h` vertices.
fn random_regular(h: usize, d: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(Vertex, Vertex)>> {
    let mut points: Vec<Vertex> = (0..h).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    'retry: for _ in 0..200 {
        points.shuffle(rng);
        let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(h * d / 2);
        for c in points.chunks(2) {
            let (u, v) = (c[0].min(c[1]), c[0].max(c[1]));
            if u == v || edges.contains(&(u, v)) {
                continue 'retry;
            }
            edges.push((u, v));
        }
        return Some(edges);
    }
    None
}

fn line_graph(h_edges: &[(Vertex, Vertex)]) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for (i, &(a, b)) in h_edges.iter().enumerate() {
        for (j, &(c, d)) in h_edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    edges
}

fn candidate(kind: Kind, r: usize, size: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let (n, edges) = match kind {
        Kind::Circulant => {
            let n = if r % 2 == 1 { size + size % 2 } else { size };
            let mut offsets: Vec<usize> = (1..=r / 2).collect();
            if r % 2 == 1 {
                offsets.push(n / 2);
            }
            (n, circulant_edges(n, &offsets))
        }
        Kind::CirculantPlusMatchings => {
            let n = size + size % 2;
            let c = (r - 1) / 2;
            let mut edges = circulant_edges(n, &(1..=c).collect::<Vec<_>>());
            for _ in 0..r - 2 * c {
                let m = random_matching(n, &edges, rng)?;
                edges.extend(m);
            }
            (n, edges)
        }
        Kind::LineGraph => {
            let d = r / 2 + 1;
            let mut h = (2 * size).div_ceil(d).max(d + 1);
            if h * d % 2 == 1 {
                h += 1;
            }
            let base = random_regular(h, d, rng)?;
            (base.len(), line_graph(&base))
        }
    };
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).ok()
}

/// Greedy terminal choice in index order. With `Distance3` a vertex is
/// skipped when it lies within distance 2 of a chosen one; with `Nbhd1`
/// only when the two share a neighbour. An odd result drops its last member.
fn greedy_terminals(g: &Graph, mode: TerminalMode) -> VertexSet {
    let n = g.vertex_count();
    let mut blocked = vec![false; n];
    let mut w = Vec::new();
    for v in g.vertices() {
        if blocked[v] {
            continue;
        }
        w.push(v);
        blocked[v] = true;
        for &a in g.neighbors(v) {
            if mode == TerminalMode::Distance3 {
                blocked[a] = true;
            }
            for &b in g.neighbors(a) {
                blocked[b] = true;
            }
        }
    }
    if w.len() % 2 == 1 {
        w.pop();
    }
    w.into_iter().collect()
}

/// A verified instance on roughly `size` vertices, deterministic in `seed`.
/// Even seeds space terminals at distance at least 3; odd seeds only keep
/// any vertex from seeing two terminals, so terminals may be adjacent.
pub fn random_valid_instance(r: usize, size: usize, seed: u64) -> Result<FamilyInstance, FamilyError> {
    if r < 4 {
        return Err(bad(format!("random instances need r >= 4, got {r}")));
    }
    if size < 2 * r + 2 || size > 5000 {
        return Err(bad(format!(
            "random instance size must lie in {}..=5000, got {size}",
            2 * r + 2
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut kinds = vec![Kind::Circulant, Kind::CirculantPlusMatchings];
    if r.is_multiple_of(2) {
        kinds.push(Kind::LineGraph);
    }
    let mode = if seed.is_multiple_of(2) {
        TerminalMode::Distance3
    } else {
        TerminalMode::Nbhd1
    };
    for _ in 0..ATTEMPTS {
        let kind = kinds[rng.gen_range(0..kinds.len())];
        let Some(g) = candidate(kind, r, size, &mut rng) else {
            continue;
        };
        if !check_regular(&g, r).holds()
            || find_induced_star(&g, r).is_some()
            || edge_connectivity(&g).value < r
        {
            continue;
        }
        let w = greedy_terminals(&g, mode);
        let names = g.vertices().map(|v| (format!("v_{v}"), v)).collect();
        return verified(FamilyInstance {
            family: "random".into(),
            graph: g,
            w,
            witness: None,
            names,
            claims: vec![
                Claim::Regular(r),
                Claim::StarFree(r),
                Claim::EdgeConnectivityAtLeast(r),
                Claim::Terminals(mode),
            ],
        });
    }
    Err(FamilyError::BudgetExhausted(ATTEMPTS))
}
