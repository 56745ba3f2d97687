//! Small standard graphs.

use crate::graph::Graph;

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("simple")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("simple")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("simple")
}

/// `K_{1,m}` with centre 0.
pub fn star(m: usize) -> Graph {
    Graph::from_edges(m + 1, (1..=m).map(|v| (0, v))).expect("simple")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)))).expect("simple")
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("simple")
}

/// Circulant graph on `n` vertices: `i ~ i ± d (mod n)` for each offset `d`.
pub fn circulant(n: usize, offsets: &[usize]) -> Graph {
    let mut set = std::collections::BTreeSet::new();
    for i in 0..n {
        for &d in offsets {
            let j = (i + d) % n;
            if i != j {
                set.insert((i.min(j), i.max(j)));
            }
        }
    }
    Graph::from_edges(n, set).expect("simple")
}
