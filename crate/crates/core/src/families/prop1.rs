//! Regular graphs one or two steps short of the required edge connectivity,
//! and the bipartite family, none of which admit a system for their `W`.

use super::{bad, circular, verified, Builder, Claim, FamilyError, FamilyInstance, WitnessPair};
use crate::graph::{Vertex, VertexSet};
use crate::verify::TerminalMode;

/// Adds one copy of a circular block on `len` vertices: `v_i v_j` whenever
/// the circular distance is at most `reach`, plus `chords`, minus `removed`.
fn add_block(
    b: &mut Builder,
    label: &str,
    len: usize,
    reach: usize,
    chords: &[(usize, usize)],
    removed: &[(usize, usize)],
) -> Vec<Vertex> {
    let vs = b.block(len, |i| format!("{label}:v_{i}"));
    let gone = |i: usize, j: usize| removed.contains(&(i, j)) || removed.contains(&(j, i));
    for i in 0..len {
        for j in i + 1..len {
            if circular(i, j, len) <= reach && !gone(i, j) {
                b.edge(vs[i], vs[j]);
            }
        }
    }
    for &(i, j) in chords {
        b.edge(vs[i % len], vs[j % len]);
    }
    vs
}

/// Hubs `x_1..x_h` (stored 0-based) joined to a copy through the pattern
/// `u_0 x_i, u_1 x_i, u_2 x_{i+1}, ..., u_l x_{i+l-1}` with indices mod `h`.
fn attach_pattern(b: &mut Builder, hubs: &[Vertex], i: usize, deficient: &[Vertex]) {
    let h = hubs.len();
    for (l, &u) in deficient.iter().enumerate() {
        let offset = l.saturating_sub(1);
        b.edge(u, hubs[(i + offset) % h]);
    }
}

/// `r` odd, `k` even: `2r + 1` copies of one block, a slightly larger block,
/// and `2r` hubs, giving an `(r-1)`-edge-connected `r`-regular graph.
pub fn gen_prop1_odd(r: usize, k: usize) -> Result<FamilyInstance, FamilyError> {
    if r < 5 || r.is_multiple_of(2) {
        return Err(bad(format!("prop1-odd needs odd r >= 5, got {r}")));
    }
    if k < r + 1 || k % 2 == 1 {
        return Err(bad(format!("prop1-odd needs even k >= r + 1, got {k}")));
    }
    let reach = (r - 1) / 2;
    let mut b = Builder::default();
    let hubs = b.block(2 * r, |i| format!("x_{}", i + 1));

    let len = r + k - 1;
    let chords: Vec<_> = (r - 1..=r + k / 2 - 2).map(|s| (s, s + k / 2)).collect();
    let star_len = r + k + 1;
    let star_chords: Vec<_> = (r + 1..=r + k / 2).map(|s| (s, s + k / 2)).collect();

    let mut w: Vec<Vertex> = hubs.clone();
    let mut copies = Vec::new();
    for i in 1..=2 * r + 1 {
        let vs = add_block(&mut b, &format!("H_{i}"), len, reach, &chords, &[]);
        w.push(vs[r + k / 2 - 2]);
        copies.push(vs);
    }
    let last = add_block(&mut b, &format!("H_{}", 2 * r + 2), star_len, reach, &star_chords, &[]);
    w.push(last[r + k / 2]);

    for (i, vs) in copies.iter().take(2 * r).enumerate() {
        attach_pattern(&mut b, &hubs, i, &vs[..r - 1]);
    }
    // The remaining 2r deficient vertices go to the hubs one each, in order.
    let spare = copies[2 * r][..r - 1].iter().chain(&last[..=r]);
    for (&u, &x) in spare.zip(&hubs) {
        b.edge(u, x);
    }

    let (graph, names) = b.finish()?;
    let s: VertexSet = hubs.iter().copied().collect();
    verified(FamilyInstance {
        family: "prop1-odd".into(),
        graph,
        w: w.into_iter().collect(),
        witness: Some(WitnessPair {
            s,
            t: VertexSet::empty(),
            expected_delta: -2,
        }),
        names,
        claims: vec![
            Claim::Regular(r),
            Claim::StarFree(r),
            Claim::EdgeConnectivityExactly(r - 1),
            Claim::Terminals(TerminalMode::Distance3),
        ],
    })
}

/// `r` even: `r` copies of one block and `r - 2` hubs, giving an
/// `(r-2)`-edge-connected `r`-regular graph. The block depends on `r mod 4`.
pub fn gen_prop1_even(r: usize, k: usize) -> Result<FamilyInstance, FamilyError> {
    if r % 2 == 1 || r < 6 {
        return Err(bad(format!("prop1-even needs even r >= 6, got {r}")));
    }
    if k < r {
        return Err(bad(format!("prop1-even needs k >= r, got k = {k}")));
    }
    let reach = r / 2;
    let (len, removed, deficient, w_index) = if r % 4 == 2 {
        let removed: Vec<_> = (0..=(r - 6) / 4)
            .flat_map(|t| [(4 * t, 4 * t + 2), (4 * t + 1, 4 * t + 3)])
            .collect();
        let deficient: Vec<usize> = (0..=r - 3).collect();
        (r + k + 1, removed, deficient, (3 * r - 4) / 2)
    } else {
        if r < 8 {
            return Err(bad("prop1-even with r divisible by 4 needs r >= 8"));
        }
        if k % 2 == 1 {
            return Err(bad(format!("prop1-even with r divisible by 4 needs even k, got {k}")));
        }
        let mut removed: Vec<_> = (0..=(r - 8) / 4)
            .flat_map(|t| [(4 * t, 4 * t + 2), (4 * t + 1, 4 * t + 3)])
            .collect();
        removed.push((r - 4, r - 2));
        // Consecutive deficient vertices are adjacent in this order.
        let mut deficient: Vec<usize> = (0..=r - 6).collect();
        deficient.extend([r - 4, r - 5, r - 2]);
        (r + k, removed, deficient, (3 * r - 2) / 2)
    };

    let mut b = Builder::default();
    let hubs = b.block(r - 2, |i| format!("x_{}", i + 1));
    let mut w: Vec<Vertex> = hubs.clone();
    for i in 1..=r {
        let vs = add_block(&mut b, &format!("H_{i}"), len, reach, &[], &removed);
        w.push(vs[w_index]);
        let us: Vec<Vertex> = deficient.iter().map(|&d| vs[d]).collect();
        if i <= r - 2 {
            attach_pattern(&mut b, &hubs, i - 1, &us);
        } else {
            for (&u, &x) in us.iter().zip(&hubs) {
                b.edge(u, x);
            }
        }
    }

    let (graph, names) = b.finish()?;
    verified(FamilyInstance {
        family: "prop1-even".into(),
        graph,
        w: w.into_iter().collect(),
        witness: Some(WitnessPair {
            s: hubs.into_iter().collect(),
            t: VertexSet::empty(),
            expected_delta: -2,
        }),
        names,
        claims: vec![
            Claim::Regular(r),
            Claim::StarFree(r),
            Claim::EdgeConnectivityAtLeast(r - 2),
            Claim::Terminals(TerminalMode::Distance3),
        ],
    })
}

/// Bipartite circulant on `2n` vertices: left `i` is adjacent to right
/// `i, i+1, ..., i+r-1 (mod n)`. The terminals are two left vertices at
/// distance 4, so the two sides cannot be balanced by any system.
pub fn gen_prop1_bipartite(r: usize, n: usize) -> Result<FamilyInstance, FamilyError> {
    if r < 4 {
        return Err(bad(format!("prop1-bipartite needs r >= 4, got {r}")));
    }
    if n < 2 * r {
        return Err(bad(format!(
            "prop1-bipartite needs n >= 2r = {} for two left vertices at distance 4, got {n}",
            2 * r
        )));
    }
    let mut b = Builder::default();
    let left = b.block(n, |i| format!("L_{i}"));
    let right = b.block(n, |i| format!("R_{i}"));
    for i in 0..n {
        for d in 0..r {
            b.edge(left[i], right[(i + d) % n]);
        }
    }
    let (graph, names) = b.finish()?;
    verified(FamilyInstance {
        family: "prop1-bipartite".into(),
        graph,
        w: [left[0], left[r]].into(),
        witness: None,
        names,
        claims: vec![
            Claim::Regular(r),
            Claim::EdgeConnectivityAtLeast(r),
            Claim::Bipartite,
            Claim::HasInducedStar(r),
            Claim::Terminals(TerminalMode::Distance3),
        ],
    })
}
