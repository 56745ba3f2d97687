//! `r`-edge-connected `r`-regular graphs whose terminals are independent and
//! seen at most twice from any vertex, yet admit no system.
//!
//! All three variants share one shape: a bipartite `(r-2)`-regular graph on
//! `(X, Y)` with `|X| = |Y| = (r-1)n`, the `X` side cut into groups `A_i` and
//! the `Y` side into groups `B_i` of size `r - 1`, and a pair of adjacent
//! apexes over every group. The terminals are `2n` vertices of `X` (two per
//! `A_i`) and one apex over each of two groups whose members see at most one
//! terminal.

use super::{bad, verified, Builder, Claim, FamilyError, FamilyInstance, WitnessPair};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::verify::{
    edge_connectivity, essential_edge_connectivity_at_least, EssentialBound, PropertyReport,
};

/// The bipartite core and its partition, before apexes are added.
struct Layered {
    r: usize,
    family: &'static str,
    x_names: Vec<String>,
    y_names: Vec<String>,
    /// `(x, y)` pairs, indices into the name lists.
    edges: Vec<(usize, usize)>,
    /// Terminal members of `X`.
    x_terminals: Vec<usize>,
    a_groups: Vec<Vec<usize>>,
    b_groups: Vec<Vec<usize>>,
    /// Positions in the apex list `b_1, b_2, ...` (0-based) of the two
    /// terminal apexes.
    b_terminals: [usize; 2],
}

impl Layered {
    fn assemble(self) -> Result<FamilyInstance, FamilyError> {
        let mut b = Builder::default();
        let xs: Vec<Vertex> = self.x_names.into_iter().map(|n| b.vertex(n)).collect();
        let ys: Vec<Vertex> = self.y_names.into_iter().map(|n| b.vertex(n)).collect();
        let n = self.a_groups.len();
        let a = b.block(2 * n, |i| format!("a_{}", i + 1));
        let bs = b.block(2 * n, |i| format!("b_{}", i + 1));
        for &(x, y) in &self.edges {
            b.edge(xs[x], ys[y]);
        }
        for (apexes, groups, side) in [(&a, &self.a_groups, &xs), (&bs, &self.b_groups, &ys)] {
            for (i, group) in groups.iter().enumerate() {
                let (p, q) = (apexes[2 * i], apexes[2 * i + 1]);
                b.edge(p, q);
                for &v in group {
                    b.edge(p, side[v]);
                    b.edge(q, side[v]);
                }
            }
        }
        let w: VertexSet = self
            .x_terminals
            .iter()
            .map(|&x| xs[x])
            .chain(self.b_terminals.iter().map(|&i| bs[i]))
            .collect();
        let s: VertexSet = xs.iter().chain(&bs).copied().collect();
        let t: VertexSet = ys.iter().chain(&a).copied().collect();
        let (graph, names) = b.finish()?;
        verified(FamilyInstance {
            family: self.family.into(),
            graph,
            w,
            witness: Some(WitnessPair {
                s,
                t,
                expected_delta: -2,
            }),
            names,
            claims: vec![
                Claim::Regular(self.r),
                Claim::StarFree(self.r),
                Claim::EdgeConnectivityExactly(self.r),
                Claim::TerminalsAtMostTwoTight,
                Claim::TerminalsIndependent,
            ],
        })
    }
}

/// Subdivision of a circulant on `Z_{2m}`: one `Y` vertex per base edge.
/// Offsets must be below `m`, except that `m` itself adds the diameters once.
fn subdivided_circulant(m: usize, offsets: &[usize]) -> Vec<(usize, usize)> {
    let size = 2 * m;
    let mut base = Vec::new();
    for &d in offsets {
        let starts = if d == m { m } else { size };
        base.extend((0..starts).map(|i| (i, (i + d) % size)));
    }
    base.iter()
        .enumerate()
        .flat_map(|(e, &(u, v))| [(u, e), (v, e)])
        .collect()
}

fn as_graph(x_count: usize, y_count: usize, edges: &[(usize, usize)]) -> Result<Graph, FamilyError> {
    Ok(Graph::from_edges(
        x_count + y_count,
        edges.iter().map(|&(x, y)| (x, x_count + y)),
    )?)
}

/// Degree check for a bipartite piece with `X` first.
fn check_biregular(g: &Graph, x_count: usize, dx: usize, dy: usize) -> bool {
    g.vertices()
        .all(|v| g.degree(v) == if v < x_count { dx } else { dy })
}

fn require(family: &str, what: &str, ok: bool) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::Verification {
            family: family.into(),
            report: what.into(),
        })
    }
}

/// Fails on a violated essential-connectivity claim; an undecided check is
/// accepted because the assembled graph is verified directly afterwards.
fn require_essential(family: &str, piece: &str, report: PropertyReport) -> Result<(), FamilyError> {
    if report.fails() {
        return Err(FamilyError::Verification {
            family: family.into(),
            report: format!("{piece}: {report}"),
        });
    }
    Ok(())
}

const PIECE_BOUND: EssentialBound = EssentialBound {
    max_k: 4,
    max_edges: 2000,
    max_nodes: 200_000,
};

/// `Y` vertices adjacent to at most one terminal `X` vertex, in index order.
fn eligible(edges: &[(usize, usize)], y_count: usize, is_terminal: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut seen = vec![0usize; y_count];
    for &(x, y) in edges {
        if is_terminal(x) {
            seen[y] += 1;
        }
    }
    (0..y_count).filter(|&y| seen[y] <= 1).collect()
}

/// `A_i` = two terminal `X` vertices plus `r - 3` others, all in index order.
fn a_groups(r: usize, n: usize, x_count: usize) -> Vec<Vec<usize>> {
    let rest: Vec<usize> = (2 * n..x_count).collect();
    rest.chunks(r - 3)
        .enumerate()
        .map(|(i, chunk)| {
            let mut g = vec![2 * i, 2 * i + 1];
            g.extend_from_slice(chunk);
            g
        })
        .collect()
}

/// `r = 4`: a cycle `x_1 y_1 ... x_{3n} y_{3n}` with `A_i = {x_i, x_{i+n},
/// x_{i+2n}}` and `B_i = {y_{3i-2}, y_{3i-1}, y_{3i}}`.
pub fn gen_prop2_r4(n: usize) -> Result<FamilyInstance, FamilyError> {
    if n < 6 {
        return Err(bad(format!("prop2-r4 needs n >= 6, got {n}")));
    }
    let len = 3 * n;
    let mut edges = Vec::new();
    for i in 0..len {
        edges.push((i, i));
        edges.push(((i + 1) % len, i));
    }
    let layered = Layered {
        r: 4,
        family: "prop2-r4",
        x_names: (1..=len).map(|i| format!("x_{i}")).collect(),
        y_names: (1..=len).map(|i| format!("y_{i}")).collect(),
        edges,
        x_terminals: (n..len).collect(),
        a_groups: (0..n).map(|i| vec![i, i + n, i + 2 * n]).collect(),
        b_groups: (0..n).map(|i| vec![3 * i, 3 * i + 1, 3 * i + 2]).collect(),
        b_terminals: [0, 2],
    };
    layered.assemble()
}

/// `r >= 6`: `H_1` is a subdivided `(r-2)`-regular circulant on `2m`
/// vertices, `H_2` a cyclic lift of `K_{r-4, r-2}` with voltage `a * b` on the
/// edge between the `a`-th and `b`-th vertex, glued along their `Y` sides.
pub fn gen_prop2_general(r: usize, m: usize) -> Result<FamilyInstance, FamilyError> {
    let family = "prop2-general";
    if r < 6 {
        return Err(bad(format!("{family} needs r >= 6, got {r}")));
    }
    if !m.is_multiple_of(r - 1) || m < 2 * (r - 1) * (r - 1) {
        return Err(bad(format!(
            "{family} needs m a multiple of {} with m >= {}, got {m}",
            r - 1,
            2 * (r - 1) * (r - 1)
        )));
    }
    let n = (r - 2) * m / (r - 1);
    let x1 = 2 * m;
    let x2 = (r - 4) * m;
    let y = (r - 2) * m;

    let mut offsets: Vec<usize> = (1..=(r - 2) / 2).collect();
    if r % 2 == 1 {
        offsets.push(m);
    }
    let h1 = subdivided_circulant(m, &offsets);
    let h1_graph = as_graph(x1, y, &h1)?;
    require(family, "H1 degrees", check_biregular(&h1_graph, x1, r - 2, 2))?;
    require_essential(
        family,
        "H1",
        essential_edge_connectivity_at_least(&h1_graph, 3, PIECE_BOUND),
    )?;

    let mut h2 = Vec::new();
    for a in 0..r - 4 {
        for j in 0..m {
            for bb in 0..r - 2 {
                h2.push((a * m + j, bb * m + (j + a * bb) % m));
            }
        }
    }
    let h2_graph = as_graph(x2, y, &h2)?;
    require(family, "H2 degrees", check_biregular(&h2_graph, x2, r - 2, r - 4))?;
    require(family, "H2 edge connectivity", edge_connectivity(&h2_graph).value >= r - 4)?;
    require_essential(
        family,
        "H2",
        essential_edge_connectivity_at_least(&h2_graph, r - 3, PIECE_BOUND),
    )?;

    let mut edges = h1;
    edges.extend(h2.into_iter().map(|(x, yy)| (x1 + x, yy)));
    let elig = eligible(&edges, y, |x| x < 2 * n);
    if elig.len() < 2 * (r - 1) {
        return Err(bad("too few Y vertices away from the terminals"));
    }
    let special: Vec<usize> = elig[..2 * (r - 1)].to_vec();
    let rest: Vec<usize> = (0..y).filter(|v| !special.contains(v)).collect();
    let b_groups: Vec<Vec<usize>> = special
        .chunks(r - 1)
        .chain(rest.chunks(r - 1))
        .map(<[usize]>::to_vec)
        .collect();

    let mut x_names: Vec<String> = (0..x1).map(|i| format!("x1_{i}")).collect();
    x_names.extend((0..x2).map(|i| format!("x2_{i}")));
    Layered {
        r,
        family,
        x_names,
        y_names: (0..y).map(|i| format!("y_{i}")).collect(),
        edges,
        x_terminals: (0..2 * n).collect(),
        a_groups: a_groups(r, n, x1 + x2),
        b_groups,
        b_terminals: [0, 2],
    }
    .assemble()
}

/// `r = 5`: `H_1` is the subdivided Möbius ladder `C_{2m}(1, m)` and `H_2` is
/// `m` disjoint claws `Q_j` with leaves `y_{j,1}, y_{j,2}, y_{j,3}`. The
/// groups `B_1` and `B_4` take the first leaf of `Q_1..Q_4` and `Q_5..Q_8`;
/// the remaining groups follow the cyclic scheme `B_{3p+h} = {y_{j,h} : 4p+h
/// <= j <= 4p+h+3}`.
pub fn gen_prop2_r5(m: usize) -> Result<FamilyInstance, FamilyError> {
    let family = "prop2-r5";
    if !m.is_multiple_of(4) || m < 96 {
        return Err(bad(format!("{family} needs m a multiple of 4 with m >= 96, got {m}")));
    }
    let r = 5;
    let n = 3 * m / 4;
    let x1 = 2 * m;
    let y = 3 * m;
    // Y vertices are indexed by claw leaf: y_{j,h} -> 3(j-1) + (h-1).
    let leaf = |j: usize, h: usize| 3 * ((j - 1) % m) + (h - 1);

    let h1 = subdivided_circulant(m, &[1, m]);
    let h1_graph = as_graph(x1, y, &h1)?;
    require(family, "H1 degrees", check_biregular(&h1_graph, x1, 3, 2))?;
    require_essential(
        family,
        "H1",
        essential_edge_connectivity_at_least(&h1_graph, 3, PIECE_BOUND),
    )?;

    // Bijection from H1's Y side onto the claw leaves: eight eligible
    // vertices become y_{1,1}..y_{8,1}, the rest follow in order.
    let elig = eligible(&h1, y, |x| x < 2 * n);
    if elig.len() < 8 {
        return Err(bad("too few Y vertices away from the terminals"));
    }
    let firsts: Vec<usize> = (1..=8).map(|j| leaf(j, 1)).collect();
    let mut to_leaf = vec![usize::MAX; y];
    for (i, &v) in elig[..8].iter().enumerate() {
        to_leaf[v] = firsts[i];
    }
    let mut free = (0..y).filter(|l| !firsts.contains(l));
    for slot in to_leaf.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = free.next().expect("sizes agree");
    }
    let mut edges: Vec<(usize, usize)> = h1.iter().map(|&(x, v)| (x, to_leaf[v])).collect();
    for j in 1..=m {
        for h in 1..=3 {
            edges.push((x1 + j - 1, leaf(j, h)));
        }
    }

    let b_groups: Vec<Vec<usize>> = (1..=n)
        .map(|i| match i {
            1 => (1..=4).map(|j| leaf(j, 1)).collect(),
            4 => (5..=8).map(|j| leaf(j, 1)).collect(),
            _ => {
                let (p, h) = ((i - 1) / 3, (i - 1) % 3 + 1);
                (4 * p + h..=4 * p + h + 3).map(|j| leaf(j, h)).collect()
            }
        })
        .collect();

    let mut x_names: Vec<String> = (0..x1).map(|i| format!("x1_{i}")).collect();
    x_names.extend((1..=m).map(|j| format!("x2_{j}")));
    let mut y_names = vec![String::new(); y];
    for j in 1..=m {
        for h in 1..=3 {
            y_names[leaf(j, h)] = format!("y_{j},{h}");
        }
    }
    Layered {
        r,
        family,
        x_names,
        y_names,
        edges,
        x_terminals: (0..2 * n).collect(),
        a_groups: a_groups(r, n, x1 + m),
        b_groups,
        // b_1 over B_1 and b_7 over B_4
        b_terminals: [0, 6],
    }
    .assemble()
}
