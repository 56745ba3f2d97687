//! Checkers for the structural hypotheses: regularity, edge connectivity,
//! essential edge connectivity, induced stars, terminal spacing and the
//! component-count criterion for path systems.
//!
//! Every failing check carries a witness that can be re-checked against the
//! graph on its own (see [`Witness::recheck`]).

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::graph::{
    components_after_removal, distances_from, Distance, Graph, Vertex, VertexSet,
};

/// Concrete reason a property fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A vertex whose degree differs from the required one.
    Degree { vertex: Vertex, degree: usize },
    /// Edges whose removal leaves the reported number of components of order
    /// at least two (`None` means only that the graph becomes disconnected).
    EdgeSet {
        edges: Vec<(Vertex, Vertex)>,
        nontrivial_components: Option<usize>,
    },
    /// Centre of an induced star and its pairwise non-adjacent leaves.
    Star { center: Vertex, leaves: VertexSet },
    /// Terminal set of odd size.
    OddTerminalCount(usize),
    /// Two terminals that are too close.
    ClosePair { u: Vertex, v: Vertex, distance: usize },
    /// A vertex seeing too many terminals.
    CrowdedVertex { vertex: Vertex, terminals: VertexSet },
    /// Vertex set whose removal leaves too many components.
    Separator { set: VertexSet, components: usize },
}

impl Witness {
    /// Re-derives the factual content of the witness from `g` alone.
    pub fn recheck(&self, g: &Graph) -> bool {
        match self {
            Witness::Degree { vertex, degree } => {
                *vertex < g.vertex_count() && g.degree(*vertex) == *degree
            }
            Witness::EdgeSet {
                edges,
                nontrivial_components,
            } => {
                let Some(idx) = edges
                    .iter()
                    .map(|&(u, v)| g.edge_index(u, v))
                    .collect::<Option<Vec<_>>>()
                else {
                    return false;
                };
                let h = g.without_edges(&idx);
                match nontrivial_components {
                    None => !h.is_connected(),
                    Some(k) => nontrivial_count(&h) == *k && *k >= 2,
                }
            }
            Witness::Star { center, leaves } => {
                leaves.iter().all(|l| g.has_edge(*center, l))
                    && leaves
                        .iter()
                        .all(|a| leaves.iter().all(|b| a == b || !g.has_edge(a, b)))
            }
            Witness::OddTerminalCount(k) => k % 2 == 1,
            Witness::ClosePair { u, v, distance } => {
                distances_from(g, *u).map(|d| d[*v]) == Ok(Distance::Finite(*distance))
            }
            Witness::CrowdedVertex { vertex, terminals } => {
                terminals.iter().all(|t| g.has_edge(*vertex, t))
            }
            Witness::Separator { set, components } => components_after_removal(g, set)
                .map(|p| p.len() == *components)
                .unwrap_or(false),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edge_list = |edges: &[(Vertex, Vertex)]| {
            edges
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            Witness::Degree { vertex, degree } => write!(f, "vertex {vertex} degree {degree}"),
            Witness::EdgeSet {
                edges,
                nontrivial_components,
            } => {
                write!(f, "edges {}", edge_list(edges))?;
                if let Some(k) = nontrivial_components {
                    write!(f, " nontrivial-components {k}")?;
                }
                Ok(())
            }
            Witness::Star { center, leaves } => write!(f, "center {center} leaves {leaves}"),
            Witness::OddTerminalCount(k) => write!(f, "odd terminal count {k}"),
            Witness::ClosePair { u, v, distance } => write!(f, "pair {u} {v} distance {distance}"),
            Witness::CrowdedVertex { vertex, terminals } => {
                write!(f, "vertex {vertex} terminal-neighbors {terminals}")
            }
            Witness::Separator { set, components } => {
                write!(f, "set {set} components {components}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
    /// The instance exceeds the configured exhaustion bound.
    Undecided(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: String,
    pub verdict: Verdict,
}

impl PropertyReport {
    fn new(name: impl Into<String>, verdict: Verdict) -> Self {
        PropertyReport {
            name: name.into(),
            verdict,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn fails(&self) -> bool {
        matches!(self.verdict, Verdict::Fails(_))
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self.verdict, Verdict::Undecided(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Verdict::Fails(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Holds => write!(f, "{}: PASS", self.name),
            Verdict::Fails(w) => write!(f, "{}: FAIL {w}", self.name),
            Verdict::Undecided(why) => write!(f, "{}: UNDECIDED {why}", self.name),
        }
    }
}

pub fn check_regular(g: &Graph, r: usize) -> PropertyReport {
    let verdict = match g.vertices().find(|&v| g.degree(v) != r) {
        Some(v) => Verdict::Fails(Witness::Degree {
            vertex: v,
            degree: g.degree(v),
        }),
        None => Verdict::Holds,
    };
    PropertyReport::new(format!("regular({r})"), verdict)
}

/// Unit-capacity flow network on the arcs of an undirected graph.
struct UnitFlow<'g> {
    g: &'g Graph,
    // flow on arc (v, neighbors(v)[i]) in {-1, 0, 1}
    flow: Vec<Vec<i8>>,
    // position of v in neighbors(u) for the reverse arc
    back: Vec<Vec<usize>>,
}

impl<'g> UnitFlow<'g> {
    fn new(g: &'g Graph) -> Self {
        let back = g
            .vertices()
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .map(|&u| g.neighbors(u).binary_search(&v).expect("symmetric"))
                    .collect()
            })
            .collect();
        UnitFlow {
            g,
            flow: g.vertices().map(|v| vec![0; g.degree(v)]).collect(),
            back,
        }
    }

    fn reset(&mut self) {
        for f in &mut self.flow {
            f.iter_mut().for_each(|x| *x = 0);
        }
    }

    /// Residual reachability from `s`; returns the BFS parent arcs.
    fn search(&self, s: Vertex) -> Vec<Option<(Vertex, usize)>> {
        let n = self.g.vertex_count();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for (i, &w) in self.g.neighbors(u).iter().enumerate() {
                if !seen[w] && self.flow[u][i] < 1 {
                    seen[w] = true;
                    parent[w] = Some((u, i));
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// Max flow from `s` to `t`, stopping once it reaches `cap`.
    fn max_flow(&mut self, s: Vertex, t: Vertex, cap: usize) -> usize {
        self.reset();
        let mut value = 0;
        while value < cap {
            let parent = self.search(s);
            if parent[t].is_none() {
                break;
            }
            let mut v = t;
            while v != s {
                let (u, i) = parent[v].expect("on path");
                self.flow[u][i] += 1;
                let j = self.back[u][i];
                self.flow[v][j] -= 1;
                v = u;
            }
            value += 1;
        }
        value
    }

    /// Edges leaving the residual-reachable side of `s`.
    fn cut_edges(&self, s: Vertex) -> Vec<(Vertex, Vertex)> {
        let parent = self.search(s);
        let reach: Vec<bool> = (0..self.g.vertex_count())
            .map(|v| v == s || parent[v].is_some())
            .collect();
        let mut cut: Vec<(Vertex, Vertex)> = self
            .g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| reach[u] != reach[v])
            .collect();
        cut.sort_unstable();
        cut
    }
}

/// Global edge connectivity and one minimum edge cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeConnectivity {
    pub value: usize,
    pub cut: Vec<(Vertex, Vertex)>,
}

/// `lambda(g)` as the minimum over `v != 0` of the unit-capacity max flow
/// from vertex 0 to `v`.
pub fn edge_connectivity(g: &Graph) -> EdgeConnectivity {
    let n = g.vertex_count();
    if n <= 1 {
        return EdgeConnectivity {
            value: 0,
            cut: Vec::new(),
        };
    }
    if !g.is_connected() {
        return EdgeConnectivity {
            value: 0,
            cut: Vec::new(),
        };
    }
    let mut net = UnitFlow::new(g);
    let mut best = g.min_degree();
    let mut best_cut: Option<Vec<(Vertex, Vertex)>> = None;
    for v in 1..n {
        // Flow capped at best + 1 is enough to see whether v beats the record.
        let value = net.max_flow(0, v, best + 1);
        if value < best || (value == best && best_cut.is_none()) {
            best = value;
            best_cut = Some(net.cut_edges(0));
        }
    }
    let cut = best_cut.unwrap_or_default();
    debug_assert_eq!(cut.len(), best);
    EdgeConnectivity { value: best, cut }
}

pub fn check_edge_connectivity_at_least(g: &Graph, k: usize) -> PropertyReport {
    let lambda = edge_connectivity(g);
    let verdict = if lambda.value >= k {
        Verdict::Holds
    } else {
        Verdict::Fails(Witness::EdgeSet {
            edges: lambda.cut,
            nontrivial_components: None,
        })
    };
    PropertyReport::new(format!("edge-connectivity({k})"), verdict)
}

fn nontrivial_count(g: &Graph) -> usize {
    components_after_removal(g, &VertexSet::empty())
        .map(|p| p.blocks.iter().filter(|b| b.len() >= 2).count())
        .unwrap_or(0)
}

/// Limits for the exhaustive essential-connectivity search.
#[derive(Debug, Clone, Copy)]
pub struct EssentialBound {
    pub max_k: usize,
    pub max_edges: usize,
    /// Distinct removal sets examined before giving up.
    pub max_nodes: usize,
}

impl Default for EssentialBound {
    fn default() -> Self {
        EssentialBound {
            max_k: 4,
            max_edges: 2000,
            max_nodes: 2_000_000,
        }
    }
}

/// Whether removing any `k - 1` or fewer edges leaves at most one component
/// of order two or more.
///
/// Removal sets are grown one edge at a time, always choosing the next edge
/// from a spanning forest of what is left: a set whose removal does not
/// change the components of the current graph cannot be the first to split
/// it, so every minimal violating set is reached this way.
pub fn essential_edge_connectivity_at_least(
    g: &Graph,
    k: usize,
    bound: EssentialBound,
) -> PropertyReport {
    let name = format!("essential-edge-connectivity({k})");
    if k > bound.max_k && g.edge_count() > bound.max_edges {
        return PropertyReport::new(
            name,
            Verdict::Undecided(format!(
                "k={k} on {} edges exceeds the exhaustion bound",
                g.edge_count()
            )),
        );
    }
    let depth = k.saturating_sub(1).min(g.edge_count());
    let mut visited: HashSet<Vec<usize>> = HashSet::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(removed) = stack.pop() {
        if visited.len() > bound.max_nodes {
            return PropertyReport::new(
                name,
                Verdict::Undecided(format!("more than {} removal sets", bound.max_nodes)),
            );
        }
        let h = g.without_edges(&removed);
        let count = nontrivial_count(&h);
        if count >= 2 {
            let edges = removed.iter().map(|&e| g.edges()[e]).collect();
            return PropertyReport::new(
                name,
                Verdict::Fails(Witness::EdgeSet {
                    edges,
                    nontrivial_components: Some(count),
                }),
            );
        }
        if removed.len() == depth {
            continue;
        }
        for e in spanning_forest_edges(&h) {
            let (u, v) = h.edges()[e];
            let original = g.edge_index(u, v).expect("subgraph edge");
            let mut next = removed.clone();
            next.push(original);
            next.sort_unstable();
            if visited.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    PropertyReport::new(name, Verdict::Holds)
}

fn spanning_forest_edges(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    out.push(g.edge_index(u, w).expect("adjacent"));
                    queue.push_back(w);
                }
            }
        }
    }
    out
}

/// A vertex with `m` pairwise non-adjacent neighbours, if any.
pub fn find_induced_star(g: &Graph, m: usize) -> Option<(Vertex, VertexSet)> {
    for v in g.vertices() {
        let nb = g.neighbors(v);
        if nb.len() < m {
            continue;
        }
        let mut chosen = Vec::with_capacity(m);
        if independent_subset(g, nb, m, &mut chosen) {
            return Some((v, chosen.into_iter().collect()));
        }
    }
    None
}

/// Branch and bound for an independent set of size `want` among `candidates`.
fn independent_subset(g: &Graph, candidates: &[Vertex], want: usize, chosen: &mut Vec<Vertex>) -> bool {
    if chosen.len() == want {
        return true;
    }
    if chosen.len() + candidates.len() < want {
        return false;
    }
    for (i, &c) in candidates.iter().enumerate() {
        if chosen.len() + (candidates.len() - i) < want {
            return false;
        }
        let rest: Vec<Vertex> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&u| !g.has_edge(c, u))
            .collect();
        chosen.push(c);
        if independent_subset(g, &rest, want, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

pub fn check_star_free(g: &Graph, m: usize) -> PropertyReport {
    let verdict = match find_induced_star(g, m) {
        Some((center, leaves)) => Verdict::Fails(Witness::Star { center, leaves }),
        None => Verdict::Holds,
    };
    PropertyReport::new(format!("star-free({m})"), verdict)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TerminalMode {
    /// Pairwise distance at least 3.
    Distance3,
    /// Every vertex has at most one terminal neighbour.
    Nbhd1,
}

impl TerminalMode {
    pub fn label(self) -> &'static str {
        match self {
            TerminalMode::Distance3 => "distance3",
            TerminalMode::Nbhd1 => "nbhd1",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminalCheck {
    pub report: PropertyReport,
    /// `distance3 ⟹ nbhd1` evaluated on this input.
    pub implication_holds: bool,
}

fn distance3_verdict(g: &Graph, w: &VertexSet) -> Verdict {
    if w.len() % 2 == 1 {
        return Verdict::Fails(Witness::OddTerminalCount(w.len()));
    }
    let is_w = w.mask(g.vertex_count());
    for u in w.iter() {
        for &a in g.neighbors(u) {
            if is_w[a] {
                return Verdict::Fails(Witness::ClosePair {
                    u: u.min(a),
                    v: u.max(a),
                    distance: 1,
                });
            }
            for &b in g.neighbors(a) {
                if b != u && is_w[b] && !g.has_edge(u, b) {
                    return Verdict::Fails(Witness::ClosePair {
                        u: u.min(b),
                        v: u.max(b),
                        distance: 2,
                    });
                }
            }
        }
    }
    Verdict::Holds
}

/// Vertex with the most terminal neighbours, and that count.
pub fn max_terminal_neighbors(g: &Graph, w: &VertexSet) -> (usize, Option<Vertex>) {
    let is_w = w.mask(g.vertex_count());
    g.vertices()
        .map(|v| (g.neighbors(v).iter().filter(|&&u| is_w[u]).count(), v))
        .max_by_key(|&(c, v)| (c, std::cmp::Reverse(v)))
        .map(|(c, v)| (c, Some(v)))
        .unwrap_or((0, None))
}

/// Every vertex has at most `bound` neighbours in `w`, and `|w|` is even.
pub fn check_terminal_neighborhood(g: &Graph, w: &VertexSet, bound: usize) -> PropertyReport {
    let name = format!("terminals(nbhd{bound})");
    if w.len() % 2 == 1 {
        return PropertyReport::new(name, Verdict::Fails(Witness::OddTerminalCount(w.len())));
    }
    let is_w = w.mask(g.vertex_count());
    for v in g.vertices() {
        let seen: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&u| is_w[u]).collect();
        if seen.len() > bound {
            return PropertyReport::new(
                name,
                Verdict::Fails(Witness::CrowdedVertex {
                    vertex: v,
                    terminals: seen.into_iter().collect(),
                }),
            );
        }
    }
    PropertyReport::new(name, Verdict::Holds)
}

pub fn check_terminal_set(
    g: &Graph,
    w: &VertexSet,
    mode: TerminalMode,
) -> Result<TerminalCheck, crate::graph::GraphError> {
    g.check_set(w)?;
    let d3 = distance3_verdict(g, w);
    let n1 = check_terminal_neighborhood(g, w, 1).verdict;
    let implication_holds = d3 != Verdict::Holds || n1 == Verdict::Holds;
    let verdict = match mode {
        TerminalMode::Distance3 => d3,
        TerminalMode::Nbhd1 => n1,
    };
    Ok(TerminalCheck {
        report: PropertyReport::new(format!("terminals({})", mode.label()), verdict),
        implication_holds,
    })
}

/// Largest graph accepted by [`path_system_criterion`] by default.
pub const CRITERION_VERTEX_LIMIT: usize = 18;

/// `omega(G - S) <= |S| + 1` for every proper subset `S`, by enumeration.
/// The reported witness has the smallest `|S|`, then the least `S`.
pub fn path_system_criterion(g: &Graph, vertex_limit: usize) -> PropertyReport {
    let name = "path-system-criterion";
    let n = g.vertex_count();
    if n > vertex_limit.min(30) {
        return PropertyReport::new(
            name,
            Verdict::Undecided(format!("{n} vertices exceeds the limit of {vertex_limit}")),
        );
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let all: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let count_components = |mut rest: u32| {
        let mut c = 0;
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut grow = 0;
                let mut b = frontier;
                while b != 0 {
                    grow |= adj[b.trailing_zeros() as usize];
                    b &= b - 1;
                }
                frontier = grow & rest & !comp;
                comp |= frontier;
            }
            rest &= !comp;
            c += 1;
        }
        c
    };
    for size in 0..n {
        let mut best: Option<(VertexSet, usize)> = None;
        for_each_subset(n, size, &mut |s| {
            let omega = count_components(all & !s);
            if omega > size + 1 {
                let set = (0..n).filter(|&v| s >> v & 1 == 1).collect::<VertexSet>();
                if best.as_ref().is_none_or(|(b, _)| set < *b) {
                    best = Some((set, omega));
                }
            }
        });
        if let Some((set, components)) = best {
            return PropertyReport::new(name, Verdict::Fails(Witness::Separator { set, components }));
        }
    }
    PropertyReport::new(name, Verdict::Holds)
}

fn for_each_subset(n: usize, k: usize, visit: &mut dyn FnMut(u32)) {
    fn go(n: usize, k: usize, from: usize, acc: u32, visit: &mut dyn FnMut(u32)) {
        if k == 0 {
            visit(acc);
            return;
        }
        for v in from..=n - k {
            go(n, k - 1, v + 1, acc | 1 << v, visit);
        }
    }
    if k <= n {
        go(n, k, 0, 0, visit);
    }
}

/// Two-colourability.
pub fn check_bipartite(g: &Graph) -> PropertyReport {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("coloured");
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => {
                        return PropertyReport::new(
                            "bipartite",
                            Verdict::Fails(Witness::EdgeSet {
                                edges: vec![(u.min(w), u.max(w))],
                                nontrivial_components: None,
                            }),
                        );
                    }
                    _ => {}
                }
            }
        }
    }
    PropertyReport::new("bipartite", Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{complete, cycle, path, petersen, star};

    #[test]
    fn regularity() {
        assert!(check_regular(&cycle(5), 2).holds());
        let r = check_regular(&path(3), 2);
        assert_eq!(
            r.witness(),
            Some(&Witness::Degree { vertex: 0, degree: 1 })
        );
        assert!(r.witness().unwrap().recheck(&path(3)));
        assert_eq!(r.to_string(), "regular(2): FAIL vertex 0 degree 1");
    }

    #[test]
    fn connectivity_values() {
        assert_eq!(edge_connectivity(&cycle(6)).value, 2);
        let k4 = edge_connectivity(&complete(4));
        assert_eq!(k4.value, 3);
        assert_eq!(k4.cut.len(), 3);
        assert_eq!(edge_connectivity(&petersen()).value, 3);
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(edge_connectivity(&two).value, 0);
        // two triangles joined by a bridge
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        let lambda = edge_connectivity(&g);
        assert_eq!(lambda.value, 1);
        assert_eq!(lambda.cut, vec![(2, 3)]);
        let w = Witness::EdgeSet {
            edges: lambda.cut,
            nontrivial_components: None,
        };
        assert!(w.recheck(&g));
    }

    #[test]
    fn essential_connectivity_examples() {
        let bound = EssentialBound::default();
        assert!(essential_edge_connectivity_at_least(&complete(4), 3, bound).holds());
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        let r = essential_edge_connectivity_at_least(&g, 2, bound);
        assert_eq!(
            r.witness(),
            Some(&Witness::EdgeSet {
                edges: vec![(2, 3)],
                nontrivial_components: Some(2)
            })
        );
        assert!(r.witness().unwrap().recheck(&g));
        assert!(essential_edge_connectivity_at_least(&star(5), 99, bound).holds());
        // K_4 loses essential 4-connectivity: removing a 4-cut splits it 2+2
        let r = essential_edge_connectivity_at_least(&complete(4), 5, bound);
        assert!(r.fails());
        assert!(r.witness().unwrap().recheck(&complete(4)));
        let tight = EssentialBound {
            max_k: 1,
            max_edges: 1,
            max_nodes: 10,
        };
        assert!(essential_edge_connectivity_at_least(&complete(4), 3, tight).is_undecided());
    }

    #[test]
    fn essential_matches_subset_enumeration() {
        // exhaustive over all edge subsets of size <= 2
        for g in [complete(4), cycle(6), petersen(), complete(5)] {
            for k in 1..=3 {
                let m = g.edge_count();
                let mut brute = true;
                for a in 0..m {
                    for b in a..m {
                        let set: Vec<usize> = if a == b { vec![a] } else { vec![a, b] };
                        if set.len() < k && nontrivial_count(&g.without_edges(&set)) >= 2 {
                            brute = false;
                        }
                    }
                }
                if nontrivial_count(&g) >= 2 {
                    brute = false;
                }
                let r = essential_edge_connectivity_at_least(&g, k, EssentialBound::default());
                assert_eq!(r.holds(), brute, "k={k} on {g:?}");
            }
        }
    }

    #[test]
    fn stars() {
        assert_eq!(find_induced_star(&complete(4), 2), None);
        assert_eq!(find_induced_star(&star(3), 3), Some((0, [1, 2, 3].into())));
        let (c, leaves) = find_induced_star(&petersen(), 3).unwrap();
        assert!(Witness::Star { center: c, leaves }.recheck(&petersen()));
    }

    #[test]
    fn terminal_sets() {
        let c7 = cycle(7);
        let ok = check_terminal_set(&c7, &[0, 3].into(), TerminalMode::Distance3).unwrap();
        assert!(ok.report.holds());
        let close = check_terminal_set(&c7, &[0, 2].into(), TerminalMode::Distance3).unwrap();
        assert_eq!(
            close.report.witness(),
            Some(&Witness::ClosePair { u: 0, v: 2, distance: 2 })
        );
        assert!(close.report.witness().unwrap().recheck(&c7));
        let n1 = check_terminal_set(&c7, &[0, 2].into(), TerminalMode::Nbhd1).unwrap();
        assert_eq!(
            n1.report.witness(),
            Some(&Witness::CrowdedVertex { vertex: 1, terminals: [0, 2].into() })
        );
        for mode in [TerminalMode::Distance3, TerminalMode::Nbhd1] {
            let e = check_terminal_set(&c7, &VertexSet::empty(), mode).unwrap();
            assert!(e.report.holds());
            assert!(e.implication_holds);
        }
        let odd = check_terminal_set(&c7, &[0].into(), TerminalMode::Nbhd1).unwrap();
        assert_eq!(odd.report.witness(), Some(&Witness::OddTerminalCount(1)));
        assert!(check_terminal_set(&c7, &[9, 1].into(), TerminalMode::Nbhd1).is_err());
    }

    #[test]
    fn criterion() {
        // tree with a degree-3 vertex
        let tree = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let r = path_system_criterion(&tree, CRITERION_VERTEX_LIMIT);
        assert_eq!(
            r.witness(),
            Some(&Witness::Separator { set: [1].into(), components: 3 })
        );
        assert!(path_system_criterion(&cycle(8), CRITERION_VERTEX_LIMIT).holds());
        let claw = path_system_criterion(&star(3), CRITERION_VERTEX_LIMIT);
        assert_eq!(
            claw.witness(),
            Some(&Witness::Separator { set: [0].into(), components: 3 })
        );
        assert!(claw.witness().unwrap().recheck(&star(3)));
        assert!(path_system_criterion(&cycle(19), CRITERION_VERTEX_LIMIT).is_undecided());
    }

    #[test]
    fn bipartite() {
        assert!(check_bipartite(&cycle(6)).holds());
        assert!(check_bipartite(&cycle(5)).fails());
    }
}
