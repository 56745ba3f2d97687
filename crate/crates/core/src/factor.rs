//! f-factors and spanning path-cycle systems.
//!
//! A spanning path-cycle system with end-vertex set `W` is exactly a spanning
//! subgraph in which terminals have degree 1 and every other vertex degree 2.
//! Such a subgraph is found by Tutte's gadget: every vertex `v` is blown up
//! into one port per incident edge plus `deg(v) - f(v)` core vertices joined
//! to all of its ports, and each original edge joins the two ports it owns.
//! Perfect matchings of the gadget are exactly f-factors of the original graph
//! once the port-to-port pairs are read back.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex, VertexSet};
use crate::matching::{perfect_matching, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("terminal set has odd size {0}")]
    OddTerminalSet(usize),
    #[error("degree spec covers {spec} vertices, graph has {graph}")]
    SpecLength { spec: usize, graph: usize },
    #[error("f({vertex}) = {target} exceeds its degree {degree}")]
    TargetExceedsDegree {
        vertex: Vertex,
        target: usize,
        degree: usize,
    },
    #[error("matching does not cover every gadget vertex")]
    NotPerfect,
    #[error("vertex {vertex} has degree {actual}, expected {expected}")]
    DegreeMismatch {
        vertex: Vertex,
        expected: usize,
        actual: usize,
    },
    #[error("graph has {edges} edges, exhaustive search is limited to {limit}")]
    BoundExceeded { edges: usize, limit: usize },
}

/// Target degree `f(v)` for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSpec(Vec<usize>);

impl DegreeSpec {
    pub fn new(targets: Vec<usize>) -> Self {
        DegreeSpec(targets)
    }

    pub fn uniform(n: usize, value: usize) -> Self {
        DegreeSpec(vec![value; n])
    }

    pub fn get(&self, v: Vertex) -> usize {
        self.0[v]
    }

    pub fn targets(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `f(X)`.
    pub fn sum_over(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.0[v]).sum()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    fn check_against(&self, g: &Graph) -> Result<(), FactorError> {
        if self.len() != g.vertex_count() {
            return Err(FactorError::SpecLength {
                spec: self.len(),
                graph: g.vertex_count(),
            });
        }
        Ok(())
    }
}

/// `f = 1` on terminals and `2` elsewhere.
pub fn degree_spec_from_terminals(g: &Graph, w: &VertexSet) -> Result<DegreeSpec, FactorError> {
    g.check_set(w)?;
    if w.len() % 2 == 1 {
        return Err(FactorError::OddTerminalSet(w.len()));
    }
    let mut f = vec![2; g.vertex_count()];
    for v in w.iter() {
        f[v] = 1;
    }
    Ok(DegreeSpec(f))
}

/// What a gadget vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetVertex {
    /// End `endpoint` of original edge number `edge`.
    Port { edge: usize, endpoint: Vertex },
    /// Slot `slot` of the `deg(v) - f(v)` absorbing vertices of `vertex`.
    Core { vertex: Vertex, slot: usize },
}

#[derive(Debug, Clone)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub origin: Vec<GadgetVertex>,
    // ports[e] = (port at smaller endpoint, port at larger endpoint)
    ports: Vec<(usize, usize)>,
    core_start: Vec<usize>,
    core_len: Vec<usize>,
    spec: DegreeSpec,
}

impl GadgetGraph {
    pub fn port(&self, edge: usize) -> (usize, usize) {
        self.ports[edge]
    }

    pub fn cores(&self, v: Vertex) -> std::ops::Range<usize> {
        self.core_start[v]..self.core_start[v] + self.core_len[v]
    }

    pub fn spec(&self) -> &DegreeSpec {
        &self.spec
    }
}

pub fn build_gadget(g: &Graph, f: &DegreeSpec) -> Result<GadgetGraph, FactorError> {
    f.check_against(g)?;
    for v in g.vertices() {
        if f.get(v) > g.degree(v) {
            return Err(FactorError::TargetExceedsDegree {
                vertex: v,
                target: f.get(v),
                degree: g.degree(v),
            });
        }
    }
    let mut origin = Vec::new();
    let mut ports = vec![(usize::MAX, usize::MAX); g.edge_count()];
    let mut core_start = Vec::with_capacity(g.vertex_count());
    let mut edges = Vec::new();
    for v in g.vertices() {
        let first_port = origin.len();
        for &u in g.neighbors(v) {
            let e = g.edge_index(u, v).expect("adjacent");
            let id = origin.len();
            origin.push(GadgetVertex::Port { edge: e, endpoint: v });
            if v < u {
                ports[e].0 = id;
            } else {
                ports[e].1 = id;
            }
        }
        let last_port = origin.len();
        core_start.push(last_port);
        for slot in 0..g.degree(v) - f.get(v) {
            let c = origin.len();
            origin.push(GadgetVertex::Core { vertex: v, slot });
            edges.extend((first_port..last_port).map(|p| (p, c)));
        }
    }
    edges.extend(ports.iter().copied());
    let graph = Graph::from_edges(origin.len(), edges)?;
    Ok(GadgetGraph {
        graph,
        origin,
        ports,
        core_len: g.vertices().map(|v| g.degree(v) - f.get(v)).collect(),
        core_start,
        spec: f.clone(),
    })
}

/// Edge subset of the original graph meeting the degree targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FFactor {
    /// Indices into [`Graph::edges`], increasing.
    pub edges: Vec<usize>,
}

impl FFactor {
    pub fn degrees(&self, g: &Graph) -> Vec<usize> {
        let mut d = vec![0; g.vertex_count()];
        for &e in &self.edges {
            let (u, v) = g.edges()[e];
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn check(&self, g: &Graph, f: &DegreeSpec) -> Result<(), FactorError> {
        f.check_against(g)?;
        for (v, d) in self.degrees(g).into_iter().enumerate() {
            if d != f.get(v) {
                return Err(FactorError::DegreeMismatch {
                    vertex: v,
                    expected: f.get(v),
                    actual: d,
                });
            }
        }
        Ok(())
    }

    pub fn edge_pairs<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = (Vertex, Vertex)> + 'a {
        self.edges.iter().map(move |&e| g.edges()[e])
    }
}

/// Reads the f-factor off a perfect matching of the gadget.
pub fn extract_f_factor(
    g: &Graph,
    gadget: &GadgetGraph,
    m: &Matching,
) -> Result<FFactor, FactorError> {
    if !m.is_perfect() || !m.is_valid_in(&gadget.graph) {
        return Err(FactorError::NotPerfect);
    }
    let edges = gadget
        .ports
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| m.mate(a) == Some(b))
        .map(|(e, _)| e)
        .collect();
    let factor = FFactor { edges };
    factor.check(g, &gadget.spec)?;
    Ok(factor)
}

/// The inverse direction: a perfect gadget matching realising `factor`. Ports
/// of unused edges are absorbed by their vertex's cores in index order.
pub fn factor_to_matching(
    g: &Graph,
    gadget: &GadgetGraph,
    factor: &FFactor,
) -> Result<Matching, FactorError> {
    factor.check(g, &gadget.spec)?;
    let mut used = vec![false; g.edge_count()];
    for &e in &factor.edges {
        used[e] = true;
    }
    let mut pairs = Vec::new();
    let mut next_core: Vec<usize> = g.vertices().map(|v| gadget.core_start[v]).collect();
    for (e, &(a, b)) in gadget.ports.iter().enumerate() {
        if used[e] {
            pairs.push((a, b));
        }
    }
    for v in g.vertices() {
        for &u in g.neighbors(v) {
            let e = g.edge_index(u, v).expect("adjacent");
            if used[e] {
                continue;
            }
            let port = if v < u { gadget.ports[e].0 } else { gadget.ports[e].1 };
            pairs.push((port, next_core[v]));
            next_core[v] += 1;
        }
    }
    let m = Matching::from_pairs(gadget.graph.vertex_count(), &pairs).ok_or(FactorError::NotPerfect)?;
    if !m.is_perfect() || !m.is_valid_in(&gadget.graph) {
        return Err(FactorError::NotPerfect);
    }
    Ok(m)
}

/// Finds an f-factor through the gadget, after the two forced screens
/// (odd total demand, demand above degree).
pub fn f_factor(g: &Graph, f: &DegreeSpec) -> Result<Option<FFactor>, FactorError> {
    f.check_against(g)?;
    if f.total() % 2 == 1 || g.vertices().any(|v| f.get(v) > g.degree(v)) {
        return Ok(None);
    }
    let gadget = build_gadget(g, f)?;
    match perfect_matching(&gadget.graph) {
        Some(m) => extract_f_factor(g, &gadget, &m).map(Some),
        None => Ok(None),
    }
}

/// Vertex-disjoint paths and cycles covering the graph, in canonical form:
/// paths run from their smaller end, cycles start at their minimum vertex and
/// step first to the smaller of its two neighbours, and both lists are sorted
/// by first vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathCycleSystem {
    pub paths: Vec<Vec<Vertex>>,
    pub cycles: Vec<Vec<Vertex>>,
}

impl PathCycleSystem {
    /// Checks every structural requirement against `g` and `w`.
    pub fn validate(&self, g: &Graph, w: &VertexSet) -> Result<(), String> {
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        let mut mark = |v: Vertex| -> Result<(), String> {
            if v >= n {
                return Err(format!("vertex {v} out of range"));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(format!("vertex {v} used twice"));
            }
            Ok(())
        };
        let mut ends = Vec::new();
        for p in &self.paths {
            if p.len() < 2 {
                return Err(format!("path {p:?} has no edge"));
            }
            for (i, &v) in p.iter().enumerate() {
                mark(v)?;
                let interior = i > 0 && i + 1 < p.len();
                if interior && w.contains(v) {
                    return Err(format!("terminal {v} is interior to a path"));
                }
            }
            for pair in p.windows(2) {
                if !g.has_edge(pair[0], pair[1]) {
                    return Err(format!("{} {} is not an edge", pair[0], pair[1]));
                }
            }
            ends.push(p[0]);
            ends.push(*p.last().expect("non-empty"));
        }
        for c in &self.cycles {
            if c.len() < 3 {
                return Err(format!("cycle {c:?} is too short"));
            }
            for &v in c {
                if w.contains(v) {
                    return Err(format!("terminal {v} lies on a cycle"));
                }
                mark(v)?;
            }
            for i in 0..c.len() {
                let (a, b) = (c[i], c[(i + 1) % c.len()]);
                if !g.has_edge(a, b) {
                    return Err(format!("{a} {b} is not an edge"));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(format!("vertex {v} is not covered"));
        }
        ends.sort_unstable();
        if ends != w.members() {
            return Err(format!("path ends {ends:?} differ from terminals {:?}", w.members()));
        }
        Ok(())
    }
}

impl fmt::Display for PathCycleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &[Vertex]| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        for p in &self.paths {
            writeln!(f, "path: {}", join(p))?;
        }
        for c in &self.cycles {
            writeln!(f, "cycle: {}", join(c))?;
        }
        Ok(())
    }
}

/// Splits a factor with degree 1 on `w` and 2 elsewhere into its paths and
/// cycles.
pub fn decompose_system(
    g: &Graph,
    factor: &FFactor,
    w: &VertexSet,
) -> Result<PathCycleSystem, FactorError> {
    let f = degree_spec_from_terminals(g, w)?;
    factor.check(g, &f)?;
    let n = g.vertex_count();
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for (u, v) in factor.edge_pairs(g) {
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let mut seen = vec![false; n];
    let walk = |start: Vertex, first: Vertex, seen: &mut Vec<bool>| {
        let mut seq = vec![start];
        seen[start] = true;
        let (mut prev, mut cur) = (start, first);
        while !seen[cur] {
            seen[cur] = true;
            seq.push(cur);
            match adj[cur].iter().copied().find(|&x| x != prev) {
                Some(next) if adj[cur].len() == 2 => {
                    prev = cur;
                    cur = next;
                }
                _ => break,
            }
        }
        seq
    };
    let mut system = PathCycleSystem::default();
    for t in w.iter() {
        if !seen[t] {
            system.paths.push(walk(t, adj[t][0], &mut seen));
        }
    }
    for v in 0..n {
        if !seen[v] {
            system.cycles.push(walk(v, adj[v][0], &mut seen));
        }
    }
    Ok(system)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Feasible(PathCycleSystem),
    Infeasible,
}

impl SolveOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, SolveOutcome::Feasible(_))
    }

    pub fn system(&self) -> Option<&PathCycleSystem> {
        match self {
            SolveOutcome::Feasible(s) => Some(s),
            SolveOutcome::Infeasible => None,
        }
    }
}

impl fmt::Display for SolveOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveOutcome::Feasible(s) => write!(f, "{s}"),
            SolveOutcome::Infeasible => writeln!(f, "INFEASIBLE"),
        }
    }
}

/// Decides whether `g` has a spanning path-cycle system with end-vertex set
/// `w`, and builds one when it does.
pub fn solve(g: &Graph, w: &VertexSet) -> Result<SolveOutcome, FactorError> {
    let f = degree_spec_from_terminals(g, w)?;
    match f_factor(g, &f)? {
        Some(factor) => Ok(SolveOutcome::Feasible(decompose_system(g, &factor, w)?)),
        None => Ok(SolveOutcome::Infeasible),
    }
}

/// Default edge limit for [`brute_force_f_factor`].
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 24;

/// Exhaustive f-factor search by backtracking over vertices in index order,
/// choosing each vertex's remaining edges towards larger neighbours. Refuses
/// graphs with more than `edge_limit` edges.
pub fn brute_force_f_factor(
    g: &Graph,
    f: &DegreeSpec,
    edge_limit: usize,
) -> Result<Option<FFactor>, FactorError> {
    f.check_against(g)?;
    if g.edge_count() > edge_limit {
        return Err(FactorError::BoundExceeded {
            edges: g.edge_count(),
            limit: edge_limit,
        });
    }
    if f.total() % 2 == 1 {
        return Ok(None);
    }
    let mut need: Vec<usize> = f.targets().to_vec();
    let mut chosen = Vec::new();
    if search(g, 0, &mut need, &mut chosen) {
        chosen.sort_unstable();
        let factor = FFactor { edges: chosen };
        debug_assert!(factor.check(g, f).is_ok());
        Ok(Some(factor))
    } else {
        Ok(None)
    }
}

fn search(g: &Graph, v: Vertex, need: &mut [usize], chosen: &mut Vec<usize>) -> bool {
    if v == g.vertex_count() {
        return true;
    }
    if need[v] == 0 {
        return search(g, v + 1, need, chosen);
    }
    let candidates: Vec<Vertex> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&u| u > v && need[u] > 0)
        .collect();
    if candidates.len() < need[v] {
        return false;
    }
    choose(g, v, &candidates, 0, need, chosen)
}

fn choose(
    g: &Graph,
    v: Vertex,
    candidates: &[Vertex],
    from: usize,
    need: &mut [usize],
    chosen: &mut Vec<usize>,
) -> bool {
    if need[v] == 0 {
        return search(g, v + 1, need, chosen);
    }
    if candidates.len() - from < need[v] {
        return false;
    }
    for i in from..candidates.len() {
        let u = candidates[i];
        if need[u] == 0 {
            continue;
        }
        need[u] -= 1;
        need[v] -= 1;
        chosen.push(g.edge_index(u, v).expect("adjacent"));
        if choose(g, v, candidates, i + 1, need, chosen) {
            return true;
        }
        chosen.pop();
        need[u] += 1;
        need[v] += 1;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{complete, cycle};

    #[test]
    fn spec_from_terminals() {
        let g = cycle(4);
        let f = degree_spec_from_terminals(&g, &[0, 1].into()).unwrap();
        assert_eq!(f.targets(), &[1, 1, 2, 2]);
        assert_eq!(f.total(), 2 * 4 - 2);
        assert_eq!(degree_spec_from_terminals(&g, &VertexSet::empty()).unwrap().targets(), &[2; 4]);
        assert_eq!(
            degree_spec_from_terminals(&g, &[0, 1, 2, 3].into()).unwrap().targets(),
            &[1; 4]
        );
        assert_eq!(
            degree_spec_from_terminals(&g, &[0].into()),
            Err(FactorError::OddTerminalSet(1))
        );
        assert!(degree_spec_from_terminals(&g, &[0, 9].into()).is_err());
    }

    #[test]
    fn gadget_counts() {
        let star = crate::named::star(3);
        let mut f = vec![1; 4];
        f[0] = 2;
        let gg = build_gadget(&star, &DegreeSpec::new(f)).unwrap();
        let ports = gg.origin.iter().filter(|o| matches!(o, GadgetVertex::Port { endpoint: 0, .. })).count();
        assert_eq!(ports, 3);
        assert_eq!(gg.cores(0).len(), 1);
        assert_eq!(gg.graph.vertex_count(), 6 + 1);

        let c4 = cycle(4);
        let gg = build_gadget(&c4, &DegreeSpec::uniform(4, 2)).unwrap();
        assert_eq!(gg.graph.vertex_count(), 8);
        assert_eq!(gg.graph.edge_count(), 4);
        let m = perfect_matching(&gg.graph).unwrap();
        let factor = extract_f_factor(&c4, &gg, &m).unwrap();
        assert_eq!(factor.edges, vec![0, 1, 2, 3]);

        assert!(matches!(
            build_gadget(&c4, &DegreeSpec::uniform(4, 3)),
            Err(FactorError::TargetExceedsDegree { vertex: 0, .. })
        ));
    }

    #[test]
    fn gadget_vertex_total() {
        let g = complete(5);
        let f = degree_spec_from_terminals(&g, &[1, 3].into()).unwrap();
        let gg = build_gadget(&g, &f).unwrap();
        let expected: usize = g.vertices().map(|v| 2 * g.degree(v) - f.get(v)).sum();
        assert_eq!(gg.graph.vertex_count(), expected);
        for v in g.vertices() {
            assert_eq!(gg.cores(v).len(), g.degree(v) - f.get(v));
        }
    }

    #[test]
    fn extract_rejects_imperfect() {
        let c4 = cycle(4);
        let gg = build_gadget(&c4, &DegreeSpec::uniform(4, 2)).unwrap();
        let partial = Matching::from_pairs(8, &[gg.port(0)]).unwrap();
        assert_eq!(extract_f_factor(&c4, &gg, &partial), Err(FactorError::NotPerfect));
    }

    #[test]
    fn zero_spec_gives_empty_factor() {
        let g = cycle(5);
        let f = DegreeSpec::uniform(5, 0);
        let factor = f_factor(&g, &f).unwrap().unwrap();
        assert!(factor.edges.is_empty());
    }

    #[test]
    fn decompose_examples() {
        let c6 = cycle(6);
        let all = FFactor { edges: (0..6).collect() };
        let s = decompose_system(&c6, &all, &VertexSet::empty()).unwrap();
        assert!(s.paths.is_empty());
        assert_eq!(s.cycles, vec![vec![0, 1, 2, 3, 4, 5]]);

        let k4 = complete(4);
        let edges = [(0, 2), (2, 3), (1, 3)].iter().map(|&(u, v)| k4.edge_index(u, v).unwrap()).collect();
        let s = decompose_system(&k4, &FFactor { edges }, &[0, 1].into()).unwrap();
        assert_eq!(s.paths, vec![vec![0, 2, 3, 1]]);
        assert!(s.cycles.is_empty());

        // 4-cycle on 0..4 plus a path 4-5-6
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6)]).unwrap();
        let factor = FFactor { edges: (0..6).collect() };
        let s = decompose_system(&g, &factor, &[4, 6].into()).unwrap();
        assert_eq!(s.paths, vec![vec![4, 5, 6]]);
        assert_eq!(s.cycles, vec![vec![0, 1, 2, 3]]);
        assert_eq!(s.to_string(), "path: 4 5 6\ncycle: 0 1 2 3\n");
        s.validate(&g, &[4, 6].into()).unwrap();

        let bad = FFactor { edges: vec![0] };
        assert!(matches!(
            decompose_system(&g, &bad, &[4, 6].into()),
            Err(FactorError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn solve_examples() {
        let out = solve(&cycle(6), &VertexSet::empty()).unwrap();
        assert_eq!(out.to_string(), "cycle: 0 1 2 3 4 5\n");

        let k4 = complete(4);
        let w: VertexSet = [0, 1].into();
        let out = solve(&k4, &w).unwrap();
        out.system().unwrap().validate(&k4, &w).unwrap();

        assert_eq!(solve(&cycle(5), &[0, 2].into()).unwrap(), SolveOutcome::Infeasible);
        assert_eq!(solve(&cycle(5), &[0].into()), Err(FactorError::OddTerminalSet(1)));
    }

    #[test]
    fn brute_force_examples() {
        let c4 = cycle(4);
        let f = DegreeSpec::uniform(4, 2);
        assert_eq!(
            brute_force_f_factor(&c4, &f, BRUTE_FORCE_EDGE_LIMIT).unwrap().unwrap().edges,
            vec![0, 1, 2, 3]
        );
        let c5 = cycle(5);
        let f = degree_spec_from_terminals(&c5, &[0, 2].into()).unwrap();
        assert_eq!(brute_force_f_factor(&c5, &f, BRUTE_FORCE_EDGE_LIMIT).unwrap(), None);
        let k4 = complete(4);
        let pm = brute_force_f_factor(&k4, &DegreeSpec::uniform(4, 1), BRUTE_FORCE_EDGE_LIMIT)
            .unwrap()
            .unwrap();
        assert_eq!(pm.edges.len(), 2);
        assert!(matches!(
            brute_force_f_factor(&complete(8), &DegreeSpec::uniform(8, 2), BRUTE_FORCE_EDGE_LIMIT),
            Err(FactorError::BoundExceeded { edges: 28, limit: 24 })
        ));
    }

    #[test]
    fn k4_factor_matches_oracle_both_ways() {
        let k4 = complete(4);
        let f = degree_spec_from_terminals(&k4, &[0, 1].into()).unwrap();
        let gg = build_gadget(&k4, &f).unwrap();
        let m = perfect_matching(&gg.graph).unwrap();
        let factor = extract_f_factor(&k4, &gg, &m).unwrap();
        assert_eq!(factor.degrees(&k4), vec![1, 1, 2, 2]);
        let oracle = brute_force_f_factor(&k4, &f, BRUTE_FORCE_EDGE_LIMIT).unwrap().unwrap();
        let back = factor_to_matching(&k4, &gg, &oracle).unwrap();
        assert_eq!(extract_f_factor(&k4, &gg, &back).unwrap(), oracle);
    }
}
