//! Simple undirected graphs on dense vertex indices, the text formats used to
//! store them, and the traversal primitives the rest of the crate builds on.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Vertex index. Vertices of a graph with `n` vertices are `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex sets overlap at {0}")]
    Overlap(Vertex),
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

/// A simple undirected graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge list. Endpoints may be given in either
    /// order; self-loops, repeated edges and out-of-range indices are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Ok(Graph { adj, edges: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<(), GraphError> {
        match set.max() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1
            || components_after_removal(self, &VertexSet::empty())
                .map(|p| p.blocks.len() == 1)
                .unwrap_or(false)
    }

    /// Graph with the listed edge indices removed.
    pub fn without_edges(&self, removed: &[usize]) -> Graph {
        let mut drop = vec![false; self.edges.len()];
        for &e in removed {
            drop[e] = true;
        }
        let kept = self
            .edges
            .iter()
            .zip(&drop)
            .filter(|(_, &d)| !d)
            .map(|(&e, _)| e);
        Graph::from_edges(self.vertex_count(), kept).expect("subgraph of a simple graph")
    }
}

/// A sorted, duplicate-free set of vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_sorted_unchecked(members: Vec<Vertex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn members(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    /// Membership table of length `n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.0 {
            m[v] = true;
        }
        m
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn first_common(&self, other: &VertexSet) -> Option<Vertex> {
        self.iter().find(|&v| other.contains(v))
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Connected pieces of the graph left after deleting a vertex set. Blocks are
/// listed by increasing minimum vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub blocks: Vec<VertexSet>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

pub fn components_after_removal(
    g: &Graph,
    removed: &VertexSet,
) -> Result<ComponentPartition, GraphError> {
    g.check_set(removed)?;
    let n = g.vertex_count();
    let mut seen = removed.mask(n);
    let mut blocks = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut block = Vec::new();
        while let Some(u) = queue.pop_front() {
            block.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        blocks.push(block.into_iter().collect());
    }
    Ok(ComponentPartition { blocks })
}

/// Shortest-path distance; `Infinite` when no path exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// BFS distances from `source` to every vertex.
pub fn distances_from(g: &Graph, source: Vertex) -> Result<Vec<Distance>, GraphError> {
    g.check_vertex(source)?;
    let mut dist = vec![Distance::Infinite; g.vertex_count()];
    dist[source] = Distance::Finite(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].finite().unwrap_or(0);
        for &w in g.neighbors(u) {
            if dist[w] == Distance::Infinite {
                dist[w] = Distance::Finite(du + 1);
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

pub fn distance(g: &Graph, u: Vertex, v: Vertex) -> Result<Distance, GraphError> {
    g.check_vertex(v)?;
    Ok(distances_from(g, u)?[v])
}

/// Number of edges with one end in `a` and the other in `b`.
pub fn edge_count_between(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<usize, GraphError> {
    g.check_set(a)?;
    g.check_set(b)?;
    if let Some(v) = a.first_common(b) {
        return Err(GraphError::Overlap(v));
    }
    let in_b = b.mask(g.vertex_count());
    Ok(a.iter()
        .map(|u| g.neighbors(u).iter().filter(|&&w| in_b[w]).count())
        .sum())
}

/// Reads the `p`/`e` graph format. Comment lines start with `c`.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let nums: Vec<&str> = fields.collect();
        let parse_two = |nums: &[&str]| -> Result<(usize, usize), GraphError> {
            if nums.len() != 2 {
                return Err(parse_err(line_no, "expected two decimal fields"));
            }
            let a = nums[0]
                .parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("bad number {:?}", nums[0])))?;
            let b = nums[1]
                .parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("bad number {:?}", nums[1])))?;
            Ok((a, b))
        };
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, "second header line"));
                }
                header = Some(parse_two(&nums)?);
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| parse_err(line_no, "edge before header"))?;
                let (u, v) = parse_two(&nums)?;
                if u >= n || v >= n {
                    return Err(parse_err(
                        line_no,
                        format!("vertex index {} out of range 0..{n}", u.max(v)),
                    ));
                }
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop at {u}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(parse_err(line_no, format!("duplicate edge {u} {v}")));
                }
                edges.push((u, v));
            }
            other => return Err(parse_err(line_no, format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(text.lines().count().max(1), "missing header"))?;
    if edges.len() != m {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

/// Canonical text form: header, then edges sorted with `u < v`.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

/// Reads a terminal-set file: whitespace-separated vertex indices.
pub fn parse_vertex_list(text: &str) -> Result<VertexSet, GraphError> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        for tok in line.split_whitespace() {
            let v = tok
                .parse::<Vertex>()
                .map_err(|_| parse_err(idx + 1, format!("bad vertex index {tok:?}")))?;
            if out.contains(&v) {
                return Err(parse_err(idx + 1, format!("vertex {v} listed twice")));
            }
            out.push(v);
        }
    }
    Ok(out.into())
}

pub fn serialize_vertex_list(set: &VertexSet) -> String {
    format!("{set}\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn parses_single_vertex() {
        let g = parse_graph("p 1 0\n").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(serialize_graph(&g), "p 1 0\n");
    }

    #[test]
    fn parses_triangle_and_serializes_canonically() {
        let g = parse_graph("c triangle\np 3 3\ne 0 1\ne 1 2\ne 0 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(serialize_graph(&g), "p 3 3\ne 0 1\ne 0 2\ne 1 2\n");
    }

    #[test]
    fn rejects_bad_input_with_line_numbers() {
        let err = parse_graph("p 3 2\ne 0 1\ne 0 1\n").unwrap_err();
        assert_eq!(
            err,
            GraphError::Parse {
                line: 3,
                message: "duplicate edge 0 1".into()
            }
        );
        assert!(matches!(
            parse_graph("p 3 1\ne 1 1\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("p 3 1\ne 0 3\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("p 3\n"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(parse_graph("e 0 1\n").is_err());
        assert!(parse_graph("p 3 2\ne 0 1\n").is_err());
    }

    #[test]
    fn components_of_c4_minus_opposite_pair() {
        let g = cycle(4);
        let p = components_after_removal(&g, &[0, 2].into()).unwrap();
        assert_eq!(p.blocks, vec![VertexSet::from([1]), VertexSet::from([3])]);
        let whole = components_after_removal(&g, &VertexSet::empty()).unwrap();
        assert_eq!(whole.blocks, vec![VertexSet::from([0, 1, 2, 3])]);
        assert!(components_after_removal(&g, &[7].into()).is_err());
    }

    #[test]
    fn distances() {
        let g = cycle(4);
        assert_eq!(distance(&g, 0, 2).unwrap(), Distance::Finite(2));
        assert_eq!(distance(&g, 3, 3).unwrap(), Distance::Finite(0));
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(distance(&two, 0, 3).unwrap(), Distance::Infinite);
        assert!(distance(&two, 0, 4).is_err());
    }

    #[test]
    fn edge_counts() {
        let g = cycle(4);
        assert_eq!(edge_count_between(&g, &[0].into(), &[1, 3].into()).unwrap(), 2);
        assert_eq!(edge_count_between(&g, &[0].into(), &VertexSet::empty()).unwrap(), 0);
        assert_eq!(
            edge_count_between(&g, &[0, 1].into(), &[1].into()),
            Err(GraphError::Overlap(1))
        );
    }

    #[test]
    fn terminal_lists() {
        assert_eq!(parse_vertex_list("").unwrap(), VertexSet::empty());
        assert_eq!(parse_vertex_list("3 1\n").unwrap(), VertexSet::from([1, 3]));
        assert!(parse_vertex_list("1 1").is_err());
        assert!(parse_vertex_list("x").is_err());
        assert_eq!(serialize_vertex_list(&[4, 2].into()), "2 4\n");
    }
}
