//! Maximum-cardinality matching in general graphs (Edmonds' blossom method).
//!
//! Each search grows an alternating forest from one exposed vertex. Odd cycles
//! are shrunk by relabelling their vertices with the blossom base through a
//! union-find style `base` array, so a single search runs in near-linear time.
//! Vertices are scanned in index order and there is no randomisation: the
//! same graph always yields the same matching.

use crate::graph::{Graph, Vertex};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<Vertex>>,
}

impl Matching {
    pub fn from_mates(mate: Vec<Option<Vertex>>) -> Self {
        Matching { mate }
    }

    /// Builds a matching from explicit pairs; `None` if two pairs share a vertex.
    pub fn from_pairs(n: usize, pairs: &[(Vertex, Vertex)]) -> Option<Self> {
        let mut mate = vec![None; n];
        for &(u, v) in pairs {
            if u == v || mate[u].is_some() || mate[v].is_some() {
                return None;
            }
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        Some(Matching { mate })
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate[v]
    }

    /// Matched pairs `(u, v)` with `u < v`, in increasing order of `u`.
    pub fn pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    /// True when every pair is an edge of `g` and mates are symmetric.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.mate.len() == g.vertex_count()
            && self.mate.iter().enumerate().all(|(u, m)| match *m {
                None => true,
                Some(v) => self.mate[v] == Some(u) && g.has_edge(u, v),
            })
    }
}

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    pred: Vec<usize>,
    base: Vec<usize>,
    // 0 = unlabelled, 1 = outer (even), 2 = inner (odd)
    label: Vec<u8>,
    stamp: Vec<u32>,
    clock: u32,
    queue: std::collections::VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        Blossom {
            g,
            mate: vec![NONE; n],
            pred: vec![NONE; n],
            base: (0..n).collect(),
            label: vec![0; n],
            stamp: vec![0; n],
            clock: 0,
            queue: Default::default(),
        }
    }

    fn greedy(&mut self) {
        for u in self.g.vertices() {
            if self.mate[u] != NONE {
                continue;
            }
            if let Some(&v) = self.g.neighbors(u).iter().find(|&&v| self.mate[v] == NONE) {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.base[root] != root {
            root = self.base[root];
        }
        while self.base[x] != root {
            let next = self.base[x];
            self.base[x] = root;
            x = next;
        }
        root
    }

    fn lca(&mut self, mut u: usize, mut v: usize) -> usize {
        self.clock += 1;
        let t = self.clock;
        u = self.find(u);
        v = self.find(v);
        loop {
            if u != NONE {
                if self.stamp[u] == t {
                    return u;
                }
                self.stamp[u] = t;
                u = if self.mate[u] == NONE {
                    NONE
                } else {
                    let p = self.pred[self.mate[u]];
                    self.find(p)
                };
            }
            std::mem::swap(&mut u, &mut v);
        }
    }

    fn shrink(&mut self, mut x: usize, mut y: usize, top: usize) {
        while self.find(x) != top {
            self.pred[x] = y;
            y = self.mate[x];
            if self.label[y] == 2 {
                self.label[y] = 1;
                self.queue.push_back(y);
            }
            if self.find(x) == x {
                self.base[x] = top;
            }
            if self.find(y) == y {
                self.base[y] = top;
            }
            x = self.pred[y];
        }
    }

    /// Searches for an augmenting path from the exposed vertex `root` and
    /// applies it. Returns false when none exists.
    fn augment_from(&mut self, root: usize) -> bool {
        let n = self.g.vertex_count();
        for i in 0..n {
            self.label[i] = 0;
            self.pred[i] = NONE;
            self.base[i] = i;
        }
        self.queue.clear();
        self.label[root] = 1;
        self.queue.push_back(root);
        while let Some(u) = self.queue.pop_front() {
            for idx in 0..self.g.degree(u) {
                let v = self.g.neighbors(u)[idx];
                let label = self.label[v];
                match label {
                    0 => {
                        self.pred[v] = u;
                        self.label[v] = 2;
                        if self.mate[v] == NONE {
                            let mut x = v;
                            while x != NONE {
                                let p = self.pred[x];
                                let next = self.mate[p];
                                self.mate[x] = p;
                                self.mate[p] = x;
                                x = next;
                            }
                            return true;
                        }
                        let w = self.mate[v];
                        self.label[w] = 1;
                        self.queue.push_back(w);
                    }
                    1 if self.find(u) != self.find(v) => {
                        let top = self.lca(u, v);
                        self.shrink(u, v, top);
                        self.shrink(v, u, top);
                    }
                    _ => {}
                }
            }
        }
        false
    }

    fn into_matching(self) -> Matching {
        Matching {
            mate: self
                .mate
                .into_iter()
                .map(|m| if m == NONE { None } else { Some(m) })
                .collect(),
        }
    }
}

/// A maximum-cardinality matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut b = Blossom::new(g);
    b.greedy();
    // An exposed vertex with no augmenting path stays exposed for good, so one
    // pass over the vertices suffices.
    for v in g.vertices() {
        if b.mate[v] == NONE {
            b.augment_from(v);
        }
    }
    b.into_matching()
}

/// A perfect matching of `g`, or `None`. Stops at the first exposed vertex
/// that cannot be augmented.
pub fn perfect_matching(g: &Graph) -> Option<Matching> {
    if g.vertex_count() % 2 == 1 {
        return None;
    }
    let mut b = Blossom::new(g);
    b.greedy();
    for v in g.vertices() {
        if b.mate[v] == NONE && !b.augment_from(v) {
            return None;
        }
    }
    Some(b.into_matching())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{cycle, petersen};
    use proptest::prelude::*;

    fn brute_force_size(g: &Graph) -> usize {
        fn go(g: &Graph, used: &mut Vec<bool>, from: usize) -> usize {
            let n = g.vertex_count();
            let Some(u) = (from..n).find(|&u| !used[u]) else {
                return 0;
            };
            used[u] = true;
            let mut best = go(g, used, u + 1);
            for &v in g.neighbors(u) {
                if !used[v] {
                    used[v] = true;
                    best = best.max(1 + go(g, used, u + 1));
                    used[v] = false;
                }
            }
            used[u] = false;
            best
        }
        go(g, &mut vec![false; g.vertex_count()], 0)
    }

    #[test]
    fn small_cycles() {
        let m = maximum_matching(&cycle(4));
        assert_eq!(m.size(), 2);
        assert!(m.is_perfect());
        assert_eq!(maximum_matching(&cycle(5)).size(), 2);
        assert!(perfect_matching(&cycle(5)).is_none());
    }

    #[test]
    fn petersen_is_perfectly_matchable() {
        let g = petersen();
        assert_eq!(brute_force_size(&g), 5);
        let m = maximum_matching(&g);
        assert_eq!(m.size(), 5);
        assert!(m.is_valid_in(&g));
    }

    #[test]
    fn blossom_needed() {
        // Triangle with pendant paths: the greedy start matches 0-1 and
        // the augmenting path 3-2-0-1-4 runs through the triangle.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (1, 4), (4, 5)]).unwrap();
        let m = maximum_matching(&g);
        assert_eq!(m.size(), 3);
        assert!(m.is_valid_in(&g));
    }

    #[test]
    fn deterministic() {
        let g = petersen();
        assert_eq!(maximum_matching(&g), maximum_matching(&g));
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in 1usize..=12, bits in proptest::collection::vec(any::<bool>(), 66)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k % bits.len()] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let m = maximum_matching(&g);
            prop_assert!(m.is_valid_in(&g));
            prop_assert_eq!(m.size(), brute_force_size(&g));
            // maximal: no edge with both ends exposed
            for &(u, v) in g.edges() {
                prop_assert!(m.mate(u).is_some() || m.mate(v).is_some());
            }
            prop_assert_eq!(perfect_matching(&g).is_some(), 2 * m.size() == n);
        }
    }
}
