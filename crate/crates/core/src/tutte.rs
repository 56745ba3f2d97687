//! Tutte's f-factor criterion: the deficiency `delta(S, T)`, f-odd
//! components, exhaustive certificate search and the witness file format.
//!
//! For disjoint `S, T`,
//! `delta(S, T) = f(S) + deg_{G-S}(T) - f(T) - q(S, T)`, where `q` counts the
//! components `D` of `G - (S ∪ T)` with `f(D) + e(D, T)` odd. A graph has an
//! f-factor iff every `delta` is non-negative, and `delta` always has the
//! parity of `f(V)`.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::factor::DegreeSpec;
use crate::graph::{components_after_removal, Graph, GraphError, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TutteError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("S and T share vertex {0}")]
    Overlap(Vertex),
    #[error("degree spec covers {spec} vertices, graph has {graph}")]
    SpecLength { spec: usize, graph: usize },
    #[error("certificate search is limited to {limit} vertices, graph has {n}")]
    BoundExceeded { n: usize, limit: usize },
    #[error("witness line {line}: {message}")]
    WitnessFormat { line: usize, message: String },
}

fn check_inputs(g: &Graph, f: &DegreeSpec, s: &VertexSet, t: &VertexSet) -> Result<(), TutteError> {
    if f.len() != g.vertex_count() {
        return Err(TutteError::SpecLength {
            spec: f.len(),
            graph: g.vertex_count(),
        });
    }
    g.check_set(s)?;
    g.check_set(t)?;
    if let Some(v) = s.first_common(t) {
        return Err(TutteError::Overlap(v));
    }
    Ok(())
}

/// f-odd components of `G - (S ∪ T)`, in order of their smallest vertex.
pub fn odd_components(
    g: &Graph,
    f: &DegreeSpec,
    s: &VertexSet,
    t: &VertexSet,
) -> Result<(usize, Vec<VertexSet>), TutteError> {
    check_inputs(g, f, s, t)?;
    let in_t = t.mask(g.vertex_count());
    let odd: Vec<VertexSet> = components_after_removal(g, &s.union(t))?
        .blocks
        .into_iter()
        .filter(|d| {
            let into_t: usize = d
                .iter()
                .map(|v| g.neighbors(v).iter().filter(|&&u| in_t[u]).count())
                .sum();
            (f.sum_over(d) + into_t) % 2 == 1
        })
        .collect();
    Ok((odd.len(), odd))
}

/// `delta(S, T)`. Panics if the parity identity `delta ≡ f(V) (mod 2)` fails,
/// which would mean a bug in this module.
pub fn delta(g: &Graph, f: &DegreeSpec, s: &VertexSet, t: &VertexSet) -> Result<i64, TutteError> {
    let (q, _) = odd_components(g, f, s, t)?;
    Ok(delta_with_q(g, f, s, t, q))
}

fn delta_with_q(g: &Graph, f: &DegreeSpec, s: &VertexSet, t: &VertexSet, q: usize) -> i64 {
    let in_s = s.mask(g.vertex_count());
    let deg_t: usize = t
        .iter()
        .map(|y| g.neighbors(y).iter().filter(|&&u| !in_s[u]).count())
        .sum();
    let d = f.sum_over(s) as i64 + deg_t as i64 - f.sum_over(t) as i64 - q as i64;
    assert_eq!(
        d.rem_euclid(2),
        (f.total() % 2) as i64,
        "delta parity differs from f(V)"
    );
    d
}

/// A disjoint pair `(S, T)` together with its deficiency and f-odd
/// components. When `delta < 0` it proves that no f-factor exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TutteCertificate {
    pub s: VertexSet,
    pub t: VertexSet,
    pub delta: i64,
    pub q: usize,
    pub odd_components: Vec<VertexSet>,
}

impl TutteCertificate {
    /// Evaluates `(S, T)` from scratch.
    pub fn evaluate(
        g: &Graph,
        f: &DegreeSpec,
        s: VertexSet,
        t: VertexSet,
    ) -> Result<Self, TutteError> {
        let (q, odd) = odd_components(g, f, &s, &t)?;
        let delta = delta_with_q(g, f, &s, &t, q);
        Ok(TutteCertificate {
            s,
            t,
            delta,
            q,
            odd_components: odd,
        })
    }

    pub fn proves_infeasible(&self) -> bool {
        self.delta < 0
    }

    /// Recomputes every stored quantity and compares.
    pub fn recheck(&self, g: &Graph, f: &DegreeSpec) -> Result<bool, TutteError> {
        let fresh = TutteCertificate::evaluate(g, f, self.s.clone(), self.t.clone())?;
        Ok(&fresh == self)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, tag: &str, set: &VertexSet) -> fmt::Result {
    if set.is_empty() {
        writeln!(f, "{tag}:")
    } else {
        writeln!(f, "{tag}: {set}")
    }
}

impl fmt::Display for TutteCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, "S", &self.s)?;
        write_list(f, "T", &self.t)?;
        writeln!(f, "delta: {}", self.delta)?;
        writeln!(f, "odd: {}", self.q)?;
        for d in &self.odd_components {
            writeln!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Contents of a witness file as written, before re-evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessFile {
    pub s: VertexSet,
    pub t: VertexSet,
    pub delta: i64,
    pub q: usize,
    pub odd_components: Vec<VertexSet>,
}

pub fn parse_witness(text: &str) -> Result<WitnessFile, TutteError> {
    let err = |line: usize, message: &str| TutteError::WitnessFormat {
        line,
        message: message.to_string(),
    };
    let lines: Vec<&str> = text.lines().collect();
    let field = |idx: usize, tag: &str| -> Result<&str, TutteError> {
        let line = lines.get(idx).ok_or_else(|| err(idx + 1, "unexpected end of file"))?;
        line.strip_prefix(tag)
            .and_then(|rest| rest.strip_prefix(':'))
            .map(str::trim)
            .ok_or_else(|| err(idx + 1, &format!("expected `{tag}:`")))
    };
    let list = |idx: usize, body: &str| -> Result<VertexSet, TutteError> {
        body.split_whitespace()
            .map(|t| t.parse::<Vertex>().map_err(|_| err(idx + 1, "bad vertex index")))
            .collect()
    };
    let s = list(0, field(0, "S")?)?;
    let t = list(1, field(1, "T")?)?;
    let delta = field(2, "delta")?
        .parse::<i64>()
        .map_err(|_| err(3, "bad delta"))?;
    let q = field(3, "odd")?.parse::<usize>().map_err(|_| err(4, "bad count"))?;
    let mut odd = Vec::new();
    for (i, line) in lines.iter().enumerate().skip(4) {
        if line.trim().is_empty() {
            continue;
        }
        odd.push(list(i, line)?);
    }
    if odd.len() != q {
        return Err(err(lines.len().max(1), "component count differs from `odd:`"));
    }
    Ok(WitnessFile {
        s,
        t,
        delta,
        q,
        odd_components: odd,
    })
}

/// Largest graph accepted by [`search_certificate`] unless overridden.
pub const SEARCH_VERTEX_LIMIT: usize = 14;
const HARD_VERTEX_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub vertex_limit: usize,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            vertex_limit: SEARCH_VERTEX_LIMIT,
            jobs: 1,
        }
    }
}

struct Masks {
    n: usize,
    adj: Vec<u32>,
    f: Vec<u32>,
}

impl Masks {
    fn new(g: &Graph, f: &DegreeSpec) -> Self {
        let adj = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
            .collect();
        Masks {
            n: g.vertex_count(),
            adj,
            f: f.targets().iter().map(|&x| x as u32).collect(),
        }
    }

    fn sum_f(&self, mut set: u32) -> i64 {
        let mut total = 0i64;
        while set != 0 {
            let v = set.trailing_zeros() as usize;
            total += self.f[v] as i64;
            set &= set - 1;
        }
        total
    }

    fn delta(&self, s: u32, t: u32) -> i64 {
        let all = if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 };
        let mut deg_t = 0i64;
        let mut bits = t;
        while bits != 0 {
            let y = bits.trailing_zeros() as usize;
            deg_t += (self.adj[y] & !s).count_ones() as i64;
            bits &= bits - 1;
        }
        let mut rest = all & !(s | t);
        let mut q = 0i64;
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut grow = 0u32;
                let mut b = frontier;
                while b != 0 {
                    grow |= self.adj[b.trailing_zeros() as usize];
                    b &= b - 1;
                }
                frontier = grow & rest & !comp;
                comp |= frontier;
            }
            rest &= !comp;
            let mut parity = self.sum_f(comp);
            let mut b = comp;
            while b != 0 {
                parity += (self.adj[b.trailing_zeros() as usize] & t).count_ones() as i64;
                b &= b - 1;
            }
            q += parity & 1;
        }
        self.sum_f(s) + deg_t - self.sum_f(t) - q
    }
}

fn mask_to_set(mask: u32) -> VertexSet {
    let mut v = Vec::new();
    let mut b = mask;
    while b != 0 {
        v.push(b.trailing_zeros() as usize);
        b &= b - 1;
    }
    VertexSet::from_sorted_unchecked(v)
}

fn combinations(n: usize, k: usize) -> Vec<u32> {
    fn go(n: usize, k: usize, from: usize, acc: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for v in from..=n - k {
            go(n, k - 1, v + 1, acc | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(n, k, 0, 0, &mut out);
    }
    out
}

/// The violating pair of smallest `|S| + |T|` that is least in lexicographic
/// order on `(S, T)`, or `None` when the graph has an f-factor. Enumerates
/// all `3^n` disjoint pairs in the worst case.
pub fn search_certificate(
    g: &Graph,
    f: &DegreeSpec,
    opts: SearchOptions,
) -> Result<Option<TutteCertificate>, TutteError> {
    check_inputs(g, f, &VertexSet::empty(), &VertexSet::empty())?;
    let limit = opts.vertex_limit.min(HARD_VERTEX_LIMIT);
    if g.vertex_count() > limit {
        return Err(TutteError::BoundExceeded {
            n: g.vertex_count(),
            limit,
        });
    }
    let masks = Masks::new(g, f);
    let n = g.vertex_count();
    // Minimal violating (S, T) among all splits of one union U.
    let best_in_union = |u: u32| -> Option<(VertexSet, VertexSet)> {
        let mut best: Option<(VertexSet, VertexSet)> = None;
        let mut s = u;
        loop {
            let t = u & !s;
            if masks.delta(s, t) < 0 {
                let key = (mask_to_set(s), mask_to_set(t));
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & u;
        }
        best
    };
    let run = || {
        for size in 0..=n {
            let unions = combinations(n, size);
            let found = if opts.jobs > 1 {
                unions.par_iter().filter_map(|&u| best_in_union(u)).min()
            } else {
                unions.iter().filter_map(|&u| best_in_union(u)).min()
            };
            if found.is_some() {
                return found;
            }
        }
        None
    };
    let found = if opts.jobs > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map(|pool| pool.install(run))
            .unwrap_or_else(|_| run())
    } else {
        run()
    };
    match found {
        Some((s, t)) => TutteCertificate::evaluate(g, f, s, t).map(Some),
        None => Ok(None),
    }
}
