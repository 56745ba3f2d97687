//! Generators for the sharpness constructions and for random instances that
//! satisfy every hypothesis of the existence theorem.
//!
//! Each generator re-verifies the properties it claims before returning, so a
//! construction that does not deliver what it promises fails loudly instead
//! of producing a misleading instance.

mod prop1;
mod prop2;
mod random;

use std::fmt;

use thiserror::Error;

use crate::factor::{degree_spec_from_terminals, FactorError};
use crate::graph::{serialize_graph, serialize_vertex_list, Graph, GraphError, Vertex, VertexSet};
use crate::tutte::{TutteCertificate, TutteError};
use crate::verify::{
    check_bipartite, check_edge_connectivity_at_least, check_regular, check_star_free,
    check_terminal_neighborhood, check_terminal_set, edge_connectivity, find_induced_star,
    max_terminal_neighbors, PropertyReport, TerminalMode, Verdict, Witness,
};

pub use prop1::{gen_prop1_bipartite, gen_prop1_even, gen_prop1_odd};
pub use prop2::{gen_prop2_general, gen_prop2_r4, gen_prop2_r5};
pub use random::random_valid_instance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("{family}: claimed property does not hold: {report}")]
    Verification { family: String, report: String },
    #[error("no valid instance after {0} attempts")]
    BudgetExhausted(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Tutte(#[from] TutteError),
}

fn bad(msg: impl Into<String>) -> FamilyError {
    FamilyError::Parameters(msg.into())
}

/// A property a generator asserts about its output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    Regular(usize),
    EdgeConnectivityExactly(usize),
    EdgeConnectivityAtLeast(usize),
    StarFree(usize),
    /// The graph contains an induced `K_{1,m}`.
    HasInducedStar(usize),
    Bipartite,
    Terminals(TerminalMode),
    /// Every vertex has at most two terminal neighbours and some vertex has
    /// exactly two.
    TerminalsAtMostTwoTight,
    /// No two terminals are adjacent.
    TerminalsIndependent,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Regular(r) => write!(f, "regular {r}"),
            Claim::EdgeConnectivityExactly(k) => write!(f, "edge-connectivity = {k}"),
            Claim::EdgeConnectivityAtLeast(k) => write!(f, "edge-connectivity >= {k}"),
            Claim::StarFree(m) => write!(f, "star-free {m}"),
            Claim::HasInducedStar(m) => write!(f, "induced star {m}"),
            Claim::Bipartite => write!(f, "bipartite"),
            Claim::Terminals(mode) => write!(f, "terminals {}", mode.label()),
            Claim::TerminalsAtMostTwoTight => write!(f, "terminals nbhd2 tight"),
            Claim::TerminalsIndependent => write!(f, "terminals independent"),
        }
    }
}

/// A disjoint pair expected to have the given deficiency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPair {
    pub s: VertexSet,
    pub t: VertexSet,
    pub expected_delta: i64,
}

#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub family: String,
    pub graph: Graph,
    pub w: VertexSet,
    pub witness: Option<WitnessPair>,
    /// Structured names of vertices, in index order.
    pub names: Vec<(String, Vertex)>,
    pub claims: Vec<Claim>,
}

impl FamilyInstance {
    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.names.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    /// The witness pair evaluated from scratch.
    pub fn certificate(&self) -> Result<Option<TutteCertificate>, FamilyError> {
        let Some(wp) = &self.witness else {
            return Ok(None);
        };
        let f = degree_spec_from_terminals(&self.graph, &self.w)?;
        Ok(Some(TutteCertificate::evaluate(
            &self.graph,
            &f,
            wp.s.clone(),
            wp.t.clone(),
        )?))
    }

    pub fn graph_text(&self) -> String {
        serialize_graph(&self.graph)
    }

    pub fn terminals_text(&self) -> String {
        serialize_vertex_list(&self.w)
    }

    pub fn witness_text(&self) -> Result<Option<String>, FamilyError> {
        Ok(self.certificate()?.map(|c| c.to_string()))
    }

    pub fn names_text(&self) -> String {
        self.names
            .iter()
            .map(|(name, v)| format!("c {name} {v}\n"))
            .collect()
    }
}

/// Checks one claim against the instance.
pub fn check_claim(inst: &FamilyInstance, claim: Claim) -> PropertyReport {
    let g = &inst.graph;
    match claim {
        Claim::Regular(r) => check_regular(g, r),
        Claim::EdgeConnectivityAtLeast(k) => check_edge_connectivity_at_least(g, k),
        Claim::EdgeConnectivityExactly(k) => {
            let lambda = edge_connectivity(g);
            let verdict = if lambda.value == k {
                Verdict::Holds
            } else if lambda.value < k {
                Verdict::Fails(Witness::EdgeSet {
                    edges: lambda.cut,
                    nontrivial_components: None,
                })
            } else {
                Verdict::Undecided(format!("edge connectivity is {}", lambda.value))
            };
            PropertyReport {
                name: format!("edge-connectivity(={k})"),
                verdict,
            }
        }
        Claim::StarFree(m) => check_star_free(g, m),
        Claim::HasInducedStar(m) => PropertyReport {
            name: format!("induced-star({m})"),
            verdict: if find_induced_star(g, m).is_some() {
                Verdict::Holds
            } else {
                Verdict::Undecided(format!("no induced K_1,{m}"))
            },
        },
        Claim::Bipartite => check_bipartite(g),
        Claim::Terminals(mode) => match check_terminal_set(g, &inst.w, mode) {
            Ok(c) => c.report,
            Err(e) => PropertyReport {
                name: format!("terminals({})", mode.label()),
                verdict: Verdict::Undecided(e.to_string()),
            },
        },
        Claim::TerminalsAtMostTwoTight => {
            let mut report = check_terminal_neighborhood(g, &inst.w, 2);
            if report.holds() && max_terminal_neighbors(g, &inst.w).0 != 2 {
                report.verdict = Verdict::Undecided("no vertex has two terminal neighbours".into());
            }
            report
        }
        Claim::TerminalsIndependent => {
            let edge = g
                .edges()
                .iter()
                .find(|&&(u, v)| inst.w.contains(u) && inst.w.contains(v));
            PropertyReport {
                name: "terminals(independent)".into(),
                verdict: match edge {
                    Some(&(u, v)) => Verdict::Fails(Witness::ClosePair { u, v, distance: 1 }),
                    None => Verdict::Holds,
                },
            }
        }
    }
}

/// Every claim and the witness value, re-derived from the graph.
pub fn verify_instance(inst: &FamilyInstance) -> Result<Vec<PropertyReport>, FamilyError> {
    let mut reports: Vec<PropertyReport> = inst.claims.iter().map(|&c| check_claim(inst, c)).collect();
    if let (Some(wp), Some(cert)) = (&inst.witness, inst.certificate()?) {
        reports.push(PropertyReport {
            name: format!("witness-delta({})", wp.expected_delta),
            verdict: if cert.delta == wp.expected_delta {
                Verdict::Holds
            } else {
                Verdict::Undecided(format!("delta evaluates to {}", cert.delta))
            },
        });
    }
    Ok(reports)
}

fn verified(inst: FamilyInstance) -> Result<FamilyInstance, FamilyError> {
    if let Some(r) = verify_instance(&inst)?.into_iter().find(|r| !r.holds()) {
        return Err(FamilyError::Verification {
            family: inst.family.clone(),
            report: r.to_string(),
        });
    }
    Ok(inst)
}

/// Collects named vertices and edges while a construction is assembled.
#[derive(Default)]
struct Builder {
    names: Vec<(String, Vertex)>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn vertex(&mut self, name: String) -> Vertex {
        let v = self.names.len();
        self.names.push((name, v));
        v
    }

    fn block(&mut self, count: usize, name: impl Fn(usize) -> String) -> Vec<Vertex> {
        (0..count).map(|i| self.vertex(name(i))).collect()
    }

    fn edge(&mut self, u: Vertex, v: Vertex) {
        self.edges.push((u, v));
    }

    fn finish(self) -> Result<(Graph, Vec<(String, Vertex)>), FamilyError> {
        let g = Graph::from_edges(self.names.len(), self.edges)?;
        Ok((g, self.names))
    }
}

/// Circular distance between positions `i` and `j` on a cycle of length `n`.
fn circular(i: usize, j: usize, n: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(n - d)
}

/// Names of the generator families, as accepted by [`generate`].
pub const FAMILY_NAMES: [&str; 7] = [
    "prop1-odd",
    "prop1-even",
    "prop1-bipartite",
    "prop2-r4",
    "prop2-general",
    "prop2-r5",
    "random",
];

/// Parameters accepted by [`generate`]; unused ones are ignored.
#[derive(Debug, Clone, Copy, Default)]
pub struct FamilyParams {
    pub r: Option<usize>,
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub seed: Option<u64>,
}

/// Dispatches on a family name.
pub fn generate(family: &str, p: FamilyParams) -> Result<FamilyInstance, FamilyError> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| bad(format!("{family} needs --{flag}")));
    match family {
        "prop1-odd" => gen_prop1_odd(need(p.r, "r")?, need(p.k, "k")?),
        "prop1-even" => gen_prop1_even(need(p.r, "r")?, need(p.k, "k")?),
        "prop1-bipartite" => gen_prop1_bipartite(need(p.r, "r")?, need(p.n, "n")?),
        "prop2-r4" => gen_prop2_r4(need(p.n, "n")?),
        "prop2-general" => gen_prop2_general(need(p.r, "r")?, need(p.m, "m")?),
        "prop2-r5" => gen_prop2_r5(need(p.m, "m")?),
        "random" => {
            let seed = p.seed.ok_or_else(|| bad("random needs --seed"))?;
            random_valid_instance(need(p.r, "r")?, p.n.unwrap_or(24), seed)
        }
        other => Err(bad(format!(
            "unknown family `{other}` (expected one of {})",
            FAMILY_NAMES.join(", ")
        ))),
    }
}
