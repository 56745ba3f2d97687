//! Exact replay of the discharging argument behind the existence theorem for
//! `K_{1,r}`-free, `r`-edge-connected, `r`-regular graphs with terminals
//! spaced so that no vertex sees two of them.
//!
//! Charges live on `S ∪ T` and on the f-odd components of `G - (S ∪ T)`.
//! The verifier applies the rules edge by edge with exact rationals and
//! reports every bound together with the hypotheses it depends on, so a
//! failing bound on an input that violates a hypothesis is distinguishable
//! from a genuine contradiction.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::factor::{degree_spec_from_terminals, DegreeSpec, FactorError};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::tutte::{delta, odd_components, TutteError};
use crate::verify::{
    check_regular, check_terminal_neighborhood, edge_connectivity, find_induced_star,
};

pub type Charge = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("discharging needs r >= 4, got {0}")]
    DegreeTooSmall(usize),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Tutte(#[from] TutteError),
}

/// Amounts moved by each rule for a given `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleConstants {
    /// Rule (i): from an `S_1` vertex to a `T` vertex or an f-odd component.
    pub from_s1: Charge,
    /// Rule (ii-1): from an `S_2` vertex to a `T` vertex.
    pub s2_to_t: Charge,
    /// Rule (ii-2): from an `S_2` vertex to an f-odd component.
    pub s2_to_component: Charge,
    /// Rule (iii): from an f-odd component to a `T` vertex.
    pub component_to_t: Charge,
}

impl RuleConstants {
    pub fn new(r: usize) -> Result<Self, DischargeError> {
        if r < 4 {
            return Err(DischargeError::DegreeTooSmall(r));
        }
        let r = r as i64;
        Ok(RuleConstants {
            from_s1: Charge::new(1, r),
            s2_to_t: Charge::new(2 * r - 1, r * (r - 1)),
            s2_to_component: Charge::new(1, r),
            component_to_t: Charge::new(r - 1, r),
        })
    }

    /// `1/r <= (2r-1)/(r(r-1)) <= (r-1)/r`.
    pub fn ordered(&self) -> bool {
        self.from_s1 <= self.s2_to_t && self.s2_to_t <= self.component_to_t
    }
}

/// Smallest final charge a `T` vertex with one neighbour outside `S ∪ U` can
/// end with: `(3r^2 - 5r + 1) / (r(r-1))`.
pub fn claim4_worst_case(r: usize) -> Result<Charge, DischargeError> {
    let c = RuleConstants::new(r)?;
    let worst = Charge::from_integer(1) + c.s2_to_t * (r as i64 - 2) + c.from_s1;
    let r = r as i64;
    debug_assert_eq!(worst, Charge::new(3 * r * r - 5 * r + 1, r * (r - 1)));
    Ok(worst)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hypothesis {
    Regular,
    StarFree,
    EdgeConnected,
    TerminalsSpread,
    TIndependent,
}

impl Hypothesis {
    pub fn label(self) -> &'static str {
        match self {
            Hypothesis::Regular => "regular",
            Hypothesis::StarFree => "star-free",
            Hypothesis::EdgeConnected => "edge-connected",
            Hypothesis::TerminalsSpread => "nbhd1",
            Hypothesis::TIndependent => "t-independent",
        }
    }
}

/// Something that carries charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Holder {
    Vertex(Vertex),
    /// Index into [`ChargeState::components`].
    Component(usize),
}

impl fmt::Display for Holder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Holder::Vertex(v) => write!(f, "vertex {v}"),
            Holder::Component(i) => write!(f, "component {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimCheck {
    pub name: &'static str,
    /// First element whose final charge is below its bound, with that charge
    /// and the bound.
    pub violation: Option<(Holder, Charge, Charge)>,
    /// Hypotheses the bound relies on that this input does not satisfy.
    pub missing: Vec<Hypothesis>,
}

impl ClaimCheck {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }

    pub fn guaranteed(&self) -> bool {
        self.missing.is_empty()
    }

    /// A violated bound on an input meeting all its hypotheses.
    pub fn contradicts(&self) -> bool {
        !self.holds() && self.guaranteed()
    }
}

impl fmt::Display for ClaimCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "{}: PASS", self.name)?,
            Some((h, got, bound)) => write!(f, "{}: FAIL {h} charge {got} < {bound}", self.name)?,
        }
        if self.missing.is_empty() {
            write!(f, " (guaranteed)")
        } else {
            let labels: Vec<_> = self.missing.iter().map(|h| h.label()).collect();
            write!(f, " (not guaranteed: {})", labels.join(", "))
        }
    }
}

/// Partition data and charges before and after discharging.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeState {
    pub s1: VertexSet,
    pub s2: VertexSet,
    pub t: VertexSet,
    pub u: VertexSet,
    pub components: Vec<VertexSet>,
    pub initial: BTreeMap<Vertex, Charge>,
    pub initial_components: Vec<Charge>,
    pub final_charges: BTreeMap<Vertex, Charge>,
    pub final_components: Vec<Charge>,
}

impl ChargeState {
    pub fn initial_total(&self) -> Charge {
        self.initial.values().chain(&self.initial_components).sum()
    }

    pub fn final_total(&self) -> Charge {
        self.final_charges.values().chain(&self.final_components).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DischargeReport {
    pub state: ChargeState,
    pub conserved: bool,
    /// `sum of initial charges on S ∪ T` and `f(S) + deg_{G-S}(T) - e(T,U)`.
    pub identity: (Charge, Charge),
    pub claims: [ClaimCheck; 3],
    /// `delta` rebuilt from the final charges.
    pub implied_delta: Charge,
    pub delta: i64,
    /// `2|T| - f(T)`, the lower bound on `delta` once all three claims hold.
    pub lower_bound: i64,
    pub hypotheses_missing: Vec<Hypothesis>,
}

impl DischargeReport {
    pub fn identity_holds(&self) -> bool {
        self.identity.0 == self.identity.1
    }

    pub fn delta_matches(&self) -> bool {
        self.implied_delta == Charge::from_integer(self.delta)
    }

    /// All three claims hold on this input, so `delta >= 2|T| - f(T) >= 0`.
    pub fn nonnegative_by_claims(&self) -> bool {
        self.claims.iter().all(ClaimCheck::holds)
    }

    /// Every check that must hold regardless of hypotheses, plus every claim
    /// whose hypotheses are met.
    pub fn consistent(&self) -> bool {
        self.conserved
            && self.identity_holds()
            && self.delta_matches()
            && !self.claims.iter().any(ClaimCheck::contradicts)
            && (!self.nonnegative_by_claims() || self.delta >= self.lower_bound)
    }

    /// Every check passes, claims included.
    pub fn all_pass(&self) -> bool {
        self.consistent() && self.nonnegative_by_claims()
    }
}

impl fmt::Display for DischargeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pass = |b: bool| if b { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "conservation: {} total {} -> {}",
            pass(self.conserved),
            self.state.initial_total(),
            self.state.final_total()
        )?;
        writeln!(
            f,
            "identity: {} {} = {}",
            pass(self.identity_holds()),
            self.identity.0,
            self.identity.1
        )?;
        for c in &self.claims {
            writeln!(f, "{c}")?;
        }
        writeln!(
            f,
            "delta: {} {} implied {}",
            pass(self.delta_matches()),
            self.delta,
            self.implied_delta
        )?;
        if self.nonnegative_by_claims() {
            writeln!(
                f,
                "conclusion: {} delta >= {}",
                pass(self.delta >= self.lower_bound),
                self.lower_bound
            )
        } else {
            writeln!(f, "conclusion: none, a claim bound fails")
        }
    }
}

/// Graph-level hypotheses evaluated once, then reused across many `(S, T)`.
pub struct Discharger<'g> {
    g: &'g Graph,
    w: VertexSet,
    f: DegreeSpec,
    r: usize,
    rules: RuleConstants,
    graph_missing: Vec<Hypothesis>,
}

impl<'g> Discharger<'g> {
    pub fn new(g: &'g Graph, w: &VertexSet, r: usize) -> Result<Self, DischargeError> {
        let rules = RuleConstants::new(r)?;
        let f = degree_spec_from_terminals(g, w)?;
        let mut graph_missing = Vec::new();
        if !check_regular(g, r).holds() {
            graph_missing.push(Hypothesis::Regular);
        }
        if find_induced_star(g, r).is_some() {
            graph_missing.push(Hypothesis::StarFree);
        }
        if edge_connectivity(g).value < r {
            graph_missing.push(Hypothesis::EdgeConnected);
        }
        if !check_terminal_neighborhood(g, w, 1).holds() {
            graph_missing.push(Hypothesis::TerminalsSpread);
        }
        Ok(Discharger {
            g,
            w: w.clone(),
            f,
            r,
            rules,
            graph_missing,
        })
    }

    pub fn degree_spec(&self) -> &DegreeSpec {
        &self.f
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Graph-level hypotheses that fail.
    pub fn graph_missing(&self) -> &[Hypothesis] {
        &self.graph_missing
    }

    pub fn discharge(&self, s: &VertexSet, t: &VertexSet) -> Result<DischargeReport, DischargeError> {
        let g = self.g;
        let n = g.vertex_count();
        let (q, components) = odd_components(g, &self.f, s, t)?;
        let delta = delta(g, &self.f, s, t)?;

        let in_s = s.mask(n);
        let in_t = t.mask(n);
        let mut comp_of = vec![None; n];
        for (i, d) in components.iter().enumerate() {
            for v in d.iter() {
                comp_of[v] = Some(i);
            }
        }
        let in_u = |v: Vertex| comp_of[v].is_some();

        let mut initial = BTreeMap::new();
        for x in s.iter() {
            initial.insert(x, Charge::from_integer(self.f.get(x) as i64));
        }
        let mut e_t_u = 0i64;
        let mut deg_t_outside_s = 0i64;
        for y in t.iter() {
            let mut outside = 0;
            for &v in g.neighbors(y) {
                if !in_s[v] {
                    deg_t_outside_s += 1;
                    if in_u(v) {
                        e_t_u += 1;
                    } else {
                        outside += 1;
                    }
                }
            }
            initial.insert(y, Charge::from_integer(outside));
        }
        let initial_components = vec![Charge::from_integer(0); components.len()];

        let mut fin = initial.clone();
        let mut fin_comp = initial_components.clone();
        let c = self.rules;
        for &(a, b) in g.edges() {
            for (x, y) in [(a, b), (b, a)] {
                if in_s[x] {
                    let one = self.f.get(x) == 1;
                    if in_t[y] {
                        let amount = if one { c.from_s1 } else { c.s2_to_t };
                        *fin.get_mut(&x).expect("S holder") -= amount;
                        *fin.get_mut(&y).expect("T holder") += amount;
                    } else if let Some(d) = comp_of[y] {
                        let amount = if one { c.from_s1 } else { c.s2_to_component };
                        *fin.get_mut(&x).expect("S holder") -= amount;
                        fin_comp[d] += amount;
                    }
                } else if let (Some(d), true) = (comp_of[x], in_t[y]) {
                    fin_comp[d] -= c.component_to_t;
                    *fin.get_mut(&y).expect("T holder") += c.component_to_t;
                }
            }
        }

        let f_s = self.f.sum_over(s) as i64;
        let f_t = self.f.sum_over(t) as i64;
        let initial_vertex_sum: Charge = initial.values().sum();
        let identity = (
            initial_vertex_sum,
            Charge::from_integer(f_s + deg_t_outside_s - e_t_u),
        );
        let final_vertex_sum: Charge = fin.values().sum();
        let final_comp_sum: Charge = fin_comp.iter().sum();
        let implied_delta =
            final_vertex_sum + final_comp_sum + Charge::from_integer(e_t_u - f_t - q as i64);

        let t_independent = t
            .iter()
            .all(|y| g.neighbors(y).iter().all(|&v| !in_t[v]));
        let missing_for = |needs: &[Hypothesis]| -> Vec<Hypothesis> {
            needs
                .iter()
                .copied()
                .filter(|h| match h {
                    Hypothesis::TIndependent => !t_independent,
                    other => self.graph_missing.contains(other),
                })
                .collect()
        };

        let zero = Charge::from_integer(0);
        let two = Charge::from_integer(2);
        let claim3 = ClaimCheck {
            name: "claim-s-nonnegative",
            violation: s
                .iter()
                .find(|x| fin[x] < zero)
                .map(|x| (Holder::Vertex(x), fin[&x], zero)),
            missing: missing_for(&[
                Hypothesis::Regular,
                Hypothesis::StarFree,
                Hypothesis::TIndependent,
            ]),
        };
        let claim4 = ClaimCheck {
            name: "claim-t-at-least-two",
            violation: t
                .iter()
                .find(|y| fin[y] < two)
                .map(|y| (Holder::Vertex(y), fin[&y], two)),
            missing: missing_for(&[
                Hypothesis::Regular,
                Hypothesis::TerminalsSpread,
                Hypothesis::TIndependent,
            ]),
        };
        let claim5 = ClaimCheck {
            name: "claim-component",
            violation: components.iter().enumerate().find_map(|(i, d)| {
                let into_t = d
                    .iter()
                    .map(|v| g.neighbors(v).iter().filter(|&&u| in_t[u]).count())
                    .sum::<usize>() as i64;
                let bound = Charge::from_integer(1 - into_t);
                (fin_comp[i] < bound).then_some((Holder::Component(i), fin_comp[i], bound))
            }),
            missing: missing_for(&[Hypothesis::EdgeConnected]),
        };

        let mut hypotheses_missing = self.graph_missing.clone();
        if !t_independent {
            hypotheses_missing.push(Hypothesis::TIndependent);
        }

        let state = ChargeState {
            s1: s.iter().filter(|&x| self.w.contains(x)).collect(),
            s2: s.iter().filter(|&x| !self.w.contains(x)).collect(),
            t: t.clone(),
            u: components.iter().flat_map(|d| d.iter()).collect(),
            components,
            initial,
            initial_components,
            final_charges: fin,
            final_components: fin_comp,
        };
        let conserved = state.initial_total() == state.final_total();
        Ok(DischargeReport {
            state,
            conserved,
            identity,
            claims: [claim3, claim4, claim5],
            implied_delta,
            delta,
            lower_bound: 2 * t.len() as i64 - f_t,
            hypotheses_missing,
        })
    }
}

/// One-shot convenience wrapper around [`Discharger`].
pub fn discharge(
    g: &Graph,
    w: &VertexSet,
    s: &VertexSet,
    t: &VertexSet,
    r: usize,
) -> Result<DischargeReport, DischargeError> {
    Discharger::new(g, w, r)?.discharge(s, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{circulant, complete, cycle};
    use proptest::prelude::*;

    #[test]
    fn constants_at_four() {
        let c = RuleConstants::new(4).unwrap();
        assert_eq!(c.from_s1, Charge::new(1, 4));
        assert_eq!(c.s2_to_t, Charge::new(7, 12));
        assert_eq!(c.component_to_t, Charge::new(3, 4));
        assert!(c.ordered());
        assert_eq!(claim4_worst_case(4).unwrap(), Charge::new(29, 12));
        assert_eq!(RuleConstants::new(3), Err(DischargeError::DegreeTooSmall(3)));
    }

    #[test]
    fn hand_example_on_circulant() {
        // C_12(1,2): 4-regular, 4-edge-connected, K_{1,4}-free
        let g = circulant(12, &[1, 2]);
        let w = VertexSet::from([0, 6]);
        let d = Discharger::new(&g, &w, 4).unwrap();
        assert!(d.graph_missing().is_empty());
        let rep = d.discharge(&[0].into(), &[6].into()).unwrap();
        assert!(rep.all_pass(), "{rep}");
        assert_eq!(rep.state.s1, VertexSet::from([0]));
        assert_eq!(rep.state.initial[&0], Charge::from_integer(1));
        assert_eq!(
            rep.delta,
            delta(&g, d.degree_spec(), &[0].into(), &[6].into()).unwrap()
        );
    }

    #[test]
    fn hypotheses_are_reported() {
        let g = cycle(6);
        let d = Discharger::new(&g, &VertexSet::empty(), 4).unwrap();
        assert!(d.graph_missing().contains(&Hypothesis::Regular));
        assert!(d.graph_missing().contains(&Hypothesis::EdgeConnected));
        let rep = d.discharge(&[0].into(), &[1, 2].into()).unwrap();
        assert!(rep.hypotheses_missing.contains(&Hypothesis::TIndependent));
        assert!(rep.conserved && rep.identity_holds() && rep.delta_matches());
        assert!(rep.consistent());
    }

    #[test]
    fn empty_pair() {
        let g = complete(5);
        let rep = discharge(&g, &VertexSet::empty(), &VertexSet::empty(), &VertexSet::empty(), 4)
            .unwrap();
        assert_eq!(rep.delta, 0);
        assert!(rep.all_pass());
    }

    proptest! {
        #[test]
        fn unconditional_checks(n in 5usize..12, bits in proptest::collection::vec(0u8..3, 12), seed in any::<u64>()) {
            // arbitrary graph: circulant plus a few chords picked from the seed
            let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            for i in 0..n {
                let j = (i + 2 + (seed >> (i % 60)) as usize % (n - 3)) % n;
                if j != i && !edges.contains(&(i, j)) && !edges.contains(&(j, i)) {
                    edges.push((i, j));
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let s: VertexSet = (0..n).filter(|&v| bits[v] == 1).collect();
            let t: VertexSet = (0..n).filter(|&v| bits[v] == 2).collect();
            let w = VertexSet::from([0, 1]);
            let rep = discharge(&g, &w, &s, &t, 4).unwrap();
            prop_assert!(rep.conserved);
            prop_assert!(rep.identity_holds());
            prop_assert!(rep.delta_matches());
        }
    }

    #[test]
    fn constants_ordered_for_many_r() {
        for r in 4..=64 {
            let c = RuleConstants::new(r).unwrap();
            assert!(c.ordered());
            assert!(claim4_worst_case(r).unwrap() >= Charge::from_integer(2));
        }
    }
}
