use pathcycle::factor::{degree_spec_from_terminals, solve};
use pathcycle::families::{
    gen_prop1_bipartite, gen_prop1_even, gen_prop1_odd, gen_prop2_general, gen_prop2_r4,
    gen_prop2_r5, random_valid_instance, verify_instance, FamilyInstance,
};
use pathcycle::graph::{
    components_after_removal, distance, edge_count_between, parse_graph,
};
use pathcycle::tutte::{delta, odd_components, TutteCertificate};
use pathcycle::verify::{edge_connectivity, find_induced_star, max_terminal_neighbors};
use pathcycle::VertexSet;

fn round_trips(inst: &FamilyInstance) {
    assert_eq!(parse_graph(&inst.graph_text()).unwrap(), inst.graph);
}

fn empty_pair_is_zero(inst: &FamilyInstance) {
    let f = degree_spec_from_terminals(&inst.graph, &inst.w).unwrap();
    let e = VertexSet::empty();
    assert_eq!(delta(&inst.graph, &f, &e, &e).unwrap(), 0);
}

#[test]
fn prop1_odd_structure() {
    let inst = gen_prop1_odd(5, 6).unwrap();
    round_trips(&inst);
    empty_pair_is_zero(&inst);
    let hubs: VertexSet = (1..=10).map(|i| inst.vertex(&format!("x_{i}")).unwrap()).collect();
    let parts = components_after_removal(&inst.graph, &hubs).unwrap();
    assert_eq!(parts.len(), 12);
    for i in 1..=10 {
        let copy: VertexSet = (0..10)
            .map(|j| inst.vertex(&format!("H_{i}:v_{j}")).unwrap())
            .collect();
        assert_eq!(edge_count_between(&inst.graph, &copy, &hubs).unwrap(), 4);
    }
    let w = inst.w.members();
    for (i, &a) in w.iter().enumerate() {
        for &b in &w[i + 1..] {
            assert!(distance(&inst.graph, a, b).unwrap().finite().unwrap() >= 3);
        }
    }
    let f = degree_spec_from_terminals(&inst.graph, &inst.w).unwrap();
    let (q, _) = odd_components(&inst.graph, &f, &hubs, &VertexSet::empty()).unwrap();
    assert_eq!(q, 12);
    assert_eq!(edge_connectivity(&inst.graph).value, 4);
    assert!(!solve(&inst.graph, &inst.w).unwrap().is_feasible());
}

#[test]
fn prop1_even_infeasible() {
    let inst = gen_prop1_even(10, 12).unwrap();
    empty_pair_is_zero(&inst);
    let cert = inst.certificate().unwrap().unwrap();
    assert_eq!((cert.delta, cert.q), (-2, 10));
    assert!(!solve(&inst.graph, &inst.w).unwrap().is_feasible());
    let small = gen_prop1_even(8, 8).unwrap();
    assert_eq!(small.certificate().unwrap().unwrap().delta, -2);
}

#[test]
fn prop1_bipartite_has_balanced_sides() {
    let inst = gen_prop1_bipartite(4, 12).unwrap();
    assert!(find_induced_star(&inst.graph, 4).is_some());
    assert!(!solve(&inst.graph, &inst.w).unwrap().is_feasible());
    let f = degree_spec_from_terminals(&inst.graph, &inst.w).unwrap();
    let left: VertexSet = (0..12).collect();
    let right: VertexSet = (12..24).collect();
    let cert = TutteCertificate::evaluate(&inst.graph, &f, left, right).unwrap();
    assert_eq!(cert.delta, -2);
}

#[test]
fn prop2_r4_numbers() {
    let inst = gen_prop2_r4(6).unwrap();
    round_trips(&inst);
    let cert = inst.certificate().unwrap().unwrap();
    assert_eq!(cert.delta, -2);
    assert_eq!(cert.s.len(), 30);
    assert_eq!(cert.t.len(), 30);
    assert_eq!(max_terminal_neighbors(&inst.graph, &inst.w).0, 2);
    assert!(!solve(&inst.graph, &inst.w).unwrap().is_feasible());
}

#[test]
fn prop2_general_at_smallest_parameters() {
    let inst = gen_prop2_general(6, 50).unwrap();
    assert_eq!(inst.graph.vertex_count(), 560);
    assert_eq!(inst.certificate().unwrap().unwrap().delta, -2);
    assert!(verify_instance(&inst).unwrap().iter().all(|r| r.holds()));
}

#[test]
fn prop2_r5_components() {
    let inst = gen_prop2_r5(96).unwrap();
    assert_eq!(inst.certificate().unwrap().unwrap().delta, -2);
    // B_1 and B_4 come from eight different claws
    let firsts: Vec<_> = (1..=8)
        .map(|j| inst.vertex(&format!("y_{j},1")).unwrap())
        .collect();
    let centres: Vec<_> = (1..=8)
        .map(|j| inst.vertex(&format!("x2_{j}")).unwrap())
        .collect();
    for (j, &y) in firsts.iter().enumerate() {
        for (k, &c) in centres.iter().enumerate() {
            assert_eq!(inst.graph.has_edge(y, c), j == k);
        }
    }
}

#[test]
fn random_instances_are_feasible() {
    for r in [4, 5, 6] {
        for seed in 0..20 {
            let inst = random_valid_instance(r, 16 + (seed as usize % 12), seed).unwrap();
            let out = solve(&inst.graph, &inst.w).unwrap();
            let sys = out.system().expect("feasible");
            sys.validate(&inst.graph, &inst.w).unwrap();
        }
    }
}
