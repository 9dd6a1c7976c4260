mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rainbow_core::checker::{self, Checker, RainbowQuery};
use rainbow_core::exec::Execution;
use rainbow_core::graph::to_graph6;
use rainbow_core::oracle::random_two_connected;
use rainbow_core::painter::construct;
use rainbow_core::structure::{BridgeInfo, PathSeq, WeakBridge};
use rainbow_core::{ColourId, Colouring, Graph};

fn graph_and_colouring(max_n: usize, max_colours: u32) -> impl Strategy<Value = (Graph, Vec<u32>)> {
    (2..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        (prop::collection::vec(any::<bool>(), pairs), prop::collection::vec(0..max_colours, pairs)).prop_map(
            move |(mask, colours)| {
                let all = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                let kept: Vec<((usize, usize), u32)> =
                    all.zip(mask).zip(colours).filter(|((_, keep), _)| *keep).map(|((e, _), c)| (e, c)).collect();
                let g = Graph::new(n, kept.iter().map(|&(e, _)| e)).unwrap();
                (g, kept.iter().map(|&(_, c)| c).collect())
            },
        )
    })
}

fn connected_with_all_vertices_covered(g: &Graph) -> bool {
    rainbow_core::graph::is_connected(g) && (0..g.n()).all(|v| g.degree(v) > 0)
}

#[test]
fn seed_patterns_block_exactly_the_antipode() {
    for k in 2..=5 {
        let n = 2 * k;
        let colours: Vec<u32> = (0..n as u32).map(|i| i % k as u32).collect();
        let g = Graph::cycle(n);
        let r = checker::safety_report(&g, &Colouring::from_total(colours.iter().copied())).unwrap();
        assert!(r.safe && r.unreachable.is_empty());
        let naive = common::naive_blocked(&g, &colours);
        for x in 0..n {
            let expected: BTreeSet<usize> = naive[x].iter().copied().collect();
            assert_eq!(r.blocked[&x], expected);
            assert_eq!(expected, BTreeSet::from([(x + k) % n]));
        }
    }
}

#[test]
fn query_semantics_against_path_enumeration() {
    let g = Graph::complete(5);
    let colours: Vec<u32> = vec![0, 1, 2, 0, 1, 2, 0, 1, 2, 3];
    let c = Colouring::from_total(colours.iter().copied());
    let forbid = [ColourId(1)];
    let within: BTreeSet<usize> = [0, 1, 4, 5, 7, 9].into();
    for s in 0..5 {
        for t in 0..5 {
            if s == t {
                continue;
            }
            let paths = common::all_simple_paths(&g, s, t);
            let rainbow = |p: &Vec<usize>| {
                let set: BTreeSet<u32> = p.iter().map(|&e| colours[e]).collect();
                set.len() == p.len()
            };
            let uses = |p: &Vec<usize>, col: u32| p.iter().any(|&e| colours[e] == col);
            let cases: [(RainbowQuery, Box<dyn Fn(&Vec<usize>) -> bool>); 3] = [
                (RainbowQuery::new(s, t).forbid(forbid), Box::new(|p| !uses(p, 1))),
                (RainbowQuery::new(s, t).within(within.iter().copied()), Box::new(|p| p.iter().all(|e| within.contains(e)))),
                (
                    RainbowQuery::new(s, t).missing_one_of([ColourId(0), ColourId(3)]),
                    Box::new(|p| !uses(p, 0) || !uses(p, 3)),
                ),
            ];
            for (q, allowed) in cases {
                let found = checker::find_rainbow_path(&g, &c, &q).unwrap();
                let exists = paths.iter().any(|p| rainbow(p) && allowed(p));
                assert_eq!(found.is_some(), exists, "{s}->{t} {q:?}");
                if let Some(p) = found {
                    let edges = p.edge_indices().to_vec();
                    assert!(rainbow(&edges) && allowed(&edges));
                    assert_eq!((p.start(), p.end()), (s, t));
                }
            }
        }
    }
}

#[test]
fn partial_colouring_governs_its_subgraph() {
    // Only the 4-cycle 0-1-2-3 of K4 is coloured; the chords are absent.
    let g = Graph::complete(4);
    let mut c = Colouring::empty(g.m());
    for (u, v, col) in [(0, 1, 0), (1, 2, 1), (2, 3, 0), (0, 3, 1)] {
        c.set(g.edge_between(u, v).unwrap(), ColourId(col));
    }
    let r = checker::safety_report(&g, &c).unwrap();
    assert!(r.safe);
    assert_eq!(r.blocked[&0], BTreeSet::from([2]));
    // Vertex 4 of a larger host is not governed and is not reported.
    let host = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
    let mut c = Colouring::empty(host.m());
    for e in 0..4 {
        c.set(e, ColourId(e as u32 % 2));
    }
    assert!(checker::is_rainbow_connected(&host, &c).unwrap());
    assert!(!checker::safety_report(&host, &c).unwrap().blocked.contains_key(&4));
}

/// The bridge restricted to the first `upto` paths of its sequence.
fn prefix_bridge(info: &BridgeInfo, upto: usize, in_core: impl Fn(usize) -> bool) -> BridgeInfo {
    let paths = info.path_seq.paths[..upto].to_vec();
    let mut vertices: Vec<usize> = paths.iter().flat_map(|p| p.vertices().to_vec()).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let mut edges: Vec<usize> = paths.iter().flat_map(|p| p.edge_indices().to_vec()).collect();
    edges.sort_unstable();
    let attachments = vertices.iter().copied().filter(|&v| in_core(v)).collect();
    BridgeInfo { bridge: WeakBridge { vertices, edges, attachments }, path_seq: PathSeq { paths }, u: info.u, v: info.v }
}

#[test]
fn grounded_along_every_sequence_prefix() {
    let checker = Checker::default();
    let mut prefixes = 0;
    for g in common::random_instances(200) {
        let con = construct(&g).unwrap();
        let Some(hs) = &con.hstar else { continue };
        for b in &con.bridges {
            for upto in 1..=b.info.path_seq.paths.len() {
                let sub = prefix_bridge(&b.info, upto, |v| hs.contains_vertex(v));
                let mut c = con.cstar.clone();
                for &e in &sub.bridge.edges {
                    c.set(e, b.colouring.get(e).unwrap());
                }
                *c.roles_mut() = *b.colouring.roles();
                assert!(checker.check_grounded(&g, &c, hs, &con.cstar, &sub).unwrap(), "{} prefix {upto}", to_graph6(&g));
                prefixes += 1;
            }
        }
    }
    assert!(prefixes > 100, "{prefixes}");
}

#[test]
fn grounded_fails_when_alpha_and_beta_merge() {
    let checker = Checker::default();
    let mut tested = 0;
    for g in common::random_instances(60) {
        let con = construct(&g).unwrap();
        let Some(hs) = &con.hstar else { continue };
        for b in &con.bridges {
            assert!(checker.check_grounded(&g, &b.colouring, hs, &con.cstar, &b.info).unwrap());
            if b.info.base().len() != 2 {
                continue;
            }
            // A bare base of length 2: its middle vertex escapes through
            // the alpha edge or the beta edge only.
            let alpha = b.colouring.roles().alpha.unwrap();
            let mut merged = b.colouring.clone();
            merged.set(b.e_beta, alpha);
            merged.roles_mut().beta = Some(alpha);
            assert!(!checker.check_grounded(&g, &merged, hs, &con.cstar, &b.info).unwrap(), "{}", to_graph6(&g));
            tested += 1;
        }
    }
    assert!(tested > 0);
}

#[test]
fn grounded_requires_agreement_with_the_core() {
    let g = Graph::new(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7), (7, 8), (8, 3)]).unwrap();
    let con = construct(&g).unwrap();
    let hs = con.hstar.as_ref().unwrap();
    let b = &con.bridges[0];
    let checker = Checker::default();
    assert!(checker.check_grounded(&g, &b.colouring, hs, &con.cstar, &b.info).unwrap());
    let mut off = b.colouring.clone();
    let core_edge = hs.edge_list()[0];
    let other = con.cstar.palette().into_iter().find(|&c| Some(c) != con.cstar.get(core_edge)).unwrap();
    off.set(core_edge, other);
    assert!(!checker.check_grounded(&g, &off, hs, &con.cstar, &b.info).unwrap());
    let mut missing = b.colouring.clone();
    missing.clear(b.info.bridge.edges[0]);
    assert!(!checker.check_grounded(&g, &missing, hs, &con.cstar, &b.info).unwrap());
}

#[test]
fn certificate_witnesses_are_rainbow_paths() {
    for g in common::random_instances(30) {
        let c = rainbow_core::rainbow_colouring(&g).unwrap();
        let r = Checker::default().verify_certificate(&g, &c, true).unwrap();
        assert!(r.rc_ok && r.bound_ok && r.failures.is_empty());
        let witnesses = r.witnesses.unwrap();
        assert_eq!(witnesses.len(), g.n() * (g.n() - 1) / 2);
        for w in witnesses {
            assert_eq!((w.path[0], *w.path.last().unwrap()), (w.x, w.y));
            let cols: Vec<ColourId> =
                w.path.windows(2).map(|p| c.get(g.edge_between(p[0], p[1]).unwrap()).unwrap()).collect();
            assert_eq!(cols.iter().collect::<BTreeSet<_>>().len(), cols.len());
        }
    }
}

#[test]
fn budget_overflow_is_reported() {
    let g = random_two_connected(14, 6, 3);
    let c = rainbow_core::rainbow_colouring(&g).unwrap();
    let tight = Checker::with_budget(2);
    assert!(tight.is_rainbow_connected(&g, &c).is_err());
    assert!(tight.safety_report(&g, &c).is_err());
    assert!(tight.verify_certificate(&g, &c, false).is_err());
    assert!(Checker::default().is_rainbow_connected(&g, &c).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rainbow_connectivity_matches_enumeration((g, colours) in graph_and_colouring(6, 4)) {
        let c = Colouring::from_total(colours.iter().copied());
        let fast = checker::is_rainbow_connected(&g, &c).unwrap();
        // The checker governs only covered vertices; isolated ones are not its concern.
        if (0..g.n()).all(|v| g.degree(v) > 0) {
            prop_assert_eq!(fast, common::naive_rainbow_connected(&g, &colours));
        }
    }

    #[test]
    fn safety_matches_enumeration((g, colours) in graph_and_colouring(6, 4)) {
        prop_assume!(connected_with_all_vertices_covered(&g));
        let c = Colouring::from_total(colours.iter().copied());
        let report = checker::safety_report(&g, &c).unwrap();
        let naive = common::naive_blocked(&g, &colours);
        for x in 0..g.n() {
            let expected: BTreeSet<usize> = naive[x].iter().copied().collect();
            prop_assert_eq!(&report.blocked[&x], &expected);
        }
        let naive_safe = common::naive_rainbow_connected(&g, &colours) && naive.iter().all(|b| b.len() <= 1);
        prop_assert_eq!(checker::Checker::default().is_safely_rainbow_connecting(&g, &c).unwrap(), naive_safe);
    }

    #[test]
    fn executions_agree((g, colours) in graph_and_colouring(7, 4)) {
        let c = Colouring::from_total(colours.iter().copied());
        let seq = Checker::default().execution(Execution::Sequential);
        let par = Checker::default().execution(Execution::Parallel);
        prop_assert_eq!(seq.safety_report(&g, &c).unwrap(), par.safety_report(&g, &c).unwrap());
        prop_assert_eq!(seq.verify_certificate(&g, &c, true).unwrap(), par.verify_certificate(&g, &c, true).unwrap());
    }
}
