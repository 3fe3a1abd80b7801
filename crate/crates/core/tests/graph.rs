use std::collections::BTreeSet;

use dst_core::graph::*;
use dst_core::Error;
use proptest::prelude::*;

fn check_invariants(g: &Graph) {
    let mut degree_sum = 0;
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        assert!(!nb.contains(&v), "loop at {v}");
        let unique: BTreeSet<_> = nb.iter().collect();
        assert_eq!(unique.len(), nb.len(), "parallel edge at {v}");
        for &w in nb {
            assert!(g.neighbors(w).contains(&v), "asymmetric {v}-{w}");
        }
        degree_sum += nb.len();
    }
    assert_eq!(degree_sum, 2 * g.m());
}

/// Connected by brute-force vertex removal: no set smaller than k disconnects.
fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    (0u32..1 << n)
        .filter(|s| (s.count_ones() as usize) < k)
        .all(|s| {
            let rest: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 0).collect();
            rest.len() < 2 || g.induces_connected(&rest)
        })
}

fn is_bipartite(g: &Graph) -> bool {
    let d = g.bfs_distances(0);
    g.edges()
        .iter()
        .all(|&(u, v)| d[u].unwrap() % 2 != d[v].unwrap() % 2)
}

#[test]
fn generator_examples() {
    let k6 = complete(6).unwrap();
    assert_eq!((k6.n(), k6.m()), (6, 15));
    let c = cylinder(5, 6).unwrap();
    assert_eq!((c.n(), c.m()), (30, 55));
    let gc = glued_cliques(9).unwrap();
    assert_eq!((gc.n(), gc.min_degree()), (9, 4));
    for g in [&k6, &c, &gc] {
        check_invariants(g);
    }
}

#[test]
fn generator_domain_errors() {
    assert!(matches!(grid(2, 5), Err(Error::Domain(_))));
    assert!(matches!(cylinder(3, 2), Err(Error::Domain(_))));
    assert!(matches!(cycle(2), Err(Error::Domain(_))));
    assert!(matches!(complete(0), Err(Error::Domain(_))));
    assert!(matches!(kriesell(3, 2), Err(Error::Domain(_))));
    assert!(matches!(pn_star(2), Err(Error::Domain(_))));
}

#[test]
fn cylinder_edge_count() {
    for n1 in 3..=10 {
        for n2 in 3..=10 {
            let g = cylinder(n1, n2).unwrap();
            assert_eq!(g.m(), 2 * n1 * n2 - n1);
            check_invariants(&g);
        }
    }
}

#[test]
fn grid_labels_are_row_major() {
    let g = grid(3, 4).unwrap();
    assert!(g.has_edge(0, 1) && g.has_edge(0, 4) && !g.has_edge(3, 4));
    assert_eq!(g.m(), 3 * 3 + 2 * 4);
}

#[test]
fn cartesian_examples() {
    let h = cartesian_product(&cycle(3).unwrap(), &path(4).unwrap()).unwrap();
    assert_eq!((h.n(), h.m()), (12, 21));
    let sq = cartesian_product(&path(2).unwrap(), &path(2).unwrap()).unwrap();
    assert!(is_isomorphic(&sq, &cycle(4).unwrap()));
    let prod = cartesian_product(&cycle(5).unwrap(), &path(6).unwrap()).unwrap();
    assert_eq!(prod, cylinder(5, 6).unwrap());
    let relabel: Vec<usize> = (0..30).rev().collect();
    let shuffled = Graph::from_edges(
        30,
        prod.edges()
            .iter()
            .map(|&(u, v)| (relabel[u], relabel[v]))
            .collect::<Vec<_>>(),
    )
    .unwrap();
    assert!(find_isomorphism(&shuffled, &cylinder(5, 6).unwrap()).is_some());
}

#[test]
fn square_examples() {
    let s = square(&path(4).unwrap()).unwrap();
    assert_eq!(s.m(), 5);
    assert!(s.has_edge(0, 2) && s.has_edge(1, 3));
    assert_eq!(square(&complete(5).unwrap()).unwrap(), complete(5).unwrap());
    assert_eq!(square(&star(5).unwrap()).unwrap(), complete(6).unwrap());
    let two = Graph::from_edges(4, vec![(0, 1), (2, 3)]).unwrap();
    assert!(matches!(square(&two), Err(Error::Domain(_))));
}

#[test]
fn square_adds_exactly_distance_two_pairs() {
    for n in 2..=6 {
        for g in connected_graphs(n).unwrap() {
            let s = square(&g).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    let d = g.distance(u, v).unwrap();
                    assert_eq!(s.has_edge(u, v), d <= 2);
                }
            }
        }
    }
}

#[test]
fn kriesell_examples() {
    let k23 = kriesell(2, 3).unwrap();
    assert_eq!((k23.n(), k23.m()), (6, 6));
    assert!(is_isomorphic(&k23, &cycle(6).unwrap()));
    let k13 = kriesell(1, 3).unwrap();
    assert_eq!((k13.n(), k13.m()), (6, 3));
    assert!((0..6).all(|v| k13.degree(v) == 1));
    let k24 = kriesell(2, 4).unwrap();
    assert_eq!((k24.n(), k24.m()), (10, 12));
    // set-vertices follow in lexicographic order of their subsets
    assert_eq!(k24.neighbors(4), &[0, 1]);
    assert_eq!(k24.neighbors(9), &[2, 3]);
}

#[test]
fn kriesell_is_bipartite_and_k_connected() {
    for k in 2..=3 {
        for l in k..=5 {
            let g = kriesell(k, l).unwrap();
            assert!(is_bipartite(&g), "k={k} l={l}");
            if l > k {
                assert!(is_k_connected(&g, k), "k={k} l={l}");
            }
        }
    }
}

#[test]
fn blowup_examples() {
    let b = clique_blowup(&path(3).unwrap(), &[1], 2).unwrap();
    assert_eq!((b.graph.n(), b.graph.m()), (4, 5));
    assert_eq!(b.origin, vec![0, 1, 2, 1]);
    let g = cycle(5).unwrap();
    assert_eq!(clique_blowup(&g, &[], 3).unwrap().graph, g);
    assert_eq!(clique_blowup(&g, &[0, 2], 1).unwrap().graph, g);
    let k4 = clique_blowup(&path(2).unwrap(), &[0, 1], 2).unwrap();
    assert_eq!(k4.graph, complete(4).unwrap());
    assert!(matches!(clique_blowup(&g, &[7], 2), Err(Error::Domain(_))));
}

#[test]
fn structure_examples() {
    let s = structure(&path(3).unwrap());
    assert_eq!(
        (s.articulation_vertices.len(), s.bridges.len(), s.a, s.b),
        (1, 2, 0, 2)
    );
    let s = structure(&cycle(5).unwrap());
    assert!(s.articulation_vertices.is_empty() && s.bridges.is_empty());
    assert_eq!(s.diameter, Some(2));
    let g = glued_cliques(9).unwrap();
    let s = structure(&g);
    assert_eq!((s.articulation_vertices.clone(), s.b, s.a), (vec![0], 0, 1));
    // brute-force cut vertices agree
    let cuts: Vec<usize> = (0..9)
        .filter(|&v| !g.induces_connected(&(0..9).filter(|&w| w != v).collect::<Vec<_>>()))
        .collect();
    assert_eq!(cuts, vec![0]);
}

#[test]
fn hub_graphs() {
    let p = pn_star(6).unwrap();
    assert_eq!((p.graph.n(), p.graph.m(), p.u), (7, 11, 6));
    let q = pn_plus(6).unwrap();
    assert_eq!((q.graph.n(), q.graph.m(), q.v), (8, 14, Some(7)));
    let f = pn_star(3).unwrap();
    assert_eq!((f.graph.n(), f.graph.m()), (4, 5));
}

#[test]
fn edge_list_parsing() {
    let g = parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
    assert_eq!(g, path(3).unwrap());
    for bad in [
        "3 2\n0 1\n0 1\n",
        "3 1\n0 3\n",
        "3 1\n1 0\n",
        "3 2\n0 1\n",
        "x\n",
        "",
        "3 1\n0 1 2\n",
    ] {
        assert!(
            matches!(parse_edge_list(bad), Err(Error::Parse { .. })),
            "{bad:?}"
        );
    }
    match parse_edge_list("4 2\n0 1\n0 9\n") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
        other => panic!("{other:?}"),
    }
}

#[test]
fn dot_is_deterministic_and_styled() {
    let g = cycle(4).unwrap();
    let plain = to_dot(&g, None);
    assert_eq!(plain, to_dot(&g, None));
    assert!(plain.contains("0 -- 1;"));
    let trees = vec![vec![(0, 1), (1, 2), (2, 3)], vec![(0, 1), (0, 3), (2, 3)]];
    let styled = to_dot(&g, Some(&trees));
    assert!(styled.contains("0 -- 1 [style=solid, color=black, label=\"T1\"]"));
    assert!(styled.contains("0 -- 1 [style=dashed, color=blue, label=\"T2\"]"));
    assert!(styled.contains("0 -- 3 [style=dashed"));
}

#[test]
fn catalog_counts() {
    let expected = [1, 1, 2, 6, 21, 112, 853];
    for (n, &count) in (1..=7).zip(&expected) {
        let graphs = connected_graphs(n).unwrap();
        assert_eq!(graphs.len(), count, "n={n}");
        assert!(graphs.iter().all(Graph::is_connected));
    }
}

#[test]
fn clique_path_validation() {
    let (g, cp) = interval_graph(&[(0, 2), (1, 3), (2, 5), (4, 6)]).unwrap();
    assert_eq!(cp.bags(), &[vec![0, 1, 2], vec![2, 3]]);
    assert_eq!(cp.junction(0), vec![2]);
    assert!(CliquePath::new(&g, vec![vec![0, 1, 2, 3]]).is_err());
    assert!(CliquePath::new(&g, vec![vec![0, 1, 2]]).is_err());
    let p = path(3).unwrap();
    assert!(CliquePath::new(&p, vec![vec![0, 1], vec![2], vec![1, 2]]).is_err());
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..11).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges: Vec<_> = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&e, _)| e)
                .collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in arb_graph()) {
        let text = to_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(back.fingerprint(), g.fingerprint());
        prop_assert_eq!(back, g);
    }

    #[test]
    fn graph_invariants(g in arb_graph()) {
        check_invariants(&g);
        let s = structure(&g);
        prop_assert_eq!(s.components.len(), g.components().len());
        // a vertex is a cut vertex iff removing it adds components
        for v in 0..g.n() {
            let rest: Vec<usize> = (0..g.n()).filter(|&w| w != v).collect();
            let (sub, _) = g.induced(&rest);
            let before = g.components().len();
            let after = sub.components().len();
            prop_assert_eq!(s.articulation_vertices.contains(&v), after > before);
        }
        for &(u, v) in g.edges() {
            let lost = g.without_edge(u, v).components().len() > g.components().len();
            prop_assert_eq!(s.bridges.contains(&(u, v)), lost);
        }
    }

    #[test]
    fn canonical_code_is_label_free(g in arb_graph(), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let h = Graph::from_edges(n, g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        let map = find_isomorphism(&g, &h).unwrap();
        for &(u, v) in g.edges() {
            prop_assert!(h.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn square_contains_host(g in arb_graph().prop_filter("connected", Graph::is_connected)) {
        let s = square(&g).unwrap();
        for &(u, v) in g.edges() {
            prop_assert!(s.has_edge(u, v));
        }
        for &(u, v) in s.edges() {
            prop_assert!(g.distance(u, v).unwrap() <= 2);
        }
    }
}
