use dst_core::graph::{complete, cycle, structure, Graph};
use dst_core::oracle::{enumerate_spanning_trees, exists_family, FamilyOptions, SearchBudget};
use dst_core::reduction::*;
use dst_core::trees::{verify_ij_disjoint, TreeFamily};
use dst_core::Error;

/// Double stars with inner sets {0,1} and {2,3}, extended over K_n.
fn k_cists(n: usize) -> (Graph, TreeFamily) {
    let g = complete(n).unwrap();
    let mut t1 = vec![(0, 1), (0, 2), (1, 3)];
    let mut t2 = vec![(2, 3), (1, 2), (0, 3)];
    for x in 4..n {
        t1.push((0, x));
        t2.push((2, x));
    }
    let f = TreeFamily::from_edge_lists(&g, vec![t1, t2]).unwrap();
    assert!(verify_ij_disjoint(&f, 0, 0).is_ok());
    (g, f)
}

#[test]
fn gadget_sizes() {
    let h = build_gadget(GadgetKind::H);
    assert_eq!((h.graph.n(), h.graph.m()), (7, 10));
    let hp = build_gadget(GadgetKind::Hprime);
    assert_eq!((hp.graph.n(), hp.graph.m()), (8, 11));
    let cap = build_gadget(GadgetKind::Hplus);
    assert_eq!((cap.graph.n(), cap.graph.m()), (3, 2));
    for gi in [&h, &hp, &cap] {
        assert_ne!(gi.port1, gi.port2);
        assert_eq!(gi.graph.degree(gi.port1), 1);
        assert_eq!(gi.graph.degree(gi.port2), 1);
    }
}

#[test]
fn chain_sizes() {
    for i in 1..=4 {
        for j in 1..=4 {
            let c = build_chain(i, j).unwrap();
            assert_eq!(c.graph.n(), 5 * i + 6 * j + 3);
            assert!(c.graph.is_connected());
            assert_eq!((c.h_blocks, c.hprime_blocks, c.capped), (i, j, true));
        }
    }
    assert_eq!(build_chain(1, 1).unwrap().graph.n(), 14);
    assert_eq!(build_chain(2, 1).unwrap().graph.n(), 19);
    assert_eq!(build_chain(1, 2).unwrap().graph.n(), 20);
    assert!(matches!(build_chain(0, 1), Err(Error::Domain(_))));
    assert!(matches!(build_chain(1, 0), Err(Error::Domain(_))));
}

#[test]
fn reduce_sizes_and_articulations() {
    let g = complete(4).unwrap();
    let red = reduce(&g, 0, 2, 1, 1).unwrap();
    assert_eq!(red.graph.n(), 16);
    assert_eq!(reduce(&g, 0, 2, 2, 3).unwrap().graph.n(), 33);
    for i in 1..=3 {
        let red = reduce(&g, 0, 2, i, 2).unwrap();
        let s = structure(&red.graph);
        let inside: Vec<usize> = (4..red.graph.n()).collect();
        let arts = s
            .articulation_vertices
            .iter()
            .filter(|v| inside.contains(v))
            .count();
        assert_eq!(arts, i, "i={i}");
    }
    assert!(matches!(reduce(&g, 1, 1, 1, 1), Err(Error::Domain(_))));
    let map = red.port_map();
    assert_eq!(map.vertices["H1.p1"], 0);
    assert_eq!(map.vertices["H1.p2"], 2);
}

#[test]
fn lifted_trees_hit_overlaps_exactly() {
    for n in [4, 5] {
        let (g, f) = k_cists(n);
        for i in 1..=3 {
            for j in 1..=3 {
                let red = reduce(&g, 0, 2, i, j).unwrap();
                let lifted = lift_trees(&g, &f, &red).unwrap();
                assert!(verify_ij_disjoint(&lifted, i, j).is_ok());
                assert_eq!(lifted.overlap_inner().len(), i);
                assert_eq!(lifted.overlap_edges().len(), j);
            }
        }
    }
}

#[test]
fn lift_rejects_bad_inputs() {
    let (g, f) = k_cists(4);
    let red = reduce(&g, 0, 2, 1, 1).unwrap();
    let t = f.trees()[0].clone();
    let dup = TreeFamily::new(vec![t.clone(), t]).unwrap();
    assert!(matches!(
        lift_trees(&g, &dup, &red),
        Err(Error::InvalidCertificate(_))
    ));
    let swapped = reduce(&g, 2, 0, 1, 1).unwrap();
    assert!(matches!(
        lift_trees(&g, &f, &swapped),
        Err(Error::InvalidCertificate(_))
    ));
}

/// Brute-force: two CISTs of g with u inner in the first and v in the second.
fn has_port_cists(g: &Graph, u: usize, v: usize) -> bool {
    let (trees, _) = enumerate_spanning_trees(g, &SearchBudget::default()).unwrap();
    trees.iter().any(|a| {
        a.is_inner(u)
            && trees.iter().any(|b| {
                b.is_inner(v)
                    && a.inner().iter().all(|x| !b.is_inner(*x))
                    && a.edges().iter().all(|&(x, y)| !b.contains_edge(x, y))
            })
    })
}

#[test]
fn oracle_agrees_on_small_hosts() {
    let cases = [
        (complete(4).unwrap(), 0, 2, true),
        (cycle(4).unwrap(), 0, 2, false),
    ];
    for (g, u, v, expect) in cases {
        assert_eq!(has_port_cists(&g, u, v), expect);
        let red = reduce(&g, u, v, 1, 1).unwrap();
        let (res, _) = exists_family(
            &red.graph,
            2,
            1,
            1,
            FamilyOptions::default(),
            &SearchBudget::default(),
        )
        .unwrap();
        assert_eq!(res.is_witness(), expect, "{:?}", g.edges());
    }
}
