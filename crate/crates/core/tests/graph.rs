mod common;

use dissrho::graph::{
    build_family, cycle, decode_graph6, encode_graph6, path, predicted_extremal, smith_graph, star,
    to_dot, SmithKind,
};
use dissrho::search::canonical_form;
use dissrho::{FamilySpec, Graph};

fn iso(g: &Graph, h: &Graph) -> bool {
    canonical_form(g).unwrap() == canonical_form(h).unwrap()
}

#[test]
fn graph6_examples() {
    assert_eq!(encode_graph6(&path(3).unwrap()), "Bg");
    let g = decode_graph6("B?").unwrap();
    assert_eq!((g.order(), g.edge_count()), (3, 0));
    assert!(decode_graph6("B").is_err());
    assert!(decode_graph6("B\x01").is_err());
}

#[test]
fn graph6_large_order_round_trip() {
    let g = cycle(70).unwrap();
    let text = encode_graph6(&g);
    assert!(text.starts_with('~'));
    assert_eq!(decode_graph6(&text).unwrap(), g);
}

#[test]
fn small_family_members() {
    let g = build_family(&FamilySpec::g(0, 0, 0, 0, 0, 0))
        .unwrap()
        .graph;
    assert!(iso(&g, &path(7).unwrap()));
    let g = build_family(&FamilySpec::g(1, 0, 0, 6, 5, 6))
        .unwrap()
        .graph;
    assert_eq!(g.order(), 42);
    assert!(g.is_tree());
    let h = build_family(&FamilySpec::h(0, 0, 0, 0, 1, 0))
        .unwrap()
        .graph;
    assert_eq!(h.order(), 7);
    assert!(h.is_tree());
}

#[test]
fn extremal_pattern_examples() {
    assert_eq!(
        predicted_extremal(42).unwrap(),
        FamilySpec::g(1, 0, 0, 6, 5, 6)
    );
    assert_eq!(
        predicted_extremal(41).unwrap(),
        FamilySpec::g(0, 0, 0, 6, 5, 6)
    );
    assert_eq!(
        predicted_extremal(39).unwrap(),
        FamilySpec::g(0, 0, 0, 6, 4, 6)
    );
    assert!(predicted_extremal(11).is_err());
    for n in 12..200 {
        assert_eq!(predicted_extremal(n).unwrap().order(), n);
    }
}

#[test]
fn subdivision_examples() {
    let p3 = path(3).unwrap();
    assert!(iso(&p3.subdivide(1, 2).unwrap(), &path(4).unwrap()));
    assert!(iso(
        &cycle(5).unwrap().subdivide(0, 1).unwrap(),
        &cycle(6).unwrap()
    ));
    assert!(p3.subdivide(0, 2).is_err());
}

#[test]
fn two_path_attachment() {
    let single = Graph::new(1);
    let spider = single.attach_two_paths(0, 2, 1).unwrap();
    assert!(iso(&spider, &path(4).unwrap()));
    let w5 = smith_graph(SmithKind::W(5)).unwrap();
    let g = path(2).unwrap().attach_two_paths(1, 2, 1).unwrap();
    assert!(iso(&g, &w5));
    assert_eq!(single.attach_two_paths(0, 0, 0).unwrap(), single);
}

#[test]
fn internal_paths() {
    let spec = FamilySpec::g(1, 0, 0, 1, 1, 1);
    let fg = build_family(&spec).unwrap();
    let g = &fg.graph;
    let p10 = path(10).unwrap();
    assert!(!p10.is_internal_path(&[2, 3, 4]));
    // Some spine segment between two branch vertices is internal.
    assert!(!g.internal_path_edges().is_empty());
    let mut two = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
    assert!(two.is_internal_path(&[0, 1]));
    two.delete_edge(1, 5).unwrap();
    assert!(!two.is_internal_path(&[0, 1]));
}

#[test]
fn basic_queries() {
    assert!(path(5).unwrap().is_connected());
    assert_eq!(star(6).unwrap().degree(0), 6);
    let c5 = cycle(5).unwrap();
    assert!(iso(
        &c5.induced_subgraph(&[0, 1, 2, 3]).unwrap(),
        &path(4).unwrap()
    ));
    assert!(path(0).is_err());
    assert!(to_dot(&c5).contains("--"));
}

#[test]
fn smith_orders() {
    for (kind, n) in [
        (SmithKind::E6, 6),
        (SmithKind::E7, 7),
        (SmithKind::E8, 8),
        (SmithKind::E6Tilde, 7),
        (SmithKind::E7Tilde, 8),
        (SmithKind::E8Tilde, 9),
    ] {
        let g = smith_graph(kind).unwrap();
        assert_eq!(g.order(), n);
        assert!(g.is_tree());
        let rho = common::dense_rho(&g);
        if kind.has_radius_two() {
            assert!((rho - 2.0).abs() < 1e-9);
        } else {
            assert!(rho < 2.0 - 1e-6);
        }
    }
}
