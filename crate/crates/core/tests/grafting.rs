mod common;

use common::*;
use facet_ideals::{
    cm_reisner, graft, is_grafted, is_tree, leaves, minimal_vertex_covers,
    verify_polarization_roundtrip,
};

/// A leafless, mixed complex on x, y, u, z grafted with three new leaves
/// over the classes {x,y}, {u}, {z}.
#[test]
fn grafting_a_leafless_mixed_complex() {
    let base = complex(&["xyu", "xyz", "xuz"]);
    assert!(leaves(&base).unwrap().is_empty());
    assert!(!is_tree(&base).unwrap().verdict);
    assert!(!minimal_vertex_covers(&base).unwrap().unmixed);

    let partition = vec![vec!["x", "y"], vec!["u"], vec!["z"]];
    let g = graft(&base, Some(&partition)).unwrap();
    let d = &g.complex;
    assert_eq!(g.decomposition.r(), 3);
    let covers = minimal_vertex_covers(d).unwrap();
    assert!(covers.unmixed);
    assert_eq!(covers.alpha, 3);
    assert!(!is_tree(d).unwrap().verdict);
    assert!(is_grafted(d).unwrap().is_some());
    assert!(cm_reisner(d, 0).unwrap().cm);
    assert!(cm_reisner(d, 2).unwrap().cm);
    assert!(verify_polarization_roundtrip(d).unwrap());
}

#[test]
fn whiskering_any_complex_gives_cm() {
    for base in randoms(40, 900) {
        let g = graft::<&str>(&base, None).unwrap();
        let c = minimal_vertex_covers(&g.complex).unwrap();
        assert!(c.unmixed && c.alpha == base.vertex_set().len(), "{base}");
        if g.complex.universe().len() <= 16 {
            assert!(cm_reisner(&g.complex, 0).unwrap().cm, "{base}");
        }
    }
}
