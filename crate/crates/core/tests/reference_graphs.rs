use std::collections::BTreeSet;

use hookquiver::classification::{
    boundary_profile, gen_ref_quiver, iso, reference_params, ComponentShape, PlainGraph, RefQuiverParams,
};
use serde::Deserialize;

#[derive(Deserialize)]
struct Transcribed {
    i: usize,
    j: usize,
    graph: PlainGraph,
}

fn q(n: usize, i: usize, j: usize) -> PlainGraph {
    gen_ref_quiver(RefQuiverParams::new(n, i, j).unwrap()).unwrap()
}

#[test]
fn generator_matches_hand_transcriptions_for_n5() {
    let data: Vec<Transcribed> = serde_json::from_str(include_str!("data/refquiver_n5.json")).unwrap();
    assert_eq!(data.len(), 7);
    for t in data {
        let g = q(5, t.i, t.j);
        assert_eq!(g.rows(), t.graph.rows(), "rows of Q_{},{}", t.i, t.j);
        let missing: BTreeSet<_> = t.graph.edges().difference(g.edges()).collect();
        let extra: BTreeSet<_> = g.edges().difference(t.graph.edges()).collect();
        assert!(missing.is_empty() && extra.is_empty(), "Q_{},{}: missing {missing:?}, extra {extra:?}", t.i, t.j);
    }
}

#[test]
fn vertex_counts_and_mirrors() {
    for n in 5..=8 {
        for params in reference_params(n).unwrap() {
            let g = gen_ref_quiver(params).unwrap();
            assert_eq!(g.vertex_count(), (n + 2) * (n - 1) / 2, "{params:?}");
            if let Some(m) = params.mirror() {
                assert!(iso(&g, &gen_ref_quiver(m).unwrap()).is_some(), "{params:?} vs {m:?}");
            }
        }
    }
}

#[test]
fn seed_graph_has_no_exceptional_pair() {
    for n in 5..=9 {
        assert!(boundary_profile(&q(n, 0, 0)).exceptional_pairs.is_empty());
    }
}

// Q_{1,0}: three exceptional pairs forming a triangle of shared vertices, and
// two D_n components in the boundary.
#[test]
fn boundary_of_q10() {
    for n in 5..=9 {
        let b = boundary_profile(&q(n, 1, 0));
        assert_eq!(b.exceptional_pairs.len(), 3, "n={n}");
        assert_eq!(b.shared_pair_vertices(), 3, "n={n}");
        let d: Vec<usize> = b.components.iter().filter_map(ComponentShape::dynkin_d).collect();
        assert_eq!(d, [n, n], "n={n}");
    }
}

// Q_{n-1,0}: two disjoint exceptional pairs; one D_n component and one path
// on n-3 vertices.
#[test]
fn boundary_of_q_top_left() {
    for n in 5..=9 {
        let b = boundary_profile(&q(n, n - 1, 0));
        assert_eq!(b.exceptional_pairs.len(), 2, "n={n}");
        assert_eq!(b.shared_pair_vertices(), 0, "n={n}");
        let d: Vec<usize> = b.components.iter().filter_map(ComponentShape::dynkin_d).collect();
        assert_eq!(d, [n], "n={n}");
        assert!(b.components.contains(&ComponentShape::Line(n - 3)), "n={n}: {:?}", b.components);
    }
}

#[test]
fn boundary_profiles_n5_frozen() {
    use ComponentShape::{Branch, Line};
    let b = boundary_profile(&q(5, 4, 0));
    assert_eq!(b.exceptional_pairs, [(0, 1), (12, 13)]);
    assert_eq!(b.components, [Line(1), Line(1), Line(1), Line(2), Branch { arms: [1, 1, 2] }]);
    assert_eq!(b.valencies, [0, 1, 4, 5, 2, 2]);
    let b = boundary_profile(&q(5, 2, 1));
    assert_eq!(b.exceptional_pairs.len(), 7);
    assert_eq!(b.components, vec![Branch { arms: [1, 1, 1] }; 3]);
    assert_eq!(b.valencies, [0, 0, 6, 6, 0, 0, 2]);
}

#[test]
fn bad_parameters_rejected() {
    assert!(RefQuiverParams::new(4, 0, 0).is_err());
    assert!(RefQuiverParams::new(5, 5, 0).is_err());
    assert!(RefQuiverParams::new(5, 1, 4).is_err());
    assert!(RefQuiverParams::new(5, 0, 1).is_err());
}
