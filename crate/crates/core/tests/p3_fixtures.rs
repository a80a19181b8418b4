mod common;

use hookquiver::classification::{iso, iso_coloured, p3_fixtures};
use hookquiver::pairs::PairData;
use hookquiver::quiver::induct_step;
use hookquiver::weight2::BlockLabel;
use hookquiver::Partition;

fn core(v: &[usize]) -> Partition {
    common::part(v)
}

#[test]
fn five_cores() {
    let f = p3_fixtures();
    let cores: Vec<Partition> = f.keys().cloned().collect();
    let mut want = vec![core(&[]), core(&[1]), core(&[2]), core(&[1, 1]), core(&[3, 1, 1])];
    want.sort();
    assert_eq!(cores, want);
}

#[test]
fn rows_and_colours_agree_with_diagram_oracle() {
    for (c, f) in p3_fixtures() {
        for (v, info) in f.quiver.vertices.iter().enumerate() {
            let (d, colour) = common::delta_colour(info.partition.parts(), 3);
            assert_eq!(f.graph.rows().unwrap()[v], d, "{c}: vertex {}", f.names[v]);
            assert_eq!(f.colours[v], colour, "{c}: vertex {}", f.names[v]);
        }
    }
}

#[test]
fn star_for_core_311() {
    let f = &p3_fixtures()[&core(&[3, 1, 1])];
    assert_eq!(f.graph.degrees(), [1, 1, 1, 1, 4]);
    assert_eq!(f.graph.edge_count(), 4);
}

// ∅ and (1) are both K_{2,3} once rows are forgotten; keeping rows separates
// them. Every other pair of non-conjugate cores is non-isomorphic outright.
#[test]
fn isomorphism_pattern() {
    let f = p3_fixtures();
    let g = |v: &[usize]| &f[&core(v)].graph;
    assert!(iso(g(&[2]), g(&[1, 1])).is_some());
    assert!(iso(g(&[]), g(&[1])).is_some());
    let rows = |v: &[usize]| g(v).rows().unwrap().to_vec();
    assert!(iso_coloured(g(&[]), g(&[1]), &rows(&[]), &rows(&[1])).is_none());
    let classes: [&[usize]; 3] = [&[], &[2], &[3, 1, 1]];
    for (a, x) in classes.iter().enumerate() {
        for y in &classes[a + 1..] {
            assert!(iso(g(x), g(y)).is_none(), "{x:?} vs {y:?}");
        }
    }
    assert!(iso(g(&[1]), g(&[2])).is_none());
}

// One induction step from the drawn quiver of ∅ or (1) reproduces the drawn
// quivers of (1), (2) and (1²) with their labels.
#[test]
fn induction_reproduces_drawings() {
    let f = p3_fixtures();
    let label = |v: &[usize]| BlockLabel::new(3, core(v), 2).unwrap();
    for (upper, lower, case) in [(&[1][..], &[][..], 3), (&[2], &[1], 1), (&[1, 1], &[1], 5)] {
        let pd = PairData::new(&label(upper), &label(lower)).unwrap();
        assert_eq!(pd.case_no, case, "{upper:?}");
        let (q, _) = induct_step(&f[&core(lower)].quiver, &pd, true).unwrap();
        assert_eq!(q, f[&core(upper)].quiver, "{upper:?} over {lower:?}");
    }
}
