//! Ext-quivers of the five Scopes classes of weight-2 blocks for p = 3.
//!
//! The drawings carry no partition labels, only rows (∂-values), a colour on
//! row 0, and the convention that each row lists partitions lex-decreasing
//! from left to right. Labels are recovered from that convention.

use std::collections::BTreeMap;

use serde::Serialize;

use super::PlainGraph;
use crate::partitions::Partition;
use crate::quiver::Quiver;
use crate::weight2::{BlockData, BlockLabel, Colour};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct P3Fixture {
    pub core: Partition,
    /// Vertex names used in the drawing, in vertex order.
    pub names: Vec<&'static str>,
    pub graph: PlainGraph,
    pub colours: Vec<Option<Colour>>,
    /// The drawing with vertex k labelled by the k-th p-regular partition of
    /// the block in (∂ ascending, lex descending) order.
    pub quiver: Quiver,
}

const B: Option<Colour> = Some(Colour::Black);
const W: Option<Colour> = Some(Colour::White);

fn fixture(
    core: &[usize],
    verts: &[(&'static str, usize, Option<Colour>)],
    edges: &[(&str, &str)],
) -> P3Fixture {
    let id = |name: &str| verts.iter().position(|v| v.0 == name).expect("named vertex");
    let graph = PlainGraph::with_rows(
        verts.len(),
        edges.iter().map(|&(a, b)| (id(a), id(b))),
        verts.iter().map(|v| v.1).collect(),
    );
    let core = Partition::new(core.to_vec()).expect("valid core");
    let block = BlockData::new(&BlockLabel::new(3, core.clone(), 2).expect("3-core")).expect("block data");
    let mut labels: Vec<(usize, &Partition)> =
        block.regular().map(|l| (block.data[l].delta, l)).collect();
    labels.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(a.1)));
    let quiver = Quiver::build(
        &block,
        labels.iter().map(|l| l.1.clone()),
        graph.edges().iter().map(|&(u, v)| (labels[u].1.clone(), labels[v].1.clone())),
    )
    .expect("drawing agrees with the block");
    P3Fixture {
        core,
        quiver,
        names: verts.iter().map(|v| v.0).collect(),
        graph,
        colours: verts.iter().map(|v| v.2).collect(),
    }
}

/// Cores ∅, (1), (2), (1²), (3,1²) with their quivers.
///
/// In the drawing for (1) one edge is written from a vertex name that is not
/// defined in that picture; it renders with zero length and is omitted here.
pub fn p3_fixtures() -> BTreeMap<Partition, P3Fixture> {
    let list = [
        fixture(
            &[],
            &[("M", 0, B), ("R", 0, W), ("B+", 1, None), ("B", 1, None), ("A", 2, None)],
            &[("M", "B"), ("M", "B+"), ("B+", "R"), ("B+", "A"), ("A", "B"), ("R", "B")],
        ),
        fixture(
            &[1],
            &[("M", 0, B), ("R", 0, W), ("A+", 1, None), ("A", 1, None), ("G", 1, None)],
            &[("M", "G"), ("M", "A+"), ("M", "A"), ("A+", "R"), ("R", "G"), ("R", "A")],
        ),
        fixture(
            &[2],
            &[("M", 0, B), ("A", 0, W), ("G", 0, W), ("B", 1, None), ("X", 1, None)],
            &[("M", "B"), ("A", "B"), ("B", "G"), ("G", "X"), ("M", "X")],
        ),
        fixture(
            &[1, 1],
            &[("A+", 0, B), ("R", 0, W), ("A", 0, B), ("Y", 1, None), ("B+", 1, None)],
            &[("A+", "Y"), ("Y", "R"), ("A+", "B+"), ("R", "B+"), ("B+", "A")],
        ),
        fixture(
            &[3, 1, 1],
            &[("A", 0, B), ("B", 0, W), ("C", 0, W), ("D", 0, B), ("E", 1, None)],
            &[("A", "E"), ("B", "E"), ("E", "C"), ("E", "D")],
        ),
    ];
    list.into_iter().map(|f| (f.core.clone(), f)).collect()
}
