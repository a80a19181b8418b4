//! Valency-based isomorphism invariants: exceptional pairs and the boundary.

use serde::Serialize;

use super::PlainGraph;

/// Shape of one connected component of the boundary.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentShape {
    /// A path on the given number of vertices.
    Line(usize),
    /// A tree with a single branch vertex of valency 3; arm sizes (vertices,
    /// centre excluded) in increasing order.
    Branch { arms: [usize; 3] },
    Other { vertices: usize, edges: usize, degrees: Vec<usize> },
}

impl ComponentShape {
    /// `Some(m)` if the component is the Dynkin diagram D_m (m ≥ 4).
    pub fn dynkin_d(&self) -> Option<usize> {
        match self {
            ComponentShape::Branch { arms: [1, 1, m] } => Some(m + 3),
            _ => None,
        }
    }

    fn of(g: &PlainGraph) -> Self {
        let n = g.vertex_count();
        let degrees = g.degrees();
        let is_tree = g.edge_count() + 1 == n;
        if is_tree && degrees.iter().all(|&d| d <= 2) {
            return ComponentShape::Line(n);
        }
        let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 3).collect();
        if is_tree && branch.len() == 1 && degrees.iter().all(|&d| d <= 3) {
            let c = branch[0];
            let dist = g.distances(c);
            // Arm sizes: the deepest vertex along each neighbour's path.
            let mut arms: Vec<usize> = g
                .neighbours(c)
                .iter()
                .map(|&w| {
                    let mut len = 0;
                    let (mut prev, mut cur) = (c, w);
                    loop {
                        len += 1;
                        let next = g.neighbours(cur).iter().copied().find(|&x| x != prev && dist[x] > dist[cur]);
                        match next {
                            Some(x) => (prev, cur) = (cur, x),
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            return ComponentShape::Branch { arms: [arms[0], arms[1], arms[2]] };
        }
        ComponentShape::Other { vertices: n, edges: g.edge_count(), degrees }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryProfile {
    /// Vertex pairs `(v, w)`, `v < w`, both of valency ≤ 2 and at distance 2.
    pub exceptional_pairs: Vec<(usize, usize)>,
    /// Shapes of the components of the subgraph induced on valency ≤ 3, sorted.
    pub components: Vec<ComponentShape>,
    /// Number of vertices of each valency, index = valency.
    pub valencies: Vec<usize>,
}

impl BoundaryProfile {
    /// The part of the profile preserved by isomorphisms (pair vertex ids dropped).
    pub fn invariant(&self) -> (usize, Vec<ComponentShape>, Vec<usize>) {
        (self.exceptional_pairs.len(), self.components.clone(), self.valencies.clone())
    }

    /// Number of vertices lying in two or more exceptional pairs.
    pub fn shared_pair_vertices(&self) -> usize {
        let mut count = std::collections::BTreeMap::new();
        for &(a, b) in &self.exceptional_pairs {
            *count.entry(a).or_insert(0) += 1;
            *count.entry(b).or_insert(0) += 1;
        }
        count.values().filter(|&&c| c >= 2).count()
    }
}

pub fn boundary_profile(g: &PlainGraph) -> BoundaryProfile {
    let n = g.vertex_count();
    let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) <= 2).collect();
    let mut exceptional_pairs = Vec::new();
    for (a, &v) in low.iter().enumerate() {
        let dist = g.distances(v);
        for &w in &low[a + 1..] {
            if dist[w] == 2 {
                exceptional_pairs.push((v, w));
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| g.degree(v) <= 3).collect();
    let boundary = g.induced(&keep);
    let mut components: Vec<ComponentShape> =
        boundary.components().iter().map(|c| ComponentShape::of(&boundary.induced(c))).collect();
    components.sort();
    let max = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let mut valencies = vec![0; max + 1];
    for v in 0..n {
        valencies[g.degree(v)] += 1;
    }
    BoundaryProfile { exceptional_pairs, components, valencies }
}
