//! Reference graphs, isomorphism testing, boundary invariants and censuses.

mod boundary;
mod census;
mod fixtures;
mod iso;
mod refquiver;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use boundary::{boundary_profile, BoundaryProfile, ComponentShape};
pub use census::{morita_census, MoritaClass};
pub use fixtures::{p3_fixtures, P3Fixture};
pub use iso::{iso, iso_coloured, iso_plain_backtrack, verify_bijection};
pub use refquiver::{gen_ref_quiver, reference_params, RefQuiverParams};

/// A simple undirected graph on vertices `0..n`, optionally with a row index
/// per vertex (the ∂-row in drawings).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct PlainGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    rows: Option<Vec<usize>>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertices: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rows: Option<Vec<usize>>,
}

impl TryFrom<RawGraph> for PlainGraph {
    type Error = Error;

    fn try_from(r: RawGraph) -> Result<Self> {
        let g = PlainGraph::try_new(r.vertices, r.edges.iter().map(|e| (e[0], e[1])))?;
        match r.rows {
            Some(rows) if rows.len() != g.n => Err(Error::InvalidParams("row list has wrong length".into())),
            rows => Ok(PlainGraph { rows, ..g }),
        }
    }
}

impl From<PlainGraph> for RawGraph {
    fn from(g: PlainGraph) -> Self {
        RawGraph { vertices: g.n, edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(), rows: g.rows }
    }
}

impl PlainGraph {
    pub fn try_new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidParams(format!("bad edge ({u},{v}) for {n} vertices")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(PlainGraph { n, edges: set, rows: None, adj })
    }

    /// Panics on invalid edges; for internally generated graphs.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::try_new(n, edges).expect("valid graph")
    }

    pub fn with_rows(n: usize, edges: impl IntoIterator<Item = (usize, usize)>, rows: Vec<usize>) -> Self {
        assert_eq!(rows.len(), n);
        PlainGraph { rows: Some(rows), ..Self::new(n, edges) }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn rows(&self) -> Option<&[usize]> {
        self.rows.as_deref()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Sorted degree sequence.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Breadth-first distances from `s` (`usize::MAX` if unreachable).
    pub fn distances(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::from([s]);
        dist[s] = 0;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Induced subgraph on `keep`, renumbered in the given order.
    pub fn induced(&self, keep: &[usize]) -> PlainGraph {
        let pos: std::collections::BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|(u, v)| Some((*pos.get(u)?, *pos.get(v)?)));
        PlainGraph::new(keep.len(), edges)
    }

    /// Vertex sets of the connected components, each sorted; ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let d = self.distances(s);
            let comp: Vec<usize> = (0..self.n).filter(|&v| d[v] != usize::MAX).collect();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph g {\n");
        if let Some(rows) = &self.rows {
            let max = rows.iter().copied().max().unwrap_or(0);
            for r in 0..=max {
                let ids: Vec<String> = (0..self.n).filter(|&v| rows[v] == r).map(|v| format!("v{v}")).collect();
                if !ids.is_empty() {
                    s.push_str(&format!("  {{ rank=same; {}; }}\n", ids.join("; ")));
                }
            }
        }
        for v in 0..self.n {
            s.push_str(&format!("  v{v};\n"));
        }
        for &(u, v) in &self.edges {
            s.push_str(&format!("  v{u} -- v{v};\n"));
        }
        s.push_str("}\n");
        s
    }
}
