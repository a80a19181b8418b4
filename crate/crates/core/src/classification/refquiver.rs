//! The generator family Q_{i,j}(n).
//!
//! Q_{0,0}(n) is a triangle: row 0 and row 1 have n−1 vertices, row r ≥ 1 has
//! n−r. Writing (r, c) for the c-th vertex of row r from the left, the edges
//! are (r,c)–(r+1,c) and (r,c)–(r+1,c−1) for r ≥ 1, and between rows 0 and 1
//! (0,c)–(1,c), (0,c)–(1,c+1), (1,c)–(0,c+1).
//!
//! Every other Q_{i,j}(n) deletes the bottom of the left diagonal (r, 0) and
//! of the right diagonal (r, n−1−r), and hangs a chain of new vertices below
//! the second diagonal on each side. The two chains meet in a common vertex
//! in row n−2. For i = n−1 (resp. j = n−2) a further pendant vertex is added
//! to row 0 on the left (resp. right).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::PlainGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RefQuiverParams {
    pub n: usize,
    pub i: usize,
    pub j: usize,
}

impl RefQuiverParams {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        let ok = n >= 5 && ((i, j) == (0, 0) || ((1..n).contains(&i) && j <= n - 2));
        if !ok {
            return Err(Error::InvalidParams(format!("no quiver Q_{{{i},{j}}}({n})")));
        }
        Ok(RefQuiverParams { n, i, j })
    }

    /// The partner (j+1, i−1) with an isomorphic graph, if it is admissible.
    pub fn mirror(&self) -> Option<Self> {
        if self.i == 0 {
            return Some(*self);
        }
        RefQuiverParams::new(self.n, self.j + 1, self.i - 1).ok()
    }
}

/// All admissible parameters for `n`: (0,0) first, then (i, j) in lex order.
pub fn reference_params(n: usize) -> Result<Vec<RefQuiverParams>> {
    RefQuiverParams::new(n, 0, 0)?;
    let mut out = vec![RefQuiverParams { n, i: 0, j: 0 }];
    for i in 1..n {
        for j in 0..=n - 2 {
            out.push(RefQuiverParams { n, i, j });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Node {
    Grid(usize, usize),
    Left(usize),
    Right(usize),
    /// Row-n−2 vertex shared by both chains.
    Meet,
    TopLeft,
    TopRight,
}

struct Builder {
    n: usize,
    nodes: BTreeMap<Node, (usize, i64)>,
    edges: Vec<(Node, Node)>,
}

impl Builder {
    fn add(&mut self, node: Node, row: usize, col: i64) {
        self.nodes.insert(node, (row, col));
    }

    fn link(&mut self, a: Node, b: Node) {
        self.edges.push((a, b));
    }

    /// Left chain vertex in row r; the chains share their row-n−2 vertex.
    fn left(&self, r: usize) -> Node {
        if r == self.n - 2 {
            Node::Meet
        } else {
            Node::Left(r)
        }
    }

    fn right(&self, r: usize) -> Node {
        if r == self.n - 2 {
            Node::Meet
        } else {
            Node::Right(r)
        }
    }

    fn finish(self) -> PlainGraph {
        let mut order: Vec<(&Node, &(usize, i64))> = self.nodes.iter().collect();
        order.sort_by_key(|&(_, &(row, col))| (row, col));
        let index: BTreeMap<Node, usize> = order.iter().enumerate().map(|(k, (node, _))| (**node, k)).collect();
        let rows = order.iter().map(|(_, &(row, _))| row).collect();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter_map(|(a, b)| Some((*index.get(a)?, *index.get(b)?)))
            .collect();
        PlainGraph::with_rows(index.len(), edges, rows)
    }
}

/// The graph Q_{i,j}(n) with the row of each vertex.
pub fn gen_ref_quiver(params: RefQuiverParams) -> Result<PlainGraph> {
    let RefQuiverParams { n, i, j } = RefQuiverParams::new(params.n, params.i, params.j)?;
    let mut b = Builder { n, nodes: BTreeMap::new(), edges: Vec::new() };
    let modified = i > 0;
    let deleted = |r: usize, c: usize| modified && ((c == 0 && r >= n - i) || (c + r == n - 1 && r + 1 + j >= n));
    for c in 0..n - 1 {
        b.add(Node::Grid(0, c), 0, 2 * c as i64);
    }
    for r in 1..n {
        for c in 0..n - r {
            if !deleted(r, c) {
                b.add(Node::Grid(r, c), r, (2 * c + r - 1) as i64);
            }
        }
    }
    // Grid edges; those touching deleted vertices are dropped in `finish`.
    for c in 0..n - 1 {
        b.link(Node::Grid(0, c), Node::Grid(1, c));
        if c + 1 < n - 1 {
            b.link(Node::Grid(0, c), Node::Grid(1, c + 1));
            b.link(Node::Grid(1, c), Node::Grid(0, c + 1));
        }
    }
    for r in 1..n - 1 {
        for c in 0..n - r {
            if c + r + 1 < n {
                b.link(Node::Grid(r, c), Node::Grid(r + 1, c));
            }
            if c >= 1 {
                b.link(Node::Grid(r, c), Node::Grid(r + 1, c - 1));
            }
        }
    }
    if modified {
        let lo = (n - 1 - i).max(1);
        for r in lo..=n - 2 {
            let v = b.left(r);
            let col = if r == 1 { 1 } else { r as i64 };
            b.add(v, r, col);
            b.link(v, Node::Grid(r - 1, 1));
            if r < n - 2 {
                let w = b.left(r + 1);
                b.link(v, w);
            }
        }
        if lo == 1 {
            b.link(Node::Left(1), Node::Grid(0, 0));
        }
        if i == n - 1 {
            b.add(Node::TopLeft, 0, 1);
            b.link(Node::TopLeft, Node::Left(1));
        }
        let lo = (n - 2 - j).max(1);
        for r in lo..=n - 3 {
            let v = b.right(r);
            let w = b.right(r + 1);
            if r == 1 {
                b.add(v, 1, 2 * n as i64 - 5);
                b.link(v, Node::Grid(0, n - 3));
                b.link(v, Node::Grid(0, n - 2));
            } else {
                b.add(v, r, (2 * n - r - 4) as i64);
                b.link(v, Node::Grid(r - 1, n - 1 - r));
            }
            b.link(v, w);
        }
        if j == n - 2 {
            b.add(Node::TopRight, 0, 2 * n as i64 - 3);
            b.link(Node::TopRight, Node::Right(1));
        }
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for n in 5..=8 {
            for p in reference_params(n).unwrap() {
                let g = gen_ref_quiver(p).unwrap();
                assert_eq!(g.vertex_count(), (n + 2) * (n - 1) / 2, "{p:?}");
                let rows = g.rows().unwrap();
                let max = *rows.iter().max().unwrap();
                assert_eq!(max, if p.i == 0 { n - 1 } else { n - 2 }, "{p:?}");
            }
        }
    }

    #[test]
    fn two_leaves_at_the_far_corner() {
        for n in 5..=8 {
            let g = gen_ref_quiver(RefQuiverParams::new(n, n - 1, n - 2).unwrap()).unwrap();
            assert_eq!((0..g.vertex_count()).filter(|&v| g.degree(v) == 1).count(), 2);
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(RefQuiverParams::new(4, 0, 0).is_err());
        assert!(RefQuiverParams::new(5, 0, 1).is_err());
        assert!(RefQuiverParams::new(5, 5, 0).is_err());
        assert!(RefQuiverParams::new(5, 1, 4).is_err());
    }
}
