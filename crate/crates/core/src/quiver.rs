//! Ext-quivers and their inductive computation along hook chains.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::classification::PlainGraph;
use crate::error::{check_prime, Error, Result};
use crate::pairs::{scopes_relabel, Direction, PairData, ScopesPair};
use crate::partitions::Partition;
use crate::principal_seed::{seed_quiver, LoewyStructure};
use crate::weight2::{hook_core, BlockData, BlockLabel, Colour, DeltaColour};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub partition: Partition,
    pub delta: usize,
    pub colour: Option<Colour>,
}

/// An undirected Ext-quiver. Vertices are sorted by (∂ ascending, lex
/// descending); edges are index pairs `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub block: BlockLabel,
    pub vertices: Vec<Vertex>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl Quiver {
    /// Builds and validates a quiver: the vertices must be exactly the
    /// p-regular partitions of the block and every edge must change ∂ by 1.
    pub fn build(
        block: &BlockData,
        vertices: impl IntoIterator<Item = Partition>,
        edges: impl IntoIterator<Item = (Partition, Partition)>,
    ) -> Result<Self> {
        let p = block.label.prime;
        let mut verts: Vec<Vertex> = vertices
            .into_iter()
            .map(|partition| {
                let dc = block.delta_of(&partition)?;
                Ok(Vertex { partition, delta: dc.delta, colour: dc.colour })
            })
            .collect::<Result<_>>()?;
        verts.sort_by(|a, b| a.delta.cmp(&b.delta).then_with(|| b.partition.cmp(&a.partition)));
        let have: BTreeSet<&Partition> = verts.iter().map(|v| &v.partition).collect();
        let want: BTreeSet<&Partition> = block.regular().collect();
        if have.len() != verts.len() || have != want {
            return Err(Error::Inconsistent(format!(
                "vertex set differs from the {p}-regular partitions of {}",
                block.label
            )));
        }
        let index: BTreeMap<&Partition, usize> =
            verts.iter().enumerate().map(|(i, v)| (&v.partition, i)).collect();
        let mut edge_set = BTreeSet::new();
        for (a, b) in edges {
            let (Some(&u), Some(&v)) = (index.get(&a), index.get(&b)) else {
                return Err(Error::Inconsistent(format!("edge {a} - {b} leaves the vertex set")));
            };
            if verts[u].delta.abs_diff(verts[v].delta) != 1 {
                return Err(Error::Inconsistent(format!("edge {a} - {b} does not change ∂ by 1")));
            }
            edge_set.insert((u.min(v), u.max(v)));
        }
        Ok(Quiver { block: block.label.clone(), vertices: verts, edges: edge_set })
    }

    pub fn prime(&self) -> usize {
        self.block.prime
    }

    pub fn index_of(&self, lam: &Partition) -> Option<usize> {
        self.vertices.iter().position(|v| &v.partition == lam)
    }

    pub fn contains(&self, lam: &Partition) -> bool {
        self.index_of(lam).is_some()
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.vertices.iter().map(|v| &v.partition)
    }

    pub fn edge_partitions(&self) -> impl Iterator<Item = (&Partition, &Partition)> {
        self.edges.iter().map(|&(u, v)| (&self.vertices[u].partition, &self.vertices[v].partition))
    }

    pub fn has_edge(&self, a: &Partition, b: &Partition) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(u), Some(v)) => self.edges.contains(&(u.min(v), u.max(v))),
            _ => false,
        }
    }

    /// Neighbours of `lam`, lex-decreasing.
    pub fn neighbours(&self, lam: &Partition) -> Vec<Partition> {
        let Some(u) = self.index_of(lam) else { return Vec::new() };
        let mut out: Vec<Partition> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| match (a == u, b == u) {
                (true, _) => Some(self.vertices[b].partition.clone()),
                (_, true) => Some(self.vertices[a].partition.clone()),
                _ => None,
            })
            .collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// Neighbours of `lam` that are lexicographically larger.
    pub fn up_neighbours(&self, lam: &Partition) -> BTreeSet<Partition> {
        self.neighbours(lam).into_iter().filter(|m| m > lam).collect()
    }

    pub fn delta_colour(&self, lam: &Partition) -> Option<DeltaColour> {
        self.index_of(lam)
            .map(|i| DeltaColour { delta: self.vertices[i].delta, colour: self.vertices[i].colour })
    }

    /// Vertex counts per ∂-value, ∂ = 0 first.
    pub fn row_sizes(&self) -> Vec<usize> {
        let max = self.vertices.iter().map(|v| v.delta).max().unwrap_or(0);
        (0..=max).map(|d| self.vertices.iter().filter(|v| v.delta == d).count()).collect()
    }

    pub fn to_plain(&self) -> PlainGraph {
        PlainGraph::with_rows(
            self.vertices.len(),
            self.edges.iter().copied(),
            self.vertices.iter().map(|v| v.delta).collect(),
        )
    }

    /// Graphviz rendering, one rank per ∂-value; each edge points from the
    /// lex-larger end.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph quiver {\n  rankdir=TB;\n");
        for (d, _) in self.row_sizes().iter().enumerate() {
            let ids: Vec<String> = (0..self.vertices.len())
                .filter(|&i| self.vertices[i].delta == d)
                .map(|i| format!("v{i}"))
                .collect();
            if !ids.is_empty() {
                let _ = writeln!(s, "  {{ rank=same; {}; }}", ids.join("; "));
            }
        }
        for (i, v) in self.vertices.iter().enumerate() {
            let colour = v.colour.map(|c| format!(" {c}")).unwrap_or_default();
            let _ = writeln!(s, "  v{i} [label=\"{}{colour}\"];", v.partition);
        }
        for &(u, v) in &self.edges {
            let (hi, lo) = if self.vertices[u].partition > self.vertices[v].partition { (u, v) } else { (v, u) };
            let _ = writeln!(s, "  v{hi} -- v{lo};");
        }
        s.push_str("}\n");
        s
    }
}

impl Serialize for Quiver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Quiver", 3)?;
        st.serialize_field("block", &self.block)?;
        st.serialize_field("vertices", &self.vertices)?;
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(u, v)| [u, v]).collect();
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

/// Composition data of a (2:1)-step: the semisimple pieces Ȳ, Z̄, Y, Z, the
/// relevant λ₊ partitions, and the Loewy layers of the six exceptional
/// Specht modules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalStructures {
    pub case_no: u8,
    pub y_bar: BTreeSet<Partition>,
    pub z_bar: BTreeSet<Partition>,
    pub y: BTreeSet<Partition>,
    pub z: BTreeSet<Partition>,
    pub beta_bar_plus: Option<Partition>,
    pub alpha_bar_plus: Option<Partition>,
    pub alpha_plus: Option<Partition>,
    pub beta_plus: Option<Partition>,
    pub specht: BTreeMap<&'static str, LoewyStructure>,
}

fn set<'a>(items: impl IntoIterator<Item = &'a Partition>) -> BTreeSet<Partition> {
    items.into_iter().cloned().collect()
}

fn union(a: &BTreeSet<Partition>, extra: impl IntoIterator<Item = Partition>) -> BTreeSet<Partition> {
    let mut s = a.clone();
    s.extend(extra);
    s
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Inconsistent(what()))
    }
}

/// Reads Ȳ and Z̄ off the quiver of B̄ and derives the rest of the step data.
///
/// In case 5, β̄ is p-singular and Ȳ cannot be read from the quiver; with
/// `hook_mode` it is taken to be empty, otherwise the step is refused.
pub fn extract_bar_data(q_bar: &Quiver, pd: &PairData, hook_mode: bool) -> Result<ExceptionalStructures> {
    check(q_bar.block == pd.lower, || "quiver does not belong to the lower block".into())?;
    let c = pd.case_no;
    let bar = BlockData::new(&pd.lower)?;
    let up = BlockData::new(&pd.upper)?;
    let p = pd.prime();
    let plus_if = |b: &BlockData, lam: &Partition| -> Result<Option<Partition>> {
        if lam.is_p_restricted(p) {
            b.plus(lam)
        } else {
            Ok(None)
        }
    };
    let beta_bar_plus = plus_if(&bar, &pd.beta_bar)?;
    let alpha_bar_plus = plus_if(&bar, &pd.alpha_bar)?;
    let alpha_plus = plus_if(&up, &pd.alpha)?;
    let beta_plus = plus_if(&up, &pd.beta)?;

    let ab_up = q_bar.up_neighbours(&pd.alpha_bar);
    let mut z_bar = ab_up.clone();
    if let Some(bp) = &beta_bar_plus {
        check(ab_up.contains(bp), || format!("β̄₊ = {bp} is not joined to ᾱ in case {c}"))?;
        z_bar.remove(bp);
    }
    check(c != 3 || z_bar.is_empty(), || "Z̄ is not empty in case 3".into())?;

    let y_bar = if pd.beta_bar.is_p_regular(p) {
        check(q_bar.has_edge(&pd.beta_bar, &pd.alpha_bar), || "β̄ and ᾱ are not joined".into())?;
        let mut y = q_bar.up_neighbours(&pd.beta_bar);
        y.remove(&pd.alpha_bar);
        y
    } else if hook_mode {
        BTreeSet::new()
    } else {
        return Err(Error::CaseFiveWithoutHookMode);
    };
    check(y_bar.is_disjoint(&z_bar), || "Ȳ and Z̄ overlap".into())?;
    if let (true, Some(ap)) = (matches!(c, 4..=6), &alpha_bar_plus) {
        check(!y_bar.contains(ap), || "ᾱ₊ occurs in Ȳ".into())?;
    }
    let d = pd.d;
    check(y_bar.iter().all(|m| bar.data[m].delta + 1 == d || bar.data[m].delta == d + 1), || "∂ outside {d±1} in Ȳ".into())?;
    check(z_bar.iter().all(|m| bar.data[m].delta == d || bar.data[m].delta == d + 2), || "∂ outside {d, d+2} in Z̄".into())?;

    let up_map = |s: &BTreeSet<Partition>| -> Result<BTreeSet<Partition>> {
        s.iter().map(|m| pd.phi(m, Direction::Up)).collect()
    };
    let y = up_map(&y_bar)?;
    let z = up_map(&z_bar)?;
    if let (Some(bp), Some(ap)) = (&beta_bar_plus, &alpha_plus) {
        check(pd.phi(bp, Direction::Up)? == *ap, || "α₊ ≠ Φ⁻¹(β̄₊)".into())?;
    }
    if let (Some(ap), Some(bp)) = (&alpha_bar_plus, &beta_plus) {
        check(pd.phi(ap, Direction::Up)? == *bp, || "β₊ ≠ Φ⁻¹(ᾱ₊)".into())?;
    }

    let one = |x: &Partition| set([x]);
    let opt = |x: &Option<Partition>| set(x.iter());
    let (ab, bb, gb) = (one(&pd.alpha_bar), one(&pd.beta_bar), one(&pd.gamma_bar));
    let (a, b, g) = (one(&pd.alpha), one(&pd.beta), one(&pd.gamma));
    let ls = |layers: Vec<BTreeSet<Partition>>| LoewyStructure::new(layers);
    let mut specht = BTreeMap::new();
    specht.insert(
        "alpha_bar",
        match c {
            1 => ls(vec![ab.clone(), z_bar.clone()]),
            2 | 3 => ls(vec![ab.clone(), union(&z_bar, beta_bar_plus.clone())]),
            _ => ls(vec![ab.clone(), union(&z_bar, beta_bar_plus.clone()), opt(&alpha_bar_plus)]),
        },
    );
    specht.insert(
        "beta_bar",
        match c {
            1 => ls(vec![bb.clone(), union(&y_bar, [pd.alpha_bar.clone()])]),
            5 => ls(vec![union(&y_bar, [pd.alpha_bar.clone()]), opt(&beta_bar_plus)]),
            _ => ls(vec![bb.clone(), union(&y_bar, [pd.alpha_bar.clone()]), opt(&beta_bar_plus)]),
        },
    );
    specht.insert(
        "gamma_bar",
        match c {
            1 | 2 | 6 => ls(vec![gb, union(&z_bar, [pd.beta_bar.clone()]), ab.clone()]),
            3 => ls(vec![bb.clone(), ab.clone()]),
            4 => ls(vec![union(&z_bar, [pd.beta_bar.clone()]), ab.clone()]),
            _ => ls(vec![z_bar.clone(), ab.clone()]),
        },
    );
    specht.insert(
        "alpha",
        match c {
            1 => ls(vec![a.clone(), y.clone()]),
            2 | 3 => ls(vec![a.clone(), y.clone(), opt(&alpha_plus)]),
            _ => ls(vec![a.clone(), union(&y, beta_plus.clone()), opt(&alpha_plus)]),
        },
    );
    specht.insert(
        "beta",
        match c {
            1 | 2 => ls(vec![b.clone(), union(&z, [pd.alpha.clone()])]),
            3 => ls(vec![a.clone()]),
            4 | 5 => ls(vec![union(&z, [pd.alpha.clone()]), opt(&beta_plus)]),
            _ => ls(vec![b.clone(), union(&z, [pd.alpha.clone()]), opt(&beta_plus)]),
        },
    );
    specht.insert(
        "gamma",
        match c {
            1 | 2 | 6 => ls(vec![g, union(&y, [pd.beta.clone()]), a.clone()]),
            3 | 4 => ls(vec![g, y.clone(), a.clone()]),
            _ => ls(vec![y.clone(), a.clone()]),
        },
    );
    Ok(ExceptionalStructures {
        case_no: c,
        y_bar,
        z_bar,
        y,
        z,
        beta_bar_plus,
        alpha_bar_plus,
        alpha_plus,
        beta_plus,
        specht,
    })
}

/// One (2:1)-induction step: the quiver of `pd.upper` from that of `pd.lower`.
pub fn induct_step(q_bar: &Quiver, pd: &PairData, hook_mode: bool) -> Result<(Quiver, ExceptionalStructures)> {
    if pd.case_no == 5 && !hook_mode {
        return Err(Error::CaseFiveWithoutHookMode);
    }
    let es = extract_bar_data(q_bar, pd, hook_mode)?;
    let p = pd.prime();
    let mut relabel = BTreeMap::new();
    for mu in q_bar.partitions().filter(|m| **m != pd.alpha_bar) {
        relabel.insert(mu.clone(), pd.phi(mu, Direction::Up)?);
    }
    let mut edges: Vec<(Partition, Partition)> = q_bar
        .edge_partitions()
        .filter_map(|(a, b)| Some((relabel.get(a)?.clone(), relabel.get(b)?.clone())))
        .collect();
    let mut alpha_nb: BTreeSet<Partition> = es.y.clone();
    if pd.beta.is_p_regular(p) {
        alpha_nb.insert(pd.beta.clone());
    }
    if matches!(pd.case_no, 4..=6) {
        let bp = es.beta_plus.clone().ok_or_else(|| Error::Inconsistent("β₊ missing".into()))?;
        alpha_nb.insert(bp);
    }
    check(alpha_nb.iter().all(|l| *l == pd.beta || *l > pd.alpha), || "a neighbour of α lies below α".into())?;
    edges.extend(alpha_nb.into_iter().map(|l| (pd.alpha.clone(), l)));
    let vertices = relabel.into_values().chain([pd.alpha.clone()]);
    let q = Quiver::build(&BlockData::new(&pd.upper)?, vertices, edges)?;
    Ok((q, es))
}

/// The quiver of `pair.upper` obtained from that of `pair.lower` by Ψ⁻¹.
pub fn scopes_step(q_lower: &Quiver, pair: &ScopesPair) -> Result<Quiver> {
    if pair.k != 2 || q_lower.block != pair.lower {
        return Err(Error::NotAPair("scopes_step needs a (2:2)-pair and the lower quiver".into()));
    }
    let map: BTreeMap<Partition, Partition> = q_lower
        .partitions()
        .map(|m| Ok((m.clone(), scopes_relabel(pair, m, Direction::Up)?)))
        .collect::<Result<_>>()?;
    let edges: Vec<_> = q_lower.edge_partitions().map(|(a, b)| (map[a].clone(), map[b].clone())).collect();
    let q = Quiver::build(&BlockData::new(&pair.upper)?, map.values().cloned(), edges)?;
    for (from, to) in &map {
        check(q_lower.delta_colour(from) == q.delta_colour(to), || format!("Ψ⁻¹ changes ∂ or colour of {from}"))?;
    }
    Ok(q)
}

/// Order in which hook chains are traversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainOrder {
    /// Reach (k, l) through l-steps last: (k,0) by k-steps, then l-steps.
    KFirst,
    /// Reach (k, l) through k-steps last wherever possible.
    LFirst,
}

/// How a hook block is reached from a smaller one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Seed,
    KStep(usize, usize),
    LStep(usize, usize),
    Scopes(usize, usize),
}

pub fn parent_step(prime: usize, k: usize, l: usize, order: ChainOrder) -> Step {
    let s = k + l;
    match order {
        _ if s == 0 => Step::Seed,
        _ if s == prime + 1 => Step::Scopes(k - 1, l - 1),
        ChainOrder::KFirst if l >= 1 && s != prime => Step::LStep(k, l - 1),
        ChainOrder::KFirst => Step::KStep(k - 1, 0),
        ChainOrder::LFirst if s > prime + 1 || k >= 2 => Step::KStep(k - 1, l),
        ChainOrder::LFirst if l >= 1 => Step::LStep(k, l - 1),
        ChainOrder::LFirst => Step::KStep(k - 1, l),
    }
}

/// Memoized quivers of hook blocks for one prime and chain order.
pub struct QuiverCache {
    prime: usize,
    order: ChainOrder,
    quivers: BTreeMap<(usize, usize), Quiver>,
    steps: BTreeMap<(usize, usize), (PairData, ExceptionalStructures)>,
}

impl QuiverCache {
    pub fn new(prime: usize, order: ChainOrder) -> Result<Self> {
        check_prime(prime, 5)?;
        Ok(QuiverCache { prime, order, quivers: BTreeMap::new(), steps: BTreeMap::new() })
    }

    pub fn get(&mut self, k: usize, l: usize) -> Result<&Quiver> {
        let p = self.prime;
        let block = hook_core(p, k, l).ok_or(Error::InvalidHook(k, l))?;
        if !self.quivers.contains_key(&(k, l)) {
            let q = match parent_step(p, k, l, self.order) {
                Step::Seed => seed_quiver(p)?,
                Step::Scopes(a, b) => {
                    let lower = hook_core(p, a, b).ok_or(Error::InvalidHook(a, b))?;
                    let pair = ScopesPair::new(&block, &lower)?;
                    let q_lower = self.get(a, b)?.clone();
                    scopes_step(&q_lower, &pair)?
                }
                Step::KStep(a, b) | Step::LStep(a, b) => {
                    let lower = hook_core(p, a, b).ok_or(Error::InvalidHook(a, b))?;
                    let pd = PairData::new(&block, &lower)?;
                    let q_bar = self.get(a, b)?.clone();
                    let (q, es) = induct_step(&q_bar, &pd, true)?;
                    self.steps.insert((k, l), (pd, es));
                    q
                }
            };
            self.quivers.insert((k, l), q);
        }
        Ok(&self.quivers[&(k, l)])
    }

    /// Pair data and composition data of the step that produced (k, l), if
    /// it was a (2:1)-step.
    pub fn step_data(&self, k: usize, l: usize) -> Option<&(PairData, ExceptionalStructures)> {
        self.steps.get(&(k, l))
    }
}

/// The Ext-quiver of the weight-2 block with core (k, 1^l).
pub fn compute_quiver(prime: usize, k: usize, l: usize) -> Result<Quiver> {
    compute_quiver_with(prime, k, l, ChainOrder::KFirst)
}

pub fn compute_quiver_with(prime: usize, k: usize, l: usize, order: ChainOrder) -> Result<Quiver> {
    Ok(QuiverCache::new(prime, order)?.get(k, l)?.clone())
}
