//! Decomposition data and Ext-quiver of the principal block B₀,₀ of F𝔖_{2p}.
//!
//! Labels ⟨i⟩, ⟨j,i⟩, ⟨i,i⟩ refer to the [2^p]-abacus with 2p beads. They
//! are converted to partitions as soon as the tables are built.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::abacus::{AbacusDisplay, Weight2Label};
use crate::error::{check_prime, Error, Result};
use crate::partitions::Partition;
use crate::quiver::Quiver;
use crate::weight2::{delta, hook_core, BlockData, Colour, DeltaColour};

use Weight2Label::{Same, Single, Two};

/// Layers of a module, top first.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct LoewyStructure {
    pub layers: Vec<BTreeSet<Partition>>,
}

impl LoewyStructure {
    /// Drops empty layers.
    pub fn new(layers: impl IntoIterator<Item = BTreeSet<Partition>>) -> Self {
        LoewyStructure { layers: layers.into_iter().filter(|l| !l.is_empty()).collect() }
    }

    pub fn factors(&self) -> impl Iterator<Item = &Partition> {
        self.layers.iter().flatten()
    }

    pub fn multiplicity(&self, lam: &Partition) -> usize {
        self.factors().filter(|m| *m == lam).count()
    }

    pub fn head(&self) -> Option<&BTreeSet<Partition>> {
        self.layers.first()
    }

    pub fn socle(&self) -> Option<&BTreeSet<Partition>> {
        self.layers.last()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectiveColumn {
    pub label: Partition,
    pub specht_factors: Vec<Partition>,
}

/// The partition labelled by `label` on the [2^p]-abacus.
pub fn label_partition(prime: usize, label: Weight2Label) -> Result<Partition> {
    let p = prime;
    let base = AbacusDisplay::new(&Partition::empty(), p, 2 * p)?;
    let pos = |row: usize, runner: usize| row * p + runner - 1;
    let mut beads = base.beads().clone();
    let mut shift = |from: usize, to: usize| {
        beads.remove(&from);
        beads.insert(to);
    };
    match label {
        Single(i) if (1..=p).contains(&i) => shift(pos(1, i), pos(3, i)),
        Two(j, i) if i < j && j <= p && i >= 1 => {
            shift(pos(1, i), pos(2, i));
            shift(pos(1, j), pos(2, j));
        }
        Same(i) if (1..=p).contains(&i) => {
            shift(pos(1, i), pos(2, i));
            shift(pos(0, i), pos(1, i));
        }
        _ => return Err(Error::InvalidDisplay(format!("label {label} for p={p}"))),
    }
    Ok(AbacusDisplay::from_beads(p, beads)?.to_partition())
}

/// All 2p + p(p−1)/2 labels of the block.
pub fn all_labels(prime: usize) -> Vec<Weight2Label> {
    let mut out: Vec<Weight2Label> = (1..=prime).map(Single).collect();
    for j in 1..=prime {
        out.push(Same(j));
        for i in 1..j {
            out.push(Two(j, i));
        }
    }
    out
}

pub fn is_regular_label(label: Weight2Label) -> bool {
    !matches!(label, Same(_) | Two(2, 1))
}

/// ⟨a,b⟩ for a ≠ b, in either order.
fn pair(a: usize, b: usize) -> Weight2Label {
    if a == b {
        Same(a)
    } else {
        Two(a.max(b), a.min(b))
    }
}

/// Specht factors of each projective indecomposable, by label.
pub fn projective_columns_labels(prime: usize) -> Vec<(Weight2Label, Vec<Weight2Label>)> {
    let p = prime;
    let mut out = vec![(Single(1), vec![Single(1), Two(p, 1), Same(p)])];
    out.push((Single(p), vec![Single(p), Single(p - 1), Two(p, p - 2), Two(p - 1, p - 2)]));
    for s in 2..p {
        out.push((Single(s), vec![Single(s), Single(s - 1), Two(p, s), Two(p, s - 1)]));
    }
    for s in 3..=p {
        out.push((Two(s, 1), vec![Two(s, 1), Two(s - 1, 1), Same(s), Same(s - 1)]));
    }
    for s in 3..p {
        out.push((Two(s + 1, s), vec![Two(s + 1, s), Two(s + 1, s - 1), Two(s, s - 2), Two(s - 1, s - 2)]));
    }
    out.push((Two(3, 2), vec![Two(3, 2), Two(3, 1), Same(2), Same(1)]));
    for r in 4..=p {
        for s in 2..r - 1 {
            out.push((Two(r, s), vec![Two(r, s), pair(r - 1, s), pair(r, s - 1), pair(r - 1, s - 1)]));
        }
    }
    out
}

fn layers(ls: &[&[Weight2Label]]) -> Vec<Vec<Weight2Label>> {
    ls.iter().map(|l| l.to_vec()).collect()
}

/// Loewy layers of every Specht module, by label.
///
/// For j − i = 2 and j ≠ p the socle is ⟨j+1,i+1⟩ and ⟨j+1,i+2⟩ sits in the
/// middle layer; this is the placement forced by the ∂-values and by the
/// socle being D^{λ₊}.
pub fn specht_structures_labels(prime: usize) -> BTreeMap<Weight2Label, Vec<Vec<Weight2Label>>> {
    let p = prime;
    let mut out = BTreeMap::new();
    for i in 1..p {
        out.insert(Single(i), layers(&[&[Single(i)], &[Single(i + 1)]]));
    }
    out.insert(Single(p), layers(&[&[Single(p)]]));
    for i in 3..p {
        out.insert(Same(i), layers(&[&[Two(i, 1)], &[Two(i + 1, 1)]]));
    }
    out.insert(Same(p), layers(&[&[Two(p, 1)], &[Single(1)]]));
    out.insert(Same(2), layers(&[&[Two(3, 2)], &[Two(3, 1)]]));
    out.insert(Same(1), layers(&[&[Two(3, 2)]]));
    for j in 2..=p {
        for i in 1..j {
            let v = match (j - i, j == p) {
                (d, false) if d >= 3 => layers(&[&[Two(j, i)], &[Two(j, i + 1), Two(j + 1, i)], &[Two(j + 1, i + 1)]]),
                (d, true) if d >= 3 => layers(&[&[Two(p, i)], &[Two(p, i + 1), Single(i)], &[Single(i + 1)]]),
                (2, false) => layers(&[
                    &[Two(j, i)],
                    &[Two(j, i + 1), Two(j + 1, i), Two(j + 1, i + 2)],
                    &[Two(j + 1, i + 1)],
                ]),
                (2, true) => layers(&[&[Two(p, p - 2)], &[Two(p, p - 1), Single(p), Single(p - 2)], &[Single(p - 1)]]),
                (1, _) if i == 1 => layers(&[&[Two(3, 1)], &[Two(4, 3)]]),
                (1, _) if i == p - 1 => layers(&[&[Two(p, p - 1)], &[Single(p - 1)]]),
                (1, _) if i == p - 2 => layers(&[&[Two(p - 1, p - 2)], &[Two(p, p - 2)], &[Single(p)]]),
                (1, _) => layers(&[&[Two(i + 1, i)], &[Two(i + 2, i)], &[Two(i + 3, i + 2)]]),
                _ => unreachable!(),
            };
            out.insert(Two(j, i), v);
        }
    }
    out
}

/// ∂-value and colour of every label, from the closed-form table.
pub fn delta_table_labels(prime: usize) -> BTreeMap<Weight2Label, DeltaColour> {
    let p = prime;
    let mut out = BTreeMap::new();
    let zero = |c| DeltaColour::new(0, Some(c));
    out.insert(Single(p), zero(Colour::Black));
    out.insert(Two(2, 1), zero(Colour::Black));
    out.insert(Same(1), zero(Colour::White));
    for i in 2..p {
        out.insert(Two(i + 1, i), zero(if i % 2 == 1 { Colour::Black } else { Colour::White }));
    }
    for d in 1..p {
        let dc = DeltaColour::new(d, None);
        out.insert(Single(p - d), dc);
        out.insert(Same(d + 1), dc);
        for i in 1..p - d {
            out.insert(Two(i + d + 1, i), dc);
        }
    }
    out
}

fn to_partitions(prime: usize, ls: &[Weight2Label]) -> Result<Vec<Partition>> {
    ls.iter().map(|&l| label_partition(prime, l)).collect()
}

pub fn projective_columns(prime: usize) -> Result<Vec<ProjectiveColumn>> {
    check_prime(prime, 5)?;
    projective_columns_labels(prime)
        .into_iter()
        .map(|(label, factors)| {
            Ok(ProjectiveColumn {
                label: label_partition(prime, label)?,
                specht_factors: to_partitions(prime, &factors)?,
            })
        })
        .collect()
}

pub fn specht_structures(prime: usize) -> Result<BTreeMap<Partition, LoewyStructure>> {
    check_prime(prime, 5)?;
    specht_structures_labels(prime)
        .into_iter()
        .map(|(label, ls)| {
            let layers = ls
                .iter()
                .map(|l| Ok(to_partitions(prime, l)?.into_iter().collect()))
                .collect::<Result<Vec<BTreeSet<Partition>>>>()?;
            Ok((label_partition(prime, label)?, LoewyStructure::new(layers)))
        })
        .collect()
}

/// The closed-form ∂ table, checked pointwise against the direct computation.
pub fn delta_table(prime: usize) -> Result<BTreeMap<Partition, DeltaColour>> {
    check_prime(prime, 5)?;
    let mut out = BTreeMap::new();
    for (label, dc) in delta_table_labels(prime) {
        let lam = label_partition(prime, label)?;
        let direct = delta(&lam, prime)?;
        if direct != dc {
            return Err(Error::Inconsistent(format!("∂ table entry {label} = {lam}: {dc:?} vs {direct:?}")));
        }
        out.insert(lam, dc);
    }
    Ok(out)
}

/// Checks (P^λ : S^μ) = [S^μ : D^λ] for all λ, μ.
pub fn check_reciprocity(prime: usize) -> Result<()> {
    let columns = projective_columns(prime)?;
    let spechts = specht_structures(prime)?;
    let regular: BTreeSet<&Partition> = columns.iter().map(|c| &c.label).collect();
    for c in &columns {
        for (mu, s) in &spechts {
            let left = c.specht_factors.iter().filter(|f| *f == mu).count();
            let right = s.multiplicity(&c.label);
            if left != right {
                return Err(Error::Inconsistent(format!("reciprocity fails at ({}, {mu})", c.label)));
            }
        }
    }
    for s in spechts.values() {
        if let Some(f) = s.factors().find(|f| !regular.contains(f)) {
            return Err(Error::Inconsistent(format!("p-singular composition factor {f}")));
        }
    }
    Ok(())
}

/// The Ext-quiver of B₀,₀: p-regular λ > μ in adjacent ∂-rows are joined
/// exactly when D^λ is a composition factor of S^μ.
pub fn seed_quiver(prime: usize) -> Result<Quiver> {
    check_prime(prime, 5)?;
    let block = BlockData::new(&hook_core(prime, 0, 0).expect("empty core"))?;
    let spechts = specht_structures(prime)?;
    let deltas = delta_table(prime)?;
    let regular: Vec<Partition> = block.regular().cloned().collect();
    let mut edges = Vec::new();
    for mu in &regular {
        for lam in regular.iter().filter(|l| *l > mu) {
            if deltas[lam].delta.abs_diff(deltas[mu].delta) == 1 && spechts[mu].multiplicity(lam) == 1 {
                edges.push((lam.clone(), mu.clone()));
            }
        }
    }
    Quiver::build(&block, regular, edges)
}
