//! Weight-2 blocks: labels, partitions, ∂-values, colours and λ₊/λ₋.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abacus::{p_core_and_weight, AbacusDisplay};
use crate::error::{check_prime, Error, Result};
use crate::partitions::Partition;

/// A block of F𝔖_n, given by its p-core and p-weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockLabel {
    pub prime: usize,
    pub core: Partition,
    pub weight: usize,
    pub n: usize,
}

impl BlockLabel {
    pub fn new(prime: usize, core: Partition, weight: usize) -> Result<Self> {
        check_prime(prime, 2)?;
        let (c, w) = p_core_and_weight(&core, prime)?;
        if w != 0 || c != core {
            return Err(Error::InvalidPartition(format!("{core} is not a {prime}-core")));
        }
        let n = core.size() + prime * weight;
        Ok(BlockLabel { prime, core, weight, n })
    }

    /// The block containing `lambda`.
    pub fn of(lambda: &Partition, prime: usize) -> Result<Self> {
        check_prime(prime, 2)?;
        let (core, weight) = p_core_and_weight(lambda, prime)?;
        Ok(BlockLabel { prime, n: lambda.size(), core, weight })
    }

    /// `(k, l)` when the core is the hook (k, 1^l); `(0, 0)` for the empty core.
    pub fn hook_coords(&self) -> Option<(usize, usize)> {
        let parts = self.core.parts();
        match parts.split_first() {
            None => Some((0, 0)),
            Some((&k, rest)) if rest.iter().all(|&x| x == 1) => Some((k, rest.len())),
            _ => None,
        }
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.size() == self.n
            && p_core_and_weight(lambda, self.prime).map(|(c, _)| c == self.core).unwrap_or(false)
    }
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "block of S_{} (p={}, core {}, weight {})", self.n, self.prime, self.core, self.weight)
    }
}

impl Serialize for BlockLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let hook = self.hook_coords();
        let mut st = s.serialize_struct("BlockLabel", 5)?;
        st.serialize_field("prime", &self.prime)?;
        st.serialize_field("k", &hook.map(|h| h.0))?;
        st.serialize_field("l", &hook.map(|h| h.1))?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("core", &self.core)?;
        st.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Black,
    White,
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::Black => "b",
            Colour::White => "w",
        })
    }
}

/// ∂-value with the colour, which is present exactly when ∂ = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DeltaColour {
    pub delta: usize,
    pub colour: Option<Colour>,
}

impl DeltaColour {
    pub fn new(delta: usize, colour: Option<Colour>) -> Self {
        debug_assert_eq!(delta == 0, colour.is_some());
        DeltaColour { delta, colour }
    }
}

/// The weight-2 block with core (k, 1^l), if that hook is a p-core.
pub fn hook_core(prime: usize, k: usize, l: usize) -> Option<BlockLabel> {
    if !is_valid_hook(prime, k, l) {
        return None;
    }
    BlockLabel::new(prime, Partition::hook(k, l).ok()?, 2).ok()
}

/// The closed-form condition for (k, 1^l) to be a p-core.
pub fn is_valid_hook(prime: usize, k: usize, l: usize) -> bool {
    if k == 0 {
        return l == 0;
    }
    let s = k + l;
    s < prime || (prime < s && s < 2 * prime && k <= prime && l < prime)
}

/// All valid hook parameters (k, l) for `prime`, ordered by (k + l, k).
pub fn valid_hooks(prime: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (0..=prime)
        .flat_map(|k| (0..prime).map(move |l| (k, l)))
        .filter(|&(k, l)| is_valid_hook(prime, k, l))
        .collect();
    out.sort_by_key(|&(k, l)| (k + l, k));
    out
}

fn require_weight_two(b: &BlockLabel) -> Result<()> {
    if b.weight != 2 {
        return Err(Error::NotWeightTwo(b.weight));
    }
    Ok(())
}

/// All partitions of a weight-2 block, lexicographically decreasing.
pub fn block_partitions(b: &BlockLabel) -> Result<Vec<Partition>> {
    require_weight_two(b)?;
    let t = b.core.len() + 2 * b.prime;
    let start = AbacusDisplay::new(&b.core, b.prime, t)?;
    let mut found = BTreeSet::new();
    for &q1 in start.beads() {
        let Ok(d1) = start.move_down(q1) else { continue };
        for &q2 in d1.beads() {
            if let Ok(d2) = d1.move_down(q2) {
                found.insert(d2.to_partition());
            }
        }
    }
    Ok(found.into_iter().rev().collect())
}

/// ∂-value and colour of a weight-2 partition.
pub fn delta(lambda: &Partition, prime: usize) -> Result<DeltaColour> {
    check_prime(prime, 2)?;
    let d = AbacusDisplay::new(lambda, prime, lambda.len().max(1))?;
    let w = d.weight();
    if w != 2 {
        return Err(Error::NotWeightTwo(w));
    }
    let mut value = None;
    for (q1, leg1) in d.movable_beads_up() {
        for (_, leg2) in d.move_up(q1)?.movable_beads_up() {
            let diff = leg1.abs_diff(leg2);
            match value {
                None => value = Some(diff),
                Some(v) if v != diff => {
                    return Err(Error::Inconsistent(format!(
                        "leg differences {v} and {diff} for {lambda}"
                    )))
                }
                _ => {}
            }
        }
    }
    let delta = value.ok_or_else(|| Error::Inconsistent(format!("no rim hook removal for {lambda}")))?;
    if delta > 0 {
        return Ok(DeltaColour::new(delta, None));
    }
    let hooks = d.divisible_hooks();
    let colour = match hooks.as_slice() {
        [a, b] if a.hook_length == prime && b.hook_length == prime => {
            if a.leg_length.abs_diff(b.leg_length) != 1 {
                return Err(Error::Inconsistent(format!("p-hook legs of {lambda} do not differ by 1")));
            }
            if a.leg_length.max(b.leg_length) % 2 == 0 {
                Colour::Black
            } else {
                Colour::White
            }
        }
        [a, b] => {
            let big = if a.hook_length == 2 * prime { a } else { b };
            if big.hook_length != 2 * prime {
                return Err(Error::Inconsistent(format!("no 2p-hook for {lambda}")));
            }
            if matches!(big.leg_length % 4, 0 | 3) {
                Colour::Black
            } else {
                Colour::White
            }
        }
        _ => return Err(Error::Inconsistent(format!("{} divisible hooks for {lambda}", hooks.len()))),
    };
    Ok(DeltaColour::new(0, Some(colour)))
}

/// A weight-2 block with its partitions and their ∂/colour data.
#[derive(Debug, Clone)]
pub struct BlockData {
    pub label: BlockLabel,
    /// Lexicographically decreasing.
    pub partitions: Vec<Partition>,
    pub data: BTreeMap<Partition, DeltaColour>,
}

impl BlockData {
    pub fn new(label: &BlockLabel) -> Result<Self> {
        let partitions = block_partitions(label)?;
        let data = partitions
            .iter()
            .map(|p| Ok((p.clone(), delta(p, label.prime)?)))
            .collect::<Result<_>>()?;
        Ok(BlockData { label: label.clone(), partitions, data })
    }

    pub fn of(lambda: &Partition, prime: usize) -> Result<Self> {
        Self::new(&BlockLabel::of(lambda, prime)?)
    }

    pub fn delta_of(&self, lambda: &Partition) -> Result<DeltaColour> {
        self.data.get(lambda).copied().ok_or_else(|| Error::NotInBlock(lambda.to_string()))
    }

    pub fn regular(&self) -> impl Iterator<Item = &Partition> {
        self.partitions.iter().filter(|p| p.is_p_regular(self.label.prime))
    }

    /// Lex-smallest partition above `lambda` with the same ∂ and colour.
    pub fn plus(&self, lambda: &Partition) -> Result<Option<Partition>> {
        let dc = self.delta_of(lambda)?;
        let found = self
            .partitions
            .iter()
            .rev()
            .find(|m| m.cmp(&lambda) == Ordering::Greater && self.data[*m] == dc)
            .cloned();
        if found.is_some() != lambda.is_p_restricted(self.label.prime) {
            return Err(Error::Inconsistent(format!("existence of {lambda}+ disagrees with restrictedness")));
        }
        Ok(found)
    }

    /// Lex-largest partition below `lambda` with the same ∂ and colour.
    pub fn minus(&self, lambda: &Partition) -> Result<Option<Partition>> {
        let dc = self.delta_of(lambda)?;
        let found = self
            .partitions
            .iter()
            .find(|m| m.cmp(&lambda) == Ordering::Less && self.data[*m] == dc)
            .cloned();
        if found.is_some() != lambda.is_p_regular(self.label.prime) {
            return Err(Error::Inconsistent(format!("existence of {lambda}- disagrees with regularity")));
        }
        Ok(found)
    }
}

pub fn lambda_plus(lambda: &Partition, prime: usize) -> Result<Option<Partition>> {
    let b = BlockData::of(lambda, prime)?;
    require_weight_two(&b.label)?;
    b.plus(lambda)
}

pub fn lambda_minus(lambda: &Partition, prime: usize) -> Result<Option<Partition>> {
    let b = BlockData::of(lambda, prime)?;
    require_weight_two(&b.label)?;
    b.minus(lambda)
}
