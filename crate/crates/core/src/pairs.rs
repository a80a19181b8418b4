//! (2:k)-pairs of weight-2 blocks.
//!
//! For a (2:1)-pair (B, B̄) the six exceptional partitions are placed
//! directly on the shared abacus display, the segment counts l₁, l₂, r₁, r₂
//! are read off the core, and the pair is sorted into one of six cases.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::abacus::AbacusDisplay;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::weight2::{delta, hook_core, BlockData, BlockLabel, Colour, DeltaColour};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// From the upper block B to the lower block B̄.
    Down,
    /// From B̄ to B.
    Up,
}

/// All (2:k)-pairs (B, B̄) with `b` as the upper block, as (k, B̄).
pub fn find_pairs(b: &BlockLabel) -> Result<Vec<(usize, BlockLabel)>> {
    let p = b.prime;
    let t0 = b.core.len().max(1);
    let mut out = BTreeSet::new();
    for t in t0..t0 + p {
        let d = AbacusDisplay::new(&b.core, p, t)?;
        let counts = d.runner_counts();
        for i in 2..=p {
            if counts[i - 1] > counts[i - 2] {
                let lower = d.swap_runners(i)?.to_partition();
                out.insert((counts[i - 1] - counts[i - 2], BlockLabel::new(p, lower, b.weight)?));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Shared bead count and runner for a (2:k)-pair. The bead count leaves two
/// full rows above the core so every partition of either block is displayable.
fn shared_display(upper: &BlockLabel, lower: &BlockLabel, k: usize) -> Result<(usize, usize)> {
    let p = upper.prime;
    let not_pair = || Error::NotAPair(format!("{} over {}", upper.core, lower.core));
    if lower.prime != p
        || upper.weight != 2
        || lower.weight != 2
        || upper.core.size() != lower.core.size() + k
    {
        return Err(not_pair());
    }
    let m = upper.core.len().max(lower.core.len()).max(1);
    for s in m..m + p {
        let d = AbacusDisplay::new(&upper.core, p, s)?;
        let counts = d.runner_counts();
        for i in 2..=p {
            if counts[i - 1] == counts[i - 2] + k && d.swap_runners(i)?.to_partition() == lower.core {
                return Ok((s + 2 * p, i));
            }
        }
    }
    Err(not_pair())
}

/// A (2:1)-pair with its exceptional partitions and case data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairData {
    pub upper: BlockLabel,
    pub lower: BlockLabel,
    pub bead_count: usize,
    pub runner: usize,
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub alpha_bar: Partition,
    pub beta_bar: Partition,
    pub gamma_bar: Partition,
    pub l1: usize,
    pub l2: usize,
    pub r1: usize,
    pub r2: usize,
    pub d: usize,
    pub case_no: u8,
}

fn moved(d: &AbacusDisplay, moves: &[(usize, usize, usize)]) -> Result<Partition> {
    // Each move is (runner, from_row, to_row), applied in order.
    let mut beads = d.beads().clone();
    for &(runner, from, to) in moves {
        let (a, b) = (d.position(from, runner), d.position(to, runner));
        if !beads.remove(&a) || !beads.insert(b) {
            return Err(Error::Inconsistent(format!("bad constellation move on runner {runner}")));
        }
    }
    Ok(AbacusDisplay::from_beads(d.prime(), beads)?.to_partition())
}

/// Case number from the segment counts.
pub fn classify(prime: usize, l1: usize, l2: usize, r1: usize, r2: usize) -> u8 {
    let (top, bottom) = (l1 + r1, l2 + r2);
    let edge = prime - 2;
    match (bottom, top) {
        (0, 0) => 1,
        (0, t) if t < edge => 2,
        (0, _) => 3,
        (b, t) if t == edge && b == edge => 5,
        (_, t) if t == edge => 4,
        _ => 6,
    }
}

impl PairData {
    pub fn new(upper: &BlockLabel, lower: &BlockLabel) -> Result<Self> {
        let (t, i) = shared_display(upper, lower, 1)?;
        let p = upper.prime;
        let core = AbacusDisplay::new(&upper.core, p, t)?;
        let core_bar = core.swap_runners(i)?;
        let m = core.runner_counts()[i - 1];
        let (r1_row, r2_row, r3_row) = (m - 2, m - 1, m);
        let alpha = moved(&core, &[(i, r2_row, r3_row), (i, r1_row, r2_row)])?;
        let beta = moved(&core, &[(i, r2_row, r3_row), (i - 1, r1_row, r2_row)])?;
        let gamma = moved(&core, &[(i - 1, r1_row, r3_row)])?;
        let alpha_bar = moved(&core_bar, &[(i, r1_row, r3_row)])?;
        let beta_bar = moved(&core_bar, &[(i - 1, r2_row, r3_row), (i, r1_row, r2_row)])?;
        let gamma_bar = moved(&core_bar, &[(i - 1, r2_row, r3_row), (i - 1, r1_row, r2_row)])?;
        let count = |row: usize, runners: std::ops::RangeInclusive<usize>| {
            runners.filter(|&r| core.has_bead_at(row, r)).count()
        };
        let l1 = count(r2_row, 1..=i - 2);
        let l2 = count(r3_row, 1..=i - 2);
        let r1 = count(r1_row, i + 1..=p);
        let r2 = count(r2_row, i + 1..=p);
        if l1 < l2 || r1 < r2 {
            return Err(Error::Inconsistent("segment counts out of order".into()));
        }
        let pd = PairData {
            upper: upper.clone(),
            lower: lower.clone(),
            bead_count: t,
            runner: i,
            alpha,
            beta,
            gamma,
            alpha_bar,
            beta_bar,
            gamma_bar,
            l1,
            l2,
            r1,
            r2,
            d: l1 + r1 - l2 - r2,
            case_no: classify(p, l1, l2, r1, r2),
        };
        if !(pd.alpha_bar > pd.beta_bar && pd.beta_bar > pd.gamma_bar && pd.alpha > pd.beta && pd.beta > pd.gamma) {
            return Err(Error::Inconsistent("exceptional partitions out of lex order".into()));
        }
        for (x, b) in [(&pd.alpha, upper), (&pd.beta, upper), (&pd.gamma, upper)]
            .into_iter()
            .chain([(&pd.alpha_bar, lower), (&pd.beta_bar, lower), (&pd.gamma_bar, lower)])
        {
            if !b.contains(x) {
                return Err(Error::Inconsistent(format!("{x} not in {b}")));
            }
        }
        Ok(pd)
    }

    pub fn prime(&self) -> usize {
        self.upper.prime
    }

    /// Good partitions are the non-exceptional ones.
    pub fn is_exceptional(&self, lam: &Partition) -> bool {
        [&self.alpha, &self.beta, &self.gamma, &self.alpha_bar, &self.beta_bar, &self.gamma_bar].contains(&lam)
    }

    /// The runner swap at the shared display.
    pub fn swap(&self, lam: &Partition) -> Result<Partition> {
        let d = AbacusDisplay::new(lam, self.prime(), self.bead_count)?;
        Ok(d.swap_runners(self.runner)?.to_partition())
    }

    /// Φ (down, B → B̄) and Φ⁻¹ (up), extended by β ↦ γ̄ and γ ↦ β̄.
    pub fn phi(&self, lam: &Partition, dir: Direction) -> Result<Partition> {
        let p = self.prime();
        let (source, target) = match dir {
            Direction::Down => (&self.upper, &self.lower),
            Direction::Up => (&self.lower, &self.upper),
        };
        if !source.contains(lam) {
            return Err(Error::NotInBlock(lam.to_string()));
        }
        let special = match dir {
            Direction::Down => [(&self.beta, &self.gamma_bar), (&self.gamma, &self.beta_bar)],
            Direction::Up => [(&self.gamma_bar, &self.beta), (&self.beta_bar, &self.gamma)],
        };
        let no_image = match dir {
            Direction::Down => &self.alpha,
            Direction::Up => &self.alpha_bar,
        };
        if lam == no_image {
            return Err(Error::NoImage(lam.to_string()));
        }
        for (from, to) in special {
            if lam == from {
                if !from.is_p_regular(p) {
                    return Err(Error::NoImage(format!("{lam} is p-singular")));
                }
                return Ok(to.clone());
            }
        }
        let image = self.swap(lam)?;
        if !target.contains(&image) || self.is_exceptional(&image) {
            return Err(Error::Inconsistent(format!("runner swap sends {lam} outside the good set")));
        }
        Ok(image)
    }

    /// The six exceptional partitions with their names, B̄ side first.
    pub fn named(&self) -> [(&'static str, &Partition); 6] {
        [
            ("alpha_bar", &self.alpha_bar),
            ("beta_bar", &self.beta_bar),
            ("gamma_bar", &self.gamma_bar),
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
        ]
    }
}

/// One row of the regularity table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub name: &'static str,
    pub partition: Partition,
    pub regular: bool,
    pub restricted: bool,
    pub delta: DeltaColour,
}

/// Expected (regular cases, restricted cases, ∂ offset from d) per exceptional partition.
const REGULARITY_TABLE: [(&str, &[u8], &[u8], usize); 6] = [
    ("alpha_bar", &[1, 2, 3, 4, 5, 6], &[4, 5, 6], 1),
    ("beta_bar", &[1, 2, 3, 4, 6], &[2, 3, 4, 5, 6], 0),
    ("gamma_bar", &[1, 2, 6], &[1, 2, 3, 4, 5, 6], 1),
    ("alpha", &[1, 2, 3, 4, 5, 6], &[2, 3, 4, 5, 6], 0),
    ("beta", &[1, 2, 6], &[4, 5, 6], 1),
    ("gamma", &[1, 2, 3, 4, 6], &[1, 2, 3, 4, 5, 6], 0),
];

/// Regularity, restrictedness and ∂ of the exceptional partitions, checked
/// against the expected table for the pair's case.
pub fn regularity_profile(pd: &PairData) -> Result<Vec<ProfileRow>> {
    let p = pd.prime();
    let mut rows = Vec::new();
    for ((name, lam), (tname, reg, res, off)) in pd.named().into_iter().zip(REGULARITY_TABLE) {
        debug_assert_eq!(name, tname);
        let row = ProfileRow {
            name,
            partition: lam.clone(),
            regular: lam.is_p_regular(p),
            restricted: lam.is_p_restricted(p),
            delta: delta(lam, p)?,
        };
        let expect = (reg.contains(&pd.case_no), res.contains(&pd.case_no), pd.d + off);
        if (row.regular, row.restricted, row.delta.delta) != expect {
            return Err(Error::Inconsistent(format!(
                "{name} = {lam} in case {}: got {:?}, expected {:?}",
                pd.case_no,
                (row.regular, row.restricted, row.delta.delta),
                expect
            )));
        }
        rows.push(row);
    }
    if pd.l1 == pd.l2 && pd.r1 == pd.r2 {
        let colour = if (pd.l2 + pd.r2) % 2 == 1 { Colour::Black } else { Colour::White };
        for row in rows.iter().filter(|r| matches!(r.name, "beta_bar" | "alpha" | "gamma")) {
            if row.delta.colour != Some(colour) {
                return Err(Error::Inconsistent(format!("colour of {} in case {}", row.name, pd.case_no)));
            }
        }
    }
    Ok(rows)
}

/// A (2:k)-pair with k ≥ 2; the runner swap Ψ is a bijection of the blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScopesPair {
    pub upper: BlockLabel,
    pub lower: BlockLabel,
    pub k: usize,
    pub bead_count: usize,
    pub runner: usize,
}

impl ScopesPair {
    pub fn new(upper: &BlockLabel, lower: &BlockLabel) -> Result<Self> {
        let k = upper
            .core
            .size()
            .checked_sub(lower.core.size())
            .filter(|&k| k >= 2)
            .ok_or_else(|| Error::NotAPair(format!("{} over {} is not (2:k), k >= 2", upper.core, lower.core)))?;
        let (bead_count, runner) = shared_display(upper, lower, k)?;
        Ok(ScopesPair { upper: upper.clone(), lower: lower.clone(), k, bead_count, runner })
    }
}

/// Ψ (down) or Ψ⁻¹ (up).
pub fn scopes_relabel(pair: &ScopesPair, lam: &Partition, dir: Direction) -> Result<Partition> {
    let (source, target) = match dir {
        Direction::Down => (&pair.upper, &pair.lower),
        Direction::Up => (&pair.lower, &pair.upper),
    };
    if !source.contains(lam) {
        return Err(Error::NotInBlock(lam.to_string()));
    }
    let d = AbacusDisplay::new(lam, pair.upper.prime, pair.bead_count)?;
    let image = d.swap_runners(pair.runner)?.to_partition();
    if !target.contains(&image) {
        return Err(Error::Inconsistent(format!("Ψ sends {lam} outside the target block")));
    }
    Ok(image)
}

/// Representatives of the Scopes classes of weight-2 blocks with hook cores.
pub fn hook_scopes_classes(prime: usize) -> Vec<(usize, usize)> {
    crate::weight2::valid_hooks(prime)
        .into_iter()
        .filter(|&(k, l)| k + l != prime + 1)
        .collect()
}

/// The representative in [`hook_scopes_classes`] of the class of (k, l).
pub fn scopes_representative(prime: usize, k: usize, l: usize) -> Option<(usize, usize)> {
    hook_core(prime, k, l)?;
    Some(if k + l == prime + 1 { (k - 1, l - 1) } else { (k, l) })
}

/// Checks the extremality of ᾱ within its ∂-class in B̄: lex-largest of all
/// partitions (k-steps) or lex-smallest p-regular (l-steps).
pub fn alpha_bar_extremal(pd: &PairData, bar: &BlockData, largest: bool) -> Result<bool> {
    let dc = bar.delta_of(&pd.alpha_bar)?;
    let p = pd.prime();
    let mut same = bar.partitions.iter().filter(|m| bar.data[*m] == dc);
    Ok(if largest {
        same.next() == Some(&pd.alpha_bar)
    } else {
        same.filter(|m| m.is_p_regular(p)).last() == Some(&pd.alpha_bar)
    })
}
