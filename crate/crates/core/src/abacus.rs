//! Abacus displays with `p` runners.
//!
//! Position `q` sits on runner `(q mod p) + 1` in row `q / p`, rows counted
//! from 0 at the top.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDisplay")]
pub struct AbacusDisplay {
    prime: usize,
    bead_count: usize,
    beads: BTreeSet<usize>,
}

#[derive(Deserialize)]
struct RawDisplay {
    prime: usize,
    bead_count: usize,
    beads: Vec<usize>,
}

impl TryFrom<RawDisplay> for AbacusDisplay {
    type Error = Error;

    fn try_from(raw: RawDisplay) -> Result<Self> {
        let d = AbacusDisplay::from_beads(raw.prime, raw.beads)?;
        if d.bead_count != raw.bead_count {
            return Err(Error::InvalidDisplay("bead_count does not match beads".into()));
        }
        Ok(d)
    }
}

/// One divisible hook, recorded as a bead and a gap above it on one runner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DivisibleHook {
    pub bead_row: usize,
    pub gap_row: usize,
    pub runner: usize,
    pub hook_length: usize,
    pub leg_length: usize,
}

/// The three weight-2 constellations. Runner indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Weight2Label {
    /// ⟨i⟩: one bead two rows below its packed position on runner i.
    Single(usize),
    /// ⟨j,i⟩ with j > i: one bead one row down on each of two runners.
    Two(usize, usize),
    /// ⟨i,i⟩: a gap followed by two beads on runner i.
    Same(usize),
}

impl fmt::Display for Weight2Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight2Label::Single(i) => write!(f, "<{i}>"),
            Weight2Label::Two(j, i) => write!(f, "<{j},{i}>"),
            Weight2Label::Same(i) => write!(f, "<{i},{i}>"),
        }
    }
}

impl AbacusDisplay {
    pub fn from_beads(prime: usize, beads: impl IntoIterator<Item = usize>) -> Result<Self> {
        if prime < 2 {
            return Err(Error::InvalidPrime(prime));
        }
        let mut set = BTreeSet::new();
        for b in beads {
            if !set.insert(b) {
                return Err(Error::InvalidDisplay(format!("bead {b} repeated")));
            }
        }
        if set.is_empty() {
            return Err(Error::InvalidDisplay("no beads".into()));
        }
        Ok(AbacusDisplay { prime, bead_count: set.len(), beads: set })
    }

    /// The display of `lambda` with `bead_count` beads at positions λ_i − i + t.
    pub fn new(lambda: &Partition, prime: usize, bead_count: usize) -> Result<Self> {
        if bead_count < lambda.len().max(1) {
            return Err(Error::InvalidDisplay(format!(
                "{bead_count} beads cannot display {lambda}"
            )));
        }
        Self::from_beads(prime, (1..=bead_count).map(|i| lambda.part(i - 1) + bead_count - i))
    }

    pub fn prime(&self) -> usize {
        self.prime
    }

    pub fn bead_count(&self) -> usize {
        self.bead_count
    }

    pub fn beads(&self) -> &BTreeSet<usize> {
        &self.beads
    }

    pub fn has_bead(&self, q: usize) -> bool {
        self.beads.contains(&q)
    }

    /// Position of row `row` on runner `runner` (1-based).
    pub fn position(&self, row: usize, runner: usize) -> usize {
        row * self.prime + runner - 1
    }

    pub fn has_bead_at(&self, row: usize, runner: usize) -> bool {
        self.has_bead(self.position(row, runner))
    }

    pub fn runner_of(&self, q: usize) -> usize {
        q % self.prime + 1
    }

    pub fn row_of(&self, q: usize) -> usize {
        q / self.prime
    }

    pub fn to_partition(&self) -> Partition {
        let parts: Vec<usize> = self
            .beads
            .iter()
            .rev()
            .enumerate()
            .map(|(i, &b)| b - (self.bead_count - 1 - i))
            .collect();
        Partition::new(parts).expect("bead positions give a partition")
    }

    /// Beads per runner, runner 1 first.
    pub fn runner_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.prime];
        for &b in &self.beads {
            counts[b % self.prime] += 1;
        }
        counts
    }

    /// Exchanges runners `i − 1` and `i` row by row.
    pub fn swap_runners(&self, i: usize) -> Result<Self> {
        if i < 2 || i > self.prime {
            return Err(Error::InvalidDisplay(format!("cannot swap runners {} and {i}", i as isize - 1)));
        }
        let beads = self.beads.iter().map(|&q| match q % self.prime {
            r if r == i - 1 => q - 1,
            r if r == i - 2 => q + 1,
            _ => q,
        });
        Self::from_beads(self.prime, beads)
    }

    /// Number of beads at positions strictly between `a` and `b` (a < b).
    fn beads_between(&self, a: usize, b: usize) -> usize {
        if b <= a + 1 {
            return 0;
        }
        self.beads.range(a + 1..b).count()
    }

    /// Beads that can move one row up, with the leg length of the removed rim hook.
    pub fn movable_beads_up(&self) -> Vec<(usize, usize)> {
        self.beads
            .iter()
            .filter(|&&q| q >= self.prime && !self.has_bead(q - self.prime))
            .map(|&q| (q, self.beads_between(q - self.prime, q)))
            .collect()
    }

    /// Moves the bead at `q` one row up. The caller guarantees it is movable.
    pub fn move_up(&self, q: usize) -> Result<Self> {
        if !self.has_bead(q) || q < self.prime || self.has_bead(q - self.prime) {
            return Err(Error::InvalidDisplay(format!("bead at {q} cannot move up")));
        }
        let mut beads = self.beads.clone();
        beads.remove(&q);
        beads.insert(q - self.prime);
        Ok(AbacusDisplay { beads, ..self.clone() })
    }

    /// Moves the bead at `q` one row down, if the position below is free.
    pub fn move_down(&self, q: usize) -> Result<Self> {
        if !self.has_bead(q) || self.has_bead(q + self.prime) {
            return Err(Error::InvalidDisplay(format!("bead at {q} cannot move down")));
        }
        let mut beads = self.beads.clone();
        beads.remove(&q);
        beads.insert(q + self.prime);
        Ok(AbacusDisplay { beads, ..self.clone() })
    }

    /// The display with every bead pushed up its runner.
    pub fn pushed_up(&self) -> Self {
        let counts = self.runner_counts();
        let beads = counts
            .iter()
            .enumerate()
            .flat_map(|(r, &m)| (0..m).map(move |row| row * self.prime + r))
            .collect();
        AbacusDisplay { beads, ..self.clone() }
    }

    /// Total number of one-row up-moves needed to reach the core.
    pub fn weight(&self) -> usize {
        let rows = |d: &AbacusDisplay| d.beads.iter().map(|&q| q / d.prime).sum::<usize>();
        rows(self) - rows(&self.pushed_up())
    }

    /// All (bead, gap above it on the same runner) pairs.
    pub fn divisible_hooks(&self) -> Vec<DivisibleHook> {
        let mut out = Vec::new();
        for &q in &self.beads {
            let (r, runner) = (self.row_of(q), self.runner_of(q));
            for s in 0..r {
                let g = self.position(s, runner);
                if !self.has_bead(g) {
                    out.push(DivisibleHook {
                        bead_row: r,
                        gap_row: s,
                        runner,
                        hook_length: self.prime * (r - s),
                        leg_length: self.beads_between(g, q),
                    });
                }
            }
        }
        out
    }

    /// Gaps above each bead, summed per runner.
    fn runner_weights(&self) -> Vec<(usize, Vec<usize>)> {
        (1..=self.prime)
            .map(|runner| {
                let per_bead: Vec<usize> = self
                    .beads
                    .iter()
                    .filter(|&&q| self.runner_of(q) == runner)
                    .map(|&q| (0..self.row_of(q)).filter(|&s| !self.has_bead_at(s, runner)).count())
                    .filter(|&g| g > 0)
                    .collect();
                (per_bead.iter().sum(), per_bead)
            })
            .collect()
    }

    /// The weight-2 constellation of this display.
    pub fn weight2_label(&self) -> Result<Weight2Label> {
        let w = self.weight();
        if w != 2 {
            return Err(Error::NotWeightTwo(w));
        }
        let rw = self.runner_weights();
        let active: Vec<usize> = (0..self.prime).filter(|&r| rw[r].0 > 0).collect();
        Ok(match active.as_slice() {
            [r] if rw[*r].1.len() == 1 => Weight2Label::Single(r + 1),
            [r] => Weight2Label::Same(r + 1),
            [i, j] => Weight2Label::Two(j + 1, i + 1),
            _ => unreachable!("weight 2 spreads over at most two runners"),
        })
    }

    /// Bullet/dash grid, one line per row.
    pub fn pretty(&self) -> String {
        let last = self.beads.iter().next_back().map_or(0, |&q| self.row_of(q));
        (0..=last)
            .map(|row| {
                (1..=self.prime)
                    .map(|r| if self.has_bead_at(row, r) { "•" } else { "−" })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The p-core of `lambda` and its p-weight.
pub fn p_core_and_weight(lambda: &Partition, prime: usize) -> Result<(Partition, usize)> {
    let d = AbacusDisplay::new(lambda, prime, lambda.len().max(1))?;
    Ok((d.pushed_up().to_partition(), d.weight()))
}
