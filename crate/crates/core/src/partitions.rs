//! Integer partitions: conjugation, orderings, regularity, hook lengths.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored as its positive parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The hook partition (k, 1^l). `hook(0, 0)` is the empty partition.
    pub fn hook(k: usize, l: usize) -> Result<Self> {
        if k == 0 {
            if l != 0 {
                return Err(Error::InvalidPartition(format!("hook (0,1^{l})")));
            }
            return Ok(Self::empty());
        }
        let mut parts = vec![k];
        parts.extend(std::iter::repeat(1).take(l));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The size |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&x| x > c).count())
            .collect();
        Partition { parts }
    }

    /// No part occurs `prime` or more times.
    pub fn is_p_regular(&self, prime: usize) -> bool {
        let mut i = 0;
        while i < self.parts.len() {
            let j = i + self.parts[i..].iter().take_while(|&&x| x == self.parts[i]).count();
            if j - i >= prime {
                return false;
            }
            i = j;
        }
        true
    }

    /// All successive differences (with a trailing zero) are below `prime`.
    pub fn is_p_restricted(&self, prime: usize) -> bool {
        (0..self.parts.len()).all(|i| self.part(i) - self.part(i + 1) < prime)
    }

    /// Lexicographic comparison of two partitions of the same size.
    pub fn lex_cmp(&self, other: &Partition) -> Result<Ordering> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        Ok(self.parts.cmp(&other.parts))
    }

    /// `self ⊴ other` in the dominance order.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &row)| (0..row).map(|c| (row - c - 1) + (conj.part(c) - r - 1) + 1).collect())
            .collect()
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// Parses a comma-separated list such as `4,3`; `()` or the empty string
/// give the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for x in (1..=rest.min(max)).rev() {
            cur.push(x);
            go(rest - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 3]).conjugate(), p(&[2, 2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1, 1]).conjugate(), p(&[3, 1, 1]));
    }

    #[test]
    fn regularity_examples() {
        assert!(!p(&[2, 2, 2]).is_p_regular(3));
        assert!(!p(&[6, 1, 1, 1, 1, 1]).is_p_regular(5));
        assert!(p(&[6, 3, 3, 3, 2, 2]).is_p_regular(5));
        assert!(!p(&[6, 1]).is_p_restricted(5));
        assert!(p(&[2, 2, 1]).is_p_restricted(3));
        assert!(p(&[6, 2, 1, 1, 1]).is_p_restricted(5));
    }

    #[test]
    fn orders() {
        assert_eq!(p(&[5, 2]).lex_cmp(&p(&[4, 3])).unwrap(), Ordering::Greater);
        assert_eq!(p(&[10, 1, 1, 1, 1]).lex_cmp(&p(&[6, 6, 2])).unwrap(), Ordering::Greater);
        assert_eq!(p(&[4, 3]).lex_cmp(&p(&[4, 3])).unwrap(), Ordering::Equal);
        assert!(p(&[4, 3]).lex_cmp(&p(&[4])).is_err());
        assert!(p(&[1, 1, 1, 1]).dominance_leq(&p(&[4])).unwrap());
        assert!(!p(&[3, 3]).dominance_leq(&p(&[4, 1, 1])).unwrap());
        assert!(!p(&[4, 1, 1]).dominance_leq(&p(&[3, 3])).unwrap());
        assert!(p(&[3, 3]).dominance_leq(&p(&[3, 3])).unwrap());
        assert!(p(&[3]).dominance_leq(&p(&[2])).is_err());
    }

    #[test]
    fn hooks() {
        assert_eq!(p(&[6, 3, 3, 3, 2, 2]).hook_lengths()[0], vec![11, 10, 7, 3, 2, 1]);
        assert_eq!(p(&[1]).hook_lengths(), vec![vec![1]]);
        assert_eq!(p(&[4, 1]).hook_lengths()[0][0], 5);
    }

    #[test]
    fn parsing_and_json() {
        assert_eq!("4,3".parse::<Partition>().unwrap(), p(&[4, 3]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,4".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p(&[6, 3, 3, 3, 2, 2])).unwrap(), "[6,3,3,3,2,2]");
        let q: Partition = serde_json::from_str("[2,1,0]").unwrap();
        assert_eq!(q, p(&[2, 1]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }
}
