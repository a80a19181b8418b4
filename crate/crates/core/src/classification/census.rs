//! Morita classes of hook blocks of weight 2.

use serde::Serialize;

use crate::error::{check_prime, Error, Result};
use crate::weight2::valid_hooks;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoritaClass {
    pub representative: (usize, usize),
    /// Members in the order of [`valid_hooks`].
    pub members: Vec<(usize, usize)>,
}

/// Hook pairs `(k, l)` directly related to `(k, l)` by one of the four
/// Morita rules: conjugation, and the two moves available when k+l = p−1.
pub fn morita_moves(prime: usize, k: usize, l: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    if k >= 1 {
        out.push((l + 1, k - 1));
    }
    if k + l + 1 == prime {
        out.push((k + 1, l + 1));
        out.push((l + 2, k));
    }
    out
}

/// The class representative condition: k = l = 0, or k > l with
/// 1 ≤ k+l ≤ p−1 or p+1 < k+l ≤ 2p−1.
pub fn is_morita_representative(prime: usize, k: usize, l: usize) -> bool {
    let s = k + l;
    (k, l) == (0, 0) || (k > l && ((1..prime).contains(&s) || (prime + 1 < s && s < 2 * prime)))
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        (parent[y], y) = (r, parent[y]);
    }
    r
}

/// Classes of valid hooks under the closure of [`morita_moves`], ordered by
/// their representatives' position in [`valid_hooks`].
pub fn morita_census(prime: usize) -> Result<Vec<MoritaClass>> {
    check_prime(prime, 3)?;
    let hooks = valid_hooks(prime);
    let index = |h: (usize, usize)| hooks.iter().position(|&x| x == h);
    let mut parent: Vec<usize> = (0..hooks.len()).collect();
    for (a, &(k, l)) in hooks.iter().enumerate() {
        for m in morita_moves(prime, k, l) {
            let b = index(m).ok_or_else(|| Error::Inconsistent(format!("move {k},{l} -> {m:?} leaves the hooks")))?;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut root_of = std::collections::BTreeMap::new();
    for (a, &h) in hooks.iter().enumerate() {
        let r = find(&mut parent, a);
        let slot = *root_of.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[slot].push(h);
    }
    let mut out: Vec<MoritaClass> = classes
        .into_iter()
        .map(|members| {
            let reps: Vec<_> = members.iter().copied().filter(|&(k, l)| is_morita_representative(prime, k, l)).collect();
            match reps[..] {
                [representative] => Ok(MoritaClass { representative, members }),
                _ => Err(Error::Inconsistent(format!("class {members:?} has representatives {reps:?}"))),
            }
        })
        .collect::<Result<_>>()?;
    out.sort_by_key(|c| index(c.representative));
    Ok(out)
}
