//! Diagram-based oracles that never touch an abacus display.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hookquiver::weight2::Colour;
use hookquiver::Partition;

pub fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// All partitions of n by recursion on the largest part.
pub fn brute_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for x in 1..=rest.min(max) {
            cur.push(x);
            go(rest - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate(l: &[usize]) -> Vec<usize> {
    let width = l.first().copied().unwrap_or(0);
    (0..width).map(|j| l.iter().filter(|&&x| x > j).count()).collect()
}

/// Every rim h-hook of the diagram, as (remaining partition, leg length).
pub fn rim_hooks(l: &[usize], h: usize) -> Vec<(Vec<usize>, usize)> {
    let c = conjugate(l);
    let mut out = Vec::new();
    for i in 0..l.len() {
        for j in 0..l[i] {
            let arm = l[i] - 1 - j;
            let leg = c[j] - 1 - i;
            if arm + leg + 1 != h {
                continue;
            }
            let mut m = l.to_vec();
            for r in i..i + leg {
                m[r] = l[r + 1] - 1;
            }
            m[i + leg] = j;
            while m.last() == Some(&0) {
                m.pop();
            }
            out.push((m, leg));
        }
    }
    out
}

/// p-core and p-weight by stripping rim p-hooks in any order.
pub fn core_weight(l: &[usize], p: usize) -> (Vec<usize>, usize) {
    let mut cur = l.to_vec();
    let mut w = 0;
    while let Some((m, _)) = rim_hooks(&cur, p).into_iter().next() {
        cur = m;
        w += 1;
    }
    (cur, w)
}

/// Leg differences over all orders of removing two rim p-hooks.
pub fn deltas(l: &[usize], p: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for (m, leg1) in rim_hooks(l, p) {
        for (_, leg2) in rim_hooks(&m, p) {
            out.insert(leg1.abs_diff(leg2));
        }
    }
    out
}

/// (hook length, leg length) of every cell whose hook length is divisible by p.
pub fn divisible_hooks(l: &[usize], p: usize) -> Vec<(usize, usize)> {
    let c = conjugate(l);
    let mut out = Vec::new();
    for i in 0..l.len() {
        for j in 0..l[i] {
            let (arm, leg) = (l[i] - 1 - j, c[j] - 1 - i);
            if (arm + leg + 1) % p == 0 {
                out.push((arm + leg + 1, leg));
            }
        }
    }
    out
}

/// ∂ and, when ∂ = 0, the colour, for a weight-2 partition.
pub fn delta_colour(l: &[usize], p: usize) -> (usize, Option<Colour>) {
    let ds = deltas(l, p);
    assert_eq!(ds.len(), 1, "{l:?}: removal orders disagree: {ds:?}");
    let d = *ds.first().unwrap();
    if d > 0 {
        return (d, None);
    }
    let hooks = divisible_hooks(l, p);
    assert_eq!(hooks.len(), 2, "{l:?}");
    let colour = if let Some(&(_, leg)) = hooks.iter().find(|h| h.0 == 2 * p) {
        matches!(leg % 4, 0 | 3)
    } else {
        hooks.iter().map(|h| h.1).max().unwrap() % 2 == 0
    };
    (0, Some(if colour { Colour::Black } else { Colour::White }))
}

pub fn is_regular(l: &[usize], p: usize) -> bool {
    let mut run = 0;
    let mut prev = 0;
    for &x in l {
        run = if x == prev { run + 1 } else { 1 };
        prev = x;
        if run >= p {
            return false;
        }
    }
    true
}

pub fn is_restricted(l: &[usize], p: usize) -> bool {
    (0..l.len()).all(|i| l[i] - l.get(i + 1).copied().unwrap_or(0) < p)
}

/// The hook (k, 1^l) as a part list.
pub fn hook(k: usize, l: usize) -> Vec<usize> {
    if k == 0 {
        return Vec::new();
    }
    std::iter::once(k).chain(std::iter::repeat(1).take(l)).collect()
}

/// All partitions with the given p-core and weight 2, lex decreasing.
pub fn block(core: &[usize], p: usize) -> Vec<Vec<usize>> {
    let n = core.iter().sum::<usize>() + 2 * p;
    let mut out: Vec<Vec<usize>> =
        brute_partitions(n).into_iter().filter(|l| core_weight(l, p) == (core.to_vec(), 2)).collect();
    out.sort();
    out.reverse();
    out
}

/// (k, l) such that (k, 1^l) is a p-core, found by stripping hooks.
pub fn hook_cores(p: usize) -> Vec<(usize, usize)> {
    let mut out = vec![(0, 0)];
    for k in 1..=2 * p {
        for l in 0..2 * p {
            let h = hook(k, l);
            if core_weight(&h, p).1 == 0 {
                out.push((k, l));
            }
        }
    }
    out
}
