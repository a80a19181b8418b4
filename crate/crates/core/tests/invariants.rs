//! Exhaustive invariant sweeps over bounded sizes.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::brute_partitions;
use hookquiver::classification::{boundary_profile, gen_ref_quiver, iso, morita_census, reference_params};
use hookquiver::pairs::{alpha_bar_extremal, find_pairs, regularity_profile, scopes_representative, PairData};
use hookquiver::partitions::partitions_of;
use hookquiver::principal_seed::{
    check_reciprocity, delta_table_labels, is_regular_label, label_partition, projective_columns_labels, seed_quiver,
    specht_structures,
};
use hookquiver::quiver::{ChainOrder, QuiverCache};
use hookquiver::weight2::{block_partitions, delta, hook_core, lambda_minus, lambda_plus, valid_hooks, BlockData};
use hookquiver::{p_core_and_weight, AbacusDisplay, Partition};

#[test]
fn partition_orders_and_conjugation() {
    for n in 0..=30 {
        for x in partitions_of(n) {
            assert_eq!(x.conjugate().conjugate(), x);
        }
    }
    for n in 0..=20 {
        for x in partitions_of(n) {
            for p in [3, 5, 7] {
                assert_eq!(x.is_p_restricted(p), x.conjugate().is_p_regular(p));
            }
            let mut a: Vec<usize> = x.hook_lengths().concat();
            let mut b: Vec<usize> = x.conjugate().hook_lengths().concat();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b, "{x}");
        }
    }
    for n in 0..=15 {
        let all = partitions_of(n);
        assert_eq!(all.len(), brute_partitions(n).len());
        for a in &all {
            for b in &all {
                let ab = a.lex_cmp(b).unwrap();
                assert_eq!(ab, b.lex_cmp(a).unwrap().reverse());
                if a.dominance_leq(b).unwrap() {
                    assert_ne!(ab, std::cmp::Ordering::Greater, "{a} ⊴ {b}");
                }
            }
        }
        assert!(all.windows(2).all(|w| w[0].lex_cmp(&w[1]).unwrap() == std::cmp::Ordering::Greater));
    }
}

#[test]
fn abacus_sweeps() {
    for n in 0..=25 {
        for x in partitions_of(n) {
            let v = x.parts().to_vec();
            for p in [3, 5, 7] {
                let t0 = x.len().max(1);
                for t in t0..=x.len() + 2 * p {
                    let d = AbacusDisplay::new(&x, p, t).unwrap();
                    assert_eq!(d.to_partition(), x);
                    assert_eq!(AbacusDisplay::new(&x, p, t + 1).unwrap().to_partition(), x);
                }
                let d = AbacusDisplay::new(&x, p, t0).unwrap();
                let mut got: Vec<(usize, usize)> =
                    d.divisible_hooks().iter().map(|h| (h.hook_length, h.leg_length)).collect();
                let mut want = common::divisible_hooks(&v, p);
                got.sort_unstable();
                want.sort_unstable();
                assert_eq!(got, want, "{x} p={p}");
                let (_, w) = p_core_and_weight(&x, p).unwrap();
                assert_eq!(got.len(), w, "{x} p={p}");
            }
        }
    }
}

#[test]
fn bead_moves_preserve_core() {
    for p in [3, 5, 7] {
        for n in 0..=25 {
            for x in partitions_of(n) {
                let (core, w) = p_core_and_weight(&x, p).unwrap();
                if w > 3 {
                    continue;
                }
                let d = AbacusDisplay::new(&x, p, x.len().max(1)).unwrap();
                for (q, _) in d.movable_beads_up() {
                    let y = d.move_up(q).unwrap().to_partition();
                    assert_eq!(y.size() + p, x.size());
                    assert_eq!(p_core_and_weight(&y, p).unwrap(), (core.clone(), w - 1));
                }
            }
        }
    }
}

#[test]
fn weight_two_sweeps() {
    for p in [3, 5, 7] {
        for (k, l) in valid_hooks(p) {
            let label = hook_core(p, k, l).unwrap();
            let parts = block_partitions(&label).unwrap();
            assert_eq!(parts.len(), 2 * p + p * (p - 1) / 2, "p={p} ({k},{l})");
            for x in &parts {
                let v = x.parts();
                if common::deltas(v, p) == [0].into() {
                    let hooks = common::divisible_hooks(v, p);
                    if hooks.iter().all(|h| h.0 == p) {
                        assert_eq!(hooks[0].1.abs_diff(hooks[1].1), 1, "{x}");
                    }
                }
                if let Some(up) = lambda_plus(x, p).unwrap() {
                    if x.is_p_regular(p) {
                        assert_eq!(lambda_minus(&up, p).unwrap().as_ref(), Some(x));
                    }
                }
                if let Some(down) = lambda_minus(x, p).unwrap() {
                    if x.is_p_restricted(p) {
                        assert_eq!(lambda_plus(&down, p).unwrap().as_ref(), Some(x));
                    }
                }
            }
        }
    }
    for p in [5, 7] {
        for (label, dc) in delta_table_labels(p) {
            assert_eq!(delta(&label_partition(p, label).unwrap(), p).unwrap(), dc, "p={p} {label:?}");
        }
    }
}

#[test]
fn pair_sweeps() {
    for p in [5, 7] {
        for (k, l) in valid_hooks(p) {
            let upper = hook_core(p, k, l).unwrap();
            for (gap, lower) in find_pairs(&upper).unwrap() {
                if gap != 1 {
                    continue;
                }
                let pd = PairData::new(&upper, &lower).unwrap();
                regularity_profile(&pd).unwrap();
                if pd.case_no == 3 {
                    assert!(!pd.beta.is_p_regular(p) && !pd.alpha_bar.is_p_restricted(p));
                }
                let bar = BlockData::new(&lower).unwrap();
                let kstep = lower.hook_coords() == Some((k - 1, l));
                assert!(alpha_bar_extremal(&pd, &bar, kstep).unwrap(), "p={p} ({k},{l})");
            }
        }
    }
}

#[test]
fn seed_block_sweeps() {
    for p in [5, 7, 11] {
        check_reciprocity(p).unwrap();
        let cols = projective_columns_labels(p);
        assert_eq!(cols.len(), (p + 1) * p / 2 - 1);
        assert!(cols.iter().all(|(l, f)| is_regular_label(*l) && f[0] == *l && (3..=4).contains(&f.len())));
        for (lam, s) in specht_structures(p).unwrap() {
            let factors: Vec<&Partition> = s.factors().collect();
            let distinct: BTreeSet<&Partition> = factors.iter().copied().collect();
            assert_eq!(factors.len(), distinct.len(), "{lam}");
            assert!(s.layers.len() <= 3);
            assert_eq!(s.layers.len() == 3, lam.is_p_regular(p) && lam.is_p_restricted(p), "{lam}");
        }
        let q = seed_quiver(p).unwrap();
        for &(u, v) in &q.edges {
            assert_eq!(q.vertices[u].delta.abs_diff(q.vertices[v].delta), 1);
        }
    }
}

#[test]
fn quiver_sweeps() {
    for p in [5, 7, 11] {
        let mut cache = QuiverCache::new(p, ChainOrder::KFirst).unwrap();
        for (k, l) in valid_hooks(p) {
            let q = cache.get(k, l).unwrap().clone();
            let bd = BlockData::new(&q.block).unwrap();
            assert_eq!(q.vertices.len(), bd.regular().count(), "p={p} ({k},{l})");
            for &(u, v) in &q.edges {
                assert!(u < v);
                assert_eq!(q.vertices[u].delta.abs_diff(q.vertices[v].delta), 1);
            }
            if let Some((pd, _)) = cache.step_data(k, l).cloned() {
                let lower = pd.lower.hook_coords().unwrap();
                let q_bar = cache.get(lower.0, lower.1).unwrap();
                let d = q_bar.delta_colour(&pd.alpha_bar).unwrap();
                let row: Vec<&Partition> =
                    q_bar.vertices.iter().filter(|v| v.delta == d.delta && v.colour == d.colour).map(|v| &v.partition).collect();
                let want = if lower == (k - 1, l) { row.iter().max() } else { row.iter().min() };
                assert_eq!(want, Some(&&pd.alpha_bar), "p={p} ({k},{l})");
            }
        }
    }
    let mut cache = QuiverCache::new(5, ChainOrder::KFirst).unwrap();
    cache.get(1, 0).unwrap();
    let (pd, es) = cache.step_data(1, 0).unwrap();
    assert_eq!(es.specht["beta"].layers, [BTreeSet::from([pd.alpha.clone()])]);
    let again = hookquiver::quiver::compute_quiver(7, 4, 2).unwrap();
    assert_eq!(again, hookquiver::quiver::compute_quiver(7, 4, 2).unwrap());
}

#[test]
fn classification_sweeps() {
    for n in [5, 6] {
        let graphs: Vec<_> = reference_params(n).unwrap().into_iter().map(|q| gen_ref_quiver(q).unwrap()).collect();
        for a in &graphs {
            for b in &graphs {
                if iso(a, b).is_some() {
                    assert_eq!(boundary_profile(a).invariant(), boundary_profile(b).invariant());
                }
            }
        }
    }
    for p in [3, 5, 7] {
        let hooks = valid_hooks(p);
        let mut scopes: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for &(k, l) in &hooks {
            scopes.entry(scopes_representative(p, k, l).unwrap()).or_default().push((k, l));
        }
        for class in morita_census(p).unwrap() {
            let members: BTreeSet<_> = class.members.iter().copied().collect();
            for &(k, l) in &members {
                let rep = scopes_representative(p, k, l).unwrap();
                assert!(scopes[&rep].iter().all(|m| members.contains(m)), "p={p}: Scopes class of ({k},{l})");
                if k > 0 {
                    assert!(members.contains(&(l + 1, k - 1)), "p={p}: conjugate of ({k},{l})");
                }
            }
        }
    }
}
