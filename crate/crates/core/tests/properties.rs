mod common;

use proptest::prelude::*;

use common::{core_weight, delta_colour, part};
use hookquiver::classification::{boundary_profile, iso, iso_plain_backtrack, PlainGraph};
use hookquiver::pairs::{find_pairs, Direction, PairData};
use hookquiver::quiver::compute_quiver;
use hookquiver::weight2::{block_partitions, delta, hook_core, valid_hooks};
use hookquiver::{p_core_and_weight, AbacusDisplay, Partition};

fn partition() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..12, 0..10).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn prime() -> impl Strategy<Value = usize> {
    prop::sample::select(vec![3usize, 5, 7])
}

/// A random hook block and a random index into its partitions.
fn block_member() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    prime().prop_flat_map(|p| {
        let hooks = valid_hooks(p);
        (Just(p), prop::sample::select(hooks), any::<prop::sample::Index>())
            .prop_map(|(p, (k, l), i)| (p, k, l, i.index(usize::MAX)))
    })
}

proptest! {
    #[test]
    fn abacus_round_trip(v in partition(), p in prime(), extra in 0usize..20) {
        let lam = part(&v);
        let t = v.len().max(1) + extra;
        let d = AbacusDisplay::new(&lam, p, t).unwrap();
        prop_assert_eq!(d.to_partition(), lam.clone());
        prop_assert_eq!(d.bead_count(), t);
        let json = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<AbacusDisplay>(&json).unwrap(), d);
    }

    #[test]
    fn core_and_weight_match_diagram_stripping(v in partition(), p in prime()) {
        let (core, w) = p_core_and_weight(&part(&v), p).unwrap();
        let (oc, ow) = core_weight(&v, p);
        prop_assert_eq!(core.parts(), oc.as_slice());
        prop_assert_eq!(w, ow);
    }

    #[test]
    fn conjugation(v in partition(), p in prime()) {
        let lam = part(&v);
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.is_p_restricted(p), lam.conjugate().is_p_regular(p));
        prop_assert_eq!(lam.is_p_regular(p), common::is_regular(&v, p));
        prop_assert_eq!(lam.is_p_restricted(p), common::is_restricted(&v, p));
    }

    #[test]
    fn display_parse_round_trip(v in partition()) {
        let lam = part(&v);
        prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam);
    }

    #[test]
    fn delta_matches_diagram_oracle((p, k, l, i) in block_member()) {
        let parts = block_partitions(&hook_core(p, k, l).unwrap()).unwrap();
        let lam = &parts[i % parts.len()];
        let dc = delta(lam, p).unwrap();
        prop_assert_eq!((dc.delta, dc.colour), delta_colour(lam.parts(), p));
    }

    #[test]
    fn phi_round_trips_on_good_partitions((p, k, l, i) in block_member()) {
        let upper = hook_core(p, k, l).unwrap();
        for (gap, lower) in find_pairs(&upper).unwrap() {
            if gap != 1 {
                continue;
            }
            let pd = PairData::new(&upper, &lower).unwrap();
            let parts = block_partitions(&upper).unwrap();
            let lam = &parts[i % parts.len()];
            if pd.is_exceptional(lam) {
                continue;
            }
            let down = pd.phi(lam, Direction::Down).unwrap();
            prop_assert_eq!(&pd.phi(&down, Direction::Up).unwrap(), lam);
        }
    }
}

fn relabelled(g: &PlainGraph, perm: &[usize]) -> PlainGraph {
    PlainGraph::new(g.vertex_count(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn iso_and_boundary_invariant_under_relabelling(
        hook in prop::sample::select(valid_hooks(5)),
        seed in Just((0..14usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let g = compute_quiver(5, hook.0, hook.1).unwrap().to_plain();
        let h = relabelled(&g, &seed);
        prop_assert!(iso(&g, &h).is_some());
        prop_assert!(iso_plain_backtrack(&g, &h).is_some());
        prop_assert_eq!(boundary_profile(&g).invariant(), boundary_profile(&h).invariant());
    }

    #[test]
    fn removing_an_edge_breaks_iso(
        hook in prop::sample::select(valid_hooks(5)),
        pick in any::<prop::sample::Index>(),
    ) {
        let g = compute_quiver(5, hook.0, hook.1).unwrap().to_plain();
        let drop = *pick.get(&g.edges().iter().collect::<Vec<_>>());
        let h = PlainGraph::new(g.vertex_count(), g.edges().iter().copied().filter(|e| e != drop));
        prop_assert!(iso(&g, &h).is_none());
        prop_assert!(iso_plain_backtrack(&g, &h).is_none());
    }
}
