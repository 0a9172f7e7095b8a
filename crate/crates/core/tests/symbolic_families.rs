use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use scottlab_core::symbolic::facts::{certify_non_wf_witness, g_family_member};
use scottlab_core::symbolic::*;
use scottlab_core::Subset;

fn family() -> impl Strategy<Value = AmbientFamily> {
    prop_oneof![
        Just(AmbientFamily::Johnstone),
        (1u32..=6).prop_map(AmbientFamily::JohnstonePlusX),
        Just(AmbientFamily::Jia),
        Just(AmbientFamily::Lattice428),
        Just(AmbientFamily::NChain),
        (1u32..=5).prop_map(AmbientFamily::FlatAntichain),
    ]
}

fn max_depth(f: AmbientFamily) -> u32 {
    if f == AmbientFamily::Jia {
        5
    } else {
        10
    }
}

/// `(a,b) ≤ (c,d)` in Johnstone's space, coordinates with `None` for `∞`.
fn johnstone_le(a: u32, b: Option<u32>, c: u32, d: Option<u32>) -> bool {
    match (b, d) {
        (_, None) => a == c || b.is_some_and(|b| b <= c),
        (Some(b), Some(d)) => a == c && b <= d,
        (None, Some(_)) => false,
    }
}

fn split(e: &ElemCode) -> (u32, Option<u32>) {
    match *e {
        ElemCode::Pair(a, Coord::Fin(b)) => (a, Some(b)),
        ElemCode::Pair(a, Coord::Inf) => (a, None),
        _ => unreachable!("{e}"),
    }
}

#[test]
fn truncations_are_posets() {
    for f in [
        AmbientFamily::Johnstone,
        AmbientFamily::Jia,
        AmbientFamily::Lattice428,
        AmbientFamily::NChain,
    ] {
        for k in 1..=max_depth(f) {
            let t = truncate(f, k).unwrap();
            let codes = t.codes();
            for (i, a) in codes.iter().enumerate() {
                assert!(f.leq(a, a).unwrap());
                for (j, b) in codes.iter().enumerate() {
                    assert_eq!(t.poset().le(i, j), f.leq(a, b).unwrap());
                    if i != j && f.leq(a, b).unwrap() {
                        assert!(!f.leq(b, a).unwrap(), "{f}: {a} and {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn johnstone_order_matches_definition() {
    let f = AmbientFamily::Johnstone;
    let codes = truncation_codes(f, 7);
    for a in &codes {
        for b in &codes {
            let ((p, q), (r, s)) = (split(a), split(b));
            assert_eq!(f.leq(a, b).unwrap(), johnstone_le(p, q, r, s), "{a} ≤ {b}");
        }
    }
}

#[test]
fn g_members_and_witness() {
    let f = AmbientFamily::Johnstone;
    let codes = truncation_codes(f, 8);
    for excluded in [vec![], vec![1], vec![2, 5], vec![1, 2, 3, 4]] {
        let g = g_family_member(&excluded);
        for e in &codes {
            let expected = matches!(*e, ElemCode::Pair(n, Coord::Inf) if !excluded.contains(&n));
            assert_eq!(member(f, &g, e).unwrap(), expected, "{e}");
        }
    }
    assert!(certify_non_wf_witness(6).unwrap().certified);
}

#[test]
fn descriptors_complete_at_depth_three() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for f in [
        AmbientFamily::Johnstone,
        AmbientFamily::Jia,
        AmbientFamily::Lattice428,
        AmbientFamily::NChain,
    ] {
        let r = descriptor_completeness(f, 3, 0, &mut rng).unwrap();
        assert!(r.holds, "{f}: {r:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tower_embeds(f in family(), k in 1u32..5) {
        let (a, b) = (truncate(f, k).unwrap(), truncate(f, k + 1).unwrap());
        let map = a.inclusion_into(&b);
        for i in 0..a.len() {
            prop_assert_eq!(b.code(map[i]), a.code(i));
            for j in 0..a.len() {
                prop_assert_eq!(a.poset().le(i, j), b.poset().le(map[i], map[j]));
            }
        }
    }

    #[test]
    fn classify_matches_brute_force(f in family(), seed in any::<u64>(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..5)) {
        let k = max_depth(f).min(4);
        let t = truncate(f, k).unwrap();
        let mut d: Vec<ElemCode> = picks.iter().map(|i| t.code(i.index(t.len()))).collect();
        let ups = t.poset().upper_bounds(&t.subset_of(&d));
        prop_assume!(!ups.is_empty());
        let ups: Vec<usize> = ups.iter().collect();
        d.push(t.code(ups[(seed % ups.len() as u64) as usize]));
        let brute = t.poset().lub(&t.subset_of(&d)).map(|i| t.code(i)).unwrap();
        prop_assert_eq!(classify_directed(f, &d, false).unwrap(), SupResult::HasMax(brute));
    }

    #[test]
    fn extracted_chain_is_cofinal(col in 1u32..6, height in 1u32..6, perm in Just((1u32..=40).collect::<Vec<_>>()).prop_shuffle(), certified in any::<bool>()) {
        let f = AmbientFamily::Johnstone;
        let column = ColumnId::Pair(col);
        let order: Vec<ElemCode> = perm.iter().map(|&h| column.elem(h + height)).collect();
        let source = order.clone();
        let chain: Vec<ElemCode> = extract_chain(f, Enumeration::stream(move |i| source.get(i - 1).copied().unwrap_or_else(|| column.elem(i as u32 + 100))), certified)
            .unwrap()
            .take(40)
            .collect::<Result<_, _>>()
            .unwrap();
        for (m, c) in chain.iter().enumerate() {
            prop_assert!(column.contains(c));
            for d in &order[..=m] {
                prop_assert!(f.leq(d, c).unwrap());
            }
        }
        if certified {
            prop_assert!(chain.windows(2).all(|w| w[0] != w[1] && f.leq(&w[0], &w[1]).unwrap()));
        }
    }

    #[test]
    fn finite_directed_sets_give_their_maximum(f in family(), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let t = truncate(f, 3).unwrap();
        let d: Vec<ElemCode> = picks.iter().map(|i| t.code(i.index(t.len()))).collect();
        let s: Subset = t.subset_of(&d);
        prop_assume!(t.poset().is_directed(&s));
        let top = t.code(t.poset().max_of(&s).unwrap());
        let chain: Vec<ElemCode> = extract_chain(f, Enumeration::Finite(d.clone()), false)
            .unwrap()
            .collect::<Result<_, _>>()
            .unwrap();
        prop_assert_eq!(chain, vec![top]);
        prop_assert!(extract_chain(f, Enumeration::Finite(d), true).is_err());
    }
}
