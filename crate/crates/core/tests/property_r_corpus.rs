use proptest::prelude::*;

use scottlab_core::order::corpus::{exhaustive_up_to, random_poset};
use scottlab_core::property_r::*;
use scottlab_core::topo::{derive_topology, is_scott_open, TopologyKind};
use scottlab_core::{FinPoset, Subset};

/// Property R straight from the definition, over arbitrary families of
/// principal filters: some finite subfamily of every family lands inside each
/// Scott open containing its meet.
fn r_by_definition(p: &FinPoset) -> bool {
    let n = p.len();
    let meet = |fam: u64| {
        let mut m = Subset::full(n);
        for i in (0..n).filter(|i| fam >> i & 1 == 1) {
            m.intersect_with(p.up(i));
        }
        m
    };
    let opens = derive_topology(p, TopologyKind::Scott).try_opens().unwrap().to_vec();
    (1u64..1 << n).all(|fam| {
        opens
            .iter()
            .filter(|u| meet(fam).is_subset(u))
            .all(|u| (1u64..1 << n).any(|sub| sub & fam == sub && meet(sub).is_subset(u)))
    })
}

#[test]
fn routes_agree_on_the_corpus() {
    for p in exhaustive_up_to(4).unwrap() {
        let r = has_property_r(&p).unwrap();
        assert_eq!(r.definitional_route, Some(r.closed_route));
        assert_eq!(r_by_definition(&p), r.holds);
        assert_eq!(characterization_conditions(&p).unwrap(), [r.holds; 4]);
        assert!(wf_coherent_implies_r(&p).unwrap().holds);
    }
}

#[test]
fn q_lattice_of_a_chain() {
    // for a chain, ω*(P) is the upper sets together with ∅
    let p = FinPoset::chain(4);
    let q = build_q_lattice(&p).unwrap();
    assert_eq!(q.len(), 5);
    assert!(q.elements.iter().all(|c| p.is_upper(c)));
}

fn poset(size: usize) -> impl Strategy<Value = FinPoset> {
    any::<u64>().prop_map(move |seed| {
        use rand::SeedableRng;
        random_poset(size, &mut rand_chacha::ChaCha8Rng::seed_from_u64(seed))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn phi_is_an_upper_scott_open(p in (1usize..=5).prop_flat_map(poset)) {
        let q = build_q_lattice(&p).unwrap();
        prop_assert!(q.is_meet_closed());
        prop_assert!(check_m_continuous(&q).unwrap().holds);
        for u in derive_topology(&p, TopologyKind::Scott).try_opens().unwrap() {
            let r = phi(&q, u).unwrap();
            prop_assert!(r.upper && r.scott_open);
            prop_assert!(phi_preimage_upper(&q, &r));
        }
    }

    #[test]
    fn m_is_monotone(p in (1usize..=6).prop_flat_map(poset)) {
        let q = build_q_lattice(&p).unwrap();
        for x in 0..p.len() {
            for y in 0..p.len() {
                prop_assert_eq!(&q.elements[q.m(x, y)], &p.up(x).intersection(p.up(y)));
                for x2 in p.up(x).iter() {
                    prop_assert!(q.elements[q.m(x2, y)].is_subset(&q.elements[q.m(x, y)]));
                }
            }
        }
    }

    #[test]
    fn implication_chain_on_random_posets(p in poset(8)) {
        let c = implication_chain_check(&p).unwrap();
        prop_assert!(c.violations.is_empty(), "{:?}", c.conditions);
        prop_assert!(c.lawson_decomposition_agrees);
        let s = sober_pipeline(&p).unwrap();
        prop_assert!(s.consistent);
    }

    #[test]
    fn omega_star_matches_r(p in (1usize..=6).prop_flat_map(poset)) {
        let scott = derive_topology(&p, TopologyKind::Scott);
        prop_assert_eq!(omega_star_compact_check(&scott).unwrap().holds, has_property_r(&p).unwrap().holds);
    }

    #[test]
    fn phi_rejects_non_open_sets(p in (2usize..=5).prop_flat_map(poset), mask in any::<u64>()) {
        let q = build_q_lattice(&p).unwrap();
        let s = Subset::from_mask(p.len(), mask & ((1 << p.len()) - 1));
        prop_assert_eq!(phi(&q, &s).is_ok(), is_scott_open(&p, &s));
    }
}
