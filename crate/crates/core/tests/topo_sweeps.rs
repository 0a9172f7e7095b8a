use std::time::Instant;

use scottlab_core::order::corpus::{exhaustive_up_to, random};
use scottlab_core::topo::*;

#[test]
fn scott_spaces_of_small_posets() {
    let t = Instant::now();
    for p in exhaustive_up_to(5).unwrap() {
        let x = derive_topology(&p, TopologyKind::Scott);
        assert!(is_sober(&x).unwrap().holds);
        assert!(is_well_filtered(&x).unwrap().holds);
        assert!(is_coherent(&x).unwrap().holds);
        let f = classify_space(&x).unwrap();
        assert!(f.core_compact && f.upper_semicompact && f.d_space && f.c_space);
    }
    eprintln!("sweep took {:?}", t.elapsed());
}

#[test]
fn smyth_spaces_of_random_posets() {
    let t = Instant::now();
    for p in random(6, 11).take(200) {
        let x = derive_topology(&p, TopologyKind::Scott);
        let ps = smyth_power_space(&x).unwrap();
        assert!(is_sober(&ps).unwrap().holds, "{p:?}");
    }
    eprintln!("smyth took {:?}", t.elapsed());
}
