use std::collections::BTreeSet;

use upkit_core::components::{char_group, CharFn};
use upkit_core::params::{
    enumerate_lparams_with_inf_char, inf_char, l_param_of_table, near_tempered_table, quasi_basic_inf_char,
    verify_almost_intro, weak_packet, ATable,
};
use upkit_core::partition::{enumerate_classes, ClassPartition, GroupType};
use upkit_core::pieces::is_special;

fn classes(n: u64) -> Vec<ClassPartition> {
    let s = if n % 2 == 1 { 1 } else { -1 };
    enumerate_classes(GroupType::new(s, n).unwrap()).unwrap()
}

#[test]
fn almost_intro_small() {
    for n in 1..=10 {
        for cp in classes(n) {
            for z in [1, -1] {
                if z == -1 && cp.s() == 1 {
                    continue;
                }
                assert!(verify_almost_intro(&cp, z).unwrap(), "{} z={}", cp, z);
            }
        }
    }
}

#[test]
fn half_intro_and_closure() {
    for n in 1..=16 {
        for cp in classes(n).iter().filter(|c| is_special(c)) {
            let chi = quasi_basic_inf_char(cp, 1).unwrap();
            let rows = weak_packet(cp, 1).unwrap();
            let mus: BTreeSet<_> = rows.iter().map(|r| r.mu.clone()).collect();
            assert_eq!(mus.len(), rows.len());
            for r in &rows {
                assert_eq!(inf_char(&r.phi), chi);
                assert_eq!(r.phi.lambda(), r.mu);
                assert_eq!(r.table.partition(), r.mu);
                assert!(r.phi.is_self_dual());
            }
            if n <= 12 {
                for phi in enumerate_lparams_with_inf_char(&chi, cp.gt()).unwrap() {
                    assert!(phi.lambda().dominated_by(cp.lambda()), "{} above {}", phi.lambda(), cp);
                }
            }
        }
    }
}

#[test]
fn lpacket_size_formula() {
    for n in 1..=20 {
        for cp in classes(n) {
            let k = cp.s_set().len();
            let want = if cp.s0().is_empty() { 1 << k } else { 1 << (k - 1) };
            assert_eq!(char_group(&cp).len(), want);
            let sub: Vec<CharFn> = char_group(&cp);
            assert!(sub.iter().all(|e| e.in_p0(&cp)));
            let t = ATable::from_partition(&cp, 1).unwrap();
            assert_eq!(l_param_of_table(&t).lambda(), *cp.lambda());
        }
    }
}

#[test]
fn z_does_not_change_partition_data() {
    for n in (2..=14).step_by(2) {
        for cp in classes(n).iter().filter(|c| is_special(c)) {
            let a = weak_packet(cp, 1).unwrap();
            let b = weak_packet(cp, -1).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert_eq!((&x.mu, x.lpacket_size), (&y.mu, y.lpacket_size));
                assert_eq!(x.table.entries(), y.table.entries());
            }
            for (x, _) in a.iter().zip(&b) {
                assert_eq!(near_tempered_table(cp, &x.j, -1).unwrap().z(), -1);
            }
        }
    }
}
