use proptest::prelude::*;

use upkit_core::components::{canonical_subgroup, char_group, in_canonical, CharFn};
use upkit_core::params::{packets_containing, weak_packet};
use upkit_core::partition::{all_partitions, enumerate_classes, ClassPartition, GroupType, Partition};
use upkit_core::pieces::{piece_data, special_piece};
use upkit_core::wreps::{lr_mult, pieri};

fn partition(max_part: u64, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::new)
}

fn class(max_n: u64) -> impl Strategy<Value = ClassPartition> {
    (1..=max_n, any::<prop::sample::Index>()).prop_map(|(n, idx)| {
        let s = if n % 2 == 1 { 1 } else { -1 };
        let all = enumerate_classes(GroupType::new(s, n).unwrap()).unwrap();
        all[idx.index(all.len())].clone()
    })
}

/// Number of standard tableaux by the hook length formula.
fn hooks(p: &Partition) -> u64 {
    let t = p.transpose();
    let n = p.total();
    let mut num: u128 = (1..=n as u128).product();
    for i in 0..p.len() {
        for j in 0..p.parts()[i] as usize {
            let h = p.parts()[i] as u128 - j as u128 + t.parts()[j] as u128 - i as u128 - 1;
            num /= h;
        }
    }
    num as u64
}

fn choose(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn union_then_difference(a in partition(9, 6), b in partition(9, 6)) {
        prop_assert_eq!(a.union(&b).difference(&b).unwrap(), a.clone());
        prop_assert_eq!(a.union(&b).total(), a.total() + b.total());
    }

    #[test]
    fn transpose_is_an_involution(a in partition(8, 8)) {
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        prop_assert_eq!(a.transpose().total(), a.total());
        prop_assert_eq!(a.transpose().len() as u64, a.parts().first().copied().unwrap_or(0));
    }

    #[test]
    fn lr_is_symmetric_and_counts_dimensions(mu in partition(3, 3), nu in partition(3, 3)) {
        let n = mu.total() + nu.total();
        let mut dim = 0;
        for lam in all_partitions(n) {
            let c = lr_mult(&mu, &nu, &lam).unwrap();
            prop_assert_eq!(c, lr_mult(&nu, &mu, &lam).unwrap());
            dim += c * hooks(&lam);
        }
        prop_assert_eq!(dim, choose(n, mu.total()) * hooks(&mu) * hooks(&nu));
    }

    #[test]
    fn pieri_agrees_with_lr(mu in partition(4, 3), k in 0u64..4) {
        let row = Partition::new(if k == 0 { vec![] } else { vec![k] });
        let mut want: Vec<Partition> = all_partitions(mu.total() + k)
            .into_iter()
            .filter(|lam| lr_mult(&mu, &row, lam).unwrap() == 1)
            .collect();
        let mut got = pieri(&mu, k);
        want.sort();
        got.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn character_group_closed_under_product(cp in class(20)) {
        let group = char_group(&cp);
        prop_assert!(group.iter().any(|e| e.subset().is_empty()));
        let canon = canonical_subgroup(&cp);
        for x in &canon {
            prop_assert!(in_canonical(&cp, x));
            for y in &canon {
                prop_assert!(canon.contains(&x.product(y)));
            }
        }
        for x in &group {
            prop_assert_eq!(x.product(x), CharFn::trivial());
        }
    }

    #[test]
    fn weak_packet_is_indexed_by_the_piece(cp in class(20)) {
        let rows = weak_packet(&cp, 1).unwrap();
        prop_assert_eq!(rows.len(), 1usize << piece_data(&cp).j.len());
        let piece = special_piece(&cp);
        for (r, (j, mu)) in rows.iter().zip(&piece) {
            prop_assert_eq!(&r.j, j);
            prop_assert_eq!(&r.mu, mu.lambda());
            prop_assert_eq!(r.lpacket_size, char_group(mu).len());
            prop_assert_eq!(r.table.partition().total(), cp.lambda().total());
        }
        for e in canonical_subgroup(&cp) {
            let found = packets_containing(&cp, &e, 1).unwrap();
            prop_assert!(found.iter().any(|(j, _)| j.is_empty()));
        }
    }
}
