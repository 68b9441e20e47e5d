use std::collections::BTreeMap;

use upkit_core::components::{char_group, in_canonical, CharFn};
use upkit_core::partition::{all_partitions, enumerate_classes, ClassPartition, GroupType, Partition};
use upkit_core::springer::*;
use upkit_core::wreps::{irreducibles, Bipartition};

fn good_classes(s: i8, max_n: u64) -> Vec<ClassPartition> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let Ok(gt) = GroupType::new(s, n) else { continue };
        out.extend(enumerate_classes(gt).unwrap().into_iter().filter(|c| c.is_good_parity()));
    }
    out
}

fn springer_pairs(max_n: u64) -> Vec<(ClassPartition, CharFn, SpringerIndexData)> {
    let mut out = Vec::new();
    for s in [1, -1] {
        for cp in good_classes(s, max_n) {
            for e in char_group(&cp) {
                let sd = SpringerIndexData::new(&cp, &e).unwrap();
                if is_springer_type(&sd) {
                    out.push((cp.clone(), e, sd));
                }
            }
        }
    }
    out
}

#[test]
fn canonical_iff_weakly_spherical() {
    let mut counts = [0usize; 2];
    for (cp, e, sd) in springer_pairs(22) {
        let a = in_canonical(&cp, &e);
        assert_eq!(a, weakly_spherical(&sd).unwrap(), "{} eps={}", cp, e);
        counts[a as usize] += 1;
    }
    assert!(counts[0] > 0 && counts[1] > 0);
}

#[test]
fn first_row_and_maximality() {
    for (cp, e, sd) in springer_pairs(22) {
        let (d, t) = standard_params(&sd);
        let tabs = green_tableaux(&sd, d, t).unwrap();
        assert!(!tabs.is_empty());
        for tab in &tabs {
            let rest: Vec<usize> = (1..=sd.len()).filter(|i| !tab.rows[0].contains(i)).collect();
            assert_eq!(rest, sd.x_eps(), "{} eps={}", cp, e);
            let flat: usize = tab.rows.iter().map(|r| r.len()).sum();
            assert_eq!(flat, sd.len());
            for r in &tab.rows {
                assert!(r.windows(2).all(|w| w[0] < w[1] && sd.epsbar(w[0]) != sd.epsbar(w[1])));
            }
        }
        let (p, _) = p_set(&sd, d, t).unwrap();
        for x in &p {
            assert_eq!(x.n(), sd.rank());
            for y in &p {
                if x != y {
                    assert!(!leq_dominance(x, y, d as i64, t as i64), "{} eps={}: {} ≤ {}", cp, e, x, y);
                }
            }
        }
    }
}

#[test]
fn index_set_lemmas() {
    for s in [1, -1] {
        for cp in good_classes(s, 22) {
            for e in char_group(&cp) {
                let sd = SpringerIndexData::new(&cp, &e).unwrap();
                let from_max: Vec<usize> =
                    sd.x().iter().copied().filter(|&i| sd.s_max().contains(&sd.part(i))).collect();
                assert_eq!(from_max, sd.x_s(), "{}", cp);
                let sub = sd.x_eps().iter().all(|i| sd.x_s().contains(i));
                assert_eq!(sub, in_canonical(&cp, &e), "{} eps={}", cp, e);
                let mut all: Vec<usize> = sd.e_plus().iter().chain(sd.e_minus()).copied().collect();
                all.sort();
                assert_eq!(all, (1..=sd.len()).collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn zero_tail_exit_is_sound() {
    let mut fired = 0;
    for (cp, e, sd) in springer_pairs(22) {
        if zero_tail_exit(&sd).unwrap() {
            fired += 1;
            assert!(in_canonical(&cp, &e), "{} eps={}", cp, e);
        }
    }
    assert!(fired > 0);
}

#[test]
fn springer_map_is_injective() {
    for s in [1i8, -1] {
        for n in 0..=8u64 {
            let big_n = if s == 1 { 2 * n + 1 } else { 2 * n };
            if big_n == 0 {
                continue;
            }
            let gt = GroupType::new(s, big_n).unwrap();
            let mut seen: BTreeMap<Bipartition, String> = BTreeMap::new();
            let irr = irreducibles(n);
            for cp in enumerate_classes(gt).unwrap().into_iter().filter(|c| c.is_good_parity()) {
                for e in char_group(&cp) {
                    let sd = SpringerIndexData::new(&cp, &e).unwrap();
                    if !is_springer_type(&sd) {
                        continue;
                    }
                    let b = springer_bipartition(&sd).unwrap();
                    assert!(irr.contains(&b));
                    let tag = format!("{} {}", cp, e);
                    if let Some(prev) = seen.insert(b.clone(), tag.clone()) {
                        panic!("{} and {} both give {}", prev, tag, b);
                    }
                }
            }
        }
    }
}

/// Symbol algorithm for the trivial local system, on increasing parts.
fn symbol_springer(s: i8, lambda: &Partition) -> Bipartition {
    let mut parts: Vec<u64> = lambda.parts().iter().rev().copied().collect();
    let want_odd = s == 1;
    if (parts.len() % 2 == 1) != want_odd {
        parts.insert(0, 0);
    }
    let star: Vec<u64> = parts.iter().enumerate().map(|(i, &p)| p + i as u64).collect();
    let odd: Vec<u64> = star.iter().filter(|x| *x % 2 == 1).map(|x| (x - 1) / 2).collect();
    let even: Vec<u64> = star.iter().filter(|x| *x % 2 == 0).map(|x| x / 2).collect();
    let shift = |v: &[u64]| Partition::new(v.iter().enumerate().map(|(i, &x)| x - i as u64).filter(|&x| x > 0).collect());
    Bipartition::new(shift(&odd), shift(&even))
}

#[test]
fn trivial_local_system_matches_symbols() {
    for s in [1, -1] {
        for cp in good_classes(s, 16) {
            let sd = SpringerIndexData::new(&cp, &CharFn::trivial()).unwrap();
            assert_eq!(springer_bipartition(&sd).unwrap(), symbol_springer(s, cp.lambda()), "{} s={}", cp, s);
        }
    }
}

#[test]
fn general_reduces_to_good_parity() {
    let gt = GroupType::new(1, 17).unwrap();
    let cp = upkit_core::partition::classify(Partition::new(vec![5, 4, 4, 3, 1]), gt).unwrap();
    let small = cp.good_parity_part();
    for e in char_group(&cp) {
        let direct = weakly_spherical(&SpringerIndexData::new(&small, &e).unwrap()).unwrap();
        assert_eq!(weakly_spherical_general(&cp, &e).unwrap(), direct);
    }
    let gt = GroupType::new(1, 29).unwrap();
    let cp = upkit_core::partition::classify(Partition::new(vec![10, 10, 4, 4, 1]), gt).unwrap();
    assert!(weakly_spherical_general(&cp, &CharFn::trivial()).unwrap());
}

fn irr_count(n: u64) -> usize {
    (0..=n).map(|a| all_partitions(a).len() * all_partitions(n - a).len()).sum()
}

fn subsets(s: &[u64]) -> Vec<CharFn> {
    (0..1u64 << s.len())
        .map(|m| CharFn::new((0..s.len()).filter(|i| m >> i & 1 == 1).map(|i| s[i]).collect()))
        .collect()
}

fn springer_count(s: i8, n: u64, full: bool) -> (usize, usize) {
    let big = if s == 1 { 2 * n + 1 } else { 2 * n };
    let (mut hits, mut total) = (0, 0);
    for cp in enumerate_classes(GroupType::new(s, big).unwrap()).unwrap() {
        let gp = cp.good_parity_part();
        let chars = if full { subsets(cp.s_set()) } else { char_group(&cp) };
        for e in chars {
            total += 1;
            if gp.lambda().is_empty() || is_springer_type(&SpringerIndexData::new(&gp, &e).unwrap()) {
                hits += 1;
            }
        }
    }
    (hits, total)
}

/// Springer-type pairs, reduced to good parity, are counted by `|Irr W_n|`. For `s = 1` the
/// remaining pairs come from the cuspidal data of `SO_{d²}`, `d` odd.
#[test]
fn springer_type_counts() {
    for n in 1..=9u64 {
        let (hits, total) = springer_count(1, n, false);
        assert_eq!(hits, irr_count(n), "s=1 n={}", n);
        let cusp: usize = (1..)
            .step_by(2)
            .map(|d: u64| (d * d - 1) / 2)
            .take_while(|&k| k <= n)
            .map(|k| irr_count(n - k))
            .sum();
        assert_eq!(total, cusp, "s=1 n={}", n);
        assert_eq!(springer_count(-1, n, true).0, irr_count(n), "s=-1 n={}", n);
    }
}
