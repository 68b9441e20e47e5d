//! Acceptance criteria 1–10. Prints one PASS/FAIL line per criterion and exits non-zero if any
//! criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use upkit_core::check::{self, classes_up_to};
use upkit_core::components::{canonical_subgroup, char_group, CharFn};
use upkit_core::oracle::Oracle;
use upkit_core::params::{packets_containing, weak_packet};
use upkit_core::partition::{classify, GroupType, Partition};
use upkit_core::pieces::special_piece;
use upkit_core::springer::weakly_spherical_general;

type Verdict = Result<String, String>;
type Criterion = Box<dyn Fn() -> Verdict>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn sp8() -> Verdict {
    let cp = classify(Partition::new(vec![5, 3, 1]), GroupType::new(1, 9).map_err(err)?).map_err(err)?;
    let a0 = char_group(&cp);
    ensure(a0.len() == 4, || format!("|A0| = {}", a0.len()))?;
    let dagger: Vec<Vec<u64>> = canonical_subgroup(&cp).iter().map(|e| e.subset().to_vec()).collect();
    ensure(dagger == [vec![], vec![1, 3]], || format!("A† = {:?}", dagger))?;
    let spc: BTreeSet<Vec<u64>> = special_piece(&cp).iter().map(|(_, m)| m.lambda().parts().to_vec()).collect();
    ensure(spc == BTreeSet::from([vec![5, 3, 1], vec![4, 4, 1]]), || format!("Spc = {:?}", spc))?;
    let rows = weak_packet(&cp, 1).map_err(err)?;
    let sizes: Vec<usize> = rows.iter().map(|r| r.lpacket_size).collect();
    ensure(sizes == [4, 1], || format!("sizes {:?}", sizes))?;
    let js: Vec<Vec<u64>> =
        packets_containing(&cp, &CharFn::new(vec![1, 3]), 1).map_err(err)?.into_iter().map(|(j, _)| j).collect();
    ensure(js == [vec![], vec![4]], || format!("membership {:?}", js))?;
    let mut spherical = Vec::new();
    for e in &a0 {
        if weakly_spherical_general(&cp, e).map_err(err)? {
            spherical.push(e.subset().to_vec());
        }
    }
    ensure(spherical == [vec![], vec![1, 3]], || format!("spherical {:?}", spherical))?;
    Ok("|A0|=4 |A†|=2 sizes=(4,1) total=5".into())
}

fn triangular() -> Verdict {
    let mut notes = Vec::new();
    for k in 1..=3u32 {
        let parts: Vec<u64> = (0..=2 * k as u64).rev().map(|i| 2 * i + 1).collect();
        let n: u64 = parts.iter().sum();
        let cp = classify(Partition::new(parts), GroupType::new(1, n).map_err(err)?).map_err(err)?;
        let a0 = char_group(&cp).len();
        let dagger = canonical_subgroup(&cp).len();
        let spc = special_piece(&cp).len();
        let total: usize = weak_packet(&cp, 1).map_err(err)?.iter().map(|r| r.lpacket_size).sum();
        let want = (4usize.pow(k), 2usize.pow(k), 2usize.pow(k), 5usize.pow(k));
        ensure((a0, dagger, spc, total) == want, || format!("k={}: got {:?}, want {:?}", k, (a0, dagger, spc, total), want))?;
        notes.push(format!("N={}:{}", n, total));
    }
    Ok(notes.join(" "))
}

fn dprop() -> Verdict {
    let mut count = 0;
    for n in 1..=24 {
        for s in [1, -1] {
            if let Ok(gt) = GroupType::new(s, n) {
                check::dprop(gt).map_err(err)?;
                count += 1;
            }
        }
    }
    Ok(format!("{} group types, N ≤ 24", count))
}

fn per_class(max_n: u64, good_only: bool, f: impl Fn(&upkit_core::partition::ClassPartition) -> check::Outcome<usize>) -> Verdict {
    let classes: Vec<_> = classes_up_to(max_n).into_iter().filter(|c| !good_only || c.is_good_parity()).collect();
    let mut total = 0;
    for c in &classes {
        total += f(c).map_err(err)?;
    }
    Ok(format!("{} classes, {} checks, N ≤ {}", classes.len(), total, max_n))
}

fn oracle(first: bool) -> Verdict {
    let o = Oracle::new(5).map_err(err)?;
    let mut total = 0;
    for n in 0..=5 {
        total += if first { check::first_reduction(&o, n) } else { check::induction_oracle(&o, n) }.map_err(err)?;
    }
    Ok(format!("{} comparisons, n ≤ 5", total))
}

fn main() {
    let criteria: Vec<(&str, Criterion)> = vec![
        ("sp8 fixture", Box::new(sp8)),
        ("triangular family", Box::new(triangular)),
        ("duality properties", Box::new(dprop)),
        ("special piece cardinality", Box::new(|| per_class(24, false, |c| check::spc_cardinality(c).map(|_| 1)))),
        ("L-parameter enumeration", Box::new(|| per_class(14, false, |c| check::almost_intro(c).map(|_| 1)))),
        ("weyl group induction oracle", Box::new(|| oracle(false))),
        ("fixed vectors", Box::new(|| oracle(true))),
        ("canonical iff weakly spherical", Box::new(|| per_class(22, true, check::theorem_c))),
        ("first row and incomparability", Box::new(|| per_class(22, true, check::first_row))),
        ("moeglin round trip", Box::new(|| per_class(14, false, check::moeglin_round_trip))),
    ];
    let limits = [1, 30, 120, 120, 300, 600, 600, 600, 600, 600].map(Duration::from_secs);
    let mut failed = 0;
    for (i, ((name, run), limit)) in criteria.iter().zip(limits).enumerate() {
        let start = Instant::now();
        let verdict = run();
        let took = start.elapsed();
        let verdict = match verdict {
            Ok(note) if took > limit => Err(format!("{} but took {:.2?} (limit {:?})", note, took, limit)),
            v => v,
        };
        match verdict {
            Ok(note) => println!("PASS {:>2} {} ({:.2?}): {}", i + 1, name, took, note),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {} ({:.2?}): {}", i + 1, name, took, why);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
