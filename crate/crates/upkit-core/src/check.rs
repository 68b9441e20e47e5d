//! Exhaustive per-class verifications used by the acceptance suite and `upkit verify`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::components::{char_group, in_canonical, CharFn};
use crate::moeglin::{arthur_character, merge_along, tempered_intersection};
use crate::oracle::Oracle;
use crate::params::{near_tempered_table, verify_almost_intro, ATable};
use crate::partition::{enumerate_classes, ClassPartition, GroupType, Partition};
use crate::pieces::{bvls_dual, is_special, piece_data, special_piece, t_up};
use crate::springer::{
    green_tableaux, is_springer_type, leq_dominance, p_set, standard_params, weakly_spherical,
    SpringerIndexData,
};
use crate::wreps::{induce, invariant_dim, irreducibles, sgn_hom_dim, single};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub check: &'static str,
    pub subject: String,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.check, self.subject, self.detail)
    }
}

pub type Outcome<T = ()> = core::result::Result<T, Failure>;

fn fail<T>(check: &'static str, subject: impl ToString, detail: impl ToString) -> Outcome<T> {
    Err(Failure { check, subject: subject.to_string(), detail: detail.to_string() })
}

fn subject(cp: &ClassPartition) -> String {
    format!("{} (s={})", cp, cp.s())
}

fn domain<T>(check: &'static str, cp: &ClassPartition, r: crate::Result<T>) -> Outcome<T> {
    r.or_else(|e| fail(check, subject(cp), format!("unexpected error {:?}", e)))
}

/// All classes of both types with `N ≤ max_n`.
pub fn classes_up_to(max_n: u64) -> Vec<ClassPartition> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for s in [1, -1] {
            if let Ok(gt) = GroupType::new(s, n) {
                out.extend(enumerate_classes(gt).expect("within default bound"));
            }
        }
    }
    out
}

/// `d` lands on specials, `d' ∘ d = T^{𝕀}` and the fibres of `d` are the special pieces.
pub fn dprop(gt: GroupType) -> Outcome {
    const C: &str = "dprop";
    let all = domain_gt(C, gt)?;
    let mut fibers: BTreeMap<Partition, BTreeSet<Partition>> = BTreeMap::new();
    for cp in &all {
        let d = bvls_dual(cp);
        if !is_special(&d) {
            return fail(C, subject(cp), format!("d = {} is not special", d));
        }
        let back = bvls_dual(&d);
        let up = domain(C, cp, t_up(cp, &piece_data(cp).i))?;
        if back.lambda() != up.lambda() {
            return fail(C, subject(cp), format!("d'd = {} but T^I = {}", back, up));
        }
        fibers.entry(d.lambda().clone()).or_default().insert(cp.lambda().clone());
    }
    for cp in all.iter().filter(|c| is_special(c)) {
        let spc: BTreeSet<Partition> = special_piece(cp).into_iter().map(|(_, m)| m.lambda().clone()).collect();
        let d = bvls_dual(cp);
        if fibers.get(d.lambda()) != Some(&spc) {
            return fail(C, subject(cp), "fibre of d differs from the special piece");
        }
    }
    Ok(())
}

fn domain_gt(check: &'static str, gt: GroupType) -> Outcome<Vec<ClassPartition>> {
    enumerate_classes(gt).or_else(|e| fail(check, format!("N={}", gt.N()), format!("{:?}", e)))
}

/// `|Spc(λ)| = 2^{|𝕁(λ)|}` with distinct members.
pub fn spc_cardinality(cp: &ClassPartition) -> Outcome {
    let j = piece_data(cp).j.len();
    let spc: BTreeSet<Partition> = special_piece(cp).into_iter().map(|(_, m)| m.lambda().clone()).collect();
    if spc.len() != 1 << j {
        return fail("spc", subject(cp), format!("|Spc| = {}, |J| = {}", spc.len(), j));
    }
    Ok(())
}

/// Brute-force L-parameters with the same infinitesimal character and dual orbit, for each
/// admissible central sign.
pub fn almost_intro(cp: &ClassPartition) -> Outcome {
    let zs: &[i8] = if cp.s() == 1 { &[1] } else { &[1, -1] };
    for &z in zs {
        if !domain("almost-intro", cp, verify_almost_intro(cp, z))? {
            return fail("almost-intro", subject(cp), format!("parameter sets differ for z={}", z));
        }
    }
    Ok(())
}

/// Littlewood–Richardson induction against character sums on `W_n`.
pub fn induction_oracle(o: &Oracle, n: u64) -> Outcome<usize> {
    let mut pairs = 0;
    for i in 0..=n {
        for x in irreducibles(i) {
            for y in irreducibles(n - i) {
                let want = o.oracle_mult(&x, &y).or_else(|e| fail("induction", n, format!("{:?}", e)))?;
                if induce(&x, &y) != want {
                    return fail("induction", format!("{} ⊠ {}", x, y), "decompositions differ");
                }
                pairs += 1;
            }
        }
    }
    Ok(pairs)
}

/// `dim π^{W_{n,i}}` and the `sgn^±` twist against brute-force averages.
pub fn first_reduction(o: &Oracle, n: u64) -> Outcome<usize> {
    let mut checked = 0;
    for b in irreducibles(n) {
        let pi = single(b.clone());
        for i in 0..=n {
            let (a, x) = (invariant_dim(&pi, n, i), o.fixed_dim(&b, i, false));
            let (c, y) = (sgn_hom_dim(&pi, n, i), o.fixed_dim(&b, i, true));
            if a != x || c != y {
                return fail("first-reduction", format!("{} i={}", b, i), format!("{}/{} vs {}/{}", a, c, x, y));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn springer_chars(cp: &ClassPartition) -> Outcome<Vec<(CharFn, SpringerIndexData)>> {
    let mut out = Vec::new();
    for e in char_group(cp) {
        let sd = domain("springer", cp, SpringerIndexData::new(cp, &e))?;
        if is_springer_type(&sd) {
            out.push((e, sd));
        }
    }
    Ok(out)
}

/// `ε ∈ A†(O_λ)` against weak sphericity from the tableau algorithm, over Springer-type `ε`.
/// Returns the number of characters compared.
pub fn theorem_c(cp: &ClassPartition) -> Outcome<usize> {
    const C: &str = "theorem-c";
    let chars = springer_chars(cp)?;
    for (e, sd) in &chars {
        let lhs = in_canonical(cp, e);
        let rhs = domain(C, cp, weakly_spherical(sd))?;
        if lhs != rhs {
            return fail(C, subject(cp), format!("eps={}: canonical={} spherical={}", e, lhs, rhs));
        }
    }
    Ok(chars.len())
}

/// First-row law and pairwise incomparability of `P(λ,ε,Δ_G,τ_G)`.
pub fn first_row(cp: &ClassPartition) -> Outcome<usize> {
    const C: &str = "first-row";
    let chars = springer_chars(cp)?;
    for (e, sd) in &chars {
        let (d, t) = standard_params(sd);
        let tabs = domain(C, cp, green_tableaux(sd, d, t))?;
        if tabs.is_empty() {
            return fail(C, subject(cp), format!("eps={}: no tableaux", e));
        }
        for tab in &tabs {
            let rest: Vec<usize> = (1..=sd.len()).filter(|i| !tab.rows[0].contains(i)).collect();
            if rest != sd.x_eps() {
                return fail(C, subject(cp), format!("eps={}: first row {:?}", e, tab.rows[0]));
            }
        }
        let (p, _) = domain(C, cp, p_set(sd, d, t))?;
        for x in &p {
            for y in &p {
                if x != y && leq_dominance(x, y, d as i64, t as i64) {
                    return fail(C, subject(cp), format!("eps={}: {} ≤ {}", e, x, y));
                }
            }
        }
    }
    Ok(chars.len())
}

fn same_multiset(a: &ATable, b: &ATable) -> bool {
    let mut x = a.entries().to_vec();
    let mut y = b.entries().to_vec();
    x.sort_unstable();
    y.sort_unstable();
    x == y
}

/// Merging a tempered member along `J` succeeds exactly on the intersection, keeps the
/// character on untouched entries, and produces the sign identities on merged entries.
/// Returns the number of successful merges.
pub fn moeglin_round_trip(cp: &ClassPartition) -> Outcome<usize> {
    const C: &str = "moeglin";
    let zs: &[i8] = if cp.s() == 1 { &[1] } else { &[1, -1] };
    let jj = piece_data(cp).j;
    let mut merged = 0;
    for &z in zs {
        for mask in 0u64..(1 << jj.len()) {
            let j: Vec<u64> = (0..jj.len()).filter(|x| mask >> x & 1 == 1).map(|x| jj[x]).collect();
            let inter = domain(C, cp, tempered_intersection(cp, z, &j))?;
            let target = domain(C, cp, near_tempered_table(cp, &j, z))?;
            for e in char_group(cp) {
                let subj = || format!("{} z={} J={:?} eps={}", subject(cp), z, j, e);
                let res = merge_along(cp, &e, &j, z);
                if res.is_ok() != inter.contains(&e) {
                    return fail(C, subj(), format!("merge {} but intersection says {}", res.is_ok(), !res.is_ok()));
                }
                let Ok((ao, mp)) = res else { continue };
                merged += 1;
                if !same_multiset(&ao.table, &target) || !ao.is_standard() {
                    return fail(C, subj(), "merged order is not the standard order on m_{λ,J}");
                }
                let ch = domain(C, cp, arthur_character(&ao, &mp))?;
                let eps_at = |c: u64| if c == 0 { 0 } else { e.eps(c) as u8 };
                for &i in &ao.order {
                    let (a, b) = ao.table.entries()[i];
                    if mp.l.get(&i) != Some(&0) {
                        return fail(C, subj(), format!("l({},{}) ≠ 0", a, b));
                    }
                    let eta = mp.eta.get(&i).copied();
                    let ok = if b == 1 {
                        ch.get(&(a, 1)) == Some(&eps_at(a))
                            && eta == Some(if eps_at(a) == 1 { -1 } else { 1 })
                    } else {
                        let lo = if eps_at(a - 1) == 1 { -1 } else { 1 };
                        let hi = if eps_at(a + 1) == 1 { 1 } else { -1 };
                        ch.get(&(a, 2)) == Some(&1) && eta == Some(lo) && eta == Some(hi)
                    };
                    if !ok {
                        return fail(C, subj(), format!("sign identity fails at ({},{})", a, b));
                    }
                }
            }
        }
    }
    Ok(merged)
}
