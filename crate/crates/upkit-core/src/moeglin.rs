//! Moeglin parameters `(l, η)` on near-tempered tables, admissible orders, the
//! Arthur-character formula and the intersection moves.
//!
//! Positions in an order are "extended": for `s = -1` position 0 is the phantom entry
//! `(0, 1)` with `l = 0`, `η = +1`, and real entries follow.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::components::{char_group, t_value, CharFn};
use crate::error::{Error, Result};
use crate::params::ATable;
use crate::partition::ClassPartition;
use crate::pieces::piece_data;

/// Bound on `|I(m^gp)|` for tables that are not near-tempered.
pub const MAX_GENERAL_ENTRIES: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoeglinParam {
    /// Keyed by table-entry index.
    pub l: BTreeMap<usize, u64>,
    /// Defined exactly where `l(i) ≠ b_i / 2`.
    pub eta: BTreeMap<usize, i8>,
}

impl MoeglinParam {
    fn l_at(&self, i: Option<usize>) -> u64 {
        i.map_or(0, |i| self.l[&i])
    }

    fn eta_at(&self, i: Option<usize>) -> Option<i8> {
        match i {
            None => Some(1),
            Some(i) => self.eta.get(&i).copied(),
        }
    }
}

fn gp_indices(m: &ATable) -> Vec<usize> {
    (0..m.entries().len()).filter(|&i| {
        let (a, b) = m.entries()[i];
        m.is_gp(a, b)
    })
    .collect()
}

/// All of `W(m)`.
pub fn moeglin_params(m: &ATable) -> Result<Vec<MoeglinParam>> {
    let idx = gp_indices(m);
    if !m.is_near_tempered() && idx.len() > MAX_GENERAL_ENTRIES {
        return Err(Error::BoundExceeded {
            what: "entries",
            value: idx.len() as u64,
            bound: MAX_GENERAL_ENTRIES as u64,
        });
    }
    let mut out = alloc::vec![MoeglinParam { l: BTreeMap::new(), eta: BTreeMap::new() }];
    for &i in &idx {
        let b = m.entries()[i].1;
        let mut next = Vec::new();
        for p in &out {
            for l in 0..=b / 2 {
                if 2 * l == b {
                    let mut q = p.clone();
                    q.l.insert(i, l);
                    next.push(q);
                } else {
                    for e in [1i8, -1] {
                        let mut q = p.clone();
                        q.l.insert(i, l);
                        q.eta.insert(i, e);
                        next.push(q);
                    }
                }
            }
        }
        out = next;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleOrder {
    pub table: ATable,
    /// Table-entry indices of `I(m^gp)`, first to last.
    pub order: Vec<usize>,
}

impl AdmissibleOrder {
    /// The order with the phantom prepended when `s = -1`.
    pub fn extended(&self) -> Vec<Option<usize>> {
        let mut v = Vec::with_capacity(self.order.len() + 1);
        if self.table.gt().s() == -1 {
            v.push(None);
        }
        v.extend(self.order.iter().map(|&i| Some(i)));
        v
    }

    pub fn is_standard(&self) -> bool {
        self.order.windows(2).all(|w| self.a(w[0]) <= self.a(w[1]))
    }

    fn a(&self, i: usize) -> u64 {
        self.table.entries()[i].0
    }

    fn ab(&self, i: Option<usize>) -> (u64, u64) {
        i.map_or((0, 1), |i| self.table.entries()[i])
    }

    /// The order sorting `I(m^gp)` by `(a, b)`.
    pub fn standard(table: &ATable) -> AdmissibleOrder {
        AdmissibleOrder { order: gp_indices(table), table: table.clone() }
    }
}

pub fn is_admissible(table: &ATable, order: &[usize]) -> bool {
    let ab = |i: usize| {
        let (a, b) = table.entries()[i];
        (a as i64 + b as i64, a as i64 - b as i64)
    };
    let Some(&first) = order.first() else {
        return true;
    };
    let beta_first = ab(first).1;
    for x in 0..order.len() {
        for y in x + 1..order.len() {
            let (ai, bi) = ab(order[x]);
            let (aj, bj) = ab(order[y]);
            let ok = bi <= bj || (beta_first >= 0 && bi > bj && bj >= 0 && ai <= aj);
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Every admissible order, identical entries kept in index order.
pub fn admissible_orders(m: &ATable) -> Vec<AdmissibleOrder> {
    let idx = gp_indices(m);
    let mut out = Vec::new();
    let mut used = alloc::vec![false; idx.len()];
    let mut cur = Vec::new();
    perms(m, &idx, &mut used, &mut cur, &mut out);
    out
}

fn perms(m: &ATable, idx: &[usize], used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<AdmissibleOrder>) {
    if cur.len() == idx.len() {
        if is_admissible(m, cur) {
            out.push(AdmissibleOrder { table: m.clone(), order: cur.clone() });
        }
        return;
    }
    for x in 0..idx.len() {
        if used[x] {
            continue;
        }
        // skip a copy if an earlier identical copy is still unused
        let e = m.entries()[idx[x]];
        if (0..x).any(|y| !used[y] && m.entries()[idx[y]] == e) {
            continue;
        }
        used[x] = true;
        cur.push(idx[x]);
        if is_admissible(m, cur) {
            perms(m, idx, used, cur, out);
        }
        cur.pop();
        used[x] = false;
    }
}

/// `γ(i) = (-1)^{|Z_i|}` for the entry at position `pos` of `ao.order`.
pub fn gamma(ao: &AdmissibleOrder, pos: usize) -> i8 {
    let a = ao.a(ao.order[pos]) as i64;
    let before = ao.order[..pos].iter().filter(|&&j| ao.a(j) as i64 == a + 1).count();
    let after = ao.order[pos + 1..].iter().filter(|&&j| ao.a(j) as i64 == a - 1).count();
    if (before + after) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The Arthur character as a 0/1 function on `S(m)`.
pub fn arthur_character(ao: &AdmissibleOrder, mp: &MoeglinParam) -> Result<BTreeMap<(u64, u64), u8>> {
    if !ao.table.is_near_tempered() {
        return Err(Error::NotNearTempered);
    }
    let mut out = BTreeMap::new();
    for (pos, &i) in ao.order.iter().enumerate() {
        let (a, b) = ao.table.entries()[i];
        let l = *mp.l.get(&i).ok_or(Error::ParamMismatch)?;
        let mut sign = gamma(ao, pos);
        if 2 * l < b {
            let eta = *mp.eta.get(&i).ok_or(Error::ParamMismatch)?;
            if (b / 2 + l) % 2 == 1 {
                sign = -sign;
            }
            if b % 2 == 1 {
                sign *= eta;
            }
        }
        let v = (sign == -1) as u8;
        if let Some(&old) = out.get(&(a, b)) {
            if old != v {
                return Err(Error::InconsistentCharacter);
            }
        }
        out.insert((a, b), v);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum MoveCase {
    Merge,
    SameB2,
    Gap3,
    Gap4,
    Phantom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveDescriptor {
    pub case: MoveCase,
    /// Extended position of the first entry involved.
    pub k: usize,
    pub target: ATable,
}

/// Case (1): merge extended positions `k, k+1` into `(a_k + 1, 2)`.
pub fn merge_move(
    ao: &AdmissibleOrder,
    mp: &MoeglinParam,
    k: usize,
) -> Result<(ATable, AdmissibleOrder, MoeglinParam)> {
    let ext = ao.extended();
    if k + 1 >= ext.len() {
        return Err(Error::MoveNotApplicable);
    }
    let (x, y) = (ext[k], ext[k + 1]);
    let (ak, bk) = ao.ab(x);
    let (ak1, bk1) = ao.ab(y);
    let y = y.ok_or(Error::MoveNotApplicable)?;
    let ok = ak1 == ak + 2
        && bk == 1
        && bk1 == 1
        && matches!((mp.eta_at(x), mp.eta_at(Some(y))), (Some(e), Some(f)) if f == -e);
    if !ok {
        return Err(Error::MoveNotApplicable);
    }
    let eta_star = mp.eta_at(x).unwrap();

    // new entry list with provenance; None marks the merged entry
    let mut tagged: Vec<((u64, u64), Option<usize>)> = ao
        .table
        .entries()
        .iter()
        .enumerate()
        .filter(|&(i, _)| Some(i) != x && i != y)
        .map(|(i, &e)| (e, Some(i)))
        .collect();
    tagged.push(((ak + 1, 2), None));
    tagged.sort();
    let new_of = |old: Option<usize>| tagged.iter().position(|t| t.1 == old).unwrap();

    let table = ATable::new(tagged.iter().map(|t| t.0).collect(), ao.table.gt(), ao.table.z())?;
    let mut order = Vec::new();
    for (p, e) in ext.iter().enumerate() {
        if p == k {
            order.push(new_of(None));
        } else if p == k + 1 || e.is_none() {
            continue;
        } else {
            order.push(new_of(*e));
        }
    }
    let mut np = MoeglinParam { l: BTreeMap::new(), eta: BTreeMap::new() };
    for (&i, &l) in &mp.l {
        if Some(i) != x && i != y {
            np.l.insert(new_of(Some(i)), l);
        }
    }
    for (&i, &e) in &mp.eta {
        if Some(i) != x && i != y {
            np.eta.insert(new_of(Some(i)), e);
        }
    }
    let star = new_of(None);
    np.l.insert(star, 0);
    np.eta.insert(star, eta_star);
    let ao2 = AdmissibleOrder { table: table.clone(), order };
    Ok((table, ao2, np))
}

fn replace(ao: &AdmissibleOrder, drop: &[Option<usize>], add: &[(i64, i64)]) -> Option<ATable> {
    let mut v: Vec<(u64, u64)> = ao
        .table
        .entries()
        .iter()
        .enumerate()
        .filter(|(i, _)| !drop.contains(&Some(*i)))
        .map(|(_, &e)| e)
        .collect();
    for &(a, b) in add {
        if a < 0 || b < 0 {
            return None;
        }
        if a > 0 && b > 0 {
            v.push((a as u64, b as u64));
        }
    }
    ATable::new(v, ao.table.gt(), ao.table.z()).ok()
}

// Targets `(a*, b*)`, `(a**, b**)` of the general intersection move.
fn star_pair(ak: i64, bk: i64, ak1: i64, bk1: i64) -> Option<[(i64, i64); 2]> {
    let (sa, sb, da, db) = (ak + ak1, bk + bk1, ak1 - ak, bk1 - bk);
    if (sa + db) % 2 != 0 || (sb + da) % 2 != 0 {
        return None;
    }
    Some([((sa + db) / 2, (sb + da) / 2), ((sa - db) / 2, (sb - da) / 2)])
}

/// Every move of the four near-tempered cases and of the phantom operation.
pub fn applicable_moves(ao: &AdmissibleOrder, mp: &MoeglinParam) -> Vec<MoveDescriptor> {
    let ext = ao.extended();
    let mut out = Vec::new();
    for k in 0..ext.len().saturating_sub(1) {
        let (x, y) = (ext[k], ext[k + 1]);
        let (ak, bk) = ao.ab(x);
        let (ak1, bk1) = ao.ab(y);
        let (lk, lk1) = (mp.l_at(x), mp.l_at(y));
        let (ek, ek1) = (mp.eta_at(x), mp.eta_at(y));
        let gap = ak1 as i64 - ak as i64;
        let sign_b = |e: Option<i8>, f: Option<i8>, flip: bool| match (e, f) {
            (Some(e), Some(f)) => f == if flip { -e } else { e },
            _ => false,
        };
        let case = if gap == 2 && bk == 1 && bk1 == 1 && sign_b(ek, ek1, true) {
            Some(MoveCase::Merge)
        } else if gap == 2 && bk == 2 && bk1 == 2 && lk + lk1 == 1 {
            Some(MoveCase::SameB2)
        } else if gap == 3 && lk == 0 && lk1 == 0 && sign_b(ek, ek1, bk % 2 == 1) {
            Some(MoveCase::Gap3)
        } else if gap == 4 && bk == 2 && bk1 == 2 && lk == 0 && lk1 == 0 && sign_b(ek, ek1, false) {
            Some(MoveCase::Gap4)
        } else {
            None
        };
        if let Some(case) = case {
            if let Some(pair) = star_pair(ak as i64, bk as i64, ak1 as i64, bk1 as i64) {
                if let Some(target) = replace(ao, &[x, y], &pair) {
                    out.push(MoveDescriptor { case, k, target });
                }
            }
        }
    }
    if let Some(&first) = ao.order.first() {
        let (a1, b1) = ao.table.entries()[first];
        let beta = a1 as i64 - b1 as i64;
        let dmin = a1.min(b1) as i64;
        let d = a1.max(b1) as i64;
        let l = mp.l[&first];
        let eta = mp.eta.get(&first).copied();
        let ok = match beta {
            0 => l == 0,
            1 => l == 0 && eta == Some(-1),
            -1 => l == 1 && eta == Some(-1),
            _ => false,
        };
        if ok && dmin > 1 {
            let k = if ao.table.gt().s() == -1 { 1 } else { 0 };
            for c in 1..dmin {
                let add = match beta {
                    0 => [(c, c), (d - c, d + c)],
                    1 => [(c + 1, c), (d - c - 1, d + c)],
                    _ => [(c, c + 1), (d - c - 1, d + c)],
                };
                if let Some(target) = replace(ao, &[Some(first)], &add) {
                    out.push(MoveDescriptor { case: MoveCase::Phantom, k, target });
                }
            }
        }
    }
    out
}

/// `{ε ∈ P(λ)₀ : t_c(ε) ≠ 1 for all c ∈ J}`.
pub fn tempered_intersection(cp: &ClassPartition, z: i8, j: &[u64]) -> Result<Vec<CharFn>> {
    let pd = piece_data(cp);
    for &c in j {
        if !pd.j.contains(&c) {
            return Err(Error::NotInJ(c));
        }
    }
    ATable::from_partition(cp, z)?;
    Ok(char_group(cp).into_iter().filter(|e| j.iter().all(|&c| t_value(c, e) == -1)).collect())
}

/// The tempered member labelled `eps`: standard order on `i(λ)`, `l ≡ 0`, `η(i) = (-1)^{ε(a_i)}`.
pub fn tempered_param(cp: &ClassPartition, eps: &CharFn, z: i8) -> Result<(AdmissibleOrder, MoeglinParam)> {
    let table = ATable::from_partition(cp, z)?;
    let ao = AdmissibleOrder::standard(&table);
    let mut mp = MoeglinParam { l: BTreeMap::new(), eta: BTreeMap::new() };
    for &i in &ao.order {
        mp.l.insert(i, 0);
        mp.eta.insert(i, eps.sign(table.entries()[i].0));
    }
    Ok((ao, mp))
}

/// Apply the merge for each `c ∈ J` (increasing), joining the last `(c-1, 1)`, or the
/// phantom when `c = 1`, with the following `(c+1, 1)`.
pub fn merge_along(
    cp: &ClassPartition,
    eps: &CharFn,
    j: &[u64],
    z: i8,
) -> Result<(AdmissibleOrder, MoeglinParam)> {
    let (mut ao, mut mp) = tempered_param(cp, eps, z)?;
    let mut js = j.to_vec();
    js.sort_unstable();
    for c in js {
        let ext = ao.extended();
        let k = if c == 1 {
            ext.iter().position(|e| e.is_none())
        } else {
            ext.iter().rposition(|&e| e.is_some_and(|i| ao.table.entries()[i] == (c - 1, 1)))
        }
        .ok_or(Error::MoveNotApplicable)?;
        let (_, a2, m2) = merge_move(&ao, &mp, k)?;
        ao = a2;
        mp = m2;
    }
    Ok((ao, mp))
}
