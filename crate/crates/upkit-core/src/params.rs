//! Integral A-parameters as tables, unipotent L-parameters, infinitesimal characters,
//! the near-tempered tables `m_{λ,J}`, weak packets and packet membership.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::components::{char_group, in_canonical, t_value, CharFn};
use crate::error::{Error, Result};
use crate::partition::{classify, good_parity, ClassPartition, GroupType, Partition};
use crate::pieces::{bvls_dual, piece_data, special_piece};

/// Largest `N` accepted by the brute-force L-parameter enumerator.
pub const ENUM_MAX_N: u64 = 16;

fn check_z(gt: GroupType, z: i8) -> Result<()> {
    match z {
        1 => Ok(()),
        -1 if gt.s() == -1 => Ok(()),
        _ => Err(Error::BadCentralSign),
    }
}

/// A table: multiset of `(a, b)`, encoding `Σ ν_a ⊗ ν_b` twisted by `z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ATable {
    entries: Vec<(u64, u64)>,
    gt: GroupType,
    z: i8,
}

impl ATable {
    pub fn new(mut entries: Vec<(u64, u64)>, gt: GroupType, z: i8) -> Result<Self> {
        check_z(gt, z)?;
        entries.sort_unstable();
        if entries.iter().any(|&(a, b)| a == 0 || b == 0) {
            return Err(Error::TableParity);
        }
        let got: u64 = entries.iter().map(|&(a, b)| a * b).sum();
        if got != gt.N() {
            return Err(Error::WrongTotal { expected: gt.N(), got });
        }
        let t = ATable { entries, gt, z };
        if t.mf().iter().any(|&(a, b)| !t.is_gp(a, b)) {
            return Err(Error::TableParity);
        }
        Ok(t)
    }

    /// `i(λ) = {(λ_i, 1)}`.
    pub fn from_partition(cp: &ClassPartition, z: i8) -> Result<Self> {
        ATable::new(cp.lambda().parts().iter().map(|&c| (c, 1)).collect(), cp.gt(), z)
    }

    /// Entries, sorted increasingly by `(a, b)`.
    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn gt(&self) -> GroupType {
        self.gt
    }

    pub fn z(&self) -> i8 {
        self.z
    }

    /// Good parity entry: `a + b` even for `s = +1`, odd for `s = -1`.
    pub fn is_gp(&self, a: u64, b: u64) -> bool {
        good_parity(self.gt.s(), a + b + 1)
    }

    fn mults(&self) -> BTreeMap<(u64, u64), usize> {
        let mut m = BTreeMap::new();
        for &e in &self.entries {
            *m.entry(e).or_insert(0) += 1;
        }
        m
    }

    /// Entries of odd multiplicity, one copy each.
    pub fn mf(&self) -> Vec<(u64, u64)> {
        self.mults().into_iter().filter(|&(_, k)| k % 2 == 1).map(|(e, _)| e).collect()
    }

    /// `S(m)`: distinct good-parity entries.
    pub fn s_set(&self) -> Vec<(u64, u64)> {
        self.mults().into_keys().filter(|&(a, b)| self.is_gp(a, b)).collect()
    }

    /// `p(m) = ∪ a^b`.
    pub fn partition(&self) -> Partition {
        Partition::from_mults(self.entries.iter().map(|&(a, b)| (a, b as usize)))
    }

    pub fn is_near_tempered(&self) -> bool {
        self.entries.iter().all(|&(a, b)| !self.is_gp(a, b) || b <= 2)
    }

    /// `|P(m)₀|`.
    pub fn p0_size(&self) -> usize {
        let k = self.s_set().len();
        if self.mf().is_empty() {
            1 << k
        } else {
            1 << (k - 1)
        }
    }
}

/// Infinitesimal character: sign `z` and a multiset of doubled exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InfChar {
    pub z: i8,
    eigen: Vec<i64>,
}

impl InfChar {
    pub fn new(z: i8, mut eigen: Vec<i64>) -> Self {
        eigen.sort_unstable();
        InfChar { z, eigen }
    }

    pub fn eigen(&self) -> &[i64] {
        &self.eigen
    }

    pub fn is_symmetric(&self) -> bool {
        let mut neg: Vec<i64> = self.eigen.iter().map(|x| -x).collect();
        neg.sort_unstable();
        neg == self.eigen
    }
}

/// A summand `z q^{j2/2} ⊗ ν_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Summand {
    pub j2: i64,
    pub k: u64,
}

/// A unipotent L-parameter in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LParam {
    pub z: i8,
    summands: Vec<Summand>,
    gt: GroupType,
}

impl LParam {
    pub fn new(z: i8, mut summands: Vec<Summand>, gt: GroupType) -> Self {
        summands.sort_unstable();
        LParam { z, summands, gt }
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn gt(&self) -> GroupType {
        self.gt
    }

    pub fn dim(&self) -> u64 {
        self.summands.iter().map(|s| s.k).sum()
    }

    pub fn is_self_dual(&self) -> bool {
        let mut dual: Vec<Summand> = self.summands.iter().map(|s| Summand { j2: -s.j2, k: s.k }).collect();
        dual.sort_unstable();
        dual == self.summands
    }

    /// `λ(φ)`: the multiset of the `k`.
    pub fn lambda(&self) -> Partition {
        Partition::new(self.summands.iter().map(|s| s.k).collect())
    }
}

pub fn l_param_of_table(m: &ATable) -> LParam {
    let mut v = Vec::new();
    for &(a, b) in m.entries() {
        for r in 0..b as i64 {
            v.push(Summand { j2: 2 * r - (b as i64 - 1), k: a });
        }
    }
    LParam::new(m.z(), v, m.gt())
}

pub fn inf_char(phi: &LParam) -> InfChar {
    let mut e = Vec::new();
    for s in phi.summands() {
        let k = s.k as i64;
        let mut x = s.j2 + k - 1;
        while x > s.j2 - k {
            e.push(x);
            x -= 2;
        }
    }
    InfChar::new(phi.z, e)
}

/// `m_{λ,J} = i(λ ∖ ∪(c−1,c+1)) ∪ {(c,2)}`.
pub fn near_tempered_table(cp: &ClassPartition, j: &[u64], z: i8) -> Result<ATable> {
    let pd = piece_data(cp);
    for &c in j {
        if !pd.j.contains(&c) {
            return Err(Error::NotInJ(c));
        }
    }
    check_z(cp.gt(), z)?;
    let mut rest = cp.lambda().clone();
    for &c in j {
        rest = rest.difference(&Partition::new(alloc::vec![c - 1, c + 1]))?;
    }
    let mut entries: Vec<(u64, u64)> = rest.parts().iter().map(|&c| (c, 1)).collect();
    entries.extend(j.iter().map(|&c| (c, 2)));
    ATable::new(entries, cp.gt(), z)
}

/// `χ_{z,λ}`: infinitesimal character of the quasi-basic parameter `i(λ)`.
pub fn quasi_basic_inf_char(cp: &ClassPartition, z: i8) -> Result<InfChar> {
    Ok(inf_char(&l_param_of_table(&ATable::from_partition(cp, z)?)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakPacketRow {
    pub j: Vec<u64>,
    pub mu: Partition,
    pub table: ATable,
    pub phi: LParam,
    pub lpacket_size: usize,
}

/// One L-packet per member of `Spc(λ)`.
pub fn weak_packet(cp: &ClassPartition, z: i8) -> Result<Vec<WeakPacketRow>> {
    check_z(cp.gt(), z)?;
    special_piece(cp)
        .into_iter()
        .map(|(j, mu)| {
            let table = near_tempered_table(cp, &j, z)?;
            Ok(WeakPacketRow {
                phi: l_param_of_table(&table),
                lpacket_size: char_group(&mu).len(),
                mu: mu.lambda().clone(),
                table,
                j,
            })
        })
        .collect()
}

/// All `J ⊆ 𝕁(λ)` whose packet contains the member labelled by `eps`.
pub fn packets_containing(cp: &ClassPartition, eps: &CharFn, z: i8) -> Result<Vec<(Vec<u64>, ATable)>> {
    if !in_canonical(cp, eps) {
        return Err(Error::NotCanonical);
    }
    let mut out = Vec::new();
    for (j, _) in special_piece(cp) {
        if j.iter().all(|&c| t_value(c, eps) == -1) {
            let t = near_tempered_table(cp, &j, z)?;
            out.push((j, t));
        }
    }
    Ok(out)
}

/// Every self-dual unipotent L-parameter of type `gt` with infinitesimal character `chi`.
pub fn enumerate_lparams_with_inf_char(chi: &InfChar, gt: GroupType) -> Result<Vec<LParam>> {
    let n = chi.eigen().len() as u64;
    if n > ENUM_MAX_N {
        return Err(Error::BoundExceeded { what: "N", value: n, bound: ENUM_MAX_N });
    }
    if n != gt.N() {
        return Err(Error::WrongTotal { expected: gt.N(), got: n });
    }
    let mut pool: BTreeMap<i64, usize> = BTreeMap::new();
    for &e in chi.eigen() {
        *pool.entry(e).or_insert(0) += 1;
    }
    let mut found = BTreeSet::new();
    let mut cur = Vec::new();
    search(&mut pool, None, &mut cur, &mut |sum| {
        let phi = LParam::new(chi.z, sum.to_vec(), gt);
        if type_ok(gt.s(), &phi) {
            found.insert(phi);
        }
    });
    Ok(found.into_iter().collect())
}

// A j = 0 summand of bad parity is not of the right type alone and must come in pairs.
fn type_ok(s: i8, phi: &LParam) -> bool {
    let mut cnt: BTreeMap<u64, usize> = BTreeMap::new();
    for x in phi.summands().iter().filter(|x| x.j2 == 0) {
        *cnt.entry(x.k).or_insert(0) += 1;
    }
    cnt.iter().all(|(&k, &c)| good_parity(s, k) || c % 2 == 0)
}

fn take(pool: &mut BTreeMap<i64, usize>, j2: i64, k: u64) -> bool {
    let k = k as i64;
    let mut x = j2 - k + 1;
    let mut done = Vec::new();
    let mut ok = true;
    while x < j2 + k {
        match pool.get_mut(&x) {
            Some(c) if *c > 0 => {
                *c -= 1;
                done.push(x);
            }
            _ => {
                ok = false;
                break;
            }
        }
        x += 2;
    }
    if !ok {
        for y in done {
            *pool.get_mut(&y).unwrap() += 1;
        }
    }
    ok
}

fn give(pool: &mut BTreeMap<i64, usize>, j2: i64, k: u64) {
    let k = k as i64;
    let mut x = j2 - k + 1;
    while x < j2 + k {
        *pool.get_mut(&x).unwrap() += 1;
        x += 2;
    }
}

// The largest remaining exponent M must top some summand (j, k) with j = M - k + 1 >= 0,
// since a negative j would force its partner's top above M. Consecutive picks at the
// same M use nondecreasing k so each multiset is reached once.
fn search(
    pool: &mut BTreeMap<i64, usize>,
    last: Option<(i64, u64)>,
    cur: &mut Vec<Summand>,
    emit: &mut dyn FnMut(&[Summand]),
) {
    let Some(m) = pool.iter().rev().find(|(_, &c)| c > 0).map(|(&e, _)| e) else {
        emit(cur);
        return;
    };
    if m < 0 {
        return;
    }
    let kmin = match last {
        Some((lm, lk)) if lm == m => lk,
        _ => 1,
    };
    for k in kmin..=(m as u64 + 1) {
        let j2 = m - k as i64 + 1;
        if !take(pool, j2, k) {
            continue;
        }
        if j2 > 0 {
            if !take(pool, -j2, k) {
                give(pool, j2, k);
                continue;
            }
            cur.push(Summand { j2, k });
            cur.push(Summand { j2: -j2, k });
            search(pool, Some((m, k)), cur, emit);
            cur.truncate(cur.len() - 2);
            give(pool, -j2, k);
        } else {
            cur.push(Summand { j2, k });
            search(pool, Some((m, k)), cur, emit);
            cur.pop();
        }
        give(pool, j2, k);
    }
}

/// Compare the brute-force set `{φ : χ_φ = χ_{z,λ}, d(λ(φ)) = d(λ)}` with `{φ_{z,λ,μ}}`.
pub fn verify_almost_intro(cp: &ClassPartition, z: i8) -> Result<bool> {
    let chi = quasi_basic_inf_char(cp, z)?;
    let d = bvls_dual(cp);
    let mut brute = BTreeSet::new();
    for phi in enumerate_lparams_with_inf_char(&chi, cp.gt())? {
        let mu = classify(phi.lambda(), cp.gt())?;
        if bvls_dual(&mu) == d {
            brute.insert(phi);
        }
    }
    let mut want = BTreeSet::new();
    for row in weak_packet(cp, z)? {
        want.insert(row.phi);
    }
    Ok(brute == want)
}
