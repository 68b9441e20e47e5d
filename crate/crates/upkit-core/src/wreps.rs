//! Irreducible representations of `W_n` as bipartitions, Pieri and Littlewood–Richardson
//! multiplicities, induction from `W_i × W_{n-i}`, the family `E^s_i` and weak sphericity.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::partition::{all_partitions, Partition};

/// Largest size accepted by [`lr_mult`].
pub const LR_MAX: u64 = 24;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bipartition {
    pub alpha: Partition,
    pub beta: Partition,
}

impl Bipartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        Bipartition { alpha, beta }
    }

    pub fn n(&self) -> u64 {
        self.alpha.total() + self.beta.total()
    }

    /// Dimension `C(n, |α|) f^α f^β`.
    pub fn dim(&self) -> u64 {
        binom(self.n(), self.alpha.total()) * syt_count(&self.alpha) * syt_count(&self.beta)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, p: &Partition| -> fmt::Result {
            for (i, x) in p.parts().iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x)?;
            }
            Ok(())
        };
        write!(f, "[")?;
        list(f, &self.alpha)?;
        write!(f, "|")?;
        list(f, &self.beta)?;
        write!(f, "]")
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A representation as a multiset of irreducibles.
pub type WRep = BTreeMap<Bipartition, u64>;

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut r = 1u64;
    for i in 0..k.min(n - k) {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Number of standard Young tableaux, by the hook length formula.
pub fn syt_count(lambda: &Partition) -> u64 {
    let n = lambda.total();
    let t = lambda.transpose();
    let mut num: u128 = 1;
    for i in 1..=n as u128 {
        num *= i;
    }
    let mut den: u128 = 1;
    for (r, &row) in lambda.parts().iter().enumerate() {
        for c in 0..row as usize {
            let arm = row as usize - c - 1;
            let leg = t.part(c + 1) as usize - r - 1;
            den *= (arm + leg + 1) as u128;
        }
    }
    (num / den) as u64
}

/// All irreducibles of `W_n`.
pub fn irreducibles(n: u64) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for al in all_partitions(a) {
            for be in all_partitions(n - a) {
                out.push(Bipartition::new(al.clone(), be));
            }
        }
    }
    out
}

/// Partitions obtained from `lambda` by adding `k` boxes, no two in one column.
pub fn pieri(lambda: &Partition, k: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let rows: Vec<u64> = lambda.parts().to_vec();
    let mut add = alloc::vec![0u64; rows.len() + 1];
    pieri_rec(&rows, 0, k, &mut add, &mut out);
    out.sort();
    out.reverse();
    out
}

fn pieri_rec(rows: &[u64], r: usize, left: u64, add: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if r == add.len() {
        if left == 0 {
            let v = (0..add.len()).map(|i| rows.get(i).copied().unwrap_or(0) + add[i]).collect();
            out.push(Partition::new(v));
        }
        return;
    }
    // row r may grow up to the old length of row r-1 (horizontal strip)
    let cap = if r == 0 { left } else { (rows[r - 1] - rows.get(r).copied().unwrap_or(0)).min(left) };
    for x in 0..=cap {
        add[r] = x;
        pieri_rec(rows, r + 1, left - x, add, out);
    }
    add[r] = 0;
}

/// `c^λ_{μν}` by counting Littlewood–Richardson tableaux of shape `λ/μ` and content `ν`.
pub fn lr_mult(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<u64> {
    let n = lambda.total();
    if n > LR_MAX {
        return Err(Error::BoundExceeded { what: "|lambda|", value: n, bound: LR_MAX });
    }
    if mu.total() + nu.total() != n || mu.len() > lambda.len() {
        return Ok(0);
    }
    if (1..=mu.len()).any(|i| mu.part(i) > lambda.part(i)) {
        return Ok(0);
    }
    // cells in reading order: rows top to bottom, each right to left
    let mut cells = Vec::new();
    for r in 0..lambda.len() {
        for c in (mu.part(r + 1)..lambda.part(r + 1)).rev() {
            cells.push((r, c as usize));
        }
    }
    let width = lambda.part(1) as usize;
    let mut grid = alloc::vec![0u8; lambda.len() * width.max(1)];
    let mut count = alloc::vec![0u64; nu.len() + 1];
    let target: Vec<u64> = core::iter::once(0).chain(nu.parts().iter().copied()).collect();
    Ok(lr_fill(&cells, 0, mu, &mut grid, width, &mut count, &target))
}

fn lr_fill(
    cells: &[(usize, usize)],
    x: usize,
    mu: &Partition,
    grid: &mut [u8],
    w: usize,
    count: &mut [u64],
    target: &[u64],
) -> u64 {
    if x == cells.len() {
        return 1;
    }
    let (r, c) = cells[x];
    let right = if x > 0 && cells[x - 1] == (r, c + 1) { grid[r * w + c + 1] } else { u8::MAX };
    let above = if r > 0 && c as u64 >= mu.part(r) { grid[(r - 1) * w + c] } else { 0 };
    let mut total = 0;
    for v in (above as usize + 1)..target.len() {
        if v as u8 > right {
            break;
        }
        if count[v] >= target[v] || (v > 1 && count[v] + 1 > count[v - 1]) {
            continue;
        }
        count[v] += 1;
        grid[r * w + c] = v as u8;
        total += lr_fill(cells, x + 1, mu, grid, w, count, target);
        grid[r * w + c] = 0;
        count[v] -= 1;
    }
    total
}

/// `⟨ind_{W_i × W_{n-i}}^{W_n} x ⊠ y, target⟩`.
pub fn induce_mult(x: &Bipartition, y: &Bipartition, target: &Bipartition) -> u64 {
    if x.alpha.total() + y.alpha.total() != target.alpha.total()
        || x.beta.total() + y.beta.total() != target.beta.total()
    {
        return 0;
    }
    let a = lr_mult(&x.alpha, &y.alpha, &target.alpha).expect("size within bound");
    if a == 0 {
        return 0;
    }
    a * lr_mult(&x.beta, &y.beta, &target.beta).expect("size within bound")
}

/// Full decomposition of `ind x ⊠ y`.
pub fn induce(x: &Bipartition, y: &Bipartition) -> WRep {
    let n = x.n() + y.n();
    let mut out = WRep::new();
    for t in irreducibles(n) {
        let m = induce_mult(x, y, &t);
        if m > 0 {
            out.insert(t, m);
        }
    }
    out
}

/// Induce a representation: `ind π ⊠ σ`.
pub fn induce_rep(pi: &WRep, sigma: &WRep) -> WRep {
    let mut out = WRep::new();
    for (x, &a) in pi {
        for (y, &b) in sigma {
            for (t, m) in induce(x, y) {
                *out.entry(t).or_insert(0) += a * b * m;
            }
        }
    }
    out
}

/// `E^1_i = ((n-i, i), ∅)`, `0 ≤ i ≤ n/2`.
pub fn e_plus(n: u64, i: u64) -> Bipartition {
    Bipartition::new(Partition::new(alloc::vec![n - i, i]), Partition::empty())
}

/// `E^{-1}_i = ((n-i), (i))`, `0 ≤ i ≤ n`.
pub fn e_minus(n: u64, i: u64) -> Bipartition {
    Bipartition::new(Partition::new(alloc::vec![n - i]), Partition::new(alloc::vec![i]))
}

/// The family `E^s_i` for `W_n`.
pub fn e_family(s: i8, n: u64) -> Vec<Bipartition> {
    if s == 1 {
        (0..=n / 2).map(|i| e_plus(n, i)).collect()
    } else {
        (0..=n).map(|i| e_minus(n, i)).collect()
    }
}

pub fn is_e(s: i8, b: &Bipartition) -> bool {
    if s == 1 {
        b.beta.is_empty() && b.alpha.len() <= 2
    } else {
        b.alpha.len() <= 1 && b.beta.len() <= 1
    }
}

fn mult(pi: &WRep, b: &Bipartition) -> u64 {
    pi.get(b).copied().unwrap_or(0)
}

/// `dim π^{W_{n,i}} = Σ_{j ≤ min(i, n-i)} ⟨π, E^1_j⟩`.
pub fn invariant_dim(pi: &WRep, n: u64, i: u64) -> u64 {
    (0..=i.min(n - i)).map(|j| mult(pi, &e_plus(n, j))).sum()
}

/// `dim Hom_{W_{n,i}}(sgn^± ⊠ triv, π) = ⟨π, E^{-1}_i⟩`.
pub fn sgn_hom_dim(pi: &WRep, n: u64, i: u64) -> u64 {
    mult(pi, &e_minus(n, i))
}

pub fn is_weakly_s_spherical(pi: &WRep, s: i8) -> bool {
    pi.iter().any(|(b, &m)| m > 0 && is_e(s, b))
}

pub fn single(b: Bipartition) -> WRep {
    let mut r = WRep::new();
    r.insert(b, 1);
    r
}
