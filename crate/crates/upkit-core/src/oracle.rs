//! Character-theoretic brute force for `W_n`, `n ≤ 6`.
//!
//! Classes are read off explicit signed permutations. Irreducible characters are built by
//! extending `V_α` and `V_β ⊗ sgn^±` to `W_a × W_b` and inducing; `S_n` values come from
//! Murnaghan–Nakayama. Nothing here uses Pieri or Littlewood–Richardson.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::wreps::{irreducibles, Bipartition, WRep};

pub const ORACLE_MAX: u64 = 6;

/// Signed cycle type: lengths of positive cycles, lengths of negative cycles.
pub type Class = (Partition, Partition);
pub type ClassFn = BTreeMap<Class, i64>;

/// Class sizes of `W_n` and of its parabolic-type subgroups, by enumeration.
pub struct Oracle {
    sizes: Vec<BTreeMap<Class, u64>>,
    /// Classes of `W_m` meeting the unsigned copy of `S_m`, with counts.
    unsigned: Vec<BTreeMap<Class, u64>>,
    chars: Vec<BTreeMap<Bipartition, ClassFn>>,
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn order(n: u64) -> u64 {
    factorial(n) << n
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn signed_class(perm: &[usize], neg: u32) -> Class {
    let n = perm.len();
    let mut seen = alloc::vec![false; n];
    let (mut pos_c, mut neg_c) = (Vec::new(), Vec::new());
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let (mut len, mut sign, mut x) = (0u64, false, start);
        while !seen[x] {
            seen[x] = true;
            len += 1;
            sign ^= neg >> x & 1 == 1;
            x = perm[x];
        }
        if sign { neg_c.push(len) } else { pos_c.push(len) }
    }
    (Partition::new(pos_c), Partition::new(neg_c))
}

/// `χ^λ(ρ)` for `S_n` by rim-hook removal on beta-sets.
pub fn sn_character(lambda: &Partition, rho: &Partition) -> i64 {
    let l = lambda.len();
    let beta: Vec<u64> = (0..l).map(|i| lambda.part(i + 1) + (l - 1 - i) as u64).collect();
    mn(beta, rho.parts())
}

fn mn(beta: Vec<u64>, rho: &[u64]) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (k, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut nb = beta.clone();
        nb[k] = b - r;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(nb, rest);
    }
    total
}

fn union(a: &Class, b: &Class) -> Class {
    (a.0.union(&b.0), a.1.union(&b.1))
}

impl Oracle {
    pub fn new(max_n: u64) -> Result<Oracle> {
        if max_n > ORACLE_MAX {
            return Err(Error::BoundExceeded { what: "oracle n", value: max_n, bound: ORACLE_MAX });
        }
        let mut sizes = Vec::new();
        let mut unsigned = Vec::new();
        for n in 0..=max_n as usize {
            let mut m = BTreeMap::new();
            let mut u = BTreeMap::new();
            for p in permutations(n) {
                for neg in 0..(1u32 << n) {
                    let c = signed_class(&p, neg);
                    if neg == 0 {
                        *u.entry(c.clone()).or_insert(0) += 1;
                    }
                    *m.entry(c).or_insert(0) += 1;
                }
            }
            sizes.push(m);
            unsigned.push(u);
        }
        let mut o = Oracle { sizes, unsigned, chars: Vec::new() };
        for n in 0..=max_n {
            let table = irreducibles(n).into_iter().map(|b| {
                let f = o.build_char(&b);
                (b, f)
            });
            let table = table.collect();
            o.chars.push(table);
        }
        Ok(o)
    }

    pub fn max_n(&self) -> u64 {
        self.sizes.len() as u64 - 1
    }

    pub fn classes(&self, n: u64) -> &BTreeMap<Class, u64> {
        &self.sizes[n as usize]
    }

    pub fn character(&self, b: &Bipartition) -> &ClassFn {
        &self.chars[b.n() as usize][b]
    }

    /// Induce a class function `f` of `W_i × W_j` given as a product-class table.
    fn induce_product(&self, i: u64, j: u64, f: impl Fn(&Class, &Class) -> i64) -> ClassFn {
        let n = i + j;
        let h = order(i) * order(j);
        let mut sums: ClassFn = self.classes(n).keys().map(|c| (c.clone(), 0)).collect();
        for (c1, &s1) in self.classes(i) {
            for (c2, &s2) in self.classes(j) {
                *sums.get_mut(&union(c1, c2)).unwrap() += (s1 * s2) as i64 * f(c1, c2);
            }
        }
        let g = order(n) as i64;
        sums.into_iter()
            .map(|(c, v)| {
                let num = g * v;
                let den = self.classes(n)[&c] as i64 * h as i64;
                debug_assert_eq!(num % den, 0);
                (c, num / den)
            })
            .collect()
    }

    fn build_char(&self, b: &Bipartition) -> ClassFn {
        let (a, bb) = (b.alpha.total(), b.beta.total());
        self.induce_product(a, bb, |c1, c2| {
            let flip = if c2.1.len() % 2 == 0 { 1 } else { -1 };
            sn_character(&b.alpha, &c1.0.union(&c1.1)) * sn_character(&b.beta, &c2.0.union(&c2.1)) * flip
        })
    }

    /// `⟨f, χ⟩` for `W_n`, `χ` real.
    pub fn inner(&self, n: u64, f: &ClassFn, g: &ClassFn) -> i64 {
        let s: i64 = self.classes(n).iter().map(|(c, &k)| k as i64 * f[c] * g[c]).sum();
        let o = order(n) as i64;
        debug_assert_eq!(s % o, 0);
        s / o
    }

    pub fn decompose(&self, n: u64, f: &ClassFn) -> WRep {
        let mut out = WRep::new();
        for (b, chi) in &self.chars[n as usize] {
            let m = self.inner(n, f, chi);
            assert!(m >= 0, "class function is not a character");
            if m > 0 {
                out.insert(b.clone(), m as u64);
            }
        }
        out
    }

    /// `ind_{W_i × W_{n-i}}^{W_n} x ⊠ y` by character sums.
    pub fn oracle_mult(&self, x: &Bipartition, y: &Bipartition) -> Result<WRep> {
        let n = x.n() + y.n();
        if n > self.max_n() {
            return Err(Error::BoundExceeded { what: "oracle n", value: n, bound: self.max_n() });
        }
        let (cx, cy) = (self.character(x), self.character(y));
        let f = self.induce_product(x.n(), y.n(), |c1, c2| cx[c1] * cy[c2]);
        Ok(self.decompose(n, &f))
    }

    /// Average of `χ_b` over `W_i × W_{n-i}`, optionally twisted by `sgn^±` on the `W_i` factor.
    pub fn fixed_dim(&self, b: &Bipartition, i: u64, twisted: bool) -> u64 {
        let n = b.n();
        let chi = self.character(b);
        let mut s = 0i64;
        for (c1, &s1) in self.classes(i) {
            let t = if twisted && c1.1.len() % 2 == 1 { -1 } else { 1 };
            for (c2, &s2) in self.classes(n - i) {
                s += (s1 * s2) as i64 * t * chi[&union(c1, c2)];
            }
        }
        let h = (order(i) * order(n - i)) as i64;
        debug_assert_eq!(s % h, 0);
        (s / h) as u64
    }

    /// `ind_{S_m}^{W_m} triv`.
    pub fn induced_from_unsigned(&self, m: u64) -> WRep {
        let h = factorial(m) as i64;
        let g = order(m) as i64;
        let f: ClassFn = self
            .classes(m)
            .iter()
            .map(|(c, &k)| {
                let meet = self.unsigned[m as usize].get(c).copied().unwrap_or(0) as i64;
                (c.clone(), g * meet / (k as i64 * h))
            })
            .collect();
        self.decompose(m, &f)
    }
}
