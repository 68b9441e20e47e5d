//! Partitions, group types and the parity classes `P^s(N)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Default enumeration bound on `N`.
pub const DEFAULT_MAX_N: u64 = 60;

/// A partition, stored weakly decreasing with zeros removed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build from `(part, multiplicity)` pairs.
    pub fn from_mults<I: IntoIterator<Item = (u64, usize)>>(it: I) -> Self {
        let mut v = Vec::new();
        for (c, m) in it {
            v.extend(core::iter::repeat_n(c, m));
        }
        Self::new(v)
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Part `i`, 1-indexed; zero past the end.
    pub fn part(&self, i: usize) -> u64 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn mult(&self, c: u64) -> usize {
        self.parts.iter().filter(|&&p| p == c).count()
    }

    pub fn mults(&self) -> BTreeMap<u64, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Distinct parts, increasing.
    pub fn support(&self) -> Vec<u64> {
        let mut s: Vec<u64> = self.parts.clone();
        s.dedup();
        s.reverse();
        s
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.parts.clone();
        v.extend_from_slice(&other.parts);
        Partition::new(v)
    }

    pub fn difference(&self, other: &Partition) -> Result<Partition> {
        let mut m = self.mults();
        for (c, k) in other.mults() {
            match m.get_mut(&c) {
                Some(have) if *have >= k => *have -= k,
                _ => return Err(Error::NotContained),
            }
        }
        Ok(Partition::from_mults(m))
    }

    pub fn transpose(&self) -> Partition {
        let top = self.parts.first().copied().unwrap_or(0);
        let v = (1..=top)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u64)
            .collect();
        Partition::new(v)
    }

    /// Parts lying in `[lo, hi]`.
    pub fn interval(&self, lo: u64, hi: u64) -> Partition {
        Partition {
            parts: self.parts.iter().copied().filter(|&p| lo <= p && p <= hi).collect(),
        }
    }

    /// Multiplicity-free part: one copy of each part with odd multiplicity.
    pub fn mf(&self) -> Partition {
        Partition::from_mults(self.mults().into_iter().filter(|&(_, k)| k % 2 == 1).map(|(c, _)| (c, 1)))
    }

    /// `self <= other` in dominance order (totals need not agree; missing parts count as 0).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 1..=n {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u64>> for Partition {
    fn from(v: Vec<u64>) -> Self {
        Partition::new(v)
    }
}

impl From<&[u64]> for Partition {
    fn from(v: &[u64]) -> Self {
        Partition::new(v.to_vec())
    }
}

/// Group type: `s = +1` is dual `SO_N` (N odd), `s = -1` is dual `Sp_N` (N even).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupType {
    s: i8,
    n: u64,
}

impl GroupType {
    pub fn new(s: i8, n: u64) -> Result<Self> {
        let ok = match s {
            1 => n % 2 == 1,
            -1 => n.is_multiple_of(2),
            _ => false,
        };
        if ok {
            Ok(GroupType { s, n })
        } else {
            Err(Error::GroupParity { s, n })
        }
    }

    pub fn s(&self) -> i8 {
        self.s
    }

    #[allow(non_snake_case)]
    pub fn N(&self) -> u64 {
        self.n
    }

    /// Rank `n_G = (N - s) / 2`.
    pub fn rank(&self) -> u64 {
        if self.s == 1 {
            (self.n - 1) / 2
        } else {
            self.n / 2
        }
    }

    /// The type on the other side of the duality: `(-s, N - s)`.
    pub fn dual(&self) -> GroupType {
        let n = if self.s == 1 { self.n - 1 } else { self.n + 1 };
        GroupType { s: -self.s, n }
    }

    /// Whether `c` has the parity of good parts.
    pub fn good(&self, c: u64) -> bool {
        good_parity(self.s, c)
    }
}

pub(crate) fn good_parity(s: i8, c: u64) -> bool {
    (c % 2 == 1) == (s == 1)
}

/// `λ ∈ P^s`: every part of bad parity has even multiplicity.
pub fn in_p(s: i8, lambda: &Partition) -> bool {
    lambda.mults().iter().all(|(&c, &k)| good_parity(s, c) || k % 2 == 0)
}

/// A validated partition in `P^s(N)` with its cached decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassPartition {
    lambda: Partition,
    gt: GroupType,
    gp: Partition,
    bp: Partition,
    s_set: Vec<u64>,
    s0: Vec<u64>,
}

impl ClassPartition {
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn gt(&self) -> GroupType {
        self.gt
    }

    pub fn s(&self) -> i8 {
        self.gt.s
    }

    pub fn gp(&self) -> &Partition {
        &self.gp
    }

    pub fn bp(&self) -> &Partition {
        &self.bp
    }

    /// `S(λ)`, increasing.
    pub fn s_set(&self) -> &[u64] {
        &self.s_set
    }

    /// `S₀(λ)`, increasing.
    pub fn s0(&self) -> &[u64] {
        &self.s0
    }

    pub fn is_good_parity(&self) -> bool {
        self.bp.is_empty()
    }

    /// Reclassify the good-parity part alone.
    pub fn good_parity_part(&self) -> ClassPartition {
        let gt = GroupType { s: self.gt.s, n: self.gp.total() };
        classify(self.gp.clone(), gt).expect("gp is in P^s")
    }
}

impl fmt::Display for ClassPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.lambda.fmt(f)
    }
}

pub fn classify(lambda: Partition, gt: GroupType) -> Result<ClassPartition> {
    let got = lambda.total();
    if got != gt.n {
        return Err(Error::WrongTotal { expected: gt.n, got });
    }
    if !in_p(gt.s, &lambda) {
        return Err(Error::ParityViolation { s: gt.s });
    }
    let mut gp = Vec::new();
    let mut bp = Vec::new();
    let mut s0 = Vec::new();
    for (c, k) in lambda.mults() {
        if gt.good(c) {
            gp.push((c, k));
            if k % 2 == 1 {
                s0.push(c);
            }
        } else {
            bp.push((c, k / 2));
        }
    }
    let s_set = gp.iter().map(|&(c, _)| c).collect();
    Ok(ClassPartition {
        lambda,
        gt,
        gp: Partition::from_mults(gp),
        bp: Partition::from_mults(bp),
        s_set,
        s0,
    })
}

pub fn enumerate_classes(gt: GroupType) -> Result<Vec<ClassPartition>> {
    enumerate_classes_bounded(gt, DEFAULT_MAX_N)
}

/// All of `P^s(N)` in reverse-lexicographic order.
pub fn enumerate_classes_bounded(gt: GroupType, bound: u64) -> Result<Vec<ClassPartition>> {
    if gt.n > bound {
        return Err(Error::BoundExceeded { what: "N", value: gt.n, bound });
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    walk(gt.s, gt.n, gt.n, &mut cur, &mut |parts| {
        let cp = classify(Partition { parts: parts.to_vec() }, gt).expect("generated in P^s");
        out.push(cp);
    });
    Ok(out)
}

// Chooses multiplicities for values v, v-1, ..., 1 with the largest multiplicity first,
// which yields reverse-lex order.
fn walk(s: i8, rest: u64, v: u64, cur: &mut Vec<u64>, emit: &mut dyn FnMut(&[u64])) {
    if rest == 0 {
        emit(cur);
        return;
    }
    if v == 0 {
        return;
    }
    let step = if good_parity(s, v) { 1 } else { 2 };
    let mut k = rest / v;
    if step == 2 {
        k -= k % 2;
    }
    loop {
        let base = cur.len();
        cur.extend(core::iter::repeat_n(v, k as usize));
        walk(s, rest - k * v, v - 1, cur, emit);
        cur.truncate(base);
        if k < step {
            break;
        }
        k -= step;
    }
}

/// Every partition of `n`, reverse-lex. Used by oracles and tests.
pub fn all_partitions(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    all_rec(n, n, &mut cur, &mut out);
    out
}

fn all_rec(rest: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        all_rec(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Convenience: `p![5, 3, 1]`.
#[macro_export]
macro_rules! p {
    ($($x:expr),* $(,)?) => {
        $crate::partition::Partition::from(&[$($x as u64),*][..])
    };
}

#[cfg(test)]
mod tests {
    use alloc::vec;
    use alloc::vec::Vec;
    use super::*;

    fn gt(s: i8, n: u64) -> GroupType {
        GroupType::new(s, n).unwrap()
    }

    #[test]
    fn union_and_difference() {
        assert_eq!(p![5, 3].union(&p![3, 1]), p![5, 3, 3, 1]);
        assert_eq!(p![4, 4].union(&p![4]), p![4, 4, 4]);
        assert_eq!(p![5, 3, 3, 1].difference(&p![3, 1]).unwrap(), p![5, 3]);
        assert_eq!(p![4, 4].difference(&p![4, 4]).unwrap(), Partition::empty());
        assert_eq!(p![3].difference(&p![4]), Err(Error::NotContained));
    }

    #[test]
    fn classify_examples() {
        let cp = classify(p![1, 3, 5], gt(1, 9)).unwrap();
        assert_eq!(cp.s_set(), &[1, 3, 5]);
        assert_eq!(cp.s0(), &[1, 3, 5]);
        assert!(cp.bp().is_empty());

        let big = p![1, 3, 3, 4, 4, 5, 5, 5, 7, 7, 7, 7, 9, 9, 10, 10, 11];
        let cp = classify(big, gt(1, 107)).unwrap();
        assert_eq!(*cp.gp(), p![11, 9, 9, 7, 7, 7, 7, 5, 5, 5, 3, 3, 1]);
        assert_eq!(*cp.bp(), p![10, 4]);

        assert_eq!(classify(p![2, 1], gt(1, 3)), Err(Error::ParityViolation { s: 1 }));
        assert_eq!(
            classify(p![2, 1], gt(1, 5)),
            Err(Error::WrongTotal { expected: 5, got: 3 })
        );
    }

    #[test]
    fn enumerate_small() {
        let l: Vec<_> = enumerate_classes(gt(1, 3)).unwrap().into_iter().map(|c| c.lambda).collect();
        assert_eq!(l, vec![p![3], p![1, 1, 1]]);
        let l: Vec<_> = enumerate_classes(gt(-1, 2)).unwrap().into_iter().map(|c| c.lambda).collect();
        assert_eq!(l, vec![p![2], p![1, 1]]);
        assert_eq!(enumerate_classes(gt(1, 1)).unwrap().len(), 1);
        assert!(matches!(enumerate_classes(gt(1, 61)), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn enumerate_matches_filter() {
        for n in 1..=20u64 {
            let s = if n % 2 == 1 { 1 } else { -1 };
            let want: Vec<_> = all_partitions(n).into_iter().filter(|l| in_p(s, l)).collect();
            let got: Vec<_> = enumerate_classes(gt(s, n)).unwrap().into_iter().map(|c| c.lambda).collect();
            assert_eq!(got, want, "N={n}");
        }
    }

    #[test]
    fn transpose_and_dominance() {
        assert_eq!(p![5, 3, 1].transpose(), p![3, 2, 2, 1, 1]);
        assert_eq!(p![4, 4, 1].transpose().transpose(), p![4, 4, 1]);
        assert!(p![4, 4, 1].dominated_by(&p![5, 3, 1]));
        assert!(!p![5, 3, 1].dominated_by(&p![4, 4, 1]));
        assert_eq!(all_partitions(10).len(), 42);
    }
}
