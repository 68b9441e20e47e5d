//! Component-group characters as subsets of `S(λ)`, the block structure `S†(λ)`,
//! the canonical subgroup, the characters `t_c`, primitivity and the embeddings ι.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::partition::{ClassPartition, Partition};
use crate::pieces;

/// A character of `A(O_λ)`: the subset of `S(λ)` on which it is `-1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CharFn {
    subset: Vec<u64>,
}

impl CharFn {
    pub fn new(mut subset: Vec<u64>) -> Self {
        subset.sort_unstable();
        subset.dedup();
        CharFn { subset }
    }

    pub fn trivial() -> Self {
        CharFn { subset: Vec::new() }
    }

    /// Checked constructor: the subset must lie in `S(λ)`.
    pub fn on(cp: &ClassPartition, subset: Vec<u64>) -> Result<Self> {
        let e = CharFn::new(subset);
        if e.subset.iter().all(|c| cp.s_set().binary_search(c).is_ok()) {
            Ok(e)
        } else {
            Err(Error::NotInSupport)
        }
    }

    pub fn subset(&self) -> &[u64] {
        &self.subset
    }

    pub fn contains(&self, c: u64) -> bool {
        self.subset.binary_search(&c).is_ok()
    }

    /// `ε(c)` as 0 or 1.
    pub fn eps(&self, c: u64) -> u32 {
        self.contains(c) as u32
    }

    /// Value `(-1)^{ε(c)}`.
    pub fn sign(&self, c: u64) -> i8 {
        if self.contains(c) {
            -1
        } else {
            1
        }
    }

    pub fn in_p0(&self, cp: &ClassPartition) -> bool {
        self.subset.iter().filter(|c| cp.s0().binary_search(c).is_ok()).count() % 2 == 0
    }

    pub fn in_pprime(&self) -> bool {
        self.subset.len().is_multiple_of(2)
    }

    /// Group law on `P(λ)`.
    pub fn product(&self, other: &CharFn) -> CharFn {
        let mut v: Vec<u64> = self.subset.iter().filter(|c| !other.contains(**c)).copied().collect();
        v.extend(other.subset.iter().filter(|c| !self.contains(**c)));
        CharFn::new(v)
    }

    /// Pairing `(-1)^{|A ∩ B|}`.
    pub fn pairing(&self, other: &CharFn) -> i8 {
        if self.subset.iter().filter(|c| other.contains(**c)).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Sign string over `S(λ)` increasing, `-` for members.
    pub fn sign_string(&self, cp: &ClassPartition) -> alloc::string::String {
        cp.s_set().iter().map(|&c| if self.contains(c) { '-' } else { '+' }).collect()
    }
}

impl fmt::Debug for CharFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CharFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.subset.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "}}")
    }
}

/// One class of `S(λ)/∼`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub members: Vec<u64>,
    /// Span reaches down to 0.
    pub open_below: bool,
    /// Span is unbounded above.
    pub open_above: bool,
}

impl Block {
    pub fn theta_min(&self) -> u64 {
        self.members[0]
    }

    pub fn theta_max(&self) -> u64 {
        *self.members.last().unwrap()
    }

    /// Whether `c` lies in the (possibly extended) span of this block.
    pub fn spans(&self, c: u64) -> bool {
        let lo = if self.open_below { 1 } else { self.theta_min() };
        c >= lo && (self.open_above || c <= self.theta_max())
    }

    /// `λ(θ)`: the parts of λ inside the span.
    pub fn restrict(&self, lambda: &Partition) -> Partition {
        Partition::new(lambda.parts().iter().copied().filter(|&c| self.spans(c)).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub classes: Vec<Block>,
}

impl BlockStructure {
    /// Index of the block holding `c`.
    pub fn block_of(&self, c: u64) -> Option<usize> {
        self.classes.iter().position(|b| b.members.binary_search(&c).is_ok())
    }

    /// Index of the block whose span contains `c`.
    pub fn spanning(&self, c: u64) -> Option<usize> {
        self.classes.iter().position(|b| b.spans(c))
    }

    pub fn is_constant(&self, eps: &CharFn) -> bool {
        self.classes.iter().all(|b| {
            let v = eps.contains(b.members[0]);
            b.members.iter().all(|&c| eps.contains(c) == v)
        })
    }
}

pub fn block_structure(cp: &ClassPartition) -> BlockStructure {
    let s = cp.s_set();
    let k = s.len();
    // Positions are 1-based as in the chain description.
    let alpha: Vec<usize> = (1..=k).filter(|&i| cp.s0().binary_search(&s[i - 1]).is_ok()).collect();
    let r = alpha.len();
    let a = |i: usize| alpha[i - 1];
    let mut chains: Vec<(usize, usize)> = Vec::new();
    let mut top = None;
    let mut bottom = None;
    if cp.s() == 1 {
        if r > 0 {
            chains.push((a(r), k));
            top = Some(a(r));
            for j in 1..=(r - 1) / 2 {
                chains.push((a(r - 2 * j), a(r - 2 * j + 1)));
            }
        }
    } else {
        for j in 0..r / 2 {
            chains.push((a(r - 2 * j - 1), a(r - 2 * j)));
        }
        if r % 2 == 1 {
            chains.push((1, a(1)));
            bottom = Some(1);
        }
    }
    let mut start_of = alloc::vec![0usize; k + 1];
    for i in 1..=k {
        start_of[i] = i;
    }
    for &(lo, hi) in &chains {
        for i in lo..=hi {
            start_of[i] = lo;
        }
    }
    let mut classes: Vec<Block> = Vec::new();
    let mut i = 1;
    while i <= k {
        let lo = start_of[i];
        let mut j = i;
        while j < k && start_of[j + 1] == lo {
            j += 1;
        }
        classes.push(Block {
            members: s[i - 1..j].to_vec(),
            open_below: bottom == Some(lo),
            open_above: top == Some(lo),
        });
        i = j + 1;
    }
    BlockStructure { classes }
}

fn subsets_of(s: &[u64]) -> impl Iterator<Item = CharFn> + '_ {
    (0u64..(1u64 << s.len())).map(move |mask| {
        CharFn::new((0..s.len()).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect())
    })
}

fn sort_chars(v: &mut [CharFn]) {
    v.sort_by(|a, b| (a.subset.len(), &a.subset).cmp(&(b.subset.len(), &b.subset)));
}

/// `P(λ)₀`, sorted by size then lexicographically.
pub fn char_group(cp: &ClassPartition) -> Vec<CharFn> {
    let mut v: Vec<CharFn> = subsets_of(cp.s_set()).filter(|e| e.in_p0(cp)).collect();
    sort_chars(&mut v);
    v
}

/// `P†(λ)₀`: block-constant members of `P(λ)₀`.
pub fn canonical_subgroup(cp: &ClassPartition) -> Vec<CharFn> {
    let bs = block_structure(cp);
    let reps: Vec<u64> = bs.classes.iter().map(|b| b.theta_min()).collect();
    let mut v: Vec<CharFn> = subsets_of(&reps)
        .map(|e| {
            CharFn::new(
                bs.classes
                    .iter()
                    .filter(|b| e.contains(b.theta_min()))
                    .flat_map(|b| b.members.iter().copied())
                    .collect(),
            )
        })
        .filter(|e| e.in_p0(cp))
        .collect();
    sort_chars(&mut v);
    v
}

pub fn in_canonical(cp: &ClassPartition, eps: &CharFn) -> bool {
    eps.in_p0(cp) && block_structure(cp).is_constant(eps)
}

/// Raw `t_c(A)`, without checking `c ∈ 𝕁`.
pub fn t_value(c: u64, eps: &CharFn) -> i8 {
    if c == 1 {
        eps.sign(2)
    } else {
        eps.sign(c - 1) * eps.sign(c + 1)
    }
}

/// The character `t_c` for some `c ∈ 𝕁(λ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TCharacter {
    pub c: u64,
}

impl TCharacter {
    pub fn eval(&self, eps: &CharFn) -> i8 {
        t_value(self.c, eps)
    }
}

pub fn t_character(cp: &ClassPartition, c: u64) -> Result<TCharacter> {
    if pieces::piece_data(cp).j.contains(&c) {
        Ok(TCharacter { c })
    } else {
        Err(Error::NotInJ(c))
    }
}

/// Locate `mu` in `Spc(λ)` and return its `J`.
fn j_of(cp: &ClassPartition, mu: &Partition) -> Result<Vec<u64>> {
    pieces::special_piece(cp)
        .into_iter()
        .find(|(_, m)| m.lambda() == mu)
        .map(|(j, _)| j)
        .ok_or(Error::NotInPiece)
}

/// `t_c(ε) = -1` for every `c ∈ 𝕁(λ) ∖ 𝕁(μ)`.
pub fn is_primitive(cp: &ClassPartition, eps: &CharFn, mu: &Partition) -> Result<bool> {
    if !in_canonical(cp, eps) {
        return Err(Error::NotCanonical);
    }
    let j = j_of(cp, mu)?;
    Ok(j.iter().all(|&c| t_value(c, eps) == -1))
}

/// `ι*_{μ,λ}`: block index of λ ↦ block index of μ.
pub fn iota_star(src: &ClassPartition, dst: &ClassPartition) -> Vec<usize> {
    let bl = block_structure(dst);
    let bm = block_structure(src);
    bl.classes
        .iter()
        .map(|b| {
            bm.spanning(b.theta_min())
                .or_else(|| bm.spanning(b.theta_max()))
                .expect("every block of λ meets a span of μ")
        })
        .collect()
}

/// `ι_{μ,λ}: P†(μ)₀ → P†(λ)₀`, pullback along `ι*`.
pub fn iota_embed(src: &ClassPartition, dst: &ClassPartition, eps: &CharFn) -> Result<CharFn> {
    j_of(dst, src.lambda())?;
    if !in_canonical(src, eps) {
        return Err(Error::NotCanonical);
    }
    let bl = block_structure(dst);
    let bm = block_structure(src);
    let map = iota_star(src, dst);
    let mut out = Vec::new();
    for (b, &t) in bl.classes.iter().zip(&map) {
        if eps.contains(bm.classes[t].theta_min()) {
            out.extend(b.members.iter().copied());
        }
    }
    Ok(CharFn::new(out))
}

#[cfg(test)]
mod tests {
    use alloc::vec;
    use alloc::vec::Vec;
    use super::*;
    use crate::p;
    use crate::partition::{classify, GroupType};

    fn cp(s: i8, l: Partition) -> ClassPartition {
        let n = l.total();
        classify(l, GroupType::new(s, n).unwrap()).unwrap()
    }

    fn members(bs: &BlockStructure) -> Vec<Vec<u64>> {
        bs.classes.iter().map(|b| b.members.clone()).collect()
    }

    #[test]
    fn blocks() {
        assert_eq!(members(&block_structure(&cp(1, p![5, 3, 1]))), [vec![1, 3], vec![5]]);
        assert_eq!(members(&block_structure(&cp(-1, p![2]))), [vec![2]]);
        assert_eq!(
            members(&block_structure(&cp(1, p![9, 7, 5, 3, 1]))),
            [vec![1, 3], vec![5, 7], vec![9]]
        );
        assert_eq!(
            members(&block_structure(&cp(1, p![7, 5, 3, 1, 1]))),
            [vec![1], vec![3, 5], vec![7]]
        );
    }

    #[test]
    fn sp8_groups() {
        let c = cp(1, p![5, 3, 1]);
        let g = char_group(&c);
        assert_eq!(g, [CharFn::new(vec![]), CharFn::new(vec![1, 3]), CharFn::new(vec![1, 5]), CharFn::new(vec![3, 5])]);
        assert_eq!(canonical_subgroup(&c), [CharFn::trivial(), CharFn::new(vec![1, 3])]);
        assert_eq!(CharFn::new(vec![1, 3]).sign_string(&c), "--+");
        assert_eq!(char_group(&cp(-1, p![2])), [CharFn::trivial()]);
        assert_eq!(canonical_subgroup(&cp(1, p![7])), [CharFn::trivial()]);
    }

    #[test]
    fn t_and_primitivity() {
        let c = cp(1, p![5, 3, 1]);
        let t = t_character(&c, 4).unwrap();
        assert_eq!(t.eval(&CharFn::new(vec![1, 3])), -1);
        assert_eq!(t.eval(&CharFn::trivial()), 1);
        assert_eq!(t.eval(&CharFn::new(vec![3, 5])), 1);
        assert_eq!(t_character(&c, 2), Err(Error::NotInJ(2)));

        let e = CharFn::new(vec![1, 3]);
        assert!(is_primitive(&c, &e, &p![4, 4, 1]).unwrap());
        assert!(!is_primitive(&c, &CharFn::trivial(), &p![4, 4, 1]).unwrap());
        assert!(is_primitive(&c, &e, &p![5, 3, 1]).unwrap());
        assert_eq!(is_primitive(&c, &CharFn::new(vec![1, 5]), &p![5, 3, 1]), Err(Error::NotCanonical));
        assert_eq!(is_primitive(&c, &e, &p![3, 3, 3]), Err(Error::NotInPiece));
    }

    #[test]
    fn iota_examples() {
        let lam = cp(1, p![5, 3, 1]);
        let mu = cp(1, p![4, 4, 1]);
        assert_eq!(canonical_subgroup(&mu), [CharFn::trivial()]);
        assert_eq!(iota_embed(&mu, &lam, &CharFn::trivial()).unwrap(), CharFn::trivial());
        let e = CharFn::new(vec![1, 3]);
        assert_eq!(iota_embed(&lam, &lam, &e).unwrap(), e);
    }
}
