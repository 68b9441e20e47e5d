//! Special partitions, the moves `T^I` / `T_J`, relative special pieces and the duality `d`.

use alloc::vec::Vec;

use crate::components::{block_structure, BlockStructure};
use crate::error::{Error, Result};
use crate::partition::{classify, ClassPartition, GroupType, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceData {
    /// `𝕀(λ)`, increasing.
    pub i: Vec<u64>,
    /// `𝕁(λ)`, increasing.
    pub j: Vec<u64>,
    /// Indices into `blocks.classes` of the admissible blocks.
    pub admissible: Vec<usize>,
    pub blocks: BlockStructure,
}

pub fn piece_data(cp: &ClassPartition) -> PieceData {
    let blocks = block_structure(cp);
    let i: Vec<u64> = cp
        .bp()
        .support()
        .into_iter()
        .filter(|&c| blocks.classes.iter().any(|b| b.spans(c)))
        .collect();
    let s0 = cp.s0();
    let mut admissible = Vec::new();
    for (x, b) in blocks.classes.iter().enumerate() {
        if b.open_below {
            continue;
        }
        let lo = b.theta_min();
        let hi = b.theta_max();
        let below = lo > 2
            && blocks
                .classes
                .iter()
                .enumerate()
                .any(|(y, o)| y != x && o.theta_max() == lo - 2);
        let at_two = lo == 2 && (hi == 2 || (s0.binary_search(&2).is_ok() && hi > 2));
        if below || at_two {
            admissible.push(x);
        }
    }
    let mut j: Vec<u64> = admissible.iter().map(|&x| blocks.classes[x].theta_min() - 1).collect();
    j.sort_unstable();
    PieceData { i, j, admissible, blocks }
}

pub fn is_special(cp: &ClassPartition) -> bool {
    piece_data(cp).i.is_empty()
}

fn pair(c: u64) -> Partition {
    Partition::new(alloc::vec![c - 1, c + 1])
}

fn twice(c: u64) -> Partition {
    Partition::new(alloc::vec![c, c])
}

fn check_subset(set: &[u64], allowed: &[u64], err: fn(u64) -> Error) -> Result<()> {
    for &c in set {
        if !allowed.contains(&c) {
            return Err(err(c));
        }
    }
    Ok(())
}

/// `T^I(λ) = λ ∪ (c-1,c+1) ∖ (c,c)` for `c ∈ I`.
pub fn t_up(cp: &ClassPartition, set: &[u64]) -> Result<ClassPartition> {
    check_subset(set, &piece_data(cp).i, Error::NotInI)?;
    let mut lam = cp.lambda().clone();
    for &c in set {
        lam = lam.difference(&twice(c))?;
    }
    for &c in set {
        lam = lam.union(&pair(c));
    }
    classify(lam, cp.gt())
}

/// `T_J(λ) = λ ∪ (c,c) ∖ (c-1,c+1)` for `c ∈ J`.
pub fn t_down(cp: &ClassPartition, set: &[u64]) -> Result<ClassPartition> {
    check_subset(set, &piece_data(cp).j, Error::NotInJ)?;
    t_down_unchecked(cp, set)
}

pub(crate) fn t_down_unchecked(cp: &ClassPartition, set: &[u64]) -> Result<ClassPartition> {
    let mut lam = cp.lambda().clone();
    for &c in set {
        lam = lam.difference(&pair(c))?;
    }
    for &c in set {
        lam = lam.union(&twice(c));
    }
    classify(lam, cp.gt())
}

/// `Spc(λ) = {T_J(λ) : J ⊆ 𝕁(λ)}`, each with its `J`. Ordered by the bitmask of `J`.
pub fn special_piece(cp: &ClassPartition) -> Vec<(Vec<u64>, ClassPartition)> {
    let j = piece_data(cp).j;
    (0u64..(1 << j.len()))
        .map(|mask| {
            let sub: Vec<u64> = (0..j.len()).filter(|x| mask >> x & 1 == 1).map(|x| j[x]).collect();
            let t = t_down_unchecked(cp, &sub).expect("J ⊆ 𝕁(λ) always applies");
            (sub, t)
        })
        .collect()
}

/// Collapse into `P^s`: while some bad-parity part `q` has odd multiplicity,
/// take the largest such, lower its last copy and raise the next part that is `< q-1`.
pub fn collapse(s: i8, lambda: &Partition) -> Partition {
    let mut v: Vec<u64> = lambda.parts().to_vec();
    loop {
        let lam = Partition::new(v.clone());
        let bad = lam
            .mults()
            .into_iter()
            .rev()
            .find(|&(c, k)| !crate::partition::good_parity(s, c) && k % 2 == 1)
            .map(|(c, _)| c);
        let Some(q) = bad else {
            return lam;
        };
        v = lam.parts().to_vec();
        let last = v.iter().rposition(|&p| p == q).unwrap();
        v[last] -= 1;
        match v[last + 1..].iter().position(|&p| p < q - 1) {
            Some(off) => v[last + 1 + off] += 1,
            None => v.push(1),
        }
    }
}

/// The duality `d: P^s(N) → P^{-s}(N - s)`.
pub fn bvls_dual(cp: &ClassPartition) -> ClassPartition {
    let mut t: Vec<u64> = cp.lambda().transpose().parts().to_vec();
    if cp.s() == 1 {
        if let Some(x) = t.last_mut() {
            *x -= 1;
        }
    } else if let Some(x) = t.first_mut() {
        *x += 1;
    } else {
        t.push(1);
    }
    let gt: GroupType = cp.gt().dual();
    let out = collapse(gt.s(), &Partition::new(t));
    classify(out, gt).expect("collapse lands in P^{-s}")
}
