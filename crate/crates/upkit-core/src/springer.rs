//! Springer combinatorics for good-parity classes: the γ-sequence, the tableau algorithm
//! producing distinguished constituents, the orders `≤_{Δ,τ}` and weak sphericity.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::components::{block_structure, CharFn};
use crate::error::{Error, Result};
use crate::partition::{ClassPartition, Partition};
use crate::wreps::{e_family, Bipartition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpringerIndexData {
    cp: ClassPartition,
    eps: CharFn,
    /// `ε̄(i)` at position `i-1`.
    epsbar: Vec<i8>,
    e_plus: Vec<usize>,
    e_minus: Vec<usize>,
    x: Vec<usize>,
    x_s: Vec<usize>,
    x_eps: Vec<usize>,
    s_max: Vec<u64>,
    s_min: Vec<u64>,
}

impl SpringerIndexData {
    /// Requires a good-parity class and `ε` supported on `S(λ)`.
    pub fn new(cp: &ClassPartition, eps: &CharFn) -> Result<Self> {
        if !cp.is_good_parity() {
            return Err(Error::BadParity);
        }
        let eps = CharFn::on(cp, eps.subset().to_vec())?;
        let parts = cp.lambda().parts();
        let epsbar: Vec<i8> = (1..=parts.len())
            .map(|i| if (eps.eps(parts[i - 1]) as usize + i - 1).is_multiple_of(2) { 1 } else { -1 })
            .collect();
        let e_plus = (1..=parts.len()).filter(|&i| epsbar[i - 1] == 1).collect();
        let e_minus = (1..=parts.len()).filter(|&i| epsbar[i - 1] == -1).collect();
        let x: Vec<usize> = (1..=parts.len()).filter(|&i| i == 1 || parts[i - 2] != parts[i - 1]).collect();
        let want = if cp.s() == 1 { 0 } else { 1 };
        let x_s = x.iter().copied().filter(|i| i % 2 == want).collect();
        let x_eps = x
            .iter()
            .copied()
            .filter(|&i| {
                let prev = if i == 1 { 0 } else { eps.eps(parts[i - 2]) };
                eps.eps(parts[i - 1]) != prev
            })
            .collect();

        let bs = block_structure(cp);
        let s0 = cp.s0();
        let mut s_max: Vec<u64> = bs.classes.iter().map(|b| b.theta_max()).collect();
        let mut s_min: Vec<u64> = bs.classes.iter().map(|b| b.theta_min()).collect();
        let first = parts[0];
        let last = parts[parts.len() - 1];
        // λ₁ tops the unbounded block and never carries a nonzero value in A†; it is
        // dropped whether or not it lies in S₀.
        if cp.s() == 1 {
            s_max.retain(|&c| c != first);
        }
        if cp.s() == -1 && s0.contains(&last) && bs.classes.iter().any(|b| b.theta_max() == last) {
            s_min.retain(|&c| c != last);
        }
        Ok(SpringerIndexData { cp: cp.clone(), eps, epsbar, e_plus, e_minus, x, x_s, x_eps, s_max, s_min })
    }

    pub fn class(&self) -> &ClassPartition {
        &self.cp
    }

    pub fn eps(&self) -> &CharFn {
        &self.eps
    }

    pub fn len(&self) -> usize {
        self.epsbar.len()
    }

    pub fn is_empty(&self) -> bool {
        self.epsbar.is_empty()
    }

    /// `λ_i`, 1-based.
    pub fn part(&self, i: usize) -> u64 {
        self.cp.lambda().part(i)
    }

    /// `ε̄(i)`, 1-based.
    pub fn epsbar(&self, i: usize) -> i8 {
        self.epsbar[i - 1]
    }

    pub fn e_plus(&self) -> &[usize] {
        &self.e_plus
    }

    pub fn e_minus(&self) -> &[usize] {
        &self.e_minus
    }

    /// `X_λ`: first occurrence of each part.
    pub fn x(&self) -> &[usize] {
        &self.x
    }

    /// `X^s_λ`: even members for `s = 1`, odd ones for `s = -1`.
    pub fn x_s(&self) -> &[usize] {
        &self.x_s
    }

    /// `X_{λ,ε}`.
    pub fn x_eps(&self) -> &[usize] {
        &self.x_eps
    }

    pub fn s_max(&self) -> &[u64] {
        &self.s_max
    }

    pub fn s_min(&self) -> &[u64] {
        &self.s_min
    }

    pub fn rank(&self) -> u64 {
        self.cp.gt().rank()
    }
}

/// `D_ε(i)`; `i = 0` sums over everything.
pub fn defect(sd: &SpringerIndexData, i: usize) -> i64 {
    let below = |c: u64| i == 0 || c < sd.part(i);
    let side = |set: &[u64]| set.iter().filter(|&&a| below(a)).map(|&a| sd.eps.eps(a) as i64).sum::<i64>();
    side(&sd.s_max) - side(&sd.s_min)
}

pub fn is_springer_type(sd: &SpringerIndexData) -> bool {
    defect(sd, 0) == 0
}

/// Raw `γ_i`, possibly negative if conventions were broken.
pub fn gamma_raw(sd: &SpringerIndexData) -> Vec<i64> {
    let s = sd.cp.s() as i64;
    let (m, m_prime) = if s == 1 { (-2, 0) } else { (1, -1) };
    (1..=sd.len())
        .map(|i| {
            let lam = sd.part(i) as i64;
            let base = if i % 2 == 0 { (lam + 1) / 2 } else { lam / 2 };
            let sign_i = if i % 2 == 0 { 1 } else { -1 };
            let mm = if sd.s_min.contains(&sd.part(i)) { m_prime } else { m };
            base - 2 * s * sd.epsbar(i) as i64 * defect(sd, i) + sign_i * sd.eps.eps(sd.part(i)) as i64 * mm
        })
        .collect()
}

/// The zero-part constraints on `γ_i = 0` when `|D_ε(i)| ≤ 1`.
pub fn zero_part_constraints_hold(sd: &SpringerIndexData, i: usize) -> bool {
    let d = defect(sd, i);
    let lam = sd.part(i);
    let in_min = |c: u64| sd.s_min.contains(&c);
    let in_s0 = |c: u64| sd.cp.s0().contains(&c);
    let e = |c: u64| sd.eps.eps(c);
    let odd = i % 2 == 1;
    match lam {
        1 => true,
        2 => in_min(2) || odd,
        3 => !odd,
        4 => (d == 1 && e(4) == 0) || (!in_min(4) && odd),
        5 => (d == 1 && e(5) == 0) || (in_s0(1) && in_s0(3) && e(1) == 1 && e(3) == 0 && e(5) == 1),
        6 => (d == 1 && odd) || (in_s0(2) && in_s0(4) && in_min(6) && e(2) == 1 && e(4) == 0 && e(6) == 1),
        7 => d == 1 && !in_min(7),
        _ => false,
    }
}

/// `γ^{λ,ε}`, validated.
pub fn gamma(sd: &SpringerIndexData) -> Result<Vec<u64>> {
    if !is_springer_type(sd) {
        return Err(Error::NotSpringerType);
    }
    let raw = gamma_raw(sd);
    if raw.iter().any(|&g| g < 0) {
        return Err(Error::MalformedOutput);
    }
    for idx in [&sd.e_plus, &sd.e_minus] {
        if idx.windows(2).any(|w| raw[w[0] - 1] < raw[w[1] - 1]) {
            return Err(Error::MalformedOutput);
        }
    }
    for i in 1..=sd.len() {
        if raw[i - 1] == 0 && defect(sd, i).abs() <= 1 && !zero_part_constraints_hold(sd, i) {
            return Err(Error::MalformedOutput);
        }
    }
    Ok(raw.into_iter().map(|g| g as u64).collect())
}

pub fn springer_bipartition(sd: &SpringerIndexData) -> Result<Bipartition> {
    let g = gamma(sd)?;
    let pick = |idx: &[usize]| Partition::new(idx.iter().map(|&i| g[i - 1]).filter(|&x| x > 0).collect());
    let b = Bipartition::new(pick(&sd.e_plus), pick(&sd.e_minus));
    if b.n() != sd.rank() {
        return Err(Error::MalformedOutput);
    }
    Ok(b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenTableau {
    pub rows: Vec<Vec<usize>>,
    pub delta: u64,
    pub tau: u64,
    pub alpha: Partition,
    pub beta: Partition,
}

impl GreenTableau {
    pub fn bipartition(&self) -> Bipartition {
        Bipartition::new(self.alpha.clone(), self.beta.clone())
    }
}

/// `R(λ,ε,Δ,τ)`.
pub fn green_tableaux(sd: &SpringerIndexData, delta: u64, tau: u64) -> Result<Vec<GreenTableau>> {
    let g = gamma(sd)?;
    let mut out = Vec::new();
    let mut used = alloc::vec![false; sd.len() + 1];
    let mut rows = Vec::new();
    expand(sd, &g, delta as i64, tau as i64, 0, &mut used, &mut rows, &mut out);
    let finish = |rows: Vec<Vec<usize>>| {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for r in &rows {
            let sum: u64 = r.iter().map(|&d| g[d - 1]).sum();
            if sum > 0 {
                if sd.epsbar(r[0]) == 1 { a.push(sum) } else { b.push(sum) }
            }
        }
        GreenTableau { rows, delta, tau, alpha: Partition::new(a), beta: Partition::new(b) }
    };
    Ok(out.into_iter().map(finish).collect())
}

#[allow(clippy::too_many_arguments)]
fn expand(
    sd: &SpringerIndexData,
    g: &[u64],
    delta: i64,
    tau: i64,
    start_sum: i64,
    used: &mut Vec<bool>,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let first_free = |u: i8, used: &[bool]| {
        let idx = if u == 1 { &sd.e_plus } else { &sd.e_minus };
        idx.iter().copied().find(|&i| !used[i])
    };
    let k = [first_free(1, used), first_free(-1, used)];
    if k[0].is_none() && k[1].is_none() {
        out.push(rows.clone());
        return;
    }
    let bound = delta - tau * start_sum;
    for (x, u) in [(0usize, 1i64), (1, -1)] {
        let Some(start) = k[x] else { continue };
        let ok = g[start - 1] as i64 >= -u * bound || k[1 - x].is_none();
        if !ok {
            continue;
        }
        let mut row = alloc::vec![start];
        used[start] = true;
        loop {
            let prev = *row.last().unwrap();
            let want = -sd.epsbar(prev);
            let idx = if want == 1 { &sd.e_plus } else { &sd.e_minus };
            match idx.iter().copied().find(|&i| i > prev && !used[i]) {
                Some(next) => {
                    used[next] = true;
                    row.push(next);
                }
                None => break,
            }
        }
        rows.push(row);
        expand(sd, g, delta, tau, start_sum + u, used, rows, out);
        for &i in rows.pop().unwrap().iter() {
            used[i] = false;
        }
    }
}

/// `P(λ,ε,Δ,τ)` with the raw tableau count.
pub fn p_set(sd: &SpringerIndexData, delta: u64, tau: u64) -> Result<(BTreeSet<Bipartition>, usize)> {
    let t = green_tableaux(sd, delta, tau)?;
    let n = t.len();
    Ok((t.into_iter().map(|t| t.bipartition()).collect(), n))
}

/// First `cutoff` entries of `Λ_{Δ,τ}(α,β)`.
pub fn lambda_seq(x: &Bipartition, delta: i64, tau: i64, cutoff: usize) -> Vec<i64> {
    let r = |p: &Partition, shift: i64| -> Vec<i64> {
        (0..cutoff).map(|i| shift + p.part(i + 1) as i64 - tau * i as i64).collect()
    };
    let mut v = r(&x.alpha, delta);
    v.extend(r(&x.beta, 0));
    v.sort_unstable_by(|a, b| b.cmp(a));
    v.truncate(cutoff);
    v
}

pub fn cutoff(xs: &[&Bipartition], delta: i64, tau: i64) -> usize {
    let l = xs.iter().map(|b| b.alpha.len().max(b.beta.len())).max().unwrap_or(0);
    let q = (delta + tau - 1).div_euclid(tau).max(0) as usize;
    2 * (l + q + 1)
}

/// `x ≤_{Δ,τ} y`.
pub fn leq_dominance(x: &Bipartition, y: &Bipartition, delta: i64, tau: i64) -> bool {
    let c = cutoff(&[x, y], delta, tau);
    let (a, b) = (lambda_seq(x, delta, tau, c), lambda_seq(y, delta, tau, c));
    let (mut sa, mut sb) = (0, 0);
    a.iter().zip(&b).all(|(p, q)| {
        sa += p;
        sb += q;
        sa <= sb
    })
}

/// `(Δ_G, τ_G)`.
pub fn standard_params(sd: &SpringerIndexData) -> (u64, u64) {
    let n = sd.rank();
    if sd.cp.s() == 1 { (n + 1, 1) } else { (n + 1, 2 * n + 1) }
}

/// A character that is not of Springer type gives `Σ(O,ε) = 0`, which is never weakly spherical.
pub fn weakly_spherical(sd: &SpringerIndexData) -> Result<bool> {
    if !is_springer_type(sd) {
        return Ok(false);
    }
    let (d, t) = standard_params(sd);
    let (p, _) = p_set(sd, d, t)?;
    Ok(e_family(sd.cp.s(), sd.rank()).iter().any(|e| p.contains(e)))
}

/// Reduce to the good-parity part and decide there.
pub fn weakly_spherical_general(cp: &ClassPartition, eps: &CharFn) -> Result<bool> {
    let gp = cp.good_parity_part();
    if gp.lambda().is_empty() {
        return Ok(true);
    }
    weakly_spherical(&SpringerIndexData::new(&gp, eps)?)
}

/// The early-exit criterion: some `i ∈ X_λ` with `γ_i = 0` such that every smaller member of
/// `X_{λ,ε}` lies in `X^s_λ`.
pub fn zero_tail_exit(sd: &SpringerIndexData) -> Result<bool> {
    let g = gamma(sd)?;
    Ok(sd.x.iter().any(|&i| {
        g[i - 1] == 0 && sd.x_eps.iter().filter(|&&a| a < i).all(|a| sd.x_s.contains(a))
    }))
}
