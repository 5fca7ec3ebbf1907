//! Macaulay binomial expansions, growth and restriction bounds, and shape
//! predicates on h-vectors.
//!
//! Everything here is integer arithmetic on vectors; nothing builds an algebra.

use crate::error::{Error, Result};

/// `C(n, k)` in `u128`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The `r`-th binomial expansion `n = C(m_r, r) + C(m_{r-1}, r-1) + ... + C(m_e, e)`
/// with `m_r > m_{r-1} > ... > m_e >= e >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialExpansion {
    pub n: u64,
    pub r: u64,
    /// `(m_j, j)` pairs with `j` descending from `r`.
    pub terms: Vec<(u64, u64)>,
}

impl BinomialExpansion {
    pub fn value(&self) -> u128 {
        self.terms.iter().map(|&(m, j)| binomial(m, j)).sum()
    }

    /// `n^{<r>}`: every term becomes `C(m_j + 1, j + 1)`.
    pub fn upper(&self) -> u128 {
        self.terms.iter().map(|&(m, j)| binomial(m + 1, j + 1)).sum()
    }

    /// `n_{<r>}`: every term becomes `C(m_j - 1, j)`.
    pub fn reduce(&self) -> u128 {
        self.terms
            .iter()
            .map(|&(m, j)| binomial(m.saturating_sub(1), j))
            .sum()
    }
}

/// Greedy expansion: at each step take the largest `m` with `C(m, j) <= n`.
pub fn binom_expand(n: u64, r: u64) -> Result<BinomialExpansion> {
    if n < 1 || r < 1 {
        return Err(Error::InvalidArgument(format!(
            "binomial expansion needs n, r >= 1 (got n = {n}, r = {r})"
        )));
    }
    let mut terms = Vec::new();
    let mut rest = n as u128;
    let mut j = r;
    while rest > 0 && j >= 1 {
        let mut m = j;
        while binomial(m + 1, j) <= rest {
            m += 1;
        }
        rest -= binomial(m, j);
        terms.push((m, j));
        j -= 1;
    }
    debug_assert_eq!(rest, 0);
    Ok(BinomialExpansion { n, r, terms })
}

/// `n^{<r>}`, with `0^{<r>} = 0`.
pub fn macaulay_upper(n: u64, r: u64) -> Result<u128> {
    if n == 0 && r >= 1 {
        return Ok(0);
    }
    Ok(binom_expand(n, r)?.upper())
}

/// `n_{<r>}`, with `0_{<r>} = 0`.
pub fn green_reduce(n: u64, r: u64) -> Result<u128> {
    if n == 0 && r >= 1 {
        return Ok(0);
    }
    Ok(binom_expand(n, r)?.reduce())
}

/// Macaulay's growth condition: `H(0) = 1` and `H(t+1) <= H(t)^{<t>}` for `t >= 1`.
pub fn macaulay_check(hf: &[usize]) -> bool {
    if hf.first() != Some(&1) {
        return false;
    }
    (1..hf.len().saturating_sub(1)).all(|t| {
        let bound = macaulay_upper(hf[t] as u64, t as u64).expect("t >= 1");
        hf[t + 1] as u128 <= bound
    })
}

/// Green's restriction bound `h'_t <= (h_t)_{<t>}` for all `t >= 1`; the
/// shorter vector is padded with zeros.
pub fn green_check(hf: &[usize], quotient: &[usize]) -> bool {
    let len = hf.len().max(quotient.len());
    (1..len).all(|t| {
        let h = hf.get(t).copied().unwrap_or(0);
        let hq = quotient.get(t).copied().unwrap_or(0);
        hq as u128 <= green_reduce(h as u64, t as u64).expect("t >= 1")
    })
}

/// Weakly increasing, then weakly decreasing.
pub fn unimodal(hf: &[usize]) -> bool {
    let mut i = 0;
    while i + 1 < hf.len() && hf[i] <= hf[i + 1] {
        i += 1;
    }
    while i + 1 < hf.len() && hf[i] >= hf[i + 1] {
        i += 1;
    }
    i + 1 >= hf.len()
}

pub fn symmetric(hf: &[usize]) -> bool {
    hf.iter().eq(hf.iter().rev())
}

/// First difference `max(h_i - h_{i-1}, 0)` with `h_{-1} = 0`.
pub fn positive_difference(hf: &[usize]) -> Vec<usize> {
    let mut prev = 0;
    hf.iter()
        .map(|&h| {
            let d = h.saturating_sub(prev);
            prev = h;
            d
        })
        .collect()
}

/// Even socle degree `2s`, symmetric, `h_1, ..., h_s` consecutive increasing
/// integers (`h_{i+1} = h_i + 1`), and `h_k <= k` for some `s + 1 <= k <= 2s - 1`.
pub fn forces_wlp_consecutive_rise(hf: &[usize]) -> bool {
    if hf.len() < 3 || !symmetric(hf) {
        return false;
    }
    let d = hf.len() - 1;
    if d % 2 != 0 {
        return false;
    }
    let s = d / 2;
    let consecutive = (1..s).all(|i| hf[i + 1] == hf[i] + 1);
    consecutive && (s + 1..d).any(|k| hf[k] <= k)
}

/// Strict rise to a flat top `h_t = ... = h_s` with `s >= t + 2` and
/// `h_s <= s`, then strict fall.
pub fn forces_wlp_flat_top(hf: &[usize]) -> bool {
    let len = hf.len();
    if len == 0 {
        return false;
    }
    let mut t = 0;
    while t + 1 < len && hf[t] < hf[t + 1] {
        t += 1;
    }
    let mut s = t;
    while s + 1 < len && hf[s + 1] == hf[s] {
        s += 1;
    }
    let falls = (s..len - 1).all(|i| hf[i] > hf[i + 1]);
    falls && s >= t + 2 && hf[s] <= s
}
