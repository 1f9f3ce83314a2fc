use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

/// `(m₁, …, m_κ)` with `m₁ + 2m₂ + ⋯ + κm_κ = m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedComposition {
    pub kappa: usize,
    pub m: u64,
    pub parts: Vec<u64>,
}

impl WeightedComposition {
    /// `Σ m_k`, the number of generator factors.
    pub fn factor_count(&self) -> u64 {
        self.parts.iter().sum()
    }
}

/// Lazy enumeration, lexicographically descending on `(m_κ, …, m₁)`.
#[derive(Clone, Debug)]
pub struct Compositions {
    kappa: usize,
    m: u64,
    current: Option<Vec<u64>>,
}

/// Fills positions `upto-1, …, 2` greedily from `budget`; position 1 takes the rest.
fn fill_greedy(parts: &mut [u64], upto: usize, mut budget: u64) {
    for k in (2..upto).rev() {
        parts[k - 1] = budget / k as u64;
        budget -= parts[k - 1] * k as u64;
    }
    parts[0] = budget;
}

impl Iterator for Compositions {
    type Item = WeightedComposition;

    fn next(&mut self) -> Option<WeightedComposition> {
        let parts = self.current.take()?;
        let out = WeightedComposition { kappa: self.kappa, m: self.m, parts: parts.clone() };
        // least significant position above m₁ that can still be lowered
        if let Some(j) = (2..=self.kappa).find(|&j| parts[j - 1] > 0) {
            let mut next = parts;
            next[j - 1] -= 1;
            let used: u64 = (j..=self.kappa).map(|k| k as u64 * next[k - 1]).sum();
            fill_greedy(&mut next, j, self.m - used);
            self.current = Some(next);
        }
        Some(out)
    }
}

pub fn enumerate_compositions(kappa: usize, m: u64) -> Compositions {
    assert!(kappa >= 1, "order must be at least 1");
    let mut parts = vec![0; kappa];
    fill_greedy(&mut parts, kappa + 1, m);
    Compositions { kappa, m, current: Some(parts) }
}

/// Number of weighted compositions (the rank of the jet bundle), by dynamic programming.
pub fn composition_count(kappa: usize, m: u64) -> BigUint {
    let m = m as usize;
    let mut dp = vec![BigUint::zero(); m + 1];
    dp[0] = BigUint::one();
    for k in 1..=kappa {
        for w in k..=m {
            let add = dp[w - k].clone();
            dp[w] += add;
        }
    }
    dp[m].clone()
}
