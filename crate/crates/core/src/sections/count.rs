use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{ser_display, to_f64, Rational};
use crate::sections::{enumerate_compositions, WeightedComposition};

fn binom2(n: i64) -> u64 {
    if n < 2 {
        0
    } else {
        (n as u64) * (n as u64 - 1) / 2
    }
}

/// `dim H⁰(X, O(t)) = C(t+2, 2) − C(t−d+2, 2)` with `C(n, 2) = 0` for `n < 2`; zero for `t < 0`.
pub fn dim_h0(t: i64, d: u32) -> u64 {
    if t < 0 {
        return 0;
    }
    binom2(t + 2) - binom2(t - d as i64 + 2)
}

/// `δ = Σ m_k (d − k − 2)`.
pub fn delta_degree(c: &WeightedComposition, d: u32) -> i64 {
    c.parts.iter().enumerate().map(|(i, &mk)| mk as i64 * (d as i64 - i as i64 - 3)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionEntry {
    pub parts: Vec<u64>,
    pub delta: i64,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionCount {
    pub kappa: usize,
    pub m: u64,
    pub d: u32,
    #[serde(serialize_with = "ser_display")]
    pub total: BigUint,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_composition: Option<Vec<CompositionEntry>>,
}

/// `counts[n]` = number of compositions of weight `m` with `n` factors.
fn counts_by_factor_number(kappa: usize, m: u64) -> Vec<BigUint> {
    let m = m as usize;
    // dp[w][n]
    let mut dp = vec![vec![BigUint::zero(); m + 1]; m + 1];
    dp[0][0] = BigUint::one();
    for k in 1..=kappa {
        for w in k..=m {
            for n in 1..=w {
                if !dp[w - k][n - 1].is_zero() {
                    let add = dp[w - k][n - 1].clone();
                    dp[w][n] += add;
                }
            }
        }
    }
    dp.swap_remove(m)
}

/// Number of sections `Σ dim_h0(δ(c), d)` over all compositions of weight `m`.
///
/// Since `δ = (d − 2)·Σm_k − m` depends only on the number of factors, the total is
/// computed by a dynamic program over (weight, factor count); `breakdown` additionally
/// enumerates every composition.
pub fn count_sections(kappa: usize, m: u64, d: u32, breakdown: bool) -> Result<SectionCount> {
    if kappa == 0 {
        return Err(Error::ZeroOrder);
    }
    if d == 0 {
        return Err(Error::Invalid("degree must be at least 1".into()));
    }
    let counts = counts_by_factor_number(kappa, m);
    let total = counts
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| c * BigUint::from(dim_h0((d as i64 - 2) * n as i64 - m as i64, d)))
        .sum();
    let per_composition = breakdown.then(|| {
        enumerate_compositions(kappa, m)
            .map(|c| {
                let delta = delta_degree(&c, d);
                CompositionEntry { dim: dim_h0(delta, d), delta, parts: c.parts }
            })
            .collect()
    });
    Ok(SectionCount { kappa, m, d, total, per_composition })
}

pub fn harmonic_number(kappa: usize) -> Rational {
    (1..=kappa).map(|k| Rational::new(BigInt::one(), BigInt::from(k))).sum()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

/// `H_κ · m^κ / (κ!)²`, the leading term of `Σ_compositions (m₁ + ⋯ + m_κ)`.
pub fn harmonic_model(kappa: usize, m: u64) -> Rational {
    let f = factorial(kappa);
    harmonic_number(kappa) * Rational::new(BigInt::from(m).pow(kappa as u32), &f * &f)
}

/// Leading-order model `d² H_κ m^κ / (κ!)²` for the section count; leading order only.
pub fn asymptotic_estimate(kappa: usize, m: u64, d: u32) -> Result<Rational> {
    if kappa == 0 {
        return Err(Error::ZeroOrder);
    }
    if m == 0 {
        return Err(Error::Invalid("weight must be at least 1".into()));
    }
    Ok(harmonic_model(kappa, m) * Rational::from_integer(BigInt::from(d) * BigInt::from(d)))
}

/// Exact `Σ_compositions (m₁ + ⋯ + m_κ)`.
pub fn composition_weight_sum(kappa: usize, m: u64) -> BigUint {
    counts_by_factor_number(kappa, m).iter().enumerate().map(|(n, c)| c * BigUint::from(n)).sum()
}

/// `|exact − model| / exact`.
pub fn relative_gap(exact: &Rational, model: &Rational) -> f64 {
    to_f64(&((exact - model) / exact)).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn dim_examples() {
        for d in 1..10u32 {
            assert_eq!(dim_h0(d as i64, d), binom2(d as i64 + 2) - 1);
            assert_eq!(dim_h0(0, d), 1);
        }
        assert_eq!(dim_h0(1, 4), 3);
        assert_eq!(dim_h0(-1, 4), 0);
    }

    #[test]
    fn delta_examples() {
        let c = |parts: Vec<u64>| WeightedComposition { kappa: parts.len(), m: 0, parts };
        assert_eq!(delta_degree(&c(vec![1]), 4), 1);
        assert_eq!(delta_degree(&c(vec![0, 0, 1]), 6), 1);
        assert_eq!(delta_degree(&c(vec![2, 1]), 5), 5);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_sections(1, 1, 4, false).unwrap().total, BigUint::from(3u32));
        for d in 1..8 {
            assert_eq!(count_sections(1, 0, d, false).unwrap().total, BigUint::one());
        }
        let c = count_sections(2, 2, 5, true).unwrap();
        assert_eq!(c.total, BigUint::from(18u32));
        let rows = c.per_composition.unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows.iter().map(|r| r.dim).sum::<u64>(), 18);
        assert_eq!(count_sections(1, 0, 5, false).unwrap().total, BigUint::one());
    }

    #[test]
    fn fast_path_agrees_with_enumeration() {
        for kappa in 1..=4 {
            for m in 0..=14 {
                for d in 1..=9 {
                    let c = count_sections(kappa, m, d, true).unwrap();
                    let s: u64 = c.per_composition.as_ref().unwrap().iter().map(|r| r.dim).sum();
                    assert_eq!(c.total, BigUint::from(s), "κ={kappa} m={m} d={d}");
                }
            }
        }
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic_number(1), int(1));
        assert_eq!(harmonic_number(3), frac(11, 6));
        assert_eq!(asymptotic_estimate(1, 10, 5).unwrap(), int(250));
        assert_eq!(harmonic_model(2, 300), int(33750));
        assert_eq!(composition_weight_sum(2, 300), BigUint::from(33975u32));
    }
}
