use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::rational::Rational;

/// `d^λ/dζ^λ (1/y₂) = numerator / y₂^(λ+1)`.
///
/// The numerator lives in variables `(y₂, y₂', …, y₂^(λ))`, variable `k` being `y₂^(k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransferJet {
    pub lambda: usize,
    pub numerator: MPoly,
    pub denominator_exponent: u32,
}

impl TransferJet {
    /// `Σ k·ν_k` of every numerator monomial; `None` if they disagree.
    pub fn prime_count(&self) -> Option<u32> {
        let mut counts = self.numerator.terms().map(|(e, _)| e.iter().enumerate().map(|(k, &v)| k as u32 * v).sum::<u32>());
        let first = counts.next()?;
        counts.all(|c| c == first).then_some(first)
    }

    /// Coefficient of `y₂^(λ) · y₂^(λ−1)`.
    pub fn leading_coefficient(&self) -> Rational {
        let mut e = vec![0; self.lambda + 1];
        e[0] = self.lambda as u32 - 1;
        e[self.lambda] += 1;
        self.numerator.coeff(&e)
    }

    /// Coefficient of `(y₂')^λ`.
    pub fn trailing_coefficient(&self) -> Rational {
        let mut e = vec![0; self.lambda + 1];
        e[1] = self.lambda as u32;
        self.numerator.coeff(&e)
    }
}

/// Total derivative on the jet ring `(v₀, v₁, …)`: `v_k ↦ v_{k+1}`.
pub(crate) fn jet_derivative(p: &MPoly) -> MPoly {
    let n = p.nvars();
    let mut out = MPoly::zero(n);
    for k in 0..n - 1 {
        let dk = p.derivative(k);
        if !dk.is_zero() {
            out = &out + &(&dk * &MPoly::var(n, k + 1));
        }
    }
    debug_assert!(p.derivative(n - 1).is_zero(), "jet ring too small");
    out
}

/// Builds the numerators of `y₀^(λ)` in a ring with `nvars` jet variables.
pub(crate) fn transfer_numerators(max_lambda: usize, nvars: usize) -> Vec<MPoly> {
    let mut out = vec![MPoly::one(nvars)];
    let y2 = MPoly::var(nvars, 0);
    let y2p = MPoly::var(nvars, 1);
    for l in 0..max_lambda {
        let n = &out[l];
        let next = &(&jet_derivative(n) * &y2) - &(&y2p * n).scale(&Rational::from_integer(((l + 1) as i64).into()));
        out.push(next);
    }
    out
}

pub fn transfer_jet(lambda: usize) -> Result<TransferJet> {
    if lambda == 0 {
        return Err(Error::ZeroOrder);
    }
    let numerator = transfer_numerators(lambda, lambda + 1).pop().unwrap();
    Ok(TransferJet { lambda, numerator, denominator_exponent: lambda as u32 + 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn mono(n: usize, e: &[u32], c: i64) -> MPoly {
        MPoly::monomial(n, e.to_vec(), int(c))
    }

    #[test]
    fn low_orders() {
        let t1 = transfer_jet(1).unwrap();
        assert_eq!(t1.numerator, mono(2, &[0, 1], -1));
        assert_eq!(t1.denominator_exponent, 2);

        let t2 = transfer_jet(2).unwrap();
        assert_eq!(t2.numerator, &mono(3, &[1, 0, 1], -1) + &mono(3, &[0, 2, 0], 2));

        let t3 = transfer_jet(3).unwrap();
        // −y₂'''/y₂² + 6 y₂''y₂'/y₂³ − 6 (y₂')³/y₂⁴: the middle term collects 2 from
        // differentiating −y₂''/y₂² and 4 from 2(y₂')²/y₂³
        let want = &(&mono(4, &[2, 0, 0, 1], -1) + &mono(4, &[1, 1, 1, 0], 6)) + &mono(4, &[0, 3, 0, 0], -6);
        assert_eq!(t3.numerator, want);
        assert_eq!(t3.denominator_exponent, 4);
    }

    #[test]
    fn homogeneity_and_extreme_terms() {
        let mut fact = 1i64;
        for l in 1..=8usize {
            fact *= l as i64;
            let t = transfer_jet(l).unwrap();
            assert_eq!(t.prime_count(), Some(l as u32));
            assert_eq!(t.leading_coefficient(), int(-1));
            assert_eq!(t.trailing_coefficient(), int(if l % 2 == 0 { fact } else { -fact }));
        }
    }
}
