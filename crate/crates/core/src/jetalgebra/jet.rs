use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::jetalgebra::DSym;

/// Which trivializing chart an expression lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    /// `{R_x ≠ 0}`: jets in `y`, denominators are powers of `R[1,0]`.
    #[serde(rename = "x_side")]
    X,
    /// `{R_y ≠ 0}`: jets in `x`, denominators are powers of `R[0,1]`.
    #[serde(rename = "y_side")]
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }

    /// The letter whose jets are the fiber coordinates on this side.
    pub fn own_letter(self) -> char {
        match self {
            Side::X => 'y',
            Side::Y => 'x',
        }
    }

    pub fn foreign_letter(self) -> char {
        self.other().own_letter()
    }

    pub fn denominator(self) -> DSym {
        match self {
            Side::X => DSym::X,
            Side::Y => DSym::Y,
        }
    }
}

/// Exponent vector `μ` of `v'^μ₁ v''^μ₂ …`; `μ[k-1]` is the exponent of `v^(k)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct JetMonomial(Vec<u32>);

impl JetMonomial {
    pub fn new(mut mu: Vec<u32>) -> Self {
        while mu.last() == Some(&0) {
            mu.pop();
        }
        JetMonomial(mu)
    }

    pub fn one() -> Self {
        JetMonomial(Vec::new())
    }

    /// The single jet variable `v^(k)`, `k ≥ 1`.
    pub fn var(k: usize) -> Self {
        assert!(k >= 1, "jet variables start at order 1");
        let mut mu = vec![0; k];
        mu[k - 1] = 1;
        JetMonomial(mu)
    }

    /// `(v^(k))^e`.
    pub fn var_pow(k: usize, e: u32) -> Self {
        let mut mu = vec![0; k];
        mu[k - 1] = e;
        Self::new(mu)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, k: usize) -> u32 {
        k.checked_sub(1).and_then(|i| self.0.get(i)).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Highest derivative order present (0 for the empty monomial).
    pub fn max_order(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        jet_weight(self)
    }

    /// `Σ μ_k`, the number of jet factors.
    pub fn factor_count(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &JetMonomial) -> JetMonomial {
        let n = self.0.len().max(other.0.len());
        JetMonomial((0..n).map(|k| self.0.get(k).unwrap_or(&0) + other.0.get(k).unwrap_or(&0)).collect())
    }

    pub fn pow(&self, e: u32) -> JetMonomial {
        if e == 0 {
            return JetMonomial::one();
        }
        JetMonomial(self.0.iter().map(|m| m * e).collect())
    }

    /// Leibniz rule with the jet shift `v^(k) -> v^(k+1)`: pairs `(multiplicity, monomial)`.
    pub fn derivative(&self) -> Vec<(u32, JetMonomial)> {
        let mut out = Vec::new();
        for (idx, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let mut mu = self.0.clone();
            mu[idx] -= 1;
            if mu.len() <= idx + 1 {
                mu.push(0);
            }
            mu[idx + 1] += 1;
            out.push((e, JetMonomial::new(mu)));
        }
        out
    }

    /// Renders with the given letter: `y'^2*y''`, highest order first.
    pub fn render(&self, letter: char) -> String {
        let mut s = String::new();
        for k in (1..=self.0.len()).rev() {
            let e = self.0[k - 1];
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            let var = jet_variable_name(letter, k);
            match (e, k >= 4) {
                (1, _) => s.push_str(&var),
                (_, false) => write!(s, "{var}^{e}").unwrap(),
                (_, true) => write!(s, "({var})^{e}").unwrap(),
            }
        }
        s
    }
}

/// `y'`, `y''`, `y'''`, then `y^(k)`.
pub fn jet_variable_name(letter: char, k: usize) -> String {
    if k <= 3 {
        format!("{letter}{}", "'".repeat(k))
    } else {
        format!("{letter}^({k})")
    }
}

/// `Σ k·μ_k`.
pub fn jet_weight(m: &JetMonomial) -> u32 {
    m.0.iter().enumerate().map(|(i, e)| (i as u32 + 1) * e).sum()
}

impl Ord for JetMonomial {
    /// Weight first, then from the highest derivative order down, larger exponent first.
    fn cmp(&self, other: &Self) -> Ordering {
        jet_weight(self).cmp(&jet_weight(other)).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for k in (1..=n).rev() {
                match other.exponent(k).cmp(&self.exponent(k)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for JetMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
