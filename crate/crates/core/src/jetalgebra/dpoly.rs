use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{to_pq, Rational};

/// The partial derivative `∂^(i+j) R / ∂x^i ∂y^j` as an opaque symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DSym {
    pub i: u32,
    pub j: u32,
}

impl DSym {
    pub const X: DSym = DSym { i: 1, j: 0 };
    pub const Y: DSym = DSym { i: 0, j: 1 };

    pub fn new(i: u32, j: u32) -> Result<Self> {
        if i + j == 0 {
            return Err(Error::InvalidSymbol { i, j });
        }
        Ok(DSym { i, j })
    }

    pub fn order(self) -> u32 {
        self.i + self.j
    }

    pub fn mirror(self) -> DSym {
        DSym { i: self.j, j: self.i }
    }

    /// Derivative in `x`: `R[i,j] -> R[i+1,j]`.
    pub fn shift_x(self) -> DSym {
        DSym { i: self.i + 1, j: self.j }
    }

    pub fn shift_y(self) -> DSym {
        DSym { i: self.i, j: self.j + 1 }
    }
}

impl fmt::Display for DSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R[{},{}]", self.i, self.j)
    }
}

/// Product of symbols with positive exponents, sorted by symbol.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DMonomial(Vec<(DSym, u32)>);

impl DMonomial {
    pub fn one() -> Self {
        DMonomial(Vec::new())
    }

    pub fn sym(s: DSym) -> Self {
        DMonomial(vec![(s, 1)])
    }

    pub fn from_factors<I: IntoIterator<Item = (DSym, u32)>>(factors: I) -> Self {
        let mut map: BTreeMap<DSym, u32> = BTreeMap::new();
        for (s, e) in factors {
            *map.entry(s).or_default() += e;
        }
        DMonomial(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn factors(&self) -> &[(DSym, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, s: DSym) -> u32 {
        self.0.binary_search_by(|(t, _)| t.cmp(&s)).map_or(0, |k| self.0[k].1)
    }

    /// Number of symbol factors counted with multiplicity.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Sum of `(i+j-1)·e` over all factors.
    pub fn bonus(&self) -> u32 {
        self.0.iter().map(|(s, e)| (s.order() - 1) * e).sum()
    }

    pub fn mul(&self, other: &DMonomial) -> DMonomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        DMonomial(out)
    }

    pub fn mul_sym_pow(&self, s: DSym, k: u32) -> DMonomial {
        if k == 0 {
            return self.clone();
        }
        self.mul(&DMonomial(vec![(s, k)]))
    }

    /// Divides by `s^k`; `None` if not divisible.
    pub fn div_sym_pow(&self, s: DSym, k: u32) -> Option<DMonomial> {
        if k == 0 {
            return Some(self.clone());
        }
        let pos = self.0.binary_search_by(|(t, _)| t.cmp(&s)).ok()?;
        let e = self.0[pos].1;
        if e < k {
            return None;
        }
        let mut v = self.0.clone();
        if e == k {
            v.remove(pos);
        } else {
            v[pos].1 -= k;
        }
        Some(DMonomial(v))
    }

    pub fn mirror(&self) -> DMonomial {
        DMonomial::from_factors(self.0.iter().map(|(s, e)| (s.mirror(), *e)))
    }
}

impl fmt::Display for DMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial in the derivative symbols with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DPoly {
    terms: BTreeMap<DMonomial, Rational>,
}

impl DPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, DMonomial::one())
    }

    pub fn sym(s: DSym) -> Self {
        Self::term(Rational::one(), DMonomial::sym(s))
    }

    pub fn term(c: Rational, m: DMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        DPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Rational, DMonomial)>>(it: I) -> Self {
        let mut p = DPoly::zero();
        for (c, m) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &DMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: DMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &DPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> DPoly {
        if c.is_zero() {
            return DPoly::zero();
        }
        DPoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_monomial(&self, c: &Rational, m: &DMonomial) -> DPoly {
        if c.is_zero() {
            return DPoly::zero();
        }
        DPoly { terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect() }
    }

    pub fn mul_sym_pow(&self, s: DSym, k: u32) -> DPoly {
        if k == 0 {
            return self.clone();
        }
        DPoly { terms: self.terms.iter().map(|(m, v)| (m.mul_sym_pow(s, k), v.clone())).collect() }
    }

    /// Smallest exponent of `s` over all terms; `None` for zero.
    pub fn min_power(&self, s: DSym) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(s)).min()
    }

    /// Divides every term by `s^k`; panics if some term is not divisible.
    pub fn div_sym_pow(&self, s: DSym, k: u32) -> DPoly {
        if k == 0 {
            return self.clone();
        }
        DPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.div_sym_pow(s, k).expect("symbol power does not divide"), v.clone()))
                .collect(),
        }
    }

    pub fn mirror(&self) -> DPoly {
        DPoly { terms: self.terms.iter().map(|(m, v)| (m.mirror(), v.clone())).collect() }
    }

    fn chain(&self, shift: fn(DSym) -> DSym) -> DPoly {
        let mut out = DPoly::zero();
        for (m, c) in &self.terms {
            for (pos, &(s, e)) in m.factors().iter().enumerate() {
                let mut rest: Vec<(DSym, u32)> = m.factors().to_vec();
                if e == 1 {
                    rest.remove(pos);
                } else {
                    rest[pos].1 -= 1;
                }
                let nm = DMonomial::from_factors(rest.into_iter().chain(std::iter::once((shift(s), 1))));
                out.add_term(nm, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// `Σ ∂N/∂R[i,j] · R[i+1,j]`, the coefficient of `x'` in the total derivative.
    pub fn d_dx(&self) -> DPoly {
        self.chain(DSym::shift_x)
    }

    /// `Σ ∂N/∂R[i,j] · R[i,j+1]`, the coefficient of `y'` in the total derivative.
    pub fn d_dy(&self) -> DPoly {
        self.chain(DSym::shift_y)
    }

    /// Common symbol degree of all terms, if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(DMonomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

impl Add for &DPoly {
    type Output = DPoly;
    fn add(self, rhs: &DPoly) -> DPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Neg for &DPoly {
    type Output = DPoly;
    fn neg(self) -> DPoly {
        DPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &DPoly {
    type Output = DPoly;
    fn sub(self, rhs: &DPoly) -> DPoly {
        self + &(-rhs)
    }
}

impl Mul for &DPoly {
    type Output = DPoly;
    fn mul(self, rhs: &DPoly) -> DPoly {
        let mut out = DPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for DPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct DTermRow {
    /// `[i, j, exponent]` triples
    symbols: Vec<[u32; 3]>,
    c: String,
}

impl Serialize for DPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<DTermRow> = self
            .terms
            .iter()
            .map(|(m, c)| DTermRow {
                symbols: m.factors().iter().map(|(d, e)| [d.i, d.j, *e]).collect(),
                c: to_pq(c),
            })
            .collect();
        rows.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn d(i: u32, j: u32) -> DPoly {
        DPoly::sym(DSym::new(i, j).unwrap())
    }

    #[test]
    fn rejects_constant_symbol() {
        assert_eq!(DSym::new(0, 0), Err(Error::InvalidSymbol { i: 0, j: 0 }));
    }

    #[test]
    fn chain_rule_on_products() {
        let p = &(&d(1, 0) * &d(1, 0)) * &d(0, 1);
        // d/dx (R10^2 R01) = 2 R10 R20 R01 + R10^2 R11
        let expect = &(&(&d(1, 0) * &d(2, 0)) * &d(0, 1)).scale(&int(2)) + &(&(&d(1, 0) * &d(1, 0)) * &d(1, 1));
        assert_eq!(p.d_dx(), expect);
        assert_eq!(p.to_string(), "R[0,1]*R[1,0]^2");
    }

    #[test]
    fn division_by_symbol_powers() {
        let p = &(&d(1, 0) * &d(1, 0)) + &(&d(1, 0) * &d(2, 0));
        assert_eq!(p.min_power(DSym::X), Some(1));
        assert_eq!(p.div_sym_pow(DSym::X, 1), &d(1, 0) + &d(2, 0));
        assert_eq!(p.mirror().min_power(DSym::Y), Some(1));
    }
}
