use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::numeric::{Mode, Scalar};
use crate::polycore::UPoly;
use crate::rational::{to_f64, Rational};

/// Element `Σ a_k β^k` of `Q[β]/(βⁿ − c)`.
///
/// Division needs `βⁿ − c` to be irreducible (e.g. `c` prime); a zero divisor is
/// reported as non-invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicNumber {
    coeffs: Vec<Rational>,
    n: u32,
    c: Rational,
}

impl AlgebraicNumber {
    pub fn new(coeffs: Vec<Rational>, n: u32, c: Rational) -> Self {
        assert!(n >= 1);
        let mut v = AlgebraicNumber { coeffs: vec![Rational::zero(); n as usize], n, c };
        for (k, a) in coeffs.into_iter().enumerate() {
            v = v.add(&v.monomial(a, k as u32));
        }
        v
    }

    /// The generator `β` itself.
    pub fn generator(n: u32, c: Rational) -> Self {
        Self::new(vec![Rational::zero(), Rational::one()], n, c)
    }

    /// `a·β^k` reduced with `βⁿ = c`.
    fn monomial(&self, a: Rational, k: u32) -> Self {
        let mut coeffs = vec![Rational::zero(); self.n as usize];
        let q = k / self.n;
        coeffs[(k % self.n) as usize] = a * num_traits::pow(self.c.clone(), q as usize);
        AlgebraicNumber { coeffs, n: self.n, c: self.c.clone() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Real `n`-th root of `c` used for floating-point display.
    fn beta(&self) -> f64 {
        let c = to_f64(&self.c);
        let r = c.abs().powf(1.0 / self.n as f64);
        if c < 0.0 && self.n % 2 == 1 {
            -r
        } else {
            r
        }
    }

    fn modulus(&self) -> UPoly {
        let mut m = vec![Rational::zero(); self.n as usize + 1];
        m[0] = -self.c.clone();
        m[self.n as usize] = Rational::one();
        UPoly::new(m)
    }

    fn reduce(&self, p: &UPoly) -> Self {
        let r = p.div_rem(&self.modulus()).1;
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(self.n as usize, Rational::zero());
        AlgebraicNumber { coeffs, n: self.n, c: self.c.clone() }
    }
}

impl Scalar for AlgebraicNumber {
    const MODE: Mode = Mode::Exact;

    fn lift(&self, q: &Rational) -> Self {
        self.monomial(q.clone(), 0)
    }
    fn add(&self, o: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        AlgebraicNumber { coeffs, n: self.n, c: self.c.clone() }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        let prod = UPoly::new(self.coeffs.clone()).mul(&UPoly::new(o.coeffs.clone()));
        self.reduce(&prod)
    }
    fn neg(&self) -> Self {
        AlgebraicNumber { coeffs: self.coeffs.iter().map(|a| -a).collect(), n: self.n, c: self.c.clone() }
    }
    fn inv(&self) -> Option<Self> {
        let a = UPoly::new(self.coeffs.clone());
        if a.is_zero() {
            return None;
        }
        let (g, s, _) = a.ext_gcd(&self.modulus());
        (g.degree() == Some(0)).then(|| self.reduce(&s))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn to_complex(&self) -> Complex64 {
        let b = self.beta();
        Complex64::new(self.coeffs.iter().rev().fold(0.0, |acc, a| acc * b + to_f64(a)), 0.0)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            let sign = if a.is_negative() { "-" } else { "+" };
            if first {
                if a.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = a.abs();
            match k {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => f.write_str("b")?,
                1 => write!(f, "{mag}*b")?,
                _ if mag.is_one() => write!(f, "b^{k}")?,
                _ => write!(f, "{mag}*b^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " (b^{} = {})", self.n, self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn cube_root_of_three() {
        let b = AlgebraicNumber::generator(5, int(3));
        assert_eq!(b.pow(5), b.lift(&int(3)));
        let x = b.add(&b.lift(&int(2))).mul(&b);
        let inv = x.inv().unwrap();
        assert_eq!(x.mul(&inv), b.one_like());
        assert!((b.to_complex().re - 3f64.powf(0.2)).abs() < 1e-12);
        assert_eq!(b.to_string(), "b (b^5 = 3)");
    }

    #[test]
    fn zero_divisors_are_not_inverted() {
        // β² − 4 = (β − 2)(β + 2)
        let b = AlgebraicNumber::generator(2, int(4));
        let z = b.sub(&b.lift(&int(2)));
        assert!(z.inv().is_none());
    }
}
