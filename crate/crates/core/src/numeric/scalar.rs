use std::fmt::{Debug, Display};

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::polycore::Poly2;
use crate::rational::{to_f64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

/// Tolerances for float mode; exact mode compares exactly and ignores them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalConfig {
    pub tolerance: f64,
    pub abs_floor: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { tolerance: 1e-9, abs_floor: 1e-12 }
    }
}

/// A field the checks can compute in.
pub trait Scalar: Clone + Debug + Display {
    const MODE: Mode;

    /// The rational `q` as an element of the same field as `self`.
    fn lift(&self, q: &Rational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` when `self` is (exactly) zero.
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn to_complex(&self) -> Complex64;

    fn magnitude(&self) -> f64 {
        self.to_complex().norm()
    }

    fn zero_like(&self) -> Self {
        self.lift(&Rational::zero())
    }

    fn one_like(&self) -> Self {
        self.lift(&Rational::one())
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact equality, or `|a − b| ≤ max(tol·max(|a|, |b|), floor)` in float mode.
    fn close_to(&self, other: &Self, cfg: &EvalConfig) -> bool {
        match Self::MODE {
            Mode::Exact => self.sub(other).is_zero(),
            Mode::Float => {
                let diff = self.sub(other).magnitude();
                diff <= (cfg.tolerance * self.magnitude().max(other.magnitude())).max(cfg.abs_floor)
            }
        }
    }
}

impl Scalar for Rational {
    const MODE: Mode = Mode::Exact;

    fn lift(&self, q: &Rational) -> Self {
        q.clone()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_complex(&self) -> Complex64 {
        Complex64::new(to_f64(self), 0.0)
    }
}

impl Scalar for Complex64 {
    const MODE: Mode = Mode::Float;

    fn lift(&self, q: &Rational) -> Self {
        Complex64::new(to_f64(q), 0.0)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (self.norm() != 0.0).then(|| self.inv())
    }
    fn is_zero(&self) -> bool {
        self.norm() == 0.0
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
}

/// `p(x, y)` in the field of `x`.
pub fn eval_poly<S: Scalar>(p: &Poly2, x: &S, y: &S) -> S {
    let deg = p.degree().finite().unwrap_or(0) as usize;
    let mut xp = vec![x.one_like()];
    let mut yp = vec![x.one_like()];
    for k in 0..deg {
        xp.push(xp[k].mul(x));
        yp.push(yp[k].mul(y));
    }
    p.terms().fold(x.zero_like(), |acc, (a, b, c)| acc.add(&x.lift(c).mul(&xp[a as usize]).mul(&yp[b as usize])))
}
