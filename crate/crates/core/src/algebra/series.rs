use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Sub};

use super::poly::Poly;
use super::ratfn::RationalFn;
use super::rational::{int, BigRational};
use crate::error::Error;

/// Power series in `x` truncated after `x^order`.
///
/// Always stores exactly `order + 1` coefficients. Products and inverses
/// never report terms past the truncation order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeriesX {
    order: usize,
    #[serde(with = "super::rational::serde_vec")]
    coeffs: Vec<BigRational>,
}

impl SeriesX {
    pub fn zero(order: usize) -> Self {
        SeriesX {
            order,
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `x^power`, or zero if the power is past the order.
    pub fn monomial(power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = BigRational::one();
        }
        s
    }

    /// Pads with zeros or truncates to `order + 1` coefficients.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        SeriesX { order, coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order.min(self.order))
    }

    pub fn scale(&self, by: &BigRational) -> Self {
        SeriesX {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    /// Multiplication by `x^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order);
        for i in k..=self.order {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self, Error> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv0 = c0.recip();
        let mut out = vec![BigRational::zero(); self.order + 1];
        out[0] = inv0.clone();
        for n in 1..=self.order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &out[n - k];
                }
            }
            out[n] = -acc * &inv0;
        }
        Ok(SeriesX {
            order: self.order,
            coeffs: out,
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order), |acc, _| &acc * self)
    }

    /// Term-by-term derivative, known to one order less.
    pub fn derivative(&self) -> Self {
        let coeffs = (1..=self.order)
            .map(|i| &self.coeffs[i] * int(i as i64))
            .collect();
        Self::from_coeffs(coeffs, self.order.saturating_sub(1))
    }

    /// `p(self)` by Horner's rule.
    pub fn compose_poly(&self, p: &Poly) -> Self {
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(self.order), |acc, c| {
                let mut next = &acc * self;
                next.coeffs[0] += c;
                next
            })
    }

    fn binary(&self, rhs: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        let order = self.order.min(rhs.order);
        SeriesX {
            order,
            coeffs: (0..=order)
                .map(|i| f(&self.coeffs[i], &rhs.coeffs[i]))
                .collect(),
        }
    }
}

impl Add<&SeriesX> for &SeriesX {
    type Output = SeriesX;
    fn add(self, rhs: &SeriesX) -> SeriesX {
        self.binary(rhs, |a, b| a + b)
    }
}

impl Sub<&SeriesX> for &SeriesX {
    type Output = SeriesX;
    fn sub(self, rhs: &SeriesX) -> SeriesX {
        self.binary(rhs, |a, b| a - b)
    }
}

impl Mul<&SeriesX> for &SeriesX {
    type Output = SeriesX;
    fn mul(self, rhs: &SeriesX) -> SeriesX {
        let order = self.order.min(rhs.order);
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        SeriesX { order, coeffs: out }
    }
}

/// Expansion of `c(x^2)`, the Catalan generating function in `x^2`.
///
/// Built from the quadratic relation `c = 1 + x^2 c^2`, i.e. the
/// convolution recurrence `C_{k+1} = sum_i C_i C_{k-i}`.
pub fn catalan_series(order: usize) -> SeriesX {
    let half = order / 2;
    let mut cat: Vec<BigRational> = Vec::with_capacity(half + 1);
    cat.push(BigRational::one());
    for k in 0..half {
        let next = (0..=k).fold(BigRational::zero(), |acc, i| acc + &cat[i] * &cat[k - i]);
        cat.push(next);
    }
    let mut s = SeriesX::zero(order);
    for (k, ck) in cat.into_iter().enumerate() {
        s.coeffs[2 * k] = ck;
    }
    s
}

/// Expands `f(c(x^2))` in `x` to the given order.
///
/// The denominator must not vanish at `c = 1` (the value of `c` at `x = 0`).
pub fn expand_in_x(f: &RationalFn, order: usize) -> Result<SeriesX, Error> {
    if f.den().eval(&BigRational::one()).is_zero() {
        return Err(Error::DenominatorVanishesAtOrigin);
    }
    let c = catalan_series(order);
    let num = c.compose_poly(f.num());
    let den = c.compose_poly(f.den());
    Ok(&num * &den.inverse()?)
}
