use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::{self, int, BigRational};
use crate::error::Error;

/// Dense univariate polynomial with rational coefficients, lowest power first.
///
/// Used for polynomials in the Catalan variable `c` and, inside the
/// normal-form converter, in the Möbius variable `t`. Trailing zero
/// coefficients are always trimmed, so the zero polynomial has no
/// coefficients and `degree()` is `None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `coeff * var^power`.
    pub fn monomial(coeff: BigRational, power: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); power + 1];
        coeffs[power] = coeff;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `c − 1`.
    pub fn c_minus_one() -> Self {
        Self::from_ints(&[-1, 1])
    }

    /// `2 − c`.
    pub fn two_minus_c() -> Self {
        Self::from_ints(&[2, -1])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `var^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, by: &BigRational) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), Error> {
        let dl = divisor.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / &dl;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * d;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Divides out the factor `(var − root)` as many times as it goes.
    /// Returns the cofactor and the multiplicity removed.
    pub fn strip_root(&self, root: &BigRational) -> (Poly, u32) {
        self.strip_root_at_most(root, u32::MAX)
    }

    /// [`Self::strip_root`], removing at most `max` factors.
    pub fn strip_root_at_most(&self, root: &BigRational, max: u32) -> (Poly, u32) {
        let mut p = self.clone();
        let mut mult = 0;
        if p.is_zero() {
            return (p, 0);
        }
        while mult < max {
            let (q, r) = p.synthetic_div(root);
            if !r.is_zero() {
                break;
            }
            p = q;
            mult += 1;
        }
        (p, mult)
    }

    /// If `self` is monic and equal to `(var − r)^d` with `d ≥ 1`, returns `(r, d)`.
    pub fn as_linear_power(&self) -> Option<(BigRational, u32)> {
        let d = self.degree()?;
        if d == 0 || !self.leading()?.is_one() {
            return None;
        }
        // The roots sum to -coeff[d-1], so a d-fold root sits at their mean.
        let r = -&self.coeffs[d - 1] / int(d as i64);
        let (rest, m) = self.strip_root(&r);
        (m as usize == d && rest.degree() == Some(0)).then_some((r, m))
    }

    /// Division by `(var − root)`: quotient and remainder `self(root)`.
    pub fn synthetic_div(&self, root: &BigRational) -> (Poly, BigRational) {
        if self.coeffs.is_empty() {
            return (Self::zero(), BigRational::zero());
        }
        let n = self.coeffs.len();
        let mut quot = vec![BigRational::zero(); n - 1];
        let mut carry = BigRational::zero();
        for i in (0..n).rev() {
            carry = &self.coeffs[i] + &carry * root;
            if i > 0 {
                quot[i - 1] = carry.clone();
            }
        }
        (Self::from_coeffs(quot), carry)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigRational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coeff = rational::format_rational(&mag);
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "c")?,
                (1, false) => write!(f, "{coeff}*c")?,
                (_, true) => write!(f, "c^{i}")?,
                (_, false) => write!(f, "{coeff}*c^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rational::serde_vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        rational::serde_vec::deserialize(d).map(Poly::from_coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::frac;

    #[test]
    fn canonical_degree() {
        let p = Poly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Poly::from_ints(&[0, 0]).degree(), None);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn division_and_gcd() {
        // (c-1)^2 (c+3) and (c-1)(c-2)
        let a = Poly::c_minus_one().pow(2) * Poly::from_ints(&[3, 1]);
        let b = Poly::c_minus_one() * Poly::from_ints(&[-2, 1]);
        assert_eq!(a.gcd(&b), Poly::c_minus_one());
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&q * &b + r, a);
        assert!(Poly::one().div_rem(&Poly::zero()).is_err());
    }

    #[test]
    fn strip_root_counts_multiplicity() {
        let p = Poly::two_minus_c().pow(3) * Poly::from_ints(&[0, 1]);
        let (q, m) = p.strip_root(&int(2));
        assert_eq!(m, 3);
        assert_eq!(q, Poly::from_ints(&[0, -1]));
        assert_eq!(p.strip_root_at_most(&int(2), 2).1, 2);
    }

    #[test]
    fn linear_powers() {
        let p = Poly::from_ints(&[-2, 1]).pow(4);
        assert_eq!(p.as_linear_power(), Some((int(2), 4)));
        assert_eq!(Poly::var().as_linear_power(), Some((int(0), 1)));
        let q = Poly::from_ints(&[-2, 1]) * Poly::from_ints(&[-3, 1]);
        assert_eq!(q.as_linear_power(), None);
        assert_eq!(Poly::one().as_linear_power(), None);
    }

    #[test]
    fn eval_and_derivative() {
        let p = Poly::from_ints(&[1, -3, 2]);
        assert_eq!(p.eval(&frac(1, 2)), int(0));
        assert_eq!(p.derivative(), Poly::from_ints(&[-3, 4]));
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(&[-1, 0, 2]).to_string(), "2*c^2 - 1");
        assert_eq!(Poly::c_minus_one().to_string(), "c - 1");
    }
}
