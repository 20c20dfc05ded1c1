use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::Poly;
use super::rational::BigRational;
use crate::error::Error;

/// Rational function in `c`, kept in lowest terms with a monic denominator.
///
/// Two values are equal exactly when they denote the same function, so
/// `==` is a sound identity test.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRationalFn")]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

#[derive(Deserialize)]
struct RawRationalFn {
    num: Poly,
    den: Poly,
}

impl TryFrom<RawRationalFn> for RationalFn {
    type Error = Error;
    fn try_from(raw: RawRationalFn) -> Result<Self, Error> {
        RationalFn::new(raw.num, raw.den)
    }
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let lead = den.leading().expect("nonzero").recip();
        let (num, den) = (num.scale(&lead), den.scale(&lead));
        // Denominators of the form (c - r)^d only share factors (c - r) with
        // the numerator, which is far cheaper than a Euclidean gcd.
        if let Some((root, d)) = den.as_linear_power() {
            let (num, m) = num.strip_root_at_most(&root, d);
            let den = Poly::from_coeffs(vec![-root, BigRational::one()]).pow(d - m);
            return Ok(RationalFn { num, den });
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        Ok(RationalFn { num, den })
    }

    pub fn zero() -> Self {
        RationalFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The Catalan variable `c` itself.
    pub fn c() -> Self {
        Self::from_poly(Poly::var())
    }

    /// `num / (2 − c)^a`.
    pub fn over_two_minus_c(num: Poly, a: u32) -> Self {
        Self::new(num, Poly::two_minus_c().pow(a)).expect("nonzero denominator")
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self, Error> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        // Powers of coprime polynomials stay coprime.
        RationalFn {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, at: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(at) / d)
        }
    }

    pub fn derivative(&self) -> Self {
        let n = &self.num.derivative() * &self.den - &self.num * &self.den.derivative();
        Self::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    pub fn scale(&self, by: &BigRational) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        RationalFn {
            num: self.num.scale(by),
            den: self.den.clone(),
        }
    }

    /// `self` multiplied by `(2 − c)^e`.
    pub fn times_two_minus_c(&self, e: i32) -> Self {
        let p = RationalFn::from_poly(Poly::two_minus_c().pow(e.unsigned_abs()));
        if e >= 0 {
            self * &p
        } else {
            (self / &p).expect("nonzero")
        }
    }
}

impl Add<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        let n = &self.num * &rhs.den + &rhs.num * &self.den;
        RationalFn::new(n, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Sub<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Div<&RationalFn> for &RationalFn {
    type Output = Result<RationalFn, Error>;
    fn div(self, rhs: &RationalFn) -> Result<RationalFn, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: &RationalFn) -> RationalFn {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<Poly> for RationalFn {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

/// Sum of `num_i / (2 − c)^{a_i}` over a list of terms.
pub fn sum_over_two_minus_c<'a>(terms: impl IntoIterator<Item = (&'a Poly, u32)>) -> RationalFn {
    let terms: Vec<_> = terms.into_iter().collect();
    let Some(top) = terms.iter().map(|t| t.1).max() else {
        return RationalFn::zero();
    };
    let num = terms.iter().fold(Poly::zero(), |acc, (p, a)| {
        acc + *p * &Poly::two_minus_c().pow(top - a)
    });
    RationalFn::over_two_minus_c(num, top)
}

/// The closed form `c (c − 1)^2 / (2 − c)^3`.
pub fn phi1_closed_form() -> RationalFn {
    let num = Poly::var() * Poly::c_minus_one().pow(2);
    RationalFn::over_two_minus_c(num, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{frac, int};

    #[test]
    fn canonical_form() {
        // (c^2 - 1) / (2c - 2) = (c + 1) / 2
        let f = RationalFn::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[-2, 2])).unwrap();
        assert_eq!(f.den(), &Poly::one());
        assert_eq!(
            f.num(),
            &(&Poly::constant(frac(1, 2)) + &Poly::monomial(frac(1, 2), 1))
        );
        assert!(RationalFn::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn phi1_is_canonical() {
        let f = phi1_closed_form();
        assert_eq!(f.den(), &Poly::from_ints(&[-2, 1]).pow(3));
        assert_eq!(f.eval(&int(3)), Some(int(-12)));
        assert_eq!(f.eval(&int(2)), None);
    }

    #[test]
    fn field_identities() {
        let a = RationalFn::new(Poly::from_ints(&[1, 1]), Poly::from_ints(&[0, 1, 1])).unwrap();
        let b = RationalFn::over_two_minus_c(Poly::from_ints(&[3, 0, -1]), 2);
        assert_eq!((&(&a + &b) - &b), a);
        assert_eq!((&(&a * &b) / &b).unwrap(), a);
        assert_eq!(&a * &a.recip().unwrap(), RationalFn::one());
        assert!((&a / &RationalFn::zero()).is_err());
    }

    #[test]
    fn sums_over_common_denominator() {
        let p = Poly::var();
        let q = Poly::one();
        let s = sum_over_two_minus_c([(&p, 1), (&q, 0)]);
        // c/(2-c) + 1 = 2/(2-c)
        assert_eq!(s, RationalFn::over_two_minus_c(Poly::from_ints(&[2]), 1));
    }
}
