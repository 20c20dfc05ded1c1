//! The fine-structure normal form
//!
//! ```text
//!   f(c) = c / (2 - c)^g * sum_k theta(k) t^k,    t = (c - 1) / (2 - c)
//! ```
//!
//! and its inverse. Since `t` is a Möbius function of `c`, the inverse map is
//! `c = (1 + 2t) / (1 + t)` with `2 - c = 1 / (1 + t)`, so extracting `theta`
//! amounts to substituting into `f (2 - c)^g / c` and reading off a
//! polynomial in `t`.

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use super::poly::Poly;
use super::ratfn::RationalFn;
use super::rational::{format_rational, int, parse_rational, BigRational};
use crate::error::Error;

/// `(g, k ↦ theta_g(k))` with only nonzero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FineStructureForm {
    g: u32,
    theta: BTreeMap<u32, BigRational>,
}

impl FineStructureForm {
    /// Builds the sparse form, dropping zero coefficients.
    pub fn new(g: u32, theta: impl IntoIterator<Item = (u32, BigRational)>) -> Self {
        FineStructureForm {
            g,
            theta: theta.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_ints(g: u32, theta: &[(u32, i64)]) -> Self {
        Self::new(g, theta.iter().map(|&(k, v)| (k, int(v))))
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn theta(&self) -> &BTreeMap<u32, BigRational> {
        &self.theta
    }

    pub fn get(&self, k: u32) -> BigRational {
        self.theta
            .get(&k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// The range `g+1 ..= 3g-1` carried by every genus-`g` moment correction.
    pub fn theorem_range(g: u32) -> RangeInclusive<u32> {
        (g + 1)..=(3 * g).saturating_sub(1)
    }

    /// True when every stored key lies in [`Self::theorem_range`].
    pub fn within_theorem_range(&self) -> bool {
        let range = Self::theorem_range(self.g);
        self.theta.keys().all(|k| range.contains(k))
    }

    /// Re-expands to a rational function in `c`.
    pub fn to_rational_fn(&self) -> RationalFn {
        let Some(&top) = self.theta.keys().next_back() else {
            return RationalFn::zero();
        };
        let num = self.theta.iter().fold(Poly::zero(), |acc, (&k, v)| {
            let term = Poly::var() * Poly::c_minus_one().pow(k) * Poly::two_minus_c().pow(top - k);
            acc + term.scale(v)
        });
        RationalFn::over_two_minus_c(num, self.g + top)
    }
}

/// Inverts the normal form: finds `theta` with
/// `f = c / (2 - c)^g * sum_k theta(k) ((c - 1)/(2 - c))^k`.
pub fn fine_structure_form(f: &RationalFn, g: u32) -> Result<FineStructureForm, Error> {
    if g == 0 {
        return Err(Error::InvalidArgument("fine structure needs g >= 1".into()));
    }
    if f.is_zero() {
        return Ok(FineStructureForm::new(g, []));
    }
    // f (2-c)^g / c = N' (2-c)^g / D with N = c N'. Under c = (1+2t)/(1+t)
    // a polynomial of degree n becomes homogenize(.)/(1+t)^n and (2-c) becomes
    // 1/(1+t), so the whole thing is num_t / den_t below.
    let num = f
        .num()
        .div_exact(&Poly::var())
        .ok_or(Error::NotFineStructure)?;
    let n = num.degree().unwrap_or(0);
    let d = f.den().degree().unwrap_or(0);
    let one_plus_t = Poly::from_ints(&[1, 1]);
    let num_t = homogenize(&num, n) * one_plus_t.pow(d as u32);
    let den_t = homogenize(f.den(), d) * one_plus_t.pow((n as u32) + g);
    let poly_t = num_t.div_exact(&den_t).ok_or(Error::NotFineStructure)?;
    Ok(FineStructureForm::new(
        g,
        poly_t
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, v)| (k as u32, v.clone())),
    ))
}

/// `(1 + t)^deg * p((1 + 2t) / (1 + t))` as a polynomial in `t`.
fn homogenize(p: &Poly, deg: usize) -> Poly {
    let up = Poly::from_ints(&[1, 2]);
    let down = Poly::from_ints(&[1, 1]);
    p.coeffs()
        .iter()
        .enumerate()
        .fold(Poly::zero(), |acc, (i, ci)| {
            if ci.is_zero() {
                return acc;
            }
            acc + (up.pow(i as u32) * down.pow((deg - i) as u32)).scale(ci)
        })
}

#[derive(Serialize, Deserialize)]
struct RawForm {
    g: u32,
    theta: BTreeMap<u32, String>,
}

impl Serialize for FineStructureForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawForm {
            g: self.g,
            theta: self
                .theta
                .iter()
                .map(|(k, v)| (*k, format_rational(v)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FineStructureForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawForm::deserialize(d)?;
        let theta = raw
            .theta
            .into_iter()
            .map(|(k, v)| parse_rational(&v).map(|r| (k, r)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(FineStructureForm::new(raw.g, theta))
    }
}
