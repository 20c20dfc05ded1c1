//! Bivariate functions in the closed form
//!
//! ```text
//!   sum over terms of  P(c) / ((2 - c)^a (1 - u)^b),   u = x c y,  c = c(x^2)
//! ```
//!
//! together with the Euler operator `E_r = (x d/dx - y d/dy)/2 - r` and the
//! path-gluing operators `G_k` acting on that form. Iterating `G_{g-1} ...
//! G_0` on `F(x, y) = c / (1 - u)` and taking the `y^0` coefficient gives the
//! genus-`g` moment correction `Phi_g(c)`.

mod ops;
mod series;
mod shape;

pub use ops::{euler_apply, f_initial, g_apply, operator_chain, phi, y0_coefficient};
pub use series::{ansatz_to_series, g_closed_form_series};
pub use shape::{check_chain_shape, ShapeViolation};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::algebra::rational::int;
use crate::algebra::Poly;

/// `num(c) / ((2 - c)^a (1 - x c y)^b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnsatzTerm {
    pub num: Poly,
    pub a: u32,
    pub b: u32,
}

impl AnsatzTerm {
    pub fn new(num: Poly, a: u32, b: u32) -> Self {
        AnsatzTerm { num, a, b }
    }
}

/// A finite sum of [`AnsatzTerm`]s in canonical form.
///
/// Canonical means: one term per `b`, sorted by `b`, no zero numerators,
/// and no removable factor `(2 - c)` between numerator and denominator.
/// Equal functions therefore have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AnsatzSum {
    terms: Vec<AnsatzTerm>,
}

impl AnsatzSum {
    pub fn zero() -> Self {
        AnsatzSum { terms: Vec::new() }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = AnsatzTerm>) -> Self {
        let mut by_b: BTreeMap<u32, Vec<(Poly, u32)>> = BTreeMap::new();
        for t in terms {
            if !t.num.is_zero() {
                by_b.entry(t.b).or_default().push((t.num, t.a));
            }
        }
        let terms = by_b
            .into_iter()
            .filter_map(|(b, parts)| {
                let top = parts.iter().map(|p| p.1).max()?;
                let num = parts.iter().fold(Poly::zero(), |acc, (p, a)| {
                    acc + p * &Poly::two_minus_c().pow(top - a)
                });
                let (num, a) = reduce_two_minus_c(num, top);
                (!num.is_zero()).then_some(AnsatzTerm { num, a, b })
            })
            .collect();
        AnsatzSum { terms }
    }

    pub fn terms(&self) -> &[AnsatzTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Termwise image under `f`, re-canonicalized. Terms are mapped in
    /// parallel; the merge is order-independent.
    pub(crate) fn flat_map_terms<F>(&self, f: F) -> Self
    where
        F: Fn(&AnsatzTerm) -> Vec<AnsatzTerm> + Sync + Send,
    {
        let mapped: Vec<AnsatzTerm> = self.terms.par_iter().flat_map_iter(&f).collect();
        Self::from_terms(mapped)
    }

    pub fn scale(&self, by: i64) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|t| AnsatzTerm::new(t.num.scale(&int(by)), t.a, t.b)),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.terms.iter().chain(other.terms.iter()).cloned())
    }
}

/// Cancels common factors `(c - 2)` of `num` against `(2 - c)^a`.
fn reduce_two_minus_c(num: Poly, a: u32) -> (Poly, u32) {
    let (mut num, mut a) = (num, a);
    while a > 0 && !num.is_zero() {
        let (q, r) = num.synthetic_div(&int(2));
        if !num_traits::Zero::is_zero(&r) {
            break;
        }
        // (c - 2) q / (2 - c)^a = -q / (2 - c)^(a-1)
        num = -q;
        a -= 1;
    }
    (num, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merges_and_reduces() {
        // c/(2-c) + (2-c)/(2-c)^2 = (c + 1)/(2-c), all at b = 1
        let s = AnsatzSum::from_terms([
            AnsatzTerm::new(Poly::var(), 1, 1),
            AnsatzTerm::new(Poly::two_minus_c(), 2, 1),
        ]);
        assert_eq!(
            s.terms(),
            &[AnsatzTerm::new(Poly::from_ints(&[1, 1]), 1, 1)]
        );
    }

    #[test]
    fn cancellation_to_zero() {
        let t = AnsatzTerm::new(Poly::var(), 2, 3);
        let s = AnsatzSum::from_terms([t.clone()]).add(&AnsatzSum::from_terms([t]).scale(-1));
        assert!(s.is_zero());
    }

    #[test]
    fn full_reduction() {
        // (2-c)^3 / (2-c)^2 = (2 - c) with a = 0
        let s = AnsatzSum::from_terms([AnsatzTerm::new(Poly::two_minus_c().pow(3), 2, 0)]);
        assert_eq!(s.terms(), &[AnsatzTerm::new(Poly::two_minus_c(), 0, 0)]);
    }

    #[test]
    fn serializes_as_term_list() {
        let js = serde_json::to_string(&f_initial()).unwrap();
        assert_eq!(js, r#"[{"num":["0","1"],"a":0,"b":1}]"#);
    }
}
