use std::fmt;

use super::AnsatzSum;
use crate::algebra::Poly;

/// A term of the `r`-th iterate that falls outside the expected shape
/// `sum_{i=0}^{2r-1} c (c-1)^r P_{r,i}(c) / ((2-c)^(4r-1-i) (1-u)^(2+i))`
/// with `deg P_{r,i} <= 2r-1-i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeViolation {
    pub r: u32,
    pub b: u32,
    pub reason: String,
}

impl fmt::Display for ShapeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "iterate {} term b={}: {}", self.r, self.b, self.reason)
    }
}

/// Checks the `r`-th iterate (after `r >= 1` operator applications).
pub fn check_chain_shape(r: u32, s: &AnsatzSum) -> Vec<ShapeViolation> {
    let mut out = Vec::new();
    let prefactor = Poly::var() * Poly::c_minus_one().pow(r);
    for t in s.terms() {
        let mut fail = |reason: String| {
            out.push(ShapeViolation { r, b: t.b, reason });
        };
        if t.b < 2 || t.b > 2 * r + 1 {
            fail(format!("b outside [2, {}]", 2 * r + 1));
            continue;
        }
        let i = t.b - 2;
        let a_expected = 4 * r - 1 - i;
        if t.a > a_expected {
            fail(format!("a = {} exceeds {a_expected}", t.a));
            continue;
        }
        let Some(p_ri) = t.num.div_exact(&prefactor) else {
            fail("numerator not divisible by c (c-1)^r".into());
            continue;
        };
        // Lift to the denominator (2-c)^(4r-1-i) before reading the degree.
        let lifted_deg = p_ri.degree().unwrap_or(0) + (a_expected - t.a) as usize;
        let bound = (2 * r - 1 - i) as usize;
        if lifted_deg > bound {
            fail(format!("deg P = {lifted_deg} exceeds {bound}"));
        }
    }
    out
}
