use num_traits::Zero;

use super::AnsatzSum;
use crate::algebra::rational::{binomial, int, BigRational};
use crate::algebra::{catalan_series, BiSeries, SeriesX};

/// Expands the closed form into a bivariate series in `x` and `y` by
/// substituting `c = c(x^2)` and `u = x c y`.
pub fn ansatz_to_series(s: &AnsatzSum, x_order: usize, y_order: usize) -> BiSeries {
    let c = catalan_series(x_order);
    let inv_two_minus_c = (&SeriesX::constant(int(2), x_order) - &c)
        .inverse()
        .expect("2 - c(0) = 1");
    let xc = c.shift(1);
    let xc_powers: Vec<SeriesX> =
        std::iter::successors(Some(SeriesX::one(x_order)), |p| Some(p * &xc))
            .take(y_order + 1)
            .collect();

    let mut out = BiSeries::zero(x_order, y_order);
    for t in s.terms() {
        let base = &c.compose_poly(&t.num) * &inv_two_minus_c.pow(t.a);
        for (j, xcj) in xc_powers.iter().enumerate() {
            // [u^j] (1 - u)^-b
            let mult = if t.b == 0 {
                if j == 0 {
                    int(1)
                } else {
                    BigRational::zero()
                }
            } else {
                binomial((j + t.b as usize - 1) as u64, (t.b - 1) as u64)
            };
            if mult.is_zero() {
                continue;
            }
            out.add_row(j, &(&base * xcj).scale(&mult));
        }
    }
    out
}

/// Coefficients `[x^i y^j1 z^j2]` of the closed form
/// `G(x, y, z) = F(x, y) F(x, z) / (c (1 - y z)) = c / ((1 - xcy)(1 - xcz)(1 - yz))`,
/// indexed `[i][j1][j2]` for `i, j1, j2 <= order`.
pub fn g_closed_form_series(order: usize) -> Vec<Vec<Vec<BigRational>>> {
    let c = catalan_series(order);
    // c^(1+p) for p = 0..=order
    let c_powers: Vec<SeriesX> = std::iter::successors(Some(c.clone()), |p| Some(p * &c))
        .take(order + 1)
        .collect();
    let mut out = vec![vec![vec![BigRational::zero(); order + 1]; order + 1]; order + 1];
    // Expand as sum over p, q, m >= 0 of c^(1+p+q) x^(p+q) y^(p+m) z^(q+m).
    for p in 0..=order {
        for q in 0..=(order - p) {
            let series = &c_powers[p + q];
            for m in 0..=(order - p.max(q)) {
                let (j1, j2) = (p + m, q + m);
                for i in (p + q)..=order {
                    let v = series.coeff(i - p - q);
                    if !v.is_zero() {
                        out[i][j1][j2] += v;
                    }
                }
            }
        }
    }
    out
}
