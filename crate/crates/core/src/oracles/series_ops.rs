//! Direct series-level evaluation of the Euler and path-gluing operators,
//! with the gluing kernel `x G(x, y, z)` taken from path enumeration. This
//! is the reference the closed-form operators in `ansatz` are checked
//! against.

use num_traits::Zero;

use super::paths::path_count_table;
use crate::algebra::rational::{frac, int, BigRational};
use crate::algebra::BiSeries;

/// Multiplies the `x^i y^j` coefficient by `(i - j)/2 - r`.
pub fn euler_series(r: u32, s: &BiSeries) -> BiSeries {
    s.map_indexed(|i, j, v| {
        if v.is_zero() {
            return v.clone();
        }
        v * (frac(i as i64 - j as i64, 2) - int(r as i64))
    })
}

/// `sum_j [z^(j+1)] x G(x, y, z) * [z^j] E_k H(x, z)` to `x^x_order`,
/// `y^y_order`, where `[x^i y^j1 z^j2] G` is the number of nonnegative
/// paths of length `i` from height `j1` to height `j2`.
///
/// `h` is indexed `(x power, z power)` and must carry `z` up to its own
/// `x` order; the result is then exact up to `x^h.x_order()`.
pub fn g_series(k: u32, h: &BiSeries, y_order: usize) -> BiSeries {
    let xo = h.x_order();
    assert!(
        h.y_order() >= xo,
        "need z-order >= x-order for an exact result"
    );
    let eh = euler_series(k, h);
    // j1 and j + 1 can both reach xo + 1
    let paths = path_count_table(xo + 1);
    let mut out = BiSeries::zero(xo, y_order);
    for i in 1..=xo {
        for j1 in 0..=y_order.min(xo) {
            let mut acc = BigRational::zero();
            // the x in front of G takes one power of x
            for i1 in 1..=i {
                let len = i1 - 1;
                let i2 = i - i1;
                for j in 0..=i2 {
                    let count = paths[len][j1][j + 1];
                    if count == 0 {
                        continue;
                    }
                    let e = eh.get(i2, j);
                    if !e.is_zero() {
                        acc += e * int(count as i64);
                    }
                }
            }
            *out.get_mut(i, j1) = acc;
        }
    }
    out
}
