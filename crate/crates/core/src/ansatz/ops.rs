use super::{AnsatzSum, AnsatzTerm};
use crate::algebra::ratfn::sum_over_two_minus_c;
use crate::algebra::rational::int;
use crate::algebra::{Poly, RationalFn};

/// `F(x, y) = c / (1 - x c y)`, the generating function of nonnegative
/// paths from height 0, with `y` marking the end height.
pub fn f_initial() -> AnsatzSum {
    AnsatzSum::from_terms([AnsatzTerm::new(Poly::var(), 0, 1)])
}

/// `E_r = (x d/dx - y d/dy)/2 - r` on the closed form.
///
/// In the `(c, u)` coordinates the half-Euler operator is
/// `c(c-1)/(2-c) d/dc + (c-1)/(2-c) u d/du`, which follows from
/// `x dc/dx = 2c(c-1)/(2-c)`, `x du/dx = u c/(2-c)` and `y du/dy = u`.
pub fn euler_apply(r: u32, s: &AnsatzSum) -> AnsatzSum {
    let c = Poly::var();
    let w = Poly::c_minus_one();
    let two_c = Poly::two_minus_c();
    let cw = &c * &w;
    let r = int(r as i64);
    s.flat_map_terms(|t| {
        let (p, a, b) = (&t.num, t.a, t.b);
        // d/dc part and the (1-u)^-b piece of u d/du, over (2-c)^(a+2)
        let same_b = &cw * &(&p.derivative() * &two_c + p.scale(&int(a as i64)))
            - (&w * p * &two_c).scale(&int(b as i64))
            - (p * &two_c.pow(2)).scale(&r);
        let mut out = vec![AnsatzTerm::new(same_b, a + 2, b)];
        if b > 0 {
            out.push(AnsatzTerm::new(
                (&w * p).scale(&int(b as i64)),
                a + 1,
                b + 1,
            ));
        }
        out
    })
}

/// `G_k H(x, y) = sum_j [z^(j+1)] x G(x, y, z) * [z^j] E_k H(x, z)`.
///
/// After `E_k`, each term `P / ((2-c)^a (1-u)^b)` goes through the summed
/// kernel in closed form. With `w = c - 1`, `s = 2 - c` and `v = 1 - u`,
/// using `(x c)^2 = c - 1` to clear explicit powers of `x`:
///
/// ```text
///   kernel(b) = (w^2 v^b - (1 - v)^2 s^b) / ((v - s) s^b v^(b+1))
/// ```
///
/// The numerator vanishes at `v = s`, so the quotient `Q_b(v)` is a
/// polynomial in `v` with coefficients in `Q[c]`, and the result is
/// `sum_j P q_j / (s^(a+b) v^(b+1-j))`.
pub fn g_apply(k: u32, h: &AnsatzSum) -> AnsatzSum {
    let e = euler_apply(k, h);
    e.flat_map_terms(|t| {
        kernel_quotient(t.b)
            .into_iter()
            .enumerate()
            .map(|(j, q)| AnsatzTerm::new(&t.num * &q, t.a + t.b, t.b + 1 - j as u32))
            .collect()
    })
}

/// Coefficients `q_j(c)` of `Q_b(v) = (w^2 v^b - (1 - v)^2 s^b) / (v - s)`.
fn kernel_quotient(b: u32) -> Vec<Poly> {
    let w = Poly::c_minus_one();
    let s = Poly::two_minus_c();
    let sb = s.pow(b);
    let deg = (b as usize).max(2);
    let mut n = vec![Poly::zero(); deg + 1];
    n[b as usize] = w.pow(2);
    n[0] = &n[0] - &sb;
    n[1] = &n[1] + &sb.scale(&int(2));
    n[2] = &n[2] - &sb;

    // Horner division by (v - s), top coefficient first.
    let mut q = vec![Poly::zero(); deg];
    q[deg - 1] = n[deg].clone();
    for i in (1..deg).rev() {
        q[i - 1] = &n[i] + &(&s * &q[i]);
    }
    let rem = &n[0] + &(&s * &q[0]);
    debug_assert!(rem.is_zero(), "kernel numerator must vanish at v = s");
    q
}

/// `[y^0]` of the closed form: each `(1 - u)^-b` contributes 1.
pub fn y0_coefficient(s: &AnsatzSum) -> RationalFn {
    sum_over_two_minus_c(s.terms().iter().map(|t| (&t.num, t.a)))
}

/// The iterates `F, G_0 F, G_1 G_0 F, ...` up to `r` operator applications.
pub fn operator_chain(r: u32) -> Vec<AnsatzSum> {
    let mut out = Vec::with_capacity(r as usize + 1);
    out.push(f_initial());
    for k in 0..r {
        let next = g_apply(k, out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

/// `Phi_g(c) = [y^0] G_{g-1} ... G_0 F`, with `Phi_0 = c`.
pub fn phi(g: u32) -> RationalFn {
    if g == 0 {
        return RationalFn::c();
    }
    y0_coefficient(operator_chain(g).last().expect("nonempty"))
}
