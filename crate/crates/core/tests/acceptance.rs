//! Acceptance checks. Runs without the libtest harness so every criterion
//! prints its own PASS/FAIL line; the process exits non-zero if any fail.

use std::process::ExitCode;
use std::time::Instant;

use kmk_moments::algebra::rational::{frac, int};
use kmk_moments::algebra::{
    catalan_series, expand_in_x, fine_structure_form, FineStructureForm, Poly, RationalFn,
};
use kmk_moments::ansatz::{
    ansatz_to_series, check_chain_shape, euler_apply, f_initial, g_apply, g_closed_form_series,
    operator_chain, phi, AnsatzSum, AnsatzTerm,
};
use kmk_moments::oracles::{
    enum_paths, euler_series, g_series, moment_polynomial, word_moment, MomentPolynomial,
};
use kmk_moments::sampler::{mc_moments, partitions_of, transition_measure, DEFAULT_SEED};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn theta_table() -> Check {
    let expected: [&[(u32, i64)]; 4] = [
        &[(2, 1)],
        &[(3, 1), (4, 14), (5, 15)],
        &[(4, 1), (5, 64), (6, 565), (7, 1122), (8, 630)],
        &[
            (5, 1),
            (6, 222),
            (7, 5820),
            (8, 42500),
            (9, 110670),
            (10, 118740),
            (11, 45045),
        ],
    ];
    for (idx, want) in expected.iter().enumerate() {
        let g = idx as u32 + 1;
        let got = fine_structure_form(&phi(g), g).map_err(|e| format!("g={g}: {e}"))?;
        ensure(got == FineStructureForm::from_ints(g, want), || {
            format!("g={g}: got {:?}", got.theta())
        })?;
    }
    Ok("g = 1..4 match".into())
}

fn phi1_closed() -> Check {
    let c = Poly::var();
    let num = &c * &Poly::c_minus_one().pow(2);
    let expected = RationalFn::new(num, Poly::two_minus_c().pow(3)).map_err(|e| e.to_string())?;
    let got = phi(1);
    ensure(got == expected, || format!("got {got}"))?;
    // canonical: monic denominator (c - 2)^3, sign moved to the numerator
    ensure(got.num() == &Poly::from_ints(&[0, -1, 2, -1]), || {
        format!("num {}", got.num())
    })?;
    ensure(got.den() == &Poly::from_ints(&[-8, 12, -6, 1]), || {
        format!("den {}", got.den())
    })?;
    Ok(format!("Phi_1 = ({}) / ({})", got.num(), got.den()))
}

fn phi0_catalan() -> Check {
    let p0 = phi(0);
    ensure(p0 == RationalFn::c(), || format!("Phi_0 = {p0}"))?;
    let s = expand_in_x(&p0, 10).map_err(|e| e.to_string())?;
    let even: Vec<_> = (0..=5).map(|k| s.coeff(2 * k).clone()).collect();
    let want: Vec<_> = [1, 1, 2, 5, 14, 42].into_iter().map(int).collect();
    ensure(even == want, || format!("got {even:?}"))?;
    ensure(s == catalan_series(10), || "differs from c(x^2)".into())?;
    Ok("1, 1, 2, 5, 14, 42".into())
}

fn three_way_moments() -> Check {
    let k_max = 8u32;
    let order = 2 * k_max as usize;
    let series: Vec<_> = (0..=4)
        .map(|g| expand_in_x(&phi(g), order).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    for k in 1..=k_max {
        let words = word_moment(k);
        let rooks = moment_polynomial(k);
        ensure(words == rooks, || {
            format!("k={k}: words {words} vs rooks {rooks}")
        })?;
        for (g, s) in series.iter().enumerate() {
            let from_phi = s.coeff(2 * k as usize);
            ensure(*from_phi == int(rooks.get(g as u32) as i64), || {
                format!(
                    "k={k} g={g}: phi gives {from_phi}, rooks give {}",
                    rooks.get(g as u32)
                )
            })?;
        }
    }
    let k2 = moment_polynomial(2);
    ensure(k2 == MomentPolynomial::from_dense(2, &[2, 1]), || {
        format!("k=2: {k2}")
    })?;
    Ok(format!("k <= {k_max}, g <= 4; k=2 gives {k2}"))
}

fn ansatz_shape() -> Check {
    let g_max = 6u32;
    let chain = operator_chain(g_max);
    for (r, s) in chain.iter().enumerate().skip(1) {
        let r = r as u32;
        let v = check_chain_shape(r, s);
        ensure(v.is_empty(), || format!("{}", v[0]))?;
        let bs: Vec<u32> = s.terms().iter().map(|t| t.b).collect();
        let want: Vec<u32> = (2..=2 * r + 1).collect();
        ensure(bs == want, || format!("iterate {r}: b exponents {bs:?}"))?;
        let f = fine_structure_form(&phi(r), r).map_err(|e| format!("g={r}: {e}"))?;
        let support: Vec<u32> = f.theta().keys().copied().collect();
        let range: Vec<u32> = FineStructureForm::theorem_range(r).collect();
        ensure(support == range, || format!("g={r}: support {support:?}"))?;
        ensure(f.theta().values().all(|v| *v > int(0)), || {
            format!("g={r}: nonpositive theta")
        })?;
    }
    Ok(format!("iterates 1..={g_max}"))
}

fn random_sum(rng: &mut ChaCha8Rng) -> AnsatzSum {
    let n_terms = rng.random_range(1..=3);
    AnsatzSum::from_terms((0..n_terms).map(|_| {
        let deg = rng.random_range(0..=3);
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.random_range(-5..=5)).collect();
        AnsatzTerm::new(
            Poly::from_ints(&coeffs),
            rng.random_range(0..=4),
            rng.random_range(0..=4),
        )
    }))
}

fn operators_vs_series() -> Check {
    let (xo, yo) = (16usize, 8usize);
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut tested = 0;
    while tested < 50 {
        let s = random_sum(&mut rng);
        if s.is_zero() {
            continue;
        }
        let k = rng.random_range(0..=4);
        let wide = ansatz_to_series(&s, xo, xo);
        let narrow = wide.truncate(xo, yo);

        let e_closed = ansatz_to_series(&euler_apply(k, &s), xo, yo);
        let e_series = euler_series(k, &narrow);
        ensure(e_closed == e_series, || format!("euler k={k} on {s:?}"))?;

        let g_closed = ansatz_to_series(&g_apply(k, &s), xo, yo);
        let g_ref = g_series(k, &wide, yo);
        ensure(g_closed == g_ref, || format!("G_{k} on {s:?}"))?;
        tested += 1;
    }
    Ok(format!("{tested} random sums at x^{xo}, y^{yo}"))
}

fn closed_forms_vs_paths() -> Check {
    let order = 12usize;
    let f = ansatz_to_series(&f_initial(), order, order);
    let g = g_closed_form_series(order);
    for i in 0..=order {
        for j1 in 0..=order {
            let want = int(enum_paths(i, 0, j1) as i64);
            ensure(*f.get(i, j1) == want, || format!("F at x^{i} y^{j1}"))?;
            for j2 in 0..=order {
                let want = int(enum_paths(i, j1, j2) as i64);
                ensure(g[i][j1][j2] == want, || format!("G at x^{i} y^{j1} z^{j2}"))?;
            }
        }
    }
    Ok(format!("i <= {order}"))
}

fn transition_measures() -> Check {
    let mut count = 0;
    for m in 0..=6 {
        for lambda in partitions_of(m) {
            for n in [1u64, 2, 3, 10] {
                transition_measure(&lambda, n)
                    .check_exact(m)
                    .map_err(|e| format!("{lambda} n={n}: {e}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (partition, n) pairs"))
}

fn monte_carlo() -> Check {
    let (n, trials) = (2u64, 1_000_000u64);
    let est = mc_moments(n, &[2, 3], trials, DEFAULT_SEED).map_err(|e| e.to_string())?;
    let predicted = [frac(5, 2), frac(37, 4)];
    let mut parts = Vec::new();
    for ((k, e), p) in [2u32, 3].into_iter().zip(&est).zip(&predicted) {
        let p = num_traits::ToPrimitive::to_f64(p).expect("finite");
        let z = (e.estimate - p) / e.stderr;
        parts.push(format!(
            "k={k}: {:.5} ± {:.5} (z = {z:.2})",
            e.estimate, e.stderr
        ));
        ensure(z.abs() <= 4.0, || parts.join(", "))?;
    }
    ensure(moment_polynomial(2).eval(n) == predicted[0], || {
        "k=2 exact value".into()
    })?;
    ensure(moment_polynomial(3).eval(n) == predicted[1], || {
        "k=3 exact value".into()
    })?;
    Ok(parts.join(", "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("theta table for g = 1..4", theta_table),
        ("Phi_1 closed form", phi1_closed),
        ("Phi_0 = c gives Catalan numbers", phi0_catalan),
        ("words = rooks = Phi expansion", three_way_moments),
        ("ansatz shape and theta support", ansatz_shape),
        (
            "closed-form operators match series operators",
            operators_vs_series,
        ),
        (
            "F and G closed forms match path counts",
            closed_forms_vs_paths,
        ),
        ("transition measures are exact", transition_measures),
        ("Monte Carlo moments at n = 2", monte_carlo),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({detail}) [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
