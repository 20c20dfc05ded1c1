use kmk_moments::algebra::rational::frac;
use kmk_moments::oracles::{moment_polynomial, Partition};
use kmk_moments::sampler::{
    mc_moments, partitions_of, plancherel_probability, rsk_shape, sample_pp, transition_measure,
    RngState,
};
use num_traits::ToPrimitive;

fn z(estimate: f64, stderr: f64, exact: f64) -> f64 {
    (estimate - exact) / stderr
}

#[test]
fn fourth_moment_matches_moment_polynomial() {
    let est = mc_moments(2, &[1, 2], 200_000, 17).unwrap();
    assert!(
        z(est[0].estimate, est[0].stderr, 1.0).abs() < 4.0,
        "{est:?}"
    );
    let exact = moment_polynomial(2).eval(2).to_f64().unwrap();
    assert_eq!(exact, 2.5);
    assert!(
        z(est[1].estimate, est[1].stderr, exact).abs() < 4.0,
        "{est:?}"
    );
}

#[test]
fn sixth_moment_matches_transition_measure_average() {
    // 5 + 10/n + 1/n^2 from Plancherel averages of the transition measure
    let est = mc_moments(2, &[3], 200_000, 17).unwrap()[0];
    let exact = frac(41, 4).to_f64().unwrap();
    assert!(z(est.estimate, est.stderr, exact).abs() < 4.0, "{est:?}");
}

#[test]
fn sampled_measures_are_exact() {
    let rng = RngState::new(3);
    for t in 0..300 {
        let lambda = sample_pp(4, &mut rng.trial(t));
        transition_measure(&lambda, 4)
            .check_exact(lambda.size())
            .unwrap();
    }
}

#[test]
fn rsk_counts_reproduce_plancherel_at_four() {
    let mut counts = std::collections::HashMap::<Partition, u32>::new();
    let mut perm = [0u8, 1, 2, 3];
    // Heap's algorithm over all 24 permutations
    let mut c = [0usize; 4];
    *counts.entry(rsk_shape(&perm).unwrap()).or_default() += 1;
    let mut i = 0;
    while i < 4 {
        if c[i] < i {
            perm.swap(if i % 2 == 0 { 0 } else { c[i] }, i);
            *counts.entry(rsk_shape(&perm).unwrap()).or_default() += 1;
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    for lambda in partitions_of(4) {
        assert_eq!(
            frac(counts[&lambda] as i64, 24),
            plancherel_probability(&lambda),
            "{lambda}"
        );
    }
}
