use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use rayon::prelude::*;
use std::collections::HashMap;

use super::measure::transition_measure;
use super::rsk::rsk_shape_distinct;
use crate::error::Error;
use crate::oracles::Partition;

/// Seed plus per-trial stream splitting.
///
/// Trial `i` always draws from ChaCha8 stream `i` under the same key, so a
/// trial's outcome does not depend on which thread ran it or in what order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RngState {
    seed: u64,
}

impl RngState {
    pub fn new(seed: u64) -> Self {
        RngState { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn trial(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_250_917;

const INVERSION_LIMIT: f64 = 30.0;

/// Poisson variate: sequential inversion for small means, the `rand_distr`
/// transformed-rejection sampler above that.
pub fn sample_poisson<R: Rng + ?Sized>(mean: f64, rng: &mut R) -> u64 {
    if mean <= 0.0 {
        return 0;
    }
    if mean > INVERSION_LIMIT {
        let d = Poisson::new(mean).expect("positive finite mean");
        return d.sample(rng) as u64;
    }
    let u: f64 = rng.random();
    let mut k = 0u64;
    let mut p = (-mean).exp();
    let mut cdf = p;
    while u > cdf && p > 0.0 {
        k += 1;
        p *= mean / k as f64;
        cdf += p;
    }
    k
}

/// Plancherel-distributed partition of `m` via RSK of a uniform permutation.
pub fn sample_plancherel<R: Rng + ?Sized>(m: usize, rng: &mut R) -> Partition {
    let mut perm: Vec<u32> = (0..m as u32).collect();
    perm.shuffle(rng);
    rsk_shape_distinct(&perm)
}

/// Poissonized Plancherel partition: `|lambda| ~ Poisson(n)`, then Plancherel.
pub fn sample_pp<R: Rng + ?Sized>(n: u64, rng: &mut R) -> Partition {
    let m = sample_poisson(n as f64, rng);
    sample_plancherel(m as usize, rng)
}

/// Sample mean and its standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentEstimate {
    pub estimate: f64,
    pub stderr: f64,
}

const CHUNK: u64 = 1 << 14;

/// Monte Carlo estimate of `E[∫ x^{2k} dmu_lambda]` under PP(n).
pub fn mc_moment(n: u64, k: u32, trials: u64, seed: u64) -> Result<MomentEstimate, Error> {
    Ok(mc_moments(n, &[k], trials, seed)?[0])
}

/// Several even moments from the same samples.
///
/// Trials are grouped into fixed chunks; each chunk sums its trials in index
/// order and the chunk totals are added in chunk order, so the result is the
/// same for any number of threads. Per-sample moments are computed exactly
/// and only converted to `f64` for aggregation.
pub fn mc_moments(
    n: u64,
    ks: &[u32],
    trials: u64,
    seed: u64,
) -> Result<Vec<MomentEstimate>, Error> {
    if n == 0 || trials == 0 {
        return Err(Error::InvalidArgument(
            "n and trials must be positive".into(),
        ));
    }
    let rng = RngState::new(seed);
    let chunks = trials.div_ceil(CHUNK);
    let partials: Vec<Vec<(f64, f64)>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut cache: HashMap<Partition, Vec<f64>> = HashMap::new();
            let mut acc = vec![(0.0f64, 0.0f64); ks.len()];
            for t in (c * CHUNK)..((c + 1) * CHUNK).min(trials) {
                let lambda = sample_pp(n, &mut rng.trial(t));
                let values = cache.entry(lambda).or_insert_with_key(|lambda| {
                    let mu = transition_measure(lambda, n);
                    ks.iter().map(|&k| to_f64(&mu.even_moment(k))).collect()
                });
                for (slot, v) in acc.iter_mut().zip(values.iter()) {
                    slot.0 += v;
                    slot.1 += v * v;
                }
            }
            acc
        })
        .collect();

    let t = trials as f64;
    Ok((0..ks.len())
        .map(|i| {
            let (sum, sumsq) = partials
                .iter()
                .fold((0.0, 0.0), |(a, b), p| (a + p[i].0, b + p[i].1));
            let mean = sum / t;
            let var = if trials > 1 {
                ((sumsq - sum * mean) / (t - 1.0)).max(0.0)
            } else {
                0.0
            };
            MomentEstimate {
                estimate: mean,
                stderr: (var / t).sqrt(),
            }
        })
        .collect())
}

fn to_f64(r: &num_rational::BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("finite")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let s = RngState::new(7);
        let a: u64 = s.trial(3).random();
        let b: u64 = s.trial(3).random();
        let c: u64 = s.trial(4).random();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn poisson_zero_mean_and_mean_check() {
        let mut r = RngState::new(1).trial(0);
        assert_eq!(sample_poisson(0.0, &mut r), 0);
        for mean in [0.5, 3.0, 45.0] {
            let t = 20_000u64;
            let s: u64 = (0..t)
                .map(|i| sample_poisson(mean, &mut RngState::new(11).trial(i)))
                .sum();
            let m = s as f64 / t as f64;
            assert!(
                (m - mean).abs() < 4.0 * (mean / t as f64).sqrt(),
                "mean {mean}: {m}"
            );
        }
    }

    #[test]
    fn empty_permutation_gives_empty_shape() {
        let mut r = RngState::new(1).trial(0);
        assert!(sample_plancherel(0, &mut r).is_empty());
    }

    #[test]
    fn plancherel_frequencies_at_three() {
        // dim^2 / 3! = 1/6, 4/6, 1/6 for (3), (2,1), (1,1,1)
        let t = 30_000u64;
        let rng = RngState::new(2024);
        let mut counts = HashMap::new();
        for i in 0..t {
            *counts
                .entry(sample_plancherel(3, &mut rng.trial(i)).parts().to_vec())
                .or_insert(0u64) += 1;
        }
        for (shape, p) in [
            (vec![3], 1.0 / 6.0),
            (vec![2, 1], 4.0 / 6.0),
            (vec![1, 1, 1], 1.0 / 6.0),
        ] {
            let f = counts[&shape] as f64 / t as f64;
            let sigma = (p * (1.0 - p) / t as f64).sqrt();
            assert!((f - p).abs() < 4.0 * sigma, "{shape:?}: {f}");
        }
    }

    #[test]
    fn poissonized_size_has_mean_n() {
        let (n, t) = (5u64, 20_000u64);
        let rng = RngState::new(8);
        let total: u64 = (0..t)
            .map(|i| sample_pp(n, &mut rng.trial(i)).size() as u64)
            .sum();
        let m = total as f64 / t as f64;
        assert!(
            (m - n as f64).abs() < 4.0 * (n as f64 / t as f64).sqrt(),
            "{m}"
        );
    }

    #[test]
    fn zeroth_moment_is_exact() {
        let e = mc_moment(3, 0, 1000, 5).unwrap();
        assert_eq!(e.estimate, 1.0);
        assert_eq!(e.stderr, 0.0);
        assert!(mc_moment(0, 1, 10, 1).is_err());
    }

    #[test]
    fn same_seed_same_answer() {
        let a = mc_moments(2, &[1, 2], 40_000, 99).unwrap();
        let b = mc_moments(2, &[1, 2], 40_000, 99).unwrap();
        assert_eq!(a, b);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let c = pool.install(|| mc_moments(2, &[1, 2], 40_000, 99).unwrap());
        assert_eq!(a, c);
    }
}
