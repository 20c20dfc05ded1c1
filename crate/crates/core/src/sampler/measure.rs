use num_traits::{One, Zero};

use crate::algebra::rational::{int, BigRational};
use crate::algebra::{Poly, RationalFn};
use crate::oracles::Partition;

/// The transition measure of a partition.
///
/// Atoms sit at the contents (column − row) of the addable cells; the lower
/// corners are the contents of the removable cells. The weight at atom
/// `a_i` is `prod_j (a_i - b_j) / prod_{l != i} (a_i - a_l)`, i.e. the
/// partial-fraction coefficients of `prod_j (x - b_j) / prod_i (x - a_i)`.
///
/// Atoms are stored unscaled; the physical positions are `atom / sqrt(n)`,
/// so only even moments are rational in general.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMeasure {
    atoms: Vec<i64>,
    lower: Vec<i64>,
    weights: Vec<BigRational>,
    n: u64,
}

/// Contents of the addable and removable cells, each sorted ascending.
pub fn corners(lambda: &Partition) -> (Vec<i64>, Vec<i64>) {
    let parts = lambda.parts();
    let mut upper = Vec::with_capacity(parts.len() + 1);
    let mut lower = Vec::with_capacity(parts.len());
    for (i, &p) in parts.iter().enumerate() {
        let (row, p) = (i as i64, p as i64);
        if i == 0 || parts[i - 1] as i64 > p {
            upper.push(p - row);
        }
        let next = parts.get(i + 1).copied().unwrap_or(0) as i64;
        if p > next {
            lower.push(p - 1 - row);
        }
    }
    upper.push(-(parts.len() as i64));
    upper.sort_unstable();
    lower.sort_unstable();
    (upper, lower)
}

pub fn transition_measure(lambda: &Partition, n: u64) -> TransitionMeasure {
    let (atoms, lower) = corners(lambda);
    let weights = atoms
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let num: BigRational = lower.iter().map(|&b| int(a - b)).product();
            let den: BigRational = atoms
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != i)
                .map(|(_, &al)| int(a - al))
                .product();
            num / den
        })
        .collect();
    TransitionMeasure {
        atoms,
        lower,
        weights,
        n,
    }
}

impl TransitionMeasure {
    /// Unscaled atom positions (upper-corner contents).
    pub fn atoms(&self) -> &[i64] {
        &self.atoms
    }

    /// Unscaled lower-corner contents.
    pub fn lower_corners(&self) -> &[i64] {
        &self.lower
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Atoms at their scaled positions `atom / sqrt(n)`.
    pub fn scaled_atoms(&self) -> Vec<f64> {
        let s = (self.n as f64).sqrt();
        self.atoms.iter().map(|&a| a as f64 / s).collect()
    }

    /// `sum_i w_i a_i^m` in unscaled coordinates.
    pub fn raw_moment(&self, m: u32) -> BigRational {
        self.atoms
            .iter()
            .zip(&self.weights)
            .fold(BigRational::zero(), |acc, (&a, w)| {
                acc + w * int(a).pow(m as i32)
            })
    }

    /// `∫ x^{2k} dmu` in scaled coordinates, exactly.
    pub fn even_moment(&self, k: u32) -> BigRational {
        self.raw_moment(2 * k) / int(self.n as i64).pow(k as i32)
    }

    /// True when atoms and lower corners alternate `a_1 < b_1 < a_2 < ... < a_m`.
    pub fn interlaces(&self) -> bool {
        self.atoms.len() == self.lower.len() + 1
            && self
                .lower
                .iter()
                .enumerate()
                .all(|(i, &b)| self.atoms[i] < b && b < self.atoms[i + 1])
    }

    /// Checks positivity, total mass 1, mean 0 and variance `|lambda| / n`.
    pub fn check_exact(&self, size: u32) -> Result<(), String> {
        if let Some(w) = self.weights.iter().find(|w| **w <= BigRational::zero()) {
            return Err(format!("nonpositive weight {w}"));
        }
        let mass = self.raw_moment(0);
        if !mass.is_one() {
            return Err(format!("total mass {mass}"));
        }
        let mean = self.raw_moment(1);
        if !mean.is_zero() {
            return Err(format!("mean {mean}"));
        }
        let var = self.even_moment(1);
        let expected = BigRational::new(size.into(), self.n.into());
        if var != expected {
            return Err(format!("variance {var}, expected {expected}"));
        }
        if !self.interlaces() {
            return Err("corners do not interlace".into());
        }
        Ok(())
    }

    /// `prod_j (x - b_j) / prod_i (x - a_i)` as a rational function.
    pub fn corner_function(&self) -> RationalFn {
        let lin = |r: i64| Poly::from_ints(&[-r, 1]);
        let num = self.lower.iter().fold(Poly::one(), |acc, &b| acc * lin(b));
        let den = self.atoms.iter().fold(Poly::one(), |acc, &a| acc * lin(a));
        RationalFn::new(num, den).expect("nonempty atoms")
    }

    /// `sum_i w_i / (x - a_i)` as a rational function.
    pub fn partial_fraction_sum(&self) -> RationalFn {
        self.atoms
            .iter()
            .zip(&self.weights)
            .fold(RationalFn::zero(), |acc, (&a, w)| {
                let term = RationalFn::new(Poly::constant(w.clone()), Poly::from_ints(&[-a, 1]))
                    .expect("nonzero");
                acc + term
            })
    }
}

/// Plancherel probability `(dim lambda)^2 / |lambda|!`, with `dim` from the
/// hook length formula.
pub fn plancherel_probability(lambda: &Partition) -> BigRational {
    let conj = lambda.conjugate();
    let mut hooks = BigRational::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as i64 - j as i64 - 1;
            let leg = conj.parts()[j] as i64 - i as i64 - 1;
            hooks *= int(arm + leg + 1);
        }
    }
    let fact: BigRational = (1..=lambda.size() as i64).map(int).product();
    fact / (&hooks * &hooks)
}

/// All partitions of `m`, largest parts first.
pub fn partitions_of(m: u32) -> Vec<Partition> {
    fn go(left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::new(cur.clone()).expect("valid"));
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}
