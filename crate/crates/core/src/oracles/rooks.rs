use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use super::paths::{count_markings, dyck_paths};
use crate::algebra::rational::{int, BigRational};
use crate::error::Error;

/// Weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "partition parts must be positive".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Membership in the staircase set: `parts[i] <= k - i` (1-based `i`).
    pub fn fits_staircase(&self, k: u32) -> bool {
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| (i as u32) < k && p <= k - 1 - i as u32)
    }

    /// Conjugate partition (columns as rows).
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=width)
                .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Non-attacking rooks on a Young diagram; cells are `(row, column)`, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RookPlacement {
    shape: Partition,
    rooks: Vec<(u32, u32)>,
}

impl RookPlacement {
    pub fn new(shape: Partition, mut rooks: Vec<(u32, u32)>) -> Result<Self, Error> {
        rooks.sort_unstable();
        for &(r, c) in &rooks {
            if shape.parts.get(r as usize).is_none_or(|&len| c >= len) {
                return Err(Error::InvalidArgument(format!(
                    "cell ({r},{c}) outside {shape}"
                )));
            }
        }
        let mut rows: Vec<u32> = rooks.iter().map(|x| x.0).collect();
        let mut cols: Vec<u32> = rooks.iter().map(|x| x.1).collect();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        if rows.len() != rooks.len() || cols.len() != rooks.len() {
            return Err(Error::InvalidArgument("rooks share a row or column".into()));
        }
        Ok(RookPlacement { shape, rooks })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rooks(&self) -> &[(u32, u32)] {
        &self.rooks
    }
}

/// Rook numbers `r_0, r_1, ...` of a Young diagram.
///
/// Rows are filled from shortest to longest: every column of a shorter row
/// is also a column of each longer row, so a row of length `L` sees exactly
/// `L - j` free columns once `j` rooks sit in shorter rows.
pub fn rook_numbers(shape: &Partition) -> Vec<u64> {
    let mut ways = vec![1u64];
    for &len in shape.parts.iter().rev() {
        let mut next = ways.clone();
        next.push(0);
        for (j, &w) in ways.iter().enumerate() {
            if (len as usize) > j {
                next[j + 1] += w * (len as u64 - j as u64);
            }
        }
        ways = next;
    }
    while ways.len() > 1 && ways.last() == Some(&0) {
        ways.pop();
    }
    ways
}

/// Every `g`-rook placement on `shape`, by backtracking over rows.
pub fn rook_placements(shape: &Partition, g: usize) -> Vec<RookPlacement> {
    fn go(
        row: usize,
        left: usize,
        shape: &Partition,
        used: &mut Vec<bool>,
        cur: &mut Vec<(u32, u32)>,
        out: &mut Vec<RookPlacement>,
    ) {
        if left == 0 {
            out.push(RookPlacement {
                shape: shape.clone(),
                rooks: cur.clone(),
            });
            return;
        }
        if shape.parts.len() - row < left {
            return;
        }
        go(row + 1, left, shape, used, cur, out);
        for col in 0..shape.parts[row] as usize {
            if !used[col] {
                used[col] = true;
                cur.push((row as u32, col as u32));
                go(row + 1, left - 1, shape, used, cur, out);
                cur.pop();
                used[col] = false;
            }
        }
    }
    let width = shape.parts.first().copied().unwrap_or(0) as usize;
    let mut out = Vec::new();
    go(
        0,
        g,
        shape,
        &mut vec![false; width],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// The staircase set: partitions with `parts[i] <= k - i` (1-based `i`).
pub fn staircase_partitions(k: u32) -> Vec<Partition> {
    fn go(i: u32, max: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: cur.clone() });
        // next part has 1-based index i + 1
        let bound = max.min(k.saturating_sub(i + 1));
        for p in 1..=bound {
            cur.push(p);
            go(i + 1, p, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, k, &mut Vec::new(), &mut out);
    out
}

/// Exact `E[∫ x^{2k} dmu_lambda]` as a polynomial in `1/n`: `counts[g]` is
/// the number of `g`-rook placements over the staircase set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentPolynomial {
    pub k: u32,
    pub counts: BTreeMap<u32, u64>,
}

impl MomentPolynomial {
    /// Builds from a dense list, keeping only nonzero entries.
    pub fn from_dense(k: u32, dense: &[u64]) -> Self {
        MomentPolynomial {
            k,
            counts: dense
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(g, &c)| (g as u32, c))
                .collect(),
        }
    }

    pub fn get(&self, g: u32) -> u64 {
        self.counts.get(&g).copied().unwrap_or(0)
    }

    pub fn max_g(&self) -> u32 {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    /// Value at a given `n`.
    pub fn eval(&self, n: u64) -> BigRational {
        self.counts
            .iter()
            .fold(BigRational::zero(), |acc, (&g, &c)| {
                acc + int(c as i64) / int(n as i64).pow(g as i32)
            })
    }
}

impl fmt::Display for MomentPolynomial {
    /// `5 + 8·n⁻¹ + 1·n⁻²`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
        if self.counts.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .counts
            .iter()
            .map(|(&g, &c)| match g {
                0 => c.to_string(),
                1 => format!("{c}·n⁻¹"),
                _ => {
                    let exp: String = g
                        .to_string()
                        .chars()
                        .map(|d| SUP[d.to_digit(10).unwrap() as usize])
                        .collect();
                    format!("{c}·n⁻{exp}")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `#RC_g(k)`: `g`-rook placements summed over the staircase set.
pub fn rook_counts(k: u32, g: u32) -> u64 {
    moment_polynomial(k).get(g)
}

/// Sum of rook numbers over the staircase set of size `k`.
pub fn moment_polynomial(k: u32) -> MomentPolynomial {
    let mut dense: Vec<u64> = Vec::new();
    for shape in staircase_partitions(k) {
        let r = rook_numbers(&shape);
        if dense.len() < r.len() {
            dense.resize(r.len(), 0);
        }
        for (g, c) in r.into_iter().enumerate() {
            dense[g] += c;
        }
    }
    MomentPolynomial::from_dense(k, &dense)
}

/// The same polynomial by brute force over paths and their markings.
pub fn moment_polynomial_by_markings(k: u32) -> MomentPolynomial {
    let mut dense = vec![0u64; k as usize + 1];
    for p in dyck_paths(k as usize) {
        for (g, slot) in dense.iter_mut().enumerate() {
            *slot += count_markings(&p, g);
        }
    }
    MomentPolynomial::from_dense(k, &dense)
}
