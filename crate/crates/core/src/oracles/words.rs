//! Moments from normal-ordering operator words.
//!
//! `(L^{2k})_{00}` is the sum of the words in `V1`, `V-1` read off the
//! nonnegative balanced paths (up step = `V1`, down step = `V-1`). Each word
//! is normal-ordered with `V-1 V1 -> V1 V-1 + 1/n`; once every `V-1` sits at
//! the right it acts on `Pi` and, like every `V1`, evaluates to 1. What
//! remains is a polynomial in `1/n`.

use std::collections::HashMap;

use super::paths::{dyck_paths, Step};
use super::rooks::MomentPolynomial;

/// Polynomial in `1/n` with nonnegative integer coefficients, dense.
type NPoly = Vec<u64>;

/// Normal-ordering evaluator with a memo on `(pending V-1 count, rest of word)`.
///
/// A word is processed left to right. The part already read is normal
/// ordered, `V1^a V-1^b`; its `V1`s never move again and evaluate to 1, so
/// only `b` matters. Reading a `V1` while `b > 0` applies the rewrite at the
/// boundary: `V-1^b V1 w = V-1^(b-1) V1 V-1 w + 1/n V-1^(b-1) w`.
#[derive(Default)]
pub struct NormalOrderer {
    memo: HashMap<(usize, Vec<Step>), NPoly>,
}

impl NormalOrderer {
    pub fn new() -> Self {
        Self::default()
    }

    /// `phi` of the normal-ordered form of `word`.
    pub fn evaluate(&mut self, word: &[Step]) -> NPoly {
        self.value(0, word)
    }

    fn value(&mut self, pending: usize, rest: &[Step]) -> NPoly {
        let Some((&first, tail)) = rest.split_first() else {
            return vec![1];
        };
        let key = (pending, rest.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let out = match (first, pending) {
            (Step::Down, _) => self.value(pending + 1, tail),
            (Step::Up, 0) => self.value(0, tail),
            (Step::Up, _) => {
                let mut swapped = Vec::with_capacity(rest.len());
                swapped.push(Step::Up);
                swapped.push(Step::Down);
                swapped.extend_from_slice(tail);
                let moved = self.value(pending - 1, &swapped);
                let contracted = self.value(pending - 1, tail);
                add_shifted(moved, &contracted)
            }
        };
        self.memo.insert(key, out.clone());
        out
    }
}

/// `a + x * b` for dense polynomials in `x = 1/n`.
fn add_shifted(mut a: NPoly, b: &[u64]) -> NPoly {
    if a.len() < b.len() + 1 {
        a.resize(b.len() + 1, 0);
    }
    for (i, v) in b.iter().enumerate() {
        a[i + 1] += v;
    }
    a
}

/// `E[∫ x^{2k} dmu_lambda]` by normal-ordering every word of `(L^{2k})_{00}`.
pub fn word_moment(k: u32) -> MomentPolynomial {
    word_moment_with(&mut NormalOrderer::new(), k)
}

/// [`word_moment`] reusing a memo across calls.
pub fn word_moment_with(orderer: &mut NormalOrderer, k: u32) -> MomentPolynomial {
    let mut total: NPoly = Vec::new();
    for p in dyck_paths(k as usize) {
        let v = orderer.evaluate(p.steps());
        if total.len() < v.len() {
            total.resize(v.len(), 0);
        }
        for (i, c) in v.into_iter().enumerate() {
            total[i] += c;
        }
    }
    MomentPolynomial::from_dense(k, &total)
}
