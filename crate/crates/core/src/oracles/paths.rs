use std::fmt;
use std::str::FromStr;

use super::rooks::Partition;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

/// A lattice path of `±1` steps whose height never drops below zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    /// Checks that every prefix has nonnegative height (start height 0).
    pub fn new(steps: Vec<Step>) -> Result<Self, Error> {
        let mut h = 0i64;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::Up { 1 } else { -1 };
            if h < 0 {
                return Err(Error::NegativePath(i));
            }
        }
        Ok(LatticePath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end_height(&self) -> usize {
        let ups = self.steps.iter().filter(|s| **s == Step::Up).count();
        2 * ups - self.steps.len()
    }

    pub fn is_balanced(&self) -> bool {
        self.end_height() == 0
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    /// Parses a word over `U` and `D`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let steps = s
            .chars()
            .map(|ch| match ch {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                _ => Err(Error::InvalidArgument(format!("bad step {ch:?}"))),
            })
            .collect::<Result<_, _>>()?;
        LatticePath::new(steps)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", if *s == Step::Up { 'U' } else { 'D' })?;
        }
        Ok(())
    }
}

/// All balanced nonnegative paths of length `2k`, in lexicographic order
/// with `Up < Down`.
pub fn dyck_paths(k: usize) -> Vec<LatticePath> {
    fn go(ups: usize, downs: usize, k: usize, cur: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        if ups == k && downs == k {
            out.push(LatticePath { steps: cur.clone() });
            return;
        }
        if ups < k {
            cur.push(Step::Up);
            go(ups + 1, downs, k, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(Step::Down);
            go(ups, downs + 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, 0, k, &mut Vec::with_capacity(2 * k), &mut out);
    out
}

/// Number of nonnegative paths from `(0, j1)` to `(len, j2)`.
pub fn enum_paths(len: usize, j1: usize, j2: usize) -> u64 {
    let top = j1.max(j2) + len + 1;
    let mut ways = vec![0u64; top + 1];
    ways[j1] = 1;
    for _ in 0..len {
        let mut next = vec![0u64; top + 1];
        for h in 0..top {
            if ways[h] == 0 {
                continue;
            }
            next[h + 1] += ways[h];
            if h > 0 {
                next[h - 1] += ways[h];
            }
        }
        ways = next;
    }
    ways[j2]
}

/// Table `[i][j1][j2]` of [`enum_paths`] for `i, j1, j2 <= order`.
pub fn path_count_table(order: usize) -> Vec<Vec<Vec<u64>>> {
    let mut table = vec![vec![vec![0u64; order + 1]; order + 1]; order + 1];
    // Rows for every start height at once; heights above 2*order are unreachable
    // back into the window and can be cut.
    let cap = 2 * order + 2;
    for j1 in 0..=order {
        let mut ways = vec![0u64; cap + 1];
        ways[j1] = 1;
        for (i, slab) in table.iter_mut().enumerate() {
            if i > 0 {
                let mut next = vec![0u64; cap + 1];
                for h in 0..cap {
                    next[h + 1] += ways[h];
                    if h > 0 {
                        next[h - 1] += ways[h];
                    }
                }
                ways = next;
            }
            slab[j1].copy_from_slice(&ways[..=order]);
        }
    }
    table
}

/// The partition cut out between a balanced path of length `2k` and the
/// bounding triangle `(0,0), (k,k), (2k,0)`.
///
/// The cells are the pairs (down step, later up step); the row of a down
/// step therefore has one cell per up step that comes after it.
pub fn path_to_partition(p: &LatticePath) -> Result<Partition, Error> {
    if !p.is_balanced() {
        return Err(Error::UnbalancedPath);
    }
    let mut ups_after = 0u32;
    let mut parts = Vec::new();
    for s in p.steps().iter().rev() {
        match s {
            Step::Up => ups_after += 1,
            Step::Down => parts.push(ups_after),
        }
    }
    parts.reverse();
    parts.retain(|&x| x > 0);
    Partition::new(parts)
}

/// Number of markings of `p` with `g` pairs: each pair is a down step and a
/// strictly later up step, with no step used twice.
pub fn count_markings(p: &LatticePath, g: usize) -> u64 {
    let steps = p.steps();
    let downs: Vec<usize> = (0..steps.len())
        .filter(|&i| steps[i] == Step::Down)
        .collect();
    let ups: Vec<usize> = (0..steps.len()).filter(|&i| steps[i] == Step::Up).collect();

    fn go(d: usize, left: usize, downs: &[usize], ups: &[usize], used: &mut [bool]) -> u64 {
        if left == 0 {
            return 1;
        }
        if downs.len() - d < left {
            return 0;
        }
        let mut total = go(d + 1, left, downs, ups, used);
        for (ui, &u) in ups.iter().enumerate() {
            if u > downs[d] && !used[ui] {
                used[ui] = true;
                total += go(d + 1, left - 1, downs, ups, used);
                used[ui] = false;
            }
        }
        total
    }
    go(0, g, &downs, &ups, &mut vec![false; ups.len()])
}
