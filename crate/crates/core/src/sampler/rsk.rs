use std::collections::HashSet;

use crate::error::Error;
use crate::oracles::Partition;

/// Shape of the RSK insertion tableau of a word with distinct entries.
///
/// Row insertion: each entry bumps the smallest larger entry of the row into
/// the next row. The first row length is the longest increasing subsequence.
pub fn rsk_shape<T: Ord + Copy + std::hash::Hash>(word: &[T]) -> Result<Partition, Error> {
    let mut seen = HashSet::with_capacity(word.len());
    if !word.iter().all(|x| seen.insert(*x)) {
        return Err(Error::DuplicateEntries);
    }
    Ok(rsk_shape_distinct(word))
}

/// [`rsk_shape`] without the duplicate check.
pub(crate) fn rsk_shape_distinct<T: Ord + Copy>(word: &[T]) -> Partition {
    let mut rows: Vec<Vec<T>> = Vec::new();
    for &x in word {
        let mut x = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            let pos = row.partition_point(|&y| y < x);
            if pos == row.len() {
                row.push(x);
                placed = true;
                break;
            }
            std::mem::swap(&mut row[pos], &mut x);
        }
        if !placed {
            rows.push(vec![x]);
        }
    }
    Partition::new(rows.iter().map(|r| r.len() as u32).collect())
        .expect("RSK shapes are partitions")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(w: &[i32]) -> Vec<u32> {
        rsk_shape(w).unwrap().parts().to_vec()
    }

    #[test]
    fn small_words() {
        assert_eq!(shape(&[1, 2, 3]), [3]);
        assert_eq!(shape(&[2, 1]), [1, 1]);
        assert_eq!(shape(&[1, 3, 2]), [2, 1]);
        assert_eq!(shape(&[]), [] as [u32; 0]);
        assert_eq!(rsk_shape(&[1, 2, 1]), Err(Error::DuplicateEntries));
    }

    fn lis(w: &[i32]) -> usize {
        let mut best = vec![1usize; w.len()];
        for i in 0..w.len() {
            for j in 0..i {
                if w[j] < w[i] {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    #[test]
    fn first_row_is_lis_and_columns_are_lds() {
        // all permutations of 6 elements
        let mut perm: Vec<i32> = (0..6).collect();
        let mut count = 0;
        loop {
            let s = rsk_shape(&perm).unwrap();
            assert_eq!(s.parts()[0] as usize, lis(&perm));
            let rev: Vec<i32> = perm.iter().rev().copied().collect();
            assert_eq!(s.len(), lis(&rev));
            count += 1;
            // next lexicographic permutation
            let Some(i) = (0..perm.len() - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
                break;
            };
            let j = (i + 1..perm.len())
                .rev()
                .find(|&j| perm[j] > perm[i])
                .unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        assert_eq!(count, 720);
    }
}
