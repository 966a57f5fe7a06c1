//! Colexicographic indexing of the k-subset domain.
//!
//! Every partition or graph over k-subsets identifies a subset with its colex
//! rank, so subset-domain objects are comparable across runs: the subset
//! `{s_0 < s_1 < ... < s_{k-1}}` has rank `sum_i C(s_i, i+1)`.

use crate::error::{Error, Result};
use crate::perm::PointSet;

/// Default cap on the size of an explicit k-subset domain.
pub const DEFAULT_SUBSET_DOMAIN_CAP: u64 = 1_000_000;

/// Rank/unrank table for the k-subsets of `{0, ..., n-1}` in colex order.
pub struct SubsetIndexer {
    degree: usize,
    k: usize,
    // binom[i][j] = C(i, j), saturating; entries actually used by ranking
    // are bounded by the domain size and therefore exact.
    binom: Vec<Vec<u64>>,
    count: usize,
}

impl SubsetIndexer {
    pub fn new(degree: usize, k: usize, cap: u64) -> Result<Self> {
        if k == 0 || k > degree {
            return Err(Error::KTooLarge { k, degree });
        }
        let mut binom = vec![vec![0u64; k + 2]; degree + 1];
        for i in 0..=degree {
            binom[i][0] = 1;
            for j in 1..=(k + 1).min(i) {
                binom[i][j] = binom[i - 1][j - 1].saturating_add(binom[i - 1][j]);
            }
        }
        let count = binom[degree][k];
        if count > cap {
            return Err(Error::DomainTooLarge {
                size: count,
                cap,
            });
        }
        Ok(SubsetIndexer {
            degree,
            k,
            binom,
            count: count as usize,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of k-subsets, `C(n, k)`.
    pub fn count(&self) -> usize {
        self.count
    }

    /// Colex rank of a strictly increasing member list.
    pub fn rank(&self, members: &[usize]) -> usize {
        debug_assert_eq!(members.len(), self.k);
        let mut r = 0u64;
        for (i, &s) in members.iter().enumerate() {
            r += self.binom[s][i + 1];
        }
        r as usize
    }

    pub fn rank_set(&self, set: &PointSet) -> usize {
        self.rank(&set.members())
    }

    /// Inverse of [`rank`](Self::rank).
    pub fn unrank(&self, rank: usize) -> Vec<usize> {
        debug_assert!(rank < self.count);
        let mut rem = rank as u64;
        let mut out = vec![0usize; self.k];
        let mut upper = self.degree;
        for i in (0..self.k).rev() {
            // largest s < upper with C(s, i+1) <= rem
            let mut s = upper - 1;
            while self.binom[s][i + 1] > rem {
                s -= 1;
            }
            out[i] = s;
            rem -= self.binom[s][i + 1];
            upper = s;
        }
        out
    }

    pub fn unrank_set(&self, rank: usize) -> PointSet {
        PointSet::new(self.degree, &self.unrank(rank)).expect("unranked members are in range")
    }

    /// All k-subsets in colex order.
    pub fn iter(&self) -> SubsetIter<'_> {
        SubsetIter {
            indexer: self,
            current: Some((0..self.k).collect()),
        }
    }
}

pub struct SubsetIter<'a> {
    indexer: &'a SubsetIndexer,
    current: Option<Vec<usize>>,
}

impl Iterator for SubsetIter<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.current.take()?;
        let mut next = current.clone();
        let k = next.len();
        let n = self.indexer.degree;
        // colex successor: bump the first element that has room, reset below.
        let mut i = 0;
        loop {
            if i == k {
                self.current = None;
                break;
            }
            let limit = if i + 1 < k { next[i + 1] } else { n };
            if next[i] + 1 < limit {
                next[i] += 1;
                for (j, slot) in next.iter_mut().enumerate().take(i) {
                    *slot = j;
                }
                self.current = Some(next);
                break;
            }
            i += 1;
        }
        Some(current)
    }
}
