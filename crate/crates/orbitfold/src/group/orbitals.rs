//! Orbits of the diagonal action on ordered pairs of an indexed domain.

use crate::error::{Error, Result};

/// Default cap on the number of ordered pairs.
pub const DEFAULT_PAIR_CAP: u64 = 10_000_000;

/// The orbits of a group on ordered pairs of domain indices.
///
/// `orbit_of[u * domain + v]` is the orbital id of the pair `(u, v)`; ids are
/// dense and ordered by the smallest flat pair index they contain.
pub struct OrbitalDecomposition {
    domain: usize,
    orbit_of: Vec<u32>,
    sizes: Vec<usize>,
    representatives: Vec<(usize, usize)>,
    self_paired: Vec<bool>,
    diagonal: Vec<bool>,
}

impl OrbitalDecomposition {
    pub fn domain_size(&self) -> usize {
        self.domain
    }

    pub fn orbital_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn orbital_of(&self, u: usize, v: usize) -> usize {
        self.orbit_of[u * self.domain + v] as usize
    }

    pub fn size(&self, id: usize) -> usize {
        self.sizes[id]
    }

    pub fn representative(&self, id: usize) -> (usize, usize) {
        self.representatives[id]
    }

    /// An orbital is self-paired when it equals its transpose.
    pub fn is_self_paired(&self, id: usize) -> bool {
        self.self_paired[id]
    }

    /// Diagonal orbitals consist of pairs `(u, u)`.
    pub fn is_diagonal(&self, id: usize) -> bool {
        self.diagonal[id]
    }

    /// All pairs of one orbital, in flat index order.
    pub fn pairs(&self, id: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.sizes[id]);
        for (flat, &o) in self.orbit_of.iter().enumerate() {
            if o as usize == id {
                out.push((flat / self.domain, flat % self.domain));
            }
        }
        out
    }

    /// Ids of non-diagonal orbitals.
    pub fn non_diagonal_ids(&self) -> Vec<usize> {
        (0..self.orbital_count()).filter(|&i| !self.diagonal[i]).collect()
    }
}

/// Computes the orbital decomposition from generator image tables over an
/// indexed domain.
pub(super) fn orbitals_of_maps(domain: usize, maps: &[Vec<u32>]) -> Result<OrbitalDecomposition> {
    let pair_count = (domain as u64).saturating_mul(domain as u64);
    if pair_count > DEFAULT_PAIR_CAP {
        return Err(Error::DomainTooLarge {
            size: pair_count,
            cap: DEFAULT_PAIR_CAP,
        });
    }
    let total = domain * domain;
    let mut orbit_of = vec![u32::MAX; total];
    let mut sizes = Vec::new();
    let mut representatives = Vec::new();
    let mut diagonal = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for start in 0..total {
        if orbit_of[start] != u32::MAX {
            continue;
        }
        let id = sizes.len() as u32;
        let mut size = 0usize;
        let mut all_diagonal = true;
        orbit_of[start] = id;
        stack.push(start);
        while let Some(flat) = stack.pop() {
            size += 1;
            let (u, v) = (flat / domain, flat % domain);
            if u != v {
                all_diagonal = false;
            }
            for map in maps {
                let image = map[u] as usize * domain + map[v] as usize;
                if orbit_of[image] == u32::MAX {
                    orbit_of[image] = id;
                    stack.push(image);
                }
            }
        }
        sizes.push(size);
        representatives.push((start / domain, start % domain));
        diagonal.push(all_diagonal);
    }
    let self_paired: Vec<bool> = representatives
        .iter()
        .enumerate()
        .map(|(id, &(u, v))| orbit_of[v * domain + u] as usize == id)
        .collect();
    Ok(OrbitalDecomposition {
        domain,
        orbit_of,
        sizes,
        representatives,
        self_paired,
        diagonal,
    })
}
