//! Setwise stabilizers by depth-first backtrack over a stabilizer chain.
//!
//! The chain base is reordered so the points of `S` come first. While the
//! search walks the first `|S|` levels it only follows branches whose chosen
//! base image stays inside `S` (an element mapping any point of `S` outside
//! `S` cannot stabilize it). Once all `S`-levels are fixed, the image of `S`
//! is fully determined for the entire subtree, so the subtree collapses to a
//! single membership test: the remaining levels generate the pointwise
//! stabilizer of `S`, which is seeded into the result up front.
//!
//! Elements found during the search grow a known subgroup `K`; at the top
//! level only branch images that are minimal in their `K`-orbit are explored,
//! since the rest of the coset is already generated.

use crate::error::{Error, Result};
use crate::perm::{Permutation, PointSet};

use super::chain::StabilizerChain;
use super::PermutationGroup;

pub(super) fn setwise_stabilizer(
    group: &PermutationGroup,
    set: &PointSet,
    budget: u64,
) -> Result<PermutationGroup> {
    if set.degree() != group.degree() {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: set.degree(),
        });
    }
    if group.degree() > 64 {
        return Err(Error::BadDegree(group.degree()));
    }
    if set.is_empty() || set.len() == group.degree() {
        return Ok(group.clone());
    }
    // The stabilizer of S equals the stabilizer of its complement; search the
    // smaller side.
    let target = if set.len() * 2 > group.degree() {
        set.complement()
    } else {
        set.clone()
    };
    let members = target.members();
    let chain = StabilizerChain::build(group.degree(), group.generators(), &members);
    let prefix_levels = members.len().min(chain.levels().len());

    let mut search = Search {
        chain: &chain,
        set: &target,
        set_points: &members,
        prefix_levels,
        known: KnownSubgroup::new(
            group.degree(),
            chain.strong_generators_at(prefix_levels),
        ),
        nodes: 0,
        budget,
    };
    search.descend(0, Permutation::identity(group.degree()))?;

    let result = PermutationGroup::new(group.degree(), search.known.generators)?;
    debug_assert!(result
        .generators()
        .iter()
        .all(|g| g.map_set(set) == *set));
    Ok(result)
}

struct Search<'a> {
    chain: &'a StabilizerChain,
    set: &'a PointSet,
    set_points: &'a [usize],
    prefix_levels: usize,
    known: KnownSubgroup,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Explores level `level` with the accumulated right factor `tail`; the
    /// final image of the base point chosen at an earlier level `j` is
    /// `orbit_point_j ^ tail_j`, and every completion below the `S`-prefix
    /// maps `S` to `S^tail`.
    fn descend(&mut self, level: usize, tail: Permutation) -> Result<()> {
        if level == self.prefix_levels {
            let image: Vec<usize> = self.set_points.iter().map(|&p| tail.image(p)).collect();
            if image.iter().all(|&p| self.set.contains(p)) && !self.known.contains(&tail) {
                self.known.adjoin(tail);
            }
            return Ok(());
        }
        let lvl = &self.chain.levels()[level];
        for &point in &lvl.orbit {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded(self.budget));
            }
            let final_image = tail.image(point);
            if !self.set.contains(final_image) {
                continue;
            }
            if level == 0 && !self.known.is_orbit_minimum(final_image) {
                continue;
            }
            let rep = lvl.transversal[point]
                .as_ref()
                .expect("orbit point has a transversal rep");
            self.descend(level + 1, rep.mul(&tail))?;
        }
        Ok(())
    }
}

/// The subgroup found so far, with a chain for membership tests.
struct KnownSubgroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabilizerChain,
}

impl KnownSubgroup {
    fn new(degree: usize, generators: Vec<Permutation>) -> Self {
        let chain = StabilizerChain::build(degree, &generators, &[]);
        KnownSubgroup {
            degree,
            generators,
            chain,
        }
    }

    fn contains(&self, p: &Permutation) -> bool {
        self.chain.contains(p)
    }

    fn adjoin(&mut self, p: Permutation) {
        self.generators.push(p);
        self.chain = StabilizerChain::build(self.degree, &self.generators, &[]);
    }

    /// True iff `point` is the minimum of its orbit under the known subgroup.
    fn is_orbit_minimum(&self, point: usize) -> bool {
        let mut orbit = vec![point];
        let mut seen = 1u128 << point;
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in &self.generators {
                let image = g.image(p);
                if image < point {
                    return false;
                }
                if seen >> image & 1 == 0 {
                    seen |= 1u128 << image;
                    orbit.push(image);
                }
            }
        }
        true
    }
}
