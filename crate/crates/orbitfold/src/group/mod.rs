//! Finitely generated permutation groups: orbits, stabilizer chains,
//! stabilizers, transitivity and primitivity tests, orbitals, and the
//! standard group families.

mod backtrack;
mod chain;
mod families;
mod orbitals;

pub use chain::StabilizerChain;
pub use families::{alternating_group, projective_linear_group, symmetric_group};
pub use orbitals::OrbitalDecomposition;

use std::collections::VecDeque;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{Permutation, PointSet};
use crate::subsets::{SubsetIndexer, DEFAULT_SUBSET_DOMAIN_CAP};

/// Hard cap on supported degrees.
pub const MAX_DEGREE: usize = 1 << 16;

/// Default node budget for the setwise-stabilizer backtrack search.
pub const DEFAULT_BACKTRACK_BUDGET: u64 = 100_000_000;

/// A permutation group given by generators, with a lazily built stabilizer
/// chain. Immutable after construction; freely shareable across threads.
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl Clone for PermutationGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermutationGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl std::fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PermutationGroup(degree {}, {} generators)", self.degree, self.generators.len())
    }
}

impl PermutationGroup {
    /// Builds a group of the given degree. An empty generator list yields the
    /// trivial group (the identity is inserted so the list stays non-empty).
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::BadDegree(degree));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        Ok(PermutationGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("trivial group of positive degree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The stabilizer chain with an automatically chosen base, built on first
    /// use and cached.
    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::build(self.degree, &self.generators, &[]))
    }

    /// Exact group order.
    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Group order as `u64`; panics if it does not fit (none of the catalog
    /// groups come close).
    pub fn order_u64(&self) -> u64 {
        u64::try_from(self.order()).expect("group order fits in u64")
    }

    /// Membership test through the stabilizer chain.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    /// The orbit partition of the natural action on points.
    pub fn point_orbits(&self) -> Partition {
        let mut assignment = vec![usize::MAX; self.degree];
        let mut next_block = 0usize;
        for start in 0..self.degree {
            if assignment[start] != usize::MAX {
                continue;
            }
            assignment[start] = next_block;
            let mut queue = VecDeque::from([start]);
            while let Some(p) = queue.pop_front() {
                for g in &self.generators {
                    let image = g.image(p);
                    if assignment[image] == usize::MAX {
                        assignment[image] = next_block;
                        queue.push_back(image);
                    }
                }
            }
            next_block += 1;
        }
        Partition::from_assignment(&assignment)
    }

    pub fn is_transitive(&self) -> bool {
        self.point_orbits().block_count() == 1
    }

    /// Image tables of the generators acting on the colex-indexed k-subset
    /// domain.
    pub(crate) fn subset_action_maps(&self, indexer: &SubsetIndexer) -> Vec<Vec<u32>> {
        let count = indexer.count();
        self.generators
            .iter()
            .map(|g| {
                let mut map = vec![0u32; count];
                for (rank, subset) in indexer.iter().enumerate() {
                    let mut image: Vec<usize> = subset.iter().map(|&p| g.image(p)).collect();
                    image.sort_unstable();
                    map[rank] = indexer.rank(&image) as u32;
                }
                map
            })
            .collect()
    }

    /// The orbit partition of the action on k-subsets, indexed by colex rank.
    pub fn subset_orbits(&self, k: usize) -> Result<Partition> {
        self.subset_orbits_capped(k, DEFAULT_SUBSET_DOMAIN_CAP)
    }

    /// [`subset_orbits`](Self::subset_orbits) with an explicit domain cap.
    pub fn subset_orbits_capped(&self, k: usize, cap: u64) -> Result<Partition> {
        let indexer = SubsetIndexer::new(self.degree, k, cap)?;
        let maps = self.subset_action_maps(&indexer);
        Ok(orbit_partition_of_maps(indexer.count(), &maps))
    }

    /// True iff the group has a single orbit on k-subsets.
    pub fn is_k_homogeneous(&self, k: usize) -> Result<bool> {
        Ok(self.subset_orbits(k)?.block_count() == 1)
    }

    /// The induced permutation group on the colex-indexed k-subset domain.
    pub fn action_on_k_subsets(&self, k: usize) -> Result<PermutationGroup> {
        let indexer = SubsetIndexer::new(self.degree, k, DEFAULT_SUBSET_DOMAIN_CAP)?;
        let maps = self.subset_action_maps(&indexer);
        let gens = maps
            .into_iter()
            .map(|m| {
                Permutation::from_images(m.into_iter().map(|x| x as usize).collect())
                    .expect("induced subset action is a permutation")
            })
            .collect();
        PermutationGroup::new(indexer.count(), gens)
    }

    /// Generators of the subgroup fixing every point of `set`, extracted from
    /// a chain whose base starts with those points.
    pub fn pointwise_stabilizer(&self, set: &PointSet) -> Result<PermutationGroup> {
        if set.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: set.degree(),
            });
        }
        let prefix = set.members();
        let chain = StabilizerChain::build(self.degree, &self.generators, &prefix);
        let gens = chain.strong_generators_at(prefix.len());
        PermutationGroup::new(self.degree, gens)
    }

    /// Setwise stabilizer `{ g : S^g = S }` by backtrack search over the
    /// stabilizer chain, with the default node budget.
    pub fn setwise_stabilizer(&self, set: &PointSet) -> Result<PermutationGroup> {
        self.setwise_stabilizer_with_budget(set, DEFAULT_BACKTRACK_BUDGET)
    }

    /// Setwise stabilizer with an explicit backtrack node budget.
    pub fn setwise_stabilizer_with_budget(
        &self,
        set: &PointSet,
        budget: u64,
    ) -> Result<PermutationGroup> {
        backtrack::setwise_stabilizer(self, set, budget)
    }

    /// Orbits of the point stabilizer `G_point` on the whole domain. The
    /// number of blocks is the rank of a transitive group.
    pub fn suborbits(&self, point: usize) -> Result<Partition> {
        if point >= self.degree {
            return Err(Error::OutOfRange {
                point: point + 1,
                degree: self.degree,
            });
        }
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let stab = self.pointwise_stabilizer(&PointSet::new(self.degree, &[point])?)?;
        Ok(stab.point_orbits())
    }

    /// Primitivity: transitive and no nontrivial block system. Uses the
    /// minimal block system through `{0, b}` for every other point `b`.
    pub fn is_primitive(&self) -> Result<bool> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        if self.degree <= 2 {
            return Ok(true);
        }
        for b in 1..self.degree {
            let blocks = self.minimal_block_partition(0, b);
            if blocks.block_count() != 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The finest G-congruence identifying `a` and `b` (Atkinson's algorithm).
    fn minimal_block_partition(&self, a: usize, b: usize) -> Partition {
        let mut parent: Vec<usize> = (0..self.degree).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut queue = VecDeque::from([(a, b)]);
        let ra = find(&mut parent, a);
        let rb = find(&mut parent, b);
        parent[ra] = rb;
        while let Some((x, y)) = queue.pop_front() {
            for g in &self.generators {
                let (xg, yg) = (g.image(x), g.image(y));
                let rx = find(&mut parent, xg);
                let ry = find(&mut parent, yg);
                if rx != ry {
                    parent[rx] = ry;
                    queue.push_back((xg, yg));
                }
            }
        }
        let assignment: Vec<usize> = (0..self.degree).map(|p| find(&mut parent, p)).collect();
        Partition::from_assignment(&assignment)
    }

    /// Orbitals (orbits on ordered pairs) of the natural action on points.
    pub fn orbitals_on_points(&self) -> Result<OrbitalDecomposition> {
        let maps: Vec<Vec<u32>> = self
            .generators
            .iter()
            .map(|g| (0..self.degree).map(|p| g.image(p) as u32).collect())
            .collect();
        orbitals::orbitals_of_maps(self.degree, &maps)
    }

    /// Orbitals of the action on the colex-indexed k-subset domain.
    pub fn orbitals_on_k_subsets(&self, k: usize) -> Result<OrbitalDecomposition> {
        let indexer = SubsetIndexer::new(self.degree, k, DEFAULT_SUBSET_DOMAIN_CAP)?;
        let maps = self.subset_action_maps(&indexer);
        orbitals::orbitals_of_maps(indexer.count(), &maps)
    }

    /// Orbitals of the induced action on an action-closed family of subsets.
    /// The family order defines the vertex indexing.
    pub fn orbitals_on_subset_family(&self, family: &[PointSet]) -> Result<OrbitalDecomposition> {
        let maps = self.subset_family_action_maps(family)?;
        orbitals::orbitals_of_maps(family.len(), &maps)
    }

    /// Image tables of the generators on an explicit subset family; the family
    /// must be closed under the action.
    pub(crate) fn subset_family_action_maps(&self, family: &[PointSet]) -> Result<Vec<Vec<u32>>> {
        let mut index: std::collections::HashMap<PointSet, u32> = std::collections::HashMap::new();
        for (i, s) in family.iter().enumerate() {
            if s.degree() != self.degree {
                return Err(Error::DegreeMismatch {
                    left: self.degree,
                    right: s.degree(),
                });
            }
            index.insert(s.clone(), i as u32);
        }
        self.generators
            .iter()
            .map(|g| {
                family
                    .iter()
                    .map(|s| {
                        let image = g.map_set(s);
                        index.get(&image).copied().ok_or_else(|| {
                            Error::NotFound(format!(
                                "subset family is not closed under the action: image {image} missing"
                            ))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// BFS closure of a set under the action; errors if the orbit exceeds `cap`.
    pub fn set_orbit(&self, seed: &PointSet, cap: usize) -> Result<Vec<PointSet>> {
        if seed.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: seed.degree(),
            });
        }
        let mut seen = std::collections::HashSet::new();
        let mut orbit = Vec::new();
        let mut queue = VecDeque::from([seed.clone()]);
        seen.insert(seed.clone());
        while let Some(s) = queue.pop_front() {
            orbit.push(s.clone());
            if orbit.len() > cap {
                return Err(Error::OrbitCapExceeded(cap));
            }
            for g in &self.generators {
                let image = g.map_set(&s);
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        Ok(orbit)
    }

    /// Parses the group file format: `degree <n>` then `gen <cycles>` lines;
    /// `#` starts a comment.
    pub fn parse_group_file(text: &str) -> Result<PermutationGroup> {
        let mut degree: Option<usize> = None;
        let mut gens: Vec<Permutation> = Vec::new();
        for raw in text.lines() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("degree") {
                if degree.is_some() {
                    return Err(Error::Malformed("duplicate degree line".into()));
                }
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::Malformed(format!("bad degree line '{line}'")))?;
                degree = Some(n);
            } else if let Some(rest) = line.strip_prefix("gen") {
                let n = degree.ok_or_else(|| {
                    Error::Malformed("gen line before degree line".into())
                })?;
                gens.push(Permutation::parse(rest.trim(), n)?);
            } else {
                return Err(Error::Malformed(format!("unrecognized line '{line}'")));
            }
        }
        let degree = degree.ok_or_else(|| Error::Malformed("missing degree line".into()))?;
        PermutationGroup::new(degree, gens)
    }

    /// Serializes to the group file format.
    pub fn to_group_file(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        for g in &self.generators {
            out.push_str(&format!("gen {g}\n"));
        }
        out
    }
}

/// Orbit partition of `{0..domain}` under explicit generator image tables.
pub(crate) fn orbit_partition_of_maps(domain: usize, maps: &[Vec<u32>]) -> Partition {
    let mut assignment = vec![usize::MAX; domain];
    let mut next_block = 0usize;
    for start in 0..domain {
        if assignment[start] != usize::MAX {
            continue;
        }
        assignment[start] = next_block;
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            for map in maps {
                let image = map[p] as usize;
                if assignment[image] == usize::MAX {
                    assignment[image] = next_block;
                    queue.push_back(image);
                }
            }
        }
        next_block += 1;
    }
    Partition::from_assignment(&assignment)
}
