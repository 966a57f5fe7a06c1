//! Base and strong generating sets via deterministic Schreier-Sims.
//!
//! The chain stores, per level `i`, a base point, the strong generators fixing
//! the earlier base points, and the transversal of the level orbit. Level
//! verification proceeds from the deepest level upward: every Schreier
//! generator is sifted through the lower levels, and any non-trivial residue
//! is installed as a new strong generator before verification resumes at the
//! level that received it. No randomization anywhere, so identical input
//! generators always produce the identical chain.

use num_bigint::BigUint;
use num_traits::One;

use crate::perm::Permutation;

#[derive(Clone)]
pub(crate) struct ChainLevel {
    pub base_point: usize,
    /// Strong generators of this level's group (they fix all earlier base points).
    pub gens: Vec<Permutation>,
    /// Orbit of `base_point` under `gens` in BFS discovery order.
    pub orbit: Vec<usize>,
    /// `transversal[p]` maps `base_point` to `p` for p in the orbit.
    pub transversal: Vec<Option<Permutation>>,
}

impl ChainLevel {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        ChainLevel {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            transversal,
        }
    }

    /// Recomputes the orbit and transversal of `base_point` from `gens`.
    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.orbit.clear();
        self.transversal = vec![None; degree];
        self.transversal[self.base_point] = Some(Permutation::identity(degree));
        self.orbit.push(self.base_point);
        let mut head = 0;
        while head < self.orbit.len() {
            let point = self.orbit[head];
            head += 1;
            let rep = self.transversal[point].clone().expect("orbit point has a rep");
            for g in &self.gens {
                let image = g.image(point);
                if self.transversal[image].is_none() {
                    self.transversal[image] = Some(rep.mul(g));
                    self.orbit.push(image);
                }
            }
        }
    }
}

/// A base with strong generators, orbits, and transversals.
#[derive(Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<ChainLevel>,
}

impl StabilizerChain {
    /// Builds a chain for the group generated by `generators`.
    ///
    /// Every point of `prescribed_prefix` becomes a base point, in order and
    /// ahead of any automatically chosen point, so the group fixing the first
    /// `prescribed_prefix.len()` base points is exactly the pointwise
    /// stabilizer of that prefix.
    pub fn build(degree: usize, generators: &[Permutation], prescribed_prefix: &[usize]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        let mut seen = vec![false; degree];
        for &b in prescribed_prefix {
            if !seen[b] {
                seen[b] = true;
                chain.levels.push(ChainLevel::new(degree, b));
            }
        }
        for g in generators {
            if !g.is_identity() {
                chain.install(g.clone(), 0);
            }
        }
        chain.run_schreier_sims();
        chain
    }

    /// Adds `g` as a strong generator at every level from `from` down to the
    /// deepest level whose base prefix it fixes, appending a new level when it
    /// fixes every existing base point.
    fn install(&mut self, g: Permutation, from: usize) -> usize {
        let mut deepest = from;
        while deepest < self.levels.len() {
            if g.image(self.levels[deepest].base_point) != self.levels[deepest].base_point {
                break;
            }
            deepest += 1;
        }
        if deepest == self.levels.len() {
            let base = (0..self.degree)
                .find(|&p| g.image(p) != p)
                .expect("non-identity permutation moves a point");
            self.levels.push(ChainLevel::new(self.degree, base));
        }
        for level in &mut self.levels[from..=deepest] {
            level.gens.push(g.clone());
        }
        deepest
    }

    /// Strips `p` through levels `start..`, returning the level at which the
    /// strip stopped and the residue.
    fn sift_from(&self, start: usize, p: Permutation) -> (usize, Permutation) {
        let mut level = start;
        let mut current = p;
        while level < self.levels.len() {
            if current.is_identity() {
                return (level, current);
            }
            let image = current.image(self.levels[level].base_point);
            match &self.levels[level].transversal[image] {
                Some(rep) => current = current.mul(&rep.inverse()),
                None => return (level, current),
            }
            level += 1;
        }
        (level, current)
    }

    fn run_schreier_sims(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        for level in &mut self.levels {
            level.rebuild_orbit();
        }
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let li = i as usize;
            self.levels[li].rebuild_orbit();
            let orbit = self.levels[li].orbit.clone();
            let gen_count = self.levels[li].gens.len();
            for &point in &orbit {
                for gi in 0..gen_count {
                    let rep = self.levels[li].transversal[point]
                        .clone()
                        .expect("orbit point has a rep");
                    let g = self.levels[li].gens[gi].clone();
                    let image = g.image(point);
                    let back = self.levels[li].transversal[image]
                        .clone()
                        .expect("orbit is closed under generators");
                    let schreier = rep.mul(&g).mul(&back.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (_, residue) = self.sift_from(li + 1, schreier);
                    if !residue.is_identity() {
                        let installed_at = self.install(residue, li + 1);
                        // resume verification at the deepest level that changed
                        i = installed_at as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The base points, one per level.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// Exact group order: the product of the level orbit lengths.
    pub fn order(&self) -> BigUint {
        let mut order = BigUint::one();
        for level in &self.levels {
            order *= BigUint::from(level.orbit.len());
        }
        order
    }

    /// Membership test by sifting.
    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (_, residue) = self.sift_from(0, p.clone());
        residue.is_identity()
    }

    pub(crate) fn levels(&self) -> &[ChainLevel] {
        &self.levels
    }

    /// Strong generators of the group fixing the first `level` base points.
    pub fn strong_generators_at(&self, level: usize) -> Vec<Permutation> {
        if level < self.levels.len() {
            self.levels[level].gens.clone()
        } else {
            Vec::new()
        }
    }
}
