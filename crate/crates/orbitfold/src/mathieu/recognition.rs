//! Recognition of M12 among the primitive degree-12 groups by orbit-type
//! witnesses.
//!
//! The primitive groups of degree 12 are A12, S12, PSL(2,11), PGL(2,11), and
//! M12. The recognizer checks, in order: primitivity; that the point
//! stabilizer has exactly two orbits on 3-subsets (the projective groups have
//! at least three, split by the cross-ratio); that the group is transitive on
//! 4-subsets with a 4-set stabilizer of shape 4+8 and order |G|/495; and that
//! some 6-set has a stabilizer of shape 6+6 while lying in a proper orbit of
//! 6-subsets. That properness is the maximality proxy: in the alternating and
//! symmetric groups every 6-set orbit is full, the 6-set carries no invariant
//! structure, and its stabilizer sits inside the imprimitive wreath closure
//! instead of a maximal subgroup. Only M12, where hexads of the Steiner system
//! form a proper orbit of 132, passes all four.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::partition::Shape;
use crate::perm::PointSet;
use crate::subsets::{SubsetIndexer, DEFAULT_SUBSET_DOMAIN_CAP};

#[derive(Debug, Clone, Serialize)]
pub struct FourSetWitness {
    pub transitive_on_four_subsets: bool,
    pub stabilizer_shape: Option<Shape>,
    pub stabilizer_order: Option<String>,
    pub order_matches_orbit: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SixSetOrbitRow {
    pub orbit_size: usize,
    pub stabilizer_shape: Shape,
    pub stabilizer_order: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SixSetWitness {
    pub orbits: Vec<SixSetOrbitRow>,
    pub shape_found: bool,
    /// Maximality proxy: a 6+6 stabilizer whose 6-set orbit is a proper subset
    /// of all 924 6-subsets.
    pub proper_orbit_found: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecognitionReport {
    pub degree: usize,
    pub order: String,
    pub transitive: bool,
    pub primitive: bool,
    pub point_stabilizer_three_subset_orbits: usize,
    pub four_set: FourSetWitness,
    pub six_set: SixSetWitness,
    pub contains_odd_permutation: bool,
    pub consistent_candidates: Vec<String>,
    pub verdict: String,
}

impl RecognitionReport {
    pub fn is_m12(&self) -> bool {
        self.verdict == "m12"
    }
}

struct CandidateSignature {
    name: &'static str,
    order: u64,
    three_subset_orbits_is_two: bool,
    four_set_pass: bool,
    six_set_pass: Option<bool>,
    contains_odd: bool,
}

const CANDIDATES: [CandidateSignature; 5] = [
    CandidateSignature { name: "M12", order: 95040, three_subset_orbits_is_two: true, four_set_pass: true, six_set_pass: Some(true), contains_odd: false },
    CandidateSignature { name: "A12", order: 239500800, three_subset_orbits_is_two: true, four_set_pass: true, six_set_pass: Some(false), contains_odd: false },
    CandidateSignature { name: "S12", order: 479001600, three_subset_orbits_is_two: true, four_set_pass: true, six_set_pass: Some(false), contains_odd: true },
    CandidateSignature { name: "PSL(2,11)", order: 660, three_subset_orbits_is_two: false, four_set_pass: false, six_set_pass: None, contains_odd: false },
    CandidateSignature { name: "PGL(2,11)", order: 1320, three_subset_orbits_is_two: false, four_set_pass: false, six_set_pass: None, contains_odd: true },
];

/// Decides whether a degree-12 group is permutation isomorphic to M12 in its
/// natural action, reporting every witness it checked.
pub fn recognize_degree12(group: &PermutationGroup) -> Result<RecognitionReport> {
    recognize_degree12_with_budget(group, crate::group::DEFAULT_BACKTRACK_BUDGET)
}

pub fn recognize_degree12_with_budget(
    group: &PermutationGroup,
    budget: u64,
) -> Result<RecognitionReport> {
    if group.degree() != 12 {
        return Err(Error::BadDegree(group.degree()));
    }
    let order = group.order();
    let transitive = group.is_transitive();
    let primitive = if transitive { group.is_primitive()? } else { false };
    let contains_odd = group.generators().iter().any(|g| !g.is_even());

    let mut stab3_orbits = 0usize;
    let mut four_set = FourSetWitness {
        transitive_on_four_subsets: false,
        stabilizer_shape: None,
        stabilizer_order: None,
        order_matches_orbit: false,
        pass: false,
    };
    let mut six_set = SixSetWitness {
        orbits: Vec::new(),
        shape_found: false,
        proper_orbit_found: false,
        pass: false,
    };

    if transitive {
        let point_stab = group.pointwise_stabilizer(&PointSet::new(12, &[0])?)?;
        stab3_orbits = point_stab.subset_orbits(3)?.block_count();

        // 4-set witness
        let orbits4 = group.subset_orbits(4)?;
        four_set.transitive_on_four_subsets = orbits4.block_count() == 1;
        if four_set.transitive_on_four_subsets {
            let tetrad = PointSet::new(12, &[0, 1, 2, 3])?;
            let stab = group.setwise_stabilizer_with_budget(&tetrad, budget)?;
            let shape = stab.point_orbits().shape();
            let stab_order = stab.order();
            four_set.order_matches_orbit =
                stab_order.clone() * BigUint::from(495u32) == order;
            four_set.pass = shape == Shape::new(vec![8, 4]) && four_set.order_matches_orbit;
            four_set.stabilizer_shape = Some(shape);
            four_set.stabilizer_order = Some(stab_order.to_string());
        }

        // 6-set witness: one representative per orbit of 6-subsets
        let indexer = SubsetIndexer::new(12, 6, DEFAULT_SUBSET_DOMAIN_CAP)?;
        let orbits6 = group.subset_orbits(6)?;
        let total6 = indexer.count();
        for block_id in 0..orbits6.block_count() {
            let block = orbits6.block(block_id);
            let representative = indexer.unrank_set(block[0]);
            let stab = group.setwise_stabilizer_with_budget(&representative, budget)?;
            let shape = stab.point_orbits().shape();
            let is_six_six = shape == Shape::new(vec![6, 6]);
            if is_six_six {
                six_set.shape_found = true;
                if block.len() < total6 {
                    six_set.proper_orbit_found = true;
                }
            }
            six_set.orbits.push(SixSetOrbitRow {
                orbit_size: block.len(),
                stabilizer_shape: shape,
                stabilizer_order: stab.order().to_string(),
            });
        }
        six_set.pass = six_set.shape_found && six_set.proper_orbit_found;
    }

    let consistent_candidates: Vec<String> = CANDIDATES
        .iter()
        .filter(|c| {
            BigUint::from(c.order) == order
                && c.three_subset_orbits_is_two == (stab3_orbits == 2)
                && c.four_set_pass == four_set.pass
                && c.six_set_pass.map(|s| s == six_set.pass).unwrap_or(true)
                && c.contains_odd == contains_odd
        })
        .map(|c| c.name.to_string())
        .collect();

    let verdict = if !transitive {
        "not-m12: not transitive".to_string()
    } else if !primitive {
        "not-m12: not primitive".to_string()
    } else if stab3_orbits != 2 {
        format!("not-m12: point stabilizer has {stab3_orbits} orbits on 3-subsets")
    } else if !four_set.pass {
        "not-m12: no 4-set witness (shape 4+8 with order |G|/495)".to_string()
    } else if !six_set.pass {
        if six_set.shape_found {
            "not-m12: 6+6 stabilizer shape found but no proper 6-set orbit (maximality proxy failed)"
                .to_string()
        } else {
            "not-m12: no 6-set stabilizer of shape 6+6".to_string()
        }
    } else {
        "m12".to_string()
    };

    Ok(RecognitionReport {
        degree: 12,
        order: order.to_string(),
        transitive,
        primitive,
        point_stabilizer_three_subset_orbits: stab3_orbits,
        four_set,
        six_set,
        contains_odd_permutation: contains_odd,
        consistent_candidates,
        verdict,
    })
}
