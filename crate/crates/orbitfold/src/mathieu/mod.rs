//! Validated Mathieu group data and the combinatorial objects of their
//! Steiner systems: blocks, octads, dodecads, trios, and the stabilizer
//! subgroups built from them.
//!
//! Group generators ship as data files and are trusted only after passing
//! validation (exact order plus transitivity on k-subsets up to the group's
//! homogeneity degree). Every derived object is produced by a deterministic
//! rule - colexicographically first qualifying set, first qualifying pair -
//! so reports are byte-reproducible.

mod catalog;
mod recognition;
mod rigidity;

pub use catalog::{
    classify, verify_catalog, verify_catalog_with_budget, CatalogEntry, CatalogReport,
    CatalogRow, ClassificationOutcome, ClassificationReport,
};
pub use recognition::{recognize_degree12, recognize_degree12_with_budget, RecognitionReport};
pub use rigidity::{
    steiner_rigidity_check, srg_parameters, OrbitalGraphRow, RigidityLevel, RigidityReport,
    SrgParams,
};

use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::perm::PointSet;

/// Environment variable overriding the group data directory.
pub const DATA_DIR_ENV: &str = "ORBITFOLD_DATA";

/// Expected degree, exact order, and homogeneity witness per group.
#[derive(Debug, Clone)]
pub struct ValidationRule {
    pub name: &'static str,
    pub degree: usize,
    pub order: u64,
    /// The group must be transitive on j-subsets for all j up to this value,
    /// and the falling factorial degree*(degree-1)*...*(degree-k+1) must
    /// divide the order.
    pub homogeneity: usize,
}

pub const VALIDATION_RULES: [ValidationRule; 3] = [
    ValidationRule { name: "m11", degree: 11, order: 7920, homogeneity: 4 },
    ValidationRule { name: "m12", degree: 12, order: 95040, homogeneity: 5 },
    ValidationRule { name: "m24", degree: 24, order: 244823040, homogeneity: 5 },
];

pub fn validation_rule(name: &str) -> Result<&'static ValidationRule> {
    VALIDATION_RULES
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::UnknownLabel(name.to_string()))
}

/// Resolves the data directory: `$ORBITFOLD_DATA`, then `./data`, then the
/// crate's bundled `data/`.
pub fn default_data_dir() -> PathBuf {
    if let Ok(dir) = std::env::var(DATA_DIR_ENV) {
        return PathBuf::from(dir);
    }
    let cwd = PathBuf::from("data");
    if cwd.is_dir() {
        return cwd;
    }
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

/// Loads `<data_dir>/<name>.grp` and accepts it only if the validation rule
/// passes: exact order, transitivity on k-subsets for k up to the homogeneity
/// witness, and the divisibility cross-check.
pub fn load_validated_group_from(name: &str, data_dir: &Path) -> Result<PermutationGroup> {
    let rule = validation_rule(name)?;
    let path = data_dir.join(format!("{name}.grp"));
    let text = std::fs::read_to_string(&path)
        .map_err(|_| Error::MissingData(path.display().to_string()))?;
    let group = PermutationGroup::parse_group_file(&text)?;
    validate_group(&group, rule)?;
    Ok(group)
}

/// Loads from [`default_data_dir`].
pub fn load_validated_group(name: &str) -> Result<PermutationGroup> {
    load_validated_group_from(name, &default_data_dir())
}

pub fn validate_group(group: &PermutationGroup, rule: &ValidationRule) -> Result<()> {
    if group.degree() != rule.degree {
        return Err(Error::ValidationFailed(format!(
            "{}: degree {} but expected {}",
            rule.name,
            group.degree(),
            rule.degree
        )));
    }
    let order = group.order();
    if order != BigUint::from(rule.order) {
        return Err(Error::ValidationFailed(format!(
            "{}: order {order} but expected {}",
            rule.name, rule.order
        )));
    }
    let mut falling = 1u64;
    for j in 0..rule.homogeneity {
        falling *= (rule.degree - j) as u64;
    }
    if !rule.order.is_multiple_of(falling) {
        return Err(Error::ValidationFailed(format!(
            "{}: order {} not divisible by the {}-point falling factorial {falling}",
            rule.name, rule.order, rule.homogeneity
        )));
    }
    for k in 1..=rule.homogeneity {
        if !group.is_k_homogeneous(k)? {
            return Err(Error::ValidationFailed(format!(
                "{}: not transitive on {k}-subsets",
                rule.name
            )));
        }
    }
    Ok(())
}

/// Completes a seed set to its Steiner-system block: the setwise stabilizer of
/// `S` fixes the unique block through `S`, so the block is `S` together with
/// the complement orbit of the completing size (1 for M12 hexads and M11
/// pentads, 3 for M24 octads).
pub fn derive_block(group: &PermutationGroup, seed: &PointSet) -> Result<PointSet> {
    derive_block_with_budget(group, seed, crate::group::DEFAULT_BACKTRACK_BUDGET)
}

pub fn derive_block_with_budget(
    group: &PermutationGroup,
    seed: &PointSet,
    budget: u64,
) -> Result<PointSet> {
    let (seed_size, completion_size) = match group.degree() {
        11 => (4usize, 1usize),
        12 => (5, 1),
        24 => (5, 3),
        d => return Err(Error::BadDegree(d)),
    };
    if seed.len() != seed_size {
        return Err(Error::UnexpectedOrbitShape(format!(
            "seed {seed} has {} points but degree {} requires {seed_size}",
            seed.len(),
            group.degree()
        )));
    }
    let stabilizer = group.setwise_stabilizer_with_budget(seed, budget)?;
    let orbits = stabilizer.point_orbits();
    let mut completion: Option<Vec<usize>> = None;
    for block in orbits.blocks() {
        if block.iter().any(|&p| seed.contains(p)) {
            continue;
        }
        if block.len() == completion_size {
            if completion.is_some() {
                return Err(Error::UnexpectedOrbitShape(format!(
                    "two complement orbits of size {completion_size} for seed {seed}"
                )));
            }
            completion = Some(block);
        }
    }
    let completion = completion.ok_or_else(|| {
        Error::UnexpectedOrbitShape(format!(
            "no complement orbit of size {completion_size} for seed {seed}; orbit shape {}",
            orbits.shape()
        ))
    })?;
    let mut points = seed.members();
    points.extend(completion);
    PointSet::new(group.degree(), &points)
}

/// The orbit of a block under the group, sorted colexicographically.
/// M24 yields 759 octads, M12 132 hexads, M11 66 pentads.
pub fn enumerate_blocks(group: &PermutationGroup, seed_block: &PointSet) -> Result<Vec<PointSet>> {
    let mut orbit = group.set_orbit(seed_block, 100_000)?;
    orbit.sort();
    Ok(orbit)
}

/// The colexicographically first pair of octads meeting in exactly two points
/// determines a dodecad: their symmetric difference.
pub fn derive_dodecad(octads: &[PointSet]) -> Result<PointSet> {
    for i in 0..octads.len() {
        for j in i + 1..octads.len() {
            if octads[i].intersection(&octads[j])?.len() == 2 {
                return octads[i].symmetric_difference(&octads[j]);
            }
        }
    }
    Err(Error::NotFound(
        "no pair of octads meets in exactly two points".into(),
    ))
}

/// A trio: the colex-least octad, the first octad disjoint from it, and the
/// complement of their union, which must itself be an octad in the list.
pub fn derive_trio(octads: &[PointSet]) -> Result<(PointSet, PointSet, PointSet)> {
    let first = octads
        .first()
        .ok_or_else(|| Error::NotFound("empty octad list".into()))?;
    for candidate in &octads[1..] {
        if first.intersection(candidate)?.is_empty() {
            let third = first.union(candidate)?.complement();
            if !octads.contains(&third) {
                return Err(Error::NotFound(format!(
                    "complement {third} of a disjoint octad pair is not an octad"
                )));
            }
            return Ok((first.clone(), candidate.clone(), third));
        }
    }
    Err(Error::NotFound("no octad disjoint from the first".into()))
}

/// Builds one of the named stabilizer subgroups inside a validated ambient
/// group. Intransitive classes are constructed as stabilizers of the
/// corresponding combinatorial object; the transitive projective classes come
/// from [`crate::group::projective_linear_group`].
pub fn build_catalog_subgroup(
    ambient_name: &str,
    ambient: &PermutationGroup,
    class_label: &str,
) -> Result<PermutationGroup> {
    build_catalog_subgroup_with_budget(
        ambient_name,
        ambient,
        class_label,
        crate::group::DEFAULT_BACKTRACK_BUDGET,
    )
}

/// [`build_catalog_subgroup`] with an explicit backtrack node budget.
pub fn build_catalog_subgroup_with_budget(
    ambient_name: &str,
    ambient: &PermutationGroup,
    class_label: &str,
    budget: u64,
) -> Result<PermutationGroup> {
    let n = ambient.degree();
    let prefix = |k: usize| PointSet::new(n, &(0..k).collect::<Vec<_>>());
    let stab = |s: &PointSet| ambient.setwise_stabilizer_with_budget(s, budget);
    match (ambient_name, class_label) {
        (_, "point stabilizer") => ambient.pointwise_stabilizer(&prefix(1)?),
        (_, "pair stabilizer") => stab(&prefix(2)?),
        (_, "triple stabilizer") => stab(&prefix(3)?),
        ("m12", "tetrad stabilizer") => stab(&prefix(4)?),
        ("m11", "pentad stabilizer") => {
            let pentad = derive_block_with_budget(ambient, &prefix(4)?, budget)?;
            stab(&pentad)
        }
        ("m12", "hexad stabilizer") => {
            let hexad = derive_block_with_budget(ambient, &prefix(5)?, budget)?;
            stab(&hexad)
        }
        ("m24", "octad stabilizer") => {
            let octad = derive_block_with_budget(ambient, &prefix(5)?, budget)?;
            stab(&octad)
        }
        ("m24", "dodecad stabilizer") => {
            let octad = derive_block_with_budget(ambient, &prefix(5)?, budget)?;
            let octads = enumerate_blocks(ambient, &octad)?;
            let dodecad = derive_dodecad(&octads)?;
            stab(&dodecad)
        }
        ("m24", "trio stabilizer (ordered)") => {
            let octad = derive_block_with_budget(ambient, &prefix(5)?, budget)?;
            let octads = enumerate_blocks(ambient, &octad)?;
            let (b1, b2, _) = derive_trio(&octads)?;
            let inner = stab(&b1)?;
            inner.setwise_stabilizer_with_budget(&b2, budget)
        }
        ("m12", "psl(2,11)") => crate::group::projective_linear_group(11, false),
        ("m24", "psl(2,23)") => crate::group::projective_linear_group(23, false),
        _ => Err(Error::UnknownLabel(format!("{ambient_name}: {class_label}"))),
    }
}
