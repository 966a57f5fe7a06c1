//! Steiner rigidity: the orbital structure of a point stabilizer acting on
//! the k-subsets away from its fixed point, with strong-regularity checks.
//!
//! For each k the report records whether the stabilizer has exactly two
//! orbits on k-subsets (those through the point and those avoiding it), the
//! rank of the induced action on the avoiding orbit, and for every
//! self-paired non-diagonal orbital the strong-regularity parameters of its
//! graph. The report's overall verdict requires the two-orbit property for
//! every requested k and non-degenerate strong regularity for the k = 2
//! orbitals; for k >= 3 the induced rank exceeds 3 even for the Mathieu
//! stabilizer, so those orbital rows are informational.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::iog::SimpleGraph;
use crate::perm::PointSet;
use crate::subsets::{SubsetIndexer, DEFAULT_SUBSET_DOMAIN_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

/// Strong-regularity parameters of a graph, if it is strongly regular:
/// k-regular with every adjacent pair sharing `lambda` neighbours and every
/// non-adjacent pair sharing `mu`. Complete and edgeless graphs satisfy the
/// conditions vacuously and are reported with the respective count zero; the
/// caller decides degeneracy.
pub fn srg_parameters(g: &SimpleGraph) -> Option<SrgParams> {
    let v = g.vertex_count();
    if v == 0 {
        return None;
    }
    let k = g.degree_of(0);
    if (1..v).any(|u| g.degree_of(u) != k) {
        return None;
    }
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for u in 0..v {
        for w in u + 1..v {
            let common = g.common_neighbours(u, w);
            let slot = if g.has_edge(u, w) { &mut lambda } else { &mut mu };
            match slot {
                Some(expected) if *expected != common => return None,
                Some(_) => {}
                None => *slot = Some(common),
            }
        }
    }
    Some(SrgParams {
        v,
        k,
        lambda: lambda.unwrap_or(0),
        mu: mu.unwrap_or(0),
    })
}

pub fn is_complete_graph(g: &SimpleGraph) -> bool {
    let v = g.vertex_count();
    (0..v).all(|u| g.degree_of(u) == v - 1)
}

pub fn is_edgeless_graph(g: &SimpleGraph) -> bool {
    (0..g.vertex_count()).all(|u| g.degree_of(u) == 0)
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitalGraphRow {
    pub valency: usize,
    pub self_paired: bool,
    pub srg: Option<SrgParams>,
    pub strongly_regular: bool,
    /// Complete or edgeless.
    pub degenerate: bool,
    /// Self-paired, strongly regular, and non-degenerate.
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RigidityLevel {
    pub k: usize,
    pub subset_orbit_count: usize,
    pub two_orbits: bool,
    pub domain_size: usize,
    /// Orbital count of the induced action on the avoiding orbit, diagonal
    /// included.
    pub rank: usize,
    pub orbitals: Vec<OrbitalGraphRow>,
    pub all_orbitals_pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RigidityReport {
    pub degree: usize,
    /// 1-based, as in all external text.
    pub point: usize,
    pub levels: Vec<RigidityLevel>,
    pub pass: bool,
}

/// Runs the rigidity check for `G` at the fixed point, over k = 2, 3, 4.
pub fn steiner_rigidity_check(group: &PermutationGroup, point: usize) -> Result<RigidityReport> {
    if group.degree() != 12 {
        return Err(Error::BadDegree(group.degree()));
    }
    if point >= group.degree() {
        return Err(Error::OutOfRange {
            point: point + 1,
            degree: group.degree(),
        });
    }
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let stabilizer = group.pointwise_stabilizer(&PointSet::new(group.degree(), &[point])?)?;

    let mut levels = Vec::new();
    for k in 2..=4usize {
        let indexer = SubsetIndexer::new(group.degree(), k, DEFAULT_SUBSET_DOMAIN_CAP)?;
        let orbits = stabilizer.subset_orbits(k)?;
        let orbit_count = orbits.block_count();

        // the k-subsets avoiding the fixed point, in colex order
        let family: Vec<PointSet> = indexer
            .iter()
            .filter(|subset| !subset.contains(&point))
            .map(|subset| PointSet::new(group.degree(), &subset).expect("subset in range"))
            .collect();
        let avoiding_ids: std::collections::HashSet<usize> = family
            .iter()
            .map(|s| orbits.block_id_of(indexer.rank_set(s)))
            .collect();
        // with exactly two orbits the avoiding side must be a single orbit
        let two_orbits = orbit_count == 2 && avoiding_ids.len() == 1;

        let decomposition = stabilizer.orbitals_on_subset_family(&family)?;
        let mut orbital_rows = Vec::new();
        for id in decomposition.non_diagonal_ids() {
            let self_paired = decomposition.is_self_paired(id);
            let valency = decomposition.size(id) / family.len();
            if !self_paired {
                orbital_rows.push(OrbitalGraphRow {
                    valency,
                    self_paired,
                    srg: None,
                    strongly_regular: false,
                    degenerate: false,
                    pass: false,
                });
                continue;
            }
            let mut graph = SimpleGraph::empty(family.len());
            for (u, v) in decomposition.pairs(id) {
                if u < v {
                    graph.add_edge(u, v);
                }
            }
            let srg = srg_parameters(&graph);
            let degenerate = is_complete_graph(&graph) || is_edgeless_graph(&graph);
            orbital_rows.push(OrbitalGraphRow {
                valency,
                self_paired,
                srg,
                strongly_regular: srg.is_some(),
                degenerate,
                pass: srg.is_some() && !degenerate,
            });
        }
        let all_orbitals_pass = orbital_rows
            .iter()
            .filter(|r| r.self_paired)
            .all(|r| r.pass)
            && orbital_rows.iter().any(|r| r.self_paired);

        levels.push(RigidityLevel {
            k,
            subset_orbit_count: orbit_count,
            two_orbits,
            domain_size: family.len(),
            rank: decomposition.orbital_count(),
            orbitals: orbital_rows,
            all_orbitals_pass,
        });
    }

    let pass = levels.iter().all(|l| l.two_orbits)
        && levels
            .iter()
            .find(|l| l.k == 2)
            .map(|l| l.all_orbitals_pass)
            .unwrap_or(false);

    Ok(RigidityReport {
        degree: group.degree(),
        point: point + 1,
        levels,
        pass,
    })
}
