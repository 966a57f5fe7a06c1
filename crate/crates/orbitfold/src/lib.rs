//! Intersection orbital graphs of permutation group pairs.
//!
//! Two permutation groups on the same domain induce orbit partitions whose
//! meet defines a graph: vertices are domain elements, and two are adjacent
//! when they share an orbit of each group. The graph is always a disjoint
//! union of cliques, so its shape, spectrum, automorphism group, and basic
//! invariants are exact integer data. When the first group is transitive the
//! graph reads off the orbit structure of the second, which turns orbit
//! shapes into fingerprints for subgroup classes; the `mathieu` module applies
//! this to the Mathieu groups M11, M12, and M24 and their Steiner systems.

pub mod error;
pub mod group;
pub mod iog;
pub mod mathieu;
pub mod partition;
pub mod perm;
pub mod spectral;
pub mod subsets;

pub use error::{Error, Result};
pub use group::{
    alternating_group, projective_linear_group, symmetric_group, OrbitalDecomposition,
    PermutationGroup, StabilizerChain,
};
pub use iog::{
    intersection_orbital_graph, k_intersection_graph, recognize_clique_union,
    satisfies_quadratic_relation, CliqueUnionGraph, SimpleGraph,
};
pub use partition::{shape_lookup, LookupOutcome, Partition, Shape};
pub use perm::{Permutation, PointSet};
pub use spectral::{
    aut_order, char_poly_exact, ds_scan, invariants, shape_from_spectrum, spectrum_from_shape,
    AutDescription, InvariantTriple, SpectrumSummary,
};
