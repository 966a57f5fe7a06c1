//! Intersection orbital graphs.
//!
//! `Gamma(G1, G2)` has an edge between two domain elements exactly when they
//! share a G1-orbit and a G2-orbit, so the graph is the disjoint union of
//! cliques on the blocks of the meet of the two orbit partitions. The graph is
//! stored as that partition; densifying to an adjacency matrix is an explicit
//! conversion used by oracles and the recognizers.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::group::PermutationGroup;
use crate::partition::{Partition, Shape};
use crate::subsets::{SubsetIndexer, DEFAULT_SUBSET_DOMAIN_CAP};

/// A disjoint union of cliques, stored as its block decomposition.
#[derive(Clone, Debug)]
pub struct CliqueUnionGraph {
    partition: Partition,
    /// Human-readable vertex labels (1-based points, or k-subsets).
    vertex_labels: Option<Vec<String>>,
}

impl CliqueUnionGraph {
    pub fn from_partition(partition: Partition) -> Self {
        CliqueUnionGraph {
            partition,
            vertex_labels: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.partition.domain_size()
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn shape(&self) -> Shape {
        self.partition.shape()
    }

    pub fn vertex_label(&self, v: usize) -> String {
        match &self.vertex_labels {
            Some(labels) => labels[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    /// Connected components are exactly the blocks.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.partition.blocks()
    }

    /// Complete iff a single block spans the whole vertex set.
    pub fn is_complete(&self) -> bool {
        self.partition.block_count() == 1
    }

    pub fn edge_count(&self) -> usize {
        self.partition
            .block_sizes()
            .iter()
            .map(|&s| s * (s - 1) / 2)
            .sum()
    }

    /// Explicit adjacency-matrix form.
    pub fn densify(&self) -> SimpleGraph {
        let n = self.vertex_count();
        let mut g = SimpleGraph::empty(n);
        for block in self.partition.blocks() {
            for (i, &u) in block.iter().enumerate() {
                for &v in &block[i + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// All edges as 0-based pairs `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for block in self.partition.blocks() {
            for (i, &u) in block.iter().enumerate() {
                for &v in &block[i + 1..] {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Edge list lines `u v`, 1-based, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }

    /// DOT output: one subgraph per block with clique edges spelled out;
    /// deterministic vertex and edge order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph intersection_orbital {\n");
        for (b, block) in self.partition.blocks().iter().enumerate() {
            let _ = writeln!(out, "  subgraph cluster_{b} {{");
            for &v in block {
                let _ = writeln!(out, "    v{} [label=\"{}\"];", v + 1, self.vertex_label(v));
            }
            for (i, &u) in block.iter().enumerate() {
                for &v in &block[i + 1..] {
                    let _ = writeln!(out, "    v{} -- v{};", u + 1, v + 1);
                }
            }
            out.push_str("  }\n");
        }
        out.push_str("}\n");
        out
    }
}

/// `Gamma(G1, G2)`: cliques on the blocks of the meet of the point-orbit
/// partitions.
pub fn intersection_orbital_graph(
    g1: &PermutationGroup,
    g2: &PermutationGroup,
) -> Result<CliqueUnionGraph> {
    if g1.degree() != g2.degree() {
        return Err(Error::DegreeMismatch {
            left: g1.degree(),
            right: g2.degree(),
        });
    }
    let meet = g1.point_orbits().meet(&g2.point_orbits())?;
    Ok(CliqueUnionGraph::from_partition(meet))
}

/// `Gamma_k(G1, G2)` on the colex-indexed k-subset domain; `k = 1` coincides
/// with the point graph.
pub fn k_intersection_graph(
    g1: &PermutationGroup,
    g2: &PermutationGroup,
    k: usize,
) -> Result<CliqueUnionGraph> {
    k_intersection_graph_capped(g1, g2, k, DEFAULT_SUBSET_DOMAIN_CAP)
}

pub fn k_intersection_graph_capped(
    g1: &PermutationGroup,
    g2: &PermutationGroup,
    k: usize,
    cap: u64,
) -> Result<CliqueUnionGraph> {
    if g1.degree() != g2.degree() {
        return Err(Error::DegreeMismatch {
            left: g1.degree(),
            right: g2.degree(),
        });
    }
    let indexer = SubsetIndexer::new(g1.degree(), k, cap)?;
    let meet = g1
        .subset_orbits_capped(k, cap)?
        .meet(&g2.subset_orbits_capped(k, cap)?)?;
    let labels = indexer
        .iter()
        .map(|subset| {
            let names: Vec<String> = subset.iter().map(|&p| (p + 1).to_string()).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    Ok(CliqueUnionGraph {
        partition: meet,
        vertex_labels: Some(labels),
    })
}

/// A simple graph as a symmetric bit matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    words_per_row: usize,
    rows: Vec<u64>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        let words_per_row = n.div_ceil(64).max(1);
        SimpleGraph {
            n,
            words_per_row,
            rows: vec![0; words_per_row * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no loops in a simple graph");
        assert!(u < self.n && v < self.n);
        self.rows[u * self.words_per_row + v / 64] |= 1u64 << (v % 64);
        self.rows[v * self.words_per_row + u / 64] |= 1u64 << (u % 64);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words_per_row..(u + 1) * self.words_per_row]
    }

    pub fn degree_of(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of common neighbours of `u` and `v`.
    pub fn common_neighbours(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree_of(u)).sum::<usize>() / 2
    }

    /// Connected components, each sorted, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut component = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < component.len() {
                let u = component[head];
                head += 1;
                for (v, visited) in seen.iter_mut().enumerate() {
                    if !*visited && self.has_edge(u, v) {
                        *visited = true;
                        component.push(v);
                    }
                }
            }
            component.sort_unstable();
            out.push(component);
        }
        out
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.has_edge(u, v))
            .collect();
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, edges)
    }
}

/// Checks the matrix identity `A^2 = (D - I)A + D` entrywise over the
/// integers; it holds exactly for disjoint unions of complete graphs.
///
/// Entrywise: common(u,v) must equal `(deg(u) - 1) * A[u][v]` off the
/// diagonal, and `deg(u)` on it (which holds automatically).
pub fn satisfies_quadratic_relation(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let degrees: Vec<usize> = (0..n).map(|u| g.degree_of(u)).collect();
    for (u, &deg_u) in degrees.iter().enumerate() {
        for v in 0..n {
            if u == v {
                continue;
            }
            let lhs = g.common_neighbours(u, v);
            let rhs = if g.has_edge(u, v) { deg_u - 1 } else { 0 };
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Returns the component-size shape iff every connected component is a
/// complete graph.
pub fn recognize_clique_union(g: &SimpleGraph) -> Option<Shape> {
    let components = g.components();
    for component in &components {
        let size = component.len();
        // a component is complete iff every member has degree size-1
        if component.iter().any(|&u| g.degree_of(u) != size - 1) {
            return None;
        }
    }
    Some(Shape::new(components.iter().map(Vec::len).collect()))
}
