//! Set partitions of an indexed domain, their meet, and integer-partition
//! shapes (the orbit-partition fingerprint).

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A partition of `{0, ..., n-1}` into non-empty blocks.
///
/// Blocks carry dense ids `0..r-1` ordered by their minimum element, and every
/// block lists its members in increasing order, so equal partitions have equal
/// representations.
#[derive(Clone, PartialEq, Eq)]
pub struct Partition {
    block_of: Vec<u32>,
    blocks: Vec<Vec<u32>>,
}

impl Partition {
    /// Canonicalizes an arbitrary block-id assignment (ids need not be dense).
    pub fn from_assignment(assignment: &[usize]) -> Partition {
        let mut relabel: HashMap<usize, u32> = HashMap::new();
        let mut block_of = Vec::with_capacity(assignment.len());
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for (i, &raw) in assignment.iter().enumerate() {
            let id = *relabel.entry(raw).or_insert_with(|| {
                blocks.push(Vec::new());
                (blocks.len() - 1) as u32
            });
            block_of.push(id);
            blocks[id as usize].push(i as u32);
        }
        Partition { block_of, blocks }
    }

    pub fn from_blocks(domain_size: usize, blocks: &[Vec<usize>]) -> Result<Partition> {
        let mut assignment = vec![usize::MAX; domain_size];
        for (id, block) in blocks.iter().enumerate() {
            for &i in block {
                if i >= domain_size {
                    return Err(Error::OutOfRange {
                        point: i + 1,
                        degree: domain_size,
                    });
                }
                if assignment[i] != usize::MAX {
                    return Err(Error::RepeatedPoint { point: i + 1 });
                }
                assignment[i] = id;
            }
        }
        if let Some(missing) = assignment.iter().position(|&b| b == usize::MAX) {
            return Err(Error::NotFound(format!(
                "index {} not covered by any block",
                missing + 1
            )));
        }
        Ok(Self::from_assignment(&assignment))
    }

    /// The partition into singletons.
    pub fn singletons(domain_size: usize) -> Partition {
        Self::from_assignment(&(0..domain_size).collect::<Vec<_>>())
    }

    /// The one-block partition.
    pub fn single_block(domain_size: usize) -> Partition {
        Self::from_assignment(&vec![0; domain_size])
    }

    pub fn domain_size(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_id_of(&self, index: usize) -> usize {
        self.block_of[index] as usize
    }

    pub fn block(&self, id: usize) -> Vec<usize> {
        self.blocks[id].iter().map(|&i| i as usize).collect()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&i| i as usize).collect())
            .collect()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.block_of[i] == self.block_of[j]
    }

    /// The common refinement: blocks are the non-empty pairwise intersections.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        if self.domain_size() != other.domain_size() {
            return Err(Error::DegreeMismatch {
                left: self.domain_size(),
                right: other.domain_size(),
            });
        }
        let mut key_to_id: HashMap<(u32, u32), usize> = HashMap::new();
        let mut assignment = Vec::with_capacity(self.domain_size());
        for i in 0..self.domain_size() {
            let key = (self.block_of[i], other.block_of[i]);
            let next = key_to_id.len();
            let id = *key_to_id.entry(key).or_insert(next);
            assignment.push(id);
        }
        Ok(Partition::from_assignment(&assignment))
    }

    /// The multiset of block sizes as a weakly decreasing integer partition.
    pub fn shape(&self) -> Shape {
        Shape::new(self.block_sizes())
    }

    /// JSON form `{"domain": n, "blocks": [[...], ...]}` with 1-based indices.
    pub fn to_json_string(&self) -> String {
        #[derive(Serialize)]
        struct Repr {
            domain: usize,
            blocks: Vec<Vec<usize>>,
        }
        let repr = Repr {
            domain: self.domain_size(),
            blocks: self
                .blocks
                .iter()
                .map(|b| b.iter().map(|&i| i as usize + 1).collect())
                .collect(),
        };
        serde_json::to_string(&repr).expect("partition serialization cannot fail")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.blocks())
    }
}

/// A weakly decreasing integer partition: the multiset of block (orbit) sizes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    pub fn new(mut parts: Vec<usize>) -> Shape {
        debug_assert!(parts.iter().all(|&p| p > 0), "shape parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Shape { parts }
    }

    /// Parts in weakly decreasing order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn max_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }
}

/// Shapes print smallest part first, as in "1+11" for the partition {11, 1}.
impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, p) in self.parts.iter().rev().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Shape({self})")
    }
}

/// Result of looking a shape up in a labelled catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LookupOutcome<'a, L> {
    Unique(&'a L),
    Ambiguous(Vec<&'a L>),
    NotFound,
}

/// Exact multiset comparison of a shape against catalog entries.
pub fn shape_lookup<'a, L>(catalog: &'a [(Shape, L)], target: &Shape) -> LookupOutcome<'a, L> {
    let matches: Vec<&'a L> = catalog
        .iter()
        .filter(|(s, _)| s == target)
        .map(|(_, l)| l)
        .collect();
    match matches.len() {
        0 => LookupOutcome::NotFound,
        1 => LookupOutcome::Unique(matches[0]),
        _ => LookupOutcome::Ambiguous(matches),
    }
}
