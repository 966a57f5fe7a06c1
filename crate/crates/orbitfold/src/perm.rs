//! Permutations of `{0, ..., n-1}` and subsets of the domain.
//!
//! Points are 0-based everywhere in the API; all text I/O (cycle notation,
//! set display) is 1-based, matching the usual group-theory conventions.
//! Composition is left-to-right: `compose(p, q)` applies `p` first, so the
//! action satisfies `a^(pq) = (a^p)^q`.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, ..., n-1}`, stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity permutation of the given degree.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from an image table, validating that it is a
    /// bijection of `{0, ..., n-1}`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::BadDegree(0));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::OutOfRange {
                    point: x + 1,
                    degree: n,
                });
            }
            if seen[x] {
                return Err(Error::RepeatedPoint { point: x + 1 });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation such as `"(1,2,3)(4,5)"` or `"id"`.
    ///
    /// Entries are 1-based and must lie in `1..=degree`; points not mentioned
    /// are fixed. Whitespace is ignored.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::BadDegree(0));
        }
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "id" {
            return Ok(Self::identity(degree));
        }
        if compact.is_empty() {
            return Err(Error::Malformed("empty permutation text".into()));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        let mut chars = compact.chars().peekable();
        while let Some(c) = chars.next() {
            if c != '(' {
                return Err(Error::Malformed(format!("expected '(' but found '{c}'")));
            }
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                if digits.is_empty() {
                    return Err(Error::Malformed("expected a point number".into()));
                }
                let value: usize = digits
                    .parse()
                    .map_err(|_| Error::Malformed(format!("bad integer '{digits}'")))?;
                if value < 1 || value > degree {
                    return Err(Error::OutOfRange {
                        point: value,
                        degree,
                    });
                }
                let point = value - 1;
                if seen[point] {
                    return Err(Error::RepeatedPoint { point: value });
                }
                seen[point] = true;
                cycle.push(point);
                match chars.next() {
                    Some(',') => continue,
                    Some(')') => break,
                    Some(other) => {
                        return Err(Error::Malformed(format!(
                            "expected ',' or ')' but found '{other}'"
                        )))
                    }
                    None => return Err(Error::Malformed("unbalanced parentheses".into())),
                }
            }
            for i in 0..cycle.len() {
                images[cycle[i]] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a point under this permutation.
    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Left-to-right composition: the result applies `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Unchecked left-to-right composition for internal use.
    #[inline]
    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Number of fixed points, i.e. the permutation-character value.
    pub fn fixed_point_count(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &x)| i == x).count()
    }

    /// True when the permutation is even (a product of an even number of
    /// transpositions).
    pub fn is_even(&self) -> bool {
        let mut visited = vec![false; self.images.len()];
        let mut transpositions = 0usize;
        for start in 0..self.images.len() {
            if visited[start] {
                continue;
            }
            let mut len = 0usize;
            let mut p = start;
            while !visited[p] {
                visited[p] = true;
                p = self.images[p];
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions.is_multiple_of(2)
    }

    /// Applies the permutation to a set of points: `A^g = { a^g : a in A }`.
    pub fn apply_set(&self, set: &PointSet) -> Result<PointSet> {
        if self.degree() != set.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: set.degree(),
            });
        }
        Ok(self.map_set(set))
    }

    #[inline]
    pub(crate) fn map_set(&self, set: &PointSet) -> PointSet {
        debug_assert_eq!(self.degree(), set.degree());
        match &set.repr {
            Repr::Mask(mask) => {
                let mut out = 0u64;
                let mut m = *mask;
                while m != 0 {
                    let p = m.trailing_zeros() as usize;
                    out |= 1u64 << self.images[p];
                    m &= m - 1;
                }
                PointSet {
                    degree: set.degree,
                    repr: Repr::Mask(out),
                }
            }
            Repr::Sorted(points) => {
                let mut mapped: Vec<usize> = points.iter().map(|&p| self.images[p]).collect();
                mapped.sort_unstable();
                PointSet {
                    degree: set.degree,
                    repr: Repr::Sorted(mapped),
                }
            }
        }
    }

    /// Disjoint cycles, each rotated to start at its smallest point and
    /// ordered by that point. Fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut visited = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if visited[start] || self.images[start] == start {
                visited[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !visited[p] {
                visited[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// A subset of `{0, ..., n-1}`, kept as a 64-bit mask for degrees up to 64
/// and as a sorted vector beyond that.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    degree: usize,
    repr: Repr,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Mask(u64),
    Sorted(Vec<usize>),
}

impl PointSet {
    pub fn empty(degree: usize) -> Self {
        PointSet {
            degree,
            repr: if degree <= 64 {
                Repr::Mask(0)
            } else {
                Repr::Sorted(Vec::new())
            },
        }
    }

    pub fn full(degree: usize) -> Self {
        Self::new(degree, &(0..degree).collect::<Vec<_>>()).expect("full set is in range")
    }

    /// Builds a set from arbitrary points, deduplicating and sorting.
    pub fn new(degree: usize, points: &[usize]) -> Result<Self> {
        for &p in points {
            if p >= degree {
                return Err(Error::OutOfRange {
                    point: p + 1,
                    degree,
                });
            }
        }
        if degree <= 64 {
            let mut mask = 0u64;
            for &p in points {
                mask |= 1u64 << p;
            }
            Ok(PointSet {
                degree,
                repr: Repr::Mask(mask),
            })
        } else {
            let mut sorted = points.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            Ok(PointSet {
                degree,
                repr: Repr::Sorted(sorted),
            })
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        match &self.repr {
            Repr::Mask(m) => m.count_ones() as usize,
            Repr::Sorted(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, point: usize) -> bool {
        match &self.repr {
            Repr::Mask(m) => point < 64 && (m >> point) & 1 == 1,
            Repr::Sorted(v) => v.binary_search(&point).is_ok(),
        }
    }

    /// Members in increasing order.
    pub fn members(&self) -> Vec<usize> {
        match &self.repr {
            Repr::Mask(m) => {
                let mut out = Vec::with_capacity(m.count_ones() as usize);
                let mut mask = *m;
                while mask != 0 {
                    out.push(mask.trailing_zeros() as usize);
                    mask &= mask - 1;
                }
                out
            }
            Repr::Sorted(v) => v.clone(),
        }
    }

    /// The 64-bit characteristic mask; only available for degree <= 64.
    pub fn mask(&self) -> Option<u64> {
        match &self.repr {
            Repr::Mask(m) => Some(*m),
            Repr::Sorted(_) => None,
        }
    }

    pub fn complement(&self) -> PointSet {
        match &self.repr {
            Repr::Mask(m) => {
                let all = if self.degree == 64 {
                    u64::MAX
                } else {
                    (1u64 << self.degree) - 1
                };
                PointSet {
                    degree: self.degree,
                    repr: Repr::Mask(all & !m),
                }
            }
            Repr::Sorted(v) => {
                let inside: std::collections::HashSet<usize> = v.iter().copied().collect();
                let rest: Vec<usize> = (0..self.degree).filter(|p| !inside.contains(p)).collect();
                PointSet {
                    degree: self.degree,
                    repr: Repr::Sorted(rest),
                }
            }
        }
    }

    fn check_degree(&self, other: &PointSet) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn union(&self, other: &PointSet) -> Result<PointSet> {
        self.check_degree(other)?;
        self.merge(other, |a, b| a | b, |a, b| a || b)
    }

    pub fn intersection(&self, other: &PointSet) -> Result<PointSet> {
        self.check_degree(other)?;
        self.merge(other, |a, b| a & b, |a, b| a && b)
    }

    pub fn symmetric_difference(&self, other: &PointSet) -> Result<PointSet> {
        self.check_degree(other)?;
        self.merge(other, |a, b| a ^ b, |a, b| a != b)
    }

    fn merge(
        &self,
        other: &PointSet,
        mask_op: impl Fn(u64, u64) -> u64,
        point_op: impl Fn(bool, bool) -> bool,
    ) -> Result<PointSet> {
        match (&self.repr, &other.repr) {
            (Repr::Mask(a), Repr::Mask(b)) => Ok(PointSet {
                degree: self.degree,
                repr: Repr::Mask(mask_op(*a, *b)),
            }),
            _ => {
                let points: Vec<usize> = (0..self.degree)
                    .filter(|&p| point_op(self.contains(p), other.contains(p)))
                    .collect();
                Ok(PointSet {
                    degree: self.degree,
                    repr: Repr::Sorted(points),
                })
            }
        }
    }

    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        self.degree == other.degree && self.members().iter().all(|&p| other.contains(p))
    }
}

/// Colexicographic order: `A < B` iff the largest point where they differ
/// belongs to `B`. For masks this is plain numeric order.
impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree.cmp(&other.degree).then_with(|| match (&self.repr, &other.repr) {
            (Repr::Mask(a), Repr::Mask(b)) => a.cmp(b),
            _ => {
                let a = self.members();
                let b = other.members();
                let mut i = a.len();
                let mut j = b.len();
                loop {
                    match (i, j) {
                        (0, 0) => return std::cmp::Ordering::Equal,
                        (0, _) => return std::cmp::Ordering::Less,
                        (_, 0) => return std::cmp::Ordering::Greater,
                        _ => {
                            let x = a[i - 1];
                            let y = b[j - 1];
                            if x != y {
                                return x.cmp(&y);
                            }
                            i -= 1;
                            j -= 1;
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.members().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(text: &str, degree: usize) -> Permutation {
        Permutation::parse(text, degree).unwrap()
    }

    #[test]
    fn parse_three_cycle() {
        assert_eq!(perm("(1,2,3)", 3).images(), &[1, 2, 0]);
    }

    #[test]
    fn parse_identity() {
        assert_eq!(perm("id", 5), Permutation::identity(5));
    }

    #[test]
    fn parse_ignores_whitespace() {
        assert_eq!(perm(" (1, 2) (3,4) ", 4), perm("(1,2)(3,4)", 4));
    }

    #[test]
    fn parse_repeated_point_across_cycles() {
        assert_eq!(
            Permutation::parse("(1,2)(2,3)", 3),
            Err(Error::RepeatedPoint { point: 2 })
        );
    }

    #[test]
    fn parse_out_of_range() {
        assert_eq!(
            Permutation::parse("(1,4)", 3),
            Err(Error::OutOfRange { point: 4, degree: 3 })
        );
        assert!(matches!(Permutation::parse("(0,1)", 3), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn parse_malformed() {
        assert!(matches!(Permutation::parse("(1,2", 3), Err(Error::Malformed(_))));
        assert!(matches!(Permutation::parse("1,2)", 3), Err(Error::Malformed(_))));
        assert!(matches!(Permutation::parse("", 3), Err(Error::Malformed(_))));
        assert!(matches!(Permutation::parse("(1,,2)", 3), Err(Error::Malformed(_))));
    }

    #[test]
    fn compose_is_left_to_right() {
        // (1,2) then (2,3) maps 1->2->3, giving the cycle (1,3,2).
        let p = perm("(1,2)", 3);
        let q = perm("(2,3)", 3);
        let r = p.compose(&q).unwrap();
        assert_eq!(r.images(), &[2, 0, 1]);
        assert_eq!(r, perm("(1,3,2)", 3));
    }

    #[test]
    fn compose_laws() {
        let p = perm("(1,4,2)(3,5)", 5);
        assert_eq!(p.compose(&Permutation::identity(5)).unwrap(), p);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert_eq!(
            p.compose(&Permutation::identity(4)),
            Err(Error::DegreeMismatch { left: 5, right: 4 })
        );
    }

    #[test]
    fn sym3_multiplication_table_matches_brute_force() {
        // All six elements of Sym(3), closed under composition; checks the
        // table entry by entry against index chasing on image arrays.
        let elements: Vec<Permutation> = [
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ]
        .into_iter()
        .map(|v| Permutation::from_images(v).unwrap())
        .collect();
        for p in &elements {
            for q in &elements {
                let r = p.compose(q).unwrap();
                let expected: Vec<usize> = (0..3).map(|i| q.image(p.image(i))).collect();
                assert_eq!(r.images(), &expected[..]);
                assert!(elements.contains(&r));
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(perm("(1,2,3)", 3).inverse(), perm("(1,3,2)", 3));
        assert!(Permutation::identity(4).inverse().is_identity());
        let p = perm("(1,5,9,2)(3,11)(4,7,12)", 12);
        assert_eq!(p.inverse().inverse(), p);
    }

    #[test]
    fn fixed_points() {
        assert_eq!(Permutation::identity(12).fixed_point_count(), 12);
        assert_eq!(perm("(1,2,3)", 5).fixed_point_count(), 2);
        assert_eq!(perm("(1,2)(3,4)(5,6)", 6).fixed_point_count(), 0);
    }

    #[test]
    fn parity() {
        assert!(Permutation::identity(3).is_even());
        assert!(!perm("(1,2)", 4).is_even());
        assert!(perm("(1,2,3)", 4).is_even());
        assert!(perm("(1,2)(3,4)", 4).is_even());
    }

    #[test]
    fn apply_set_examples() {
        let a = PointSet::new(3, &[0, 1]).unwrap();
        assert_eq!(perm("(1,2,3)", 3).apply_set(&a).unwrap(), PointSet::new(3, &[1, 2]).unwrap());
        assert_eq!(Permutation::identity(3).apply_set(&a).unwrap(), a);
        let b = PointSet::new(4, &[0, 2]).unwrap();
        assert_eq!(
            perm("(1,2)(3,4)", 4).apply_set(&b).unwrap(),
            PointSet::new(4, &[1, 3]).unwrap()
        );
        assert!(matches!(
            perm("(1,2)", 3).apply_set(&b),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn display_round_trip() {
        for text in ["id", "(1,2)", "(1,3,2)", "(1,2)(3,5,4)"] {
            let p = perm(text, 5);
            assert_eq!(p.to_string(), text);
            assert_eq!(Permutation::parse(&p.to_string(), 5).unwrap(), p);
        }
    }

    #[test]
    fn point_set_ops() {
        let a = PointSet::new(10, &[0, 2, 4]).unwrap();
        let b = PointSet::new(10, &[2, 3]).unwrap();
        assert_eq!(a.union(&b).unwrap().members(), vec![0, 2, 3, 4]);
        assert_eq!(a.intersection(&b).unwrap().members(), vec![2]);
        assert_eq!(a.symmetric_difference(&b).unwrap().members(), vec![0, 3, 4]);
        assert_eq!(a.complement().len(), 7);
        assert!(PointSet::new(10, &[2]).unwrap().is_subset_of(&a));
        assert_eq!(a.to_string(), "{1,3,5}");
    }

    #[test]
    fn point_set_large_degree_fallback() {
        let a = PointSet::new(100, &[99, 0, 50]).unwrap();
        assert_eq!(a.members(), vec![0, 50, 99]);
        assert!(a.mask().is_none());
        assert_eq!(a.complement().len(), 97);
        let p = Permutation::from_images((0..100).map(|i| (i + 1) % 100).collect()).unwrap();
        assert_eq!(p.apply_set(&a).unwrap().members(), vec![0, 1, 51]);
    }

    #[test]
    fn colex_order_matches_mask_order() {
        // {1,2} < {3} and {1,3} < {2,3} in colex.
        let s01 = PointSet::new(5, &[0, 1]).unwrap();
        let s2 = PointSet::new(5, &[2]).unwrap();
        let s02 = PointSet::new(5, &[0, 2]).unwrap();
        let s12 = PointSet::new(5, &[1, 2]).unwrap();
        assert!(s01 < s2);
        assert!(s02 < s12);
        let b01 = PointSet::new(100, &[0, 1]).unwrap();
        let b2 = PointSet::new(100, &[2]).unwrap();
        assert!(b01 < b2);
    }

    proptest::proptest! {
        #[test]
        fn composition_associative(seed in proptest::collection::vec(proptest::num::u64::ANY, 3), deg in 5usize..25) {
            let ps: Vec<Permutation> = seed.iter().map(|&s| random_perm(deg, s)).collect();
            let left = ps[0].mul(&ps[1]).mul(&ps[2]);
            let right = ps[0].mul(&ps[1].mul(&ps[2]));
            proptest::prop_assert_eq!(left, right);
        }

        #[test]
        fn apply_set_is_an_action(s1 in proptest::num::u64::ANY, s2 in proptest::num::u64::ANY, deg in 2usize..25, picks in proptest::collection::vec(proptest::num::u64::ANY, 1..6)) {
            let p = random_perm(deg, s1);
            let q = random_perm(deg, s2);
            let points: Vec<usize> = picks.iter().map(|&x| (x as usize) % deg).collect();
            let a = PointSet::new(deg, &points).unwrap();
            let via_compose = p.mul(&q).map_set(&a);
            let via_steps = q.map_set(&p.map_set(&a));
            proptest::prop_assert_eq!(via_compose.clone(), via_steps);
            proptest::prop_assert_eq!(via_compose.len(), a.len());
        }
    }

    /// Deterministic pseudo-random permutation from a seed (Fisher-Yates with
    /// a tiny xorshift); test helper only.
    fn random_perm(degree: usize, seed: u64) -> Permutation {
        let mut state = seed | 1;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut images: Vec<usize> = (0..degree).collect();
        for i in (1..degree).rev() {
            let j = (next() % (i as u64 + 1)) as usize;
            images.swap(i, j);
        }
        Permutation::from_images(images).unwrap()
    }
}
