#![allow(dead_code)] // each test target uses a different subset of oracles

//! Independent oracles shared by the integration suites. Everything here is
//! brute force on purpose: these functions must not share code paths with the
//! implementations they check.

use orbitfold::{Permutation, PermutationGroup, SimpleGraph};

/// Every element of the group by BFS closure over generator products.
/// Panics past the cap; callers only use this on groups of order <= 10^5.
pub fn enumerate_elements(group: &PermutationGroup, cap: usize) -> Vec<Permutation> {
    let mut seen = std::collections::HashSet::new();
    let identity = Permutation::identity(group.degree());
    seen.insert(identity.clone());
    let mut queue = vec![identity];
    let mut head = 0;
    while head < queue.len() {
        let current = queue[head].clone();
        head += 1;
        for g in group.generators() {
            let next = current.compose(g).unwrap();
            if seen.insert(next.clone()) {
                queue.push(next);
                assert!(queue.len() <= cap, "element enumeration exceeded cap {cap}");
            }
        }
    }
    queue
}

/// Counts adjacency-preserving vertex permutations by full enumeration
/// (Heap's algorithm); n <= 8 keeps this under 8! checks.
pub fn count_automorphisms_brute(graph: &SimpleGraph) -> u64 {
    let n = graph.vertex_count();
    assert!(n <= 8, "brute-force automorphism count is for n <= 8");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut stack = vec![0usize; n];
    let mut count = preserves(graph, &perm) as u64;
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            count += preserves(graph, &perm) as u64;
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    count
}

fn preserves(graph: &SimpleGraph, perm: &[usize]) -> bool {
    let n = graph.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            if graph.has_edge(u, v) != graph.has_edge(perm[u], perm[v]) {
                return false;
            }
        }
    }
    true
}

/// Characteristic polynomial of the adjacency matrix by the Leibniz expansion
/// of det(xI - A) over all permutations; exponentially slow, n <= 7 only.
/// Coefficients constant term first.
pub fn char_poly_leibniz(graph: &SimpleGraph) -> Vec<i64> {
    let n = graph.vertex_count();
    assert!(n <= 7, "Leibniz char poly oracle is for n <= 7");
    // entry (i, j) of xI - A as a degree-1 polynomial [constant, linear]
    let entry = |i: usize, j: usize| -> [i64; 2] {
        if i == j {
            [0, 1]
        } else if graph.has_edge(i, j) {
            [-1, 0]
        } else {
            [0, 0]
        }
    };
    let mut total = vec![0i64; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    let accumulate = |perm: &[usize], sign: i64, total: &mut [i64]| {
        let mut product = vec![0i64; n + 1];
        product[0] = 1;
        let mut product_degree = 0usize;
        for (i, &pi) in perm.iter().enumerate() {
            let e = entry(i, pi);
            let mut next = vec![0i64; n + 1];
            for d in 0..=product_degree {
                if product[d] == 0 {
                    continue;
                }
                next[d] += product[d] * e[0];
                next[d + 1] += product[d] * e[1];
            }
            product = next;
            product_degree += 1;
        }
        for d in 0..=n {
            total[d] += sign * product[d];
        }
    };
    // iterate permutations with parity tracking (Heap's algorithm flips
    // parity on each swap)
    let mut sign = 1i64;
    accumulate(&perm, sign, &mut total);
    let mut stack = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if stack[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(stack[i], i);
            }
            sign = -sign;
            accumulate(&perm, sign, &mut total);
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    total
}

/// Strong-regularity by a plain triple loop over adjacency lists: returns
/// (valency, lambda, mu) if the graph is strongly regular.
pub fn srg_brute(graph: &SimpleGraph) -> Option<(usize, usize, usize)> {
    let n = graph.vertex_count();
    if n == 0 {
        return None;
    }
    let neighbours: Vec<Vec<usize>> = (0..n)
        .map(|u| (0..n).filter(|&v| graph.has_edge(u, v)).collect())
        .collect();
    let k = neighbours[0].len();
    if neighbours.iter().any(|nb| nb.len() != k) {
        return None;
    }
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let common = neighbours[u]
                .iter()
                .filter(|&&w| w != v && neighbours[v].contains(&w))
                .count();
            let slot = if graph.has_edge(u, v) { &mut lambda } else { &mut mu };
            match slot {
                Some(x) if *x != common => return None,
                Some(_) => {}
                None => *slot = Some(common),
            }
        }
    }
    Some((k, lambda.unwrap_or(0), mu.unwrap_or(0)))
}

/// Deterministic xorshift for seeded random objects in tests.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed | 1)
    }

    pub fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn permutation(&mut self, degree: usize) -> Permutation {
        let mut images: Vec<usize> = (0..degree).collect();
        for i in (1..degree).rev() {
            let j = (self.next() % (i as u64 + 1)) as usize;
            images.swap(i, j);
        }
        Permutation::from_images(images).unwrap()
    }

    pub fn graph(&mut self, n: usize, density_percent: u64) -> SimpleGraph {
        let mut g = SimpleGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if self.next() % 100 < density_percent {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}
