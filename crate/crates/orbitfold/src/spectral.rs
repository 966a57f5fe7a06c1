//! Exact spectra of clique-unions and their inversion, characteristic
//! polynomials over the integers, spectral-determination scans, automorphism
//! orders, and the chromatic/clique/independence invariants.
//!
//! Everything here is exact integer arithmetic; every eigenvalue in scope is
//! an integer, so no floating point appears anywhere in this module.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::iog::{recognize_clique_union, SimpleGraph};
use crate::partition::Shape;

/// An eigenvalue/multiplicity multiset, sorted by eigenvalue descending.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SpectrumSummary {
    pairs: Vec<(i64, usize)>,
}

impl SpectrumSummary {
    pub fn new(mut pairs: Vec<(i64, usize)>) -> SpectrumSummary {
        pairs.retain(|&(_, m)| m > 0);
        pairs.sort_by_key(|&(e, _)| std::cmp::Reverse(e));
        // merge duplicates
        let mut merged: Vec<(i64, usize)> = Vec::with_capacity(pairs.len());
        for (e, m) in pairs {
            match merged.last_mut() {
                Some(last) if last.0 == e => last.1 += m,
                _ => merged.push((e, m)),
            }
        }
        SpectrumSummary { pairs: merged }
    }

    /// Pairs `(eigenvalue, multiplicity)`, eigenvalue descending.
    pub fn pairs(&self) -> &[(i64, usize)] {
        &self.pairs
    }

    /// Total multiplicity = vertex count.
    pub fn total_multiplicity(&self) -> usize {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    pub fn multiplicity_of(&self, eigenvalue: i64) -> usize {
        self.pairs
            .iter()
            .find(|&&(e, _)| e == eigenvalue)
            .map(|&(_, m)| m)
            .unwrap_or(0)
    }

    /// JSON form `{"pairs": [[eig, mult], ...]}`.
    pub fn to_json_string(&self) -> String {
        #[derive(Serialize)]
        struct Repr<'a> {
            pairs: &'a [(i64, usize)],
        }
        serde_json::to_string(&Repr { pairs: &self.pairs })
            .expect("spectrum serialization cannot fail")
    }
}

impl fmt::Display for SpectrumSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (e, m)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if *e < 0 {
                write!(f, "({e})^{m}")?;
            } else {
                write!(f, "{e}^{m}")?;
            }
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SpectrumSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spectrum{self}")
    }
}

/// Spectrum of the clique-union with the given component sizes: each part
/// `s >= 2` contributes `s - 1` once and `-1` with multiplicity `s - 1`;
/// singleton parts contribute `0`.
pub fn spectrum_from_shape(shape: &Shape) -> SpectrumSummary {
    let mut pairs: Vec<(i64, usize)> = Vec::new();
    let mut minus_one = 0usize;
    let mut zeros = 0usize;
    for &part in shape.parts() {
        if part >= 2 {
            pairs.push((part as i64 - 1, 1));
            minus_one += part - 1;
        } else {
            zeros += 1;
        }
    }
    if zeros > 0 {
        pairs.push((0, zeros));
    }
    if minus_one > 0 {
        pairs.push((-1, minus_one));
    }
    SpectrumSummary::new(pairs)
}

/// Inverts [`spectrum_from_shape`]: recovers the component-size multiset, or
/// `None` when the spectrum is not that of any disjoint union of cliques.
///
/// A valid spectrum has positive integer eigenvalues (each positive value `v`
/// with multiplicity `m` yields `m` parts of size `v + 1`), an optional `0`
/// (one singleton part per unit of multiplicity), and `-1` with multiplicity
/// forced to the sum of `v * m` over the positive pairs.
pub fn shape_from_spectrum(spectrum: &SpectrumSummary) -> Option<Shape> {
    let mut parts: Vec<usize> = Vec::new();
    let mut forced_minus_one = 0usize;
    let mut seen_minus_one = 0usize;
    for &(e, m) in spectrum.pairs() {
        if e > 0 {
            for _ in 0..m {
                parts.push(e as usize + 1);
            }
            forced_minus_one += e as usize * m;
        } else if e == 0 {
            parts.extend(std::iter::repeat_n(1, m));
        } else if e == -1 {
            seen_minus_one = m;
        } else {
            return None;
        }
    }
    if seen_minus_one != forced_minus_one {
        return None;
    }
    if parts.is_empty() {
        return None;
    }
    Some(Shape::new(parts))
}

/// Characteristic polynomial of the adjacency matrix in exact integer
/// arithmetic (Faddeev-LeVerrier; all divisions are exact). Coefficients are
/// returned constant term first, leading coefficient 1.
pub fn char_poly_exact(g: &SimpleGraph) -> Vec<BigInt> {
    char_poly_generic::<BigInt>(g)
}

/// Same computation over `i64`, for hot loops on small graphs. Coefficients of
/// adjacency characteristic polynomials on up to ~12 vertices fit easily.
pub fn char_poly_i64(g: &SimpleGraph) -> Vec<i64> {
    char_poly_generic::<i64>(g)
}

trait PolyInt:
    Clone
    + Zero
    + One
    + std::ops::AddAssign
    + std::ops::Sub<Output = Self>
    + std::ops::Div<Output = Self>
    + std::ops::Neg<Output = Self>
    + std::ops::Mul<Output = Self>
{
    fn from_usize(x: usize) -> Self;
}

impl PolyInt for i64 {
    fn from_usize(x: usize) -> Self {
        x as i64
    }
}

impl PolyInt for BigInt {
    fn from_usize(x: usize) -> Self {
        BigInt::from(x)
    }
}

/// Faddeev-LeVerrier: M_0 = 0, c_n = 1, and for k = 1..n,
/// M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
fn char_poly_generic<T: PolyInt>(g: &SimpleGraph) -> Vec<T> {
    let n = g.vertex_count();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    if n == 0 {
        return coeffs;
    }
    // m holds M_{k-1}
    let mut m = vec![T::zero(); n * n];
    for k in 1..=n {
        // am = A * m + c_{n-k+1} * I   (i.e. M_k)
        let mut mk = vec![T::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                if !g.has_edge(i, l) {
                    continue;
                }
                for j in 0..n {
                    let add = m[l * n + j].clone();
                    if !add.is_zero() {
                        mk[i * n + j] += add;
                    }
                }
            }
        }
        let c_prev = coeffs[n - k + 1].clone();
        for i in 0..n {
            mk[i * n + i] += c_prev.clone();
        }
        // c_{n-k} = -tr(A * M_k) / k
        let mut trace = T::zero();
        for i in 0..n {
            for l in 0..n {
                if g.has_edge(i, l) {
                    trace += mk[l * n + i].clone();
                }
            }
        }
        coeffs[n - k] = trace.neg() / T::from_usize(k);
        m = mk;
    }
    coeffs
}

/// The characteristic polynomial a clique-union of the given shape must have:
/// `prod (x - (s_i - 1)) * (x + 1)^{m_minus_one} * x^{m_zero}`.
pub fn char_poly_of_shape(shape: &Shape) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for &part in shape.parts() {
        if part >= 2 {
            poly = poly_mul_linear(&poly, -BigInt::from(part as i64 - 1));
            for _ in 0..part - 1 {
                poly = poly_mul_linear(&poly, BigInt::one());
            }
        } else {
            poly = poly_mul_linear(&poly, BigInt::zero());
        }
    }
    poly
}

/// Multiplies a constant-first coefficient vector by `(x + c)`.
fn poly_mul_linear(poly: &[BigInt], c: BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); poly.len() + 1];
    for (i, coeff) in poly.iter().enumerate() {
        out[i + 1] += coeff;
        out[i] += coeff * &c;
    }
    out
}

/// Report of one exhaustive spectral-determination scan level.
#[derive(Debug, Clone, Serialize)]
pub struct DsScanRow {
    pub n: usize,
    pub graphs_checked: u64,
    pub clique_unions: u64,
    pub counterexamples: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DsScanReport {
    pub max_n: usize,
    pub rows: Vec<DsScanRow>,
    pub counterexample_count: usize,
}

impl DsScanReport {
    pub fn passed(&self) -> bool {
        self.counterexample_count == 0
    }
}

/// Enumerates every labelled graph on `1..=max_n` vertices and verifies that
/// the characteristic polynomial separates clique-unions from everything
/// else: a clique-union's polynomial must match its shape's polynomial, and no
/// other graph may share a polynomial with any clique-union shape.
///
/// The edge-code space may be split across `workers` threads; partial results
/// merge in range order, so the report is identical for any worker count.
pub fn ds_scan(max_n: usize, workers: usize) -> DsScanReport {
    assert!(max_n <= 7, "ds_scan enumerates 2^(n choose 2) labelled graphs");
    let workers = workers.max(1);
    let mut rows = Vec::new();
    for n in 1..=max_n {
        // the finitely many clique-union polynomials on n vertices, one per
        // integer partition of n; distinctness is part of the claim
        let mut shape_polys: HashMap<Vec<i64>, Shape> = HashMap::new();
        for shape in integer_partitions(n) {
            let poly: Vec<i64> = char_poly_of_shape(&shape)
                .iter()
                .map(|c| i64::try_from(c).expect("small coefficients"))
                .collect();
            let previous = shape_polys.insert(poly, shape.clone());
            assert!(
                previous.is_none(),
                "two shapes on {n} vertices share a polynomial"
            );
        }

        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let total_codes = 1u64 << edges.len();

        let scan_range = |from: u64, to: u64| -> (u64, u64, Vec<String>) {
            let mut clique_unions = 0u64;
            let mut counterexamples = Vec::new();
            for code in from..to {
                let mut g = SimpleGraph::empty(n);
                for (i, &(u, v)) in edges.iter().enumerate() {
                    if code >> i & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                let poly = char_poly_i64(&g);
                match recognize_clique_union(&g) {
                    Some(shape) => {
                        clique_unions += 1;
                        if shape_polys.get(&poly) != Some(&shape) {
                            counterexamples.push(format!(
                                "n={n} code={code}: clique-union {shape} has unexpected polynomial"
                            ));
                        }
                    }
                    None => {
                        if let Some(shape) = shape_polys.get(&poly) {
                            counterexamples.push(format!(
                                "n={n} code={code}: cospectral with clique-union {shape} but not isomorphic"
                            ));
                        }
                    }
                }
            }
            (to - from, clique_unions, counterexamples)
        };

        let chunk = total_codes.div_ceil(workers as u64).max(1);
        let ranges: Vec<(u64, u64)> = (0..workers as u64)
            .map(|w| (w * chunk, ((w + 1) * chunk).min(total_codes)))
            .filter(|(a, b)| a < b)
            .collect();
        let partials: Vec<(u64, u64, Vec<String>)> = if ranges.len() == 1 {
            vec![scan_range(ranges[0].0, ranges[0].1)]
        } else {
            std::thread::scope(|scope| {
                let handles: Vec<_> = ranges
                    .iter()
                    .map(|&(a, b)| scope.spawn(move || scan_range(a, b)))
                    .collect();
                handles.into_iter().map(|h| h.join().expect("scan worker")).collect()
            })
        };

        let mut row = DsScanRow {
            n,
            graphs_checked: 0,
            clique_unions: 0,
            counterexamples: Vec::new(),
        };
        for (checked, unions, mut examples) in partials {
            row.graphs_checked += checked;
            row.clique_unions += unions;
            row.counterexamples.append(&mut examples);
        }
        rows.push(row);
    }
    let counterexample_count = rows.iter().map(|r| r.counterexamples.len()).sum();
    DsScanReport {
        max_n,
        rows,
        counterexample_count,
    }
}

/// All integer partitions of `n`, each as a Shape, in a fixed order.
pub fn integer_partitions(n: usize) -> Vec<Shape> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn recurse(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if remaining == 0 {
            out.push(Shape::new(current.clone()));
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            current.push(part);
            recurse(remaining - part, part, current, out);
            current.pop();
        }
    }
    recurse(n, n, &mut current, &mut out);
    out
}

/// Automorphism-group description of a clique-union: per distinct component
/// size `s` with multiplicity `m`, a wreath factor of order `(s!)^m * m!`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutDescription {
    /// `(component_size, multiplicity)` pairs, size descending.
    pub factors: Vec<(usize, usize)>,
    /// Total order as a decimal string (exact).
    pub order: String,
}

impl AutDescription {
    pub fn order_big(&self) -> BigUint {
        self.order.parse().expect("order string is decimal")
    }
}

/// `Aut` of the clique-union with the given shape.
pub fn aut_order(shape: &Shape) -> AutDescription {
    let mut factors: Vec<(usize, usize)> = Vec::new();
    for &part in shape.parts() {
        match factors.last_mut() {
            Some(last) if last.0 == part => last.1 += 1,
            _ => factors.push((part, 1)),
        }
    }
    let mut order = BigUint::one();
    for &(size, mult) in &factors {
        order *= factorial(size).pow(mult as u32) * factorial(mult);
    }
    AutDescription {
        factors,
        order: order.to_string(),
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Chromatic number, clique number, and independence number of a clique-union.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvariantTriple {
    pub chi: usize,
    pub omega: usize,
    pub alpha: usize,
}

/// For a disjoint union of cliques: chi = omega = max part, alpha = number of
/// parts.
pub fn invariants(shape: &Shape) -> InvariantTriple {
    InvariantTriple {
        chi: shape.max_part(),
        omega: shape.max_part(),
        alpha: shape.part_count(),
    }
}
