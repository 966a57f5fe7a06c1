//! Constructors for the standard group families: symmetric, alternating,
//! and the fractional-linear groups PSL(2,p) / PGL(2,p) on the projective
//! line.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::PermutationGroup;

/// Constructor validation is skipped above this degree (the chain would be
/// expensive and the generators are standard).
const VALIDATION_DEGREE_LIMIT: usize = 64;

/// `Sym(n)` from the standard generators `(1,2)` and `(1,...,n)`.
pub fn symmetric_group(n: usize) -> Result<PermutationGroup> {
    if n < 2 {
        return Err(Error::BadDegree(n));
    }
    let transposition = Permutation::parse("(1,2)", n)?;
    let mut gens = vec![transposition];
    if n > 2 {
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        gens.push(Permutation::from_images(cycle)?);
    }
    let group = PermutationGroup::new(n, gens)?;
    if n <= VALIDATION_DEGREE_LIMIT {
        debug_assert_eq!(group.order(), factorial(n));
    }
    Ok(group)
}

/// `Alt(n)` from `(1,2,3)` together with `(3,...,n)` for odd n or
/// `(1,2)(3,...,n)` for even n.
pub fn alternating_group(n: usize) -> Result<PermutationGroup> {
    if n < 3 {
        return Err(Error::BadDegree(n));
    }
    let three_cycle = Permutation::parse("(1,2,3)", n)?;
    let mut gens = vec![three_cycle];
    if n > 3 {
        let mut images: Vec<usize> = (0..n).collect();
        for (i, image) in images.iter_mut().enumerate().skip(2) {
            *image = if i + 1 < n { i + 1 } else { 2 };
        }
        if n.is_multiple_of(2) {
            images.swap(0, 1);
        }
        gens.push(Permutation::from_images(images)?);
    }
    let group = PermutationGroup::new(n, gens)?;
    if n <= VALIDATION_DEGREE_LIMIT {
        debug_assert_eq!(group.order() * BigUint::from(2u32), factorial(n));
        debug_assert!(group.generators().iter().all(Permutation::is_even));
    }
    Ok(group)
}

/// The fractional-linear action on the projective line over `F_p`: the points
/// `0..p-1` are the field elements and point `p` is infinity, so the degree is
/// `p + 1`.
///
/// Generated by `z -> z+1` and `z -> -1/z`, which give PSL(2,p); with
/// `extended`, `z -> lambda*z` for a primitive root `lambda` is added, giving
/// PGL(2,p). Orders are validated exactly.
pub fn projective_linear_group(p: u64, extended: bool) -> Result<PermutationGroup> {
    if p > 61 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p_usize = p as usize;
    let degree = p_usize + 1;
    let infinity = p_usize;

    // z -> z + 1, fixing infinity
    let translation = {
        let mut images: Vec<usize> = (0..degree).collect();
        for (z, image) in images.iter_mut().enumerate().take(p_usize) {
            *image = (z + 1) % p_usize;
        }
        Permutation::from_images(images)?
    };

    // z -> -1/z, swapping 0 and infinity
    let inversion = {
        let mut images: Vec<usize> = (0..degree).collect();
        images[0] = infinity;
        images[infinity] = 0;
        for (z, image) in images.iter_mut().enumerate().take(p_usize).skip(1) {
            *image = (p_usize - mod_inverse(z as u64, p) as usize) % p_usize;
        }
        Permutation::from_images(images)?
    };

    let mut gens = vec![translation, inversion];
    if extended {
        // z -> lambda * z for the least primitive root lambda, fixing 0 and
        // infinity; lambda is a non-square, so this lies outside PSL.
        let lambda = least_primitive_root(p);
        let mut images: Vec<usize> = (0..degree).collect();
        for (z, image) in images.iter_mut().enumerate().take(p_usize) {
            *image = ((z as u64 * lambda) % p) as usize;
        }
        gens.push(Permutation::from_images(images)?);
    }

    let group = PermutationGroup::new(degree, gens)?;
    let psl_order = BigUint::from(p) * BigUint::from(p * p - 1) / BigUint::from(2u32);
    let expected = if extended {
        psl_order * BigUint::from(2u32)
    } else {
        psl_order
    };
    if group.order() != expected {
        return Err(Error::ValidationFailed(format!(
            "projective linear group of degree {degree} has order {} instead of {expected}",
            group.order()
        )));
    }
    Ok(group)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn mod_inverse(x: u64, p: u64) -> u64 {
    debug_assert!(!x.is_multiple_of(p));
    pow_mod(x, p - 2, p)
}

fn least_primitive_root(p: u64) -> u64 {
    let order = p - 1;
    let mut prime_factors = Vec::new();
    let mut rest = order;
    let mut d = 2;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            prime_factors.push(d);
            while rest.is_multiple_of(d) {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        prime_factors.push(rest);
    }
    (2..p)
        .find(|&candidate| {
            prime_factors
                .iter()
                .all(|&q| pow_mod(candidate, order / q, p) != 1)
        })
        .expect("every prime has a primitive root")
}
