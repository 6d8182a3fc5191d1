//! Monic irreducible polynomials in canonical order.
//!
//! Within a degree, monic polynomials are ordered by the integer
//! `c_0 + c_1 q + ... + c_{n-1} q^{n-1}` (the rank), so `t^2+4` comes before
//! `t^2+t`. This is lexicographic order on coefficients read from the top.

use super::factor::is_irreducible;
use super::field::{check_modulus, prime_divisors};
use super::poly::Poly;
use crate::error::Result;

/// Number of monic irreducibles of degree `n` (Gauss's formula).
pub fn irreducible_count(q: u64, n: u32) -> u64 {
    let n64 = n as u64;
    let mut total: i128 = 0;
    for d in 1..=n64 {
        if !n64.is_multiple_of(d) {
            continue;
        }
        let mu = mobius(d);
        if mu != 0 {
            total += mu as i128 * (q as i128).pow((n64 / d) as u32);
        }
    }
    (total / n as i128) as u64
}

fn mobius(n: u64) -> i32 {
    let primes = prime_divisors(n);
    let squarefree = primes.iter().product::<u64>() == n;
    match (squarefree, primes.len() % 2) {
        (false, _) => 0,
        (true, 0) => 1,
        (true, _) => -1,
    }
}

/// Position of a monic polynomial among monic polynomials of its degree.
pub fn monic_rank(f: &Poly) -> u64 {
    let q = f.modulus() as u64;
    let n = f.degree().expect("nonzero");
    f.coeffs()[..n]
        .iter()
        .rev()
        .fold(0u64, |acc, &c| acc * q + c as u64)
}

/// Inverse of [`monic_rank`].
pub fn monic_from_rank(q: u32, n: usize, mut rank: u64) -> Poly {
    let mut coeffs = vec![0u32; n + 1];
    coeffs[n] = 1;
    for c in coeffs.iter_mut().take(n) {
        *c = (rank % q as u64) as u32;
        rank /= q as u64;
    }
    Poly::from_coeffs(q, coeffs)
}

/// All monic polynomials of degree `n` in canonical order.
pub fn monic_polys(q: u32, n: usize) -> impl Iterator<Item = Poly> {
    let total = (q as u64).pow(n as u32);
    (0..total).map(move |r| monic_from_rank(q, n, r))
}

/// Every monic irreducible of degree `1..=max_degree`, by degree then rank.
pub fn enumerate_irreducibles(q: u32, max_degree: usize) -> Result<impl Iterator<Item = Poly>> {
    check_modulus(q)?;
    Ok((1..=max_degree).flat_map(move |n| monic_polys(q, n).filter(is_irreducible)))
}

/// First monic irreducible of degree `n` in canonical order.
pub fn first_irreducible(q: u32, n: usize) -> Poly {
    monic_polys(q, n)
        .find(is_irreducible)
        .expect("irreducibles exist in every degree")
}
