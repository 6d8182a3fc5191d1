//! Factorization over F_q: squarefree decomposition, distinct-degree
//! splitting, then Cantor-Zassenhaus equal-degree splitting.

use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::FieldElem;
use super::poly::{poly_gcd, Poly};
use crate::error::{domain, Result};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

/// `unit * prod(p_i ^ m_i)` with monic irreducible, pairwise distinct `p_i`
/// sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElem,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        let q = self.unit.modulus();
        self.factors
            .iter()
            .fold(Poly::constant(q, self.unit.value() as i64), |acc, (p, m)| {
                &acc * &p.pow(*m as u64)
            })
    }

    pub fn multiplicity(&self, p: &Poly) -> u32 {
        self.factors
            .iter()
            .find(|(f, _)| f == p)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

static SEED: AtomicU64 = AtomicU64::new(DEFAULT_SEED);

/// Replaces the seed used by [`factor`].
pub fn set_factor_seed(seed: u64) {
    SEED.store(seed, Ordering::Relaxed);
}

pub fn factor(f: &Poly) -> Result<Factorization> {
    factor_seeded(f, SEED.load(Ordering::Relaxed))
}

/// Factors `f`; the output does not depend on `seed`.
pub fn factor_seeded(f: &Poly, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return domain("cannot factor the zero polynomial");
    }
    let q = f.modulus();
    let unit = f.sgn();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&f.monic())? {
        for (block, d) in distinct_degree(&part)? {
            for p in equal_degree(&block, d, &mut rng)? {
                factors.push((p, mult));
            }
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    // Parts of the squarefree decomposition are coprime, but merge anyway.
    let mut merged: Vec<(Poly, u32)> = Vec::with_capacity(factors.len());
    for (p, m) in factors {
        match merged.last_mut() {
            Some((last, lm)) if *last == p => *lm += m,
            _ => merged.push((p, m)),
        }
    }
    debug_assert_eq!(unit.modulus(), q);
    Ok(Factorization {
        unit,
        factors: merged,
    })
}

/// No irreducible factor occurs with multiplicity 3 or more.
pub fn is_cube_free(f: &Poly) -> Result<bool> {
    if f.is_zero() {
        return domain("cube-freeness of the zero polynomial");
    }
    Ok(factor(f)?.factors.iter().all(|(_, m)| *m < 3))
}

/// Monic squarefree parts with multiplicities, for monic `f`.
pub fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, u32)>> {
    let mut out = Vec::new();
    sqf_into(f, 1, &mut out)?;
    Ok(out)
}

fn sqf_into(f: &Poly, scale: u32, out: &mut Vec<(Poly, u32)>) -> Result<()> {
    if f.is_constant() {
        return Ok(());
    }
    let p = f.modulus();
    let df = f.derivative();
    if df.is_zero() {
        let root = f.pth_root().expect("zero derivative implies a p-th power");
        return sqf_into(&root, scale * p, out);
    }
    let mut c = poly_gcd(f, &df)?;
    let mut w = f.exact_div(&c).expect("gcd divides f");
    let mut i = 1;
    while !w.is_one() {
        let y = poly_gcd(&w, &c)?;
        let z = w.exact_div(&y).expect("gcd divides w");
        if !z.is_one() {
            out.push((z.monic(), i * scale));
        }
        i += 1;
        c = c.exact_div(&y).expect("gcd divides c");
        w = y;
    }
    if !c.is_one() {
        let root = c.pth_root().expect("remaining cofactor is a p-th power");
        sqf_into(&root, scale * p, out)?;
    }
    Ok(())
}

/// Splits a monic squarefree `f` into products of irreducibles of equal degree.
pub fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let q = f.modulus();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = Poly::t(q);
    let mut h = x.clone();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.frobenius_mod(&rest)?;
        let g = poly_gcd(&(&h - &x), &rest)?;
        if !g.is_one() {
            rest = rest.exact_div(&g).expect("gcd divides");
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(n) = rest.degree() {
        if n > 0 {
            out.push((rest, n));
        }
    }
    Ok(out)
}

/// Cantor-Zassenhaus for odd q: `f` monic squarefree, all factors of degree `d`.
pub fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let q = f.modulus();
    loop {
        let a = Poly::from_coeffs(q, (0..n).map(|_| rng.gen_range(0..q)).collect());
        if a.is_constant() {
            continue;
        }
        let g = poly_gcd(&a, f)?;
        let g = if !g.is_one() {
            g
        } else {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
            let mut norm = a.clone();
            let mut conj = a.clone();
            for _ in 1..d {
                conj = conj.frobenius_mod(f)?;
                norm = norm.mul_mod(&conj, f)?;
            }
            let b = norm.pow_mod((q as u64 - 1) / 2, f)?;
            poly_gcd(&(&b - &Poly::one(q)), f)?
        };
        if let Some(k) = g.degree() {
            if k > 0 && k < n {
                let other = f.exact_div(&g).expect("gcd divides");
                let mut left = equal_degree(&g, d, rng)?;
                left.extend(equal_degree(&other.monic(), d, rng)?);
                return Ok(left);
            }
        }
    }
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &Poly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let f = f.monic();
    let q = f.modulus();
    let x = Poly::t(q);
    // frob[i] = t^(q^i) mod f
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(x.clone());
    for i in 1..=n {
        let next = frob[i - 1].frobenius_mod(&f).expect("nonzero modulus");
        frob.push(next);
    }
    if frob[n] != x {
        return false;
    }
    super::field::prime_divisors(n as u64).into_iter().all(|r| {
        let k = n / r as usize;
        poly_gcd(&(&frob[k] - &x), &f)
            .map(|g| g.is_one())
            .unwrap_or(false)
    })
}
