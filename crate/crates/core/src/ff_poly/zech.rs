//! Zech-logarithm model of F_{q^n} and per-degree prime tables.
//!
//! A degree-`n` prime `P` of F_q[t] is represented by one of its roots in a
//! fixed copy of F_{q^n}; `F_q[t]/(P)` is isomorphic to F_{q^n} through
//! `t -> root`. Evaluating a polynomial at the root then answers questions
//! about residues mod `P` with a handful of table lookups.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::field::{check_modulus, prime_divisors};
use super::irreducible::{monic_polys, monic_rank};
use super::poly::Poly;
use super::factor::is_irreducible;
use crate::error::{Error, Result};

/// Log of the zero element.
pub const ZERO: u32 = u32::MAX;

/// Largest field size for which tables are built.
pub const MAX_TABLE_ORDER: u64 = 1 << 24;

/// F_{q^n} with elements stored as discrete logs to a primitive root.
pub struct ZechField {
    q: u32,
    n: usize,
    order: u64,
    /// `exp[l]` is the base-q digit index of `g^l`.
    exp: Vec<u32>,
    /// `log[idx]`, with `log[0] = ZERO`.
    log: Vec<u32>,
    /// `zech[k] = log(1 + g^k)`.
    zech: Vec<u32>,
}

impl ZechField {
    pub fn new(q: u32, n: usize) -> Result<Self> {
        check_modulus(q)?;
        let order = (q as u64)
            .checked_pow(n as u32)
            .filter(|&o| o <= MAX_TABLE_ORDER)
            .ok_or_else(|| {
                Error::ResourceRefusal(format!("F_{q}^{n} exceeds the table size limit"))
            })?;
        let modulus = first_primitive(q, n, order);
        let m = modulus.coeffs();
        let group = order - 1;
        let mut exp = vec![0u32; group as usize];
        let mut log = vec![ZERO; order as usize];
        let mut digits = vec![0u32; n];
        digits[0] = 1;
        let mut pow_q = vec![1u64; n];
        for i in 1..n {
            pow_q[i] = pow_q[i - 1] * q as u64;
        }
        for l in 0..group {
            let idx: u64 = digits
                .iter()
                .zip(&pow_q)
                .map(|(&d, &w)| d as u64 * w)
                .sum();
            exp[l as usize] = idx as u32;
            log[idx as usize] = l as u32;
            // multiply by the root g of the primitive modulus
            let top = digits[n - 1];
            for i in (1..n).rev() {
                digits[i] = digits[i - 1];
            }
            digits[0] = 0;
            if top != 0 {
                for (d, &mc) in digits.iter_mut().zip(m) {
                    let sub = (top as u64 * mc as u64 % q as u64) as u32;
                    *d = (*d + q - sub) % q;
                }
            }
        }
        let zech = exp
            .iter()
            .map(|&idx| {
                let next = if idx % q == q - 1 { idx - (q - 1) } else { idx + 1 };
                log[next as usize]
            })
            .collect();
        Ok(ZechField {
            q,
            n,
            order,
            exp,
            log,
            zech,
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == ZERO || b == ZERO {
            return ZERO;
        }
        let s = a as u64 + b as u64;
        let g = self.order - 1;
        (if s >= g { s - g } else { s }) as u32
    }

    #[inline]
    pub fn div(&self, a: u32, b: u32) -> u32 {
        debug_assert!(b != ZERO);
        if a == ZERO {
            return ZERO;
        }
        let g = self.order - 1;
        ((a as u64 + g - b as u64) % g) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if a == ZERO {
            return b;
        }
        if b == ZERO {
            return a;
        }
        let g = self.order - 1;
        let k = (b as u64 + g - a as u64) % g;
        let z = self.zech[k as usize];
        if z == ZERO {
            ZERO
        } else {
            ((a as u64 + z as u64) % g) as u32
        }
    }

    /// Log of the prime-field element `c`.
    #[inline]
    pub fn scalar(&self, c: u32) -> u32 {
        self.log[(c % self.q) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.mul(a, self.scalar(self.q - 1))
    }

    /// Value of a prime-field element given by its log, if it lies in F_q.
    pub fn to_scalar(&self, a: u32) -> Option<u32> {
        if a == ZERO {
            return Some(0);
        }
        let idx = self.exp[a as usize];
        (idx < self.q).then_some(idx)
    }

    /// Evaluates `f` at `g^x` (or at zero when `x == ZERO`).
    pub fn eval(&self, f: &Poly, x: u32) -> u32 {
        f.coeffs()
            .iter()
            .rev()
            .fold(ZERO, |acc, &c| self.add(self.mul(acc, x), self.scalar(c)))
    }
}

/// First monic polynomial of degree `n` (canonical order) whose root generates
/// the multiplicative group of F_{q^n}.
fn first_primitive(q: u32, n: usize, order: u64) -> Poly {
    let group = order - 1;
    let divisors = prime_divisors(group);
    monic_polys(q, n)
        .find(|m| {
            if m.coeff(0) == 0 || !is_irreducible(m) {
                return false;
            }
            let t = Poly::t(q);
            divisors.iter().all(|r| {
                !t.pow_mod(group / r, m)
                    .expect("nonzero modulus")
                    .is_one()
            })
        })
        .expect("primitive polynomials exist in every degree")
}

/// One degree-`n` prime: its rank among monic degree-`n` polynomials and the
/// log of a root in the table field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeEntry {
    pub rank: u64,
    pub root: u32,
}

/// All monic irreducibles of one degree, in canonical order, over a shared
/// log-table field, plus the splitting table of the Shanks cubic family.
pub struct DegreeTable {
    pub field: ZechField,
    pub primes: Vec<PrimeEntry>,
    /// `splits[l]`: `x^3 - a x^2 - (a+3) x - 1` has a root in F_{q^n} for `a = g^l`.
    splits: Vec<bool>,
    zero_splits: bool,
}

impl DegreeTable {
    fn build(q: u32, n: usize) -> Result<Self> {
        let field = ZechField::new(q, n)?;
        let primes = degree_primes(&field);
        let (splits, zero_splits) = shanks_image(&field);
        Ok(DegreeTable {
            field,
            primes,
            splits,
            zero_splits,
        })
    }

    /// Whether the Shanks cubic with parameter `a` (a log) has a root.
    #[inline]
    pub fn shanks_has_root(&self, a: u32) -> bool {
        if a == ZERO {
            self.zero_splits
        } else {
            self.splits[a as usize]
        }
    }

    pub fn prime_poly(&self, entry: &PrimeEntry) -> Poly {
        super::irreducible::monic_from_rank(self.field.q, self.field.n, entry.rank)
    }
}

fn degree_primes(field: &ZechField) -> Vec<PrimeEntry> {
    let q = field.q;
    let n = field.n;
    let group = field.order - 1;
    let mut seen = vec![false; group as usize];
    let mut out = Vec::new();
    if n == 1 {
        out.push(PrimeEntry { rank: 0, root: ZERO });
    }
    let mut orbit = Vec::with_capacity(n);
    for start in 0..group {
        if seen[start as usize] {
            continue;
        }
        orbit.clear();
        let mut l = start;
        loop {
            seen[l as usize] = true;
            orbit.push(l as u32);
            l = l * q as u64 % group;
            if l == start {
                break;
            }
        }
        if orbit.len() != n {
            continue;
        }
        // minimal polynomial prod (t - root), coefficients as logs, ascending
        let mut coeffs = vec![0u32];
        for &r in &orbit {
            let neg_r = field.neg(r);
            let mut next = vec![ZERO; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] = field.add(next[i + 1], c);
                next[i] = field.add(next[i], field.mul(c, neg_r));
            }
            coeffs = next;
        }
        let ints: Vec<u32> = coeffs
            .iter()
            .map(|&c| field.to_scalar(c).expect("minimal polynomial lies over F_q"))
            .collect();
        let poly = Poly::from_coeffs(q, ints);
        out.push(PrimeEntry {
            rank: monic_rank(&poly),
            root: start as u32,
        });
    }
    out.sort_unstable_by_key(|e| e.rank);
    out
}

/// Image of `x -> (x^3 - 3x - 1) / (x^2 + x)` on F_{q^n} minus {0, -1}: exactly
/// the parameters `a` whose Shanks cubic has a root `x`.
fn shanks_image(field: &ZechField) -> (Vec<bool>, bool) {
    let group = field.order - 1;
    let mut splits = vec![false; group as usize];
    let mut zero_splits = false;
    let minus_one = field.scalar(field.q - 1);
    let three = field.scalar(3);
    let one = field.scalar(1);
    for x in 0..group as u32 {
        if x == minus_one {
            continue;
        }
        let x2 = field.mul(x, x);
        let x3 = field.mul(x2, x);
        let num = field.add(
            field.add(x3, field.neg(field.mul(three, x))),
            field.neg(one),
        );
        let den = field.add(x2, x);
        let a = field.div(num, den);
        if a == ZERO {
            zero_splits = true;
        } else {
            splits[a as usize] = true;
        }
    }
    (splits, zero_splits)
}

type Cache = Mutex<HashMap<(u32, usize), Arc<DegreeTable>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared table for degree-`n` primes over F_q, built on first use.
pub fn degree_table(q: u32, n: usize) -> Result<Arc<DegreeTable>> {
    if let Some(t) = cache().lock().expect("table cache").get(&(q, n)) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(DegreeTable::build(q, n)?);
    let mut guard = cache().lock().expect("table cache");
    Ok(Arc::clone(guard.entry((q, n)).or_insert(table)))
}
