use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{domain, Result};

/// Checks that `q` is a prime at least 5.
pub fn check_modulus(q: u32) -> Result<()> {
    if q < 5 {
        return domain(format!("q = {q}: characteristic must be at least 5"));
    }
    if !is_prime(q as u64) {
        return domain(format!("q = {q} is not prime"));
    }
    Ok(())
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, q: u32) -> u32 {
    let s = a as u64 + b as u64;
    if s >= q as u64 {
        (s - q as u64) as u32
    } else {
        s as u32
    }
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, q: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        (a as u64 + q as u64 - b as u64) as u32
    }
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, q: u32) -> u32 {
    ((a as u64 * b as u64) % q as u64) as u32
}

#[inline]
pub(crate) fn neg_mod(a: u32, q: u32) -> u32 {
    if a == 0 {
        0
    } else {
        q - a
    }
}

pub(crate) fn pow_mod(mut base: u32, mut e: u64, q: u32) -> u32 {
    let mut acc = 1 % q;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, q);
        }
        base = mul_mod(base, base, q);
        e >>= 1;
    }
    acc
}

/// Inverse by Fermat; `a` must be nonzero mod the prime `q`.
pub(crate) fn inv_mod(a: u32, q: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(q), "inverse of zero");
    pow_mod(a, q as u64 - 2, q)
}

/// Reduces a signed integer into `[0, q)`.
#[inline]
pub(crate) fn reduce_i64(v: i64, q: u32) -> u32 {
    v.rem_euclid(q as i64) as u32
}

/// An element of the prime field F_q.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    value: u32,
    q: u32,
}

impl FieldElem {
    pub fn new(value: i64, q: u32) -> Self {
        FieldElem {
            value: reduce_i64(value, q),
            q,
        }
    }

    pub fn zero(q: u32) -> Self {
        FieldElem { value: 0, q }
    }

    pub fn one(q: u32) -> Self {
        FieldElem { value: 1, q }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.q
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Result<Self> {
        if self.value == 0 {
            return domain("inverse of zero in F_q");
        }
        Ok(FieldElem {
            value: inv_mod(self.value, self.q),
            q: self.q,
        })
    }

    pub fn pow(self, e: u64) -> Self {
        FieldElem {
            value: pow_mod(self.value, e, self.q),
            q: self.q,
        }
    }

    /// Quadratic residue test (Euler's criterion); zero counts as a square.
    pub fn is_square(self) -> bool {
        self.value == 0 || self.pow((self.q as u64 - 1) / 2).value == 1
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.q)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.q, rhs.q);
        FieldElem {
            value: add_mod(self.value, rhs.value, self.q),
            q: self.q,
        }
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.q, rhs.q);
        FieldElem {
            value: sub_mod(self.value, rhs.value, self.q),
            q: self.q,
        }
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.q, rhs.q);
        FieldElem {
            value: mul_mod(self.value, rhs.value, self.q),
            q: self.q,
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> Self {
        FieldElem {
            value: neg_mod(self.value, self.q),
            q: self.q,
        }
    }
}

impl Div for FieldElem {
    type Output = FieldElem;
    /// Panics on division by zero; use [`FieldElem::inv`] for a checked inverse.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in F_q")
    }
}
