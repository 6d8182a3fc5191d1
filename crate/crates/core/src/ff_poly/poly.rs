use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{
    add_mod, inv_mod, mul_mod, neg_mod, reduce_i64, sub_mod, FieldElem,
};
use crate::error::{domain, Error, Result};

/// Dense polynomial over F_q in the variable `t`.
///
/// Coefficients are stored ascending (`coeffs[i]` multiplies `t^i`) with no
/// trailing zeros; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    q: u32,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn zero(q: u32) -> Self {
        Poly {
            q,
            coeffs: Vec::new(),
        }
    }

    pub fn one(q: u32) -> Self {
        Poly::constant(q, 1)
    }

    /// The polynomial `t`.
    pub fn t(q: u32) -> Self {
        Poly { q, coeffs: vec![0, 1] }
    }

    pub fn constant(q: u32, c: i64) -> Self {
        Poly::from_coeffs(q, vec![reduce_i64(c, q)])
    }

    /// `c * t^n`.
    pub fn monomial(q: u32, c: i64, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = reduce_i64(c, q);
        Poly::from_coeffs(q, coeffs)
    }

    /// Builds from ascending residues already in `[0, q)`.
    pub fn from_coeffs(q: u32, mut coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < q));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { q, coeffs }
    }

    /// Builds from ascending signed integers, reducing mod `q`.
    pub fn from_i64(q: u32, coeffs: &[i64]) -> Self {
        Poly::from_coeffs(q, coeffs.iter().map(|&c| reduce_i64(c, q)).collect())
    }

    pub fn modulus(&self) -> u32 {
        self.q
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `None` stands for deg(0) = -infinity.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn deg_i64(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn sgn(&self) -> FieldElem {
        FieldElem::new(self.coeffs.last().copied().unwrap_or(0) as i64, self.q)
    }

    pub fn lead(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: u32) -> Poly {
        let q = self.q;
        Poly::from_coeffs(q, self.coeffs.iter().map(|&a| mul_mod(a, c, q)).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial is returned as is.
    pub fn monic(&self) -> Poly {
        match self.lead() {
            0 | 1 => self.clone(),
            l => self.scale(inv_mod(l, self.q)),
        }
    }

    pub fn eval(&self, x: u32) -> u32 {
        let q = self.q;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, q), c, q))
    }

    pub fn derivative(&self) -> Poly {
        let q = self.q;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, (i as u64 % q as u64) as u32, q))
            .collect();
        Poly::from_coeffs(q, coeffs)
    }

    /// Long division. Errors on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        if d.is_zero() {
            return domain("polynomial division by zero");
        }
        let q = self.q;
        if self.coeffs.len() < d.coeffs.len() {
            return Ok((Poly::zero(q), self.clone()));
        }
        let dn = d.coeffs.len() - 1;
        let inv_lead = inv_mod(d.lead(), q);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len() - dn];
        for i in (0..quot.len()).rev() {
            let c = mul_mod(rem[i + dn], inv_lead, q);
            quot[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[i + j] = sub_mod(rem[i + j], mul_mod(c, dc, q), q);
            }
        }
        rem.truncate(dn);
        Ok((Poly::from_coeffs(q, quot), Poly::from_coeffs(q, rem)))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.div_rem(d)?.1)
    }

    /// `Some(self / d)` when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        match self.div_rem(d) {
            Ok((quot, rem)) if rem.is_zero() => Some(quot),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Multiplicity of `p` in `self` (`self` nonzero, `p` non-constant).
    pub fn valuation(&self, p: &Poly) -> u32 {
        debug_assert!(!self.is_zero() && !p.is_constant());
        let mut v = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.exact_div(p) {
            cur = next;
            v += 1;
        }
        v
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.q);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn mul_mod(&self, other: &Poly, m: &Poly) -> Result<Poly> {
        (self * other).rem(m)
    }

    /// `self^e mod m` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Result<Poly> {
        let mut base = self.rem(m)?;
        let mut acc = Poly::one(self.q).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m)?;
            }
        }
        Ok(acc)
    }

    /// `self^q mod m`, the Frobenius image in F_q[t]/(m).
    pub fn frobenius_mod(&self, m: &Poly) -> Result<Poly> {
        self.pow_mod(self.q as u64, m)
    }

    /// Inverse modulo `m`, if `gcd(self, m) = 1`.
    pub fn inv_mod(&self, m: &Poly) -> Option<Poly> {
        let q = self.q;
        let (mut r0, mut r1) = (m.clone(), self.rem(m).ok()?);
        let (mut s0, mut s1) = (Poly::zero(q), Poly::one(q));
        while !r1.is_zero() {
            let (quot, rem) = r0.div_rem(&r1).ok()?;
            let s2 = &s0 - &(&quot * &s1);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let c = inv_mod(r0.lead(), q);
        s0.scale(c).rem(m).ok()
    }

    /// p-th root of a polynomial in `t^p` (p = q for a prime field).
    /// Returns `None` when some exponent is not divisible by `p`.
    pub fn pth_root(&self) -> Option<Poly> {
        let p = self.q as usize;
        if self
            .coeffs
            .iter()
            .enumerate()
            .any(|(i, &c)| c != 0 && i % p != 0)
        {
            return None;
        }
        Some(Poly::from_coeffs(
            self.q,
            self.coeffs.iter().step_by(p).copied().collect(),
        ))
    }

    /// Canonical order on polynomials: by degree, then lexicographically on
    /// the coefficients from the leading one down.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Parses the polynomial grammar, e.g. `t^4+3t^2+9`, `2*t^3 + 6`, `t - 1`.
    pub fn parse(s: &str, q: u32) -> Result<Poly> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut coeffs: Vec<u32> = Vec::new();
        let bytes = cleaned.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                i += 1;
            }
            let term = &cleaned[start..i];
            if term.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            let (c, e) = parse_term(term, q)?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            let c = if sign < 0 { neg_mod(c, q) } else { c };
            coeffs[e] = add_mod(coeffs[e], c, q);
        }
        Ok(Poly::from_coeffs(q, coeffs))
    }
}

fn parse_coeff(text: &str, q: u32) -> Result<u32> {
    let digits: u128 = text
        .parse()
        .map_err(|_| Error::Parse(format!("bad coefficient {text:?}")))?;
    Ok((digits % q as u128) as u32)
}

fn parse_term(term: &str, q: u32) -> Result<(u32, usize)> {
    let Some(tpos) = term.find('t') else {
        return Ok((parse_coeff(term, q)?, 0));
    };
    let head = term[..tpos].trim_end_matches('*');
    let c = if head.is_empty() {
        1 % q
    } else {
        parse_coeff(head, q)?
    };
    let tail = &term[tpos + 1..];
    let e = if tail.is_empty() {
        1
    } else if let Some(exp) = tail.strip_prefix('^') {
        exp.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad exponent in {term:?}")))?
    } else {
        return Err(Error::Parse(format!("unexpected text after t in {term:?}")));
    };
    Ok((c, e))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ => {
                    if c != 1 {
                        write!(f, "{c}")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({} over F_{})", self, self.q)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.q, rhs.q);
        let q = self.q;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| add_mod(self.coeff(i), rhs.coeff(i), q))
            .collect();
        Poly::from_coeffs(q, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.q, rhs.q);
        let q = self.q;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| sub_mod(self.coeff(i), rhs.coeff(i), q))
            .collect();
        Poly::from_coeffs(q, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let q = self.q;
        Poly::from_coeffs(q, self.coeffs.iter().map(|&c| neg_mod(c, q)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.q, rhs.q);
        let q = self.q;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(q);
        }
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        // Accumulate in u64 and reduce lazily; q < 2^31 keeps each term < 2^62.
        let mut acc = vec![0u64; n];
        let qq = q as u64;
        let limit = u64::MAX - qq * qq;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let slot = &mut acc[i + j];
                *slot += a as u64 * b as u64;
                if *slot >= limit {
                    *slot %= qq;
                }
            }
        }
        Poly::from_coeffs(q, acc.into_iter().map(|v| (v % qq) as u32).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Monic gcd of `a` and `b`; errors when both are zero.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    if a.is_zero() && b.is_zero() {
        return domain("gcd(0, 0) is undefined");
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.rem(&y)?;
        x = std::mem::replace(&mut y, r);
    }
    Ok(x.monic())
}
