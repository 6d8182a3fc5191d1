//! Splitting of finite primes in a Shanks field.

use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::ff_poly::zech::{degree_table, DegreeTable, ZERO};
use crate::ff_poly::{count_roots_in_residue_field, irreducible_count, is_irreducible, ExtField, Poly};
use crate::invariants::ShanksField;

/// Decomposition type of a finite prime.
///
/// The local inverse roots `(z1, z2)` entering the Euler product are `(1, 1)`
/// for split primes, the two primitive cube roots of unity for inert primes
/// and `(0, 0)` for ramified primes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplitType {
    Split,
    Inert,
    Ramified,
}

impl SplitType {
    /// `(q^ν - z1)(q^ν - z2)` as a polynomial in `x = q^ν`: coefficients of
    /// `x^0, x^1` after the leading `x^2`.
    pub fn z_poly(self) -> (i64, i64) {
        match self {
            SplitType::Split => (1, -2),
            SplitType::Inert => (1, 1),
            SplitType::Ramified => (0, 0),
        }
    }
}

impl fmt::Display for SplitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SplitType::Split => "split",
            SplitType::Inert => "inert",
            SplitType::Ramified => "ramified",
        };
        f.write_str(s)
    }
}

/// Decomposition type of the monic irreducible `p`, read off the reduced
/// standard form `y^3 - 𝒜 y + ℬ`.
pub fn p_signature(field: &ShanksField, p: &Poly) -> Result<SplitType> {
    if p.modulus() != field.q() || !p.is_monic() || !is_irreducible(p) {
        return domain(format!("{p} is not a monic irreducible over F_{}", field.q()));
    }
    let sf = &field.reduced;
    let a_div = p.divides(&sf.a);
    let b_div = p.divides(&sf.b);
    debug_assert!(field.disc_f.valuation(p).is_multiple_of(2));
    if a_div && b_div {
        return Ok(SplitType::Ramified);
    }
    if !a_div && b_div {
        // y^3 - 𝒜 y = y (y^2 - 𝒜)
        let ext = ExtField::new(p)?;
        let a_res = ext.elem(&sf.a.rem(p)?);
        return if ext.is_square(&a_res) {
            Ok(SplitType::Split)
        } else {
            Err(Error::ClassificationGap(format!(
                "A = {}: 𝒜 is a non-square modulo {p} while {p} divides ℬ",
                field.a()
            )))
        };
    }
    match count_roots_in_residue_field(sf.cubic().as_slice(), p)? {
        3 => Ok(SplitType::Split),
        0 => Ok(SplitType::Inert),
        n => Err(Error::Inconsistency(format!(
            "A = {}: {n} roots modulo unramified prime {p}",
            field.a()
        ))),
    }
}

/// `f(P, 1/q) = q^{2ν} / ((q^ν - z1)(q^ν - z2))`.
pub fn local_factor(st: SplitType, nu: u32, q: u32) -> Result<Ratio<u128>> {
    if nu == 0 {
        return domain("prime degree must be positive");
    }
    let x = (q as u128)
        .checked_pow(nu)
        .filter(|x| x.checked_mul(*x).is_some())
        .ok_or_else(|| Error::ResourceRefusal(format!("q^(2*{nu}) overflows")))?;
    let x2 = x * x;
    Ok(match st {
        SplitType::Split => Ratio::new(x2, (x - 1) * (x - 1)),
        SplitType::Inert => Ratio::new(x2, x2 + x + 1),
        SplitType::Ramified => Ratio::from_integer(1),
    })
}

/// How many primes enter a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truncation {
    /// The first `N` monic irreducibles in canonical order.
    Count(u64),
    /// All monic irreducibles of degree at most `λ`.
    Degree(usize),
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truncation::Count(n) => write!(f, "{n}"),
            Truncation::Degree(d) => write!(f, "deg<={d}"),
        }
    }
}

/// Split/inert/ramified counts among the first `taken` primes of one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct DegreeCounts {
    pub degree: usize,
    pub total: u64,
    pub split: u64,
    pub inert: u64,
    pub ramified: u64,
}

impl DegreeCounts {
    pub fn taken(&self) -> u64 {
        self.split + self.inert + self.ramified
    }

    pub fn complete(&self) -> bool {
        self.taken() == self.total
    }

    fn add(mut self, other: DegreeCounts) -> DegreeCounts {
        self.split += other.split;
        self.inert += other.inert;
        self.ramified += other.ramified;
        self
    }
}

const CHUNK: usize = 4096;

fn classify_entries(
    field: &ShanksField,
    table: &DegreeTable,
    entries: &[crate::ff_poly::zech::PrimeEntry],
) -> Result<DegreeCounts> {
    let zf = &table.field;
    let nine = zf.scalar(9);
    let three = zf.scalar(3);
    let a = field.a();
    let mut c = DegreeCounts::default();
    for e in entries {
        let av = zf.eval(a, e.root);
        let fv = zf.add(zf.add(zf.mul(av, av), zf.mul(three, av)), nine);
        let st = if fv == ZERO {
            p_signature(field, &table.prime_poly(e))?
        } else if table.shanks_has_root(av) {
            SplitType::Split
        } else {
            SplitType::Inert
        };
        match st {
            SplitType::Split => c.split += 1,
            SplitType::Inert => c.inert += 1,
            SplitType::Ramified => c.ramified += 1,
        }
    }
    Ok(c)
}

/// Counts over the first `take` primes of degree `n` (all of them if `None`).
///
/// Primes not dividing `A^2+3A+9` split exactly when the Shanks cubic has a
/// root modulo `P`, which is read from the shared degree table; the others go
/// through [`p_signature`].
pub fn degree_counts(field: &ShanksField, n: usize, take: Option<u64>) -> Result<DegreeCounts> {
    let table = degree_table(field.q(), n)?;
    let total = table.primes.len();
    let take = take.map_or(total, |t| (t as usize).min(total));
    let counts = table.primes[..take]
        .par_chunks(CHUNK)
        .map(|chunk| classify_entries(field, &table, chunk))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(DegreeCounts::default(), DegreeCounts::add);
    Ok(DegreeCounts {
        degree: n,
        total: total as u64,
        ..counts
    })
}

/// Per-degree counts up to a truncation point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub truncation: Truncation,
    pub degrees: Vec<DegreeCounts>,
}

impl Census {
    pub fn split(&self) -> u64 {
        self.degrees.iter().map(|d| d.split).sum()
    }

    pub fn inert(&self) -> u64 {
        self.degrees.iter().map(|d| d.inert).sum()
    }

    pub fn ramified(&self) -> u64 {
        self.degrees.iter().map(|d| d.ramified).sum()
    }

    pub fn primes(&self) -> u64 {
        self.degrees.iter().map(DegreeCounts::taken).sum()
    }

    /// Largest degree whose primes were all used.
    pub fn lambda(&self) -> usize {
        self.degrees
            .iter()
            .take_while(|d| d.complete())
            .last()
            .map_or(0, |d| d.degree)
    }
}

/// Split, inert and ramified counts over a prefix of the primes.
pub fn splitting_census(field: &ShanksField, truncation: Truncation) -> Result<Census> {
    let q = field.q() as u64;
    let mut degrees = Vec::new();
    match truncation {
        Truncation::Count(0) | Truncation::Degree(0) => {
            return domain("truncation must be at least 1")
        }
        Truncation::Count(mut left) => {
            let mut n = 1;
            while left > 0 {
                let total = irreducible_count(q, n as u32);
                let take = left.min(total);
                degrees.push(degree_counts(field, n, Some(take))?);
                left -= take;
                n += 1;
            }
        }
        Truncation::Degree(lambda) => {
            for n in 1..=lambda {
                degrees.push(degree_counts(field, n, None)?);
            }
        }
    }
    Ok(Census {
        truncation,
        degrees,
    })
}
