//! Index, discriminant, genus, regulator and class-number bounds of a Shanks field.

use std::fmt;

use num_rational::Ratio;

use crate::error::{domain, Error, Result};
use crate::ff_poly::{factor, is_cube_free, poly_gcd, Poly};
use crate::simple_cubic::{
    reduce_standard_form, regulator_from_root_degrees, root_degrees_at_infinity, standard_form,
    ShanksPoly, StandardForm,
};

/// Signature of the infinite place: it splits completely.
pub const SIGNATURE: &str = "(1,1;1,1;1,1)";

/// Regulator, either known exactly or narrowed to divisors of `deg(A)^2`
/// inside `[lower, upper]`.
#[derive(Clone, Debug, PartialEq)]
pub enum Regulator {
    Exact(u64),
    Candidates {
        lower: Ratio<u64>,
        upper: u64,
        candidates: Vec<u64>,
    },
}

impl Regulator {
    pub fn exact(&self) -> Option<u64> {
        match self {
            Regulator::Exact(r) => Some(*r),
            Regulator::Candidates { candidates, .. } if candidates.len() == 1 => Some(candidates[0]),
            Regulator::Candidates { .. } => None,
        }
    }

    pub fn candidates(&self) -> Vec<u64> {
        match self {
            Regulator::Exact(r) => vec![*r],
            Regulator::Candidates { candidates, .. } => candidates.clone(),
        }
    }
}

impl fmt::Display for Regulator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(r) => write!(f, "{r}"),
            None => {
                let c: Vec<String> = self.candidates().iter().map(u64::to_string).collect();
                write!(f, "{{{}}}", c.join(","))
            }
        }
    }
}

/// A Shanks field with its invariants.
#[derive(Clone, Debug)]
pub struct ShanksField {
    pub shanks: ShanksPoly,
    /// `A^2 + 3A + 9`; the polynomial discriminant is `f^2`.
    pub f: Poly,
    pub disc_f: Poly,
    pub index: Poly,
    /// Product of the ramified primes; `D(K)` is its square.
    pub conductor: Poly,
    pub disc_k: Poly,
    pub genus: u32,
    pub cube_free: bool,
    pub standard: StandardForm,
    pub reduced: StandardForm,
    /// `Q` removed by the standard-form reduction.
    pub reduction: Poly,
    pub ramified: Vec<Poly>,
    pub regulator: Regulator,
    /// Set when `A` was a Frobenius power; holds the canonical parameter.
    pub frobenius_canonical: Option<ShanksPoly>,
}

impl ShanksField {
    pub fn q(&self) -> u32 {
        self.shanks.q()
    }

    pub fn a(&self) -> &Poly {
        self.shanks.a()
    }

    pub fn deg_a(&self) -> usize {
        self.shanks.deg_a()
    }

    pub fn index_degree(&self) -> usize {
        self.index.degree().unwrap_or(0)
    }

    /// Denominator `I` of the integral basis `{1, θ, θ^2/I}`.
    pub fn basis_denominator(&self) -> &Poly {
        &self.index
    }
}

/// Builds the field of `x^3 - A x^2 - (A+3) x - 1` over F_q(t).
///
/// A prime `P` ramifies exactly when `3` does not divide `v_P(A^2+3A+9)`;
/// `D(K)` is the square of the product of those primes and the index is
/// `(A^2+3A+9) / prod P`. In the cube-free case this is `gcd(A^2+3A+9, A')`.
pub fn build_field(q: u32, a: &Poly) -> Result<ShanksField> {
    if a.modulus() != q {
        return domain("A is defined over a different field");
    }
    let shanks = ShanksPoly::new(a.clone())?;
    let f = shanks.f_poly();
    let fact = factor(&f)?;
    let cube_free = fact.factors.iter().all(|&(_, e)| e < 3);
    let ramified: Vec<Poly> = fact
        .factors
        .iter()
        .filter(|&&(_, e)| e % 3 != 0)
        .map(|(p, _)| p.clone())
        .collect();
    let conductor = ramified.iter().fold(Poly::one(q), |acc, p| &acc * p);
    let index = f.monic().exact_div(&conductor).expect("conductor divides f");
    let disc_k = &conductor * &conductor;
    let deg_cond = conductor.degree().unwrap_or(0);
    if deg_cond < 2 {
        return Err(Error::Inconsistency(format!(
            "A = {a}: conductor {conductor} has degree below 2"
        )));
    }
    let genus = (deg_cond - 2) as u32;
    let standard = standard_form(&shanks);
    let (reduced, reduction) = reduce_standard_form(&standard)?;
    let d = shanks.deg_a() as u64;
    let regulator = if cube_free {
        Regulator::Exact(regulator_from_root_degrees(&root_degrees_at_infinity(
            &shanks.cubic(),
        )?)?)
    } else {
        candidate_regulators(disc_k.degree().unwrap_or(0) as u64, d)
    };
    let frobenius_canonical = shanks.is_frobenius_power().then(|| shanks.canonical());
    Ok(ShanksField {
        disc_f: &f * &f,
        f,
        index,
        conductor,
        disc_k,
        genus,
        cube_free,
        standard,
        reduced,
        reduction,
        ramified,
        regulator,
        frobenius_canonical,
        shanks,
    })
}

fn candidate_regulators(deg_disc: u64, d: u64) -> Regulator {
    let upper = d * d;
    let lower = Ratio::new(deg_disc * deg_disc, 16);
    let candidates: Vec<u64> = (1..=upper)
        .filter(|r| upper.is_multiple_of(*r) && Ratio::from_integer(*r) >= lower)
        .collect();
    Regulator::Candidates {
        lower,
        upper,
        candidates,
    }
}

/// `(lower, upper)` with `lower = deg(D(K))^2 / 16` and `upper = deg(A)^2`.
pub fn regulator_bounds(field: &ShanksField) -> (Ratio<u64>, u64) {
    let deg_disc = field.disc_k.degree().unwrap_or(0) as u64;
    let d = field.deg_a() as u64;
    (Ratio::new(deg_disc * deg_disc, 16), d * d)
}

/// Hasse-Weil interval `[(√q-1)^{2g}, (√q+1)^{2g}]`, rounded outward.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HWInterval {
    pub lower: f64,
    pub upper: f64,
}

impl HWInterval {
    pub fn contains(&self, h: f64) -> bool {
        self.lower <= h && h <= self.upper
    }
}

pub fn hasse_weil(q: u32, g: u32) -> HWInterval {
    if g == 0 {
        return HWInterval {
            lower: 1.0,
            upper: 1.0,
        };
    }
    let s = (q as f64).sqrt();
    let e = 2 * g as i32;
    HWInterval {
        lower: (s - 1.0).powi(e).next_down().next_down(),
        upper: (s + 1.0).powi(e).next_up().next_up(),
    }
}

/// `(⌈(√q-1)^{2g}/R⌉, ⌊(√q+1)^{2g}/R⌋)`, exact when the numbers fit in 128 bits.
pub fn hw_scaled_bounds(q: u32, g: u32, r: u64) -> (u128, u128) {
    // (√q ± 1)^{2g} = X ± Y√q with (q + 1 + 2√q)^g = X + Y√q
    let exact = (|| {
        let (mut x, mut y) = (1u128, 0u128);
        let q = q as u128;
        for _ in 0..g {
            let nx = x.checked_mul(q + 1)?.checked_add(y.checked_mul(2 * q)?)?;
            let ny = x.checked_mul(2)?.checked_add(y.checked_mul(q + 1)?)?;
            x = nx;
            y = ny;
        }
        let root = y.checked_mul(y)?.checked_mul(q)?.isqrt();
        let r = r as u128;
        if y == 0 {
            return Some((x.div_ceil(r), x / r));
        }
        // X - Y√q lies strictly between X - root - 1 and X - root
        let low_floor = x - root - 1;
        Some((low_floor / r + 1, (x + root) / r))
    })();
    exact.unwrap_or_else(|| {
        let hw = hasse_weil(q, g);
        (
            (hw.lower / r as f64).ceil() as u128,
            (hw.upper / r as f64).floor() as u128,
        )
    })
}

/// Position of `h'` inside the regulator-scaled Hasse-Weil interval:
/// `(h' - ⌈lo/R⌉) / (⌊hi/R⌋ - ⌈lo/R⌉)`.
pub fn max_measure(hprime: u64, q: u32, g: u32, r: u64) -> Result<f64> {
    if r == 0 || hprime == 0 {
        return domain("h' and R must be positive");
    }
    let (lo, hi) = hw_scaled_bounds(q, g, r);
    if hi <= lo {
        return Err(Error::UndefinedMeasure(format!(
            "empty scaled interval [{lo}, {hi}] for q = {q}, g = {g}, R = {r}"
        )));
    }
    Ok((hprime as f64 - lo as f64) / (hi - lo) as f64)
}

/// Lexicographically least `(a, b)` with `a, b >= 0` and `a^2 + 3b^2 = h'`.
pub fn norm_form_decompose(hprime: u64) -> Option<(u64, u64)> {
    (0..=hprime.isqrt()).find_map(|a| {
        let rest = hprime - a * a;
        if !rest.is_multiple_of(3) {
            return None;
        }
        let b = (rest / 3).isqrt();
        (b * b == rest / 3).then_some((a, b))
    })
}

/// `h' = h / R`.
pub fn class_number_relation(h: u128, r: u64) -> Result<u128> {
    if r == 0 || !h.is_multiple_of(r as u128) {
        return Err(Error::Inconsistency(format!("R = {r} does not divide h = {h}")));
    }
    Ok(h / r as u128)
}

/// Cube-freeness of `A^2 + 3A + 9` without building the whole field.
pub fn f_is_cube_free(a: &ShanksPoly) -> Result<bool> {
    is_cube_free(&a.f_poly())
}

/// `gcd(A^2+3A+9, A')`, the index in the cube-free case.
pub fn gcd_index(a: &ShanksPoly) -> Result<Poly> {
    poly_gcd(&a.f_poly(), &a.a().derivative())
}
