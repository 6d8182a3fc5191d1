//! Divisor class numbers: exact L-polynomial for small genus and the
//! truncated Euler-product estimate with its error bound.
//!
//! With `Z(u, K) = L(u) / ((1-u)(1-qu))` and the Euler product over all places,
//! `L(u) = (1-u)^{-2} ∏_P ℓ_P(u^{deg P})` where `ℓ = (1-x)^{-2}` for split
//! primes, `(1+x+x^2)^{-1}` for inert ones and `1` for ramified ones; the
//! three degree-one places at infinity account for `(1-u)^{-3}` against the
//! `(1-u)^{-1}` of the rational zeta function.

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::ff_poly::zech::MAX_TABLE_ORDER;
use crate::invariants::{hasse_weil, norm_form_decompose, Regulator, ShanksField};
use crate::splitting::{degree_counts, splitting_census, Census, DegreeCounts, Truncation};

/// Largest genus handled by the exact path.
pub const MAX_EXACT_GENUS: u32 = 8;

/// Largest `q^{g+1}` for which the coefficient `a_{g+1}` is recomputed from
/// primes of degree `g+1` and checked against the functional equation.
pub const CROSS_CHECK_LIMIT: u64 = 1 << 22;

/// `L(u) = a_0 + a_1 u + ... + a_{2g} u^{2g}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPolynomial {
    pub q: u32,
    pub genus: u32,
    pub coeffs: Vec<i128>,
}

impl LPolynomial {
    /// `h = L(1)`.
    pub fn h(&self) -> i128 {
        self.coeffs.iter().sum()
    }

    /// `a_{2g-i} = q^{g-i} a_i`.
    pub fn satisfies_functional_equation(&self) -> bool {
        let g = self.genus as usize;
        self.coeffs.len() == 2 * g + 1
            && (0..=g).all(|i| {
                (self.q as i128).pow((g - i) as u32) * self.coeffs[i] == self.coeffs[2 * g - i]
            })
    }
}

impl fmt::Display for LPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}u"),
                _ => format!("{c}u^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

fn overflow() -> Error {
    Error::ResourceRefusal("integer overflow in series arithmetic".into())
}

/// Multiplies a truncated series by `(1 - u^stride)^m`.
fn mul_binomial(series: &mut [i128], stride: usize, m: i128) -> Result<()> {
    if m == 0 {
        return Ok(());
    }
    let len = series.len();
    let terms = (len - 1) / stride;
    // coefficients of (1 - x)^m up to x^terms
    let mut binom = Vec::with_capacity(terms + 1);
    let mut b: i128 = 1;
    binom.push(1i128);
    for j in 1..=terms as i128 {
        b = b.checked_mul(m - j + 1).ok_or_else(overflow)? / j;
        binom.push(if j % 2 == 0 { b } else { -b });
    }
    for i in (0..len).rev() {
        let mut acc: i128 = 0;
        for (j, &c) in binom.iter().enumerate() {
            let k = j * stride;
            if k > i {
                break;
            }
            acc = acc
                .checked_add(c.checked_mul(series[i - k]).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
        }
        series[i] = acc;
    }
    Ok(())
}

/// Power series of `L(u)` up to `u^top` from per-degree counts of degrees `1..=top`.
pub fn l_series(counts: &[DegreeCounts], top: usize) -> Result<Vec<i128>> {
    let mut s = vec![0i128; top + 1];
    s[0] = 1;
    mul_binomial(&mut s, 1, -2)?;
    for c in counts.iter().filter(|c| c.degree <= top) {
        if !c.complete() {
            return domain(format!("degree {} primes are incomplete", c.degree));
        }
        let nu = c.degree;
        mul_binomial(&mut s, nu, -2 * c.split as i128)?;
        // (1 + x + x^2)^{-1} = (1 - x) / (1 - x^3)
        mul_binomial(&mut s, nu, c.inert as i128)?;
        mul_binomial(&mut s, 3 * nu, -(c.inert as i128))?;
    }
    Ok(s)
}

fn q_pow(q: u32, e: u32) -> Option<u64> {
    (q as u64).checked_pow(e)
}

/// Exact L-polynomial from the splitting of all primes of degree at most `g`
/// and the functional equation.
pub fn exact_l_polynomial(field: &ShanksField) -> Result<LPolynomial> {
    let q = field.q();
    let g = field.genus;
    if g > MAX_EXACT_GENUS {
        return Err(Error::ResourceRefusal(format!(
            "genus {g} exceeds the exact limit {MAX_EXACT_GENUS}"
        )));
    }
    if q_pow(q, g.max(1)).is_none_or(|v| v > MAX_TABLE_ORDER) {
        return Err(Error::ResourceRefusal(format!(
            "primes of degree {g} over F_{q} exceed the table limit"
        )));
    }
    let cross = q_pow(q, g + 1).is_some_and(|v| v <= CROSS_CHECK_LIMIT);
    let top = if cross { g as usize + 1 } else { g as usize };
    let counts = (1..=top)
        .map(|n| degree_counts(field, n, None))
        .collect::<Result<Vec<_>>>()?;
    let series = l_series(&counts, top)?;
    let gu = g as usize;
    let mut coeffs = vec![0i128; 2 * gu + 1];
    for i in 0..=gu {
        coeffs[i] = series[i];
        let scale = (q as i128).checked_pow(g - i as u32).ok_or_else(overflow)?;
        coeffs[2 * gu - i] = series[i].checked_mul(scale).ok_or_else(overflow)?;
    }
    if cross {
        let expected = if g == 0 { 0 } else { coeffs[gu + 1] };
        if series[gu + 1] != expected {
            return Err(Error::Inconsistency(format!(
                "A = {}: coefficient {} is {} but the functional equation for genus {g} needs {expected}",
                field.a(),
                gu + 1,
                series[gu + 1]
            )));
        }
    }
    let l = LPolynomial { q, genus: g, coeffs };
    let h = l.h();
    if h <= 0 || !hasse_weil(q, g).contains(h as f64) {
        return Err(Error::Inconsistency(format!(
            "A = {}: h = {h} outside the Hasse-Weil interval for genus {g}",
            field.a()
        )));
    }
    Ok(l)
}

/// Ideal class numbers `h / R` for the regulator candidates dividing `h`
/// whose quotient is a norm `a^2 + 3b^2`.
pub fn hprime_candidates(h: u128, regulator: &Regulator) -> Vec<(u64, u128)> {
    regulator
        .candidates()
        .into_iter()
        .filter(|&r| h.is_multiple_of(r as u128))
        .map(|r| (r, h / r as u128))
        .filter(|&(_, hp)| u64::try_from(hp).is_ok_and(|v| norm_form_decompose(v).is_some()))
        .collect()
}

/// Error bound `ψ(λ, K)` on `|log h - log E'|`.
pub fn psi_bound(q: u32, g: u32, lambda: u32) -> Result<f64> {
    if lambda < 1 {
        return domain("λ must be at least 1");
    }
    let q = q as f64;
    let g = g as f64;
    let l = lambda as f64;
    let sq = q.sqrt();
    let eps = if lambda % 2 == 1 { 2.0 } else { 3.0 };
    let t1 = 2.0 * g / (l + 1.0) * q.powf(-(l + 1.0) / 2.0);
    let t2 = (2.0 * g + 4.0) / (l + 2.0) * sq / (sq - 1.0) * q / (q - 1.0) * q.powf(-(l + 2.0) / 2.0);
    let t3 = 2.0 / (l + 1.0) * q.powf(-(l + 1.0));
    let t4 = 2.0 / (l + 1.0) * q / (q - 1.0) * q.powf(-(l + 1.0)) * (q.powf((l + 1.0) / eps) - 1.0);
    Ok(t1 + t2 + t3 + t4)
}

/// `L = ⌈√(E'(e^ψ - 1) + 1/2)⌉`, so that `|h - round(E')| <= L^2`.
pub fn interval_radius(eprime: f64, psi: f64) -> Result<u64> {
    if !(0.0..1.0).contains(&psi) {
        return Err(Error::BoundUnusable(psi));
    }
    Ok((eprime * psi.exp_m1() + 0.5).sqrt().ceil() as u64)
}

/// Estimator output.
#[derive(Clone, Debug, PartialEq)]
pub struct HApprox {
    pub eprime: f64,
    pub psi: f64,
    pub e: u128,
    pub l: u64,
    pub lambda: usize,
    pub truncation: Truncation,
    pub primes: u64,
    /// `round(E'/R)` when the regulator is known exactly.
    pub hprime_estimate: Option<u128>,
}

/// Neumaier-compensated sum.
#[derive(Default)]
struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    /// Adds `n * x` keeping the rounding error of the product.
    fn add_product(&mut self, n: u64, x: f64) {
        let n = n as f64;
        let p = n * x;
        self.add(p);
        self.add(n.mul_add(x, -p));
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// `log E'` from per-degree counts.
pub fn log_eprime(q: u32, g: u32, degrees: &[DegreeCounts]) -> f64 {
    let qf = q as f64;
    let mut s = CompensatedSum::default();
    s.add((g + 2) as f64 * qf.ln());
    s.add(-2.0 * (qf - 1.0).ln());
    for d in degrees {
        let x = qf.powi(-(d.degree as i32));
        s.add_product(d.split, -2.0 * (-x).ln_1p());
        s.add_product(d.inert, -(x + x * x).ln_1p());
    }
    s.value()
}

/// Estimate from an existing census.
pub fn estimate_from_census(field: &ShanksField, census: &Census) -> Result<HApprox> {
    let q = field.q();
    let g = field.genus;
    let eprime = log_eprime(q, g, &census.degrees).exp();
    let lambda = census.lambda();
    let psi = psi_bound(q, g, lambda as u32)?;
    let l = interval_radius(eprime, psi)?;
    let hprime_estimate = field
        .regulator
        .exact()
        .map(|r| (eprime / r as f64).round() as u128);
    Ok(HApprox {
        eprime,
        psi,
        e: eprime.round() as u128,
        l,
        lambda,
        truncation: census.truncation,
        primes: census.primes(),
        hprime_estimate,
    })
}

/// `E' = q^{g+2}/(q-1)^2 ∏ f(P, 1/q)` over a prefix of the primes.
pub fn truncated_estimate(field: &ShanksField, truncation: Truncation) -> Result<HApprox> {
    estimate_from_census(field, &splitting_census(field, truncation)?)
}
