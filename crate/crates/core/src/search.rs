//! Enumeration drivers: surveys, the class-number-one search and the
//! large-index scan.

use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ff_poly::{is_cube_free, Poly};
use crate::invariants::{build_field, hw_scaled_bounds, max_measure, Regulator, ShanksField};
use crate::simple_cubic::ShanksPoly;
use crate::splitting::{splitting_census, Truncation};
use crate::zeta::{
    estimate_from_census, exact_l_polynomial, hprime_candidates, truncated_estimate, HApprox,
    MAX_EXACT_GENUS,
};

/// Canonical parameters of degree `d`: leading coefficient at most `(q-1)/2`
/// and not a Frobenius power, in canonical polynomial order.
pub fn canonical_parameters(q: u32, d: usize) -> impl Iterator<Item = ShanksPoly> {
    let half = (q - 1) / 2;
    let tail = (q as u64).pow(d as u32);
    (1..=half).flat_map(move |lead| {
        (0..tail).filter_map(move |mut r| {
            let mut coeffs = vec![0u32; d + 1];
            coeffs[d] = lead;
            for c in coeffs.iter_mut().take(d) {
                *c = (r % q as u64) as u32;
                r /= q as u64;
            }
            let a = ShanksPoly::new(Poly::from_coeffs(q, coeffs)).ok()?;
            (!a.is_frobenius_power()).then_some(a)
        })
    })
}

/// What a survey enumerates.
#[derive(Clone, Debug)]
pub struct SearchPlan {
    pub q: u32,
    pub deg_a: RangeInclusive<usize>,
    pub deg_i: Option<usize>,
    pub cube_free_only: bool,
    pub truncation: Truncation,
    pub target_hprime: Option<u128>,
}

impl SearchPlan {
    /// Trivial-index fields of one degree, with the truncation used for that degree.
    pub fn table_one(q: u32, d: usize) -> SearchPlan {
        let n = match (q, d) {
            (5, 4) | (7, 3) => 100_000,
            _ => 40_000,
        };
        SearchPlan {
            q,
            deg_a: d..=d,
            deg_i: Some(0),
            cube_free_only: true,
            truncation: Truncation::Count(n),
            target_hprime: None,
        }
    }
}

/// How `h'` was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exact,
    Estimate,
}

#[derive(Clone, Debug)]
pub struct SurveyRow {
    pub a: ShanksPoly,
    pub genus: u32,
    pub deg_i: usize,
    pub regulator: Regulator,
    pub hprime: Option<u128>,
    pub method: Method,
    pub split: u64,
    pub inert: u64,
    pub measure: Option<f64>,
    pub estimate: HApprox,
}

#[derive(Clone, Debug, Default)]
pub struct SurveyReport {
    pub rows: Vec<SurveyRow>,
    pub errors: Vec<(Poly, Error)>,
}

fn plan_fields(plan: &SearchPlan) -> Vec<ShanksPoly> {
    plan.deg_a
        .clone()
        .flat_map(|d| canonical_parameters(plan.q, d))
        .collect()
}

fn survey_one(plan: &SearchPlan, a: &ShanksPoly) -> Result<Option<SurveyRow>> {
    if plan.cube_free_only && !is_cube_free(&a.f_poly())? {
        return Ok(None);
    }
    let field = build_field(plan.q, a.a())?;
    if plan.deg_i.is_some_and(|i| i != field.index_degree()) {
        return Ok(None);
    }
    let census = splitting_census(&field, plan.truncation)?;
    let estimate = estimate_from_census(&field, &census)?;
    let r = field.regulator.exact();
    let (hprime, method) = if field.genus <= MAX_EXACT_GENUS {
        let h = exact_l_polynomial(&field)?.h() as u128;
        let hp = match r {
            Some(r) => Some(crate::invariants::class_number_relation(h, r)?),
            None => None,
        };
        (hp, Method::Exact)
    } else {
        (estimate.hprime_estimate, Method::Estimate)
    };
    if plan.target_hprime.is_some() && plan.target_hprime != hprime {
        return Ok(None);
    }
    let measure = match (hprime, r) {
        (Some(hp), Some(r)) => Some(max_measure(hp as u64, plan.q, field.genus, r)?),
        _ => None,
    };
    Ok(Some(SurveyRow {
        a: a.clone(),
        genus: field.genus,
        deg_i: field.index_degree(),
        regulator: field.regulator.clone(),
        hprime,
        method,
        split: census.split(),
        inert: census.inert(),
        measure,
        estimate,
    }))
}

/// One row per canonical parameter matching the plan, in canonical order.
pub fn survey(plan: &SearchPlan) -> SurveyReport {
    let results: Vec<(ShanksPoly, Result<Option<SurveyRow>>)> = plan_fields(plan)
        .into_par_iter()
        .map(|a| {
            let r = survey_one(plan, &a);
            (a, r)
        })
        .collect();
    let mut report = SurveyReport::default();
    for (a, r) in results {
        match r {
            Ok(Some(row)) => report.rows.push(row),
            Ok(None) => {}
            Err(e) => report.errors.push((a.a().clone(), e)),
        }
    }
    report
}

/// Largest `d` with `(√q-1)^{2(d-1)} <= d^2`: beyond it no cube-free field of
/// degree `d` can have `h = R = d^2`, since `g >= d - 1`.
pub fn class_number_one_cutoff(q: u32) -> usize {
    (2..=256usize)
        .filter(|&d| hw_scaled_bounds(q, (d - 1) as u32, 1).0 <= (d * d) as u128)
        .max()
        .unwrap_or(1)
}

/// Whether a cube-free field with `deg A = d` and `deg I = i` can have `h' = 1`.
pub fn class_number_one_admissible(q: u32, d: usize, i: usize) -> bool {
    if d < 2 || i + 1 > d || 2 * d < i + 2 {
        return false;
    }
    let g = (2 * d - i - 2) as u32;
    hw_scaled_bounds(q, g, 1).0 <= (d * d) as u128
}

/// For each index degree, the parameter degrees that survive the Hasse-Weil test.
pub fn class_number_one_table(q: u32) -> Vec<(usize, Vec<usize>)> {
    let cutoff = class_number_one_cutoff(q);
    (0..cutoff)
        .map(|i| {
            let ds: Vec<usize> = (2..=cutoff)
                .filter(|&d| class_number_one_admissible(q, d, i))
                .collect();
            (i, ds)
        })
        .filter(|(_, ds)| !ds.is_empty())
        .collect()
}

/// Default search depth: the Hasse-Weil cutoff, capped at 4 unless `full_depth`.
pub fn class_number_one_depth(q: u32, full_depth: bool) -> usize {
    let cutoff = class_number_one_cutoff(q);
    if full_depth {
        cutoff
    } else {
        cutoff.min(4)
    }
}

#[derive(Clone, Debug, Default)]
pub struct ClassNumberOneReport {
    pub q: u32,
    pub cutoff: usize,
    pub max_degree: usize,
    /// Fields with `h' = 1` and their index degree.
    pub found: Vec<(ShanksPoly, usize)>,
    /// Fields beyond the exact genus limit that the estimate could not rule out.
    pub unresolved: Vec<(ShanksPoly, HApprox)>,
    pub errors: Vec<(Poly, Error)>,
    pub examined: usize,
}

enum Verdict {
    Skip,
    One(usize),
    NotOne,
    Unresolved(HApprox),
}

fn class_number_one_verdict(q: u32, a: &ShanksPoly, prune: bool, trunc: Truncation) -> Result<Verdict> {
    if !is_cube_free(&a.f_poly())? {
        return Ok(Verdict::Skip);
    }
    let field = build_field(q, a.a())?;
    let d = field.deg_a();
    let i = field.index_degree();
    if prune && !class_number_one_admissible(q, d, i) {
        return Ok(Verdict::NotOne);
    }
    let r = field.regulator.exact().expect("cube-free fields have an exact regulator");
    if field.genus <= MAX_EXACT_GENUS {
        let h = exact_l_polynomial(&field)?.h() as u128;
        return Ok(if h == r as u128 { Verdict::One(i) } else { Verdict::NotOne });
    }
    let est = truncated_estimate(&field, trunc)?;
    let l2 = (est.l as u128).pow(2);
    if est.e > r as u128 + l2 || est.e + l2 < r as u128 {
        Ok(Verdict::NotOne)
    } else {
        Ok(Verdict::Unresolved(est))
    }
}

/// Cube-free canonical `A` of degree `2..=max_degree` with ideal class number 1.
/// Degree-one parameters (genus 0) always have class number 1 and are not listed.
pub fn search_class_number_one(q: u32, max_degree: usize, prune: bool) -> ClassNumberOneReport {
    let trunc = Truncation::Count(100_000);
    let params: Vec<ShanksPoly> = (2..=max_degree)
        .flat_map(|d| canonical_parameters(q, d))
        .collect();
    let verdicts: Vec<(ShanksPoly, Result<Verdict>)> = params
        .into_par_iter()
        .map(|a| {
            let v = class_number_one_verdict(q, &a, prune, trunc);
            (a, v)
        })
        .collect();
    let mut report = ClassNumberOneReport {
        q,
        cutoff: class_number_one_cutoff(q),
        max_degree,
        ..Default::default()
    };
    for (a, v) in verdicts {
        match v {
            Ok(Verdict::Skip) => continue,
            Ok(Verdict::One(i)) => report.found.push((a, i)),
            Ok(Verdict::NotOne) => {}
            Ok(Verdict::Unresolved(est)) => report.unresolved.push((a, est)),
            Err(e) => report.errors.push((a.a().clone(), e)),
        }
        report.examined += 1;
    }
    report
}

#[derive(Clone, Debug)]
pub struct LargeIndexRow {
    pub a: ShanksPoly,
    pub deg_i: usize,
    pub genus: u32,
    pub reduction: Poly,
    pub regulator: Regulator,
    pub h: u128,
    /// `(R, h')` for the candidates that divide `h` with `h'` a norm.
    pub consistent: Vec<(u64, u128)>,
}

/// Fields of one degree whose `A^2 + 3A + 9` is not cube-free.
pub fn large_index_scan(q: u32, deg_a: usize) -> (Vec<LargeIndexRow>, Vec<(Poly, Error)>) {
    let params: Vec<ShanksPoly> = canonical_parameters(q, deg_a).collect();
    let results: Vec<(ShanksPoly, Result<Option<LargeIndexRow>>)> = params
        .into_par_iter()
        .map(|a| {
            let r = large_index_row(q, &a);
            (a, r)
        })
        .collect();
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    for (a, r) in results {
        match r {
            Ok(Some(row)) => rows.push(row),
            Ok(None) => {}
            Err(e) => errors.push((a.a().clone(), e)),
        }
    }
    (rows, errors)
}

/// The large-index analysis of one parameter, or `None` when cube-free.
pub fn large_index_row(q: u32, a: &ShanksPoly) -> Result<Option<LargeIndexRow>> {
    if is_cube_free(&a.f_poly())? {
        return Ok(None);
    }
    let field: ShanksField = build_field(q, a.a())?;
    let h = exact_l_polynomial(&field)?.h() as u128;
    let consistent = hprime_candidates(h, &field.regulator);
    if consistent.is_empty() {
        return Err(Error::Inconsistency(format!(
            "A = {a}: no regulator candidate in {} fits h = {h}",
            field.regulator
        )));
    }
    Ok(Some(LargeIndexRow {
        a: a.clone(),
        deg_i: field.index_degree(),
        genus: field.genus,
        reduction: field.reduction.clone(),
        regulator: field.regulator.clone(),
        h,
        consistent,
    }))
}
