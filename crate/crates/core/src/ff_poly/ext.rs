//! Extensions F_{q^d} = F_q[t]/(m) and root counting of polynomials over them.

use super::factor::is_irreducible;
use super::irreducible::first_irreducible;
use super::poly::Poly;
use crate::error::{domain, Result};

/// Element of F_q[t]/(m): a residue of degree below `deg m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtFieldElem {
    pub rep: Poly,
}

/// Context for F_q[t]/(m) with `m` monic irreducible.
#[derive(Clone, Debug)]
pub struct ExtField {
    modulus: Poly,
}

impl ExtField {
    pub fn new(modulus: &Poly) -> Result<Self> {
        if !is_irreducible(modulus) {
            return domain(format!("modulus {modulus} is not irreducible"));
        }
        Ok(ExtField {
            modulus: modulus.monic(),
        })
    }

    /// F_{q^d} over the first monic irreducible of degree `d`.
    pub fn canonical(q: u32, d: usize) -> Result<Self> {
        super::field::check_modulus(q)?;
        if d == 0 {
            return domain("extension degree must be positive");
        }
        Ok(ExtField {
            modulus: first_irreducible(q, d),
        })
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn q(&self) -> u32 {
        self.modulus.modulus()
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    /// Field size q^d.
    pub fn order(&self) -> u128 {
        (self.q() as u128).pow(self.degree() as u32)
    }

    pub fn elem(&self, p: &Poly) -> ExtFieldElem {
        ExtFieldElem {
            rep: p.rem(&self.modulus).expect("nonzero modulus"),
        }
    }

    pub fn zero(&self) -> ExtFieldElem {
        ExtFieldElem {
            rep: Poly::zero(self.q()),
        }
    }

    pub fn one(&self) -> ExtFieldElem {
        ExtFieldElem {
            rep: Poly::one(self.q()),
        }
    }

    pub fn add(&self, a: &ExtFieldElem, b: &ExtFieldElem) -> ExtFieldElem {
        ExtFieldElem { rep: &a.rep + &b.rep }
    }

    pub fn sub(&self, a: &ExtFieldElem, b: &ExtFieldElem) -> ExtFieldElem {
        ExtFieldElem { rep: &a.rep - &b.rep }
    }

    pub fn neg(&self, a: &ExtFieldElem) -> ExtFieldElem {
        ExtFieldElem { rep: -&a.rep }
    }

    pub fn mul(&self, a: &ExtFieldElem, b: &ExtFieldElem) -> ExtFieldElem {
        ExtFieldElem {
            rep: a.rep.mul_mod(&b.rep, &self.modulus).expect("nonzero modulus"),
        }
    }

    pub fn inv(&self, a: &ExtFieldElem) -> Result<ExtFieldElem> {
        match a.rep.inv_mod(&self.modulus) {
            Some(rep) => Ok(ExtFieldElem { rep }),
            None => domain("inverse of zero in extension field"),
        }
    }

    /// `a^e` for an exponent given as u128 (q^d may exceed u64).
    pub fn pow(&self, a: &ExtFieldElem, mut e: u128) -> ExtFieldElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn frobenius(&self, a: &ExtFieldElem) -> ExtFieldElem {
        self.pow(a, self.q() as u128)
    }

    pub fn is_zero(&self, a: &ExtFieldElem) -> bool {
        a.rep.is_zero()
    }

    /// Euler's criterion in F_{q^d}; zero counts as a square.
    pub fn is_square(&self, a: &ExtFieldElem) -> bool {
        if a.rep.is_zero() {
            return true;
        }
        self.pow(a, (self.order() - 1) / 2).rep.is_one()
    }
}

/// Polynomial in `x` over an extension field, ascending, normalized.
type XPoly = Vec<ExtFieldElem>;

fn trim(k: &ExtField, mut f: XPoly) -> XPoly {
    while f.last().is_some_and(|c| k.is_zero(c)) {
        f.pop();
    }
    f
}

fn x_rem(k: &ExtField, f: &XPoly, g: &XPoly) -> Result<XPoly> {
    let mut r = f.clone();
    let gn = g.len() - 1;
    let inv_lead = k.inv(&g[gn])?;
    while r.len() > gn {
        let top = r.len() - 1;
        let c = k.mul(&r[top], &inv_lead);
        for (j, gc) in g.iter().enumerate() {
            let slot = top - gn + j;
            r[slot] = k.sub(&r[slot], &k.mul(&c, gc));
        }
        r = trim(k, r);
    }
    Ok(r)
}

fn x_mulmod(k: &ExtField, a: &XPoly, b: &XPoly, g: &XPoly) -> Result<XPoly> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut prod = vec![k.zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            prod[i + j] = k.add(&prod[i + j], &k.mul(ai, bj));
        }
    }
    x_rem(k, &trim(k, prod), g)
}

fn x_powmod(k: &ExtField, a: &XPoly, mut e: u64, g: &XPoly) -> Result<XPoly> {
    let mut base = x_rem(k, a, g)?;
    let mut acc = x_rem(k, &vec![k.one()], g)?;
    while e > 0 {
        if e & 1 == 1 {
            acc = x_mulmod(k, &acc, &base, g)?;
        }
        e >>= 1;
        if e > 0 {
            base = x_mulmod(k, &base, &base, g)?;
        }
    }
    Ok(acc)
}

fn x_gcd_degree(k: &ExtField, a: &XPoly, b: &XPoly) -> Result<usize> {
    let (mut x, mut y) = (trim(k, a.clone()), trim(k, b.clone()));
    while !y.is_empty() {
        let r = x_rem(k, &x, &y)?;
        x = std::mem::replace(&mut y, r);
    }
    Ok(x.len().saturating_sub(1))
}

/// Number of distinct roots in F_q[t]/(P) of the polynomial in `x` whose
/// ascending coefficients (each a polynomial in `t`) are `g`.
///
/// Computed as `deg gcd(x^(q^nu) - x, g mod P)` with `nu = deg P`.
pub fn count_roots_in_residue_field(g: &[Poly], p: &Poly) -> Result<usize> {
    let k = ExtField::new(p)?;
    let reduced = trim(&k, g.iter().map(|c| k.elem(c)).collect());
    if reduced.len() != g.len() || g.is_empty() {
        return domain("leading coefficient vanishes modulo P");
    }
    if reduced.len() == 1 {
        return Ok(0);
    }
    let q = k.q() as u64;
    let x: XPoly = vec![k.zero(), k.one()];
    let mut h = x.clone();
    for _ in 0..k.degree() {
        h = x_powmod(&k, &h, q, &reduced)?;
    }
    let mut diff = h;
    diff.resize(diff.len().max(2), k.zero());
    diff[1] = k.sub(&diff[1], &k.one());
    let diff = trim(&k, diff);
    if diff.is_empty() {
        // every element of the residue field is a root
        return Ok(reduced.len() - 1);
    }
    x_gcd_degree(&k, &diff, &reduced)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, q: u32) -> Poly {
        Poly::parse(s, q).unwrap()
    }

    fn consts(q: u32, cs: &[i64]) -> Vec<Poly> {
        cs.iter().map(|&c| Poly::constant(q, c)).collect()
    }

    #[test]
    fn shanks_standard_form_at_t() {
        // x^3 + 2x + 4 over F_5 has no roots
        let g = consts(5, &[4, 2, 0, 1]);
        assert_eq!(count_roots_in_residue_field(&g, &p("t", 5)).unwrap(), 0);
    }

    #[test]
    fn split_cubic_mod_linear() {
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        let g = consts(7, &[-6, 11, -6, 1]);
        assert_eq!(count_roots_in_residue_field(&g, &p("t+4", 7)).unwrap(), 3);
    }

    #[test]
    fn non_cube_has_no_root() {
        let g = consts(7, &[-3, 0, 0, 1]);
        assert_eq!(count_roots_in_residue_field(&g, &p("t", 7)).unwrap(), 0);
        // still a non-cube in F_49, but a cube in F_343
        assert_eq!(count_roots_in_residue_field(&g, &p("t^2+1", 7)).unwrap(), 0);
        assert_eq!(count_roots_in_residue_field(&g, &p("t^3+2", 7)).unwrap(), 3);
    }

    #[test]
    fn errors() {
        let g = consts(7, &[1, 0, 0, 1]);
        assert!(count_roots_in_residue_field(&g, &p("t^2-1", 7)).is_err());
        let g = vec![p("1", 7), p("0", 7), p("0", 7), p("t", 7)];
        assert!(count_roots_in_residue_field(&g, &p("t", 7)).is_err());
    }

    #[test]
    fn frobenius_fixes_everything() {
        let k = ExtField::canonical(5, 3).unwrap();
        assert_eq!(k.modulus().degree(), Some(3));
        for s in ["t", "t^2+3", "2t^2+t+4", "1"] {
            let a = k.elem(&p(s, 5));
            assert_eq!(k.pow(&a, k.order()), a);
        }
    }
}
