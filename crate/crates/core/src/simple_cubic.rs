//! Simple cubic families, the Shanks polynomial and its standard form.

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::ff_poly::{check_modulus, factor, FieldElem, Poly};

/// A cubic in `x` with coefficients in F_q[t], stored ascending in `x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XCubic {
    pub coeffs: [Poly; 4],
}

impl XCubic {
    pub fn modulus(&self) -> u32 {
        self.coeffs[3].modulus()
    }

    pub fn as_slice(&self) -> &[Poly] {
        &self.coeffs
    }
}

impl fmt::Display for XCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..4).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let x = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i > 0 && c.is_one() {
                write!(f, "{x}")?;
            } else if i > 0 && c.degree() == Some(0) {
                write!(f, "{c}{x}")?;
            } else if i > 0 {
                write!(f, "({c}){x}")?;
            } else {
                write!(f, "{c}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Parameters `(P, c, n, k)` of `x^3 + P x^2 + (P + c + n - k^3) x + c`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleCubicParams {
    p: Poly,
    c: FieldElem,
    n: FieldElem,
    k: FieldElem,
}

impl SimpleCubicParams {
    pub fn new(p: Poly, c: FieldElem, n: FieldElem, k: FieldElem) -> Result<Self> {
        let q = p.modulus();
        check_modulus(q)?;
        if [c, n, k].iter().any(|e| e.modulus() != q) {
            return domain("parameters over different fields");
        }
        if p.degree().unwrap_or(0) == 0 {
            return domain("P must have degree at least 1");
        }
        if c.is_zero() || n.is_zero() || k.is_zero() {
            return domain("c, n and k must be nonzero");
        }
        Ok(SimpleCubicParams { p, c, n, k })
    }

    pub fn p(&self) -> &Poly {
        &self.p
    }

    pub fn c(&self) -> FieldElem {
        self.c
    }

    pub fn n(&self) -> FieldElem {
        self.n
    }

    pub fn k(&self) -> FieldElem {
        self.k
    }

    /// `b = c + n - k^3`.
    pub fn b(&self) -> FieldElem {
        self.c + self.n - self.k.pow(3)
    }
}

/// `x^3 + P x^2 + (P + c + n - k^3) x + c`.
pub fn build_simple_cubic(params: &SimpleCubicParams) -> XCubic {
    let q = params.p.modulus();
    let b = Poly::constant(q, params.b().value() as i64);
    XCubic {
        coeffs: [
            Poly::constant(q, params.c.value() as i64),
            &params.p + &b,
            params.p.clone(),
            Poly::one(q),
        ],
    }
}

/// `x^3 - A x^2 - (A + b) x - c`.
pub fn simple_cubic_from_abc(a: &Poly, b: FieldElem, c: FieldElem) -> Result<XCubic> {
    let q = a.modulus();
    if a.degree().unwrap_or(0) == 0 {
        return domain("A must have degree at least 1");
    }
    if c.is_zero() {
        return domain("c must be nonzero");
    }
    let bp = Poly::constant(q, b.value() as i64);
    Ok(XCubic {
        coeffs: [
            Poly::constant(q, -(c.value() as i64)),
            -(a + &bp),
            -a,
            Poly::one(q),
        ],
    })
}

/// The discriminant of the simple cubic as a quartic in the indeterminate `P`,
/// returned as a polynomial over F_q (ascending coefficients).
pub fn discriminant_in_p(c: FieldElem, k: FieldElem, n: FieldElem) -> Poly {
    let q = c.modulus();
    let c = c.value() as i64;
    let k3 = k.pow(3).value() as i64;
    let n = n.value() as i64;
    let m = k3 - c - n;
    Poly::from_i64(
        q,
        &[
            4 * m * m * m - 27 * c * c,
            18 * c * (c + n - k3) - 12 * m * m,
            6 * c - 12 * n + 12 * k3 + m * m,
            2 * n - 2 * c - 2 * k3 - 4,
            1,
        ],
    )
}

/// Writes a monic quartic as `(P^2 + a P + b)^2` when possible.
pub fn quartic_square_root(quartic: &Poly) -> Option<(FieldElem, FieldElem)> {
    let q = quartic.modulus();
    if quartic.degree() != Some(4) || !quartic.is_monic() {
        return None;
    }
    let coef = |i| FieldElem::new(quartic.coeff(i) as i64, q);
    let two = FieldElem::new(2, q);
    let two_inv = two.inv().ok()?;
    let a = coef(3) * two_inv;
    let b = (coef(2) - a * a) * two_inv;
    (coef(1) == two * a * b && coef(0) == b * b).then_some((a, b))
}

/// All `(c, k, n)` in (F_q^*)^3 whose discriminant quartic is a square.
pub fn classify_parameters(q: u32) -> Result<Vec<(FieldElem, FieldElem, FieldElem)>> {
    check_modulus(q)?;
    let mut out = Vec::new();
    for c in 1..q as i64 {
        for k in 1..q as i64 {
            for n in 1..q as i64 {
                let (c, k, n) = (FieldElem::new(c, q), FieldElem::new(k, q), FieldElem::new(n, q));
                if quartic_square_root(&discriminant_in_p(c, k, n)).is_some() {
                    out.push((c, k, n));
                }
            }
        }
    }
    Ok(out)
}

/// Parameter `A` of the Shanks cubic `x^3 - A x^2 - (A+3) x - 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShanksPoly {
    a: Poly,
}

impl ShanksPoly {
    pub fn new(a: Poly) -> Result<Self> {
        check_modulus(a.modulus())?;
        if a.degree().unwrap_or(0) == 0 {
            return domain(format!("A = {a} must have degree at least 1"));
        }
        Ok(ShanksPoly { a })
    }

    pub fn parse(s: &str, q: u32) -> Result<Self> {
        ShanksPoly::new(Poly::parse(s, q)?)
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn q(&self) -> u32 {
        self.a.modulus()
    }

    pub fn deg_a(&self) -> usize {
        self.a.degree().expect("nonconstant")
    }

    pub fn cubic(&self) -> XCubic {
        simple_cubic_from_abc(&self.a, FieldElem::new(3, self.q()), FieldElem::one(self.q()))
            .expect("validated")
    }

    /// `A^2 + 3A + 9`; the polynomial discriminant is its square.
    pub fn f_poly(&self) -> Poly {
        let q = self.q();
        &(&(&self.a * &self.a) + &self.a.scale(3)) + &Poly::constant(q, 9)
    }

    /// `A = B^p` in the sense that `A(t) = B(t^p)`; the field of `A` is then a
    /// Frobenius twist of the field of `B`.
    pub fn is_frobenius_power(&self) -> bool {
        self.a.pth_root().is_some()
    }

    /// Canonical parameter for the same field: strip Frobenius powers, then
    /// pick between `A` and `-A-3` (which define the same field) the one with
    /// leading coefficient at most `(q-1)/2`.
    pub fn canonical(&self) -> ShanksPoly {
        let q = self.q();
        let mut a = self.a.clone();
        while let Some(r) = a.pth_root() {
            a = r;
        }
        if a.lead() > (q - 1) / 2 {
            a = &(-&a) - &Poly::constant(q, 3);
        }
        ShanksPoly { a }
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }
}

impl fmt::Display for ShanksPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.a)
    }
}

/// Depressed form `y^3 - 𝒜 y + ℬ` of a Shanks cubic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardForm {
    pub a: Poly,
    pub b: Poly,
}

impl StandardForm {
    /// `4𝒜^3 - 27ℬ^2`.
    pub fn discriminant(&self) -> Poly {
        let a3 = &(&self.a * &self.a) * &self.a;
        &a3.scale(4) - &(&self.b * &self.b).scale(27)
    }

    pub fn cubic(&self) -> XCubic {
        let q = self.a.modulus();
        XCubic {
            coeffs: [self.b.clone(), -&self.a, Poly::zero(q), Poly::one(q)],
        }
    }
}

/// `𝒜 = (A^2+3A+9)/3`, `ℬ = -(2A+3)(A^2+3A+9)/27`, from `x = y + A/3`.
pub fn standard_form(f: &ShanksPoly) -> StandardForm {
    let q = f.q();
    let ff = f.f_poly();
    let inv3 = FieldElem::new(3, q).inv().expect("q >= 5").value();
    let minus_inv27 = (-FieldElem::new(27, q).inv().expect("q >= 5")).value();
    let two_a_3 = &f.a.scale(2) + &Poly::constant(q, 3);
    StandardForm {
        a: ff.scale(inv3),
        b: (&two_a_3 * &ff).scale(minus_inv27),
    }
}

/// Removes the largest monic `Q` with `Q^2 | 𝒜` and `Q^3 | ℬ`.
pub fn reduce_standard_form(sf: &StandardForm) -> Result<(StandardForm, Poly)> {
    let q = sf.a.modulus();
    if sf.a.is_zero() || sf.b.is_zero() {
        return domain("standard form with a zero coefficient");
    }
    let mut big_q = Poly::one(q);
    for (p, e) in factor(&sf.a)?.factors {
        let m = (e / 2).min(sf.b.valuation(&p) / 3);
        if m > 0 {
            big_q = &big_q * &p.pow(m as u64);
        }
    }
    if big_q.is_one() {
        return Ok((sf.clone(), big_q));
    }
    let q2 = &big_q * &big_q;
    let q3 = &q2 * &big_q;
    let a = sf.a.exact_div(&q2).expect("Q^2 divides A");
    let b = sf.b.exact_div(&q3).expect("Q^3 divides B");
    Ok((StandardForm { a, b }, big_q))
}

/// Degrees of the three roots of the cubic as Laurent series in `1/t`, from
/// the Newton polygon of the points `(i, deg c_i)`. Sorted descending.
pub fn root_degrees_at_infinity(cubic: &XCubic) -> Result<[i64; 3]> {
    let c = &cubic.coeffs;
    if !c[3].is_one() {
        return domain("cubic must be monic in x");
    }
    if c[0].degree() != Some(0) {
        return domain("not a simple cubic: the norm term is not a nonzero constant");
    }
    let pts: Vec<(i64, i64)> = (0..4)
        .filter(|&i| !c[i].is_zero())
        .map(|i| (i as i64, c[i].deg_i64()))
        .collect();
    // upper convex hull from x = 0 to x = 3
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross >= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut degrees = Vec::with_capacity(3);
    for w in hull.windows(2) {
        let (dx, dy) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
        if dy % dx != 0 {
            return domain("root degrees are not integral");
        }
        degrees.extend(std::iter::repeat_n(-dy / dx, dx as usize));
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Ok([degrees[0], degrees[1], degrees[2]])
}

/// `|det [[n, -n], [n, 0]]| = n^2` for root degrees `{n, 0, -n}`.
pub fn regulator_from_root_degrees(degrees: &[i64; 3]) -> Result<u64> {
    if degrees.iter().sum::<i64>() != 0 {
        return domain("root degrees do not sum to zero");
    }
    let mut d = *degrees;
    d.sort_unstable();
    let n = d[2];
    if d != [-n, 0, n] || n < 1 {
        return Err(Error::Domain(format!("root degrees {d:?} are not of the form (n, 0, -n)")));
    }
    let n = n as u64;
    Ok(n * n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff_poly::poly_gcd;

    fn fe(v: i64, q: u32) -> FieldElem {
        FieldElem::new(v, q)
    }

    #[test]
    fn general_constructor() {
        let p = SimpleCubicParams::new(Poly::t(5), fe(4, 5), fe(4, 5), fe(1, 5)).unwrap();
        let g = build_simple_cubic(&p);
        assert_eq!(g.coeffs[1].to_string(), "t+2");
        assert_eq!(g.coeffs[0].to_string(), "4");
        let p = SimpleCubicParams::new(Poly::t(7), fe(1, 7), fe(1, 7), fe(1, 7)).unwrap();
        assert_eq!(build_simple_cubic(&p).coeffs[1].to_string(), "t+1");
        assert!(SimpleCubicParams::new(Poly::constant(7, 2), fe(1, 7), fe(1, 7), fe(1, 7)).is_err());
        assert!(SimpleCubicParams::new(Poly::t(7), fe(0, 7), fe(1, 7), fe(1, 7)).is_err());
    }

    #[test]
    fn shanks_specialization() {
        // c = -1, k^3 - n = 2, P = -A gives the Shanks cubic.
        let q = 7;
        let a = Poly::parse("t^2+3", q).unwrap();
        let k = fe(2, q);
        let n = k.pow(3) - fe(2, q);
        let p = SimpleCubicParams::new(-&a, fe(-1, q), n, k).unwrap();
        assert_eq!(build_simple_cubic(&p), ShanksPoly::new(a).unwrap().cubic());
    }

    /// Discriminant of x^3 + u x^2 + v x + w with u, v, w polynomials.
    fn cubic_disc(u: &Poly, v: &Poly, w: &Poly) -> Poly {
        let m = |a: &Poly, b: &Poly| a * b;
        let t1 = m(&m(u, u), &m(v, v));
        let t2 = m(&m(v, v), v).scale(4);
        let t3 = m(&m(&m(u, u), u), w).scale(4);
        let t4 = m(w, w).scale(27);
        let t5 = m(&m(u, v), w).scale(18);
        &(&(&(&t1 - &t2) - &t3) - &t4) + &t5
    }

    #[test]
    fn quartic_matches_direct_discriminant() {
        for q in [5u32, 7, 11] {
            for c in 1..q as i64 {
                for k in 1..q as i64 {
                    for n in [1, 2, q as i64 - 1] {
                        let (c, k, n) = (fe(c, q), fe(k, q), fe(n, q));
                        let b = c + n - k.pow(3);
                        let p = Poly::t(q);
                        let direct = cubic_disc(
                            &p,
                            &(&p + &Poly::constant(q, b.value() as i64)),
                            &Poly::constant(q, c.value() as i64),
                        );
                        assert_eq!(discriminant_in_p(c, k, n), direct);
                    }
                }
            }
        }
    }

    #[test]
    fn quartic_examples() {
        let q = 5;
        let d = discriminant_in_p(fe(4, q), fe(1, q), fe(4, q));
        let s = Poly::parse("t^2-3t+9", q).unwrap();
        assert_eq!(d, &s * &s);
        let d = discriminant_in_p(fe(1, 7), fe(1, 7), fe(1, 7));
        assert_eq!(d.coeff(0), 4);
        assert!(quartic_square_root(&discriminant_in_p(fe(1, 5), fe(1, 5), fe(1, 5))).is_none());
    }

    #[test]
    fn classification_small() {
        // k = 3 gives n = k^3 - 2 = 0 over F_5, outside F_5^*
        let r = classify_parameters(5).unwrap();
        assert_eq!(r.len(), 3);
        for (c, k, n) in r {
            assert_eq!(c.value(), 4);
            assert_eq!(n, k.pow(3) + fe(3, 5));
        }
        assert_eq!(classify_parameters(7).unwrap().len(), 6);
    }

    #[test]
    fn standard_form_examples() {
        let q = 5;
        let f = ShanksPoly::parse("t^2", q).unwrap();
        let sf = standard_form(&f);
        assert_eq!(sf.a.to_string(), "2t^4+t^2+3");
        let expect_b = &Poly::parse("2t^2+3", q).unwrap() * &Poly::parse("t^4+3t^2+9", q).unwrap();
        assert_eq!(sf.b, expect_b.scale(2));
        assert_eq!(sf.discriminant(), &f.f_poly() * &f.f_poly());
        let (red, big_q) = reduce_standard_form(&sf).unwrap();
        assert!(big_q.is_one());
        assert_eq!(red, sf);

        let f = ShanksPoly::parse("t", 7).unwrap();
        assert_eq!(standard_form(&f).a, Poly::parse("t^2+3t+9", 7).unwrap().scale(5));
    }

    #[test]
    fn reduction_of_non_cube_free() {
        let f = ShanksPoly::parse("t^3+5", 7).unwrap();
        let (red, big_q) = reduce_standard_form(&standard_form(&f)).unwrap();
        assert_eq!(big_q, Poly::t(7));
        assert_eq!(red.a.degree(), Some(4));
        assert_eq!(red.b.degree(), Some(6));
    }

    #[test]
    fn coprime_factors() {
        for s in ["t^2", "t^3+t+1", "3t^2+4t+1", "t^3+5"] {
            let f = ShanksPoly::parse(s, 7).unwrap();
            let two_a_3 = &f.a().scale(2) + &Poly::constant(7, 3);
            assert!(poly_gcd(&two_a_3, &f.f_poly()).unwrap().is_one());
        }
    }

    #[test]
    fn root_degrees() {
        let f = ShanksPoly::parse("t^3+t", 5).unwrap();
        assert_eq!(root_degrees_at_infinity(&f.cubic()).unwrap(), [3, 0, -3]);
        let f = ShanksPoly::parse("2t^2", 7).unwrap();
        let d = root_degrees_at_infinity(&f.cubic()).unwrap();
        assert_eq!(d, [2, 0, -2]);
        assert_eq!(regulator_from_root_degrees(&d).unwrap(), 4);
        assert_eq!(regulator_from_root_degrees(&[1, 0, -1]).unwrap(), 1);
        assert_eq!(regulator_from_root_degrees(&[11, 0, -11]).unwrap(), 121);
        assert!(regulator_from_root_degrees(&[2, 0, -1]).is_err());
        let bad = XCubic {
            coeffs: [Poly::t(5), Poly::t(5), Poly::t(5), Poly::one(5)],
        };
        assert!(root_degrees_at_infinity(&bad).is_err());
    }

    #[test]
    fn reflection_defines_same_field() {
        // f_{-A-3}(x) = -x^3 f_A(1/x): the coefficient lists are reversed and negated
        let q = 7;
        let a = ShanksPoly::parse("3t^2+4t+1", q).unwrap();
        let b = ShanksPoly::new(&(-a.a()) - &Poly::constant(q, 3)).unwrap();
        let fa = a.cubic();
        let fb = b.cubic();
        for i in 0..4 {
            assert_eq!(fb.coeffs[i], -&fa.coeffs[3 - i]);
        }
    }

    #[test]
    fn canonical_representatives() {
        let q = 5;
        let f = ShanksPoly::parse("t^10+2", q).unwrap();
        assert!(f.is_frobenius_power());
        assert_eq!(f.canonical().to_string(), "t^2+2");
        // -A-3 defines the same field
        let f = ShanksPoly::parse("4t^2+2", q).unwrap();
        assert_eq!(f.canonical().to_string(), "t^2");
        let c = ShanksPoly::parse("2t^3+t", q).unwrap();
        assert!(c.is_canonical());
        assert_eq!(c.canonical().canonical(), c.canonical());
    }
}
