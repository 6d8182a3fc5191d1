mod common;

use proptest::prelude::*;

use cubicff::ff_poly::{
    count_roots_in_residue_field, factor, is_cube_free, is_irreducible, poly_gcd, FieldElem, Poly,
};
use cubicff::invariants::build_field;
use cubicff::search::{class_number_one_admissible, search_class_number_one};
use cubicff::simple_cubic::{
    discriminant_in_p, quartic_square_root, reduce_standard_form, regulator_from_root_degrees,
    root_degrees_at_infinity, standard_form, ShanksPoly,
};
use cubicff::splitting::Truncation;
use cubicff::zeta::{exact_l_polynomial, truncated_estimate};

fn modulus() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![5u32, 7, 11, 13])
}

fn poly_in(q: u32, max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(0..q, 0..=max_len).prop_map(move |c| Poly::from_coeffs(q, c))
}

fn nonzero_in(q: u32, max_len: usize) -> impl Strategy<Value = Poly> {
    poly_in(q, max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn q_and<S: Strategy, F: Fn(u32) -> S>(f: F) -> impl Strategy<Value = (u32, S::Value)> {
    modulus().prop_flat_map(move |q| (Just(q), f(q)))
}

/// A Shanks parameter of degree `1..=max_deg`.
fn shanks(q: u32, max_deg: usize) -> impl Strategy<Value = ShanksPoly> {
    (1..=max_deg, 1..q)
        .prop_flat_map(move |(d, lead)| {
            prop::collection::vec(0..q, d).prop_map(move |mut c| {
                c.push(lead);
                Poly::from_coeffs(q, c)
            })
        })
        .prop_map(|a| ShanksPoly::new(a).unwrap())
}

fn monic_irreducible(q: u32, max_deg: usize) -> impl Strategy<Value = Poly> {
    (1..=max_deg)
        .prop_flat_map(move |d| prop::collection::vec(0..q, d))
        .prop_map(move |mut c| {
            c.push(1);
            Poly::from_coeffs(q, c)
        })
        .prop_filter("irreducible", is_irreducible)
}

/// Evaluates `sum g_i x^i` at the residue `x` modulo `p`.
fn eval_mod(g: &[Poly], x: &Poly, p: &Poly) -> Poly {
    g.iter().rev().fold(Poly::zero(p.modulus()), |acc, c| {
        (&(&acc * x) + c).rem(p).unwrap()
    })
}

fn residues(p: &Poly) -> Vec<Poly> {
    let q = p.modulus();
    let n = p.degree().unwrap();
    (0..(q as u64).pow(n as u32))
        .map(|mut r| {
            let c = (0..n)
                .map(|_| {
                    let v = (r % q as u64) as u32;
                    r /= q as u64;
                    v
                })
                .collect();
            Poly::from_coeffs(q, c)
        })
        .collect()
}

proptest! {
    #[test]
    fn factorization_round_trip((_, f) in q_and(|q| nonzero_in(q, 9))) {
        let fac = factor(&f).unwrap();
        prop_assert_eq!(fac.expand(), f.clone());
        for (p, m) in &fac.factors {
            prop_assert!(p.is_monic() && is_irreducible(p) && *m >= 1);
        }
        let cube_free = fac.factors.iter().all(|(_, m)| *m < 3);
        prop_assert_eq!(is_cube_free(&f).unwrap(), cube_free);
    }

    #[test]
    fn gcd_properties((_, (a, b, c)) in q_and(|q| (nonzero_in(q, 6), nonzero_in(q, 6), nonzero_in(q, 4)))) {
        let g = poly_gcd(&a, &b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert_eq!(&g, &poly_gcd(&b, &a).unwrap());
        let scaled = poly_gcd(&(&a * &c), &(&b * &c)).unwrap();
        prop_assert_eq!(scaled, &g * &c.monic());
    }

    #[test]
    fn root_count_matches_exhaustive(
        (_, (p, g)) in prop::sample::select(vec![5u32, 7]).prop_flat_map(|q| {
            (Just(q), (monic_irreducible(q, 2), prop::collection::vec(poly_in(q, 3), 3)))
        })
    ) {
        let q = p.modulus();
        let mut cubic = g.clone();
        cubic.push(Poly::one(q));
        let brute = residues(&p).iter().filter(|x| eval_mod(&cubic, x, &p).is_zero()).count();
        prop_assert_eq!(count_roots_in_residue_field(&cubic, &p).unwrap(), brute);
    }

    #[test]
    fn frobenius_identities((q, (m, a, b)) in q_and(|q| (monic_irreducible(q, 4), poly_in(q, 6), poly_in(q, 6)))) {
        let sum = (&a + &b).frobenius_mod(&m).unwrap();
        let parts = (&a.frobenius_mod(&m).unwrap() + &b.frobenius_mod(&m).unwrap()).rem(&m).unwrap();
        prop_assert_eq!(sum, parts);
        // t^(q^d) = t in F_q[t]/(m)
        let d = m.degree().unwrap();
        let mut x = Poly::t(q).rem(&m).unwrap();
        for _ in 0..d {
            x = x.frobenius_mod(&m).unwrap();
        }
        prop_assert_eq!(x, Poly::t(q).rem(&m).unwrap());
    }

    #[test]
    fn standard_form_discriminant((_, a) in q_and(|q| shanks(q, 5))) {
        let f = a.f_poly();
        let sf = standard_form(&a);
        prop_assert_eq!(sf.discriminant(), &f * &f);
        let (red, big_q) = reduce_standard_form(&sf).unwrap();
        let q2 = &big_q * &big_q;
        prop_assert_eq!(&red.a * &q2, sf.a.clone());
        prop_assert_eq!(&red.b * &(&q2 * &big_q), sf.b.clone());
        // nothing is left to remove
        let (again, one) = reduce_standard_form(&red).unwrap();
        prop_assert!(one.is_one());
        prop_assert_eq!(again, red);
    }

    #[test]
    fn square_discriminants_factor((q, (c, k, n)) in q_and(|q| (1..q, 1..q, 1..q))) {
        let fe = |v: u32| FieldElem::new(v as i64, q);
        let quartic = discriminant_in_p(fe(c), fe(k), fe(n));
        match quartic_square_root(&quartic) {
            Some((a, b)) => {
                let s = Poly::from_coeffs(q, vec![b.value(), a.value(), 1]);
                prop_assert_eq!(&s * &s, quartic);
                prop_assert_eq!(c, q - 1);
                prop_assert_eq!(fe(n), fe(k).pow(3) - fe(2));
            }
            None => prop_assert!(c != q - 1 || fe(n) != fe(k).pow(3) - fe(2)),
        }
    }

    #[test]
    fn canonical_is_idempotent((_, a) in q_and(|q| shanks(q, 4))) {
        let c = a.canonical();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.canonical(), c.clone());
        prop_assert!(c.deg_a() <= a.deg_a());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn genus_bounds_and_regulator((q, a) in q_and(|q| shanks(q, 5))) {
        prop_assume!(!a.is_frobenius_power() && a.deg_a() >= 2);
        prop_assume!(is_cube_free(&a.f_poly()).unwrap());
        let k = build_field(q, a.a()).unwrap();
        let d = a.deg_a() as u32;
        prop_assert!(d - 1 <= k.genus && k.genus <= 2 * d - 2);
        prop_assert_eq!(k.genus as usize, 2 * a.deg_a() - k.index_degree() - 2);
        let roots = root_degrees_at_infinity(&a.cubic()).unwrap();
        prop_assert_eq!(roots.iter().sum::<i64>(), 0);
        prop_assert_eq!(regulator_from_root_degrees(&roots).unwrap(), (d * d) as u64);
        prop_assert_eq!(k.regulator.exact(), Some((d * d) as u64));
    }

    #[test]
    fn reflected_parameter_gives_same_field((q, a) in q_and(|q| shanks(q, 3))) {
        prop_assume!(a.deg_a() >= 2);
        let b = ShanksPoly::new(&(-a.a()) - &Poly::constant(q, 3)).unwrap();
        let (ka, kb) = (build_field(q, a.a()).unwrap(), build_field(q, b.a()).unwrap());
        prop_assert_eq!(ka.genus, kb.genus);
        prop_assert_eq!(&ka.disc_k, &kb.disc_k);
        if ka.genus <= 4 {
            prop_assert_eq!(exact_l_polynomial(&ka).unwrap(), exact_l_polynomial(&kb).unwrap());
        }
    }
}

#[test]
fn pruning_keeps_every_class_number_one_field() {
    for q in [5, 7, 11] {
        let report = search_class_number_one(q, 3, false);
        assert!(report.errors.is_empty());
        for (a, i) in &report.found {
            assert!(
                class_number_one_admissible(q, a.deg_a(), *i),
                "q={q} A={a} has h'=1 but was pruned"
            );
        }
        let pruned = search_class_number_one(q, 3, true);
        let names = |r: &cubicff::search::ClassNumberOneReport| {
            r.found.iter().map(|(a, _)| a.to_string()).collect::<Vec<_>>()
        };
        assert_eq!(names(&report), names(&pruned));
    }
}

#[test]
fn estimator_converges_for_t_cubed() {
    let k = common::field(5, "t^3");
    let h = exact_l_polynomial(&k).unwrap().h() as f64;
    let errors: Vec<f64> = [10_000, 40_000, 100_000]
        .iter()
        .map(|&n| (truncated_estimate(&k, Truncation::Count(n)).unwrap().eprime - h).abs())
        .collect();
    assert!(errors[2] <= errors[0], "{errors:?}");
    assert!(errors[2] / h < 2e-3, "{errors:?}");
    // λ grows with the truncation point
    let lambdas: Vec<usize> = [10_000, 40_000, 100_000]
        .iter()
        .map(|&n| truncated_estimate(&k, Truncation::Count(n)).unwrap().lambda)
        .collect();
    assert!(lambdas.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn truncation_by_degree_gives_the_exact_product() {
    // all primes of degree <= λ in one go agrees with the count truncation at the same cut
    let k = common::field(7, "t^2");
    let by_degree = truncated_estimate(&k, Truncation::Degree(4)).unwrap();
    let primes = by_degree.primes;
    let by_count = truncated_estimate(&k, Truncation::Count(primes)).unwrap();
    assert_eq!(by_degree.eprime.to_bits(), by_count.eprime.to_bits());
    assert_eq!(by_degree.lambda, 4);
}
