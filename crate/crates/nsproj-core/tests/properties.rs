//! Property-based checks of the algebraic laws the kernel is built on:
//! valuation arithmetic, shadow homomorphisms, representative independence,
//! preservation under regular maps, and exactness against an untruncated
//! oracle on inputs small enough to be exact.

mod common;

use common::NaiveSeries;
use num_bigint::BigInt;
use proptest::prelude::*;

use nsproj_core::{
    almost_collinear, almost_incident, cross_ratio, normalized_determinant, ComplexRational,
    ConicForm, FieldConfig, HyperMatrix, HyperNumber, HyperVector, MatrixClass, NumberClass,
    PlanarPair, Rational, VectorClass,
};

fn cfg() -> FieldConfig {
    FieldConfig::default()
}

fn rcfg() -> FieldConfig {
    FieldConfig::real(8)
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn arb_rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn arb_nonzero_rat() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=4, any::<bool>())
        .prop_map(|(n, d, neg)| if neg { rat(-n, d) } else { rat(n, d) })
}

fn arb_exp() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=2).prop_map(|(n, d)| rat(n, d))
}

fn arb_coeff(complex: bool) -> impl Strategy<Value = ComplexRational> {
    if complex {
        (arb_rat(), arb_rat())
            .prop_map(|(re, im)| ComplexRational::new(re, im))
            .boxed()
    } else {
        arb_rat()
            .prop_map(|re| ComplexRational::new(re, rat(0, 1)))
            .boxed()
    }
}

fn arb_nonzero_coeff(complex: bool) -> impl Strategy<Value = ComplexRational> {
    if complex {
        (arb_nonzero_rat(), arb_rat())
            .prop_map(|(re, im)| ComplexRational::new(re, im))
            .boxed()
    } else {
        arb_nonzero_rat()
            .prop_map(|re| ComplexRational::new(re, rat(0, 1)))
            .boxed()
    }
}

fn arb_num(complex: bool) -> impl Strategy<Value = HyperNumber> {
    prop::collection::vec((arb_exp(), arb_coeff(complex)), 0..4)
        .prop_map(HyperNumber::from_terms)
}

fn arb_nonzero_num(complex: bool) -> impl Strategy<Value = HyperNumber> {
    arb_num(complex).prop_filter("nonzero", |h| !h.is_zero())
}

/// Number with leading exponent pinned to `lead` and a short tail above it.
fn arb_lead_pinned(lead: i64, complex: bool) -> impl Strategy<Value = HyperNumber> {
    (
        arb_nonzero_coeff(complex),
        prop::collection::vec((1i64..=3, arb_coeff(complex)), 0..3),
    )
        .prop_map(move |(c0, tail)| {
            let mut terms = vec![(rat(lead, 1), c0)];
            let mut e = lead;
            for (step, c) in tail {
                e += step;
                terms.push((rat(e, 1), c));
            }
            HyperNumber::from_terms(terms)
        })
}

fn arb_appreciable(complex: bool) -> impl Strategy<Value = HyperNumber> {
    arb_lead_pinned(0, complex)
}

fn arb_infinitesimal(complex: bool) -> impl Strategy<Value = HyperNumber> {
    (1i64..=2).prop_flat_map(move |l| arb_lead_pinned(l, complex))
}

fn arb_unlimited(complex: bool) -> impl Strategy<Value = HyperNumber> {
    (-2i64..=-1).prop_flat_map(move |l| arb_lead_pinned(l, complex))
}

fn arb_limited(complex: bool) -> impl Strategy<Value = HyperNumber> {
    prop_oneof![arb_appreciable(complex), arb_infinitesimal(complex)]
}

/// Appreciable number whose support sits inside `{0, 1, 2}`, so products of
/// two such numbers and their differences never hit the truncation window.
fn arb_short_appreciable(complex: bool) -> impl Strategy<Value = HyperNumber> {
    (
        arb_nonzero_coeff(complex),
        arb_coeff(complex),
        arb_coeff(complex),
    )
        .prop_map(|(c0, c1, c2)| {
            HyperNumber::from_terms([(rat(0, 1), c0), (rat(1, 1), c1), (rat(2, 1), c2)])
        })
}

fn arb_vector(complex: bool) -> impl Strategy<Value = HyperVector> {
    [arb_num(complex), arb_num(complex), arb_num(complex)]
        .prop_filter("nonzero vector", |es| es.iter().any(|e| !e.is_zero()))
        .prop_map(HyperVector::point)
}

/// All entries limited, at least one appreciable.
fn arb_appreciable_vector(complex: bool) -> impl Strategy<Value = HyperVector> {
    (
        0usize..3,
        arb_appreciable(complex),
        arb_limited(complex),
        arb_limited(complex),
    )
        .prop_map(|(slot, a, b, c)| {
            let mut es = [a, b, c];
            es.swap(0, slot);
            HyperVector::point(es)
        })
}

fn arb_small_matrix(complex: bool) -> impl Strategy<Value = HyperMatrix> {
    prop::collection::vec(
        prop::collection::vec(
            prop::collection::vec(((-1i64..=1).prop_map(|e| rat(e, 1)), arb_coeff(complex)), 0..3),
            3,
        ),
        3,
    )
    .prop_map(|rows| {
        let build = |cell: &Vec<(Rational, ComplexRational)>| {
            HyperNumber::from_terms(cell.iter().cloned())
        };
        HyperMatrix::new([
            [build(&rows[0][0]), build(&rows[0][1]), build(&rows[0][2])],
            [build(&rows[1][0]), build(&rows[1][1]), build(&rows[1][2])],
            [build(&rows[2][0]), build(&rows[2][1]), build(&rows[2][2])],
        ])
    })
    .prop_filter("nonzero matrix", |m| !m.is_zero_matrix())
}

fn arb_nonsingular_matrix(complex: bool) -> impl Strategy<Value = HyperMatrix> {
    arb_small_matrix(complex)
        .prop_filter("non-singular", |m| {
            m.classify(cfg()) == Ok(MatrixClass::NonSingular)
        })
}

fn scale(v: &HyperVector, c: &HyperNumber) -> HyperVector {
    let e = v.entries();
    HyperVector::point([
        e[0].mul(c, cfg()),
        e[1].mul(c, cfg()),
        e[2].mul(c, cfg()),
    ])
}

proptest! {
    #[test]
    fn valuation_adds_under_multiplication(
        a in arb_nonzero_num(true),
        b in arb_nonzero_num(true),
    ) {
        let p = a.mul(&b, cfg());
        let expect = a.leading_exponent().unwrap() + b.leading_exponent().unwrap();
        prop_assert_eq!(p.leading_exponent(), Some(&expect));
    }

    #[test]
    fn classification_algebra_determinate_rows(
        e1 in arb_infinitesimal(true),
        e2 in arb_infinitesimal(true),
        a1 in arb_appreciable(true),
        a2 in arb_appreciable(true),
        l in arb_limited(true),
        h1 in arb_unlimited(true),
        h2 in arb_unlimited(true),
    ) {
        let c = cfg();
        prop_assert!(e1.add(&e2, c).is_infinitesimal_or_zero());
        prop_assert!(e1.mul(&e2, c).classify() == NumberClass::Infinitesimal);
        prop_assert!(e1.mul(&l, c).is_infinitesimal_or_zero());
        prop_assert!(e1.mul(&a1, c).classify() == NumberClass::Infinitesimal);
        prop_assert!(a1.add(&l, c).is_limited());
        prop_assert!(a1.mul(&a2, c).classify() == NumberClass::Appreciable);
        prop_assert!(e1.reciprocal(c).unwrap().classify() == NumberClass::Unlimited);
        prop_assert!(a1.reciprocal(c).unwrap().classify() == NumberClass::Appreciable);
        prop_assert!(h1.add(&l, c).classify() == NumberClass::Unlimited);
        prop_assert!(h1.mul(&h2, c).classify() == NumberClass::Unlimited);
        prop_assert!(h1.mul(&a1, c).classify() == NumberClass::Unlimited);
    }

    #[test]
    fn shadow_is_a_ring_homomorphism(
        a in arb_limited(true),
        b in arb_limited(true),
        n in 0i64..5,
    ) {
        let c = cfg();
        let sa = a.shadow().unwrap();
        let sb = b.shadow().unwrap();
        prop_assert_eq!(a.add(&b, c).shadow().unwrap(), sa.clone() + sb.clone());
        prop_assert_eq!(a.sub(&b, c).shadow().unwrap(), sa.clone() - sb.clone());
        prop_assert_eq!(a.mul(&b, c).shadow().unwrap(), sa.clone() * sb.clone());
        let mut expect = ComplexRational::new(rat(1, 1), rat(0, 1));
        for _ in 0..n {
            expect = expect * sa.clone();
        }
        prop_assert_eq!(a.pow(n, c).unwrap().shadow().unwrap(), expect);
        if b.classify() == NumberClass::Appreciable {
            prop_assert_eq!(a.div(&b, c).unwrap().shadow().unwrap(), sa / sb);
        }
    }

    #[test]
    fn shadow_respects_the_real_order(
        a in arb_limited(false),
        b in arb_limited(false),
    ) {
        let c = rcfg();
        let ord = a.cmp_real(&b, c).unwrap();
        let sa = a.shadow().unwrap().re;
        let sb = b.shadow().unwrap().re;
        if ord != core::cmp::Ordering::Greater {
            prop_assert!(sa <= sb);
        } else {
            prop_assert!(sa >= sb);
        }
    }

    #[test]
    fn shadow_commutes_with_conjugation(z in arb_limited(true)) {
        let sz = z.shadow().unwrap();
        prop_assert_eq!(z.conjugate().shadow().unwrap(), sz.conj());
    }

    #[test]
    fn infinite_closeness_is_an_equivalence(
        a in arb_limited(true),
        e1 in arb_infinitesimal(true),
        e2 in arb_infinitesimal(true),
    ) {
        let c = cfg();
        let b = a.add(&e1, c);
        let d = b.add(&e2, c);
        prop_assert!(a.infinitely_close(&a, c));
        prop_assert!(a.infinitely_close(&b, c) && b.infinitely_close(&a, c));
        prop_assert!(b.infinitely_close(&d, c));
        prop_assert!(a.infinitely_close(&d, c));
        prop_assert_eq!(
            a.infinitely_close(&b, c),
            a.sub(&b, c).shadow().unwrap() == ComplexRational::new(rat(0, 1), rat(0, 1))
        );
    }

    #[test]
    fn magnitude_laws(
        s in arb_nonzero_num(true),
        r in arb_nonzero_num(true),
        lam in arb_appreciable(true),
    ) {
        let c = cfg();
        prop_assert_eq!(s.in_magnitude(&r).unwrap(), s.mul(&lam, c).in_magnitude(&r).unwrap());
        prop_assert_eq!(s.in_magnitude(&r).unwrap(), s.in_magnitude(&r.mul(&lam, c)).unwrap());
        let si = s.reciprocal(c).unwrap();
        let ri = r.reciprocal(c).unwrap();
        prop_assert_eq!(s.in_magnitude(&r).unwrap(), si.in_magnitude(&ri).unwrap());
        // lambda scaling that stays in the same magnitude forces lambda
        // appreciable
        let scaled = r.mul(&lam, c);
        if s.in_magnitude(&scaled).unwrap() && s.in_magnitude(&r).unwrap() {
            prop_assert_eq!(lam.classify(), NumberClass::Appreciable);
        }
    }

    #[test]
    fn display_parse_round_trip(x in arb_num(true)) {
        let text = x.to_string();
        let back: HyperNumber = text.parse().map_err(|e| {
            TestCaseError::fail(format!("reparse of {text:?} failed: {e:?}"))
        })?;
        prop_assert_eq!(back, x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn small_arithmetic_matches_untruncated_oracle(
        a in prop::collection::vec((arb_exp(), arb_coeff(true)), 0..3).prop_map(HyperNumber::from_terms),
        b in prop::collection::vec((arb_exp(), arb_coeff(true)), 0..3).prop_map(HyperNumber::from_terms),
        c in prop::collection::vec((arb_exp(), arb_coeff(true)), 0..3).prop_map(HyperNumber::from_terms),
    ) {
        let k = cfg();
        let (na, nb, nc) = (
            NaiveSeries::from_hyper(&a),
            NaiveSeries::from_hyper(&b),
            NaiveSeries::from_hyper(&c),
        );
        prop_assert_eq!(a.add(&b, k), na.add(&nb).to_hyper());
        prop_assert_eq!(a.sub(&b, k), na.sub(&nb).to_hyper());
        prop_assert_eq!(a.mul(&b, k), na.mul(&nb).to_hyper());
        prop_assert_eq!(a.mul(&b, k).add(&c, k), na.mul(&nb).add(&nc).to_hyper());
        prop_assert_eq!(a.neg(), na.neg().to_hyper());
    }

    #[test]
    fn normalization_yields_appreciable_vectors(v in arb_vector(true)) {
        let rep = v.appreciable_representative().unwrap();
        prop_assert_eq!(rep.classify(), VectorClass::Appreciable);
        // The chosen normalizer is in the magnitude of the norm: the norm
        // square of the representative must be appreciable.
        prop_assert_eq!(rep.norm_squared(cfg()).classify(), NumberClass::Appreciable);
    }

    #[test]
    fn predicates_ignore_the_representative(
        v in arb_vector(true),
        l in arb_vector(true),
        w in arb_vector(true),
        c in arb_appreciable(true),
    ) {
        let k = cfg();
        let vs = scale(&v, &c);
        prop_assert_eq!(
            almost_incident(&v, &l, k).unwrap(),
            almost_incident(&vs, &l, k).unwrap()
        );
        prop_assert_eq!(
            v.almost_equivalent(&l, k).unwrap(),
            vs.almost_equivalent(&l, k).unwrap()
        );
        prop_assert_eq!(v.is_almost_far_point().unwrap(), vs.is_almost_far_point().unwrap());
        let plain = almost_collinear(&v, &l, &w, k);
        let scaled = almost_collinear(&vs, &l, &w, k);
        match (plain, scaled) {
            (Ok(p), Ok(s)) => prop_assert_eq!(p, s),
            (Err(_), Err(_)) => {}
            (p, s) => prop_assert!(false, "divergent results {p:?} vs {s:?}"),
        }
    }

    #[test]
    fn scalar_product_shadow_equals_shadow_pairing(
        x in arb_vector(true),
        y in arb_vector(true),
    ) {
        let k = cfg();
        let sp = x.scalar_product(&y, k).unwrap();
        let sx = x.projective_shadow().unwrap();
        let sy = y.projective_shadow().unwrap();
        let pairing: ComplexRational = sx
            .iter()
            .zip(&sy)
            .map(|(a, b)| a.conj() * b.clone())
            .fold(ComplexRational::new(rat(0, 1), rat(0, 1)), |acc, t| acc + t);
        prop_assert_eq!(sp.shadow().unwrap(), pairing);
    }

    #[test]
    fn equivalence_is_infinitesimal_cross_product(
        x in arb_vector(true),
        y in arb_vector(true),
    ) {
        let k = cfg();
        let dual = x.cross_product(&y, k).unwrap().classify() == VectorClass::Infinitesimal;
        prop_assert_eq!(x.almost_equivalent(&y, k).unwrap(), dual);
    }

    #[test]
    fn normalized_determinant_matches_the_pairing(
        x in arb_appreciable_vector(false),
        y in arb_appreciable_vector(false),
        z in arb_appreciable_vector(false),
    ) {
        let k = rcfg();
        let w = y.cross_product(&z, k).unwrap();
        prop_assume!(!w.is_zero_vector());
        let dn = normalized_determinant(&x, &y, &z, k).unwrap();
        let sp = x.scalar_product(&w, k).unwrap();
        // The two sides divide the same raw determinant by normalizers that
        // agree up to the leading coefficient of the pivot entry.
        let v = w.min_valuation().unwrap();
        let pivot = w
            .entries()
            .iter()
            .find(|e| e.leading_exponent() == Some(&v))
            .unwrap();
        let lead = HyperNumber::from_complex(pivot.leading_coefficient().unwrap().clone());
        prop_assert_eq!(dn.is_infinitesimal_or_zero(), sp.is_infinitesimal_or_zero());
        prop_assert_eq!(dn.mul(&lead, k), sp);
    }

    #[test]
    fn adjugate_identity_holds(m in arb_small_matrix(true)) {
        let k = cfg();
        let rep = m.appreciable_representative().unwrap();
        let adj = rep.adjugate(k).unwrap();
        let prod = rep.mul_matrix(&adj, k);
        let det = rep.determinant(k);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { det.clone() } else { HyperNumber::zero() };
                prop_assert_eq!(prod.entry(i, j), &expect);
            }
        }
    }

    #[test]
    fn inverse_of_regular_is_regular(m in arb_nonsingular_matrix(true)) {
        let k = cfg();
        let inv = m.inverse(k).unwrap();
        prop_assert_eq!(inv.classify(k), Ok(MatrixClass::NonSingular));
        prop_assert_eq!(inv.min_valuation(), Some(rat(0, 1)));
    }

    #[test]
    fn regular_maps_have_empty_eps_kernel(
        m in arb_nonsingular_matrix(true),
        v in arb_vector(true),
    ) {
        prop_assert!(!m.eps_kernel_member(&v, cfg()).unwrap());
    }

    #[test]
    fn cross_ratio_is_scale_invariant(
        entries in prop::collection::vec(arb_lead_pinned(0, true), 8),
        scales in prop::collection::vec((arb_nonzero_rat(), -1i64..=1), 4),
    ) {
        let k = cfg();
        let pair = |i: usize| PlanarPair::new(entries[2 * i].clone(), entries[2 * i + 1].clone());
        let (a, b, c, d) = (pair(0), pair(1), pair(2), pair(3));
        let base = cross_ratio(&a, &b, &c, &d, k);
        prop_assume!(base.is_ok());
        let scaled: Vec<PlanarPair> = [&a, &b, &c, &d]
            .iter()
            .zip(&scales)
            .map(|(p, (q, e))| {
                let s = HyperNumber::monomial(rat(*e, 1), ComplexRational::new(q.clone(), rat(0, 1)));
                PlanarPair::new(p.entries()[0].mul(&s, k), p.entries()[1].mul(&s, k))
            })
            .collect();
        let after = cross_ratio(&scaled[0], &scaled[1], &scaled[2], &scaled[3], k).unwrap();
        prop_assert_eq!(after, base.unwrap());
    }

    #[test]
    fn cross_ratio_survives_invertible_maps(
        entries in prop::collection::vec(arb_short_appreciable(false), 8),
        m in (arb_nonzero_rat(), arb_rat(), arb_rat(), arb_nonzero_rat()),
    ) {
        let k = cfg();
        let det = m.0.clone() * m.3.clone() - m.1.clone() * m.2.clone();
        prop_assume!(!num_traits::Zero::is_zero(&det));
        let pair = |i: usize| PlanarPair::new(entries[2 * i].clone(), entries[2 * i + 1].clone());
        let (a, b, c, d) = (pair(0), pair(1), pair(2), pair(3));
        let base = cross_ratio(&a, &b, &c, &d, k);
        prop_assume!(base.is_ok());
        let lift = |q: &Rational| HyperNumber::from_rational(q.clone());
        let apply = |p: &PlanarPair| {
            let e = p.entries();
            PlanarPair::new(
                lift(&m.0).mul(&e[0], k).add(&lift(&m.1).mul(&e[1], k), k),
                lift(&m.2).mul(&e[0], k).add(&lift(&m.3).mul(&e[1], k), k),
            )
        };
        let after = cross_ratio(&apply(&a), &apply(&b), &apply(&c), &apply(&d), k);
        prop_assume!(after.is_ok());
        prop_assert_eq!(after.unwrap(), base.unwrap());
    }

    #[test]
    fn conic_membership_ignores_scaling(
        diag in prop::collection::vec(arb_nonzero_rat(), 3),
        p in arb_appreciable_vector(false),
        c in arb_appreciable(false),
        s in arb_appreciable(false),
    ) {
        let k = cfg();
        let form = ConicForm::new(HyperMatrix::diagonal(
            HyperNumber::from_rational(diag[0].clone()),
            HyperNumber::from_rational(diag[1].clone()),
            HyperNumber::from_rational(diag[2].clone()),
        ))
        .unwrap();
        let scaled_form = ConicForm::new(HyperMatrix::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| form.matrix().entry(i, j).mul(&s, k))
        })))
        .unwrap();
        let ps = scale(&p, &c);
        let base = form.almost_contains(&p, k).unwrap();
        prop_assert_eq!(form.almost_contains(&ps, k).unwrap(), base);
        prop_assert_eq!(scaled_form.almost_contains(&p, k).unwrap(), base);
        prop_assert_eq!(scaled_form.almost_contains(&ps, k).unwrap(), base);
    }

    #[test]
    fn conics_contain_the_halo_of_exact_points(
        t in arb_nonzero_rat(),
        w in arb_appreciable_vector(false),
    ) {
        let k = cfg();
        // Rational point on the unit circle from the tangent half-angle
        // parametrization, then an infinitesimal nudge.
        let one = Rational::new(BigInt::from(1), BigInt::from(1));
        let x = HyperNumber::from_rational(one.clone() - t.clone() * t.clone());
        let y = HyperNumber::from_rational(t.clone() + t.clone());
        let z = HyperNumber::from_rational(one + t.clone() * t);
        let p = HyperVector::point([x, y, z]);
        let circle = ConicForm::new(HyperMatrix::diagonal(
            HyperNumber::one(),
            HyperNumber::one(),
            HyperNumber::one().neg(),
        ))
        .unwrap();
        prop_assert!(circle.value_at(&p, k).unwrap().is_zero());
        let eps = HyperNumber::epsilon();
        let nudged = HyperVector::point(std::array::from_fn(|i| {
            p.entries()[i].add(&w.entries()[i].mul(&eps, k), k)
        }));
        prop_assert!(circle.almost_contains(&nudged, k).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn regular_transforms_preserve_equivalence(
        m in arb_nonsingular_matrix(true),
        p in arb_vector(true),
        c in arb_appreciable(true),
        w in arb_appreciable_vector(true),
    ) {
        let k = cfg();
        let eps = HyperNumber::epsilon();
        let q = HyperVector::point(std::array::from_fn(|i| {
            p.entries()[i]
                .mul(&c, k)
                .add(&w.entries()[i].mul(&eps, k), k)
        }));
        prop_assume!(!q.is_zero_vector());
        prop_assume!(p.almost_equivalent(&q, k).unwrap());
        let mp = m.apply_to_point(&p, k).unwrap();
        let mq = m.apply_to_point(&q, k).unwrap();
        prop_assert!(mp.almost_equivalent(&mq, k).unwrap());
    }

    #[test]
    fn regular_transforms_preserve_incidence(
        m in arb_nonsingular_matrix(true),
        p in arb_appreciable_vector(true),
        r in arb_appreciable_vector(true),
        w in arb_appreciable_vector(true),
    ) {
        let k = cfg();
        let conj_p = HyperVector::point(std::array::from_fn(|i| p.entries()[i].conjugate()));
        let l0 = conj_p.raw_cross_product(&r, k).unwrap();
        prop_assume!(!l0.is_zero_vector());
        let base = l0.appreciable_representative().unwrap();
        let eps = HyperNumber::epsilon();
        let l = HyperVector::point(std::array::from_fn(|i| {
            base.entries()[i].add(&w.entries()[i].mul(&eps, k), k)
        }));
        prop_assume!(!l.is_zero_vector());
        prop_assert!(almost_incident(&p, &l, k).unwrap());
        let mp = m.apply_to_point(&p, k).unwrap();
        let ml = m.apply_to_line(&l, k).unwrap();
        prop_assert!(almost_incident(&mp, &ml, k).unwrap());
    }

    #[test]
    fn regular_transforms_preserve_collinearity(
        m in arb_nonsingular_matrix(true),
        y in arb_appreciable_vector(true),
        z in arb_appreciable_vector(true),
        a in arb_appreciable(true),
        b in arb_appreciable(true),
        w in arb_appreciable_vector(true),
    ) {
        let k = cfg();
        prop_assume!(y.cross_product(&z, k).unwrap().classify() == VectorClass::Appreciable);
        let eps = HyperNumber::epsilon();
        let x = HyperVector::point(std::array::from_fn(|i| {
            y.entries()[i]
                .mul(&a, k)
                .add(&z.entries()[i].mul(&b, k), k)
                .add(&w.entries()[i].mul(&eps, k), k)
        }));
        prop_assume!(!x.is_zero_vector());
        prop_assume!(almost_collinear(&x, &y, &z, k).unwrap());
        let mx = m.apply_to_point(&x, k).unwrap();
        let my = m.apply_to_point(&y, k).unwrap();
        let mz = m.apply_to_point(&z, k).unwrap();
        match almost_collinear(&mx, &my, &mz, k) {
            Ok(v) => prop_assert!(v),
            // images of distinct inputs can collapse projectively only when
            // the map is not regular, which is excluded here
            Err(e) => prop_assert!(false, "unexpected degeneracy: {e:?}"),
        }
    }
}
