//! Shared helpers for the integration suites: a brute-force series oracle
//! that never truncates, and seeded random generators for field elements,
//! vectors, and matrices.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nsproj_core::{
    ComplexRational, FieldConfig, HyperMatrix, HyperNumber, HyperVector, Rational,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn cx(re: Rational, im: Rational) -> ComplexRational {
    ComplexRational::new(re, im)
}

/// Untruncated series arithmetic on an exponent-indexed map. This is the
/// reference the truncating kernel is checked against; it shares no code
/// with the kernel beyond the primitive number types.
#[derive(Clone, Debug, PartialEq)]
pub struct NaiveSeries(pub BTreeMap<Rational, ComplexRational>);

impl NaiveSeries {
    pub fn zero() -> Self {
        NaiveSeries(BTreeMap::new())
    }

    pub fn from_hyper(h: &HyperNumber) -> Self {
        let mut map = BTreeMap::new();
        for t in h.terms() {
            map.insert(t.exponent.clone(), t.coefficient.clone());
        }
        NaiveSeries(map)
    }

    pub fn to_hyper(&self) -> HyperNumber {
        HyperNumber::from_terms(self.0.iter().map(|(e, c)| (e.clone(), c.clone())))
    }

    fn insert_add(map: &mut BTreeMap<Rational, ComplexRational>, e: Rational, c: ComplexRational) {
        let entry = map
            .entry(e)
            .or_insert_with(|| cx(rat(0, 1), rat(0, 1)));
        *entry = ComplexRational::new(&entry.re + &c.re, &entry.im + &c.im);
    }

    fn prune(mut map: BTreeMap<Rational, ComplexRational>) -> Self {
        map.retain(|_, c| !(c.re.numer().bits() == 0 && c.im.numer().bits() == 0));
        NaiveSeries(map)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut map = self.0.clone();
        for (e, c) in &rhs.0 {
            Self::insert_add(&mut map, e.clone(), c.clone());
        }
        Self::prune(map)
    }

    pub fn neg(&self) -> Self {
        NaiveSeries(
            self.0
                .iter()
                .map(|(e, c)| (e.clone(), ComplexRational::new(-&c.re, -&c.im)))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut map = BTreeMap::new();
        for (ea, ca) in &self.0 {
            for (eb, cb) in &rhs.0 {
                let re = &ca.re * &cb.re - &ca.im * &cb.im;
                let im = &ca.re * &cb.im + &ca.im * &cb.re;
                Self::insert_add(&mut map, ea + eb, ComplexRational::new(re, im));
            }
        }
        Self::prune(map)
    }
}

/// Nonzero rational with numerator in `-span..=span` and denominator in
/// `1..=den`.
pub fn rand_rational(r: &mut ChaCha8Rng, span: i64, den: i64) -> Rational {
    loop {
        let n = r.random_range(-span..=span);
        if n == 0 {
            continue;
        }
        let d = r.random_range(1..=den);
        return rat(n, d);
    }
}

pub fn rand_coeff(r: &mut ChaCha8Rng, complex: bool) -> ComplexRational {
    if complex && r.random_bool(0.5) {
        let re = if r.random_bool(0.3) {
            rat(0, 1)
        } else {
            rand_rational(r, 6, 4)
        };
        let mut im = rand_rational(r, 6, 4);
        if re.numer().bits() == 0 && im.numer().bits() == 0 {
            im = rat(1, 1);
        }
        cx(re, im)
    } else {
        cx(rand_rational(r, 6, 4), rat(0, 1))
    }
}

/// Random series with `terms` distinct integer exponents drawn from
/// `lo..=hi` and small nonzero coefficients.
pub fn rand_series(
    r: &mut ChaCha8Rng,
    terms: usize,
    lo: i64,
    hi: i64,
    complex: bool,
) -> HyperNumber {
    let mut used = Vec::new();
    let mut out = Vec::new();
    let span = (hi - lo + 1) as usize;
    let want = terms.min(span);
    while used.len() < want {
        let e = r.random_range(lo..=hi);
        if used.contains(&e) {
            continue;
        }
        used.push(e);
        out.push((rat(e, 1), rand_coeff(r, complex)));
    }
    HyperNumber::from_terms(out)
}

/// Random nonzero number with leading exponent exactly `lead`.
pub fn rand_with_lead(r: &mut ChaCha8Rng, lead: i64, extra: usize, complex: bool) -> HyperNumber {
    let mut out = vec![(rat(lead, 1), rand_coeff(r, complex))];
    let mut e = lead;
    for _ in 0..extra {
        e += r.random_range(1..=2);
        out.push((rat(e, 1), rand_coeff(r, complex)));
    }
    HyperNumber::from_terms(out)
}

pub fn rand_appreciable(r: &mut ChaCha8Rng, complex: bool) -> HyperNumber {
    let extra = r.random_range(0..3);
    rand_with_lead(r, 0, extra, complex)
}

pub fn rand_infinitesimal(r: &mut ChaCha8Rng, complex: bool) -> HyperNumber {
    let lead = r.random_range(1..=2);
    let extra = r.random_range(0..3);
    rand_with_lead(r, lead, extra, complex)
}

pub fn rand_unlimited(r: &mut ChaCha8Rng, complex: bool) -> HyperNumber {
    let lead = r.random_range(-2..=-1);
    let extra = r.random_range(0..3);
    rand_with_lead(r, lead, extra, complex)
}

pub fn rand_limited(r: &mut ChaCha8Rng, complex: bool) -> HyperNumber {
    if r.random_bool(0.5) {
        rand_appreciable(r, complex)
    } else {
        rand_infinitesimal(r, complex)
    }
}

/// Random nonzero 3-vector with entry exponents in `{-2..2}`.
pub fn rand_vector3(r: &mut ChaCha8Rng, complex: bool) -> HyperVector {
    loop {
        let entries: [HyperNumber; 3] = std::array::from_fn(|_| {
            if r.random_bool(0.15) {
                HyperNumber::zero()
            } else {
                let terms = r.random_range(1..=3);
                rand_series(r, terms, -2, 2, complex)
            }
        });
        if entries.iter().any(|e| !e.is_zero()) {
            return HyperVector::point(entries);
        }
    }
}

/// Random 3-vector with all entries limited and at least one appreciable.
pub fn rand_appreciable_vector3(r: &mut ChaCha8Rng, complex: bool) -> HyperVector {
    let slot = r.random_range(0..3);
    let entries: [HyperNumber; 3] = std::array::from_fn(|i| {
        if i == slot {
            rand_appreciable(r, complex)
        } else if r.random_bool(0.2) {
            HyperNumber::zero()
        } else {
            rand_limited(r, complex)
        }
    });
    HyperVector::point(entries)
}

/// Random matrix whose appreciable representative has appreciable
/// determinant. Resamples until non-singular.
pub fn rand_nonsingular_matrix(r: &mut ChaCha8Rng, cfg: FieldConfig, complex: bool) -> HyperMatrix {
    loop {
        let rows: [[HyperNumber; 3]; 3] = std::array::from_fn(|_| {
            std::array::from_fn(|_| {
                if r.random_bool(0.2) {
                    HyperNumber::zero()
                } else {
                    let terms = r.random_range(1..=2);
                    rand_series(r, terms, -1, 1, complex)
                }
            })
        });
        let m = HyperMatrix::new(rows);
        if m.is_zero_matrix() {
            continue;
        }
        if m.classify(cfg) == Ok(nsproj_core::MatrixClass::NonSingular) {
            return m;
        }
    }
}

/// Scales every entry of a vector by the same factor.
pub fn scale_vector(v: &HyperVector, c: &HyperNumber, cfg: FieldConfig) -> HyperVector {
    let e = v.entries();
    HyperVector::point([
        e[0].mul(c, cfg),
        e[1].mul(c, cfg),
        e[2].mul(c, cfg),
    ])
}

/// Adds `delta * w` to `v` entry-wise.
pub fn perturb_vector(
    v: &HyperVector,
    w: &HyperVector,
    delta: &HyperNumber,
    cfg: FieldConfig,
) -> HyperVector {
    let a = v.entries();
    let b = w.entries();
    HyperVector::point([
        a[0].add(&b[0].mul(delta, cfg), cfg),
        a[1].add(&b[1].mul(delta, cfg), cfg),
        a[2].add(&b[2].mul(delta, cfg), cfg),
    ])
}
