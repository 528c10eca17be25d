use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::Error;

/// Exact arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Exact complex number with rational real and imaginary parts.
pub type ComplexRational = num_complex::Complex<Rational>;

/// Coefficient model for the scalar field.
///
/// `Real` promises that every coefficient that enters the computation is
/// real. Operations whose meaning depends on it (ordering, roots, the
/// circular points) check the flag; plain arithmetic does not re-verify
/// every coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldMode {
    Real,
    Complex,
}

/// Truncation order and coefficient model shared by all operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldConfig {
    order: u32,
    mode: FieldMode,
}

impl FieldConfig {
    /// `order` is the number of significant orders kept after each
    /// operation, counted from the leading exponent. Must be at least 1.
    pub fn new(order: u32, mode: FieldMode) -> Self {
        assert!(order >= 1, "truncation order must be at least 1");
        FieldConfig { order, mode }
    }

    pub fn real(order: u32) -> Self {
        Self::new(order, FieldMode::Real)
    }

    pub fn complex(order: u32) -> Self {
        Self::new(order, FieldMode::Complex)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig::new(8, FieldMode::Complex)
    }
}

/// One series term `coefficient * eps^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub exponent: Rational,
    pub coefficient: ComplexRational,
}

/// Finite series over a positive infinitesimal `eps` with strictly
/// increasing rational exponents and nonzero exact coefficients.
///
/// The empty series is zero. Equality is exact term-wise equality; the
/// representation is canonical, so `==` decides equality of values.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HyperNumber {
    terms: Vec<Term>,
}

/// Classification by the sign of the leading exponent.
///
/// Zero belongs to the infinitesimals as a set, but keeps its own tag so
/// that operations like `reciprocal` can reject it exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumberClass {
    Zero,
    Infinitesimal,
    Appreciable,
    Unlimited,
}

impl NumberClass {
    /// Member of the set of infinitesimals (zero included).
    pub fn is_infinitesimal_or_zero(self) -> bool {
        matches!(self, NumberClass::Zero | NumberClass::Infinitesimal)
    }

    /// Limited means not unlimited.
    pub fn is_limited(self) -> bool {
        !matches!(self, NumberClass::Unlimited)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NumberClass::Zero => "zero",
            NumberClass::Infinitesimal => "infinitesimal",
            NumberClass::Appreciable => "appreciable",
            NumberClass::Unlimited => "unlimited",
        }
    }
}

impl core::fmt::Display for NumberClass {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn complex_is_zero(c: &ComplexRational) -> bool {
    c.re.is_zero() && c.im.is_zero()
}

fn complex_inv(c: &ComplexRational) -> ComplexRational {
    let norm = &c.re * &c.re + &c.im * &c.im;
    ComplexRational::new(&c.re / &norm, -&c.im / &norm)
}

/// Exact n-th root of a positive rational, if one exists.
fn rational_nth_root(value: &Rational, n: u32) -> Option<Rational> {
    let numer = value.numer();
    let denom = value.denom();
    let rn = numer.nth_root(n);
    let rd = denom.nth_root(n);
    if rn.clone().pow(n) == *numer && rd.clone().pow(n) == *denom {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

impl HyperNumber {
    pub fn zero() -> Self {
        HyperNumber { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The distinguished positive infinitesimal.
    pub fn epsilon() -> Self {
        Self::monomial(rat_int(1), ComplexRational::one())
    }

    /// `eps^q` for a rational exponent.
    pub fn epsilon_pow(exponent: Rational) -> Self {
        Self::monomial(exponent, ComplexRational::one())
    }

    /// The imaginary unit as a constant series.
    pub fn imaginary() -> Self {
        Self::monomial(rat_int(0), ComplexRational::i())
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(rat_int(0), ComplexRational::from(rat_int(n)))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::monomial(rat_int(0), ComplexRational::from(r))
    }

    pub fn from_complex(c: ComplexRational) -> Self {
        Self::monomial(rat_int(0), c)
    }

    /// Single term `coefficient * eps^exponent`; zero coefficient gives zero.
    pub fn monomial(exponent: Rational, coefficient: ComplexRational) -> Self {
        if complex_is_zero(&coefficient) {
            return Self::zero();
        }
        HyperNumber {
            terms: alloc::vec![Term {
                exponent,
                coefficient,
            }],
        }
    }

    /// Builds a series from arbitrary `(exponent, coefficient)` pairs:
    /// duplicate exponents are summed, zero coefficients dropped.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, ComplexRational)>,
    {
        let mut map: BTreeMap<Rational, ComplexRational> = BTreeMap::new();
        for (exp, coeff) in terms {
            let entry = map.entry(exp).or_insert_with(ComplexRational::zero);
            *entry = entry.clone() + coeff;
        }
        Self::from_map(map, None)
    }

    fn from_map(map: BTreeMap<Rational, ComplexRational>, limit: Option<usize>) -> Self {
        let mut terms: Vec<Term> = map
            .into_iter()
            .filter(|(_, c)| !complex_is_zero(c))
            .map(|(exponent, coefficient)| Term {
                exponent,
                coefficient,
            })
            .collect();
        if let Some(limit) = limit {
            terms.truncate(limit);
        }
        HyperNumber { terms }
    }

    fn to_map(&self) -> BTreeMap<Rational, ComplexRational> {
        self.terms
            .iter()
            .map(|t| (t.exponent.clone(), t.coefficient.clone()))
            .collect()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms[0].exponent.is_zero()
            && self.terms[0].coefficient.is_one()
    }

    /// Leading (smallest) exponent, the valuation. `None` for zero.
    pub fn leading_exponent(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.exponent)
    }

    pub fn leading_coefficient(&self) -> Option<&ComplexRational> {
        self.terms.first().map(|t| &t.coefficient)
    }

    /// Leading term as a one-term series. Zero for zero.
    pub fn leading_term(&self) -> HyperNumber {
        match self.terms.first() {
            Some(t) => Self::monomial(t.exponent.clone(), t.coefficient.clone()),
            None => Self::zero(),
        }
    }

    /// True when every coefficient has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|t| t.coefficient.im.is_zero())
    }

    /// Keeps at most `order` significant orders counted from the leading
    /// exponent; drops the rest.
    pub fn truncated(&self, cfg: FieldConfig) -> Self {
        let limit = cfg.order as usize;
        if self.terms.len() <= limit {
            return self.clone();
        }
        HyperNumber {
            terms: self.terms[..limit].to_vec(),
        }
    }

    /// Drops all terms with exponent strictly above `cutoff`.
    fn drop_above(&self, cutoff: &Rational) -> Self {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exponent <= *cutoff)
            .cloned()
            .collect();
        HyperNumber { terms }
    }

    pub fn classify(&self) -> NumberClass {
        match self.terms.first() {
            None => NumberClass::Zero,
            Some(t) => {
                if t.exponent.is_positive() {
                    NumberClass::Infinitesimal
                } else if t.exponent.is_zero() {
                    NumberClass::Appreciable
                } else {
                    NumberClass::Unlimited
                }
            }
        }
    }

    pub fn is_infinitesimal_or_zero(&self) -> bool {
        self.classify().is_infinitesimal_or_zero()
    }

    pub fn is_limited(&self) -> bool {
        self.classify().is_limited()
    }

    pub fn add(&self, rhs: &Self, cfg: FieldConfig) -> Self {
        let mut map = self.to_map();
        for t in &rhs.terms {
            let entry = map
                .entry(t.exponent.clone())
                .or_insert_with(ComplexRational::zero);
            *entry = entry.clone() + t.coefficient.clone();
        }
        Self::from_map(map, Some(cfg.order as usize))
    }

    pub fn sub(&self, rhs: &Self, cfg: FieldConfig) -> Self {
        self.add(&rhs.neg(), cfg)
    }

    pub fn neg(&self) -> Self {
        HyperNumber {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exponent: t.exponent.clone(),
                    coefficient: -t.coefficient.clone(),
                })
                .collect(),
        }
    }

    /// Complex conjugation of every coefficient.
    pub fn conjugate(&self) -> Self {
        HyperNumber {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exponent: t.exponent.clone(),
                    coefficient: t.coefficient.conj(),
                })
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self, cfg: FieldConfig) -> Self {
        self.mul_full(rhs, Some(cfg.order as usize))
    }

    /// Exact product without truncation. Internal: callers that need the
    /// truncated model must go through `mul`.
    pub(crate) fn mul_exact(&self, rhs: &Self) -> Self {
        self.mul_full(rhs, None)
    }

    fn mul_full(&self, rhs: &Self, limit: Option<usize>) -> Self {
        let mut map: BTreeMap<Rational, ComplexRational> = BTreeMap::new();
        for a in &self.terms {
            for b in &rhs.terms {
                let exp = &a.exponent + &b.exponent;
                let coeff = a.coefficient.clone() * b.coefficient.clone();
                let entry = map.entry(exp).or_insert_with(ComplexRational::zero);
                *entry = entry.clone() + coeff;
            }
        }
        Self::from_map(map, limit)
    }

    /// Multiplies by `coefficient * eps^shift`. Exact: term count is
    /// unchanged, so no truncation is involved.
    pub(crate) fn mul_monomial(&self, shift: &Rational, coefficient: &ComplexRational) -> Self {
        if complex_is_zero(coefficient) {
            return Self::zero();
        }
        HyperNumber {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exponent: &t.exponent + shift,
                    coefficient: t.coefficient.clone() * coefficient.clone(),
                })
                .collect(),
        }
    }

    /// Divides by the monomial `coefficient * eps^shift` exactly.
    pub(crate) fn div_monomial(&self, shift: &Rational, coefficient: &ComplexRational) -> Self {
        self.mul_monomial(&-shift.clone(), &complex_inv(coefficient))
    }

    /// Multiplicative inverse. The leading term is inverted exactly; the
    /// rest of the series is expanded geometrically and truncated to the
    /// configured order.
    pub fn reciprocal(&self, cfg: FieldConfig) -> Result<Self, Error> {
        let lead = self.terms.first().ok_or(Error::DivisionByZero)?;
        let v = lead.exponent.clone();
        let c = lead.coefficient.clone();
        // self / (c eps^v) = 1 + t with val(t) > 0
        let unit = self.div_monomial(&v, &c);
        let t = HyperNumber {
            terms: unit.terms[1..].to_vec(),
        };
        if t.is_zero() {
            return Ok(Self::monomial(-v, complex_inv(&c)));
        }
        let series = power_series_sum(
            &t,
            |j| {
                if j % 2 == 0 {
                    rat_int(1)
                } else {
                    rat_int(-1)
                }
            },
            |cand| cand.mul_exact(&unit).is_one(),
            cfg.order as usize,
        );
        Ok(series.div_monomial(&v, &c).truncated(cfg))
    }

    pub fn div(&self, rhs: &Self, cfg: FieldConfig) -> Result<Self, Error> {
        Ok(self.mul(&rhs.reciprocal(cfg)?, cfg))
    }

    /// Integer power; negative exponents invert first (and fail on zero).
    pub fn pow(&self, n: i64, cfg: FieldConfig) -> Result<Self, Error> {
        if n < 0 {
            return self.reciprocal(cfg)?.pow(-n, cfg);
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n as u64;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base, cfg);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base, cfg);
            }
        }
        Ok(result)
    }

    /// Exact n-th root in the real model. The leading exponent divides by
    /// `n` (rational exponents keep this closed); the leading coefficient
    /// must be strictly positive with an exact rational root, and the tail
    /// is expanded binomially to the configured order.
    pub fn nth_root(&self, n: u32, cfg: FieldConfig) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::UnsupportedExponent);
        }
        if cfg.mode != FieldMode::Real {
            return Err(Error::NotRealPositive);
        }
        let lead = self.terms.first().ok_or(Error::NotRealPositive)?;
        if !lead.coefficient.im.is_zero() || !lead.coefficient.re.is_positive() || !self.is_real() {
            return Err(Error::NotRealPositive);
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let v = lead.exponent.clone();
        let c = lead.coefficient.re.clone();
        let root_c = rational_nth_root(&c, n).ok_or(Error::IrrationalRoot)?;
        let root_v = &v / rat_int(n as i64);
        let unit = self.div_monomial(&v, &ComplexRational::from(c));
        let t = HyperNumber {
            terms: unit.terms[1..].to_vec(),
        };
        let root_lead = ComplexRational::from(root_c);
        if t.is_zero() {
            return Ok(Self::monomial(root_v, root_lead));
        }
        let alpha = Rational::new(BigInt::one(), BigInt::from(n));
        let binom = move |j: u64| -> Rational {
            // (alpha choose j) = alpha (alpha-1) ... (alpha-j+1) / j!
            let mut b = rat_int(1);
            for k in 0..j {
                b = b * (&alpha - rat_int(k as i64)) / rat_int(k as i64 + 1);
            }
            b
        };
        let series = power_series_sum(
            &t,
            binom,
            |cand| {
                let mut p = cand.clone();
                for _ in 1..n {
                    p = p.mul_exact(cand);
                }
                p == unit
            },
            cfg.order as usize,
        );
        Ok(series
            .mul_monomial(&root_v, &root_lead)
            .truncated(cfg))
    }

    /// Standard part: the coefficient of `eps^0`. Defined exactly for
    /// limited numbers; unlimited numbers have none.
    pub fn shadow(&self) -> Result<ComplexRational, Error> {
        match self.classify() {
            NumberClass::Unlimited => Err(Error::UnlimitedNumber),
            NumberClass::Zero | NumberClass::Infinitesimal | NumberClass::Appreciable => {
                let zero_exp = rat_int(0);
                Ok(self
                    .terms
                    .iter()
                    .find(|t| t.exponent == zero_exp)
                    .map(|t| t.coefficient.clone())
                    .unwrap_or_else(ComplexRational::zero))
            }
        }
    }

    /// `a ~ b`: the difference is zero or infinitesimal.
    pub fn infinitely_close(&self, rhs: &Self, cfg: FieldConfig) -> bool {
        self.sub(rhs, cfg).is_infinitesimal_or_zero()
    }

    /// The difference is limited.
    pub fn limited_distance(&self, rhs: &Self, cfg: FieldConfig) -> bool {
        self.sub(rhs, cfg).is_limited()
    }

    /// Same magnitude: the quotient is appreciable, decided by comparing
    /// leading exponents. Both arguments must be nonzero.
    pub fn in_magnitude(&self, rhs: &Self) -> Result<bool, Error> {
        let a = self.leading_exponent().ok_or(Error::ZeroArgument)?;
        let b = rhs.leading_exponent().ok_or(Error::ZeroArgument)?;
        Ok(a == b)
    }

    /// Total order of the real model: the sign of `self - rhs` is the sign
    /// of its leading coefficient (`eps` is positive).
    pub fn cmp_real(&self, rhs: &Self, cfg: FieldConfig) -> Result<Ordering, Error> {
        if cfg.mode != FieldMode::Real || !self.is_real() || !rhs.is_real() {
            return Err(Error::ComplexModeUnsupported);
        }
        let diff = self.sub(rhs, cfg);
        match diff.leading_coefficient() {
            None => Ok(Ordering::Equal),
            Some(c) => {
                if c.re.is_positive() {
                    Ok(Ordering::Greater)
                } else {
                    Ok(Ordering::Less)
                }
            }
        }
    }
}

/// Sum of `coeff_at(j) * t^j` for a series `t` with strictly positive
/// valuation. The sum is computed exactly below an exponent cutoff that is
/// deepened until either `order` significant orders are present or
/// `is_exact` confirms that the partial sum is already the full answer
/// (which happens when the expanded function of `t` is itself a finite
/// series).
fn power_series_sum<C, D>(t: &HyperNumber, coeff_at: C, is_exact: D, order: usize) -> HyperNumber
where
    C: Fn(u64) -> Rational,
    D: Fn(&HyperNumber) -> bool,
{
    let w = t
        .leading_exponent()
        .expect("expansion tail must be nonzero")
        .clone();
    debug_assert!(w.is_positive());
    let mut cutoff = &w * rat_int(order as i64);
    for _ in 0..64 {
        let mut acc: BTreeMap<Rational, ComplexRational> = BTreeMap::new();
        acc.insert(rat_int(0), ComplexRational::from(coeff_at(0)));
        let mut power = HyperNumber::one();
        let mut j: u64 = 1;
        loop {
            power = power.mul_exact(t).drop_above(&cutoff);
            if power.is_zero() {
                break;
            }
            let cj = coeff_at(j);
            if !cj.is_zero() {
                let scaled = power.mul_monomial(&rat_int(0), &ComplexRational::from(cj));
                for term in scaled.terms() {
                    let entry = acc
                        .entry(term.exponent.clone())
                        .or_insert_with(ComplexRational::zero);
                    *entry = entry.clone() + term.coefficient.clone();
                }
            }
            j += 1;
        }
        let candidate = HyperNumber::from_map(acc, None);
        if candidate.terms().len() >= order {
            return HyperNumber {
                terms: candidate.terms[..order].to_vec(),
            };
        }
        if is_exact(&candidate) {
            return candidate;
        }
        cutoff = cutoff * rat_int(2);
    }
    unreachable!("series expansion did not stabilize");
}

/// Outcome of the squeezing resolver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SqueezeOutcome {
    /// The singularity is removable; the value is the common shadow.
    Removable(ComplexRational),
    /// The two one-sided evaluations disagree or are unlimited.
    NotRemovable,
}

/// Resolves a point singularity of a black-box field function by evaluating
/// it at `c + eps` and `c - eps`. If both values are limited with equal
/// shadows, that shadow is the removed value; otherwise the singularity is
/// genuine.
pub fn squeeze_extend<F, E>(
    f: F,
    c: &HyperNumber,
    cfg: FieldConfig,
) -> Result<SqueezeOutcome, Error>
where
    F: Fn(&HyperNumber) -> Result<HyperNumber, E>,
{
    if c.classify() == NumberClass::Unlimited {
        return Err(Error::UnlimitedNumber);
    }
    let eps = HyperNumber::epsilon();
    let plus = f(&c.add(&eps, cfg)).map_err(|_| Error::EvaluationError)?;
    let minus = f(&c.sub(&eps, cfg)).map_err(|_| Error::EvaluationError)?;
    if !plus.is_limited() || !minus.is_limited() {
        return Ok(SqueezeOutcome::NotRemovable);
    }
    let sp = plus.shadow()?;
    let sm = minus.shadow()?;
    if sp == sm {
        Ok(SqueezeOutcome::Removable(sp))
    } else {
        Ok(SqueezeOutcome::NotRemovable)
    }
}
