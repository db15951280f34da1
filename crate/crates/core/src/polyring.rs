//! Sparse multivariate Laurent polynomials with big-integer coefficients.
//!
//! Exponents are stored doubled, so an entry `2c` is the exponent `c`. This
//! keeps the half-integer monomials of type-B alternants in integer
//! arithmetic. Terms live in a `BTreeMap` keyed by [`ExponentVector`], whose
//! order is graded-lexicographic; iteration order is therefore canonical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("factor is not of the form 1 - monomial: {0}")]
    NotOneMinusMonomial(String),
    #[error("factor monomial has non-positive degree: {0}")]
    NonPositiveDegree(String),
    #[error("exact division failed: divisor does not divide dividend")]
    NotDivisible,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("exact division requires non-negative exponents")]
    NegativeExponent,
    #[error("bad serialized term: {0}")]
    BadTerm(String),
}

/// Doubled exponents of a monomial: entry `2c` encodes `x_i^c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<i32>);

impl ExponentVector {
    pub fn zero(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    pub fn from_doubled(doubled: Vec<i32>) -> Self {
        ExponentVector(doubled)
    }

    /// From ordinary integer exponents.
    pub fn from_integer(exps: &[i32]) -> Self {
        ExponentVector(exps.iter().map(|e| 2 * e).collect())
    }

    /// Exponent 1 in variable `i`.
    pub fn unit(nvars: usize, i: usize) -> Self {
        let mut v = vec![0; nvars];
        v[i] = 2;
        ExponentVector(v)
    }

    pub fn doubled(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Twice the total degree.
    pub fn doubled_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    /// Total degree when it is an integer.
    pub fn degree(&self) -> Option<i64> {
        let d = self.doubled_degree();
        (d % 2 == 0).then_some(d / 2)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|e| e % 2 == 0)
    }

    fn plus(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn minus(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for ExponentVector {
    /// Graded-lexicographic: total degree first, then the exponent entries.
    fn cmp(&self, other: &Self) -> Ordering {
        self.doubled_degree()
            .cmp(&other.doubled_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in a fixed number of variables; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::monomial(ExponentVector::zero(nvars), c)
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(ExponentVector::unit(nvars, i), BigInt::one())
    }

    pub fn monomial(exp: ExponentVector, coef: BigInt) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        MultiPoly { nvars, terms }
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, BigInt)>,
    {
        let mut p = MultiPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length must equal variable count");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.doubled_degree() == 0 && e.0.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (graded-lexicographic, ascending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExponentVector) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exp: ExponentVector, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::VarCountMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        Ok(self.mul_bounded(other, None))
    }

    /// Product keeping only terms whose doubled degree is at most `max_doubled`.
    fn mul_bounded(&self, other: &Self, max_doubled: Option<i64>) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        if self.is_zero() || other.is_zero() {
            return out;
        }
        for (ea, ca) in &self.terms {
            let da = ea.doubled_degree();
            for (eb, cb) in &other.terms {
                if max_doubled.is_some_and(|m| da + eb.doubled_degree() > m) {
                    // terms are graded, so the rest of `other` is at least this degree
                    break;
                }
                out.add_term(ea.plus(eb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by a single monomial.
    pub fn shift(&self, exp: &ExponentVector) -> Self {
        assert_eq!(exp.len(), self.nvars);
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.plus(exp), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = MultiPoly::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn homogeneous_component(&self, d: i64) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.doubled_degree() == 2 * d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of total degree above `d`.
    pub fn truncate(&self, d: i64) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .take_while(|(e, _)| e.doubled_degree() <= 2 * d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Largest doubled total degree, `None` for zero.
    pub fn max_doubled_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().map(ExponentVector::doubled_degree)
    }

    /// Smallest doubled total degree, `None` for zero.
    pub fn min_doubled_degree(&self) -> Option<i64> {
        self.terms.keys().next().map(ExponentVector::doubled_degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.min_doubled_degree() == self.max_doubled_degree()
    }

    /// Value at x = (1, …, 1), i.e. the sum of the coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Reembeds into a ring of `nvars` variables: old variable `i` becomes `map[i]`.
    pub fn relabel(&self, nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut out = MultiPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut v = vec![0; nvars];
            for (i, &x) in e.0.iter().enumerate() {
                v[map[i]] += x;
            }
            out.add_term(ExponentVector(v), c.clone());
        }
        out
    }

    /// Applies `f` to every exponent vector.
    pub fn map_exponents<F: Fn(&ExponentVector) -> ExponentVector>(&self, f: F) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    /// Exact division by `divisor`, for polynomials with non-negative exponents.
    /// Fails unless the remainder is zero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        self.check_vars(divisor)?;
        let (lead_e, lead_c) = divisor.terms.iter().next_back().ok_or(PolyError::DivisionByZero)?;
        let negative = |p: &MultiPoly| p.terms.keys().any(|e| e.0.iter().any(|&x| x < 0));
        if negative(self) || negative(divisor) {
            return Err(PolyError::NegativeExponent);
        }
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((e, c)) = rem.terms.iter().next_back() {
            if !lead_e.divides(e) || !(c % lead_c).is_zero() {
                return Err(PolyError::NotDivisible);
            }
            let t = MultiPoly::monomial(e.minus(lead_e), c / lead_c);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    pub fn to_terms_json(&self) -> Vec<PolyTerm> {
        self.terms
            .iter()
            .map(|(e, c)| PolyTerm { exp: e.0.clone(), coef: c.to_string() })
            .collect()
    }

    pub fn from_terms_json(nvars: usize, terms: &[PolyTerm]) -> Result<Self, PolyError> {
        let mut p = MultiPoly::zero(nvars);
        for t in terms {
            if t.exp.len() != nvars {
                return Err(PolyError::BadTerm(format!("exponent {:?} has wrong length", t.exp)));
            }
            let c: BigInt = t.coef.parse().map_err(|_| PolyError::BadTerm(t.coef.clone()))?;
            p.add_term(ExponentVector(t.exp.clone()), c);
        }
        Ok(p)
    }
}

/// One serialized term: doubled exponents and a decimal coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub exp: Vec<i32>,
    pub coef: String,
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_terms_json().serialize(s)
    }
}

impl fmt::Display for MultiPoly {
    /// Human-readable form, e.g. `1 - x1^2 + 2*x1*x2^(1/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| match (x % 2 == 0, x) {
                    (true, 2) => format!("x{}", i + 1),
                    (true, _) => format!("x{}^{}", i + 1, x / 2),
                    (false, _) => format!("x{}^({}/2)", i + 1, x),
                })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            /// Panics on a variable-count mismatch; use the `checked_*` form to recover.
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("polynomial operands")
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$checked(&rhs).expect("polynomial operands")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    /// Panics on an empty iterator, which has no variable count.
    fn sum<I: Iterator<Item = MultiPoly>>(mut iter: I) -> MultiPoly {
        let first = iter.next().expect("sum of polynomials needs at least one term");
        iter.fold(first, |acc, p| &acc + &p)
    }
}

/// A polynomial known exactly through total degree `valid` (`None`: exact to all degrees).
/// No term above the valid degree is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: MultiPoly,
    valid: Option<u32>,
}

impl TruncatedSeries {
    /// Truncates `poly` to degree `valid`.
    pub fn new(poly: MultiPoly, valid: u32) -> Self {
        TruncatedSeries { poly: poly.truncate(valid as i64), valid: Some(valid) }
    }

    pub fn exact(poly: MultiPoly) -> Self {
        TruncatedSeries { poly, valid: None }
    }

    pub fn with_validity(poly: MultiPoly, valid: Option<u32>) -> Self {
        match valid {
            Some(d) => Self::new(poly, d),
            None => Self::exact(poly),
        }
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly {
        self.poly
    }

    pub fn valid_degree(&self) -> Option<u32> {
        self.valid
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    fn meet(a: Option<u32>, b: Option<u32>) -> Option<u32> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        }
    }

    /// Product valid to the smaller of the two degrees.
    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.poly.check_vars(&other.poly)?;
        let valid = Self::meet(self.valid, other.valid);
        let poly = self.poly.mul_bounded(&other.poly, valid.map(|d| 2 * d as i64));
        Ok(TruncatedSeries::with_validity(poly, valid))
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        let valid = Self::meet(self.valid, other.valid);
        Ok(TruncatedSeries::with_validity(self.poly.checked_add(&other.poly)?, valid))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        let valid = Self::meet(self.valid, other.valid);
        Ok(TruncatedSeries::with_validity(self.poly.checked_sub(&other.poly)?, valid))
    }

    /// Multiplies by an exact polynomial, keeping the validity degree.
    pub fn mul_poly(&self, p: &MultiPoly) -> Result<Self, PolyError> {
        self.mul(&TruncatedSeries::exact(p.clone()))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        TruncatedSeries { poly: self.poly.scale(c), valid: self.valid }
    }
}

/// Π (1 − m_k)⁻¹ expanded through total degree `degree`, one geometric
/// series per factor. Each factor must be exactly `1 - m` for a monomial `m`
/// of positive degree.
pub fn expand_inverse_product(factors: &[MultiPoly], degree: u32, nvars: usize) -> Result<TruncatedSeries, PolyError> {
    let mut acc = TruncatedSeries::new(MultiPoly::one(nvars), degree);
    for f in factors {
        if f.nvars() != nvars {
            return Err(PolyError::VarCountMismatch { left: nvars, right: f.nvars() });
        }
        let zero = ExponentVector::zero(nvars);
        let mono = match (f.len(), f.coeff(&zero).is_one()) {
            (2, true) => f.terms().find(|(e, _)| **e != zero).map(|(e, c)| (e.clone(), c.clone())),
            _ => None,
        };
        let (exp, c) = mono.ok_or_else(|| PolyError::NotOneMinusMonomial(f.to_string()))?;
        if c != -BigInt::one() {
            return Err(PolyError::NotOneMinusMonomial(f.to_string()));
        }
        let step = exp.doubled_degree();
        if step <= 0 {
            return Err(PolyError::NonPositiveDegree(f.to_string()));
        }
        let mut geo = MultiPoly::zero(nvars);
        let mut power = ExponentVector::zero(nvars);
        let mut d = 0;
        while d <= 2 * degree as i64 {
            geo.add_term(power.clone(), BigInt::one());
            power = power.plus(&exp);
            d += step;
        }
        acc = acc.mul(&TruncatedSeries::new(geo, degree))?;
    }
    Ok(acc)
}

/// `1 - x^exp`, with integer (not doubled) exponents.
pub fn one_minus(nvars: usize, exps: &[i32]) -> MultiPoly {
    &MultiPoly::one(nvars) - &MultiPoly::monomial(ExponentVector::from_integer(exps), BigInt::one())
}
