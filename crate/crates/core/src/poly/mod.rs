//! Sparse multivariate polynomials over `F_p`.
//!
//! Terms are kept strictly sorted in descending grevlex order with respect
//! to the declared variable sequence; this is the canonical form, and
//! [`fmt::Display`] prints it bit-exactly (`x^4 + y^4 + 4*z^4`).

mod monomial;
mod order;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::field::{FieldError, PrimeModulus};

pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("a polynomial ring needs at least one variable")]
    NoVariables,
    #[error("grading weights must be positive and one per variable")]
    BadWeights,
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("exponent overflow")]
    ExponentOverflow,
}

/// `F_p[y_1, ..., y_n]` with a positive grading.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    p: PrimeModulus,
    variables: Vec<String>,
    weights: Vec<u64>,
}

pub type RingRef = Arc<PolyRing>;

impl PolyRing {
    pub fn new<S: AsRef<str>>(p: u64, variables: &[S]) -> Result<RingRef, PolyError> {
        let weights = vec![1; variables.len()];
        Self::with_weights(p, variables, weights)
    }

    pub fn with_weights<S: AsRef<str>>(p: u64, variables: &[S], weights: Vec<u64>) -> Result<RingRef, PolyError> {
        let p = PrimeModulus::new(p)?;
        if variables.is_empty() {
            return Err(PolyError::NoVariables);
        }
        let mut names: Vec<String> = Vec::with_capacity(variables.len());
        for v in variables {
            let v = v.as_ref().trim();
            let valid = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(PolyError::InvalidVariable(v.to_string()));
            }
            if names.iter().any(|n| n == v) {
                return Err(PolyError::DuplicateVariable(v.to_string()));
            }
            names.push(v.to_string());
        }
        if weights.len() != names.len() || weights.contains(&0) {
            return Err(PolyError::BadWeights);
        }
        Ok(Arc::new(PolyRing { p, variables: names, weights }))
    }

    pub fn characteristic(&self) -> PrimeModulus {
        self.p
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::grevlex(self.nvars())
    }

    /// The same ring with `count` fresh variables in front (used for
    /// elimination); the names cannot clash with user variables.
    pub(crate) fn with_leading_variables(&self, count: usize) -> RingRef {
        let mut variables: Vec<String> = (0..count).map(|i| format!("_elim{i}")).collect();
        variables.extend(self.variables.iter().cloned());
        let mut weights = vec![1; count];
        weights.extend(self.weights.iter().copied());
        Arc::new(PolyRing { p: self.p, variables, weights })
    }
}

/// A polynomial in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, u64)>,
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: Arc::clone(ring), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &RingRef, c: i64) -> Self {
        let c = ring.p.reduce_i128(c as i128);
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: u64) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length must match the ring");
        let c = ring.p.reduce(c);
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: Arc::clone(ring), terms }
    }

    pub fn var(ring: &RingRef, index: usize) -> Self {
        Self::monomial(ring, Monomial::var_power(ring.nvars(), index, 1), 1)
    }

    pub fn var_power(ring: &RingRef, index: usize, exp: u64) -> Self {
        Self::monomial(ring, Monomial::var_power(ring.nvars(), index, exp), 1)
    }

    /// Canonicalize arbitrary `(monomial, coefficient)` pairs.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Monomial, u64)>) -> Self {
        let p = ring.p;
        let mut acc: HashMap<Monomial, u64> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            let e = acc.entry(m).or_insert(0);
            *e = p.add(*e, p.reduce(c));
        }
        Self::from_unsorted(ring, acc.into_iter().filter(|(_, c)| *c != 0).collect())
    }

    fn from_unsorted(ring: &RingRef, mut terms: Vec<(Monomial, u64)>) -> Self {
        let order = ring.default_order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring: Arc::clone(ring), terms }
    }

    /// Re-sort terms in descending `order` (for the Gröbner engine).
    pub(crate) fn terms_in_order(&self, order: &MonomialOrder) -> Vec<(Monomial, u64)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        t
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> u64 {
        self.coefficient_of(&Monomial::one(self.ring.nvars()))
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coefficient_of(&self, m: &Monomial) -> u64 {
        let order = self.ring.default_order();
        match self.terms.binary_search_by(|(t, _)| order.cmp(m, t)) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, u64)> {
        self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0)).map(|(m, c)| (m, *c))
    }

    /// Maximum weighted degree of a term.
    pub fn weighted_degree(&self) -> Result<u64, PolyError> {
        self.terms.iter().map(|(m, _)| m.weighted_degree(&self.ring.weights)).max().ok_or(PolyError::ZeroPolynomial)
    }

    /// Maximum exponent of a variable over all terms.
    pub fn degree_in(&self, var: usize) -> u64 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    /// All terms share one weighted degree (the zero polynomial counts).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.weighted_degree(&self.ring.weights));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn same_ring(&self, other: &Self) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let p = self.ring.p;
        let order = self.ring.default_order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match order.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if negate { p.neg(*c) } else { *c }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { p.sub(self.terms[i].1, other.terms[j].1) } else { p.add(self.terms[i].1, other.terms[j].1) };
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), if negate { p.neg(*c) } else { *c })));
        Polynomial { ring: Arc::clone(&self.ring), terms: out }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let p = self.ring.p;
        let mut acc: HashMap<Monomial, u64> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb).ok_or(PolyError::ExponentOverflow)?;
                let e = acc.entry(m).or_insert(0);
                *e = p.add(*e, p.mul(*ca, *cb));
            }
        }
        Ok(Self::from_unsorted(&self.ring, acc.into_iter().filter(|(_, c)| *c != 0).collect()))
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.ring.p;
        let c = p.reduce(c);
        if c == 0 {
            return Self::zero(&self.ring);
        }
        Polynomial { ring: Arc::clone(&self.ring), terms: self.terms.iter().map(|(m, a)| (m.clone(), p.mul(*a, c))).collect() }
    }

    /// Multiply by `c * m`; the order is preserved since orders are
    /// multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Self {
        let p = self.ring.p;
        let c = p.reduce(c);
        if c == 0 {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), p.mul(*a, c))).collect(),
        }
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, mut n: u64) -> Result<Self, PolyError> {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `self^{p^e}`, computed by scaling every exponent vector by `p^e`
    /// (coefficients in `F_p` are fixed by Frobenius).
    pub fn frobenius(&self, e: u32) -> Result<Self, PolyError> {
        let q = self.ring.p.get().checked_pow(e).ok_or(PolyError::ExponentOverflow)?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| m.scaled(q).map(|m| (m, *c)).ok_or(PolyError::ExponentOverflow))
            .collect::<Result<Vec<_>, _>>()?;
        // Scaling preserves grevlex comparisons, so the order is kept.
        Ok(Polynomial { ring: Arc::clone(&self.ring), terms })
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: usize) -> Self {
        let p = self.ring.p;
        Self::from_unsorted(
            &self.ring,
            self.terms
                .iter()
                .filter(|(m, _)| m.exponent(var) > 0)
                .filter_map(|(m, c)| {
                    let e = m.exponent(var);
                    let c = p.mul(*c, p.reduce(e));
                    (c != 0).then(|| {
                        let mut m = m.clone();
                        m.exponents_mut()[var] -= 1;
                        (m, c)
                    })
                })
                .collect(),
        )
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.same_ring(divisor).ok()?;
        let order = self.ring.default_order();
        let (lm, lc) = divisor.terms.first().map(|(m, c)| (m.clone(), *c))?;
        let lc_inv = self.ring.p.inv(lc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let shift = m.div(&lm)?;
            let qc = self.ring.p.mul(c, lc_inv);
            rem = rem.merge(&divisor.mul_term(&shift, qc), true);
            quot.push((shift, qc));
        }
        quot.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Some(Polynomial { ring: Arc::clone(&self.ring), terms: quot })
    }

    /// Drop every term that `keep` rejects.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Polynomial { ring: Arc::clone(&self.ring), terms: self.terms.iter().filter(|(m, _)| keep(m)).cloned().collect() }
    }

    /// Make the leading coefficient (in the default order) equal to one.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.ring.p.inv(*c).expect("nonzero coefficient")),
        }
    }

    /// Move into `target`, which has `count` extra leading variables.
    pub(crate) fn lift(&self, target: &RingRef, count: usize) -> Self {
        Self::from_unsorted(target, self.terms.iter().map(|(m, c)| (m.with_prepended(count), *c)).collect())
    }

    /// Inverse of [`Polynomial::lift`]; `None` if a leading variable occurs.
    pub(crate) fn lower(&self, target: &RingRef, count: usize) -> Option<Self> {
        if self.terms.iter().any(|(m, _)| m.exponents()[..count].iter().any(|&e| e > 0)) {
            return None;
        }
        Some(Self::from_unsorted(target, self.terms.iter().map(|(m, c)| (m.without_prefix(count), *c)).collect()))
    }

    pub(crate) fn from_sorted_terms(ring: &RingRef, order: &MonomialOrder, terms: Vec<(Monomial, u64)>) -> Self {
        if *order == ring.default_order() {
            Polynomial { ring: Arc::clone(ring), terms }
        } else {
            Self::from_unsorted(ring, terms)
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if *c == 1 {
                f.write_str(&m.fmt_with(&self.ring.variables))?;
            } else {
                write!(f, "{c}*{}", m.fmt_with(&self.ring.variables))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.p.get() - 1)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(p: u64) -> (RingRef, Polynomial, Polynomial) {
        let r = PolyRing::new(p, &["x", "y"]).unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        (r, x, y)
    }

    #[test]
    fn freshmans_dream_and_expansion() {
        let (_, x, y) = xy(2);
        assert_eq!((&x + &y).pow(2).unwrap(), &x.pow(2).unwrap() + &y.pow(2).unwrap());
        let (_, x, y) = xy(3);
        assert_eq!((&x + &y).pow(3).unwrap().to_string(), "x^3 + y^3");
        let (_, x, y) = xy(5);
        let sq = (&x + &y).pow(2).unwrap();
        assert_eq!(sq.to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(sq.coefficient_of(&Monomial::new([1, 1])), 2);
        assert_eq!(sq.coefficient_of(&Monomial::new([3, 0])), 0);
    }

    #[test]
    fn frobenius_matches_power() {
        let (r, x, y) = xy(5);
        let f = &(&x.pow(2).unwrap() * &y) + &Polynomial::one(&r);
        assert_eq!(f.frobenius(1).unwrap(), f.pow(5).unwrap());
        assert_eq!(f.frobenius(1).unwrap().to_string(), "x^10*y^5 + 1");
        let c = Polynomial::constant(&r, 3);
        assert_eq!(c.frobenius(2).unwrap(), c);
        let big = Polynomial::var_power(&r, 0, u64::MAX / 2);
        assert_eq!(big.frobenius(1), Err(PolyError::ExponentOverflow));
    }

    #[test]
    fn degrees() {
        let r = PolyRing::new(5, &["x", "y", "z"]).unwrap();
        let f = Polynomial::from_terms(&r, [(Monomial::new([4, 0, 0]), 1), (Monomial::new([0, 4, 0]), 1), (Monomial::new([0, 0, 4]), 4)]);
        assert_eq!(f.to_string(), "x^4 + y^4 + 4*z^4");
        assert_eq!(f.weighted_degree(), Ok(4));
        assert!(f.is_homogeneous());
        let g = &Polynomial::var(&r, 0) + &Polynomial::one(&r);
        assert_eq!(g.weighted_degree(), Ok(1));
        assert!(!g.is_homogeneous());
        assert_eq!(Polynomial::zero(&r).weighted_degree(), Err(PolyError::ZeroPolynomial));
        let w = PolyRing::with_weights(5, &["x", "y"], vec![1, 2]).unwrap();
        let h = &Polynomial::var_power(&w, 0, 2) + &Polynomial::var(&w, 1);
        assert_eq!(h.weighted_degree(), Ok(2));
        assert!(h.is_homogeneous());
    }

    #[test]
    fn ring_construction_errors() {
        assert_eq!(PolyRing::new(5, &["x", "x"]), Err(PolyError::DuplicateVariable("x".into())));
        assert_eq!(PolyRing::new(6, &["x"]), Err(PolyError::Field(FieldError::NotPrime(6))));
        assert!(PolyRing::new(5, &["2x"]).is_err());
        let (_, x, _) = xy(5);
        let (_, x7, _) = xy(7);
        assert_eq!(x.checked_add(&x7), Err(PolyError::RingMismatch));
    }

    #[test]
    fn exact_division() {
        let (_, x, y) = xy(7);
        let f = &(&x + &y) * &(&x - &y);
        assert_eq!(f.exact_div(&(&x + &y)).unwrap(), &x - &y);
        assert!(f.exact_div(&x).is_none());
    }

    #[test]
    fn derivative() {
        let (_, x, y) = xy(3);
        let f = &x.pow(3).unwrap() + &(&x.pow(2).unwrap() * &y);
        assert_eq!(f.derivative(0).to_string(), "2*x*y");
    }
}
