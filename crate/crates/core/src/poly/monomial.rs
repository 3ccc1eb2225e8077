use std::fmt;

use smallvec::SmallVec;

/// Exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(SmallVec<[u64; 6]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn new(exponents: impl IntoIterator<Item = u64>) -> Self {
        Monomial(exponents.into_iter().collect())
    }

    /// `x_var^exp`.
    pub fn var_power(nvars: usize, var: usize, exp: u64) -> Self {
        let mut m = Self::one(nvars);
        m.0[var] = exp;
        m
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> u64 {
        self.0[var]
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a.checked_add(*b)).collect::<Option<_>>().map(Monomial)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a.checked_sub(*b)).collect::<Option<_>>().map(Monomial)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Every exponent multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> Option<Self> {
        self.0.iter().map(|e| e.checked_mul(factor)).collect::<Option<_>>().map(Monomial)
    }

    /// Index of the single variable when this is a pure power `x_i^k`, `k > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut nonzero = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        let (i, _) = nonzero.next()?;
        nonzero.next().is_none().then_some(i)
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [u64] {
        &mut self.0
    }

    pub(crate) fn with_prepended(&self, count: usize) -> Self {
        let mut v: SmallVec<[u64; 6]> = SmallVec::from_elem(0, count);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    pub(crate) fn without_prefix(&self, count: usize) -> Self {
        Monomial(self.0[count..].iter().copied().collect())
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}
