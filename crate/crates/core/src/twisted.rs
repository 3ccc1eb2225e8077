//! Sparse univariate polynomials over a finite field in `u = x^{1/p^t}`.
//!
//! This is the coefficient domain `k[x^{1/p^t}]` used for Frobenius
//! structures on free modules over (finite-depth truncations of) the perfect
//! closure of `k[x]`. Exponents are counted in units of `u`; the variable is
//! printed as `x` with fractional exponents when `t > 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{FieldRef, FieldScalar};
use crate::scalar::{power_of, FrobeniusScalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TwistedPoly {
    field: FieldRef,
    depth: u32,
    /// Ascending `u`-exponent, no zero coefficients.
    terms: Vec<(u64, FieldScalar)>,
}

impl TwistedPoly {
    pub fn zero(field: &FieldRef, depth: u32) -> Self {
        TwistedPoly { field: field.clone(), depth, terms: Vec::new() }
    }

    pub fn constant(c: FieldScalar, depth: u32) -> Self {
        let field = c.field().clone();
        let terms = if c.is_zero() { Vec::new() } else { vec![(0, c)] };
        TwistedPoly { field, depth, terms }
    }

    /// `c * u^exp`.
    pub fn monomial(c: FieldScalar, exp: u64, depth: u32) -> Self {
        let field = c.field().clone();
        let terms = if c.is_zero() { Vec::new() } else { vec![(exp, c)] };
        TwistedPoly { field, depth, terms }
    }

    /// The element `x = u^{p^t}`.
    pub fn x(field: &FieldRef, depth: u32) -> Self {
        let p = field.characteristic().get();
        Self::monomial(field.one(), p.pow(depth), depth)
    }

    /// Build from `(u-exponent, coefficient)` pairs, combining duplicates.
    pub fn from_terms(field: &FieldRef, depth: u32, terms: impl IntoIterator<Item = (u64, FieldScalar)>) -> Self {
        let mut acc: BTreeMap<u64, FieldScalar> = BTreeMap::new();
        for (e, c) in terms {
            match acc.get_mut(&e) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(e, c);
                }
            }
        }
        TwistedPoly { field: field.clone(), depth, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn terms(&self) -> &[(u64, FieldScalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree in `u`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn leading_coefficient(&self) -> Option<&FieldScalar> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn coefficient(&self, exp: u64) -> FieldScalar {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn as_constant(&self) -> Option<FieldScalar> {
        match self.terms.as_slice() {
            [] => Some(self.field.zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    /// Re-express at a deeper root level: `u_old = u_new^{p^(new - old)}`.
    pub fn with_depth(&self, new_depth: u32) -> Option<Self> {
        if new_depth < self.depth {
            let factor = self.field.characteristic().get().pow(self.depth - new_depth);
            if self.terms.iter().any(|(e, _)| e % factor != 0) {
                return None;
            }
            return Some(TwistedPoly {
                field: self.field.clone(),
                depth: new_depth,
                terms: self.terms.iter().map(|(e, c)| (e / factor, c.clone())).collect(),
            });
        }
        let factor = self.field.characteristic().get().pow(new_depth - self.depth);
        Some(TwistedPoly {
            field: self.field.clone(),
            depth: new_depth,
            terms: self.terms.iter().map(|(e, c)| (e * factor, c.clone())).collect(),
        })
    }

    /// Evaluate at `u = point`.
    pub fn evaluate(&self, point: &FieldScalar) -> FieldScalar {
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            acc = &acc + &(c * &point.pow(*e));
        }
        acc
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        self.check_compatible(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j == other.terms.len() || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0);
            let take_right = i == self.terms.len() || (j < other.terms.len() && other.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                let (e, c) = &other.terms[j];
                out.push((*e, if negate { -c } else { c.clone() }));
                j += 1;
            } else {
                let c = if negate { &self.terms[i].1 - &other.terms[j].1 } else { &self.terms[i].1 + &other.terms[j].1 };
                if !c.is_zero() {
                    out.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        TwistedPoly { field: self.field.clone(), depth: self.depth, terms: out }
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.depth == other.depth && self.field == other.field,
            "twisted polynomials over different domains ({} at depth {}, {} at depth {})",
            self.field,
            self.depth,
            other.field,
            other.depth
        );
    }

    fn multiply(&self, other: &Self) -> Self {
        self.check_compatible(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field, self.depth);
        }
        let mut acc: BTreeMap<u64, FieldScalar> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.checked_add(*eb).expect("u-exponent overflow");
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v = &*v + &prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        TwistedPoly { field: self.field.clone(), depth: self.depth, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        self.check_compatible(divisor);
        let (&dlead_e, dlead_c) = divisor.terms.last().map(|(e, c)| (e, c))?;
        let dlead_inv = dlead_c.inv().ok()?;
        let mut rem: BTreeMap<u64, FieldScalar> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(u64, FieldScalar)> = Vec::new();
        while let Some((&e, c)) = rem.iter().next_back() {
            if e < dlead_e {
                break;
            }
            let qc = c * &dlead_inv;
            let shift = e - dlead_e;
            for (de, dc) in &divisor.terms {
                let target = de + shift;
                let sub = &qc * dc;
                let entry = rem.entry(target).or_insert_with(|| self.field.zero());
                *entry = &*entry - &sub;
                if entry.is_zero() {
                    rem.remove(&target);
                }
            }
            quot.push((shift, qc));
        }
        quot.reverse();
        Some((
            TwistedPoly { field: self.field.clone(), depth: self.depth, terms: quot },
            TwistedPoly { field: self.field.clone(), depth: self.depth, terms: rem.into_iter().collect() },
        ))
    }

    /// `d/du`.
    pub fn derivative(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| *e > 0)
            .map(|(e, c)| (e - 1, c * &self.field.from_u64(*e)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        TwistedPoly { field: self.field.clone(), depth: self.depth, terms }
    }
}

impl FrobeniusScalar for TwistedPoly {
    fn zero_like(&self) -> Self {
        Self::zero(&self.field, self.depth)
    }

    fn one_like(&self) -> Self {
        Self::constant(self.field.one(), self.depth)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn characteristic(&self) -> u64 {
        self.field.characteristic().get()
    }

    /// Exponents scale by `q`, coefficients go through the field Frobenius.
    fn frobenius_power(&self, q: u64) -> Self {
        if q == 1 {
            return self.clone();
        }
        let e = power_of(self.characteristic(), q).expect("Frobenius twist must be a power of the characteristic");
        let terms = self
            .terms
            .iter()
            .map(|(exp, c)| (exp.checked_mul(q).expect("u-exponent overflow"), c.frobenius(e)))
            .collect();
        TwistedPoly { field: self.field.clone(), depth: self.depth, terms }
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(other)?;
        r.is_zero().then_some(q)
    }

    fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(0, c)] if c.is_one())
    }

    fn pow(&self, mut exp: u64) -> Self {
        // Single terms are common (Frobenius images of monomials).
        if let [(e, c)] = self.terms.as_slice() {
            return Self::monomial(c.pow(exp), e.checked_mul(exp).expect("u-exponent overflow"), self.depth);
        }
        let mut acc = self.one_like();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.multiply(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.multiply(&base);
            }
        }
        acc
    }
}

impl Add for TwistedPoly {
    type Output = TwistedPoly;
    fn add(self, rhs: Self) -> Self {
        self.combine(&rhs, false)
    }
}

impl Sub for TwistedPoly {
    type Output = TwistedPoly;
    fn sub(self, rhs: Self) -> Self {
        self.combine(&rhs, true)
    }
}

impl Mul for TwistedPoly {
    type Output = TwistedPoly;
    fn mul(self, rhs: Self) -> Self {
        self.multiply(&rhs)
    }
}

impl<'a> Add<&'a TwistedPoly> for &'a TwistedPoly {
    type Output = TwistedPoly;
    fn add(self, rhs: &'a TwistedPoly) -> TwistedPoly {
        self.combine(rhs, false)
    }
}

impl<'a> Sub<&'a TwistedPoly> for &'a TwistedPoly {
    type Output = TwistedPoly;
    fn sub(self, rhs: &'a TwistedPoly) -> TwistedPoly {
        self.combine(rhs, true)
    }
}

impl<'a> Mul<&'a TwistedPoly> for &'a TwistedPoly {
    type Output = TwistedPoly;
    fn mul(self, rhs: &'a TwistedPoly) -> TwistedPoly {
        self.multiply(rhs)
    }
}

impl Neg for TwistedPoly {
    type Output = TwistedPoly;
    fn neg(self) -> Self {
        TwistedPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(), ..self }
    }
}

/// Compact form, highest degree first: `x^4+1`, `2*x^(1/3)`, `(g+1)*x`.
impl fmt::Display for TwistedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let denom = self.field.characteristic().get().pow(self.depth);
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let mono = if *e == 0 {
                String::new()
            } else {
                let g = gcd(*e, denom);
                let (num, den) = (e / g, denom / g);
                match (num, den) {
                    (1, 1) => "x".to_string(),
                    (n, 1) => format!("x^{n}"),
                    (n, d) => format!("x^({n}/{d})"),
                }
            };
            let coeff = c.to_string();
            let coeff = if coeff.contains('+') { format!("({coeff})") } else { coeff };
            match (c.is_one(), mono.is_empty()) {
                (_, true) => f.write_str(&coeff)?,
                (true, false) => f.write_str(&mono)?,
                (false, false) => write!(f, "{coeff}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TwistedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    #[test]
    fn arithmetic_and_display() {
        let f3 = FiniteField::prime(3).unwrap();
        let x = TwistedPoly::x(&f3, 0);
        let one = x.one_like();
        let a2 = &x.pow(4) + &one;
        assert_eq!(a2.to_string(), "x^4+1");
        assert_eq!(x.frobenius_power(3).to_string(), "x^3");
        let (q, r) = (&a2 * &x).div_rem(&x).unwrap();
        assert_eq!(q, a2);
        assert!(r.is_zero());
        assert!(a2.exact_div(&x).is_none());
    }

    #[test]
    fn fractional_exponents() {
        let f3 = FiniteField::prime(3).unwrap();
        let u = TwistedPoly::monomial(f3.one(), 1, 1);
        assert_eq!(u.to_string(), "x^(1/3)");
        assert_eq!(u.pow(3), TwistedPoly::x(&f3, 1));
        assert_eq!(TwistedPoly::x(&f3, 0).with_depth(2).unwrap(), TwistedPoly::x(&f3, 2));
    }
}
