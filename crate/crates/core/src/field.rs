//! Finite fields `F_p` and `F_{p^m}` with exact arithmetic.
//!
//! A [`FiniteField`] is shared behind an [`Arc`]; every [`FieldScalar`]
//! carries a handle to its field so that mixed-field arithmetic is detected
//! instead of silently producing garbage.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::SmallVec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields ({left} and {right})")]
    FieldMismatch { left: String, right: String },
    #[error("defining polynomial {0} is not irreducible")]
    Reducible(String),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field {target} does not contain {source_field}")]
    NotASubfield { source_field: String, target: String },
}

/// A prime `p < 2^63`, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p < (1 << 63) && is_prime(p) {
            Ok(PrimeModulus(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn reduce(self, a: u64) -> u64 {
        a % self.0
    }

    pub fn reduce_i128(self, a: i128) -> u64 {
        a.rem_euclid(self.0 as i128) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse in `F_p`; `None` for zero.
    pub fn inv(self, a: u64) -> Option<u64> {
        let a = a % self.0;
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.0 - 2))
        }
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Dense univariate polynomials over `F_p`, coefficients low degree first.
/// Only what the field constructions need.
pub(crate) mod upoly {
    use super::PrimeModulus;

    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(p: PrimeModulus, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = p.add(out[i + j], p.mul(x, y));
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of `a` modulo the monic polynomial `m`.
    pub fn rem_monic(p: PrimeModulus, a: &[u64], m: &[u64]) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            if lead != 0 {
                for (i, &c) in m.iter().enumerate() {
                    r[shift + i] = p.sub(r[shift + i], p.mul(lead, c));
                }
            }
            r.pop();
            trim(&mut r);
        }
        r
    }

    /// Monic polynomial of degree `deg` with lower coefficients given by the
    /// base-`p` digits of `index`.
    pub fn monic_from_index(p: PrimeModulus, deg: usize, mut index: u64) -> Vec<u64> {
        let mut v = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            v.push(index % p.get());
            index /= p.get();
        }
        v.push(1);
        v
    }

    fn sub(p: PrimeModulus, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            *o = p.sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0));
        }
        trim(&mut out);
        out
    }

    fn monic(p: PrimeModulus, a: &[u64]) -> Vec<u64> {
        let inv = p.inv(*a.last().expect("nonzero polynomial")).expect("nonzero lead");
        a.iter().map(|&c| p.mul(c, inv)).collect()
    }

    /// Monic gcd; empty when both inputs are zero.
    pub fn gcd(p: PrimeModulus, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem_monic(p, &a, &monic(p, &b));
            a = b;
            b = r;
        }
        if a.is_empty() {
            a
        } else {
            monic(p, &a)
        }
    }

    /// `a^p mod m` for monic `m`.
    fn pth_power_mod(p: PrimeModulus, a: &[u64], m: &[u64]) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut base = rem_monic(p, a, m);
        let mut e = p.get();
        while e > 0 {
            if e & 1 == 1 {
                acc = rem_monic(p, &mul(p, &acc, &base), m);
            }
            e >>= 1;
            if e > 0 {
                base = rem_monic(p, &mul(p, &base, &base), m);
            }
        }
        acc
    }

    /// Rabin's test: `u^{p^m} = u` modulo `f` and `gcd(u^{p^{m/r}} - u, f) = 1`
    /// for every prime `r | m`.
    pub fn is_irreducible(p: PrimeModulus, f: &[u64]) -> bool {
        let mut f = f.to_vec();
        trim(&mut f);
        if f.len() < 2 {
            return false;
        }
        let f = monic(p, &f);
        let deg = f.len() - 1;
        if deg == 1 {
            return true;
        }
        let u = vec![0u64, 1];
        let mut powers = vec![rem_monic(p, &u, &f)];
        for k in 1..=deg {
            let next = pth_power_mod(p, &powers[k - 1], &f);
            powers.push(next);
        }
        if powers[deg] != powers[0] {
            return false;
        }
        prime_factors(deg).into_iter().all(|r| gcd(p, &sub(p, &powers[deg / r], &u), &f).len() == 1)
    }

    pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                out.push(d);
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }

    pub fn display(coeffs: &[u64], var: &str) -> String {
        let mut parts = Vec::new();
        for (i, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            parts.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}*{mono}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

/// The smallest monic irreducible of degree `m` over `F_p`, where
/// polynomials `u^m + c_{m-1}u^{m-1} + ... + c_0` are enumerated by the
/// integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`.
///
/// Coefficients are returned low degree first (length `m + 1`).
pub fn find_irreducible(p: PrimeModulus, m: usize) -> Result<Vec<u64>, FieldError> {
    if m == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let mut idx = 0u64;
    loop {
        let cand = upoly::monic_from_index(p, m, idx);
        if upoly::is_irreducible(p, &cand) {
            return Ok(cand);
        }
        idx += 1;
    }
}

/// `F_{p^m} = F_p[g]/(modulus)`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: PrimeModulus,
    modulus: Vec<u64>,
}

pub type FieldRef = Arc<FiniteField>;

impl FiniteField {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<FieldRef, FieldError> {
        let p = PrimeModulus::new(p)?;
        Ok(Arc::new(FiniteField { p, modulus: vec![0, 1] }))
    }

    /// `F_{p^m}` defined by [`find_irreducible`].
    pub fn extension(p: u64, m: usize) -> Result<FieldRef, FieldError> {
        let p = PrimeModulus::new(p)?;
        let modulus = find_irreducible(p, m)?;
        Ok(Arc::new(FiniteField { p, modulus }))
    }

    /// Field defined by an explicit monic modulus (low degree first).
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<FieldRef, FieldError> {
        let p = PrimeModulus::new(p)?;
        let mut modulus: Vec<u64> = modulus.into_iter().map(|c| p.reduce(c)).collect();
        upoly::trim(&mut modulus);
        if modulus.len() < 2 {
            return Err(FieldError::ZeroDegree);
        }
        let lead_inv = p.inv(*modulus.last().unwrap()).expect("trimmed");
        for c in modulus.iter_mut() {
            *c = p.mul(*c, lead_inv);
        }
        if !upoly::is_irreducible(p, &modulus) {
            return Err(FieldError::Reducible(upoly::display(&modulus, "u")));
        }
        Ok(Arc::new(FiniteField { p, modulus }))
    }

    #[inline]
    pub fn characteristic(&self) -> PrimeModulus {
        self.p
    }

    /// Extension degree `m` over `F_p`.
    #[inline]
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Number of elements, `p^m`.
    pub fn order(&self) -> u128 {
        (self.p.get() as u128).pow(self.degree() as u32)
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree() == 1
    }

    pub fn zero(self: &Arc<Self>) -> FieldScalar {
        FieldScalar { field: Arc::clone(self), coeffs: SmallVec::from_elem(0, self.degree()) }
    }

    pub fn one(self: &Arc<Self>) -> FieldScalar {
        self.from_int(1)
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> FieldScalar {
        let mut z = self.zero();
        z.coeffs[0] = self.p.reduce_i128(n as i128);
        z
    }

    pub fn from_u64(self: &Arc<Self>, n: u64) -> FieldScalar {
        let mut z = self.zero();
        z.coeffs[0] = self.p.reduce(n);
        z
    }

    /// The class of the polynomial generator `g` (equal to the residue of
    /// `-c_0` when the field is `F_p`, since the modulus is then `u + c_0`).
    pub fn generator(self: &Arc<Self>) -> FieldScalar {
        self.from_poly(&[0, 1])
    }

    /// Reduce an arbitrary polynomial in the generator into the field.
    pub fn from_poly(self: &Arc<Self>, coeffs: &[u64]) -> FieldScalar {
        let reduced: Vec<u64> = coeffs.iter().map(|&c| self.p.reduce(c)).collect();
        let r = upoly::rem_monic(self.p, &reduced, &self.modulus);
        let mut z = self.zero();
        for (i, c) in r.into_iter().enumerate() {
            z.coeffs[i] = c;
        }
        z
    }

    /// Element number `index` in the fixed enumeration (base-`p` digits of
    /// `index` are the coefficients, low degree first).
    pub fn element(self: &Arc<Self>, mut index: u128) -> FieldScalar {
        let mut z = self.zero();
        let p = self.p.get() as u128;
        for c in z.coeffs.iter_mut() {
            *c = (index % p) as u64;
            index /= p;
        }
        z
    }

    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldScalar> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    fn describe(&self) -> String {
        if self.is_prime_field() {
            format!("F_{}", self.p)
        } else {
            format!("F_{}^{}[{}]", self.p, self.degree(), upoly::display(&self.modulus, "g"))
        }
    }

    /// Find the embedding `self -> target` sending the generator to the
    /// smallest (in enumeration order) root of `self`'s modulus in `target`.
    pub fn embedding_into(self: &Arc<Self>, target: &FieldRef) -> Result<FieldEmbedding, FieldError> {
        let err = || FieldError::NotASubfield { source_field: self.describe(), target: target.describe() };
        if self.p != target.p || target.degree() % self.degree() != 0 {
            return Err(err());
        }
        if self.is_prime_field() {
            return Ok(FieldEmbedding { source: Arc::clone(self), target: Arc::clone(target), image_of_generator: None });
        }
        let modulus: Vec<FieldScalar> = self.modulus.iter().map(|&c| target.from_u64(c)).collect();
        let root = kpoly::roots(target, &modulus).into_iter().min_by_key(FieldScalar::index).ok_or_else(err)?;
        Ok(FieldEmbedding { source: Arc::clone(self), target: Arc::clone(target), image_of_generator: Some(root) })
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Dense univariate polynomials over an arbitrary finite field,
/// coefficients low degree first.
pub(crate) mod kpoly {
    use super::{upoly, FieldRef, FieldScalar};

    fn trim(v: &mut Vec<FieldScalar>) {
        while v.last().is_some_and(FieldScalar::is_zero) {
            v.pop();
        }
    }

    fn mul(a: &[FieldScalar], b: &[FieldScalar]) -> Vec<FieldScalar> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![a[0].field().zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
        trim(&mut out);
        out
    }

    fn sub(a: &[FieldScalar], b: &[FieldScalar], k: &FieldRef) -> Vec<FieldScalar> {
        let mut out: Vec<FieldScalar> = (0..a.len().max(b.len()))
            .map(|i| &a.get(i).cloned().unwrap_or_else(|| k.zero()) - &b.get(i).cloned().unwrap_or_else(|| k.zero()))
            .collect();
        trim(&mut out);
        out
    }

    fn monic(a: &[FieldScalar]) -> Vec<FieldScalar> {
        let inv = a.last().expect("nonzero polynomial").inv().expect("nonzero lead");
        a.iter().map(|c| c * &inv).collect()
    }

    /// Quotient and remainder by a nonzero `m`.
    fn div_rem(a: &[FieldScalar], m: &[FieldScalar]) -> (Vec<FieldScalar>, Vec<FieldScalar>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let k = m[0].field().clone();
        let dm = m.len() - 1;
        let inv = m[dm].inv().expect("nonzero lead");
        let mut q = vec![k.zero(); r.len().saturating_sub(dm)];
        while r.len() > dm {
            let c = r.last().unwrap() * &inv;
            let shift = r.len() - 1 - dm;
            for (i, mi) in m.iter().enumerate() {
                r[shift + i] = &r[shift + i] - &(&c * mi);
            }
            q[shift] = c;
            r.pop();
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    fn rem(a: &[FieldScalar], m: &[FieldScalar]) -> Vec<FieldScalar> {
        div_rem(a, m).1
    }

    fn gcd(a: &[FieldScalar], b: &[FieldScalar]) -> Vec<FieldScalar> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b);
            a = b;
            b = r;
        }
        if a.is_empty() {
            a
        } else {
            monic(&a)
        }
    }

    fn pow_mod(a: &[FieldScalar], mut e: u128, m: &[FieldScalar]) -> Vec<FieldScalar> {
        let k = m[0].field().clone();
        let mut acc = rem(&[k.one()], m);
        let mut base = rem(a, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &base), m);
            }
            e >>= 1;
            if e > 0 {
                base = rem(&mul(&base, &base), m);
            }
        }
        acc
    }

    /// Rabin's test over `k = F_Q`.
    pub fn is_irreducible(f: &[FieldScalar]) -> bool {
        let mut f = f.to_vec();
        trim(&mut f);
        if f.len() < 2 {
            return false;
        }
        let f = monic(&f);
        let deg = f.len() - 1;
        if deg == 1 {
            return true;
        }
        let k = f[0].field().clone();
        let q = k.order();
        let u = vec![k.zero(), k.one()];
        let mut powers = vec![rem(&u, &f)];
        for i in 1..=deg {
            let next = pow_mod(&powers[i - 1], q, &f);
            powers.push(next);
        }
        if powers[deg] != powers[0] {
            return false;
        }
        upoly::prime_factors(deg).into_iter().all(|r| gcd(&sub(&powers[deg / r], &u, &k), &f).len() == 1)
    }

    /// Every root in `k` of `f` (Cantor-Zassenhaus on the linear part of
    /// `f`, trying `δ` in enumeration order).
    pub fn roots(k: &FieldRef, f: &[FieldScalar]) -> Vec<FieldScalar> {
        let mut f = f.to_vec();
        trim(&mut f);
        if f.len() < 2 {
            return Vec::new();
        }
        // Keep only the part that splits into distinct linear factors.
        let u = vec![k.zero(), k.one()];
        let uq = pow_mod(&u, k.order(), &f);
        let split = gcd(&sub(&uq, &u, k), &f);
        let mut out = Vec::new();
        split_linear(k, split, &mut out);
        out
    }

    fn split_linear(k: &FieldRef, f: Vec<FieldScalar>, out: &mut Vec<FieldScalar>) {
        match f.len() {
            0 | 1 => return,
            2 => {
                out.push(-&(&f[0] * &f[1].inv().expect("nonzero lead")));
                return;
            }
            _ => {}
        }
        let p = k.characteristic().get();
        for delta in k.elements() {
            let h = if p == 2 {
                // Absolute trace of δu modulo f.
                let mut acc = Vec::new();
                let mut term = rem(&[k.zero(), delta], &f);
                for _ in 0..k.degree() {
                    acc = sub(&acc, &term, k);
                    term = rem(&mul(&term, &term), &f);
                }
                acc
            } else {
                sub(&pow_mod(&[delta, k.one()], (k.order() - 1) / 2, &f), &[k.one()], k)
            };
            let g = gcd(&h, &f);
            if g.len() > 1 && g.len() < f.len() {
                let (rest, _) = div_rem(&f, &g);
                split_linear(k, g, out);
                split_linear(k, rest, out);
                return;
            }
        }
    }
}

/// Field homomorphism between two finite fields of the same characteristic.
#[derive(Debug, Clone)]
pub struct FieldEmbedding {
    source: FieldRef,
    target: FieldRef,
    image_of_generator: Option<FieldScalar>,
}

impl FieldEmbedding {
    pub fn target(&self) -> &FieldRef {
        &self.target
    }

    pub fn apply(&self, a: &FieldScalar) -> FieldScalar {
        debug_assert!(a.field == self.source);
        match &self.image_of_generator {
            None => self.target.from_u64(a.coeffs[0]),
            Some(g) => {
                let mut acc = self.target.zero();
                for &c in a.coeffs.iter().rev() {
                    acc = &(&acc * g) + &self.target.from_u64(c);
                }
                acc
            }
        }
    }
}

/// Element of a finite field, stored as its canonical coefficient vector
/// (length `m`, low degree first).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldScalar {
    field: FieldRef,
    coeffs: SmallVec<[u64; 2]>,
}

impl FieldScalar {
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    /// The residue, for elements of the prime subfield.
    pub fn as_prime_residue(&self) -> Option<u64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Index of this element in [`FiniteField::element`] enumeration.
    pub fn index(&self) -> u128 {
        let p = self.field.p.get() as u128;
        self.coeffs.iter().rev().fold(0u128, |acc, &c| acc * p + c as u128)
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch { left: self.field.describe(), right: other.field.describe() })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        let p = self.field.p;
        let mut out = self.clone();
        for (a, &b) in out.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a = p.add(*a, b);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        let p = self.field.p;
        let mut out = self.clone();
        for (a, &b) in out.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a = p.sub(*a, b);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        let p = self.field.p;
        if self.field.is_prime_field() {
            let mut out = self.clone();
            out.coeffs[0] = p.mul(self.coeffs[0], other.coeffs[0]);
            return Ok(out);
        }
        let prod = upoly::mul(p, &self.coeffs, &other.coeffs);
        Ok(self.field.from_poly(&prod))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let order = self.field.order();
        Ok(self.pow_u128(order - 2))
    }

    pub fn pow(&self, exp: u64) -> Self {
        self.pow_u128(exp as u128)
    }

    pub fn pow_u128(&self, mut exp: u128) -> Self {
        if !self.is_zero() {
            exp %= self.field.order() - 1;
            if exp == 0 {
                return self.field.one();
            }
        }
        let mut acc = self.field.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// `a^{p^e}`.
    pub fn frobenius(&self, e: u32) -> Self {
        let m = self.field.degree() as u32;
        let mut out = self.clone();
        if m == 1 {
            return out;
        }
        for _ in 0..(e % m) {
            out = out.pow(self.field.p.get());
        }
        out
    }

    /// The unique `b` with `b^p = a`, namely `a^{p^{m-1}}`.
    pub fn pth_root(&self) -> Self {
        let m = self.field.degree() as u32;
        self.frobenius(m - 1)
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_prime_field() {
            write!(f, "{}", self.coeffs[0])
        } else {
            f.write_str(&upoly::display(&self.coeffs, "g"))
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a FieldScalar> for &'a FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: &'a FieldScalar) -> FieldScalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr for FieldScalar {
            type Output = FieldScalar;
            fn $method(self, rhs: FieldScalar) -> FieldScalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        let p = self.field.p;
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = p.neg(*c);
        }
        out
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -&self
    }
}
