//! Top local cohomology of a graded hypersurface `A = R/(f)` and the
//! Frobenius action on it.
//!
//! With `f` monic in the last variable `y_n`, `A` is free over
//! `k[y_1, ..., y_{n-1}]` on `1, y_n, ..., y_n^{d-1}`, so `H^{n-1}_m(A)` has
//! the `k`-basis `y_n^k / (y_1^{a_1} ⋯ y_{n-1}^{a_{n-1}})` with `k < d` and
//! every `a_j ≥ 1`. A [`CechClass`] is a finite combination of these. A
//! fraction whose numerator has `y_j`-exponent at least the `y_j`-exponent
//! of the denominator for some `j` is zero in the Čech complex.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{FieldScalar, FiniteField, PrimeModulus};
use crate::frobenius_ideals::{is_rf_submodule, FrobeniusIdealError};
use crate::groebner::{GroebnerError, Ideal};
use crate::matrix::Matrix;
use crate::poly::{Monomial, MonomialOrder, PolyError, Polynomial, RingRef};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    FrobeniusIdeal(#[from] FrobeniusIdealError),
    #[error("f must be homogeneous")]
    NotHomogeneous,
    #[error("the ring must be standard graded")]
    NotStandardGraded,
    #[error("f must be nonconstant")]
    Constant,
    #[error("need at least two variables")]
    TooFewVariables,
    #[error("f is not monic in the last variable `{variable}`; {suggestion}")]
    NotMonic { variable: String, suggestion: String },
    #[error("cannot read class `{0}`: expected `numerator / monomial` in the first n-1 variables")]
    ClassSyntax(String),
    #[error("the line is not spanned by a single basis class")]
    NotABasisLine,
}

/// A homogeneous `f` of degree `d` in `n` variables, normalized to be monic
/// in `y_n`.
#[derive(Debug, Clone)]
pub struct GradedHypersurface {
    ring: RingRef,
    f: Polynomial,
    original: Polynomial,
    degree: u64,
    jacobian_zero_dimensional: bool,
    /// `f - y_n^d` as `(y_n exponent, y' exponents, coefficient)`.
    tail: Vec<(u64, Vec<u64>, u64)>,
}

impl GradedHypersurface {
    pub fn new(f: &Polynomial) -> Result<Self, CohomologyError> {
        let ring = f.ring().clone();
        let n = ring.nvars();
        if n < 2 {
            return Err(CohomologyError::TooFewVariables);
        }
        if !ring.is_standard_graded() {
            return Err(CohomologyError::NotStandardGraded);
        }
        if f.is_zero() || f.is_constant() {
            return Err(CohomologyError::Constant);
        }
        if !f.is_homogeneous() {
            return Err(CohomologyError::NotHomogeneous);
        }
        let d = f.weighted_degree()?;
        let last = n - 1;
        let lead = f.coefficient_of(&Monomial::var_power(n, last, d));
        if lead == 0 {
            let candidates: Vec<&str> = (0..n)
                .filter(|&v| f.coefficient_of(&Monomial::var_power(n, v, d)) != 0)
                .map(|v| ring.variables()[v].as_str())
                .collect();
            let suggestion = match candidates.first() {
                Some(v) => format!("reorder the variables so that `{v}` comes last"),
                None => "no variable has a pure power in f; change coordinates first".into(),
            };
            return Err(CohomologyError::NotMonic { variable: ring.variables()[last].clone(), suggestion });
        }
        let p = ring.characteristic();
        let monic = f.scale(p.inv(lead).expect("nonzero"));
        let tail = monic
            .terms()
            .iter()
            .filter(|(m, _)| m.exponent(last) < d)
            .map(|(m, c)| (m.exponent(last), m.exponents()[..last].to_vec(), *c))
            .collect();
        let mut jac: Vec<Polynomial> = (0..n).map(|v| monic.derivative(v)).collect();
        jac.push(monic.clone());
        let jacobian_zero_dimensional = Ideal::new(&ring, jac)?.is_zero_dimensional()?;
        Ok(GradedHypersurface { ring, f: monic, original: f.clone(), degree: d, jacobian_zero_dimensional, tail })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// `f` scaled to be monic in `y_n`.
    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn original(&self) -> &Polynomial {
        &self.original
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn characteristic(&self) -> PrimeModulus {
        self.ring.characteristic()
    }

    /// `a(A) = d - n`.
    pub fn a_invariant(&self) -> i64 {
        self.degree as i64 - self.nvars() as i64
    }

    /// Whether `(f, ∂f/∂y_1, ..., ∂f/∂y_n)` is zero-dimensional, i.e. the
    /// singularity at the origin is isolated.
    pub fn jacobian_zero_dimensional(&self) -> bool {
        self.jacobian_zero_dimensional
    }

    /// Reduce `c · y_n^k · y'^b / y'^denom` modulo `f`, dropping terms that
    /// become Čech-trivial. Reduction only increases `y'`-exponents, so a
    /// trivial term stays trivial and is discarded immediately.
    fn reduce_fraction(&self, k: u64, b: &[u64], c: u64, denom: &[u64], out: &mut BTreeMap<CechKey, u64>) {
        let p = self.characteristic();
        let trivial = |b: &[u64]| b.iter().zip(denom).any(|(x, y)| x >= y);
        if c == 0 || trivial(b) {
            return;
        }
        let d = self.degree;
        let mut buckets: BTreeMap<u64, HashMap<Vec<u64>, u64>> = BTreeMap::new();
        buckets.entry(k).or_default().insert(b.to_vec(), c);
        while let Some((&j, _)) = buckets.iter().next_back() {
            if j < d {
                break;
            }
            let bucket = buckets.remove(&j).expect("present");
            for (b, c) in bucket {
                if c == 0 {
                    continue;
                }
                for (jt, beta, h) in &self.tail {
                    let nb: Vec<u64> = b.iter().zip(beta).map(|(x, y)| x + y).collect();
                    if trivial(&nb) {
                        continue;
                    }
                    let slot = buckets.entry(j - d + jt).or_default().entry(nb).or_insert(0);
                    *slot = p.sub(*slot, p.mul(c, *h));
                }
            }
        }
        for (j, bucket) in buckets {
            for (b, c) in bucket {
                if c == 0 {
                    continue;
                }
                let a: Vec<u64> = denom.iter().zip(&b).map(|(x, y)| x - y).collect();
                let slot = out.entry(CechKey { denom: a, yn: j }).or_insert(0);
                *slot = p.add(*slot, c);
            }
        }
        out.retain(|_, c| *c != 0);
    }

    /// `[num / y'^denom]` in canonical form.
    pub fn class_from_fraction(&self, num: &Polynomial, denom: &[u64]) -> Result<CechClass, CohomologyError> {
        if num.ring() != &self.ring {
            return Err(PolyError::RingMismatch.into());
        }
        let n = self.nvars();
        if denom.len() != n - 1 {
            return Err(CohomologyError::ClassSyntax(format!("{} denominator exponents for {} parameters", denom.len(), n - 1)));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in num.terms() {
            self.reduce_fraction(m.exponent(n - 1), &m.exponents()[..n - 1], *c, denom, &mut terms);
        }
        Ok(CechClass { ring: self.ring.clone(), terms })
    }

    /// Read `num / monomial`, e.g. `z^3 / x^2*y`.
    pub fn parse_class(&self, src: &str) -> Result<CechClass, CohomologyError> {
        let err = || CohomologyError::ClassSyntax(src.to_string());
        let (num, den) = src.split_once('/').ok_or_else(err)?;
        let num = crate::parse::parse_polynomial(num, &self.ring).map_err(|e| CohomologyError::ClassSyntax(e.to_string()))?;
        let den = crate::parse::parse_polynomial(den, &self.ring).map_err(|e| CohomologyError::ClassSyntax(e.to_string()))?;
        let [(m, c)] = den.terms() else { return Err(err()) };
        let n = self.nvars();
        if m.exponent(n - 1) != 0 {
            return Err(err());
        }
        let inv = self.characteristic().inv(*c).ok_or_else(err)?;
        self.class_from_fraction(&num.scale(inv), &m.exponents()[..n - 1])
    }

    /// The Frobenius `[g / y'^a] -> [g^p / y'^{pa}]`.
    pub fn frobenius_on_class(&self, class: &CechClass) -> CechClass {
        let p = self.characteristic().get();
        let zero = vec![0u64; self.nvars() - 1];
        let mut terms = BTreeMap::new();
        for (key, c) in &class.terms {
            let denom: Vec<u64> = key.denom.iter().map(|a| a * p).collect();
            // Coefficients lie in F_p, so c^p = c.
            self.reduce_fraction(key.yn * p, &zero, *c, &denom, &mut terms);
        }
        CechClass { ring: self.ring.clone(), terms }
    }

    /// `e_s = y_n^{d - i_n} / (y_1^{i_1} ⋯ y_{n-1}^{i_{n-1}})` for `s = y^{i-1}`
    /// of degree `d - n`, ordered by `s` in descending grevlex order.
    pub fn degree_zero_basis(&self) -> Vec<BasisClass> {
        let n = self.nvars();
        let d = self.degree;
        if d < n as u64 {
            return Vec::new();
        }
        let mut monomials = Vec::new();
        compositions(d - n as u64, n, &mut Vec::new(), &mut monomials);
        let order = MonomialOrder::grevlex(n);
        let mut ss: Vec<Monomial> = monomials.into_iter().map(Monomial::new).collect();
        ss.sort_by(|a, b| order.cmp(b, a));
        ss.into_iter()
            .map(|s| {
                let exponents: Vec<u64> = s.exponents().iter().map(|e| e + 1).collect();
                let key = CechKey { denom: exponents[..n - 1].to_vec(), yn: d - exponents[n - 1] };
                let class = CechClass { ring: self.ring.clone(), terms: BTreeMap::from([(key, 1)]) };
                BasisClass { exponents, class }
            })
            .collect()
    }

    /// Matrix of Frobenius on the degree-zero part over `F_p`; column `j`
    /// holds the coordinates of `F(e_j)`.
    pub fn frobenius_matrix_degree_zero(&self) -> Matrix<FieldScalar> {
        let basis = self.degree_zero_basis();
        let fp = FiniteField::prime(self.characteristic().get()).expect("prime");
        let dim = basis.len().max(1);
        let mut m = Matrix::filled(dim, dim, &fp.zero());
        if basis.is_empty() {
            return m;
        }
        let index: HashMap<&CechKey, usize> =
            basis.iter().enumerate().map(|(i, b)| (b.class.terms.keys().next().expect("single term"), i)).collect();
        for (j, b) in basis.iter().enumerate() {
            let image = self.frobenius_on_class(&b.class);
            for (key, c) in &image.terms {
                let i = index[key];
                m[(i, j)] = fp.from_u64(*c);
            }
        }
        m
    }

    /// Nilpotency of Frobenius on the part of `H^{n-1}_m(A)` in degrees `≥ 0`.
    pub fn star_zero_analysis(&self) -> StarZeroAnalysis {
        let dim = self.degree_zero_basis().len();
        let a = self.a_invariant();
        let positive_degree_bound = (a > 0).then_some(a);
        if dim == 0 {
            return StarZeroAnalysis {
                degree_zero_dimension: 0,
                action: DegreeZeroAction::Nilpotent { order: 0 },
                positive_degree_bound,
                isolated_singularity: self.jacobian_zero_dimensional,
            };
        }
        let m = self.frobenius_matrix_degree_zero();
        let mut power = m.clone();
        let mut action = None;
        for k in 1..=dim {
            if power.is_zero() {
                action = Some(DegreeZeroAction::Nilpotent { order: k as u32 });
                break;
            }
            if k < dim {
                power = power.mul(&m).expect("square");
            }
        }
        let action = action.unwrap_or_else(|| {
            // `power` is now M^dim, whose rank is the stable rank.
            let stable = power.rank();
            if stable == dim {
                DegreeZeroAction::Injective
            } else {
                DegreeZeroAction::Mixed { f_reduced_dimension: stable }
            }
        });
        StarZeroAnalysis { degree_zero_dimension: dim, action, positive_degree_bound, isolated_singularity: self.jacobian_zero_dimensional }
    }

    /// F-stable lines in degree zero with their annihilators. For a diagonal
    /// Frobenius matrix these are the basis classes with nonzero diagonal
    /// entry; otherwise the lines spanned by a basis of each eigenspace for a
    /// nonzero eigenvalue in `F_p`.
    pub fn socle_line_data(&self) -> Result<Vec<SocleLine>, CohomologyError> {
        let basis = self.degree_zero_basis();
        if basis.is_empty() {
            return Ok(Vec::new());
        }
        let m = self.frobenius_matrix_degree_zero();
        let dim = basis.len();
        let diagonal = (0..dim).all(|i| (0..dim).all(|j| i == j || m[(i, j)].is_zero()));
        let f_ideal = Ideal::principal(&self.f);
        let mut out = Vec::new();
        if diagonal {
            for (i, b) in basis.iter().enumerate() {
                let c = m[(i, i)].as_prime_residue().expect("prime field");
                if c == 0 {
                    continue;
                }
                let annihilator = self.annihilator(&b.class)?;
                let tau = self.parameter_ideal(&b.exponents)?;
                let matches = annihilator.equals(&tau)?;
                let rf_stable = is_rf_submodule(&annihilator, &f_ideal, 1)?;
                out.push(SocleLine {
                    class: b.class.clone(),
                    exponents: Some(b.exponents.clone()),
                    eigencoefficient: c,
                    annihilator,
                    annihilator_is_parameter_ideal: Some(matches),
                    rf_stable,
                });
            }
            return Ok(out);
        }
        let fp = FiniteField::prime(self.characteristic().get()).expect("prime");
        for lambda in 1..self.characteristic().get() {
            let shifted = m.add(&Matrix::identity(dim, &fp.zero()).scale(&-fp.from_u64(lambda))).expect("square");
            for v in shifted.kernel() {
                let mut terms = BTreeMap::new();
                for (coord, b) in v.iter().zip(&basis) {
                    let c = coord.as_prime_residue().expect("prime field");
                    if c != 0 {
                        terms.insert(b.class.terms.keys().next().expect("single").clone(), c);
                    }
                }
                let class = CechClass { ring: self.ring.clone(), terms };
                let annihilator = self.annihilator(&class)?;
                let rf_stable = is_rf_submodule(&annihilator, &f_ideal, 1)?;
                out.push(SocleLine {
                    class,
                    exponents: None,
                    eigencoefficient: lambda,
                    annihilator,
                    annihilator_is_parameter_ideal: None,
                    rf_stable,
                });
            }
        }
        Ok(out)
    }

    /// `ann_R([g / y'^i]) = ((y'^i) + (f)) : g`.
    pub fn annihilator(&self, class: &CechClass) -> Result<Ideal, CohomologyError> {
        let (num, denom) = class.numerator_and_denominator();
        if num.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let mut gens: Vec<Polynomial> =
            denom.iter().enumerate().map(|(j, &e)| Polynomial::var_power(&self.ring, j, e)).collect();
        gens.push(self.f.clone());
        Ok(Ideal::new(&self.ring, gens)?.quotient_by(&num)?)
    }

    /// `τ = (y_1^{i_1}, ..., y_n^{i_n})`.
    pub fn parameter_ideal(&self, exponents: &[u64]) -> Result<Ideal, CohomologyError> {
        Ok(Ideal::new(&self.ring, exponents.iter().enumerate().map(|(j, &e)| Polynomial::var_power(&self.ring, j, e)))?)
    }

    /// `f^{p-1} ≡ c · (y^i)^{p-1}` modulo `τ^{[p]}` for a basis socle line.
    pub fn dual_square_check(&self, line: &SocleLine) -> Result<bool, CohomologyError> {
        let exponents = line.exponents.as_ref().ok_or(CohomologyError::NotABasisLine)?;
        let p = self.characteristic().get();
        let lhs = self.f.pow(p - 1)?;
        let mono = Monomial::new(exponents.iter().map(|e| e * (p - 1)));
        let rhs = Polynomial::monomial(&self.ring, mono, line.eigencoefficient);
        let tau_p = crate::frobenius_ideals::bracket_power(&self.parameter_ideal(exponents)?, 1)?;
        Ok(tau_p.contains_poly(&(&lhs - &rhs))?)
    }

    /// The simplicity verdict for `H^1_{(f)}(R)` together with the data it
    /// rests on.
    pub fn d_simplicity_verdict(&self) -> Result<SimplicityReport, CohomologyError> {
        let analysis = self.star_zero_analysis();
        let basis = self.degree_zero_basis();
        let m = self.frobenius_matrix_degree_zero();
        let frobenius_matrix: Vec<Vec<u64>> = if basis.is_empty() {
            Vec::new()
        } else {
            m.to_rows().iter().map(|r| r.iter().map(|c| c.as_prime_residue().expect("prime field")).collect()).collect()
        };
        let verdict = if !self.jacobian_zero_dimensional {
            Verdict::Inconclusive
        } else if matches!(analysis.action, DegreeZeroAction::Nilpotent { .. }) {
            Verdict::Simple
        } else {
            Verdict::NotSimple
        };
        let socle_lines = if verdict == Verdict::NotSimple {
            self.socle_line_data()?
                .iter()
                .map(|l| SocleLineReport {
                    class: l.class.to_string(),
                    exponents: l.exponents.clone(),
                    eigencoefficient: l.eigencoefficient,
                    annihilator: l.annihilator.generators().iter().map(|g| g.to_string()).collect(),
                })
                .collect()
        } else {
            Vec::new()
        };
        Ok(SimplicityReport {
            f: self.original.to_string(),
            p: self.characteristic().get(),
            variables: self.ring.variables().to_vec(),
            degree: self.degree,
            a_invariant: self.a_invariant(),
            degree_zero_basis: basis.iter().map(|b| b.class.to_string()).collect(),
            frobenius_matrix,
            analysis,
            verdict,
            hypotheses: Hypotheses { isolated_singularity: self.jacobian_zero_dimensional, hara_large_p_assumed: true },
            socle_lines,
        })
    }
}

/// Exponent vectors of length `parts` summing to `total`, in lex order.
fn compositions(total: u64, parts: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in (0..=total).rev() {
        prefix.push(first);
        compositions(total - first, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// Diagonal Frobenius entry for the Fermat hypersurface
/// `y_1^d + ... + y_{n-1}^d - y_n^d` on the class with exponents `i`:
/// `(r (d - i_n))! / ∏_{j<n} (r i_j)!` modulo `p`, `r = (p-1)/d`.
/// `None` unless `p ≡ 1 (mod d)`.
pub fn fermat_diagonal_entry(p: u64, d: u64, exponents: &[u64]) -> Option<u64> {
    if d == 0 || (p - 1) % d != 0 {
        return None;
    }
    let r = (p - 1) / d;
    let pm = PrimeModulus::new(p).ok()?;
    let fact = |k: u64| (1..=k).fold(1u64, |acc, x| pm.mul(acc, pm.reduce(x)));
    let (last, rest) = exponents.split_last()?;
    let num = fact(r * (d - last));
    let den = rest.iter().fold(1u64, |acc, &i| pm.mul(acc, fact(r * i)));
    Some(pm.mul(num, pm.inv(den)?))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct CechKey {
    /// Exponents of `y_1, ..., y_{n-1}` in the denominator, all `≥ 1`.
    denom: Vec<u64>,
    /// Exponent of `y_n` in the numerator, `< d`.
    yn: u64,
}

/// An element of `H^{n-1}_m(A)` in the monomial Čech basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CechClass {
    ring: RingRef,
    terms: BTreeMap<CechKey, u64>,
}

impl CechClass {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Graded degree, `None` for the zero class or mixed degrees.
    pub fn degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|k| k.yn as i64 - k.denom.iter().sum::<u64>() as i64);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Common-denominator form `(g, i)` with `i` minimal.
    pub fn numerator_and_denominator(&self) -> (Polynomial, Vec<u64>) {
        let n = self.ring.nvars();
        let mut denom = vec![0u64; n - 1];
        for k in self.terms.keys() {
            for (d, a) in denom.iter_mut().zip(&k.denom) {
                *d = (*d).max(*a);
            }
        }
        let terms = self.terms.iter().map(|(k, c)| {
            let mut e: Vec<u64> = denom.iter().zip(&k.denom).map(|(i, a)| i - a).collect();
            e.push(k.yn);
            (Monomial::new(e), *c)
        });
        (Polynomial::from_terms(&self.ring, terms), denom)
    }

    pub fn add(&self, other: &CechClass) -> CechClass {
        let p = self.ring.characteristic();
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            let slot = terms.entry(k.clone()).or_insert(0);
            *slot = p.add(*slot, *c);
        }
        terms.retain(|_, c| *c != 0);
        CechClass { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: u64) -> CechClass {
        let p = self.ring.characteristic();
        let c = p.reduce(c);
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), p.mul(*v, c))).filter(|(_, v)| *v != 0).collect();
        CechClass { ring: self.ring.clone(), terms }
    }
}

/// `z^3 / x^2*y`; numerators with several terms are parenthesized.
impl fmt::Display for CechClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let (num, denom) = self.numerator_and_denominator();
        let names = &self.ring.variables()[..denom.len()];
        let den = Monomial::new(denom.iter().copied()).fmt_with(names);
        if num.num_terms() > 1 {
            write!(f, "({num}) / {den}")
        } else {
            write!(f, "{num} / {den}")
        }
    }
}

/// A degree-zero basis class `e_s` and its exponent vector `i = s + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisClass {
    pub exponents: Vec<u64>,
    pub class: CechClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DegreeZeroAction {
    Nilpotent { order: u32 },
    Injective,
    Mixed { f_reduced_dimension: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarZeroAnalysis {
    pub degree_zero_dimension: usize,
    pub action: DegreeZeroAction,
    /// Largest degree of a nonzero element of positive degree (the
    /// a-invariant); Frobenius multiplies degrees by `p`, so this part is
    /// always nilpotent.
    pub positive_degree_bound: Option<i64>,
    pub isolated_singularity: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Simple,
    NotSimple,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Simple => "SIMPLE",
            Verdict::NotSimple => "NOT_SIMPLE",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub isolated_singularity: bool,
    /// The identification of `0*` with the part of degree `≥ 0` needs `p`
    /// large; this is assumed, never checked.
    pub hara_large_p_assumed: bool,
}

#[derive(Debug, Clone)]
pub struct SocleLine {
    pub class: CechClass,
    /// Set for lines spanned by a single basis class.
    pub exponents: Option<Vec<u64>>,
    pub eigencoefficient: u64,
    pub annihilator: Ideal,
    pub annihilator_is_parameter_ideal: Option<bool>,
    pub rf_stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SocleLineReport {
    pub class: String,
    pub exponents: Option<Vec<u64>>,
    pub eigencoefficient: u64,
    pub annihilator: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicityReport {
    pub f: String,
    pub p: u64,
    pub variables: Vec<String>,
    pub degree: u64,
    pub a_invariant: i64,
    pub degree_zero_basis: Vec<String>,
    pub frobenius_matrix: Vec<Vec<u64>>,
    pub analysis: StarZeroAnalysis,
    pub verdict: Verdict,
    pub hypotheses: Hypotheses,
    pub socle_lines: Vec<SocleLineReport>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::PolyRing;

    fn fermat(d: u64, p: u64) -> GradedHypersurface {
        let r = PolyRing::new(p, &["x", "y", "z"]).unwrap();
        GradedHypersurface::new(&parse_polynomial(&format!("x^{d}+y^{d}-z^{d}"), &r).unwrap()).unwrap()
    }

    #[test]
    fn quartic_basis() {
        let h = fermat(4, 5);
        let names: Vec<String> = h.degree_zero_basis().iter().map(|b| b.class.to_string()).collect();
        assert_eq!(names, vec!["z^3 / x^2*y", "z^3 / x*y^2", "z^2 / x*y"]);
        assert_eq!(h.a_invariant(), 1);
        assert_eq!(fermat(5, 11).degree_zero_basis().len(), 6);
        let r = PolyRing::new(5, &["x", "y", "z"]).unwrap();
        let quadric = GradedHypersurface::new(&parse_polynomial("x^2+y^2-z^2", &r).unwrap()).unwrap();
        assert!(quadric.degree_zero_basis().is_empty());
    }

    #[test]
    fn quartic_frobenius() {
        let m = fermat(4, 5).frobenius_matrix_degree_zero();
        assert_eq!(m.to_string(), "[3, 0, 0; 0, 3, 0; 0, 0, 2]");
        assert!(fermat(4, 3).frobenius_matrix_degree_zero().is_zero());
        let h = fermat(4, 5);
        let e = h.parse_class("z^2 / x*y").unwrap();
        assert_eq!(h.frobenius_on_class(&e).to_string(), "2*z^2 / x*y");
    }

    #[test]
    fn positive_degree_dies() {
        let h = fermat(4, 5);
        let c = h.parse_class("z^3 / x*y").unwrap();
        assert_eq!(c.degree(), Some(1));
        assert!(h.frobenius_on_class(&c).is_zero());
    }

    #[test]
    fn trivial_terms_vanish() {
        let h = fermat(4, 5);
        assert!(h.parse_class("x^2*z / x^2*y").unwrap().is_zero());
        // x^4 = z^4 - y^4 modulo f, so z^4/(x y) = x^3/y + y^3/x = 0.
        assert!(h.parse_class("z^4 / x*y").unwrap().is_zero());
    }

    #[test]
    fn formula() {
        assert_eq!(fermat_diagonal_entry(5, 4, &[2, 1, 1]), Some(3));
        assert_eq!(fermat_diagonal_entry(5, 4, &[1, 1, 2]), Some(2));
        assert_eq!(fermat_diagonal_entry(7, 4, &[1, 1, 2]), None);
    }

    #[test]
    fn verdicts() {
        assert_eq!(fermat(4, 3).d_simplicity_verdict().unwrap().verdict, Verdict::Simple);
        let r = fermat(4, 5).d_simplicity_verdict().unwrap();
        assert_eq!(r.verdict, Verdict::NotSimple);
        assert_eq!(r.socle_lines.len(), 3);
        // (x + y - z)^5 in characteristic 5.
        assert_eq!(fermat(5, 5).d_simplicity_verdict().unwrap().verdict, Verdict::Inconclusive);
    }

    #[test]
    fn socle_and_dual_square() {
        let h = fermat(4, 5);
        let lines = h.socle_line_data().unwrap();
        assert!(lines.iter().all(|l| l.annihilator_is_parameter_ideal == Some(true) && l.rf_stable));
        for l in &lines {
            assert!(h.dual_square_check(l).unwrap());
        }
        assert!(fermat(4, 3).socle_line_data().unwrap().is_empty());
    }

    #[test]
    fn monicity_is_required() {
        let r = PolyRing::new(5, &["x", "y", "z"]).unwrap();
        let err = GradedHypersurface::new(&parse_polynomial("x^3+y^3+x*y*z", &r).unwrap()).unwrap_err();
        assert!(matches!(err, CohomologyError::NotMonic { ref suggestion, .. } if suggestion.contains("`x`")));
        let err = GradedHypersurface::new(&parse_polynomial("x^3+z", &r).unwrap()).unwrap_err();
        assert_eq!(err, CohomologyError::NotHomogeneous);
    }
}
