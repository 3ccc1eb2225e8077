//! `q`-semilinear maps `v -> A v^{[q]}` on free modules of finite rank.
//!
//! A map is stored as its matrix in a chosen basis. Over a finite field the
//! fixed set of such a map is an `F_p`-subspace (Frobenius is additive), so
//! it is computed exactly as the kernel of the `F_p`-linear map
//! `v -> A v^{[q]} - v` on `F_p^{mn}`.

use thiserror::Error;

use crate::field::{FieldError, FieldRef, FieldScalar, FiniteField};
use crate::matrix::{Matrix, MatrixError};
use crate::scalar::FrobeniusScalar;
use crate::twisted::TwistedPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemilinearError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("twist exponent e must be at least 1")]
    ZeroTwist,
    #[error("iteration count r must be at least 1")]
    ZeroIterate,
    #[error("exponent overflow: {0}")]
    Overflow(String),
    #[error("change of basis leaves the coefficient domain: det(C) does not divide adj(C) A C^[q]")]
    NotIntegral,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("no basis of fixed vectors over extensions of degree up to {max_ext}")]
    NotFoundWithinBound { max_ext: usize },
}

/// The map `v -> A v^{[q]}`, `q = p^e`, in the basis named by `basis_tag`.
#[derive(Clone, PartialEq)]
pub struct SemilinearMap<S> {
    matrix: Matrix<S>,
    e: u32,
    q: u64,
    basis_tag: String,
}

impl<S: std::fmt::Display> std::fmt::Debug for SemilinearMap<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "v -> {} v^[{}] ({} basis)", self.matrix, self.q, self.basis_tag)
    }
}

fn checked_q(p: u64, e: u32) -> Result<u64, SemilinearError> {
    p.checked_pow(e).ok_or_else(|| SemilinearError::Overflow(format!("{p}^{e}")))
}

impl<S: FrobeniusScalar> SemilinearMap<S> {
    pub fn new(matrix: Matrix<S>, e: u32) -> Result<Self, SemilinearError> {
        if !matrix.is_square() {
            return Err(MatrixError::NotSquare { rows: matrix.rows(), cols: matrix.cols() }.into());
        }
        if e == 0 {
            return Err(SemilinearError::ZeroTwist);
        }
        let q = checked_q(matrix[(0, 0)].characteristic(), e)?;
        Ok(SemilinearMap { matrix, e, q, basis_tag: "standard".into() })
    }

    pub fn with_basis_tag(mut self, tag: impl Into<String>) -> Self {
        self.basis_tag = tag.into();
        self
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn basis_tag(&self) -> &str {
        &self.basis_tag
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    fn characteristic(&self) -> u64 {
        self.matrix[(0, 0)].characteristic()
    }

    /// `A v^{[q]}`.
    pub fn apply(&self, v: &[S]) -> Result<Vec<S>, SemilinearError> {
        let twisted: Vec<S> = v.iter().map(|a| a.frobenius_power(self.q)).collect();
        Ok(self.matrix.mul_vec(&twisted)?)
    }

    /// `A_r = A A^{[q]} A^{[q^2]} ... A^{[q^{r-1}]}`, the matrix of the
    /// `r`-th iterate.
    pub fn iterate_matrix(&self, r: u32) -> Result<Matrix<S>, SemilinearError> {
        if r == 0 {
            return Err(SemilinearError::ZeroIterate);
        }
        let mut acc = self.matrix.clone();
        let mut twist = 1u64;
        for i in 1..r {
            twist = twist.checked_mul(self.q).ok_or_else(|| SemilinearError::Overflow(format!("q^{i} with q = {}", self.q)))?;
            acc = acc.mul(&self.matrix.frobenius_twist(twist))?;
        }
        Ok(acc)
    }

    /// The `r`-th iterate as a `q^r`-semilinear map.
    pub fn iterate(&self, r: u32) -> Result<Self, SemilinearError> {
        let matrix = self.iterate_matrix(r)?;
        let e = self.e.checked_mul(r).ok_or_else(|| SemilinearError::Overflow("e*r".into()))?;
        checked_q(self.characteristic(), e)?;
        Ok(SemilinearMap::new(matrix, e)?.with_basis_tag(self.basis_tag.clone()))
    }

    /// `(det C, adj(C) A C^{[q]})`, so that the matrix in the new basis is
    /// the second component divided by the first.
    pub fn base_change_fraction_free(&self, c: &Matrix<S>) -> Result<(S, Matrix<S>), SemilinearError> {
        let det = c.determinant()?;
        if det.is_zero() {
            return Err(MatrixError::Singular.into());
        }
        let product = c.adjugate()?.mul(&self.matrix)?.mul(&c.frobenius_twist(self.q))?;
        Ok((det, product))
    }

    /// The matrix `C^{-1} A C^{[q]}` of the same map in the basis given by
    /// the columns of `C`. `C` only needs to be invertible over the fraction
    /// field, provided the result has entries in the coefficient domain.
    pub fn base_change(&self, c: &Matrix<S>) -> Result<Self, SemilinearError> {
        let (det, product) = self.base_change_fraction_free(c)?;
        let b = product.exact_div_scalar(&det).ok_or(SemilinearError::NotIntegral)?;
        Ok(SemilinearMap { matrix: b, e: self.e, q: self.q, basis_tag: format!("{}*C", self.basis_tag) })
    }
}

const MAX_LINEAR_DIM: usize = 4096;

/// The fixed vectors of a map over `F_{p^m}`, as an `F_p`-subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedSpace {
    field: FieldRef,
    dim: usize,
    fp_basis: Vec<Vec<FieldScalar>>,
}

impl FixedSpace {
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn fp_basis(&self) -> &[Vec<FieldScalar>] {
        &self.fp_basis
    }

    pub fn fp_dimension(&self) -> usize {
        self.fp_basis.len()
    }

    /// Number of fixed vectors, zero included (saturating).
    pub fn cardinality(&self) -> u128 {
        let p = self.field.characteristic().get() as u128;
        (0..self.fp_basis.len()).try_fold(1u128, |acc, _| acc.checked_mul(p)).unwrap_or(u128::MAX)
    }

    /// Dimension of the `F_{p^m}`-span of the fixed vectors.
    pub fn span_rank(&self) -> usize {
        if self.fp_basis.is_empty() {
            return 0;
        }
        Matrix::from_rows(self.fp_basis.clone()).expect("nonempty rows").rank()
    }

    /// Every fixed vector, in the order of `F_p`-coordinates.
    pub fn vectors(&self, limit: u128) -> Result<Vec<Vec<FieldScalar>>, SemilinearError> {
        let count = self.cardinality();
        if count > limit {
            return Err(SemilinearError::BudgetExceeded(format!("{count} fixed vectors exceed the listing limit {limit}")));
        }
        let p = self.field.characteristic().get();
        let n = self.dim;
        let mut out = Vec::with_capacity(count as usize);
        for idx in 0..count {
            let mut rest = idx;
            let mut v = vec![self.field.zero(); n];
            for b in &self.fp_basis {
                let c = self.field.from_u64((rest % p as u128) as u64);
                rest /= p as u128;
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi = &*vi + &(&c * bi);
                }
            }
            out.push(v);
        }
        Ok(out)
    }
}

/// A basis of fixed vectors over the field of degree `extension_degree`
/// over the original coefficient field.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedBasis {
    pub extension_degree: usize,
    pub field: FieldRef,
    pub basis: Vec<Vec<FieldScalar>>,
}

/// Stability data for the iterate `F^{r}`.
#[derive(Debug, Clone, PartialEq)]
pub struct StableSummary {
    pub r: u32,
    pub simple: bool,
    /// `(dimension, stable subspaces, all subspaces)` for each proper
    /// nonzero dimension.
    pub counts: Vec<(usize, u64, u64)>,
    /// Stable lines, each normalized to have first nonzero coordinate 1.
    pub stable_lines: Vec<Vec<FieldScalar>>,
}

impl SemilinearMap<FieldScalar> {
    pub fn field(&self) -> &FieldRef {
        self.matrix[(0, 0)].field()
    }

    /// Coefficients (ascending) of `det(t I - A)`.
    pub fn characteristic_polynomial(&self) -> Vec<FieldScalar> {
        let k = self.field();
        let t = TwistedPoly::x(k, 0);
        let n = self.dim();
        let rows: Vec<Vec<TwistedPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = TwistedPoly::constant(self.matrix[(i, j)].clone(), 0);
                        if i == j {
                            t.clone() - a
                        } else {
                            -a
                        }
                    })
                    .collect()
            })
            .collect();
        let det = Matrix::from_rows(rows).expect("square").determinant().expect("square");
        let deg = det.degree().unwrap_or(0);
        (0..=deg).map(|e| det.coefficient(e)).collect()
    }

    /// Exact fixed set `{v : A v^{[q]} = v}`.
    pub fn fixed_vectors(&self) -> Result<FixedSpace, SemilinearError> {
        let k = self.field().clone();
        let m = k.degree();
        let n = self.dim();
        let dim = m * n;
        if dim > MAX_LINEAR_DIM {
            return Err(SemilinearError::BudgetExceeded(format!("linear system of size {dim}")));
        }
        let fp = FiniteField::prime(k.characteristic().get())?;
        let mut columns: Vec<Vec<FieldScalar>> = Vec::with_capacity(dim);
        for i in 0..n {
            for j in 0..m {
                let mut unit = vec![0u64; m];
                unit[j] = 1;
                let mut v = vec![k.zero(); n];
                v[i] = k.from_poly(&unit);
                let image = self.apply(&v)?;
                let col = image
                    .iter()
                    .zip(&v)
                    .flat_map(|(a, b)| (a - b).coefficients().to_vec())
                    .map(|c| fp.from_u64(c))
                    .collect();
                columns.push(col);
            }
        }
        let rows: Vec<Vec<FieldScalar>> = (0..dim).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
        let kernel = Matrix::from_rows(rows)?.kernel();
        let fp_basis = kernel
            .into_iter()
            .map(|coords| {
                (0..n)
                    .map(|i| {
                        let c: Vec<u64> = coords[i * m..(i + 1) * m].iter().map(|s| s.coefficients()[0]).collect();
                        k.from_poly(&c)
                    })
                    .collect()
            })
            .collect();
        Ok(FixedSpace { field: k, dim: n, fp_basis })
    }

    /// The same map with coefficients pushed into `target`.
    pub fn extend_scalars(&self, target: &FieldRef) -> Result<Self, SemilinearError> {
        let emb = self.field().embedding_into(target)?;
        Ok(SemilinearMap { matrix: self.matrix.map(|a| emb.apply(a)), ..self.clone() })
    }

    /// First extension degree `k ≤ max_ext` over which the fixed vectors
    /// span the whole space, with a basis chosen greedily from them.
    pub fn f_fixed_basis(&self, max_ext: usize) -> Result<FixedBasis, SemilinearError> {
        if self.matrix.determinant()?.is_zero() {
            return Err(MatrixError::Singular.into());
        }
        let p = self.characteristic();
        let m = self.field().degree();
        let n = self.dim();
        for ext in 1..=max_ext {
            let map = if ext == 1 { self.clone() } else { self.extend_scalars(&FiniteField::extension(p, m * ext)?)? };
            let fixed = map.fixed_vectors()?;
            if fixed.span_rank() < n {
                continue;
            }
            let mut basis: Vec<Vec<FieldScalar>> = Vec::new();
            for v in fixed.fp_basis() {
                let mut trial = basis.clone();
                trial.push(v.clone());
                if Matrix::from_rows(trial.clone()).expect("nonempty").rank() == trial.len() {
                    basis = trial;
                }
                if basis.len() == n {
                    break;
                }
            }
            return Ok(FixedBasis { extension_degree: ext, field: map.field().clone(), basis });
        }
        Err(SemilinearError::NotFoundWithinBound { max_ext })
    }

    /// Subspaces stable under `F^{r'}` for `r' = 1..=horizon`, by exhaustive
    /// enumeration of reduced echelon forms.
    pub fn stable_subspaces(&self, horizon: u32, max_subspaces: u64) -> Result<Vec<StableSummary>, SemilinearError> {
        let n = self.dim();
        let order = self.field().order();
        let total: u128 = (1..n).map(|k| gaussian_binomial(n, k, order)).fold(0u128, u128::saturating_add);
        if total > max_subspaces as u128 {
            return Err(SemilinearError::BudgetExceeded(format!("{total} subspaces exceed the limit {max_subspaces}")));
        }
        let mut out = Vec::new();
        for r in 1..=horizon {
            let it = self.iterate(r)?;
            let mut counts = Vec::new();
            let mut stable_lines = Vec::new();
            for k in 1..n {
                let mut stable = 0u64;
                let mut all = 0u64;
                for_each_echelon_subspace(self.field(), n, k, &mut |rows| {
                    all += 1;
                    let ok = rows.iter().all(|w| in_echelon_span(rows, &it.apply(w).expect("dimensions match")));
                    if ok {
                        stable += 1;
                        if k == 1 {
                            stable_lines.push(rows[0].clone());
                        }
                    }
                });
                counts.push((k, stable, all));
            }
            let simple = counts.iter().all(|&(_, s, _)| s == 0);
            out.push(StableSummary { r, simple, counts, stable_lines });
        }
        Ok(out)
    }
}

/// Number of `k`-dimensional subspaces of `F_Q^n` (saturating).
fn gaussian_binomial(n: usize, k: usize, q: u128) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        let a = q.checked_pow((n - i) as u32).map(|x| x - 1);
        let b = q.checked_pow((i + 1) as u32).map(|x| x - 1);
        match (a.and_then(|a| num.checked_mul(a)), b.and_then(|b| den.checked_mul(b))) {
            (Some(x), Some(y)) => {
                let g = gcd_u128(x, y);
                num = x / g;
                den = y / g;
            }
            _ => return u128::MAX,
        }
    }
    num / den
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Calls `f` with the rows of each `k`-dimensional subspace of `K^n` in
/// reduced row echelon form.
fn for_each_echelon_subspace(field: &FieldRef, n: usize, k: usize, f: &mut dyn FnMut(&[Vec<FieldScalar>])) {
    let elements: Vec<FieldScalar> = field.elements().collect();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| ((pivots[i] + 1)..n).filter(|j| !pivots.contains(j)).map(move |j| (i, j)))
            .collect::<Vec<_>>();
        let mut digits = vec![0usize; free.len()];
        loop {
            let mut rows = vec![vec![field.zero(); n]; k];
            for (i, &pc) in pivots.iter().enumerate() {
                rows[i][pc] = field.one();
            }
            for (d, &(i, j)) in digits.iter().zip(&free) {
                rows[i][j] = elements[*d].clone();
            }
            f(&rows);
            // Odometer increment.
            let mut pos = 0;
            while pos < digits.len() {
                digits[pos] += 1;
                if digits[pos] < elements.len() {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
        // Next pivot combination.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < n - k + i {
                pivots[i] += 1;
                for j in (i + 1)..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn in_echelon_span(rows: &[Vec<FieldScalar>], v: &[FieldScalar]) -> bool {
    let mut rem = v.to_vec();
    for row in rows {
        let pc = row.iter().position(|a| !a.is_zero()).expect("echelon rows are nonzero");
        let c = rem[pc].clone();
        if c.is_zero() {
            continue;
        }
        for (x, y) in rem.iter_mut().zip(row) {
            *x = &*x - &(&c * y);
        }
    }
    rem.iter().all(FieldScalar::is_zero)
}

/// Irreducibility over the coefficient field; `None` for an empty slice.
pub fn is_irreducible(coeffs: &[FieldScalar]) -> Option<bool> {
    coeffs.first()?;
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(FieldScalar::is_zero) {
        c.pop();
    }
    let deg = c.len().checked_sub(1)?;
    if deg == 0 {
        return Some(false);
    }
    Some(crate::field::kpoly::is_irreducible(&c))
}

/// Display a polynomial given by ascending coefficients, e.g. `t^2+2*t+2`.
pub fn format_polynomial(coeffs: &[FieldScalar], var: &str) -> String {
    let terms: Vec<TwistedPoly> = coeffs
        .iter()
        .enumerate()
        .map(|(e, c)| TwistedPoly::monomial(c.clone(), e as u64, 0))
        .collect();
    let Some(first) = terms.first() else { return "0".into() };
    let sum = terms.iter().skip(1).fold(first.clone(), |acc, t| acc + t.clone());
    sum.to_string().replace('x', var)
}

/// A polynomial equation `Σ c_k(x) α^k = 0` with `c_k ∈ k[x]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaEquation {
    field: FieldRef,
    /// `coefficients[k]` multiplies `α^k`; stored at depth 0.
    coefficients: Vec<TwistedPoly>,
}

impl AlphaEquation {
    pub fn new(field: &FieldRef, coefficients: Vec<TwistedPoly>) -> Self {
        let coefficients = coefficients.into_iter().map(|c| c.with_depth(0).expect("coefficients lie in k[x]")).collect();
        AlphaEquation { field: field.clone(), coefficients }
    }

    /// `α^{q+1} + x α - 1`.
    pub fn frobenius_counterexample(field: &FieldRef, q: u64) -> Self {
        let mut c = vec![TwistedPoly::zero(field, 0); q as usize + 2];
        c[0] = TwistedPoly::constant(-field.one(), 0);
        c[1] = TwistedPoly::x(field, 0);
        c[q as usize + 1] = TwistedPoly::constant(field.one(), 0);
        Self::new(field, c)
    }

    /// `α^q - α`, whose roots are exactly the elements of `F_q ∩ k`.
    pub fn artin_schreier(field: &FieldRef, q: u64) -> Self {
        let mut c = vec![TwistedPoly::zero(field, 0); q as usize + 1];
        c[1] = TwistedPoly::constant(-field.one(), 0);
        c[q as usize] = TwistedPoly::constant(field.one(), 0);
        Self::new(field, c)
    }

    pub fn evaluate(&self, alpha: &TwistedPoly) -> TwistedPoly {
        let depth = alpha.depth();
        self.coefficients
            .iter()
            .rev()
            .fold(TwistedPoly::zero(&self.field, depth), |acc, c| acc * alpha.clone() + c.with_depth(depth).expect("deeper"))
    }

    /// Top `u`-degree of each nonzero summand when `deg_u α = n` at `depth`.
    fn summand_degrees(&self, depth: u32, n: u64) -> Vec<u64> {
        let scale = self.field.characteristic().get().pow(depth);
        self.coefficients
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.degree().map(|d| d * scale + k as u64 * n))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeStatus {
    /// The largest summand degree is attained once, so no cancellation.
    Pruned { top_degree: u64 },
    Scanned { candidates: u128, roots: usize },
    OverBudget { candidates: u128 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRecord {
    pub depth: u32,
    /// `None` stands for `α = 0`.
    pub degree: Option<u64>,
    pub status: DegreeStatus,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchCertificate {
    pub t_max: u32,
    pub deg_max: u64,
    pub records: Vec<DegreeRecord>,
    /// Distinct roots, each at its smallest depth.
    pub roots: Vec<TwistedPoly>,
    /// Every degree at every depth was pruned or scanned.
    pub complete: bool,
}

impl SearchCertificate {
    pub fn pruned(&self) -> usize {
        self.records.iter().filter(|r| matches!(r.status, DegreeStatus::Pruned { .. })).count()
    }

    pub fn scanned_candidates(&self) -> u128 {
        self.records
            .iter()
            .map(|r| match r.status {
                DegreeStatus::Scanned { candidates, .. } => candidates,
                _ => 0,
            })
            .sum()
    }
}

fn minimal_depth(a: &TwistedPoly) -> TwistedPoly {
    let mut cur = a.clone();
    while cur.depth() > 0 {
        match cur.with_depth(cur.depth() - 1) {
            Some(next) => cur = next,
            None => break,
        }
    }
    cur
}

/// Search for roots `α ∈ k[x^{1/p^t}]`, `t ≤ t_max`, of `u`-degree at most
/// `deg_max`. Degrees whose leading summand cannot cancel are pruned; the
/// others are scanned exhaustively unless they exceed `max_candidates`.
pub fn root_search(eq: &AlphaEquation, t_max: u32, deg_max: u64, max_candidates: u128) -> SearchCertificate {
    let field = &eq.field;
    let elements: Vec<FieldScalar> = field.elements().collect();
    let size = elements.len() as u128;
    let mut records = Vec::new();
    let mut roots: Vec<TwistedPoly> = Vec::new();
    let mut complete = true;
    let record_root = |alpha: &TwistedPoly, roots: &mut Vec<TwistedPoly>| {
        let m = minimal_depth(alpha);
        if !roots.contains(&m) {
            roots.push(m);
        }
    };
    for depth in 0..=t_max {
        let zero = TwistedPoly::zero(field, depth);
        let zero_root = eq.evaluate(&zero).is_zero();
        if zero_root {
            record_root(&zero, &mut roots);
        }
        records.push(DegreeRecord {
            depth,
            degree: None,
            status: DegreeStatus::Scanned { candidates: 1, roots: usize::from(zero_root) },
        });
        for n in 0..=deg_max {
            let degs = eq.summand_degrees(depth, n);
            let top = degs.iter().copied().max().unwrap_or(0);
            if degs.iter().filter(|&&d| d == top).count() == 1 {
                records.push(DegreeRecord { depth, degree: Some(n), status: DegreeStatus::Pruned { top_degree: top } });
                continue;
            }
            let candidates = ((n as u32) < 127)
                .then(|| size.checked_pow(n as u32).and_then(|s| s.checked_mul(size - 1)))
                .flatten()
                .unwrap_or(u128::MAX);
            if candidates > max_candidates {
                complete = false;
                records.push(DegreeRecord { depth, degree: Some(n), status: DegreeStatus::OverBudget { candidates } });
                continue;
            }
            let mut found = 0;
            for idx in 0..candidates {
                let lead = &elements[1 + (idx % (size - 1)) as usize];
                let mut rest = idx / (size - 1);
                let mut terms = vec![(n, lead.clone())];
                for e in 0..n {
                    terms.push((e, elements[(rest % size) as usize].clone()));
                    rest /= size;
                }
                let alpha = TwistedPoly::from_terms(field, depth, terms);
                if eq.evaluate(&alpha).is_zero() {
                    found += 1;
                    record_root(&alpha, &mut roots);
                }
            }
            records.push(DegreeRecord { depth, degree: Some(n), status: DegreeStatus::Scanned { candidates, roots: found } });
        }
    }
    SearchCertificate { t_max, deg_max, records, roots, complete }
}

/// Bounded search for roots of `α^{q+1} + x α - 1` over `F_p`, together with
/// the degree obstruction: `(q+1) n = 1 + n` has no solution in integers
/// `0 ≤ n ≤ deg_max`.
pub fn counterexample_search(
    p: u64,
    q: u64,
    t_max: u32,
    deg_max: u64,
    max_candidates: u128,
) -> Result<(SearchCertificate, bool), SemilinearError> {
    let field = FiniteField::prime(p)?;
    if crate::scalar::power_of(p, q).is_none() {
        return Err(SemilinearError::Overflow(format!("{q} is not a power of {p}")));
    }
    let eq = AlphaEquation::frobenius_counterexample(&field, q);
    let obstruction = (0..=deg_max).all(|n| (q + 1) * n != 1 + n);
    Ok((root_search(&eq, t_max, deg_max, max_candidates), obstruction))
}
