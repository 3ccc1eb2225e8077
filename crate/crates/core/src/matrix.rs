//! Dense matrices over a [`FrobeniusScalar`].

use std::fmt;

use thiserror::Error;

use crate::scalar::FrobeniusScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not invertible over its coefficient ring")]
    Singular,
    #[error("matrix must have at least one entry")]
    Empty,
}

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: FrobeniusScalar> Matrix<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map(Vec::len).ok_or(MatrixError::Empty)?;
        if ncols == 0 {
            return Err(MatrixError::Empty);
        }
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(MatrixError::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    pub fn filled(rows: usize, cols: usize, value: &S) -> Self {
        Matrix { rows, cols, data: vec![value.clone(); rows * cols] }
    }

    /// Identity matrix; `like` only supplies the ring.
    pub fn identity(n: usize, like: &S) -> Self {
        let mut m = Self::filled(n, n, &like.zero_like());
        for i in 0..n {
            m[(i, i)] = like.one_like();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &S> {
        self.data.iter()
    }

    pub fn zero_entry(&self) -> S {
        self.data[0].zero_like()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FrobeniusScalar::is_zero)
    }

    pub fn map<T: FrobeniusScalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Entrywise `q`-th power, written `M^{[q]}`.
    pub fn frobenius_twist(&self, q: u64) -> Self {
        self.map(|a| a.frobenius_power(q))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = self.zero_entry();
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = zero.clone();
                for k in 0..self.cols {
                    let a = &self[(i, k)];
                    let b = &other[(k, j)];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * b.clone();
                }
                data.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::Dimension(format!("{}x{} times vector of length {}", self.rows, self.cols, v.len())));
        }
        let zero = self.zero_entry();
        Ok((0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(zero.clone(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc + a.clone() * b.clone()
                    }
                })
            })
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(MatrixError::Dimension("sum of differently shaped matrices".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn pow(&self, mut k: u64) -> Result<Self, MatrixError> {
        self.require_square()?;
        let mut acc = Matrix::identity(self.rows, &self.data[0]);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    fn require_square(&self) -> Result<(), MatrixError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != skip_row) {
            for j in (0..self.cols).filter(|&j| j != skip_col) {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// Determinant by cofactor expansion (division-free, valid over any
    /// commutative ring; intended for the small sizes used here).
    pub fn determinant(&self) -> Result<S, MatrixError> {
        self.require_square()?;
        Ok(self.det_unchecked())
    }

    fn det_unchecked(&self) -> S {
        match self.rows {
            1 => self.data[0].clone(),
            2 => self[(0, 0)].clone() * self[(1, 1)].clone() - self[(0, 1)].clone() * self[(1, 0)].clone(),
            n => {
                let mut acc = self.zero_entry();
                for j in 0..n {
                    let a = &self[(0, j)];
                    if a.is_zero() {
                        continue;
                    }
                    let term = a.clone() * self.minor(0, j).det_unchecked();
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    /// Classical adjugate, `adj(M) M = det(M) I`.
    pub fn adjugate(&self) -> Result<Self, MatrixError> {
        self.require_square()?;
        let n = self.rows;
        if n == 1 {
            return Ok(Matrix::identity(1, &self.data[0]));
        }
        let mut out = Matrix::filled(n, n, &self.zero_entry());
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(i, j).det_unchecked();
                out[(j, i)] = if (i + j) % 2 == 0 { c } else { -c };
            }
        }
        Ok(out)
    }

    /// Inverse over the coefficient ring: `adj(M) / det(M)` with exact
    /// division, failing when `det(M)` is not a unit.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        let det = self.determinant()?;
        if det.is_zero() {
            return Err(MatrixError::Singular);
        }
        let inv_det = det.one_like().exact_div(&det).ok_or(MatrixError::Singular)?;
        Ok(self.adjugate()?.scale(&inv_det))
    }

    /// Divide every entry exactly by `d`.
    pub fn exact_div_scalar(&self, d: &S) -> Option<Self> {
        let data = self.data.iter().map(|a| a.exact_div(d)).collect::<Option<Vec<_>>>()?;
        Some(Matrix { rows: self.rows, cols: self.cols, data })
    }
}

/// Gaussian elimination for matrices over a field.
impl<S: FrobeniusScalar> Matrix<S> {
    /// Reduced row echelon form and the pivot columns.
    pub fn row_echelon(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m[(r, c)].one_like().exact_div(&m[(r, c)]).expect("nonzero field element is a unit");
            for j in 0..m.cols {
                let v = m[(r, j)].clone() * inv.clone();
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in 0..m.cols {
                    let v = m[(i, j)].clone() - factor.clone() * m[(r, j)].clone();
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let (rref, pivots) = self.row_echelon();
        let zero = self.zero_entry();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![zero.clone(); self.cols];
                v[fc] = zero.one_like();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -rref[(row, fc)].clone();
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

/// `[a, b; c, d]`, entries in their own display form.
impl<S: fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        f.write_str("]")
    }
}

impl<S: fmt::Display> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    fn m(field: &crate::field::FieldRef, rows: &[&[i64]]) -> Matrix<crate::field::FieldScalar> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn determinant_and_inverse() {
        let f5 = FiniteField::prime(5).unwrap();
        let a = m(&f5, &[&[1, 2, 0], &[3, 1, 4], &[0, 2, 2]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(3, &f5.one()));
        let sing = m(&f5, &[&[1, 2], &[2, 4]]);
        assert_eq!(sing.inverse(), Err(MatrixError::Singular));
        assert_eq!(sing.rank(), 1);
        let ker = sing.kernel();
        assert_eq!(ker.len(), 1);
        assert!(sing.mul_vec(&ker[0]).unwrap().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn display_format() {
        let f3 = FiniteField::prime(3).unwrap();
        assert_eq!(m(&f3, &[&[0, 1], &[1, 1]]).to_string(), "[0, 1; 1, 1]");
    }
}
