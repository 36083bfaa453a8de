//! Square matrices of differential forms with the wedge matrix product.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::{Gauss, Rational};
use crate::error::{Error, Result};
use crate::form::Form;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMatrix {
    n: usize,
    dim: usize,
    entries: Vec<Form>,
}

impl FormMatrix {
    pub fn zero(n: usize, dim: usize) -> Self {
        FormMatrix { n, dim, entries: vec![Form::zero(dim); n * n] }
    }

    pub fn identity(n: usize, dim: usize) -> Self {
        let mut m = Self::zero(n, dim);
        for i in 0..n {
            m.set(i, i, Form::one(dim));
        }
        m
    }

    /// Builds an `n × n` matrix from row-major entries.
    pub fn from_rows(dim: usize, rows: Vec<Vec<Form>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::RankMismatch(n, row.len()));
            }
            for e in row {
                if e.dim() != dim {
                    return Err(Error::DimensionMismatch(dim, e.dim()));
                }
                entries.push(e);
            }
        }
        Ok(FormMatrix { n, dim, entries })
    }

    pub fn from_fn(n: usize, dim: usize, f: impl Fn(usize, usize) -> Form) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        FormMatrix { n, dim, entries }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Form {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, f: Form) {
        assert_eq!(f.dim(), self.dim, "entry dimension");
        self.entries[i * self.n + j] = f;
    }

    pub fn entries(&self) -> &[Form] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Form>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Form::is_zero)
    }

    pub fn map(&self, f: impl Fn(&Form) -> Form) -> Self {
        FormMatrix { n: self.n, dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }

    pub fn d(&self) -> Self {
        self.map(Form::d)
    }

    pub fn conj(&self) -> Self {
        self.map(Form::conj)
    }

    pub fn transpose(&self) -> Self {
        FormMatrix::from_fn(self.n, self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn conj_transpose(&self) -> Self {
        FormMatrix::from_fn(self.n, self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, c: &Gauss) -> Self {
        self.map(|e| e.scale(c))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map(|e| e.scale_rational(r))
    }

    pub fn scale_scalar(&self, s: &Scalar) -> Self {
        self.map(|e| e.scale_scalar(s))
    }

    pub fn try_mul(&self, o: &FormMatrix) -> Result<FormMatrix> {
        if self.n != o.n {
            return Err(Error::RankMismatch(self.n, o.n));
        }
        let n = self.n;
        let mut out = FormMatrix::zero(n, self.dim);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.entries[i * n + j] += &a.wedge(b)?;
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, o: &FormMatrix) -> Result<FormMatrix> {
        if self.n != o.n {
            return Err(Error::RankMismatch(self.n, o.n));
        }
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a.try_add(b)).collect::<Result<_>>()?;
        Ok(FormMatrix { n: self.n, dim: self.dim, entries })
    }

    pub fn trace(&self) -> Form {
        (0..self.n).fold(Form::zero(self.dim), |acc, i| &acc + self.get(i, i))
    }

    /// Determinant by cofactor expansion; entries must commute (even forms).
    pub fn det(&self) -> Form {
        let idx: Vec<usize> = (0..self.n).collect();
        self.minor_det(&idx, &idx)
    }

    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> Form {
        match rows.len() {
            0 => Form::one(self.dim),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => {
                let (r0, r1, c0, c1) = (rows[0], rows[1], cols[0], cols[1]);
                &(self.get(r0, c0) * self.get(r1, c1)) - &(self.get(r0, c1) * self.get(r1, c0))
            }
            _ => {
                let mut acc = Form::zero(self.dim);
                let sub_rows = &rows[1..];
                for (k, &c) in cols.iter().enumerate() {
                    let e = self.get(rows[0], c);
                    if e.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = e * &self.minor_det(sub_rows, &sub_cols);
                    if k % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
                acc
            }
        }
    }

    /// Adjugate, so that `M · adj(M) = det(M) · Id` for commuting entries.
    pub fn adjugate(&self) -> FormMatrix {
        let n = self.n;
        if n == 1 {
            return FormMatrix::identity(1, self.dim);
        }
        FormMatrix::from_fn(n, self.dim, |i, j| {
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let m = self.minor_det(&rows, &cols);
            if (i + j) % 2 == 0 {
                m
            } else {
                -m
            }
        })
    }

    /// Block-diagonal matrix `diag(self, o)`.
    pub fn block_diag(&self, o: &FormMatrix) -> FormMatrix {
        assert_eq!(self.dim, o.dim, "block dimensions");
        let (a, b) = (self.n, o.n);
        FormMatrix::from_fn(a + b, self.dim, |i, j| match (i < a, j < a) {
            (true, true) => self.get(i, j).clone(),
            (false, false) => o.get(i - a, j - a).clone(),
            _ => Form::zero(self.dim),
        })
    }

    /// `Σ_k M^k / k!` for a matrix with no degree-0 entries.
    pub fn exp_nilpotent(&self) -> Result<FormMatrix> {
        if self.entries.iter().any(|e| !e.constant_part().is_zero()) {
            return Err(Error::HasDegreeZero);
        }
        let mut out = FormMatrix::identity(self.n, self.dim);
        let mut power = FormMatrix::identity(self.n, self.dim);
        let mut k = 0i64;
        loop {
            k += 1;
            power = power.try_mul(self)?.scale_rational(&Rational::new(1.into(), k.into()));
            if power.is_zero() {
                return Ok(out);
            }
            out = out.try_add(&power)?;
        }
    }

    pub fn on_cylinder(self) -> FormMatrix {
        self.map(|e| e.clone().on_cylinder())
    }
}

impl Add for &FormMatrix {
    type Output = FormMatrix;
    fn add(self, o: &FormMatrix) -> FormMatrix {
        self.try_add(o).expect("adding matrices")
    }
}

impl Sub for &FormMatrix {
    type Output = FormMatrix;
    fn sub(self, o: &FormMatrix) -> FormMatrix {
        self.try_add(&-o).expect("subtracting matrices")
    }
}

impl Neg for &FormMatrix {
    type Output = FormMatrix;
    fn neg(self) -> FormMatrix {
        self.map(|e| -e)
    }
}

impl Mul for &FormMatrix {
    type Output = FormMatrix;
    fn mul(self, o: &FormMatrix) -> FormMatrix {
        self.try_mul(o).expect("multiplying matrices")
    }
}

impl fmt::Display for FormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::Basis;

    const M: usize = 4;

    fn f(s: Scalar) -> Form {
        Form::function(M, s)
    }

    #[test]
    fn determinant_and_adjugate() {
        let m = FormMatrix::from_rows(
            M,
            vec![
                vec![f(Scalar::int(2)), f(Scalar::x(1)), Form::zero(M)],
                vec![Form::zero(M), Form::one(M), f(Scalar::x(2))],
                vec![f(Scalar::x(3)), Form::zero(M), Form::one(M)],
            ],
        )
        .unwrap();
        // 2·(1 − 0) − x1·(0 − x2 x3) + 0
        let expected = f(&Scalar::int(2) + &(&(&Scalar::x(1) * &Scalar::x(2)) * &Scalar::x(3)));
        assert_eq!(m.det(), expected);
        let prod = &m * &m.adjugate();
        assert_eq!(prod, FormMatrix::identity(3, M).map(|e| e * &expected));
    }

    #[test]
    fn wedge_product_of_one_form_matrices() {
        let a = FormMatrix::from_rows(
            M,
            vec![vec![Form::zero(M), Form::dx(M, 1)], vec![Form::dx(M, 2), Form::zero(M)]],
        )
        .unwrap();
        let sq = &a * &a;
        let w = Form::term(M, Basis::from_indices(&[1, 2]), Scalar::one());
        assert_eq!(sq.get(0, 0), &w);
        assert_eq!(sq.get(1, 1), &-&w);
        assert!(sq.trace().is_zero());
    }
}
