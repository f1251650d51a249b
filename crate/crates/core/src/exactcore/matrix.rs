//! Small matrices with polynomial entries.

use std::fmt;

use super::poly::Polynomial;
use super::ring::Ring;
use super::scalar::{Coeff, Rational};
use super::ExactError;

#[derive(Clone)]
pub struct PolyMatrix<K = Rational> {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial<K>>,
}

impl<K: Coeff> PolyMatrix<K> {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), rows, cols, data: vec![Polynomial::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial<K>>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(ExactError::Dimension("ragged matrix rows".into()));
            }
            for e in row {
                ring.check_same(e.ring())?;
                data.push(e);
            }
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: r, cols: c, data })
    }

    /// Skew-symmetric matrix from its strictly upper triangle, listed row by row.
    pub fn skew_from_upper(ring: &Ring, n: usize, upper: &[Polynomial<K>]) -> Result<Self, ExactError> {
        if upper.len() != n * (n - 1) / 2 {
            return Err(ExactError::Dimension("upper triangle size".into()));
        }
        let mut m = Self::zeros(ring, n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, upper[k].clone());
                m.set(j, i, -&upper[k]);
                k += 1;
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<K> {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<K>) {
        self.data[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[Polynomial<K>] {
        &self.data
    }

    pub fn map(&self, f: impl Fn(&Polynomial<K>) -> Polynomial<K>) -> Self {
        PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &Polynomial<K>) -> Self {
        self.map(|e| e * c)
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.checked_add(b)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.add(&other.map(|e| -e))
    }

    fn same_shape(&self, other: &Self) -> Result<(), ExactError> {
        self.ring.check_same(&other.ring)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.ring.check_same(&other.ring)?;
        if self.cols != other.rows {
            return Err(ExactError::Dimension("inner dimensions differ".into()));
        }
        let mut out = Self::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Polynomial<K>]) -> Result<Vec<Polynomial<K>>, ExactError> {
        let col = PolyMatrix::from_rows(&self.ring, v.iter().map(|x| vec![x.clone()]).collect())?;
        Ok(self.mul(&col)?.data)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Polynomial::is_zero)
    }

    fn require_square(&self) -> Result<usize, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::Dimension(format!("{}x{} is not square", self.rows, self.cols)));
        }
        Ok(self.rows)
    }

    /// Submatrix keeping the listed rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(&self.ring, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Result<Polynomial<K>, ExactError> {
        let n = self.require_square()?;
        Ok(self.det_unchecked(n))
    }

    fn det_unchecked(&self, n: usize) -> Polynomial<K> {
        match n {
            0 => Polynomial::one(&self.ring),
            1 => self.get(0, 0).clone(),
            2 => self.get(0, 0) * self.get(1, 1) - self.get(0, 1) * self.get(1, 0),
            _ => {
                let mut acc = Polynomial::zero(&self.ring);
                let rest: Vec<usize> = (1..n).collect();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                    let minor = self.submatrix(&rest, &cols).det_unchecked(n - 1);
                    let t = a * minor;
                    acc = if j % 2 == 0 { acc + t } else { acc - t };
                }
                acc
            }
        }
    }

    /// Classical adjoint: `A * adj(A) = det(A) * I`.
    pub fn adjugate(&self) -> Result<Self, ExactError> {
        let n = self.require_square()?;
        let mut adj = Self::zeros(&self.ring, n, n);
        if n == 1 {
            adj.set(0, 0, Polynomial::one(&self.ring));
            return Ok(adj);
        }
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = (0..n).filter(|&r| r != i).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let m = self.submatrix(&rows, &cols).det_unchecked(n - 1);
                adj.set(j, i, if (i + j) % 2 == 0 { m } else { -m });
            }
        }
        Ok(adj)
    }

    /// All `k x k` minors, rows and columns chosen in increasing order.
    pub fn minors(&self, k: usize) -> Vec<Polynomial<K>> {
        let mut out = Vec::new();
        for rs in combinations(self.rows, k) {
            for cs in combinations(self.cols, k) {
                out.push(self.submatrix(&rs, &cs).det_unchecked(k));
            }
        }
        out
    }

    pub fn is_skew(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                self.get(i, i).is_zero() && (0..i).all(|j| *self.get(i, j) == -self.get(j, i))
            })
    }

    /// Pfaffian of a skew matrix of even size; `Pf [[0, a], [-a, 0]] = a`.
    pub fn pfaffian(&self) -> Result<Polynomial<K>, ExactError> {
        let n = self.require_square()?;
        if !self.is_skew() {
            return Err(ExactError::NotSkew);
        }
        if n % 2 == 1 {
            return Ok(Polynomial::zero(&self.ring));
        }
        Ok(self.pf_unchecked())
    }

    fn pf_unchecked(&self) -> Polynomial<K> {
        let n = self.rows;
        if n == 0 {
            return Polynomial::one(&self.ring);
        }
        let mut acc = Polynomial::zero(&self.ring);
        for j in 1..n {
            let a = self.get(0, j);
            if a.is_zero() {
                continue;
            }
            let keep: Vec<usize> = (1..n).filter(|&c| c != j).collect();
            let t = a * self.submatrix(&keep, &keep).pf_unchecked();
            acc = if j % 2 == 1 { acc + t } else { acc - t };
        }
        acc
    }

    /// For odd `n`, the signed Pfaffians `(-1)^i Pf(M without row/col i)` (0-based `i`),
    /// i.e. sign `(-1)^(i+1)` with 1-based indexing.
    pub fn sub_pfaffians(&self) -> Result<Vec<Polynomial<K>>, ExactError> {
        let n = self.require_square()?;
        if !self.is_skew() {
            return Err(ExactError::NotSkew);
        }
        if n % 2 == 0 {
            return Err(ExactError::Dimension("sub-Pfaffians need odd size".into()));
        }
        Ok((0..n)
            .map(|i| {
                let keep: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let p = self.submatrix(&keep, &keep).pf_unchecked();
                if i % 2 == 0 { p } else { -p }
            })
            .collect())
    }
}

impl<K: Coeff> PartialEq for PolyMatrix<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl<K: Coeff> fmt::Debug for PolyMatrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
