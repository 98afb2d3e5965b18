//! Dense exact matrices and the subspace computations built on them.
//!
//! Vectors are plain `Vec<F>` and act as columns. A subspace is handed around
//! as a canonical basis: the nonzero rows of its reduced row echelon form,
//! pivots normalized to one, sorted by pivot column. Two subspaces are equal
//! exactly when their canonical bases are equal.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::Field;

pub type Vector<F> = Vec<F>;
pub type Basis<F> = Vec<Vector<F>>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "new",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, F::one())
    }

    pub fn scalar(n: usize, c: F) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn diag(entries: Vec<F>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, cols: &[Vector<F>]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.data[i * cols.len() + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    let prod = a.clone() * b;
                    out.data[idx] = std::mem::replace(&mut out.data[idx], F::zero()) + &prod;
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Self, op: &'static str, f: impl Fn(&F, &F) -> F) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn matadd(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "matadd", |a, b| a.clone() + b)
    }

    pub fn matsub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "matsub", |a, b| a.clone() - b)
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    /// `self - c·I`.
    pub fn shift(&self, c: &F) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = m.get(i, i).clone() - c;
            m.set(i, i, v);
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn mul_vec(&self, v: &[F]) -> Vector<F> {
        debug_assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(F::zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        acc + &(a.clone() * b)
                    }
                })
            })
            .collect()
    }

    pub fn pow(&self, e: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                op: "pow",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.matmul(self)?;
        }
        Ok(acc)
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                op: "vstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).checked_inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).clone() * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let rj = m.get(r, j);
                    if rj.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).clone() - &(f.clone() * rj);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Result<F> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                op: "det",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(F::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            let inv = piv.checked_inv().expect("nonzero pivot");
            det = det * &piv;
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone() * &inv;
                for j in c..n {
                    let v = m.get(i, j).clone() - &(f.clone() * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                op: "inverse",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    /// Canonical basis of the right null space; empty iff full column rank.
    pub fn kernel(&self) -> Basis<F> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let raw: Basis<F> = free
            .iter()
            .map(|&fcol| {
                let mut v = vec![F::zero(); self.cols];
                v[fcol] = F::one();
                for (k, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(k, fcol).clone();
                }
                v
            })
            .collect();
        canonical_basis(self.cols, &raw)
    }

    /// Basis of `ker(self^power)`.
    pub fn generalized_kernel(&self, power: usize) -> Result<Basis<F>> {
        Ok(self.pow(power.max(1))?.kernel())
    }

    /// Entries row by row: rows separated by `;`, entries by `,`.
    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> FromStr for Matrix<F> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Matrix {
                rows: 0,
                cols: 0,
                data: Vec::new(),
            });
        }
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<F>()
                            .map_err(|_| Error::Parse(format!("bad matrix entry {e:?}")))
                    })
                    .collect::<Result<Vec<F>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)
    }
}

/// Incrementally maintained echelon basis of a subspace of `F^dim`.
///
/// Each stored row is reduced against all rows stored before it, so a vector
/// lies in the span iff reducing it in insertion order leaves zero.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F> {
    dim: usize,
    rows: Vec<(usize, Vector<F>)>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn reduce(&self, mut v: Vector<F>) -> Vector<F> {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].clone();
            for (j, r) in row.iter().enumerate().skip(*pivot) {
                if r.is_zero() {
                    continue;
                }
                v[j] = std::mem::replace(&mut v[j], F::zero()) - &(f.clone() * r);
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v.to_vec()).iter().all(F::is_zero)
    }

    /// Adds `v` if it is independent of the current rows; reports whether it was.
    pub fn insert(&mut self, v: Vector<F>) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].checked_inv().expect("nonzero pivot");
        for x in v.iter_mut().skip(pivot) {
            if !x.is_zero() {
                *x = x.clone() * &inv;
            }
        }
        self.rows.push((pivot, v));
        true
    }

    /// The canonical (fully reduced, pivot-sorted) basis.
    pub fn canonical(&self) -> Basis<F> {
        let raw: Basis<F> = self.rows.iter().map(|(_, r)| r.clone()).collect();
        canonical_basis(self.dim, &raw)
    }
}

/// Canonical basis of the span of `vectors` inside `F^dim`.
pub fn canonical_basis<F: Field>(dim: usize, vectors: &[Vector<F>]) -> Basis<F> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec()).expect("vectors of equal length");
    debug_assert_eq!(m.cols(), dim);
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Smallest subspace containing `seed` and stable under every operator.
pub fn span_closure<F: Field>(seed: &[Vector<F>], operators: &[&Matrix<F>]) -> Result<Basis<F>> {
    let Some(first) = seed.first() else {
        return Ok(Vec::new());
    };
    let n = first.len();
    for op in operators {
        if op.shape() != (n, n) {
            return Err(Error::DimensionMismatch {
                op: "span_closure",
                left: op.shape(),
                right: (n, n),
            });
        }
    }
    let mut basis = EchelonBasis::new(n);
    let mut queue: Vec<Vector<F>> = Vec::new();
    for v in seed {
        if basis.insert(v.clone()) {
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if basis.is_full() {
            break;
        }
        for op in operators {
            let w = op.mul_vec(&v);
            if basis.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    Ok(basis.canonical())
}

/// Intersection of two subspaces given by bases of `F^dim`.
pub fn intersect<F: Field>(dim: usize, a: &[Vector<F>], b: &[Vector<F>]) -> Basis<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve  Σ x_i a_i = Σ y_j b_j ; the intersection is spanned by Σ x_i a_i.
    let mut cols: Vec<Vector<F>> = a.to_vec();
    cols.extend(b.iter().map(|v| v.iter().map(|x| -x.clone()).collect()));
    let system = Matrix::from_columns(dim, &cols);
    let vectors: Basis<F> = system
        .kernel()
        .into_iter()
        .map(|coeffs| {
            let mut v = vec![F::zero(); dim];
            for (x, ai) in coeffs.iter().zip(a) {
                if x.is_zero() {
                    continue;
                }
                for (vk, ak) in v.iter_mut().zip(ai) {
                    *vk = vk.clone() + &(x.clone() * ak);
                }
            }
            v
        })
        .collect();
    canonical_basis(dim, &vectors)
}
