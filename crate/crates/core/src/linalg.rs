//! Dense matrices over [`Scalar`] and subspaces kept in reduced row echelon form.
//!
//! A [`Subspace`] is represented by the RREF of any spanning set, which is a
//! canonical representative: two subspaces are equal exactly when their
//! stored bases are. Coordinates of a member vector with respect to the
//! stored basis are simply its entries in the pivot columns.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
}

pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, k: usize) -> Vector {
    let mut v = zero_vector(n);
    v[k] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

pub fn conj_vector(v: &[Scalar]) -> Vector {
    v.iter().map(Scalar::conj).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Row-reduces `rows` (each of length `ncols`) to RREF.
///
/// Returns the nonzero reduced rows and their pivot columns, in increasing
/// pivot order.
pub fn rref(mut rows: Vec<Vector>, ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    rows.retain(|r| !is_zero_vector(r));
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].weight())
        else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[rank].iter_mut().skip(col) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let support: Vec<usize> = (col..ncols).filter(|&c| !rows[rank][c].is_zero()).collect();
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &c in &support {
                let delta = &factor * &pivot_row[c];
                row[c] = &row[c] - &delta;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// A dense `rows × cols` matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = Scalar::one();
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (k, e) in entries.iter().enumerate() {
            m[(k, k)] = e.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self, LinalgError> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        let nrows = rows.len();
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose `k`-th column is `columns[k]`; every column has length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        Matrix::from_fn(rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(nrows, ncols, |r, c| Scalar::from_int(rows[r][c]))
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

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn conj(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::conj).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    /// True when every entry is fixed by conjugation.
    pub fn is_real(&self) -> bool {
        self.data.iter().all(Scalar::is_real)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::Shape(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        let rhs_support: Vec<Vec<usize>> = (0..rhs.rows)
            .map(|k| (0..rhs.cols).filter(|&c| !rhs[(k, c)].is_zero()).collect())
            .collect();
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for &c in &rhs_support[k] {
                    let prod = a * &rhs[(k, c)];
                    out[(r, c)] += &prod;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn rank(&self) -> usize {
        rref(self.row_vectors(), self.cols).1.len()
    }

    /// Null space `{v : M v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (rows, pivots) = rref(self.row_vectors(), self.cols);
        let mut basis = Vec::new();
        let pivot_set: Vec<bool> = (0..self.cols).map(|c| pivots.contains(&c)).collect();
        for free in (0..self.cols).filter(|&c| !pivot_set[c]) {
            let mut v = zero_vector(self.cols);
            v[free] = Scalar::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                if !row[free].is_zero() {
                    v[p] = -&row[free];
                }
            }
            basis.push(v);
        }
        Subspace::span(self.cols, basis)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, self.transpose().row_vectors())
    }

    pub fn kernel_image(&self) -> (Subspace, Subspace) {
        (self.kernel(), self.image())
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Shape("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let augmented: Vec<Vector> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend(unit_vector(n, r));
                row
            })
            .collect();
        let (rows, pivots) = rref(augmented, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        Ok(Matrix::from_fn(n, n, |r, c| rows[r][n + c].clone()))
    }

    /// Determinant of a square matrix; `0×0` gives 1.
    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        let mut rows = self.row_vectors();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                rows.swap(p, col);
                det = -det;
            }
            let pivot = rows[col][col].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if rows[r][col].is_zero() {
                    continue;
                }
                let factor = &rows[r][col] * &inv;
                let (upper, lower) = rows.split_at_mut(r);
                for (x, p) in lower[0][col..n].iter_mut().zip(&upper[col][col..n]) {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        det
    }

    /// Block diagonal matrix `diag(a, b)`.
    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(a.rows + b.rows, a.cols + b.cols);
        m.set_block(0, 0, a);
        m.set_block(a.rows, a.cols, b);
        m
    }

    /// `[[a, b], [c, d]]`.
    pub fn blocks(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(a.rows + c.rows, a.cols + b.cols);
        m.set_block(0, 0, a);
        m.set_block(0, a.cols, b);
        m.set_block(a.rows, 0, c);
        m.set_block(a.rows, a.cols, d);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    /// Exponential of a nilpotent matrix as the finite series `Σ Aᵏ/k!`.
    ///
    /// Panics if the series does not terminate within `rows` terms.
    pub fn exp_nilpotent(&self) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        let mut term = Matrix::identity(self.rows);
        for k in 1..=self.rows + 1 {
            term = (&term * self).scale(&Scalar::ratio(1, k as i64));
            if term.is_zero() {
                return acc;
            }
            acc = &acc + &term;
        }
        panic!("exp_nilpotent: matrix is not nilpotent");
    }

    /// First entry (row-major) where the two matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        (0..self.rows * self.cols)
            .find(|&k| self.data[k] != other.data[k])
            .map(|k| (k / self.cols, k % self.cols))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&Scalar::from_int(-1))
    }
}

/// A linear subspace of `Scalar^ambient`, stored as an RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {})", self.dim(), self.ambient)
    }
}

impl Subspace {
    pub fn span(ambient: usize, vectors: Vec<Vector>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == ambient));
        let (basis, pivots) = rref(vectors, ambient);
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|k| unit_vector(ambient, k)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Subspace::span(ambient, indices.into_iter().map(|k| unit_vector(ambient, k)).collect())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    fn check(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// Reduces `v` against the basis; zero iff `v` lies in the subspace.
    fn residual(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (k, bk) in b.iter().enumerate().skip(p) {
                if !bk.is_zero() {
                    r[k] = &r[k] - &(&c * bk);
                }
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        is_zero_vector(&self.residual(v))
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is not a member.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Ok(Subspace::span(self.ambient, vs))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        if self.dim() == self.ambient {
            return Ok(other.clone());
        }
        if other.dim() == other.ambient {
            return Ok(self.clone());
        }
        let annihilators = self.annihilator().sum(&other.annihilator())?;
        Ok(annihilators.annihilator())
    }

    /// `{y : y·x = 0 for all x}` under the bilinear dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        Matrix::from_rows(self.basis.clone())
            .expect("basis rows share a length")
            .kernel()
    }

    pub fn conj(&self) -> Subspace {
        Subspace::span(self.ambient, self.basis.iter().map(|v| conj_vector(v)).collect())
    }

    /// `M(self)`.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace, LinalgError> {
        if m.cols() != self.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: m.cols(),
                right: self.ambient,
            });
        }
        Ok(Subspace::span(m.rows(), self.basis.iter().map(|v| m.apply(v)).collect()))
    }

    /// `{v : M v ∈ self}`.
    pub fn preimage_under(&self, m: &Matrix) -> Result<Subspace, LinalgError> {
        if m.rows() != self.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: m.rows(),
                right: self.ambient,
            });
        }
        let ann = self.annihilator();
        if ann.is_zero() {
            return Ok(Subspace::full(m.cols()));
        }
        let constraints = &Matrix::from_rows(ann.basis.clone())? * m;
        Ok(constraints.kernel())
    }

    /// First basis vector of `self` outside `other`, scanning in pivot order.
    ///
    /// This is the deterministic witness for `self ⊄ other`.
    pub fn witness_outside(&self, other: &Subspace) -> Result<Option<Vector>, LinalgError> {
        self.check(other)?;
        Ok(self.basis.iter().find(|v| !other.contains_vector(v)).cloned())
    }

    /// Dimension of `self / sub`; `sub` must be contained in `self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize, LinalgError> {
        if !self.contains(sub)? {
            return Err(LinalgError::Shape("quotient by a non-subspace".into()));
        }
        Ok(self.dim() - sub.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s() -> Scalar {
        Scalar::s()
    }

    #[test]
    fn zero_matrix_kernel_and_image() {
        let (k, im) = Matrix::zeros(2, 2).kernel_image();
        assert_eq!(k, Subspace::full(2));
        assert_eq!(im, Subspace::zero(2));
    }

    #[test]
    fn identity_kernel_and_image() {
        let (k, im) = Matrix::identity(3).kernel_image();
        assert!(k.is_zero());
        assert_eq!(im, Subspace::full(3));
    }

    #[test]
    fn rank_one_matrix_in_s() {
        let s2 = &s() * &s();
        let m = Matrix::from_rows(vec![vec![Scalar::one(), s()], vec![s(), s2]]).unwrap();
        let (k, im) = m.kernel_image();
        assert_eq!(im.dim(), 1);
        assert_eq!(k.dim(), 1);
        // back-substitution: (-s, 1) spans the kernel
        let v = vec![-s(), Scalar::one()];
        assert!(is_zero_vector(&m.apply(&v)));
        assert!(k.contains_vector(&v));
    }

    #[test]
    fn coordinate_lines() {
        let a = Subspace::coordinate(2, [0]);
        let b = Subspace::coordinate(2, [1]);
        assert!(a.intersect(&b).unwrap().is_zero());
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(2));
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.sum(&a).unwrap(), a);
    }

    #[test]
    fn containment_by_construction() {
        let v = vec![Scalar::one(), s(), Scalar::zero()];
        let a = Subspace::span(3, vec![v.clone()]);
        let b = Subspace::span(3, vec![v, unit_vector(3, 2)]);
        assert!(b.contains(&a).unwrap());
        assert!(!a.contains(&b).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert_eq!(
            a.sum(&b),
            Err(LinalgError::AmbientMismatch { left: 2, right: 3 })
        );
        assert!(a.intersect(&b).is_err());
        assert!(a.contains(&b).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(vec![
            vec![Scalar::one(), s()],
            vec![Scalar::i(), Scalar::from_int(2)],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert_eq!(Matrix::zeros(2, 2).inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn preimage_and_image() {
        // projection onto first coordinate
        let m = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        let w = Subspace::zero(2);
        let pre = w.preimage_under(&m).unwrap();
        assert_eq!(pre, Subspace::coordinate(2, [1]));
        let img = Subspace::full(2).image_under(&m).unwrap();
        assert_eq!(img, Subspace::coordinate(2, [0]));
    }

    #[test]
    fn exp_of_nilpotent() {
        let n = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(n.exp_nilpotent(), Matrix::from_i64(&[&[1, 1], &[0, 1]]));
    }

    fn small_scalar() -> impl Strategy<Value = Scalar> {
        (-3i64..=3, -3i64..=3, -2i64..=2).prop_map(|(a, b, c)| {
            &Scalar::gauss(a, b) + &(&Scalar::from_int(c) * &Scalar::s())
        })
    }

    fn small_matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(small_scalar(), r * c)
            .prop_map(move |v| Matrix::from_fn(r, c, |i, j| v[i * c + j].clone()))
    }

    fn small_subspace() -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(proptest::collection::vec(small_scalar(), 4), 0..4)
            .prop_map(|vs| Subspace::span(4, vs))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn rank_nullity(m in small_matrix(3, 4)) {
            let (k, im) = m.kernel_image();
            prop_assert_eq!(k.dim() + im.dim(), 4);
            for v in k.basis() {
                prop_assert!(is_zero_vector(&m.apply(v)));
            }
        }

        #[test]
        fn dimension_formula(a in small_subspace(), b in small_subspace()) {
            let sum = a.sum(&b).unwrap();
            let meet = a.intersect(&b).unwrap();
            prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
            prop_assert!(a.contains(&meet).unwrap() && b.contains(&meet).unwrap());
        }

        #[test]
        fn modular_inequality(a in small_subspace(), b in small_subspace(), c in small_subspace()) {
            let lhs = a.sum(&b.intersect(&c).unwrap()).unwrap();
            let rhs = a.sum(&b).unwrap().intersect(&a.sum(&c).unwrap()).unwrap();
            prop_assert!(lhs.dim() <= rhs.dim());
            prop_assert!(rhs.contains(&lhs).unwrap());
        }
    }
}
