//! The decomposition `Λh* ⊗ C = ⊕ U^k` induced by a generalized complex
//! structure and the operators it splits `d` into.
//!
//! `U^{q−k} = (Λ^k L̄)•Φ`, so `U^q` is the spinor line. With
//! `P = [U^{−q} | … | U^q]` (basis columns), the projections are
//! `π_k = P E_k P⁻¹`, and `∂`, `∂̄` are the blocks of `P⁻¹ d P` that raise,
//! respectively lower, the index by one.

use thiserror::Error;

use crate::exterior::{clifford_matrix, Form, GVector};
use crate::generalized::{GcsError, GeneralizedStructure};
use crate::lie::binomial;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonicalError {
    #[error(transparent)]
    Structure(#[from] GcsError),
    #[error("U^{k} has dimension {got}, expected {expected}")]
    PieceDimension { k: i64, expected: usize, got: usize },
    #[error("the U^k do not form a direct sum")]
    NotDirect,
    #[error("index {k} is outside -{q}..{q}")]
    IndexOutOfRange { k: i64, q: usize },
    #[error("d has a component from U^{from} to U^{to}")]
    Residual { from: i64, to: i64 },
    #[error("operator has shape {got}, expected {expected}")]
    Shape { expected: usize, got: usize },
}

/// The pieces `U^{−q}, …, U^q` with the change of basis adapted to them.
#[derive(Clone, Debug)]
pub struct UkDecomposition {
    q: usize,
    n: usize,
    spinor: Form,
    pieces: Vec<Subspace>,
    change: Matrix,
    change_inv: Matrix,
    offsets: Vec<usize>,
}

impl UkDecomposition {
    pub fn new(gs: &GeneralizedStructure) -> Result<Self, CanonicalError> {
        let q = gs.q();
        let n = 2 * q;
        let size = 1usize << n;
        let spinor = gs.spinor()?;
        let lbar: Vec<Matrix> = gs
            .eigenbundle()
            .conj()
            .basis()
            .iter()
            .map(|v| clifford_matrix(&GVector::from_coords(v)))
            .collect();
        // by_count[k] spans (Λ^k L̄)•Φ.
        let mut layer = vec![(0usize, spinor.to_vector())];
        let mut by_count = vec![vec![spinor.to_vector()]];
        for _ in 0..n {
            let mut next = Vec::new();
            for (start, v) in &layer {
                for (a, m) in lbar.iter().enumerate().skip(*start) {
                    next.push((a + 1, m.apply(v)));
                }
            }
            by_count.push(next.iter().map(|(_, v)| v.clone()).collect());
            layer = next;
        }
        let mut pieces = Vec::with_capacity(n + 1);
        for k in -(q as i64)..=(q as i64) {
            let count = (q as i64 - k) as usize;
            let piece = Subspace::span(size, by_count[count].clone());
            let expected = binomial(n, count);
            if piece.dim() != expected {
                return Err(CanonicalError::PieceDimension {
                    k,
                    expected,
                    got: piece.dim(),
                });
            }
            pieces.push(piece);
        }
        let mut columns = Vec::with_capacity(size);
        let mut offsets = Vec::with_capacity(n + 2);
        for p in &pieces {
            offsets.push(columns.len());
            columns.extend(p.basis().iter().cloned());
        }
        offsets.push(columns.len());
        let change = Matrix::from_columns(size, &columns);
        let change_inv = change.inverse().map_err(|_| CanonicalError::NotDirect)?;
        Ok(UkDecomposition {
            q,
            n,
            spinor,
            pieces,
            change,
            change_inv,
            offsets,
        })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn spinor(&self) -> &Form {
        &self.spinor
    }

    fn slot(&self, k: i64) -> Result<usize, CanonicalError> {
        if k.unsigned_abs() as usize > self.q {
            return Err(CanonicalError::IndexOutOfRange { k, q: self.q });
        }
        Ok((k + self.q as i64) as usize)
    }

    pub fn piece(&self, k: i64) -> Result<&Subspace, CanonicalError> {
        Ok(&self.pieces[self.slot(k)?])
    }

    /// `dim U^k` for `k = −q..q`.
    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(Subspace::dim).collect()
    }

    /// The adapted basis `P` (columns) and its inverse.
    pub fn change_of_basis(&self) -> (&Matrix, &Matrix) {
        (&self.change, &self.change_inv)
    }

    /// Column range of `U^k` inside `P`.
    pub fn range(&self, k: i64) -> Result<std::ops::Range<usize>, CanonicalError> {
        let s = self.slot(k)?;
        Ok(self.offsets[s]..self.offsets[s + 1])
    }

    fn conjugate_diagonal(&self, f: impl Fn(i64) -> Scalar) -> Matrix {
        let size = 1usize << self.n;
        let mut diag = vec![Scalar::zero(); size];
        for k in -(self.q as i64)..=(self.q as i64) {
            let c = f(k);
            for idx in self.range(k).expect("in range") {
                diag[idx] = c.clone();
            }
        }
        &(&self.change * &Matrix::diagonal(&diag)) * &self.change_inv
    }

    /// `π_k`.
    pub fn projection(&self, k: i64) -> Result<Matrix, CanonicalError> {
        self.slot(k)?;
        Ok(self.conjugate_diagonal(|j| if j == k { Scalar::one() } else { Scalar::zero() }))
    }

    pub fn project(&self, a: &Form, k: i64) -> Result<Form, CanonicalError> {
        let p = self.projection(k)?;
        Ok(Form::from_vector(self.n, &p.apply(&a.to_vector())))
    }

    /// Multiplication by `i^k` on `U^k`.
    pub fn j_action(&self) -> Matrix {
        self.conjugate_diagonal(Scalar::i_pow)
    }

    /// Splits `d` (a matrix on the full form space) into `∂ + ∂̄`.
    pub fn split(&self, d: &Matrix) -> Result<Operators, CanonicalError> {
        let size = 1usize << self.n;
        if d.rows() != size || d.cols() != size {
            return Err(CanonicalError::Shape {
                expected: size,
                got: d.rows(),
            });
        }
        let adapted = &(&self.change_inv * d) * &self.change;
        let q = self.q as i64;
        let mut up = Matrix::zeros(size, size);
        let mut down = Matrix::zeros(size, size);
        for from in -q..=q {
            let cols = self.range(from)?;
            for to in -q..=q {
                let rows = self.range(to)?;
                let block = adapted.block(rows.start, cols.start, rows.len(), cols.len());
                if block.is_zero() {
                    continue;
                }
                match to - from {
                    1 => up.set_block(rows.start, cols.start, &block),
                    -1 => down.set_block(rows.start, cols.start, &block),
                    _ => return Err(CanonicalError::Residual { from, to }),
                }
            }
        }
        let del = &(&self.change * &up) * &self.change_inv;
        let delbar = &(&self.change * &down) * &self.change_inv;
        let d_j = (&delbar - &del).scale(&Scalar::i());
        Ok(Operators {
            d: d.clone(),
            del,
            delbar,
            d_j,
            j_act: self.j_action(),
        })
    }
}

/// `d`, its components and the derived operators, all on the full form space.
#[derive(Clone, Debug)]
pub struct Operators {
    pub d: Matrix,
    pub del: Matrix,
    pub delbar: Matrix,
    /// `i(∂̄ − ∂)`.
    pub d_j: Matrix,
    pub j_act: Matrix,
}

/// Outcome of the exact operator identities.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct IdentityReport {
    pub d_is_sum: bool,
    pub del_squared_zero: bool,
    pub delbar_squared_zero: bool,
    pub del_delbar_anticommute: bool,
    pub dj_is_conjugated_d: bool,
    pub dj_squared_zero: bool,
    pub d_dj_anticommute: bool,
    pub ddj_is_2i_del_delbar: bool,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.d_is_sum
            && self.del_squared_zero
            && self.delbar_squared_zero
            && self.del_delbar_anticommute
            && self.dj_is_conjugated_d
            && self.dj_squared_zero
            && self.d_dj_anticommute
            && self.ddj_is_2i_del_delbar
    }
}

impl Operators {
    pub fn identities(&self) -> IdentityReport {
        let j_inv = self.j_act.inverse().expect("J acts invertibly");
        let anticommutator = |a: &Matrix, b: &Matrix| (&(a * b) + &(b * a)).is_zero();
        let ddj = &self.d * &self.d_j;
        let two_i = Scalar::gauss(0, 2);
        IdentityReport {
            d_is_sum: &self.del + &self.delbar == self.d,
            del_squared_zero: (&self.del * &self.del).is_zero(),
            delbar_squared_zero: (&self.delbar * &self.delbar).is_zero(),
            del_delbar_anticommute: anticommutator(&self.del, &self.delbar),
            dj_is_conjugated_d: &(&j_inv * &self.d) * &self.j_act == self.d_j,
            dj_squared_zero: (&self.d_j * &self.d_j).is_zero(),
            d_dj_anticommute: anticommutator(&self.d, &self.d_j),
            ddj_is_2i_del_delbar: ddj == (&self.del * &self.delbar).scale(&two_i),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generalized::complex_lift;
    use crate::lie::LieModel;

    fn symplectic2() -> GeneralizedStructure {
        let j = Matrix::from_i64(&[&[0, 0, 0, -1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[1, 0, 0, 0]]);
        GeneralizedStructure::new(LieModel::abelian(2), j).unwrap()
    }

    fn complex2() -> GeneralizedStructure {
        let j = complex_lift(&Matrix::from_i64(&[&[0, -1], &[1, 0]]));
        GeneralizedStructure::new(LieModel::abelian(2), j).unwrap()
    }

    fn form(terms: &[(u32, Scalar)]) -> Form {
        let mut f = Form::zero(2);
        for (m, c) in terms {
            f.add_term(*m, c);
        }
        f
    }

    fn span(forms: &[Form]) -> Subspace {
        Subspace::span(4, forms.iter().map(Form::to_vector).collect())
    }

    #[test]
    fn symplectic_pieces() {
        let dec = UkDecomposition::new(&symplectic2()).unwrap();
        let i = Scalar::i();
        assert_eq!(dec.dims(), vec![1, 2, 1]);
        assert_eq!(dec.piece(1).unwrap(), &span(&[form(&[(0, Scalar::one()), (3, i.clone())])]));
        assert_eq!(dec.piece(-1).unwrap(), &span(&[form(&[(0, Scalar::one()), (3, -&i)])]));
        assert_eq!(dec.piece(0).unwrap(), &span(&[Form::generator(2, 0), Form::generator(2, 1)]));
        let half = Scalar::ratio(1, 2);
        let expected = form(&[(0, half.clone()), (3, &half * &i)]);
        assert_eq!(dec.project(&Form::one(2), 1).unwrap(), expected);
        assert_eq!(dec.project(&Form::generator(2, 0), 0).unwrap(), Form::generator(2, 0));
        assert_eq!(dec.project(dec.spinor(), 1).unwrap(), dec.spinor().clone());
        assert!(matches!(dec.projection(2), Err(CanonicalError::IndexOutOfRange { k: 2, q: 1 })));
    }

    #[test]
    fn complex_pieces() {
        let dec = UkDecomposition::new(&complex2()).unwrap();
        let i = Scalar::i();
        let dz = Form::covector(&[Scalar::one(), i.clone()]);
        let dzbar = Form::covector(&[Scalar::one(), -&i]);
        assert_eq!(dec.piece(1).unwrap(), &span(&[dz]));
        assert_eq!(dec.piece(-1).unwrap(), &span(&[dzbar]));
        assert_eq!(dec.piece(0).unwrap(), &span(&[Form::one(2), Form::basis(2, &[0, 1])]));
    }

    #[test]
    fn j_action_on_spinor() {
        let dec = UkDecomposition::new(&symplectic2()).unwrap();
        let j = dec.j_action();
        let phi = dec.spinor().to_vector();
        assert_eq!(j.apply(&phi), crate::linalg::scale_vector(&Scalar::i(), &phi));
        assert_eq!(j.pow(4), Matrix::identity(4));
    }

    #[test]
    fn abelian_operators_vanish() {
        let dec = UkDecomposition::new(&symplectic2()).unwrap();
        let ops = dec.split(&LieModel::abelian(2).d_matrix()).unwrap();
        assert!(ops.del.is_zero() && ops.delbar.is_zero() && ops.d_j.is_zero());
        assert!(ops.identities().all_hold());
    }
}
