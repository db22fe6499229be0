//! Generalized complex structures on a Lie algebra `h` of dimension `2q`.
//!
//! `J` acts on `h ⊕ h*` in the basis `e_1..e_2q, ξ_1..ξ_2q` (vectors first).
//! Its `+i` eigenspace `L` is maximal isotropic, `L ∩ L̄ = 0` and closed under
//! the Courant bracket; the pure spinor line `Φ` is the joint kernel of the
//! Clifford action of `L`.

use thiserror::Error;

use crate::exterior::{clifford_matrix, natural_pairing, pairing_matrix, Form, GVector};
use crate::lie::LieModel;
use crate::linalg::{dot, is_zero_vector, unit_vector, Matrix, Subspace, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcsError {
    #[error("generalized structures need an even-dimensional algebra, got {0}")]
    OddDimension(usize),
    #[error("J must be {expected}x{expected}, got {rows}x{cols}")]
    Shape { expected: usize, rows: usize, cols: usize },
    #[error("J must be real")]
    NotReal,
    #[error("J^2 != -1: entry ({row}, {col}) of J^2 + 1 is nonzero")]
    NotSquareRoot { row: usize, col: usize },
    #[error("J is not orthogonal for the pairing: fails on ({left}, {right})")]
    NotOrthogonal { left: String, right: String },
    #[error("J is not integrable: N_J({left}, {right}) = {value}")]
    NotIntegrable { left: String, right: String, value: String },
    #[error("B must be a 2-form on the same algebra")]
    BadBField,
    #[error("B is not closed")]
    BNotClosed,
    #[error("L has dimension {got}, expected {expected}")]
    LDimension { expected: usize, got: usize },
    #[error("L is not isotropic: basis vectors {0} and {1} pair nontrivially")]
    NotIsotropic(usize, usize),
    #[error("L meets its conjugate")]
    NotTransverse,
    #[error("L is not Courant-involutive: bracket of basis vectors {0} and {1} leaves it")]
    NotInvolutive(usize, usize),
    #[error("the annihilator of L has dimension {0}, expected 1")]
    SpinorDimension(usize),
}

/// Name of the `k`-th basis element of `h ⊕ h*` for dimension `n`.
pub fn basis_label(n: usize, k: usize) -> String {
    if k < n {
        format!("e{}", k + 1)
    } else {
        format!("x{}", k - n + 1)
    }
}

/// Renders a vector of `h ⊕ h*` using the labels of [`basis_label`].
pub fn render_gvector(v: &[Scalar]) -> String {
    let n = v.len() / 2;
    let mut parts = Vec::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let label = basis_label(n, k);
        let coeff = c.to_string();
        parts.push(if c.is_one() {
            label
        } else if coeff.contains(' ') {
            format!("({coeff})*{label}")
        } else {
            format!("{coeff}*{label}")
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// The Courant bracket of invariant sections:
/// `[X + α, Y + β] = [X, Y] + ι_X dβ − ι_Y dα`.
pub fn courant_bracket(h: &LieModel, v: &GVector, w: &GVector) -> GVector {
    let vector = h.bracket(&v.vector, &w.vector);
    let dalpha = h.d(&Form::covector(&v.covector)).expect("dimension checked");
    let dbeta = h.d(&Form::covector(&w.covector)).expect("dimension checked");
    let first = dbeta.contract(&v.vector).expect("dimension checked");
    let second = dalpha.contract(&w.vector).expect("dimension checked");
    let cov = first.sub(&second).expect("same dimension");
    let covector = (0..h.dim()).map(|k| cov.coeff(1 << k)).collect();
    GVector { vector, covector }
}

fn courant_coords(h: &LieModel, a: &[Scalar], b: &[Scalar]) -> Vector {
    courant_bracket(h, &GVector::from_coords(a), &GVector::from_coords(b)).coords()
}

/// `N_J(a, b)`.
pub fn nijenhuis(h: &LieModel, j: &Matrix, a: &[Scalar], b: &[Scalar]) -> Vector {
    let ja = j.apply(a);
    let jb = j.apply(b);
    let t1 = courant_coords(h, &ja, &jb);
    let t2 = j.apply(&courant_coords(h, a, &jb));
    let t3 = j.apply(&courant_coords(h, &ja, b));
    let t4 = j.apply(&j.apply(&courant_coords(h, a, b)));
    t1.iter()
        .zip(&t2)
        .zip(&t3)
        .zip(&t4)
        .map(|(((x, y), z), w)| &(&(x - y) - z) + w)
        .collect()
}

/// A validated generalized complex structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedStructure {
    base: LieModel,
    j: Matrix,
}

impl GeneralizedStructure {
    /// Checks `J² = −1`, orthogonality and integrability on basis pairs.
    pub fn new(base: LieModel, j: Matrix) -> Result<Self, GcsError> {
        check_algebraic(base.dim(), &j)?;
        if let Some((a, b, value)) = first_nijenhuis_failure(&base, &j) {
            let n = base.dim();
            return Err(GcsError::NotIntegrable {
                left: basis_label(n, a),
                right: basis_label(n, b),
                value: render_gvector(&value),
            });
        }
        Ok(GeneralizedStructure { base, j })
    }

    pub fn base(&self) -> &LieModel {
        &self.base
    }

    pub fn matrix(&self) -> &Matrix {
        &self.j
    }

    /// Half the dimension of `h`.
    pub fn q(&self) -> usize {
        self.base.dim() / 2
    }

    /// The `+i` eigenspace `L`.
    pub fn eigenbundle(&self) -> Subspace {
        let n = self.j.rows();
        let shifted = &self.j - &Matrix::identity(n).scale(&Scalar::i());
        shifted.kernel()
    }

    /// `k = 2q − dim π(L)` with `π` the projection to `h ⊗ C`.
    pub fn structure_type(&self) -> usize {
        let n = self.base.dim();
        let l = self.eigenbundle();
        let projected = Subspace::span(n, l.basis().iter().map(|v| v[..n].to_vec()).collect());
        n - projected.dim()
    }

    /// The pure spinor line, normalized so its pivot coefficient is 1.
    pub fn spinor(&self) -> Result<Form, GcsError> {
        let l = self.eigenbundle();
        let rows: Vec<Vector> = l
            .basis()
            .iter()
            .flat_map(|v| clifford_matrix(&GVector::from_coords(v)).row_vectors())
            .filter(|r| !is_zero_vector(r))
            .collect();
        let n = self.base.dim();
        let kernel = if rows.is_empty() {
            Subspace::full(1 << n)
        } else {
            Matrix::from_rows(rows).expect("uniform rows").kernel()
        };
        if kernel.dim() != 1 {
            return Err(GcsError::SpinorDimension(kernel.dim()));
        }
        Ok(Form::from_vector(n, &kernel.basis()[0]))
    }

    /// `J^B = [[1, 0], [−B, 1]] J [[1, 0], [B, 1]]` for a closed 2-form `B`.
    pub fn b_field_transform(&self, b: &Form) -> Result<GeneralizedStructure, GcsError> {
        let n = self.base.dim();
        if b.dim() != n || b.terms().any(|(m, _)| m.count_ones() != 2) {
            return Err(GcsError::BadBField);
        }
        if !self.base.d(b).expect("dimension checked").is_zero() {
            return Err(GcsError::BNotClosed);
        }
        let shear = b_shear(b, &Scalar::one());
        let inverse = b_shear(b, &Scalar::from_int(-1));
        let j = &(&inverse * &self.j) * &shear;
        GeneralizedStructure::new(self.base.clone(), j)
    }

    /// Rebuilds `J = i(P_L − P_L̄)` from a candidate `L`.
    pub fn from_eigenbundle(base: LieModel, l: &Subspace) -> Result<Self, GcsError> {
        let n = base.dim();
        if n % 2 == 1 {
            return Err(GcsError::OddDimension(n));
        }
        if l.ambient() != 2 * n || l.dim() != n {
            return Err(GcsError::LDimension {
                expected: n,
                got: l.dim(),
            });
        }
        let basis = l.basis();
        for a in 0..basis.len() {
            for b in a..basis.len() {
                let p = natural_pairing(&GVector::from_coords(&basis[a]), &GVector::from_coords(&basis[b]))
                    .expect("same dimension");
                if !p.is_zero() {
                    return Err(GcsError::NotIsotropic(a, b));
                }
            }
        }
        let lbar = l.conj();
        if l.sum(&lbar).expect("same ambient").dim() != 2 * n {
            return Err(GcsError::NotTransverse);
        }
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                if !l.contains_vector(&courant_coords(&base, &basis[a], &basis[b])) {
                    return Err(GcsError::NotInvolutive(a, b));
                }
            }
        }
        let mut columns = basis.to_vec();
        columns.extend(lbar.basis().iter().cloned());
        let p = Matrix::from_columns(2 * n, &columns);
        let eig: Vec<Scalar> = (0..2 * n)
            .map(|k| if k < n { Scalar::i() } else { -Scalar::i() })
            .collect();
        let j = &(&p * &Matrix::diagonal(&eig)) * &p.inverse().expect("L ⊕ L̄ spans");
        GeneralizedStructure::new(base, j)
    }
}

/// `[[1, 0], [c·B, 1]]` where `B` acts by `X ↦ ι_X B`.
pub fn b_shear(b: &Form, c: &Scalar) -> Matrix {
    let n = b.dim();
    let mut m = Matrix::identity(2 * n);
    for x in 0..n {
        let ix = b.contract(&unit_vector(n, x)).expect("same dimension");
        for y in 0..n {
            let v = ix.coeff(1 << y);
            if !v.is_zero() {
                m[(n + y, x)] = c * &v;
            }
        }
    }
    m
}

/// Lifts a complex structure `I` on `h` to `J = [[−I, 0], [0, Iᵀ]]`.
pub fn complex_lift(i_mat: &Matrix) -> Matrix {
    Matrix::block_diag(&-i_mat, &i_mat.transpose())
}

fn check_algebraic(n: usize, j: &Matrix) -> Result<(), GcsError> {
    if n % 2 == 1 {
        return Err(GcsError::OddDimension(n));
    }
    if j.rows() != 2 * n || j.cols() != 2 * n {
        return Err(GcsError::Shape {
            expected: 2 * n,
            rows: j.rows(),
            cols: j.cols(),
        });
    }
    if !j.is_real() {
        return Err(GcsError::NotReal);
    }
    let sq = &(j * j) + &Matrix::identity(2 * n);
    if let Some((row, col)) = sq.first_difference(&Matrix::zeros(2 * n, 2 * n)) {
        return Err(GcsError::NotSquareRoot { row, col });
    }
    let g = pairing_matrix(n);
    let orth = &(&j.transpose() * &g) * j;
    if let Some((r, c)) = orth.first_difference(&g) {
        return Err(GcsError::NotOrthogonal {
            left: basis_label(n, r),
            right: basis_label(n, c),
        });
    }
    Ok(())
}

fn first_nijenhuis_failure(h: &LieModel, j: &Matrix) -> Option<(usize, usize, Vector)> {
    let size = j.rows();
    for a in 0..size {
        for b in a + 1..size {
            let value = nijenhuis(h, j, &unit_vector(size, a), &unit_vector(size, b));
            if !is_zero_vector(&value) {
                return Some((a, b, value));
            }
        }
    }
    None
}

/// The pairing `(v, w)` on coordinate vectors.
pub fn pair_coords(v: &[Scalar], w: &[Scalar]) -> Scalar {
    let n = v.len() / 2;
    dot(v, &pairing_matrix(n).apply(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieModel;

    fn ints(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    fn symplectic2() -> Matrix {
        // ω = ξ1∧ξ2: X ↦ ι_X ω sends e1 ↦ ξ2, e2 ↦ −ξ1.
        ints(&[&[0, 0, 0, -1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[1, 0, 0, 0]])
    }

    fn complex2() -> Matrix {
        complex_lift(&ints(&[&[0, -1], &[1, 0]]))
    }

    fn gv(entries: &[(usize, Scalar)], size: usize) -> Vector {
        let mut v = vec![Scalar::zero(); size];
        for (k, c) in entries {
            v[*k] = c.clone();
        }
        v
    }

    #[test]
    fn courant_examples() {
        let h = LieModel::from_brackets(3, &[(0, 1, vec![Scalar::zero(), Scalar::zero(), Scalar::one()])]).unwrap();
        let b = courant_bracket(&h, &GVector::e(3, 0), &GVector::e(3, 1));
        assert_eq!(b, GVector::e(3, 2));
        let b = courant_bracket(&h, &GVector::e(3, 0), &GVector::xi(3, 2));
        assert_eq!(b, GVector::xi(3, 1).scale(&Scalar::from_int(-1)));
        let a = LieModel::abelian(2);
        assert_eq!(courant_bracket(&a, &GVector::e(2, 0), &GVector::xi(2, 1)), GVector::zero(2));
    }

    #[test]
    fn symplectic_structure() {
        let gs = GeneralizedStructure::new(LieModel::abelian(2), symplectic2()).unwrap();
        let i = Scalar::i();
        let l = gs.eigenbundle();
        let expected = Subspace::span(
            4,
            vec![
                gv(&[(0, Scalar::one()), (3, -&i)], 4),
                gv(&[(1, Scalar::one()), (2, i.clone())], 4),
            ],
        );
        assert_eq!(l, expected);
        assert_eq!(gs.structure_type(), 0);
        let mut phi = Form::one(2);
        phi.add_term(0b11, &i);
        assert_eq!(gs.spinor().unwrap(), phi);
    }

    #[test]
    fn complex_structure() {
        let gs = GeneralizedStructure::new(LieModel::abelian(2), complex2()).unwrap();
        let i = Scalar::i();
        let expected = Subspace::span(
            4,
            vec![
                gv(&[(0, Scalar::one()), (1, i.clone())], 4),
                gv(&[(2, Scalar::one()), (3, i.clone())], 4),
            ],
        );
        assert_eq!(gs.eigenbundle(), expected);
        assert_eq!(gs.structure_type(), 1);
        assert_eq!(gs.spinor().unwrap(), Form::covector(&[Scalar::one(), i]));
    }

    #[test]
    fn conjugate_is_minus_i_eigenspace() {
        let gs = GeneralizedStructure::new(LieModel::abelian(2), symplectic2()).unwrap();
        let minus = (&gs.j + &Matrix::identity(4).scale(&Scalar::i())).kernel();
        assert_eq!(gs.eigenbundle().conj(), minus);
    }

    #[test]
    fn rejections() {
        let h3 = LieModel::abelian(3);
        assert_eq!(
            GeneralizedStructure::new(h3, Matrix::identity(6)),
            Err(GcsError::OddDimension(3))
        );
        let a = LieModel::abelian(2);
        assert!(matches!(
            GeneralizedStructure::new(a.clone(), Matrix::identity(4)),
            Err(GcsError::NotSquareRoot { row: 0, col: 0 })
        ));
        let bad = Matrix::block_diag(&ints(&[&[0, -1], &[1, 0]]), &ints(&[&[0, 1], &[-1, 0]]));
        assert!(matches!(GeneralizedStructure::new(a, bad), Err(GcsError::NotOrthogonal { .. })));
    }

    #[test]
    fn round_trip_through_l() {
        let gs = GeneralizedStructure::new(LieModel::abelian(2), symplectic2()).unwrap();
        let back = GeneralizedStructure::from_eigenbundle(LieModel::abelian(2), &gs.eigenbundle()).unwrap();
        assert_eq!(back.matrix(), gs.matrix());
        let not_isotropic = Subspace::span(4, vec![unit_vector(4, 0), unit_vector(4, 2)]);
        assert_eq!(
            GeneralizedStructure::from_eigenbundle(LieModel::abelian(2), &not_isotropic),
            Err(GcsError::NotIsotropic(0, 1))
        );
        let real = Subspace::span(4, vec![unit_vector(4, 0), unit_vector(4, 1)]);
        assert_eq!(
            GeneralizedStructure::from_eigenbundle(LieModel::abelian(2), &real),
            Err(GcsError::NotTransverse)
        );
    }

    #[test]
    fn b_field_transforms() {
        let a = LieModel::abelian(2);
        let gs = GeneralizedStructure::new(a, symplectic2()).unwrap();
        let zero = Form::zero(2);
        assert_eq!(gs.b_field_transform(&zero).unwrap(), gs);
        let b = Form::basis(2, &[0, 1]).scale(&Scalar::from_int(3));
        let t = gs.b_field_transform(&b).unwrap();
        assert_eq!(t.structure_type(), 0);
        assert_eq!(t.b_field_transform(&b.neg()).unwrap(), gs);
        // The spinor picks up e^{B}.
        let phi = gs.spinor().unwrap();
        let expected = b.exp_wedge().unwrap().wedge(&phi).unwrap();
        let got = t.spinor().unwrap();
        let ratio = &expected.coeff(0) / &got.coeff(0);
        assert_eq!(got.scale(&ratio), expected);
    }
}
