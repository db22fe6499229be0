//! Lie algebras given by structure constants, their Chevalley–Eilenberg
//! complexes, foliated pairs `(g, F)` and transverse reduction to `g/F`.
//!
//! The CE differential is fixed by `dξ(X, Y) = -ξ([X, Y])`, so on
//! generators `dξ_k = -Σ_{i<j} c_ij^k ξ_i ∧ ξ_j`, extended as an
//! antiderivation. With this sign `d² = 0` exactly when Jacobi holds.

use thiserror::Error;

use crate::exterior::{contraction_matrix, masks_of_degree, Form, MAX_DIM};
use crate::linalg::{is_zero_vector, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::poly::MPoly;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("structure constants have the wrong shape for dimension {0}")]
    Shape(usize),
    #[error("dimension {0} exceeds the supported maximum of {MAX_DIM}")]
    TooLarge(usize),
    #[error("bracket is not antisymmetric on (e{}, e{})", .0 + 1, .1 + 1)]
    NotAntisymmetric(usize, usize),
    #[error("Jacobi identity fails on (e{}, e{}, e{}) with defect {defect}", .i + 1, .j + 1, .k + 1)]
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        defect: String,
    },
    #[error("group law is not unital: {0}")]
    NotUnital(String),
    #[error("group law has {got} components, expected {expected}")]
    LawShape { expected: usize, got: usize },
    #[error("leaf space is not a subalgebra: bracket of leaf vectors {0} and {1} leaves it")]
    NotSubalgebra(usize, usize),
    #[error("leaf space is not an ideal: [e{}, f{}] = {witness} is not in it", .generator + 1, .leaf + 1)]
    NotIdeal {
        generator: usize,
        leaf: usize,
        witness: String,
    },
    #[error("quotient map does not have the leaf space as its kernel")]
    KernelMismatch,
    #[error("quotient map has {got} columns, expected {expected}")]
    QuotientShape { expected: usize, got: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

/// Renders `Σ v_k e_k` in model-file syntax.
pub fn render_vector(v: &[Scalar], prefix: &str) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let coeff = c.to_string();
        let coeff = if coeff.contains(" + ") || coeff.contains(" - ") || coeff.contains(")/(") {
            format!("({coeff})")
        } else {
            coeff
        };
        let term = if c.is_one() {
            format!("{prefix}{}", k + 1)
        } else if (-c).is_one() {
            format!("-{prefix}{}", k + 1)
        } else {
            format!("{coeff}*{prefix}{}", k + 1)
        };
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-') {
            out = format!("{out} - {rest}");
        } else {
            out = format!("{out} + {term}");
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// A Lie algebra with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieModel {
    dim: usize,
    constants: Vec<Vec<Vector>>,
}

impl LieModel {
    /// Validates antisymmetry and the Jacobi identity.
    pub fn new(constants: Vec<Vec<Vector>>) -> Result<Self, LieError> {
        let n = constants.len();
        if n > MAX_DIM {
            return Err(LieError::TooLarge(n));
        }
        if constants.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(LieError::Shape(n));
        }
        for (i, row) in constants.iter().enumerate() {
            for (j, cij) in row.iter().enumerate().skip(i) {
                let sum: Vec<Scalar> = cij.iter().zip(&constants[j][i]).map(|(a, b)| a + b).collect();
                if !is_zero_vector(&sum) {
                    return Err(LieError::NotAntisymmetric(i, j));
                }
            }
        }
        let model = LieModel { dim: n, constants };
        if let Some((i, j, k, defect)) = model.first_jacobi_failure() {
            return Err(LieError::Jacobi {
                i,
                j,
                k,
                defect: render_vector(&defect, "e"),
            });
        }
        Ok(model)
    }

    pub fn abelian(n: usize) -> Self {
        LieModel {
            dim: n,
            constants: vec![vec![zero_vector(n); n]; n],
        }
    }

    /// Builds from the nonzero brackets `[e_i, e_j] = v` (zero-based, `i ≠ j`);
    /// the antisymmetric partner is filled in.
    pub fn from_brackets(n: usize, brackets: &[(usize, usize, Vector)]) -> Result<Self, LieError> {
        let mut c = vec![vec![zero_vector(n); n]; n];
        for (i, j, v) in brackets {
            if *i >= n || *j >= n || v.len() != n {
                return Err(LieError::Shape(n));
            }
            c[*i][*j] = v.clone();
            c[*j][*i] = v.iter().map(|x| -x).collect();
        }
        LieModel::new(c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &[Vec<Vector>] {
        &self.constants
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().flatten().all(|v| is_zero_vector(v))
    }

    /// `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.constants[i][j]
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vector)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if !is_zero_vector(&self.constants[i][j]) {
                    out.push((i, j, self.constants[i][j].clone()));
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let c = xi * yj;
                for (k, ck) in self.constants[i][j].iter().enumerate() {
                    if !ck.is_zero() {
                        out[k] += &(&c * ck);
                    }
                }
            }
        }
        out
    }

    /// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` on basis vectors.
    pub fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> Vector {
        let e = |a| unit_vector(self.dim, a);
        let (x, y, z) = (e(i), e(j), e(k));
        let a = self.bracket(&x, &self.bracket(&y, &z));
        let b = self.bracket(&y, &self.bracket(&z, &x));
        let c = self.bracket(&z, &self.bracket(&x, &y));
        a.iter().zip(&b).zip(&c).map(|((p, q), r)| &(p + q) + r).collect()
    }

    fn first_jacobi_failure(&self) -> Option<(usize, usize, usize, Vector)> {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let d = self.jacobi_defect(i, j, k);
                    if !is_zero_vector(&d) {
                        return Some((i, j, k, d));
                    }
                }
            }
        }
        None
    }

    /// `dξ_k`.
    pub fn d_generator(&self, k: usize) -> Form {
        let mut f = Form::zero(self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let c = &self.constants[i][j][k];
                if !c.is_zero() {
                    f.add_term((1 << i) | (1 << j), &-c);
                }
            }
        }
        f
    }

    /// The Chevalley–Eilenberg differential.
    pub fn d(&self, a: &Form) -> Result<Form, LieError> {
        if a.dim() != self.dim {
            return Err(LieError::DimensionMismatch(a.dim(), self.dim));
        }
        let gens: Vec<Form> = (0..self.dim).map(|k| self.d_generator(k)).collect();
        let mut out = Form::zero(self.dim);
        for (mask, c) in a.terms() {
            out = out.add(&self.d_monomial(mask, &gens).scale(c)).expect("same dimension");
        }
        Ok(out)
    }

    fn d_monomial(&self, mask: u32, gens: &[Form]) -> Form {
        let n = self.dim;
        let idx: Vec<usize> = (0..n).filter(|&b| mask & (1 << b) != 0).collect();
        let mut out = Form::zero(n);
        for (pos, &k) in idx.iter().enumerate() {
            if gens[k].is_zero() {
                continue;
            }
            let prefix = Form::basis(n, &idx[..pos]);
            let suffix = Form::basis(n, &idx[pos + 1..]);
            let term = prefix.wedge(&gens[k]).and_then(|t| t.wedge(&suffix)).expect("same dimension");
            let term = if pos % 2 == 1 { term.neg() } else { term };
            out = out.add(&term).expect("same dimension");
        }
        out
    }

    /// Matrix of `d` on the full form space (mask-ordered coordinates).
    pub fn d_matrix(&self) -> Matrix {
        let size = 1usize << self.dim;
        let gens: Vec<Form> = (0..self.dim).map(|k| self.d_generator(k)).collect();
        let mut m = Matrix::zeros(size, size);
        for col in 0..size as u32 {
            for (mask, c) in self.d_monomial(col, &gens).terms() {
                m[(mask as usize, col as usize)] = c.clone();
            }
        }
        m
    }

    /// The full CE complex.
    pub fn ce_complex(&self) -> GradedComplex {
        let n = self.dim;
        let pieces = (0..=n)
            .map(|k| Subspace::coordinate(1 << n, masks_of_degree(n, k).into_iter().map(|m| m as usize)))
            .collect();
        GradedComplex {
            n,
            pieces,
            d: self.d_matrix(),
        }
    }
}

/// Graded pieces `Ω^0..Ω^n` inside the full form space of an
/// `n`-dimensional algebra, with `d` given on the whole space.
#[derive(Clone, Debug)]
pub struct GradedComplex {
    pub n: usize,
    pub pieces: Vec<Subspace>,
    pub d: Matrix,
}

impl GradedComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(Subspace::dim).collect()
    }

    /// Checks `d(Ω^k) ⊆ Ω^{k+1}` and `d² = 0` on every piece.
    pub fn is_closed(&self) -> bool {
        self.pieces.iter().enumerate().all(|(k, p)| {
            let next = self.pieces.get(k + 1).cloned().unwrap_or_else(|| Subspace::zero(p.ambient()));
            p.basis().iter().all(|v| {
                let dv = self.d.apply(v);
                next.contains_vector(&dv) && is_zero_vector(&self.d.apply(&dv))
            })
        })
    }
}

/// A Lie algebra `g` with a leaf subalgebra `F` and optionally a surjection
/// `g → h` whose kernel is `F`.
#[derive(Clone, Debug)]
pub struct FoliatedModel {
    pub g: LieModel,
    pub leaves: Subspace,
    pub quotient: Option<Matrix>,
}

impl FoliatedModel {
    pub fn new(g: LieModel, leaves: Subspace, quotient: Option<Matrix>) -> Result<Self, LieError> {
        let n = g.dim();
        if leaves.ambient() != n {
            return Err(LieError::DimensionMismatch(leaves.ambient(), n));
        }
        let basis = leaves.basis();
        for (a, x) in basis.iter().enumerate() {
            for (b, y) in basis.iter().enumerate().skip(a + 1) {
                if !leaves.contains_vector(&g.bracket(x, y)) {
                    return Err(LieError::NotSubalgebra(a, b));
                }
            }
        }
        if let Some(q) = &quotient {
            if q.cols() != n {
                return Err(LieError::QuotientShape {
                    expected: n,
                    got: q.cols(),
                });
            }
            if q.kernel() != leaves {
                return Err(LieError::KernelMismatch);
            }
        }
        Ok(FoliatedModel { g, leaves, quotient })
    }

    /// Forms `α` with `ι_X α = ι_X dα = 0` for every leaf vector `X`.
    pub fn basic_subcomplex(&self) -> GradedComplex {
        let n = self.g.dim();
        let size = 1usize << n;
        let d = self.g.d_matrix();
        let mut constraint_rows: Vec<Vector> = Vec::new();
        for x in self.leaves.basis() {
            let c = contraction_matrix(x);
            constraint_rows.extend(c.row_vectors().into_iter().filter(|r| !is_zero_vector(r)));
            let cd = &c * &d;
            constraint_rows.extend(cd.row_vectors().into_iter().filter(|r| !is_zero_vector(r)));
        }
        let pieces = (0..=n)
            .map(|k| {
                let masks = masks_of_degree(n, k);
                let restricted: Vec<Vector> = constraint_rows
                    .iter()
                    .map(|r| masks.iter().map(|&m| r[m as usize].clone()).collect::<Vector>())
                    .filter(|r| !is_zero_vector(r))
                    .collect();
                let local = if restricted.is_empty() {
                    Subspace::full(masks.len())
                } else {
                    Matrix::from_rows(restricted).expect("uniform rows").kernel()
                };
                let embedded = local
                    .basis()
                    .iter()
                    .map(|v| {
                        let mut full = zero_vector(size);
                        for (c, &m) in v.iter().zip(&masks) {
                            full[m as usize] = c.clone();
                        }
                        full
                    })
                    .collect();
                Subspace::span(size, embedded)
            })
            .collect();
        GradedComplex { n, pieces, d }
    }

    /// The quotient algebra `h = g/F` and the comparison of `Λh*` with the
    /// basic subcomplex.
    pub fn transverse_reduction(&self) -> Result<(LieModel, ReductionReport), LieError> {
        let n = self.g.dim();
        let q = self.quotient.as_ref().ok_or(LieError::KernelMismatch)?;
        for generator in 0..n {
            for (leaf, f) in self.leaves.basis().iter().enumerate() {
                let w = self.g.bracket(&unit_vector(n, generator), f);
                if !self.leaves.contains_vector(&w) {
                    return Err(LieError::NotIdeal {
                        generator,
                        leaf,
                        witness: render_vector(&w, "e"),
                    });
                }
            }
        }
        let m = q.rows();
        let section = right_inverse(q).ok_or(LieError::KernelMismatch)?;
        let lifts: Vec<Vector> = (0..m).map(|a| section.column(a)).collect();
        let constants = (0..m)
            .map(|a| (0..m).map(|b| q.apply(&self.g.bracket(&lifts[a], &lifts[b]))).collect())
            .collect();
        let h = LieModel::new(constants)?;
        let report = ReductionReport::compute(self, &h, q);
        Ok((h, report))
    }
}

/// A right inverse of a full-row-rank matrix.
pub fn right_inverse(q: &Matrix) -> Option<Matrix> {
    let qt = q.transpose();
    let gram = q * &qt;
    gram.inverse().ok().map(|g| &qt * &g)
}

/// Matrix of the pullback `Λh* → Λg*` along `q: g → h`.
pub fn pullback_matrix(q: &Matrix) -> Matrix {
    let (m, n) = (q.rows(), q.cols());
    let gens: Vec<Form> = (0..m).map(|a| Form::covector(q.row(a))).collect();
    let mut out = Matrix::zeros(1 << n, 1 << m);
    for col in 0..(1u32 << m) {
        let mut f = Form::one(n);
        for (a, g) in gens.iter().enumerate() {
            if col & (1 << a) != 0 {
                f = f.wedge(g).expect("same dimension");
            }
        }
        for (mask, c) in f.terms() {
            out[(mask as usize, col as usize)] = c.clone();
        }
    }
    out
}

/// Comparison of the quotient CE complex with the basic subcomplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub basic_dims: Vec<usize>,
    pub quotient_dims: Vec<usize>,
    /// The pullback is injective and onto the basic forms in every degree.
    pub isomorphic: bool,
    /// `d_g ∘ q* = q* ∘ d_h`.
    pub commutes_with_d: bool,
}

impl ReductionReport {
    fn compute(fm: &FoliatedModel, h: &LieModel, q: &Matrix) -> Self {
        let basic = fm.basic_subcomplex();
        let pull = pullback_matrix(q);
        let m = h.dim();
        let mut isomorphic = pull.rank() == 1 << m;
        for k in 0..=fm.g.dim() {
            let source = if k <= m {
                Subspace::coordinate(1 << m, masks_of_degree(m, k).into_iter().map(|x| x as usize))
            } else {
                Subspace::zero(1 << m)
            };
            let image = source.image_under(&pull).expect("shapes agree");
            isomorphic &= image == basic.pieces[k];
        }
        let commutes_with_d = &fm.g.d_matrix() * &pull == &pull * &h.d_matrix();
        ReductionReport {
            basic_dims: basic.dims(),
            quotient_dims: (0..=m).map(|k| binomial(m, k)).collect(),
            isomorphic,
            commutes_with_d,
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// A polynomial group law `m(x, a)` on `R^n`; variables `0..n` are `x`,
/// `n..2n` are `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLaw {
    n: usize,
    components: Vec<MPoly>,
}

impl GroupLaw {
    pub fn new(n: usize, components: Vec<MPoly>) -> Result<Self, LieError> {
        if components.len() != n {
            return Err(LieError::LawShape {
                expected: n,
                got: components.len(),
            });
        }
        if components.iter().any(|c| c.nvars() != 2 * n) {
            return Err(LieError::Shape(n));
        }
        let law = GroupLaw { n, components };
        law.check_unital()?;
        Ok(law)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[MPoly] {
        &self.components
    }

    /// The vector addition law `x + a`.
    pub fn abelian(n: usize) -> Self {
        let components = (0..n).map(|k| MPoly::var(2 * n, k).add(&MPoly::var(2 * n, n + k))).collect();
        GroupLaw { n, components }
    }

    fn check_unital(&self) -> Result<(), LieError> {
        let n = self.n;
        let zero_a: Vec<Option<Scalar>> = (0..2 * n).map(|v| (v >= n).then(Scalar::zero)).collect();
        let zero_x: Vec<Option<Scalar>> = (0..2 * n).map(|v| (v < n).then(Scalar::zero)).collect();
        for (k, m) in self.components.iter().enumerate() {
            if m.substitute(&zero_a) != MPoly::var(2 * n, k) {
                return Err(LieError::NotUnital(format!("m{}(x, 0) != x{}", k + 1, k + 1)));
            }
            if m.substitute(&zero_x) != MPoly::var(2 * n, n + k) {
                return Err(LieError::NotUnital(format!("m{}(0, a) != a{}", k + 1, k + 1)));
            }
        }
        Ok(())
    }

    /// Structure constants of the left-invariant fields:
    /// `[e_i, e_j]_k = ∂²m_k/∂x_i∂a_j − ∂²m_k/∂x_j∂a_i` at the identity.
    pub fn lie_algebra(&self) -> Result<LieModel, LieError> {
        let n = self.n;
        let origin = vec![Scalar::zero(); 2 * n];
        let mut c = vec![vec![zero_vector(n); n]; n];
        for (k, m) in self.components.iter().enumerate() {
            for (i, ci) in c.iter_mut().enumerate() {
                for (j, cij) in ci.iter_mut().enumerate() {
                    if i == j {
                        continue;
                    }
                    let xa = m.derivative(i).derivative(n + j).eval(&origin);
                    let ax = m.derivative(j).derivative(n + i).eval(&origin);
                    cij[k] = &xa - &ax;
                }
            }
        }
        LieModel::new(c)
    }

    /// Jacobian of `a ↦ g □ a` at `a = 0`.
    pub fn left_translation_jacobian(&self, g: &[Scalar]) -> Matrix {
        let n = self.n;
        let mut point: Vec<Scalar> = g.to_vec();
        point.extend(vec![Scalar::zero(); n]);
        Matrix::from_fn(n, n, |k, j| self.components[k].derivative(n + j).eval(&point))
    }

    /// `x □ a` at numeric arguments.
    pub fn apply(&self, x: &[Scalar], a: &[Scalar]) -> Vector {
        let mut point = x.to_vec();
        point.extend(a.iter().cloned());
        self.components.iter().map(|m| m.eval(&point)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[i64]) -> Vector {
        entries.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    fn heisenberg3() -> LieModel {
        LieModel::from_brackets(3, &[(0, 1, v(&[0, 0, 1]))]).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(LieModel::new(vec![vec![zero_vector(2); 2]; 2]).is_ok());
        assert!(heisenberg3().jacobi_defect(0, 1, 2).iter().all(Scalar::is_zero));
        let bad = LieModel::from_brackets(3, &[(0, 1, v(&[0, 0, 1])), (1, 2, v(&[1, 0, 0])), (2, 0, v(&[1, 0, 0]))]);
        match bad {
            Err(LieError::Jacobi { i, j, k, defect }) => {
                assert_eq!((i, j, k), (0, 1, 2));
                assert_eq!(defect, "-e3");
            }
            other => panic!("expected a Jacobi failure, got {other:?}"),
        }
    }

    #[test]
    fn antisymmetry_is_checked() {
        let mut c = vec![vec![zero_vector(2); 2]; 2];
        c[0][1] = v(&[1, 0]);
        assert_eq!(LieModel::new(c), Err(LieError::NotAntisymmetric(0, 1)));
    }

    #[test]
    fn ce_differential_examples() {
        let h = heisenberg3();
        assert_eq!(h.d(&Form::generator(3, 2)).unwrap(), Form::basis(3, &[0, 1]).neg());
        assert!(h.d(&Form::generator(3, 0)).unwrap().is_zero());
        assert!(h.d(&Form::basis(3, &[2, 0])).unwrap().is_zero());
        let a = LieModel::abelian(3);
        assert!(a.d_matrix().is_zero());
        let d = h.d_matrix();
        assert!((&d * &d).is_zero());
    }

    #[test]
    fn basic_subcomplex_extremes() {
        let h = heisenberg3();
        let all = FoliatedModel::new(h.clone(), Subspace::zero(3), None).unwrap();
        assert_eq!(all.basic_subcomplex().dims(), vec![1, 3, 3, 1]);
        let none = FoliatedModel::new(h, Subspace::full(3), None).unwrap();
        assert_eq!(none.basic_subcomplex().dims(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn abelian_reduction() {
        let q = Matrix::from_i64(&[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let leaves = Subspace::coordinate(4, [0, 1]);
        let fm = FoliatedModel::new(LieModel::abelian(4), leaves, Some(q)).unwrap();
        let (h, report) = fm.transverse_reduction().unwrap();
        assert!(h.is_abelian());
        assert_eq!(h.dim(), 2);
        assert!(report.isomorphic && report.commutes_with_d);
        assert_eq!(report.basic_dims, vec![1, 2, 1, 0, 0]);
    }

    #[test]
    fn non_ideal_is_rejected() {
        let q = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1]]);
        let fm = FoliatedModel::new(heisenberg3(), Subspace::coordinate(3, [0]), Some(q)).unwrap();
        match fm.transverse_reduction() {
            Err(LieError::NotIdeal { generator, witness, .. }) => {
                assert_eq!(generator, 1);
                assert_eq!(witness, "-e3");
            }
            other => panic!("expected a non-ideal error, got {other:?}"),
        }
    }

    #[test]
    fn non_subalgebra_is_rejected() {
        let leaves = Subspace::coordinate(3, [0, 1]);
        assert!(matches!(
            FoliatedModel::new(heisenberg3(), leaves, None),
            Err(LieError::NotSubalgebra(0, 1))
        ));
    }

    #[test]
    fn group_law_checks() {
        let abelian = GroupLaw::abelian(3);
        assert!(abelian.lie_algebra().unwrap().is_abelian());
        let n = 2;
        let bad = vec![MPoly::var(2 * n, 0), MPoly::var(2 * n, 1).add(&MPoly::var(2 * n, 3))];
        assert!(matches!(GroupLaw::new(n, bad), Err(LieError::NotUnital(_))));
    }

    #[test]
    fn render_vectors() {
        let w = vec![Scalar::zero(), -Scalar::s(), Scalar::one()];
        assert_eq!(render_vector(&w, "e"), "-s*e2 + e3");
        assert_eq!(render_vector(&zero_vector(2), "e"), "0");
    }
}
