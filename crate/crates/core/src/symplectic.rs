//! Transversely symplectic models: `J` from `ω`, the symplectic star, the
//! Lefschetz operators, `d^Λ`, the exponential description of the `U^k`
//! and the Lefschetz maps in cohomology.

use serde::Serialize;
use thiserror::Error;

use crate::canonical::{CanonicalError, Operators, UkDecomposition};
use crate::exterior::{masks_of_degree, wedge_matrix, wedge_sign, Form};
use crate::generalized::{GcsError, GeneralizedStructure};
use crate::homology::{
    cohomology, ddj_lemma, decomposition_in_cohomology, inclusion_quasi_iso, quotient_quasi_iso,
    spectral_sequence, CanonicalDoubleComplex, DdjReport, DecompositionReport, Graded, Grading,
    HomologyError, QuasiIsoReport, SpectralSequence,
};
use crate::lie::LieModel;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplecticError {
    #[error("omega is not a 2-form on {0} generators")]
    NotTwoForm(usize),
    #[error("omega is not closed")]
    NotClosed,
    #[error("omega is degenerate")]
    Degenerate,
    #[error(transparent)]
    Structure(#[from] GcsError),
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error("transport identity fails on basis form {mask}")]
    Transport { mask: u32 },
    #[error("the four conditions disagree: {0:?}")]
    Disagreement([bool; 4]),
    #[error("spectral sequence degenerates only at page {0}")]
    LateDegeneration(usize),
}

#[derive(Clone, Debug)]
pub struct SymplecticModel {
    h: LieModel,
    omega: Form,
    /// `Ω_ij = ω(e_i, e_j)`.
    matrix: Matrix,
}

impl SymplecticModel {
    pub fn new(h: LieModel, omega: Form) -> Result<Self, SymplecticError> {
        let n = h.dim();
        if omega.dim() != n || !(omega.is_zero() || omega.homogeneous_degree() == Some(2)) {
            return Err(SymplecticError::NotTwoForm(n));
        }
        if !h.d(&omega).map_err(|_| SymplecticError::NotTwoForm(n))?.is_zero() {
            return Err(SymplecticError::NotClosed);
        }
        let matrix = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => omega.coeff((1 << i) | (1 << j)),
            std::cmp::Ordering::Greater => -omega.coeff((1 << i) | (1 << j)),
            std::cmp::Ordering::Equal => Scalar::zero(),
        });
        if n % 2 == 1 || matrix.rank() != n {
            return Err(SymplecticError::Degenerate);
        }
        Ok(SymplecticModel { h, omega, matrix })
    }

    pub fn base(&self) -> &LieModel {
        &self.h
    }

    pub fn omega(&self) -> &Form {
        &self.omega
    }

    pub fn q(&self) -> usize {
        self.h.dim() / 2
    }

    /// The matrix of `X ↦ ι_X ω`.
    pub fn flat(&self) -> Matrix {
        self.matrix.transpose()
    }

    pub fn j_matrix(&self) -> Matrix {
        let m = self.flat();
        let m_inv = m.inverse().expect("nondegenerate");
        let n = self.h.dim();
        Matrix::blocks(&Matrix::zeros(n, n), &-&m_inv, &m, &Matrix::zeros(n, n))
    }

    pub fn structure(&self) -> Result<GeneralizedStructure, SymplecticError> {
        Ok(GeneralizedStructure::new(self.h.clone(), self.j_matrix())?)
    }

    /// `Π(ξ_a, ξ_b) = ω(ω⁻¹ξ_a, ω⁻¹ξ_b)`.
    pub fn pairing(&self) -> Matrix {
        let m_inv = self.flat().inverse().expect("nondegenerate");
        &(&m_inv.transpose() * &self.matrix) * &m_inv
    }

    pub fn volume(&self) -> Form {
        let q = self.q();
        let mut v = Form::one(self.h.dim());
        let mut fact = Scalar::one();
        for k in 1..=q {
            v = v.wedge(&self.omega).expect("same dimension");
            fact = &fact * &Scalar::from_int(k as i64);
        }
        v.scale(&fact.inv().expect("nonzero"))
    }

    pub fn operators(&self) -> LefschetzOperators {
        let n = self.h.dim();
        let size = 1usize << n;
        let full = (size - 1) as u32;
        let pi = self.pairing();
        let v0 = self.volume().coeff(full);
        let mut star = Matrix::zeros(size, size);
        for k in 0..=n {
            let masks = masks_of_degree(n, k);
            for &col in &masks {
                let cols: Vec<usize> = indices(col);
                for &row in &masks {
                    let rows = indices(row);
                    let det = Matrix::from_fn(k, k, |a, b| pi[(rows[a], cols[b])].clone()).det();
                    if det.is_zero() {
                        continue;
                    }
                    let comp = full & !row;
                    let sign = crate::scalar::sign(wedge_sign(row, comp).expect("disjoint"));
                    star[(comp as usize, col as usize)] = &(&det * &v0) * &sign;
                }
            }
        }
        let l = wedge_matrix(&self.omega);
        let lambda = &(&star * &l) * &star;
        let d = self.h.d_matrix();
        let d_lambda = &(&d * &lambda) - &(&lambda * &d);
        LefschetzOperators {
            q: self.q(),
            n,
            star,
            l,
            lambda,
            d,
            d_lambda,
        }
    }
}

fn half_i() -> Scalar {
    &Scalar::i() * &Scalar::ratio(1, 2)
}

fn indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

/// `L`, `Λ`, `*`, `d` and `d^Λ` on the full form space.
#[derive(Clone, Debug)]
pub struct LefschetzOperators {
    q: usize,
    n: usize,
    pub star: Matrix,
    pub l: Matrix,
    pub lambda: Matrix,
    pub d: Matrix,
    pub d_lambda: Matrix,
}

impl LefschetzOperators {
    /// `(*)² = 1` and `[L, Λ] = (k − q)` on `k`-forms.
    pub fn sl2_holds(&self) -> bool {
        let size = 1usize << self.n;
        let diag: Vec<Scalar> = (0..size)
            .map(|m| Scalar::from_int((m as u32).count_ones() as i64 - self.q as i64))
            .collect();
        let comm = &(&self.l * &self.lambda) - &(&self.lambda * &self.l);
        (&self.star * &self.star) == Matrix::identity(size) && comm == Matrix::diagonal(&diag)
    }

    pub fn apply_star(&self, a: &Form) -> Form {
        Form::from_vector(self.n, &self.star.apply(&a.to_vector()))
    }

    /// `E = e^{iω} e^{iΛ/2}`.
    pub fn transport(&self) -> Matrix {
        let a = self.l.scale(&Scalar::i()).exp_nilpotent();
        let b = self.lambda.scale(&half_i()).exp_nilpotent();
        &a * &b
    }

    /// `E(Ω^j)`, which is `U^{q−j}`.
    pub fn uk(&self, k: i64) -> Subspace {
        let size = 1usize << self.n;
        let j = self.q as i64 - k;
        if !(0..=self.n as i64).contains(&j) {
            return Subspace::zero(size);
        }
        let e = self.transport();
        Subspace::span(
            size,
            masks_of_degree(self.n, j as usize).into_iter().map(|m| e.column(m as usize)).collect(),
        )
    }

    /// Checks `∂̄E = E d` and `∂E = (i/2) E d^Λ` column by column.
    pub fn check_transport(&self, ops: &Operators) -> Result<(), SymplecticError> {
        let e = self.transport();
        let lhs_bar = &ops.delbar * &e;
        let rhs_bar = &e * &self.d;
        let lhs = &ops.del * &e;
        let rhs = (&e * &self.d_lambda).scale(&half_i());
        for (a, b) in [(&lhs_bar, &rhs_bar), (&lhs, &rhs)] {
            if let Some((_, col)) = a.first_difference(b) {
                return Err(SymplecticError::Transport { mask: col as u32 });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LefschetzMap {
    pub k: usize,
    pub source: usize,
    pub target: usize,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
}

/// `[α] ↦ [ω^k ∧ α]` from `H^{q−k}` to `H^{q+k}` for `k = 1..q`.
pub fn lefschetz_maps(sm: &SymplecticModel) -> Result<Vec<LefschetzMap>, SymplecticError> {
    let n = sm.h.dim();
    let q = sm.q();
    let d = sm.h.d_matrix();
    let groups = cohomology(&Graded::forms(n, Grading::Degree), &d, 1, "d")?;
    let mut power = Form::one(n);
    let mut out = Vec::new();
    for k in 1..=q {
        power = power.wedge(&sm.omega).expect("same dimension");
        let lk = wedge_matrix(&power);
        let src = &groups[q - k];
        let tgt = &groups[q + k];
        let images: Vec<_> = src.representatives.iter().map(|r| lk.apply(r)).collect();
        let hit = tgt
            .boundaries
            .sum(&Subspace::span(1 << n, images))
            .map_err(HomologyError::from)?;
        let rank = hit.dim() - tgt.boundaries.dim();
        out.push(LefschetzMap {
            k,
            source: src.dim(),
            target: tgt.dim(),
            rank,
            injective: rank == src.dim(),
            surjective: rank == tgt.dim(),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct SymplecticBattery {
    pub dd_lambda: DdjReport,
    pub inclusion: QuasiIsoReport,
    pub decomposition: DecompositionReport,
    pub quotient: QuasiIsoReport,
    /// `[ddΛ lemma, inclusion, decomposition, quotient]`.
    pub verdicts: [bool; 4],
    pub spectral: SpectralSequence,
    pub lefschetz: Vec<LefschetzMap>,
    pub d_lambda_is_dj: bool,
}

impl SymplecticBattery {
    pub fn verdict(&self) -> bool {
        self.verdicts[0]
    }

    pub fn lefschetz_surjective(&self) -> bool {
        self.lefschetz.iter().all(|m| m.surjective)
    }
}

/// Runs the four symplectic conditions, the Lefschetz maps and the
/// degeneration check. Disagreement and late degeneration are errors.
pub fn symplectic_battery(sm: &SymplecticModel) -> Result<SymplecticBattery, SymplecticError> {
    let lo = sm.operators();
    let gs = sm.structure()?;
    let dec = UkDecomposition::new(&gs)?;
    let ops = dec.split(&lo.d)?;
    lo.check_transport(&ops)?;
    let n = sm.h.dim();
    let space = Graded::forms(n, Grading::Degree);
    let dd_lambda = ddj_lemma(&lo.d, &lo.d_lambda)?;
    let inclusion = inclusion_quasi_iso(&space, &lo.d, 1, &lo.d_lambda, -1)?;
    let decomposition = decomposition_in_cohomology(&dec, &lo.d)?;
    let quotient = quotient_quasi_iso(&space, &lo.d, 1, &lo.d_lambda, -1)?;
    let verdicts = [dd_lambda.holds, inclusion.holds, decomposition.holds, quotient.holds];
    if verdicts.iter().any(|v| *v != verdicts[0]) || dd_lambda.left != dd_lambda.right {
        return Err(SymplecticError::Disagreement(verdicts));
    }
    let spectral = spectral_sequence(&CanonicalDoubleComplex::new(&dec, &ops))?;
    if spectral.degenerates_at != 1 {
        return Err(SymplecticError::LateDegeneration(spectral.degenerates_at));
    }
    Ok(SymplecticBattery {
        d_lambda_is_dj: lo.d_lambda == ops.d_j,
        dd_lambda,
        inclusion,
        decomposition,
        quotient,
        verdicts,
        spectral,
        lefschetz: lefschetz_maps(sm)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    fn standard2() -> SymplecticModel {
        SymplecticModel::new(LieModel::abelian(2), Form::basis(2, &[0, 1])).unwrap()
    }

    #[test]
    fn star_in_dimension_two() {
        let lo = standard2().operators();
        let omega = Form::basis(2, &[0, 1]);
        assert_eq!(lo.apply_star(&Form::one(2)), omega);
        assert_eq!(lo.apply_star(&omega), Form::one(2));
        assert_eq!(lo.apply_star(&Form::generator(2, 0)), Form::generator(2, 0));
        assert_eq!(lo.apply_star(&Form::generator(2, 1)), Form::generator(2, 1));
        assert!(lo.sl2_holds());
        let lam = Form::from_vector(2, &lo.lambda.apply(&omega.to_vector()));
        assert_eq!(lam, Form::one(2));
    }

    #[test]
    fn j_from_omega_is_type_zero() {
        let gs = standard2().structure().unwrap();
        assert_eq!(gs.structure_type(), 0);
    }

    #[test]
    fn uk_matches_clifford_construction() {
        let sm = standard2();
        let lo = sm.operators();
        let dec = UkDecomposition::new(&sm.structure().unwrap()).unwrap();
        for k in -1..=1 {
            assert_eq!(&lo.uk(k), dec.piece(k).unwrap());
        }
    }

    #[test]
    fn degenerate_and_open_forms_are_rejected() {
        assert!(matches!(
            SymplecticModel::new(LieModel::abelian(4), Form::basis(4, &[0, 1])),
            Err(SymplecticError::Degenerate)
        ));
        let h = LieModel::from_brackets(4, &[(0, 1, unit_vector(4, 2))]).unwrap();
        let omega = Form::basis(4, &[0, 1]).add(&Form::basis(4, &[2, 3])).unwrap();
        assert!(matches!(SymplecticModel::new(h, omega), Err(SymplecticError::NotClosed)));
    }
}
