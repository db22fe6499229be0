//! Validated models assembled from a [`ModelFile`].

use thiserror::Error;

use crate::generalized::{complex_lift, GcsError, GeneralizedStructure};
use crate::lie::{right_inverse, FoliatedModel, GroupLaw, LieError, LieModel, ReductionReport};
use crate::linalg::{Matrix, Subspace};
use crate::model_file::{Algebra, ModelFile, ParseError, StructureSpec};
use crate::scalar::Scalar;
use crate::symplectic::{SymplecticError, SymplecticModel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Structure(#[from] GcsError),
    #[error(transparent)]
    Symplectic(#[from] SymplecticError),
    #[error("the basic subcomplex is not isomorphic to the transverse complex")]
    Reduction,
    #[error("H_s generator {generator} does not preserve J")]
    NotInvariant { generator: String },
}

#[derive(Clone, Debug)]
pub struct Structure {
    pub spec: StructureSpec,
    /// The structure on the transverse model, after any B-field.
    pub gs: GeneralizedStructure,
    /// Present for `[omega]` models without a B-field.
    pub symplectic: Option<SymplecticModel>,
    /// Validation of the same matrix on the abelian model of the same
    /// dimension, i.e. in a coordinate frame.
    pub coordinate_frame: Result<usize, GcsError>,
}

#[derive(Clone, Debug)]
pub struct Model {
    pub source: ModelFile,
    pub g: LieModel,
    pub group_law: Option<GroupLaw>,
    pub foliated: Option<FoliatedModel>,
    pub reduction: Option<ReductionReport>,
    /// The transverse model: `g/F` when a quotient is given, `g` when there
    /// is no foliation, absent otherwise.
    pub h: Option<LieModel>,
    pub structure: Option<Structure>,
}

impl Model {
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        Model::build(&ModelFile::parse(text)?)
    }

    pub fn build(mf: &ModelFile) -> Result<Self, ModelError> {
        let n = mf.dimension;
        let (g, group_law) = match &mf.algebra {
            Algebra::Brackets(list) => (LieModel::from_brackets(n, list)?, None),
            Algebra::GroupLaw(comps) => {
                let law = GroupLaw::new(n, comps.clone())?;
                (law.lie_algebra()?, Some(law))
            }
        };
        let leaves = match (&mf.foliation, &mf.quotient) {
            (Some(vs), _) => Some(Subspace::span(n, vs.clone())),
            (None, Some(q)) => Some(q.kernel()),
            (None, None) => None,
        };
        let (foliated, reduction, h) = match leaves {
            None => (None, None, Some(g.clone())),
            Some(leaves) => {
                let fm = FoliatedModel::new(g.clone(), leaves, mf.quotient.clone())?;
                if fm.quotient.is_some() {
                    let (h, rep) = fm.transverse_reduction()?;
                    if !rep.isomorphic || !rep.commutes_with_d {
                        return Err(ModelError::Reduction);
                    }
                    (Some(fm), Some(rep), Some(h))
                } else {
                    (Some(fm), None, None)
                }
            }
        };
        let structure = match (&mf.structure, &h) {
            (Some(spec), Some(h)) => Some(build_structure(spec, mf.bfield.as_ref(), h)?),
            _ => None,
        };
        Ok(Model {
            source: mf.clone(),
            g,
            group_law,
            foliated,
            reduction,
            h,
            structure,
        })
    }

    pub fn name(&self) -> &str {
        &self.source.name
    }
}

fn build_structure(
    spec: &StructureSpec,
    bfield: Option<&crate::exterior::Form>,
    h: &LieModel,
) -> Result<Structure, ModelError> {
    let (mut gs, symplectic) = match spec {
        StructureSpec::Omega(w) => {
            let sm = SymplecticModel::new(h.clone(), w.clone())?;
            (sm.structure()?, Some(sm))
        }
        StructureSpec::J(j) => (GeneralizedStructure::new(h.clone(), j.clone())?, None),
        StructureSpec::Complex(i) => (GeneralizedStructure::new(h.clone(), complex_lift(i))?, None),
    };
    let symplectic = match bfield {
        Some(b) => {
            gs = gs.b_field_transform(b)?;
            None
        }
        None => symplectic,
    };
    let coordinate_frame =
        GeneralizedStructure::new(LieModel::abelian(h.dim()), gs.matrix().clone()).map(|c| c.structure_type());
    Ok(Structure {
        spec: spec.clone(),
        gs,
        symplectic,
        coordinate_frame,
    })
}

/// One left translation checked against `J`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct GeneratorCheck {
    pub generator: String,
    /// Left translation is the identity on the transverse model.
    pub trivial: bool,
    pub preserves_j: bool,
}

/// For a group-law model with a quotient and a structure: the linear parts
/// of left translation by `c·e_k`, `c ∈ {1, s, i}`, pushed to the transverse
/// model and applied to `J` as `diag(A, A^{−T})`.
pub fn translation_invariance(model: &Model) -> Option<Result<Vec<GeneratorCheck>, ModelError>> {
    let law = model.group_law.as_ref()?;
    let q = model.source.quotient.as_ref()?;
    let j = model.structure.as_ref()?.gs.matrix();
    Some(check_generators(law, q, j))
}

fn check_generators(law: &GroupLaw, q: &Matrix, j: &Matrix) -> Result<Vec<GeneratorCheck>, ModelError> {
    let n = law.dim();
    let m = q.rows();
    let section = right_inverse(q).ok_or(ModelError::Reduction)?;
    let mut out = Vec::new();
    for k in 0..n {
        for (label, c) in [("1", Scalar::one()), ("s", Scalar::s()), ("i", Scalar::i())] {
            let mut g = vec![Scalar::zero(); n];
            g[k] = c;
            let jac = law.left_translation_jacobian(&g);
            let a = &(q * &jac) * &section;
            let generator = format!("{label}*e{}", k + 1);
            if q * &jac != &a * q {
                return Err(ModelError::NotInvariant { generator });
            }
            let a_inv_t = a.inverse().map_err(|_| ModelError::NotInvariant { generator: generator.clone() })?.transpose();
            let big = Matrix::block_diag(&a, &a_inv_t);
            let big_inv = big.inverse().expect("block inverse exists");
            let conj = &(&big * j) * &big_inv;
            out.push(GeneratorCheck {
                generator,
                trivial: a == Matrix::identity(m),
                preserves_j: &conj == j,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bfield_drops_the_symplectic_view() {
        let text = "model b\ndimension 2\n[brackets]\n[omega]\nx1*x2\n[bfield]\n3*x1*x2\n";
        let m = Model::parse(text).unwrap();
        let s = m.structure.unwrap();
        assert!(s.symplectic.is_none());
        assert_eq!(s.gs.structure_type(), 0);
        assert_eq!(s.coordinate_frame, Ok(0));
    }

    #[test]
    fn foliation_without_quotient_has_no_transverse_model() {
        let text = "model f\ndimension 3\n[brackets]\ne1 e2 -> e3\n[foliation]\ne3\n";
        let m = Model::parse(text).unwrap();
        assert!(m.h.is_none() && m.foliated.is_some());
    }

    #[test]
    fn jacobi_failure_propagates() {
        let text = "model bad\ndimension 3\n[brackets]\ne1 e2 -> e3\ne2 e3 -> e1\ne3 e1 -> e1\n";
        assert!(matches!(Model::parse(text), Err(ModelError::Lie(LieError::Jacobi { .. }))));
    }
}
