//! Cohomology of finite graded complexes, the `ddJ` lemma, the two
//! quasi-isomorphism tests, the spectral sequence of a filtered complex and
//! the battery that compares the equivalent formulations.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::canonical::{CanonicalError, Operators, UkDecomposition};
use crate::exterior::masks_of_degree;
use crate::linalg::{LinalgError, Matrix, Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Canonical(#[from] CanonicalError),
    #[error("{operator} does not respect the grading on piece {piece}")]
    NotHomogeneous { operator: &'static str, piece: usize },
    #[error("{0} does not square to zero")]
    NotDifferential(&'static str),
    #[error("spectral sequence did not stabilise within {0} pages")]
    NoConvergence(usize),
    #[error("double complex piece ({p},{q}) is not mapped where expected")]
    NotBigraded { p: i64, q: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    /// Even and odd forms.
    Parity,
    /// Form degree.
    Degree,
}

/// A direct sum decomposition of the full form space on `n` generators.
#[derive(Clone, Debug)]
pub struct Graded {
    kind: Grading,
    pieces: Vec<Subspace>,
}

impl Graded {
    pub fn forms(n: usize, kind: Grading) -> Self {
        let size = 1usize << n;
        let pieces = match kind {
            Grading::Parity => (0..2)
                .map(|p| {
                    Subspace::coordinate(size, (0..size).filter(|m| (m.count_ones() as usize) % 2 == p))
                })
                .collect(),
            Grading::Degree => (0..=n)
                .map(|k| Subspace::coordinate(size, masks_of_degree(n, k).into_iter().map(|m| m as usize)))
                .collect(),
        };
        Graded { kind, pieces }
    }

    /// Arbitrary pieces, e.g. the degrees of a subcomplex.
    pub fn from_pieces(kind: Grading, pieces: Vec<Subspace>) -> Self {
        assert!(!pieces.is_empty(), "a grading needs at least one piece");
        Graded { kind, pieces }
    }

    pub fn kind(&self) -> Grading {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn piece(&self, a: usize) -> &Subspace {
        &self.pieces[a]
    }

    pub fn size(&self) -> usize {
        self.pieces[0].ambient()
    }

    /// The piece `a + shift`, if any.
    pub fn shifted(&self, a: usize, shift: i64) -> Option<usize> {
        match self.kind {
            Grading::Parity => Some((a as i64 + shift).rem_euclid(2) as usize),
            Grading::Degree => {
                let b = a as i64 + shift;
                (0..self.len() as i64).contains(&b).then_some(b as usize)
            }
        }
    }

    fn image_of_previous(&self, op: &Matrix, a: usize, shift: i64) -> Result<Subspace, HomologyError> {
        Ok(match self.shifted(a, -shift) {
            Some(b) => self.pieces[b].image_under(op)?,
            None => Subspace::zero(self.size()),
        })
    }

    /// Checks that `op` maps each piece into the piece `shift` above it.
    pub fn check_homogeneous(&self, op: &Matrix, shift: i64, name: &'static str) -> Result<(), HomologyError> {
        for a in 0..self.len() {
            let image = self.pieces[a].image_under(op)?;
            let ok = match self.shifted(a, shift) {
                Some(b) => self.pieces[b].contains(&image)?,
                None => image.is_zero(),
            };
            if !ok {
                return Err(HomologyError::NotHomogeneous { operator: name, piece: a });
            }
        }
        Ok(())
    }
}

fn extend_basis(base: &Subspace, candidates: &Subspace) -> Result<Vec<Vector>, HomologyError> {
    let mut acc = base.clone();
    let mut out = Vec::new();
    for v in candidates.basis() {
        if !acc.contains_vector(v) {
            acc = acc.sum(&Subspace::span(acc.ambient(), vec![v.clone()]))?;
            out.push(v.clone());
        }
    }
    Ok(out)
}

/// One graded piece of a cohomology.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    pub cycles: Subspace,
    pub boundaries: Subspace,
    /// Cycles whose classes form a basis.
    pub representatives: Vec<Vector>,
}

impl CohomologyGroup {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}

/// Cohomology of `(space, d)` where `d` raises the grading by `shift`.
pub fn cohomology(space: &Graded, d: &Matrix, shift: i64, name: &'static str) -> Result<Vec<CohomologyGroup>, HomologyError> {
    if !(d * d).is_zero() {
        return Err(HomologyError::NotDifferential(name));
    }
    space.check_homogeneous(d, shift, name)?;
    let kernel = d.kernel();
    (0..space.len())
        .map(|a| {
            let cycles = kernel.intersect(space.piece(a))?;
            let boundaries = space.image_of_previous(d, a, shift)?;
            let representatives = extend_basis(&boundaries, &cycles)?;
            Ok(CohomologyGroup {
                cycles,
                boundaries,
                representatives,
            })
        })
        .collect()
}

/// Total dimension of `ker d / im d` on the whole space.
pub fn total_cohomology_dim(d: &Matrix) -> usize {
    let (k, i) = d.kernel_image();
    k.dim() - i.dim()
}

#[derive(Clone, Debug, Serialize)]
pub struct DdjReport {
    pub image_ddj: usize,
    pub image_d_cap_kernel_dj: usize,
    pub kernel_d_cap_image_dj: usize,
    /// `im(d dJ) = im d ∩ ker dJ`.
    pub left: bool,
    /// `im(d dJ) = ker d ∩ im dJ`.
    pub right: bool,
    pub holds: bool,
    #[serde(skip)]
    pub witness: Option<Vector>,
}

/// The `ddJ` lemma for two anticommuting differentials on the same space.
pub fn ddj_lemma(d: &Matrix, dj: &Matrix) -> Result<DdjReport, HomologyError> {
    let (kd, id) = d.kernel_image();
    let (kj, ij) = dj.kernel_image();
    let a = (d * dj).image();
    let b = id.intersect(&kj)?;
    let c = kd.intersect(&ij)?;
    let left = a == b;
    let right = a == c;
    let witness = match b.witness_outside(&a)? {
        Some(w) => Some(w),
        None => c.witness_outside(&a)?,
    };
    Ok(DdjReport {
        image_ddj: a.dim(),
        image_d_cap_kernel_dj: b.dim(),
        kernel_d_cap_image_dj: c.dim(),
        left,
        right,
        holds: left && right,
        witness,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PieceMap {
    pub piece: usize,
    pub source: usize,
    pub target: usize,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiIsoReport {
    pub grading: Grading,
    pub pieces: Vec<PieceMap>,
    pub holds: bool,
    /// First failing piece and a vector exhibiting the failure.
    #[serde(skip)]
    pub witness: Option<(usize, Vector)>,
}

fn finish(grading: Grading, pieces: Vec<PieceMap>, witness: Option<(usize, Vector)>) -> QuasiIsoReport {
    let holds = pieces.iter().all(|p| p.injective && p.surjective);
    QuasiIsoReport {
        grading,
        pieces,
        holds,
        witness,
    }
}

/// Is the inclusion `(ker dJ, d) → (Λ, d)` a quasi-isomorphism?
pub fn inclusion_quasi_iso(
    space: &Graded,
    d: &Matrix,
    d_shift: i64,
    dj: &Matrix,
    dj_shift: i64,
) -> Result<QuasiIsoReport, HomologyError> {
    space.check_homogeneous(d, d_shift, "d")?;
    space.check_homogeneous(dj, dj_shift, "dJ")?;
    let kd = d.kernel();
    let kj = dj.kernel();
    let mut pieces = Vec::new();
    let mut witness = None;
    for a in 0..space.len() {
        let source_space = kj.intersect(space.piece(a))?;
        let z_src = source_space.intersect(&kd)?;
        let b_src = match space.shifted(a, -d_shift) {
            Some(b) => kj.intersect(space.piece(b))?.image_under(d)?,
            None => Subspace::zero(space.size()),
        };
        let z = kd.intersect(space.piece(a))?;
        let b = space.image_of_previous(d, a, d_shift)?;
        let killed = z_src.intersect(&b)?;
        let hit = z_src.sum(&b)?;
        let injective = killed.dim() == b_src.dim();
        let surjective = hit == z;
        if witness.is_none() {
            if let Some(w) = killed.witness_outside(&b_src)? {
                witness = Some((a, w));
            } else if let Some(w) = z.witness_outside(&hit)? {
                witness = Some((a, w));
            }
        }
        pieces.push(PieceMap {
            piece: a,
            source: z_src.dim() - b_src.dim(),
            target: z.dim() - b.dim(),
            rank: hit.dim() - b.dim(),
            injective,
            surjective,
        });
    }
    Ok(finish(space.kind(), pieces, witness))
}

/// Is the projection `(Λ, dJ) → (Λ / im d, dJ)` a quasi-isomorphism?
pub fn quotient_quasi_iso(
    space: &Graded,
    d: &Matrix,
    d_shift: i64,
    dj: &Matrix,
    dj_shift: i64,
) -> Result<QuasiIsoReport, HomologyError> {
    space.check_homogeneous(d, d_shift, "d")?;
    space.check_homogeneous(dj, dj_shift, "dJ")?;
    let id = d.image();
    let kj = dj.kernel();
    let pulled = id.preimage_under(dj)?;
    let mut pieces = Vec::new();
    let mut witness = None;
    for a in 0..space.len() {
        let piece = space.piece(a);
        let z = kj.intersect(piece)?;
        let b = space.image_of_previous(dj, a, dj_shift)?;
        let z_quot = pulled.intersect(piece)?;
        let b_quot = b.sum(&id.intersect(piece)?)?;
        let killed = z.intersect(&b_quot)?;
        let hit = z.sum(&b_quot)?;
        let injective = killed.dim() == b.dim();
        let surjective = hit == z_quot;
        if witness.is_none() {
            if let Some(w) = killed.witness_outside(&b)? {
                witness = Some((a, w));
            } else if let Some(w) = z_quot.witness_outside(&hit)? {
                witness = Some((a, w));
            }
        }
        pieces.push(PieceMap {
            piece: a,
            source: z.dim() - b.dim(),
            target: z_quot.dim() - b_quot.dim(),
            rank: hit.dim() - b_quot.dim(),
            injective,
            surjective,
        });
    }
    Ok(finish(space.kind(), pieces, witness))
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    /// `(k, dim of the image of ker d ∩ U^k in H)`.
    pub pieces: Vec<(i64, usize)>,
    pub cohomology: usize,
    pub spanned: usize,
    pub holds: bool,
}

/// Does `H(d)` split as the direct sum of the classes of `d`-closed
/// elements of the `U^k`?
pub fn decomposition_in_cohomology(dec: &UkDecomposition, d: &Matrix) -> Result<DecompositionReport, HomologyError> {
    let (kd, id) = d.kernel_image();
    let q = dec.q() as i64;
    let mut pieces = Vec::new();
    let mut span = id.clone();
    for k in -q..=q {
        let closed = kd.intersect(dec.piece(k)?)?;
        pieces.push((k, closed.sum(&id)?.dim() - id.dim()));
        span = span.sum(&closed)?;
    }
    let cohomology = kd.dim() - id.dim();
    let spanned = span.dim() - id.dim();
    let total: usize = pieces.iter().map(|p| p.1).sum();
    Ok(DecompositionReport {
        pieces,
        cohomology,
        spanned,
        holds: spanned == cohomology && total == cohomology,
    })
}

/// A finite-dimensional complex with a decreasing filtration of each
/// total degree.
pub trait FilteredComplex {
    fn size(&self) -> usize;
    fn differential(&self) -> &Matrix;
    fn total(&self, n: i64) -> Subspace;
    fn filtration(&self, n: i64, p: i64) -> Subspace;
    /// Positions `(label, n, p)` reported on each page.
    fn positions(&self) -> Vec<(String, i64, i64)>;
    /// Pages after which every differential is known to vanish.
    fn max_page(&self) -> usize;
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralSequence {
    pub labels: Vec<String>,
    /// `pages[r - 1]` holds the dimensions of `E_r`.
    pub pages: Vec<Vec<usize>>,
    pub infinity: Vec<usize>,
    /// Smallest `r ≥ 1` with `E_r = E_∞`.
    pub degenerates_at: usize,
}

impl SpectralSequence {
    pub fn page_total(&self, r: usize) -> usize {
        self.pages[r - 1].iter().sum()
    }

    pub fn infinity_total(&self) -> usize {
        self.infinity.iter().sum()
    }
}

struct Pages<'a, C: FilteredComplex + ?Sized> {
    c: &'a C,
    kernel: Subspace,
}

impl<'a, C: FilteredComplex + ?Sized> Pages<'a, C> {
    fn z(&self, n: i64, p: i64, r: usize) -> Result<Subspace, HomologyError> {
        let f = self.c.filtration(n, p);
        if r == 0 {
            return Ok(f);
        }
        let target = self.c.filtration(n + 1, p + r as i64);
        Ok(f.intersect(&target.preimage_under(self.c.differential())?)?)
    }

    fn page(&self, n: i64, p: i64, r: usize) -> Result<usize, HomologyError> {
        let z = self.z(n, p, r)?;
        let lower = r.saturating_sub(1);
        let from_above = self.z(n, p + 1, lower)?;
        let from_below = self
            .z(n - 1, p - r as i64 + 1, lower)?
            .image_under(self.c.differential())?;
        Ok(z.dim() - from_above.sum(&from_below)?.dim())
    }

    fn infinity(&self, n: i64, p: i64) -> Result<usize, HomologyError> {
        let f = self.c.filtration(n, p);
        let cycles = f.intersect(&self.kernel)?;
        let higher = self.c.filtration(n, p + 1).intersect(&self.kernel)?;
        let bounds = f.intersect(&self.c.total(n - 1).image_under(self.c.differential())?)?;
        Ok(cycles.dim() - higher.sum(&bounds)?.dim())
    }
}

/// Computes pages until they agree with `E_∞`.
pub fn spectral_sequence<C: FilteredComplex + ?Sized>(c: &C) -> Result<SpectralSequence, HomologyError> {
    let d = c.differential();
    if !(d * d).is_zero() {
        return Err(HomologyError::NotDifferential("total differential"));
    }
    let pages_calc = Pages { c, kernel: d.kernel() };
    let positions = c.positions();
    let infinity = positions
        .iter()
        .map(|(_, n, p)| pages_calc.infinity(*n, *p))
        .collect::<Result<Vec<_>, _>>()?;
    let mut pages = Vec::new();
    for r in 1..=c.max_page() {
        let page = positions
            .iter()
            .map(|(_, n, p)| pages_calc.page(*n, *p, r))
            .collect::<Result<Vec<_>, _>>()?;
        let done = page == infinity;
        pages.push(page);
        if done {
            return Ok(SpectralSequence {
                labels: positions.into_iter().map(|p| p.0).collect(),
                degenerates_at: r,
                pages,
                infinity,
            });
        }
    }
    Err(HomologyError::NoConvergence(c.max_page()))
}

/// The 2-periodic double complex `K^{p,q} = U^{p−q}` with `∂` raising `p`
/// and `∂̄` raising `q`, filtered by `q` so that `E_1 = H(∂)`.
pub struct CanonicalDoubleComplex<'a> {
    dec: &'a UkDecomposition,
    d: Matrix,
}

impl<'a> CanonicalDoubleComplex<'a> {
    pub fn new(dec: &'a UkDecomposition, ops: &Operators) -> Self {
        CanonicalDoubleComplex { dec, d: ops.d.clone() }
    }

    fn span(&self, pred: impl Fn(i64) -> bool) -> Subspace {
        let q = self.dec.q() as i64;
        let mut out = Subspace::zero(self.size());
        for j in (-q..=q).filter(|j| pred(*j)) {
            out = out.sum(self.dec.piece(j).expect("in range")).expect("same ambient");
        }
        out
    }
}

impl FilteredComplex for CanonicalDoubleComplex<'_> {
    fn size(&self) -> usize {
        self.d.rows()
    }

    fn differential(&self) -> &Matrix {
        &self.d
    }

    fn total(&self, n: i64) -> Subspace {
        self.span(|j| (j - n).rem_euclid(2) == 0)
    }

    fn filtration(&self, n: i64, p: i64) -> Subspace {
        self.span(|j| (j - n).rem_euclid(2) == 0 && j <= n - 2 * p)
    }

    fn positions(&self) -> Vec<(String, i64, i64)> {
        let q = self.dec.q() as i64;
        (-q..=q)
            .map(|m| {
                let n = m.rem_euclid(2);
                (format!("U^{m}"), n, (n - m) / 2)
            })
            .collect()
    }

    fn max_page(&self) -> usize {
        2 * self.dec.q() + 2
    }
}

/// A bounded double complex given by its pieces inside one ambient space,
/// filtered by the second index so that `E_1 = H(∂)`.
pub struct BoundedDoubleComplex {
    pieces: BTreeMap<(i64, i64), Subspace>,
    d: Matrix,
}

impl BoundedDoubleComplex {
    pub fn new(pieces: BTreeMap<(i64, i64), Subspace>, del: &Matrix, delbar: &Matrix) -> Result<Self, HomologyError> {
        let size = del.rows();
        let zero = Subspace::zero(size);
        for (&(p, q), piece) in &pieces {
            for (op, target) in [(del, (p + 1, q)), (delbar, (p, q + 1))] {
                let image = piece.image_under(op)?;
                if !pieces.get(&target).unwrap_or(&zero).contains(&image)? {
                    return Err(HomologyError::NotBigraded { p, q });
                }
            }
        }
        Ok(BoundedDoubleComplex { pieces, d: del + delbar })
    }
}

impl FilteredComplex for BoundedDoubleComplex {
    fn size(&self) -> usize {
        self.d.rows()
    }

    fn differential(&self) -> &Matrix {
        &self.d
    }

    fn total(&self, n: i64) -> Subspace {
        self.filtration(n, i64::MIN)
    }

    fn filtration(&self, n: i64, f: i64) -> Subspace {
        let mut out = Subspace::zero(self.size());
        for (&(p, q), piece) in &self.pieces {
            if p + q == n && q >= f {
                out = out.sum(piece).expect("same ambient");
            }
        }
        out
    }

    fn positions(&self) -> Vec<(String, i64, i64)> {
        self.pieces
            .keys()
            .map(|&(p, q)| (format!("({p},{q})"), p + q, q))
            .collect()
    }

    fn max_page(&self) -> usize {
        let qs: Vec<i64> = self.pieces.keys().map(|k| k.1).collect();
        match (qs.iter().min(), qs.iter().max()) {
            (Some(lo), Some(hi)) => (hi - lo) as usize + 2,
            _ => 1,
        }
    }
}

/// The four equivalent formulations evaluated side by side.
#[derive(Clone, Debug, Serialize)]
pub struct SquareReport {
    pub ddj: DdjReport,
    pub inclusion: QuasiIsoReport,
    pub quotient: QuasiIsoReport,
    pub spectral: SpectralSequence,
    pub decomposition: DecompositionReport,
    /// `[ddJ lemma, inclusion, quotient, degeneration and decomposition]`.
    pub verdicts: [bool; 4],
    /// The two halves of the lemma agree.
    pub lemma_symmetric: bool,
}

impl SquareReport {
    pub fn agree(&self) -> bool {
        self.lemma_symmetric && self.verdicts.iter().all(|v| *v == self.verdicts[0])
    }

    pub fn verdict(&self) -> bool {
        self.verdicts[0]
    }
}

pub fn theorem_square(dec: &UkDecomposition, ops: &Operators) -> Result<SquareReport, HomologyError> {
    let n = dec.spinor().dim();
    let space = Graded::forms(n, Grading::Parity);
    let ddj = ddj_lemma(&ops.d, &ops.d_j)?;
    let inclusion = inclusion_quasi_iso(&space, &ops.d, 1, &ops.d_j, 1)?;
    let quotient = quotient_quasi_iso(&space, &ops.d, 1, &ops.d_j, 1)?;
    let spectral = spectral_sequence(&CanonicalDoubleComplex::new(dec, ops))?;
    let decomposition = decomposition_in_cohomology(dec, &ops.d)?;
    let verdicts = [
        ddj.holds,
        inclusion.holds,
        quotient.holds,
        spectral.degenerates_at == 1 && decomposition.holds,
    ];
    Ok(SquareReport {
        lemma_symmetric: ddj.left == ddj.right,
        ddj,
        inclusion,
        quotient,
        spectral,
        decomposition,
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieModel;
    use crate::linalg::unit_vector;

    fn heisenberg() -> LieModel {
        LieModel::from_brackets(3, &[(0, 1, unit_vector(3, 2))]).unwrap()
    }

    #[test]
    fn heisenberg_betti_numbers() {
        let h = heisenberg();
        let space = Graded::forms(3, Grading::Degree);
        let groups = cohomology(&space, &h.d_matrix(), 1, "d").unwrap();
        let dims: Vec<usize> = groups.iter().map(CohomologyGroup::dim).collect();
        assert_eq!(dims, vec![1, 2, 2, 1]);
        let parity = cohomology(&Graded::forms(3, Grading::Parity), &h.d_matrix(), 1, "d").unwrap();
        assert_eq!(parity.iter().map(CohomologyGroup::dim).collect::<Vec<_>>(), vec![3, 3]);
        assert_eq!(total_cohomology_dim(&h.d_matrix()), 6);
    }

    #[test]
    fn representatives_are_cycles_outside_boundaries() {
        let h = heisenberg();
        let d = h.d_matrix();
        let groups = cohomology(&Graded::forms(3, Grading::Degree), &d, 1, "d").unwrap();
        for g in &groups {
            for r in &g.representatives {
                assert!(crate::linalg::is_zero_vector(&d.apply(r)));
                assert!(!g.boundaries.contains_vector(r));
            }
        }
    }

    #[test]
    fn inhomogeneous_operator_is_rejected() {
        let space = Graded::forms(2, Grading::Degree);
        let err = cohomology(&space, &Matrix::zeros(4, 4), 1, "d").map(|_| ());
        assert!(err.is_ok());
        let mut m = Matrix::zeros(4, 4);
        m[(0, 1)] = crate::scalar::Scalar::one();
        assert!(matches!(
            space.check_homogeneous(&m, 1, "m"),
            Err(HomologyError::NotHomogeneous { piece: 1, .. })
        ));
    }

    /// Four one-dimensional pieces with a single nonzero vertical arrow.
    fn toy() -> BoundedDoubleComplex {
        let mut pieces = BTreeMap::new();
        for (i, key) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
            pieces.insert(key, Subspace::coordinate(4, [i]));
        }
        let del = Matrix::zeros(4, 4);
        let mut delbar = Matrix::zeros(4, 4);
        delbar[(1, 0)] = crate::scalar::Scalar::one();
        BoundedDoubleComplex::new(pieces, &del, &delbar).unwrap()
    }

    #[test]
    fn toy_spectral_sequence() {
        let ss = spectral_sequence(&toy()).unwrap();
        assert_eq!(ss.page_total(1), 4);
        assert_eq!(ss.page_total(2), 2);
        assert_eq!(ss.infinity_total(), 2);
        assert_eq!(ss.degenerates_at, 2);
        assert_eq!(ss.infinity, vec![0, 0, 1, 1]);
    }

    #[test]
    fn misplaced_arrow_is_rejected() {
        let mut pieces = BTreeMap::new();
        pieces.insert((0, 0), Subspace::coordinate(2, [0]));
        pieces.insert((1, 1), Subspace::coordinate(2, [1]));
        let mut del = Matrix::zeros(2, 2);
        del[(1, 0)] = crate::scalar::Scalar::one();
        assert!(matches!(
            BoundedDoubleComplex::new(pieces, &del, &Matrix::zeros(2, 2)),
            Err(HomologyError::NotBigraded { p: 0, q: 0 })
        ));
    }
}
