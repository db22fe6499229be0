//! The complexified exterior algebra `Λ(V*)` of an `n`-dimensional space.
//!
//! Basis monomials `ξ_{i1} ∧ … ∧ ξ_{ik}` (with `i1 < … < ik`) are keyed by
//! the bitmask with bits `i1, …, ik` set. Signs follow the Koszul rule:
//! moving a generator past `m` others contributes `(-1)^m`. Every module in
//! the crate uses this one convention.
//!
//! The full form space is identified with `Scalar^(2^n)` by sending the
//! monomial with mask `m` to the `m`-th standard basis vector.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("dimension {0} exceeds the supported maximum of {MAX_DIM}")]
    TooLarge(usize),
    #[error("exp_wedge needs a form without degree-0 or degree-1 components")]
    NotHigherEven,
}

/// A strictly increasing list of generator indices, stored as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(pub u32);

impl MultiIndex {
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut mask = 0u32;
        for &i in indices {
            if i >= MAX_DIM || mask & (1 << i) != 0 {
                return None;
            }
            mask |= 1 << i;
        }
        Some(MultiIndex(mask))
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|i| self.0 & (1 << i) != 0).collect()
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }
}

/// Sign of `ξ^a ∧ ξ^b` relative to the sorted monomial, or `None` if they share a generator.
pub fn wedge_sign(a: u32, b: u32) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> j).count_ones();
        rest &= rest - 1;
    }
    Some(swaps % 2 == 1)
}

/// `ι_{e_k} ξ^m`: the remaining mask and the sign, or `None` if `k ∉ m`.
pub fn contract_sign(k: usize, m: u32) -> Option<(u32, bool)> {
    if m & (1 << k) == 0 {
        return None;
    }
    let below = (m & ((1u32 << k) - 1)).count_ones();
    Some((m & !(1 << k), below % 2 == 1))
}

/// All masks of `k`-element subsets of `0..n`, in increasing numeric order.
pub fn masks_of_degree(n: usize, k: usize) -> Vec<u32> {
    (0u32..(1u32 << n)).filter(|m| m.count_ones() as usize == k).collect()
}

/// A (possibly inhomogeneous) form with sparse coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    dim: usize,
    terms: BTreeMap<u32, Scalar>,
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[{}]({})", self.dim, self)
    }
}

impl fmt::Display for Form {
    /// Renders in the expression syntax of model files, e.g. `1 + i*x1*x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&mask, c) in &self.terms {
            let mono: Vec<String> = MultiIndex(mask)
                .indices()
                .iter()
                .map(|i| format!("x{}", i + 1))
                .collect();
            let coeff = c.to_string();
            let needs_parens = coeff.contains(" + ") || coeff.contains(" - ") || coeff.contains(")/(");
            let coeff = if needs_parens { format!("({coeff})") } else { coeff };
            let term = if mono.is_empty() {
                coeff
            } else if c.is_one() {
                mono.join("*")
            } else if (-c).is_one() {
                format!("-{}", mono.join("*"))
            } else {
                format!("{coeff}*{}", mono.join("*"))
            };
            if first {
                write!(f, "{term}")?;
                first = false;
            } else if let Some(rest) = term.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        Ok(())
    }
}

impl Form {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "form dimension {dim} exceeds {MAX_DIM}");
        Form {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Scalar) -> Self {
        Form::monomial(dim, 0, c)
    }

    pub fn one(dim: usize) -> Self {
        Form::constant(dim, Scalar::one())
    }

    pub fn monomial(dim: usize, mask: u32, c: Scalar) -> Self {
        let mut f = Form::zero(dim);
        assert!(mask < (1 << dim), "monomial outside dimension");
        if !c.is_zero() {
            f.terms.insert(mask, c);
        }
        f
    }

    /// The generator `ξ_k` (zero-based `k`).
    pub fn generator(dim: usize, k: usize) -> Self {
        Form::monomial(dim, 1 << k, Scalar::one())
    }

    /// `ξ_{i1} ∧ … ∧ ξ_{ik}` for zero-based indices in any order.
    pub fn basis(dim: usize, indices: &[usize]) -> Self {
        indices
            .iter()
            .fold(Form::one(dim), |acc, &k| acc.wedge(&Form::generator(dim, k)).expect("same dimension"))
    }

    /// A 1-form from coordinates.
    pub fn covector(coeffs: &[Scalar]) -> Self {
        let mut f = Form::zero(coeffs.len());
        for (k, c) in coeffs.iter().enumerate() {
            f.add_term(1 << k, c);
        }
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn coeff(&self, mask: u32) -> Scalar {
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mask: u32, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    fn check(&self, other: &Form) -> Result<(), ExteriorError> {
        if self.dim != other.dim {
            return Err(ExteriorError::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn add(&self, other: &Form) -> Result<Form, ExteriorError> {
        self.check(other)?;
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Form) -> Result<Form, ExteriorError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Form {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Form {
        if c.is_zero() {
            return Form::zero(self.dim);
        }
        Form {
            dim: self.dim,
            terms: self.terms.iter().map(|(&m, x)| (m, c * x)).collect(),
        }
    }

    pub fn conj(&self) -> Form {
        Form {
            dim: self.dim,
            terms: self.terms.iter().map(|(&m, x)| (m, x.conj())).collect(),
        }
    }

    pub fn wedge(&self, other: &Form) -> Result<Form, ExteriorError> {
        self.check(other)?;
        let mut out = Form::zero(self.dim);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                if let Some(neg) = wedge_sign(a, b) {
                    let c = ca * cb;
                    out.add_term(a | b, &if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Interior product `ι_X` by a coordinate vector.
    pub fn contract(&self, x: &[Scalar]) -> Result<Form, ExteriorError> {
        if x.len() != self.dim {
            return Err(ExteriorError::DimensionMismatch(x.len(), self.dim));
        }
        let mut out = Form::zero(self.dim);
        for (&m, c) in &self.terms {
            for (k, xk) in x.iter().enumerate() {
                if xk.is_zero() {
                    continue;
                }
                if let Some((rest, neg)) = contract_sign(k, m) {
                    let v = xk * c;
                    out.add_term(rest, &if neg { -v } else { v });
                }
            }
        }
        Ok(out)
    }

    /// Component of degree `k`.
    pub fn degree_part(&self, k: usize) -> Form {
        Form {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(&m, _)| m.count_ones() as usize == k)
                .map(|(&m, c)| (m, c.clone()))
                .collect(),
        }
    }

    /// The degree if the form is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|m| m.count_ones() as usize);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Wedge exponential `Σ aᵏ/k!`; `a` must have no degree-0 or degree-1 part
    /// and only even-degree components.
    pub fn exp_wedge(&self) -> Result<Form, ExteriorError> {
        if self.terms.keys().any(|m| m.count_ones() < 2 || m.count_ones() % 2 == 1) {
            return Err(ExteriorError::NotHigherEven);
        }
        let mut acc = Form::one(self.dim);
        let mut power = Form::one(self.dim);
        for k in 1..=self.dim / 2 + 1 {
            power = power.wedge(self)?.scale(&Scalar::ratio(1, k as i64));
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc)
    }

    /// Coordinates in the mask-ordered basis of the full form space.
    pub fn to_vector(&self) -> Vector {
        let mut v = vec![Scalar::zero(); 1 << self.dim];
        for (&m, c) in &self.terms {
            v[m as usize] = c.clone();
        }
        v
    }

    pub fn from_vector(dim: usize, v: &[Scalar]) -> Form {
        assert_eq!(v.len(), 1 << dim, "vector length does not match form space");
        let mut f = Form::zero(dim);
        for (m, c) in v.iter().enumerate() {
            f.add_term(m as u32, c);
        }
        f
    }
}

/// A section `X + α` of `V ⊕ V*`, vector part first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GVector {
    pub vector: Vector,
    pub covector: Vector,
}

impl GVector {
    pub fn new(vector: Vector, covector: Vector) -> Result<Self, ExteriorError> {
        if vector.len() != covector.len() {
            return Err(ExteriorError::DimensionMismatch(vector.len(), covector.len()));
        }
        Ok(GVector { vector, covector })
    }

    pub fn zero(n: usize) -> Self {
        GVector {
            vector: vec![Scalar::zero(); n],
            covector: vec![Scalar::zero(); n],
        }
    }

    /// The basis vector `e_k`.
    pub fn e(n: usize, k: usize) -> Self {
        let mut v = GVector::zero(n);
        v.vector[k] = Scalar::one();
        v
    }

    /// The basis covector `ξ_k`.
    pub fn xi(n: usize, k: usize) -> Self {
        let mut v = GVector::zero(n);
        v.covector[k] = Scalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.vector.len()
    }

    /// Splits a length-`2n` coordinate vector (vectors first).
    pub fn from_coords(coords: &[Scalar]) -> Self {
        let n = coords.len() / 2;
        GVector {
            vector: coords[..n].to_vec(),
            covector: coords[n..].to_vec(),
        }
    }

    pub fn coords(&self) -> Vector {
        let mut v = self.vector.clone();
        v.extend(self.covector.iter().cloned());
        v
    }

    pub fn add(&self, o: &GVector) -> GVector {
        GVector::from_coords(&crate::linalg::add_vectors(&self.coords(), &o.coords()))
    }

    pub fn scale(&self, c: &Scalar) -> GVector {
        GVector::from_coords(&crate::linalg::scale_vector(c, &self.coords()))
    }

    pub fn conj(&self) -> GVector {
        GVector::from_coords(&crate::linalg::conj_vector(&self.coords()))
    }
}

/// `(X + α, Y + β) = ½(α(Y) + β(X))`.
pub fn natural_pairing(v: &GVector, w: &GVector) -> Result<Scalar, ExteriorError> {
    if v.dim() != w.dim() {
        return Err(ExteriorError::DimensionMismatch(v.dim(), w.dim()));
    }
    let a = crate::linalg::dot(&v.covector, &w.vector);
    let b = crate::linalg::dot(&w.covector, &v.vector);
    Ok(&(&a + &b) * &Scalar::ratio(1, 2))
}

/// Matrix of the natural pairing on `V ⊕ V*`: `½[[0, I], [I, 0]]`.
pub fn pairing_matrix(n: usize) -> Matrix {
    let half = Scalar::ratio(1, 2);
    Matrix::from_fn(2 * n, 2 * n, |r, c| {
        if (r < n && c == r + n) || (r >= n && c + n == r) {
            half.clone()
        } else {
            Scalar::zero()
        }
    })
}

/// The Clifford action `(X + α)•β = ι_X β + α ∧ β`.
pub fn clifford_act(v: &GVector, a: &Form) -> Result<Form, ExteriorError> {
    if v.dim() != a.dim() {
        return Err(ExteriorError::DimensionMismatch(v.dim(), a.dim()));
    }
    a.contract(&v.vector)?.add(&Form::covector(&v.covector).wedge(a)?)
}

/// Matrix of `β ↦ a ∧ β` on the full form space.
pub fn wedge_matrix(a: &Form) -> Matrix {
    let size = 1usize << a.dim();
    let mut m = Matrix::zeros(size, size);
    for col in 0..size as u32 {
        for (mask, c) in a.terms() {
            if let Some(neg) = wedge_sign(mask, col) {
                m[((mask | col) as usize, col as usize)] = if neg { -c } else { c.clone() };
            }
        }
    }
    m
}

/// Matrix of `ι_X` on the full form space.
pub fn contraction_matrix(x: &[Scalar]) -> Matrix {
    let n = x.len();
    let size = 1usize << n;
    let mut m = Matrix::zeros(size, size);
    for col in 0..size as u32 {
        for (k, xk) in x.iter().enumerate() {
            if xk.is_zero() {
                continue;
            }
            if let Some((rest, neg)) = contract_sign(k, col) {
                let entry = &mut m[(rest as usize, col as usize)];
                *entry += &if neg { -xk } else { xk.clone() };
            }
        }
    }
    m
}

/// Matrix of the Clifford action of `v` on the full form space.
pub fn clifford_matrix(v: &GVector) -> Matrix {
    &contraction_matrix(&v.vector) + &wedge_matrix(&Form::covector(&v.covector))
}

/// Diagonal projection onto forms of degree `k`.
pub fn degree_projection(n: usize, k: usize) -> Matrix {
    Matrix::from_fn(1 << n, 1 << n, |r, c| {
        if r == c && (r as u32).count_ones() as usize == k {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}
