//! Exact arithmetic in `Q(i)(s)`: rational functions in one real indeterminate
//! `s` with Gaussian-rational coefficients.
//!
//! A [`Scalar`] is stored as a reduced fraction `num / den` of polynomials in
//! `s`, with `den` monic and `gcd(num, den) = 1`. Because this representation
//! is canonical, structural equality is field equality, and `Hash` agrees
//! with it.
//!
//! Complex conjugation sends `i` to `-i` and fixes `s`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
}

/// A Gaussian rational `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    re: BigRational,
    im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    fn zero() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    fn one() -> Self {
        GaussRat {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    fn add(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    fn sub(&self, o: &Self) -> Self {
        GaussRat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    fn mul(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRat {
                re: &self.re * &o.re,
                im: BigRational::zero(),
            };
        }
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn neg(&self) -> Self {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Panics on zero; callers check first.
    fn inv(&self) -> Self {
        if self.im.is_zero() {
            return GaussRat {
                re: self.re.recip(),
                im: BigRational::zero(),
            };
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        GaussRat {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        }
    }

    fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rat(&self.re));
        }
        let imag = if self.im.is_one() {
            "i".to_string()
        } else if (-self.im.clone()).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", fmt_rat(&self.im))
        };
        if self.re.is_zero() {
            return write!(f, "{imag}");
        }
        if imag.starts_with('-') {
            write!(f, "({}{})", fmt_rat(&self.re), imag)
        } else {
            write!(f, "({}+{})", fmt_rat(&self.re), imag)
        }
    }
}

/// Dense univariate polynomial in `s`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
struct Poly(Vec<GaussRat>);

impl Poly {
    fn zero() -> Self {
        Poly(Vec::new())
    }

    fn constant(c: GaussRat) -> Self {
        let mut p = Poly(vec![c]);
        p.trim();
        p
    }

    fn one() -> Self {
        Poly(vec![GaussRat::one()])
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(GaussRat::is_zero) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &GaussRat {
        self.0.last().expect("lead of zero polynomial")
    }

    fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(match (self.0.get(k), o.0.get(k)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        let mut p = Poly(out);
        p.trim();
        p
    }

    fn neg(&self) -> Self {
        Poly(self.0.iter().map(GaussRat::neg).collect())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GaussRat::zero(); self.0.len() + o.0.len() - 1];
        for (a_deg, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b_deg, b) in o.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[a_deg + b_deg] = out[a_deg + b_deg].add(&a.mul(b));
            }
        }
        let mut p = Poly(out);
        p.trim();
        p
    }

    fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly(self.0.iter().map(|a| a.mul(c)).collect())
    }

    fn conj(&self) -> Self {
        Poly(self.0.iter().map(GaussRat::conj).collect())
    }

    /// Euclidean division; `d` must be nonzero.
    fn divrem(&self, d: &Self) -> (Self, Self) {
        let lead_inv = d.lead().inv();
        let mut rem = self.clone();
        if rem.0.len() < d.0.len() {
            return (Poly::zero(), rem);
        }
        let mut quot = vec![GaussRat::zero(); rem.0.len() - d.0.len() + 1];
        while !rem.is_zero() && rem.0.len() >= d.0.len() {
            let shift = rem.0.len() - d.0.len();
            let c = rem.lead().mul(&lead_inv);
            for (k, dk) in d.0.iter().enumerate() {
                rem.0[k + shift] = rem.0[k + shift].sub(&c.mul(dk));
            }
            quot[shift] = c;
            rem.trim();
        }
        let mut q = Poly(quot);
        q.trim();
        (q, rem)
    }

    fn monic(&self) -> Self {
        let inv = self.lead().inv();
        self.scale(&inv)
    }

    fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    fn eval(&self, x: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for c in self.0.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = if deg == 0 {
                c.to_string()
            } else {
                let mono = if deg == 1 {
                    "s".to_string()
                } else {
                    format!("s^{deg}")
                };
                if c.is_one() {
                    mono
                } else if c.neg().is_one() {
                    format!("-{mono}")
                } else {
                    format!("{c}*{mono}")
                }
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

/// An element of `Q(i)(s)` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::from_gauss(GaussRat::new(BigRational::zero(), BigRational::one()))
    }

    /// The transcendental parameter `s`.
    pub fn s() -> Self {
        Scalar {
            num: Poly(vec![GaussRat::zero(), GaussRat::one()]),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_gauss(GaussRat::new(
            BigRational::from_integer(BigInt::from(n)),
            BigRational::zero(),
        ))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar::from_gauss(GaussRat::new(BigRational::from_integer(n), BigRational::zero()))
    }

    /// The rational `n / d`. Panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar::from_gauss(GaussRat::new(
            BigRational::new(BigInt::from(n), BigInt::from(d)),
            BigRational::zero(),
        ))
    }

    /// The Gaussian integer `re + im·i`.
    pub fn gauss(re: i64, im: i64) -> Self {
        Scalar::from_gauss(GaussRat::new(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        ))
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        Scalar {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    /// Builds `num / den` from coefficient lists (lowest degree first).
    pub fn from_coeffs(num: Vec<GaussRat>, den: Vec<GaussRat>) -> Result<Self, ScalarError> {
        let mut n = Poly(num);
        n.trim();
        let mut d = Poly(den);
        d.trim();
        Scalar::normalized(n, d)
    }

    fn normalized(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        if den.is_one() {
            return Ok(Scalar { num, den });
        }
        if den.is_constant() {
            let inv = den.0[0].inv();
            return Ok(Scalar {
                num: num.scale(&inv),
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        let lead_inv = den.lead().inv();
        num = num.scale(&lead_inv);
        den = den.scale(&lead_inv);
        Ok(Scalar { num, den })
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not involve `s`.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The constant value, when [`Scalar::is_constant`] holds.
    pub fn as_gauss(&self) -> Option<GaussRat> {
        if !self.is_constant() {
            return None;
        }
        Some(self.num.0.first().cloned().unwrap_or_default())
    }

    /// True when `conj(self) == self`.
    pub fn is_real(&self) -> bool {
        self.num.0.iter().all(GaussRat::is_real) && self.den.0.iter().all(GaussRat::is_real)
    }

    pub fn conj(&self) -> Self {
        Scalar {
            num: self.num.conj(),
            den: self.den.conj(),
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Scalar::normalized(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if rhs.den.is_one() && self.den.is_one() && rhs.num.is_constant() {
            let inv = rhs.num.0[0].inv();
            return Ok(Scalar {
                num: self.num.scale(&inv),
                den: Poly::one(),
            });
        }
        Scalar::normalized(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    pub fn pow(&self, exp: i32) -> Result<Self, ScalarError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Scalar::one(),
            1 => Scalar::i(),
            2 => Scalar::from_int(-1),
            _ => -Scalar::i(),
        }
    }

    /// Evaluates at a Gaussian-rational value of `s`; `None` at a pole.
    pub fn eval_at(&self, s: &GaussRat) -> Option<GaussRat> {
        let d = self.den.eval(s);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(s).mul(&d.inv()))
    }

    /// Rough size used to prefer simple pivots: total degree in `s`, then
    /// coefficient bit length.
    pub(crate) fn weight(&self) -> (usize, u64) {
        let bits = |p: &Poly| {
            p.0.iter()
                .map(|c| {
                    c.re.numer().bits() + c.re.denom().bits() + c.im.numer().bits() + c.im.denom().bits()
                })
                .sum::<u64>()
        };
        (self.num.degree() + self.den.degree(), bits(&self.num) + bits(&self.den))
    }

    /// Degrees of numerator and denominator in `s`.
    pub fn degrees(&self) -> (usize, usize) {
        (self.num.degree(), self.den.degree())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar {
                num: self.num.add(&rhs.num),
                den: Poly::one(),
            };
        }
        if self.den == rhs.den {
            return Scalar::normalized(self.num.add(&rhs.num), self.den.clone())
                .expect("nonzero denominator");
        }
        Scalar::normalized(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
        .expect("nonzero denominator")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar {
                num: self.num.mul(&rhs.num),
                den: Poly::one(),
            };
        }
        Scalar::normalized(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
            .expect("nonzero denominator")
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] for the fallible form.
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

/// `-1` if `negative`, else `1`.
pub fn sign(negative: bool) -> Scalar {
    if negative {
        Scalar::from_int(-1)
    } else {
        Scalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> Scalar {
        Scalar::s()
    }

    #[test]
    fn gaussian_norm() {
        let a = Scalar::gauss(1, 1);
        let b = Scalar::gauss(1, -1);
        assert_eq!(&a * &b, Scalar::from_int(2));
    }

    #[test]
    fn conj_fixes_s() {
        let x = &s() + &Scalar::i();
        assert_eq!(x.conj(), &s() - &Scalar::i());
        assert!(s().is_real());
        assert!(!Scalar::i().is_real());
    }

    #[test]
    fn rationalize_inverse() {
        let x = &s() + &Scalar::i();
        let expected = (&s() - &Scalar::i())
            .checked_div(&(&(&s() * &s()) + &Scalar::one()))
            .unwrap();
        assert_eq!(x.inv().unwrap(), expected);
        assert_eq!(&x * &expected, Scalar::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn canonical_form_cancels_common_factors() {
        // (s^2 - 1)/(s - 1) = s + 1
        let num = &(&s() * &s()) - &Scalar::one();
        let den = &s() - &Scalar::one();
        let q = num.checked_div(&den).unwrap();
        assert_eq!(q, &s() + &Scalar::one());
        assert!(q.den.is_one());
    }

    #[test]
    fn denominators_are_monic() {
        let q = Scalar::one().checked_div(&(&Scalar::from_int(2) * &s())).unwrap();
        assert_eq!(q.den, Poly(vec![GaussRat::zero(), GaussRat::one()]));
        assert_eq!(q.to_string(), "(1/2)/(s)");
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::gauss(1, 2).to_string(), "(1+2*i)");
        assert_eq!(Scalar::gauss(0, -1).to_string(), "-i");
        assert_eq!(Scalar::ratio(-3, 4).to_string(), "-3/4");
        let p = &(&s() * &s()) - &(&Scalar::i() * &s());
        assert_eq!(p.to_string(), "s^2 - i*s");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn i_powers_cycle() {
        for k in -8..8 {
            assert_eq!(Scalar::i_pow(k), Scalar::i().pow(k as i32).unwrap());
        }
    }

    #[test]
    fn eval_at_point() {
        let x = (&s() + &Scalar::one()).checked_div(&(&s() - &Scalar::one())).unwrap();
        let three = GaussRat::new(BigRational::from_integer(3.into()), BigRational::zero());
        let v = x.eval_at(&three).unwrap();
        assert_eq!(Scalar::from_gauss(v), Scalar::from_int(2));
        let one = GaussRat::one();
        assert!(x.eval_at(&one).is_none());
    }
}
