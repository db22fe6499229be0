//! Multivariate polynomials with [`Scalar`] coefficients, used for group laws.

use std::collections::BTreeMap;
use std::fmt;

use crate::expr::Element;
use crate::scalar::Scalar;

/// A polynomial in `nvars` commuting variables, keyed by exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({:?})", self.nvars, self.terms)
    }
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = MPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        let mut p = MPoly::zero(nvars);
        p.add_term(e, Scalar::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, e: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Coefficient of the monomial with exponent vector `e`.
    pub fn coeff(&self, e: &[u32]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), c * x);
        }
        out
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Partial derivative in variable `k`.
    pub fn derivative(&self, k: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[k] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[k] -= 1;
            out.add_term(e2, c * &Scalar::from_int(e[k] as i64));
        }
        out
    }

    /// Substitutes `values[k]` for each variable `k` given as `Some`.
    pub fn substitute(&self, values: &[Option<Scalar>]) -> MPoly {
        assert_eq!(values.len(), self.nvars, "substitution length mismatch");
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = e.clone();
            for (k, v) in values.iter().enumerate() {
                if let Some(v) = v {
                    if e[k] > 0 {
                        coeff = &coeff * &v.pow(e[k] as i32).expect("positive power");
                    }
                    rest[k] = 0;
                }
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Value at a point; every variable must be given.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let values: Vec<Option<Scalar>> = point.iter().cloned().map(Some).collect();
        self.substitute(&values).coeff(&vec![0; self.nvars])
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Renders with the given variable names.
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(k, &p)| if p == 1 { names[k].clone() } else { format!("{}^{p}", names[k]) })
                .collect();
            let coeff = c.to_string();
            let coeff = if coeff.contains(" + ") || coeff.contains(" - ") || coeff.contains(")/(") {
                format!("({coeff})")
            } else {
                coeff
            };
            let term = if mono.is_empty() {
                coeff
            } else if c.is_one() {
                mono.join("*")
            } else if (-c).is_one() {
                format!("-{}", mono.join("*"))
            } else {
                format!("{coeff}*{}", mono.join("*"))
            };
            if out.is_empty() {
                out = term;
            } else if let Some(rest) = term.strip_prefix('-') {
                out = format!("{out} - {rest}");
            } else {
                out = format!("{out} + {term}");
            }
        }
        out
    }
}

impl Element for MPoly {
    fn add(&self, o: &Self) -> Result<Self, String> {
        Ok(MPoly::add(self, o))
    }
    fn mul(&self, o: &Self) -> Result<Self, String> {
        Ok(MPoly::mul(self, o))
    }
    fn scale(&self, c: &Scalar) -> Self {
        MPoly::scale(self, c)
    }
    fn lift(&self, c: &Scalar) -> Option<Self> {
        Some(MPoly::constant(self.nvars, c.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{eval, parse};

    fn parse_poly(text: &str, nvars: usize) -> MPoly {
        let env = |name: &str| name.strip_prefix('v').and_then(|k| k.parse::<usize>().ok()).map(|k| MPoly::var(nvars, k));
        let unit = |c: &Scalar| Some(MPoly::constant(nvars, c.clone()));
        eval(&parse(text).unwrap(), &env, &unit).unwrap()
    }

    #[test]
    fn arithmetic_and_derivatives() {
        let p = parse_poly("(v0 + v1)^2 - 2*v0*v1", 2);
        assert_eq!(p, parse_poly("v0^2 + v1^2", 2));
        assert_eq!(p.derivative(0), parse_poly("2*v0", 2));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(&[Scalar::i(), Scalar::s()]), &Scalar::s().pow(2).unwrap() - &Scalar::one());
    }

    #[test]
    fn substitution_is_partial() {
        let p = parse_poly("v0*v1 + v1 + 3", 2);
        let q = p.substitute(&[Some(Scalar::from_int(2)), None]);
        assert_eq!(q, parse_poly("3*v1 + 3", 2));
    }

    #[test]
    fn rendering() {
        let names: Vec<String> = vec!["x1".into(), "a1".into()];
        let p = parse_poly("v0*v1 - s*v1^2 + 1", 2);
        let text = p.render(&names);
        let back = {
            let env = |name: &str| names.iter().position(|n| n == name).map(|k| MPoly::var(2, k));
            let unit = |c: &Scalar| Some(MPoly::constant(2, c.clone()));
            eval(&parse(&text).unwrap(), &env, &unit).unwrap()
        };
        assert_eq!(back, p);
    }
}
