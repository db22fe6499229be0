//! The text model format.
//!
//! ```text
//! # comments start with '#'
//! model kodaira-thurston
//! dimension 4
//!
//! [brackets]
//! e1 e2 -> e3
//!
//! [omega]
//! x1*x4 + x2*x3
//! ```
//!
//! Sections: exactly one of `[brackets]` (lines `e_i e_j -> vector`) or
//! `[group-law]` (`dimension` polynomial lines in `x_k`, `a_k`); optional
//! `[foliation]` (one vector per line spanning the leaves) and `[quotient]`
//! (rows of a surjection onto the transverse model); at most one of
//! `[omega]`, `[J]` (rows of a `2m × 2m` matrix) or `[complex]` (rows of an
//! `m × m` matrix); optional `[bfield]` (a closed 2-form applied to the
//! structure). Matrix entries are whitespace separated scalars in `i`, `s`.

use thiserror::Error;

use crate::exterior::Form;
use crate::expr::{eval, indexed, parse_at, Element, ExprError};
use crate::lie::render_vector;
use crate::linalg::{zero_vector, Matrix, Vector};
use crate::poly::MPoly;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl From<ExprError> for ParseError {
    fn from(e: ExprError) -> Self {
        ParseError {
            line: e.line,
            column: e.column,
            message: e.message,
        }
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Algebra {
    /// `(i, j, [e_i, e_j])` with `i < j`.
    Brackets(Vec<(usize, usize, Vector)>),
    GroupLaw(Vec<MPoly>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureSpec {
    Omega(Form),
    J(Matrix),
    Complex(Matrix),
}

impl StructureSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            StructureSpec::Omega(_) => "symplectic",
            StructureSpec::J(_) => "generalized",
            StructureSpec::Complex(_) => "complex",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelFile {
    pub name: String,
    pub dimension: usize,
    pub algebra: Algebra,
    pub foliation: Option<Vec<Vector>>,
    pub quotient: Option<Matrix>,
    pub structure: Option<StructureSpec>,
    pub bfield: Option<Form>,
}

/// Vectors `Σ c_k e_k`; only linear expressions are allowed.
#[derive(Clone, Debug)]
struct Linear(Vector);

impl Element for Linear {
    fn add(&self, o: &Self) -> Result<Self, String> {
        Ok(Linear(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect()))
    }
    fn mul(&self, _: &Self) -> Result<Self, String> {
        Err("vectors cannot be multiplied".into())
    }
    fn scale(&self, c: &Scalar) -> Self {
        Linear(self.0.iter().map(|a| a * c).collect())
    }
    fn lift(&self, _: &Scalar) -> Option<Self> {
        None
    }
}

struct Line<'a> {
    no: usize,
    text: &'a str,
    /// Column of `text` within the source line, 1-based.
    col: usize,
}

fn vector_expr(line: &Line, text: &str, col: usize, n: usize) -> Result<Vector, ParseError> {
    let expr = parse_at(text, line.no, col)?;
    let env = |name: &str| {
        indexed(name, "e", n).map(|k| {
            let mut v = zero_vector(n);
            v[k] = Scalar::one();
            Linear(v)
        })
    };
    let unit = |c: &Scalar| c.is_zero().then(|| Linear(zero_vector(n)));
    Ok(eval(&expr, &env, &unit)?.0)
}

fn form_expr(line: &Line, n: usize) -> Result<Form, ParseError> {
    let expr = parse_at(line.text, line.no, line.col)?;
    let env = |name: &str| indexed(name, "x", n).map(|k| Form::generator(n, k));
    let unit = |c: &Scalar| Some(Form::constant(n, c.clone()));
    Ok(eval(&expr, &env, &unit)?)
}

fn poly_expr(line: &Line, n: usize) -> Result<MPoly, ParseError> {
    let expr = parse_at(line.text, line.no, line.col)?;
    let env = |name: &str| {
        indexed(name, "x", n)
            .map(|k| MPoly::var(2 * n, k))
            .or_else(|| indexed(name, "a", n).map(|k| MPoly::var(2 * n, n + k)))
    };
    let unit = |c: &Scalar| Some(MPoly::constant(2 * n, c.clone()));
    Ok(eval(&expr, &env, &unit)?)
}

fn matrix_rows(lines: &[Line], rows: usize, cols: usize, header: usize, what: &str) -> Result<Matrix, ParseError> {
    if lines.len() != rows {
        let at = lines.get(rows).map_or(header, |l| l.no);
        return Err(err(at, 1, format!("{what} needs {rows} rows, found {}", lines.len())));
    }
    let mut out = Vec::with_capacity(rows);
    for line in lines {
        let mut row = Vec::with_capacity(cols);
        let mut offset = 0;
        for token in line.text.split_whitespace() {
            let start = offset + line.text[offset..].find(token).expect("token is in line");
            offset = start + token.len();
            let expr = parse_at(token, line.no, line.col + start)?;
            row.push(crate::expr::eval_scalar(&expr)?);
        }
        if row.len() != cols {
            return Err(err(line.no, line.col, format!("{what} rows need {cols} entries, found {}", row.len())));
        }
        out.push(row);
    }
    Ok(Matrix::from_rows(out).expect("uniform rows"))
}

fn single_form(lines: &[Line], n: usize, header: usize, what: &str) -> Result<Form, ParseError> {
    let mut total = Form::zero(n);
    if lines.is_empty() {
        return Err(err(header, 1, format!("{what} section is empty")));
    }
    for line in lines {
        total = total.add(&form_expr(line, n)?).expect("same dimension");
    }
    Ok(total)
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut name = None;
        let mut dimension = None;
        let mut sections: Vec<(String, usize, Vec<Line>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let no = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim();
            if trimmed.is_empty() {
                continue;
            }
            let col = content.len() - content.trim_start().len() + 1;
            if let Some(rest) = trimmed.strip_prefix('[') {
                let Some(sec) = rest.strip_suffix(']') else {
                    return Err(err(no, col, "unterminated section header"));
                };
                let sec = sec.trim().to_string();
                if !["brackets", "group-law", "foliation", "quotient", "omega", "J", "complex", "bfield"]
                    .contains(&sec.as_str())
                {
                    return Err(err(no, col + 1, format!("unknown section '{sec}'")));
                }
                if sections.iter().any(|s| s.0 == sec) {
                    return Err(err(no, col + 1, format!("duplicate section '{sec}'")));
                }
                sections.push((sec, no, Vec::new()));
                continue;
            }
            if let Some((_, _, lines)) = sections.last_mut() {
                lines.push(Line { no, text: trimmed, col });
                continue;
            }
            let (key, value) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
            let value = value.trim();
            let vcol = col + trimmed.len() - value.len();
            match key {
                "model" => {
                    if value.is_empty() || value.contains(char::is_whitespace) {
                        return Err(err(no, vcol, "model name must be a single word"));
                    }
                    name = Some(value.to_string());
                }
                "dimension" => {
                    let n: usize = value.parse().map_err(|_| err(no, vcol, "dimension must be a positive integer"))?;
                    if n == 0 || n > crate::exterior::MAX_DIM {
                        return Err(err(no, vcol, format!("dimension must be in 1..={}", crate::exterior::MAX_DIM)));
                    }
                    dimension = Some(n);
                }
                _ => return Err(err(no, col, format!("unknown header key '{key}'"))),
            }
        }
        let name = name.ok_or_else(|| err(1, 1, "missing 'model' line"))?;
        let n = dimension.ok_or_else(|| err(1, 1, "missing 'dimension' line"))?;
        let section = |s: &str| sections.iter().find(|x| x.0 == s).map(|x| (x.1, &x.2));

        let algebra = match (section("brackets"), section("group-law")) {
            (Some(_), Some((no, _))) => return Err(err(no, 1, "give either [brackets] or [group-law], not both")),
            (None, None) => return Err(err(1, 1, "missing [brackets] or [group-law] section")),
            (Some((_, lines)), None) => Algebra::Brackets(parse_brackets(lines, n)?),
            (None, Some((no, lines))) => {
                if lines.len() != n {
                    return Err(err(no, 1, format!("group law needs {n} component lines, found {}", lines.len())));
                }
                Algebra::GroupLaw(lines.iter().map(|l| poly_expr(l, n)).collect::<Result<_, _>>()?)
            }
        };
        let foliation = section("foliation")
            .map(|(_, lines)| lines.iter().map(|l| vector_expr(l, l.text, l.col, n)).collect::<Result<Vec<_>, _>>())
            .transpose()?;
        let quotient = match section("quotient") {
            Some((no, lines)) => {
                if lines.is_empty() || lines.len() > n {
                    return Err(err(no, 1, format!("quotient needs between 1 and {n} rows")));
                }
                Some(matrix_rows(lines, lines.len(), n, no, "quotient")?)
            }
            None => None,
        };
        let m = quotient.as_ref().map_or(n, Matrix::rows);
        let structures: Vec<_> = ["omega", "J", "complex"].into_iter().filter_map(|s| section(s).map(|x| (s, x))).collect();
        if structures.len() > 1 {
            return Err(err(structures[1].1 .0, 1, "at most one of [omega], [J], [complex]"));
        }
        let structure = match structures.first() {
            None => None,
            Some(("omega", (no, lines))) => Some(StructureSpec::Omega(single_form(lines, m, *no, "omega")?)),
            Some(("J", (no, lines))) => Some(StructureSpec::J(matrix_rows(lines, 2 * m, 2 * m, *no, "J")?)),
            Some((_, (no, lines))) => Some(StructureSpec::Complex(matrix_rows(lines, m, m, *no, "complex")?)),
        };
        if structure.is_some() && foliation.is_some() && quotient.is_none() {
            return Err(err(section("foliation").expect("present").0, 1, "a structure on a foliated model needs a [quotient]"));
        }
        let bfield = match section("bfield") {
            Some((no, lines)) => {
                if structure.is_none() {
                    return Err(err(no, 1, "[bfield] needs a structure section"));
                }
                Some(single_form(lines, m, no, "bfield")?)
            }
            None => None,
        };
        Ok(ModelFile {
            name,
            dimension: n,
            algebra,
            foliation,
            quotient,
            structure,
            bfield,
        })
    }

    /// Dimension of the transverse model.
    pub fn transverse_dimension(&self) -> usize {
        self.quotient.as_ref().map_or(self.dimension, Matrix::rows)
    }

    /// Canonical rendering; parsing it gives back an equal value.
    pub fn render(&self) -> String {
        let n = self.dimension;
        let mut out = format!("model {}\ndimension {}\n", self.name, n);
        match &self.algebra {
            Algebra::Brackets(list) => {
                out.push_str("\n[brackets]\n");
                for (i, j, v) in list {
                    out.push_str(&format!("e{} e{} -> {}\n", i + 1, j + 1, render_vector(v, "e")));
                }
            }
            Algebra::GroupLaw(comps) => {
                out.push_str("\n[group-law]\n");
                let names: Vec<String> = (1..=n).map(|k| format!("x{k}")).chain((1..=n).map(|k| format!("a{k}"))).collect();
                for c in comps {
                    out.push_str(&c.render(&names));
                    out.push('\n');
                }
            }
        }
        if let Some(f) = &self.foliation {
            out.push_str("\n[foliation]\n");
            for v in f {
                out.push_str(&render_vector(v, "e"));
                out.push('\n');
            }
        }
        if let Some(q) = &self.quotient {
            out.push_str("\n[quotient]\n");
            out.push_str(&render_matrix(q));
        }
        match &self.structure {
            Some(StructureSpec::Omega(w)) => out.push_str(&format!("\n[omega]\n{w}\n")),
            Some(StructureSpec::J(j)) => out.push_str(&format!("\n[J]\n{}", render_matrix(j))),
            Some(StructureSpec::Complex(c)) => out.push_str(&format!("\n[complex]\n{}", render_matrix(c))),
            None => {}
        }
        if let Some(b) = &self.bfield {
            out.push_str(&format!("\n[bfield]\n{b}\n"));
        }
        out
    }
}

fn parse_brackets(lines: &[Line], n: usize) -> Result<Vec<(usize, usize, Vector)>, ParseError> {
    let mut out: Vec<(usize, usize, Vector)> = Vec::new();
    for line in lines {
        let Some(arrow) = line.text.find("->") else {
            return Err(err(line.no, line.col, "expected 'e_i e_j -> vector'"));
        };
        let lhs: Vec<&str> = line.text[..arrow].split_whitespace().collect();
        let parsed: Vec<Option<usize>> = lhs.iter().map(|t| indexed(t, "e", n)).collect();
        let (i, j) = match parsed.as_slice() {
            [Some(i), Some(j)] if i != j => (*i, *j),
            _ => return Err(err(line.no, line.col, format!("expected two distinct basis vectors e1..e{n}"))),
        };
        let rhs_col = line.col + arrow + 2;
        let mut v = vector_expr(line, &line.text[arrow + 2..], rhs_col, n)?;
        let (i, j) = if i < j {
            (i, j)
        } else {
            v = v.iter().map(|c| -c).collect();
            (j, i)
        };
        if out.iter().any(|(a, b, _)| (*a, *b) == (i, j)) {
            return Err(err(line.no, line.col, format!("bracket [e{}, e{}] given twice", i + 1, j + 1)));
        }
        out.push((i, j, v));
    }
    out.sort_by_key(|(i, j, _)| (*i, *j));
    out.retain(|(_, _, v)| v.iter().any(|c| !c.is_zero()));
    Ok(out)
}

/// One row per line, entries without inner spaces.
pub fn render_matrix(m: &Matrix) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|c| c.to_string().replace(' ', "")).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;

    const KT: &str = "model kodaira-thurston\ndimension 4\n\n[brackets]\ne1 e2 -> e3\n\n[omega]\nx2*x3 + x1*x4\n";

    #[test]
    fn parses_and_renders_canonically() {
        let mf = ModelFile::parse(KT).unwrap();
        assert_eq!(mf.algebra, Algebra::Brackets(vec![(0, 1, unit_vector(4, 2))]));
        assert_eq!(mf.render(), KT);
        let reordered = KT.replace("x2*x3 + x1*x4", "x1 * x4 + x2*x3");
        assert_eq!(ModelFile::parse(&reordered).unwrap(), mf);
    }

    #[test]
    fn reversed_bracket_is_normalised() {
        let mf = ModelFile::parse("model t\ndimension 3\n[brackets]\ne2 e1 -> e3 # note\n").unwrap();
        let mut v = zero_vector(3);
        v[2] = Scalar::from_int(-1);
        assert_eq!(mf.algebra, Algebra::Brackets(vec![(0, 1, v)]));
    }

    #[test]
    fn errors_carry_positions() {
        let e = ModelFile::parse("model t\ndimension 3\n[brackets]\ne1 e2 -> e3 + e4\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 15));
        let e = ModelFile::parse("model t\ndimension 2\n[brackets]\n[J]\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (8, 7));
        let e = ModelFile::parse("model t\ndimension 2\n[oops]\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(ModelFile::parse("dimension 2\n[brackets]\n").is_err());
    }

    #[test]
    fn matrix_entries_round_trip() {
        let text = "model q\ndimension 3\n\n[brackets]\n\n[quotient]\n1 (1)/(s+i) -s^2+3/2\n";
        let mf = ModelFile::parse(text).unwrap();
        assert_eq!(mf.render(), text);
        assert_eq!(ModelFile::parse(&mf.render()).unwrap(), mf);
    }
}
