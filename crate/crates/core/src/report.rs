//! The three report-producing pipelines: validation, cohomology and the
//! batteries. Reports are plain data; rendering lives in the CLI.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::canonical::{IdentityReport, UkDecomposition};
use crate::exterior::Form;
use crate::homology::{cohomology as graded_cohomology, theorem_square, Graded, Grading, SpectralSequence};
use crate::lie::{render_vector, LieError};
use crate::linalg::Vector;
use crate::model::{translation_invariance, GeneratorCheck, Model, ModelError};
use crate::symplectic::{symplectic_battery, LefschetzMap, SymplecticError};

pub const SCHEMA_VERSION: u32 = 1;

/// Sign and basis conventions, echoed in every report.
#[derive(Clone, Debug, Serialize)]
pub struct Conventions {
    pub differential: &'static str,
    pub bracket_from_group_law: &'static str,
    pub pairing: &'static str,
    pub clifford_action: &'static str,
    pub pieces: &'static str,
    pub d_j: &'static str,
    pub complex_lift: &'static str,
    pub symplectic_j: &'static str,
    pub star: &'static str,
    pub transport: &'static str,
    pub b_field: &'static str,
    pub spectral_filtration: &'static str,
    pub form_basis: &'static str,
    pub scope: &'static str,
}

pub const CONVENTIONS: Conventions = Conventions {
    differential: "d x_k = -sum_{i<j} c_ij^k x_i*x_j, extended as an antiderivation",
    bracket_from_group_law: "[e_i,e_j]_k = d2 m_k/dx_i da_j - d2 m_k/dx_j da_i at the identity",
    pairing: "<X+a, Y+b> = (a(Y) + b(X))/2",
    clifford_action: "(X+a).f = i_X f + a*f",
    pieces: "U^(q-k) = (wedge^k conj L).Phi",
    d_j: "dJ = i(delbar - del) = J^-1 d J with J = i^k on U^k",
    complex_lift: "J = diag(-I, I^T)",
    symplectic_j: "J = [[0, -M^-1], [M, 0]] with M X = i_X omega",
    star: "b * (star a) = Pi^k(b, a) omega^q/q!",
    transport: "E = exp(i omega) exp(i Lambda/2); delbar E = E d; del E = (i/2) E d^Lambda",
    b_field: "Phi -> exp(B)*Phi",
    spectral_filtration: "K^(p,q) = U^(p-q), filtered so that E_1 = H(del)",
    form_basis: "coordinates indexed by bitmask, bit k-1 for x_k",
    scope: "invariant forms stand in for basic forms; their identification with basic cohomology of the foliated manifold is assumed, not checked",
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub form: String,
    /// Every coordinate, in bitmask order.
    pub coordinates: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub piece: Option<usize>,
}

impl Witness {
    fn new(v: &Vector, piece: Option<usize>) -> Self {
        let n = v.len().trailing_zeros() as usize;
        Witness {
            form: Form::from_vector(n, v).to_string(),
            coordinates: v.iter().map(ToString::to_string).collect(),
            piece,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub model: String,
    pub command: &'static str,
    pub conventions: Conventions,
    pub validators: Vec<Check>,
    pub properties: BTreeMap<String, String>,
    pub dims: BTreeMap<String, Vec<usize>>,
    pub verdicts: BTreeMap<String, Verdict>,
    pub witnesses: BTreeMap<String, Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representatives: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identities: Option<IdentityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral: Option<SpectralSequence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lefschetz: Option<Vec<LefschetzMap>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub translations: Option<Vec<GeneratorCheck>>,
    /// Overall verdict of a battery.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    /// Milliseconds per stage; not part of the stable output.
    pub timings: BTreeMap<String, f64>,
}

/// How a report maps to an exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Holds => 0,
            Status::Fails => 2,
            Status::Error => 1,
        }
    }
}

impl Report {
    fn new(model: &str, command: &'static str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            model: model.to_string(),
            command,
            conventions: CONVENTIONS,
            validators: Vec::new(),
            properties: BTreeMap::new(),
            dims: BTreeMap::new(),
            verdicts: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            representatives: None,
            identities: None,
            spectral: None,
            lefschetz: None,
            translations: None,
            verdict: None,
            timings: BTreeMap::new(),
        }
    }

    fn check(&mut self, name: &str, passed: bool, detail: Option<String>) {
        self.validators.push(Check {
            name: name.to_string(),
            passed,
            detail,
        });
    }

    fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings.insert(stage.to_string(), start.elapsed().as_secs_f64() * 1e3);
        out
    }

    /// A report for a model that failed to load.
    pub fn failure(model: &str, command: &'static str, err: &ModelError) -> Self {
        let mut r = Report::new(model, command);
        let stage = match err {
            ModelError::Parse(_) => "parse",
            ModelError::Lie(LieError::Jacobi { .. }) | ModelError::Lie(LieError::NotAntisymmetric { .. }) => {
                "lie_algebra"
            }
            ModelError::Lie(_) => "foliation",
            ModelError::Reduction => "transverse_reduction",
            ModelError::Structure(_) | ModelError::Symplectic(_) => "structure",
            ModelError::NotInvariant { .. } => "translation_invariance",
        };
        r.check(stage, false, Some(err.to_string()));
        if let ModelError::Lie(LieError::Jacobi { i, j, k, defect }) = err {
            r.properties
                .insert("jacobi_triple".into(), format!("e{} e{} e{}", i + 1, j + 1, k + 1));
            r.properties.insert("jacobi_defect".into(), defect.clone());
        }
        r
    }

    /// A report for an input that could not be read.
    pub fn unreadable(model: &str, command: &'static str, message: String) -> Self {
        let mut r = Report::new(model, command);
        r.check("read", false, Some(message));
        r
    }

    pub fn status(&self) -> Status {
        if self.validators.iter().any(|c| !c.passed) {
            Status::Error
        } else if self.verdict == Some(Verdict::Fails) {
            Status::Fails
        } else {
            Status::Holds
        }
    }

    /// The report with timings cleared, for byte comparisons.
    pub fn without_timings(&self) -> Report {
        let mut r = self.clone();
        r.timings.clear();
        r
    }
}

fn trim(mut dims: Vec<usize>) -> Vec<usize> {
    while dims.len() > 1 && dims.last() == Some(&0) {
        dims.pop();
    }
    dims
}

/// Structural validators.
pub fn validate(model: &Model) -> Report {
    let mut r = Report::new(model.name(), "validate");
    let g = &model.g;
    r.check("lie_algebra", true, Some(format!("dimension {}", g.dim())));
    r.properties.insert("brackets".into(), brackets(model));
    let d = r.time("differential", || g.d_matrix());
    r.check("d_squared_zero", (&d * &d).is_zero(), None);
    if model.group_law.is_some() {
        r.check("group_law", true, Some("unital; brackets read off the law".into()));
    }
    if let Some(fm) = &model.foliated {
        r.check("foliation", true, Some(format!("leaves of dimension {}", fm.leaves.dim())));
        let basic = r.time("basic_subcomplex", || fm.basic_subcomplex());
        r.check("basic_subcomplex_closed", basic.is_closed(), None);
        r.dims.insert("basic".into(), trim(basic.dims()));
    }
    if let Some(rep) = &model.reduction {
        r.check(
            "transverse_reduction",
            rep.isomorphic && rep.commutes_with_d,
            Some("pullback is an isomorphism of complexes onto the basic forms".into()),
        );
        r.dims.insert("transverse".into(), rep.quotient_dims.clone());
    }
    if let Some(h) = &model.h {
        r.properties.insert("transverse_dimension".into(), h.dim().to_string());
        if model.foliated.is_some() {
            r.properties.insert("transverse_brackets".into(), render_brackets(h));
        }
    }
    if let Some(s) = &model.structure {
        r.check("structure", true, Some(format!("valid {} structure", s.spec.kind())));
        r.properties.insert("structure_kind".into(), s.spec.kind().into());
        r.properties.insert("structure_type".into(), s.gs.structure_type().to_string());
        if let Ok(phi) = s.gs.spinor() {
            r.properties.insert("spinor".into(), phi.to_string());
        }
        match &s.coordinate_frame {
            Ok(t) => r.check("coordinate_frame", true, Some(format!("valid, type {t}"))),
            Err(e) => r.check("coordinate_frame", false, Some(e.to_string())),
        }
        if let Some(sm) = &s.symplectic {
            let lo = sm.operators();
            r.check("sl2_relations", lo.sl2_holds(), None);
        }
    }
    if let Some(result) = r.time("translations", || translation_invariance(model)) {
        match result {
            Ok(list) => {
                let all = list.iter().all(|c| c.preserves_j);
                let nontrivial = list.iter().filter(|c| !c.trivial).count();
                r.check(
                    "translation_invariance",
                    all,
                    Some(format!("{} generators, {nontrivial} with nontrivial linear part", list.len())),
                );
                r.translations = Some(list);
            }
            Err(e) => r.check("translation_invariance", false, Some(e.to_string())),
        }
    }
    r
}

fn render_brackets(h: &crate::lie::LieModel) -> String {
    let list: Vec<String> = h
        .nonzero_brackets()
        .iter()
        .map(|(i, j, v)| format!("[e{},e{}] = {}", i + 1, j + 1, render_vector(v, "e")))
        .collect();
    if list.is_empty() {
        "abelian".into()
    } else {
        list.join("; ")
    }
}

fn brackets(model: &Model) -> String {
    render_brackets(&model.g)
}

/// Graded basic cohomology.
pub fn cohomology(model: &Model, reps: bool) -> Report {
    let mut r = Report::new(model.name(), "cohomology");
    let (space, d, n) = match &model.h {
        Some(h) => (Graded::forms(h.dim(), Grading::Degree), h.d_matrix(), h.dim()),
        None => {
            let fm = model.foliated.as_ref().expect("a model without h is foliated");
            let basic = fm.basic_subcomplex();
            (Graded::from_pieces(Grading::Degree, basic.pieces), basic.d, basic.n)
        }
    };
    let frame = if model.h.is_some() && model.foliated.is_some() { "transverse" } else { "ambient" };
    r.properties.insert("frame".into(), frame.into());
    match r.time("cohomology", || graded_cohomology(&space, &d, 1, "d")) {
        Ok(groups) => {
            r.check("d_squared_zero", true, None);
            r.dims.insert("betti".into(), trim(groups.iter().map(|g| g.dim()).collect()));
            if reps {
                r.representatives = Some(
                    groups
                        .iter()
                        .map(|g| g.representatives.iter().map(|v| Form::from_vector(n, v).to_string()).collect())
                        .collect(),
                );
            }
        }
        Err(e) => r.check("d_squared_zero", false, Some(e.to_string())),
    }
    r
}

/// Which optional sections a battery report carries.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sections {
    pub spectral: bool,
    pub lefschetz: bool,
}

/// The operator identities, the four-way comparison and, for symplectic
/// models, the symplectic battery.
pub fn battery(model: &Model, sections: Sections) -> Report {
    let mut r = Report::new(model.name(), "battery");
    let Some(structure) = &model.structure else {
        r.check("structure", false, Some("the battery needs a structure section".into()));
        return r;
    };
    let h = model.h.as_ref().expect("structures live on the transverse model");
    let dec = match r.time("pieces", || UkDecomposition::new(&structure.gs)) {
        Ok(dec) => dec,
        Err(e) => {
            r.check("pieces", false, Some(e.to_string()));
            return r;
        }
    };
    r.dims.insert("pieces".into(), dec.dims());
    let ops = match r.time("operators", || dec.split(&h.d_matrix())) {
        Ok(ops) => ops,
        Err(e) => {
            r.check("bigrading", false, Some(e.to_string()));
            return r;
        }
    };
    r.check("bigrading", true, Some("d has no components outside del and delbar".into()));
    let ids = ops.identities();
    r.check("operator_identities", ids.all_hold(), None);
    r.identities = Some(ids);
    let square = match r.time("square", || theorem_square(&dec, &ops)) {
        Ok(s) => s,
        Err(e) => {
            r.check("square", false, Some(e.to_string()));
            return r;
        }
    };
    r.check(
        "square_agreement",
        square.agree(),
        Some(format!("verdicts {:?}", square.verdicts)),
    );
    let names = ["ddj_lemma", "inclusion_quasi_iso", "quotient_quasi_iso", "degeneration_and_decomposition"];
    for (name, v) in names.iter().zip(square.verdicts) {
        r.verdicts.insert((*name).into(), v.into());
    }
    r.verdicts.insert("e1_degeneration".into(), (square.spectral.degenerates_at == 1).into());
    r.verdicts.insert("decomposition".into(), square.decomposition.holds.into());
    r.properties
        .insert("degenerates_at".into(), square.spectral.degenerates_at.to_string());
    r.dims.insert("e1".into(), square.spectral.pages[0].clone());
    r.dims.insert("e_infinity".into(), square.spectral.infinity.clone());
    if let Some(w) = &square.ddj.witness {
        r.witnesses.insert("ddj_lemma".into(), Witness::new(w, None));
    }
    if let Some((piece, w)) = &square.inclusion.witness {
        r.witnesses.insert("inclusion_quasi_iso".into(), Witness::new(w, Some(*piece)));
    }
    if let Some((piece, w)) = &square.quotient.witness {
        r.witnesses.insert("quotient_quasi_iso".into(), Witness::new(w, Some(*piece)));
    }
    let mut overall = square.verdict();
    if sections.spectral {
        r.spectral = Some(square.spectral.clone());
    }
    if let Some(sm) = &structure.symplectic {
        let lo = sm.operators();
        let uk_agree = (-(sm.q() as i64)..=sm.q() as i64).all(|k| dec.piece(k).map(|p| *p == lo.uk(k)).unwrap_or(false));
        r.check("exponential_pieces", uk_agree, Some("E(forms of degree q-k) = U^k".into()));
        match r.time("symplectic", || symplectic_battery(sm)) {
            Ok(b) => {
                r.check("transport_identities", true, None);
                r.check("d_lambda_equals_dj", b.d_lambda_is_dj, None);
                r.check("symplectic_agreement", true, Some(format!("verdicts {:?}", b.verdicts)));
                r.check("symplectic_e1_degeneration", true, None);
                let implication = !b.verdict() || b.lefschetz_surjective();
                r.check("lefschetz_implication", implication, None);
                let names = ["dd_lambda_lemma", "lambda_inclusion", "lambda_decomposition", "lambda_quotient"];
                for (name, v) in names.iter().zip(b.verdicts) {
                    r.verdicts.insert((*name).into(), v.into());
                }
                r.verdicts.insert("lefschetz_surjective".into(), b.lefschetz_surjective().into());
                r.dims
                    .insert("lefschetz_ranks".into(), b.lefschetz.iter().map(|m| m.rank).collect());
                if let Some(w) = &b.dd_lambda.witness {
                    r.witnesses.insert("dd_lambda_lemma".into(), Witness::new(w, None));
                }
                if b.verdict() != square.verdict() {
                    r.check("square_matches_symplectic", false, None);
                }
                overall &= b.verdict();
                if sections.lefschetz {
                    r.lefschetz = Some(b.lefschetz);
                }
            }
            Err(e) => {
                let name = match e {
                    SymplecticError::Transport { .. } => "transport_identities",
                    SymplecticError::Disagreement(_) => "symplectic_agreement",
                    SymplecticError::LateDegeneration(_) => "symplectic_e1_degeneration",
                    _ => "symplectic",
                };
                r.check(name, false, Some(e.to_string()));
            }
        }
    }
    r.verdict = Some(overall.into());
    r
}
