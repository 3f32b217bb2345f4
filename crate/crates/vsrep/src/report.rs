//! Self-contained JSON reports of a diagnosis run. A report carries the
//! input identity (file hash or catalog name), the decision parameters, the
//! verdict, and a full witness payload re-verifiable from the report plus
//! the original input alone. Identical invocations produce byte-identical
//! reports except for the wall-time field.

use crate::linalg::{LinalgError, Matrix, Poly, Subspace};
use crate::meataxe::SubmoduleWitness;
use crate::normalg::{
    verify_diagnosis, DecisionMode, Diagnosis, NormalSubalgebra, NormalgError, TensorWitness,
    TwistedWitness,
};
use crate::rep::Representation;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("report field {field} does not match the input ({detail})")]
    InputMismatch { field: &'static str, detail: String },
    #[error("witness payload is malformed: {0}")]
    BadPayload(String),
    #[error(transparent)]
    Normalg(#[from] NormalgError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Identifies the module that was diagnosed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDescriptor {
    /// `"file"` or `"catalog"`.
    pub kind: String,
    /// File path or catalog label.
    pub name: String,
    /// SHA-256 of the input file, hex; absent for catalog builds.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sha256: Option<String>,
    /// Whether the diagnosis ran on the heart of a permutation group.
    pub heart: bool,
}

impl InputDescriptor {
    pub fn catalog(label: &str, heart: bool) -> InputDescriptor {
        InputDescriptor { kind: "catalog".into(), name: label.into(), sha256: None, heart }
    }

    pub fn file(path: &str, contents: &[u8], heart: bool) -> InputDescriptor {
        InputDescriptor {
            kind: "file".into(),
            name: path.into(),
            sha256: Some(sha256_hex(contents)),
            heart,
        }
    }
}

/// Hex SHA-256 digest.
pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    /// Coefficients of the modulus polynomial, ascending.
    pub modulus: Vec<u32>,
}

/// Which clause of the decision the verdict speaks to.
pub fn criterion_label(d: &Diagnosis) -> &'static str {
    match d {
        Diagnosis::VerySimple { .. } => "scalars-or-full",
        Diagnosis::NotIrreducible { .. } | Diagnosis::NotAbsolutelyIrreducible { .. } => {
            "absolutely-simple"
        }
        Diagnosis::Induced { .. } => "induced-from-proper-subgroup",
        Diagnosis::TensorSplit { .. } => "tensor-splitting",
        Diagnosis::TwistedMultiplication { .. } => "twisted-multiplication",
        Diagnosis::ProperNormalSubalgebraUnclassified { .. } => "proper-normal-subalgebra",
    }
}

fn nested(ms: &[Matrix]) -> Vec<Vec<Vec<u8>>> {
    ms.iter().map(|m| m.to_nested()).collect()
}

fn square_matrices(
    rep: &Representation,
    rows: &[Vec<Vec<u8>>],
    what: &str,
) -> Result<Vec<Matrix>, ReportError> {
    rows.iter()
        .map(|m| {
            let mat = Matrix::from_rows(rep.field(), m)?;
            if mat.rows() != rep.dim() || mat.cols() != rep.dim() {
                return Err(ReportError::BadPayload(format!(
                    "{what}: expected {0}×{0} matrices",
                    rep.dim()
                )));
            }
            Ok(mat)
        })
        .collect()
}

fn subalgebra_of(
    rep: &Representation,
    basis: &[Vec<Vec<u8>>],
) -> Result<NormalSubalgebra, ReportError> {
    let matrices = square_matrices(rep, basis, "subalgebra basis")?;
    Ok(NormalSubalgebra::new(rep, &matrices)?)
}

/// A diagnosis witness in plain serializable form (integer matrices only).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessPayload {
    NotIrreducible {
        submodule_basis: Vec<Vec<u8>>,
    },
    NotAbsolutelyIrreducible {
        end_degree: usize,
        end_basis: Vec<Vec<Vec<u8>>>,
    },
    Induced {
        r: usize,
        block_bases: Vec<Vec<Vec<u8>>>,
        subalgebra_basis: Vec<Vec<Vec<u8>>>,
    },
    TensorSplit {
        d1: usize,
        d2: usize,
        u: Vec<Vec<u8>>,
        a_factors: Vec<Vec<Vec<u8>>>,
        b_factors: Vec<Vec<Vec<u8>>>,
        subalgebra_basis: Vec<Vec<Vec<u8>>>,
    },
    TwistedMultiplication {
        ext_degree: usize,
        chi: Vec<u32>,
        surjective: bool,
        field_basis: Vec<Vec<Vec<u8>>>,
        generator: Vec<Vec<u8>>,
        min_poly: Vec<u8>,
        subalgebra_basis: Vec<Vec<Vec<u8>>>,
    },
    ProperNormalSubalgebra {
        subalgebra_basis: Vec<Vec<Vec<u8>>>,
    },
}

impl WitnessPayload {
    /// Extracts the serializable witness; `None` for a very-simple verdict,
    /// which has no finite witness.
    pub fn from_diagnosis(d: &Diagnosis) -> Option<WitnessPayload> {
        match d {
            Diagnosis::VerySimple { .. } => None,
            Diagnosis::NotIrreducible { submodule } => Some(WitnessPayload::NotIrreducible {
                submodule_basis: submodule.subspace.basis_rows(),
            }),
            Diagnosis::NotAbsolutelyIrreducible { end_degree, end_basis } => {
                Some(WitnessPayload::NotAbsolutelyIrreducible {
                    end_degree: *end_degree,
                    end_basis: nested(end_basis),
                })
            }
            Diagnosis::Induced { r, blocks, subalgebra } => Some(WitnessPayload::Induced {
                r: *r,
                block_bases: blocks.iter().map(|b| b.basis_rows()).collect(),
                subalgebra_basis: nested(subalgebra.basis()),
            }),
            Diagnosis::TensorSplit { d1, d2, witness, subalgebra } => {
                Some(WitnessPayload::TensorSplit {
                    d1: *d1,
                    d2: *d2,
                    u: witness.u.to_nested(),
                    a_factors: nested(&witness.a_factors),
                    b_factors: nested(&witness.b_factors),
                    subalgebra_basis: nested(subalgebra.basis()),
                })
            }
            Diagnosis::TwistedMultiplication { ext_degree, chi, surjective, witness, subalgebra } => {
                Some(WitnessPayload::TwistedMultiplication {
                    ext_degree: *ext_degree,
                    chi: chi.clone(),
                    surjective: *surjective,
                    field_basis: nested(&witness.field_basis),
                    generator: witness.generator.to_nested(),
                    min_poly: witness.min_poly.coeffs().to_vec(),
                    subalgebra_basis: nested(subalgebra.basis()),
                })
            }
            Diagnosis::ProperNormalSubalgebraUnclassified { subalgebra } => {
                Some(WitnessPayload::ProperNormalSubalgebra {
                    subalgebra_basis: nested(subalgebra.basis()),
                })
            }
        }
    }

    /// Rebuilds the structured diagnosis against the input module,
    /// re-validating every subalgebra along the way.
    pub fn to_diagnosis(&self, rep: &Representation) -> Result<Diagnosis, ReportError> {
        let field = rep.field();
        let n = rep.dim();
        match self {
            WitnessPayload::NotIrreducible { submodule_basis } => {
                for row in submodule_basis {
                    if row.len() != n {
                        return Err(ReportError::BadPayload(
                            "submodule basis rows must have the module dimension".into(),
                        ));
                    }
                }
                let subspace = Subspace::from_rows(field, n, submodule_basis);
                Ok(Diagnosis::NotIrreducible { submodule: SubmoduleWitness { subspace } })
            }
            WitnessPayload::NotAbsolutelyIrreducible { end_degree, end_basis } => {
                Ok(Diagnosis::NotAbsolutelyIrreducible {
                    end_degree: *end_degree,
                    end_basis: square_matrices(rep, end_basis, "endomorphism basis")?,
                })
            }
            WitnessPayload::Induced { r, block_bases, subalgebra_basis } => {
                let blocks = block_bases
                    .iter()
                    .map(|rows| {
                        for row in rows {
                            if row.len() != n {
                                return Err(ReportError::BadPayload(
                                    "block basis rows must have the module dimension".into(),
                                ));
                            }
                        }
                        Ok(Subspace::from_rows(field, n, rows))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Diagnosis::Induced {
                    r: *r,
                    blocks,
                    subalgebra: subalgebra_of(rep, subalgebra_basis)?,
                })
            }
            WitnessPayload::TensorSplit { d1, d2, u, a_factors, b_factors, subalgebra_basis } => {
                let u = Matrix::from_rows(field, u)?;
                let a_factors = a_factors
                    .iter()
                    .map(|m| Matrix::from_rows(field, m))
                    .collect::<Result<Vec<_>, _>>()?;
                let b_factors = b_factors
                    .iter()
                    .map(|m| Matrix::from_rows(field, m))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Diagnosis::TensorSplit {
                    d1: *d1,
                    d2: *d2,
                    witness: TensorWitness {
                        d1: *d1,
                        d2: *d2,
                        u,
                        a_factors,
                        b_factors,
                    },
                    subalgebra: subalgebra_of(rep, subalgebra_basis)?,
                })
            }
            WitnessPayload::TwistedMultiplication {
                ext_degree,
                chi,
                surjective,
                field_basis,
                generator,
                min_poly,
                subalgebra_basis,
            } => {
                let witness = TwistedWitness {
                    ext_degree: *ext_degree,
                    field_basis: square_matrices(rep, field_basis, "field basis")?,
                    generator: Matrix::from_rows(field, generator)?,
                    min_poly: Poly::new(field, min_poly.clone()),
                    exponents: chi.clone(),
                    surjective: *surjective,
                };
                Ok(Diagnosis::TwistedMultiplication {
                    ext_degree: *ext_degree,
                    chi: chi.clone(),
                    surjective: *surjective,
                    witness,
                    subalgebra: subalgebra_of(rep, subalgebra_basis)?,
                })
            }
            WitnessPayload::ProperNormalSubalgebra { subalgebra_basis } => {
                Ok(Diagnosis::ProperNormalSubalgebraUnclassified {
                    subalgebra: subalgebra_of(rep, subalgebra_basis)?,
                })
            }
        }
    }
}

/// The complete record of one diagnosis run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagnosisReport {
    pub input: InputDescriptor,
    pub field: FieldSpec,
    pub dim: usize,
    /// `"exact"` or `"randomized"`.
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trials: Option<u32>,
    pub seed: u64,
    /// Verdict tag, one of the `Diagnosis::bucket()` values.
    pub verdict: String,
    pub very_simple: bool,
    /// Which decision clause the verdict speaks to.
    pub criterion: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seeds_checked: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessPayload>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub all_witnesses: Option<Vec<WitnessPayload>>,
    pub wall_time_ms: u64,
}

impl DiagnosisReport {
    /// Copy with the wall time zeroed: invocation-independent content.
    pub fn normalized(&self) -> DiagnosisReport {
        let mut out = self.clone();
        out.wall_time_ms = 0;
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Assembles a report from a finished run.
pub fn build_report(
    input: InputDescriptor,
    rep: &Representation,
    mode: DecisionMode,
    seed: u64,
    diagnosis: &Diagnosis,
    all: Option<&[Diagnosis]>,
    wall_time_ms: u64,
) -> DiagnosisReport {
    let field = rep.field();
    let (mode_name, trials) = match mode {
        DecisionMode::Exact => ("exact", None),
        DecisionMode::Randomized { trials } => ("randomized", Some(trials)),
    };
    let seeds_checked = match diagnosis {
        Diagnosis::VerySimple { seeds_checked, .. } => Some(*seeds_checked),
        _ => None,
    };
    DiagnosisReport {
        input,
        field: FieldSpec { p: field.p(), e: field.e(), modulus: field.modulus().to_vec() },
        dim: rep.dim(),
        mode: mode_name.into(),
        trials,
        seed,
        verdict: diagnosis.bucket().into(),
        very_simple: diagnosis.is_very_simple(),
        criterion: criterion_label(diagnosis).into(),
        seeds_checked,
        witness: WitnessPayload::from_diagnosis(diagnosis),
        all_witnesses: all
            .map(|ds| ds.iter().filter_map(WitnessPayload::from_diagnosis).collect()),
        wall_time_ms,
    }
}

/// Re-verifies every witness in the report against the module it claims to
/// describe: shape checks, then the independent structural checks behind
/// each verdict. A very-simple verdict carries no finite witness and passes
/// vacuously (re-run the decision to re-establish it).
pub fn verify_report(rep: &Representation, report: &DiagnosisReport) -> Result<bool, ReportError> {
    let field = rep.field();
    if report.field.p != field.p() || report.field.e != field.e() {
        return Err(ReportError::InputMismatch {
            field: "field",
            detail: format!(
                "report says GF({}^{}), module is over GF({}^{})",
                report.field.p,
                report.field.e,
                field.p(),
                field.e()
            ),
        });
    }
    if report.dim != rep.dim() {
        return Err(ReportError::InputMismatch {
            field: "dim",
            detail: format!("report says {}, module has {}", report.dim, rep.dim()),
        });
    }
    match &report.witness {
        None => Ok(report.verdict == "very_simple"),
        Some(payload) => {
            let diag = payload.to_diagnosis(rep)?;
            if diag.bucket() != report.verdict {
                return Ok(false);
            }
            if !verify_diagnosis(rep, &diag) {
                return Ok(false);
            }
            if let Some(all) = &report.all_witnesses {
                for w in all {
                    let d = w.to_diagnosis(rep)?;
                    if !verify_diagnosis(rep, &d) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
    }
}
