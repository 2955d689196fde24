//! Serializable reports. Field order is fixed by declaration order, so the
//! JSON output of equal inputs is byte-identical.

use serde::Serialize;

use crate::dpd::{NormalFormData, SmoothnessFlags, Transcript};
use crate::embedding::{
    character_check, check_parametrization, dehomogenize, normality_flags, EmbeddingData, EmbeddingFlags,
    NormalityFlags, UniversalCover, ZElimination,
};
use crate::error::Result;
use crate::gizatullin::{Classification, GizatullinParams, PlaneEmbedding, ToricEmbedding};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalFormReport {
    pub d: i64,
    pub e_plus: i64,
    pub e_minus: i64,
    pub k: i64,
    #[serde(rename = "Q")]
    pub q: String,
}

impl From<&NormalFormData> for NormalFormReport {
    fn from(nf: &NormalFormData) -> Self {
        Self { d: nf.d(), e_plus: nf.e_plus(), e_minus: nf.e_minus(), k: nf.k(), q: nf.q().to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranscriptReport {
    pub interchanged: bool,
    pub alpha: String,
    pub beta: String,
    pub witness: String,
}

impl From<&Transcript> for TranscriptReport {
    fn from(t: &Transcript) -> Self {
        Self {
            interchanged: t.interchanged,
            alpha: t.alpha.to_string(),
            beta: t.beta.to_string(),
            witness: t.witness.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizeReport {
    pub normal_form: NormalFormReport,
    pub transcript: TranscriptReport,
    pub pair: String,
}

pub fn normalize_report(nf: &NormalFormData, t: &Transcript) -> NormalizeReport {
    NormalizeReport { normal_form: nf.into(), transcript: t.into(), pair: nf.to_pair().to_string() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EmbedChecks {
    pub homogeneous: bool,
    pub parametrization: bool,
    pub character: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbedReport {
    #[serde(rename = "F")]
    pub f: String,
    pub weights: Vec<i64>,
    pub ambient: String,
    pub degree: i64,
    pub flags: EmbeddingFlags,
    pub checks: EmbedChecks,
}

impl EmbedReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.homogeneous && self.checks.parametrization && self.checks.character
    }
}

/// Runs the three oracles on `e` itself: the parametrization is substituted
/// into the `z = 1` chart of the emitted equation.
pub fn embed_report(e: &EmbeddingData) -> Result<EmbedReport> {
    let chart = dehomogenize(e);
    Ok(EmbedReport {
        f: e.equation(),
        weights: e.weights.0.clone(),
        ambient: e.ambient_string(),
        degree: e.degree,
        flags: e.flags,
        checks: EmbedChecks {
            homogeneous: e.is_homogeneous(),
            parametrization: check_parametrization(&e.source, &chart.relation)?,
            character: character_check(&e.source)?
                && crate::embedding::check_character(&chart.relation, chart.action_exponents, chart.order),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FullEmbedReport {
    #[serde(flatten)]
    pub embedding: EmbedReport,
    pub normal_form: NormalFormReport,
    pub positive_weight: EmbedReport,
    pub normality: NormalityFlags,
    pub smoothness: SmoothnessReport,
    pub toric_replacement: Option<EmbedReport>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessReport {
    pub literal: bool,
    pub pointwise: bool,
}

impl From<SmoothnessFlags> for SmoothnessReport {
    fn from(s: SmoothnessFlags) -> Self {
        Self { literal: s.literal, pointwise: s.pointwise }
    }
}

pub fn full_embed_report(
    nf: &NormalFormData,
    plain: &EmbeddingData,
    positive: &EmbeddingData,
    replacement: Option<&EmbeddingData>,
    smoothness: SmoothnessFlags,
) -> Result<FullEmbedReport> {
    Ok(FullEmbedReport {
        embedding: embed_report(plain)?,
        normal_form: nf.into(),
        positive_weight: embed_report(positive)?,
        normality: normality_flags(nf)?,
        smoothness: smoothness.into(),
        toric_replacement: replacement.map(embed_report).transpose()?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub a_mod_m: i64,
    pub b_mod_m: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GizatullinReport {
    pub case: &'static str,
    pub ambient: String,
    pub equation: String,
    pub action: Vec<i64>,
    pub gamma: Option<i64>,
    pub invariants: Option<Invariants>,
}

pub fn plane_report(pe: &PlaneEmbedding) -> GizatullinReport {
    GizatullinReport {
        case: "nontoric",
        ambient: pe.ambient_string(),
        equation: pe.equation_string(),
        action: pe.action_exponents.to_vec(),
        gamma: Some(pe.gamma),
        invariants: Some(Invariants { a_mod_m: pe.a.rem_euclid(pe.m), b_mod_m: pe.b.rem_euclid(pe.m) }),
    }
}

pub fn toric_report(t: &ToricEmbedding) -> GizatullinReport {
    GizatullinReport {
        case: "toric",
        ambient: t.ambient_string(),
        equation: t.open_part.to_string(),
        action: vec![t.quotient_exponents[0], t.quotient_exponents[1], t.d],
        gamma: None,
        invariants: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub case: &'static str,
    pub d: Option<i64>,
    pub e: Option<i64>,
    pub m: Option<i64>,
    pub c: Option<i64>,
    pub p: Option<String>,
    pub q: Option<String>,
    pub interchanged: Option<bool>,
    pub witness: Option<String>,
    pub reason: Option<String>,
    pub embedding: Option<GizatullinReport>,
}

pub fn classify_report(c: &Classification) -> Result<ClassifyReport> {
    let empty = ClassifyReport {
        case: "other",
        d: None,
        e: None,
        m: None,
        c: None,
        p: None,
        q: None,
        interchanged: None,
        witness: None,
        reason: None,
        embedding: None,
    };
    Ok(match c {
        Classification::Toric { d, e } => ClassifyReport {
            case: "toric",
            d: Some(*d),
            e: Some(*e),
            embedding: Some(toric_report(&crate::gizatullin::toric_embedding(*d, *e)?)),
            ..empty
        },
        Classification::NonToric { params, interchanged, witness } => ClassifyReport {
            case: "nontoric",
            e: Some(params.e()),
            m: Some(params.m()),
            c: Some(params.c()),
            p: Some(params.p().to_string()),
            q: Some(params.q().to_string()),
            interchanged: Some(*interchanged),
            witness: Some(witness.to_string()),
            embedding: Some(plane_report(&crate::gizatullin::plane_embedding(params)?)),
            ..empty
        },
        Classification::Other { reason } => ClassifyReport { reason: Some(reason.clone()), ..empty },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaneChecks {
    pub generator_relations: bool,
    pub action_consistency: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GizatullinFullReport {
    #[serde(flatten)]
    pub report: GizatullinReport,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub checks: PlaneChecks,
}

pub fn gizatullin_full_report(gp: &GizatullinParams, pe: &PlaneEmbedding) -> Result<GizatullinFullReport> {
    Ok(GizatullinFullReport {
        report: plane_report(pe),
        a: pe.a,
        b: pe.b,
        c: pe.c,
        checks: PlaneChecks {
            generator_relations: crate::gizatullin::generator_relations_check(gp)?,
            action_consistency: crate::gizatullin::action_consistency_check(pe, gp)?,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationReport {
    pub equation: String,
    pub weights: Vec<i64>,
    pub ambient: String,
    pub presentation: String,
    pub all_weights_positive: bool,
}

impl From<&ZElimination> for EliminationReport {
    fn from(z: &ZElimination) -> Self {
        Self {
            equation: z.equation_string(),
            weights: z.weights.0.clone(),
            ambient: z.ambient_string(),
            presentation: z.presentation(),
            all_weights_positive: z.all_weights_positive,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub equation: String,
    pub action: Vec<i64>,
    pub order: i64,
}

impl From<&UniversalCover> for CoverReport {
    fn from(u: &UniversalCover) -> Self {
        Self { equation: u.equation_string(), action: u.action_exponents.to_vec(), order: u.order }
    }
}
