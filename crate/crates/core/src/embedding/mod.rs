//! Compiles normal form data `(d, e+, e-, k, Q)` into the weighted
//! homogeneous hypersurface
//!
//! ```text
//! F = x^k y - s^(k(e+ + e-)) Q(s^d / z) z^(deg Q + alpha)
//! ```
//!
//! with weights `(e+, k e- + d (deg Q + alpha), d, 1)` on `(x, y, z, s)`.
//! The surface is the normalization of the open set `z != 0` of `F = 0`.
//! `alpha = 0` is the plain construction; a positive `alpha` makes every
//! weight positive.

mod cover;
mod invariants;

pub use cover::{
    character_check, check_character, check_parametrization, covering_relation, dehomogenize,
    eliminate_z, parametrization_check, universal_cover_form, CoveringPresentation,
    UniversalCover, ZElimination, XYS,
};
pub use invariants::{invariant_monomials, localized_degree_zero_count};

use serde::Serialize;

use crate::algebra::{WeightVector, WeightedDegree, XYZS};
use crate::dpd::NormalFormData;
use crate::error::{Error, Result};
use crate::util::int;
use crate::{QMultiPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingFlags {
    pub all_weights_positive: bool,
    pub normality_certified: bool,
    pub toric: bool,
    pub alpha_used: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NormalityFlags {
    pub k_eq_1: bool,
    pub zero_sum_reduced: bool,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingData {
    pub f: QMultiPoly,
    pub weights: WeightVector,
    pub degree: i64,
    pub flags: EmbeddingFlags,
    pub variables: [&'static str; 4],
    pub source: NormalFormData,
}

impl EmbeddingData {
    /// Ambient weight tuple, in variable order.
    pub fn ambient(&self) -> &[i64] {
        &self.weights.0
    }

    pub fn ambient_string(&self) -> String {
        weight_tuple(&self.weights.0)
    }

    pub fn equation(&self) -> String {
        self.f.display_with(&self.variables).to_string()
    }

    pub fn is_homogeneous(&self) -> bool {
        matches!(
            self.f.weighted_degree(&self.weights),
            Ok(WeightedDegree::Homogeneous(w)) if w == self.degree
        )
    }
}

pub(crate) fn weight_tuple(w: &[i64]) -> String {
    let inner: Vec<String> = w.iter().map(i64::to_string).collect();
    format!("P({})", inner.join(","))
}

fn exponent(n: i64, what: &str) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::Overflow(format!("{what} exponent {n}")))
}

fn compile(nf: &NormalFormData, alpha: u32) -> Result<EmbeddingData> {
    let (d, k) = (nf.d(), nf.k());
    let deg_q = nf.deg_q();
    let shift = k * (nf.e_plus() + nf.e_minus());
    let z_total = deg_q + i64::from(alpha);

    let mut f = QMultiPoly::term(int(1), vec![exponent(k, "x")?, 1, 0, 0]);
    for (j, q) in nf.q().coeffs().iter().enumerate() {
        let j = j as i64;
        let s_exp = exponent(shift + d * j, "s")?;
        let z_exp = exponent(z_total - j, "z")?;
        f = &f - &QMultiPoly::term(q.clone(), vec![0, 0, z_exp, s_exp]);
    }
    let weights = WeightVector(vec![nf.e_plus(), k * nf.e_minus() + d * z_total, d, 1]);
    let normality = normality_flags(nf)?;
    Ok(EmbeddingData {
        f,
        flags: EmbeddingFlags {
            all_weights_positive: weights.all_positive(),
            normality_certified: normality.certified,
            toric: nf.is_toric(),
            alpha_used: alpha,
        },
        weights,
        degree: shift + d * z_total,
        variables: XYZS,
        source: nf.clone(),
    })
}

/// The hypersurface with `alpha = 0`; the `y` weight may be nonpositive.
pub fn build_embedding(nf: &NormalFormData) -> Result<EmbeddingData> {
    compile(nf, 0)
}

/// Smallest `alpha >= 0` making `k e- + d (deg Q + alpha)` positive.
pub fn minimal_alpha(nf: &NormalFormData) -> u32 {
    let base = nf.k() * nf.e_minus() + nf.d() * nf.deg_q();
    if base > 0 {
        0
    } else {
        (base.unsigned_abs() / nf.d() as u64 + 1) as u32
    }
}

/// The variant with the extra `z^alpha` factor and strictly positive weights.
pub fn positive_weight_embedding(nf: &NormalFormData) -> Result<EmbeddingData> {
    compile(nf, minimal_alpha(nf))
}

/// Closed normality certificates: `k = 1`, or `e+ + e- = 0` with `D0` reduced.
/// `D0 = 0` counts as reduced.
pub fn normality_flags(nf: &NormalFormData) -> Result<NormalityFlags> {
    let k_eq_1 = nf.k() == 1;
    let zero_sum_reduced = nf.e_plus() + nf.e_minus() == 0 && nf.q().is_squarefree()?;
    Ok(NormalityFlags { k_eq_1, zero_sum_reduced, certified: k_eq_1 || zero_sum_reduced })
}

/// For `Q = 1`: the normal model `x y' - s^(e+ + e-)` in `P(e+, e-, d, 1)`,
/// where `y' = s^(e+ + e-)/x` and `y'^k = y`.
pub fn toric_replacement(nf: &NormalFormData) -> Result<Option<EmbeddingData>> {
    if !nf.is_toric() {
        return Ok(None);
    }
    let mut data = compile(&nf.with_k(1)?, 0)?;
    data.variables = ["x", "y'", "z", "s"];
    Ok(Some(data))
}

/// `F` with one coefficient changed, used by negative controls.
pub fn corrupt_first_coefficient(f: &QMultiPoly) -> QMultiPoly {
    match f.terms().next() {
        Some((m, c)) => {
            let bump: Rational = c.clone() + int(1);
            let delta = &QMultiPoly::term(bump, m.0.clone()) - &QMultiPoly::term(c.clone(), m.0.clone());
            f + &delta
        }
        None => f.clone(),
    }
}
