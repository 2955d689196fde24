//! The affine chart `z = 1`, its cyclic-cover structure and the checks on it.

use num_integer::Integer;

use super::{weight_tuple, EmbeddingData};
use crate::algebra::{Laurent, WeightVector};
use crate::dpd::NormalFormData;
use crate::error::{Error, Result};
use crate::util::int;
use crate::{QLaurent, QMultiPoly, QPoly, QRatFunc};

/// Names of the three-variable chart rings.
pub const XYS: [&str; 3] = ["x", "y", "s"];

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;
const S: usize = 3;

/// `F(x, y, 1, s)` with the characters of the order-`d` cyclic group on `(x, y, s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringPresentation {
    /// Still over `(x, y, z, s)`; `z` does not occur.
    pub relation: QMultiPoly,
    pub action_exponents: [i64; 3],
    pub order: i64,
}

impl CoveringPresentation {
    pub fn relation_string(&self) -> String {
        self.relation.display_with(&["x", "y", "z", "s"]).to_string()
    }
}

/// Open set `G != 0` in the weighted projective plane on `(x, y, s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZElimination {
    pub equation: QMultiPoly,
    pub weights: WeightVector,
    pub all_weights_positive: bool,
}

impl ZElimination {
    pub fn equation_string(&self) -> String {
        self.equation.display_with(&XYS).to_string()
    }

    pub fn ambient_string(&self) -> String {
        weight_tuple(&self.weights.0)
    }

    pub fn presentation(&self) -> String {
        format!("D_+({}) in {}", self.equation_string(), self.ambient_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalCover {
    pub equation: QMultiPoly,
    pub action_exponents: [i64; 3],
    pub order: i64,
}

impl UniversalCover {
    pub fn equation_string(&self) -> String {
        self.equation.display_with(&XYS).to_string()
    }
}

fn action_exponents(nf: &NormalFormData) -> [i64; 3] {
    let d = nf.d();
    [nf.e_plus().rem_euclid(d), (nf.k() * nf.e_minus()).rem_euclid(d), 1i64.rem_euclid(d)]
}

pub fn dehomogenize(e: &EmbeddingData) -> CoveringPresentation {
    CoveringPresentation {
        relation: e.f.specialize(Z, &int(1)),
        action_exponents: action_exponents(&e.source),
        order: e.source.d(),
    }
}

fn poly_in_s(p: &QPoly, s_shift: u32) -> QMultiPoly {
    let mut out = QMultiPoly::zero(4);
    for (j, c) in p.coeffs().iter().enumerate() {
        out = &out + &QMultiPoly::term(c.clone(), vec![0, 0, 0, s_shift + j as u32]);
    }
    out
}

/// `x^k y - s^(k(e+ + e-)) Q(s^d)`, built directly from the normal form data.
pub fn covering_relation(nf: &NormalFormData) -> Result<QMultiPoly> {
    let shift = u32::try_from(nf.k() * (nf.e_plus() + nf.e_minus()))
        .map_err(|_| Error::Overflow("s exponent".into()))?;
    let k = u32::try_from(nf.k()).map_err(|_| Error::Overflow("k".into()))?;
    let q_cover = nf.q().compose_power(nf.d() as usize)?;
    Ok(&QMultiPoly::term(int(1), vec![k, 1, 0, 0]) - &poly_in_s(&q_cover, shift))
}

/// Substitutes `x = s^e+ u`, `y = s^(k e-) Q(s^d) u^-k`, `z = 1` into `relation`
/// and tests for exact vanishing in `Q(s)[u, u^-1]`.
pub fn check_parametrization(nf: &NormalFormData, relation: &QMultiPoly) -> Result<bool> {
    let s = QRatFunc::var();
    let q_cover = QRatFunc::from_poly(nf.q().compose_power(nf.d() as usize)?);
    let x = QLaurent::term(s.pow(nf.e_plus())?, 1);
    let y = Laurent::term(&s.pow(nf.k() * nf.e_minus())? * &q_cover, -nf.k());
    let values = [x, y, QLaurent::one(), QLaurent::term(s, 0)];
    Ok(relation.eval_laurent(&values)?.is_zero())
}

pub fn parametrization_check(nf: &NormalFormData) -> Result<bool> {
    check_parametrization(nf, &covering_relation(nf)?)
}

/// Every monomial of `relation` carries the same character
/// `a e_x + b e_y + c e_s (mod d)`; `z` is ignored.
pub fn check_character(relation: &QMultiPoly, exponents: [i64; 3], d: i64) -> bool {
    let mut chars = relation.terms().map(|(m, _)| {
        let e = &m.0;
        (i64::from(e[X]) * exponents[0] + i64::from(e[Y]) * exponents[1] + i64::from(e[S]) * exponents[2])
            .rem_euclid(d)
    });
    match chars.next() {
        Some(first) => chars.all(|c| c == first),
        None => true,
    }
}

pub fn character_check(nf: &NormalFormData) -> Result<bool> {
    Ok(check_character(&covering_relation(nf)?, action_exponents(nf), nf.d()))
}

/// When `z` occurs only as `c * z` with constant `c`, solves `F = 0` for
/// `z = -G` and returns the open set `G != 0` on the remaining variables.
pub fn eliminate_z(e: &EmbeddingData) -> Option<ZElimination> {
    let with_z = e.f.terms_with(Z);
    let [(mono, coeff)] = with_z.as_slice() else {
        return None;
    };
    if mono.0 != [0, 0, 1, 0] {
        return None;
    }
    let coeff = (*coeff).clone();
    let rest = &e.f - &QMultiPoly::term(coeff.clone(), vec![0, 0, 1, 0]);
    let equation = rest.scale(&(int(1) / coeff)).remove_var(Z).ok()?;
    let w = &e.weights.0;
    let weights = WeightVector(vec![w[X], w[Y], w[S]]);
    Some(ZElimination { equation, all_weights_positive: weights.all_positive(), weights })
}

/// `x^k y - (s^d - 1)` with the characters `(1, -k, e)` modulo `d`.
pub fn universal_cover_form(e: i64, d: i64, k: i64) -> Result<UniversalCover> {
    if d < 1 || e < 1 {
        return Err(Error::InvalidArgument(format!("need e, d >= 1, got e = {e}, d = {d}")));
    }
    if e.gcd(&d) != 1 {
        return Err(Error::InvalidArgument(format!("gcd(e, d) = gcd({e}, {d}) != 1")));
    }
    if k <= 1 {
        return Err(Error::InvalidArgument(format!("k = {k} must exceed 1")));
    }
    let kk = u32::try_from(k).map_err(|_| Error::Overflow("k".into()))?;
    let dd = u32::try_from(d).map_err(|_| Error::Overflow("d".into()))?;
    let equation = &(&QMultiPoly::term(int(1), vec![kk, 1, 0]) - &QMultiPoly::term(int(1), vec![0, 0, dd]))
        + &QMultiPoly::constant(3, int(1));
    Ok(UniversalCover {
        equation,
        action_exponents: [1i64.rem_euclid(d), (-k).rem_euclid(d), e.rem_euclid(d)],
        order: d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{build_embedding, positive_weight_embedding, toric_replacement};

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    fn nf(d: i64, ep: i64, em: i64, k: i64, q: QPoly) -> NormalFormData {
        NormalFormData::new(d, ep, em, k, q).unwrap()
    }

    #[test]
    fn dehomogenize_examples() {
        let cov = dehomogenize(&build_embedding(&nf(1, 1, 0, 2, p(&[-1, 1]))).unwrap());
        assert_eq!(cov.relation_string(), "x^2*y - s^3 + s^2");
        let data = nf(2, 1, -1, 2, p(&[-1, 1]));
        let cov = dehomogenize(&build_embedding(&data).unwrap());
        assert_eq!(cov.relation_string(), "x^2*y - s^2 + 1");
        assert_eq!(cov.relation, covering_relation(&data).unwrap());
        assert_eq!(cov.action_exponents, [1, 0, 1]);
        let toric = nf(3, 2, 1, 4, QPoly::one());
        let cov = dehomogenize(&build_embedding(&toric).unwrap());
        assert_eq!(cov.relation_string(), "-s^12 + x^4*y");
        let rep = toric_replacement(&toric).unwrap().unwrap();
        assert_eq!(dehomogenize(&rep).relation_string(), "-s^3 + x*y");
    }

    #[test]
    fn alpha_shift_keeps_affine_model() {
        let data = nf(2, 1, -1, 3, p(&[-1, 1]));
        assert_eq!(
            dehomogenize(&positive_weight_embedding(&data).unwrap()).relation,
            dehomogenize(&build_embedding(&data).unwrap()).relation
        );
    }

    #[test]
    fn parametrization_examples() {
        let dg = nf(1, 1, 0, 2, p(&[-1, 1]));
        assert!(parametrization_check(&dg).unwrap());
        let relation = covering_relation(&dg).unwrap();
        let corrupted = crate::embedding::corrupt_first_coefficient(&relation);
        assert!(!check_parametrization(&dg, &corrupted).unwrap());
        assert!(parametrization_check(&nf(3, 2, -1, 2, p(&[-2, 0, 1]))).unwrap());
    }

    #[test]
    fn character_examples() {
        assert!(character_check(&nf(4, 3, -1, 3, p(&[2, -3, 1]))).unwrap());
        // x^2 y - s^3 with d = 2, e+ = 1, e- = 0
        let bad = &QMultiPoly::term(int(1), vec![2, 1, 0, 0]) - &QMultiPoly::term(int(1), vec![0, 0, 0, 3]);
        assert!(!check_character(&bad, [1, 0, 1], 2));
        assert!(character_check(&nf(3, 1, 2, 2, QPoly::one())).unwrap());
    }

    #[test]
    fn eliminate_examples() {
        let e = build_embedding(&nf(3, 1, -1, 2, p(&[-1, 1]))).unwrap();
        let el = eliminate_z(&e).unwrap();
        assert_eq!(el.presentation(), "D_+(x^2*y - s^3) in P(1,1,1)");
        let dg = build_embedding(&nf(2, 1, 0, 3, p(&[-1, 1]))).unwrap();
        assert!(eliminate_z(&dg).is_none());
        let e = build_embedding(&nf(5, 2, -2, 2, p(&[-1, 1]))).unwrap();
        assert_eq!(eliminate_z(&e).unwrap().presentation(), "D_+(-s^5 + x^2*y) in P(2,1,1)");
        let e = build_embedding(&nf(3, 2, -2, 2, p(&[-1, 1]))).unwrap();
        let el = eliminate_z(&e).unwrap();
        assert_eq!(el.weights.0, vec![2, -1, 1]);
        assert!(!el.all_weights_positive);
    }

    #[test]
    fn universal_cover_examples() {
        let c = universal_cover_form(1, 3, 2).unwrap();
        assert_eq!(c.equation_string(), "x^2*y - s^3 + 1");
        assert_eq!(c.action_exponents, [1, 1, 1]);
        let c = universal_cover_form(2, 3, 2).unwrap();
        assert_eq!(c.action_exponents, [1, 1, 2]);
        assert!(universal_cover_form(2, 4, 2).is_err());
        assert!(universal_cover_form(1, 3, 1).is_err());
    }
}
