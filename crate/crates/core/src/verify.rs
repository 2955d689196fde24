//! Grid runners for the acceptance criteria and the negative controls.
//!
//! Every runner is pure and returns a [`CriterionReport`] listing the failing
//! cells; an empty failure list means the criterion holds on its grid. Wall
//! time is measured by callers, so reports of equal runs are identical.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{WeightVector, WeightedDegree};
use crate::divisor::QDivisor;
use crate::dpd::{DpdPair, NormalFormData};
use crate::embedding::{
    build_embedding, character_check, check_character, check_parametrization, covering_relation,
    dehomogenize, eliminate_z, invariant_monomials, localized_degree_zero_count, minimal_alpha,
    normality_flags, parametrization_check, positive_weight_embedding, toric_replacement,
    universal_cover_form, corrupt_first_coefficient,
};
use crate::error::Result;
use crate::gizatullin::{
    action_consistency_check, check_generator_relations, find_gamma, generator_relations_check,
    generators, plane_embedding, toric_iso_check, GizatullinParams,
};
use crate::util::{int, rat};
use crate::{QMultiPoly, QPoly, QRatFunc, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: &'static str,
    pub title: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CriterionReport {
    fn new(id: &'static str, title: &'static str) -> Self {
        Self { id, title, cases: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.cases > 0
    }

    fn record(&mut self, ok: bool, locus: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(locus());
        }
    }

    fn record_result(&mut self, res: Result<bool>, locus: impl FnOnce() -> String) {
        match res {
            Ok(ok) => self.record(ok, locus),
            Err(e) => {
                let at = locus();
                self.record(false, || format!("{at}: error: {e}"));
            }
        }
    }
}

fn mono(exps: [u32; 4]) -> QMultiPoly {
    QMultiPoly::term(int(1), exps.to_vec())
}

/// `(-(1/d)[0], -(1/(n-d))[1])`
pub fn dg_pair(n: i64, d: i64) -> DpdPair {
    DpdPair::new(QDivisor::point(int(0), rat(-1, d)), QDivisor::point(int(1), rat(-1, n - d)))
}

/// `x^(n-d) y - s^(n-d) (s^d - z)`, assembled term by term.
pub fn dg_expected_equation(n: i64, d: i64) -> QMultiPoly {
    let k = (n - d) as u32;
    let s_part = &mono([0, 0, 0, d as u32]) - &mono([0, 0, 1, 0]);
    &mono([k, 1, 0, 0]) - &(&mono([0, 0, 0, k]) * &s_part)
}

/// `x^(n-1) y - (s - 1) s^(n-1)`
pub fn dg_expected_chart(n: i64) -> QMultiPoly {
    let k = (n - 1) as u32;
    let s_minus_one = &mono([0, 0, 0, 1]) - &QMultiPoly::constant(4, int(1));
    &mono([k, 1, 0, 0]) - &(&s_minus_one * &mono([0, 0, 0, k]))
}

/// Normal form, plain embedding and chart of `dg_pair(n, d)`.
pub fn dg_cell(n: i64, d: i64) -> Result<(NormalFormData, crate::EmbeddingData)> {
    let (nf, _) = dg_pair(n, d).to_normal_form()?;
    let e = build_embedding(&nf)?;
    Ok((nf, e))
}

pub fn a1_dg_family() -> CriterionReport {
    let mut r = CriterionReport::new("A1", "DG family equations, weights and charts");
    for n in 2..=8 {
        for d in 1..n {
            let res = dg_cell(n, d).map(|(_, e)| {
                let mut ok = e.f == dg_expected_equation(n, d)
                    && e.weights.0 == [1, d, d, 1]
                    && e.degree == n
                    && e.is_homogeneous();
                if d == 1 {
                    ok &= dehomogenize(&e).relation == dg_expected_chart(n);
                }
                ok
            });
            r.record_result(res, || format!("n={n} d={d}"));
        }
    }
    r
}

/// `1, t - 1, (t - 1)(t - 2), t^2 - 2`
pub fn q_grid() -> Vec<QPoly> {
    let p = |c: &[i64]| QPoly::from_coeffs(c.iter().map(|&x| int(x)).collect());
    vec![QPoly::one(), p(&[-1, 1]), p(&[2, -3, 1]), p(&[-2, 0, 1])]
}

/// All normal forms of the oracle grid.
pub fn nf_grid() -> Vec<NormalFormData> {
    let mut out = Vec::new();
    for d in 1..=4 {
        for ep in 1..=d {
            for em in -ep..=2 {
                for k in 1..=3 {
                    for q in q_grid() {
                        out.push(NormalFormData::new(d, ep, em, k, q).expect("grid cell is a valid normal form"));
                    }
                }
            }
        }
    }
    out
}

fn nf_locus(nf: &NormalFormData) -> String {
    format!("d={} e+={} e-={} k={} Q={}", nf.d(), nf.e_plus(), nf.e_minus(), nf.k(), nf.q())
}

fn a2_cell(nf: &NormalFormData) -> Result<bool> {
    let e = build_embedding(nf)?;
    let expected_degree = nf.k() * (nf.e_plus() + nf.e_minus()) + nf.d() * nf.deg_q();
    let homogeneous = matches!(
        e.f.weighted_degree(&e.weights)?,
        WeightedDegree::Homogeneous(w) if w == expected_degree
    ) && e.degree == expected_degree;
    let chart = dehomogenize(&e).relation == covering_relation(nf)?;
    Ok(homogeneous && chart && parametrization_check(nf)? && character_check(nf)?)
}

pub fn a2_oracle_grid() -> CriterionReport {
    let mut r = CriterionReport::new("A2", "homogeneity, chart, parametrization and character oracles");
    for nf in nf_grid() {
        r.record_result(a2_cell(&nf), || nf_locus(&nf));
    }
    r
}

fn a3_cell(nf: &NormalFormData) -> Result<bool> {
    let e = positive_weight_embedding(nf)?;
    let alpha = e.flags.alpha_used;
    let positive = e.weights.all_positive() && e.flags.all_weights_positive && e.is_homogeneous();
    let y_weight = |a: u32| nf.k() * nf.e_minus() + nf.d() * (nf.deg_q() + i64::from(a));
    let minimal = alpha == minimal_alpha(nf) && (alpha == 0 || y_weight(alpha - 1) <= 0);
    let same_chart = dehomogenize(&e).relation == dehomogenize(&build_embedding(nf)?).relation;
    Ok(positive && minimal && same_chart)
}

pub fn a3_positive_weights() -> CriterionReport {
    let mut r = CriterionReport::new("A3", "positive-weight variant with minimal alpha");
    for nf in nf_grid() {
        r.record_result(a3_cell(&nf), || nf_locus(&nf));
    }
    r
}

fn a4_cell(nf: &NormalFormData) -> Result<bool> {
    let flags = normality_flags(nf)?;
    let zero_sum = nf.e_plus() + nf.e_minus() == 0;
    let expected = nf.k() == 1 || (zero_sum && nf.q().is_squarefree()?);
    let mut ok = flags.certified == expected && build_embedding(nf)?.flags.normality_certified == expected;
    if nf.is_toric() {
        if nf.k() > 1 && !zero_sum {
            ok &= !flags.certified;
        }
        let rep = toric_replacement(nf)?.expect("toric normal form has a replacement");
        let n = (nf.e_plus() + nf.e_minus()) as u32;
        let expected_f = &mono([1, 1, 0, 0]) - &mono([0, 0, 0, n]);
        ok &= rep.f == expected_f
            && rep.weights.0 == [nf.e_plus(), nf.e_minus(), nf.d(), 1]
            && rep.flags.normality_certified
            && rep.variables[1] == "y'";
    } else {
        ok &= toric_replacement(nf)?.is_none();
    }
    Ok(ok)
}

pub fn a4_normality() -> CriterionReport {
    let mut r = CriterionReport::new("A4", "normality certificates, toric replacement, smoothness");
    for nf in nf_grid() {
        r.record_result(a4_cell(&nf), || nf_locus(&nf));
    }
    for n in 2..=8 {
        for d in 1..n {
            let res = dg_pair(n, d).smoothness_check().map(|s| s.literal && s.pointwise);
            r.record_result(res, || format!("smoothness n={n} d={d}"));
        }
    }
    r
}

fn a5_cell(gp: &GizatullinParams) -> Result<bool> {
    let (e, m, c) = (gp.e(), gp.m(), gp.c());
    let pe = plane_embedding(gp)?;
    let arithmetic = pe.a + pe.b == c * m
        && pe.a.gcd(&pe.b) == 1
        && (1..c * m).contains(&pe.a)
        && (pe.a - e).rem_euclid(m) == 0
        && (pe.b + e).rem_euclid(m) == 0
        && pe.a == e - pe.gamma * m
        && (pe.gamma * m - e).gcd(&c) == 1;
    let gamma = find_gamma(e, m, c)?;
    let gamma_ok = (0..=c).contains(&gamma) && (gamma * m - e).gcd(&c) == 1;
    Ok(arithmetic && gamma_ok && generator_relations_check(gp)? && action_consistency_check(&pe, gp)?)
}

pub fn gizatullin_grid() -> Vec<GizatullinParams> {
    let mut out = Vec::new();
    for m in 2..=6 {
        for e in 1..m {
            if e.gcd(&m) != 1 {
                continue;
            }
            for c in 1..=5 {
                out.push(GizatullinParams::standard(e, m, c).expect("grid cell is valid"));
            }
        }
    }
    out
}

pub fn a5_gizatullin() -> CriterionReport {
    let mut r = CriterionReport::new("A5", "non-toric Gizatullin plane embeddings");
    for gp in gizatullin_grid() {
        r.record_result(a5_cell(&gp), || format!("e={} m={} c={}", gp.e(), gp.m(), gp.c()));
    }
    r
}

fn random_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    rat(rng.gen_range(lo..=hi), rng.gen_range(1..=5))
}

fn random_basis_poly(rng: &mut ChaCha8Rng) -> QPoly {
    loop {
        let p = if rng.gen_bool(0.5) {
            QPoly::linear_root(int(rng.gen_range(-4..=4)))
        } else {
            QPoly::from_coeffs(vec![int(rng.gen_range(-4..=4)), int(rng.gen_range(-4..=4)), int(1)])
        };
        if p.is_squarefree().unwrap_or(false) {
            return p;
        }
    }
}

/// A valid pair on at most three basis polynomials of degree at most 2 with
/// coefficient denominators at most 5.
pub fn random_pair(rng: &mut ChaCha8Rng) -> DpdPair {
    let count = rng.gen_range(1..=3);
    let mut polys: Vec<QPoly> = Vec::new();
    while polys.len() < count {
        let p = random_basis_poly(rng);
        if !polys.contains(&p) {
            polys.push(p);
        }
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for p in polys {
        let cp = random_rational(rng, -6, 6);
        let slack = random_rational(rng, 0, 6);
        let cm = -cp.clone() - slack;
        plus.push((p.clone(), cp));
        minus.push((p, cm));
    }
    DpdPair::new(
        QDivisor::from_entries(plus).expect("random entries are valid"),
        QDivisor::from_entries(minus).expect("random entries are valid"),
    )
}

pub fn a6_random_pairs(seed: u64, count: usize) -> CriterionReport {
    let mut r = CriterionReport::new("A6", "graded ring closure on random pairs");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for idx in 0..count {
        let pair = random_pair(&mut rng);
        let res = (|| {
            if !pair.check().is_valid() || !pair.ring_closure_check(6)? {
                return Ok(false);
            }
            for i in -6..=6 {
                if !pair.generator_bound_check(i)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })();
        r.record_result(res, || format!("#{idx} {pair}"));
    }
    r
}

pub fn a7_monomial_counts() -> CriterionReport {
    let mut r = CriterionReport::new("A7", "invariant monomials versus localized degree 0");
    for d in 2..=12 {
        for e in 1..d {
            if e.gcd(&d) != 1 {
                continue;
            }
            let quotient = invariant_monomials(&[1, e], d, 12).len();
            let localized = localized_degree_zero_count(e, d, 12);
            r.record(quotient == localized, || format!("e={e} d={d}: {quotient} != {localized}"));
        }
    }
    r
}

fn a8_cell(e: i64, d: i64, k: i64) -> Result<bool> {
    let nf = NormalFormData::new(d, e, -e, k, QPoly::linear_root(int(1)))?;
    let Some(el) = eliminate_z(&build_embedding(&nf)?) else {
        return Ok(false);
    };
    let expected = &QMultiPoly::term(int(1), vec![k as u32, 1, 0]) - &QMultiPoly::term(int(1), vec![0, 0, d as u32]);
    let weights_ok = el.weights == WeightVector(vec![e, d - k * e, 1]) && el.all_weights_positive == (d - k * e > 0);
    let cover = universal_cover_form(e, d, k)?;
    let cover_expected = &expected + &QMultiPoly::constant(3, int(1));
    let cover_ok = cover.equation == cover_expected
        && cover.action_exponents == [1 % d, (-k).rem_euclid(d), e % d]
        && cover.order == d;
    Ok(el.equation == expected && weights_ok && cover_ok)
}

pub fn a8_emitters() -> CriterionReport {
    let mut r = CriterionReport::new("A8", "z-elimination and universal cover emitters");
    for e in 1..=3 {
        for d in e..=6 {
            if e.gcd(&d) != 1 {
                continue;
            }
            for k in 2..=3 {
                r.record_result(a8_cell(e, d, k), || format!("e={e} d={d} k={k}"));
            }
        }
    }
    r
}

/// Names accepted by [`inject`].
pub const ORACLES: [&str; 10] = [
    "homogeneous",
    "parametrization",
    "character",
    "generators",
    "action",
    "membership",
    "replay",
    "toric-iso",
    "monomials",
    "dg-golden",
];

/// Runs one oracle on a corrupted input. `Ok(false)` means the oracle
/// rejected the corruption, which is the expected outcome.
pub fn inject(oracle: &str) -> Result<Option<bool>> {
    let dg_nf = NormalFormData::new(2, 1, 0, 3, QPoly::linear_root(int(1)))?;
    Ok(Some(match oracle {
        "homogeneous" => {
            let e = build_embedding(&dg_nf)?;
            let mut w = e.weights.clone();
            w.0[3] += 1;
            matches!(e.f.weighted_degree(&w)?, WeightedDegree::Homogeneous(_))
        }
        "parametrization" => {
            check_parametrization(&dg_nf, &corrupt_first_coefficient(&covering_relation(&dg_nf)?))?
        }
        "character" => {
            // add the monomial s^2, whose character 0 differs from that of x^3 y
            let rel = &covering_relation(&dg_nf)? + &mono([0, 0, 0, 2]);
            check_character(&rel, [1, 0, 1], 2)
        }
        "generators" => {
            let gp = GizatullinParams::standard(2, 3, 2)?;
            let mut g = generators(&gp)?;
            g.u_plus = &g.u_plus + &g.u_plus;
            check_generator_relations(&gp, &g)?
        }
        "action" => {
            let gp = GizatullinParams::standard(2, 3, 2)?;
            let mut pe = plane_embedding(&gp)?;
            pe.a += 1;
            action_consistency_check(&pe, &gp)?
        }
        "membership" => {
            // g_1 / t is not a section of degree 1
            let pair = dg_pair(5, 2);
            let f = pair.section_generator(1).checked_div(&QRatFunc::var())?;
            pair.contains(&f, 1)?
        }
        "replay" => {
            let pair = dg_pair(5, 2);
            let (nf, mut t) = pair.to_normal_form()?;
            t.witness = &t.witness * &QRatFunc::from_poly(QPoly::linear_root(int(7)));
            t.replay(&pair)? == nf.to_pair()
        }
        "toric-iso" => toric_iso_check(7, 2, 3)?,
        "monomials" => invariant_monomials(&[1, 2], 5, 12).len() == localized_degree_zero_count(2, 5, 11),
        "dg-golden" => {
            let (_, e) = dg_cell(5, 2)?;
            corrupt_first_coefficient(&e.f) == dg_expected_equation(5, 2)
        }
        _ => return Ok(None),
    }))
}

pub fn a9_negative_controls() -> CriterionReport {
    let mut r = CriterionReport::new("A9", "negative controls reject single corruptions");
    for name in ORACLES {
        let res = inject(name).map(|v| v == Some(false));
        r.record_result(res, || format!("oracle {name} accepted a corrupted input"));
    }
    // the uncorrupted inputs must still be accepted
    let gp = GizatullinParams::standard(2, 3, 2).expect("valid parameters");
    let clean = (|| {
        let nf = NormalFormData::new(2, 1, 0, 3, QPoly::linear_root(int(1)))?;
        Ok(parametrization_check(&nf)?
            && character_check(&nf)?
            && generator_relations_check(&gp)?
            && action_consistency_check(&plane_embedding(&gp)?, &gp)?)
    })();
    r.record_result(clean, || "clean inputs rejected".into());
    r
}

/// Default seed and size of the random-pair criterion.
pub const A6_SEED: u64 = 20_240_917;
pub const A6_COUNT: usize = 20;

/// A1 to A9 in order.
pub fn run_default_grid() -> Vec<CriterionReport> {
    vec![
        a1_dg_family(),
        a2_oracle_grid(),
        a3_positive_weights(),
        a4_normality(),
        a5_gizatullin(),
        a6_random_pairs(A6_SEED, A6_COUNT),
        a7_monomial_counts(),
        a8_emitters(),
        a9_negative_controls(),
    ]
}

/// The cheap subset used by `verify --grid quick`.
pub fn run_quick_grid() -> Vec<CriterionReport> {
    vec![a1_dg_family(), a7_monomial_counts(), a8_emitters(), a9_negative_controls()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dg_formulas_agree_with_construction() {
        let (_, e) = dg_cell(5, 2).unwrap();
        assert_eq!(e.f, dg_expected_equation(5, 2));
        let (_, e) = dg_cell(4, 1).unwrap();
        assert_eq!(dehomogenize(&e).relation, dg_expected_chart(4));
    }

    #[test]
    fn random_pairs_are_valid_and_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(3);
        let mut b = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let p = random_pair(&mut a);
            assert!(p.check().is_valid());
            assert_eq!(p, random_pair(&mut b));
        }
    }

    #[test]
    fn every_injection_is_rejected() {
        for name in ORACLES {
            assert_eq!(inject(name).unwrap(), Some(false), "{name}");
        }
        assert_eq!(inject("nope").unwrap(), None);
    }

    #[test]
    fn quick_grid_passes() {
        for r in run_quick_grid() {
            assert!(r.passed(), "{r:?}");
        }
    }
}
