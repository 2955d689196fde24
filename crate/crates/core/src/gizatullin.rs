//! Gizatullin surfaces with finite divisor class group.
//!
//! Toric ones are `A^2 / E_d` with weights `(1, e)` and sit in `P(1, e, d)` as
//! `z != 0`. The others are given by `(-(e/m)[p], (e/m)[p] - c[q])` and are the
//! complement of `u'+ u'- = tau^m` in `P(a, b, c)` with `a + b = cm`.

use num_integer::Integer;

use crate::algebra::MultiPoly;
use crate::divisor::QDivisor;
use crate::dpd::{DpdPair, NormalFormData};
use crate::embedding::weight_tuple;
use crate::error::{Error, Result};
use crate::util::{int, rat};
use crate::{QLaurent, QMultiPoly, QPoly, QRatFunc, Rational};

/// Variable names of the plane equation: `u'+`, `u'-`, `tau`.
pub const PLANE_VARS: [&str; 3] = ["up", "um", "tau"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GizatullinParams {
    e: i64,
    m: i64,
    c: i64,
    p: Rational,
    q: Rational,
}

impl GizatullinParams {
    pub fn new(e: i64, m: i64, c: i64, p: Rational, q: Rational) -> Result<Self> {
        if !(1 <= e && e < m) {
            return Err(Error::InvalidArgument(format!("need 1 <= e < m, got e = {e}, m = {m}")));
        }
        if e.gcd(&m) != 1 {
            return Err(Error::InvalidArgument(format!("e = {e} and m = {m} are not coprime")));
        }
        if c < 1 {
            return Err(Error::InvalidArgument(format!("c = {c} must be at least 1")));
        }
        if p == q {
            return Err(Error::InvalidArgument("p and q must differ".into()));
        }
        Ok(Self { e, m, c, p, q })
    }

    /// Parameters with `p = 0`, `q = 1`.
    pub fn standard(e: i64, m: i64, c: i64) -> Result<Self> {
        Self::new(e, m, c, int(0), int(1))
    }

    pub fn e(&self) -> i64 {
        self.e
    }
    pub fn m(&self) -> i64 {
        self.m
    }
    pub fn c(&self) -> i64 {
        self.c
    }
    pub fn p(&self) -> &Rational {
        &self.p
    }
    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// `(-(e/m)[p], (e/m)[p] - c[q])`
    pub fn to_pair(&self) -> DpdPair {
        let frac = rat(self.e, self.m);
        DpdPair::new(
            QDivisor::point(self.p.clone(), -frac.clone()),
            QDivisor::point(self.p.clone(), frac).add(&QDivisor::point(self.q.clone(), int(-self.c))),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricEmbedding {
    pub d: i64,
    pub e: i64,
    pub ambient: [i64; 3],
    pub open_part: &'static str,
    /// Characters of `E_d` on `(x, y)`.
    pub quotient_exponents: [i64; 2],
    pub torus_action: &'static str,
}

impl ToricEmbedding {
    pub fn ambient_string(&self) -> String {
        weight_tuple(&self.ambient)
    }
}

/// `V_{d,e} = A^2 / E_d` as `z != 0` in `P(1, e, d)`. Coprimality of `e` and
/// `d` is not required; without it the group does not act faithfully.
pub fn toric_embedding(d: i64, e: i64) -> Result<ToricEmbedding> {
    if d < 1 || e < 1 {
        return Err(Error::InvalidArgument(format!("need d, e >= 1, got d = {d}, e = {e}")));
    }
    Ok(ToricEmbedding {
        d,
        e,
        ambient: [1, e, d],
        open_part: "D_+(z)",
        quotient_exponents: [1, e],
        torus_action: "(l1, l2).(x : y : z) = (l1 x : l2 y : z)",
    })
}

/// `(1, e, d)` and `(1, e2, d)` give the same toric surface iff
/// `e = e2` or `e e2 = 1` modulo `d`.
pub fn toric_iso_check(d: i64, e: i64, e2: i64) -> Result<bool> {
    if !(1 <= e && e < d && 1 <= e2 && e2 < d) {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= e, e2 < d, got d = {d}, e = {e}, e2 = {e2}"
        )));
    }
    Ok((e - e2).rem_euclid(d) == 0 || (e * e2).rem_euclid(d) == 1 % d)
}

/// Least `gamma >= 0` with `gcd(gamma m - e, c) = 1`.
pub fn find_gamma(e: i64, m: i64, c: i64) -> Result<i64> {
    if e.gcd(&m) != 1 {
        return Err(Error::InvalidArgument(format!("e = {e} and m = {m} are not coprime")));
    }
    if c < 1 {
        return Err(Error::InvalidArgument(format!("c = {c} must be at least 1")));
    }
    (0..=c)
        .find(|g| (g * m - e).gcd(&c) == 1)
        .ok_or_else(|| Error::InvalidArgument(format!("no gamma <= c for e = {e}, m = {m}, c = {c}")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneEmbedding {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub m: i64,
    pub d: i64,
    /// Satisfies `a = e - gamma m` and `gcd(gamma m - e, c) = 1`.
    pub gamma: i64,
    /// `up um - tau^m` over [`PLANE_VARS`].
    pub equation: QMultiPoly,
    pub action_exponents: [i64; 3],
}

impl PlaneEmbedding {
    pub fn ambient(&self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn ambient_string(&self) -> String {
        weight_tuple(&self.ambient())
    }

    pub fn equation_string(&self) -> String {
        self.equation.display_with(&PLANE_VARS).to_string()
    }

    pub fn presentation(&self) -> String {
        format!("D_+({}) in {}", self.equation_string(), self.ambient_string())
    }
}

fn gamma_candidates() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..).flat_map(|n| [n, -n]))
}

pub fn plane_embedding(gp: &GizatullinParams) -> Result<PlaneEmbedding> {
    let (e, m, c) = (gp.e, gp.m, gp.c);
    let d = c * m;
    let found = gamma_candidates()
        .take((2 * d + 3) as usize)
        .filter(|g| (g * m - e).gcd(&c) == 1)
        .map(|g| (e - g * m).rem_euclid(d))
        .find(|a| (1..d).contains(a))
        .ok_or_else(|| Error::InvalidArgument(format!("no admissible gamma for {gp:?}")))?;
    let a = found;
    let b = d - a;
    let gamma = (e - a) / m;
    let mm = u32::try_from(m).map_err(|_| Error::Overflow("m".into()))?;
    let equation = &MultiPoly::term(int(1), vec![1, 1, 0]) - &MultiPoly::term(int(1), vec![0, 0, mm]);
    Ok(PlaneEmbedding {
        a,
        b,
        c,
        m,
        d,
        gamma,
        equation,
        action_exponents: [a, b.rem_euclid(d), c],
    })
}

/// Generators `u+ = t u`, `u- = (t-1)^c u^-1`, `v+ = t^e u^m`,
/// `v- = t^-e (t-1)^(cm) u^-m` after moving `p, q` to `0, 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generators {
    pub u_plus: QLaurent,
    pub u_minus: QLaurent,
    pub v_plus: QLaurent,
    pub v_minus: QLaurent,
}

fn t_minus_one() -> QRatFunc {
    QRatFunc::from_poly(QPoly::linear_root(int(1)))
}

pub fn generators(gp: &GizatullinParams) -> Result<Generators> {
    let (e, m, c) = (gp.e, gp.m, gp.c);
    let t = QRatFunc::var();
    let t1 = t_minus_one();
    Ok(Generators {
        u_plus: QLaurent::term(t.clone(), 1),
        u_minus: QLaurent::term(t1.pow(c)?, -1),
        v_plus: QLaurent::term(t.pow(e)?, m),
        v_minus: QLaurent::term(&t.pow(-e)? * &t1.pow(c * m)?, -m),
    })
}

/// The pair of `gp` with `p, q` moved to `0, 1`.
pub fn standard_pair(gp: &GizatullinParams) -> Result<DpdPair> {
    gp.to_pair().affine_transport(&(&gp.q - &gp.p), &gp.p)
}

/// Checks `u+^m = t^(m-e) v+`, `u-^m = t^e v-`, `u+ u- = t (t-1)^c`, and that
/// each generator's coefficient is the section generator of its degree.
pub fn check_generator_relations(gp: &GizatullinParams, g: &Generators) -> Result<bool> {
    let (e, m, c) = (gp.e, gp.m, gp.c);
    let t = QRatFunc::var();
    let lhs1 = g.u_plus.pow(m)?;
    let rhs1 = &QLaurent::term(t.pow(m - e)?, 0) * &g.v_plus;
    let lhs2 = g.u_minus.pow(m)?;
    let rhs2 = &QLaurent::term(t.pow(e)?, 0) * &g.v_minus;
    let lhs3 = &g.u_plus * &g.u_minus;
    let rhs3 = QLaurent::term(&t * &t_minus_one().pow(c)?, 0);
    if lhs1 != rhs1 || lhs2 != rhs2 || lhs3 != rhs3 {
        return Ok(false);
    }
    let pair = standard_pair(gp)?;
    for (el, deg) in [(&g.u_plus, 1), (&g.u_minus, -1), (&g.v_plus, m), (&g.v_minus, -m)] {
        if *el != QLaurent::term(pair.section_generator(deg), deg) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn generator_relations_check(gp: &GizatullinParams) -> Result<bool> {
    check_generator_relations(gp, &generators(gp)?)
}

/// Character congruences of the cyclic action on `(u'+, u'-, tau)` modulo `d`
/// and the covering identity `(tau^m - 1)^d = v+ v-` under `t = tau^m`.
pub fn action_consistency_check(pe: &PlaneEmbedding, gp: &GizatullinParams) -> Result<bool> {
    let (e, m, c) = (gp.e, gp.m, gp.c);
    if pe.c != c || pe.m != m || pe.d != c * m {
        return Err(Error::InvalidArgument(
            "plane embedding was not produced from these parameters".into(),
        ));
    }
    let d = pe.d;
    let congruences = (pe.a + pe.b).rem_euclid(d) == 0
        && (c * m).rem_euclid(d) == 0
        && (pe.a * c - (e - m) * c).rem_euclid(d) == 0;
    if !congruences {
        return Ok(false);
    }
    let g = generators(gp)?;
    let product = &g.v_plus * &g.v_minus;
    let Some((0, coeff)) = product.as_monomial() else {
        return Ok(false);
    };
    let Some(poly) = coeff.as_polynomial() else {
        return Ok(false);
    };
    let dd = u32::try_from(d).map_err(|_| Error::Overflow("d".into()))?;
    let tau_m_minus_one = QPoly::linear_root(int(1)).compose_power(m as usize)?;
    Ok(poly.compose_power(m as usize)? == tau_m_minus_one.pow(dd))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Toric { d: i64, e: i64 },
    NonToric { params: GizatullinParams, interchanged: bool, witness: QRatFunc },
    Other { reason: String },
}

/// Cone data of a toric normal form: the surface is `A^2 / E_d'` with
/// weights `(1, e')`. `None` when `e+ + e- = 0`.
pub fn toric_type(nf: &NormalFormData) -> Option<(i64, i64)> {
    if !nf.is_toric() || nf.e_plus() + nf.e_minus() == 0 {
        return None;
    }
    let d = nf.d();
    let g1 = d.gcd(&nf.e_plus());
    let g2 = d.gcd(&nf.e_minus());
    let r1 = (d / g1, nf.e_plus() / g1);
    let r2 = (-d / g2, nf.e_minus() / g2);
    let det = r1.0 * r2.1 - r1.1 * r2.0;
    // basis (r1, u) with det(r1, u) = 1
    let eg = r1.0.extended_gcd(&r1.1);
    let u = (-eg.y, eg.x);
    let alpha = r2.0 * u.1 - r2.1 * u.0;
    let e = alpha.rem_euclid(det);
    Some((det, if e == 0 { det } else { e }))
}

/// A pair presenting `A^2 / E_d` with weights `(1, e)`.
pub fn toric_pair(d: i64, e: i64) -> Result<DpdPair> {
    toric_embedding(d, e)?;
    let x2 = e.rem_euclid(d) - d;
    Ok(DpdPair::new(QDivisor::zero(), QDivisor::point(int(0), rat(-d, -x2))))
}

fn nontoric_shape(pair: &DpdPair) -> std::result::Result<(GizatullinParams, QRatFunc), String> {
    let sum = pair.plus.add(&pair.minus);
    let (q, c) = match sum.entries() {
        [(poly, coeff)] if poly.degree() == Some(1) && coeff.is_integer() && *coeff < int(0) => {
            (-poly.coeff(0), -coeff.to_integer())
        }
        _ => return Err(format!("D+ + D- = {sum} is not -c[q] for a single rational q")),
    };
    let frac = pair.plus.fractional_part();
    let p = match frac.entries() {
        [(poly, _)] if poly.degree() == Some(1) => -poly.coeff(0),
        _ => return Err(format!("fractional part {frac} of D+ is not a single rational point")),
    };
    if p == q {
        return Err("fractional point coincides with the support of D+ + D-".into());
    }
    let neg = -pair.plus.eval_at(&p);
    let frac_coeff = &neg - neg.floor();
    let to_i = |n: &num_bigint::BigInt| crate::util::to_i64(n).map_err(|e| e.to_string());
    let e = to_i(frac_coeff.numer())?;
    let m = to_i(frac_coeff.denom())?;
    let c = to_i(&c)?;
    let params = GizatullinParams::new(e, m, c, p, q).map_err(|e| e.to_string())?;
    let shift = pair.plus.sub(&params.to_pair().plus);
    let witness = shift.to_rational_function().map_err(|e| e.to_string())?;
    Ok((params, witness))
}

pub fn classify(pair: &DpdPair) -> Result<Classification> {
    let (nf, _) = pair.to_normal_form()?;
    if nf.is_toric() {
        return Ok(match toric_type(&nf) {
            Some((d, e)) => Classification::Toric { d, e },
            None => Classification::Other {
                reason: "toric with D+ + D- = 0, not a quotient of A^2".into(),
            },
        });
    }
    let first = match nontoric_shape(pair) {
        Ok((params, witness)) => {
            return Ok(Classification::NonToric { params, interchanged: false, witness })
        }
        Err(reason) => reason,
    };
    if let Ok((params, witness)) = nontoric_shape(&pair.interchange()) {
        return Ok(Classification::NonToric { params, interchanged: true, witness });
    }
    Ok(Classification::Other { reason: first })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toric_embedding_examples() {
        assert_eq!(toric_embedding(2, 1).unwrap().ambient_string(), "P(1,1,2)");
        assert_eq!(toric_embedding(5, 2).unwrap().ambient_string(), "P(1,2,5)");
        assert_eq!(toric_embedding(1, 1).unwrap().ambient, [1, 1, 1]);
        assert!(toric_embedding(0, 1).is_err());
    }

    #[test]
    fn toric_iso_examples() {
        assert!(toric_iso_check(5, 2, 3).unwrap());
        assert!(toric_iso_check(7, 4, 4).unwrap());
        assert!(!toric_iso_check(7, 2, 3).unwrap());
        assert!(toric_iso_check(7, 7, 1).is_err());
    }

    #[test]
    fn find_gamma_examples() {
        assert_eq!(find_gamma(1, 2, 4).unwrap(), 0);
        assert_eq!(find_gamma(2, 3, 2).unwrap(), 1);
        assert_eq!(find_gamma(3, 5, 1).unwrap(), 0);
        assert!(find_gamma(2, 4, 3).is_err());
    }

    #[test]
    fn plane_embedding_examples() {
        let pe = plane_embedding(&GizatullinParams::standard(1, 2, 1).unwrap()).unwrap();
        assert_eq!((pe.a, pe.b, pe.c), (1, 1, 1));
        assert_eq!(pe.presentation(), "D_+(up*um - tau^2) in P(1,1,1)");

        let pe = plane_embedding(&GizatullinParams::standard(2, 3, 2).unwrap()).unwrap();
        assert_eq!((pe.a, pe.b, pe.c, pe.d), (5, 1, 2, 6));
        assert_eq!(pe.gamma, -1);

        let pe = plane_embedding(&GizatullinParams::standard(1, 3, 1).unwrap()).unwrap();
        assert_eq!((pe.a, pe.b, pe.c), (1, 2, 1));
        assert_eq!(pe.gamma, 0);
    }

    #[test]
    fn generator_relations() {
        for (e, m, c) in [(1, 2, 1), (2, 3, 2), (3, 5, 4)] {
            let gp = GizatullinParams::standard(e, m, c).unwrap();
            assert!(generator_relations_check(&gp).unwrap());
        }
        let gp = GizatullinParams::new(2, 3, 2, rat(1, 2), int(-4)).unwrap();
        assert!(generator_relations_check(&gp).unwrap());

        let gp = GizatullinParams::standard(1, 2, 1).unwrap();
        let mut g = generators(&gp).unwrap();
        g.v_plus = QLaurent::term(QRatFunc::var().pow(2).unwrap(), 2);
        assert!(!check_generator_relations(&gp, &g).unwrap());
    }

    #[test]
    fn action_consistency() {
        for (e, m, c) in [(1, 2, 1), (2, 3, 2)] {
            let gp = GizatullinParams::standard(e, m, c).unwrap();
            let pe = plane_embedding(&gp).unwrap();
            assert!(action_consistency_check(&pe, &gp).unwrap());
            let mut bad = pe.clone();
            bad.a += 1;
            assert!(!action_consistency_check(&bad, &gp).unwrap());
        }
        let gp = GizatullinParams::standard(1, 2, 1).unwrap();
        let other = plane_embedding(&GizatullinParams::standard(1, 3, 1).unwrap()).unwrap();
        assert!(action_consistency_check(&other, &gp).is_err());
    }

    #[test]
    fn classify_examples() {
        let pair = DpdPair::new(
            QDivisor::point(int(0), rat(-1, 2)),
            QDivisor::point(int(0), rat(1, 2)).add(&QDivisor::point(int(1), int(-2))),
        );
        match classify(&pair).unwrap() {
            Classification::NonToric { params, interchanged, witness } => {
                assert_eq!((params.e(), params.m(), params.c()), (1, 2, 2));
                assert_eq!((params.p(), params.q()), (&int(0), &int(1)));
                assert!(!interchanged);
                assert!(witness.is_one());
            }
            other => panic!("unexpected {other:?}"),
        }

        let toric = DpdPair::new(QDivisor::point(int(0), rat(-1, 2)), QDivisor::point(int(0), rat(-1, 2)));
        assert_eq!(classify(&toric).unwrap(), Classification::Toric { d: 4, e: 1 });

        let dg = DpdPair::new(QDivisor::point(int(0), rat(-1, 2)), QDivisor::point(int(1), rat(-1, 3)));
        assert!(matches!(classify(&dg).unwrap(), Classification::Other { .. }));
    }

    #[test]
    fn classify_reduces_by_equivalence_and_transport() {
        // (-(2/3)[5] + [2], (2/3)[5] - [2] - 3[-1]) is Eq. 9 shaped up to a shift
        let plus = QDivisor::point(int(5), rat(-2, 3)).add(&QDivisor::point(int(2), int(1)));
        let minus = QDivisor::point(int(5), rat(2, 3))
            .add(&QDivisor::point(int(2), int(-1)))
            .add(&QDivisor::point(int(-1), int(-3)));
        match classify(&DpdPair::new(plus, minus)).unwrap() {
            Classification::NonToric { params, witness, .. } => {
                assert_eq!((params.e(), params.m(), params.c()), (2, 3, 3));
                assert_eq!((params.p(), params.q()), (&int(5), &int(-1)));
                assert_eq!(witness, QRatFunc::from_poly(QPoly::linear_root(int(2))));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn toric_round_trip() {
        for d in 1..=9 {
            for e in 1..=d {
                if e.gcd(&d) != 1 || (d > 1 && e == d) {
                    continue;
                }
                let pair = toric_pair(d, e).unwrap();
                match classify(&pair).unwrap() {
                    Classification::Toric { d: d2, e: e2 } => {
                        assert_eq!(d2, d);
                        if d > 1 {
                            assert!(toric_iso_check(d, e, e2).unwrap(), "d={d} e={e} got {e2}");
                        }
                    }
                    other => panic!("d={d} e={e}: {other:?}"),
                }
            }
        }
    }
}
