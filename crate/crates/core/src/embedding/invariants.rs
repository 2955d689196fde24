//! Monomial-level view of the cyclic quotient principle: invariants of
//! `R/(z - 1)` under the order-`d` group match degree-0 elements of `R[1/z]`.

use crate::algebra::Monomial;

/// All exponent vectors of total degree `<= bound` whose weighted degree is
/// divisible by `d`, in ascending graded-lex order.
pub fn invariant_monomials(weights: &[i64], d: i64, bound: u32) -> Vec<Vec<u32>> {
    fn walk(weights: &[i64], d: i64, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == weights.len() {
            let w: i64 = prefix.iter().zip(weights).map(|(&e, &w)| i64::from(e) * w).sum();
            if w.rem_euclid(d) == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            walk(weights, d, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    walk(weights, d, bound, &mut Vec::new(), &mut out);
    let mut monos: Vec<Monomial> = out.into_iter().map(Monomial).collect();
    monos.sort();
    monos.into_iter().map(|m| m.0).collect()
}

/// Number of degree-0 monomials `x^a y^b z^-j` of `Q[x, y, z, 1/z]` with
/// weights `(1, e, d)` and `a + b <= bound`: solutions of `a + e b = j d`.
pub fn localized_degree_zero_count(e: i64, d: i64, bound: u32) -> usize {
    let bound = i64::from(bound);
    let max_j = (bound * e.max(1)) / d;
    let mut count = 0;
    for j in 0..=max_j {
        for b in 0..=bound {
            let a = j * d - e * b;
            if a >= 0 && a + b <= bound {
                count += 1;
            }
        }
    }
    count
}
