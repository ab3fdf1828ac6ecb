//! Multivariate gcd over the rationals by content / primitive-part
//! recursion and primitive pseudo-remainder sequences.

use super::{Monomial, MultiPoly, Var};
use num_traits::One;

pub(super) fn gcd(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one();
    }
    if p.is_homogeneous() && q.is_homogeneous() {
        return homogeneous_gcd(p, q);
    }
    gcd_rec(p, q).normalized()
}

/// For forms, strip powers of `z`, take the gcd of the `z = 1`
/// dehomogenizations and homogenize back.
fn homogeneous_gcd(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    let zp = p.min_degree_in(Var::Z);
    let zq = q.min_degree_in(Var::Z);
    let one = num_rational::BigRational::one();
    let pd = p.specialize(Var::Z, &one);
    let qd = q.specialize(Var::Z, &one);
    let g = gcd_rec(&pd, &qd).homogenize();
    g.mul_monomial(&Monomial([0, 0, zp.min(zq)])).normalized()
}

fn main_var(p: &MultiPoly, q: &MultiPoly) -> Option<Var> {
    let mut best: Option<(u32, Var)> = None;
    for v in Var::ALL {
        let d = p.degree_in(v).max(q.degree_in(v));
        if d > 0 && best.is_none_or(|(bd, _)| d > bd) {
            best = Some((d, v));
        }
    }
    best.map(|(_, v)| v)
}

pub(super) fn gcd_rec(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    let Some(v) = main_var(p, q) else {
        return MultiPoly::one();
    };
    if !p.uses(v) {
        return gcd_rec(p, &content(q, v));
    }
    if !q.uses(v) {
        return gcd_rec(&content(p, v), q);
    }
    let cp = content(p, v);
    let cq = content(q, v);
    let c = gcd_rec(&cp, &cq);
    let mut a = p.exact_divide(&cp).expect("content divides").normalized();
    let mut b = q.exact_divide(&cq).expect("content divides").normalized();
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    let g = loop {
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            break b;
        }
        if !r.uses(v) {
            break MultiPoly::one();
        }
        a = b;
        b = primitive_part(&r, v);
    };
    (&c * &primitive_part(&g, v)).normalized()
}

/// Gcd of the coefficients with respect to `v`.
pub(super) fn content(p: &MultiPoly, v: Var) -> MultiPoly {
    let mut coeffs: Vec<MultiPoly> = p
        .coefficients_in(v)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    // cheapest first
    coeffs.sort_by_key(|c| (c.total_degree(), c.num_terms()));
    let mut g = MultiPoly::zero();
    for c in coeffs {
        g = gcd_rec(&g, &c);
        if g.is_constant() {
            return MultiPoly::one();
        }
    }
    g
}

pub(super) fn primitive_part(p: &MultiPoly, v: Var) -> MultiPoly {
    let c = content(p, v);
    p.exact_divide(&c).expect("content divides").normalized()
}

/// `lc(b)^k * a mod b` computed without division.
pub(super) fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, v: Var) -> MultiPoly {
    let db = b.degree_in(v);
    let lb = b.lc_in(v);
    let mut r = a.clone();
    debug_assert!(db > 0);
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.lc_in(v);
        let mut e = [0u32; 3];
        e[v.index()] = dr - db;
        let shifted = (&lr * b).mul_monomial(&Monomial(e));
        r = &(&r * &lb) - &shifted;
    }
    r
}

#[cfg(test)]
mod tests {
    use crate::exactpoly::poly;

    #[test]
    fn gcd_examples() {
        let f2 = poly("x*z - y^2");
        let f3 = poly("(x+y)*(x*z - y^2) + x^3");
        let xf22 = &poly("x") * &f2.pow(2);
        let f3f2 = &f3 * &f2;
        assert_eq!(xf22.gcd(&f3f2), f2);
        assert_eq!(f2.gcd(&poly("0")), f2);
        assert_eq!(f2.pow(2).gcd(&f2.pow(3)), f2.pow(2));
    }

    #[test]
    fn non_homogeneous() {
        let a = poly("(x^2 + y - 1)*(x - y*z + 3)");
        let b = poly("(x^2 + y - 1)*(z^2 + x)");
        assert_eq!(a.gcd(&b), poly("x^2 + y - 1"));
        assert!(poly("x + 1").gcd(&poly("x - 1")).is_one());
    }

    #[test]
    fn gcd_with_powers_of_z() {
        let a = poly("z^3*(x - y)");
        let b = poly("z*(x - y)^2*(x + z)");
        assert_eq!(a.gcd(&b), poly("x*z - y*z"));
    }
}
