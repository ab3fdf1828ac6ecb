//! Local intersection numbers by Fulton's reduction and global
//! intersection cycles located through resultants.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{germ_at, CurveError, IntersectionCycle, PlaneCurve, ProjPoint};
use crate::exactpoly::upoly::{rational_roots, rpoly_gcd, univariate_resultant, RPoly};
use crate::exactpoly::{Monomial, MultiPoly, Rational, Var};

/// Local intersection number at the origin of two affine curves in `x, y`
/// with no common component through the origin.
pub fn local_intersection_number(f: &MultiPoly, g: &MultiPoly) -> u32 {
    fulton(f.clone(), g.clone(), None)
}

/// As [`local_intersection_number`], given an upper bound `n` on the answer.
/// The local ideal then contains every monomial of degree `n`, so terms of
/// higher degree are dropped as the reduction goes, which keeps high-contact
/// germs from growing without bound.
pub fn bounded_intersection_number(f: &MultiPoly, g: &MultiPoly, n: u32) -> u32 {
    fulton(truncate(f, n), truncate(g, n), Some(n))
}

fn truncate(f: &MultiPoly, n: u32) -> MultiPoly {
    MultiPoly::from_terms(f.terms().filter(|(m, _)| m.degree() <= n).map(|(m, c)| (*m, c.clone())))
}

fn fulton(mut f: MultiPoly, mut g: MultiPoly, bound: Option<u32>) -> u32 {
    let mut total = 0;
    loop {
        if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
            return total;
        }
        let f0 = RPoly::from_multipoly(&f.specialize(Var::Y, &Rational::zero()), Var::X);
        let g0 = RPoly::from_multipoly(&g.specialize(Var::Y, &Rational::zero()), Var::X);
        if g0.is_zero() {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        if f0.is_zero() {
            // f = y * h:  I(f, g) = I(y, g) + I(h, g)
            let ord = g0.0.iter().take_while(|c| c.is_zero()).count() as u32;
            total += ord;
            f = f
                .div_monomial(&Monomial([0, 1, 0]))
                .expect("y divides f when f(x, 0) = 0");
            continue;
        }
        let (r, s) = (f0.degree(), g0.degree());
        if r > s {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        // cancel the top x-term of g(x, 0)
        let shift = MultiPoly::term(Rational::one(), [(s - r) as u32, 0, 0]);
        g = (&g.scale(&f0.lc()) - &(&shift * &f).scale(&g0.lc())).normalized();
        if let Some(n) = bound {
            g = truncate(&g, n);
        }
    }
}

fn common_component(f: &PlaneCurve, g: &PlaneCurve) -> Result<(), CurveError> {
    let h = f.equation().gcd(g.equation());
    if !h.is_constant() {
        return Err(CurveError::CommonComponent {
            factor: h.to_string(),
        });
    }
    Ok(())
}

pub fn intersection_multiplicity(
    f: &PlaneCurve,
    g: &PlaneCurve,
    p: &ProjPoint,
) -> Result<u32, CurveError> {
    common_component(f, g)?;
    Ok(local_multiplicity_unchecked(f, g, p))
}

fn local_multiplicity_unchecked(f: &PlaneCurve, g: &PlaneCurve, p: &ProjPoint) -> u32 {
    if !f.contains(p) || !g.contains(p) {
        return 0;
    }
    let bezout = f.degree() * g.degree();
    bounded_intersection_number(&germ_at(f.equation(), p), &germ_at(g.equation(), p), bezout)
}

/// Rational roots of a binary form in `x, y`, as points on the line `z = 0`.
pub(super) fn binary_form_points(form: &MultiPoly) -> (Vec<ProjPoint>, usize) {
    let d = form.total_degree().unwrap_or(0) as usize;
    let dehom = RPoly::from_multipoly(&form.specialize(Var::Y, &Rational::one()), Var::X);
    let mut pts = Vec::new();
    let mut located = 0;
    for r in rational_roots(&dehom) {
        pts.push(ProjPoint::new([r, Rational::one(), Rational::zero()]).unwrap());
        located += 1;
    }
    if dehom.degree() < d {
        pts.push(ProjPoint::from_ints(1, 0, 0));
        located += 1;
    }
    // distinct roots not located over Q
    let distinct = crate::exactpoly::upoly::squarefree(&dehom).degree() + usize::from(dehom.degree() < d);
    (pts, distinct - located)
}

/// Rational common points of two curves without common components.
pub(super) fn rational_common_points(f: &MultiPoly, g: &MultiPoly) -> Vec<ProjPoint> {
    let mut pts = Vec::new();
    // line at infinity
    let fz = f.specialize(Var::Z, &Rational::zero());
    let gz = g.specialize(Var::Z, &Rational::zero());
    let common = fz.gcd(&gz);
    if !common.is_constant() {
        pts.extend(binary_form_points(&common).0);
    }
    // affine chart z = 1
    let fa = f.specialize(Var::Z, &Rational::one());
    let ga = g.specialize(Var::Z, &Rational::one());
    let res = univariate_resultant(&fa, &ga, Var::X, Var::Y);
    for x0 in rational_roots(&res) {
        let fy = RPoly::from_multipoly(&fa.specialize(Var::X, &x0), Var::Y);
        let gy = RPoly::from_multipoly(&ga.specialize(Var::X, &x0), Var::Y);
        let h = rpoly_gcd(&fy, &gy);
        if h.is_zero() {
            continue;
        }
        for y0 in rational_roots(&h) {
            pts.push(ProjPoint::new([x0.clone(), y0, Rational::one()]).unwrap());
        }
    }
    pts
}

pub fn intersection_cycle(f: &PlaneCurve, g: &PlaneCurve) -> Result<IntersectionCycle, CurveError> {
    common_component(f, g)?;
    let bezout = f.degree() * g.degree();
    let mut points = BTreeMap::new();
    for p in rational_common_points(f.equation(), g.equation()) {
        let m = local_multiplicity_unchecked(f, g, &p);
        if m > 0 {
            points.insert(p, m);
        }
    }
    let located: u32 = points.values().sum();
    assert!(located <= bezout, "located intersection mass exceeds Bezout bound");
    Ok(IntersectionCycle {
        points,
        residual: bezout - located,
        bezout,
    })
}
