//! Rational singular points of plane curves.
//!
//! Points on the line `z = 0` come from the gcd of the restricted partials.
//! Affine points are projected to the `x`-axis by two resultants, after a
//! shear that makes the curve monic in `y`; every candidate fiber is then
//! solved exactly. Anything that would need an algebraic extension is
//! reported instead of skipped.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use thiserror::Error;

use super::intersect::binary_form_points;
use super::{multiplicity_at, PlaneCurve, ProjPoint};
use crate::exactpoly::upoly::{
    coefficient_vector, gcd_degree_over_roots, rational_roots, rpoly_gcd, squarefree,
    univariate_resultant, RPoly,
};
use crate::exactpoly::{rat, MultiPoly, Rational, Var};

/// A singular point whose coordinates are not all rational.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("singular point over an algebraic extension: coordinates are roots of {factor}")]
pub struct ExtensionFieldSingularity {
    pub factor: String,
}

fn extension(p: &RPoly, v: Var) -> ExtensionFieldSingularity {
    ExtensionFieldSingularity {
        factor: p.monic().to_multipoly(v).to_string(),
    }
}

/// Divides out the linear factors at the given roots.
fn strip_roots(p: &RPoly, roots: &[Rational]) -> RPoly {
    roots.iter().fold(p.clone(), |acc, r| acc.divrem(&RPoly::linear_root(r)).0)
}

fn points_at_infinity(f: &MultiPoly) -> Result<Vec<ProjPoint>, ExtensionFieldSingularity> {
    let mut g = MultiPoly::zero();
    for v in Var::ALL {
        g = g.gcd(&f.derivative(v).specialize(Var::Z, &Rational::zero()));
    }
    if g.is_zero() || g.is_constant() {
        return Ok(Vec::new());
    }
    let (pts, unlocated) = binary_form_points(&g);
    if unlocated > 0 {
        let dehom = RPoly::from_multipoly(&g.specialize(Var::Y, &Rational::one()), Var::X);
        let roots = rational_roots(&dehom);
        return Err(extension(&strip_roots(&squarefree(&dehom), &roots), Var::X));
    }
    Ok(pts)
}

/// Smallest shear parameter among `0, 1, -1, 2, ...` at which the top form
/// of the affine equation does not vanish on `(t, 1)`.
fn shear_parameter(f: &MultiPoly) -> Rational {
    let affine = f.specialize(Var::Z, &Rational::one());
    let top = affine.homogeneous_part(affine.total_degree().unwrap_or(0));
    (0..)
        .map(|i: i64| rat(if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) }))
        .find(|t| !top.eval(&[t.clone(), Rational::one(), Rational::zero()]).is_zero())
        .expect("a nonzero form has a nonvanishing point on a line")
}

fn affine_points(f: &MultiPoly) -> Result<Vec<ProjPoint>, ExtensionFieldSingularity> {
    let t = shear_parameter(f);
    let shear = [
        &MultiPoly::x() + &MultiPoly::y().scale(&t),
        MultiPoly::y(),
        MultiPoly::one(),
    ];
    let g = f.substitute(&shear);
    let gx = g.derivative(Var::X);
    let gy = g.derivative(Var::Y);
    let r1 = univariate_resultant(&g, &gx, Var::X, Var::Y);
    let r2 = univariate_resultant(&g, &gy, Var::X, Var::Y);
    let h = squarefree(&rpoly_gcd(&r1, &r2));
    if h.is_zero() || h.degree() == 0 {
        return Ok(Vec::new());
    }

    let mut pts = Vec::new();
    let xs = rational_roots(&h);
    for x0 in &xs {
        let fiber = [&g, &gx, &gy]
            .map(|p| RPoly::from_multipoly(&p.specialize(Var::X, x0), Var::Y));
        let common = fiber.iter().fold(RPoly::zero(), |acc, p| rpoly_gcd(&acc, p));
        if common.is_zero() || common.degree() == 0 {
            continue;
        }
        let ys = rational_roots(&common);
        let rest = strip_roots(&squarefree(&common), &ys);
        if rest.degree() > 0 {
            return Err(extension(&rest, Var::Y));
        }
        for y0 in ys {
            let x = x0 + &t * &y0;
            pts.push(ProjPoint::new([x, y0, Rational::one()]).unwrap());
        }
    }

    let rest = strip_roots(&h, &xs);
    if rest.degree() > 0 {
        let system: Vec<Vec<RPoly>> = [&g, &gx, &gy]
            .iter()
            .map(|p| coefficient_vector(p, Var::Y, Var::X))
            .collect();
        for (part, d) in gcd_degree_over_roots(&rest, &system) {
            if d > 0 {
                return Err(extension(&part, Var::X));
            }
        }
    }
    Ok(pts)
}

fn search(c: &PlaneCurve) -> Result<Vec<(ProjPoint, u32)>, ExtensionFieldSingularity> {
    let f = c.equation();
    if c.degree() == 1 {
        return Ok(Vec::new());
    }
    let mut found = BTreeMap::new();
    for p in points_at_infinity(f)?.into_iter().chain(affine_points(f)?) {
        let m = multiplicity_at(c, &p);
        debug_assert!(m >= 2, "candidate {p} is not singular");
        found.insert(p, m);
    }
    Ok(found.into_iter().collect())
}

/// All singular points with their multiplicities, sorted by point.
pub fn find_rational_singular_points(
    c: &PlaneCurve,
) -> Result<Vec<(ProjPoint, u32)>, ExtensionFieldSingularity> {
    c.singular_cache().get_or_init(|| search(c)).clone()
}

pub fn is_smooth(c: &PlaneCurve) -> bool {
    matches!(find_rational_singular_points(c), Ok(v) if v.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly;

    fn curve(s: &str) -> PlaneCurve {
        PlaneCurve::new(poly(s)).unwrap()
    }

    fn sing(s: &str) -> Vec<(ProjPoint, u32)> {
        find_rational_singular_points(&curve(s)).unwrap()
    }

    #[test]
    fn smooth_curves() {
        assert!(is_smooth(&curve("x*z - y^2")));
        assert!(is_smooth(&curve("x")));
        assert!(is_smooth(&curve("y^2*z - x^3 - x*z^2 - z^3")));
        assert!(is_smooth(&curve("x^3 + y^3 + z^3")));
    }

    #[test]
    fn cusp_and_node() {
        assert_eq!(sing("y^2*z - x^3"), vec![(ProjPoint::from_ints(0, 0, 1), 2)]);
        assert_eq!(sing("y^2*z - x^3 - x^2*z"), vec![(ProjPoint::from_ints(0, 0, 1), 2)]);
        // node moved away from the origin
        assert_eq!(
            sing("(y - z)^2*z - (x - 2*z)^3 - (x - 2*z)^2*z"),
            vec![(ProjPoint::from_ints(2, 1, 1), 2)]
        );
    }

    #[test]
    fn singularities_at_infinity() {
        // the cusp of y^2 z = x^3 seen from the chart x = 1
        assert_eq!(sing("y^2*x - z^3"), vec![(ProjPoint::from_ints(1, 0, 0), 2)]);
        assert_eq!(sing("x*y*z"), vec![
            (ProjPoint::from_ints(0, 0, 1), 2),
            (ProjPoint::from_ints(0, 1, 0), 2),
            (ProjPoint::from_ints(1, 0, 0), 2),
        ]);
    }

    #[test]
    fn several_points_in_one_fiber() {
        // four lines through two points sharing the same x after any shear
        let pts = sing("(x - z)*(x + z)*(y - z)*(y + z)");
        assert_eq!(pts.len(), 6);
        assert!(pts.iter().all(|(_, m)| *m == 2));
    }

    #[test]
    fn irrational_singular_points_are_reported() {
        // conjugate pair of lines meeting at a rational point: fine
        assert_eq!(sing("x^2 - 2*y^2"), vec![(ProjPoint::from_ints(0, 0, 1), 2)]);
        // two nodes at (±sqrt 2, 0, 1)
        let c = curve("(x^2 - 2*z^2)^2 - y^2*z^2 + y^4");
        let err = find_rational_singular_points(&c).unwrap_err();
        assert!(err.factor.contains("x^2"), "{}", err.factor);
        assert!(!is_smooth(&c));
    }

    #[test]
    fn results_are_cached() {
        let c = curve("y^2*z - x^3");
        let a = find_rational_singular_points(&c);
        assert!(c.singular_cache().get().is_some());
        assert_eq!(a, find_rational_singular_points(&c));
    }
}
