//! Birational self-maps of the projective plane given by three coprime
//! forms of equal degree.

use std::fmt;

use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::curvealg::{CurveError, PlaneCurve};
use crate::exactpoly::{MultiPoly, Rational, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CremonaError {
    #[error("all components are zero")]
    ZeroMap,
    #[error("components are not forms of one common degree")]
    DegreeMismatch,
    #[error("the image is a point")]
    Degenerate,
    #[error("the curve is contracted by the map")]
    CurveContracted,
    #[error("certificate failed: {0}")]
    Certificate(String),
    #[error("invalid elementary factor: {0}")]
    InvalidFactor(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct CremonaMap {
    components: [MultiPoly; 3],
    degree: u32,
    /// Common factor divided out at construction, if any.
    reduced_by: Option<MultiPoly>,
}

impl CremonaMap {
    pub fn components(&self) -> &[MultiPoly; 3] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn reduced_by(&self) -> Option<&MultiPoly> {
        self.reduced_by.as_ref()
    }

    pub fn identity() -> Self {
        make_map(MultiPoly::x(), MultiPoly::y(), MultiPoly::z()).unwrap()
    }

    /// Image of a rational point, or `None` at a base point.
    pub fn apply(&self, p: &[Rational; 3]) -> Option<[Rational; 3]> {
        let img = self.components.clone().map(|c| c.eval(p));
        (!img.iter().all(Zero::is_zero)).then_some(img)
    }
}

impl fmt::Debug for CremonaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.components;
        write!(f, "CremonaMap(deg {}: {a}, {b}, {c})", self.degree)
    }
}

impl Serialize for CremonaMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CremonaMap", 2)?;
        let comps: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        st.serialize_field("components", &comps)?;
        st.serialize_field("degree", &self.degree)?;
        st.end()
    }
}

/// True iff the triples agree up to a common nonzero scalar.
fn proportional_triples(a: &[MultiPoly; 3], b: &[MultiPoly; 3]) -> bool {
    (0..3).all(|i| (0..3).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

fn is_identity_up_to_factor(c: &[MultiPoly; 3]) -> bool {
    !c.iter().all(MultiPoly::is_zero)
        && proportional_triples(c, &[MultiPoly::x(), MultiPoly::y(), MultiPoly::z()])
}

pub fn make_map(p1: MultiPoly, p2: MultiPoly, p3: MultiPoly) -> Result<CremonaMap, CremonaError> {
    let comps = [p1, p2, p3];
    if comps.iter().all(MultiPoly::is_zero) {
        return Err(CremonaError::ZeroMap);
    }
    let g = comps.iter().fold(MultiPoly::zero(), |acc, c| acc.gcd(c));
    let (comps, reduced_by) = if g.is_constant() {
        (comps, None)
    } else {
        let c = comps
            .clone()
            .map(|c| c.exact_divide(&g).expect("gcd divides each component"));
        (c, Some(g))
    };
    let mut degree = None;
    for c in comps.iter().filter(|c| !c.is_zero()) {
        let (homog, d) = c.degree_info().map_err(|_| CremonaError::ZeroMap)?;
        if !homog || degree.is_some_and(|e| e != d) {
            return Err(CremonaError::DegreeMismatch);
        }
        degree = Some(d);
    }
    let degree = degree.unwrap();
    if degree == 0 {
        return Err(CremonaError::Degenerate);
    }
    // all components proportional means the image is a point
    let nonzero: Vec<&MultiPoly> = comps.iter().filter(|c| !c.is_zero()).collect();
    if nonzero.windows(2).all(|w| w[0].is_scalar_multiple_of(w[1])) {
        return Err(CremonaError::Degenerate);
    }
    Ok(CremonaMap {
        components: comps,
        degree,
        reduced_by,
    })
}

/// Equation of the total transform `C ∘ m`.
pub fn pullback(m: &CremonaMap, c: &PlaneCurve) -> MultiPoly {
    c.equation().substitute(m.components())
}

#[derive(Clone, Debug, Serialize)]
pub struct StrictTransform {
    #[serde(serialize_with = "ser_curve")]
    pub curve: PlaneCurve,
    /// Power of each exceptional curve divided out, in input order.
    pub removed: Vec<u32>,
    /// A leftover repeated factor had to be removed.
    pub squarefree_cleanup: bool,
}

fn ser_curve<S: Serializer>(c: &PlaneCurve, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(c.equation())
}

pub fn strict_transform(
    m: &CremonaMap,
    c: &PlaneCurve,
    exceptional: &[PlaneCurve],
) -> Result<StrictTransform, CremonaError> {
    let mut p = pullback(m, c);
    let mut removed = Vec::new();
    for e in exceptional {
        let (q, k) = p.remove_factor(e.equation());
        p = q;
        removed.push(k);
    }
    if p.is_constant() {
        return Err(CremonaError::CurveContracted);
    }
    let squarefree_cleanup = !p.is_squarefree();
    if squarefree_cleanup {
        p = p.squarefree_part();
    }
    Ok(StrictTransform {
        curve: PlaneCurve::new(p.normalized())?,
        removed,
        squarefree_cleanup,
    })
}

/// Components of `m1 ∘ m2` before removing common factors.
fn compose_raw(m1: &CremonaMap, m2: &CremonaMap) -> [MultiPoly; 3] {
    m1.components().clone().map(|c| c.substitute(m2.components()))
}

/// `m1 ∘ m2` with the common factor of the components divided out.
pub fn compose_reduce(m1: &CremonaMap, m2: &CremonaMap) -> Result<CremonaMap, CremonaError> {
    let raw = compose_raw(m1, m2);
    if is_identity_up_to_factor(&raw) {
        // skip the gcd: the common factor is the ratio to (x, y, z)
        return Ok(CremonaMap::identity());
    }
    let [a, b, c] = raw;
    make_map(a, b, c)
}

/// `m ∘ m` is the identity up to a common factor, tested by cross-multiplication.
pub fn is_involution(m: &CremonaMap) -> bool {
    is_identity_up_to_factor(&compose_raw(m, m))
}

/// The forms `f2 = xz - y^2`, `f3 = (cx + y) f2 + x^3` and
/// `f5 = (2x^2(cx + y) + (c^2 x + 2cy + z) f2) f2 + x^5`.
#[derive(Clone, Debug)]
pub struct ConicForms {
    pub f2: MultiPoly,
    pub f3: MultiPoly,
    pub f5: MultiPoly,
}

pub fn conic_forms(c: &Rational) -> ConicForms {
    let (x, y, z) = (MultiPoly::x(), MultiPoly::y(), MultiPoly::z());
    let k = |r: &Rational| MultiPoly::constant(r.clone());
    let f2 = &(&x * &z) - &y.pow(2);
    let cx_y = &(&k(c) * &x) + &y;
    let f3 = &(&cx_y * &f2) + &x.pow(3);
    let inner = &(&(&(&k(&(c * c)) * &x) + &(&k(&(c + c)) * &y)) + &z) * &f2;
    let f5 = &(&(&(&(&MultiPoly::int(2) * &x.pow(2)) * &cx_y) + &inner) * &f2) + &x.pow(5);
    ConicForms { f2, f3, f5 }
}

/// The involution `(x f2^2, -f3 f2, f5)` preserving the complement of the
/// conic `f2 = 0`; construction checks `f2 ∘ h = f2^5`.
pub fn conic_involution(c: &Rational) -> Result<CremonaMap, CremonaError> {
    let ConicForms { f2, f3, f5 } = conic_forms(c);
    let h = make_map(&MultiPoly::x() * &f2.pow(2), -(&f3 * &f2), f5)?;
    if f2.substitute(h.components()) != f2.pow(5) {
        return Err(CremonaError::Certificate("f2 . h != f2^5".into()));
    }
    Ok(h)
}

/// Invertible polynomial maps of the affine plane that generate the
/// automorphisms preserving the line at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elementary {
    /// `(x, y) -> (a x + b y + e, c x + d y + f)`, `ad - bc != 0`
    Affine { m: [[Rational; 2]; 2], shift: [Rational; 2] },
    /// `(x, y) -> (x, y + p(x))`
    Triangular(MultiPoly),
}

impl Elementary {
    pub fn affine(m: [[i64; 2]; 2], shift: [i64; 2]) -> Self {
        Elementary::Affine {
            m: m.map(|r| r.map(crate::exactpoly::rat)),
            shift: shift.map(crate::exactpoly::rat),
        }
    }

    fn validate(&self) -> Result<(), CremonaError> {
        match self {
            Elementary::Affine { m, .. } => {
                if (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_zero() {
                    return Err(CremonaError::InvalidFactor("singular linear part".into()));
                }
            }
            Elementary::Triangular(p) => {
                if p.uses(Var::Y) || p.uses(Var::Z) {
                    return Err(CremonaError::InvalidFactor(format!("{p} is not a polynomial in x")));
                }
            }
        }
        Ok(())
    }

    /// Images of `x` and `y`.
    fn images(&self) -> [MultiPoly; 2] {
        let (x, y) = (MultiPoly::x(), MultiPoly::y());
        match self {
            Elementary::Affine { m, shift } => {
                let row = |r: &[Rational; 2], s: &Rational| {
                    &(&x.scale(&r[0]) + &y.scale(&r[1])) + &MultiPoly::constant(s.clone())
                };
                [row(&m[0], &shift[0]), row(&m[1], &shift[1])]
            }
            Elementary::Triangular(p) => [x, &y + p],
        }
    }

    pub fn inverse(&self) -> Elementary {
        match self {
            Elementary::Affine { m, shift } => {
                let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
                let inv = [
                    [&m[1][1] / &det, -&m[0][1] / &det],
                    [-&m[1][0] / &det, &m[0][0] / &det],
                ];
                let s = [
                    -(&inv[0][0] * &shift[0] + &inv[0][1] * &shift[1]),
                    -(&inv[1][0] * &shift[0] + &inv[1][1] * &shift[1]),
                ];
                Elementary::Affine { m: inv, shift: s }
            }
            Elementary::Triangular(p) => Elementary::Triangular(-p),
        }
    }
}

/// Factors of the inverse automorphism, in application order.
pub fn inverse_factors(factors: &[Elementary]) -> Vec<Elementary> {
    factors.iter().rev().map(Elementary::inverse).collect()
}

/// The affine map `(p, q)` obtained by applying `factors` in order.
pub fn compose_affine(factors: &[Elementary]) -> Result<(MultiPoly, MultiPoly), CremonaError> {
    let mut cur = [MultiPoly::x(), MultiPoly::y()];
    for f in factors {
        f.validate()?;
        let [a, b] = f.images();
        let subst = [cur[0].clone(), cur[1].clone(), MultiPoly::z()];
        cur = [a.substitute(&subst), b.substitute(&subst)];
    }
    let [p, q] = cur;
    Ok((p, q))
}

fn homogenize_to(p: &MultiPoly, d: u32) -> MultiPoly {
    MultiPoly::from_terms(p.terms().map(|(m, c)| {
        let mut e = m.0;
        e[2] = d - m.degree();
        (crate::exactpoly::Monomial(e), c.clone())
    }))
}

/// The Cremona map extending an automorphism of the affine plane `z = 1`
/// given in factored form; it maps the line `z = 0` into itself.
pub fn extend_affine_automorphism(factors: &[Elementary]) -> Result<CremonaMap, CremonaError> {
    let (p, q) = compose_affine(factors)?;
    let d = p
        .total_degree()
        .unwrap_or(0)
        .max(q.total_degree().unwrap_or(0))
        .max(1);
    make_map(homogenize_to(&p, d), homogenize_to(&q, d), MultiPoly::z().pow(d))
}

/// Substitutes forms in `s = x`, `t = y` into the curve equation.
pub fn check_parameterization(c: &PlaneCurve, param: &[MultiPoly; 3]) -> Result<bool, CremonaError> {
    let mut degree = None;
    for p in param.iter().filter(|p| !p.is_zero()) {
        let (homog, d) = p.degree_info().map_err(|_| CremonaError::ZeroMap)?;
        if !homog || p.uses(Var::Z) || degree.is_some_and(|e| e != d) {
            return Err(CremonaError::DegreeMismatch);
        }
        degree = Some(d);
    }
    if degree.is_none() {
        return Err(CremonaError::ZeroMap);
    }
    Ok(c.equation().substitute(param).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{poly, rat};

    #[test]
    fn construction() {
        assert_eq!(CremonaMap::identity().degree(), 1);
        let m = make_map(poly("x*z"), poly("y*z + x^2"), poly("z^2")).unwrap();
        assert_eq!(m.degree(), 2);
        let r = make_map(poly("x*z"), poly("y*z"), poly("z^2")).unwrap();
        assert_eq!(r.degree(), 1);
        assert_eq!(r.reduced_by(), Some(&poly("z")));
        assert_eq!(make_map(poly("x"), poly("y^2"), poly("z")), Err(CremonaError::DegreeMismatch));
        assert_eq!(make_map(poly("0"), poly("0"), poly("0")), Err(CremonaError::ZeroMap));
        assert_eq!(make_map(poly("x"), poly("2*x"), poly("0")), Err(CremonaError::Degenerate));
    }

    #[test]
    fn conic_forms_at_zero() {
        let f = conic_forms(&rat(0));
        assert_eq!(f.f3, poly("y*(x*z - y^2) + x^3"));
        assert_eq!(f.f5, poly("(2*x^2*y + z*(x*z - y^2))*(x*z - y^2) + x^5"));
    }

    #[test]
    fn triangular_composition() {
        let m = make_map(poly("x*z"), poly("y*z + x^2"), poly("z^2")).unwrap();
        let n = make_map(poly("x*z"), poly("y*z - x^2"), poly("z^2")).unwrap();
        assert_eq!(compose_reduce(&m, &n).unwrap(), CremonaMap::identity());
        assert!(!is_involution(&m));
        assert!(is_involution(&CremonaMap::identity()));
        assert_eq!(compose_reduce(&CremonaMap::identity(), &m).unwrap(), m);
    }

    #[test]
    fn affine_extensions() {
        let t = extend_affine_automorphism(&[Elementary::Triangular(poly("x^2"))]).unwrap();
        assert_eq!(t.components(), &[poly("x*z"), poly("y*z + x^2"), poly("z^2")]);
        let tr = extend_affine_automorphism(&[Elementary::affine([[1, 0], [0, 1]], [1, 0])]).unwrap();
        assert_eq!(tr.components(), &[poly("x + z"), poly("y"), poly("z")]);
        let sw = extend_affine_automorphism(&[Elementary::affine([[0, 1], [1, 0]], [0, 0])]).unwrap();
        assert_eq!(sw.components(), &[poly("y"), poly("x"), poly("z")]);
        assert!(extend_affine_automorphism(&[Elementary::affine([[1, 1], [1, 1]], [0, 0])]).is_err());
        assert!(extend_affine_automorphism(&[Elementary::Triangular(poly("y"))]).is_err());
    }

    #[test]
    fn extensions_are_bijective_on_the_affine_chart() {
        let factors = vec![
            Elementary::Triangular(poly("x^2 - 3*x")),
            Elementary::affine([[0, 1], [1, 0]], [2, -1]),
            Elementary::Triangular(poly("x^3")),
            Elementary::affine([[2, 1], [1, 1]], [0, 5]),
        ];
        let m = extend_affine_automorphism(&factors).unwrap();
        let inv = extend_affine_automorphism(&inverse_factors(&factors)).unwrap();
        for a in -3..=3 {
            for b in -3..=3 {
                let p = [rat(a), rat(b), rat(1)];
                let img = m.apply(&p).unwrap();
                assert!(!img[2].is_zero());
                let back = inv.apply(&img).unwrap();
                let s = &back[2];
                assert_eq!([&back[0] / s, &back[1] / s], [rat(a), rat(b)]);
            }
        }
    }

    #[test]
    fn conic_parameterization() {
        let c2 = PlaneCurve::new(poly("x*z - y^2")).unwrap();
        assert!(check_parameterization(&c2, &[poly("x^2"), poly("x*y"), poly("y^2")]).unwrap());
        assert!(!check_parameterization(&c2, &[poly("x^2"), poly("x*y"), poly("x^2")]).unwrap());
        assert!(check_parameterization(&c2, &[poly("x^2"), poly("x"), poly("y^2")]).is_err());
    }

    #[test]
    fn strict_transform_of_cubic_under_triangular_map() {
        let m = extend_affine_automorphism(&[Elementary::Triangular(poly("x^2"))]).unwrap();
        let cubic = PlaneCurve::new(poly("y^2*z - x^3 + x*z^2")).unwrap();
        let lz = PlaneCurve::new(poly("z")).unwrap();
        assert_eq!(pullback(&m, &cubic), &poly("z^2") * &poly("(y*z + x^2)^2 - x^3*z + x*z^3"));
        let st = strict_transform(&m, &cubic, &[lz.clone()]).unwrap();
        assert!(st.curve.same_as(&PlaneCurve::new(poly("(y*z + x^2)^2 - x^3*z + x*z^3")).unwrap()));
        assert_eq!(st.removed, vec![2]);
        assert!(matches!(strict_transform(&m, &lz, &[lz.clone()]), Err(CremonaError::CurveContracted)));
    }
}
