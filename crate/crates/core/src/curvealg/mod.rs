//! Projective plane curves over the rationals.

mod intersect;
mod singular;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactpoly::{fmt_rational, parse_rational, Monomial, MultiPoly, Rational, Var};

pub use intersect::{bounded_intersection_number, intersection_cycle, intersection_multiplicity, local_intersection_number};
pub use singular::{find_rational_singular_points, is_smooth, ExtensionFieldSingularity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("curve equation is the zero polynomial")]
    ZeroPolynomial,
    #[error("curve equation is constant")]
    Constant,
    #[error("curve equation is not homogeneous")]
    NotHomogeneous,
    #[error("curve equation is not squarefree (repeated factor divides {witness})")]
    NotSquarefree { witness: String },
    #[error("curves share the common component {factor}")]
    CommonComponent { factor: String },
    #[error("point {point} is not on the curve")]
    PointNotOnCurve { point: String },
    #[error("point has all coordinates zero")]
    ZeroPoint,
}

/// A point of the projective plane with rational coordinates, normalized
/// so that the last nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint([Rational; 3]);

impl ProjPoint {
    pub fn new(coords: [Rational; 3]) -> Result<Self, CurveError> {
        let k = (0..3).rev().find(|&i| !coords[i].is_zero()).ok_or(CurveError::ZeroPoint)?;
        let s = coords[k].recip();
        Ok(ProjPoint(coords.map(|c| c * &s)))
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Self::new([x, y, z].map(crate::exactpoly::rat)).expect("nonzero point")
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.0
    }

    /// Index of the coordinate normalized to 1.
    pub fn chart(&self) -> Var {
        let k = (0..3).rev().find(|&i| !self.0[i].is_zero()).unwrap();
        Var::ALL[k]
    }

    /// Parses `x,y,z` with rational entries.
    pub fn parse(s: &str) -> Option<Self> {
        let parts: Vec<_> = s.split(',').map(parse_rational).collect::<Option<_>>()?;
        let [a, b, c]: [Rational; 3] = parts.try_into().ok()?;
        Self::new([a, b, c]).ok()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            fmt_rational(&self.0[0]),
            fmt_rational(&self.0[1]),
            fmt_rational(&self.0[2])
        )
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjPoint{self}")
    }
}

/// Integers become JSON numbers, other rationals `"p/q"` strings.
pub(crate) fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    use num_traits::ToPrimitive;
    match r.is_integer().then(|| r.numer().to_i64()).flatten() {
        Some(n) => s.serialize_i64(n),
        None => s.serialize_str(&fmt_rational(r)),
    }
}

struct RatJson<'a>(&'a Rational);

impl Serialize for RatJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_rational(self.0, s)
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(3))?;
        for c in &self.0 {
            seq.serialize_element(&RatJson(c))?;
        }
        seq.end()
    }
}

/// A reduced projective plane curve given by a squarefree form.
#[derive(Clone)]
pub struct PlaneCurve {
    equation: MultiPoly,
    degree: u32,
    singular: OnceLock<Result<Vec<(ProjPoint, u32)>, ExtensionFieldSingularity>>,
}

impl PlaneCurve {
    pub fn new(p: MultiPoly) -> Result<Self, CurveError> {
        let (homog, degree) = p.degree_info().map_err(|_| CurveError::ZeroPolynomial)?;
        if !homog {
            return Err(CurveError::NotHomogeneous);
        }
        if degree == 0 {
            return Err(CurveError::Constant);
        }
        if !p.is_squarefree() {
            let mut g = p.clone();
            for v in Var::ALL {
                g = g.gcd(&p.derivative(v));
            }
            return Err(CurveError::NotSquarefree {
                witness: g.to_string(),
            });
        }
        Ok(PlaneCurve {
            equation: p,
            degree,
            singular: OnceLock::new(),
        })
    }

    pub fn parse(text: &str) -> Result<Self, crate::Error> {
        Ok(Self::new(crate::exactpoly::parse_poly(text)?)?)
    }

    pub fn equation(&self) -> &MultiPoly {
        &self.equation
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.equation.eval(p.coords()).is_zero()
    }

    pub(crate) fn singular_cache(
        &self,
    ) -> &OnceLock<Result<Vec<(ProjPoint, u32)>, ExtensionFieldSingularity>> {
        &self.singular
    }

    /// Same curve up to a nonzero scalar.
    pub fn same_as(&self, other: &PlaneCurve) -> bool {
        self.equation.is_scalar_multiple_of(&other.equation)
    }
}

impl fmt::Debug for PlaneCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneCurve(deg {}: {})", self.degree, self.equation)
    }
}

impl PartialEq for PlaneCurve {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

/// The affine chart containing `p`, recentered so that `p` is the origin.
///
/// The result keeps the names of the two free variables of the chart
/// (`x, y` for `z = 1`; `x, z` for `y = 1`; `y, z` for `x = 1`).
pub fn local_equation(f: &MultiPoly, p: &ProjPoint) -> MultiPoly {
    let chart = p.chart();
    let mut shift = p.coords().clone();
    shift[chart.index()] = Rational::zero();
    f.specialize(chart, &Rational::one()).translate(&shift)
}

/// The free variables of the affine chart containing `p`, in order.
pub fn chart_variables(p: &ProjPoint) -> (Var, Var) {
    match p.chart() {
        Var::Z => (Var::X, Var::Y),
        Var::Y => (Var::X, Var::Z),
        Var::X => (Var::Y, Var::Z),
    }
}

/// Local equation at `p` with the chart variables renamed to `x, y`.
pub fn germ_at(f: &MultiPoly, p: &ProjPoint) -> MultiPoly {
    let local = local_equation(f, p);
    let (u, v) = chart_variables(p);
    MultiPoly::from_terms(local.terms().map(|(m, c)| {
        (Monomial([m.exp(u), m.exp(v), 0]), c.clone())
    }))
}

pub fn multiplicity_at(c: &PlaneCurve, p: &ProjPoint) -> u32 {
    if !c.contains(p) {
        return 0;
    }
    local_equation(c.equation(), p).min_degree().unwrap_or(0)
}

/// Lowest-degree form of the local equation at `p`.
pub fn tangent_cone_at(c: &PlaneCurve, p: &ProjPoint) -> Result<MultiPoly, CurveError> {
    if !c.contains(p) {
        return Err(CurveError::PointNotOnCurve {
            point: p.to_string(),
        });
    }
    let local = local_equation(c.equation(), p);
    let m = local.min_degree().unwrap_or(0);
    Ok(local.homogeneous_part(m))
}

/// Rational points of `F . G` with their local intersection numbers; the
/// residual is the Bezout mass not located at rational points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionCycle {
    pub points: BTreeMap<ProjPoint, u32>,
    pub residual: u32,
    pub bezout: u32,
}

impl IntersectionCycle {
    pub fn located_mass(&self) -> u32 {
        self.points.values().sum()
    }

    pub fn multiplicity(&self, p: &ProjPoint) -> u32 {
        self.points.get(p).copied().unwrap_or(0)
    }
}

impl Serialize for IntersectionCycle {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            #[serde(rename = "P")]
            p: &'a ProjPoint,
            m: u32,
        }
        let pts: Vec<Entry> = self.points.iter().map(|(p, m)| Entry { p, m: *m }).collect();
        let mut st = s.serialize_struct("IntersectionCycle", 3)?;
        st.serialize_field("points", &pts)?;
        st.serialize_field("residual", &self.residual)?;
        st.serialize_field("bezout", &self.bezout)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly;

    #[test]
    fn point_normalization() {
        let p = ProjPoint::new([2, 4, 2].map(crate::exactpoly::rat)).unwrap();
        assert_eq!(p, ProjPoint::from_ints(1, 2, 1));
        assert_eq!(ProjPoint::from_ints(3, 0, 0), ProjPoint::from_ints(1, 0, 0));
        assert!(ProjPoint::new([0, 0, 0].map(crate::exactpoly::rat)).is_err());
        assert_eq!(ProjPoint::parse("0,1,2/3").unwrap(), ProjPoint::parse("0,3/2,1").unwrap());
    }

    #[test]
    fn make_curve_validation() {
        assert_eq!(PlaneCurve::new(poly("x*z - y^2")).unwrap().degree(), 2);
        assert!(matches!(
            PlaneCurve::new(poly("(x*z - y^2)^2")),
            Err(CurveError::NotSquarefree { .. })
        ));
        assert_eq!(PlaneCurve::new(poly("x + 1")).unwrap_err(), CurveError::NotHomogeneous);
        assert_eq!(PlaneCurve::new(MultiPoly::zero()).unwrap_err(), CurveError::ZeroPolynomial);
    }

    #[test]
    fn multiplicity_and_tangent_cone() {
        let c2 = PlaneCurve::new(poly("x*z - y^2")).unwrap();
        let o = ProjPoint::from_ints(0, 0, 1);
        assert_eq!(multiplicity_at(&c2, &o), 1);
        assert_eq!(tangent_cone_at(&c2, &o).unwrap(), poly("x"));
        assert_eq!(multiplicity_at(&c2, &ProjPoint::from_ints(1, 0, 0)), 1);
        assert_eq!(multiplicity_at(&c2, &ProjPoint::from_ints(1, 1, 0)), 0);
        assert!(tangent_cone_at(&c2, &ProjPoint::from_ints(1, 1, 0)).is_err());
        // AMS quartic: cusp at (0,1,0) with tangent cone z^2
        let q = PlaneCurve::new(poly("(y*z + x^2)^2 - x^3*z + x*z^3")).unwrap();
        let p = ProjPoint::from_ints(0, 1, 0);
        assert_eq!(multiplicity_at(&q, &p), 2);
        assert!(tangent_cone_at(&q, &p).unwrap().is_scalar_multiple_of(&poly("z^2")));
    }

    #[test]
    fn cycle_json_shape() {
        let mut points = BTreeMap::new();
        points.insert(ProjPoint::from_ints(0, 0, 1), 6);
        let c = IntersectionCycle {
            points,
            residual: 0,
            bezout: 6,
        };
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"points":[{"P":[0,0,1],"m":6}],"residual":0,"bezout":6}"#
        );
    }
}
