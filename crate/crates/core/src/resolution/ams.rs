//! Classification of elliptic unicuspidal curves by `(C')^2`.

use serde::Serialize;

use super::{genus_of, minimal_embedded_resolution, ResolutionError};
use crate::curvealg::{
    find_rational_singular_points, intersection_cycle, tangent_cone_at,
    PlaneCurve, ProjPoint,
};
use crate::exactpoly::{MultiPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// `(C')^2 = 6`
    Ams,
    /// `(C')^2 = 3`
    NonAmsMax,
    /// `(C')^2 < 3`
    NonAms,
    /// not elliptic or not unicuspidal
    OutOfScope,
    /// `(C')^2` in `{4, 5}` or above 6 for an elliptic unicuspidal curve
    CounterexampleAlarm,
}

#[derive(Clone, Debug, Serialize)]
pub struct AmsReport {
    pub genus: i64,
    pub singular_points: Vec<(ProjPoint, u32)>,
    pub cusp_count: usize,
    pub cusp: Option<ProjPoint>,
    pub strict_self_intersection: Option<i64>,
    /// The tangent line at the cusp meets the curve only at the cusp.
    pub tangent_line_meets_only_cusp: Option<bool>,
    pub verdict: Verdict,
}

/// The tangent line at a point whose tangent cone is a power of one line.
pub fn cusp_tangent_line(c: &PlaneCurve, p: &ProjPoint) -> Option<PlaneCurve> {
    let cone = tangent_cone_at(c, p).ok()?;
    let lin = cone.squarefree_part();
    if lin.total_degree() != Some(1) {
        return None;
    }
    // back from local coordinates centered at p to homogeneous ones
    let chart = p.chart();
    let images = Var::ALL.map(|v| {
        if v == chart {
            MultiPoly::var(v)
        } else {
            &MultiPoly::var(v) - &MultiPoly::var(chart).scale(&p.coords()[v.index()])
        }
    });
    PlaneCurve::new(lin.substitute(&images).normalized()).ok()
}

fn tangent_flag(c: &PlaneCurve, p: &ProjPoint) -> Option<bool> {
    let line = cusp_tangent_line(c, p)?;
    let cycle = intersection_cycle(c, &line).ok()?;
    Some(cycle.points.len() == 1 && cycle.multiplicity(p) == c.degree())
}

pub fn classify_ams(c: &PlaneCurve) -> Result<AmsReport, ResolutionError> {
    let singular = find_rational_singular_points(c)?;
    let genus = genus_of(c)?;
    let mut cusps = Vec::new();
    for (p, _) in &singular {
        match minimal_embedded_resolution(c, p) {
            Ok(r) => cusps.push(r),
            Err(ResolutionError::NotUnibranch { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let mut report = AmsReport {
        genus,
        cusp_count: cusps.len(),
        singular_points: singular.clone(),
        cusp: None,
        strict_self_intersection: None,
        tangent_line_meets_only_cusp: None,
        verdict: Verdict::OutOfScope,
    };
    if singular.len() != 1 || cusps.len() != 1 {
        return Ok(report);
    }
    let r = &cusps[0];
    let n = r.strict_self_intersection;
    report.cusp = Some(r.point.clone());
    report.strict_self_intersection = Some(n);
    report.tangent_line_meets_only_cusp = tangent_flag(c, &r.point);
    if genus != 1 {
        return Ok(report);
    }
    report.verdict = match n {
        6 => Verdict::Ams,
        3 => Verdict::NonAmsMax,
        n if n < 3 => Verdict::NonAms,
        _ => Verdict::CounterexampleAlarm,
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly;

    #[test]
    fn tangent_line_of_cusp() {
        let c = PlaneCurve::new(poly("y^2*z - x^3")).unwrap();
        let l = cusp_tangent_line(&c, &ProjPoint::from_ints(0, 0, 1)).unwrap();
        assert_eq!(l.equation(), &poly("y"));
        // y = 0 meets the cuspidal cubic only at the cusp
        assert_eq!(tangent_flag(&c, &ProjPoint::from_ints(0, 0, 1)), Some(true));
        // cusp moved to (1, 2, 1) with tangent y - 2z
        let moved = PlaneCurve::new(poly("(y - 2*z)^2*z - (x - z)^3")).unwrap();
        let l = cusp_tangent_line(&moved, &ProjPoint::from_ints(1, 2, 1)).unwrap();
        assert_eq!(l.equation(), &poly("y - 2*z"));
    }

    #[test]
    fn rational_cusp_is_out_of_scope() {
        let c = PlaneCurve::new(poly("y^2*z - x^3")).unwrap();
        let r = classify_ams(&c).unwrap();
        assert_eq!(r.verdict, Verdict::OutOfScope);
        assert_eq!((r.genus, r.cusp_count), (0, 1));
        assert_eq!(r.strict_self_intersection, Some(3));
    }
}
