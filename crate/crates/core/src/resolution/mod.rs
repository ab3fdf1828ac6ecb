//! Point blowups of plane curve germs: minimal embedded resolution of
//! cusps, weighted dual graphs, delta invariants, genus and the
//! classification by the self-intersection of the strict transform.

mod ams;
pub mod graph;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::curvealg::{
    find_rational_singular_points, germ_at, multiplicity_at, CurveError,
    ExtensionFieldSingularity, PlaneCurve, ProjPoint,
};
use crate::exactpoly::upoly::{rational_roots, squarefree, RPoly};
use crate::exactpoly::{Monomial, MultiPoly, Rational, Var};

pub use ams::{classify_ams, cusp_tangent_line, AmsReport, Verdict};
pub use graph::{Vertex, WeightedDualGraph};

/// Generous bound on the number of blowups of a single resolution.
pub const STEP_BOUND: usize = 100;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResolutionError {
    #[error("germ does not pass through the origin")]
    NotThroughOrigin,
    #[error("point {0} is not a singular point of the curve")]
    NotSingular(String),
    #[error("germ at {point} is not locally irreducible ({detail})")]
    NotUnibranch { point: String, detail: String },
    #[error("repeated tangent direction over an algebraic extension: {factor}")]
    IrrationalTangent { factor: String },
    #[error("resolution did not finish within {0} blowups")]
    StepBound(usize),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Extension(#[from] ExtensionFieldSingularity),
}

/// An affine germ in local coordinates `u = x`, `v = y`, centered at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCurve {
    equation: MultiPoly,
}

impl LocalCurve {
    /// The equation is expected to be squarefree; only the origin is checked.
    pub fn new(equation: MultiPoly) -> Result<Self, ResolutionError> {
        assert!(!equation.uses(Var::Z), "germs live in x, y");
        if equation.is_zero() || !equation.constant_term().is_zero() {
            return Err(ResolutionError::NotThroughOrigin);
        }
        Ok(LocalCurve { equation })
    }

    pub fn equation(&self) -> &MultiPoly {
        &self.equation
    }

    pub fn multiplicity(&self) -> u32 {
        self.equation.min_degree().unwrap_or(0)
    }
}

/// Where the followed point sits after a blowup: chart `A` is
/// `v = u (v' + slope)` with exceptional line `u = 0`; chart `B` is
/// `u = u' v` with exceptional line `v = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "chart")]
pub enum Chart {
    A {
        #[serde(serialize_with = "crate::curvealg::serialize_rational")]
        slope: Rational,
    },
    B,
}

impl Chart {
    fn a0() -> Chart {
        Chart::A {
            slope: Rational::zero(),
        }
    }
}

/// Strict transform of `f` (of multiplicity `m`) in the given chart,
/// recentered at the point over the chart's tangent direction.
fn chart_transform(f: &MultiPoly, m: u32, chart: &Chart) -> MultiPoly {
    // term-wise: x^i y^j becomes x^(i+j-m) y^j, resp. x^i y^(i+j-m)
    match chart {
        Chart::A { slope } => MultiPoly::from_terms(
            f.terms()
                .map(|(e, c)| (Monomial([e.0[0] + e.0[1] - m, e.0[1], 0]), c.clone())),
        )
        .shift_var(Var::Y, slope),
        Chart::B => MultiPoly::from_terms(
            f.terms()
                .map(|(e, c)| (Monomial([e.0[0], e.0[0] + e.0[1] - m, 0]), c.clone())),
        ),
    }
}

/// Rational tangent directions with their multiplicities in the tangent
/// cone, and the remaining factor of the cone without rational roots.
fn tangent_directions(f: &MultiPoly, m: u32) -> (Vec<(Chart, u32)>, RPoly) {
    let cone = f.homogeneous_part(m);
    let mut rest = RPoly::from_multipoly(&cone.specialize(Var::X, &Rational::one()), Var::Y);
    let vertical = m - rest.degree() as u32;
    let mut dirs = Vec::new();
    for r in rational_roots(&rest) {
        let lin = RPoly::linear_root(&r);
        let mut e = 0;
        loop {
            let (q, rem) = rest.divrem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        dirs.push((Chart::A { slope: r }, e));
    }
    if vertical > 0 {
        dirs.push((Chart::B, vertical));
    }
    (dirs, rest)
}

/// One blowup of the origin.
#[derive(Clone, Debug)]
pub struct Blowup {
    pub multiplicity: u32,
    /// `v = u v'`, exceptional line `u = 0`.
    pub chart_a: LocalCurve,
    /// `u = u' v`, exceptional line `v = 0`.
    pub chart_b: LocalCurve,
    /// Rational points of the strict transform on the exceptional line,
    /// with the multiplicity of the corresponding tangent.
    pub directions: Vec<(Chart, u32)>,
    /// Degree of the part of the tangent cone without rational directions.
    pub irrational_degree: u32,
}

pub fn blow_up_once(germ: &LocalCurve) -> Blowup {
    let f = germ.equation();
    let m = germ.multiplicity();
    let (directions, rest) = tangent_directions(f, m);
    let whole = |chart: &Chart| LocalCurve {
        equation: chart_transform(f, m, chart),
    };
    Blowup {
        multiplicity: m,
        chart_a: whole(&Chart::a0()),
        chart_b: whole(&Chart::B),
        directions,
        irrational_degree: rest.degree() as u32,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupRecord {
    pub step: usize,
    /// Chart in which the branch is followed after this blowup.
    #[serde(flatten)]
    pub chart: Chart,
    pub multiplicity: u32,
    /// Labels of the exceptional curves through the center (0, 1 or 2).
    pub centers_on: Vec<String>,
}

/// Resolution walk of a unibranch germ.
struct Walk {
    records: Vec<BlowupRecord>,
    graph: WeightedDualGraph,
    /// The followed point satisfies the stopping condition.
    finished: bool,
    /// Exceptional curve through the final point, if unique.
    last: Option<usize>,
}

/// Exceptional curves through the followed point; each is a coordinate axis.
#[derive(Clone, Copy, Default)]
struct Axes {
    /// curve `u = 0`
    u: Option<usize>,
    /// curve `v = 0`
    v: Option<usize>,
}

fn stop_condition(f: &MultiPoly, axes: Axes) -> bool {
    if f.min_degree() != Some(1) {
        return false;
    }
    let zero = Rational::zero();
    match (axes.u, axes.v) {
        (Some(_), None) => f.specialize(Var::X, &zero).min_degree() == Some(1),
        (None, Some(_)) => f.specialize(Var::Y, &zero).min_degree() == Some(1),
        _ => false,
    }
}

fn walk(germ: &LocalCurve, budget: usize, point: &str) -> Result<Walk, ResolutionError> {
    let mut f = germ.equation().clone();
    let mut axes = Axes::default();
    let mut graph = WeightedDualGraph::new();
    let mut records = Vec::new();
    loop {
        if !records.is_empty() && stop_condition(&f, axes) {
            return Ok(Walk {
                records,
                graph,
                finished: true,
                last: axes.u.or(axes.v),
            });
        }
        if records.len() == budget {
            return Ok(Walk {
                records,
                graph,
                finished: false,
                last: None,
            });
        }
        let m = f.min_degree().unwrap_or(0);
        let (dirs, rest) = tangent_directions(&f, m);
        if dirs.len() != 1 || rest.degree() > 0 {
            return Err(ResolutionError::NotUnibranch {
                point: point.to_string(),
                detail: format!("{} tangent directions at blowup {}", dirs.len(), records.len() + 1),
            });
        }
        let chart = dirs[0].0.clone();

        let through: Vec<usize> = [axes.u, axes.v].into_iter().flatten().collect();
        let e = graph.add_vertex(format!("S{}", records.len() + 1), -1);
        for &c in &through {
            graph.vertex_mut(c).weight -= 1;
            graph.add_edge(e, c, 1);
        }
        if let [a, b] = through[..] {
            graph.remove_edge(a, b);
        }
        records.push(BlowupRecord {
            step: records.len() + 1,
            chart: chart.clone(),
            multiplicity: m,
            centers_on: through.iter().map(|&c| graph.label(c).to_string()).collect(),
        });

        if m == 1 && matches!(&chart, Chart::A { slope } if !slope.is_zero()) {
            // a smooth branch moved off every old axis meets only the new
            // curve, transversally; skip the (costly) shifted transform
            return Ok(Walk {
                records,
                graph,
                finished: true,
                last: Some(e),
            });
        }
        f = chart_transform(&f, m, &chart);
        axes = match &chart {
            Chart::A { slope } => Axes {
                u: Some(e),
                v: if slope.is_zero() { axes.v } else { None },
            },
            Chart::B => Axes {
                u: axes.u,
                v: Some(e),
            },
        };
    }
}

/// Decomposition of the exceptional tree into the chains `A_i`, `B_i`
/// around the rupture vertices; `D0` is the last rupture vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChainStructure {
    pub g: usize,
    pub a_chains: Vec<Vec<String>>,
    pub b_chains: Vec<Vec<String>>,
}

/// Reads the chain decomposition off the exceptional part of a resolution
/// graph and sets `d1`, `d2`. The first exceptional curve is always a leaf,
/// so the path from it to `D0` carries every rupture vertex.
fn chain_structure(graph: &mut WeightedDualGraph, first: usize) -> ChainStructure {
    let Some(d0) = graph.d0 else {
        return ChainStructure::default();
    };
    let exc: BTreeSet<usize> = graph.ids().into_iter().filter(|&v| Some(v) != graph.c_prime).collect();
    let tree = graph.induced(&exc);

    // path first -> d0
    let mut parent = BTreeMap::new();
    let mut queue = VecDeque::from([first]);
    parent.insert(first, first);
    while let Some(v) = queue.pop_front() {
        for (u, _) in tree.neighbors(v) {
            if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(u) {
                e.insert(v);
                queue.push_back(u);
            }
        }
    }
    let mut path = vec![d0];
    while *path.last().unwrap() != first {
        path.push(parent[path.last().unwrap()]);
    }
    path.reverse();
    let on_path: BTreeSet<usize> = path.iter().copied().collect();

    let ruptures: Vec<usize> = path
        .iter()
        .enumerate()
        .filter(|&(i, &v)| v == d0 || (i > 0 && tree.degree(v) >= 3))
        .map(|(i, _)| i)
        .collect();

    let label = |v: usize| graph.label(v).to_string();
    let mut a_chains = Vec::new();
    let mut b_chains = Vec::new();
    let mut start = 0;
    for &r in &ruptures {
        a_chains.push(path[start..r].iter().map(|&v| label(v)).collect());
        // the leg at the rupture vertex, listed outward
        let mut leg = Vec::new();
        let mut seen = on_path.clone();
        let mut queue: VecDeque<usize> = tree
            .neighbors(path[r])
            .into_iter()
            .map(|(u, _)| u)
            .filter(|u| !on_path.contains(u))
            .collect();
        while let Some(v) = queue.pop_front() {
            if !seen.insert(v) {
                continue;
            }
            leg.push(v);
            queue.extend(tree.neighbors(v).into_iter().map(|(u, _)| u));
        }
        b_chains.push(leg.iter().map(|&v| label(v)).collect::<Vec<_>>());
        start = r;
    }
    let last_rupture = *ruptures.last().unwrap();
    graph.d2 = (last_rupture > 0).then(|| path[last_rupture - 1]);
    graph.d1 = tree
        .neighbors(d0)
        .into_iter()
        .map(|(u, _)| u)
        .find(|u| !on_path.contains(u));
    ChainStructure {
        g: ruptures.len(),
        a_chains,
        b_chains,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionResult {
    pub point: ProjPoint,
    pub degree: u32,
    pub records: Vec<BlowupRecord>,
    pub multiplicity_sequence: Vec<u32>,
    pub full_sequence: Vec<u32>,
    pub delta: u32,
    pub genus: i64,
    pub strict_self_intersection: i64,
    pub chains: ChainStructure,
    pub graph: WeightedDualGraph,
}

impl ResolutionResult {
    pub fn blowups(&self) -> usize {
        self.records.len()
    }

    /// Number of components of the total transform of the curve, the
    /// strict transform included.
    pub fn components(&self) -> usize {
        self.graph.len()
    }
}

fn check_singular(c: &PlaneCurve, p: &ProjPoint) -> Result<LocalCurve, ResolutionError> {
    if !c.contains(p) {
        return Err(CurveError::PointNotOnCurve {
            point: p.to_string(),
        }
        .into());
    }
    if multiplicity_at(c, p) < 2 {
        return Err(ResolutionError::NotSingular(p.to_string()));
    }
    LocalCurve::new(germ_at(c.equation(), p))
}

/// Shortest blowup sequence over a unibranch singular point after which
/// the strict transform is smooth and crosses exactly one exceptional
/// curve, transversally.
pub fn minimal_embedded_resolution(
    c: &PlaneCurve,
    p: &ProjPoint,
) -> Result<ResolutionResult, ResolutionError> {
    let germ = check_singular(c, p)?;
    let w = walk(&germ, STEP_BOUND, &p.to_string())?;
    if !w.finished {
        return Err(ResolutionError::StepBound(STEP_BOUND));
    }
    let mut graph = w.graph;
    let full: Vec<u32> = w.records.iter().map(|r| r.multiplicity).collect();
    let d = i64::from(c.degree());
    let self_int = d * d - full.iter().map(|&m| i64::from(m * m)).sum::<i64>();
    let d0 = w.last.expect("stopping point lies on one curve");
    debug_assert_eq!(d0, graph.ids().len() - 1, "last exceptional curve carries the branch");
    let cp = graph.add_vertex("C'", self_int);
    graph.add_edge(cp, d0, 1);
    graph.d0 = Some(d0);
    graph.c_prime = Some(cp);
    let chains = chain_structure(&mut graph, 0);
    let delta = full.iter().map(|m| m * (m - 1) / 2).sum();
    Ok(ResolutionResult {
        point: p.clone(),
        degree: c.degree(),
        multiplicity_sequence: full.iter().copied().filter(|&m| m >= 2).collect(),
        delta,
        genus: genus_with_known(c, p, delta)?,
        strict_self_intersection: self_int,
        full_sequence: full,
        records: w.records,
        chains,
        graph,
    })
}

/// Whether the stopping condition is reached within `budget` blowups.
pub fn resolves_within(c: &PlaneCurve, p: &ProjPoint, budget: usize) -> Result<bool, ResolutionError> {
    let germ = check_singular(c, p)?;
    Ok(walk(&germ, budget, &p.to_string())?.finished)
}

/// Delta invariant of a germ, through the rational infinitely near points.
pub fn local_delta(germ: &LocalCurve) -> Result<u32, ResolutionError> {
    let m = germ.multiplicity();
    if m < 2 {
        return Ok(0);
    }
    let (directions, rest) = tangent_directions(germ.equation(), m);
    if squarefree(&rest).degree() < rest.degree() {
        return Err(ResolutionError::IrrationalTangent {
            factor: rest.monic().to_multipoly(Var::Y).to_string(),
        });
    }
    let mut delta = m * (m - 1) / 2;
    for (chart, e) in &directions {
        if *e >= 2 {
            let next = LocalCurve::new(chart_transform(germ.equation(), m, chart))?;
            delta += local_delta(&next)?;
        }
    }
    Ok(delta)
}

/// `(d-1)(d-2)/2` minus the deltas of all singular points.
pub fn genus_of(c: &PlaneCurve) -> Result<i64, ResolutionError> {
    let d = i64::from(c.degree());
    let mut g = (d - 1) * (d - 2) / 2;
    for (p, _) in find_rational_singular_points(c)? {
        g -= i64::from(local_delta(&LocalCurve::new(germ_at(c.equation(), &p))?)?);
    }
    Ok(g)
}

/// As [`genus_of`] with the delta invariant at `known` already computed.
fn genus_with_known(c: &PlaneCurve, known: &ProjPoint, delta: u32) -> Result<i64, ResolutionError> {
    let d = i64::from(c.degree());
    let mut g = (d - 1) * (d - 2) / 2 - i64::from(delta);
    for (p, _) in find_rational_singular_points(c)? {
        if &p != known {
            g -= i64::from(local_delta(&LocalCurve::new(germ_at(c.equation(), &p))?)?);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly;

    fn curve(s: &str) -> PlaneCurve {
        PlaneCurve::new(poly(s)).unwrap()
    }

    #[test]
    fn blowup_of_cusps() {
        let b = blow_up_once(&LocalCurve::new(poly("y^2 - x^3")).unwrap());
        assert_eq!(b.multiplicity, 2);
        assert_eq!(b.chart_a.equation(), &poly("y^2 - x"));
        assert_eq!(b.directions, vec![(Chart::a0(), 2)]);
        let b = blow_up_once(&LocalCurve::new(poly("y^2 - x^11")).unwrap());
        assert_eq!(b.chart_a.equation(), &poly("y^2 - x^9"));
        let b = blow_up_once(&LocalCurve::new(poly("y - x^2")).unwrap());
        assert_eq!(b.multiplicity, 1);
        assert_eq!(b.chart_a.multiplicity(), 1);
        assert!(LocalCurve::new(poly("y - 1")).is_err());
    }

    #[test]
    fn cuspidal_cubic() {
        let c = curve("y^2*z - x^3");
        let r = minimal_embedded_resolution(&c, &ProjPoint::from_ints(0, 0, 1)).unwrap();
        assert_eq!(r.full_sequence, vec![2, 1, 1]);
        assert_eq!(r.multiplicity_sequence, vec![2]);
        assert_eq!((r.delta, r.genus, r.strict_self_intersection), (1, 0, 3));
        let g = &r.graph;
        let w: Vec<i64> = g.ids().iter().map(|&v| g.weight(v)).collect();
        assert_eq!(w, vec![-3, -2, -1, 3]);
        assert_eq!(g.neighbors(2).len(), 3);
        assert_eq!(r.chains.g, 1);
        assert_eq!(r.chains.a_chains, vec![vec!["S1".to_string()]]);
        assert_eq!(r.chains.b_chains, vec![vec!["S2".to_string()]]);
        assert_eq!((g.d2, g.d1), (Some(0), Some(1)));
        assert!(!resolves_within(&c, &ProjPoint::from_ints(0, 0, 1), 2).unwrap());
    }

    #[test]
    fn higher_cusp() {
        // y^2 = x^5: sequence 2,2,1,1 and chain -2 -3 -1 -2
        let c = curve("y^2*z^3 - x^5");
        let r = minimal_embedded_resolution(&c, &ProjPoint::from_ints(0, 0, 1)).unwrap();
        assert_eq!(r.full_sequence, vec![2, 2, 1, 1]);
        let g = &r.graph;
        let w: Vec<i64> = g.ids().iter().map(|&v| g.weight(v)).collect();
        assert_eq!(w, vec![-2, -3, -2, -1, 25 - 10]);
        assert_eq!(r.chains.a_chains, vec![vec!["S1".to_string(), "S2".to_string()]]);
    }

    #[test]
    fn two_pairs() {
        // (y^2 - x^3)^2 - x^5 y: two characteristic pairs
        let c = curve("(y^2*z - x^3)^2 - x^5*y");
        let p = ProjPoint::from_ints(0, 0, 1);
        let r = minimal_embedded_resolution(&c, &p).unwrap();
        assert_eq!(r.chains.g, 2);
        for chain in r.chains.a_chains.iter().chain(&r.chains.b_chains) {
            assert!(!chain.is_empty());
            for l in chain {
                assert!(r.graph.weight(r.graph.find(l).unwrap()) <= -2);
            }
        }
        for chain in &r.chains.a_chains {
            assert!(chain.iter().any(|l| r.graph.weight(r.graph.find(l).unwrap()) <= -3));
        }
    }

    #[test]
    fn node_is_rejected_but_has_delta_one() {
        let c = curve("y^2*z - x^3 - x^2*z");
        let p = ProjPoint::from_ints(0, 0, 1);
        assert!(matches!(
            minimal_embedded_resolution(&c, &p),
            Err(ResolutionError::NotUnibranch { .. })
        ));
        assert_eq!(genus_of(&c).unwrap(), 0);
        assert!(matches!(
            minimal_embedded_resolution(&c, &ProjPoint::from_ints(0, 1, 0)),
            Err(ResolutionError::NotSingular(_))
        ));
    }

    #[test]
    fn deltas() {
        let d = |s: &str| local_delta(&LocalCurve::new(poly(s)).unwrap()).unwrap();
        assert_eq!(d("y^2 - x^3"), 1);
        assert_eq!(d("y^2 - x^4"), 2);
        assert_eq!(d("x*y*(x - y)"), 3);
        assert_eq!(d("y^2 - 2*x^2 + x^3"), 1);
        assert!(local_delta(&LocalCurve::new(poly("(y^2 - 2*x^2)^2 + x^5")).unwrap()).is_err());
    }

    #[test]
    fn smooth_cubic_genus() {
        assert_eq!(genus_of(&curve("y^2*z - x^3 - x*z^2 - z^3")).unwrap(), 1);
        assert_eq!(genus_of(&curve("x*z - y^2")).unwrap(), 0);
    }
}
