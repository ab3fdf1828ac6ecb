//! Named curves with parameters `a, b, c`, and the corpus of expected facts.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::curvealg::ProjPoint;
use crate::exactpoly::{fmt_rational, parse_rational, rat, Rational};

const F2: &str = "(x*z - y^2)";
const F3: &str = "((c*x + y)*F2 + x^3)";
const F5: &str = "((2*x^2*(c*x + y) + (c^2*x + 2*c*y + z)*F2)*F2 + x^5)";

/// Curve templates in `x, y, z` and the parameters `a, b, c`.
pub const NAMED_CURVES: &[(&str, &str)] = &[
    ("L", "x"),
    ("Lx", "x"),
    ("Ly", "y"),
    ("Lz", "z"),
    ("C2", "F2"),
    ("N", "F3"),
    ("C5", "F5"),
    // smooth cubic meeting the conic only at (0,0,1)
    ("C3", "(a*x + 2*b*y - z)*F2 + x^3"),
    // its mirror image under x <-> z, meeting the conic only at (1,0,0)
    ("C3Q", "(a*z + 2*b*y - x)*F2 + z^3"),
    ("quintic", "a*x*F2^2 - 2*b*F3*F2 - F5 + x^3*F2"),
    ("deg15", "(a*F5 - 2*b*F3*F2 - x*F2^2)*F2^5 + F5^3"),
    ("cubic", "y^2*z - x^3 - a*x*z^2 - b*z^3"),
    ("ams_quartic", "(y*z + x^2)^2 - x^3*z - a*x*z^3 - b*z^4"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl Params {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Params { a: rat(a), b: rat(b), c: rat(c) }
    }

    /// Parses `a=<q>,b=<q>,c=<q>`; omitted names keep the default `(1, 1, 0)`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let mut p = Params::default();
        for part in s.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| format!("expected name=value, got `{part}`"))?;
            let v = parse_rational(v).ok_or_else(|| format!("bad rational `{v}`"))?;
            match k.trim() {
                "a" => p.a = v,
                "b" => p.b = v,
                "c" => p.c = v,
                other => return Err(format!("unknown parameter `{other}`")),
            }
        }
        Ok(p)
    }

    fn value(&self, name: char) -> &Rational {
        match name {
            'a' => &self.a,
            'b' => &self.b,
            _ => &self.c,
        }
    }
}

impl Default for Params {
    fn default() -> Self {
        Params::new(1, 1, 0)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a={},b={},c={}",
            fmt_rational(&self.a),
            fmt_rational(&self.b),
            fmt_rational(&self.c)
        )
    }
}

/// The two generic instantiations used by the corpus.
pub fn default_params() -> [Params; 2] {
    [Params::new(1, 1, 0), Params::new(2, -1, 1)]
}

/// Expands a curve name or polynomial text: the macros `F2, F3, F5` and the
/// parameters `a, b, c` are replaced textually, the latter by `(<value>)`.
pub fn expand(text: &str, params: &Params) -> String {
    let text = NAMED_CURVES
        .iter()
        .find(|(n, _)| *n == text.trim())
        .map_or(text, |(_, t)| t);
    let text = text.replace("F5", F5).replace("F3", F3).replace("F2", F2);
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            'a' | 'b' | 'c' => {
                out.push('(');
                out.push_str(&fmt_rational(params.value(ch)));
                out.push(')');
            }
            _ => out.push(ch),
        }
    }
    out
}

/// What an expectation is about; the expected value is compared with the
/// JSON serialization of the computed fact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Fact {
    Smooth,
    Degree,
    Genus,
    SingularPoints,
    MultiplicitySequence,
    StrictSelfIntersection,
    Verdict,
    TangentLineMeetsOnlyCusp,
    /// Intersection cycle with another curve.
    Intersection { with: String },
    /// Strict transform under a map (see `parse_map`) equals a curve up to scalar.
    StrictTransform { map: String, exceptional: String, expected: String },
    /// Kodaira types of all completions in the given case.
    Fiber { case: String, budget: Option<i64> },
    /// Number of components of the total transform.
    Components,
    /// Identity of forms checked exactly: `lhs == rhs`.
    Identity { lhs: String, rhs: String },
    /// Parameterization by forms in `s = x`, `t = y`.
    Parameterization { forms: [String; 3] },
    /// `h ∘ h` reduces to the identity.
    Involution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    #[serde(flatten)]
    pub fact: Fact,
    pub value: Value,
    /// Where the value comes from: reference, derived or trivial.
    pub tag: String,
    /// Acceptance criterion the expectation belongs to.
    pub criterion: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub curve: String,
    pub params: String,
    /// Point to resolve; defaults to the unique singular point.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
    pub expect: Vec<Expectation>,
}

impl CorpusEntry {
    pub fn params(&self) -> Result<Params, String> {
        Params::parse(&self.params)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub schema: u32,
    pub entries: Vec<CorpusEntry>,
}

fn point(x: i64, y: i64, z: Rational) -> ProjPoint {
    ProjPoint::new([rat(x), rat(y), z]).unwrap()
}

/// Expected cycle with full Bézout mass located, points in sorted order.
fn cycle(points: &[(ProjPoint, u32)], bezout: u32) -> Value {
    let mut points = points.to_vec();
    points.sort();
    let pts: Vec<Value> = points.iter().map(|(p, m)| json!({"P": p, "m": m})).collect();
    json!({"points": pts, "residual": 0, "bezout": bezout})
}

fn ex(fact: Fact, value: Value, tag: &str, criterion: u8) -> Expectation {
    Expectation { fact, value, tag: tag.into(), criterion }
}

fn identity(lhs: &str, rhs: &str, criterion: u8) -> Expectation {
    ex(
        Fact::Identity { lhs: lhs.into(), rhs: rhs.into() },
        json!(true),
        "derived",
        criterion,
    )
}

fn entry(name: String, curve: &str, params: &Params, expect: Vec<Expectation>) -> CorpusEntry {
    CorpusEntry {
        name,
        curve: curve.into(),
        params: params.to_string(),
        point: None,
        expect,
    }
}

/// The built-in corpus covering every acceptance criterion.
pub fn default_corpus() -> Corpus {
    let mut entries = Vec::new();
    let p1 = || point(0, 0, rat(1));

    for p in default_params() {
        let r1 = point(0, 1, &p.b * rat(2));
        let r2 = p1();
        entries.push(entry(
            format!("cubic configuration {p}"),
            "C3",
            &p,
            vec![
                ex(Fact::Smooth, json!(true), "reference", 1),
                ex(Fact::Intersection { with: "L".into() }, cycle(&[(r2.clone(), 2), (r1, 1)], 3), "reference", 1),
                ex(Fact::Intersection { with: "C2".into() }, cycle(&[(r2, 6)], 6), "reference", 1),
            ],
        ));
    }

    for c in [0, 1] {
        let p = Params::new(1, 1, c);
        // the second point of C5 on Lx: 2cy + z = 0
        let lx = [(p1(), 4), (point(0, 1, rat(-2 * c)), 1)];
        entries.push(entry(
            format!("conic configuration c={c}"),
            "N",
            &p,
            vec![
                ex(Fact::Intersection { with: "C2".into() }, cycle(&[(p1(), 6)], 6), "reference", 2),
                ex(
                    Fact::Parameterization {
                        forms: [
                            "x*y^2".into(),
                            "x*y*(x - c*y)".into(),
                            "x*(x - c*y)^2 - y^3".into(),
                        ],
                    },
                    json!(true),
                    "derived",
                    9,
                ),
                // the printed middle form s^2 t (s - ct) has degree 4 and is rejected
                ex(
                    Fact::Parameterization {
                        forms: [
                            "x*y^2".into(),
                            "x^2*y*(x - c*y)".into(),
                            "x*(x - c*y)^2 - y^3".into(),
                        ],
                    },
                    json!({"error": "components are not forms of one common degree"}),
                    "reference",
                    9,
                ),
            ],
        ));
        entries.push(entry(
            format!("quintic form c={c}"),
            "C5",
            &p,
            vec![
                ex(Fact::Intersection { with: "Lx".into() }, cycle(&lx, 5), "reference", 2),
                ex(Fact::Intersection { with: "C2".into() }, cycle(&[(p1(), 10)], 10), "reference", 2),
                ex(Fact::Intersection { with: "N".into() }, cycle(&[(p1(), 15)], 15), "reference", 2),
            ],
        ));
    }

    for c in [0, 1, -2] {
        let p = Params::new(1, 1, c);
        entries.push(entry(
            format!("conic involution c={c}"),
            "C2",
            &p,
            vec![
                ex(Fact::Involution, json!(true), "reference", 3),
                identity("F2 o h", "F2^5", 3),
                identity("F5 o h", "z*F2^12", 3),
                identity("F3 o h", "-y*F2^7", 3),
                identity("x*F5 - F3^2", "F2^3", 3),
            ],
        ));
    }

    for p in default_params() {
        entries.push(entry(
            format!("example quintic {p}"),
            "C3",
            &p,
            vec![ex(
                Fact::StrictTransform {
                    map: "h".into(),
                    exceptional: "C2".into(),
                    expected: "quintic".into(),
                },
                json!(true),
                "reference",
                4,
            )],
        ));
        entries.push(entry(
            format!("quintic {p}"),
            "quintic",
            &p,
            vec![
                ex(Fact::Degree, json!(5), "reference", 4),
                ex(Fact::Genus, json!(1), "reference", 4),
                ex(Fact::SingularPoints, json!([[p1(), 2]]), "reference", 4),
                ex(Fact::MultiplicitySequence, json!([2, 2, 2, 2, 2]), "reference", 4),
                ex(Fact::StrictSelfIntersection, json!(3), "reference", 4),
                ex(Fact::Verdict, json!("NON_AMS_MAX"), "reference", 4),
                ex(Fact::TangentLineMeetsOnlyCusp, json!(false), "reference", 7),
                ex(Fact::Fiber { case: "off".into(), budget: None }, json!(["I4*"]), "reference", 8),
                ex(Fact::Fiber { case: "on".into(), budget: None }, json!([]), "derived", 8),
            ],
        ));
        entries.push(entry(
            format!("example degree fifteen {p}"),
            "C3Q",
            &p,
            vec![ex(
                Fact::StrictTransform {
                    map: "h".into(),
                    exceptional: "C2".into(),
                    expected: "deg15".into(),
                },
                json!(true),
                "reference",
                5,
            )],
        ));
        entries.push(entry(
            format!("degree fifteen {p}"),
            "deg15",
            &p,
            vec![
                ex(Fact::Degree, json!(15), "reference", 5),
                ex(Fact::Genus, json!(1), "reference", 5),
                ex(Fact::MultiplicitySequence, json!([6, 6, 6, 6, 6, 6]), "reference", 5),
                ex(Fact::StrictSelfIntersection, json!(3), "reference", 5),
                ex(Fact::Verdict, json!("NON_AMS_MAX"), "derived", 7),
                ex(Fact::TangentLineMeetsOnlyCusp, json!(false), "derived", 7),
            ],
        ));
    }

    // smooth cubics y^2 z = x^3 + a x z^2 + b z^3 and their quartic transforms
    for (a, b) in [(-1, 0), (1, 1), (2, -1)] {
        let p = Params::new(a, b, 0);
        entries.push(entry(
            format!("AMS construction a={a},b={b}"),
            "cubic",
            &p,
            vec![
                ex(Fact::Smooth, json!(true), "trivial", 6),
                ex(
                    Fact::StrictTransform {
                        map: "triangular:x^2".into(),
                        exceptional: "Lz".into(),
                        expected: "ams_quartic".into(),
                    },
                    json!(true),
                    "derived",
                    6,
                ),
            ],
        ));
        entries.push(entry(
            format!("AMS quartic a={a},b={b}"),
            "ams_quartic",
            &p,
            vec![
                ex(Fact::Genus, json!(1), "reference", 6),
                ex(Fact::SingularPoints, json!([[point(0, 1, rat(0)), 2]]), "derived", 6),
                ex(Fact::Intersection { with: "Lz".into() }, cycle(&[(point(0, 1, rat(0)), 4)], 4), "reference", 6),
                ex(Fact::StrictSelfIntersection, json!(6), "reference", 6),
                ex(Fact::Verdict, json!("AMS"), "reference", 6),
                ex(Fact::TangentLineMeetsOnlyCusp, json!(true), "reference", 7),
                ex(Fact::Fiber { case: "on".into(), budget: None }, json!(["II*"]), "reference", 8),
            ],
        ));
    }
    Corpus { schema: 1, entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_round_trip() {
        let p = Params::parse("a=2, b=-1, c=1/3").unwrap();
        assert_eq!(Params::parse(&p.to_string()).unwrap(), p);
        assert_eq!(Params::parse("").unwrap(), Params::default());
        assert!(Params::parse("d=1").is_err());
        assert!(Params::parse("a=x").is_err());
    }

    #[test]
    fn expansion_substitutes_parameters() {
        let p = Params::parse("a=2,b=-1,c=1/2").unwrap();
        assert_eq!(expand("cubic", &p), "y^2*z - x^3 - (2)*x*z^2 - (-1)*z^3");
        assert_eq!(expand("a*x - c*y", &p), "(2)*x - (1/2)*y");
        assert!(expand("quintic", &p).contains("(x*z - y^2)"));
    }
}
