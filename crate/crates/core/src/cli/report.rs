//! Evaluation of corpus expectations into a deterministic report.

use std::cell::OnceCell;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use super::corpus::{Corpus, CorpusEntry, Expectation, Fact, Params};
use super::{parse_case, parse_curve, parse_map, parse_poly_text, CliError};
use crate::cremona::{check_parameterization, compose_reduce, is_involution, conic_involution, strict_transform, CremonaMap};
use crate::curvealg::{find_rational_singular_points, intersection_cycle, is_smooth, PlaneCurve, ProjPoint};
use crate::exactpoly::MultiPoly;
use crate::fibergraph::{build_f0, complete_and_classify};
use crate::resolution::{classify_ams, genus_of, minimal_embedded_resolution, AmsReport, ResolutionResult};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    #[serde(flatten)]
    pub fact: Fact,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
    pub tag: String,
    pub criterion: u8,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub params: String,
    pub equation: String,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Timing is kept out of the JSON form so reports are reproducible.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub entries: Vec<EntryReport>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn first_failure(&self) -> Option<(&EntryReport, &Check)> {
        self.entries
            .iter()
            .find_map(|e| e.checks.iter().find(|c| !c.pass).map(|c| (e, c)))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            for c in &e.checks {
                let status = if c.pass { "ok  " } else { "FAIL" };
                out += &format!(
                    "{status} [{}] {}: {} = {}",
                    c.criterion,
                    e.name,
                    fact_name(&c.fact),
                    c.actual
                );
                if !c.pass {
                    out += &format!(" (expected {})", c.expected);
                }
                out.push('\n');
            }
        }
        out += &format!("{} passed, {} failed\n", self.passed, self.failed);
        out
    }
}

pub fn fact_name(f: &Fact) -> String {
    match f {
        Fact::Intersection { with } => format!("intersection with {with}"),
        Fact::StrictTransform { map, expected, .. } => format!("strict transform under {map} is {expected}"),
        Fact::Fiber { case, .. } => format!("fiber completions ({case})"),
        Fact::Identity { lhs, rhs } => format!("{lhs} == {rhs}"),
        Fact::Parameterization { .. } => "parameterization".into(),
        other => serde_json::to_value(other).unwrap()["kind"].as_str().unwrap().to_string(),
    }
}

/// Lazily computed invariants of one curve.
struct Analysis {
    curve: PlaneCurve,
    params: Params,
    point: Option<ProjPoint>,
    ams: OnceCell<Result<AmsReport, String>>,
    resolution: OnceCell<Result<ResolutionResult, String>>,
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

impl Analysis {
    fn ams(&self) -> Result<&AmsReport, String> {
        self.ams
            .get_or_init(|| classify_ams(&self.curve).map_err(err))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn resolution(&self) -> Result<&ResolutionResult, String> {
        self.resolution
            .get_or_init(|| {
                let p = match &self.point {
                    Some(p) => p.clone(),
                    None => {
                        let sing = find_rational_singular_points(&self.curve).map_err(err)?;
                        match sing.as_slice() {
                            [(p, _)] => p.clone(),
                            _ => return Err(format!("{} singular points, give a point", sing.len())),
                        }
                    }
                };
                minimal_embedded_resolution(&self.curve, &p).map_err(err)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn h(&self) -> Result<CremonaMap, String> {
        conic_involution(&self.params.c).map_err(err)
    }

    /// A form in the corpus syntax, optionally composed with `h` by a
    /// trailing ` o h`.
    fn form(&self, text: &str) -> Result<MultiPoly, String> {
        match text.strip_suffix(" o h") {
            Some(inner) => Ok(self.form(inner)?.substitute(self.h()?.components())),
            None => parse_poly_text(text, &self.params).map_err(err),
        }
    }

    fn other(&self, name: &str) -> Result<PlaneCurve, String> {
        parse_curve(name, &self.params).map_err(err)
    }

    fn value(&self, fact: &Fact) -> Result<Value, String> {
        Ok(match fact {
            Fact::Smooth => json!(is_smooth(&self.curve)),
            Fact::Degree => json!(self.curve.degree()),
            Fact::Genus => json!(genus_of(&self.curve).map_err(err)?),
            Fact::SingularPoints => to_json(&find_rational_singular_points(&self.curve).map_err(err)?),
            Fact::MultiplicitySequence => to_json(&self.resolution()?.multiplicity_sequence),
            Fact::StrictSelfIntersection => json!(self.resolution()?.strict_self_intersection),
            Fact::Components => json!(self.resolution()?.components()),
            Fact::Verdict => to_json(&self.ams()?.verdict),
            Fact::TangentLineMeetsOnlyCusp => to_json(&self.ams()?.tangent_line_meets_only_cusp),
            Fact::Intersection { with } => {
                to_json(&intersection_cycle(&self.curve, &self.other(with)?).map_err(err)?)
            }
            Fact::StrictTransform { map, exceptional, expected } => {
                let m = parse_map(map, &self.params).map_err(err)?;
                let st = strict_transform(&m, &self.curve, &[self.other(exceptional)?]).map_err(err)?;
                json!(st.curve.same_as(&self.other(expected)?))
            }
            Fact::Fiber { case, budget } => {
                let f0 = build_f0(self.resolution()?, parse_case(case).map_err(err)?).map_err(err)?;
                let budget = budget.unwrap_or_else(|| f0.expected_budget());
                let found = complete_and_classify(&f0, budget.max(0) as usize);
                let mut kinds: Vec<String> = found.iter().map(|c| c.kodaira.to_string()).collect();
                kinds.sort();
                kinds.dedup();
                json!(kinds)
            }
            Fact::Identity { lhs, rhs } => json!(self.form(lhs)? == self.form(rhs)?),
            Fact::Parameterization { forms } => {
                let [f, g, h] = forms;
                let param = [self.form(f)?, self.form(g)?, self.form(h)?];
                json!(check_parameterization(&self.curve, &param).map_err(err)?)
            }
            Fact::Involution => {
                let h = self.h()?;
                json!(is_involution(&h) && compose_reduce(&h, &h).map_err(err)? == CremonaMap::identity())
            }
        })
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn check(e: &Expectation, actual: Result<Value, String>) -> Check {
    let actual = actual.unwrap_or_else(|m| json!({ "error": m }));
    Check {
        fact: e.fact.clone(),
        pass: actual == e.value,
        expected: e.value.clone(),
        actual,
        tag: e.tag.clone(),
        criterion: e.criterion,
    }
}

pub fn evaluate_entry(entry: &CorpusEntry) -> Result<EntryReport, CliError> {
    let start = Instant::now();
    let params = entry.params().map_err(CliError::Usage)?;
    let curve = parse_curve(&entry.curve, &params)?;
    let point = entry
        .point
        .as_deref()
        .map(|s| ProjPoint::parse(s).ok_or_else(|| CliError::Usage(format!("bad point `{s}`"))))
        .transpose()?;
    let a = Analysis {
        curve,
        params,
        point,
        ams: OnceCell::new(),
        resolution: OnceCell::new(),
    };
    let checks = entry.expect.iter().map(|e| check(e, a.value(&e.fact))).collect();
    Ok(EntryReport {
        name: entry.name.clone(),
        params: a.params.to_string(),
        equation: a.curve.equation().to_string(),
        checks,
        elapsed: start.elapsed(),
    })
}

/// Evaluates entries in parallel; the report keeps corpus order.
pub fn evaluate(corpus: &Corpus) -> Result<Report, CliError> {
    let results: Vec<Result<EntryReport, CliError>> = std::thread::scope(|s| {
        let handles: Vec<_> = corpus
            .entries
            .iter()
            .map(|e| s.spawn(move || evaluate_entry(e)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let entries = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let passed = entries.iter().flat_map(|e| &e.checks).filter(|c| c.pass).count();
    let failed = entries.iter().flat_map(|e| &e.checks).count() - passed;
    Ok(Report { schema: 1, entries, passed, failed })
}
