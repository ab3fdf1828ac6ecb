//! The fiber part `F0` of the pencil `|C'|` after the extra blowups over
//! `C' ∩ D0`, and the bounded search for its completion to a Kodaira fiber.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use super::{blow_down, classify_kodaira, FiberConfig, FiberError, KodairaType};
use crate::resolution::{ResolutionResult, WeightedDualGraph};

/// Position of the base point `Q` of the pencil relative to `E_{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AttachCase {
    /// `Q` is the point `C' ∩ E_{n-1}`.
    #[serde(rename = "on")]
    QOnEnm1,
    /// `Q` lies on `C'` away from `E_{n-1}`.
    #[serde(rename = "off")]
    QOffEnm1,
}

pub const E0: &str = "E0";
pub const E0_PRIME: &str = "E0'";

#[derive(Clone, Debug, Serialize)]
pub struct F0 {
    /// `(C')^2` on the minimal resolution.
    pub n: i64,
    pub case: AttachCase,
    /// Number of components of the total transform of the curve.
    pub r_d: usize,
    /// All curves over the curve after the extra blowups, `C'` and `E_n` included.
    pub surface: WeightedDualGraph,
    pub fiber_part: FiberConfig,
    /// Components that meet a 1-section once the fiber is complete.
    pub section_adjacent: Vec<String>,
}

impl F0 {
    /// The number of blowdowns down to a relatively minimal fibration.
    pub fn expected_budget(&self) -> i64 {
        self.r_d as i64 + self.n - 10
    }
}

/// Blows up `n - 1` times along `C'` starting at `C' ∩ D0`, then once at
/// the base point `Q`, and removes the sections and `C'`.
pub fn build_f0(res: &ResolutionResult, case: AttachCase) -> Result<F0, FiberError> {
    let n = res.strict_self_intersection;
    if n < 3 {
        return Err(FiberError::SelfIntersectionTooSmall(n));
    }
    let mut g = res.graph.clone();
    let (Some(cp), Some(d0)) = (g.c_prime, g.d0) else {
        return Err(FiberError::MissingStrictTransform);
    };
    let blow_up_on_c = |g: &mut WeightedDualGraph, at: Option<usize>, label: String| {
        let e = g.add_vertex(label, -1);
        g.vertex_mut(cp).weight -= 1;
        g.add_edge(e, cp, 1);
        if let Some(p) = at {
            g.vertex_mut(p).weight -= 1;
            g.remove_edge(p, cp);
            g.add_edge(e, p, 1);
        }
        e
    };
    let mut prev = d0;
    let mut chain = Vec::new();
    for i in 1..n {
        prev = blow_up_on_c(&mut g, Some(prev), format!("E{i}"));
        chain.push(prev);
    }
    let on = case == AttachCase::QOnEnm1;
    let en = blow_up_on_c(&mut g, on.then_some(prev), format!("E{n}"));
    debug_assert_eq!(g.weight(cp), 0);

    let mut part = g.clone();
    part.remove_vertex(en);
    part.remove_vertex(cp);
    let section_adjacent = if on {
        vec![format!("E{}", n - 1)]
    } else {
        part.remove_vertex(prev);
        // n >= 3, so E_{n-2} exists
        let before = chain[chain.len() - 2];
        vec![g.label(before).to_string(), E0_PRIME.to_string()]
    };
    Ok(F0 {
        n,
        case,
        r_d: res.components(),
        surface: g,
        fiber_part: FiberConfig::new(part),
        section_adjacent,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Completion {
    /// New curves and the component each is attached to.
    pub attachments: Vec<(String, String)>,
    pub contractions: Vec<String>,
    pub kodaira: KodairaType,
    pub fiber: FiberConfig,
}

/// Isomorphism-invariant key by color refinement on weights, loops and
/// edge multiplicities.
pub(crate) fn canonical_form(g: &WeightedDualGraph) -> String {
    let ids = g.ids();
    let mut color: BTreeMap<usize, usize> = BTreeMap::new();
    let mut sig: BTreeMap<usize, String> = ids
        .iter()
        .map(|&v| (v, format!("{}/{}", g.weight(v), g.vertex(v).loops)))
        .collect();
    for _ in 0..=ids.len() {
        let mut distinct: Vec<&String> = sig.values().collect();
        distinct.sort();
        distinct.dedup();
        color = sig
            .iter()
            .map(|(&v, s)| (v, distinct.binary_search(&s).unwrap()))
            .collect();
        sig = ids
            .iter()
            .map(|&v| {
                let mut nb: Vec<(u32, usize)> =
                    g.neighbors(v).iter().map(|&(u, m)| (m, color[&u])).collect();
                nb.sort_unstable();
                (v, format!("{}/{}{:?}", g.weight(v), g.vertex(v).loops, nb))
            })
            .collect();
    }
    let mut nodes: Vec<&String> = sig.values().collect();
    nodes.sort();
    let mut edges: Vec<(usize, usize, u32)> = g
        .edges()
        .map(|(a, b, m)| (color[&a].min(color[&b]), color[&a].max(color[&b]), m))
        .collect();
    edges.sort_unstable();
    format!("{nodes:?}{edges:?}")
}

fn labeled_key(g: &WeightedDualGraph) -> String {
    let mut s = String::new();
    for v in g.ids() {
        s += &format!("{}:{}:{};", g.label(v), g.weight(v), g.vertex(v).loops);
    }
    for (a, b, m) in g.edges() {
        s += &format!("{}-{}x{};", g.label(a), g.label(b), m);
    }
    s
}

struct Search<'a> {
    f0: &'a F0,
    seen: HashSet<(String, usize)>,
    kodaira_memo: HashMap<String, Option<KodairaType>>,
    found: Vec<Completion>,
}

impl Search<'_> {
    fn explore(&mut self, g: WeightedDualGraph, remaining: usize, seq: &mut Vec<String>, att: &[(String, String)]) {
        if !self.seen.insert((labeled_key(&g), remaining)) {
            return;
        }
        let contractible: Vec<usize> = g
            .ids()
            .into_iter()
            .filter(|&v| g.weight(v) == -1 && g.vertex(v).loops == 0 && g.label(v) != E0_PRIME)
            .collect();
        if remaining == 0 || contractible.is_empty() {
            self.evaluate(g, seq, att);
            return;
        }
        for v in contractible {
            let h = blow_down(&g, v).expect("weight -1 without loops");
            seq.push(g.label(v).to_string());
            self.explore(h, remaining - 1, seq, att);
            seq.pop();
        }
    }

    fn evaluate(&mut self, g: WeightedDualGraph, seq: &[String], att: &[(String, String)]) {
        if g.len() != 9 || g.ids().iter().any(|&v| g.weight(v) != -2) {
            return;
        }
        let key = canonical_form(&g);
        let kodaira = *self
            .kodaira_memo
            .entry(key)
            .or_insert_with(|| classify_kodaira(&g));
        let Some(kodaira) = kodaira else {
            return;
        };
        let fiber = FiberConfig::new(g);
        if !fiber.is_fiber() {
            return;
        }
        if self
            .f0
            .section_adjacent
            .iter()
            .any(|l| fiber.multiplicity_of(l) != Some(1))
        {
            return;
        }
        self.found.push(Completion {
            attachments: att.to_vec(),
            contractions: seq.to_vec(),
            kodaira,
            fiber,
        });
    }
}

/// Attaches `E0` (and `E0'` in the off case) by single edges to `F0`, runs
/// every blowdown sequence of length at most `budget` that never contracts
/// `E0'`, and keeps the results that are Kodaira fibers with nine
/// (-2)-components whose components next to the 1-sections are reduced.
pub fn complete_and_classify(f0: &F0, budget: usize) -> Vec<Completion> {
    let base = &f0.fiber_part.graph;
    let ids = base.ids();
    let mut search = Search {
        f0,
        seen: HashSet::new(),
        kodaira_memo: HashMap::new(),
        found: Vec::new(),
    };
    let mut starts = Vec::new();
    for &a in &ids {
        let mut g = base.clone();
        let e0 = g.add_vertex(E0, -1);
        g.add_edge(e0, a, 1);
        let att = vec![(E0.to_string(), base.label(a).to_string())];
        match f0.case {
            AttachCase::QOnEnm1 => starts.push((g, att)),
            AttachCase::QOffEnm1 => {
                for &b in &ids {
                    for joined in [false, true] {
                        let mut h = g.clone();
                        let e0p = h.add_vertex(E0_PRIME, -2);
                        h.add_edge(e0p, b, 1);
                        let mut att = att.clone();
                        att.push((E0_PRIME.to_string(), base.label(b).to_string()));
                        if joined {
                            h.add_edge(e0, e0p, 1);
                            att.push((E0.to_string(), E0_PRIME.to_string()));
                        }
                        starts.push((h, att));
                    }
                }
            }
        }
    }
    for (g, att) in starts {
        search.explore(g, budget, &mut Vec::new(), &att);
    }
    search.found
}

/// `Σ (r(F) - 1) <= 8` over the given fibers.
pub fn fiber_component_budget_check(fibers: &[FiberConfig]) -> bool {
    debug_assert!(fibers.iter().all(FiberConfig::is_fiber));
    fibers.iter().map(|f| f.components() - 1).sum::<usize>() <= 8
}

#[cfg(test)]
mod tests {
    use super::super::shapes::*;
    use super::*;

    #[test]
    fn canonical_form_ignores_labels_and_order() {
        let a = star(&[1, 2, 5]);
        let b = star(&[5, 1, 2]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&star(&[1, 3, 3])));
        assert_ne!(canonical_form(&cycle(9)), canonical_form(&d_tilde(4)));
    }
}
