//! Weighted intersection graphs of fibers of elliptic fibrations: fiber
//! multiplicities, Kodaira types of (-2)-configurations, blowdowns, and
//! the completion search over the pencil spanned by the strict transform.

mod search;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactpoly::Rational;
use crate::resolution::WeightedDualGraph;

pub use search::{
    build_f0, complete_and_classify, fiber_component_budget_check, AttachCase, Completion, F0,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiberError {
    #[error("vertex {0} cannot be blown down (needs weight -1 and no loops)")]
    NotContractible(String),
    #[error("the graph admits no positive solution of F.E = 0")]
    NotAFiber,
    #[error("the strict transform has self-intersection {0}, need at least 3")]
    SelfIntersectionTooSmall(i64),
    #[error("the resolution graph has no marked strict transform")]
    MissingStrictTransform,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KodairaType {
    I(u32),
    IStar(u32),
    IIStar,
    IIIStar,
    IVStar,
}

impl KodairaType {
    pub fn components(self) -> u32 {
        match self {
            KodairaType::I(n) => n,
            KodairaType::IStar(n) => n + 5,
            KodairaType::IIStar => 9,
            KodairaType::IIIStar => 8,
            KodairaType::IVStar => 7,
        }
    }

    /// Largest multiplicity in the fiber.
    pub fn max_multiplicity(self) -> u64 {
        match self {
            KodairaType::I(_) => 1,
            KodairaType::IStar(_) => 2,
            KodairaType::IIStar => 6,
            KodairaType::IIIStar => 4,
            KodairaType::IVStar => 3,
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(n) => write!(f, "I{n}"),
            KodairaType::IStar(n) => write!(f, "I{n}*"),
            KodairaType::IIStar => write!(f, "II*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IVStar => write!(f, "IV*"),
        }
    }
}

impl Serialize for KodairaType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Primitive positive integer kernel vector of the intersection matrix, in
/// vertex id order. Weights are self-intersections; loops only record nodes.
pub fn solve_multiplicities(g: &WeightedDualGraph) -> Result<Vec<u64>, FiberError> {
    if g.is_empty() || !g.is_connected() {
        return Err(FiberError::NotAFiber);
    }
    let (_, m) = g.intersection_matrix();
    let kernel = rational_kernel(&m);
    if kernel.len() != 1 {
        return Err(FiberError::NotAFiber);
    }
    let v = &kernel[0];
    let sign = if v.iter().any(|x| x.is_positive()) { 1 } else { -1 };
    if v.iter().any(|x| x.is_zero() || (x.is_positive() != (sign > 0))) {
        return Err(FiberError::NotAFiber);
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from(lcm.clone())).to_integer().abs()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.iter()
        .map(|x| (x / &g).to_u64().ok_or(FiberError::NotAFiber))
        .collect()
}

/// Basis of the rational null space, one vector per free column.
fn rational_kernel(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let d = &a[row][c] * &f;
                    a[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][free].clone();
            }
            v
        })
        .collect()
}

/// Kodaira type of a simple normal crossing configuration of (-2)-curves,
/// or `None`. Non-SNC fibers (I1, II, III, IV) are never recognized.
pub fn classify_kodaira(g: &WeightedDualGraph) -> Option<KodairaType> {
    let t = match_pattern(g)?;
    let mult = solve_multiplicities(g).ok()?;
    (mult.iter().max() == Some(&t.max_multiplicity())).then_some(t)
}

fn match_pattern(g: &WeightedDualGraph) -> Option<KodairaType> {
    let ids = g.ids();
    let n = ids.len();
    if n < 2 || !g.is_connected() {
        return None;
    }
    if ids.iter().any(|&v| g.weight(v) != -2 || g.vertex(v).loops > 0) {
        return None;
    }
    let edges: Vec<_> = g.edges().collect();
    if edges.iter().any(|&(_, _, m)| m > 1) {
        return (n == 2 && edges.len() == 1 && edges[0].2 == 2).then_some(KodairaType::I(2));
    }
    let deg: BTreeMap<usize, u32> = ids.iter().map(|&v| (v, g.degree(v))).collect();
    if edges.len() == n {
        return deg.values().all(|&d| d == 2).then_some(KodairaType::I(n as u32));
    }
    if edges.len() != n - 1 {
        return None;
    }
    let branch: Vec<usize> = ids.iter().copied().filter(|v| deg[v] >= 3).collect();
    let leaves_at = |v: usize| g.neighbors(v).iter().filter(|(u, _)| deg[u] == 1).count();
    match branch[..] {
        [b] if deg[&b] == 4 => (n == 5).then_some(KodairaType::IStar(0)),
        [b] if deg[&b] == 3 => {
            let mut arms: Vec<usize> = g
                .neighbors(b)
                .iter()
                .map(|&(u, _)| arm_length(g, b, u))
                .collect();
            arms.sort_unstable();
            match arms[..] {
                [2, 2, 2] => Some(KodairaType::IVStar),
                [1, 3, 3] => Some(KodairaType::IIIStar),
                [1, 2, 5] => Some(KodairaType::IIStar),
                _ => None,
            }
        }
        [a, b] if deg[&a] == 3 && deg[&b] == 3 && leaves_at(a) == 2 && leaves_at(b) == 2 => {
            Some(KodairaType::IStar(n as u32 - 5))
        }
        _ => None,
    }
}

/// Length of the chain starting at `next`, walking away from `from`.
fn arm_length(g: &WeightedDualGraph, mut from: usize, mut next: usize) -> usize {
    let mut len = 1;
    loop {
        let onward: Vec<usize> = g
            .neighbors(next)
            .into_iter()
            .map(|(u, _)| u)
            .filter(|&u| u != from)
            .collect();
        match onward[..] {
            [u] => {
                from = next;
                next = u;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// Contracts the (-1)-curve `v`: each neighbor gains `k^2` in weight and
/// `k(k-1)/2` loops (with `k` its edge multiplicity to `v`), and every pair
/// of neighbors gains the product of their multiplicities as edges.
pub fn blow_down(g: &WeightedDualGraph, v: usize) -> Result<WeightedDualGraph, FiberError> {
    if g.weight(v) != -1 || g.vertex(v).loops > 0 {
        return Err(FiberError::NotContractible(g.label(v).to_string()));
    }
    let mut out = g.clone();
    let nb = g.neighbors(v);
    for &(u, k) in &nb {
        let x = out.vertex_mut(u);
        x.weight += i64::from(k * k);
        x.loops += k * (k - 1) / 2;
    }
    for (i, &(u, k)) in nb.iter().enumerate() {
        for &(w, l) in &nb[i + 1..] {
            out.add_edge(u, w, k * l);
        }
    }
    out.remove_vertex(v);
    Ok(out)
}

/// A fiber candidate together with its multiplicities, when they exist.
#[derive(Clone, Debug)]
pub struct FiberConfig {
    pub graph: WeightedDualGraph,
    pub multiplicities: Option<Vec<u64>>,
}

impl FiberConfig {
    pub fn new(graph: WeightedDualGraph) -> Self {
        let multiplicities = solve_multiplicities(&graph).ok();
        FiberConfig {
            graph,
            multiplicities,
        }
    }

    pub fn components(&self) -> usize {
        self.graph.len()
    }

    pub fn multiplicity_of(&self, label: &str) -> Option<u64> {
        let v = self.graph.find(label)?;
        let pos = self.graph.ids().iter().position(|&u| u == v)?;
        Some(self.multiplicities.as_ref()?[pos])
    }

    /// Recomputes `F.E_j` for every component and `F^2` from the matrix.
    pub fn is_fiber(&self) -> bool {
        let Some(n) = &self.multiplicities else {
            return false;
        };
        let (_, m) = self.graph.intersection_matrix();
        let fe: Vec<i128> = m
            .iter()
            .map(|row| row.iter().zip(n).map(|(&a, &b)| i128::from(a) * i128::from(b)).sum())
            .collect();
        let f2: i128 = fe.iter().zip(n).map(|(&a, &b)| a * i128::from(b)).sum();
        fe.iter().all(|&x| x == 0) && f2 == 0
    }

    pub fn to_dot(&self, name: &str) -> String {
        let ids = self.graph.ids();
        self.graph.to_dot_with(name, |v| {
            let pos = ids.iter().position(|&u| u == v)?;
            Some(format!("x{}", self.multiplicities.as_ref()?[pos]))
        })
    }
}

impl Serialize for FiberConfig {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            graph: &'a WeightedDualGraph,
            multiplicities: &'a Option<Vec<u64>>,
            kodaira: Option<KodairaType>,
        }
        Out {
            graph: &self.graph,
            multiplicities: &self.multiplicities,
            kodaira: classify_kodaira(&self.graph),
        }
        .serialize(s)
    }
}

/// Standard graphs used by tests and the CLI.
pub mod shapes {
    use crate::resolution::WeightedDualGraph;

    pub fn cycle(n: usize) -> WeightedDualGraph {
        let mut g = WeightedDualGraph::new();
        let ids: Vec<usize> = (0..n).map(|i| g.add_vertex(format!("C{i}"), -2)).collect();
        if n == 2 {
            g.add_edge(ids[0], ids[1], 2);
        } else {
            for i in 0..n {
                g.add_edge(ids[i], ids[(i + 1) % n], 1);
            }
        }
        g
    }

    /// A (-2)-star: center with arms of the given lengths.
    pub fn star(arms: &[usize]) -> WeightedDualGraph {
        let mut g = WeightedDualGraph::new();
        let c = g.add_vertex("C", -2);
        for (a, &len) in arms.iter().enumerate() {
            let mut prev = c;
            for i in 0..len {
                let v = g.add_vertex(format!("A{a}_{i}"), -2);
                g.add_edge(prev, v, 1);
                prev = v;
            }
        }
        g
    }

    /// Extended D_{n+4}: a chain of `n + 1` vertices with two leaves at each end.
    pub fn d_tilde(n: usize) -> WeightedDualGraph {
        let mut g = WeightedDualGraph::new();
        if n == 0 {
            return star(&[1, 1, 1, 1]);
        }
        let chain: Vec<usize> = (0..=n).map(|i| g.add_vertex(format!("P{i}"), -2)).collect();
        for w in chain.windows(2) {
            g.add_edge(w[0], w[1], 1);
        }
        for (end, tag) in [(chain[0], "L"), (chain[n], "R")] {
            for k in 0..2 {
                let v = g.add_vertex(format!("{tag}{k}"), -2);
                g.add_edge(end, v, 1);
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::shapes::*;
    use super::*;

    #[test]
    fn multiplicities_of_standard_fibers() {
        assert_eq!(solve_multiplicities(&cycle(9)).unwrap(), vec![1; 9]);
        let e8 = solve_multiplicities(&star(&[1, 2, 5])).unwrap();
        assert_eq!(e8.iter().max(), Some(&6));
        assert_eq!(e8.iter().sum::<u64>(), 30);
        let mut single = WeightedDualGraph::new();
        single.add_vertex("E", -1);
        assert_eq!(solve_multiplicities(&single), Err(FiberError::NotAFiber));
    }

    #[test]
    fn kodaira_patterns() {
        assert_eq!(classify_kodaira(&d_tilde(4)), Some(KodairaType::IStar(4)));
        assert_eq!(d_tilde(4).len(), 9);
        assert_eq!(classify_kodaira(&d_tilde(0)), Some(KodairaType::IStar(0)));
        assert_eq!(classify_kodaira(&d_tilde(1)), Some(KodairaType::IStar(1)));
        assert_eq!(classify_kodaira(&cycle(9)), Some(KodairaType::I(9)));
        assert_eq!(classify_kodaira(&cycle(2)), Some(KodairaType::I(2)));
        assert_eq!(classify_kodaira(&star(&[1, 2, 5])), Some(KodairaType::IIStar));
        assert_eq!(classify_kodaira(&star(&[1, 3, 3])), Some(KodairaType::IIIStar));
        assert_eq!(classify_kodaira(&star(&[2, 2, 2])), Some(KodairaType::IVStar));
        assert_eq!(classify_kodaira(&star(&[1, 1])), None);
        assert_eq!(classify_kodaira(&star(&[1, 2, 6])), None);
    }

    #[test]
    fn classification_agrees_with_solver() {
        let graphs = [cycle(3), cycle(9), d_tilde(0), d_tilde(2), d_tilde(4), star(&[1, 2, 5]), star(&[1, 3, 3]), star(&[2, 2, 2])];
        for g in graphs {
            let t = classify_kodaira(&g).unwrap();
            let m = solve_multiplicities(&g).unwrap();
            assert_eq!(m.len() as u32, t.components());
            assert_eq!(*m.iter().max().unwrap(), t.max_multiplicity());
            assert!(FiberConfig::new(g).is_fiber());
        }
    }

    #[test]
    fn blow_down_rules() {
        let mut g = WeightedDualGraph::new();
        let a = g.add_vertex("A", -2);
        let b = g.add_vertex("B", -1);
        let c = g.add_vertex("C", -2);
        g.add_edge(a, b, 1);
        g.add_edge(b, c, 1);
        let h = blow_down(&g, b).unwrap();
        assert_eq!((h.weight(a), h.weight(c), h.edge(a, c)), (-1, -1, 1));
        assert!(blow_down(&g, a).is_err());

        let mut g = WeightedDualGraph::new();
        let a = g.add_vertex("A", -1);
        let b = g.add_vertex("B", -3);
        g.add_edge(a, b, 1);
        let h = blow_down(&g, a).unwrap();
        assert_eq!((h.len(), h.weight(b)), (1, -2));

        let mut g = WeightedDualGraph::new();
        let a = g.add_vertex("A", -1);
        let b = g.add_vertex("B", -2);
        g.add_edge(a, b, 2);
        let h = blow_down(&g, a).unwrap();
        assert_eq!((h.weight(b), h.vertex(b).loops), (2, 1));
    }

    #[test]
    fn budget_check() {
        let ii = FiberConfig::new(star(&[1, 2, 5]));
        assert!(fiber_component_budget_check(&[ii]));
        assert!(fiber_component_budget_check(&[FiberConfig::new(d_tilde(4))]));
        assert!(!fiber_component_budget_check(&[FiberConfig::new(cycle(9)), FiberConfig::new(cycle(2))]));
    }

    #[test]
    fn dot_shows_multiplicities() {
        let dot = FiberConfig::new(d_tilde(0)).to_dot("F");
        assert!(dot.contains("n0 [label=\"C\\n-2\\nx2\"];"));
    }
}
