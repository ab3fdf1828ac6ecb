//! Weighted dual graphs: vertices are curves with self-intersection weights,
//! edges carry intersection multiplicities. Vertex ids are creation indices
//! and never reused, so DOT and JSON output follow creation order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Vertex {
    pub label: String,
    pub weight: i64,
    /// Nodes of the curve itself, drawn as loops.
    pub loops: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedDualGraph {
    vertices: BTreeMap<usize, Vertex>,
    edges: BTreeMap<(usize, usize), u32>,
    next_id: usize,
    pub d0: Option<usize>,
    pub c_prime: Option<usize>,
    pub d1: Option<usize>,
    pub d2: Option<usize>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl WeightedDualGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>, weight: i64) -> usize {
        let id = self.next_id;
        self.next_id += 1;
        self.vertices.insert(
            id,
            Vertex {
                label: label.into(),
                weight,
                loops: 0,
            },
        );
        id
    }

    pub fn remove_vertex(&mut self, v: usize) -> Option<Vertex> {
        self.edges.retain(|&(a, b), _| a != v && b != v);
        for d in [&mut self.d0, &mut self.c_prime, &mut self.d1, &mut self.d2] {
            if *d == Some(v) {
                *d = None;
            }
        }
        self.vertices.remove(&v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[&v]
    }

    pub fn vertex_mut(&mut self, v: usize) -> &mut Vertex {
        self.vertices.get_mut(&v).expect("unknown vertex")
    }

    pub fn weight(&self, v: usize) -> i64 {
        self.vertices[&v].weight
    }

    pub fn label(&self, v: usize) -> &str {
        &self.vertices[&v].label
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.vertices.iter().find(|(_, x)| x.label == label).map(|(&id, _)| id)
    }

    /// Vertex ids in creation order.
    pub fn ids(&self) -> Vec<usize> {
        self.vertices.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge(&self, a: usize, b: usize) -> u32 {
        self.edges.get(&key(a, b)).copied().unwrap_or(0)
    }

    pub fn add_edge(&mut self, a: usize, b: usize, m: u32) {
        assert!(a != b, "use loops for self-intersections");
        if m > 0 {
            *self.edges.entry(key(a, b)).or_insert(0) += m;
        }
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        self.edges.remove(&key(a, b));
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().map(|(&(a, b), &m)| (a, b, m))
    }

    /// Neighbors with edge multiplicities, in id order.
    pub fn neighbors(&self, v: usize) -> Vec<(usize, u32)> {
        self.edges
            .iter()
            .filter_map(|(&(a, b), &m)| match (a == v, b == v) {
                (true, _) => Some((b, m)),
                (_, true) => Some((a, m)),
                _ => None,
            })
            .collect()
    }

    /// Number of edge ends at `v`, counting multiplicities.
    pub fn degree(&self, v: usize) -> u32 {
        self.neighbors(v).iter().map(|(_, m)| m).sum()
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.keys().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for (u, _) in self.neighbors(v) {
                if seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// The subgraph on the given vertices; distinguished ids outside it are dropped.
    pub fn induced(&self, keep: &BTreeSet<usize>) -> WeightedDualGraph {
        let mut g = self.clone();
        for v in self.ids() {
            if !keep.contains(&v) {
                g.remove_vertex(v);
            }
        }
        g
    }

    /// Symmetric intersection matrix in id order: weights on the diagonal,
    /// edge multiplicities elsewhere.
    pub fn intersection_matrix(&self) -> (Vec<usize>, Vec<Vec<i64>>) {
        let ids = self.ids();
        let m = ids
            .iter()
            .map(|&a| {
                ids.iter()
                    .map(|&b| if a == b { self.weight(a) } else { i64::from(self.edge(a, b)) })
                    .collect()
            })
            .collect();
        (ids, m)
    }

    /// Graphviz rendering; `extra` supplies an optional second line per vertex.
    pub fn to_dot_with(&self, name: &str, extra: impl Fn(usize) -> Option<String>) -> String {
        let mut out = format!("graph \"{name}\" {{\n");
        for (&id, v) in &self.vertices {
            let mut label = format!("{}\\n{}", v.label, v.weight);
            if let Some(e) = extra(id) {
                let _ = write!(label, "\\n{e}");
            }
            let _ = writeln!(out, "  n{id} [label=\"{label}\"];");
            for _ in 0..v.loops {
                let _ = writeln!(out, "  n{id} -- n{id};");
            }
        }
        for (&(a, b), &m) in &self.edges {
            for _ in 0..m {
                let _ = writeln!(out, "  n{a} -- n{b};");
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_dot(&self, name: &str) -> String {
        self.to_dot_with(name, |_| None)
    }
}

impl Serialize for WeightedDualGraph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct V<'a> {
            id: usize,
            #[serde(flatten)]
            v: &'a Vertex,
        }
        #[derive(Serialize)]
        struct E {
            a: usize,
            b: usize,
            m: u32,
        }
        let vs: Vec<V> = self.vertices.iter().map(|(&id, v)| V { id, v }).collect();
        let es: Vec<E> = self.edges().map(|(a, b, m)| E { a, b, m }).collect();
        let mut st = s.serialize_struct("WeightedDualGraph", 6)?;
        st.serialize_field("vertices", &vs)?;
        st.serialize_field("edges", &es)?;
        st.serialize_field("d0", &self.d0)?;
        st.serialize_field("c_prime", &self.c_prime)?;
        st.serialize_field("d1", &self.d1)?;
        st.serialize_field("d2", &self.d2)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_and_query() {
        let mut g = WeightedDualGraph::new();
        let a = g.add_vertex("A", -2);
        let b = g.add_vertex("B", -1);
        let c = g.add_vertex("C", -2);
        g.add_edge(a, b, 1);
        g.add_edge(c, b, 1);
        assert_eq!(g.neighbors(b), vec![(a, 1), (c, 1)]);
        assert_eq!(g.degree(b), 2);
        assert!(g.is_connected());
        g.remove_vertex(b);
        assert!(!g.is_connected());
        assert_eq!(g.ids(), vec![a, c]);
        assert_eq!(g.find("C"), Some(c));
    }

    #[test]
    fn dot_is_in_creation_order() {
        let mut g = WeightedDualGraph::new();
        let a = g.add_vertex("E1", -3);
        let b = g.add_vertex("E2", -1);
        g.add_edge(b, a, 1);
        let dot = g.to_dot("D");
        assert_eq!(
            dot,
            "graph \"D\" {\n  n0 [label=\"E1\\n-3\"];\n  n1 [label=\"E2\\n-1\"];\n  n0 -- n1;\n}\n"
        );
        let json = serde_json::to_string(&g).unwrap();
        assert!(json.starts_with(r#"{"vertices":[{"id":0,"label":"E1","weight":-3,"loops":0}"#));
    }
}
