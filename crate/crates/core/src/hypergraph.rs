//! The hypergraph data model: an m-uniform edge list over dense vertex ids.

use std::collections::{BTreeSet, VecDeque};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An m-uniform hypergraph on vertices `0..n`.
///
/// Every edge holds exactly `m` distinct in-range vertices; this is enforced by
/// every constructor. Linearity, simplicity and the absence of isolated
/// vertices are enforced by [`Hypergraph::new`] but only diagnosed by
/// [`Hypergraph::validate`] on values built with [`Hypergraph::raw`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph", into = "RawHypergraph")]
pub struct Hypergraph {
    m: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

/// Wire format: `{"m": .., "n": .., "edges": [[..], ..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawHypergraph {
    pub m: usize,
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = Error;
    fn try_from(r: RawHypergraph) -> Result<Self> {
        Hypergraph::new(r.m, r.n, r.edges)
    }
}

impl From<Hypergraph> for RawHypergraph {
    fn from(h: Hypergraph) -> Self {
        RawHypergraph {
            m: h.m,
            n: h.n,
            edges: h.edges,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// Two edges meeting in more than one vertex.
    NotLinear {
        edges: (usize, usize),
        shared: Vec<usize>,
    },
    DuplicateEdge {
        edges: (usize, usize),
    },
    IsolatedVertex {
        vertex: usize,
    },
    Disconnected {
        components: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub uniform: bool,
    pub linear: bool,
    pub simple: bool,
    pub connected: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Hypergraph {
    /// Builds a hypergraph enforcing every invariant (uniform, linear, simple,
    /// no isolated vertices). Edge vertex lists are stored sorted.
    pub fn new(m: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let h = Self::raw(m, n, edges)?;
        if h.edges.is_empty() {
            return Err(Error::Empty);
        }
        for v in h.validate().violations {
            match v {
                Violation::NotLinear {
                    edges: (a, b),
                    shared,
                } => return Err(Error::NotLinear(a, b, shared.len())),
                Violation::DuplicateEdge { edges: (a, b) } => {
                    return Err(Error::DuplicateEdge(a, b))
                }
                Violation::IsolatedVertex { vertex } => return Err(Error::IsolatedVertex(vertex)),
                Violation::Disconnected { .. } => {}
            }
        }
        Ok(h)
    }

    /// Builds a hypergraph checking only uniformity and vertex ranges, so
    /// malformed inputs can still be inspected with [`Hypergraph::validate`].
    pub fn raw(m: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if m < 2 {
            return Err(Error::BadUniformity(m));
        }
        let mut sorted = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.len() != m {
                return Err(Error::EdgeSize {
                    edge: i,
                    size: e.len(),
                    m,
                });
            }
            e.sort_unstable();
            for w in e.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::RepeatedVertex {
                        edge: i,
                        vertex: w[0],
                    });
                }
            }
            if let Some(&v) = e.last().filter(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            sorted.push(e);
        }
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in sorted.iter().enumerate() {
            for &v in e {
                incidence[v].push(i);
            }
        }
        Ok(Hypergraph {
            m,
            n,
            edges: sorted,
            incidence,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }
    pub fn n(&self) -> usize {
        self.n
    }
    /// Number of edges.
    pub fn k(&self) -> usize {
        self.edges.len()
    }
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }
    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }
    /// Indices of the edges containing `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }
    pub fn contains(&self, e: usize, v: usize) -> bool {
        self.edges[e].binary_search(&v).is_ok()
    }

    /// Number of incident edges.
    pub fn edge_degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// Row sum of the adjacency matrix at `v`. Every edge through `v`
    /// contributes (m−1)·1/(m−1), so the value is always integral.
    pub fn degree(&self, v: usize) -> Result<Ratio<u64>> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let scaled: u64 = self.incidence[v]
            .iter()
            .map(|&e| self.edges[e].len() as u64 - 1)
            .sum();
        Ok(Ratio::new(scaled, self.m as u64 - 1))
    }

    pub fn is_pendant_vertex(&self, v: usize) -> bool {
        self.incidence[v].len() == 1
    }

    pub fn non_pendant_vertices(&self, e: usize) -> Vec<usize> {
        self.edges[e]
            .iter()
            .copied()
            .filter(|&v| !self.is_pendant_vertex(v))
            .collect()
    }

    /// An edge with exactly one non-pendant vertex.
    pub fn is_pendant_edge(&self, e: usize) -> bool {
        self.non_pendant_vertices(e).len() == 1
    }

    /// Vertices sharing an edge with `v` (each listed once).
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.incidence[v]
            .iter()
            .flat_map(|&e| self.edges[e].iter().copied())
            .filter(|&u| u != v)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Connected components as sorted vertex lists (isolated vertices are
    /// singleton components).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &e in &self.incidence[v] {
                    for &u in &self.edges[e] {
                        if !seen[u] {
                            seen[u] = true;
                            comp.push(u);
                            queue.push_back(u);
                        }
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Edge-count distances from `s` (usize::MAX when unreachable).
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &e in &self.incidence[v] {
                for &u in &self.edges[e] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        dist
    }

    /// Largest edge-count distance between two vertices.
    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok((0..self.n)
            .map(|s| self.distances_from(s).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0))
    }

    /// k(m−1)+1−n: zero exactly for connected acyclic (supertree) inputs.
    pub fn cyclomatic_number(&self) -> i64 {
        (self.k() * (self.m - 1)) as i64 + 1 - self.n as i64
    }

    /// Diagnoses every invariant violation with a witness.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for a in 0..self.edges.len() {
            for b in a + 1..self.edges.len() {
                let shared = intersection(&self.edges[a], &self.edges[b]);
                if shared.len() == self.m {
                    violations.push(Violation::DuplicateEdge { edges: (a, b) });
                } else if shared.len() > 1 {
                    violations.push(Violation::NotLinear {
                        edges: (a, b),
                        shared,
                    });
                }
            }
        }
        for v in 0..self.n {
            if self.incidence[v].is_empty() {
                violations.push(Violation::IsolatedVertex { vertex: v });
            }
        }
        let comps = self.components().len();
        if comps != 1 {
            violations.push(Violation::Disconnected { components: comps });
        }
        let linear = !violations
            .iter()
            .any(|v| matches!(v, Violation::NotLinear { .. }));
        let simple = !violations
            .iter()
            .any(|v| matches!(v, Violation::DuplicateEdge { .. }));
        ValidationReport {
            m: self.m,
            n: self.n,
            k: self.k(),
            uniform: true,
            linear,
            simple,
            connected: comps == 1,
            violations,
        }
    }

    pub fn is_linear(&self) -> bool {
        let r = self.validate();
        r.linear && r.simple
    }

    /// Same vertex set, new edge list, all invariants re-checked.
    pub fn with_edges(&self, edges: Vec<Vec<usize>>) -> Result<Self> {
        Hypergraph::new(self.m, self.n, edges)
    }

    pub fn edge_set(&self) -> BTreeSet<Vec<usize>> {
        self.edges.iter().cloned().collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
    }
}

/// Sorted intersection of two sorted slices.
pub fn intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn section5() -> Hypergraph {
        let edges = [
            [1, 2, 3, 4],
            [4, 5, 6, 7],
            [7, 8, 9, 10],
            [10, 11, 12, 1],
            [7, 13, 14, 1],
        ];
        let edges = edges
            .iter()
            .map(|e| e.iter().map(|v| v - 1).collect())
            .collect();
        Hypergraph::new(4, 14, edges).unwrap()
    }

    #[test]
    fn single_edge_is_valid() {
        let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let r = h.validate();
        assert!(r.is_valid() && r.connected);
        assert_eq!(h.diameter().unwrap(), 1);
    }

    #[test]
    fn linearity_witness() {
        let h = Hypergraph::raw(3, 4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let r = h.validate();
        assert!(!r.linear);
        assert_eq!(
            r.violations,
            vec![Violation::NotLinear {
                edges: (0, 1),
                shared: vec![1, 2]
            }]
        );
        assert!(matches!(
            Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![1, 2, 3]]),
            Err(Error::NotLinear(0, 1, 2))
        ));
    }

    #[test]
    fn section5_example_validates() {
        let h = section5();
        let r = h.validate();
        assert!(r.is_valid());
        assert_eq!((h.n(), h.k()), (14, 5));
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            Hypergraph::raw(3, 3, vec![vec![0, 1]]),
            Err(Error::EdgeSize { .. })
        ));
        assert!(matches!(
            Hypergraph::raw(3, 3, vec![vec![0, 1, 1]]),
            Err(Error::RepeatedVertex { .. })
        ));
        assert!(matches!(
            Hypergraph::raw(3, 3, vec![vec![0, 1, 3]]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 4, vec![vec![0, 1, 2]]),
            Err(Error::IsolatedVertex(3))
        ));
        assert!(matches!(
            Hypergraph::new(3, 3, vec![vec![0, 1, 2], vec![2, 1, 0]]),
            Err(Error::DuplicateEdge(0, 1))
        ));
    }

    #[test]
    fn degrees_are_incidence_counts() {
        let h = Hypergraph::new(
            3,
            9,
            vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6], vec![0, 7, 8]],
        )
        .unwrap();
        assert_eq!(h.degree(0).unwrap(), Ratio::from_integer(4));
        assert_eq!(h.degree(5).unwrap(), Ratio::from_integer(1));
        assert!(h.degree(9).is_err());
    }

    #[test]
    fn disconnected_diameter_errors() {
        let h = Hypergraph::new(2, 4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(h.diameter(), Err(Error::Disconnected));
        assert!(!h.validate().connected);
    }

    #[test]
    fn json_round_trip_and_validation_on_load() {
        let h = section5();
        let back = Hypergraph::from_json(&h.to_json()).unwrap();
        assert_eq!(h, back);
        assert!(Hypergraph::from_json(r#"{"m":3,"n":4,"edges":[[0,1,2],[1,2,3]]}"#).is_err());
    }
}
