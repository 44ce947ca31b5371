//! Simple graphs, used as skeletons for power hypergraphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Rejects loops, repeated edges and out-of-range endpoints. Edge
    /// orientation and order are preserved (they fix the labeling of the
    /// power hypergraph).
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(Error::Parameter(format!("loop at vertex {a}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::Parameter(format!("repeated edge {{{a},{b}}}")));
            }
        }
        Ok(SimpleGraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn path(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Parameter(
                "a simple cycle needs at least 3 vertices".into(),
            ));
        }
        Ok(SimpleGraph {
            n,
            edges: (0..n).map(|i| (i, (i + 1) % n)).collect(),
        })
    }

    pub fn star(leaves: usize) -> Self {
        SimpleGraph {
            n: leaves + 1,
            edges: (1..=leaves).map(|i| (0, i)).collect(),
        }
    }
}
