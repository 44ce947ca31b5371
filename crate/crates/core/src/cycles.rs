//! Loose-cycle enumeration and cyclicity classification.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{intersection, Hypergraph};

pub const DEFAULT_EDGE_CAP: usize = 64;

/// A loose cycle: `edges[i]` and `edges[i+1]` meet exactly in `core[i+1]`
/// (indices mod l), the core vertices are distinct, and non-consecutive
/// edges are disjoint.
///
/// Stored normalized: `edges[0]` is the smallest edge index and
/// `edges[1] < edges[l-1]`, so two cycles are equal iff they are equal up to
/// rotation and reflection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LooseCycle {
    pub core: Vec<usize>,
    pub edges: Vec<usize>,
}

impl LooseCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
    pub fn shares_edge_with(&self, other: &LooseCycle) -> bool {
        self.edges.iter().any(|e| other.edges.contains(e))
    }
}

/// All loose cycles of a linear hypergraph, with the default edge cap.
pub fn enumerate_loose_cycles(h: &Hypergraph) -> Result<Vec<LooseCycle>> {
    enumerate_loose_cycles_capped(h, DEFAULT_EDGE_CAP)
}

pub fn enumerate_loose_cycles_capped(h: &Hypergraph, cap: usize) -> Result<Vec<LooseCycle>> {
    if h.k() > cap {
        return Err(Error::SizeCap {
            what: "edges",
            got: h.k(),
            cap,
        });
    }
    let report = h.validate();
    if !(report.linear && report.simple) {
        return Err(Error::Parameter(
            "loose-cycle enumeration needs a linear simple hypergraph".into(),
        ));
    }
    let mut out = Vec::new();
    for s in 0..h.k() {
        for &c0 in h.edge(s) {
            for &c1 in h.edge(s) {
                if c1 == c0 {
                    continue;
                }
                let mut walk = Walk {
                    h,
                    start: s,
                    edges: vec![s],
                    core: vec![c0, c1],
                    out: &mut out,
                };
                walk.extend();
            }
        }
    }
    out.sort_by(|a, b| (a.len(), &a.edges, &a.core).cmp(&(b.len(), &b.edges, &b.core)));
    Ok(out)
}

struct Walk<'a> {
    h: &'a Hypergraph,
    start: usize,
    edges: Vec<usize>,
    // core[0] is the closing vertex; core[i] = edges[i-1] ∩ edges[i].
    core: Vec<usize>,
    out: &'a mut Vec<LooseCycle>,
}

impl Walk<'_> {
    fn extend(&mut self) {
        let last = *self.core.last().unwrap();
        let c0 = self.core[0];
        for &f in self.h.incident(last) {
            if f <= self.start || self.edges.contains(&f) {
                continue;
            }
            // f meets the previous edge in `last` and must miss every other
            // edge of the walk, except the first one at c0 when closing.
            let prev = *self.edges.last().unwrap();
            let (mut closes, mut clash) = (false, false);
            for &e in &self.edges {
                if e == prev {
                    continue;
                }
                match intersection(self.h.edge(e), self.h.edge(f)).as_slice() {
                    [] => {}
                    [v] if e == self.start && *v == c0 => closes = true,
                    _ => clash = true,
                }
            }
            if clash {
                continue;
            }
            if closes {
                if self.edges[1] < f {
                    let mut edges = self.edges.clone();
                    edges.push(f);
                    self.out.push(LooseCycle {
                        core: self.core.clone(),
                        edges,
                    });
                }
                continue;
            }
            for &c in self.h.edge(f) {
                if c == last || self.edges.iter().any(|&e| self.h.contains(e, c)) {
                    continue;
                }
                self.edges.push(f);
                self.core.push(c);
                self.extend();
                self.edges.pop();
                self.core.pop();
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cyclicity {
    Supertree,
    Unicyclic,
    Bicyclic,
    TricyclicTypeI,
    TricyclicTypeII,
    /// Three loose cycles but n matches neither tricyclic identity.
    TricyclicUnresolved,
    Higher,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicityReport {
    pub loose_cycle_count: usize,
    pub cycle_lengths: Vec<usize>,
    pub classification: Cyclicity,
    pub n: usize,
    pub k: usize,
    pub m: usize,
    /// k(m−1)+1−n.
    pub cyclomatic_number: i64,
    /// The vertex count implied by the classification, when one is implied.
    pub expected_n: Option<usize>,
    /// Whether n agrees with the classification's vertex identity.
    pub identity_consistent: bool,
}

pub fn classify_cyclicity(h: &Hypergraph) -> Result<CyclicityReport> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let cycles = enumerate_loose_cycles(h)?;
    let r = cycles.len();
    let base = h.k() * (h.m() - 1);
    let (classification, expected_n) = match r {
        0 => (Cyclicity::Supertree, Some(base + 1)),
        1 => (Cyclicity::Unicyclic, Some(base)),
        2 => (Cyclicity::Bicyclic, base.checked_sub(1)),
        3 if h.n() + 1 == base => (Cyclicity::TricyclicTypeI, Some(base - 1)),
        3 if h.n() + 2 == base => (Cyclicity::TricyclicTypeII, Some(base - 2)),
        3 => (Cyclicity::TricyclicUnresolved, None),
        _ => (Cyclicity::Higher, None),
    };
    Ok(CyclicityReport {
        loose_cycle_count: r,
        cycle_lengths: cycles.iter().map(LooseCycle::len).collect(),
        classification,
        n: h.n(),
        k: h.k(),
        m: h.m(),
        cyclomatic_number: h.cyclomatic_number(),
        expected_n,
        identity_consistent: expected_n.is_some_and(|e| e == h.n()),
    })
}

/// Checks the defining conditions of a loose cycle given as a cyclic edge
/// sequence; returns the core vertices when they hold.
pub fn loose_cycle_core(h: &Hypergraph, cyc: &[usize]) -> Option<Vec<usize>> {
    let l = cyc.len();
    if l < 2 {
        return None;
    }
    let mut core = Vec::with_capacity(l);
    for i in 0..l {
        let s = intersection(h.edge(cyc[(i + l - 1) % l]), h.edge(cyc[i]));
        if s.len() != 1 {
            return None;
        }
        core.push(s[0]);
    }
    let mut sorted = core.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != l {
        return None;
    }
    for (i, &e) in cyc.iter().enumerate() {
        let own = [core[i], core[(i + 1) % l]];
        if core.iter().any(|c| !own.contains(c) && h.contains(e, *c)) {
            return None;
        }
    }
    Some(core)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(m: usize, n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(m, n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn triangle_has_one_cycle() {
        let c = h(3, 6, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0]]);
        let cycles = enumerate_loose_cycles(&c).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 3);
        let r = classify_cyclicity(&c).unwrap();
        assert_eq!(r.classification, Cyclicity::Unicyclic);
        assert!(r.identity_consistent);
    }

    #[test]
    fn path_has_none() {
        let p = h(3, 7, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 6]]);
        assert!(enumerate_loose_cycles(&p).unwrap().is_empty());
        assert_eq!(
            classify_cyclicity(&p).unwrap().classification,
            Cyclicity::Supertree
        );
    }

    #[test]
    fn cap_is_enforced() {
        let p = h(3, 7, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 6]]);
        assert!(matches!(
            enumerate_loose_cycles_capped(&p, 2),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn non_linear_input_rejected() {
        let bad = Hypergraph::raw(3, 4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert!(enumerate_loose_cycles(&bad).is_err());
    }

    #[test]
    fn core_check_matches_definition() {
        let c = h(3, 6, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0]]);
        assert_eq!(loose_cycle_core(&c, &[0, 1, 2]), Some(vec![0, 2, 4]));
        assert_eq!(loose_cycle_core(&c, &[0, 1]), None);
    }
}
