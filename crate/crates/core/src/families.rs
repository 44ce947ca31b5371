//! Deterministic constructors for the named hypergraph families.
//!
//! Labeling conventions (0-based ids):
//!
//! * `loose_path(m, l)`: edge i is `{i(m−1), …, i(m−1)+m−1}`; the core vertex
//!   v_j (1-based, j = 1..l+1) has id `(j−1)(m−1)`, see [`path_core`].
//! * `loose_cycle(m, l)`: edge i is `{i(m−1)+t mod l(m−1) : t < m}`, core
//!   vertex v_j has id `(j−1)(m−1)`.
//! * `hypertree_td`, `unicyclic_uc`, `unicyclic_ulc` start from the path /
//!   cycle labeling above, then append pendant edges in increasing position
//!   order; each pendant edge takes m−1 fresh consecutive ids.
//! * `bicyclic_bc`, `bicyclic_b2c`, `tricyclic_t1c`, `tricyclic_t2c`: the core
//!   vertices v_1, v_2, … take ids 0, 1, …; then the loose vertices of the
//!   structural edges (edge by edge); then pendant edges in attachment order.
//! * `power_hypergraph(G, m)`: vertices of G keep their ids; graph edge j gets
//!   the fresh ids `|V(G)| + j(m−2) ..`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hypergraph::Hypergraph;

/// Position → number of pendant edges attached at that core vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachmentSpec(pub BTreeMap<usize, usize>);

impl AttachmentSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn at(mut self, position: usize, count: usize) -> Self {
        *self.0.entry(position).or_insert(0) += count;
        self
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        pairs.iter().fold(Self::new(), |s, &(p, c)| s.at(p, c))
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    fn check_range(&self, lo: usize, hi: usize) -> Result<()> {
        match self.0.keys().find(|&&p| p < lo || p > hi) {
            Some(p) => Err(Error::Parameter(format!(
                "attachment position {p} outside {lo}..={hi}"
            ))),
            None => Ok(()),
        }
    }
}

/// Incremental edge-list builder handing out fresh vertex ids.
struct Builder {
    m: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Builder {
    fn with_core(m: usize, core: usize) -> Self {
        Builder {
            m,
            n: core,
            edges: Vec::new(),
        }
    }

    fn fresh(&mut self, count: usize) -> std::ops::Range<usize> {
        let r = self.n..self.n + count;
        self.n += count;
        r
    }

    /// An edge through `a` and `b` padded with fresh vertices.
    fn link(&mut self, a: usize, b: usize) {
        let mut e = vec![a, b];
        e.extend(self.fresh(self.m - 2));
        self.edges.push(e);
    }

    /// A pendant edge at `at`; returns its first fresh vertex.
    fn pendant(&mut self, at: usize) -> usize {
        let r = self.fresh(self.m - 1);
        let first = r.start;
        let mut e = vec![at];
        e.extend(r);
        self.edges.push(e);
        first
    }

    fn pendants(&mut self, at: usize, count: usize) {
        for _ in 0..count {
            self.pendant(at);
        }
    }

    fn finish(self) -> Result<Hypergraph> {
        Hypergraph::new(self.m, self.n, self.edges)
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::BadUniformity(m));
    }
    Ok(())
}

/// Id of the core vertex v_j (1-based) of a loose path or loose cycle, and of
/// the families built on them (T_d, UC_l, U_lC).
pub fn path_core(m: usize, j: usize) -> usize {
    (j - 1) * (m - 1)
}

fn path_builder(m: usize, l: usize) -> Builder {
    let edges = (0..l)
        .map(|i| (i * (m - 1)..i * (m - 1) + m).collect())
        .collect();
    Builder {
        m,
        n: l * (m - 1) + 1,
        edges,
    }
}

fn cycle_builder(m: usize, l: usize) -> Result<Builder> {
    if l < 3 {
        return Err(Error::Parameter(format!(
            "loose cycle of length {l} is not linear (consecutive edges would share 2 vertices)"
        )));
    }
    let n = l * (m - 1);
    let edges = (0..l)
        .map(|i| (0..m).map(|t| (i * (m - 1) + t) % n).collect())
        .collect();
    Ok(Builder { m, n, edges })
}

pub fn loose_path(m: usize, l: usize) -> Result<Hypergraph> {
    check_m(m)?;
    if l < 1 {
        return Err(Error::Parameter("loose path needs l ≥ 1".into()));
    }
    path_builder(m, l).finish()
}

pub fn loose_cycle(m: usize, l: usize) -> Result<Hypergraph> {
    check_m(m)?;
    cycle_builder(m, l)?.finish()
}

/// Hyperstar with k edges: T_2(c_2 = k−2), all edges through vertex 0.
pub fn hyperstar(m: usize, k: usize) -> Result<Hypergraph> {
    check_m(m)?;
    if k < 1 {
        return Err(Error::Parameter("hyperstar needs k ≥ 1".into()));
    }
    let mut b = Builder::with_core(m, 1);
    b.pendants(0, k);
    b.finish()
}

/// T_d(c_2, …, c_d): loose path P_L(d) with c_p pendant edges at v_p.
pub fn hypertree_td(m: usize, d: usize, spec: &AttachmentSpec) -> Result<Hypergraph> {
    check_m(m)?;
    if d < 2 {
        return Err(Error::Parameter("T_d needs d ≥ 2".into()));
    }
    spec.check_range(2, d)?;
    let mut b = path_builder(m, d);
    for (&p, &c) in &spec.0 {
        b.pendants(path_core(m, p), c);
    }
    b.finish()
}

/// UC_l(c_1, …, c_l): loose cycle C_L(l) with c_i pendant edges at v_i.
pub fn unicyclic_uc(m: usize, l: usize, spec: &AttachmentSpec) -> Result<Hypergraph> {
    check_m(m)?;
    spec.check_range(1, l)?;
    let mut b = cycle_builder(m, l)?;
    for (&p, &c) in &spec.0 {
        b.pendants(path_core(m, p), c);
    }
    b.finish()
}

/// U_lC(c_1): UC_l(c_1) plus one edge glued at a pendant vertex of the first
/// pendant edge at v_1.
pub fn unicyclic_ulc(m: usize, l: usize, c1: usize) -> Result<Hypergraph> {
    check_m(m)?;
    if c1 == 0 {
        return Err(Error::Parameter(
            "U_lC needs c1 ≥ 1 (no pendant edge to extend)".into(),
        ));
    }
    let mut b = cycle_builder(m, l)?;
    let tip = b.pendant(0);
    b.pendants(0, c1 - 1);
    b.pendant(tip);
    b.finish()
}

fn two_triangles(m: usize) -> Builder {
    let mut b = Builder::with_core(m, 5);
    for (x, y) in [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)] {
        b.link(x, y);
    }
    b
}

/// BC(l_1): two loose triangles sharing v_1 (id 0), l_1 pendant edges at v_1.
/// Core: v_1..v_5 = 0..4, triangles v_1v_2v_3 and v_1v_4v_5.
pub fn bicyclic_bc(m: usize, l1: usize) -> Result<Hypergraph> {
    bicyclic_b2c(m, l1, 0)
}

/// B_2C(l_1, l_2): BC(l_1) plus l_2 pendant edges at v_2 (id 1), a degree-2
/// core vertex of the first triangle.
pub fn bicyclic_b2c(m: usize, l1: usize, l2: usize) -> Result<Hypergraph> {
    check_m(m)?;
    if m < 3 {
        return Err(Error::Parameter("bicyclic families need m ≥ 3".into()));
    }
    let mut b = two_triangles(m);
    b.pendants(0, l1);
    b.pendants(1, l2);
    b.finish()
}

/// T_1C(l_1..l_4): cycles v_1e_1v_2e_2v_3e_3v_1 and v_1e_3v_3e_4v_4e_5v_1
/// (core v_1..v_4 = 0..3) with l_i pendant edges at v_i.
pub fn tricyclic_t1c(m: usize, l: [usize; 4]) -> Result<Hypergraph> {
    check_m(m)?;
    let mut b = Builder::with_core(m, 4);
    for (x, y) in [(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)] {
        b.link(x, y);
    }
    for (i, &c) in l.iter().enumerate() {
        b.pendants(i, c);
    }
    b.finish()
}

/// T_2C(c_1..c_7): three loose triangles sharing v_1. The seven core vertices
/// take ids 0..6 (center 0; triangles {0,1,2}, {0,3,4}, {0,5,6}) and c_i
/// pendant edges are attached at the i-th core vertex.
pub fn tricyclic_t2c(m: usize, c: [usize; 7]) -> Result<Hypergraph> {
    check_m(m)?;
    if m < 3 {
        return Err(Error::Parameter("tricyclic families need m ≥ 3".into()));
    }
    let mut b = Builder::with_core(m, 7);
    for (x, y) in [
        (0, 1),
        (1, 2),
        (2, 0),
        (0, 3),
        (3, 4),
        (4, 0),
        (0, 5),
        (5, 6),
        (6, 0),
    ] {
        b.link(x, y);
    }
    for (i, &ci) in c.iter().enumerate() {
        b.pendants(i, ci);
    }
    b.finish()
}

/// The m-th power of a simple graph: every graph edge padded with m−2 fresh
/// vertices. m = 2 returns the graph itself.
pub fn power_hypergraph(g: &SimpleGraph, m: usize) -> Result<Hypergraph> {
    check_m(m)?;
    let mut b = Builder::with_core(m, g.n());
    for &(x, y) in g.edges() {
        b.link(x, y);
    }
    b.finish()
}

/// Inverse of [`power_hypergraph`] up to isomorphism: recovers a graph G with
/// H ≅ ℙ(G), or `None` when some edge has three or more non-pendant vertices.
/// Returns G and, for each graph vertex, the hypergraph vertex it stands for.
pub fn power_skeleton(h: &Hypergraph) -> Option<(SimpleGraph, Vec<usize>)> {
    let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
    let mut back = Vec::new();
    let mut id = |v: usize, back: &mut Vec<usize>| {
        *ids.entry(v).or_insert_with(|| {
            back.push(v);
            back.len() - 1
        })
    };
    let mut edges = Vec::new();
    for e in 0..h.k() {
        let np = h.non_pendant_vertices(e);
        let pend: Vec<usize> = h
            .edge(e)
            .iter()
            .copied()
            .filter(|&v| h.is_pendant_vertex(v))
            .collect();
        let (a, b) = match np.len() {
            0 => (pend[0], pend[1]),
            1 => (np[0], pend[0]),
            2 => (np[0], np[1]),
            _ => return None,
        };
        let (a, b) = (id(a, &mut back), id(b, &mut back));
        edges.push((a, b));
    }
    let g = SimpleGraph::new(back.len(), edges).ok()?;
    Some((g, back))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{classify_cyclicity, Cyclicity};

    #[test]
    fn loose_path_matches_explicit_sets() {
        let p = loose_path(3, 2).unwrap();
        assert_eq!(p.edges(), &[vec![0, 1, 2], vec![2, 3, 4]]);
        let p = loose_path(4, 3).unwrap();
        assert_eq!((p.n(), p.k(), p.diameter().unwrap()), (10, 3, 3));
        assert_eq!(loose_path(3, 1).unwrap().n(), 3);
    }

    #[test]
    fn loose_cycle_counts_and_rejection() {
        assert_eq!(loose_cycle(3, 3).unwrap().n(), 6);
        assert_eq!(loose_cycle(4, 3).unwrap().n(), 9);
        assert!(loose_cycle(3, 2).is_err());
    }

    #[test]
    fn td_examples() {
        let star = hypertree_td(3, 2, &AttachmentSpec::new().at(2, 3)).unwrap();
        assert_eq!(star.edge_degree(path_core(3, 2)), 5);
        let t = hypertree_td(3, 4, &AttachmentSpec::new().at(3, 2)).unwrap();
        assert_eq!((t.k(), t.n(), t.diameter().unwrap()), (6, 13, 4));
        assert_eq!(
            hypertree_td(3, 3, &AttachmentSpec::new()).unwrap(),
            loose_path(3, 3).unwrap()
        );
        assert!(hypertree_td(3, 3, &AttachmentSpec::new().at(4, 1)).is_err());
        assert!(hypertree_td(3, 3, &AttachmentSpec::new().at(1, 1)).is_err());
    }

    #[test]
    fn td_diameter_example() {
        let t = hypertree_td(3, 3, &AttachmentSpec::new().at(2, 2)).unwrap();
        assert_eq!(t.diameter().unwrap(), 3);
    }

    #[test]
    fn unicyclic_examples() {
        let u = unicyclic_uc(3, 3, &AttachmentSpec::new().at(1, 2)).unwrap();
        assert_eq!((u.k(), u.n()), (5, 10));
        assert_eq!(
            unicyclic_uc(3, 3, &AttachmentSpec::new()).unwrap(),
            loose_cycle(3, 3).unwrap()
        );
        let u = unicyclic_uc(4, 4, &AttachmentSpec::from_pairs(&[(1, 1), (2, 1)])).unwrap();
        assert_eq!((u.k(), u.n()), (6, 18));
    }

    #[test]
    fn ulc_examples() {
        let u = unicyclic_ulc(3, 3, 1).unwrap();
        assert_eq!(u.k(), 5);
        assert_eq!(u.diameter().unwrap(), 4);
        assert_eq!(
            classify_cyclicity(&u).unwrap().classification,
            Cyclicity::Unicyclic
        );
        assert_eq!(unicyclic_ulc(3, 3, 3).unwrap().k(), 7);
        let u = unicyclic_ulc(4, 4, 2).unwrap();
        assert_eq!((u.k(), u.n()), (7, 21));
        assert!(unicyclic_ulc(3, 3, 0).is_err());
    }

    #[test]
    fn bicyclic_examples() {
        let b = bicyclic_bc(3, 0).unwrap();
        assert_eq!((b.k(), b.n()), (6, 11));
        assert_eq!(bicyclic_bc(3, 2).unwrap().n(), 15);
        assert_eq!(bicyclic_bc(4, 1).unwrap().n(), 20);
        assert_eq!(bicyclic_b2c(3, 0, 0).unwrap(), bicyclic_bc(3, 0).unwrap());
        let b = bicyclic_b2c(3, 2, 1).unwrap();
        assert_eq!(b.k(), 9);
        assert_eq!(
            classify_cyclicity(&b).unwrap().classification,
            Cyclicity::Bicyclic
        );
        assert_eq!(bicyclic_b2c(3, 0, 2).unwrap().edge_degree(1), 4);
    }

    #[test]
    fn tricyclic_examples() {
        let t = tricyclic_t1c(3, [0; 4]).unwrap();
        assert_eq!((t.k(), t.n()), (5, 9));
        let r = classify_cyclicity(&t).unwrap();
        assert_eq!(r.classification, Cyclicity::TricyclicTypeI);
        let mut lens = r.cycle_lengths.clone();
        lens.sort();
        assert_eq!(lens, vec![3, 3, 4]);
        assert_eq!(tricyclic_t1c(4, [1, 0, 0, 0]).unwrap().n(), 17);
        let t = tricyclic_t2c(3, [0; 7]).unwrap();
        assert_eq!((t.k(), t.n()), (9, 16));
        assert_eq!(
            classify_cyclicity(&t).unwrap().classification,
            Cyclicity::TricyclicTypeII
        );
        assert_eq!(tricyclic_t2c(3, [3, 0, 0, 0, 0, 0, 0]).unwrap().n(), 22);
        assert_eq!(tricyclic_t2c(4, [0, 1, 0, 0, 0, 0, 0]).unwrap().n(), 28);
    }

    #[test]
    fn power_hypergraph_examples() {
        let p = power_hypergraph(&SimpleGraph::path(3), 3).unwrap();
        assert_eq!((p.n(), p.k(), p.diameter().unwrap()), (5, 2, 2));
        let c = power_hypergraph(&SimpleGraph::cycle(3).unwrap(), 4).unwrap();
        assert_eq!(c.n(), 9);
        assert_eq!(classify_cyclicity(&c).unwrap().loose_cycle_count, 1);
        let s = power_hypergraph(&SimpleGraph::star(4), 3).unwrap();
        assert_eq!(s.edge_degree(0), 4);
        let g = SimpleGraph::cycle(5).unwrap();
        let h2 = power_hypergraph(&g, 2).unwrap();
        assert_eq!(h2.k(), 5);
        assert_eq!(
            h2.edges().to_vec(),
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![0, 4]]
        );
    }

    #[test]
    fn skeleton_round_trip_sizes() {
        let h = bicyclic_b2c(4, 2, 1).unwrap();
        let (g, back) = power_skeleton(&h).unwrap();
        assert_eq!(g.edges().len(), h.k());
        assert_eq!(back.len(), g.n());
        assert_eq!(g.n(), 5 + 3);
        let bad = Hypergraph::new(
            3,
            9,
            vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 5, 6], vec![2, 7, 8]],
        )
        .unwrap();
        assert!(power_skeleton(&bad).is_none());
    }
}
