//! Exhaustive generation of small connected linear hypergraphs by class.
//!
//! Two universes are supported. `Power` enumerates graphs G and returns their
//! powers ℙ(G) (the setting of most extremal results); `Linear` grows general
//! linear m-uniform hypergraphs edge by edge. Either way, every level is
//! deduplicated by canonical code, so the output lists each isomorphism class
//! once.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use hyperspectra::cycles::{classify_cyclicity, enumerate_loose_cycles, Cyclicity};
use hyperspectra::families::power_hypergraph;
use hyperspectra::{Hypergraph, SimpleGraph};

use crate::canon::{graph_code, hypergraph_code};
use crate::error::{Result, VerifyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassId {
    /// Acyclic, at most two non-pendant vertices per edge.
    Hypertree,
    /// Acyclic.
    Supertree,
    Unicyclic,
    Bicyclic,
    TricyclicI,
    TricyclicII,
}

impl ClassId {
    pub const ALL: [ClassId; 6] = [
        ClassId::Hypertree,
        ClassId::Supertree,
        ClassId::Unicyclic,
        ClassId::Bicyclic,
        ClassId::TricyclicI,
        ClassId::TricyclicII,
    ];

    /// k(m−1)+1−n for members of the class.
    pub fn cyclomatic(self) -> usize {
        match self {
            ClassId::Hypertree | ClassId::Supertree => 0,
            ClassId::Unicyclic => 1,
            ClassId::Bicyclic | ClassId::TricyclicI => 2,
            ClassId::TricyclicII => 3,
        }
    }

    pub fn cycles(self) -> usize {
        match self {
            ClassId::Hypertree | ClassId::Supertree => 0,
            ClassId::Unicyclic => 1,
            ClassId::Bicyclic => 2,
            ClassId::TricyclicI | ClassId::TricyclicII => 3,
        }
    }

    /// Edges of the smallest simple graph in the class.
    pub fn min_edges(self) -> usize {
        match self {
            ClassId::Hypertree | ClassId::Supertree => 0,
            ClassId::Unicyclic => 3,
            ClassId::TricyclicI => 5,
            ClassId::Bicyclic => 6,
            ClassId::TricyclicII => 9,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassId::Hypertree => "hypertree",
            ClassId::Supertree => "supertree",
            ClassId::Unicyclic => "unicyclic",
            ClassId::Bicyclic => "bicyclic",
            ClassId::TricyclicI => "tricyclic-i",
            ClassId::TricyclicII => "tricyclic-ii",
        }
    }
}

impl std::str::FromStr for ClassId {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self> {
        ClassId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| VerifyError::Param(format!("unknown class `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Universe {
    /// Powers ℙ(G) of simple graphs.
    Power,
    /// All linear m-uniform hypergraphs.
    Linear,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraints {
    /// Exact diameter.
    pub diameter: Option<usize>,
    /// Every loose cycle has this length.
    pub cycle_length: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest k for full enumeration.
    pub max_k: usize,
    /// Largest number of distinct shapes held at any growth level.
    pub max_states: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_k: 12,
            max_states: 2_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Enumerated {
    pub hypergraph: Hypergraph,
    /// Canonical code of the hypergraph (see [`hypergraph_code`]).
    pub code: String,
}

/// Every connected member of `class` with k edges satisfying `constraints`,
/// one per isomorphism class, sorted by code.
pub fn enumerate_class(
    class: ClassId,
    m: usize,
    k: usize,
    constraints: &Constraints,
    universe: Universe,
    budget: &Budget,
) -> Result<Vec<Enumerated>> {
    if k > budget.max_k {
        return Err(VerifyError::Budget {
            what: "edges for full enumeration",
            got: k,
            cap: budget.max_k,
        });
    }
    if k == 0 {
        return Err(VerifyError::Param("k must be at least 1".into()));
    }
    if m < 2 {
        return Err(VerifyError::Param("m must be at least 2".into()));
    }
    match universe {
        Universe::Power => {
            let graphs = enumerate_graphs(class, k, constraints, budget)?;
            finish(
                graphs
                    .into_iter()
                    .map(|g| power_hypergraph(&g, m))
                    .collect::<std::result::Result<Vec<_>, _>>()?,
            )
        }
        Universe::Linear => {
            if m < 3 {
                return Err(VerifyError::Param(
                    "the linear universe needs m ≥ 3 (use power for graphs)".into(),
                ));
            }
            enumerate_linear(class, m, k, constraints, budget)
        }
    }
}

fn finish(hs: Vec<Hypergraph>) -> Result<Vec<Enumerated>> {
    let mut out: Vec<Enumerated> = hs
        .into_par_iter()
        .map(|h| {
            hypergraph_code(&h).map(|code| Enumerated {
                hypergraph: h,
                code,
            })
        })
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| a.code.cmp(&b.code));
    out.dedup_by(|a, b| a.code == b.code);
    Ok(out)
}

// ---------------------------------------------------------------- graphs

/// Lengths of all cycles of a connected graph, via subsets of a fundamental
/// cycle basis (fine for small cyclomatic number).
pub fn graph_cycle_lengths(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let adj = g.adjacency_lists();
    let edge_id: BTreeMap<(usize, usize), usize> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| ((a.min(b), a.max(b)), i))
        .collect();
    // BFS tree.
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut order = vec![0];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                order.push(u);
            }
        }
    }
    let tree_edge = |a: usize, b: usize| parent[a] == b || parent[b] == a;
    let path_to_root = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let ne = g.edges().len();
    let mut basis: Vec<Vec<bool>> = Vec::new();
    for &(a, b) in g.edges() {
        if tree_edge(a, b) {
            continue;
        }
        let mut set = vec![false; ne];
        set[edge_id[&(a.min(b), a.max(b))]] = true;
        for p in [path_to_root(a), path_to_root(b)] {
            for w in p.windows(2) {
                let id = edge_id[&(w[0].min(w[1]), w[0].max(w[1]))];
                set[id] = !set[id];
            }
        }
        basis.push(set);
    }
    let mut lengths = Vec::new();
    for mask in 1u64..(1u64 << basis.len()) {
        let mut set = vec![false; ne];
        for (j, b) in basis.iter().enumerate() {
            if mask >> j & 1 == 1 {
                set.iter_mut().zip(b).for_each(|(s, &x)| *s ^= x);
            }
        }
        if let Some(len) = single_cycle(g, &set) {
            lengths.push(len);
        }
    }
    lengths.sort_unstable();
    lengths
}

/// Length of the edge set when it forms one cycle.
fn single_cycle(g: &SimpleGraph, set: &[bool]) -> Option<usize> {
    let mut deg = vec![0usize; g.n()];
    let mut sub: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut count = 0;
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if set[i] {
            deg[a] += 1;
            deg[b] += 1;
            sub[a].push(b);
            sub[b].push(a);
            count += 1;
        }
    }
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return None;
    }
    let start = deg.iter().position(|&d| d == 2)?;
    let (mut prev, mut cur, mut steps) = (start, sub[start][0], 1);
    while cur != start {
        let next = if sub[cur][0] == prev {
            sub[cur][1]
        } else {
            sub[cur][0]
        };
        prev = cur;
        cur = next;
        steps += 1;
    }
    (steps == count).then_some(count)
}

pub fn graph_diameter(g: &SimpleGraph) -> usize {
    let adj = g.adjacency_lists();
    (0..g.n())
        .map(|s| {
            let mut dist = vec![usize::MAX; g.n()];
            dist[s] = 0;
            let mut q = std::collections::VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &u in &adj[v] {
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        q.push_back(u);
                    }
                }
            }
            dist.into_iter().max().unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

fn graph_cyclomatic(g: &SimpleGraph) -> usize {
    g.edges().len() + 1 - g.n()
}

/// Growth limits: the largest cyclomatic number and cycle count allowed.
#[derive(Debug, Clone, Copy)]
struct Limits {
    cyclomatic: usize,
    cycles: usize,
}

impl From<ClassId> for Limits {
    fn from(c: ClassId) -> Self {
        Limits {
            cyclomatic: c.cyclomatic(),
            cycles: c.cycles(),
        }
    }
}

/// Whether a partial graph can still grow into a wanted member.
fn graph_viable(g: &SimpleGraph, lim: Limits, constraints: &Constraints) -> bool {
    if graph_cyclomatic(g) > lim.cyclomatic {
        return false;
    }
    if lim.cyclomatic == 0 {
        return constraints.diameter.is_none_or(|d| graph_diameter(g) <= d);
    }
    let lengths = graph_cycle_lengths(g);
    lengths.len() <= lim.cycles
        && constraints
            .cycle_length
            .is_none_or(|l| lengths.iter().all(|&x| x == l))
}

fn graph_member(g: &SimpleGraph, class: ClassId, constraints: &Constraints) -> bool {
    if graph_cyclomatic(g) != class.cyclomatic() {
        return false;
    }
    if constraints.diameter.is_some_and(|d| graph_diameter(g) != d) {
        return false;
    }
    let lengths = graph_cycle_lengths(g);
    lengths.len() == class.cycles()
        && constraints
            .cycle_length
            .is_none_or(|l| lengths.iter().all(|&x| x == l))
}

/// Graphs with k edges whose powers belong to `class`.
pub fn enumerate_graphs(
    class: ClassId,
    k: usize,
    constraints: &Constraints,
    budget: &Budget,
) -> Result<Vec<SimpleGraph>> {
    let level = grow_graphs(k, class.into(), constraints, budget)?;
    Ok(level
        .into_iter()
        .filter(|g| graph_member(g, class, constraints))
        .collect())
}

/// Connected graphs with k edges and exactly `cycles` cycles, whatever their
/// cyclomatic number (at most `cycles`).
pub fn graphs_with_cycle_count(
    k: usize,
    cycles: usize,
    budget: &Budget,
) -> Result<Vec<SimpleGraph>> {
    let lim = Limits {
        cyclomatic: cycles,
        cycles,
    };
    let level = grow_graphs(k, lim, &Constraints::default(), budget)?;
    Ok(level
        .into_iter()
        .filter(|g| graph_cycle_lengths(g).len() == cycles)
        .collect())
}

fn grow_graphs(
    k: usize,
    lim: Limits,
    constraints: &Constraints,
    budget: &Budget,
) -> Result<Vec<SimpleGraph>> {
    if k > budget.max_k {
        return Err(VerifyError::Budget {
            what: "edges for full enumeration",
            got: k,
            cap: budget.max_k,
        });
    }
    let mut level: Vec<SimpleGraph> = vec![SimpleGraph::path(2)];
    for _ in 2..=k {
        let children: Vec<Vec<(String, SimpleGraph)>> = level
            .par_iter()
            .map(|g| -> Result<Vec<(String, SimpleGraph)>> {
                let mut out = Vec::new();
                for child in graph_children(g, lim) {
                    if graph_viable(&child, lim, constraints) {
                        out.push((graph_code(&child)?, child));
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        let mut next: BTreeMap<String, SimpleGraph> = BTreeMap::new();
        for (code, g) in children.into_iter().flatten() {
            next.entry(code).or_insert(g);
        }
        if next.len() > budget.max_states {
            return Err(VerifyError::Budget {
                what: "shapes per growth level",
                got: next.len(),
                cap: budget.max_states,
            });
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

fn graph_children(g: &SimpleGraph, lim: Limits) -> Vec<SimpleGraph> {
    let n = g.n();
    let mut out = Vec::new();
    for v in 0..n {
        let mut edges = g.edges().to_vec();
        edges.push((v, n));
        out.push(SimpleGraph::new(n + 1, edges).expect("pendant edge keeps the graph simple"));
    }
    if graph_cyclomatic(g) < lim.cyclomatic {
        let adj = g.adjacency_lists();
        for a in 0..n {
            for b in a + 1..n {
                if !adj[a].contains(&b) {
                    let mut edges = g.edges().to_vec();
                    edges.push((a, b));
                    out.push(
                        SimpleGraph::new(n, edges).expect("chord between non-adjacent vertices"),
                    );
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------- trees by diameter

#[derive(Debug, Clone)]
struct Rooted {
    size: usize,
    height: usize,
    children: Vec<usize>,
}

/// Catalog of rooted trees with height ≤ h and at most `max_size` vertices.
/// Children lists are non-increasing catalog indices, so each rooted tree
/// appears once.
struct Catalog {
    trees: Vec<Rooted>,
}

impl Catalog {
    fn new(h: usize, max_size: usize, cap: usize) -> Result<Self> {
        let mut trees = vec![Rooted {
            size: 1,
            height: 0,
            children: vec![],
        }];
        for height in 1..=h {
            // Trees of height exactly `height`: children from the current
            // catalog (all of height < height), at least one of height−1.
            let base = trees.clone();
            let mut new = Vec::new();
            let mut kids = Vec::new();
            multisets(
                &base,
                base.len(),
                max_size - 1,
                &mut kids,
                &mut |kids: &[usize]| {
                    let hh = kids.iter().map(|&i| base[i].height).max().unwrap_or(0) + 1;
                    if !kids.is_empty() && hh == height {
                        let size = 1 + kids.iter().map(|&i| base[i].size).sum::<usize>();
                        new.push(Rooted {
                            size,
                            height,
                            children: kids.to_vec(),
                        });
                    }
                },
            );
            trees.extend(new);
            if trees.len() > cap {
                return Err(VerifyError::Budget {
                    what: "rooted trees in catalog",
                    got: trees.len(),
                    cap,
                });
            }
        }
        Ok(Catalog { trees })
    }

    fn to_graph_into(&self, t: usize, edges: &mut Vec<(usize, usize)>, next: &mut usize) -> usize {
        let root = *next;
        *next += 1;
        for &c in &self.trees[t].children {
            let child = self.to_graph_into(c, edges, next);
            edges.push((root, child));
        }
        root
    }
}

/// Non-increasing index sequences below `limit` whose sizes sum to at most
/// `room`; every prefix-closed sequence is reported.
fn multisets(
    base: &[Rooted],
    limit: usize,
    room: usize,
    acc: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    f(acc);
    for i in (0..limit).rev() {
        if base[i].size <= room {
            acc.push(i);
            multisets(base, i + 1, room - base[i].size, acc, f);
            acc.pop();
        }
    }
}

/// All trees with `vertices` vertices and diameter exactly d, one per
/// isomorphism class, built from their centers.
pub fn trees_with_diameter(vertices: usize, d: usize, cap: usize) -> Result<Vec<SimpleGraph>> {
    if d == 0 {
        return Ok(if vertices == 1 {
            vec![SimpleGraph::new(1, vec![]).expect("single vertex")]
        } else {
            vec![]
        });
    }
    if vertices < d + 1 {
        return Ok(vec![]);
    }
    let r = d / 2;
    let cat = Catalog::new(r, vertices, cap)?;
    let mut out = Vec::new();
    let build = |parts: &[usize], joined: bool| {
        let mut edges = Vec::new();
        let mut next = 0;
        let roots: Vec<usize> = parts
            .iter()
            .map(|&t| cat.to_graph_into(t, &mut edges, &mut next))
            .collect();
        if joined {
            edges.push((roots[0], roots[1]));
        }
        SimpleGraph::new(next, edges).expect("tree from catalog")
    };
    if d % 2 == 1 {
        // Central edge joining two rooted trees of height exactly r.
        let tall: Vec<usize> = (0..cat.trees.len())
            .filter(|&i| cat.trees[i].height == r)
            .collect();
        for (x, &a) in tall.iter().enumerate() {
            for &b in &tall[x..] {
                if cat.trees[a].size + cat.trees[b].size == vertices {
                    out.push(build(&[a, b], true));
                }
            }
        }
    } else {
        // Central vertex with at least two branches of depth r.
        for (i, t) in cat.trees.iter().enumerate() {
            if t.size == vertices
                && t.height == r
                && t.children
                    .iter()
                    .filter(|&&c| cat.trees[c].height == r - 1)
                    .count()
                    >= 2
            {
                out.push(build(&[i], false));
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------- structured classes

/// Power-universe members of `class` with k edges built as a small kernel (a
/// member with at most `kernel_edges` edges) plus a star of pendant edges at
/// one kernel vertex. Contains every shape whose edges, apart from one bundle
/// of pendant edges, number at most `kernel_edges`.
pub fn kernel_hub_class(
    class: ClassId,
    m: usize,
    k: usize,
    kernel_edges: usize,
    constraints: &Constraints,
    budget: &Budget,
) -> Result<Vec<Enumerated>> {
    let top = kernel_edges.min(k);
    let unconstrained = Constraints {
        diameter: None,
        cycle_length: constraints.cycle_length,
    };
    let kernels: Vec<SimpleGraph> = (1..=top)
        .map(|kk| enumerate_graphs(class, kk, &unconstrained, budget))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let graphs: Vec<(String, SimpleGraph)> = kernels
        .par_iter()
        .map(|g| -> Result<Vec<(String, SimpleGraph)>> {
            let extra = k - g.edges().len();
            let hubs: Vec<usize> = if extra == 0 {
                vec![0]
            } else {
                (0..g.n()).collect()
            };
            let mut out = Vec::new();
            for v in hubs {
                let mut edges = g.edges().to_vec();
                for i in 0..extra {
                    edges.push((v, g.n() + i));
                }
                let big = SimpleGraph::new(g.n() + extra, edges)?;
                if graph_member(&big, class, constraints) {
                    out.push((graph_code(&big)?, big));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut uniq: BTreeMap<String, SimpleGraph> = BTreeMap::new();
    for (c, g) in graphs {
        uniq.entry(c).or_insert(g);
    }
    finish(
        uniq.into_values()
            .map(|g| power_hypergraph(&g, m))
            .collect::<std::result::Result<Vec<_>, _>>()?,
    )
}

// ---------------------------------------------------------------- linear universe

fn linear_viable(h: &Hypergraph, class: ClassId, constraints: &Constraints) -> Result<bool> {
    let c = h.cyclomatic_number();
    if c < 0 || c as usize > class.cyclomatic() {
        return Ok(false);
    }
    if class.cyclomatic() == 0 {
        return Ok(constraints
            .diameter
            .is_none_or(|d| h.diameter().is_ok_and(|x| x <= d)));
    }
    let cycles = enumerate_loose_cycles(h)?;
    Ok(cycles.len() <= class.cycles()
        && constraints
            .cycle_length
            .is_none_or(|l| cycles.iter().all(|cy| cy.len() == l)))
}

pub fn linear_member(h: &Hypergraph, class: ClassId, constraints: &Constraints) -> Result<bool> {
    let rep = classify_cyclicity(h)?;
    let ok = match class {
        ClassId::Hypertree => {
            rep.classification == Cyclicity::Supertree
                && (0..h.k()).all(|e| h.non_pendant_vertices(e).len() <= 2)
        }
        ClassId::Supertree => rep.classification == Cyclicity::Supertree,
        ClassId::Unicyclic => rep.classification == Cyclicity::Unicyclic,
        ClassId::Bicyclic => rep.classification == Cyclicity::Bicyclic,
        ClassId::TricyclicI => rep.classification == Cyclicity::TricyclicTypeI,
        ClassId::TricyclicII => rep.classification == Cyclicity::TricyclicTypeII,
    };
    Ok(ok
        && rep.cyclomatic_number == class.cyclomatic() as i64
        && constraints
            .diameter
            .is_none_or(|d| h.diameter().ok() == Some(d))
        && constraints
            .cycle_length
            .is_none_or(|l| rep.cycle_lengths.iter().all(|&x| x == l)))
}

fn linear_children(h: &Hypergraph, class: ClassId) -> Vec<Hypergraph> {
    let m = h.m();
    let n = h.n();
    let slack = class.cyclomatic() as i64 - h.cyclomatic_number();
    let max_shared = (slack.max(0) as usize + 1).min(m);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    shared_sets(h, 0, max_shared, &mut chosen, &mut |s: &[usize]| {
        let mut edge = s.to_vec();
        edge.extend(n..n + m - s.len());
        let mut edges = h.edges().to_vec();
        edges.push(edge);
        if let Ok(c) = Hypergraph::new(m, n + m - s.len(), edges) {
            out.push(c);
        }
    });
    out
}

/// Non-empty sets of pairwise non-adjacent vertices of size ≤ `max`.
fn shared_sets(
    h: &Hypergraph,
    from: usize,
    max: usize,
    acc: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if !acc.is_empty() {
        f(acc);
    }
    if acc.len() == max {
        return;
    }
    for v in from..h.n() {
        if acc
            .iter()
            .all(|&u| !h.incident(u).iter().any(|&e| h.contains(e, v)))
        {
            acc.push(v);
            shared_sets(h, v + 1, max, acc, f);
            acc.pop();
        }
    }
}

fn enumerate_linear(
    class: ClassId,
    m: usize,
    k: usize,
    constraints: &Constraints,
    budget: &Budget,
) -> Result<Vec<Enumerated>> {
    let mut level = vec![Hypergraph::new(m, m, vec![(0..m).collect()])?];
    for step in 2..=k {
        let remaining = (k - step) as i64;
        let children: Vec<Vec<(String, Hypergraph)>> = level
            .par_iter()
            .map(|h| -> Result<Vec<(String, Hypergraph)>> {
                let mut out = Vec::new();
                for child in linear_children(h, class) {
                    // Each further edge raises the cyclomatic number by at most m−1.
                    if child.cyclomatic_number() + remaining * (m as i64 - 1)
                        < class.cyclomatic() as i64
                    {
                        continue;
                    }
                    if linear_viable(&child, class, constraints)? {
                        out.push((hypergraph_code(&child)?, child));
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        let mut next: BTreeMap<String, Hypergraph> = BTreeMap::new();
        for (code, h) in children.into_iter().flatten() {
            next.entry(code).or_insert(h);
        }
        if next.len() > budget.max_states {
            return Err(VerifyError::Budget {
                what: "shapes per growth level",
                got: next.len(),
                cap: budget.max_states,
            });
        }
        level = next.into_values().collect();
    }
    let members: Vec<Hypergraph> = level
        .into_iter()
        .map(|h| linear_member(&h, class, constraints).map(|ok| ok.then_some(h)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    finish(members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(class: ClassId, m: usize, k: usize, c: Constraints, u: Universe) -> usize {
        enumerate_class(class, m, k, &c, u, &Budget::default())
            .unwrap()
            .len()
    }

    #[test]
    fn tree_counts_match_known_sequence() {
        // Unlabelled trees on 2..=10 vertices.
        let known = [1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &c) in known.iter().enumerate() {
            let k = i + 1;
            assert_eq!(
                count(
                    ClassId::Hypertree,
                    3,
                    k,
                    Constraints::default(),
                    Universe::Power
                ),
                c,
                "k = {k}"
            );
            let by_diam: usize = (1..=k)
                .map(|d| trees_with_diameter(k + 1, d, 1_000_000).unwrap().len())
                .sum();
            assert_eq!(by_diam, c, "k = {k}");
        }
    }

    #[test]
    fn unicyclic_graph_counts() {
        // Connected unicyclic graphs on 3..=7 vertices.
        for (n, c) in [(3, 1), (4, 2), (5, 5), (6, 13), (7, 33)] {
            assert_eq!(
                count(
                    ClassId::Unicyclic,
                    3,
                    n,
                    Constraints::default(),
                    Universe::Power
                ),
                c,
                "n = {n}"
            );
        }
    }

    #[test]
    fn cycle_lengths_of_theta() {
        let g = SimpleGraph::new(4, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)]).unwrap();
        assert_eq!(graph_cycle_lengths(&g), vec![3, 3, 4]);
    }

    #[test]
    fn linear_supertrees_include_non_hypertrees() {
        let c = Constraints::default();
        let hyper = count(ClassId::Hypertree, 3, 4, c.clone(), Universe::Linear);
        let sup = count(ClassId::Supertree, 3, 4, c, Universe::Linear);
        assert_eq!(hyper, 3);
        assert!(sup > hyper);
    }

    #[test]
    fn over_budget() {
        let b = Budget {
            max_k: 5,
            ..Budget::default()
        };
        assert!(enumerate_class(
            ClassId::Unicyclic,
            3,
            6,
            &Constraints::default(),
            Universe::Power,
            &b
        )
        .is_err());
    }
}
