//! Edge moving, edge releasing and edge spreading, with Perron-vector
//! certificates for the strict increase of λ₁.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{intersection, Hypergraph};
use crate::spectral::{spectral_radius, DEFAULT_TOL};

/// Slack used when comparing Perron entries that may tie by symmetry.
pub const CERT_SLACK: f64 = 1e-12;

/// Replace `from` by `to` inside edge `e`, keeping the vertex list sorted.
fn regluing(h: &Hypergraph, e: usize, from: usize, to: usize) -> Result<Vec<usize>> {
    if !h.contains(e, from) {
        return Err(Error::Transform(format!(
            "vertex {from} is not in edge {e}"
        )));
    }
    if h.contains(e, to) {
        return Err(Error::Transform(format!(
            "target vertex {to} already lies in edge {e}"
        )));
    }
    let mut out: Vec<usize> = h
        .edge(e)
        .iter()
        .map(|&v| if v == from { to } else { v })
        .collect();
    out.sort_unstable();
    Ok(out)
}

fn rebuilt(h: &Hypergraph, replaced: Vec<(usize, Vec<usize>)>) -> Result<Hypergraph> {
    let mut edges = h.edges().to_vec();
    for (i, e) in replaced {
        edges[i] = e;
    }
    h.with_edges(edges)
        .map_err(|e| Error::Transform(format!("result is not a valid linear hypergraph: {e}")))
}

/// Moves edge eᵢ from uᵢ to `to` for every pair (eᵢ, uᵢ) in `moves`:
/// eᵢ′ = (eᵢ∖{uᵢ}) ∪ {to}. Edge indices are preserved.
pub fn move_edges(h: &Hypergraph, moves: &[(usize, usize)], to: usize) -> Result<Hypergraph> {
    check_edges(h, moves.iter().map(|m| m.0))?;
    if to >= h.n() {
        return Err(Error::VertexOutOfRange {
            vertex: to,
            n: h.n(),
        });
    }
    let replaced = moves
        .iter()
        .map(|&(e, from)| Ok((e, regluing(h, e, from, to)?)))
        .collect::<Result<Vec<_>>>()?;
    rebuilt(h, replaced)
}

fn check_edges(h: &Hypergraph, edges: impl Iterator<Item = usize>) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for e in edges {
        if e >= h.k() {
            return Err(Error::Transform(format!("edge index {e} out of range")));
        }
        if !seen.insert(e) {
            return Err(Error::Transform(format!("edge {e} listed twice")));
        }
    }
    Ok(())
}

/// Perron condition for moving: X_to ≥ max X_{uᵢ}.
pub fn move_certified(perron: &[f64], moves: &[(usize, usize)], to: usize) -> bool {
    moves
        .iter()
        .all(|&(_, from)| perron[to] >= perron[from] - CERT_SLACK)
}

/// Edge releasing on a non-pendant edge `e` at `u ∈ e`: every edge meeting e
/// at a vertex v ≠ u is moved from v to u.
pub fn release_edge(h: &Hypergraph, e: usize, u: usize) -> Result<Hypergraph> {
    if e >= h.k() {
        return Err(Error::Transform(format!("edge index {e} out of range")));
    }
    if !h.contains(e, u) {
        return Err(Error::Transform(format!("vertex {u} is not in edge {e}")));
    }
    if h.non_pendant_vertices(e).len() < 2 {
        return Err(Error::Transform(format!(
            "edge {e} is pendant; nothing to release"
        )));
    }
    let mut moves = Vec::new();
    for f in 0..h.k() {
        if f == e {
            continue;
        }
        match intersection(h.edge(e), h.edge(f)).as_slice() {
            [] => {}
            [v] if *v == u => {}
            [v] => moves.push((f, *v)),
            _ => {
                return Err(Error::Transform(format!(
                    "edges {e} and {f} are not linear"
                )))
            }
        }
    }
    move_edges(h, &moves, u)
}

/// Releases `e` at the vertex of e with the largest Perron entry (ties within
/// [`CERT_SLACK`] go to the lowest id). Returns the result and the vertex used.
pub fn release_edge_at_max(h: &Hypergraph, e: usize) -> Result<(Hypergraph, usize)> {
    if e >= h.k() {
        return Err(Error::Transform(format!("edge index {e} out of range")));
    }
    let x = spectral_radius(h, DEFAULT_TOL)?.perron_vector;
    let best = h
        .edge(e)
        .iter()
        .map(|&v| x[v])
        .fold(f64::NEG_INFINITY, f64::max);
    let u = *h
        .edge(e)
        .iter()
        .find(|&&v| x[v] >= best - CERT_SLACK)
        .expect("edge is non-empty");
    Ok((release_edge(h, e, u)?, u))
}

/// One source vertex u_s, the edges E(u_s) it gives away and their targets:
/// `edges[t]` is re-glued from `source` to `targets[t]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpreadGroup {
    pub source: usize,
    pub edges: Vec<usize>,
    pub targets: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpreadPlan {
    pub groups: Vec<SpreadGroup>,
}

pub fn spread_edges(h: &Hypergraph, plan: &SpreadPlan) -> Result<Hypergraph> {
    check_edges(h, plan.groups.iter().flat_map(|g| g.edges.iter().copied()))?;
    let mut replaced = Vec::new();
    for g in &plan.groups {
        if g.edges.len() != g.targets.len() {
            return Err(Error::Transform(format!(
                "source {} gives {} edges to {} targets",
                g.source,
                g.edges.len(),
                g.targets.len()
            )));
        }
        if g.edges.is_empty() {
            return Err(Error::Transform(format!(
                "source {} has no edges to spread",
                g.source
            )));
        }
        for (&e, &v) in g.edges.iter().zip(&g.targets) {
            if v >= h.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: h.n(),
                });
            }
            replaced.push((e, regluing(h, e, g.source, v)?));
        }
    }
    rebuilt(h, replaced)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupCertificate {
    pub source: usize,
    /// Every edge of E(u_s) is pendant with u_s as its only non-pendant vertex.
    pub all_pendant: bool,
    /// (A): Σ_{v∈V_s} X_v vs |E(u_s)|·X_{u_s}; (B): min_v X_v vs X_{u_s}.
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpreadCertificate {
    pub groups: Vec<GroupCertificate>,
    pub guaranteed: bool,
}

/// Evaluates the spreading hypotheses against a Perron vector of `h`.
pub fn spread_certificate(h: &Hypergraph, perron: &[f64], plan: &SpreadPlan) -> SpreadCertificate {
    let groups: Vec<GroupCertificate> = plan
        .groups
        .iter()
        .map(|g| {
            let all_pendant = g
                .edges
                .iter()
                .all(|&e| h.non_pendant_vertices(e) == [g.source]);
            let xu = perron[g.source];
            let (lhs, rhs) = if all_pendant {
                (
                    g.targets.iter().map(|&v| perron[v]).sum(),
                    g.edges.len() as f64 * xu,
                )
            } else {
                (
                    g.targets
                        .iter()
                        .map(|&v| perron[v])
                        .fold(f64::INFINITY, f64::min),
                    xu,
                )
            };
            GroupCertificate {
                source: g.source,
                all_pendant,
                lhs,
                rhs,
                holds: lhs >= rhs - CERT_SLACK,
            }
        })
        .collect();
    let guaranteed = groups.iter().all(|g| g.holds);
    SpreadCertificate { groups, guaranteed }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Operation {
    Move {
        moves: Vec<(usize, usize)>,
        to: usize,
    },
    /// `at = None` releases at the Perron-maximal vertex of the edge.
    Release {
        edge: usize,
        at: Option<usize>,
    },
    Spread {
        plan: SpreadPlan,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformOutcome {
    pub result: Hypergraph,
    pub lambda_before: f64,
    pub lambda_after: f64,
    /// The operation's hypotheses certify a strict increase.
    pub guaranteed: bool,
    pub observed_increase: bool,
}

impl TransformOutcome {
    pub fn margin(&self) -> f64 {
        self.lambda_after - self.lambda_before
    }
}

/// Applies the operation and measures λ₁ before and after. Releasing is
/// always guaranteed; moving and spreading are certified from the Perron
/// vector of the input.
pub fn apply_operation(h: &Hypergraph, op: &Operation, tol: f64) -> Result<TransformOutcome> {
    let before = spectral_radius(h, tol)?;
    let x = &before.perron_vector;
    let (result, guaranteed) = match op {
        Operation::Move { moves, to } => {
            (move_edges(h, moves, *to)?, move_certified(x, moves, *to))
        }
        Operation::Release { edge, at: Some(u) } => (release_edge(h, *edge, *u)?, true),
        Operation::Release { edge, at: None } => (release_edge_at_max(h, *edge)?.0, true),
        Operation::Spread { plan } => (
            spread_edges(h, plan)?,
            spread_certificate(h, x, plan).guaranteed,
        ),
    };
    let after = spectral_radius(&result, tol)?;
    Ok(TransformOutcome {
        observed_increase: after.lambda1 > before.lambda1,
        result,
        lambda_before: before.lambda1,
        lambda_after: after.lambda1,
        guaranteed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hyperstar, hypertree_td, loose_path, path_core, AttachmentSpec};
    use crate::spectral::lambda1;

    fn edge_at(h: &Hypergraph, v: usize, avoid: &[usize]) -> usize {
        (0..h.k())
            .find(|&e| h.contains(e, v) && avoid.iter().all(|&a| !h.contains(e, a)))
            .unwrap()
    }

    #[test]
    fn release_path_middle_gives_star() {
        let p = loose_path(3, 3).unwrap();
        let v2 = path_core(3, 2);
        let star = release_edge(&p, 1, v2).unwrap();
        assert_eq!(star.edge_degree(v2), 3);
        assert!((lambda1(&star).unwrap() - 1.5).abs() < 1e-11);
        assert_eq!((star.n(), star.k()), (p.n(), p.k()));
    }

    #[test]
    fn release_pendant_edge_fails() {
        let p = loose_path(3, 3).unwrap();
        assert!(release_edge(&p, 0, 0).is_err());
    }

    #[test]
    fn move_symmetric_relabel() {
        let t = hypertree_td(3, 3, &AttachmentSpec::new().at(2, 1)).unwrap();
        let (v2, v3) = (path_core(3, 2), path_core(3, 3));
        let pend = edge_at(&t, v2, &[0, v3]);
        let x = spectral_radius(&t, DEFAULT_TOL).unwrap().perron_vector;
        assert!(x[v3] < x[v2]);
        let out = apply_operation(
            &t,
            &Operation::Move {
                moves: vec![(pend, v2)],
                to: v3,
            },
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(!out.guaranteed);
        assert!((out.lambda_after - out.lambda_before).abs() < 1e-10);
    }

    #[test]
    fn move_off_center_decreases() {
        let s = hyperstar(3, 3).unwrap();
        // vertex 1 is a pendant vertex of edge 0; move edge 1 from the center to it.
        let out = apply_operation(
            &s,
            &Operation::Move {
                moves: vec![(1, 0)],
                to: 1,
            },
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(!out.guaranteed);
        assert!(out.lambda_after < out.lambda_before);
    }

    #[test]
    fn move_toward_center_increases() {
        let p = loose_path(3, 3).unwrap();
        let (v2, v3) = (path_core(3, 2), path_core(3, 3));
        let out = apply_operation(
            &p,
            &Operation::Move {
                moves: vec![(2, v3)],
                to: v2,
            },
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(out.guaranteed);
        assert!(out.margin() > 1e-9);
    }

    #[test]
    fn duplicate_result_fails() {
        // Edges {0,3,4} and {0,5,6}: re-gluing the first from 3 to 5 makes
        // them share {0,5}.
        let s = hyperstar(3, 3).unwrap();
        assert!(move_edges(&s, &[(1, 3)], 5).is_err());
        let plan = SpreadPlan {
            groups: vec![SpreadGroup {
                source: 3,
                edges: vec![1],
                targets: vec![5],
            }],
        };
        assert!(spread_edges(&s, &plan).is_err());
        // Target already in the edge.
        assert!(move_edges(&s, &[(0, 0)], 1).is_err());
        // m = 2: re-gluing {2,3} as {1,2} duplicates an edge.
        let h = Hypergraph::new(2, 4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert!(move_edges(&h, &[(2, 3)], 1).is_err());
    }

    #[test]
    fn degenerate_spread_equals_move() {
        let p = loose_path(3, 4).unwrap();
        let (v3, v4) = (path_core(3, 3), path_core(3, 4));
        let plan = SpreadPlan {
            groups: vec![SpreadGroup {
                source: v4,
                edges: vec![3],
                targets: vec![v3],
            }],
        };
        assert_eq!(
            spread_edges(&p, &plan).unwrap(),
            move_edges(&p, &[(3, v4)], v3).unwrap()
        );
    }

    #[test]
    fn release_at_max_tie_breaks_low() {
        let p = loose_path(3, 3).unwrap();
        let (_, u) = release_edge_at_max(&p, 1).unwrap();
        assert_eq!(u, path_core(3, 2));
    }
}
