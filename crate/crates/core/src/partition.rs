//! Equitable partitions and quotient matrices.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hypergraph::Hypergraph;
use crate::spectral::{adjacency_matrix, symmetric_eigenvalues, SymmetricMatrix};

pub const MAX_QUOTIENT_ORDER: usize = 64;
pub const IMAGINARY_TOL: f64 = 1e-10;

/// Ordered, disjoint, non-empty parts covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for (p, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::NotPartition(format!("part {p} is empty")));
            }
            for &v in part {
                if v >= n {
                    return Err(Error::NotPartition(format!("vertex {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::NotPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::NotPartition(format!("vertex {v} is not covered")));
        }
        let parts = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        Ok(Partition { parts })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            parts: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn whole(n: usize) -> Self {
        Partition {
            parts: vec![(0..n).collect()],
        }
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn order(&self) -> usize {
        self.parts.iter().map(Vec::len).sum()
    }

    /// part_of[v] = index of the part holding v.
    pub fn part_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.order()];
        for (p, part) in self.parts.iter().enumerate() {
            for &v in part {
                out[v] = p;
            }
        }
        out
    }

    /// Every part of `self` lies inside a part of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        let owner = coarser.part_of();
        self.parts
            .iter()
            .all(|p| p.iter().all(|&v| owner[v] == owner[p[0]]))
    }

    /// Same parts regardless of order.
    pub fn same_parts(&self, other: &Partition) -> bool {
        let mut a = self.parts.clone();
        let mut b = other.parts.clone();
        a.sort();
        b.sort();
        a == b
    }
}

/// Row sums of (m−1)A from each vertex into each part.
fn scaled_sums(a: &SymmetricMatrix, pi: &Partition) -> Vec<Vec<u64>> {
    let owner = pi.part_of();
    (0..a.order)
        .map(|i| {
            let mut s = vec![0u64; pi.len()];
            for j in 0..a.order {
                s[owner[j]] += a.get(i, j) as u64;
            }
            s
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Equitability {
    Equitable,
    /// Vertices `i` and `j` lie in the same part but send different scaled
    /// sums `si`, `sj` into `part`.
    Witness {
        i: usize,
        j: usize,
        part: usize,
        si: u64,
        sj: u64,
    },
}

impl Equitability {
    pub fn holds(&self) -> bool {
        matches!(self, Equitability::Equitable)
    }
}

fn check_order(h: &Hypergraph, pi: &Partition) -> Result<()> {
    if pi.order() != h.n() {
        return Err(Error::NotPartition(format!(
            "partition covers {} vertices, n = {}",
            pi.order(),
            h.n()
        )));
    }
    Ok(())
}

/// Exact check on the integer matrix (m−1)A.
pub fn is_equitable(h: &Hypergraph, pi: &Partition) -> Result<Equitability> {
    check_order(h, pi)?;
    let sums = scaled_sums(&adjacency_matrix(h), pi);
    for part in pi.parts() {
        let i = part[0];
        for &j in &part[1..] {
            if let Some(q) = (0..pi.len()).find(|&q| sums[i][q] != sums[j][q]) {
                return Ok(Equitability::Witness {
                    i,
                    j,
                    part: q,
                    si: sums[i][q],
                    sj: sums[j][q],
                });
            }
        }
    }
    Ok(Equitability::Equitable)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuotientMatrix {
    /// Row-major (m−1)·b_pq.
    pub scaled: Vec<Vec<u64>>,
    pub scale: u64,
    pub part_sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn order(&self) -> usize {
        self.scaled.len()
    }

    /// B itself.
    pub fn to_dmatrix(&self) -> DMatrix<f64> {
        let k = self.order();
        let s = self.scale as f64;
        DMatrix::from_fn(k, k, |p, q| self.scaled[p][q] as f64 / s)
    }

    /// Eigenvalues of B from the general (non-symmetric) dense solver, sorted
    /// ascending; fails if any has an imaginary part above 1e−10.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        if self.order() > MAX_QUOTIENT_ORDER {
            return Err(Error::SizeCap {
                what: "quotient order",
                got: self.order(),
                cap: MAX_QUOTIENT_ORDER,
            });
        }
        real_eigenvalues(self.to_dmatrix())
    }

    /// Eigenvalues via the symmetrization D^{1/2} B D^{−1/2}, D = diag(|C_p|),
    /// which is symmetric because |C_p|·b_pq = |C_q|·b_qp.
    pub fn symmetrized_eigenvalues(&self) -> Vec<f64> {
        let k = self.order();
        let s = self.scale as f64;
        let d: Vec<f64> = self.part_sizes.iter().map(|&c| c as f64).collect();
        let m = DMatrix::from_fn(k, k, |p, q| {
            self.scaled[p][q] as f64 / s * (d[p] / d[q]).sqrt()
        });
        symmetric_eigenvalues(m)
    }

    pub fn spectral_radius(&self) -> Result<f64> {
        Ok(self
            .eigenvalues()?
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max))
    }

    /// Strong connectivity of the support of B.
    pub fn is_irreducible(&self) -> bool {
        let k = self.order();
        let reach = |forward: bool| {
            let mut seen = vec![false; k];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(p) = stack.pop() {
                for q in 0..k {
                    let w = if forward {
                        self.scaled[p][q]
                    } else {
                        self.scaled[q][p]
                    };
                    if w > 0 && !seen[q] {
                        seen[q] = true;
                        stack.push(q);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        k > 0 && reach(true) && reach(false)
    }
}

/// Real eigenvalues of a general square matrix (Schur based), sorted
/// ascending; errors when an eigenvalue is not real within 1e−10.
pub fn real_eigenvalues(a: DMatrix<f64>) -> Result<Vec<f64>> {
    let ev = a.complex_eigenvalues();
    let mut out = Vec::with_capacity(ev.len());
    for z in ev.iter() {
        if z.im.abs() > IMAGINARY_TOL {
            return Err(Error::ComplexEigenvalue { re: z.re, im: z.im });
        }
        out.push(z.re);
    }
    out.sort_by(|a, b| a.total_cmp(b));
    Ok(out)
}

pub fn quotient_matrix(h: &Hypergraph, pi: &Partition) -> Result<QuotientMatrix> {
    check_order(h, pi)?;
    if let Equitability::Witness { i, j, part, si, sj } = is_equitable(h, pi)? {
        return Err(Error::NotEquitable { i, j, part, si, sj });
    }
    let sums = scaled_sums(&adjacency_matrix(h), pi);
    Ok(QuotientMatrix {
        scaled: pi.parts().iter().map(|p| sums[p[0]].clone()).collect(),
        scale: (h.m() - 1) as u64,
        part_sizes: pi.parts().iter().map(Vec::len).collect(),
    })
}

/// The power hypergraph ℙ(G) together with its partition π_p = U₁ ∪ U₂ ∪ U₃:
/// U₁ the non-pendant graph vertices as singletons, U₂ the fresh vertices of
/// each non-pendant graph edge, U₃ the pendant-edge classes (fresh vertices
/// plus the pendant vertex) merged over pendant edges meeting at a vertex.
pub fn canonical_power_partition(g: &SimpleGraph, m: usize) -> Result<(Hypergraph, Partition)> {
    if g.edges().is_empty() {
        return Err(Error::Parameter("graph has no edges".into()));
    }
    let h = crate::families::power_hypergraph(g, m)?;
    let deg = g.degrees();
    let fresh = |j: usize| g.n() + j * (m - 2)..g.n() + (j + 1) * (m - 2);
    let mut parts: Vec<Vec<usize>> = (0..g.n())
        .filter(|&v| deg[v] > 1)
        .map(|v| vec![v])
        .collect();
    // Pendant edges keyed by their support vertex (K₂ components by edge).
    let mut pendant_classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (j, &(a, b)) in g.edges().iter().enumerate() {
        let v_e: Vec<usize> = fresh(j).collect();
        match (deg[a] == 1, deg[b] == 1) {
            (false, false) => {
                if !v_e.is_empty() {
                    parts.push(v_e)
                }
            }
            (true, true) => {
                let mut p = v_e;
                p.extend([a, b]);
                pendant_classes.insert(usize::MAX - j, p);
            }
            (leaf_a, _) => {
                let (leaf, support) = if leaf_a { (a, b) } else { (b, a) };
                let class = pendant_classes.entry(support).or_default();
                class.extend(v_e);
                class.push(leaf);
            }
        }
    }
    parts.extend(pendant_classes.into_values());
    let pi = Partition::new(h.n(), parts)?;
    Ok((h, pi))
}

/// Coarsest equitable partition refining `seed`, by iterated splitting on
/// (current part, scaled sums into every part) signatures. Parts come out
/// ordered by their smallest vertex.
pub fn coarsest_equitable_refinement(h: &Hypergraph, seed: &Partition) -> Result<Partition> {
    check_order(h, seed)?;
    let a = adjacency_matrix(h);
    let n = h.n();
    let mut color = seed.part_of();
    let mut count = seed.len();
    loop {
        let k = count;
        let sigs: Vec<(usize, Vec<u64>)> = (0..n)
            .map(|i| {
                let mut s = vec![0u64; k];
                for j in 0..n {
                    s[color[j]] += a.get(i, j) as u64;
                }
                (color[i], s)
            })
            .collect();
        // Renumber by first occurrence so the result is deterministic.
        let mut ids: BTreeMap<&(usize, Vec<u64>), usize> = BTreeMap::new();
        let mut next = vec![0; n];
        let mut fresh = 0;
        for i in 0..n {
            next[i] = *ids.entry(&sigs[i]).or_insert_with(|| {
                fresh += 1;
                fresh - 1
            });
        }
        let stable = fresh == count;
        color = next;
        count = fresh;
        if stable {
            break;
        }
    }
    let mut parts = vec![Vec::new(); count];
    for v in 0..n {
        parts[color[v]].push(v);
    }
    Partition::new(n, parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{hyperstar, loose_cycle};
    use crate::spectral::lambda1;

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0, 1], vec![2]]).is_ok());
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1, 2], vec![]]).is_err());
    }

    #[test]
    fn singletons_give_a() {
        let c = loose_cycle(3, 3).unwrap();
        let pi = Partition::singletons(c.n());
        assert!(is_equitable(&c, &pi).unwrap().holds());
        let b = quotient_matrix(&c, &pi).unwrap();
        assert_eq!(b.to_dmatrix(), adjacency_matrix(&c).to_dmatrix());
    }

    #[test]
    fn cycle_core_loose_split() {
        let c = loose_cycle(3, 3).unwrap();
        let core: Vec<usize> = vec![0, 2, 4];
        let pi = Partition::new(6, vec![core, vec![1, 3, 5]]).unwrap();
        let b = quotient_matrix(&c, &pi).unwrap();
        let r = b.spectral_radius().unwrap();
        assert!((r - (2.0 + 20f64.sqrt()) / 4.0).abs() < 1e-12);
        assert!((r - lambda1(&c).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn hyperstar_witness() {
        let s = hyperstar(3, 3).unwrap();
        let pi = Partition::new(7, vec![vec![0, 1], vec![2, 3, 4, 5, 6]]).unwrap();
        assert!(!is_equitable(&s, &pi).unwrap().holds());
        assert!(matches!(
            quotient_matrix(&s, &pi),
            Err(Error::NotEquitable { .. })
        ));
    }

    #[test]
    fn refinement_examples() {
        let s = hyperstar(3, 3).unwrap();
        let r = coarsest_equitable_refinement(&s, &Partition::whole(7)).unwrap();
        assert_eq!(r.parts(), &[vec![0], vec![1, 2, 3, 4, 5, 6]]);
        let c = loose_cycle(3, 4).unwrap();
        let r = coarsest_equitable_refinement(&c, &Partition::whole(8)).unwrap();
        assert_eq!(r.parts(), &[vec![0, 2, 4, 6], vec![1, 3, 5, 7]]);
        let r = coarsest_equitable_refinement(&c, &Partition::singletons(8)).unwrap();
        assert_eq!(r, Partition::singletons(8));
    }

    #[test]
    fn power_partitions() {
        let (h, pi) = canonical_power_partition(&SimpleGraph::star(3), 3).unwrap();
        assert_eq!(pi.len(), 2);
        assert!(is_equitable(&h, &pi).unwrap().holds());
        let (h, pi) = canonical_power_partition(&SimpleGraph::path(4), 3).unwrap();
        assert!(pi.parts().contains(&vec![1]) && pi.parts().contains(&vec![2]));
        assert!(is_equitable(&h, &pi).unwrap().holds());
        let (h, pi) = canonical_power_partition(&SimpleGraph::cycle(3).unwrap(), 3).unwrap();
        assert_eq!(pi.len(), 6);
        assert!(is_equitable(&h, &pi).unwrap().holds());
        let (h, pi) = canonical_power_partition(&SimpleGraph::path(2), 4).unwrap();
        assert_eq!(pi.len(), 1);
        assert!(is_equitable(&h, &pi).unwrap().holds());
    }

    #[test]
    fn irreducible_quotient() {
        let (h, pi) = canonical_power_partition(&SimpleGraph::star(3), 3).unwrap();
        assert!(quotient_matrix(&h, &pi).unwrap().is_irreducible());
    }
}
