//! Isomorphism-invariant codes for connected graphs with few independent
//! cycles.
//!
//! Hanging trees are encoded bottom-up (AHU codes); what remains is the
//! 2-core, which for low cyclomatic number is either a single cycle or a
//! handful of branch vertices joined by chains. The code is the minimum over
//! all label-respecting orderings of the branch vertices, so two graphs get
//! the same code exactly when they are isomorphic.

use hyperspectra::{Hypergraph, SimpleGraph};

use crate::error::{Result, VerifyError};

/// Orderings of branch vertices tried before giving up.
const MAX_BRANCH_ORDERINGS: usize = 50_000;

/// Canonical code of a connected vertex-labelled graph. Labels must not be
/// one of the separator characters `()[]:,;|`.
pub fn canonical_code(adj: &[Vec<usize>], labels: &[char]) -> Result<String> {
    let n = adj.len();
    if n == 0 {
        return Ok(String::new());
    }
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if edges + 1 == n {
        return Ok(tree_code(adj, labels));
    }
    let core = two_core(adj);
    let mut deco = vec![String::new(); n];
    for v in (0..n).filter(|&v| core[v]) {
        let mut hang: Vec<String> = adj[v]
            .iter()
            .filter(|&&u| !core[u])
            .map(|&u| rooted(adj, labels, u, v))
            .collect();
        hang.sort();
        deco[v] = format!("[{}{}]", labels[v], hang.concat());
    }
    let core_adj: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            if core[v] {
                adj[v].iter().copied().filter(|&u| core[u]).collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    let branch: Vec<usize> = (0..n)
        .filter(|&v| core[v] && core_adj[v].len() >= 3)
        .collect();
    if branch.is_empty() {
        return Ok(cycle_code(&core_adj, &deco, &core));
    }
    branched_code(&core_adj, &deco, &branch)
}

/// Code of a connected simple graph (unlabelled).
pub fn graph_code(g: &SimpleGraph) -> Result<String> {
    canonical_code(&g.adjacency_lists(), &vec!['v'; g.n()])
}

/// Code of a connected linear hypergraph via its vertex–edge incidence graph.
pub fn hypergraph_code(h: &Hypergraph) -> Result<String> {
    if !h.is_connected() {
        return Err(VerifyError::Param(
            "canonical codes need connected inputs".into(),
        ));
    }
    let n = h.n();
    let mut adj = vec![Vec::new(); n + h.k()];
    for (e, edge) in h.edges().iter().enumerate() {
        for &v in edge {
            adj[v].push(n + e);
            adj[n + e].push(v);
        }
    }
    let mut labels = vec!['v'; n];
    labels.extend(std::iter::repeat_n('e', h.k()));
    canonical_code(&adj, &labels)
}

fn rooted(adj: &[Vec<usize>], labels: &[char], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| rooted(adj, labels, u, v))
        .collect();
    kids.sort();
    format!("({}{})", labels[v], kids.concat())
}

fn tree_code(adj: &[Vec<usize>], labels: &[char]) -> String {
    let n = adj.len();
    if n == 1 {
        return format!("T({})", labels[0]);
    }
    // Centers: peel leaves layer by layer.
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in &adj[v] {
                if deg[u] > 1 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
            deg[v] = 0;
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| format!("T{}", rooted(adj, labels, c, usize::MAX)))
        .min()
        .unwrap_or_default()
}

/// Vertices surviving repeated leaf removal.
fn two_core(adj: &[Vec<usize>]) -> Vec<bool> {
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut keep = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !keep[v] {
            continue;
        }
        keep[v] = false;
        for &u in &adj[v] {
            if keep[u] {
                deg[u] -= 1;
                if deg[u] == 1 {
                    stack.push(u);
                }
            }
        }
    }
    keep
}

fn cycle_code(core_adj: &[Vec<usize>], deco: &[String], core: &[bool]) -> String {
    let start = core
        .iter()
        .position(|&c| c)
        .expect("cyclic graph has a core");
    let mut seq = vec![deco[start].clone()];
    let (mut prev, mut cur) = (start, core_adj[start][0]);
    while cur != start {
        seq.push(deco[cur].clone());
        let next = if core_adj[cur][0] == prev {
            core_adj[cur][1]
        } else {
            core_adj[cur][0]
        };
        prev = cur;
        cur = next;
    }
    let len = seq.len();
    let mut best: Option<String> = None;
    for s in 0..len {
        for dir in [1isize, -1] {
            let word: String = (0..len)
                .map(|i| {
                    seq[(s as isize + dir * i as isize).rem_euclid(len as isize) as usize].as_str()
                })
                .collect::<Vec<_>>()
                .join(",");
            if best.as_ref().is_none_or(|b| word < *b) {
                best = Some(word);
            }
        }
    }
    format!("C{}", best.unwrap_or_default())
}

struct Chain {
    from: usize,
    inner: Vec<usize>,
    to: usize,
}

fn branched_code(core_adj: &[Vec<usize>], deco: &[String], branch: &[usize]) -> Result<String> {
    let is_branch = |v: usize| core_adj[v].len() >= 3;
    let mut chains = Vec::new();
    for &b in branch {
        for &w in &core_adj[b] {
            let (mut prev, mut cur) = (b, w);
            let mut inner = Vec::new();
            while !is_branch(cur) {
                inner.push(cur);
                let next = if core_adj[cur][0] == prev {
                    core_adj[cur][1]
                } else {
                    core_adj[cur][0]
                };
                prev = cur;
                cur = next;
            }
            chains.push(Chain {
                from: b,
                inner,
                to: cur,
            });
        }
    }

    let key = |v: usize| format!("{}{}", core_adj[v].len(), deco[v]);
    let mut sorted: Vec<usize> = branch.to_vec();
    sorted.sort_by_key(|&v| key(v));
    // Runs of equal keys may be permuted freely.
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &sorted {
        match groups.last_mut() {
            Some(g) if key(g[0]) == key(v) => g.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let orderings: usize = groups
        .iter()
        .map(|g| (1..=g.len()).product::<usize>())
        .product();
    if orderings > MAX_BRANCH_ORDERINGS {
        return Err(VerifyError::Budget {
            what: "branch-vertex orderings",
            got: orderings,
            cap: MAX_BRANCH_ORDERINGS,
        });
    }
    let header: String = sorted.iter().map(|&v| key(v)).collect::<Vec<_>>().join(",");

    let mut rank = vec![usize::MAX; core_adj.len()];
    let mut best: Option<String> = None;
    let perms: Vec<Vec<Vec<usize>>> = groups.iter().map(|g| permutations(g)).collect();
    let mut idx = vec![0usize; perms.len()];
    loop {
        let mut r = 0;
        for (g, &i) in perms.iter().zip(&idx) {
            for &v in &g[i] {
                rank[v] = r;
                r += 1;
            }
        }
        let mut words: Vec<String> = chains
            .iter()
            .map(|c| {
                let fwd: Vec<&str> = c.inner.iter().map(|&v| deco[v].as_str()).collect();
                let rev: Vec<&str> = fwd.iter().rev().copied().collect();
                let a = format!("{}:{}:{}", rank[c.from], fwd.join(","), rank[c.to]);
                let b = format!("{}:{}:{}", rank[c.to], rev.join(","), rank[c.from]);
                a.min(b)
            })
            .collect();
        words.sort();
        let word = words.join(";");
        if best.as_ref().is_none_or(|b| word < *b) {
            best = Some(word);
        }
        // Odometer over the per-group permutations.
        let mut g = 0;
        loop {
            if g == idx.len() {
                return Ok(format!("B{}|{}", header, best.unwrap_or_default()));
            }
            idx[g] += 1;
            if idx[g] < perms[g].len() {
                break;
            }
            idx[g] = 0;
            g += 1;
        }
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperspectra::families::{bicyclic_b2c, loose_cycle, unicyclic_uc, AttachmentSpec};

    fn relabel(g: &SimpleGraph, perm: &[usize]) -> SimpleGraph {
        SimpleGraph::new(
            g.n(),
            g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect(),
        )
        .unwrap()
    }

    #[test]
    fn invariant_under_relabelling() {
        // Two triangles joined by a path, with a tail.
        let g = SimpleGraph::new(
            8,
            vec![
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 4),
                (6, 7),
            ],
        )
        .unwrap();
        let perm = [5, 3, 7, 0, 1, 6, 2, 4];
        assert_eq!(
            graph_code(&g).unwrap(),
            graph_code(&relabel(&g, &perm)).unwrap()
        );
    }

    #[test]
    fn separates_non_isomorphic() {
        let p4 = SimpleGraph::path(4);
        let star = SimpleGraph::star(3);
        assert_ne!(graph_code(&p4).unwrap(), graph_code(&star).unwrap());
        // Pendant at a cycle vertex adjacent vs opposite to another pendant.
        let a = SimpleGraph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)]).unwrap();
        let b = SimpleGraph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]).unwrap();
        assert_ne!(graph_code(&a).unwrap(), graph_code(&b).unwrap());
    }

    #[test]
    fn hypergraph_codes() {
        let a = unicyclic_uc(3, 3, &AttachmentSpec::new().at(1, 2)).unwrap();
        let b = unicyclic_uc(3, 3, &AttachmentSpec::new().at(2, 2)).unwrap();
        let c = unicyclic_uc(3, 3, &AttachmentSpec::new().at(1, 1).at(2, 1)).unwrap();
        assert_eq!(hypergraph_code(&a).unwrap(), hypergraph_code(&b).unwrap());
        assert_ne!(hypergraph_code(&a).unwrap(), hypergraph_code(&c).unwrap());
        assert_ne!(
            hypergraph_code(&loose_cycle(3, 4).unwrap()).unwrap(),
            hypergraph_code(&a).unwrap()
        );
        let x = bicyclic_b2c(3, 2, 1).unwrap();
        let y = bicyclic_b2c(3, 1, 2).unwrap();
        assert_ne!(hypergraph_code(&x).unwrap(), hypergraph_code(&y).unwrap());
    }
}
