//! Maximum cardinality search and its minimal-triangulation variant.
//!
//! Both run on a small undirected graph over local indices. Plain MCS plus
//! the elimination-order check decides chordality; the MCS-M variant also
//! returns a minimal triangulation, whose higher-neighbor sets are scanned
//! for clique separators by the fast decomposition.

use alloc::vec;
use alloc::vec::Vec;

use crate::system::{CoxeterSystem, GeneratorSubset};

/// Undirected graph on `0..n`, dense adjacency.
#[derive(Clone, Debug)]
pub(crate) struct LocalGraph {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl LocalGraph {
    pub fn new(n: usize) -> Self {
        LocalGraph {
            n,
            adj: vec![vec![false; n]; n],
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u][v] = true;
        self.adj[v][u] = true;
    }

    /// The diagram induced on `r`; local index = position in the sorted
    /// subset. Also returns the local-to-global index map.
    pub fn from_system(sys: &CoxeterSystem, r: &GeneratorSubset) -> (Self, Vec<usize>) {
        let ix = sys.indices_of(r).expect("subset validated by caller");
        let mut g = LocalGraph::new(ix.len());
        for a in 0..ix.len() {
            for b in a + 1..ix.len() {
                if sys.adjacent_ix(ix[a], ix[b]) {
                    g.add_edge(a, b);
                }
            }
        }
        (g, ix)
    }
}

/// Maximum cardinality search. Returns the elimination order `x1..xn`
/// (vertices numbered n..1 in visit order, then reversed). Ties break on the
/// smallest index.
pub(crate) fn mcs(g: &LocalGraph) -> Vec<usize> {
    let n = g.n;
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let x = (0..n)
            .filter(|&v| !numbered[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        numbered[x] = true;
        visit.push(x);
        for v in 0..n {
            if !numbered[v] && g.adj[x][v] {
                weight[v] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// MCS-M: like MCS, but a vertex's weight also rises when it is reachable
/// through strictly lighter unnumbered vertices; such pairs become fill
/// edges. Returns the elimination order and the (minimally) triangulated
/// graph.
pub(crate) fn mcs_m(g: &LocalGraph) -> (Vec<usize>, LocalGraph) {
    let n = g.n;
    let mut fill = g.clone();
    let mut weight = vec![0i64; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let x = (0..n)
            .filter(|&v| !numbered[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        numbered[x] = true;
        visit.push(x);
        // best[v]: least possible maximum interior weight of an x-v path
        // through unnumbered vertices; -1 when a direct edge exists.
        let mut best = vec![i64::MAX; n];
        for v in 0..n {
            if !numbered[v] && g.adj[x][v] {
                best[v] = -1;
            }
        }
        loop {
            let mut changed = false;
            for u in 0..n {
                if numbered[u] || best[u] == i64::MAX {
                    continue;
                }
                let through = best[u].max(weight[u]);
                for v in 0..n {
                    if !numbered[v] && g.adj[u][v] && through < best[v] {
                        best[v] = through;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        for v in 0..n {
            // Reached through interiors all lighter than v (direct edges
            // have best = -1 and always qualify).
            if !numbered[v] && best[v] != i64::MAX && best[v] < weight[v] {
                weight[v] += 1;
                fill.add_edge(x, v);
            }
        }
    }
    visit.reverse();
    (visit, fill)
}

/// Verifies a perfect elimination order: for each vertex, its later
/// neighbors minus the closest one must all neighbor the closest one.
/// Returns a violating triple `(v, closest, other)` if there is one.
pub(crate) fn peo_violation(g: &LocalGraph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let n = g.n;
    let mut pos = vec![0usize; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    for (p, &v) in order.iter().enumerate() {
        let later: Vec<usize> = (0..n).filter(|&u| g.adj[v][u] && pos[u] > p).collect();
        let Some(&u) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        for &w in &later {
            if w != u && !g.adj[u][w] {
                return Some((v, u, w));
            }
        }
    }
    None
}
