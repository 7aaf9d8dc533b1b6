//! Labeled-diagram isomorphism and a canonical form.
//!
//! Two systems are diagram-isomorphic when some bijection of their
//! generators preserves every order label, infinite ones included.
//! [`diagram_isomorphic`] finds such a bijection by backtracking;
//! [`canonical_key`] produces a string equal for two systems exactly when
//! they are isomorphic, used to deduplicate orbits. The two are independent
//! implementations, which lets tests cross-check one against the other.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::system::{CoxeterSystem, GeneratorId, OrderLabel};

/// Full symmetric label matrix; the diagonal is unused. Infinite order is
/// coded as 0, which no off-diagonal finite label can be.
struct Mat {
    n: usize,
    lab: Vec<u64>,
}

impl Mat {
    fn from_system(sys: &CoxeterSystem) -> Mat {
        let n = sys.rank();
        let mut lab = vec![0u64; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    lab[i * n + j] = match sys.order_ix(i, j) {
                        OrderLabel::Finite(m) => m as u64,
                        OrderLabel::Infinite => 0,
                    };
                }
            }
        }
        Mat { n, lab }
    }

    fn at(&self, i: usize, j: usize) -> u64 {
        self.lab[i * self.n + j]
    }

    /// Rows of `u` and `v` agree everywhere outside {u,v}: swapping them is
    /// an automorphism.
    fn twins(&self, u: usize, v: usize) -> bool {
        (0..self.n).all(|x| x == u || x == v || self.at(u, x) == self.at(v, x))
    }
}

/// A vertex's refinement signature: own class plus the sorted (label, class)
/// view of every other vertex, tagged with the vertex itself.
type RefineSig = (u32, Vec<(u64, u32)>, usize);

/// Stable vertex partition: refine by (own class, multiset of (label, class)
/// pairs to all other vertices) until the class count stops growing. Class
/// ids depend only on the isomorphism type, never on generator names.
fn refine(m: &Mat) -> Vec<u32> {
    let n = m.n;
    let mut colors = vec![0u32; n];
    let mut classes = 1usize;
    loop {
        let mut sigs: Vec<RefineSig> = (0..n)
            .map(|v| {
                let mut around: Vec<(u64, u32)> = (0..n)
                    .filter(|&u| u != v)
                    .map(|u| (m.at(v, u), colors[u]))
                    .collect();
                around.sort_unstable();
                (colors[v], around, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0u32; n];
        let mut id = 0u32;
        for w in 1..n {
            if (&sigs[w].0, &sigs[w].1) != (&sigs[w - 1].0, &sigs[w - 1].1) {
                id += 1;
            }
            next[sigs[w].2] = id;
        }
        if !sigs.is_empty() {
            next[sigs[0].2] = 0;
        }
        let count = id as usize + 1;
        if count == classes || n == 0 {
            return colors;
        }
        colors = next;
        classes = count;
    }
}

/// A string equal for two systems iff they are diagram-isomorphic: the rank
/// followed by the minimal upper-triangle label matrix over all generator
/// orderings compatible with the refinement partition.
pub fn canonical_key(sys: &CoxeterSystem) -> String {
    let m = Mat::from_system(sys);
    let colors = refine(&m);
    let mut class_seq: Vec<u32> = colors.clone();
    class_seq.sort_unstable();

    let mut best: Option<Vec<u64>> = None;
    let mut placed: Vec<usize> = Vec::new();
    let mut cur: Vec<u64> = Vec::new();
    search(&m, &colors, &class_seq, &mut placed, &mut cur, &mut best);

    let mut key = String::new();
    key.push_str(&alloc::format!("{};", m.n));
    for (i, c) in best
        .expect("search always reaches a leaf")
        .iter()
        .enumerate()
    {
        if i > 0 {
            key.push(',');
        }
        if *c == 0 {
            key.push_str("inf");
        } else {
            key.push_str(&alloc::format!("{c}"));
        }
    }
    key
}

fn search(
    m: &Mat,
    colors: &[u32],
    class_seq: &[u32],
    placed: &mut Vec<usize>,
    cur: &mut Vec<u64>,
    best: &mut Option<Vec<u64>>,
) {
    if placed.len() == m.n {
        if best.as_ref().is_none_or(|b| cur[..] < b[..]) {
            *best = Some(cur.clone());
        }
        return;
    }
    let level_color = class_seq[placed.len()];
    let mut tried: Vec<usize> = Vec::new();
    for v in 0..m.n {
        if colors[v] != level_color || placed.contains(&v) {
            continue;
        }
        if tried.iter().any(|&u| m.twins(u, v)) {
            continue;
        }
        tried.push(v);
        let base = cur.len();
        for &p in placed.iter() {
            cur.push(m.at(v, p));
        }
        let worse = best.as_ref().is_some_and(|b| cur[..] > b[..cur.len()]);
        if !worse {
            placed.push(v);
            search(m, colors, class_seq, placed, cur, best);
            placed.pop();
        }
        cur.truncate(base);
    }
}

/// A label-preserving bijection between the generator sets, if any exists.
pub fn diagram_isomorphic(
    a: &CoxeterSystem,
    b: &CoxeterSystem,
) -> Option<BTreeMap<GeneratorId, GeneratorId>> {
    if a.rank() != b.rank() {
        return None;
    }
    let ma = Mat::from_system(a);
    let mb = Mat::from_system(b);
    let n = ma.n;
    let profile = |m: &Mat, v: usize| {
        let mut row: Vec<u64> = (0..n).filter(|&u| u != v).map(|u| m.at(v, u)).collect();
        row.sort_unstable();
        row
    };
    let pa: Vec<Vec<u64>> = (0..n).map(|v| profile(&ma, v)).collect();
    let pb: Vec<Vec<u64>> = (0..n).map(|v| profile(&mb, v)).collect();
    {
        let mut sa = pa.clone();
        let mut sb = pb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !extend(&ma, &mb, &pa, &pb, 0, &mut map, &mut used) {
        return None;
    }
    let ga = a.generators();
    let gb = b.generators();
    Some(
        (0..n)
            .map(|i| (ga[i].clone(), gb[map[i]].clone()))
            .collect(),
    )
}

fn extend(
    ma: &Mat,
    mb: &Mat,
    pa: &[Vec<u64>],
    pb: &[Vec<u64>],
    i: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if i == ma.n {
        return true;
    }
    for w in 0..mb.n {
        if used[w] || pa[i] != pb[w] {
            continue;
        }
        if (0..i).any(|j| ma.at(i, j) != mb.at(w, map[j])) {
            continue;
        }
        map[i] = w;
        used[w] = true;
        if extend(ma, mb, pa, pb, i + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[i] = usize::MAX;
    }
    false
}
