//! Chordality of the presentation diagram.
//!
//! A diagram is chordal when every cycle of length at least four has a
//! chord. Chordality is exactly the condition under which the canonical
//! decomposition has only complete vertex labels, and
//! [`check_chordal_equivalence`] verifies that equivalence instance by
//! instance.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::mcs::{mcs, peo_violation, LocalGraph};
use crate::report::VerificationReport;
use crate::separators::relative_minimal_separators;
use crate::system::{CoxeterSystem, GeneratorId};
use crate::Error;

/// Does every cycle of length at least four in the diagram have a chord?
pub fn is_chordal(sys: &CoxeterSystem) -> bool {
    let (g, _) = LocalGraph::from_system(sys, &sys.full_set());
    let order = mcs(&g);
    peo_violation(&g, &order).is_none()
}

/// A chordless cycle of length at least four, as a cyclic generator
/// sequence; `None` exactly when the diagram is chordal.
pub fn chordless_cycle(sys: &CoxeterSystem) -> Option<Vec<GeneratorId>> {
    let (g, map) = LocalGraph::from_system(sys, &sys.full_set());
    let n = g.n;
    for v in 0..n {
        let nbrs: Vec<usize> = (0..n).filter(|&u| g.adj[v][u]).collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if g.adj[u][w] {
                    continue;
                }
                // Shortest u-w path avoiding v and v's other neighbors: its
                // interior sees neither v nor any chord shortcut, so closing
                // it up through v gives a chordless cycle.
                let mut banned = vec![false; n];
                banned[v] = true;
                for &x in &nbrs {
                    if x != u && x != w {
                        banned[x] = true;
                    }
                }
                if let Some(path) = shortest_path(&g, &banned, u, w) {
                    let gens = sys.generators();
                    let mut cycle = vec![gens[map[v]].clone()];
                    cycle.extend(path.into_iter().map(|x| gens[map[x]].clone()));
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &LocalGraph, banned: &[bool], from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n];
    let mut queue = alloc::collections::VecDeque::from([from]);
    prev[from] = from;
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for v in 0..g.n {
            if g.adj[u][v] && !banned[v] && prev[v] == usize::MAX {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    None
}

/// Checks, on one system, that chordality coincides with the two
/// completeness conditions it is equivalent to: every vertex label of the
/// decomposition is complete, and every relative minimal separator is
/// complete.
pub fn check_chordal_equivalence(sys: &CoxeterSystem) -> Result<VerificationReport, Error> {
    let chordal = is_chordal(sys);
    let cycle = chordless_cycle(sys);
    let mut report = VerificationReport::new();

    report.push(
        "cycle-witness",
        chordal == cycle.is_none(),
        cycle.as_ref().map(|c| format!("cycle {}", join_ids(c))),
    );

    let gog = crate::jsj::decompose(sys)?;
    let incomplete_vertex = gog
        .vertex_labels()
        .iter()
        .find(|l| !sys.is_complete(l).expect("labels come from the system"));
    report.push(
        "vertex-labels-complete",
        chordal == incomplete_vertex.is_none(),
        incomplete_vertex.map(|l| format!("incomplete vertex label {l}")),
    );

    let incomplete_cut = relative_minimal_separators(sys)
        .into_iter()
        .find(|s| !sys.is_complete(s).expect("cuts come from the system"));
    report.push(
        "cut-labels-complete",
        chordal == incomplete_cut.is_none(),
        incomplete_cut.map(|s| format!("incomplete separator {s}")),
    );

    Ok(report)
}

fn join_ids(ids: &[GeneratorId]) -> String {
    let mut out = String::new();
    for (i, id) in ids.iter().enumerate() {
        if i > 0 {
            out.push('-');
        }
        out.push_str(id.as_str());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::OrderLabel;

    fn gid(s: &str) -> GeneratorId {
        GeneratorId::new(s).unwrap()
    }

    fn sys_from(names: &[&str], edges: &[(&str, &str, u32)]) -> CoxeterSystem {
        CoxeterSystem::new(
            names.iter().map(|n| gid(n)).collect(),
            edges
                .iter()
                .map(|&(s, t, m)| (gid(s), gid(t), OrderLabel::Finite(m)))
                .collect::<Vec<_>>(),
        )
        .unwrap()
    }

    /// Every consecutive pair adjacent, no other pair adjacent, length >= 4.
    fn assert_valid_witness(sys: &CoxeterSystem, cycle: &[GeneratorId]) {
        assert!(cycle.len() >= 4);
        let k = cycle.len();
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                let adjacent =
                    sys.order(&cycle[i], &cycle[j]).unwrap().is_finite() && cycle[i] != cycle[j];
                assert_eq!(adjacent, consecutive, "pair {} {}", cycle[i], cycle[j]);
            }
        }
    }

    #[test]
    fn chordal_diagrams() {
        let book = sys_from(
            &["a", "b", "c", "d", "e"],
            &[
                ("a", "b", 3),
                ("b", "c", 3),
                ("b", "d", 3),
                ("b", "e", 3),
                ("c", "e", 3),
                ("d", "e", 3),
            ],
        );
        assert!(is_chordal(&book));
        assert!(chordless_cycle(&book).is_none());
        let chain = sys_from(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 4)]);
        assert!(is_chordal(&chain));
        let edgeless = sys_from(&["x", "y", "z"], &[]);
        assert!(is_chordal(&edgeless));
        let empty = CoxeterSystem::new(vec![gid("a")], Vec::new()).unwrap();
        assert!(is_chordal(&empty));
    }

    #[test]
    fn square_witness() {
        let square = sys_from(
            &["a", "b", "c", "d"],
            &[("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("a", "d", 3)],
        );
        assert!(!is_chordal(&square));
        let cycle = chordless_cycle(&square).unwrap();
        assert_eq!(cycle.len(), 4);
        assert_valid_witness(&square, &cycle);
    }

    #[test]
    fn pentagon_witness() {
        let pent = sys_from(
            &["a", "b", "c", "d", "e"],
            &[
                ("a", "b", 3),
                ("b", "c", 3),
                ("c", "d", 3),
                ("d", "e", 3),
                ("a", "e", 3),
            ],
        );
        assert!(!is_chordal(&pent));
        let cycle = chordless_cycle(&pent).unwrap();
        assert_eq!(cycle.len(), 5);
        assert_valid_witness(&pent, &cycle);
    }

    #[test]
    fn chorded_hexagon_witness() {
        // One long chord splits the hexagon into two squares; the witness
        // must be one of those, not the outer cycle.
        let hexa = sys_from(
            &["a", "b", "c", "d", "e", "f"],
            &[
                ("a", "b", 3),
                ("b", "c", 3),
                ("c", "d", 3),
                ("d", "e", 3),
                ("e", "f", 3),
                ("a", "f", 3),
                ("a", "d", 3),
            ],
        );
        assert!(!is_chordal(&hexa));
        let cycle = chordless_cycle(&hexa).unwrap();
        assert_eq!(cycle.len(), 4);
        assert_valid_witness(&hexa, &cycle);
    }
}
