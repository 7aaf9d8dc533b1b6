//! Decomposing a system into a tree of generator subsets.
//!
//! The decomposition splits the generator set along complete minimal
//! separators until no complete subset separates any piece. The result is a
//! tree whose vertex labels are exactly the maximal subsets not separated
//! by a complete subset and whose edge labels are exactly the complete
//! relative minimal separators, independent of the splitting order, which
//! only affects the tree shape. Different shapes over the same system are
//! connected by slide moves; [`jsj_orbit`] closes a tree under them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::mcs::{mcs_m, LocalGraph};
use crate::report::VerificationReport;
use crate::separators::{
    self, complete_relative_minimal_separators, least_minimal_complete_separator,
};
use crate::system::{CoxeterSystem, GeneratorSubset};
use crate::Error;

/// Cap on the number of trees [`jsj_orbit`] will collect before giving up.
pub const DEFAULT_TREE_BUDGET: usize = 10_000;

/// A graph whose vertices and edges carry generator subsets of an ambient
/// system. [`decompose`] always produces a tree; arbitrary parts can be
/// assembled with [`GraphOfGroups::from_parts`] and judged by
/// [`GraphOfGroups::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphOfGroups {
    ambient: CoxeterSystem,
    vertices: Vec<GeneratorSubset>,
    edges: Vec<(usize, usize, GeneratorSubset)>,
}

impl GraphOfGroups {
    /// Assembles a graph of groups from raw parts, checking only that edge
    /// endpoints are in bounds and all labels use known generators.
    /// Structural soundness is [`GraphOfGroups::validate`]'s business.
    pub fn from_parts(
        ambient: CoxeterSystem,
        vertices: Vec<GeneratorSubset>,
        edges: Vec<(usize, usize, GeneratorSubset)>,
    ) -> Result<Self, Error> {
        for label in vertices.iter().chain(edges.iter().map(|(_, _, l)| l)) {
            ambient.indices_of(label)?;
        }
        for &(u, v, _) in &edges {
            let bad = if u >= vertices.len() { Some(u) } else { None }.or(if v >= vertices.len() {
                Some(v)
            } else {
                None
            });
            if let Some(i) = bad {
                return Err(Error::BadVertexIndex(i));
            }
        }
        Ok(GraphOfGroups {
            ambient,
            vertices,
            edges,
        })
    }

    pub fn ambient(&self) -> &CoxeterSystem {
        &self.ambient
    }

    pub fn vertex_labels(&self) -> &[GeneratorSubset] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, GeneratorSubset)] {
        &self.edges
    }

    pub fn edge_labels(&self) -> Vec<GeneratorSubset> {
        self.edges.iter().map(|(_, _, l)| l.clone()).collect()
    }

    /// Is the underlying graph a tree (connected, one vertex more than
    /// edges)?
    fn is_tree(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 || self.edges.len() != n - 1 {
            return false;
        }
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b, _) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == u && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// A string equal across all relabelings of the same tree: the minimal
    /// rooted encoding over all root choices, children ordered by edge
    /// label, then by subtree encoding. Non-trees get a raw dump that is
    /// deterministic but only structural for trees.
    pub fn canonical_key(&self) -> String {
        if !self.is_tree() {
            let mut edges: Vec<String> = self
                .edges
                .iter()
                .map(|&(u, v, ref l)| {
                    let (a, b) = if u <= v { (u, v) } else { (v, u) };
                    format!("{a}-{b}:{l}")
                })
                .collect();
            edges.sort();
            return format!(
                "nontree;{:?};{}",
                self.vertices
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>(),
                edges.join(",")
            );
        }
        let n = self.vertices.len();
        let mut adj: Vec<Vec<(usize, &GeneratorSubset)>> = alloc::vec![Vec::new(); n];
        for &(u, v, ref l) in &self.edges {
            adj[u].push((v, l));
            adj[v].push((u, l));
        }
        (0..n)
            .map(|root| self.encode(root, usize::MAX, &adj))
            .min()
            .expect("trees are nonempty")
    }

    fn encode(&self, v: usize, parent: usize, adj: &[Vec<(usize, &GeneratorSubset)>]) -> String {
        let mut parts: Vec<String> = adj[v]
            .iter()
            .filter(|&&(u, _)| u != parent)
            .map(|&(u, l)| format!("[{l}]{}", self.encode(u, v, adj)))
            .collect();
        parts.sort();
        format!("({}{})", self.vertices[v], parts.concat())
    }

    /// Runs the full battery of structural checks against the ambient
    /// system: tree shape, amalgam structure (labels inside endpoints,
    /// cover, infinite orders across the tree), reducedness, unseparated
    /// vertex labels, complete edge labels, agreement of both label
    /// families with the canonical ones, and edge labels realizing the
    /// intersections of their endpoints.
    pub fn validate(&self, sys: &CoxeterSystem) -> Result<VerificationReport, Error> {
        if &self.ambient != sys {
            return Err(Error::AmbientMismatch);
        }
        let mut report = VerificationReport::new();

        report.push("tree", self.is_tree(), None);

        let mut amalgam_witness: Option<String> = None;
        for &(u, v, ref l) in &self.edges {
            if !(l.is_subset_of(&self.vertices[u]) && l.is_subset_of(&self.vertices[v])) {
                amalgam_witness = Some(format!(
                    "edge label {l} outside endpoint {} or {}",
                    self.vertices[u], self.vertices[v]
                ));
            }
        }
        let mut cover = GeneratorSubset::empty();
        for label in &self.vertices {
            cover = cover.union(label);
        }
        if cover != sys.full_set() {
            amalgam_witness = Some(format!("vertex labels cover only {cover}"));
        }
        // Pairs never sharing a vertex label must have infinite order.
        'pairs: for s in sys.generators() {
            for t in sys.generators() {
                if s < t
                    && sys.order(s, t)?.is_finite()
                    && !self.vertices.iter().any(|r| r.contains(s) && r.contains(t))
                {
                    amalgam_witness = Some(format!("finite pair {s},{t} split across the tree"));
                    break 'pairs;
                }
            }
        }
        report.push("amalgam", amalgam_witness.is_none(), amalgam_witness);

        let nonreduced = self
            .edges
            .iter()
            .find(|&&(u, v, ref l)| l == &self.vertices[u] || l == &self.vertices[v]);
        report.push(
            "reduced",
            nonreduced.is_none(),
            nonreduced.map(|&(u, v, ref l)| format!("edge {u}-{v} label {l} equals an endpoint")),
        );

        let mut separated: Option<String> = None;
        for label in &self.vertices {
            let sub = sys.induced_subsystem(label)?;
            if let Some(cut) = least_minimal_complete_separator(&sub)? {
                separated = Some(format!("vertex label {label} separated by {cut}"));
            }
        }
        report.push("vertex-labels-unseparated", separated.is_none(), separated);

        let incomplete = self
            .edges
            .iter()
            .map(|(_, _, l)| l)
            .find(|l| !sys.is_complete(l).unwrap_or(false));
        report.push(
            "edge-labels-complete",
            incomplete.is_none(),
            incomplete.map(|l| format!("incomplete edge label {l}")),
        );

        let expected_vertices = vertex_sets(sys)?;
        let got_vertices: BTreeSet<GeneratorSubset> = self.vertices.iter().cloned().collect();
        let expected_edges = complete_relative_minimal_separators(sys);
        let got_edges: BTreeSet<GeneratorSubset> =
            self.edges.iter().map(|(_, _, l)| l.clone()).collect();
        let families_ok = got_vertices == expected_vertices && got_edges == expected_edges;
        report.push(
            "families",
            families_ok,
            (!families_ok).then(|| {
                format!(
                    "vertex labels {:?} vs {:?}; edge labels {:?} vs {:?}",
                    got_vertices
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>(),
                    expected_vertices
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>(),
                    got_edges
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>(),
                    expected_edges
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>(),
                )
            }),
        );

        let bad_meet = self
            .edges
            .iter()
            .find(|&&(u, v, ref l)| &self.vertices[u].intersection(&self.vertices[v]) != l);
        report.push(
            "edge-intersections",
            bad_meet.is_none(),
            bad_meet.map(|&(u, v, ref l)| {
                format!(
                    "{} ∩ {} = {} but edge label is {l}",
                    self.vertices[u],
                    self.vertices[v],
                    self.vertices[u].intersection(&self.vertices[v])
                )
            }),
        );

        Ok(report)
    }
}

/// Splits along the least complete minimal separator, recursing on both
/// sides, until every piece is unseparated by complete subsets. The two
/// subtrees are joined by an edge between the least vertex label on each
/// side containing the separator.
pub fn decompose(sys: &CoxeterSystem) -> Result<GraphOfGroups, Error> {
    decompose_by(sys, &least_minimal_complete_separator)
}

/// Same vertex and edge label multisets as [`decompose`], found via
/// maximum-cardinality-search: the higher neighborhoods of a minimal
/// triangulation contain every complete minimal separator, so scanning them
/// replaces the exhaustive search. Tree shape may differ from
/// [`decompose`]'s by slide moves.
pub fn decompose_fast(sys: &CoxeterSystem) -> Result<GraphOfGroups, Error> {
    decompose_by(sys, &fast_separator)
}

fn decompose_by(
    sys: &CoxeterSystem,
    find: &dyn Fn(&CoxeterSystem) -> Result<Option<GeneratorSubset>, Error>,
) -> Result<GraphOfGroups, Error> {
    if sys.rank() == 0 {
        return Err(Error::EmptySystem);
    }
    let (vertices, edges) = split(sys, find)?;
    Ok(GraphOfGroups {
        ambient: sys.clone(),
        vertices,
        edges,
    })
}

type Parts = (Vec<GeneratorSubset>, Vec<(usize, usize, GeneratorSubset)>);

fn split(
    piece: &CoxeterSystem,
    find: &dyn Fn(&CoxeterSystem) -> Result<Option<GeneratorSubset>, Error>,
) -> Result<Parts, Error> {
    let Some(cut) = find(piece)? else {
        return Ok((alloc::vec![piece.full_set()], Vec::new()));
    };
    let sep = separators::make_separation(piece, &cut)?;
    let (lv, le) = split(&piece.induced_subsystem(sep.left())?, find)?;
    let (rv, mut re) = split(&piece.induced_subsystem(sep.right())?, find)?;
    let shift = lv.len();
    for e in &mut re {
        e.0 += shift;
        e.1 += shift;
    }
    let li = attach_index(&lv, &cut);
    let ri = attach_index(&rv, &cut) + shift;
    let mut vertices = lv;
    vertices.extend(rv);
    let mut edges = le;
    edges.extend(re);
    edges.push((li, ri, cut));
    Ok((vertices, edges))
}

/// Index of the least vertex label containing the cut. One always exists:
/// a complete subset is never split across a separation, so it survives
/// into some leaf of either side.
fn attach_index(labels: &[GeneratorSubset], cut: &GeneratorSubset) -> usize {
    labels
        .iter()
        .enumerate()
        .filter(|(_, l)| cut.is_subset_of(l))
        .min_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(i, _)| i)
        .expect("every complete cut lies in some vertex label")
}

/// First complete minimal separator among the higher neighborhoods of an
/// MCS-M minimal triangulation, in elimination order. Every complete
/// minimal separator of the diagram shows up as such a neighborhood, so
/// finding none means no complete subset separates.
fn fast_separator(piece: &CoxeterSystem) -> Result<Option<GeneratorSubset>, Error> {
    let (g, map) = LocalGraph::from_system(piece, &piece.full_set());
    let (order, fill) = mcs_m(&g);
    let mut pos = alloc::vec![0usize; g.n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    for &x in &order {
        let madj = (0..g.n).filter(|&y| fill.adj[x][y] && pos[y] > pos[x]);
        let cand = piece.subset_from_indices(madj.map(|y| map[y]));
        if piece.is_complete(&cand)? && separators::is_minimal_separator(piece, &cand)? {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// The family of maximal subsets not separated by any complete subset:
/// the vertex labels of any decomposition.
pub fn vertex_sets(sys: &CoxeterSystem) -> Result<BTreeSet<GeneratorSubset>, Error> {
    if sys.rank() == 0 {
        return Ok(BTreeSet::new());
    }
    Ok(decompose(sys)?.vertices.into_iter().collect())
}

/// All trees one slide away: an edge whose label is contained in an
/// adjacent edge's label may be reattached across it. Results are
/// deduplicated and ordered by canonical key.
pub fn slide_moves(gog: &GraphOfGroups) -> Vec<GraphOfGroups> {
    let mut out: BTreeMap<String, GraphOfGroups> = BTreeMap::new();
    for i in 0..gog.edges.len() {
        for j in 0..gog.edges.len() {
            if i == j {
                continue;
            }
            let (a1, b1, ref l1) = gog.edges[i];
            let (a2, b2, ref l2) = gog.edges[j];
            if !l1.is_subset_of(l2) {
                continue;
            }
            for (u, v) in [(a1, b1), (b1, a1)] {
                for (v2, w) in [(a2, b2), (b2, a2)] {
                    if v != v2 {
                        continue;
                    }
                    let mut slid = gog.clone();
                    slid.edges[i] = (u, w, l1.clone());
                    out.entry(slid.canonical_key()).or_insert(slid);
                }
            }
        }
    }
    out.into_values().collect()
}

/// Closure of the decomposition under slide moves, capped at
/// [`DEFAULT_TREE_BUDGET`] trees.
pub fn jsj_orbit(sys: &CoxeterSystem) -> Result<Vec<GraphOfGroups>, Error> {
    jsj_orbit_with_budget(sys, DEFAULT_TREE_BUDGET)
}

/// Closure of the decomposition under slide moves; errs out if it would
/// exceed `budget` distinct trees.
pub fn jsj_orbit_with_budget(
    sys: &CoxeterSystem,
    budget: usize,
) -> Result<Vec<GraphOfGroups>, Error> {
    let start = decompose(sys)?;
    let mut found: BTreeMap<String, GraphOfGroups> = BTreeMap::new();
    if budget == 0 {
        return Err(Error::OrbitBudget { budget });
    }
    let mut queue = alloc::vec![start.canonical_key()];
    found.insert(start.canonical_key(), start);
    while let Some(key) = queue.pop() {
        let tree = found[&key].clone();
        for next in slide_moves(&tree) {
            let k = next.canonical_key();
            if !found.contains_key(&k) {
                if found.len() == budget {
                    return Err(Error::OrbitBudget { budget });
                }
                queue.push(k.clone());
                found.insert(k, next);
            }
        }
    }
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::{GeneratorId, OrderLabel};

    fn gid(s: &str) -> GeneratorId {
        GeneratorId::new(s).unwrap()
    }

    fn gs(names: &[&str]) -> GeneratorSubset {
        names.iter().map(|n| gid(n)).collect()
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

    fn book() -> CoxeterSystem {
        sys_from(
            &["a", "b", "c", "d", "e"],
            &[
                ("a", "b", 3),
                ("b", "c", 3),
                ("b", "d", 3),
                ("b", "e", 3),
                ("c", "e", 3),
                ("d", "e", 3),
            ],
        )
    }

    fn chained_triangles() -> CoxeterSystem {
        sys_from(
            &["a", "b", "c", "d", "e"],
            &[
                ("a", "b", 3),
                ("b", "c", 3),
                ("b", "d", 2),
                ("c", "d", 3),
                ("c", "e", 2),
                ("d", "e", 2),
            ],
        )
    }

    fn star3() -> CoxeterSystem {
        sys_from(&["x", "y", "z"], &[])
    }

    #[test]
    fn book_decomposition() {
        let gog = decompose(&book()).unwrap();
        assert_eq!(
            gog.vertex_labels(),
            &[gs(&["a", "b"]), gs(&["b", "c", "e"]), gs(&["b", "d", "e"])]
        );
        assert_eq!(gog.edges(), &[(1, 2, gs(&["b", "e"])), (0, 1, gs(&["b"]))]);
    }

    #[test]
    fn chained_triangles_decomposition() {
        let gog = decompose(&chained_triangles()).unwrap();
        assert_eq!(
            gog.vertex_labels(),
            &[gs(&["a", "b"]), gs(&["b", "c", "d"]), gs(&["c", "d", "e"])]
        );
        assert_eq!(gog.edges(), &[(1, 2, gs(&["c", "d"])), (0, 1, gs(&["b"]))]);
    }

    #[test]
    fn degenerate_decompositions() {
        let complete = sys_from(
            &["a", "b", "c"],
            &[("a", "b", 3), ("b", "c", 4), ("a", "c", 2)],
        );
        let gog = decompose(&complete).unwrap();
        assert_eq!(gog.vertex_labels(), &[gs(&["a", "b", "c"])]);
        assert!(gog.edges().is_empty());

        let single = sys_from(&["s"], &[]);
        let gog = decompose(&single).unwrap();
        assert_eq!(gog.vertex_labels(), &[gs(&["s"])]);

        let star = decompose(&star3()).unwrap();
        assert_eq!(star.vertex_labels(), &[gs(&["x"]), gs(&["y"]), gs(&["z"])]);
        assert_eq!(star.edges(), &[(1, 2, gs(&[])), (0, 1, gs(&[]))]);

        let empty = CoxeterSystem::new(Vec::new(), Vec::new()).unwrap();
        assert!(matches!(decompose(&empty), Err(Error::EmptySystem)));
        assert!(matches!(decompose_fast(&empty), Err(Error::EmptySystem)));
    }

    fn label_multisets(gog: &GraphOfGroups) -> (Vec<GeneratorSubset>, Vec<GeneratorSubset>) {
        let mut v = gog.vertex_labels().to_vec();
        let mut e = gog.edge_labels();
        v.sort();
        e.sort();
        (v, e)
    }

    #[test]
    fn fast_agrees_on_label_multisets() {
        for sys in [
            book(),
            chained_triangles(),
            star3(),
            sys_from(&["a", "b", "c"], &[("a", "b", 3), ("b", "c", 3)]),
        ] {
            let slow = decompose(&sys).unwrap();
            let fast = decompose_fast(&sys).unwrap();
            assert_eq!(
                label_multisets(&slow),
                label_multisets(&fast),
                "system {sys:?}"
            );
            assert!(fast.validate(&sys).unwrap().overall());
        }
    }

    #[test]
    fn vertex_families() {
        assert_eq!(
            vertex_sets(&book()).unwrap(),
            BTreeSet::from([gs(&["a", "b"]), gs(&["b", "c", "e"]), gs(&["b", "d", "e"])])
        );
        assert_eq!(
            vertex_sets(&chained_triangles()).unwrap(),
            BTreeSet::from([gs(&["a", "b"]), gs(&["b", "c", "d"]), gs(&["c", "d", "e"])])
        );
        let empty = CoxeterSystem::new(Vec::new(), Vec::new()).unwrap();
        assert!(vertex_sets(&empty).unwrap().is_empty());
    }

    #[test]
    fn validation_passes_for_decompositions() {
        for sys in [book(), chained_triangles(), star3()] {
            let gog = decompose(&sys).unwrap();
            let report = gog.validate(&sys).unwrap();
            assert!(
                report.overall(),
                "failures: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn validation_accepts_the_other_book_tree() {
        // Same labels, pendant edge attached at the other triangle.
        let sys = book();
        let gog = GraphOfGroups::from_parts(
            sys.clone(),
            alloc::vec![gs(&["a", "b"]), gs(&["b", "c", "e"]), gs(&["b", "d", "e"])],
            alloc::vec![(1, 2, gs(&["b", "e"])), (0, 2, gs(&["b"]))],
        )
        .unwrap();
        assert!(gog.validate(&sys).unwrap().overall());
    }

    #[test]
    fn validation_rejects_broken_trees() {
        let sys = book();
        // A cycle.
        let cyclic = GraphOfGroups::from_parts(
            sys.clone(),
            alloc::vec![gs(&["a", "b"]), gs(&["b", "c", "e"]), gs(&["b", "d", "e"])],
            alloc::vec![
                (0, 1, gs(&["b"])),
                (1, 2, gs(&["b", "e"])),
                (2, 0, gs(&["b"])),
            ],
        )
        .unwrap();
        let report = cyclic.validate(&sys).unwrap();
        assert!(!report.overall());
        assert!(report.failures().any(|c| c.name == "tree"));

        // A non-reduced edge: label equals one endpoint.
        let sys2 = sys_from(&["a", "b", "c"], &[("a", "b", 3)]);
        let nonreduced = GraphOfGroups::from_parts(
            sys2.clone(),
            alloc::vec![gs(&["a", "b"]), gs(&["b"]), gs(&["c"])],
            alloc::vec![(0, 1, gs(&["b"])), (1, 2, gs(&[]))],
        )
        .unwrap();
        let report = nonreduced.validate(&sys2).unwrap();
        assert!(!report.overall());
        assert!(report.failures().any(|c| c.name == "reduced"));

        // Mismatched ambient system.
        assert!(matches!(
            decompose(&book()).unwrap().validate(&chained_triangles()),
            Err(Error::AmbientMismatch)
        ));

        // Out-of-bounds edge index.
        assert!(matches!(
            GraphOfGroups::from_parts(
                sys,
                alloc::vec![gs(&["a", "b"])],
                alloc::vec![(0, 3, gs(&[]))]
            ),
            Err(Error::BadVertexIndex(3))
        ));
    }

    #[test]
    fn slides_on_the_book_tree() {
        let sys = book();
        let gog = decompose(&sys).unwrap();
        let moves = slide_moves(&gog);
        assert_eq!(moves.len(), 1);
        let other = GraphOfGroups::from_parts(
            sys.clone(),
            alloc::vec![gs(&["a", "b"]), gs(&["b", "c", "e"]), gs(&["b", "d", "e"])],
            alloc::vec![(1, 2, gs(&["b", "e"])), (0, 2, gs(&["b"]))],
        )
        .unwrap();
        assert_eq!(moves[0].canonical_key(), other.canonical_key());
        assert!(moves[0].validate(&sys).unwrap().overall());

        // No containment between the two cut labels: nothing slides.
        assert!(slide_moves(&decompose(&chained_triangles()).unwrap()).is_empty());
    }

    #[test]
    fn canonical_key_ignores_presentation_order() {
        let sys = book();
        let a = GraphOfGroups::from_parts(
            sys.clone(),
            alloc::vec![gs(&["a", "b"]), gs(&["b", "c", "e"]), gs(&["b", "d", "e"])],
            alloc::vec![(1, 2, gs(&["b", "e"])), (0, 1, gs(&["b"]))],
        )
        .unwrap();
        let b = GraphOfGroups::from_parts(
            sys.clone(),
            alloc::vec![gs(&["b", "d", "e"]), gs(&["a", "b"]), gs(&["b", "c", "e"])],
            alloc::vec![(1, 2, gs(&["b"])), (2, 0, gs(&["b", "e"]))],
        )
        .unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
        let slid = GraphOfGroups::from_parts(
            sys,
            alloc::vec![gs(&["a", "b"]), gs(&["b", "c", "e"]), gs(&["b", "d", "e"])],
            alloc::vec![(1, 2, gs(&["b", "e"])), (0, 2, gs(&["b"]))],
        )
        .unwrap();
        assert_ne!(a.canonical_key(), slid.canonical_key());
    }

    #[test]
    fn orbits() {
        assert_eq!(jsj_orbit(&book()).unwrap().len(), 2);
        assert_eq!(jsj_orbit(&chained_triangles()).unwrap().len(), 1);
        assert_eq!(jsj_orbit(&star3()).unwrap().len(), 3);
        let complete = sys_from(&["a", "b"], &[("a", "b", 5)]);
        assert_eq!(jsj_orbit(&complete).unwrap().len(), 1);
        assert!(matches!(
            jsj_orbit_with_budget(&book(), 1),
            Err(Error::OrbitBudget { budget: 1 })
        ));
    }

    #[test]
    fn orbit_members_all_validate() {
        for sys in [book(), star3()] {
            for tree in jsj_orbit(&sys).unwrap() {
                assert!(tree.validate(&sys).unwrap().overall());
            }
        }
    }
}
