//! Independent brute-force ground truth.
//!
//! Everything here recomputes answers the cheap way or the slow way so the
//! main algorithms can be cross-checked: exhaustive subset enumeration for
//! the vertex-set and separator families, and Todd-Coxeter coset
//! enumeration for small finite visual subgroups. Nothing in this module
//! calls into the code paths it is used to verify.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::system::{CoxeterSystem, GeneratorId, GeneratorSubset, OrderLabel};
use crate::Error;

/// Largest rank the exhaustive enumerations accept unless overridden.
pub const DEFAULT_RANK_BOUND: usize = 12;

/// Default ceiling on the group order [`coset_enumerate`] will certify.
pub const DEFAULT_ORDER_BOUND: usize = 10_000;

fn adjacency_masks(sys: &CoxeterSystem) -> Vec<u64> {
    let n = sys.rank();
    let mut adj = vec![0u64; n];
    for (i, row) in adj.iter_mut().enumerate() {
        for j in 0..n {
            if i != j && sys.adjacent_ix(i, j) {
                *row |= 1 << j;
            }
        }
    }
    adj
}

/// True when the vertices of `mask` induce one connected piece; the empty
/// mask and singletons count as connected.
fn connected_within(adj: &[u64], mask: u64) -> bool {
    if mask == 0 {
        return true;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == mask
}

fn is_complete_mask(adj: &[u64], mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & mask != mask & !(1 << v) {
            return false;
        }
    }
    true
}

fn check_rank(sys: &CoxeterSystem, rank_bound: usize) -> Result<usize, Error> {
    let n = sys.rank();
    if n > rank_bound || n > 63 {
        return Err(Error::RankBound {
            rank: n,
            bound: rank_bound.min(63),
        });
    }
    Ok(n)
}

/// Exhaustively recomputes the vertex-set family: every subset `R` is kept
/// when no complete `C ⊆ R` disconnects the induced diagram on `R − C`,
/// and the inclusion-maximal survivors are returned.
pub fn brute_vertex_sets(
    sys: &CoxeterSystem,
    rank_bound: usize,
) -> Result<BTreeSet<GeneratorSubset>, Error> {
    let n = check_rank(sys, rank_bound)?;
    if n == 0 {
        return Ok(BTreeSet::new());
    }
    let adj = adjacency_masks(sys);
    let mut unseparated: Vec<u64> = Vec::new();
    for r in 1..(1u64 << n) {
        let mut separated = false;
        let mut c = r;
        loop {
            let rest = r & !c;
            if rest != 0 && is_complete_mask(&adj, c) && !connected_within(&adj, rest) {
                separated = true;
                break;
            }
            if c == 0 {
                break;
            }
            c = (c - 1) & r;
        }
        if !separated {
            unseparated.push(r);
        }
    }
    unseparated.sort_by_key(|m| core::cmp::Reverse(m.count_ones()));
    let mut maximal: Vec<u64> = Vec::new();
    for m in unseparated {
        if !maximal.iter().any(|&big| big & m == m) {
            maximal.push(m);
        }
    }
    Ok(maximal
        .into_iter()
        .map(|m| sys.subset_from_indices((0..n).filter(|&i| m >> i & 1 == 1)))
        .collect())
}

/// Exhaustively recomputes the relative minimal separators: for every
/// infinite pair, every subset of the remaining generators that separates
/// the pair while no proper subset of it does.
pub fn brute_relative_minimal_separators(
    sys: &CoxeterSystem,
    rank_bound: usize,
) -> Result<BTreeSet<GeneratorSubset>, Error> {
    let n = check_rank(sys, rank_bound)?;
    let adj = adjacency_masks(sys);
    let separates = |cut: u64, ia: usize, ib: usize| -> bool {
        let free = !cut;
        let mut seen = 1u64 << ia;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & free & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen >> ib & 1 == 0
    };
    let mut family = BTreeSet::new();
    for (ia, &neighbors) in adj.iter().enumerate() {
        for ib in ia + 1..n {
            if neighbors >> ib & 1 == 1 {
                continue;
            }
            let others: Vec<usize> = (0..n).filter(|&v| v != ia && v != ib).collect();
            for choice in 0..(1u64 << others.len()) {
                let cut: u64 = others
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| choice >> p & 1 == 1)
                    .map(|(_, &v)| 1u64 << v)
                    .sum();
                if !separates(cut, ia, ib) {
                    continue;
                }
                let mut minimal = true;
                if cut != 0 {
                    let mut sub = (cut - 1) & cut;
                    loop {
                        if separates(sub, ia, ib) {
                            minimal = false;
                            break;
                        }
                        if sub == 0 {
                            break;
                        }
                        sub = (sub - 1) & cut;
                    }
                }
                if minimal {
                    family.insert(sys.subset_from_indices((0..n).filter(|&i| cut >> i & 1 == 1)));
                }
            }
        }
    }
    Ok(family)
}

/// The regular representation of a finite visual subgroup: each generator
/// acts on elements (numbered with the identity as 0) by right
/// multiplication, and each element carries its word length.
#[derive(Clone, Debug)]
pub struct FiniteGroupTable {
    gens: Vec<GeneratorId>,
    action: Vec<Vec<u32>>,
    lengths: Vec<u32>,
}

impl FiniteGroupTable {
    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn generators(&self) -> &[GeneratorId] {
        &self.gens
    }

    /// Right multiplication of element `x` by the `i`-th generator.
    pub fn act(&self, x: u32, i: usize) -> u32 {
        self.action[i][x as usize]
    }

    pub fn length(&self, x: u32) -> u32 {
        self.lengths[x as usize]
    }

    /// A reduced word for `x`, letters in product order, by length descent.
    fn word(&self, mut x: u32) -> Vec<usize> {
        let mut letters = Vec::with_capacity(self.lengths[x as usize] as usize);
        while x != 0 {
            let i = (0..self.gens.len())
                .find(|&i| self.lengths[self.act(x, i) as usize] < self.lengths[x as usize])
                .expect("BFS lengths admit a descent from every nonidentity element");
            letters.push(i);
            x = self.act(x, i);
        }
        letters.reverse();
        letters
    }

    /// The element reached from `x` by right-multiplying the word.
    fn apply(&self, x: u32, word: impl IntoIterator<Item = usize>) -> u32 {
        word.into_iter().fold(x, |y, i| self.act(y, i))
    }

    /// The element `g s_i g⁻¹` for `g` the element numbered `x`.
    fn conjugate_generator(&self, x: u32, i: usize) -> u32 {
        let w = self.word(x);
        let fwd = self.apply(0, w.iter().copied());
        let with_gen = self.act(fwd, i);
        self.apply(with_gen, w.iter().rev().copied())
    }
}

/// Working state of the enumeration: a partial multiplication table with a
/// union-find over coset numbers for coincidence handling. Entries are
/// symmetric (generators are involutions), and reads resolve through the
/// union-find.
struct CosetTables {
    cols: usize,
    row: Vec<Vec<Option<u32>>>,
    parent: Vec<u32>,
    live: usize,
    cap: usize,
}

impl CosetTables {
    fn new(cols: usize, cap: usize) -> Self {
        CosetTables {
            cols,
            row: Vec::new(),
            parent: Vec::new(),
            live: 0,
            cap,
        }
    }

    fn find(&mut self, mut c: u32) -> u32 {
        while self.parent[c as usize] != c {
            let up = self.parent[c as usize];
            self.parent[c as usize] = self.parent[up as usize];
            c = self.parent[c as usize];
        }
        c
    }

    fn define(&mut self) -> Result<u32, Error> {
        if self.row.len() >= self.cap {
            return Err(Error::EnumerationBound { cap: self.cap });
        }
        let c = self.row.len() as u32;
        self.row.push(vec![None; self.cols]);
        self.parent.push(c);
        self.live += 1;
        Ok(c)
    }

    /// Records `a·i = b` in both directions, merging cosets on conflict.
    fn join(&mut self, a: u32, i: usize, b: u32) {
        let a = self.find(a);
        let b = self.find(b);
        match self.row[a as usize][i] {
            Some(c) => {
                let c = self.find(c);
                if c != b {
                    self.coincide(c, b);
                }
            }
            None => {
                self.row[a as usize][i] = Some(b);
                match self.row[b as usize][i] {
                    Some(c) => {
                        let c = self.find(c);
                        if c != a {
                            self.coincide(c, a);
                        }
                    }
                    None => self.row[b as usize][i] = Some(a),
                }
            }
        }
    }

    /// Merges two cosets, transferring the dead row's entries and chasing
    /// any further coincidences that fall out. The smaller number survives.
    fn coincide(&mut self, p: u32, q: u32) {
        let mut stack = vec![(p, q)];
        while let Some((p, q)) = stack.pop() {
            let p = self.find(p);
            let q = self.find(q);
            if p == q {
                continue;
            }
            let (keep, kill) = if p < q { (p, q) } else { (q, p) };
            self.parent[kill as usize] = keep;
            self.live -= 1;
            for i in 0..self.cols {
                if let Some(d) = self.row[kill as usize][i].take() {
                    let d = self.find(d);
                    match self.row[keep as usize][i] {
                        Some(c) => stack.push((c, d)),
                        None => {
                            self.row[keep as usize][i] = Some(d);
                            match self.row[d as usize][i] {
                                Some(c) => {
                                    let c = self.find(c);
                                    if c != keep {
                                        stack.push((c, keep));
                                    }
                                }
                                None => self.row[d as usize][i] = Some(keep),
                            }
                        }
                    }
                }
            }
        }
    }

    /// Pushes the relator around `start`, defining cosets through gaps and
    /// closing the cycle on the last letter.
    fn trace(&mut self, start: u32, word: &[usize]) -> Result<(), Error> {
        let mut x = self.find(start);
        for (pos, &i) in word.iter().enumerate() {
            let last = pos + 1 == word.len();
            match self.row[x as usize][i] {
                Some(y) => {
                    let y = self.find(y);
                    if last {
                        let s = self.find(start);
                        if y != s {
                            self.coincide(y, s);
                        }
                    } else {
                        x = y;
                    }
                }
                None => {
                    if last {
                        let s = self.find(start);
                        self.join(x, i, s);
                    } else {
                        let y = self.define()?;
                        self.join(x, i, y);
                        x = y;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Todd-Coxeter enumeration of `⟨s0⟩` over the trivial subgroup, HLT
/// strategy. Succeeds exactly when the subgroup closes with order at most
/// `order_bound`; running out of room is inconclusive, not a proof of
/// infiniteness. The table is post-checked against the presentation before
/// being returned.
pub fn coset_enumerate(
    sys: &CoxeterSystem,
    s0: &GeneratorSubset,
    order_bound: usize,
) -> Result<FiniteGroupTable, Error> {
    let idxs = sys.indices_of(s0)?;
    let gens: Vec<GeneratorId> = idxs.iter().map(|&i| sys.generators()[i].clone()).collect();
    let k = gens.len();
    let mut relators: Vec<Vec<usize>> = Vec::new();
    for p in 0..k {
        for q in p + 1..k {
            if let OrderLabel::Finite(m) = sys.order(&gens[p], &gens[q])? {
                let mut w = Vec::with_capacity(2 * m as usize);
                for _ in 0..m {
                    w.push(p);
                    w.push(q);
                }
                relators.push(w);
            }
        }
    }
    let cap = order_bound.saturating_mul(16).saturating_add(1024);
    let mut t = CosetTables::new(k, cap);
    t.define()?;
    let mut c: u32 = 0;
    while (c as usize) < t.row.len() {
        if t.find(c) != c {
            c += 1;
            continue;
        }
        for r in &relators {
            if t.find(c) != c {
                break;
            }
            t.trace(c, r)?;
        }
        if t.find(c) == c {
            for i in 0..k {
                if t.row[c as usize][i].is_none() {
                    let d = t.define()?;
                    t.join(c, i, d);
                    if t.find(c) != c {
                        break;
                    }
                }
            }
        }
        c += 1;
    }
    if t.live > order_bound {
        return Err(Error::EnumerationBound { cap: order_bound });
    }

    let total = t.row.len() as u32;
    let mut renumber = vec![u32::MAX; total as usize];
    let mut reps = Vec::with_capacity(t.live);
    for c in 0..total {
        if t.find(c) == c {
            renumber[c as usize] = reps.len() as u32;
            reps.push(c);
        }
    }
    let order = reps.len();
    let mut action = vec![vec![0u32; order]; k];
    for (new_c, &rep) in reps.iter().enumerate() {
        for (i, col) in action.iter_mut().enumerate() {
            let d = t.row[rep as usize][i].ok_or_else(|| {
                Error::OracleInvariant("enumeration closed with an incomplete table".to_string())
            })?;
            col[new_c] = renumber[t.find(d) as usize];
        }
    }

    for (i, col) in action.iter().enumerate() {
        for x in 0..order as u32 {
            let y = col[x as usize];
            if y == x {
                return Err(Error::OracleInvariant(format_pair(
                    "generator acts with a fixed point",
                    &gens[i],
                )));
            }
            if col[y as usize] != x {
                return Err(Error::OracleInvariant(format_pair(
                    "generator action is not an involution",
                    &gens[i],
                )));
            }
        }
    }
    for r in &relators {
        for x in 0..order as u32 {
            let y = r.iter().fold(x, |y, &i| action[i][y as usize]);
            if y != x {
                return Err(Error::OracleInvariant(
                    "a defining relator acts nontrivially".to_string(),
                ));
            }
        }
    }

    let mut lengths = vec![u32::MAX; order];
    lengths[0] = 0;
    let mut queue = VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        for col in &action {
            let y = col[x as usize];
            if lengths[y as usize] == u32::MAX {
                lengths[y as usize] = lengths[x as usize] + 1;
                queue.push_back(y);
            }
        }
    }
    if lengths.contains(&u32::MAX) {
        return Err(Error::OracleInvariant(
            "the action is not transitive".to_string(),
        ));
    }
    Ok(FiniteGroupTable {
        gens,
        action,
        lengths,
    })
}

fn format_pair(msg: &str, g: &GeneratorId) -> String {
    let mut s = String::from(msg);
    s.push_str(": ");
    s.push_str(g.as_str());
    s
}

/// Reads the permutation `s ↦ w0 s w0⁻¹` of `s0` off the table, where `w0`
/// is the unique element of maximal length. Errors when the maximum is not
/// unique or a conjugate falls outside the generators, both of which mean
/// the table does not describe a finite visual subgroup on `s0`.
pub fn oracle_w0_sigma(
    table: &FiniteGroupTable,
    s0: &GeneratorSubset,
) -> Result<BTreeMap<GeneratorId, GeneratorId>, Error> {
    let table_gens: GeneratorSubset = table.gens.iter().cloned().collect();
    if &table_gens != s0 {
        return Err(Error::OracleInvariant(
            "table generators differ from the requested subset".to_string(),
        ));
    }
    let max = table.lengths.iter().copied().max().unwrap_or(0);
    let longest: Vec<u32> = (0..table.order() as u32)
        .filter(|&x| table.length(x) == max)
        .collect();
    let &[w0] = longest.as_slice() else {
        return Err(Error::NoUniqueLongest);
    };
    for i in 0..table.gens.len() {
        if table.length(table.act(w0, i)) >= max {
            return Err(Error::OracleInvariant(
                "the longest element admits a non-descent".to_string(),
            ));
        }
    }
    let mut sigma = BTreeMap::new();
    for (i, g) in table.gens.iter().enumerate() {
        let image = table.conjugate_generator(w0, i);
        let j = (0..table.gens.len())
            .find(|&j| table.act(0, j) == image)
            .ok_or_else(|| {
                Error::OracleInvariant(format_pair(
                    "longest-element conjugate of a generator is not a generator",
                    g,
                ))
            })?;
        sigma.insert(g.clone(), table.gens[j].clone());
    }
    Ok(sigma)
}

/// Whether some element of the group conjugates each generator to its
/// image under `sigma`; decided by trying every element.
pub fn realizes_automorphism(
    table: &FiniteGroupTable,
    sigma: &BTreeMap<GeneratorId, GeneratorId>,
) -> Result<bool, Error> {
    let position: BTreeMap<&GeneratorId, usize> =
        table.gens.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut target = vec![0u32; table.gens.len()];
    for (i, g) in table.gens.iter().enumerate() {
        let image = sigma.get(g).ok_or_else(|| {
            Error::OracleInvariant(format_pair("permutation misses a generator", g))
        })?;
        let j = *position.get(image).ok_or_else(|| {
            Error::OracleInvariant(format_pair("permutation leaves the generators", image))
        })?;
        target[i] = table.act(0, j);
    }
    for g in 0..table.order() as u32 {
        if (0..table.gens.len()).all(|i| table.conjugate_generator(g, i) == target[i]) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn families(sys: &CoxeterSystem) -> (BTreeSet<GeneratorSubset>, BTreeSet<GeneratorSubset>) {
        (
            brute_vertex_sets(sys, DEFAULT_RANK_BOUND).unwrap(),
            brute_relative_minimal_separators(sys, DEFAULT_RANK_BOUND).unwrap(),
        )
    }

    #[test]
    fn brute_families_on_known_diagrams() {
        let (vs, seps) = families(&book());
        assert_eq!(
            vs,
            BTreeSet::from([gs(&["a", "b"]), gs(&["b", "c", "e"]), gs(&["b", "d", "e"])])
        );
        assert_eq!(seps, BTreeSet::from([gs(&["b"]), gs(&["b", "e"])]));

        let (vs, seps) = families(&chained_triangles());
        assert_eq!(
            vs,
            BTreeSet::from([gs(&["a", "b"]), gs(&["b", "c", "d"]), gs(&["c", "d", "e"])])
        );
        assert_eq!(seps, BTreeSet::from([gs(&["b"]), gs(&["c", "d"])]));

        let complete = sys_from(
            &["x", "y", "z"],
            &[("x", "y", 3), ("x", "z", 3), ("y", "z", 3)],
        );
        let (vs, seps) = families(&complete);
        assert_eq!(vs, BTreeSet::from([gs(&["x", "y", "z"])]));
        assert!(seps.is_empty());

        let star = sys_from(&["x", "y", "z"], &[]);
        let (vs, seps) = families(&star);
        assert_eq!(vs, BTreeSet::from([gs(&["x"]), gs(&["y"]), gs(&["z"])]));
        assert_eq!(seps, BTreeSet::from([GeneratorSubset::empty()]));

        let square = sys_from(
            &["a", "b", "c", "d"],
            &[("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("a", "d", 3)],
        );
        let (vs, seps) = families(&square);
        assert_eq!(vs, BTreeSet::from([gs(&["a", "b", "c", "d"])]));
        assert_eq!(seps, BTreeSet::from([gs(&["a", "c"]), gs(&["b", "d"])]));

        let empty = CoxeterSystem::new(alloc::vec![], alloc::vec![]).unwrap();
        assert!(brute_vertex_sets(&empty, DEFAULT_RANK_BOUND)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn rank_bound_is_enforced() {
        let sys = chained_triangles();
        assert!(matches!(
            brute_vertex_sets(&sys, 4),
            Err(Error::RankBound { rank: 5, bound: 4 })
        ));
        assert!(matches!(
            brute_relative_minimal_separators(&sys, 4),
            Err(Error::RankBound { rank: 5, bound: 4 })
        ));
    }

    #[test]
    fn enumeration_orders() {
        let pair = |m| sys_from(&["s", "t"], &[("s", "t", m)]);
        for (m, order) in [(2, 4), (3, 6), (4, 8), (5, 10), (7, 14)] {
            let sys = pair(m);
            let table = coset_enumerate(&sys, &sys.full_set(), DEFAULT_ORDER_BOUND).unwrap();
            assert_eq!(table.order(), order, "m = {m}");
        }
        let single = sys_from(&["s"], &[]);
        assert_eq!(
            coset_enumerate(&single, &single.full_set(), 10)
                .unwrap()
                .order(),
            2
        );
        assert_eq!(
            coset_enumerate(&single, &GeneratorSubset::empty(), 10)
                .unwrap()
                .order(),
            1
        );

        let sys = chained_triangles();
        let a3 = coset_enumerate(&sys, &gs(&["b", "c", "d"]), DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(a3.order(), 24);
        assert_eq!(a3.lengths.iter().max(), Some(&6));

        let b3 = sys_from(
            &["s", "t", "u"],
            &[("s", "t", 4), ("t", "u", 3), ("s", "u", 2)],
        );
        let table = coset_enumerate(&b3, &b3.full_set(), DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(table.order(), 48);

        let h3 = sys_from(
            &["s", "t", "u"],
            &[("s", "t", 5), ("t", "u", 3), ("s", "u", 2)],
        );
        let table = coset_enumerate(&h3, &h3.full_set(), DEFAULT_ORDER_BOUND).unwrap();
        assert_eq!(table.order(), 120);
        assert_eq!(table.lengths.iter().max(), Some(&15));
    }

    #[test]
    fn enumeration_bounds_are_inconclusive_not_infinite() {
        // A genuinely infinite subgroup runs out of room.
        let free = sys_from(&["s", "t"], &[]);
        assert!(matches!(
            coset_enumerate(&free, &free.full_set(), 50),
            Err(Error::EnumerationBound { .. })
        ));
        // A finite group over the bound closes and is still refused.
        let sys = chained_triangles();
        assert!(matches!(
            coset_enumerate(&sys, &gs(&["b", "c", "d"]), 10),
            Err(Error::EnumerationBound { cap: 10 })
        ));
    }

    #[test]
    fn longest_element_conjugation() {
        let sys = chained_triangles();
        // Odd dihedral: swap.
        let table = coset_enumerate(&sys, &gs(&["a", "b"]), 100).unwrap();
        let sigma = oracle_w0_sigma(&table, &gs(&["a", "b"])).unwrap();
        assert_eq!(sigma[&gid("a")], gid("b"));
        // Commuting pair: identity.
        let table = coset_enumerate(&sys, &gs(&["b", "d"]), 100).unwrap();
        let sigma = oracle_w0_sigma(&table, &gs(&["b", "d"])).unwrap();
        assert_eq!(sigma[&gid("b")], gid("b"));
        assert_eq!(sigma[&gid("d")], gid("d"));
        // Rank-3 chain: end swap.
        let table = coset_enumerate(&sys, &gs(&["b", "c", "d"]), 100).unwrap();
        let sigma = oracle_w0_sigma(&table, &gs(&["b", "c", "d"])).unwrap();
        assert_eq!(sigma[&gid("b")], gid("d"));
        assert_eq!(sigma[&gid("c")], gid("c"));
        // Even dihedral: identity.
        let b2 = sys_from(&["s", "t"], &[("s", "t", 4)]);
        let table = coset_enumerate(&b2, &b2.full_set(), 100).unwrap();
        let sigma = oracle_w0_sigma(&table, &b2.full_set()).unwrap();
        assert_eq!(sigma[&gid("s")], gid("s"));

        assert!(matches!(
            oracle_w0_sigma(&table, &gs(&["s"])),
            Err(Error::OracleInvariant(_))
        ));
    }

    #[test]
    fn conjugation_realizability() {
        let a2 = sys_from(&["s", "t"], &[("s", "t", 3)]);
        let table = coset_enumerate(&a2, &a2.full_set(), 100).unwrap();
        let swap = BTreeMap::from([(gid("s"), gid("t")), (gid("t"), gid("s"))]);
        let ident = BTreeMap::from([(gid("s"), gid("s")), (gid("t"), gid("t"))]);
        assert!(realizes_automorphism(&table, &swap).unwrap());
        assert!(realizes_automorphism(&table, &ident).unwrap());

        // In the even dihedral the two generators are not conjugate.
        let b2 = sys_from(&["s", "t"], &[("s", "t", 4)]);
        let table = coset_enumerate(&b2, &b2.full_set(), 100).unwrap();
        assert!(!realizes_automorphism(&table, &swap).unwrap());
        assert!(realizes_automorphism(&table, &ident).unwrap());

        let missing = BTreeMap::from([(gid("s"), gid("t"))]);
        assert!(matches!(
            realizes_automorphism(&table, &missing),
            Err(Error::OracleInvariant(_))
        ));
    }
}
