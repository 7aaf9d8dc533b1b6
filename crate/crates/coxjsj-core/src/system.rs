//! Generators, generator subsets and the presentation diagram itself.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// A named generator. Ordered lexicographically by name; that order is the
/// tie-breaker everywhere in the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct GeneratorId(String);

impl GeneratorId {
    /// Names are nonempty tokens: letters, digits or `_`, with `'` allowed
    /// after the first character (twisting primes generators).
    pub fn new(name: &str) -> Result<Self, Error> {
        let ok_head = |c: char| c.is_ascii_alphanumeric() || c == '_';
        let ok_tail = |c: char| c.is_ascii_alphanumeric() || c == '_' || c == '\'';
        let mut chars = name.chars();
        let valid = match chars.next() {
            None => false,
            Some(c) => ok_head(c) && chars.all(ok_tail),
        };
        if valid {
            Ok(GeneratorId(name.to_string()))
        } else {
            Err(Error::InvalidGeneratorName(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The name with one more prime mark.
    pub fn primed(&self) -> GeneratorId {
        let mut name = self.0.clone();
        name.push('\'');
        GeneratorId(name)
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The order of a product of two distinct generators: finite (at least 2) or
/// infinite. Absent pairs of a system are infinite.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum OrderLabel {
    Finite(u32),
    Infinite,
}

impl OrderLabel {
    pub fn is_finite(&self) -> bool {
        matches!(self, OrderLabel::Finite(_))
    }
}

impl fmt::Display for OrderLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderLabel::Finite(m) => write!(f, "{}", m),
            OrderLabel::Infinite => f.write_str("inf"),
        }
    }
}

/// A sorted, duplicate-free set of generators. The universal currency for
/// vertex labels, separators and twists.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct GeneratorSubset(Vec<GeneratorId>);

impl GeneratorSubset {
    pub fn empty() -> Self {
        GeneratorSubset(Vec::new())
    }

    pub fn singleton(g: GeneratorId) -> Self {
        GeneratorSubset(alloc::vec![g])
    }

    /// Sorts and deduplicates.
    pub fn new(mut members: Vec<GeneratorId>) -> Self {
        members.sort();
        members.dedup();
        GeneratorSubset(members)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn members(&self) -> &[GeneratorId] {
        &self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, GeneratorId> {
        self.0.iter()
    }

    pub fn contains(&self, g: &GeneratorId) -> bool {
        self.0.binary_search(g).is_ok()
    }

    pub fn is_subset_of(&self, other: &GeneratorSubset) -> bool {
        self.0.iter().all(|g| other.contains(g))
    }

    pub fn is_disjoint_from(&self, other: &GeneratorSubset) -> bool {
        self.0.iter().all(|g| !other.contains(g))
    }

    pub fn union(&self, other: &GeneratorSubset) -> GeneratorSubset {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        GeneratorSubset::new(v)
    }

    pub fn intersection(&self, other: &GeneratorSubset) -> GeneratorSubset {
        GeneratorSubset(
            self.0
                .iter()
                .filter(|g| other.contains(g))
                .cloned()
                .collect(),
        )
    }

    pub fn difference(&self, other: &GeneratorSubset) -> GeneratorSubset {
        GeneratorSubset(
            self.0
                .iter()
                .filter(|g| !other.contains(g))
                .cloned()
                .collect(),
        )
    }

    pub fn inserted(&self, g: GeneratorId) -> GeneratorSubset {
        let mut v = self.0.clone();
        v.push(g);
        GeneratorSubset::new(v)
    }
}

impl FromIterator<GeneratorId> for GeneratorSubset {
    fn from_iter<T: IntoIterator<Item = GeneratorId>>(iter: T) -> Self {
        GeneratorSubset::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a GeneratorSubset {
    type Item = &'a GeneratorId;
    type IntoIter = core::slice::Iter<'a, GeneratorId>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for GeneratorSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", g)?;
        }
        f.write_str("}")
    }
}

/// A Coxeter system of finite rank, given by its presentation diagram.
///
/// Generators are kept sorted; orders are stored sparsely as finite entries
/// (indexed `i < j`), so an absent pair reads as infinite. `m(s,s) = 1` is
/// implicit and never stored. Values are immutable after construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterSystem {
    generators: Vec<GeneratorId>,
    orders: BTreeMap<(u16, u16), u32>,
}

impl CoxeterSystem {
    /// Builds a system from a generator list and the finite part of the order
    /// map. Listing a pair as `Infinite` is allowed (and stores nothing), but
    /// each unordered pair may be listed at most once.
    pub fn new(
        generators: Vec<GeneratorId>,
        orders: impl IntoIterator<Item = (GeneratorId, GeneratorId, OrderLabel)>,
    ) -> Result<Self, Error> {
        let mut gens = generators;
        gens.sort();
        if let Some(w) = gens.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateGenerator(w[0].as_str().to_string()));
        }
        if gens.len() > u16::MAX as usize {
            return Err(Error::RankBound {
                rank: gens.len(),
                bound: u16::MAX as usize,
            });
        }
        let mut map = BTreeMap::new();
        let mut seen = alloc::collections::BTreeSet::new();
        for (s, t, m) in orders {
            let i = gens
                .binary_search(&s)
                .map_err(|_| Error::UnknownGenerator(s.as_str().to_string()))?;
            let j = gens
                .binary_search(&t)
                .map_err(|_| Error::UnknownGenerator(t.as_str().to_string()))?;
            if i == j {
                return Err(Error::SelfPair(s.as_str().to_string()));
            }
            let key = (i.min(j) as u16, i.max(j) as u16);
            if !seen.insert(key) {
                return Err(Error::DuplicatePair(
                    gens[key.0 as usize].as_str().to_string(),
                    gens[key.1 as usize].as_str().to_string(),
                ));
            }
            match m {
                OrderLabel::Finite(v) if v < 2 => return Err(Error::InvalidOrder(v)),
                OrderLabel::Finite(v) => {
                    map.insert(key, v);
                }
                OrderLabel::Infinite => {}
            }
        }
        Ok(CoxeterSystem {
            generators: gens,
            orders: map,
        })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[GeneratorId] {
        &self.generators
    }

    pub fn full_set(&self) -> GeneratorSubset {
        GeneratorSubset(self.generators.clone())
    }

    pub fn contains(&self, g: &GeneratorId) -> bool {
        self.generators.binary_search(g).is_ok()
    }

    /// `m(s,t)`; `Finite(1)` when `s = t`.
    pub fn order(&self, s: &GeneratorId, t: &GeneratorId) -> Result<OrderLabel, Error> {
        let i = self.idx(s)?;
        let j = self.idx(t)?;
        Ok(self.order_ix(i, j))
    }

    /// Finite entries of the order map as sorted `(s, t, m)` triples, `s < t`.
    pub fn finite_pairs(&self) -> impl Iterator<Item = (&GeneratorId, &GeneratorId, u32)> {
        self.orders.iter().map(move |(&(i, j), &m)| {
            (
                &self.generators[i as usize],
                &self.generators[j as usize],
                m,
            )
        })
    }

    pub(crate) fn idx(&self, g: &GeneratorId) -> Result<usize, Error> {
        self.generators
            .binary_search(g)
            .map_err(|_| Error::UnknownGenerator(g.as_str().to_string()))
    }

    pub(crate) fn order_ix(&self, i: usize, j: usize) -> OrderLabel {
        if i == j {
            return OrderLabel::Finite(1);
        }
        let key = (i.min(j) as u16, i.max(j) as u16);
        match self.orders.get(&key) {
            Some(&m) => OrderLabel::Finite(m),
            None => OrderLabel::Infinite,
        }
    }

    /// Diagram edge: `1 < m(i,j) < ∞`.
    pub(crate) fn adjacent_ix(&self, i: usize, j: usize) -> bool {
        i != j && self.order_ix(i, j).is_finite()
    }

    /// Edge of the classifying (Coxeter) diagram: `m(i,j) ≥ 3`, infinity
    /// included; commuting pairs are the non-edges there.
    pub(crate) fn coxeter_adjacent_ix(&self, i: usize, j: usize) -> bool {
        i != j && self.order_ix(i, j) != OrderLabel::Finite(2)
    }

    /// Validates membership and returns sorted indices.
    pub(crate) fn indices_of(&self, r: &GeneratorSubset) -> Result<Vec<usize>, Error> {
        r.iter().map(|g| self.idx(g)).collect()
    }

    pub(crate) fn subset_from_indices(
        &self,
        ix: impl IntoIterator<Item = usize>,
    ) -> GeneratorSubset {
        GeneratorSubset::new(ix.into_iter().map(|i| self.generators[i].clone()).collect())
    }

    /// True when every pair in `r` has finite order. Empty sets and
    /// singletons are complete.
    pub fn is_complete(&self, r: &GeneratorSubset) -> Result<bool, Error> {
        let ix = self.indices_of(r)?;
        for (p, &i) in ix.iter().enumerate() {
            for &j in &ix[p + 1..] {
                if !self.order_ix(i, j).is_finite() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The subsystem generated by `r`, with the restricted order map.
    pub fn induced_subsystem(&self, r: &GeneratorSubset) -> Result<CoxeterSystem, Error> {
        let ix = self.indices_of(r)?;
        let mut orders = Vec::new();
        for (p, &i) in ix.iter().enumerate() {
            for &j in &ix[p + 1..] {
                if let OrderLabel::Finite(m) = self.order_ix(i, j) {
                    orders.push((
                        self.generators[i].clone(),
                        self.generators[j].clone(),
                        OrderLabel::Finite(m),
                    ));
                }
            }
        }
        CoxeterSystem::new(r.members().to_vec(), orders)
    }

    /// Connected components of the diagram induced on `r`, each sorted,
    /// ordered by least member.
    pub fn diagram_components(&self, r: &GeneratorSubset) -> Result<Vec<GeneratorSubset>, Error> {
        let ix = self.indices_of(r)?;
        Ok(self
            .components_ix(&ix, false)
            .into_iter()
            .map(|c| self.subset_from_indices(c))
            .collect())
    }

    /// Connected components of the classifying diagram induced on `r`: the
    /// irreducible factors of the subsystem.
    pub fn coxeter_diagram_components(
        &self,
        r: &GeneratorSubset,
    ) -> Result<Vec<GeneratorSubset>, Error> {
        let ix = self.indices_of(r)?;
        Ok(self
            .components_ix(&ix, true)
            .into_iter()
            .map(|c| self.subset_from_indices(c))
            .collect())
    }

    /// Components over global indices; `coxeter` picks the edge notion.
    /// Each component is sorted; components are ordered by least member.
    pub(crate) fn components_ix(&self, verts: &[usize], coxeter: bool) -> Vec<Vec<usize>> {
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut seen = alloc::vec![false; verts.len()];
        for start in 0..verts.len() {
            if seen[start] {
                continue;
            }
            let mut comp = alloc::vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for v in 0..verts.len() {
                    if seen[v] {
                        continue;
                    }
                    let adj = if coxeter {
                        self.coxeter_adjacent_ix(verts[u], verts[v])
                    } else {
                        self.adjacent_ix(verts[u], verts[v])
                    };
                    if adj {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            let mut comp: Vec<usize> = comp.into_iter().map(|l| verts[l]).collect();
            comp.sort_unstable();
            comps.push(comp);
        }
        // verts is sorted, so discovery order is least-member order already;
        // keep the sort as a guard for unsorted callers.
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// The irreducible factor labels when every factor matches a finite-type
    /// template, `None` otherwise.
    pub fn finite_type(
        &self,
        r: &GeneratorSubset,
    ) -> Result<Option<Vec<crate::FiniteTypeLabel>>, Error> {
        crate::classify::finite_type(self, r)
    }
}
