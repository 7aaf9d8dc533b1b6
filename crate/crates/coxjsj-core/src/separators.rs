//! Separations of the diagram and minimal separator enumeration.
//!
//! A subset cuts the diagram when its removal disconnects the remaining
//! generators. Minimality comes in two strengths: no proper subset separates
//! at all (`is_minimal_separator`), or no proper subset separates a given
//! pair (the relative notion enumerated by [`minimal_ab_separators`]).
//! Enumeration works by expansion: starting from the separator hugging one
//! endpoint, each cut vertex is pushed across and the result shrunk back to
//! a minimal one via full-component neighborhoods. The exhaustive recheck
//! lives in [`crate::oracle`].

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::system::{CoxeterSystem, GeneratorId, GeneratorSubset};
use crate::Error;

/// A separation `(left, cut, right)`: the two sides cover the generator set,
/// meet exactly in the cut, and commuting is impossible across it: every
/// pair split by the cut has infinite order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Separation {
    left: GeneratorSubset,
    cut: GeneratorSubset,
    right: GeneratorSubset,
}

impl Separation {
    pub fn new(
        sys: &CoxeterSystem,
        left: GeneratorSubset,
        cut: GeneratorSubset,
        right: GeneratorSubset,
    ) -> Result<Self, Error> {
        sys.indices_of(&left)?;
        sys.indices_of(&right)?;
        if left.union(&right) != sys.full_set() {
            return Err(Error::InvalidSeparation(
                "sides do not cover the generators".into(),
            ));
        }
        if left.intersection(&right) != cut {
            return Err(Error::InvalidSeparation(
                "cut is not the intersection of the sides".into(),
            ));
        }
        for a in &left.difference(&cut) {
            for b in &right.difference(&cut) {
                if sys.order(a, b)?.is_finite() {
                    return Err(Error::InvalidSeparation(alloc::format!(
                        "finite order across the cut: ({},{})",
                        a,
                        b
                    )));
                }
            }
        }
        Ok(Separation { left, cut, right })
    }

    pub fn left(&self) -> &GeneratorSubset {
        &self.left
    }

    pub fn cut(&self) -> &GeneratorSubset {
        &self.cut
    }

    pub fn right(&self) -> &GeneratorSubset {
        &self.right
    }

    /// The same separation with the sides exchanged.
    pub fn swapped(&self) -> Separation {
        Separation {
            left: self.right.clone(),
            cut: self.cut.clone(),
            right: self.left.clone(),
        }
    }
}

/// Connected component of `start` in the diagram minus `blocked`, as a mask
/// over global indices.
fn component_mask(sys: &CoxeterSystem, blocked: &[bool], start: usize) -> Vec<bool> {
    let n = sys.rank();
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if !seen[v] && !blocked[v] && sys.adjacent_ix(u, v) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

fn blocked_mask(sys: &CoxeterSystem, cut: &GeneratorSubset) -> Result<Vec<bool>, Error> {
    let mut blocked = vec![false; sys.rank()];
    for i in sys.indices_of(cut)? {
        blocked[i] = true;
    }
    Ok(blocked)
}

/// Does removing `cut` put `a` and `b` in different components? Both must
/// lie outside the cut.
pub fn separates_pair(
    sys: &CoxeterSystem,
    cut: &GeneratorSubset,
    a: &GeneratorId,
    b: &GeneratorId,
) -> Result<bool, Error> {
    let ia = sys.idx(a)?;
    let ib = sys.idx(b)?;
    if cut.contains(a) {
        return Err(Error::GeneratorInCut(a.as_str().to_string()));
    }
    if cut.contains(b) {
        return Err(Error::GeneratorInCut(b.as_str().to_string()));
    }
    let blocked = blocked_mask(sys, cut)?;
    Ok(!component_mask(sys, &blocked, ia)[ib])
}

/// Does removing `cut` leave at least two components?
pub fn is_separator(sys: &CoxeterSystem, cut: &GeneratorSubset) -> Result<bool, Error> {
    let blocked = blocked_mask(sys, cut)?;
    let mut outside = (0..sys.rank()).filter(|&i| !blocked[i]);
    let Some(first) = outside.next() else {
        return Ok(false);
    };
    let comp = component_mask(sys, &blocked, first);
    Ok(outside.any(|i| !comp[i]))
}

/// The binary separation at `cut`: the least component of the complement on
/// one side, everything else on the other.
pub fn make_separation(sys: &CoxeterSystem, cut: &GeneratorSubset) -> Result<Separation, Error> {
    let blocked = blocked_mask(sys, cut)?;
    let outside: Vec<usize> = (0..sys.rank()).filter(|&i| !blocked[i]).collect();
    let comps = sys.components_ix(&outside, false);
    if comps.len() < 2 {
        return Err(Error::NotASeparator(cut.to_string()));
    }
    let left = cut.union(&sys.subset_from_indices(comps[0].iter().copied()));
    let rest: Vec<usize> = comps[1..].iter().flatten().copied().collect();
    let right = cut.union(&sys.subset_from_indices(rest));
    Ok(Separation {
        left,
        cut: cut.clone(),
        right,
    })
}

/// A separator no proper subset of which separates.
pub fn is_minimal_separator(sys: &CoxeterSystem, cut: &GeneratorSubset) -> Result<bool, Error> {
    if !is_separator(sys, cut)? {
        return Ok(false);
    }
    let members = cut.members();
    let k = members.len();
    if k > 24 {
        // Subset enumeration would not finish; cuts this large are out of
        // scope for the systems this crate targets.
        return Err(Error::RankBound { rank: k, bound: 24 });
    }
    for mask in 0..(1u32 << k).saturating_sub(1) {
        let sub: GeneratorSubset = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| members[i].clone())
            .collect();
        if is_separator(sys, &sub)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Neighborhood-of-component shrink: given any `(a,b)`-separator mask `u`,
/// returns the minimal `(a,b)`-separator obtained by restricting to the
/// boundary of `b`'s component and then to the boundary of `a`'s.
fn extract_minimal(sys: &CoxeterSystem, u: &[bool], ia: usize, ib: usize) -> Vec<usize> {
    let n = sys.rank();
    let cb = component_mask(sys, u, ib);
    let mut t1 = vec![false; n];
    for v in 0..n {
        t1[v] = u[v] && (0..n).any(|w| cb[w] && sys.adjacent_ix(v, w));
    }
    let ca = component_mask(sys, &t1, ia);
    (0..n)
        .filter(|&v| t1[v] && (0..n).any(|w| ca[w] && sys.adjacent_ix(v, w)))
        .collect()
}

/// All minimal `(a,b)`-separators. Pairs with finite order have none and
/// yield the empty family, so callers can sweep over all pairs.
pub fn minimal_ab_separators(
    sys: &CoxeterSystem,
    a: &GeneratorId,
    b: &GeneratorId,
) -> Result<BTreeSet<GeneratorSubset>, Error> {
    let ia = sys.idx(a)?;
    let ib = sys.idx(b)?;
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    if sys.order_ix(ia, ib).is_finite() {
        return Ok(BTreeSet::new());
    }
    let n = sys.rank();
    // Seed with the separators hugging each endpoint.
    let mut queue: Vec<Vec<usize>> = Vec::new();
    for (src, dst) in [(ia, ib), (ib, ia)] {
        let u: Vec<bool> = (0..n)
            .map(|v| v != dst && sys.adjacent_ix(src, v))
            .collect();
        let t = extract_minimal(sys, &u, ia, ib);
        if found.insert(t.clone()) {
            queue.push(t);
        }
    }
    // Push each cut vertex across and re-shrink.
    while let Some(t) = queue.pop() {
        for &x in &t {
            let mut u: Vec<bool> = (0..n).map(|v| sys.adjacent_ix(x, v)).collect();
            for &v in &t {
                u[v] = true;
            }
            u[ia] = false;
            u[ib] = false;
            let t2 = extract_minimal(sys, &u, ia, ib);
            if found.insert(t2.clone()) {
                queue.push(t2);
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|ix| sys.subset_from_indices(ix))
        .collect())
}

/// Separators that are minimal for at least one pair.
pub fn relative_minimal_separators(sys: &CoxeterSystem) -> BTreeSet<GeneratorSubset> {
    let gens = sys.generators();
    let mut out = BTreeSet::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !sys.order_ix(i, j).is_finite() {
                let seps = minimal_ab_separators(sys, &gens[i], &gens[j])
                    .expect("generators come from the system");
                out.extend(seps);
            }
        }
    }
    out
}

/// The complete members of [`relative_minimal_separators`]: the edge labels
/// of the canonical decomposition.
pub fn complete_relative_minimal_separators(sys: &CoxeterSystem) -> BTreeSet<GeneratorSubset> {
    relative_minimal_separators(sys)
        .into_iter()
        .filter(|s| sys.is_complete(s).expect("members come from the system"))
        .collect()
}

/// The least (by size, then lexicographically) complete separator no proper
/// subset of which separates; `None` when no complete subset separates.
pub(crate) fn least_minimal_complete_separator(
    sys: &CoxeterSystem,
) -> Result<Option<GeneratorSubset>, Error> {
    let mut best: Option<GeneratorSubset> = None;
    for cand in complete_relative_minimal_separators(sys) {
        if !is_minimal_separator(sys, &cand)? {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => (cand.len(), cand.members()) < (b.len(), b.members()),
        };
        if better {
            best = Some(cand);
        }
    }
    Ok(best)
}
