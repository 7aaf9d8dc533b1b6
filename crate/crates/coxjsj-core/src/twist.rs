//! Elementary twists: conjugating one side of a separation.
//!
//! Given a separation `(S1, S0, S2)` whose cut generates a finite subgroup,
//! conjugating `S2` by the longest element of that subgroup yields a new
//! generating set `S1 ∪ ℓ(S2−S0)ℓ⁻¹` for the same group, generally with a
//! different presentation diagram. Combinatorially the longest element acts
//! on the cut by a diagram automorphism `σ`, and the twisted diagram is a
//! function of the separation and `σ` alone; conjugated generators are
//! renamed with prime marks. [`twist_orbit`] closes a diagram under all such
//! moves up to diagram isomorphism.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::classify::classify_all;
use crate::oracle;
use crate::separators::{self, Separation};
use crate::system::{CoxeterSystem, GeneratorId, GeneratorSubset, OrderLabel};
use crate::Error;

pub use crate::iso::{canonical_key, diagram_isomorphic};

/// Cap on the number of diagrams [`twist_orbit`] collects by default.
pub const DEFAULT_TWIST_BUDGET: usize = 500;

/// Subset enumeration in [`admissible_twists`] refuses ranks above this.
const ENUMERATION_RANK_BOUND: usize = 32;

/// A separation together with the permutation of its cut by which the
/// twisting element acts. Constructed either from the longest element of
/// the cut subgroup or from a user-supplied permutation that is checked to
/// be a diagram automorphism realized by conjugation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ElementaryTwist {
    separation: Separation,
    sigma: BTreeMap<GeneratorId, GeneratorId>,
}

impl ElementaryTwist {
    /// The twist by the longest element of the cut subgroup, which must be
    /// of finite type.
    pub fn by_longest_element(sys: &CoxeterSystem, separation: Separation) -> Result<Self, Error> {
        let sigma = w0_automorphism(sys, separation.cut())?;
        Ok(ElementaryTwist { separation, sigma })
    }

    /// A twist by an arbitrary permutation of the cut. Accepted only when
    /// it is a bijection of the cut, preserves every order label, and is
    /// realized by conjugation by some element of the (finite) cut
    /// subgroup, checked by coset enumeration.
    pub fn with_sigma(
        sys: &CoxeterSystem,
        separation: Separation,
        sigma: BTreeMap<GeneratorId, GeneratorId>,
    ) -> Result<Self, Error> {
        let cut = separation.cut();
        check_automorphism(sys, cut, &sigma)?;
        let table = oracle::coset_enumerate(sys, cut, oracle::DEFAULT_ORDER_BOUND)?;
        if !oracle::realizes_automorphism(&table, &sigma)? {
            return Err(Error::SigmaNotRealized);
        }
        Ok(ElementaryTwist { separation, sigma })
    }

    pub fn separation(&self) -> &Separation {
        &self.separation
    }

    pub fn sigma(&self) -> &BTreeMap<GeneratorId, GeneratorId> {
        &self.sigma
    }
}

fn check_automorphism(
    sys: &CoxeterSystem,
    cut: &GeneratorSubset,
    sigma: &BTreeMap<GeneratorId, GeneratorId>,
) -> Result<(), Error> {
    let keys: GeneratorSubset = sigma.keys().cloned().collect();
    let values: GeneratorSubset = sigma.values().cloned().collect();
    if &keys != cut || &values != cut {
        return Err(Error::NotAnAutomorphism(
            "not a bijection of the cut".into(),
        ));
    }
    for s in cut {
        for t in cut {
            if s < t && sys.order(s, t)? != sys.order(&sigma[s], &sigma[t])? {
                return Err(Error::NotAnAutomorphism(format!(
                    "label of ({s},{t}) changes under the permutation"
                )));
            }
        }
    }
    Ok(())
}

/// The permutation of `s0` induced by conjugation by the longest element of
/// `⟨s0⟩`, from the classification: factorwise, chains reverse, odd
/// dihedrals and odd-rank forks swap their symmetric ends, the rank-6
/// exceptional fork folds, everything else is fixed pointwise.
pub fn w0_automorphism(
    sys: &CoxeterSystem,
    s0: &GeneratorSubset,
) -> Result<BTreeMap<GeneratorId, GeneratorId>, Error> {
    let classes = classify_all(sys, s0)?;
    let gens = sys.generators();
    let mut sigma: BTreeMap<GeneratorId, GeneratorId> =
        s0.iter().map(|g| (g.clone(), g.clone())).collect();
    for fc in classes {
        for (i, j) in fc.w0_swaps {
            sigma.insert(gens[i].clone(), gens[j].clone());
            sigma.insert(gens[j].clone(), gens[i].clone());
        }
    }
    Ok(sigma)
}

/// A twisted system together with the renaming applied to the conjugated
/// generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistedSystem {
    system: CoxeterSystem,
    renames: BTreeMap<GeneratorId, GeneratorId>,
}

impl TwistedSystem {
    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    /// Old name of each conjugated generator mapped to its fresh primed
    /// name; generators of the kept side are absent.
    pub fn renames(&self) -> &BTreeMap<GeneratorId, GeneratorId> {
        &self.renames
    }

    pub fn into_system(self) -> CoxeterSystem {
        self.system
    }
}

/// Applies the twist: keeps the left side as is, renames every generator of
/// the right side outside the cut to a fresh primed name, and rewires the
/// labels so that a cut generator `s` sees a conjugated `t'` with the label
/// `m(σ⁻¹(s), t)`. Pairs across the two sides away from the cut stay
/// infinite.
pub fn apply_twist(sys: &CoxeterSystem, tw: &ElementaryTwist) -> Result<TwistedSystem, Error> {
    // Revalidate against this system: the twist may have been built
    // elsewhere.
    let sep = Separation::new(
        sys,
        tw.separation.left().clone(),
        tw.separation.cut().clone(),
        tw.separation.right().clone(),
    )?;
    check_automorphism(sys, sep.cut(), &tw.sigma)?;

    let s0 = sep.cut();
    let s1 = sep.left();
    let moved = sep.right().difference(s0);

    let mut taken: BTreeSet<GeneratorId> = s1.iter().cloned().collect();
    let mut renames = BTreeMap::new();
    for t in &moved {
        let mut fresh = t.primed();
        while taken.contains(&fresh) {
            fresh = fresh.primed();
        }
        taken.insert(fresh.clone());
        renames.insert(t.clone(), fresh);
    }
    let inv_sigma: BTreeMap<&GeneratorId, &GeneratorId> =
        tw.sigma.iter().map(|(k, v)| (v, k)).collect();

    let mut generators: Vec<GeneratorId> = s1.iter().cloned().collect();
    generators.extend(renames.values().cloned());
    let mut orders: Vec<(GeneratorId, GeneratorId, OrderLabel)> = Vec::new();
    for (p, s) in s1.iter().enumerate() {
        for t in &s1.members()[p + 1..] {
            if let OrderLabel::Finite(m) = sys.order(s, t)? {
                orders.push((s.clone(), t.clone(), OrderLabel::Finite(m)));
            }
        }
    }
    for (p, t) in moved.iter().enumerate() {
        for u in &moved.members()[p + 1..] {
            if let OrderLabel::Finite(m) = sys.order(t, u)? {
                orders.push((
                    renames[t].clone(),
                    renames[u].clone(),
                    OrderLabel::Finite(m),
                ));
            }
        }
    }
    for s in s0 {
        for t in &moved {
            if let OrderLabel::Finite(m) = sys.order(inv_sigma[&s], t)? {
                orders.push((s.clone(), renames[t].clone(), OrderLabel::Finite(m)));
            }
        }
    }
    Ok(TwistedSystem {
        system: CoxeterSystem::new(generators, orders)?,
        renames,
    })
}

/// Every elementary twist available on `sys`: separations over each
/// separating subset of finite type, one per unordered bipartition of the
/// complement's components, each carrying the longest-element permutation
/// of its cut. Exponential in the rank; refuses ranks above 32.
pub fn admissible_twists(sys: &CoxeterSystem) -> Result<Vec<ElementaryTwist>, Error> {
    let n = sys.rank();
    if n > ENUMERATION_RANK_BOUND {
        return Err(Error::RankBound {
            rank: n,
            bound: ENUMERATION_RANK_BOUND,
        });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let s0 = sys.subset_from_indices((0..n).filter(|&i| mask >> i & 1 == 1));
        if !separators::is_separator(sys, &s0)? {
            continue;
        }
        if sys.finite_type(&s0)?.is_none() {
            continue;
        }
        let sigma = w0_automorphism(sys, &s0)?;
        let comps = sys.diagram_components(&sys.full_set().difference(&s0))?;
        let k = comps.len();
        for sel in 0u64..(1u64 << (k - 1)) - 1 {
            let mut left = s0.union(&comps[0]);
            let mut right = s0.clone();
            for (c, comp) in comps[1..].iter().enumerate() {
                if sel >> c & 1 == 1 {
                    left = left.union(comp);
                } else {
                    right = right.union(comp);
                }
            }
            let separation = Separation::new(sys, left, s0.clone(), right)?;
            out.push(ElementaryTwist {
                separation,
                sigma: sigma.clone(),
            });
        }
    }
    out.sort_by(|a, b| {
        (a.separation.cut(), a.separation.left()).cmp(&(b.separation.cut(), b.separation.left()))
    });
    Ok(out)
}

/// The orbit of a diagram under elementary twists, up to diagram
/// isomorphism, with the starting diagram included. Exploration stops once
/// `budget` distinct diagrams are held, flagging the result as truncated.
#[derive(Clone, Debug)]
pub struct TwistOrbit {
    /// Orbit members ordered by canonical form, starting system included.
    pub members: Vec<CoxeterSystem>,
    /// True when exploration stopped at the budget instead of closing.
    pub truncated: bool,
}

pub fn twist_orbit(sys: &CoxeterSystem, budget: usize) -> Result<TwistOrbit, Error> {
    if budget == 0 {
        return Ok(TwistOrbit {
            members: Vec::new(),
            truncated: true,
        });
    }
    let mut found: BTreeMap<String, CoxeterSystem> = BTreeMap::new();
    let start_key = canonical_key(sys);
    let mut queue = alloc::vec![start_key.clone()];
    found.insert(start_key, sys.clone());
    let mut truncated = false;
    'outer: while let Some(key) = queue.pop() {
        let base = found[&key].clone();
        for tw in admissible_twists(&base)? {
            let twisted = apply_twist(&base, &tw)?;
            let k = canonical_key(twisted.system());
            if !found.contains_key(&k) {
                if found.len() == budget {
                    truncated = true;
                    break 'outer;
                }
                queue.push(k.clone());
                found.insert(k, twisted.into_system());
            }
        }
    }
    Ok(TwistOrbit {
        members: found.into_values().collect(),
        truncated,
    })
}
