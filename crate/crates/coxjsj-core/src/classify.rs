//! Finite-type recognition by labeled template matching.
//!
//! Each irreducible factor (component of the classifying diagram) is matched
//! exactly against the finite-type shapes: chains for A/B/F/H/I2, a fork for
//! D and E. Alongside the label, matching records how conjugation by the
//! factor's longest element permutes the generators, which is all the twist
//! machinery needs.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::system::{CoxeterSystem, GeneratorSubset, OrderLabel};
use crate::Error;

/// Irreducible finite-type diagram labels.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum FiniteTypeLabel {
    /// Chain of 3s, rank n ≥ 1.
    A(u32),
    /// Chain with a single 4 at one end, rank n ≥ 2.
    B(u32),
    /// Fork with two length-1 branches, all labels 3, rank n ≥ 4.
    D(u32),
    E6,
    E7,
    E8,
    /// Chain 3-4-3.
    F4,
    /// Chains 5-3 and 5-3-3.
    H3,
    H4,
    /// One edge labeled m ≥ 5.
    I2(u32),
}

impl FiniteTypeLabel {
    /// Group order; saturates instead of overflowing.
    pub fn order(&self) -> u128 {
        fn fact(n: u128) -> u128 {
            (2..=n).fold(1u128, |a, k| a.saturating_mul(k))
        }
        match *self {
            FiniteTypeLabel::A(n) => fact(n as u128 + 1),
            FiniteTypeLabel::B(n) => fact(n as u128).saturating_mul(1u128 << n.min(127)),
            FiniteTypeLabel::D(n) => fact(n as u128).saturating_mul(1u128 << (n - 1).min(127)),
            FiniteTypeLabel::E6 => 51_840,
            FiniteTypeLabel::E7 => 2_903_040,
            FiniteTypeLabel::E8 => 696_729_600,
            FiniteTypeLabel::F4 => 1_152,
            FiniteTypeLabel::H3 => 120,
            FiniteTypeLabel::H4 => 14_400,
            FiniteTypeLabel::I2(m) => 2 * m as u128,
        }
    }
}

impl core::fmt::Display for FiniteTypeLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match *self {
            FiniteTypeLabel::A(n) => write!(f, "A{}", n),
            FiniteTypeLabel::B(n) => write!(f, "B{}", n),
            FiniteTypeLabel::D(n) => write!(f, "D{}", n),
            FiniteTypeLabel::E6 => f.write_str("E6"),
            FiniteTypeLabel::E7 => f.write_str("E7"),
            FiniteTypeLabel::E8 => f.write_str("E8"),
            FiniteTypeLabel::F4 => f.write_str("F4"),
            FiniteTypeLabel::H3 => f.write_str("H3"),
            FiniteTypeLabel::H4 => f.write_str("H4"),
            FiniteTypeLabel::I2(m) => write!(f, "I2({})", m),
        }
    }
}

/// A classified irreducible factor: its label and the transpositions by
/// which the longest element's conjugation permutes the factor's generators
/// (identity on everything not listed). Indices are global.
#[derive(Clone, Debug)]
pub(crate) struct FactorClass {
    pub label: FiniteTypeLabel,
    pub w0_swaps: Vec<(usize, usize)>,
}

/// Labels for all irreducible factors of `r`, ordered by least factor
/// member, or `None` if any factor is not finite-type.
pub fn finite_type(
    sys: &CoxeterSystem,
    r: &GeneratorSubset,
) -> Result<Option<Vec<FiniteTypeLabel>>, Error> {
    let mut labels = Vec::new();
    for factor in sys.coxeter_diagram_components(r)? {
        let ix = sys.indices_of(&factor)?;
        match classify_factor(sys, &ix) {
            Some(fc) => labels.push(fc.label),
            None => return Ok(None),
        }
    }
    Ok(Some(labels))
}

/// Like [`finite_type`] but with the longest-element permutation data;
/// errors when a factor is not finite-type.
pub(crate) fn classify_all(
    sys: &CoxeterSystem,
    r: &GeneratorSubset,
) -> Result<Vec<FactorClass>, Error> {
    let mut out = Vec::new();
    for factor in sys.coxeter_diagram_components(r)? {
        let ix = sys.indices_of(&factor)?;
        match classify_factor(sys, &ix) {
            Some(fc) => out.push(fc),
            None => return Err(Error::NotFiniteType(factor.to_string())),
        }
    }
    Ok(out)
}

/// Matches one factor (connected in the classifying diagram) against the
/// templates. `factor` holds sorted global indices.
pub(crate) fn classify_factor(sys: &CoxeterSystem, factor: &[usize]) -> Option<FactorClass> {
    let n = factor.len();
    // Every edge label must be finite; non-edges inside a factor are 2s.
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    for (p, &i) in factor.iter().enumerate() {
        for &j in &factor[p + 1..] {
            if sys.coxeter_adjacent_ix(i, j) {
                match sys.order_ix(i, j) {
                    OrderLabel::Finite(m) => edges.push((i, j, m)),
                    OrderLabel::Infinite => return None,
                }
            }
        }
    }

    if n == 1 {
        return Some(FactorClass {
            label: FiniteTypeLabel::A(1),
            w0_swaps: Vec::new(),
        });
    }
    if n == 2 {
        let &(i, j, m) = edges.first()?;
        let (label, swaps) = match m {
            3 => (FiniteTypeLabel::A(2), alloc::vec![(i, j)]),
            4 => (FiniteTypeLabel::B(2), Vec::new()),
            m if m % 2 == 1 => (FiniteTypeLabel::I2(m), alloc::vec![(i, j)]),
            m => (FiniteTypeLabel::I2(m), Vec::new()),
        };
        return Some(FactorClass {
            label,
            w0_swaps: swaps,
        });
    }

    // Rank ≥ 3: the diagram must be a tree with at most one branch vertex.
    if edges.len() != n - 1 {
        return None;
    }
    let mut deg = alloc::collections::BTreeMap::new();
    let mut nbrs: alloc::collections::BTreeMap<usize, Vec<(usize, u32)>> =
        alloc::collections::BTreeMap::new();
    for &i in factor {
        deg.insert(i, 0usize);
        nbrs.insert(i, Vec::new());
    }
    for &(i, j, m) in &edges {
        *deg.get_mut(&i).unwrap() += 1;
        *deg.get_mut(&j).unwrap() += 1;
        nbrs.get_mut(&i).unwrap().push((j, m));
        nbrs.get_mut(&j).unwrap().push((i, m));
    }
    if deg.values().any(|&d| d > 3) {
        return None;
    }
    let forks: Vec<usize> = deg
        .iter()
        .filter(|&(_, &d)| d == 3)
        .map(|(&v, _)| v)
        .collect();

    if forks.is_empty() {
        // A chain. Walk it from its least endpoint.
        let mut ends: Vec<usize> = deg
            .iter()
            .filter(|&(_, &d)| d == 1)
            .map(|(&v, _)| v)
            .collect();
        ends.sort_unstable();
        if ends.len() != 2 {
            return None;
        }
        let mut chain = alloc::vec![ends[0]];
        let mut labels = Vec::new();
        let mut prev = usize::MAX;
        while chain.len() < n {
            let cur = *chain.last().unwrap();
            let &(next, m) = nbrs[&cur].iter().find(|&&(v, _)| v != prev)?;
            labels.push(m);
            prev = cur;
            chain.push(next);
        }
        let reversal: Vec<(usize, usize)> =
            (0..n / 2).map(|i| (chain[i], chain[n - 1 - i])).collect();
        let non3: Vec<(usize, u32)> = labels
            .iter()
            .enumerate()
            .filter(|&(_, &m)| m != 3)
            .map(|(p, &m)| (p, m))
            .collect();
        return match non3.as_slice() {
            [] => Some(FactorClass {
                label: FiniteTypeLabel::A(n as u32),
                w0_swaps: reversal,
            }),
            [(p, 4)] if *p == 0 || *p == n - 2 => Some(FactorClass {
                label: FiniteTypeLabel::B(n as u32),
                w0_swaps: Vec::new(),
            }),
            [(1, 4)] if n == 4 => Some(FactorClass {
                label: FiniteTypeLabel::F4,
                w0_swaps: Vec::new(),
            }),
            [(p, 5)] if (*p == 0 || *p == n - 2) && n == 3 => Some(FactorClass {
                label: FiniteTypeLabel::H3,
                w0_swaps: Vec::new(),
            }),
            [(p, 5)] if (*p == 0 || *p == n - 2) && n == 4 => Some(FactorClass {
                label: FiniteTypeLabel::H4,
                w0_swaps: Vec::new(),
            }),
            _ => None,
        };
    }

    if forks.len() != 1 {
        return None;
    }
    // D or E shapes: every label is 3.
    if edges.iter().any(|&(_, _, m)| m != 3) {
        return None;
    }
    let c = forks[0];
    // The three branches hanging off the fork, as paths away from it.
    let mut branches: Vec<Vec<usize>> = Vec::new();
    for &(first, _) in &nbrs[&c] {
        let mut path = alloc::vec![first];
        let mut prev = c;
        loop {
            let cur = *path.last().unwrap();
            match nbrs[&cur].iter().find(|&&(v, _)| v != prev) {
                Some(&(next, _)) => {
                    prev = cur;
                    path.push(next);
                }
                None => break,
            }
        }
        branches.push(path);
    }
    branches.sort_by_key(|b| (b.len(), b[0]));
    let lens: Vec<usize> = branches.iter().map(|b| b.len()).collect();
    match lens.as_slice() {
        [1, 1, _] => {
            let n = n as u32;
            let swaps = if n % 2 == 1 {
                alloc::vec![(branches[0][0], branches[1][0])]
            } else {
                Vec::new()
            };
            Some(FactorClass {
                label: FiniteTypeLabel::D(n),
                w0_swaps: swaps,
            })
        }
        [1, 2, 2] => {
            // The involution fixes the fork and the short branch and swaps
            // the two long branches position by position.
            let (p, q) = (&branches[1], &branches[2]);
            Some(FactorClass {
                label: FiniteTypeLabel::E6,
                w0_swaps: alloc::vec![(p[0], q[0]), (p[1], q[1])],
            })
        }
        [1, 2, 3] => Some(FactorClass {
            label: FiniteTypeLabel::E7,
            w0_swaps: Vec::new(),
        }),
        [1, 2, 4] => Some(FactorClass {
            label: FiniteTypeLabel::E8,
            w0_swaps: Vec::new(),
        }),
        _ => None,
    }
}
