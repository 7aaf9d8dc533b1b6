//! Shared fixtures and a random-system strategy for the integration tests.
#![allow(dead_code)]

use coxjsj_core::{CoxeterSystem, GeneratorId, GeneratorSubset, OrderLabel};
use proptest::prelude::*;

pub fn gid(s: &str) -> GeneratorId {
    GeneratorId::new(s).unwrap()
}

pub fn gs(names: &[&str]) -> GeneratorSubset {
    names.iter().map(|n| gid(n)).collect()
}

pub fn sys_from(names: &[&str], edges: &[(&str, &str, u32)]) -> CoxeterSystem {
    CoxeterSystem::new(
        names.iter().map(|n| gid(n)).collect(),
        edges
            .iter()
            .map(|&(s, t, m)| (gid(s), gid(t), OrderLabel::Finite(m)))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

/// Two triangles sharing the edge b-e, with a pendant a: the running example
/// whose tree has two shapes related by one slide.
pub fn book() -> CoxeterSystem {
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

/// Two triangles chained through the edge c-d, pendant a; the standard
/// twisting example.
pub fn chained_triangles() -> CoxeterSystem {
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

/// What twisting [`chained_triangles`] along the cut {b,c,d} produces: e is
/// conjugated across and reattaches to b and c.
pub fn twisted_chain() -> CoxeterSystem {
    sys_from(
        &["a", "b", "c", "d", "e'"],
        &[
            ("a", "b", 3),
            ("b", "c", 3),
            ("b", "d", 2),
            ("c", "d", 3),
            ("b", "e'", 2),
            ("c", "e'", 2),
        ],
    )
}

/// Three generators, no relations: a rank-3 free product.
pub fn star3() -> CoxeterSystem {
    sys_from(&["x", "y", "z"], &[])
}

/// A 4-cycle; the smallest diagram with no complete separator.
pub fn square() -> CoxeterSystem {
    sys_from(
        &["a", "b", "c", "d"],
        &[("a", "b", 3), ("b", "c", 3), ("c", "d", 3), ("a", "d", 3)],
    )
}

pub fn pentagon() -> CoxeterSystem {
    sys_from(
        &["a", "b", "c", "d", "e"],
        &[
            ("a", "b", 3),
            ("b", "c", 3),
            ("c", "d", 3),
            ("d", "e", 3),
            ("a", "e", 3),
        ],
    )
}

const NAMES: [&str; 9] = ["a", "b", "c", "d", "e", "f", "g", "h", "i"];

fn arb_label() -> impl Strategy<Value = Option<u32>> {
    prop_oneof![
        3 => Just(None),
        2 => Just(Some(2u32)),
        3 => Just(Some(3u32)),
        1 => Just(Some(4u32)),
        1 => Just(Some(5u32)),
    ]
}

/// A random system of rank 1..=max_rank with pair labels drawn from
/// {∞, 2, 3, 4, 5}, weighted so separators and infinite pairs are common.
pub fn arb_system(max_rank: usize) -> impl Strategy<Value = CoxeterSystem> {
    (1..=max_rank).prop_flat_map(|n| {
        proptest::collection::vec(arb_label(), n * (n - 1) / 2).prop_map(move |labels| {
            let mut edges = Vec::new();
            let mut next = labels.into_iter();
            for (i, s) in NAMES[..n].iter().enumerate() {
                for t in &NAMES[i + 1..n] {
                    if let Some(m) = next.next().flatten() {
                        edges.push((gid(s), gid(t), OrderLabel::Finite(m)));
                    }
                }
            }
            CoxeterSystem::new(NAMES[..n].iter().map(|s| gid(s)).collect(), edges).unwrap()
        })
    })
}
