//! The acceptance gate. Eight criteria, each printed as one PASS/FAIL line
//! with its runtime; the test fails unless every criterion passes within its
//! time limit. Run with `--nocapture` to see the lines on success.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use coxjsj::format::parse_cox;
use coxjsj::random::corpus;
use coxjsj::verify::orbit_invariants;
use coxjsj_core::chordal::is_chordal;
use coxjsj_core::jsj::{decompose, decompose_fast, jsj_orbit, vertex_sets, GraphOfGroups};
use coxjsj_core::oracle::{
    brute_relative_minimal_separators, brute_vertex_sets, coset_enumerate, oracle_w0_sigma,
};
use coxjsj_core::separators::{
    is_minimal_separator, is_separator, relative_minimal_separators, Separation,
};
use coxjsj_core::twist::{
    apply_twist, canonical_key, diagram_isomorphic, twist_orbit, w0_automorphism, ElementaryTwist,
};
use coxjsj_core::{CoxeterSystem, GeneratorId, GeneratorSubset};

const ORACLE_RANK_BOUND: usize = 12;
const W0_ORDER_BOUND: usize = 10_000;

// Fixed corpus seeds; the random systems under test never change.
const FAMILY_CORPUS: (usize, usize, u64) = (200, 9, 401);
const ORBIT_CORPUS: (usize, usize, u64) = (50, 7, 501);
const CHORDAL_CORPUS: (usize, usize, u64) = (500, 10, 601);

trait OrMsg<T> {
    fn msg(self) -> Result<T, String>;
}

impl<T> OrMsg<T> for Result<T, coxjsj_core::Error> {
    fn msg(self) -> Result<T, String> {
        self.map_err(|e| e.to_string())
    }
}

macro_rules! check {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn fixture(name: &str) -> CoxeterSystem {
    let path = format!("{}/tests/fixtures/{}", env!("CARGO_MANIFEST_DIR"), name);
    parse_cox(&std::fs::read_to_string(&path).expect("fixture exists")).expect("fixture parses")
}

fn g(name: &str) -> GeneratorId {
    GeneratorId::new(name).unwrap()
}

fn set(names: &[&str]) -> GeneratorSubset {
    names.iter().map(|n| g(n)).collect()
}

fn subset_by_mask(sys: &CoxeterSystem, mask: u64) -> GeneratorSubset {
    sys.generators()
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, g)| g.clone())
        .collect()
}

fn sorted_vertex_labels(gog: &GraphOfGroups) -> Vec<GeneratorSubset> {
    let mut v = gog.vertex_labels().to_vec();
    v.sort();
    v
}

fn sorted_edge_labels(gog: &GraphOfGroups) -> Vec<GeneratorSubset> {
    let mut e = gog.edge_labels();
    e.sort();
    e
}

/// A tree as the set of its label-level edges, forgetting vertex order.
fn tree_shape(
    gog: &GraphOfGroups,
) -> BTreeSet<(GeneratorSubset, GeneratorSubset, GeneratorSubset)> {
    gog.edges()
        .iter()
        .map(|(i, j, label)| {
            let a = gog.vertex_labels()[*i].clone();
            let b = gog.vertex_labels()[*j].clone();
            (a.clone().min(b.clone()), a.max(b), label.clone())
        })
        .collect()
}

fn c1_book_decomposition_and_slide_orbit() -> Result<(), String> {
    let sys = fixture("book.cox");
    let gog = decompose(&sys).msg()?;
    check!(
        sorted_vertex_labels(&gog)
            == vec![
                set(&["a", "b"]),
                set(&["b", "c", "e"]),
                set(&["b", "d", "e"])
            ],
        "vertex labels are {:?}",
        gog.vertex_labels()
    );
    check!(
        sorted_edge_labels(&gog) == vec![set(&["b"]), set(&["b", "e"])],
        "edge labels are {:?}",
        gog.edge_labels()
    );

    let orbit = jsj_orbit(&sys).msg()?;
    check!(
        orbit.len() == 2,
        "slide orbit has {} trees, expected 2",
        orbit.len()
    );
    let shapes: BTreeSet<_> = orbit.iter().map(tree_shape).collect();
    let spine = (
        set(&["b", "c", "e"]),
        set(&["b", "d", "e"]),
        set(&["b", "e"]),
    );
    let expected: BTreeSet<_> = [
        BTreeSet::from([
            (set(&["a", "b"]), set(&["b", "c", "e"]), set(&["b"])),
            spine.clone(),
        ]),
        BTreeSet::from([
            (set(&["a", "b"]), set(&["b", "d", "e"]), set(&["b"])),
            spine.clone(),
        ]),
    ]
    .into();
    check!(shapes == expected, "orbit trees are {:?}", shapes);
    Ok(())
}

fn c2_chained_triangles_decomposition() -> Result<(), String> {
    let sys = fixture("chained_triangles.cox");
    check!(
        is_minimal_separator(&sys, &set(&["c", "d"])).msg()?,
        "{{c,d}} is not a minimal separator"
    );
    check!(
        is_separator(&sys, &set(&["b"])).msg()?,
        "{{b}} does not separate"
    );

    let slow = decompose(&sys).msg()?;
    let fast = decompose_fast(&sys).msg()?;
    let vertices = vec![
        set(&["a", "b"]),
        set(&["b", "c", "d"]),
        set(&["c", "d", "e"]),
    ];
    let edges = vec![set(&["b"]), set(&["c", "d"])];
    for (name, gog) in [("definition", &slow), ("clique-separator", &fast)] {
        check!(
            sorted_vertex_labels(gog) == vertices,
            "{} vertex labels are {:?}",
            name,
            gog.vertex_labels()
        );
        check!(
            sorted_edge_labels(gog) == edges,
            "{} edge labels are {:?}",
            name,
            gog.edge_labels()
        );
    }
    Ok(())
}

fn c3_twist_of_chained_triangles() -> Result<(), String> {
    let sys = fixture("chained_triangles.cox");
    let sep = Separation::new(
        &sys,
        set(&["a", "b", "c", "d"]),
        set(&["b", "c", "d"]),
        set(&["b", "c", "d", "e"]),
    )
    .msg()?;
    let tw = ElementaryTwist::by_longest_element(&sys, sep).msg()?;
    let twisted = apply_twist(&sys, &tw).msg()?;
    let expected = fixture("twisted_chain.cox");
    check!(
        twisted.system() == &expected,
        "twisted diagram is {:?}",
        twisted.system()
    );

    let gog = decompose(twisted.system()).msg()?;
    check!(
        sorted_edge_labels(&gog) == vec![set(&["b"]), set(&["b", "c"])],
        "twisted edge labels are {:?}",
        gog.edge_labels()
    );

    // The new cut {b,c} has the diagram type of the old cut {c,d}, but where
    // {c,d} was a minimal separator before the twist, {b,c} is only a
    // relative minimal one after it.
    let old_cut = sys.induced_subsystem(&set(&["c", "d"])).msg()?;
    let new_cut = twisted
        .system()
        .induced_subsystem(&set(&["b", "c"]))
        .msg()?;
    check!(
        diagram_isomorphic(&old_cut, &new_cut).is_some(),
        "cut types differ: {:?} vs {:?}",
        old_cut,
        new_cut
    );
    check!(
        relative_minimal_separators(twisted.system()).contains(&set(&["b", "c"])),
        "{{b,c}} is not relative minimal after the twist"
    );
    check!(
        !is_minimal_separator(twisted.system(), &set(&["b", "c"])).msg()?,
        "{{b,c}} should not be a minimal separator after the twist"
    );
    let minimal_count = |sys: &CoxeterSystem, gog: &GraphOfGroups| -> Result<usize, String> {
        let mut count = 0;
        for label in gog.edge_labels() {
            if is_minimal_separator(sys, &label).msg()? {
                count += 1;
            }
        }
        Ok(count)
    };
    let before = minimal_count(&sys, &decompose(&sys).msg()?)?;
    let after = minimal_count(twisted.system(), &gog)?;
    check!(
        (before, after) == (2, 1),
        "minimal edge labels: {} before, {} after",
        before,
        after
    );
    Ok(())
}

fn c4_families_match_the_oracle() -> Result<(), String> {
    let (count, max_rank, seed) = FAMILY_CORPUS;
    for (i, sys) in corpus(count, max_rank, seed).iter().enumerate() {
        let brute = brute_vertex_sets(sys, ORACLE_RANK_BOUND).msg()?;
        check!(
            vertex_sets(sys).msg()? == brute,
            "vertex sets differ on system {}",
            i
        );
        let brute: BTreeSet<GeneratorSubset> =
            brute_relative_minimal_separators(sys, ORACLE_RANK_BOUND)
                .msg()?
                .into_iter()
                .filter(|s| sys.is_complete(s).unwrap_or(false))
                .collect();
        let complete: BTreeSet<GeneratorSubset> =
            coxjsj_core::separators::complete_relative_minimal_separators(sys);
        check!(
            complete == brute,
            "complete separator families differ on system {}",
            i
        );
    }
    Ok(())
}

fn c5_twist_orbit_invariants() -> Result<(), String> {
    let (count, max_rank, seed) = ORBIT_CORPUS;
    for (i, sys) in corpus(count, max_rank, seed).iter().enumerate() {
        let orbit = twist_orbit(sys, 500).msg()?;
        check!(
            !orbit.truncated,
            "orbit of system {} overflowed its budget",
            i
        );
        let report = orbit_invariants(sys, &orbit).msg()?;
        check!(
            report.overall(),
            "orbit invariants fail on system {}: {:?}",
            i,
            report.failures().collect::<Vec<_>>()
        );
    }
    Ok(())
}

fn c6_chordality_equivalences() -> Result<(), String> {
    let (count, max_rank, seed) = CHORDAL_CORPUS;
    for (i, sys) in corpus(count, max_rank, seed).iter().enumerate() {
        let chordal = is_chordal(sys);
        let labels_complete = decompose(sys)
            .msg()?
            .vertex_labels()
            .iter()
            .all(|l| sys.is_complete(l).unwrap_or(false));
        check!(
            chordal == labels_complete,
            "system {}: chordal {} but vertex labels complete {}",
            i,
            chordal,
            labels_complete
        );
        let separators_complete = relative_minimal_separators(sys)
            .iter()
            .all(|s| sys.is_complete(s).unwrap_or(false));
        check!(
            chordal == separators_complete,
            "system {}: chordal {} but minimal separators complete {}",
            i,
            chordal,
            separators_complete
        );
    }
    Ok(())
}

fn c7_w0_table_matches_enumeration() -> Result<(), String> {
    let mut systems = vec![
        fixture("book.cox"),
        fixture("chained_triangles.cox"),
        fixture("twisted_chain.cox"),
    ];
    let (count, max_rank, seed) = FAMILY_CORPUS;
    systems.extend(corpus(count, max_rank, seed));
    let (count, max_rank, seed) = ORBIT_CORPUS;
    systems.extend(corpus(count, max_rank, seed));

    // Shapes whose conjugation action the criterion names explicitly.
    let pair = |m| {
        CoxeterSystem::new(
            vec![g("x"), g("y")],
            [(g("x"), g("y"), coxjsj_core::OrderLabel::Finite(m))],
        )
        .unwrap()
    };
    let key_swap_pair = canonical_key(&pair(3));
    let key_fixed_pair = canonical_key(&pair(4));
    let key_commuting_pair = canonical_key(&pair(2));
    let key_chain3 = canonical_key(
        &CoxeterSystem::new(
            vec![g("x"), g("y"), g("z")],
            [
                (g("x"), g("y"), coxjsj_core::OrderLabel::Finite(3)),
                (g("y"), g("z"), coxjsj_core::OrderLabel::Finite(3)),
                (g("x"), g("z"), coxjsj_core::OrderLabel::Finite(2)),
            ],
        )
        .unwrap(),
    );
    let mut named_seen = [false; 4];

    let mut checked = 0usize;
    for sys in &systems {
        for mask in 0u64..(1 << sys.rank()) {
            let c = subset_by_mask(sys, mask);
            let Some(labels) = sys.finite_type(&c).msg()? else {
                continue;
            };
            let order: u128 = labels.iter().map(|l| l.order()).product();
            if order > W0_ORDER_BOUND as u128 {
                continue;
            }
            let table = coset_enumerate(sys, &c, W0_ORDER_BOUND).msg()?;
            check!(
                table.order() as u128 == order,
                "enumeration of {} found order {}, classification says {}",
                c,
                table.order(),
                order
            );
            let sigma = w0_automorphism(sys, &c).msg()?;
            let oracle = oracle_w0_sigma(&table, &c).msg()?;
            check!(
                sigma == oracle,
                "conjugation mismatch on {}: {:?} vs {:?}",
                c,
                sigma,
                oracle
            );
            checked += 1;

            let moved = sigma.iter().filter(|(s, t)| s != t).count();
            let key = canonical_key(&sys.induced_subsystem(&c).msg()?);
            if key == key_swap_pair {
                check!(moved == 2, "order-3 pair {} should swap", c);
                named_seen[0] = true;
            } else if key == key_chain3 {
                check!(moved == 2, "3-chain {} should swap its ends", c);
                named_seen[1] = true;
            } else if key == key_fixed_pair {
                check!(moved == 0, "order-4 pair {} should be fixed", c);
                named_seen[2] = true;
            } else if key == key_commuting_pair {
                check!(moved == 0, "commuting pair {} should be fixed", c);
                named_seen[3] = true;
            }
        }
    }
    check!(checked > 1000, "only {} parabolics checked", checked);
    check!(
        named_seen == [true; 4],
        "named shapes not all encountered: {:?}",
        named_seen
    );
    Ok(())
}

fn c8_complete_cut_separations_lift() -> Result<(), String> {
    let (count, max_rank, seed) = FAMILY_CORPUS;
    for (i, sys) in corpus(count, max_rank, seed).iter().enumerate() {
        let n = sys.rank();
        let full = (1u64 << n) - 1;
        // Component counts of every induced subdiagram, indexed by mask.
        let mut comp_count = vec![0usize; 1 << n];
        for (mask, slot) in comp_count.iter_mut().enumerate() {
            *slot = sys
                .diagram_components(&subset_by_mask(sys, mask as u64))
                .msg()?
                .len();
        }

        for cut in 0u64..=full {
            if comp_count[(full ^ cut) as usize] < 2
                || !sys.is_complete(&subset_by_mask(sys, cut)).msg()?
            {
                continue;
            }
            let comps: Vec<u64> = sys
                .diagram_components(&subset_by_mask(sys, full ^ cut))
                .msg()?
                .iter()
                .map(|comp| {
                    comp.iter().fold(0u64, |m, g| {
                        m | 1 << sys.generators().binary_search(g).expect("member")
                    })
                })
                .collect();
            // Every way of sending some components left makes a separation.
            for sel in 1..(1u64 << comps.len()) - 1 {
                let left = cut
                    | comps
                        .iter()
                        .enumerate()
                        .filter(|&(c, _)| sel >> c & 1 == 1)
                        .fold(0u64, |m, (_, comp)| m | comp);
                // T ⊆ left separating the left side must separate the whole.
                let mut t = left;
                loop {
                    if comp_count[(left ^ t) as usize] >= 2 {
                        check!(
                            comp_count[(full ^ t) as usize] >= 2,
                            "system {}: {} splits a side but not the whole",
                            i,
                            subset_by_mask(sys, t)
                        );
                    }
                    if t == 0 {
                        break;
                    }
                    t = (t - 1) & left;
                }
            }
        }
    }
    Ok(())
}

type Criterion = (&'static str, u64, fn() -> Result<(), String>);

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        (
            "c1 book decomposition and slide orbit",
            1,
            c1_book_decomposition_and_slide_orbit,
        ),
        (
            "c2 chained triangles decomposition",
            1,
            c2_chained_triangles_decomposition,
        ),
        (
            "c3 twist of the chained triangles",
            1,
            c3_twist_of_chained_triangles,
        ),
        (
            "c4 families match the oracle on 200 systems",
            60,
            c4_families_match_the_oracle,
        ),
        (
            "c5 twist orbit invariants on 50 systems",
            120,
            c5_twist_orbit_invariants,
        ),
        (
            "c6 chordality equivalences on 500 systems",
            60,
            c6_chordality_equivalences,
        ),
        (
            "c7 w0 table matches coset enumeration",
            30,
            c7_w0_table_matches_enumeration,
        ),
        (
            "c8 complete-cut separations lift",
            60,
            c8_complete_cut_separations_lift,
        ),
    ];

    let mut all_pass = true;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let pass = result.is_ok() && in_time;
        let detail = match &result {
            Err(e) => format!(": {}", e),
            Ok(()) if !in_time => ": over the time limit".to_string(),
            Ok(()) => String::new(),
        };
        println!(
            "{} {} ({:.2?} of {}s){}",
            if pass { "PASS" } else { "FAIL" },
            name,
            elapsed,
            limit,
            detail
        );
        all_pass &= pass;
    }
    assert!(all_pass, "at least one acceptance criterion failed");
}
