//! Oracle comparisons for one system, folded into a verification report.

use std::collections::BTreeSet;

use coxjsj_core::chordal::check_chordal_equivalence;
use coxjsj_core::jsj::{decompose, decompose_fast, vertex_sets};
use coxjsj_core::oracle::{
    brute_relative_minimal_separators, brute_vertex_sets, coset_enumerate, oracle_w0_sigma,
};
use coxjsj_core::separators::relative_minimal_separators;
use coxjsj_core::twist::{canonical_key, w0_automorphism, TwistOrbit};
use coxjsj_core::{CoxeterSystem, Error, GeneratorSubset, VerificationReport};
use serde_json::{json, Value};

pub const DEFAULT_RANK_BOUND: usize = coxjsj_core::oracle::DEFAULT_RANK_BOUND;
pub const DEFAULT_ORDER_BOUND: usize = coxjsj_core::oracle::DEFAULT_ORDER_BOUND;

fn sorted_labels(gog: &coxjsj_core::jsj::GraphOfGroups) -> Vec<GeneratorSubset> {
    let mut all = gog.vertex_labels().to_vec();
    all.extend(gog.edge_labels());
    all.sort();
    all
}

/// Every oracle comparison that applies at the given bounds. Systems above
/// the rank bound skip the exhaustive comparisons rather than failing.
pub fn verify_system(
    sys: &CoxeterSystem,
    rank_bound: usize,
    order_bound: usize,
) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new();

    let gog = decompose(sys)?;
    for check in gog.validate(sys)?.checks {
        report.push(format!("tree:{}", check.name), check.pass, check.witness);
    }

    let fast = decompose_fast(sys)?;
    report.push(
        "fast-decomposition-agrees",
        sorted_labels(&fast) == sorted_labels(&gog),
        None,
    );

    for check in check_chordal_equivalence(sys)?.checks {
        report.push(format!("chordal:{}", check.name), check.pass, check.witness);
    }

    if sys.rank() <= rank_bound {
        let brute = brute_vertex_sets(sys, rank_bound)?;
        report.push("vertex-sets-match-oracle", vertex_sets(sys)? == brute, None);
        let brute = brute_relative_minimal_separators(sys, rank_bound)?;
        report.push(
            "separators-match-oracle",
            relative_minimal_separators(sys) == brute,
            None,
        );

        let gens = sys.generators();
        let mut mismatches = Vec::new();
        for mask in 0u64..(1 << sys.rank()) {
            let c: GeneratorSubset = gens
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, g)| g.clone())
                .collect();
            let Some(labels) = sys.finite_type(&c)? else {
                continue;
            };
            let order: u128 = labels.iter().map(|l| l.order()).product();
            if order > order_bound as u128 {
                continue;
            }
            let table = coset_enumerate(sys, &c, order_bound)?;
            if table.order() as u128 != order
                || oracle_w0_sigma(&table, &c)? != w0_automorphism(sys, &c)?
            {
                mismatches.push(c.to_string());
            }
        }
        report.push(
            "w0-matches-oracle",
            mismatches.is_empty(),
            (!mismatches.is_empty()).then(|| mismatches.join(" ")),
        );
    }

    Ok(report)
}

fn label_types<'a>(
    sys: &CoxeterSystem,
    labels: impl IntoIterator<Item = &'a GeneratorSubset>,
) -> Result<Vec<String>, Error> {
    let mut types = labels
        .into_iter()
        .map(|l| Ok(canonical_key(&sys.induced_subsystem(l)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    types.sort();
    Ok(types)
}

/// The twist-orbit invariants: every member decomposes into the same number
/// of vertices, the same multiset of vertex-label diagram types, and the
/// same set of edge-label diagram types.
pub fn orbit_invariants(
    sys: &CoxeterSystem,
    orbit: &TwistOrbit,
) -> Result<VerificationReport, Error> {
    let reference = decompose(sys)?;
    let vertex_types = label_types(sys, reference.vertex_labels())?;
    let edge_types: BTreeSet<String> = label_types(sys, &reference.edge_labels())?
        .into_iter()
        .collect();

    let mut report = VerificationReport::new();
    let mut bad_valid = Vec::new();
    let mut bad_vertices = Vec::new();
    let mut bad_edges = Vec::new();
    for (i, member) in orbit.members.iter().enumerate() {
        let gog = decompose(member)?;
        if !gog.validate(member)?.overall() {
            bad_valid.push(i.to_string());
        }
        if label_types(member, gog.vertex_labels())? != vertex_types {
            bad_vertices.push(i.to_string());
        }
        let types: BTreeSet<String> = label_types(member, &gog.edge_labels())?
            .into_iter()
            .collect();
        if types != edge_types {
            bad_edges.push(i.to_string());
        }
    }
    let witness =
        |bad: Vec<String>| (!bad.is_empty()).then(|| format!("members {}", bad.join(" ")));
    report.push(
        "members-decompose-validly",
        bad_valid.is_empty(),
        witness(bad_valid),
    );
    report.push(
        "vertex-types-constant",
        bad_vertices.is_empty(),
        witness(bad_vertices),
    );
    report.push(
        "edge-types-constant",
        bad_edges.is_empty(),
        witness(bad_edges),
    );
    Ok(report)
}

/// The report as JSON: overall flag plus one object per check.
pub fn report_value(report: &VerificationReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| match &c.witness {
            Some(w) => json!({ "name": c.name, "pass": c.pass, "witness": w }),
            None => json!({ "name": c.name, "pass": c.pass }),
        })
        .collect();
    json!({ "overall": report.overall(), "checks": checks })
}
