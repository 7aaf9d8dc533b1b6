//! Reproducible random systems for the property and acceptance corpora.

use coxjsj_core::{CoxeterSystem, GeneratorId, OrderLabel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_EDGE_PROB: f64 = 0.6;

/// Relative weights for the label of a pair that got an edge. `winf` lets a
/// drawn edge still come out infinite, thinning dense diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LabelWeights {
    pub w2: u32,
    pub w3: u32,
    pub w4: u32,
    pub w5: u32,
    pub winf: u32,
}

impl Default for LabelWeights {
    fn default() -> Self {
        LabelWeights {
            w2: 3,
            w3: 4,
            w4: 1,
            w5: 1,
            winf: 1,
        }
    }
}

impl LabelWeights {
    fn total(&self) -> u32 {
        self.w2 + self.w3 + self.w4 + self.w5 + self.winf
    }

    fn pick(&self, roll: u32) -> OrderLabel {
        let mut r = roll;
        for (w, m) in [(self.w2, 2), (self.w3, 3), (self.w4, 4), (self.w5, 5)] {
            if r < w {
                return OrderLabel::Finite(m);
            }
            r -= w;
        }
        OrderLabel::Infinite
    }
}

/// Generator names in diagram order: one letter while they last.
pub fn generator_name(i: usize) -> String {
    match u8::try_from(i) {
        Ok(i) if i < 26 => char::from(b'a' + i).to_string(),
        _ => format!("g{}", i),
    }
}

/// A reproducible random system: each pair independently gets an edge with
/// probability `edge_prob`, then a label drawn by the weights.
pub fn random_system(
    rank: usize,
    edge_prob: f64,
    weights: LabelWeights,
    seed: u64,
) -> CoxeterSystem {
    assert!(rank >= 1, "rank must be at least 1");
    assert!(
        (0.0..=1.0).contains(&edge_prob),
        "edge probability must lie in [0, 1]"
    );
    assert!(weights.total() > 0, "weights must not all be zero");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<GeneratorId> = (0..rank)
        .map(|i| GeneratorId::new(&generator_name(i)).expect("generated names are valid"))
        .collect();
    let mut edges = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            if !rng.gen_bool(edge_prob) {
                continue;
            }
            if let OrderLabel::Finite(m) = weights.pick(rng.gen_range(0..weights.total())) {
                edges.push((names[i].clone(), names[j].clone(), OrderLabel::Finite(m)));
            }
        }
    }
    CoxeterSystem::new(names, edges).expect("generated systems are valid")
}

/// A deterministic mixed-density corpus: ranks cycle `1..=max_rank`, the
/// edge probability cycles sparse, medium, dense.
pub fn corpus(count: usize, max_rank: usize, base_seed: u64) -> Vec<CoxeterSystem> {
    (0..count)
        .map(|i| {
            let rank = 1 + i % max_rank;
            let edge_prob = [0.35, 0.6, 0.85][i % 3];
            random_system(
                rank,
                edge_prob,
                LabelWeights::default(),
                base_seed + i as u64,
            )
        })
        .collect()
}
