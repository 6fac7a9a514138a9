//! Network fixtures shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relcalc_core::{Mode, Network, StateDistribution};

/// Three node-disjoint chains between nodes 1 and 8.
pub fn three_chains() -> (Network, StateDistribution) {
    let net = Network::new(
        8,
        [
            (1, 2),
            (2, 5),
            (5, 8),
            (1, 3),
            (3, 6),
            (6, 8),
            (1, 4),
            (4, 7),
            (7, 8),
        ],
        Mode::Aon,
    )
    .expect("valid topology");
    let dist = StateDistribution::new(
        &net,
        [
            (2, 0.80),
            (3, 0.940504),
            (4, 0.995),
            (5, 0.987185),
            (6, 0.90),
            (7, 0.88),
        ],
    )
    .expect("valid distribution");
    (net, dist)
}

/// Random graph on `nodes` nodes where each pair is joined with probability
/// `density`, plus a Hamiltonian path so the terminals can connect. Every
/// mutable component gets a probability in `[0.5, 1)`.
pub fn random_instance(
    nodes: usize,
    density: f64,
    mode: Mode,
    seed: u64,
) -> (Network, StateDistribution) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs: Vec<(usize, usize)> = (1..nodes).map(|i| (i, i + 1)).collect();
    for i in 1..=nodes {
        for j in i + 2..=nodes {
            if rng.random_bool(density) {
                arcs.push((i, j));
            }
        }
    }
    let net = Network::new(nodes, arcs, mode).expect("valid topology");
    let dist = StateDistribution::new(
        &net,
        net.mutable_components()
            .map(|k| (k, rng.random_range(0.5..1.0))),
    )
    .expect("valid distribution");
    (net, dist)
}
