//! Exact two-terminal reliability by full enumeration, plus a Monte Carlo
//! estimator used as a statistical cross-check.

use std::thread;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::{dfs_connected, LayeredSearch, Verdict};
use crate::enumeration::{vector_count, BatCursor};
use crate::error::{Error, Result};
use crate::model::{Network, StateDistribution, StateVector};
use crate::summation::CompensatedSum;

pub const DEFAULT_MAX_BITS: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    /// Largest number of mutable components accepted.
    pub max_bits: usize,
    /// Keep one [`TraceRow`] per enumerated vector.
    pub trace: bool,
    /// Number of threads walking disjoint index ranges.
    pub workers: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        Self {
            max_bits: DEFAULT_MAX_BITS,
            trace: false,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceRow {
    /// 1-based position in enumeration order.
    pub index: u64,
    pub vector: StateVector,
    pub probability: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReliabilityReport {
    pub reliability: f64,
    /// Total probability of the disconnected vectors.
    pub unreliability: f64,
    pub total_vectors: u64,
    pub connected_vectors: u64,
    pub trace: Option<Vec<TraceRow>>,
}

/// Probability of observing exactly `x` when components fail independently.
/// AON terminals contribute a factor of 1.
pub fn vector_probability(x: &StateVector, dist: &StateDistribution) -> Result<f64> {
    if x.mode() != dist.mode() {
        return Err(Error::ModeMismatch {
            expected: dist.mode(),
            found: x.mode(),
        });
    }
    if x.len() != dist.vector_len() {
        return Err(Error::LengthMismatch {
            expected: dist.vector_len(),
            found: x.len(),
        });
    }
    Ok(probability_unchecked(x, dist))
}

#[inline]
fn probability_unchecked(x: &StateVector, dist: &StateDistribution) -> f64 {
    dist.entries()
        .map(|(k, p)| if x.get(k) { p } else { 1.0 - p })
        .product()
}

fn check_distribution(network: &Network, dist: &StateDistribution) -> Result<()> {
    if dist.mode() != network.mode() {
        return Err(Error::ModeMismatch {
            expected: network.mode(),
            found: dist.mode(),
        });
    }
    if dist.vector_len() != network.vector_len() {
        return Err(Error::LengthMismatch {
            expected: network.vector_len(),
            found: dist.vector_len(),
        });
    }
    Ok(())
}

#[derive(Default)]
struct Partial {
    connected: CompensatedSum,
    disconnected: CompensatedSum,
    connected_vectors: u64,
    rows: Vec<TraceRow>,
}

fn walk_range(
    network: &Network,
    dist: &StateDistribution,
    start: u64,
    len: u64,
    trace: bool,
) -> Result<Partial> {
    let mut cursor = BatCursor::for_network(network)?.with_range(start, len)?;
    let mut search = LayeredSearch::new(network);
    let mut partial = Partial::default();
    let mut index = start;
    while let Some(x) = cursor.next_vector() {
        index += 1;
        let probability = probability_unchecked(x, dist);
        let connected = search.is_connected(network, x);
        if connected {
            partial.connected.add(probability);
            partial.connected_vectors += 1;
        } else {
            partial.disconnected.add(probability);
        }
        if trace {
            partial.rows.push(TraceRow {
                index,
                vector: x.clone(),
                probability,
                verdict: if connected {
                    Verdict::Connected
                } else {
                    Verdict::Disconnected
                },
            });
        }
    }
    Ok(partial)
}

/// Sums the probability of every connected state vector.
///
/// Vectors are enumerated in counting order and tested with the layered
/// search. With several workers the index space is cut into contiguous
/// ranges and the compensated partial sums are merged in range order, so a
/// given worker count always yields the same bits.
pub fn exact_reliability(
    network: &Network,
    dist: &StateDistribution,
    options: &ExactOptions,
) -> Result<ReliabilityReport> {
    check_distribution(network, dist)?;
    let bits = network.mutable_count();
    if bits > options.max_bits {
        return Err(Error::TooLarge {
            bits,
            limit: options.max_bits,
        });
    }
    let total = vector_count(bits)?;
    let workers = (options.workers.max(1) as u64).min(total);
    let chunk = total.div_ceil(workers);

    let partials: Vec<Result<Partial>> = if workers == 1 {
        vec![walk_range(network, dist, 0, total, options.trace)]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let start = (w * chunk).min(total);
                    scope.spawn(move || walk_range(network, dist, start, chunk, options.trace))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        })
    };

    let mut connected = CompensatedSum::new();
    let mut disconnected = CompensatedSum::new();
    let mut connected_vectors = 0;
    let mut rows = Vec::new();
    for partial in partials {
        let partial = partial?;
        connected.merge(&partial.connected);
        disconnected.merge(&partial.disconnected);
        connected_vectors += partial.connected_vectors;
        rows.extend(partial.rows);
    }
    Ok(ReliabilityReport {
        reliability: connected.value(),
        unreliability: disconnected.value(),
        total_vectors: total,
        connected_vectors,
        trace: options.trace.then_some(rows),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    pub samples: u64,
    pub connected: u64,
    /// `sqrt(estimate * (1 - estimate) / samples)`.
    pub std_error: f64,
    pub seed: u64,
}

/// Monte Carlo estimate on a single stream.
pub fn mc_reliability(
    network: &Network,
    dist: &StateDistribution,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    mc_reliability_parallel(network, dist, samples, seed, 1)
}

/// Monte Carlo estimate split over `workers` threads. Worker `w` draws
/// from ChaCha8 seeded with `seed` on stream `w`, so the result depends only
/// on `(samples, seed, workers)`. Verdicts come from the depth-first check.
pub fn mc_reliability_parallel(
    network: &Network,
    dist: &StateDistribution,
    samples: u64,
    seed: u64,
    workers: usize,
) -> Result<McEstimate> {
    if samples == 0 {
        return Err(Error::NoSamples);
    }
    check_distribution(network, dist)?;
    let workers = (workers.max(1) as u64).min(samples);
    let share = |w: u64| samples / workers + u64::from(w < samples % workers);

    let counts: Vec<Result<u64>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| scope.spawn(move || sample_stream(network, dist, share(w), seed, w)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sampling worker panicked"))
            .collect()
    });
    let mut connected = 0;
    for count in counts {
        connected += count?;
    }
    let estimate = connected as f64 / samples as f64;
    Ok(McEstimate {
        estimate,
        samples,
        connected,
        std_error: (estimate * (1.0 - estimate) / samples as f64).sqrt(),
        seed,
    })
}

fn sample_stream(
    network: &Network,
    dist: &StateDistribution,
    samples: u64,
    seed: u64,
    stream: u64,
) -> Result<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let entries: Vec<(usize, f64)> = dist.entries().collect();
    let mut x = StateVector::zeros(network.mode(), network.vector_len());
    let mut connected = 0;
    for _ in 0..samples {
        for &(k, p) in &entries {
            x.set(k, rng.random::<f64>() < p);
        }
        if dfs_connected(network, &x)?.is_connected() {
            connected += 1;
        }
    }
    Ok(connected)
}
