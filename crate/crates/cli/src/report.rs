//! Runs a problem through the engine and renders the text report.

use std::fmt::Write;

use relcalc_core::{
    exact_reliability, mc_reliability_parallel, ExactOptions, Mode, DEFAULT_MAX_BITS,
};

use crate::error::CliError;
use crate::problem::ProblemFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub trace: bool,
    /// Monte Carlo sample count; `None` skips the estimate.
    pub mc_samples: Option<u64>,
    pub seed: u64,
    pub workers: usize,
    pub max_bits: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            trace: false,
            mc_samples: None,
            seed: 0,
            workers: 1,
            max_bits: DEFAULT_MAX_BITS,
        }
    }
}

/// Resolves rated components, computes the exact reliability and renders
/// the report. The last line is always `R = <value>` with six decimals.
pub fn run(problem: &ProblemFile, options: &RunOptions) -> Result<String, CliError> {
    let network = problem.network()?;
    let resolved = problem.ratings()?.resolve()?;
    let dist = problem.distribution(&network, &resolved)?;
    let exact = ExactOptions {
        max_bits: options.max_bits,
        trace: options.trace,
        workers: options.workers,
    };
    let report = exact_reliability(&network, &dist, &exact)?;
    let label = match network.mode() {
        Mode::Aoa => "arc",
        Mode::Aon => "node",
    };

    // Writing into a String cannot fail.
    let mut out = String::new();
    let _ = writeln!(
        out,
        "mode {}, {} nodes, {} arcs, {} mutable components",
        network.mode(),
        network.node_count(),
        network.arc_count(),
        network.mutable_count()
    );

    if !resolved.is_empty() {
        let _ = writeln!(
            out,
            "\nuncertain components ({} experts)",
            problem.uncertain[0].1.len()
        );
        let _ = writeln!(
            out,
            "{label:>6}  {:>9}  {:>9}  {:>9}  {:>9}  {:>9}  {:>9}",
            "FPS_L", "FPS_R", "FPS", "k", "FFR", "R"
        );
        for (component, r) in &resolved {
            let k = r.k.map_or_else(|| "-".to_string(), |k| format!("{k:.6}"));
            let _ = writeln!(
                out,
                "{component:>6}  {:>9.6}  {:>9.6}  {:>9.6}  {k:>9}  {:>9.6}  {:>9.6}",
                r.fps_left, r.fps_right, r.fps, r.ffr, r.reliability
            );
        }
    }

    let _ = writeln!(out, "\nstate distribution");
    let _ = writeln!(out, "{label:>6}  {:>9}  source", "p");
    for (component, p) in dist.entries() {
        let source = if resolved.iter().any(|(k, _)| *k == component) {
            "fuzzy"
        } else {
            "crisp"
        };
        let _ = writeln!(out, "{component:>6}  {p:>9.6}  {source}");
    }

    let _ = writeln!(
        out,
        "\nvectors: {} total, {} connected",
        report.total_vectors, report.connected_vectors
    );

    if let Some(rows) = &report.trace {
        let _ = writeln!(out, "\ntrace");
        let width = network.vector_len().max(1);
        let _ = writeln!(out, "{:>8}  {:<width$}  {:>12}  verdict", "i", "X", "Pr(X)");
        for row in rows {
            let probability = if row.verdict.is_connected() {
                format!("{:.6e}", row.probability)
            } else {
                String::new()
            };
            let verdict = if row.verdict.is_connected() {
                "connected"
            } else {
                "disconnected"
            };
            let _ = writeln!(
                out,
                "{:>8}  {:<width$}  {probability:>12}  {verdict}",
                row.index,
                row.vector.to_bit_string()
            );
        }
    }

    if let Some(samples) = options.mc_samples {
        let est = mc_reliability_parallel(&network, &dist, samples, options.seed, options.workers)?;
        let _ = writeln!(
            out,
            "\nmonte carlo: estimate = {:.6}, std_error = {:.6}, samples = {}, seed = {}",
            est.estimate, est.std_error, est.samples, est.seed
        );
    }

    let _ = writeln!(out, "R = {:.6}", report.reliability);
    Ok(out)
}
