//! Source-to-sink connectivity of a state vector.
//!
//! The layered search grows node layers outward from node 1: layer `i`
//! holds the unvisited nodes reachable through a working component from
//! layer `i - 1`. It stops as soon as the sink is reached or a layer comes
//! out empty. Each call costs `O(n + m)`.
//!
//! [`dfs_connected`] answers the same question with a depth-first walk over
//! the vector's subgraph and serves as an independent check.

use crate::error::{Error, Result};
use crate::model::{vector_subgraph, Mode, Network, StateVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Connected,
    Disconnected,
}

impl Verdict {
    pub fn is_connected(self) -> bool {
        self == Verdict::Connected
    }

    fn from_bool(connected: bool) -> Self {
        if connected {
            Verdict::Connected
        } else {
            Verdict::Disconnected
        }
    }
}

/// Layers produced by one layered search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerTrace {
    /// `layers[0] == [1]`; each layer is sorted ascending. When the sink is
    /// reached the search halts and the final layer is just `[n]`.
    pub layers: Vec<Vec<usize>>,
    /// Union of all layers, ascending.
    pub visited: Vec<usize>,
    pub verdict: Verdict,
}

/// Reusable buffers for repeated layered searches over one network.
#[derive(Debug, Clone, Default)]
pub struct LayeredSearch {
    visited: Vec<bool>,
    frontier: Vec<usize>,
    next: Vec<usize>,
}

impl LayeredSearch {
    pub fn new(network: &Network) -> Self {
        Self {
            visited: vec![false; network.node_count()],
            frontier: Vec::with_capacity(network.node_count()),
            next: Vec::with_capacity(network.node_count()),
        }
    }

    /// Verdict only. `x` must already be valid for `network`.
    pub fn is_connected(&mut self, network: &Network, x: &StateVector) -> bool {
        self.run(network, x, None)
    }

    /// Validates `x`, then runs the search while recording layers.
    pub fn trace(&mut self, network: &Network, x: &StateVector) -> Result<LayerTrace> {
        network.check_vector(x)?;
        let mut layers = Vec::new();
        let connected = self.run(network, x, Some(&mut layers));
        let mut visited: Vec<usize> = layers.iter().flatten().copied().collect();
        visited.sort_unstable();
        Ok(LayerTrace {
            layers,
            visited,
            verdict: Verdict::from_bool(connected),
        })
    }

    fn run(
        &mut self,
        network: &Network,
        x: &StateVector,
        mut layers: Option<&mut Vec<Vec<usize>>>,
    ) -> bool {
        let sink = network.sink();
        let aoa = network.mode() == Mode::Aoa;
        self.visited.clear();
        self.visited.resize(network.node_count(), false);
        self.frontier.clear();
        self.frontier.push(network.source());
        self.visited[network.source() - 1] = true;
        if let Some(layers) = layers.as_deref_mut() {
            layers.push(self.frontier.clone());
        }
        loop {
            self.next.clear();
            for &u in &self.frontier {
                for &(v, arc) in network.neighbors(u) {
                    let working = if aoa { x.get(arc + 1) } else { x.get(v) };
                    if working && !self.visited[v - 1] {
                        self.visited[v - 1] = true;
                        self.next.push(v);
                    }
                }
            }
            if self.visited[sink - 1] {
                if let Some(layers) = layers.as_deref_mut() {
                    layers.push(vec![sink]);
                }
                return true;
            }
            if self.next.is_empty() {
                return false;
            }
            if let Some(layers) = layers.as_deref_mut() {
                let mut layer = self.next.clone();
                layer.sort_unstable();
                layers.push(layer);
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
    }
}

fn require_mode(network: &Network, mode: Mode) -> Result<()> {
    if network.mode() != mode {
        return Err(Error::ModeMismatch {
            expected: mode,
            found: network.mode(),
        });
    }
    Ok(())
}

/// Layered search on an arc-failure network.
pub fn plsa_aoa(network: &Network, x: &StateVector) -> Result<(Verdict, LayerTrace)> {
    require_mode(network, Mode::Aoa)?;
    plsa(network, x)
}

/// Layered search on a node-failure network.
pub fn plsa_aon(network: &Network, x: &StateVector) -> Result<(Verdict, LayerTrace)> {
    require_mode(network, Mode::Aon)?;
    plsa(network, x)
}

/// Layered search in whichever mode `network` uses.
pub fn plsa(network: &Network, x: &StateVector) -> Result<(Verdict, LayerTrace)> {
    let trace = LayeredSearch::new(network).trace(network, x)?;
    Ok((trace.verdict, trace))
}

/// Depth-first reachability over the subgraph left by `x`.
pub fn dfs_connected(network: &Network, x: &StateVector) -> Result<Verdict> {
    let sub = vector_subgraph(network, x)?;
    let n = sub.node_count();
    let mut adjacency = vec![Vec::new(); n + 1];
    for &(i, j) in sub.arcs() {
        adjacency[i].push(j);
        adjacency[j].push(i);
    }
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(u) = stack.pop() {
        if u == n {
            return Ok(Verdict::Connected);
        }
        for &v in &adjacency[u] {
            if !seen[v] && sub.is_node_up(v) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    Ok(Verdict::Disconnected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::BatCursor;
    use proptest::prelude::*;

    fn bridge() -> Network {
        Network::new(
            5,
            [(1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5)],
            Mode::Aoa,
        )
        .unwrap()
    }

    fn three_chains() -> Network {
        Network::new(
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
        .unwrap()
    }

    fn aoa(bits: &[u8]) -> StateVector {
        StateVector::from_bits(Mode::Aoa, bits).unwrap()
    }

    fn aon(bits: &[u8]) -> StateVector {
        StateVector::from_bits(Mode::Aon, bits).unwrap()
    }

    #[test]
    fn mixed_vector_layers() {
        let (verdict, trace) = plsa_aoa(&bridge(), &aoa(&[1, 1, 0, 1, 1, 0])).unwrap();
        assert_eq!(verdict, Verdict::Connected);
        assert_eq!(trace.layers, vec![vec![1], vec![2, 3], vec![5]]);
        assert_eq!(trace.visited, vec![1, 2, 3, 5]);
    }

    #[test]
    fn all_arcs_down_is_disconnected() {
        let (verdict, trace) = plsa_aoa(&bridge(), &aoa(&[0; 6])).unwrap();
        assert_eq!(verdict, Verdict::Disconnected);
        assert_eq!(trace.layers, vec![vec![1]]);
    }

    #[test]
    fn path_through_node_four() {
        let (verdict, trace) = plsa_aoa(&bridge(), &aoa(&[0, 0, 1, 1, 1, 0])).unwrap();
        assert_eq!(verdict, Verdict::Connected);
        assert_eq!(trace.layers, vec![vec![1], vec![4], vec![2], vec![5]]);
    }

    #[test]
    fn aon_chains() {
        let net = three_chains();
        let (verdict, trace) = plsa_aon(&net, &aon(&[1, 1, 0, 0, 1, 0, 0, 1])).unwrap();
        assert_eq!(verdict, Verdict::Connected);
        assert_eq!(trace.layers, vec![vec![1], vec![2], vec![5], vec![8]]);
        let (verdict, _) = plsa_aon(&net, &aon(&[1, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(verdict, Verdict::Disconnected);
        let (verdict, _) = plsa_aon(&net, &aon(&[1, 0, 0, 1, 1, 0, 0, 1])).unwrap();
        assert_eq!(verdict, Verdict::Disconnected);
    }

    #[test]
    fn two_node_aon() {
        let net = Network::new(2, [(1, 2)], Mode::Aon).unwrap();
        let (verdict, trace) = plsa_aon(&net, &aon(&[1, 1])).unwrap();
        assert_eq!(verdict, Verdict::Connected);
        assert_eq!(trace.layers, vec![vec![1], vec![2]]);
    }

    #[test]
    fn rejects_wrong_inputs() {
        let net = bridge();
        assert!(matches!(
            plsa_aon(&net, &aoa(&[1; 6])),
            Err(Error::ModeMismatch { .. })
        ));
        assert!(matches!(
            plsa_aoa(&net, &aoa(&[1; 5])),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            dfs_connected(&net, &aoa(&[1; 7])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn dfs_agrees_on_examples() {
        let net = bridge();
        for x in BatCursor::for_network(&net).unwrap() {
            assert_eq!(
                plsa_aoa(&net, &x).unwrap().0,
                dfs_connected(&net, &x).unwrap()
            );
        }
        let net = three_chains();
        for x in BatCursor::for_network(&net).unwrap() {
            assert_eq!(
                plsa_aon(&net, &x).unwrap().0,
                dfs_connected(&net, &x).unwrap()
            );
        }
        assert!(dfs_connected(&bridge(), &aoa(&[1; 6]))
            .unwrap()
            .is_connected());
    }

    fn arb_network() -> impl Strategy<Value = Network> {
        (2usize..=7, any::<bool>()).prop_flat_map(|(n, aon_mode)| {
            let pairs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
                .collect();
            let max = pairs.len().min(10);
            proptest::sample::subsequence(pairs, 1..=max).prop_map(move |arcs| {
                let mode = if aon_mode { Mode::Aon } else { Mode::Aoa };
                Network::new(n, arcs, mode).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn layers_are_well_formed(net in arb_network()) {
            let mut search = LayeredSearch::new(&net);
            for x in BatCursor::for_network(&net).unwrap() {
                let trace = search.trace(&net, &x).unwrap();
                prop_assert_eq!(trace.verdict, dfs_connected(&net, &x).unwrap());
                prop_assert_eq!(&trace.layers[0], &vec![1]);
                let sink_layers = trace.layers.iter().filter(|l| l.contains(&net.sink())).count();
                prop_assert_eq!(sink_layers, trace.verdict.is_connected() as usize);
                if trace.verdict.is_connected() {
                    prop_assert!(trace.layers.last().unwrap().contains(&net.sink()));
                }
                let mut union: Vec<usize> = trace.layers.concat();
                let before = union.len();
                union.sort_unstable();
                union.dedup();
                prop_assert_eq!(union.len(), before);
                prop_assert_eq!(&union, &trace.visited);
                for i in 1..trace.layers.len() {
                    let earlier: Vec<usize> = trace.layers[..i - 1].concat();
                    for &v in &trace.layers[i] {
                        let linked = |u: usize| net.neighbors(u).iter().any(|&(w, arc)| {
                            w == v && match net.mode() {
                                Mode::Aoa => x.get(arc + 1),
                                Mode::Aon => x.get(v),
                            }
                        });
                        prop_assert!(trace.layers[i - 1].iter().any(|&u| linked(u)));
                        prop_assert!(!earlier.iter().any(|&u| linked(u)));
                    }
                }
            }
        }

        #[test]
        fn connectivity_is_monotone(net in arb_network()) {
            let vectors: Vec<_> = BatCursor::for_network(&net).unwrap().collect();
            let mut search = LayeredSearch::new(&net);
            let verdicts: Vec<bool> = vectors.iter().map(|x| search.is_connected(&net, x)).collect();
            for (x, &cx) in vectors.iter().zip(&verdicts) {
                if !cx {
                    continue;
                }
                for (y, &cy) in vectors.iter().zip(&verdicts) {
                    if x.is_subset_of(y) {
                        prop_assert!(cy);
                    }
                }
            }
        }
    }
}
