//! Network topology, state vectors and vector-induced subgraphs.
//!
//! Nodes are labelled `1..=n` with node `1` the source and node `n` the
//! sink. Components are arcs in [`Mode::Aoa`] (numbered `1..=m` in input
//! order) and nodes in [`Mode::Aon`], where the two terminals are perfectly
//! reliable and only nodes `2..n` may fail.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fuzzy::{resolve_uncertain_component, DefuzzificationResult, LinguisticVariable};

/// Which kind of component can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Activity-on-arc: arcs fail, nodes are perfect.
    Aoa,
    /// Activity-on-node: nodes fail, arcs are perfect.
    Aon,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Aoa => f.write_str("AOA"),
            Mode::Aon => f.write_str("AON"),
        }
    }
}

/// An undirected, loop-free, simple graph with a fixed terminal pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    nodes: usize,
    mode: Mode,
    /// Normalized `(low, high)` pairs in input order; position `k - 1` is arc `a_k`.
    arcs: Vec<(usize, usize)>,
    /// `adjacency[v - 1]` holds `(neighbour, arc position)` sorted by neighbour.
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Network {
    /// Validates and builds a network. Each arc is stored once with its
    /// endpoints ordered `low < high`; arc numbering follows input order.
    pub fn new<I>(nodes: usize, arcs: I, mode: Mode) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if nodes < 2 {
            return Err(Error::TooFewNodes(nodes));
        }
        let mut normalized = Vec::new();
        let mut adjacency = vec![Vec::new(); nodes];
        for (i, j) in arcs {
            for endpoint in [i, j] {
                if endpoint == 0 || endpoint > nodes {
                    return Err(Error::EndpointOutOfRange { endpoint, nodes });
                }
            }
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            let (low, high) = (i.min(j), i.max(j));
            if adjacency[low - 1].iter().any(|&(v, _)| v == high) {
                return Err(Error::DuplicateArc(low, high));
            }
            let position = normalized.len();
            normalized.push((low, high));
            adjacency[low - 1].push((high, position));
            adjacency[high - 1].push((low, position));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            nodes,
            mode,
            arcs: normalized,
            adjacency,
        })
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn source(&self) -> usize {
        1
    }

    pub fn sink(&self) -> usize {
        self.nodes
    }

    /// Arcs in input order as normalized `(low, high)` pairs.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Arcs sorted lexicographically by endpoints.
    pub fn sorted_arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = self.arcs.clone();
        arcs.sort_unstable();
        arcs
    }

    /// Neighbours of `node` with the 0-based position of the connecting arc,
    /// ascending by neighbour.
    pub fn neighbors(&self, node: usize) -> &[(usize, usize)] {
        &self.adjacency[node - 1]
    }

    /// Length of a state vector for this network's mode.
    pub fn vector_len(&self) -> usize {
        match self.mode {
            Mode::Aoa => self.arcs.len(),
            Mode::Aon => self.nodes,
        }
    }

    /// Components that can fail: every arc (AOA) or the interior nodes (AON).
    pub fn mutable_components(&self) -> std::ops::RangeInclusive<usize> {
        match self.mode {
            Mode::Aoa => 1..=self.arcs.len(),
            Mode::Aon => 2..=self.nodes - 1,
        }
    }

    pub fn mutable_count(&self) -> usize {
        match self.mode {
            Mode::Aoa => self.arcs.len(),
            Mode::Aon => self.nodes - 2,
        }
    }

    pub fn is_terminal(&self, node: usize) -> bool {
        node == 1 || node == self.nodes
    }

    /// Checks that `x` is a valid state vector for this network.
    pub fn check_vector(&self, x: &StateVector) -> Result<()> {
        if x.mode() != self.mode {
            return Err(Error::ModeMismatch {
                expected: self.mode,
                found: x.mode(),
            });
        }
        if x.len() != self.vector_len() {
            return Err(Error::LengthMismatch {
                expected: self.vector_len(),
                found: x.len(),
            });
        }
        if self.mode == Mode::Aon {
            for terminal in [1, self.nodes] {
                if !x.get(terminal) {
                    return Err(Error::TerminalDown(terminal));
                }
            }
        }
        Ok(())
    }
}

/// One binary state per component, coordinates numbered from 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateVector {
    mode: Mode,
    len: usize,
    words: Vec<u64>,
}

impl StateVector {
    /// All components down, except the AON terminals which are always up.
    pub fn zeros(mode: Mode, len: usize) -> Self {
        let mut x = Self {
            mode,
            len,
            words: vec![0; len.div_ceil(64)],
        };
        if mode == Mode::Aon && len > 0 {
            x.set(1, true);
            x.set(len, true);
        }
        x
    }

    pub fn ones(mode: Mode, len: usize) -> Self {
        let mut x = Self::zeros(mode, len);
        for k in 1..=len {
            x.set(k, true);
        }
        x
    }

    /// Builds a vector from explicit 0/1 coordinates.
    pub fn from_bits(mode: Mode, bits: &[u8]) -> Result<Self> {
        let mut x = Self {
            mode,
            len: bits.len(),
            words: vec![0; bits.len().div_ceil(64)],
        };
        for (k, &bit) in bits.iter().enumerate() {
            x.set(k + 1, bit != 0);
        }
        if mode == Mode::Aon {
            for terminal in [1, bits.len()] {
                if bits.is_empty() || !x.get(terminal) {
                    return Err(Error::TerminalDown(terminal));
                }
            }
        }
        Ok(x)
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// State of coordinate `k` (1-based).
    #[inline]
    pub fn get(&self, k: usize) -> bool {
        debug_assert!(k >= 1 && k <= self.len);
        let i = k - 1;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, k: usize, up: bool) {
        let i = k - 1;
        let mask = 1u64 << (i % 64);
        if up {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len).map(move |k| self.get(k))
    }

    pub fn count_up(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `true` when every coordinate up in `self` is also up in `other`.
    pub fn is_subset_of(&self, other: &StateVector) -> bool {
        self.len == other.len
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    /// Coordinates as a string of `0`/`1`, coordinate 1 first.
    pub fn to_bit_string(&self) -> String {
        self.bits().map(|b| if b { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StateVector({}, {})", self.mode, self.to_bit_string())
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, bit) in self.bits().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(if bit { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

/// The part of a network that survives under a state vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    nodes_up: Vec<bool>,
    arcs: Vec<(usize, usize)>,
    ordinals: Vec<usize>,
}

impl Subgraph {
    pub fn node_count(&self) -> usize {
        self.nodes_up.len()
    }

    pub fn is_node_up(&self, node: usize) -> bool {
        self.nodes_up[node - 1]
    }

    /// Surviving arcs in input order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// 1-based ordinals of the surviving arcs.
    pub fn arc_ordinals(&self) -> &[usize] {
        &self.ordinals
    }
}

/// Restricts `network` to the components that are up in `x`. In AOA mode
/// all nodes survive and only arcs with state 1 remain; in AON mode only
/// up nodes remain, together with arcs joining two of them.
pub fn vector_subgraph(network: &Network, x: &StateVector) -> Result<Subgraph> {
    network.check_vector(x)?;
    let nodes_up: Vec<bool> = match network.mode() {
        Mode::Aoa => vec![true; network.node_count()],
        Mode::Aon => x.bits().collect(),
    };
    let mut arcs = Vec::new();
    let mut ordinals = Vec::new();
    for (position, &(i, j)) in network.arcs().iter().enumerate() {
        let survives = match network.mode() {
            Mode::Aoa => x.get(position + 1),
            Mode::Aon => nodes_up[i - 1] && nodes_up[j - 1],
        };
        if survives {
            arcs.push((i, j));
            ordinals.push(position + 1);
        }
    }
    Ok(Subgraph {
        nodes_up,
        arcs,
        ordinals,
    })
}

/// Success probability of every mutable component.
#[derive(Debug, Clone, PartialEq)]
pub struct StateDistribution {
    mode: Mode,
    /// `probs[k - 1]` for component `k`; `None` only for AON terminals.
    probs: Vec<Option<f64>>,
}

impl StateDistribution {
    /// Every mutable component of `network` must appear exactly once, AON
    /// terminals must not appear, and every probability must lie in `[0, 1]`.
    pub fn new<I>(network: &Network, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, f64)>,
    {
        let mut probs = vec![None; network.vector_len()];
        for (component, p) in entries {
            if component == 0 || component > probs.len() {
                return Err(Error::UnknownComponent(component));
            }
            if network.mode() == Mode::Aon && network.is_terminal(component) {
                return Err(Error::TerminalComponent(component));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::ProbabilityOutOfRange { component, p });
            }
            if probs[component - 1].replace(p).is_some() {
                return Err(Error::DuplicateComponent(component));
            }
        }
        if let Some(missing) = network
            .mutable_components()
            .find(|&k| probs[k - 1].is_none())
        {
            return Err(Error::MissingComponent(missing));
        }
        Ok(Self {
            mode: network.mode(),
            probs,
        })
    }

    /// Same probability for every mutable component.
    pub fn uniform(network: &Network, p: f64) -> Result<Self> {
        Self::new(network, network.mutable_components().map(|k| (k, p)))
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Length of the state vectors this distribution describes.
    pub fn vector_len(&self) -> usize {
        self.probs.len()
    }

    pub fn get(&self, component: usize) -> Option<f64> {
        self.probs.get(component.wrapping_sub(1)).copied().flatten()
    }

    /// `(component, p)` pairs in component order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.probs
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (i + 1, p)))
    }
}

/// Linguistic ratings of the uncertainty components, one per expert.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpertRatingSet {
    experts: usize,
    entries: BTreeMap<usize, Vec<LinguisticVariable>>,
}

impl ExpertRatingSet {
    /// Every rated component must be a mutable component of `network` and
    /// every component must carry the same non-zero number of ratings.
    pub fn new<I>(network: &Network, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, Vec<LinguisticVariable>)>,
    {
        let mut map = BTreeMap::new();
        let mut experts = None;
        for (component, ratings) in entries {
            if component == 0 || component > network.vector_len() {
                return Err(Error::UnknownComponent(component));
            }
            if network.mode() == Mode::Aon && network.is_terminal(component) {
                return Err(Error::TerminalComponent(component));
            }
            if ratings.is_empty() {
                return Err(Error::NoRatings);
            }
            match experts {
                None => experts = Some(ratings.len()),
                Some(h) if h != ratings.len() => {
                    return Err(Error::ExpertCountMismatch {
                        component,
                        expected: h,
                        found: ratings.len(),
                    })
                }
                Some(_) => {}
            }
            if map.insert(component, ratings).is_some() {
                return Err(Error::DuplicateComponent(component));
            }
        }
        Ok(Self {
            experts: experts.unwrap_or(0),
            entries: map,
        })
    }

    /// Number of experts `h`; zero for an empty set.
    pub fn experts(&self) -> usize {
        self.experts
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, component: usize) -> Option<&[LinguisticVariable]> {
        self.entries.get(&component).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[LinguisticVariable])> + '_ {
        self.entries.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    /// Runs the fuzzy pipeline on every rated component, in component order.
    pub fn resolve(&self) -> Result<Vec<(usize, DefuzzificationResult)>> {
        self.iter()
            .map(|(k, ratings)| Ok((k, resolve_uncertain_component(ratings)?)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bridge() -> Network {
        Network::new(
            5,
            [(1, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5)],
            Mode::Aoa,
        )
        .unwrap()
    }

    #[test]
    fn builds_bridge() {
        let net = bridge();
        assert_eq!(net.arc_count(), 6);
        assert_eq!(net.sink(), 5);
        assert_eq!(net.neighbors(2), &[(1, 0), (4, 3), (5, 4)]);
    }

    #[test]
    fn normalizes_reversed_endpoints_but_keeps_input_order() {
        let net = Network::new(4, [(4, 3), (2, 1)], Mode::Aoa).unwrap();
        assert_eq!(net.arcs(), &[(3, 4), (1, 2)]);
        assert_eq!(net.sorted_arcs(), vec![(1, 2), (3, 4)]);
    }

    #[test]
    fn smallest_aon_network() {
        let net = Network::new(2, [(1, 2)], Mode::Aon).unwrap();
        assert_eq!(net.mutable_count(), 0);
        assert_eq!(net.vector_len(), 2);
    }

    #[test]
    fn rejects_bad_topologies() {
        assert_eq!(
            Network::new(3, [(1, 1)], Mode::Aoa),
            Err(Error::SelfLoop(1))
        );
        assert_eq!(Network::new(1, [], Mode::Aon), Err(Error::TooFewNodes(1)));
        assert_eq!(
            Network::new(3, [(1, 2), (2, 1)], Mode::Aoa),
            Err(Error::DuplicateArc(1, 2))
        );
        assert_eq!(
            Network::new(3, [(1, 4)], Mode::Aoa),
            Err(Error::EndpointOutOfRange {
                endpoint: 4,
                nodes: 3
            })
        );
        assert_eq!(
            Network::new(3, [(0, 2)], Mode::Aoa),
            Err(Error::EndpointOutOfRange {
                endpoint: 0,
                nodes: 3
            })
        );
    }

    #[test]
    fn mixed_subgraph() {
        let net = bridge();
        let x = StateVector::from_bits(Mode::Aoa, &[1, 1, 0, 1, 1, 0]).unwrap();
        let sub = vector_subgraph(&net, &x).unwrap();
        assert_eq!(sub.arc_ordinals(), &[1, 2, 4, 5]);
        assert_eq!(sub.arcs(), &[(1, 2), (1, 3), (2, 4), (2, 5)]);
    }

    #[test]
    fn all_ones_and_all_zeros_subgraphs() {
        let net = bridge();
        let full = vector_subgraph(&net, &StateVector::ones(Mode::Aoa, 6)).unwrap();
        assert_eq!(full.arcs(), net.arcs());
        let empty = vector_subgraph(&net, &StateVector::zeros(Mode::Aoa, 6)).unwrap();
        assert!(empty.arcs().is_empty());
        assert!((1..=5).all(|v| empty.is_node_up(v)));
    }

    #[test]
    fn aon_subgraph_drops_arcs_of_down_nodes() {
        let net = Network::new(4, [(1, 2), (2, 4), (1, 3), (3, 4)], Mode::Aon).unwrap();
        let x = StateVector::from_bits(Mode::Aon, &[1, 1, 0, 1]).unwrap();
        let sub = vector_subgraph(&net, &x).unwrap();
        assert_eq!(sub.arcs(), &[(1, 2), (2, 4)]);
        assert!(sub.is_node_up(1) && sub.is_node_up(4));
        assert!(!sub.is_node_up(3));
    }

    #[test]
    fn subgraph_rejects_mismatched_vectors() {
        let net = bridge();
        let short = StateVector::zeros(Mode::Aoa, 5);
        assert_eq!(
            vector_subgraph(&net, &short),
            Err(Error::LengthMismatch {
                expected: 6,
                found: 5
            })
        );
        let aon = StateVector::zeros(Mode::Aon, 6);
        assert!(matches!(
            vector_subgraph(&net, &aon),
            Err(Error::ModeMismatch { .. })
        ));
    }

    #[test]
    fn aon_vectors_pin_terminals() {
        assert_eq!(
            StateVector::from_bits(Mode::Aon, &[0, 1, 1]),
            Err(Error::TerminalDown(1))
        );
        assert_eq!(
            StateVector::from_bits(Mode::Aon, &[1, 1, 0]),
            Err(Error::TerminalDown(3))
        );
        let z = StateVector::zeros(Mode::Aon, 5);
        assert_eq!(z.to_bit_string(), "10001");
    }

    #[test]
    fn wide_vectors_span_words() {
        let mut x = StateVector::zeros(Mode::Aoa, 130);
        x.set(65, true);
        x.set(130, true);
        assert!(x.get(65) && x.get(130) && !x.get(64));
        assert_eq!(x.count_up(), 2);
    }

    #[test]
    fn distribution_coverage_rules() {
        let net = Network::new(4, [(1, 2), (2, 4), (1, 3), (3, 4)], Mode::Aon).unwrap();
        let d = StateDistribution::new(&net, [(3, 0.5), (2, 0.25)]).unwrap();
        assert_eq!(d.entries().collect::<Vec<_>>(), vec![(2, 0.25), (3, 0.5)]);
        assert_eq!(d.get(1), None);
        assert_eq!(
            StateDistribution::new(&net, [(2, 0.5)]),
            Err(Error::MissingComponent(3))
        );
        assert_eq!(
            StateDistribution::new(&net, [(1, 0.5), (2, 0.5), (3, 0.5)]),
            Err(Error::TerminalComponent(1))
        );
        assert_eq!(
            StateDistribution::new(&net, [(2, 0.5), (2, 0.5), (3, 0.5)]),
            Err(Error::DuplicateComponent(2))
        );
        assert_eq!(
            StateDistribution::new(&net, [(2, 1.5), (3, 0.5)]),
            Err(Error::ProbabilityOutOfRange {
                component: 2,
                p: 1.5
            })
        );
        assert_eq!(
            StateDistribution::new(&net, [(9, 0.5)]),
            Err(Error::UnknownComponent(9))
        );
    }

    #[test]
    fn aoa_distribution_covers_every_arc() {
        let net = bridge();
        assert_eq!(
            StateDistribution::uniform(&net, 0.9)
                .unwrap()
                .entries()
                .count(),
            6
        );
        assert_eq!(
            StateDistribution::new(&net, (1..=5).map(|k| (k, 0.5))),
            Err(Error::MissingComponent(6))
        );
    }

    #[test]
    fn rating_sets_need_equal_expert_counts() {
        use LinguisticVariable::*;
        let net = Network::new(5, [(1, 2), (2, 5), (1, 3), (3, 4), (4, 5)], Mode::Aon).unwrap();
        let set = ExpertRatingSet::new(&net, [(3, vec![VL, L]), (2, vec![H, VH])]).unwrap();
        assert_eq!(set.experts(), 2);
        assert_eq!(set.iter().map(|(k, _)| k).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(
            ExpertRatingSet::new(&net, [(2, vec![VL, L]), (3, vec![H])]),
            Err(Error::ExpertCountMismatch {
                component: 3,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            ExpertRatingSet::new(&net, [(5, vec![M])]),
            Err(Error::TerminalComponent(5))
        );
        assert_eq!(
            ExpertRatingSet::new(&net, [(2, vec![])]),
            Err(Error::NoRatings)
        );
    }
}
