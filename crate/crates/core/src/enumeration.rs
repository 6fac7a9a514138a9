//! Binary-addition enumeration of state vectors.
//!
//! Vectors are produced in counting order over the mutable coordinates,
//! lowest coordinate toggling fastest: all `m` arcs in AOA mode, nodes
//! `2..n` in AON mode with both terminals pinned to 1. The cursor keeps only
//! the current vector, and can start at any position so disjoint index
//! ranges can be walked independently.

use crate::error::{Error, Result};
use crate::model::{Mode, Network, StateVector};

/// Number of vectors in a full enumeration with `bits` mutable coordinates.
pub fn vector_count(bits: usize) -> Result<u64> {
    if bits >= 64 {
        return Err(Error::TooLarge { bits, limit: 63 });
    }
    Ok(1u64 << bits)
}

/// Walks state vectors by repeated binary addition.
#[derive(Debug, Clone)]
pub struct BatCursor {
    current: StateVector,
    /// First and last mutable coordinate, 1-based and inclusive. `first > last`
    /// when nothing can change.
    first: usize,
    last: usize,
    position: u64,
    /// Vectors left to yield, counting the current one; `None` runs to carry-out.
    remaining: Option<u64>,
    started: bool,
    exhausted: bool,
}

impl BatCursor {
    /// All `2^m` arc-state vectors of an `m`-arc network.
    pub fn aoa(arcs: usize) -> Result<Self> {
        if arcs < 1 {
            return Err(Error::NoArcs);
        }
        Ok(Self::over(StateVector::zeros(Mode::Aoa, arcs), 1, arcs))
    }

    /// All `2^(n-2)` node-state vectors of an `n`-node network.
    pub fn aon(nodes: usize) -> Result<Self> {
        if nodes < 2 {
            return Err(Error::TooFewNodes(nodes));
        }
        Ok(Self::over(
            StateVector::zeros(Mode::Aon, nodes),
            2,
            nodes - 1,
        ))
    }

    /// Full enumeration matching `network`'s mode.
    pub fn for_network(network: &Network) -> Result<Self> {
        match network.mode() {
            Mode::Aoa => Self::aoa(network.arc_count()),
            Mode::Aon => Self::aon(network.node_count()),
        }
    }

    fn over(zero: StateVector, first: usize, last: usize) -> Self {
        let bits = (last + 1).saturating_sub(first);
        Self {
            current: zero,
            first,
            last,
            position: 0,
            remaining: vector_count(bits).ok(),
            started: false,
            exhausted: false,
        }
    }

    /// Number of mutable coordinates.
    pub fn bits(&self) -> usize {
        (self.last + 1).saturating_sub(self.first)
    }

    /// Restricts the walk to positions `start..start + len` (0-based,
    /// clipped at the end of the enumeration).
    pub fn with_range(mut self, start: u64, len: u64) -> Result<Self> {
        let total = vector_count(self.bits())?;
        if start > total {
            return Err(Error::StartOutOfRange { start, total });
        }
        for j in 0..self.bits() {
            self.current.set(self.first + j, start >> j & 1 == 1);
        }
        self.position = start;
        self.remaining = Some(len.min(total - start));
        self.started = false;
        self.exhausted = false;
        Ok(self)
    }

    /// 0-based position of the vector most recently yielded.
    pub fn position(&self) -> u64 {
        self.position
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    /// Yields the next vector by reference, without cloning.
    pub fn next_vector(&mut self) -> Option<&StateVector> {
        if self.exhausted {
            return None;
        }
        if let Some(left) = self.remaining {
            if left == 0 {
                self.exhausted = true;
                return None;
            }
        }
        if self.started {
            if !self.add_one() {
                self.exhausted = true;
                return None;
            }
            self.position += 1;
        }
        self.started = true;
        if let Some(left) = self.remaining.as_mut() {
            *left -= 1;
        }
        Some(&self.current)
    }

    /// Adds one to the current vector. Returns `false` on carry-out past the
    /// last mutable coordinate, which means every vector has been seen.
    fn add_one(&mut self) -> bool {
        let mut k = self.first;
        while k <= self.last {
            if !self.current.get(k) {
                self.current.set(k, true);
                return true;
            }
            self.current.set(k, false);
            k += 1;
        }
        false
    }
}

impl Iterator for BatCursor {
    type Item = StateVector;

    fn next(&mut self) -> Option<StateVector> {
        self.next_vector().cloned()
    }
}

pub fn enumerate_aoa(arcs: usize) -> Result<BatCursor> {
    BatCursor::aoa(arcs)
}

pub fn enumerate_aon(nodes: usize) -> Result<BatCursor> {
    BatCursor::aon(nodes)
}
