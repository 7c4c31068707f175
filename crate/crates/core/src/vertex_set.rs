//! Fixed-universe bitset for vertex sets.
//!
//! Clique interiors and closures are compared by subset tests many times per
//! analysis, so they are stored as packed bit vectors over the graph's
//! vertex range.

use crate::graph::VertexId;

#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    bits: Vec<u64>,
    universe: usize,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            bits: vec![0; universe.div_ceil(64)],
            universe,
        }
    }

    pub fn from_slice(universe: usize, vs: &[VertexId]) -> Self {
        let mut s = Self::empty(universe);
        for &v in vs {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: VertexId) {
        debug_assert!((v as usize) < self.universe);
        self.bits[v as usize / 64] |= 1 << (v % 64);
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (v as usize) < self.universe && self.bits[v as usize / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    /// self ⊆ other
    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.universe as u32).filter(|&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
