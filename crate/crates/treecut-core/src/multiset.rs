//! Multisets of tree vertices: which points carry how many copies.

use alloc::vec;
use alloc::vec::Vec;

use crate::tree::TreeError;

/// A multiset of points located at tree vertices.
///
/// `masses[v]` is the number of copies at vertex `v` (zero for vertices not
/// in the multiset). The empty multiset is allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMultiset {
    masses: Vec<usize>,
    total_mass: usize,
}

impl VertexMultiset {
    /// Builds a multiset over `vertex_count` vertices from `(vertex, count)`
    /// entries. Entries for the same vertex accumulate; zero counts are
    /// ignored.
    pub fn new(
        vertex_count: usize,
        entries: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, TreeError> {
        let mut masses = vec![0; vertex_count];
        for (v, count) in entries {
            if v >= vertex_count {
                return Err(TreeError::BadVertexId);
            }
            masses[v] += count;
        }
        Ok(Self::from_masses(masses))
    }

    /// Wraps a dense per-vertex mass vector.
    pub fn from_masses(masses: Vec<usize>) -> Self {
        let total_mass = masses.iter().sum();
        VertexMultiset { masses, total_mass }
    }

    pub fn vertex_count(&self) -> usize {
        self.masses.len()
    }

    /// Copies at vertex `v`.
    pub fn mass(&self, v: usize) -> usize {
        self.masses[v]
    }

    pub fn masses(&self) -> &[usize] {
        &self.masses
    }

    /// Total number of points, counting multiplicity.
    pub fn total_mass(&self) -> usize {
        self.total_mass
    }

    /// Vertices with at least one copy, ascending.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.masses
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(v, &m)| (v, m))
    }
}
