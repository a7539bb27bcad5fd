//! Edge-weighted trees and the shortest-path metric they induce.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Validation and lookup failures for [`WeightedTree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeError {
    /// The edge set does not connect all vertices.
    DisconnectedGraph,
    /// A self-loop, duplicate edge, or surplus edge closes a cycle.
    CycleDetected,
    NegativeWeight,
    NonFiniteWeight,
    BadVertexId,
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::DisconnectedGraph => write!(f, "edge set does not connect all vertices"),
            TreeError::CycleDetected => write!(f, "edge set contains a cycle or duplicate edge"),
            TreeError::NegativeWeight => write!(f, "edge weights must be nonnegative"),
            TreeError::NonFiniteWeight => write!(f, "edge weights must be finite"),
            TreeError::BadVertexId => write!(f, "vertex id out of range"),
        }
    }
}

impl core::error::Error for TreeError {}

/// A tree on vertices `0..n` with nonnegative real edge weights.
///
/// Distances between vertices are sums of edge weights along the unique
/// connecting path; this is the metric every solver in the crate works in.
#[derive(Debug, Clone)]
pub struct WeightedTree {
    vertex_count: usize,
    edges: Vec<(usize, usize, f64)>,
    adjacency: Vec<Vec<(usize, f64)>>,
}

impl WeightedTree {
    /// Validates a raw edge list into a tree.
    ///
    /// Requires `vertex_count >= 1`, exactly `vertex_count - 1` edges, vertex
    /// ids in range, and finite nonnegative weights. Connectivity and
    /// acyclicity are checked with a union-find over the edges.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self, TreeError> {
        if vertex_count == 0 {
            return Err(TreeError::BadVertexId);
        }
        for &(u, v, w) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(TreeError::BadVertexId);
            }
            if !w.is_finite() {
                return Err(TreeError::NonFiniteWeight);
            }
            if w < 0.0 {
                return Err(TreeError::NegativeWeight);
            }
        }
        if edges.len() > vertex_count - 1 {
            return Err(TreeError::CycleDetected);
        }
        let mut uf = UnionFind::new(vertex_count);
        for &(u, v, _) in &edges {
            if !uf.union(u, v) {
                return Err(TreeError::CycleDetected);
            }
        }
        if edges.len() < vertex_count - 1 {
            return Err(TreeError::DisconnectedGraph);
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v, w) in &edges {
            adjacency[u].push((v, w));
            adjacency[v].push((u, w));
        }
        Ok(WeightedTree {
            vertex_count,
            edges,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    /// Neighbors of `v` with the weight of the connecting edge.
    pub fn neighbors(&self, v: usize) -> &[(usize, f64)] {
        &self.adjacency[v]
    }

    /// Total weight of the unique `u`-`v` path.
    pub fn distance(&self, u: usize, v: usize) -> Result<f64, TreeError> {
        if v >= self.vertex_count {
            return Err(TreeError::BadVertexId);
        }
        Ok(self.distances_from(u)?[v])
    }

    /// Distances from `src` to every vertex, one traversal.
    pub fn distances_from(&self, src: usize) -> Result<Vec<f64>, TreeError> {
        if src >= self.vertex_count {
            return Err(TreeError::BadVertexId);
        }
        let mut dist = vec![0.0; self.vertex_count];
        let mut visited = vec![false; self.vertex_count];
        visited[src] = true;
        let mut stack = vec![src];
        while let Some(u) = stack.pop() {
            for &(v, w) in &self.adjacency[u] {
                if !visited[v] {
                    visited[v] = true;
                    dist[v] = dist[u] + w;
                    stack.push(v);
                }
            }
        }
        Ok(dist)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the components of `a` and `b`; false if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_nontrivial_tree() {
        let t = WeightedTree::new(2, vec![(0, 1, 5.0)]).unwrap();
        assert_eq!(t.vertex_count(), 2);
        assert_eq!(t.distance(0, 1).unwrap(), 5.0);
    }

    #[test]
    fn duplicate_edge_is_a_cycle() {
        let err = WeightedTree::new(3, vec![(0, 1, 1.0), (0, 1, 2.0)]).unwrap_err();
        assert_eq!(err, TreeError::CycleDetected);
    }

    #[test]
    fn self_loop_is_a_cycle() {
        let err = WeightedTree::new(2, vec![(1, 1, 1.0)]).unwrap_err();
        assert_eq!(err, TreeError::CycleDetected);
    }

    #[test]
    fn negative_weight_rejected() {
        let err = WeightedTree::new(3, vec![(0, 1, -1.0), (1, 2, 1.0)]).unwrap_err();
        assert_eq!(err, TreeError::NegativeWeight);
    }

    #[test]
    fn non_finite_weight_rejected() {
        let err = WeightedTree::new(2, vec![(0, 1, f64::NAN)]).unwrap_err();
        assert_eq!(err, TreeError::NonFiniteWeight);
        let err = WeightedTree::new(2, vec![(0, 1, f64::INFINITY)]).unwrap_err();
        assert_eq!(err, TreeError::NonFiniteWeight);
    }

    #[test]
    fn missing_edges_disconnect() {
        let err = WeightedTree::new(3, vec![(0, 1, 1.0)]).unwrap_err();
        assert_eq!(err, TreeError::DisconnectedGraph);
    }

    #[test]
    fn surplus_edges_cycle() {
        let err = WeightedTree::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap_err();
        assert_eq!(err, TreeError::CycleDetected);
    }

    #[test]
    fn out_of_range_vertex() {
        let err = WeightedTree::new(2, vec![(0, 2, 1.0)]).unwrap_err();
        assert_eq!(err, TreeError::BadVertexId);
        assert_eq!(
            WeightedTree::new(0, vec![]).unwrap_err(),
            TreeError::BadVertexId
        );
    }

    #[test]
    fn single_vertex_tree() {
        let t = WeightedTree::new(1, vec![]).unwrap();
        assert_eq!(t.distance(0, 0).unwrap(), 0.0);
    }

    #[test]
    fn path_distance_sums_edges() {
        let t = WeightedTree::new(3, vec![(0, 1, 1.0), (1, 2, 2.0)]).unwrap();
        assert_eq!(t.distance(0, 2).unwrap(), 3.0);
        assert_eq!(t.distance(2, 0).unwrap(), 3.0);
        for v in 0..3 {
            assert_eq!(t.distance(v, v).unwrap(), 0.0);
        }
    }

    #[test]
    fn star_distance_crosses_center() {
        let t = WeightedTree::new(4, vec![(0, 1, 1.0), (0, 2, 2.0), (0, 3, 3.0)]).unwrap();
        assert_eq!(t.distance(1, 3).unwrap(), 4.0);
    }

    #[test]
    fn bad_query_vertex() {
        let t = WeightedTree::new(2, vec![(0, 1, 1.0)]).unwrap();
        assert_eq!(t.distance(0, 7).unwrap_err(), TreeError::BadVertexId);
        assert_eq!(t.distance(7, 0).unwrap_err(), TreeError::BadVertexId);
    }
}
