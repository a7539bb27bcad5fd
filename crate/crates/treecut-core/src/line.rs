//! One-dimensional instances: point multisets on the real line.

use alloc::vec::Vec;
use core::fmt;

use crate::multiset::VertexMultiset;
use crate::tree::WeightedTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineError {
    EmptyInput,
    NonFiniteCoordinate,
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineError::EmptyInput => write!(f, "point multiset is empty"),
            LineError::NonFiniteCoordinate => write!(f, "point coordinates must be finite"),
        }
    }
}

impl core::error::Error for LineError {}

/// Models a point multiset on the line as a path graph.
///
/// Vertices are the distinct coordinates in ascending order; consecutive
/// coordinates are joined by an edge weighted with their gap. Duplicate
/// coordinates collapse into one vertex with multiplicity, so the path has
/// no zero-weight edges and the metric is the absolute difference.
pub fn line_to_tree(points: &[f64]) -> Result<(WeightedTree, VertexMultiset), LineError> {
    if points.is_empty() {
        return Err(LineError::EmptyInput);
    }
    if points.iter().any(|c| !c.is_finite()) {
        return Err(LineError::NonFiniteCoordinate);
    }
    let mut sorted = points.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);

    let mut coords: Vec<f64> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    for &c in &sorted {
        match coords.last() {
            Some(&last) if last == c => *counts.last_mut().unwrap() += 1,
            _ => {
                coords.push(c);
                counts.push(1);
            }
        }
    }

    let edges = coords
        .windows(2)
        .enumerate()
        .map(|(i, pair)| (i, i + 1, pair[1] - pair[0]))
        .collect();
    let tree = WeightedTree::new(coords.len(), edges).expect("a path is a valid tree");
    let masses = VertexMultiset::from_masses(counts);
    Ok((tree, masses))
}

/// Distinct sorted coordinates of a point multiset, paired with counts.
/// Mirrors the vertex order produced by [`line_to_tree`].
pub fn distinct_coordinates(points: &[f64]) -> Result<Vec<(f64, usize)>, LineError> {
    let (_, masses) = line_to_tree(points)?;
    let mut sorted = points.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    sorted.dedup();
    Ok(sorted
        .into_iter()
        .enumerate()
        .map(|(v, c)| (c, masses.mass(v)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn unit_spaced_points_become_a_unit_path() {
        let (tree, masses) = line_to_tree(&[0.0, 1.0, 2.0, 3.0]).unwrap();
        assert_eq!(tree.vertex_count(), 4);
        assert_eq!(tree.edges(), &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)]);
        assert!(masses.masses().iter().all(|&m| m == 1));
    }

    #[test]
    fn coincident_points_collapse() {
        let (tree, masses) = line_to_tree(&[5.0, 5.0, 5.0]).unwrap();
        assert_eq!(tree.vertex_count(), 1);
        assert!(tree.edges().is_empty());
        assert_eq!(masses.mass(0), 3);
    }

    #[test]
    fn gaps_become_weights() {
        let (tree, masses) = line_to_tree(&[0.5, 2.0, 2.0, 7.25]).unwrap();
        assert_eq!(tree.edges(), &[(0, 1, 1.5), (1, 2, 5.25)]);
        assert_eq!(masses.masses(), &[1, 2, 1]);
    }

    #[test]
    fn unsorted_input_is_sorted() {
        let (tree, _) = line_to_tree(&[3.0, 0.0, 2.0, 1.0]).unwrap();
        assert_eq!(tree.edges(), &[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)]);
    }

    #[test]
    fn empty_and_non_finite_inputs() {
        assert_eq!(line_to_tree(&[]).unwrap_err(), LineError::EmptyInput);
        assert_eq!(
            line_to_tree(&[0.0, f64::NAN]).unwrap_err(),
            LineError::NonFiniteCoordinate
        );
        assert_eq!(
            line_to_tree(&[f64::NEG_INFINITY]).unwrap_err(),
            LineError::NonFiniteCoordinate
        );
    }

    #[test]
    fn coordinates_align_with_vertices() {
        let coords = distinct_coordinates(&[2.0, 0.5, 2.0]).unwrap();
        assert_eq!(coords, vec![(0.5, 1), (2.0, 2)]);
    }
}
