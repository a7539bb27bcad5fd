//! Instance normalization: rooting, mass relocation, binarization.
//!
//! The solver's recurrences assume a rooted binary tree whose multiset mass
//! sits only at leaves. [`normalize`] produces that form from any
//! tree-plus-multiset instance without disturbing the metric:
//!
//! * every internal vertex carrying mass gets a zero-weight pendant leaf
//!   that takes over its full multiplicity;
//! * every vertex with more than two children is expanded into a chain of
//!   zero-weight dummy vertices, each with exactly two children, while the
//!   edges down to the original children keep their original weights.
//!
//! All added edges weigh zero, so distances between original vertices are
//! unchanged and relocated mass stays at distance zero from its vertex.

use alloc::vec;
use alloc::vec::Vec;

use crate::multiset::VertexMultiset;
use crate::tree::{TreeError, WeightedTree};

/// Children of a vertex in the normalized (binary) tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Children {
    None,
    One(usize),
    Two(usize, usize),
}

impl Children {
    pub fn count(&self) -> usize {
        match self {
            Children::None => 0,
            Children::One(_) => 1,
            Children::Two(_, _) => 2,
        }
    }
}

/// A rooted binary tree with all multiset mass at its leaves.
///
/// Original vertices keep their ids `0..original_vertex_count`; pendant mass
/// leaves and binarization dummies are appended after them. `origin` maps
/// every vertex back to the original vertex it stands for.
#[derive(Debug, Clone)]
pub struct NormalizedInstance {
    parent: Vec<usize>,
    children: Vec<Children>,
    weight_to_parent: Vec<f64>,
    leaf_mass: Vec<usize>,
    origin: Vec<usize>,
    subtree_mass: Vec<usize>,
    depth: Vec<u32>,
    post_order: Vec<usize>,
    root: usize,
    original_vertex_count: usize,
    original_mass: Vec<usize>,
    total_mass: usize,
    dummy_count: usize,
    pendant_count: usize,
}

/// Roots `tree` at `root`, relocates all mass to leaves, and binarizes.
pub fn normalize(
    tree: &WeightedTree,
    masses: &VertexMultiset,
    root: usize,
) -> Result<NormalizedInstance, TreeError> {
    let n = tree.vertex_count();
    if root >= n {
        return Err(TreeError::BadVertexId);
    }
    assert_eq!(
        masses.vertex_count(),
        n,
        "multiset was built for a different tree"
    );

    // Root the original tree; children listed in ascending vertex id.
    let mut kids: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut weight_to_parent = vec![0.0; n];
    let mut origin: Vec<usize> = (0..n).collect();
    let mut leaf_mass = vec![0; n];
    {
        let mut visited = vec![false; n];
        visited[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &(v, w) in tree.neighbors(u) {
                if !visited[v] {
                    visited[v] = true;
                    weight_to_parent[v] = w;
                    kids[u].push(v);
                    stack.push(v);
                }
            }
        }
        for list in &mut kids {
            list.sort_unstable();
        }
    }

    let add_vertex = |kids: &mut Vec<Vec<usize>>,
                      weight_to_parent: &mut Vec<f64>,
                      origin: &mut Vec<usize>,
                      leaf_mass: &mut Vec<usize>,
                      orig: usize,
                      mass: usize|
     -> usize {
        let id = kids.len();
        kids.push(Vec::new());
        weight_to_parent.push(0.0);
        origin.push(orig);
        leaf_mass.push(mass);
        id
    };

    // Relocate mass: internal vertices hand their copies to a zero-weight
    // pendant leaf; vertices that are already leaves keep theirs.
    let mut pendant_count = 0;
    for v in 0..n {
        let mass = masses.mass(v);
        if mass == 0 {
            continue;
        }
        if kids[v].is_empty() {
            leaf_mass[v] = mass;
        } else {
            let leaf = add_vertex(
                &mut kids,
                &mut weight_to_parent,
                &mut origin,
                &mut leaf_mass,
                v,
                mass,
            );
            kids[v].push(leaf);
            pendant_count += 1;
        }
    }

    // Binarize: a vertex with d > 2 children becomes the head of a chain of
    // d - 2 zero-weight dummies, each keeping one original child and passing
    // the rest down. Dummies inherit their parent's origin.
    let mut dummy_count = 0;
    for v in 0..n {
        if kids[v].len() <= 2 {
            continue;
        }
        let list = core::mem::take(&mut kids[v]);
        dummy_count += list.len() - 2;
        let mut holder = v;
        let mut rest = &list[..];
        while rest.len() > 2 {
            let dummy = add_vertex(
                &mut kids,
                &mut weight_to_parent,
                &mut origin,
                &mut leaf_mass,
                v,
                0,
            );
            kids[holder] = vec![rest[0], dummy];
            holder = dummy;
            rest = &rest[1..];
        }
        kids[holder] = rest.to_vec();
    }

    // Freeze the structure and derive parents, orders, depths, masses.
    let total_vertices = kids.len();
    let children: Vec<Children> = kids
        .iter()
        .map(|list| match list[..] {
            [] => Children::None,
            [c] => Children::One(c),
            [c1, c2] => Children::Two(c1, c2),
            _ => unreachable!("binarization left more than two children"),
        })
        .collect();

    let mut parent = vec![usize::MAX; total_vertices];
    let mut depth = vec![0u32; total_vertices];
    let mut pre_order = Vec::with_capacity(total_vertices);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        pre_order.push(u);
        for &c in &kids[u] {
            parent[c] = u;
            depth[c] = depth[u] + 1;
            stack.push(c);
        }
    }
    debug_assert_eq!(pre_order.len(), total_vertices);
    let mut post_order = pre_order;
    post_order.reverse();

    let mut subtree_mass = leaf_mass.clone();
    for &v in &post_order {
        for &c in &kids[v] {
            subtree_mass[v] += subtree_mass[c];
        }
    }
    debug_assert_eq!(subtree_mass[root], masses.total_mass());

    Ok(NormalizedInstance {
        parent,
        children,
        weight_to_parent,
        leaf_mass,
        origin,
        subtree_mass,
        depth,
        post_order,
        root,
        original_vertex_count: n,
        original_mass: masses.masses().to_vec(),
        total_mass: masses.total_mass(),
        dummy_count,
        pendant_count,
    })
}

impl NormalizedInstance {
    /// All vertices, including pendants and dummies.
    pub fn vertex_count(&self) -> usize {
        self.children.len()
    }

    pub fn original_vertex_count(&self) -> usize {
        self.original_vertex_count
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn total_mass(&self) -> usize {
        self.total_mass
    }

    pub fn children(&self, v: usize) -> Children {
        self.children[v]
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        if v == self.root {
            None
        } else {
            Some(self.parent[v])
        }
    }

    /// Weight of the edge from `v` up to its parent; zero at the root.
    pub fn weight_to_parent(&self, v: usize) -> f64 {
        self.weight_to_parent[v]
    }

    /// Multiset copies carried by `v`; nonzero only at leaves.
    pub fn leaf_mass(&self, v: usize) -> usize {
        self.leaf_mass[v]
    }

    /// The original vertex this vertex stands for.
    pub fn origin(&self, v: usize) -> usize {
        self.origin[v]
    }

    /// Number of multiset elements in the subtree rooted at `v`.
    pub fn subtree_mass(&self, v: usize) -> usize {
        self.subtree_mass[v]
    }

    /// Vertices in processing order, children before parents.
    pub fn post_order(&self) -> &[usize] {
        &self.post_order
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        matches!(self.children[v], Children::None)
    }

    /// Dummies added by binarization.
    pub fn dummy_count(&self) -> usize {
        self.dummy_count
    }

    /// Pendant leaves added by mass relocation.
    pub fn pendant_count(&self) -> usize {
        self.pendant_count
    }

    /// Per-original-vertex multiplicities of the instance's multiset.
    pub fn original_masses(&self) -> &[usize] {
        &self.original_mass
    }

    /// Distance between any two normalized vertices.
    pub fn distance(&self, u: usize, v: usize) -> Result<f64, TreeError> {
        if u >= self.vertex_count() || v >= self.vertex_count() {
            return Err(TreeError::BadVertexId);
        }
        let (mut a, mut b) = (u, v);
        let mut total = 0.0;
        while self.depth[a] > self.depth[b] {
            total += self.weight_to_parent[a];
            a = self.parent[a];
        }
        while self.depth[b] > self.depth[a] {
            total += self.weight_to_parent[b];
            b = self.parent[b];
        }
        while a != b {
            total += self.weight_to_parent[a] + self.weight_to_parent[b];
            a = self.parent[a];
            b = self.parent[b];
        }
        Ok(total)
    }
}
