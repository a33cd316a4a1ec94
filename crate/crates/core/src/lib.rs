//! Steiner tree (node-count objective) on split-like graphs: class
//! recognizers, polynomial algorithms for the tractable classes, an
//! exhaustive oracle, hardness-reduction gadgets and a verification harness.

pub mod catalog;
pub mod classes;
pub mod cover;
pub mod error;
pub mod exact;
pub mod gadgets;
pub mod graph;
pub mod harness;
pub mod io;
pub mod poly;

pub use classes::{ClassReport, PartitionKind, SplitLikePartition};
pub use cover::{ExactCoverInstance, TripleSystem};
pub use error::{Error, Result};
pub use exact::{SteinerInstance, SteinerSolution};
pub use graph::{Distance, Graph, VertexSet};

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::graph::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    /// Center 0, leaves 1..=leaves.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    /// Sides 0..a and a..a+b.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::new(a + b, &edges).unwrap()
    }
}
