//! Decomposition of maximal planar graphs into the nested hierarchy of their
//! 3-cliques and the tree of their bubbles.
//!
//! Every 3-clique of a maximal planar graph is either separating or
//! non-separating; orienting each separating clique toward its smaller side
//! induces a partial order whose Hasse diagram is a forest of rooted trees
//! (`hierarchy`). Merging each separating clique with its covered cliques
//! yields the bubbles: maximal planar subgraphs with no internal separating
//! triangle, glued into a single tree along shared 3-cliques (`bubbles`).
//!
//! - `graph`: graph type, edge-list parsing, validation, triangle listing
//! - `planarity`: planarity test (face embedding per biconnected component)
//! - `hierarchy`: clique orientation, partial order, hierarchy forest
//! - `bubbles`: bubble construction and the bubble tree
//! - `generators`: deterministic example graphs and random triangulations
//! - `pmfg`: planar maximally filtered graph built from a weight matrix
//! - `oracle`: brute-force re-derivations of every structural claim
//! - `export`: JSON / DOT / edge-list serialization
//!
//! # Example
//!
//! ```
//! use bubbletree::{build_forest, TieBreakPolicy};
//! use bubbletree::bubbles::{all_bubbles, build_bubble_tree};
//! use bubbletree::generators;
//!
//! let g = generators::apollonian(3)?;
//! let forest = build_forest(&g, g.enumerate_3cliques(), TieBreakPolicy::default())?;
//! let tree = build_bubble_tree(all_bubbles(&forest)?, &forest)?;
//! assert_eq!(tree.bubbles.len(), forest.separating_count() + 1);
//! # Ok::<(), bubbletree::Error>(())
//! ```

pub mod bubbles;
pub mod error;
pub mod export;
pub mod generators;
pub mod graph;
pub mod hierarchy;
pub mod oracle;
pub mod planarity;
pub mod pmfg;
pub mod vertex_set;

pub use bubbles::{all_bubbles, build_bubble_tree, bubble_from_clique, is_bubble, maximal_bubble, shared_clique, Bubble, BubbleTree, RootCliqueRef};
pub use error::{Error, Result};
pub use graph::{parse_edge_list, Clique3, PlanarGraph, ValidationReport, VertexId};
pub use hierarchy::{build_forest, orient_clique, CliqueOrientation, Community, HierarchyForest, TieBreakPolicy};
pub use planarity::planarity_test;
pub use vertex_set::VertexSet;
