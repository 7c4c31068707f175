//! Clique orientation, the partial order on 3-cliques, and the hierarchy
//! forest.
//!
//! Removing a 3-clique from a maximal planar graph leaves one or two
//! components. The smaller side is the clique's interior; comparing
//! closures (clique plus interior) by inclusion yields a partial order whose
//! cover graph has out-degree at most one everywhere, i.e. a forest of
//! rooted trees. Roots are the maximal elements.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::graph::{clique_set, Clique3, PlanarGraph};
use crate::vertex_set::VertexSet;

static ANALYSIS_COUNTER: AtomicU64 = AtomicU64::new(0);

/// Deterministic resolution of the equal-halves case when orienting a
/// separating clique.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreakPolicy {
    /// On a tie, the side containing the smallest vertex id becomes the
    /// interior.
    #[default]
    SmallestMinVertexIn,
    /// On a tie, the side containing the smallest vertex id becomes the
    /// exterior.
    LargestMinVertexIn,
}

/// Interior/exterior assignment of one 3-clique.
#[derive(Clone, Debug)]
pub struct CliqueOrientation {
    pub clique: Clique3,
    pub separating: bool,
    pub interior: VertexSet,
    pub exterior: VertexSet,
}

/// Orients a clique: the smaller removal side becomes the interior. With a
/// single removal side the interior is empty and the clique non-separating.
pub fn orient_clique(g: &PlanarGraph, k: &Clique3, policy: TieBreakPolicy) -> Result<CliqueOrientation> {
    let comps = g.components_after_removal(k)?;
    let n = g.n();
    match comps.len() {
        1 => Ok(CliqueOrientation {
            clique: *k,
            separating: false,
            interior: VertexSet::empty(n),
            exterior: VertexSet::from_slice(n, &comps[0]),
        }),
        2 => {
            let (a, b) = (&comps[0], &comps[1]);
            // comps are ordered by smallest member, so comps[0] holds the
            // globally smallest non-clique vertex
            let first_in = match a.len().cmp(&b.len()) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => policy == TieBreakPolicy::SmallestMinVertexIn,
            };
            let (int, ext) = if first_in { (a, b) } else { (b, a) };
            Ok(CliqueOrientation {
                clique: *k,
                separating: true,
                interior: VertexSet::from_slice(n, int),
                exterior: VertexSet::from_slice(n, ext),
            })
        }
        c => Err(Error::InvariantViolation(format!(
            "removal of {k} produced {c} components; the graph is not maximal planar"
        ))),
    }
}

/// One tree of the forest.
#[derive(Clone, Debug)]
pub struct Community {
    pub root: usize,
    /// Clique indices of the tree, sorted ascending (root included).
    pub members: Vec<usize>,
}

/// The hierarchy forest: per clique its orientation, closure, unique cover
/// (parent), covered cliques (children) and nesting depth.
#[derive(Clone, Debug)]
pub struct HierarchyForest {
    n: usize,
    policy: TieBreakPolicy,
    analysis: u64,
    cliques: Vec<Clique3>,
    orientations: Vec<CliqueOrientation>,
    closures: Vec<VertexSet>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    roots: Vec<usize>,
}

/// Builds the forest for the given cliques (normally
/// `PlanarGraph::enumerate_3cliques` output). The parent of a clique is the
/// enclosing closure of minimum cardinality, which the order structure
/// guarantees to be unique.
pub fn build_forest(g: &PlanarGraph, cliques: Vec<Clique3>, policy: TieBreakPolicy) -> Result<HierarchyForest> {
    let n = g.n();
    let c = cliques.len();
    let mut orientations = Vec::with_capacity(c);
    let mut closures = Vec::with_capacity(c);
    for k in &cliques {
        let o = orient_clique(g, k, policy)?;
        let mut closure = clique_set(n, k);
        closure.union_with(&o.interior);
        orientations.push(o);
        closures.push(closure);
    }
    let sizes: Vec<usize> = closures.iter().map(|s| s.len()).collect();

    let mut parent = vec![None; c];
    for j in 0..c {
        let mut best: Option<usize> = None;
        let mut best_size = usize::MAX;
        let mut tied = false;
        for i in 0..c {
            if i == j || !closures[j].is_subset(&closures[i]) {
                continue;
            }
            match sizes[i].cmp(&best_size) {
                std::cmp::Ordering::Less => {
                    best = Some(i);
                    best_size = sizes[i];
                    tied = false;
                }
                std::cmp::Ordering::Equal => tied = true,
                std::cmp::Ordering::Greater => {}
            }
        }
        if tied {
            return Err(Error::InvariantViolation(format!(
                "clique {} has two incomparable minimal covers",
                cliques[j]
            )));
        }
        parent[j] = best;
    }

    let mut children = vec![Vec::new(); c];
    let mut roots = Vec::new();
    for (j, p) in parent.iter().enumerate() {
        match p {
            Some(p) => children[*p].push(j),
            None => roots.push(j),
        }
    }

    let mut depth = vec![0usize; c];
    let mut stack: Vec<usize> = roots.clone();
    while let Some(i) = stack.pop() {
        for &ch in &children[i] {
            depth[ch] = depth[i] + 1;
            stack.push(ch);
        }
    }

    Ok(HierarchyForest {
        n,
        policy,
        analysis: ANALYSIS_COUNTER.fetch_add(1, Ordering::Relaxed),
        cliques,
        orientations,
        closures,
        parent,
        children,
        depth,
        roots,
    })
}

impl HierarchyForest {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn policy(&self) -> TieBreakPolicy {
        self.policy
    }

    pub(crate) fn analysis_id(&self) -> u64 {
        self.analysis
    }

    pub fn clique_count(&self) -> usize {
        self.cliques.len()
    }

    pub fn cliques(&self) -> &[Clique3] {
        &self.cliques
    }

    pub fn clique(&self, i: usize) -> &Clique3 {
        &self.cliques[i]
    }

    pub fn index_of(&self, k: &Clique3) -> Option<usize> {
        self.cliques.binary_search(k).ok()
    }

    pub fn orientation(&self, i: usize) -> &CliqueOrientation {
        &self.orientations[i]
    }

    pub fn is_separating(&self, i: usize) -> bool {
        self.orientations[i].separating
    }

    /// Clique vertices plus interior vertices.
    pub fn closure(&self, i: usize) -> &VertexSet {
        &self.closures[i]
    }

    /// closure(i) ⊆ closure(j)
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.closures[i].is_subset(&self.closures[j])
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    pub fn depth(&self, i: usize) -> usize {
        self.depth[i]
    }

    pub fn max_depth(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    /// Root clique indices, ascending. These are exactly the maximal
    /// elements of the order.
    pub fn maximal_elements(&self) -> &[usize] {
        &self.roots
    }

    pub fn separating_count(&self) -> usize {
        self.orientations.iter().filter(|o| o.separating).count()
    }

    /// The trees of the forest, one per root, in root order. Together they
    /// partition the clique set.
    pub fn nested_communities(&self) -> Vec<Community> {
        self.roots
            .iter()
            .map(|&root| {
                let mut members = Vec::new();
                let mut stack = vec![root];
                while let Some(i) = stack.pop() {
                    members.push(i);
                    stack.extend_from_slice(&self.children[i]);
                }
                members.sort_unstable();
                Community { root, members }
            })
            .collect()
    }
}
