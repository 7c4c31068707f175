//! Bubbles and the bubble tree.
//!
//! A bubble is a maximal planar subgraph none of whose 3-cliques separates
//! it. Every separating clique of the host graph roots one bubble (the
//! clique merged with its covered cliques), and the maximal elements of the
//! clique order merge into one more, rooted at the formal top element whose
//! interior is the whole graph. Adjacent bubbles share exactly one 3-clique,
//! and those shared cliques stitch all bubbles into a single rooted tree.

use crate::error::{Error, Result};
use crate::graph::{Clique3, PlanarGraph, VertexId};
use crate::hierarchy::HierarchyForest;
use crate::planarity::planarity_test;
use crate::vertex_set::VertexSet;

/// The clique a bubble is rooted at: a real clique of the graph, or the
/// formal top element for the maximal bubble.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootCliqueRef {
    Real(usize),
    Imaginary,
}

#[derive(Clone, Debug)]
pub struct Bubble {
    pub id: usize,
    pub root: RootCliqueRef,
    /// Clique indices into the forest, sorted ascending.
    pub member_cliques: Vec<usize>,
    pub vertices: VertexSet,
    analysis: u64,
}

impl Bubble {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
}

fn assemble(h: &HierarchyForest, id: usize, root: RootCliqueRef, members: Vec<usize>) -> Bubble {
    let mut vertices = VertexSet::empty(h.vertex_count());
    for &i in &members {
        for v in h.clique(i).vertices() {
            vertices.insert(v);
        }
    }
    Bubble { id, root, member_cliques: members, vertices, analysis: h.analysis_id() }
}

/// The bubble rooted at a separating clique: the clique itself plus all the
/// cliques it covers.
pub fn bubble_from_clique(h: &HierarchyForest, k_index: usize) -> Result<Bubble> {
    if h.children(k_index).is_empty() {
        return Err(Error::NotABubbleRoot(h.clique(k_index).to_string()));
    }
    let mut members = vec![k_index];
    members.extend_from_slice(h.children(k_index));
    members.sort_unstable();
    Ok(assemble(h, 0, RootCliqueRef::Real(k_index), members))
}

/// The bubble made of all maximal elements of the clique order.
pub fn maximal_bubble(h: &HierarchyForest) -> Result<Bubble> {
    let roots = h.maximal_elements();
    if roots.len() < 2 {
        return Err(Error::DegenerateMaximalBubble);
    }
    Ok(assemble(h, 0, RootCliqueRef::Imaginary, roots.to_vec()))
}

/// All bubbles: one per separating clique, in clique order, plus the maximal
/// bubble last. Ids follow list position.
pub fn all_bubbles(h: &HierarchyForest) -> Result<Vec<Bubble>> {
    let mut out = Vec::new();
    for i in 0..h.clique_count() {
        if h.is_separating(i) {
            let mut b = bubble_from_clique(h, i)?;
            b.id = out.len();
            out.push(b);
        }
    }
    let mut top = maximal_bubble(h)?;
    top.id = out.len();
    out.push(top);
    Ok(out)
}

/// The bubble tree: every real-rooted bubble hangs off the bubble that
/// contains its root clique as a non-root member; edges are labeled by that
/// shared clique.
#[derive(Clone, Debug)]
pub struct BubbleTree {
    pub bubbles: Vec<Bubble>,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    /// For each non-root bubble, the clique index labeling the edge to its
    /// parent.
    pub edge_label: Vec<Option<usize>>,
    /// Id of the maximal bubble.
    pub root: usize,
}

impl BubbleTree {
    pub fn edge_count(&self) -> usize {
        self.parent.iter().flatten().count()
    }

    /// Tree edges as (parent, child, label clique index).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.parent.iter().enumerate().filter_map(|(child, p)| {
            p.map(|parent| (parent, child, self.edge_label[child].expect("non-root bubble has a label")))
        })
    }

    pub fn depth_of(&self, id: usize) -> usize {
        let mut d = 0;
        let mut cur = id;
        while let Some(p) = self.parent[cur] {
            cur = p;
            d += 1;
        }
        d
    }
}

pub fn build_bubble_tree(bubbles: Vec<Bubble>, h: &HierarchyForest) -> Result<BubbleTree> {
    // count clique occurrences across member sets: separating cliques must
    // appear in exactly two bubbles, non-separating in exactly one
    let mut occurrences = vec![0usize; h.clique_count()];
    for b in &bubbles {
        for &i in &b.member_cliques {
            occurrences[i] += 1;
        }
    }
    for (i, &count) in occurrences.iter().enumerate() {
        let expect = if h.is_separating(i) { 2 } else { 1 };
        if count != expect {
            return Err(Error::InvariantViolation(format!(
                "clique {} appears in {count} bubbles, expected {expect}",
                h.clique(i)
            )));
        }
    }

    let root = bubbles
        .iter()
        .position(|b| b.root == RootCliqueRef::Imaginary)
        .ok_or_else(|| Error::InvariantViolation("no maximal bubble in the list".to_string()))?;
    let by_root_clique: std::collections::HashMap<usize, usize> = bubbles
        .iter()
        .filter_map(|b| match b.root {
            RootCliqueRef::Real(k) => Some((k, b.id)),
            RootCliqueRef::Imaginary => None,
        })
        .collect();

    let mut parent = vec![None; bubbles.len()];
    let mut edge_label = vec![None; bubbles.len()];
    let mut children = vec![Vec::new(); bubbles.len()];
    for b in &bubbles {
        let k = match b.root {
            RootCliqueRef::Real(k) => k,
            RootCliqueRef::Imaginary => continue,
        };
        // the bubble of k's parent clique, or the maximal bubble when k is
        // itself maximal
        let p = match h.parent(k) {
            Some(pk) => *by_root_clique.get(&pk).ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "clique {} covers others but roots no bubble",
                    h.clique(pk)
                ))
            })?,
            None => root,
        };
        parent[b.id] = Some(p);
        edge_label[b.id] = Some(k);
        children[p].push(b.id);
    }

    Ok(BubbleTree { bubbles, parent, children, edge_label, root })
}

/// The unique clique shared by two adjacent bubbles of one analysis; `None`
/// for non-adjacent bubbles and for a self-query.
pub fn shared_clique(b1: &Bubble, b2: &Bubble, h: &HierarchyForest) -> Result<Option<Clique3>> {
    if b1.analysis != h.analysis_id() || b2.analysis != h.analysis_id() {
        return Err(Error::MixedAnalyses);
    }
    if b1.root == b2.root {
        return Ok(None); // a tree has no self-edges
    }
    let common: Vec<usize> = b1
        .member_cliques
        .iter()
        .filter(|i| b2.member_cliques.binary_search(i).is_ok())
        .copied()
        .collect();
    match common.len() {
        0 => Ok(None),
        1 => Ok(Some(*h.clique(common[0]))),
        c => Err(Error::InvariantViolation(format!(
            "bubbles {} and {} share {c} cliques",
            b1.id, b2.id
        ))),
    }
}

/// Raw bubble predicate: the induced subgraph on `vertex_set` is connected,
/// maximal planar, and none of its 3-cliques separates it. A single triangle
/// passes; the bubble list additionally requires at least two member
/// cliques.
pub fn is_bubble(g: &PlanarGraph, vertex_set: &[VertexId]) -> bool {
    let m = vertex_set.len();
    if m < 3 {
        return false;
    }
    let sub = g.induced(vertex_set);
    if sub.edge_count() != 3 * m - 6 || !sub.is_connected() || !planarity_test(&sub) {
        return false;
    }
    sub.enumerate_3cliques()
        .iter()
        .all(|k| sub.components_after_removal(k).map(|c| c.len() < 2).unwrap_or(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::hierarchy::{build_forest, TieBreakPolicy};

    fn forest(g: &PlanarGraph) -> HierarchyForest {
        build_forest(g, g.enumerate_3cliques(), TieBreakPolicy::SmallestMinVertexIn).unwrap()
    }

    #[test]
    fn two_bubble_real_bubble_is_k4() {
        let g = generators::two_bubble_example();
        let h = forest(&g);
        let acd = h.index_of(&Clique3::new(0, 2, 3)).unwrap();
        let b = bubble_from_clique(&h, acd).unwrap();
        assert_eq!(b.vertices.to_vec(), vec![0, 1, 2, 3]); // a, b, c, d
        assert_eq!(b.member_cliques.len(), 4);
        let sub = g.induced(&b.vertices.to_vec());
        assert_eq!(sub.edge_count(), 6); // K4
        assert!(is_bubble(&g, &b.vertices.to_vec()));
    }

    #[test]
    fn non_separating_clique_is_not_a_root() {
        let g = generators::two_bubble_example();
        let h = forest(&g);
        let abc = h.index_of(&Clique3::new(0, 1, 2)).unwrap();
        assert!(matches!(bubble_from_clique(&h, abc), Err(Error::NotABubbleRoot(_))));
    }

    #[test]
    fn apollonian_gen2_face_bubbles() {
        // each internal face of the seed K4 roots a K4 bubble on the face
        // plus its inserted apex
        let g = generators::apollonian(2).unwrap();
        let h = forest(&g);
        for (face, apex) in [([0, 1, 3], 4u32), ([0, 2, 3], 5), ([1, 2, 3], 6)] {
            let i = h.index_of(&Clique3::new(face[0], face[1], face[2])).unwrap();
            let b = bubble_from_clique(&h, i).unwrap();
            let mut expect = face.to_vec();
            expect.push(apex);
            expect.sort_unstable();
            assert_eq!(b.vertices.to_vec(), expect);
            assert_eq!(b.member_cliques.len(), 4);
        }
    }

    #[test]
    fn maximal_bubbles() {
        let g = generators::named_graph("k4").unwrap();
        let h = forest(&g);
        let b = maximal_bubble(&h).unwrap();
        assert_eq!(b.vertices.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(b.member_cliques.len(), 4);

        let g = generators::named_graph("octahedron").unwrap();
        let h = forest(&g);
        let b = maximal_bubble(&h).unwrap();
        assert_eq!(b.vertices.len(), 6);
        assert_eq!(b.member_cliques.len(), 8);

        for gen in 1..=3 {
            let g = generators::apollonian(gen).unwrap();
            let h = forest(&g);
            let b = maximal_bubble(&h).unwrap();
            assert_eq!(b.vertices.to_vec(), vec![0, 1, 2, 3], "gen {gen}");
        }
    }

    #[test]
    fn bubble_counts() {
        let g = generators::two_bubble_example();
        let bs = all_bubbles(&forest(&g)).unwrap();
        assert_eq!(bs.len(), 2);

        let g = generators::named_graph("k4").unwrap();
        let bs = all_bubbles(&forest(&g)).unwrap();
        assert_eq!(bs.len(), 1);

        // inserted-vertex count + 1, each bubble a K4
        let g = generators::apollonian(3).unwrap();
        let bs = all_bubbles(&forest(&g)).unwrap();
        assert_eq!(bs.len(), g.n() - 4 + 1);
        assert!(bs.iter().all(|b| b.vertex_count() == 4));
    }

    #[test]
    fn bubble_invariants_hold() {
        for (name, g) in generators::catalog() {
            let h = forest(&g);
            for b in all_bubbles(&h).unwrap() {
                let vs = b.vertices.to_vec();
                assert!(b.member_cliques.len() >= 2, "{name}");
                assert!(is_bubble(&g, &vs), "{name}");
                let sub = g.induced(&vs);
                assert_eq!(sub.edge_count(), 3 * vs.len() - 6, "{name}");
            }
        }
    }

    #[test]
    fn two_bubble_tree() {
        let g = generators::two_bubble_example();
        let h = forest(&g);
        let t = build_bubble_tree(all_bubbles(&h).unwrap(), &h).unwrap();
        assert_eq!(t.bubbles.len(), 2);
        assert_eq!(t.edge_count(), 1);
        let (parent, child, label) = t.edges().next().unwrap();
        assert_eq!(parent, t.root);
        assert_eq!(t.bubbles[child].vertices.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(h.clique(label), &Clique3::new(0, 2, 3));
    }

    #[test]
    fn k4_tree_is_single_node() {
        let g = generators::named_graph("k4").unwrap();
        let h = forest(&g);
        let t = build_bubble_tree(all_bubbles(&h).unwrap(), &h).unwrap();
        assert_eq!(t.bubbles.len(), 1);
        assert_eq!(t.edge_count(), 0);
        assert_eq!(t.root, 0);
    }

    #[test]
    fn apollonian_tree_levels() {
        // gen 2: maximal bubble plus 3 bubbles at depth 1
        let g = generators::apollonian(2).unwrap();
        let h = forest(&g);
        let t = build_bubble_tree(all_bubbles(&h).unwrap(), &h).unwrap();
        assert_eq!(t.bubbles.len(), 4);
        assert_eq!(t.edge_count(), 3);
        assert_eq!((0..4).filter(|&i| t.depth_of(i) == 1).count(), 3);

        // gen 3: 1 + 3 + 9 bubbles, 12 edges = 12 separating cliques
        let g = generators::apollonian(3).unwrap();
        let h = forest(&g);
        let t = build_bubble_tree(all_bubbles(&h).unwrap(), &h).unwrap();
        assert_eq!(t.bubbles.len(), 13);
        assert_eq!(t.edge_count(), 12);
        assert_eq!(t.edge_count(), h.separating_count());
        let mut by_depth = [0usize; 3];
        for i in 0..t.bubbles.len() {
            by_depth[t.depth_of(i)] += 1;
        }
        assert_eq!(by_depth, [1, 3, 9]);
    }

    #[test]
    fn shared_cliques() {
        let g = generators::two_bubble_example();
        let h = forest(&g);
        let bs = all_bubbles(&h).unwrap();
        let shared = shared_clique(&bs[0], &bs[1], &h).unwrap();
        assert_eq!(shared, Some(Clique3::new(0, 2, 3)));
        // self-query
        assert_eq!(shared_clique(&bs[0], &bs[0], &h).unwrap(), None);

        // sibling bubbles in an apollonian graph share nothing
        let g = generators::apollonian(2).unwrap();
        let h = forest(&g);
        let bs = all_bubbles(&h).unwrap();
        assert_eq!(shared_clique(&bs[0], &bs[1], &h).unwrap(), None);

        // depth-2 siblings at gen 3
        let g = generators::apollonian(3).unwrap();
        let h = forest(&g);
        let t = build_bubble_tree(all_bubbles(&h).unwrap(), &h).unwrap();
        let deep: Vec<usize> = (0..t.bubbles.len()).filter(|&i| t.depth_of(i) == 2).collect();
        assert_eq!(
            shared_clique(&t.bubbles[deep[0]], &t.bubbles[deep[1]], &h).unwrap(),
            None
        );
    }

    #[test]
    fn mixed_analyses_rejected() {
        let g = generators::two_bubble_example();
        let h1 = forest(&g);
        let h2 = forest(&g);
        let b1 = all_bubbles(&h1).unwrap();
        let b2 = all_bubbles(&h2).unwrap();
        assert!(matches!(shared_clique(&b1[0], &b2[1], &h1), Err(Error::MixedAnalyses)));
    }

    #[test]
    fn bubble_predicate() {
        let g = generators::apollonian(3).unwrap();
        // any K4 block: face of the seed plus its apex
        assert!(is_bubble(&g, &[0, 1, 3, 4]));
        // a single triangle passes the raw predicate
        assert!(is_bubble(&g, &[0, 1, 2]));
        // the closure of a gen-1 face spans two nesting levels and contains
        // separating cliques, so it is not a bubble
        let h = forest(&g);
        let i = h.index_of(&Clique3::new(0, 1, 3)).unwrap();
        let closure = h.closure(i).to_vec();
        assert_eq!(closure.len(), 7);
        assert!(!is_bubble(&g, &closure));
        // arbitrary non-triangulated subsets fail
        assert!(!is_bubble(&g, &[0, 1]));
        assert!(!is_bubble(&g, &[4, 5, 6]));
    }
}
