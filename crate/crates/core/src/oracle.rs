//! Brute-force re-derivation of every structural claim on small inputs.
//!
//! The checks recompute orientations, closures and the order relation from
//! scratch with plain triple scans, flood fill and subset tests, then compare
//! the analysis modules against those first principles. Nothing here reuses
//! the hierarchy or bubble construction paths beyond the objects under test.

use std::collections::BTreeSet;

use crate::bubbles::{all_bubbles, build_bubble_tree, is_bubble};
use crate::error::{Error, Result};
use crate::graph::{PlanarGraph, VertexId};
use crate::hierarchy::{build_forest, TieBreakPolicy};

/// Outcome of one check; empty `violations` means pass.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub violations: Vec<String>,
    pub skipped: bool,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport { name: name.to_string(), violations: Vec::new(), skipped: false }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// First-principles per-clique data: triangles by triple scan, components by
/// flood fill, interiors by the smaller-side rule.
struct OracleData {
    cliques: Vec<[VertexId; 3]>,
    separating: Vec<bool>,
    interior: Vec<BTreeSet<VertexId>>,
    closure: Vec<BTreeSet<VertexId>>,
}

fn flood_components(g: &PlanarGraph, removed: &[VertexId; 3]) -> Vec<BTreeSet<VertexId>> {
    let mut seen: Vec<bool> = (0..g.n() as VertexId)
        .map(|v| removed.contains(&v))
        .collect();
    let mut comps = Vec::new();
    for start in g.vertices() {
        if seen[start as usize] {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![start];
        seen[start as usize] = true;
        while let Some(u) = stack.pop() {
            comp.insert(u);
            for &w in g.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        comps.push(comp);
    }
    comps.sort_by_key(|c| *c.first().unwrap());
    comps
}

fn derive(g: &PlanarGraph, policy: TieBreakPolicy) -> OracleData {
    let n = g.n() as VertexId;
    let mut cliques = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    cliques.push([a, b, c]);
                }
            }
        }
    }
    let mut separating = Vec::new();
    let mut interior = Vec::new();
    let mut closure = Vec::new();
    for k in &cliques {
        let comps = flood_components(g, k);
        let int: BTreeSet<VertexId> = match comps.len() {
            1 => BTreeSet::new(),
            2 => {
                let pick_first = match comps[0].len().cmp(&comps[1].len()) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => policy == TieBreakPolicy::SmallestMinVertexIn,
                };
                if pick_first { comps[0].clone() } else { comps[1].clone() }
            }
            c => panic!("clique removal produced {c} components"),
        };
        separating.push(!int.is_empty());
        let mut cl = int.clone();
        cl.extend(k.iter().copied());
        interior.push(int);
        closure.push(cl);
    }
    OracleData { cliques, separating, interior, closure }
}

/// Reflexivity, antisymmetry and transitivity of the closure-inclusion
/// relation, checked exhaustively over cliques, pairs and triples under both
/// tie-break policies.
pub fn check_poset_axioms(g: &PlanarGraph) -> CheckReport {
    let mut report = CheckReport::new("poset_axioms");
    for policy in [TieBreakPolicy::SmallestMinVertexIn, TieBreakPolicy::LargestMinVertexIn] {
        let data = derive(g, policy);
        let c = data.cliques.len();
        let leq = |i: usize, j: usize| data.closure[i].is_subset(&data.closure[j]);
        for i in 0..c {
            if !leq(i, i) {
                report.violations.push(format!("reflexivity fails at {:?}", data.cliques[i]));
            }
        }
        for i in 0..c {
            for j in 0..c {
                if i != j && leq(i, j) && leq(j, i) {
                    report.violations.push(format!(
                        "antisymmetry fails at {:?} vs {:?} ({policy:?})",
                        data.cliques[i], data.cliques[j]
                    ));
                }
            }
        }
        for i in 0..c {
            for j in 0..c {
                if !leq(i, j) {
                    continue;
                }
                for m in 0..c {
                    if leq(j, m) && !leq(i, m) {
                        report.violations.push(format!(
                            "transitivity fails at {:?}, {:?}, {:?} ({policy:?})",
                            data.cliques[i], data.cliques[j], data.cliques[m]
                        ));
                    }
                }
            }
        }
    }
    report
}

/// For every clique pair: nested closures one way or the other, or disjoint
/// interiors.
pub fn check_dichotomy(g: &PlanarGraph) -> CheckReport {
    let mut report = CheckReport::new("dichotomy");
    let data = derive(g, TieBreakPolicy::SmallestMinVertexIn);
    let c = data.cliques.len();
    for i in 0..c {
        for j in i + 1..c {
            let nested = data.closure[i].is_subset(&data.closure[j])
                || data.closure[j].is_subset(&data.closure[i]);
            let disjoint = data.interior[i].is_disjoint(&data.interior[j]);
            if !nested && !disjoint {
                report.violations.push(format!(
                    "cliques {:?} and {:?} are neither nested nor interior-disjoint",
                    data.cliques[i], data.cliques[j]
                ));
            }
        }
    }
    // interior vertices only meet cliques inside the closure
    for i in 0..c {
        for &v in &data.interior[i] {
            for (j, k) in data.cliques.iter().enumerate() {
                if k.contains(&v) && !data.closure[j].is_subset(&data.closure[i]) {
                    report.violations.push(format!(
                        "clique {k:?} contains interior vertex {v} of {:?} but escapes its closure",
                        data.cliques[i]
                    ));
                }
            }
        }
    }
    report
}

/// Rebuilds the forest and verifies its parents, roots, depths, acyclicity
/// and sibling-interior disjointness against the first-principles data.
pub fn check_forest(g: &PlanarGraph) -> CheckReport {
    let mut report = CheckReport::new("forest");
    let policy = TieBreakPolicy::SmallestMinVertexIn;
    let data = derive(g, policy);
    let forest = match build_forest(g, g.enumerate_3cliques(), policy) {
        Ok(f) => f,
        Err(e) => {
            report.violations.push(format!("forest construction failed: {e}"));
            return report;
        }
    };
    let c = data.cliques.len();
    if forest.clique_count() != c {
        report.violations.push(format!(
            "clique count {} != brute-force count {c}",
            forest.clique_count()
        ));
        return report;
    }
    for i in 0..c {
        if forest.clique(i).vertices() != data.cliques[i] {
            report.violations.push(format!("clique list mismatch at {i}"));
            return report;
        }
    }

    // parent = unique enclosing closure of minimum cardinality
    for j in 0..c {
        let mut candidates: Vec<usize> = (0..c)
            .filter(|&i| i != j && data.closure[j].is_subset(&data.closure[i]))
            .collect();
        candidates.sort_by_key(|&i| data.closure[i].len());
        let expect = match candidates.as_slice() {
            [] => None,
            [first, rest @ ..] => {
                if rest.iter().any(|&i| data.closure[i].len() == data.closure[*first].len()) {
                    report.violations.push(format!(
                        "minimal cover of {:?} is not unique",
                        data.cliques[j]
                    ));
                }
                Some(*first)
            }
        };
        if forest.parent(j) != expect {
            report.violations.push(format!(
                "parent of {:?}: forest says {:?}, oracle says {expect:?}",
                data.cliques[j],
                forest.parent(j)
            ));
        }
    }

    // acyclic parent chains
    for mut i in 0..c {
        let mut steps = 0;
        while let Some(p) = forest.parent(i) {
            i = p;
            steps += 1;
            if steps > c {
                report.violations.push("cycle in parent chain".to_string());
                break;
            }
        }
    }

    // roots are exactly the maximal elements
    let maximal: Vec<usize> = (0..c)
        .filter(|&j| {
            !(0..c).any(|i| i != j && data.closure[j].is_subset(&data.closure[i]))
        })
        .collect();
    if forest.maximal_elements() != maximal.as_slice() {
        report.violations.push(format!(
            "maximal elements {:?} != oracle {maximal:?}",
            forest.maximal_elements()
        ));
    }
    if forest.nested_communities().len() != maximal.len() {
        report.violations.push("tree count != maximal element count".to_string());
    }

    // children present iff separating
    for i in 0..c {
        if data.separating[i] != !forest.children(i).is_empty() {
            report.violations.push(format!(
                "clique {:?}: separating={} but child count {}",
                data.cliques[i],
                data.separating[i],
                forest.children(i).len()
            ));
        }
    }

    // nesting depth equals the number of strictly larger closures above
    for j in 0..c {
        let above = (0..c)
            .filter(|&i| i != j && data.closure[j].is_subset(&data.closure[i]))
            .count();
        if forest.depth(j) != above {
            report.violations.push(format!(
                "depth of {:?}: forest {} vs chain length {above}",
                data.cliques[j],
                forest.depth(j)
            ));
        }
    }

    // sibling interiors are pairwise disjoint
    for i in 0..c {
        let ch = forest.children(i);
        for x in 0..ch.len() {
            for y in x + 1..ch.len() {
                if !data.interior[ch[x]].is_disjoint(&data.interior[ch[y]]) {
                    report.violations.push(format!(
                        "children of {:?} have intersecting interiors",
                        data.cliques[i]
                    ));
                }
            }
        }
    }
    report
}

const EXHAUSTIVE_LIMIT: usize = 10;

/// Every vertex subset of size >= 4 whose induced subgraph is a bubble,
/// found by scanning all 2^n subsets. Limited to n <= 10.
pub fn exhaustive_bubbles(g: &PlanarGraph) -> Result<BTreeSet<Vec<VertexId>>> {
    let n = g.n();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge { n, limit: EXHAUSTIVE_LIMIT });
    }
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 4 {
            continue;
        }
        let subset: Vec<VertexId> = (0..n as VertexId).filter(|&v| mask >> v & 1 == 1).collect();
        if is_bubble(g, &subset) {
            out.insert(subset);
        }
    }
    Ok(out)
}

/// The exhaustive subset scan must find exactly the vertex sets of the
/// constructed bubbles.
pub fn check_exhaustive_bubbles(g: &PlanarGraph) -> Result<CheckReport> {
    let mut report = CheckReport::new("exhaustive_bubbles");
    let brute = exhaustive_bubbles(g)?;
    let h = build_forest(g, g.enumerate_3cliques(), TieBreakPolicy::SmallestMinVertexIn)?;
    let constructed: BTreeSet<Vec<VertexId>> = all_bubbles(&h)?
        .iter()
        .map(|b| b.vertices.to_vec())
        .collect();
    for extra in brute.difference(&constructed) {
        report.violations.push(format!("subset scan found unlisted bubble {extra:?}"));
    }
    for missing in constructed.difference(&brute) {
        report.violations.push(format!("constructed bubble {missing:?} fails the subset scan"));
    }
    Ok(report)
}

/// Policy-independent fingerprint of one pipeline run: bubble vertex sets,
/// bubble member-clique sets, and undirected tree edges keyed by the
/// endpoint vertex sets.
#[derive(PartialEq, Eq, Debug)]
struct PipelineFingerprint {
    vertex_sets: BTreeSet<Vec<VertexId>>,
    clique_sets: BTreeSet<Vec<[VertexId; 3]>>,
    tree_edges: BTreeSet<(Vec<VertexId>, Vec<VertexId>)>,
}

fn pipeline_fingerprint(g: &PlanarGraph, policy: TieBreakPolicy) -> Result<PipelineFingerprint> {
    let h = build_forest(g, g.enumerate_3cliques(), policy)?;
    let bubbles = all_bubbles(&h)?;
    let tree = build_bubble_tree(bubbles, &h)?;
    let vertex_sets: BTreeSet<Vec<VertexId>> =
        tree.bubbles.iter().map(|b| b.vertices.to_vec()).collect();
    let clique_sets: BTreeSet<Vec<[VertexId; 3]>> = tree
        .bubbles
        .iter()
        .map(|b| b.member_cliques.iter().map(|&i| h.clique(i).vertices()).collect())
        .collect();
    let tree_edges: BTreeSet<(Vec<VertexId>, Vec<VertexId>)> = tree
        .edges()
        .map(|(p, c, _)| {
            let a = tree.bubbles[p].vertices.to_vec();
            let b = tree.bubbles[c].vertices.to_vec();
            if a <= b { (a, b) } else { (b, a) }
        })
        .collect();
    Ok(PipelineFingerprint { vertex_sets, clique_sets, tree_edges })
}

/// The bubble vertex sets, member-clique sets and undirected tree topology
/// must not depend on the tie-break policy.
pub fn check_tiebreak_independence(g: &PlanarGraph) -> CheckReport {
    let mut report = CheckReport::new("tiebreak_independence");
    let lo = pipeline_fingerprint(g, TieBreakPolicy::SmallestMinVertexIn);
    let hi = pipeline_fingerprint(g, TieBreakPolicy::LargestMinVertexIn);
    match (lo, hi) {
        (Ok(lo), Ok(hi)) => {
            if lo.vertex_sets != hi.vertex_sets {
                report.violations.push(format!(
                    "bubble vertex sets differ between policies: {:?} vs {:?}",
                    lo.vertex_sets, hi.vertex_sets
                ));
            }
            if lo.clique_sets != hi.clique_sets {
                report.violations.push("bubble member-clique sets differ between policies".to_string());
            }
            if lo.tree_edges != hi.tree_edges {
                report.violations.push(format!(
                    "undirected tree edges differ between policies: {:?} vs {:?}",
                    lo.tree_edges, hi.tree_edges
                ));
            }
        }
        (Err(e), _) | (_, Err(e)) => report.violations.push(format!("pipeline failed: {e}")),
    }
    report
}

/// Bubbles cover the graph: vertex sets union to V, edge sets union to E,
/// separating cliques sit in exactly two bubbles and the others in exactly
/// one, and every tree edge is labeled by its endpoints' unique shared
/// clique.
pub fn check_bubble_cover(g: &PlanarGraph) -> CheckReport {
    let mut report = CheckReport::new("bubble_cover");
    let data = derive(g, TieBreakPolicy::SmallestMinVertexIn);
    let h = match build_forest(g, g.enumerate_3cliques(), TieBreakPolicy::SmallestMinVertexIn) {
        Ok(h) => h,
        Err(e) => {
            report.violations.push(format!("forest construction failed: {e}"));
            return report;
        }
    };
    let tree = match all_bubbles(&h).and_then(|bs| build_bubble_tree(bs, &h)) {
        Ok(t) => t,
        Err(e) => {
            report.violations.push(format!("bubble construction failed: {e}"));
            return report;
        }
    };

    let mut vertex_cover: BTreeSet<VertexId> = BTreeSet::new();
    let mut edge_cover: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut clique_count = vec![0usize; h.clique_count()];
    for b in &tree.bubbles {
        let vs = b.vertices.to_vec();
        vertex_cover.extend(vs.iter().copied());
        // edges of the bubble = induced edges, which must also equal the
        // union of its member cliques' edges
        let mut member_edges: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
        for &i in &b.member_cliques {
            let [a, bb, c] = h.clique(i).vertices();
            member_edges.extend([(a, bb), (bb, c), (a, c)]);
            clique_count[i] += 1;
        }
        let mut induced_edges: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
        for (x, i) in vs.iter().enumerate() {
            for j in &vs[x + 1..] {
                if g.has_edge(*i, *j) {
                    induced_edges.insert((*i, *j));
                }
            }
        }
        if member_edges != induced_edges {
            report.violations.push(format!(
                "bubble {} member-clique edges differ from induced edges",
                b.id
            ));
        }
        edge_cover.extend(induced_edges);
    }
    if vertex_cover.len() != g.n() {
        report.violations.push("bubble vertex sets do not cover V".to_string());
    }
    let all_edges: BTreeSet<(VertexId, VertexId)> = g.edges().collect();
    if edge_cover != all_edges {
        report.violations.push("bubble edge sets do not cover E".to_string());
    }
    for (i, &count) in clique_count.iter().enumerate() {
        let expect = if data.separating[i] { 2 } else { 1 };
        if count != expect {
            report.violations.push(format!(
                "clique {:?} lies in {count} bubbles, expected {expect}",
                data.cliques[i]
            ));
        }
    }
    if tree.edge_count() != data.separating.iter().filter(|&&s| s).count() {
        report.violations.push("tree edge count != separating clique count".to_string());
    }
    // at most one member clique dominates a bubble, and it covers the rest
    for b in &tree.bubbles {
        let dominators: Vec<usize> = b
            .member_cliques
            .iter()
            .filter(|&&m| {
                b.member_cliques
                    .iter()
                    .all(|&o| data.closure[o].is_subset(&data.closure[m]))
            })
            .copied()
            .collect();
        if dominators.len() > 1 {
            report.violations.push(format!("bubble {} has {} dominating cliques", b.id, dominators.len()));
        }
        if let crate::bubbles::RootCliqueRef::Real(k) = b.root {
            if dominators != [k] {
                report.violations.push(format!(
                    "bubble {} rooted at {:?} is not dominated by its root",
                    b.id,
                    data.cliques[k]
                ));
            }
            for &m in &b.member_cliques {
                if m != k && h.parent(m) != Some(k) {
                    report.violations.push(format!(
                        "member {:?} of bubble {} is not covered by the root",
                        data.cliques[m], b.id
                    ));
                }
            }
        }
    }
    for (p, c, label) in tree.edges() {
        let shared: Vec<usize> = tree.bubbles[p]
            .member_cliques
            .iter()
            .filter(|i| tree.bubbles[c].member_cliques.contains(i))
            .copied()
            .collect();
        if shared != [label] {
            report.violations.push(format!(
                "edge {p}-{c}: shared cliques {shared:?} vs label {label}"
            ));
        }
    }
    report
}

/// Full suite. The exhaustive subset scan is skipped (and marked so) above
/// 10 vertices.
pub fn run_all(g: &PlanarGraph) -> Vec<CheckReport> {
    let mut out = vec![
        check_poset_axioms(g),
        check_dichotomy(g),
        check_forest(g),
        check_bubble_cover(g),
        check_tiebreak_independence(g),
    ];
    match check_exhaustive_bubbles(g) {
        Ok(r) => out.push(r),
        Err(Error::TooLarge { .. }) => {
            let mut r = CheckReport::new("exhaustive_bubbles");
            r.skipped = true;
            out.push(r);
        }
        Err(e) => {
            let mut r = CheckReport::new("exhaustive_bubbles");
            r.violations.push(format!("failed: {e}"));
            out.push(r);
        }
    }
    out
}
