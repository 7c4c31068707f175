//! Planarity testing.
//!
//! Demoucron-Malgrange-Pertuiset face embedding, run per biconnected
//! component. Quadratic in the worst case, which is fine at the graph sizes
//! this crate targets; the contract is correctness and determinism, not
//! asymptotics.
//!
//! ## Reference
//! - G. Demoucron, Y. Malgrange, R. Pertuiset, "Graphes planaires:
//!   reconnaissance et construction de representations planaires
//!   topologiques", 1964.

use std::collections::HashMap;

use crate::graph::{PlanarGraph, VertexId};

/// True iff the graph is planar. Deterministic and correct for all simple
/// graphs.
pub fn planarity_test(g: &PlanarGraph) -> bool {
    let n = g.n();
    if n <= 4 {
        return true;
    }
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    biconnected_edge_components(g)
        .iter()
        .all(|block| block_planar(block))
}

/// Edge sets of the biconnected components (iterative lowpoint DFS).
fn biconnected_edge_components(g: &PlanarGraph) -> Vec<Vec<(VertexId, VertexId)>> {
    let n = g.n();
    const UNSET: usize = usize::MAX;
    let mut disc = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();
    let mut comps = Vec::new();

    for root in g.vertices() {
        if disc[root as usize] != UNSET {
            continue;
        }
        disc[root as usize] = timer;
        low[root as usize] = timer;
        timer += 1;
        // frames: (vertex, parent, next neighbor index)
        let mut stack: Vec<(VertexId, VertexId, usize)> = vec![(root, VertexId::MAX, 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent, idx) = (frame.0, frame.1, frame.2);
            if idx < g.neighbors(v).len() {
                frame.2 += 1;
                let w = g.neighbors(v)[idx];
                if disc[w as usize] == UNSET {
                    edge_stack.push((v, w));
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w as usize] < disc[v as usize] {
                    edge_stack.push((v, w));
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if let Some(pframe) = stack.last_mut() {
                    let u = pframe.0;
                    low[u as usize] = low[u as usize].min(low[v as usize]);
                    if low[v as usize] >= disc[u as usize] {
                        let mut comp = Vec::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            edge_stack.pop();
                            comp.push((a, b));
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        comps.push(comp);
                    }
                }
            }
        }
    }
    comps
}

/// A fragment relative to the embedded subgraph: either a chord between two
/// embedded vertices or a component of unembedded vertices plus its
/// attachment vertices.
struct Fragment {
    attachments: Vec<u32>,
    component: Vec<u32>, // empty for a chord
    chord: Option<(u32, u32)>,
}

fn block_planar(edges: &[(VertexId, VertexId)]) -> bool {
    // local relabeling
    let mut map: HashMap<VertexId, u32> = HashMap::new();
    let mut local_edges: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        let next = map.len() as u32;
        let la = *map.entry(a).or_insert(next);
        let next = map.len() as u32;
        let lb = *map.entry(b).or_insert(next);
        local_edges.push((la.min(lb), la.max(lb)));
    }
    let n = map.len();
    let m = local_edges.len();
    if n < 3 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &local_edges {
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }

    let cycle = find_cycle(&adj).expect("biconnected block with >= 3 vertices has a cycle");

    let mut embedded_v = vec![false; n];
    let mut embedded_e = vec![false; m];
    let edge_index: HashMap<(u32, u32), usize> =
        local_edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut embedded_count = 0usize;
    let mark_edge = |a: u32, b: u32, embedded_e: &mut Vec<bool>, count: &mut usize| {
        let key = (a.min(b), a.max(b));
        let i = edge_index[&key];
        if !embedded_e[i] {
            embedded_e[i] = true;
            *count += 1;
        }
    };
    for i in 0..cycle.len() {
        embedded_v[cycle[i] as usize] = true;
        mark_edge(cycle[i], cycle[(i + 1) % cycle.len()], &mut embedded_e, &mut embedded_count);
    }

    // both sides of the initial cycle
    let mut faces: Vec<Vec<u32>> = vec![cycle.clone(), cycle];

    while embedded_count < m {
        let fragments = collect_fragments(&adj, &local_edges, &embedded_v, &embedded_e);
        debug_assert!(!fragments.is_empty());

        // admissible faces per fragment; bail out on a stuck fragment
        let mut chosen: Option<(usize, usize)> = None; // (fragment, face)
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = chosen.expect("fragment list is nonempty");
        let frag = &fragments[fi];

        let path = fragment_path(&adj, frag, &embedded_v);
        debug_assert!(path.len() >= 2 && path[0] != *path.last().unwrap());

        // split the face along the path
        let face = faces.swap_remove(face_idx);
        let len = face.len();
        let i = face.iter().position(|&v| v == path[0]).unwrap();
        let j = face.iter().position(|&v| v == *path.last().unwrap()).unwrap();
        let mut arc_a = Vec::new(); // path[0] .. path.last() walking forward
        let mut t = i;
        loop {
            arc_a.push(face[t]);
            if t == j {
                break;
            }
            t = (t + 1) % len;
        }
        let mut arc_b = Vec::new(); // path.last() .. path[0] walking forward
        let mut t = j;
        loop {
            arc_b.push(face[t]);
            if t == i {
                break;
            }
            t = (t + 1) % len;
        }
        let interior = &path[1..path.len() - 1];
        let mut face1 = arc_a;
        face1.extend(interior.iter().rev());
        let mut face2 = arc_b;
        face2.extend(interior.iter());
        faces.push(face1);
        faces.push(face2);

        for &v in interior {
            embedded_v[v as usize] = true;
        }
        for w in path.windows(2) {
            mark_edge(w[0], w[1], &mut embedded_e, &mut embedded_count);
        }
    }
    true
}

/// Some cycle of the block, as a vertex list.
fn find_cycle(adj: &[Vec<u32>]) -> Option<Vec<u32>> {
    let n = adj.len();
    let mut parent = vec![u32::MAX; n];
    let mut state = vec![0u8; n]; // 0 unseen, 1 on stack path, 2 done
    let mut stack: Vec<(u32, usize)> = vec![(0, 0)];
    state[0] = 1;
    while let Some(frame) = stack.last_mut() {
        let (v, idx) = (frame.0, frame.1);
        if idx < adj[v as usize].len() {
            frame.1 += 1;
            let w = adj[v as usize][idx];
            if w == parent[v as usize] {
                continue;
            }
            if state[w as usize] == 1 {
                // back edge: cycle w .. v
                let mut cycle = vec![v];
                let mut cur = v;
                while cur != w {
                    cur = parent[cur as usize];
                    cycle.push(cur);
                }
                cycle.reverse();
                return Some(cycle);
            }
            if state[w as usize] == 0 {
                state[w as usize] = 1;
                parent[w as usize] = v;
                stack.push((w, 0));
            }
        } else {
            state[v as usize] = 2;
            stack.pop();
        }
    }
    None
}

fn collect_fragments(
    adj: &[Vec<u32>],
    edges: &[(u32, u32)],
    embedded_v: &[bool],
    embedded_e: &[bool],
) -> Vec<Fragment> {
    let n = adj.len();
    let mut fragments = Vec::new();

    // chords: unembedded edges between embedded vertices
    for (i, &(a, b)) in edges.iter().enumerate() {
        if !embedded_e[i] && embedded_v[a as usize] && embedded_v[b as usize] {
            fragments.push(Fragment {
                attachments: vec![a, b],
                component: Vec::new(),
                chord: Some((a, b)),
            });
        }
    }

    // components of unembedded vertices
    let mut seen = vec![false; n];
    for start in 0..n as u32 {
        if embedded_v[start as usize] || seen[start as usize] {
            continue;
        }
        let mut comp = Vec::new();
        let mut attach = Vec::new();
        let mut stack = vec![start];
        seen[start as usize] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in &adj[v as usize] {
                if embedded_v[w as usize] {
                    if !attach.contains(&w) {
                        attach.push(w);
                    }
                } else if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        attach.sort_unstable();
        fragments.push(Fragment { attachments: attach, component: comp, chord: None });
    }
    fragments
}

/// A path through the fragment between two distinct attachment vertices.
fn fragment_path(adj: &[Vec<u32>], frag: &Fragment, embedded_v: &[bool]) -> Vec<u32> {
    if let Some((a, b)) = frag.chord {
        return vec![a, b];
    }
    let start = frag.attachments[0];
    // BFS from `start` through component vertices until another attachment
    let mut parent: HashMap<u32, u32> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for &w in &adj[start as usize] {
        if frag.component.binary_search(&w).is_ok() && !parent.contains_key(&w) {
            parent.insert(w, start);
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v as usize] {
            if embedded_v[w as usize] {
                if w != start && frag.attachments.contains(&w) {
                    // reconstruct start .. v, then w
                    let mut path = vec![w, v];
                    let mut cur = v;
                    while cur != start {
                        cur = parent[&cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return path;
                }
            } else if frag.component.binary_search(&w).is_ok() && !parent.contains_key(&w) {
                parent.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment in a biconnected block has at least two attachments");
}
