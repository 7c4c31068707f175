//! Graph representation, edge-list parsing, maximal-planarity validation,
//! 3-clique enumeration and component splitting after clique removal.

use std::collections::HashMap;
use std::fmt;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::planarity::planarity_test;
use crate::vertex_set::VertexSet;

/// Dense 0-based vertex index assigned by interning input labels.
pub type VertexId = u32;

/// Three mutually adjacent vertices, stored sorted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique3 {
    verts: [VertexId; 3],
}

impl Clique3 {
    /// Sorts the triple; the vertices must be distinct.
    pub fn new(a: VertexId, b: VertexId, c: VertexId) -> Self {
        assert!(a != b && b != c && a != c, "clique vertices must be distinct");
        let mut verts = [a, b, c];
        verts.sort_unstable();
        Clique3 { verts }
    }

    pub fn vertices(&self) -> [VertexId; 3] {
        self.verts
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.verts.contains(&v)
    }
}

impl fmt::Debug for Clique3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.verts[0], self.verts[1], self.verts[2])
    }
}

impl fmt::Display for Clique3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.verts[0], self.verts[1], self.verts[2])
    }
}

/// Simple undirected graph with interned string labels and sorted adjacency.
///
/// Immutable after construction; all queries are pure reads.
#[derive(Clone, Debug)]
pub struct PlanarGraph {
    adj: Vec<Vec<VertexId>>,
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    edge_count: usize,
}

impl PlanarGraph {
    fn empty() -> Self {
        PlanarGraph {
            adj: Vec::new(),
            labels: Vec::new(),
            index: HashMap::new(),
            edge_count: 0,
        }
    }

    fn intern(&mut self, label: &str) -> VertexId {
        if let Some(&v) = self.index.get(label) {
            return v;
        }
        let v = self.adj.len() as VertexId;
        self.adj.push(Vec::new());
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), v);
        v
    }

    fn push_edge(&mut self, u: VertexId, v: VertexId) {
        self.adj[u as usize].push(v);
        self.adj[v as usize].push(u);
        self.edge_count += 1;
    }

    fn sort_adjacency(&mut self) {
        for nbrs in &mut self.adj {
            nbrs.sort_unstable();
        }
    }

    /// Builds a graph from labeled edges. Labels are interned in first-seen
    /// order. Self-loops and duplicate edges are rejected.
    pub fn from_labeled_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let mut g = Self::empty();
        for (i, (a, b)) in edges.iter().enumerate() {
            let (a, b) = (a.as_ref(), b.as_ref());
            if a == b {
                return Err(Error::SelfLoop { line: i + 1, label: a.to_string() });
            }
            let u = g.intern(a);
            let v = g.intern(b);
            if g.adj[u as usize].contains(&v) {
                return Err(Error::DuplicateEdge { line: i + 1, u: a.to_string(), v: b.to_string() });
            }
            g.push_edge(u, v);
        }
        g.sort_adjacency();
        Ok(g)
    }

    /// Builds a graph on vertices `0..n` with decimal-string labels.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Self::with_labels(&labels, edges)
    }

    /// Builds a graph whose vertex `i` carries `labels[i]`. Labels must be
    /// distinct.
    pub fn with_labels(labels: &[String], edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let n = labels.len();
        let mut g = Self::empty();
        for (i, label) in labels.iter().enumerate() {
            if g.intern(label) as usize != i {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("duplicate vertex label '{label}'"),
                });
            }
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            assert!((u as usize) < n && (v as usize) < n, "edge endpoint out of range");
            if u == v {
                return Err(Error::SelfLoop { line: i + 1, label: labels[u as usize].clone() });
            }
            if g.adj[u as usize].contains(&v) {
                return Err(Error::DuplicateEdge {
                    line: i + 1,
                    u: labels[u as usize].clone(),
                    v: labels[v as usize].clone(),
                });
            }
            g.push_edge(u, v);
        }
        g.sort_adjacency();
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.adj.len() as VertexId
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edges as (u, v) pairs with u < v, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v as usize]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn is_clique(&self, k: &Clique3) -> bool {
        let [a, b, c] = k.vertices();
        (a as usize) < self.n()
            && (c as usize) < self.n()
            && self.has_edge(a, b)
            && self.has_edge(b, c)
            && self.has_edge(a, c)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0 as VertexId];
        seen[0] = true;
        let mut count = 0;
        while let Some(u) = stack.pop() {
            count += 1;
            for &w in self.neighbors(u) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        count == self.n()
    }

    /// Connected components of the induced subgraph on V minus the clique's
    /// vertices, each sorted, ordered by smallest member.
    pub fn components_after_removal(&self, k: &Clique3) -> Result<Vec<Vec<VertexId>>> {
        if !self.is_clique(k) {
            let [a, b, c] = k.vertices();
            return Err(Error::InvalidClique(a, b, c));
        }
        let mut removed = vec![false; self.n()];
        for v in k.vertices() {
            removed[v as usize] = true;
        }
        Ok(self.components_excluding(&removed))
    }

    /// Flood fill over vertices not marked in `excluded`.
    pub(crate) fn components_excluding(&self, excluded: &[bool]) -> Vec<Vec<VertexId>> {
        let mut seen = excluded.to_vec();
        let mut comps = Vec::new();
        for start in self.vertices() {
            if seen[start as usize] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start as usize] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in self.neighbors(u) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// Induced subgraph on `keep`, with vertices relabeled 0..keep.len() in
    /// the order given. Labels are carried over.
    pub fn induced(&self, keep: &[VertexId]) -> PlanarGraph {
        let mut g = Self::empty();
        let mut map = HashMap::new();
        for &v in keep {
            let nv = g.intern(&self.labels[v as usize]);
            map.insert(v, nv);
        }
        for &v in keep {
            for &w in self.neighbors(v) {
                if w > v {
                    if let Some(&nw) = map.get(&w) {
                        g.push_edge(map[&v], nw);
                    }
                }
            }
        }
        g.sort_adjacency();
        g
    }

    /// Every triangle exactly once, sorted triples in lexicographic order.
    ///
    /// Scans the common neighbors of each edge's endpoints, keeping only the
    /// third vertex above the edge so each triangle is reported once.
    pub fn enumerate_3cliques(&self) -> Vec<Clique3> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            // intersect sorted adjacency lists
            let (mut i, mut j) = (0, 0);
            let (nu, nv) = (self.neighbors(u), self.neighbors(v));
            while i < nu.len() && j < nv.len() {
                match nu[i].cmp(&nv[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        if nu[i] > v {
                            out.push(Clique3::new(u, v, nu[i]));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn validate_maximal_planar(&self) -> ValidationReport {
        let n = self.n();
        let m = self.edge_count;
        // simplicity is enforced structurally at construction; re-check anyway
        let mut is_simple = true;
        for v in self.vertices() {
            let nbrs = self.neighbors(v);
            if nbrs.contains(&v) || nbrs.windows(2).any(|w| w[0] == w[1]) {
                is_simple = false;
            }
        }
        let is_connected = self.is_connected();
        let edge_count_ok = n >= 3 && m == 3 * n - 6;
        let is_planar = planarity_test(self);
        let mut problems = Vec::new();
        if !is_simple {
            problems.push("graph is not simple".to_string());
        }
        if !is_connected {
            problems.push("graph is not connected".to_string());
        }
        if !edge_count_ok {
            let expect = if n >= 3 { (3 * n - 6).to_string() } else { "-".to_string() };
            problems.push(format!("edge count {m} != 3n-6 = {expect}"));
        }
        if !is_planar {
            problems.push("graph is not planar".to_string());
        }
        if n < 4 {
            problems.push(format!("graph order {n} is below the minimum of 4"));
        }
        let message = if problems.is_empty() {
            format!("maximal planar graph with {n} vertices and {m} edges")
        } else {
            problems.join("; ")
        };
        ValidationReport { is_simple, is_connected, edge_count_ok, is_planar, n, m, message }
    }
}

/// Outcome of `validate_maximal_planar`; failures are carried, not thrown.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub is_simple: bool,
    pub is_connected: bool,
    pub edge_count_ok: bool,
    pub is_planar: bool,
    pub n: usize,
    pub m: usize,
    pub message: String,
}

impl ValidationReport {
    /// All structural checks pass and the order is at least 4.
    pub fn accepted(&self) -> bool {
        self.is_simple && self.is_connected && self.edge_count_ok && self.is_planar && self.n >= 4
    }
}

/// Parses the edge-list format: one edge per line as two whitespace-separated
/// labels, `#` comments and blank lines ignored, duplicates and self-loops
/// rejected.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<PlanarGraph> {
    let mut g = PlanarGraph::empty();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = lineno + 1;
        let content = line.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let a = tokens.next();
        let b = tokens.next();
        let extra = tokens.next();
        let (a, b) = match (a, b, extra) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected two whitespace-separated labels, got '{content}'"),
                })
            }
        };
        if a == b {
            return Err(Error::SelfLoop { line: lineno, label: a.to_string() });
        }
        let u = g.intern(a);
        let v = g.intern(b);
        if g.adj[u as usize].contains(&v) {
            return Err(Error::DuplicateEdge { line: lineno, u: a.to_string(), v: b.to_string() });
        }
        g.push_edge(u, v);
    }
    g.sort_adjacency();
    Ok(g)
}

/// Vertex set of a clique as a bitset over the graph's vertices.
pub(crate) fn clique_set(n: usize, k: &Clique3) -> VertexSet {
    VertexSet::from_slice(n, &k.vertices())
}
