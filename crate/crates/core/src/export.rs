//! JSON, DOT and edge-list serialization of graphs, hierarchies and bubble
//! trees. All outputs are byte-deterministic for a given analysis.

use serde_json::{json, Value};

use crate::bubbles::{BubbleTree, RootCliqueRef};
use crate::graph::{Clique3, PlanarGraph};
use crate::hierarchy::HierarchyForest;

fn clique_labels(g: &PlanarGraph, k: &Clique3) -> Vec<String> {
    k.vertices().iter().map(|&v| g.label(v).to_string()).collect()
}

fn clique_display(g: &PlanarGraph, k: &Clique3) -> String {
    let [a, b, c] = k.vertices();
    format!("({},{},{})", g.label(a), g.label(b), g.label(c))
}

/// One object per clique: labels, separating flag, interior size, parent
/// clique (or null) and nesting depth.
pub fn hierarchy_json(g: &PlanarGraph, h: &HierarchyForest) -> String {
    let entries: Vec<Value> = (0..h.clique_count())
        .map(|i| {
            json!({
                "clique": clique_labels(g, h.clique(i)),
                "separating": h.is_separating(i),
                "interior_size": h.orientation(i).interior.len(),
                "parent": h.parent(i).map(|p| json!(clique_labels(g, h.clique(p)))).unwrap_or(Value::Null),
                "depth": h.depth(i),
            })
        })
        .collect();
    serde_json::to_string_pretty(&Value::Array(entries)).expect("serializable")
}

/// One node per clique, one directed edge from each covered clique to its
/// cover.
pub fn hierarchy_dot(g: &PlanarGraph, h: &HierarchyForest) -> String {
    let mut out = String::from("digraph hierarchy {\n");
    for i in 0..h.clique_count() {
        out.push_str(&format!("  k{} [label=\"{}\"];\n", i, clique_display(g, h.clique(i))));
    }
    for i in 0..h.clique_count() {
        if let Some(p) = h.parent(i) {
            out.push_str(&format!("  k{i} -> k{p};\n"));
        }
    }
    out.push_str("}\n");
    out
}

/// Bubble list plus tree edges; the maximal bubble's root clique is the
/// string "imaginary", edges run parent to child and carry the shared
/// clique.
pub fn bubbles_json(g: &PlanarGraph, h: &HierarchyForest, t: &BubbleTree) -> String {
    let bubbles: Vec<Value> = t
        .bubbles
        .iter()
        .map(|b| {
            let root = match b.root {
                RootCliqueRef::Real(k) => json!(clique_labels(g, h.clique(k))),
                RootCliqueRef::Imaginary => json!("imaginary"),
            };
            let vertices: Vec<String> =
                b.vertices.iter().map(|v| g.label(v).to_string()).collect();
            let cliques: Vec<Value> = b
                .member_cliques
                .iter()
                .map(|&i| json!(clique_labels(g, h.clique(i))))
                .collect();
            json!({
                "id": b.id,
                "root_clique": root,
                "vertices": vertices,
                "cliques": cliques,
            })
        })
        .collect();
    let tree: Vec<Value> = t
        .edges()
        .map(|(parent, child, label)| {
            json!({
                "parent": parent,
                "child": child,
                "shared_clique": clique_labels(g, h.clique(label)),
            })
        })
        .collect();
    serde_json::to_string_pretty(&json!({ "bubbles": bubbles, "tree": tree }))
        .expect("serializable")
}

/// Bubble nodes labeled "B{id}|{size}"; edges parent to child labeled with
/// the shared clique.
pub fn bubbles_dot(g: &PlanarGraph, h: &HierarchyForest, t: &BubbleTree) -> String {
    let mut out = String::from("digraph bubbles {\n");
    for b in &t.bubbles {
        out.push_str(&format!("  b{} [label=\"B{}|{}\"];\n", b.id, b.id, b.vertex_count()));
    }
    for (parent, child, label) in t.edges() {
        out.push_str(&format!(
            "  b{parent} -> b{child} [label=\"{}\"];\n",
            clique_display(g, h.clique(label))
        ));
    }
    out.push_str("}\n");
    out
}

/// One edge per line as two labels, in vertex-id order.
pub fn edge_list(g: &PlanarGraph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(g.label(u));
        out.push(' ');
        out.push_str(g.label(v));
        out.push('\n');
    }
    out
}

pub fn graph_dot(g: &PlanarGraph) -> String {
    let mut out = String::from("graph g {\n");
    for v in g.vertices() {
        out.push_str(&format!("  v{v} [label=\"{}\"];\n", g.label(v)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  v{u} -- v{v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn graph_json(g: &PlanarGraph) -> String {
    let vertices: Vec<&str> = g.vertices().map(|v| g.label(v)).collect();
    let edges: Vec<[&str; 2]> = g.edges().map(|(u, v)| [g.label(u), g.label(v)]).collect();
    serde_json::to_string_pretty(&json!({ "vertices": vertices, "edges": edges }))
        .expect("serializable")
}

/// Headline numbers of one analysis.
#[derive(Clone, Debug)]
pub struct Summary {
    pub vertices: usize,
    pub edges: usize,
    pub cliques: usize,
    pub separating_cliques: usize,
    pub maximal_elements: usize,
    pub max_depth: usize,
    pub bubbles: usize,
}

pub fn summarize(g: &PlanarGraph, h: &HierarchyForest, t: &BubbleTree) -> Summary {
    Summary {
        vertices: g.n(),
        edges: g.edge_count(),
        cliques: h.clique_count(),
        separating_cliques: h.separating_count(),
        maximal_elements: h.maximal_elements().len(),
        max_depth: h.max_depth(),
        bubbles: t.bubbles.len(),
    }
}

impl Summary {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&json!({
            "vertices": self.vertices,
            "edges": self.edges,
            "cliques": self.cliques,
            "separating_cliques": self.separating_cliques,
            "maximal_elements": self.maximal_elements,
            "max_depth": self.max_depth,
            "bubbles": self.bubbles,
        }))
        .expect("serializable")
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "vertices: {}", self.vertices)?;
        writeln!(f, "edges: {}", self.edges)?;
        writeln!(f, "cliques: {}", self.cliques)?;
        writeln!(f, "separating_cliques: {}", self.separating_cliques)?;
        writeln!(f, "maximal_elements: {}", self.maximal_elements)?;
        writeln!(f, "max_depth: {}", self.max_depth)?;
        write!(f, "bubbles: {}", self.bubbles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bubbles::{all_bubbles, build_bubble_tree};
    use crate::generators;
    use crate::hierarchy::{build_forest, TieBreakPolicy};

    fn pipeline(g: &PlanarGraph) -> (HierarchyForest, BubbleTree) {
        let h = build_forest(g, g.enumerate_3cliques(), TieBreakPolicy::SmallestMinVertexIn).unwrap();
        let t = build_bubble_tree(all_bubbles(&h).unwrap(), &h).unwrap();
        (h, t)
    }

    #[test]
    fn hierarchy_json_schema() {
        let g = generators::two_bubble_example();
        let (h, _) = pipeline(&g);
        let parsed: serde_json::Value = serde_json::from_str(&hierarchy_json(&g, &h)).unwrap();
        let arr = parsed.as_array().unwrap();
        assert_eq!(arr.len(), 7);
        let sep = arr
            .iter()
            .find(|e| e["clique"] == serde_json::json!(["a", "c", "d"]))
            .unwrap();
        assert_eq!(sep["separating"], serde_json::json!(true));
        assert_eq!(sep["interior_size"], serde_json::json!(1));
        assert_eq!(sep["parent"], serde_json::Value::Null);
        assert_eq!(sep["depth"], serde_json::json!(0));
        let child = arr
            .iter()
            .find(|e| e["clique"] == serde_json::json!(["a", "b", "c"]))
            .unwrap();
        assert_eq!(child["parent"], serde_json::json!(["a", "c", "d"]));
        assert_eq!(child["depth"], serde_json::json!(1));
    }

    #[test]
    fn bubbles_json_schema() {
        let g = generators::two_bubble_example();
        let (h, t) = pipeline(&g);
        let parsed: serde_json::Value = serde_json::from_str(&bubbles_json(&g, &h, &t)).unwrap();
        let bubbles = parsed["bubbles"].as_array().unwrap();
        assert_eq!(bubbles.len(), 2);
        assert_eq!(bubbles[0]["root_clique"], serde_json::json!(["a", "c", "d"]));
        assert_eq!(bubbles[0]["vertices"], serde_json::json!(["a", "b", "c", "d"]));
        assert_eq!(bubbles[1]["root_clique"], serde_json::json!("imaginary"));
        let tree = parsed["tree"].as_array().unwrap();
        assert_eq!(tree.len(), 1);
        assert_eq!(tree[0]["parent"], serde_json::json!(1));
        assert_eq!(tree[0]["child"], serde_json::json!(0));
        assert_eq!(tree[0]["shared_clique"], serde_json::json!(["a", "c", "d"]));
    }

    #[test]
    fn dot_outputs_are_wellformed() {
        let g = generators::apollonian(2).unwrap();
        let (h, t) = pipeline(&g);
        let hd = hierarchy_dot(&g, &h);
        assert!(hd.starts_with("digraph hierarchy {"));
        assert!(hd.trim_end().ends_with('}'));
        assert_eq!(hd.matches("->").count(), 9); // 13 cliques, 4 roots
        let bd = bubbles_dot(&g, &h, &t);
        assert!(bd.contains("[label=\"B0|4\"]"));
        assert_eq!(bd.matches("->").count(), 3);
        let gd = graph_dot(&g);
        assert_eq!(gd.matches("--").count(), g.edge_count());
    }

    #[test]
    fn edge_list_round_trips() {
        let g = generators::two_bubble_example();
        let text = edge_list(&g);
        let back = crate::graph::parse_edge_list(std::io::Cursor::new(text)).unwrap();
        assert_eq!(back.n(), g.n());
        assert_eq!(back.edge_count(), g.edge_count());
        assert!(back.validate_maximal_planar().accepted());
    }

    #[test]
    fn summary_values() {
        let g = generators::two_bubble_example();
        let (h, t) = pipeline(&g);
        let s = summarize(&g, &h, &t);
        assert_eq!(s.vertices, 5);
        assert_eq!(s.edges, 9);
        assert_eq!(s.cliques, 7);
        assert_eq!(s.separating_cliques, 1);
        assert_eq!(s.maximal_elements, 4);
        assert_eq!(s.max_depth, 1);
        assert_eq!(s.bubbles, 2);
        let text = s.to_string();
        assert!(text.contains("bubbles: 2"));
        let parsed: serde_json::Value = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(parsed["bubbles"], serde_json::json!(2));
    }
}
