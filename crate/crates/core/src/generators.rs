//! Deterministic example graphs and seeded random triangulations.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{PlanarGraph, VertexId};

/// Recursive triangulation grown from a tetrahedron.
#[derive(Clone, Copy, Debug)]
pub struct ApollonianSpec {
    pub generation: u32,
}

impl ApollonianSpec {
    pub fn build(&self) -> Result<PlanarGraph> {
        apollonian(self.generation)
    }
}

/// Generation 1 is K4 on vertices 0..4 with the face {0,1,2} designated as
/// the never-subdivided outer face. Each later generation inserts one vertex
/// into every current internal face and joins it to the face's corners.
/// Vertices are labeled by insertion order.
pub fn apollonian(generation: u32) -> Result<PlanarGraph> {
    apollonian_with_faces(generation).map(|(g, _)| g)
}

/// Also returns the internal face list after the last generation
/// (3^generation faces).
pub(crate) fn apollonian_with_faces(generation: u32) -> Result<(PlanarGraph, Vec<[VertexId; 3]>)> {
    if generation < 1 {
        return Err(Error::InvalidGeneration(generation));
    }
    let mut edges: Vec<(VertexId, VertexId)> =
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut faces: Vec<[VertexId; 3]> = vec![[0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut next: VertexId = 4;
    for _ in 2..=generation {
        let mut new_faces = Vec::with_capacity(faces.len() * 3);
        for [a, b, c] in faces {
            let v = next;
            next += 1;
            edges.push((a, v));
            edges.push((b, v));
            edges.push((c, v));
            new_faces.push([a, b, v]);
            new_faces.push([a, c, v]);
            new_faces.push([b, c, v]);
        }
        faces = new_faces;
    }
    let g = PlanarGraph::from_edges(next as usize, &edges)?;
    Ok((g, faces))
}

/// Two K4s glued along the triangle {a,c,d}: the complete graph on
/// {a,b,c,d,e} minus the edge b-e. Its unique separating 3-clique is
/// {a,c,d}, splitting off b on one side and e on the other, so the analysis
/// finds exactly two bubbles joined by {a,c,d}.
pub fn two_bubble_example() -> PlanarGraph {
    let labels = ["a", "b", "c", "d", "e"];
    let mut edges = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            if (labels[i], labels[j]) != ("b", "e") {
                edges.push((labels[i], labels[j]));
            }
        }
    }
    PlanarGraph::from_labeled_edges(&edges).expect("fixed edge list is valid")
}

/// Two five-vertex fans glued on the shared triangle {0,1,2}; removing that
/// triangle splits the rest into the equal halves {3..8} and {8..13}, so the
/// tie-break policy decides which half is the interior.
pub fn equal_split_example() -> PlanarGraph {
    let mut edges: Vec<(VertexId, VertexId)> = vec![(0, 1), (0, 2), (1, 2)];
    for side in [[3u32, 4, 5, 6, 7], [8, 9, 10, 11, 12]] {
        let mut anchor = 2;
        for v in side {
            edges.push((0, v));
            edges.push((1, v));
            edges.push((anchor, v));
            anchor = v;
        }
    }
    PlanarGraph::from_edges(13, &edges).expect("fixed edge list is valid")
}

/// Stacked triangulation: start from K4 and repeatedly insert a vertex into
/// a uniformly random face until `n` vertices. Deterministic for a fixed
/// (n, seed).
pub fn random_triangulation(n: usize, seed: u64) -> Result<PlanarGraph> {
    if n < 4 {
        return Err(Error::OrderTooSmall { n, min: 4 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(VertexId, VertexId)> =
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut faces: Vec<[VertexId; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    for v in 4..n as VertexId {
        let idx = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.remove(idx);
        edges.push((a, v));
        edges.push((b, v));
        edges.push((c, v));
        faces.push([a, b, v]);
        faces.push([a, c, v]);
        faces.push([b, c, v]);
    }
    PlanarGraph::from_edges(n, &edges)
}

/// Catalog of fixed polyhedral graphs: "k4", "octahedron", "icosahedron".
pub fn named_graph(name: &str) -> Result<PlanarGraph> {
    match name {
        "k4" => PlanarGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        "octahedron" => {
            // all pairs except the three antipodal ones
            let mut edges = Vec::new();
            for u in 0..6u32 {
                for v in u + 1..6 {
                    if !matches!((u, v), (0, 1) | (2, 3) | (4, 5)) {
                        edges.push((u, v));
                    }
                }
            }
            PlanarGraph::from_edges(6, &edges)
        }
        "icosahedron" => {
            // apexes 0 and 11, pentagonal rings 1..6 and 6..11
            let top = [1u32, 2, 3, 4, 5];
            let bot = [6u32, 7, 8, 9, 10];
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((0, top[i]));
                edges.push((11, bot[i]));
                edges.push((top[i], top[(i + 1) % 5]));
                edges.push((bot[i], bot[(i + 1) % 5]));
                edges.push((top[i], bot[i]));
                edges.push((top[i], bot[(i + 4) % 5]));
            }
            PlanarGraph::from_edges(12, &edges)
        }
        other => Err(Error::UnknownGraphName(other.to_string())),
    }
}

/// Every fixed generator output, for sweep-style tests.
pub fn catalog() -> Vec<(String, PlanarGraph)> {
    let mut out = vec![
        ("k4".to_string(), named_graph("k4").unwrap()),
        ("octahedron".to_string(), named_graph("octahedron").unwrap()),
        ("icosahedron".to_string(), named_graph("icosahedron").unwrap()),
        ("two-bubble".to_string(), two_bubble_example()),
        ("equal-split".to_string(), equal_split_example()),
    ];
    for gen in 1..=3 {
        out.push((format!("apollonian-{gen}"), apollonian(gen).unwrap()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Clique3;

    #[test]
    fn apollonian_counts() {
        for (gen, n, m) in [(1u32, 4usize, 6usize), (2, 7, 15), (3, 16, 42)] {
            let g = apollonian(gen).unwrap();
            assert_eq!(g.n(), n, "gen {gen}");
            assert_eq!(g.edge_count(), m, "gen {gen}");
            assert_eq!(m, 3 * n - 6);
        }
        assert!(matches!(apollonian(0), Err(Error::InvalidGeneration(0))));
    }

    #[test]
    fn apollonian_face_bookkeeping() {
        for gen in 1..=4u32 {
            let (g, faces) = apollonian_with_faces(gen).unwrap();
            assert_eq!(faces.len(), 3usize.pow(gen));
            // internal faces of the final triangulation: 2n - 4 total minus
            // the never-subdivided outer face
            assert_eq!(faces.len(), 2 * g.n() - 4 - 1);
            for f in &faces {
                assert!(g.has_edge(f[0], f[1]) && g.has_edge(f[1], f[2]) && g.has_edge(f[0], f[2]));
            }
        }
        // growth: V(g) = V(g-1) + 3^(g-1)
        for gen in 2..=5u32 {
            let prev = apollonian(gen - 1).unwrap().n();
            let cur = apollonian(gen).unwrap().n();
            assert_eq!(cur, prev + 3usize.pow(gen - 1));
        }
    }

    #[test]
    fn two_bubble_fixture() {
        let g = two_bubble_example();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.edge_count(), 3 * g.n() - 6);
        assert!(g.validate_maximal_planar().accepted());
        assert_eq!(g.label(0), "a");
        assert_eq!(g.label(4), "e");
        assert!(!g.has_edge(1, 4)); // b-e is the missing pair
        // {a,c,d} is the unique separating clique
        let mut separating = Vec::new();
        for k in g.enumerate_3cliques() {
            if g.components_after_removal(&k).unwrap().len() == 2 {
                separating.push(k);
            }
        }
        assert_eq!(separating, vec![Clique3::new(0, 2, 3)]);
    }

    #[test]
    fn equal_split_fixture() {
        let g = equal_split_example();
        assert_eq!(g.n(), 13);
        assert_eq!(g.edge_count(), 33);
        assert!(g.validate_maximal_planar().accepted());
        let comps = g.components_after_removal(&Clique3::new(0, 1, 2)).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], vec![3, 4, 5, 6, 7]);
        assert_eq!(comps[1], vec![8, 9, 10, 11, 12]);
    }

    #[test]
    fn random_triangulation_properties() {
        assert!(matches!(
            random_triangulation(3, 1),
            Err(Error::OrderTooSmall { n: 3, min: 4 })
        ));
        let g = random_triangulation(4, 99).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);

        let g = random_triangulation(10, 42).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 24);
        assert!(g.validate_maximal_planar().accepted());

        // determinism
        let a = random_triangulation(17, 7).unwrap();
        let b = random_triangulation(17, 7).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
    }

    #[test]
    fn named_graphs() {
        let k4 = named_graph("k4").unwrap();
        assert_eq!((k4.n(), k4.edge_count()), (4, 6));
        let oct = named_graph("octahedron").unwrap();
        assert_eq!((oct.n(), oct.edge_count()), (6, 12));
        let ico = named_graph("icosahedron").unwrap();
        assert_eq!((ico.n(), ico.edge_count()), (12, 30));
        // the polyhedral graphs have no separating triangle
        for g in [&oct, &ico] {
            for k in g.enumerate_3cliques() {
                assert_eq!(g.components_after_removal(&k).unwrap().len(), 1);
            }
        }
        assert!(matches!(named_graph("cube"), Err(Error::UnknownGraphName(_))));
    }

    #[test]
    fn all_generators_validate() {
        for (name, g) in catalog() {
            assert!(g.validate_maximal_planar().accepted(), "{name}");
        }
        for n in [4, 5, 8, 13, 30] {
            for seed in 0..5 {
                let g = random_triangulation(n, seed).unwrap();
                assert!(g.validate_maximal_planar().accepted(), "n={n} seed={seed}");
            }
        }
    }
}
