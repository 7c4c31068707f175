//! Planar maximally filtered graph construction from a symmetric weight
//! matrix: edges are tried in descending weight order and kept whenever the
//! graph stays planar, until the 3n-6 edge budget is full.

use std::io::Read;

use crate::error::{Error, Result};
use crate::graph::{PlanarGraph, VertexId};
use crate::planarity::planarity_test;

const SYMMETRY_TOLERANCE: f64 = 1e-9;

/// Dense symmetric weight matrix; the diagonal is ignored.
#[derive(Clone, Debug)]
pub struct WeightMatrix {
    n: usize,
    labels: Vec<String>,
    w: Vec<f64>,
}

impl WeightMatrix {
    /// Builds a matrix from row-major values, symmetrizing within tolerance.
    pub fn new(n: usize, labels: Option<Vec<String>>, values: Vec<f64>) -> Result<Self> {
        if values.len() != n * n {
            return Err(Error::Matrix(format!(
                "expected {n}x{n} = {} values, got {}",
                n * n,
                values.len()
            )));
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        if labels.len() != n {
            return Err(Error::Matrix(format!("{} labels for a {n}x{n} matrix", labels.len())));
        }
        {
            let unique: std::collections::HashSet<&String> = labels.iter().collect();
            if unique.len() != n {
                return Err(Error::Matrix("duplicate labels".to_string()));
            }
        }
        let mut w = values;
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (w[i * n + j], w[j * n + i]);
                if !a.is_finite() || !b.is_finite() {
                    return Err(Error::Matrix(format!("non-finite weight at ({i}, {j})")));
                }
                if (a - b).abs() > SYMMETRY_TOLERANCE {
                    return Err(Error::AsymmetricMatrix { i, j, a, b });
                }
                let avg = (a + b) / 2.0;
                w[i * n + j] = avg;
                w[j * n + i] = avg;
            }
        }
        Ok(WeightMatrix { n, labels, w })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.w[i * self.n + j]
    }
}

/// Parses a square numeric CSV, with an optional header row and an optional
/// leading label column.
pub fn parse_weight_csv<R: Read>(reader: R) -> Result<WeightMatrix> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut rows: Vec<Vec<String>> = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| Error::Matrix(format!("csv: {e}")))?;
        let row: Vec<String> = rec.iter().map(|s| s.to_string()).collect();
        if !row.iter().all(|s| s.is_empty()) {
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Err(Error::Matrix("empty input".to_string()));
    }

    let numeric = |s: &str| s.parse::<f64>().is_ok();
    let header_present = !rows[0].iter().all(|s| numeric(s));
    let (labels, data): (Option<Vec<String>>, Vec<Vec<String>>) = if header_present {
        if rows.len() < 2 {
            return Err(Error::Matrix("header without data rows".to_string()));
        }
        let row_labels_present = rows[1..].iter().all(|r| !numeric(&r[0]));
        if row_labels_present {
            let labels: Vec<String> = rows[1..].iter().map(|r| r[0].clone()).collect();
            // the header may or may not carry a corner cell
            let header = &rows[0];
            let tail: Vec<String> = if header.len() == labels.len() + 1 {
                header[1..].to_vec()
            } else {
                header.clone()
            };
            if tail != labels {
                return Err(Error::Matrix("row labels do not match column labels".to_string()));
            }
            let data = rows[1..].iter().map(|r| r[1..].to_vec()).collect();
            (Some(labels), data)
        } else {
            (Some(rows[0].clone()), rows[1..].to_vec())
        }
    } else {
        (None, rows)
    };

    let n = data.len();
    let mut values = Vec::with_capacity(n * n);
    for (i, row) in data.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Matrix(format!(
                "row {} has {} values, expected {n} (matrix must be square)",
                i + 1,
                row.len()
            )));
        }
        for (j, cell) in row.iter().enumerate() {
            let v: f64 = cell.parse().map_err(|_| {
                Error::Matrix(format!("non-numeric value '{cell}' at ({i}, {j})"))
            })?;
            values.push(v);
        }
    }
    WeightMatrix::new(n, labels, values)
}

/// Greedy filtered graph: all vertex pairs sorted by weight descending (ties
/// broken by index pair), each inserted iff the graph stays planar, stopping
/// at 3n-6 edges. Planarity is re-tested from scratch per candidate.
pub fn build_pmfg(m: &WeightMatrix) -> Result<PlanarGraph> {
    let n = m.n();
    if n < 4 {
        return Err(Error::OrderTooSmall { n, min: 4 });
    }
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    pairs.sort_by(|&(i1, j1), &(i2, j2)| {
        m.weight(i2, j2)
            .partial_cmp(&m.weight(i1, j1))
            .expect("weights are finite")
            .then(i1.cmp(&i2))
            .then(j1.cmp(&j2))
    });

    let target = 3 * n - 6;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(target);
    for (i, j) in pairs {
        if edges.len() == target {
            break;
        }
        edges.push((i as VertexId, j as VertexId));
        let candidate = PlanarGraph::from_edges(n, &edges)?;
        if !planarity_test(&candidate) {
            edges.pop();
        }
    }
    debug_assert_eq!(edges.len(), target);
    PlanarGraph::with_labels(m.labels(), &edges)
}
