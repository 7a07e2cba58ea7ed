//! Simple undirected graphs (1-based vertex labels) and their integer
//! Laplacians, plus the two families under study: paths and double stars.
//!
//! Double stars use a fixed labeling so matrix-level tests are stable:
//! the pendants of the second center come first (for `S(m,2)` that is the
//! strongly cospectral pendant pair), then the two centers, then the
//! remaining pendants.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Immutable simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Validates and builds a graph from explicit edges (self-loops and
    /// duplicate edges rejected; endpoints must be in `1..=n`).
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter("graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            if u < 1 || u > n || v < 1 || v > n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) out of range 1..={n}"
                )));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(Error::InvalidParameter(format!("duplicate edge {e:?}")));
            }
        }
        Ok(Graph { n, edges: set })
    }

    /// The path on `n` vertices, labeled `1..=n` in chain order.
    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter("path needs at least one vertex".into()));
        }
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges)
    }

    /// The double star `S(m, n)`: two adjacent centers, `m` pendants on one
    /// and `n` on the other.
    ///
    /// Labels: `1..=n` are the pendants of the first center `u = n+1`
    /// (so for `n = 2` vertices 1 and 2 are the pendant pair next to the
    /// degree-3 center), `v = n+2` is the other center, and `n+3..=n+m+2`
    /// are its `m` pendants.
    pub fn double_star(m: usize, n: usize) -> Result<Graph> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameter(
                "double star needs at least one pendant on each center".into(),
            ));
        }
        let u = n + 1;
        let v = n + 2;
        let mut edges: Vec<(usize, usize)> = (1..=n).map(|p| (p, u)).collect();
        edges.push((u, v));
        edges.extend((1..=m).map(|p| (v, n + 2 + p)));
        Graph::new(m + n + 2, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1usize];
        seen[1] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v { b } else if b == v { a } else { continue };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen[1..].iter().all(|&s| s)
    }

    /// Integer Laplacian `D - A`.
    pub fn laplacian(&self) -> Laplacian {
        let mut entries = vec![vec![0i64; self.n]; self.n];
        for &(u, v) in &self.edges {
            entries[u - 1][v - 1] = -1;
            entries[v - 1][u - 1] = -1;
            entries[u - 1][u - 1] += 1;
            entries[v - 1][v - 1] += 1;
        }
        Laplacian { entries }
    }
}

/// Symmetric integer Laplacian matrix (0-based storage; the graph's
/// vertex `v` is row `v - 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laplacian {
    entries: Vec<Vec<i64>>,
}

impl Laplacian {
    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn to_f64(&self) -> ndarray::Array2<f64> {
        let n = self.order();
        ndarray::Array2::from_shape_fn((n, n), |(i, j)| self.entries[i][j] as f64)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Exact row sums; all zero for a valid Laplacian.
    pub fn row_sums(&self) -> Vec<i64> {
        self.entries.iter().map(|r| r.iter().sum()).collect()
    }
}
