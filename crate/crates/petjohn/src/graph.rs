use std::collections::VecDeque;
use std::ops::Deref;

use jacklr_exact::{int, linalg, Rational};

use crate::Subset;

/// A simple graph on labelled subsets.
#[derive(Clone, Debug)]
pub struct Graph {
    vertices: Vec<Subset>,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(vertices: Vec<Subset>, adjacent: impl Fn(Subset, Subset) -> bool) -> Self {
        let adj = vertices
            .iter()
            .map(|&a| vertices.iter().map(|&b| a != b && adjacent(a, b)).collect())
            .collect();
        Graph { vertices, adj }
    }

    pub fn vertices(&self) -> &[Subset] {
        &self.vertices
    }

    pub fn index_of(&self, v: Subset) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&j| self.adj[i][j]).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|row| row.iter().filter(|&&x| x).count()).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Length of a shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertices.len();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbours(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<Rational>> {
        self.adj
            .iter()
            .map(|row| row.iter().map(|&x| int(x as i64)).collect())
            .collect()
    }
}

/// Dimension of the `k`-eigenspace of the adjacency matrix, by exact rank.
pub fn eigenvalue_multiplicity(g: &Graph, k: i64) -> usize {
    let mut m = g.adjacency_matrix();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = &row[i] - int(k);
    }
    linalg::nullity(&m)
}

/// The Kneser graph `K(5,2)` on 2-subsets of `{1,..,5}`.
#[derive(Clone, Debug)]
pub struct PetersenGraph(Graph);

impl PetersenGraph {
    pub fn new() -> Self {
        PetersenGraph(Graph::new(Subset::all(2, true), |a, b| a.is_disjoint(b)))
    }
}

impl Default for PetersenGraph {
    fn default() -> Self {
        Self::new()
    }
}

impl Deref for PetersenGraph {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.0
    }
}

/// `J(6,3)`: 3-subsets of `{0,..,5}` meeting in two elements.
#[derive(Clone, Debug)]
pub struct JohnsonGraph(Graph);

impl JohnsonGraph {
    pub fn new() -> Self {
        JohnsonGraph(Graph::new(Subset::all(3, false), |a, b| a.distance(b) == 1))
    }
}

impl Default for JohnsonGraph {
    fn default() -> Self {
        Self::new()
    }
}

impl Deref for JohnsonGraph {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.0
    }
}
