//! The acyclic conflict graph the sweep builds, and its proper 2-coloring.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One of the two color classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// Per-index color assignment.
pub type Coloring = Vec<Color>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("conflict graph contains a cycle through edge ({u}, {v})")]
pub struct CycleError {
    pub u: usize,
    pub v: usize,
}

/// Undirected graph on point indices. The sweep only ever adds edges
/// between vertices in distinct components, so the graph stays a forest;
/// [`ColorGraph::two_color`] reports a cycle as a contract violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl ColorGraph {
    pub fn new(n: usize) -> Self {
        ColorGraph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in insertion order, endpoints normalized as (smaller, larger).
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Extend the vertex range to `n` (vertices are added as points arrive).
    pub fn grow_to(&mut self, n: usize) {
        debug_assert!(n >= self.n);
        self.n = n;
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "edge endpoints out of range");
        let e = (u.min(v), u.max(v));
        debug_assert!(!self.edges.contains(&e), "duplicate edge {e:?}");
        self.edges.push(e);
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn is_forest(&self) -> bool {
        self.two_color().is_ok()
    }

    /// Proper 2-coloring: the lowest-index vertex of each component is the
    /// root and is colored red; colors alternate along tree edges.
    /// Deterministic for a fixed edge insertion order.
    pub fn two_color(&self) -> Result<Coloring, CycleError> {
        let adj = self.adjacency();
        let mut colors: Vec<Option<Color>> = vec![None; self.n];
        let mut parent: Vec<usize> = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.n {
            if colors[root].is_some() {
                continue;
            }
            colors[root] = Some(Color::Red);
            parent[root] = root;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let next = colors[u].unwrap().flip();
                for &v in &adj[u] {
                    if v == parent[u] && parent[u] != u {
                        // tree edge back to the parent; skip one occurrence
                        continue;
                    }
                    match colors[v] {
                        None => {
                            colors[v] = Some(next);
                            parent[v] = u;
                            queue.push_back(v);
                        }
                        Some(_) if v == parent[u] => {}
                        Some(_) => return Err(CycleError { u, v }),
                    }
                }
            }
        }
        Ok(colors.into_iter().map(|c| c.unwrap()).collect())
    }

    /// Rewrite vertex `t` as `map[t]`; used to carry a coloring computed in
    /// arrival order back to the original point indices.
    pub fn relabel(&self, map: &[usize]) -> ColorGraph {
        assert_eq!(map.len(), self.n);
        let mut g = ColorGraph::new(self.n);
        for &(u, v) in &self.edges {
            g.add_edge(map[u], map[v]);
        }
        g
    }
}
