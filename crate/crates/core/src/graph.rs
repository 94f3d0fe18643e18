//! Simple bipartite graphs with an explicit X/Y labeling.
//!
//! Vertices are dense indices. The X part always occupies `0..x_count` and
//! the Y part `x_count..x_count + y_count`, so two graphs with the same part
//! sizes and the same edge set compare equal regardless of how they were
//! assembled.

use std::fmt;

use thiserror::Error;

/// Index of a vertex of a [`BipartiteGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// Index of an edge in the sorted edge list of a [`BipartiteGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Part {
    X,
    Y,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("both parts must be nonempty (got |X| = {x_count}, |Y| = {y_count})")]
    EmptyPart { x_count: usize, y_count: usize },
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge ({0}, {1}) joins two vertices of the same part")]
    SamePartEdge(usize, usize),
    #[error("edge ({0}, {1}) listed more than once")]
    DuplicateEdge(usize, usize),
}

/// A simple graph whose edges all run between X and Y.
///
/// Edges are stored as `(x, y)` pairs sorted lexicographically; an
/// [`EdgeId`] is a position in that list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    x_count: usize,
    y_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl BipartiteGraph {
    pub fn new<I>(x_count: usize, y_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if x_count == 0 || y_count == 0 {
            return Err(GraphError::EmptyPart { x_count, y_count });
        }
        let vertex_count = x_count + y_count;
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if (u < x_count) == (v < x_count) {
                return Err(GraphError::SamePartEdge(u, v));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            normalized.push((VertexId(a), VertexId(b)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0 .0, w[0].1 .0));
        }
        Ok(Self {
            x_count,
            y_count,
            edges: normalized,
        })
    }

    /// The complete bipartite graph with parts of the given sizes.
    pub fn complete(x_count: usize, y_count: usize) -> Result<Self, GraphError> {
        let edges = (0..x_count)
            .flat_map(|a| (x_count..x_count + y_count).map(move |b| (a, b)))
            .collect::<Vec<_>>();
        Self::new(x_count, y_count, edges)
    }

    pub fn x_count(&self) -> usize {
        self.x_count
    }

    pub fn y_count(&self) -> usize {
        self.y_count
    }

    pub fn vertex_count(&self) -> usize {
        self.x_count + self.y_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn part(&self, v: VertexId) -> Part {
        if v.0 < self.x_count {
            Part::X
        } else {
            Part::Y
        }
    }

    pub fn x_vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.x_count).map(VertexId)
    }

    pub fn y_vertices(&self) -> impl Iterator<Item = VertexId> {
        (self.x_count..self.vertex_count()).map(VertexId)
    }

    /// Edges as `(x, y)` pairs, in [`EdgeId`] order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.edges.get(e.0).copied()
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok().map(EdgeId)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a.0].push(b.0);
            adj[b.0].push(a.0);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}
