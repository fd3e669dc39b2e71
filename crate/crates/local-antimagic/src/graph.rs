//! Undirected simple graphs with canonical edge ordering, plus builders for
//! the families this crate works with: stars, empty graphs, and joins.
//!
//! Vertices are 1-based. Edges are stored sorted by (min endpoint, max
//! endpoint); the position of an edge in that order is its edge index.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on the edge count so that every vertex weight fits comfortably
/// in a u64: max weight <= |E|(|E|+1)/2.
pub const MAX_EDGES: usize = 100_000;

/// Role a vertex plays in a join-construction graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    /// Center of the star.
    Hub,
    /// i-th leaf of the star (1-based).
    Leaf(u32),
    /// First vertex of the joined empty pair.
    ApexX,
    /// Second vertex of the joined empty pair.
    ApexY,
    Plain,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be positive")]
    EmptyVertexSet,
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(u32, u32),
    #[error("edge endpoint {endpoint} out of range 1..={vertex_count}")]
    EndpointOutOfRange { endpoint: u32, vertex_count: u32 },
    #[error("vertex {vertex} out of range 1..={vertex_count}")]
    VertexOutOfRange { vertex: u32, vertex_count: u32 },
    #[error("edge count {0} exceeds the supported maximum of {MAX_EDGES}")]
    TooManyEdges(usize),
}

/// An immutable undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: u32,
    edges: Vec<(u32, u32)>,
    roles: Vec<Role>,
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list. Edges may arrive
    /// in any order and orientation; they are canonicalized here. Self-loops
    /// and duplicates are rejected.
    pub fn new(vertex_count: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut canon: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for &endpoint in &[a, b] {
                if endpoint == 0 || endpoint > vertex_count {
                    return Err(GraphError::EndpointOutOfRange { endpoint, vertex_count });
                }
            }
            canon.push((a.min(b), a.max(b)));
        }
        if canon.len() > MAX_EDGES {
            return Err(GraphError::TooManyEdges(canon.len()));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph {
            vertex_count,
            edges: canon,
            roles: vec![Role::Plain; vertex_count as usize],
        })
    }

    fn with_roles(mut self, roles: Vec<Role>) -> Self {
        debug_assert_eq!(roles.len(), self.vertex_count as usize);
        self.roles = roles;
        self
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order; the index of an edge in this slice is its
    /// edge index.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// 1-based vertex indices.
    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        1..=self.vertex_count
    }

    pub fn role(&self, u: u32) -> Role {
        self.roles[(u - 1) as usize]
    }

    pub fn check_vertex(&self, u: u32) -> Result<(), GraphError> {
        if u == 0 || u > self.vertex_count {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                vertex_count: self.vertex_count,
            });
        }
        Ok(())
    }

    /// Sorted list of vertices adjacent to `u`; empty for isolated vertices.
    pub fn neighbors(&self, u: u32) -> Result<Vec<u32>, GraphError> {
        self.check_vertex(u)?;
        let mut out: Vec<u32> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == u {
                    Some(b)
                } else if b == u {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn degree(&self, u: u32) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == u || b == u).count()
    }

    /// Edge indices incident to each vertex, as a 1-based-indexable table
    /// (entry 0 is unused).
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count as usize + 1];
        for (idx, &(a, b)) in self.edges.iter().enumerate() {
            inc[a as usize].push(idx);
            inc[b as usize].push(idx);
        }
        inc
    }

    pub fn are_adjacent(&self, u: u32, v: u32) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let inc = self.incidence();
        let mut seen = vec![false; self.vertex_count as usize + 1];
        let mut stack = vec![1u32];
        seen[1] = true;
        let mut visited = 0u32;
        while let Some(u) = stack.pop() {
            visited += 1;
            for &e in &inc[u as usize] {
                let (a, b) = self.edges[e];
                let w = if a == u { b } else { a };
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        visited == self.vertex_count
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(|V|={}, |E|={})", self.vertex_count, self.edges.len())
    }
}

/// The star K_{1,n}: hub is vertex 1, leaves are 2..=n+1.
pub fn make_star(n: u32) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyVertexSet);
    }
    let edges = (2..=n + 1).map(|leaf| (1, leaf));
    let mut roles = vec![Role::Hub];
    roles.extend((1..=n).map(Role::Leaf));
    Ok(Graph::new(n + 1, edges)?.with_roles(roles))
}

/// The empty graph on m vertices.
pub fn make_empty(m: u32) -> Result<Graph, GraphError> {
    Graph::new(m, std::iter::empty())
}

/// The join g1 ∨ g2: both edge sets plus every cross edge, with g2's
/// vertices offset by |V(g1)|. When g2 is the empty pair, its two vertices
/// become the apexes x and y.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    let off = g1.vertex_count;
    let total = off + g2.vertex_count;
    let mut edges: Vec<(u32, u32)> = g1.edges.clone();
    edges.extend(g2.edges.iter().map(|&(a, b)| (a + off, b + off)));
    for a in 1..=off {
        for b in 1..=g2.vertex_count {
            edges.push((a, b + off));
        }
    }
    let mut roles = g1.roles.clone();
    if g2.vertex_count == 2 && g2.edges.is_empty() {
        roles.push(Role::ApexX);
        roles.push(Role::ApexY);
    } else {
        roles.extend(g2.roles.iter().copied());
    }
    Ok(Graph::new(total, edges)?.with_roles(roles))
}

/// The join H = K_{1,n} ∨ K̄₂: hub 1, leaves 2..=n+1, apexes
/// x = n+2 and y = n+3, with 3n+2 edges.
pub fn make_h(n: u32) -> Result<Graph, GraphError> {
    join(&make_star(n)?, &make_empty(2)?)
}
