//! Edge labelings, induced vertex weights, and the local antimagic check.
//!
//! A labeling assigns the values 1..=|E| bijectively to the edges of a
//! graph. Each vertex then receives the sum of its incident labels as its
//! weight; the labeling is local antimagic when no edge joins two vertices
//! of equal weight.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelingError {
    #[error("labeling has {got} labels but the graph has {expected} edges")]
    LengthMismatch { got: usize, expected: usize },
    #[error("label {0} appears more than once")]
    DuplicateLabel(u64),
    #[error("label {label} outside 1..={max}")]
    LabelOutOfRange { label: u64, max: u64 },
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
}

/// A bijection from edge indices to {1..|E|}. The entry at position k is
/// the label of the k-th edge in the graph's canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeLabeling {
    labels: Vec<u64>,
}

impl EdgeLabeling {
    /// Wraps a label array after checking it is a permutation of 1..=len.
    pub fn new(labels: Vec<u64>) -> Result<Self, LabelingError> {
        let m = labels.len() as u64;
        let mut seen = vec![false; labels.len()];
        for &label in &labels {
            if label == 0 || label > m {
                return Err(LabelingError::LabelOutOfRange { label, max: m });
            }
            let slot = &mut seen[(label - 1) as usize];
            if *slot {
                return Err(LabelingError::DuplicateLabel(label));
            }
            *slot = true;
        }
        Ok(EdgeLabeling { labels })
    }

    /// As `new`, but also checks the length against a graph.
    pub fn for_graph(graph: &Graph, labels: Vec<u64>) -> Result<Self, LabelingError> {
        if labels.len() != graph.edge_count() {
            return Err(LabelingError::LengthMismatch {
                got: labels.len(),
                expected: graph.edge_count(),
            });
        }
        Self::new(labels)
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, edge_index: usize) -> u64 {
        self.labels[edge_index]
    }

    fn check_against(&self, graph: &Graph) -> Result<(), LabelingError> {
        if self.labels.len() != graph.edge_count() {
            return Err(LabelingError::LengthMismatch {
                got: self.labels.len(),
                expected: graph.edge_count(),
            });
        }
        Ok(())
    }
}

/// Per-vertex weights induced by a labeling; entry u-1 is the weight of
/// vertex u.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightVector(pub Vec<u64>);

impl WeightVector {
    pub fn get(&self, u: u32) -> u64 {
        self.0[(u - 1) as usize]
    }

    pub fn distinct_count(&self) -> usize {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len()
    }
}

/// Sum of labels on edges incident to `u`; 0 for isolated vertices.
pub fn weight(graph: &Graph, labeling: &EdgeLabeling, u: u32) -> Result<u64, LabelingError> {
    labeling.check_against(graph)?;
    graph.check_vertex(u)?;
    Ok(graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| a == u || b == u)
        .map(|(idx, _)| labeling.label(idx))
        .sum())
}

/// All vertex weights at once. Satisfies the handshake identity: the entries
/// sum to |E|(|E|+1), every label being counted once per endpoint.
pub fn weight_vector(graph: &Graph, labeling: &EdgeLabeling) -> Result<WeightVector, LabelingError> {
    labeling.check_against(graph)?;
    let mut weights = vec![0u64; graph.vertex_count() as usize];
    for (idx, &(a, b)) in graph.edges().iter().enumerate() {
        let label = labeling.label(idx);
        weights[(a - 1) as usize] += label;
        weights[(b - 1) as usize] += label;
    }
    Ok(WeightVector(weights))
}

/// An edge whose two endpoints received the same weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: u32,
    pub v: u32,
    pub shared_weight: u64,
}

/// Outcome of the local antimagic check. Every violating adjacent pair is
/// reported, not just the first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub violations: Vec<Violation>,
    /// True when the graph has fewer than three vertices, where the theory
    /// does not apply; the check still runs.
    pub below_theory_scope: bool,
}

impl CheckOutcome {
    pub fn accepted(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that no two adjacent vertices share a weight.
pub fn check_local_antimagic(graph: &Graph, labeling: &EdgeLabeling) -> Result<CheckOutcome, LabelingError> {
    let weights = weight_vector(graph, labeling)?;
    let violations = graph
        .edges()
        .iter()
        .filter(|&&(u, v)| weights.get(u) == weights.get(v))
        .map(|&(u, v)| Violation {
            u,
            v,
            shared_weight: weights.get(u),
        })
        .collect();
    Ok(CheckOutcome {
        violations,
        below_theory_scope: graph.vertex_count() < 3,
    })
}

/// Number of distinct weights over all vertices (the color count of the
/// induced coloring).
pub fn color_count(graph: &Graph, labeling: &EdgeLabeling) -> Result<usize, LabelingError> {
    Ok(weight_vector(graph, labeling)?.distinct_count())
}
