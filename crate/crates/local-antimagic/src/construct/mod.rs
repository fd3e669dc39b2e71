//! The explicit 3-color labeling of H = K_{1,n} ∨ K̄₂ for odd n with
//! 3 ∤ (n+1).
//!
//! Every hub-leaf edge gets the leaf's own index, the two hub-apex edges
//! get {n+1, n+2}, and each leaf's two apex edges get a pair from a fixed
//! partition of {n+3..3n+2} chosen so all leaves weigh (9n+11)/2. What
//! remains per case is the x/y orientation of those pairs so that the two
//! apexes end up with equal weight; each congruence case is its own
//! [`CaseStrategy`] in the registry.

mod cases;

pub use cases::verify_case_identities;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{make_h, Graph, Role};
use crate::labeling::{check_local_antimagic, weight_vector, EdgeLabeling, WeightVector};

/// Which construction branch applies to a given n, or why none does.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    /// n = 1, labeled from a fixed table.
    Base1,
    /// (n+1)/2 ≡ 0 (mod 4).
    C1,
    /// (n+1)/2 ≡ 2 (mod 4).
    C2,
    /// (n+1)/2 odd and 3 | (n+3)/2.
    C3,
    /// (n+1)/2 odd and 3 | (n−1)/2.
    C4,
    /// Rejected: n is even.
    EvenN,
    /// Rejected: 3 | (n+1).
    DivisibleByThree,
}

impl CaseTag {
    pub fn accepting(self) -> bool {
        !matches!(self, CaseTag::EvenN | CaseTag::DivisibleByThree)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::Base1 => "Base1",
            CaseTag::C1 => "C1",
            CaseTag::C2 => "C2",
            CaseTag::C3 => "C3",
            CaseTag::C4 => "C4",
            CaseTag::EvenN => "EvenN",
            CaseTag::DivisibleByThree => "DivisibleByThree",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("n must be positive")]
    ZeroN,
    #[error("n = {n} is outside the theorem domain: {tag}")]
    Rejected { n: u64, tag: CaseTag },
    #[error("leaf index {i} out of range 1..={n}")]
    LeafIndexOutOfRange { i: u64, n: u64 },
    #[error("internal construction defect for n = {n}: {detail}")]
    Internal { n: u64, detail: String },
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
    #[error(transparent)]
    Labeling(#[from] crate::labeling::LabelingError),
}

/// The three target weights of the construction for a given n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightProfile {
    pub n: u64,
    pub hub: u64,
    pub leaf: u64,
    pub apex: u64,
}

/// One congruence branch of the construction: decides which n it covers,
/// how the two hub-apex labels are oriented, and which element of each
/// leaf's pair goes to x versus y.
pub trait CaseStrategy: Sync {
    fn tag(&self) -> CaseTag;

    fn applies(&self, n: u64) -> bool;

    /// (f(vx), f(vy)).
    fn hub_labels(&self, n: u64) -> (u64, u64);

    /// (f(v_i x), f(v_i y)); the unordered pair always equals
    /// `partition_pair(n, i)` (the base table for n = 1).
    fn apex_labels(&self, n: u64, i: u64) -> (u64, u64);
}

/// All construction branches, in dispatch order.
pub fn registry() -> &'static [&'static dyn CaseStrategy] {
    cases::REGISTRY
}

/// Looks a strategy up by its tag name (e.g. "C3").
pub fn strategy_by_name(name: &str) -> Option<&'static dyn CaseStrategy> {
    registry().iter().copied().find(|s| s.tag().to_string() == name)
}

/// Decides which branch covers n. Total: every positive n gets exactly one
/// tag, rejections included.
pub fn applicable_case(n: u64) -> Result<CaseTag, ConstructError> {
    if n == 0 {
        return Err(ConstructError::ZeroN);
    }
    if n % 2 == 0 {
        return Ok(CaseTag::EvenN);
    }
    if (n + 1) % 3 == 0 {
        return Ok(CaseTag::DivisibleByThree);
    }
    let mut hits = registry().iter().filter(|s| s.applies(n));
    let tag = hits
        .next()
        .map(|s| s.tag())
        .ok_or_else(|| ConstructError::Internal {
            n,
            detail: "no case covers an n in the accepting domain".into(),
        })?;
    debug_assert!(hits.next().is_none(), "cases must not overlap");
    Ok(tag)
}

fn accepting_strategy(n: u64) -> Result<&'static dyn CaseStrategy, ConstructError> {
    let tag = applicable_case(n)?;
    if !tag.accepting() {
        return Err(ConstructError::Rejected { n, tag });
    }
    Ok(registry()
        .iter()
        .copied()
        .find(|s| s.tag() == tag)
        .expect("accepting tags come from the registry"))
}

/// The target weights: hub (n+2)(n+3)/2, leaves (9n+11)/2, apexes
/// (n+1)(4n+3)/2. For n = 1 the closed forms do not apply and the profile
/// is read off the base table instead.
pub fn expected_weights(n: u64) -> Result<WeightProfile, ConstructError> {
    accepting_strategy(n)?;
    if n == 1 {
        return Ok(WeightProfile {
            n,
            hub: 10,
            leaf: 6,
            apex: 7,
        });
    }
    Ok(WeightProfile {
        n,
        hub: (n + 2) * (n + 3) / 2,
        leaf: (9 * n + 11) / 2,
        apex: (n + 1) * (4 * n + 3) / 2,
    })
}

/// The i-th block of the partition of {n+3..3n+2}: the unordered pair of
/// labels destined for leaf i's two apex edges. Returned sorted ascending;
/// the smaller element lies in {n+3..2n+2} and the larger in {2n+3..3n+2},
/// and i plus the pair sum is always (9n+11)/2.
pub fn partition_pair(n: u64, i: u64) -> Result<(u64, u64), ConstructError> {
    let tag = applicable_case(n)?;
    if !tag.accepting() || n < 3 {
        return Err(ConstructError::Rejected { n, tag });
    }
    if i == 0 || i > n {
        return Err(ConstructError::LeafIndexOutOfRange { i, n });
    }
    let (a, b) = if i <= (n + 1) / 2 {
        (2 * n + 4 - 2 * i, (5 * n + 3) / 2 + i)
    } else {
        (3 * n + 4 - 2 * i, (3 * n + 3) / 2 + i)
    };
    Ok((a.min(b), a.max(b)))
}

/// A constructed, verified labeling of H(n) together with how it was built.
#[derive(Debug, Clone)]
pub struct Construction {
    pub n: u64,
    pub case: CaseTag,
    pub graph: Graph,
    pub labeling: EdgeLabeling,
    pub profile: WeightProfile,
    pub weights: WeightVector,
}

/// Runs the construction for n with the internal self-check on.
pub fn construct(n: u64) -> Result<Construction, ConstructError> {
    construct_with(n, true)
}

/// Runs the construction; `self_check` controls the O(n) post-construction
/// verification (bijection, verifier acceptance, exact target weights).
pub fn construct_with(n: u64, self_check: bool) -> Result<Construction, ConstructError> {
    let strategy = accepting_strategy(n)?;
    let graph = make_h(n as u32)?;
    let (hub_x, hub_y) = strategy.hub_labels(n);

    let mut labels = Vec::with_capacity(graph.edge_count());
    for &(a, b) in graph.edges() {
        let label = match (graph.role(a), graph.role(b)) {
            (Role::Hub, Role::Leaf(i)) => i as u64,
            (Role::Hub, Role::ApexX) => hub_x,
            (Role::Hub, Role::ApexY) => hub_y,
            (Role::Leaf(i), Role::ApexX) => strategy.apex_labels(n, i as u64).0,
            (Role::Leaf(i), Role::ApexY) => strategy.apex_labels(n, i as u64).1,
            other => {
                return Err(ConstructError::Internal {
                    n,
                    detail: format!("unexpected edge roles {other:?}"),
                })
            }
        };
        labels.push(label);
    }
    let labeling = EdgeLabeling::for_graph(&graph, labels).map_err(|e| ConstructError::Internal {
        n,
        detail: format!("constructed labels are not a bijection: {e}"),
    })?;

    let profile = expected_weights(n)?;
    let weights = weight_vector(&graph, &labeling)?;
    let construction = Construction {
        n,
        case: strategy.tag(),
        graph,
        labeling,
        profile,
        weights,
    };
    if self_check {
        construction.self_check()?;
    }
    Ok(construction)
}

impl Construction {
    /// Verifies the construction delivers what it promises: verifier
    /// acceptance, exactly three colors, and the closed-form weights.
    pub fn self_check(&self) -> Result<(), ConstructError> {
        let fail = |detail: String| ConstructError::Internal { n: self.n, detail };
        let outcome = check_local_antimagic(&self.graph, &self.labeling)?;
        if !outcome.accepted() {
            return Err(fail(format!("verifier rejected: {:?}", outcome.violations)));
        }
        if self.weights.get(1) != self.profile.hub {
            return Err(fail(format!(
                "hub weight {} != expected {}",
                self.weights.get(1),
                self.profile.hub
            )));
        }
        let n = self.n as u32;
        for leaf in 2..=n + 1 {
            if self.weights.get(leaf) != self.profile.leaf {
                return Err(fail(format!("leaf {leaf} weight off target")));
            }
        }
        let (wx, wy) = (self.weights.get(n + 2), self.weights.get(n + 3));
        if wx != wy || wx != self.profile.apex {
            return Err(fail(format!("apex weights ({wx}, {wy}) != {}", self.profile.apex)));
        }
        if self.weights.distinct_count() != 3 {
            return Err(fail(format!("{} colors instead of 3", self.weights.distinct_count())));
        }
        Ok(())
    }
}
