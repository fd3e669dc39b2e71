//! Local antimagic labelings of graphs: the definitional kernel (edge
//! labelings, induced vertex weights, the adjacent-weights check), an
//! explicit 3-color construction for the join of a star with two isolated
//! vertices, exact solvers for the local antimagic chromatic number on
//! small graphs, and the certified counterexample to the claimed join
//! lower bound χ_la(G) + 1 ≤ χ_la(G ∨ K̄₂).

pub mod construct;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod solver;

pub use construct::{applicable_case, construct, expected_weights, partition_pair, CaseTag, Construction, WeightProfile};
pub use graph::{join, make_empty, make_h, make_star, Graph, Role};
pub use labeling::{check_local_antimagic, color_count, weight, weight_vector, EdgeLabeling, WeightVector};
pub use solver::{certify_counterexample, chromatic_number, exhaustive_chi_la, solve_chi_la, star_chi_la, CounterexampleVerdict, SolveOptions, SolveReport};
