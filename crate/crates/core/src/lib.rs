//! Strong cliques and CIS graphs, with a focus on diamond-free graphs.
//!
//! The linear-time pieces are [`is_edge_simplicial_linear`] and
//! [`classify_diamond_free_cis`]; [`Oracle`] holds the exponential
//! definitions used to check them.

pub mod cis;
pub mod cli;
pub mod diamond;
pub mod edge_simplicial;
pub mod error;
pub mod ffree;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod reductions;
pub mod timing;
pub mod verdict;

pub use cis::{classify_diamond_free_cis, is_rook_graph, Classification, ClassifiedComponent, ComponentClass};
pub use diamond::{is_diamond_free, maximal_cliques_diamond_free, CliqueSet};
pub use edge_simplicial::{
    companion_multigraph, degree_greedy_stable_set, is_edge_simplicial, is_edge_simplicial_linear, simplicial_vertices,
};
pub use error::{Error, Result};
pub use ffree::{cis_for_f_free, contains_induced_4, is_cograph, Pattern};
pub use generate::{generate, Family};
pub use graph::{Graph, Multigraph, VertexOrder};
pub use io::{Format, GraphDocument};
pub use oracle::{all_p4_settled, maximal_cliques, DecisionReport, Oracle, StrongCliqueReport};
pub use reductions::{build_g_double_prime, build_g_prime, validate_class_g, ReductionOutput};
pub use verdict::{Certificate, Verdict};
