//! Graph storage and construction of B(R).

mod bipartite;
mod build;
mod simple;

pub use bipartite::Bipartite;
pub use build::{
    build_graph, predicted_part_sizes, predicted_single_support_degree, BzuGraph,
    PartSizePrediction,
};
pub use simple::SimpleGraph;
