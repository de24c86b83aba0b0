//! Problem representation: graphs, group domains, cost families, instances.

mod cost;
mod dihedral;
mod graph;
mod instance;
pub mod io;
pub mod topology;

pub use cost::{make_cost, CostFunction, CostKind, CostSpec};
pub use dihedral::{DihedralCost, DihedralElement};
pub use graph::{Graph, SpanningTree};
pub use instance::{Assignment, Domain, EdgeCost, NetworkInstance};
pub use io::{parse_instance, serialize_instance};
