pub mod graphfilter;
pub mod multigraph;
pub mod perm;
pub mod triangulation;
pub mod ufind;

pub use graphfilter::{filter_verdict, find_chains, ChainSet, FilterVerdict};
pub use multigraph::{canonical_code, enumerate_graphs, parse_graph, render_graph, GraphCode, Multigraph};
pub use perm::Perm4;
pub use triangulation::{iso_signature, realize_pairing, validate_closed, FacePairing, IsoSignature, Triangulation};
pub use ufind::{LinkMode, RollbackUnionFind, UnionOutcome};
