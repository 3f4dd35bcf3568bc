//! Exhaustive-search toolkit for small Ramsey graph families built from the
//! 4-spoked wheel W5 and complete graphs: family enumeration by one-vertex
//! extension, canonical labeling for isomorph rejection, and the
//! neighborhood-gluing search that assembles wheel-free graphs from a cone
//! and a rest part around a minimum-degree apex.

pub mod canon;
pub mod enumerate;
pub mod family;
pub mod glue;
pub mod graph;
pub mod graph6;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm, IsoStore};
pub use family::{
    check_member, contains_c4, contains_k4, contains_w5, extension_ok, has_independent_set,
    FamilySpec, Forbidden,
};
pub use graph::{Decomposition, SmallGraph, VertexSet, MAX_VERTICES};
