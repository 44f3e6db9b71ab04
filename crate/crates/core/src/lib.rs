//! Linear-space, constant-lookup multiplication structures for finite
//! groups given by their Cayley tables.
//!
//! The pipeline: load or generate a Cayley table ([`cayley`], [`gen`]),
//! compute a composition series and the subgroup toolbox ([`series`],
//! [`sylow`], [`chain`]), then stack extension nodes over a small base
//! table ([`ds`], [`build`]) so that any product costs at most 183 array
//! lookups while total storage stays far below the n^2 table.

pub mod build;
pub mod cayley;
pub mod chain;
pub mod ds;
pub mod error;
pub mod gen;
pub mod quotient;
pub mod series;
pub mod subgroup;
pub mod sylow;
pub mod wire;

pub use build::{build, build_auto, plan, BuildPlan, CaseTag, SpaceReport};
pub use cayley::CayleyGroup;
pub use chain::{find_chain, ChainCandidate};
pub use ds::GroupDS;
pub use error::{Error, Result};
pub use quotient::{lift, quotient, QuotientGroup};
pub use series::{composition_series, composition_series_seeded, is_simple, CompositionSeries};
pub use subgroup::{closure, is_normal, normalizer, transversal, Side, Subgroup, Transversal};
pub use sylow::sylow_subgroup;
