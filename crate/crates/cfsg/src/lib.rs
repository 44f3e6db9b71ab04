//! Exact big-integer audit of the subgroup-chain bounds across the finite
//! simple groups: classical and exceptional Lie families, alternating
//! groups, and the 26 sporadic groups. Every order is evaluated exactly,
//! every inequality compared in squared integer form.

pub mod alternating;
pub mod audit;
pub mod family;
pub mod orders;
pub mod remarks;
pub mod sporadic;

pub use alternating::{alternating_chain, AltChain};
pub use audit::{audit, check_bounds, sweep, AuditRow, BoundChecks};
pub use family::{enumerate, Family, FamilySpec, Method, SpecError};
pub use orders::{order_formulas, Orders};
pub use remarks::{remark_checks, RemarkReport};
pub use sporadic::SporadicName;
