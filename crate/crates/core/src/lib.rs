//! Anisotropic rearrangement on Carnot groups.
//!
//! Given a nonnegative compactly supported field `u` on a Carnot group
//! (Euclidean ℝⁿ or the first Heisenberg group H¹), a homogeneous gauge
//! ‖·‖ with balls B_r = {‖x‖ < r}, and a measure μ, the rearrangement is
//! the gauge-radial nonincreasing field u★(x) = ṽ_u(‖x‖) with the same
//! μ-distribution as u. This crate builds the rearrangement on uniform
//! grids and numerically checks its structural properties: equimeasurability,
//! horizontal-perimeter quasi-monotonicity, the coarea identity, and the
//! Pólya–Szegő-type energy inequalities with empirically estimated
//! constants C₀, C_per and C_sym.
//!
//! Groups, gauges and test-field builders are interchangeable strategies
//! behind trait objects, registered by string id and selected at runtime
//! (see [`group::group_by_id`], [`gauge::gauge_by_id`],
//! [`grid::builders::build_field`]).

pub mod error;
pub mod gauge;
pub mod grid;
pub mod group;
pub mod hcalc;
pub mod rearrange;
pub mod report;
pub mod rng;
pub mod verify;

pub use error::{Error, Result};
