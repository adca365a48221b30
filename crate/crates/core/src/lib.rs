//! Solvable model of optically switched quantum gates built from clusters
//! with inner structure attached to a one-dimensional quantum wire.
//!
//! Energies inside the model are reduced (`ħ²/2m = 1`, so `λ = k²`); the
//! [`materials`] module is the only place that speaks electron-volts,
//! kelvin and ångström.
//!
//! - [`qfunc`]: cluster definition and its rational Herglotz response `Q(λ)`.
//! - [`dot`]: one cluster on a wire (transmission, Landauer conductance).
//! - [`lattice`]: bands and gaps of infinite ground (period `L`) and excited
//!   (period `2L`) chains.
//! - [`chain`]: scattering by a finite chain inserted into the wire.
//! - [`materials`]: semiconductor table, de Broglie wavelengths and thermal
//!   averaging of the conductance.

pub mod chain;
pub mod dot;
mod error;
pub mod lattice;
pub mod linalg;
pub mod materials;
pub mod qfunc;
pub mod quad;
pub mod roots;
pub mod validation;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use qfunc::{ClusterState, Level, QFunction, TwoStateCluster};
