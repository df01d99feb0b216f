//! Log-concave densities on the real line, the monotone transport map
//! between them, weighted midpoint sup-convolutions, and quantitative
//! stability diagnostics for the product-measure midpoint inequality.
//!
//! The representation is piecewise log-linear with optional exponential
//! tails, which is closed under affine images, concave hulls, and Minkowski
//! midpoint sums; mass, moments, cdf, quantiles, and L1 distances all have
//! closed forms. Quadrature enters only through transport costs, where the
//! error budget is explicit.
//!
//! Every value is immutable after construction and every operation is pure;
//! the only seeded state is the explicit generator in [`random_density`].

pub mod density;
pub mod error;
pub mod hull;
mod loglin;
mod quad;
pub mod random;
pub mod transport;

pub use density::{l1_distance, DensityStats, LogConcaveDensity, LogConcaveFunction};
pub use error::{Error, Result};
pub use hull::log_concave_hull;
pub use random::random_density;
pub use transport::{
    align, deficit_integrand, pl_deficit_integral, quadratic_cost, transport_map, Alignment,
    TransportMap,
};
