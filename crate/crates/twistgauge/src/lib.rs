//! Exact symbolic engine for twist-deformed principal bundles.
//!
//! The crate constructs the coordinate algebras of twist-deformed
//! principal bundles (the instanton bundle over the theta-sphere, the
//! orthogonal bundle, and Jordanian kappa-Minkowski bundles), represents
//! their infinitesimal gauge transformations as braided derivations, and
//! machine-verifies every algebraic identity the construction promises:
//! star-product axioms, braided Lie algebra axioms, the intertwiner
//! between twisted and braided brackets, and the explicit gauge-bracket
//! tables.
//!
//! Everything is exact: coefficients live in `Q(i,sqrt2)[w^{±1}][k]` with
//! arbitrary-precision rationals, where `w = e^{i pi theta/4}` is the
//! formal phase unit and `k = 1/kappa`.
//!
//! Start with the runnable examples (`cargo run --example table1`) or the
//! CLI (`cargo run --bin twistgauge -- verify --suite all`).

pub mod derivations;
pub mod dmap;
pub mod grading;
pub mod polyalg;
pub mod scalars;
pub mod starprod;
