//! Exact computation of colored Jones polynomials, their degree
//! quasi-polynomials, and the behavior of Jones slopes under knot cabling.
//!
//! Everything is exact: arbitrary-precision integers and rationals, Laurent
//! polynomials in `v^{1/4}`, and quasi-polynomial degree models with rational
//! coefficients. No floating point anywhere.
//!
//! The main capabilities, one module each:
//!
//! - [`laurent`]: exact rationals and quarter-exponent Laurent polynomials
//! - [`bracket`]: braid words, planar diagram codes, Kauffman bracket
//!   evaluation (two independent backends), and the colored Jones polynomial
//! - [`quasipoly`]: quadratic quasi-polynomials, exact fitting of degree
//!   sequences, Jones slopes `{4a_i}` and linear-term clusters `{2b_i}`
//! - [`cabling`]: the exact cabling sum, degree prediction by maximization,
//!   period-2 closed forms, admissibility thresholds for constant leading
//!   coefficient, and boundary-slope / surface transforms
//! - [`families`]: torus knot formulas, adequate-diagram state data and
//!   degree bounds, and the catalog of low-crossing knots and pretzels
//! - [`fusion`]: two-parameter 2-fusion knots, the lattice function
//!   `Q(n,k1,k2)`, case-dispatched degrees, and a brute-force lattice oracle
//! - [`checker`]: Slope / Strong Slope / nonpositive-linear-term conjecture
//!   verification with machine-readable reports
//! - [`present`]: the knot presentation mini-language used by the CLI
//! - [`report`]: deterministic JSON/CSV emission
//!
//! The `cjp` binary exposes the same operations as subcommands; see the
//! `examples/` directory for one runnable walkthrough per capability.

pub mod bracket;
pub mod cabling;
pub mod checker;
pub mod error;
pub mod families;
pub mod fusion;
pub mod laurent;
pub mod present;
pub mod quasipoly;
pub mod report;

pub use error::Error;
pub use laurent::{Rat, QLaurent};
pub use quasipoly::{QuasiPoly, Slope, SlopeSet};
