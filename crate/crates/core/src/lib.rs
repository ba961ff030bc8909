//! Hyperbolic geometry on squeezed upper half-planes.
//!
//! This crate implements a one-parameter family of half-plane models.
//! Fix a squeeze factor `k > 0` and take the points `{(x, y) : y > 0}`.
//! The geodesics ("h-lines") are the vertical rays `x = p` and the
//! upper halves of the ellipses `(x - c)^2 + k^2 y^2 = a^2`; at `k = 1`
//! these are the semicircles of the classical Poincaré half-plane. The
//! map `(x, y) -> (x, k y)` carries the `k`-model onto the classical
//! one and is used as an isometry cross-check throughout.
//!
//! Each module covers one slice of the geometry:
//!
//! - [`model`]: domain types (`Model`, `Point`, `HLine`, `Segment`) and
//!   the tolerance policy.
//! - [`geodesic`]: line construction, incidence of a point on a line,
//!   the unit-speed ruler `t` on each line, and betweenness.
//! - [`metric`]: the distance closed form, the squeeze isometry, a
//!   classical-model reference distance, and an arc-length oracle built
//!   on adaptive Simpson quadrature.
//! - [`incidence`]: line intersection, ideal endpoints, parallelism,
//!   the two parallels through an external point, and plane separation.
//! - [`angle`]: tangent rays and two angle measures (Euclidean
//!   protractor vs. pullback through the squeeze map).
//! - [`verify`]: seeded randomized suites that hunt for counterexamples
//!   to the geometric axioms and report them as data.
//! - [`render`]: deterministic SVG rendering of scenes under one or
//!   more squeeze factors.
//! - [`cli`]: the `halfplane` command-line front end; a thin adapter
//!   over the modules above.
//!
//! ```
//! use halfplane::{geodesic, metric, model::{Model, Point}};
//!
//! let m = Model::new(2.0).unwrap();
//! let p = Point::new(0.0, 1.0).unwrap();
//! let q = Point::new(3.0, 1.0).unwrap();
//!
//! let line = geodesic::line_through(&m, p, q).unwrap();
//! assert_eq!(line.elliptic_params(), Some((1.5, 2.5)));
//! assert!((metric::distance(&m, p, q) - 4f64.ln()).abs() < 1e-12);
//! ```
//!
//! Runnable walkthroughs live in `examples/`; each one demonstrates a
//! single capability end to end (`cargo run -p halfplane --example
//! geodesics_and_ruler`, etc.). The binary target `halfplane` exposes
//! the same operations as subcommands; see the README for the manual.

pub mod angle;
pub mod cli;
pub mod geodesic;
pub mod incidence;
pub mod metric;
pub mod model;
pub mod render;
pub mod verify;

pub use model::{Error, HLine, IdealEndpoint, Model, Point, Result, Segment};
