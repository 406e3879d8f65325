//! Exact Tutte and Jones polynomials for four infinite families of
//! alternating links, the zeros of those polynomials, and the curves in the
//! complex `t` plane where the zeros pile up as the crossing number grows.
//!
//! - [`graph`]: multigraphs, signed graphs, the named graph families and the
//!   link families `A`, `B`, `E`, `F` built on them.
//! - [`poly`]: sparse arbitrary-precision polynomials (bivariate Tutte
//!   polynomials, quarter-integer Laurent polynomials in `t`).
//! - [`tutte`]: Tutte polynomials by subgraph enumeration, memoized
//!   deletion-contraction and closed forms; Potts and chromatic
//!   specialisations.
//! - [`jones`]: Jones polynomials from Tutte polynomials, closed forms and the
//!   structural checks they satisfy.
//! - [`asymptotics`]: λ-decompositions, polynomial zeros, the equimodular
//!   locus and its regions.
//! - [`verify`]: the reproduction suite behind `knot-zeros verify`.
//! - [`cli`]: the `knot-zeros` command line.
//!
//! ```
//! use knot_zeros::{graph::Family, jones};
//!
//! let v = jones::jones_family_closed(Family::A, 3).unwrap();
//! assert_eq!(v.pretty(), "t^{-4}*(-1 + t + t^3)");
//! ```

pub mod asymptotics;
pub mod cli;
pub mod graph;
pub mod jones;
pub mod poly;
pub mod tutte;
pub mod verify;
