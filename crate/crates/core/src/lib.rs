//! Exact-arithmetic kernels for counting multiple covers of rational curves
//! in Calabi-Yau threefolds.
//!
//! Everything here is computed over arbitrary-precision rationals; no
//! floating point is used anywhere. The crate splits into three areas:
//!
//! * root-system combinatorics for the ADE diagrams attached to contractable
//!   curves ([`diagram`], [`roots`], [`orbits`], [`cycle_bound`]);
//! * the multiple-cover contribution formulas and the divisor-sum recursion
//!   relating Gromov-Witten tables to instanton numbers ([`bernoulli`],
//!   [`covers`]);
//! * truncated power series, sparse polynomials, and the explicit length-two
//!   arc computation of the multiplicities k1 and k2 ([`series`], [`poly`],
//!   [`cd4`]).
//!
//! All values are immutable and all operations are pure, so everything can
//! be shared freely across threads. The [`batch`] module offers batched
//! entry points that fan out with rayon when the `parallel` feature
//! (enabled by default) is on; with the feature off they fall back to
//! equivalent sequential loops and produce identical results.

pub mod batch;
pub mod bernoulli;
pub mod cd4;
pub mod covers;
pub mod cycle_bound;
pub mod diagram;
pub mod orbits;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod series;

pub use rational::Rat;
