//! Exact computation of the total degree of the generic offset to a rational
//! parametric surface.
//!
//! The pipeline normalizes an affine parametrization, projectivizes it, builds
//! the auxiliary polynomial system in the parameters `t0, t1, t2`, eliminates
//! `t0` with a resultant against a generic linear combination of the system,
//! and reads the degree off the primitive part of the content of that
//! resultant.

pub mod cli;
pub mod eliminate;
pub mod mvpoly;
pub mod offset;
pub mod verify;

#[cfg(test)]
pub(crate) mod testutil;
