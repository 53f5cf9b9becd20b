//! Exact Artin L-functions of finite quotients of the building of
//! `PGL_3` over a local field with residue field `F_q`.
//!
//! A quotient is stored by orbit representatives with group-valued
//! voltages ([`complex`]). From it and a representation of the voltage
//! group ([`rep`]) the [`operators`] module builds the block matrices of the
//! edge and chamber walks and of the cochain complex, and [`lfun`] takes
//! their determinants and checks the identities relating them.
//!
//! ```
//! use a2zeta_core::{builders, lfun, rep::Representation};
//!
//! let x = builders::q2_trivial_complex();
//! let rho = Representation::trivial(x.group().clone());
//! let report = lfun::compute_l(&x, &rho).unwrap();
//! assert_eq!(report.p0.to_string(), "1 - 7u + 14u^2 - 8u^3");
//! ```

pub mod algebra;
pub mod builders;
pub mod complex;
pub mod cover;
pub mod group;
pub mod lfun;
pub mod operators;
pub mod rep;

#[cfg(doctest)]
mod book;
