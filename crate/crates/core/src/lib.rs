//! Exact arithmetic for connected graded algebras presented by generators and
//! relations, with a focus on quadratic monomial algebras and the degenerate
//! members of the three-parameter Sklyanin family.
//!
//! Everything here is computed over exact scalars: arbitrary-precision
//! rationals and the quadratic extension generated by a primitive cube root of
//! unity. There is no floating point anywhere, so span comparisons, Hilbert
//! series identities, and eigenvector equations are decided exactly.
//!
//! The crate is `no_std` (it only needs `alloc`), which keeps the whole
//! library free of IO and ambient state; file formats and the command line
//! live in the companion `ncgraded` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod exactnum;
pub mod k0;
pub mod monomial;
pub mod ncalg;
pub mod points;
pub mod quiver;
pub mod sklyanin;
