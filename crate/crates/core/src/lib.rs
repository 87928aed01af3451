//! Exact invariants of orbifold Landau–Ginzburg models `(f, G)` where `f` is an
//! invertible polynomial and `G` a finite group of diagonal symmetries.
//!
//! The crate is `no_std` (it only needs `alloc`) and performs no IO. Everything
//! is computed with exact integer or rational arithmetic:
//!
//! * [`polynomial`], [`atoms`] and [`weights`]: exponent matrices, parsing,
//!   Berglund–Hübsch transposition, Fermat/chain/loop decomposition, the
//!   five normal forms in three variables and weight systems.
//! * [`symmetry`]: diagonal symmetry groups as sets of phase vectors, Krawitz
//!   duals, ages and junior elements.
//! * [`curve`]: Dolgachev numbers, genus and stringy Euler number of the
//!   orbifold curve attached to `(f, G)`.
//! * [`cusp`]: Gabrielov numbers and equivariant Milnor numbers of cusp
//!   polynomials `x^p + y^q + z^r - xyz` with a finite symmetry group.
//! * [`spectra`]: products of cyclotomic factors, Poincaré series, monodromy
//!   characteristic polynomials and their Lefschetz traces.
//! * [`mirror`]: the mirror comparison for a pair, corpus enumeration and
//!   the per-item verification used by the command line harness.
//!
//! ```
//! use orbicusp_core::{polynomial::InvertiblePolynomial, symmetry::g0_group, mirror::verify_mirror};
//!
//! let f: InvertiblePolynomial = "x^2+x*y^3+y*z^5".parse().unwrap();
//! let report = verify_mirror(&f, &g0_group(&f)).unwrap();
//! assert_eq!(report.genus, 2);
//! assert!(report.all_pass());
//! ```
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod atoms;
pub mod curve;
pub mod cusp;
pub mod error;
pub mod mirror;
pub mod polynomial;
pub mod spectra;
pub mod symmetry;
pub mod weights;

pub use error::{Error, Result};
