//! Arithmetic of quaternion algebras over small number fields and the
//! hyperbolic-geometry kernels attached to them.
//!
//! The crate computes, exactly wherever the objects are algebraic:
//!
//! * number-field invariants: discriminants, signatures, prime splitting,
//!   ideal counts and class numbers of imaginary quadratic fields
//!   ([`numfield`]);
//! * quaternion algebra arithmetic, Hilbert symbols, ramification sets and
//!   discriminant ideals ([`quatalg`]);
//! * admissibility and cocompactness of the arithmetic Fuchsian/Kleinian
//!   lattices attached to such data, cusp counts and Eisenstein dimensions
//!   ([`lattices`]);
//! * values `zeta_K(2)` with certified truncation bounds and the closed-form
//!   covolumes of the associated hyperbolic 3-orbifolds ([`zetavol`]);
//! * the upper half-plane and upper half-space isometry actions, multiplier
//!   systems, symmetric powers, slash operators and Fourier-Bessel machinery
//!   ([`hyperbolic`]).
//!
//! The crate is `no_std` (with `alloc`); everything that needs IO lives in
//! the companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod dd;
pub mod error;
pub mod hyperbolic;
pub mod intpoly;
pub mod lattices;
pub mod modpoly;
pub mod numfield;
pub mod quatalg;
pub mod zetavol;

pub use error::{FieldError, GeomError, LatticeError, QuatError, ZetaError};
pub use numfield::{FieldElement, MonogenicField, NumberField, QuadraticField};
pub use quatalg::{Place, QuaternionAlgebra, QuaternionElement, RamificationSet};
