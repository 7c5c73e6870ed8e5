//! Error types shared across the crate.

use alloc::string::String;
use core::fmt;

/// Rejections raised while constructing or querying number fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    /// `d` in a quadratic field must be squarefree and different from 0, 1.
    NotSquarefree(i64),
    /// `d` values 0 and 1 do not give a quadratic field.
    ForbiddenD(i64),
    /// The defining polynomial must be monic.
    NotMonic,
    /// The defining polynomial must have degree at least 2.
    DegreeTooSmall,
    /// The defining polynomial factors over the rationals.
    Reducible(String),
    /// Irreducibility search exceeded its work budget.
    CannotCertifyIrreducible,
    /// Polynomial discriminant is zero (repeated roots).
    ZeroDiscriminant,
    /// Non-squarefree polynomial discriminant: the power basis may miss the
    /// maximal order, which this crate does not repair.
    DiscriminantNotSquarefree(String),
    /// Operation requires an imaginary quadratic field.
    NotImaginaryQuadratic,
    /// Malformed element data (wrong coordinate length, zero denominator...).
    BadElement(String),
    /// Local computation outside the supported range (wild places, odd
    /// ramification shapes).
    UnsupportedLocal(String),
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotSquarefree(d) => write!(f, "d = {d} is not squarefree"),
            FieldError::ForbiddenD(d) => write!(f, "d = {d} does not define a quadratic field"),
            FieldError::NotMonic => write!(f, "defining polynomial must be monic"),
            FieldError::DegreeTooSmall => write!(f, "defining polynomial must have degree >= 2"),
            FieldError::Reducible(s) => write!(f, "polynomial is reducible: {s}"),
            FieldError::CannotCertifyIrreducible => {
                write!(f, "irreducibility search budget exhausted")
            }
            FieldError::ZeroDiscriminant => write!(f, "polynomial has repeated roots"),
            FieldError::DiscriminantNotSquarefree(s) => {
                write!(f, "polynomial discriminant is not squarefree: {s}")
            }
            FieldError::NotImaginaryQuadratic => {
                write!(f, "operation requires an imaginary quadratic field")
            }
            FieldError::BadElement(s) => write!(f, "bad field element: {s}"),
            FieldError::UnsupportedLocal(s) => write!(f, "unsupported local computation: {s}"),
        }
    }
}

impl core::error::Error for FieldError {}

/// Failures in quaternion algebra computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuatError {
    /// Operands live in different quaternion algebras.
    MixedAlgebras,
    /// An algebra entry is zero.
    ZeroEntry,
    /// The Hilbert symbol at the named place is outside the supported range
    /// (wild places that parity inference cannot settle).
    UnsupportedPlace(String),
    /// Two or more even places undecidable by the tame criterion.
    UndecidableEvenPlaces(String),
    /// Realization search exhausted its bound without finding an algebra.
    SearchExhausted { bound: i64 },
    /// The requested place set cannot be a ramification set.
    BadPlaceSet(String),
    /// Propagated number-field failure.
    Field(FieldError),
}

impl fmt::Display for QuatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuatError::MixedAlgebras => write!(f, "operands belong to different algebras"),
            QuatError::ZeroEntry => write!(f, "algebra entries a, b must be nonzero"),
            QuatError::UnsupportedPlace(s) => write!(f, "unsupported place: {s}"),
            QuatError::UndecidableEvenPlaces(s) => {
                write!(f, "cannot decide symbols at even places: {s}")
            }
            QuatError::SearchExhausted { bound } => {
                write!(f, "no algebra found with entries bounded by {bound}")
            }
            QuatError::BadPlaceSet(s) => write!(f, "invalid place set: {s}"),
            QuatError::Field(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for QuatError {}

impl From<FieldError> for QuatError {
    fn from(e: FieldError) -> Self {
        QuatError::Field(e)
    }
}

/// Failures in the hyperbolic-geometry kernels.
#[derive(Clone, Debug, PartialEq)]
pub enum GeomError {
    /// Points of the upper half-plane/space need y > 0.
    NotInUpperHalf(f64),
    /// Matrix has (numerically) zero determinant.
    SingularMatrix,
    /// Bessel functions of the second kind require a positive argument.
    NonPositiveArgument(f64),
    /// Fourier-Bessel terms are indexed by nonzero integral elements.
    ZeroFourierIndex,
    /// Propagated number-field failure.
    Field(FieldError),
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomError::NotInUpperHalf(y) => write!(f, "y = {y} is not positive"),
            GeomError::SingularMatrix => write!(f, "matrix is singular"),
            GeomError::NonPositiveArgument(y) => write!(f, "argument {y} is not positive"),
            GeomError::ZeroFourierIndex => write!(f, "Fourier-Bessel index must be nonzero"),
            GeomError::Field(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for GeomError {}

impl From<FieldError> for GeomError {
    fn from(e: FieldError) -> Self {
        GeomError::Field(e)
    }
}

/// Failures in zeta and volume evaluation.
#[derive(Clone, Debug, PartialEq)]
pub enum ZetaError {
    /// Requested accuracy needs more terms than the configured cap allows;
    /// carries the bound that the cap can deliver.
    EpsUnattainable {
        requested: f64,
        achievable: f64,
        cap: u64,
    },
    /// eps must be positive.
    BadEps(f64),
    /// The admissibility condition named here failed.
    NotAdmissible(String),
    /// Propagated failure.
    Field(FieldError),
    /// Propagated failure.
    Quat(QuatError),
}

impl fmt::Display for ZetaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZetaError::EpsUnattainable { requested, achievable, cap } => write!(
                f,
                "eps = {requested:e} unattainable with {cap} terms (achievable bound {achievable:e})"
            ),
            ZetaError::BadEps(e) => write!(f, "eps = {e} must be positive"),
            ZetaError::NotAdmissible(s) => write!(f, "not an admissible arithmetic setup: {s}"),
            ZetaError::Field(e) => write!(f, "{e}"),
            ZetaError::Quat(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ZetaError {}

impl From<FieldError> for ZetaError {
    fn from(e: FieldError) -> Self {
        ZetaError::Field(e)
    }
}

impl From<QuatError> for ZetaError {
    fn from(e: QuatError) -> Self {
        ZetaError::Quat(e)
    }
}

/// Failures in lattice classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    /// The (K, D) pair fits neither the Fuchsian nor the Kleinian pattern;
    /// the string names the violated condition.
    NotArithmeticSetup(String),
    /// Propagated failure.
    Field(FieldError),
    /// Propagated failure.
    Quat(QuatError),
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::NotArithmeticSetup(s) => {
                write!(f, "not an arithmetic lattice setup: {s}")
            }
            LatticeError::Field(e) => write!(f, "{e}"),
            LatticeError::Quat(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for LatticeError {}

impl From<FieldError> for LatticeError {
    fn from(e: FieldError) -> Self {
        LatticeError::Field(e)
    }
}

impl From<QuatError> for LatticeError {
    fn from(e: QuatError) -> Self {
        LatticeError::Quat(e)
    }
}
