use core::fmt;

/// Errors raised by field arithmetic and the geometric predicates.
#[derive(Clone, Debug, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// Reciprocal or division with an exactly zero divisor.
    DivisionByZero,
    /// `nth_root` needs the real coefficient model and a strictly positive
    /// leading coefficient.
    NotRealPositive,
    /// The leading coefficient of the radicand has no exact rational root,
    /// so the result would leave the representable field.
    IrrationalRoot,
    /// `shadow` of a number with negative leading exponent.
    UnlimitedNumber,
    /// An argument that must be nonzero (for instance in magnitude
    /// comparisons) was exactly zero.
    ZeroArgument,
    /// The function handed to the squeezing resolver failed at a perturbed
    /// evaluation point.
    EvaluationError,
    /// A projective operation received the zero vector.
    ZeroVector,
    /// Vector lengths do not match.
    DimensionMismatch,
    /// Two of the inputs are exactly linearly dependent, so the requested
    /// projective element degenerates.
    DegeneratePair,
    /// `almost_linearly_dependent` supports only two or three vectors.
    UnsupportedArity,
    /// A matrix operation received the zero matrix.
    ZeroMatrix,
    /// Inverse of a matrix whose appreciable representative has exactly
    /// vanishing determinant.
    SingularMatrix,
    /// The operation is only defined for the real coefficient model.
    ComplexModeUnsupported,
    /// The operation is only defined for the complex coefficient model.
    RealModeUnsupported,
    /// A cross-ratio bracket in the denominator is exactly zero.
    DegenerateCrossRatio,
    /// No unique conic through the five points: the interpolation system
    /// drops below full rank.
    DegenerateFivePoints,
    /// A conic form matrix must be exactly symmetric.
    AsymmetricConic,
    /// An exponent in `pow` or a comparison argument was out of range for
    /// the operation.
    UnsupportedExponent,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Error::DivisionByZero => "division by zero",
            Error::NotRealPositive => "radicand must be real with strictly positive leading coefficient",
            Error::IrrationalRoot => "leading coefficient has no exact rational root",
            Error::UnlimitedNumber => "shadow of an unlimited number",
            Error::ZeroArgument => "argument must be nonzero",
            Error::EvaluationError => "function evaluation failed at a perturbed point",
            Error::ZeroVector => "zero vector is not a projective element",
            Error::DimensionMismatch => "vector dimensions do not match",
            Error::DegeneratePair => "inputs are exactly linearly dependent",
            Error::UnsupportedArity => "only sets of two or three vectors are supported",
            Error::ZeroMatrix => "zero matrix",
            Error::SingularMatrix => "matrix is exactly singular",
            Error::ComplexModeUnsupported => "operation requires the real coefficient model",
            Error::RealModeUnsupported => "operation requires the complex coefficient model",
            Error::DegenerateCrossRatio => "cross-ratio denominator bracket is exactly zero",
            Error::DegenerateFivePoints => "no unique conic through the five points",
            Error::AsymmetricConic => "conic form matrix must be symmetric",
            Error::UnsupportedExponent => "exponent not supported here",
        };
        f.write_str(msg)
    }
}

impl core::error::Error for Error {}
