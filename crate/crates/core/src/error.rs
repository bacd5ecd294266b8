use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("field F_{p}^{k} does not fit the 32-bit element encoding")]
    FieldTooLarge { p: u32, k: u32 },
    #[error("modulus is not a monic irreducible polynomial: {0}")]
    BadModulus(String),
    #[error("{to} is not an extension of {from}")]
    NotAnExtension { from: String, to: String },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("dimension {dim} exceeds the cap {cap}")]
    DimCapExceeded { dim: usize, cap: usize },
    #[error("splitting field needs total degree {needed}, cap is {cap}")]
    SplittingCapExceeded { needed: u32, cap: u32 },
    #[error("map is not convolution invertible")]
    NotConvInvertible,
    #[error("integral not found: {0}")]
    IntegralNotFound(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invariants have dimension {0}, expected the scalars")]
    InvariantsNotCentralScalars(usize),
    #[error("cocycle invalid: {0}")]
    CocycleInvalid(String),
    #[error("not an algebra map: {0}")]
    NotAlgebraMap(String),
    #[error("cocycle values are not invariant: {0}")]
    ValuesNotInvariant(String),
    #[error("Hopf algebra is not cocommutative")]
    NotCocommutative,
    #[error("premise failed: {0}")]
    PremiseFailed(String),
    #[error("Frobenius form value is not invariant: {0}")]
    ValueNotInvariant(String),
    #[error("fiber has no one-dimensional representation")]
    NoOneDimRep,
    #[error("not a scalar: {0}")]
    NotScalar(String),
    #[error("bad prime {0}: need an odd prime")]
    BadPrime(u32),
    #[error("unknown Lie algebra kind: {0}")]
    UnknownKind(String),
    #[error("{0} points requested, at most 10000 allowed")]
    TooManyPoints(usize),
    #[error("relation check failed: {0}")]
    RelationCheckFailed(String),
    #[error("prediction failed: {0}")]
    PredictionFailed(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
