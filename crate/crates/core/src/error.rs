use thiserror::Error;

/// Errors raised by p-adic arithmetic, the hyperbolic space and the criteria built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("operands live over different primes ({0} and {1})")]
    PrimeMismatch(u64, u64),
    #[error("sum cancels every known digit; its valuation is not determined")]
    CancellationBeyondPrecision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("malformed literal `{0}`")]
    MalformedLiteral(String),
    #[error("points lie outside the ball of the base point")]
    PointsOutsideBall,
    #[error("the map is constant, its image is not a ball")]
    DegenerateConstant,
    #[error("the zero polynomial has no norm or Newton polygon")]
    ZeroPolynomial,
    #[error("map is not invertible at the origin: {0}")]
    NotInvertibleAtOrigin(String),
    #[error("points cannot be distinguished at the tracked precision")]
    IndistinguishablePoints,
    #[error("cross-ratio arguments are not pairwise distinct")]
    CoincidentPoints,
    #[error("images of {x} and {y} coincide")]
    ImageCollision { x: String, y: String },
    #[error("reduced map has degree {0}, the map is not injective on the closed unit ball")]
    NotInjectiveOnBall(usize),
    #[error("image radius exponent {0} is not an integer")]
    FractionalExponent(String),
    #[error("domain is not compatible with the residue lattice: {0}")]
    DomainNotLatticeCompatible(String),
    #[error("homography is singular")]
    SingularHomography,
    #[error("pole at {0}")]
    PoleInDomain(String),
    #[error("invalid affinoid: {0}")]
    InvalidAffinoid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
