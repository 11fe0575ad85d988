use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalar domains do not mix: {0}")]
    DomainMismatch(String),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("denominator vanishes at the given binding")]
    DenominatorVanishes,
    #[error("polynomial degree {0} exceeds the supported bound")]
    DegreeTooHigh(usize),
    #[error("search bound exceeded while {0}")]
    SearchBoundExceeded(&'static str),
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: {msg}")]
    Semantic { line: usize, msg: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension must be 3, got {0}")]
    NotDimension3(usize),
    #[error("eigenvalues lie outside Q(i)")]
    EigenvalueOutsideDomain,
    #[error("cocycle is not bijective")]
    NotBijective,
    #[error("not a 1-cocycle: {0}")]
    NotCocycle(String),
    #[error("not a representation: {0}")]
    NotRepresentation(String),
    #[error("algebra is not left-symmetric: {0}")]
    NotLeftSymmetric(String),
    #[error("witness matrix is singular")]
    SingularWitness,
    #[error("matrix is not a Lie algebra automorphism")]
    NotAutomorphism,
    #[error("zero algebra: every subspace is an ideal")]
    ZeroAlgebra,
    #[error("an extension of degree {0} would be required")]
    ExtensionDegreeTooHigh(usize),
    #[error("modulus is reducible over Q(i)")]
    ReducibleModulus,
    #[error("base algebra is not commutative and associative")]
    NotCommutativeAssociative,
    #[error("map is not a derivation")]
    NotDerivation,
    #[error("operator does not satisfy the classical Yang-Baxter equation")]
    CybeFails,
    #[error("map is not an O-operator")]
    NotOOperator,
    #[error("product on the image depends on the choice of preimage")]
    IllDefinedProduct,
    #[error("unknown catalog id `{0}`")]
    UnknownId(String),
    #[error("binding violates constraint `{0}`")]
    ConstraintViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Attaches a 1-based line number to parse errors that lack one.
    pub fn at_line(self, line: usize) -> Self {
        match self {
            Error::Syntax { line: 0, col, msg } => Error::Syntax { line, col, msg },
            Error::Semantic { line: 0, msg } => Error::Semantic { line, msg },
            other => other,
        }
    }
}
