use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("invalid descriptor: {0}")]
    Invalid(String),
    #[error("nothing to eliminate: both polynomials are constant in the variable")]
    NothingToEliminate,
    #[error("degenerate direction; perturb w ({0})")]
    DegenerateDirection(String),
    #[error("spurious factor removal could not certify; candidates {first} and {second}")]
    CannotCertify { first: String, second: String },
    #[error("direction lies in the discriminant locus: {0}")]
    NotInOmega(String),
    #[error("numerical non-convergence in {what} (residual {residual:e})")]
    NonConvergence { what: String, residual: f64 },
    #[error("critical point matching is ambiguous: {0}")]
    MatchingAmbiguity(String),
    #[error("slice not transversal: {0}")]
    SliceNotTransversal(String),
    #[error("truncation below leading term (order {order}, leading exponent {leading})")]
    TruncationBelowLeading { order: String, leading: String },
    #[error("base point is a smooth point; irregularity is undefined there")]
    SmoothBasePoint,
    #[error("tau on a wall: value not stable under perturbation")]
    TauOnWall,
    #[error("inconsistent branch data: {0}")]
    InconsistentBranchData(String),
    #[error("point configuration does not span a full-dimensional hull with the origin")]
    DegenerateHull,
    #[error("stalk weights required: {0}")]
    WeightsRequired(String),
    #[error("symbolic degree cap exceeded ({0}); use pointwise evaluation")]
    DegreeCap(String),
    #[error("torus volume cross-check failed: rank {rank}, normalized volume {volume}")]
    VolumeMismatch { rank: usize, volume: u64 },
    #[error("singular support: {0}")]
    SingularSupport(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code: 2 parse, 3 precondition, 4 numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Invalid(_) => 2,
            Error::NonConvergence { .. }
            | Error::MatchingAmbiguity(_)
            | Error::CannotCertify { .. } => 4,
            Error::Io(_) => 1,
            _ => 3,
        }
    }
}
