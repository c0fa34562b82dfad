use thiserror::Error;

/// Errors produced by grid construction, data synthesis and the solvers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("interface position alpha={alpha} must lie strictly inside (0,1)")]
    AlphaOutOfRange { alpha: f64 },

    #[error(
        "subdomain too small: J={j} must satisfy 2 <= J <= N-2 = {max} \
         (each side needs its interface stencil and one interior equation)"
    )]
    SubdomainTooSmall { j: i64, max: i64 },

    #[error("grid needs at least 7 interior nodes, got N={n}")]
    GridTooSmall { n: usize },

    #[error("diffusion coefficient must be positive everywhere, found {value} at node {index} ({side})")]
    NonPositiveGamma {
        side: &'static str,
        index: usize,
        value: f64,
    },

    #[error("extrapolated ghost coefficient is non-positive ({value} on the {side} side)")]
    NonPositiveGhostGamma { side: &'static str, value: f64 },

    #[error("expression parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("expression evaluation failed: {0}")]
    Eval(String),

    #[error("hierarchy level {level} ({intervals} intervals) violates grid bounds: {source}")]
    InvalidLevel {
        level: usize,
        intervals: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(
        "coarsest interval count {coarsest} incompatible with finest {finest}: \
         need coarsest >= 8 dividing finest by a power of two"
    )]
    BadCoarsening { finest: usize, coarsest: usize },

    #[error("linear system is numerically singular (pivot {pivot:.3e} in row {row})")]
    SingularSystem { row: usize, pivot: f64 },

    #[error(
        "residual underflowed ({residual:.3e}) before the convergence-factor stop rule fired; \
         restart with a larger initial guess"
    )]
    ResidualUnderflow { residual: f64 },

    #[error("convergence study needs at least two grid sizes")]
    TooFewSizes,

    #[error("error values must be positive to compute orders, got {0}")]
    NonPositiveError(f64),

    #[error("{0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
