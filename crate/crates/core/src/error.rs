use thiserror::Error;

use crate::series::Var;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid polyomino: {0}")]
    InvalidPolyomino(&'static str),
    #[error("half-perimeter bound {requested} exceeds the safety bound {limit}")]
    BoundExceeded { requested: u32, limit: u32 },
    #[error("half-perimeter bound must be at least {min}, got {requested}")]
    BoundTooSmall { requested: u32, min: u32 },
    #[error("series operands have incompatible weights for variable {0}")]
    IncompatibleTruncation(Var),
    #[error("variable {0} is not part of the series ring")]
    UnknownVariable(Var),
    #[error("constant term is zero")]
    ZeroConstantTerm,
    #[error("constant term is not the square of a rational")]
    NotARationalSquare,
    #[error("coefficient query beyond the truncation caps")]
    OutOfCap,
    #[error("series is not divisible by {0}")]
    NotDivisible(&'static str),
    #[error("substitution would need infinitely many terms below the truncation")]
    InfiniteComposition,
    #[error("cap {0} is too large for the packed monomial encoding")]
    CapTooLarge(u32),
    #[error("series involves variables other than {0}")]
    NotUnivariate(Var),
    #[error("iteration did not converge")]
    NoConvergence,
    #[error("derivative paths disagree")]
    PathMismatch,
    #[error("kernel-method division left a nonzero remainder")]
    KernelRemainder,
    #[error("order must be at least {min}, got {requested}")]
    OrderTooSmall { requested: u32, min: u32 },
    #[error("counter overflow")]
    Overflow,
    #[error("unknown target {0}")]
    UnknownTarget(alloc::string::String),
}
