use thiserror::Error;

use crate::cover::DeficiencyWitness;
use crate::game::IllegalMove;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid matroid spec: {0}")]
    SpecInvalid(String),
    #[error("element {element} is a loop")]
    LoopDetected { element: usize },
    #[error("independent family is not downward closed: {0}")]
    NotDownwardClosed(String),
    #[error("element {element} out of range for a ground set of size {n}")]
    OutOfRange { element: usize, n: usize },
    #[error("cannot contract a dependent set")]
    DependentContraction,
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("matroids do not share a ground set")]
    MismatchedGroundSets,
    #[error("element {element} asks for more colors than its list can hold")]
    InconsistentInput {
        element: usize,
        witness: DeficiencyWitness,
    },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("not a basis: {0}")]
    NotABasis(String),
    #[error("not colorable from the canonical lists: {witness}")]
    NotColorable { witness: DeficiencyWitness },
    #[error("illegal move: {0}")]
    IllegalMove(IllegalMove),
    #[error("move played in the wrong phase")]
    WrongPhase,
    #[error("invalid game config: {0}")]
    ConfigInvalid(String),
    /// A guarantee that the theory says always holds was found broken. This
    /// is a defect in the engine, never a property of the input.
    #[error("internal invariant broken: {0}")]
    InternalInfeasible(String),
}

impl From<IllegalMove> for Error {
    fn from(m: IllegalMove) -> Self {
        Error::IllegalMove(m)
    }
}
