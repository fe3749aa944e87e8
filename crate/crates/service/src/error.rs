use matroid_arena::{DeficiencyWitness, Error, IllegalMove};
use serde::Serialize;

/// Error response: `{"error": code, "reason": text, ...}` with an HTTP
/// status.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApiError {
    #[serde(skip)]
    pub status: u16,
    pub error: &'static str,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<DeficiencyWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<IllegalMove>,
}

impl ApiError {
    fn new(status: u16, error: &'static str, reason: impl Into<String>) -> Self {
        ApiError {
            status,
            error,
            reason: reason.into(),
            witness: None,
            detail: None,
        }
    }

    pub fn not_found(id: &str) -> Self {
        ApiError::new(404, "NotFound", format!("no session {id}"))
    }

    pub fn bad_request(reason: impl Into<String>) -> Self {
        ApiError::new(400, "BadRequest", reason)
    }

    pub fn finished() -> Self {
        ApiError::new(409, "Finished", "the game is over")
    }

    pub fn not_your_turn(reason: impl Into<String>) -> Self {
        ApiError::new(409, "WrongPhase", reason)
    }

    pub fn storage(reason: impl Into<String>) -> Self {
        ApiError::new(500, "Storage", reason)
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let reason = e.to_string();
        match e {
            Error::NotColorable { witness } => ApiError {
                witness: Some(witness),
                ..ApiError::new(409, "NotColorable", reason)
            },
            Error::IllegalMove(m) => ApiError {
                detail: Some(m),
                ..ApiError::new(409, "IllegalMove", reason)
            },
            Error::WrongPhase => ApiError::new(409, "WrongPhase", reason),
            Error::InternalInfeasible(_) => ApiError::new(500, "Internal", reason),
            _ => ApiError::new(400, "InvalidConfig", reason),
        }
    }
}
