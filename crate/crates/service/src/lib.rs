//! Session-hosting HTTP API for the matroid coloring game.
//!
//! A session is one game. Either side can be a human (moves arrive over
//! HTTP) or the engine (moves are made as soon as it is its turn), so a
//! human Bob's request returns with the engine Alice's answer already
//! applied.

mod error;
mod http;
mod session;
mod store;

pub use error::ApiError;
pub use http::{router, serve, ServeError};
pub use session::{Hint, MoveResponse, Session, SessionSummary, Snapshot, StateView};
pub use store::SessionStore;
