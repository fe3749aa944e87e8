use std::collections::HashMap;
use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use matroid_arena::{ElementSet, GameConfig};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::ApiError;
use crate::store::SessionStore;

type Shared = State<Arc<SessionStore>>;

fn json_response<T: Serialize>(status: StatusCode, body: &T) -> Response {
    match serde_json::to_vec(body) {
        Ok(bytes) => (status, [(header::CONTENT_TYPE, "application/json")], bytes).into_response(),
        Err(e) => (StatusCode::INTERNAL_SERVER_ERROR, e.to_string()).into_response(),
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = StatusCode::from_u16(self.status).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
        json_response(status, &self)
    }
}

/// Parses the body ourselves so malformed JSON gets the usual error shape.
fn parse<T: DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::bad_request(format!("invalid body: {e}")))
}

#[derive(Deserialize)]
struct BobMove {
    #[serde(rename = "V")]
    reveal: ElementSet,
}

#[derive(Deserialize)]
struct AliceMove {
    #[serde(rename = "A")]
    colored: ElementSet,
}

async fn create(State(store): Shared, body: Bytes) -> Result<Response, ApiError> {
    let config: GameConfig = parse(&body)?;
    let view = store.create(config)?;
    Ok(json_response(StatusCode::CREATED, &view))
}

async fn list(State(store): Shared) -> Response {
    json_response(StatusCode::OK, &store.list())
}

async fn fetch(
    State(store): Shared,
    Path(id): Path<String>,
    Query(query): Query<HashMap<String, String>>,
) -> Result<Response, ApiError> {
    let debug = query.get("debug").is_some_and(|v| v == "1" || v == "true");
    Ok(json_response(StatusCode::OK, &store.get(&id, debug)?))
}

async fn remove(State(store): Shared, Path(id): Path<String>) -> Result<Response, ApiError> {
    store.delete(&id)?;
    Ok(StatusCode::NO_CONTENT.into_response())
}

async fn bob_move(State(store): Shared, Path(id): Path<String>, body: Bytes) -> Result<Response, ApiError> {
    let mv: BobMove = parse(&body)?;
    Ok(json_response(StatusCode::OK, &store.bob_move(&id, mv.reveal)?))
}

async fn alice_move(State(store): Shared, Path(id): Path<String>, body: Bytes) -> Result<Response, ApiError> {
    let mv: AliceMove = parse(&body)?;
    Ok(json_response(StatusCode::OK, &store.alice_move(&id, mv.colored)?))
}

async fn hint(State(store): Shared, Path(id): Path<String>) -> Result<Response, ApiError> {
    Ok(json_response(StatusCode::OK, &store.hint(&id)?))
}

pub fn router(store: Arc<SessionStore>) -> Router {
    Router::new()
        .route("/sessions", post(create).get(list))
        .route("/sessions/{id}", get(fetch).delete(remove))
        .route("/sessions/{id}/bob-move", post(bob_move))
        .route("/sessions/{id}/alice-move", post(alice_move))
        .route("/sessions/{id}/hint", get(hint))
        .with_state(store)
}

#[derive(Debug, Error)]
pub enum ServeError {
    #[error("cannot bind {addr}: {source}")]
    Bind {
        addr: SocketAddr,
        source: std::io::Error,
    },
    #[error("server failed: {0}")]
    Io(#[from] std::io::Error),
}

/// Serves until Ctrl-C.
pub async fn serve(addr: SocketAddr, store: Arc<SessionStore>) -> Result<(), ServeError> {
    let listener = tokio::net::TcpListener::bind(addr)
        .await
        .map_err(|source| ServeError::Bind { addr, source })?;
    log::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(store))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    Ok(())
}
