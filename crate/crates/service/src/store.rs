use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};
use std::time::{SystemTime, UNIX_EPOCH};

use matroid_arena::{ElementSet, GameConfig, Transcript};
use rand::distributions::Alphanumeric;
use rand::Rng;

use crate::error::ApiError;
use crate::session::{Hint, MoveResponse, Session, SessionSummary, Snapshot, StateView};

const ID_LEN: usize = 16;

/// All live sessions. Moves on one session are serialized by its own lock;
/// different sessions proceed independently.
#[derive(Debug, Default)]
pub struct SessionStore {
    sessions: RwLock<HashMap<String, Arc<Mutex<Session>>>>,
    state_dir: Option<PathBuf>,
}

fn now_millis() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}

impl SessionStore {
    pub fn in_memory() -> Self {
        SessionStore::default()
    }

    /// Store that snapshots every session to `dir/<id>.json` and starts from
    /// the snapshots already there.
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self, ApiError> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| ApiError::storage(format!("{}: {e}", dir.display())))?;
        let mut sessions = HashMap::new();
        let entries = fs::read_dir(&dir).map_err(|e| ApiError::storage(e.to_string()))?;
        for entry in entries.flatten() {
            let path = entry.path();
            if path.extension().and_then(|x| x.to_str()) != Some("json") {
                continue;
            }
            match load_snapshot(&path).and_then(Session::restore) {
                Ok(session) => {
                    sessions.insert(session.id().to_string(), Arc::new(Mutex::new(session)));
                }
                Err(e) => log::warn!("skipping snapshot {}: {}", path.display(), e.reason),
            }
        }
        log::info!("restored {} sessions from {}", sessions.len(), dir.display());
        Ok(SessionStore {
            sessions: RwLock::new(sessions),
            state_dir: Some(dir),
        })
    }

    fn snapshot_path(&self, id: &str) -> Option<PathBuf> {
        self.state_dir.as_ref().map(|d| d.join(format!("{id}.json")))
    }

    fn persist(&self, session: &Session) -> Result<(), ApiError> {
        let Some(path) = self.snapshot_path(session.id()) else {
            return Ok(());
        };
        let json =
            serde_json::to_vec_pretty(&session.snapshot()).map_err(|e| ApiError::storage(e.to_string()))?;
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, json)
            .and_then(|()| fs::rename(&tmp, &path))
            .map_err(|e| ApiError::storage(format!("{}: {e}", path.display())))
    }

    fn session(&self, id: &str) -> Result<Arc<Mutex<Session>>, ApiError> {
        self.sessions
            .read()
            .expect("session index poisoned")
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::not_found(id))
    }

    pub fn create(&self, config: GameConfig) -> Result<StateView, ApiError> {
        let id: String = rand::thread_rng()
            .sample_iter(&Alphanumeric)
            .take(ID_LEN)
            .map(char::from)
            .collect();
        let session = Session::create(id.clone(), config, now_millis())?;
        self.persist(&session)?;
        let view = session.view(false);
        self.sessions
            .write()
            .expect("session index poisoned")
            .insert(id, Arc::new(Mutex::new(session)));
        Ok(view)
    }

    pub fn list(&self) -> Vec<SessionSummary> {
        let handles: Vec<_> = self
            .sessions
            .read()
            .expect("session index poisoned")
            .values()
            .cloned()
            .collect();
        let mut out: Vec<_> = handles
            .iter()
            .map(|s| s.lock().expect("session poisoned").summary())
            .collect();
        out.sort_by(|a, b| (a.created_at, &a.id).cmp(&(b.created_at, &b.id)));
        out
    }

    pub fn get(&self, id: &str, debug: bool) -> Result<StateView, ApiError> {
        Ok(self.session(id)?.lock().expect("session poisoned").view(debug))
    }

    pub fn delete(&self, id: &str) -> Result<(), ApiError> {
        self.sessions
            .write()
            .expect("session index poisoned")
            .remove(id)
            .ok_or_else(|| ApiError::not_found(id))?;
        if let Some(path) = self.snapshot_path(id) {
            if let Err(e) = fs::remove_file(&path) {
                if e.kind() != std::io::ErrorKind::NotFound {
                    return Err(ApiError::storage(format!("{}: {e}", path.display())));
                }
            }
        }
        Ok(())
    }

    pub fn bob_move(&self, id: &str, v: ElementSet) -> Result<MoveResponse, ApiError> {
        let handle = self.session(id)?;
        let mut session = handle.lock().expect("session poisoned");
        let out = session.bob_move(v, now_millis())?;
        self.persist(&session)?;
        Ok(out)
    }

    pub fn alice_move(&self, id: &str, a: ElementSet) -> Result<MoveResponse, ApiError> {
        let handle = self.session(id)?;
        let mut session = handle.lock().expect("session poisoned");
        let out = session.alice_move(a, now_millis())?;
        self.persist(&session)?;
        Ok(out)
    }

    pub fn hint(&self, id: &str) -> Result<Hint, ApiError> {
        self.session(id)?.lock().expect("session poisoned").hint()
    }

    pub fn transcript(&self, id: &str) -> Result<Option<Transcript>, ApiError> {
        Ok(self.session(id)?.lock().expect("session poisoned").transcript())
    }

    pub fn snapshot(&self, id: &str) -> Result<Snapshot, ApiError> {
        Ok(self.session(id)?.lock().expect("session poisoned").snapshot())
    }
}

fn load_snapshot(path: &Path) -> Result<Snapshot, ApiError> {
    let bytes = fs::read(path).map_err(|e| ApiError::storage(e.to_string()))?;
    serde_json::from_slice(&bytes).map_err(|e| ApiError::bad_request(e.to_string()))
}
