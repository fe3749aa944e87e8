use std::collections::BTreeSet;

use matroid_arena::{
    bob_hint, AliceKind, AliceState, BobKind, BobPlayer, Cover, ElementSet, EngineAlice, Error, Game,
    GameConfig, IndependenceOracle, ListSizes, MatroidSpec, Phase, RoundRecord, Transcript, Weighting,
    Winner,
};
use serde::{Deserialize, Serialize};

use crate::error::ApiError;

/// One game and whatever engine players take part in it.
#[derive(Debug, Clone)]
pub struct Session {
    id: String,
    config: GameConfig,
    game: Game,
    alice: Option<EngineAlice>,
    bob: Option<BobPlayer>,
    rounds: Vec<RoundRecord>,
    created_at: u64,
    updated_at: u64,
}

/// On-disk form of a session: the config and the moves, enough to rebuild
/// every engine player deterministically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Snapshot {
    pub id: String,
    pub config: GameConfig,
    pub rounds: Vec<RoundRecord>,
    pub pending: Option<ElementSet>,
    pub created_at: u64,
    pub updated_at: u64,
}

/// Public view of a session.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StateView {
    pub id: String,
    pub matroid: MatroidSpec,
    pub w: Vec<u32>,
    pub l: Vec<u32>,
    pub alice: AliceKind,
    pub bob: BobKind,
    pub round: u32,
    pub phase: Phase,
    pub lists: Vec<BTreeSet<u32>>,
    pub assigned: Vec<BTreeSet<u32>>,
    pub pending: Option<ElementSet>,
    pub result: Option<Winner>,
    pub rounds: Vec<RoundRecord>,
    pub created_at: u64,
    pub updated_at: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub debug: Option<DebugView>,
}

/// Engine internals, only with `?debug=1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DebugView {
    pub cover: Option<Cover>,
    pub residual_w: Option<Vec<u32>>,
    pub residual_l: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SessionSummary {
    pub id: String,
    pub alice: AliceKind,
    pub bob: BobKind,
    pub round: u32,
    pub phase: Phase,
    pub result: Option<Winner>,
    pub created_at: u64,
    pub updated_at: u64,
}

/// Reply to a move: what each side played this request and the new state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveResponse {
    pub bob: Option<ElementSet>,
    pub alice: Option<ElementSet>,
    pub state: StateView,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hint {
    pub role: &'static str,
    pub hint: ElementSet,
}

impl Session {
    fn fresh(id: String, config: GameConfig, now: u64) -> Result<Session, Error> {
        let (m, w, l) = config.resolve()?;
        let alice = match config.alice {
            AliceKind::Engine => Some(EngineAlice::new(&m, &w, &l)?),
            AliceKind::Human => None,
        };
        let bob = match config.bob {
            BobKind::Human => None,
            kind => Some(BobPlayer::new(kind, config.seed)?),
        };
        Ok(Session {
            id,
            game: Game::new(m, w, l)?,
            config,
            alice,
            bob,
            rounds: Vec::new(),
            created_at: now,
            updated_at: now,
        })
    }

    /// New session; engine players that are on turn move right away.
    pub fn create(id: String, config: GameConfig, now: u64) -> Result<Session, ApiError> {
        let mut s = Session::fresh(id, config, now)?;
        s.advance()?;
        Ok(s)
    }

    /// Rebuilds a session by replaying its recorded moves; engine moves
    /// must come out identical to the recorded ones.
    pub fn restore(snapshot: Snapshot) -> Result<Session, ApiError> {
        let mut s = Session::fresh(snapshot.id, snapshot.config, snapshot.created_at)?;
        for round in &snapshot.rounds {
            s.replay_bob(round.bob)?;
            let color = s.game.state().round;
            if color != round.color {
                return Err(ApiError::bad_request(format!(
                    "snapshot round {} out of sequence",
                    round.color
                )));
            }
            if let Some(alice) = &s.alice {
                let (a, next) = alice.propose(&s.game)?;
                if a != round.alice {
                    return Err(ApiError::bad_request(format!(
                        "snapshot records Alice playing {} but the engine plays {a}",
                        round.alice
                    )));
                }
                s.alice = Some(next);
            }
            s.game.apply_alice(round.alice)?;
            s.rounds.push(round.clone());
        }
        if let Some(v) = snapshot.pending {
            s.replay_bob(v)?;
        }
        s.advance()?;
        s.updated_at = snapshot.updated_at;
        Ok(s)
    }

    fn replay_bob(&mut self, v: ElementSet) -> Result<(), ApiError> {
        if let Some(bob) = &mut self.bob {
            let chosen = bob.choose(&self.game);
            if chosen != v {
                return Err(ApiError::bad_request(format!(
                    "snapshot records Bob playing {v} but the engine plays {chosen}"
                )));
            }
        }
        self.game.apply_bob(v)?;
        Ok(())
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn game(&self) -> &Game {
        &self.game
    }

    pub fn rounds(&self) -> &[RoundRecord] {
        &self.rounds
    }

    pub fn config(&self) -> &GameConfig {
        &self.config
    }

    pub fn snapshot(&self) -> Snapshot {
        Snapshot {
            id: self.id.clone(),
            config: self.config.clone(),
            rounds: self.rounds.clone(),
            pending: self.game.state().pending,
            created_at: self.created_at,
            updated_at: self.updated_at,
        }
    }

    /// Lets engine players move while it is their turn. Returns the moves
    /// made.
    fn advance(&mut self) -> Result<(Option<ElementSet>, Option<ElementSet>), ApiError> {
        let (mut bob_moved, mut alice_moved) = (None, None);
        loop {
            match self.game.phase() {
                Phase::AwaitingBob => {
                    let Some(bob) = &mut self.bob else { break };
                    let v = bob.choose(&self.game);
                    self.game.apply_bob(v)?;
                    bob_moved = Some(v);
                }
                Phase::AwaitingAlice => {
                    let Some(alice) = &self.alice else { break };
                    let (a, next) = alice.propose(&self.game)?;
                    self.record_alice(a)?;
                    self.alice = Some(next);
                    alice_moved = Some(a);
                }
                Phase::Finished => break,
            }
        }
        Ok((bob_moved, alice_moved))
    }

    fn record_alice(&mut self, a: ElementSet) -> Result<(), Error> {
        let color = self.game.state().round;
        let bob = self.game.state().pending.ok_or(Error::WrongPhase)?;
        self.game.apply_alice(a)?;
        self.rounds.push(RoundRecord { color, bob, alice: a });
        Ok(())
    }

    /// Runs `op` on a copy and keeps it only if it succeeds, so a rejected
    /// request leaves the session untouched.
    fn transact<T>(
        &mut self,
        now: u64,
        op: impl FnOnce(&mut Session) -> Result<T, ApiError>,
    ) -> Result<T, ApiError> {
        let mut draft = self.clone();
        let out = op(&mut draft)?;
        draft.updated_at = now;
        *self = draft;
        Ok(out)
    }

    pub fn bob_move(&mut self, v: ElementSet, now: u64) -> Result<MoveResponse, ApiError> {
        if self.bob.is_some() {
            return Err(ApiError::not_your_turn("Bob is played by the engine"));
        }
        self.transact(now, |s| {
            s.game.apply_bob(v)?;
            let (_, alice) = s.advance()?;
            Ok((v, alice))
        })
        .map(|(bob, alice)| MoveResponse {
            bob: Some(bob),
            alice,
            state: self.view(false),
        })
    }

    pub fn alice_move(&mut self, a: ElementSet, now: u64) -> Result<MoveResponse, ApiError> {
        if self.alice.is_some() {
            return Err(ApiError::not_your_turn("Alice is played by the engine"));
        }
        self.transact(now, |s| {
            s.record_alice(a)?;
            let (bob, _) = s.advance()?;
            Ok(bob)
        })
        .map(|bob| MoveResponse {
            bob,
            alice: Some(a),
            state: self.view(false),
        })
    }

    /// Suggestion for the human whose turn it is; never changes the session.
    pub fn hint(&self) -> Result<Hint, ApiError> {
        match self.game.phase() {
            Phase::Finished => Err(ApiError::finished()),
            Phase::AwaitingBob => Ok(Hint {
                role: "bob",
                hint: bob_hint(&self.game),
            }),
            Phase::AwaitingAlice => Ok(Hint {
                role: "alice",
                hint: self.alice_hint()?,
            }),
        }
    }

    /// The strategy's reply from the current position: residual demand and
    /// the lists as they stood before this round's reveal. Falls back to a
    /// greedy reply when that position is no longer winnable.
    fn alice_hint(&self) -> Result<ElementSet, ApiError> {
        let game = &self.game;
        let st = game.state();
        let v = st.pending.ok_or(Error::WrongPhase)?;
        let n = game.matroid().n();
        let w = Weighting::new(
            (0..n)
                .map(|e| game.weights()[e] - st.assigned[e].len() as u32)
                .collect(),
        );
        let l = ListSizes::new(
            (0..n)
                .map(|e| game.list_sizes()[e] - st.lists[e].len() as u32 + u32::from(v.contains(e)))
                .collect(),
        );
        match AliceState::init(game.matroid(), &w, &l) {
            Ok(state) => Ok(state.respond(v)?.0),
            Err(Error::NotColorable { .. }) => Ok(game.matroid().greedy_basis(v & game.outstanding())),
            Err(e) => Err(e.into()),
        }
    }

    /// The finished game as a transcript.
    pub fn transcript(&self) -> Option<Transcript> {
        Some(Transcript {
            config: self.config.clone(),
            rounds: self.rounds.clone(),
            result: self.game.result()?,
        })
    }

    pub fn summary(&self) -> SessionSummary {
        let st = self.game.state();
        SessionSummary {
            id: self.id.clone(),
            alice: self.config.alice,
            bob: self.config.bob,
            round: st.round,
            phase: st.phase,
            result: st.result,
            created_at: self.created_at,
            updated_at: self.updated_at,
        }
    }

    pub fn view(&self, debug: bool) -> StateView {
        let st = self.game.state();
        let debug = debug.then(|| {
            let state = self.alice.as_ref().and_then(EngineAlice::state);
            DebugView {
                cover: state.map(|s| s.cover().clone()),
                residual_w: state.map(|s| s.residual_w().as_slice().to_vec()),
                residual_l: state.map(|s| s.residual_l().as_slice().to_vec()),
            }
        });
        StateView {
            id: self.id.clone(),
            matroid: self.config.matroid.clone(),
            w: self.config.w.clone(),
            l: self.config.l.clone(),
            alice: self.config.alice,
            bob: self.config.bob,
            round: st.round,
            phase: st.phase,
            lists: st.lists.clone(),
            assigned: st.assigned.clone(),
            pending: st.pending,
            result: st.result,
            rounds: self.rounds.clone(),
            created_at: self.created_at,
            updated_at: self.updated_at,
            debug,
        }
    }
}
