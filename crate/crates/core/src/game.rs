//! Referee, built-in players and transcripts for the reveal-by-color game.
//!
//! Each round Bob adds the round's color to the lists of a non-empty set of
//! elements whose lists are not yet full; Alice then colors an independent
//! subset of those elements with it. The game ends once every list has
//! exactly `l(e)` colors, and Alice wins iff every element got `w(e)`
//! colors.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::{ListSizes, Weighting};
use crate::error::{Error, Result};
use crate::matroid::{IndependenceOracle, Matroid, MatroidSpec};
use crate::set::ElementSet;
use crate::strategy::AliceState;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, Error)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum IllegalMove {
    #[error("Bob must reveal a non-empty set")]
    EmptyReveal,
    #[error("the list of element {element} is already full")]
    ListFull { element: usize },
    #[error("element {element} is not in the ground set")]
    OutOfRange { element: usize },
    #[error("element {element} was not revealed this round")]
    NotRevealed { element: usize },
    #[error("the colored set is dependent")]
    Dependent,
    #[error("element {element} already has all the colors it needs")]
    WeightExceeded { element: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Phase {
    AwaitingBob,
    AwaitingAlice,
    Finished,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Winner {
    Alice,
    Bob,
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Winner::Alice => "alice",
            Winner::Bob => "bob",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AliceKind {
    /// The built-in strategy.
    #[serde(alias = "strategy")]
    Engine,
    Human,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BobKind {
    Human,
    /// Reveal every element whose list is not full.
    Full,
    /// Uniformly random non-empty subset of the eligible elements.
    Random,
    /// One element per round, sweeping the ground set.
    Singletons,
    /// A circuit among the eligible elements, or all of them when they are
    /// independent.
    Tight,
}

impl BobKind {
    pub fn parse(name: &str) -> Option<BobKind> {
        serde_json::from_value(serde_json::Value::String(name.to_string())).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameConfig {
    pub matroid: MatroidSpec,
    pub w: Vec<u32>,
    pub l: Vec<u32>,
    pub alice: AliceKind,
    pub bob: BobKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl GameConfig {
    /// Loads the matroid and checks that `w` and `l` fit it.
    pub fn resolve(&self) -> Result<(Matroid, Weighting, ListSizes)> {
        let m = Matroid::load(self.matroid.clone())?;
        if self.w.len() != m.n() || self.l.len() != m.n() {
            return Err(Error::ConfigInvalid(format!(
                "w has {} and l has {} entries for {} elements",
                self.w.len(),
                self.l.len(),
                m.n()
            )));
        }
        if self.bob == BobKind::Random && self.seed.is_none() {
            return Err(Error::ConfigInvalid("the random Bob needs a seed".into()));
        }
        Ok((m, Weighting::new(self.w.clone()), ListSizes::new(self.l.clone())))
    }
}

/// Public position of a game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameState {
    pub lists: Vec<BTreeSet<u32>>,
    pub assigned: Vec<BTreeSet<u32>>,
    /// Color of the current (or, once finished, the next) round.
    pub round: u32,
    pub phase: Phase,
    /// Bob's reveal awaiting Alice's answer.
    pub pending: Option<ElementSet>,
    pub result: Option<Winner>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRecord {
    pub color: u32,
    pub bob: ElementSet,
    pub alice: ElementSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub config: GameConfig,
    pub rounds: Vec<RoundRecord>,
    pub result: Winner,
}

/// A game under refereeing: every move is validated before it touches the
/// state.
#[derive(Debug, Clone)]
pub struct Game {
    matroid: Matroid,
    w: Weighting,
    l: ListSizes,
    state: GameState,
}

impl Game {
    pub fn new(matroid: Matroid, w: Weighting, l: ListSizes) -> Result<Game> {
        let n = matroid.n();
        if w.len() != n || l.len() != n {
            return Err(Error::ConfigInvalid(format!(
                "w has {} and l has {} entries for {n} elements",
                w.len(),
                l.len()
            )));
        }
        let mut game = Game {
            matroid,
            w,
            l,
            state: GameState {
                lists: vec![BTreeSet::new(); n],
                assigned: vec![BTreeSet::new(); n],
                round: 1,
                phase: Phase::AwaitingBob,
                pending: None,
                result: None,
            },
        };
        game.finish_if_full();
        Ok(game)
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn weights(&self) -> &Weighting {
        &self.w
    }

    pub fn list_sizes(&self) -> &ListSizes {
        &self.l
    }

    pub fn state(&self) -> &GameState {
        &self.state
    }

    pub fn phase(&self) -> Phase {
        self.state.phase
    }

    pub fn result(&self) -> Option<Winner> {
        self.state.result
    }

    /// Elements whose lists can still take a color.
    pub fn eligible(&self) -> ElementSet {
        (0..self.matroid.n())
            .filter(|&e| (self.state.lists[e].len() as u32) < self.l[e])
            .collect()
    }

    /// Elements still short of their demand.
    pub fn outstanding(&self) -> ElementSet {
        (0..self.matroid.n())
            .filter(|&e| (self.state.assigned[e].len() as u32) < self.w[e])
            .collect()
    }

    /// Every non-empty subset of the eligible elements; nothing once the
    /// game is over.
    pub fn legal_bob_moves(&self) -> Result<impl Iterator<Item = ElementSet>> {
        let eligible = match self.state.phase {
            Phase::AwaitingBob => self.eligible(),
            Phase::Finished => ElementSet::EMPTY,
            Phase::AwaitingAlice => return Err(Error::WrongPhase),
        };
        Ok(eligible.subsets().skip(1))
    }

    pub fn check_bob(&self, v: ElementSet) -> Result<()> {
        if self.state.phase != Phase::AwaitingBob {
            return Err(Error::WrongPhase);
        }
        if v.is_empty() {
            return Err(IllegalMove::EmptyReveal.into());
        }
        if let Some(e) = (v - self.matroid.ground()).first() {
            return Err(IllegalMove::OutOfRange { element: e }.into());
        }
        if let Some(e) = (v - self.eligible()).first() {
            return Err(IllegalMove::ListFull { element: e }.into());
        }
        Ok(())
    }

    pub fn apply_bob(&mut self, v: ElementSet) -> Result<()> {
        self.check_bob(v)?;
        for e in v {
            self.state.lists[e].insert(self.state.round);
        }
        self.state.pending = Some(v);
        self.state.phase = Phase::AwaitingAlice;
        Ok(())
    }

    pub fn check_alice(&self, a: ElementSet) -> Result<()> {
        let (Phase::AwaitingAlice, Some(v)) = (self.state.phase, self.state.pending) else {
            return Err(Error::WrongPhase);
        };
        if let Some(e) = (a - self.matroid.ground()).first() {
            return Err(IllegalMove::OutOfRange { element: e }.into());
        }
        if let Some(e) = (a - v).first() {
            return Err(IllegalMove::NotRevealed { element: e }.into());
        }
        if let Some(e) = (a - self.outstanding()).first() {
            return Err(IllegalMove::WeightExceeded { element: e }.into());
        }
        if !self.matroid.is_independent(a) {
            return Err(IllegalMove::Dependent.into());
        }
        Ok(())
    }

    pub fn apply_alice(&mut self, a: ElementSet) -> Result<()> {
        self.check_alice(a)?;
        for e in a {
            self.state.assigned[e].insert(self.state.round);
        }
        self.state.pending = None;
        self.state.round += 1;
        self.state.phase = Phase::AwaitingBob;
        self.finish_if_full();
        Ok(())
    }

    fn finish_if_full(&mut self) {
        if self.state.phase == Phase::AwaitingBob && self.eligible().is_empty() {
            self.state.phase = Phase::Finished;
            self.state.result = Some(if self.outstanding().is_empty() {
                Winner::Alice
            } else {
                Winner::Bob
            });
        }
    }

    /// Elements colored with `color`.
    pub fn color_class(&self, color: u32) -> ElementSet {
        (0..self.matroid.n())
            .filter(|&e| self.state.assigned[e].contains(&color))
            .collect()
    }

    /// Checks every public invariant of the position.
    pub fn check_invariants(&self) -> Result<(), String> {
        let st = &self.state;
        for e in 0..self.matroid.n() {
            if st.lists[e].len() as u32 > self.l[e] {
                return Err(format!("list of {e} overfilled"));
            }
            if !st.assigned[e].is_subset(&st.lists[e]) {
                return Err(format!("element {e} colored outside its list"));
            }
            if st.assigned[e].len() as u32 > self.w[e] {
                return Err(format!("element {e} colored beyond its weight"));
            }
        }
        for color in 1..=st.round {
            if !self.matroid.is_independent(self.color_class(color)) {
                return Err(format!("color class {color} is dependent"));
            }
        }
        match (st.phase, st.pending, st.result) {
            (Phase::AwaitingAlice, Some(_), None)
            | (Phase::AwaitingBob, None, None)
            | (Phase::Finished, None, Some(_)) => {}
            other => return Err(format!("inconsistent phase bookkeeping {other:?}")),
        }
        if st.phase == Phase::Finished {
            if !self.eligible().is_empty() {
                return Err("finished with lists still open".into());
            }
            let alice_won = self.outstanding().is_empty();
            if alice_won != (st.result == Some(Winner::Alice)) {
                return Err("recorded winner disagrees with the colors".into());
            }
        }
        Ok(())
    }
}

/// The engine playing Alice. Uses the cover-based strategy whenever the
/// canonical lists admit a cover; otherwise, if allowed, it falls back to
/// coloring a greedy independent subset of each reveal.
#[derive(Debug, Clone)]
pub enum EngineAlice {
    Strategy(AliceState),
    Greedy,
}

impl EngineAlice {
    pub fn new(m: &Matroid, w: &Weighting, l: &ListSizes) -> Result<EngineAlice> {
        AliceState::init(m, w, l).map(EngineAlice::Strategy)
    }

    pub fn with_fallback(m: &Matroid, w: &Weighting, l: &ListSizes) -> Result<EngineAlice> {
        match Self::new(m, w, l) {
            Err(Error::NotColorable { .. }) => Ok(EngineAlice::Greedy),
            other => other,
        }
    }

    /// Answer to the reveal pending in `game`, without applying it.
    pub fn propose(&self, game: &Game) -> Result<(ElementSet, EngineAlice)> {
        let v = game.state().pending.ok_or(Error::WrongPhase)?;
        match self {
            EngineAlice::Strategy(state) => {
                let (a, next) = state.respond(v)?;
                Ok((a, EngineAlice::Strategy(next)))
            }
            EngineAlice::Greedy => {
                let a = game.matroid().greedy_basis(v & game.outstanding());
                Ok((a, EngineAlice::Greedy))
            }
        }
    }

    pub fn state(&self) -> Option<&AliceState> {
        match self {
            EngineAlice::Strategy(s) => Some(s),
            EngineAlice::Greedy => None,
        }
    }
}

/// A built-in Bob.
#[derive(Debug, Clone)]
pub enum BobPlayer {
    Full,
    Random(Box<ChaCha8Rng>),
    Singletons { cursor: usize },
    Tight,
}

impl BobPlayer {
    pub fn new(kind: BobKind, seed: Option<u64>) -> Result<BobPlayer> {
        Ok(match kind {
            BobKind::Human => return Err(Error::ConfigInvalid("a human Bob cannot be simulated".into())),
            BobKind::Full => BobPlayer::Full,
            BobKind::Random => {
                let seed = seed.ok_or_else(|| Error::ConfigInvalid("the random Bob needs a seed".into()))?;
                BobPlayer::Random(Box::new(ChaCha8Rng::seed_from_u64(seed)))
            }
            BobKind::Singletons => BobPlayer::Singletons { cursor: 0 },
            BobKind::Tight => BobPlayer::Tight,
        })
    }

    /// Next reveal. `game` must be awaiting Bob.
    pub fn choose(&mut self, game: &Game) -> ElementSet {
        let eligible = game.eligible();
        match self {
            BobPlayer::Full => eligible,
            BobPlayer::Random(rng) => loop {
                let pick: ElementSet = eligible.iter().filter(|_| rng.gen_bool(0.5)).collect();
                if !pick.is_empty() {
                    break pick;
                }
            },
            BobPlayer::Singletons { cursor } => {
                let e = eligible
                    .iter()
                    .find(|&e| e >= *cursor)
                    .or_else(|| eligible.first())
                    .expect("awaiting Bob implies an eligible element");
                *cursor = e + 1;
                ElementSet::singleton(e)
            }
            BobPlayer::Tight => {
                let m = game.matroid();
                if m.is_independent(eligible) {
                    return eligible;
                }
                let mut circuit = eligible;
                for e in eligible {
                    if !m.is_independent(circuit.without(e)) {
                        circuit.remove(e);
                    }
                }
                circuit
            }
        }
    }
}

/// Runs an engine-vs-engine game to the end.
pub fn play(config: &GameConfig) -> Result<Transcript> {
    if config.alice != AliceKind::Engine {
        return Err(Error::ConfigInvalid("play needs the engine as Alice".into()));
    }
    let (m, w, l) = config.resolve()?;
    let mut bob = BobPlayer::new(config.bob, config.seed)?;
    let mut alice = EngineAlice::with_fallback(&m, &w, &l)?;
    let mut game = Game::new(m, w, l)?;
    let mut rounds = Vec::new();
    while game.phase() != Phase::Finished {
        let v = bob.choose(&game);
        game.apply_bob(v)?;
        let (a, next) = alice.propose(&game)?;
        let color = game.state().round;
        game.apply_alice(a)?;
        alice = next;
        rounds.push(RoundRecord {
            color,
            bob: v,
            alice: a,
        });
    }
    Ok(Transcript {
        config: config.clone(),
        rounds,
        result: game.result().expect("finished game has a result"),
    })
}

/// Re-referees every move of a transcript; fails if a move is illegal, the
/// colors are out of sequence, or the recorded result is wrong.
pub fn replay(transcript: &Transcript) -> Result<Game> {
    let (m, w, l) = transcript.config.resolve()?;
    let mut game = Game::new(m, w, l)?;
    for round in &transcript.rounds {
        if round.color != game.state().round {
            return Err(Error::ConfigInvalid(format!(
                "round color {} out of sequence (expected {})",
                round.color,
                game.state().round
            )));
        }
        game.apply_bob(round.bob)?;
        game.apply_alice(round.alice)?;
    }
    match game.result() {
        Some(r) if r == transcript.result => Ok(game),
        Some(r) => Err(Error::ConfigInvalid(format!(
            "transcript claims {} but the replay ends with {r}",
            transcript.result
        ))),
        None => Err(Error::ConfigInvalid(
            "transcript ends before the game does".into(),
        )),
    }
}

/// Suggested reveal for a human Bob: the eligible set with the largest
/// ratio of outstanding demand to rank, preferring larger sets.
pub fn bob_hint(game: &Game) -> ElementSet {
    const MAX_SCAN: usize = 16;
    let eligible = game.eligible();
    if eligible.len() > MAX_SCAN {
        return eligible;
    }
    let need = |e: usize| u64::from(game.weights()[e]) - game.state().assigned[e].len() as u64;
    let mut best = eligible;
    let mut best_ratio = (0u64, 1u64);
    let mut first = true;
    for a in eligible.subsets().skip(1) {
        let demand: u64 = a.iter().map(need).sum();
        let rank = game.matroid().rank(a).max(1) as u64;
        let (bd, br) = best_ratio;
        let better = first || demand * br > bd * rank || (demand * br == bd * rank && a.len() > best.len());
        if better {
            best = a;
            best_ratio = (demand, rank);
            first = false;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(spec: MatroidSpec, k: u32, bob: BobKind) -> GameConfig {
        let n = Matroid::load(spec.clone()).unwrap().n();
        GameConfig {
            matroid: spec,
            w: vec![1; n],
            l: vec![k; n],
            alice: AliceKind::Engine,
            bob,
            seed: None,
        }
    }

    fn parallel_pair() -> MatroidSpec {
        MatroidSpec::Uniform { n: 2, r: 1 }
    }

    fn game(spec: MatroidSpec, k: u32) -> Game {
        let m = Matroid::load(spec).unwrap();
        let n = m.n();
        Game::new(m, Weighting::constant(n, 1), ListSizes::constant(n, k)).unwrap()
    }

    #[test]
    fn fresh_parallel_pair_has_three_moves() {
        let g = game(parallel_pair(), 2);
        let moves: Vec<_> = g.legal_bob_moves().unwrap().collect();
        assert_eq!(
            moves,
            vec![
                ElementSet::from([0]),
                ElementSet::from([1]),
                ElementSet::from([0, 1])
            ]
        );
    }

    #[test]
    fn full_lists_end_the_game() {
        let g = game(parallel_pair(), 0);
        assert_eq!(g.phase(), Phase::Finished);
        assert_eq!(g.legal_bob_moves().unwrap().count(), 0);
    }

    #[test]
    fn only_open_lists_can_be_revealed() {
        let m = Matroid::load(parallel_pair()).unwrap();
        let mut g = Game::new(m, Weighting::constant(2, 1), ListSizes::new(vec![1, 2])).unwrap();
        g.apply_bob([0].into()).unwrap();
        g.apply_alice([0].into()).unwrap();
        let moves: Vec<_> = g.legal_bob_moves().unwrap().collect();
        assert_eq!(moves, vec![ElementSet::from([1])]);
    }

    #[test]
    fn referee_rejects_bad_moves_without_mutation() {
        let mut g = game(parallel_pair(), 2);
        let before = g.state().clone();
        assert_eq!(
            g.apply_bob(ElementSet::EMPTY).unwrap_err(),
            IllegalMove::EmptyReveal.into()
        );
        assert_eq!(g.apply_alice(ElementSet::EMPTY).unwrap_err(), Error::WrongPhase);
        assert_eq!(
            g.apply_bob([3].into()).unwrap_err(),
            IllegalMove::OutOfRange { element: 3 }.into()
        );
        assert_eq!(g.state(), &before);
        g.apply_bob([0, 1].into()).unwrap();
        assert!(matches!(g.legal_bob_moves(), Err(Error::WrongPhase)));
        let before = g.state().clone();
        assert_eq!(
            g.apply_alice([0, 1].into()).unwrap_err(),
            IllegalMove::Dependent.into()
        );
        assert_eq!(g.apply_bob([0].into()).unwrap_err(), Error::WrongPhase);
        assert_eq!(g.state(), &before);
        g.apply_alice(ElementSet::EMPTY).unwrap();
        assert_eq!(g.state().round, 2);
        g.check_invariants().unwrap();
    }

    #[test]
    fn alice_cannot_exceed_weight_or_leave_the_reveal() {
        let mut g = game(MatroidSpec::Uniform { n: 2, r: 2 }, 2);
        g.apply_bob([0].into()).unwrap();
        assert_eq!(
            g.apply_alice([1].into()).unwrap_err(),
            IllegalMove::NotRevealed { element: 1 }.into()
        );
        g.apply_alice([0].into()).unwrap();
        g.apply_bob([0, 1].into()).unwrap();
        assert_eq!(
            g.apply_alice([0, 1].into()).unwrap_err(),
            IllegalMove::WeightExceeded { element: 0 }.into()
        );
    }

    #[test]
    fn hand_played_parallel_pair() {
        let mut g = game(parallel_pair(), 2);
        g.apply_bob([0, 1].into()).unwrap();
        g.apply_alice([0].into()).unwrap();
        g.apply_bob([1].into()).unwrap();
        g.apply_alice([1].into()).unwrap();
        assert_eq!(
            g.apply_bob([0, 1].into()).unwrap_err(),
            IllegalMove::ListFull { element: 1 }.into()
        );
        assert_eq!(g.phase(), Phase::AwaitingBob);
        g.apply_bob([0].into()).unwrap();
        g.apply_alice(ElementSet::EMPTY).unwrap();
        assert_eq!(g.result(), Some(Winner::Alice));
        g.check_invariants().unwrap();
    }

    #[test]
    fn full_bob_on_parallel_pair() {
        let t = play(&config(parallel_pair(), 2, BobKind::Full)).unwrap();
        assert_eq!(t.result, Winner::Alice);
        assert_eq!(t.rounds.len(), 2);
        replay(&t).unwrap();
    }

    #[test]
    fn full_bob_wins_below_the_chromatic_number() {
        let t = play(&config(MatroidSpec::Uniform { n: 3, r: 1 }, 2, BobKind::Full)).unwrap();
        assert_eq!(t.result, Winner::Bob);
        assert_eq!(t.rounds.len(), 2);
        replay(&t).unwrap();
    }

    #[test]
    fn every_builtin_bob_loses_on_k4() {
        let k4 = crate::catalog::complete_graph(4);
        for bob in [
            BobKind::Full,
            BobKind::Singletons,
            BobKind::Tight,
            BobKind::Random,
        ] {
            let mut cfg = config(k4.clone(), 2, bob);
            cfg.seed = Some(7);
            let t = play(&cfg).unwrap();
            assert_eq!(t.result, Winner::Alice, "{bob:?}");
            replay(&t).unwrap();
        }
    }

    #[test]
    fn tight_bob_reveals_a_circuit() {
        let g = game(crate::catalog::complete_graph(4), 2);
        let v = BobPlayer::Tight.choose(&g);
        let m = g.matroid();
        assert!(!m.is_independent(v));
        assert!(v.iter().all(|e| m.is_independent(v.without(e))));
    }

    #[test]
    fn random_bob_needs_a_seed_and_is_deterministic() {
        let cfg = config(crate::catalog::complete_graph(4), 2, BobKind::Random);
        assert!(matches!(play(&cfg), Err(Error::ConfigInvalid(_))));
        let seeded = GameConfig { seed: Some(3), ..cfg };
        assert_eq!(play(&seeded).unwrap(), play(&seeded).unwrap());
    }

    #[test]
    fn human_players_cannot_be_simulated() {
        let mut cfg = config(parallel_pair(), 2, BobKind::Human);
        assert!(matches!(play(&cfg), Err(Error::ConfigInvalid(_))));
        cfg.bob = BobKind::Full;
        cfg.alice = AliceKind::Human;
        assert!(matches!(play(&cfg), Err(Error::ConfigInvalid(_))));
    }

    #[test]
    fn tampered_transcripts_fail_replay() {
        let t = play(&config(parallel_pair(), 2, BobKind::Full)).unwrap();
        let mut wrong_result = t.clone();
        wrong_result.result = Winner::Bob;
        assert!(replay(&wrong_result).is_err());
        let mut bad_color = t.clone();
        bad_color.rounds[1].color = 5;
        assert!(replay(&bad_color).is_err());
        let mut dependent = t;
        dependent.rounds[0].alice = [0, 1].into();
        assert!(replay(&dependent).is_err());
    }

    #[test]
    fn transcript_json_shape() {
        let t = play(&config(parallel_pair(), 2, BobKind::Full)).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"config":{"matroid":{"type":"uniform","n":2,"r":1},"w":[1,1],"l":[2,2],"alice":"engine","bob":"full"},"rounds":[{"color":1,"bob":[0,1],"alice":[0]},{"color":2,"bob":[0,1],"alice":[1]}],"result":"alice"}"#
        );
        let back: Transcript = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn bob_hint_on_fresh_k4_is_everything() {
        let g = game(crate::catalog::complete_graph(4), 2);
        assert_eq!(bob_hint(&g), ElementSet::full(6));
    }

    #[test]
    fn bob_kind_names() {
        assert_eq!(BobKind::parse("tight"), Some(BobKind::Tight));
        assert_eq!(BobKind::parse("sneaky"), None);
    }
}
