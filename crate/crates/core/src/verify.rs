//! Exhaustive game-tree search: Alice's strategy against every Bob, and
//! full minimax for certifying Bob wins.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::cover::{ListSizes, Weighting};
use crate::error::{Error, Result};
use crate::game::{replay, AliceKind, BobKind, Game, GameConfig, Phase, RoundRecord, Transcript, Winner};
use crate::matroid::{IndependenceOracle, Matroid};
use crate::set::ElementSet;
use crate::strategy::{AliceState, StrategyKey};

/// Largest ground set the exhaustive searches accept.
pub const EXHAUSTIVE_MAX_ELEMENTS: usize = 5;
/// Longest list the strategy verifier accepts.
pub const VERIFY_MAX_LIST: u32 = 6;
/// Longest list the minimax search accepts.
pub const MINIMAX_MAX_LIST: u32 = 3;

/// Which Bob plays the strategy verifier explores.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum MoveUniverse {
    /// Every legal reveal in every position; size-capped.
    Full,
    /// Every legal reveal, but the search stops after `max_states` distinct
    /// positions; no size cap, and the verdict is then not a proof.
    Capped { max_states: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdict {
    pub winner: Winner,
    pub states_explored: usize,
    /// Whether every reachable position was examined.
    pub exhaustive: bool,
    pub counterexample: Option<Transcript>,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub universe: MoveUniverse,
    pub memoize: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            universe: MoveUniverse::Full,
            memoize: true,
        }
    }
}

fn counterexample_config(m: &Matroid, w: &Weighting, l: &ListSizes, alice: AliceKind) -> Result<GameConfig> {
    Ok(GameConfig {
        matroid: m.to_spec()?,
        w: w.as_slice().to_vec(),
        l: l.as_slice().to_vec(),
        alice,
        bob: BobKind::Human,
        seed: None,
    })
}

/// Plays the deterministic strategy against every sequence of Bob moves.
pub fn verify_alice_wins(
    m: &Matroid,
    w: &Weighting,
    l: &ListSizes,
    universe: MoveUniverse,
) -> Result<Verdict> {
    verify_alice_wins_with(
        m,
        w,
        l,
        SearchOptions {
            universe,
            memoize: true,
        },
    )
}

pub fn verify_alice_wins_with(
    m: &Matroid,
    w: &Weighting,
    l: &ListSizes,
    options: SearchOptions,
) -> Result<Verdict> {
    let budget = match options.universe {
        MoveUniverse::Full => {
            if m.n() > EXHAUSTIVE_MAX_ELEMENTS || l.max() > VERIFY_MAX_LIST {
                return Err(Error::TooLarge(format!(
                    "exhaustive verification handles n <= {EXHAUSTIVE_MAX_ELEMENTS} and lists <= {VERIFY_MAX_LIST}"
                )));
            }
            usize::MAX
        }
        MoveUniverse::Capped { max_states } => max_states,
    };
    let alice = AliceState::init(m, w, l)?;
    let game = Game::new(m.clone(), w.clone(), l.clone())?;
    let mut search = StrategySearch {
        memo: HashSet::new(),
        memoize: options.memoize,
        explored: 0,
        budget,
        truncated: false,
    };
    let line = search.explore(&game, &alice)?;
    let counterexample = match line {
        Some(rounds) => {
            let t = Transcript {
                config: counterexample_config(m, w, l, AliceKind::Engine)?,
                rounds,
                result: Winner::Bob,
            };
            replay(&t)?;
            Some(t)
        }
        None => None,
    };
    Ok(Verdict {
        winner: if counterexample.is_some() {
            Winner::Bob
        } else {
            Winner::Alice
        },
        states_explored: search.explored,
        exhaustive: !search.truncated,
        counterexample,
    })
}

struct StrategySearch {
    memo: HashSet<StrategyKey>,
    memoize: bool,
    explored: usize,
    budget: usize,
    truncated: bool,
}

impl StrategySearch {
    /// A losing line for Alice from this position, if any.
    fn explore(&mut self, game: &Game, alice: &AliceState) -> Result<Option<Vec<RoundRecord>>> {
        if game.phase() == Phase::Finished {
            return Ok((game.result() == Some(Winner::Bob)).then(Vec::new));
        }
        let key = self.memoize.then(|| alice.key());
        if let Some(key) = &key {
            if self.memo.contains(key) {
                return Ok(None);
            }
        }
        if self.explored >= self.budget {
            self.truncated = true;
            return Ok(None);
        }
        self.explored += 1;
        for v in game.legal_bob_moves()? {
            let (a, next) = alice.respond(v)?;
            let mut child = game.clone();
            child.apply_bob(v)?;
            let color = child.state().round;
            child
                .apply_alice(a)
                .map_err(|e| Error::InternalInfeasible(format!("strategy made an illegal move: {e}")))?;
            child.check_invariants().map_err(Error::InternalInfeasible)?;
            if let Some(mut rest) = self.explore(&child, &next)? {
                rest.insert(
                    0,
                    RoundRecord {
                        color,
                        bob: v,
                        alice: a,
                    },
                );
                return Ok(Some(rest));
            }
        }
        if let Some(key) = key {
            self.memo.insert(key);
        }
        Ok(None)
    }
}

/// Compact position for minimax: colors revealed and colors received per
/// element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Position {
    revealed: Vec<u8>,
    colored: Vec<u8>,
}

struct Minimax<'a> {
    m: &'a Matroid,
    w: &'a Weighting,
    l: &'a ListSizes,
    memo: HashMap<Position, bool>,
    memoize: bool,
    explored: usize,
}

impl Minimax<'_> {
    fn eligible(&self, p: &Position) -> ElementSet {
        (0..self.m.n())
            .filter(|&e| u32::from(p.revealed[e]) < self.l[e])
            .collect()
    }

    fn outstanding(&self, p: &Position) -> ElementSet {
        (0..self.m.n())
            .filter(|&e| u32::from(p.colored[e]) < self.w[e])
            .collect()
    }

    /// Some element can no longer reach its demand.
    fn doomed(&self, p: &Position) -> bool {
        (0..self.m.n()).any(|e| {
            let open = self.l[e] - u32::from(p.revealed[e]);
            let need = self.w[e].saturating_sub(u32::from(p.colored[e]));
            open < need
        })
    }

    /// Alice's legal replies to `v`, largest sets first.
    fn replies(&self, p: &Position, v: ElementSet) -> Vec<ElementSet> {
        let mut replies: Vec<ElementSet> = (v & self.outstanding(p))
            .subsets()
            .filter(|&a| self.m.is_independent(a))
            .collect();
        replies.sort_by_key(|a| std::cmp::Reverse(a.len()));
        replies
    }

    fn step(p: &Position, v: ElementSet, a: ElementSet) -> Position {
        let mut q = p.clone();
        for e in v {
            q.revealed[e] += 1;
        }
        for e in a {
            q.colored[e] += 1;
        }
        q
    }

    fn bob_wins(&mut self, p: &Position) -> bool {
        if self.doomed(p) {
            return true;
        }
        let eligible = self.eligible(p);
        if eligible.is_empty() {
            return !self.outstanding(p).is_empty();
        }
        if self.memoize {
            if let Some(&known) = self.memo.get(p) {
                return known;
            }
        }
        self.explored += 1;
        let wins = eligible.subsets().skip(1).any(|v| {
            self.replies(p, v)
                .into_iter()
                .all(|a| self.bob_wins(&Self::step(p, v, a)))
        });
        if self.memoize {
            self.memo.insert(p.clone(), wins);
        }
        wins
    }

    /// One play following Bob's winning strategy from a Bob-winning `p`.
    fn winning_line(&mut self, mut p: Position) -> Vec<(ElementSet, ElementSet)> {
        let mut line = Vec::new();
        loop {
            let eligible = self.eligible(&p);
            if eligible.is_empty() {
                return line;
            }
            let (v, a) = if self.doomed(&p) {
                let v = eligible;
                (v, self.m.greedy_basis(v & self.outstanding(&p)))
            } else {
                let v = eligible
                    .subsets()
                    .skip(1)
                    .find(|&v| {
                        self.replies(&p, v)
                            .into_iter()
                            .all(|a| self.bob_wins(&Self::step(&p, v, a)))
                    })
                    .expect("position is winning for Bob");
                let a = self.replies(&p, v)[0];
                (v, a)
            };
            p = Self::step(&p, v, a);
            line.push((v, a));
        }
    }
}

/// Full minimax (Bob existential, Alice universal over every legal reply).
/// Returns a play in which Bob follows a winning strategy, if one exists.
pub fn find_bob_win(m: &Matroid, w: &Weighting, l: &ListSizes) -> Result<Option<Transcript>> {
    find_bob_win_with(m, w, l, true).map(|(t, _)| t)
}

/// [`find_bob_win`] with memoization switchable; also reports the number of
/// positions expanded.
pub fn find_bob_win_with(
    m: &Matroid,
    w: &Weighting,
    l: &ListSizes,
    memoize: bool,
) -> Result<(Option<Transcript>, usize)> {
    if w.len() != m.n() || l.len() != m.n() {
        return Err(Error::PreconditionViolated(
            "w and l must cover the ground set".into(),
        ));
    }
    if m.n() > EXHAUSTIVE_MAX_ELEMENTS || l.max() > MINIMAX_MAX_LIST {
        return Err(Error::TooLarge(format!(
            "minimax handles n <= {EXHAUSTIVE_MAX_ELEMENTS} and lists <= {MINIMAX_MAX_LIST}"
        )));
    }
    let mut search = Minimax {
        m,
        w,
        l,
        memo: HashMap::new(),
        memoize,
        explored: 0,
    };
    let start = Position {
        revealed: vec![0; m.n()],
        colored: vec![0; m.n()],
    };
    if !search.bob_wins(&start) {
        return Ok((None, search.explored));
    }
    let rounds = search
        .winning_line(start)
        .into_iter()
        .enumerate()
        .map(|(i, (bob, alice))| RoundRecord {
            color: i as u32 + 1,
            bob,
            alice,
        })
        .collect();
    let t = Transcript {
        config: counterexample_config(m, w, l, AliceKind::Human)?,
        rounds,
        result: Winner::Bob,
    };
    replay(&t)?;
    Ok((Some(t), search.explored))
}
