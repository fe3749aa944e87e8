//! On-line list coloring of matroids.
//!
//! The crate computes covering numbers by matroid union, performs
//! symmetric subset exchanges between independent sets, and implements a
//! winning colorer for the game in which an adversary reveals the lists
//! color by color. A referee and exhaustive game-tree verifiers check the
//! strategy against every adversary on small matroids.

pub mod catalog;
pub mod cover;
pub mod error;
pub mod exchange;
pub mod game;
pub mod matroid;
pub mod set;
pub mod strategy;
pub mod verify;

pub use cover::{
    brute_force_cover, check_canonical_colorable, chromatic_cover, chromatic_number, union_cover, Cover,
    Coverage, DeficiencyWitness, ListSizes, Weighting,
};
pub use error::{Error, Result};
pub use exchange::{brute_force_exchange, exchange_subsets, multiple_basis_exchange, ExchangeRequest};
pub use game::{
    bob_hint, play, replay, AliceKind, BobKind, BobPlayer, EngineAlice, Game, GameConfig, GameState,
    IllegalMove, Phase, RoundRecord, Transcript, Winner,
};
pub use matroid::{ElementMap, IndependenceOracle, Masked, Matroid, MatroidSpec};
pub use set::ElementSet;
pub use strategy::{
    check_list_coloring, check_step, inductive_step, offline_list_color, AliceState, ColorLists, ColorSets,
    StepResult,
};
pub use verify::{find_bob_win, verify_alice_wins, MoveUniverse, Verdict};
