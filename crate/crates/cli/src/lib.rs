//! Commands behind the `matroid-arena` binary. Each one returns the JSON
//! for stdout, a one-line summary for stderr, and whether the answer was
//! positive.

use std::fs;
use std::path::{Path, PathBuf};

use matroid_arena::verify::{find_bob_win_with, verify_alice_wins_with, SearchOptions};
use matroid_arena::{
    brute_force_exchange, check_canonical_colorable, check_list_coloring, chromatic_cover, exchange_subsets,
    offline_list_color, play, replay, AliceKind, BobKind, ColorLists, Coverage, Error, ExchangeRequest,
    GameConfig, ListSizes, Matroid, MoveUniverse, Verdict, Weighting, Winner,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest ground set `exchange-check --exhaustive` accepts.
pub const EXCHANGE_EXHAUSTIVE_MAX: usize = 7;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalInfeasible(_) => CliError::Internal(e.to_string()),
            other => {
                let debug = format!("{other:?}");
                let name = debug
                    .split(|c: char| !c.is_alphanumeric())
                    .next()
                    .unwrap_or_default();
                CliError::Input(format!("{name}: {other}"))
            }
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug)]
pub struct Output {
    pub json: String,
    pub summary: String,
    /// 0 success, 1 not colorable or Bob wins, 3 a failed internal check.
    pub code: u8,
}

impl Output {
    fn new(value: &impl Serialize, summary: String, positive: bool) -> CliResult<Output> {
        let json = serde_json::to_string(value).map_err(|e| CliError::Internal(e.to_string()))?;
        Ok(Output {
            json,
            summary,
            code: if positive { 0 } else { 1 },
        })
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn load_matroid(path: &Path) -> CliResult<Matroid> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(Matroid::from_json(&text)?)
}

/// `w` and `l` from files, `w ≡ 1` when absent and `l ≡ k` when `k` is
/// given instead of a lists file.
#[derive(Debug, Clone, Default)]
pub struct Demand {
    pub weights: Option<PathBuf>,
    pub lists: Option<PathBuf>,
    pub k: Option<u32>,
}

impl Demand {
    pub fn resolve(&self, n: usize) -> CliResult<(Weighting, ListSizes)> {
        let w = match &self.weights {
            Some(p) => read_json::<Weighting>(p)?,
            None => Weighting::constant(n, 1),
        };
        let l = match (&self.lists, self.k) {
            (Some(_), Some(_)) => return Err(CliError::Input("give either --lists or --k, not both".into())),
            (Some(p), None) => read_json::<ListSizes>(p)?,
            (None, Some(k)) => ListSizes::constant(n, k),
            (None, None) => return Err(CliError::Input("one of --lists or --k is required".into())),
        };
        for (name, len) in [("weights", w.len()), ("lists", l.len())] {
            if len != n {
                return Err(CliError::Input(format!(
                    "{name} has {len} entries for {n} elements"
                )));
            }
        }
        Ok((w, l))
    }
}

#[derive(Serialize)]
struct ChromaReport<'a> {
    chi: usize,
    cover: &'a matroid_arena::Cover,
}

pub fn chroma(matroid: &Path) -> CliResult<Output> {
    let m = load_matroid(matroid)?;
    let cover = chromatic_cover(&m)?;
    let chi = cover.len();
    Output::new(
        &ChromaReport { chi, cover: &cover },
        format!("chromatic number {chi}"),
        true,
    )
}

pub fn wcover(matroid: &Path, demand: &Demand) -> CliResult<Output> {
    let m = load_matroid(matroid)?;
    let (w, l) = demand.resolve(m.n())?;
    match check_canonical_colorable(&m, &w, &l) {
        Ok(Coverage::Covered(cover)) => Output::new(
            &cover,
            format!("covered by {} independent sets", cover.len()),
            true,
        ),
        Ok(Coverage::Deficient(witness)) => deficient(&witness),
        Err(Error::InconsistentInput { witness, .. }) => deficient(&witness),
        Err(e) => Err(e.into()),
    }
}

fn deficient(witness: &matroid_arena::DeficiencyWitness) -> CliResult<Output> {
    Output::new(
        witness,
        format!(
            "not colorable: {} demands {} but supplies {}",
            witness.set, witness.demand, witness.supply
        ),
        false,
    )
}

pub struct PlayArgs<'a> {
    pub matroid: &'a Path,
    pub demand: Demand,
    pub bob: &'a str,
    pub seed: Option<u64>,
    pub out: Option<&'a Path>,
}

pub fn play_game(args: &PlayArgs) -> CliResult<Output> {
    let m = load_matroid(args.matroid)?;
    let bob = BobKind::parse(args.bob)
        .filter(|b| *b != BobKind::Human)
        .ok_or_else(|| {
            CliError::Input(format!(
                "unknown Bob {:?}; try full, random, singletons or tight",
                args.bob
            ))
        })?;
    let (w, l) = args.demand.resolve(m.n())?;
    let config = GameConfig {
        matroid: m.to_spec()?,
        w: w.as_slice().to_vec(),
        l: l.as_slice().to_vec(),
        alice: AliceKind::Engine,
        bob,
        seed: args.seed,
    };
    let transcript = play(&config)?;
    replay(&transcript).map_err(|e| CliError::Internal(format!("transcript does not replay: {e}")))?;
    let summary = format!(
        "{:?} wins after {} rounds",
        transcript.result,
        transcript.rounds.len()
    );
    let out = Output::new(&transcript, summary, transcript.result == Winner::Alice)?;
    if let Some(path) = args.out {
        fs::write(path, format!("{}\n", out.json))
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Exhaustive,
    Minimax,
}

pub fn verify(
    matroid: &Path,
    demand: &Demand,
    mode: VerifyMode,
    max_states: Option<usize>,
) -> CliResult<Output> {
    let m = load_matroid(matroid)?;
    let (w, l) = demand.resolve(m.n())?;
    let verdict = match mode {
        VerifyMode::Exhaustive => {
            let universe = match max_states {
                Some(max_states) => MoveUniverse::Capped { max_states },
                None => MoveUniverse::Full,
            };
            match verify_alice_wins_with(
                &m,
                &w,
                &l,
                SearchOptions {
                    universe,
                    memoize: true,
                },
            ) {
                Ok(v) => v,
                Err(Error::NotColorable { witness }) => return deficient(&witness),
                Err(e) => return Err(e.into()),
            }
        }
        VerifyMode::Minimax => {
            if max_states.is_some() {
                return Err(CliError::Input(
                    "--max-states applies to exhaustive mode only".into(),
                ));
            }
            let (line, explored) = find_bob_win_with(&m, &w, &l, true)?;
            Verdict {
                winner: if line.is_some() {
                    Winner::Bob
                } else {
                    Winner::Alice
                },
                states_explored: explored,
                exhaustive: true,
                counterexample: line,
            }
        }
    };
    if let Some(t) = &verdict.counterexample {
        replay(t).map_err(|e| CliError::Internal(format!("counterexample does not replay: {e}")))?;
    }
    let summary = format!(
        "{:?} wins ({} positions{})",
        verdict.winner,
        verdict.states_explored,
        if verdict.exhaustive {
            ""
        } else {
            ", search truncated"
        }
    );
    Output::new(&verdict, summary, verdict.winner == Winner::Alice)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ExchangeReport {
    pub cases: u64,
    pub passed: u64,
    pub failed: u64,
    /// Cases where no valid `Y` exists at all.
    pub no_exchange: u64,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub failures: Vec<ExchangeRequest>,
}

impl ExchangeReport {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.no_exchange == 0
    }

    fn record(&mut self, m: &Matroid, req: ExchangeRequest) -> CliResult<()> {
        self.cases += 1;
        let found = exchange_subsets(m, &req)
            .map(|y| req.accepts(m, y))
            .unwrap_or(false);
        let exists = !brute_force_exchange(m, &req)?.is_empty();
        if !exists {
            self.no_exchange += 1;
        }
        if found {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < 16 {
                self.failures.push(req);
            }
        }
        Ok(())
    }
}

/// Every independent pair `(I1, I2)` and every `X ⊆ I1`.
pub fn exchange_exhaustive(m: &Matroid) -> CliResult<ExchangeReport> {
    if m.n() > EXCHANGE_EXHAUSTIVE_MAX {
        return Err(CliError::Input(format!(
            "exhaustive exchange check handles n <= {EXCHANGE_EXHAUSTIVE_MAX}, got {}",
            m.n()
        )));
    }
    let independent = m.independent_sets()?;
    let mut report = ExchangeReport::default();
    for &first in &independent {
        for &second in &independent {
            for moved in first.subsets() {
                report.record(m, ExchangeRequest::new(first, second, moved))?;
            }
        }
    }
    Ok(report)
}

/// Random independent sets grown greedily from a shuffled order, random `X`.
pub fn exchange_sampled(m: &Matroid, samples: u64, seed: u64) -> CliResult<ExchangeReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ExchangeReport::default();
    for _ in 0..samples {
        let first = random_independent(m, &mut rng);
        let second = random_independent(m, &mut rng);
        let moved = first.iter().filter(|_| rng.gen_bool(0.5)).collect();
        report.record(m, ExchangeRequest::new(first, second, moved))?;
    }
    Ok(report)
}

fn random_independent(m: &Matroid, rng: &mut ChaCha8Rng) -> matroid_arena::ElementSet {
    use matroid_arena::IndependenceOracle;
    let mut set = matroid_arena::ElementSet::EMPTY;
    let keep = rng.gen_range(0.2..1.0);
    for e in 0..m.n() {
        if rng.gen_bool(keep) && m.is_independent(set.with(e)) {
            set.insert(e);
        }
    }
    set
}

pub fn exchange_check(matroid: &Path, exhaustive: bool, samples: u64, seed: u64) -> CliResult<Output> {
    let m = load_matroid(matroid)?;
    let report = if exhaustive {
        exchange_exhaustive(&m)?
    } else {
        exchange_sampled(&m, samples, seed)?
    };
    let mut out = Output::new(
        &report,
        format!("{} of {} cases passed", report.passed, report.cases),
        true,
    )?;
    if !report.ok() {
        out.code = 3;
    }
    Ok(out)
}

pub fn list_color(matroid: &Path, lists: &Path, weights: Option<&Path>) -> CliResult<Output> {
    let m = load_matroid(matroid)?;
    let lists: ColorLists = read_json(lists)?;
    let w = match weights {
        Some(p) => read_json::<Weighting>(p)?,
        None => Weighting::constant(m.n(), 1),
    };
    match offline_list_color(&m, &w, &lists) {
        Ok(colors) => {
            check_list_coloring(&m, &w, &lists, &colors)
                .map_err(|e| CliError::Internal(format!("coloring rejected: {e}")))?;
            let used = colors
                .colors
                .iter()
                .flatten()
                .collect::<std::collections::BTreeSet<_>>()
                .len();
            Output::new(&colors, format!("colored with {used} distinct colors"), true)
        }
        Err(Error::NotColorable { witness }) => deficient(&witness),
        Err(e) => Err(e.into()),
    }
}
