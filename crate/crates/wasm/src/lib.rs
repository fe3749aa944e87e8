//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Everything crosses the boundary as JSON strings. The `*_json` functions
//! hold the logic and are plain Rust; the exported wrappers only turn their
//! errors into JS exceptions.

use matroid_arena::{
    bob_hint, catalog, chromatic_cover, exchange_subsets, ElementSet, EngineAlice, ExchangeRequest, Game,
    GameState, ListSizes, Matroid, Weighting,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

type Res<T> = Result<T, String>;

fn load(spec: &str) -> Res<Matroid> {
    Matroid::from_json(spec).map_err(|e| e.to_string())
}

fn to_json(value: &impl Serialize) -> Res<String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// Named matroids as `[[name, spec], ...]`.
pub fn catalog_json() -> Res<String> {
    to_json(&catalog::all())
}

#[derive(Serialize)]
struct ChromaticReply {
    chi: usize,
    parts: Vec<ElementSet>,
}

pub fn chromatic_json(spec: &str) -> Res<String> {
    let m = load(spec)?;
    let cover = chromatic_cover(&m).map_err(|e| e.to_string())?;
    to_json(&ChromaticReply {
        chi: cover.len(),
        parts: cover.parts,
    })
}

#[derive(Serialize)]
struct ExchangeReply {
    #[serde(rename = "Y")]
    y: ElementSet,
    first: ElementSet,
    second: ElementSet,
}

/// `request` is `{"I1":[..],"I2":[..],"X":[..]}`.
pub fn exchange_json(spec: &str, request: &str) -> Res<String> {
    let m = load(spec)?;
    let req: ExchangeRequest = serde_json::from_str(request).map_err(|e| e.to_string())?;
    let y = exchange_subsets(&m, &req).map_err(|e| e.to_string())?;
    let (first, second) = req.swapped(y);
    to_json(&ExchangeReply { y, first, second })
}

/// A game with the page as Bob and the engine as Alice, every list of
/// size `k`.
#[wasm_bindgen]
pub struct Duel {
    game: Game,
    alice: EngineAlice,
}

#[derive(Serialize)]
struct RoundReply<'a> {
    alice: ElementSet,
    state: &'a GameState,
}

impl Duel {
    pub fn create(spec: &str, k: u32) -> Res<Duel> {
        let m = load(spec)?;
        let (w, l) = (Weighting::constant(m.n(), 1), ListSizes::constant(m.n(), k));
        let alice = EngineAlice::new(&m, &w, &l).map_err(|e| e.to_string())?;
        let game = Game::new(m, w, l).map_err(|e| e.to_string())?;
        Ok(Duel { game, alice })
    }

    pub fn reveal_json(&mut self, v: &str) -> Res<String> {
        let v: ElementSet = serde_json::from_str(v).map_err(|e| e.to_string())?;
        let mut game = self.game.clone();
        game.apply_bob(v).map_err(|e| e.to_string())?;
        let (a, next) = self.alice.propose(&game).map_err(|e| e.to_string())?;
        game.apply_alice(a).map_err(|e| e.to_string())?;
        self.game = game;
        self.alice = next;
        to_json(&RoundReply {
            alice: a,
            state: self.game.state(),
        })
    }

    pub fn state_json(&self) -> Res<String> {
        to_json(self.game.state())
    }

    pub fn hint_json(&self) -> Res<String> {
        to_json(&bob_hint(&self.game))
    }
}

fn js(r: Res<String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn catalog() -> Result<String, JsError> {
    js(catalog_json())
}

#[wasm_bindgen]
pub fn chromatic(spec: &str) -> Result<String, JsError> {
    js(chromatic_json(spec))
}

#[wasm_bindgen]
pub fn exchange(spec: &str, request: &str) -> Result<String, JsError> {
    js(exchange_json(spec, request))
}

#[wasm_bindgen]
impl Duel {
    #[wasm_bindgen(constructor)]
    pub fn new(spec: &str, k: u32) -> Result<Duel, JsError> {
        Duel::create(spec, k).map_err(|e| JsError::new(&e))
    }

    pub fn reveal(&mut self, v: &str) -> Result<String, JsError> {
        js(self.reveal_json(v))
    }

    pub fn state(&self) -> Result<String, JsError> {
        js(self.state_json())
    }

    pub fn hint(&self) -> Result<String, JsError> {
        js(self.hint_json())
    }
}
