use matroid_arena_wasm::{catalog_json, chromatic_json, exchange_json, Duel};
use serde_json::{json, Value};

const K4: &str = r#"{"type":"graphic","vertices":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn catalog_lists_named_matroids() {
    let names: Vec<_> = parse(catalog_json().unwrap())
        .as_array()
        .unwrap()
        .iter()
        .map(|pair| pair[0].as_str().unwrap().to_string())
        .collect();
    assert!(names.contains(&"K4".to_string()));
}

#[test]
fn chromatic_of_k4() {
    let out = parse(chromatic_json(K4).unwrap());
    assert_eq!(out["chi"], 2);
    assert_eq!(out["parts"].as_array().unwrap().len(), 2);
    assert!(chromatic_json("{\"type\":\"uniform\"}").is_err());
}

#[test]
fn exchange_on_k4() {
    let out = parse(exchange_json(K4, r#"{"I1":[0,1,2],"I2":[1,3,5],"X":[0]}"#).unwrap());
    assert_eq!(out["Y"].as_array().unwrap().len(), 1);
    assert!(exchange_json(K4, r#"{"I1":[0,1,3],"I2":[],"X":[]}"#).is_err());
}

#[test]
fn duel_runs_to_an_alice_win() {
    let mut duel = Duel::create(K4, 2).unwrap();
    assert_eq!(parse(duel.hint_json().unwrap()), json!([0, 1, 2, 3, 4, 5]));
    assert!(duel.reveal_json("[]").is_err());
    let before = duel.state_json().unwrap();
    assert!(duel.reveal_json("[9]").is_err());
    assert_eq!(duel.state_json().unwrap(), before);
    loop {
        let state = parse(duel.state_json().unwrap());
        if state["phase"] == "finished" {
            assert_eq!(state["result"], "alice");
            break;
        }
        let hint = duel.hint_json().unwrap();
        duel.reveal_json(&hint).unwrap();
    }
    assert!(Duel::create(r#"{"type":"uniform","n":3,"r":1}"#, 2).is_err());
}
