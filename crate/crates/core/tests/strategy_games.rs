use matroid_arena::{
    catalog, check_canonical_colorable, check_step, inductive_step, play, replay, AliceKind, AliceState,
    BobKind, Coverage, ElementSet, Error, Game, GameConfig, ListSizes, Matroid, Weighting, Winner,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_instance(rng: &mut ChaCha8Rng, max_n: usize, max_l: u32) -> (Matroid, Weighting, ListSizes) {
    let specs: Vec<_> = catalog::all()
        .into_iter()
        .filter(|(_, s)| Matroid::load(s.clone()).unwrap().n() <= max_n)
        .collect();
    let m = Matroid::load(specs[rng.gen_range(0..specs.len())].1.clone()).unwrap();
    let w: Vec<u32> = (0..m.n()).map(|_| rng.gen_range(0..=2)).collect();
    let l = w.iter().map(|&x| rng.gen_range(x..=max_l.max(x))).collect();
    (m, Weighting::new(w), ListSizes::new(l))
}

#[test]
fn inductive_step_exhaustive_reveals() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 200 {
        let (m, w, l) = random_instance(&mut rng, 5, 3);
        let Ok(Coverage::Covered(cover)) = check_canonical_colorable(&m, &w, &l) else {
            continue;
        };
        for v in m.ground().subsets() {
            let step = inductive_step(&m, &cover, &w, v).unwrap();
            check_step(&m, &cover, &w, v, &step).unwrap();
        }
        checked += 1;
    }
}

#[test]
fn random_games_never_break_the_referee() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut played = 0;
    while played < 2000 {
        let (m, w, l) = random_instance(&mut rng, 10, 4);
        let Ok(mut alice) = AliceState::init(&m, &w, &l) else {
            continue;
        };
        let mut game = Game::new(m.clone(), w.clone(), l.clone()).unwrap();
        while let Some(v) = {
            let eligible = game.eligible();
            (!eligible.is_empty()).then(|| loop {
                let pick: ElementSet = eligible.iter().filter(|_| rng.gen_bool(0.5)).collect();
                if !pick.is_empty() {
                    break pick;
                }
            })
        } {
            game.apply_bob(v).unwrap();
            let (a, next) = alice.respond(v).unwrap();
            game.apply_alice(a).unwrap();
            game.check_invariants().unwrap();
            next.check_invariants().unwrap();
            alice = next;
        }
        assert_eq!(game.result(), Some(Winner::Alice));
        assert!(alice.is_done());
        for e in 0..m.n() {
            assert_eq!(game.state().assigned[e].len() as u32, w[e]);
        }
        played += 1;
    }
}

#[test]
fn referee_survives_malformed_moves() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let m = Matroid::load(catalog::complete_graph(4)).unwrap();
    let mut game = Game::new(m.clone(), Weighting::constant(6, 1), ListSizes::constant(6, 2)).unwrap();
    let mut rejected = 0;
    for _ in 0..3000 {
        if game.result().is_some() {
            game = Game::new(m.clone(), Weighting::constant(6, 1), ListSizes::constant(6, 2)).unwrap();
        }
        let before = game.state().clone();
        let set = ElementSet::from_bits(rng.gen::<u64>() & if rng.gen_bool(0.9) { 0x3f } else { 0xff });
        let outcome = if rng.gen_bool(0.5) {
            game.apply_bob(set)
        } else {
            game.apply_alice(set)
        };
        match outcome {
            Ok(()) => game.check_invariants().unwrap(),
            Err(Error::IllegalMove(_) | Error::WrongPhase) => {
                rejected += 1;
                assert_eq!(game.state(), &before);
            }
            Err(e) => panic!("unexpected {e}"),
        }
    }
    assert!(rejected > 100);
}

#[test]
fn transcripts_replay_to_the_same_state() {
    for (name, spec) in catalog::all() {
        let m = Matroid::load(spec.clone()).unwrap();
        let k = matroid_arena::chromatic_number(&m).unwrap() as u32;
        for (bob, seed) in [
            (BobKind::Full, None),
            (BobKind::Random, Some(9)),
            (BobKind::Tight, None),
            (BobKind::Singletons, None),
        ] {
            let cfg = GameConfig {
                matroid: spec.clone(),
                w: vec![1; m.n()],
                l: vec![k; m.n()],
                alice: AliceKind::Engine,
                bob,
                seed,
            };
            let t = play(&cfg).unwrap();
            assert_eq!(t.result, Winner::Alice, "{name} vs {bob:?}");
            let json = serde_json::to_string(&t).unwrap();
            let back: matroid_arena::Transcript = serde_json::from_str(&json).unwrap();
            let replayed = replay(&back).unwrap();
            assert_eq!(replayed.result(), Some(t.result));
            assert_eq!(serde_json::to_string(&play(&cfg).unwrap()).unwrap(), json);
        }
    }
}
