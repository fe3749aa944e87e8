use matroid_arena::{
    brute_force_cover, catalog, check_canonical_colorable, chromatic_number, union_cover, Coverage,
    ElementSet, IndependenceOracle, ListSizes, Matroid, MatroidSpec, Weighting,
};
use proptest::prelude::*;

/// max over non-empty A of ceil(|A| / r(A)), by enumeration.
fn density_bound(m: &Matroid) -> usize {
    m.ground()
        .subsets()
        .skip(1)
        .map(|a| a.len().div_ceil(m.rank(a)))
        .max()
        .unwrap_or(0)
}

#[test]
fn chromatic_number_matches_the_density_bound() {
    for (name, spec) in catalog::all() {
        let m = Matroid::load(spec).unwrap();
        assert_eq!(chromatic_number(&m).unwrap(), density_bound(&m), "{name}");
    }
}

#[test]
fn covers_and_witnesses_are_sound() {
    for (name, spec) in catalog::all() {
        let m = Matroid::load(spec).unwrap();
        for k in 1..=4 {
            let copies = vec![&m; k];
            match union_cover(&copies).unwrap() {
                Coverage::Covered(cover) => {
                    cover.check_w_cover(&m, &Weighting::constant(m.n(), 1)).unwrap();
                }
                Coverage::Deficient(w) => {
                    assert_eq!(w.demand, w.set.len() as u64);
                    assert_eq!(w.supply, (k * m.rank(w.set)) as u64, "{name}");
                    assert!(w.supply < w.demand, "{name}");
                }
            }
        }
    }
}

#[test]
fn canonical_cover_agrees_with_brute_force_on_small_matroids() {
    // Exhaustive over every w <= 2 and l <= 3 for ground sets up to 3.
    for (name, spec) in catalog::all() {
        let m = Matroid::load(spec).unwrap();
        if m.n() > 3 {
            continue;
        }
        let n = m.n();
        for code in 0..(3usize.pow(n as u32) * 4usize.pow(n as u32)) {
            let mut c = code;
            let mut w = Vec::new();
            let mut l = Vec::new();
            for _ in 0..n {
                w.push((c % 3) as u32);
                c /= 3;
                l.push((c % 4) as u32);
                c /= 4;
            }
            agree(&m, &Weighting::new(w), &ListSizes::new(l), name);
        }
    }
}

fn agree(m: &Matroid, w: &Weighting, l: &ListSizes, name: &str) {
    let brute = brute_force_cover(m, w, l).unwrap();
    match check_canonical_colorable(m, w, l) {
        Ok(Coverage::Covered(cover)) => {
            assert!(
                brute.is_some(),
                "{name}: engine covers {w:?} {l:?} but brute force cannot"
            );
            cover.check_canonical(m, w, l).unwrap();
        }
        Ok(Coverage::Deficient(witness)) => {
            assert!(brute.is_none(), "{name}: engine says infeasible for {w:?} {l:?}");
            assert!(witness.supply < witness.demand);
        }
        Err(matroid_arena::Error::InconsistentInput { witness, .. }) => {
            assert!(brute.is_none());
            assert!(witness.supply < witness.demand);
        }
        Err(e) => panic!("{name}: {e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn canonical_cover_agrees_with_brute_force(
        idx in 0..catalog::all().len(),
        raw in prop::collection::vec((0u32..3, 0u32..4), 10),
    ) {
        let (name, spec) = catalog::all()[idx].clone();
        let m = Matroid::load(spec).unwrap();
        prop_assume!(m.n() <= 7);
        let w = Weighting::new(raw[..m.n()].iter().map(|p| p.0).collect());
        let l = ListSizes::new(raw[..m.n()].iter().map(|p| p.1.max(p.0)).collect());
        agree(&m, &w, &l, name);
    }
}

#[test]
fn explicit_backend_matches_graphic_backend() {
    let k4 = Matroid::load(catalog::complete_graph(4)).unwrap();
    let independent = k4
        .independent_sets()
        .unwrap()
        .into_iter()
        .map(ElementSet::to_vec)
        .collect();
    let explicit = Matroid::load(MatroidSpec::Explicit { n: 6, independent }).unwrap();
    assert_eq!(chromatic_number(&explicit).unwrap(), 2);
}
