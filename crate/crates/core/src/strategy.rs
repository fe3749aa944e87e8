//! Alice's side of the game: the cover-update step and the on-line
//! strategy built on it, plus the off-line list colorer that replays the
//! strategy against lists known in advance.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::cover::{check_canonical_colorable, Cover, Coverage, ListSizes, Weighting};
use crate::error::{Error, Result};
use crate::exchange::{exchange_subsets, ExchangeRequest};
use crate::game::IllegalMove;
use crate::matroid::{IndependenceOracle, Matroid};
use crate::set::ElementSet;

/// Output of [`inductive_step`]: the set colored now and the updated cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepResult {
    #[serde(rename = "I")]
    pub colored: ElementSet,
    #[serde(rename = "newCover")]
    pub cover: Cover,
}

/// Pushes the revealed elements `v` one part later through a chain of
/// exchanges and takes what falls off the last part.
///
/// Walking `i = 1..k`, the elements of `v` in the current part that are not
/// already in part `i+1` are moved to part `i+1`, and an exchange set from
/// part `i+1` moves back so both parts stay independent. Whatever of `v`
/// is left in the last part is colored now (`I_{k+1}` is taken empty).
pub fn inductive_step(m: &Matroid, cover: &Cover, w: &Weighting, v: ElementSet) -> Result<StepResult> {
    m.check_subset(v)?;
    cover
        .check_w_cover(m, w)
        .map_err(|e| Error::PreconditionViolated(format!("not a w-cover: {e}")))?;
    let k = cover.len();
    let mut parts = Vec::with_capacity(k);
    let mut colored = ElementSet::EMPTY;
    if let Some(&first) = cover.parts.first() {
        let mut current = first;
        for i in 0..k {
            let next = cover.parts.get(i + 1).copied().unwrap_or_default();
            let moved = (v & current) - next;
            if i + 1 < k {
                let y = exchange_subsets(m, &ExchangeRequest::new(current, next, moved))?;
                parts.push((current - moved) | y);
                current = (next - y) | moved;
            } else {
                colored = moved;
                parts.push(current - moved);
            }
        }
    }
    let step = StepResult {
        colored,
        cover: Cover::new(parts),
    };
    check_step(m, cover, w, v, &step).map_err(Error::InternalInfeasible)?;
    Ok(step)
}

/// The two guarantees of a cover update, checked literally:
/// the new cover is a `(w - c_I)`-cover with `I ⊆ v` independent, and an
/// element in new part `s` was in some old part `t >= s + c_v(e)`.
pub fn check_step(
    m: &impl IndependenceOracle,
    before: &Cover,
    w: &Weighting,
    v: ElementSet,
    step: &StepResult,
) -> Result<(), String> {
    if !step.colored.is_subset(v) {
        return Err(format!("I = {} is not inside V = {v}", step.colored));
    }
    if !m.is_independent(step.colored) {
        return Err(format!("I = {} is dependent", step.colored));
    }
    if step.cover.len() != before.len() {
        return Err(format!(
            "cover changed from {} to {} parts",
            before.len(),
            step.cover.len()
        ));
    }
    let mut reduced = w.clone();
    for e in step.colored {
        if reduced[e] == 0 {
            return Err(format!("element {e} colored beyond its weight"));
        }
    }
    reduced.decrement(step.colored);
    step.cover
        .check_w_cover(m, &reduced)
        .map_err(|e| format!("condition (1): {e}"))?;
    for (s, part) in step.cover.parts.iter().enumerate() {
        for e in *part {
            let shift = usize::from(v.contains(e));
            let traced = before.parts[s..]
                .iter()
                .enumerate()
                .any(|(offset, old)| offset >= shift && old.contains(e));
            if !traced {
                return Err(format!(
                    "condition (2): element {e} in new part {} has no old part at or after {}",
                    s + 1,
                    s + 1 + shift
                ));
            }
        }
    }
    Ok(())
}

/// Alice's private position: the cover witnessing that the residual demand
/// is still colorable from the residual canonical lists.
#[derive(Debug, Clone)]
pub struct AliceState {
    matroid: Matroid,
    weights: Weighting,
    cover: Cover,
    residual_w: Weighting,
    residual_l: ListSizes,
    assigned: Vec<BTreeSet<u32>>,
    round: u32,
}

/// Hashable summary of everything that determines Alice's future play.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrategyKey {
    pub cover: Cover,
    pub residual_w: Weighting,
    pub residual_l: ListSizes,
}

impl AliceState {
    /// Builds the initial cover from the canonical lists `{1..l(e)}`.
    /// Fails with the deficiency witness when no such cover exists.
    pub fn init(m: &Matroid, w: &Weighting, l: &ListSizes) -> Result<AliceState> {
        let cover = match check_canonical_colorable(m, w, l) {
            Ok(Coverage::Covered(cover)) => cover,
            Ok(Coverage::Deficient(witness)) | Err(Error::InconsistentInput { witness, .. }) => {
                return Err(Error::NotColorable { witness })
            }
            Err(e) => return Err(e),
        };
        let state = AliceState {
            matroid: m.clone(),
            weights: w.clone(),
            cover,
            residual_w: w.clone(),
            residual_l: l.clone(),
            assigned: vec![BTreeSet::new(); m.n()],
            round: 1,
        };
        state.check_invariants().map_err(Error::InternalInfeasible)?;
        Ok(state)
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn cover(&self) -> &Cover {
        &self.cover
    }

    pub fn residual_w(&self) -> &Weighting {
        &self.residual_w
    }

    pub fn residual_l(&self) -> &ListSizes {
        &self.residual_l
    }

    pub fn assigned(&self) -> &[BTreeSet<u32>] {
        &self.assigned
    }

    /// Color index of the next round.
    pub fn round(&self) -> u32 {
        self.round
    }

    pub fn is_done(&self) -> bool {
        self.residual_w.total() == 0
    }

    pub fn key(&self) -> StrategyKey {
        StrategyKey {
            cover: self.cover.clone(),
            residual_w: self.residual_w.clone(),
            residual_l: self.residual_l.clone(),
        }
    }

    pub fn check_invariants(&self) -> Result<(), String> {
        self.cover
            .check_canonical(&self.matroid, &self.residual_w, &self.residual_l)?;
        for e in 0..self.matroid.n() {
            if self.residual_l[e] < self.residual_w[e] {
                return Err(format!(
                    "element {e} needs more colors than its list can still take"
                ));
            }
            if self.assigned[e].len() as u32 + self.residual_w[e] != self.weights[e] {
                return Err(format!("element {e} has inconsistent color bookkeeping"));
            }
        }
        Ok(())
    }

    /// Reply to Bob revealing the current color on `v`: the set colored
    /// with it and the next state. `self` is left untouched.
    pub fn respond(&self, v: ElementSet) -> Result<(ElementSet, AliceState)> {
        if v.is_empty() {
            return Err(IllegalMove::EmptyReveal.into());
        }
        if let Some(e) = (v - self.matroid.ground()).first() {
            return Err(IllegalMove::OutOfRange { element: e }.into());
        }
        if let Some(e) = v.iter().find(|&e| self.residual_l[e] == 0) {
            return Err(IllegalMove::ListFull { element: e }.into());
        }
        let step = inductive_step(&self.matroid, &self.cover, &self.residual_w, v)?;
        let mut next = self.clone();
        next.cover = step.cover;
        next.residual_w.decrement(step.colored);
        next.residual_l.decrement(v);
        for e in step.colored {
            next.assigned[e].insert(self.round);
        }
        next.round += 1;
        next.check_invariants().map_err(Error::InternalInfeasible)?;
        Ok((step.colored, next))
    }
}

/// Lists of explicit colors; JSON `{"lists":[[1,2],[2,3]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorLists {
    pub lists: Vec<BTreeSet<u32>>,
}

/// Colors chosen per element; JSON `{"W":[[1],[2]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorSets {
    #[serde(rename = "W")]
    pub colors: Vec<BTreeSet<u32>>,
}

/// Picks `w(e)` colors from each list so that every color class is
/// independent, by playing the on-line strategy against a Bob that reveals
/// the colors of the lists in ascending order.
pub fn offline_list_color(m: &Matroid, w: &Weighting, lists: &ColorLists) -> Result<ColorSets> {
    if lists.lists.len() != m.n() {
        return Err(Error::PreconditionViolated(format!(
            "{} lists for {} elements",
            lists.lists.len(),
            m.n()
        )));
    }
    let sizes = ListSizes::new(lists.lists.iter().map(|l| l.len() as u32).collect());
    let mut alice = AliceState::init(m, w, &sizes)?;

    let mut reveals: BTreeMap<u32, ElementSet> = BTreeMap::new();
    for (e, list) in lists.lists.iter().enumerate() {
        for &c in list {
            reveals.entry(c).or_default().insert(e);
        }
    }
    let mut colors = vec![BTreeSet::new(); m.n()];
    for (&c, &reveal) in &reveals {
        let (colored, next) = alice.respond(reveal)?;
        for e in colored {
            colors[e].insert(c);
        }
        alice = next;
    }
    let result = ColorSets { colors };
    check_list_coloring(m, w, lists, &result).map_err(Error::InternalInfeasible)?;
    Ok(result)
}

/// Referee for list colorings: `W(e) ⊆ L(e)`, `|W(e)| = w(e)`, and every
/// color class independent.
pub fn check_list_coloring(
    m: &impl IndependenceOracle,
    w: &Weighting,
    lists: &ColorLists,
    result: &ColorSets,
) -> Result<(), String> {
    let n = m.ground_size();
    if result.colors.len() != n || lists.lists.len() != n {
        return Err("coloring does not match the ground set".into());
    }
    let mut classes: BTreeMap<u32, ElementSet> = BTreeMap::new();
    for (e, chosen) in result.colors.iter().enumerate() {
        if !chosen.is_subset(&lists.lists[e]) {
            return Err(format!("element {e} uses a color outside its list"));
        }
        if chosen.len() as u32 != w[e] {
            return Err(format!("element {e} has {} colors, wants {}", chosen.len(), w[e]));
        }
        for &c in chosen {
            classes.entry(c).or_default().insert(e);
        }
    }
    for (c, class) in classes {
        if !m.is_independent(class) {
            return Err(format!("color {c} class {class} is dependent"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::MatroidSpec;

    fn uniform(n: usize, r: usize) -> Matroid {
        Matroid::load(MatroidSpec::Uniform { n, r }).unwrap()
    }

    #[test]
    fn parallel_pair_step_trace() {
        let m = uniform(2, 1);
        let cover = Cover::new(vec![[0].into(), [1].into()]);
        let w = Weighting::constant(2, 1);
        let step = inductive_step(&m, &cover, &w, [0, 1].into()).unwrap();
        assert_eq!(step.colored, ElementSet::from([0]));
        assert_eq!(step.cover.parts, vec![ElementSet::from([1]), ElementSet::EMPTY]);
    }

    #[test]
    fn empty_reveal_keeps_the_cover() {
        let m = uniform(4, 2);
        let cover = Cover::new(vec![[0, 1].into(), [2, 3].into()]);
        let w = Weighting::constant(4, 1);
        let step = inductive_step(&m, &cover, &w, ElementSet::EMPTY).unwrap();
        assert_eq!(step.colored, ElementSet::EMPTY);
        assert_eq!(step.cover, cover);
    }

    #[test]
    fn single_part_colors_the_overlap() {
        let m = uniform(4, 4);
        let cover = Cover::new(vec![[0, 1, 2].into()]);
        let w = Weighting::new(vec![1, 1, 1, 0]);
        let step = inductive_step(&m, &cover, &w, [1, 2, 3].into()).unwrap();
        assert_eq!(step.colored, ElementSet::from([1, 2]));
        assert_eq!(step.cover.parts, vec![ElementSet::from([0])]);
    }

    #[test]
    fn step_rejects_a_non_cover() {
        let m = uniform(2, 1);
        let cover = Cover::new(vec![[0, 1].into()]);
        let err = inductive_step(&m, &cover, &Weighting::constant(2, 1), [0].into()).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated(_)));
    }

    #[test]
    fn check_step_catches_broken_updates() {
        let m = uniform(2, 1);
        let before = Cover::new(vec![[0].into(), [1].into()]);
        let w = Weighting::constant(2, 1);
        // Keeping 0 in part 1 although it was revealed violates the shift.
        let bad = StepResult {
            colored: [1].into(),
            cover: Cover::new(vec![[0].into(), ElementSet::EMPTY]),
        };
        assert!(check_step(&m, &before, &w, [0, 1].into(), &bad)
            .unwrap_err()
            .contains("condition (2)"));
        let wrong_weight = StepResult {
            colored: ElementSet::EMPTY,
            cover: Cover::new(vec![[1].into(), ElementSet::EMPTY]),
        };
        assert!(check_step(&m, &before, &w, [0, 1].into(), &wrong_weight)
            .unwrap_err()
            .contains("condition (1)"));
    }

    #[test]
    fn two_round_game_on_a_parallel_pair() {
        let m = uniform(2, 1);
        let alice = AliceState::init(&m, &Weighting::constant(2, 1), &ListSizes::constant(2, 2)).unwrap();
        assert_eq!(alice.cover().parts.len(), 2);
        let (first, alice) = alice.respond([0, 1].into()).unwrap();
        assert_eq!(first, ElementSet::from([0]));
        let (second, alice) = alice.respond([1].into()).unwrap();
        assert_eq!(second, ElementSet::from([1]));
        assert!(alice.is_done());
        assert_eq!(alice.assigned()[0], BTreeSet::from([1]));
        assert_eq!(alice.assigned()[1], BTreeSet::from([2]));
    }

    #[test]
    fn fully_weighted_elements_are_never_colored_again() {
        let m = uniform(3, 3);
        let alice = AliceState::init(&m, &Weighting::new(vec![1, 0, 1]), &ListSizes::constant(3, 2)).unwrap();
        let (colored, alice) = alice.respond([1].into()).unwrap();
        assert_eq!(colored, ElementSet::EMPTY);
        let (colored, alice) = alice.respond([0, 1, 2].into()).unwrap();
        assert_eq!(colored, ElementSet::from([0, 2]));
        assert!(alice.is_done());
        let (colored, _) = alice.respond([0].into()).unwrap();
        assert_eq!(colored, ElementSet::EMPTY);
    }

    #[test]
    fn init_reports_infeasibility() {
        let err = AliceState::init(
            &uniform(3, 1),
            &Weighting::constant(3, 1),
            &ListSizes::constant(3, 2),
        )
        .unwrap_err();
        let Error::NotColorable { witness } = err else {
            panic!()
        };
        assert_eq!(witness.set, ElementSet::full(3));
    }

    #[test]
    fn respond_rejects_illegal_reveals() {
        let m = uniform(2, 1);
        let alice = AliceState::init(&m, &Weighting::constant(2, 1), &ListSizes::new(vec![2, 1])).unwrap();
        assert_eq!(
            alice.respond(ElementSet::EMPTY).unwrap_err(),
            Error::IllegalMove(IllegalMove::EmptyReveal)
        );
        let (_, alice) = alice.respond([1].into()).unwrap();
        assert_eq!(
            alice.respond([1].into()).unwrap_err(),
            Error::IllegalMove(IllegalMove::ListFull { element: 1 })
        );
        assert!(matches!(
            alice.respond([5].into()).unwrap_err(),
            Error::IllegalMove(IllegalMove::OutOfRange { element: 5 })
        ));
    }

    #[test]
    fn offline_coloring_from_shifted_lists() {
        let m = uniform(2, 1);
        let lists = ColorLists {
            lists: vec![BTreeSet::from([1, 2]), BTreeSet::from([2, 3])],
        };
        let result = offline_list_color(&m, &Weighting::constant(2, 1), &lists).unwrap();
        check_list_coloring(&m, &Weighting::constant(2, 1), &lists, &result).unwrap();
        assert_eq!(serde_json::to_string(&result).unwrap(), r#"{"W":[[1],[2]]}"#);
    }

    #[test]
    fn offline_coloring_rejects_short_lists() {
        let m = uniform(3, 1);
        let lists = ColorLists {
            lists: vec![BTreeSet::from([1, 2]); 3],
        };
        assert!(matches!(
            offline_list_color(&m, &Weighting::constant(3, 1), &lists),
            Err(Error::NotColorable { .. })
        ));
    }
}
