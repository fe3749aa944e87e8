//! Matroid union: covering a ground set by sets that are independent in
//! given oracles, or certifying that no such cover exists.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{IndependenceOracle, Masked, Matroid};
use crate::set::ElementSet;

/// Ordered parts `I_1..I_k`; the position of a part is its color.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cover {
    pub parts: Vec<ElementSet>,
}

impl Cover {
    pub fn new(parts: Vec<ElementSet>) -> Self {
        Cover { parts }
    }

    pub fn empty(k: usize) -> Self {
        Cover {
            parts: vec![ElementSet::EMPTY; k],
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts containing `e`.
    pub fn multiplicity(&self, e: usize) -> u32 {
        self.parts.iter().filter(|p| p.contains(e)).count() as u32
    }

    pub fn support(&self) -> ElementSet {
        self.parts.iter().fold(ElementSet::EMPTY, |acc, &p| acc | p)
    }

    /// Checks that every part is independent and that `e` lies in exactly
    /// `w(e)` parts.
    pub fn check_w_cover(&self, m: &impl IndependenceOracle, w: &Weighting) -> Result<(), String> {
        let n = m.ground_size();
        if w.len() != n {
            return Err(format!("weighting has {} entries for {n} elements", w.len()));
        }
        for (i, &part) in self.parts.iter().enumerate() {
            if !part.is_subset(ElementSet::full(n)) {
                return Err(format!("part {} = {part} leaves the ground set", i + 1));
            }
            if !m.is_independent(part) {
                return Err(format!("part {} = {part} is dependent", i + 1));
            }
        }
        for e in 0..n {
            let mult = self.multiplicity(e);
            if mult != w[e] {
                return Err(format!("element {e} covered {mult} times, expected {}", w[e]));
            }
        }
        Ok(())
    }

    /// [`Cover::check_w_cover`] plus the canonical-list condition: part `i`
    /// (1-based) only holds elements with `l(e) >= i`.
    pub fn check_canonical(
        &self,
        m: &impl IndependenceOracle,
        w: &Weighting,
        l: &ListSizes,
    ) -> Result<(), String> {
        self.check_w_cover(m, w)?;
        for (i, &part) in self.parts.iter().enumerate() {
            if let Some(e) = part.iter().find(|&e| (l[e] as usize) < i + 1) {
                return Err(format!(
                    "element {e} sits in part {} beyond its list size {}",
                    i + 1,
                    l[e]
                ));
            }
        }
        Ok(())
    }
}

/// Per-element demand `w`; JSON `{"w":[...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weighting {
    w: Vec<u32>,
}

/// Per-element list size `l`; JSON `{"l":[...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ListSizes {
    l: Vec<u32>,
}

macro_rules! per_element {
    ($ty:ident, $field:ident) => {
        impl $ty {
            pub fn new(values: Vec<u32>) -> Self {
                $ty { $field: values }
            }

            pub fn constant(n: usize, value: u32) -> Self {
                $ty {
                    $field: vec![value; n],
                }
            }

            pub fn len(&self) -> usize {
                self.$field.len()
            }

            pub fn is_empty(&self) -> bool {
                self.$field.is_empty()
            }

            pub fn as_slice(&self) -> &[u32] {
                &self.$field
            }

            pub fn total(&self) -> u64 {
                self.$field.iter().map(|&x| u64::from(x)).sum()
            }

            pub fn max(&self) -> u32 {
                self.$field.iter().copied().max().unwrap_or(0)
            }

            pub fn sum_over(&self, set: ElementSet) -> u64 {
                set.iter().map(|e| u64::from(self.$field[e])).sum()
            }

            pub fn set(&mut self, e: usize, value: u32) {
                self.$field[e] = value;
            }

            /// Elements with a positive entry.
            pub fn support(&self) -> ElementSet {
                self.$field
                    .iter()
                    .enumerate()
                    .filter(|&(_, &x)| x > 0)
                    .map(|(e, _)| e)
                    .collect()
            }

            /// Subtracts one on every element of `set`.
            pub fn decrement(&mut self, set: ElementSet) {
                for e in set {
                    self.$field[e] -= 1;
                }
            }
        }

        impl Index<usize> for $ty {
            type Output = u32;
            fn index(&self, e: usize) -> &u32 {
                &self.$field[e]
            }
        }
    };
}

per_element!(Weighting, w);
per_element!(ListSizes, l);

/// A set `A` whose demand exceeds the total rank the parts can offer on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DeficiencyWitness {
    #[serde(rename = "A")]
    pub set: ElementSet,
    pub demand: u64,
    pub supply: u64,
}

impl fmt::Display for DeficiencyWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A = {} needs {} but the parts supply {}",
            self.set, self.demand, self.supply
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coverage {
    Covered(Cover),
    Deficient(DeficiencyWitness),
}

impl Coverage {
    pub fn cover(self) -> Option<Cover> {
        match self {
            Coverage::Covered(c) => Some(c),
            Coverage::Deficient(_) => None,
        }
    }

    pub fn is_covered(&self) -> bool {
        matches!(self, Coverage::Covered(_))
    }
}

/// Partitions `target` into sets independent in the respective oracles, or
/// returns the elements reachable from the first element that could not be
/// placed.
///
/// Elements are inserted in ascending order. Each insertion runs a
/// breadth-first search over the exchange digraph: `x -> y` when `y` sits in
/// part `i` and `part_i - y + x` is independent in oracle `i`; the search
/// stops at the first element some part can absorb outright. Shortest paths
/// keep every part independent after the swaps are applied.
fn partition<O: IndependenceOracle>(
    oracles: &[O],
    target: ElementSet,
) -> std::result::Result<Vec<ElementSet>, ElementSet> {
    let k = oracles.len();
    let mut parts = vec![ElementSet::EMPTY; k];
    let mut owner: [usize; 64] = [usize::MAX; 64];
    let mut parent: [(usize, usize); 64] = [(usize::MAX, usize::MAX); 64];

    for s in target {
        let mut visited = ElementSet::singleton(s);
        let mut queue = VecDeque::from([s]);
        let mut sink = None;
        'search: while let Some(x) = queue.pop_front() {
            for (i, oracle) in oracles.iter().enumerate() {
                if owner[x] != i && oracle.is_independent(parts[i].with(x)) {
                    sink = Some((x, i));
                    break 'search;
                }
            }
            for (i, oracle) in oracles.iter().enumerate() {
                if owner[x] == i {
                    continue;
                }
                for y in parts[i] - visited {
                    if oracle.is_independent(parts[i].without(y).with(x)) {
                        visited.insert(y);
                        parent[y] = (x, i);
                        queue.push_back(y);
                    }
                }
            }
        }
        let Some((mut y, absorb)) = sink else {
            return Err(visited);
        };
        parts[absorb].insert(y);
        let mut into = absorb;
        while y != s {
            let (x, i) = parent[y];
            parts[i].remove(y);
            owner[y] = into;
            parts[i].insert(x);
            into = i;
            y = x;
        }
        owner[s] = into;
    }
    Ok(parts)
}

/// Covers the shared ground set by parts `I_1..I_k`, part `i` independent
/// in `oracles[i]`, or returns a set `A` with `sum_i r_i(A) < |A|`.
///
/// Both outcomes are re-checked against the oracles before returning.
pub fn union_cover<O: IndependenceOracle>(oracles: &[O]) -> Result<Coverage> {
    let Some(first) = oracles.first() else {
        return Ok(Coverage::Covered(Cover::default()));
    };
    let n = first.ground_size();
    if oracles.iter().any(|o| o.ground_size() != n) {
        return Err(Error::MismatchedGroundSets);
    }
    cover_target(oracles, ElementSet::full(n))
}

/// [`union_cover`] restricted to the elements of `target`; everything else
/// is left uncovered.
pub fn cover_target<O: IndependenceOracle>(oracles: &[O], target: ElementSet) -> Result<Coverage> {
    match partition(oracles, target) {
        Ok(parts) => {
            for (i, (&part, oracle)) in parts.iter().zip(oracles).enumerate() {
                if !oracle.is_independent(part) {
                    return Err(Error::InternalInfeasible(format!(
                        "augmentation left part {} = {part} dependent",
                        i + 1
                    )));
                }
            }
            let covered = parts.iter().fold(ElementSet::EMPTY, |a, &p| a | p);
            if covered != target {
                return Err(Error::InternalInfeasible(format!(
                    "union covers {covered}, expected {target}"
                )));
            }
            Ok(Coverage::Covered(Cover::new(parts)))
        }
        Err(reachable) => {
            let supply: u64 = oracles.iter().map(|o| o.rank(reachable) as u64).sum();
            let demand = reachable.len() as u64;
            if supply >= demand {
                return Err(Error::InternalInfeasible(format!(
                    "search failed but {reachable} is not deficient ({supply} >= {demand})"
                )));
            }
            Ok(Coverage::Deficient(DeficiencyWitness {
                set: reachable,
                demand,
                supply,
            }))
        }
    }
}

/// Fewest colors in a proper coloring, with a cover attaining it.
pub fn chromatic_cover(m: &Matroid) -> Result<Cover> {
    if m.n() == 0 {
        return Ok(Cover::default());
    }
    let full_rank = m.full_rank();
    if full_rank == 0 {
        return Err(Error::PreconditionViolated("matroid has rank 0".into()));
    }
    let mut k = m.n().div_ceil(full_rank);
    loop {
        let copies = vec![m; k];
        if let Coverage::Covered(cover) = union_cover(&copies)? {
            return Ok(cover);
        }
        k += 1;
    }
}

pub fn chromatic_number(m: &Matroid) -> Result<usize> {
    Ok(chromatic_cover(m)?.len())
}

fn check_lengths(m: &Matroid, w: &Weighting, l: &ListSizes) -> Result<()> {
    if w.len() != m.n() || l.len() != m.n() {
        return Err(Error::PreconditionViolated(format!(
            "weights ({}) and list sizes ({}) must cover all {} elements",
            w.len(),
            l.len(),
            m.n()
        )));
    }
    Ok(())
}

/// Demand `w(A)` against the supply `sum_i r(A ∩ E_i)` offered by the
/// canonical lists, where `E_i = {e : l(e) >= i}`.
pub fn canonical_deficiency(m: &Matroid, w: &Weighting, l: &ListSizes, set: ElementSet) -> DeficiencyWitness {
    let supply = (1..=l.max())
        .map(|i| {
            let level: ElementSet = set.iter().filter(|&e| l[e] >= i).collect();
            m.rank(level) as u64
        })
        .sum();
    DeficiencyWitness {
        set,
        demand: w.sum_over(set),
        supply,
    }
}

/// Decides whether `m` is `w`-colorable from the lists `{1..l(e)}`.
///
/// Each element is cloned `w(e)` times and part `i` may only use copies of
/// elements with `l(e) >= i`; the union cover of those `max l` oracles is
/// pulled back to the original elements.
pub fn check_canonical_colorable(m: &Matroid, w: &Weighting, l: &ListSizes) -> Result<Coverage> {
    check_lengths(m, w, l)?;
    if let Some(e) = (0..m.n()).find(|&e| l[e] < w[e]) {
        let witness = canonical_deficiency(m, w, l, ElementSet::singleton(e));
        return Err(Error::InconsistentInput { element: e, witness });
    }
    let k = l.max() as usize;
    let (copies, map) = m.clone_elements(w.as_slice())?;
    let levels: Vec<_> = (1..=k)
        .map(|i| {
            let allowed = map.children((0..m.n()).filter(|&e| l[e] as usize >= i).collect());
            Masked::new(&copies, allowed)
        })
        .collect();
    match cover_target(&levels, copies.ground())? {
        Coverage::Covered(cover) => {
            let mut parts: Vec<ElementSet> = cover.parts.iter().map(|&p| map.lift(p)).collect();
            parts.resize(k, ElementSet::EMPTY);
            let cover = Cover::new(parts);
            cover
                .check_canonical(m, w, l)
                .map_err(Error::InternalInfeasible)?;
            Ok(Coverage::Covered(cover))
        }
        Coverage::Deficient(w_copies) => {
            let witness = canonical_deficiency(m, w, l, map.lift(w_copies.set));
            if witness.supply >= witness.demand {
                return Err(Error::InternalInfeasible(format!(
                    "pulled-back witness is not deficient: {witness}"
                )));
            }
            Ok(Coverage::Deficient(witness))
        }
    }
}

/// Limits for [`brute_force_cover`].
pub const BRUTE_FORCE_MAX_ELEMENTS: usize = 12;
pub const BRUTE_FORCE_MAX_LIST: u32 = 4;

/// Exhaustive backtracking over color-set assignments; the test oracle for
/// [`check_canonical_colorable`].
pub fn brute_force_cover(m: &Matroid, w: &Weighting, l: &ListSizes) -> Result<Option<Cover>> {
    check_lengths(m, w, l)?;
    if m.n() > BRUTE_FORCE_MAX_ELEMENTS || l.max() > BRUTE_FORCE_MAX_LIST {
        return Err(Error::TooLarge(format!(
            "brute force handles n <= {BRUTE_FORCE_MAX_ELEMENTS} and lists <= {BRUTE_FORCE_MAX_LIST}"
        )));
    }
    let k = l.max() as usize;
    let mut parts = vec![ElementSet::EMPTY; k];

    fn assign(m: &Matroid, w: &Weighting, l: &ListSizes, e: usize, parts: &mut Vec<ElementSet>) -> bool {
        if e == m.n() {
            return true;
        }
        let colors = ElementSet::full(l[e] as usize);
        for choice in colors.subsets() {
            if choice.len() != w[e] as usize {
                continue;
            }
            if choice.iter().all(|c| m.is_independent(parts[c].with(e))) {
                for c in choice {
                    parts[c].insert(e);
                }
                if assign(m, w, l, e + 1, parts) {
                    return true;
                }
                for c in choice {
                    parts[c].remove(e);
                }
            }
        }
        false
    }

    Ok(assign(m, w, l, 0, &mut parts).then(|| Cover::new(parts)))
}
