//! Symmetric exchange of subsets between two independent sets.

use serde::{Deserialize, Serialize};

use crate::cover::{cover_target, Coverage};
use crate::error::{Error, Result};
use crate::matroid::{IndependenceOracle, Masked, Matroid};
use crate::set::ElementSet;

/// `I1`, `I2` independent and `X ⊆ I1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeRequest {
    #[serde(rename = "I1")]
    pub first: ElementSet,
    #[serde(rename = "I2")]
    pub second: ElementSet,
    #[serde(rename = "X")]
    pub moved: ElementSet,
}

impl ExchangeRequest {
    pub fn new(first: ElementSet, second: ElementSet, moved: ElementSet) -> Self {
        ExchangeRequest { first, second, moved }
    }

    fn validate(&self, m: &Matroid) -> Result<()> {
        m.check_subset(self.first | self.second)?;
        if !m.is_independent(self.first) {
            return Err(Error::PreconditionViolated(format!(
                "I1 = {} is dependent",
                self.first
            )));
        }
        if !m.is_independent(self.second) {
            return Err(Error::PreconditionViolated(format!(
                "I2 = {} is dependent",
                self.second
            )));
        }
        if !self.moved.is_subset(self.first) {
            return Err(Error::PreconditionViolated(format!(
                "X = {} is not contained in I1 = {}",
                self.moved, self.first
            )));
        }
        Ok(())
    }

    /// The two sets produced by exchanging `X` for `y`:
    /// `(I1 ∖ X) ∪ Y` and `(I2 ∖ Y) ∪ X`.
    pub fn swapped(&self, y: ElementSet) -> (ElementSet, ElementSet) {
        ((self.first - self.moved) | y, (self.second - y) | self.moved)
    }

    pub fn accepts(&self, m: &impl IndependenceOracle, y: ElementSet) -> bool {
        let (a, b) = self.swapped(y);
        y.is_subset(self.second) && m.is_independent(a) && m.is_independent(b)
    }
}

/// Finds `Y ⊆ I2` such that `(I1 ∖ X) ∪ Y` and `(I2 ∖ Y) ∪ X` are both
/// independent.
///
/// The common part `I = I1 ∩ I2` is contracted first and `X ∩ I` stays put
/// (it is returned inside `Y`, so it ends up on both sides). On the
/// contracted matroid the disjoint sets `J1 = I1 ∖ I`, `J2 = I2 ∖ I` are
/// covered by one set independent on `X' ∪ J2` and one independent on
/// `(J1 ∖ X') ∪ J2`; the second one's share of `J2` is `Y`.
pub fn exchange_subsets(m: &Matroid, req: &ExchangeRequest) -> Result<ElementSet> {
    req.validate(m)?;
    let common = req.first & req.second;
    let stay = req.moved & common;

    let (contracted, map) = m.contract(common)?;
    let j1 = map.children(req.first - common);
    let j2 = map.children(req.second - common);
    let x = map.children(req.moved - common);

    let sides = [
        Masked::new(&contracted, x | j2),
        Masked::new(&contracted, (j1 - x) | j2),
    ];
    let y = match cover_target(&sides, j1 | j2)? {
        Coverage::Covered(cover) => map.lift(cover.parts[1] & j2) | stay,
        Coverage::Deficient(w) => {
            return Err(Error::InternalInfeasible(format!(
                "no exchange cover for {req:?}: {w}"
            )))
        }
    };
    if !req.accepts(m, y) {
        return Err(Error::InternalInfeasible(format!(
            "exchange {y} for {req:?} fails the independence checks"
        )));
    }
    Ok(y)
}

/// Multiple basis exchange: `Y ⊆ B2` with both swapped sets bases.
pub fn multiple_basis_exchange(
    m: &Matroid,
    b1: ElementSet,
    b2: ElementSet,
    x: ElementSet,
) -> Result<ElementSet> {
    m.check_subset(b1 | b2)?;
    for (name, b) in [("B1", b1), ("B2", b2)] {
        if !m.is_basis(b) {
            return Err(Error::NotABasis(format!("{name} = {b}")));
        }
    }
    let req = ExchangeRequest::new(b1, b2, x);
    let y = exchange_subsets(m, &req)?;
    let (a, b) = req.swapped(y);
    if y.len() != x.len() || !m.is_basis(a) || !m.is_basis(b) {
        return Err(Error::InternalInfeasible(format!(
            "basis exchange of {x} gave {y}: {a} / {b}"
        )));
    }
    Ok(y)
}

/// Largest `I2` the exhaustive enumeration accepts.
pub const BRUTE_FORCE_EXCHANGE_MAX: usize = 16;

/// Every valid `Y`, in increasing mask order. Test oracle for
/// [`exchange_subsets`].
pub fn brute_force_exchange(m: &Matroid, req: &ExchangeRequest) -> Result<Vec<ElementSet>> {
    req.validate(m)?;
    if req.second.len() > BRUTE_FORCE_EXCHANGE_MAX {
        return Err(Error::TooLarge(format!(
            "|I2| = {} exceeds {BRUTE_FORCE_EXCHANGE_MAX}",
            req.second.len()
        )));
    }
    Ok(req.second.subsets().filter(|&y| req.accepts(m, y)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::MatroidSpec;

    fn uniform(n: usize, r: usize) -> Matroid {
        Matroid::load(MatroidSpec::Uniform { n, r }).unwrap()
    }

    fn k3() -> Matroid {
        Matroid::load(MatroidSpec::Graphic {
            vertices: 3,
            edges: vec![[0, 1], [0, 2], [1, 2]],
        })
        .unwrap()
    }

    #[test]
    fn uniform_single_swap() {
        let m = uniform(4, 2);
        let req = ExchangeRequest::new([0, 1].into(), [2, 3].into(), [0].into());
        let y = exchange_subsets(&m, &req).unwrap();
        assert_eq!(y.len(), 1);
        assert!(req.accepts(&m, y));
        assert_eq!(
            brute_force_exchange(&m, &req).unwrap(),
            vec![ElementSet::from([2]), ElementSet::from([3])]
        );
    }

    #[test]
    fn empty_x_needs_no_exchange() {
        let m = uniform(4, 2);
        let req = ExchangeRequest::new([0, 1].into(), [2, 3].into(), ElementSet::EMPTY);
        assert_eq!(exchange_subsets(&m, &req).unwrap(), ElementSet::EMPTY);
        assert!(brute_force_exchange(&m, &req)
            .unwrap()
            .contains(&ElementSet::EMPTY));
    }

    #[test]
    fn full_swap_of_bases() {
        let m = k3();
        let req = ExchangeRequest::new([0, 1].into(), [2, 0].into(), [0, 1].into());
        let y = exchange_subsets(&m, &req).unwrap();
        assert!(req.accepts(&m, y));
    }

    #[test]
    fn parallel_pair_forces_the_swap() {
        let m = uniform(2, 1);
        let req = ExchangeRequest::new([0].into(), [1].into(), [0].into());
        assert_eq!(
            brute_force_exchange(&m, &req).unwrap(),
            vec![ElementSet::from([1])]
        );
        assert_eq!(exchange_subsets(&m, &req).unwrap(), ElementSet::from([1]));
    }

    #[test]
    fn basis_exchange_on_a_triangle() {
        let m = k3();
        // B1 = {01, 02}, B2 = {01, 12}, X = {02}
        let y = multiple_basis_exchange(&m, [0, 1].into(), [0, 2].into(), [1].into()).unwrap();
        assert_eq!(y, ElementSet::from([2]));
        assert_eq!(
            multiple_basis_exchange(&m, [0, 1].into(), [0, 2].into(), ElementSet::EMPTY).unwrap(),
            ElementSet::EMPTY
        );
    }

    #[test]
    fn identical_bases_return_x() {
        let m = uniform(4, 2);
        let y = multiple_basis_exchange(&m, [0, 1].into(), [0, 1].into(), [0].into()).unwrap();
        assert_eq!(y, ElementSet::from([0]));
    }

    #[test]
    fn preconditions() {
        let m = uniform(4, 2);
        let dependent = ExchangeRequest::new([0, 1, 2].into(), [3].into(), [0].into());
        assert!(matches!(
            exchange_subsets(&m, &dependent),
            Err(Error::PreconditionViolated(_))
        ));
        let stray = ExchangeRequest::new([0, 1].into(), [2, 3].into(), [2].into());
        assert!(matches!(
            exchange_subsets(&m, &stray),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            multiple_basis_exchange(&m, [0].into(), [2, 3].into(), ElementSet::EMPTY),
            Err(Error::NotABasis(_))
        ));
        let out = ExchangeRequest::new([0, 7].into(), [2].into(), ElementSet::EMPTY);
        assert!(matches!(
            exchange_subsets(&m, &out),
            Err(Error::OutOfRange { .. })
        ));
    }
}
