//! Matroids on the ground set `{0..n-1}` behind a uniform independence
//! oracle, together with the minors (restriction, contraction) and the
//! parallel-copy construction used by the covering machinery.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};

/// Largest ground set stored as an explicit family of independent sets.
pub const MAX_EXPLICIT: usize = 20;

/// Explicit families up to this size are also checked for the exchange
/// axiom at load time.
const EXPLICIT_EXCHANGE_CHECK: usize = 10;

/// Anything that can answer "is this subset of `{0..n-1}` independent?".
///
/// Callers pass subsets of the ground set; elements outside `0..ground_size()`
/// are a caller bug.
pub trait IndependenceOracle {
    fn ground_size(&self) -> usize;

    fn is_independent(&self, set: ElementSet) -> bool;

    /// Size of a largest independent subset, by greedy augmentation.
    fn rank(&self, set: ElementSet) -> usize {
        let mut basis = ElementSet::EMPTY;
        for e in set {
            if self.is_independent(basis.with(e)) {
                basis.insert(e);
            }
        }
        basis.len()
    }

    /// Lexicographically first maximal independent subset of `set`.
    fn greedy_basis(&self, set: ElementSet) -> ElementSet {
        let mut basis = ElementSet::EMPTY;
        for e in set {
            if self.is_independent(basis.with(e)) {
                basis.insert(e);
            }
        }
        basis
    }
}

impl<O: IndependenceOracle + ?Sized> IndependenceOracle for &O {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn is_independent(&self, set: ElementSet) -> bool {
        (**self).is_independent(set)
    }
    fn rank(&self, set: ElementSet) -> usize {
        (**self).rank(set)
    }
}

/// An oracle viewed on the same ground set with every element outside
/// `allowed` turned into a loop. This is restriction without relabeling.
#[derive(Clone, Copy)]
pub struct Masked<O> {
    inner: O,
    allowed: ElementSet,
}

impl<O: IndependenceOracle> Masked<O> {
    pub fn new(inner: O, allowed: ElementSet) -> Self {
        Masked { inner, allowed }
    }
}

impl<O: IndependenceOracle> IndependenceOracle for Masked<O> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }
    fn is_independent(&self, set: ElementSet) -> bool {
        set.is_subset(self.allowed) && self.inner.is_independent(set)
    }
    fn rank(&self, set: ElementSet) -> usize {
        self.inner.rank(set & self.allowed)
    }
}

/// Declarative matroid description; the JSON form selects the variant with
/// a `"type"` field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum MatroidSpec {
    Uniform {
        n: usize,
        r: usize,
    },
    Partition {
        blocks: Vec<Vec<usize>>,
        capacities: Vec<usize>,
    },
    /// Edge `i` is element `i`.
    Graphic {
        vertices: usize,
        edges: Vec<[usize; 2]>,
    },
    Linear {
        prime: u64,
        columns: Vec<Vec<u64>>,
    },
    Explicit {
        n: usize,
        independent: Vec<Vec<usize>>,
    },
}

/// Immutable, cheaply clonable matroid.
#[derive(Clone)]
pub struct Matroid {
    n: usize,
    repr: Arc<Repr>,
    spec: Option<Arc<MatroidSpec>>,
}

enum Repr {
    Uniform {
        rank: usize,
    },
    Partition {
        blocks: Vec<ElementSet>,
        capacities: Vec<usize>,
    },
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Linear {
        prime: u64,
        columns: Vec<Vec<u64>>,
    },
    Explicit {
        /// Bit `s` is set iff the set with mask `s` is independent.
        table: Vec<u64>,
    },
    /// Element `i` stands for `map[i]` in `base`; `T` is independent iff no
    /// two of its elements share an image and `map(T) ∪ contracted` is
    /// independent in `base`.
    Minor {
        base: Matroid,
        map: Vec<usize>,
        contracted: ElementSet,
    },
}

/// Relabeling produced by [`Matroid::restrict`], [`Matroid::contract`] and
/// [`Matroid::clone_elements`]: child element `i` corresponds to parent
/// element `to_parent[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementMap {
    to_parent: Vec<usize>,
    parent_size: usize,
}

impl ElementMap {
    pub fn len(&self) -> usize {
        self.to_parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_parent.is_empty()
    }

    pub fn parent_size(&self) -> usize {
        self.parent_size
    }

    pub fn parent_of(&self, child: usize) -> usize {
        self.to_parent[child]
    }

    /// Image of a child set in the parent ground set.
    pub fn lift(&self, set: ElementSet) -> ElementSet {
        set.iter().map(|e| self.to_parent[e]).collect()
    }

    /// All child elements whose parent lies in `set`.
    pub fn children(&self, set: ElementSet) -> ElementSet {
        self.to_parent
            .iter()
            .enumerate()
            .filter(|&(_, &p)| set.contains(p))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn children_of(&self, parent: usize) -> ElementSet {
        self.children(ElementSet::singleton(parent))
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_ELEMENTS {
        return Err(Error::TooLarge(format!(
            "ground set of {n} elements exceeds {MAX_ELEMENTS}"
        )));
    }
    Ok(())
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Matroid {
    /// Validates `spec` and builds the oracle. Loops are rejected here, once.
    pub fn load(spec: MatroidSpec) -> Result<Matroid> {
        let (n, repr) = match &spec {
            MatroidSpec::Uniform { n, r } => {
                check_ground(*n)?;
                if r > n {
                    return Err(Error::SpecInvalid(format!("uniform rank {r} exceeds n = {n}")));
                }
                if *r == 0 && *n > 0 {
                    return Err(Error::LoopDetected { element: 0 });
                }
                (*n, Repr::Uniform { rank: *r })
            }
            MatroidSpec::Partition { blocks, capacities } => {
                if blocks.len() != capacities.len() {
                    return Err(Error::SpecInvalid(format!(
                        "{} blocks but {} capacities",
                        blocks.len(),
                        capacities.len()
                    )));
                }
                let n: usize = blocks.iter().map(Vec::len).sum();
                check_ground(n)?;
                let mut seen = ElementSet::EMPTY;
                let mut masks = Vec::with_capacity(blocks.len());
                for block in blocks {
                    let mut mask = ElementSet::EMPTY;
                    for &e in block {
                        if e >= n {
                            return Err(Error::OutOfRange { element: e, n });
                        }
                        if seen.contains(e) {
                            return Err(Error::SpecInvalid(format!(
                                "element {e} appears in more than one block"
                            )));
                        }
                        seen.insert(e);
                        mask.insert(e);
                    }
                    masks.push(mask);
                }
                for (mask, &cap) in masks.iter().zip(capacities) {
                    if cap == 0 {
                        if let Some(e) = mask.first() {
                            return Err(Error::LoopDetected { element: e });
                        }
                    }
                }
                (
                    n,
                    Repr::Partition {
                        blocks: masks,
                        capacities: capacities.clone(),
                    },
                )
            }
            MatroidSpec::Graphic { vertices, edges } => {
                check_ground(edges.len())?;
                for (i, &[u, v]) in edges.iter().enumerate() {
                    if u >= *vertices || v >= *vertices {
                        return Err(Error::SpecInvalid(format!(
                            "edge {i} = ({u},{v}) has an endpoint outside 0..{vertices}"
                        )));
                    }
                    if u == v {
                        return Err(Error::LoopDetected { element: i });
                    }
                }
                (
                    edges.len(),
                    Repr::Graphic {
                        vertices: *vertices,
                        edges: edges.iter().map(|&[u, v]| (u, v)).collect(),
                    },
                )
            }
            MatroidSpec::Linear { prime, columns } => {
                check_ground(columns.len())?;
                if *prime >= 1 << 31 || !is_prime(*prime) {
                    return Err(Error::SpecInvalid(format!("{prime} is not a prime below 2^31")));
                }
                let dim = columns.first().map_or(0, Vec::len);
                for (i, col) in columns.iter().enumerate() {
                    if col.len() != dim {
                        return Err(Error::SpecInvalid(format!(
                            "column {i} has dimension {} instead of {dim}",
                            col.len()
                        )));
                    }
                    if let Some(x) = col.iter().find(|&&x| x >= *prime) {
                        return Err(Error::SpecInvalid(format!(
                            "column {i} has entry {x} outside GF({prime})"
                        )));
                    }
                    if col.iter().all(|&x| x == 0) {
                        return Err(Error::LoopDetected { element: i });
                    }
                }
                (
                    columns.len(),
                    Repr::Linear {
                        prime: *prime,
                        columns: columns.clone(),
                    },
                )
            }
            MatroidSpec::Explicit { n, independent } => {
                if *n > MAX_EXPLICIT {
                    return Err(Error::TooLarge(format!(
                        "explicit matroids are limited to {MAX_EXPLICIT} elements, got {n}"
                    )));
                }
                let table = explicit_table(*n, independent)?;
                (*n, Repr::Explicit { table })
            }
        };
        Ok(Matroid {
            n,
            repr: Arc::new(repr),
            spec: Some(Arc::new(spec)),
        })
    }

    pub fn from_json(json: &str) -> Result<Matroid> {
        let spec: MatroidSpec = serde_json::from_str(json).map_err(|e| Error::SpecInvalid(e.to_string()))?;
        Matroid::load(spec)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// The spec this matroid was loaded from; `None` for minors and copies.
    pub fn spec(&self) -> Option<&MatroidSpec> {
        self.spec.as_deref()
    }

    /// The loaded spec, or an explicit family when this is a derived matroid.
    pub fn to_spec(&self) -> Result<MatroidSpec> {
        if let Some(spec) = self.spec() {
            return Ok(spec.clone());
        }
        let independent = self
            .independent_sets()?
            .into_iter()
            .map(ElementSet::to_vec)
            .collect();
        Ok(MatroidSpec::Explicit {
            n: self.n,
            independent,
        })
    }

    /// Returns `set` if it lies inside the ground set.
    pub fn check_subset(&self, set: ElementSet) -> Result<ElementSet> {
        match (set - self.ground()).first() {
            Some(e) => Err(Error::OutOfRange {
                element: e,
                n: self.n,
            }),
            None => Ok(set),
        }
    }

    pub fn checked_independent(&self, set: ElementSet) -> Result<bool> {
        Ok(self.is_independent(self.check_subset(set)?))
    }

    pub fn checked_rank(&self, set: ElementSet) -> Result<usize> {
        Ok(self.rank(self.check_subset(set)?))
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground())
    }

    pub fn is_basis(&self, set: ElementSet) -> bool {
        set.is_subset(self.ground()) && self.is_independent(set) && set.len() == self.full_rank()
    }

    /// Every independent set, in increasing mask order.
    pub fn independent_sets(&self) -> Result<Vec<ElementSet>> {
        if self.n > MAX_EXPLICIT {
            return Err(Error::TooLarge(format!(
                "enumerating independent sets of {} elements",
                self.n
            )));
        }
        Ok(self
            .ground()
            .subsets()
            .filter(|&s| self.is_independent(s))
            .collect())
    }

    /// Matroid on `set`, relabeled densely in ascending order.
    pub fn restrict(&self, set: ElementSet) -> Result<(Matroid, ElementMap)> {
        self.check_subset(set)?;
        Ok(self.minor(set.to_vec(), ElementSet::EMPTY))
    }

    /// Contraction by an independent set `c`, on `E ∖ c` relabeled densely.
    pub fn contract(&self, c: ElementSet) -> Result<(Matroid, ElementMap)> {
        self.check_subset(c)?;
        if !self.is_independent(c) {
            return Err(Error::DependentContraction);
        }
        Ok(self.minor((self.ground() - c).to_vec(), c))
    }

    /// `mult[e]` parallel copies of each element `e`; copies of one element
    /// are consecutive and ordered by original id.
    pub fn clone_elements(&self, mult: &[u32]) -> Result<(Matroid, ElementMap)> {
        if mult.len() != self.n {
            return Err(Error::SpecInvalid(format!(
                "multiplicity vector has {} entries for {} elements",
                mult.len(),
                self.n
            )));
        }
        let total: u64 = mult.iter().map(|&m| u64::from(m)).sum();
        if total > MAX_ELEMENTS as u64 {
            return Err(Error::TooLarge(format!(
                "{total} copies exceed {MAX_ELEMENTS} elements"
            )));
        }
        let map = mult
            .iter()
            .enumerate()
            .flat_map(|(e, &m)| std::iter::repeat_n(e, m as usize))
            .collect();
        Ok(self.minor(map, ElementSet::EMPTY))
    }

    fn minor(&self, map: Vec<usize>, contracted: ElementSet) -> (Matroid, ElementMap) {
        let element_map = ElementMap {
            to_parent: map.clone(),
            parent_size: self.n,
        };
        let repr = match &*self.repr {
            Repr::Minor {
                base,
                map: base_map,
                contracted: base_contracted,
            } => Repr::Minor {
                base: base.clone(),
                map: map.iter().map(|&e| base_map[e]).collect(),
                contracted: *base_contracted | contracted.iter().map(|e| base_map[e]).collect(),
            },
            _ => Repr::Minor {
                base: self.clone(),
                map,
                contracted,
            },
        };
        let m = Matroid {
            n: element_map.len(),
            repr: Arc::new(repr),
            spec: None,
        };
        (m, element_map)
    }
}

fn explicit_table(n: usize, independent: &[Vec<usize>]) -> Result<Vec<u64>> {
    let size = 1usize << n;
    let mut table = vec![0u64; size.div_ceil(64)];
    let get = |t: &[u64], s: usize| t[s / 64] >> (s % 64) & 1 == 1;
    for set in independent {
        let mut mask = 0usize;
        for &e in set {
            if e >= n {
                return Err(Error::OutOfRange { element: e, n });
            }
            mask |= 1 << e;
        }
        table[mask / 64] |= 1 << (mask % 64);
    }
    if !get(&table, 0) {
        return Err(Error::NotDownwardClosed("the empty set is missing".into()));
    }
    for s in 1..size {
        if !get(&table, s) {
            continue;
        }
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            if !get(&table, s ^ bit) {
                return Err(Error::NotDownwardClosed(format!(
                    "{} is listed but {} is not",
                    ElementSet::from_bits(s as u64),
                    ElementSet::from_bits((s ^ bit) as u64)
                )));
            }
        }
    }
    for e in 0..n {
        if !get(&table, 1 << e) {
            return Err(Error::LoopDetected { element: e });
        }
    }
    if n <= EXPLICIT_EXCHANGE_CHECK {
        let members: Vec<usize> = (0..size).filter(|&s| get(&table, s)).collect();
        for &s in &members {
            for &t in &members {
                if (s.count_ones() as usize) < t.count_ones() as usize {
                    let mut cand = t & !s;
                    let mut ok = false;
                    while cand != 0 {
                        let bit = cand & cand.wrapping_neg();
                        cand ^= bit;
                        if get(&table, s | bit) {
                            ok = true;
                            break;
                        }
                    }
                    if !ok {
                        return Err(Error::SpecInvalid(format!(
                            "family violates the exchange axiom at {} and {}",
                            ElementSet::from_bits(s as u64),
                            ElementSet::from_bits(t as u64)
                        )));
                    }
                }
            }
        }
    }
    Ok(table)
}

fn forest(vertices: usize, edges: &[(usize, usize)], set: ElementSet) -> bool {
    if set.len() >= vertices.max(1) {
        return false;
    }
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in set {
        let (u, v) = edges[e];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

/// Fraction-free elimination over GF(p): each incoming column is reduced
/// against the pivots found so far by cross-multiplication.
fn linearly_independent(prime: u64, columns: &[Vec<u64>], set: ElementSet) -> bool {
    let dim = columns.first().map_or(0, Vec::len);
    if set.len() > dim {
        return false;
    }
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::with_capacity(set.len());
    for e in set {
        let mut v = columns[e].clone();
        for (pivot, b) in &basis {
            let factor = v[*pivot];
            if factor == 0 {
                continue;
            }
            let scale = b[*pivot];
            for (x, &y) in v.iter_mut().zip(b) {
                *x = (*x * scale % prime + prime - factor * y % prime) % prime;
            }
        }
        match v.iter().position(|&x| x != 0) {
            Some(pivot) => basis.push((pivot, v)),
            None => return false,
        }
    }
    true
}

impl IndependenceOracle for Matroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: ElementSet) -> bool {
        debug_assert!(set.is_subset(self.ground()), "{set} outside ground of {}", self.n);
        match &*self.repr {
            Repr::Uniform { rank } => set.len() <= *rank,
            Repr::Partition { blocks, capacities } => blocks
                .iter()
                .zip(capacities)
                .all(|(&b, &cap)| (set & b).len() <= cap),
            Repr::Graphic { vertices, edges } => forest(*vertices, edges, set),
            Repr::Linear { prime, columns } => linearly_independent(*prime, columns, set),
            Repr::Explicit { table } => {
                let s = set.bits() as usize;
                table[s / 64] >> (s % 64) & 1 == 1
            }
            Repr::Minor {
                base,
                map,
                contracted,
            } => {
                let mut image = ElementSet::EMPTY;
                for e in set {
                    let p = map[e];
                    if image.contains(p) {
                        return false;
                    }
                    image.insert(p);
                }
                base.is_independent(image | *contracted)
            }
        }
    }

    fn rank(&self, set: ElementSet) -> usize {
        match &*self.repr {
            Repr::Uniform { rank } => set.len().min(*rank),
            Repr::Partition { blocks, capacities } => blocks
                .iter()
                .zip(capacities)
                .map(|(&b, &cap)| (set & b).len().min(cap))
                .sum(),
            _ => self.greedy_basis(set).len(),
        }
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &*self.repr {
            Repr::Uniform { rank } => format!("uniform(r={rank})"),
            Repr::Partition { blocks, .. } => format!("partition({} blocks)", blocks.len()),
            Repr::Graphic { vertices, .. } => format!("graphic({vertices} vertices)"),
            Repr::Linear { prime, .. } => format!("linear(GF({prime}))"),
            Repr::Explicit { .. } => "explicit".to_string(),
            Repr::Minor { base, .. } => format!("minor of {base:?}"),
        };
        write!(f, "Matroid {{ n: {}, {kind} }}", self.n)
    }
}
