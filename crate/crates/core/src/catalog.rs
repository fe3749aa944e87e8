//! Small named matroids used by the tests, the verifier and the demos.

use crate::matroid::MatroidSpec;

pub fn uniform(n: usize, r: usize) -> MatroidSpec {
    MatroidSpec::Uniform { n, r }
}

/// Graphic matroid of `K_v`; edges in lexicographic order of endpoints.
pub fn complete_graph(v: usize) -> MatroidSpec {
    let mut edges = Vec::new();
    for a in 0..v {
        for b in a + 1..v {
            edges.push([a, b]);
        }
    }
    MatroidSpec::Graphic { vertices: v, edges }
}

/// Two blocks: at most one of `{0,1,2}` and at most two of `{3,4}`.
pub fn partition() -> MatroidSpec {
    MatroidSpec::Partition {
        blocks: vec![vec![0, 1, 2], vec![3, 4]],
        capacities: vec![1, 2],
    }
}

/// The Fano plane: all seven non-zero vectors of GF(2)^3.
pub fn fano() -> MatroidSpec {
    let columns = (1u64..8).map(|x| vec![x & 1, x >> 1 & 1, x >> 2 & 1]).collect();
    MatroidSpec::Linear { prime: 2, columns }
}

/// Four vectors of GF(2)^2 with one repeated, so `{0, 3}` is a parallel pair.
pub fn gf2_small() -> MatroidSpec {
    MatroidSpec::Linear {
        prime: 2,
        columns: vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 0]],
    }
}

/// Every named matroid, smallest first.
pub fn all() -> Vec<(&'static str, MatroidSpec)> {
    vec![
        ("U1,2", uniform(2, 1)),
        ("U1,3", uniform(3, 1)),
        ("U2,3", uniform(3, 2)),
        ("K3", complete_graph(3)),
        ("U2,4", uniform(4, 2)),
        ("gf2-small", gf2_small()),
        ("partition", partition()),
        ("K4", complete_graph(4)),
        ("fano", fano()),
        ("K5", complete_graph(5)),
    ]
}

pub fn by_name(name: &str) -> Option<MatroidSpec> {
    all()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, spec)| spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Matroid;

    #[test]
    fn every_entry_loads() {
        for (name, spec) in all() {
            let m = Matroid::load(spec).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(m.n() <= 10, "{name}");
        }
        assert_eq!(Matroid::load(fano()).unwrap().full_rank(), 3);
        assert!(by_name("k4").is_some());
    }
}
