//! Cyclic 2-intersecting Gray codes, stored as Hamilton cycles of the 2-BIG.

use std::collections::HashMap;

use serde::Serialize;

use crate::design::{Triple, TripleSystem};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A cyclic ordering of block indices.
///
/// The stored sequence is normalized: it starts at the smallest index and,
/// of the two directions, runs toward the smaller neighbour. Any rotation or
/// reversal of a cycle therefore normalizes to the same sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct HamiltonCertificate {
    order: Vec<usize>,
}

impl HamiltonCertificate {
    pub fn new(order: Vec<usize>) -> HamiltonCertificate {
        HamiltonCertificate { order: normalize_cycle(&order) }
    }

    /// Builds a certificate from a cyclic sequence of blocks of `ts`.
    ///
    /// Each triple must occur in `ts` exactly once.
    pub fn from_triples(ts: &TripleSystem, cycle: &[Triple]) -> Result<HamiltonCertificate> {
        let index = block_index(ts)?;
        let order = cycle
            .iter()
            .map(|t| index.get(t).copied().ok_or_else(|| Error::Construction(format!("{t} is not a block"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(HamiltonCertificate::new(order))
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The blocks of `ts` in certificate order.
    pub fn triples(&self, ts: &TripleSystem) -> Vec<Triple> {
        self.order.iter().map(|&i| ts.blocks()[i]).collect()
    }

    /// Re-indexes after the block list is permuted: block `i` moves to `new_index[i]`.
    pub fn remap(&self, new_index: &[usize]) -> HamiltonCertificate {
        HamiltonCertificate::new(self.order.iter().map(|&i| new_index[i]).collect())
    }
}

/// Map from block to its index; fails on repeated blocks.
pub(crate) fn block_index(ts: &TripleSystem) -> Result<HashMap<Triple, usize>> {
    let mut index = HashMap::with_capacity(ts.block_count());
    for (i, b) in ts.blocks().iter().enumerate() {
        if index.insert(*b, i).is_some() {
            return Err(Error::Construction(format!("block {b} is repeated")));
        }
    }
    Ok(index)
}

/// Rotates to the minimum entry and picks the direction with the smaller second entry.
pub fn normalize_cycle(seq: &[usize]) -> Vec<usize> {
    let n = seq.len();
    let Some(start) = (0..n).min_by_key(|&i| seq[i]) else {
        return Vec::new();
    };
    let forward = seq[(start + 1) % n];
    let backward = seq[(start + n - 1) % n];
    if forward <= backward {
        (0..n).map(|k| seq[(start + k) % n]).collect()
    } else {
        (0..n).map(|k| seq[(start + n - k) % n]).collect()
    }
}

/// Checks that `cert` lists every block once and that cyclically
/// consecutive blocks share exactly two points.
///
/// Length mismatch and repeated or unknown indices are errors; a well-formed
/// permutation that breaks the intersection rule yields `Ok(false)`.
pub fn verify_certificate(ts: &TripleSystem, cert: &HamiltonCertificate) -> Result<bool> {
    verify_block_cycle(ts, cert.order())
}

/// As [`verify_certificate`], for an unnormalized index sequence.
pub fn verify_block_cycle(ts: &TripleSystem, order: &[usize]) -> Result<bool> {
    let n = ts.block_count();
    check_permutation(order, n)?;
    let blocks = ts.blocks();
    if n < 3 {
        // a 2-cycle or 1-cycle is not a Hamilton cycle of a simple graph
        return Ok(false);
    }
    Ok((0..n).all(|k| blocks[order[k]].intersection_size(&blocks[order[(k + 1) % n]]) == 2))
}

fn check_permutation(order: &[usize], n: usize) -> Result<()> {
    if order.len() != n {
        return Err(Error::CertificateLength { got: order.len(), expected: n });
    }
    let mut seen = vec![false; n];
    for &i in order {
        if i >= n {
            return Err(Error::IndexOutOfRange(i));
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::DuplicateIndex(i));
        }
    }
    Ok(())
}

/// Whether `cycle` is a Hamilton cycle of `g`.
pub fn is_hamilton_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.vertex_count();
    n >= 3
        && check_permutation(cycle, n).is_ok()
        && (0..n).all(|k| g.has_edge(cycle[k], cycle[(k + 1) % n]))
}

/// Whether `path` is a Hamilton path of `g`.
pub fn is_hamilton_path(g: &Graph, path: &[usize]) -> bool {
    check_permutation(path, g.vertex_count()).is_ok() && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tts4() -> TripleSystem {
        TripleSystem::from_arrays(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap()
    }

    #[test]
    fn normalization_is_rotation_and_reflection_invariant() {
        let base = vec![3, 1, 4, 0, 5, 2];
        let want = normalize_cycle(&base);
        assert_eq!(want, vec![0, 4, 1, 3, 2, 5]);
        for r in 0..base.len() {
            let mut rot = base.clone();
            rot.rotate_left(r);
            assert_eq!(normalize_cycle(&rot), want);
            rot.reverse();
            assert_eq!(normalize_cycle(&rot), want);
        }
        assert_eq!(normalize_cycle(&want), want);
    }

    #[test]
    fn k4_certificate() {
        let ts = tts4();
        assert!(verify_certificate(&ts, &HamiltonCertificate::new(vec![0, 1, 2, 3])).unwrap());
    }

    #[test]
    fn structural_errors() {
        let ts = tts4();
        assert_eq!(
            verify_block_cycle(&ts, &[0, 1, 2]),
            Err(Error::CertificateLength { got: 3, expected: 4 })
        );
        assert_eq!(verify_block_cycle(&ts, &[0, 1, 1, 2]), Err(Error::DuplicateIndex(1)));
        assert_eq!(verify_block_cycle(&ts, &[0, 1, 2, 7]), Err(Error::IndexOutOfRange(7)));
    }

    #[test]
    fn broken_intersection_is_rejected() {
        // consecutive blocks {0,1,2},{3,4,5} share nothing
        let ts = TripleSystem::from_arrays(6, &[[0, 1, 2], [3, 4, 5], [0, 1, 3]]).unwrap();
        assert!(!verify_block_cycle(&ts, &[0, 1, 2]).unwrap());
    }
}
