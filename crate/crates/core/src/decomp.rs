//! One-factors and Hamilton cycle decompositions of the doubled complete
//! graph 2K_t.
//!
//! Vertices are `0..t-1` for the cyclic part `Z_{t-1}` and `t-1` for `∞`.

use serde::Serialize;

use crate::design::pair;
use crate::error::{Error, Result};

/// The label used for `∞` in a decomposition of 2K_t.
pub const fn infinity(t: u32) -> u32 {
    t - 1
}

/// A perfect matching of `Z_{t-1} ∪ {∞}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OneFactor {
    pub t: u32,
    pub j: u32,
    /// Sorted pairs, in formula order: the `∞` edge first.
    pub edges: Vec<(u32, u32)>,
}

impl OneFactor {
    /// `partner[x]` is the vertex matched with `x`.
    pub fn partner(&self) -> Vec<u32> {
        let mut p = vec![0; self.t as usize];
        for &(a, b) in &self.edges {
            p[a as usize] = b;
            p[b as usize] = a;
        }
        p
    }
}

/// `F_j = {{j,∞}, {1+j, t-2+j}, {2+j, t-3+j}, ...}` with arithmetic mod `t-1`.
///
/// ```
/// use graytts::decomp::one_factor;
/// let f = one_factor(8, 0).unwrap();
/// assert_eq!(f.edges, vec![(0, 7), (1, 6), (2, 5), (3, 4)]);
/// ```
pub fn one_factor(t: u32, j: u32) -> Result<OneFactor> {
    if t % 2 == 1 || t < 2 {
        return Err(Error::OrderOutOfRange { v: t, reason: "one-factors of K_t need even t" });
    }
    let m = t - 1;
    let j = j % m;
    let mut edges = vec![pair(j, m)];
    for i in 1..t / 2 {
        edges.push(pair((i + j) % m, (m - i + j) % m));
    }
    Ok(OneFactor { t, j, edges })
}

/// A Hamilton cycle stored as a vertex sequence; the closing edge is implied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HamCycle {
    pub vertices: Vec<u32>,
}

impl HamCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges in traversal order, each as a sorted pair.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let n = self.vertices.len();
        (0..n).map(|i| pair(self.vertices[i], self.vertices[(i + 1) % n])).collect()
    }

    pub fn contains_edge(&self, a: u32, b: u32) -> bool {
        self.edges().contains(&pair(a, b))
    }

    /// Whether the sequence visits each of `0..t` exactly once.
    pub fn is_hamiltonian_on(&self, t: u32) -> bool {
        let mut seen = vec![false; t as usize];
        self.vertices.len() == t as usize
            && self.vertices.iter().all(|&x| x < t && !std::mem::replace(&mut seen[x as usize], true))
    }

    /// The same cycle walked from `start`, first stepping to `next`.
    pub fn walk_from(&self, start: u32, next: u32) -> Option<Vec<u32>> {
        let n = self.vertices.len();
        let at = self.vertices.iter().position(|&x| x == start)?;
        if self.vertices[(at + 1) % n] == next {
            Some((0..n).map(|k| self.vertices[(at + k) % n]).collect())
        } else if self.vertices[(at + n - 1) % n] == next {
            Some((0..n).map(|k| self.vertices[(at + n - k) % n]).collect())
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DecompVariant {
    /// `H_s = F_s ∪ F_{s+1}`.
    EvenT,
    /// `H_0..H_{(t-3)/2}` followed by `H'_0..H'_{(t-3)/2}`.
    OddT,
    /// Interleaved `H_{2i} = H'_i`, `H_{2i+1} = H''_i` for `v = 6k+4`.
    V6k4,
    /// The one-factor family on `Z_v ∪ {∞}` for `v = 6k+1`.
    V6k1,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamDecomposition {
    pub t: u32,
    pub cycles: Vec<HamCycle>,
    pub variant: DecompVariant,
}

impl HamDecomposition {
    pub fn infinity(&self) -> u32 {
        infinity(self.t)
    }

    /// Pairs whose edge multiplicity over all cycles differs from two.
    pub fn cover_defects(&self) -> Vec<((u32, u32), usize)> {
        let t = self.t as usize;
        let mut count = vec![0usize; t * t];
        for c in &self.cycles {
            for (a, b) in c.edges() {
                count[a as usize * t + b as usize] += 1;
            }
        }
        let mut bad = Vec::new();
        for a in 0..t {
            for b in a + 1..t {
                if count[a * t + b] != 2 {
                    bad.push(((a as u32, b as u32), count[a * t + b]));
                }
            }
        }
        bad
    }

    /// Cycle count, Hamiltonicity of every cycle and the double cover.
    pub fn is_valid(&self) -> bool {
        self.cycles.len() + 1 == self.t as usize
            && self.cycles.iter().all(|c| c.is_hamiltonian_on(self.t))
            && self.cover_defects().is_empty()
    }
}

/// Walks `F_s ∪ F_{s+1}` from `∞`, leaving along the `F_s` edge.
fn union_cycle(t: u32, s: u32) -> HamCycle {
    let first = one_factor(t, s).expect("even t").partner();
    let second = one_factor(t, s + 1).expect("even t").partner();
    let inf = infinity(t);
    let mut vertices = vec![inf];
    let mut at = inf;
    for step in 0..t - 1 {
        at = if step % 2 == 0 { first[at as usize] } else { second[at as usize] };
        vertices.push(at);
    }
    HamCycle { vertices }
}

/// The odd-order cycles on `Z_m ∪ {∞}` (`m` even): `primed` selects `H'_j`.
fn zigzag_cycle(m: u32, j: u32, primed: bool) -> HamCycle {
    let mut vertices = vec![m, j % m];
    for i in 1..m / 2 {
        let (a, b) = ((i + j) % m, (m - i + j) % m);
        if primed {
            vertices.extend([b, a]);
        } else {
            vertices.extend([a, b]);
        }
    }
    vertices.push((m / 2 + j) % m);
    HamCycle { vertices }
}

/// The Hamilton decomposition of 2K_t into `t-1` cycles.
///
/// ```
/// use graytts::decomp::decompose;
/// let d = decompose(5).unwrap();
/// assert_eq!(d.cycles[0].vertices, vec![4, 0, 1, 3, 2]); // (∞,0,1,3,2)
/// assert!(d.is_valid());
/// ```
pub fn decompose(t: u32) -> Result<HamDecomposition> {
    if t < 3 {
        return Err(Error::OrderOutOfRange { v: t, reason: "2K_t decompositions need t >= 3" });
    }
    if t % 2 == 0 {
        let cycles = (0..t - 1).map(|s| union_cycle(t, s)).collect();
        Ok(HamDecomposition { t, cycles, variant: DecompVariant::EvenT })
    } else {
        let m = t - 1;
        let mut cycles: Vec<HamCycle> = (0..m / 2).map(|j| zigzag_cycle(m, j, false)).collect();
        cycles.extend((0..m / 2).map(|j| zigzag_cycle(m, j, true)));
        Ok(HamDecomposition { t, cycles, variant: DecompVariant::OddT })
    }
}

/// The decomposition of 2K_{v+1} on `Z_v ∪ {∞}` in the cycle order used by
/// the 2v+2 construction.
pub fn decompose_for_2v2(v: u32) -> Result<HamDecomposition> {
    let t = v + 1;
    match v % 6 {
        4 => {
            let cycles = (0..v / 2)
                .flat_map(|i| [zigzag_cycle(v, i, true), zigzag_cycle(v, i, false)])
                .collect();
            Ok(HamDecomposition { t, cycles, variant: DecompVariant::V6k4 })
        }
        1 if v > 1 => {
            let cycles = (0..v).map(|s| union_cycle(t, s)).collect();
            Ok(HamDecomposition { t, cycles, variant: DecompVariant::V6k1 })
        }
        _ => Err(Error::OrderOutOfRange { v, reason: "2v+2 decompositions need v = 1 or 4 mod 6" }),
    }
}

/// The three edges that must sit in three specific cycles of
/// [`decompose_for_2v2`], as `(cycle index, edge)`.
pub fn mandated_edges(v: u32) -> Option<[(usize, (u32, u32)); 3]> {
    match v % 6 {
        4 if v >= 16 => {
            let k = (v - 4) / 6;
            let i = 2 * k as usize;
            Some([(i - 3, (k - 2, k - 1)), (i - 2, (k - 2, k)), (i - 1, (k - 1, k))])
        }
        1 if v >= 7 => Some([(0, (3, v - 1)), (1, (1, 3)), (v as usize - 1, (1, v - 1))]),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factors() {
        assert_eq!(one_factor(4, 0).unwrap().edges, vec![(0, 3), (1, 2)]);
        assert_eq!(one_factor(4, 3).unwrap().edges, one_factor(4, 0).unwrap().edges);
        assert!(one_factor(5, 0).is_err());
    }

    #[test]
    fn small_decompositions() {
        let d3 = decompose(3).unwrap();
        assert_eq!(d3.cycles.len(), 2);
        assert!(d3.cycles.iter().all(|c| c.vertices == vec![2, 0, 1]));
        assert_eq!(decompose(4).unwrap().cycles[0].vertices, vec![3, 0, 2, 1]);
        assert!(decompose(2).is_err());
    }

    #[test]
    fn decompositions_double_cover() {
        for t in 3..=30 {
            assert!(decompose(t).unwrap().is_valid(), "t = {t}");
        }
    }

    #[test]
    fn v16_first_cycle() {
        let d = decompose_for_2v2(16).unwrap();
        assert_eq!(d.cycles[0].vertices, vec![16, 0, 15, 1, 14, 2, 13, 3, 12, 4, 11, 5, 10, 6, 9, 7, 8]);
        assert!(d.is_valid());
        assert!(decompose_for_2v2(12).is_err());
    }

    #[test]
    fn mandated_edges_are_present() {
        for v in [7, 13, 16, 19, 22, 25, 28, 31, 34] {
            let d = decompose_for_2v2(v).unwrap();
            for (i, (a, b)) in mandated_edges(v).unwrap() {
                assert!(d.cycles[i].contains_edge(a, b), "v={v} H_{i} lacks {{{a},{b}}}");
            }
        }
    }
}
