//! Triple systems and their validation.
//!
//! A [`TripleSystem`] is an order `v` together with an ordered list of
//! blocks. The list order is the block-index space used by intersection
//! graphs and certificates. Repeated blocks are allowed so that non-simple
//! systems (the doubled block on three points, for instance) can be
//! represented and rejected by the validators rather than by the type.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of a design, an integer in `0..v`.
pub type Point = u32;

/// A 3-element block, stored sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[u32; 3]", try_from = "[u32; 3]")]
pub struct Triple([Point; 3]);

impl Triple {
    /// Builds a triple from three distinct points in any order.
    ///
    /// Panics if two points coincide; use [`Triple::try_new`] for untrusted input.
    pub fn new(a: Point, b: Point, c: Point) -> Triple {
        Triple::try_new(a, b, c).unwrap_or_else(|| panic!("repeated point in {{{a},{b},{c}}}"))
    }

    pub fn try_new(a: Point, b: Point, c: Point) -> Option<Triple> {
        let mut p = [a, b, c];
        p.sort_unstable();
        if p[0] == p[1] || p[1] == p[2] {
            None
        } else {
            Some(Triple(p))
        }
    }

    /// The triple formed by a pair and one more point.
    pub fn from_pair(pair: (Point, Point), c: Point) -> Triple {
        Triple::new(pair.0, pair.1, c)
    }

    #[inline]
    pub fn points(&self) -> [Point; 3] {
        self.0
    }

    #[inline]
    pub fn contains(&self, p: Point) -> bool {
        self.0.contains(&p)
    }

    pub fn max_point(&self) -> Point {
        self.0[2]
    }

    /// The three pairs of the triple, each sorted.
    pub fn pairs(&self) -> [(Point, Point); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }

    pub fn intersection_size(&self, other: &Triple) -> usize {
        self.0.iter().filter(|p| other.contains(**p)).count()
    }

    /// The pair shared with `other` when the blocks meet in exactly two points.
    pub fn shared_pair(&self, other: &Triple) -> Option<(Point, Point)> {
        let common: Vec<Point> = self.0.iter().copied().filter(|p| other.contains(*p)).collect();
        match common[..] {
            [a, b] => Some((a, b)),
            _ => None,
        }
    }

    /// The point of the triple not in `pair`.
    pub fn third(&self, pair: (Point, Point)) -> Point {
        *self
            .0
            .iter()
            .find(|p| **p != pair.0 && **p != pair.1)
            .expect("pair covers the whole triple")
    }

    pub fn map(&self, f: impl Fn(Point) -> Point) -> Triple {
        Triple::new(f(self.0[0]), f(self.0[1]), f(self.0[2]))
    }
}

impl From<Triple> for [u32; 3] {
    fn from(t: Triple) -> [u32; 3] {
        t.0
    }
}

impl TryFrom<[u32; 3]> for Triple {
    type Error = String;

    fn try_from(p: [u32; 3]) -> std::result::Result<Triple, String> {
        Triple::try_new(p[0], p[1], p[2]).ok_or_else(|| format!("repeated point in {p:?}"))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// Sorted pair helper.
#[inline]
pub(crate) fn pair(a: Point, b: Point) -> (Point, Point) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// An order together with an ordered multiset of triples.
///
/// Equality compares the sorted block lists, so two systems that differ only
/// in block order are equal. Use [`TripleSystem::blocks`] for order-sensitive
/// comparisons.
#[derive(Debug, Clone, Eq, Serialize)]
pub struct TripleSystem {
    v: u32,
    blocks: Vec<Triple>,
}

impl PartialEq for TripleSystem {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && self.sorted_blocks() == other.sorted_blocks()
    }
}

impl TripleSystem {
    /// Builds a system after checking that every point lies in `0..v`.
    pub fn new(v: u32, blocks: Vec<Triple>) -> Result<TripleSystem> {
        for b in &blocks {
            if b.max_point() >= v {
                return Err(Error::PointOutOfRange { point: b.max_point(), v });
            }
        }
        Ok(TripleSystem { v, blocks })
    }

    /// Builds a system from raw point arrays, reporting repeated or
    /// out-of-range points as structural errors.
    pub fn from_arrays(v: u32, raw: &[[u32; 3]]) -> Result<TripleSystem> {
        let mut blocks = Vec::with_capacity(raw.len());
        for (index, p) in raw.iter().enumerate() {
            if let Some(&point) = p.iter().find(|x| **x >= v) {
                return Err(Error::PointOutOfRange { point, v });
            }
            blocks.push(Triple::try_new(p[0], p[1], p[2]).ok_or(Error::DegenerateBlock { index })?);
        }
        Ok(TripleSystem { v, blocks })
    }

    pub fn order(&self) -> u32 {
        self.v
    }

    pub fn blocks(&self) -> &[Triple] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn sorted_blocks(&self) -> Vec<Triple> {
        let mut b = self.blocks.clone();
        b.sort_unstable();
        b
    }

    /// Applies a point permutation; block order is preserved.
    pub fn relabel(&self, perm: &[Point]) -> TripleSystem {
        debug_assert_eq!(perm.len(), self.v as usize);
        TripleSystem {
            v: self.v,
            blocks: self.blocks.iter().map(|b| b.map(|p| perm[p as usize])).collect(),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        validate_tts(self)
    }
}

/// Expected block count of a TTS(v).
pub fn tts_block_count(v: u32) -> usize {
    (v as usize * (v as usize).saturating_sub(1)) / 3
}

/// Whether a TTS(v) can exist at all.
pub fn is_admissible(v: u32) -> bool {
    v >= 3 && v % 3 != 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairDefect {
    pub pair: (Point, Point),
    pub count: usize,
}

/// Outcome of [`validate_tts`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub is_tts: bool,
    pub is_simple: bool,
    pub pair_defects: Vec<PairDefect>,
}

impl ValidationReport {
    pub fn is_simple_tts(&self) -> bool {
        self.is_tts && self.is_simple
    }
}

/// Counts every pair of points and checks each occurs in exactly two blocks.
pub fn validate_tts(ts: &TripleSystem) -> ValidationReport {
    let v = ts.v as usize;
    let mut counts = vec![0usize; v * v];
    for b in &ts.blocks {
        for (x, y) in b.pairs() {
            counts[x as usize * v + y as usize] += 1;
        }
    }
    let mut pair_defects = Vec::new();
    for x in 0..v {
        for y in x + 1..v {
            let count = counts[x * v + y];
            if count != 2 {
                pair_defects.push(PairDefect { pair: (x as Point, y as Point), count });
            }
        }
    }
    let sorted = ts.sorted_blocks();
    let is_simple = sorted.windows(2).all(|w| w[0] != w[1]);
    ValidationReport { is_tts: pair_defects.is_empty() && v >= 3, is_simple, pair_defects }
}
