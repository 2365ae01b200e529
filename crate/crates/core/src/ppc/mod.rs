//! Partial parallel classes: the lower bound, an augmenting finder, exact
//! parallel-class search and the attach planner used by 2v+2.

mod attach;

pub use attach::{plan_attach, AttachPlan, ScheduleSource};

use serde::Serialize;

use crate::design::{is_admissible, Point, Triple, TripleSystem};
use crate::error::{Error, Result};
use crate::search::{SearchBudget, SearchOutcome};

/// Pairwise disjoint blocks, as sorted indices into a design.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialParallelClass {
    pub block_indices: Vec<usize>,
}

impl PartialParallelClass {
    pub fn len(&self) -> usize {
        self.block_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_indices.is_empty()
    }

    pub fn blocks(&self, ts: &TripleSystem) -> Vec<Triple> {
        self.block_indices.iter().map(|&i| ts.blocks()[i]).collect()
    }

    /// Whether the referenced blocks are pairwise disjoint.
    pub fn is_disjoint(&self, ts: &TripleSystem) -> bool {
        let mut seen = vec![false; ts.order() as usize];
        self.blocks(ts)
            .iter()
            .flat_map(|b| b.points())
            .all(|p| !std::mem::replace(&mut seen[p as usize], true))
    }
}

/// Guaranteed size of a partial parallel class in any TTS(v).
///
/// ```
/// use graytts::ppc::ppc_lower_bound;
/// assert_eq!(ppc_lower_bound(16).unwrap(), 4);
/// assert_eq!(ppc_lower_bound(7).unwrap(), 2);
/// ```
pub fn ppc_lower_bound(v: u32) -> Result<usize> {
    if !is_admissible(v) {
        return Err(Error::NotAdmissible(v));
    }
    let v = v as i64;
    // smallest c with 2v+3-6c <= sqrt(16v+9)
    let mut c = 0i64;
    loop {
        let d = 2 * v + 3 - 6 * c;
        if d <= 0 || d * d <= 16 * v + 9 {
            break;
        }
        c += 1;
    }
    let mut bound = c.min((v - 1 + 3) / 4);
    if v >= 16 && v % 6 == 4 {
        bound = bound.max((v + 8) / 6);
    }
    if v >= 7 && v % 6 == 1 {
        bound = bound.max((v + 5) / 6);
    }
    Ok(bound as usize)
}

/// For each point, the pairs `B \ {x}` of blocks through `x` that avoid the
/// covered points.
pub struct NeighborhoodTally {
    pub pairs: Vec<Vec<((Point, Point), usize)>>,
}

impl NeighborhoodTally {
    pub fn new(ts: &TripleSystem, covered: &[bool]) -> NeighborhoodTally {
        let mut pairs = vec![Vec::new(); ts.order() as usize];
        for (i, b) in ts.blocks().iter().enumerate() {
            let [a, c, d] = b.points();
            for (x, y, z) in [(a, c, d), (c, a, d), (d, a, c)] {
                if !covered[y as usize] && !covered[z as usize] {
                    pairs[x as usize].push(((y, z), i));
                }
            }
        }
        NeighborhoodTally { pairs }
    }
}

struct Packing<'a> {
    ts: &'a TripleSystem,
    chosen: Vec<usize>,
    covered: Vec<bool>,
}

impl<'a> Packing<'a> {
    fn new(ts: &'a TripleSystem) -> Self {
        Packing { ts, chosen: Vec::new(), covered: vec![false; ts.order() as usize] }
    }

    fn free(&self, b: &Triple) -> bool {
        b.points().iter().all(|&p| !self.covered[p as usize])
    }

    fn set(&mut self, i: usize, on: bool) {
        for p in self.ts.blocks()[i].points() {
            self.covered[p as usize] = on;
        }
        if on {
            self.chosen.push(i);
        } else {
            self.chosen.retain(|&j| j != i);
        }
    }

    fn saturate(&mut self) {
        for i in 0..self.ts.block_count() {
            if self.free(&self.ts.blocks()[i]) {
                self.set(i, true);
            }
        }
    }

    /// Trades one chosen block `B ∋ x, y` for `D1 ∪ {y}` and `D2 ∪ {x}`
    /// where `D1, D2` are disjoint uncovered pairs.
    fn exchange(&mut self) -> bool {
        for &bi in &self.chosen.clone() {
            let b = self.ts.blocks()[bi];
            let tally = NeighborhoodTally::new(self.ts, &self.covered);
            for (x, y) in b.pairs() {
                for &(d1, i1) in &tally.pairs[y as usize] {
                    for &(d2, i2) in &tally.pairs[x as usize] {
                        let clash = d1.0 == d2.0 || d1.0 == d2.1 || d1.1 == d2.0 || d1.1 == d2.1;
                        if !clash {
                            self.set(bi, false);
                            self.set(i1, true);
                            self.set(i2, true);
                            return true;
                        }
                    }
                }
            }
        }
        false
    }
}

fn dfs_packing(ts: &TripleSystem, target: usize, nodes: &mut u64, max_nodes: u64) -> Option<Vec<usize>> {
    fn go(p: &mut Packing, from: usize, target: usize, nodes: &mut u64, max: u64) -> bool {
        if p.chosen.len() >= target {
            return true;
        }
        *nodes += 1;
        if *nodes > max {
            return false;
        }
        let free_points = p.covered.iter().filter(|c| !**c).count();
        if free_points < 3 * (target - p.chosen.len()) {
            return false;
        }
        for i in from..p.ts.block_count() {
            if p.free(&p.ts.blocks()[i]) {
                p.set(i, true);
                if go(p, i + 1, target, nodes, max) {
                    return true;
                }
                p.set(i, false);
            }
        }
        false
    }
    let mut p = Packing::new(ts);
    go(&mut p, 0, target, nodes, max_nodes).then_some(p.chosen)
}

/// Finds at least `target` pairwise disjoint blocks: greedy, then block
/// exchanges, then a bounded backtracking search.
///
/// ```
/// use graytts::base::BaseLibrary;
/// use graytts::ppc::find_ppc;
/// let (ts, _) = BaseLibrary::get(7).unwrap();
/// let class = find_ppc(&ts, 2).unwrap();
/// assert!(class.len() >= 2 && class.is_disjoint(&ts));
/// ```
pub fn find_ppc(ts: &TripleSystem, target: usize) -> Result<PartialParallelClass> {
    let max = ts.order() as usize / 3;
    if target > max {
        return Err(Error::TargetTooLarge { target, max, v: ts.order() });
    }
    let mut p = Packing::new(ts);
    p.saturate();
    while p.chosen.len() < target {
        if !p.exchange() {
            break;
        }
        p.saturate();
    }
    let mut chosen = if p.chosen.len() >= target {
        p.chosen
    } else {
        let mut nodes = 0;
        dfs_packing(ts, target, &mut nodes, SearchBudget::default().max_nodes).ok_or(Error::BudgetExhausted)?
    };
    chosen.sort_unstable();
    Ok(PartialParallelClass { block_indices: chosen })
}

/// Searches for a set of `blocks` partitioning `0..v` that contains `forced`.
pub(crate) fn exact_cover(
    v: u32,
    blocks: &[Triple],
    forced: &[usize],
    max_nodes: u64,
) -> SearchOutcome<Vec<usize>> {
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); v as usize];
    for (i, b) in blocks.iter().enumerate() {
        for p in b.points() {
            through[p as usize].push(i);
        }
    }
    let mut covered = vec![false; v as usize];
    let mut chosen = Vec::new();
    for &i in forced {
        for p in blocks[i].points() {
            if std::mem::replace(&mut covered[p as usize], true) {
                return SearchOutcome::ProvenNone;
            }
        }
        chosen.push(i);
    }
    struct St<'a> {
        blocks: &'a [Triple],
        through: Vec<Vec<usize>>,
        covered: Vec<bool>,
        chosen: Vec<usize>,
        nodes: u64,
        max: u64,
        exhausted: bool,
    }
    fn go(s: &mut St) -> bool {
        s.nodes += 1;
        if s.nodes > s.max {
            s.exhausted = true;
            return false;
        }
        // the uncovered point with the fewest usable blocks
        let mut best: Option<(usize, usize)> = None;
        for x in 0..s.covered.len() {
            if s.covered[x] {
                continue;
            }
            let n = s.through[x]
                .iter()
                .filter(|&&i| s.blocks[i].points().iter().all(|&p| !s.covered[p as usize]))
                .count();
            if best.is_none_or(|(_, m)| n < m) {
                best = Some((x, n));
            }
        }
        let Some((x, n)) = best else {
            return true;
        };
        if n == 0 {
            return false;
        }
        let options: Vec<usize> = s.through[x]
            .iter()
            .copied()
            .filter(|&i| s.blocks[i].points().iter().all(|&p| !s.covered[p as usize]))
            .collect();
        for i in options {
            for p in s.blocks[i].points() {
                s.covered[p as usize] = true;
            }
            s.chosen.push(i);
            if go(s) {
                return true;
            }
            s.chosen.pop();
            for p in s.blocks[i].points() {
                s.covered[p as usize] = false;
            }
            if s.exhausted {
                return false;
            }
        }
        false
    }
    let mut s = St { blocks, through, covered, chosen, nodes: 0, max: max_nodes, exhausted: false };
    if go(&mut s) {
        s.chosen.sort_unstable();
        SearchOutcome::Found(s.chosen)
    } else if s.exhausted {
        SearchOutcome::BudgetExhausted
    } else {
        SearchOutcome::ProvenNone
    }
}

/// Exact search for a parallel class.
///
/// ```
/// use graytts::base::BaseLibrary;
/// use graytts::ppc::find_parallel_class;
/// use graytts::search::SearchBudget;
/// let (ts, _) = BaseLibrary::get(9).unwrap();
/// let class = find_parallel_class(&ts, &SearchBudget::default()).unwrap().found().unwrap();
/// assert_eq!(class.len(), 3);
/// ```
pub fn find_parallel_class(ts: &TripleSystem, budget: &SearchBudget) -> Result<SearchOutcome<PartialParallelClass>> {
    let v = ts.order();
    if v % 3 != 0 {
        return Err(Error::OrderOutOfRange { v, reason: "a parallel class needs 3 | v" });
    }
    Ok(match exact_cover(v, ts.blocks(), &[], budget.max_nodes) {
        SearchOutcome::Found(block_indices) => SearchOutcome::Found(PartialParallelClass { block_indices }),
        SearchOutcome::ProvenNone => SearchOutcome::ProvenNone,
        SearchOutcome::BudgetExhausted => SearchOutcome::BudgetExhausted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oracle_bound(v: u32) -> usize {
        let vf = v as f64;
        let a = ((vf - 1.0) / 4.0).ceil();
        let b = ((2.0 * vf + 3.0 - (16.0 * vf + 9.0).sqrt()) / 6.0).ceil();
        let mut m = a.min(b).max(0.0) as usize;
        if v >= 16 && v % 6 == 4 {
            m = m.max((v as usize + 8) / 6);
        }
        if v >= 7 && v % 6 == 1 {
            m = m.max((v as usize + 5) / 6);
        }
        m
    }

    #[test]
    fn bound_matches_float_formula() {
        for v in (4..2000).filter(|&v| is_admissible(v)) {
            assert_eq!(ppc_lower_bound(v).unwrap(), oracle_bound(v), "v = {v}");
        }
        assert_eq!(ppc_lower_bound(9).unwrap(), 2);
        assert!(ppc_lower_bound(5).is_err());
    }

    #[test]
    fn doubled_block_has_a_class() {
        let ts = TripleSystem::from_arrays(3, &[[0, 1, 2], [0, 1, 2]]).unwrap();
        let c = find_parallel_class(&ts, &SearchBudget::default()).unwrap().found().unwrap();
        assert_eq!(c.len(), 1);
        let four = TripleSystem::from_arrays(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        assert!(find_parallel_class(&four, &SearchBudget::default()).is_err());
        assert!(matches!(find_ppc(&four, 2), Err(Error::TargetTooLarge { .. })));
        assert_eq!(find_ppc(&four, 1).unwrap().len(), 1);
    }
}
