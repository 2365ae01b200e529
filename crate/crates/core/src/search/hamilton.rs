//! Exact Hamilton cycle and path search by path-extension backtracking.
//!
//! Pruning: every unvisited vertex must keep two usable edges (one for a
//! path end), a neighbour of the current end that is down to its last two
//! usable edges forces the next step, and the unvisited part must stay
//! connected to the end.

use std::collections::VecDeque;

use crate::certificate::normalize_cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{SearchBudget, SearchOutcome};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Cycle,
    Path,
}

struct Dfs<'a, F: FnMut(&[usize]) -> bool> {
    g: &'a Graph,
    goal: Goal,
    visited: Vec<bool>,
    path: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
    exhausted: bool,
    stop: bool,
    // called on each completed solution; returning false ends the search
    on_found: F,
    mark: Vec<u32>,
    epoch: u32,
}

impl<'a, F: FnMut(&[usize]) -> bool> Dfs<'a, F> {
    fn new(g: &'a Graph, goal: Goal, max_nodes: u64, on_found: F) -> Self {
        let n = g.vertex_count();
        Dfs {
            g,
            goal,
            visited: vec![false; n],
            path: Vec::with_capacity(n),
            nodes: 0,
            max_nodes,
            exhausted: false,
            stop: false,
            on_found,
            mark: vec![0; n],
            epoch: 0,
        }
    }

    fn start(&mut self, prefix: &[usize]) {
        for &x in prefix {
            self.visited[x] = true;
            self.path.push(x);
        }
        self.extend();
        for &x in prefix {
            self.visited[x] = false;
        }
        self.path.clear();
    }

    /// Usable edges of an unvisited vertex: to unvisited vertices, the current end, or the start.
    fn free_degree(&self, w: usize) -> usize {
        let end = *self.path.last().unwrap();
        let first = self.path[0];
        self.g
            .neighbors(w)
            .iter()
            .filter(|&&x| !self.visited[x] || x == end || (self.goal == Goal::Cycle && x == first))
            .count()
    }

    fn unvisited_connected(&mut self, remaining: usize) -> bool {
        let end = *self.path.last().unwrap();
        self.epoch += 1;
        let epoch = self.epoch;
        let mut queue = VecDeque::new();
        for &w in self.g.neighbors(end) {
            if !self.visited[w] && self.mark[w] != epoch {
                self.mark[w] = epoch;
                queue.push_back(w);
            }
        }
        let mut seen = queue.len();
        while let Some(x) = queue.pop_front() {
            for &w in self.g.neighbors(x) {
                if !self.visited[w] && self.mark[w] != epoch {
                    self.mark[w] = epoch;
                    seen += 1;
                    queue.push_back(w);
                }
            }
        }
        seen == remaining
    }

    fn extend(&mut self) {
        if self.stop {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.exhausted = true;
            self.stop = true;
            return;
        }
        let n = self.g.vertex_count();
        let end = *self.path.last().unwrap();
        let first = self.path[0];
        let remaining = n - self.path.len();
        if remaining == 0 {
            let closes = self.goal == Goal::Path || (n >= 3 && self.g.has_edge(end, first));
            if closes && !(self.on_found)(&self.path) {
                self.stop = true;
            }
            return;
        }
        if self.goal == Goal::Cycle && !self.g.neighbors(first).iter().any(|&x| !self.visited[x]) {
            return;
        }
        let mut forced = None;
        for w in 0..n {
            if self.visited[w] {
                continue;
            }
            let d = self.free_degree(w);
            let need = if self.goal == Goal::Cycle { 2 } else { 1 };
            if d < need {
                return;
            }
            if self.goal == Goal::Cycle && self.path.len() > 1 && d == 2 && self.g.has_edge(w, end) {
                // w must use its edge to the end; the last vertex may instead use end and start
                let last_vertex = remaining == 1;
                if !last_vertex {
                    match forced {
                        None => forced = Some(w),
                        Some(_) => return,
                    }
                }
            }
        }
        if !self.unvisited_connected(remaining) {
            return;
        }
        let mut options: Vec<usize> = match forced {
            Some(w) => vec![w],
            None => self.g.neighbors(end).iter().copied().filter(|&x| !self.visited[x]).collect(),
        };
        // fewest onward choices first
        options.sort_by_key(|&w| self.g.neighbors(w).iter().filter(|&&x| !self.visited[x]).count());
        for w in options {
            self.visited[w] = true;
            self.path.push(w);
            self.extend();
            self.path.pop();
            self.visited[w] = false;
            if self.stop {
                return;
            }
        }
    }
}

/// Searches for a Hamilton cycle; the result is normalized.
pub fn find_hamilton_cycle(g: &Graph, budget: &SearchBudget) -> SearchOutcome<Vec<usize>> {
    let n = g.vertex_count();
    if n < 3 {
        return SearchOutcome::ProvenNone;
    }
    let mut found = None;
    let mut dfs = Dfs::new(g, Goal::Cycle, budget.max_nodes, |p: &[usize]| {
        found = Some(p.to_vec());
        false
    });
    dfs.start(&[0]);
    let exhausted = dfs.exhausted;
    match found {
        Some(c) => SearchOutcome::Found(normalize_cycle(&c)),
        None if exhausted => SearchOutcome::BudgetExhausted,
        None => SearchOutcome::ProvenNone,
    }
}

/// Searches for a Hamilton path, trying each start vertex in turn.
pub fn find_hamilton_path(g: &Graph, budget: &SearchBudget) -> SearchOutcome<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return SearchOutcome::ProvenNone;
    }
    let mut exhausted = false;
    let mut nodes_left = budget.max_nodes;
    for s in 0..n {
        let mut found = None;
        let mut dfs = Dfs::new(g, Goal::Path, nodes_left, |p: &[usize]| {
            found = Some(p.to_vec());
            false
        });
        dfs.start(&[s]);
        nodes_left = nodes_left.saturating_sub(dfs.nodes);
        exhausted |= dfs.exhausted;
        if let Some(p) = found {
            return SearchOutcome::Found(p);
        }
        if exhausted {
            break;
        }
    }
    if exhausted {
        SearchOutcome::BudgetExhausted
    } else {
        SearchOutcome::ProvenNone
    }
}

/// Every Hamilton cycle of `g`, normalized, in discovery order.
///
/// Intended for small graphs; there is no budget.
pub fn enumerate_hamilton_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    let mut dfs = Dfs::new(g, Goal::Cycle, u64::MAX, |p: &[usize]| {
        // each cycle is met once per direction
        if p[1] < p[p.len() - 1] {
            out.push(normalize_cycle(p));
        }
        true
    });
    dfs.start(&[0]);
    out
}

/// Number of Hamilton cycles containing the edge `e`, by exhaustive search.
pub fn count_cycles_through_edge(g: &Graph, e: (usize, usize)) -> Result<u64> {
    if !g.has_edge(e.0, e.1) {
        return Err(Error::NotAnEdge(format!("{{{},{}}}", e.0, e.1)));
    }
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    let mut count = 0u64;
    let mut dfs = Dfs::new(g, Goal::Cycle, u64::MAX, |_: &[usize]| {
        count += 1;
        true
    });
    // fixing the first step a -> b meets each cycle through e exactly once
    dfs.start(&[e.0, e.1]);
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{is_hamilton_cycle, is_hamilton_path};
    use crate::graph::named::*;

    #[test]
    fn k4_has_three_cycles() {
        let g = complete(4);
        let all = enumerate_hamilton_cycles(&g);
        assert_eq!(all.len(), 3);
        for (a, b) in g.edges() {
            assert_eq!(count_cycles_through_edge(&g, (a, b)).unwrap(), 2);
        }
    }

    #[test]
    fn petersen_is_not_hamiltonian_but_traceable() {
        let g = petersen();
        assert_eq!(find_hamilton_cycle(&g, &SearchBudget::default()), SearchOutcome::ProvenNone);
        assert!(enumerate_hamilton_cycles(&g).is_empty());
        match find_hamilton_path(&g, &SearchBudget::default()) {
            SearchOutcome::Found(p) => assert!(is_hamilton_path(&g, &p)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn found_cycles_are_valid() {
        for g in [complete(6), prism(5), mobius_kantor(), complete_bipartite(4, 4)] {
            match find_hamilton_cycle(&g, &SearchBudget::default()) {
                SearchOutcome::Found(c) => assert!(is_hamilton_cycle(&g, &c)),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn cycle_counts_match_known_values() {
        // K5 has 12 Hamilton cycles, K_{3,3} has 6
        assert_eq!(enumerate_hamilton_cycles(&complete(5)).len(), 12);
        assert_eq!(enumerate_hamilton_cycles(&complete_bipartite(3, 3)).len(), 6);
    }

    #[test]
    fn tiny_budget_is_reported() {
        let budget = SearchBudget { max_nodes: 3, ..SearchBudget::default() };
        assert_eq!(find_hamilton_cycle(&mobius_kantor(), &budget), SearchOutcome::BudgetExhausted);
    }

    #[test]
    fn non_edge_is_rejected() {
        assert!(matches!(count_cycles_through_edge(&petersen(), (0, 2)), Err(Error::NotAnEdge(_))));
    }
}
