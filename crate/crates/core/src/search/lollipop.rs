//! A second Hamilton cycle in a cubic graph by Thomason's lollipop walk.
//!
//! The Hamilton paths that start with a fixed edge `u -> h[1]` form a graph
//! in which each path is joined to the paths reachable by one rotation. In a
//! cubic graph the paths whose far end is adjacent to `u` have degree one and
//! every other path has degree two, so walking away from the path obtained
//! from `h` ends at a different path that closes into a cycle.

use crate::certificate::{is_hamilton_cycle, normalize_cycle};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Returns a Hamilton cycle of the cubic graph `g` other than `h`.
///
/// The result shares the edge `{h[0], h[1]}` with `h` and is normalized.
/// `max_steps` bounds the number of rotations.
pub fn find_alternate_cycle(g: &Graph, h: &[usize], max_steps: u64) -> Result<Vec<usize>> {
    if !g.is_cubic() {
        return Err(Error::NotCubic);
    }
    if !is_hamilton_cycle(g, h) {
        return Err(Error::InvalidCertificate("input is not a Hamilton cycle of the graph".into()));
    }
    let n = h.len();
    let u = h[0];
    let mut path = h.to_vec();
    let mut pos = vec![0usize; n];
    for (i, &x) in path.iter().enumerate() {
        pos[x] = i;
    }
    // the chord that would undo the previous rotation; none before the first step
    let mut undo: Option<usize> = None;
    for _ in 0..max_steps {
        let end = path[n - 1];
        let pred = path[n - 2];
        if undo.is_some() && g.has_edge(end, u) {
            return Ok(normalize_cycle(&path));
        }
        let z = g
            .neighbors(end)
            .iter()
            .copied()
            .find(|&x| x != pred && x != u && Some(x) != undo)
            .expect("cubic end vertex has a free chord");
        // rotate: u .. z z' .. end  ->  u .. z end .. z'
        let i = pos[z];
        path[i + 1..].reverse();
        for (k, &x) in path.iter().enumerate().skip(i + 1) {
            pos[x] = k;
        }
        undo = Some(z);
    }
    Err(Error::BudgetExhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::search::hamilton::enumerate_hamilton_cycles;

    #[test]
    fn alternates_on_named_graphs() {
        for g in [complete(4), complete_bipartite(3, 3), prism(3), prism(6), mobius_kantor()] {
            let all = enumerate_hamilton_cycles(&g);
            for h in &all {
                let other = find_alternate_cycle(&g, h, 10_000).unwrap();
                assert_ne!(&other, h);
                assert!(all.contains(&other));
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(find_alternate_cycle(&complete(5), &[0, 1, 2, 3, 4], 10), Err(Error::NotCubic));
        assert!(find_alternate_cycle(&complete(4), &[0, 1, 2], 10).is_err());
    }
}
