//! Plain undirected graphs, block-intersection graphs and a few classical
//! cubic graphs used as test subjects.

use std::collections::{HashMap, VecDeque};
use std::ops::Deref;

use crate::design::TripleSystem;
use crate::error::{Error, Result};

/// A simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Loops and repeated edges are dropped.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            assert!(a < n && b < n, "edge ({a},{b}) outside 0..{n}");
            if a != b {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.adj.len() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Each edge once, as `(a, b)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().filter(move |b| **b > a).map(move |b| (a, *b)))
    }

    /// The common degree if the graph is regular.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_cubic(&self) -> bool {
        !self.adj.is_empty() && self.regularity() == Some(3)
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        Graph::from_edges(
            n,
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| !self.has_edge(a, b)),
        )
    }
}

/// The `i`-block-intersection graph of a design: vertices are block indices,
/// adjacent when the blocks meet in exactly `i` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    pub i: u8,
    pub graph: Graph,
}

impl Deref for IntersectionGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

/// Builds the `i`-BIG of `ts`.
///
/// ```
/// use graytts::{build_ibig, TripleSystem};
/// let ts = TripleSystem::from_arrays(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
/// let g = build_ibig(&ts, 2).unwrap();
/// assert_eq!(g.edge_count(), 6);
/// ```
pub fn build_ibig(ts: &TripleSystem, i: u8) -> Result<IntersectionGraph> {
    if i > 3 {
        return Err(Error::IntersectionSize(i));
    }
    let blocks = ts.blocks();
    let n = blocks.len();
    let mut edges = Vec::new();
    match i {
        2 => {
            let mut by_pair: HashMap<(u32, u32), Vec<usize>> = HashMap::with_capacity(n * 3);
            for (idx, b) in blocks.iter().enumerate() {
                for p in b.pairs() {
                    by_pair.entry(p).or_default().push(idx);
                }
            }
            for list in by_pair.values() {
                for (x, &a) in list.iter().enumerate() {
                    for &b in &list[x + 1..] {
                        if blocks[a].intersection_size(&blocks[b]) == 2 {
                            edges.push((a, b));
                        }
                    }
                }
            }
        }
        1 => {
            let mut by_point = vec![Vec::new(); ts.order() as usize];
            for (idx, b) in blocks.iter().enumerate() {
                for p in b.points() {
                    by_point[p as usize].push(idx);
                }
            }
            for list in &by_point {
                for (x, &a) in list.iter().enumerate() {
                    for &b in &list[x + 1..] {
                        if blocks[a].intersection_size(&blocks[b]) == 1 {
                            edges.push((a, b));
                        }
                    }
                }
            }
        }
        3 => {
            let mut same: HashMap<_, Vec<usize>> = HashMap::new();
            for (idx, b) in blocks.iter().enumerate() {
                same.entry(*b).or_default().push(idx);
            }
            for list in same.values() {
                for (x, &a) in list.iter().enumerate() {
                    for &b in &list[x + 1..] {
                        edges.push((a, b));
                    }
                }
            }
        }
        _ => {
            for a in 0..n {
                for b in a + 1..n {
                    if blocks[a].intersection_size(&blocks[b]) == 0 {
                        edges.push((a, b));
                    }
                }
            }
        }
    }
    Ok(IntersectionGraph { i, graph: Graph::from_edges(n, edges) })
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched = Vec::new();
    for s in 0..n {
        for &t in &touched {
            dist[t] = usize::MAX;
            parent[t] = usize::MAX;
        }
        touched.clear();
        dist[s] = 0;
        touched.push(s);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            // no shorter cycle through s can be found past this depth
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Two-colours each component by BFS.
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut colour = vec![u8::MAX; n];
    for s in 0..n {
        if colour[s] != u8::MAX {
            continue;
        }
        colour[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[u];
                    queue.push_back(w);
                } else if colour[w] == colour[u] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Classical small graphs.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))))
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The prism over an `n`-cycle; `prism(3)` is the triangular prism.
    pub fn prism(n: usize) -> Graph {
        let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (n + i, n + (i + 1) % n), (i, n + i)]);
        Graph::from_edges(2 * n, edges)
    }

    /// Generalized Petersen graph GP(n, k).
    pub fn generalized_petersen(n: usize, k: usize) -> Graph {
        let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]);
        Graph::from_edges(2 * n, edges)
    }

    pub fn petersen() -> Graph {
        generalized_petersen(5, 2)
    }

    pub fn mobius_kantor() -> Graph {
        generalized_petersen(8, 3)
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn girth_of_named_graphs() {
        assert_eq!(girth(&complete(4)), Some(3));
        assert_eq!(girth(&complete_bipartite(3, 3)), Some(4));
        assert_eq!(girth(&petersen()), Some(5));
        assert_eq!(girth(&mobius_kantor()), Some(6));
        assert_eq!(girth(&path(3)), None);
        assert_eq!(girth(&cycle(9)), Some(9));
    }

    #[test]
    fn bipartiteness() {
        assert!(!is_bipartite(&complete(4)));
        assert!(is_bipartite(&Graph::empty(5)));
        assert!(is_bipartite(&mobius_kantor()));
        assert!(!is_bipartite(&petersen()));
    }

    #[test]
    fn named_graphs_are_cubic() {
        for g in [complete(4), complete_bipartite(3, 3), prism(3), petersen(), mobius_kantor()] {
            assert!(g.is_cubic());
            assert!(is_connected(&g));
        }
    }

    #[test]
    fn rejects_bad_intersection_size() {
        let ts = TripleSystem::from_arrays(3, &[[0, 1, 2]]).unwrap();
        assert_eq!(build_ibig(&ts, 4), Err(Error::IntersectionSize(4)));
    }

    #[test]
    fn doubled_block_has_isolated_2big() {
        let ts = TripleSystem::from_arrays(3, &[[0, 1, 2], [0, 1, 2]]).unwrap();
        let g = build_ibig(&ts, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 0));
        assert_eq!(build_ibig(&ts, 3).unwrap().edge_count(), 1);
    }
}
