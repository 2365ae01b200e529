//! Helpers for cutting Hamilton cycles of 2-BIGs into paths and joining
//! paths and single blocks back into a cycle.

use std::collections::{HashMap, HashSet};

use crate::decomp::{DecompVariant, HamDecomposition};
use crate::design::{Point, Triple};
use crate::error::{Error, Result};

#[inline]
pub(crate) fn adjacent(a: &Triple, b: &Triple) -> bool {
    a.intersection_size(b) == 2
}

/// How one cycle of a decomposition is walked: the cycle index (which is
/// also the point joined to its edges), a start vertex and the first step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Walk {
    pub cycle: usize,
    pub start: u32,
    pub first: u32,
}

/// The walks whose concatenation is a Hamilton cycle of the 2-BIG on the
/// triples `{s} ∪ e`, `e ∈ E(H_s)`.
///
/// One-factor families are walked from vertex 0 in cycle order, leaving
/// along the `F_s` edge, so each walk ends on the `F_{s+1}` edge at 0 where
/// the next one starts. The odd-order families are walked from the centre
/// `c = v/2`; the walk of `H'_i` starts toward `c+2i-1` and that of `H_i`
/// toward `c+2i` (toward `∞` for `H_0`), which again chains end to start.
pub(crate) fn cycle_walks(d: &HamDecomposition) -> Vec<Walk> {
    let m = d.t - 1;
    let inf = d.infinity();
    match d.variant {
        DecompVariant::EvenT | DecompVariant::V6k1 => (0..m as usize)
            .map(|s| {
                let s32 = s as u32;
                let first = if s32 == 0 { inf } else { (2 * s32) % m };
                Walk { cycle: s, start: 0, first }
            })
            .collect(),
        DecompVariant::OddT | DecompVariant::V6k4 => {
            let c = m / 2;
            let half = m / 2;
            let (plain, primed): (Box<dyn Fn(u32) -> usize>, Box<dyn Fn(u32) -> usize>) =
                if d.variant == DecompVariant::OddT {
                    (Box::new(|i| i as usize), Box::new(move |i| (half + i) as usize))
                } else {
                    (Box::new(|i| (2 * i + 1) as usize), Box::new(|i| (2 * i) as usize))
                };
            let mut walks = Vec::with_capacity(m as usize);
            for i in 0..half {
                walks.push(Walk { cycle: primed(i), start: c, first: (c + 2 * i + m - 1) % m });
                let first = if i == 0 { inf } else { (c + 2 * i) % m };
                walks.push(Walk { cycle: plain(i), start: c, first });
            }
            walks
        }
    }
}

/// Expands walks into triples `{s, offset+a, offset+b}`, one per edge in walk order.
pub(crate) fn walk_triples(d: &HamDecomposition, walks: &[Walk], offset: Point) -> Result<Vec<Triple>> {
    let mut out = Vec::with_capacity(walks.len() * d.t as usize);
    for w in walks {
        let seq = d.cycles[w.cycle]
            .walk_from(w.start, w.first)
            .ok_or_else(|| Error::Construction(format!("{{{},{}}} is not an edge of H_{}", w.start, w.first, w.cycle)))?;
        let n = seq.len();
        for i in 0..n {
            let (a, b) = (seq[i], seq[(i + 1) % n]);
            out.push(Triple::new(w.cycle as Point, offset + a, offset + b));
        }
    }
    Ok(out)
}

/// Removes `removed` from a cyclic sequence and returns the maximal runs left.
pub(crate) fn split_cycle(cycle: &[Triple], removed: &[Triple]) -> Result<Vec<Vec<Triple>>> {
    let cut: HashSet<&Triple> = removed.iter().collect();
    let Some(first_cut) = cycle.iter().position(|t| cut.contains(t)) else {
        return Err(Error::Construction("no block of the cut set lies on the cycle".into()));
    };
    let hits = cycle.iter().filter(|t| cut.contains(t)).count();
    if hits != removed.len() {
        return Err(Error::Construction(format!("{} of {} cut blocks lie on the cycle", hits, removed.len())));
    }
    let n = cycle.len();
    let mut runs = Vec::new();
    let mut current = Vec::new();
    for k in 1..=n {
        let t = &cycle[(first_cut + k) % n];
        if cut.contains(t) {
            if !current.is_empty() {
                runs.push(std::mem::take(&mut current));
            }
        } else {
            current.push(*t);
        }
    }
    Ok(runs)
}

/// A slot of a cycle template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Piece {
    Block(Triple),
    /// Some path from the pool, oriented to fit its neighbours.
    Path,
}

/// Fills the `Path` slots of a cyclic template with the given paths.
///
/// Each path is used once, in whichever direction makes its ends adjacent
/// to the neighbouring blocks. Neighbours of a `Path` slot must be blocks.
pub(crate) fn assemble(template: &[Piece], paths: Vec<Vec<Triple>>) -> Result<Vec<Triple>> {
    let n = template.len();
    let slots: Vec<usize> = (0..n).filter(|&i| template[i] == Piece::Path).collect();
    if slots.len() != paths.len() {
        return Err(Error::Construction(format!("{} path slots for {} paths", slots.len(), paths.len())));
    }
    let neighbour = |i: usize| match &template[i % n] {
        Piece::Block(t) => Ok(*t),
        Piece::Path => Err(Error::Construction("two path slots are adjacent".into())),
    };
    let mut ends = Vec::with_capacity(slots.len());
    for &s in &slots {
        ends.push((neighbour(s + n - 1)?, neighbour(s + 1)?));
    }
    let mut choice: Vec<Option<(usize, bool)>> = vec![None; slots.len()];
    let mut used = vec![false; paths.len()];
    if !fill(0, &ends, &paths, &mut used, &mut choice) {
        return Err(Error::Construction("paths do not fit the template".into()));
    }
    let mut out = Vec::with_capacity(n + paths.iter().map(Vec::len).sum::<usize>());
    let mut slot = 0;
    for piece in template {
        match piece {
            Piece::Block(t) => out.push(*t),
            Piece::Path => {
                let (p, reversed) = choice[slot].expect("filled");
                if reversed {
                    out.extend(paths[p].iter().rev());
                } else {
                    out.extend(paths[p].iter());
                }
                slot += 1;
            }
        }
    }
    Ok(out)
}

fn fill(
    slot: usize,
    ends: &[(Triple, Triple)],
    paths: &[Vec<Triple>],
    used: &mut [bool],
    choice: &mut [Option<(usize, bool)>],
) -> bool {
    if slot == ends.len() {
        return true;
    }
    let (before, after) = ends[slot];
    for p in 0..paths.len() {
        if used[p] {
            continue;
        }
        let (head, tail) = (paths[p][0], *paths[p].last().unwrap());
        for reversed in [false, true] {
            let (a, b) = if reversed { (tail, head) } else { (head, tail) };
            if adjacent(&before, &a) && adjacent(&b, &after) {
                used[p] = true;
                choice[slot] = Some((p, reversed));
                if fill(slot + 1, ends, paths, used, choice) {
                    return true;
                }
                used[p] = false;
                choice[slot] = None;
            }
        }
    }
    false
}

/// Replaces each listed block `{a,b,c}` on a cyclic sequence by the three
/// triples `pair ∪ {z}`, ordered so the first keeps the pair shared with the
/// predecessor and the last the pair shared with the successor.
pub(crate) fn expand_triangles(cycle: &[Triple], blow_up: &HashMap<Triple, Point>) -> Result<Vec<Triple>> {
    let n = cycle.len();
    let mut out = Vec::with_capacity(n + 2 * blow_up.len());
    for (i, t) in cycle.iter().enumerate() {
        let Some(&z) = blow_up.get(t) else {
            out.push(*t);
            continue;
        };
        let before = cycle[(i + n - 1) % n];
        let after = cycle[(i + 1) % n];
        let x = t.shared_pair(&before).ok_or_else(|| Error::Construction(format!("{t} and {before} are not adjacent")))?;
        let y = t.shared_pair(&after).ok_or_else(|| Error::Construction(format!("{t} and {after} are not adjacent")))?;
        if x == y {
            return Err(Error::Construction(format!("both neighbours of {t} share {x:?}")));
        }
        let w = t.pairs().into_iter().find(|p| *p != x && *p != y).expect("three pairs");
        out.extend([Triple::from_pair(x, z), Triple::from_pair(w, z), Triple::from_pair(y, z)]);
    }
    Ok(out)
}

/// The cyclic sequence rotated so that it starts right after `t`, without `t`.
pub(crate) fn path_after(cycle: &[Triple], t: &Triple) -> Option<Vec<Triple>> {
    let at = cycle.iter().position(|x| x == t)?;
    let n = cycle.len();
    Some((1..n).map(|k| cycle[(at + k) % n]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{decompose, decompose_for_2v2};

    fn is_cycle(seq: &[Triple]) -> bool {
        let n = seq.len();
        (0..n).all(|i| adjacent(&seq[i], &seq[(i + 1) % n]))
    }

    #[test]
    fn walks_give_hamilton_cycles() {
        for t in 5..=24 {
            let d = decompose(t).unwrap();
            let tr = walk_triples(&d, &cycle_walks(&d), 100).unwrap();
            assert_eq!(tr.len(), ((t - 1) * t) as usize);
            assert!(is_cycle(&tr), "t = {t}");
            assert_eq!(tr.iter().collect::<HashSet<_>>().len(), tr.len());
        }
        for v in [7, 13, 16, 19, 22, 25, 28] {
            let d = decompose_for_2v2(v).unwrap();
            let tr = walk_triples(&d, &cycle_walks(&d), v).unwrap();
            assert!(is_cycle(&tr), "v = {v}");
        }
    }

    #[test]
    fn triangle_expansion_keeps_adjacency() {
        let seq = vec![Triple::new(0, 1, 3), Triple::new(0, 1, 2), Triple::new(1, 2, 4), Triple::new(1, 3, 4)];
        let map = HashMap::from([(Triple::new(0, 1, 2), 9)]);
        let out = expand_triangles(&seq, &map).unwrap();
        assert_eq!(out.len(), 6);
        assert!(is_cycle(&out));
    }

    #[test]
    fn assemble_orients_paths() {
        let a = Triple::new(0, 1, 2);
        let b = Triple::new(2, 3, 4);
        let p = vec![Triple::new(0, 1, 5), Triple::new(1, 3, 5), Triple::new(1, 3, 4)];
        let q = vec![Triple::new(2, 4, 8), Triple::new(0, 2, 8)];
        let mut p_rev = p.clone();
        p_rev.reverse();
        let out = assemble(&[Piece::Block(a), Piece::Path, Piece::Block(b), Piece::Path], vec![q, p_rev]).unwrap();
        assert_eq!(out.len(), 7);
        assert!(is_cycle(&out));
    }
}
