//! The 3v construction and its transversal extensions 3v+1 and 3v+3.
//!
//! Point `(x, s)` of `Z_v × {1,2,3}` is `(s-1)v + x`; the added points are
//! `3v` (3v+1) or `3v, 3v+1, 3v+2` (3v+3).

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::certificate::HamiltonCertificate;
use crate::construct::{check_input, finish, role_permutation, Constructed};
use crate::design::{Point, Triple, TripleSystem};
use crate::error::{Error, Result};
use crate::graph::build_ibig;
use crate::search::find_alternate_cycle;
use crate::stitch::{assemble, expand_triangles, path_after, split_cycle, Piece};

const ALTERNATE_STEPS: u64 = 50_000_000;

/// `i ∘ j = i + j + offset (mod v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CyclicQuasigroup {
    pub v: u32,
    pub offset: u32,
}

impl CyclicQuasigroup {
    pub fn op(&self, i: u32, j: u32) -> u32 {
        (i + j + self.offset) % self.v
    }

    /// Whether every row and column of the table is a permutation.
    pub fn is_latin(&self) -> bool {
        let v = self.v;
        (0..v).all(|i| {
            let mut row = vec![false; v as usize];
            let mut col = vec![false; v as usize];
            (0..v).all(|j| {
                !std::mem::replace(&mut row[self.op(i, j) as usize], true)
                    && !std::mem::replace(&mut col[self.op(j, i) as usize], true)
            })
        })
    }
}

/// Cells `(row, column)` of a latin square, one per row and column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transversal {
    pub cells: Vec<(u32, u32)>,
}

impl Transversal {
    /// The cells `(b + shift, b)`.
    pub fn diagonal(v: u32, shift: u32) -> Transversal {
        Transversal { cells: (0..v).map(|b| ((b + shift) % v, b)).collect() }
    }

    /// One cell per row and column, all symbols distinct.
    pub fn is_transversal_of(&self, q: &CyclicQuasigroup) -> bool {
        let v = q.v as usize;
        let mut seen = [vec![false; v], vec![false; v], vec![false; v]];
        self.cells.len() == v
            && self.cells.iter().all(|&(i, j)| {
                let s = q.op(i, j);
                [i, j, s].iter().zip(seen.iter_mut()).all(|(&x, used)| !std::mem::replace(&mut used[x as usize], true))
            })
    }
}

/// The relabeled input together with the two Hamilton cycles used by 3v.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriplingContext {
    pub perm: Vec<Point>,
    pub design: TripleSystem,
    /// Block sequences of the two cycles; both pass through `{0, 1, v-1}`.
    pub h1: Vec<Triple>,
    pub h2: Vec<Triple>,
}

/// Finds a second Hamilton cycle and relabels so that at `{v-1, 0, 1}` the
/// first cycle uses the pairs `{v-1,0}, {v-1,1}` and the second `{v-1,0}, {0,1}`.
pub fn tripling_context(ts: &TripleSystem, cert: &HamiltonCertificate) -> Result<TriplingContext> {
    check_input(ts, cert)?;
    let v = ts.order();
    let g = build_ibig(ts, 2)?;
    let h1 = cert.order().to_vec();
    let h2 = find_alternate_cycle(&g, &h1, ALTERNATE_STEPS)?;
    let n = h1.len();
    let incident = |h: &[usize]| {
        let mut out = vec![[(0, 0); 2]; n];
        for k in 0..n {
            let b = ts.blocks()[h[k]];
            let before = b.shared_pair(&ts.blocks()[h[(k + n - 1) % n]]).expect("adjacent");
            let after = b.shared_pair(&ts.blocks()[h[(k + 1) % n]]).expect("adjacent");
            let mut pr = [before, after];
            pr.sort_unstable();
            out[h[k]] = pr;
        }
        out
    };
    let (i1, i2) = (incident(&h1), incident(&h2));
    let at = (0..n)
        .find(|&b| i1[b] != i2[b])
        .ok_or_else(|| Error::Construction("the two cycles use the same pairs at every block".into()))?;
    let x = *i1[at].iter().find(|p| i2[at].contains(p)).expect("two of three pairs are shared");
    let y = *i1[at].iter().find(|p| **p != x).expect("two pairs");
    let a = if x.0 == y.0 || x.0 == y.1 { x.0 } else { x.1 };
    let b = if x.0 == a { x.1 } else { x.0 };
    let c = ts.blocks()[at].points().into_iter().find(|&p| p != a && p != b).expect("three points");
    let perm = role_permutation(v, &[(a, v - 1), (b, 0), (c, 1)]);
    let design = ts.relabel(&perm);
    let seq = |h: &[usize]| h.iter().map(|&i| design.blocks()[i]).collect::<Vec<_>>();
    Ok(TriplingContext { h1: seq(&h1), h2: seq(&h2), perm, design })
}

struct Core {
    v: u32,
    groups: Vec<(&'static str, Vec<Triple>)>,
    cycle: Vec<Triple>,
}

fn pt(v: u32, x: u32, s: u32) -> Point {
    (s - 1) * v + x % v
}

/// The block `{(i,1), (j,2), (i+j+offset, 3)}`.
fn latin_block(v: u32, i: u32, j: u32, offset: u32) -> Triple {
    let (i, j) = (i % v, j % v);
    Triple::new(pt(v, i, 1), pt(v, j, 2), pt(v, i + j + offset, 3))
}

/// The six paths covering the Type 2 and Type 3 blocks.
fn latin_paths(v: u32) -> [Vec<Triple>; 6] {
    let m = |x: i64| x.rem_euclid(v as i64) as u32;
    // blocks on symbol k: Type 2 at row i is (i, k-1-i), Type 3 is (i, k-i)
    let s2 = |k: i64, i: i64| latin_block(v, m(i), m(k - 1 - i), 1);
    let s3 = |k: i64, i: i64| latin_block(v, m(i), m(k - i), 0);
    let vi = v as i64;
    let p1 = vec![latin_block(v, 0, 0, 1)];
    let p6 = vec![latin_block(v, 1, v - 1, 1)];
    let p5 = vec![latin_block(v, 0, v - 1, 1), latin_block(v, 0, 0, 0), latin_block(v, v - 1, 0, 1)];
    let mut p3 = Vec::new();
    for i in (1..=vi - 2).rev() {
        p3.extend([s2(vi - 1, i), s3(vi - 1, i)]);
    }
    p3.push(s2(vi - 1, 0));
    let mut p4 = Vec::new();
    for i in (2..=vi - 2).rev() {
        p4.extend([s2(0, i), s3(0, i)]);
    }
    p4.push(s2(0, 1));
    let mut p2 = Vec::new();
    for i in (2..=vi - 1).rev() {
        p2.extend([s2(1, i), s3(1, i)]);
    }
    for k in 2..=vi - 2 {
        for step in 0..vi {
            p2.extend([s2(k, k - step), s3(k, k - step)]);
        }
    }
    p2.push(s2(vi - 1, vi - 1));
    [p1, p2, p3, p4, p5, p6]
}

fn core_3v(ts: &TripleSystem, cert: &HamiltonCertificate) -> Result<Core> {
    let v = ts.order();
    if v < 4 {
        return Err(Error::OrderOutOfRange { v, reason: "3v needs v >= 4" });
    }
    let ctx = tripling_context(ts, cert)?;
    let special = Triple::new(0, 1, v - 1);
    let h1 = path_after(&ctx.h1, &special).expect("special block on H1");
    let h2 = path_after(&ctx.h2, &special).expect("special block on H2");
    let copy = |path: &[Triple], s: u32| path.iter().map(|t| t.map(|x| pt(v, x, s))).collect::<Vec<_>>();
    let (p7, p8, p9) = (copy(&h1, 1), copy(&h1, 2), copy(&h2, 3));

    let mut type1 = Vec::with_capacity(3 * h1.len());
    for s in 1..=3 {
        type1.extend(ctx.design.blocks().iter().filter(|&&t| t != special).map(|t| t.map(|x| pt(v, x, s))));
    }
    let type2: Vec<Triple> = (0..v).flat_map(|i| (0..v).map(move |j| latin_block(v, i, j, 1))).collect();
    let q = |x: u32, s: u32| pt(v, x % v, s);
    let l = v - 1;
    let excluded: HashSet<Triple> = [
        Triple::new(q(0, 1), q(1, 2), q(1, 3)),
        Triple::new(q(1, 1), q(0, 2), q(1, 3)),
        Triple::new(q(0, 1), q(l, 2), q(l, 3)),
        Triple::new(q(l, 1), q(0, 2), q(l, 3)),
        Triple::new(q(1, 1), q(l, 2), q(0, 3)),
        Triple::new(q(l, 1), q(1, 2), q(0, 3)),
    ]
    .into_iter()
    .collect();
    let type3: Vec<Triple> = (0..v)
        .flat_map(|i| (0..v).map(move |j| latin_block(v, i, j, 0)))
        .filter(|t| !excluded.contains(t))
        .collect();
    let f = [
        Triple::new(q(0, 1), q(1, 1), q(1, 3)),
        Triple::new(q(1, 1), q(0, 2), q(l, 2)),
        Triple::new(q(0, 1), q(1, 2), q(l, 2)),
        Triple::new(q(l, 1), q(0, 2), q(1, 2)),
        Triple::new(q(l, 2), q(0, 3), q(l, 3)),
        Triple::new(q(1, 2), q(0, 3), q(1, 3)),
        Triple::new(q(1, 1), q(l, 1), q(0, 3)),
        Triple::new(q(0, 1), q(l, 1), q(l, 3)),
        Triple::new(q(0, 2), q(1, 3), q(l, 3)),
    ];
    let template: Vec<Piece> = f.iter().flat_map(|&t| [Piece::Path, Piece::Block(t)]).collect();
    let [p1, p2, p3, p4, p5, p6] = latin_paths(v);
    let cycle = assemble(&template, vec![p1, p6, p8, p5, p2, p9, p4, p7, p3])?;
    Ok(Core { v, groups: vec![("type1", type1), ("type2", type2), ("type3", type3), ("type4", f.to_vec())], cycle })
}

/// Builds a TTS(3v) with a Hamiltonian 2-BIG from a TTS(v), `v ≥ 4`.
///
/// ```
/// use graytts::base::BaseLibrary;
/// use graytts::tripling::construct_3v;
/// let (ts, cert) = BaseLibrary::get(4).unwrap();
/// let out = construct_3v(&ts, &cert).unwrap();
/// assert_eq!(out.design.block_count(), 44);
/// ```
pub fn construct_3v(ts: &TripleSystem, cert: &HamiltonCertificate) -> Result<Constructed> {
    let core = core_3v(ts, cert)?;
    finish(3 * core.v, core.groups, &core.cycle)
}

fn check_odd(v: u32, what: &'static str) -> Result<()> {
    if v % 2 == 0 || v < 7 {
        return Err(Error::OrderOutOfRange { v, reason: what });
    }
    Ok(())
}

/// Records the Type 2 blocks on `cells` for expansion through `z` and
/// returns their replacement triples.
fn blow_up_cells(v: u32, cells: &[(u32, u32)], z: Point, map: &mut HashMap<Triple, Point>) -> Vec<Triple> {
    let mut added = Vec::with_capacity(3 * cells.len());
    for &(i, j) in cells {
        let t = latin_block(v, i, j, 1);
        map.insert(t, z);
        added.extend(t.pairs().map(|p| Triple::from_pair(p, z)));
    }
    added
}

fn remove_from_groups(core: &mut Core, gone: &HashMap<Triple, Point>) {
    for g in core.groups.iter_mut() {
        g.1.retain(|t| !gone.contains_key(t));
    }
}

/// Builds a TTS(3v+1) with a Hamiltonian 2-BIG from a TTS(v), `v` odd, `v ≥ 7`.
///
/// ```
/// use graytts::base::BaseLibrary;
/// use graytts::tripling::construct_3v1;
/// let (ts, cert) = BaseLibrary::get(7).unwrap();
/// assert_eq!(construct_3v1(&ts, &cert).unwrap().design.block_count(), 154);
/// ```
pub fn construct_3v1(ts: &TripleSystem, cert: &HamiltonCertificate) -> Result<Constructed> {
    let v = ts.order();
    check_odd(v, "3v+1 needs odd v >= 7")?;
    let mut core = core_3v(ts, cert)?;
    let mut map = HashMap::new();
    let added = blow_up_cells(v, &Transversal::diagonal(v, 0).cells, 3 * v, &mut map);
    remove_from_groups(&mut core, &map);
    let cycle = expand_triangles(&core.cycle, &map)?;
    core.groups.push(("transversal", added));
    finish(3 * v + 1, core.groups, &cycle)
}

/// Builds a TTS(3v+3) with a Hamiltonian 2-BIG from a TTS(v), `v` odd, `v ≥ 7`.
///
/// ```
/// use graytts::base::BaseLibrary;
/// use graytts::tripling::construct_3v3;
/// let (ts, cert) = BaseLibrary::get(7).unwrap();
/// assert_eq!(construct_3v3(&ts, &cert).unwrap().design.block_count(), 184);
/// ```
pub fn construct_3v3(ts: &TripleSystem, cert: &HamiltonCertificate) -> Result<Constructed> {
    let v = ts.order();
    check_odd(v, "3v+3 needs odd v >= 7")?;
    let mut core = core_3v(ts, cert)?;
    let (i1, i2, i3) = (3 * v, 3 * v + 1, 3 * v + 2);
    let mut map = HashMap::new();
    let mut added = Vec::new();
    for (shift, z) in [(0, i1), (2, i2), (1, i3)] {
        added.extend(blow_up_cells(v, &Transversal::diagonal(v, shift).cells, z, &mut map));
    }
    remove_from_groups(&mut core, &map);
    let expanded = expand_triangles(&core.cycle, &map)?;

    let q = |x: u32, s: u32| pt(v, x, s);
    let deleted = [Triple::new(i1, q(0, 2), q(1, 3)), Triple::new(q(1, 1), i2, q(1, 3)), Triple::new(q(1, 1), q(0, 2), i3)];
    added.retain(|t| !deleted.contains(t));
    let trade = vec![
        Triple::new(q(1, 1), q(0, 2), q(1, 3)),
        Triple::new(i1, i2, q(1, 3)),
        Triple::new(i1, q(0, 2), i3),
        Triple::new(q(1, 1), i2, i3),
        Triple::new(i1, i2, i3),
    ];
    let paths = split_cycle(&expanded, &deleted)?;
    let template = vec![
        Piece::Block(trade[4]),
        Piece::Block(trade[1]),
        Piece::Path,
        Piece::Block(trade[2]),
        Piece::Path,
        Piece::Block(trade[0]),
        Piece::Path,
        Piece::Block(trade[3]),
    ];
    let cycle = assemble(&template, paths)?;
    core.groups.push(("transversal", added));
    core.groups.push(("trade", trade));
    finish(3 * v + 3, core.groups, &cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::BaseLibrary;
    use crate::design::tts_block_count;
    use crate::stitch::adjacent;

    #[test]
    fn quasigroups_and_diagonals() {
        for v in [4, 7, 9] {
            for offset in [0, 1] {
                assert!(CyclicQuasigroup { v, offset }.is_latin());
            }
        }
        let q2 = CyclicQuasigroup { v: 7, offset: 1 };
        for shift in 0..3 {
            assert!(Transversal::diagonal(7, shift).is_transversal_of(&q2));
        }
        assert!(!Transversal::diagonal(4, 0).is_transversal_of(&CyclicQuasigroup { v: 4, offset: 1 }));
    }

    #[test]
    fn latin_paths_cover_types_two_and_three() {
        for v in 4..=15 {
            let paths = latin_paths(v);
            let all: Vec<Triple> = paths.iter().flatten().copied().collect();
            assert_eq!(all.len(), (2 * v * v - 6) as usize);
            assert_eq!(all.iter().collect::<HashSet<_>>().len(), all.len());
            for p in &paths {
                assert!(p.windows(2).all(|w| adjacent(&w[0], &w[1])), "v = {v}");
            }
        }
    }

    #[test]
    fn triples_base_designs() {
        for v in [4, 7, 9, 10, 13] {
            let (ts, cert) = BaseLibrary::get(v).unwrap();
            let out = construct_3v(&ts, &cert).unwrap_or_else(|e| panic!("v = {v}: {e}"));
            assert_eq!(out.design.block_count(), tts_block_count(3 * v));
            let n = (v * v) as usize;
            assert_eq!(out.census, vec![("type1", n - v as usize - 3), ("type2", n), ("type3", n - 6), ("type4", 9)]);
        }
    }

    #[test]
    fn transversal_extensions() {
        for v in [7, 9, 13] {
            let (ts, cert) = BaseLibrary::get(v).unwrap();
            let a = construct_3v1(&ts, &cert).unwrap_or_else(|e| panic!("3v+1, v = {v}: {e}"));
            assert_eq!(a.design.block_count(), tts_block_count(3 * v + 1));
            let b = construct_3v3(&ts, &cert).unwrap_or_else(|e| panic!("3v+3, v = {v}: {e}"));
            assert_eq!(b.design.block_count(), tts_block_count(3 * v + 3));
        }
        let (ts, cert) = BaseLibrary::get(10).unwrap();
        assert!(construct_3v1(&ts, &cert).is_err());
        assert!(construct_3v3(&ts, &cert).is_err());
    }
}
