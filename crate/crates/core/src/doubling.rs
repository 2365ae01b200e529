//! The 2v+1 and 2v+2 constructions.
//!
//! Points of the input keep labels `0..v` (after relabeling), the cyclic
//! part `Z_v` of the decomposition becomes `v..2v`, `∞` becomes `2v` and
//! the blow-up point of 2v+2 becomes `2v+1`.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::certificate::HamiltonCertificate;
use crate::construct::{check_input, finish, neighbour_roles, role_permutation, Constructed};
use crate::decomp::{decompose, decompose_for_2v2, mandated_edges};
use crate::design::{Point, Triple, TripleSystem};
use crate::error::{Error, Result};
use crate::ppc::{plan_attach, AttachPlan};
use crate::stitch::{assemble, cycle_walks, expand_triangles, path_after, split_cycle, walk_triples, Piece};

/// The relabeled input of a doubling step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoublingContext {
    /// The special block after relabeling.
    pub special: Triple,
    /// `perm[x]` is the new label of input point `x`.
    pub perm: Vec<Point>,
    pub design: TripleSystem,
    /// The relabeled certificate as a block sequence starting at `special`.
    pub cycle: Vec<Triple>,
}

impl DoublingContext {
    /// The Hamilton path left after deleting the special block, running from
    /// its successor to its predecessor.
    pub fn path(&self) -> Vec<Triple> {
        path_after(&self.cycle, &self.special).expect("special block lies on the cycle")
    }
}

fn relabel_context(ts: &TripleSystem, cert: &HamiltonCertificate, at: usize, roles: [(Point, Point); 3]) -> DoublingContext {
    let perm = role_permutation(ts.order(), &roles);
    let design = ts.relabel(&perm);
    let order = cert.order();
    let n = order.len();
    let cycle: Vec<Triple> = (0..n).map(|k| design.blocks()[order[(at + k) % n]]).collect();
    DoublingContext { special: cycle[0], perm, design, cycle }
}

/// Relabels `ts` so that certificate position 0 becomes the 2v+1 special block.
pub fn doubling_context(ts: &TripleSystem, cert: &HamiltonCertificate) -> Result<DoublingContext> {
    check_input(ts, cert)?;
    let v = ts.order();
    let cycle = cert.triples(ts);
    let n = cycle.len();
    let (common, next_only, prev_only) = neighbour_roles(&cycle[0], &cycle[1], &cycle[n - 1])?;
    let roles = if v % 2 == 1 {
        [(common, 4), (next_only, 3), (prev_only, 5)]
    } else {
        let c = v / 2;
        [(common, c + 1), (next_only, 0), (prev_only, 1)]
    };
    Ok(relabel_context(ts, cert, 0, roles))
}

/// Builds a TTS(2v+1) with a Hamiltonian 2-BIG from a TTS(v) and a certificate.
///
/// ```
/// use graytts::base::BaseLibrary;
/// use graytts::doubling::construct_2v1;
/// let (ts, cert) = BaseLibrary::get(7).unwrap();
/// let out = construct_2v1(&ts, &cert).unwrap();
/// assert_eq!(out.design.order(), 15);
/// assert_eq!(out.design.block_count(), 70);
/// ```
pub fn construct_2v1(ts: &TripleSystem, cert: &HamiltonCertificate) -> Result<Constructed> {
    let v = ts.order();
    check_input(ts, cert)?;
    if v % 2 == 1 && v < 7 {
        return Err(Error::OrderOutOfRange { v, reason: "2v+1 needs v >= 7 for odd v" });
    }
    if v < 4 {
        return Err(Error::OrderOutOfRange { v, reason: "2v+1 needs v >= 4" });
    }
    let ctx = doubling_context(ts, cert)?;
    let z = |x: u32| v + x;
    let (excluded, type3, type4) = if v % 2 == 1 {
        (
            [Triple::new(3, z(2), z(4)), Triple::new(4, z(2), z(6)), Triple::new(5, z(4), z(6))],
            [Triple::new(z(2), 3, 4), Triple::new(z(4), 3, 5), Triple::new(z(6), 4, 5)],
            Triple::new(z(2), z(4), z(6)),
        )
    } else {
        let c = v / 2;
        (
            [Triple::new(0, z(0), z(1)), Triple::new(1, z(1), z(2)), Triple::new(c + 1, z(0), z(2))],
            [Triple::new(z(0), 0, c + 1), Triple::new(z(1), 0, 1), Triple::new(z(2), c + 1, 1)],
            Triple::new(z(0), z(1), z(2)),
        )
    };

    let type1: Vec<Triple> = ctx.path();
    let decomp = decompose(v + 1)?;
    let walk = walk_triples(&decomp, &cycle_walks(&decomp), v)?;
    let cut: HashSet<Triple> = excluded.iter().copied().collect();
    let type2: Vec<Triple> = walk.iter().filter(|t| !cut.contains(t)).copied().collect();

    let runs = split_cycle(&walk, &excluded)?;
    let mut paths = vec![type1.clone()];
    paths.extend(runs);
    let template = if v % 2 == 1 {
        vec![
            Piece::Path,
            Piece::Block(type3[2]),
            Piece::Path,
            Piece::Block(type4),
            Piece::Path,
            Piece::Block(type3[1]),
            Piece::Path,
            Piece::Block(type3[0]),
        ]
    } else {
        vec![
            Piece::Path,
            Piece::Block(type3[2]),
            Piece::Path,
            Piece::Block(type3[1]),
            Piece::Path,
            Piece::Block(type4),
            Piece::Path,
            Piece::Block(type3[0]),
        ]
    };
    let cycle = assemble(&template, paths)?;
    finish(
        2 * v + 1,
        vec![("type1", type1), ("type2", type2), ("type3", type3.to_vec()), ("type4", vec![type4])],
        &cycle,
    )
}

/// Builds a TTS(2v+2) with a Hamiltonian 2-BIG from a TTS(v), `v ≡ 1 (mod 6)`
/// with `v ≥ 7` or `v ≡ 4 (mod 6)` with `v ≥ 16`.
///
/// ```
/// use graytts::base::BaseLibrary;
/// use graytts::doubling::construct_2v2;
/// let (ts, cert) = BaseLibrary::get(7).unwrap();
/// let out = construct_2v2(&ts, &cert).unwrap();
/// assert_eq!(out.design.block_count(), 80);
/// ```
pub fn construct_2v2(ts: &TripleSystem, cert: &HamiltonCertificate) -> Result<Constructed> {
    check_input(ts, cert)?;
    let plan = plan_attach(ts, cert)?;
    construct_2v2_with(ts, cert, &plan)
}

struct Steps {
    /// Step 2 walk, including the three excluded triples.
    walk: Vec<Triple>,
    excluded: Vec<Triple>,
    step3: Vec<Triple>,
    template: Vec<Piece>,
}

/// Steps 2 and 3 for attach roles `[p, q, r]` given in output labels.
fn steps(v: u32, [p, q, r]: [Point; 3]) -> Result<Steps> {
    let mandated = mandated_edges(v).ok_or(Error::OrderOutOfRange {
        v,
        reason: "2v+2 needs v = 1 (mod 6), v >= 7 or v = 4 (mod 6), v >= 16",
    })?;
    let zp = |x: u32| v + x;
    let decomp = decompose_for_2v2(v)?;
    let walk = walk_triples(&decomp, &cycle_walks(&decomp), v)?;
    let excluded: Vec<Triple> = mandated.iter().zip([p, q, r]).map(|(&(_, (a, b)), x)| Triple::new(x, zp(a), zp(b))).collect();
    let (a, b, c) = if v % 6 == 4 {
        let k = (v - 4) / 6;
        (zp(k - 2), zp(k - 1), zp(k))
    } else {
        (zp(3), zp(1), zp(v - 1))
    };
    let abc = Triple::new(a, b, c);
    let (pq, second, third) = if v % 6 == 4 {
        (Triple::new(a, p, q), Triple::new(b, p, r), Triple::new(c, q, r))
    } else {
        (Triple::new(a, p, q), Triple::new(b, q, r), Triple::new(c, p, r))
    };
    let template = if v % 6 == 4 {
        vec![
            Piece::Path,
            Piece::Block(pq),
            Piece::Path,
            Piece::Block(abc),
            Piece::Path,
            Piece::Block(second),
            Piece::Path,
            Piece::Block(third),
        ]
    } else {
        vec![
            Piece::Path,
            Piece::Block(pq),
            Piece::Path,
            Piece::Block(second),
            Piece::Path,
            Piece::Block(abc),
            Piece::Path,
            Piece::Block(third),
        ]
    };
    Ok(Steps { walk, excluded, step3: vec![pq, second, third, abc], template })
}

/// All blocks of the intermediate TTS(2v+1), given the relabeled input,
/// its special block and `[p, q, r]` in output labels.
pub(crate) fn intermediate_blocks(relabeled: &TripleSystem, special: Triple, pqr: [Point; 3]) -> Result<Vec<Triple>> {
    let v = relabeled.order();
    let s = steps(v, pqr)?;
    let cut: HashSet<Triple> = s.excluded.iter().copied().collect();
    let mut out: Vec<Triple> = relabeled.blocks().iter().filter(|&&t| t != special).copied().collect();
    out.extend(s.walk.iter().filter(|t| !cut.contains(t)));
    out.extend(s.step3);
    Ok(out)
}

/// As [`construct_2v2`], with an attach plan computed beforehand.
pub fn construct_2v2_with(ts: &TripleSystem, cert: &HamiltonCertificate, plan: &AttachPlan) -> Result<Constructed> {
    let v = ts.order();
    let blow = 2 * v + 1;
    let design = ts.relabel(&plan.assignment);
    let special = plan.special_triple.map(|x| plan.assignment[x as usize]);
    let pqr = plan.roles.map(|x| plan.assignment[x as usize]);
    let order = cert.order();
    let at = order
        .iter()
        .position(|&i| design.blocks()[i] == special)
        .ok_or_else(|| Error::Construction("special block missing from certificate".into()))?;
    let n = order.len();
    let e_cycle: Vec<Triple> = (0..n).map(|k| design.blocks()[order[(at + k) % n]]).collect();
    let step1 = path_after(&e_cycle, &special).expect("special block is on the cycle");

    let s = steps(v, pqr)?;
    let cut: HashSet<Triple> = s.excluded.iter().copied().collect();
    let step2: Vec<Triple> = s.walk.iter().filter(|t| !cut.contains(t)).copied().collect();
    let runs = split_cycle(&s.walk, &s.excluded)?;
    let mut paths = vec![step1.clone()];
    paths.extend(runs);
    let prime_cycle = assemble(&s.template, paths)?;

    let pi: HashSet<Triple> = plan.pi.iter().copied().collect();
    let on_cycle: HashSet<&Triple> = prime_cycle.iter().collect();
    if let Some(t) = plan.pi.iter().find(|t| !on_cycle.contains(t)) {
        return Err(Error::Schedule(format!("{t} is not a block of the intermediate design")));
    }
    let blow_up: HashMap<Triple, Point> = plan.pi.iter().map(|&t| (t, blow)).collect();
    let cycle = expand_triangles(&prime_cycle, &blow_up)?;

    let mut groups = vec![("step1", step1), ("step2", step2), ("step3", s.step3)];
    for g in groups.iter_mut() {
        g.1.retain(|t| !pi.contains(t));
    }
    let triangles = plan.pi.iter().flat_map(|t| t.pairs().map(|pr| Triple::from_pair(pr, blow))).collect();
    groups.push(("blow_up", triangles));
    finish(2 * v + 2, groups, &cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::BaseLibrary;
    use crate::design::tts_block_count;

    #[test]
    fn doubles_every_base_design() {
        for v in BaseLibrary::ORDERS {
            let (ts, cert) = BaseLibrary::get(v).unwrap();
            let out = construct_2v1(&ts, &cert).unwrap_or_else(|e| panic!("v = {v}: {e}"));
            assert_eq!(out.design.block_count(), tts_block_count(2 * v + 1));
            let b = tts_block_count(v);
            assert_eq!(out.census, vec![("type1", b - 1), ("type2", (v * (v + 1) - 3) as usize), ("type3", 3), ("type4", 1)]);
        }
    }

    #[test]
    fn doubles_plus_two() {
        for v in [7, 13] {
            let (ts, cert) = BaseLibrary::get(v).unwrap();
            let out = construct_2v2(&ts, &cert).unwrap_or_else(|e| panic!("v = {v}: {e}"));
            assert_eq!(out.design.block_count(), tts_block_count(2 * v + 2));
        }
        let (ts, cert) = BaseLibrary::get(10).unwrap();
        assert!(matches!(construct_2v2(&ts, &cert), Err(Error::OrderOutOfRange { .. })));
    }
}
