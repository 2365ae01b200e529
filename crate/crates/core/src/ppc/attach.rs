//! The attach planner: which point of a TTS(v) joins which Hamilton cycle of
//! 2K_{v+1}, and a parallel class of the resulting TTS(2v+1).

use serde::Serialize;

use crate::certificate::HamiltonCertificate;
use crate::construct::{check_input, neighbour_roles};
use crate::decomp::{decompose_for_2v2, mandated_edges, HamDecomposition};
use crate::design::{pair, Point, Triple, TripleSystem};
use crate::doubling::intermediate_blocks;
use crate::error::{Error, Result};
use crate::search::{SearchBudget, SearchOutcome};

use super::{exact_cover, find_ppc, ppc_lower_bound, PartialParallelClass};

/// Where the edges joined to the attached points came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScheduleSource {
    /// The closed-form edge lists, validated.
    Literal,
    /// Consecutive pairs `{2i-1, 2i}` with `{0, ∞}`, used when the closed form
    /// for v = 6k+1 does not validate.
    Paired,
    /// A parallel class found by search on the intermediate design.
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AttachPlan {
    pub v: u32,
    /// `T = {n_p, n_q, n_r}` in input labels.
    pub special_triple: Triple,
    /// `[p, q, r]` in input labels.
    pub roles: [Point; 3],
    /// `assignment[x]` is the cycle that point `x` is attached to; also the
    /// label of `x` in the output.
    pub assignment: Vec<Point>,
    pub pi0: PartialParallelClass,
    /// A parallel class of the intermediate TTS(2v+1), in output labels.
    pub pi: Vec<Triple>,
    pub source: ScheduleSource,
}

fn md(x: i64, v: u32) -> u32 {
    x.rem_euclid(v as i64) as u32
}

/// The closed-form `(cycle, edge)` lists, with `∞ = v`.
pub(crate) fn literal_schedule(v: u32) -> Vec<(u32, (u32, u32))> {
    let inf = v;
    let vi = v as i64;
    let mut out = Vec::new();
    let mut push = |c: i64, a: i64, b: Option<i64>| {
        let b = b.map_or(inf, |b| md(b, v));
        out.push((md(c, v), pair(md(a, v), b)));
    };
    if v % 6 == 4 {
        let k = (vi - 4) / 6;
        for j in 0..=2 * k - 2 {
            push(2 * (k - 2) + j, k + 1 + 2 * j, Some(vi + k - 6 - j));
        }
        push(4 * k - 5, 5 * k - 1, None);
        push(4 * k - 4, 3 * k - 2, Some(k - 3));
        push(4 * k - 3, 3 * k, Some(k - 4));
        push(4 * k - 2, 3 * k + 2, Some(k - 5));
        if k % 2 == 0 {
            for l in 0..(k - 2) / 2 {
                push(5 * k + 4 * l + 4, k + 2 * l + 2, Some(4 * k + 2 * l + 2));
                push(5 * k + 4 * l + 5, 3 * k + 2 * l + 4, Some(2 * k + 2 * l));
            }
        } else {
            for l in 0..(k - 3) / 2 {
                push(5 * k + 4 * l + 3, k + 2 * l + 2, Some(4 * k + 2 * l + 1));
                push(5 * k + 4 * l + 4, 3 * k + 2 * l + 4, Some(2 * k + 2 * l - 1));
            }
            push(2 * k - 10, 3 * k - 4, Some(5 * k - 2));
        }
    } else if v % 6 == 1 {
        let k = (vi - 1) / 6;
        if k % 2 == 0 {
            for i in (vi + 5) / 2..=vi + 1 {
                push(i, 3 + i, Some(vi - 3 + i));
            }
            push(4, 5, None);
        } else {
            let l = selector_set(v);
            let q = (vi + 1) / 4;
            for i in 0..=(vi - 3) / 4 {
                push(l[i as usize] as i64, (vi - 1) / 2 + 2 * i, Some((vi + 1) / 2 + 2 * i));
            }
            for i in q..=(vi - 3) / 2 {
                push(l[i as usize] as i64, 1 + 2 * (i - q), Some(2 + 2 * (i - q)));
            }
            push(vi - 1, 0, None);
        }
    }
    out
}

/// For v = 6k+1 with k even: `{2i-1, 2i}` lies on the cycle indexed by half
/// its sum, and `{0, ∞}` on `H_0`.
pub(crate) fn paired_schedule(v: u32) -> Vec<(u32, (u32, u32))> {
    let half = |x: u32| if x % 2 == 0 { x / 2 } else { (x + v) / 2 } % v;
    let mut out: Vec<_> = (1..=(v - 1) / 2).map(|i| (half(4 * i - 1), (2 * i - 1, 2 * i))).collect();
    out.push((0, (0, v)));
    out
}

/// The set `L` of the odd-k case for v = 6k+1, in increasing order; `g` is
/// the position in this list.
pub(crate) fn selector_set(v: u32) -> Vec<u32> {
    let k = (v - 1) / 6;
    let mut l = Vec::new();
    let (head_end, singles, tail_start): (u32, Vec<u32>, u32) = if k % 4 == 1 {
        ((v - 5) / 2, vec![(v + 1) / 2], (v + 7) / 2)
    } else {
        ((v - 9) / 2, vec![(v - 5) / 2, (v + 1) / 2, (v + 7) / 2], (v + 11) / 2)
    };
    let mut a = 0;
    while a < head_end {
        l.extend([a, a + 1]);
        a += 4;
    }
    l.extend(singles);
    let mut s = tail_start;
    while s < v - 3 {
        l.extend([s, s + 1]);
        s += 4;
    }
    l.push(v - 1);
    l
}

/// Checks a schedule against the decomposition; returns the reason it fails.
pub(crate) fn check_schedule(v: u32, d: &HamDecomposition, schedule: &[(u32, (u32, u32))]) -> std::result::Result<(), String> {
    let k = if v % 6 == 4 { (v - 4) / 6 } else { (v - 1) / 6 };
    let mandated = mandated_edges(v).ok_or("order outside both residue classes")?;
    if schedule.len() != 3 * k as usize + 1 {
        return Err(format!("{} edges, expected {}", schedule.len(), 3 * k + 1));
    }
    let mut cover = vec![0u8; v as usize + 1];
    if v % 6 == 4 {
        for x in [k - 2, k - 1, k] {
            cover[x as usize] += 1;
        }
    }
    let mut cycles = vec![false; v as usize];
    for &(c, (a, b)) in schedule {
        if std::mem::replace(&mut cycles[c as usize], true) {
            return Err(format!("cycle {c} is used twice"));
        }
        if !d.cycles[c as usize].contains_edge(a, b) {
            return Err(format!("{{{a},{b}}} is not an edge of H_{c}"));
        }
        if mandated.iter().any(|&(m, e)| m == c as usize && e == (a, b)) {
            return Err(format!("{{{a},{b}}} is the reserved edge of H_{c}"));
        }
        cover[a as usize] += 1;
        cover[b as usize] += 1;
    }
    if let Some(x) = cover.iter().position(|&c| c != 1) {
        return Err(format!("vertex {x} is covered {} times", cover[x]));
    }
    if let Some(&(m, _)) = mandated.iter().find(|&&(m, _)| !cycles[m]) {
        return Err(format!("reserved cycle {m} is not scheduled"));
    }
    Ok(())
}

fn check_partition(v: u32, pi: &[Triple]) -> Result<()> {
    let n = 2 * v + 1;
    let mut seen = vec![false; n as usize];
    for t in pi {
        for p in t.points() {
            if p >= n || std::mem::replace(&mut seen[p as usize], true) {
                return Err(Error::Schedule(format!("point {p} is covered twice or out of range")));
            }
        }
    }
    if seen.iter().all(|&s| s) {
        Ok(())
    } else {
        Err(Error::Schedule("parallel class misses a point".into()))
    }
}

/// Plans the 2v+2 construction for `ts`, `v ≡ 1 (mod 6)` with `v ≥ 7` or
/// `v ≡ 4 (mod 6)` with `v ≥ 16`.
///
/// ```
/// use graytts::base::BaseLibrary;
/// use graytts::ppc::plan_attach;
/// let (ts, cert) = BaseLibrary::get(13).unwrap();
/// let plan = plan_attach(&ts, &cert).unwrap();
/// let [p, q, r] = plan.roles;
/// assert_eq!([plan.assignment[p as usize], plan.assignment[q as usize], plan.assignment[r as usize]], [0, 1, 12]);
/// assert_eq!(plan.pi.len(), 9);
/// ```
pub fn plan_attach(ts: &TripleSystem, cert: &HamiltonCertificate) -> Result<AttachPlan> {
    let v = ts.order();
    let mandated = mandated_edges(v).ok_or(Error::OrderOutOfRange {
        v,
        reason: "2v+2 needs v = 1 (mod 6), v >= 7 or v = 4 (mod 6), v >= 16",
    })?;
    check_input(ts, cert)?;
    let bound = ppc_lower_bound(v)?;
    let mut pi0 = find_ppc(ts, bound)?;
    // the schedule consumes exactly (v+5)/6 or (v+8)/6 blocks
    let bound = if v % 6 == 4 { (v as usize + 8) / 6 } else { (v as usize + 5) / 6 };
    let mut blocks = pi0.blocks(ts);
    let mut indexed: Vec<(Triple, usize)> = blocks.iter().copied().zip(pi0.block_indices.iter().copied()).collect();
    indexed.sort_unstable();
    indexed.truncate(bound);
    pi0.block_indices = indexed.iter().map(|&(_, i)| i).collect();
    pi0.block_indices.sort_unstable();
    blocks = indexed.iter().map(|&(t, _)| t).collect();
    let special = blocks[0];

    let order = cert.order();
    let n = order.len();
    let at = order.iter().position(|&i| ts.blocks()[i] == special).expect("certificate lists every block");
    let next = ts.blocks()[order[(at + 1) % n]];
    let prev = ts.blocks()[order[(at + n - 1) % n]];
    let (common, next_only, prev_only) = neighbour_roles(&special, &next, &prev)?;
    let roles = if v % 6 == 4 { [prev_only, common, next_only] } else { [common, prev_only, next_only] };

    let d = decompose_for_2v2(v)?;
    let mut schedule = literal_schedule(v);
    let mut source = ScheduleSource::Literal;
    if check_schedule(v, &d, &schedule).is_err() && v % 6 == 1 && ((v - 1) / 6) % 2 == 0 {
        schedule = paired_schedule(v);
        source = ScheduleSource::Paired;
    }
    let mandated_cycles: Vec<u32> = mandated.iter().map(|&(c, _)| c as u32).collect();
    let mut assignment = vec![u32::MAX; v as usize];
    for (x, &c) in roles.iter().zip(&mandated_cycles) {
        assignment[*x as usize] = c;
    }
    let in_a = {
        let mut a = vec![false; v as usize];
        for p in blocks.iter().flat_map(|b| b.points()) {
            a[p as usize] = true;
        }
        a
    };

    if check_schedule(v, &d, &schedule).is_ok() {
        let mut scheduled = vec![false; v as usize];
        for &(c, _) in &schedule {
            scheduled[c as usize] = true;
        }
        let mut free_unscheduled = (0..v).filter(|&c| !scheduled[c as usize]);
        let mut free_scheduled = (0..v).filter(|&c| scheduled[c as usize] && !mandated_cycles.contains(&c));
        for x in 0..v as usize {
            if assignment[x] != u32::MAX {
                continue;
            }
            assignment[x] = if in_a[x] { free_unscheduled.next() } else { free_scheduled.next() }
                .ok_or_else(|| Error::Schedule("cycle counts do not match the class size".into()))?;
        }
        let mut pi: Vec<Triple> = blocks[1..].iter().map(|b| b.map(|p| assignment[p as usize])).collect();
        pi.extend(schedule.iter().map(|&(c, (a, b))| Triple::new(c, v + a, v + b)));
        if v % 6 == 4 {
            let k = (v - 4) / 6;
            pi.push(Triple::new(v + k - 2, v + k - 1, v + k));
        }
        check_partition(v, &pi)?;
        pi.sort_unstable();
        return Ok(AttachPlan { v, special_triple: special, roles, assignment, pi0, pi, source });
    }

    // search a parallel class of the intermediate design directly
    let mut free = (0..v).filter(|c| !mandated_cycles.contains(c));
    for a in assignment.iter_mut().filter(|a| **a == u32::MAX) {
        *a = free.next().expect("v - 3 free cycles");
    }
    let relabeled = ts.relabel(&assignment);
    let pqr = roles.map(|x| assignment[x as usize]);
    let e_prime = intermediate_blocks(&relabeled, special.map(|x| assignment[x as usize]), pqr)?;
    let forced: Vec<usize> = if v % 6 == 4 {
        let k = (v - 4) / 6;
        let abc = Triple::new(v + k - 2, v + k - 1, v + k);
        vec![e_prime.iter().position(|t| *t == abc).expect("step 3 block present")]
    } else {
        Vec::new()
    };
    let budget = SearchBudget::default();
    let chosen = match exact_cover(2 * v + 1, &e_prime, &forced, budget.max_nodes) {
        SearchOutcome::Found(c) => c,
        SearchOutcome::ProvenNone => return Err(Error::Schedule(format!("order {v}: the intermediate design has no parallel class"))),
        SearchOutcome::BudgetExhausted => return Err(Error::BudgetExhausted),
    };
    let mut pi: Vec<Triple> = chosen.iter().map(|&i| e_prime[i]).collect();
    check_partition(v, &pi)?;
    pi.sort_unstable();
    Ok(AttachPlan { v, special_triple: special, roles, assignment, pi0, pi, source: ScheduleSource::Search })
}
