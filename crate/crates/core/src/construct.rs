//! Shared plumbing for the recursive constructions.

use serde::Serialize;

use crate::certificate::{verify_certificate, HamiltonCertificate};
use crate::design::{is_admissible, Point, Triple, TripleSystem};
use crate::error::{Error, Result};
use crate::stitch::adjacent;

/// A constructed design with its certificate and the number of blocks of
/// each named type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constructed {
    pub design: TripleSystem,
    pub certificate: HamiltonCertificate,
    pub census: Vec<(&'static str, usize)>,
}

impl Constructed {
    pub fn census_of(&self, name: &str) -> Option<usize> {
        self.census.iter().find(|(n, _)| *n == name).map(|&(_, c)| c)
    }
}

/// Checks the input pair shared by every construction.
pub(crate) fn check_input(ts: &TripleSystem, cert: &HamiltonCertificate) -> Result<()> {
    let v = ts.order();
    if !is_admissible(v) {
        return Err(Error::NotAdmissible(v));
    }
    match verify_certificate(ts, cert) {
        Ok(true) => Ok(()),
        Ok(false) => Err(Error::InvalidCertificate("consecutive blocks do not share two points".into())),
        Err(e) => Err(Error::InvalidCertificate(e.to_string())),
    }
}

/// A point permutation that sends each `from` to its `to` and every other
/// point, in increasing order, onto the unused labels in increasing order.
pub(crate) fn role_permutation(v: u32, fixed: &[(Point, Point)]) -> Vec<Point> {
    let mut perm = vec![u32::MAX; v as usize];
    let mut taken = vec![false; v as usize];
    for &(from, to) in fixed {
        perm[from as usize] = to;
        taken[to as usize] = true;
    }
    let mut free = (0..v).filter(|&x| !taken[x as usize]);
    for p in perm.iter_mut().filter(|p| **p == u32::MAX) {
        *p = free.next().expect("as many free labels as unassigned points");
    }
    perm
}

/// Splits a special block's points by how its certificate neighbours meet it:
/// `(common, next_only, prev_only)`, where `next` shares `{common, next_only}`
/// and `prev` shares `{common, prev_only}`.
pub(crate) fn neighbour_roles(special: &Triple, next: &Triple, prev: &Triple) -> Result<(Point, Point, Point)> {
    let x = special.shared_pair(next).ok_or_else(|| Error::Construction("successor is not adjacent".into()))?;
    let y = special.shared_pair(prev).ok_or_else(|| Error::Construction("predecessor is not adjacent".into()))?;
    if x == y {
        return Err(Error::Construction(format!("both neighbours of {special} share the same pair")));
    }
    let common = if x.0 == y.0 || x.0 == y.1 { x.0 } else { x.1 };
    let other = |p: (Point, Point)| if p.0 == common { p.1 } else { p.0 };
    Ok((common, other(x), other(y)))
}

/// Concatenates the block groups, checks the result is a simple TTS and that
/// `cycle` is a Hamilton cycle of its 2-BIG.
pub(crate) fn finish(v: u32, groups: Vec<(&'static str, Vec<Triple>)>, cycle: &[Triple]) -> Result<Constructed> {
    let census = groups.iter().map(|(n, g)| (*n, g.len())).collect();
    let blocks: Vec<Triple> = groups.into_iter().flat_map(|(_, g)| g).collect();
    let design = TripleSystem::new(v, blocks)?;
    let report = design.validate();
    if !report.is_simple_tts() {
        return Err(Error::Construction(format!(
            "order {v}: output is not a simple TTS ({} pair defects, simple = {})",
            report.pair_defects.len(),
            report.is_simple
        )));
    }
    if let Some(k) = (0..cycle.len()).find(|&k| !adjacent(&cycle[k], &cycle[(k + 1) % cycle.len()])) {
        return Err(Error::Construction(format!(
            "order {v}: stitched cycle breaks between {} and {}",
            cycle[k],
            cycle[(k + 1) % cycle.len()]
        )));
    }
    let certificate = HamiltonCertificate::from_triples(&design, cycle)?;
    if !verify_certificate(&design, &certificate)? {
        return Err(Error::Construction(format!("order {v}: certificate does not verify")));
    }
    Ok(Constructed { design, certificate, census })
}
