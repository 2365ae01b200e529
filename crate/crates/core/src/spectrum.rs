//! Every admissible order, built recursively from the base designs.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::base::BaseLibrary;
use crate::certificate::{verify_certificate, HamiltonCertificate};
use crate::construct::Constructed;
use crate::design::{is_admissible, Triple, TripleSystem};
use crate::doubling::{construct_2v1, construct_2v2};
use crate::error::{Error, Result};
use crate::graph::build_ibig;
use crate::search::{find_hamilton_path, SearchBudget, SearchOutcome};
use crate::tripling::{construct_3v, construct_3v1, construct_3v3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    #[serde(rename = "base")]
    Base,
    #[serde(rename = "2v+1")]
    Double,
    #[serde(rename = "2v+2")]
    DoublePlusTwo,
    #[serde(rename = "3v")]
    Triple,
    #[serde(rename = "3v+1")]
    TriplePlusOne,
    #[serde(rename = "3v+3")]
    TriplePlusThree,
}

impl Rule {
    pub fn output_order(self, input: u32) -> u32 {
        match self {
            Rule::Base => input,
            Rule::Double => 2 * input + 1,
            Rule::DoublePlusTwo => 2 * input + 2,
            Rule::Triple => 3 * input,
            Rule::TriplePlusOne => 3 * input + 1,
            Rule::TriplePlusThree => 3 * input + 3,
        }
    }

    /// Applies the construction to a design and its certificate.
    pub fn apply(self, ts: &TripleSystem, cert: &HamiltonCertificate) -> Result<Constructed> {
        match self {
            Rule::Base => Err(Error::Construction("the base rule has no input".into())),
            Rule::Double => construct_2v1(ts, cert),
            Rule::DoublePlusTwo => construct_2v2(ts, cert),
            Rule::Triple => construct_3v(ts, cert),
            Rule::TriplePlusOne => construct_3v1(ts, cert),
            Rule::TriplePlusThree => construct_3v3(ts, cert),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Base => "base",
            Rule::Double => "2v+1",
            Rule::DoublePlusTwo => "2v+2",
            Rule::Triple => "3v",
            Rule::TriplePlusOne => "3v+1",
            Rule::TriplePlusThree => "3v+3",
        })
    }
}

/// The rule producing order `v` and its input order; `None` for base orders.
///
/// ```
/// use graytts::spectrum::{route, Rule};
/// assert_eq!(route(22).unwrap(), Some((Rule::TriplePlusOne, 7)));
/// assert_eq!(route(100).unwrap(), Some((Rule::DoublePlusTwo, 49)));
/// ```
pub fn route(v: u32) -> Result<Option<(Rule, u32)>> {
    if !is_admissible(v) {
        return Err(Error::NotAdmissible(v));
    }
    if v == 3 || v == 6 {
        return Err(Error::NotConstructible(v));
    }
    if BaseLibrary::ORDERS.contains(&v) {
        return Ok(None);
    }
    let fixed = match v {
        12 => Some((Rule::Triple, 4)),
        15 => Some((Rule::Double, 7)),
        16 => Some((Rule::DoublePlusTwo, 7)),
        19 => Some((Rule::Double, 9)),
        21 => Some((Rule::Triple, 7)),
        _ => None,
    };
    if fixed.is_some() {
        return Ok(fixed);
    }
    let (r, k) = (v % 12, v / 12);
    let step = match r {
        0 if k % 3 != 2 => (Rule::Triple, v / 3),
        0 => (Rule::TriplePlusThree, (v - 3) / 3),
        1 => (Rule::Double, 6 * k),
        3 => (Rule::Double, 6 * k + 1),
        4 => (Rule::DoublePlusTwo, 6 * k + 1),
        6 if k % 3 != 0 => (Rule::Triple, v / 3),
        6 => (Rule::TriplePlusThree, (v - 3) / 3),
        7 => (Rule::Double, 6 * k + 3),
        9 if k % 3 != 2 => (Rule::Triple, v / 3),
        9 => (Rule::Double, 6 * k + 4),
        10 if k % 3 != 2 => (Rule::TriplePlusOne, 4 * k + 3),
        10 => (Rule::DoublePlusTwo, 6 * k + 4),
        _ => unreachable!("admissible residues mod 12"),
    };
    Ok(Some(step))
}

/// How an order was reached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub rule: Rule,
    pub input_order: Option<u32>,
    pub output_order: u32,
    /// The trace of the input; empty for base steps.
    pub children: Vec<Arc<ConstructionTrace>>,
}

impl ConstructionTrace {
    /// Rules from the base upward.
    pub fn steps(&self) -> Vec<(Rule, u32)> {
        let mut out = match self.children.first() {
            Some(c) => c.steps(),
            None => Vec::new(),
        };
        out.push((self.rule, self.output_order));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Built {
    pub design: TripleSystem,
    pub certificate: HamiltonCertificate,
    pub trace: Arc<ConstructionTrace>,
    /// Block counts by type for the last step; empty for base designs.
    pub census: Vec<(&'static str, usize)>,
}

type Cell = Arc<OnceLock<Result<Arc<Built>>>>;

/// A memo of built orders, safe to share between threads.
#[derive(Default)]
pub struct Spectrum {
    memo: Mutex<HashMap<u32, Cell>>,
}

impl Spectrum {
    pub fn new() -> Spectrum {
        Spectrum::default()
    }

    /// Builds order `v`, reusing any order built before.
    pub fn build(&self, v: u32) -> Result<Arc<Built>> {
        let step = route(v)?;
        let cell = self.memo.lock().expect("memo lock").entry(v).or_default().clone();
        cell.get_or_init(|| self.build_uncached(v, step)).clone()
    }

    fn build_uncached(&self, v: u32, step: Option<(Rule, u32)>) -> Result<Arc<Built>> {
        match step {
            None => {
                let (design, certificate) = BaseLibrary::get(v).expect("base order");
                let trace = Arc::new(ConstructionTrace { rule: Rule::Base, input_order: None, output_order: v, children: Vec::new() });
                Ok(Arc::new(Built { design, certificate, trace, census: Vec::new() }))
            }
            Some((rule, input)) => {
                let from = self.build(input)?;
                let out = rule.apply(&from.design, &from.certificate)?;
                let trace = Arc::new(ConstructionTrace {
                    rule,
                    input_order: Some(input),
                    output_order: v,
                    children: vec![from.trace.clone()],
                });
                Ok(Arc::new(Built { design: out.design, certificate: out.certificate, trace, census: out.census }))
            }
        }
    }
}

fn global() -> &'static Spectrum {
    static SPECTRUM: OnceLock<Spectrum> = OnceLock::new();
    SPECTRUM.get_or_init(Spectrum::new)
}

/// Builds a TTS(v) with a Hamiltonian 2-BIG, using a process-wide memo.
///
/// ```
/// use graytts::spectrum::build;
/// use graytts::{verify_certificate, Error};
/// let built = build(12).unwrap();
/// assert!(verify_certificate(&built.design, &built.certificate).unwrap());
/// assert_eq!(build(6).unwrap_err(), Error::NotConstructible(6));
/// ```
pub fn build(v: u32) -> Result<Arc<Built>> {
    global().build(v)
}

/// Re-executes a trace without any memo.
pub fn replay(trace: &ConstructionTrace) -> Result<(TripleSystem, HamiltonCertificate)> {
    match (trace.rule, trace.children.first()) {
        (Rule::Base, _) => BaseLibrary::get(trace.output_order)
            .ok_or_else(|| Error::Construction(format!("no base design of order {}", trace.output_order))),
        (rule, Some(child)) => {
            let (ts, cert) = replay(child)?;
            let out = rule.apply(&ts, &cert)?;
            Ok((out.design, out.certificate))
        }
        (rule, None) => Err(Error::Construction(format!("{rule} step without input"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    Constructed,
    NotAdmissible,
    NotConstructible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumVerdict {
    pub order: u32,
    pub status: VerdictStatus,
    pub rule: Option<Rule>,
    pub input_order: Option<u32>,
    pub block_count: Option<usize>,
    /// Independent re-verification of a constructed pair.
    pub verified: Option<bool>,
    /// Set when a construction failed unexpectedly.
    pub error: Option<String>,
}

impl SpectrumVerdict {
    pub fn is_ok(&self) -> bool {
        self.status != VerdictStatus::Constructed || (self.verified == Some(true) && self.error.is_none())
    }
}

/// Whether `ts` is a simple TTS and `cert` one of its Hamilton cycles,
/// checked from scratch.
pub fn reverify(ts: &TripleSystem, cert: &HamiltonCertificate) -> bool {
    ts.validate().is_simple_tts() && verify_certificate(ts, cert).unwrap_or(false)
}

/// The verdict for one order, re-verifying what was built.
pub fn verdict(spectrum: &Spectrum, v: u32) -> SpectrumVerdict {
    let mut out = SpectrumVerdict {
        order: v,
        status: VerdictStatus::Constructed,
        rule: None,
        input_order: None,
        block_count: None,
        verified: None,
        error: None,
    };
    match spectrum.build(v) {
        Ok(b) => {
            out.rule = Some(b.trace.rule);
            out.input_order = b.trace.input_order;
            out.block_count = Some(b.design.block_count());
            out.verified = Some(reverify(&b.design, &b.certificate));
        }
        Err(Error::NotAdmissible(_)) => out.status = VerdictStatus::NotAdmissible,
        Err(Error::NotConstructible(_)) => out.status = VerdictStatus::NotConstructible,
        Err(e) => {
            out.error = Some(e.to_string());
            out.verified = Some(false);
        }
    }
    out
}

/// One verdict per order in `lo..=hi`.
///
/// ```
/// use graytts::spectrum::{build_range, VerdictStatus};
/// let report = build_range(3, 10);
/// let made: Vec<u32> = report.iter().filter(|v| v.status == VerdictStatus::Constructed).map(|v| v.order).collect();
/// assert_eq!(made, vec![4, 7, 9, 10]);
/// assert!(report.iter().all(|v| v.is_ok()));
/// ```
pub fn build_range(lo: u32, hi: u32) -> Vec<SpectrumVerdict> {
    (lo..=hi).map(|v| verdict(global(), v)).collect()
}

/// Searches the simple TTS(6) whose blocks come first in lexicographic order.
pub fn simple_tts6() -> TripleSystem {
    let all: Vec<Triple> = (0..6)
        .flat_map(|a| (a + 1..6).flat_map(move |b| (b + 1..6).map(move |c| Triple::new(a, b, c))))
        .collect();
    fn go(all: &[Triple], from: usize, count: &mut [u8; 36], chosen: &mut Vec<Triple>) -> bool {
        if chosen.len() == 10 {
            return true;
        }
        for i in from..all.len() {
            let t = all[i];
            if t.pairs().iter().all(|&(a, b)| count[(a * 6 + b) as usize] < 2) {
                for (a, b) in t.pairs() {
                    count[(a * 6 + b) as usize] += 1;
                }
                chosen.push(t);
                if go(all, i + 1, count, chosen) {
                    return true;
                }
                chosen.pop();
                for (a, b) in t.pairs() {
                    count[(a * 6 + b) as usize] -= 1;
                }
            }
        }
        false
    }
    let mut chosen = Vec::new();
    assert!(go(&all, 0, &mut [0; 36], &mut chosen), "a simple TTS(6) exists");
    TripleSystem::new(6, chosen).expect("points below 6")
}

/// A design of order `v` with a Hamilton path in its 2-BIG, as block indices.
pub fn hamilton_path_witness(v: u32) -> Option<(TripleSystem, Vec<usize>)> {
    if v == 6 {
        let ts = simple_tts6();
        let g = build_ibig(&ts, 2).ok()?;
        return match find_hamilton_path(&g, &SearchBudget::default()) {
            SearchOutcome::Found(p) => Some((ts, p)),
            _ => None,
        };
    }
    let b = build(v).ok()?;
    let path = b.certificate.order().to_vec();
    Some((b.design.clone(), path))
}

/// Whether some TTS(v) has a Hamilton path in its 2-BIG.
///
/// ```
/// use graytts::spectrum::hamilton_path_exists;
/// assert!(!hamilton_path_exists(3));
/// assert!(hamilton_path_exists(6));
/// assert!(!hamilton_path_exists(8));
/// ```
pub fn hamilton_path_exists(v: u32) -> bool {
    is_admissible(v) && v != 3 && hamilton_path_witness(v).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routes_stay_in_range() {
        for v in 4..=10_000 {
            let Ok(Some((rule, input))) = route(v) else { continue };
            assert_eq!(rule.output_order(input), v, "v = {v}");
            assert!(input >= 4 && input != 6 && input < v && is_admissible(input), "v = {v}");
            match rule {
                Rule::Double => assert!(input % 2 == 0 || input >= 7),
                Rule::DoublePlusTwo => assert!((input % 6 == 1 && input >= 7) || (input % 6 == 4 && input >= 16)),
                Rule::TriplePlusOne | Rule::TriplePlusThree => assert!(input % 2 == 1 && input >= 7),
                Rule::Triple | Rule::Base => {}
            }
        }
    }

    #[test]
    fn simple_tts6_is_petersen_like() {
        let ts = simple_tts6();
        assert!(ts.validate().is_simple_tts());
        let g = build_ibig(&ts, 2).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert!(g.is_cubic());
        assert_eq!(crate::graph::girth(&g), Some(5));
    }
}
