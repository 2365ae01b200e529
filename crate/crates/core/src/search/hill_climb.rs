//! Randomized hill climbing for simple twofold triple systems, followed by a
//! Hamilton cycle search on the 2-BIG of each system found.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certificate::HamiltonCertificate;
use crate::design::{is_admissible, tts_block_count, Triple, TripleSystem};
use crate::error::{Error, Result};
use crate::graph::build_ibig;

use super::hamilton::find_hamilton_cycle;
use super::{SearchBudget, SearchOutcome};

/// Partial simple TTS with per-pair coverage.
struct Climber {
    v: usize,
    blocks: BTreeSet<Triple>,
    // blocks through each pair, indexed x * v + y with x < y
    through: Vec<Vec<Triple>>,
}

impl Climber {
    fn new(v: u32) -> Climber {
        let v = v as usize;
        Climber { v, blocks: BTreeSet::new(), through: vec![Vec::new(); v * v] }
    }

    fn slot(&self, a: u32, b: u32) -> usize {
        let (x, y) = if a < b { (a, b) } else { (b, a) };
        x as usize * self.v + y as usize
    }

    fn count(&self, a: u32, b: u32) -> usize {
        self.through[self.slot(a, b)].len()
    }

    fn add(&mut self, t: Triple) {
        self.blocks.insert(t);
        for (a, b) in t.pairs() {
            let s = self.slot(a, b);
            self.through[s].push(t);
        }
    }

    fn remove(&mut self, t: Triple) {
        self.blocks.remove(&t);
        for (a, b) in t.pairs() {
            let s = self.slot(a, b);
            let list = &mut self.through[s];
            let at = list.iter().position(|x| *x == t).expect("block listed under its pairs");
            list.swap_remove(at);
        }
    }

    /// One move: pick a point on a deficient pair, join it to two partners it
    /// still needs, and make room by dropping a block on the third pair if full.
    fn step(&mut self, rng: &mut ChaCha8Rng) {
        let v = self.v as u32;
        let live: Vec<u32> = (0..v).filter(|&x| (0..v).any(|y| y != x && self.count(x, y) < 2)).collect();
        let x = *live.choose(rng).expect("called only on incomplete systems");
        let needy: Vec<u32> = (0..v).filter(|&y| y != x && self.count(x, y) < 2).collect();
        if needy.len() < 2 {
            // x lacks a single pair twice over; drop a random block through x to free it up
            let through_x: Vec<Triple> = self.blocks.iter().filter(|b| b.contains(x)).copied().collect();
            if let Some(&b) = through_x.choose(rng) {
                self.remove(b);
            }
            return;
        }
        let picked: Vec<u32> = needy.choose_multiple(rng, 2).copied().collect();
        let (y, z) = (picked[0], picked[1]);
        let t = Triple::new(x, y, z);
        if self.blocks.contains(&t) {
            return;
        }
        if self.count(y, z) >= 2 {
            let list = &self.through[self.slot(y, z)];
            let victim = list[rng.gen_range(0..list.len())];
            self.remove(victim);
        }
        self.add(t);
    }

    fn is_complete(&self, target: usize) -> bool {
        self.blocks.len() == target && self.through.iter().enumerate().all(|(s, l)| {
            let (x, y) = (s / self.v, s % self.v);
            x >= y || l.len() == 2
        })
    }

    fn design(&self) -> TripleSystem {
        let blocks: Vec<Triple> = self.blocks.iter().copied().collect();
        TripleSystem::new(self.v as u32, blocks).expect("points are in range")
    }
}

/// Searches for a simple TTS(v) whose 2-BIG is Hamiltonian.
///
/// Blocks of the result are sorted; the certificate indexes that order.
/// `budget.max_iters` bounds hill-climbing moves over all restarts and
/// `budget.max_nodes` bounds each Hamilton search.
pub fn hill_climb_tts(v: u32, budget: &SearchBudget) -> Result<(TripleSystem, HamiltonCertificate)> {
    if !is_admissible(v) {
        return Err(Error::NotAdmissible(v));
    }
    if v == 3 || v == 6 {
        return Err(Error::NotConstructible(v));
    }
    let target = tts_block_count(v);
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let mut climber = Climber::new(v);
    let mut iters = 0u64;
    while iters < budget.max_iters {
        iters += 1;
        if !climber.is_complete(target) {
            climber.step(&mut rng);
            continue;
        }
        let ts = climber.design();
        let g = build_ibig(&ts, 2)?;
        if let SearchOutcome::Found(cycle) = find_hamilton_cycle(&g, budget) {
            return Ok((ts, HamiltonCertificate::new(cycle)));
        }
        climber = Climber::new(v);
    }
    Err(Error::BudgetExhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;

    #[test]
    fn finds_small_orders() {
        for v in [4, 7, 9, 10] {
            let (ts, cert) = hill_climb_tts(v, &SearchBudget::default()).unwrap();
            assert!(ts.validate().is_simple_tts());
            assert!(verify_certificate(&ts, &cert).unwrap());
        }
    }

    #[test]
    fn deterministic_for_a_seed() {
        let b = SearchBudget::default();
        assert_eq!(hill_climb_tts(9, &b).unwrap(), hill_climb_tts(9, &b).unwrap());
    }

    #[test]
    fn excluded_orders() {
        let b = SearchBudget::default();
        assert_eq!(hill_climb_tts(6, &b), Err(Error::NotConstructible(6)));
        assert_eq!(hill_climb_tts(5, &b), Err(Error::NotAdmissible(5)));
    }
}
