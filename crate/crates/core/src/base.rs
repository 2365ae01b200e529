//! Embedded base designs. Each listing order is a Hamilton cycle of the 2-BIG.

use crate::base_data::*;
use crate::certificate::HamiltonCertificate;
use crate::design::{Triple, TripleSystem};

/// The fixed designs the recursion starts from.
pub struct BaseLibrary;

impl BaseLibrary {
    pub const ORDERS: [u32; 6] = [4, 7, 9, 10, 13, 18];

    /// Blocks of the base design of order `v`, in cycle order.
    pub fn listing(v: u32) -> Option<&'static [[u32; 3]]> {
        Some(match v {
            4 => &TTS4,
            7 => &TTS7,
            9 => &TTS9,
            10 => &TTS10,
            13 => &TTS13,
            18 => &TTS18,
            _ => return None,
        })
    }

    /// The base design with its certificate, the identity ordering.
    ///
    /// ```
    /// use graytts::base::BaseLibrary;
    /// use graytts::verify_certificate;
    /// let (ts, cert) = BaseLibrary::get(10).unwrap();
    /// assert_eq!(ts.block_count(), 30);
    /// assert!(verify_certificate(&ts, &cert).unwrap());
    /// ```
    pub fn get(v: u32) -> Option<(TripleSystem, HamiltonCertificate)> {
        let raw = Self::listing(v)?;
        let ts = TripleSystem::from_arrays(v, raw).expect("embedded data is well formed");
        let cert = HamiltonCertificate::new((0..raw.len()).collect());
        Some((ts, cert))
    }
}

fn triples(raw: &[[u32; 3]]) -> Vec<Triple> {
    raw.iter().map(|&[a, b, c]| Triple::new(a, b, c)).collect()
}

/// A 7-cycle of the 2-BIG of the base TTS(10).
pub fn girth_witness_10() -> Vec<Triple> {
    triples(&GIRTH7_CYCLE_TTS10)
}

/// A 5-cycle of the 2-BIG of the base TTS(18).
pub fn girth_witness_18() -> Vec<Triple> {
    triples(&GIRTH5_CYCLE_TTS18)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::verify_certificate;

    #[test]
    fn every_base_design_verifies() {
        for v in BaseLibrary::ORDERS {
            let (ts, cert) = BaseLibrary::get(v).unwrap();
            assert!(ts.validate().is_simple_tts(), "v = {v}");
            assert!(verify_certificate(&ts, &cert).unwrap(), "v = {v}");
        }
        assert!(BaseLibrary::get(12).is_none());
    }
}
