//! Twofold triple systems with cyclic 2-intersecting Gray codes.

pub mod base;
pub mod certificate;
pub mod construct;
pub mod decomp;
pub mod design;
pub mod doubling;
pub mod error;
pub mod graph;
pub mod ppc;
pub mod search;
pub mod spectrum;
mod stitch;
pub mod tripling;

mod base_data;

pub use certificate::{verify_certificate, HamiltonCertificate};
pub use design::{validate_tts, Triple, TripleSystem, ValidationReport};
pub use error::{Error, Result};
pub use graph::{build_ibig, girth, is_bipartite, Graph, IntersectionGraph};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/designs.md")]
    mod designs {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/ppc.md")]
    mod ppc {}
    #[doc = include_str!("../../../book/src/spectrum.md")]
    mod spectrum {}
}
