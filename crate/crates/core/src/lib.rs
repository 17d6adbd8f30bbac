//! Khovanov homology over GF(2) from planar diagram codes.
//!
//! Diagrams are parsed from PD codes ([`pd`]), resolved into a cube of
//! smoothings ([`cube`]) and turned into a bigraded complex whose homology is
//! computed either directly or by a scanning algorithm ([`kh`]). The Jones
//! polynomial, the determinant and unknot certificates are derived from the
//! result ([`invariants`]); [`satellite`] builds twisted satellite diagrams.

pub mod corpus;
pub mod cube;
pub mod error;
pub mod f2;
pub mod invariants;
pub mod kh;
pub mod pd;
pub mod satellite;

pub use corpus::CorpusEntry;
pub use error::{Error, Result};
pub use invariants::{Certificate, LaurentPoly, Verdict};
pub use kh::{build_complex, homology, homology_fast, GradedComplex, RankTable};
pub use pd::{parse_pd, Crossing, Diagram, Edge};
pub use satellite::{build_satellite, PatternSpec};
