//! Construction and mechanical verification of finite point-line geometries:
//! classical generalized quadrangles, line Grassmannians, Segre geometries,
//! half-spin geometries, and imbrex geometries built from embedded
//! quadrangles, together with checkers for the polar, parapolar, imbrex and
//! Mazzocca-Melone axiom systems.

pub mod analysis;
pub mod axioms;
pub mod bitset;
pub mod catalog;
pub mod galois;
pub mod geometry;
pub mod gq;
pub mod iso;
pub mod json;
pub mod mm;
pub mod report;
pub mod scan;

pub use bitset::BitSet;
