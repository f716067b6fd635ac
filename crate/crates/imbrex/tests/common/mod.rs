//! Shared fixtures and independent counting oracles for the integration
//! suites. The oracles are deliberately separate from the library: counts
//! asserted by the acceptance criteria are recomputed here from closed
//! forms, never read back from the code under test.
#![allow(dead_code)] // each test binary uses its own subset

use imbrex::axioms::{enumerate_symps, is_imbrex, SympSet};
use imbrex::catalog::{self, Params};
use imbrex::geometry::IncidenceGeometry;
use imbrex::scan::ScanPolicy;
use std::sync::OnceLock;

/// Gaussian binomial [m choose j]_q: j-dimensional subspaces of F_q^m.
pub fn gaussian(m: u32, j: u32, q: u128) -> u128 {
    if j > m {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..j {
        num *= q.pow(m - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// Point and line counts of a generalized quadrangle of order (s, t).
pub fn gq_counts(s: u128, t: u128) -> (u128, u128) {
    ((s + 1) * (s * t + 1), (t + 1) * (s * t + 1))
}

pub fn params_q(q: u32) -> Params {
    Params {
        q: Some(q),
        ..Default::default()
    }
}

pub fn build(name: &str, params: &Params) -> IncidenceGeometry {
    catalog::build(name, params).expect("catalog entry builds")
}

/// A geometry together with its exhaustively enumerated symps.
pub struct Fixture {
    pub geometry: IncidenceGeometry,
    pub symps: SympSet,
}

fn fixture(name: &str, params: &Params) -> Fixture {
    let geometry = build(name, params);
    let symps =
        enumerate_symps(&geometry, &ScanPolicy::exhaustive()).expect("catalog symps enumerate");
    Fixture { geometry, symps }
}

pub fn h44_imbrex() -> &'static Fixture {
    static CELL: OnceLock<Fixture> = OnceLock::new();
    CELL.get_or_init(|| fixture("imbrex-h4", &params_q(4)))
}

pub fn segre12() -> &'static Fixture {
    static CELL: OnceLock<Fixture> = OnceLock::new();
    CELL.get_or_init(|| {
        fixture(
            "segre",
            &Params {
                p: Some(1),
                r: Some(2),
                q: Some(2),
                ..Default::default()
            },
        )
    })
}

pub fn segre22() -> &'static Fixture {
    static CELL: OnceLock<Fixture> = OnceLock::new();
    CELL.get_or_init(|| {
        fixture(
            "segre",
            &Params {
                p: Some(2),
                r: Some(2),
                q: Some(2),
                ..Default::default()
            },
        )
    })
}

pub fn grassmann42() -> &'static Fixture {
    static CELL: OnceLock<Fixture> = OnceLock::new();
    CELL.get_or_init(|| {
        fixture(
            "grassmann",
            &Params {
                n: Some(4),
                q: Some(2),
                ..Default::default()
            },
        )
    })
}

/// Imbrex verdict under the exhaustive policy, shared where several
/// criteria need the same geometry.
pub fn imbrex_verdict(g: &IncidenceGeometry) -> imbrex::axioms::ImbrexReport {
    is_imbrex(g, &ScanPolicy::exhaustive())
}
