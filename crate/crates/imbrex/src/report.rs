//! Structured verdicts: one report per axiom or lemma check, with a
//! witness that re-checks as a genuine violation on failure, or a
//! certificate on success.

use serde::{Deserialize, Serialize};
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Structured counterexample or certificate attached to a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A single offending point (e.g. collinear with everything).
    Point { point: u32 },
    /// A line violating a size constraint.
    ShortLine { line: u32, size: usize },
    /// A (point, line) pair with an illegal collinearity count.
    PointLine {
        point: u32,
        line: u32,
        collinear: usize,
        line_size: usize,
    },
    /// One of the PPS1 cases 0 / 1 / all never occurs.
    CaseUnrealized { case: String, realized: Vec<String> },
    /// Two points in different connected components.
    Disconnected { x: u32, y: u32 },
    /// Collinearity diameter differs from 2.
    Diameter { expected: u32, found: Option<u32> },
    /// The convex closure of a non-collinear pair is not a polar space.
    ClosureNotPolar {
        x: u32,
        y: u32,
        size: usize,
        axiom: String,
    },
    /// A non-collinear pair lying in an unexpected number of symps.
    SympCount { x: u32, y: u32, count: usize },
    /// An (x, L, y1, y2) quadruple violating the imbrex intersection axiom.
    ImbTriple {
        x: u32,
        line: u32,
        y1: u32,
        y2: u32,
        symp1: u32,
        symp2: u32,
        intersection: Vec<u32>,
        reason: String,
    },
    /// Symp ranks are not constant.
    MixedRank { ranks: Vec<u32> },
    /// Symp thickness classes are not uniform.
    MixedThickness { classes: Vec<String> },
    /// Two blocks sharing at least two points.
    BlocksOverlap { b1: u32, b2: u32, shared: Vec<u32> },
    /// A line not properly contained in any block.
    LineWithoutBlock { line: u32 },
    /// Lemma "far": no far line exists for a point / no far point for a line.
    NoFarLine { point: u32 },
    /// Lemma "far": every point is near the given line.
    NoFarPoint { line: u32 },
    /// A point outside a block collinear with no point of it.
    PointMissesBlock { point: u32, block: u32 },
    /// A (point, symp, line) triple violating the collinearity lemma.
    Cc1 { x: u32, symp: u32, line: u32 },
    /// Lemma "pointcol": no point of the symp intersection sees all of the line.
    Pointcol { x: u32, line: u32 },
    /// A non-regular pair of lines.
    NotRegular { l1: u32, l2: u32 },
    /// Ideality failure: a line through the point is missing.
    NotIdeal { point: u32, line: u32 },
    /// A block without a non-closing configuration.
    BlockWithoutOnan { block: u32 },
    /// A double perp of two spread lines leaving the spread.
    SpreadEscape { l1: u32, l2: u32, escapee: u32 },
    /// A spread that fails to partition its symp.
    PartitionDefect { point: u32, cover: usize },
    /// Morphism failure between the double-perp geometry and the block.
    MorphismDefect { detail: String },
    /// MM1: a non-X-collinear pair covered by no (or several) members of Xi.
    UncoveredPair { x: u32, y: u32, cover: usize },
    /// MM2: a projective point of an intersection of two Xi members off X.
    MeetEscapesX {
        xi1: u32,
        xi2: u32,
        point: Vec<u32>,
    },
    /// LMM3: a tangent span exceeding the dimension bound.
    TangentBound {
        x: u32,
        line: Vec<u32>,
        dim: i32,
        bound: i32,
    },
    /// Generic pair of points.
    Pair { x: u32, y: u32 },
    /// Pass certificate: rank data.
    RankCertificate {
        rank: u32,
        thick: Option<String>,
        order: Option<(u64, u64)>,
    },
    /// Pass certificate: longest nested chain of singular subspaces.
    ChainCertificate { max_chain: u32, sampled: bool },
    /// Pass certificate: which PPS1 cases were realized (non-incident pairs).
    CasesRealized { cases: Vec<String> },
    /// Pass certificate: symp census.
    SympCensus {
        count: usize,
        rank: u32,
        thickness: String,
    },
    /// Pass certificate: scan size and realized extremes.
    ScanCertificate {
        scanned: u64,
        sampled: bool,
        max_realized: Option<i64>,
        bound: Option<i64>,
    },
    /// Pass certificate: per-block counts of found configurations.
    BlockCounts { counts: Vec<u64> },
    /// Free-form detail for checks without a structured shape.
    Note { detail: String },
}

/// Verdict per axiom: pass/fail, witness or certificate, timing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AxiomReport {
    pub axiom: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub ms: u64,
}

impl AxiomReport {
    pub fn pass(axiom: impl Into<String>) -> AxiomReport {
        AxiomReport {
            axiom: axiom.into(),
            verdict: Verdict::Pass,
            witness: None,
            ms: 0,
        }
    }

    pub fn pass_with(axiom: impl Into<String>, cert: Witness) -> AxiomReport {
        AxiomReport {
            axiom: axiom.into(),
            verdict: Verdict::Pass,
            witness: Some(cert),
            ms: 0,
        }
    }

    pub fn fail(axiom: impl Into<String>, witness: Witness) -> AxiomReport {
        AxiomReport {
            axiom: axiom.into(),
            verdict: Verdict::Fail,
            witness: Some(witness),
            ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn timed(mut self, start: Instant) -> AxiomReport {
        self.ms = start.elapsed().as_millis() as u64;
        self
    }
}

/// True when every report passed.
pub fn all_passed(reports: &[AxiomReport]) -> bool {
    reports.iter().all(|r| r.passed())
}
