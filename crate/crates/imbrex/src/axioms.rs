//! Axiom checkers: polar-space axioms (PS1)-(PS4), the strong parapolar
//! diameter-2 axioms (PPS1)/(PPS2), (PPS4), the imbrex axiom (Imb) and its
//! weakening (Imb*), symp enumeration, and the aggregate imbrex verdict
//! with its rank profile.

use crate::bitset::BitSet;
use crate::geometry::{
    collinearity_diameter, convex_closure, distance, greedy_singular_chain, induced_subgeometry,
    maximal_singular_subspaces, GeometryError, IncidenceGeometry, Metric,
};
use crate::gq::{classify_gq, GqClass};
use crate::report::{AxiomReport, Witness};
use crate::scan::ScanPolicy;
use std::time::Instant;
use thiserror::Error;

/// Thickness class of a symp.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thickness {
    Thick,
    Grid,
    DualGridOrOther,
}

impl std::fmt::Display for Thickness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Thickness::Thick => "thick",
            Thickness::Grid => "grid",
            Thickness::DualGridOrOther => "dual-grid-or-other",
        };
        f.write_str(s)
    }
}

/// A convex subspace that is a polar space: the symp of a non-collinear
/// pair, with its rank and thickness classification.
#[derive(Debug, Clone)]
pub struct Symp {
    pub points: BitSet,
    pub point_list: Vec<u32>,
    /// parent line ids entirely inside the symp
    pub lines: Vec<u32>,
    pub rank: u32,
    pub thickness: Thickness,
}

/// All symps of a geometry plus a per-point membership index, so the symp
/// of a non-collinear pair is one bit-set intersection away.
pub struct SympSet {
    pub symps: Vec<Symp>,
    /// per point: bit set over symp identifiers
    membership: Vec<BitSet>,
}

impl SympSet {
    pub fn len(&self) -> usize {
        self.symps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symps.is_empty()
    }

    pub fn containing(&self, x: u32) -> &BitSet {
        &self.membership[x as usize]
    }

    /// The symps containing both points.
    pub fn common(&self, x: u32, y: u32) -> BitSet {
        self.membership[x as usize].intersection(&self.membership[y as usize])
    }

    /// The unique symp of a non-collinear pair, or the offending list.
    pub fn symp_of_pair(&self, x: u32, y: u32) -> Result<u32, Vec<u32>> {
        let common = self.common(x, y);
        let ids = common.to_vec();
        if ids.len() == 1 {
            Ok(ids[0])
        } else {
            Err(ids)
        }
    }
}

#[derive(Debug, Error)]
pub enum SympError {
    #[error("convex closure of ({x},{y}) is not a polar space of rank >= 2 (fails {axiom})")]
    ClosureNotPolar {
        x: u32,
        y: u32,
        size: usize,
        axiom: String,
    },
    #[error("pair ({x},{y}) lies in {count} symps, expected exactly 1")]
    NotUnique { x: u32, y: u32, count: usize },
    #[error("pair ({x},{y}) is at collinearity distance {dist:?}, not 2")]
    PairTooFar { x: u32, y: u32, dist: Option<u32> },
    #[error("sampled closure of ({x},{y}) differs from its assigned symp")]
    ClosureMismatch { x: u32, y: u32 },
}

impl SympError {
    pub fn witness(&self) -> Witness {
        match self {
            SympError::ClosureNotPolar { x, y, size, axiom } => Witness::ClosureNotPolar {
                x: *x,
                y: *y,
                size: *size,
                axiom: axiom.clone(),
            },
            SympError::NotUnique { x, y, count } => Witness::SympCount {
                x: *x,
                y: *y,
                count: *count,
            },
            SympError::PairTooFar { x, y, .. } => Witness::Pair { x: *x, y: *y },
            SympError::ClosureMismatch { x, y } => Witness::Pair { x: *x, y: *y },
        }
    }
}

/// Rank and thickness of a validated symp, via the induced geometry.
fn classify_symp(g: &IncidenceGeometry, points: &BitSet) -> Result<Symp, String> {
    let ind = induced_subgeometry(g, points);
    let polar = check_polar_space(&ind.geom, None);
    if let Some(bad) = polar.reports.iter().find(|r| !r.passed()) {
        return Err(bad.axiom.clone());
    }
    let rank = polar.rank.expect("rank computed on polar pass");
    if rank < 2 {
        return Err("PS3".into());
    }
    let thickness = if rank == 2 {
        match polar.class {
            Some(GqClass::Thick { .. }) => Thickness::Thick,
            Some(GqClass::Grid { .. }) => Thickness::Grid,
            _ => Thickness::DualGridOrOther,
        }
    } else {
        Thickness::Thick
    };
    let lines = ind.line_map.clone();
    Ok(Symp {
        points: points.clone(),
        point_list: ind.point_map,
        lines,
        rank,
        thickness,
    })
}

/// Enumerate the symps: the distinct convex closures over non-collinear
/// pairs, each validated as a polar space of rank >= 2, with uniqueness
/// of the pair -> symp assignment verified for every pair.
///
/// On geometries within the exhaustive threshold every pair's closure is
/// computed; above it closures are computed per representative pair,
/// uniqueness is verified through the membership index, and a seeded
/// sample of pairs has its closure recomputed and compared.
pub fn enumerate_symps(g: &IncidenceGeometry, policy: &ScanPolicy) -> Result<SympSet, SympError> {
    let n = g.point_count();
    let exhaustive = policy.is_exhaustive(n);
    let mut symps: Vec<Symp> = Vec::new();
    let mut key_to_id: rustc_hash::FxHashMap<Vec<u32>, u32> = rustc_hash::FxHashMap::default();
    let mut member_lists: Vec<Vec<u32>> = vec![Vec::new(); n];

    let handle_closure = |x: u32,
                              y: u32,
                              symps: &mut Vec<Symp>,
                              key_to_id: &mut rustc_hash::FxHashMap<Vec<u32>, u32>,
                              member_lists: &mut Vec<Vec<u32>>|
     -> Result<u32, SympError> {
        let closure = convex_closure(g, x, y).map_err(|e| match e {
            GeometryError::NotAtDistanceTwo { x, y, dist } => SympError::PairTooFar { x, y, dist },
            _ => SympError::PairTooFar { x, y, dist: None },
        })?;
        let key = closure.to_vec();
        if let Some(&id) = key_to_id.get(&key) {
            return Ok(id);
        }
        let symp = classify_symp(g, &closure).map_err(|axiom| SympError::ClosureNotPolar {
            x,
            y,
            size: key.len(),
            axiom,
        })?;
        let id = symps.len() as u32;
        for &p in &symp.point_list {
            member_lists[p as usize].push(id);
        }
        key_to_id.insert(key, id);
        symps.push(symp);
        Ok(id)
    };

    for x in 0..n as u32 {
        for y in x + 1..n as u32 {
            if g.index().adjacent(x, y) {
                continue;
            }
            if !exhaustive {
                // covered by a known symp already?
                let covered = member_lists[x as usize]
                    .iter()
                    .any(|id| member_lists[y as usize].contains(id));
                if covered {
                    continue;
                }
            }
            handle_closure(x, y, &mut symps, &mut key_to_id, &mut member_lists)?;
        }
    }

    let membership: Vec<BitSet> = member_lists
        .iter()
        .map(|ids| BitSet::from_iter(symps.len(), ids.iter().copied()))
        .collect();

    // Uniqueness: every non-collinear pair lies in exactly one symp.
    for x in 0..n as u32 {
        for y in x + 1..n as u32 {
            if g.index().adjacent(x, y) {
                continue;
            }
            let count = membership[x as usize]
                .intersection(&membership[y as usize])
                .count();
            if count != 1 {
                return Err(SympError::NotUnique { x, y, count });
            }
        }
    }

    // Representative mode: spot-check sampled closures against assignment.
    if !exhaustive && !symps.is_empty() {
        let mut rng = policy.rng();
        let samples = policy.samples.min(512);
        let mut done = 0;
        let mut guard = 0u64;
        while done < samples && guard < samples * 100 {
            guard += 1;
            let x = rng.below(n as u64) as u32;
            let y = rng.below(n as u64) as u32;
            if x == y || g.index().adjacent(x, y) {
                continue;
            }
            let closure = convex_closure(g, x, y)
                .map_err(|_| SympError::PairTooFar { x, y, dist: None })?;
            let id = membership[x as usize]
                .intersection(&membership[y as usize])
                .first()
                .expect("uniqueness verified above");
            if closure != symps[id as usize].points {
                return Err(SympError::ClosureMismatch { x, y });
            }
            done += 1;
        }
    }

    Ok(SympSet { symps, membership })
}

/// Report bundle of a polar-space check.
pub struct PolarReport {
    pub reports: Vec<AxiomReport>,
    /// realized rank: longest nested singular chain minus one
    pub rank: Option<u32>,
    /// rank-2 classification when applicable
    pub class: Option<GqClass>,
}

impl PolarReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }
}

/// Check (PS1)-(PS4); report the realized rank and compare with
/// `expect_rank` when given.
pub fn check_polar_space(g: &IncidenceGeometry, expect_rank: Option<u32>) -> PolarReport {
    let mut reports = Vec::new();
    let n = g.point_count();

    let t = Instant::now();
    let ps1 = match g
        .lines()
        .iter()
        .enumerate()
        .find(|(_, l)| l.len() < 3)
    {
        Some((li, l)) => AxiomReport::fail(
            "PS1",
            Witness::ShortLine {
                line: li as u32,
                size: l.len(),
            },
        ),
        None => AxiomReport::pass("PS1"),
    };
    reports.push(ps1.timed(t));

    let t = Instant::now();
    let ps2 = match g.points().find(|&p| g.index().neighbors(p).count() == n - 1 && n > 1) {
        Some(p) => AxiomReport::fail("PS2", Witness::Point { point: p }),
        None => AxiomReport::pass("PS2"),
    };
    reports.push(ps2.timed(t));

    // PS3: realized rank from the longest nested singular chain.
    let t = Instant::now();
    let mss = maximal_singular_subspaces(g);
    let mut max_chain = 0u32;
    for s in &mss {
        let members = s.to_vec();
        if members.len() == 1 {
            max_chain = max_chain.max(1);
            continue;
        }
        // grow from a line inside this subspace
        let Some((&a, rest)) = members.split_first() else {
            continue;
        };
        let b = rest.first().copied().unwrap_or(a);
        let seed: Vec<u32> = g
            .index()
            .lines_through(a, b)
            .first()
            .map(|&li| g.line(li).to_vec())
            .unwrap_or_else(|| vec![a, b]);
        max_chain = max_chain.max(greedy_singular_chain(g, &seed, Some(s)));
    }
    let rank = max_chain;
    let ps3 = match expect_rank {
        Some(exp) if exp != rank => AxiomReport::fail(
            "PS3",
            Witness::Note {
                detail: format!("realized rank {rank}, expected {exp}"),
            },
        ),
        _ => AxiomReport::pass_with(
            "PS3",
            Witness::ChainCertificate {
                max_chain: max_chain + 1,
                sampled: false,
            },
        ),
    };
    reports.push(ps3.timed(t));

    let t = Instant::now();
    let mut ps4 = AxiomReport::pass("PS4");
    'ps4: for p in g.points() {
        for (li, line) in g.lines().iter().enumerate() {
            if line.contains(&p) {
                continue;
            }
            let collinear = line.iter().filter(|&&q| g.index().adjacent(p, q)).count();
            if collinear != 1 && collinear != line.len() {
                ps4 = AxiomReport::fail(
                    "PS4",
                    Witness::PointLine {
                        point: p,
                        line: li as u32,
                        collinear,
                        line_size: line.len(),
                    },
                );
                break 'ps4;
            }
        }
    }
    reports.push(ps4.timed(t));

    let passed = reports.iter().all(|r| r.passed());
    let class = if passed && rank == 2 {
        Some(classify_gq(g))
    } else {
        None
    };
    PolarReport {
        reports,
        rank: Some(rank),
        class,
    }
}

/// Report bundle of the strong-parapolar-diameter-2 check.
pub struct ParapolarReport {
    pub reports: Vec<AxiomReport>,
    pub symps: Option<SympSet>,
}

impl ParapolarReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }
}

/// (PPS1): connected; for every non-incident point-line pair 0, 1 or all
/// points of the line are collinear with the point; each of the three
/// cases occurs somewhere. Then collinearity diameter exactly 2, and
/// (PPS2): every non-collinear pair's convex closure is a polar space of
/// rank >= 2 (which also enumerates the symps).
pub fn check_strong_parapolar_diam2(
    g: &IncidenceGeometry,
    policy: &ScanPolicy,
) -> ParapolarReport {
    let mut reports = Vec::new();

    // PPS1: connectivity plus the 0/1/all trichotomy.
    let t = Instant::now();
    let mut pps1 = None;
    let n = g.point_count();
    if n == 0 {
        pps1 = Some(AxiomReport::fail(
            "PPS1",
            Witness::Note {
                detail: "no points".into(),
            },
        ));
    } else if let Some(far) = (1..n as u32).find(|&y| {
        distance(g, 0, y, Metric::Collinearity)
            .expect("valid ids")
            .is_none()
    }) {
        pps1 = Some(AxiomReport::fail(
            "PPS1",
            Witness::Disconnected { x: 0, y: far },
        ));
    } else {
        let mut case0 = false;
        let mut case1 = false;
        let mut case_all = false;
        'scan: for p in g.points() {
            for (li, line) in g.lines().iter().enumerate() {
                if line.contains(&p) {
                    continue;
                }
                let c = line.iter().filter(|&&q| g.index().adjacent(p, q)).count();
                if c == 0 {
                    case0 = true;
                } else if c == line.len() {
                    case_all = true;
                } else if c == 1 {
                    case1 = true;
                } else {
                    pps1 = Some(AxiomReport::fail(
                        "PPS1",
                        Witness::PointLine {
                            point: p,
                            line: li as u32,
                            collinear: c,
                            line_size: line.len(),
                        },
                    ));
                    break 'scan;
                }
            }
        }
        if pps1.is_none() {
            let realized: Vec<String> = [(case0, "0"), (case1, "1"), (case_all, "all")]
                .iter()
                .filter(|(b, _)| *b)
                .map(|(_, s)| s.to_string())
                .collect();
            pps1 = Some(if realized.len() == 3 {
                AxiomReport::pass_with("PPS1", Witness::CasesRealized { cases: realized })
            } else {
                let missing = [(case0, "0"), (case1, "1"), (case_all, "all")]
                    .iter()
                    .find(|(b, _)| !*b)
                    .map(|(_, s)| s.to_string())
                    .expect("some case missing");
                AxiomReport::fail(
                    "PPS1",
                    Witness::CaseUnrealized {
                        case: missing,
                        realized,
                    },
                )
            });
        }
    }
    let pps1 = pps1.expect("set above").timed(t);
    let connected = !matches!(
        pps1.witness,
        Some(Witness::Disconnected { .. }) | Some(Witness::Note { .. })
    ) || pps1.passed();
    reports.push(pps1);

    // collinearity diameter exactly 2
    let t = Instant::now();
    let diam = if connected {
        collinearity_diameter(g)
    } else {
        None
    };
    let diam_report = if diam == Some(2) {
        AxiomReport::pass("diameter")
    } else {
        AxiomReport::fail(
            "diameter",
            Witness::Diameter {
                expected: 2,
                found: diam,
            },
        )
    };
    reports.push(diam_report.timed(t));

    // PPS2 via symp enumeration
    let t = Instant::now();
    let (pps2, symps) = if connected {
        match enumerate_symps(g, policy) {
            Ok(set) => {
                let cert = Witness::Note {
                    detail: format!("{} symps, all polar of rank >= 2", set.len()),
                };
                (AxiomReport::pass_with("PPS2", cert), Some(set))
            }
            Err(e) => (AxiomReport::fail("PPS2", e.witness()), None),
        }
    } else {
        (
            AxiomReport::fail("PPS2", Witness::Disconnected { x: 0, y: 0 }),
            None,
        )
    };
    reports.push(pps2.timed(t));

    ParapolarReport { reports, symps }
}

/// (PPS4): every nested sequence of singular subspaces has finite length.
/// Trivially true on finite geometries; the certificate records the
/// longest chain found (greedy growth, sampled above the threshold).
pub fn check_pps4(g: &IncidenceGeometry, policy: &ScanPolicy) -> AxiomReport {
    let t = Instant::now();
    let exhaustive = policy.is_exhaustive(g.point_count());
    let mut max_chain = 0u32;
    if exhaustive {
        for s in maximal_singular_subspaces(g) {
            let members = s.to_vec();
            if members.len() == 1 {
                max_chain = max_chain.max(1);
                continue;
            }
            let a = members[0];
            let b = members[1];
            let seed: Vec<u32> = g
                .index()
                .lines_through(a, b)
                .first()
                .map(|&li| g.line(li).to_vec())
                .unwrap_or_else(|| vec![a, b]);
            max_chain = max_chain.max(greedy_singular_chain(g, &seed, Some(&s)));
        }
    } else {
        let mut rng = policy.rng();
        let lines = g.line_count() as u64;
        for _ in 0..policy.samples.min(2_000) {
            let li = rng.below(lines) as u32;
            max_chain = max_chain.max(greedy_singular_chain(g, g.line(li), None));
        }
    }
    AxiomReport::pass_with(
        "PPS4",
        Witness::ChainCertificate {
            max_chain: max_chain + 1, // count the empty subspace
            sampled: !exhaustive,
        },
    )
    .timed(t)
}

/// Is the point far from the line: not on it and collinear with none of it.
fn far(g: &IncidenceGeometry, x: u32, line: &[u32]) -> bool {
    !line.contains(&x) && line.iter().all(|&p| !g.index().adjacent(x, p))
}

fn imb_intersection_check(
    g: &IncidenceGeometry,
    symps: &SympSet,
    x: u32,
    li: u32,
    y1: u32,
    y2: u32,
    star: bool,
) -> Result<(), Witness> {
    let fail = |s1: u32, s2: u32, inter: &BitSet, reason: &str| -> Witness {
        Witness::ImbTriple {
            x,
            line: li,
            y1,
            y2,
            symp1: s1,
            symp2: s2,
            intersection: inter.to_vec(),
            reason: reason.to_string(),
        }
    };
    let s1 = match symps.symp_of_pair(x, y1) {
        Ok(id) => id,
        Err(ids) => {
            return Err(Witness::SympCount {
                x,
                y: y1,
                count: ids.len(),
            })
        }
    };
    let s2 = match symps.symp_of_pair(x, y2) {
        Ok(id) => id,
        Err(ids) => {
            return Err(Witness::SympCount {
                x,
                y: y2,
                count: ids.len(),
            })
        }
    };
    if s1 == s2 {
        let inter = symps.symps[s1 as usize].points.clone();
        return Err(fail(s1, s2, &inter, "the two symps coincide"));
    }
    let sa = &symps.symps[s1 as usize];
    let sb = &symps.symps[s2 as usize];
    let inter = sa.points.intersection(&sb.points);

    if star {
        // (Imb*): the intersection contains a full line.
        let members = inter.to_vec();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                for &l in g.index().lines_through(a, b) {
                    if g.line(l).iter().all(|&p| inter.contains(p)) {
                        return Ok(());
                    }
                }
            }
        }
        return Err(fail(s1, s2, &inter, "no full line inside the intersection"));
    }

    // (Imb): the intersection is a singular subspace, maximal in both.
    let members = inter.to_vec();
    if members.is_empty() {
        return Err(fail(s1, s2, &inter, "empty intersection"));
    }
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !g.index().adjacent(a, b) {
                return Err(fail(s1, s2, &inter, "intersection is not singular"));
            }
            for &l in g.index().lines_through(a, b) {
                if !g.line(l).iter().all(|&p| inter.contains(p)) {
                    return Err(fail(s1, s2, &inter, "intersection is not a subspace"));
                }
            }
        }
    }
    for symp in [sa, sb] {
        let mut extenders = symp.points.difference(&inter);
        for &p in &members {
            extenders.intersect_with(g.index().neighbors(p));
        }
        if !extenders.is_empty() {
            return Err(fail(
                s1,
                s2,
                &inter,
                "intersection is not maximal in one of the symps",
            ));
        }
    }
    Ok(())
}

fn imb_scan(
    g: &IncidenceGeometry,
    symps: &SympSet,
    policy: &ScanPolicy,
    star: bool,
) -> AxiomReport {
    let axiom = if star { "Imb*" } else { "Imb" };
    let t = Instant::now();
    let mut scanned: u64 = 0;
    let exhaustive = policy.is_exhaustive(g.point_count());
    let mut witnesses: Vec<Witness> = Vec::new();

    if exhaustive {
        'outer: for x in g.points() {
            for li in 0..g.line_count() as u32 {
                let line = g.line(li);
                if !far(g, x, line) {
                    continue;
                }
                for (i, &y1) in line.iter().enumerate() {
                    for &y2 in &line[i + 1..] {
                        scanned += 1;
                        if let Err(w) = imb_intersection_check(g, symps, x, li, y1, y2, star) {
                            witnesses.push(w);
                            if !policy.collect_all {
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    } else {
        let mut rng = policy.rng();
        let n = g.point_count() as u64;
        let l = g.line_count() as u64;
        let mut guard: u64 = 0;
        'sampled: while scanned < policy.samples && guard < policy.samples * 200 {
            guard += 1;
            let x = rng.below(n) as u32;
            let li = rng.below(l) as u32;
            let line = g.line(li);
            if !far(g, x, line) {
                continue;
            }
            for (i, &y1) in line.iter().enumerate() {
                for &y2 in &line[i + 1..] {
                    scanned += 1;
                    if let Err(w) = imb_intersection_check(g, symps, x, li, y1, y2, star) {
                        witnesses.push(w);
                        if !policy.collect_all {
                            break 'sampled;
                        }
                    }
                }
            }
        }
    }

    let report = match witnesses.into_iter().next() {
        Some(w) => AxiomReport::fail(axiom, w),
        None => AxiomReport::pass_with(
            axiom,
            Witness::ScanCertificate {
                scanned,
                sampled: !exhaustive,
                max_realized: None,
                bound: None,
            },
        ),
    };
    report.timed(t)
}

/// (Imb): for every far point-line pair and every two distinct points of
/// the line, the two symps meet in a singular subspace maximal in both.
pub fn check_imb(
    g: &IncidenceGeometry,
    symps: &SympSet,
    policy: &ScanPolicy,
) -> AxiomReport {
    imb_scan(g, symps, policy, false)
}

/// (Imb*): same quantification, but the intersection need only contain a
/// full line.
pub fn check_imb_star(
    g: &IncidenceGeometry,
    symps: &SympSet,
    policy: &ScanPolicy,
) -> AxiomReport {
    imb_scan(g, symps, policy, true)
}

/// Per-symp rank and thickness, with the overall symplectic rank when
/// constant.
#[derive(Debug, Clone)]
pub struct RankProfile {
    pub per_symp: Vec<(u32, Thickness)>,
    pub symplectic_rank: Option<u32>,
    pub uniform_thickness: Option<Thickness>,
}

impl RankProfile {
    pub fn of(symps: &SympSet) -> RankProfile {
        let per_symp: Vec<(u32, Thickness)> =
            symps.symps.iter().map(|s| (s.rank, s.thickness)).collect();
        let symplectic_rank = match per_symp.first() {
            Some(&(r, _)) if per_symp.iter().all(|&(x, _)| x == r) => Some(r),
            _ => None,
        };
        let uniform_thickness = match per_symp.first() {
            Some(&(_, t)) if per_symp.iter().all(|&(_, x)| x == t) => Some(t),
            _ => None,
        };
        RankProfile {
            per_symp,
            symplectic_rank,
            uniform_thickness,
        }
    }
}

/// The aggregate imbrex verdict.
pub struct ImbrexReport {
    /// PPS1, diameter, PPS2, PPS4, Imb, symplectic-rank, symp-thickness
    pub reports: Vec<AxiomReport>,
    pub profile: Option<RankProfile>,
    pub symps: Option<SympSet>,
}

impl ImbrexReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }

    pub fn symplectic_rank(&self) -> Option<u32> {
        self.profile.as_ref().and_then(|p| p.symplectic_rank)
    }
}

/// Conjunction of the strong parapolar check, (PPS4) and (Imb), plus the
/// rank profile with its constancy and thickness-uniformity verdicts.
pub fn is_imbrex(g: &IncidenceGeometry, policy: &ScanPolicy) -> ImbrexReport {
    let para = check_strong_parapolar_diam2(g, policy);
    let mut reports = para.reports;
    let symps = para.symps;
    let parapolar_ok = reports.iter().all(|r| r.passed());

    reports.push(check_pps4(g, policy));

    let profile = match (&symps, parapolar_ok) {
        (Some(set), true) => {
            reports.push(check_imb(g, set, policy));
            let profile = RankProfile::of(set);
            let t = Instant::now();
            let rank_report = match profile.symplectic_rank {
                Some(r) => AxiomReport::pass_with(
                    "symplectic-rank",
                    Witness::SympCensus {
                        count: set.len(),
                        rank: r,
                        thickness: profile
                            .uniform_thickness
                            .map_or("mixed".to_string(), |t| t.to_string()),
                    },
                ),
                None => AxiomReport::fail(
                    "symplectic-rank",
                    Witness::MixedRank {
                        ranks: profile.per_symp.iter().map(|&(r, _)| r).collect(),
                    },
                ),
            };
            reports.push(rank_report.timed(t));
            let t = Instant::now();
            let thick_report = match profile.uniform_thickness {
                Some(_) => AxiomReport::pass("symp-thickness"),
                None => AxiomReport::fail(
                    "symp-thickness",
                    Witness::MixedThickness {
                        classes: profile
                            .per_symp
                            .iter()
                            .map(|&(_, t)| t.to_string())
                            .collect(),
                    },
                ),
            };
            reports.push(thick_report.timed(t));
            Some(profile)
        }
        _ => None,
    };

    ImbrexReport {
        reports,
        profile,
        symps,
    }
}
