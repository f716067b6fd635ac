//! Generalized-quadrangle machinery: classification, perps, double perps,
//! regular pairs, ideal subquadrangles, and O'Nan configuration search.

use crate::bitset::BitSet;
use crate::geometry::{IncidenceGeometry, Induced};
use crate::report::Witness;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GqError {
    #[error("lines {0} and {1} are concurrent; a regular pair must not be")]
    ConcurrentPair(u32, u32),
    #[error("substructure is not a generalized quadrangle: {0:?}")]
    NotSubGq(GqClass),
    #[error("perp of an empty line set is not defined")]
    EmptyPerp,
    #[error("geometry is not a generalized quadrangle: {0:?}")]
    NotGq(Witness),
}

/// Outcome of the quadrangle classification. `Grid(a, b)` means two
/// parallel classes of a and b lines (so an a x b array of points);
/// `DualGrid(a, b)` is its dual with two co-cliques of points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GqClass {
    Thick { s: u64, t: u64 },
    Grid { a: u64, b: u64 },
    DualGrid { a: u64, b: u64 },
    NotGq { witness: Witness },
}

impl GqClass {
    pub fn is_gq(&self) -> bool {
        !matches!(self, GqClass::NotGq { .. })
    }

    pub fn is_thick(&self) -> bool {
        matches!(self, GqClass::Thick { .. })
    }
}

/// Classify a geometry as a (possibly weak) generalized quadrangle.
///
/// Checks, in order: partial linearity, no point collinear with all
/// others, and the projection property (for every non-incident point-line
/// pair exactly one point of the line is collinear with the point). The
/// survivors are sorted into thick quadrangles, grids and dual grids.
pub fn classify_gq(g: &IncidenceGeometry) -> GqClass {
    let n = g.point_count();
    if n == 0 || g.line_count() == 0 {
        return GqClass::NotGq {
            witness: Witness::Note {
                detail: "empty geometry".into(),
            },
        };
    }
    // partial linearity
    for (i, line) in g.lines().iter().enumerate() {
        for (ai, &a) in line.iter().enumerate() {
            for &b in &line[ai + 1..] {
                if g.index().lines_through(a, b).len() > 1 {
                    return GqClass::NotGq {
                        witness: Witness::Pair { x: a, y: b },
                    };
                }
            }
        }
        let _ = i;
    }
    // no point collinear with all other points
    for p in g.points() {
        if g.index().neighbors(p).count() == n - 1 {
            return GqClass::NotGq {
                witness: Witness::Point { point: p },
            };
        }
    }
    // projection property
    for p in g.points() {
        for (li, line) in g.lines().iter().enumerate() {
            if line.contains(&p) {
                continue;
            }
            let collinear = line.iter().filter(|&&q| g.index().adjacent(p, q)).count();
            if collinear != 1 {
                return GqClass::NotGq {
                    witness: Witness::PointLine {
                        point: p,
                        line: li as u32,
                        collinear,
                        line_size: line.len(),
                    },
                };
            }
        }
    }

    let degrees: Vec<usize> = g.points().map(|p| g.index().lines_at(p).len()).collect();
    let sizes: Vec<usize> = g.lines().iter().map(|l| l.len()).collect();

    if degrees.iter().all(|&d| d == 2) {
        // grid: two parallel classes of pairwise disjoint lines
        if let Some((a, b)) = grid_classes(g) {
            return GqClass::Grid { a, b };
        }
        return GqClass::NotGq {
            witness: Witness::Note {
                detail: "degree-2 geometry without a grid bipartition".into(),
            },
        };
    }
    if sizes.iter().all(|&s| s == 2) {
        if let Some((a, b)) = dual_grid_classes(g) {
            return GqClass::DualGrid { a, b };
        }
        return GqClass::NotGq {
            witness: Witness::Note {
                detail: "2-point-line geometry without a dual grid split".into(),
            },
        };
    }
    if sizes.iter().all(|&s| s >= 3) && degrees.iter().all(|&d| d >= 3) {
        let s = sizes[0];
        let t = degrees[0];
        if sizes.iter().all(|&x| x == s) && degrees.iter().all(|&d| d == t) {
            return GqClass::Thick {
                s: s as u64 - 1,
                t: t as u64 - 1,
            };
        }
        return GqClass::NotGq {
            witness: Witness::Note {
                detail: "thick quadrangle with non-constant parameters".into(),
            },
        };
    }
    GqClass::NotGq {
        witness: Witness::Note {
            detail: "irregular incidence degrees".into(),
        },
    }
}

/// 2-color the concurrency graph of the lines; a grid has two parallel
/// classes and every cross pair meets.
fn grid_classes(g: &IncidenceGeometry) -> Option<(u64, u64)> {
    let l = g.line_count();
    let mut color = vec![u8::MAX; l];
    let mut stack = vec![(0u32, 0u8)];
    while let Some((li, c)) = stack.pop() {
        if color[li as usize] != u8::MAX {
            if color[li as usize] != c {
                return None;
            }
            continue;
        }
        color[li as usize] = c;
        for &p in g.line(li) {
            for &mj in g.index().lines_at(p) {
                if mj != li {
                    stack.push((mj, 1 - c));
                }
            }
        }
    }
    if color.contains(&u8::MAX) {
        return None; // disconnected line structure
    }
    let a = color.iter().filter(|&&c| c == 0).count() as u64;
    let b = l as u64 - a;
    Some((a.min(b), a.max(b)))
}

/// Points of a dual grid split into two co-cliques with complete
/// collinearity between the sides.
fn dual_grid_classes(g: &IncidenceGeometry) -> Option<(u64, u64)> {
    let n = g.point_count();
    let mut color = vec![u8::MAX; n];
    let mut stack = vec![(0u32, 0u8)];
    while let Some((p, c)) = stack.pop() {
        if color[p as usize] != u8::MAX {
            if color[p as usize] != c {
                return None;
            }
            continue;
        }
        color[p as usize] = c;
        for q in g.index().neighbors(p).iter() {
            stack.push((q, 1 - c));
        }
    }
    if color.contains(&u8::MAX) {
        return None;
    }
    let a = color.iter().filter(|&&c| c == 0).count() as u64;
    let b = n as u64 - a;
    Some((a.min(b), a.max(b)))
}

/// A quadrangle with its line-concurrency matrix, ready for perp algebra.
pub struct GqView {
    geom: IncidenceGeometry,
    class: GqClass,
    /// concurrency[l] = lines sharing a point with l, including l itself
    concurrency: Vec<BitSet>,
}

impl GqView {
    /// Wrap a geometry. The classification is computed but not enforced;
    /// perp algebra is meaningful on any partial linear space.
    pub fn new(geom: IncidenceGeometry) -> GqView {
        let l = geom.line_count();
        let mut concurrency = vec![BitSet::new(l); l];
        for (li, row) in concurrency.iter_mut().enumerate() {
            row.insert(li as u32);
        }
        for p in geom.points() {
            let at = geom.index().lines_at(p);
            for (i, &a) in at.iter().enumerate() {
                for &b in &at[i + 1..] {
                    concurrency[a as usize].insert(b);
                    concurrency[b as usize].insert(a);
                }
            }
        }
        let class = classify_gq(&geom);
        GqView {
            geom,
            class,
            concurrency,
        }
    }

    pub fn from_induced(ind: &Induced) -> GqView {
        GqView::new(ind.geom.clone())
    }

    pub fn geometry(&self) -> &IncidenceGeometry {
        &self.geom
    }

    pub fn class(&self) -> &GqClass {
        &self.class
    }

    pub fn line_count(&self) -> usize {
        self.geom.line_count()
    }

    pub fn concurrent(&self, a: u32, b: u32) -> bool {
        self.concurrency[a as usize].contains(b)
    }

    /// T-perp: the set of lines concurrent with every member of T.
    /// A line is concurrent with itself, so T is contained in perp(perp(T)).
    pub fn perp(&self, t: &[u32]) -> Result<BitSet, GqError> {
        let Some((&first, rest)) = t.split_first() else {
            return Err(GqError::EmptyPerp);
        };
        let mut out = self.concurrency[first as usize].clone();
        for &l in rest {
            out.intersect_with(&self.concurrency[l as usize]);
        }
        Ok(out)
    }

    pub fn double_perp(&self, t: &[u32]) -> Result<BitSet, GqError> {
        let p = self.perp(t)?;
        if p.is_empty() {
            // every line is vacuously concurrent with all of the empty set
            return Ok(BitSet::from_iter(
                self.line_count(),
                0..self.line_count() as u32,
            ));
        }
        let members = p.to_vec();
        self.perp(&members)
    }
}

/// Outcome of the regularity test for a non-concurrent line pair.
#[derive(Debug, Clone)]
pub enum RegularPair {
    Regular {
        /// ({L,M}-perp)-perp
        double_perp: Vec<u32>,
        /// the distinct pair L', M' of the perp realizing it
        generators: (u32, u32),
    },
    NotRegular {
        perp: Vec<u32>,
        double_perp: Vec<u32>,
    },
}

impl RegularPair {
    pub fn is_regular(&self) -> bool {
        matches!(self, RegularPair::Regular { .. })
    }
}

/// ({L,M}-perp)-perp = {L',M'}-perp for some distinct L', M' in {L,M}-perp.
pub fn is_regular_pair(q: &GqView, l: u32, m: u32) -> Result<RegularPair, GqError> {
    if q.concurrent(l, m) {
        return Err(GqError::ConcurrentPair(l, m));
    }
    let perp = q.perp(&[l, m])?;
    let perp_members = perp.to_vec();
    let dp = q.perp(&perp_members)?;
    for (i, &a) in perp_members.iter().enumerate() {
        for &b in &perp_members[i + 1..] {
            if q.perp(&[a, b])? == dp {
                return Ok(RegularPair::Regular {
                    double_perp: dp.to_vec(),
                    generators: (a, b),
                });
            }
        }
    }
    Ok(RegularPair::NotRegular {
        perp: perp_members,
        double_perp: dp.to_vec(),
    })
}

/// Result of the ideality test.
#[derive(Debug, Clone)]
pub struct IdealCheck {
    pub ideal: bool,
    /// (point, missing line) if not ideal
    pub witness: Option<(u32, u32)>,
    pub sub_class: GqClass,
}

/// Is (subpoints, sublines) an ideal subquadrangle of `q`?
///
/// The substructure (line point sets restricted to `subpoints`) must be a
/// generalized quadrangle; ideality means every line of `q` through a
/// point of the substructure is one of `sublines`.
pub fn is_ideal_subquadrangle(
    q: &GqView,
    subpoints: &BitSet,
    sublines: &[u32],
) -> Result<IdealCheck, GqError> {
    let g = q.geometry();
    let members = subpoints.to_vec();
    let local_of: rustc_hash::FxHashMap<u32, u32> = members
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i as u32))
        .collect();
    let mut restricted: Vec<Vec<u32>> = Vec::new();
    for &li in sublines {
        let trace: Vec<u32> = g
            .line(li)
            .iter()
            .filter(|&&p| subpoints.contains(p))
            .map(|p| local_of[p])
            .collect();
        restricted.push(trace);
    }
    let sub = IncidenceGeometry::build("sub", members.len(), restricted)
        .map_err(|_| GqError::NotSubGq(GqClass::NotGq {
            witness: Witness::Note {
                detail: "a restricted line has fewer than 2 points".into(),
            },
        }))?;
    let sub_class = classify_gq(&sub);
    if !sub_class.is_gq() {
        return Err(GqError::NotSubGq(sub_class));
    }
    for &p in &members {
        for &li in g.index().lines_at(p) {
            if !sublines.contains(&li) {
                return Ok(IdealCheck {
                    ideal: false,
                    witness: Some((p, li)),
                    sub_class,
                });
            }
        }
    }
    Ok(IdealCheck {
        ideal: true,
        witness: None,
        sub_class,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OnanMode {
    NonClosing,
    Closing,
    Any,
}

/// Four distinct lines pairwise meeting in single distinct points; the
/// non-closing variant has exactly one disjoint pair (five points), the
/// closing variant has all six.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnanConfig {
    /// line identifiers of the parent geometry, ascending
    pub lines: [u32; 4],
    /// the intersection points, sorted (5 for non-closing, 6 for closing)
    pub points: Vec<u32>,
    pub closing: bool,
}

/// All O'Nan configurations among the lines of `g` lying entirely inside
/// `region`, in canonical order. An empty result is a valid answer.
pub fn find_onan(g: &IncidenceGeometry, region: &BitSet, mode: OnanMode) -> Vec<OnanConfig> {
    onan_search(g, region, mode, false)
}

/// First configuration in canonical order, if any.
pub fn find_onan_first(
    g: &IncidenceGeometry,
    region: &BitSet,
    mode: OnanMode,
) -> Option<OnanConfig> {
    onan_search(g, region, mode, true).into_iter().next()
}

fn onan_search(
    g: &IncidenceGeometry,
    region: &BitSet,
    mode: OnanMode,
    first_only: bool,
) -> Vec<OnanConfig> {
    let lines: Vec<u32> = (0..g.line_count() as u32)
        .filter(|&li| g.line(li).iter().all(|&p| region.contains(p)))
        .collect();
    let k = lines.len();
    let mut out = Vec::new();
    if k < 4 {
        return out;
    }
    // pairwise meets: None = disjoint, Some(p) = single point; pairs
    // sharing 2+ points are disqualified outright
    #[derive(Clone, Copy, PartialEq)]
    enum Meet {
        Disjoint,
        One(u32),
        Many,
    }
    let mut meet = vec![Meet::Disjoint; k * k];
    for i in 0..k {
        for j in i + 1..k {
            let a = g.line(lines[i]);
            let b = g.line(lines[j]);
            let common: Vec<u32> = a.iter().copied().filter(|p| b.contains(p)).collect();
            let m = match common.len() {
                0 => Meet::Disjoint,
                1 => Meet::One(common[0]),
                _ => Meet::Many,
            };
            meet[i * k + j] = m;
            meet[j * k + i] = m;
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            for u in j + 1..k {
                'next: for v in u + 1..k {
                    let idx = [i, j, u, v];
                    let mut pts: Vec<u32> = Vec::with_capacity(6);
                    let mut disjoint = 0;
                    for a in 0..4 {
                        for b in a + 1..4 {
                            match meet[idx[a] * k + idx[b]] {
                                Meet::Many => continue 'next,
                                Meet::Disjoint => disjoint += 1,
                                Meet::One(p) => pts.push(p),
                            }
                        }
                    }
                    let closing = match disjoint {
                        0 => true,
                        1 => false,
                        _ => continue 'next,
                    };
                    match (mode, closing) {
                        (OnanMode::NonClosing, true) | (OnanMode::Closing, false) => {
                            continue 'next
                        }
                        _ => {}
                    }
                    // intersection points must be pairwise distinct
                    let mut sorted = pts.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    if sorted.len() != pts.len() {
                        continue 'next;
                    }
                    out.push(OnanConfig {
                        lines: [lines[i], lines[j], lines[u], lines[v]],
                        points: sorted,
                        closing,
                    });
                    if first_only {
                        return out;
                    }
                }
            }
        }
    }
    out
}

/// Every two points on exactly one induced line and every two induced
/// lines meeting: the shape of a projective plane.
pub fn is_projective_plane_shaped(g: &IncidenceGeometry, region: &BitSet) -> bool {
    let lines: Vec<u32> = (0..g.line_count() as u32)
        .filter(|&li| g.line(li).iter().all(|&p| region.contains(p)))
        .collect();
    let members = region.to_vec();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            let joining = lines
                .iter()
                .filter(|&&li| {
                    let l = g.line(li);
                    l.contains(&a) && l.contains(&b)
                })
                .count();
            if joining != 1 {
                return false;
            }
        }
    }
    for (i, &a) in lines.iter().enumerate() {
        for &b in lines[i + 1..].iter() {
            let la = g.line(a);
            if !g.line(b).iter().any(|p| la.contains(p)) {
                return false;
            }
        }
    }
    true
}
