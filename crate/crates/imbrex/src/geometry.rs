//! The abstract point-line geometry engine: collinearity, distances,
//! singular and convex closures, maximal singular subspaces.
//!
//! Points are dense integer identifiers and point sets are dense bit sets,
//! because the hot loops (closures over all pairs, axiom scans) are set
//! algebra bound.

use crate::bitset::BitSet;
use rustc_hash::FxHashMap;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("line {index} contains invalid point identifier {point} (point_count {count})")]
    BadPointId { index: usize, point: u32, count: usize },
    #[error("line {index} has fewer than 2 distinct points: {points:?}")]
    ShortLine { index: usize, points: Vec<u32> },
    #[error("points {x} and {y} are not at collinearity distance 2 (distance {dist:?})")]
    NotAtDistanceTwo { x: u32, y: u32, dist: Option<u32> },
    #[error("point identifier {0} out of range")]
    BadPoint(u32),
}

/// A finite point-line geometry: dense point identifiers, lines as sorted
/// point sets. Lines are deduplicated and kept in lexicographic order, so
/// equal geometries have identical representations.
#[derive(Clone, PartialEq, Eq)]
pub struct IncidenceGeometry {
    name: String,
    point_count: usize,
    lines: Vec<Vec<u32>>,
    index: CollinearityIndex,
}

/// Adjacency matrix over points plus a line-through-pair lookup.
#[derive(Clone, PartialEq, Eq)]
pub struct CollinearityIndex {
    adjacency: Vec<BitSet>,
    lines_through: FxHashMap<(u32, u32), Vec<u32>>,
    lines_at: Vec<Vec<u32>>,
}

impl CollinearityIndex {
    fn build(point_count: usize, lines: &[Vec<u32>]) -> CollinearityIndex {
        let mut adjacency = vec![BitSet::new(point_count); point_count];
        let mut lines_through: FxHashMap<(u32, u32), Vec<u32>> = FxHashMap::default();
        let mut lines_at = vec![Vec::new(); point_count];
        for (li, line) in lines.iter().enumerate() {
            for (i, &a) in line.iter().enumerate() {
                lines_at[a as usize].push(li as u32);
                for &b in &line[i + 1..] {
                    adjacency[a as usize].insert(b);
                    adjacency[b as usize].insert(a);
                    lines_through.entry((a, b)).or_default().push(li as u32);
                }
            }
        }
        CollinearityIndex {
            adjacency,
            lines_through,
            lines_at,
        }
    }

    #[inline]
    pub fn adjacent(&self, x: u32, y: u32) -> bool {
        self.adjacency[x as usize].contains(y)
    }

    #[inline]
    pub fn neighbors(&self, x: u32) -> &BitSet {
        &self.adjacency[x as usize]
    }

    /// Lines containing both points (x != y), possibly empty.
    pub fn lines_through(&self, x: u32, y: u32) -> &[u32] {
        let key = if x < y { (x, y) } else { (y, x) };
        self.lines_through.get(&key).map_or(&[], |v| v.as_slice())
    }

    pub fn lines_at(&self, x: u32) -> &[u32] {
        &self.lines_at[x as usize]
    }
}

impl std::fmt::Debug for IncidenceGeometry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "IncidenceGeometry({:?}, {} points, {} lines)",
            self.name,
            self.point_count,
            self.lines.len()
        )
    }
}

impl IncidenceGeometry {
    /// Build a geometry from raw lines: points deduplicated within a line,
    /// lines sorted and deduplicated, index computed.
    pub fn build(
        name: impl Into<String>,
        point_count: usize,
        raw_lines: Vec<Vec<u32>>,
    ) -> Result<IncidenceGeometry, GeometryError> {
        let mut lines: Vec<Vec<u32>> = Vec::with_capacity(raw_lines.len());
        for (index, mut line) in raw_lines.into_iter().enumerate() {
            line.sort_unstable();
            line.dedup();
            if let Some(&p) = line.iter().find(|&&p| p as usize >= point_count) {
                return Err(GeometryError::BadPointId {
                    index,
                    point: p,
                    count: point_count,
                });
            }
            if line.len() < 2 {
                return Err(GeometryError::ShortLine {
                    index,
                    points: line,
                });
            }
            lines.push(line);
        }
        lines.sort();
        lines.dedup();
        let index = CollinearityIndex::build(point_count, &lines);
        Ok(IncidenceGeometry {
            name: name.into(),
            point_count,
            lines,
            index,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[Vec<u32>] {
        &self.lines
    }

    pub fn line(&self, id: u32) -> &[u32] {
        &self.lines[id as usize]
    }

    pub fn index(&self) -> &CollinearityIndex {
        &self.index
    }

    pub fn points(&self) -> impl Iterator<Item = u32> {
        0..self.point_count as u32
    }

    /// Every two distinct points on at most one common line.
    pub fn is_partial_linear(&self) -> bool {
        self.index.lines_through.values().all(|v| v.len() <= 1)
    }

    /// True when `set` is closed under lines: any line with two points in
    /// the set lies entirely inside it.
    pub fn is_subspace(&self, set: &BitSet) -> bool {
        let members = set.to_vec();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                for &li in self.index.lines_through(a, b) {
                    if !self.lines[li as usize].iter().all(|&p| set.contains(p)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// First non-collinear pair inside `set`, if any.
    pub fn non_collinear_pair(&self, set: &BitSet) -> Option<(u32, u32)> {
        let members = set.to_vec();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !self.index.adjacent(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Collinearity,
    Incidence,
}

/// Graph distance between two points; `None` when disconnected.
pub fn distance(
    g: &IncidenceGeometry,
    x: u32,
    y: u32,
    metric: Metric,
) -> Result<Option<u32>, GeometryError> {
    for p in [x, y] {
        if p as usize >= g.point_count {
            return Err(GeometryError::BadPoint(p));
        }
    }
    match metric {
        Metric::Collinearity => Ok(collinearity_distance(g, x, y)),
        Metric::Incidence => Ok(incidence_distances_from(g, x).0[y as usize]),
    }
}

fn collinearity_distance(g: &IncidenceGeometry, x: u32, y: u32) -> Option<u32> {
    if x == y {
        return Some(0);
    }
    let mut dist = vec![u32::MAX; g.point_count];
    dist[x as usize] = 0;
    let mut queue = VecDeque::from([x]);
    while let Some(p) = queue.pop_front() {
        let d = dist[p as usize];
        for q in g.index.neighbors(p).iter() {
            if dist[q as usize] == u32::MAX {
                dist[q as usize] = d + 1;
                if q == y {
                    return Some(d + 1);
                }
                queue.push_back(q);
            }
        }
    }
    None
}

/// BFS layers in the incidence graph from a point: distances to every
/// point and every line.
fn incidence_distances_from(g: &IncidenceGeometry, x: u32) -> (Vec<Option<u32>>, Vec<Option<u32>>) {
    let mut pd = vec![None; g.point_count];
    let mut ld = vec![None; g.lines.len()];
    pd[x as usize] = Some(0);
    let mut pts = vec![x];
    let mut d = 0;
    while !pts.is_empty() {
        let mut next_lines = Vec::new();
        for &p in &pts {
            for &li in g.index.lines_at(p) {
                if ld[li as usize].is_none() {
                    ld[li as usize] = Some(d + 1);
                    next_lines.push(li);
                }
            }
        }
        let mut next_pts = Vec::new();
        for &li in &next_lines {
            for &p in g.line(li) {
                if pd[p as usize].is_none() {
                    pd[p as usize] = Some(d + 2);
                    next_pts.push(p);
                }
            }
        }
        pts = next_pts;
        d += 2;
    }
    (pd, ld)
}

/// Eccentricity-style diameter of the collinearity graph.
/// Returns `None` when the graph is disconnected (or has no points).
pub fn collinearity_diameter(g: &IncidenceGeometry) -> Option<u32> {
    let n = g.point_count;
    if n == 0 {
        return None;
    }
    let mut diameter = 0;
    for x in g.points() {
        let mut dist = vec![u32::MAX; n];
        dist[x as usize] = 0;
        let mut reached = 1;
        let mut queue = VecDeque::from([x]);
        while let Some(p) = queue.pop_front() {
            for q in g.index.neighbors(p).iter() {
                if dist[q as usize] == u32::MAX {
                    dist[q as usize] = dist[p as usize] + 1;
                    reached += 1;
                    diameter = diameter.max(dist[q as usize]);
                    queue.push_back(q);
                }
            }
        }
        if reached < n {
            return None;
        }
    }
    Some(diameter)
}

/// Result of the singular-closure fixpoint: the closed set, and a witness
/// pair when the result is not singular.
#[derive(Debug, Clone)]
pub struct SingularClosure {
    pub points: BitSet,
    pub non_collinear_witness: Option<(u32, u32)>,
}

/// Least fixpoint of "add every line containing at least two points of the
/// set". The result is always a subspace; it is a singular subspace exactly
/// when no witness is reported.
pub fn singular_closure(g: &IncidenceGeometry, seed: &[u32]) -> SingularClosure {
    let mut set = BitSet::new(g.point_count);
    let mut members: Vec<u32> = Vec::new();
    let mut queue: VecDeque<(u32, u32)> = VecDeque::new();
    let push = |p: u32,
                    set: &mut BitSet,
                    members: &mut Vec<u32>,
                    queue: &mut VecDeque<(u32, u32)>| {
        if !set.contains(p) {
            for &q in members.iter() {
                queue.push_back((q, p));
            }
            set.insert(p);
            members.push(p);
        }
    };
    for &p in seed {
        push(p, &mut set, &mut members, &mut queue);
    }
    while let Some((a, b)) = queue.pop_front() {
        for &li in g.index.lines_through(a, b) {
            for &p in g.line(li) {
                push(p, &mut set, &mut members, &mut queue);
            }
        }
    }
    let non_collinear_witness = g.non_collinear_pair(&set);
    SingularClosure {
        points: set,
        non_collinear_witness,
    }
}

/// Convex closure of a non-collinear pair at collinearity distance 2:
/// the least subspace containing every point on any shortest incidence
/// path between any two of its members.
pub fn convex_closure(
    g: &IncidenceGeometry,
    x: u32,
    y: u32,
) -> Result<BitSet, GeometryError> {
    let d = distance(g, x, y, Metric::Collinearity)?;
    if d != Some(2) {
        return Err(GeometryError::NotAtDistanceTwo { x, y, dist: d });
    }
    let mut set = BitSet::new(g.point_count);
    let mut members: Vec<u32> = Vec::new();
    let mut queue: VecDeque<(u32, u32)> = VecDeque::new();

    fn push(
        p: u32,
        set: &mut BitSet,
        members: &mut Vec<u32>,
        queue: &mut VecDeque<(u32, u32)>,
    ) {
        if !set.contains(p) {
            for &q in members.iter() {
                queue.push_back((q, p));
            }
            set.insert(p);
            members.push(p);
        }
    }

    push(x, &mut set, &mut members, &mut queue);
    push(y, &mut set, &mut members, &mut queue);
    while let Some((a, b)) = queue.pop_front() {
        if g.index.adjacent(a, b) {
            // Shortest paths are a-L-b; the subspace condition adds L fully.
            for &li in g.index.lines_through(a, b) {
                for &p in g.line(li) {
                    push(p, &mut set, &mut members, &mut queue);
                }
            }
        } else {
            let common = g.index.neighbors(a).intersection(g.index.neighbors(b));
            if common.is_empty() {
                // Interior pair at distance > 2: fall back to the general
                // geodesic rule in the incidence graph.
                add_geodesics(g, a, b, &mut set, &mut members, &mut queue);
                continue;
            }
            for m in common.iter() {
                push(m, &mut set, &mut members, &mut queue);
                for &li in g.index.lines_through(a, m) {
                    for &p in g.line(li) {
                        push(p, &mut set, &mut members, &mut queue);
                    }
                }
                for &li in g.index.lines_through(m, b) {
                    for &p in g.line(li) {
                        push(p, &mut set, &mut members, &mut queue);
                    }
                }
            }
        }
    }
    Ok(set)
}

fn add_geodesics(
    g: &IncidenceGeometry,
    a: u32,
    b: u32,
    set: &mut BitSet,
    members: &mut Vec<u32>,
    queue: &mut VecDeque<(u32, u32)>,
) {
    let (pa, la) = incidence_distances_from(g, a);
    let (pb, lb) = incidence_distances_from(g, b);
    let Some(total) = pa[b as usize] else {
        return; // disconnected pair: no shortest path, nothing to add
    };
    let push_pt = |p: u32, set: &mut BitSet, members: &mut Vec<u32>, queue: &mut VecDeque<(u32, u32)>| {
        if !set.contains(p) {
            for &q in members.iter() {
                queue.push_back((q, p));
            }
            set.insert(p);
            members.push(p);
        }
    };
    for p in g.points() {
        if let (Some(da), Some(db)) = (pa[p as usize], pb[p as usize]) {
            if da + db == total {
                push_pt(p, set, members, queue);
            }
        }
    }
    for li in 0..g.lines.len() as u32 {
        if let (Some(da), Some(db)) = (la[li as usize], lb[li as usize]) {
            if da + db == total {
                for &p in g.line(li) {
                    push_pt(p, set, members, queue);
                }
            }
        }
    }
}

/// All maximal cliques of the collinearity graph, via Bron-Kerbosch with
/// pivoting on dense bit sets. Canonically ordered by point list.
pub fn maximal_cliques(adjacency: &[BitSet], n: usize) -> Vec<BitSet> {
    let mut out = Vec::new();
    let mut r = Vec::new();
    let p = BitSet::from_iter(n, 0..n as u32);
    let x = BitSet::new(n);
    bron_kerbosch(adjacency, &mut r, p, x, &mut out, n);
    let mut keyed: Vec<(Vec<u32>, BitSet)> = out.into_iter().map(|s| (s.to_vec(), s)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, s)| s).collect()
}

fn bron_kerbosch(
    adj: &[BitSet],
    r: &mut Vec<u32>,
    p: BitSet,
    mut x: BitSet,
    out: &mut Vec<BitSet>,
    n: usize,
) {
    if p.is_empty() && x.is_empty() {
        out.push(BitSet::from_iter(n, r.iter().copied()));
        return;
    }
    // Pivot: vertex of P union X with most neighbors in P.
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersection(&adj[u as usize]).count())
        .expect("P or X nonempty");
    let candidates = p.difference(&adj[pivot as usize]);
    let mut p = p;
    for v in candidates.iter() {
        r.push(v);
        let np = p.intersection(&adj[v as usize]);
        let nx = x.intersection(&adj[v as usize]);
        bron_kerbosch(adj, r, np, nx, out, n);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// All maximal singular subspaces: maximal sets of pairwise-collinear
/// points that are closed under full lines.
///
/// Maximal cliques that are subspaces are exactly the maximal singular
/// subspaces whenever every maximal clique is line-closed (true in all
/// one-or-all geometries). Otherwise cliques are split along offending
/// lines and globally maximal pieces are kept.
pub fn maximal_singular_subspaces(g: &IncidenceGeometry) -> Vec<BitSet> {
    let cliques = maximal_cliques(&g.index.adjacency, g.point_count);
    if cliques.iter().all(|c| g.is_subspace(c)) {
        return cliques;
    }
    let mut pieces: Vec<BitSet> = Vec::new();
    let mut seen: std::collections::HashSet<Vec<u32>> = std::collections::HashSet::new();
    for clique in &cliques {
        split_into_subspaces(g, clique.clone(), &mut pieces, &mut seen);
    }
    // Keep globally maximal pieces only.
    let mut keep: Vec<BitSet> = Vec::new();
    for (i, s) in pieces.iter().enumerate() {
        let dominated = pieces
            .iter()
            .enumerate()
            .any(|(j, t)| j != i && s.is_subset(t) && s != t);
        if !dominated && !keep.contains(s) {
            keep.push(s.clone());
        }
    }
    let mut keyed: Vec<(Vec<u32>, BitSet)> = keep.into_iter().map(|s| (s.to_vec(), s)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, s)| s).collect()
}

fn split_into_subspaces(
    g: &IncidenceGeometry,
    set: BitSet,
    out: &mut Vec<BitSet>,
    seen: &mut std::collections::HashSet<Vec<u32>>,
) {
    if !seen.insert(set.to_vec()) {
        return;
    }
    let members = set.to_vec();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            for &li in g.index.lines_through(a, b) {
                if !g.line(li).iter().all(|&p| set.contains(p)) {
                    // No subspace inside `set` contains both a and b.
                    let mut without_a = set.clone();
                    without_a.remove(a);
                    let mut without_b = set.clone();
                    without_b.remove(b);
                    split_into_subspaces(g, without_a, out, seen);
                    split_into_subspaces(g, without_b, out, seen);
                    return;
                }
            }
        }
    }
    out.push(set);
}

/// An induced subgeometry together with point and line maps back into the
/// parent geometry.
#[derive(Debug, Clone)]
pub struct Induced {
    pub geom: IncidenceGeometry,
    /// local point id -> parent point id
    pub point_map: Vec<u32>,
    /// local line id -> parent line id
    pub line_map: Vec<u32>,
}

/// The geometry induced on `points`: those points, and the parent lines
/// entirely contained in the set.
pub fn induced_subgeometry(g: &IncidenceGeometry, points: &BitSet) -> Induced {
    let point_map = points.to_vec();
    let mut local_of = FxHashMap::default();
    for (i, &p) in point_map.iter().enumerate() {
        local_of.insert(p, i as u32);
    }
    let mut lines = Vec::new();
    let mut line_map = Vec::new();
    for (li, line) in g.lines.iter().enumerate() {
        if line.iter().all(|&p| points.contains(p)) {
            lines.push(line.iter().map(|p| local_of[p]).collect());
            line_map.push(li as u32);
        }
    }
    let geom = IncidenceGeometry::build(
        format!("{}|induced", g.name),
        point_map.len(),
        lines,
    )
    .expect("induced lines are valid");
    Induced {
        geom,
        point_map,
        line_map,
    }
}

/// Longest chain of nested singular subspaces found by greedy growth
/// inside `within`, starting from a point of `seed_line` and the line
/// itself. Returns the number of nonempty subspaces in the chain.
pub fn greedy_singular_chain(g: &IncidenceGeometry, seed_line: &[u32], within: Option<&BitSet>) -> u32 {
    let mut chain = 1u32; // the point
    let line = singular_closure(g, seed_line);
    if line.non_collinear_witness.is_some() {
        return chain;
    }
    let mut current = line.points;
    if let Some(w) = within {
        if !current.is_subset(w) {
            return chain;
        }
    }
    chain += 1;
    loop {
        // Candidates collinear with everything in the current subspace.
        let mut cand = match within {
            Some(w) => w.clone(),
            None => BitSet::from_iter(g.point_count, g.points()),
        };
        for p in current.iter() {
            cand.intersect_with(g.index.neighbors(p));
        }
        cand.difference_with(&current);
        let mut best: Option<BitSet> = None;
        for c in cand.iter() {
            let mut seed = current.to_vec();
            seed.push(c);
            let ext = singular_closure(g, &seed);
            if ext.non_collinear_witness.is_some() {
                continue;
            }
            if let Some(w) = within {
                if !ext.points.is_subset(w) {
                    continue;
                }
            }
            if best.as_ref().is_none_or(|b| ext.points.count() < b.count()) {
                best = Some(ext.points);
            }
        }
        match best {
            Some(next) => {
                current = next;
                chain += 1;
            }
            None => return chain,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// m rows of n points each; rows and columns are the lines.
    pub fn grid(m: usize, n: usize) -> IncidenceGeometry {
        let mut lines = Vec::new();
        for i in 0..m {
            lines.push((0..n).map(|j| (i * n + j) as u32).collect());
        }
        for j in 0..n {
            lines.push((0..m).map(|i| (i * n + j) as u32).collect());
        }
        IncidenceGeometry::build(format!("grid({m},{n})"), m * n, lines).unwrap()
    }

    #[test]
    fn grid_build_and_index() {
        let g = grid(3, 3);
        assert_eq!(g.point_count(), 9);
        assert_eq!(g.line_count(), 6);
        for p in g.points() {
            assert_eq!(g.index().lines_at(p).len(), 2, "grid point on 2 lines");
        }
        assert!(g.is_partial_linear());
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            IncidenceGeometry::build("bad", 3, vec![vec![0, 5]]),
            Err(GeometryError::BadPointId { point: 5, .. })
        ));
        assert!(matches!(
            IncidenceGeometry::build("bad", 3, vec![vec![1, 1]]),
            Err(GeometryError::ShortLine { .. })
        ));
    }

    #[test]
    fn duplicate_lines_are_merged() {
        let g =
            IncidenceGeometry::build("dup", 4, vec![vec![0, 1, 2], vec![2, 1, 0], vec![0, 3]])
                .unwrap();
        assert_eq!(g.line_count(), 2);
    }

    #[test]
    fn grid_distances() {
        let g = grid(3, 3);
        // same row
        assert_eq!(distance(&g, 0, 1, Metric::Collinearity).unwrap(), Some(1));
        // no shared line
        assert_eq!(distance(&g, 0, 4, Metric::Collinearity).unwrap(), Some(2));
        assert_eq!(distance(&g, 0, 4, Metric::Incidence).unwrap(), Some(4));
        assert_eq!(collinearity_diameter(&g), Some(2));
    }

    #[test]
    fn disjoint_union_is_disconnected() {
        let g1 = grid(3, 3);
        let mut lines: Vec<Vec<u32>> = g1.lines().to_vec();
        for line in g1.lines() {
            lines.push(line.iter().map(|p| p + 9).collect());
        }
        let g = IncidenceGeometry::build("two-grids", 18, lines).unwrap();
        assert_eq!(distance(&g, 0, 9, Metric::Collinearity).unwrap(), None);
        assert_eq!(collinearity_diameter(&g), None);
    }

    #[test]
    fn singular_closure_of_line_pair() {
        let g = grid(3, 3);
        // two points on the same row close to the full row
        let c = singular_closure(&g, &[0, 1]);
        assert_eq!(c.points.to_vec(), vec![0, 1, 2]);
        assert!(c.non_collinear_witness.is_none());
        // two points with no common line: nothing to add, not singular
        let c = singular_closure(&g, &[0, 4]);
        assert_eq!(c.points.count(), 2);
        assert_eq!(c.non_collinear_witness, Some((0, 4)));
    }

    #[test]
    fn convex_closure_needs_distance_two() {
        let g = grid(3, 3);
        assert!(matches!(
            convex_closure(&g, 0, 1),
            Err(GeometryError::NotAtDistanceTwo { .. })
        ));
        // the closure of an opposite pair in a grid is the whole grid
        let c = convex_closure(&g, 0, 4).unwrap();
        assert_eq!(c.count(), 9);
    }

    #[test]
    fn convex_closure_handles_interior_pairs_beyond_distance_two() {
        // x and y at distance 2 through two midpoints; the closure pulls
        // in p and q, which sit at distance 3 from one another, so the
        // general geodesic rule runs for that interior pair
        let lines = vec![
            vec![0, 2, 4], // x, p, m1
            vec![4, 1],    // m1, y
            vec![0, 3],    // x, m2
            vec![3, 5, 1], // m2, q, y
        ];
        let g = IncidenceGeometry::build("long", 6, lines).unwrap();
        assert_eq!(distance(&g, 2, 5, Metric::Collinearity).unwrap(), Some(3));
        let closure = convex_closure(&g, 0, 1).unwrap();
        assert_eq!(closure.to_vec(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn grid_maximal_singular_subspaces_are_lines() {
        let g = grid(3, 3);
        let mss = maximal_singular_subspaces(&g);
        assert_eq!(mss.len(), 6);
        for s in &mss {
            assert_eq!(s.count(), 3);
        }
    }

    #[test]
    fn non_subspace_cliques_are_split() {
        // two lines sharing two points: cliques {0,1,2} and {0,1,3} are not
        // subspaces; the maximal singular subspaces are the singletons.
        let g = IncidenceGeometry::build("weird", 4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let mss = maximal_singular_subspaces(&g);
        assert_eq!(mss.len(), 4);
        for s in &mss {
            assert_eq!(s.count(), 1);
        }
    }

    #[test]
    fn induced_keeps_interior_lines() {
        let g = grid(3, 3);
        let sub = induced_subgeometry(&g, &BitSet::from_iter(9, [0, 1, 2, 3]));
        assert_eq!(sub.geom.point_count(), 4);
        assert_eq!(sub.geom.line_count(), 1, "only the top row fits");
        assert_eq!(sub.point_map[sub.geom.line(0)[0] as usize], 0);
    }

    #[test]
    fn greedy_chain_in_grid() {
        let g = grid(3, 3);
        let steps = greedy_singular_chain(&g, &[0, 1, 2], None);
        assert_eq!(steps, 2, "point then line; nothing extends a grid line");
    }
}
