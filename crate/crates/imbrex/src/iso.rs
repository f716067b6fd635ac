//! Isomorphism search between small point-line geometries: backtracking
//! over adjacency-consistent assignments with local invariants, then a
//! full line-structure verification.

use crate::geometry::IncidenceGeometry;
use rustc_hash::FxHashSet;

/// Per-point invariant: degree plus the multiset of sizes of the lines
/// through the point.
fn point_key(g: &IncidenceGeometry, p: u32) -> (usize, Vec<usize>) {
    let mut sizes: Vec<usize> = g
        .index()
        .lines_at(p)
        .iter()
        .map(|&li| g.line(li).len())
        .collect();
    sizes.sort_unstable();
    (g.index().neighbors(p).count(), sizes)
}

/// Search for an isomorphism: a bijection of points preserving
/// collinearity that maps the line set of `a` onto the line set of `b`.
/// Returns the point map (a -> b) if one exists.
pub fn find_isomorphism(a: &IncidenceGeometry, b: &IncidenceGeometry) -> Option<Vec<u32>> {
    let n = a.point_count();
    if n != b.point_count() || a.line_count() != b.line_count() {
        return None;
    }
    let mut sizes_a: Vec<usize> = a.lines().iter().map(|l| l.len()).collect();
    let mut sizes_b: Vec<usize> = b.lines().iter().map(|l| l.len()).collect();
    sizes_a.sort_unstable();
    sizes_b.sort_unstable();
    if sizes_a != sizes_b {
        return None;
    }
    let keys_a: Vec<_> = (0..n as u32).map(|p| point_key(a, p)).collect();
    let keys_b: Vec<_> = (0..n as u32).map(|p| point_key(b, p)).collect();
    {
        let mut ka = keys_a.clone();
        let mut kb = keys_b.clone();
        ka.sort();
        kb.sort();
        if ka != kb {
            return None;
        }
    }

    // assignment order: BFS through the collinearity graph of `a`
    let mut order: Vec<u32> = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n as u32 {
        if seen[start as usize] {
            continue;
        }
        seen[start as usize] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            order.push(p);
            for q in a.index().neighbors(p).iter() {
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    queue.push_back(q);
                }
            }
        }
    }

    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    if assign(a, b, &keys_a, &keys_b, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    a: &IncidenceGeometry,
    b: &IncidenceGeometry,
    keys_a: &[(usize, Vec<usize>)],
    keys_b: &[(usize, Vec<usize>)],
    order: &[u32],
    depth: usize,
    map: &mut Vec<u32>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return lines_match(a, b, map);
    }
    let p = order[depth];
    'cand: for q in 0..b.point_count() as u32 {
        if used[q as usize] || keys_a[p as usize] != keys_b[q as usize] {
            continue;
        }
        for &earlier in &order[..depth] {
            let adj_a = a.index().adjacent(p, earlier);
            let adj_b = b.index().adjacent(q, map[earlier as usize]);
            if adj_a != adj_b {
                continue 'cand;
            }
        }
        map[p as usize] = q;
        used[q as usize] = true;
        if assign(a, b, keys_a, keys_b, order, depth + 1, map, used) {
            return true;
        }
        used[q as usize] = false;
        map[p as usize] = u32::MAX;
    }
    false
}

fn lines_match(a: &IncidenceGeometry, b: &IncidenceGeometry, map: &[u32]) -> bool {
    let lines_b: FxHashSet<Vec<u32>> = b.lines().iter().cloned().collect();
    for line in a.lines() {
        let mut image: Vec<u32> = line.iter().map(|&p| map[p as usize]).collect();
        image.sort_unstable();
        if !lines_b.contains(&image) {
            return false;
        }
    }
    true
}

/// Apply a point map to a family of point-index sets and compare with
/// another family, as sets of sets.
pub fn families_correspond(map: &[u32], from: &[Vec<u32>], to: &[Vec<u32>]) -> bool {
    let target: FxHashSet<Vec<u32>> = to
        .iter()
        .map(|s| {
            let mut v = s.clone();
            v.sort_unstable();
            v
        })
        .collect();
    if from.len() != target.len() {
        return false;
    }
    from.iter().all(|s| {
        let mut image: Vec<u32> = s.iter().map(|&p| map[p as usize]).collect();
        image.sort_unstable();
        target.contains(&image)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::classical::grid;

    #[test]
    fn grid_is_isomorphic_to_its_transpose() {
        let g = grid(3, 4).unwrap();
        let mut transposed: Vec<Vec<u32>> = Vec::new();
        for line in g.lines() {
            transposed.push(line.iter().map(|&p| (p % 4) * 3 + p / 4).collect());
        }
        let h = IncidenceGeometry::build("t", 12, transposed).unwrap();
        let map = find_isomorphism(&g, &h).expect("transpose is an isomorphism");
        for (i, line) in g.lines().iter().enumerate() {
            let mut image: Vec<u32> = line.iter().map(|&p| map[p as usize]).collect();
            image.sort_unstable();
            assert!(h.lines().contains(&image), "line {i} maps onto a line");
        }
    }

    #[test]
    fn different_grids_are_not_isomorphic() {
        let g = grid(3, 4).unwrap();
        let h = grid(2, 6).unwrap();
        assert!(find_isomorphism(&g, &h).is_none());
    }
}
