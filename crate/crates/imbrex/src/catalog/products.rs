//! Line Grassmannians and Segre geometries, abstract form.

use super::CatalogError;
use crate::galois::{pg_subspaces, Gf, ProjSubspace};
use crate::geometry::IncidenceGeometry;
use rustc_hash::FxHashMap;

/// The line Grassmannian of PG(n, q): points are the lines of PG(n, q),
/// and lines are the pencils (incident point-plane pairs).
pub struct GrassmannGeometry {
    pub field: Gf,
    pub n: usize,
    /// Grassmannian point id -> line of PG(n, q)
    pub pg_lines: Vec<ProjSubspace>,
    pub geometry: IncidenceGeometry,
}

pub fn grassmann(n: usize, field: Gf) -> Result<GrassmannGeometry, CatalogError> {
    if n < 3 {
        return Err(CatalogError::BadParameter {
            name: "grassmann".into(),
            detail: format!("need n >= 3, got {n}"),
        });
    }
    let pg_lines = pg_subspaces(&field, n, 1).expect("dim 1 <= n");
    let mut id_of: FxHashMap<Vec<Vec<u32>>, u32> = FxHashMap::default();
    for (i, l) in pg_lines.iter().enumerate() {
        id_of.insert(l.basis().to_vec(), i as u32);
    }
    let planes = pg_subspaces(&field, n, 2).expect("dim 2 <= n");
    let mut lines: Vec<Vec<u32>> = Vec::new();
    for plane in &planes {
        for pt in plane.points(&field) {
            // the pencil: lines through pt inside the plane
            let mut pencil = Vec::new();
            for other in plane.points(&field) {
                if other != pt {
                    let l = ProjSubspace::from_vectors(&field, n, &[pt.clone(), other.clone()]);
                    let id = id_of[&l.basis().to_vec()];
                    if !pencil.contains(&id) {
                        pencil.push(id);
                    }
                }
            }
            lines.push(pencil);
        }
    }
    let geometry = IncidenceGeometry::build(
        format!("grassmann({n},{})", field.order()),
        pg_lines.len(),
        lines,
    )
    .expect("pencils are valid lines");
    Ok(GrassmannGeometry {
        field,
        n,
        pg_lines,
        geometry,
    })
}

/// The Segre geometry of PG(a, q) x PG(b, q): points are point pairs,
/// lines are {u} x M and L x {v}.
pub struct SegreGeometry {
    pub field: Gf,
    pub a: usize,
    pub b: usize,
    /// point id -> (index into PG(a,q) points, index into PG(b,q) points)
    pub factors: Vec<(u32, u32)>,
    pub geometry: IncidenceGeometry,
}

pub fn segre(a: usize, b: usize, field: Gf) -> Result<SegreGeometry, CatalogError> {
    if a < 1 || b < 1 {
        return Err(CatalogError::BadParameter {
            name: "segre".into(),
            detail: format!("factor dimensions must be at least 1, got ({a},{b})"),
        });
    }
    let pa = crate::galois::pg_points(&field, a);
    let pb = crate::galois::pg_points(&field, b);
    let na = pa.len();
    let nb = pb.len();
    let mut factors = Vec::with_capacity(na * nb);
    for i in 0..na as u32 {
        for j in 0..nb as u32 {
            factors.push((i, j));
        }
    }
    let id = |i: u32, j: u32| i * nb as u32 + j;

    let lines_a = pg_subspaces(&field, a, 1).expect("a >= 1");
    let lines_b = pg_subspaces(&field, b, 1).expect("b >= 1");
    let pa_index: FxHashMap<&Vec<u32>, u32> =
        pa.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
    let pb_index: FxHashMap<&Vec<u32>, u32> =
        pb.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();

    let mut lines: Vec<Vec<u32>> = Vec::new();
    // {u} x M
    for i in 0..na as u32 {
        for m in &lines_b {
            lines.push(m.points(&field).iter().map(|p| id(i, pb_index[p])).collect());
        }
    }
    // L x {v}
    for l in &lines_a {
        for j in 0..nb as u32 {
            lines.push(l.points(&field).iter().map(|p| id(pa_index[p], j)).collect());
        }
    }
    let geometry = IncidenceGeometry::build(
        format!("segre({a},{b},{})", field.order()),
        na * nb,
        lines,
    )
    .expect("product lines are valid");
    Ok(SegreGeometry {
        field,
        a,
        b,
        factors,
        geometry,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grassmann_4_2_counts() {
        let g = grassmann(4, Gf::new(2, 1).unwrap()).unwrap();
        assert_eq!(g.geometry.point_count(), 155);
        assert_eq!(g.geometry.line_count(), 1085, "one pencil per point-plane flag");
        for l in g.geometry.lines() {
            assert_eq!(l.len(), 3, "pencils over GF(2) have q+1 = 3 members");
        }
    }

    #[test]
    fn segre_2_2_2_counts() {
        let g = segre(2, 2, Gf::new(2, 1).unwrap()).unwrap();
        assert_eq!(g.geometry.point_count(), 49);
        assert_eq!(g.geometry.line_count(), 98);
    }

    #[test]
    fn segre_1_2_2_counts() {
        let g = segre(1, 2, Gf::new(2, 1).unwrap()).unwrap();
        assert_eq!(g.geometry.point_count(), 21);
        assert_eq!(g.geometry.line_count(), 28);
    }
}
