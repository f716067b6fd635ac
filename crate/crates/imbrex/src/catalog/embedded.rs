//! Quadrangles embedded in projective space, and the imbrex geometry
//! built from one: points are the lines of the embedded quadrangle, and
//! lines are the maximal pencils carried by planes containing at least
//! two quadrangle lines.

use super::classical::FormGeometry;
use super::CatalogError;
use crate::galois::{Gf, ProjSubspace, Vector};
use crate::geometry::IncidenceGeometry;
use crate::gq::{classify_gq, GqClass};
use rustc_hash::FxHashMap;

/// A generalized quadrangle given by projective coordinates: its points
/// are points of PG(n, q) and its lines are full projective lines.
#[derive(Debug, Clone)]
pub struct EmbeddedQuadrangle {
    pub field: Gf,
    pub ambient: usize,
    pub points: Vec<Vector>,
    pub lines: Vec<ProjSubspace>,
    pub geometry: IncidenceGeometry,
}

impl From<FormGeometry> for EmbeddedQuadrangle {
    fn from(fg: FormGeometry) -> EmbeddedQuadrangle {
        EmbeddedQuadrangle {
            field: fg.field,
            ambient: fg.ambient,
            points: fg.points,
            lines: fg.lines,
            geometry: fg.geometry,
        }
    }
}

impl EmbeddedQuadrangle {
    /// The abstract structure must be a generalized quadrangle and every
    /// listed line must be a full projective line inside the point set.
    pub fn validate(&self) -> Result<GqClass, CatalogError> {
        let class = classify_gq(&self.geometry);
        if !class.is_gq() {
            return Err(CatalogError::Degenerate(format!(
                "embedded structure is not a generalized quadrangle: {class:?}"
            )));
        }
        let mut have: FxHashMap<&Vector, ()> = FxHashMap::default();
        for p in &self.points {
            have.insert(p, ());
        }
        for l in &self.lines {
            for p in l.points(&self.field) {
                if !have.contains_key(&p) {
                    return Err(CatalogError::Degenerate(format!(
                        "line point {p:?} is not a quadrangle point"
                    )));
                }
            }
        }
        Ok(class)
    }
}

/// The geometry whose points are the lines of the embedded quadrangle and
/// whose lines are the maximal pencils: for a quadrangle point p and a
/// plane through p carrying at least two quadrangle lines, the set of all
/// quadrangle lines through p inside that plane.
///
/// Thickness of the resulting symps is not assumed here; it is checked
/// downstream by the axiom suite.
pub fn imbrex_from_embedded_quadrangle(
    omega: &EmbeddedQuadrangle,
) -> Result<IncidenceGeometry, CatalogError> {
    let f = &omega.field;
    let g = &omega.geometry;
    let mut gamma_lines: Vec<Vec<u32>> = Vec::new();
    let mut qualifying_planes: std::collections::HashSet<Vec<Vector>> =
        std::collections::HashSet::new();

    for p in g.points() {
        let at = g.index().lines_at(p);
        // Group the lines through p by the plane any two of them span.
        let mut pencils: FxHashMap<Vec<Vector>, Vec<u32>> = FxHashMap::default();
        for (i, &li) in at.iter().enumerate() {
            for &lj in &at[i + 1..] {
                let plane = omega.lines[li as usize].span(f, &omega.lines[lj as usize]);
                if plane.rank() != 3 {
                    continue;
                }
                let key = plane.basis().to_vec();
                let entry = pencils.entry(key).or_default();
                for l in [li, lj] {
                    if !entry.contains(&l) {
                        entry.push(l);
                    }
                }
            }
        }
        for (plane, mut members) in pencils {
            qualifying_planes.insert(plane);
            members.sort_unstable();
            gamma_lines.push(members);
        }
    }

    if qualifying_planes.len() < 2 {
        return Err(CatalogError::Degenerate(format!(
            "only {} plane(s) carry two or more quadrangle lines",
            qualifying_planes.len()
        )));
    }

    let gamma = IncidenceGeometry::build(
        format!("imbrex-{}", g.name()),
        omega.lines.len(),
        gamma_lines,
    )
    .expect("pencils have at least two members");

    // A complete collinearity graph leaves no non-collinear pairs and
    // therefore no symps; the construction is degenerate.
    let n = gamma.point_count();
    let complete = gamma
        .points()
        .all(|p| gamma.index().neighbors(p).count() == n - 1);
    if complete {
        return Err(CatalogError::Degenerate(
            "every pair of quadrangle lines is collinear in the derived geometry".into(),
        ));
    }
    Ok(gamma)
}

/// Planes of PG(n, q) containing at least two quadrangle lines, by direct
/// enumeration. The pencil construction must coincide with this; exposed
/// for the equivalence test.
pub fn qualifying_planes_direct(omega: &EmbeddedQuadrangle) -> Vec<(ProjSubspace, Vec<u32>)> {
    let f = &omega.field;
    let planes = crate::galois::pg_subspaces(f, omega.ambient, 2).expect("planes exist");
    let mut out = Vec::new();
    for plane in planes {
        let inside: Vec<u32> = omega
            .lines
            .iter()
            .enumerate()
            .filter(|(_, l)| plane.contains(f, l))
            .map(|(i, _)| i as u32)
            .collect();
        if inside.len() >= 2 {
            out.push((plane, inside));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::classical::{hermitian_h3, parabolic_q4};
    use crate::galois::pg_points;

    #[test]
    fn q4_imbrex_has_two_point_pencils() {
        let omega: EmbeddedQuadrangle = parabolic_q4(Gf::new(2, 1).unwrap()).unwrap().into();
        assert!(omega.validate().is_ok());
        let gamma = imbrex_from_embedded_quadrangle(&omega).unwrap();
        assert_eq!(gamma.point_count(), 15);
        // no plane section of a quadric carries 3 concurrent lines
        assert!(gamma.lines().iter().all(|l| l.len() == 2));
        assert_eq!(gamma.line_count(), 45, "3 concurrent pairs at each of 15 points");
    }

    #[test]
    fn h3_imbrex_is_the_dual_quadrangle() {
        let omega: EmbeddedQuadrangle = hermitian_h3(Gf::new(2, 2).unwrap()).unwrap().into();
        let gamma = imbrex_from_embedded_quadrangle(&omega).unwrap();
        // all 3 lines through a Hermitian point are coplanar (tangent plane)
        assert_eq!(gamma.point_count(), 27);
        assert_eq!(gamma.line_count(), 45);
        assert_eq!(classify_gq(&gamma), GqClass::Thick { s: 2, t: 4 });
    }

    #[test]
    fn pencils_coincide_with_qualifying_planes() {
        // the efficient pencil construction and the raw definition (one
        // derived line per plane carrying two or more quadrangle lines)
        // produce the same line sets
        for omega in [
            EmbeddedQuadrangle::from(parabolic_q4(Gf::new(2, 1).unwrap()).unwrap()),
            EmbeddedQuadrangle::from(hermitian_h3(Gf::new(2, 2).unwrap()).unwrap()),
        ] {
            let gamma = imbrex_from_embedded_quadrangle(&omega).unwrap();
            let direct = qualifying_planes_direct(&omega);
            assert_eq!(direct.len(), gamma.line_count());
            for (_, mut inside) in direct {
                inside.sort_unstable();
                assert!(
                    gamma.lines().contains(&inside),
                    "plane content {inside:?} is a derived line"
                );
            }
        }
    }

    #[test]
    fn all_lines_through_one_point_is_degenerate() {
        // three non-coplanar lines of PG(3,2) through the origin point
        let f = Gf::new(2, 1).unwrap();
        let e = |i: usize| {
            let mut v = vec![0u32; 4];
            v[i] = 1;
            v
        };
        let lines: Vec<ProjSubspace> = (1..4)
            .map(|i| ProjSubspace::from_vectors(&f, 3, &[e(0), e(i)]))
            .collect();
        let mut pts: Vec<Vector> = Vec::new();
        for l in &lines {
            for p in l.points(&f) {
                if !pts.contains(&p) {
                    pts.push(p);
                }
            }
        }
        let mut id_of = FxHashMap::default();
        for (i, p) in pts.iter().enumerate() {
            id_of.insert(p.clone(), i as u32);
        }
        let abstract_lines: Vec<Vec<u32>> = lines
            .iter()
            .map(|l| l.points(&f).iter().map(|p| id_of[p]).collect())
            .collect();
        let geometry = IncidenceGeometry::build("pencil", pts.len(), abstract_lines).unwrap();
        let omega = EmbeddedQuadrangle {
            field: f,
            ambient: 3,
            points: pts,
            lines,
            geometry,
        };
        match imbrex_from_embedded_quadrangle(&omega) {
            Err(CatalogError::Degenerate(_)) => {}
            other => panic!("expected degenerate, got {other:?}"),
        }
        let _ = pg_points(&omega.field, 3);
    }
}
