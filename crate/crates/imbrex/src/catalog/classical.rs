//! Classical generalized quadrangles from forms, and grids.

use super::CatalogError;
use crate::galois::forms::{isotropic_subspaces, standard, SesquilinearForm};
use crate::galois::{Gf, ProjSubspace, Vector};
use crate::geometry::IncidenceGeometry;
use rustc_hash::FxHashMap;

/// The m x n grid: points are cells, lines are the m rows and n columns.
pub fn grid(m: usize, n: usize) -> Result<IncidenceGeometry, CatalogError> {
    if m < 2 || n < 2 {
        return Err(CatalogError::BadParameter {
            name: "grid".into(),
            detail: format!("sides must be at least 2, got {m}x{n}"),
        });
    }
    let mut lines: Vec<Vec<u32>> = Vec::with_capacity(m + n);
    for i in 0..m {
        lines.push((0..n).map(|j| (i * n + j) as u32).collect());
    }
    for j in 0..n {
        lines.push((0..m).map(|i| (i * n + j) as u32).collect());
    }
    Ok(IncidenceGeometry::build(format!("grid({m},{n})"), m * n, lines)
        .expect("grid lines are valid"))
}

/// A quadrangle cut out of PG(n, q) by a form: coordinates retained.
#[derive(Debug, Clone)]
pub struct FormGeometry {
    pub field: Gf,
    pub ambient: usize,
    /// normalized coordinates, index = abstract point id
    pub points: Vec<Vector>,
    /// totally isotropic lines as subspaces, index = abstract line id
    pub lines: Vec<ProjSubspace>,
    pub geometry: IncidenceGeometry,
}

pub(crate) fn from_form(
    name: &str,
    field: Gf,
    ambient: usize,
    form: &SesquilinearForm,
) -> Result<FormGeometry, CatalogError> {
    let point_subs = isotropic_subspaces(form, &field, ambient, 0)?;
    let points: Vec<Vector> = point_subs.iter().map(|s| s.basis()[0].clone()).collect();
    let mut id_of: FxHashMap<Vector, u32> = FxHashMap::default();
    for (i, p) in points.iter().enumerate() {
        id_of.insert(p.clone(), i as u32);
    }
    let line_subs = isotropic_subspaces(form, &field, ambient, 1)?;
    let mut by_key: FxHashMap<Vec<u32>, ProjSubspace> = FxHashMap::default();
    let mut abstract_lines: Vec<Vec<u32>> = Vec::with_capacity(line_subs.len());
    for l in line_subs {
        let mut key: Vec<u32> = l.points(&field).iter().map(|p| id_of[p]).collect();
        key.sort_unstable();
        abstract_lines.push(key.clone());
        by_key.insert(key, l);
    }
    let geometry = IncidenceGeometry::build(name, points.len(), abstract_lines)
        .expect("isotropic lines are valid");
    // build() orders lines canonically; realign the coordinate lines so
    // that abstract line id i corresponds to lines[i]
    let lines: Vec<ProjSubspace> = geometry
        .lines()
        .iter()
        .map(|l| by_key.remove(l).expect("isotropic lines are distinct"))
        .collect();
    Ok(FormGeometry {
        field,
        ambient,
        points,
        lines,
        geometry,
    })
}

/// W(q): all points of PG(3,q), lines totally isotropic under the
/// standard alternating form.
pub fn symplectic_w(q_field: Gf) -> Result<FormGeometry, CatalogError> {
    let name = format!("w({})", q_field.order());
    let form = standard::symplectic4(&q_field);
    from_form(&name, q_field, 3, &form)
}

/// Q(4,q): the parabolic quadric in PG(4,q).
pub fn parabolic_q4(q_field: Gf) -> Result<FormGeometry, CatalogError> {
    let name = format!("q4({})", q_field.order());
    let form = standard::parabolic5(&q_field);
    from_form(&name, q_field, 4, &form)
}

/// Q-(5,q): the elliptic quadric in PG(5,q).
pub fn elliptic_q5(q_field: Gf) -> Result<FormGeometry, CatalogError> {
    let name = format!("qminus5({})", q_field.order());
    let form = standard::elliptic6(&q_field);
    from_form(&name, q_field, 5, &form)
}

/// H(3,q^2): the Hermitian surface in PG(3,q^2). The field order is q^2.
pub fn hermitian_h3(field: Gf) -> Result<FormGeometry, CatalogError> {
    let name = format!("h3({})", field.order());
    let form = standard::hermitian(3);
    from_form(&name, field, 3, &form)
}

/// H(4,q^2): the Hermitian variety in PG(4,q^2). The field order is q^2.
pub fn hermitian_h4(field: Gf) -> Result<FormGeometry, CatalogError> {
    let name = format!("h4({})", field.order());
    let form = standard::hermitian(4);
    from_form(&name, field, 4, &form)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w2_is_15_15_with_degree_3() {
        let g = symplectic_w(Gf::new(2, 1).unwrap()).unwrap();
        assert_eq!(g.geometry.point_count(), 15);
        assert_eq!(g.geometry.line_count(), 15);
        for p in g.geometry.points() {
            assert_eq!(g.geometry.index().lines_at(p).len(), 3);
        }
        for l in g.geometry.lines() {
            assert_eq!(l.len(), 3);
        }
    }

    #[test]
    fn classical_counts() {
        assert_eq!(
            parabolic_q4(Gf::new(2, 1).unwrap()).unwrap().geometry.point_count(),
            15
        );
        let q5 = elliptic_q5(Gf::new(2, 1).unwrap()).unwrap();
        assert_eq!(q5.geometry.point_count(), 27);
        assert_eq!(q5.geometry.line_count(), 45);
        let h3 = hermitian_h3(Gf::new(2, 2).unwrap()).unwrap();
        assert_eq!(h3.geometry.point_count(), 45);
        assert_eq!(h3.geometry.line_count(), 27);
    }
}
