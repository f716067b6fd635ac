//! Coordinatized Mazzocca-Melone sets for the catalog geometries: the
//! Segre embedding, the Pluecker embedding of the line Grassmannian, and
//! the spinor embedding of the half-spin geometry.

use super::halfspin::{halfspin_d5, HalfSpinGeometry};
use super::CatalogError;
use crate::galois::{normalize_point, pg_points, pg_subspaces, Gf, Vector};
use crate::mm::EmbeddedMmSet;
use crate::scan::ScanPolicy;

/// The Segre embedding of PG(a, q) x PG(b, q) in PG((a+1)(b+1)-1, q):
/// point pair (u, v) goes to the flattened tensor u (x) v. The family is
/// the 3-space spans of the sub-grids L1 x L2, given by their point sets.
pub fn segre_embedded(a: usize, b: usize, field: Gf) -> Result<EmbeddedMmSet, CatalogError> {
    if a < 1 || b < 1 {
        return Err(CatalogError::BadParameter {
            name: "segre".into(),
            detail: format!("factor dimensions must be at least 1, got ({a},{b})"),
        });
    }
    let pa = pg_points(&field, a);
    let pb = pg_points(&field, b);
    let nb = pb.len();
    let mut points: Vec<Vector> = Vec::with_capacity(pa.len() * nb);
    for u in &pa {
        for v in &pb {
            let mut w = Vec::with_capacity(u.len() * v.len());
            for &ui in u {
                for &vj in v {
                    w.push(field.mul(ui, vj));
                }
            }
            points.push(normalize_point(&field, &w).expect("tensor of nonzero vectors"));
        }
    }
    let lines_a = pg_subspaces(&field, a, 1).expect("a >= 1");
    let lines_b = pg_subspaces(&field, b, 1).expect("b >= 1");
    let idx_a: rustc_hash::FxHashMap<&Vector, u32> =
        pa.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
    let idx_b: rustc_hash::FxHashMap<&Vector, u32> =
        pb.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
    let mut xi: Vec<Vec<u32>> = Vec::new();
    for la in &lines_a {
        let ia: Vec<u32> = la.points(&field).iter().map(|p| idx_a[p]).collect();
        for lb in &lines_b {
            let ib: Vec<u32> = lb.points(&field).iter().map(|p| idx_b[p]).collect();
            let mut members = Vec::with_capacity(ia.len() * ib.len());
            for &i in &ia {
                for &j in &ib {
                    members.push(i * nb as u32 + j);
                }
            }
            members.sort_unstable();
            xi.push(members);
        }
    }
    let ambient = (a + 1) * (b + 1) - 1;
    EmbeddedMmSet::new(field, ambient, points, xi, 2, 2).map_err(|e| {
        CatalogError::BadParameter {
            name: "segre".into(),
            detail: e.to_string(),
        }
    })
}

/// The Pluecker embedding of the line Grassmannian of PG(n, q) in
/// PG(C(n+1,2)-1, q). Point order matches the abstract grassmann builder.
/// The family is one member per solid of PG(n, q): the span of the
/// Pluecker images of the lines inside it.
pub fn pluecker_embedded(n: usize, field: Gf) -> Result<EmbeddedMmSet, CatalogError> {
    if n < 4 {
        return Err(CatalogError::BadParameter {
            name: "grassmann".into(),
            detail: format!("the embedded family needs n >= 4, got {n}"),
        });
    }
    let lines = pg_subspaces(&field, n, 1).expect("lines exist");
    let points: Vec<Vector> = lines
        .iter()
        .map(|l| {
            let u = &l.basis()[0];
            let v = &l.basis()[1];
            let mut w = Vec::with_capacity((n + 1) * n / 2);
            for i in 0..=n {
                for j in i + 1..=n {
                    let m = field.sub(field.mul(u[i], v[j]), field.mul(u[j], v[i]));
                    w.push(m);
                }
            }
            normalize_point(&field, &w).expect("independent rows have a nonzero minor")
        })
        .collect();
    let solids = pg_subspaces(&field, n, 3).expect("n >= 4");
    let mut xi: Vec<Vec<u32>> = Vec::with_capacity(solids.len());
    for s in &solids {
        let members: Vec<u32> = lines
            .iter()
            .enumerate()
            .filter(|(_, l)| s.contains(&field, l))
            .map(|(i, _)| i as u32)
            .collect();
        xi.push(members);
    }
    let ambient = (n + 1) * n / 2 - 1;
    EmbeddedMmSet::new(field, ambient, points, xi, 4, 3).map_err(|e| {
        CatalogError::BadParameter {
            name: "grassmann".into(),
            detail: e.to_string(),
        }
    })
}

/// The spinor embedding of the half-spin geometry of Q+(9,2) in PG(15,2),
/// computed as the universal GF(2) embedding: the quotient of the point
/// space by the span of the line relations e_a + e_b + e_c. The quotient
/// dimension is verified to be 16.
pub fn spinor_embedded(hs: &HalfSpinGeometry) -> Result<EmbeddedMmSet, CatalogError> {
    let g = &hs.geometry;
    let n = g.point_count();
    let words = n.div_ceil(64);
    let row_of = |line: &[u32]| -> Vec<u64> {
        let mut row = vec![0u64; words];
        for &p in line {
            row[p as usize / 64] ^= 1 << (p % 64);
        }
        row
    };
    // forward elimination with one pivot row per leading column
    let mut pivot_rows: Vec<Option<Vec<u64>>> = vec![None; n];
    let first_set = |row: &[u64]| -> Option<usize> {
        row.iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    };
    for line in g.lines() {
        let mut row = row_of(line);
        while let Some(lead) = first_set(&row) {
            match &pivot_rows[lead] {
                Some(p) => {
                    for (a, b) in row.iter_mut().zip(p) {
                        *a ^= b;
                    }
                }
                None => {
                    pivot_rows[lead] = Some(row);
                    break;
                }
            }
        }
    }
    // back-substitute: each pivot row keeps its pivot and free columns only
    let pivot_cols: Vec<usize> = (0..n).filter(|&c| pivot_rows[c].is_some()).collect();
    for &c in pivot_cols.iter().rev() {
        let mut row = pivot_rows[c].take().expect("pivot present");
        loop {
            let other = (c + 1..n).find(|&d| {
                d != c && pivot_rows[d].is_some() && row[d / 64] >> (d % 64) & 1 == 1
            });
            match other {
                Some(d) => {
                    let p = pivot_rows[d].as_ref().expect("pivot present").clone();
                    for (a, b) in row.iter_mut().zip(&p) {
                        *a ^= b;
                    }
                }
                None => break,
            }
        }
        pivot_rows[c] = Some(row);
    }
    let free_cols: Vec<usize> = (0..n).filter(|&c| pivot_rows[c].is_none()).collect();
    if free_cols.len() != 16 {
        return Err(CatalogError::Degenerate(format!(
            "universal embedding has dimension {}, expected 16",
            free_cols.len()
        )));
    }
    let col_index: rustc_hash::FxHashMap<usize, usize> = free_cols
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();
    // coordinates of e_p in the quotient basis indexed by the free columns
    let coord = |p: usize| -> Vector {
        let mut v = vec![0u32; 16];
        match &pivot_rows[p] {
            None => v[col_index[&p]] = 1,
            Some(row) => {
                for &fc in &free_cols {
                    if row[fc / 64] >> (fc % 64) & 1 == 1 {
                        v[col_index[&fc]] = 1;
                    }
                }
            }
        }
        v
    };
    let field = Gf::new(2, 1).expect("GF(2)");
    let points: Vec<Vector> = (0..n).map(coord).collect();

    // family: for each singular point of the quadric, the generators
    // through it
    let xi: Vec<Vec<u32>> = hs.symp_generating_sets();

    EmbeddedMmSet::new(field, 15, points, xi, 6, 4).map_err(|e| CatalogError::BadParameter {
        name: "halfspin_d5".into(),
        detail: e.to_string(),
    })
}

/// Convenience: build the abstract half-spin geometry and its spinor
/// embedding in one call.
pub fn halfspin_embedded(q: u32) -> Result<EmbeddedMmSet, CatalogError> {
    let hs = halfspin_d5(q)?;
    spinor_embedded(&hs)
}

/// Discovery mode for fixture generation: given a bare spanning point
/// set, recover the family as the spans of the symps of the abstract
/// geometry.
pub fn discover_xi(
    field: Gf,
    ambient: usize,
    points: Vec<Vector>,
    d: u32,
    r: u32,
    policy: &ScanPolicy,
) -> Result<EmbeddedMmSet, CatalogError> {
    let probe = EmbeddedMmSet::new(field.clone(), ambient, points.clone(), vec![], d, r)
        .map_err(|e| CatalogError::BadParameter {
            name: "discover".into(),
            detail: e.to_string(),
        })?;
    let g = probe.abstract_geometry("discovery");
    let symps = crate::axioms::enumerate_symps(&g, policy).map_err(|e| {
        CatalogError::Degenerate(format!("discovery failed: {e}"))
    })?;
    let xi: Vec<Vec<u32>> = symps.symps.iter().map(|s| s.point_list.clone()).collect();
    EmbeddedMmSet::new(field, ambient, points, xi, d, r).map_err(|e| {
        CatalogError::BadParameter {
            name: "discover".into(),
            detail: e.to_string(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pluecker_4_2_shape() {
        let e = pluecker_embedded(4, Gf::new(2, 1).unwrap()).unwrap();
        assert_eq!(e.ambient, 9);
        assert_eq!(e.point_count(), 155);
        assert_eq!(e.xi_count(), 31, "one family member per solid");
        for xi in 0..31 {
            assert_eq!(e.xi_point_set(xi).count(), 35, "35 lines in a solid");
            assert_eq!(e.xi_span(xi).dim(), 5, "Klein quadric spans a 5-space");
        }
    }

    #[test]
    fn discovery_recovers_the_segre_family() {
        let full = segre_embedded(2, 2, Gf::new(2, 1).unwrap()).unwrap();
        let found = discover_xi(
            full.field.clone(),
            full.ambient,
            full.points.clone(),
            2,
            2,
            &ScanPolicy::default(),
        )
        .unwrap();
        assert_eq!(found.xi_count(), 49);
        let mut a: Vec<Vec<u32>> = full.xi.clone();
        let mut b: Vec<Vec<u32>> = found.xi.clone();
        for v in a.iter_mut().chain(b.iter_mut()) {
            v.sort_unstable();
        }
        a.sort();
        b.sort();
        assert_eq!(a, b, "discovered family equals the built one");
    }
}
