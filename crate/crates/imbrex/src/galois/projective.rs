//! Subspaces of PG(n, q) in canonical reduced row echelon form.
//!
//! A subspace is stored as an RREF basis over the field, so subspace
//! equality is raw comparison and every subspace has exactly one
//! representation. Enumeration walks pivot-column patterns in
//! lexicographic order and fills the free entries, which yields a fixed
//! canonical order used everywhere a "first" subspace is needed.

use super::field::Gf;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProjError {
    #[error("dimension {dim} out of range for PG({n}, q)")]
    DimOutOfRange { dim: i32, n: usize },
    #[error("vector length {got} does not match ambient {want}")]
    BadVectorLength { got: usize, want: usize },
    #[error("zero vector does not define a projective point")]
    ZeroVector,
}

pub type Vector = Vec<u32>;

/// Scale so the first nonzero coordinate is 1. Errors on the zero vector.
pub fn normalize_point(f: &Gf, v: &[u32]) -> Result<Vector, ProjError> {
    let lead = v.iter().position(|&c| c != 0).ok_or(ProjError::ZeroVector)?;
    let inv = f.inv(v[lead]).expect("nonzero leading coefficient");
    Ok(v.iter().map(|&c| f.mul(c, inv)).collect())
}

/// Row-reduce `rows` in place; returns pivot column indices.
#[allow(clippy::needless_range_loop)]
pub fn rref(f: &Gf, rows: &mut Vec<Vector>) -> Vec<usize> {
    let width = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(src) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, src);
        let inv = f.inv(rows[r][col]).expect("pivot is nonzero");
        for c in 0..width {
            rows[r][c] = f.mul(rows[r][c], inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let factor = rows[i][col];
                for c in 0..width {
                    let sub = f.mul(factor, rows[r][c]);
                    rows[i][c] = f.sub(rows[i][c], sub);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A projective subspace of PG(n, q), canonically represented.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjSubspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl std::fmt::Debug for ProjSubspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ProjSubspace(dim {}, {:?})", self.dim(), self.basis)
    }
}

impl ProjSubspace {
    /// Canonicalize an arbitrary spanning list of vectors.
    pub fn from_vectors(f: &Gf, ambient: usize, vectors: &[Vector]) -> ProjSubspace {
        let mut rows: Vec<Vector> = vectors.to_vec();
        rref(f, &mut rows);
        ProjSubspace {
            ambient,
            basis: rows,
        }
    }

    pub fn empty(ambient: usize) -> ProjSubspace {
        ProjSubspace {
            ambient,
            basis: vec![],
        }
    }

    /// Ambient projective dimension n.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Projective dimension: number of basis vectors minus one.
    pub fn dim(&self) -> i32 {
        self.basis.len() as i32 - 1
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains_vector(&self, f: &Gf, v: &[u32]) -> bool {
        let mut v = v.to_vec();
        for row in &self.basis {
            let lead = row.iter().position(|&c| c != 0).expect("rref row nonzero");
            if v[lead] != 0 {
                let factor = v[lead];
                for c in 0..v.len() {
                    v[c] = f.sub(v[c], f.mul(factor, row[c]));
                }
            }
        }
        v.iter().all(|&c| c == 0)
    }

    pub fn contains(&self, f: &Gf, other: &ProjSubspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(f, v))
    }

    pub fn span(&self, f: &Gf, other: &ProjSubspace) -> ProjSubspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        ProjSubspace::from_vectors(f, self.ambient, &rows)
    }

    pub fn span_with_vector(&self, f: &Gf, v: &[u32]) -> ProjSubspace {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        ProjSubspace::from_vectors(f, self.ambient, &rows)
    }

    /// Intersection of row spaces via the Zassenhaus block construction.
    pub fn meet(&self, f: &Gf, other: &ProjSubspace) -> ProjSubspace {
        let w = self.ambient + 1;
        let mut rows: Vec<Vector> = Vec::new();
        for v in &self.basis {
            let mut row = v.clone();
            row.extend(v.iter().copied());
            rows.push(row);
        }
        for v in &other.basis {
            let mut row = v.clone();
            row.extend(std::iter::repeat_n(0u32, w));
            rows.push(row);
        }
        rref(f, &mut rows);
        let meet_rows: Vec<Vector> = rows
            .iter()
            .filter(|r| r[..w].iter().all(|&c| c == 0))
            .map(|r| r[w..].to_vec())
            .collect();
        ProjSubspace::from_vectors(f, self.ambient, &meet_rows)
    }

    /// All projective points of the subspace, normalized, canonical order.
    pub fn points(&self, f: &Gf) -> Vec<Vector> {
        let k = self.basis.len();
        let mut out = Vec::new();
        // Combinations with leading coefficient 1 enumerate each point once.
        for lead in 0..k {
            let free = k - lead - 1;
            let fq = f.order() as u64;
            let total = fq.pow(free as u32);
            for mut idx in 0..total {
                let mut coeffs = vec![0u32; k];
                coeffs[lead] = 1;
                for c in coeffs.iter_mut().skip(lead + 1) {
                    *c = (idx % fq) as u32;
                    idx /= fq;
                }
                let mut v = vec![0u32; self.ambient + 1];
                for (ci, &co) in coeffs.iter().enumerate() {
                    if co != 0 {
                        for (vi, &b) in self.basis[ci].iter().enumerate() {
                            v[vi] = f.add(v[vi], f.mul(co, b));
                        }
                    }
                }
                out.push(normalize_point(f, &v).expect("combination is nonzero"));
            }
        }
        out.sort();
        out
    }
}

/// All points of PG(n, q) in canonical order.
pub fn pg_points(f: &Gf, n: usize) -> Vec<Vector> {
    let q = f.order() as u64;
    let mut out = Vec::new();
    for lead in 0..=n {
        let free = n - lead;
        let total = q.pow(free as u32);
        for mut idx in 0..total {
            let mut v = vec![0u32; n + 1];
            v[lead] = 1;
            for c in v.iter_mut().skip(lead + 1) {
                *c = (idx % q) as u32;
                idx /= q;
            }
            out.push(v);
        }
    }
    out.sort();
    out
}

/// All subspaces of projective dimension `dim` of PG(n, q).
///
/// Generates RREF matrices directly: choose pivot columns, fill free
/// entries; no canonicalization pass is needed afterwards.
pub fn pg_subspaces(f: &Gf, n: usize, dim: i32) -> Result<Vec<ProjSubspace>, ProjError> {
    if dim < 0 || dim as usize > n {
        return Err(ProjError::DimOutOfRange { dim, n });
    }
    let k = dim as usize + 1;
    let width = n + 1;
    let q = f.order();
    let mut out = Vec::new();

    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // Free positions: row i, columns beyond pivots[i] that are not later pivots.
        let mut free_pos: Vec<(usize, usize)> = Vec::new();
        for (i, &pc) in pivots.iter().enumerate() {
            for col in pc + 1..width {
                if !pivots[i + 1..].contains(&col) {
                    free_pos.push((i, col));
                }
            }
        }
        let total = (q as u64).pow(free_pos.len() as u32);
        for mut idx in 0..total {
            let mut rows = vec![vec![0u32; width]; k];
            for (i, &pc) in pivots.iter().enumerate() {
                rows[i][pc] = 1;
            }
            for &(i, col) in &free_pos {
                rows[i][col] = (idx % q as u64) as u32;
                idx /= q as u64;
            }
            out.push(ProjSubspace {
                ambient: n,
                basis: rows,
            });
        }

        // Next pivot combination in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if pivots[i] < width - (k - i) {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Gaussian binomial: number of j-dimensional vector subspaces of F_q^m.
pub fn gaussian_binomial(m: u32, j: u32, q: u64) -> u64 {
    if j > m {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..j {
        num *= (q as u128).pow(m - i) - 1;
        den *= (q as u128).pow(i + 1) - 1;
    }
    (num / den) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, k: u32) -> Gf {
        Gf::new(p, k).unwrap()
    }

    #[test]
    fn point_counts_match_gaussian_binomial() {
        let f2 = gf(2, 1);
        assert_eq!(pg_points(&f2, 4).len(), 31);
        assert_eq!(pg_points(&f2, 1).len(), 3);
        let f4 = gf(2, 2);
        assert_eq!(pg_points(&f4, 4).len() as u64, gaussian_binomial(5, 1, 4));
        assert_eq!(pg_points(&f4, 4).len(), 341);
    }

    #[test]
    fn subspace_counts_match_gaussian_binomial() {
        let f2 = gf(2, 1);
        assert_eq!(pg_subspaces(&f2, 4, 0).unwrap().len(), 31);
        assert_eq!(pg_subspaces(&f2, 4, 1).unwrap().len(), 155);
        assert_eq!(
            pg_subspaces(&f2, 4, 2).unwrap().len() as u64,
            gaussian_binomial(5, 3, 2)
        );
        let f3 = gf(3, 1);
        for d in 0..=2i32 {
            assert_eq!(
                pg_subspaces(&f3, 2, d).unwrap().len() as u64,
                gaussian_binomial(3, d as u32 + 1, 3)
            );
        }
        assert!(pg_subspaces(&f2, 3, 4).is_err());
    }

    #[test]
    fn enumerated_subspaces_are_canonical_and_distinct() {
        let f = gf(2, 2);
        let subs = pg_subspaces(&f, 2, 1).unwrap();
        assert_eq!(subs.len() as u64, gaussian_binomial(3, 2, 4));
        let mut seen = std::collections::HashSet::new();
        for s in &subs {
            let re = ProjSubspace::from_vectors(&f, 2, s.basis());
            assert_eq!(&re, s, "re-canonicalization is idempotent");
            assert!(seen.insert(s.basis().to_vec()), "no duplicates");
        }
    }

    #[test]
    fn subspace_points_and_membership() {
        let f = gf(2, 1);
        let line = ProjSubspace::from_vectors(&f, 3, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        let pts = line.points(&f);
        assert_eq!(pts.len(), 3);
        for p in &pts {
            assert!(line.contains_vector(&f, p));
        }
        assert!(!line.contains_vector(&f, &[0, 0, 1, 0]));
    }

    #[test]
    fn span_meet_dimension_formula_pg42_exhaustive() {
        // dim A + dim B = dim span(A,B) + dim meet(A,B), vector-space ranks.
        let f = gf(2, 1);
        let mut all: Vec<ProjSubspace> = Vec::new();
        for d in 0..=4 {
            all.extend(pg_subspaces(&f, 4, d).unwrap());
        }
        for a in &all {
            for b in &all {
                let s = a.span(&f, b);
                let m = a.meet(&f, b);
                assert_eq!(a.rank() + b.rank(), s.rank() + m.rank());
                assert!(s.contains(&f, a) && s.contains(&f, b));
                assert!(a.contains(&f, &m) && b.contains(&f, &m));
            }
        }
    }
}
