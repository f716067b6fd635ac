//! The half-spin geometry of the hyperbolic quadric Q+(9,2): points are
//! one family of generators (totally singular 5-dimensional vector
//! subspaces), and lines are the triples of same-family generators
//! through a common totally singular 3-space.
//!
//! Everything is specialized to GF(2): vectors of F_2^10 are u16 masks
//! and the quadratic form is x0 x1 + x2 x3 + ... + x8 x9.

use super::CatalogError;
use crate::geometry::IncidenceGeometry;
use rustc_hash::FxHashMap;

const DIM: usize = 10;
const SPACE: usize = 1 << DIM;

#[inline]
fn quad(v: u16) -> u32 {
    let mut q = 0u32;
    for i in (0..DIM).step_by(2) {
        q ^= ((v >> i) & (v >> (i + 1))) as u32 & 1;
    }
    q
}

#[inline]
fn bilinear(u: u16, v: u16) -> u32 {
    quad(u ^ v) ^ quad(u) ^ quad(v)
}

/// Echelon form of a GF(2) row space: pivots at the least-significant
/// set bits, ascending; canonical per subspace.
fn echelon(rows: &mut Vec<u16>) {
    let mut out: Vec<u16> = Vec::with_capacity(rows.len());
    for bit in 0..DIM as u16 {
        let mask = 1 << bit;
        let Some(pos) = rows.iter().position(|&r| r & mask != 0) else {
            continue;
        };
        let pivot = rows.swap_remove(pos);
        for r in rows.iter_mut() {
            if *r & mask != 0 {
                *r ^= pivot;
            }
        }
        for r in out.iter_mut() {
            if *r & mask != 0 {
                *r ^= pivot;
            }
        }
        out.push(pivot);
    }
    out.retain(|&r| r != 0);
    *rows = out;
}

pub struct HalfSpinGeometry {
    pub geometry: IncidenceGeometry,
    /// generator id -> echelon basis (5 rows over F_2^10)
    pub generators: Vec<Vec<u16>>,
    /// singular points of the quadric (nonzero masks)
    pub singular_points: Vec<u16>,
}

impl HalfSpinGeometry {
    /// For each singular point of the quadric: the ids of the chosen-
    /// family generators through it (the point sets of the symps).
    pub fn symp_generating_sets(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(self.singular_points.len());
        for &p in &self.singular_points {
            let members: Vec<u32> = self
                .generators
                .iter()
                .enumerate()
                .filter(|(_, basis)| in_span(basis, p))
                .map(|(i, _)| i as u32)
                .collect();
            out.push(members);
        }
        out
    }
}

fn in_span(basis: &[u16], mut v: u16) -> bool {
    for &b in basis {
        let lead = b & b.wrapping_neg(); // least-significant set bit
        if v & lead != 0 {
            v ^= b;
        }
    }
    v == 0
}

/// Enumerate all totally singular subspaces of a given vector dimension
/// via canonical greedy bases: each subspace is reached exactly once.
fn enumerate_ts_subspaces(target_dim: usize, singular: &[u16], perp_rows: &[Vec<u64>]) -> Vec<Vec<u16>> {
    let words = SPACE / 64;
    let mut root = vec![0u64; words];
    for &s in singular {
        root[s as usize / 64] |= 1 << (s % 64);
    }
    let mut out = Vec::new();
    let mut basis: Vec<u16> = Vec::new();
    let mut span: Vec<u16> = vec![0];
    dfs(
        target_dim,
        &mut basis,
        &mut span,
        &root,
        perp_rows,
        &mut out,
        words,
    );
    out
}

fn dfs(
    target: usize,
    basis: &mut Vec<u16>,
    span: &mut Vec<u16>,
    candidates: &[u64],
    perp_rows: &[Vec<u64>],
    out: &mut Vec<Vec<u16>>,
    words: usize,
) {
    if basis.len() == target {
        let mut rows = basis.clone();
        echelon(&mut rows);
        out.push(rows);
        return;
    }
    for w in 0..words {
        let mut bits = candidates[w];
        while bits != 0 {
            let bit = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let x = (w * 64 + bit) as u16;
            // canonical growth: x must be the minimum of its coset x + span
            if span.iter().any(|&s| (x ^ s) < x) {
                continue;
            }
            // refine candidates: still singular, orthogonal to x, beyond x
            let mut next = vec![0u64; words];
            for i in 0..words {
                next[i] = candidates[i] & perp_rows[x as usize][i];
            }
            // remove the new span vectors and anything <= x
            let lo_w = x as usize / 64;
            for nw in next.iter_mut().take(lo_w) {
                *nw = 0;
            }
            next[lo_w] &= !((1u64 << (x % 64)) - 1) & !(1u64 << (x % 64));
            for &s in span.iter() {
                let v = x ^ s;
                next[v as usize / 64] &= !(1 << (v % 64));
            }
            basis.push(x);
            let added: Vec<u16> = span.iter().map(|&s| s ^ x).collect();
            span.extend(added);
            dfs(target, basis, span, &next, perp_rows, out, words);
            span.truncate(span.len() - (span.len() / 2));
            basis.pop();
        }
    }
}

/// Build the half-spin geometry of Q+(9, q). Only q = 2 is supported.
pub fn halfspin_d5(q: u32) -> Result<HalfSpinGeometry, CatalogError> {
    if q != 2 {
        return Err(CatalogError::BadParameter {
            name: "halfspin_d5".into(),
            detail: format!("only q = 2 is supported, got {q}"),
        });
    }
    let singular: Vec<u16> = (1..SPACE as u32)
        .map(|v| v as u16)
        .filter(|&v| quad(v) == 0)
        .collect();
    // perp_rows[v] = bit set of u with B(u, v) = 0
    let words = SPACE / 64;
    let mut perp_rows: Vec<Vec<u64>> = vec![vec![0u64; words]; SPACE];
    for v in 0..SPACE as u32 {
        let row = &mut perp_rows[v as usize];
        for u in 0..SPACE as u32 {
            if bilinear(u as u16, v as u16) == 0 {
                row[u as usize / 64] |= 1 << (u % 64);
            }
        }
    }

    let generators_all = enumerate_ts_subspaces(5, &singular, &perp_rows);
    if generators_all.len() != 4590 {
        return Err(CatalogError::Degenerate(format!(
            "expected 4590 generators of Q+(9,2), found {}",
            generators_all.len()
        )));
    }

    // family of the reference generator <e0, e2, e4, e6, e8>:
    // same family iff the intersection has odd dimension
    let reference: Vec<u16> = (0..DIM).step_by(2).map(|i| 1u16 << i).collect();
    let same_family = |basis: &Vec<u16>| -> bool {
        let mut rows: Vec<u16> = basis.clone();
        rows.extend(reference.iter().copied());
        echelon(&mut rows);
        let meet_dim = 10 - rows.len();
        meet_dim % 2 == 1
    };
    let generators: Vec<Vec<u16>> = generators_all.into_iter().filter(same_family).collect();
    if generators.len() != 2295 {
        return Err(CatalogError::Degenerate(format!(
            "expected 2295 generators in one family, found {}",
            generators.len()
        )));
    }
    // lines: group generators by their totally singular 3-subspaces. The
    // 155 rank-3 subspaces of F_2^5 are enumerated once as coordinate
    // patterns and mapped through each generator's basis.
    let f2 = crate::galois::Gf::new(2, 1).expect("GF(2)");
    let patterns: Vec<[u16; 3]> = crate::galois::pg_subspaces(&f2, 4, 2)
        .expect("3-subspaces of F_2^5")
        .iter()
        .map(|s| {
            let mut rows = [0u16; 3];
            for (r, row) in s.basis().iter().enumerate() {
                for (i, &c) in row.iter().enumerate() {
                    rows[r] |= (c as u16) << i;
                }
            }
            rows
        })
        .collect();
    let mut by_plane: FxHashMap<[u16; 3], Vec<u32>> = FxHashMap::default();
    for (gid, basis) in generators.iter().enumerate() {
        for pattern in &patterns {
            let mut rows: Vec<u16> = pattern
                .iter()
                .map(|&mask| {
                    let mut v = 0u16;
                    for (i, &b) in basis.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            v ^= b;
                        }
                    }
                    v
                })
                .collect();
            echelon(&mut rows);
            let key = [rows[0], rows[1], rows[2]];
            by_plane.entry(key).or_default().push(gid as u32);
        }
    }
    let mut lines: Vec<Vec<u32>> = Vec::new();
    for (_, mut members) in by_plane {
        debug_assert!(members.len() == 3, "three same-family generators per plane");
        if members.len() >= 2 {
            members.sort_unstable();
            members.dedup();
            lines.push(members);
        }
    }
    let geometry = IncidenceGeometry::build("halfspin_d5(2)", generators.len(), lines)
        .expect("half-spin lines are valid");
    Ok(HalfSpinGeometry {
        geometry,
        generators,
        singular_points: singular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadric_point_count() {
        let singular = (1..SPACE as u32).filter(|&v| quad(v as u16) == 0).count();
        assert_eq!(singular, 527, "Q+(9,2) has 527 points");
    }

    #[test]
    fn echelon_is_canonical() {
        let mut a = vec![0b11u16, 0b110];
        let mut b = vec![0b101u16, 0b110];
        echelon(&mut a);
        echelon(&mut b);
        assert_eq!(a, b, "same row space, same echelon form");
    }
}
