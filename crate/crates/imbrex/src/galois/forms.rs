//! Quadratic, Hermitian and alternating forms on F_q^(n+1), and the
//! enumeration of their totally isotropic (singular) subspaces.
//!
//! These are the raw material for the classical generalized quadrangles:
//! W(q) from an alternating form, Q(4,q) and Q-(5,q) from quadratic forms,
//! H(3,q^2) and H(4,q^2) from Hermitian forms.

use super::field::Gf;
use super::projective::{pg_points, pg_subspaces, ProjSubspace, Vector};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormError {
    #[error("form is degenerate; radical contains {0:?}")]
    Degenerate(Vector),
    #[error("hermitian form requires a field with an involutory automorphism")]
    NoConjugation,
    #[error("gram matrix must be {want}x{want}, got {got} rows")]
    BadGram { want: usize, got: usize },
    #[error("dimension {dim} out of range for PG({n}, q)")]
    DimOutOfRange { dim: i32, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    /// Q(v) read off an upper-triangular Gram matrix.
    Quadratic,
    /// H(u, v) = sum_ij u_i conj(v_j) g_ij with g conjugate-symmetric.
    Hermitian,
    /// Antisymmetric bilinear form with zero diagonal.
    Alternating,
}

/// A form together with its Gram matrix over a fixed field.
#[derive(Debug, Clone)]
pub struct SesquilinearForm {
    pub kind: FormKind,
    pub gram: Vec<Vector>,
}

impl SesquilinearForm {
    pub fn new(kind: FormKind, gram: Vec<Vector>) -> SesquilinearForm {
        SesquilinearForm { kind, gram }
    }

    fn dim(&self) -> usize {
        self.gram.len()
    }

    /// Evaluate the quadratic form at `v` (Quadratic kind only).
    pub fn eval_quadratic(&self, f: &Gf, v: &[u32]) -> u32 {
        let mut acc = 0;
        for i in 0..self.dim() {
            if v[i] == 0 {
                continue;
            }
            for j in i..self.dim() {
                if self.gram[i][j] != 0 && v[j] != 0 {
                    acc = f.add(acc, f.mul(self.gram[i][j], f.mul(v[i], v[j])));
                }
            }
        }
        acc
    }

    /// The bilinear pairing: polar form for Quadratic kind, the form
    /// itself for Alternating, and the sesquilinear value for Hermitian.
    #[allow(clippy::needless_range_loop)]
    pub fn pair(&self, f: &Gf, u: &[u32], v: &[u32]) -> u32 {
        match self.kind {
            FormKind::Quadratic => {
                // B(u,v) = Q(u+v) - Q(u) - Q(v)
                let sum: Vector = u.iter().zip(v).map(|(&a, &b)| f.add(a, b)).collect();
                let mut acc = self.eval_quadratic(f, &sum);
                acc = f.sub(acc, self.eval_quadratic(f, u));
                f.sub(acc, self.eval_quadratic(f, v))
            }
            FormKind::Alternating => {
                let mut acc = 0;
                for i in 0..self.dim() {
                    if u[i] == 0 {
                        continue;
                    }
                    for j in 0..self.dim() {
                        if self.gram[i][j] != 0 && v[j] != 0 {
                            acc = f.add(acc, f.mul(self.gram[i][j], f.mul(u[i], v[j])));
                        }
                    }
                }
                acc
            }
            FormKind::Hermitian => {
                let mut acc = 0;
                for i in 0..self.dim() {
                    if u[i] == 0 {
                        continue;
                    }
                    for j in 0..self.dim() {
                        if self.gram[i][j] != 0 && v[j] != 0 {
                            let cv = f.conj(v[j]).expect("hermitian field has conj");
                            acc = f.add(acc, f.mul(self.gram[i][j], f.mul(u[i], cv)));
                        }
                    }
                }
                acc
            }
        }
    }

    /// A point is isotropic (singular) when it vanishes on the form.
    pub fn is_isotropic_point(&self, f: &Gf, v: &[u32]) -> bool {
        match self.kind {
            FormKind::Quadratic => self.eval_quadratic(f, v) == 0,
            FormKind::Alternating => true,
            FormKind::Hermitian => self.pair(f, v, v) == 0,
        }
    }

    /// Totally isotropic: every vector of the subspace vanishes and all
    /// basis pairs are orthogonal. Checking the basis suffices.
    pub fn is_totally_isotropic(&self, f: &Gf, s: &ProjSubspace) -> bool {
        let basis = s.basis();
        for (i, u) in basis.iter().enumerate() {
            if !self.is_isotropic_point(f, u) {
                return false;
            }
            for v in &basis[i + 1..] {
                if self.pair(f, u, v) != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// A nonzero vector orthogonal to everything (and singular, for
    /// quadratic forms), if one exists.
    pub fn radical_vector(&self, f: &Gf, n: usize) -> Option<Vector> {
        pg_points(f, n).into_iter().find(|p| {
            let orthogonal = (0..=n).all(|i| {
                let mut e = vec![0u32; n + 1];
                e[i] = 1;
                self.pair(f, p, &e) == 0
            });
            orthogonal && self.is_isotropic_point(f, p)
        })
    }
}

/// All totally isotropic subspaces of projective dimension `dim`.
///
/// Errors when the form is degenerate on PG(n, q), carrying a radical
/// vector as witness.
pub fn isotropic_subspaces(
    form: &SesquilinearForm,
    f: &Gf,
    n: usize,
    dim: i32,
) -> Result<Vec<ProjSubspace>, FormError> {
    if form.gram.len() != n + 1 {
        return Err(FormError::BadGram {
            want: n + 1,
            got: form.gram.len(),
        });
    }
    if form.kind == FormKind::Hermitian && !f.has_conj() {
        return Err(FormError::NoConjugation);
    }
    if let Some(rad) = form.radical_vector(f, n) {
        return Err(FormError::Degenerate(rad));
    }
    let subs = pg_subspaces(f, n, dim).map_err(|_| FormError::DimOutOfRange { dim, n })?;
    Ok(subs
        .into_iter()
        .filter(|s| form.is_totally_isotropic(f, s))
        .collect())
}

/// Gram matrix helpers for the standard forms used by the catalog.
pub mod standard {
    use super::*;

    fn zero(n: usize) -> Vec<Vector> {
        vec![vec![0; n]; n]
    }

    /// Alternating form x0 y1 - x1 y0 + x2 y3 - x3 y2 on F_q^4 (for W(q)).
    pub fn symplectic4(f: &Gf) -> SesquilinearForm {
        let mut g = zero(4);
        g[0][1] = 1;
        g[1][0] = f.neg(1);
        g[2][3] = 1;
        g[3][2] = f.neg(1);
        SesquilinearForm::new(FormKind::Alternating, g)
    }

    /// Parabolic quadric Q(4,q): x0^2 + x1 x2 + x3 x4.
    pub fn parabolic5(_f: &Gf) -> SesquilinearForm {
        let mut g = zero(5);
        g[0][0] = 1;
        g[1][2] = 1;
        g[3][4] = 1;
        SesquilinearForm::new(FormKind::Quadratic, g)
    }

    /// Hyperbolic quadric Q+(2m-1,q): x0 x1 + x2 x3 + ...
    pub fn hyperbolic(dim_v: usize) -> SesquilinearForm {
        assert!(dim_v.is_multiple_of(2));
        let mut g = zero(dim_v);
        for i in (0..dim_v).step_by(2) {
            g[i][i + 1] = 1;
        }
        SesquilinearForm::new(FormKind::Quadratic, g)
    }

    /// Elliptic quadric Q-(5,q): x0 x1 + x2 x3 + x4^2 + x4 x5 + c x5^2
    /// with t^2 + t + c irreducible over GF(q).
    pub fn elliptic6(f: &Gf) -> SesquilinearForm {
        let c = f
            .elements()
            .find(|&c| f.elements().all(|t| f.add(f.add(f.mul(t, t), t), c) != 0))
            .expect("an irreducible t^2 + t + c exists over every finite field");
        let mut g = zero(6);
        g[0][1] = 1;
        g[2][3] = 1;
        g[4][4] = 1;
        g[4][5] = 1;
        g[5][5] = c;
        SesquilinearForm::new(FormKind::Quadratic, g)
    }

    /// Hermitian form sum x_i conj(y_i) on F_{q^2}^(n+1).
    pub fn hermitian(n: usize) -> SesquilinearForm {
        let mut g = zero(n + 1);
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 1;
        }
        SesquilinearForm::new(FormKind::Hermitian, g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symplectic_lines_of_w2() {
        let f = Gf::new(2, 1).unwrap();
        let form = standard::symplectic4(&f);
        let pts = isotropic_subspaces(&form, &f, 3, 0).unwrap();
        assert_eq!(pts.len(), 15, "every point of PG(3,2) is isotropic");
        let lines = isotropic_subspaces(&form, &f, 3, 1).unwrap();
        assert_eq!(lines.len(), 15, "W(2) has 15 totally isotropic lines");
    }

    #[test]
    fn elliptic_quadric_q5_2() {
        let f = Gf::new(2, 1).unwrap();
        let form = standard::elliptic6(&f);
        let pts = isotropic_subspaces(&form, &f, 5, 0).unwrap();
        assert_eq!(pts.len(), 27);
        let lines = isotropic_subspaces(&form, &f, 5, 1).unwrap();
        assert_eq!(lines.len(), 45);
        // elliptic: no singular planes
        assert_eq!(isotropic_subspaces(&form, &f, 5, 2).unwrap().len(), 0);
    }

    #[test]
    fn hermitian_varieties_over_gf4() {
        let f = Gf::new(2, 2).unwrap();
        let h4 = standard::hermitian(4);
        assert_eq!(isotropic_subspaces(&h4, &f, 4, 0).unwrap().len(), 165);
        assert_eq!(isotropic_subspaces(&h4, &f, 4, 1).unwrap().len(), 297);
        let h3 = standard::hermitian(3);
        assert_eq!(isotropic_subspaces(&h3, &f, 3, 0).unwrap().len(), 45);
        assert_eq!(isotropic_subspaces(&h3, &f, 3, 1).unwrap().len(), 27);
    }

    #[test]
    fn parabolic_q4_2() {
        let f = Gf::new(2, 1).unwrap();
        let form = standard::parabolic5(&f);
        assert_eq!(isotropic_subspaces(&form, &f, 4, 0).unwrap().len(), 15);
        assert_eq!(isotropic_subspaces(&form, &f, 4, 1).unwrap().len(), 15);
    }

    #[test]
    fn degenerate_form_reports_radical() {
        let f = Gf::new(2, 1).unwrap();
        // x0 x1 on F_2^3: e2 is in the radical.
        let mut g = vec![vec![0; 3]; 3];
        g[0][1] = 1;
        let form = SesquilinearForm::new(FormKind::Quadratic, g);
        match isotropic_subspaces(&form, &f, 2, 0) {
            Err(FormError::Degenerate(rad)) => assert_eq!(rad, vec![0, 0, 1]),
            other => panic!("expected degenerate, got {other:?}"),
        }
    }

    #[test]
    fn hyperbolic_q3_counts() {
        let f = Gf::new(2, 1).unwrap();
        let form = standard::hyperbolic(4);
        assert_eq!(isotropic_subspaces(&form, &f, 3, 0).unwrap().len(), 9);
        assert_eq!(isotropic_subspaces(&form, &f, 3, 1).unwrap().len(), 6);
    }
}
