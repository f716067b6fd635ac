//! Constructions of the named geometries, abstract and coordinatized,
//! with expected statistics checked against independent closed forms.

pub mod classical;
pub mod embedded;
pub mod halfspin;
pub mod mm_sets;
pub mod products;

use crate::galois::{FieldError, FormError, Gf};
use crate::geometry::IncidenceGeometry;
use embedded::EmbeddedQuadrangle;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {name:?}; supported: {supported}")]
    UnknownEntry { name: String, supported: String },
    #[error("bad parameter for {name}: {detail}")]
    BadParameter { name: String, detail: String },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error("construction degenerate: {0}")]
    Degenerate(String),
    #[error("built geometry for {name} has {got} {what}, expected {want}")]
    StatisticsMismatch {
        name: String,
        what: &'static str,
        got: usize,
        want: usize,
    },
}

/// Parameters accepted by the catalog builders; not every entry uses all.
#[derive(Debug, Clone, Copy, Default)]
pub struct Params {
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub p: Option<u32>,
    pub r: Option<u32>,
    pub q: Option<u32>,
}

/// (entry, parameters) pairs for error messages and the CLI.
pub const SUPPORTED: &[(&str, &str)] = &[
    ("grid", "--m M --n N (both >= 2)"),
    ("w", "--q Q in {2,3,4}"),
    ("q4", "--q Q in {2,3,4}"),
    ("qminus5", "--q Q in {2,3}"),
    ("h3", "--q Q in {4,9,16} (field order, a square)"),
    ("h4", "--q Q in {4,9} (field order, a square)"),
    ("grassmann", "--n N in 3..=6 --q Q in {2,3}"),
    ("segre", "--p P --r R in 1..=3 --q Q in {2,3,4}"),
    ("halfspin_d5", "--q 2"),
    ("imbrex-q4", "--q Q in {2,3,4}"),
    ("imbrex-qminus5", "--q Q in {2,3}"),
    ("imbrex-h3", "--q Q in {4,9,16}"),
    ("imbrex-h4", "--q Q in {4,9}"),
];

pub fn supported_list() -> String {
    SUPPORTED
        .iter()
        .map(|(n, p)| format!("{n} ({p})"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn unknown(name: &str) -> CatalogError {
    CatalogError::UnknownEntry {
        name: name.to_string(),
        supported: supported_list(),
    }
}

/// Canonical entry name: lowercase, hyphens as underscores.
fn canon(name: &str) -> String {
    name.trim().to_lowercase().replace('-', "_")
}

fn need(params: Option<u32>, name: &str, what: &str) -> Result<u32, CatalogError> {
    params.ok_or_else(|| CatalogError::BadParameter {
        name: name.into(),
        detail: format!("missing parameter {what}"),
    })
}

fn bounded(v: u32, allowed: &[u32], name: &str, what: &str) -> Result<u32, CatalogError> {
    if allowed.contains(&v) {
        Ok(v)
    } else {
        Err(CatalogError::BadParameter {
            name: name.into(),
            detail: format!("{what} = {v} not in {allowed:?}"),
        })
    }
}

/// GF(q) for a prime power q.
pub fn field_from_order(q: u32) -> Result<Gf, CatalogError> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).ok_or_else(|| {
        CatalogError::BadParameter {
            name: "field".into(),
            detail: format!("order {q} is not a prime power"),
        }
    })?;
    let mut k = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(CatalogError::BadParameter {
            name: "field".into(),
            detail: format!("order {q} is not a prime power"),
        });
    }
    Ok(Gf::new(p, k)?)
}

fn square_field(q: u32, name: &str) -> Result<Gf, CatalogError> {
    let f = field_from_order(q)?;
    if f.degree() % 2 != 0 {
        return Err(CatalogError::BadParameter {
            name: name.into(),
            detail: format!("field order {q} is not a square of a prime power"),
        });
    }
    Ok(f)
}

fn isqrt(n: usize) -> usize {
    let mut r = 0;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Closed-form expected statistics, computed independently of the
/// builders, used as the oracle for every catalog entry.
pub fn expected_stats(name: &str, params: &Params) -> Option<(usize, usize)> {
    let name = canon(name);
    let q = params.q.unwrap_or(0) as usize;
    match name.as_str() {
        "grid" => {
            let m = params.m? as usize;
            let n = params.n? as usize;
            Some((m * n, m + n))
        }
        // GQ of order (s,t): (s+1)(st+1) points, (t+1)(st+1) lines
        "w" | "q4" => Some(((q + 1) * (q * q + 1), (q + 1) * (q * q + 1))),
        "qminus5" => Some(((q + 1) * (q * q * q + 1), (q * q + 1) * (q * q * q + 1))),
        "h3" => {
            // order (q2, qb) with q2 the field order, qb its square root
            let qb = isqrt(q);
            Some(((q + 1) * (qb * q + 1), (qb + 1) * (qb * q + 1)))
        }
        "h4" => {
            // order (q2, qb^3)
            let qb = isqrt(q);
            let st = q * qb * q;
            Some(((q + 1) * (st + 1), (qb * q + 1) * (st + 1)))
        }
        "grassmann" => {
            let n = params.n?;
            let q = q as u64;
            let points = crate::galois::gaussian_binomial(n + 1, 2, q) as usize;
            let planes = crate::galois::gaussian_binomial(n + 1, 3, q) as usize;
            let per_plane = ((q * q * q - 1) / (q - 1)) as usize;
            Some((points, planes * per_plane))
        }
        "segre" => {
            let a = params.p?;
            let b = params.r?;
            let q = q as u64;
            let theta = |k: u32| ((q.pow(k + 1) - 1) / (q - 1)) as usize;
            let lines = |k: u32| crate::galois::gaussian_binomial(k + 1, 2, q) as usize;
            Some((
                theta(a) * theta(b),
                theta(a) * lines(b) + lines(a) * theta(b),
            ))
        }
        "halfspin_d5" if q == 2 => Some((2295, 118575)),
        "imbrex_q4" if q == 2 => Some((15, 45)),
        "imbrex_qminus5" if q == 2 => Some((45, 270)),
        "imbrex_h3" if q == 4 => Some((27, 45)),
        "imbrex_h4" if q == 4 => Some((297, 1980)),
        _ => None,
    }
}

fn check_stats(
    g: IncidenceGeometry,
    name: &str,
    params: &Params,
) -> Result<IncidenceGeometry, CatalogError> {
    if let Some((points, lines)) = expected_stats(name, params) {
        if g.point_count() != points {
            return Err(CatalogError::StatisticsMismatch {
                name: name.into(),
                what: "points",
                got: g.point_count(),
                want: points,
            });
        }
        if g.line_count() != lines {
            return Err(CatalogError::StatisticsMismatch {
                name: name.into(),
                what: "lines",
                got: g.line_count(),
                want: lines,
            });
        }
    }
    Ok(g)
}

/// Build a named abstract geometry.
pub fn build(name: &str, params: &Params) -> Result<IncidenceGeometry, CatalogError> {
    let cname = canon(name);
    let g = match cname.as_str() {
        "grid" => {
            let m = need(params.m, "grid", "--m")? as usize;
            let n = need(params.n, "grid", "--n")? as usize;
            classical::grid(m, n)?
        }
        "w" => {
            let q = bounded(need(params.q, "w", "--q")?, &[2, 3, 4], "w", "q")?;
            classical::symplectic_w(field_from_order(q)?)?.geometry
        }
        "q4" => {
            let q = bounded(need(params.q, "q4", "--q")?, &[2, 3, 4], "q4", "q")?;
            classical::parabolic_q4(field_from_order(q)?)?.geometry
        }
        "qminus5" => {
            let q = bounded(need(params.q, "qminus5", "--q")?, &[2, 3], "qminus5", "q")?;
            classical::elliptic_q5(field_from_order(q)?)?.geometry
        }
        "h3" => {
            let q = bounded(need(params.q, "h3", "--q")?, &[4, 9, 16], "h3", "q")?;
            classical::hermitian_h3(square_field(q, "h3")?)?.geometry
        }
        "h4" => {
            let q = bounded(need(params.q, "h4", "--q")?, &[4, 9], "h4", "q")?;
            classical::hermitian_h4(square_field(q, "h4")?)?.geometry
        }
        "grassmann" => {
            let n = need(params.n, "grassmann", "--n")?;
            let q = bounded(need(params.q, "grassmann", "--q")?, &[2, 3], "grassmann", "q")?;
            if !(3..=6).contains(&n) {
                return Err(CatalogError::BadParameter {
                    name: "grassmann".into(),
                    detail: format!("n = {n} not in 3..=6"),
                });
            }
            products::grassmann(n as usize, field_from_order(q)?)?.geometry
        }
        "segre" => {
            let a = need(params.p, "segre", "--p")?;
            let b = need(params.r, "segre", "--r")?;
            let q = bounded(need(params.q, "segre", "--q")?, &[2, 3, 4], "segre", "q")?;
            if !(1..=3).contains(&a) || !(1..=3).contains(&b) {
                return Err(CatalogError::BadParameter {
                    name: "segre".into(),
                    detail: format!("factor dimensions ({a},{b}) not in 1..=3"),
                });
            }
            products::segre(a as usize, b as usize, field_from_order(q)?)?.geometry
        }
        "halfspin_d5" => {
            let q = need(params.q, "halfspin_d5", "--q")?;
            halfspin::halfspin_d5(q)?.geometry
        }
        "imbrex_q4" | "imbrex_qminus5" | "imbrex_h3" | "imbrex_h4" => {
            let base = cname.strip_prefix("imbrex_").expect("prefix present");
            let omega = build_embedded_quadrangle(base, params)?;
            embedded::imbrex_from_embedded_quadrangle(&omega)?
        }
        _ => return Err(unknown(name)),
    };
    check_stats(g, &cname, params)
}

/// Build a quadrangle together with its projective coordinatization.
pub fn build_embedded_quadrangle(
    name: &str,
    params: &Params,
) -> Result<EmbeddedQuadrangle, CatalogError> {
    let cname = canon(name);
    let fg = match cname.as_str() {
        "q4" => {
            let q = bounded(need(params.q, "q4", "--q")?, &[2, 3, 4], "q4", "q")?;
            classical::parabolic_q4(field_from_order(q)?)?
        }
        "qminus5" => {
            let q = bounded(need(params.q, "qminus5", "--q")?, &[2, 3], "qminus5", "q")?;
            classical::elliptic_q5(field_from_order(q)?)?
        }
        "h3" => {
            let q = bounded(need(params.q, "h3", "--q")?, &[4, 9, 16], "h3", "q")?;
            classical::hermitian_h3(square_field(q, "h3")?)?
        }
        "h4" => {
            let q = bounded(need(params.q, "h4", "--q")?, &[4, 9], "h4", "q")?;
            classical::hermitian_h4(square_field(q, "h4")?)?
        }
        _ => {
            return Err(CatalogError::BadParameter {
                name: cname,
                detail: "embedded quadrangles exist for q4, qminus5, h3, h4".into(),
            })
        }
    };
    Ok(fg.into())
}

/// Build a coordinatized Mazzocca-Melone set for the entries that have
/// one: segre, grassmann (Pluecker), halfspin_d5 (spinor).
pub fn build_embedded_mm(
    name: &str,
    params: &Params,
) -> Result<crate::mm::EmbeddedMmSet, CatalogError> {
    let cname = canon(name);
    match cname.as_str() {
        "segre" => {
            let a = need(params.p, "segre", "--p")?;
            let b = need(params.r, "segre", "--r")?;
            let q = bounded(need(params.q, "segre", "--q")?, &[2, 3, 4], "segre", "q")?;
            mm_sets::segre_embedded(a as usize, b as usize, field_from_order(q)?)
        }
        "grassmann" => {
            let n = need(params.n, "grassmann", "--n")?;
            let q = bounded(need(params.q, "grassmann", "--q")?, &[2, 3], "grassmann", "q")?;
            if !(4..=6).contains(&n) {
                return Err(CatalogError::BadParameter {
                    name: "grassmann".into(),
                    detail: format!("the embedded family needs n in 4..=6, got {n}"),
                });
            }
            mm_sets::pluecker_embedded(n as usize, field_from_order(q)?)
        }
        "halfspin_d5" => {
            let q = need(params.q, "halfspin_d5", "--q")?;
            mm_sets::halfspin_embedded(q)
        }
        _ => Err(CatalogError::BadParameter {
            name: cname,
            detail: "embedded sets exist for segre, grassmann, halfspin_d5".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_checks_statistics() {
        let g = build("w", &Params { q: Some(2), ..Default::default() }).unwrap();
        assert_eq!(g.point_count(), 15);
        let g = build(
            "imbrex-h4",
            &Params { q: Some(4), ..Default::default() },
        )
        .unwrap();
        assert_eq!((g.point_count(), g.line_count()), (297, 1980));
    }

    #[test]
    fn unknown_entries_list_support() {
        match build("nosuch", &Params::default()) {
            Err(CatalogError::UnknownEntry { supported, .. }) => {
                assert!(supported.contains("grassmann"));
            }
            other => panic!("expected unknown entry, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_parameters_rejected() {
        assert!(build("w", &Params { q: Some(5), ..Default::default() }).is_err());
        assert!(build("h4", &Params { q: Some(16), ..Default::default() }).is_err());
        assert!(build("h3", &Params { q: Some(8), ..Default::default() }).is_err());
        assert!(build("grassmann", &Params { n: Some(9), q: Some(2), ..Default::default() }).is_err());
    }

    #[test]
    fn imbrex_qminus5_statistics() {
        let g = build("imbrex-qminus5", &Params { q: Some(2), ..Default::default() }).unwrap();
        assert_eq!((g.point_count(), g.line_count()), (45, 270));
    }
}
