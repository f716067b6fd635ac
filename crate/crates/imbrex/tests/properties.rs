//! Property suites: canonical-form idempotence, JSON round trips, and the
//! perp Galois connection under arbitrary line subsets.

mod common;

use common::{build, params_q};
use imbrex::galois::{Gf, ProjSubspace};
use imbrex::geometry::IncidenceGeometry;
use imbrex::gq::GqView;
use imbrex::json::{parse_input, GeometryFile, InputFile};
use proptest::prelude::*;

proptest! {
    /// Geometry files round-trip through the canonical JSON form and the
    /// canonical form is a fixed point.
    #[test]
    fn geometry_json_roundtrip(raw in prop::collection::vec(
        prop::collection::vec(0u32..12, 2..5), 1..20))
    {
        let Ok(g) = IncidenceGeometry::build("rt", 12, raw) else {
            // a line collapsed below two distinct points: rejected input
            return Ok(());
        };
        let text = GeometryFile::of(&g).to_canonical_string();
        let InputFile::Geometry(f) = parse_input(&text).unwrap() else { panic!() };
        let back = f.into_geometry().unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(GeometryFile::of(&back).to_canonical_string(), text);
    }

    /// Re-canonicalizing a canonical subspace is the identity, and random
    /// member combinations stay inside.
    #[test]
    fn subspace_canonical_form_is_idempotent(
        rows in prop::collection::vec(prop::collection::vec(0u32..3, 5), 1..4),
        coeffs in prop::collection::vec(0u32..3, 4))
    {
        let f = Gf::new(3, 1).unwrap();
        let s = ProjSubspace::from_vectors(&f, 4, &rows);
        let again = ProjSubspace::from_vectors(&f, 4, s.basis());
        prop_assert_eq!(&again, &s);
        if s.rank() > 0 {
            let mut v = vec![0u32; 5];
            let mut nonzero = false;
            for (i, row) in s.basis().iter().enumerate() {
                let c = coeffs[i.min(coeffs.len() - 1)];
                if c != 0 {
                    nonzero = true;
                    for (j, &x) in row.iter().enumerate() {
                        v[j] = f.add(v[j], f.mul(c, x));
                    }
                }
            }
            if nonzero {
                prop_assert!(s.contains_vector(&f, &v));
            }
        }
    }

    /// Galois connection of the perp operator in W(2): antitone, and every
    /// line set sits inside its double perp.
    #[test]
    fn perp_galois_connection(mask in 1u32..(1 << 15), extra in 0u32..15) {
        let w2 = build("w", &params_q(2));
        let view = GqView::new(w2);
        let t: Vec<u32> = (0..15).filter(|&i| mask >> i & 1 == 1).collect();
        let mut t2 = t.clone();
        if !t2.contains(&extra) {
            t2.push(extra);
        }
        let p1 = view.perp(&t).unwrap();
        let p2 = view.perp(&t2).unwrap();
        prop_assert!(p2.is_subset(&p1), "perp is antitone");
        let dp = view.double_perp(&t).unwrap();
        prop_assert!(t.iter().all(|&l| dp.contains(l)));
    }
}
