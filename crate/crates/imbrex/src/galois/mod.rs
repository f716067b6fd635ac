//! Finite fields, projective spaces over them, and classical forms.

pub mod field;
pub mod forms;
pub mod projective;

pub use field::{field_op, FieldError, FieldOp, Gf};
pub use forms::{isotropic_subspaces, FormError, FormKind, SesquilinearForm};
pub use projective::{
    gaussian_binomial, normalize_point, pg_points, pg_subspaces, rref, ProjError, ProjSubspace,
    Vector,
};
