//! Arithmetic in F_q, F_{q^d} and F_q[t].

pub mod ext;
pub mod factor;
pub mod field;
pub mod irreducible;
pub mod poly;
pub mod zech;

pub use ext::{count_roots_in_residue_field, ExtField, ExtFieldElem};
pub use factor::{factor, factor_seeded, set_factor_seed, is_cube_free, is_irreducible, Factorization};
pub use field::{check_modulus, FieldElem};
pub use irreducible::{enumerate_irreducibles, irreducible_count, monic_from_rank, monic_rank};
pub use poly::{poly_gcd, Poly};
