//! `w_{n,k,m}` and `W_{n,k}(x)` by closed formula and by the fixed-`k` and
//! fixed-`n` three-term recurrences.

mod formula;
pub mod identities;
mod recurrence;

pub use formula::{catalan, check_symmetry, formula_triangle, narayana, w_formula, w_poly, SymmetryCheck, WPoly};
pub use recurrence::{
    fixed_k_family, fixed_k_rec_coeffs, fixed_n_family, fixed_n_max_k, fixed_n_rec_coeffs, rec_fixed_k_triangle,
    rec_fixed_n_triangle, reflection_factor, w_poly_rec_fixed_k, w_poly_rec_fixed_n, FixedKRecCoeffs, FixedNRecCoeffs,
    RecurrenceFamily,
};

use crate::dyck::{oracle_triangle_capped, CoeffTriangle, Provenance};
use crate::error::Result;

/// Builds the triangle for one `n` from the requested source. `cap` only
/// limits the oracle.
pub fn triangle(n: u32, source: Provenance, cap: u32) -> Result<CoeffTriangle> {
    match source {
        Provenance::Oracle => oracle_triangle_capped(n, cap),
        Provenance::Formula => formula_triangle(n),
        Provenance::RecFixedK => rec_fixed_k_triangle(n),
        Provenance::RecFixedN => rec_fixed_n_triangle(n),
    }
}
