//! The hook space of the window family over `(21, 21, 321)`.
//!
//! Window hooks are affine in eight parameters and satisfy ten claw
//! relations, leaving five free hooks. Polynomials in the ℓ-variables are
//! pulled back to this five-variable ring ([`pullback`]), where the
//! symmetries of `g⋆`, its boundary data and its untwisted form are checked.

mod error;
pub mod hyperplane;
pub mod orbits;
pub mod quotient;
mod report;
pub mod symmetry;
pub mod untwist;
pub mod window;

pub use error::HookSpaceError;
pub use hyperplane::{
    boundary_datum, hyperplane_form, verify_all_hyperplanes, verify_boundary_equivariance, verify_boundary_figure,
    verify_hyperplane, CLAW_FLIP_FIGURE,
};
pub use orbits::{gstar_ell, orbit_sum, orbit_weight, orbits, Orbit};
pub use quotient::{pullback, pullback_sum, QuotientPoly};
pub use report::{all_passed, Check};
pub use symmetry::{verify_odd_vanishing, verify_sigma56_invariance};
pub use untwist::{untwist_to_x, verify_e_expansion, verify_nonnegativity};
pub use window::{hook_table, HookTable, WindowParams};
