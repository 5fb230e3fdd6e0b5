//! Stanley diagrams and sums.
//!
//! A Stanley diagram picks an upper or lower hook for every box of a triple
//! `(μ, ν, λ)`; a Stanley sum is an integer combination of diagrams. The root
//! triple `(21, 21, 321)` gets a compact ten-box encoding ([`RootDiagram`])
//! together with the canonical 26-term rule [`build_gstar`], K-transforms,
//! kernel sums and the ℓ-basis expansion.

mod diagram;
mod error;
mod eval;
mod kernel;
mod ktransform;
mod root;
mod sum;

pub use diagram::{Diagram, HookChoice, StanleyDiagram};
pub use error::StanleyError;
pub use eval::{
    evaluate, evaluate_poly, evaluate_virtual, HookContext, HookTable, TripleHooks,
    VirtualHookContext,
};
pub use kernel::{claw_form, formal_product, kernel_sum, LinearHookForm};
pub use ktransform::{
    change_reference, ell_expansion, ell_var, ell_weights, gstar_weight, k_inverse, k_transform,
    KValues, BETA,
};
pub use root::{
    reference_x, s5_generators, BoxSet, FreeBox, Permutation5, RootDiagram, PETERSEN_EDGES,
};
pub use sum::{build_gstar, StanleySum};
