//! Petersen and Johnson graph machinery.
//!
//! The ground set `[6]` is `{0,..,5}`, matching the box labels of the root
//! triple; the paper's element `6` is `0` here (see [`Subset::from_paper`]).
//! The Petersen graph is the Kneser graph on 2-subsets of `{1,..,5}`, the
//! Johnson graph `J(6,3)` lives on all 3-subsets, and a mystic pentagon picks
//! one of the twelve embeddings of the first into the second.

mod error;
mod graph;
mod pentagon;
mod sets;
mod signed;

pub use error::PetJohnError;
pub use graph::{eigenvalue_multiplicity, Graph, JohnsonGraph, PetersenGraph};
pub use pentagon::{all_pentagons, embeddings, pentad_from_pentagon, Embedding, MysticPentagon, Pentad, Syntheme};
pub use sets::Subset;
pub use signed::{
    intertwiner_generators, match_appendix_labels, psi, s56, sigma56_on_ell, SignedPerm, SignedVertexMap,
    APPENDIX_LABELS,
};
