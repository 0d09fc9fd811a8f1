//! Exact tensor representations: the Brauer algebra on `(C^N)^{⊗n}`, the
//! R-matrices, the evaluation image of the reflection algebra, and checks.

mod action;
mod checks;
mod dims;
mod matrix;
mod metric;
mod operators;

pub use action::{brauer_action, BrauerAction};
pub use checks::{
    check_brauer_action, check_embedding, check_f_relations, check_lemma_identities,
    check_pq_relations, check_projector_transport, check_prop_invco, check_prop_invco_at,
    check_prop_invcogl, check_prop_invcogl_at, check_r_matrix, check_reflection, expected_rank,
    scalar_ratio, verify_matrix_identities, yangian_rep_check, Samples,
};
pub use dims::{gl_dimension, o_dimension, sp_dimension};
pub use matrix::ExactMatrix;
pub use metric::{Metric, MetricKind};
pub use operators::*;
