//! Primitive idempotents of B_n(ω) by the Jucys–Murphy recurrence and by
//! consecutive evaluation of the fusion function, with the symmetric-group
//! specialization and the algebraic checks that tie them together.

mod algfunc;
mod checks;
mod closed_forms;
mod idempotents;
mod series;

pub use algfunc::{evaluate_with_cancellation, kappa, rho, rho_at, AlgValuedRatFunc, Shift};
pub use checks::{
    verify_closed_forms, verify_exponent_constants, verify_fusion_matches_murphy,
    verify_idempotent_system, verify_lex_vs_chain, verify_rho_symbolic, verify_standard_constants,
    verify_symmetric_group, verify_ybe_points,
};
pub use closed_forms::{
    antisymmetrizer, antisymmetrizer_long, antisymmetrizer_short, classical_fusion, column_tableau,
    row_tableau, symmetric_group_fusion, symmetric_group_limit_check, symmetrizer,
    symmetrizer_long, symmetrizer_short, LimitCheck, SymFusion,
};
pub use idempotents::{
    fusion_element, fusion_idempotent, fusion_step, fusion_with_exponents,
    fusion_with_exponents_using, murphy_element, murphy_idempotent, Evaluation, IdempotentRecord,
    Method,
};
pub use series::{Chain, Lin};
