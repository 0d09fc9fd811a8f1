//! Exact construction of the primitive idempotents of the Brauer algebra
//! B_n(ω) by the Jucys–Murphy recurrence and by a fusion procedure, plus
//! exact tensor-representation checks of the associated R-matrix, reflection
//! equation and evaluation homomorphism identities.

pub mod brauer;
pub mod error;
pub mod fusion;
pub mod report;
pub mod sampling;
pub mod scalars;
pub mod tableau;
pub mod tensor;

pub use error::{Error, Result};
