//! The Brauer algebra B_n(ω): diagrams, sparse elements and distinguished elements.

pub mod diagram;
pub mod element;
pub mod generators;
pub(crate) mod kernel;

pub use diagram::{diagram_mul, enumerate_diagrams, BrauerDiagram};
pub use element::BrauerElement;
pub use generators::{
    check_presentation, eps_ij, first_content, gen_eps, gen_s, jucys_murphy,
    presentation_relations, project_symmetric_group, s_ij, RelationCheck, RelationFamily,
    SymGroupElement,
};
pub use kernel::PolyElement;
