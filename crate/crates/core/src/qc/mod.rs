//! Quasi-cyclic structure: the module map φ, block shifts, CRT decomposition,
//! the cubic construction and its inverse, and weight-enumerator templates.

mod crt;
mod cubic;
mod shape;
mod templates;

pub use crt::{
    crt_decompose, verify_decomposition_selfdual, ComponentCode, ComponentKind, CrtComponents,
};
pub use cubic::{
    construct_cubic, cubic_selfdual_check, decompose_cubic, distance_bound, distance_bound_from,
    CubicComponents,
};
pub use shape::{
    check_quasi_cyclic, hermitian_ip_module, phi_inverse, phi_map, prop22_check, shift_by_block,
    ModuleVector, QcShape,
};
pub use templates::{
    builtin_templates, extract_parameter, Extraction, TemplateMatch, TemplateTerm, WenumTemplate,
};
