//! Component databases, exhaustive small-length classification and the
//! sampling search for cubic self-dual codes.

mod catalog;
mod classify;
mod db;
mod enumerate;
mod pipeline;
mod pool;
mod report;

pub use catalog::{Catalog, CatalogMeta, CodeRecord, Inserted, Provenance};
pub use classify::{classify_cubic, Census, ClassRep, ClassifyOptions};
pub use db::{load_component_db, parse_component_db, ComponentDb};
pub use enumerate::{
    binary_selfdual_mass, enumerate_binary, enumerate_quaternary, enumerate_selfdual,
    quaternary_selfdual_mass, Field, SelfDualList, DEFAULT_MAX_N_GF2, DEFAULT_MAX_N_GF4,
};
pub use pipeline::{replay, run_search, SearchConfig};
pub use report::{catalog_report, compress, published_aut_orders, published_params};
