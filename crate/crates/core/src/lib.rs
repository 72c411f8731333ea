//! Exact expansion of ordinary generating functions with polynomial coefficients.

pub mod binet;
pub mod catalog;
pub mod closed_forms;
pub mod error;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod series;
pub mod spec_doc;
pub mod surd;
pub mod transforms;
pub mod verify;

pub use catalog::{catalog_eval, catalog_lookup, catalog_names, gegenbauer_2f1_crosscheck, CatalogEntry, CatalogValue, Params};
pub use error::{Error, ParseError, Result};
pub use parse::parse_polynomial;
pub use poly::{x, Assignment, Monomial, Polynomial};
pub use rational::{ArithOp, Rational};
pub use series::{
    expand_general_rational, expand_s, expand_s_higher, expand_y, expand_y_higher, series_mul,
    series_pow_rational, series_reciprocal, series_square, FamilySpec, TruncatedSeries,
};
pub use spec_doc::SpecDocument;
pub use surd::SurdElement;
pub use verify::{run_suite, run_suites, Check, Status, Suite, VerifyOptions};
