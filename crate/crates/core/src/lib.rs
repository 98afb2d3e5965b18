//! Exact computations with the affine Hecke algebra of type B₂ with unequal
//! parameters: Bernstein normal form, principal series and induced modules,
//! irreducibility and calibration tests, composition factors, and the
//! catalog of explicit representations they are matched against.
//!
//! Everything is generic over an exact [`Field`]; the aliases below fix the
//! scalar to the Gaussian rationals, which contain every specialization used.

pub mod analysis;
pub mod catalog;
pub mod driver;
pub mod error;
pub mod field;
pub mod gaussian;
pub mod hecke;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod weyl;

pub use error::{Error, Result};
pub use field::Field;
pub use gaussian::GaussianRational;

/// The default scalar field `ℚ(i)`.
pub type Q = GaussianRational;
pub type QMatrix = linalg::Matrix<Q>;
pub type QParameters = hecke::Parameters<Q>;
pub type QModule = module::HModule<Q>;
pub type QCharacter = module::Character<Q>;
pub type QHeckeElement = hecke::HeckeElement<Q>;
pub type QCatalog = catalog::Catalog<Q>;
