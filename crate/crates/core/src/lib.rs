//! Exact structure-constant computations for Lie superalgebras, coboundary Lie
//! super-bialgebras and classical r-matrices, with a hard-coded catalog for osp(2|2)
//! and osp(1|2)+u(1).
//!
//! Everything is generic over [`Scalar`]; the catalog and verification layers use
//! exact rationals through the `Q*` aliases below.

pub mod autos;
pub mod bialgebra;
pub mod catalog;
pub mod cybe;
pub mod error;
pub mod expr;
pub mod linsolve;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod suite;
pub mod superkernel;

pub use num_rational::BigRational;

pub type Rational = BigRational;
pub type QAlgebra = superkernel::SuperAlgebra<Rational>;
pub type QRMatrix = bialgebra::RMatrix<Rational>;
pub type QCobracket = bialgebra::Cobracket<Rational>;
pub type QMatrix = linsolve::Matrix<Rational>;
pub type QTensor3 = cybe::Tensor3<Rational>;
pub type QBasisChange = autos::BasisChange<Rational>;
pub type QAutoParams = autos::AutoParams<Rational>;

pub use error::{Error, Result};
pub use scalar::Scalar;
