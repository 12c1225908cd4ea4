pub mod catalog;
pub mod cohomology;
pub mod error;
pub mod gcs;
pub mod io;
pub mod lie;
pub mod matrix;
pub mod poly;
pub mod replay;
pub mod scalar;
pub mod search;
pub mod symbolic;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use poly::{Monomial, Polynomial, Var};
pub use scalar::{Gaussian, Rational};

pub type RationalMatrix = Matrix<Rational>;
pub type GaussianMatrix = Matrix<Gaussian>;
pub type PolyMatrix = Matrix<Polynomial>;
pub type FloatMatrix = Matrix<f64>;
